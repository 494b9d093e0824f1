//! Canonical singular AI-tableaux T_ρ and the singular elements of SST_n^AI(ρ).
//!
//! cargo run --example singular_elements -- 6

use aicrystal::ai::{singular_elements, t_rho};
use aicrystal::kmatrix::{enumerate_sst_ai, k1};
use aicrystal::{Partition, SoWeight};

fn main() -> aicrystal::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for rho in Partition::all_up_to(4, n as usize / 2) {
        let t = t_rho(n, &rho)?;
        let all = enumerate_sst_ai(n, &rho)?;
        let sing: Vec<String> = singular_elements(&all, &rho).iter().map(ToString::to_string).collect();
        let weights: Vec<String> = SoWeight::from_shape(n, &rho)?.iter().map(ToString::to_string).collect();
        println!(
            "ρ={rho:<8} T_ρ={t:<10} K_1 T_ρ={:<10} Sing={{{}}}  highest weights {}",
            k1(&t)?,
            sing.join(", "),
            weights.join(" and ")
        );
    }
    Ok(())
}
