//! The K-matrix operators: column complement, K_1 and standardization.
//!
//! cargo run --example kmatrix_std

use aicrystal::kmatrix::{enumerate_sst_ai, is_ai_tableau, k1, k_complement, std, std_steps};
use aicrystal::{Partition, Tableau};

fn main() -> aicrystal::Result<()> {
    println!("K^(2) of [1,3] in [1,4]: {:?}", k_complement(&[1, 3], 4)?);

    let t = Tableau::semistandard(4, vec![vec![2, 2], vec![3, 3]])?;
    let once = k1(&t)?;
    println!("T = {t}, AI: {}", is_ai_tableau(&t));
    println!("K_1 T = {once}, K_1 K_1 T = {}", k1(&once)?);
    println!("std T = {} after {} steps", std(&t)?, std_steps(&t)?);

    for n in [3u32, 4] {
        let col = Tableau::semistandard(n, vec![vec![1], vec![2]])?;
        println!("n={n}: std({col}) = {}", std(&col)?);
    }

    for (n, rho) in [(3u32, "2"), (4, "2,1")] {
        let rho: Partition = rho.parse()?;
        let listed: Vec<String> = enumerate_sst_ai(n, &rho)?.iter().map(ToString::to_string).collect();
        println!("SST_{n}^AI{rho} ({}): {}", listed.len(), listed.join(" "));
    }
    Ok(())
}
