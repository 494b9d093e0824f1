//! Decomposing SST_n^AI(ρ) ⊗ SST_n(1) by the insertion T ⊗ l ↦ std(T ← l).
//!
//! cargo run --example tensor_step -- 4

use aicrystal::rsai::tensor_step_decompose;
use aicrystal::{Partition, Sign};

fn main() -> aicrystal::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for rho in Partition::all_up_to(3, n as usize / 2) {
        let report = tensor_step_decompose(n, &rho)?;
        let parts: Vec<String> = report
            .components
            .iter()
            .map(|c| match c.sign {
                Sign::Zero => format!("{}[{}]", c.target, c.size),
                s => format!("{}{s}[{}]", c.target, c.size),
            })
            .collect();
        println!("ρ={rho:<8} ⊗ (1) = {}  matches prediction: {}", parts.join(" ⊕ "), report.matches);
    }
    Ok(())
}
