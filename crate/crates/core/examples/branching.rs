//! Branching SST_n(λ) from gl_n to so_n through RS^AI.
//!
//! cargo run --example branching -- 3 2,1

use aicrystal::kmatrix::enumerate_sst_ai;
use aicrystal::rsai::{branch, branch_fibers, t_lambda};
use aicrystal::tableau::enumerate_ssyt;
use aicrystal::Partition;

fn main() -> aicrystal::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let lm: Partition = args.next().unwrap_or_else(|| "2,1".into()).parse()?;

    println!("T(λ) = {}", t_lambda(&lm));
    for (ot, members) in branch_fibers(n, &lm)? {
        let pairs: Vec<String> = members.iter().map(|(t, p)| format!("{t}↦{p}")).collect();
        println!("{ot}: {}", pairs.join(" "));
    }
    let mut total = 0;
    for (rho, k) in branch(n, &lm)? {
        let dim = enumerate_sst_ai(n, &rho)?.len();
        total += k * dim;
        println!("[λ:{rho}] = {k}  (dim {dim})");
    }
    println!("sum {total} = |SST_{n}{lm}| {}", enumerate_ssyt(n, &lm).len());
    Ok(())
}
