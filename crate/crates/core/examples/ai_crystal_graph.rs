//! The AI-crystal structure induced on SST_n(λ), and the AI-crystal of
//! AI-tableaux SST_n^AI(ρ).
//!
//! cargo run --example ai_crystal_graph -- 4 2,1

use aicrystal::ai::ai_components;
use aicrystal::graph::CrystalGraph;
use aicrystal::kmatrix::enumerate_sst_ai;
use aicrystal::tableau::enumerate_ssyt;
use aicrystal::{AiCrystal, Partition};

fn main() -> aicrystal::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let shape: Partition = args.next().unwrap_or_else(|| "2,1".into()).parse()?;

    let all = enumerate_ssyt(n, &shape);
    let comps = ai_components(&all);
    let sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    eprintln!("SST_{n}{shape}: {} elements, AI-components of sizes {sizes:?}", all.len());
    for t in &all {
        let degs: Vec<u32> = (1..n).map(|i| t.deg(i)).collect();
        eprintln!("{t}\tdeg={degs:?}");
    }
    print!("{}", CrystalGraph::ai(&all).to_dot());

    if shape.len() <= n as usize / 2 {
        let ai = enumerate_sst_ai(n, &shape)?;
        eprintln!("SST_{n}^AI{shape}: {} elements, connected: {}", ai.len(), ai_components(&ai).len() == 1);
    }
    Ok(())
}
