//! The gl_n crystal on SST_n(λ) as a DOT graph.
//!
//! cargo run --example gl_crystal_graph -- 3 2,1 | dot -Tsvg > gl.svg

use aicrystal::graph::CrystalGraph;
use aicrystal::tableau::enumerate_ssyt;
use aicrystal::{GlCrystal, Partition};

fn main() -> aicrystal::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let shape: Partition = args.next().unwrap_or_else(|| "2,1".into()).parse()?;

    let all = enumerate_ssyt(n, &shape);
    for t in &all {
        let strings: Vec<String> = (1..n).map(|i| format!("ε{i}={} φ{i}={}", t.eps(i), t.phi(i))).collect();
        eprintln!("{t}\twt={:?}\t{}", t.weight().coords(), strings.join(" "));
    }
    print!("{}", CrystalGraph::gl(&all).to_dot());
    Ok(())
}
