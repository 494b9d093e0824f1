//! gl_n and AI characters, compared with so_n dimensions.
//!
//! cargo run --example characters

use aicrystal::ai::{ai_variable_names, ch_ai_integral};
use aicrystal::gl::{ch_gl, gl_variable_names};
use aicrystal::kmatrix::enumerate_sst_ai;
use aicrystal::tableau::enumerate_ssyt;
use aicrystal::Partition;

fn main() -> aicrystal::Result<()> {
    for n in [3u32, 4] {
        let box1 = enumerate_ssyt(n, &Partition::row(1));
        println!("n={n}  ch_gl(1) = {}", ch_gl(n, &box1).display_with(&gl_variable_names(n)));
        println!("n={n}  ch_AI(1) = {}", ch_ai_integral(n, &box1)?.display_with(&ai_variable_names(n)));
    }
    for n in 3..=5u32 {
        for rho in Partition::all_up_to(3, n as usize / 2) {
            let ai = enumerate_sst_ai(n, &rho)?;
            let ch = ch_ai_integral(n, &ai)?;
            println!("n={n} ρ={rho:<8} dim={:<4} ch = {}", ai.len(), ch.display_with(&ai_variable_names(n)));
        }
    }
    Ok(())
}
