//! The RS^AI correspondence step by step, and its inverse.
//!
//! cargo run --example rs_ai -- 4 1,1,4,2,1,1,1

use aicrystal::rsai::{ot_to_q, rs_ai, rs_ai_inverse, rs_ai_transcript};
use aicrystal::Word;

fn main() -> aicrystal::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let letters: Vec<u32> = args
        .next()
        .unwrap_or_else(|| "1,1,4,2,1,1,1".into())
        .split(',')
        .filter_map(|s| s.trim().parse().ok())
        .collect();
    let w = Word::new(n, letters)?;

    for s in rs_ai_transcript(&w)? {
        println!("k={} P={:<12} P^AI={:<8} Q^AI={}", s.k, s.p.to_string(), s.p_ai.to_string(), s.q);
    }
    let (p, ot) = rs_ai(&w)?;
    println!("oscillating tableau {ot}");
    println!("JSON {}", serde_json::to_string(&ot_to_q(&ot)?).expect("serialises"));
    let back = rs_ai_inverse(&p, &ot)?;
    println!("inverse {back} (round trip: {})", back == w);
    Ok(())
}
