//! Run the built-in exhaustive checks with custom limits.
//!
//! cargo run --release --example verify_suite -- 5

use aicrystal::verify::{run, Limits, Suite};

fn main() {
    let max_n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let report = run(Suite::All, &Limits { max_n, max_size: 4, max_len: 4 });
    for check in &report.checks {
        println!("{check}");
    }
    std::process::exit(if report.passed() { 0 } else { 1 });
}
