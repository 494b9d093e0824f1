//! Tableaux, row insertion and the Robinson-Schensted correspondence.
//!
//! cargo run --example tableaux

use aicrystal::tableau::{enumerate_ssyt, p_symbol_tensor, rs, rs_inverse};
use aicrystal::{Partition, Tableau, Word};

fn main() -> aicrystal::Result<()> {
    let t = Tableau::semistandard(4, vec![vec![1, 2, 3, 3], vec![2, 3], vec![4]])?;
    println!("T = {t}, column reading {}", t.column_reading());
    for l in 1..=3 {
        println!("T <- {l} = {}", t.row_insert(l)?);
    }

    let w = Word::new(4, vec![4, 2, 3, 1, 3, 2])?;
    for k in 0..=w.len() {
        let (p, q) = rs(&w.prefix(k));
        println!("k={k}  P={p}  Q={q}");
    }
    let (p, q) = rs(&w);
    assert_eq!(rs_inverse(&p, &q)?, w);

    let a = Tableau::semistandard(4, vec![vec![1, 3], vec![3]])?;
    let b = Tableau::semistandard(4, vec![vec![1, 2], vec![2, 3], vec![4]])?;
    println!("P({a} ⊗ {b}) = {}", p_symbol_tensor(&a, &b)?);

    let shape: Partition = "2,1".parse()?;
    let all = enumerate_ssyt(3, &shape);
    let listed: Vec<String> = all.iter().map(ToString::to_string).collect();
    println!("SST_3{shape}: {} tableaux: {}", all.len(), listed.join(" "));
    Ok(())
}
