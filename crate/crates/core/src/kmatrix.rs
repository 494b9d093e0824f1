//! Column complementation `K`, the operator `K_1`, AI-tableaux and the
//! standardization map `std`.

use crate::ai::{check_rank, rank_m};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{enumerate_ssyt, p_symbol, Tableau, Word};

/// `K^{(k)}`: the sorted complement of a column in `[1, n]`.
pub fn k_complement(col: &[u32], n: u32) -> Result<Vec<u32>> {
    let strictly_increasing = col.windows(2).all(|w| w[0] < w[1]);
    if !strictly_increasing || col.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::NotAColumn(col.to_vec()));
    }
    Ok((1..=n).filter(|x| col.binary_search(x).is_err()).collect())
}

/// `K_1(T) = P(K(C_1) ⊗ C_2 ⊗ ⋯ ⊗ C_l)`. On the empty tableau `C_1` is the
/// empty column, so the result is the full column `1, …, n`.
pub fn k1(t: &Tableau) -> Result<Tableau> {
    check_rank(t.n())?;
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    Ok(k1_unchecked(t))
}

fn k1_unchecked(t: &Tableau) -> Tableau {
    let n = t.n();
    let cols = t.columns();
    let first = cols.first().map_or(&[][..], Vec::as_slice);
    let mut letters: Vec<u32> =
        k_complement(first, n).expect("columns of a semistandard tableau are strict").into_iter().rev().collect();
    for c in cols.iter().skip(1) {
        letters.extend(c.iter().rev());
    }
    p_symbol(&Word::from_raw(n, letters))
}

/// `d_1 <= m` and `t^c_{i,1} <= t_{i,2}` for `i ∈ [1, d_2]`, where `t^c`
/// is the sorted complement of the first column.
pub fn is_ai_tableau(t: &Tableau) -> bool {
    let n = t.n();
    let cols = t.columns();
    let Some(first) = cols.first() else {
        return true;
    };
    if first.len() > rank_m(n) {
        return false;
    }
    let Some(second) = cols.get(1) else {
        return true;
    };
    let comp = k_complement(first, n).expect("semistandard first column");
    comp.iter().zip(second).all(|(c, s)| c <= s)
}

/// `std(T) = K_1^r(T)` for the least `r` making it an AI-tableau.
pub fn std(t: &Tableau) -> Result<Tableau> {
    check_rank(t.n())?;
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    std_unchecked(t)
}

pub(crate) fn std_unchecked(t: &Tableau) -> Result<Tableau> {
    let cap = t.size() + t.n() as usize;
    let mut cur = t.clone();
    for _ in 0..=cap {
        if is_ai_tableau(&cur) {
            return Ok(cur);
        }
        cur = k1_unchecked(&cur);
    }
    Err(Error::Internal(format!("std did not stabilise within {cap} steps for {t}")))
}

/// Number of `K_1` steps `std` takes.
pub fn std_steps(t: &Tableau) -> Result<usize> {
    check_rank(t.n())?;
    let cap = t.size() + t.n() as usize;
    let mut cur = t.clone();
    for r in 0..=cap {
        if is_ai_tableau(&cur) {
            return Ok(r);
        }
        cur = k1_unchecked(&cur);
    }
    Err(Error::Internal(format!("std did not stabilise within {cap} steps for {t}")))
}

/// `SST_n^AI(ρ)` in the canonical tableau order.
pub fn enumerate_sst_ai(n: u32, rho: &Partition) -> Result<Vec<Tableau>> {
    check_rank(n)?;
    if rho.len() > rank_m(n) {
        return Ok(Vec::new());
    }
    Ok(enumerate_ssyt(n, rho).into_iter().filter(is_ai_tableau).collect())
}
