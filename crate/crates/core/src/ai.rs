//! AI-crystals: involutive operators `B̃_i` with degrees `deg_i`.
//!
//! Every gl_n-crystal carries the induced structure
//! `deg_i b = ε_i b + [φ_i b odd]`, `B̃_i b = Ẽ_i b` for `φ_i b` even and
//! `F̃_i b` for `φ_i b` odd. [`AiTensor`] implements the tensor product of an
//! AI-crystal with a gl-crystal.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gl::{check_index, connected_component, split_components, GlCrystal};
use crate::laurent::LaurentPolynomial;
use crate::partition::Partition;
use crate::tableau::{p_symbol, Tableau, Word};

/// `m = ⌊n/2⌋`, the rank of so_n.
pub fn rank_m(n: u32) -> usize {
    (n / 2) as usize
}

pub fn check_rank(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::RankTooSmall(n));
    }
    Ok(())
}

/// An element of an AI-crystal of rank `n` (indices `i ∈ [1, n-1]`).
pub trait AiCrystal: Clone + Ord {
    fn ai_rank(&self) -> u32;
    fn btil(&self, i: u32) -> Option<Self>;
    fn deg(&self, i: u32) -> u32;
}

/// `deg_i` of the structure induced from a gl-crystal.
pub fn induced_deg<B: GlCrystal>(b: &B, i: u32) -> u32 {
    let (e, p) = (b.eps(i), b.phi(i));
    if p % 2 == 0 {
        e
    } else {
        e + 1
    }
}

/// `B̃_i` of the structure induced from a gl-crystal.
pub fn induced_btil<B: GlCrystal>(b: &B, i: u32) -> Option<B> {
    if b.phi(i).is_multiple_of(2) {
        b.etil(i)
    } else {
        b.ftil(i)
    }
}

impl AiCrystal for Word {
    fn ai_rank(&self) -> u32 {
        self.n()
    }

    fn btil(&self, i: u32) -> Option<Word> {
        induced_btil(self, i)
    }

    fn deg(&self, i: u32) -> u32 {
        induced_deg(self, i)
    }
}

impl AiCrystal for Tableau {
    fn ai_rank(&self) -> u32 {
        self.n()
    }

    fn btil(&self, i: u32) -> Option<Tableau> {
        induced_btil(&self.column_reading(), i).map(|w| p_symbol(&w))
    }

    fn deg(&self, i: u32) -> u32 {
        induced_deg(&self.column_reading(), i)
    }
}

/// `b1 ⊗ b2` with `b1` in an AI-crystal and `b2` in a gl-crystal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AiTensor<A, G> {
    pub left: A,
    pub right: G,
}

impl<A, G> AiTensor<A, G> {
    pub fn new(left: A, right: G) -> Self {
        AiTensor { left, right }
    }
}

enum TensorCase {
    Left,
    RightE,
    RightF,
}

impl<A: AiCrystal, G: GlCrystal> AiTensor<A, G> {
    fn case(&self, i: u32) -> (TensorCase, u32, u32, u32) {
        let d1 = self.left.deg(i);
        let (e2, p2) = (self.right.eps(i), self.right.phi(i));
        let case = if d1 > p2 {
            TensorCase::Left
        } else if (p2 - d1).is_multiple_of(2) {
            TensorCase::RightE
        } else {
            TensorCase::RightF
        };
        (case, d1, e2, p2)
    }
}

impl<A: AiCrystal, G: GlCrystal> AiCrystal for AiTensor<A, G> {
    fn ai_rank(&self) -> u32 {
        self.right.rank()
    }

    fn btil(&self, i: u32) -> Option<Self> {
        match self.case(i).0 {
            TensorCase::Left => Some(AiTensor::new(self.left.btil(i)?, self.right.clone())),
            TensorCase::RightE => Some(AiTensor::new(self.left.clone(), self.right.etil(i)?)),
            TensorCase::RightF => Some(AiTensor::new(self.left.clone(), self.right.ftil(i)?)),
        }
    }

    fn deg(&self, i: u32) -> u32 {
        match self.case(i) {
            (TensorCase::Left, d1, e2, p2) => d1 - p2 + e2,
            (TensorCase::RightE, _, e2, _) => e2,
            (TensorCase::RightF, _, e2, _) => e2 + 1,
        }
    }
}

/// Range-checked `B̃_i`.
pub fn btil<B: AiCrystal>(b: &B, i: u32) -> Result<Option<B>> {
    check_index(b.ai_rank(), i)?;
    Ok(b.btil(i))
}

/// Range-checked `deg_i`.
pub fn deg<B: AiCrystal>(b: &B, i: u32) -> Result<u32> {
    check_index(b.ai_rank(), i)?;
    Ok(b.deg(i))
}

/// Range-checked tensor operator.
pub fn ai_tensor_btil<A: AiCrystal, G: GlCrystal>(b1: &A, b2: &G, i: u32) -> Result<Option<(A, G)>> {
    check_index(b2.rank(), i)?;
    Ok(AiTensor::new(b1.clone(), b2.clone()).btil(i).map(|t| (t.left, t.right)))
}

/// Range-checked tensor degree.
pub fn ai_tensor_deg<A: AiCrystal, G: GlCrystal>(b1: &A, b2: &G, i: u32) -> Result<u32> {
    check_index(b2.rank(), i)?;
    Ok(AiTensor::new(b1.clone(), b2.clone()).deg(i))
}

pub fn ai_neighbors<B: AiCrystal>(b: &B) -> Vec<B> {
    (1..b.ai_rank()).filter_map(|i| b.btil(i)).collect()
}

/// `C^AI(b)`, sorted.
pub fn ai_component<B: AiCrystal>(seed: B) -> BTreeSet<B> {
    connected_component(seed, ai_neighbors)
}

/// AI-connected components of a finite set, ordered by smallest element.
pub fn ai_components<B: AiCrystal>(elements: &[B]) -> Vec<BTreeSet<B>> {
    split_components(elements, ai_neighbors)
}

/// `ch_AI B = Σ_b Π_{i=1}^m (y_{2i-1}^{d_i} + y_{2i-1}^{-d_i}) / 2` with
/// `d_i = deg_{2i-1} b`, in the `m` variables `y_1, y_3, …, y_{2m-1}`.
pub fn ch_ai<'a, B: AiCrystal + 'a>(n: u32, elements: impl IntoIterator<Item = &'a B>) -> LaurentPolynomial {
    let m = rank_m(n);
    let half = Rational64::new(1, 2);
    let mut ch = LaurentPolynomial::zero(m);
    for b in elements {
        let degs: Vec<i32> = (1..=m).map(|i| b.deg(2 * i as u32 - 1) as i32).collect();
        let mut term = LaurentPolynomial::one(m);
        for (k, &d) in degs.iter().enumerate() {
            let mut factor = LaurentPolynomial::zero(m);
            let mut up = vec![0; m];
            up[k] = d;
            let mut down = vec![0; m];
            down[k] = -d;
            factor.add_term(up, half);
            factor.add_term(down, half);
            term = &term * &factor;
        }
        ch = &ch + &term;
    }
    ch
}

/// [`ch_ai`] checked for integrality.
pub fn ch_ai_integral<'a, B: AiCrystal + 'a>(
    n: u32,
    elements: impl IntoIterator<Item = &'a B>,
) -> Result<LaurentPolynomial> {
    let ch = ch_ai(n, elements);
    if !ch.is_integral() {
        return Err(Error::Internal("AI-character has a non-integer coefficient".into()));
    }
    Ok(ch)
}

/// Variable names `y1, y3, …, y{2m-1}`.
pub fn ai_variable_names(n: u32) -> Vec<String> {
    (1..=rank_m(n)).map(|i| format!("y{}", 2 * i - 1)).collect()
}

/// An integral so_n weight `(ν_1, ν_3, …, ν_{2m-1})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SoWeight(pub Vec<i32>);

impl SoWeight {
    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    /// Dominance for so_n: weakly decreasing and nonnegative for `n` odd;
    /// for `n` even the last coordinate may be negative with
    /// `ν_{2m-3} >= |ν_{2m-1}|`.
    pub fn is_dominant(&self, n: u32) -> bool {
        let v = &self.0;
        if v.len() != rank_m(n) {
            return false;
        }
        let Some((&last, init)) = v.split_last() else {
            return true;
        };
        let init_ok = init.windows(2).all(|w| w[0] >= w[1]);
        if n % 2 == 1 {
            init_ok && init.last().is_none_or(|&p| p >= last) && last >= 0
        } else {
            init_ok && init.last().is_none_or(|&p| p >= last.abs())
        }
    }

    /// `ν_ρ`, or `[ν_ρ^+, ν_ρ^-]` when `n` is even and `ℓ(ρ) = n/2`.
    pub fn from_shape(n: u32, rho: &Partition) -> Result<Vec<SoWeight>> {
        let m = rank_m(n);
        if rho.len() > m {
            return Err(Error::ShapeTooLong { len: rho.len(), max: m });
        }
        let nu: Vec<i32> = (1..=m).map(|k| rho.part(k) as i32).collect();
        if n.is_multiple_of(2) && rho.len() == m && m > 0 {
            let mut minus = nu.clone();
            minus[m - 1] = -minus[m - 1];
            Ok(vec![SoWeight(nu), SoWeight(minus)])
        } else {
            Ok(vec![SoWeight(nu)])
        }
    }
}

impl fmt::Display for SoWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Whether `b` is a singular element of degree `ρ`:
/// 1. `deg_{2i-1} b = ρ_i` for `i ∈ [1, m]`;
/// 2. `deg_{2i} b = 0` whenever `2i < n`;
/// 3. `deg_{2i+1}` vanishes after `ρ_{i+1}` rounds of `B̃_{2i-1}` then `B̃_{2i}`,
///    whenever `2i+1 < n`. An annihilation along the way counts as failure.
pub fn is_singular<B: AiCrystal>(b: &B, rho: &Partition) -> bool {
    let n = b.ai_rank();
    let m = rank_m(n);
    if rho.len() > m {
        return false;
    }
    for i in 1..=m as u32 {
        if b.deg(2 * i - 1) != rho.part(i as usize) {
            return false;
        }
        if 2 * i < n && b.deg(2 * i) != 0 {
            return false;
        }
    }
    for i in 1..=m as u32 {
        if 2 * i + 1 >= n {
            continue;
        }
        let mut c = b.clone();
        for _ in 0..rho.part(i as usize + 1) {
            match c.btil(2 * i - 1).and_then(|x| x.btil(2 * i)) {
                Some(x) => c = x,
                None => return false,
            }
        }
        if c.deg(2 * i + 1) != 0 {
            return false;
        }
    }
    true
}

/// `Sing(B, ρ)`.
pub fn singular_elements<'a, B: AiCrystal + 'a>(elements: impl IntoIterator<Item = &'a B>, rho: &Partition) -> Vec<B> {
    elements.into_iter().filter(|b| is_singular(*b, rho)).cloned().collect()
}

/// The canonical singular AI-tableau of shape `ρ`. Row `i` is
/// `a_{2i-1}, 2i, …, 2i`, where `a_{2i-1} = 2i-1` iff `δ_i = 1` and
/// `δ_i ≡ ρ_i - δ_{i+1} (mod 2)`, `δ_{ℓ+1} = 0`.
pub fn t_rho(n: u32, rho: &Partition) -> Result<Tableau> {
    check_rank(n)?;
    let m = rank_m(n);
    if rho.len() > m {
        return Err(Error::ShapeTooLong { len: rho.len(), max: m });
    }
    let l = rho.len();
    let mut delta = vec![0u32; l + 2];
    for i in (1..=l).rev() {
        delta[i] = (rho.part(i) + 2 - delta[i + 1]) % 2;
    }
    let rows = (1..=l)
        .map(|i| {
            let i2 = 2 * i as u32;
            let first = if delta[i] == 1 { i2 - 1 } else { i2 };
            let mut row = vec![i2; rho.part(i) as usize];
            row[0] = first;
            row
        })
        .collect();
    Tableau::semistandard(n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::tableau::enumerate_ssyt;

    fn t(n: u32, rows: &[&[u32]]) -> Tableau {
        Tableau::semistandard(n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn single_box_structure() {
        let n = 5;
        for j in 1..=n {
            let b = Word::new(n, vec![j]).unwrap();
            for i in 1..n {
                let expected_deg = u32::from(j == i || j == i + 1);
                assert_eq!(b.deg(i), expected_deg);
                let expected = if j == i + 1 {
                    Some(j - 1)
                } else if j == i {
                    Some(j + 1)
                } else {
                    None
                };
                assert_eq!(b.btil(i).map(|w| w.letters()[0]), expected);
            }
        }
    }

    #[test]
    fn graph_of_21_edges() {
        let b = t(3, &[&[1, 1], &[2]]);
        assert_eq!(b.btil(1), Some(t(3, &[&[1, 2], &[2]])));
        assert_eq!(b.btil(2), Some(t(3, &[&[1, 1], &[3]])));
        let c = t(3, &[&[1, 2], &[2]]);
        assert_eq!(c.btil(1), Some(b));
        assert_eq!(c.btil(2), None);
        assert_eq!(c.deg(2), 0);
    }

    #[test]
    fn empty_left_factor_reduces_to_induced() {
        for word in Word::all(4, 3) {
            let tensor = AiTensor::new(Tableau::empty(4), word.clone());
            for i in 1..4 {
                assert_eq!(tensor.deg(i), word.deg(i));
                assert_eq!(tensor.btil(i).map(|x| x.right), word.btil(i));
            }
        }
    }

    #[test]
    fn checked_operators() {
        let b = t(3, &[&[1]]);
        assert!(btil(&b, 3).is_err());
        assert!(deg(&b, 0).is_err());
        assert_eq!(deg(&b, 1), Ok(1));
    }

    #[test]
    fn characters_of_single_boxes() {
        let n3 = enumerate_ssyt(3, &p(&[1]));
        let ch3 = ch_ai_integral(3, &n3).unwrap();
        assert_eq!(ch3.display_with(&ai_variable_names(3)).to_string(), "y1 + 1 + y1^-1");
        let n4 = enumerate_ssyt(4, &p(&[1]));
        let ch4 = ch_ai_integral(4, &n4).unwrap();
        assert_eq!(ch4.num_terms(), 4);
        for e in [[1, 0], [-1, 0], [0, 1], [0, -1]] {
            assert_eq!(ch4.coeff(&e), Rational64::from_integer(1));
        }
        assert!(ch_ai::<Tableau>(3, &[]).is_zero());
    }

    #[test]
    fn t_rho_examples() {
        assert_eq!(t_rho(3, &p(&[3])).unwrap(), t(3, &[&[1, 2, 2]]));
        assert_eq!(t_rho(3, &p(&[2])).unwrap(), t(3, &[&[2, 2]]));
        assert_eq!(t_rho(4, &p(&[1, 1])).unwrap(), t(4, &[&[2], &[3]]));
        assert_eq!(t_rho(4, &p(&[2, 1])).unwrap(), t(4, &[&[1, 2], &[3]]));
        assert_eq!(t_rho(4, &p(&[2, 2])).unwrap(), t(4, &[&[2, 2], &[4, 4]]));
        assert_eq!(t_rho(5, &Partition::empty()).unwrap(), Tableau::empty(5));
        assert!(t_rho(4, &p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn t_rho_is_singular() {
        for n in 3..=6 {
            for rho in Partition::all_up_to(4, rank_m(n)) {
                let tr = t_rho(n, &rho).unwrap();
                assert!(is_singular(&tr, &rho), "n={n} ρ={rho}");
            }
        }
        assert!(!is_singular(&t(3, &[&[3, 3]]), &p(&[1])));
        assert!(!is_singular(&t(4, &[&[1], &[3]]), &p(&[1, 1])));
    }

    #[test]
    fn so_weights() {
        assert_eq!(SoWeight::from_shape(5, &p(&[2])).unwrap(), vec![SoWeight(vec![2, 0])]);
        assert_eq!(SoWeight::from_shape(4, &p(&[2, 1])).unwrap(), vec![SoWeight(vec![2, 1]), SoWeight(vec![2, -1])]);
        assert!(SoWeight(vec![2, -1]).is_dominant(4));
        assert!(!SoWeight(vec![2, -1]).is_dominant(5));
        assert!(!SoWeight(vec![1, 2]).is_dominant(5));
    }
}
