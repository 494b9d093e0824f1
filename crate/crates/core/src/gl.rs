//! The gl_n crystal structure on words and semistandard tableaux.
//!
//! Tensor products follow the convention
//! `F_i(b1 ⊗ b2) = F_i b1 ⊗ b2` if `ε_i(b1) >= φ_i(b2)` and `b1 ⊗ F_i b2`
//! otherwise. On a word this is the bracketing rule where each letter `i+1`
//! opens and each letter `i` closes: an `i+1` cancels against a later `i`,
//! leaving `i^φ (i+1)^ε`.

use std::collections::{BTreeSet, VecDeque};

use num_rational::Rational64;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::tableau::{p_symbol, Tableau, Word};

/// An element of `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GlWeight(pub Vec<i32>);

impl GlWeight {
    pub fn zero(n: u32) -> Self {
        GlWeight(vec![0; n as usize])
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    /// `<wt, α_i>` for the simple root `α_i = ε_i - ε_{i+1}`.
    pub fn pair_simple_root(&self, i: u32) -> i32 {
        self.0[i as usize - 1] - self.0[i as usize]
    }
}

/// A normal gl_n-crystal element. Indices are `i ∈ [1, n-1]`; the unchecked
/// methods panic outside that range, see [`check_index`].
pub trait GlCrystal: Clone + Ord {
    /// The `n` of gl_n.
    fn rank(&self) -> u32;
    fn etil(&self, i: u32) -> Option<Self>;
    fn ftil(&self, i: u32) -> Option<Self>;
    fn eps(&self, i: u32) -> u32;
    fn phi(&self, i: u32) -> u32;
    fn weight(&self) -> GlWeight;
}

pub fn check_index(n: u32, i: u32) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { i, max: n.saturating_sub(1) });
    }
    Ok(())
}

/// Positions of the unmatched `i` letters and unmatched `i+1` letters.
fn signature(letters: &[u32], i: u32) -> (Vec<usize>, Vec<usize>) {
    let mut open: Vec<usize> = Vec::new();
    let mut unmatched_i = Vec::new();
    for (p, &l) in letters.iter().enumerate() {
        if l == i + 1 {
            open.push(p);
        } else if l == i && open.pop().is_none() {
            unmatched_i.push(p);
        }
    }
    (unmatched_i, open)
}

impl GlCrystal for Word {
    fn rank(&self) -> u32 {
        self.n()
    }

    fn etil(&self, i: u32) -> Option<Word> {
        assert!(i >= 1 && i < self.n(), "index {i} out of range");
        let (_, plus) = signature(self.letters(), i);
        let &p = plus.first()?;
        let mut letters = self.letters().to_vec();
        letters[p] = i;
        Some(Word::from_raw(self.n(), letters))
    }

    fn ftil(&self, i: u32) -> Option<Word> {
        assert!(i >= 1 && i < self.n(), "index {i} out of range");
        let (minus, _) = signature(self.letters(), i);
        let &p = minus.last()?;
        let mut letters = self.letters().to_vec();
        letters[p] = i + 1;
        Some(Word::from_raw(self.n(), letters))
    }

    fn eps(&self, i: u32) -> u32 {
        assert!(i >= 1 && i < self.n(), "index {i} out of range");
        signature(self.letters(), i).1.len() as u32
    }

    fn phi(&self, i: u32) -> u32 {
        assert!(i >= 1 && i < self.n(), "index {i} out of range");
        signature(self.letters(), i).0.len() as u32
    }

    fn weight(&self) -> GlWeight {
        let mut wt = vec![0; self.n() as usize];
        for &l in self.letters() {
            wt[l as usize - 1] += 1;
        }
        GlWeight(wt)
    }
}

impl GlCrystal for Tableau {
    fn rank(&self) -> u32 {
        self.n()
    }

    fn etil(&self, i: u32) -> Option<Tableau> {
        self.column_reading().etil(i).map(|w| p_symbol(&w))
    }

    fn ftil(&self, i: u32) -> Option<Tableau> {
        self.column_reading().ftil(i).map(|w| p_symbol(&w))
    }

    fn eps(&self, i: u32) -> u32 {
        self.column_reading().eps(i)
    }

    fn phi(&self, i: u32) -> u32 {
        self.column_reading().phi(i)
    }

    fn weight(&self) -> GlWeight {
        self.column_reading().weight()
    }
}

/// Range-checked `Ẽ_i`.
pub fn etil<B: GlCrystal>(b: &B, i: u32) -> Result<Option<B>> {
    check_index(b.rank(), i)?;
    Ok(b.etil(i))
}

/// Range-checked `F̃_i`.
pub fn ftil<B: GlCrystal>(b: &B, i: u32) -> Result<Option<B>> {
    check_index(b.rank(), i)?;
    Ok(b.ftil(i))
}

/// Range-checked `ε_i`.
pub fn eps<B: GlCrystal>(b: &B, i: u32) -> Result<u32> {
    check_index(b.rank(), i)?;
    Ok(b.eps(i))
}

/// Range-checked `φ_i`.
pub fn phi<B: GlCrystal>(b: &B, i: u32) -> Result<u32> {
    check_index(b.rank(), i)?;
    Ok(b.phi(i))
}

/// Tableau operators reject non-semistandard input.
pub fn etil_tab(t: &Tableau, i: u32) -> Result<Option<Tableau>> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    etil(t, i)
}

pub fn ftil_tab(t: &Tableau, i: u32) -> Result<Option<Tableau>> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    ftil(t, i)
}

/// The orbit of `seed` under `neighbors`, in sorted order.
pub fn connected_component<T, F, I>(seed: T, mut neighbors: F) -> BTreeSet<T>
where
    T: Ord + Clone,
    F: FnMut(&T) -> I,
    I: IntoIterator<Item = T>,
{
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed);
    while let Some(b) = queue.pop_front() {
        for nb in neighbors(&b) {
            if seen.insert(nb.clone()) {
                queue.push_back(nb);
            }
        }
    }
    seen
}

/// All `Ẽ_i b`, `F̃_i b`.
pub fn gl_neighbors<B: GlCrystal>(b: &B) -> Vec<B> {
    (1..b.rank()).flat_map(|i| [b.etil(i), b.ftil(i)]).flatten().collect()
}

pub fn gl_component<B: GlCrystal>(seed: B) -> BTreeSet<B> {
    connected_component(seed, gl_neighbors)
}

/// Splits a finite set into gl-connected components, each sorted, ordered
/// by their smallest element.
pub fn gl_components<B: GlCrystal>(elements: &[B]) -> Vec<BTreeSet<B>> {
    split_components(elements, gl_neighbors)
}

pub(crate) fn split_components<T, F>(elements: &[T], mut neighbors: F) -> Vec<BTreeSet<T>>
where
    T: Ord + Clone,
    F: FnMut(&T) -> Vec<T>,
{
    let mut sorted: Vec<T> = elements.to_vec();
    sorted.sort();
    let mut assigned: BTreeSet<T> = BTreeSet::new();
    let mut out = Vec::new();
    for b in sorted {
        if assigned.contains(&b) {
            continue;
        }
        let comp = connected_component(b, &mut neighbors);
        assigned.extend(comp.iter().cloned());
        out.push(comp);
    }
    out
}

/// `ch_gl B = Σ_b x^{wt(b)}` in `n` variables.
pub fn ch_gl<'a, B: GlCrystal + 'a>(n: u32, elements: impl IntoIterator<Item = &'a B>) -> LaurentPolynomial {
    let mut ch = LaurentPolynomial::zero(n as usize);
    for b in elements {
        ch.add_term(b.weight().0, Rational64::one());
    }
    ch
}

/// Variable names `x1, …, xn`.
pub fn gl_variable_names(n: u32) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}
