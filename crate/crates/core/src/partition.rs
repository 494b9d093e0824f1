//! Integer partitions, used as Young diagram shapes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition is
/// a first-class value.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-column partition `1^k`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn row(l: u32) -> Self {
        if l == 0 {
            Partition::empty()
        } else {
            Partition(vec![l])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Part `k` (1-based), zero beyond the length.
    pub fn part(&self, k: usize) -> u32 {
        if k == 0 {
            return 0;
        }
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    /// Column lengths `d_1 >= d_2 >= ...` (the conjugate partition).
    pub fn column_lengths(&self) -> Vec<usize> {
        let width = self.part(1) as usize;
        (1..=width).map(|j| self.0.iter().filter(|&&p| p as usize >= j).count()).collect()
    }

    pub fn conjugate(&self) -> Partition {
        Partition(self.column_lengths().into_iter().map(|d| d as u32).collect())
    }

    /// Whether `(row, col)` (1-based) lies in `D(λ)`.
    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && (self.part(row) as usize) >= col
    }

    /// `D(λ) ⊂ D(μ)`.
    pub fn is_contained_in(&self, mu: &Partition) -> bool {
        self.len() <= mu.len() && self.0.iter().zip(&mu.0).all(|(a, b)| a <= b)
    }

    /// `self ◁ mu`: `mu` is obtained from `self` by adding one cell.
    pub fn covered_by(&self, mu: &Partition) -> bool {
        covers(self, mu)
    }

    /// Cells that can be removed, as `(row, col)`, top to bottom.
    pub fn removable_corners(&self) -> Vec<(usize, usize)> {
        (1..=self.len()).filter(|&r| self.part(r) > self.part(r + 1)).map(|r| (r, self.part(r) as usize)).collect()
    }

    /// Cells that can be added, as `(row, col)`, top to bottom.
    pub fn addable_corners(&self) -> Vec<(usize, usize)> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.part(r) < self.part(r - 1))
            .map(|r| (r, self.part(r) as usize + 1))
            .collect()
    }

    pub fn with_cell_added(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 || (row > 1 && self.part(row) >= self.part(row - 1)) {
            return None;
        }
        let mut parts = self.0.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition(parts))
    }

    pub fn with_cell_removed(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() || self.part(row) <= self.part(row + 1) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        Partition::new(parts).ok()
    }

    /// All partitions of `size` with at most `max_len` parts, in lexicographic order.
    pub fn all_of_size(size: u32, max_len: usize) -> Vec<Partition> {
        fn go(rest: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in 1..=rest.min(cap) {
                cur.push(p);
                go(rest - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_len, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All partitions of size at most `max_size` and length at most `max_len`.
    pub fn all_up_to(max_size: u32, max_len: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(|s| Partition::all_of_size(s, max_len)).collect()
    }
}

/// `λ ◁ μ` iff `D(λ) ⊂ D(μ)` and `|μ| - |λ| = 1`.
pub fn covers(lm: &Partition, mu: &Partition) -> bool {
    mu.size() == lm.size() + 1 && lm.is_contained_in(mu)
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated parts; `""` and `"0"` denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
