//! Young tableaux, words, Schensted insertion and the Robinson-Schensted
//! correspondence.
//!
//! Cells are addressed `(row, col)`, both 1-based. Tableaux are stored as
//! ragged rows; the derived ordering compares `n` and then the rows top to
//! bottom, which for a fixed shape is lexicographic order on the row words.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A finite sequence of letters in `[1, n]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "WordRepr")]
pub struct Word {
    n: u32,
    letters: Vec<u32>,
}

#[derive(Deserialize)]
struct WordRepr {
    n: u32,
    letters: Vec<u32>,
}

impl TryFrom<WordRepr> for Word {
    type Error = Error;

    fn try_from(r: WordRepr) -> Result<Self> {
        Word::new(r.n, r.letters)
    }
}

impl Word {
    pub fn new(n: u32, letters: Vec<u32>) -> Result<Self> {
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > n) {
            return Err(Error::LetterOutOfRange { letter, n });
        }
        Ok(Word { n, letters })
    }

    pub fn empty(n: u32) -> Self {
        Word { n, letters: Vec::new() }
    }

    pub(crate) fn from_raw(n: u32, letters: Vec<u32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1 && l <= n));
        Word { n, letters }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `w1 * w2`; the alphabet is the larger of the two.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { n: self.n.max(other.n), letters }
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word { n: self.n, letters: self.letters[..k].to_vec() }
    }

    /// Every word of length `d` over `[1, n]`, in lexicographic order.
    pub fn all(n: u32, d: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..d {
            out = out
                .into_iter()
                .flat_map(|w: Vec<u32>| {
                    (1..=n).map(move |l| {
                        let mut v = w.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(|letters| Word { n, letters }).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// A Young tableau with entries in `[1, n]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    n: u32,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau from rows; checks the shape and the alphabet but not
    /// semistandardness.
    pub fn new(n: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens.contains(&0) || lens.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::RaggedRows(lens));
        }
        if let Some(&letter) = rows.iter().flatten().find(|&&l| l == 0 || l > n) {
            return Err(Error::LetterOutOfRange { letter, n });
        }
        Ok(Tableau { n, rows })
    }

    /// Builds a tableau and requires it to be semistandard.
    pub fn semistandard(n: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau::new(n, rows)?;
        if !t.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        Ok(t)
    }

    pub(crate) fn from_raw(n: u32, rows: Vec<Vec<u32>>) -> Self {
        Tableau { n, rows }
    }

    pub fn empty(n: u32) -> Self {
        Tableau { n, rows: Vec::new() }
    }

    /// `C_1 C_2 ⋯ C_l`: the tableau whose j-th column is `cols[j]` read top to bottom.
    pub fn from_columns(n: u32, cols: &[Vec<u32>]) -> Result<Self> {
        let height = cols.first().map_or(0, Vec::len);
        let mut rows = vec![Vec::new(); height];
        for col in cols {
            if col.len() > height || col.is_empty() {
                return Err(Error::RaggedRows(cols.iter().map(Vec::len).collect()));
            }
            for (i, &x) in col.iter().enumerate() {
                rows[i].push(x);
            }
        }
        let t = Tableau::new(n, rows)?;
        if t.columns() != cols {
            return Err(Error::RaggedRows(cols.iter().map(Vec::len).collect()));
        }
        Ok(t)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn with_n(&self, n: u32) -> Result<Tableau> {
        Tableau::new(n, self.rows.clone())
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("row lengths are validated at construction")
    }

    /// `|T|`.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of rows, `ℓ(sh T)`.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Entry at `(row, col)`, 1-based.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// Columns top to bottom.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lower, upper)| upper < lower));
        rows_ok && cols_ok
    }

    /// Semistandard with pairwise distinct entries.
    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<u32> = self.entries().collect();
        seen.sort_unstable();
        self.is_semistandard() && seen.windows(2).all(|w| w[0] != w[1])
    }

    /// `CR(T)`: columns read bottom to top, left to right.
    pub fn column_reading(&self) -> Word {
        let letters = self.columns().into_iter().flat_map(|c| c.into_iter().rev()).collect();
        Word::from_raw(self.n, letters)
    }

    /// `(T ← l)` by Schensted row insertion.
    pub fn row_insert(&self, l: u32) -> Result<Tableau> {
        if l == 0 || l > self.n {
            return Err(Error::LetterOutOfRange { letter: l, n: self.n });
        }
        if !self.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        Ok(self.insert(l))
    }

    pub(crate) fn insert(&self, l: u32) -> Tableau {
        let mut t = self.clone();
        t.insert_in_place(l);
        t
    }

    /// Row insertion; returns the row (1-based) of the new cell.
    pub(crate) fn insert_in_place(&mut self, l: u32) -> usize {
        let mut x = l;
        for (r, row) in self.rows.iter_mut().enumerate() {
            // leftmost entry strictly greater than x
            let pos = row.partition_point(|&y| y <= x);
            if pos == row.len() {
                row.push(x);
                return r + 1;
            }
            x = std::mem::replace(&mut row[pos], x);
        }
        self.rows.push(vec![x]);
        self.rows.len()
    }

    /// Inverse of row insertion: removes the corner `(row, col)` and bumps
    /// back up, returning `(T', l)` with `(T' ← l) = T`.
    pub fn reverse_insert(&self, row: usize, col: usize) -> Result<(Tableau, u32)> {
        if !self.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        let shape = self.shape();
        if !shape.removable_corners().contains(&(row, col)) {
            return Err(Error::NotRemovable { row, col });
        }
        let mut rows = self.rows.clone();
        let mut x = rows[row - 1].pop().expect("corner cell exists");
        if rows[row - 1].is_empty() {
            rows.pop();
        }
        for r in (0..row - 1).rev() {
            // rightmost entry strictly less than x
            let pos = rows[r].partition_point(|&y| y < x);
            debug_assert!(pos > 0, "column strictness guarantees a smaller entry");
            x = std::mem::replace(&mut rows[r][pos - 1], x);
        }
        Ok((Tableau { n: self.n, rows }, x))
    }

    /// Appends `x` to row `row` (1-based; one past the last row starts a new row).
    pub(crate) fn push_in_row(&mut self, row: usize, x: u32) {
        if row > self.rows.len() {
            self.rows.push(Vec::new());
        }
        self.rows[row - 1].push(x);
    }

    pub fn max_entry(&self) -> u32 {
        self.entries().max().unwrap_or(0)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let wide = self.max_entry() >= 10;
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, "/")?;
            }
            for (k, x) in row.iter().enumerate() {
                if wide && k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    n: u32,
    shape: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr { n: self.n, shape: self.shape().into(), rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TableauRepr::deserialize(d)?;
        let t = Tableau::new(repr.n, repr.rows).map_err(serde::de::Error::custom)?;
        if Vec::<u32>::from(t.shape()) != repr.shape {
            return Err(serde::de::Error::custom("shape does not match row lengths"));
        }
        Ok(t)
    }
}

/// `CR(T)`.
pub fn column_reading(t: &Tableau) -> Word {
    t.column_reading()
}

/// `P(w)`.
pub fn p_symbol(w: &Word) -> Tableau {
    let mut t = Tableau::empty(w.n());
    for &l in w.letters() {
        t.insert_in_place(l);
    }
    t
}

/// `(P(w), Q(w))`. The Q-symbol is standard with alphabet `[1, |w|]`.
pub fn rs(w: &Word) -> (Tableau, Tableau) {
    let d = w.len() as u32;
    let mut p = Tableau::empty(w.n());
    let mut q = Tableau::empty(d);
    for (k, &l) in w.letters().iter().enumerate() {
        let row = p.insert_in_place(l);
        if row > q.rows.len() {
            q.rows.push(Vec::new());
        }
        q.rows[row - 1].push(k as u32 + 1);
    }
    (p, q)
}

/// Inverse of [`rs`]: recovers the word from a semistandard `P` and a
/// standard `Q` of the same shape.
pub fn rs_inverse(p: &Tableau, q: &Tableau) -> Result<Word> {
    if p.shape() != q.shape() {
        return Err(Error::NoPreimage);
    }
    if !q.is_standard() {
        return Err(Error::NotSemistandard);
    }
    let mut p = p.clone();
    let mut q = q.clone();
    let mut letters = Vec::with_capacity(p.size());
    while !q.is_empty() {
        let k = q.max_entry();
        let row = q.rows.iter().position(|r| r.last() == Some(&k)).ok_or(Error::NoPreimage)? + 1;
        let col = q.rows[row - 1].len();
        let (p2, l) = p.reverse_insert(row, col)?;
        q.rows[row - 1].pop();
        if q.rows[row - 1].is_empty() {
            q.rows.pop();
        }
        letters.push(l);
        p = p2;
    }
    letters.reverse();
    Ok(Word::from_raw(p.n(), letters))
}

/// `P(T ⊗ S) := P(CR(T) * CR(S))`.
pub fn p_symbol_tensor(t: &Tableau, s: &Tableau) -> Result<Tableau> {
    if !t.is_semistandard() || !s.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    Ok(p_symbol(&t.column_reading().concat(&s.column_reading())))
}

/// `SST_n(λ)` in lexicographic order of the row words.
pub fn enumerate_ssyt(n: u32, shape: &Partition) -> Vec<Tableau> {
    if shape.len() > n as usize {
        return Vec::new();
    }
    let lens: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut rows: Vec<Vec<u32>> = lens.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    fill(n, &lens, 0, &mut rows, &mut out);
    out
}

fn fill(n: u32, lens: &[usize], r: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
    if r == lens.len() {
        out.push(Tableau { n, rows: rows.clone() });
        return;
    }
    let c = rows[r].len();
    if c == lens[r] {
        fill(n, lens, r + 1, rows, out);
        return;
    }
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    // entries below this cell still need room
    let below = lens[r + 1..].iter().filter(|&&l| l > c).count() as u32;
    let lo = left.max(above);
    let hi = n.saturating_sub(below);
    for x in lo..=hi {
        rows[r].push(x);
        fill(n, lens, r, rows, out);
        rows[r].pop();
    }
}
