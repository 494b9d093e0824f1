//! The RS^AI correspondence, so_n-oscillating tableaux, the insertion-step
//! decomposition of `SST_n^AI(ρ) ⊗ SST_n(1)`, and gl_n → so_n branching
//! multiplicities.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ai::{ai_components, check_rank, rank_m, AiCrystal, AiTensor};
use crate::error::{Error, Result};
use crate::kmatrix::{enumerate_sst_ai, is_ai_tableau, std_unchecked};
use crate::partition::{covers, Partition};
use crate::tableau::{enumerate_ssyt, rs, Tableau, Word};

/// The sign attached to a step of an oscillating tableau.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    #[default]
    Zero,
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Zero => "0",
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Sign::Zero => s.serialize_u8(0),
            Sign::Plus => s.serialize_str("+"),
            Sign::Minus => s.serialize_str("-"),
        }
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct SignVisitor;

        impl Visitor<'_> for SignVisitor {
            type Value = Sign;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(r#"0, "+" or "-""#)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Sign, E> {
                match v {
                    0 => Ok(Sign::Zero),
                    _ => Err(E::invalid_value(de::Unexpected::Unsigned(v), &self)),
                }
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Sign, E> {
                match v {
                    0 => Ok(Sign::Zero),
                    _ => Err(E::invalid_value(de::Unexpected::Signed(v), &self)),
                }
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Sign, E> {
                match v {
                    "0" => Ok(Sign::Zero),
                    "+" => Ok(Sign::Plus),
                    "-" => Ok(Sign::Minus),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }

        d.deserialize_any(SignVisitor)
    }
}

/// One `(ρ^k, s^k)` pair.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Step {
    pub shape: Partition,
    pub sign: Sign,
}

impl Step {
    pub fn new(shape: Partition, sign: Sign) -> Self {
        Step { shape, sign }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape)?;
        if self.sign != Sign::Zero {
            write!(f, "{}", self.sign)?;
        }
        Ok(())
    }
}

/// An so_n-oscillating tableau `((ρ^0, s^0), …, (ρ^d, s^d))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "OtRepr")]
pub struct OscillatingTableau {
    n: u32,
    steps: Vec<Step>,
}

#[derive(Deserialize)]
struct OtRepr {
    n: u32,
    steps: Vec<Step>,
}

impl TryFrom<OtRepr> for OscillatingTableau {
    type Error = Error;

    fn try_from(r: OtRepr) -> Result<Self> {
        OscillatingTableau::new(r.n, r.steps)
    }
}

fn invalid_ot(msg: String) -> Error {
    Error::InvalidOscillatingTableau(msg)
}

/// Whether a sign is forced at a step from `prev` to `cur`.
fn sign_required(n: u32, prev: &Partition, cur: &Partition) -> bool {
    let m = rank_m(n);
    n.is_multiple_of(2) && prev.len() == m && cur.len() + 1 == m
}

impl OscillatingTableau {
    pub fn new(n: u32, steps: Vec<Step>) -> Result<Self> {
        let ot = OscillatingTableau { n, steps };
        ot.validate()?;
        Ok(ot)
    }

    /// The length-0 tableau `((∅, 0))`.
    pub fn empty(n: u32) -> Self {
        OscillatingTableau { n, steps: vec![Step::new(Partition::empty(), Sign::Zero)] }
    }

    /// Shapes only, all signs 0.
    pub fn from_shapes(n: u32, shapes: Vec<Partition>) -> Result<Self> {
        Self::new(n, shapes.into_iter().map(|s| Step::new(s, Sign::Zero)).collect())
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        check_rank(n)?;
        let m = rank_m(n);
        let first = self.steps.first().ok_or_else(|| invalid_ot("no steps".into()))?;
        if !first.shape.is_empty() || first.sign != Sign::Zero {
            return Err(invalid_ot("step 0 must be (∅, 0)".into()));
        }
        for (k, step) in self.steps.iter().enumerate() {
            if step.shape.len() > m {
                return Err(invalid_ot(format!("step {k}: shape {} has more than {m} rows", step.shape)));
            }
        }
        for (k, pair) in self.steps.windows(2).enumerate() {
            let k = k + 1;
            let (prev, cur) = (&pair[0].shape, &pair[1].shape);
            if prev == cur {
                if n.is_multiple_of(2) || cur.len() != m {
                    return Err(invalid_ot(format!("step {k}: repeated shape needs n odd and {m} rows")));
                }
            } else if !covers(prev, cur) && !covers(cur, prev) {
                return Err(invalid_ot(format!("step {k}: {prev} and {cur} differ by more than one cell")));
            }
            let signed = pair[1].sign != Sign::Zero;
            if signed != sign_required(n, prev, cur) {
                return Err(invalid_ot(format!("step {k}: sign {} is not allowed here", pair[1].sign)));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The length `d`.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The final shape `ρ^d`.
    pub fn shape(&self) -> &Partition {
        &self.steps.last().expect("at least one step").shape
    }

    /// The first `k + 1` steps.
    pub fn truncate(&self, k: usize) -> OscillatingTableau {
        OscillatingTableau { n: self.n, steps: self.steps[..=k].to_vec() }
    }
}

impl fmt::Display for OscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, s) in self.steps.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// A member of `Q_2`: `{k}`, `{l, k}` or `{l, k, ±}` with `l < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mark {
    Single(u32),
    Pair(u32, u32),
    Signed(u32, u32, Sign),
}

impl Mark {
    fn key(&self) -> (u32, u32, Sign) {
        match *self {
            Mark::Single(k) => (k, 0, Sign::Zero),
            Mark::Pair(l, k) => (l, k, Sign::Zero),
            Mark::Signed(l, k, s) => (l, k, s),
        }
    }

    /// The largest integer in the mark.
    pub fn last(&self) -> u32 {
        match *self {
            Mark::Single(k) | Mark::Pair(_, k) | Mark::Signed(_, k, _) => k,
        }
    }

    pub fn integers(&self) -> Vec<u32> {
        match *self {
            Mark::Single(k) => vec![k],
            Mark::Pair(l, k) | Mark::Signed(l, k, _) => vec![l, k],
        }
    }
}

impl PartialOrd for Mark {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mark {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mark::Single(k) => write!(f, "{{{k}}}"),
            Mark::Pair(l, k) => write!(f, "{{{l},{k}}}"),
            Mark::Signed(l, k, s) => write!(f, "{{{l},{k},{s}}}"),
        }
    }
}

impl Serialize for Mark {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Mark::Single(k) => {
                let mut seq = s.serialize_seq(Some(1))?;
                seq.serialize_element(&k)?;
                seq.end()
            }
            Mark::Pair(l, k) => {
                let mut seq = s.serialize_seq(Some(2))?;
                seq.serialize_element(&l)?;
                seq.serialize_element(&k)?;
                seq.end()
            }
            Mark::Signed(l, k, sign) => {
                let mut seq = s.serialize_seq(Some(3))?;
                seq.serialize_element(&l)?;
                seq.serialize_element(&k)?;
                seq.serialize_element(&sign)?;
                seq.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Mark {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct MarkVisitor;

        impl<'de> Visitor<'de> for MarkVisitor {
            type Value = Mark;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("[k], [l,k] or [l,k,sign]")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Mark, A::Error> {
                let a: u32 = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let Some(b) = seq.next_element::<u32>()? else {
                    return Ok(Mark::Single(a));
                };
                let Some(sign) = seq.next_element::<Sign>()? else {
                    return Ok(Mark::Pair(a, b));
                };
                if seq.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(4, &self));
                }
                if sign == Sign::Zero {
                    return Err(de::Error::custom("a signed mark needs + or -"));
                }
                Ok(Mark::Signed(a, b, sign))
            }
        }

        d.deserialize_seq(MarkVisitor)
    }
}

/// `(Q_1, Q_2)`: a standard tableau and a set of marks. `q1` uses the
/// alphabet `[1, d]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AiQSymbol {
    pub q1: Tableau,
    pub q2: BTreeSet<Mark>,
}

impl fmt::Display for AiQSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{", self.q1)?;
        for (k, mark) in self.q2.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{mark}")?;
        }
        write!(f, "}})")
    }
}

/// The row (1-based) in which `big` has one more cell than `small`.
fn differing_row(small: &Partition, big: &Partition) -> usize {
    (1..=big.len()).find(|&r| big.part(r) > small.part(r)).expect("shapes differ by a cell")
}

/// One step of the RS^AI recording: how `Q_1, Q_2` change between `ρ^{k-1}`
/// and `ρ^k`.
fn record_step(
    q1: &mut Tableau,
    q2: &mut BTreeSet<Mark>,
    k: u32,
    prev: &Partition,
    cur: &Partition,
    sign: Sign,
) -> Result<()> {
    if prev == cur {
        q2.insert(Mark::Single(k));
    } else if covers(prev, cur) {
        q1.push_in_row(differing_row(prev, cur), k);
    } else if covers(cur, prev) {
        let row = differing_row(cur, prev);
        let (smaller, l) = q1.reverse_insert(row, prev.part(row) as usize)?;
        *q1 = smaller;
        q2.insert(match sign {
            Sign::Zero => Mark::Pair(l, k),
            s => Mark::Signed(l, k, s),
        });
    } else {
        return Err(Error::Internal(format!("shapes {prev} and {cur} are not adjacent")));
    }
    Ok(())
}

/// A snapshot after inserting `w_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RsAiStep {
    pub k: usize,
    pub letter: u32,
    /// `P(w_1, …, w_k)`.
    pub p: Tableau,
    /// `P^{AI,k}`.
    pub p_ai: Tableau,
    pub q: AiQSymbol,
    pub sign: Sign,
}

/// All intermediate symbols of RS^AI on `w`; entry 0 is the empty prefix.
pub fn rs_ai_transcript(w: &Word) -> Result<Vec<RsAiStep>> {
    let n = w.n();
    check_rank(n)?;
    let m = rank_m(n);
    let d = w.len() as u32;
    let mut p = Tableau::empty(n);
    let mut p_ai = Tableau::empty(n);
    let mut q1 = Tableau::empty(d);
    let mut q2 = BTreeSet::new();
    let mut out = vec![RsAiStep {
        k: 0,
        letter: 0,
        p: p.clone(),
        p_ai: p_ai.clone(),
        q: AiQSymbol { q1: q1.clone(), q2: q2.clone() },
        sign: Sign::Zero,
    }];
    for (idx, &l) in w.letters().iter().enumerate() {
        let k = idx as u32 + 1;
        p.insert_in_place(l);
        let next = std_unchecked(&p)?;
        let (prev, cur) = (p_ai.shape(), next.shape());
        let sign = if n.is_multiple_of(2) && prev.len() == m && cur.len() < m {
            if p_ai.insert(l).num_rows() > m {
                Sign::Plus
            } else {
                Sign::Minus
            }
        } else {
            Sign::Zero
        };
        record_step(&mut q1, &mut q2, k, &prev, &cur, sign)?;
        p_ai = next;
        out.push(RsAiStep {
            k: k as usize,
            letter: l,
            p: p.clone(),
            p_ai: p_ai.clone(),
            q: AiQSymbol { q1: q1.clone(), q2: q2.clone() },
            sign,
        });
    }
    Ok(out)
}

/// `P^AI(w) = std(P(w))`.
pub fn p_ai(w: &Word) -> Result<Tableau> {
    check_rank(w.n())?;
    std_unchecked(&crate::tableau::p_symbol(w))
}

/// `(Q^AI(w), ρ)` where `ρ` is the oscillating tableau of shapes `sh(P^{AI,k})`.
pub fn q_ai(w: &Word) -> Result<(AiQSymbol, OscillatingTableau)> {
    let steps = rs_ai_transcript(w)?;
    let ot = OscillatingTableau::new(w.n(), steps.iter().map(|s| Step::new(s.p_ai.shape(), s.sign)).collect())?;
    let q = steps.into_iter().last().expect("step 0 exists").q;
    Ok((q, ot))
}

/// `RS^AI(w) = (P^AI(w), oscillating tableau of w)`.
pub fn rs_ai(w: &Word) -> Result<(Tableau, OscillatingTableau)> {
    let steps = rs_ai_transcript(w)?;
    let ot = OscillatingTableau::new(w.n(), steps.iter().map(|s| Step::new(s.p_ai.shape(), s.sign)).collect())?;
    let p = steps.into_iter().last().expect("step 0 exists").p_ai;
    Ok((p, ot))
}

/// `Q(ρ)`, the encoding of an oscillating tableau.
pub fn ot_to_q(ot: &OscillatingTableau) -> Result<AiQSymbol> {
    ot.validate()?;
    let d = ot.len() as u32;
    let mut q1 = Tableau::empty(d);
    let mut q2 = BTreeSet::new();
    for (k, pair) in ot.steps().windows(2).enumerate() {
        record_step(&mut q1, &mut q2, k as u32 + 1, &pair[0].shape, &pair[1].shape, pair[1].sign)?;
    }
    Ok(AiQSymbol { q1, q2 })
}

fn invalid_q(msg: impl Into<String>) -> Error {
    Error::InvalidQSymbol(msg.into())
}

/// Inverse of [`ot_to_q`]: peels off the largest integer `d` and recovers
/// `(ρ^{d-1}, s^d)` at each step.
pub fn q_to_ot(n: u32, q: &AiQSymbol) -> Result<OscillatingTableau> {
    check_rank(n)?;
    let mut seen: Vec<u32> = q.q1.entries().collect();
    seen.extend(q.q2.iter().flat_map(Mark::integers));
    seen.sort_unstable();
    let d = seen.len() as u32;
    if seen.iter().copied().ne(1..=d) {
        return Err(invalid_q("integers must partition [1, d]"));
    }
    for mark in &q.q2 {
        if let Mark::Pair(l, k) | Mark::Signed(l, k, _) = *mark {
            if l >= k {
                return Err(invalid_q(format!("mark {mark} is not increasing")));
            }
        }
    }
    let mut q1 = Tableau::new(d, q.q1.rows().to_vec()).map_err(|e| invalid_q(e.to_string()))?;
    if !q1.is_standard() {
        return Err(invalid_q("Q_1 is not standard"));
    }
    let by_last: HashMap<u32, Mark> = q.q2.iter().map(|mk| (mk.last(), *mk)).collect();
    let mut rev_steps = vec![Step::new(q1.shape(), Sign::Zero)];
    for k in (1..=d).rev() {
        let sign = match by_last.get(&k) {
            Some(Mark::Single(_)) => Sign::Zero,
            Some(&Mark::Pair(l, _)) => {
                q1 = q1.insert(l);
                Sign::Zero
            }
            Some(&Mark::Signed(l, _, s)) => {
                q1 = q1.insert(l);
                s
            }
            None => {
                let row = q1
                    .rows()
                    .iter()
                    .position(|r| r.last() == Some(&k))
                    .ok_or_else(|| invalid_q(format!("{k} is not a corner of Q_1")))?;
                let mut rows = q1.rows().to_vec();
                rows[row].pop();
                if rows[row].is_empty() {
                    rows.pop();
                }
                q1 = Tableau::from_raw(d, rows);
                Sign::Zero
            }
        };
        rev_steps.last_mut().expect("nonempty").sign = sign;
        rev_steps.push(Step::new(q1.shape(), Sign::Zero));
    }
    rev_steps.reverse();
    let ot = OscillatingTableau::new(n, rev_steps).map_err(|e| invalid_q(e.to_string()))?;
    let back = ot_to_q(&ot)?;
    if back.q1.rows() != q.q1.rows() || back.q2 != q.q2 {
        return Err(invalid_q("not the encoding of any oscillating tableau"));
    }
    Ok(ot)
}

/// Inverse images of RS^AI, one oscillating tableau at a time.
///
/// The words with a fixed oscillating tableau form a single AI-component on
/// which `P^AI` is a bijection onto `SST_n^AI(ρ)`. A component is found by
/// extending a member of the component of the truncated tableau by one
/// letter, and is then indexed by `P^AI`. (`P^AI(w)` is not determined by
/// `P^AI` of the prefix and the last letter, so stepping backwards through
/// `std(T' ← l)` does not work.)
#[derive(Default)]
pub struct InverseCache {
    n: u32,
    fibers: HashMap<OscillatingTableau, HashMap<Tableau, Word>>,
}

impl InverseCache {
    pub fn new(n: u32) -> Self {
        InverseCache { n, fibers: HashMap::new() }
    }

    fn fiber(&mut self, ot: &OscillatingTableau) -> Result<&HashMap<Tableau, Word>> {
        for k in 0..=ot.len() {
            let target = ot.truncate(k);
            if self.fibers.contains_key(&target) {
                continue;
            }
            let seed = if k == 0 {
                Word::empty(self.n)
            } else {
                let prev = &self.fibers[&ot.truncate(k - 1)];
                let mut members: Vec<&Word> = prev.values().collect();
                members.sort();
                let mut found = None;
                'search: for w in members {
                    for l in 1..=self.n {
                        let longer = w.concat(&Word::from_raw(self.n, vec![l]));
                        if q_ai(&longer)?.1 == target {
                            found = Some(longer);
                            break 'search;
                        }
                    }
                }
                found.ok_or(Error::NoPreimage)?
            };
            let fiber = component_by_p_ai(seed, &target)?;
            self.fibers.insert(target, fiber);
        }
        Ok(&self.fibers[ot])
    }

    /// The unique `w` with `rs_ai(w) = (p, ot)`.
    pub fn invert(&mut self, p: &Tableau, ot: &OscillatingTableau) -> Result<Word> {
        let n = self.n;
        if p.n() != n || ot.n() != n {
            return Err(Error::RankMismatch { expected: n, found: if p.n() != n { p.n() } else { ot.n() } });
        }
        ot.validate()?;
        if !p.is_semistandard() || !is_ai_tableau(p) || &p.shape() != ot.shape() {
            return Err(Error::NoPreimage);
        }
        let w = self.fiber(ot)?.get(p).cloned().ok_or(Error::NoPreimage)?;
        if rs_ai(&w)? != (p.clone(), ot.clone()) {
            return Err(Error::Internal(format!("inverse of ({p}, {ot}) failed the forward check")));
        }
        Ok(w)
    }
}

/// The AI-component of `seed` in the words of its length, keyed by `P^AI`.
/// Every member must share the oscillating tableau `ot`.
fn component_by_p_ai(seed: Word, ot: &OscillatingTableau) -> Result<HashMap<Tableau, Word>> {
    let mut out = HashMap::new();
    for w in crate::ai::ai_component(seed) {
        let (p, q) = rs_ai(&w)?;
        if &q != ot {
            return Err(Error::Internal(format!("component of {w} meets two oscillating tableaux")));
        }
        if out.insert(p.clone(), w).is_some() {
            return Err(Error::Internal(format!("P^AI = {p} repeats in one component")));
        }
    }
    if out.len() != enumerate_sst_ai(ot.n(), ot.shape())?.len() {
        return Err(Error::Internal(format!("the component over {ot} is not a copy of SST^AI")));
    }
    Ok(out)
}

/// The unique word with `RS^AI(w) = (p, ot)`.
pub fn rs_ai_inverse(p: &Tableau, ot: &OscillatingTableau) -> Result<Word> {
    check_rank(p.n())?;
    InverseCache::new(p.n()).invert(p, ot)
}

/// Every oscillating tableau of length `d`, sorted.
pub fn enumerate_ot(n: u32, d: usize) -> Result<Vec<OscillatingTableau>> {
    check_rank(n)?;
    let m = rank_m(n);
    let mut out = Vec::new();
    let mut steps = vec![Step::new(Partition::empty(), Sign::Zero)];
    fn go(n: u32, m: usize, d: usize, steps: &mut Vec<Step>, out: &mut Vec<OscillatingTableau>) {
        if steps.len() == d + 1 {
            out.push(OscillatingTableau { n, steps: steps.clone() });
            return;
        }
        let prev = steps.last().expect("nonempty").shape.clone();
        let mut nexts: Vec<Partition> = prev
            .addable_corners()
            .into_iter()
            .filter_map(|(r, _)| prev.with_cell_added(r))
            .filter(|s| s.len() <= m)
            .collect();
        nexts.extend(prev.removable_corners().into_iter().filter_map(|(r, _)| prev.with_cell_removed(r)));
        if n % 2 == 1 && prev.len() == m {
            nexts.push(prev.clone());
        }
        for next in nexts {
            let signs: &[Sign] =
                if sign_required(n, &prev, &next) { &[Sign::Plus, Sign::Minus] } else { &[Sign::Zero] };
            for &s in signs {
                steps.push(Step::new(next.clone(), s));
                go(n, m, d, steps, out);
                steps.pop();
            }
        }
    }
    go(n, m, d, &mut steps, &mut out);
    out.sort();
    Ok(out)
}

/// `T(λ)`: entry `(i, j)` is `d_1 + ⋯ + d_{j-1} + i`.
pub fn t_lambda(lm: &Partition) -> Tableau {
    let d = lm.column_lengths();
    let mut offset = vec![0u32; d.len() + 1];
    for j in 0..d.len() {
        offset[j + 1] = offset[j] + d[j] as u32;
    }
    let rows = (1..=lm.len()).map(|i| (0..lm.part(i) as usize).map(|j| offset[j] + i as u32).collect()).collect();
    Tableau::from_raw(lm.size() as u32, rows)
}

/// `Q(Q')`: the gl Q-symbol of the words whose oscillating tableau is `ot`,
/// computed from the least element of `SST_n^AI(ρ)`.
pub fn q_of_ot(ot: &OscillatingTableau) -> Result<Tableau> {
    q_of_ot_with(&mut InverseCache::new(ot.n()), ot)
}

pub fn q_of_ot_with(cache: &mut InverseCache, ot: &OscillatingTableau) -> Result<Tableau> {
    let p = enumerate_sst_ai(ot.n(), ot.shape())?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal(format!("SST^AI({}) is empty", ot.shape())))?;
    Ok(rs(&cache.invert(&p, ot)?).1)
}

fn check_branch_input(n: u32, lm: &Partition) -> Result<()> {
    check_rank(n)?;
    if lm.len() > n as usize {
        return Err(Error::ShapeTooLong { len: lm.len(), max: n as usize });
    }
    Ok(())
}

/// The elements of `SST_n(λ)` grouped by the oscillating tableau of their
/// column reading, each paired with its `P^AI`.
pub fn branch_fibers(n: u32, lm: &Partition) -> Result<BTreeMap<OscillatingTableau, Vec<(Tableau, Tableau)>>> {
    check_branch_input(n, lm)?;
    let mut fibers: BTreeMap<OscillatingTableau, Vec<(Tableau, Tableau)>> = BTreeMap::new();
    for t in enumerate_ssyt(n, lm) {
        let (p, ot) = rs_ai(&t.column_reading())?;
        fibers.entry(ot).or_default().push((t, p));
    }
    Ok(fibers)
}

/// `[λ : ρ]` for every `ρ` that occurs, by grouping `SST_n(λ)`.
pub fn branch(n: u32, lm: &Partition) -> Result<BTreeMap<Partition, usize>> {
    let mut mult = BTreeMap::new();
    for ot in branch_fibers(n, lm)?.into_keys() {
        *mult.entry(ot.shape().clone()).or_insert(0) += 1;
    }
    Ok(mult)
}

/// `[λ : ρ]` as the number of oscillating tableaux `Q'` of length `|λ|`
/// with `Q(Q') = T(λ)`.
pub fn branch_by_ot(n: u32, lm: &Partition) -> Result<BTreeMap<Partition, usize>> {
    check_branch_input(n, lm)?;
    let target = t_lambda(lm);
    let mut cache = InverseCache::new(n);
    let mut mult = BTreeMap::new();
    for ot in enumerate_ot(n, lm.size())? {
        let q = q_of_ot_with(&mut cache, &ot)?;
        if q.rows() == target.rows() {
            *mult.entry(ot.shape().clone()).or_insert(0) += 1;
        }
    }
    Ok(mult)
}

/// One AI-connected component of `SST_n^AI(ρ) ⊗ SST_n(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorComponent {
    /// `sh(std(T ← l))` on the component.
    pub target: Partition,
    /// The `±` label, `0` outside the doubled case.
    pub sign: Sign,
    pub size: usize,
    /// `T ⊗ l ↦ std(T ← l)` maps the component bijectively onto
    /// `SST_n^AI(target)` and commutes with every `B̃_i` and `deg_i`.
    pub isomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorStepReport {
    pub n: u32,
    pub rho: Partition,
    pub components: Vec<TensorComponent>,
    /// The predicted `(σ, sign)` labels, sorted.
    pub expected: Vec<(Partition, Sign)>,
    pub matches: bool,
}

/// The predicted components of `SST_n^AI(ρ) ⊗ SST_n(1)`.
pub fn expected_tensor_step(n: u32, rho: &Partition) -> Result<Vec<(Partition, Sign)>> {
    check_rank(n)?;
    let m = rank_m(n);
    if rho.len() > m {
        return Err(Error::ShapeTooLong { len: rho.len(), max: m });
    }
    let last = rho.part(m);
    let mut out: Vec<(Partition, Sign)> = Vec::new();
    let neighbours = rho
        .addable_corners()
        .into_iter()
        .filter_map(|(r, _)| rho.with_cell_added(r))
        .chain(rho.removable_corners().into_iter().filter_map(|(r, _)| rho.with_cell_removed(r)))
        .filter(|s| s.len() <= m);
    if n.is_multiple_of(2) && last == 1 {
        out.extend(neighbours.filter(|s| s.len() == m).map(|s| (s, Sign::Zero)));
        let rho_prime = Partition::new(rho.parts()[..m - 1].to_vec())?;
        out.push((rho_prime.clone(), Sign::Plus));
        out.push((rho_prime, Sign::Minus));
    } else {
        out.extend(neighbours.map(|s| (s, Sign::Zero)));
        if n % 2 == 1 && last != 0 {
            out.push((rho.clone(), Sign::Zero));
        }
    }
    out.sort();
    Ok(out)
}

type Letter = Word;

fn insertion_image(n: u32, rho: &Partition, b: &AiTensor<Tableau, Letter>) -> Result<(Tableau, Sign)> {
    let m = rank_m(n);
    let inserted = b.left.insert(b.right.letters()[0]);
    let image = std_unchecked(&inserted)?;
    let doubled = n.is_multiple_of(2) && rho.len() == m && rho.part(m) == 1 && image.num_rows() < m;
    let sign = match (doubled, inserted.num_rows() > m) {
        (false, _) => Sign::Zero,
        (true, true) => Sign::Plus,
        (true, false) => Sign::Minus,
    };
    Ok((image, sign))
}

/// Computes the AI-components of `SST_n^AI(ρ) ⊗ SST_n(1)` with the tensor
/// rule and compares them against [`expected_tensor_step`].
pub fn tensor_step_decompose(n: u32, rho: &Partition) -> Result<TensorStepReport> {
    let expected = expected_tensor_step(n, rho)?;
    let left = enumerate_sst_ai(n, rho)?;
    let elements: Vec<AiTensor<Tableau, Letter>> =
        left.iter().flat_map(|t| (1..=n).map(move |l| AiTensor::new(t.clone(), Word::from_raw(n, vec![l])))).collect();
    let mut components = Vec::new();
    for comp in ai_components(&elements) {
        let images: Vec<(Tableau, Sign)> = comp.iter().map(|b| insertion_image(n, rho, b)).collect::<Result<_>>()?;
        let (target, sign) = (images[0].0.shape(), images[0].1);
        let uniform = images.iter().all(|(t, s)| t.shape() == target && *s == sign);
        let distinct: BTreeSet<&Tableau> = images.iter().map(|(t, _)| t).collect();
        let onto = distinct.len() == comp.len()
            && distinct.into_iter().cloned().eq(enumerate_sst_ai(n, &target)?.into_iter().collect::<BTreeSet<_>>());
        let mut morphism = true;
        for (b, (img, _)) in comp.iter().zip(&images) {
            for i in 1..n {
                let lhs = b.btil(i).map(|c| insertion_image(n, rho, &c)).transpose()?.map(|x| x.0);
                morphism &= lhs == img.btil(i) && b.deg(i) == img.deg(i);
            }
        }
        components.push(TensorComponent { target, sign, size: comp.len(), isomorphic: uniform && onto && morphism });
    }
    components.sort_by(|a, b| (&a.target, a.sign).cmp(&(&b.target, b.sign)));
    let mut labels: Vec<(Partition, Sign)> = components.iter().map(|c| (c.target.clone(), c.sign)).collect();
    labels.sort();
    let total: usize = components.iter().map(|c| c.size).sum();
    let matches = labels == expected && components.iter().all(|c| c.isomorphic) && total == left.len() * n as usize;
    Ok(TensorStepReport { n, rho: rho.clone(), components, expected, matches })
}
