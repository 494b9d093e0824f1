//! Exhaustive self-checks over small ranks and sizes, grouped into suites.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::ai::{ai_component, ch_ai, is_singular, rank_m, t_rho, AiCrystal};
use crate::gl::GlCrystal;
use crate::kmatrix::{enumerate_sst_ai, is_ai_tableau, k1, k_complement, std};
use crate::partition::Partition;
use crate::rsai::{
    branch_by_ot, branch_fibers, enumerate_ot, ot_to_q, q_to_ot, rs_ai, tensor_step_decompose, InverseCache,
};
use crate::tableau::{enumerate_ssyt, Tableau, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    Counts,
    Kmatrix,
    Connectivity,
    Singular,
    Rsai,
    Tensor,
    Branch,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Axioms,
        Suite::Counts,
        Suite::Kmatrix,
        Suite::Connectivity,
        Suite::Singular,
        Suite::Rsai,
        Suite::Tensor,
        Suite::Branch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Counts => "counts",
            Suite::Kmatrix => "kmatrix",
            Suite::Connectivity => "connectivity",
            Suite::Singular => "singular",
            Suite::Rsai => "rsai",
            Suite::Tensor => "tensor",
            Suite::Branch => "branch",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: u32,
    pub max_size: u32,
    pub max_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 4, max_size: 4, max_len: 4 }
    }
}

/// One named property, with the number of instances checked and the first
/// counterexample if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAIL" };
        write!(f, "{status} {}::{} ({} cases)", self.suite, self.name, self.cases)?;
        if let Some(msg) = &self.first_failure {
            write!(f, ": {} failures, first: {msg}", self.failures)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Collects checks for one suite, keeping insertion order.
struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
    index: BTreeMap<String, usize>,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder { suite: suite.name(), checks: Vec::new(), index: BTreeMap::new() }
    }

    fn slot(&mut self, name: &str) -> &mut Check {
        let k = match self.index.get(name) {
            Some(&k) => k,
            None => {
                self.checks.push(Check {
                    suite: self.suite,
                    name: name.to_string(),
                    cases: 0,
                    failures: 0,
                    first_failure: None,
                });
                self.index.insert(name.to_string(), self.checks.len() - 1);
                self.checks.len() - 1
            }
        };
        &mut self.checks[k]
    }

    fn check(&mut self, name: &str, ok: bool, describe: impl FnOnce() -> String) {
        let c = self.slot(name);
        c.cases += 1;
        if !ok {
            c.failures += 1;
            if c.first_failure.is_none() {
                c.first_failure = Some(describe());
            }
        }
    }

    fn error(&mut self, name: &str, e: crate::Error) {
        self.check(name, false, || e.to_string());
    }

    fn finish(self) -> Vec<Check> {
        self.checks
    }
}

fn shapes(max_size: u32, max_len: usize) -> Vec<Partition> {
    Partition::all_up_to(max_size, max_len)
}

fn ranks(limits: &Limits) -> std::ops::RangeInclusive<u32> {
    3..=limits.max_n
}

pub fn run(suite: Suite, limits: &Limits) -> Report {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut checks = Vec::new();
    for s in suites {
        checks.extend(match s {
            Suite::Axioms => axioms(limits),
            Suite::Counts => counts(limits),
            Suite::Kmatrix => kmatrix(limits),
            Suite::Connectivity => connectivity(limits),
            Suite::Singular => singular(limits),
            Suite::Rsai => rsai(limits),
            Suite::Tensor => tensor(limits),
            Suite::Branch => branch(limits),
            Suite::All => unreachable!(),
        });
    }
    Report { checks }
}

fn axioms(limits: &Limits) -> Vec<Check> {
    let mut r = Recorder::new(Suite::Axioms);
    for n in ranks(limits) {
        for lm in shapes(limits.max_size, n as usize) {
            for b in enumerate_ssyt(n, &lm) {
                gl_axioms(&mut r, &b);
                ai_axioms(&mut r, &b);
            }
        }
    }
    r.finish()
}

fn gl_axioms(r: &mut Recorder, b: &Tableau) {
    let n = b.n();
    for i in 1..n {
        if let Some(f) = b.ftil(i) {
            r.check("e inverts f", f.etil(i).as_ref() == Some(b), || format!("{b}, i={i}"));
        }
        if let Some(e) = b.etil(i) {
            r.check("f inverts e", e.ftil(i).as_ref() == Some(b), || format!("{b}, i={i}"));
        }
        let pairing = b.phi(i) as i32 - b.eps(i) as i32 == b.weight().pair_simple_root(i);
        r.check("phi - eps = <wt, alpha>", pairing, || format!("{b}, i={i}"));
        let mut string = 0;
        let mut c = b.clone();
        while let Some(x) = c.etil(i) {
            c = x;
            string += 1;
        }
        r.check("eps is the e-string length", string == b.eps(i), || format!("{b}, i={i}"));
    }
}

fn ai_axioms(r: &mut Recorder, b: &Tableau) {
    let n = b.n();
    for i in 1..n {
        let bi = b.btil(i);
        r.check("btil absent iff deg 0", bi.is_none() == (b.deg(i) == 0), || format!("{b}, i={i}"));
        let Some(c) = bi else { continue };
        r.check("btil involutive", c.btil(i).as_ref() == Some(b), || format!("{b}, i={i}"));
        r.check("btil preserves deg", c.deg(i) == b.deg(i), || format!("{b}, i={i}"));
        for j in 1..n {
            let diff = c.deg(j) as i32 - b.deg(j) as i32;
            if i.abs_diff(j) == 1 {
                r.check("neighbour deg shifts by one", diff.abs() == 1, || format!("{b}, i={i}, j={j}"));
            } else if i.abs_diff(j) > 1 {
                r.check("distant deg unchanged", diff == 0, || format!("{b}, i={i}, j={j}"));
                let lhs = c.btil(j);
                let rhs = b.btil(j).and_then(|x| x.btil(i));
                r.check("distant btil commute", lhs == rhs, || format!("{b}, i={i}, j={j}"));
            }
        }
    }
}

fn counts(limits: &Limits) -> Vec<Check> {
    let mut r = Recorder::new(Suite::Counts);
    let count =
        |n: u32, parts: Vec<u32>| -> crate::Result<usize> { Ok(enumerate_sst_ai(n, &Partition::new(parts)?)?.len()) };
    for l in 0..=limits.max_size {
        match count(3, vec![l]) {
            Ok(c) => r.check("n=3 one row", c == 2 * l as usize + 1, || format!("l={l}: {c}")),
            Err(e) => r.error("n=3 one row", e),
        }
        if limits.max_n < 4 {
            continue;
        }
        match count(4, vec![l]) {
            Ok(c) => r.check("n=4 one row", c == (l as usize + 1).pow(2), || format!("l={l}: {c}")),
            Err(e) => r.error("n=4 one row", e),
        }
        for l2 in 1..=l {
            let expected = 2 * (l - l2 + 1) as usize * (l + l2 + 1) as usize;
            match count(4, vec![l, l2]) {
                Ok(c) => r.check("n=4 two rows", c == expected, || format!("({l},{l2}): {c}")),
                Err(e) => r.error("n=4 two rows", e),
            }
        }
    }
    r.finish()
}

fn kmatrix(limits: &Limits) -> Vec<Check> {
    let mut r = Recorder::new(Suite::Kmatrix);
    for n in ranks(limits) {
        for mask in 0u32..1 << n {
            let col: Vec<u32> = (1..=n).filter(|x| mask & (1 << (x - 1)) != 0).collect();
            let twice = k_complement(&col, n).and_then(|c| k_complement(&c, n));
            r.check("complement is an involution", twice.as_ref() == Ok(&col), || format!("{col:?}"));
        }
        for lm in shapes(limits.max_size, n as usize) {
            for t in enumerate_ssyt(n, &lm) {
                k1_checks(&mut r, &t);
            }
        }
    }
    r.finish()
}

fn k1_checks(r: &mut Recorder, t: &Tableau) {
    let n = t.n();
    let (k, s) = match (k1(t), std(t)) {
        (Ok(k), Ok(s)) => (k, s),
        (Err(e), _) | (_, Err(e)) => return r.error("k1 and std defined", e),
    };
    let grow = k.size() as i64 - t.size() as i64;
    r.check("k1 size change", grow == n as i64 - 2 * t.num_rows() as i64, || format!("{t}"));
    r.check("std is an AI-tableau", is_ai_tableau(&s), || format!("{t}"));
    if is_ai_tableau(t) {
        r.check("k1 involutive on AI-tableaux", k1(&k).as_ref() == Ok(t), || format!("{t}"));
        r.check("std fixes AI-tableaux", &s == t, || format!("{t}"));
    }
    for i in 1..n {
        let k_after = t.btil(i).map(|x| k1(&x)).transpose();
        r.check("k1 commutes with btil", k_after == Ok(k.btil(i)), || format!("{t}, i={i}"));
        r.check("k1 preserves deg", k.deg(i) == t.deg(i), || format!("{t}, i={i}"));
        let s_after = t.btil(i).map(|x| std(&x)).transpose();
        r.check("std commutes with btil", s_after == Ok(s.btil(i)), || format!("{t}, i={i}"));
        r.check("std preserves deg", s.deg(i) == t.deg(i), || format!("{t}, i={i}"));
        if is_ai_tableau(t) {
            let closed = t.btil(i).is_none_or(|x| is_ai_tableau(&x));
            r.check("AI-tableaux closed under btil", closed, || format!("{t}, i={i}"));
        }
    }
}

fn ai_shapes(n: u32, max_size: u32) -> Vec<Partition> {
    shapes(max_size, rank_m(n))
}

fn connectivity(limits: &Limits) -> Vec<Check> {
    let mut r = Recorder::new(Suite::Connectivity);
    for n in ranks(limits) {
        for rho in ai_shapes(n, limits.max_size) {
            let (all, t) = match (enumerate_sst_ai(n, &rho), t_rho(n, &rho)) {
                (Ok(a), Ok(t)) => (a, t),
                (Err(e), _) | (_, Err(e)) => {
                    r.error("component of T_rho", e);
                    continue;
                }
            };
            let comp: Vec<Tableau> = ai_component(t).into_iter().collect();
            r.check("component of T_rho", comp == all, || format!("n={n}, rho={rho}: {} of {}", comp.len(), all.len()));
        }
    }
    r.finish()
}

/// `(deg_1, deg_3, …)` as a partition, if it is one.
fn degree_shape(b: &Tableau) -> Option<Partition> {
    let m = rank_m(b.n());
    let degs: Vec<u32> = (1..=m as u32).map(|i| b.deg(2 * i - 1)).collect();
    if degs.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Partition::new(degs).ok()
}

fn singular(limits: &Limits) -> Vec<Check> {
    let mut r = Recorder::new(Suite::Singular);
    for n in ranks(limits) {
        let m = rank_m(n);
        for rho in ai_shapes(n, limits.max_size) {
            let (all, t) = match (enumerate_sst_ai(n, &rho), t_rho(n, &rho)) {
                (Ok(a), Ok(t)) => (a, t),
                (Err(e), _) | (_, Err(e)) => {
                    r.error("singular classification", e);
                    continue;
                }
            };
            // condition 1 pins σ down to the odd degrees, so one test per
            // element covers every σ
            let mut found: BTreeMap<Partition, BTreeSet<Tableau>> = BTreeMap::new();
            for b in &all {
                if let Some(sigma) = degree_shape(b) {
                    if is_singular(b, &sigma) {
                        found.entry(sigma).or_default().insert(b.clone());
                    }
                }
            }
            let mut expected = BTreeSet::from([t.clone()]);
            if n % 2 == 0 && rho.len() == m {
                match k1(&t) {
                    Ok(k) => {
                        expected.insert(k.clone());
                        let mut c = Some(t.clone());
                        for i in 1..=m as u32 {
                            c = c.and_then(|x| x.btil(2 * i - 1));
                        }
                        r.check("k1 of T_rho via odd btil", c == Some(k), || format!("n={n}, rho={rho}"));
                    }
                    Err(e) => r.error("k1 of T_rho via odd btil", e),
                }
            }
            let want = BTreeMap::from([(rho.clone(), expected)]);
            r.check("singular classification", found == want, || format!("n={n}, rho={rho}: {found:?}"));
        }
    }
    r.finish()
}

fn rsai(limits: &Limits) -> Vec<Check> {
    let mut r = Recorder::new(Suite::Rsai);
    for n in ranks(limits) {
        let mut cache = InverseCache::new(n);
        for d in 0..=limits.max_len {
            let mut images = BTreeSet::new();
            for w in Word::all(n, d) {
                let (p, ot) = match rs_ai(&w) {
                    Ok(x) => x,
                    Err(e) => {
                        r.error("rs_ai defined", e);
                        continue;
                    }
                };
                r.check("P is an AI-tableau of the final shape", is_ai_tableau(&p) && p.shape() == *ot.shape(), || {
                    format!("{w}")
                });
                let back = cache.invert(&p, &ot);
                r.check("inverse round trip", back.as_ref() == Ok(&w), || format!("{w}: {back:?}"));
                let q = ot_to_q(&ot).and_then(|q| q_to_ot(n, &q));
                r.check("Q symbol round trip", q.as_ref() == Ok(&ot), || format!("{w}"));
                for i in 1..n {
                    let image = w.btil(i).map(|x| rs_ai(&x)).transpose();
                    let want = p.btil(i).map(|bp| (bp, ot.clone()));
                    r.check("btil equivariance", image.as_ref() == Ok(&want), || format!("{w}, i={i}"));
                }
                images.insert((p, ot));
            }
            r.check("injective", images.len() == (n as usize).pow(d as u32), || format!("n={n}, d={d}"));
            let counted = enumerate_ot(n, d).and_then(|ots| {
                ots.iter().map(|ot| enumerate_sst_ai(n, ot.shape()).map(|s| s.len())).sum::<crate::Result<usize>>()
            });
            r.check("image count", counted == Ok(images.len()), || format!("n={n}, d={d}: {counted:?}"));
        }
    }
    r.finish()
}

fn tensor(limits: &Limits) -> Vec<Check> {
    let mut r = Recorder::new(Suite::Tensor);
    for n in ranks(limits) {
        for rho in ai_shapes(n, limits.max_size) {
            match tensor_step_decompose(n, &rho) {
                Ok(rep) => {
                    r.check("components match the prediction", rep.matches, || format!("n={n}, rho={rho}: {rep:?}"))
                }
                Err(e) => r.error("components match the prediction", e),
            }
        }
    }
    r.finish()
}

fn branch(limits: &Limits) -> Vec<Check> {
    let mut r = Recorder::new(Suite::Branch);
    for n in ranks(limits) {
        for lm in shapes(limits.max_size, n as usize) {
            if let Err(e) = branch_shape(&mut r, n, &lm) {
                r.error("branching defined", e);
            }
        }
    }
    r.finish()
}

fn branch_shape(r: &mut Recorder, n: u32, lm: &Partition) -> crate::Result<()> {
    let fibers = branch_fibers(n, lm)?;
    let mut mult: BTreeMap<Partition, usize> = BTreeMap::new();
    for (ot, members) in &fibers {
        let images: BTreeSet<Tableau> = members.iter().map(|(_, p)| p.clone()).collect();
        let target: BTreeSet<Tableau> = enumerate_sst_ai(n, ot.shape())?.into_iter().collect();
        r.check("fiber bijects onto SST^AI", images.len() == members.len() && images == target, || {
            format!("n={n}, lambda={lm}, {ot}")
        });
        *mult.entry(ot.shape().clone()).or_insert(0) += 1;
    }
    let all = enumerate_ssyt(n, lm);
    let mut rhs = ch_ai(n, &[] as &[Tableau]);
    for (rho, &k) in &mult {
        let part = ch_ai(n, &enumerate_sst_ai(n, rho)?);
        for _ in 0..k {
            rhs = &rhs + &part;
        }
    }
    r.check("character identity", ch_ai(n, &all) == rhs, || format!("n={n}, lambda={lm}"));
    let by_ot = branch_by_ot(n, lm)?;
    r.check("multiplicities agree with the Q-symbol count", by_ot == mult, || {
        format!("n={n}, lambda={lm}: {mult:?} vs {by_ot:?}")
    });
    Ok(())
}
