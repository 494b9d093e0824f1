//! Independent reference implementations used only by the tests. Nothing
//! here calls into the library except for type conversions.
#![allow(dead_code)]

use std::collections::BTreeMap;

use aicrystal::{LaurentPolynomial, Partition, Tableau};

pub type Rows = Vec<Vec<u32>>;

/// Integer Laurent polynomial, exponent vector to coefficient.
pub type Poly = BTreeMap<Vec<i32>, i64>;

pub fn add_term(p: &mut Poly, e: Vec<i32>, c: i64) {
    let entry = p.entry(e.clone()).or_insert(0);
    *entry += c;
    if *entry == 0 {
        p.remove(&e);
    }
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_term(&mut out, e, ca * cb);
        }
    }
    out
}

/// Exact division by repeatedly cancelling the lexicographically largest term.
pub fn div_exact(num: &Poly, den: &Poly) -> Poly {
    let (lead_e, &lead_c) = den.iter().next_back().expect("nonzero divisor");
    let mut rem = num.clone();
    let mut quot = Poly::new();
    let mut guard = 0;
    while let Some((e, &c)) = rem.iter().next_back() {
        assert_eq!(c % lead_c, 0, "inexact leading coefficient");
        let qe: Vec<i32> = e.iter().zip(lead_e).map(|(x, y)| x - y).collect();
        let qc = c / lead_c;
        add_term(&mut quot, qe.clone(), qc);
        let term = Poly::from([(qe, qc)]);
        for (pe, pc) in mul(&term, den) {
            add_term(&mut rem, pe, -pc);
        }
        guard += 1;
        assert!(guard < 1_000_000, "division does not terminate");
    }
    quot
}

pub fn from_library(p: &LaurentPolynomial) -> Poly {
    p.to_integer_coeffs().expect("integral polynomial").into_iter().collect()
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<(Vec<usize>, i64)>) {
        if prefix.len() == k {
            let mut inv = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if prefix[i] > prefix[j] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for x in 0..k {
            if !prefix.contains(&x) {
                prefix.push(x);
                go(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), k, &mut out);
    out
}

/// `Σ_w sgn(w) e^{w v}` over the Weyl group of type B_m (all sign changes)
/// or D_m (even sign changes).
fn alternant(v: &[i32], even_flips_only: bool) -> Poly {
    let m = v.len();
    let mut out = Poly::new();
    for (perm, sgn) in permutations(m) {
        for mask in 0u32..1 << m {
            if even_flips_only && mask.count_ones() % 2 == 1 {
                continue;
            }
            let mut e = vec![0; m];
            let mut sign = sgn;
            for i in 0..m {
                let s = if mask & (1 << i) != 0 { -1 } else { 1 };
                if s < 0 && !even_flips_only {
                    sign = -sign;
                }
                e[i] = s * v[perm[i]];
            }
            add_term(&mut out, e, sign);
        }
    }
    out
}

/// Weyl character of the irreducible so_n-module of highest weight `nu`,
/// in variables `e^{ε_1}, …, e^{ε_m}`.
pub fn so_character(n: u32, nu: &[i32]) -> Poly {
    let m = (n / 2) as usize;
    assert_eq!(nu.len(), m);
    // exponents are doubled so that the type B half-integers stay integral
    let rho2: Vec<i32> =
        (0..m).map(|i| if n % 2 == 1 { 2 * (m - i) as i32 - 1 } else { 2 * (m - 1 - i) as i32 }).collect();
    let shifted: Vec<i32> = nu.iter().zip(&rho2).map(|(x, r)| 2 * x + r).collect();
    let even = n.is_multiple_of(2);
    let doubled = div_exact(&alternant(&shifted, even), &alternant(&rho2, even));
    doubled
        .into_iter()
        .map(|(e, c)| {
            assert!(e.iter().all(|x| x % 2 == 0));
            (e.into_iter().map(|x| x / 2).collect(), c)
        })
        .collect()
}

/// The so_n character attached to a shape: `V(ν_ρ)`, or `V(ν^+) ⊕ V(ν^-)`
/// when `n` is even and `ℓ(ρ) = n/2`.
pub fn so_character_of_shape(n: u32, rho: &[u32]) -> Poly {
    let m = (n / 2) as usize;
    let mut nu: Vec<i32> = rho.iter().map(|&x| x as i32).collect();
    nu.resize(m, 0);
    if n.is_multiple_of(2) && rho.len() == m && m > 0 {
        let mut minus = nu.clone();
        minus[m - 1] = -minus[m - 1];
        let mut out = so_character(n, &nu);
        for (e, c) in so_character(n, &minus) {
            add_term(&mut out, e, c);
        }
        out
    } else {
        so_character(n, &nu)
    }
}

/// Schur polynomial `s_λ(x_1, …, x_n)` as a bialternant.
pub fn schur(n: u32, lambda: &[u32]) -> Poly {
    let n = n as usize;
    let mut lam: Vec<i32> = lambda.iter().map(|&x| x as i32).collect();
    if lam.len() > n {
        return Poly::new();
    }
    lam.resize(n, 0);
    let alt = |v: &[i32]| {
        let mut out = Poly::new();
        for (perm, sgn) in permutations(n) {
            let e: Vec<i32> = (0..n).map(|i| v[perm[i]]).collect();
            add_term(&mut out, e, sgn);
        }
        out
    };
    let delta: Vec<i32> = (0..n).map(|j| (n - 1 - j) as i32).collect();
    let top: Vec<i32> = lam.iter().zip(&delta).map(|(a, b)| a + b).collect();
    div_exact(&alt(&top), &alt(&delta))
}

/// Every filling of `shape` by `[1, n]` with weakly increasing rows and
/// strictly increasing columns, sorted by the concatenated rows.
pub fn brute_ssyt(n: u32, shape: &[u32]) -> Vec<Rows> {
    let size: usize = shape.iter().map(|&x| x as usize).sum();
    let mut out = Vec::new();
    let mut cells = vec![1u32; size];
    if n == 0 {
        return if size == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    loop {
        let mut rows = Vec::new();
        let mut k = 0;
        for &len in shape {
            rows.push(cells[k..k + len as usize].to_vec());
            k += len as usize;
        }
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (1..rows.len()).all(|r| (0..rows[r].len()).all(|c| rows[r - 1][c] < rows[r][c]));
        if rows_ok && cols_ok {
            out.push(rows);
        }
        // odometer
        let mut pos = size;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cells[pos] < n {
                cells[pos] += 1;
                for c in &mut cells[pos + 1..] {
                    *c = 1;
                }
                break;
            }
        }
    }
}

pub fn columns(rows: &Rows) -> Vec<Vec<u32>> {
    let width = rows.first().map_or(0, Vec::len);
    (0..width).map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect()).collect()
}

/// Column reading: each column bottom to top, columns left to right.
pub fn column_word(rows: &Rows) -> Vec<u32> {
    columns(rows).into_iter().flat_map(|c| c.into_iter().rev()).collect()
}

/// Schensted P-symbol.
pub fn schensted(word: &[u32]) -> Rows {
    let mut rows: Rows = Vec::new();
    for &l in word {
        let mut x = l;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&y| y > x) {
                Some(p) => x = std::mem::replace(&mut row[p], x),
                None => {
                    row.push(x);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![x]);
        }
    }
    rows
}

/// `K_1`: complement the first column, then straighten.
pub fn k1(rows: &Rows, n: u32) -> Rows {
    let cols = columns(rows);
    let first: Vec<u32> = cols.first().cloned().unwrap_or_default();
    let mut word: Vec<u32> = (1..=n).filter(|x| !first.contains(x)).rev().collect();
    for c in cols.iter().skip(1) {
        word.extend(c.iter().rev());
    }
    schensted(&word)
}

pub fn is_ai(rows: &Rows, n: u32) -> bool {
    let cols = columns(rows);
    let Some(first) = cols.first() else { return true };
    if first.len() > (n / 2) as usize {
        return false;
    }
    let comp: Vec<u32> = (1..=n).filter(|x| !first.contains(x)).collect();
    cols.get(1).is_none_or(|second| comp.iter().zip(second).all(|(a, b)| a <= b))
}

pub fn brute_sst_ai(n: u32, shape: &[u32]) -> Vec<Rows> {
    brute_ssyt(n, shape).into_iter().filter(|r| is_ai(r, n)).collect()
}

/// `(ε_i, φ_i)` of a word by the tensor rule applied letter by letter.
pub fn tensor_eps_phi(word: &[u32], i: u32) -> (u32, u32) {
    match word.split_first() {
        None => (0, 0),
        Some((&x, rest)) => {
            let (e1, p1) = ((x == i + 1) as u32, (x == i) as u32);
            let (e2, p2) = tensor_eps_phi(rest, i);
            // unmatched i+1 of x pair with unmatched i of rest
            let eps = e2 + e1.saturating_sub(p2);
            let phi = p1 + p2.saturating_sub(e1);
            (eps, phi)
        }
    }
}

/// `F̃_i` by the tensor rule: act on the first factor iff `ε(x) >= φ(rest)`.
pub fn tensor_ftil(word: &[u32], i: u32) -> Option<Vec<u32>> {
    let (&x, rest) = word.split_first()?;
    let e1 = (x == i + 1) as u32;
    let (_, p2) = tensor_eps_phi(rest, i);
    if e1 >= p2 {
        (x == i).then(|| std::iter::once(i + 1).chain(rest.iter().copied()).collect())
    } else {
        tensor_ftil(rest, i).map(|r| std::iter::once(x).chain(r).collect())
    }
}

/// `Ẽ_i` by the tensor rule: act on the first factor iff `ε(x) > φ(rest)`.
pub fn tensor_etil(word: &[u32], i: u32) -> Option<Vec<u32>> {
    let (&x, rest) = word.split_first()?;
    let e1 = (x == i + 1) as u32;
    let (_, p2) = tensor_eps_phi(rest, i);
    if e1 > p2 {
        Some(std::iter::once(i).chain(rest.iter().copied()).collect())
    } else {
        tensor_etil(rest, i).map(|r| std::iter::once(x).chain(r).collect())
    }
}

/// Induced AI operators using the tensor-rule gl operators.
pub fn ai_deg(word: &[u32], i: u32) -> u32 {
    let (e, p) = tensor_eps_phi(word, i);
    e + p % 2
}

pub fn ai_btil(word: &[u32], i: u32) -> Option<Vec<u32>> {
    if tensor_eps_phi(word, i).1.is_multiple_of(2) {
        tensor_etil(word, i)
    } else {
        tensor_ftil(word, i)
    }
}

/// `B̃_i` on a tableau via its column word.
pub fn ai_btil_tab(rows: &Rows, i: u32) -> Option<Rows> {
    ai_btil(&column_word(rows), i).map(|w| schensted(&w))
}

/// Number of so_n-oscillating tableaux of each final shape, by dynamic
/// programming over the rules of a single step.
pub fn count_ot(n: u32, d: usize) -> BTreeMap<Vec<u32>, u64> {
    let m = (n / 2) as usize;
    let mut cur: BTreeMap<Vec<u32>, u64> = BTreeMap::from([(Vec::new(), 1)]);
    for _ in 0..d {
        let mut next: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for (shape, &count) in &cur {
            let mut targets: Vec<Vec<u32>> = Vec::new();
            for r in 0..=shape.len() {
                let mut s = shape.clone();
                if r == s.len() {
                    s.push(1);
                } else {
                    s[r] += 1;
                }
                if s.len() <= m && (r == 0 || s[r] <= s[r - 1]) {
                    targets.push(s);
                }
            }
            for r in 0..shape.len() {
                let mut s = shape.clone();
                s[r] -= 1;
                if r + 1 == s.len() || s[r] >= s[r + 1] {
                    while s.last() == Some(&0) {
                        s.pop();
                    }
                    targets.push(s);
                }
            }
            if n % 2 == 1 && shape.len() == m {
                targets.push(shape.clone());
            }
            for t in targets {
                let signs = if n.is_multiple_of(2) && shape.len() == m && t.len() + 1 == m { 2 } else { 1 };
                *next.entry(t).or_insert(0) += count * signs;
            }
        }
        cur = next;
    }
    cur
}

/// `T_ρ`, row `i` being `a, 2i, …, 2i` with `a = 2i-1` iff `δ_i = 1`,
/// `δ_i = (ρ_i - δ_{i+1}) mod 2`.
pub fn t_rho(rho: &[u32]) -> Rows {
    let l = rho.len();
    let mut delta = vec![0u32; l + 1];
    for i in (0..l).rev() {
        delta[i] = (rho[i] + delta[i + 1]) % 2;
    }
    (0..l)
        .map(|i| {
            let two_i = 2 * (i as u32 + 1);
            let mut row = vec![two_i; rho[i] as usize];
            if delta[i] == 1 {
                row[0] = two_i - 1;
            }
            row
        })
        .collect()
}

/// The low-rank tables: each listed element with its predicted `B̃_i`
/// for `i = 1, …, n-1`.
pub type ActionTable = Vec<(Rows, Vec<Option<Rows>>)>;

fn row_of(a: u32, twos: u32, threes: u32, fours: u32) -> Vec<u32> {
    let mut r = vec![a];
    r.extend(std::iter::repeat_n(2, twos as usize));
    r.extend(std::iter::repeat_n(3, threes as usize));
    r.extend(std::iter::repeat_n(4, fours as usize));
    r
}

fn other(a: u32) -> u32 {
    3 - a
}

fn even(x: i64) -> bool {
    x.rem_euclid(2) == 0
}

/// `SST_3^AI(l)`.
pub fn table_sst3(l: u32) -> ActionTable {
    let t_ab = |a: u32, b: u32| vec![row_of(a, l - 1 - b, b, 0)];
    let t_l: Rows = if l == 0 { Vec::new() } else { vec![vec![3; l as usize]] };
    let mut out = Vec::new();
    for a in 1..=2 {
        for b in 0..l {
            let b1 = Some(t_ab(other(a), b));
            let par = l as i64 - (a == 1) as i64 - b as i64;
            let b2 = if even(par) {
                (b > 0).then(|| t_ab(a, b - 1))
            } else if b < l - 1 {
                Some(t_ab(a, b + 1))
            } else {
                Some(t_l.clone())
            };
            out.push((t_ab(a, b), vec![b1, b2]));
        }
    }
    let b2 = (l > 0).then(|| t_ab(2, l - 1));
    out.push((t_l, vec![None, b2]));
    out
}

/// `SST_4^AI(l)`.
pub fn table_sst4_row(l: u32) -> ActionTable {
    let t_abc = |a: u32, b: u32, c: u32| vec![row_of(a, l - 1 - b - c, b, c)];
    let t_c = |c: u32| -> Rows {
        let mut row = vec![3; (l - c) as usize];
        row.extend(std::iter::repeat_n(4, c as usize));
        if row.is_empty() {
            Vec::new()
        } else {
            vec![row]
        }
    };
    let mut out = Vec::new();
    for a in 1..=2 {
        for c in 0..l {
            for b in 0..l - c {
                let b1 = Some(t_abc(other(a), b, c));
                let par = l as i64 - (a == 1) as i64 - b as i64 - c as i64;
                let b2 = if even(par) {
                    (b > 0).then(|| t_abc(a, b - 1, c))
                } else if b < l - c - 1 {
                    Some(t_abc(a, b + 1, c))
                } else {
                    Some(t_c(c))
                };
                let b3 =
                    if b % 2 == 0 { (c > 0).then(|| t_abc(a, b + 1, c - 1)) } else { Some(t_abc(a, b - 1, c + 1)) };
                out.push((t_abc(a, b, c), vec![b1, b2, b3]));
            }
        }
    }
    for c in 0..=l {
        let b2 = (l > c).then(|| t_abc(2, l - c - 1, c));
        let b3 = if even((l - c) as i64) { (c > 0).then(|| t_c(c - 1)) } else { Some(t_c(c + 1)) };
        out.push((t_c(c), vec![None, b2, b3]));
    }
    out
}

/// `SST_4^AI(l1, l2)` with `l1 >= l2 > 0`. The elements `K_1(T)` are
/// predicted through `B̃_i K_1 = K_1 B̃_i`.
pub fn table_sst4_two_rows(l1: u32, l2: u32) -> ActionTable {
    assert!(l1 >= l2 && l2 > 0);
    let second = vec![4; l2 as usize];
    let t_abc = |a: u32, b: u32, c: u32| vec![row_of(a, l1 - 1 - b - c, b, c), second.clone()];
    let t_c = |c: u32| -> Rows {
        let mut first = vec![3; (l1 - c) as usize];
        first.extend(std::iter::repeat_n(4, c as usize));
        vec![first, second.clone()]
    };
    let mut base: ActionTable = Vec::new();
    for a in 1..=2 {
        for c in 0..=l1 - l2 {
            for b in 0..l1 - c {
                let b1 = Some(t_abc(other(a), b, c));
                let par = l1 as i64 - (a == 1) as i64 - b as i64 - c as i64;
                let b2 = if even(par) {
                    (b > 0).then(|| t_abc(a, b - 1, c))
                } else if b < l1 - c - 1 {
                    Some(t_abc(a, b + 1, c))
                } else {
                    Some(t_c(c))
                };
                let b3 = if b < l2 {
                    Some(k1(&t_abc(other(a), b, c), 4))
                } else if even((b - l2) as i64) {
                    (c > 0).then(|| t_abc(a, b + 1, c - 1))
                } else {
                    Some(t_abc(a, b - 1, c + 1))
                };
                base.push((t_abc(a, b, c), vec![b1, b2, b3]));
            }
        }
    }
    for c in 0..=l1 - l2 {
        let b2 = Some(t_abc(2, l1 - c - 1, c));
        let b3 = if even((l1 - l2 - c) as i64) { (c > 0).then(|| t_c(c - 1)) } else { Some(t_c(c + 1)) };
        base.push((t_c(c), vec![None, b2, b3]));
    }
    let mut out = base.clone();
    for (t, acts) in base {
        let image = acts.into_iter().map(|x| x.map(|r| k1(&r, 4))).collect();
        out.push((k1(&t, 4), image));
    }
    out
}

pub fn tab(n: u32, rows: &Rows) -> Tableau {
    Tableau::semistandard(n, rows.clone()).expect("oracle produced a semistandard tableau")
}

pub fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

/// Partitions of size at most `max_size` with at most `max_len` parts.
pub fn partitions(max_size: u32, max_len: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
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
    go(max_size, max_size, max_len, &mut Vec::new(), &mut out);
    out
}
