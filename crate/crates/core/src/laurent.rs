//! Exact multivariate Laurent polynomials with rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

const MAX_DIVISION_STEPS: usize = 1 << 20;

/// A finite sum `Σ c_e · z^e` over exponent vectors `e ∈ Z^k`. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, Rational64>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], Rational64::one())
    }

    pub fn monomial(exponents: Vec<i32>, coeff: Rational64) -> Self {
        let nvars = exponents.len();
        let mut p = Self::zero(nvars);
        p.add_term(exponents, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Rational64)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exponents: &[i32]) -> Rational64 {
        self.terms.get(exponents).copied().unwrap_or_else(Rational64::zero)
    }

    pub fn add_term(&mut self, exponents: Vec<i32>, coeff: Rational64) {
        assert_eq!(exponents.len(), self.nvars, "exponent arity mismatch");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: Rational64) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, &k) in &self.terms {
            out.add_term(e.clone(), k * c);
        }
        out
    }

    /// Largest term in lexicographic exponent order.
    pub fn leading_term(&self) -> Option<(&[i32], Rational64)> {
        self.terms.iter().next_back().map(|(e, &c)| (e.as_slice(), c))
    }

    /// Exact division; fails unless `divisor` divides `self` in the Laurent ring.
    pub fn div_exact(&self, divisor: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        let (lead_e, lead_c) =
            divisor.leading_term().ok_or_else(|| Error::Internal("division by the zero polynomial".into()))?;
        let lead_e = lead_e.to_vec();
        let mut quot = Self::zero(self.nvars);
        if self.is_zero() {
            return Ok(quot);
        }
        // lex order is multiplicative, so every quotient term lies above this floor
        let floor: Vec<i32> = {
            let lo_self = self.terms.keys().next().expect("nonzero");
            let lo_div = divisor.terms.keys().next().expect("nonzero");
            lo_self.iter().zip(lo_div).map(|(a, b)| a - b).collect()
        };
        let mut rem = self.clone();
        for _ in 0..MAX_DIVISION_STEPS {
            let Some((e, c)) = rem.leading_term() else {
                return Ok(quot);
            };
            let qe: Vec<i32> = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            if qe < floor {
                break;
            }
            let step = Self::monomial(qe, c / lead_c);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Err(Error::Internal("polynomial division is not exact".into()))
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn to_integer_coeffs(&self) -> Option<BTreeMap<Vec<i32>, i64>> {
        self.terms.iter().map(|(e, c)| c.is_integer().then(|| (e.clone(), c.to_integer()))).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Rational64::is_integer)
    }

    /// Sum of all coefficients (the value at `z = (1, …, 1)`).
    pub fn eval_at_one(&self) -> Rational64 {
        self.terms.values().copied().sum()
    }

    /// Renders with the given variable names. Terms are grouped by their
    /// highest variable, in descending powers within a group.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        assert_eq!(names.len(), self.nvars, "one name per variable");
        Rendered { p: self, names }
    }
}

/// Groups terms by their highest variable (constants join the first
/// group); within a group, descending powers of that variable, then the
/// same rule on the remaining variables.
fn display_order(a: &[i32], b: &[i32]) -> Ordering {
    let top = |e: &[i32]| e.iter().rposition(|&x| x != 0).unwrap_or(0);
    let (ka, kb) = (top(a), top(b));
    if ka != kb {
        return ka.cmp(&kb);
    }
    if a.is_empty() {
        return Ordering::Equal;
    }
    b[ka].cmp(&a[ka]).then_with(|| display_order(&a[..ka], &b[..ka]))
}

struct Rendered<'a> {
    p: &'a LaurentPolynomial,
    names: &'a [String],
}

impl fmt::Display for Rendered<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Vec<i32>, &Rational64)> = self.p.terms.iter().collect();
        terms.sort_by(|a, b| display_order(a.0, b.0));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .zip(self.names)
                .filter(|(&x, _)| x != 0)
                .map(|(&x, name)| if x == 1 { name.clone() } else { format!("{name}^{x}") })
                .collect();
            let coeff = if abs.is_integer() {
                abs.to_integer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            if vars.is_empty() {
                write!(f, "{coeff}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        self.scale(-Rational64::one())
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = LaurentPolynomial::zero(self.nvars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self + &rhs
    }
}
