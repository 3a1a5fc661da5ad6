//! Exact coefficients of the monomials of `p_n`.
//!
//! Reading the factors of `p_n` from the last one backwards, `x_n` can only
//! come from the last factor, `x_{n-1}` from the last two factors minus those
//! already used by `x_n`, and so on. Writing `S_j = a_j + ... + a_n`, the
//! number of ways to produce `(a_1, ..., a_n)` is
//!
//! ```text
//!   prod_{k=0}^{n-1} binom(k + 1 - S_{n-k+1}, a_{n-k})
//! ```
//!
//! which telescopes to the closed form
//!
//! ```text
//!   prod_{k=1}^{n-1} (n - k + 1 - S_{k+1}) / a_k!
//! ```
//!
//! The binomial product never leaves the integers and is the primary route.
//! The closed form is only integral as a whole product; it is kept as an
//! independent cross-check and evaluated alongside the primary route
//! whenever debug assertions are on.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{self, Monomial};

/// The coefficient of a monomial in the expansion of `p_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coefficient(BigUint);

impl Coefficient {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl From<BigUint> for Coefficient {
    fn from(v: BigUint) -> Self {
        Coefficient(v)
    }
}

impl From<u64> for Coefficient {
    fn from(v: u64) -> Self {
        Coefficient(BigUint::from(v))
    }
}

impl PartialEq<u64> for Coefficient {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl std::str::FromStr for Coefficient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .parse::<BigUint>()
            .map(Coefficient)
            .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

/// `binom(n, k)` by the multiplicative formula; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by i + 1 at every step
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `C_n = binom(2n, n) / (n + 1)`, exact.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Pascal's triangle up to a fixed row, for repeated coefficient
/// evaluation at one `n` (exhaustive searches).
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigUint::one()]);
        for r in 1..=max_n {
            let prev = &rows[r - 1];
            let mut row = Vec::with_capacity(r + 1);
            row.push(BigUint::one());
            for k in 1..r {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Falls back to [`binomial`] outside the table.
    pub fn get(&self, n: u64, k: u64) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        match self.rows.get(n as usize) {
            Some(row) => row[k as usize].clone(),
            None => binomial(n, k),
        }
    }

    /// Product form evaluation; see the module docs.
    pub fn coefficient(&self, a: &Monomial) -> Coefficient {
        let c = binomial_product(a.exponents(), |n, k| self.get(n, k));
        debug_assert_eq!(c, closed_form(a.exponents()), "routes disagree at {a}");
        Coefficient(c)
    }
}

fn binomial_product(a: &[u32], binom: impl Fn(u64, u64) -> BigUint) -> BigUint {
    let n = a.len();
    let mut acc = BigUint::one();
    let mut suffix = 0u64;
    for k in 0..n {
        let e = u64::from(a[n - 1 - k]);
        if e > 0 {
            let avail = (k as u64 + 1)
                .checked_sub(suffix)
                .expect("suffix bound holds for members");
            acc *= binom(avail, e);
        }
        suffix += e;
    }
    acc
}

/// The closed form `prod_{k=1}^{n-1} (n - k + 1 - S_{k+1}) / a_k!`,
/// evaluated as one numerator product divided by one factorial product.
/// Panics if the division is inexact, which cannot happen for members.
pub(crate) fn closed_form(a: &[u32]) -> BigUint {
    let n = a.len();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let mut suffix = 0u64; // S_{k+1}
    for k in (1..n).rev() {
        suffix += u64::from(a[k]);
        num *= (n - k + 1) as u64 - suffix;
        den *= factorial(u64::from(a[k - 1]));
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "closed form not integral for {a:?}");
    q
}

/// The coefficient of `a` in `p_n`, via the binomial product.
pub fn coefficient(a: &Monomial) -> Coefficient {
    let c = binomial_product(a.exponents(), binomial);
    debug_assert_eq!(c, closed_form(a.exponents()), "routes disagree at {a}");
    Coefficient(c)
}

/// Same as [`coefficient`] but validates a raw vector first.
pub fn coefficient_of(v: &[u32]) -> Result<Coefficient> {
    Monomial::new(v.to_vec()).map(|a| coefficient(&a))
}

/// Closed-form evaluation, exposed for cross-checking.
pub fn coefficient_closed_form(a: &Monomial) -> Coefficient {
    Coefficient(closed_form(a.exponents()))
}

/// One row of the coefficient triangle: every monomial of `p_n` with its
/// coefficient, in monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRow {
    pub n: usize,
    pub entries: Vec<(Monomial, Coefficient)>,
}

impl TriangleRow {
    pub fn coefficients(&self) -> impl Iterator<Item = &Coefficient> {
        self.entries.iter().map(|(_, c)| c)
    }
}

pub fn triangle_row(n: usize) -> Result<TriangleRow> {
    let table = BinomialTable::new(n);
    let entries = monomial::enumerate(n)?
        .map(|a| {
            let c = table.coefficient(&a);
            (a, c)
        })
        .collect();
    Ok(TriangleRow { n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), BigUint::from(1u32));
        assert_eq!(catalan(3), BigUint::from(5u32));
        assert_eq!(catalan(14), BigUint::from(2_674_440u32));
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        let t = BinomialTable::new(12);
        for n in 0..=14u64 {
            for k in 0..=n + 1 {
                assert_eq!(t.get(n, k), binomial(n, k));
            }
        }
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(coefficient(&m(&[2, 1, 0])), 2);
        for n in 1..=9 {
            assert_eq!(coefficient(&Monomial::first(n).unwrap()), 1);
            assert_eq!(coefficient(&Monomial::ones(n).unwrap()), 1);
        }
        assert_eq!(coefficient(&m(&[3, 2, 1, 1, 0, 0, 0])), 96);
        assert_eq!(
            coefficient(&m(&[3, 3, 2, 2, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0])),
            52_942_050
        );
        assert!(coefficient_of(&[0, 3, 0]).is_err());
    }

    #[test]
    fn closed_form_agrees_exhaustively() {
        for n in 1..=10 {
            for a in monomial::enumerate(n).unwrap() {
                assert_eq!(coefficient(&a), coefficient_closed_form(&a), "{a}");
            }
        }
    }

    #[test]
    fn triangle_rows() {
        let coeffs = |n| -> Vec<u64> {
            triangle_row(n)
                .unwrap()
                .coefficients()
                .map(|c| c.to_string().parse().unwrap())
                .collect()
        };
        assert_eq!(coeffs(2), vec![1, 1]);
        assert_eq!(coeffs(4), vec![1, 3, 2, 1, 3, 4, 2, 1, 1, 1, 2, 1, 1, 1]);
        let five = coeffs(5);
        assert_eq!(five.len(), 42);
        assert_eq!(&five[..7], &[1, 4, 3, 2, 1, 6, 9]);
        assert!(triangle_row(0).is_err());
    }
}
