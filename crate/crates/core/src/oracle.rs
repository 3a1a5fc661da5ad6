//! Ground truth by literal expansion.
//!
//! `p_n` is built by multiplying the factors `x_1`, `x_1 + x_2`, ... one at
//! a time into a sparse term map, combining like terms after each factor.
//! Nothing here uses the coefficient formula; the cost is roughly `C_n * n`
//! term updates, so the expansion is bounded (default `n <= 14`).

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_BOUND: usize = 14;

/// A multivariate polynomial in `n` variables with positive integer
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    n: usize,
    terms: HashMap<Vec<u32>, BigUint>,
}

impl SparsePolynomial {
    /// The constant 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        let mut terms = HashMap::new();
        terms.insert(vec![0; n], BigUint::one());
        SparsePolynomial { n, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Option<&BigUint> {
        self.terms.get(exponents)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigUint)> {
        self.terms.iter()
    }

    /// Multiplies in place by `x_1 + ... + x_k`.
    pub fn mul_prefix_sum(&mut self, k: usize) {
        assert!(
            k >= 1 && k <= self.n,
            "factor index {k} out of 1..={}",
            self.n
        );
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::with_capacity(self.terms.len() * 2);
        for (exps, c) in self.terms.drain() {
            for j in 0..k {
                let mut e = exps.clone();
                e[j] += 1;
                *next.entry(e).or_insert_with(BigUint::zero) += &c;
            }
        }
        self.terms = next;
    }

    /// Exact value at an integer point.
    pub fn evaluate(&self, point: &[i64]) -> Result<BigInt> {
        if point.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: point.len(),
            });
        }
        let mut total = BigInt::zero();
        for (exps, c) in &self.terms {
            let mut term = BigInt::from(c.clone());
            for (&x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term *= BigInt::from(x).pow(e);
                }
            }
            total += term;
        }
        Ok(total)
    }
}

/// Expands `p_n` with the default bound.
pub fn expand(n: usize) -> Result<SparsePolynomial> {
    expand_bounded(n, DEFAULT_ORACLE_BOUND)
}

pub fn expand_bounded(n: usize, bound: usize) -> Result<SparsePolynomial> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    if n > bound {
        return Err(Error::BudgetExceeded {
            what: "oracle expansion",
            n,
            bound,
        });
    }
    let mut p = SparsePolynomial::one(n);
    for k in 1..=n {
        p.mul_prefix_sum(k);
    }
    Ok(p)
}

/// Evaluates `p_n` at a point directly from its factored form.
pub fn evaluate_factored(point: &[i64]) -> BigInt {
    let mut acc = BigInt::one();
    let mut partial = 0i64;
    for &x in point {
        partial += x;
        acc *= partial;
    }
    acc
}
