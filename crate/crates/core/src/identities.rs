//! Closed-form identities satisfied by the coefficients of `p_n`, each with a
//! verifier that recomputes the value independently.
//!
//! Up to the enumeration bound a verifier sums or looks up coefficients over
//! `A_n`. Above it, sums are recomputed by specializing the factored form of
//! `p_n` at a 0/1 point, and single coefficients by the coefficient formula.
//! Each [`IdentityReport`] records which route ran.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::coefficient::{coefficient, factorial, triangle_row, BinomialTable};
use crate::error::{Error, Result};
use crate::monomial::{self, Monomial};
use crate::oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerificationMode {
    /// Recomputed from the full list of coefficients of `p_n`.
    Enumeration,
    /// Recomputed by evaluating the factored `p_n` at a point.
    Specialization,
    /// Recomputed from the coefficient formula at specific monomials.
    Direct,
}

impl fmt::Display for VerificationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerificationMode::Enumeration => "enumeration",
            VerificationMode::Specialization => "specialization",
            VerificationMode::Direct => "direct",
        })
    }
}

/// Outcome of checking one identity at one parameter choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: &'static str,
    pub n: usize,
    pub parameters: Vec<usize>,
    pub formula_value: BigUint,
    pub enumerated_value: BigUint,
    pub mode: VerificationMode,
    pub pass: bool,
    pub note: Option<String>,
}

impl IdentityReport {
    fn new(
        name: &'static str,
        n: usize,
        parameters: Vec<usize>,
        formula_value: BigUint,
        enumerated_value: BigUint,
        mode: VerificationMode,
    ) -> Self {
        let pass = formula_value == enumerated_value;
        IdentityReport {
            name,
            n,
            parameters,
            formula_value,
            enumerated_value,
            mode,
            pass,
            note: None,
        }
    }

    fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} n={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.n
        )?;
        if !self.parameters.is_empty() {
            write!(f, " params={:?}", self.parameters)?;
        }
        write!(
            f,
            " formula={} check={} ({})",
            self.formula_value, self.enumerated_value, self.mode
        )?;
        if let Some(note) = &self.note {
            write!(f, " -- {note}")?;
        }
        Ok(())
    }
}

fn check_range(i: usize, lo: usize, hi: usize) -> Result<()> {
    if i < lo || i > hi {
        Err(Error::IndexOutOfRange { index: i, lo, hi })
    } else {
        Ok(())
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::SizeTooSmall { n, min })
    } else {
        Ok(())
    }
}

/// Sum of all coefficients of `p_n`: `n!`.
pub fn total_sum(n: usize) -> Result<BigUint> {
    check_n(n, 1)?;
    Ok(factorial(n as u64))
}

/// Sum of the coefficients of monomials containing `x_i`: `(n-i+1)(n-1)!`.
pub fn sum_containing(n: usize, i: usize) -> Result<BigUint> {
    check_n(n, 1)?;
    check_range(i, 1, n)?;
    Ok(factorial(n as u64 - 1) * (n - i + 1))
}

/// Sum of the coefficients of monomials avoiding `x_i`: `(i-1)(n-1)!`.
pub fn sum_avoiding(n: usize, i: usize) -> Result<BigUint> {
    check_n(n, 1)?;
    check_range(i, 1, n)?;
    Ok(factorial(n as u64 - 1) * (i - 1))
}

/// Sum of the coefficients of monomials in `x_1, ..., x_i` only:
/// `i! * i^(n-i)`.
pub fn sum_max_index(n: usize, i: usize) -> Result<BigUint> {
    check_n(n, 1)?;
    check_range(i, 1, n)?;
    Ok(factorial(i as u64) * BigUint::from(i).pow((n - i) as u32))
}

/// `(j, 1, ..., 1, 0, ..., 0)` with `n - j` ones.
pub fn staircase_monomial(n: usize, j: usize) -> Result<Monomial> {
    check_n(n, 1)?;
    check_range(j, 1, n)?;
    let mut v = vec![0u32; n];
    v[0] = j as u32;
    for x in &mut v[1..=n - j] {
        *x = 1;
    }
    Monomial::new(v)
}

/// Coefficient of `(j, 1, ..., 1, 0, ..., 0)`: `j^(n-j)`. Checked against
/// the coefficient formula before returning.
pub fn staircase_coefficient(n: usize, j: usize) -> Result<BigUint> {
    let a = staircase_monomial(n, j)?;
    let value = BigUint::from(j).pow((n - j) as u32);
    assert_eq!(*coefficient(&a).value(), value, "staircase identity at {a}");
    Ok(value)
}

/// `(n-1, 0, ..., 0, 1, 0, ..., 0)` with the 1 at position `i`; this is the
/// `i`-th monomial of `p_n` in monomial order.
pub fn linear_monomial(n: usize, i: usize) -> Result<Monomial> {
    check_n(n, 2)?;
    check_range(i, 2, n)?;
    let mut v = vec![0u32; n];
    v[0] = n as u32 - 1;
    v[i - 1] = 1;
    Monomial::new(v)
}

/// The `i`-th coefficient of `p_n` in monomial order, `2 <= i <= n`:
/// `n + 1 - i`. Checked against the `i`-th enumerated monomial.
pub fn linear_coefficient(n: usize, i: usize) -> Result<BigUint> {
    let a = linear_monomial(n, i)?;
    let value = BigUint::from(n + 1 - i);
    let nth = monomial::enumerate(n)?.nth(i - 1).expect("C_n >= n");
    assert_eq!(nth, a, "i-th monomial in order");
    assert_eq!(*coefficient(&a).value(), value, "linear identity at {a}");
    Ok(value)
}

/// The two embeddings `A_{n-1} -> A_n` that preserve coefficients:
/// `(1, a_1, ..., a_{n-1})` and `(a_1, ..., a_{n-1}, 1)`.
pub fn duplication_maps(a: &Monomial) -> (Monomial, Monomial) {
    let mut front = Vec::with_capacity(a.len() + 1);
    front.push(1);
    front.extend_from_slice(a.exponents());
    let mut back = a.exponents().to_vec();
    back.push(1);
    (
        Monomial::from_vec_unchecked(front),
        Monomial::from_vec_unchecked(back),
    )
}

pub fn prime_divisors(mut m: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.insert(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.insert(m);
    }
    out
}

fn prime_divisors_big(c: &BigUint) -> BTreeSet<u64> {
    match c.to_u64() {
        Some(v) => prime_divisors(v),
        None => {
            // trial division by small primes, then the cofactor must be 1
            let mut out = BTreeSet::new();
            let mut m = c.clone();
            let mut p = 2u64;
            while !m.is_one() && p < 1 << 20 {
                let bp = BigUint::from(p);
                if (&m % &bp).is_zero() {
                    out.insert(p);
                    while (&m % &bp).is_zero() {
                        m /= &bp;
                    }
                }
                p += 1;
            }
            assert!(m.is_one(), "coefficient {c} has a prime factor above 2^20");
            out
        }
    }
}

/// Union of the prime divisors of `2, ..., n - 1`: the primes up to `n - 1`.
pub fn prime_support_formula(n: usize) -> BTreeSet<u64> {
    (2..n as u64).flat_map(prime_divisors).collect()
}

/// Every prime dividing some coefficient of `p_n`, found by enumeration.
pub fn prime_support(n: usize, bound: usize) -> Result<BTreeSet<u64>> {
    check_n(n, 2)?;
    if n > bound {
        return Err(Error::BudgetExceeded {
            what: "prime support enumeration",
            n,
            bound,
        });
    }
    let table = BinomialTable::new(n);
    let mut seen = BTreeSet::new();
    for a in monomial::enumerate(n)? {
        seen.extend(prime_divisors_big(table.coefficient(&a).value()));
    }
    Ok(seen)
}

fn radical(primes: &BTreeSet<u64>) -> BigUint {
    primes.iter().fold(BigUint::one(), |acc, &p| acc * p)
}

fn specialize(n: usize, f: impl Fn(usize) -> i64) -> BigUint {
    let point: Vec<i64> = (1..=n).map(f).collect();
    oracle::evaluate_factored(&point)
        .to_biguint()
        .expect("0/1 points give nonnegative values")
}

/// Runs every identity at size `n` for all admissible parameters. Sizes up
/// to `enumeration_bound` are checked against the full coefficient list.
pub fn verify_identities(n: usize, enumeration_bound: usize) -> Result<Vec<IdentityReport>> {
    check_n(n, 1)?;
    let mut out = Vec::new();
    let row = if n <= enumeration_bound {
        Some(triangle_row(n)?)
    } else {
        None
    };
    let sum_where = |pred: &dyn Fn(&Monomial) -> bool| -> BigUint {
        row.as_ref()
            .unwrap()
            .entries
            .iter()
            .filter(|(a, _)| pred(a))
            .map(|(_, c)| c.value())
            .sum()
    };
    let sum_mode = if row.is_some() {
        VerificationMode::Enumeration
    } else {
        VerificationMode::Specialization
    };

    let check = if row.is_some() {
        sum_where(&|_| true)
    } else {
        specialize(n, |_| 1)
    };
    out.push(IdentityReport::new(
        "total_sum",
        n,
        vec![],
        total_sum(n)?,
        check,
        sum_mode,
    ));

    for i in 1..=n {
        let (containing, avoiding) = if row.is_some() {
            (
                sum_where(&|a| a.exponents()[i - 1] > 0),
                sum_where(&|a| a.exponents()[i - 1] == 0),
            )
        } else {
            let avoid = specialize(n, |k| i64::from(k != i));
            (factorial(n as u64) - &avoid, avoid)
        };
        out.push(IdentityReport::new(
            "sum_containing",
            n,
            vec![i],
            sum_containing(n, i)?,
            containing,
            sum_mode,
        ));
        out.push(IdentityReport::new(
            "sum_avoiding",
            n,
            vec![i],
            sum_avoiding(n, i)?,
            avoiding,
            sum_mode,
        ));

        let max_index = if row.is_some() {
            sum_where(&|a| a.exponents()[i..].iter().all(|&x| x == 0))
        } else {
            specialize(n, |k| i64::from(k <= i))
        };
        out.push(IdentityReport::new(
            "sum_max_index",
            n,
            vec![i],
            sum_max_index(n, i)?,
            max_index,
            sum_mode,
        ));

        let j = i;
        let stair = staircase_monomial(n, j)?;
        out.push(IdentityReport::new(
            "staircase_coefficient",
            n,
            vec![j],
            BigUint::from(j).pow((n - j) as u32),
            coefficient(&stair).into_inner(),
            VerificationMode::Direct,
        ));
    }

    for i in 2..=n {
        let formula = BigUint::from(n + 1 - i);
        let (check, mode) = match &row {
            Some(r) => (
                r.entries[i - 1].1.value().clone(),
                VerificationMode::Enumeration,
            ),
            None => {
                let nth = monomial::enumerate(n)?.nth(i - 1).expect("C_n >= n");
                (coefficient(&nth).into_inner(), VerificationMode::Direct)
            }
        };
        out.push(IdentityReport::new(
            "linear_coefficient",
            n,
            vec![i],
            formula,
            check,
            mode,
        ));
    }

    if n >= 2 && n - 1 <= enumeration_bound {
        let mut failures = 0usize;
        let mut count = 0usize;
        let table = BinomialTable::new(n);
        for a in monomial::enumerate(n - 1)? {
            let c = table.coefficient(&a);
            let (front, back) = duplication_maps(&a);
            count += 1;
            if table.coefficient(&front) != c || table.coefficient(&back) != c {
                failures += 1;
            }
        }
        out.push(
            IdentityReport::new(
                "duplication",
                n,
                vec![],
                BigUint::zero(),
                BigUint::from(failures),
                VerificationMode::Enumeration,
            )
            .with_note(format!(
                "{count} monomials of p_{} mapped, value = failures",
                n - 1
            )),
        );
    }

    if n >= 2 && n <= enumeration_bound {
        let formula = prime_support_formula(n);
        let seen = prime_support(n, enumeration_bound)?;
        out.push(
            IdentityReport::new(
                "prime_support",
                n,
                vec![],
                radical(&formula),
                radical(&seen),
                VerificationMode::Enumeration,
            )
            .with_note(format!(
                "values are products of the prime sets; union over 2<=m<=n-1 gives {formula:?}, coefficients give {seen:?}"
            )),
        );
    }

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn total_sum_examples() {
        assert_eq!(total_sum(1).unwrap(), big(1));
        assert_eq!(total_sum(4).unwrap(), big(24));
        assert_eq!(total_sum(12).unwrap(), big(479_001_600));
        assert!(total_sum(0).is_err());
    }

    #[test]
    fn sum_examples() {
        assert_eq!(sum_containing(5, 1).unwrap(), big(120));
        assert_eq!(sum_containing(5, 2).unwrap(), big(96));
        assert_eq!(sum_containing(6, 6).unwrap(), big(120));
        assert!(sum_containing(5, 6).is_err());
        assert!(sum_containing(5, 0).is_err());

        assert_eq!(sum_max_index(4, 4).unwrap(), big(24));
        assert_eq!(sum_max_index(5, 2).unwrap(), big(16));
        assert_eq!(sum_max_index(7, 3).unwrap(), big(486));
        assert!(sum_max_index(7, 8).is_err());
    }

    #[test]
    fn coefficient_identity_examples() {
        assert_eq!(staircase_coefficient(5, 5).unwrap(), big(1));
        assert_eq!(staircase_coefficient(9, 3).unwrap(), big(729));
        assert_eq!(staircase_coefficient(7, 2).unwrap(), big(32));
        assert!(staircase_coefficient(7, 0).is_err());

        assert_eq!(linear_coefficient(4, 2).unwrap(), big(3));
        assert_eq!(linear_coefficient(5, 5).unwrap(), big(1));
        assert_eq!(linear_coefficient(5, 3).unwrap(), big(3));
        assert!(linear_coefficient(5, 1).is_err());
        assert!(linear_coefficient(1, 1).is_err());
    }

    #[test]
    fn duplication_examples() {
        let check = |v: &[u32], f: &[u32], b: &[u32], c: u64| {
            let a = Monomial::new(v.to_vec()).unwrap();
            let (front, back) = duplication_maps(&a);
            assert_eq!(front.exponents(), f);
            assert_eq!(back.exponents(), b);
            assert_eq!(coefficient(&front), c);
            assert_eq!(coefficient(&back), c);
        };
        check(&[1], &[1, 1], &[1, 1], 1);
        check(&[2, 1, 0], &[1, 2, 1, 0], &[2, 1, 0, 1], 2);
        check(
            &[2, 2, 1, 0, 0],
            &[1, 2, 2, 1, 0, 0],
            &[2, 2, 1, 0, 0, 1],
            9,
        );
    }

    #[test]
    fn prime_support_examples() {
        let set = |v: &[u64]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(prime_support(3, 14).unwrap(), set(&[2]));
        assert_eq!(prime_support(4, 14).unwrap(), set(&[2, 3]));
        assert_eq!(prime_support(2, 14).unwrap(), set(&[]));
        assert_eq!(prime_support_formula(8), set(&[2, 3, 5, 7]));
        assert!(prime_support(15, 14).is_err());
    }

    #[test]
    fn modes_switch_at_bound() {
        let small = verify_identities(6, 6).unwrap();
        assert!(small.iter().all(|r| r.pass), "{small:#?}");
        assert!(small
            .iter()
            .any(|r| r.mode == VerificationMode::Enumeration));

        let large = verify_identities(30, 6).unwrap();
        assert!(large.iter().all(|r| r.pass));
        assert!(large
            .iter()
            .all(|r| r.mode != VerificationMode::Enumeration));
    }
}
