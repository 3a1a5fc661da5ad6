//! Search for the maximal coefficient `m_n` of `p_n`.
//!
//! Two local moves never decrease a coefficient:
//!
//! * swapping an ascent `a_i < a_{i+1}` strictly increases it, so every
//!   maximizer is nonincreasing ([`swap_transform`]);
//! * moving one unit right across a drop `a_i > a_{i+1} + 1` does not
//!   decrease it ([`smooth_transform`]).
//!
//! Hence some maximizer lies in the staircase set (nonincreasing, drops of
//! at most one). Nonincreasing admissible vectors are the partitions of `n`
//! padded with zeros, and staircase vectors are the conjugates of the
//! partitions of `n` into distinct parts. The three search spaces
//! (all of `A_n`, partitions, staircases) shrink from `C_n` to `p(n)` to
//! `q(n)` elements.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::coefficient::{catalan, BinomialTable, Coefficient};
use crate::error::{Error, Result};
use crate::monomial::{self, Monomial};
use crate::partition::{self, Partition};

/// A monomial that is nonincreasing with consecutive drops of at most one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StairMonomial(Monomial);

impl StairMonomial {
    pub fn as_monomial(&self) -> &Monomial {
        &self.0
    }

    pub fn into_monomial(self) -> Monomial {
        self.0
    }

    /// The distinct-part partition this staircase corresponds to.
    pub fn to_distinct_partition(&self) -> Partition {
        let parts: Vec<u32> = self
            .0
            .exponents()
            .iter()
            .copied()
            .filter(|&x| x > 0)
            .collect();
        Partition::new(parts)
            .expect("staircase is nonincreasing")
            .conjugate()
    }
}

impl TryFrom<Monomial> for StairMonomial {
    type Error = Error;

    fn try_from(a: Monomial) -> Result<Self> {
        if a.is_staircase() {
            Ok(StairMonomial(a))
        } else {
            Err(Error::Precondition(format!(
                "{a} is not a staircase monomial"
            )))
        }
    }
}

/// Which search space [`max_coefficient`] scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Every admissible vector.
    Bruteforce,
    /// Nonincreasing vectors (partitions of `n`).
    Sorted,
    /// Staircase vectors (conjugates of distinct-part partitions).
    Stairs,
    /// Produced by the greedy sequence; not a search space.
    Greedy,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Bruteforce => "bruteforce",
            Method::Sorted => "sorted",
            Method::Stairs => "stairs",
            Method::Greedy => "greedy",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bruteforce" => Ok(Method::Bruteforce),
            "sorted" => Ok(Method::Sorted),
            "stairs" => Ok(Method::Stairs),
            "greedy" => Ok(Method::Greedy),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

/// Largest `n` each search method accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub bruteforce: usize,
    pub sorted: usize,
    pub stairs: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            bruteforce: 14,
            sorted: 60,
            stairs: 120,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxResult {
    pub n: usize,
    pub m: Coefficient,
    /// Every monomial of the search space attaining `m`, in monomial order.
    pub argmax: Vec<Monomial>,
    pub method: Method,
    pub search_space_size: BigUint,
}

/// `m_{n+1} / m_n` in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientEntry {
    pub n: usize,
    pub numerator: BigUint,
    pub denominator: BigUint,
}

impl QuotientEntry {
    pub fn is_integer(&self) -> bool {
        self.denominator.is_one()
    }
}

impl fmt::Display for QuotientEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Swaps an ascent `a_i < a_{i+1}` (1-based `i`). The coefficient strictly
/// increases.
pub fn swap_transform(a: &Monomial, i: usize) -> Result<Monomial> {
    let n = a.len();
    if i < 1 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: n.saturating_sub(1),
        });
    }
    let v = a.exponents();
    if v[i - 1] >= v[i] {
        return Err(Error::Precondition(format!(
            "swap at {i} needs a_i < a_(i+1) in {a}"
        )));
    }
    let mut out = v.to_vec();
    out.swap(i - 1, i);
    Monomial::new(out)
}

/// Moves one unit from `a_i` to `a_{i+1}` across a drop
/// `a_i > a_{i+1} + 1`. The coefficient does not decrease.
pub fn smooth_transform(a: &Monomial, i: usize) -> Result<Monomial> {
    let n = a.len();
    if i < 1 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: n.saturating_sub(1),
        });
    }
    let v = a.exponents();
    if v[i - 1] <= v[i] + 1 {
        return Err(Error::Precondition(format!(
            "smoothing at {i} needs a_i > a_(i+1) + 1 in {a}"
        )));
    }
    let mut out = v.to_vec();
    out[i - 1] -= 1;
    out[i] += 1;
    Monomial::new(out)
}

/// Every staircase monomial of length `n`, obtained by conjugating the
/// distinct-part partitions of `n`, taken in lexicographically decreasing
/// order.
pub fn enumerate_stairs(n: usize) -> Result<impl Iterator<Item = StairMonomial>> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    Ok(partition::distinct_partitions(n as u32).map(move |d| {
        let a = Monomial::from_vec_unchecked(d.conjugate().padded(n));
        debug_assert!(a.is_staircase());
        StairMonomial(a)
    }))
}

/// Nonincreasing monomials of length `n`: partitions of `n` padded with
/// zeros.
pub fn enumerate_sorted(n: usize) -> Result<impl Iterator<Item = Monomial>> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    Ok(partition::partitions(n as u32).map(move |p| Monomial::from_vec_unchecked(p.padded(n))))
}

#[derive(Debug, Clone, Default)]
struct Best {
    m: BigUint,
    argmax: Vec<Monomial>,
    count: u64,
}

impl Best {
    fn push(mut self, a: Monomial, c: BigUint) -> Self {
        self.count += 1;
        match c.cmp(&self.m) {
            std::cmp::Ordering::Greater => {
                self.m = c;
                self.argmax = vec![a];
            }
            std::cmp::Ordering::Equal => self.argmax.push(a),
            std::cmp::Ordering::Less => {}
        }
        self
    }

    fn merge(mut self, mut other: Best) -> Best {
        let count = self.count + other.count;
        let mut out = match self.m.cmp(&other.m) {
            std::cmp::Ordering::Greater => self,
            std::cmp::Ordering::Less => other,
            std::cmp::Ordering::Equal => {
                self.argmax.append(&mut other.argmax);
                self
            }
        };
        out.count = count;
        out
    }
}

fn scan_parallel<I>(n: usize, items: I) -> Best
where
    I: Iterator<Item = Monomial> + Send,
{
    let table = BinomialTable::new(n);
    items
        .par_bridge()
        .fold(Best::default, |best, a| {
            let c = table.coefficient(&a).into_inner();
            best.push(a, c)
        })
        .reduce(Best::default, Best::merge)
}

fn scan_bruteforce(n: usize) -> Best {
    let table = BinomialTable::new(n);
    (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            monomial::enumerate_bucket(n, first).expect("n >= 1").fold(
                Best::default(),
                |best, a| {
                    let c = table.coefficient(&a).into_inner();
                    best.push(a, c)
                },
            )
        })
        .reduce(Best::default, Best::merge)
}

/// The maximal coefficient over the method's search space and every
/// monomial in that space attaining it.
pub fn max_coefficient(n: usize, method: Method, bounds: &SearchBounds) -> Result<MaxResult> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    let over = |what, bound| Error::BudgetExceeded { what, n, bound };
    let best = match method {
        Method::Bruteforce => {
            if n > bounds.bruteforce {
                return Err(over("bruteforce search", bounds.bruteforce));
            }
            scan_bruteforce(n)
        }
        Method::Sorted => {
            if n > bounds.sorted {
                return Err(over("nonincreasing search", bounds.sorted));
            }
            scan_parallel(n, enumerate_sorted(n)?)
        }
        Method::Stairs => {
            if n > bounds.stairs {
                return Err(over("staircase search", bounds.stairs));
            }
            scan_parallel(n, enumerate_stairs(n)?.map(StairMonomial::into_monomial))
        }
        Method::Greedy => {
            let run = crate::greedy::run(n)?;
            let step = run.steps.last().expect("run(n) has n steps");
            Best {
                m: step.s.value().clone(),
                argmax: vec![step.r.clone()],
                count: step.candidates.len() as u64,
            }
        }
    };
    let mut argmax = best.argmax;
    argmax.sort();
    argmax.dedup();
    let search_space_size = match method {
        Method::Bruteforce => {
            debug_assert_eq!(BigUint::from(best.count), catalan(n as u64));
            catalan(n as u64)
        }
        _ => BigUint::from(best.count),
    };
    Ok(MaxResult {
        n,
        m: Coefficient::from(best.m),
        argmax,
        method,
        search_space_size,
    })
}

/// Consecutive quotients `ms[i+1] / ms[i]` in lowest terms, labelled
/// 1-based (`n = i + 1`).
pub fn quotients(ms: &[Coefficient]) -> Result<Vec<QuotientEntry>> {
    if ms.iter().any(|m| m.value().is_zero()) {
        return Err(Error::Precondition("quotients need positive values".into()));
    }
    Ok(ms
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let (num, den) = (w[1].value(), w[0].value());
            let g = num.gcd(den);
            QuotientEntry {
                n: i + 1,
                numerator: num / &g,
                denominator: den / &g,
            }
        })
        .collect())
}

/// `max_{1 <= j <= n} j^(n-j)` by a direct scan, with the smallest `j`
/// attaining it. Each `j^(n-j)` is the coefficient of
/// `(j, 1, ..., 1, 0, ..., 0)`, so this bounds `m_n` from below.
pub fn power_lower_bound(n: usize) -> Result<(usize, BigUint)> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    let mut best = (1usize, BigUint::one());
    for j in 2..=n {
        let v = BigUint::from(j).pow((n - j) as u32);
        if v > best.1 {
            best = (j, v);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficient::coefficient;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    #[test]
    fn swap_examples() {
        let a = m(&[1, 2, 0]);
        let b = swap_transform(&a, 1).unwrap();
        assert_eq!(b, m(&[2, 1, 0]));
        assert_eq!(
            (coefficient(&a), coefficient(&b)),
            (1u64.into(), 2u64.into())
        );

        let a = m(&[2, 0, 1, 1]);
        let b = swap_transform(&a, 2).unwrap();
        assert_eq!(b, m(&[2, 1, 0, 1]));
        assert!(coefficient(&b) > coefficient(&a));

        let a = m(&[1, 1, 2, 0]);
        let b = swap_transform(&a, 2).unwrap();
        assert_eq!(b, m(&[1, 2, 1, 0]));
        assert!(coefficient(&b) > coefficient(&a));

        assert!(swap_transform(&m(&[2, 1, 0]), 1).is_err());
        assert!(swap_transform(&m(&[2, 1, 0]), 3).is_err());
        assert!(swap_transform(&m(&[2, 1, 0]), 0).is_err());
    }

    #[test]
    fn smooth_examples() {
        let a = m(&[3, 0, 0]);
        let b = smooth_transform(&a, 1).unwrap();
        assert_eq!(b, m(&[2, 1, 0]));
        assert_eq!(
            (coefficient(&a), coefficient(&b)),
            (1u64.into(), 2u64.into())
        );

        let a = m(&[4, 0, 0, 0]);
        let b = smooth_transform(&a, 1).unwrap();
        assert_eq!(b, m(&[3, 1, 0, 0]));
        assert!(coefficient(&b) >= coefficient(&a));

        let a = m(&[2, 0, 1]);
        let b = smooth_transform(&a, 1).unwrap();
        assert_eq!(b, m(&[1, 1, 1]));
        assert_eq!(coefficient(&a), coefficient(&b));

        assert!(smooth_transform(&m(&[2, 1, 0]), 1).is_err());
    }

    #[test]
    fn stairs_examples() {
        let three: Vec<_> = enumerate_stairs(3)
            .unwrap()
            .map(|s| s.into_monomial())
            .collect();
        assert_eq!(three, vec![m(&[1, 1, 1]), m(&[2, 1, 0])]);
        assert_eq!(enumerate_stairs(6).unwrap().count(), 4);
        let one: Vec<_> = enumerate_stairs(1)
            .unwrap()
            .map(|s| s.into_monomial())
            .collect();
        assert_eq!(one, vec![m(&[1])]);
        assert!(enumerate_stairs(0).is_err());
    }

    #[test]
    fn stair_partition_round_trip() {
        for s in enumerate_stairs(12).unwrap() {
            let d = s.to_distinct_partition();
            assert!(d.has_distinct_parts());
            assert_eq!(d.total(), 12);
        }
        assert!(StairMonomial::try_from(m(&[3, 1, 0, 0])).is_err());
    }

    #[test]
    fn max_examples() {
        let bounds = SearchBounds::default();
        for method in [Method::Bruteforce, Method::Sorted, Method::Stairs] {
            let r = max_coefficient(7, method, &bounds).unwrap();
            assert_eq!(r.m, 96, "{method}");
            assert!(r.argmax.contains(&m(&[3, 2, 1, 1, 0, 0, 0])));
        }
        let r = max_coefficient(5, Method::Bruteforce, &bounds).unwrap();
        assert_eq!(r.m, 9);
        assert_eq!(r.argmax, vec![m(&[3, 1, 1, 0, 0]), m(&[2, 2, 1, 0, 0])]);
        assert_eq!(r.search_space_size, BigUint::from(42u32));

        let small = SearchBounds {
            bruteforce: 5,
            ..bounds
        };
        assert!(matches!(
            max_coefficient(6, Method::Bruteforce, &small),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(max_coefficient(0, Method::Stairs, &bounds).is_err());
    }

    #[test]
    fn quotient_examples() {
        let c = |v: u64| Coefficient::from(v);
        let q = quotients(&[c(4), c(9)]).unwrap();
        assert_eq!(q[0].to_string(), "9/4");
        let q = quotients(&[c(1536), c(7500)]).unwrap();
        assert_eq!(q[0].to_string(), "625/128");
        let q = quotients(&[c(7), c(7)]).unwrap();
        assert!(q[0].is_integer());
        assert_eq!(q[0].to_string(), "1");
        assert!(quotients(&[c(0), c(1)]).is_err());
        assert!(quotients(&[c(3)]).unwrap().is_empty());
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(power_lower_bound(1).unwrap(), (1, BigUint::from(1u32)));
        assert_eq!(power_lower_bound(7).unwrap(), (3, BigUint::from(81u32)));
        // 4^5 = 1024 beats 3^6 = 729
        assert_eq!(power_lower_bound(9).unwrap(), (4, BigUint::from(1024u32)));
        assert!(power_lower_bound(0).is_err());
    }
}
