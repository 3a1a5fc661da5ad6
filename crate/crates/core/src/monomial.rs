//! Exponent vectors of the distinct monomials of
//! `p_n = x_1 (x_1 + x_2) ... (x_1 + ... + x_n)`.
//!
//! A vector `(a_1, ..., a_n)` of nonnegative integers is admissible when it
//! sums to `n` and every suffix `a_{k+1} + ... + a_n` is at most `n - k`.
//! Equivalently every prefix sum `a_1 + ... + a_k` is at least `k`. The
//! admissible vectors are exactly the exponent vectors occurring in the
//! expansion of `p_n`, and there are `C_n` (Catalan) of them.
//!
//! Monomials are ordered lexicographically *decreasing*: `a` precedes `b`
//! when, at the first index where they differ, `a` has the larger entry.
//! [`Monomial`]'s [`Ord`] implementation is this order, so sorting a slice
//! of monomials of equal length puts `(n, 0, ..., 0)` first and
//! `(1, ..., 1)` last.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An admissible exponent vector. Construction validates membership.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

/// Returns true iff `v` sums to `v.len()` and satisfies every suffix bound.
/// The empty vector is never a member.
pub fn is_member(v: &[u32]) -> bool {
    let n = v.len();
    if n == 0 {
        return false;
    }
    let mut prefix: u64 = 0;
    for (k, &a) in v.iter().enumerate() {
        prefix += u64::from(a);
        // prefix over the first k+1 entries must cover k+1 (suffix bound)
        if k + 1 < n && prefix < (k + 1) as u64 {
            return false;
        }
    }
    prefix == n as u64
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if is_member(&exponents) {
            Ok(Monomial(exponents))
        } else {
            Err(Error::NotMember(exponents))
        }
    }

    /// Skips the membership check. Callers must uphold the invariant.
    pub(crate) fn from_vec_unchecked(exponents: Vec<u32>) -> Self {
        debug_assert!(is_member(&exponents), "{exponents:?}");
        Monomial(exponents)
    }

    /// `(n, 0, ..., 0)`, the first monomial in order.
    pub fn first(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::SizeTooSmall { n, min: 1 });
        }
        let mut v = vec![0; n];
        v[0] = n as u32;
        Ok(Monomial(v))
    }

    /// `(1, ..., 1)`, the last monomial in order.
    pub fn ones(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::SizeTooSmall { n, min: 1 });
        }
        Ok(Monomial(vec![1; n]))
    }

    /// Number of variables `n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Exponent of `x_i`, 1-based.
    pub fn get(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    /// True when the vector is nonincreasing.
    pub fn is_nonincreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// True when the vector is nonincreasing with consecutive drops of at
    /// most one (the staircase set that contains a maximizer).
    pub fn is_staircase(&self) -> bool {
        self.0.windows(2).all(|w| w[1] <= w[0] && w[0] <= w[1] + 1)
    }
}

/// Compares two monomials in the decreasing-lexicographic order.
/// Fails when the lengths differ.
pub fn compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    Ok(lex_desc(&a.0, &b.0))
}

fn lex_desc(a: &[u32], b: &[u32]) -> Ordering {
    match a.iter().zip(b).find(|(x, y)| x != y) {
        Some((x, y)) => y.cmp(x),
        None => Ordering::Equal,
    }
}

impl Ord for Monomial {
    /// Shorter vectors sort first; equal lengths use the monomial order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| lex_desc(&self.0, &other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl std::str::FromStr for Monomial {
    type Err = Error;

    /// Parses `(a_1,...,a_n)`; spaces and the parentheses are optional.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Monomial::new(v)
    }
}

impl AsRef<[u32]> for Monomial {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

/// Streams the admissible vectors of length `n` in monomial order.
///
/// The successor of `a` is found by decrementing the rightmost entry
/// `a_k` (`k < n`) that can drop without breaking the prefix bound
/// `a_1 + ... + a_k >= k`, then moving the whole remainder to `a_{k+1}`.
/// Only the current vector is held in memory.
#[derive(Debug, Clone)]
pub struct Monomials {
    current: Option<Vec<u32>>,
    /// Entries at indices `< frozen` never change (bucket iteration).
    frozen: usize,
}

impl Monomials {
    fn advance(&mut self) {
        let Some(a) = self.current.as_mut() else {
            return;
        };
        let n = a.len();
        let mut prefix: Vec<u64> = Vec::with_capacity(n);
        let mut acc = 0u64;
        for &x in a.iter() {
            acc += u64::from(x);
            prefix.push(acc);
        }
        // candidate positions k (0-based) in frozen..n-1, rightmost first
        let pos = (self.frozen..n.saturating_sub(1))
            .rev()
            .find(|&k| a[k] > 0 && prefix[k] > (k + 1) as u64);
        match pos {
            None => self.current = None,
            Some(k) => {
                a[k] -= 1;
                let remaining = n as u64 - (prefix[k] - 1);
                a[k + 1] = remaining as u32;
                for x in &mut a[k + 2..] {
                    *x = 0;
                }
            }
        }
    }
}

impl Iterator for Monomials {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let out = self.current.clone()?;
        self.advance();
        Some(Monomial::from_vec_unchecked(out))
    }
}

/// All of `A_n` in monomial order. `n = 0` is rejected.
pub fn enumerate(n: usize) -> Result<Monomials> {
    let first = Monomial::first(n)?;
    Ok(Monomials {
        current: Some(first.0),
        frozen: 0,
    })
}

/// The part of `A_n` with `a_1 = first`, in monomial order. Buckets for
/// `first = n, n-1, ..., 1` partition `A_n` and concatenate to
/// [`enumerate`]. An empty iterator is returned when `first` is 0 or
/// larger than `n`.
pub fn enumerate_bucket(n: usize, first: u32) -> Result<Monomials> {
    if n == 0 {
        return Err(Error::SizeTooSmall { n, min: 1 });
    }
    if first == 0 || first as usize > n {
        return Ok(Monomials {
            current: None,
            frozen: 1,
        });
    }
    let mut v = vec![0u32; n];
    v[0] = first;
    if n > 1 {
        v[1] = n as u32 - first;
    }
    Ok(Monomials {
        current: Some(v),
        frozen: 1,
    })
}
