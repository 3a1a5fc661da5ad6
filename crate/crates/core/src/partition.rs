//! Integer partitions: unrestricted and with distinct parts, generated in
//! lexicographically decreasing order, plus conjugation.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Nonincreasing positive parts. The empty partition represents 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "{parts:?} is not a nonincreasing list of positive parts"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Transpose of the Young diagram: part `i` counts the parts `>= i`.
    pub fn conjugate(&self) -> Partition {
        let largest = self.0.first().copied().unwrap_or(0);
        let conj = (1..=largest)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition(conj)
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(self.0.len() <= n);
        let mut v = self.0.clone();
        v.resize(n, 0);
        v
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Partitions of `n` in lexicographically decreasing order, starting at
/// `(n)`. With `distinct` set only partitions into distinct parts are
/// produced.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
    distinct: bool,
}

pub fn partitions(n: u32) -> Partitions {
    Partitions {
        current: Some(if n == 0 { vec![] } else { vec![n] }),
        distinct: false,
    }
}

pub fn distinct_partitions(n: u32) -> Partitions {
    Partitions {
        current: Some(if n == 0 { vec![] } else { vec![n] }),
        distinct: true,
    }
}

impl Partitions {
    fn advance_unrestricted(parts: &mut Vec<u32>) -> bool {
        let mut rem = 0u32;
        while parts.last() == Some(&1) {
            parts.pop();
            rem += 1;
        }
        let Some(last) = parts.last_mut() else {
            return false;
        };
        *last -= 1;
        let cap = *last;
        rem += 1;
        while rem > 0 {
            let p = rem.min(cap);
            parts.push(p);
            rem -= p;
        }
        true
    }

    fn advance_distinct(parts: &mut Vec<u32>) -> bool {
        let mut rem = 0u64;
        while let Some(p) = parts.pop() {
            rem += u64::from(p);
            let v = p - 1;
            let fill = rem - u64::from(v);
            // distinct parts below v sum to at most v(v-1)/2
            if v >= 1 && fill <= u64::from(v) * u64::from(v - 1) / 2 {
                parts.push(v);
                let mut left = fill as u32;
                let mut cap = v - 1;
                while left > 0 {
                    let q = left.min(cap);
                    parts.push(q);
                    left -= q;
                    cap = q - 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let more = if self.distinct {
            Self::advance_distinct(cur)
        } else {
            Self::advance_unrestricted(cur)
        };
        if !more {
            self.current = None;
        }
        Some(Partition(out))
    }
}

/// Number of partitions of `n` into distinct parts, by the standard
/// 0/1-knapsack recurrence.
pub fn count_distinct_partitions(n: usize) -> BigUint {
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for part in 1..=n {
        for total in (part..=n).rev() {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways.swap_remove(n)
}

/// Number of partitions of `n`, by the unbounded knapsack recurrence.
pub fn count_partitions(n: usize) -> BigUint {
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for part in 1..=n {
        for total in part..=n {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
        assert_eq!(p(&[6]).conjugate(), p(&[1; 6]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn small_listings() {
        let all: Vec<_> = partitions(5).map(Partition::into_parts).collect();
        assert_eq!(
            all,
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1]
            ]
        );
        let distinct: Vec<_> = distinct_partitions(6).map(Partition::into_parts).collect();
        assert_eq!(
            distinct,
            vec![vec![6], vec![5, 1], vec![4, 2], vec![3, 2, 1]]
        );
        assert_eq!(distinct_partitions(0).count(), 1);
        assert_eq!(partitions(1).count(), 1);
    }

    #[test]
    fn counts_match_recurrences() {
        for n in 0..=40u32 {
            let all: Vec<_> = partitions(n).collect();
            assert_eq!(
                BigUint::from(all.len()),
                count_partitions(n as usize),
                "p({n})"
            );
            assert!(all.windows(2).all(|w| w[0] > w[1]), "order for n = {n}");
            assert!(all.iter().all(|q| q.total() == u64::from(n)));

            let d: Vec<_> = distinct_partitions(n).collect();
            assert_eq!(
                BigUint::from(d.len()),
                count_distinct_partitions(n as usize),
                "q({n})"
            );
            assert!(d.windows(2).all(|w| w[0] > w[1]));
            assert!(d
                .iter()
                .all(|q| q.has_distinct_parts() && q.total() == u64::from(n)));
        }
        assert_eq!(count_distinct_partitions(100), BigUint::from(444_793u32));
    }
}
