//! Greedy growth of a sequence of staircase monomials `r_1, r_2, ...`.
//!
//! Starting from `r_1 = (1)`, each step appends a zero to `r_{n-1}` and
//! tries incrementing every entry where the staircase would stay a
//! staircase, keeping the candidate with the largest coefficient. The
//! resulting coefficients `s_n` agree with the true maxima `m_n` as far as
//! exhaustive search reaches.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;

use crate::coefficient::{coefficient, Coefficient};
use crate::error::{Error, Result};
use crate::maxsearch::{quotients, QuotientEntry};
use crate::monomial::Monomial;

/// One candidate for `r_n`: `r_{n-1}` with a zero appended and entry
/// `position` (1-based) incremented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub position: usize,
    pub monomial: Monomial,
    pub coefficient: Coefficient,
}

/// The state after step `n`: `r_n` and `s_n = coefficient(r_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyState {
    pub n: usize,
    pub r: Monomial,
    pub s: Coefficient,
}

/// A completed step with the candidates it chose from (in scan order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    pub n: usize,
    pub r: Monomial,
    pub s: Coefficient,
    pub candidates: Vec<Candidate>,
    /// Positions of every candidate attaining `s` when more than one does.
    /// The first one in scan order was taken.
    pub tied_positions: Vec<usize>,
}

impl GreedyStep {
    pub fn state(&self) -> GreedyState {
        GreedyState {
            n: self.n,
            r: self.r.clone(),
            s: self.s.clone(),
        }
    }

    pub fn had_tie(&self) -> bool {
        self.tied_positions.len() > 1
    }
}

/// Candidate positions for extending `r` (length `n - 1`) to length `n`.
///
/// With `r'` = `r` followed by a zero, position `i` (scanned from `n` down
/// to 1) is taken when
///
/// * `i = n` and `r'[n] != r'[n-1]`, or
/// * `i > 1` and `r'[i] != r'[i-1]` and `r'[i] = r'[i+1]`, or
/// * `i = 1` and `r'[1] = r'[2]`.
///
/// The conditions are evaluated left to right with short-circuiting, so
/// `r'[n+1]` is never read: at `i = n` the middle condition is reached only
/// when `r'[n] = r'[n-1]`, which fails its second clause.
pub fn candidate_positions(r: &Monomial) -> Result<Vec<usize>> {
    if !r.is_staircase() {
        return Err(Error::Precondition(format!(
            "{r} is not a staircase monomial"
        )));
    }
    let mut extended = r.exponents().to_vec();
    extended.push(0);
    let n = extended.len();
    let at = |i: usize| extended[i - 1];

    let mut out = Vec::new();
    for i in (1..=n).rev() {
        if (i == n && at(n) != at(n - 1))
            || (i > 1 && at(i) != at(i - 1) && at(i) == at(i + 1))
            || (i == 1 && at(1) == at(2))
        {
            out.push(i);
        }
    }
    Ok(out)
}

/// The candidate monomials for `r_n`, in scan order, with coefficients.
pub fn candidates(r: &Monomial) -> Result<Vec<Candidate>> {
    let positions = candidate_positions(r)?;
    let mut base = r.exponents().to_vec();
    base.push(0);
    Ok(positions
        .into_iter()
        .map(|position| {
            let mut v = base.clone();
            v[position - 1] += 1;
            let monomial = Monomial::new(v).expect("candidates stay admissible");
            debug_assert!(monomial.is_staircase(), "{monomial}");
            let coefficient = coefficient(&monomial);
            Candidate {
                position,
                monomial,
                coefficient,
            }
        })
        .collect())
}

/// Picks the first candidate (in scan order) with the maximal coefficient.
fn select(candidates: &[Candidate]) -> (usize, Vec<usize>) {
    let best = candidates
        .iter()
        .map(|c| &c.coefficient)
        .max()
        .expect("candidate list is never empty");
    let tied: Vec<usize> = candidates
        .iter()
        .filter(|c| &c.coefficient == best)
        .map(|c| c.position)
        .collect();
    let idx = candidates
        .iter()
        .position(|c| &c.coefficient == best)
        .unwrap();
    (idx, tied)
}

/// Streams the greedy steps `n = 1, 2, ...`. Step 1 is `r_1 = (1)` with no
/// candidates.
#[derive(Debug, Clone)]
pub struct Greedy {
    state: Option<GreedyState>,
}

impl Greedy {
    pub fn new() -> Self {
        Greedy { state: None }
    }
}

impl Default for Greedy {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Greedy {
    type Item = GreedyStep;

    fn next(&mut self) -> Option<GreedyStep> {
        let step = match &self.state {
            None => GreedyStep {
                n: 1,
                r: Monomial::ones(1).unwrap(),
                s: Coefficient::from(1u64),
                candidates: Vec::new(),
                tied_positions: Vec::new(),
            },
            Some(prev) => {
                let cands = candidates(&prev.r).expect("greedy states are staircases");
                let (idx, tied) = select(&cands);
                let chosen = &cands[idx];
                GreedyStep {
                    n: prev.n + 1,
                    r: chosen.monomial.clone(),
                    s: chosen.coefficient.clone(),
                    tied_positions: if tied.len() > 1 { tied } else { Vec::new() },
                    candidates: cands,
                }
            }
        };
        self.state = Some(step.state());
        Some(step)
    }
}

/// The first `l` greedy steps.
#[derive(Debug, Clone)]
pub struct GreedyRun {
    pub steps: Vec<GreedyStep>,
}

impl GreedyRun {
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.steps.iter().map(|s| &s.r)
    }

    pub fn coefficients(&self) -> Vec<Coefficient> {
        self.steps.iter().map(|s| s.s.clone()).collect()
    }

    /// `s_n`, 1-based.
    pub fn s(&self, n: usize) -> Option<&Coefficient> {
        n.checked_sub(1)
            .and_then(|i| self.steps.get(i))
            .map(|s| &s.s)
    }

    pub fn ties(&self) -> impl Iterator<Item = &GreedyStep> {
        self.steps.iter().filter(|s| s.had_tie())
    }
}

pub fn run(l: usize) -> Result<GreedyRun> {
    if l == 0 {
        return Err(Error::SizeTooSmall { n: l, min: 1 });
    }
    Ok(GreedyRun {
        steps: Greedy::new().take(l).collect(),
    })
}

/// Only the coefficients `s_1, ..., s_l`; monomials are dropped as soon as
/// the next step is computed.
pub fn run_coefficients(l: usize) -> Result<Vec<Coefficient>> {
    if l == 0 {
        return Err(Error::SizeTooSmall { n: l, min: 1 });
    }
    Ok(Greedy::new().take(l).map(|s| s.s).collect())
}

/// Which consecutive quotients `s_{n+1} / s_n` are integers, and which
/// integers up to the largest such quotient never occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPattern {
    pub quotients: Vec<QuotientEntry>,
    /// `(n, q_n)` for every integral `q_n`.
    pub integral: Vec<(usize, BigUint)>,
    pub missing: Vec<BigUint>,
}

impl QuotientPattern {
    pub fn integral_positions(&self) -> Vec<usize> {
        self.integral.iter().map(|(n, _)| *n).collect()
    }
}

pub fn quotient_pattern(s: &[Coefficient]) -> Result<QuotientPattern> {
    let quotients = quotients(s)?;
    let integral: Vec<(usize, BigUint)> = quotients
        .iter()
        .filter(|q| q.is_integer())
        .map(|q| (q.n, q.numerator.clone()))
        .collect();
    let present: BTreeSet<&BigUint> = integral.iter().map(|(_, q)| q).collect();
    let mut missing = Vec::new();
    if let Some(&top) = present.iter().next_back() {
        let mut k = BigUint::one();
        while &k <= top {
            if !present.contains(&k) {
                missing.push(k.clone());
            }
            k += 1u32;
        }
    }
    Ok(QuotientPattern {
        quotients,
        integral,
        missing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    #[test]
    fn r1_has_single_candidate() {
        // r' = (1, 0): i = 2 fires (r'[2] != r'[1]); i = 1 needs r'[1] = r'[2]
        let c = candidates(&m(&[1])).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].position, 2);
        assert_eq!(c[0].monomial, m(&[1, 1]));
    }

    #[test]
    fn r15_candidates_match_worked_example() {
        let r15 = m(&[3, 3, 2, 2, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0]);
        let c = candidates(&r15).unwrap();
        let positions: Vec<_> = c.iter().map(|c| c.position).collect();
        assert_eq!(positions, vec![10, 5, 3, 1]);
        assert_eq!(
            c[0].monomial,
            m(&[3, 3, 2, 2, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0])
        );
        assert_eq!(
            c[3].monomial,
            m(&[4, 3, 2, 2, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0])
        );
    }

    #[test]
    fn rejects_non_staircase() {
        assert!(candidates(&m(&[3, 1, 0, 0])).is_err());
    }

    #[test]
    fn first_steps() {
        let run = run(7).unwrap();
        let s: Vec<String> = run.coefficients().iter().map(|c| c.to_string()).collect();
        assert_eq!(s, ["1", "1", "2", "4", "9", "27", "96"]);
        assert_eq!(run.steps[0].r, m(&[1]));
        assert_eq!(run.s(7).unwrap(), &Coefficient::from(96u64));
        assert!(super::run(0).is_err());
        assert_eq!(run_coefficients(7).unwrap(), run.coefficients());
    }

    #[test]
    fn pattern_of_constant_sequence() {
        let s = vec![Coefficient::from(5u64); 4];
        let p = quotient_pattern(&s).unwrap();
        assert_eq!(p.integral_positions(), vec![1, 2, 3]);
        assert!(p.missing.is_empty());
    }
}
