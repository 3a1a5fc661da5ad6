//! The Catalan bijections behind the monomial count:
//! admissible vectors ↔ ballot sequences ↔ plane trees with `n + 1`
//! vertices, plus the factor-by-factor choice sequences that realize a
//! monomial.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A sequence `(b_1, ..., b_n)` with entries `>= -1`, nonnegative proper
/// prefix sums, and total zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BallotSeq(Vec<i32>);

pub fn is_ballot(b: &[i32]) -> bool {
    if b.is_empty() || b.iter().any(|&x| x < -1) {
        return false;
    }
    let mut prefix = 0i64;
    for (k, &x) in b.iter().enumerate() {
        prefix += i64::from(x);
        if k + 1 < b.len() && prefix < 0 {
            return false;
        }
    }
    prefix == 0
}

impl BallotSeq {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        if is_ballot(&entries) {
            Ok(BallotSeq(entries))
        } else {
            Err(Error::NotBallot(entries))
        }
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A rooted plane tree. Vertices are labeled `0..=n` in depth-first
/// discovery order, root `0`, and each child list is ordered; equality is
/// therefore structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    children: Vec<Vec<usize>>,
}

impl PlaneTree {
    /// Builds a tree from arbitrary labels, rooted at `root`, and relabels it
    /// in preorder. Fails unless the lists describe a single tree on all
    /// vertices.
    pub fn from_children(children: Vec<Vec<usize>>, root: usize) -> Result<Self> {
        let n = children.len();
        if root >= n {
            return Err(Error::MalformedTree(format!("root {root} out of range")));
        }
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            if v >= n {
                return Err(Error::MalformedTree(format!("vertex {v} out of range")));
            }
            if label[v] != usize::MAX {
                return Err(Error::MalformedTree(format!("vertex {v} reached twice")));
            }
            label[v] = order.len();
            order.push(v);
            stack.extend(children[v].iter().rev());
        }
        if order.len() != n {
            return Err(Error::MalformedTree(format!(
                "{} of {n} vertices reachable from the root",
                order.len()
            )));
        }
        let relabeled = order
            .iter()
            .map(|&v| children[v].iter().map(|&c| label[c]).collect())
            .collect();
        Ok(PlaneTree {
            children: relabeled,
        })
    }

    /// A path on `k` vertices.
    pub fn path(k: usize) -> Self {
        assert!(k >= 1);
        let children = (0..k)
            .map(|v| if v + 1 < k { vec![v + 1] } else { vec![] })
            .collect();
        PlaneTree { children }
    }

    pub fn num_vertices(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Child counts in preorder (the Łukasiewicz word of the tree).
    fn preorder_degrees(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.children.len());
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            out.push(self.children[v].len());
            stack.extend(self.children[v].iter().rev());
        }
        out
    }
}

impl fmt::Display for PlaneTree {
    /// Nested parentheses, one pair per vertex: a 3-vertex cherry is `(()())`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &PlaneTree, v: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("(")?;
            for &c in t.children(v) {
                go(t, c, f)?;
            }
            f.write_str(")")
        }
        go(self, 0, f)
    }
}

/// Indices `(i_1, ..., i_n)` with `1 <= i_k <= k`: the variable picked from
/// each factor of `p_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChoiceSeq(Vec<u32>);

impl ChoiceSeq {
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        for (k, &i) in indices.iter().enumerate() {
            if i < 1 || i as usize > k + 1 {
                return Err(Error::Precondition(format!(
                    "choice {i} at factor {} must lie in 1..={}",
                    k + 1,
                    k + 1
                )));
            }
        }
        Ok(ChoiceSeq(indices))
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    /// Exponent vector of the product `x_{i_1} ... x_{i_n}`.
    pub fn exponents(&self) -> Vec<u32> {
        let mut a = vec![0u32; self.0.len()];
        for &i in &self.0 {
            a[i as usize - 1] += 1;
        }
        a
    }
}

pub fn monomial_to_ballot(a: &Monomial) -> BallotSeq {
    let b = a
        .exponents()
        .iter()
        .map(|&x| x as i32 - 1)
        .collect::<Vec<i32>>();
    debug_assert!(is_ballot(&b));
    BallotSeq(b)
}

pub fn ballot_to_monomial(b: &BallotSeq) -> Monomial {
    let a = b.0.iter().map(|&x| (x + 1) as u32).collect();
    Monomial::from_vec_unchecked(a)
}

/// Preorder traversal recording `children - 1` for every vertex except the
/// last one visited.
pub fn tree_to_ballot(t: &PlaneTree) -> Result<BallotSeq> {
    if t.num_vertices() < 2 {
        return Err(Error::MalformedTree("need at least 2 vertices".into()));
    }
    let mut deg = t.preorder_degrees();
    deg.pop();
    BallotSeq::new(deg.into_iter().map(|d| d as i32 - 1).collect())
}

/// Inverse of [`tree_to_ballot`]: entry `b_i` says the `i`-th vertex in
/// preorder has `b_i + 1` children; the final vertex is a leaf. Decoded with
/// a stack of vertices that still have open child slots.
pub fn ballot_to_tree(b: &BallotSeq) -> PlaneTree {
    let n = b.len();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    // (vertex, open slots)
    let mut open: Vec<(usize, usize)> = Vec::new();
    for v in 0..=n {
        if v > 0 {
            while open.last().is_some_and(|&(_, slots)| slots == 0) {
                open.pop();
            }
            let top = open
                .last_mut()
                .expect("ballot invariant leaves a parent open");
            top.1 -= 1;
            children[top.0].push(v);
        }
        let slots = if v < n { (b.0[v] + 1) as usize } else { 0 };
        open.push((v, slots));
    }
    PlaneTree { children }
}

/// The choice sequence built back to front: the last `a_n` factors choose
/// `x_n`, the `a_{n-1}` factors before them choose `x_{n-1}`, and so on, so
/// the result is `a_1` ones, then `a_2` twos, etc.
pub fn monomial_to_choices(a: &Monomial) -> ChoiceSeq {
    let n = a.len();
    let mut choices = vec![0u32; n];
    let mut end = n; // positions end.. are assigned (0-based)
    for k in (1..=n).rev() {
        let count = a.exponents()[k - 1] as usize;
        for slot in &mut choices[end - count..end] {
            *slot = k as u32;
        }
        end -= count;
    }
    debug_assert_eq!(end, 0);
    let seq = ChoiceSeq(choices);
    debug_assert!(ChoiceSeq::new(seq.0.clone()).is_ok());
    seq
}

/// Every choice sequence of length `n` (there are `n!`), in lexicographic
/// order.
pub fn all_choice_sequences(n: usize) -> impl Iterator<Item = ChoiceSeq> {
    let mut current: Option<Vec<u32>> = if n == 0 { None } else { Some(vec![1; n]) };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let c = current.as_mut().unwrap();
        match (0..n).rev().find(|&k| (c[k] as usize) < k + 1) {
            Some(k) => {
                c[k] += 1;
                for x in &mut c[k + 1..] {
                    *x = 1;
                }
            }
            None => current = None,
        }
        Some(ChoiceSeq(out))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::enumerate;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    fn cherry() -> PlaneTree {
        PlaneTree::from_children(vec![vec![1, 2], vec![], vec![]], 0).unwrap()
    }

    #[test]
    fn ballot_examples() {
        assert_eq!(monomial_to_ballot(&m(&[1])).entries(), &[0]);
        assert_eq!(monomial_to_ballot(&m(&[1, 1, 1])).entries(), &[0, 0, 0]);
        assert_eq!(monomial_to_ballot(&m(&[3, 0, 0])).entries(), &[2, -1, -1]);

        let b = |v: &[i32]| BallotSeq::new(v.to_vec()).unwrap();
        assert_eq!(ballot_to_monomial(&b(&[0])), m(&[1]));
        assert_eq!(ballot_to_monomial(&b(&[2, -1, -1])), m(&[3, 0, 0]));
        assert_eq!(ballot_to_monomial(&b(&[1, 0, -1, 0])), m(&[2, 1, 0, 1]));

        assert!(BallotSeq::new(vec![-1, 1]).is_err());
        assert!(BallotSeq::new(vec![1, -2, 1]).is_err());
        assert!(BallotSeq::new(vec![1, 0]).is_err());
    }

    #[test]
    fn tree_examples() {
        assert_eq!(tree_to_ballot(&PlaneTree::path(2)).unwrap().entries(), &[0]);
        assert_eq!(tree_to_ballot(&cherry()).unwrap().entries(), &[1, -1]);
        assert_eq!(
            tree_to_ballot(&PlaneTree::path(4)).unwrap().entries(),
            &[0, 0, 0]
        );

        let b = |v: &[i32]| BallotSeq::new(v.to_vec()).unwrap();
        assert_eq!(ballot_to_tree(&b(&[0])), PlaneTree::path(2));
        assert_eq!(ballot_to_tree(&b(&[1, -1])), cherry());
        assert_eq!(cherry().to_string(), "(()())");
    }

    #[test]
    fn tree_labels_are_canonical() {
        // same cherry with the root labeled 2
        let t = PlaneTree::from_children(vec![vec![], vec![], vec![0, 1]], 2).unwrap();
        assert_eq!(t, cherry());
        assert!(PlaneTree::from_children(vec![vec![1], vec![0]], 0).is_err());
        assert!(PlaneTree::from_children(vec![vec![], vec![]], 0).is_err());
        assert!(tree_to_ballot(&PlaneTree::path(1)).is_err());
    }

    #[test]
    fn trees_from_b4_are_distinct() {
        let trees: std::collections::HashSet<_> = enumerate(4)
            .unwrap()
            .map(|a| ballot_to_tree(&monomial_to_ballot(&a)))
            .collect();
        assert_eq!(trees.len(), 14);
    }

    #[test]
    fn choice_examples() {
        assert_eq!(monomial_to_choices(&m(&[1, 1, 1])).indices(), &[1, 2, 3]);
        assert_eq!(monomial_to_choices(&m(&[5, 0, 0, 0, 0])).indices(), &[1; 5]);
        assert_eq!(monomial_to_choices(&m(&[2, 1, 0])).indices(), &[1, 1, 2]);
        assert!(ChoiceSeq::new(vec![1, 3]).is_err());
        assert!(ChoiceSeq::new(vec![0]).is_err());
    }

    #[test]
    fn choice_sequence_count_is_factorial() {
        for n in 1..=6 {
            let expect: usize = (1..=n).product();
            assert_eq!(all_choice_sequences(n).count(), expect);
        }
        assert_eq!(all_choice_sequences(0).count(), 0);
    }
}
