//! Bounded two-sided rewriting by the dimer relations: replacing the
//! complementary arc of an arrow by the arc from its other face.

use std::collections::{BTreeSet, VecDeque};

use crate::paths::Path;
use crate::quiver::DimerQuiver;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimerEq {
    Equal,
    NotEqualWithinBound,
}

/// The rewriting rules as pairs of application-order arrow sequences.
pub fn dimer_relations(quiver: &DimerQuiver) -> Vec<(Vec<usize>, Vec<usize>)> {
    quiver
        .complementary_arcs()
        .into_iter()
        .filter(|(l, r)| l != r && !l.is_empty() && !r.is_empty())
        .collect()
}

fn occurrences(seq: &[usize], pat: &[usize]) -> Vec<usize> {
    if pat.is_empty() || pat.len() > seq.len() {
        return Vec::new();
    }
    (0..=seq.len() - pat.len()).filter(|&k| &seq[k..k + pat.len()] == pat).collect()
}

/// Breadth-first closure of `p` under the relations, exploring sequences of
/// length at most `bound`; `Equal` is definitive, the other verdict is a
/// semi-decision.
pub fn dimer_equal_bounded(
    quiver: &DimerQuiver,
    p: &Path,
    q: &Path,
    bound: usize,
) -> DimerEq {
    if p.tail() != q.tail() || p.head(quiver) != q.head(quiver) {
        return DimerEq::NotEqualWithinBound;
    }
    if p.arrows() == q.arrows() {
        return DimerEq::Equal;
    }
    let relations = dimer_relations(quiver);
    let target = q.arrows().to_vec();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    seen.insert(p.arrows().to_vec());
    queue.push_back(p.arrows().to_vec());
    while let Some(seq) = queue.pop_front() {
        for (lhs, rhs) in &relations {
            for (pat, rep) in [(lhs, rhs), (rhs, lhs)] {
                for at in occurrences(&seq, pat) {
                    let mut next = Vec::with_capacity(seq.len() - pat.len() + rep.len());
                    next.extend_from_slice(&seq[..at]);
                    next.extend_from_slice(rep);
                    next.extend_from_slice(&seq[at + pat.len()..]);
                    if next.len() > bound || seen.contains(&next) {
                        continue;
                    }
                    if next == target {
                        return DimerEq::Equal;
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    DimerEq::NotEqualWithinBound
}

/// Bounded closure of `p` itself, returned as paths; used both for homotopy
/// searches and for the soundness test that rewriting refines labeling
/// equality.
pub fn rewrite_closure(quiver: &DimerQuiver, p: &Path, bound: usize, node_cap: usize) -> Vec<Path> {
    let relations = dimer_relations(quiver);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(p.arrows().to_vec());
    queue.push_back(p.arrows().to_vec());
    while let Some(seq) = queue.pop_front() {
        out.push(Path::new(quiver, p.tail(), seq.clone()).expect("rewrites preserve endpoints"));
        if out.len() >= node_cap {
            break;
        }
        for (lhs, rhs) in &relations {
            for (pat, rep) in [(lhs, rhs), (rhs, lhs)] {
                for at in occurrences(&seq, pat) {
                    let mut next = Vec::with_capacity(seq.len() - pat.len() + rep.len());
                    next.extend_from_slice(&seq[..at]);
                    next.extend_from_slice(rep);
                    next.extend_from_slice(&seq[at + pat.len()..]);
                    if next.len() > bound || seen.contains(&next) {
                        continue;
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    out
}
