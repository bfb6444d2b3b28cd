//! Paths in a dimer quiver and equality in the labeling quotient.
//!
//! A path stores its base vertex and its arrows in application order (first
//! applied first). The literal syntax writes composition order instead,
//! rightmost applied first, with the base after `@`: the unit cycle at
//! vertex 1 of the one-vertex torus quiver is `l3.l2.l1@1`.

use crate::error::{Error, Result};
use crate::matchings::{Basis, LabelTable, Monomial};
use crate::quiver::DimerQuiver;
use crate::surface::HomologyClass;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    base: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Path {
        Path { base: vertex, arrows: Vec::new() }
    }

    /// Builds a path from arrows in application order, checking that
    /// consecutive arrows compose.
    pub fn new(quiver: &DimerQuiver, base: usize, arrows: Vec<usize>) -> Result<Path> {
        let mut at = base;
        for &a in &arrows {
            let arrow = quiver.arrow(a);
            if arrow.tail != at {
                return Err(Error::Composition { head: at, tail: arrow.tail });
            }
            at = arrow.head;
        }
        Ok(Path { base, arrows })
    }

    pub fn tail(&self) -> usize {
        self.base
    }

    pub fn head(&self, quiver: &DimerQuiver) -> usize {
        match self.arrows.last() {
            Some(&a) => quiver.arrow(a).head,
            None => self.base,
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn is_cycle(&self, quiver: &DimerQuiver) -> bool {
        self.tail() == self.head(quiver)
    }

    /// Vertices visited, in order; length is len() + 1.
    pub fn vertex_sequence(&self, quiver: &DimerQuiver) -> Vec<usize> {
        let mut seq = Vec::with_capacity(self.arrows.len() + 1);
        seq.push(self.base);
        for &a in &self.arrows {
            seq.push(quiver.arrow(a).head);
        }
        seq
    }

    /// Contiguous slice [from, to) as a path based at its own tail.
    pub fn subpath(&self, quiver: &DimerQuiver, from: usize, to: usize) -> Path {
        let base = if from == 0 {
            self.base
        } else {
            quiver.arrow(self.arrows[from - 1]).head
        };
        Path { base, arrows: self.arrows[from..to].to_vec() }
    }

    /// All rotations of a cycle, one based at each traversal position.
    pub fn rotations(&self, quiver: &DimerQuiver) -> Vec<Path> {
        debug_assert!(self.is_cycle(quiver));
        (0..self.arrows.len().max(1))
            .map(|k| {
                let mut arrows = self.arrows[k..].to_vec();
                arrows.extend_from_slice(&self.arrows[..k]);
                let base = if k == 0 { self.base } else { quiver.arrow(self.arrows[k - 1]).head };
                Path { base, arrows }
            })
            .collect()
    }

    pub fn display(&self, quiver: &DimerQuiver) -> String {
        if self.arrows.is_empty() {
            return format!("e@{}", self.base);
        }
        let comp: Vec<&str> =
            self.arrows.iter().rev().map(|&a| quiver.arrow(a).id.as_str()).collect();
        format!("{}@{}", comp.join("."), self.base)
    }
}

/// The concatenation pq, with q applied first.
pub fn compose(quiver: &DimerQuiver, p: &Path, q: &Path) -> Result<Path> {
    if p.tail() != q.head(quiver) {
        return Err(Error::Composition { head: q.head(quiver), tail: p.tail() });
    }
    let mut arrows = q.arrows.clone();
    arrows.extend_from_slice(&p.arrows);
    Ok(Path { base: q.base, arrows })
}

/// Parses `a.d.c.b@1` (composition order) or `e@1` / `@1` for a trivial path.
pub fn parse_path_literal(quiver: &DimerQuiver, text: &str) -> Result<Path> {
    let (arrows_part, base_part) = text
        .rsplit_once('@')
        .ok_or_else(|| Error::Parse { line: 0, msg: format!("path literal {text:?} has no @") })?;
    let base: usize = base_part
        .trim()
        .parse()
        .map_err(|_| Error::Parse { line: 0, msg: format!("bad base vertex {base_part:?}") })?;
    if base == 0 || base > quiver.vertex_count {
        return Err(Error::Parse { line: 0, msg: format!("unknown base vertex {base}") });
    }
    let arrows_part = arrows_part.trim();
    if arrows_part.is_empty() || arrows_part == "e" {
        return Ok(Path::trivial(base));
    }
    let mut arrows = Vec::new();
    for id in arrows_part.split('.').rev() {
        let id = id.trim();
        let k = quiver
            .arrow_index(id)
            .ok_or_else(|| Error::Parse { line: 0, msg: format!("unknown arrow {id:?}") })?;
        arrows.push(k);
    }
    Path::new(quiver, base, arrows)
}

/// Sum of arrow crossing vectors; a homology class for cycles, a relative
/// class otherwise.
pub fn path_homology(quiver: &DimerQuiver, p: &Path) -> HomologyClass {
    quiver.homology_of_arrows(p.arrows())
}

pub fn path_label(table: &LabelTable, basis: Basis, p: &Path) -> Monomial {
    table.label_of_arrows(basis, p.arrows())
}

/// True when some proper contiguous subpath is a cycle, i.e. a vertex
/// repeats strictly inside the traversal.
pub fn has_cyclic_subpath(quiver: &DimerQuiver, p: &Path) -> bool {
    let seq = p.vertex_sequence(quiver);
    let n = seq.len();
    for i in 0..n {
        for j in i + 1..n {
            if seq[i] == seq[j] && !(i == 0 && j == n - 1) {
                return true;
            }
        }
    }
    false
}

/// Equality in the labeling quotient: coincident tails, heads, and labels
/// over all matchings.
pub fn ghor_equal(quiver: &DimerQuiver, table: &LabelTable, p: &Path, q: &Path) -> bool {
    p.tail() == q.tail()
        && p.head(quiver) == q.head(quiver)
        && path_label(table, Basis::All, p) == path_label(table, Basis::All, q)
}

/// For cycles p, q: the integer l with label(p) = label(q) * sigma^l, if the
/// labels differ by an exact sigma power.
pub fn sigma_power_relation(table: &LabelTable, p: &Path, q: &Path) -> Option<i64> {
    let lp = path_label(table, Basis::All, p);
    let lq = path_label(table, Basis::All, q);
    lp.sigma_power_from(&lq)
}

/// The unit cycle at a vertex, as a path.
pub fn unit_cycle_at(quiver: &DimerQuiver, vertex: usize) -> Result<Path> {
    let arrows = quiver.unit_cycle_arrows(vertex)?;
    Path::new(quiver, vertex, arrows)
}

/// Paths from `start` of length at most `max_len`, in (length, lex) order.
pub fn paths_from(quiver: &DimerQuiver, start: usize, max_len: usize) -> Vec<Path> {
    let mut out = vec![Path::trivial(start)];
    let mut frontier = vec![Path::trivial(start)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            let head = p.head(quiver);
            for a in quiver.arrows_from(head) {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                next.push(Path { base: start, arrows });
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
