//! Combinatorial dimer quivers: arrows with crossing vectors, oriented faces,
//! embedding validation, and the rotation system the faces induce.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::lattice::lattice_rank;
use crate::surface::{HomologyClass, PolygonSurface};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub tail: usize,
    pub head: usize,
    pub crossing: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Orientation {
    Ccw,
    Cw,
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Orientation::Ccw => write!(f, "ccw"),
            Orientation::Cw => write!(f, "cw"),
        }
    }
}

/// One face of the embedding. `arrows` is the boundary traversal in
/// application order (the first listed arrow acts first); the traversal
/// rotation is kept exactly as given in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub orientation: Orientation,
    pub arrows: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct DimerQuiver {
    pub surface: PolygonSurface,
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
    pub faces: Vec<Face>,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EndKind {
    In,
    Out,
}

/// One end of an arrow incident to a vertex. A loop contributes both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowEnd {
    pub arrow: usize,
    pub kind: EndKind,
}

/// Cyclic order of arrow ends around each vertex (index = vertex - 1).
#[derive(Debug, Clone)]
pub struct RotationSystem {
    pub orders: Vec<Vec<ArrowEnd>>,
}

impl RotationSystem {
    /// Position of an end in the cyclic order at `vertex`.
    pub fn position(&self, vertex: usize, end: ArrowEnd) -> Option<usize> {
        self.orders[vertex - 1].iter().position(|&e| e == end)
    }
}

impl DimerQuiver {
    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn arrow(&self, idx: usize) -> &Arrow {
        &self.arrows[idx]
    }

    pub fn rank(&self) -> usize {
        self.surface.side_pairs
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&k| self.arrows[k].tail == v)
    }

    /// Faces listing `arrow` in their traversal, by orientation.
    pub fn faces_of_arrow(&self, arrow: usize, orientation: Orientation) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&f| {
                self.faces[f].orientation == orientation && self.faces[f].arrows.contains(&arrow)
            })
            .collect()
    }

    fn face_composes(&self, face: &Face) -> bool {
        if face.arrows.is_empty() {
            return false;
        }
        let n = face.arrows.len();
        (0..n).all(|k| {
            let cur = &self.arrows[face.arrows[k]];
            let next = &self.arrows[face.arrows[(k + 1) % n]];
            cur.head == next.tail
        })
    }

    fn face_label(&self, f: usize) -> String {
        let face = &self.faces[f];
        let ids: Vec<&str> = face.arrows.iter().map(|&a| self.arrows[a].id.as_str()).collect();
        format!("{} [{}]", face.orientation, ids.join(" "))
    }

    /// Runs every embedding axiom and reports each as pass/fail with a
    /// witness for failures.
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();
        let n = self.rank();

        // Face boundaries must be closed composable traversals.
        let bad_face = (0..self.faces.len()).find(|&f| !self.face_composes(&self.faces[f]));
        checks.push(CheckResult {
            name: "face-composability",
            pass: bad_face.is_none(),
            witness: bad_face.map(|f| self.face_label(f)),
        });

        // Each arrow appears once in a ccw face and once in a cw face.
        let mut inc_witness = None;
        for a in 0..self.arrows.len() {
            for orientation in [Orientation::Ccw, Orientation::Cw] {
                let count: usize = self
                    .faces
                    .iter()
                    .filter(|fc| fc.orientation == orientation)
                    .map(|fc| fc.arrows.iter().filter(|&&x| x == a).count())
                    .sum();
                if count != 1 && inc_witness.is_none() {
                    inc_witness =
                        Some(format!("{} in {} {} faces", self.arrows[a].id, count, orientation));
                }
            }
        }
        checks.push(CheckResult {
            name: "arrow-face-incidence",
            pass: inc_witness.is_none(),
            witness: inc_witness,
        });

        let euler = self.vertex_count as i64 - self.arrows.len() as i64 + self.faces.len() as i64;
        checks.push(CheckResult {
            name: "euler-characteristic",
            pass: euler == self.surface.euler_char,
            witness: (euler != self.surface.euler_char)
                .then(|| format!("V-E+F = {euler}, expected {}", self.surface.euler_char)),
        });

        let bad_sum = (0..self.faces.len()).find(|&f| {
            let mut sum = vec![0i64; n];
            for &a in &self.faces[f].arrows {
                for (s, c) in sum.iter_mut().zip(&self.arrows[a].crossing) {
                    *s += c;
                }
            }
            sum.iter().any(|&c| c != 0)
        });
        checks.push(CheckResult {
            name: "face-crossing-sum-zero",
            pass: bad_sum.is_none(),
            witness: bad_sum.map(|f| self.face_label(f)),
        });

        let connected = self.underlying_connected();
        checks.push(CheckResult {
            name: "connected",
            pass: connected,
            witness: (!connected).then(|| "underlying graph is disconnected".to_string()),
        });

        let rank = lattice_rank(&self.cycle_basis_crossings());
        checks.push(CheckResult {
            name: "crossing-lattice-rank",
            pass: rank == n,
            witness: (rank != n).then(|| format!("cycle-basis lattice rank {rank}, expected {n}")),
        });

        let rot = self.rotation_system();
        checks.push(CheckResult {
            name: "rotation-consistency",
            pass: rot.is_ok(),
            witness: rot.err().map(|e| e.to_string()),
        });

        ValidationReport { checks }
    }

    fn underlying_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertex_count + 1];
        let mut stack = vec![1usize];
        seen[1] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.tail, a.head), (a.head, a.tail)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        (1..=self.vertex_count).all(|v| seen[v])
    }

    /// Crossing sums over the fundamental cycles of a spanning tree of the
    /// underlying graph.
    pub fn cycle_basis_crossings(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        // Spanning tree by undirected BFS; record for each vertex the signed
        // crossing sum of its tree path from vertex 1.
        let mut potential: Vec<Option<Vec<i64>>> = vec![None; self.vertex_count + 1];
        let mut in_tree = vec![false; self.arrows.len()];
        if self.vertex_count == 0 {
            return Vec::new();
        }
        potential[1] = Some(vec![0; n]);
        let mut queue = std::collections::VecDeque::from([1usize]);
        while let Some(v) = queue.pop_front() {
            let base = potential[v].clone().unwrap();
            for k in 0..self.arrows.len() {
                let a = &self.arrows[k];
                let (from, to, sign) = if a.tail == v {
                    (a.tail, a.head, 1i64)
                } else if a.head == v {
                    (a.head, a.tail, -1i64)
                } else {
                    continue;
                };
                let _ = from;
                if potential[to].is_none() {
                    let mut p = base.clone();
                    for (pc, c) in p.iter_mut().zip(&a.crossing) {
                        *pc += sign * c;
                    }
                    potential[to] = Some(p);
                    in_tree[k] = true;
                    queue.push_back(to);
                }
            }
        }
        // Each non-tree arrow closes one fundamental cycle.
        let mut rows = Vec::new();
        for k in 0..self.arrows.len() {
            if in_tree[k] {
                continue;
            }
            let a = &self.arrows[k];
            let (pt, ph) = match (&potential[a.tail], &potential[a.head]) {
                (Some(pt), Some(ph)) => (pt, ph),
                _ => continue,
            };
            let row: Vec<i64> = (0..n).map(|i| pt[i] + a.crossing[i] - ph[i]).collect();
            rows.push(row);
        }
        rows
    }

    /// Cyclic order of arrow ends at each vertex, read off by walking the
    /// alternating ccw/cw face corners. Fails when the corner data does not
    /// close into a single orbit per vertex.
    pub fn rotation_system(&self) -> Result<RotationSystem> {
        // succ(in-end a) = out-end b where (a, b) is a corner of the ccw face
        // through a; succ(out-end b) = in-end a where (a, b) is a corner of
        // the cw face through b.
        let mut succ_in: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut succ_out: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for face in &self.faces {
            let m = face.arrows.len();
            for k in 0..m {
                let a = face.arrows[k];
                let b = face.arrows[(k + 1) % m];
                let v = self.arrows[a].head;
                match face.orientation {
                    Orientation::Ccw => {
                        if succ_in.insert((v, a), b).is_some() {
                            return Err(Error::Embedding {
                                vertex: v,
                                msg: format!(
                                    "arrow {} has two ccw successors",
                                    self.arrows[a].id
                                ),
                            });
                        }
                    }
                    Orientation::Cw => {
                        if succ_out.insert((v, b), a).is_some() {
                            return Err(Error::Embedding {
                                vertex: v,
                                msg: format!(
                                    "arrow {} has two cw predecessors",
                                    self.arrows[b].id
                                ),
                            });
                        }
                    }
                }
            }
        }

        let mut orders = Vec::with_capacity(self.vertex_count);
        for v in 1..=self.vertex_count {
            let mut ends: BTreeSet<ArrowEnd> = BTreeSet::new();
            for (k, a) in self.arrows.iter().enumerate() {
                if a.head == v {
                    ends.insert(ArrowEnd { arrow: k, kind: EndKind::In });
                }
                if a.tail == v {
                    ends.insert(ArrowEnd { arrow: k, kind: EndKind::Out });
                }
            }
            if ends.is_empty() {
                return Err(Error::Embedding { vertex: v, msg: "isolated vertex".into() });
            }
            let start = *ends.iter().next().unwrap();
            let mut order = Vec::with_capacity(ends.len());
            let mut cur = start;
            loop {
                order.push(cur);
                let next = match cur.kind {
                    EndKind::In => succ_in
                        .get(&(v, cur.arrow))
                        .map(|&b| ArrowEnd { arrow: b, kind: EndKind::Out }),
                    EndKind::Out => succ_out
                        .get(&(v, cur.arrow))
                        .map(|&a| ArrowEnd { arrow: a, kind: EndKind::In }),
                };
                let next = next.ok_or_else(|| Error::Embedding {
                    vertex: v,
                    msg: format!("no corner continues arrow {}", self.arrows[cur.arrow].id),
                })?;
                if next == start {
                    break;
                }
                if order.len() > ends.len() {
                    return Err(Error::Embedding {
                        vertex: v,
                        msg: "corner walk does not close".into(),
                    });
                }
                cur = next;
            }
            if order.len() != ends.len() {
                return Err(Error::Embedding {
                    vertex: v,
                    msg: format!(
                        "corner walk closes after {} of {} ends",
                        order.len(),
                        ends.len()
                    ),
                });
            }
            orders.push(order);
        }
        Ok(RotationSystem { orders })
    }

    /// The unit cycle at `vertex`: the rotation of the least-id ccw face
    /// through the vertex, based at its first visit in the stored traversal.
    pub fn unit_cycle_arrows(&self, vertex: usize) -> Result<Vec<usize>> {
        let mut best: Option<(String, usize)> = None;
        for (f, face) in self.faces.iter().enumerate() {
            if face.orientation != Orientation::Ccw {
                continue;
            }
            if !face.arrows.iter().any(|&a| self.arrows[a].tail == vertex) {
                continue;
            }
            let least = face
                .arrows
                .iter()
                .map(|&a| self.arrows[a].id.clone())
                .min()
                .unwrap();
            if best.as_ref().is_none_or(|(id, _)| least < *id) {
                best = Some((least, f));
            }
        }
        let (_, f) = best.ok_or_else(|| {
            Error::Precondition(format!("no ccw face passes through vertex {vertex}"))
        })?;
        let arrows = &self.faces[f].arrows;
        let pos = arrows
            .iter()
            .position(|&a| self.arrows[a].tail == vertex)
            .expect("face passes through vertex");
        let mut rotated = arrows[pos..].to_vec();
        rotated.extend_from_slice(&arrows[..pos]);
        Ok(rotated)
    }

    /// The two complementary arcs of each arrow, as application-order arrow
    /// sequences: rewriting one into the other generates the dimer relations.
    pub fn complementary_arcs(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut rels = Vec::with_capacity(self.arrows.len());
        for a in 0..self.arrows.len() {
            let mut arcs = [Vec::new(), Vec::new()];
            for (slot, orientation) in [Orientation::Ccw, Orientation::Cw].iter().enumerate() {
                for face in self.faces.iter().filter(|f| f.orientation == *orientation) {
                    if let Some(pos) = face.arrows.iter().position(|&x| x == a) {
                        let mut arc = face.arrows[pos + 1..].to_vec();
                        arc.extend_from_slice(&face.arrows[..pos]);
                        arcs[slot] = arc;
                    }
                }
            }
            rels.push((arcs[0].clone(), arcs[1].clone()));
        }
        rels
    }

    pub fn crossing_of(&self, arrow: usize) -> &[i64] {
        &self.arrows[arrow].crossing
    }

    pub fn homology_of_arrows(&self, arrows: &[usize]) -> HomologyClass {
        let mut h = HomologyClass::zero(self.rank());
        for &a in arrows {
            h.add_assign(&self.arrows[a].crossing);
        }
        h
    }

    /// True when the subgraph on all vertices with the given arrows is
    /// strongly connected; a single vertex counts via its trivial path.
    pub fn strongly_connected_with(&self, arrows: &BTreeSet<usize>) -> bool {
        self.strongly_connected_on(&(1..=self.vertex_count).collect::<BTreeSet<_>>(), arrows)
    }

    /// Strong connectivity of `vertices` using only the given arrows.
    pub fn strongly_connected_on(
        &self,
        vertices: &BTreeSet<usize>,
        arrows: &BTreeSet<usize>,
    ) -> bool {
        if vertices.is_empty() {
            return false;
        }
        let start = *vertices.iter().next().unwrap();
        let reach = |forward: bool| -> BTreeSet<usize> {
            let mut seen = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &k in arrows {
                    let a = &self.arrows[k];
                    if !vertices.contains(&a.tail) || !vertices.contains(&a.head) {
                        continue;
                    }
                    let (from, to) = if forward { (a.tail, a.head) } else { (a.head, a.tail) };
                    if from == v && !seen.contains(&to) {
                        seen.insert(to);
                        stack.push(to);
                    }
                }
            }
            seen
        };
        let fwd = reach(true);
        let bwd = reach(false);
        vertices.iter().all(|v| fwd.contains(v) && bwd.contains(v))
    }
}
