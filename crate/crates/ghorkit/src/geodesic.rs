//! Bounded geodesic certification via the homology cover, and the
//! no-transverse-crossing test for cycle pairs.

use std::collections::BTreeSet;

use crate::matchings::{Basis, LabelTable, Monomial};
use crate::paths::{compose, path_label, unit_cycle_at, Path};
use crate::quiver::{ArrowEnd, DimerQuiver, EndKind, RotationSystem};
use crate::rewrite::{dimer_equal_bounded, DimerEq};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certify {
    Geodesic,
    NotGeodesic,
    Unknown,
}

/// All paths from `tail` to `head` with the given label over all matchings,
/// up to `max_len` arrows. When every arrow carries a nonempty label the
/// enumeration is complete once `max_len` reaches the label degree.
pub fn enumerate_representatives(
    quiver: &DimerQuiver,
    table: &LabelTable,
    tail: usize,
    head: usize,
    label: &Monomial,
    max_len: usize,
) -> Vec<Path> {
    let mut out = Vec::new();
    let mut arrows: Vec<usize> = Vec::new();
    fn dfs(
        quiver: &DimerQuiver,
        table: &LabelTable,
        at: usize,
        head: usize,
        remaining: &mut Monomial,
        arrows: &mut Vec<usize>,
        max_len: usize,
        tail: usize,
        out: &mut Vec<Path>,
    ) {
        if at == head && remaining.is_unit() {
            out.push(Path::new(quiver, tail, arrows.clone()).expect("built composable"));
        }
        if arrows.len() == max_len {
            return;
        }
        for a in quiver.arrows_from(at) {
            let l = table.arrow_label(Basis::All, a);
            let next = remaining.div(l);
            if !next.is_nonnegative() {
                continue;
            }
            arrows.push(a);
            let saved = std::mem::replace(remaining, next);
            dfs(quiver, table, quiver.arrow(a).head, head, remaining, arrows, max_len, tail, out);
            *remaining = saved;
            arrows.pop();
        }
    }
    let mut remaining = label.clone();
    dfs(quiver, table, tail, head, &mut remaining, &mut arrows, max_len, tail, &mut out);
    out
}

/// Lift states of a path in the homology cover: (vertex, accumulated class).
fn lift_states(quiver: &DimerQuiver, p: &Path) -> Vec<(usize, Vec<i64>)> {
    let n = quiver.rank();
    let mut states = Vec::with_capacity(p.len() + 1);
    let mut class = vec![0i64; n];
    states.push((p.tail(), class.clone()));
    for &a in p.arrows() {
        for (c, d) in class.iter_mut().zip(quiver.crossing_of(a)) {
            *c += d;
        }
        states.push((quiver.arrow(a).head, class.clone()));
    }
    states
}

fn is_literal_unit_cycle(quiver: &DimerQuiver, p: &Path) -> bool {
    quiver.faces.iter().any(|f| {
        f.arrows.len() == p.len() && {
            let rots = (0..f.arrows.len()).any(|k| {
                let mut rot = f.arrows[k..].to_vec();
                rot.extend_from_slice(&f.arrows[..k]);
                rot == p.arrows()
            });
            rots
        }
    })
}

/// A closed null-homologous subpath is verified contractible when it is a
/// literal unit cycle, or rewrites to a power of the unit cycle at its base
/// within the bound.
fn verified_contractible(
    quiver: &DimerQuiver,
    table: &LabelTable,
    sub: &Path,
    bound: usize,
) -> bool {
    if is_literal_unit_cycle(quiver, sub) {
        return true;
    }
    let label = path_label(table, Basis::All, sub);
    let k = match label.sigma_power_from(&Monomial::unit(table.basis_len(Basis::All))) {
        Some(k) if k >= 1 => k,
        _ => return false,
    };
    let unit = match unit_cycle_at(quiver, sub.tail()) {
        Ok(u) => u,
        Err(_) => return false,
    };
    let mut power = Path::trivial(sub.tail());
    for _ in 0..k {
        power = compose(quiver, &unit, &power).expect("unit cycles compose");
    }
    let inner = bound.max(sub.len().max(power.len()) + 2 * quiver.arrows.len());
    dimer_equal_bounded(quiver, sub, &power, inner) == DimerEq::Equal
}

/// Certifies whether a cycle is geodesic. Sound for `Geodesic` whenever the
/// bound covers every representative; `NotGeodesic` requires a closed
/// subpath in some lift that is verified contractible.
pub fn geodesic_certify_bounded(
    quiver: &DimerQuiver,
    table: &LabelTable,
    cycle: &Path,
    bound: usize,
) -> Certify {
    let label = path_label(table, Basis::All, cycle);
    let mut reps = enumerate_representatives(
        quiver,
        table,
        cycle.tail(),
        cycle.tail(),
        &label,
        bound,
    );
    if !reps.contains(cycle) {
        reps.push(cycle.clone());
    }
    // Complete when no representative can outrun the bound: with all arrow
    // labels nonempty, rep length never exceeds the label degree.
    let every_arrow_labeled =
        (0..quiver.arrows.len()).all(|a| !table.arrow_label(Basis::All, a).is_unit());
    let complete = every_arrow_labeled && label.degree() >= 0 && (label.degree() as usize) <= bound;

    let mut dirty = false;
    for rep in &reps {
        for rot in rep.rotations(quiver) {
            let states = lift_states(quiver, &rot);
            let mut seen: BTreeSet<&(usize, Vec<i64>)> = BTreeSet::new();
            let mut repeat: Option<(usize, usize)> = None;
            'scan: for (j, s) in states.iter().enumerate() {
                if seen.contains(s) {
                    for i in 0..j {
                        if &states[i] == s {
                            repeat = Some((i, j));
                            break 'scan;
                        }
                    }
                }
                seen.insert(s);
            }
            if let Some((i, j)) = repeat {
                let sub = rot.subpath(quiver, i, j);
                if verified_contractible(quiver, table, &sub, bound) {
                    return Certify::NotGeodesic;
                }
                dirty = true;
            }
        }
    }
    if dirty {
        Certify::Unknown
    } else if complete {
        Certify::Geodesic
    } else {
        Certify::Unknown
    }
}

/// One visit of a cycle through a vertex: the in and out ends it uses.
#[derive(Debug, Clone, Copy)]
struct Pass {
    vertex: usize,
    in_end: ArrowEnd,
    out_end: ArrowEnd,
}

fn passes(quiver: &DimerQuiver, c: &Path) -> Vec<Pass> {
    let n = c.len();
    (0..n)
        .map(|k| {
            let out_arrow = c.arrows()[k];
            let in_arrow = c.arrows()[(k + n - 1) % n];
            Pass {
                vertex: quiver.arrow(out_arrow).tail,
                in_end: ArrowEnd { arrow: in_arrow, kind: EndKind::In },
                out_end: ArrowEnd { arrow: out_arrow, kind: EndKind::Out },
            }
        })
        .collect()
}

fn chords_interleave(order: &[ArrowEnd], a: (ArrowEnd, ArrowEnd), b: (ArrowEnd, ArrowEnd)) -> bool {
    let pos = |e: ArrowEnd| order.iter().position(|&x| x == e).expect("end in rotation");
    let (a0, a1) = (pos(a.0), pos(a.1));
    let (b0, b1) = (pos(b.0), pos(b.1));
    let n = order.len();
    let between = |x: usize| -> bool {
        // strictly inside the arc from a0 to a1 going in increasing direction
        let span = (a1 + n - a0) % n;
        let off = (x + n - a0) % n;
        off > 0 && off < span
    };
    between(b0) != between(b1)
}

/// Whether going around the rotation at `vertex` starting just after `from`,
/// `x` appears before `y`.
fn appears_before(order: &[ArrowEnd], from: ArrowEnd, x: ArrowEnd, y: ArrowEnd) -> bool {
    let pos = |e: ArrowEnd| order.iter().position(|&p| p == e).expect("end in rotation");
    let n = order.len();
    let f = pos(from);
    let dx = (pos(x) + n - f) % n;
    let dy = (pos(y) + n - f) % n;
    dx < dy
}

fn same_cycle_up_to_rotation(quiver: &DimerQuiver, c1: &Path, c2: &Path) -> bool {
    c1.len() == c2.len() && c1.rotations(quiver).iter().any(|r| r.arrows() == c2.arrows())
}

/// True when the two cycles never transversely cross: at shared vertices
/// their end pairs do not interleave, and along each maximal shared arrow
/// segment the entry and exit sides agree.
pub fn parallel(quiver: &DimerQuiver, rot: &RotationSystem, c1: &Path, c2: &Path) -> bool {
    if c1.is_empty() || c2.is_empty() {
        return true;
    }
    if same_cycle_up_to_rotation(quiver, c1, c2) {
        return true;
    }
    let p1 = passes(quiver, c1);
    let p2 = passes(quiver, c2);
    let n1 = c1.len();
    let n2 = c2.len();

    // Positions (i, j) where both cycles traverse the same arrow.
    let shared: Vec<(usize, usize)> = (0..n1)
        .flat_map(|i| (0..n2).map(move |j| (i, j)))
        .filter(|&(i, j)| c1.arrows()[i] == c2.arrows()[j])
        .collect();
    let shared_set: BTreeSet<(usize, usize)> = shared.iter().copied().collect();

    // Maximal shared segments: follow (i, j) -> (i+1, j+1).
    for &(i, j) in &shared {
        if shared_set.contains(&((i + n1 - 1) % n1, (j + n2 - 1) % n2)) {
            continue; // not a segment start
        }
        let (mut ei, mut ej, mut len) = (i, j, 1usize);
        while shared_set.contains(&((ei + 1) % n1, (ej + 1) % n2)) && len < n1.max(n2) {
            ei = (ei + 1) % n1;
            ej = (ej + 1) % n2;
            len += 1;
        }
        // Ends around the segment: entries at its start, exits at its end.
        let start_vertex = quiver.arrow(c1.arrows()[i]).tail;
        let end_vertex = quiver.arrow(c1.arrows()[ei]).head;
        let s_end = ArrowEnd { arrow: c1.arrows()[i], kind: EndKind::Out };
        let t_end = ArrowEnd { arrow: c1.arrows()[ei], kind: EndKind::In };
        let in1 = p1[i].in_end;
        let in2 = p2[j].in_end;
        let out1 = p1[(ei + 1) % n1].out_end;
        let out2 = p2[(ej + 1) % n2].out_end;
        if in1 == in2 || out1 == out2 {
            // The divergence itself is shared; covered by another segment.
            continue;
        }
        let order_s = &rot.orders[start_vertex - 1];
        let order_t = &rot.orders[end_vertex - 1];
        let side_start = appears_before(order_s, s_end, in1, in2);
        let side_end = appears_before(order_t, t_end, out1, out2);
        if side_start == side_end {
            return false;
        }
    }

    // Plain vertex touches with four distinct ends.
    for a in &p1 {
        for b in &p2 {
            if a.vertex != b.vertex {
                continue;
            }
            let ends = [a.in_end, a.out_end, b.in_end, b.out_end];
            let distinct: BTreeSet<ArrowEnd> = ends.iter().copied().collect();
            if distinct.len() < 4 {
                continue; // part of a shared segment
            }
            let order = &rot.orders[a.vertex - 1];
            if chords_interleave(order, (a.in_end, a.out_end), (b.in_end, b.out_end)) {
                return false;
            }
        }
    }
    true
}
