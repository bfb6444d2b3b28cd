//! Simple cycles, the algebra their labels generate, its Krull dimension,
//! the bounded center computation, and the covering-family geodesic check.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::Result;
use crate::geodesic::{geodesic_certify_bounded, parallel, Certify};
use crate::lattice::lattice_rank;
use crate::matchings::{Basis, LabelTable, Monomial};
use crate::paths::{has_cyclic_subpath, path_homology, path_label, Path};
use crate::quiver::DimerQuiver;
use crate::surface::HomologyClass;

#[derive(Debug, Clone)]
pub struct CycleRecord {
    pub cycle: Path,
    pub tau_label: Monomial,
    pub eta_label: Monomial,
    pub homology: HomologyClass,
    pub vertices: BTreeSet<usize>,
}

/// All cycles without interior vertex repetition, one per rotation class,
/// based at their least vertex, ordered by (length, lexicographic).
pub fn simple_cycles(quiver: &DimerQuiver, table: &LabelTable) -> Vec<CycleRecord> {
    let mut found: Vec<Path> = Vec::new();
    for base in 1..=quiver.vertex_count {
        // Interior vertices must be strictly larger than the base so each
        // rotation class is produced exactly once.
        let mut stack: Vec<(Path, BTreeSet<usize>)> =
            vec![(Path::trivial(base), BTreeSet::from([base]))];
        while let Some((p, visited)) = stack.pop() {
            let at = p.head(quiver);
            for a in quiver.arrows_from(at) {
                let to = quiver.arrow(a).head;
                let mut arrows = p.arrows().to_vec();
                arrows.push(a);
                let q = Path::new(quiver, base, arrows).expect("extension composes");
                if to == base {
                    found.push(q);
                } else if to > base && !visited.contains(&to) {
                    let mut v2 = visited.clone();
                    v2.insert(to);
                    stack.push((q, v2));
                }
            }
        }
    }
    found.sort_by_key(|p| (p.len(), p.arrows().to_vec(), p.tail()));
    found
        .into_iter()
        .map(|cycle| {
            let tau_label = path_label(table, Basis::Simple, &cycle);
            let eta_label = path_label(table, Basis::All, &cycle);
            let homology = path_homology(quiver, &cycle);
            let vertices = cycle.vertex_sequence(quiver).into_iter().collect();
            CycleRecord { cycle, tau_label, eta_label, homology, vertices }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct MonomialSet {
    pub elements: BTreeSet<Vec<i64>>,
    pub basis: Basis,
}

impl MonomialSet {
    pub fn contains(&self, m: &Monomial) -> bool {
        self.elements.contains(&m.exps)
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.elements.iter().map(|e| Monomial { exps: e.clone() })
    }
}

/// Deduplicated simple-matching labels of all simple cycles; these generate
/// the cycle algebra because every cycle factors through simple cycles.
pub fn cycle_algebra_generators(quiver: &DimerQuiver, table: &LabelTable) -> MonomialSet {
    let elements = simple_cycles(quiver, table)
        .into_iter()
        .map(|r| r.tau_label.exps)
        .collect();
    MonomialSet { elements, basis: Basis::Simple }
}

/// Krull dimension of the affine semigroup algebra the set generates: the
/// rank of the exponent lattice.
pub fn krull_dimension(gens: &MonomialSet) -> usize {
    let rows: Vec<Vec<i64>> = gens.elements.iter().cloned().collect();
    lattice_rank(&rows)
}

/// Multisets of simple cycles whose supports chain-connect to `anchor`, of
/// total label degree at most the bound, in breadth-first discovery order
/// starting from the empty multiset. Every cycle through the anchor vertex
/// decomposes into such a multiset, and every such multiset splices back
/// into a cycle.
pub fn connected_multisets_anchored(
    records: &[CycleRecord],
    anchor: usize,
    degree_bound: i64,
) -> Vec<Vec<usize>> {
    let n = records.first().map_or(0, |r| r.tau_label.exps.len());
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([Vec::new()]);
    let mut queue: VecDeque<(Vec<usize>, BTreeSet<usize>, Monomial)> =
        VecDeque::from([(Vec::new(), BTreeSet::from([anchor]), Monomial::unit(n))]);
    while let Some((multiset, support, label)) = queue.pop_front() {
        for (k, rec) in records.iter().enumerate() {
            if rec.vertices.is_disjoint(&support) {
                continue;
            }
            // A second copy of a degree-zero cycle adds nothing.
            if rec.tau_label.degree() == 0 && multiset.contains(&k) {
                continue;
            }
            let next_label = label.mul(&rec.tau_label);
            if next_label.degree() > degree_bound {
                continue;
            }
            let mut next = multiset.clone();
            let pos = next.binary_search(&k).unwrap_or_else(|e| e);
            next.insert(pos, k);
            if seen.contains(&next) {
                continue;
            }
            seen.insert(next.clone());
            let mut next_support = support.clone();
            next_support.extend(rec.vertices.iter());
            out.push(next.clone());
            queue.push_back((next, next_support, next_label));
        }
    }
    out
}

pub fn multiset_label(records: &[CycleRecord], basis_len: usize, multiset: &[usize]) -> Monomial {
    let mut label = Monomial::unit(basis_len);
    for &k in multiset {
        label = label.mul(&records[k].tau_label);
    }
    label
}

/// Labels of cycles at `vertex` of degree at most `degree_bound`.
pub fn vertex_cycle_monomials(
    quiver: &DimerQuiver,
    table: &LabelTable,
    vertex: usize,
    degree_bound: i64,
) -> MonomialSet {
    let (set, _) = vertex_cycle_monomials_with_certificates(quiver, table, vertex, degree_bound);
    set
}

/// Same, also returning for each label a reconstructible cycle through the
/// vertex realizing it (the first multiset found, spliced).
pub fn vertex_cycle_monomials_with_certificates(
    quiver: &DimerQuiver,
    table: &LabelTable,
    vertex: usize,
    degree_bound: i64,
) -> (MonomialSet, BTreeMap<Vec<i64>, Path>) {
    let records = simple_cycles(quiver, table);
    let basis_len = table.basis_len(Basis::Simple);
    let mut certificates: BTreeMap<Vec<i64>, Path> = BTreeMap::new();
    for multiset in connected_multisets_anchored(&records, vertex, degree_bound) {
        let label = multiset_label(&records, basis_len, &multiset);
        certificates
            .entry(label.exps)
            .or_insert_with(|| splice_multiset(quiver, &records, vertex, &multiset));
    }
    let elements = certificates.keys().cloned().collect();
    (MonomialSet { elements, basis: Basis::Simple }, certificates)
}

/// Euler-tour splice of a connected multiset of simple cycles into one cycle
/// based at `vertex`.
fn splice_multiset(
    quiver: &DimerQuiver,
    records: &[CycleRecord],
    vertex: usize,
    multiset: &[usize],
) -> Path {
    let mut unused: Vec<usize> = multiset.to_vec();
    let mut arrows: Vec<usize> = Vec::new();
    fn visit(
        quiver: &DimerQuiver,
        records: &[CycleRecord],
        at: usize,
        unused: &mut Vec<usize>,
        arrows: &mut Vec<usize>,
    ) {
        loop {
            let pick = unused.iter().position(|&k| records[k].vertices.contains(&at));
            let k = match pick {
                Some(pos) => unused.remove(pos),
                None => return,
            };
            let rot = records[k]
                .cycle
                .rotations(quiver)
                .into_iter()
                .find(|r| r.tail() == at)
                .expect("cycle passes through vertex");
            for &a in rot.arrows() {
                visit(quiver, records, quiver.arrow(a).tail, unused, arrows);
                arrows.push(a);
            }
        }
    }
    visit(quiver, records, vertex, &mut unused, &mut arrows);
    debug_assert!(unused.is_empty(), "multiset not connected to anchor");
    Path::new(quiver, vertex, arrows).expect("splice composes")
}

/// Monomials of degree at most `degree_bound` realizable at every vertex.
pub fn center_generators_bounded(
    quiver: &DimerQuiver,
    table: &LabelTable,
    degree_bound: i64,
) -> MonomialSet {
    let mut iter = (1..=quiver.vertex_count)
        .map(|v| vertex_cycle_monomials(quiver, table, v, degree_bound));
    let mut acc = iter.next().expect("at least one vertex");
    for set in iter {
        acc.elements = acc.elements.intersection(&set.elements).cloned().collect();
    }
    acc
}

/// All products of cycle-algebra generators of degree at most the bound.
pub fn bounded_generator_products(
    quiver: &DimerQuiver,
    table: &LabelTable,
    degree_bound: i64,
) -> MonomialSet {
    let gens = cycle_algebra_generators(quiver, table);
    let n = table.basis_len(Basis::Simple);
    let mut elements: BTreeSet<Vec<i64>> = BTreeSet::from([vec![0; n]]);
    let mut queue: VecDeque<Monomial> = VecDeque::from([Monomial::unit(n)]);
    while let Some(m) = queue.pop_front() {
        for g in gens.monomials() {
            let next = m.mul(&g);
            if next.degree() > degree_bound || elements.contains(&next.exps) {
                continue;
            }
            elements.insert(next.exps.clone());
            queue.push_back(next);
        }
    }
    MonomialSet { elements, basis: Basis::Simple }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RsComparison {
    EqualUpToBound,
    StrictlySmaller { witness: Monomial },
}

/// Compares the bounded center against bounded products of cycle-algebra
/// generators; a witness is the least monomial in the difference.
pub fn compare_r_s_bounded(
    quiver: &DimerQuiver,
    table: &LabelTable,
    degree_bound: i64,
) -> RsComparison {
    let s_set = bounded_generator_products(quiver, table, degree_bound);
    let r_set = center_generators_bounded(quiver, table, degree_bound);
    let witness = s_set
        .elements
        .difference(&r_set.elements)
        .map(|e| (e.iter().sum::<i64>(), e.clone()))
        .min();
    match witness {
        Some((_, exps)) => RsComparison::StrictlySmaller { witness: Monomial { exps } },
        None => RsComparison::EqualUpToBound,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuiverGeodesicCheck {
    GeodesicUpToBound,
    Fails { witness_class: HomologyClass },
    Unknown { class: HomologyClass },
}

/// All cycles of length at most `max_len`, one per rotation class.
pub fn cycles_up_to_rotation(quiver: &DimerQuiver, max_len: usize) -> Vec<Path> {
    let mut canon: BTreeSet<Path> = BTreeSet::new();
    for base in 1..=quiver.vertex_count {
        let mut stack = vec![Path::trivial(base)];
        while let Some(p) = stack.pop() {
            let at = p.head(quiver);
            for a in quiver.arrows_from(at) {
                let mut arrows = p.arrows().to_vec();
                arrows.push(a);
                let q = Path::new(quiver, base, arrows).expect("extension composes");
                if q.head(quiver) == base {
                    let least = q.rotations(quiver).into_iter().min().expect("nonempty");
                    canon.insert(least);
                }
                if q.len() < max_len {
                    stack.push(q);
                }
            }
        }
    }
    let mut out: Vec<Path> = canon.into_iter().collect();
    out.sort_by_key(|p| (p.len(), p.arrows().to_vec(), p.tail()));
    out
}

/// Searches for a set of pairwise-parallel cycles from `pool` covering all
/// vertices.
fn covering_family(quiver: &DimerQuiver, rot: &crate::quiver::RotationSystem, pool: &[Path]) -> bool {
    fn extend(
        quiver: &DimerQuiver,
        rot: &crate::quiver::RotationSystem,
        pool: &[Path],
        chosen: &mut Vec<usize>,
        covered: &BTreeSet<usize>,
    ) -> bool {
        let missing = (1..=quiver.vertex_count).find(|v| !covered.contains(v));
        let v = match missing {
            Some(v) => v,
            None => return true,
        };
        for (k, c) in pool.iter().enumerate() {
            if chosen.contains(&k) || !c.vertex_sequence(quiver).contains(&v) {
                continue;
            }
            if !chosen.iter().all(|&j| parallel(quiver, rot, &pool[j], c)) {
                continue;
            }
            chosen.push(k);
            let mut cov = covered.clone();
            cov.extend(c.vertex_sequence(quiver));
            if extend(quiver, rot, pool, chosen, &cov) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    !pool.is_empty() && extend(quiver, rot, pool, &mut Vec::new(), &BTreeSet::new())
}

/// For each bounded cycle with no cyclic subpath modulo the labeling kernel,
/// looks for a vertex-covering family of pairwise-parallel geodesic cycles
/// homologous to it. Reports the first class with no such family.
pub fn geodesic_quiver_check_bounded(
    quiver: &DimerQuiver,
    table: &LabelTable,
    bound: usize,
) -> Result<QuiverGeodesicCheck> {
    let rot = quiver.rotation_system()?;
    let records = simple_cycles(quiver, table);
    let every_arrow_labeled =
        (0..quiver.arrows.len()).all(|a| !table.arrow_label(Basis::All, a).is_unit());

    // Candidates: simple cycles none of whose label-equal representatives
    // has a literal cyclic subpath.
    let mut candidates: Vec<&CycleRecord> = Vec::new();
    for rec in records.iter().filter(|r| r.cycle.len() <= bound) {
        let rep_bound = if every_arrow_labeled {
            rec.eta_label.degree().max(0) as usize
        } else {
            bound
        };
        let reps = crate::geodesic::enumerate_representatives(
            quiver,
            table,
            rec.cycle.tail(),
            rec.cycle.tail(),
            &rec.eta_label,
            rep_bound,
        );
        if reps.iter().all(|r| !has_cyclic_subpath(quiver, r)) {
            candidates.push(rec);
        }
    }

    let all_cycles = cycles_up_to_rotation(quiver, bound);
    let mut verdicts: BTreeMap<Vec<usize>, Certify> = BTreeMap::new();
    let mut saw_unknown_success = None;
    for rec in candidates {
        let mut strict: Vec<Path> = Vec::new();
        let mut loose: Vec<Path> = Vec::new();
        for c in &all_cycles {
            if path_homology(quiver, c) != rec.homology {
                continue;
            }
            let verdict = *verdicts
                .entry(c.arrows().to_vec())
                .or_insert_with(|| geodesic_certify_bounded(quiver, table, c, bound));
            match verdict {
                Certify::Geodesic => {
                    strict.push(c.clone());
                    loose.push(c.clone());
                }
                Certify::Unknown => loose.push(c.clone()),
                Certify::NotGeodesic => {}
            }
        }
        if covering_family(quiver, &rot, &strict) {
            continue;
        }
        if covering_family(quiver, &rot, &loose) {
            saw_unknown_success.get_or_insert(rec.homology.clone());
            continue;
        }
        return Ok(QuiverGeodesicCheck::Fails { witness_class: rec.homology.clone() });
    }
    if let Some(class) = saw_unknown_success {
        return Ok(QuiverGeodesicCheck::Unknown { class });
    }
    Ok(QuiverGeodesicCheck::GeodesicUpToBound)
}
