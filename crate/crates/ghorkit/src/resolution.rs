//! Projective complexes of simple modules: a Koszul-style part whose slots
//! are tuples of independent homology classes realized by geodesic cycles,
//! extended on partial supports by escape-path slots and a homotopy-relation
//! tail around each supported vertex.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cycles::{compare_r_s_bounded, cycle_algebra_generators, krull_dimension, RsComparison};
use crate::error::{Error, Result};
use crate::geodesic::{geodesic_certify_bounded, Certify};
use crate::lattice::lattice_rank;
use crate::matchings::{Basis, LabelTable};
use crate::modules::{minimal_escape_paths, validate_simple_module, SimpleModuleSpec};
use crate::paths::{compose, path_homology, path_label, paths_from, unit_cycle_at, Path};
use crate::quiver::{ArrowEnd, DimerQuiver, EndKind};
use crate::rewrite::rewrite_closure;

/// Ordered m-tuples of vectors, linearly independent over the integers,
/// drawn from the {-1,0,1} hypercube (zero excluded) and, when `with_sigma`
/// is set, one extra coordinate direction tracking unit-cycle powers.
#[derive(Debug, Clone)]
pub struct KoszulTupleBasis {
    pub vector_len: usize,
    pub with_sigma: bool,
    pub tuples: Vec<Vec<Vec<i64>>>,
}

/// The pool of vectors the tuples draw from, in enumeration order.
pub fn koszul_vectors(n: usize, with_sigma: bool) -> Vec<Vec<i64>> {
    let mut vectors = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut v = Vec::with_capacity(n + usize::from(with_sigma));
        let mut rest = code;
        for _ in 0..n {
            v.push((rest % 3) as i64 - 1);
            rest /= 3;
        }
        v.reverse();
        if v.iter().all(|&c| c == 0) {
            continue;
        }
        if with_sigma {
            v.push(0);
        }
        vectors.push(v);
    }
    if with_sigma {
        let mut sigma = vec![0i64; n];
        sigma.push(1);
        vectors.push(sigma);
    }
    vectors
}

/// Guard for the assembly paths: tuple counts grow like |T|^m, so refuse
/// constructions whose bases would be astronomically large.
fn koszul_basis_bounded(n: usize, m: usize, with_sigma: bool) -> Result<KoszulTupleBasis> {
    let pool = koszul_vectors(n, with_sigma).len();
    if m > 0 && pool.checked_pow(m as u32).map_or(true, |c| c > 10_000_000) {
        return Err(Error::Precondition(format!(
            "level-{m} tuple basis over {pool} vectors is too large to materialize"
        )));
    }
    Ok(koszul_basis(n, m, with_sigma))
}

pub fn koszul_basis(n: usize, m: usize, with_sigma: bool) -> KoszulTupleBasis {
    let vector_len = n + usize::from(with_sigma);
    let vectors = koszul_vectors(n, with_sigma);
    let mut tuples: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut chosen: Vec<Vec<i64>> = Vec::new();
    fn extend(
        vectors: &[Vec<i64>],
        m: usize,
        chosen: &mut Vec<Vec<i64>>,
        tuples: &mut Vec<Vec<Vec<i64>>>,
    ) {
        if chosen.len() == m {
            tuples.push(chosen.clone());
            return;
        }
        for v in vectors {
            if chosen.contains(v) {
                continue;
            }
            chosen.push(v.clone());
            if lattice_rank(chosen) == chosen.len() {
                extend(vectors, m, chosen, tuples);
            }
            chosen.pop();
        }
    }
    extend(&vectors, m, &mut chosen, &mut tuples);
    KoszulTupleBasis { vector_len, with_sigma, tuples }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum SlotTag {
    /// A tuple of homology-class vectors; the empty tuple is the degree-zero
    /// free cover.
    Koszul(Vec<Vec<i64>>),
    /// One escape path, its free module sitting at the path head.
    Escape(Path),
    /// The j-th slot of the homotopy tail.
    BdSlot(usize),
    /// The top of the homotopy tail.
    BdTop,
}

#[derive(Debug, Clone)]
pub struct Slot {
    pub module_vertex: usize,
    pub vertex: usize,
    pub tag: SlotTag,
}

#[derive(Debug, Clone, Default)]
pub struct FreeTerm {
    pub slots: Vec<Slot>,
}

impl FreeTerm {
    pub fn rank(&self) -> usize {
        self.slots.len()
    }
}

/// A formal sum of rational multiples of paths.
pub type PathSum = Vec<(BigRational, Path)>;

#[derive(Debug, Clone, Default)]
pub struct MapMatrix {
    /// (row, column) -> entry; rows index the codomain term.
    pub entries: BTreeMap<(usize, usize), PathSum>,
}

impl MapMatrix {
    fn push(&mut self, row: usize, col: usize, coeff: BigRational, path: Path) {
        if coeff.is_zero() {
            return;
        }
        self.entries.entry((row, col)).or_default().push((coeff, path));
    }
}

#[derive(Debug, Clone)]
pub struct ProjComplex {
    pub terms: Vec<FreeTerm>,
    /// maps[k] sends terms[k+1] into terms[k].
    pub maps: Vec<MapMatrix>,
    pub full_support: bool,
    pub warnings: Vec<String>,
}

impl ProjComplex {
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ResolutionBounds {
    /// Maximum length of candidate geodesic representatives.
    pub representative_len: usize,
    /// Bound handed to the geodesic certifier.
    pub certify: usize,
    /// Maximum length of the homotopy-relation paths.
    pub bd_search: usize,
    /// Extra length allowed when rewriting composites to find escapes.
    pub homotopy_slack: usize,
    pub homotopy_node_cap: usize,
    /// Path length used by module validation.
    pub module_path_bound: usize,
}

impl Default for ResolutionBounds {
    fn default() -> Self {
        ResolutionBounds {
            representative_len: 8,
            certify: 12,
            bd_search: 6,
            homotopy_slack: 6,
            homotopy_node_cap: 20_000,
            module_path_bound: 5,
        }
    }
}

/// Canonical geodesic cycle per (vertex, homology class): shortest, then
/// lexicographically least; an uncertified candidate is accepted with a
/// warning when nothing certifies.
struct RepCache<'a> {
    quiver: &'a DimerQuiver,
    table: &'a LabelTable,
    bounds: ResolutionBounds,
    cache: BTreeMap<(usize, Vec<i64>), (Path, bool)>,
    warnings: Vec<String>,
}

impl<'a> RepCache<'a> {
    fn new(quiver: &'a DimerQuiver, table: &'a LabelTable, bounds: ResolutionBounds) -> Self {
        RepCache { quiver, table, bounds, cache: BTreeMap::new(), warnings: Vec::new() }
    }

    fn geodesic_rep(&mut self, vertex: usize, class: &[i64]) -> Result<Path> {
        if let Some((p, warned)) = self.cache.get(&(vertex, class.to_vec())) {
            let _ = warned;
            return Ok(p.clone());
        }
        let mut fallback: Option<Path> = None;
        let mut found: Option<Path> = None;
        for p in paths_from(self.quiver, vertex, self.bounds.representative_len) {
            if p.is_empty() || p.head(self.quiver) != vertex {
                continue;
            }
            if path_homology(self.quiver, &p).0 != class {
                continue;
            }
            match geodesic_certify_bounded(self.quiver, self.table, &p, self.bounds.certify) {
                Certify::Geodesic => {
                    found = Some(p);
                    break;
                }
                Certify::Unknown => {
                    fallback.get_or_insert(p);
                }
                Certify::NotGeodesic => {}
            }
        }
        let (path, warned) = match (found, fallback) {
            (Some(p), _) => (p, false),
            (None, Some(p)) => {
                self.warnings.push(format!(
                    "class {:?} at vertex {} uses an uncertified representative {}",
                    class,
                    vertex,
                    p.display(self.quiver)
                ));
                (p, true)
            }
            (None, None) => {
                return Err(Error::RepresentativeNotFound { vertex, class: class.to_vec() })
            }
        };
        self.cache.insert((vertex, class.to_vec()), (path.clone(), warned));
        Ok(path)
    }
}

/// The alternating-sum connecting map at level `m` for one supported vertex,
/// over the tuple bases the module's support dictates. Rows follow the
/// (m-1)-tuple basis order, columns the m-tuple order.
pub fn koszul_differential(
    quiver: &DimerQuiver,
    table: &LabelTable,
    spec: &SimpleModuleSpec,
    vertex: usize,
    m: usize,
) -> Result<(KoszulTupleBasis, KoszulTupleBasis, MapMatrix)> {
    if m == 0 {
        return Err(Error::Precondition("level must be positive".into()));
    }
    let n = quiver.rank();
    let with_sigma = spec.is_full_support(quiver);
    let cols = koszul_basis_bounded(n, m, with_sigma)?;
    let rows = koszul_basis_bounded(n, m - 1, with_sigma)?;
    let row_index: BTreeMap<&Vec<Vec<i64>>, usize> =
        rows.tuples.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut cache = RepCache::new(quiver, table, ResolutionBounds::default());
    let sigma_vec = {
        let mut s = vec![0i64; n];
        s.push(1);
        s
    };
    let mut matrix = MapMatrix::default();
    for (col, t) in cols.tuples.iter().enumerate() {
        for j in 0..t.len() {
            let mut sub = t.clone();
            let vj = sub.remove(j);
            let row = row_index[&sub];
            let s = rep_for(&mut cache, quiver, vertex, &vj, &sigma_vec, with_sigma)?;
            let scalar = spec.path_action(&s);
            let sign = if j % 2 == 0 { BigRational::one() } else { -BigRational::one() };
            matrix.push(row, col, sign.clone(), s);
            matrix.push(row, col, -sign * scalar, Path::trivial(vertex));
        }
    }
    Ok((cols, rows, matrix))
}

/// The homotopy-relation data around a supported vertex: escape paths in
/// rotation order, and the minimal path pairs satisfying
/// u_j p_j = v_{j+1} p_{j+1} and r_{j-1} v_j = r_j u_j up to labeling.
#[derive(Debug, Clone)]
pub struct BdData {
    pub escapes: Vec<Path>,
    pub u: Vec<Path>,
    pub v: Vec<Path>,
    pub r: Vec<Path>,
}

fn ghor_eq(quiver: &DimerQuiver, table: &LabelTable, p: &Path, q: &Path) -> bool {
    crate::paths::ghor_equal(quiver, table, p, q)
}

pub fn bd_data(
    quiver: &DimerQuiver,
    table: &LabelTable,
    spec: &SimpleModuleSpec,
    vertex: usize,
    search_bound: usize,
) -> Result<BdData> {
    let mut escapes = minimal_escape_paths(quiver, spec, vertex)?;
    if escapes.is_empty() {
        return Err(Error::Precondition(format!(
            "no escape paths at vertex {vertex}: the homotopy tail is absent on full supports"
        )));
    }
    // Counterclockwise order around the vertex: sort by the rotation
    // position of the first arrow's outgoing end.
    let rot = quiver.rotation_system()?;
    escapes.sort_by_key(|p| {
        let first = p.arrows()[0];
        let pos = rot
            .position(vertex, ArrowEnd { arrow: first, kind: EndKind::Out })
            .expect("escape arrow leaves the vertex");
        (pos, p.arrows().to_vec())
    });
    let l = escapes.len();

    // Relation pairs: u[j] from the head of p_j and v[j+1] from the head of
    // p_{j+1}, equal after the escapes, minimal by total length then
    // lexicographic order.
    let mut u: Vec<Option<Path>> = vec![None; l];
    let mut v: Vec<Option<Path>> = vec![None; l];
    for j in 0..l {
        let pj = &escapes[j];
        let pk = &escapes[(j + 1) % l];
        let from_u = paths_from(quiver, pj.head(quiver), search_bound);
        let from_v = paths_from(quiver, pk.head(quiver), search_bound);
        let mut best: Option<(usize, Vec<usize>, Vec<usize>, Path, Path)> = None;
        for cu in &from_u {
            let left = match compose(quiver, cu, pj) {
                Ok(p) => p,
                Err(_) => continue,
            };
            for cv in &from_v {
                if cu.head(quiver) != cv.head(quiver) {
                    continue;
                }
                let right = match compose(quiver, cv, pk) {
                    Ok(p) => p,
                    Err(_) => continue,
                };
                if !ghor_eq(quiver, table, &left, &right) {
                    continue;
                }
                let key = (
                    cu.len() + cv.len(),
                    cu.arrows().to_vec(),
                    cv.arrows().to_vec(),
                    cu.clone(),
                    cv.clone(),
                );
                if best.as_ref().is_none_or(|b| (key.0, &key.1, &key.2) < (b.0, &b.1, &b.2)) {
                    best = Some(key);
                }
            }
        }
        let (_, _, _, cu, cv) = best.ok_or_else(|| {
            Error::BdSearch(format!(
                "no label identity joins {} and {} within bound {}",
                escapes[j].display(quiver),
                escapes[(j + 1) % l].display(quiver),
                search_bound
            ))
        })?;
        u[j] = Some(cu);
        v[(j + 1) % l] = Some(cv);
    }
    let u: Vec<Path> = u.into_iter().map(Option::unwrap).collect();
    let v: Vec<Path> = v.into_iter().map(Option::unwrap).collect();

    // Closing paths r[j] from the head of u[j] back to the vertex with
    // r[j-1] v[j] = r[j] u[j]; backtracking over length-lex candidate lists.
    let candidates: Vec<Vec<Path>> = (0..l)
        .map(|j| {
            paths_from(quiver, u[j].head(quiver), search_bound)
                .into_iter()
                .filter(|p| p.head(quiver) == vertex)
                .collect()
        })
        .collect();
    fn assign(
        quiver: &DimerQuiver,
        table: &LabelTable,
        u: &[Path],
        v: &[Path],
        candidates: &[Vec<Path>],
        picked: &mut Vec<Path>,
    ) -> bool {
        let l = u.len();
        let j = picked.len();
        if j == l {
            // wrap relation: r[l-1] v[0] = r[0] u[0]
            let left = compose(quiver, &picked[l - 1], &v[0]).expect("relation composes");
            let right = compose(quiver, &picked[0], &u[0]).expect("relation composes");
            return ghor_eq(quiver, table, &left, &right);
        }
        for c in &candidates[j] {
            if j > 0 {
                let left = compose(quiver, &picked[j - 1], &v[j]).expect("relation composes");
                let right = match compose(quiver, c, &u[j]) {
                    Ok(p) => p,
                    Err(_) => continue,
                };
                if !ghor_eq(quiver, table, &left, &right) {
                    continue;
                }
            }
            picked.push(c.clone());
            if assign(quiver, table, u, v, candidates, picked) {
                return true;
            }
            picked.pop();
        }
        false
    }
    let mut picked = Vec::new();
    if !assign(quiver, table, &u, &v, &candidates, &mut picked) {
        return Err(Error::BdSearch(format!(
            "no closing path family at vertex {vertex} within bound {search_bound}"
        )));
    }
    Ok(BdData { escapes, u, v, r: picked })
}

/// Splits a composite cycle at its first unsupported vertex after rewriting;
/// the prefix must be one of the minimal escape paths.
fn escape_factorization(
    quiver: &DimerQuiver,
    spec: &SimpleModuleSpec,
    escapes: &[Path],
    composite: &Path,
    bounds: ResolutionBounds,
) -> Option<(Path, Path)> {
    let closure = rewrite_closure(
        quiver,
        composite,
        composite.len() + bounds.homotopy_slack,
        bounds.homotopy_node_cap,
    );
    for rep in &closure {
        let seq = rep.vertex_sequence(quiver);
        let k = match (1..seq.len()).find(|&k| !spec.supports_vertex(seq[k])) {
            Some(k) => k,
            None => continue,
        };
        let prefix = rep.subpath(quiver, 0, k);
        if !escapes.iter().any(|p| p == &prefix) {
            continue;
        }
        let rest = rep.subpath(quiver, k, rep.len());
        return Some((rest, prefix));
    }
    None
}

/// Builds the projective complex of a simple module: the direct sum over
/// supported vertices of the Koszul part (with the unit-cycle direction on
/// full supports) together with escape and homotopy slots otherwise.
pub fn assemble_resolution(
    quiver: &DimerQuiver,
    table: &LabelTable,
    spec: &SimpleModuleSpec,
) -> Result<ProjComplex> {
    assemble_resolution_with(quiver, table, spec, ResolutionBounds::default())
}

pub fn assemble_resolution_with(
    quiver: &DimerQuiver,
    table: &LabelTable,
    spec: &SimpleModuleSpec,
    bounds: ResolutionBounds,
) -> Result<ProjComplex> {
    let report = validate_simple_module(quiver, table, spec, bounds.module_path_bound);
    if !report.is_valid() {
        let failed: Vec<&str> =
            report.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
        return Err(Error::Precondition(format!("module spec invalid: {}", failed.join(", "))));
    }
    let n = quiver.rank();
    let full = spec.is_full_support(quiver);
    let levels = if full { n + 2 } else { 3usize.max(n) + 1 };
    let mut terms: Vec<FreeTerm> = (0..levels).map(|_| FreeTerm::default()).collect();
    let mut index: Vec<BTreeMap<(usize, SlotTag), usize>> =
        (0..levels).map(|_| BTreeMap::new()).collect();
    let mut maps: Vec<MapMatrix> = (0..levels - 1).map(|_| MapMatrix::default()).collect();
    let mut cache = RepCache::new(quiver, table, bounds);
    let mut warnings = Vec::new();

    let sigma_vec = {
        let mut s = vec![0i64; n];
        s.push(1);
        s
    };

    for &i in &spec.support {
        // Slot layout for this summand.
        for (m, term) in terms.iter_mut().enumerate() {
            let tuples = if full {
                koszul_basis_bounded(n, m, true)?.tuples
            } else if m <= n {
                koszul_basis_bounded(n, m, false)?.tuples
            } else {
                Vec::new()
            };
            for t in tuples {
                let tag = SlotTag::Koszul(t);
                index[m].insert((i, tag.clone()), term.slots.len());
                term.slots.push(Slot { module_vertex: i, vertex: i, tag });
            }
        }
        let bd = if full {
            None
        } else {
            Some(bd_data(quiver, table, spec, i, bounds.bd_search)?)
        };
        if let Some(bd) = &bd {
            for p in &bd.escapes {
                let tag = SlotTag::Escape(p.clone());
                index[1].insert((i, tag.clone()), terms[1].slots.len());
                terms[1].slots.push(Slot {
                    module_vertex: i,
                    vertex: p.head(quiver),
                    tag,
                });
            }
            for (j, r) in bd.r.iter().enumerate() {
                let tag = SlotTag::BdSlot(j);
                index[2].insert((i, tag.clone()), terms[2].slots.len());
                terms[2].slots.push(Slot { module_vertex: i, vertex: r.tail(), tag });
            }
            index[3].insert((i, SlotTag::BdTop), terms[3].slots.len());
            terms[3].slots.push(Slot { module_vertex: i, vertex: i, tag: SlotTag::BdTop });
        }

        // Koszul connecting maps, with the escape rewrite at level two on
        // partial supports.
        for m in 1..levels {
            let col_tuples: Vec<Vec<Vec<i64>>> = terms[m]
                .slots
                .iter()
                .filter(|s| s.module_vertex == i)
                .filter_map(|s| match &s.tag {
                    SlotTag::Koszul(t) => Some(t.clone()),
                    _ => None,
                })
                .collect();
            for t in col_tuples {
                let col = index[m][&(i, SlotTag::Koszul(t.clone()))];
                if !full && m == 2 {
                    let bd = bd.as_ref().expect("partial support has relation data");
                    let s1 = rep_for(&mut cache, quiver, i, &t[0], &sigma_vec, full)?;
                    let s2 = rep_for(&mut cache, quiver, i, &t[1], &sigma_vec, full)?;
                    let c12 = compose(quiver, &s1, &s2).expect("cycles at one vertex compose");
                    let c21 = compose(quiver, &s2, &s1).expect("cycles at one vertex compose");
                    let f12 = escape_factorization(quiver, spec, &bd.escapes, &c12, bounds);
                    let f21 = escape_factorization(quiver, spec, &bd.escapes, &c21, bounds);
                    if let (Some((q12, p12)), Some((q21, p21))) = (f12, f21) {
                        let row12 = index[1][&(i, SlotTag::Escape(p12))];
                        let row21 = index[1][&(i, SlotTag::Escape(p21))];
                        maps[1].push(row12, col, BigRational::one(), q12);
                        maps[1].push(row21, col, -BigRational::one(), q21);
                        continue;
                    }
                }
                for j in 0..t.len() {
                    let mut sub = t.clone();
                    let vj = sub.remove(j);
                    let row = index[m - 1][&(i, SlotTag::Koszul(sub))];
                    let s = rep_for(&mut cache, quiver, i, &vj, &sigma_vec, full)?;
                    let scalar = spec.path_action(&s);
                    let sign = if j % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                    maps[m - 1].push(row, col, sign.clone(), s);
                    maps[m - 1].push(row, col, -sign * scalar, Path::trivial(i));
                }
            }
        }

        if let Some(bd) = &bd {
            let l = bd.escapes.len();
            let p0 = index[0][&(i, SlotTag::Koszul(Vec::new()))];
            for p in &bd.escapes {
                let col = index[1][&(i, SlotTag::Escape(p.clone()))];
                maps[0].push(p0, col, BigRational::one(), p.clone());
            }
            for j in 0..l {
                let col = index[2][&(i, SlotTag::BdSlot(j))];
                let row_a = index[1][&(i, SlotTag::Escape(bd.escapes[j].clone()))];
                let row_b = index[1][&(i, SlotTag::Escape(bd.escapes[(j + 1) % l].clone()))];
                maps[1].push(row_a, col, BigRational::one(), bd.u[j].clone());
                maps[1].push(row_b, col, -BigRational::one(), bd.v[(j + 1) % l].clone());
            }
            let col = index[3][&(i, SlotTag::BdTop)];
            for (j, r) in bd.r.iter().enumerate() {
                let row = index[2][&(i, SlotTag::BdSlot(j))];
                maps[2].push(row, col, BigRational::one(), r.clone());
            }
        }
    }

    warnings.extend(cache.warnings);
    Ok(ProjComplex { terms, maps, full_support: full, warnings })
}

fn rep_for(
    cache: &mut RepCache,
    quiver: &DimerQuiver,
    vertex: usize,
    class_vec: &[i64],
    sigma_vec: &[i64],
    full: bool,
) -> Result<Path> {
    if full {
        if class_vec == sigma_vec {
            return unit_cycle_at(quiver, vertex);
        }
        return cache.geodesic_rep(vertex, &class_vec[..class_vec.len() - 1]);
    }
    cache.geodesic_rep(vertex, class_vec)
}

/// Checks that consecutive maps compose to zero: composites are expanded as
/// formal sums and reduced by (tail, head, label) classes.
pub fn verify_complex(
    quiver: &DimerQuiver,
    table: &LabelTable,
    complex: &ProjComplex,
) -> (bool, Option<String>) {
    for k in 1..complex.maps.len() {
        let upper = &complex.maps[k];
        let lower = &complex.maps[k - 1];
        let mut lower_by_col: BTreeMap<usize, Vec<(usize, &PathSum)>> = BTreeMap::new();
        for (&(s, r), sum) in &lower.entries {
            lower_by_col.entry(r).or_default().push((s, sum));
        }
        let mut acc: BTreeMap<(usize, usize, usize, usize, Vec<i64>), BigRational> =
            BTreeMap::new();
        for (&(r, c), upper_sum) in &upper.entries {
            let lowers = match lower_by_col.get(&r) {
                Some(l) => l,
                None => continue,
            };
            for (s, lower_sum) in lowers {
                for (cu, pu) in upper_sum {
                    for (cl, pl) in lower_sum.iter() {
                        let path = compose(quiver, pu, pl).expect("matrix entries compose");
                        let label = path_label(table, Basis::All, &path);
                        let key = (*s, c, path.tail(), path.head(quiver), label.exps);
                        let coeff = cu.clone() * cl.clone();
                        *acc.entry(key).or_insert_with(BigRational::zero) += coeff;
                    }
                }
            }
        }
        for ((s, c, tail, head, _), coeff) in &acc {
            if !coeff.is_zero() {
                return (
                    false,
                    Some(format!(
                        "d{}∘d{} nonzero at row {s}, column {c}: class {tail}->{head} keeps {coeff}",
                        k,
                        k + 1
                    )),
                );
            }
        }
    }
    (true, None)
}

#[derive(Debug, Clone)]
pub struct PdReport {
    pub length: usize,
    pub full_support: bool,
}

pub fn pd_report(complex: &ProjComplex) -> PdReport {
    PdReport { length: complex.length(), full_support: complex.full_support }
}

#[derive(Debug, Clone)]
pub struct GldimReport {
    pub bound: usize,
    pub dim_s: usize,
    pub rs: RsComparison,
    pub rs_bound: i64,
}

/// The global-dimension bound N + 1 next to the computed cycle-algebra
/// dimension and the bounded center comparison.
pub fn gldim_report(quiver: &DimerQuiver, table: &LabelTable, rs_bound: i64) -> GldimReport {
    let gens = cycle_algebra_generators(quiver, table);
    GldimReport {
        bound: quiver.rank() + 1,
        dim_s: krull_dimension(&gens),
        rs: compare_r_s_bounded(quiver, table, rs_bound),
        rs_bound,
    }
}
