//! Simple modules given by a supported vertex set and arrow scalars, their
//! annihilator points, escape paths, first-syzygy generators, and formal
//! inverses of supported paths.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cycles::{
    connected_multisets_anchored, cycle_algebra_generators, multiset_label, simple_cycles,
    CycleRecord,
};
use crate::error::{Error, Result};
use crate::matchings::{Basis, LabelTable, Monomial};
use crate::paths::{path_label, paths_from, Path};
use crate::quiver::DimerQuiver;

#[derive(Debug, Clone)]
pub struct SimpleModuleSpec {
    pub support: BTreeSet<usize>,
    /// Arrow index -> scalar; absent arrows act by zero.
    pub scalars: BTreeMap<usize, BigRational>,
}

impl SimpleModuleSpec {
    pub fn scalar(&self, arrow: usize) -> BigRational {
        self.scalars.get(&arrow).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn supports_vertex(&self, v: usize) -> bool {
        self.support.contains(&v)
    }

    pub fn is_full_support(&self, quiver: &DimerQuiver) -> bool {
        self.support.len() == quiver.vertex_count
    }

    /// Product of the arrow scalars along a path.
    pub fn path_action(&self, p: &Path) -> BigRational {
        let mut acc = BigRational::one();
        for &a in p.arrows() {
            acc *= self.scalar(a);
            if acc.is_zero() {
                return acc;
            }
        }
        acc
    }

    /// Arrows with both endpoints supported.
    pub fn supported_arrows(&self, quiver: &DimerQuiver) -> BTreeSet<usize> {
        (0..quiver.arrows.len())
            .filter(|&a| {
                self.supports_vertex(quiver.arrow(a).tail)
                    && self.supports_vertex(quiver.arrow(a).head)
            })
            .collect()
    }
}

fn parse_rational(tok: &str, line: usize) -> Result<BigRational> {
    let parse_int = |s: &str| -> Result<BigInt> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse { line, msg: format!("bad number {s:?}") })
    };
    match tok.split_once('/') {
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse { line, msg: "zero denominator".into() });
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from(parse_int(tok)?)),
    }
}

/// Parses the module spec file format:
///
/// ```text
/// module
/// support <vertex> <vertex> ...
/// scalar <arrow-id> <numerator>/<denominator>
/// ```
pub fn parse_module_spec(quiver: &DimerQuiver, text: &str) -> Result<SimpleModuleSpec> {
    let mut saw_header = false;
    let mut support: Option<BTreeSet<usize>> = None;
    let mut scalars: BTreeMap<usize, BigRational> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            "module" => saw_header = true,
            "support" => {
                if support.is_some() {
                    return Err(Error::Parse { line, msg: "duplicate support line".into() });
                }
                let mut set = BTreeSet::new();
                for t in &toks[1..] {
                    let v: usize = t
                        .parse()
                        .map_err(|_| Error::Parse { line, msg: format!("bad vertex {t:?}") })?;
                    if v == 0 || v > quiver.vertex_count {
                        return Err(Error::Parse { line, msg: format!("unknown vertex {v}") });
                    }
                    set.insert(v);
                }
                if set.is_empty() {
                    return Err(Error::Parse { line, msg: "empty support".into() });
                }
                support = Some(set);
            }
            "scalar" => {
                if toks.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        msg: "scalar takes an arrow id and a rational".into(),
                    });
                }
                let arrow = quiver.arrow_index(toks[1]).ok_or_else(|| Error::Parse {
                    line,
                    msg: format!("unknown arrow {:?}", toks[1]),
                })?;
                let value = parse_rational(toks[2], line)?;
                if scalars.insert(arrow, value).is_some() {
                    return Err(Error::Parse {
                        line,
                        msg: format!("duplicate scalar for {:?}", toks[1]),
                    });
                }
            }
            other => {
                return Err(Error::Parse { line, msg: format!("unknown directive {other:?}") })
            }
        }
    }
    if !saw_header {
        return Err(Error::Parse { line: 0, msg: "missing module header".into() });
    }
    let support = support.ok_or(Error::Parse { line: 0, msg: "missing support line".into() })?;
    Ok(SimpleModuleSpec { support, scalars })
}

#[derive(Debug, Clone)]
pub struct ModuleCheck {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone)]
pub struct ModuleReport {
    pub checks: Vec<ModuleCheck>,
}

impl ModuleReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks the module invariants: scalars only on supported arrows, strong
/// connectivity of the acting subgraph, and bounded label consistency (any
/// two supported paths with equal endpoints and labels act equally).
pub fn validate_simple_module(
    quiver: &DimerQuiver,
    table: &LabelTable,
    spec: &SimpleModuleSpec,
    path_bound: usize,
) -> ModuleReport {
    let mut checks = Vec::new();

    let stray = spec.scalars.iter().find(|(&a, s)| {
        !s.is_zero()
            && !(spec.supports_vertex(quiver.arrow(a).tail)
                && spec.supports_vertex(quiver.arrow(a).head))
    });
    checks.push(ModuleCheck {
        name: "scalars-on-support",
        pass: stray.is_none(),
        witness: stray.map(|(&a, _)| quiver.arrow(a).id.clone()),
    });

    let acting: BTreeSet<usize> =
        spec.scalars.iter().filter(|(_, s)| !s.is_zero()).map(|(&a, _)| a).collect();
    let connected = quiver.strongly_connected_on(&spec.support, &acting);
    checks.push(ModuleCheck {
        name: "support-strongly-connected",
        pass: connected,
        witness: (!connected).then(|| {
            format!("support {:?} not strongly connected by nonzero scalars", spec.support)
        }),
    });

    // Label consistency: group supported paths by (tail, head, label).
    let supported = spec.supported_arrows(quiver);
    let mut groups: BTreeMap<(usize, usize, Vec<i64>), Vec<Path>> = BTreeMap::new();
    for &v in &spec.support {
        for p in paths_from(quiver, v, path_bound) {
            if !p.arrows().iter().all(|a| supported.contains(a)) {
                continue;
            }
            let key = (p.tail(), p.head(quiver), path_label(table, Basis::All, &p).exps);
            groups.entry(key).or_default().push(p);
        }
    }
    let mut inconsistent = None;
    'outer: for paths in groups.values() {
        let first = spec.path_action(&paths[0]);
        for p in &paths[1..] {
            if spec.path_action(p) != first {
                inconsistent =
                    Some(format!("{} vs {}", paths[0].display(quiver), p.display(quiver)));
                break 'outer;
            }
        }
    }
    checks.push(ModuleCheck {
        name: "label-consistency",
        pass: inconsistent.is_none(),
        witness: inconsistent,
    });

    ModuleReport { checks }
}

/// The point of the cycle algebra the module sits over: each generator is
/// sent to the common scalar of its supported realizations, or zero.
#[derive(Debug, Clone)]
pub struct AnnihilatorPoint {
    pub values: BTreeMap<Vec<i64>, BigRational>,
}

pub fn annihilator_point(
    quiver: &DimerQuiver,
    table: &LabelTable,
    spec: &SimpleModuleSpec,
) -> Result<AnnihilatorPoint> {
    let gens = cycle_algebra_generators(quiver, table);
    let supported = spec.supported_arrows(quiver);
    let records: Vec<CycleRecord> = simple_cycles(quiver, table)
        .into_iter()
        .filter(|r| r.cycle.arrows().iter().all(|a| supported.contains(a)))
        .collect();
    let basis_len = table.basis_len(Basis::Simple);
    let max_degree = gens.monomials().map(|g| g.degree()).max().unwrap_or(0);

    // Every supported realization of a generator is a connected multiset of
    // supported simple cycles; collect them from every supported anchor and
    // demand a single scalar per label.
    let mut multisets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for &v in &spec.support {
        multisets.extend(connected_multisets_anchored(&records, v, max_degree));
    }
    let mut realized: BTreeMap<Vec<i64>, BigRational> = BTreeMap::new();
    for multiset in &multisets {
        if multiset.is_empty() {
            continue;
        }
        let label = multiset_label(&records, basis_len, multiset);
        if !gens.contains(&label) {
            continue;
        }
        let mut scalar = BigRational::one();
        for &k in multiset.iter() {
            scalar *= spec.path_action(&records[k].cycle);
        }
        match realized.get(&label.exps) {
            None => {
                realized.insert(label.exps.clone(), scalar);
            }
            Some(prev) if *prev != scalar => {
                return Err(Error::WellDefinedness(format!(
                    "generator {} realized with scalars {} and {}",
                    table.format_monomial(Basis::Simple, &label),
                    prev,
                    scalar
                )));
            }
            _ => {}
        }
    }
    let mut values = BTreeMap::new();
    for g in gens.monomials() {
        let value = realized.get(&g.exps).cloned().unwrap_or_else(BigRational::zero);
        values.insert(g.exps.clone(), value);
    }
    Ok(AnnihilatorPoint { values })
}

/// Minimal cyclic-subpath-free paths from `vertex` whose head leaves the
/// support while every proper prefix stays inside; ordered by length, then
/// lexicographically.
pub fn minimal_escape_paths(
    quiver: &DimerQuiver,
    spec: &SimpleModuleSpec,
    vertex: usize,
) -> Result<Vec<Path>> {
    if !spec.supports_vertex(vertex) {
        return Err(Error::Precondition(format!("vertex {vertex} is not in the support")));
    }
    let mut out = Vec::new();
    let mut stack: Vec<(Path, BTreeSet<usize>)> =
        vec![(Path::trivial(vertex), BTreeSet::from([vertex]))];
    while let Some((p, visited)) = stack.pop() {
        let at = p.head(quiver);
        for a in quiver.arrows_from(at) {
            let to = quiver.arrow(a).head;
            if visited.contains(&to) {
                continue;
            }
            let mut arrows = p.arrows().to_vec();
            arrows.push(a);
            let q = Path::new(quiver, vertex, arrows).expect("extension composes");
            if spec.supports_vertex(to) {
                let mut v2 = visited.clone();
                v2.insert(to);
                stack.push((q, v2));
            } else {
                out.push(q);
            }
        }
    }
    out.sort_by_key(|p| (p.len(), p.arrows().to_vec()));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyzygyKind {
    /// An escape path, annihilating by landing outside the support.
    Monomial,
    /// A supported cycle minus the scalar it acts by.
    Binomial,
}

#[derive(Debug, Clone)]
pub struct SyzygyGenerator {
    pub kind: SyzygyKind,
    pub path: Path,
    /// The scalar of the binomial part; `None` for escape paths.
    pub scalar: Option<BigRational>,
}

impl SyzygyGenerator {
    pub fn display(&self, quiver: &DimerQuiver) -> String {
        match (&self.kind, &self.scalar) {
            (SyzygyKind::Monomial, _) => self.path.display(quiver),
            (SyzygyKind::Binomial, Some(s)) => {
                format!("{} - {}*e{}", self.path.display(quiver), s, self.path.tail())
            }
            _ => unreachable!("binomial without scalar"),
        }
    }
}

/// Generators of the first syzygy: every escape path from every supported
/// vertex, and `s - s~ e` for each supported simple cycle based at its least
/// supported vertex.
pub fn syzygy_generators(
    quiver: &DimerQuiver,
    table: &LabelTable,
    spec: &SimpleModuleSpec,
    length_bound: usize,
) -> Result<Vec<SyzygyGenerator>> {
    let mut out = Vec::new();
    let mut escapes = Vec::new();
    for &v in &spec.support {
        escapes.extend(minimal_escape_paths(quiver, spec, v)?);
    }
    escapes.sort_by_key(|p| (p.len(), p.arrows().to_vec(), p.tail()));
    for p in escapes {
        if p.len() <= length_bound {
            out.push(SyzygyGenerator { kind: SyzygyKind::Monomial, path: p, scalar: None });
        }
    }
    let supported = spec.supported_arrows(quiver);
    for rec in simple_cycles(quiver, table) {
        if rec.cycle.len() > length_bound
            || !rec.cycle.arrows().iter().all(|a| supported.contains(a))
        {
            continue;
        }
        let base = match rec.vertices.iter().find(|v| spec.supports_vertex(**v)) {
            Some(&v) => v,
            None => continue,
        };
        let cycle = rec
            .cycle
            .rotations(quiver)
            .into_iter()
            .find(|r| r.tail() == base)
            .expect("cycle passes its own vertex");
        let scalar = spec.path_action(&cycle);
        out.push(SyzygyGenerator { kind: SyzygyKind::Binomial, path: cycle, scalar: Some(scalar) });
    }
    Ok(out)
}

/// A concatenation of arrows and formal arrow inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizedPath {
    pub base: usize,
    /// (arrow, +1) walks the arrow; (arrow, -1) walks it backwards.
    pub steps: Vec<(usize, i8)>,
}

impl LocalizedPath {
    pub fn head(&self, quiver: &DimerQuiver) -> usize {
        let mut at = self.base;
        for &(a, dir) in &self.steps {
            at = if dir > 0 { quiver.arrow(a).head } else { quiver.arrow(a).tail };
        }
        at
    }

    /// Laurent label: signed sum of arrow exponent vectors.
    pub fn label(&self, table: &LabelTable, basis: Basis) -> Monomial {
        let mut m = Monomial::unit(table.basis_len(basis));
        for &(a, dir) in &self.steps {
            let l = table.arrow_label(basis, a);
            m = if dir > 0 { m.mul(l) } else { m.div(l) };
        }
        m
    }

    pub fn display(&self, quiver: &DimerQuiver) -> String {
        if self.steps.is_empty() {
            return format!("e@{}", self.base);
        }
        let comp: Vec<String> = self
            .steps
            .iter()
            .rev()
            .map(|&(a, dir)| {
                let id = &quiver.arrow(a).id;
                if dir > 0 {
                    id.clone()
                } else {
                    format!("{id}^-1")
                }
            })
            .collect();
        format!("{}@{}", comp.join("."), self.base)
    }
}

/// A formal inverse together with its plain-path realization: the inverse of
/// each arrow is its counterclockwise complementary arc weighted by one
/// inverse unit-cycle factor.
#[derive(Debug, Clone)]
pub struct LocalizedInverse {
    pub inverse: LocalizedPath,
    pub realization: Path,
    pub sigma_power: i64,
}

pub fn invert_supported_path(
    quiver: &DimerQuiver,
    _table: &LabelTable,
    spec: &SimpleModuleSpec,
    p: &Path,
) -> Result<LocalizedInverse> {
    for &a in p.arrows() {
        if spec.scalar(a).is_zero() {
            return Err(Error::NotLocallyInvertible(format!(
                "arrow {} acts by zero",
                quiver.arrow(a).id
            )));
        }
    }
    let head = p.head(quiver);
    let steps: Vec<(usize, i8)> = p.arrows().iter().rev().map(|&a| (a, -1i8)).collect();
    let inverse = LocalizedPath { base: head, steps };

    // Realization: the ccw complementary arc of each arrow, composed in
    // reverse, corrected by sigma^-len.
    let arcs = quiver.complementary_arcs();
    let mut arrows = Vec::new();
    for &a in p.arrows().iter().rev() {
        let (ccw_arc, _) = &arcs[a];
        let arc = if ccw_arc.is_empty() { &arcs[a].1 } else { ccw_arc };
        arrows.extend_from_slice(arc);
    }
    let realization = Path::new(quiver, head, arrows)?;
    Ok(LocalizedInverse { inverse, realization, sigma_power: -(p.len() as i64) })
}
