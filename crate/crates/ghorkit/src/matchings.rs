//! Perfect matchings by exact cover over the face incidences, simplicity
//! flags, and the monomial labelings they induce on arrows.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::quiver::DimerQuiver;

/// Exponent vector indexed by a fixed matching list. Plain labels are
/// nonnegative; localized labels may carry negative entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exps: Vec<i64>,
}

impl Monomial {
    pub fn unit(len: usize) -> Self {
        Monomial { exps: vec![0; len] }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() }
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial { exps: self.exps.iter().map(|e| e * k).collect() }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.exps.iter().all(|&e| e >= 0)
    }

    /// The integer l with self = other * sigma^l, when one exists.
    pub fn sigma_power_from(&self, other: &Monomial) -> Option<i64> {
        let diff = self.div(other);
        let l = *diff.exps.first()?;
        diff.exps.iter().all(|&e| e == l).then_some(l)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub arrows: BTreeSet<usize>,
    pub name: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    All,
    Simple,
}

/// Enumerates every arrow set meeting each face exactly once, in canonical
/// order (lexicographic on the sorted arrow-index lists). Backtracks on the
/// face with the fewest remaining candidates; arrows tried in index order.
pub fn enumerate_perfect_matchings(quiver: &DimerQuiver) -> Vec<BTreeSet<usize>> {
    let faces: Vec<&[usize]> = quiver.faces.iter().map(|f| f.arrows.as_slice()).collect();
    let mut face_of_arrow: Vec<Vec<usize>> = vec![Vec::new(); quiver.arrows.len()];
    for (f, face) in faces.iter().enumerate() {
        for &a in *face {
            face_of_arrow[a].push(f);
        }
    }
    let mut covered = vec![false; faces.len()];
    let mut banned = vec![0u32; quiver.arrows.len()];
    let mut chosen: Vec<usize> = Vec::new();
    let mut out: Vec<BTreeSet<usize>> = Vec::new();

    fn search(
        faces: &[&[usize]],
        face_of_arrow: &[Vec<usize>],
        covered: &mut Vec<bool>,
        banned: &mut Vec<u32>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<BTreeSet<usize>>,
    ) {
        // Pick the uncovered face with the fewest usable arrows.
        let mut pick: Option<(usize, usize)> = None;
        for (f, face) in faces.iter().enumerate() {
            if covered[f] {
                continue;
            }
            let count = face.iter().filter(|&&a| banned[a] == 0).count();
            if pick.is_none_or(|(_, best)| count < best) {
                pick = Some((f, count));
            }
        }
        let (f, count) = match pick {
            Some(p) => p,
            None => {
                out.push(chosen.iter().copied().collect());
                return;
            }
        };
        if count == 0 {
            return;
        }
        let mut candidates: Vec<usize> =
            faces[f].iter().copied().filter(|&a| banned[a] == 0).collect();
        candidates.sort_unstable();
        candidates.dedup();
        for a in candidates {
            chosen.push(a);
            let mut newly_covered = Vec::new();
            for &g in &face_of_arrow[a] {
                if !covered[g] {
                    covered[g] = true;
                    newly_covered.push(g);
                }
            }
            // Arrows sharing a face with the choice can no longer be used.
            let mut bans = Vec::new();
            for &g in &newly_covered {
                for &b in faces[g] {
                    banned[b] += 1;
                    bans.push(b);
                }
            }
            search(faces, face_of_arrow, covered, banned, chosen, out);
            for b in bans {
                banned[b] -= 1;
            }
            for g in newly_covered {
                covered[g] = false;
            }
            chosen.pop();
        }
    }

    search(&faces, &face_of_arrow, &mut covered, &mut banned, &mut chosen, &mut out);

    // Arrows lying in no face are unconstrained; the set definition admits
    // every superset by such arrows. Degenerate inputs only.
    let free: Vec<usize> =
        (0..quiver.arrows.len()).filter(|&a| face_of_arrow[a].is_empty()).collect();
    for &a in &free {
        let doubled: Vec<BTreeSet<usize>> = out
            .iter()
            .map(|sol| {
                let mut with = sol.clone();
                with.insert(a);
                with
            })
            .collect();
        out.extend(doubled);
    }

    out.sort_by(|x, y| {
        let xv: Vec<usize> = x.iter().copied().collect();
        let yv: Vec<usize> = y.iter().copied().collect();
        xv.cmp(&yv)
    });
    out.dedup();
    out
}

/// A matching is simple when the complement subquiver is strongly connected
/// over all vertices; trivial paths are allowed.
pub fn is_simple(quiver: &DimerQuiver, matching: &BTreeSet<usize>) -> Result<bool> {
    for face in &quiver.faces {
        let hits = face.arrows.iter().filter(|a| matching.contains(a)).count();
        if hits != 1 {
            return Err(Error::Precondition(format!(
                "matching meets a face {hits} times, expected once"
            )));
        }
    }
    let complement: BTreeSet<usize> =
        (0..quiver.arrows.len()).filter(|a| !matching.contains(a)).collect();
    Ok(quiver.strongly_connected_with(&complement))
}

/// User-supplied names for matchings: each name bound to an arrow id set.
#[derive(Debug, Clone, Default)]
pub struct NameMap {
    pub entries: Vec<(String, BTreeSet<String>)>,
}

/// Parses lines of the form `name = a,b`; `#` comments allowed.
pub fn parse_names(text: &str) -> Result<NameMap> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (name, rest) = content
            .split_once('=')
            .ok_or_else(|| Error::Parse { line, msg: "expected `name = a,b`".into() })?;
        let name = name.trim().to_string();
        if name.is_empty() {
            return Err(Error::Parse { line, msg: "empty matching name".into() });
        }
        let ids: BTreeSet<String> = rest
            .split(',')
            .map(|t| t.trim().to_string())
            .filter(|t| !t.is_empty())
            .collect();
        if ids.is_empty() {
            return Err(Error::Parse { line, msg: format!("no arrows for name {name:?}") });
        }
        entries.push((name, ids));
    }
    Ok(NameMap { entries })
}

/// Matchings in canonical order, simplicity flags, and the two labelings:
/// `eta` over all matchings and `tau` over the simple ones only.
#[derive(Debug, Clone)]
pub struct LabelTable {
    pub matchings: Vec<Matching>,
    pub simple_flags: Vec<bool>,
    /// Positions of the simple matchings within `matchings`.
    pub simple_indices: Vec<usize>,
    pub eta: Vec<Monomial>,
    pub tau: Vec<Monomial>,
}

pub fn build_label_table(quiver: &DimerQuiver, names: Option<&NameMap>) -> Result<LabelTable> {
    let sets = enumerate_perfect_matchings(quiver);
    let mut matchings: Vec<Matching> =
        sets.iter().map(|s| Matching { arrows: s.clone(), name: None }).collect();
    if let Some(map) = names {
        for (name, ids) in &map.entries {
            let idxs: Option<BTreeSet<usize>> =
                ids.iter().map(|id| quiver.arrow_index(id)).collect();
            let idxs = idxs.ok_or_else(|| {
                Error::Naming(format!("name {name:?} refers to an unknown arrow"))
            })?;
            let slot = matchings.iter_mut().find(|m| m.arrows == idxs).ok_or_else(|| {
                Error::Naming(format!("set named {name:?} is not a perfect matching"))
            })?;
            slot.name = Some(name.clone());
        }
    }
    let simple_flags: Vec<bool> = matchings
        .iter()
        .map(|m| is_simple(quiver, &m.arrows))
        .collect::<Result<_>>()?;
    let simple_indices: Vec<usize> =
        (0..matchings.len()).filter(|&k| simple_flags[k]).collect();

    let eta: Vec<Monomial> = (0..quiver.arrows.len())
        .map(|a| Monomial {
            exps: matchings.iter().map(|m| i64::from(m.arrows.contains(&a))).collect(),
        })
        .collect();
    let tau: Vec<Monomial> = (0..quiver.arrows.len())
        .map(|a| Monomial {
            exps: simple_indices
                .iter()
                .map(|&k| i64::from(matchings[k].arrows.contains(&a)))
                .collect(),
        })
        .collect();

    Ok(LabelTable { matchings, simple_flags, simple_indices, eta, tau })
}

impl LabelTable {
    pub fn basis_len(&self, basis: Basis) -> usize {
        match basis {
            Basis::All => self.matchings.len(),
            Basis::Simple => self.simple_indices.len(),
        }
    }

    pub fn arrow_label(&self, basis: Basis, arrow: usize) -> &Monomial {
        match basis {
            Basis::All => &self.eta[arrow],
            Basis::Simple => &self.tau[arrow],
        }
    }

    pub fn label_of_arrows(&self, basis: Basis, arrows: &[usize]) -> Monomial {
        let mut m = Monomial::unit(self.basis_len(basis));
        for &a in arrows {
            m = m.mul(self.arrow_label(basis, a));
        }
        m
    }

    /// The all-ones vector: the common label of every unit cycle.
    pub fn sigma(&self, basis: Basis) -> Monomial {
        Monomial { exps: vec![1; self.basis_len(basis)] }
    }

    /// Display name for position `k` of the chosen basis: the user name when
    /// present, else `m<index>` with a 1-based index into the full list.
    pub fn variable_name(&self, basis: Basis, k: usize) -> String {
        let idx = match basis {
            Basis::All => k,
            Basis::Simple => self.simple_indices[k],
        };
        match &self.matchings[idx].name {
            Some(name) => name.clone(),
            None => format!("m{}", idx + 1),
        }
    }

    /// Formats an exponent vector as a product of named variables. Variables
    /// are ordered alphabetically by display name; the unit monomial is `1`.
    pub fn format_monomial(&self, basis: Basis, m: &Monomial) -> String {
        let mut factors: Vec<(String, i64)> = m
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(k, &e)| (self.variable_name(basis, k), e))
            .collect();
        if factors.is_empty() {
            return "1".to_string();
        }
        factors.sort();
        factors
            .iter()
            .map(|(n, e)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn matching_arrow_ids(&self, quiver: &DimerQuiver, k: usize) -> Vec<String> {
        self.matchings[k].arrows.iter().map(|&a| quiver.arrows[a].id.clone()).collect()
    }
}
