//! Shared fixtures and independent oracles for the integration suites. The
//! oracles deliberately avoid the library's search machinery: subsets are
//! enumerated exhaustively and cycles by plain path search.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use ghorkit::dqif::parse_dqif;
use ghorkit::matchings::{parse_names, NameMap};
use ghorkit::modules::{parse_module_spec, SimpleModuleSpec};
use ghorkit::paths::{parse_path_literal, Path};
use ghorkit::quiver::DimerQuiver;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn load_quiver(name: &str) -> DimerQuiver {
    let text = std::fs::read_to_string(corpus_dir().join(name)).expect("corpus file readable");
    parse_dqif(&text).expect("corpus file parses")
}

pub fn load_names(name: &str) -> NameMap {
    let text = std::fs::read_to_string(corpus_dir().join(name)).expect("names file readable");
    parse_names(&text).expect("names file parses")
}

pub fn load_module(quiver: &DimerQuiver, name: &str) -> SimpleModuleSpec {
    let text = std::fs::read_to_string(corpus_dir().join(name)).expect("module file readable");
    parse_module_spec(quiver, &text).expect("module file parses")
}

pub fn path(quiver: &DimerQuiver, literal: &str) -> Path {
    parse_path_literal(quiver, literal).expect("path literal parses")
}

/// Oracle: perfect matchings by exhaustive subset enumeration.
pub fn brute_force_matchings(quiver: &DimerQuiver) -> Vec<BTreeSet<usize>> {
    let n = quiver.arrows.len();
    assert!(n <= 20, "oracle is for small quivers");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let set: BTreeSet<usize> = (0..n).filter(|&k| mask & (1 << k) != 0).collect();
        let ok = quiver
            .faces
            .iter()
            .all(|f| f.arrows.iter().filter(|a| set.contains(a)).count() == 1);
        if ok {
            out.push(set);
        }
    }
    out.sort_by(|x, y| {
        let xv: Vec<usize> = x.iter().copied().collect();
        let yv: Vec<usize> = y.iter().copied().collect();
        xv.cmp(&yv)
    });
    out
}

/// Oracle: cycles without interior vertex repetition, by path search up to
/// the vertex count, deduplicated up to rotation with least base first.
pub fn brute_force_simple_cycles(quiver: &DimerQuiver) -> Vec<Path> {
    let mut out: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    for base in 1..=quiver.vertex_count {
        let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
        while let Some(arrows) = stack.pop() {
            let p = Path::new(quiver, base, arrows.clone()).unwrap();
            let at = p.head(quiver);
            for k in 0..quiver.arrows.len() {
                if quiver.arrow(k).tail != at {
                    continue;
                }
                let mut next = arrows.clone();
                next.push(k);
                let q = Path::new(quiver, base, next.clone()).unwrap();
                let seq = q.vertex_sequence(quiver);
                let interior_repeat = (0..seq.len()).any(|i| {
                    (i + 1..seq.len()).any(|j| seq[i] == seq[j] && !(i == 0 && j == seq.len() - 1))
                });
                if interior_repeat {
                    continue;
                }
                if q.head(quiver) == base {
                    // canonical rotation: least base, then least arrows
                    let best = q
                        .rotations(quiver)
                        .into_iter()
                        .map(|r| (r.tail(), r.arrows().to_vec()))
                        .min()
                        .unwrap();
                    out.insert(best);
                } else if next.len() < quiver.vertex_count {
                    stack.push(next);
                }
            }
        }
    }
    let mut cycles: Vec<Path> = out
        .into_iter()
        .map(|(base, arrows)| Path::new(quiver, base, arrows).unwrap())
        .collect();
    cycles.sort_by_key(|p| (p.len(), p.arrows().to_vec(), p.tail()));
    cycles
}
