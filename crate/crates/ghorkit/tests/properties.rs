mod common;

use common::load_quiver;
use ghorkit::dqif::{parse_dqif, serialize_dqif};
use ghorkit::matchings::Monomial;
use ghorkit::surface::HomologyClass;
use proptest::prelude::*;

fn class(n: usize) -> impl Strategy<Value = HomologyClass> {
    prop::collection::vec(-20i64..20, n).prop_map(HomologyClass)
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(-6i64..6, n).prop_map(|exps| Monomial { exps })
}

proptest! {
    #[test]
    fn homology_group_laws(a in class(4), b in class(4), c in class(4)) {
        let zero = HomologyClass::zero(4);
        prop_assert_eq!(&(&a + &b), &(&b + &a));
        prop_assert_eq!(&(&(&a + &b) + &c), &(&a + &(&b + &c)));
        prop_assert_eq!(&(&a + &zero), &a);
        prop_assert_eq!(&(&a + &(-&a)), &zero);
    }

    #[test]
    fn monomial_exponent_arithmetic(a in monomial(5), b in monomial(5)) {
        prop_assert_eq!(a.mul(&b).div(&b), a.clone());
        prop_assert_eq!(a.mul(&b).degree(), a.degree() + b.degree());
        // sigma-power detection is exact
        let shifted = Monomial { exps: a.exps.iter().map(|e| e + 3).collect() };
        prop_assert_eq!(shifted.sigma_power_from(&a), Some(3));
    }

    /// Serialization is canonical: any reordering of the line blocks parses
    /// back to the same canonical text.
    #[test]
    fn dqif_roundtrip_under_permutation(seed in any::<u64>()) {
        for name in ["ex-fig1.dqif", "hex-c3.dqif", "pent-g2.dqif"] {
            let quiver = load_quiver(name);
            let canonical = serialize_dqif(&quiver);
            let mut lines: Vec<&str> = canonical.lines().collect();
            // keep the two header lines, shuffle the rest deterministically
            let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
            let body = &mut lines[2..];
            for k in (1..body.len()).rev() {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let j = (state as usize) % (k + 1);
                body.swap(k, j);
            }
            let shuffled = format!("{}\n", lines.join("\n"));
            let reparsed = parse_dqif(&shuffled).unwrap();
            prop_assert_eq!(serialize_dqif(&reparsed), canonical);
        }
    }
}

#[test]
fn parse_serialize_identity_on_corpus() {
    for name in ["ex-fig1.dqif", "hex-c3.dqif", "pent-g2.dqif"] {
        let quiver = load_quiver(name);
        let text = serialize_dqif(&quiver);
        let reparsed = parse_dqif(&text).unwrap();
        assert_eq!(serialize_dqif(&reparsed), text, "{name}");
    }
}

/// Frozen canonical forms of the corpus entries.
#[test]
fn canonical_fixtures() {
    let hex = load_quiver("hex-c3.dqif");
    assert_eq!(
        serialize_dqif(&hex),
        "surface 2\nvertices 1\n\
         arrow l1 1 1 1 0\narrow l2 1 1 0 1\narrow l3 1 1 -1 -1\n\
         face ccw l1 l2 l3\nface cw l1 l3 l2\n"
    );
    let ex = load_quiver("ex-fig1.dqif");
    assert_eq!(
        serialize_dqif(&ex),
        "surface 2\nvertices 3\n\
         arrow a 1 1 1 0\narrow b 1 2 0 0\narrow b' 1 2 0 -1\narrow c 2 3 0 1\n\
         arrow c' 2 3 1 1\narrow d 3 1 -1 -1\narrow d' 3 1 -1 0\n\
         face ccw b c d a\nface ccw b' c' d'\nface cw b' c d' a\nface cw b c' d\n"
    );
}
