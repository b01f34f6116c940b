use std::sync::OnceLock;

use idemring::dsl::{arbitrary, build, parse, parse_element, resolve};
use idemring::predicates::{idempotents, replay_violates};
use idemring::{verify_axioms, Analysis, Guards, Property, RingTable};
use proptest::prelude::*;
use proptest::sample::subsequence;

const POOL: &[&str] = &[
    "Z(2)",
    "Z(4)",
    "Z(6)",
    "Z(12)",
    "U(2,Z(2))",
    "U(2,Z(3))",
    "M(2,Z(2))",
    "D(3,Z(2))",
    "V(3,Z(2))",
    "H(Z(3),2,1)",
    "K(Z(2),0)",
    "K(Z(3),0)",
    "prod(Z(2),U(2,Z(2)))",
    "dorroh(U(2,Z(2)),sub[1])",
    "quot(U(2,Z(2)),[[0,1],[0,0]])",
    "twist(U(2,Z(2)),id)",
    "corner(M(2,Z(2)),[[1,0],[0,0]])",
];

fn pool() -> &'static [RingTable] {
    static RINGS: OnceLock<Vec<RingTable>> = OnceLock::new();
    RINGS.get_or_init(|| {
        POOL.iter()
            .map(|t| build(&parse(t).unwrap(), &Guards::default()).unwrap())
            .collect()
    })
}

fn nonzero_idempotents(r: &RingTable) -> Vec<usize> {
    idempotents(r)
        .indices()
        .into_iter()
        .filter(|&e| e != r.zero())
        .collect()
}

/// Least `(a, b)` with `ab = 0` and `bae ≠ 0`, scanning indices in order.
fn least_reversal(r: &RingTable, e: usize) -> Option<(usize, usize)> {
    for a in r.elements() {
        for b in r.elements() {
            if r.mul(a, b) == r.zero() && r.mul3(b, a, e) != r.zero() {
                return Some((a, b));
            }
        }
    }
    None
}

/// `AB = 0 ⟹ BAe = 0` for the given subsets.
fn subsets_ok(r: &RingTable, e: usize, a: &[usize], b: &[usize]) -> bool {
    let ab_zero = a.iter().all(|&x| b.iter().all(|&y| r.mul(x, y) == r.zero()));
    !ab_zero || a.iter().all(|&x| b.iter().all(|&y| r.mul3(y, x, e) == r.zero()))
}

#[test]
fn pool_rings_are_rings() {
    for r in pool() {
        let rep = verify_axioms(r, &Guards::default()).unwrap();
        assert!(rep.passed, "{}: {:?}", r.provenance(), rep.violations);
    }
}

#[test]
fn witnesses_are_lexicographically_least() {
    for r in pool() {
        let an = Analysis::new(r, Guards::default());
        for e in nonzero_idempotents(r) {
            let v = an.check(Property::RightEReversible, Some(e)).unwrap();
            let naive = least_reversal(r, e);
            assert_eq!(v.holds(), Some(naive.is_none()), "{} at {}", r.provenance(), r.label(e));
            if let Some((a, b)) = naive {
                assert_eq!(
                    v.witness().unwrap().indices,
                    vec![a, b],
                    "{} at {}",
                    r.provenance(),
                    r.label(e)
                );
            }
        }
    }
}

/// All pairs of nonempty subsets, for every ring of order at most 8.
#[test]
fn subset_formulation_is_exhaustive_on_small_rings() {
    for r in pool().iter().filter(|r| r.order() <= 8) {
        let n = r.order();
        let subsets: Vec<Vec<usize>> = (1u32..1 << n)
            .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
            .collect();
        for e in nonzero_idempotents(r) {
            let elementwise = least_reversal(r, e).is_none();
            let setwise = subsets.iter().all(|a| subsets.iter().all(|b| subsets_ok(r, e, a, b)));
            assert_eq!(elementwise, setwise, "{} at {}", r.provenance(), r.label(e));
        }
    }
}

#[test]
fn one_reversibility_is_reversibility() {
    for r in pool() {
        let an = Analysis::new(r, Guards::default());
        let at_one = an.check(Property::RightEReversible, Some(r.one())).unwrap();
        let global = an.check(Property::Reversible, None).unwrap();
        assert_eq!(at_one.holds(), global.holds(), "{}", r.provenance());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printing_then_parsing_is_the_identity(e in arbitrary::expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e);
    }

    #[test]
    fn element_literals_round_trip(lit in arbitrary::elem_lit()) {
        prop_assert_eq!(parse_element(&lit.to_string()).unwrap(), lit);
    }

    #[test]
    fn negation_is_an_involution(ring in 0..POOL.len(), x in any::<prop::sample::Index>(), y in any::<prop::sample::Index>()) {
        let r = &pool()[ring];
        let (x, y) = (x.index(r.order()), y.index(r.order()));
        prop_assert_eq!(r.neg(r.neg(x)), x);
        prop_assert_eq!(r.add(x, r.neg(x)), r.zero());
        prop_assert_eq!(r.sub(x, y), r.add(x, r.neg(y)));
        prop_assert_eq!(r.mul(x, y), r.mul(x, y));
    }

    #[test]
    fn labels_parse_back_to_their_index(ring in 0..POOL.len(), x in any::<prop::sample::Index>()) {
        let r = &pool()[ring];
        let x = x.index(r.order());
        let lit = parse_element(r.label(x)).unwrap();
        prop_assert_eq!(resolve(r, &lit).unwrap(), x);
    }

    /// Every failing verdict carries a witness that replays to a genuine
    /// violation, and whose labels resolve to the same indices.
    #[test]
    fn witnesses_replay(ring in 0..POOL.len(), property in any::<prop::sample::Index>(), e in any::<prop::sample::Index>()) {
        let r = &pool()[ring];
        let all: Vec<Property> = Property::all().collect();
        let property = all[property.index(all.len())];
        let ids = nonzero_idempotents(r);
        let e = property.is_relative().then(|| ids[e.index(ids.len())]);
        let v = Analysis::new(r, Guards::default()).check(property, e).unwrap();
        if v.holds() == Some(false) {
            let w = v.witness().unwrap();
            prop_assert!(replay_violates(r, property, e, &w.indices), "{} {:?}", property, w.labels);
            for (label, &i) in w.labels.iter().zip(&w.indices) {
                prop_assert_eq!(resolve(r, &parse_element(label).unwrap()).unwrap(), i);
            }
        } else {
            prop_assert!(v.witness().is_none());
        }
    }

    /// Random subset pairs for the larger pool members.
    #[test]
    fn subset_formulation_on_random_subsets(
        ring in 0..POOL.len(),
        e in any::<prop::sample::Index>(),
        picks in (subsequence((0..64).collect::<Vec<usize>>(), 1..6), subsequence((0..64).collect::<Vec<usize>>(), 1..6)),
    ) {
        let r = &pool()[ring];
        let ids = nonzero_idempotents(r);
        let e = ids[e.index(ids.len())];
        let wrap = |s: &[usize]| -> Vec<usize> { s.iter().map(|&i| i % r.order()).collect() };
        let (a, b) = (wrap(&picks.0), wrap(&picks.1));
        if least_reversal(r, e).is_none() {
            prop_assert!(subsets_ok(r, e, &a, &b));
        }
    }
}
