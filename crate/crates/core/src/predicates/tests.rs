use super::*;
use crate::constructions::{direct_product, k_ring, matrix_ring, zmod, MatrixKind};

fn g() -> Guards {
    Guards::default()
}

fn u2(n: usize) -> RingTable {
    matrix_ring(MatrixKind::Upper, 2, &zmod(n).unwrap(), &g()).unwrap()
}

fn idx(r: &RingTable, label: &str) -> usize {
    r.index_of(label).unwrap_or_else(|| panic!("no element {label}"))
}

fn holds(v: Result<PropertyVerdict>) -> bool {
    v.unwrap().holds().unwrap()
}

#[test]
fn idempotent_sets() {
    let z6 = zmod(6).unwrap();
    assert_eq!(idempotents(&z6).indices(), vec![0, 1, 3, 4]);
    let u = u2(2);
    let set = idempotents(&u);
    assert_eq!(set.len(), 6);
    for m in &set.members {
        assert!(u.is_idempotent(m.index));
        if m.central {
            assert!(m.left_semicentral && m.right_semicentral);
        }
    }
    let k0 = k_ring(&zmod(2).unwrap(), 0, &g()).unwrap();
    assert_eq!(idempotents(&k0).len(), 10);
}

#[test]
fn nilpotent_sets() {
    assert_eq!(nilpotents(&zmod(4).unwrap()), vec![0, 2]);
    assert_eq!(nilpotents(&zmod(6).unwrap()), vec![0]);
    assert_eq!(nilpotents(&zmod(8).unwrap()), vec![0, 2, 4, 6]);
    let u = u2(2);
    let n = nilpotents(&u);
    assert_eq!(u.render(&n), vec!["[[0,0],[0,0]]", "[[0,1],[0,0]]"]);
}

#[test]
fn annihilators() {
    let u = u2(2);
    let all: Vec<usize> = u.elements().collect();
    assert_eq!(right_annihilator(&u, &all).unwrap(), vec![u.zero()]);
    assert_eq!(left_annihilator(&u, &[u.zero()]).unwrap(), all);
    assert!(right_annihilator(&u, &[]).is_err());
    let e11 = idx(&u, "[[1,0],[0,0]]");
    let e11_row: Vec<usize> = u.elements().map(|x| u.mul(e11, x)).collect();
    assert_eq!(right_annihilator(&u, &e11_row).unwrap(), vec![u.zero()]);
    let ann = left_annihilator(&u, &e11_row).unwrap();
    assert_eq!(ann.len(), 4);
    assert!(ann.iter().all(|&x| u.label(x).starts_with("[[0,")));
}

#[test]
fn one_sided_reversibility_in_u2() {
    let u = u2(3);
    let e1 = idx(&u, "[[1,1],[0,0]]");
    let e2 = idx(&u, "[[0,0],[0,1]]");
    assert!(holds(is_right_e_reversible(&u, e1)));
    let left = is_left_e_reversible(&u, e1).unwrap();
    let w = left.witness().unwrap();
    assert!(replay_violates(&u, Property::LeftEReversible, Some(e1), &w.indices));
    // The literal pair A = (0,1;0,1), B = (1,0;0,0) also violates.
    let a = idx(&u, "[[0,1],[0,1]]");
    let b = idx(&u, "[[1,0],[0,0]]");
    assert!(replay_violates(&u, Property::LeftEReversible, Some(e1), &[a, b]));
    assert!(holds(is_left_e_reversible(&u, e2)));
    assert!(!holds(is_right_e_reversible(&u, e2)));
}

#[test]
fn invalid_idempotents_rejected() {
    let u = u2(2);
    assert_eq!(is_right_e_reversible(&u, u.zero()).unwrap_err(), Error::ZeroIdempotent);
    let e12 = idx(&u, "[[0,1],[0,0]]");
    assert!(matches!(is_right_e_reversible(&u, e12), Err(Error::NotIdempotent(_))));
    assert!(matches!(
        is_right_e_reversible(&u, 99),
        Err(Error::IndexOutOfRange { .. })
    ));
}

#[test]
fn e_reduced() {
    let z6 = zmod(6).unwrap();
    for e in [1, 3, 4] {
        assert!(holds(is_right_e_reduced(&z6, e)));
    }
    let u = u2(2);
    let e22 = idx(&u, "[[0,0],[0,1]]");
    let v = is_right_e_reduced(&u, e22).unwrap();
    assert_eq!(v.witness().unwrap().labels, vec!["[[0,1],[0,0]]"]);
    assert!(holds(is_left_e_reduced(&u, e22)));
}

#[test]
fn m3_corner_idempotent_fails_everything() {
    let m3 = matrix_ring(MatrixKind::Full, 3, &zmod(2).unwrap(), &g()).unwrap();
    let e = idx(&m3, "[[1,0,0],[0,0,0],[0,0,1]]");
    let a = idx(&m3, "[[0,0,0],[0,0,1],[0,0,0]]");
    let b = idx(&m3, "[[0,1,0],[0,0,0],[0,0,0]]");
    assert!(replay_violates(&m3, Property::RightEReversible, Some(e), &[a, b]));
    assert!(replay_violates(&m3, Property::LeftEReversible, Some(e), &[a, b]));
    assert!(!holds(is_right_e_reversible(&m3, e)));
    assert!(!holds(is_e_symmetric(&m3, e)));
}

#[test]
fn global_verdicts() {
    let z6 = zmod(6).unwrap();
    let v = global_properties(&z6).unwrap();
    let get = |vs: &[PropertyVerdict], p: Property| vs.iter().find(|v| v.property == p).unwrap().clone();
    for p in [
        Property::Reduced,
        Property::Reversible,
        Property::Symmetric,
        Property::Semicommutative,
        Property::Reflexive,
    ] {
        assert_eq!(get(&v, p).holds(), Some(true), "{p}");
    }
    let prime = get(&v, Property::Prime);
    assert_eq!(prime.witness().unwrap().labels, vec!["2", "3"]);
    assert_eq!(get(&v, Property::Domain).holds(), Some(false));

    let u = u2(3);
    let v = global_properties(&u).unwrap();
    assert_eq!(get(&v, Property::DirectlyFinite).holds(), Some(true));
    assert_eq!(get(&v, Property::Prime).holds(), Some(false));
    assert_eq!(get(&v, Property::Reversible).holds(), Some(false));

    let m2 = matrix_ring(MatrixKind::Full, 2, &zmod(2).unwrap(), &g()).unwrap();
    let v = global_properties(&m2).unwrap();
    assert_eq!(get(&v, Property::Semiprime).holds(), Some(true));
    assert_eq!(get(&v, Property::Reduced).holds(), Some(false));
    assert_eq!(get(&v, Property::VonNeumannRegular).holds(), Some(true));
    assert_eq!(get(&v, Property::Prime).holds(), Some(true));
    for verdict in &v {
        if let Some(w) = verdict.witness() {
            assert!(
                replay_violates(&m2, verdict.property, None, &w.indices),
                "{}",
                verdict.property
            );
        }
    }
}

#[test]
fn minimal_left_ideals() {
    let m2 = matrix_ring(MatrixKind::Full, 2, &zmod(2).unwrap(), &g()).unwrap();
    let e11 = idx(&m2, "[[1,0],[0,0]]");
    assert!(minimal_left_idempotents(&m2).contains(&e11));
    let v = is_left_min_abel(&m2).unwrap();
    let w = v.witness().unwrap();
    assert_eq!(w.labels.len(), 2);
    assert!(replay_violates(&m2, Property::LeftMinAbel, None, &w.indices));

    assert!(minimal_left_idempotents(&zmod(4).unwrap()).is_empty());
    assert!(holds(is_left_min_abel(&zmod(4).unwrap())));

    let z2 = zmod(2).unwrap();
    let p = direct_product(&[&z2, &z2], &g()).unwrap();
    let me = minimal_left_idempotents(&p);
    assert_eq!(p.render(&me), vec!["(0,1)", "(1,0)"]);
}

#[test]
fn survey_rows() {
    let u = u2(2);
    let rows = survey(&u).unwrap();
    assert_eq!(rows.len(), 5);
    let row = |label: &str| rows.iter().find(|r| r.idempotent.label == label).unwrap();
    let e1 = row("[[1,1],[0,0]]");
    assert_eq!(e1.verdict(Property::RightEReversible).unwrap().holds(), Some(true));
    assert_eq!(e1.verdict(Property::LeftEReversible).unwrap().holds(), Some(false));
    let e2 = row("[[0,0],[0,1]]");
    assert_eq!(e2.verdict(Property::LeftEReversible).unwrap().holds(), Some(true));
    assert_eq!(e2.verdict(Property::RightEReversible).unwrap().holds(), Some(false));

    let z6 = zmod(6).unwrap();
    for r in survey(&z6).unwrap() {
        assert!(r.cells.iter().all(|c| c.holds() == Some(true)));
    }
}

#[test]
fn guard_trips_become_skips() {
    let m2 = matrix_ring(MatrixKind::Full, 2, &zmod(2).unwrap(), &g()).unwrap();
    let tight = Guards {
        max_pair_order: 8,
        max_triple_order: 8,
    };
    let a = Analysis::new(&m2, tight);
    assert!(a.check(Property::Reversible, None).unwrap_err().is_size_guard());
    let v = a.check_or_skip(Property::Symmetric, None).unwrap();
    assert_eq!(v.holds(), None);
    // Nilpotent scans need no guard.
    assert_eq!(a.check(Property::Reduced, None).unwrap().holds(), Some(false));
}

#[test]
fn property_names_round_trip() {
    for p in Property::all() {
        assert_eq!(p.name().parse::<Property>().unwrap(), p);
    }
    assert!("left-e-nonsense".parse::<Property>().is_err());
}
