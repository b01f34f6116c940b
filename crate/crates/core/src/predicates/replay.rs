use super::verdict::Property;
use crate::ring::RingTable;

fn is_nilpotent(r: &RingTable, a: usize) -> bool {
    let mut x = a;
    for _ in 0..r.order() {
        if x == r.zero() {
            return true;
        }
        x = r.mul(x, a);
    }
    x == r.zero()
}

fn through_is_zero(r: &RingTable, a: usize, b: usize) -> bool {
    r.elements().all(|x| r.mul3(a, x, b) == r.zero())
}

/// Re-evaluates the defining condition of `property` on `witness` directly
/// from the tables. Returns true iff the tuple is a genuine violation.
pub fn replay_violates(ring: &RingTable, property: Property, e: Option<usize>, witness: &[usize]) -> bool {
    let r = ring;
    let z = r.zero();
    let e = e.unwrap_or(r.one());
    if witness.iter().any(|&x| x >= r.order()) {
        return false;
    }
    match (property, witness) {
        (Property::RightEReversible | Property::Reversible, &[a, b]) => r.mul(a, b) == z && r.mul3(b, a, e) != z,
        (Property::LeftEReversible, &[a, b]) => r.mul(a, b) == z && r.mul3(e, b, a) != z,
        (Property::RightEReduced | Property::Reduced, &[n]) => is_nilpotent(r, n) && r.mul(n, e) != z,
        (Property::LeftEReduced, &[n]) => is_nilpotent(r, n) && r.mul(e, n) != z,
        (Property::ESymmetric | Property::Symmetric, &[a, b, c]) => {
            r.mul3(a, b, c) == z && r.mul(r.mul3(a, c, b), e) != z
        }
        (Property::RightESemicommutative | Property::Semicommutative, &[a, b, x]) => {
            r.mul(a, b) == z && r.mul(r.mul3(a, x, b), e) != z
        }
        (Property::LeftESemicommutative, &[a, b, x]) => r.mul(a, b) == z && r.mul(e, r.mul3(a, x, b)) != z,
        (Property::Reflexive, &[a, b, x]) => through_is_zero(r, a, b) && r.mul3(b, x, a) != z,
        (Property::RightIdempotentReflexive, &[h, f, x]) => {
            r.is_idempotent(f) && through_is_zero(r, h, f) && r.mul3(f, x, h) != z
        }
        (Property::Abelian, &[f, a]) => r.is_idempotent(f) && r.mul(f, a) != r.mul(a, f),
        (Property::Semiprime, &[a]) => a != z && through_is_zero(r, a, a),
        (Property::Prime, &[a, b]) => a != z && b != z && through_is_zero(r, a, b),
        (Property::Domain, &[a, b]) => a != z && b != z && r.mul(a, b) == z,
        (Property::DirectlyFinite, &[a, b]) => r.mul(a, b) == r.one() && r.mul(b, a) != r.one(),
        (Property::VonNeumannRegular, &[a]) => r.elements().all(|x| r.mul3(a, x, a) != a),
        (Property::LeftMinAbel, &[f, a]) => {
            r.is_idempotent(f) && f != z && is_left_minimal(r, f) && r.mul(a, f) != r.mul3(f, a, f)
        }
        _ => false,
    }
}

fn left_ideal(r: &RingTable, x: usize) -> Vec<bool> {
    let mut member = vec![false; r.order()];
    for y in r.elements() {
        member[r.mul(y, x)] = true;
    }
    member
}

fn is_left_minimal(r: &RingTable, f: usize) -> bool {
    let rf = left_ideal(r, f);
    r.elements()
        .filter(|&x| rf[x] && x != r.zero())
        .all(|x| left_ideal(r, x) == rf)
}
