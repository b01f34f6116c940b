//! Ring isomorphism search by backtracking over generator images.

use crate::ring::RingTable;

/// Cheap isomorphism invariants of one element.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Signature {
    additive_order: usize,
    square_is_zero: bool,
    idempotent: bool,
    right_ann: usize,
    left_ann: usize,
    centralizer: usize,
}

fn signatures(r: &RingTable) -> Vec<Signature> {
    r.elements()
        .map(|x| {
            let mut k = 1;
            let mut y = x;
            while y != r.zero() {
                y = r.add(y, x);
                k += 1;
            }
            Signature {
                additive_order: k,
                square_is_zero: r.mul(x, x) == r.zero(),
                idempotent: r.is_idempotent(x),
                right_ann: r.elements().filter(|&b| r.mul(x, b) == r.zero()).count(),
                left_ann: r.elements().filter(|&b| r.mul(b, x) == r.zero()).count(),
                centralizer: r.elements().filter(|&b| r.mul(x, b) == r.mul(b, x)).count(),
            }
        })
        .collect()
}

/// Greedy generators of `r` as a ring (the identity is always implied).
fn ring_generators(r: &RingTable) -> Vec<usize> {
    let mut inside = vec![false; r.order()];
    let mut members = Vec::new();
    let mut gens = Vec::new();
    let absorb = |x: usize, inside: &mut Vec<bool>, members: &mut Vec<usize>| {
        if inside[x] {
            return;
        }
        inside[x] = true;
        let mut queue = vec![x];
        while let Some(y) = queue.pop() {
            members.push(y);
            for i in 0..members.len() {
                let m = members[i];
                for z in [r.add(y, m), r.mul(y, m), r.mul(m, y)] {
                    if !inside[z] {
                        inside[z] = true;
                        queue.push(z);
                    }
                }
            }
        }
    };
    absorb(r.zero(), &mut inside, &mut members);
    absorb(r.one(), &mut inside, &mut members);
    for x in r.elements() {
        if !inside[x] {
            gens.push(x);
            absorb(x, &mut inside, &mut members);
        }
    }
    gens
}

struct Search<'a> {
    a: &'a RingTable,
    b: &'a RingTable,
    gens: Vec<usize>,
    sig_a: Vec<Signature>,
    sig_b: Vec<Signature>,
}

impl Search<'_> {
    /// Extends `map` to the closure of its domain; false on a conflict.
    fn propagate(&self, map: &mut [Option<usize>], used: &mut [bool], trail: &mut Vec<usize>) -> bool {
        let (a, b) = (self.a, self.b);
        let mut known: Vec<usize> = a.elements().filter(|&x| map[x].is_some()).collect();
        let mut i = 0;
        while i < known.len() {
            let x = known[i];
            let mut j = 0;
            while j <= i {
                let y = known[j];
                let (fx, fy) = (map[x].unwrap(), map[y].unwrap());
                for (z, fz) in [
                    (a.add(x, y), b.add(fx, fy)),
                    (a.mul(x, y), b.mul(fx, fy)),
                    (a.mul(y, x), b.mul(fy, fx)),
                ] {
                    match map[z] {
                        Some(w) if w != fz => return false,
                        Some(_) => {}
                        None => {
                            if used[fz] || self.sig_a[z] != self.sig_b[fz] {
                                return false;
                            }
                            map[z] = Some(fz);
                            used[fz] = true;
                            trail.push(z);
                            known.push(z);
                        }
                    }
                }
                j += 1;
            }
            i += 1;
        }
        true
    }

    fn solve(&self, depth: usize, map: &mut Vec<Option<usize>>, used: &mut Vec<bool>) -> bool {
        if depth == self.gens.len() {
            return map.iter().all(Option::is_some);
        }
        let g = self.gens[depth];
        if map[g].is_some() {
            return self.solve(depth + 1, map, used);
        }
        for candidate in self.b.elements() {
            if used[candidate] || self.sig_a[g] != self.sig_b[candidate] {
                continue;
            }
            let mut trail = vec![g];
            map[g] = Some(candidate);
            used[candidate] = true;
            if self.propagate(map, used, &mut trail) && self.solve(depth + 1, map, used) {
                return true;
            }
            for x in trail {
                used[map[x].unwrap()] = false;
                map[x] = None;
            }
        }
        false
    }
}

/// A bijection `φ: A → B` preserving both tables, if one exists.
pub fn find_isomorphism(a: &RingTable, b: &RingTable) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let search = Search {
        a,
        b,
        gens: ring_generators(a),
        sig_a: signatures(a),
        sig_b: signatures(b),
    };
    let mut sorted_a = search.sig_a.iter().map(|s| format!("{s:?}")).collect::<Vec<_>>();
    let mut sorted_b = search.sig_b.iter().map(|s| format!("{s:?}")).collect::<Vec<_>>();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let mut map = vec![None; a.order()];
    let mut used = vec![false; b.order()];
    map[a.zero()] = Some(b.zero());
    used[b.zero()] = true;
    if map[a.one()].is_none() {
        map[a.one()] = Some(b.one());
        used[b.one()] = true;
    }
    let mut trail = Vec::new();
    if !search.propagate(&mut map, &mut used, &mut trail) || !search.solve(0, &mut map, &mut used) {
        return None;
    }
    let phi: Vec<usize> = map.into_iter().map(Option::unwrap).collect();
    let preserves = a.elements().all(|x| {
        a.elements()
            .all(|y| phi[a.add(x, y)] == b.add(phi[x], phi[y]) && phi[a.mul(x, y)] == b.mul(phi[x], phi[y]))
    });
    preserves.then_some(phi)
}

pub fn are_isomorphic(a: &RingTable, b: &RingTable) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{direct_product, k_ring, matrix_ring, zmod, MatrixKind};
    use crate::ring::Guards;

    #[test]
    fn crt() {
        let g = Guards::default();
        let (z2, z3) = (zmod(2).unwrap(), zmod(3).unwrap());
        let p = direct_product(&[&z2, &z3], &g).unwrap();
        assert!(are_isomorphic(&p, &zmod(6).unwrap()));
        let p22 = direct_product(&[&z2, &z2], &g).unwrap();
        assert!(!are_isomorphic(&p22, &zmod(4).unwrap()));
    }

    #[test]
    fn k1_is_full_matrix_ring() {
        let g = Guards::default();
        for n in [2, 3] {
            let z = zmod(n).unwrap();
            let k1 = k_ring(&z, 1, &g).unwrap();
            let m2 = matrix_ring(MatrixKind::Full, 2, &z, &g).unwrap();
            assert!(are_isomorphic(&k1, &m2), "n = {n}");
            let k0 = k_ring(&z, 0, &g).unwrap();
            assert!(!are_isomorphic(&k0, &m2), "n = {n}");
        }
    }

    #[test]
    fn same_order_non_isomorphic() {
        let g = Guards::default();
        let z2 = zmod(2).unwrap();
        let u2 = matrix_ring(MatrixKind::Upper, 2, &z2, &g).unwrap();
        let p = direct_product(&[&z2, &z2, &z2], &g).unwrap();
        assert!(!are_isomorphic(&u2, &p));
        assert!(are_isomorphic(&u2, &u2));
    }
}
