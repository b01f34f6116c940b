use super::restrict;
use crate::error::{Error, Result};
use crate::ring::RingTable;
use crate::span::{additive_closure, AdditiveSpan};

/// A verified unital ring endomorphism.
#[derive(Clone, Debug)]
pub struct HomomorphismHandle<'r> {
    domain: &'r RingTable,
    image: Vec<usize>,
}

impl<'r> HomomorphismHandle<'r> {
    /// Verifies that `image` preserves addition, multiplication, zero and one.
    pub fn new(domain: &'r RingTable, image: Vec<usize>) -> Result<Self> {
        let n = domain.order();
        if image.len() != n {
            return Err(Error::NotHomomorphism(format!(
                "map has {} entries for {} elements",
                image.len(),
                n
            )));
        }
        if let Some(&x) = image.iter().find(|&&x| x >= n) {
            return Err(Error::IndexOutOfRange { index: x, order: n });
        }
        if image[domain.zero()] != domain.zero() {
            return Err(Error::NotHomomorphism("zero is not preserved".into()));
        }
        if image[domain.one()] != domain.one() {
            return Err(Error::NotHomomorphism(format!(
                "identity maps to {}",
                domain.label(image[domain.one()])
            )));
        }
        for a in 0..n {
            for b in 0..n {
                if image[domain.add(a, b)] != domain.add(image[a], image[b]) {
                    return Err(Error::NotHomomorphism(format!(
                        "addition fails at ({}, {})",
                        domain.label(a),
                        domain.label(b)
                    )));
                }
                if image[domain.mul(a, b)] != domain.mul(image[a], image[b]) {
                    return Err(Error::NotHomomorphism(format!(
                        "multiplication fails at ({}, {})",
                        domain.label(a),
                        domain.label(b)
                    )));
                }
            }
        }
        Ok(HomomorphismHandle { domain, image })
    }

    pub fn identity(domain: &'r RingTable) -> Self {
        HomomorphismHandle {
            domain,
            image: domain.elements().collect(),
        }
    }

    pub fn domain(&self) -> &'r RingTable {
        self.domain
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image_map(&self) -> &[usize] {
        &self.image
    }
}

/// A subset of a parent ring closed under addition, negation and product.
#[derive(Clone, Debug)]
pub struct SubringHandle<'r> {
    parent: &'r RingTable,
    members: Vec<usize>,
}

impl<'r> SubringHandle<'r> {
    /// Wraps an explicit member list after checking closure.
    pub fn from_members(parent: &'r RingTable, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let mut inside = vec![false; parent.order()];
        for &m in &members {
            if m >= parent.order() {
                return Err(Error::IndexOutOfRange {
                    index: m,
                    order: parent.order(),
                });
            }
            inside[m] = true;
        }
        if !inside[parent.zero()] {
            return Err(Error::InvalidArgument("subring must contain zero".into()));
        }
        for &a in &members {
            if !inside[parent.neg(a)] {
                return Err(Error::InvalidArgument(format!(
                    "not closed under negation at {}",
                    parent.label(a)
                )));
            }
            for &b in &members {
                if !inside[parent.add(a, b)] || !inside[parent.mul(a, b)] {
                    return Err(Error::InvalidArgument(format!(
                        "not closed at ({}, {})",
                        parent.label(a),
                        parent.label(b)
                    )));
                }
            }
        }
        Ok(SubringHandle { parent, members })
    }

    pub fn parent(&self) -> &'r RingTable {
        self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_central(&self) -> bool {
        self.members.iter().all(|&m| self.parent.is_central(m))
    }

    /// The subring as a standalone ring, indexed by position in `members`.
    ///
    /// Its identity is the parent identity when present, otherwise the unique
    /// member acting as a two-sided identity on the subring.
    pub fn to_ring(&self, provenance: String) -> Result<RingTable> {
        let p = self.parent;
        let one = if self.contains(p.one()) {
            p.one()
        } else {
            self.members
                .iter()
                .copied()
                .find(|&u| u != p.zero() && self.members.iter().all(|&m| p.mul(u, m) == m && p.mul(m, u) == m))
                .ok_or_else(|| Error::NoIdentity("subring has no multiplicative identity".into()))?
        };
        restrict(p, &self.members, one, provenance)
    }
}

/// Closure of `gens ∪ {0, 1}` under addition, negation and multiplication.
pub fn subring<'r>(parent: &'r RingTable, gens: &[usize]) -> SubringHandle<'r> {
    let mut span = AdditiveSpan::new(parent);
    let mut pending: Vec<usize> = std::iter::once(parent.one()).chain(gens.iter().copied()).collect();
    loop {
        for g in pending.drain(..) {
            span.extend(parent, g);
        }
        let members = span.members().to_vec();
        for &a in &members {
            for &b in &members {
                let ab = parent.mul(a, b);
                if !span.contains(ab) && !pending.contains(&ab) {
                    pending.push(ab);
                }
            }
        }
        if pending.is_empty() {
            break;
        }
    }
    let mut members = span.members().to_vec();
    members.sort_unstable();
    SubringHandle { parent, members }
}

/// The center `C(R)`.
pub fn center(ring: &RingTable) -> SubringHandle<'_> {
    SubringHandle {
        parent: ring,
        members: ring.elements().filter(|&c| ring.is_central(c)).collect(),
    }
}

/// A two-sided ideal of a parent ring.
#[derive(Clone, Debug)]
pub struct IdealHandle<'r> {
    parent: &'r RingTable,
    members: Vec<usize>,
}

impl<'r> IdealHandle<'r> {
    /// Checks that `members` is an additive subgroup absorbing products on
    /// both sides.
    pub fn from_members(parent: &'r RingTable, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let mut inside = vec![false; parent.order()];
        for &m in &members {
            inside[m] = true;
        }
        if !inside[parent.zero()] {
            return Err(Error::InvalidArgument("ideal must contain zero".into()));
        }
        for &x in &members {
            if !inside[parent.neg(x)] {
                return Err(Error::InvalidArgument(format!(
                    "not closed under negation at {}",
                    parent.label(x)
                )));
            }
            for &y in &members {
                if !inside[parent.add(x, y)] {
                    return Err(Error::InvalidArgument(format!(
                        "not closed under addition at ({}, {})",
                        parent.label(x),
                        parent.label(y)
                    )));
                }
            }
            for r in parent.elements() {
                if !inside[parent.mul(r, x)] || !inside[parent.mul(x, r)] {
                    return Err(Error::InvalidArgument(format!(
                        "not a two-sided ideal: {} times {} escapes",
                        parent.label(x),
                        parent.label(r)
                    )));
                }
            }
        }
        Ok(IdealHandle { parent, members })
    }

    pub fn parent(&self) -> &'r RingTable {
        self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_proper(&self) -> bool {
        self.members.len() < self.parent.order()
    }

    /// Whether the ideal, as a ring without identity, has no nonzero
    /// nilpotents (equivalently no nonzero square-zero element).
    pub fn is_reduced(&self) -> bool {
        let p = self.parent;
        self.members.iter().all(|&x| x == p.zero() || p.mul(x, x) != p.zero())
    }
}

/// The two-sided ideal generated by `gens`: the additive span of all
/// `r·g·s` with `r, s ∈ R`.
pub fn ideal_generated<'r>(parent: &'r RingTable, gens: &[usize]) -> IdealHandle<'r> {
    let mut seeds = Vec::new();
    let mut seen = vec![false; parent.order()];
    for &g in gens {
        for r in parent.elements() {
            let rg = parent.mul(r, g);
            for s in parent.elements() {
                let x = parent.mul(rg, s);
                if !seen[x] {
                    seen[x] = true;
                    seeds.push(x);
                }
            }
        }
    }
    IdealHandle {
        parent,
        members: additive_closure(parent, seeds),
    }
}

/// `R/I` together with the projection `R → R/I`.
#[derive(Clone, Debug)]
pub struct Quotient<'r> {
    pub ring: RingTable,
    pub projection: Vec<usize>,
    pub ideal: IdealHandle<'r>,
}

/// Quotient by the ideal generated by `gens`.
///
/// Cosets are represented by their least element index and ordered by it;
/// each coset is labeled with its representative's label.
pub fn quotient<'r>(parent: &'r RingTable, gens: &[usize]) -> Result<Quotient<'r>> {
    let ideal = ideal_generated(parent, gens);
    quotient_by(parent, ideal, gens_text(parent, gens))
}

pub(crate) fn gens_text(parent: &RingTable, gens: &[usize]) -> String {
    gens.iter().map(|&g| parent.label(g)).collect::<Vec<_>>().join(",")
}

/// Quotient by an already computed ideal.
pub(crate) fn quotient_by<'r>(
    parent: &'r RingTable,
    ideal: IdealHandle<'r>,
    gens_text: String,
) -> Result<Quotient<'r>> {
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let n = parent.order();
    let mut projection = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let coset = reps.len();
        reps.push(x);
        for &i in ideal.members() {
            projection[parent.add(x, i)] = coset;
        }
    }
    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            add.push(projection[parent.add(a, b)] as u32);
            mul.push(projection[parent.mul(a, b)] as u32);
        }
    }
    let labels = reps.iter().map(|&r| parent.label(r).to_string()).collect();
    let provenance = if gens_text.is_empty() {
        format!("quot({})", parent.provenance())
    } else {
        format!("quot({},{})", parent.provenance(), gens_text)
    };
    let ring = RingTable::assemble(
        m,
        add,
        mul,
        projection[parent.zero()],
        projection[parent.one()],
        labels,
        provenance,
    )?;
    Ok(Quotient {
        ring,
        projection,
        ideal,
    })
}

/// The corner ring `eRe` and its embedding into `R`.
#[derive(Clone, Debug)]
pub struct Corner {
    pub ring: RingTable,
    pub embedding: Vec<usize>,
}

pub fn corner(parent: &RingTable, e: usize) -> Result<Corner> {
    if e == parent.zero() {
        return Err(Error::ZeroIdempotent);
    }
    if !parent.is_idempotent(e) {
        return Err(Error::NotIdempotent(parent.label(e).to_string()));
    }
    let mut image: Vec<usize> = parent.elements().map(|x| parent.mul3(e, x, e)).collect();
    image.sort_unstable();
    image.dedup();
    let ring = restrict(
        parent,
        &image,
        e,
        format!("corner({},{})", parent.provenance(), parent.label(e)),
    )?;
    Ok(Corner { ring, embedding: image })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{direct_product, matrix_ring, zmod, MatrixKind};
    use crate::ring::{verify_axioms, Guards};

    fn g() -> Guards {
        Guards::default()
    }

    #[test]
    fn quotient_of_z4_by_two() {
        let z4 = zmod(4).unwrap();
        let q = quotient(&z4, &[2]).unwrap();
        assert_eq!(q.ring.order(), 2);
        assert_eq!(q.projection, vec![0, 1, 0, 1]);
        assert_eq!(quotient(&z4, &[1]).unwrap_err(), Error::ImproperIdeal);
    }

    #[test]
    fn quotient_of_u2_by_first_row() {
        let z2 = zmod(2).unwrap();
        let u2 = matrix_ring(MatrixKind::Upper, 2, &z2, &g()).unwrap();
        let e11 = u2.index_of("[[1,0],[0,0]]").unwrap();
        let e12 = u2.index_of("[[0,1],[0,0]]").unwrap();
        let q = quotient(&u2, &[e11, e12]).unwrap();
        assert_eq!(q.ring.order(), 2);
        assert_eq!(q.ideal.members().len(), 4);
        assert!(verify_axioms(&q.ring, &g()).unwrap().passed);
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let z12 = zmod(12).unwrap();
        let q = quotient(&z12, &[4]).unwrap();
        for a in z12.elements() {
            for b in z12.elements() {
                let (pa, pb) = (q.projection[a], q.projection[b]);
                assert_eq!(q.projection[z12.add(a, b)], q.ring.add(pa, pb));
                assert_eq!(q.projection[z12.mul(a, b)], q.ring.mul(pa, pb));
            }
        }
    }

    #[test]
    fn corners() {
        let z2 = zmod(2).unwrap();
        let m2 = matrix_ring(MatrixKind::Full, 2, &z2, &g()).unwrap();
        let e11 = m2.index_of("[[1,0],[0,0]]").unwrap();
        let c = corner(&m2, e11).unwrap();
        assert_eq!(c.ring.order(), 2);
        assert_eq!(corner(&m2, m2.one()).unwrap().ring.order(), 16);
        let u2 = matrix_ring(MatrixKind::Upper, 2, &z2, &g()).unwrap();
        let e1 = u2.index_of("[[1,1],[0,0]]").unwrap();
        assert_eq!(corner(&u2, e1).unwrap().ring.order(), 2);
        assert_eq!(corner(&u2, u2.zero()).unwrap_err(), Error::ZeroIdempotent);
        let e12 = u2.index_of("[[0,1],[0,0]]").unwrap();
        assert!(matches!(corner(&u2, e12), Err(Error::NotIdempotent(_))));
    }

    #[test]
    fn subrings() {
        let z2 = zmod(2).unwrap();
        let m2 = matrix_ring(MatrixKind::Full, 2, &z2, &g()).unwrap();
        assert_eq!(subring(&m2, &[m2.one()]).members().len(), 2);
        let u2 = matrix_ring(MatrixKind::Upper, 2, &z2, &g()).unwrap();
        let e11 = u2.index_of("[[1,0],[0,0]]").unwrap();
        let diag = subring(&u2, &[e11]);
        let labels: Vec<&str> = diag.members().iter().map(|&m| u2.label(m)).collect();
        assert_eq!(labels.len(), 4);
        assert!(labels.contains(&"[[0,0],[0,1]]"));
        let z6 = zmod(6).unwrap();
        assert_eq!(subring(&z6, &[3]).members(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn homomorphism_validation() {
        let z6 = zmod(6).unwrap();
        let triple: Vec<usize> = z6.elements().map(|x| (3 * x) % 6).collect();
        assert!(matches!(
            HomomorphismHandle::new(&z6, triple),
            Err(Error::NotHomomorphism(_))
        ));
        let z2 = zmod(2).unwrap();
        let p = direct_product(&[&z2, &z2], &g()).unwrap();
        // (a, b) ↦ (a, a)
        let diag: Vec<usize> = p.elements().map(|x| if x >= 2 { 3 } else { 0 }).collect();
        assert!(HomomorphismHandle::new(&p, diag).is_ok());
    }

    #[test]
    fn centers() {
        let z2 = zmod(2).unwrap();
        let m2 = matrix_ring(MatrixKind::Full, 2, &z2, &g()).unwrap();
        let c = center(&m2);
        assert_eq!(c.members(), &[m2.zero(), m2.one()]);
    }
}
