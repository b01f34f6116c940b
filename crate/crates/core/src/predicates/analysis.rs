use std::cell::OnceCell;

use super::verdict::{Outcome, Property, PropertyVerdict, Witness};
use crate::clock::Stopwatch;
use crate::error::{Error, Result};
use crate::ring::{Guards, RingTable};
use crate::span::{additive_generators, generators_of, AdditiveSpan};

/// Lazily computed structure of one ring, shared by every predicate.
///
/// The `*_span` caches hold additive generators of the sets a predicate
/// multiplies by `e`: since `x ↦ xe` and `x ↦ ex` are additive, a
/// predicate holds iff it holds on those generators. Witnesses are then
/// found by an ordered rescan, so they are always lexicographically least.
pub struct Analysis<'r> {
    ring: &'r RingTable,
    guards: Guards,
    idempotents: OnceCell<Vec<usize>>,
    nilpotents: OnceCell<Vec<usize>>,
    right_ann: OnceCell<Vec<Vec<u32>>>,
    right_ann_gens: OnceCell<Vec<Vec<u32>>>,
    add_gens: OnceCell<Vec<usize>>,
    reversal: OnceCell<Vec<usize>>,
    symmetric_span: OnceCell<Vec<usize>>,
    semicommutative_span: OnceCell<Vec<usize>>,
    left_ideal_sizes: OnceCell<Vec<usize>>,
    min_left: OnceCell<Vec<usize>>,
}

fn pick(condition: bool, witness: impl FnOnce() -> Option<Vec<usize>>) -> Option<Vec<usize>> {
    if condition {
        None
    } else {
        witness()
    }
}

impl<'r> Analysis<'r> {
    pub fn new(ring: &'r RingTable, guards: Guards) -> Self {
        Analysis {
            ring,
            guards,
            idempotents: OnceCell::new(),
            nilpotents: OnceCell::new(),
            right_ann: OnceCell::new(),
            right_ann_gens: OnceCell::new(),
            add_gens: OnceCell::new(),
            reversal: OnceCell::new(),
            symmetric_span: OnceCell::new(),
            semicommutative_span: OnceCell::new(),
            left_ideal_sizes: OnceCell::new(),
            min_left: OnceCell::new(),
        }
    }

    pub fn ring(&self) -> &'r RingTable {
        self.ring
    }

    pub fn guards(&self) -> &Guards {
        &self.guards
    }

    /// All idempotents, zero included, ascending.
    pub fn idempotents(&self) -> &[usize] {
        self.idempotents
            .get_or_init(|| self.ring.elements().filter(|&x| self.ring.is_idempotent(x)).collect())
    }

    pub fn nonzero_idempotents(&self) -> impl Iterator<Item = usize> + '_ {
        let zero = self.ring.zero();
        self.idempotents().iter().copied().filter(move |&x| x != zero)
    }

    /// All nilpotents, zero included, ascending.
    pub fn nilpotents(&self) -> &[usize] {
        self.nilpotents.get_or_init(|| {
            let r = self.ring;
            // a^n = 0 for nilpotent a, so ⌈log₂ n⌉ squarings suffice.
            let rounds = usize::BITS - (r.order() - 1).leading_zeros();
            r.elements()
                .filter(|&a| {
                    let mut x = a;
                    for _ in 0..=rounds {
                        if x == r.zero() {
                            return true;
                        }
                        let y = r.mul(x, x);
                        if y == x {
                            return false;
                        }
                        x = y;
                    }
                    x == r.zero()
                })
                .collect()
        })
    }

    /// `r(a)` for every `a`, ascending.
    pub fn right_annihilators(&self) -> &[Vec<u32>] {
        self.right_ann.get_or_init(|| {
            let r = self.ring;
            let n = r.order();
            let table = r.mul_table();
            (0..n)
                .map(|a| {
                    let row = &table[a * n..(a + 1) * n];
                    (0..n as u32)
                        .filter(|&b| row[b as usize] as usize == r.zero())
                        .collect()
                })
                .collect()
        })
    }

    fn right_annihilator_gens(&self) -> &[Vec<u32>] {
        self.right_ann_gens.get_or_init(|| {
            let r = self.ring;
            self.right_annihilators()
                .iter()
                .map(|ann| {
                    generators_of(r, ann.iter().map(|&b| b as usize))
                        .into_iter()
                        .map(|g| g as u32)
                        .collect()
                })
                .collect()
        })
    }

    pub fn additive_generators(&self) -> &[usize] {
        self.add_gens.get_or_init(|| additive_generators(self.ring))
    }

    /// The distinct products `ba` over zero pairs `ab = 0`.
    fn reversal_products(&self) -> &[usize] {
        self.reversal.get_or_init(|| {
            let r = self.ring;
            let mut seen = vec![false; r.order()];
            for (a, ann) in self.right_annihilators().iter().enumerate() {
                for &b in ann {
                    seen[r.mul(b as usize, a)] = true;
                }
            }
            (0..r.order()).filter(|&x| seen[x]).collect()
        })
    }

    /// Generators of `span{acb : abc = 0}`.
    fn symmetric_span(&self) -> &[usize] {
        self.symmetric_span.get_or_init(|| {
            let r = self.ring;
            let ann_gens = self.right_annihilator_gens();
            let mut span = AdditiveSpan::new(r);
            for a in r.elements() {
                for b in r.elements() {
                    for &c in &ann_gens[r.mul(a, b)] {
                        span.extend(r, r.mul3(a, c as usize, b));
                    }
                }
            }
            span.gens().to_vec()
        })
    }

    /// Generators of `span{arb : ab = 0, r ∈ R}`.
    fn semicommutative_span(&self) -> &[usize] {
        self.semicommutative_span.get_or_init(|| {
            let r = self.ring;
            let ann_gens = self.right_annihilator_gens();
            let mut span = AdditiveSpan::new(r);
            for a in r.elements() {
                for &g in self.additive_generators() {
                    let ag = r.mul(a, g);
                    for &b in &ann_gens[a] {
                        span.extend(r, r.mul(ag, b as usize));
                    }
                }
            }
            span.gens().to_vec()
        })
    }

    /// `|Rx|` for every `x`.
    pub fn left_ideal_sizes(&self) -> &[usize] {
        self.left_ideal_sizes.get_or_init(|| {
            let r = self.ring;
            let mut span = AdditiveSpan::new(r);
            r.elements()
                .map(|x| {
                    span.reset(r);
                    for &g in self.additive_generators() {
                        span.extend(r, r.mul(g, x));
                    }
                    span.len()
                })
                .collect()
        })
    }

    /// Elements of the left ideal `Rx`, ascending.
    pub fn left_ideal(&self, x: usize) -> Vec<usize> {
        let r = self.ring;
        let mut span = AdditiveSpan::new(r);
        for &g in self.additive_generators() {
            span.extend(r, r.mul(g, x));
        }
        let mut members = span.members().to_vec();
        members.sort_unstable();
        members
    }

    /// Nonzero idempotents `f` with `Rf` a minimal left ideal.
    pub fn minimal_left_idempotents(&self) -> &[usize] {
        self.min_left.get_or_init(|| {
            let sizes = self.left_ideal_sizes();
            let zero = self.ring.zero();
            self.nonzero_idempotents()
                .filter(|&f| {
                    let size = sizes[f];
                    self.left_ideal(f).into_iter().all(|x| x == zero || sizes[x] == size)
                })
                .collect()
        })
    }

    /// `ae = eae` for all `a`.
    pub fn is_left_semicentral(&self, e: usize) -> bool {
        let r = self.ring;
        self.additive_generators()
            .iter()
            .all(|&a| r.mul(a, e) == r.mul3(e, a, e))
    }

    /// `ea = eae` for all `a`.
    pub fn is_right_semicentral(&self, e: usize) -> bool {
        let r = self.ring;
        self.additive_generators()
            .iter()
            .all(|&a| r.mul(e, a) == r.mul3(e, a, e))
    }

    pub fn is_central(&self, e: usize) -> bool {
        let r = self.ring;
        self.additive_generators().iter().all(|&a| r.mul(e, a) == r.mul(a, e))
    }

    fn validate_idempotent(&self, e: usize) -> Result<()> {
        let r = self.ring;
        if e >= r.order() {
            return Err(Error::IndexOutOfRange {
                index: e,
                order: r.order(),
            });
        }
        if e == r.zero() {
            return Err(Error::ZeroIdempotent);
        }
        if !r.is_idempotent(e) {
            return Err(Error::NotIdempotent(r.label(e).to_string()));
        }
        Ok(())
    }

    /// Decides `property`. Relative properties need `Some(e)` with `e` a
    /// nonzero idempotent; global ones ignore `e`. Size-guard trips are
    /// returned as errors.
    pub fn check(&self, property: Property, e: Option<usize>) -> Result<PropertyVerdict> {
        let clock = Stopwatch::start();
        let r = self.ring;
        let idempotent = if property.is_relative() {
            let e = e.ok_or_else(|| Error::InvalidArgument(format!("{property} needs an idempotent")))?;
            self.validate_idempotent(e)?;
            Some(e)
        } else {
            None
        };
        let witness = match (property, idempotent) {
            (Property::RightEReversible, Some(e)) => self.e_reversible(e, Side::Right)?,
            (Property::LeftEReversible, Some(e)) => self.e_reversible(e, Side::Left)?,
            (Property::RightEReduced, Some(e)) => self.e_reduced(e, Side::Right),
            (Property::LeftEReduced, Some(e)) => self.e_reduced(e, Side::Left),
            (Property::ESymmetric, Some(e)) => self.e_symmetric(e)?,
            (Property::RightESemicommutative, Some(e)) => self.e_semicommutative(e, Side::Right)?,
            (Property::LeftESemicommutative, Some(e)) => self.e_semicommutative(e, Side::Left)?,
            (Property::Reduced, _) => self.e_reduced(r.one(), Side::Right),
            (Property::Reversible, _) => self.e_reversible(r.one(), Side::Right)?,
            (Property::Symmetric, _) => self.e_symmetric(r.one())?,
            (Property::Semicommutative, _) => {
                self.guards.check_triple("semicommutativity sweep", r.order())?;
                self.e_semicommutative(r.one(), Side::Right)?
            }
            (Property::Reflexive, _) => self.reflexive()?,
            (Property::RightIdempotentReflexive, _) => self.right_idempotent_reflexive()?,
            (Property::Abelian, _) => self.abelian()?,
            (Property::Semiprime, _) => self.semiprime()?,
            (Property::Prime, _) => self.prime()?,
            (Property::Domain, _) => self.domain()?,
            (Property::DirectlyFinite, _) => self.directly_finite()?,
            (Property::VonNeumannRegular, _) => self.von_neumann_regular()?,
            (Property::LeftMinAbel, _) => self.left_min_abel()?,
            (_, None) => unreachable!("relative properties always carry an idempotent"),
        };
        let outcome = match witness {
            None => Outcome::Holds,
            Some(indices) => Outcome::Fails {
                witness: Witness::new(r, indices),
            },
        };
        Ok(PropertyVerdict {
            property,
            ring: r.provenance().to_string(),
            idempotent: idempotent.map(|e| r.label(e).to_string()),
            outcome,
            elapsed: clock.elapsed(),
        })
    }

    /// Like [`Analysis::check`], but a size-guard trip becomes a skipped verdict.
    pub fn check_or_skip(&self, property: Property, e: Option<usize>) -> Result<PropertyVerdict> {
        match self.check(property, e) {
            Err(err) if err.is_size_guard() => Ok(PropertyVerdict {
                property,
                ring: self.ring.provenance().to_string(),
                idempotent: e
                    .filter(|_| property.is_relative())
                    .map(|e| self.ring.label(e).to_string()),
                outcome: Outcome::Skipped {
                    reason: err.to_string(),
                },
                elapsed: Default::default(),
            }),
            other => other,
        }
    }

    fn side_mul(&self, side: Side, x: usize, e: usize) -> usize {
        match side {
            Side::Right => self.ring.mul(x, e),
            Side::Left => self.ring.mul(e, x),
        }
    }

    fn e_reversible(&self, e: usize, side: Side) -> Result<Option<Vec<usize>>> {
        let r = self.ring;
        self.guards.check_pair("reversibility sweep", r.order())?;
        let clean = self
            .reversal_products()
            .iter()
            .all(|&w| self.side_mul(side, w, e) == r.zero());
        Ok(pick(clean, || {
            for (a, ann) in self.right_annihilators().iter().enumerate() {
                for &b in ann {
                    let b = b as usize;
                    if self.side_mul(side, r.mul(b, a), e) != r.zero() {
                        return Some(vec![a, b]);
                    }
                }
            }
            None
        }))
    }

    fn e_reduced(&self, e: usize, side: Side) -> Option<Vec<usize>> {
        let r = self.ring;
        self.nilpotents()
            .iter()
            .find(|&&x| self.side_mul(side, x, e) != r.zero())
            .map(|&x| vec![x])
    }

    fn e_symmetric(&self, e: usize) -> Result<Option<Vec<usize>>> {
        let r = self.ring;
        self.guards.check_triple("symmetry sweep", r.order())?;
        let clean = self.symmetric_span().iter().all(|&w| r.mul(w, e) == r.zero());
        let ann = self.right_annihilators();
        Ok(pick(clean, || {
            for a in r.elements() {
                for b in r.elements() {
                    for &c in &ann[r.mul(a, b)] {
                        let c = c as usize;
                        if r.mul(r.mul3(a, c, b), e) != r.zero() {
                            return Some(vec![a, b, c]);
                        }
                    }
                }
            }
            None
        }))
    }

    fn e_semicommutative(&self, e: usize, side: Side) -> Result<Option<Vec<usize>>> {
        let r = self.ring;
        self.guards.check_pair("semicommutativity sweep", r.order())?;
        let clean = self
            .semicommutative_span()
            .iter()
            .all(|&w| self.side_mul(side, w, e) == r.zero());
        Ok(pick(clean, || {
            for (a, ann) in self.right_annihilators().iter().enumerate() {
                for &b in ann {
                    let b = b as usize;
                    for x in r.elements() {
                        if self.side_mul(side, r.mul3(a, x, b), e) != r.zero() {
                            return Some(vec![a, b, x]);
                        }
                    }
                }
            }
            None
        }))
    }

    /// `aRb = 0`, decided on additive generators.
    fn annihilates_through(&self, a: usize, b: usize) -> bool {
        let r = self.ring;
        self.additive_generators().iter().all(|&g| r.mul3(a, g, b) == r.zero())
    }

    /// Least `x` with `axb ≠ 0`.
    fn first_through(&self, a: usize, b: usize) -> Option<usize> {
        let r = self.ring;
        r.elements().find(|&x| r.mul3(a, x, b) != r.zero())
    }

    fn reflexive(&self) -> Result<Option<Vec<usize>>> {
        let r = self.ring;
        self.guards.check_triple("reflexivity sweep", r.order())?;
        for a in r.elements() {
            for b in r.elements() {
                if self.annihilates_through(a, b) && !self.annihilates_through(b, a) {
                    let x = self.first_through(b, a).expect("bRa is nonzero");
                    return Ok(Some(vec![a, b, x]));
                }
            }
        }
        Ok(None)
    }

    fn right_idempotent_reflexive(&self) -> Result<Option<Vec<usize>>> {
        let r = self.ring;
        self.guards.check_triple("idempotent reflexivity sweep", r.order())?;
        for h in r.elements() {
            for &e in self.idempotents() {
                if self.annihilates_through(h, e) && !self.annihilates_through(e, h) {
                    let x = self.first_through(e, h).expect("eRh is nonzero");
                    return Ok(Some(vec![h, e, x]));
                }
            }
        }
        Ok(None)
    }

    fn abelian(&self) -> Result<Option<Vec<usize>>> {
        let r = self.ring;
        self.guards.check_pair("abelian sweep", r.order())?;
        for &f in self.idempotents() {
            if self.is_central(f) {
                continue;
            }
            let a = r
                .elements()
                .find(|&a| r.mul(f, a) != r.mul(a, f))
                .expect("f is not central");
            return Ok(Some(vec![f, a]));
        }
        Ok(None)
    }

    fn semiprime(&self) -> Result<Option<Vec<usize>>> {
        let r = self.ring;
        self.guards.check_pair("semiprime sweep", r.order())?;
        Ok(r.elements()
            .find(|&a| a != r.zero() && self.annihilates_through(a, a))
            .map(|a| vec![a]))
    }

    fn prime(&self) -> Result<Option<Vec<usize>>> {
        let r = self.ring;
        self.guards.check_triple("prime sweep", r.order())?;
        for a in r.elements().filter(|&a| a != r.zero()) {
            if let Some(b) = r.elements().find(|&b| b != r.zero() && self.annihilates_through(a, b)) {
                return Ok(Some(vec![a, b]));
            }
        }
        Ok(None)
    }

    fn domain(&self) -> Result<Option<Vec<usize>>> {
        let r = self.ring;
        self.guards.check_pair("domain sweep", r.order())?;
        for (a, ann) in self.right_annihilators().iter().enumerate() {
            if a == r.zero() {
                continue;
            }
            if let Some(&b) = ann.iter().find(|&&b| b as usize != r.zero()) {
                return Ok(Some(vec![a, b as usize]));
            }
        }
        Ok(None)
    }

    fn directly_finite(&self) -> Result<Option<Vec<usize>>> {
        let r = self.ring;
        self.guards.check_pair("direct finiteness sweep", r.order())?;
        for a in r.elements() {
            for b in r.elements() {
                if r.mul(a, b) == r.one() && r.mul(b, a) != r.one() {
                    return Ok(Some(vec![a, b]));
                }
            }
        }
        Ok(None)
    }

    fn von_neumann_regular(&self) -> Result<Option<Vec<usize>>> {
        let r = self.ring;
        self.guards.check_pair("regularity sweep", r.order())?;
        Ok(r.elements()
            .find(|&a| !r.elements().any(|x| r.mul3(a, x, a) == a))
            .map(|a| vec![a]))
    }

    fn left_min_abel(&self) -> Result<Option<Vec<usize>>> {
        let r = self.ring;
        self.guards.check_pair("minimal idempotent sweep", r.order())?;
        for &f in self.minimal_left_idempotents() {
            if self.is_left_semicentral(f) {
                continue;
            }
            let a = r
                .elements()
                .find(|&a| r.mul(a, f) != r.mul3(f, a, f))
                .expect("f is not left semicentral");
            return Ok(Some(vec![f, a]));
        }
        Ok(None)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Right,
    Left,
}
