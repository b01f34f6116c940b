//! Finite unital rings as dense operation tables.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size caps for exhaustive sweeps, by quantifier depth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    /// Largest order for which pair sweeps (and table builds) are allowed.
    pub max_pair_order: usize,
    /// Largest order for which triple sweeps are allowed.
    pub max_triple_order: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_pair_order: 4096,
            max_triple_order: 1024,
        }
    }
}

impl Guards {
    pub fn check_pair(&self, what: &'static str, order: usize) -> Result<()> {
        if order > self.max_pair_order {
            return Err(Error::TooLarge {
                what,
                order,
                cap: self.max_pair_order,
            });
        }
        Ok(())
    }

    pub fn check_triple(&self, what: &'static str, order: usize) -> Result<()> {
        if order > self.max_triple_order {
            return Err(Error::TooLarge {
                what,
                order,
                cap: self.max_triple_order,
            });
        }
        Ok(())
    }
}

/// A finite associative ring with identity, materialized as index tables.
///
/// Elements are the indices `0..order`. All tables are row-major
/// `order × order` arrays, so `mul(a, b)` is a single lookup.
#[derive(Clone)]
pub struct RingTable {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    provenance: String,
}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingTable")
            .field("provenance", &self.provenance)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// Builds a ring from explicit tables.
///
/// The additive structure is validated (identity, inverses, associativity of
/// addition); multiplicative axioms are left to [`verify_axioms`].
pub fn build_ring(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    zero: usize,
    one: usize,
    labels: Vec<String>,
) -> Result<RingTable> {
    let order = add.len();
    if mul.len() != order {
        return Err(Error::DimensionMismatch(format!(
            "add has {} rows, mul has {}",
            order,
            mul.len()
        )));
    }
    for (name, table) in [("add", add), ("mul", mul)] {
        if let Some(row) = table.iter().position(|r| r.len() != order) {
            return Err(Error::DimensionMismatch(format!(
                "{name} row {row} has length {}, expected {order}",
                table[row].len()
            )));
        }
    }
    let flat = |t: &[Vec<usize>]| -> Result<Vec<u32>> {
        t.iter()
            .flatten()
            .map(|&x| {
                if x < order {
                    Ok(x as u32)
                } else {
                    Err(Error::IndexOutOfRange { index: x, order })
                }
            })
            .collect()
    };
    let add = flat(add)?;
    let mul = flat(mul)?;
    let provenance = format!("table({order})");
    let ring = RingTable::assemble(order, add, mul, zero, one, labels, provenance)?;
    check_additive_associativity(&ring)?;
    Ok(ring)
}

impl RingTable {
    /// Reassembles a ring from flat row-major tables, as returned by
    /// [`RingTable::add_table`] and [`RingTable::mul_table`]. Only the
    /// additive identity and inverses are validated.
    pub fn from_parts(
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
        provenance: impl Into<String>,
    ) -> Result<RingTable> {
        RingTable::assemble(labels.len(), add, mul, zero, one, labels, provenance.into())
    }

    /// Validates indices, labels, the additive identity and inverses, and
    /// derives the negation table.
    pub(crate) fn assemble(
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
        provenance: String,
    ) -> Result<RingTable> {
        if order < 2 {
            return Err(Error::TrivialRing);
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(Error::DimensionMismatch(format!(
                "tables must have {} entries",
                order * order
            )));
        }
        for index in [zero, one] {
            if index >= order {
                return Err(Error::IndexOutOfRange { index, order });
            }
        }
        if zero == one {
            return Err(Error::TrivialRing);
        }
        if let Some(&bad) = add.iter().chain(&mul).find(|&&x| x as usize >= order) {
            return Err(Error::IndexOutOfRange {
                index: bad as usize,
                order,
            });
        }
        if labels.len() != order {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} elements",
                labels.len(),
                order
            )));
        }
        let mut label_index = HashMap::with_capacity(order);
        for (i, l) in labels.iter().enumerate() {
            if label_index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate label `{l}`")));
            }
        }
        for x in 0..order {
            if add[zero * order + x] as usize != x || add[x * order + zero] as usize != x {
                return Err(Error::NotAGroup(format!(
                    "{} is not an additive identity (fails at {})",
                    labels[zero], labels[x]
                )));
            }
        }
        let mut neg = vec![u32::MAX; order];
        for x in 0..order {
            let row = &add[x * order..(x + 1) * order];
            match row.iter().position(|&s| s as usize == zero) {
                Some(y) if add[y * order + x] as usize == zero => neg[x] = y as u32,
                _ => return Err(Error::NotAGroup(format!("{} has no additive inverse", labels[x]))),
            }
        }
        Ok(RingTable {
            order,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
            label_index,
            provenance,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Product of three elements, `(ab)c`.
    #[inline]
    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    pub fn is_zero(&self, a: usize) -> bool {
        a == self.zero
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// `a^k` for `k ≥ 1`, left-associated.
    pub fn power(&self, a: usize, k: usize) -> usize {
        assert!(k >= 1, "power requires k ≥ 1");
        let mut acc = a;
        for _ in 1..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// The integer multiple `k · 1`.
    pub fn multiple_of_one(&self, k: i64) -> usize {
        let step = if k < 0 { self.neg(self.one) } else { self.one };
        let mut acc = self.zero;
        for _ in 0..k.unsigned_abs() {
            acc = self.add(acc, step);
        }
        acc
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    /// Canonical construction expression this ring was built from.
    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, c: usize) -> bool {
        (0..self.order).all(|x| self.mul(c, x) == self.mul(x, c))
    }

    /// Two-sided inverse of `a`, if any.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.order).find(|&x| self.mul(a, x) == self.one && self.mul(x, a) == self.one)
    }

    pub fn element(&self, index: usize) -> Result<Element<'_>> {
        if index >= self.order {
            return Err(Error::IndexOutOfRange {
                index,
                order: self.order,
            });
        }
        Ok(Element { ring: self, index })
    }

    /// Renders a list of element indices as labels.
    pub fn render(&self, elems: &[usize]) -> Vec<String> {
        elems.iter().map(|&e| self.labels[e].clone()).collect()
    }
}

/// An element bound to the ring it lives in.
#[derive(Clone, Copy)]
pub struct Element<'r> {
    ring: &'r RingTable,
    index: usize,
}

impl<'r> Element<'r> {
    pub fn ring(&self) -> &'r RingTable {
        self.ring
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn label(&self) -> &'r str {
        self.ring.label(self.index)
    }
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.ring, other.ring) && self.index == other.index
    }
}

impl Eq for Element<'_> {}

impl fmt::Debug for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
}

/// Checked table arithmetic over ring-bound elements.
pub fn arith<'r>(op: ArithOp, args: &[Element<'r>]) -> Result<Element<'r>> {
    let arity = match op {
        ArithOp::Neg => 1,
        ArithOp::Add | ArithOp::Mul => 2,
    };
    if args.len() != arity {
        return Err(Error::InvalidArgument(format!(
            "{op:?} takes {arity} arguments, got {}",
            args.len()
        )));
    }
    let ring = args[0].ring;
    if args.iter().any(|e| !std::ptr::eq(e.ring, ring)) {
        return Err(Error::RingMismatch);
    }
    let index = match op {
        ArithOp::Add => ring.add(args[0].index, args[1].index),
        ArithOp::Mul => ring.mul(args[0].index, args[1].index),
        ArithOp::Neg => ring.neg(args[0].index),
    };
    Ok(Element { ring, index })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub axiom: String,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<AxiomViolation>,
}

/// Exhaustively checks the ring axioms not already enforced at build time.
///
/// Each axiom reports its lexicographically least violating tuple.
pub fn verify_axioms(ring: &RingTable, guards: &Guards) -> Result<AxiomReport> {
    let n = ring.order();
    guards.check_triple("exhaustive axiom check", n)?;
    let mut violations = Vec::new();

    'comm: for a in 0..n {
        for b in a + 1..n {
            if ring.add(a, b) != ring.add(b, a) {
                violations.push(AxiomViolation {
                    axiom: "additive commutativity".into(),
                    witness: vec![a, b],
                });
                break 'comm;
            }
        }
    }

    let mut assoc = None;
    let mut left_dist = None;
    let mut right_dist = None;
    'triples: for a in 0..n {
        for b in 0..n {
            let ab = ring.mul(a, b);
            let a_plus_b = ring.add(a, b);
            for c in 0..n {
                if assoc.is_none() && ring.mul(ab, c) != ring.mul(a, ring.mul(b, c)) {
                    assoc = Some(vec![a, b, c]);
                }
                if left_dist.is_none() && ring.mul(a, ring.add(b, c)) != ring.add(ab, ring.mul(a, c)) {
                    left_dist = Some(vec![a, b, c]);
                }
                if right_dist.is_none() && ring.mul(a_plus_b, c) != ring.add(ring.mul(a, c), ring.mul(b, c)) {
                    right_dist = Some(vec![a, b, c]);
                }
                if assoc.is_some() && left_dist.is_some() && right_dist.is_some() {
                    break 'triples;
                }
            }
        }
    }
    for (axiom, found) in [
        ("multiplicative associativity", assoc),
        ("left distributivity", left_dist),
        ("right distributivity", right_dist),
    ] {
        if let Some(witness) = found {
            violations.push(AxiomViolation {
                axiom: axiom.into(),
                witness,
            });
        }
    }

    if let Some(x) = (0..n).find(|&x| ring.mul(ring.one(), x) != x || ring.mul(x, ring.one()) != x) {
        violations.push(AxiomViolation {
            axiom: "multiplicative identity".into(),
            witness: vec![x],
        });
    }

    Ok(AxiomReport {
        passed: violations.is_empty(),
        violations,
    })
}

/// Light's associativity test restricted to a generating set of `(R, +)`.
fn check_additive_associativity(ring: &RingTable) -> Result<()> {
    let n = ring.order();
    let gens = magma_generators(n, |a, b| ring.add(a, b));
    for x in 0..n {
        for &g in &gens {
            let xg = ring.add(x, g);
            for y in 0..n {
                if ring.add(xg, y) != ring.add(x, ring.add(g, y)) {
                    return Err(Error::NotAGroup(format!(
                        "addition is not associative at ({}, {}, {})",
                        ring.label(x),
                        ring.label(g),
                        ring.label(y)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Greedy generating set of a finite magma given by `op`.
pub(crate) fn magma_generators(n: usize, op: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut inside = vec![false; n];
    let mut members = Vec::new();
    let mut gens = Vec::new();
    for x in 0..n {
        if inside[x] {
            continue;
        }
        gens.push(x);
        let mut queue = vec![x];
        inside[x] = true;
        while let Some(y) = queue.pop() {
            members.push(y);
            // New element combined with everything already present, both sides.
            for i in 0..members.len() {
                let m = members[i];
                for z in [op(y, m), op(m, y)] {
                    if !inside[z] {
                        inside[z] = true;
                        queue.push(z);
                    }
                }
            }
        }
    }
    gens
}
