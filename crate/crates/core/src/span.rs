//! Additive subgroups of a ring, grown one generator at a time.

use crate::ring::RingTable;

/// An additive subgroup together with a generating set.
///
/// `extend` keeps `gens` minimal in the greedy sense: a candidate is only
/// recorded when it is not already in the span.
pub(crate) struct AdditiveSpan {
    inside: Vec<bool>,
    members: Vec<usize>,
    gens: Vec<usize>,
}

impl AdditiveSpan {
    pub fn new(ring: &RingTable) -> Self {
        let mut inside = vec![false; ring.order()];
        inside[ring.zero()] = true;
        AdditiveSpan {
            inside,
            members: vec![ring.zero()],
            gens: Vec::new(),
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.inside[x]
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Adds `g` to the span; returns whether the span grew.
    pub fn extend(&mut self, ring: &RingTable, g: usize) -> bool {
        if self.inside[g] {
            return false;
        }
        self.gens.push(g);
        let base = self.members.len();
        for i in 0..base {
            let mut y = ring.add(self.members[i], g);
            while !self.inside[y] {
                self.inside[y] = true;
                self.members.push(y);
                y = ring.add(y, g);
            }
        }
        true
    }

    /// Clears back to `{0}` without reallocating.
    pub fn reset(&mut self, ring: &RingTable) {
        for &m in &self.members {
            self.inside[m] = false;
        }
        self.members.clear();
        self.gens.clear();
        self.inside[ring.zero()] = true;
        self.members.push(ring.zero());
    }
}

/// Greedy generating set of the additive group `(R, +)`.
pub(crate) fn additive_generators(ring: &RingTable) -> Vec<usize> {
    generators_of(ring, ring.elements())
}

/// Greedy generating set of the additive subgroup spanned by `elems`.
pub(crate) fn generators_of(ring: &RingTable, elems: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut span = AdditiveSpan::new(ring);
    for x in elems {
        span.extend(ring, x);
    }
    span.gens
}

/// Sorted membership list of the additive subgroup spanned by `seeds`.
pub(crate) fn additive_closure(ring: &RingTable, seeds: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut span = AdditiveSpan::new(ring);
    for s in seeds {
        span.extend(ring, s);
    }
    let mut members = span.members;
    members.sort_unstable();
    members
}
