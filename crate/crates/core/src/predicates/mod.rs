//! Exhaustive decision procedures for ring and idempotent-relative properties.

mod analysis;
mod replay;
mod verdict;

use serde::{Deserialize, Serialize};

pub use analysis::Analysis;
pub use replay::replay_violates;
pub use verdict::{Outcome, Property, PropertyVerdict, Witness};

use crate::error::{Error, Result};
use crate::ring::{Guards, RingTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentInfo {
    pub index: usize,
    pub label: String,
    pub left_semicentral: bool,
    pub right_semicentral: bool,
    pub central: bool,
    pub left_minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentSet {
    pub ring: String,
    pub members: Vec<IdempotentInfo>,
}

impl IdempotentSet {
    pub fn indices(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.index).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl Analysis<'_> {
    pub fn idempotent_set(&self) -> IdempotentSet {
        let r = self.ring();
        let minimal = self.minimal_left_idempotents();
        let members = self
            .idempotents()
            .iter()
            .map(|&e| IdempotentInfo {
                index: e,
                label: r.label(e).to_string(),
                left_semicentral: self.is_left_semicentral(e),
                right_semicentral: self.is_right_semicentral(e),
                central: self.is_central(e),
                left_minimal: minimal.contains(&e),
            })
            .collect();
        IdempotentSet {
            ring: r.provenance().to_string(),
            members,
        }
    }

    /// One verdict per global property; guard trips become skipped verdicts.
    pub fn global_properties(&self) -> Result<Vec<PropertyVerdict>> {
        Property::GLOBAL
            .into_iter()
            .map(|p| self.check_or_skip(p, None))
            .collect()
    }

    /// Every relative property for every nonzero idempotent.
    pub fn survey(&self) -> Result<Vec<SurveyRow>> {
        let set = self.idempotent_set();
        set.members
            .into_iter()
            .filter(|m| m.index != self.ring().zero())
            .map(|info| {
                let cells = Property::RELATIVE
                    .into_iter()
                    .map(|p| self.check_or_skip(p, Some(info.index)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(SurveyRow {
                    idempotent: info,
                    cells,
                })
            })
            .collect()
    }
}

/// One idempotent's row in a survey.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub idempotent: IdempotentInfo,
    pub cells: Vec<PropertyVerdict>,
}

impl SurveyRow {
    pub fn verdict(&self, property: Property) -> Option<&PropertyVerdict> {
        self.cells.iter().find(|v| v.property == property)
    }
}

pub fn idempotents(ring: &RingTable) -> IdempotentSet {
    Analysis::new(ring, Guards::default()).idempotent_set()
}

pub fn nilpotents(ring: &RingTable) -> Vec<usize> {
    Analysis::new(ring, Guards::default()).nilpotents().to_vec()
}

pub fn minimal_left_idempotents(ring: &RingTable) -> Vec<usize> {
    Analysis::new(ring, Guards::default())
        .minimal_left_idempotents()
        .to_vec()
}

fn annihilator(ring: &RingTable, set: &[usize], right: bool) -> Result<Vec<usize>> {
    if set.is_empty() {
        return Err(Error::InvalidArgument("annihilated set must be nonempty".into()));
    }
    if let Some(&bad) = set.iter().find(|&&a| a >= ring.order()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            order: ring.order(),
        });
    }
    Ok(ring
        .elements()
        .filter(|&x| {
            set.iter().all(|&a| {
                let p = if right { ring.mul(a, x) } else { ring.mul(x, a) };
                p == ring.zero()
            })
        })
        .collect())
}

/// `r(A) = {x : ax = 0 for all a ∈ A}`, ascending.
pub fn right_annihilator(ring: &RingTable, set: &[usize]) -> Result<Vec<usize>> {
    annihilator(ring, set, true)
}

/// `l(A) = {x : xa = 0 for all a ∈ A}`, ascending.
pub fn left_annihilator(ring: &RingTable, set: &[usize]) -> Result<Vec<usize>> {
    annihilator(ring, set, false)
}

/// Decides one property with default guards.
pub fn check(ring: &RingTable, property: Property, e: Option<usize>) -> Result<PropertyVerdict> {
    Analysis::new(ring, Guards::default()).check(property, e)
}

pub fn is_right_e_reversible(ring: &RingTable, e: usize) -> Result<PropertyVerdict> {
    check(ring, Property::RightEReversible, Some(e))
}

pub fn is_left_e_reversible(ring: &RingTable, e: usize) -> Result<PropertyVerdict> {
    check(ring, Property::LeftEReversible, Some(e))
}

pub fn is_right_e_reduced(ring: &RingTable, e: usize) -> Result<PropertyVerdict> {
    check(ring, Property::RightEReduced, Some(e))
}

pub fn is_left_e_reduced(ring: &RingTable, e: usize) -> Result<PropertyVerdict> {
    check(ring, Property::LeftEReduced, Some(e))
}

pub fn is_e_symmetric(ring: &RingTable, e: usize) -> Result<PropertyVerdict> {
    check(ring, Property::ESymmetric, Some(e))
}

pub fn is_right_e_semicommutative(ring: &RingTable, e: usize) -> Result<PropertyVerdict> {
    check(ring, Property::RightESemicommutative, Some(e))
}

pub fn is_left_e_semicommutative(ring: &RingTable, e: usize) -> Result<PropertyVerdict> {
    check(ring, Property::LeftESemicommutative, Some(e))
}

pub fn is_left_min_abel(ring: &RingTable) -> Result<PropertyVerdict> {
    check(ring, Property::LeftMinAbel, None)
}

pub fn global_properties(ring: &RingTable) -> Result<Vec<PropertyVerdict>> {
    Analysis::new(ring, Guards::default()).global_properties()
}

pub fn survey(ring: &RingTable) -> Result<Vec<SurveyRow>> {
    Analysis::new(ring, Guards::default()).survey()
}

#[cfg(test)]
mod tests;
