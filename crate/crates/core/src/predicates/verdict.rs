use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ring::RingTable;

/// Every property the engine can decide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    RightEReversible,
    LeftEReversible,
    RightEReduced,
    LeftEReduced,
    ESymmetric,
    RightESemicommutative,
    LeftESemicommutative,
    Reduced,
    Reversible,
    Symmetric,
    Semicommutative,
    Reflexive,
    RightIdempotentReflexive,
    Abelian,
    Semiprime,
    Prime,
    Domain,
    DirectlyFinite,
    VonNeumannRegular,
    LeftMinAbel,
}

impl Property {
    /// Properties relative to a nonzero idempotent, in survey column order.
    pub const RELATIVE: [Property; 7] = [
        Property::RightEReversible,
        Property::LeftEReversible,
        Property::RightEReduced,
        Property::LeftEReduced,
        Property::ESymmetric,
        Property::RightESemicommutative,
        Property::LeftESemicommutative,
    ];

    /// Whole-ring properties, in report order.
    pub const GLOBAL: [Property; 13] = [
        Property::Reduced,
        Property::Reversible,
        Property::Symmetric,
        Property::Semicommutative,
        Property::Reflexive,
        Property::RightIdempotentReflexive,
        Property::Abelian,
        Property::Semiprime,
        Property::Prime,
        Property::Domain,
        Property::DirectlyFinite,
        Property::VonNeumannRegular,
        Property::LeftMinAbel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::RightEReversible => "right-e-reversible",
            Property::LeftEReversible => "left-e-reversible",
            Property::RightEReduced => "right-e-reduced",
            Property::LeftEReduced => "left-e-reduced",
            Property::ESymmetric => "e-symmetric",
            Property::RightESemicommutative => "right-e-semicommutative",
            Property::LeftESemicommutative => "left-e-semicommutative",
            Property::Reduced => "reduced",
            Property::Reversible => "reversible",
            Property::Symmetric => "symmetric",
            Property::Semicommutative => "semicommutative",
            Property::Reflexive => "reflexive",
            Property::RightIdempotentReflexive => "right-idempotent-reflexive",
            Property::Abelian => "abelian",
            Property::Semiprime => "semiprime",
            Property::Prime => "prime",
            Property::Domain => "domain",
            Property::DirectlyFinite => "directly-finite",
            Property::VonNeumannRegular => "von-neumann-regular",
            Property::LeftMinAbel => "left-min-abel",
        }
    }

    pub fn is_relative(self) -> bool {
        Property::RELATIVE.contains(&self)
    }

    /// Short column header for survey tables.
    pub fn short(self) -> &'static str {
        match self {
            Property::RightEReversible => "rRev",
            Property::LeftEReversible => "lRev",
            Property::RightEReduced => "rRed",
            Property::LeftEReduced => "lRed",
            Property::ESymmetric => "Sym",
            Property::RightESemicommutative => "rSC",
            Property::LeftESemicommutative => "lSC",
            other => other.name(),
        }
    }

    pub fn all() -> impl Iterator<Item = Property> {
        Property::RELATIVE.into_iter().chain(Property::GLOBAL)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Property::all()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

/// A violating tuple, as indices and as labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
}

impl Witness {
    pub fn new(ring: &RingTable, indices: Vec<usize>) -> Self {
        let labels = ring.render(&indices);
        Witness { indices, labels }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.labels.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    Fails { witness: Witness },
    Skipped { reason: String },
}

impl Outcome {
    pub fn holds(&self) -> Option<bool> {
        match self {
            Outcome::Holds => Some(true),
            Outcome::Fails { .. } => Some(false),
            Outcome::Skipped { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Outcome::Fails { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Outcome::Holds => "✓",
            Outcome::Fails { .. } => "✗",
            Outcome::Skipped { .. } => "–",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyVerdict {
    pub property: Property,
    pub ring: String,
    pub idempotent: Option<String>,
    #[serde(flatten)]
    pub outcome: Outcome,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PropertyVerdict {
    pub fn holds(&self) -> Option<bool> {
        self.outcome.holds()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.outcome.witness()
    }
}
