//! Theorems about idempotent-relative reversibility, encoded as laws that
//! are checked exhaustively on every instance of a corpus.
//!
//! A law never reports `holds` outside its applicability filter. A
//! `violated` instance carries a witness and a command that replays it;
//! since every law here is a theorem, a violation points at a bug.

mod corpus;
mod extensions;
mod registry;
mod structure;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::clock::Stopwatch;
use crate::error::Result;
use crate::predicates::{Analysis, Property, PropertyVerdict};
use crate::ring::{Guards, RingTable};

pub use corpus::{Corpus, Member, DEFAULT_MANIFEST};
pub use registry::{golden, h_r16, registry_checks, Check, Value, GOLDEN, HR16, R16};

/// Verdict of one law on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Violated {
        witness: Vec<String>,
        detail: String,
        replay: String,
    },
    NotApplicable {
        reason: String,
    },
    Skipped {
        reason: String,
    },
}

impl Status {
    pub fn symbol(&self) -> &'static str {
        match self {
            Status::Holds => "✓",
            Status::Violated { .. } => "✗",
            Status::NotApplicable { .. } => "·",
            Status::Skipped { .. } => "–",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub ring: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idempotent: Option<String>,
    #[serde(flatten)]
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Instance {
    fn new(ring: &RingTable, e: Option<usize>, status: Status) -> Self {
        Instance {
            ring: ring.provenance().to_string(),
            idempotent: e.map(|e| ring.label(e).to_string()),
            status,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub holds: usize,
    pub violated: usize,
    pub not_applicable: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub statement: String,
    pub totals: Totals,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub instances: Vec<Instance>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl LawReport {
    fn new(law: &Law) -> Self {
        LawReport {
            law: law.id.to_string(),
            statement: law.statement.to_string(),
            totals: Totals::default(),
            notes: Vec::new(),
            instances: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn push(&mut self, instance: Instance) {
        match instance.status {
            Status::Holds => self.totals.holds += 1,
            Status::Violated { .. } => self.totals.violated += 1,
            Status::NotApplicable { .. } => self.totals.not_applicable += 1,
            Status::Skipped { .. } => self.totals.skipped += 1,
        }
        self.instances.push(instance);
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn violations(&self) -> impl Iterator<Item = &Instance> {
        self.instances
            .iter()
            .filter(|i| matches!(i.status, Status::Violated { .. }))
    }

    pub fn is_clean(&self) -> bool {
        self.totals.violated == 0
    }
}

/// Everything a law may look at: the corpus plus one shared [`Analysis`]
/// per built member.
pub struct LawContext<'c> {
    pub corpus: &'c Corpus,
    pub guards: Guards,
    analyses: Vec<Option<Analysis<'c>>>,
}

impl<'c> LawContext<'c> {
    pub fn new(corpus: &'c Corpus) -> Self {
        let guards = corpus.guards;
        let analyses = corpus
            .members
            .iter()
            .map(|m| m.ring.as_ref().map(|r| Analysis::new(r, guards)))
            .collect();
        LawContext {
            corpus,
            guards,
            analyses,
        }
    }

    /// Built members with their analyses, in manifest order.
    pub fn members(&self) -> impl Iterator<Item = (&'c Member, &Analysis<'c>)> + '_ {
        self.corpus
            .members
            .iter()
            .zip(&self.analyses)
            .filter_map(|(m, a)| a.as_ref().map(|a| (m, a)))
    }
}

type Runner = fn(&Law, &LawContext<'_>) -> Result<LawReport>;

/// A named theorem together with its checker.
pub struct Law {
    pub id: &'static str,
    pub statement: &'static str,
    /// Which instances the law quantifies over.
    pub scope: &'static str,
    run: Runner,
}

impl Law {
    pub fn run(&self, ctx: &LawContext<'_>) -> Result<LawReport> {
        let clock = Stopwatch::start();
        let mut report = (self.run)(self, ctx)?;
        report.elapsed = clock.elapsed();
        Ok(report)
    }
}

static LAWS: &[Law] = &[
    Law {
        id: "ere",
        statement: "R is right e-reversible iff e is left semicentral and eRe is reversible; \
                    left e-reversible iff e is right semicentral and eRe is reversible",
        scope: "every ring and nonzero idempotent",
        run: structure::ere,
    },
    Law {
        id: "chain",
        statement: "right e-reduced ⟹ e-symmetric ⟹ right e-reversible ⟹ right e-semicommutative",
        scope: "every ring and nonzero idempotent",
        run: structure::chain,
    },
    Law {
        id: "one-reversible",
        statement: "right 1-reversible ⟺ left 1-reversible ⟺ reversible",
        scope: "every ring",
        run: structure::one_reversible,
    },
    Law {
        id: "eae",
        statement: "if R is right e-reversible, then ea = 0 or ae = 0 implies aRe = 0",
        scope: "right e-reversible instances",
        run: structure::eae,
    },
    Law {
        id: "hab1",
        statement: "if R is right e-reversible, then r(eR) ⊆ l(Re)",
        scope: "right e-reversible instances",
        run: structure::hab1,
    },
    Law {
        id: "corner-abelian",
        statement: "if R is right e-reversible, then eRe is abelian, afe = fae for all a and all \
                    idempotents f, and every idempotent of eRe is left semicentral in R",
        scope: "right e-reversible instances",
        run: structure::corner_abelian,
    },
    Law {
        id: "bul",
        statement: "right e-reversible ⟺ (ab idempotent ⟹ bae idempotent, and e left semicentral) \
                    ⟺ (ab idempotent ⟹ abe = bae)",
        scope: "every ring and nonzero idempotent",
        run: structure::bul,
    },
    Law {
        id: "semiprime-collapse",
        statement: "on a semiprime ring, right e-reversible, right e-reduced, e-symmetric and \
                    right e-semicommutative coincide",
        scope: "semiprime rings",
        run: structure::semiprime_collapse,
    },
    Law {
        id: "e-and-complement",
        statement: "if R is right e- and right (1-e)-reversible, then semiprime ⟺ reduced, and both imply reversible",
        scope: "rings with such an e ∉ {0, 1}",
        run: structure::e_and_complement,
    },
    Law {
        id: "prime-domain",
        statement: "R is right e-reversible for some e ≠ 0 and prime iff R is a domain; such rings \
                    are directly finite",
        scope: "every ring",
        run: structure::prime_domain,
    },
    Law {
        id: "min-abel",
        statement: "left min-abel ⟺ right e-reversible for all e ∈ ME_l ⟺ e-symmetric for all e ∈ ME_l",
        scope: "every ring",
        run: structure::min_abel,
    },
    Law {
        id: "products",
        statement: "R₁ × R₂ is right (e₁, e₂)-reversible iff each Rᵢ is right eᵢ-reversible",
        scope: "pairs of corpus rings of order ≤ 8 and every listed product",
        run: extensions::products,
    },
    Law {
        id: "quotient-lift",
        statement: "if I is reduced and R/I is right ē-reversible, then R is right e-reversible \
                    and e is left semicentral",
        scope: "principal ideals of corpus rings of order ≤ 64",
        run: extensions::quotient_lift,
    },
    Law {
        id: "annihilator-quotient",
        statement: "if R is e-symmetric and I = r(J) is an ideal, then R/I is right ē-reversible",
        scope: "singletons J in corpus rings of order ≤ 64",
        run: extensions::annihilator_quotient,
    },
    Law {
        id: "dorroh",
        statement: "(a, b) is idempotent in D(R, S) iff a + b ∈ Id(R) and b ∈ Id(S); R is right \
                    e-reversible iff D(R, S) is right (e, 0)-reversible",
        scope: "Dorroh extensions in the corpus",
        run: extensions::dorroh_law,
    },
    Law {
        id: "trs",
        statement: "T[R, S] is right (e₁, …, eₙ, e₀)-reversible iff R is right eᵢ-reversible for i ≥ 1 \
                    and S is right e₀-reversible; when eₙ = e₀, iff R is right eᵢ-reversible for every i",
        scope: "T[R, S] rings in the corpus",
        run: extensions::trs_law,
    },
    Law {
        id: "h-ring",
        statement: "R right e-reversible ⟹ H_(s,t)(R) right E-reversible for each listed E; \
                    the converse holds for E = eI₃",
        scope: "H_(s,t) rings in the corpus",
        run: extensions::h_ring_law,
    },
    Law {
        id: "twisted-u2",
        statement: "U₂(R)_σ right eI₂-reversible ⟹ R right e-reversible, with the converse when σ(e) = 0",
        scope: "skew triangular rings in the corpus",
        run: extensions::twisted_law,
    },
    Law {
        id: "replicate",
        statement: "finite ports of the worked examples reproduce their recorded verdicts",
        scope: "fixed example registry",
        run: registry::replicate,
    },
];

pub fn all_laws() -> &'static [Law] {
    LAWS
}

pub fn find_law(id: &str) -> Option<&'static Law> {
    LAWS.iter().find(|l| l.id == id)
}

/// Runs every law, in registry order.
pub fn run_all(ctx: &LawContext<'_>) -> Result<Vec<LawReport>> {
    LAWS.iter().map(|l| l.run(ctx)).collect()
}

// Helpers shared by the law modules.

/// Known truth values of `verdicts`, or the first skip reason.
fn known(verdicts: &[&PropertyVerdict]) -> std::result::Result<Vec<bool>, String> {
    verdicts
        .iter()
        .map(|v| match v.holds() {
            Some(b) => Ok(b),
            None => Err(match &v.outcome {
                crate::predicates::Outcome::Skipped { reason } => format!("{}: {reason}", v.property),
                _ => unreachable!(),
            }),
        })
        .collect()
}

fn replay_command(ring: &RingTable, property: Property, e: Option<usize>) -> String {
    match e {
        Some(e) => format!(
            "idemring check '{}' {} --e '{}'",
            ring.provenance(),
            property,
            ring.label(e)
        ),
        None => format!("idemring check '{}' {}", ring.provenance(), property),
    }
}

fn violated(ring: &RingTable, witness: &[usize], detail: impl Into<String>, replay: String) -> Status {
    Status::Violated {
        witness: ring.render(witness),
        detail: detail.into(),
        replay,
    }
}

/// A violation whose witness comes from a failing verdict.
fn violated_by(ring: &RingTable, verdict: &PropertyVerdict, e: Option<usize>, detail: impl Into<String>) -> Status {
    Status::Violated {
        witness: verdict.witness().map(|w| w.labels.clone()).unwrap_or_default(),
        detail: detail.into(),
        replay: replay_command(ring, verdict.property, e),
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

#[cfg(test)]
mod tests;
