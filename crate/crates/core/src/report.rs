//! One report per command, rendered as aligned tables or as JSON.
//!
//! The JSON form is the stable interface: `schema`, `command`, `ring`,
//! `results` and, when requested, `timings`, in that order.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::laws::{Corpus, LawReport};
use crate::predicates::{Analysis, IdempotentInfo, Outcome, Property, PropertyVerdict, SurveyRow};
use crate::ring::{verify_axioms, Guards, RingTable};

pub const SCHEMA: &str = "idemring.report/1";

/// Labels listed in human output before eliding the rest.
const LIST_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: Vec<String>,
    pub ring: String,
    pub results: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub label: String,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Entry {
    Verdict(PropertyVerdict),
    Description(Description),
    Survey(Survey),
    Corpus(CorpusSummary),
    Law(LawReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Axioms {
    Verified,
    Failed { violations: Vec<String> },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Description {
    pub order: usize,
    pub commutative: bool,
    pub axioms: Axioms,
    pub idempotents: Vec<IdempotentInfo>,
    pub nilpotents: Vec<String>,
    pub center: Vec<String>,
    pub properties: Vec<PropertyVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survey {
    pub columns: Vec<Property>,
    pub rows: Vec<SurveyRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusMember {
    pub line: usize,
    pub expr: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub name: String,
    pub members: Vec<CorpusMember>,
}

impl Report {
    pub fn new(command: Vec<String>, ring: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            command,
            ring: ring.into(),
            results: Vec::new(),
            timings: None,
        }
    }

    pub fn time(&mut self, label: impl Into<String>, elapsed: std::time::Duration) {
        self.timings.get_or_insert_with(Vec::new).push(Timing {
            label: label.into(),
            millis: (elapsed.as_secs_f64() * 1e6).round() / 1e3,
        });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> std::result::Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Violated instances summed over all law results.
    pub fn violations(&self) -> usize {
        self.results
            .iter()
            .map(|e| match e {
                Entry::Law(l) => l.totals.violated,
                _ => 0,
            })
            .sum()
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for entry in &self.results {
            if !out.is_empty() {
                out.push('\n');
            }
            match entry {
                Entry::Verdict(v) => human_verdict(&mut out, v),
                Entry::Description(d) => human_description(&mut out, &self.ring, d),
                Entry::Survey(s) => human_survey(&mut out, &self.ring, s),
                Entry::Corpus(c) => human_corpus(&mut out, c),
                Entry::Law(l) => human_law(&mut out, l),
            }
        }
        let laws: Vec<&LawReport> = self
            .results
            .iter()
            .filter_map(|e| match e {
                Entry::Law(l) => Some(l),
                _ => None,
            })
            .collect();
        if !laws.is_empty() {
            let instances: usize = laws.iter().map(|l| l.instances.len()).sum();
            let plural = |n: usize, word: &str| format!("{n} {word}{}", if n == 1 { "" } else { "s" });
            out.push_str(&format!(
                "\n{}, {}, {}\n",
                plural(laws.len(), "law"),
                plural(instances, "instance"),
                plural(self.violations(), "violation")
            ));
        }
        if let Some(timings) = &self.timings {
            out.push_str("\ntimings\n");
            let rows = timings
                .iter()
                .map(|t| vec![t.label.clone(), format!("{:.3} ms", t.millis)])
                .collect();
            out.push_str(&table(None, rows));
        }
        out
    }
}

/// Order, idempotents, nilpotents, center, axioms and global properties.
pub fn describe(ring: &RingTable, guards: Guards) -> Result<Description> {
    let a = Analysis::new(ring, guards);
    let axioms = match verify_axioms(ring, &guards) {
        Ok(rep) if rep.passed => Axioms::Verified,
        Ok(rep) => Axioms::Failed {
            violations: rep
                .violations
                .iter()
                .map(|v| format!("{} at ({})", v.axiom, ring.render(&v.witness).join(", ")))
                .collect(),
        },
        Err(e) if e.is_size_guard() => Axioms::Skipped { reason: e.to_string() },
        Err(e) => return Err(e),
    };
    Ok(Description {
        order: ring.order(),
        commutative: ring.is_commutative(),
        axioms,
        idempotents: a.idempotent_set().members,
        nilpotents: ring.render(a.nilpotents()),
        center: ring.render(&ring.elements().filter(|&c| ring.is_central(c)).collect::<Vec<_>>()),
        properties: a.global_properties()?,
    })
}

pub fn survey(ring: &RingTable, guards: Guards) -> Result<Survey> {
    Ok(Survey {
        columns: Property::RELATIVE.to_vec(),
        rows: Analysis::new(ring, guards).survey()?,
    })
}

pub fn corpus_summary(corpus: &Corpus) -> CorpusSummary {
    CorpusSummary {
        name: corpus.name.clone(),
        members: corpus
            .members
            .iter()
            .map(|m| CorpusMember {
                line: m.line,
                expr: m.expr.to_string(),
                order: m.order,
                skipped: m.skipped.clone(),
            })
            .collect(),
    }
}

/// Left-aligned columns separated by two spaces, widths in characters.
fn table(header: Option<&[&str]>, rows: Vec<Vec<String>>) -> String {
    let mut all: Vec<Vec<String>> = Vec::new();
    if let Some(h) = header {
        all.push(h.iter().map(|s| s.to_string()).collect());
    }
    all.extend(rows);
    let cols = all.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            all.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in &all {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            line.push_str(cell);
            if c + 1 < row.len() {
                line.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn list(labels: &[String]) -> String {
    let shown: Vec<&str> = labels.iter().take(LIST_LIMIT).map(String::as_str).collect();
    let mut s = format!("{}: {{{}", labels.len(), shown.join(", "));
    if labels.len() > LIST_LIMIT {
        s.push_str(", …");
    }
    s.push('}');
    s
}

fn outcome_text(o: &Outcome) -> (String, String) {
    match o {
        Outcome::Holds => ("✓ holds".into(), String::new()),
        Outcome::Fails { witness } => ("✗ fails".into(), witness.to_string()),
        Outcome::Skipped { reason } => ("– skipped".into(), reason.clone()),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn human_verdict(out: &mut String, v: &PropertyVerdict) {
    let (verdict, extra) = outcome_text(&v.outcome);
    let mut rows = vec![
        vec!["ring".into(), v.ring.clone()],
        vec!["property".into(), v.property.to_string()],
    ];
    if let Some(e) = &v.idempotent {
        rows.push(vec!["e".into(), e.clone()]);
    }
    rows.push(vec!["verdict".into(), verdict]);
    match &v.outcome {
        Outcome::Fails { .. } => rows.push(vec!["witness".into(), extra]),
        Outcome::Skipped { .. } => rows.push(vec!["reason".into(), extra]),
        Outcome::Holds => {}
    }
    out.push_str(&table(None, rows));
}

fn human_description(out: &mut String, ring: &str, d: &Description) {
    let axioms = match &d.axioms {
        Axioms::Verified => "verified".to_string(),
        Axioms::Failed { violations } => format!("FAILED: {}", violations.join("; ")),
        Axioms::Skipped { reason } => format!("not checked ({reason})"),
    };
    let idempotents: Vec<String> = d.idempotents.iter().map(|i| i.label.clone()).collect();
    out.push_str(&table(
        None,
        vec![
            vec!["ring".into(), ring.to_string()],
            vec!["order".into(), d.order.to_string()],
            vec!["commutative".into(), yes(d.commutative).into()],
            vec!["axioms".into(), axioms],
            vec!["idempotents".into(), list(&idempotents)],
            vec!["nilpotents".into(), list(&d.nilpotents)],
            vec!["center".into(), list(&d.center)],
        ],
    ));
    out.push('\n');
    let rows = d
        .idempotents
        .iter()
        .map(|i| {
            vec![
                i.label.clone(),
                mark(i.left_semicentral),
                mark(i.right_semicentral),
                mark(i.central),
                mark(i.left_minimal),
            ]
        })
        .collect();
    out.push_str(&table(
        Some(&[
            "idempotent",
            "l-semicentral",
            "r-semicentral",
            "central",
            "left-minimal",
        ]),
        rows,
    ));
    out.push('\n');
    let rows = d
        .properties
        .iter()
        .map(|v| {
            let (verdict, extra) = outcome_text(&v.outcome);
            vec![v.property.to_string(), verdict, extra]
        })
        .collect();
    out.push_str(&table(Some(&["property", "verdict", "witness"]), rows));
}

fn mark(b: bool) -> String {
    if b { "✓" } else { "✗" }.to_string()
}

fn human_survey(out: &mut String, ring: &str, s: &Survey) {
    out.push_str(&format!("{ring}: {} nonzero idempotents\n\n", s.rows.len()));
    let mut header = vec!["idempotent", "lsc", "rsc"];
    header.extend(s.columns.iter().map(|p| p.short()));
    let rows = s
        .rows
        .iter()
        .map(|r| {
            let mut row = vec![
                r.idempotent.label.clone(),
                mark(r.idempotent.left_semicentral),
                mark(r.idempotent.right_semicentral),
            ];
            row.extend(
                s.columns
                    .iter()
                    .map(|&p| r.verdict(p).map_or("?", |v| v.outcome.symbol()).to_string()),
            );
            row
        })
        .collect();
    out.push_str(&table(Some(&header), rows));
    let legend: Vec<String> = s
        .columns
        .iter()
        .map(|p| format!("{} = {}", p.short(), p.name()))
        .collect();
    out.push_str(&format!("\n{}\n", legend.join(", ")));
}

fn human_corpus(out: &mut String, c: &CorpusSummary) {
    let built = c.members.iter().filter(|m| m.skipped.is_none()).count();
    out.push_str(&format!(
        "corpus {}: {} members, {} built\n",
        c.name,
        c.members.len(),
        built
    ));
    for m in c.members.iter().filter(|m| m.skipped.is_some()) {
        out.push_str(&format!(
            "  line {}: {} skipped ({})\n",
            m.line,
            m.expr,
            m.skipped.as_deref().unwrap_or_default()
        ));
    }
}

fn human_law(out: &mut String, l: &LawReport) {
    let t = l.totals;
    out.push_str(&format!(
        "{}  ✓ {}  ✗ {}  · {}  – {}\n  {}\n",
        l.law, t.holds, t.violated, t.not_applicable, t.skipped, l.statement
    ));
    for v in l.violations() {
        if let crate::laws::Status::Violated {
            witness,
            detail,
            replay,
        } = &v.status
        {
            let at = v.idempotent.as_deref().map(|e| format!(" at {e}")).unwrap_or_default();
            out.push_str(&format!("  ✗ {}{at}: {detail}\n", v.ring));
            if !witness.is_empty() {
                out.push_str(&format!("    witness ({})\n", witness.join(", ")));
            }
            if !replay.is_empty() {
                out.push_str(&format!("    replay  {replay}\n"));
            }
        }
    }
    for n in &l.notes {
        out.push_str(&format!("  note: {n}\n"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{build, parse};

    fn ring(text: &str) -> RingTable {
        build(&parse(text).unwrap(), &Guards::default()).unwrap()
    }

    #[test]
    fn json_round_trips_byte_for_byte() {
        let r = ring("U(2,Z(2))");
        let mut rep = Report::new(vec!["describe".into(), "U(2,Z(2))".into()], r.provenance());
        rep.results
            .push(Entry::Description(describe(&r, Guards::default()).unwrap()));
        rep.results.push(Entry::Survey(survey(&r, Guards::default()).unwrap()));
        rep.time("build", std::time::Duration::from_micros(1234));
        let text = rep.to_json();
        let back = Report::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(Report::from_json(&back.to_json()).unwrap(), back);
    }

    #[test]
    fn keys_come_in_schema_order() {
        let rep = Report::new(vec!["laws".into()], "corpus default");
        let text = rep.to_json();
        let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("schema") < pos("command") && pos("command") < pos("ring") && pos("ring") < pos("results"));
        assert!(!text.contains("timings"));
    }

    #[test]
    fn human_description_of_z4() {
        let r = ring("Z(4)");
        let mut rep = Report::new(vec![], r.provenance());
        rep.results
            .push(Entry::Description(describe(&r, Guards::default()).unwrap()));
        let text = rep.to_human();
        assert!(text.contains("nilpotents   2: {0, 2}"), "{text}");
        assert!(text.contains("idempotents  2: {0, 1}"), "{text}");
        assert!(text.contains("axioms       verified"), "{text}");
    }

    #[test]
    fn tables_align_on_character_width() {
        let t = table(Some(&["a", "b"]), vec![vec!["✓✓✓".into(), "x".into()]]);
        assert_eq!(t, "a    b\n✓✓✓  x\n");
    }
}
