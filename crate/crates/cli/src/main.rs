//! `idemring`: check, survey, describe and law-check finite rings.

mod cache;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use idemring::clock::Stopwatch;
use idemring::dsl::{build, parse, parse_element, resolve, ParseError};
use idemring::laws::{all_laws, find_law, Corpus, LawContext};
use idemring::report::{self, Entry, Report};
use idemring::{verify_axioms, Analysis, Error, Guards, Property, RingTable};

use cache::Cache;

#[derive(Parser)]
#[command(
    name = "idemring",
    version,
    about = "Idempotent-relative reversibility on finite rings"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Largest ring order for table builds and pair sweeps.
    #[arg(long, default_value_t = Guards::default().max_pair_order, global = true)]
    max_pair_order: usize,
    /// Largest ring order for triple sweeps.
    #[arg(long, default_value_t = Guards::default().max_triple_order, global = true)]
    max_triple_order: usize,
    /// Directory for cached ring tables.
    #[arg(long, value_name = "DIR", global = true)]
    cache: Option<PathBuf>,
    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one property of a ring, with a witness when it fails.
    Check {
        /// Ring expression, e.g. 'U(2,Z(3))'.
        expr: String,
        /// Property name.
        #[arg(value_parser = property_names())]
        property: String,
        /// Idempotent for e-relative properties, e.g. '[[1,1],[0,0]]'.
        #[arg(long, value_name = "ELEM")]
        e: Option<String>,
    },
    /// Every e-relative property for every nonzero idempotent.
    Survey {
        /// Ring expression.
        expr: String,
    },
    /// Order, idempotents, nilpotents, center and global properties.
    Describe {
        /// Ring expression.
        expr: String,
    },
    /// Check the laws over a corpus of rings.
    Laws {
        /// Run only this law.
        #[arg(long, value_name = "ID")]
        law: Option<String>,
        /// Corpus manifest, one expression per line; the shipped corpus by default.
        #[arg(long, value_name = "FILE")]
        corpus: Option<PathBuf>,
    },
}

fn property_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(Property::all().map(Property::name))
}

enum Failure {
    Usage(String),
    Guard(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Guard(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Guard(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_size_guard() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// A parse error with the offending line and a caret under the column.
fn located(what: &str, text: &str, e: &ParseError) -> Failure {
    let line = text.lines().nth(e.line.saturating_sub(1)).unwrap_or("");
    let pad = " ".repeat(e.col.saturating_sub(1));
    Failure::Usage(format!("{what}: {e}\n  {line}\n  {pad}^"))
}

struct Run {
    cli_guards: Guards,
    cache: Option<Cache>,
    report: Report,
}

impl Run {
    fn ring(&mut self, text: &str) -> Result<RingTable, Failure> {
        let expr = parse(text).map_err(|e| located("syntax error", text, &e))?;
        let clock = Stopwatch::start();
        let (ring, label) = match &self.cache {
            Some(cache) => {
                let (ring, hit) = cache.load_or_build(&expr, &self.cli_guards)?;
                (ring, if hit { "build (cached)" } else { "build" })
            }
            None => (build(&expr, &self.cli_guards)?, "build"),
        };
        self.report.time(label, clock.elapsed());
        self.report.ring = ring.provenance().to_string();
        Ok(ring)
    }

    fn element(&self, ring: &RingTable, text: &str) -> Result<usize, Failure> {
        let lit = parse_element(text).map_err(|e| located("element syntax error", text, &e))?;
        Ok(resolve(ring, &lit)?)
    }

    fn check(&mut self, expr: &str, property: &str, e: Option<&str>) -> Result<(), Failure> {
        let property: Property = property.parse()?;
        let ring = self.ring(expr)?;
        let clock = Stopwatch::start();
        let axioms = match verify_axioms(&ring, &self.cli_guards) {
            Ok(rep) => Some(rep),
            Err(err) if err.is_size_guard() => None,
            Err(err) => return Err(err.into()),
        };
        if let Some(rep) = axioms.filter(|r| !r.passed) {
            let v = &rep.violations[0];
            return Err(Failure::Usage(format!(
                "not a ring: {} fails at ({})",
                v.axiom,
                ring.render(&v.witness).join(", ")
            )));
        }
        self.report.time("axioms", clock.elapsed());
        let e = match (property.is_relative(), e) {
            (true, Some(text)) => Some(self.element(&ring, text)?),
            (true, None) => return Err(Failure::Usage(format!("{property} needs --e"))),
            (false, Some(_)) => return Err(Failure::Usage(format!("{property} does not take --e"))),
            (false, None) => None,
        };
        let verdict = Analysis::new(&ring, self.cli_guards).check(property, e)?;
        self.report.time(property.name(), verdict.elapsed);
        self.report.results.push(Entry::Verdict(verdict));
        Ok(())
    }

    fn survey(&mut self, expr: &str) -> Result<(), Failure> {
        let ring = self.ring(expr)?;
        let clock = Stopwatch::start();
        let s = report::survey(&ring, self.cli_guards)?;
        self.report.time("survey", clock.elapsed());
        self.report.results.push(Entry::Survey(s));
        Ok(())
    }

    fn describe(&mut self, expr: &str) -> Result<(), Failure> {
        let ring = self.ring(expr)?;
        let clock = Stopwatch::start();
        let d = report::describe(&ring, self.cli_guards)?;
        self.report.time("describe", clock.elapsed());
        self.report.results.push(Entry::Description(d));
        Ok(())
    }

    fn laws(&mut self, law: Option<&str>, corpus: Option<&PathBuf>) -> Result<(), Failure> {
        let laws = match law {
            Some(id) => vec![find_law(id).ok_or_else(|| {
                let ids: Vec<&str> = all_laws().iter().map(|l| l.id).collect();
                Failure::Usage(format!("unknown law `{id}`; known laws: {}", ids.join(", ")))
            })?],
            None => all_laws().iter().collect(),
        };
        let clock = Stopwatch::start();
        let corpus = match corpus {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("cannot read corpus {}: {e}", path.display())))?;
                Corpus::from_manifest(&text, &path.display().to_string(), self.cli_guards)?
            }
            None => Corpus::default_corpus(self.cli_guards)?,
        };
        self.report.time("corpus", clock.elapsed());
        self.report.ring = format!("corpus {}", corpus.name);
        self.report.results.push(Entry::Corpus(report::corpus_summary(&corpus)));
        let ctx = LawContext::new(&corpus);
        for law in laws {
            let rep = law.run(&ctx)?;
            self.report.time(law.id, rep.elapsed);
            self.report.results.push(Entry::Law(rep));
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let guards = Guards {
        max_pair_order: cli.max_pair_order,
        max_triple_order: cli.max_triple_order,
    };
    let cache = match &cli.cache {
        Some(dir) => match Cache::new(dir) {
            Ok(c) => Some(c),
            Err(e) => {
                eprintln!("warning: cache disabled, cannot use {}: {e}", dir.display());
                None
            }
        },
        None => None,
    };
    let command: Vec<String> = std::env::args().skip(1).collect();
    let mut run = Run {
        cli_guards: guards,
        cache,
        report: Report::new(command, ""),
    };
    let total = Stopwatch::start();
    let outcome = match &cli.command {
        Command::Check { expr, property, e } => run.check(expr, property, e.as_deref()),
        Command::Survey { expr } => run.survey(expr),
        Command::Describe { expr } => run.describe(expr),
        Command::Laws { law, corpus } => run.laws(law.as_deref(), corpus.as_ref()),
    };
    if let Err(f) = outcome {
        eprintln!("error: {}", f.message());
        return ExitCode::from(f.code());
    }
    let mut report = run.report;
    if cli.timings {
        report.time("total", total.elapsed());
    } else {
        report.timings = None;
    }
    match cli.format {
        Format::Human => print!("{}", report.to_human()),
        Format::Json => print!("{}", report.to_json()),
    }
    if report.violations() > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
