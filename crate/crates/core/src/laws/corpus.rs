use serde::Serialize;

use crate::dsl::{build, parse, Expr};
use crate::error::{Error, Result};
use crate::ring::{Guards, RingTable};

/// The shipped corpus manifest.
pub const DEFAULT_MANIFEST: &str = include_str!("../../corpus/default.txt");

/// One manifest line.
#[derive(Debug, Serialize)]
pub struct Member {
    pub line: usize,
    pub expr: Expr,
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip)]
    pub ring: Option<RingTable>,
}

/// A `#` not followed by a digit starts a comment (`#3` is an index literal).
fn strip_comment(line: &str) -> &str {
    let bytes = line.as_bytes();
    let cut = (0..bytes.len())
        .find(|&i| bytes[i] == b'#' && !bytes.get(i + 1).is_some_and(u8::is_ascii_digit))
        .unwrap_or(bytes.len());
    &line[..cut]
}

/// Rings named by a manifest, built under one set of guards.
#[derive(Debug)]
pub struct Corpus {
    pub name: String,
    pub guards: Guards,
    pub members: Vec<Member>,
}

impl Corpus {
    pub fn default_corpus(guards: Guards) -> Result<Corpus> {
        Corpus::from_manifest(DEFAULT_MANIFEST, "default", guards)
    }

    /// Parses and builds every line. A line whose ring exceeds the guards
    /// becomes a skipped member; any other failure aborts with `name:line`.
    pub fn from_manifest(text: &str, name: &str, guards: Guards) -> Result<Corpus> {
        let mut members = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = strip_comment(raw).trim();
            if body.is_empty() {
                continue;
            }
            let at = |message: String| Error::Manifest {
                file: name.to_string(),
                line,
                message,
            };
            let expr = parse(body).map_err(|e| at(e.to_string()))?;
            let (ring, skipped) = match build(&expr, &guards) {
                Ok(r) => (Some(r), None),
                Err(e) if e.is_size_guard() => (None, Some(e.to_string())),
                Err(e) => return Err(at(e.to_string())),
            };
            members.push(Member {
                line,
                expr,
                order: ring.as_ref().map(RingTable::order),
                skipped,
                ring,
            });
        }
        Ok(Corpus {
            name: name.to_string(),
            guards,
            members,
        })
    }

    pub fn rings(&self) -> impl Iterator<Item = &RingTable> {
        self.members.iter().filter_map(|m| m.ring.as_ref())
    }
}
