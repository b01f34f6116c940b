//! Browser bindings: describe, survey and check a ring from its expression.
//!
//! Every function returns the same aligned text the CLI prints, or throws
//! an `Error` whose message is the CLI's error line.

use idemring::dsl::{build, parse, parse_element, resolve};
use idemring::report::{self, Entry, Report};
use idemring::{Analysis, Guards, Property, RingTable};
use wasm_bindgen::prelude::*;

/// Smaller than the CLI defaults so the page stays responsive.
const GUARDS: Guards = Guards {
    max_pair_order: 1024,
    max_triple_order: 256,
};

fn ring(expr: &str) -> Result<RingTable, String> {
    let ast = parse(expr).map_err(|e| format!("syntax error: {e}"))?;
    build(&ast, &GUARDS).map_err(|e| e.to_string())
}

fn render(command: &[&str], ring: &RingTable, entry: Entry, json: bool) -> String {
    let mut rep = Report::new(command.iter().map(|s| s.to_string()).collect(), ring.provenance());
    rep.results.push(entry);
    if json {
        rep.to_json()
    } else {
        rep.to_human()
    }
}

pub fn describe_text(expr: &str, json: bool) -> Result<String, String> {
    let r = ring(expr)?;
    let d = report::describe(&r, GUARDS).map_err(|e| e.to_string())?;
    Ok(render(&["describe", expr], &r, Entry::Description(d), json))
}

pub fn survey_text(expr: &str, json: bool) -> Result<String, String> {
    let r = ring(expr)?;
    let s = report::survey(&r, GUARDS).map_err(|e| e.to_string())?;
    Ok(render(&["survey", expr], &r, Entry::Survey(s), json))
}

pub fn check_text(expr: &str, property: &str, e: &str, json: bool) -> Result<String, String> {
    let property: Property = property.parse().map_err(|e: idemring::Error| e.to_string())?;
    let r = ring(expr)?;
    let e = if property.is_relative() {
        let lit = parse_element(e).map_err(|err| format!("element syntax error: {err}"))?;
        Some(resolve(&r, &lit).map_err(|err| err.to_string())?)
    } else {
        None
    };
    let v = Analysis::new(&r, GUARDS)
        .check(property, e)
        .map_err(|err| err.to_string())?;
    Ok(render(&["check", expr, property.name()], &r, Entry::Verdict(v), json))
}

#[wasm_bindgen]
pub fn describe(expr: &str, json: bool) -> Result<String, JsError> {
    describe_text(expr, json).map_err(|m| JsError::new(&m))
}

#[wasm_bindgen]
pub fn survey(expr: &str, json: bool) -> Result<String, JsError> {
    survey_text(expr, json).map_err(|m| JsError::new(&m))
}

#[wasm_bindgen]
pub fn check(expr: &str, property: &str, e: &str, json: bool) -> Result<String, JsError> {
    check_text(expr, property, e, json).map_err(|m| JsError::new(&m))
}

/// Property names, e-relative ones first, one per line.
#[wasm_bindgen]
pub fn properties() -> String {
    Property::all().map(Property::name).collect::<Vec<_>>().join("\n")
}

/// Whether `property` needs an idempotent.
#[wasm_bindgen]
pub fn is_relative(property: &str) -> bool {
    property.parse::<Property>().is_ok_and(Property::is_relative)
}
