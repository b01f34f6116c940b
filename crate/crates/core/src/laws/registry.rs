//! Finite ports of the worked examples, with their verdicts pinned.
//!
//! Every check has an id and a recorded value in [`GOLDEN`]; the values
//! were produced by the brute-force oracle in `tests/oracle.rs`, which
//! recomputes them from scratch on every test run.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use super::{mark, replay_command, Instance, Law, LawContext, LawReport, Status};
use crate::constructions::matrix_label;
use crate::dsl::{build, parse, parse_element, resolve};
use crate::error::{Error, Result};
use crate::predicates::{replay_violates, Analysis, Property};
use crate::ring::{Guards, RingTable};

/// The 16-element algebra over `Z_2` with basis `1, a, b, c`, where
/// `ba = c` and every other product of `a, b, c` vanishes.
pub const R16: &str = "algebra(2,4,[[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],\
[[0,1,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]],[[0,0,1,0],[0,0,0,1],[0,0,0,0],[0,0,0,0]],\
[[0,0,0,1],[0,0,0,0],[0,0,0,0],[0,0,0,0]]])";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Count(usize),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => f.write_str(mark(*b)),
            Value::Count(n) => write!(f, "{n}"),
        }
    }
}

use Value::{Bool, Count};

/// Recorded values, keyed by check id.
pub static GOLDEN: &[(&str, Value)] = &[
    ("a.reversible", Bool(false)),
    ("a.right-e1", Bool(true)),
    ("a.left-e1", Bool(false)),
    ("a.left-e2", Bool(true)),
    ("a.right-e2", Bool(false)),
    ("a.e2e1-pair", Bool(true)),
    ("b.right", Bool(false)),
    ("b.left", Bool(false)),
    ("b.pair-right", Bool(true)),
    ("b.pair-left", Bool(true)),
    ("b.bae-is-e13", Bool(true)),
    ("c.right", Bool(true)),
    ("c.reversible", Bool(false)),
    ("c.pair", Bool(true)),
    ("d.arb-zero", Bool(true)),
    ("d.bra-nonzero", Bool(true)),
    ("d.reflexive", Bool(false)),
    ("d.right-e1", Bool(true)),
    ("e.r16-semicommutative", Bool(true)),
    ("e.r16-reversible", Bool(false)),
    ("e.pair", Bool(true)),
    ("e.right-semicommutative", Bool(true)),
    ("f.pair", Bool(true)),
    ("f.right", Bool(false)),
    ("g.pair", Bool(true)),
    ("g.right", Bool(false)),
    ("g.ambient-e22", Bool(true)),
    ("g.right-reversible-idempotents", Count(0)),
    ("h.right-1", Bool(true)),
    ("h.reversible", Bool(true)),
    ("i.directly-finite", Bool(true)),
    ("i.prime", Bool(false)),
    ("i.right", Bool(false)),
    ("i.pair", Bool(true)),
    ("j.nonzero-idempotents", Count(19)),
    ("j.right-reversible-idempotents", Count(0)),
    ("k.right", Bool(false)),
    ("k.m2-right", Bool(false)),
    ("k.u2-right", Bool(true)),
    ("k.witness", Bool(true)),
    ("k.xy-pair", Bool(false)),
];

pub fn golden(id: &str) -> Option<Value> {
    GOLDEN.iter().find(|(k, _)| *k == id).map(|(_, v)| *v)
}

/// One computed fact about an example.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: &'static str,
    pub ring: String,
    pub idempotent: Option<String>,
    pub value: Value,
    pub witness: Vec<String>,
    pub what: String,
}

struct Book {
    checks: Vec<Check>,
}

impl Book {
    fn push(&mut self, id: &'static str, r: &RingTable, e: Option<usize>, value: Value, witness: &[usize], what: &str) {
        self.checks.push(Check {
            id,
            ring: r.provenance().to_string(),
            idempotent: e.map(|e| r.label(e).to_string()),
            value,
            witness: r.render(witness),
            what: what.to_string(),
        });
    }

    /// Records a property verdict, with its witness when it fails.
    fn verdict(
        &mut self,
        id: &'static str,
        a: &Analysis<'_>,
        p: Property,
        e: Option<usize>,
        what: &str,
    ) -> Result<bool> {
        let v = a.check(p, e)?;
        let holds = v.holds().unwrap_or(false);
        let w = v.witness().map(|w| w.indices.clone()).unwrap_or_default();
        self.push(id, a.ring(), e.filter(|_| p.is_relative()), Bool(holds), &w, what);
        Ok(holds)
    }
}

fn ring(text: &str, guards: &Guards) -> Result<RingTable> {
    build(&parse(text)?, guards)
}

fn el(r: &RingTable, text: &str) -> Result<usize> {
    resolve(r, &parse_element(text)?)
}

/// `aRb = 0`.
fn kills_through(r: &RingTable, a: usize, b: usize) -> bool {
    r.elements().all(|x| r.is_zero(r.mul3(a, x, b)))
}

fn entry_a(book: &mut Book, g: &Guards) -> Result<()> {
    let r = ring("U(2,Z(3))", g)?;
    let a = Analysis::new(&r, *g);
    let (e1, e2) = (el(&r, "[[1,1],[0,0]]")?, el(&r, "[[0,0],[0,1]]")?);
    book.verdict("a.reversible", &a, Property::Reversible, None, "not reversible")?;
    book.verdict(
        "a.right-e1",
        &a,
        Property::RightEReversible,
        Some(e1),
        "right E1-reversible",
    )?;
    book.verdict(
        "a.left-e1",
        &a,
        Property::LeftEReversible,
        Some(e1),
        "not left E1-reversible",
    )?;
    book.verdict(
        "a.left-e2",
        &a,
        Property::LeftEReversible,
        Some(e2),
        "left E2-reversible",
    )?;
    book.verdict(
        "a.right-e2",
        &a,
        Property::RightEReversible,
        Some(e2),
        "not right E2-reversible",
    )?;
    let v = replay_violates(&r, Property::Reversible, None, &[e2, e1]);
    book.push("a.e2e1-pair", &r, None, Bool(v), &[e2, e1], "E2·E1 = 0 while E1·E2 ≠ 0");
    Ok(())
}

fn entry_b(book: &mut Book, g: &Guards) -> Result<()> {
    let r = ring("M(3,Z(2))", g)?;
    let a = Analysis::new(&r, *g);
    let e = el(&r, "[[1,0,0],[0,0,0],[0,0,1]]")?;
    let x = el(&r, "[[0,0,0],[0,0,1],[0,0,0]]")?;
    let y = el(&r, "[[0,1,0],[0,0,0],[0,0,0]]")?;
    book.verdict(
        "b.right",
        &a,
        Property::RightEReversible,
        Some(e),
        "not right E-reversible",
    )?;
    book.verdict(
        "b.left",
        &a,
        Property::LeftEReversible,
        Some(e),
        "not left E-reversible",
    )?;
    let v = replay_violates(&r, Property::RightEReversible, Some(e), &[x, y]);
    book.push(
        "b.pair-right",
        &r,
        Some(e),
        Bool(v),
        &[x, y],
        "A = E23, B = E12: AB = 0, BAE ≠ 0",
    );
    let v = replay_violates(&r, Property::LeftEReversible, Some(e), &[x, y]);
    book.push(
        "b.pair-left",
        &r,
        Some(e),
        Bool(v),
        &[x, y],
        "A = E23, B = E12: AB = 0, EBA ≠ 0",
    );
    let bae = r.mul3(y, x, e);
    let v = bae == el(&r, "[[0,0,1],[0,0,0],[0,0,0]]")?;
    book.push("b.bae-is-e13", &r, Some(e), Bool(v), &[bae], "BAE = E13");
    Ok(())
}

fn entry_c(book: &mut Book, g: &Guards) -> Result<()> {
    let r = ring("U(2,Z(3))", g)?;
    let a = Analysis::new(&r, *g);
    let e = el(&r, "[[1,0],[0,0]]")?;
    book.verdict(
        "c.right",
        &a,
        Property::RightEReversible,
        Some(e),
        "right E11-reversible",
    )?;
    book.verdict("c.reversible", &a, Property::Reversible, None, "not reversible")?;
    let (x, y) = (el(&r, "[[0,1],[0,1]]")?, el(&r, "[[1,0],[0,0]]")?);
    let v = replay_violates(&r, Property::Reversible, None, &[x, y]);
    book.push(
        "c.pair",
        &r,
        None,
        Bool(v),
        &[x, y],
        "A = (0,1;0,1), B = (1,0;0,0): AB = 0, BA ≠ 0",
    );
    Ok(())
}

fn entry_d(book: &mut Book, g: &Guards) -> Result<()> {
    let r = ring("U(2,Z(3))", g)?;
    let a = Analysis::new(&r, *g);
    let (x, y) = (el(&r, "[[0,1],[0,1]]")?, el(&r, "[[1,1],[0,0]]")?);
    book.push(
        "d.arb-zero",
        &r,
        None,
        Bool(kills_through(&r, x, y)),
        &[x, y],
        "aRb = 0",
    );
    book.push(
        "d.bra-nonzero",
        &r,
        None,
        Bool(!kills_through(&r, y, x)),
        &[y, x],
        "bRa ≠ 0",
    );
    book.verdict("d.reflexive", &a, Property::Reflexive, None, "not reflexive")?;
    let e1 = el(&r, "[[1,1],[0,0]]")?;
    book.verdict(
        "d.right-e1",
        &a,
        Property::RightEReversible,
        Some(e1),
        "right E1-reversible",
    )?;
    Ok(())
}

/// `H_(1,1)(R16)` with `E = E11 + E21` and the pair `A = aE`, `B = bE`.
pub struct HR16 {
    pub ring: RingTable,
    pub e: usize,
    pub a: usize,
    pub b: usize,
}

/// Built once per process; the order is 4096.
pub fn h_r16() -> Result<&'static HR16> {
    static CELL: OnceLock<Result<HR16>> = OnceLock::new();
    let built = CELL.get_or_init(|| {
        let guards = Guards {
            max_pair_order: 4096,
            max_triple_order: 1024,
        };
        let base = ring(R16, &guards)?;
        let h = ring(&format!("H({R16},1,1)"), &guards)?;
        let (one, zero) = (base.one(), base.zero());
        let scaled = |s: usize| -> Result<usize> {
            let label = matrix_label(&base, 3, &[s, zero, zero, s, zero, zero, zero, zero, zero]);
            h.index_of(&label).ok_or(Error::UnknownElement(label))
        };
        let e = scaled(one)?;
        let a = scaled(el(&base, "(0,1,0,0)")?)?;
        let b = scaled(el(&base, "(0,0,1,0)")?)?;
        Ok(HR16 { ring: h, e, a, b })
    });
    built.as_ref().map_err(Clone::clone)
}

fn entry_e(book: &mut Book, g: &Guards) -> Result<()> {
    let base = ring(R16, g)?;
    let ba = Analysis::new(&base, *g);
    book.verdict(
        "e.r16-semicommutative",
        &ba,
        Property::Semicommutative,
        None,
        "R16 is semicommutative",
    )?;
    book.verdict(
        "e.r16-reversible",
        &ba,
        Property::Reversible,
        None,
        "R16 is not reversible",
    )?;
    let h = h_r16()?;
    g.check_pair("H ring", h.ring.order())?;
    let v = replay_violates(&h.ring, Property::RightEReversible, Some(h.e), &[h.a, h.b]);
    book.push(
        "e.pair",
        &h.ring,
        Some(h.e),
        Bool(v),
        &[h.a, h.b],
        "A = aE, B = bE: AB = 0, BAE = BA ≠ 0",
    );
    let a = Analysis::new(&h.ring, *g);
    book.verdict(
        "e.right-semicommutative",
        &a,
        Property::RightESemicommutative,
        Some(h.e),
        "H_(1,1)(R16) is right E-semicommutative",
    )?;
    Ok(())
}

fn entry_f(book: &mut Book, g: &Guards) -> Result<()> {
    let r = ring("D(2,U(2,Z(3)))", g)?;
    let a = Analysis::new(&r, *g);
    let x = el(&r, "[[[[0,1],[0,0]],[[2,1],[0,2]]],[[[0,0],[0,0]],[[0,1],[0,0]]]]")?;
    let y = el(&r, "[[[[0,1],[0,0]],[[2,1],[0,1]]],[[[0,0],[0,0]],[[0,1],[0,0]]]]")?;
    let e = el(&r, "[[[[0,0],[0,1]],[[0,0],[0,0]]],[[[0,0],[0,0]],[[0,0],[0,1]]]]")?;
    let v = replay_violates(&r, Property::RightEReversible, Some(e), &[x, y]);
    book.push(
        "f.pair",
        &r,
        Some(e),
        Bool(v),
        &[x, y],
        "the block pair with -1 ↦ 2: AB = 0, BAE ≠ 0",
    );
    book.verdict(
        "f.right",
        &a,
        Property::RightEReversible,
        Some(e),
        "not right E-reversible",
    )?;
    Ok(())
}

fn entry_g(book: &mut Book, g: &Guards) -> Result<()> {
    let r = ring("D(3,Z(2))", g)?;
    let a = Analysis::new(&r, *g);
    let one = r.one();
    let x = el(&r, "[[0,0,0],[0,0,1],[0,0,0]]")?;
    let y = el(&r, "[[0,1,0],[0,0,1],[0,0,0]]")?;
    let v = replay_violates(&r, Property::RightEReversible, Some(one), &[x, y]);
    book.push(
        "g.pair",
        &r,
        Some(one),
        Bool(v),
        &[x, y],
        "A = e23, B = e12 + e23: AB = 0, BAI₃ ≠ 0",
    );
    book.verdict(
        "g.right",
        &a,
        Property::RightEReversible,
        Some(one),
        "not right I₃-reversible",
    )?;
    // E22 is not in D_3; check BA·E22 = 0 inside M_3 for every zero pair.
    let m3 = ring("M(3,Z(2))", g)?;
    let e22 = el(&m3, "[[0,0,0],[0,1,0],[0,0,0]]")?;
    let lift = |i: usize| {
        m3.index_of(r.label(i))
            .ok_or_else(|| Error::UnknownElement(r.label(i).into()))
    };
    let mut ambient = true;
    let mut bad = Vec::new();
    'scan: for p in r.elements() {
        for q in r.elements() {
            if r.is_zero(r.mul(p, q)) && !m3.is_zero(m3.mul(r.mul(q, p).pipe(lift)?, e22)) {
                ambient = false;
                bad = vec![p, q];
                break 'scan;
            }
        }
    }
    book.push(
        "g.ambient-e22",
        &r,
        None,
        Bool(ambient),
        &bad,
        "AB = 0 ⟹ BA·E22 = 0 in M_3",
    );
    let count = a
        .nonzero_idempotents()
        .map(|e| {
            a.check(Property::RightEReversible, Some(e))
                .map(|v| v.holds() == Some(true))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&b| b)
        .count();
    book.push(
        "g.right-reversible-idempotents",
        &r,
        None,
        Count(count),
        &[],
        "nonzero idempotents e of D_3 with D_3 right e-reversible",
    );
    Ok(())
}

trait Pipe: Sized {
    fn pipe<T>(self, f: impl FnOnce(Self) -> T) -> T {
        f(self)
    }
}

impl Pipe for usize {}

fn entry_h(book: &mut Book, g: &Guards) -> Result<()> {
    let r = ring("V(3,Z(2))", g)?;
    let a = Analysis::new(&r, *g);
    book.verdict(
        "h.right-1",
        &a,
        Property::RightEReversible,
        Some(r.one()),
        "right I₃-reversible",
    )?;
    book.verdict("h.reversible", &a, Property::Reversible, None, "reversible")?;
    Ok(())
}

fn entry_i(book: &mut Book, g: &Guards) -> Result<()> {
    let r = ring("U(2,Z(3))", g)?;
    let a = Analysis::new(&r, *g);
    let e = el(&r, "[[0,0],[0,1]]")?;
    book.verdict(
        "i.directly-finite",
        &a,
        Property::DirectlyFinite,
        None,
        "directly finite",
    )?;
    book.verdict("i.prime", &a, Property::Prime, None, "not prime")?;
    book.verdict(
        "i.right",
        &a,
        Property::RightEReversible,
        Some(e),
        "not right E-reversible",
    )?;
    let (x, y) = (el(&r, "[[0,1],[0,1]]")?, el(&r, "[[1,1],[0,0]]")?);
    let v = replay_violates(&r, Property::RightEReversible, Some(e), &[x, y]);
    book.push(
        "i.pair",
        &r,
        Some(e),
        Bool(v),
        &[x, y],
        "A = (0,1;0,1), B = (1,1;0,0): AB = 0, BAE ≠ 0",
    );
    Ok(())
}

fn entry_j(book: &mut Book, g: &Guards) -> Result<()> {
    let r = ring("K(Z(3),0)", g)?;
    let a = Analysis::new(&r, *g);
    let ids: Vec<usize> = a.nonzero_idempotents().collect();
    book.push(
        "j.nonzero-idempotents",
        &r,
        None,
        Count(ids.len()),
        &[],
        "nonzero idempotents",
    );
    let mut count = 0;
    for &e in &ids {
        if a.check(Property::RightEReversible, Some(e))?.holds() == Some(true) {
            count += 1;
        }
    }
    book.push(
        "j.right-reversible-idempotents",
        &r,
        None,
        Count(count),
        &[],
        "nonzero idempotents E with K_0 right E-reversible",
    );
    Ok(())
}

fn entry_k(book: &mut Book, g: &Guards) -> Result<()> {
    let t = ring("trs(M(2,Z(2)),sub[[[1,0],[0,0]],[[0,1],[0,0]]],1)", g)?;
    let m2 = ring("M(2,Z(2))", g)?;
    let u2 = ring("U(2,Z(2))", g)?;
    let big_e = el(&t, "([[1,1],[0,0]],[[1,1],[0,0]])")?;
    let ta = Analysis::new(&t, *g);
    let v = ta.check(Property::RightEReversible, Some(big_e))?;
    let witness = v.witness().map(|w| w.indices.clone()).unwrap_or_default();
    book.verdict(
        "k.right",
        &ta,
        Property::RightEReversible,
        Some(big_e),
        "not right (e,e)-reversible",
    )?;
    let replays = !witness.is_empty() && replay_violates(&t, Property::RightEReversible, Some(big_e), &witness);
    book.push(
        "k.witness",
        &t,
        Some(big_e),
        Bool(replays),
        &witness,
        "the engine witness replays",
    );
    let e = el(&m2, "[[1,1],[0,0]]")?;
    let ma = Analysis::new(&m2, *g);
    book.verdict(
        "k.m2-right",
        &ma,
        Property::RightEReversible,
        Some(e),
        "M_2 is not right e-reversible",
    )?;
    let ue = el(&u2, "[[1,1],[0,0]]")?;
    let ua = Analysis::new(&u2, *g);
    book.verdict(
        "k.u2-right",
        &ua,
        Property::RightEReversible,
        Some(ue),
        "U_2 is right e-reversible",
    )?;
    let (x, y) = (el(&m2, "[[1,0],[1,0]]")?, el(&m2, "[[0,0],[1,1]]")?);
    let v = replay_violates(&m2, Property::RightEReversible, Some(e), &[x, y]);
    book.push(
        "k.xy-pair",
        &m2,
        Some(e),
        Bool(v),
        &[x, y],
        "x = (1,0;1,0), y = (0,0;1,1): yxe = 0 over Z_2",
    );
    Ok(())
}

type EntryFn = fn(&mut Book, &Guards) -> Result<()>;

static ENTRIES: &[(char, &str, EntryFn)] = &[
    (
        'a',
        "U_2(Z_3): one-sided reversibility depends on the idempotent",
        entry_a,
    ),
    (
        'b',
        "M_3(Z_2), E = E11 + E33: neither right nor left E-reversible",
        entry_b,
    ),
    ('c', "U_2(Z_3), E = E11: right E-reversible, not reversible", entry_c),
    ('d', "U_2(Z_3): right E1-reversible but not reflexive", entry_d),
    (
        'e',
        "H_(1,1)(R16), E = E11 + E21: right E-semicommutative, not right E-reversible",
        entry_e,
    ),
    ('f', "D_2(U_2(Z_3)): not right E-reversible", entry_f),
    ('g', "D_3(Z_2): not right I₃-reversible", entry_g),
    ('h', "V_3(Z_2): right I₃-reversible", entry_h),
    (
        'i',
        "U_2(Z_3), E = E22: directly finite, not prime, not right E-reversible",
        entry_i,
    ),
    (
        'j',
        "K_0(Z_3): no nonzero idempotent E makes it right E-reversible",
        entry_j,
    ),
    (
        'k',
        "T[M_2(Z_2), U_2(Z_2)], E = (e, e): not right E-reversible",
        entry_k,
    ),
];

/// Registry entries that could not run, with the reason.
pub type Skipped = Vec<(char, String)>;

/// Computes every registry check. Entries whose rings exceed `guards` are
/// returned as skip reasons instead.
pub fn registry_checks(guards: &Guards) -> Result<(Vec<Check>, Skipped)> {
    let mut book = Book { checks: Vec::new() };
    let mut skipped = Vec::new();
    for &(letter, _, f) in ENTRIES {
        let before = book.checks.len();
        match f(&mut book, guards) {
            Ok(()) => {}
            Err(e) if e.is_size_guard() => {
                book.checks.truncate(before);
                skipped.push((letter, e.to_string()));
            }
            Err(e) => return Err(e),
        }
    }
    Ok((book.checks, skipped))
}

pub(super) fn replicate(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    let (checks, skipped) = registry_checks(&ctx.guards)?;
    for &(letter, title, _) in ENTRIES {
        rep.note(format!("({letter}) {title}"));
    }
    for check in &checks {
        let status = match golden(check.id) {
            Some(want) if want == check.value => Status::Holds,
            want => Status::Violated {
                witness: check.witness.clone(),
                detail: match want {
                    Some(w) => format!("expected {w}, computed {}", check.value),
                    None => format!("no recorded value; computed {}", check.value),
                },
                replay: format!("idemring describe '{}'", check.ring),
            },
        };
        rep.push(Instance {
            ring: check.ring.clone(),
            idempotent: check.idempotent.clone(),
            status,
            note: Some(format!("{}: {} [{}]", check.id, check.what, check.value)),
        });
    }
    for (letter, reason) in skipped {
        rep.push(Instance {
            ring: format!("entry ({letter})"),
            idempotent: None,
            status: Status::Skipped { reason },
            note: None,
        });
    }
    // Every recorded value must have been computed unless its entry was skipped.
    for (id, want) in GOLDEN {
        let letter = id.chars().next().unwrap_or('?');
        let entry_ran = !rep.instances.iter().any(|i| i.ring == format!("entry ({letter})"));
        if entry_ran && !checks.iter().any(|c| c.id == *id) {
            rep.push(Instance {
                ring: format!("entry ({letter})"),
                idempotent: None,
                status: Status::Violated {
                    witness: Vec::new(),
                    detail: format!("{id} was not computed (recorded {want})"),
                    replay: String::new(),
                },
                note: None,
            });
        }
    }
    rep.note(idempotent_reflexive_separator(ctx)?);
    Ok(rep)
}

/// A corpus ring that is right idempotent reflexive but not right
/// e-reversible for some e, if there is one.
fn idempotent_reflexive_separator(ctx: &LawContext<'_>) -> Result<String> {
    for (_, a) in ctx.members() {
        let v = a.check_or_skip(Property::RightIdempotentReflexive, None)?;
        if v.holds() != Some(true) {
            continue;
        }
        for e in a.nonzero_idempotents() {
            if a.check_or_skip(Property::RightEReversible, Some(e))?.holds() == Some(false) {
                let r = a.ring();
                return Ok(format!(
                    "right idempotent reflexive but not right e-reversible: {} at {} ({})",
                    r.provenance(),
                    r.label(e),
                    replay_command(r, Property::RightEReversible, Some(e))
                ));
            }
        }
    }
    Ok("right idempotent reflexive but not right e-reversible: none found in the corpus".into())
}
