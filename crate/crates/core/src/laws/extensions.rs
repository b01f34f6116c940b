//! Laws relating a ring to a ring built from it.

use std::collections::BTreeSet;

use super::{known, mark, replay_command, violated, violated_by, Instance, Law, LawContext, LawReport, Status};
use crate::constructions::{direct_product, ideal_generated, matrix_label, subring, IdealHandle};
use crate::constructions::{gens_text, quotient_by};
use crate::dsl::{build, endomorphism, resolve, ElemLit, Expr};
use crate::error::{Error, Result};
use crate::predicates::{right_annihilator, Analysis, Property};
use crate::ring::RingTable;
use crate::span::generators_of;

/// Orders up to which the quotient laws enumerate ideals.
const QUOTIENT_ORDER: usize = 64;
/// Orders up to which corpus members are paired for the product law.
const PAIR_ORDER: usize = 8;

fn right_rev(a: &Analysis<'_>, e: usize) -> Result<std::result::Result<bool, String>> {
    let v = a.check_or_skip(Property::RightEReversible, Some(e))?;
    Ok(known(&[&v]).map(|b| b[0]))
}

fn resolve_all(r: &RingTable, lits: &[ElemLit]) -> Result<Vec<usize>> {
    lits.iter().map(|l| resolve(r, l)).collect()
}

pub(super) fn products(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    let mut pairs: Vec<(RingTable, RingTable)> = Vec::new();
    for (m, _) in ctx.members() {
        if let Expr::Prod(factors) = &m.expr {
            if factors.len() == 2 {
                pairs.push((build(&factors[0], &ctx.guards)?, build(&factors[1], &ctx.guards)?));
            }
        }
    }
    let small: Vec<&RingTable> = ctx
        .members()
        .map(|(_, a)| a.ring())
        .filter(|r| r.order() <= PAIR_ORDER)
        .collect();
    for i in 0..small.len() {
        for j in i..small.len() {
            pairs.push((small[i].clone(), small[j].clone()));
        }
    }
    for (r1, r2) in &pairs {
        let p = match direct_product(&[r1, r2], &ctx.guards) {
            Ok(p) => p,
            Err(err) if err.is_size_guard() => continue,
            Err(err) => return Err(err),
        };
        let (a1, a2, ap) = (
            Analysis::new(r1, ctx.guards),
            Analysis::new(r2, ctx.guards),
            Analysis::new(&p, ctx.guards),
        );
        let n2 = r2.order();
        // e = 0 in a factor is vacuously right reversible.
        let component = |a: &Analysis<'_>, e: usize| -> Result<std::result::Result<(bool, Vec<usize>), String>> {
            if e == a.ring().zero() {
                return Ok(Ok((true, Vec::new())));
            }
            let v = a.check_or_skip(Property::RightEReversible, Some(e))?;
            Ok(known(&[&v]).map(|b| (b[0], v.witness().map(|w| w.indices.clone()).unwrap_or_default())))
        };
        for &e1 in a1.idempotents() {
            for &e2 in a2.idempotents() {
                if e1 == r1.zero() && e2 == r2.zero() {
                    continue;
                }
                let e = e1 * n2 + e2;
                let status = match (component(&a1, e1)?, component(&a2, e2)?, right_rev(&ap, e)?) {
                    (Err(reason), _, _) | (_, Err(reason), _) | (_, _, Err(reason)) => Status::Skipped { reason },
                    (Ok((v1, w1)), Ok((v2, w2)), Ok(vp)) => {
                        let replay = || replay_command(&p, Property::RightEReversible, Some(e));
                        // A factor witness, lifted with zeros in the other coordinate.
                        let lifted: Option<Vec<usize>> = if !v1 {
                            Some(w1.iter().map(|&x| x * n2 + r2.zero()).collect())
                        } else if !v2 {
                            Some(w2.iter().map(|&y| r1.zero() * n2 + y).collect())
                        } else {
                            None
                        };
                        if vp != (v1 && v2) {
                            violated(
                                &p,
                                &[],
                                "product verdict differs from the componentwise conjunction",
                                replay(),
                            )
                        } else if let Some(w) = lifted
                            .filter(|w| !crate::predicates::replay_violates(&p, Property::RightEReversible, Some(e), w))
                        {
                            violated(&p, &w, "a factor witness does not lift to the product", replay())
                        } else {
                            Status::Holds
                        }
                    }
                };
                rep.push(Instance::new(&p, Some(e), status));
            }
        }
    }
    Ok(rep)
}

fn quotient_text(r: &RingTable, ideal: &IdealHandle<'_>) -> String {
    gens_text(r, &generators_of(r, ideal.members().iter().copied()))
}

pub(super) fn quotient_lift(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    for (_, a) in ctx.members() {
        let r = a.ring();
        if r.order() > QUOTIENT_ORDER {
            continue;
        }
        let mut seen = BTreeSet::new();
        for x in r.elements() {
            let ideal = ideal_generated(r, &[x]);
            if x == r.zero() || !ideal.is_proper() || !seen.insert(ideal.members().to_vec()) {
                continue;
            }
            let about = format!("I = ({}), |I| = {}", r.label(x), ideal.members().len());
            if !ideal.is_reduced() {
                rep.push(
                    Instance::new(
                        r,
                        None,
                        Status::NotApplicable {
                            reason: "I has a nonzero square-zero element".into(),
                        },
                    )
                    .with_note(about),
                );
                continue;
            }
            let text = quotient_text(r, &ideal);
            let q = quotient_by(r, ideal, text)?;
            let qa = Analysis::new(&q.ring, ctx.guards);
            for e in a.nonzero_idempotents() {
                let bar = q.projection[e];
                let hypothesis = if bar == q.ring.zero() {
                    Ok(true)
                } else {
                    right_rev(&qa, bar)?
                };
                let status = match hypothesis {
                    Err(reason) => Status::Skipped { reason },
                    Ok(false) => Status::NotApplicable {
                        reason: "R/I is not right ē-reversible".into(),
                    },
                    Ok(true) => match right_rev(a, e)? {
                        Err(reason) => Status::Skipped { reason },
                        Ok(rev) => {
                            let replay = replay_command(r, Property::RightEReversible, Some(e));
                            if !rev {
                                let v = a.check(Property::RightEReversible, Some(e))?;
                                violated_by(r, &v, Some(e), "hypotheses hold but R is not right e-reversible")
                            } else if !a.is_left_semicentral(e) {
                                violated(r, &[e], "hypotheses hold but e is not left semicentral", replay)
                            } else {
                                Status::Holds
                            }
                        }
                    },
                };
                let note = if bar == q.ring.zero() {
                    format!("{about}; ē = 0")
                } else {
                    about.clone()
                };
                rep.push(Instance::new(r, Some(e), status).with_note(note));
            }
        }
    }
    Ok(rep)
}

pub(super) fn annihilator_quotient(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    for (_, a) in ctx.members() {
        let r = a.ring();
        if r.order() > QUOTIENT_ORDER {
            continue;
        }
        for e in a.nonzero_idempotents() {
            let sym = a.check_or_skip(Property::ESymmetric, Some(e))?;
            match sym.holds() {
                None => {
                    let reason = known(&[&sym]).unwrap_err();
                    rep.push(Instance::new(r, Some(e), Status::Skipped { reason }));
                    continue;
                }
                Some(false) => {
                    rep.push(Instance::new(
                        r,
                        Some(e),
                        Status::NotApplicable {
                            reason: "not e-symmetric".into(),
                        },
                    ));
                    continue;
                }
                Some(true) => {}
            }
            let mut seen = BTreeSet::new();
            for j in r.elements() {
                let members = right_annihilator(r, &[j])?;
                if !seen.insert(members.clone()) {
                    continue;
                }
                let about = format!("J = {{{}}}, |r(J)| = {}", r.label(j), members.len());
                let status = match IdealHandle::from_members(r, members) {
                    Err(_) => Status::NotApplicable {
                        reason: "r(J) is not a two-sided ideal".into(),
                    },
                    Ok(ideal) if !ideal.is_proper() => Status::NotApplicable {
                        reason: "r(J) = R".into(),
                    },
                    Ok(ideal) => {
                        let text = quotient_text(r, &ideal);
                        let q = quotient_by(r, ideal, text)?;
                        let bar = q.projection[e];
                        if bar == q.ring.zero() {
                            Status::NotApplicable {
                                reason: "ē = 0".into()
                            }
                        } else {
                            let qa = Analysis::new(&q.ring, ctx.guards);
                            let v = qa.check_or_skip(Property::RightEReversible, Some(bar))?;
                            match v.holds() {
                                None => Status::Skipped {
                                    reason: known(&[&v]).unwrap_err(),
                                },
                                Some(true) => Status::Holds,
                                Some(false) => violated_by(&q.ring, &v, Some(bar), "R/r(J) is not right ē-reversible"),
                            }
                        }
                    }
                };
                rep.push(Instance::new(r, Some(e), status).with_note(about));
            }
        }
    }
    Ok(rep)
}

/// A subring given by generators, with its members ascending.
fn subring_members(r: &RingTable, gens: &[ElemLit]) -> Result<Vec<usize>> {
    Ok(subring(r, &resolve_all(r, gens)?).members().to_vec())
}

pub(super) fn dorroh_law(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    for (m, da) in ctx.members() {
        let Expr::Dorroh { base, sub } = &m.expr else {
            continue;
        };
        let d = da.ring();
        let r = build(base, &ctx.guards)?;
        let s = subring_members(&r, sub)?;
        let ns = s.len();
        // (a, b) sits at index a·|S| + k where b = s[k].
        let at = |x: usize, k: usize| x * ns + k;
        if d.label(at(r.one(), 0)) != format!("({},{})", r.label(r.one()), r.label(s[0])) {
            return Err(Error::InvalidArgument("unexpected Dorroh element order".into()));
        }
        let mismatch = r.elements().find_map(|x| {
            s.iter().enumerate().find_map(|(k, &b)| {
                let lhs = d.is_idempotent(at(x, k));
                let rhs = r.is_idempotent(r.add(x, b)) && r.is_idempotent(b);
                (lhs != rhs).then_some(at(x, k))
            })
        });
        let status = match mismatch {
            Some(w) => violated(
                d,
                &[w],
                "idempotence of (a, b) differs from a + b ∈ Id(R), b ∈ Id(S)",
                format!("idemring describe '{}'", d.provenance()),
            ),
            None => Status::Holds,
        };
        rep.push(
            Instance::new(d, None, status).with_note(format!("idempotent characterization over {} pairs", d.order())),
        );

        let ra = Analysis::new(&r, ctx.guards);
        let zero_k = s
            .binary_search(&r.zero())
            .map_err(|_| Error::InvalidArgument("subring without zero".into()))?;
        for e in ra.nonzero_idempotents() {
            let lifted = at(e, zero_k);
            let status = match (right_rev(&ra, e)?, right_rev(da, lifted)?) {
                (Err(reason), _) | (_, Err(reason)) => Status::Skipped { reason },
                (Ok(x), Ok(y)) if x == y => Status::Holds,
                (Ok(x), Ok(_)) => {
                    let v = if x {
                        da.check(Property::RightEReversible, Some(lifted))?
                    } else {
                        ra.check(Property::RightEReversible, Some(e))?
                    };
                    let ring = if x { d } else { &r };
                    let idem = if x { lifted } else { e };
                    violated_by(ring, &v, Some(idem), "R at e and D(R, S) at (e, 0) disagree")
                }
            };
            rep.push(Instance::new(d, Some(lifted), status).with_note(format!("e = {}", r.label(e))));
        }
    }
    Ok(rep)
}

pub(super) fn trs_law(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    const MAX_TUPLES: usize = 4096;
    let mut rep = LawReport::new(law);
    for (m, ta) in ctx.members() {
        let Expr::Trs { base, sub, n } = &m.expr else {
            continue;
        };
        let t = ta.ring();
        let r = build(base, &ctx.guards)?;
        let s = subring_members(&r, sub)?;
        let ra = Analysis::new(&r, ctx.guards);
        let ids_r: Vec<usize> = ra.idempotents().to_vec();
        let ids_s: Vec<usize> = (0..s.len()).filter(|&k| r.is_idempotent(s[k])).collect();
        let count = ids_r
            .len()
            .checked_pow(*n as u32)
            .and_then(|c| c.checked_mul(ids_s.len()));
        if count.is_none_or(|c| c > MAX_TUPLES) {
            rep.push(Instance::new(
                t,
                None,
                Status::Skipped {
                    reason: format!("more than {MAX_TUPLES} idempotent tuples"),
                },
            ));
            continue;
        }
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..*n {
            tuples = tuples
                .into_iter()
                .flat_map(|tuple| {
                    ids_r.iter().map(move |&x| {
                        let mut next = tuple.clone();
                        next.push(x);
                        next
                    })
                })
                .collect();
        }
        for tuple in &tuples {
            for &k0 in &ids_s {
                if tuple.iter().chain([&s[k0]]).all(|&x| x == r.zero()) {
                    continue;
                }
                let idx = tuple.iter().fold(0, |acc, &x| acc * r.order() + x) * s.len() + k0;
                // Prefix coordinates are judged in R, the tail in S.
                let mut parts = Vec::new();
                let mut skip = None;
                for &x in tuple {
                    if x == r.zero() {
                        parts.push(true);
                        continue;
                    }
                    match right_rev(&ra, x)? {
                        Ok(b) => parts.push(b),
                        Err(reason) => skip = Some(reason),
                    }
                }
                let tail_r = if s[k0] == r.zero() {
                    Ok(true)
                } else {
                    right_rev(&ra, s[k0])?
                };
                parts.push(subset_right_reversible(&r, &s, s[k0]));
                // With e_n = e_0 the tail condition may be read in R instead.
                let repeated = tuple.last() == Some(&s[k0]);
                let status = match (skip, right_rev(ta, idx)?, tail_r) {
                    (Some(reason), _, _) | (_, Err(reason), _) | (_, _, Err(reason)) => Status::Skipped { reason },
                    (None, Ok(whole), Ok(in_r_tail))
                        if whole == parts.iter().all(|&b| b)
                            && (!repeated || whole == (parts[..*n].iter().all(|&b| b) && in_r_tail)) =>
                    {
                        Status::Holds
                    }
                    (None, Ok(_), Ok(_)) => violated(
                        t,
                        &[idx],
                        "T[R, S] verdict differs from the coordinatewise conjunction",
                        replay_command(t, Property::RightEReversible, Some(idx)),
                    ),
                };
                let inst = Instance::new(t, Some(idx), status);
                let inst = if repeated {
                    inst.with_note("e_n = e_0: tail read in R")
                } else {
                    inst
                };
                rep.push(inst);
            }
        }
    }
    Ok(rep)
}

/// Right e-reversibility of the subring with elements `s`, by brute force.
fn subset_right_reversible(r: &RingTable, s: &[usize], e: usize) -> bool {
    s.iter()
        .all(|&a| s.iter().all(|&b| !r.is_zero(r.mul(a, b)) || r.is_zero(r.mul3(b, a, e))))
}

/// The idempotents listed for `H_(s,t)(R)` as `(name, [a, c, d, f, g])`.
fn h_family(r: &RingTable, e: usize, s: usize, t: usize) -> Vec<(&'static str, [usize; 5])> {
    let z = r.zero();
    let neg_e = r.neg(e);
    let s_inv = r.inverse(s).unwrap_or(s);
    let t_inv = r.inverse(t).unwrap_or(t);
    let ms = r.neg(r.mul(s_inv, e));
    let tf = r.mul(t_inv, e);
    let ei3 = ("eI3", [e, z, e, z, e]);
    let f1 = ("F1", [e, z, e, e, z]);
    let f2 = ("F2", [z, ms, e, z, e]);
    let g1 = ("G1", [e, z, e, tf, z]);
    match (s == r.one(), t == r.one()) {
        (true, true) => vec![
            ei3,
            ("E1", [e, e, z, z, z]),
            ("E2", [z, z, z, neg_e, e]),
            ("E3", [e, e, z, neg_e, e]),
            ("E4", [z, neg_e, e, e, z]),
            ("E5", [e, z, e, e, z]),
            ("E6", [z, neg_e, e, z, e]),
        ],
        (false, true) => vec![ei3, f1, f2],
        (true, false) => vec![ei3, g1, ("G2", [z, neg_e, e, z, e])],
        (false, false) => vec![ei3, ("H1", f2.1), ("H2", g1.1), ("H3", [z, ms, e, tf, z])],
    }
}

pub(super) fn h_ring_law(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    for (m, ha) in ctx.members() {
        let Expr::H { base, s, t } = &m.expr else {
            continue;
        };
        let h = ha.ring();
        let r = build(base, &ctx.guards)?;
        let (s, t) = (resolve(&r, s)?, resolve(&r, t)?);
        let ra = Analysis::new(&r, ctx.guards);
        let mut covered = BTreeSet::new();
        for e in ra.nonzero_idempotents() {
            let base_rev = right_rev(&ra, e)?;
            let mut all = Ok(true);
            let mut ei3 = None;
            for (name, [a, c, d, f, g]) in h_family(&r, e, s, t) {
                let z = r.zero();
                let label = matrix_label(&r, 3, &[a, z, z, c, d, f, z, z, g]);
                let Some(idx) = h.index_of(&label) else {
                    rep.push(
                        Instance::new(
                            h,
                            None,
                            violated(h, &[], format!("{label} is not an element"), String::new()),
                        )
                        .with_note(format!("{name}, e = {}", r.label(e))),
                    );
                    all = Err("listed matrix missing".to_string());
                    continue;
                };
                covered.insert(idx);
                if name == "eI3" {
                    ei3 = Some(idx);
                }
                let replay = replay_command(h, Property::RightEReversible, Some(idx));
                if !h.is_idempotent(idx) {
                    rep.push(
                        Instance::new(h, None, violated(h, &[idx], "listed matrix is not idempotent", replay))
                            .with_note(format!("{name}, e = {}", r.label(e))),
                    );
                    all = Err("listed matrix not idempotent".to_string());
                    continue;
                }
                let h_rev = right_rev(ha, idx)?;
                if let (Ok(acc), Ok(v)) = (&all, &h_rev) {
                    all = Ok(*acc && *v);
                } else if let Err(reason) = &h_rev {
                    all = Err(reason.clone());
                }
                let status = match (&base_rev, &h_rev) {
                    (Err(reason), _) | (_, Err(reason)) => Status::Skipped { reason: reason.clone() },
                    (Ok(true), Ok(false)) => {
                        let v = ha.check(Property::RightEReversible, Some(idx))?;
                        violated_by(
                            h,
                            &v,
                            Some(idx),
                            "R is right e-reversible but H is not right E-reversible",
                        )
                    }
                    (Ok(false), Ok(true)) if name == "eI3" => {
                        let v = ra.check(Property::RightEReversible, Some(e))?;
                        violated_by(
                            &r,
                            &v,
                            Some(e),
                            "H is right eI₃-reversible but R is not right e-reversible",
                        )
                    }
                    _ => Status::Holds,
                };
                let note = format!(
                    "{name}, e = {}: R {} H {}",
                    r.label(e),
                    base_rev.as_ref().map_or("–", |b| mark(*b)),
                    h_rev.as_ref().map_or("–", |b| mark(*b))
                );
                rep.push(Instance::new(h, Some(idx), status).with_note(note));
            }
            // R at e against the whole listed family.
            let status = match (&base_rev, &all) {
                (Err(reason), _) | (_, Err(reason)) => Status::Skipped { reason: reason.clone() },
                (Ok(x), Ok(y)) if x == y => Status::Holds,
                _ => violated(
                    h,
                    &[],
                    "R at e and H on the whole listed family disagree",
                    replay_command(&r, Property::RightEReversible, Some(e)),
                ),
            };
            rep.push(Instance::new(h, ei3, status).with_note(format!("all listed E, e = {}", r.label(e))));
        }
        let total = ha.nonzero_idempotents().count();
        rep.note(format!(
            "{}: {} nonzero idempotents, {} of them listed",
            h.provenance(),
            total,
            covered.len()
        ));
    }
    Ok(rep)
}

pub(super) fn twisted_law(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    for (m, ta) in ctx.members() {
        let Expr::Twist { base, hom } = &m.expr else {
            continue;
        };
        let t = ta.ring();
        let r = build(base, &ctx.guards)?;
        let sigma = endomorphism(&r, hom)?;
        let ra = Analysis::new(&r, ctx.guards);
        for e in ra.nonzero_idempotents() {
            let z = r.zero();
            let Some(idx) = t.index_of(&matrix_label(&r, 2, &[e, z, z, e])) else {
                return Err(Error::InvalidArgument(
                    "eI₂ missing from the skew triangular ring".into(),
                ));
            };
            let kills = sigma.apply(e) == z;
            let status = match (right_rev(ta, idx)?, right_rev(&ra, e)?) {
                (Err(reason), _) | (_, Err(reason)) => Status::Skipped { reason },
                (Ok(true), Ok(false)) => {
                    let v = ra.check(Property::RightEReversible, Some(e))?;
                    violated_by(
                        &r,
                        &v,
                        Some(e),
                        "U₂(R)_σ is right eI₂-reversible but R is not right e-reversible",
                    )
                }
                (Ok(false), Ok(true)) if kills => {
                    let v = ta.check(Property::RightEReversible, Some(idx))?;
                    violated_by(
                        t,
                        &v,
                        Some(idx),
                        "σ(e) = 0 and R is right e-reversible, yet U₂(R)_σ is not",
                    )
                }
                _ => Status::Holds,
            };
            let note = if kills {
                format!("e = {}; σ(e) = 0, both directions", r.label(e))
            } else {
                format!("e = {}; σ(e) ≠ 0, forward direction only", r.label(e))
            };
            rep.push(Instance::new(t, Some(idx), status).with_note(note));
        }
    }
    Ok(rep)
}
