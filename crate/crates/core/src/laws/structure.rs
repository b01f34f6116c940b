//! Laws about a single ring and its idempotents.

use super::{known, mark, replay_command, violated, violated_by, Instance, Law, LawContext, LawReport, Status};
use crate::constructions::corner;
use crate::error::Result;
use crate::predicates::{Analysis, Property, PropertyVerdict};
use crate::ring::RingTable;

/// Right e-reversibility, or `None` with the skip reason.
fn right_rev(a: &Analysis<'_>, e: usize) -> Result<std::result::Result<bool, String>> {
    let v = a.check_or_skip(Property::RightEReversible, Some(e))?;
    Ok(known(&[&v]).map(|b| b[0]))
}

/// Least `x` with `xe ≠ exe` (left) or `ex ≠ exe` (right).
fn semicentral_witness(r: &RingTable, e: usize, left: bool) -> Option<usize> {
    r.elements().find(|&x| {
        let side = if left { r.mul(x, e) } else { r.mul(e, x) };
        side != r.mul3(e, x, e)
    })
}

pub(super) fn ere(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    for (_, a) in ctx.members() {
        let r = a.ring();
        for e in a.nonzero_idempotents() {
            let c = corner(r, e)?;
            let ca = Analysis::new(&c.ring, ctx.guards);
            let crev = ca.check_or_skip(Property::Reversible, None)?;
            let right = a.check_or_skip(Property::RightEReversible, Some(e))?;
            let left = a.check_or_skip(Property::LeftEReversible, Some(e))?;
            let (ls, rs) = (a.is_left_semicentral(e), a.is_right_semicentral(e));
            let (status, note) = match known(&[&right, &left, &crev]) {
                Err(reason) => (Status::Skipped { reason }, None),
                Ok(v) => {
                    let (rr, lr, cr) = (v[0], v[1], v[2]);
                    let mut status = Status::Holds;
                    for (holds, semi, verdict, side) in [(rr, ls, &right, true), (lr, rs, &left, false)] {
                        if holds == (semi && cr) {
                            continue;
                        }
                        let which = if side { "right" } else { "left" };
                        status = if !holds {
                            violated_by(
                                r,
                                verdict,
                                Some(e),
                                format!("not {which} e-reversible, yet the corner criterion holds"),
                            )
                        } else if !semi {
                            let x = semicentral_witness(r, e, side).unwrap_or(r.zero());
                            violated(
                                r,
                                &[x],
                                format!("{which} e-reversible, yet e is not {which} semicentral"),
                                replay_command(r, verdict.property, Some(e)),
                            )
                        } else {
                            violated_by(
                                &c.ring,
                                &crev,
                                None,
                                format!("{which} e-reversible, yet eRe is not reversible"),
                            )
                        };
                        break;
                    }
                    let note = format!(
                        "right {} left {}; semicentral left {} right {}; eRe reversible {}",
                        mark(rr),
                        mark(lr),
                        mark(ls),
                        mark(rs),
                        mark(cr)
                    );
                    (status, Some(note))
                }
            };
            let mut inst = Instance::new(r, Some(e), status);
            inst.note = note;
            rep.push(inst);
        }
    }
    Ok(rep)
}

const CHAIN: [Property; 4] = [
    Property::RightEReduced,
    Property::ESymmetric,
    Property::RightEReversible,
    Property::RightESemicommutative,
];

struct ChainOutcome {
    status: Status,
    note: String,
    /// Steps `k` (premise `CHAIN[k]`, conclusion `CHAIN[k+1]`) where the
    /// conclusion holds and the premise does not.
    separated: Vec<usize>,
}

/// Evaluates the chain steps listed in `steps`.
fn chain_at(a: &Analysis<'_>, e: usize, steps: &[usize]) -> Result<ChainOutcome> {
    let r = a.ring();
    let mut needed = [false; 4];
    for &k in steps {
        needed[k] = true;
        needed[k + 1] = true;
    }
    let mut verdicts: Vec<Option<PropertyVerdict>> = Vec::new();
    for (k, p) in CHAIN.iter().enumerate() {
        verdicts.push(if needed[k] {
            Some(a.check_or_skip(*p, Some(e))?)
        } else {
            None
        });
    }
    let value = |k: usize| verdicts[k].as_ref().and_then(|v| v.holds());
    let mut status = None;
    let mut skipped = None;
    let mut separated = Vec::new();
    for &k in steps {
        match (value(k), value(k + 1)) {
            (Some(true), Some(false)) => {
                let v = verdicts[k + 1].as_ref().unwrap();
                status.get_or_insert_with(|| {
                    violated_by(r, v, Some(e), format!("{} holds but {} fails", CHAIN[k], CHAIN[k + 1]))
                });
            }
            (Some(false), Some(true)) => separated.push(k),
            (Some(_), Some(_)) => {}
            _ => {
                let v = [k, k + 1]
                    .into_iter()
                    .filter_map(|i| verdicts[i].as_ref())
                    .find(|v| v.holds().is_none())
                    .unwrap();
                skipped.get_or_insert_with(|| known(&[v]).unwrap_err());
            }
        }
    }
    let status = status.unwrap_or(match skipped {
        Some(reason) => Status::Skipped { reason },
        None => Status::Holds,
    });
    let note = CHAIN
        .iter()
        .enumerate()
        .filter(|(k, _)| needed[*k])
        .map(|(k, p)| format!("{} {}", p.short(), value(k).map_or("–", mark)))
        .collect::<Vec<_>>()
        .join(" ");
    Ok(ChainOutcome {
        status,
        note,
        separated,
    })
}

pub(super) fn chain(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    let mut separators: [Option<String>; 3] = Default::default();
    for (_, a) in ctx.members() {
        let r = a.ring();
        for e in a.nonzero_idempotents() {
            let out = chain_at(a, e, &[0, 1, 2])?;
            for &k in &out.separated {
                separators[k].get_or_insert_with(|| format!("{} at {}", r.provenance(), r.label(e)));
            }
            rep.push(Instance::new(r, Some(e), out.status).with_note(out.note));
        }
    }
    // The semicommutative but not reversible H-ring example; only the last
    // step is evaluated at this size.
    let mut h_note = None;
    match super::h_r16() {
        Ok(h) if ctx.guards.check_pair("H ring", h.ring.order()).is_ok() => {
            let a = Analysis::new(&h.ring, ctx.guards);
            let out = chain_at(&a, h.e, &[2])?;
            if out.separated.contains(&2) {
                h_note = Some(format!(
                    "{} ⟹ {} is also strict on H_(1,1)(R16) at E = {} (example registry entry e)",
                    CHAIN[2],
                    CHAIN[3],
                    h.ring.label(h.e)
                ));
            }
            rep.push(Instance::new(&h.ring, Some(h.e), out.status).with_note(out.note));
        }
        Ok(h) => rep.push(Instance::new(
            &h.ring,
            Some(h.e),
            Status::Skipped {
                reason: format!("order {} exceeds the pair guard", h.ring.order()),
            },
        )),
        Err(e) => return Err(e),
    }
    for (k, sep) in separators.iter().enumerate() {
        let step = format!("{} ⟹ {}", CHAIN[k], CHAIN[k + 1]);
        rep.note(match sep {
            Some(at) => format!("{step}: strict, first separated by {at}"),
            None => format!("{step}: not separated in the corpus"),
        });
    }
    if let Some(n) = h_note {
        rep.note(n);
    }
    Ok(rep)
}

pub(super) fn one_reversible(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    for (_, a) in ctx.members() {
        let r = a.ring();
        let one = r.one();
        let right = a.check_or_skip(Property::RightEReversible, Some(one))?;
        let left = a.check_or_skip(Property::LeftEReversible, Some(one))?;
        let status = match (
            known(&[&right, &left]),
            ctx.guards.check_pair("reversibility scan", r.order()),
        ) {
            (Err(reason), _) => Status::Skipped { reason },
            (_, Err(err)) => Status::Skipped {
                reason: err.to_string(),
            },
            (Ok(v), Ok(())) => {
                // Direct scan for ab = 0, ba ≠ 0.
                let witness = r.elements().find_map(|x| {
                    r.elements()
                        .find(|&y| r.is_zero(r.mul(x, y)) && !r.is_zero(r.mul(y, x)))
                        .map(|y| [x, y])
                });
                let direct = witness.is_none();
                if v[0] != direct {
                    violated_by(
                        r,
                        &right,
                        Some(one),
                        "right 1-reversibility disagrees with the direct scan",
                    )
                } else if v[1] != direct {
                    violated_by(
                        r,
                        &left,
                        Some(one),
                        "left 1-reversibility disagrees with the direct scan",
                    )
                } else {
                    Status::Holds
                }
            }
        };
        rep.push(Instance::new(r, None, status));
    }
    Ok(rep)
}

/// Runs `check` on every right e-reversible instance; other instances are
/// not applicable.
fn on_right_reversible(
    law: &Law,
    ctx: &LawContext<'_>,
    mut check: impl FnMut(&Analysis<'_>, usize) -> Result<Status>,
) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    for (_, a) in ctx.members() {
        let r = a.ring();
        for e in a.nonzero_idempotents() {
            let status = match right_rev(a, e)? {
                Err(reason) => Status::Skipped { reason },
                Ok(false) => Status::NotApplicable {
                    reason: "not right e-reversible".into(),
                },
                Ok(true) => check(a, e)?,
            };
            rep.push(Instance::new(r, Some(e), status));
        }
    }
    Ok(rep)
}

pub(super) fn eae(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    on_right_reversible(law, ctx, |a, e| {
        let r = a.ring();
        for x in r.elements() {
            if !r.is_zero(r.mul(e, x)) && !r.is_zero(r.mul(x, e)) {
                continue;
            }
            if let Some(&g) = a.additive_generators().iter().find(|&&g| !r.is_zero(r.mul3(x, g, e))) {
                return Ok(violated(
                    r,
                    &[x, g],
                    "ea = 0 or ae = 0, yet a·r·e ≠ 0",
                    replay_command(r, Property::RightEReversible, Some(e)),
                ));
            }
        }
        Ok(Status::Holds)
    })
}

pub(super) fn hab1(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = on_right_reversible(law, ctx, |a, e| {
        let r = a.ring();
        let gens = a.additive_generators();
        for x in r.elements() {
            let in_right_ann = gens.iter().all(|&g| r.is_zero(r.mul3(e, g, x)));
            let in_left_ann = gens.iter().all(|&g| r.is_zero(r.mul3(x, g, e)));
            if in_right_ann && !in_left_ann {
                return Ok(violated(
                    r,
                    &[x],
                    "x ∈ r(eR) but x ∉ l(Re)",
                    replay_command(r, Property::RightEReversible, Some(e)),
                ));
            }
        }
        Ok(Status::Holds)
    })?;
    // The containment does not give back reversibility; record the first
    // corpus instance showing that.
    let mut converse = None;
    'outer: for (_, a) in ctx.members() {
        let r = a.ring();
        let gens = a.additive_generators();
        for e in a.nonzero_idempotents() {
            let contained = r.elements().all(|x| {
                !gens.iter().all(|&g| r.is_zero(r.mul3(e, g, x))) || gens.iter().all(|&g| r.is_zero(r.mul3(x, g, e)))
            });
            if contained && right_rev(a, e)? == Ok(false) {
                converse = Some(format!("{} at {}", r.provenance(), r.label(e)));
                break 'outer;
            }
        }
    }
    rep.note(match converse {
        Some(at) => format!("containment without right e-reversibility: {at}"),
        None => "containment without right e-reversibility: none in the corpus".into(),
    });
    Ok(rep)
}

pub(super) fn corner_abelian(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    on_right_reversible(law, ctx, |a, e| {
        let r = a.ring();
        let c = corner(r, e)?;
        let abelian = Analysis::new(&c.ring, ctx.guards).check_or_skip(Property::Abelian, None)?;
        match abelian.holds() {
            None => {
                return Ok(Status::Skipped {
                    reason: known(&[&abelian]).unwrap_err(),
                })
            }
            Some(false) => return Ok(violated_by(&c.ring, &abelian, None, "eRe is not abelian")),
            Some(true) => {}
        }
        let replay = || replay_command(r, Property::RightEReversible, Some(e));
        for &f in a.idempotents() {
            if let Some(&g) = a
                .additive_generators()
                .iter()
                .find(|&&g| r.mul3(g, f, e) != r.mul3(f, g, e))
            {
                return Ok(violated(r, &[g, f], "afe ≠ fae", replay()));
            }
            if r.mul3(e, f, e) == f && !a.is_left_semicentral(f) {
                return Ok(violated(
                    r,
                    &[f],
                    "idempotent of eRe that is not left semicentral",
                    replay(),
                ));
            }
        }
        Ok(Status::Holds)
    })
}

pub(super) fn bul(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    for (_, a) in ctx.members() {
        let r = a.ring();
        if let Err(err) = ctx.guards.check_pair("idempotent-product scan", r.order()) {
            rep.push(Instance::new(
                r,
                None,
                Status::Skipped {
                    reason: err.to_string(),
                },
            ));
            continue;
        }
        let pairs: Vec<(usize, usize)> = r
            .elements()
            .flat_map(|x| r.elements().map(move |y| (x, y)))
            .filter(|&(x, y)| r.is_idempotent(r.mul(x, y)))
            .collect();
        for e in a.nonzero_idempotents() {
            let rev = match right_rev(a, e)? {
                Ok(b) => b,
                Err(reason) => {
                    rep.push(Instance::new(r, Some(e), Status::Skipped { reason }));
                    continue;
                }
            };
            let bad2 = pairs.iter().find(|&&(x, y)| !r.is_idempotent(r.mul3(y, x, e)));
            let second = bad2.is_none() && a.is_left_semicentral(e);
            let bad3 = pairs.iter().find(|&&(x, y)| r.mul3(x, y, e) != r.mul3(y, x, e));
            let third = bad3.is_none();
            let replay = || replay_command(r, Property::RightEReversible, Some(e));
            let status = if rev == second && rev == third {
                Status::Holds
            } else if rev {
                let (x, y) = *bad2.or(bad3).unwrap_or(&(r.zero(), r.zero()));
                violated(
                    r,
                    &[x, y],
                    "right e-reversible, yet an idempotent-product condition fails",
                    replay(),
                )
            } else {
                violated(
                    r,
                    &[],
                    "not right e-reversible, yet both idempotent-product conditions hold",
                    replay(),
                )
            };
            rep.push(Instance::new(r, Some(e), status));
        }
    }
    Ok(rep)
}

pub(super) fn semiprime_collapse(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    let props = [
        Property::RightEReversible,
        Property::RightEReduced,
        Property::ESymmetric,
        Property::RightESemicommutative,
    ];
    for (_, a) in ctx.members() {
        let r = a.ring();
        let sp = a.check_or_skip(Property::Semiprime, None)?;
        match sp.holds() {
            None => {
                rep.push(Instance::new(
                    r,
                    None,
                    Status::Skipped {
                        reason: known(&[&sp]).unwrap_err(),
                    },
                ));
                continue;
            }
            Some(false) => {
                let w = sp.witness().map(|w| w.labels.join(", ")).unwrap_or_default();
                rep.push(Instance::new(
                    r,
                    None,
                    Status::NotApplicable {
                        reason: format!("not semiprime: aRa = 0 for a = {w}"),
                    },
                ));
                continue;
            }
            Some(true) => {}
        }
        for e in a.nonzero_idempotents() {
            let vs = props
                .iter()
                .map(|&p| a.check_or_skip(p, Some(e)))
                .collect::<Result<Vec<_>>>()?;
            let values: Vec<Option<bool>> = vs.iter().map(PropertyVerdict::holds).collect();
            let decided: Vec<bool> = values.iter().flatten().copied().collect();
            let note = props
                .iter()
                .zip(&values)
                .map(|(p, v)| format!("{} {}", p.short(), v.map_or("–", mark)))
                .collect::<Vec<_>>()
                .join(" ");
            let status = if decided.iter().all(|&b| b == decided[0]) {
                Status::Holds
            } else {
                let failing = vs.iter().find(|v| v.holds() == Some(false)).unwrap();
                violated_by(r, failing, Some(e), "the four properties disagree on a semiprime ring")
            };
            rep.push(Instance::new(r, Some(e), status).with_note(note));
        }
    }
    Ok(rep)
}

pub(super) fn e_and_complement(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    let mut reversible_not_reduced = None;
    for (_, a) in ctx.members() {
        let r = a.ring();
        let mut chosen = None;
        for e in a.nonzero_idempotents() {
            let f = r.sub(r.one(), e);
            if e == r.one() || r.is_zero(f) {
                continue;
            }
            if right_rev(a, e)? == Ok(true) && right_rev(a, f)? == Ok(true) {
                chosen = Some(e);
                break;
            }
        }
        let Some(e) = chosen else {
            rep.push(Instance::new(
                r,
                None,
                Status::NotApplicable {
                    reason: "no idempotent e ∉ {0, 1} with R right e- and right (1-e)-reversible".into(),
                },
            ));
            continue;
        };
        let vs = [Property::Semiprime, Property::Reduced, Property::Reversible]
            .iter()
            .map(|&p| a.check_or_skip(p, None))
            .collect::<Result<Vec<_>>>()?;
        // Checked: semiprime ⟺ reduced, reduced ⟹ reversible. The step
        // reversible ⟹ reduced is only tallied.
        let status = match known(&vs.iter().collect::<Vec<_>>()) {
            Err(reason) => Status::Skipped { reason },
            Ok(v) if v[0] == v[1] && (!v[1] || v[2]) => {
                if v[2] && !v[1] && reversible_not_reduced.is_none() {
                    reversible_not_reduced = Some(format!("{} at {}", r.provenance(), r.label(e)));
                }
                Status::Holds
            }
            Ok(v) => {
                let failing = if v[0] != v[1] { &vs[usize::from(v[0])] } else { &vs[2] };
                violated_by(r, failing, None, "semiprime ⟺ reduced ⟹ reversible fails")
            }
        };
        let note = vs
            .iter()
            .map(|v| format!("{} {}", v.property.short(), v.holds().map_or("–", mark)))
            .collect::<Vec<_>>()
            .join(" ");
        rep.push(Instance::new(r, Some(e), status).with_note(note));
    }
    rep.note(match reversible_not_reduced {
        Some(at) => {
            format!("reversible ⟹ reduced does not follow from the hypotheses: {at} is reversible, not reduced")
        }
        None => "reversible ⟹ reduced: no counterexample in the corpus".into(),
    });
    Ok(rep)
}

pub(super) fn prime_domain(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    for (_, a) in ctx.members() {
        let r = a.ring();
        let prime = a.check_or_skip(Property::Prime, None)?;
        let domain = a.check_or_skip(Property::Domain, None)?;
        let finite = a.check_or_skip(Property::DirectlyFinite, None)?;
        let mut reversible_at = None;
        let mut skip = None;
        for e in a.nonzero_idempotents() {
            match right_rev(a, e)? {
                Ok(true) => {
                    reversible_at = Some(e);
                    break;
                }
                Ok(false) => {}
                Err(reason) => {
                    skip.get_or_insert(reason);
                }
            }
        }
        let status = match (known(&[&prime, &domain, &finite]), &skip) {
            (Err(reason), _) => Status::Skipped { reason },
            (Ok(_), Some(reason)) if reversible_at.is_none() => Status::Skipped { reason: reason.clone() },
            (Ok(v), _) => {
                let (p, d, f) = (v[0], v[1], v[2]);
                let lhs = p && reversible_at.is_some();
                if lhs != d {
                    let v = if d { &prime } else { &domain };
                    violated_by(
                        r,
                        v,
                        None,
                        "prime with a right e-reversible e ≠ 0 does not match domain",
                    )
                } else if lhs && !f {
                    violated_by(
                        r,
                        &finite,
                        None,
                        "right e-reversible prime ring that is not directly finite",
                    )
                } else {
                    Status::Holds
                }
            }
        };
        let note = format!(
            "prime {} domain {} directly finite {}; right e-reversible for {}",
            prime.holds().map_or("–", mark),
            domain.holds().map_or("–", mark),
            finite.holds().map_or("–", mark),
            reversible_at.map_or("no e".to_string(), |e| format!("e = {}", r.label(e)))
        );
        rep.push(Instance::new(r, None, status).with_note(note));
    }
    Ok(rep)
}

pub(super) fn min_abel(law: &Law, ctx: &LawContext<'_>) -> Result<LawReport> {
    let mut rep = LawReport::new(law);
    for (_, a) in ctx.members() {
        let r = a.ring();
        let abel = a.check_or_skip(Property::LeftMinAbel, None)?;
        let me = a.minimal_left_idempotents().to_vec();
        let mut rev_fail = None;
        let mut sym_fail = None;
        let mut rev_skip = None;
        let mut sym_skip = false;
        for &f in &me {
            let v = a.check_or_skip(Property::RightEReversible, Some(f))?;
            match v.holds() {
                Some(false) => {
                    rev_fail.get_or_insert((f, v));
                }
                None => {
                    rev_skip.get_or_insert(known(&[&v]).unwrap_err());
                }
                Some(true) => {}
            }
            let v = a.check_or_skip(Property::ESymmetric, Some(f))?;
            match v.holds() {
                Some(false) => {
                    sym_fail.get_or_insert((f, v));
                }
                None => sym_skip = true,
                Some(true) => {}
            }
        }
        let all_rev = rev_fail.is_none();
        let all_sym = sym_fail.is_none();
        let status = match (abel.holds(), rev_skip) {
            (None, _) => Status::Skipped {
                reason: known(&[&abel]).unwrap_err(),
            },
            (_, Some(reason)) if all_rev => Status::Skipped { reason },
            (Some(m), _) => {
                if m != all_rev {
                    match &rev_fail {
                        Some((f, v)) => violated_by(r, v, Some(*f), "min-abel, yet not right e-reversible at e ∈ ME_l"),
                        None => violated_by(r, &abel, None, "right e-reversible on ME_l, yet not min-abel"),
                    }
                } else if !sym_skip && m != all_sym {
                    match &sym_fail {
                        Some((f, v)) => violated_by(r, v, Some(*f), "min-abel, yet not e-symmetric at e ∈ ME_l"),
                        None => violated_by(r, &abel, None, "e-symmetric on ME_l, yet not min-abel"),
                    }
                } else {
                    Status::Holds
                }
            }
        };
        let note = format!(
            "|ME_l| = {}; min-abel {} reversible on ME_l {} symmetric on ME_l {}",
            me.len(),
            abel.holds().map_or("–", mark),
            mark(all_rev),
            if sym_skip { "–" } else { mark(all_sym) }
        );
        rep.push(Instance::new(r, None, status).with_note(note));
    }
    Ok(rep)
}
