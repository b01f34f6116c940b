use super::ast::{ElemLit, Expr, HomSpec};
use crate::constructions::{
    algebra_from_structure_constants, corner, direct_product, dorroh, h_ring, k_ring, matrix_ring, quotient, subring,
    trs, twisted_u2, zmod, HomomorphismHandle,
};
use crate::error::{Error, Result};
use crate::ring::{Guards, RingTable};

/// Resolves an element literal in `ring`: `#k` is a raw index, anything
/// else must match a label exactly, and an integer `k` that is not a label
/// falls back to `k·1`.
pub fn resolve(ring: &RingTable, lit: &ElemLit) -> Result<usize> {
    if let ElemLit::Index(k) = *lit {
        if k >= ring.order() {
            return Err(Error::IndexOutOfRange {
                index: k,
                order: ring.order(),
            });
        }
        return Ok(k);
    }
    let text = lit.to_string();
    if let Some(i) = ring.index_of(&text) {
        return Ok(i);
    }
    match *lit {
        ElemLit::Int(k) => i64::try_from(k)
            .map(|k| ring.multiple_of_one(k))
            .map_err(|_| Error::UnknownElement(text)),
        _ => Err(Error::UnknownElement(text)),
    }
}

fn resolve_all(ring: &RingTable, lits: &[ElemLit]) -> Result<Vec<usize>> {
    lits.iter().map(|l| resolve(ring, l)).collect()
}

/// Extends the given images to a total map by closing under `+` and `·`.
fn extend_images(ring: &RingTable, pairs: &[(usize, usize)]) -> Result<Vec<usize>> {
    let mut map: Vec<Option<usize>> = vec![None; ring.order()];
    let mut known = Vec::new();
    let set = |x: usize, y: usize, map: &mut Vec<Option<usize>>, known: &mut Vec<usize>| -> Result<()> {
        match map[x] {
            Some(z) if z != y => Err(Error::NotHomomorphism(format!(
                "{} would map to both {} and {}",
                ring.label(x),
                ring.label(z),
                ring.label(y)
            ))),
            Some(_) => Ok(()),
            None => {
                map[x] = Some(y);
                known.push(x);
                Ok(())
            }
        }
    };
    set(ring.zero(), ring.zero(), &mut map, &mut known)?;
    set(ring.one(), ring.one(), &mut map, &mut known)?;
    for &(x, y) in pairs {
        set(x, y, &mut map, &mut known)?;
    }
    let mut i = 0;
    while i < known.len() {
        for j in 0..=i {
            let (x, y) = (known[i], known[j]);
            let (fx, fy) = (map[x].unwrap(), map[y].unwrap());
            set(ring.add(x, y), ring.add(fx, fy), &mut map, &mut known)?;
            set(ring.mul(x, y), ring.mul(fx, fy), &mut map, &mut known)?;
            set(ring.mul(y, x), ring.mul(fy, fx), &mut map, &mut known)?;
        }
        i += 1;
    }
    map.iter()
        .enumerate()
        .map(|(x, y)| {
            y.ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "the given images do not determine the image of {}",
                    ring.label(x)
                ))
            })
        })
        .collect()
}

/// The endomorphism of `ring` described by `hom`.
pub(crate) fn endomorphism<'r>(ring: &'r RingTable, hom: &HomSpec) -> Result<HomomorphismHandle<'r>> {
    match hom {
        HomSpec::Identity => Ok(HomomorphismHandle::identity(ring)),
        HomSpec::Map(pairs) => {
            let resolved = pairs
                .iter()
                .map(|(x, y)| Ok((resolve(ring, x)?, resolve(ring, y)?)))
                .collect::<Result<Vec<_>>>()?;
            HomomorphismHandle::new(ring, extend_images(ring, &resolved)?)
        }
    }
}

/// Builds the ring named by `expr`. Every intermediate ring carries its
/// canonical expression as provenance.
pub fn build(expr: &Expr, guards: &Guards) -> Result<RingTable> {
    let ring = match expr {
        Expr::Z(n) => {
            guards.check_pair("Z(n)", *n)?;
            zmod(*n)?
        }
        Expr::Matrix { kind, n, base } => matrix_ring(*kind, *n, &build(base, guards)?, guards)?,
        Expr::H { base, s, t } => {
            let r = build(base, guards)?;
            h_ring(&r, resolve(&r, s)?, resolve(&r, t)?, guards)?
        }
        Expr::K { base, s } => {
            let r = build(base, guards)?;
            k_ring(&r, resolve(&r, s)?, guards)?
        }
        Expr::Prod(factors) => {
            if factors.is_empty() {
                return Err(Error::EmptyProduct);
            }
            let rings = factors.iter().map(|f| build(f, guards)).collect::<Result<Vec<_>>>()?;
            let refs: Vec<&RingTable> = rings.iter().collect();
            direct_product(&refs, guards)?
        }
        Expr::Dorroh { base, sub } => {
            let r = build(base, guards)?;
            dorroh(&subring(&r, &resolve_all(&r, sub)?), guards)?
        }
        Expr::Quot { base, gens } => {
            let r = build(base, guards)?;
            quotient(&r, &resolve_all(&r, gens)?)?.ring
        }
        Expr::Corner { base, e } => {
            let r = build(base, guards)?;
            corner(&r, resolve(&r, e)?)?.ring
        }
        Expr::Twist { base, hom } => {
            let r = build(base, guards)?;
            let sigma = endomorphism(&r, hom)?;
            twisted_u2(&sigma, guards, &hom.to_string())?
        }
        Expr::Trs { base, sub, n } => {
            let r = build(base, guards)?;
            trs(&subring(&r, &resolve_all(&r, sub)?), *n, guards)?
        }
        Expr::Algebra { p, d, consts } => {
            let order = u32::try_from(*d)
                .ok()
                .and_then(|d| p.checked_pow(d))
                .unwrap_or(usize::MAX);
            guards.check_pair("algebra", order)?;
            algebra_from_structure_constants(*p, *d, consts, guards)?
        }
        Expr::Sub { base, gens } => {
            let r = build(base, guards)?;
            subring(&r, &resolve_all(&r, gens)?).to_ring(String::new())?
        }
    };
    Ok(ring.with_provenance(expr.to_string()))
}
