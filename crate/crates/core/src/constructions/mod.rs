//! Every ring family used by the law suite, materialized as [`RingTable`]s.
//!
//! Most constructions are additive products of coordinate rings with a
//! construction-specific multiplication. They share [`build_coordinate_ring`],
//! which enumerates coordinate vectors in mixed radix (first coordinate most
//! significant), adds componentwise and delegates products to a closure.

mod algebra;
mod extension;
mod matrix;
mod substructure;

pub use algebra::algebra_from_structure_constants;
pub use extension::{dorroh, trs};
pub use matrix::{h_ring, k_ring, matrix_ring, twisted_u2, MatrixKind};
pub use substructure::{
    center, corner, ideal_generated, quotient, subring, Corner, HomomorphismHandle, IdealHandle, Quotient,
    SubringHandle,
};
pub(crate) use substructure::{gens_text, quotient_by};

use crate::error::{Error, Result};
use crate::ring::{Guards, RingTable};

/// The integers modulo `n`, labeled `0..n`.
pub fn zmod(n: usize) -> Result<RingTable> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Z_n requires n ≥ 2, got {n}")));
    }
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(((a + b) % n) as u32);
            mul.push(((a * b) % n) as u32);
        }
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    RingTable::assemble(n, add, mul, 0, 1, labels, format!("Z({n})"))
}

/// Componentwise product of a nonempty list of rings.
pub fn direct_product(factors: &[&RingTable], guards: &Guards) -> Result<RingTable> {
    if factors.is_empty() {
        return Err(Error::EmptyProduct);
    }
    let provenance = format!(
        "prod({})",
        factors.iter().map(|f| f.provenance()).collect::<Vec<_>>().join(",")
    );
    let one: Vec<usize> = factors.iter().map(|f| f.one()).collect();
    build_coordinate_ring(
        factors,
        guards,
        "direct product",
        |x, y, out| {
            for (k, f) in factors.iter().enumerate() {
                out[k] = f.mul(x[k], y[k]);
            }
            Ok(())
        },
        |c| tuple_label(factors, c),
        &one,
        provenance,
    )
}

pub(crate) fn tuple_label(bases: &[&RingTable], coords: &[usize]) -> String {
    if coords.len() == 1 {
        return bases[0].label(coords[0]).to_string();
    }
    let parts: Vec<&str> = bases.iter().zip(coords).map(|(b, &c)| b.label(c)).collect();
    format!("({})", parts.join(","))
}

pub(crate) fn matrix_label(base: &RingTable, n: usize, entries: &[usize]) -> String {
    let rows: Vec<String> = (0..n)
        .map(|i| {
            let row: Vec<&str> = (0..n).map(|j| base.label(entries[i * n + j])).collect();
            format!("[{}]", row.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn checked_order(bases: &[&RingTable], guards: &Guards, what: &'static str) -> Result<usize> {
    let mut order: usize = 1;
    for b in bases {
        order = order.saturating_mul(b.order());
    }
    guards.check_pair(what, order)?;
    Ok(order)
}

/// Builds the ring on `bases[0] × … × bases[k-1]` with componentwise
/// addition and the multiplication `mul(x, y, out)` on coordinate vectors.
pub(crate) fn build_coordinate_ring<M, L>(
    bases: &[&RingTable],
    guards: &Guards,
    what: &'static str,
    mut mul: M,
    label: L,
    one: &[usize],
    provenance: String,
) -> Result<RingTable>
where
    M: FnMut(&[usize], &[usize], &mut [usize]) -> Result<()>,
    L: Fn(&[usize]) -> String,
{
    let k = bases.len();
    let order = checked_order(bases, guards, what)?;
    let radices: Vec<usize> = bases.iter().map(|b| b.order()).collect();

    let mut coords = vec![0usize; order * k];
    for idx in 0..order {
        let mut rest = idx;
        for pos in (0..k).rev() {
            coords[idx * k + pos] = rest % radices[pos];
            rest /= radices[pos];
        }
    }
    let encode = |c: &[usize]| c.iter().zip(&radices).fold(0, |acc, (&x, &r)| acc * r + x);

    let mut add = Vec::with_capacity(order * order);
    let mut mul_table = Vec::with_capacity(order * order);
    let mut out = vec![0usize; k];
    for a in 0..order {
        let x = &coords[a * k..(a + 1) * k];
        for b in 0..order {
            let y = &coords[b * k..(b + 1) * k];
            for pos in 0..k {
                out[pos] = bases[pos].add(x[pos], y[pos]);
            }
            add.push(encode(&out) as u32);
            mul(x, y, &mut out)?;
            mul_table.push(encode(&out) as u32);
        }
    }
    let zero: Vec<usize> = bases.iter().map(|b| b.zero()).collect();
    let labels = (0..order).map(|i| label(&coords[i * k..(i + 1) * k])).collect();
    RingTable::assemble(order, add, mul_table, encode(&zero), encode(one), labels, provenance)
}

/// Restricts `parent` to a multiplicatively and additively closed subset
/// with identity `one` (a parent index). Labels are inherited.
pub(crate) fn restrict(parent: &RingTable, members: &[usize], one: usize, provenance: String) -> Result<RingTable> {
    let n = members.len();
    let mut position = vec![u32::MAX; parent.order()];
    for (i, &m) in members.iter().enumerate() {
        position[m] = i as u32;
    }
    let lookup = |x: usize| -> Result<u32> {
        match position[x] {
            u32::MAX => Err(Error::InvalidArgument(format!(
                "subset is not closed: {} escapes",
                parent.label(x)
            ))),
            p => Ok(p),
        }
    };
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &a in members {
        for &b in members {
            add.push(lookup(parent.add(a, b))?);
            mul.push(lookup(parent.mul(a, b))?);
        }
    }
    let labels = members.iter().map(|&m| parent.label(m).to_string()).collect();
    RingTable::assemble(
        n,
        add,
        mul,
        lookup(parent.zero())? as usize,
        lookup(one)? as usize,
        labels,
        provenance,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::verify_axioms;

    #[test]
    fn zmod_basics() {
        let z2 = zmod(2).unwrap();
        assert_eq!(z2.order(), 2);
        assert!(zmod(1).is_err());
        let z6 = zmod(6).unwrap();
        let id: Vec<usize> = z6.elements().filter(|&x| z6.is_idempotent(x)).collect();
        assert_eq!(id, vec![0, 1, 3, 4]);
        assert_eq!(z6.provenance(), "Z(6)");
    }

    #[test]
    fn products() {
        let g = Guards::default();
        let z2 = zmod(2).unwrap();
        let z3 = zmod(3).unwrap();
        let p = direct_product(&[&z2, &z2], &g).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.elements().filter(|&x| p.is_idempotent(x)).count(), 4);
        assert_eq!(p.label(1), "(0,1)");
        let p23 = direct_product(&[&z2, &z3], &g).unwrap();
        assert!(verify_axioms(&p23, &g).unwrap().passed);
        assert_eq!(direct_product(&[], &g).unwrap_err(), Error::EmptyProduct);
    }

    #[test]
    fn product_guard() {
        let z8 = zmod(8).unwrap();
        let g = Guards {
            max_pair_order: 100,
            max_triple_order: 100,
        };
        assert!(direct_product(&[&z8, &z8, &z8], &g).unwrap_err().is_size_guard());
    }
}
