use super::substructure::gens_text;
use super::{build_coordinate_ring, tuple_label, SubringHandle};
use crate::error::{Error, Result};
use crate::ring::{Guards, RingTable};

/// Dorroh extension `D(R, S)` for a central subring `S` containing `1_R`:
/// pairs `(a, b)` with `(a, b)(c, d) = (ac + da + bc, bd)`.
pub fn dorroh(sub: &SubringHandle<'_>, guards: &Guards) -> Result<RingTable> {
    let r = sub.parent();
    if !sub.is_central() {
        let bad = sub.members().iter().find(|&&m| !r.is_central(m)).unwrap();
        return Err(Error::NotCentral(r.label(*bad).to_string()));
    }
    if !sub.contains(r.one()) {
        return Err(Error::NoIdentity(
            "the pair (0, u) is an identity only for u = 1".into(),
        ));
    }
    let gens = gens_text(r, sub.members());
    let s = sub.to_ring(format!("sub({},{})", r.provenance(), gens))?;
    let embed = sub.members();
    let s_one = s.one();
    build_coordinate_ring(
        &[r, &s],
        guards,
        "Dorroh extension",
        |x, y, out| {
            let (a, b) = (x[0], x[1]);
            let (c, d) = (y[0], y[1]);
            let (bh, dh) = (embed[b], embed[d]);
            out[0] = r.add(r.add(r.mul(a, c), r.mul(dh, a)), r.mul(bh, c));
            out[1] = s.mul(b, d);
            Ok(())
        },
        |c| format!("({},{})", r.label(c[0]), s.label(c[1])),
        &[r.zero(), s_one],
        format!("dorroh({},sub[{}])", r.provenance(), gens),
    )
}

/// The bounded-prefix form of `T[R, S]`: the componentwise ring
/// `R^n × S`, where the last coordinate is the eventually constant tail.
pub fn trs(sub: &SubringHandle<'_>, n: usize, guards: &Guards) -> Result<RingTable> {
    let r = sub.parent();
    if !sub.contains(r.one()) {
        return Err(Error::NoIdentity("S must share the identity of R".into()));
    }
    let gens = gens_text(r, sub.members());
    let s = sub.to_ring(format!("sub({},{})", r.provenance(), gens))?;
    let mut bases: Vec<&RingTable> = vec![r; n];
    bases.push(&s);
    let one: Vec<usize> = bases.iter().map(|b| b.one()).collect();
    let factors = bases.clone();
    build_coordinate_ring(
        &bases,
        guards,
        "T[R,S]",
        |x, y, out| {
            for (k, f) in factors.iter().enumerate() {
                out[k] = f.mul(x[k], y[k]);
            }
            Ok(())
        },
        |c| tuple_label(&factors, c),
        &one,
        format!("trs({},sub[{}],{})", r.provenance(), gens, n),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, subring, zmod, MatrixKind};
    use crate::ring::verify_axioms;

    fn g() -> Guards {
        Guards::default()
    }

    #[test]
    fn dorroh_over_z2() {
        let z2 = zmod(2).unwrap();
        let s = subring(&z2, &[1]);
        let d = dorroh(&s, &g()).unwrap();
        assert_eq!(d.order(), 4);
        assert!(d.elements().all(|x| d.is_idempotent(x)));
        assert_eq!(d.label(d.one()), "(0,1)");
        assert!(verify_axioms(&d, &g()).unwrap().passed);
    }

    #[test]
    fn dorroh_needs_central_subring() {
        let z2 = zmod(2).unwrap();
        let u2 = matrix_ring(MatrixKind::Upper, 2, &z2, &g()).unwrap();
        let e11 = u2.index_of("[[1,0],[0,0]]").unwrap();
        let s = subring(&u2, &[e11]);
        assert!(matches!(dorroh(&s, &g()), Err(Error::NotCentral(_))));
        let scalars = subring(&u2, &[]);
        assert_eq!(dorroh(&scalars, &g()).unwrap().order(), 16);
    }

    #[test]
    fn trs_shapes() {
        let z2 = zmod(2).unwrap();
        let z3 = zmod(3).unwrap();
        let whole = subring(&z2, &[]);
        let t = trs(&whole, 1, &g()).unwrap();
        assert_eq!(t.order(), 4);
        let t0 = trs(&subring(&z3, &[]), 0, &g()).unwrap();
        assert_eq!(t0.order(), 3);
        assert_eq!(t0.labels(), z3.labels());
    }
}
