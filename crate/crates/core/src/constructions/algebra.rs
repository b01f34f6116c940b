use super::{build_coordinate_ring, zmod};
use crate::error::{Error, Result};
use crate::ring::{Guards, RingTable};

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The `p^d`-element algebra over `Z_p` whose basis products are
/// `e_i e_j = Σ_m consts[i][j][m] e_m`.
///
/// Associativity is checked on all `d³` basis triples before the tables are
/// materialized; one basis element must act as a two-sided identity.
pub fn algebra_from_structure_constants(
    p: usize,
    d: usize,
    consts: &[Vec<Vec<usize>>],
    guards: &Guards,
) -> Result<RingTable> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("characteristic {p} is not prime")));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be ≥ 1".into()));
    }
    let shape_ok = consts.len() == d
        && consts
            .iter()
            .all(|row| row.len() == d && row.iter().all(|v| v.len() == d));
    if !shape_ok {
        return Err(Error::DimensionMismatch(format!(
            "structure constants must be a {d}×{d} table of length-{d} vectors"
        )));
    }
    let c = |i: usize, j: usize, m: usize| consts[i][j][m] % p;

    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for m in 0..d {
                    let left: usize = (0..d).map(|l| c(i, j, l) * c(l, k, m)).sum::<usize>() % p;
                    let right: usize = (0..d).map(|l| c(j, k, l) * c(i, l, m)).sum::<usize>() % p;
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
    }

    let unit = (0..d)
        .find(|&u| {
            (0..d).all(|j| {
                (0..d).all(|m| {
                    let delta = usize::from(j == m);
                    c(u, j, m) == delta && c(j, u, m) == delta
                })
            })
        })
        .ok_or_else(|| Error::NoIdentity("no basis element acts as identity".into()))?;

    let field = zmod(p)?;
    let bases = vec![&field; d];
    let one: Vec<usize> = (0..d).map(|m| usize::from(m == unit)).collect();
    let text = consts_text(consts, p);
    build_coordinate_ring(
        &bases,
        guards,
        "algebra",
        |x, y, out| {
            out.iter_mut().for_each(|o| *o = 0);
            for i in 0..d {
                if x[i] == 0 {
                    continue;
                }
                for j in 0..d {
                    let coef = x[i] * y[j];
                    if coef == 0 {
                        continue;
                    }
                    for m in 0..d {
                        out[m] = (out[m] + coef * c(i, j, m)) % p;
                    }
                }
            }
            Ok(())
        },
        |coords| {
            if d == 1 {
                coords[0].to_string()
            } else {
                let parts: Vec<String> = coords.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            }
        },
        &one,
        format!("algebra({p},{d},{text})"),
    )
}

fn consts_text(consts: &[Vec<Vec<usize>>], p: usize) -> String {
    let rows: Vec<String> = consts
        .iter()
        .map(|row| {
            let vecs: Vec<String> = row
                .iter()
                .map(|v| {
                    let xs: Vec<String> = v.iter().map(|x| (x % p).to_string()).collect();
                    format!("[{}]", xs.join(","))
                })
                .collect();
            format!("[{}]", vecs.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}
