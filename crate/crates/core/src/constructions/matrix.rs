use serde::{Deserialize, Serialize};

use super::{build_coordinate_ring, matrix_label, HomomorphismHandle};
use crate::error::{Error, Result};
use crate::ring::{Guards, RingTable};

/// Which subring of `M_n(R)` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    /// `M_n(R)`.
    Full,
    /// `U_n(R)`, upper triangular.
    Upper,
    /// `D_n(R)`, upper triangular with one common diagonal entry.
    Diagonal,
    /// `V_n(R)`, upper triangular and constant along each diagonal.
    Toeplitz,
}

impl MatrixKind {
    pub fn symbol(self) -> &'static str {
        match self {
            MatrixKind::Full => "M",
            MatrixKind::Upper => "U",
            MatrixKind::Diagonal => "D",
            MatrixKind::Toeplitz => "V",
        }
    }

    /// For each entry `(i, j)` in row-major order, the free coordinate it
    /// reads, or `None` for a structural zero.
    fn layout(self, n: usize) -> (usize, Vec<Option<usize>>) {
        let mut free = 0;
        let mut cells = vec![None; n * n];
        match self {
            MatrixKind::Full => {
                for (k, c) in cells.iter_mut().enumerate() {
                    *c = Some(k);
                }
                free = n * n;
            }
            MatrixKind::Upper => {
                for i in 0..n {
                    for j in i..n {
                        cells[i * n + j] = Some(free);
                        free += 1;
                    }
                }
            }
            MatrixKind::Diagonal => {
                free = 1;
                for i in 0..n {
                    cells[i * n + i] = Some(0);
                    for j in i + 1..n {
                        cells[i * n + j] = Some(free);
                        free += 1;
                    }
                }
            }
            MatrixKind::Toeplitz => {
                for i in 0..n {
                    for j in i..n {
                        cells[i * n + j] = Some(j - i);
                    }
                }
                free = n;
            }
        }
        (free, cells)
    }
}

/// `M_n(R)`, `U_n(R)`, `D_n(R)` or `V_n(R)`, with elements labeled as full
/// matrix literals over the base labels.
pub fn matrix_ring(kind: MatrixKind, n: usize, base: &RingTable, guards: &Guards) -> Result<RingTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("matrix size must be ≥ 1".into()));
    }
    let (free, cells) = kind.layout(n);
    // First cell reading each free coordinate; products are read back from it.
    let mut representative = vec![usize::MAX; free];
    for (pos, cell) in cells.iter().enumerate() {
        if let Some(k) = *cell {
            if representative[k] == usize::MAX {
                representative[k] = pos;
            }
        }
    }
    let expand = |coords: &[usize], out: &mut [usize]| {
        for (pos, cell) in cells.iter().enumerate() {
            out[pos] = cell.map_or(base.zero(), |k| coords[k]);
        }
    };
    let bases = vec![base; free];
    let one: Vec<usize> = (0..free)
        .map(|k| {
            let (i, j) = (representative[k] / n, representative[k] % n);
            if i == j {
                base.one()
            } else {
                base.zero()
            }
        })
        .collect();
    let mut lhs = vec![0; n * n];
    let mut rhs = vec![0; n * n];
    let mut prod = vec![0; n * n];
    build_coordinate_ring(
        &bases,
        guards,
        "matrix ring",
        |x, y, out| {
            expand(x, &mut lhs);
            expand(y, &mut rhs);
            for i in 0..n {
                for j in 0..n {
                    let mut acc = base.zero();
                    for k in 0..n {
                        acc = base.add(acc, base.mul(lhs[i * n + k], rhs[k * n + j]));
                    }
                    prod[i * n + j] = acc;
                }
            }
            for (k, &pos) in representative.iter().enumerate() {
                out[k] = prod[pos];
            }
            Ok(())
        },
        |c| {
            let mut full = vec![0; n * n];
            expand(c, &mut full);
            matrix_label(base, n, &full)
        },
        &one,
        format!("{}({},{})", kind.symbol(), n, base.provenance()),
    )
}

/// The subring `H_(s,t)(R)` of `M_3(R)` of matrices
/// `[[a,0,0],[c,d,f],[0,0,g]]` with `a - d = sc` and `d - g = tf`.
///
/// Elements are stored by the free triple `(a, c, f)`.
pub fn h_ring(base: &RingTable, s: usize, t: usize, guards: &Guards) -> Result<RingTable> {
    for x in [s, t] {
        if !base.is_central(x) {
            return Err(Error::NotCentral(base.label(x).to_string()));
        }
        if base.inverse(x).is_none() {
            return Err(Error::NotInvertible(base.label(x).to_string()));
        }
    }
    let r = base;
    // (a, c, f) -> (d, g)
    let derived = move |a: usize, c: usize, f: usize| {
        let d = r.sub(a, r.mul(s, c));
        let g = r.sub(d, r.mul(t, f));
        (d, g)
    };
    build_coordinate_ring(
        &[base, base, base],
        guards,
        "H ring",
        |x, y, out| {
            let (a, c, f) = (x[0], x[1], x[2]);
            let (d, g) = derived(a, c, f);
            let (xx, yy, u) = (y[0], y[1], y[2]);
            let (z, v) = derived(xx, yy, u);
            let a2 = r.mul(a, xx);
            let c2 = r.add(r.mul(c, xx), r.mul(d, yy));
            let d2 = r.mul(d, z);
            let f2 = r.add(r.mul(d, u), r.mul(f, v));
            let g2 = r.mul(g, v);
            if derived(a2, c2, f2) != (d2, g2) {
                return Err(Error::InvalidArgument(
                    "H ring is not closed under multiplication".into(),
                ));
            }
            out.copy_from_slice(&[a2, c2, f2]);
            Ok(())
        },
        |c| {
            let (d, g) = derived(c[0], c[1], c[2]);
            let z = r.zero();
            matrix_label(r, 3, &[c[0], z, z, c[1], d, c[2], z, z, g])
        },
        &[r.one(), r.zero(), r.zero()],
        format!("H({},{},{})", r.provenance(), r.label(s), r.label(t)),
    )
}

/// The generalized matrix ring `K_s(R)`: 2×2 matrices over `R` with
/// `(a1,x1;y1,b1)(a2,x2;y2,b2) = (a1a2 + s x1y2, a1x2 + x1b2; y1a2 + b1y2, s y1x2 + b1b2)`.
pub fn k_ring(base: &RingTable, s: usize, guards: &Guards) -> Result<RingTable> {
    if !base.is_central(s) {
        return Err(Error::NotCentral(base.label(s).to_string()));
    }
    let r = base;
    build_coordinate_ring(
        &[r, r, r, r],
        guards,
        "K ring",
        |p, q, out| {
            let (a1, x1, y1, b1) = (p[0], p[1], p[2], p[3]);
            let (a2, x2, y2, b2) = (q[0], q[1], q[2], q[3]);
            out[0] = r.add(r.mul(a1, a2), r.mul3(s, x1, y2));
            out[1] = r.add(r.mul(a1, x2), r.mul(x1, b2));
            out[2] = r.add(r.mul(y1, a2), r.mul(b1, y2));
            out[3] = r.add(r.mul3(s, y1, x2), r.mul(b1, b2));
            Ok(())
        },
        |c| matrix_label(r, 2, c),
        &[r.one(), r.zero(), r.zero(), r.one()],
        format!("K({},{})", r.provenance(), r.label(s)),
    )
}

/// The skew upper triangular ring `U_2(R)_σ` with
/// `(a,b;0,c)(x,y;0,z) = (ax, ay + bσ(z); 0, cz)`.
pub fn twisted_u2(sigma: &HomomorphismHandle<'_>, guards: &Guards, hom_text: &str) -> Result<RingTable> {
    let r = sigma.domain();
    build_coordinate_ring(
        &[r, r, r],
        guards,
        "twisted U_2",
        |p, q, out| {
            out[0] = r.mul(p[0], q[0]);
            out[1] = r.add(r.mul(p[0], q[1]), r.mul(p[1], sigma.apply(q[2])));
            out[2] = r.mul(p[2], q[2]);
            Ok(())
        },
        |c| matrix_label(r, 2, &[c[0], c[1], r.zero(), c[2]]),
        &[r.one(), r.zero(), r.one()],
        format!("twist({},{})", r.provenance(), hom_text),
    )
}
