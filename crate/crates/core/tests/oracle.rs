//! Independent recomputation of every recorded registry value.
//!
//! Nothing here goes through the library's constructions or predicates:
//! rings are built from naive element types (matrices of integers mod m,
//! coefficient vectors), indexed into private tables, and every property
//! is decided by its defining quantifiers.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use idemring::laws::{registry_checks, Value, GOLDEN};
use idemring::Guards;

struct Table {
    n: usize,
    mul: Vec<u16>,
    zero: usize,
    one: usize,
}

impl Table {
    fn new<E: Clone + Eq + Hash>(
        elems: &[E],
        add: impl Fn(&E, &E) -> E,
        mul: impl Fn(&E, &E) -> E,
        zero: &E,
        one: &E,
    ) -> (Table, HashMap<E, usize>) {
        let n = elems.len();
        let index: HashMap<E, usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        assert_eq!(index.len(), n, "duplicate elements");
        let mut mt = vec![0u16; n * n];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                debug_assert!(index.contains_key(&add(x, y)), "not closed under addition");
                mt[i * n + j] = index[&mul(x, y)] as u16;
            }
        }
        let t = Table {
            n,
            mul: mt,
            zero: index[zero],
            one: index[one],
        };
        (t, index)
    }

    fn m(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y] as usize
    }

    fn m3(&self, x: usize, y: usize, z: usize) -> usize {
        self.m(self.m(x, y), z)
    }

    fn z(&self, x: usize) -> bool {
        x == self.zero
    }

    fn all(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    fn zero_pairs(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for a in self.all() {
            for b in self.all() {
                if self.z(self.m(a, b)) {
                    v.push((a, b));
                }
            }
        }
        v
    }

    fn right_rev(&self, e: usize) -> bool {
        self.zero_pairs().iter().all(|&(a, b)| self.z(self.m3(b, a, e)))
    }

    fn left_rev(&self, e: usize) -> bool {
        self.zero_pairs().iter().all(|&(a, b)| self.z(self.m3(e, b, a)))
    }

    fn reversible(&self) -> bool {
        self.zero_pairs().iter().all(|&(a, b)| self.z(self.m(b, a)))
    }

    /// `aRb = 0`.
    fn kills(&self, a: usize, b: usize) -> bool {
        self.all().all(|r| self.z(self.m3(a, r, b)))
    }

    fn reflexive(&self) -> bool {
        self.all()
            .all(|a| self.all().all(|b| !self.kills(a, b) || self.kills(b, a)))
    }

    fn semicommutative(&self) -> bool {
        self.zero_pairs().iter().all(|&(a, b)| self.kills(a, b))
    }

    fn prime(&self) -> bool {
        self.all()
            .all(|a| self.all().all(|b| !self.kills(a, b) || self.z(a) || self.z(b)))
    }

    fn directly_finite(&self) -> bool {
        self.all()
            .all(|a| self.all().all(|b| self.m(a, b) != self.one || self.m(b, a) == self.one))
    }

    fn nonzero_idempotents(&self) -> Vec<usize> {
        self.all().filter(|&e| !self.z(e) && self.m(e, e) == e).collect()
    }
}

/// Square matrices over `Z_m`, row-major.
#[derive(Clone, Copy)]
struct Mats {
    n: usize,
    m: u64,
}

type M = Vec<u64>;

impl Mats {
    fn add(&self, x: &M, y: &M) -> M {
        x.iter().zip(y).map(|(a, b)| (a + b) % self.m).collect()
    }

    fn mul(&self, x: &M, y: &M) -> M {
        let n = self.n;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (0..n).map(|k| x[i * n + k] * y[k * n + j]).sum::<u64>() % self.m;
            }
        }
        out
    }

    fn zero(&self) -> M {
        vec![0; self.n * self.n]
    }

    fn one(&self) -> M {
        let mut o = self.zero();
        for i in 0..self.n {
            o[i * self.n + i] = 1;
        }
        o
    }

    /// Every matrix whose entries at `free` positions range over `Z_m`,
    /// with the rest determined by `fill`.
    fn enumerate(&self, free: usize, fill: impl Fn(&[u64]) -> M) -> Vec<M> {
        let mut out = Vec::new();
        let mut digits = vec![0u64; free];
        loop {
            out.push(fill(&digits));
            let mut k = 0;
            loop {
                if k == free {
                    return out;
                }
                digits[k] += 1;
                if digits[k] < self.m {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
        }
    }

    fn full(&self) -> Vec<M> {
        self.enumerate(self.n * self.n, |d| d.to_vec())
    }

    fn upper(&self) -> Vec<M> {
        let n = self.n;
        let slots: Vec<usize> = (0..n).flat_map(|i| (i..n).map(move |j| i * n + j)).collect();
        self.enumerate(slots.len(), |d| {
            let mut x = vec![0; n * n];
            for (s, &v) in slots.iter().zip(d) {
                x[*s] = v;
            }
            x
        })
    }

    /// Upper triangular with constant diagonal.
    fn d(&self) -> Vec<M> {
        let n = self.n;
        let slots: Vec<usize> = (0..n).flat_map(|i| (i + 1..n).map(move |j| i * n + j)).collect();
        self.enumerate(slots.len() + 1, |d| {
            let mut x = vec![0; n * n];
            for i in 0..n {
                x[i * n + i] = d[0];
            }
            for (s, &v) in slots.iter().zip(&d[1..]) {
                x[*s] = v;
            }
            x
        })
    }

    /// Upper triangular, constant along each diagonal.
    fn v(&self) -> Vec<M> {
        let n = self.n;
        self.enumerate(n, |d| {
            let mut x = vec![0; n * n];
            for i in 0..n {
                for j in i..n {
                    x[i * n + j] = d[j - i];
                }
            }
            x
        })
    }

    fn table(&self, elems: &[M]) -> (Table, HashMap<M, usize>) {
        Table::new(
            elems,
            |x, y| self.add(x, y),
            |x, y| self.mul(x, y),
            &self.zero(),
            &self.one(),
        )
    }
}

fn mat(rows: &[&[u64]]) -> M {
    rows.iter().flat_map(|r| r.iter().copied()).collect()
}

/// Sparse n×n matrix with ones at the given 1-based positions.
fn units(n: usize, at: &[(usize, usize)]) -> M {
    let mut x = vec![0; n * n];
    for &(i, j) in at {
        x[(i - 1) * n + (j - 1)] = 1;
    }
    x
}

type Results = BTreeMap<&'static str, Value>;

fn b(v: bool) -> Value {
    Value::Bool(v)
}

fn entries_a_c_d_i(out: &mut Results) {
    let z3 = Mats { n: 2, m: 3 };
    let (t, ix) = z3.table(&z3.upper());
    let e1 = ix[&mat(&[&[1, 1], &[0, 0]])];
    let e2 = ix[&mat(&[&[0, 0], &[0, 1]])];
    let e11 = ix[&mat(&[&[1, 0], &[0, 0]])];
    out.insert("a.reversible", b(t.reversible()));
    out.insert("a.right-e1", b(t.right_rev(e1)));
    out.insert("a.left-e1", b(t.left_rev(e1)));
    out.insert("a.left-e2", b(t.left_rev(e2)));
    out.insert("a.right-e2", b(t.right_rev(e2)));
    out.insert("a.e2e1-pair", b(t.z(t.m(e2, e1)) && !t.z(t.m(e1, e2))));

    out.insert("c.right", b(t.right_rev(e11)));
    out.insert("c.reversible", b(t.reversible()));
    let x = ix[&mat(&[&[0, 1], &[0, 1]])];
    out.insert("c.pair", b(t.z(t.m(x, e11)) && !t.z(t.m(e11, x))));

    let y = ix[&mat(&[&[1, 1], &[0, 0]])];
    out.insert("d.arb-zero", b(t.kills(x, y)));
    out.insert("d.bra-nonzero", b(!t.kills(y, x)));
    out.insert("d.reflexive", b(t.reflexive()));
    out.insert("d.right-e1", b(t.right_rev(e1)));

    out.insert("i.directly-finite", b(t.directly_finite()));
    out.insert("i.prime", b(t.prime()));
    out.insert("i.right", b(t.right_rev(e2)));
    out.insert("i.pair", b(t.z(t.m(x, y)) && !t.z(t.m3(y, x, e2))));
}

fn entry_b(out: &mut Results) {
    let m = Mats { n: 3, m: 2 };
    let all = m.full();
    let (t, ix) = m.table(&all);
    let e = ix[&units(3, &[(1, 1), (3, 3)])];
    let x = ix[&units(3, &[(2, 3)])];
    let y = ix[&units(3, &[(1, 2)])];
    out.insert("b.right", b(t.right_rev(e)));
    out.insert("b.left", b(t.left_rev(e)));
    out.insert("b.pair-right", b(t.z(t.m(x, y)) && !t.z(t.m3(y, x, e))));
    out.insert("b.pair-left", b(t.z(t.m(x, y)) && !t.z(t.m3(e, y, x))));
    out.insert("b.bae-is-e13", b(t.m3(y, x, e) == ix[&units(3, &[(1, 3)])]));
}

/// The algebra over `Z_2` with basis `1, a, b, c` where `ba = c` and all
/// other products of `a, b, c` vanish. Elements are coefficient vectors.
fn r16_mul(x: &[u8; 4], y: &[u8; 4]) -> [u8; 4] {
    [
        x[0] & y[0],
        (x[0] & y[1]) ^ (x[1] & y[0]),
        (x[0] & y[2]) ^ (x[2] & y[0]),
        (x[0] & y[3]) ^ (x[3] & y[0]) ^ (x[2] & y[1]),
    ]
}

fn r16_add(x: &[u8; 4], y: &[u8; 4]) -> [u8; 4] {
    [x[0] ^ y[0], x[1] ^ y[1], x[2] ^ y[2], x[3] ^ y[3]]
}

fn r16_elements() -> Vec<[u8; 4]> {
    (0..16u8).map(|k| [k >> 3 & 1, k >> 2 & 1, k >> 1 & 1, k & 1]).collect()
}

type H = [[u8; 4]; 9];

fn h_mul(x: &H, y: &H) -> H {
    let mut out = [[0u8; 4]; 9];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = [0u8; 4];
            for k in 0..3 {
                acc = r16_add(&acc, &r16_mul(&x[i * 3 + k], &y[k * 3 + j]));
            }
            out[i * 3 + j] = acc;
        }
    }
    out
}

/// `[[a,0,0],[c,d,f],[0,0,g]]` with `d = a - c`, `g = d - f` (characteristic 2).
fn h_element(a: [u8; 4], c: [u8; 4], f: [u8; 4]) -> H {
    let z = [0u8; 4];
    let d = r16_add(&a, &c);
    let g = r16_add(&d, &f);
    [a, z, z, c, d, f, z, z, g]
}

fn entry_e(out: &mut Results) {
    let els = r16_elements();
    let (t, _) = Table::new(&els, r16_add, r16_mul, &[0, 0, 0, 0], &[1, 0, 0, 0]);
    out.insert("e.r16-semicommutative", b(t.semicommutative()));
    out.insert("e.r16-reversible", b(t.reversible()));

    let z = [0u8; 4];
    let one = [1u8, 0, 0, 0];
    let (ea, eb) = ([0u8, 1, 0, 0], [0u8, 0, 1, 0]);
    let e = h_element(one, one, z);
    let big_a = h_element(ea, ea, z);
    let big_b = h_element(eb, eb, z);
    let zero_h = h_element(z, z, z);
    out.insert(
        "e.pair",
        b(h_mul(&big_a, &big_b) == zero_h && h_mul(&h_mul(&big_b, &big_a), &e) != zero_h),
    );

    // ARBE is additive in R, so R may be replaced by a Z_2-basis of H.
    let mut hs = Vec::with_capacity(4096);
    for a in &els {
        for c in &els {
            for f in &els {
                hs.push(h_element(*a, *c, *f));
            }
        }
    }
    let basis: Vec<H> = (0..12)
        .map(|k| {
            let mut v = [[0u8; 4]; 3];
            v[k / 4][k % 4] = 1;
            h_element(v[0], v[1], v[2])
        })
        .collect();
    let mut semicommutative = true;
    'outer: for x in &hs {
        for y in &hs {
            if h_mul(x, y) != zero_h {
                continue;
            }
            let ye = h_mul(y, &e);
            for r in &basis {
                if h_mul(&h_mul(x, r), &ye) != zero_h {
                    semicommutative = false;
                    break 'outer;
                }
            }
        }
    }
    out.insert("e.right-semicommutative", b(semicommutative));
}

/// `D_2(U_2(Z_3))` as 4×4 block matrices `[[A, B], [0, A]]` over `Z_3`.
fn entry_f(out: &mut Results) {
    let u = Mats { n: 2, m: 3 }.upper();
    let block = |a: &M, bb: &M| -> M {
        let mut x = vec![0; 16];
        for i in 0..2 {
            for j in 0..2 {
                x[i * 4 + j] = a[i * 2 + j];
                x[i * 4 + j + 2] = bb[i * 2 + j];
                x[(i + 2) * 4 + j + 2] = a[i * 2 + j];
            }
        }
        x
    };
    let mut els = Vec::new();
    for a in &u {
        for bb in &u {
            els.push(block(a, bb));
        }
    }
    let m4 = Mats { n: 4, m: 3 };
    let (t, ix) = m4.table(&els);
    let n = mat(&[&[0, 1], &[0, 0]]);
    let x = ix[&block(&n, &mat(&[&[2, 1], &[0, 2]]))];
    let y = ix[&block(&n, &mat(&[&[2, 1], &[0, 1]]))];
    let e = ix[&block(&mat(&[&[0, 0], &[0, 1]]), &mat(&[&[0, 0], &[0, 0]]))];
    out.insert("f.pair", b(t.z(t.m(x, y)) && !t.z(t.m3(y, x, e))));
    out.insert("f.right", b(t.right_rev(e)));
}

fn entry_g_h(out: &mut Results) {
    let m = Mats { n: 3, m: 2 };
    let d3 = m.d();
    let (t, ix) = m.table(&d3);
    let x = ix[&units(3, &[(2, 3)])];
    let y = ix[&units(3, &[(1, 2), (2, 3)])];
    out.insert("g.pair", b(t.z(t.m(x, y)) && !t.z(t.m(y, x))));
    out.insert("g.right", b(t.right_rev(t.one)));
    let e22 = units(3, &[(2, 2)]);
    let ambient = d3.iter().all(|p| {
        d3.iter()
            .all(|q| m.mul(p, q) != m.zero() || m.mul(&m.mul(q, p), &e22) == m.zero())
    });
    out.insert("g.ambient-e22", b(ambient));
    let count = t.nonzero_idempotents().into_iter().filter(|&e| t.right_rev(e)).count();
    out.insert("g.right-reversible-idempotents", Value::Count(count));

    let (v, _) = m.table(&m.v());
    out.insert("h.right-1", b(v.right_rev(v.one)));
    out.insert("h.reversible", b(v.reversible()));
}

/// `K_0(Z_3)`: 2×2 arrays with the `s = 0` twisted product.
fn entry_j(out: &mut Results) {
    let m = Mats { n: 2, m: 3 };
    let els = m.full();
    let k0 = |x: &M, y: &M| -> M {
        vec![
            (x[0] * y[0]) % 3,
            (x[0] * y[1] + x[1] * y[3]) % 3,
            (x[2] * y[0] + x[3] * y[2]) % 3,
            (x[3] * y[3]) % 3,
        ]
    };
    let (t, _) = Table::new(&els, |x, y| m.add(x, y), k0, &m.zero(), &m.one());
    let ids = t.nonzero_idempotents();
    out.insert("j.nonzero-idempotents", Value::Count(ids.len()));
    let count = ids.iter().filter(|&&e| t.right_rev(e)).count();
    out.insert("j.right-reversible-idempotents", Value::Count(count));
}

/// `T[M_2(Z_2), U_2(Z_2)]` with a one-term prefix: pairs `(x, s)`.
fn entry_k(out: &mut Results) {
    let m = Mats { n: 2, m: 2 };
    let m2 = m.full();
    let u2 = m.upper();
    let mut els = Vec::new();
    for x in &m2 {
        for s in &u2 {
            els.push((x.clone(), s.clone()));
        }
    }
    let (t, ix) = Table::new(
        &els,
        |p, q| (m.add(&p.0, &q.0), m.add(&p.1, &q.1)),
        |p, q| (m.mul(&p.0, &q.0), m.mul(&p.1, &q.1)),
        &(m.zero(), m.zero()),
        &(m.one(), m.one()),
    );
    let e = mat(&[&[1, 1], &[0, 0]]);
    let big_e = ix[&(e.clone(), e.clone())];
    let right = t.right_rev(big_e);
    out.insert("k.right", b(right));
    out.insert("k.witness", b(!right));
    let (tm, im) = m.table(&m2);
    out.insert("k.m2-right", b(tm.right_rev(im[&e])));
    let (tu, iu) = m.table(&u2);
    out.insert("k.u2-right", b(tu.right_rev(iu[&e])));
    let x = im[&mat(&[&[1, 0], &[1, 0]])];
    let y = im[&mat(&[&[0, 0], &[1, 1]])];
    out.insert("k.xy-pair", b(tm.z(tm.m(x, y)) && !tm.z(tm.m3(y, x, im[&e]))));
}

fn oracle() -> Results {
    let mut out = Results::new();
    entries_a_c_d_i(&mut out);
    entry_b(&mut out);
    entry_e(&mut out);
    entry_f(&mut out);
    entry_g_h(&mut out);
    entry_j(&mut out);
    entry_k(&mut out);
    out
}

#[test]
fn oracle_matches_recorded_values_and_engine() {
    let computed = oracle();
    let golden: BTreeMap<&str, Value> = GOLDEN.iter().copied().collect();
    assert_eq!(golden.len(), GOLDEN.len());
    let ids: Vec<&&str> = computed.keys().collect();
    let gids: Vec<&&str> = golden.keys().collect();
    assert_eq!(ids, gids, "oracle and recorded ids differ");
    for (id, want) in &golden {
        assert_eq!(computed[id], *want, "{id}: oracle disagrees with the recorded value");
    }
    let (checks, skipped) = registry_checks(&Guards::default()).unwrap();
    assert!(skipped.is_empty(), "{skipped:?}");
    assert_eq!(checks.len(), golden.len());
    for c in checks {
        assert_eq!(c.value, computed[c.id], "{}: engine disagrees with the oracle", c.id);
    }
}

#[test]
fn k0_z3_idempotents_have_the_described_shapes() {
    // I2, nine of shape (1,x;y,0) and nine of shape (0,x;y,1).
    let m = Mats { n: 2, m: 3 };
    let k0 = |x: &M, y: &M| -> M {
        vec![
            (x[0] * y[0]) % 3,
            (x[0] * y[1] + x[1] * y[3]) % 3,
            (x[2] * y[0] + x[3] * y[2]) % 3,
            (x[3] * y[3]) % 3,
        ]
    };
    let ids: Vec<M> = m
        .full()
        .into_iter()
        .filter(|x| *x != m.zero() && k0(x, x) == *x)
        .collect();
    assert_eq!(ids.len(), 19);
    assert_eq!(ids.iter().filter(|x| x[0] == 1 && x[3] == 0).count(), 9);
    assert_eq!(ids.iter().filter(|x| x[0] == 0 && x[3] == 1).count(), 9);
    assert!(ids.contains(&m.one()));
}
