use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constructions::MatrixKind;

/// A ring-definition expression. `Display` writes the canonical form,
/// which is also the provenance string of the built ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Expr {
    Z(usize),
    Matrix {
        kind: MatrixKind,
        n: usize,
        base: Box<Expr>,
    },
    H {
        base: Box<Expr>,
        s: ElemLit,
        t: ElemLit,
    },
    K {
        base: Box<Expr>,
        s: ElemLit,
    },
    Prod(Vec<Expr>),
    Dorroh {
        base: Box<Expr>,
        sub: Vec<ElemLit>,
    },
    Quot {
        base: Box<Expr>,
        gens: Vec<ElemLit>,
    },
    Corner {
        base: Box<Expr>,
        e: ElemLit,
    },
    Twist {
        base: Box<Expr>,
        hom: HomSpec,
    },
    Trs {
        base: Box<Expr>,
        sub: Vec<ElemLit>,
        n: usize,
    },
    Algebra {
        p: usize,
        d: usize,
        consts: Vec<Vec<Vec<usize>>>,
    },
    Sub {
        base: Box<Expr>,
        gens: Vec<ElemLit>,
    },
}

/// An element literal, resolved against a ring's labels at build time.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ElemLit {
    Int(u64),
    Index(usize),
    Matrix(Vec<Vec<ElemLit>>),
    Tuple(Vec<ElemLit>),
}

/// An endomorphism: the identity, or images of enough elements that
/// closure under `+` and `·` determines the whole map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HomSpec {
    Identity,
    Map(Vec<(ElemLit, ElemLit)>),
}

fn join<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for ElemLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemLit::Int(k) => write!(f, "{k}"),
            ElemLit::Index(k) => write!(f, "#{k}"),
            ElemLit::Matrix(rows) => {
                f.write_str("[")?;
                for (i, row) in rows.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str("[")?;
                    join(f, row)?;
                    f.write_str("]")?;
                }
                f.write_str("]")
            }
            ElemLit::Tuple(xs) => {
                f.write_str("(")?;
                join(f, xs)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for HomSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomSpec::Identity => f.write_str("id"),
            HomSpec::Map(pairs) => {
                f.write_str("{")?;
                for (i, (x, y)) in pairs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}->{y}")?;
                }
                f.write_str("}")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Z(n) => write!(f, "Z({n})"),
            Expr::Matrix { kind, n, base } => write!(f, "{}({n},{base})", kind.symbol()),
            Expr::H { base, s, t } => write!(f, "H({base},{s},{t})"),
            Expr::K { base, s } => write!(f, "K({base},{s})"),
            Expr::Prod(xs) => {
                f.write_str("prod(")?;
                join(f, xs)?;
                f.write_str(")")
            }
            Expr::Dorroh { base, sub } => {
                write!(f, "dorroh({base},sub[")?;
                join(f, sub)?;
                f.write_str("])")
            }
            Expr::Quot { base, gens } => {
                write!(f, "quot({base}")?;
                for g in gens {
                    write!(f, ",{g}")?;
                }
                f.write_str(")")
            }
            Expr::Corner { base, e } => write!(f, "corner({base},{e})"),
            Expr::Twist { base, hom } => write!(f, "twist({base},{hom})"),
            Expr::Trs { base, sub, n } => {
                write!(f, "trs({base},sub[")?;
                join(f, sub)?;
                write!(f, "],{n})")
            }
            Expr::Algebra { p, d, consts } => {
                write!(f, "algebra({p},{d},[")?;
                for (i, row) in consts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str("[")?;
                    for (j, v) in row.iter().enumerate() {
                        if j > 0 {
                            f.write_str(",")?;
                        }
                        f.write_str("[")?;
                        join(f, v)?;
                        f.write_str("]")?;
                    }
                    f.write_str("]")?;
                }
                f.write_str("])")
            }
            Expr::Sub { base, gens } => {
                write!(f, "sub({base}")?;
                for g in gens {
                    write!(f, ",{g}")?;
                }
                f.write_str(")")
            }
        }
    }
}
