//! Proptest strategies for expressions. Generated trees are syntactically
//! valid but need not build.

use proptest::collection::vec;
use proptest::prelude::*;

use super::{ElemLit, Expr, HomSpec};
use crate::constructions::MatrixKind;

pub fn elem_lit() -> impl Strategy<Value = ElemLit> {
    let leaf = prop_oneof![
        (0u64..1000).prop_map(ElemLit::Int),
        (0usize..5000).prop_map(ElemLit::Index),
    ];
    leaf.prop_recursive(3, 24, 4, |inner| {
        prop_oneof![
            vec(inner.clone(), 2..4).prop_map(ElemLit::Tuple),
            (1usize..4, 1usize..4)
                .prop_flat_map(move |(h, w)| vec(vec(inner.clone(), w), h))
                .prop_map(ElemLit::Matrix),
        ]
    })
}

fn hom_spec() -> impl Strategy<Value = HomSpec> {
    prop_oneof![
        Just(HomSpec::Identity),
        vec((elem_lit(), elem_lit()), 0..3).prop_map(HomSpec::Map),
    ]
}

fn matrix_kind() -> impl Strategy<Value = MatrixKind> {
    prop_oneof![
        Just(MatrixKind::Full),
        Just(MatrixKind::Upper),
        Just(MatrixKind::Diagonal),
        Just(MatrixKind::Toeplitz),
    ]
}

pub fn expr() -> impl Strategy<Value = Expr> {
    let leaf =
        prop_oneof![
            (0usize..100).prop_map(Expr::Z),
            (0usize..8, 0usize..5, vec(vec(vec(0usize..8, 0..3), 0..3), 0..3))
                .prop_map(|(p, d, consts)| Expr::Algebra { p, d, consts }),
        ];
    leaf.prop_recursive(4, 32, 3, |inner| {
        let b = || inner.clone().prop_map(Box::new);
        prop_oneof![
            (matrix_kind(), 0usize..5, b()).prop_map(|(kind, n, base)| Expr::Matrix { kind, n, base }),
            (b(), elem_lit(), elem_lit()).prop_map(|(base, s, t)| Expr::H { base, s, t }),
            (b(), elem_lit()).prop_map(|(base, s)| Expr::K { base, s }),
            vec(inner.clone(), 1..4).prop_map(Expr::Prod),
            (b(), vec(elem_lit(), 0..3)).prop_map(|(base, sub)| Expr::Dorroh { base, sub }),
            (b(), vec(elem_lit(), 0..3)).prop_map(|(base, gens)| Expr::Quot { base, gens }),
            (b(), vec(elem_lit(), 0..3)).prop_map(|(base, gens)| Expr::Sub { base, gens }),
            (b(), elem_lit()).prop_map(|(base, e)| Expr::Corner { base, e }),
            (b(), hom_spec()).prop_map(|(base, hom)| Expr::Twist { base, hom }),
            (b(), vec(elem_lit(), 0..3), 0usize..4).prop_map(|(base, sub, n)| Expr::Trs { base, sub, n }),
        ]
    })
}
