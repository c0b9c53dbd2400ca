//! Structure-constant builders for the catalog entries.
//!
//! Bracket tables are written 1-based to match the classification sources;
//! `lie` converts to the internal 0-based form and validates Jacobi.

use super::CatalogEntry;
use crate::error::LieError;
use crate::lie::LieAlgebra;
use crate::rat::{rat, rint, Rat};
use num_traits::{Signed, Zero};

fn labels(prefix: &str, dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("{prefix}{i}")).collect()
}

/// 1-based bracket table -> validated algebra.
fn build(
    name: &str,
    prefix: &str,
    dim: usize,
    table: Vec<(usize, usize, Vec<(usize, Rat)>)>,
) -> Result<LieAlgebra, LieError> {
    let brackets = table
        .into_iter()
        .map(|(i, j, terms)| {
            (
                i - 1,
                j - 1,
                terms.into_iter().map(|(k, c)| (k - 1, c)).collect(),
            )
        })
        .collect();
    LieAlgebra::new(name, labels(prefix, dim), brackets)
}

fn t(k: usize, c: Rat) -> (usize, Rat) {
    (k, c)
}

fn one(k: usize) -> (usize, Rat) {
    (k, rint(1))
}

fn neg(k: usize) -> (usize, Rat) {
    (k, rint(-1))
}

/// Direct product with `k` central directions in front, relabeled e1..en.
fn with_central_factor(k: usize, inner: LieAlgebra, name: &str) -> LieAlgebra {
    let r = LieAlgebra::abelian("R", k);
    let mut g = r.direct_sum(&inner, name);
    g.basis_labels = labels("e", g.dim);
    g
}

// ---- admissibility predicates ----

fn adm_none(_: &[Rat]) -> Result<(), String> {
    Ok(())
}

fn adm_nonzero(p: &[Rat]) -> Result<(), String> {
    if p[0].is_zero() {
        return Err("parameter must be nonzero".into());
    }
    Ok(())
}

fn adm_positive(p: &[Rat]) -> Result<(), String> {
    if !p[0].is_positive() {
        return Err("parameter must be positive".into());
    }
    Ok(())
}

fn adm_open_unit_nonzero(p: &[Rat]) -> Result<(), String> {
    if p[0].is_zero() || p[0].abs() >= rint(1) {
        return Err("parameter must satisfy 0 < |a| < 1".into());
    }
    Ok(())
}

fn adm_a45(p: &[Rat]) -> Result<(), String> {
    let (a, b) = (&p[0], &p[1]);
    if a.is_zero() || b.is_zero() {
        return Err("parameters must be nonzero".into());
    }
    if a > b {
        return Err("parameters must satisfy a <= b".into());
    }
    if a < &rint(-1) || b > &rint(1) {
        return Err("parameters must lie in [-1, 1]".into());
    }
    Ok(())
}

fn adm_a49(p: &[Rat]) -> Result<(), String> {
    if p[0] <= rint(-1) || p[0] > rint(1) {
        return Err("parameter must satisfy -1 < b <= 1".into());
    }
    Ok(())
}

fn adm_a517(p: &[Rat]) -> Result<(), String> {
    if p[2].is_zero() {
        return Err("rotation speed s must be nonzero".into());
    }
    Ok(())
}

fn adm_a518(p: &[Rat]) -> Result<(), String> {
    if p[0].is_negative() {
        return Err("parameter must satisfy p >= 0".into());
    }
    Ok(())
}

fn adm_a526(p: &[Rat]) -> Result<(), String> {
    if p[1].abs() != rint(1) {
        return Err("epsilon must be +1 or -1".into());
    }
    Ok(())
}

fn adm_zero_only(p: &[Rat]) -> Result<(), String> {
    if !p[0].is_zero() {
        return Err("only the 0 member of this family is transcribed".into());
    }
    Ok(())
}

fn adm_ex22(p: &[Rat]) -> Result<(), String> {
    if p[0] <= rint(1) {
        return Err("parameter must satisfy a > 1".into());
    }
    Ok(())
}

// ---- sample plans (three points per free parameter, range-adjusted) ----

fn s_none() -> Vec<Vec<Rat>> {
    vec![vec![]]
}

fn s_signed_unit() -> Vec<Vec<Rat>> {
    vec![vec![rat(1, 3)], vec![rat(1, 2)], vec![rat(-1, 2)]]
}

fn s_positive() -> Vec<Vec<Rat>> {
    vec![vec![rat(1, 3)], vec![rat(1, 2)], vec![rat(3, 4)]]
}

fn s_nonzero() -> Vec<Vec<Rat>> {
    vec![vec![rat(1, 2)], vec![rat(3, 4)], vec![rat(-1, 2)]]
}

fn s_a45() -> Vec<Vec<Rat>> {
    vec![
        vec![rat(1, 3), rat(1, 2)],
        vec![rat(1, 2), rat(1, 2)],
        vec![rat(-1, 2), rat(3, 4)],
        vec![rat(-1, 2), rat(-1, 3)],
        vec![rat(2, 3), rint(1)],
    ]
}

fn s_a46() -> Vec<Vec<Rat>> {
    vec![
        vec![rat(1, 3), rat(1, 2)],
        vec![rat(1, 2), rat(1, 3)],
        vec![rat(1, 2), rat(1, 2)],
        vec![rat(-1, 3), rat(1, 2)],
        vec![rat(1, 2), rat(-1, 3)],
        vec![rat(1, 2), rint(0)],
    ]
}

fn s_a49() -> Vec<Vec<Rat>> {
    vec![vec![rat(1, 2)], vec![rint(1)], vec![rat(-1, 2)], vec![rint(0)]]
}

fn s_a514() -> Vec<Vec<Rat>> {
    vec![vec![rint(0)], vec![rat(1, 2)], vec![rat(-1, 2)]]
}

fn s_a517() -> Vec<Vec<Rat>> {
    vec![
        vec![rint(0), rint(0), rat(1, 2)],
        vec![rint(0), rint(0), rat(3, 4)],
        vec![rat(1, 2), rat(1, 3), rint(1)],
    ]
}

fn s_a518() -> Vec<Vec<Rat>> {
    vec![vec![rint(0)], vec![rat(1, 2)], vec![rint(1)]]
}

fn s_a526() -> Vec<Vec<Rat>> {
    vec![
        vec![rint(0), rint(1)],
        vec![rint(0), rint(-1)],
        vec![rat(1, 2), rint(1)],
    ]
}

fn s_zero() -> Vec<Vec<Rat>> {
    vec![vec![rint(0)]]
}

fn s_ex22() -> Vec<Vec<Rat>> {
    vec![vec![rat(3, 2)], vec![rat(5, 4)], vec![rint(2)]]
}

// ---- atomic builders ----

fn b_r2(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(LieAlgebra::abelian("R^2", 2))
}
fn b_r3(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(LieAlgebra::abelian("R^3", 3))
}
fn b_r4(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(LieAlgebra::abelian("R^4", 4))
}
fn b_r5(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(LieAlgebra::abelian("R^5", 5))
}

fn b_a2(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build("A_2", "e", 2, vec![(1, 2, vec![one(2)])])
}

fn b_heis(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build("Heis", "X", 3, vec![(1, 2, vec![one(3)])])
}

fn b_heis5(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "Heis(5)",
        "X",
        5,
        vec![(1, 2, vec![one(5)]), (3, 4, vec![one(5)])],
    )
}

fn b_a31(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build("A_{3,1}", "e", 3, vec![(2, 3, vec![one(1)])])
}

fn b_a32(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{3,2}",
        "e",
        3,
        vec![(1, 3, vec![one(1)]), (2, 3, vec![one(1), one(2)])],
    )
}

fn b_a33(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{3,3}",
        "e",
        3,
        vec![(1, 3, vec![one(1)]), (2, 3, vec![one(2)])],
    )
}

fn b_a34(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{3,4}",
        "e",
        3,
        vec![(1, 3, vec![one(1)]), (2, 3, vec![neg(2)])],
    )
}

fn b_a35(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{3,5}",
        "e",
        3,
        vec![(1, 3, vec![one(1)]), (2, 3, vec![t(2, p[0].clone())])],
    )
}

fn b_a36(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{3,6}",
        "e",
        3,
        vec![(1, 3, vec![neg(2)]), (2, 3, vec![one(1)])],
    )
}

fn b_a37(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    let a = p[0].clone();
    build(
        "A_{3,7}",
        "e",
        3,
        vec![
            (1, 3, vec![t(1, a.clone()), neg(2)]),
            (2, 3, vec![one(1), t(2, a)]),
        ],
    )
}

fn b_a41(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{4,1}",
        "e",
        4,
        vec![(2, 4, vec![one(1)]), (3, 4, vec![one(2)])],
    )
}

fn b_a42(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{4,2}",
        "e",
        4,
        vec![
            (1, 4, vec![t(1, p[0].clone())]),
            (2, 4, vec![one(2)]),
            (3, 4, vec![one(2), one(3)]),
        ],
    )
}

fn b_a43(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{4,3}",
        "e",
        4,
        vec![(1, 4, vec![one(1)]), (3, 4, vec![one(2)])],
    )
}

fn b_a44(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{4,4}",
        "e",
        4,
        vec![
            (1, 4, vec![one(1)]),
            (2, 4, vec![one(1), one(2)]),
            (3, 4, vec![one(2), one(3)]),
        ],
    )
}

fn b_a45(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{4,5}",
        "e",
        4,
        vec![
            (1, 4, vec![one(1)]),
            (2, 4, vec![t(2, p[0].clone())]),
            (3, 4, vec![t(3, p[1].clone())]),
        ],
    )
}

fn b_a46(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    let (a, b) = (p[0].clone(), p[1].clone());
    build(
        "A_{4,6}",
        "e",
        4,
        vec![
            (1, 4, vec![t(1, a)]),
            (2, 4, vec![t(2, b.clone()), neg(3)]),
            (3, 4, vec![one(2), t(3, b)]),
        ],
    )
}

fn b_a47(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{4,7}",
        "e",
        4,
        vec![
            (2, 3, vec![one(1)]),
            (1, 4, vec![t(1, rint(2))]),
            (2, 4, vec![one(2)]),
            (3, 4, vec![one(2), one(3)]),
        ],
    )
}

fn b_a48(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{4,8}",
        "e",
        4,
        vec![
            (2, 3, vec![one(1)]),
            (2, 4, vec![one(2)]),
            (3, 4, vec![neg(3)]),
        ],
    )
}

fn b_a49(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    let b = p[0].clone();
    build(
        "A_{4,9}",
        "e",
        4,
        vec![
            (2, 3, vec![one(1)]),
            (1, 4, vec![t(1, &b + rint(1))]),
            (2, 4, vec![one(2)]),
            (3, 4, vec![t(3, b)]),
        ],
    )
}

fn b_a410(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{4,10}",
        "e",
        4,
        vec![
            (2, 3, vec![one(1)]),
            (2, 4, vec![neg(3)]),
            (3, 4, vec![one(2)]),
        ],
    )
}

fn b_a411(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    let a = p[0].clone();
    build(
        "A_{4,11}",
        "e",
        4,
        vec![
            (2, 3, vec![one(1)]),
            (1, 4, vec![t(1, &a * rint(2))]),
            (2, 4, vec![t(2, a.clone()), neg(3)]),
            (3, 4, vec![one(2), t(3, a)]),
        ],
    )
}

fn b_a412(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{4,12}",
        "e",
        4,
        vec![
            (1, 3, vec![one(1)]),
            (2, 3, vec![one(2)]),
            (1, 4, vec![neg(2)]),
            (2, 4, vec![one(1)]),
        ],
    )
}

fn b_a51(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{5,1}",
        "e",
        5,
        vec![(3, 5, vec![one(1)]), (4, 5, vec![one(2)])],
    )
}

fn b_a52(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{5,2}",
        "e",
        5,
        vec![
            (2, 5, vec![one(1)]),
            (3, 5, vec![one(2)]),
            (4, 5, vec![one(3)]),
        ],
    )
}

fn b_a53(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{5,3}",
        "e",
        5,
        vec![
            (3, 4, vec![one(2)]),
            (3, 5, vec![one(1)]),
            (4, 5, vec![one(3)]),
        ],
    )
}

fn b_a54(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{5,4}",
        "e",
        5,
        vec![(2, 4, vec![one(1)]), (3, 5, vec![one(1)])],
    )
}

fn b_a55(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{5,5}",
        "e",
        5,
        vec![
            (3, 4, vec![one(1)]),
            (2, 5, vec![one(1)]),
            (3, 5, vec![one(2)]),
        ],
    )
}

fn b_a56(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "A_{5,6}",
        "e",
        5,
        vec![
            (3, 4, vec![one(1)]),
            (2, 5, vec![one(1)]),
            (3, 5, vec![one(2)]),
            (4, 5, vec![one(3)]),
        ],
    )
}

fn b_a514(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    let q = p[0].clone();
    build(
        "A_{5,14}",
        "e",
        5,
        vec![
            (2, 5, vec![one(1)]),
            (3, 5, vec![t(3, q.clone()), neg(4)]),
            (4, 5, vec![one(3), t(4, q)]),
        ],
    )
}

fn b_a517(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    let (pp, qq, ss) = (p[0].clone(), p[1].clone(), p[2].clone());
    build(
        "A_{5,17}",
        "e",
        5,
        vec![
            (1, 5, vec![t(1, pp.clone()), neg(2)]),
            (2, 5, vec![one(1), t(2, pp)]),
            (3, 5, vec![t(3, qq.clone()), t(4, -ss.clone())]),
            (4, 5, vec![t(3, ss), t(4, qq)]),
        ],
    )
}

fn b_a518(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    let q = p[0].clone();
    build(
        "A_{5,18}",
        "e",
        5,
        vec![
            (1, 5, vec![t(1, q.clone()), neg(2)]),
            (2, 5, vec![one(1), t(2, q.clone())]),
            (3, 5, vec![one(1), t(3, q.clone()), neg(4)]),
            (4, 5, vec![one(2), one(3), t(4, q)]),
        ],
    )
}

fn b_a526(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    let (q, eps) = (p[0].clone(), p[1].clone());
    let two_q = &q * rint(2);
    build(
        "A_{5,26}",
        "e",
        5,
        vec![
            (2, 3, vec![one(1)]),
            (1, 5, vec![t(1, two_q.clone())]),
            (2, 5, vec![t(2, q.clone()), neg(3)]),
            (3, 5, vec![one(2), t(3, q)]),
            (4, 5, vec![t(1, eps), t(4, two_q)]),
        ],
    )
}

fn b_l68(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "L_{6,8}",
        "X",
        6,
        vec![(1, 2, vec![one(5)]), (2, 4, vec![one(6)])],
    )
}

fn b_l622(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "L_{6,22}",
        "X",
        6,
        vec![
            (1, 2, vec![one(5)]),
            (2, 4, vec![one(6)]),
            (3, 4, vec![one(5)]),
        ],
    )
}

fn b_l623(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "L_{6,23}",
        "X",
        6,
        vec![
            (1, 2, vec![one(3)]),
            (1, 3, vec![one(5)]),
            (1, 4, vec![one(6)]),
            (2, 4, vec![one(5)]),
        ],
    )
}

fn b_l625(_: &[Rat]) -> Result<LieAlgebra, LieError> {
    build(
        "L_{6,25}",
        "X",
        6,
        vec![
            (1, 2, vec![one(3)]),
            (1, 3, vec![one(5)]),
            (1, 4, vec![one(6)]),
        ],
    )
}

// de Graaf aliases for the 5D nilpotent entries (same isomorphism classes,
// presented on the Patera basis).
fn b_l54(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(b_a54(p)?.renamed("L_{5,4}"))
}
fn b_l55(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(b_a55(p)?.renamed("L_{5,5}"))
}
fn b_l56(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(b_a56(p)?.renamed("L_{5,6}"))
}
fn b_l57(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(b_a52(p)?.renamed("L_{5,7}"))
}
fn b_l58(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(b_a51(p)?.renamed("L_{5,8}"))
}
fn b_l59(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(b_a53(p)?.renamed("L_{5,9}"))
}

// ---- products ----

fn b_rx_a31(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(with_central_factor(1, b_a31(p)?, "RxA_{3,1}"))
}
fn b_rx_a32(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(with_central_factor(1, b_a32(p)?, "RxA_{3,2}"))
}
fn b_rx_a33(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(with_central_factor(1, b_a33(p)?, "RxA_{3,3}"))
}
fn b_rx_a34(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(with_central_factor(1, b_a34(p)?, "RxA_{3,4}"))
}
fn b_rx_a35(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(with_central_factor(1, b_a35(p)?, "RxA_{3,5}"))
}
fn b_rx_a36(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(with_central_factor(1, b_a36(p)?, "RxA_{3,6}"))
}
fn b_rx_a37(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(with_central_factor(1, b_a37(p)?, "RxA_{3,7}"))
}
fn b_r2x_a2(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(with_central_factor(2, b_a2(p)?, "R^2xA_2"))
}
fn b_a2x_a2(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    let mut g = b_a2(p)?.direct_sum(&b_a2(p)?, "A_2xA_2");
    g.basis_labels = labels("e", 4);
    Ok(g)
}
fn b_r2x_a31(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(with_central_factor(2, b_a31(p)?, "R^2xA_{3,1}"))
}
fn b_rx_a41(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(with_central_factor(1, b_a41(p)?, "RxA_{4,1}"))
}
fn b_r2x_a36(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(with_central_factor(2, b_a36(p)?, "R^2xA_{3,6}"))
}
fn b_rx_a410(p: &[Rat]) -> Result<LieAlgebra, LieError> {
    Ok(with_central_factor(1, b_a410(p)?, "RxA_{4,10}"))
}

// ---- example pair ingredients ----

pub(super) fn heis_x_r3() -> LieAlgebra {
    build(
        "HeisxR^3",
        "X",
        6,
        vec![(1, 2, vec![one(3)])],
    )
    .unwrap()
}

pub(super) fn heis_x_r() -> LieAlgebra {
    build("HeisxR", "X", 4, vec![(1, 2, vec![one(3)])]).unwrap()
}

pub(super) fn heis5_x_heis5() -> LieAlgebra {
    build(
        "Heis(5)xHeis(5)",
        "X",
        10,
        vec![
            (1, 2, vec![one(5)]),
            (3, 4, vec![one(5)]),
            (6, 7, vec![one(10)]),
            (8, 9, vec![one(10)]),
        ],
    )
    .unwrap()
}

pub(super) fn ex22_admissible(p: &[Rat]) -> Result<(), String> {
    adm_ex22(p)
}

pub(super) fn ex22_samples() -> Vec<Vec<Rat>> {
    s_ex22()
}

const P0: &[&str] = &[];
const P_A: &[&str] = &["a"];
const P_B: &[&str] = &["b"];
const P_AB: &[&str] = &["a", "b"];
const P_PQS: &[&str] = &["p", "q", "s"];
const P_P: &[&str] = &["p"];
const P_PEPS: &[&str] = &["p", "eps"];
const P_EPS: &[&str] = &["eps"];

const PATERA: &str = "Patera-Sharp-Winternitz-Zassenhaus, J. Math. Phys. 17 (1976), Table I";
const PATERA5: &str = "Patera-Sharp-Winternitz-Zassenhaus, J. Math. Phys. 17 (1976), Table II";
const DEGRAAF: &str = "de Graaf, J. Algebra 309 (2007), nilpotent classification";
const PLUMBING: &str = "standard product/abelian algebra";

pub(super) static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { label: "R^2", param_names: P0, dim: 2, provenance: PLUMBING, builder: b_r2, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "R^3", param_names: P0, dim: 3, provenance: PLUMBING, builder: b_r3, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "R^4", param_names: P0, dim: 4, provenance: PLUMBING, builder: b_r4, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "R^5", param_names: P0, dim: 5, provenance: PLUMBING, builder: b_r5, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_2", param_names: P0, dim: 2, provenance: PATERA, builder: b_a2, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "Heis", param_names: P0, dim: 3, provenance: "Heisenberg algebra, [X1,X2]=X3 convention", builder: b_heis, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "Heis(5)", param_names: P0, dim: 5, provenance: "5-dimensional Heisenberg algebra", builder: b_heis5, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{3,1}", param_names: P0, dim: 3, provenance: PATERA, builder: b_a31, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{3,2}", param_names: P0, dim: 3, provenance: PATERA, builder: b_a32, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{3,3}", param_names: P0, dim: 3, provenance: PATERA, builder: b_a33, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{3,4}", param_names: P0, dim: 3, provenance: PATERA, builder: b_a34, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{3,5}", param_names: P_A, dim: 3, provenance: PATERA, builder: b_a35, admissible: adm_open_unit_nonzero, t_index: None, samples: s_signed_unit },
    CatalogEntry { label: "A_{3,6}", param_names: P0, dim: 3, provenance: PATERA, builder: b_a36, admissible: adm_none, t_index: Some(2), samples: s_none },
    CatalogEntry { label: "A_{3,7}", param_names: P_A, dim: 3, provenance: PATERA, builder: b_a37, admissible: adm_positive, t_index: Some(2), samples: s_positive },
    CatalogEntry { label: "A_{4,1}", param_names: P0, dim: 4, provenance: PATERA, builder: b_a41, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{4,2}", param_names: P_A, dim: 4, provenance: PATERA, builder: b_a42, admissible: adm_nonzero, t_index: None, samples: s_nonzero },
    CatalogEntry { label: "A_{4,3}", param_names: P0, dim: 4, provenance: PATERA, builder: b_a43, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{4,4}", param_names: P0, dim: 4, provenance: PATERA, builder: b_a44, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{4,5}", param_names: P_AB, dim: 4, provenance: PATERA, builder: b_a45, admissible: adm_a45, t_index: None, samples: s_a45 },
    CatalogEntry { label: "A_{4,6}", param_names: P_AB, dim: 4, provenance: "Patera Table I; both signs of b admitted (b and -b are isomorphic)", builder: b_a46, admissible: adm_nonzero, t_index: Some(3), samples: s_a46 },
    CatalogEntry { label: "A_{4,7}", param_names: P0, dim: 4, provenance: PATERA, builder: b_a47, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{4,8}", param_names: P0, dim: 4, provenance: PATERA, builder: b_a48, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{4,9}", param_names: P_B, dim: 4, provenance: PATERA, builder: b_a49, admissible: adm_a49, t_index: None, samples: s_a49 },
    CatalogEntry { label: "A_{4,10}", param_names: P0, dim: 4, provenance: PATERA, builder: b_a410, admissible: adm_none, t_index: Some(3), samples: s_none },
    CatalogEntry { label: "A_{4,11}", param_names: P_A, dim: 4, provenance: PATERA, builder: b_a411, admissible: adm_positive, t_index: Some(3), samples: s_positive },
    CatalogEntry { label: "A_{4,12}", param_names: P0, dim: 4, provenance: PATERA, builder: b_a412, admissible: adm_none, t_index: Some(3), samples: s_none },
    CatalogEntry { label: "A_{5,1}", param_names: P0, dim: 5, provenance: PATERA5, builder: b_a51, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{5,2}", param_names: P0, dim: 5, provenance: PATERA5, builder: b_a52, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{5,3}", param_names: P0, dim: 5, provenance: PATERA5, builder: b_a53, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{5,4}", param_names: P0, dim: 5, provenance: PATERA5, builder: b_a54, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{5,5}", param_names: P0, dim: 5, provenance: PATERA5, builder: b_a55, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{5,6}", param_names: P0, dim: 5, provenance: PATERA5, builder: b_a56, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_{5,14}", param_names: P_P, dim: 5, provenance: PATERA5, builder: b_a514, admissible: adm_none, t_index: Some(4), samples: s_a514 },
    CatalogEntry { label: "A_{5,17}", param_names: P_PQS, dim: 5, provenance: "Patera Table II; parameters ordered (p, q, s) = (first rotation real part, second rotation real part, second rotation speed)", builder: b_a517, admissible: adm_a517, t_index: Some(4), samples: s_a517 },
    CatalogEntry { label: "A_{5,18}", param_names: P_P, dim: 5, provenance: PATERA5, builder: b_a518, admissible: adm_a518, t_index: Some(4), samples: s_a518 },
    CatalogEntry { label: "A_{5,26}", param_names: P_PEPS, dim: 5, provenance: PATERA5, builder: b_a526, admissible: adm_a526, t_index: Some(4), samples: s_a526 },
    CatalogEntry { label: "L_{5,4}", param_names: P0, dim: 5, provenance: DEGRAAF, builder: b_l54, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "L_{5,5}", param_names: P0, dim: 5, provenance: DEGRAAF, builder: b_l55, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "L_{5,6}", param_names: P0, dim: 5, provenance: DEGRAAF, builder: b_l56, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "L_{5,7}", param_names: P0, dim: 5, provenance: DEGRAAF, builder: b_l57, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "L_{5,8}", param_names: P0, dim: 5, provenance: DEGRAAF, builder: b_l58, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "L_{5,9}", param_names: P0, dim: 5, provenance: DEGRAAF, builder: b_l59, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "L_{6,8}", param_names: P0, dim: 6, provenance: DEGRAAF, builder: b_l68, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "L_{6,22}", param_names: P_EPS, dim: 6, provenance: "de Graaf family; only the eps = 0 member is transcribed", builder: b_l622, admissible: adm_zero_only, t_index: None, samples: s_zero },
    CatalogEntry { label: "L_{6,23}", param_names: P0, dim: 6, provenance: DEGRAAF, builder: b_l623, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "L_{6,25}", param_names: P0, dim: 6, provenance: DEGRAAF, builder: b_l625, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "RxA_{3,1}", param_names: P0, dim: 4, provenance: PLUMBING, builder: b_rx_a31, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "RxA_{3,2}", param_names: P0, dim: 4, provenance: PLUMBING, builder: b_rx_a32, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "RxA_{3,3}", param_names: P0, dim: 4, provenance: PLUMBING, builder: b_rx_a33, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "RxA_{3,4}", param_names: P0, dim: 4, provenance: PLUMBING, builder: b_rx_a34, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "RxA_{3,5}", param_names: P_A, dim: 4, provenance: PLUMBING, builder: b_rx_a35, admissible: adm_open_unit_nonzero, t_index: None, samples: s_signed_unit },
    CatalogEntry { label: "RxA_{3,6}", param_names: P0, dim: 4, provenance: PLUMBING, builder: b_rx_a36, admissible: adm_none, t_index: Some(3), samples: s_none },
    CatalogEntry { label: "RxA_{3,7}", param_names: P_A, dim: 4, provenance: PLUMBING, builder: b_rx_a37, admissible: adm_positive, t_index: Some(3), samples: s_positive },
    CatalogEntry { label: "R^2xA_2", param_names: P0, dim: 4, provenance: PLUMBING, builder: b_r2x_a2, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "A_2xA_2", param_names: P0, dim: 4, provenance: PLUMBING, builder: b_a2x_a2, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "R^2xA_{3,1}", param_names: P0, dim: 5, provenance: PLUMBING, builder: b_r2x_a31, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "RxA_{4,1}", param_names: P0, dim: 5, provenance: PLUMBING, builder: b_rx_a41, admissible: adm_none, t_index: None, samples: s_none },
    CatalogEntry { label: "R^2xA_{3,6}", param_names: P0, dim: 5, provenance: PLUMBING, builder: b_r2x_a36, admissible: adm_none, t_index: Some(4), samples: s_none },
    CatalogEntry { label: "RxA_{4,10}", param_names: P0, dim: 5, provenance: PLUMBING, builder: b_rx_a410, admissible: adm_none, t_index: Some(4), samples: s_none },
];
