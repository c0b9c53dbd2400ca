//! Authored fixture isomorphisms and isometry-class tags.
//!
//! A fixture is only ever trusted after exact verification: the matrix must
//! be invertible and intertwine the brackets of the computed algebra and the
//! catalog target. No isomorphism is claimed without such a witness.

use super::{format_instance, load};
use crate::error::LieError;
use crate::lie::{associated_carnot, is_isomorphism};
use crate::matrix::Matrix;
use crate::rat::{fmt_rat, rint, Rat};
use crate::shadow::real_shadow;
use num_traits::{One, Signed, Zero};

/// Isometry-class tag in the four-dimensional labeling, e.g. `(18)` or
/// `(7,1/2)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassTag(pub String);

impl std::fmt::Display for ClassTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Maps the real-shadow of a source instance onto a catalog target: the
/// matrix sends the shadow basis (same labels as the source) to the target
/// basis, column-as-image.
#[derive(Clone, Debug)]
pub struct ShadowFixture {
    pub target_label: &'static str,
    pub target_params: Vec<Rat>,
    pub matrix: Matrix,
}

/// Matrix from sparse column data: `(src, tgt, coeff)` means the `src`-th
/// basis vector maps to `coeff` times the `tgt`-th target vector.
fn col_map(n: usize, entries: &[(usize, usize, Rat)]) -> Matrix {
    let mut m = Matrix::zero(n, n);
    for (src, tgt, c) in entries {
        *m.at_mut(*tgt, *src) = c.clone();
    }
    m
}

fn perm(n: usize, images: &[usize]) -> Matrix {
    let data: Vec<(usize, usize, Rat)> = images
        .iter()
        .enumerate()
        .map(|(s, &t)| (s, t, rint(1)))
        .collect();
    col_map(n, &data)
}

/// The authored fixture for the real-shadow of a catalog instance, when one
/// exists. Targets are always completely solvable catalog entries.
pub fn shadow_fixture_for(label: &str, params: &[Rat]) -> Option<ShadowFixture> {
    match label {
        "RxA_{3,6}" => Some(ShadowFixture {
            target_label: "R^4",
            target_params: vec![],
            matrix: Matrix::identity(4),
        }),
        "A_{4,10}" => Some(ShadowFixture {
            target_label: "RxA_{3,1}",
            // shadow keeps [e2,e3]=e1; target has [f3,f4]=f2 with f1 central
            target_params: vec![],
            matrix: perm(4, &[1, 2, 3, 0]),
        }),
        "A_{4,6}" => {
            let (x, y) = (params[0].clone(), params[1].clone());
            if y.is_zero() {
                // shadow keeps [e1,e4] = x e1; target R^2 x A_2 with
                // [f3,f4] = f4
                return Some(ShadowFixture {
                    target_label: "R^2xA_2",
                    target_params: vec![],
                    matrix: col_map(
                        4,
                        &[(0, 3, rint(1)), (1, 0, rint(1)), (2, 1, rint(1)), (3, 2, -x)],
                    ),
                });
            }
            if y.abs() <= x.abs() {
                // shadow weights (x, y, y) ~ (1, y/x, y/x)
                let r = &y / &x;
                Some(ShadowFixture {
                    target_label: "A_{4,5}",
                    target_params: vec![r.clone(), r],
                    matrix: col_map(
                        4,
                        &[
                            (0, 0, rint(1)),
                            (1, 1, rint(1)),
                            (2, 2, rint(1)),
                            (3, 3, x),
                        ],
                    ),
                })
            } else {
                // shadow weights (x, y, y) ~ (x/y, 1, 1)
                let r = &x / &y;
                Some(ShadowFixture {
                    target_label: "A_{4,5}",
                    target_params: vec![r, rint(1)],
                    matrix: col_map(
                        4,
                        &[
                            (0, 1, rint(1)),
                            (1, 0, rint(1)),
                            (2, 2, rint(1)),
                            (3, 3, y),
                        ],
                    ),
                })
            }
        }
        "A_{4,11}" => {
            let a = params[0].clone();
            Some(ShadowFixture {
                target_label: "A_{4,9}",
                target_params: vec![rint(1)],
                matrix: col_map(
                    4,
                    &[
                        (0, 0, rint(1)),
                        (1, 1, rint(1)),
                        (2, 2, rint(1)),
                        (3, 3, a),
                    ],
                ),
            })
        }
        "A_{4,12}" => Some(ShadowFixture {
            target_label: "RxA_{3,3}",
            target_params: vec![],
            matrix: perm(4, &[1, 2, 3, 0]),
        }),
        "RxA_{3,7}" => {
            let a = params[0].clone();
            Some(ShadowFixture {
                target_label: "RxA_{3,3}",
                target_params: vec![],
                matrix: col_map(
                    4,
                    &[
                        (0, 0, rint(1)),
                        (1, 1, rint(1)),
                        (2, 2, rint(1)),
                        (3, 3, a),
                    ],
                ),
            })
        }
        "R^2xA_{3,6}" => Some(ShadowFixture {
            target_label: "R^5",
            target_params: vec![],
            matrix: Matrix::identity(5),
        }),
        "RxA_{4,10}" => Some(ShadowFixture {
            target_label: "R^2xA_{3,1}",
            // shadow keeps [e3,e4]=e2; target has [f4,f5]=f3
            target_params: vec![],
            matrix: perm(5, &[0, 2, 3, 4, 1]),
        }),
        "A_{5,17}" => {
            if params[0].is_zero() && params[1].is_zero() {
                Some(ShadowFixture {
                    target_label: "R^5",
                    target_params: vec![],
                    matrix: Matrix::identity(5),
                })
            } else {
                None
            }
        }
        "A_{5,14}" => {
            if params[0].is_zero() {
                // shadow keeps [e2,e5]=e1; target has [f4,f5]=f3
                Some(ShadowFixture {
                    target_label: "R^2xA_{3,1}",
                    target_params: vec![],
                    matrix: perm(5, &[2, 3, 0, 1, 4]),
                })
            } else {
                None
            }
        }
        "A_{5,26}" => {
            if params[0].is_zero() {
                let eps = params[1].clone();
                // shadow keeps [e2,e3]=e1, [e4,e5]=eps e1;
                // target Heis(5) form [f2,f4]=f1, [f3,f5]=f1
                Some(ShadowFixture {
                    target_label: "A_{5,4}",
                    target_params: vec![],
                    matrix: col_map(
                        5,
                        &[
                            (0, 0, rint(1)),
                            (1, 1, rint(1)),
                            (2, 3, rint(1)),
                            (3, 2, eps),
                            (4, 4, rint(1)),
                        ],
                    ),
                })
            } else {
                None
            }
        }
        "A_{5,18}" => {
            if params[0].is_zero() {
                // shadow is [e3,e5]=e1, [e4,e5]=e2, which is A_{5,1} itself
                Some(ShadowFixture {
                    target_label: "A_{5,1}",
                    target_params: vec![],
                    matrix: Matrix::identity(5),
                })
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Fixture for the associated Carnot algebra of the two non-graded
/// nilpotent catalog entries. The source basis is the deterministic graded
/// basis produced by `associated_carnot`.
pub fn carnot_fixture_for(label: &str) -> Option<ShadowFixture> {
    match label {
        // graded basis (e3,e4,e5,e2,e1); brackets [f1,f3]=f4, [f3,f4]=-f5
        "A_{5,5}" | "L_{5,5}" => Some(ShadowFixture {
            target_label: "RxA_{4,1}",
            target_params: vec![],
            matrix: perm(5, &[3, 0, 4, 2, 1]),
        }),
        // graded basis (e4,e5,e3,e2,e1); brackets [f1,f2]=f3, [f2,f3]=-f4,
        // [f2,f4]=-f5
        "A_{5,6}" | "L_{5,6}" => Some(ShadowFixture {
            target_label: "A_{5,2}",
            target_params: vec![],
            matrix: perm(5, &[3, 4, 2, 1, 0]),
        }),
        _ => None,
    }
}

/// Verifies the authored shadow fixture of an instance: recomputes the
/// real-shadow, loads the target and checks bracket preservation exactly.
pub fn verify_shadow_fixture(label: &str, params: &[Rat]) -> Result<(), LieError> {
    let fixture = shadow_fixture_for(label, params).ok_or_else(|| {
        LieError::NoCatalogMatch(format!(
            "no authored shadow fixture for {}",
            format_instance(label, params)
        ))
    })?;
    let g = load(label, params)?;
    let shadow = real_shadow(&g)?.shadow;
    let target = load(fixture.target_label, &fixture.target_params)?;
    if !is_isomorphism(&shadow, &target, &fixture.matrix) {
        return Err(LieError::NoCatalogMatch(format!(
            "fixture matrix for {} does not intertwine its shadow with {}",
            format_instance(label, params),
            format_instance(fixture.target_label, &fixture.target_params)
        )));
    }
    Ok(())
}

/// Verifies a Carnot fixture: associated graded algebra against its target.
pub fn verify_carnot_fixture(label: &str) -> Result<(), LieError> {
    let fixture = carnot_fixture_for(label).ok_or_else(|| {
        LieError::NoCatalogMatch(format!("no authored Carnot fixture for {label}"))
    })?;
    let g = load(label, &[])?;
    let graded = associated_carnot(&g)?;
    let target = load(fixture.target_label, &fixture.target_params)?;
    if !is_isomorphism(&graded, &target, &fixture.matrix) {
        return Err(LieError::NoCatalogMatch(format!(
            "Carnot fixture for {label} does not intertwine gr with {}",
            fixture.target_label
        )));
    }
    Ok(())
}

/// Isometry-class tag of a completely solvable 4-dimensional catalog
/// instance, per the classification table labeling.
pub fn class_tag_of(label: &str, params: &[Rat]) -> Option<ClassTag> {
    let tag = |s: String| Some(ClassTag(s));
    let p0 = params.first();
    match label {
        "R^4" => tag("(1)".into()),
        "RxA_{3,1}" => tag("(2)".into()),
        "A_{4,1}" => tag("(3)".into()),
        "A_{4,2}" => {
            let a = p0?;
            if a.is_positive() {
                tag(format!("(4,{})", fmt_rat(a)))
            } else {
                tag(format!("(11,{})", fmt_rat(a)))
            }
        }
        "A_{4,4}" => tag("(5)".into()),
        "A_{4,5}" => {
            let (a, b) = (&params[0], &params[1]);
            if a == b {
                if a.is_positive() {
                    tag(format!("(7,{})", fmt_rat(a)))
                } else {
                    tag(format!("(13,{})", fmt_rat(a)))
                }
            } else if a.is_positive() {
                tag(format!("(6,{},{})", fmt_rat(a), fmt_rat(b)))
            } else {
                tag(format!("(12,{},{})", fmt_rat(a), fmt_rat(b)))
            }
        }
        "A_{4,7}" => tag("(8)".into()),
        "A_{4,8}" => tag("(15)".into()),
        "A_{4,9}" => {
            let b = p0?;
            if b.is_one() {
                tag("(10)".into())
            } else if b.is_zero() {
                tag("(16)".into())
            } else if b.is_positive() {
                tag(format!("(9,{})", fmt_rat(b)))
            } else {
                tag(format!("(14,{})", fmt_rat(b)))
            }
        }
        "RxA_{3,2}" => tag("(17)".into()),
        "RxA_{3,3}" => tag("(18)".into()),
        "A_2xA_2" => tag("(19)".into()),
        "RxA_{3,5}" => tag(format!("(20,{})", fmt_rat(p0?))),
        "RxA_{3,4}" => tag("(21)".into()),
        "A_{4,3}" => tag("(22)".into()),
        "R^2xA_2" => tag("(23)".into()),
        _ => None,
    }
}
