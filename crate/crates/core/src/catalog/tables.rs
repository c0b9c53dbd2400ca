//! Golden classification tables with their deterministic sample plans.
//!
//! Parameterized families are sampled on fixed rational grids (one-parameter
//! families at three points adjusted to the admissible range, two-parameter
//! families on a 3x3 grid plus sign variants), so every reproduction run
//! checks the same exact instances.

use super::fixtures::ClassTag;
use crate::rat::{fmt_rat, rat, rint, Rat};
use crate::shadow::QiType;
use num_traits::Signed;

#[derive(Clone, Debug)]
pub struct Table1Row {
    pub family: &'static str,
    pub label: String,
    pub params: Vec<Rat>,
    pub expected: QiType,
}

#[derive(Clone, Debug)]
pub struct Table2Row {
    pub label: String,
    pub params: Vec<Rat>,
    pub shadow_label: String,
    pub shadow_params: Vec<Rat>,
    pub class_tag: ClassTag,
}

#[derive(Clone, Debug)]
pub enum Table3RowKind {
    /// Nilpotent and already graded: no extra column.
    Carnot,
    /// Nilpotent, not graded: the associated Carnot algebra is listed.
    NilpotentNonCarnot { g_infinity: &'static str },
    /// Not nilpotent: the nilshadow column is listed.
    TypeRNonNilpotent {
        nilshadow_label: &'static str,
        nilshadow_params: Vec<Rat>,
    },
}

#[derive(Clone, Debug)]
pub struct Table3Row {
    pub family: &'static str,
    pub label: String,
    pub params: Vec<Rat>,
    pub kind: Table3RowKind,
}

#[derive(Clone, Debug)]
pub struct ThmClass {
    pub name: String,
    pub members: Vec<(String, Vec<Rat>)>,
}

fn row1(family: &'static str, label: &str, params: Vec<Rat>, expected: QiType) -> Table1Row {
    Table1Row {
        family,
        label: label.to_string(),
        params,
        expected,
    }
}

/// The 23 completely solvable four-dimensional families with their coarse
/// quasi-isometry types, sampled per the catalog policy.
pub fn table1_rows() -> Vec<Table1Row> {
    use QiType::*;
    let mut rows = Vec::new();
    rows.push(row1("(1)", "R^4", vec![], PolyGrowth));
    rows.push(row1("(2)", "RxA_{3,1}", vec![], PolyGrowth));
    rows.push(row1("(3)", "A_{4,1}", vec![], PolyGrowth));
    for a in [rat(1, 3), rat(1, 2), rat(3, 4)] {
        rows.push(row1("(4,a)", "A_{4,2}", vec![a], Heintze));
    }
    rows.push(row1("(5)", "A_{4,4}", vec![], Heintze));
    for (a, b) in [
        (rat(1, 3), rat(1, 2)),
        (rat(1, 3), rat(3, 4)),
        (rat(1, 2), rat(3, 4)),
    ] {
        rows.push(row1("(6,a,b)", "A_{4,5}", vec![a, b], Heintze));
    }
    for a in [rat(1, 3), rat(1, 2), rat(3, 4)] {
        rows.push(row1("(7,a)", "A_{4,5}", vec![a.clone(), a], Heintze));
    }
    rows.push(row1("(8)", "A_{4,7}", vec![], Heintze));
    for a in [rat(1, 3), rat(1, 2), rat(3, 4)] {
        rows.push(row1("(9,a)", "A_{4,9}", vec![a], Heintze));
    }
    rows.push(row1("(10)", "A_{4,9}", vec![rint(1)], Heintze));
    for a in [rat(-1, 3), rat(-1, 2), rat(-3, 4)] {
        rows.push(row1("(11,a)", "A_{4,2}", vec![a], ConeDim(1)));
    }
    for (a, b) in [
        (rat(-1, 2), rat(1, 3)),
        (rat(-1, 2), rat(-1, 3)),
        (rat(-3, 4), rat(1, 2)),
    ] {
        rows.push(row1("(12,a,b)", "A_{4,5}", vec![a, b], ConeDim(1)));
    }
    for a in [rat(-1, 3), rat(-1, 2), rat(-3, 4)] {
        rows.push(row1("(13,a)", "A_{4,5}", vec![a.clone(), a], ConeDim(1)));
    }
    for a in [rat(-1, 3), rat(-1, 2), rat(-3, 4)] {
        rows.push(row1("(14,a)", "A_{4,9}", vec![a], ConeDim(1)));
    }
    rows.push(row1("(15)", "A_{4,8}", vec![], ConeDim(1)));
    rows.push(row1("(16)", "A_{4,9}", vec![rint(0)], ConeDim(2)));
    rows.push(row1("(17)", "RxA_{3,2}", vec![], ConeDim(2)));
    rows.push(row1("(18)", "RxA_{3,3}", vec![], ConeDim(2)));
    rows.push(row1("(19)", "A_2xA_2", vec![], ConeDim(2)));
    for a in [rat(1, 3), rat(1, 2), rat(-1, 2)] {
        rows.push(row1("(20,a)", "RxA_{3,5}", vec![a], ConeDim(2)));
    }
    rows.push(row1("(21)", "RxA_{3,4}", vec![], ConeDim(2)));
    rows.push(row1("(22)", "A_{4,3}", vec![], ConeDim(3)));
    rows.push(row1("(23)", "R^2xA_2", vec![], ConeDim(3)));
    rows
}

/// The printed ratio rule for the diagonal real-shadow of the mixed
/// scaling-plus-rotation family: `sign(ab) min(|b/a|, |a/b|)`.
pub fn printed_lambda(a: &Rat, b: &Rat) -> Rat {
    let r1 = (b / a).abs();
    let r2 = (a / b).abs();
    let m = if r1 <= r2 { r1 } else { r2 };
    if (a * b).is_negative() {
        -m
    } else {
        m
    }
}

fn a46_grid() -> Vec<(Rat, Rat)> {
    let pos = [rat(1, 3), rat(1, 2), rat(3, 4)];
    let mut grid = Vec::new();
    for a in &pos {
        for b in &pos {
            grid.push((a.clone(), b.clone()));
        }
    }
    grid.extend([
        (rat(-1, 3), rat(1, 2)),
        (rat(-1, 2), rat(3, 4)),
        (rat(-1, 2), rat(1, 2)),
        (rat(1, 2), rat(-1, 3)),
        (rat(3, 4), rat(-1, 2)),
    ]);
    grid
}

fn a46_zero_samples() -> Vec<Rat> {
    vec![rat(1, 3), rat(1, 2), rat(-1, 2)]
}

/// Non-completely-solvable four-dimensional instances with the printed
/// real-shadow targets and isometry-class tags.
pub fn table2_rows() -> Vec<Table2Row> {
    let mut rows = Vec::new();
    rows.push(Table2Row {
        label: "RxA_{3,6}".into(),
        params: vec![],
        shadow_label: "R^4".into(),
        shadow_params: vec![],
        class_tag: ClassTag("(1)".into()),
    });
    rows.push(Table2Row {
        label: "A_{4,10}".into(),
        params: vec![],
        shadow_label: "RxA_{3,1}".into(),
        shadow_params: vec![],
        class_tag: ClassTag("(2)".into()),
    });
    for (a, b) in a46_grid() {
        let lambda = printed_lambda(&a, &b);
        let family = if lambda.is_positive() { 7 } else { 13 };
        rows.push(Table2Row {
            label: "A_{4,6}".into(),
            params: vec![a, b],
            shadow_label: "A_{4,5}".into(),
            shadow_params: vec![lambda.clone(), lambda.clone()],
            class_tag: ClassTag(format!("({family},{})", fmt_rat(&lambda))),
        });
    }
    for a in [rat(1, 3), rat(1, 2), rat(3, 4)] {
        rows.push(Table2Row {
            label: "A_{4,11}".into(),
            params: vec![a],
            shadow_label: "A_{4,9}".into(),
            shadow_params: vec![rint(1)],
            class_tag: ClassTag("(10)".into()),
        });
    }
    for a in [rat(1, 3), rat(1, 2), rat(3, 4)] {
        rows.push(Table2Row {
            label: "RxA_{3,7}".into(),
            params: vec![a],
            shadow_label: "RxA_{3,3}".into(),
            shadow_params: vec![],
            class_tag: ClassTag("(18)".into()),
        });
    }
    rows.push(Table2Row {
        label: "A_{4,12}".into(),
        params: vec![],
        shadow_label: "RxA_{3,3}".into(),
        shadow_params: vec![],
        class_tag: ClassTag("(18)".into()),
    });
    for a in a46_zero_samples() {
        rows.push(Table2Row {
            label: "A_{4,6}".into(),
            params: vec![a, rint(0)],
            shadow_label: "R^2xA_2".into(),
            shadow_params: vec![],
            class_tag: ClassTag("(23)".into()),
        });
    }
    rows
}

/// The fifteen five-dimensional polynomial-growth families with their
/// nilshadow / associated-Carnot columns, sampled where parameterized.
pub fn table3_rows() -> Vec<Table3Row> {
    use Table3RowKind::*;
    let mut rows = Vec::new();
    let carnot = [
        "R^5",
        "R^2xA_{3,1}",
        "RxA_{4,1}",
        "A_{5,1}",
        "A_{5,2}",
        "A_{5,3}",
        "A_{5,4}",
    ];
    for label in carnot {
        rows.push(Table3Row {
            family: label,
            label: label.into(),
            params: vec![],
            kind: Carnot,
        });
    }
    rows.push(Table3Row {
        family: "A_{5,5}",
        label: "A_{5,5}".into(),
        params: vec![],
        kind: NilpotentNonCarnot {
            g_infinity: "RxA_{4,1}",
        },
    });
    rows.push(Table3Row {
        family: "A_{5,6}",
        label: "A_{5,6}".into(),
        params: vec![],
        kind: NilpotentNonCarnot {
            g_infinity: "A_{5,2}",
        },
    });
    rows.push(Table3Row {
        family: "R^2xA_{3,6}",
        label: "R^2xA_{3,6}".into(),
        params: vec![],
        kind: TypeRNonNilpotent {
            nilshadow_label: "R^5",
            nilshadow_params: vec![],
        },
    });
    rows.push(Table3Row {
        family: "RxA_{4,10}",
        label: "RxA_{4,10}".into(),
        params: vec![],
        kind: TypeRNonNilpotent {
            nilshadow_label: "R^2xA_{3,1}",
            nilshadow_params: vec![],
        },
    });
    for s in [rat(1, 3), rat(1, 2), rat(3, 4)] {
        rows.push(Table3Row {
            family: "A_{5,17}^{s,0,0}",
            label: "A_{5,17}".into(),
            params: vec![rint(0), rint(0), s],
            kind: TypeRNonNilpotent {
                nilshadow_label: "R^5",
                nilshadow_params: vec![],
            },
        });
    }
    rows.push(Table3Row {
        family: "A_{5,14}^0",
        label: "A_{5,14}".into(),
        params: vec![rint(0)],
        kind: TypeRNonNilpotent {
            nilshadow_label: "R^2xA_{3,1}",
            nilshadow_params: vec![],
        },
    });
    for eps in [rint(1), rint(-1)] {
        rows.push(Table3Row {
            family: "A_{5,26}^{0,eps}",
            label: "A_{5,26}".into(),
            params: vec![rint(0), eps],
            kind: TypeRNonNilpotent {
                nilshadow_label: "A_{5,4}",
                nilshadow_params: vec![],
            },
        });
    }
    rows.push(Table3Row {
        family: "A_{5,18}^0",
        label: "A_{5,18}".into(),
        params: vec![rint(0)],
        kind: TypeRNonNilpotent {
            nilshadow_label: "A_{5,1}",
            nilshadow_params: vec![],
        },
    });
    rows
}

/// The printed isometry classes of the sampled four-dimensional instances:
/// classes (I) through (VI), then singleton completely solvable instances
/// that must not merge with anything.
pub fn thm4d_classes() -> (Vec<ThmClass>, Vec<(String, Vec<Rat>)>) {
    let mut classes = Vec::new();
    classes.push(ThmClass {
        name: "(I)".into(),
        members: vec![("R^4".into(), vec![]), ("RxA_{3,6}".into(), vec![])],
    });
    classes.push(ThmClass {
        name: "(II)".into(),
        members: vec![("RxA_{3,1}".into(), vec![]), ("A_{4,10}".into(), vec![])],
    });
    // (III_lambda), grouped by the printed lambda of each sampled instance.
    let mut lambdas: Vec<Rat> = Vec::new();
    let grid = a46_grid();
    for (a, b) in &grid {
        let l = printed_lambda(a, b);
        if !lambdas.contains(&l) {
            lambdas.push(l);
        }
    }
    lambdas.sort();
    for l in &lambdas {
        let mut members = vec![("A_{4,5}".into(), vec![l.clone(), l.clone()])];
        for (a, b) in &grid {
            if &printed_lambda(a, b) == l {
                members.push(("A_{4,6}".into(), vec![a.clone(), b.clone()]));
            }
        }
        classes.push(ThmClass {
            name: format!("(III_{})", fmt_rat(l)),
            members,
        });
    }
    let mut class_iv = ThmClass {
        name: "(IV)".into(),
        members: vec![("A_{4,9}".into(), vec![rint(1)])],
    };
    for a in [rat(1, 3), rat(1, 2), rat(3, 4)] {
        class_iv.members.push(("A_{4,11}".into(), vec![a]));
    }
    classes.push(class_iv);
    let mut class_v = ThmClass {
        name: "(V)".into(),
        members: vec![
            ("RxA_{3,3}".into(), vec![]),
            ("A_{4,12}".into(), vec![]),
        ],
    };
    for a in [rat(1, 3), rat(1, 2), rat(3, 4)] {
        class_v.members.push(("RxA_{3,7}".into(), vec![a]));
    }
    classes.push(class_v);
    let mut class_vi = ThmClass {
        name: "(VI)".into(),
        members: vec![("R^2xA_2".into(), vec![])],
    };
    for a in a46_zero_samples() {
        class_vi.members.push(("A_{4,6}".into(), vec![a, rint(0)]));
    }
    classes.push(class_vi);
    let singletons = vec![
        ("A_{4,1}".to_string(), vec![]),
        ("A_{4,3}".to_string(), vec![]),
        ("A_{4,4}".to_string(), vec![]),
        ("A_{4,7}".to_string(), vec![]),
        ("A_{4,8}".to_string(), vec![]),
        ("A_{4,2}".to_string(), vec![rat(1, 2)]),
        ("A_{4,2}".to_string(), vec![rat(-1, 2)]),
        ("A_{4,5}".to_string(), vec![rat(1, 3), rat(1, 2)]),
        ("A_{4,9}".to_string(), vec![rat(1, 2)]),
        ("A_{4,9}".to_string(), vec![rint(0)]),
        ("RxA_{3,2}".to_string(), vec![]),
        ("RxA_{3,4}".to_string(), vec![]),
        ("RxA_{3,5}".to_string(), vec![rat(1, 2)]),
        ("A_2xA_2".to_string(), vec![]),
    ];
    (classes, singletons)
}
