//! The distinguishability engine: certified verdicts with an invariant
//! trail, isometry-class labels via real-shadows and catalog fixtures, and
//! the batch classification drivers behind the reproduction targets.

use crate::catalog::{
    self, class_tag_of, shadow_fixture_for, verify_carnot_fixture, verify_shadow_fixture,
    ClassTag, Table3RowKind,
};
use crate::error::LieError;
use crate::homogeneous::{HomogeneousGroup, InvariantProfile};
use crate::lie::LieAlgebra;
use crate::rat::{fmt_rat, Rat};
use crate::shadow::{
    betti_numbers, growth_degree, is_completely_solvable, is_type_r, nilradical,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Distinguished,
    QiEquivalent,
    Inconclusive,
}

impl std::fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerdictStatus::Distinguished => write!(f, "DISTINGUISHED"),
            VerdictStatus::QiEquivalent => write!(f, "QI_EQUIVALENT"),
            VerdictStatus::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TrailEntry {
    pub invariant: String,
    pub value_a: String,
    pub value_b: String,
    pub equal: bool,
}

#[derive(Clone, Debug)]
pub struct ComparisonVerdict {
    pub status: VerdictStatus,
    /// The first failing invariant for a distinction, or the completing
    /// invariant for an equivalence, or a summary for inconclusive runs.
    pub reason: String,
    pub trail: Vec<TrailEntry>,
}

/// Isomorphism-invariant fingerprint. Fields whose predicates are not
/// computable for the input are absent, never guessed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim: usize,
    pub lcs_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
    pub center_dim: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub nilradical_dim: Option<usize>,
    pub betti: Vec<usize>,
    pub growth_degree: Option<usize>,
    pub carnot_graded_dims: Option<Vec<usize>>,
}

pub fn fingerprint(g: &LieAlgebra) -> Fingerprint {
    let nilpotent = g.is_nilpotent();
    let solvable = g.is_solvable();
    let lcs_dims = g.lcs_dims();
    let nilradical_dim = if solvable {
        nilradical(g).ok().map(|n| n.dim())
    } else {
        None
    };
    let carnot_graded_dims = nilpotent.then(|| {
        lcs_dims
            .windows(2)
            .map(|w| w[0] - w[1])
            .collect::<Vec<usize>>()
    });
    Fingerprint {
        dim: g.dim,
        lcs_dims,
        derived_dims: g.derived_dims(),
        center_dim: g.center().dim(),
        abelian: g.is_abelian(),
        nilpotent,
        solvable,
        nilradical_dim,
        betti: betti_numbers(g),
        growth_degree: nilpotent.then(|| growth_degree(g).expect("nilpotent")),
        carnot_graded_dims,
    }
}

struct TrailBuilder {
    trail: Vec<TrailEntry>,
    first_mismatch: Option<usize>,
}

impl TrailBuilder {
    fn new() -> Self {
        TrailBuilder {
            trail: Vec::new(),
            first_mismatch: None,
        }
    }

    fn push<T: PartialEq, F: Fn(&T) -> String>(
        &mut self,
        name: impl Into<String>,
        a: &T,
        b: &T,
        show: F,
    ) -> bool {
        if self.first_mismatch.is_some() {
            return false;
        }
        let equal = a == b;
        self.trail.push(TrailEntry {
            invariant: name.into(),
            value_a: show(a),
            value_b: show(b),
            equal,
        });
        if !equal {
            self.first_mismatch = Some(self.trail.len() - 1);
        }
        equal
    }

    fn mismatch_entry(&self) -> Option<&TrailEntry> {
        self.first_mismatch.map(|i| &self.trail[i])
    }
}

fn show_spectrum(s: &Vec<(Rat, usize)>) -> String {
    let parts: Vec<String> = s
        .iter()
        .map(|(l, m)| format!("{}^{}", fmt_rat(l), m))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn show_dims(v: &Vec<usize>) -> String {
    format!("{v:?}")
}

/// Compares two hierarchical profiles, appending to the shared trail.
/// Stops at the first mismatch.
fn compare_profiles(
    tb: &mut TrailBuilder,
    prefix: &str,
    a: &InvariantProfile,
    b: &InvariantProfile,
) {
    if !tb.push(
        format!("{prefix}spectrum"),
        &a.normalized_spectrum,
        &b.normalized_spectrum,
        show_spectrum,
    ) {
        return;
    }
    // Identical spectra imply identical breakpoint lists.
    for (ea, eb) in a.entries.iter().zip(&b.entries) {
        if !tb.push(
            format!("{prefix}reach_dim(s={})", fmt_rat(&ea.s)),
            &ea.reach_dim,
            &eb.reach_dim,
            |d| d.to_string(),
        ) {
            return;
        }
    }
    for (ea, eb) in a.entries.iter().zip(&b.entries) {
        if !tb.push(
            format!("{prefix}tower(s={})", fmt_rat(&ea.s)),
            &ea.tower_dims,
            &eb.tower_dims,
            show_dims,
        ) {
            return;
        }
    }
    for (ea, eb) in a.entries.iter().zip(&b.entries) {
        match (&ea.nested, &eb.nested) {
            (Some(na), Some(nb)) => {
                let inner = format!("{prefix}reach(s={}).", fmt_rat(&ea.s));
                compare_profiles(tb, &inner, na, nb);
                if tb.first_mismatch.is_some() {
                    return;
                }
            }
            (None, None) => {}
            // Equal reach dimensions force equal nesting.
            _ => unreachable!("nested profiles disagree despite equal reach dims"),
        }
    }
    if !tb.push(
        format!("{prefix}charsub_dim"),
        &a.char_subalgebra_dim,
        &b.char_subalgebra_dim,
        |d| d.to_string(),
    ) {
        return;
    }
    let _ = tb.push(
        format!("{prefix}lcs_dims"),
        &a.lcs_dims,
        &b.lcs_dims,
        show_dims,
    );
}

fn push_fingerprints(tb: &mut TrailBuilder, prefix: &str, fa: &Fingerprint, fb: &Fingerprint) {
    let show_opt_usize = |v: &Option<usize>| match v {
        Some(d) => d.to_string(),
        None => "(absent)".into(),
    };
    if !tb.push(format!("{prefix}dim"), &fa.dim, &fb.dim, |d| d.to_string()) {
        return;
    }
    if !tb.push(
        format!("{prefix}lcs_dims"),
        &fa.lcs_dims,
        &fb.lcs_dims,
        show_dims,
    ) {
        return;
    }
    if !tb.push(
        format!("{prefix}derived_dims"),
        &fa.derived_dims,
        &fb.derived_dims,
        show_dims,
    ) {
        return;
    }
    if !tb.push(
        format!("{prefix}center_dim"),
        &fa.center_dim,
        &fb.center_dim,
        |d| d.to_string(),
    ) {
        return;
    }
    if !tb.push(
        format!("{prefix}flags(abelian,nilpotent,solvable)"),
        &(fa.abelian, fa.nilpotent, fa.solvable),
        &(fb.abelian, fb.nilpotent, fb.solvable),
        |f| format!("{f:?}"),
    ) {
        return;
    }
    // Absent values cannot certify a distinction; only compare when both
    // sides computed the field.
    if fa.nilradical_dim.is_some() && fb.nilradical_dim.is_some() {
        if !tb.push(
            format!("{prefix}nilradical_dim"),
            &fa.nilradical_dim,
            &fb.nilradical_dim,
            show_opt_usize,
        ) {
            return;
        }
    }
    if !tb.push(format!("{prefix}betti"), &fa.betti, &fb.betti, show_dims) {
        return;
    }
    if fa.growth_degree.is_some() && fb.growth_degree.is_some() {
        if !tb.push(
            format!("{prefix}growth_degree"),
            &fa.growth_degree,
            &fb.growth_degree,
            show_opt_usize,
        ) {
            return;
        }
    }
    if fa.carnot_graded_dims.is_some() && fb.carnot_graded_dims.is_some() {
        let show = |v: &Option<Vec<usize>>| match v {
            Some(d) => format!("{d:?}"),
            None => "(absent)".into(),
        };
        let _ = tb.push(
            format!("{prefix}carnot_graded_dims"),
            &fa.carnot_graded_dims,
            &fb.carnot_graded_dims,
            show,
        );
    }
}

/// Certified comparison of two purely real homogeneous groups.
///
/// Invariants are evaluated cheapest-first: normalized spectra, reachability
/// dimensions per breakpoint, normalizer towers (including the towers of the
/// restricted homogeneous structures on proper reachability subalgebras),
/// characteristic-subalgebra dimensions, the isomorphism fingerprints of the
/// underlying nilpotent algebras, and the abelianity flags. For a pair of
/// abelian bases the normalized Jordan data decides completely; otherwise
/// agreement of everything yields INCONCLUSIVE, never equivalence.
pub fn qi_report(
    a: &HomogeneousGroup,
    b: &HomogeneousGroup,
) -> Result<ComparisonVerdict, LieError> {
    let pa = a.invariant_profile()?;
    let pb = b.invariant_profile()?;
    let mut tb = TrailBuilder::new();
    compare_profiles(&mut tb, "", &pa, &pb);
    if tb.first_mismatch.is_none() {
        let fa = fingerprint(&a.algebra);
        let fb = fingerprint(&b.algebra);
        push_fingerprints(&mut tb, "base.", &fa, &fb);
    }
    if tb.first_mismatch.is_none() {
        tb.push("abelian", &pa.abelian, &pb.abelian, |f| f.to_string());
    }
    if tb.first_mismatch.is_none() && pa.abelian && pb.abelian {
        // Complete invariant for abelian bases: the normalized Jordan data.
        let ja = a.normalized_jordan_profile()?;
        let jb = b.normalized_jordan_profile()?;
        let show = |j: &Vec<(Rat, Vec<usize>)>| {
            let parts: Vec<String> = j
                .iter()
                .map(|(l, s)| format!("{}:{:?}", fmt_rat(l), s))
                .collect();
            format!("[{}]", parts.join(", "))
        };
        let equal = tb.push("jordan_profile", &ja, &jb, show);
        if equal {
            return Ok(ComparisonVerdict {
                status: VerdictStatus::QiEquivalent,
                reason: "abelian bases with identical normalized Jordan data".into(),
                trail: tb.trail,
            });
        }
    }
    match tb.mismatch_entry() {
        Some(e) => Ok(ComparisonVerdict {
            status: VerdictStatus::Distinguished,
            reason: format!("{}: {} vs {}", e.invariant, e.value_a, e.value_b),
            trail: tb.trail,
        }),
        None => Ok(ComparisonVerdict {
            status: VerdictStatus::Inconclusive,
            reason: "all computed invariants agree".into(),
            trail: tb.trail,
        }),
    }
}

/// Fingerprint-based comparison of plain algebras. DISTINGUISHED on any
/// certified mismatch; QI_EQUIVALENT only in the abelian-pair case (where
/// equal dimension means isomorphic); INCONCLUSIVE otherwise.
pub fn compare_algebras(a: &LieAlgebra, b: &LieAlgebra) -> ComparisonVerdict {
    let fa = fingerprint(a);
    let fb = fingerprint(b);
    let mut tb = TrailBuilder::new();
    push_fingerprints(&mut tb, "", &fa, &fb);
    match tb.mismatch_entry() {
        Some(e) => ComparisonVerdict {
            status: VerdictStatus::Distinguished,
            reason: format!("{}: {} vs {}", e.invariant, e.value_a, e.value_b),
            trail: tb.trail,
        },
        None if fa.abelian && fb.abelian => ComparisonVerdict {
            status: VerdictStatus::QiEquivalent,
            reason: "abelian algebras of equal dimension are isomorphic".into(),
            trail: tb.trail,
        },
        None => ComparisonVerdict {
            status: VerdictStatus::Inconclusive,
            reason: "all computed invariants agree".into(),
            trail: tb.trail,
        },
    }
}

#[derive(Clone, Debug)]
pub struct IsometryClassLabel {
    pub tag: ClassTag,
    pub shadow_label: String,
    pub shadow_params: Vec<Rat>,
}

/// Isometry class of a catalog instance: completely solvable instances are
/// their own representatives; others go through the verified real-shadow
/// fixture. No isomorphism is claimed without a checked witness.
pub fn isometry_class(label: &str, params: &[Rat]) -> Result<IsometryClassLabel, LieError> {
    let g = catalog::load(label, params)?;
    if is_completely_solvable(&g)? {
        let tag = class_tag_of(label, params).ok_or_else(|| {
            LieError::NoCatalogMatch(format!(
                "no class tag for completely solvable instance {}",
                catalog::format_instance(label, params)
            ))
        })?;
        return Ok(IsometryClassLabel {
            tag,
            shadow_label: label.to_string(),
            shadow_params: params.to_vec(),
        });
    }
    verify_shadow_fixture(label, params)?;
    let fixture = shadow_fixture_for(label, params).expect("verified fixture exists");
    let tag = class_tag_of(&fixture.target_label, &fixture.target_params).ok_or_else(|| {
        LieError::NoCatalogMatch(format!(
            "shadow target {} has no class tag",
            catalog::format_instance(fixture.target_label, &fixture.target_params)
        ))
    })?;
    Ok(IsometryClassLabel {
        tag,
        shadow_label: fixture.target_label.to_string(),
        shadow_params: fixture.target_params,
    })
}

#[derive(Clone, Debug)]
pub struct ReportLine {
    pub subject: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct ClassificationReport {
    pub lines: Vec<ReportLine>,
}

impl ClassificationReport {
    pub fn all_ok(&self) -> bool {
        self.lines.iter().all(|l| l.ok)
    }

    pub fn failures(&self) -> Vec<&ReportLine> {
        self.lines.iter().filter(|l| !l.ok).collect()
    }

    fn push(&mut self, subject: String, ok: bool, detail: String) {
        self.lines.push(ReportLine {
            subject,
            ok,
            detail,
        });
    }
}

/// Checks the four-dimensional isometry partition against the printed
/// classes: members of one class must share their computed tag, distinct
/// classes and the singleton instances must all separate.
pub fn classify_4d() -> ClassificationReport {
    let (classes, singletons) = catalog::thm4d_classes();
    let mut report = ClassificationReport::default();
    let mut class_tags: Vec<(String, ClassTag)> = Vec::new();
    for class in &classes {
        // The completely solvable representative is listed first.
        let rep = &class.members[0];
        let rep_tag = match isometry_class(&rep.0, &rep.1) {
            Ok(l) => l.tag,
            Err(e) => {
                report.push(
                    format!("{} rep {}", class.name, catalog::format_instance(&rep.0, &rep.1)),
                    false,
                    format!("error: {e}"),
                );
                continue;
            }
        };
        for (label, params) in &class.members {
            let subject = format!(
                "{} member {}",
                class.name,
                catalog::format_instance(label, params)
            );
            match isometry_class(label, params) {
                Ok(l) if l.tag == rep_tag => {
                    report.push(subject, true, format!("tag {}", l.tag));
                }
                Ok(l) => {
                    report.push(
                        subject,
                        false,
                        format!("computed tag {} but class representative has {rep_tag}", l.tag),
                    );
                }
                Err(e) => report.push(subject, false, format!("error: {e}")),
            }
        }
        class_tags.push((class.name.clone(), rep_tag));
    }
    for i in 0..class_tags.len() {
        for j in (i + 1)..class_tags.len() {
            let ok = class_tags[i].1 != class_tags[j].1;
            if !ok {
                report.push(
                    format!("{} vs {}", class_tags[i].0, class_tags[j].0),
                    false,
                    format!("classes share tag {}", class_tags[i].1),
                );
            }
        }
    }
    let mut singleton_tags = Vec::new();
    for (label, params) in &singletons {
        let subject = format!("singleton {}", catalog::format_instance(label, params));
        match isometry_class(label, params) {
            Ok(l) => {
                if let Some((cname, _)) = class_tags.iter().find(|(_, t)| *t == l.tag) {
                    report.push(
                        subject,
                        false,
                        format!("collides with class {cname} (tag {})", l.tag),
                    );
                } else {
                    report.push(subject, true, format!("tag {}", l.tag));
                    singleton_tags.push(l.tag);
                }
            }
            Err(e) => report.push(subject, false, format!("error: {e}")),
        }
    }
    report
}

/// Checks the five-dimensional polynomial-growth table: every row is of
/// type (R); non-nilpotent rows match their printed nilshadow through the
/// verified fixture; the two non-graded nilpotent rows match their printed
/// associated Carnot algebras.
pub fn classify_5d_poly_r() -> ClassificationReport {
    let mut report = ClassificationReport::default();
    for row in catalog::table3_rows() {
        let instance = catalog::format_instance(&row.label, &row.params);
        match catalog::load(&row.label, &row.params) {
            Err(e) => report.push(instance, false, format!("load error: {e}")),
            Ok(g) => {
                match is_type_r(&g) {
                    Ok(true) => report.push(
                        format!("{instance} type (R)"),
                        true,
                        "all adjoint weights purely imaginary".into(),
                    ),
                    Ok(false) => {
                        report.push(format!("{instance} type (R)"), false, "not type (R)".into())
                    }
                    Err(e) => {
                        report.push(format!("{instance} type (R)"), false, format!("error: {e}"))
                    }
                }
                match &row.kind {
                    Table3RowKind::Carnot => {
                        let ok = g.is_nilpotent();
                        report.push(
                            format!("{instance} nilpotent Carnot row"),
                            ok,
                            if ok {
                                "nilpotent".into()
                            } else {
                                "expected nilpotent".into()
                            },
                        );
                    }
                    Table3RowKind::NilpotentNonCarnot { g_infinity } => {
                        match verify_carnot_fixture(&row.label) {
                            Ok(()) => report.push(
                                format!("{instance} associated Carnot"),
                                true,
                                format!("matches {g_infinity} via verified fixture"),
                            ),
                            Err(e) => report.push(
                                format!("{instance} associated Carnot"),
                                false,
                                format!("{e}"),
                            ),
                        }
                    }
                    Table3RowKind::TypeRNonNilpotent {
                        nilshadow_label, ..
                    } => match verify_shadow_fixture(&row.label, &row.params) {
                        Ok(()) => {
                            let fixture =
                                shadow_fixture_for(&row.label, &row.params).expect("verified");
                            let ok = fixture.target_label == *nilshadow_label;
                            report.push(
                                format!("{instance} nilshadow"),
                                ok,
                                format!("shadow matches {}", fixture.target_label),
                            );
                        }
                        Err(e) => {
                            report.push(format!("{instance} nilshadow"), false, format!("{e}"))
                        }
                    },
                }
            }
        }
    }
    report
}

/// Reproduces the coarse QI-type column of the four-dimensional completely
/// solvable table.
pub fn reproduce_table1() -> ClassificationReport {
    let mut report = ClassificationReport::default();
    for row in catalog::table1_rows() {
        let instance = catalog::format_instance(&row.label, &row.params);
        let subject = format!("{} {}", row.family, instance);
        match catalog::load(&row.label, &row.params)
            .and_then(|g| crate::shadow::classify_qi_type(&g))
        {
            Ok(t) if t == row.expected => {
                report.push(subject, true, format!("{t}"));
            }
            Ok(t) => report.push(
                subject,
                false,
                format!("computed {t}, table says {}", row.expected),
            ),
            Err(e) => report.push(subject, false, format!("error: {e}")),
        }
    }
    report
}

/// Projective spectral certificate for diagonalizable semidirect algebras
/// `R^n x| R`: two such algebras are isomorphic only if the eigenvalue
/// multisets of the actions are proportional. Returns `Some(false)` when
/// proportionality fails (a certified non-isomorphism), `Some(true)` when
/// some rescaling matches, `None` when the inputs are not of this shape.
fn diagonal_action_proportional(a: &LieAlgebra, b: &LieAlgebra) -> Option<bool> {
    use crate::spectral::SpectralData;
    let spectrum = |g: &LieAlgebra| -> Option<Vec<Rat>> {
        let nil = nilradical(g).ok()?;
        if nil.dim() + 1 != g.dim {
            return None;
        }
        if !g.restrict_to(&nil).ok()?.is_abelian() {
            return None;
        }
        let j = nil.complement_indices()[0];
        let ad = g.ad_basis(j).restrict(nil.basis()).ok()?;
        let data = SpectralData::of(&ad).ok()?;
        let eigs = data.rational_eigenvalues().ok()?;
        let mut flat = Vec::new();
        for (l, m) in eigs {
            for _ in 0..m {
                flat.push(l.clone());
            }
        }
        Some(flat)
    };
    let sa = spectrum(a)?;
    let sb = spectrum(b)?;
    if sa.len() != sb.len() {
        return Some(false);
    }
    use num_traits::Zero;
    for target in &sb {
        let Some(first) = sa.iter().find(|x| !x.is_zero()) else {
            break;
        };
        if target.is_zero() {
            continue;
        }
        let c = target / first;
        let mut scaled: Vec<Rat> = sa.iter().map(|x| x * &c).collect();
        scaled.sort();
        let mut sorted_b = sb.clone();
        sorted_b.sort();
        if scaled == sorted_b {
            return Some(true);
        }
        let mut neg: Vec<Rat> = sa.iter().map(|x| -(x * &c)).collect();
        neg.sort();
        if neg == sorted_b {
            return Some(true);
        }
    }
    Some(false)
}

/// Reproduces the real-shadow table for the non-completely-solvable
/// four-dimensional instances: both shadow routes must agree with each
/// other, and the computed shadow must match the printed target through a
/// verified fixture.
pub fn reproduce_table2() -> ClassificationReport {
    let mut report = ClassificationReport::default();
    for row in catalog::table2_rows() {
        let instance = catalog::format_instance(&row.label, &row.params);
        let printed = catalog::format_instance(&row.shadow_label, &row.shadow_params);
        // Route agreement: twisted bracket vs real-part semidirect.
        let routes = (|| -> Result<bool, LieError> {
            let g = catalog::load(&row.label, &row.params)?;
            let p = catalog::load_presentation(&row.label, &row.params)?;
            let twisted = crate::shadow::real_shadow(&g)?.shadow;
            let direct = crate::shadow::real_part_semidirect(&p)?;
            Ok(twisted.structure() == direct.structure())
        })();
        match routes {
            Ok(true) => report.push(
                format!("{instance} shadow routes"),
                true,
                "twisted and semidirect routes agree".into(),
            ),
            Ok(false) => report.push(
                format!("{instance} shadow routes"),
                false,
                "twisted and semidirect routes disagree".into(),
            ),
            Err(e) => report.push(format!("{instance} shadow routes"), false, format!("error: {e}")),
        }
        // Printed target, through the verified fixture.
        match shadow_fixture_for(&row.label, &row.params) {
            None => report.push(
                format!("{instance} -> {printed}"),
                false,
                "no authored fixture".into(),
            ),
            Some(fixture) => {
                let computed =
                    catalog::format_instance(fixture.target_label, &fixture.target_params);
                let fixture_ok = verify_shadow_fixture(&row.label, &row.params).is_ok();
                let matches_printed = fixture.target_label == row.shadow_label
                    && fixture.target_params == row.shadow_params;
                if fixture_ok && matches_printed {
                    report.push(
                        format!("{instance} -> {printed}"),
                        true,
                        "verified fixture to the printed target".into(),
                    );
                } else if fixture_ok {
                    // The verified shadow disagrees with the printed table;
                    // attach a spectral certificate when available.
                    let mut detail = format!(
                        "verified real-shadow is {computed}, printed table says {printed}"
                    );
                    let cert = (|| {
                        let shadow = catalog::load(fixture.target_label, &fixture.target_params).ok()?;
                        let target = catalog::load(&row.shadow_label, &row.shadow_params).ok()?;
                        diagonal_action_proportional(&shadow, &target)
                    })();
                    if cert == Some(false) {
                        detail.push_str(
                            "; eigenvalue multisets are not proportional, so the printed \
                             target is not isomorphic to the computed shadow",
                        );
                    }
                    report.push(format!("{instance} -> {printed}"), false, detail);
                } else {
                    report.push(
                        format!("{instance} -> {printed}"),
                        false,
                        format!("fixture to {computed} failed verification"),
                    );
                }
            }
        }
    }
    report
}

/// Runs the bundled example pairs and checks the expected verdicts,
/// including the headline values: reach dimensions 3 vs 2, nested
/// normalizer dimensions 8 vs 7, and the open pairs staying open.
pub fn reproduce_examples() -> ClassificationReport {
    use crate::catalog::homogeneous_example;
    use crate::subspace::Subspace;
    let mut report = ClassificationReport::default();
    let pair = |x: &str, y: &str| -> Result<ComparisonVerdict, LieError> {
        let a = homogeneous_example(x)?.group;
        let b = homogeneous_example(y)?.group;
        qi_report(&a, &b)
    };
    match pair("ex21_alpha", "ex21_beta") {
        Ok(v) => {
            let ok = v.status == VerdictStatus::Distinguished
                && v.reason == "reach_dim(s=2): 3 vs 2";
            report.push(
                "ex21 verdict".into(),
                ok,
                format!("{} ({})", v.status, v.reason),
            );
        }
        Err(e) => report.push("ex21 verdict".into(), false, format!("error: {e}")),
    }
    match pair("ex22_alpha", "ex22_beta") {
        Ok(v) => {
            let ok = v.status == VerdictStatus::Inconclusive && v.trail.iter().all(|e| e.equal);
            report.push(
                "ex22 verdict".into(),
                ok,
                format!("{} with full agreement trail", v.status),
            );
        }
        Err(e) => report.push("ex22 verdict".into(), false, format!("error: {e}")),
    }
    match pair("ex24_alpha", "ex24_beta") {
        Ok(v) => {
            let ok = v.status == VerdictStatus::Distinguished
                && v.reason.contains("tower")
                && v.reason.contains('8')
                && v.reason.contains('7');
            report.push(
                "ex24 verdict".into(),
                ok,
                format!("{} ({})", v.status, v.reason),
            );
        }
        Err(e) => report.push("ex24 verdict".into(), false, format!("error: {e}")),
    }
    match pair("ex25_n1", "ex25_n2") {
        Ok(v) => {
            let ok = v.status == VerdictStatus::Inconclusive && v.trail.iter().all(|e| e.equal);
            report.push(
                "ex25 verdict".into(),
                ok,
                format!("{} with full agreement trail", v.status),
            );
        }
        Err(e) => report.push("ex25 verdict".into(), false, format!("error: {e}")),
    }
    // The concrete subgroup data behind the ex25 agreement trail.
    let detail = (|| -> Result<(bool, bool), LieError> {
        let a = homogeneous_example("ex25_n1")?.group;
        let reach = a.reachability_subalgebra(&crate::rat::rint(1))?;
        let expected = Subspace::coordinate(6, &[0, 1, 2, 4]);
        let tower = a.algebra.normalizer_tower(&reach)?;
        let dims: Vec<usize> = tower.iter().map(|t| t.dim()).collect();
        let step_adds_x6 = tower.len() >= 2
            && tower[1].contains(&a.algebra.basis_vector(5))
            && !tower[1].contains(&a.algebra.basis_vector(3));
        Ok((reach == expected, dims == vec![4, 5, 6] && step_adds_x6))
    })();
    match detail {
        Ok((reach_ok, tower_ok)) => {
            report.push(
                "ex25 reach(s=1) is span(X1,X2,X3,X5)".into(),
                reach_ok,
                "reachability subalgebra at the smallest eigenvalue".into(),
            );
            report.push(
                "ex25 tower adds X6 then stabilizes".into(),
                tower_ok,
                "normalizer tower dimensions [4, 5, 6]".into(),
            );
        }
        Err(e) => report.push("ex25 subgroup data".into(), false, format!("error: {e}")),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::homogeneous_example;
    use crate::rat::{rat, rint};

    #[test]
    fn ex21_distinguished_by_reach_at_2() {
        let a = homogeneous_example("ex21_alpha").unwrap().group;
        let b = homogeneous_example("ex21_beta").unwrap().group;
        let v = qi_report(&a, &b).unwrap();
        assert_eq!(v.status, VerdictStatus::Distinguished);
        assert_eq!(v.reason, "reach_dim(s=2): 3 vs 2");
    }

    #[test]
    fn ex24_distinguished_by_nested_tower() {
        let a = homogeneous_example("ex24_alpha").unwrap().group;
        let b = homogeneous_example("ex24_beta").unwrap().group;
        let v = qi_report(&a, &b).unwrap();
        assert_eq!(v.status, VerdictStatus::Distinguished);
        assert!(v.reason.contains("tower"), "reason was {}", v.reason);
        assert!(
            v.reason.contains("8") && v.reason.contains("7"),
            "reason was {}",
            v.reason
        );
    }

    #[test]
    fn ex22_and_ex25_inconclusive() {
        for (x, y) in [("ex22_alpha", "ex22_beta"), ("ex25_n1", "ex25_n2")] {
            let a = homogeneous_example(x).unwrap().group;
            let b = homogeneous_example(y).unwrap().group;
            let v = qi_report(&a, &b).unwrap();
            assert_eq!(v.status, VerdictStatus::Inconclusive, "{x} vs {y}");
            assert!(v.trail.iter().all(|e| e.equal));
        }
    }

    #[test]
    fn self_comparison_never_distinguishes() {
        let a = homogeneous_example("ex23_n1").unwrap().group;
        let v = qi_report(&a, &a).unwrap();
        assert_eq!(v.status, VerdictStatus::Inconclusive);
        // abelian self-comparison is decisive
        let r2 = LieAlgebra::abelian("R2", 2);
        let d = r2.derivation(crate::matrix::Matrix::identity(2)).unwrap();
        let h = crate::homogeneous::validate_homogeneous(&r2, &d).unwrap();
        let v2 = qi_report(&h, &h).unwrap();
        assert_eq!(v2.status, VerdictStatus::QiEquivalent);
    }

    #[test]
    fn ex23_distinguished_by_center() {
        let a = homogeneous_example("ex23_n1").unwrap().group;
        let b = homogeneous_example("ex23_n2").unwrap().group;
        let v = qi_report(&a, &b).unwrap();
        assert_eq!(v.status, VerdictStatus::Distinguished);
        assert!(
            v.reason.starts_with("base.center_dim"),
            "reason was {}",
            v.reason
        );
    }

    #[test]
    fn fingerprint_of_heisenberg() {
        let h = catalog::load("Heis", &[]).unwrap();
        let f = fingerprint(&h);
        assert_eq!(f.dim, 3);
        assert_eq!(f.lcs_dims, vec![3, 1, 0]);
        assert_eq!(f.center_dim, 1);
        assert_eq!(f.betti, vec![1, 2, 2, 1]);
        assert_eq!(f.growth_degree, Some(4));
    }

    #[test]
    fn isometry_classes_of_catalog_instances() {
        let c = isometry_class("A_{4,10}", &[]).unwrap();
        assert_eq!(c.tag.0, "(2)");
        assert_eq!(c.shadow_label, "RxA_{3,1}");
        // a > b branch reproduces the printed ratio rule
        let c2 = isometry_class("A_{4,6}", &[rat(1, 2), rat(1, 3)]).unwrap();
        assert_eq!(c2.tag.0, "(7,2/3)");
        let c3 = isometry_class("A_{4,6}", &[rat(1, 2), rint(0)]).unwrap();
        assert_eq!(c3.tag.0, "(23)");
        let c4 = isometry_class("RxA_{3,3}", &[]).unwrap();
        assert_eq!(c4.tag.0, "(18)");
    }

    #[test]
    fn class_of_instance_matches_class_of_its_shadow() {
        for (label, params) in [
            ("A_{4,6}", vec![rat(1, 2), rat(1, 3)]),
            ("A_{4,11}", vec![rat(1, 2)]),
            ("RxA_{3,7}", vec![rint(1)]),
            ("A_{4,12}", vec![]),
        ] {
            let c = isometry_class(label, &params).unwrap();
            let via_shadow = isometry_class(&c.shadow_label, &c.shadow_params).unwrap();
            assert_eq!(c.tag, via_shadow.tag, "{label}");
        }
        assert_eq!(isometry_class("RxA_{3,7}", &[rint(1)]).unwrap().tag.0, "(18)");
    }

    #[test]
    fn ex24_profile_has_reach_nine_at_six() {
        let a = homogeneous_example("ex24_alpha").unwrap().group;
        let p = a.invariant_profile().unwrap();
        let entry = p
            .entries
            .iter()
            .find(|e| e.s == rint(6))
            .expect("breakpoint at 6");
        assert_eq!(entry.reach_dim, 9);
    }

    #[test]
    fn scale_invariance_of_verdicts() {
        let a = homogeneous_example("ex21_alpha").unwrap().group;
        let b = homogeneous_example("ex21_beta").unwrap().group;
        let b_scaled = b.rescale(&rat(5, 2)).unwrap();
        let v1 = qi_report(&a, &b).unwrap();
        let v2 = qi_report(&a, &b_scaled).unwrap();
        assert_eq!(v1.status, v2.status);
        assert_eq!(v1.reason, v2.reason);
    }
}
