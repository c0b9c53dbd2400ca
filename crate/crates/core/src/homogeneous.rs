//! Homogeneous groups `(N, alpha)`: a nilpotent algebra with a derivation
//! whose eigenvalues all have positive real part, and their biLipschitz
//! invariants.
//!
//! The invariant profile is hierarchical: at each spectral breakpoint `s`
//! the reachability subalgebra is itself alpha-invariant, so it carries an
//! induced homogeneous structure whose own profile is a further invariant.
//! Flat reach/tower dimensions do not separate some pairs that the nested
//! data does.

use crate::error::LieError;
use crate::lie::{Derivation, LieAlgebra};
use crate::matrix::Matrix;
use crate::rat::{fmt_rat, Rat};
use crate::spectral::{
    is_diagonalizable, jordan_chevalley, jordan_profile, jordan_structure, spectral_split,
    FactorKind, SpectralData,
};
use crate::subspace::Subspace;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub struct HomogeneousGroup {
    pub algebra: LieAlgebra,
    pub alpha: Matrix,
    spectral: SpectralData,
}

/// Per-breakpoint invariant data; `nested` carries the profile of the
/// restricted homogeneous group when the reachability subalgebra is proper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreakpointData {
    pub s: Rat,
    pub reach_dim: usize,
    /// Dimensions along the normalizer tower, starting at the reachability
    /// subalgebra and ending at the full algebra.
    pub tower_dims: Vec<usize>,
    pub nested: Option<Box<InvariantProfile>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantProfile {
    /// Spectrum of the derivation rescaled so the smallest eigenvalue is 1.
    pub normalized_spectrum: Vec<(Rat, usize)>,
    pub breakpoints: Vec<Rat>,
    pub entries: Vec<BreakpointData>,
    pub char_subalgebra_dim: usize,
    pub nilpotency_step: usize,
    pub lcs_dims: Vec<usize>,
    pub abelian: bool,
}

pub fn validate_homogeneous(
    algebra: &LieAlgebra,
    alpha: &Derivation,
) -> Result<HomogeneousGroup, LieError> {
    if !algebra.is_nilpotent() {
        return Err(LieError::NotNilpotent);
    }
    let spectral = SpectralData::of(&alpha.matrix)?;
    spectral.require_low_degree()?;
    for f in &spectral.factors {
        let positive = match f.kind {
            FactorKind::RealLinear => f.real_part().is_positive(),
            // both roots (or the common real part) positive: trace and
            // product of roots positive
            _ => f.real_part().is_positive() && f.root_product().is_positive(),
        };
        if !positive {
            return Err(LieError::NonPositiveSpectrum {
                factor: format!(
                    "{:?}",
                    f.poly.coeffs().iter().map(fmt_rat).collect::<Vec<_>>()
                ),
            });
        }
    }
    Ok(HomogeneousGroup {
        algebra: algebra.clone(),
        alpha: alpha.matrix.clone(),
        spectral,
    })
}

impl HomogeneousGroup {
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn spectral(&self) -> &SpectralData {
        &self.spectral
    }

    pub fn is_purely_real(&self) -> bool {
        self.spectral
            .factors
            .iter()
            .all(|f| f.kind != FactorKind::ComplexQuadratic)
    }

    fn require_purely_real_rational(&self) -> Result<(), LieError> {
        if !self.is_purely_real() {
            return Err(LieError::UnsupportedSpectrum {
                context: "operation needs a purely real derivation".into(),
            });
        }
        self.spectral.require_rational()
    }

    /// Sorted rational eigenvalues with multiplicities.
    pub fn eigenvalues(&self) -> Result<Vec<(Rat, usize)>, LieError> {
        self.require_purely_real_rational()?;
        self.spectral.rational_eigenvalues()
    }

    pub fn min_eigenvalue(&self) -> Result<Rat, LieError> {
        Ok(self.eigenvalues()?.first().unwrap().0.clone())
    }

    /// Rescales the derivation by a positive rational; the biLipschitz class
    /// of admissible distances only sees this up to the induced scaling.
    pub fn rescale(&self, c: &Rat) -> Result<HomogeneousGroup, LieError> {
        assert!(c.is_positive());
        let d = self.algebra.derivation(self.alpha.scale(c))?;
        validate_homogeneous(&self.algebra, &d)
    }

    /// Carnot type: purely real, diagonalizable, and the eigenspace of the
    /// smallest eigenvalue Lie-generates the algebra.
    pub fn is_carnot_type(&self) -> Result<bool, LieError> {
        if !self.is_purely_real() {
            return Ok(false);
        }
        self.spectral.require_rational().map_err(|_| {
            LieError::RequiresRationalSpectrum {
                factor: "carnot-type test needs rational eigenvalues".into(),
            }
        })?;
        if !is_diagonalizable(&self.alpha)? {
            return Ok(false);
        }
        let min = self.min_eigenvalue()?;
        let eig = strict_eigenspace(&self.alpha, &min);
        Ok(self.algebra.lie_span(&eig).is_full())
    }

    /// Existence of a distance homogeneous under the induced dilations:
    /// smallest eigenvalue at least 1, and the restriction to the
    /// generalized eigenspace of eigenvalue 1 diagonalizable.
    pub fn admits_homogeneous_distance(&self) -> Result<bool, LieError> {
        self.require_purely_real_rational()?;
        let min = self.min_eigenvalue()?;
        if min < Rat::one() {
            return Ok(false);
        }
        if self
            .eigenvalues()?
            .iter()
            .any(|(l, _)| l == &Rat::one())
        {
            let blocks = jordan_structure(&self.alpha, &Rat::one())?;
            return Ok(blocks.iter().all(|&b| b == 1));
        }
        Ok(true)
    }

    /// Lie span of all generalized eigenspaces with eigenvalue at most `s`.
    pub fn reachability_subalgebra(&self, s: &Rat) -> Result<Subspace, LieError> {
        self.require_purely_real_rational()?;
        let mut acc = Subspace::zero(self.dim());
        for f in &self.spectral.factors {
            let l = f.rational_root().unwrap();
            if &l <= s {
                acc = acc.sum(&f.space);
            }
        }
        Ok(self.algebra.lie_span(&acc))
    }

    /// The characteristic subalgebra: Lie span of the eigenvectors sitting
    /// inside the maximal Jordan blocks of the smallest eigenvalue.
    pub fn characteristic_subalgebra(&self) -> Result<Subspace, LieError> {
        self.require_purely_real_rational()?;
        let min = self.min_eigenvalue()?;
        let v_min = self
            .spectral
            .eigenspace_of(&min)
            .expect("minimal eigenvalue has an eigenspace")
            .clone();
        // Restrict (alpha - min) to the generalized eigenspace and find the
        // largest k with a nonzero k-th power.
        let shifted = &self.alpha - &Matrix::identity(self.dim()).scale(&min);
        let restricted = shifted.restrict(v_min.basis())?;
        let mut k = 0usize;
        let mut power = Matrix::identity(v_min.dim());
        loop {
            let next = &power * &restricted;
            if next.is_zero() {
                break;
            }
            power = next;
            k += 1;
        }
        let _ = k;
        // Image of the k-th power, mapped back to ambient coordinates.
        let mut vecs = Vec::new();
        for j in 0..v_min.dim() {
            let col = power.col(j);
            let mut v = vec![Rat::zero(); self.dim()];
            for (idx, c) in col.iter().enumerate() {
                if !c.is_zero() {
                    for x in 0..self.dim() {
                        let add = &v_min.basis()[idx][x] * c;
                        v[x] = &v[x] + &add;
                    }
                }
            }
            vecs.push(v);
        }
        let image = Subspace::from_vectors(self.dim(), &vecs);
        let eigen = strict_eigenspace(&self.alpha, &min);
        Ok(self.algebra.lie_span(&image.intersect(&eigen)))
    }

    /// Restriction to an alpha-invariant subalgebra, as a homogeneous group
    /// on the canonical basis of `h`.
    pub fn restrict(&self, h: &Subspace) -> Result<HomogeneousGroup, LieError> {
        if !h.is_invariant_under(&self.alpha) {
            return Err(LieError::NotInvariant);
        }
        let sub = self.algebra.restrict_to(h)?;
        let alpha_sub = self.alpha.restrict(h.basis())?;
        let d = sub.derivation(alpha_sub)?;
        validate_homogeneous(&sub, &d)
    }

    /// The full hierarchical invariant profile.
    pub fn invariant_profile(&self) -> Result<InvariantProfile, LieError> {
        self.require_purely_real_rational()?;
        let min = self.min_eigenvalue()?;
        let normalized = if min.is_one() {
            self.clone()
        } else {
            self.rescale(&(Rat::one() / min))?
        };
        normalized.profile_of_normalized()
    }

    fn profile_of_normalized(&self) -> Result<InvariantProfile, LieError> {
        let eigs = self.eigenvalues()?;
        let breakpoints: Vec<Rat> = eigs.iter().map(|(l, _)| l.clone()).collect();
        let mut entries = Vec::new();
        for s in &breakpoints {
            let reach = self.reachability_subalgebra(s)?;
            let tower = self.algebra.normalizer_tower(&reach)?;
            let tower_dims: Vec<usize> = tower.iter().map(|t| t.dim()).collect();
            let nested = if reach.dim() < self.dim() {
                let sub = self.restrict(&reach)?;
                Some(Box::new(sub.invariant_profile()?))
            } else {
                None
            };
            entries.push(BreakpointData {
                s: s.clone(),
                reach_dim: reach.dim(),
                tower_dims,
                nested,
            });
        }
        Ok(InvariantProfile {
            normalized_spectrum: eigs,
            breakpoints,
            entries,
            char_subalgebra_dim: self.characteristic_subalgebra()?.dim(),
            nilpotency_step: self.algebra.nilpotency_step()?,
            lcs_dims: self.algebra.lcs_dims(),
            abelian: self.algebra.is_abelian(),
        })
    }

    /// Jordan data of the scale-normalized derivation; for an abelian base
    /// this is a complete biLipschitz invariant.
    pub fn normalized_jordan_profile(&self) -> Result<Vec<(Rat, Vec<usize>)>, LieError> {
        self.require_purely_real_rational()?;
        let min = self.min_eigenvalue()?;
        let m = self.alpha.scale(&(Rat::one() / min));
        jordan_profile(&m)
    }
}

/// Strict eigenspace `ker(M - lambda I)`.
pub fn strict_eigenspace(m: &Matrix, lambda: &Rat) -> Subspace {
    let shifted = m - &Matrix::identity(m.rows).scale(lambda);
    Subspace::kernel_of(&shifted)
}

/// Decomposition of a derivation into commuting derivations
/// `D = D_sr + D_si + D_nil` with real semisimple, imaginary semisimple and
/// nilpotent parts. Each part is validated against the Leibniz rule.
pub fn derivation_decomposition(
    algebra: &LieAlgebra,
    d: &Derivation,
) -> Result<(Derivation, Derivation, Derivation), LieError> {
    let (s, nil) = jordan_chevalley(&d.matrix)?;
    let (sr, si) = spectral_split(&s)?;
    let check = |m: Matrix, tag: &str| -> Result<Derivation, LieError> {
        algebra
            .derivation(m)
            .map_err(|e| LieError::Internal(format!("{tag} component fails Leibniz: {e}")))
    };
    let d_sr = check(sr, "semisimple-real")?;
    let d_si = check(si, "semisimple-imaginary")?;
    let d_nil = check(nil, "nilpotent")?;
    Ok((d_sr, d_si, d_nil))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn heis() -> LieAlgebra {
        LieAlgebra::new(
            "Heis",
            vec!["X1".into(), "X2".into(), "X3".into()],
            vec![(0, 1, vec![(2, rint(1))])],
        )
        .unwrap()
    }

    fn heis_r3() -> LieAlgebra {
        // basis X1..X6, [X1,X2]=X3
        LieAlgebra::new(
            "Heis x R3",
            (1..=6).map(|i| format!("X{i}")).collect(),
            vec![(0, 1, vec![(2, rint(1))])],
        )
        .unwrap()
    }

    fn hg(g: &LieAlgebra, diag: &[i64]) -> HomogeneousGroup {
        let m = Matrix::diag(&diag.iter().map(|&x| rint(x)).collect::<Vec<_>>());
        let d = g.derivation(m).unwrap();
        validate_homogeneous(g, &d).unwrap()
    }

    #[test]
    fn validation_accepts_and_rejects() {
        let g = heis_r3();
        let a = hg(&g, &[1, 2, 3, 4, 5, 9]);
        assert!(a.is_purely_real());
        // diag(1,1,-2) on Heis: Leibniz fails (1+1 != -2)
        let h = heis();
        assert!(h
            .derivation(Matrix::diag(&[rint(1), rint(1), rint(-2)]))
            .is_err());
        // valid derivation, non-positive eigenvalue
        let d = h
            .derivation(Matrix::diag(&[rint(1), rint(-1), rint(0)]))
            .unwrap();
        assert!(matches!(
            validate_homogeneous(&h, &d),
            Err(LieError::NonPositiveSpectrum { .. })
        ));
        // complex spectrum 1 +- i is fine
        let r2 = LieAlgebra::abelian("R2", 2);
        let rot = r2
            .derivation(Matrix::from_rows(vec![
                vec![rint(1), rint(-1)],
                vec![rint(1), rint(1)],
            ]))
            .unwrap();
        let c = validate_homogeneous(&r2, &rot).unwrap();
        assert!(!c.is_purely_real());
    }

    #[test]
    fn carnot_type_detection() {
        let h = heis();
        let standard = hg(&h, &[1, 1, 2]);
        assert!(standard.is_carnot_type().unwrap());
        assert!(standard.admits_homogeneous_distance().unwrap());
        assert_eq!(standard.characteristic_subalgebra().unwrap().dim(), 3);
    }

    #[test]
    fn ex21_reachability_dims() {
        let g = heis_r3();
        let a = hg(&g, &[1, 2, 3, 4, 5, 9]);
        let b = hg(&g, &[4, 5, 9, 1, 2, 3]);
        assert_eq!(a.reachability_subalgebra(&rint(2)).unwrap().dim(), 3);
        assert_eq!(b.reachability_subalgebra(&rint(2)).unwrap().dim(), 2);
        assert!(a.reachability_subalgebra(&rint(9)).unwrap().is_full());
    }

    #[test]
    fn ex22_purely_real_not_carnot() {
        // Heis x R with alpha = diag(a-1, 1, a) + nilpotent X4 -> X3, a = 3/2
        let g = LieAlgebra::new(
            "Heis x R",
            (1..=4).map(|i| format!("X{i}")).collect(),
            vec![(0, 1, vec![(2, rint(1))])],
        )
        .unwrap();
        let a = rat(3, 2);
        let mut m = Matrix::diag(&[&a - rint(1), rint(1), a.clone(), a.clone()]);
        *m.at_mut(2, 3) = rint(1);
        let d = g.derivation(m).unwrap();
        let h = validate_homogeneous(&g, &d).unwrap();
        assert!(h.is_purely_real());
        assert!(!h.is_carnot_type().unwrap());
        // eigenspace of 1/2 is X1; its Lie span is itself
        assert_eq!(h.characteristic_subalgebra().unwrap().dim(), 1);
        let beta = g
            .derivation(Matrix::diag(&[&a - rint(1), rint(1), a.clone(), a.clone()]))
            .unwrap();
        let hb = validate_homogeneous(&g, &beta).unwrap();
        assert_eq!(hb.characteristic_subalgebra().unwrap().dim(), 1);
        // Jordan data at the eigenvalue a differs even though profiles agree
        assert_eq!(jordan_structure(&h.alpha, &a).unwrap(), vec![2]);
        assert_eq!(jordan_structure(&hb.alpha, &a).unwrap(), vec![1, 1]);
    }

    #[test]
    fn distance_existence_criteria() {
        let h = heis();
        assert!(hg(&h, &[1, 1, 2]).admits_homogeneous_distance().unwrap());
        // non-diagonalizable at eigenvalue 1
        let r2 = LieAlgebra::abelian("R2", 2);
        let mut m = Matrix::identity(2);
        *m.at_mut(0, 1) = rint(1);
        let d = r2.derivation(m).unwrap();
        let a = validate_homogeneous(&r2, &d).unwrap();
        assert!(!a.admits_homogeneous_distance().unwrap());
        // smallest eigenvalue below one
        let d2 = r2
            .derivation(Matrix::diag(&[rat(1, 2), rint(1)]))
            .unwrap();
        let b = validate_homogeneous(&r2, &d2).unwrap();
        assert!(!b.admits_homogeneous_distance().unwrap());
    }

    #[test]
    fn characteristic_subalgebra_jordan_selection() {
        // R^3, Jordan block of size 2 at eigenvalue 1 plus a 1x1 block:
        // the image of (alpha - I) is the block's eigenline.
        let r3 = LieAlgebra::abelian("R3", 3);
        let mut m = Matrix::identity(3);
        *m.at_mut(0, 1) = rint(1);
        let d = r3.derivation(m).unwrap();
        let h = validate_homogeneous(&r3, &d).unwrap();
        let cs = h.characteristic_subalgebra().unwrap();
        assert_eq!(cs, Subspace::coordinate(3, &[0]));
    }

    #[test]
    fn profile_of_scalar_action_is_trivial() {
        let rn = LieAlgebra::abelian("R4", 4);
        let d = rn.derivation(Matrix::identity(4)).unwrap();
        let h = validate_homogeneous(&rn, &d).unwrap();
        let p = h.invariant_profile().unwrap();
        assert_eq!(p.breakpoints.len(), 1);
        assert_eq!(p.entries[0].reach_dim, 4);
        assert_eq!(p.entries[0].tower_dims, vec![4]);
        assert!(p.entries[0].nested.is_none());
        assert!(p.abelian);
    }

    #[test]
    fn profile_scale_invariance() {
        let g = heis_r3();
        let a = hg(&g, &[1, 2, 3, 4, 5, 9]);
        let scaled = a.rescale(&rat(7, 3)).unwrap();
        assert_eq!(
            a.invariant_profile().unwrap(),
            scaled.invariant_profile().unwrap()
        );
    }

    #[test]
    fn decomposition_on_r2_examples() {
        let r2 = LieAlgebra::abelian("R2", 2);
        let rot = Matrix::from_rows(vec![vec![rint(0), rint(-1)], vec![rint(1), rint(0)]]);
        let d = r2.derivation(rot.clone()).unwrap();
        let (sr, si, nil) = derivation_decomposition(&r2, &d).unwrap();
        assert!(sr.matrix.is_zero());
        assert_eq!(si.matrix, rot);
        assert!(nil.matrix.is_zero());

        let mut jordan = Matrix::identity(2);
        *jordan.at_mut(0, 1) = rint(1);
        let d2 = r2.derivation(jordan).unwrap();
        let (sr2, si2, nil2) = derivation_decomposition(&r2, &d2).unwrap();
        assert_eq!(sr2.matrix, Matrix::identity(2));
        assert!(si2.matrix.is_zero());
        assert_eq!(*nil2.matrix.at(0, 1), rint(1));

        let complex = Matrix::from_rows(vec![vec![rint(1), rint(-1)], vec![rint(1), rint(1)]]);
        let d3 = r2.derivation(complex).unwrap();
        let (sr3, si3, nil3) = derivation_decomposition(&r2, &d3).unwrap();
        assert_eq!(sr3.matrix, Matrix::identity(2));
        assert_eq!(si3.matrix, rot);
        assert!(nil3.matrix.is_zero());
    }
}
