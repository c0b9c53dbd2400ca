//! Spectral data of rational matrices: generalized eigenspaces organized by
//! irreducible factors, Jordan-Chevalley decomposition, and the split of a
//! semisimple matrix into commuting real-spectrum and imaginary-spectrum
//! parts.

use crate::error::LieError;
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::rat::{fmt_rat, Rat};
use crate::subspace::Subspace;
use num_traits::Signed;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorKind {
    /// Degree 1: one rational eigenvalue.
    RealLinear,
    /// Irreducible degree 2 with positive discriminant: two irrational real
    /// eigenvalues.
    RealQuadratic,
    /// Irreducible degree 2 with negative discriminant: a complex pair
    /// `a +- i b`.
    ComplexQuadratic,
    /// Irreducible factor of degree >= 3; outside the supported regime.
    HighDegree,
}

#[derive(Clone, Debug)]
pub struct SpectralFactor {
    pub poly: Poly,
    pub multiplicity: usize,
    pub kind: FactorKind,
    /// Generalized eigenspace `ker poly(M)^multiplicity`.
    pub space: Subspace,
}

impl SpectralFactor {
    /// Rational eigenvalue of a linear factor `t - r`.
    pub fn rational_root(&self) -> Option<Rat> {
        (self.kind == FactorKind::RealLinear).then(|| -self.poly.coeff(0))
    }

    /// Real part of the eigenvalues: the root for linear factors, `a` for
    /// `t^2 - 2a t + c`.
    pub fn real_part(&self) -> Rat {
        match self.kind {
            FactorKind::RealLinear => -self.poly.coeff(0),
            _ => -self.poly.coeff(1) / Rat::from_integer(2.into()),
        }
    }

    /// Product of the factor's roots (determinant contribution per factor).
    pub fn root_product(&self) -> Rat {
        match self.kind {
            FactorKind::RealLinear => -self.poly.coeff(0),
            _ => self.poly.coeff(0),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpectralData {
    pub dim: usize,
    pub factors: Vec<SpectralFactor>,
}

impl SpectralData {
    /// Factors the characteristic polynomial and computes the generalized
    /// eigenspaces. Errors only on non-square input; factors of degree >= 3
    /// are reported with `UnsupportedSpectrum` by the accessors that cannot
    /// handle them, not here.
    pub fn of(m: &Matrix) -> Result<SpectralData, LieError> {
        let cp = m.char_poly()?;
        let fac = cp.factor();
        let n = m.rows;
        let mut factors = Vec::new();
        for (f, mult) in fac.factors {
            let kind = match f.degree() {
                1 => FactorKind::RealLinear,
                2 => {
                    let b = f.coeff(1);
                    let c = f.coeff(0);
                    let disc = &b * &b - Rat::from_integer(4.into()) * &c;
                    if disc.is_negative() {
                        FactorKind::ComplexQuadratic
                    } else {
                        FactorKind::RealQuadratic
                    }
                }
                _ => FactorKind::HighDegree,
            };
            let power = f.eval_matrix(m).pow(mult);
            let space = Subspace::kernel_of(&power);
            factors.push(SpectralFactor {
                poly: f,
                multiplicity: mult,
                kind,
                space,
            });
        }
        let data = SpectralData { dim: n, factors };
        let total: usize = data.factors.iter().map(|f| f.space.dim()).sum();
        if total != n {
            return Err(LieError::Internal(format!(
                "generalized eigenspaces sum to {total}, expected {n}"
            )));
        }
        Ok(data)
    }

    pub fn has_high_degree_factor(&self) -> bool {
        self.factors.iter().any(|f| f.kind == FactorKind::HighDegree)
    }

    /// Errors unless every irreducible factor has degree <= 2.
    pub fn require_low_degree(&self) -> Result<(), LieError> {
        if let Some(f) = self.factors.iter().find(|f| f.kind == FactorKind::HighDegree) {
            return Err(LieError::UnsupportedSpectrum {
                context: format!(
                    "irreducible characteristic factor of degree {}",
                    f.poly.degree()
                ),
            });
        }
        Ok(())
    }

    /// Errors unless the whole spectrum is rational.
    pub fn require_rational(&self) -> Result<(), LieError> {
        if let Some(f) = self
            .factors
            .iter()
            .find(|f| f.kind != FactorKind::RealLinear || f.poly.degree() != 1)
        {
            return Err(LieError::RequiresRationalSpectrum {
                factor: format!("{:?}", f.poly.coeffs()),
            });
        }
        Ok(())
    }

    pub fn is_purely_real(&self) -> Result<bool, LieError> {
        self.require_low_degree()?;
        Ok(self
            .factors
            .iter()
            .all(|f| f.kind != FactorKind::ComplexQuadratic))
    }

    /// Sorted rational eigenvalues with algebraic multiplicities; errors if
    /// any factor is non-linear.
    pub fn rational_eigenvalues(&self) -> Result<Vec<(Rat, usize)>, LieError> {
        self.require_rational()?;
        let mut out: Vec<(Rat, usize)> = self
            .factors
            .iter()
            .map(|f| (f.rational_root().unwrap(), f.multiplicity))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }

    /// Generalized eigenspace of a rational eigenvalue.
    pub fn eigenspace_of(&self, lambda: &Rat) -> Option<&Subspace> {
        self.factors
            .iter()
            .find(|f| f.rational_root().as_ref() == Some(lambda))
            .map(|f| &f.space)
    }
}

/// Jordan-Chevalley decomposition `M = S + N` with `S` semisimple, `N`
/// nilpotent, both rational polynomials in `M`.
///
/// Newton iteration `x <- x - p(x) p'(x)^{-1}` on the squarefree part `p` of
/// the characteristic polynomial, starting at `M`; `ceil(log2 n) + 1` steps
/// square the nilpotency defect away.
pub fn jordan_chevalley(m: &Matrix) -> Result<(Matrix, Matrix), LieError> {
    if !m.is_square() {
        return Err(LieError::DimensionMismatch {
            context: "jordan_chevalley of non-square matrix".into(),
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok((m.clone(), m.clone()));
    }
    let p = m.char_poly()?.squarefree_part();
    let dp = p.derivative();
    let mut x = m.clone();
    let steps = usize::BITS - (n - 1).leading_zeros().min(usize::BITS - 1);
    for _ in 0..=steps {
        let px = p.eval_matrix(&x);
        if px.is_zero() {
            break;
        }
        let dpx = dp.eval_matrix(&x);
        let correction = &dpx.inverse().map_err(|_| {
            LieError::Internal("p'(x) singular during Jordan-Chevalley iteration".into())
        })? * &px;
        x = &x - &correction;
    }
    let s = x;
    if !p.eval_matrix(&s).is_zero() {
        return Err(LieError::Internal(
            "Jordan-Chevalley iteration did not converge".into(),
        ));
    }
    let nil = m - &s;
    Ok((s, nil))
}

/// Splits a semisimple rational matrix into `S = S_real + S_imag` where
/// `S_real` has real spectrum and `S_imag` purely imaginary spectrum, both
/// rational. On real-spectrum blocks `S_real = S`; on a complex block with
/// factor `t^2 - 2a t + c` it is `a Id`.
pub fn spectral_split(s: &Matrix) -> Result<(Matrix, Matrix), LieError> {
    let p = s.char_poly()?.squarefree_part();
    if !p.eval_matrix(s).is_zero() {
        return Err(LieError::NotSemisimple);
    }
    let data = SpectralData::of(s)?;
    data.require_low_degree()?;
    let n = s.rows;
    // Assemble S_real block by block in the eigenbasis concatenation.
    let mut basis: Vec<Vec<Rat>> = Vec::with_capacity(n);
    let mut images: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for f in &data.factors {
        for v in f.space.basis() {
            basis.push(v.clone());
            let img = match f.kind {
                FactorKind::ComplexQuadratic => {
                    let a = f.real_part();
                    v.iter().map(|x| x * &a).collect()
                }
                _ => s.apply(v),
            };
            images.push(img);
        }
    }
    // S_real * B = I where columns of B are the basis vectors.
    let b = Matrix::from_fn(n, n, |i, j| basis[j][i].clone());
    let img = Matrix::from_fn(n, n, |i, j| images[j][i].clone());
    let s_real = &img * &b.inverse()?;
    let s_imag = s - &s_real;
    Ok((s_real, s_imag))
}

/// Jordan block sizes of a rational eigenvalue, largest first, from the rank
/// sequence of `(M - lambda I)^k`.
pub fn jordan_structure(m: &Matrix, lambda: &Rat) -> Result<Vec<usize>, LieError> {
    if !m.is_square() {
        return Err(LieError::DimensionMismatch {
            context: "jordan_structure of non-square matrix".into(),
        });
    }
    let n = m.rows;
    let shifted = m - &Matrix::identity(n).scale(lambda);
    let mut ranks = vec![n];
    let mut power = Matrix::identity(n);
    loop {
        power = &power * &shifted;
        let r = power.rank();
        ranks.push(r);
        if r == *ranks.get(ranks.len() - 2).unwrap_or(&n) {
            break;
        }
    }
    if ranks[1] == n {
        return Err(LieError::NotAnEigenvalue(fmt_rat(lambda)));
    }
    // blocks of size >= k: ranks[k-1] - ranks[k]
    let mut sizes = Vec::new();
    for k in 1..ranks.len() - 1 {
        let geq_k = ranks[k - 1] - ranks[k];
        let geq_k1 = if k < ranks.len() - 1 {
            ranks[k] - ranks[k + 1].min(ranks[k])
        } else {
            0
        };
        let exactly_k = geq_k - geq_k1;
        for _ in 0..exactly_k {
            sizes.push(k);
        }
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(sizes)
}

/// All Jordan data of a matrix with rational spectrum, sorted by eigenvalue:
/// `(lambda, block sizes)`.
pub fn jordan_profile(m: &Matrix) -> Result<Vec<(Rat, Vec<usize>)>, LieError> {
    let data = SpectralData::of(m)?;
    let eigs = data.rational_eigenvalues()?;
    eigs.into_iter()
        .map(|(l, _)| jordan_structure(m, &l).map(|s| (l, s)))
        .collect()
}

pub fn is_diagonalizable(m: &Matrix) -> Result<bool, LieError> {
    let p = m.char_poly()?.squarefree_part();
    Ok(p.eval_matrix(m).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rint(x)).collect())
                .collect(),
        )
    }

    fn check_jc_postconditions(a: &Matrix) {
        let (s, nil) = jordan_chevalley(a).unwrap();
        assert_eq!(&(&s + &nil), a, "sum");
        assert!(s.commutes_with(&nil), "commutation");
        assert!(
            a.char_poly().unwrap().squarefree_part().eval_matrix(&s).is_zero(),
            "semisimple part not annihilated by squarefree part"
        );
        assert!(nil.pow(a.rows).is_zero(), "nilpotency");
    }

    #[test]
    fn jc_single_jordan_block() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let (s, nil) = jordan_chevalley(&a).unwrap();
        assert_eq!(s, Matrix::identity(2));
        assert_eq!(nil, m(&[&[0, 1], &[0, 0]]));
    }

    #[test]
    fn jc_diagonal_is_fixed() {
        let a = Matrix::diag(&[rint(2), rint(5), rint(5)]);
        let (s, nil) = jordan_chevalley(&a).unwrap();
        assert_eq!(s, a);
        assert!(nil.is_zero());
    }

    #[test]
    fn jc_companion_of_repeated_factor() {
        // companion matrix of (t-1)^2 (t-2) = t^3 - 4t^2 + 5t - 2
        let a = m(&[&[0, 0, 2], &[1, 0, -5], &[0, 1, 4]]);
        check_jc_postconditions(&a);
        let (s, _) = jordan_chevalley(&a).unwrap();
        // idempotence: the semisimple part decomposes trivially
        let (s2, n2) = jordan_chevalley(&s).unwrap();
        assert_eq!(s2, s);
        assert!(n2.is_zero());
    }

    #[test]
    fn split_rotation_is_purely_imaginary() {
        let a = m(&[&[0, -1], &[1, 0]]);
        let (re, im) = spectral_split(&a).unwrap();
        assert!(re.is_zero());
        assert_eq!(im, a);
    }

    #[test]
    fn split_complex_pair_one_plus_minus_i() {
        let a = m(&[&[1, -1], &[1, 1]]);
        let (re, im) = spectral_split(&a).unwrap();
        assert_eq!(re, Matrix::identity(2));
        assert_eq!(im, m(&[&[0, -1], &[1, 0]]));
        assert!(re.commutes_with(&im));
        assert!(a.commutes_with(&re));
        // factor annihilation: im satisfies t^2 + 1
        let sq = &im * &im;
        assert_eq!(sq, Matrix::identity(2).scale(&rint(-1)));
    }

    #[test]
    fn split_diagonal_untouched() {
        let a = Matrix::diag(&[rint(1), rint(2)]);
        let (re, im) = spectral_split(&a).unwrap();
        assert_eq!(re, a);
        assert!(im.is_zero());
    }

    #[test]
    fn split_rejects_degree_three_factor() {
        // companion of t^3 - 2 (irreducible, semisimple)
        let a = m(&[&[0, 0, 2], &[1, 0, 0], &[0, 1, 0]]);
        assert!(matches!(
            spectral_split(&a),
            Err(LieError::UnsupportedSpectrum { .. })
        ));
    }

    #[test]
    fn jordan_structure_sizes() {
        let a = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(jordan_structure(&a, &rint(1)).unwrap(), vec![2]);
        let b = Matrix::diag(&[rat(3, 2), rat(3, 2)]);
        assert_eq!(jordan_structure(&b, &rat(3, 2)).unwrap(), vec![1, 1]);
        assert!(jordan_structure(&b, &rint(7)).is_err());
    }

    #[test]
    fn spectral_data_eigenspace_dims() {
        let a = m(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]]);
        let d = SpectralData::of(&a).unwrap();
        assert_eq!(d.eigenspace_of(&rint(1)).unwrap().dim(), 2);
        assert_eq!(d.eigenspace_of(&rint(2)).unwrap().dim(), 1);
        let eigs = d.rational_eigenvalues().unwrap();
        assert_eq!(eigs, vec![(rint(1), 2), (rint(2), 1)]);
    }
}
