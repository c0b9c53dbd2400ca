//! Solvable-algebra structure theory: adjoint weights along a composition
//! flag, nilradical, completely-solvable and type (R) predicates, the
//! real-shadow construction (twisted bracket and semidirect routes), cone
//! dimension, growth degree and Betti numbers.

use crate::error::LieError;
use crate::lie::{semidirect_r, LieAlgebra, SemidirectPresentation};
use crate::matrix::{coords_in_basis, vec_add, vec_is_zero, vec_sub, Matrix};
use crate::poly::Poly;
use crate::rat::{rat_sqrt, Rat};
use crate::spectral::{jordan_chevalley, spectral_split, SpectralData};
use crate::subspace::Subspace;
use num_traits::{One, Signed, Zero};

/// One step of the adjoint-invariant flag. The quotient is 1- or
/// 2-dimensional; the adjoint action of `x` on it has eigenvalues
/// `a(x) +- i b(x) sqrt(c)` where `c` is `imag_unit_sq` (1-dimensional
/// quotients have `b = 0` and no `c`). Storing the imaginary part against a
/// rational reference complex structure `J` with `J^2 = -c Id` keeps every
/// functional rational; all vanishing tests are unaffected.
#[derive(Clone, Debug)]
pub struct WeightStep {
    pub flag_after: Subspace,
    pub quot_dim: usize,
    /// Real-part functional on the basis of `g`.
    pub a: Vec<Rat>,
    /// Imaginary-part functional w.r.t. the reference structure.
    pub b: Vec<Rat>,
    pub imag_unit_sq: Option<Rat>,
}

#[derive(Clone, Debug)]
pub struct WeightSystem {
    pub steps: Vec<WeightStep>,
}

impl WeightSystem {
    pub fn all_imaginary_parts_vanish(&self) -> bool {
        self.steps
            .iter()
            .all(|s| s.b.iter().all(|x| x.is_zero()))
    }

    pub fn all_real_parts_vanish(&self) -> bool {
        self.steps
            .iter()
            .all(|s| s.a.iter().all(|x| x.is_zero()))
    }

    /// Real parts of the eigenvalues of `ad x`, with multiplicity from the
    /// quotient dimensions.
    pub fn real_parts_at(&self, x: &[Rat]) -> Vec<(Rat, usize)> {
        self.steps
            .iter()
            .map(|s| {
                let val = s
                    .a
                    .iter()
                    .zip(x)
                    .fold(Rat::zero(), |acc, (c, xi)| acc + c * xi);
                (val, s.quot_dim)
            })
            .collect()
    }
}

/// Result of the twisted-bracket real-shadow construction. The shadow lives
/// on the same underlying vector space and basis labels as the input.
#[derive(Clone, Debug)]
pub struct ShadowResult {
    pub shadow: LieAlgebra,
    /// `phi[i]` is the derivation `-ad_si(pi_a(e_i))`.
    pub phi: Vec<Matrix>,
    pub chosen_a: Subspace,
}

/// Computes a full adjoint-invariant flag with 1- or 2-dimensional
/// irreducible quotients and the weight functionals on them.
///
/// The derived subalgebra acts nilpotently on every quotient, so its common
/// kernel there is nonzero and carries a commuting action of the whole
/// algebra; minimal invariant subspaces are then cut out with factor data of
/// degree at most 2. Anything needing degree >= 3 splittings or irrational
/// functional values is reported as `UnsupportedSpectrum`.
pub fn adjoint_weights(g: &LieAlgebra) -> Result<WeightSystem, LieError> {
    if !g.is_solvable() {
        return Err(LieError::NotSolvable);
    }
    let n = g.dim;
    let derived = g.derived_subalgebra();
    let mut flag = Subspace::zero(n);
    let mut steps: Vec<WeightStep> = Vec::new();
    while flag.dim() < n {
        let comp = flag.complement_indices();
        let qdim = comp.len();
        let project = |v: &[Rat]| -> Vec<Rat> {
            let r = flag.reduce(v);
            comp.iter().map(|&c| r[c].clone()).collect()
        };
        // Action of a vector on the quotient, column-as-image.
        let action_of = |x: &[Rat]| -> Matrix {
            Matrix::from_fn(qdim, qdim, |i, j| {
                let w = g.bracket(x, &g.basis_vector(comp[j]));
                project(&w)[i].clone()
            })
        };
        // Common kernel of the derived action; full quotient if derived = 0.
        let kernel = if derived.is_zero() {
            Subspace::full(qdim)
        } else {
            let mut k = Subspace::full(qdim);
            for x in derived.basis() {
                k = k.intersect(&Subspace::kernel_of(&action_of(x)));
            }
            k
        };
        if kernel.is_zero() {
            return Err(LieError::Internal(
                "derived subalgebra acts without common kernel".into(),
            ));
        }
        // The basis actions restricted to the kernel commute pairwise.
        let family: Vec<Matrix> = (0..n)
            .map(|i| action_of(&g.basis_vector(i)).restrict(kernel.basis()))
            .collect::<Result<_, _>>()?;
        let (u_in_k, weights, unit) = minimal_invariant(&family)?;
        // Lift U from kernel coordinates to ambient vectors.
        let mut ambient_vectors = Vec::new();
        for row in u_in_k.basis() {
            // kernel coords -> quotient coords
            let mut q = vec![Rat::zero(); qdim];
            for (ki, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    for x in 0..qdim {
                        let add = &kernel.basis()[ki][x] * c;
                        q[x] = &q[x] + &add;
                    }
                }
            }
            // quotient coords -> ambient representative
            let mut v = vec![Rat::zero(); n];
            for (pos, &c) in comp.iter().enumerate() {
                v[c] = q[pos].clone();
            }
            ambient_vectors.push(v);
        }
        let step_dim = ambient_vectors.len();
        flag = flag.sum(&Subspace::from_vectors(n, &ambient_vectors));
        let a: Vec<Rat> = weights.iter().map(|(x, _)| x.clone()).collect();
        let b: Vec<Rat> = weights.iter().map(|(_, y)| y.clone()).collect();
        steps.push(WeightStep {
            flag_after: flag.clone(),
            quot_dim: step_dim,
            a,
            b,
            imag_unit_sq: unit,
        });
    }
    let ws = WeightSystem { steps };
    verify_weights(g, &ws)?;
    Ok(ws)
}

/// Exact post-verification: on each chain quotient the induced action of
/// every basis vector must have the characteristic polynomial dictated by
/// the recorded functionals.
fn verify_weights(g: &LieAlgebra, ws: &WeightSystem) -> Result<(), LieError> {
    let n = g.dim;
    let mut prev = Subspace::zero(n);
    for step in &ws.steps {
        let cur = &step.flag_after;
        // adjoint invariance of the flag member
        for i in 0..n {
            for v in cur.basis() {
                if !cur.contains(&g.bracket(&g.basis_vector(i), v)) {
                    return Err(LieError::Internal("flag member not an ideal".into()));
                }
            }
        }
        // coordinates on the quotient cur/prev: reduce by prev, then take
        // the coordinates against the residues of cur's new directions
        let reps: Vec<Vec<Rat>> = cur
            .basis()
            .iter()
            .filter(|v| !prev.contains(v))
            .cloned()
            .collect();
        let reduced_reps: Vec<Vec<Rat>> = reps.iter().map(|v| prev.reduce(v)).collect();
        for i in 0..n {
            let m = Matrix::from_fn(step.quot_dim, step.quot_dim, |r, c| {
                let w = g.bracket(&g.basis_vector(i), &reps[c]);
                let coords = coords_in_basis(&prev.reduce(&w), &reduced_reps)
                    .expect("bracket image stays in the flag");
                coords[r].clone()
            });
            let cp = m.char_poly()?;
            let expected = match step.quot_dim {
                1 => Poly::new(vec![-step.a[i].clone(), Rat::one()]),
                2 => {
                    let aa = &step.a[i];
                    let bb = &step.b[i];
                    let c0 = step.imag_unit_sq.as_ref().unwrap();
                    let two = Rat::from_integer(2.into());
                    Poly::new(vec![
                        aa * aa + bb * bb * c0,
                        -(aa * &two),
                        Rat::one(),
                    ])
                }
                _ => return Err(LieError::Internal("quotient dim not 1 or 2".into())),
            };
            if cp != expected {
                return Err(LieError::Internal(format!(
                    "weight verification failed on basis vector {i}"
                )));
            }
        }
        prev = cur.clone();
    }
    Ok(())
}

/// Minimal polynomial via the first linear dependence among powers.
fn min_poly(m: &Matrix) -> Poly {
    let n = m.rows;
    if n == 0 {
        return Poly::one();
    }
    let flat = |x: &Matrix| -> Vec<Rat> {
        let mut v = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                v.push(x.at(i, j).clone());
            }
        }
        v
    };
    let mut powers = vec![Matrix::identity(n)];
    loop {
        let basis: Vec<Vec<Rat>> = powers.iter().map(flat).collect();
        let next = &powers[powers.len() - 1].clone() * m;
        if let Some(coords) = coords_in_basis(&flat(&next), &basis) {
            let mut coeffs: Vec<Rat> = coords.iter().map(|c| -c.clone()).collect();
            coeffs.push(Rat::one());
            return Poly::new(coeffs);
        }
        powers.push(next);
    }
}

/// Given pairwise commuting rational matrices, finds a common invariant
/// subspace of dimension 1 or 2 on which each matrix acts as a scalar or a
/// rational "complex scalar" `a + b J`, and reports those pairs.
fn minimal_invariant(
    family: &[Matrix],
) -> Result<(Subspace, Vec<(Rat, Rat)>, Option<Rat>), LieError> {
    let space_dim = family.first().map_or(0, |m| m.rows);
    let mut w = Subspace::full(space_dim);
    'refine: loop {
        if w.is_zero() {
            return Err(LieError::Internal("invariant refinement emptied".into()));
        }
        let restricted: Vec<Matrix> = family
            .iter()
            .map(|m| m.restrict(w.basis()))
            .collect::<Result<_, _>>()?;
        // Shrink until each restriction has an irreducible minimal polynomial.
        for m in &restricted {
            let mp = min_poly(m);
            let fac = mp.factor();
            if fac.factors.len() > 1 || fac.factors[0].1 > 1 {
                let f = &fac.factors[0].0;
                let ker = Subspace::kernel_of(&f.eval_matrix(m));
                w = lift(&w, &ker);
                continue 'refine;
            }
            if fac.factors[0].0.degree() >= 3 {
                return Err(LieError::UnsupportedSpectrum {
                    context: "composition quotient needs a degree >= 3 splitting".into(),
                });
            }
        }
        // All minimal polynomials irreducible of degree <= 2.
        let quad_idx = restricted.iter().position(|m| min_poly(m).degree() == 2);
        let Some(i0) = quad_idx else {
            // Everything scalar: any line works; take the first basis vector.
            let line = Subspace::from_vectors(
                w.ambient_dim(),
                &[w.basis()[0].clone()],
            );
            let weights = restricted
                .iter()
                .map(|m| (m.at(0, 0).clone(), Rat::zero()))
                .collect();
            return Ok((line, weights, None));
        };
        let mp0 = min_poly(&restricted[i0]);
        let p = mp0.coeff(1);
        let q = mp0.coeff(0);
        let two = Rat::from_integer(2.into());
        let four = Rat::from_integer(4.into());
        let a0 = -&p / &two;
        let disc = &p * &p - &four * &q;
        if disc.is_positive() {
            return Err(LieError::UnsupportedSpectrum {
                context: "irrational real weight functional".into(),
            });
        }
        let c0 = &q - &a0 * &a0; // J^2 = -c0, c0 > 0
        let k = w.dim();
        let jmat = &restricted[i0] - &Matrix::identity(k).scale(&a0);
        // Try to express every matrix as x I + y J.
        let mut weights = Vec::with_capacity(restricted.len());
        for (idx, m) in restricted.iter().enumerate() {
            match solve_in_plane(m, &jmat) {
                Some(pair) => weights.push(pair),
                None => {
                    // Split off a rational "complex eigenspace" of m.
                    let mpi = min_poly(m);
                    let ai = -mpi.coeff(1) / &two;
                    let ci = &mpi.coeff(0) - &ai * &ai;
                    let Some(bi) = rat_sqrt(&(&ci / &c0)) else {
                        return Err(LieError::UnsupportedSpectrum {
                            context: "irrational imaginary weight functional".into(),
                        });
                    };
                    for cand in [bi.clone(), -bi] {
                        let shifted =
                            &(m - &Matrix::identity(k).scale(&ai)) - &jmat.scale(&cand);
                        let ker = Subspace::kernel_of(&shifted);
                        if !ker.is_zero() && ker.dim() < k {
                            w = lift(&w, &ker);
                            continue 'refine;
                        }
                    }
                    return Err(LieError::Internal(format!(
                        "commuting family member {idx} admits no rational eigenplane"
                    )));
                }
            }
        }
        // J-invariant plane through the first basis vector.
        let w0 = w.basis()[0].clone();
        let jw0 = {
            // J acts in w-coordinates; lift the image.
            let mut img = vec![Rat::zero(); w.ambient_dim()];
            for (col, c) in jmat.col(0).iter().enumerate() {
                if !c.is_zero() {
                    for x in 0..w.ambient_dim() {
                        let add = &w.basis()[col][x] * c;
                        img[x] = &img[x] + &add;
                    }
                }
            }
            img
        };
        let plane = Subspace::from_vectors(w.ambient_dim(), &[w0, jw0]);
        if plane.dim() != 2 {
            return Err(LieError::Internal("complex plane degenerated".into()));
        }
        return Ok((plane, weights, Some(c0)));
    }
}

/// Expresses `m = x I + y J` over the rationals if possible.
fn solve_in_plane(m: &Matrix, j: &Matrix) -> Option<(Rat, Rat)> {
    let k = m.rows;
    let mut cols: Vec<Vec<Rat>> = vec![Vec::new(), Vec::new()];
    let mut target = Vec::new();
    let id = Matrix::identity(k);
    for r in 0..k {
        for c in 0..k {
            cols[0].push(id.at(r, c).clone());
            cols[1].push(j.at(r, c).clone());
            target.push(m.at(r, c).clone());
        }
    }
    let coords = coords_in_basis(&target, &cols)?;
    Some((coords[0].clone(), coords[1].clone()))
}

/// Rewrites a subspace of the `w`-coordinate space as a subspace of the
/// ambient space of `w`.
fn lift(w: &Subspace, inner: &Subspace) -> Subspace {
    let vecs: Vec<Vec<Rat>> = inner
        .basis()
        .iter()
        .map(|row| {
            let mut v = vec![Rat::zero(); w.ambient_dim()];
            for (i, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    for x in 0..w.ambient_dim() {
                        let add = &w.basis()[i][x] * c;
                        v[x] = &v[x] + &add;
                    }
                }
            }
            v
        })
        .collect();
    Subspace::from_vectors(w.ambient_dim(), &vecs)
}

/// The nilradical of a solvable algebra: common kernel of all weight
/// functionals; post-verified to be a nilpotent ideal containing the
/// derived subalgebra.
pub fn nilradical(g: &LieAlgebra) -> Result<Subspace, LieError> {
    let ws = adjoint_weights(g)?;
    let mut rows = Vec::new();
    for step in &ws.steps {
        if step.a.iter().any(|c| !c.is_zero()) {
            rows.push(step.a.clone());
        }
        if step.b.iter().any(|c| !c.is_zero()) {
            rows.push(step.b.clone());
        }
    }
    let nil = if rows.is_empty() {
        Subspace::full(g.dim)
    } else {
        Subspace::kernel_of(&Matrix::from_rows(rows))
    };
    if !g.is_ideal(&nil) {
        return Err(LieError::Internal("nilradical candidate not an ideal".into()));
    }
    if !g.restrict_to(&nil)?.is_nilpotent() {
        return Err(LieError::Internal("nilradical candidate not nilpotent".into()));
    }
    if !nil.contains_subspace(&g.derived_subalgebra()) {
        return Err(LieError::Internal(
            "nilradical candidate misses the derived subalgebra".into(),
        ));
    }
    Ok(nil)
}

pub fn is_completely_solvable(g: &LieAlgebra) -> Result<bool, LieError> {
    Ok(adjoint_weights(g)?.all_imaginary_parts_vanish())
}

pub fn is_type_r(g: &LieAlgebra) -> Result<bool, LieError> {
    Ok(adjoint_weights(g)?.all_real_parts_vanish())
}

/// Semisimple part of `ad(x)`.
fn ad_semisimple(g: &LieAlgebra, x: &[Rat]) -> Result<Matrix, LieError> {
    Ok(jordan_chevalley(&g.ad(x))?.0)
}

/// Imaginary semisimple part of `ad(x)`.
fn ad_si(g: &LieAlgebra, x: &[Rat]) -> Result<Matrix, LieError> {
    let (s, _) = jordan_chevalley(&g.ad(x))?;
    Ok(spectral_split(&s)?.1)
}

/// Candidate complements of the nilradical, deterministically enumerated:
/// the coordinate complement first, then complements carved from the
/// Fitting-null spaces of `ad x` for `x` over basis vectors and small
/// integer two-term combinations.
fn complement_candidates(g: &LieAlgebra, nil: &Subspace) -> Vec<Subspace> {
    let n = g.dim;
    let codim = n - nil.dim();
    let mut out = Vec::new();
    let push_unique = |s: Subspace, out: &mut Vec<Subspace>| {
        if s.dim() == codim && nil.sum(&s).is_full() && !out.contains(&s) {
            out.push(s);
        }
    };
    push_unique(
        Subspace::coordinate(n, &nil.complement_indices()),
        &mut out,
    );
    let mut seeds: Vec<Vec<Rat>> = (0..n).map(|i| g.basis_vector(i)).collect();
    let coeffs = [1i64, -1, 2, -2];
    for i in 0..n {
        for j in (i + 1)..n {
            for &ci in &coeffs {
                for &cj in &coeffs {
                    let mut v = vec![Rat::zero(); n];
                    v[i] = Rat::from_integer(ci.into());
                    v[j] = Rat::from_integer(cj.into());
                    seeds.push(v);
                }
            }
        }
    }
    for x in seeds {
        if out.len() >= 200 {
            break;
        }
        let fitting = Subspace::kernel_of(&g.ad(&x).pow(n));
        if !nil.sum(&fitting).is_full() {
            continue;
        }
        // Greedily pick Fitting vectors independent modulo the nilradical.
        let mut picked: Vec<Vec<Rat>> = Vec::new();
        for v in fitting.basis() {
            if picked.len() == codim {
                break;
            }
            let mut trial = picked.clone();
            trial.push(v.clone());
            let mod_nil = nil.sum(&Subspace::from_vectors(n, &trial));
            if mod_nil.dim() == nil.dim() + trial.len() {
                picked = trial;
            }
        }
        if picked.len() == codim {
            push_unique(Subspace::from_vectors(n, &picked), &mut out);
        }
    }
    out
}

/// Checks the complement conditions: `ad_s(X)(Y) = 0` and
/// `[ad_s(X), ad_s(Y)] = 0` for all `X, Y` in the candidate.
fn complement_is_valid(g: &LieAlgebra, a: &Subspace) -> Result<bool, LieError> {
    let mut semisimple_parts = Vec::new();
    for x in a.basis() {
        semisimple_parts.push(ad_semisimple(g, x)?);
    }
    for (i, si) in semisimple_parts.iter().enumerate() {
        for (j, y) in a.basis().iter().enumerate() {
            if !vec_is_zero(&si.apply(y)) {
                return Ok(false);
            }
            if j > i && !si.commutes_with(&semisimple_parts[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A vector-space complement of the nilradical on which all semisimple
/// adjoint parts vanish and commute.
pub fn choose_complement_a(g: &LieAlgebra) -> Result<Subspace, LieError> {
    let nil = nilradical(g)?;
    if nil.is_full() {
        return Ok(Subspace::zero(g.dim));
    }
    let candidates = complement_candidates(g, &nil);
    let tried = candidates.len();
    for cand in candidates {
        if complement_is_valid(g, &cand)? {
            return Ok(cand);
        }
    }
    Err(LieError::ComplementSearchFailed { tried })
}

/// The real-shadow via the twisted bracket
/// `[X,Y]_R = [X,Y] + phi(X)(Y) - phi(Y)(X)` with
/// `phi(X) = -ad_si(pi_a(X))`.
///
/// All claimed properties of `phi` (additivity across the chosen basis,
/// abelian image, Leibniz) are verified exactly; a candidate complement that
/// fails any of them is discarded and the search continues.
pub fn real_shadow(g: &LieAlgebra) -> Result<ShadowResult, LieError> {
    let nil = nilradical(g)?;
    if nil.is_full() {
        // Nilpotent algebra: the shadow is the algebra itself.
        return Ok(ShadowResult {
            shadow: g.clone(),
            phi: vec![Matrix::zero(g.dim, g.dim); g.dim],
            chosen_a: Subspace::zero(g.dim),
        });
    }
    let candidates = complement_candidates(g, &nil);
    let tried = candidates.len();
    let mut last_err = LieError::ComplementSearchFailed { tried };
    for cand in candidates {
        if !complement_is_valid(g, &cand)? {
            continue;
        }
        match try_shadow(g, &nil, &cand) {
            Ok(result) => return Ok(result),
            Err(e @ LieError::PhiNotHomomorphism) => last_err = e,
            Err(e) => return Err(e),
        }
    }
    Err(last_err)
}

fn try_shadow(g: &LieAlgebra, nil: &Subspace, a: &Subspace) -> Result<ShadowResult, LieError> {
    let n = g.dim;
    // pi_a: write v = nil-part + a-part in the concatenated basis.
    let mut mixed_basis: Vec<Vec<Rat>> = nil.basis().to_vec();
    mixed_basis.extend(a.basis().to_vec());
    let pi_a = |v: &[Rat]| -> Result<Vec<Rat>, LieError> {
        let coords = coords_in_basis(v, &mixed_basis)
            .ok_or_else(|| LieError::Internal("complement does not span".into()))?;
        let mut out = vec![Rat::zero(); n];
        for (idx, c) in coords.iter().enumerate().skip(nil.dim()) {
            if !c.is_zero() {
                let base = &a.basis()[idx - nil.dim()];
                for x in 0..n {
                    let add = &base[x] * c;
                    out[x] = &out[x] + &add;
                }
            }
        }
        Ok(out)
    };
    let phi_of = |v: &[Rat]| -> Result<Matrix, LieError> {
        let proj = pi_a(v)?;
        Ok(-&ad_si(g, &proj)?)
    };
    let phi: Vec<Matrix> = (0..n)
        .map(|i| phi_of(&g.basis_vector(i)))
        .collect::<Result<_, _>>()?;
    // Additivity of x -> -ad_si(pi_a(x)) across basis pairs; this is the
    // step that can fail for an unsuitable complement.
    for i in 0..n {
        for j in (i + 1)..n {
            let sum_vec = vec_add(&g.basis_vector(i), &g.basis_vector(j));
            let direct = phi_of(&sum_vec)?;
            if direct != &phi[i] + &phi[j] {
                return Err(LieError::PhiNotHomomorphism);
            }
        }
    }
    // Abelian image; brackets land in the nilradical where phi vanishes, so
    // this is exactly the homomorphism property.
    for i in 0..n {
        for j in (i + 1)..n {
            if !phi[i].commutes_with(&phi[j]) {
                return Err(LieError::PhiNotHomomorphism);
            }
        }
    }
    // Each phi must be a derivation for the twisted bracket to close up.
    for p in &phi {
        if g.derivation(p.clone()).is_err() {
            return Err(LieError::PhiNotHomomorphism);
        }
    }
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut w = g.basis_bracket(i, j);
            w = vec_add(&w, &phi[i].col(j));
            w = vec_sub(&w, &phi[j].col(i));
            let terms: Vec<(usize, Rat)> = w
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !terms.is_empty() {
                brackets.push((i, j, terms));
            }
        }
    }
    let shadow = LieAlgebra::new(
        format!("shadow({})", g.name),
        g.basis_labels.clone(),
        brackets,
    )?;
    if !is_completely_solvable(&shadow)? {
        return Err(LieError::PhiNotHomomorphism);
    }
    Ok(ShadowResult {
        shadow,
        phi,
        chosen_a: a.clone(),
    })
}

/// The real-shadow of `h x|_alpha R` computed on the semidirect route:
/// replace `alpha` by its real part `alpha_sr + alpha_nil`.
pub fn real_part_semidirect(p: &SemidirectPresentation) -> Result<LieAlgebra, LieError> {
    if !is_completely_solvable(&p.h)? {
        return Err(LieError::HNotCompletelySolvable);
    }
    let (s, nil) = jordan_chevalley(&p.alpha.matrix)?;
    let (sr, _si) = spectral_split(&s)?;
    let alpha0 = &sr + &nil;
    let d = p
        .h
        .derivation(alpha0)
        .map_err(|e| LieError::Internal(format!("real part is not a derivation: {e}")))?;
    let out = semidirect_r(&SemidirectPresentation {
        h: p.h.clone(),
        alpha: d,
        t_label: p.t_label.clone(),
    })?;
    if !is_completely_solvable(&out)? {
        return Err(LieError::Internal(
            "real-part semidirect output is not completely solvable".into(),
        ));
    }
    Ok(out)
}

/// Cone dimension: codimension of the stabilized lower central series term.
/// For a solvable algebra that is not completely solvable this is computed
/// on its real-shadow.
pub fn cone_dimension(g: &LieAlgebra) -> Result<usize, LieError> {
    let target = if is_completely_solvable(g)? {
        g.clone()
    } else {
        real_shadow(g)?.shadow
    };
    let stabilized = target.lower_central_series().last().unwrap().dim();
    Ok(target.dim - stabilized)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QiType {
    PolyGrowth,
    Heintze,
    ConeDim(usize),
}

impl std::fmt::Display for QiType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QiType::PolyGrowth => write!(f, "poly growth"),
            QiType::Heintze => write!(f, "Heintze"),
            QiType::ConeDim(k) => write!(f, "conedim {k}"),
        }
    }
}

/// Coarse quasi-isometry type of a solvable algebra: polynomial growth,
/// Heintze (codimension-one nilradical with adjoint eigenvalue real parts
/// of one strict sign), or the cone dimension of the real-shadow.
pub fn classify_qi_type(g: &LieAlgebra) -> Result<QiType, LieError> {
    if is_type_r(g)? {
        return Ok(QiType::PolyGrowth);
    }
    let nil = nilradical(g)?;
    if nil.dim() + 1 == g.dim {
        let j = nil.complement_indices()[0];
        let ad_x = g.ad_basis(j).restrict(nil.basis())?;
        let data = SpectralData::of(&ad_x)?;
        data.require_low_degree()?;
        let parts: Vec<Rat> = data.factors.iter().map(|f| f.real_part()).collect();
        let all_pos = parts.iter().all(|p| p.is_positive());
        let all_neg = parts.iter().all(|p| p.is_negative());
        if all_pos || all_neg {
            return Ok(QiType::Heintze);
        }
    }
    Ok(QiType::ConeDim(cone_dimension(g)?))
}

/// Polynomial growth degree of a nilpotent algebra:
/// `sum k dim(g^k / g^{k+1})`.
pub fn growth_degree(g: &LieAlgebra) -> Result<usize, LieError> {
    if !g.is_nilpotent() {
        return Err(LieError::NotNilpotent);
    }
    let dims = g.lcs_dims();
    let mut total = 0;
    for k in 1..dims.len() {
        total += k * (dims[k - 1] - dims[k]);
    }
    Ok(total)
}

/// Betti numbers `b_0..b_n` of the exterior-algebra complex with the
/// differential induced by the bracket, via exact ranks.
pub fn betti_numbers(g: &LieAlgebra) -> Vec<usize> {
    let n = g.dim;
    let mut subsets: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n + 2);
    for k in 0..=n + 1 {
        subsets.push(k_subsets(n, k));
    }
    // rank of d_k : Lambda^k -> Lambda^{k+1}
    let mut ranks = vec![0usize; n + 1];
    for k in 1..n {
        let dom = &subsets[k];
        let cod = &subsets[k + 1];
        let mut rows = Vec::with_capacity(cod.len());
        for s in cod {
            let mut row = vec![Rat::zero(); dom.len()];
            for p in 0..s.len() {
                for q in (p + 1)..s.len() {
                    let w = g.basis_bracket(s[p], s[q]);
                    let rest: Vec<usize> = s
                        .iter()
                        .enumerate()
                        .filter(|(idx, _)| *idx != p && *idx != q)
                        .map(|(_, &v)| v)
                        .collect();
                    let sign_pq = if (p + q) % 2 == 0 { 1i64 } else { -1 };
                    for (m, c) in w.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut tuple = vec![m];
                        tuple.extend(&rest);
                        if let Some((t_idx, sgn)) = locate_subset(dom, &tuple) {
                            let contrib =
                                c * Rat::from_integer((sign_pq * sgn).into());
                            row[t_idx] = &row[t_idx] + &contrib;
                        }
                    }
                }
            }
            rows.push(row);
        }
        if !rows.is_empty() && !dom.is_empty() {
            ranks[k] = Matrix::from_rows(rows).rank();
        }
    }
    // b_k = dim Lambda^k - rank d_k - rank d_{k-1}
    (0..=n)
        .map(|k| {
            let dim_k = subsets[k].len();
            let r_k = if k <= n { ranks.get(k).copied().unwrap_or(0) } else { 0 };
            let r_km1 = if k >= 1 { ranks[k - 1] } else { 0 };
            dim_k - r_k - r_km1
        })
        .collect()
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Finds the sorted form of `tuple` in the lex-ordered subset list and the
/// sign of the sorting permutation; `None` on repeated indices.
fn locate_subset(subsets: &[Vec<usize>], tuple: &[usize]) -> Option<(usize, i64)> {
    let mut sorted: Vec<usize> = tuple.to_vec();
    // parity of the bubble sort
    let mut sign = 1i64;
    for i in 0..sorted.len() {
        for j in 0..sorted.len() - 1 - i {
            if sorted[j] > sorted[j + 1] {
                sorted.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    subsets.iter().position(|s| *s == sorted).map(|i| (i, sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn a2() -> LieAlgebra {
        LieAlgebra::new(
            "A_2",
            vec!["X".into(), "Y".into()],
            vec![(0, 1, vec![(1, rint(1))])],
        )
        .unwrap()
    }

    fn a36() -> LieAlgebra {
        // [e1,e3] = -e2, [e2,e3] = e1
        LieAlgebra::new(
            "A_{3,6}",
            vec!["e1".into(), "e2".into(), "e3".into()],
            vec![(0, 2, vec![(1, rint(-1))]), (1, 2, vec![(0, rint(1))])],
        )
        .unwrap()
    }

    fn heis() -> LieAlgebra {
        LieAlgebra::new(
            "Heis",
            vec!["X1".into(), "X2".into(), "X3".into()],
            vec![(0, 1, vec![(2, rint(1))])],
        )
        .unwrap()
    }

    #[test]
    fn weights_of_abelian_all_zero() {
        let g = LieAlgebra::abelian("R3", 3);
        let ws = adjoint_weights(&g).unwrap();
        assert!(ws.all_real_parts_vanish() && ws.all_imaginary_parts_vanish());
    }

    #[test]
    fn weights_of_a2_single_real_pair() {
        let g = a2();
        let ws = adjoint_weights(&g).unwrap();
        // the nontrivial functional is a(cX + dY) = c on the line spanned by Y
        let nontrivial: Vec<&WeightStep> = ws
            .steps
            .iter()
            .filter(|s| s.a.iter().any(|c| !c.is_zero()))
            .collect();
        assert_eq!(nontrivial.len(), 1);
        assert_eq!(nontrivial[0].a, vec![rint(1), rint(0)]);
        assert!(nontrivial[0].b.iter().all(|c| c.is_zero()));
        assert_eq!(nilradical(&g).unwrap(), Subspace::coordinate(2, &[1]));
        assert!(is_completely_solvable(&g).unwrap());
        assert!(!is_type_r(&g).unwrap());
    }

    #[test]
    fn weights_of_a36_imaginary_pair() {
        let g = a36();
        let ws = adjoint_weights(&g).unwrap();
        let two_dim: Vec<&WeightStep> =
            ws.steps.iter().filter(|s| s.quot_dim == 2).collect();
        assert_eq!(two_dim.len(), 1);
        assert!(two_dim[0].a.iter().all(|c| c.is_zero()));
        assert_eq!(two_dim[0].imag_unit_sq, Some(rint(1)));
        assert_eq!(two_dim[0].b[2].abs(), rint(1));
        assert_eq!(nilradical(&g).unwrap(), Subspace::coordinate(3, &[0, 1]));
        assert!(!is_completely_solvable(&g).unwrap());
        assert!(is_type_r(&g).unwrap());
    }

    #[test]
    fn nilpotent_weights_and_nilradical() {
        let g = heis();
        assert!(nilradical(&g).unwrap().is_full());
        assert!(is_completely_solvable(&g).unwrap());
        assert!(is_type_r(&g).unwrap());
    }

    #[test]
    fn complement_for_a2_and_nilpotent() {
        assert_eq!(
            choose_complement_a(&a2()).unwrap(),
            Subspace::coordinate(2, &[0])
        );
        assert!(choose_complement_a(&heis()).unwrap().is_zero());
    }

    #[test]
    fn shadow_of_completely_solvable_is_identity() {
        let g = a2();
        let res = real_shadow(&g).unwrap();
        assert_eq!(res.shadow.structure(), g.structure());
        assert!(res.phi.iter().all(|m| m.is_zero()));
    }

    #[test]
    fn shadow_of_a36_semidirect_is_abelian() {
        // R x A_{3,6} packaged directly: the 3-dimensional rotation algebra
        // alone; its shadow twists the rotation away.
        let g = a36();
        let res = real_shadow(&g).unwrap();
        assert!(res.shadow.is_abelian());
        assert!(is_type_r(&g).unwrap());
        assert!(res.shadow.is_nilpotent());
    }

    #[test]
    fn semidirect_route_matches_twisted_route_on_a36() {
        let r2 = LieAlgebra::abelian("R2", 2);
        let rot = Matrix::from_rows(vec![vec![rint(0), rint(-1)], vec![rint(1), rint(0)]]);
        let p = SemidirectPresentation {
            alpha: r2.derivation(rot).unwrap(),
            h: r2,
            t_label: "T".into(),
        };
        let g = semidirect_r(&p).unwrap();
        let twisted = real_shadow(&g).unwrap().shadow;
        let direct = real_part_semidirect(&p).unwrap();
        assert_eq!(twisted.structure(), direct.structure());
        assert!(direct.is_abelian());
    }

    #[test]
    fn cone_dimensions_of_small_algebras() {
        assert_eq!(cone_dimension(&heis()).unwrap(), 3);
        assert_eq!(cone_dimension(&a2()).unwrap(), 1);
        assert_eq!(cone_dimension(&a36()).unwrap(), 3);
    }

    #[test]
    fn qi_type_basics() {
        assert_eq!(classify_qi_type(&heis()).unwrap(), QiType::PolyGrowth);
        assert_eq!(classify_qi_type(&a2()).unwrap(), QiType::Heintze);
        assert_eq!(classify_qi_type(&a36()).unwrap(), QiType::PolyGrowth);
    }

    #[test]
    fn growth_degrees() {
        assert_eq!(growth_degree(&LieAlgebra::abelian("R4", 4)).unwrap(), 4);
        assert_eq!(growth_degree(&heis()).unwrap(), 4);
        let h5 = LieAlgebra::new(
            "Heis(5)",
            (1..=5).map(|i| format!("X{i}")).collect(),
            vec![(0, 1, vec![(4, rint(1))]), (2, 3, vec![(4, rint(1))])],
        )
        .unwrap();
        assert_eq!(growth_degree(&h5).unwrap(), 6);
        assert!(growth_degree(&a2()).is_err());
    }

    #[test]
    fn betti_of_abelian_is_binomial() {
        let b = betti_numbers(&LieAlgebra::abelian("R4", 4));
        assert_eq!(b, vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn betti_of_heisenberg() {
        assert_eq!(betti_numbers(&heis()), vec![1, 2, 2, 1]);
    }

    #[test]
    fn betti_b1_is_abelianization() {
        let g = a2();
        let b = betti_numbers(&g);
        assert_eq!(b[1], g.dim - g.derived_subalgebra().dim());
    }

    #[test]
    fn real_spectrum_semidirect_route_changes_nothing() {
        let h = heis();
        let alpha = h
            .derivation(Matrix::diag(&[rint(1), rint(2), rint(3)]))
            .unwrap();
        let p = SemidirectPresentation {
            h: h.clone(),
            alpha,
            t_label: "T".into(),
        };
        let plain = semidirect_r(&p).unwrap();
        let shadowed = real_part_semidirect(&p).unwrap();
        assert_eq!(plain.structure(), shadowed.structure());
    }

    #[test]
    fn complement_of_two_dimensional_nilradical() {
        // Scaling plus rotation on the plane: the nilradical is the plane
        // itself, so any valid complement must be 2-dimensional.
        let g = LieAlgebra::new(
            "A_{4,12}",
            (1..=4).map(|i| format!("e{i}")).collect(),
            vec![
                (0, 2, vec![(0, rint(1))]),
                (1, 2, vec![(1, rint(1))]),
                (0, 3, vec![(1, rint(-1))]),
                (1, 3, vec![(0, rint(1))]),
            ],
        )
        .unwrap();
        assert_eq!(nilradical(&g).unwrap(), Subspace::coordinate(4, &[0, 1]));
        let a = choose_complement_a(&g).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a, Subspace::coordinate(4, &[2, 3]));
    }

    #[test]
    fn weight_real_parts_drive_heintze_test() {
        // A_{4,2}^a with a = 1/2: [e1,e4]=a e1, [e2,e4]=e2, [e3,e4]=e2+e3
        let a = rat(1, 2);
        let g = LieAlgebra::new(
            "A_{4,2}",
            (1..=4).map(|i| format!("e{i}")).collect(),
            vec![
                (0, 3, vec![(0, a)]),
                (1, 3, vec![(1, rint(1))]),
                (2, 3, vec![(1, rint(1)), (2, rint(1))]),
            ],
        )
        .unwrap();
        assert_eq!(classify_qi_type(&g).unwrap(), QiType::Heintze);
    }
}
