//! Lie algebras presented by rational structure constants on a named basis,
//! and the constructions the rest of the crate is built from: brackets,
//! Lie spans, normalizers, central series, quotients, semidirect extensions
//! and associated graded (Carnot) algebras.

use crate::error::LieError;
use crate::matrix::{vec_add, vec_is_zero, vec_scale, vec_sub, Matrix};
use crate::rat::{fmt_rat, Rat};
use crate::subspace::Subspace;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Structure constants: `(i, j) -> [(k, c)]` meaning `[e_i, e_j] = sum c e_k`,
/// stored only for `i < j`, terms sorted by `k`, zero coefficients dropped.
pub type Brackets = BTreeMap<(usize, usize), Vec<(usize, Rat)>>;

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    pub name: String,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    structure: Brackets,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim {})", self.name, self.dim)?;
        for ((i, j), terms) in &self.structure {
            let rhs: Vec<String> = terms
                .iter()
                .map(|(k, c)| {
                    if c.is_one() {
                        self.basis_labels[*k].clone()
                    } else {
                        format!("{}*{}", fmt_rat(c), self.basis_labels[*k])
                    }
                })
                .collect();
            write!(
                f,
                " [{},{}]={}",
                self.basis_labels[*i],
                self.basis_labels[*j],
                rhs.join("+")
            )?;
        }
        Ok(())
    }
}

/// A derivation of a Lie algebra, stored column-as-image: column `c` is the
/// image of `e_c` in basis coordinates. Construction validates Leibniz.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    pub matrix: Matrix,
}

/// A presentation `g = h x|_alpha R`: the extending generator `T` acts on `h`
/// by `alpha`, i.e. `[T, X] = alpha(X)`.
#[derive(Clone, Debug)]
pub struct SemidirectPresentation {
    pub h: LieAlgebra,
    pub alpha: Derivation,
    pub t_label: String,
}

impl LieAlgebra {
    /// Builds and validates. `brackets` lists `(i, j, terms)` with arbitrary
    /// order of `i, j`; antisymmetry is normalized into the `i < j` form.
    pub fn new(
        name: impl Into<String>,
        basis_labels: Vec<String>,
        brackets: Vec<(usize, usize, Vec<(usize, Rat)>)>,
    ) -> Result<Self, LieError> {
        let dim = basis_labels.len();
        let mut structure: Brackets = BTreeMap::new();
        for (i, j, terms) in brackets {
            if i >= dim || j >= dim || terms.iter().any(|(k, _)| *k >= dim) {
                return Err(LieError::DimensionMismatch {
                    context: "bracket index out of range".into(),
                });
            }
            if i == j {
                if terms.iter().any(|(_, c)| !c.is_zero()) {
                    return Err(LieError::Internal("nonzero bracket [x,x]".into()));
                }
                continue;
            }
            let (key, sign) = if i < j { ((i, j), 1) } else { ((j, i), -1) };
            let mut acc: BTreeMap<usize, Rat> = structure
                .remove(&key)
                .unwrap_or_default()
                .into_iter()
                .collect();
            for (k, c) in terms {
                let c = if sign == 1 { c } else { -c };
                *acc.entry(k).or_insert_with(Rat::zero) += c;
            }
            let cleaned: Vec<(usize, Rat)> =
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !cleaned.is_empty() {
                structure.insert(key, cleaned);
            }
        }
        let g = LieAlgebra {
            name: name.into(),
            dim,
            basis_labels,
            structure,
        };
        g.validate()?;
        Ok(g)
    }

    /// Abelian algebra of the given dimension.
    pub fn abelian(name: impl Into<String>, dim: usize) -> Self {
        LieAlgebra {
            name: name.into(),
            dim,
            basis_labels: (1..=dim).map(|i| format!("X{i}")).collect(),
            structure: BTreeMap::new(),
        }
    }

    pub fn structure(&self) -> &Brackets {
        &self.structure
    }

    /// Same structure constants under different name/labels.
    pub fn renamed(&self, name: impl Into<String>) -> LieAlgebra {
        let mut g = self.clone();
        g.name = name.into();
        g
    }

    /// Exact Jacobi validation on all basis triples.
    pub fn validate(&self) -> Result<(), LieError> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let ei = self.basis_vector(i);
                    let ej = self.basis_vector(j);
                    let ek = self.basis_vector(k);
                    let mut defect = self.bracket(&self.bracket(&ei, &ej), &ek);
                    defect = vec_add(&defect, &self.bracket(&self.bracket(&ej, &ek), &ei));
                    defect = vec_add(&defect, &self.bracket(&self.bracket(&ek, &ei), &ej));
                    if !vec_is_zero(&defect) {
                        return Err(LieError::JacobiViolation {
                            i,
                            j,
                            k,
                            defect: format!(
                                "[{}]",
                                defect
                                    .iter()
                                    .map(fmt_rat)
                                    .collect::<Vec<_>>()
                                    .join(", ")
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = Rat::one();
        v
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        if i == j {
            return out;
        }
        let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
        if let Some(terms) = self.structure.get(&key) {
            for (k, c) in terms {
                out[*k] = if flip { -c.clone() } else { c.clone() };
            }
        }
        out
    }

    /// Bilinear antisymmetric extension of the structure constants.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for ((i, j), terms) in &self.structure {
            let coeff = &x[*i] * &y[*j] - &x[*j] * &y[*i];
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in terms {
                out[*k] += &coeff * c;
            }
        }
        out
    }

    /// Matrix of `ad(x): y -> [x, y]`, column-as-image.
    pub fn ad(&self, x: &[Rat]) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            self.bracket(x, &self.basis_vector(j))[i].clone()
        })
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&self.basis_vector(i))
    }

    /// Validates the Leibniz rule for a candidate derivation matrix.
    pub fn derivation(&self, matrix: Matrix) -> Result<Derivation, LieError> {
        if matrix.rows != self.dim || matrix.cols != self.dim {
            return Err(LieError::DimensionMismatch {
                context: "derivation matrix size".into(),
            });
        }
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let lhs = matrix.apply(&self.basis_bracket(i, j));
                let rhs = vec_add(
                    &self.bracket(&matrix.col(i), &self.basis_vector(j)),
                    &self.bracket(&self.basis_vector(i), &matrix.col(j)),
                );
                let defect = vec_sub(&lhs, &rhs);
                if !vec_is_zero(&defect) {
                    return Err(LieError::LeibnizViolation {
                        i,
                        j,
                        defect: format!(
                            "[{}]",
                            defect.iter().map(fmt_rat).collect::<Vec<_>>().join(", ")
                        ),
                    });
                }
            }
        }
        Ok(Derivation { matrix })
    }

    /// Span of all brackets `[S, T]` of two subspaces.
    pub fn bracket_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for u in s.basis() {
            for v in t.basis() {
                let w = self.bracket(u, v);
                if !vec_is_zero(&w) {
                    vecs.push(w);
                }
            }
        }
        Subspace::from_vectors(self.dim, &vecs)
    }

    /// Smallest subalgebra containing `s`: closes under brackets until the
    /// dimension stabilizes.
    pub fn lie_span(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let nxt = cur.sum(&self.bracket_span(&cur, &cur));
            if nxt.dim() == cur.dim() {
                return cur;
            }
            cur = nxt;
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains_subspace(&self.bracket_span(s, s))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.contains_subspace(&self.bracket_span(&Subspace::full(self.dim), s))
    }

    /// Normalizer `{x : [x, h] in h}` of a subalgebra, via a linear system.
    pub fn normalizer(&self, h: &Subspace) -> Result<Subspace, LieError> {
        if !self.is_subalgebra(h) {
            return Err(LieError::NotASubalgebra);
        }
        // Rows: for each h-basis vector v and each quotient coordinate, the
        // functional x -> (residue of [x, v]) must vanish.
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        let comp = h.complement_indices();
        for v in h.basis() {
            // column i: residual coords of [e_i, v]
            let mut per_basis: Vec<Vec<Rat>> = Vec::with_capacity(self.dim);
            for i in 0..self.dim {
                let w = self.bracket(&self.basis_vector(i), v);
                per_basis.push(h.reduce(&w));
            }
            for &c in &comp {
                let row: Vec<Rat> = (0..self.dim).map(|i| per_basis[i][c].clone()).collect();
                if !vec_is_zero(&row) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Ok(Subspace::full(self.dim));
        }
        let m = Matrix::from_rows(rows);
        Ok(Subspace::kernel_of(&m))
    }

    /// Iterated normalizers starting from `h` itself, until stabilization;
    /// the stabilized term appears once.
    pub fn normalizer_tower(&self, h: &Subspace) -> Result<Vec<Subspace>, LieError> {
        let mut tower = vec![h.clone()];
        loop {
            let cur = tower.last().unwrap();
            let nxt = self.normalizer(cur)?;
            if nxt.dim() == cur.dim() {
                return Ok(tower);
            }
            tower.push(nxt);
        }
    }

    /// Elements commuting with every vector of `s`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for v in s.basis() {
            for c in 0..self.dim {
                let row: Vec<Rat> = (0..self.dim)
                    .map(|i| self.bracket(&self.basis_vector(i), v)[c].clone())
                    .collect();
                if !vec_is_zero(&row) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Subspace::full(self.dim);
        }
        Subspace::kernel_of(&Matrix::from_rows(rows))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim))
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_span(&full, &full)
    }

    /// `g^1 = g, g^{n+1} = [g, g^n]`, listed until stabilization (the
    /// stabilized term appears once; for nilpotent algebras it is `0`).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let cur = series.last().unwrap();
            let nxt = self.bracket_span(&Subspace::full(self.dim), cur);
            if nxt.dim() == cur.dim() {
                return series;
            }
            series.push(nxt);
        }
    }

    /// `g^(0) = g, g^(n+1) = [g^(n), g^(n)]`, until stabilization.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let cur = series.last().unwrap();
            let nxt = self.bracket_span(cur, cur);
            if nxt.dim() == cur.dim() {
                return series;
            }
            series.push(nxt);
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.is_empty()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    /// Nilpotency step: smallest `s` with `g^{s+1} = 0`.
    pub fn nilpotency_step(&self) -> Result<usize, LieError> {
        let lcs = self.lower_central_series();
        if !lcs.last().unwrap().is_zero() {
            return Err(LieError::NotNilpotent);
        }
        Ok(lcs.len() - 1)
    }

    pub fn lcs_dims(&self) -> Vec<usize> {
        self.lower_central_series().iter().map(|s| s.dim()).collect()
    }

    pub fn derived_dims(&self) -> Vec<usize> {
        self.derived_series().iter().map(|s| s.dim()).collect()
    }

    /// Quotient by an ideal on the pivot-complement basis, with the brackets
    /// (and optionally a derivation) induced.
    pub fn quotient(
        &self,
        ideal: &Subspace,
        derivation: Option<&Derivation>,
    ) -> Result<(LieAlgebra, Option<Derivation>), LieError> {
        if !self.is_ideal(ideal) {
            return Err(LieError::NotAnIdeal);
        }
        if let Some(d) = derivation {
            if !ideal.is_invariant_under(&d.matrix) {
                return Err(LieError::NotInvariant);
            }
        }
        let comp = ideal.complement_indices();
        let qdim = comp.len();
        let labels: Vec<String> = comp
            .iter()
            .map(|&c| self.basis_labels[c].clone())
            .collect();
        let project = |v: &[Rat]| -> Vec<Rat> {
            let r = ideal.reduce(v);
            comp.iter().map(|&c| r[c].clone()).collect()
        };
        let mut brackets = Vec::new();
        for a in 0..qdim {
            for b in (a + 1)..qdim {
                let w = self.basis_bracket(comp[a], comp[b]);
                let coords = project(&w);
                let terms: Vec<(usize, Rat)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !terms.is_empty() {
                    brackets.push((a, b, terms));
                }
            }
        }
        let q = LieAlgebra::new(format!("{}/ideal", self.name), labels, brackets)?;
        let dq = match derivation {
            Some(d) => {
                let m = Matrix::from_fn(qdim, qdim, |i, j| {
                    let img = d.matrix.col(comp[j]);
                    project(&img)[i].clone()
                });
                Some(q.derivation(m)?)
            }
            None => None,
        };
        Ok((q, dq))
    }

    pub fn direct_sum(&self, other: &LieAlgebra, name: impl Into<String>) -> LieAlgebra {
        let dim = self.dim + other.dim;
        let mut labels = Vec::with_capacity(dim);
        for l in &self.basis_labels {
            labels.push(format!("{}.{}", self.name, l));
        }
        for l in &other.basis_labels {
            labels.push(format!("{}.{}", other.name, l));
        }
        let mut structure = self.structure.clone();
        for ((i, j), terms) in &other.structure {
            structure.insert(
                (i + self.dim, j + self.dim),
                terms
                    .iter()
                    .map(|(k, c)| (k + self.dim, c.clone()))
                    .collect(),
            );
        }
        LieAlgebra {
            name: name.into(),
            dim,
            basis_labels: labels,
            structure,
        }
    }

    /// Restriction to a subalgebra: the algebra on the canonical basis of
    /// `h`, plus the coordinate change. Errors if `h` is not a subalgebra.
    pub fn restrict_to(&self, h: &Subspace) -> Result<LieAlgebra, LieError> {
        if !self.is_subalgebra(h) {
            return Err(LieError::NotASubalgebra);
        }
        let k = h.dim();
        let basis = h.basis();
        let labels: Vec<String> = (0..k)
            .map(|i| format!("{}|{}", self.name, self.basis_labels[h.pivots()[i]]))
            .collect();
        let mut brackets = Vec::new();
        for a in 0..k {
            for b in (a + 1)..k {
                let w = self.bracket(&basis[a], &basis[b]);
                let coords = h
                    .coords(&w)
                    .ok_or_else(|| LieError::Internal("bracket left the subalgebra".into()))?;
                let terms: Vec<(usize, Rat)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !terms.is_empty() {
                    brackets.push((a, b, terms));
                }
            }
        }
        LieAlgebra::new(format!("{}|sub", self.name), labels, brackets)
    }
}

/// `h x|_alpha R`: appends the generator `T` with `[T, X] = alpha(X)`.
pub fn semidirect_r(p: &SemidirectPresentation) -> Result<LieAlgebra, LieError> {
    let h = &p.h;
    let n = h.dim;
    let mut labels = h.basis_labels.clone();
    labels.push(p.t_label.clone());
    let mut brackets: Vec<(usize, usize, Vec<(usize, Rat)>)> = Vec::new();
    for ((i, j), terms) in h.structure() {
        brackets.push((*i, *j, terms.clone()));
    }
    for i in 0..n {
        // stored as [e_i, T] = -alpha(e_i)
        let img = p.alpha.matrix.col(i);
        let terms: Vec<(usize, Rat)> = img
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, -c))
            .collect();
        if !terms.is_empty() {
            brackets.push((i, n, terms));
        }
    }
    LieAlgebra::new(format!("{} x| R", h.name), labels, brackets)
}

/// The associated graded algebra of a nilpotent algebra along its lower
/// central series, on deterministic pivot-complement level bases.
pub fn associated_carnot(g: &LieAlgebra) -> Result<LieAlgebra, LieError> {
    if !g.is_nilpotent() {
        return Err(LieError::NotNilpotent);
    }
    let mut series = g.lower_central_series();
    series.push(Subspace::zero(g.dim)); // ensure a trailing zero term
    // Level representatives: rows of g^k whose pivot is not a pivot of
    // g^{k+1}; pivot sets nest because the series is decreasing.
    let mut level_of: Vec<usize> = Vec::new(); // per new-basis index
    let mut reps: Vec<Vec<Rat>> = Vec::new();
    let mut labels = Vec::new();
    for k in 0..series.len() - 1 {
        let cur = &series[k];
        let nxt = &series[k + 1];
        for (row, &p) in cur.basis().iter().zip(cur.pivots()) {
            if !nxt.pivots().contains(&p) {
                reps.push(row.clone());
                level_of.push(k + 1);
                labels.push(format!("Y{}", reps.len()));
            }
        }
    }
    if reps.len() != g.dim {
        return Err(LieError::Internal("graded basis has wrong size".into()));
    }
    let coords_at_level = |v: &[Rat], level: usize| -> Result<Vec<(usize, Rat)>, LieError> {
        // Express v in (level reps of `level`) + g^{level+1}; drop the tail.
        if level >= series.len() {
            return Ok(Vec::new());
        }
        let mut basis: Vec<Vec<Rat>> = Vec::new();
        let mut idx: Vec<usize> = Vec::new();
        for (i, rep) in reps.iter().enumerate() {
            if level_of[i] == level {
                basis.push(rep.clone());
                idx.push(i);
            }
        }
        let tail = &series[level]; // g^{level+1} stored at index `level`
        let offset = basis.len();
        for row in tail.basis() {
            basis.push(row.clone());
        }
        let coords = crate::matrix::coords_in_basis(v, &basis)
            .ok_or_else(|| LieError::Internal("graded bracket outside expected level".into()))?;
        Ok(coords[..offset]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(pos, c)| (idx[pos], c.clone()))
            .collect())
    };
    let mut brackets = Vec::new();
    for a in 0..reps.len() {
        for b in (a + 1)..reps.len() {
            let target = level_of[a] + level_of[b];
            if target >= series.len() {
                continue;
            }
            let w = g.bracket(&reps[a], &reps[b]);
            if vec_is_zero(&w) {
                continue;
            }
            if !series[target - 1].contains(&w) {
                return Err(LieError::Internal(
                    "bracket not in the expected filtration level".into(),
                ));
            }
            let terms = coords_at_level(&w, target)?;
            if !terms.is_empty() {
                brackets.push((a, b, terms));
            }
        }
    }
    let out = LieAlgebra::new(format!("gr({})", g.name), labels, brackets)?;
    if !out.is_nilpotent() || out.lcs_dims() != g.lcs_dims() {
        return Err(LieError::Internal(
            "graded algebra does not match the filtration".into(),
        ));
    }
    Ok(out)
}

/// Checks that `m` intertwines the brackets: `m([x,y]_src) = [m x, m y]_dst`
/// on all basis pairs, and is invertible.
pub fn is_isomorphism(src: &LieAlgebra, dst: &LieAlgebra, m: &Matrix) -> bool {
    if src.dim != dst.dim || m.rows != src.dim || m.cols != src.dim {
        return false;
    }
    if m.inverse().is_err() {
        return false;
    }
    for i in 0..src.dim {
        for j in (i + 1)..src.dim {
            let lhs = m.apply(&src.basis_bracket(i, j));
            let rhs = dst.bracket(&m.col(i), &m.col(j));
            if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
                return false;
            }
        }
    }
    true
}

/// Scales a vector of rationals into the first nonzero entry = 1 form.
pub fn normalize_ray(v: &[Rat]) -> Vec<Rat> {
    match v.iter().find(|c| !c.is_zero()) {
        Some(first) => vec_scale(v, &(Rat::one() / first.clone())),
        None => v.to_vec(),
    }
}
