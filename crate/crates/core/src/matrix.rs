//! Dense rational matrices and exact Gaussian elimination.

use crate::error::LieError;
use crate::rat::{fmt_rat, Rat};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense `rows x cols` matrix of rationals, row-major.
///
/// For derivations the convention throughout the crate is column-as-image:
/// column `c` holds the image of the `c`-th basis vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| fmt_rat(self.at(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                *m.at_mut(i, j) = f(i, j);
            }
        }
        m
    }

    /// Diagonal square matrix from its diagonal entries.
    pub fn diag(entries: &[Rat]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                Rat::zero()
            }
        })
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<Rat> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Matrix-vector product (vector as coordinates, length = cols).
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() {
                        acc += self.at(i, j) * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        let mut t = Rat::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    pub fn pow(&self, mut k: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn commutes_with(&self, other: &Matrix) -> bool {
        self * other == other * self
    }

    /// Reduced row-echelon form together with the pivot columns.
    ///
    /// Deterministic: scans columns left to right, takes the first nonzero
    /// entry as pivot, normalizes it to 1 and clears the column.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r >= m.rows {
                break;
            }
            let pivot_row = (r..m.rows).find(|&i| !m.at(i, c).is_zero());
            let Some(p) = pivot_row else { continue };
            if p != r {
                for j in 0..m.cols {
                    let a = m.at(p, j).clone();
                    let b = m.at(r, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(r, j) = a;
                }
            }
            let inv = {
                let pv = m.at(r, c).clone();
                Rat::one() / pv
            };
            for j in c..m.cols {
                let v = m.at(r, j).clone();
                *m.at_mut(r, j) = v * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..m.cols {
                        let sub = m.at(r, j) * &f;
                        let v = m.at(i, j).clone();
                        *m.at_mut(i, j) = v - sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, as rows.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[fc] = Rat::one();
            for (row_idx, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(row_idx, fc).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse via Gauss-Jordan on the augmented matrix.
    pub fn inverse(&self) -> Result<Matrix, LieError> {
        if !self.is_square() {
            return Err(LieError::DimensionMismatch {
                context: "inverse of non-square matrix".into(),
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = Rat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(LieError::SingularMatrix);
        }
        Ok(Matrix::from_fn(n, n, |i, j| r.at(i, n + j).clone()))
    }

    /// Characteristic polynomial `det(tI - M)`, monic, via Faddeev-LeVerrier.
    pub fn char_poly(&self) -> Result<crate::poly::Poly, LieError> {
        if !self.is_square() {
            return Err(LieError::DimensionMismatch {
                context: "characteristic polynomial of non-square matrix".into(),
            });
        }
        let n = self.rows;
        // c[n] = 1, c[n-k] produced at step k; M_{k+1} = A (M_k + c_{n-k} I).
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut m = Matrix::identity(n);
        for k in 1..=n {
            m = self * &m;
            let c = -(m.trace() / Rat::from_integer(k.into()));
            for i in 0..n {
                let v = m.at(i, i).clone();
                *m.at_mut(i, i) = v + &c;
            }
            coeffs[n - k] = c;
        }
        Ok(crate::poly::Poly::new(coeffs))
    }

    /// Restriction of a square matrix to an invariant subspace, expressed in
    /// the given basis rows. Errors if the subspace is not invariant.
    pub fn restrict(&self, basis_rows: &[Vec<Rat>]) -> Result<Matrix, LieError> {
        let k = basis_rows.len();
        let mut out = Matrix::zero(k, k);
        for (j, b) in basis_rows.iter().enumerate() {
            let img = self.apply(b);
            let coords = coords_in_basis(&img, basis_rows).ok_or(LieError::NotInvariant)?;
            for i in 0..k {
                *out.at_mut(i, j) = coords[i].clone();
            }
        }
        Ok(out)
    }
}

/// Solves `sum_i x_i basis[i] = v` when `v` lies in the span; `basis` rows
/// need not be canonical.
pub fn coords_in_basis(v: &[Rat], basis: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let n = v.len();
    let k = basis.len();
    if k == 0 {
        return v.iter().all(|x| x.is_zero()).then(Vec::new);
    }
    // Augmented system: columns are basis vectors, last column is v.
    let m = Matrix::from_fn(n, k + 1, |i, j| {
        if j < k {
            basis[j][i].clone()
        } else {
            v[i].clone()
        }
    });
    let (r, pivots) = m.rref();
    if pivots.contains(&k) {
        return None; // inconsistent: v outside the span
    }
    let mut x = vec![Rat::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.at(row, k).clone();
    }
    Some(x)
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

pub fn vec_is_zero(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }
}
