//! Canonicalized rational subspaces.
//!
//! A `Subspace` is stored as the reduced row-echelon basis of its spanning
//! set, rows ordered by pivot column. Two subspaces are equal iff their
//! canonical forms are equal, which makes subspace-valued invariants
//! directly comparable.

use crate::matrix::{coords_in_basis, Matrix};
use crate::rat::Rat;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_vectors(
            ambient,
            (0..ambient)
                .map(|i| {
                    let mut v = vec![Rat::zero(); ambient];
                    v[i] = Rat::one();
                    v
                })
                .collect::<Vec<_>>()
                .as_slice(),
        )
    }

    /// Span of coordinate vectors `e_i` for the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vecs: Vec<Vec<Rat>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Rat::zero(); ambient];
                v[i] = Rat::one();
                v
            })
            .collect();
        Subspace::from_vectors(ambient, &vecs)
    }

    pub fn from_vectors(ambient: usize, vecs: &[Vec<Rat>]) -> Self {
        for v in vecs {
            assert_eq!(v.len(), ambient, "vector length != ambient dimension");
        }
        if vecs.is_empty() {
            return Subspace::zero(ambient);
        }
        let m = Matrix::from_rows(vecs.to_vec());
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Residual of `v` after clearing the pivot coordinates with the basis
    /// rows. Zero iff `v` lies in the subspace; in general the residual is
    /// supported on non-pivot columns and serves as canonical quotient
    /// coordinates.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for j in 0..self.ambient {
                    let sub = &row[j] * &f;
                    w[j] = &w[j] - &sub;
                }
            }
        }
        w
    }

    /// Coordinates of `v` in the canonical basis; `None` if outside.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        coords_in_basis(v, &self.rows)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vecs = self.rows.clone();
        vecs.extend(other.rows.clone());
        Subspace::from_vectors(self.ambient, &vecs)
    }

    /// Intersection via the kernel of the stacked coefficient system.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // Solve a*self + b*other = 0: columns are self-basis then other-basis.
        let k1 = self.dim();
        let k2 = other.dim();
        let m = Matrix::from_fn(self.ambient, k1 + k2, |i, j| {
            if j < k1 {
                self.rows[j][i].clone()
            } else {
                other.rows[j - k1][i].clone()
            }
        });
        let vecs: Vec<Vec<Rat>> = m
            .kernel_basis()
            .into_iter()
            .map(|sol| {
                let mut v = vec![Rat::zero(); self.ambient];
                for (j, c) in sol[..k1].iter().enumerate() {
                    if !c.is_zero() {
                        for x in 0..self.ambient {
                            let add = &self.rows[j][x] * c;
                            v[x] = &v[x] + &add;
                        }
                    }
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.ambient, &vecs)
    }

    /// Kernel of a matrix as a subspace of its column space domain.
    pub fn kernel_of(m: &Matrix) -> Subspace {
        Subspace::from_vectors(m.cols, &m.kernel_basis())
    }

    /// Column space of a matrix as a subspace of the row-index space.
    pub fn image_of(m: &Matrix) -> Subspace {
        let cols: Vec<Vec<Rat>> = (0..m.cols).map(|j| m.col(j)).collect();
        Subspace::from_vectors(m.rows, &cols)
    }

    /// Image of this subspace under a square matrix.
    pub fn map_by(&self, m: &Matrix) -> Subspace {
        let vecs: Vec<Vec<Rat>> = self.rows.iter().map(|v| m.apply(v)).collect();
        Subspace::from_vectors(self.ambient, &vecs)
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.contains_subspace(&self.map_by(m))
    }

    /// Ambient coordinate indices not used as pivots; representatives of the
    /// quotient in the pivot-complement convention.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    #[test]
    fn coordinate_subspace_intersection() {
        let a = Subspace::coordinate(3, &[0, 1]);
        let b = Subspace::coordinate(3, &[1, 2]);
        let c = a.intersect(&b);
        assert_eq!(c, Subspace::coordinate(3, &[1]));
        assert_eq!(a.sum(&b), Subspace::full(3));
    }

    #[test]
    fn canonical_equality_ignores_spanning_set() {
        let v1 = vec![vec![rint(1), rint(1)], vec![rint(0), rint(2)]];
        let v2 = vec![vec![rint(3), rint(0)], vec![rint(1), rint(5)]];
        assert_eq!(Subspace::from_vectors(2, &v1), Subspace::from_vectors(2, &v2));
    }

    #[test]
    fn reduce_gives_quotient_coordinates() {
        let s = Subspace::coordinate(3, &[0]);
        let r = s.reduce(&[rint(5), rint(2), rint(3)]);
        assert_eq!(r, vec![rint(0), rint(2), rint(3)]);
        assert!(s.contains(&[rint(7), rint(0), rint(0)]));
    }
}
