//! Subspaces of coordinate space in a canonical representation.
//!
//! A subspace is stored as the reduced row echelon basis of its row span,
//! with zero rows dropped. The representation is unique, so `==` on
//! [`Subspace`] is equality of subspaces.

use crate::matrix::{axpy, vec_is_zero, Matrix};
use crate::scalar::Scalar;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix, // dim() x ambient, reduced row echelon, no zero rows
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    /// The span of the given vectors.
    pub fn from_rows(ambient: usize, rows: &[Vec<Scalar>]) -> Self {
        for row in rows {
            assert_eq!(row.len(), ambient, "vector length differs from ambient dimension");
        }
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let (red, pivots) = Matrix::from_rows(rows.to_vec()).rref();
        let kept: Vec<Vec<Scalar>> = (0..pivots.len()).map(|r| red.row(r)).collect();
        let basis =
            if kept.is_empty() { Matrix::zeros(0, ambient) } else { Matrix::from_rows(kept) };
        Subspace { ambient, basis }
    }

    pub fn line(v: &[Scalar]) -> Self {
        Subspace::from_rows(v.len(), &[v.to_vec()])
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Pivot column of each basis row; strictly increasing by construction.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| (0..self.ambient).find(|&c| !self.basis.at(r, c).is_zero()).unwrap())
            .collect()
    }

    /// Reduces `v` modulo the basis; the result is zero iff `v` lies in the
    /// subspace, and in general is the canonical coset representative
    /// supported on non-pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        let mut w = v.to_vec();
        for (row, pc) in self.pivot_columns().into_iter().enumerate() {
            if !w[pc].is_zero() {
                let k = -w[pc].clone();
                axpy(&mut w, &k, &self.basis.row(row));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        other.basis_rows().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_rows(self.ambient, &rows)
    }

    /// Vectors orthogonal to the subspace under the standard dot product.
    /// Used as a system of linear constraints cutting the subspace out.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let constraints =
            Matrix::vstack(self.annihilator().basis(), other.annihilator().basis());
        kernel(&constraints)
    }

    /// Image of the subspace under a linear map acting on columns.
    pub fn image_under(&self, a: &Matrix) -> Subspace {
        let rows: Vec<Vec<Scalar>> = self.basis_rows().iter().map(|v| a.mul_col(v)).collect();
        Subspace::from_rows(a.rows(), &rows)
    }
}

/// The kernel `{x : A x = 0}` as a canonical subspace.
pub fn kernel(a: &Matrix) -> Subspace {
    Subspace::from_rows(a.cols(), &a.null_space_rows())
}

/// The span of the rows of `A`.
pub fn row_space(a: &Matrix) -> Subspace {
    Subspace::from_rows(a.cols(), &a.row_vectors())
}

/// The span of the columns of `A`.
pub fn column_space(a: &Matrix) -> Subspace {
    row_space(&a.transpose())
}
