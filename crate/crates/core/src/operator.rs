//! Linear operators on a fixed basis.
//!
//! The matrix convention everywhere is "columns are images": column `j` of
//! the matrix is the coordinate vector of the image of the j-th basis
//! element, so operators act on coordinate columns and compose like
//! matrices.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOperator {
    matrix: Matrix,
}

impl LinearOperator {
    pub fn from_matrix(matrix: Matrix) -> Self {
        assert!(matrix.is_square(), "operator matrix must be square");
        LinearOperator { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearOperator { matrix: Matrix::identity(n) }
    }

    pub fn zero(n: usize) -> Self {
        LinearOperator { matrix: Matrix::zeros(n, n) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_col(x)
    }

    /// `self` after `other`: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &LinearOperator) -> LinearOperator {
        LinearOperator::from_matrix(&self.matrix * &other.matrix)
    }

    pub fn add(&self, other: &LinearOperator) -> LinearOperator {
        LinearOperator::from_matrix(&self.matrix + &other.matrix)
    }

    pub fn sub(&self, other: &LinearOperator) -> LinearOperator {
        LinearOperator::from_matrix(&self.matrix - &other.matrix)
    }

    pub fn scale(&self, k: &Scalar) -> LinearOperator {
        LinearOperator::from_matrix(self.matrix.scale(k))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn image(&self) -> Subspace {
        crate::subspace::column_space(&self.matrix)
    }

    pub fn kernel(&self) -> Subspace {
        crate::subspace::kernel(&self.matrix)
    }

    pub fn image_of(&self, s: &Subspace) -> Subspace {
        s.image_under(&self.matrix)
    }

    /// Whether the operator maps `s` into `t`.
    pub fn maps_into(&self, s: &Subspace, t: &Subspace) -> bool {
        s.basis_rows().iter().all(|v| t.contains(&self.apply(v)))
    }

    /// Whether `s` is invariant: `self(s) ⊆ s`.
    pub fn preserves(&self, s: &Subspace) -> bool {
        self.maps_into(s, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn columns_are_images() {
        // e1 -> e2, e2 -> -e1 (a quarter turn), written by columns.
        let rot = LinearOperator::from_matrix(Matrix::from_cols(vec![
            vec![int(0), int(1)],
            vec![int(-1), int(0)],
        ]));
        assert_eq!(rot.apply(&[int(1), int(0)]), vec![int(0), int(1)]);
        assert_eq!(rot.apply(&[int(0), int(1)]), vec![int(-1), int(0)]);
        let back = rot.compose(&rot).compose(&rot).compose(&rot);
        assert_eq!(back, LinearOperator::identity(2));
    }

    #[test]
    fn kernel_image_split_for_projection() {
        let p = LinearOperator::from_matrix(Matrix::from_cols(vec![
            vec![int(1), int(0)],
            vec![int(0), int(0)],
        ]));
        assert_eq!(p.image().dim(), 1);
        assert_eq!(p.kernel().dim(), 1);
        assert!(p.preserves(&p.image()));
    }
}
