//! Symmetric bilinear forms on a Lie algebra.
//!
//! A quadratic Lie algebra carries a symmetric, invariant, non-degenerate
//! form ω; invariance means `ω([a,b],c) = ω(a,[b,c])`. The form mediates
//! between operators and two-tensors (see [`crate::tensor`]) and defines
//! the adjoint `R*` of an operator by `ω(R(a),b) = ω(a,R*(b))`.

use crate::lie::{BracketTable, LieAlgebra};
use crate::matrix::Matrix;
use crate::operator::LinearOperator;
use crate::scalar::Scalar;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix is not square")]
    NotSquare,
    #[error("form is degenerate, so the requested construction is undefined")]
    Degenerate,
    #[error("dimension mismatch between form and algebra")]
    DimensionMismatch,
}

/// A symmetric bilinear form, stored by its gram matrix
/// `G[i][j] = ω(e_i, e_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self, FormError> {
        if !gram.is_square() {
            return Err(FormError::NotSquare);
        }
        if gram != gram.transpose() {
            return Err(FormError::NotSymmetric);
        }
        Ok(BilinearForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_col(y);
        assert_eq!(x.len(), gy.len(), "argument length mismatch");
        let mut acc = Scalar::zero();
        for (a, b) in x.iter().zip(&gy) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    /// `ω([a,b],c) = ω(a,[b,c])` on all basis triples, hence everywhere.
    pub fn is_invariant(&self, l: &LieAlgebra) -> bool {
        assert_eq!(self.dim(), l.dim(), "form and algebra dimensions differ");
        let n = l.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.eval(&l.bracket_basis(i, j), &l.basis_vector(k));
                    let rhs = self.eval(&l.basis_vector(i), &l.bracket_basis(j, k));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    pub fn scale(&self, k: &Scalar) -> BilinearForm {
        BilinearForm { gram: self.gram.scale(k) }
    }

    /// Orthogonal direct sum: block-diagonal gram matrix.
    pub fn direct_sum(&self, other: &BilinearForm) -> BilinearForm {
        let n = self.dim();
        let m = other.dim();
        let gram = Matrix::from_fn(n + m, n + m, |r, c| {
            if r < n && c < n {
                self.gram.at(r, c).clone()
            } else if r >= n && c >= n {
                other.gram.at(r - n, c - n).clone()
            } else {
                Scalar::zero()
            }
        });
        BilinearForm { gram }
    }
}

/// The Killing form `κ(x, y) = tr(ad x ∘ ad y)`.
pub fn killing_form(l: &LieAlgebra) -> BilinearForm {
    let n = l.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| l.ad_basis(i)).collect();
    let gram = Matrix::from_fn(n, n, |i, j| (&ads[i] * &ads[j]).trace());
    BilinearForm { gram }
}

/// The adjoint of `R` with respect to a non-degenerate form:
/// `R* = G^{-1} Rᵀ G`, the unique operator with `ω(R(a),b) = ω(a,R*(b))`.
pub fn adjoint(form: &BilinearForm, r: &LinearOperator) -> Result<LinearOperator, FormError> {
    if form.dim() != r.dim() {
        return Err(FormError::DimensionMismatch);
    }
    let inv = form.gram.inverse().ok_or(FormError::Degenerate)?;
    let m = &(&inv * &r.matrix().transpose()) * &form.gram;
    Ok(LinearOperator::from_matrix(m))
}

/// Extends `(L, χ)` to the dual-numbers algebra `L ⊗ F[t]/(t²)`.
///
/// The basis is `e_1, ..., e_n, e_1 t, ..., e_n t` with brackets
/// `[a, b·t] = [a,b]·t` and `[a·t, b·t] = 0`, and the form is
/// `ω(a⊗f, b⊗g) = χ(a,b) · π(fg)` where `π(f₀ + f₁ t) = f₀ + f₁`.
/// Its gram matrix is `[[X, X], [X, 0]]`, non-degenerate whenever `X` is.
pub fn dual_numbers_extension(
    l: &LieAlgebra,
    chi: &BilinearForm,
) -> Result<(LieAlgebra, BilinearForm), FormError> {
    if chi.dim() != l.dim() {
        return Err(FormError::DimensionMismatch);
    }
    let n = l.dim();
    let mut labels: Vec<String> = l.labels().to_vec();
    labels.extend(l.labels().iter().map(|s| format!("{s}t")));
    let mut table = BracketTable::new(2 * n);
    for i in 0..n {
        for j in 0..n {
            if i < j {
                let base = l.bracket_basis(i, j);
                let mut col = base.clone();
                col.extend(vec![Scalar::zero(); n]);
                table.set_pair(i, j, col);
            }
            if i != j {
                // [e_i, e_j t] = [e_i, e_j] t, including i > j
                let mut col = vec![Scalar::zero(); n];
                col.extend(l.bracket_basis(i, j));
                table.set_pair(i, n + j, col);
            }
        }
    }
    let extended = LieAlgebra::from_table(labels, &table)
        .expect("dual-numbers extension of a valid algebra is valid");
    let x = chi.gram();
    let gram = Matrix::from_fn(2 * n, 2 * n, |r, c| {
        if r >= n && c >= n {
            Scalar::zero()
        } else {
            x.at(r % n, c % n).clone()
        }
    });
    Ok((extended, BilinearForm { gram }))
}

/// A basis (possibly empty) of the space of invariant symmetric bilinear
/// forms on `l`, found by solving the invariance equations for the
/// `n(n+1)/2` independent gram entries. The basis is canonical because it
/// comes from a reduced echelon kernel.
pub fn invariant_forms_basis(l: &LieAlgebra) -> Vec<BilinearForm> {
    let n = l.dim();
    // Unknowns: g_{pq} for p <= q, in lexicographic order.
    let mut index = vec![vec![0usize; n]; n];
    let mut count = 0;
    for p in 0..n {
        for q in p..n {
            index[p][q] = count;
            index[q][p] = count;
            count += 1;
        }
    }
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // ω([e_i,e_j], e_k) - ω(e_i, [e_j,e_k]) = 0
                let mut row = vec![Scalar::zero(); count];
                for (p, c) in l.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        row[index[p][k]] = &row[index[p][k]] + c;
                    }
                }
                for (p, c) in l.bracket_basis(j, k).iter().enumerate() {
                    if !c.is_zero() {
                        row[index[i][p]] = &row[index[i][p]] - c;
                    }
                }
                rows.push(row);
            }
        }
    }
    let constraints = if rows.is_empty() {
        Matrix::zeros(0, count)
    } else {
        Matrix::from_rows(rows)
    };
    crate::subspace::kernel(&constraints)
        .basis_rows()
        .into_iter()
        .map(|sol| {
            let gram = Matrix::from_fn(n, n, |p, q| sol[index[p][q]].clone());
            BilinearForm { gram }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn sl2() -> LieAlgebra {
        LieAlgebra::from_sparse_brackets(
            3,
            vec!["e".into(), "h".into(), "f".into()],
            &[
                (0, 1, vec![(0, int(-2))]),
                (0, 2, vec![(1, int(1))]),
                (1, 2, vec![(2, int(-2))]),
            ],
        )
        .unwrap()
    }

    fn v(entries: &[i64]) -> Vec<Scalar> {
        entries.iter().map(|&x| int(x)).collect()
    }

    /// Independent Killing form: expand [x, [y, e_k]] over the basis and
    /// read off the e_k coefficient, summing over k.
    fn killing_by_expansion(l: &LieAlgebra, i: usize, j: usize) -> Scalar {
        let mut acc = Scalar::zero();
        for k in 0..l.dim() {
            let inner = l.bracket_basis(j, k);
            let outer = l.bracket(&l.basis_vector(i), &inner);
            acc += outer[k].clone();
        }
        acc
    }

    #[test]
    fn killing_form_of_sl2() {
        let l = sl2();
        let kappa = killing_form(&l);
        let expected = Matrix::from_rows(vec![v(&[0, 0, 4]), v(&[0, 8, 0]), v(&[4, 0, 0])]);
        assert_eq!(kappa.gram(), &expected);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(kappa.gram().at(i, j), &killing_by_expansion(&l, i, j));
            }
        }
        assert!(kappa.is_invariant(&l));
        assert!(kappa.is_nondegenerate());
    }

    #[test]
    fn killing_form_of_abelian_is_zero() {
        let kappa = killing_form(&LieAlgebra::abelian(3));
        assert!(kappa.gram().is_zero());
        assert!(!kappa.is_nondegenerate());
    }

    #[test]
    fn non_invariant_form_is_detected() {
        let l = sl2();
        let id = BilinearForm::new(Matrix::identity(3)).unwrap();
        assert!(!id.is_invariant(&l));
    }

    #[test]
    fn adjoint_of_sl2_operator() {
        let l = sl2();
        let kappa = killing_form(&l);
        // R: e -> 4e, h -> 2h, f -> 0.
        let r = LinearOperator::from_matrix(Matrix::from_cols(vec![
            v(&[4, 0, 0]),
            v(&[0, 2, 0]),
            v(&[0, 0, 0]),
        ]));
        let rstar = adjoint(&kappa, &r).unwrap();
        let expected = LinearOperator::from_matrix(Matrix::from_cols(vec![
            v(&[0, 0, 0]),
            v(&[0, 2, 0]),
            v(&[0, 0, 4]),
        ]));
        assert_eq!(rstar, expected);
        // Defining property, on all basis pairs.
        for i in 0..3 {
            for j in 0..3 {
                let a = l.basis_vector(i);
                let b = l.basis_vector(j);
                assert_eq!(kappa.eval(&r.apply(&a), &b), kappa.eval(&a, &rstar.apply(&b)));
            }
        }
    }

    #[test]
    fn adjoint_needs_nondegeneracy() {
        let zero_form = BilinearForm::new(Matrix::zeros(2, 2)).unwrap();
        let r = LinearOperator::identity(2);
        assert_eq!(adjoint(&zero_form, &r).err(), Some(FormError::Degenerate));
    }

    #[test]
    fn dual_numbers_extension_of_sl2() {
        let l = sl2();
        let kappa = killing_form(&l);
        let (ext, omega) = dual_numbers_extension(&l, &kappa).unwrap();
        assert_eq!(ext.dim(), 6);
        assert_eq!(ext.labels(), &["e", "h", "f", "et", "ht", "ft"]);
        // [h, e t] = 2 e t
        assert_eq!(ext.bracket_basis(1, 3), v(&[0, 0, 0, 2, 0, 0]));
        // [e t, f t] = 0
        assert_eq!(ext.bracket_basis(3, 5), v(&[0, 0, 0, 0, 0, 0]));
        // ω(h t, h) = κ(h,h) = 8, ω(h t, h t) = 0
        assert_eq!(omega.eval(&ext.basis_vector(4), &ext.basis_vector(1)), int(8));
        assert_eq!(omega.eval(&ext.basis_vector(4), &ext.basis_vector(4)), int(0));
        assert!(omega.is_invariant(&ext));
        assert!(omega.is_nondegenerate());
    }

    #[test]
    fn dual_numbers_extension_keeps_degeneracy_of_input() {
        let l = LieAlgebra::abelian(1);
        let chi = BilinearForm::new(Matrix::zeros(1, 1)).unwrap();
        let (_, omega) = dual_numbers_extension(&l, &chi).unwrap();
        assert!(!omega.is_nondegenerate());
    }

    #[test]
    fn invariant_forms_of_sl2_are_killing_multiples() {
        let l = sl2();
        let basis = invariant_forms_basis(&l);
        assert_eq!(basis.len(), 1);
        let kappa = killing_form(&l);
        // Proportional to the Killing form: cross-multiply entries.
        let g = basis[0].gram();
        let k = kappa.gram();
        let c = k.at(0, 2) / g.at(0, 2);
        assert_eq!(g.scale(&c), *k);
        assert!(basis[0].is_invariant(&l));
    }

    #[test]
    fn invariant_forms_of_abelian_fill_symmetric_space() {
        assert_eq!(invariant_forms_basis(&LieAlgebra::abelian(3)).len(), 6);
    }

    #[test]
    fn invariant_forms_of_sum_are_two_dimensional() {
        let l = sl2().direct_sum(&sl2());
        let basis = invariant_forms_basis(&l);
        assert_eq!(basis.len(), 2);
        for form in &basis {
            assert!(form.is_invariant(&l));
        }
    }

    #[test]
    fn form_scaling_and_sums() {
        let kappa = killing_form(&sl2());
        let quarter = kappa.scale(&rat(1, 4));
        assert_eq!(quarter.eval(&v(&[0, 1, 0]), &v(&[0, 1, 0])), int(2));
        let sum = kappa.direct_sum(&BilinearForm::new(Matrix::identity(1)).unwrap());
        assert_eq!(sum.dim(), 4);
        assert!(sum.is_nondegenerate());
    }
}
