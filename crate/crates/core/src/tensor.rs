//! Tensors over a Lie algebra and the classical Yang-Baxter element.
//!
//! A two-tensor `r = Σ r_{pq} e_p ⊗ e_q` is stored by its coefficient
//! matrix. The three-tensor
//!
//! ```text
//! C(r) = [r₁₂, r₁₃] - [r₂₃, r₁₂] + [r₁₃, r₂₃]
//!      = Σ_{i,j} [a_i,a_j]⊗b_i⊗b_j - a_i⊗[a_j,b_i]⊗b_j + a_i⊗a_j⊗[b_i,b_j]
//! ```
//!
//! (for `r = Σ a_i ⊗ b_i`) vanishes exactly when `r` solves the classical
//! Yang-Baxter equation. A non-degenerate form ω turns a two-tensor into
//! the operator `R(a) = Σ ω(b_i, a) a_i` and back; in matrix terms
//! `R = coeffs · G` and `coeffs = R · G⁻¹`.

use crate::form::{BilinearForm, FormError};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::operator::LinearOperator;
use crate::scalar::Scalar;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor2 {
    coeffs: Matrix, // coeffs[p][q] is the coefficient of e_p ⊗ e_q
}

impl Tensor2 {
    pub fn zero(dim: usize) -> Self {
        Tensor2 { coeffs: Matrix::zeros(dim, dim) }
    }

    pub fn from_matrix(coeffs: Matrix) -> Self {
        assert!(coeffs.is_square(), "tensor coefficient matrix must be square");
        Tensor2 { coeffs }
    }

    /// Accumulates sparse terms `coeff · e_i ⊗ e_j`.
    pub fn from_terms(dim: usize, terms: &[(usize, usize, Scalar)]) -> Self {
        let mut coeffs = Matrix::zeros(dim, dim);
        for (i, j, c) in terms {
            assert!(*i < dim && *j < dim, "tensor index out of range");
            let v = coeffs.at(*i, *j) + c;
            coeffs.set(*i, *j, v);
        }
        Tensor2 { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Scalar {
        self.coeffs.at(i, j)
    }

    /// Nonzero terms `(i, j, coeff)` in row-major order.
    pub fn terms(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if !self.coeff(i, j).is_zero() {
                    out.push((i, j, self.coeff(i, j).clone()));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        Tensor2 { coeffs: &self.coeffs + &other.coeffs }
    }

    pub fn sub(&self, other: &Tensor2) -> Tensor2 {
        Tensor2 { coeffs: &self.coeffs - &other.coeffs }
    }

    pub fn neg(&self) -> Tensor2 {
        Tensor2 { coeffs: -&self.coeffs }
    }

    pub fn scale(&self, k: &Scalar) -> Tensor2 {
        Tensor2 { coeffs: self.coeffs.scale(k) }
    }

    /// The flip `τ(Σ a_i ⊗ b_i) = Σ b_i ⊗ a_i`, i.e. the transpose.
    pub fn tau(&self) -> Tensor2 {
        Tensor2 { coeffs: self.coeffs.transpose() }
    }

    /// `r + τ(r)`.
    pub fn symmetric_part(&self) -> Tensor2 {
        self.add(&self.tau())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Embeds two tensors on `L` and `M` into `(L ⊕ M)⊗(L ⊕ M)`; cross
    /// blocks stay zero.
    pub fn direct_sum(&self, other: &Tensor2) -> Tensor2 {
        let (n, m) = (self.dim(), other.dim());
        Tensor2::from_matrix(Matrix::from_fn(n + m, n + m, |i, j| {
            if i < n && j < n {
                self.coeff(i, j).clone()
            } else if i >= n && j >= n {
                other.coeff(i - n, j - n).clone()
            } else {
                Scalar::zero()
            }
        }))
    }

    pub fn is_skew(&self) -> bool {
        self.symmetric_part().is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dim: usize,
    entries: Vec<Scalar>, // index p*dim²+ q*dim + s for e_p ⊗ e_q ⊗ e_s
}

impl Tensor3 {
    pub fn zero(dim: usize) -> Self {
        Tensor3 { dim, entries: vec![Scalar::zero(); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, p: usize, q: usize, s: usize) -> &Scalar {
        assert!(p < self.dim && q < self.dim && s < self.dim, "tensor index out of range");
        &self.entries[(p * self.dim + q) * self.dim + s]
    }

    fn coeff_mut(&mut self, p: usize, q: usize, s: usize) -> &mut Scalar {
        &mut self.entries[(p * self.dim + q) * self.dim + s]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Nonzero terms `(p, q, s, coeff)` in lexicographic order.
    pub fn terms(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for p in 0..self.dim {
            for q in 0..self.dim {
                for s in 0..self.dim {
                    if !self.coeff(p, q, s).is_zero() {
                        out.push((p, q, s, self.coeff(p, q, s).clone()));
                    }
                }
            }
        }
        out
    }
}

/// The diagonal adjoint action of `y` on a two-tensor:
/// `y · t = Σ [x_i, y] ⊗ z_i + x_i ⊗ [z_i, y]`.
///
/// With `M` the matrix of `x -> [x, y]` this is `M·T + T·Mᵀ`.
pub fn ad_action2(l: &LieAlgebra, t: &Tensor2, y: &[Scalar]) -> Tensor2 {
    assert_eq!(t.dim(), l.dim(), "tensor and algebra dimensions differ");
    let m = l.ad(y).scale(&-Scalar::from_integer(1.into())); // x -> [x, y] = -ad(y)(x)
    let coeffs = &(&m * &t.coeffs) + &(&t.coeffs * &m.transpose());
    Tensor2 { coeffs }
}

/// The diagonal adjoint action of `y` on a three-tensor, one bracket per
/// slot.
pub fn ad_action3(l: &LieAlgebra, t: &Tensor3, y: &[Scalar]) -> Tensor3 {
    assert_eq!(t.dim(), l.dim(), "tensor and algebra dimensions differ");
    let n = l.dim();
    let m = l.ad(y).scale(&-Scalar::from_integer(1.into()));
    let mut out = Tensor3::zero(n);
    for p in 0..n {
        for q in 0..n {
            for s in 0..n {
                let c = t.coeff(p, q, s);
                if c.is_zero() {
                    continue;
                }
                for u in 0..n {
                    if !m.at(u, p).is_zero() {
                        *out.coeff_mut(u, q, s) += &(m.at(u, p) * c);
                    }
                    if !m.at(u, q).is_zero() {
                        *out.coeff_mut(p, u, s) += &(m.at(u, q) * c);
                    }
                    if !m.at(u, s).is_zero() {
                        *out.coeff_mut(p, q, u) += &(m.at(u, s) * c);
                    }
                }
            }
        }
    }
    out
}

/// Whether the diagonal adjoint action of every basis element kills `t`.
pub fn is_ad_invariant2(l: &LieAlgebra, t: &Tensor2) -> bool {
    (0..l.dim()).all(|j| ad_action2(l, t, &l.basis_vector(j)).is_zero())
}

pub fn is_ad_invariant3(l: &LieAlgebra, t: &Tensor3) -> bool {
    (0..l.dim()).all(|j| ad_action3(l, t, &l.basis_vector(j)).is_zero())
}

/// The cocommutator `δ_r(a) = a · r` induced by a two-tensor.
pub fn cocommutator(l: &LieAlgebra, r: &Tensor2, a: &[Scalar]) -> Tensor2 {
    ad_action2(l, r, a)
}

/// The classical Yang-Baxter element `C(r)`; see the module docs.
pub fn cybe_element(l: &LieAlgebra, r: &Tensor2) -> Tensor3 {
    assert_eq!(r.dim(), l.dim(), "tensor and algebra dimensions differ");
    let n = l.dim();
    let c = &r.coeffs;
    let mut out = Tensor3::zero(n);
    // brackets[a][b] = [e_a, e_b]
    let brackets: Vec<Vec<Vec<Scalar>>> =
        (0..n).map(|a| (0..n).map(|b| l.bracket_basis(a, b)).collect()).collect();
    for a in 0..n {
        for b in 0..n {
            let rab = c.at(a, b);
            if rab.is_zero() {
                continue;
            }
            for x in 0..n {
                for y in 0..n {
                    let rxy = c.at(x, y);
                    if rxy.is_zero() {
                        continue;
                    }
                    let w = rab * rxy;
                    // [r₁₂, r₁₃]: [e_a, e_x] ⊗ e_b ⊗ e_y
                    for (p, coeff) in brackets[a][x].iter().enumerate() {
                        if !coeff.is_zero() {
                            *out.coeff_mut(p, b, y) += &(&w * coeff);
                        }
                    }
                    // -[r₂₃, r₁₂]: -e_a ⊗ [e_x, e_b] ⊗ e_y
                    for (q, coeff) in brackets[x][b].iter().enumerate() {
                        if !coeff.is_zero() {
                            *out.coeff_mut(a, q, y) -= &(&w * coeff);
                        }
                    }
                    // [r₁₃, r₂₃]: e_a ⊗ e_x ⊗ [e_b, e_y]
                    for (s, coeff) in brackets[b][y].iter().enumerate() {
                        if !coeff.is_zero() {
                            *out.coeff_mut(a, x, s) += &(&w * coeff);
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn is_cybe_solution(l: &LieAlgebra, r: &Tensor2) -> bool {
    cybe_element(l, r).is_zero()
}

/// The operator `R(a) = Σ ω(b_i, a) a_i` of a two-tensor `Σ a_i ⊗ b_i`;
/// in matrix form `R = coeffs · G`.
pub fn operator_of(form: &BilinearForm, r: &Tensor2) -> LinearOperator {
    assert_eq!(form.dim(), r.dim(), "form and tensor dimensions differ");
    LinearOperator::from_matrix(&r.coeffs * form.gram())
}

/// The two-tensor of an operator under a non-degenerate form:
/// `coeffs = R · G⁻¹`, the inverse of [`operator_of`].
pub fn tensor_of(form: &BilinearForm, r: &LinearOperator) -> Result<Tensor2, FormError> {
    if form.dim() != r.dim() {
        return Err(FormError::DimensionMismatch);
    }
    let inv = form.gram().inverse().ok_or(FormError::Degenerate)?;
    Ok(Tensor2 { coeffs: r.matrix() * &inv })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::killing_form;
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

    /// The standard solution e ⊗ f + ¼ h ⊗ h on sl2.
    fn standard_r() -> Tensor2 {
        Tensor2::from_terms(3, &[(0, 2, int(1)), (1, 1, rat(1, 4))])
    }

    /// Independent Yang-Baxter element: materialize the tensor as a list of
    /// pure products and sum the defining brackets pair by pair.
    fn cybe_by_pair_list(l: &LieAlgebra, r: &Tensor2) -> Tensor3 {
        let n = l.dim();
        let pairs: Vec<(Vec<Scalar>, Vec<Scalar>)> = r
            .terms()
            .into_iter()
            .map(|(i, j, c)| {
                let mut a = vec![Scalar::zero(); n];
                a[i] = c;
                (a, l.basis_vector(j))
            })
            .collect();
        let mut out = Tensor3::zero(n);
        let add3 =
            |x: &[Scalar], y: &[Scalar], z: &[Scalar], sign: i64, out: &mut Tensor3| {
                for p in 0..n {
                    for q in 0..n {
                        for s in 0..n {
                            let w = &(&x[p] * &y[q]) * &z[s];
                            if !w.is_zero() {
                                *out.coeff_mut(p, q, s) += &(w * int(sign));
                            }
                        }
                    }
                }
            };
        for (a_i, b_i) in &pairs {
            for (a_j, b_j) in &pairs {
                add3(&l.bracket(a_i, a_j), b_i, b_j, 1, &mut out);
                add3(a_i, &l.bracket(a_j, b_i), b_j, -1, &mut out);
                add3(a_i, a_j, &l.bracket(b_i, b_j), 1, &mut out);
            }
        }
        out
    }

    #[test]
    fn tau_is_an_involution() {
        let r = Tensor2::from_terms(2, &[(0, 1, int(3)), (1, 1, int(-2))]);
        assert_eq!(r.tau().tau(), r);
        assert_eq!(r.tau().coeff(1, 0), &int(3));
    }

    #[test]
    fn direct_sum_places_blocks() {
        let a = Tensor2::from_terms(2, &[(0, 1, int(3))]);
        let b = Tensor2::from_terms(1, &[(0, 0, int(-2))]);
        let s = a.direct_sum(&b);
        assert_eq!(s.dim(), 3);
        assert_eq!(s.terms(), vec![(0, 1, int(3)), (2, 2, int(-2))]);
        // Summing CYBE solutions componentwise stays a solution.
        let l = sl2().direct_sum(&sl2());
        let r2 = standard_r().direct_sum(&standard_r().scale(&rat(1, 2)));
        assert!(is_cybe_solution(&l, &r2));
    }

    #[test]
    fn ad_action_on_e_tensor_e() {
        let l = sl2();
        let t = Tensor2::from_terms(3, &[(0, 0, int(1))]);
        let acted = ad_action2(&l, &t, &l.basis_vector(1));
        // [e⊗e, h] = [e,h]⊗e + e⊗[e,h] = -4 e⊗e
        assert_eq!(acted, t.scale(&int(-4)));
    }

    #[test]
    fn casimir_like_tensor_is_invariant() {
        let l = sl2();
        // e⊗f + f⊗e + ½ h⊗h is the symmetric invariant
        let c = Tensor2::from_terms(3, &[(0, 2, int(1)), (2, 0, int(1)), (1, 1, rat(1, 2))]);
        assert!(is_ad_invariant2(&l, &c));
        assert_eq!(c, standard_r().symmetric_part());
        // e⊗e is not invariant
        assert!(!is_ad_invariant2(&l, &Tensor2::from_terms(3, &[(0, 0, int(1))])));
    }

    #[test]
    fn cocommutator_values_on_sl2() {
        let l = sl2();
        let r = standard_r();
        assert!(cocommutator(&l, &r, &l.basis_vector(1)).is_zero());
        // δ_r(e) = ½ (h⊗e - e⊗h)
        let expected =
            Tensor2::from_terms(3, &[(1, 0, rat(1, 2)), (0, 1, rat(-1, 2))]);
        assert_eq!(cocommutator(&l, &r, &l.basis_vector(0)), expected);
    }

    #[test]
    fn standard_r_solves_cybe() {
        let l = sl2();
        let r = standard_r();
        let c = cybe_element(&l, &r);
        assert!(c.is_zero());
        assert_eq!(c, cybe_by_pair_list(&l, &r));
    }

    #[test]
    fn perturbed_r_fails_cybe() {
        let l = sl2();
        let r = standard_r().add(&Tensor2::from_terms(3, &[(0, 0, int(1))]));
        let c = cybe_element(&l, &r);
        assert!(!c.is_zero());
        assert_eq!(c, cybe_by_pair_list(&l, &r));
    }

    #[test]
    fn cybe_element_matches_pair_list_on_asymmetric_tensor() {
        let l = sl2();
        let r = Tensor2::from_terms(
            3,
            &[(0, 1, int(2)), (1, 2, rat(-1, 3)), (2, 2, int(1)), (1, 0, int(5))],
        );
        assert_eq!(cybe_element(&l, &r), cybe_by_pair_list(&l, &r));
    }

    #[test]
    fn operator_of_standard_r() {
        let l = sl2();
        let kappa = killing_form(&l);
        let r = standard_r();
        let op = operator_of(&kappa, &r);
        // R(e) = 4e, R(h) = 2h, R(f) = 0
        assert_eq!(op.apply(&l.basis_vector(0)), vec![int(4), int(0), int(0)]);
        assert_eq!(op.apply(&l.basis_vector(1)), vec![int(0), int(2), int(0)]);
        assert_eq!(op.apply(&l.basis_vector(2)), vec![int(0), int(0), int(0)]);
        // Literal sum oracle: R(a) = Σ ω(b_i, a) a_i over the term list.
        for idx in 0..3 {
            let a = l.basis_vector(idx);
            let mut expected = vec![Scalar::zero(); 3];
            for (i, j, c) in r.terms() {
                let w = kappa.eval(&l.basis_vector(j), &a);
                expected[i] = &expected[i] + &(&w * &c);
            }
            assert_eq!(op.apply(&a), expected);
        }
    }

    #[test]
    fn tensor_of_inverts_operator_of() {
        let l = sl2();
        let kappa = killing_form(&l);
        let r = standard_r();
        let round = tensor_of(&kappa, &operator_of(&kappa, &r)).unwrap();
        assert_eq!(round, r);
    }

    #[test]
    fn tensor_of_needs_nondegeneracy() {
        let deg = BilinearForm::new(Matrix::zeros(2, 2)).unwrap();
        assert_eq!(
            tensor_of(&deg, &LinearOperator::identity(2)).err(),
            Some(FormError::Degenerate)
        );
    }

    #[test]
    fn skew_tensor_detection() {
        let skew = Tensor2::from_terms(2, &[(0, 1, int(1)), (1, 0, int(-1))]);
        assert!(skew.is_skew());
        assert!(!standard_r().is_skew());
    }
}
