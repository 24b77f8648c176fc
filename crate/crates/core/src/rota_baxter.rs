//! The Rota-Baxter identity on Lie algebras.
//!
//! An operator `R` is Rota-Baxter of weight λ when
//!
//! ```text
//! [R(x), R(y)] = R([R(x), y] + [x, R(y)] + λ [x, y])
//! ```
//!
//! for all `x, y`. The defect (left side minus right side) is bilinear and
//! antisymmetric in `(x, y)` and vanishes on the diagonal, so checking the
//! basis pairs `i < j` decides the identity. For a fixed pair the defect is
//! affine in λ, which makes the set of admissible weights empty, a single
//! rational, or all rationals; [`find_weights`] solves the stacked affine
//! system exactly.

use crate::form::{adjoint, BilinearForm, FormError};
use crate::lie::LieAlgebra;
use crate::matrix::{vec_is_zero, vec_sub, Matrix};
use crate::operator::LinearOperator;
use crate::scalar::Scalar;
use crate::tensor::{operator_of, Tensor2};
use num_traits::Zero;
use std::fmt;

/// Default cap on the number of failing pairs kept in a report.
pub const DEFECT_REPORT_LIMIT: usize = 16;

/// `[R(x),R(y)] - R([R(x),y] + [x,R(y)] + λ[x,y])` for one pair.
pub fn rb_defect(
    l: &LieAlgebra,
    r: &LinearOperator,
    weight: &Scalar,
    x: &[Scalar],
    y: &[Scalar],
) -> Vec<Scalar> {
    assert_eq!(r.dim(), l.dim(), "operator and algebra dimensions differ");
    let rx = r.apply(x);
    let ry = r.apply(y);
    let lhs = l.bracket(&rx, &ry);
    let mut inner = l.bracket(&rx, y);
    let t2 = l.bracket(x, &ry);
    let t3 = l.bracket(x, y);
    for i in 0..inner.len() {
        inner[i] = &inner[i] + &t2[i] + &(weight * &t3[i]);
    }
    vec_sub(&lhs, &r.apply(&inner))
}

/// One failing basis pair with its defect vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectEntry {
    pub i: usize,
    pub j: usize,
    pub defect: Vec<Scalar>,
}

/// Outcome of checking the identity at a fixed weight: empty exactly when
/// the operator is Rota-Baxter of that weight. At most `limit` failing
/// pairs are recorded; `truncated` says whether more existed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectReport {
    pub weight: Scalar,
    pub failures: Vec<DefectEntry>,
    pub truncated: bool,
}

impl DefectReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn is_rota_baxter(l: &LieAlgebra, r: &LinearOperator, weight: &Scalar) -> DefectReport {
    is_rota_baxter_with_limit(l, r, weight, DEFECT_REPORT_LIMIT)
}

pub fn is_rota_baxter_with_limit(
    l: &LieAlgebra,
    r: &LinearOperator,
    weight: &Scalar,
    limit: usize,
) -> DefectReport {
    let n = l.dim();
    let mut report =
        DefectReport { weight: weight.clone(), failures: Vec::new(), truncated: false };
    for i in 0..n {
        for j in i + 1..n {
            let defect =
                rb_defect(l, r, weight, &l.basis_vector(i), &l.basis_vector(j));
            if !vec_is_zero(&defect) {
                if report.failures.len() == limit {
                    report.truncated = true;
                    return report;
                }
                report.failures.push(DefectEntry { i, j, defect });
            }
        }
    }
    report
}

/// The set of weights for which an operator satisfies the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSet {
    /// No weight works.
    Empty,
    /// Exactly the listed weights work.
    Finite(Vec<Scalar>),
    /// Every weight works (the weight term is never tested: `R([x,y]) = 0`
    /// whenever `[x,y] ≠ 0` contributes).
    All,
}

impl WeightSet {
    pub fn contains(&self, weight: &Scalar) -> bool {
        match self {
            WeightSet::Empty => false,
            WeightSet::Finite(ws) => ws.contains(weight),
            WeightSet::All => true,
        }
    }

    /// The unique weight, when the set is a singleton.
    pub fn single(&self) -> Option<&Scalar> {
        match self {
            WeightSet::Finite(ws) if ws.len() == 1 => Some(&ws[0]),
            _ => None,
        }
    }
}

impl fmt::Display for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSet::Empty => write!(f, "none"),
            WeightSet::Finite(ws) => {
                let rendered: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
                write!(f, "{}", rendered.join(", "))
            }
            WeightSet::All => write!(f, "all"),
        }
    }
}

/// Solves for every weight λ making `R` Rota-Baxter.
///
/// Per basis pair the defect is `A_{ij} + λ B_{ij}` with
/// `B_{ij} = -R([e_i, e_j])`. If every `B` vanishes the answer is weight
/// independent; otherwise any coordinate with `B ≠ 0` pins down the only
/// candidate, which is then re-verified against all pairs.
pub fn find_weights(l: &LieAlgebra, r: &LinearOperator) -> WeightSet {
    assert_eq!(r.dim(), l.dim(), "operator and algebra dimensions differ");
    let n = l.dim();
    let zero = Scalar::zero();
    let mut candidate: Option<Scalar> = None;
    let mut any_b = false;
    for i in 0..n {
        for j in i + 1..n {
            let a = rb_defect(l, r, &zero, &l.basis_vector(i), &l.basis_vector(j));
            let b: Vec<Scalar> = r
                .apply(&l.bracket_basis(i, j))
                .into_iter()
                .map(|c| -c)
                .collect();
            for k in 0..n {
                if b[k].is_zero() {
                    if !a[k].is_zero() {
                        return WeightSet::Empty;
                    }
                    continue;
                }
                any_b = true;
                let lambda = -(&a[k] / &b[k]);
                match &candidate {
                    None => candidate = Some(lambda),
                    Some(existing) if *existing != lambda => return WeightSet::Empty,
                    Some(_) => {}
                }
            }
        }
    }
    match (any_b, candidate) {
        (false, _) => WeightSet::All,
        (true, Some(lambda)) => {
            debug_assert!(is_rota_baxter(l, r, &lambda).holds());
            WeightSet::Finite(vec![lambda])
        }
        (true, None) => unreachable!("nonzero B always produces a candidate"),
    }
}

/// `θ_α = R + R* + α·id`.
pub fn theta(r: &LinearOperator, rstar: &LinearOperator, alpha: &Scalar) -> LinearOperator {
    assert_eq!(r.dim(), rstar.dim(), "operator dimensions differ");
    r.add(rstar).add(&LinearOperator::identity(r.dim()).scale(alpha))
}

/// First fundamental identity of a form-derived operator pair:
/// `[R(x), R(y)] - R([x, R(y)]) + R([R*(x), y])`, which vanishes for all
/// `x, y` whenever `r` solves the Yang-Baxter equation.
pub fn prop1_identity1(
    l: &LieAlgebra,
    form: &BilinearForm,
    r: &Tensor2,
    x: &[Scalar],
    y: &[Scalar],
) -> Result<Vec<Scalar>, FormError> {
    let op = operator_of(form, r);
    let opstar = adjoint(form, &op)?;
    let rx = op.apply(x);
    let ry = op.apply(y);
    let mut out = l.bracket(&rx, &ry);
    let t2 = op.apply(&l.bracket(x, &ry));
    let t3 = op.apply(&l.bracket(&opstar.apply(x), y));
    for i in 0..out.len() {
        out[i] = &out[i] - &t2[i] + &t3[i];
    }
    Ok(out)
}

/// Second fundamental identity:
/// `[R*(x), R*(y)] + R*([x, R(y)]) - R*([R*(x), y])`.
pub fn prop1_identity2(
    l: &LieAlgebra,
    form: &BilinearForm,
    r: &Tensor2,
    x: &[Scalar],
    y: &[Scalar],
) -> Result<Vec<Scalar>, FormError> {
    let op = operator_of(form, r);
    let opstar = adjoint(form, &op)?;
    let sx = opstar.apply(x);
    let sy = opstar.apply(y);
    let mut out = l.bracket(&sx, &sy);
    let t2 = opstar.apply(&l.bracket(x, &op.apply(y)));
    let t3 = opstar.apply(&l.bracket(&sx, y));
    for i in 0..out.len() {
        out[i] = &out[i] + &t2[i] - &t3[i];
    }
    Ok(out)
}

/// Whether `φ` lies in the centroid: `[φ(x), y] = φ([x, y])` for all
/// `x, y`. Checked on all ordered basis pairs; the condition is not
/// symmetric in `(x, y)`, so the diagonal matters too.
pub fn centroid_check(l: &LieAlgebra, phi: &LinearOperator) -> bool {
    assert_eq!(phi.dim(), l.dim(), "operator and algebra dimensions differ");
    let n = l.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = l.bracket(&phi.apply(&l.basis_vector(i)), &l.basis_vector(j));
            let rhs = phi.apply(&l.bracket_basis(i, j));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Matrix of `x -> [x, y]` for a fixed `y`; useful to state centroid
/// failures explicitly.
pub fn right_bracket_matrix(l: &LieAlgebra, y: &[Scalar]) -> Matrix {
    l.ad(y).scale(&-Scalar::from_integer(1.into()))
}
