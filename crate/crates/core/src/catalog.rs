//! Built-in worked instances: algebras, forms, tensors, operators, and the
//! outcomes they are known to produce.
//!
//! Every stored expectation is recomputed from first principles by
//! [`verify_entry`]; nothing in an entry is trusted without a check. The
//! entries double as golden fixtures for the test suite and as emittable
//! starting points for the command-line tool.

use crate::form::{adjoint, killing_form, BilinearForm};
use crate::lie::{validate, LieAlgebra};
use crate::matrix::Matrix;
use crate::operator::LinearOperator;
use crate::rota_baxter::{centroid_check, find_weights, theta, WeightSet};
use crate::scalar::{int, rat, Scalar};
use crate::structure::{
    commutator_decomposition, root_space_decomposition, theta_ideal, Direction, StructureError,
};
use crate::subspace::Subspace;
use crate::tensor::{is_ad_invariant2, is_cybe_solution, operator_of, tensor_of, Tensor2};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry: {0}")]
    UnknownEntry(String),
}

/// A recomputable claim about an entry's data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expectation {
    /// Whether the named tensor solves the Yang-Baxter equation.
    Cybe { tensor: String, expected: bool },
    /// Whether `r + τ(r)` of the named tensor is invariant.
    SymmetricPartInvariant { tensor: String, expected: bool },
    /// The exact weight set of the named operator.
    Weights { operator: String, expected: WeightSet },
    /// The named operator is the one the form derives from the tensor.
    OperatorOfTensor { operator: String, tensor: String },
    /// `θ_weight = 0` identically for the named operator.
    ThetaVanishes { operator: String, weight: Scalar },
    /// Dimension of `θ_weight([L, L])` for the named tensor.
    ThetaIdealDim { tensor: String, weight: Scalar, dim: usize },
    /// Whether `R + R*` of the named operator lies in the centroid.
    CentroidOfSum { operator: String, expected: bool },
    /// The commutator splitting holds with parts of these dimensions.
    CommutatorSplitDims { tensor: String, weight: Scalar, i1: usize, i2: usize },
    /// The root-space splitting holds with parts of these dimensions.
    RootSplitDims { tensor: String, weight: Scalar, i1: usize, i2: usize },
    /// The splitting is refused because `R` and `R*` are not both
    /// Rota-Baxter of this weight.
    SplitRefused { tensor: String, weight: Scalar },
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub algebra: LieAlgebra,
    pub form: Option<BilinearForm>,
    pub tensors: Vec<(String, Tensor2)>,
    pub operators: Vec<(String, LinearOperator)>,
    pub expected: Vec<Expectation>,
    pub notes: Vec<String>,
}

impl CatalogEntry {
    pub fn tensor(&self, name: &str) -> Option<&Tensor2> {
        self.tensors.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    pub fn operator(&self, name: &str) -> Option<&LinearOperator> {
        self.operators.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }
}

/// Entry names in the fixed publication order.
pub const NAMES: [&str; 5] =
    ["gl2-example1", "sl2", "sl2-dual-example3", "sl2-plus-abelian", "sl2-sl2-harmonized"];

pub fn get(name: &str) -> Result<CatalogEntry, CatalogError> {
    match name {
        "gl2-example1" => Ok(gl2_entry()),
        "sl2" => Ok(sl2_entry()),
        "sl2-dual-example3" => Ok(dual_entry()),
        "sl2-plus-abelian" => Ok(plus_abelian_entry()),
        "sl2-sl2-harmonized" => Ok(harmonized_entry()),
        other => Err(CatalogError::UnknownEntry(other.to_string())),
    }
}

/// `(name, one-line description)` in deterministic order.
pub fn list() -> Vec<(String, String)> {
    NAMES
        .iter()
        .map(|n| {
            let entry = get(n).expect("published names resolve");
            (entry.name, entry.description)
        })
        .collect()
}

/// Per-check outcome of re-verifying one entry.
#[derive(Debug, Clone)]
pub struct VerificationOutcome {
    pub name: String,
    pub checks: Vec<(String, bool)>,
}

impl VerificationOutcome {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

impl fmt::Display for VerificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, if self.all_passed() { "pass" } else { "FAIL" })?;
        for (desc, ok) in &self.checks {
            write!(f, "\n  [{}] {desc}", if *ok { "ok" } else { "FAIL" })?;
        }
        Ok(())
    }
}

/// Recomputes every stored expectation from first principles.
pub fn verify_entry(entry: &CatalogEntry) -> VerificationOutcome {
    let l = &entry.algebra;
    let mut checks = Vec::new();
    checks.push((
        "bracket table is a Lie algebra".to_string(),
        validate(&l.to_table()).is_valid(),
    ));
    if let Some(form) = &entry.form {
        checks.push(("form is invariant".to_string(), form.is_invariant(l)));
        checks.push(("form is non-degenerate".to_string(), form.is_nondegenerate()));
    }
    for expectation in &entry.expected {
        checks.push(check_expectation(entry, expectation));
    }
    VerificationOutcome { name: entry.name.clone(), checks }
}

pub fn verify_all() -> Vec<VerificationOutcome> {
    NAMES
        .iter()
        .map(|n| verify_entry(&get(n).expect("published names resolve")))
        .collect()
}

fn check_expectation(entry: &CatalogEntry, expectation: &Expectation) -> (String, bool) {
    let l = &entry.algebra;
    let form = || entry.form.as_ref().expect("expectation requires a form");
    let tensor =
        |name: &str| entry.tensor(name).unwrap_or_else(|| panic!("entry lacks tensor {name}"));
    let operator = |name: &str| {
        entry.operator(name).unwrap_or_else(|| panic!("entry lacks operator {name}"))
    };
    match expectation {
        Expectation::Cybe { tensor: t, expected } => (
            format!("cybe({t}) = {expected}"),
            is_cybe_solution(l, tensor(t)) == *expected,
        ),
        Expectation::SymmetricPartInvariant { tensor: t, expected } => {
            let r = tensor(t);
            (
                format!("invariant({t} + tau({t})) = {expected}"),
                is_ad_invariant2(l, &r.add(&r.tau())) == *expected,
            )
        }
        Expectation::Weights { operator: o, expected } => (
            format!("weights({o}) = {{{expected}}}"),
            find_weights(l, operator(o)) == *expected,
        ),
        Expectation::OperatorOfTensor { operator: o, tensor: t } => (
            format!("{o} = operator of {t} under the form"),
            operator_of(form(), tensor(t)) == *operator(o),
        ),
        Expectation::ThetaVanishes { operator: o, weight } => {
            let op = operator(o);
            let opstar = adjoint(form(), op).expect("catalog forms are non-degenerate");
            (format!("theta_{weight}({o}) = 0"), theta(op, &opstar, weight).is_zero())
        }
        Expectation::ThetaIdealDim { tensor: t, weight, dim } => {
            match theta_ideal(l, form(), tensor(t), weight) {
                Ok(ideal) => (
                    format!(
                        "theta_{weight}([L, L]) = {} for {t}, expected dimension {dim}",
                        crate::structure::format_subspace(l, &ideal)
                    ),
                    ideal.dim() == *dim,
                ),
                Err(err) => (format!("theta_{weight}([L, L]) for {t}: {err}"), false),
            }
        }
        Expectation::CentroidOfSum { operator: o, expected } => {
            let op = operator(o);
            let opstar = adjoint(form(), op).expect("catalog forms are non-degenerate");
            (
                format!("centroid({o} + {o}*) = {expected}"),
                centroid_check(l, &op.add(&opstar)) == *expected,
            )
        }
        Expectation::CommutatorSplitDims { tensor: t, weight, i1, i2 } => {
            let ok = commutator_decomposition(l, form(), tensor(t), weight, Direction::Forward)
                .map(|(dec, report)| {
                    report.holds()
                        && report.is_consistent()
                        && dec.part("I1").map(Subspace::dim) == Some(*i1)
                        && dec.part("I2").map(Subspace::dim) == Some(*i2)
                })
                .unwrap_or(false);
            (format!("[L, L] splits at weight {weight} with dims ({i1}, {i2}) for {t}"), ok)
        }
        Expectation::RootSplitDims { tensor: t, weight, i1, i2 } => {
            let ok = root_space_decomposition(l, form(), tensor(t), weight, Direction::Forward)
                .map(|(dec, report)| {
                    report.holds()
                        && report.is_consistent()
                        && dec.part("I1").map(Subspace::dim) == Some(*i1)
                        && dec.part("I2").map(Subspace::dim) == Some(*i2)
                })
                .unwrap_or(false);
            (format!("L splits by root spaces at weight {weight} with dims ({i1}, {i2}) for {t}"), ok)
        }
        Expectation::SplitRefused { tensor: t, weight } => (
            format!("splitting at weight {weight} is refused for {t}"),
            matches!(
                commutator_decomposition(l, form(), tensor(t), weight, Direction::Forward),
                Err(StructureError::NotBothRotaBaxter { .. })
            ),
        ),
    }
}

fn sl2_algebra() -> LieAlgebra {
    LieAlgebra::from_sparse_brackets(
        3,
        vec!["e".into(), "h".into(), "f".into()],
        &[
            (0, 1, vec![(0, int(-2))]),
            (0, 2, vec![(1, int(1))]),
            (1, 2, vec![(2, int(-2))]),
        ],
    )
    .expect("sl2 constants satisfy the axioms")
}

fn standard_r() -> Tensor2 {
    Tensor2::from_terms(3, &[(0, 2, int(1)), (1, 1, rat(1, 4))])
}

fn sl2_entry() -> CatalogEntry {
    let l = sl2_algebra();
    let kappa = killing_form(&l);
    let r = standard_r();
    let op = operator_of(&kappa, &r);
    CatalogEntry {
        name: "sl2".into(),
        description: "sl(2) with its Killing form and the tensor e(x)f + (1/4)h(x)h of weight -4"
            .into(),
        algebra: l,
        form: Some(kappa),
        tensors: vec![("r".into(), r)],
        operators: vec![("R".into(), op)],
        expected: vec![
            Expectation::Cybe { tensor: "r".into(), expected: true },
            Expectation::SymmetricPartInvariant { tensor: "r".into(), expected: true },
            Expectation::Weights {
                operator: "R".into(),
                expected: WeightSet::Finite(vec![int(-4)]),
            },
            Expectation::OperatorOfTensor { operator: "R".into(), tensor: "r".into() },
            Expectation::ThetaVanishes { operator: "R".into(), weight: int(-4) },
            Expectation::ThetaIdealDim { tensor: "r".into(), weight: int(-4), dim: 0 },
            Expectation::CommutatorSplitDims {
                tensor: "r".into(),
                weight: int(-4),
                i1: 0,
                i2: 3,
            },
            Expectation::RootSplitDims { tensor: "r".into(), weight: int(-4), i1: 3, i2: 0 },
        ],
        notes: vec![
            "R sends e to 4e, h to 2h, f to 0; the adjoint sends e to 0, h to 2h, f to 4f".into(),
            "rescaling the form to kappa/4 rescales the weight to -1".into(),
        ],
    }
}

fn gl2_entry() -> CatalogEntry {
    // Basis e11, e12, e21, e22 of 2x2 matrices with [x, y] = xy - yx.
    let l = LieAlgebra::from_sparse_brackets(
        4,
        vec!["e11".into(), "e12".into(), "e21".into(), "e22".into()],
        &[
            (0, 1, vec![(1, int(1))]),
            (0, 2, vec![(2, int(-1))]),
            (0, 3, vec![]),
            (1, 2, vec![(0, int(1)), (3, int(-1))]),
            (1, 3, vec![(1, int(1))]),
            (2, 3, vec![(2, int(-1))]),
        ],
    )
    .expect("gl2 constants satisfy the axioms");
    // Trace form tr(xy).
    let form = BilinearForm::new(Matrix::from_rows(vec![
        vec![int(1), int(0), int(0), int(0)],
        vec![int(0), int(0), int(1), int(0)],
        vec![int(0), int(1), int(0), int(0)],
        vec![int(0), int(0), int(0), int(1)],
    ]))
    .expect("trace form is symmetric");
    // (1/2)(E(x)e11 + e22(x)E) for the identity matrix E = e11 + e22.
    let r = Tensor2::from_terms(
        4,
        &[(0, 0, rat(1, 2)), (3, 0, int(1)), (3, 3, rat(1, 2))],
    );
    let op = operator_of(&form, &r);
    CatalogEntry {
        name: "gl2-example1".into(),
        description:
            "gl(2) with the trace form and r = (1/2)(E(x)e11 + e22(x)E), a weight-zero case"
                .into(),
        algebra: l,
        form: Some(form),
        tensors: vec![("r".into(), r)],
        operators: vec![("R".into(), op)],
        expected: vec![
            Expectation::Cybe { tensor: "r".into(), expected: true },
            Expectation::SymmetricPartInvariant { tensor: "r".into(), expected: true },
            Expectation::Weights {
                operator: "R".into(),
                expected: WeightSet::Finite(vec![int(0)]),
            },
            Expectation::OperatorOfTensor { operator: "R".into(), tensor: "r".into() },
        ],
        notes: vec![
            "r + tau(r) = E(x)E for the identity matrix E; the tensor is not skew".into(),
            "the Killing form of gl(2) is degenerate, so the trace form carries the quadratic structure"
                .into(),
        ],
    }
}

fn dual_entry() -> CatalogEntry {
    let base = sl2_algebra();
    let kappa = killing_form(&base);
    let (l, omega) = crate::form::dual_numbers_extension(&base, &kappa)
        .expect("dimensions match by construction");
    // Projection onto the degree-zero block.
    let proj = LinearOperator::from_matrix(Matrix::from_fn(6, 6, |i, j| {
        if i == j && i < 3 {
            int(1)
        } else {
            int(0)
        }
    }));
    let q = LinearOperator::identity(6).sub(&proj);
    let proj_star = adjoint(&omega, &proj).expect("omega is non-degenerate");
    let q_star = adjoint(&omega, &q).expect("omega is non-degenerate");
    let r = tensor_of(&omega, &proj).expect("omega is non-degenerate");
    // (1/4)ht(x)(h - ht) + et(x)(f - ft) + ft(x)(e - et)
    let nonsolution = Tensor2::from_terms(
        6,
        &[
            (4, 1, rat(1, 4)),
            (4, 4, rat(-1, 4)),
            (3, 2, int(1)),
            (3, 5, int(-1)),
            (5, 0, int(1)),
            (5, 3, int(-1)),
        ],
    );
    let skew = Tensor2::from_terms(6, &[(3, 5, int(1)), (5, 3, int(-1))]);
    let skew_op = operator_of(&omega, &skew);
    CatalogEntry {
        name: "sl2-dual-example3".into(),
        description:
            "sl(2) over the dual numbers: a weight -1 projection whose adjoint is Rota-Baxter for no weight"
                .into(),
        algebra: l,
        form: Some(omega),
        tensors: vec![
            ("r".into(), r),
            ("nonsolution".into(), nonsolution),
            ("skew".into(), skew),
        ],
        operators: vec![
            ("R".into(), proj),
            ("Q".into(), q),
            ("Rstar".into(), proj_star),
            ("Qstar".into(), q_star),
            ("S".into(), skew_op),
        ],
        expected: vec![
            Expectation::Cybe { tensor: "r".into(), expected: true },
            Expectation::Cybe { tensor: "nonsolution".into(), expected: false },
            Expectation::Cybe { tensor: "skew".into(), expected: true },
            Expectation::SymmetricPartInvariant { tensor: "r".into(), expected: true },
            Expectation::Weights {
                operator: "R".into(),
                expected: WeightSet::Finite(vec![int(-1)]),
            },
            Expectation::Weights {
                operator: "Q".into(),
                expected: WeightSet::Finite(vec![int(-1)]),
            },
            Expectation::Weights { operator: "Rstar".into(), expected: WeightSet::Empty },
            Expectation::Weights { operator: "Qstar".into(), expected: WeightSet::Empty },
            Expectation::Weights {
                operator: "S".into(),
                expected: WeightSet::Finite(vec![int(0)]),
            },
            Expectation::OperatorOfTensor { operator: "R".into(), tensor: "r".into() },
            Expectation::OperatorOfTensor { operator: "S".into(), tensor: "skew".into() },
            Expectation::ThetaIdealDim { tensor: "r".into(), weight: int(-1), dim: 3 },
            Expectation::CentroidOfSum { operator: "R".into(), expected: true },
            Expectation::SplitRefused { tensor: "r".into(), weight: int(-1) },
        ],
        notes: vec![
            "basis order e, h, f, et, ht, ft; the form pairs degree 0 with degree 1 through the Killing form"
                .into(),
            "r = (1/4)e(x)ft + (1/8)h(x)ht + (1/4)f(x)et is recovered from the projection through the form; \
             the variant (1/4)h(x)ht + e(x)ft + f(x)et recovers the operator diag(4, 2, 4) on the degree-zero \
             block instead of the projection"
                .into(),
            "the nonsolution tensor (1/4)ht(x)(h - ht) + et(x)(f - ft) + ft(x)(e - et) fails the equation"
                .into(),
            "the skew witness et(x)ft - ft(x)et solves the equation, has weight 0, and satisfies S + S* = 0"
                .into(),
        ],
    }
}

fn plus_abelian_entry() -> CatalogEntry {
    let l = sl2_algebra().direct_sum(&LieAlgebra::abelian(1));
    let form = killing_form(&sl2_algebra())
        .direct_sum(&BilinearForm::new(Matrix::identity(1)).expect("symmetric"));
    let r = standard_r().direct_sum(&Tensor2::zero(1));
    let op = operator_of(&form, &r);
    CatalogEntry {
        name: "sl2-plus-abelian".into(),
        description: "sl(2) plus a central line: positive case for both splitting pipelines"
            .into(),
        algebra: l,
        form: Some(form),
        tensors: vec![("r".into(), r)],
        operators: vec![("R".into(), op)],
        expected: vec![
            Expectation::Cybe { tensor: "r".into(), expected: true },
            Expectation::SymmetricPartInvariant { tensor: "r".into(), expected: true },
            Expectation::Weights {
                operator: "R".into(),
                expected: WeightSet::Finite(vec![int(-4)]),
            },
            Expectation::OperatorOfTensor { operator: "R".into(), tensor: "r".into() },
            Expectation::ThetaIdealDim { tensor: "r".into(), weight: int(-4), dim: 0 },
            Expectation::CommutatorSplitDims {
                tensor: "r".into(),
                weight: int(-4),
                i1: 0,
                i2: 3,
            },
            Expectation::RootSplitDims { tensor: "r".into(), weight: int(-4), i1: 3, i2: 1 },
        ],
        notes: vec![
            "the root spaces of R + R* are the sl(2) block (eigenvalue 4) and the center (eigenvalue 0)"
                .into(),
        ],
    }
}

fn harmonized_entry() -> CatalogEntry {
    let block = sl2_algebra();
    let kappa = killing_form(&block);
    let l = block.direct_sum(&block);
    let form = kappa.direct_sum(&kappa.scale(&int(2)));
    let r = standard_r().direct_sum(&standard_r().scale(&rat(1, 2)));
    let op = operator_of(&form, &r);
    CatalogEntry {
        name: "sl2-sl2-harmonized".into(),
        description:
            "two sl(2) blocks with tensors r and r/2; forms scaled by 1 and 2 so both carry weight -4"
                .into(),
        algebra: l,
        form: Some(form),
        tensors: vec![("r".into(), r)],
        operators: vec![("R".into(), op)],
        expected: vec![
            Expectation::Cybe { tensor: "r".into(), expected: true },
            Expectation::SymmetricPartInvariant { tensor: "r".into(), expected: true },
            Expectation::Weights {
                operator: "R".into(),
                expected: WeightSet::Finite(vec![int(-4)]),
            },
            Expectation::OperatorOfTensor { operator: "R".into(), tensor: "r".into() },
            Expectation::ThetaVanishes { operator: "R".into(), weight: int(-4) },
            Expectation::CommutatorSplitDims {
                tensor: "r".into(),
                weight: int(-4),
                i1: 0,
                i2: 6,
            },
            Expectation::RootSplitDims { tensor: "r".into(), weight: int(-4), i1: 6, i2: 0 },
        ],
        notes: vec![
            "with both forms equal to the Killing form the blocks would carry weights -4 and -2 and the sum would be Rota-Baxter for no weight"
                .into(),
            "the scaling factors (1, 2) are what the weight harmonizer returns for target -4".into(),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_verify() {
        for outcome in verify_all() {
            assert!(outcome.all_passed(), "{outcome}");
        }
    }

    #[test]
    fn listing_is_deterministic_and_complete() {
        let names: Vec<String> = list().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, NAMES.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert!(list().iter().all(|(_, d)| !d.is_empty()));
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(matches!(get("so3"), Err(CatalogError::UnknownEntry(_))));
    }

    #[test]
    fn dual_entry_tensor_coefficients() {
        let entry = get("sl2-dual-example3").unwrap();
        let r = entry.tensor("r").unwrap();
        assert_eq!(r.coeff(0, 5), &rat(1, 4));
        assert_eq!(r.coeff(1, 4), &rat(1, 8));
        assert_eq!(r.coeff(2, 3), &rat(1, 4));
        assert_eq!(r.terms().len(), 3);
        assert!(!entry.notes.is_empty());
    }

    #[test]
    fn gl2_operator_columns() {
        let entry = get("gl2-example1").unwrap();
        let op = entry.operator("R").unwrap();
        // R(e11) = (1/2)e11 + e22, R(e22) = (1/2)e22, off-diagonal killed.
        assert_eq!(op.apply(&[int(1), int(0), int(0), int(0)]), vec![
            rat(1, 2),
            int(0),
            int(0),
            int(1)
        ]);
        assert_eq!(op.apply(&[int(0), int(0), int(0), int(1)]), vec![
            int(0),
            int(0),
            int(0),
            rat(1, 2)
        ]);
        assert_eq!(op.apply(&[int(0), int(1), int(0), int(0)]), vec![int(0); 4]);
    }

    #[test]
    fn plus_abelian_labels() {
        let entry = get("sl2-plus-abelian").unwrap();
        assert_eq!(entry.algebra.labels(), ["e", "h", "f", "x1"]);
    }
}
