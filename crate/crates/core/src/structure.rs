//! Structural consequences of the correspondence between Yang-Baxter
//! solutions and Rota-Baxter operators on quadratic Lie algebras, packaged
//! as verifiable pipelines.
//!
//! Every check returns a [`StructureReport`]: the claim that was tested, a
//! three-valued verdict, human-readable witnesses, and a separate list of
//! `contradictions`. A contradiction means the hypotheses of a proved
//! statement held but its conclusion failed; on correct inputs that list
//! is always empty, and the test suite treats a nonempty list as a build
//! failure.

use crate::eigen::{rational_eigen_decomposition, LinalgError};
use crate::form::{adjoint, BilinearForm};
use crate::lie::LieAlgebra;
use crate::matrix::{vec_scale, vec_sub};
use crate::operator::LinearOperator;
use crate::rota_baxter::{centroid_check, find_weights, is_rota_baxter, theta, WeightSet};
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use crate::tensor::{is_ad_invariant2, is_cybe_solution, operator_of, tensor_of, Tensor2};
use num_traits::Zero;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("the bilinear form is degenerate")]
    DegenerateForm,
    #[error("hypothesis violated: {reason}")]
    HypothesisViolated { reason: String },
    #[error("the operator is not Rota-Baxter of weight {weight}")]
    NotRotaBaxter { weight: Scalar },
    #[error("the weight must be nonzero")]
    ZeroWeight,
    #[error("R and R* are not both Rota-Baxter of weight {weight}")]
    NotBothRotaBaxter { weight: Scalar, witnesses: Vec<String> },
    #[error("the algebra is not simple")]
    NotSimple,
    #[error(transparent)]
    NonRationalSpectrum(#[from] LinalgError),
    #[error("components mix zero and nonzero weights; no rescaling of the forms makes the combined operator Rota-Baxter")]
    MixedZeroNonzeroWeights,
    #[error("the target weight must be nonzero")]
    ZeroTargetWeight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    /// The statement's hypotheses are not met; nothing is claimed.
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails => write!(f, "fails"),
            Verdict::NotApplicable => write!(f, "not applicable"),
        }
    }
}

/// Outcome of one structural check.
///
/// `witnesses` carry diagnostic data for whatever verdict was reached;
/// `contradictions` are reserved for conclusions that failed although the
/// hypotheses of the corresponding proved statement held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub claim: String,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    pub contradictions: Vec<String>,
}

impl StructureReport {
    fn new(claim: impl Into<String>) -> Self {
        StructureReport {
            claim: claim.into(),
            verdict: Verdict::Holds,
            witnesses: Vec::new(),
            contradictions: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn is_consistent(&self) -> bool {
        self.contradictions.is_empty()
    }

    fn contradict(&mut self, line: impl Into<String>) {
        self.contradictions.push(line.into());
        self.verdict = Verdict::Fails;
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "claim: {}", self.claim)?;
        write!(f, "verdict: {}", self.verdict)?;
        for w in &self.witnesses {
            write!(f, "\n  - {w}")?;
        }
        if !self.contradictions.is_empty() {
            write!(f, "\ninternal contradictions:")?;
            for c in &self.contradictions {
                write!(f, "\n  ! {c}")?;
            }
        }
        Ok(())
    }
}

/// Which way a two-sided statement is being checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Forward,
    Converse,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Forward => write!(f, "forward"),
            Direction::Converse => write!(f, "converse"),
        }
    }
}

/// A named splitting of `ambient` into independent subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub ambient: Subspace,
    pub parts: Vec<(String, Subspace)>,
}

impl Decomposition {
    /// The parts are independent and sum to the ambient space.
    pub fn is_direct(&self) -> bool {
        let mut sum = Subspace::zero(self.ambient.ambient_dim());
        let mut total = 0;
        for (_, p) in &self.parts {
            total += p.dim();
            sum = sum.sum(p);
        }
        total == self.ambient.dim() && sum == self.ambient
    }

    pub fn part(&self, name: &str) -> Option<&Subspace> {
        self.parts.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

/// Renders a subspace as a span of labeled basis elements.
pub fn format_subspace(l: &LieAlgebra, s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let rows: Vec<String> = s.basis_rows().iter().map(|r| l.format_element(r)).collect();
    format!("span{{{}}}", rows.join(", "))
}

fn ensure_nondegenerate(form: &BilinearForm) -> Result<(), StructureError> {
    if form.is_nondegenerate() {
        Ok(())
    } else {
        Err(StructureError::DegenerateForm)
    }
}

fn hypothesis(reason: impl Into<String>) -> StructureError {
    StructureError::HypothesisViolated { reason: reason.into() }
}

/// `R` from the tensor and its adjoint. Call after [`ensure_nondegenerate`].
fn derived_pair(form: &BilinearForm, r: &Tensor2) -> (LinearOperator, LinearOperator) {
    let op = operator_of(form, r);
    let opstar = adjoint(form, &op).expect("a non-degenerate form has an invertible gram matrix");
    (op, opstar)
}

fn check_dims(l: &LieAlgebra, form: &BilinearForm, tensor_dim: usize) {
    assert_eq!(l.dim(), form.dim(), "form and algebra dimensions differ");
    assert_eq!(l.dim(), tensor_dim, "tensor and algebra dimensions differ");
}

/// The kernel condition `[R(a), b] + [R*(a), b] + λ[a, b] ∈ ker(R)` on all
/// basis pairs, with `R` derived from `(ω, r)`.
///
/// For a Yang-Baxter solution `r` this holds exactly when `R` is
/// Rota-Baxter of weight λ, and for a Rota-Baxter `R` it holds exactly
/// when `r` solves the equation; both equivalences are cross-checked and
/// any mismatch is recorded as a contradiction.
pub fn kernel_condition(
    l: &LieAlgebra,
    form: &BilinearForm,
    r: &Tensor2,
    weight: &Scalar,
) -> Result<StructureReport, StructureError> {
    kernel_condition_for(l, form, r, weight, false)
}

/// The variant of the kernel condition with `ker(R*)` on the right-hand
/// side, governing when the adjoint `R*` is Rota-Baxter of weight λ.
pub fn adjoint_kernel_condition(
    l: &LieAlgebra,
    form: &BilinearForm,
    r: &Tensor2,
    weight: &Scalar,
) -> Result<StructureReport, StructureError> {
    kernel_condition_for(l, form, r, weight, true)
}

fn kernel_condition_for(
    l: &LieAlgebra,
    form: &BilinearForm,
    r: &Tensor2,
    weight: &Scalar,
    use_adjoint: bool,
) -> Result<StructureReport, StructureError> {
    check_dims(l, form, r.dim());
    ensure_nondegenerate(form)?;
    let (op, opstar) = derived_pair(form, r);
    let th = theta(&op, &opstar, weight);
    let (target, name) = if use_adjoint { (&opstar, "R*") } else { (&op, "R") };
    let ker = target.kernel();
    let mut report = StructureReport::new(format!(
        "[theta_{weight}(a), b] lies in ker({name}) for all a, b"
    ));
    let n = l.dim();
    for i in 0..n {
        for j in 0..n {
            let v = l.bracket(&th.apply(&l.basis_vector(i)), &l.basis_vector(j));
            if !ker.contains(&v) {
                report.verdict = Verdict::Fails;
                report.witnesses.push(format!(
                    "[theta({}), {}] = {} is outside ker({name})",
                    l.label(i),
                    l.label(j),
                    l.format_element(&v)
                ));
            }
        }
    }
    let condition = report.verdict == Verdict::Holds;
    let cybe = is_cybe_solution(l, r);
    let rb = is_rota_baxter(l, target, weight).holds();
    report.witnesses.push(format!("tensor solves the Yang-Baxter equation: {cybe}"));
    report.witnesses.push(format!("{name} is Rota-Baxter of weight {weight}: {rb}"));
    if cybe && condition != rb {
        report.contradict(format!(
            "for a Yang-Baxter solution the condition must match the Rota-Baxter property, got condition = {condition}, Rota-Baxter = {rb}"
        ));
    }
    if !use_adjoint && rb && condition != cybe {
        report.contradict(format!(
            "for a Rota-Baxter operator the condition must match the Yang-Baxter property, got condition = {condition}, Yang-Baxter = {cybe}"
        ));
    }
    Ok(report)
}

/// If `R` is Rota-Baxter of nonzero weight λ and `θ_λ` maps everything
/// into the center, the tensor recovered from `R` solves the Yang-Baxter
/// equation.
pub fn central_theta_check(
    l: &LieAlgebra,
    form: &BilinearForm,
    op: &LinearOperator,
    weight: &Scalar,
) -> Result<StructureReport, StructureError> {
    check_dims(l, form, op.dim());
    ensure_nondegenerate(form)?;
    if weight.is_zero() {
        return Err(StructureError::ZeroWeight);
    }
    if !is_rota_baxter(l, op, weight).holds() {
        return Err(StructureError::NotRotaBaxter { weight: weight.clone() });
    }
    let opstar = adjoint(form, op).expect("a non-degenerate form has an invertible gram matrix");
    let th = theta(op, &opstar, weight);
    let center = l.center();
    let mut report = StructureReport::new(format!(
        "theta_{weight}(L) central implies the recovered tensor solves the Yang-Baxter equation"
    ));
    let mut applicable = true;
    for i in 0..l.dim() {
        let v = th.apply(&l.basis_vector(i));
        if !center.contains(&v) {
            applicable = false;
            report.witnesses.push(format!(
                "theta({}) = {} is not central",
                l.label(i),
                l.format_element(&v)
            ));
        }
    }
    if !applicable {
        report.verdict = Verdict::NotApplicable;
        return Ok(report);
    }
    report.witnesses.push(format!("theta_{weight} maps L into Z(L)"));
    let tensor = tensor_of(form, op).expect("a non-degenerate form has an invertible gram matrix");
    if is_cybe_solution(l, &tensor) {
        report.witnesses.push("recovered tensor solves the Yang-Baxter equation".into());
    } else {
        report.contradict("central theta, yet the recovered tensor fails the Yang-Baxter equation");
    }
    Ok(report)
}

/// If `R` is Rota-Baxter of nonzero weight λ and `θ_λ = 0` identically,
/// the recovered tensor solves the Yang-Baxter equation and its symmetric
/// part is invariant.
pub fn vanishing_theta_check(
    l: &LieAlgebra,
    form: &BilinearForm,
    op: &LinearOperator,
    weight: &Scalar,
) -> Result<StructureReport, StructureError> {
    check_dims(l, form, op.dim());
    ensure_nondegenerate(form)?;
    if weight.is_zero() {
        return Err(StructureError::ZeroWeight);
    }
    if !is_rota_baxter(l, op, weight).holds() {
        return Err(StructureError::NotRotaBaxter { weight: weight.clone() });
    }
    let opstar = adjoint(form, op).expect("a non-degenerate form has an invertible gram matrix");
    let th = theta(op, &opstar, weight);
    let mut report = StructureReport::new(format!(
        "theta_{weight} = 0 implies a Yang-Baxter solution with invariant symmetric part"
    ));
    if !th.is_zero() {
        report.verdict = Verdict::NotApplicable;
        for i in 0..l.dim() {
            let v = th.apply(&l.basis_vector(i));
            if !v.iter().all(Zero::is_zero) {
                report.witnesses.push(format!(
                    "theta({}) = {} is nonzero",
                    l.label(i),
                    l.format_element(&v)
                ));
            }
        }
        return Ok(report);
    }
    report.witnesses.push(format!("theta_{weight} vanishes identically"));
    let tensor = tensor_of(form, op).expect("a non-degenerate form has an invertible gram matrix");
    if is_cybe_solution(l, &tensor) {
        report.witnesses.push("recovered tensor solves the Yang-Baxter equation".into());
    } else {
        report.contradict("theta vanishes, yet the recovered tensor fails the Yang-Baxter equation");
    }
    if is_ad_invariant2(l, &tensor.add(&tensor.tau())) {
        report.witnesses.push("symmetric part of the recovered tensor is invariant".into());
    } else {
        report.contradict("theta vanishes, yet the symmetric part of the recovered tensor is not invariant");
    }
    Ok(report)
}

/// The image `θ_λ([L, L])`, an ideal of `L` whenever the symmetric part
/// `r + τ(r)` is invariant.
pub fn theta_ideal(
    l: &LieAlgebra,
    form: &BilinearForm,
    r: &Tensor2,
    weight: &Scalar,
) -> Result<Subspace, StructureError> {
    check_dims(l, form, r.dim());
    ensure_nondegenerate(form)?;
    if !is_ad_invariant2(l, &r.add(&r.tau())) {
        return Err(hypothesis("the symmetric part r + tau(r) is not invariant"));
    }
    let (op, opstar) = derived_pair(form, r);
    let th = theta(&op, &opstar, weight);
    let derived = l.derived_subalgebra();
    let ideal = derived.image_under(th.matrix());
    assert!(l.is_ideal(&ideal), "theta image of the commutator ideal must be an ideal");
    assert!(
        derived.contains_subspace(&ideal),
        "theta image must stay inside the commutator ideal"
    );
    Ok(ideal)
}

/// Descends a Yang-Baxter solution with invariant symmetric part to the
/// quotient by `θ_λ([L, L])`.
///
/// When the ideal is `R`-invariant it is automatically `R*`-invariant, the
/// induced operators are Rota-Baxter of the same weight, and `θ_λ`
/// vanishes on the quotient's commutators; each of those conclusions is
/// re-verified. When the ideal is not `R`-invariant the statement makes no
/// claim and the verdict is "not applicable".
pub fn quotient_descent(
    l: &LieAlgebra,
    form: &BilinearForm,
    r: &Tensor2,
    weight: &Scalar,
) -> Result<StructureReport, StructureError> {
    check_dims(l, form, r.dim());
    ensure_nondegenerate(form)?;
    if !is_cybe_solution(l, r) {
        return Err(hypothesis("the tensor does not solve the Yang-Baxter equation"));
    }
    let ideal = theta_ideal(l, form, r, weight)?;
    let (op, opstar) = derived_pair(form, r);
    let mut report = StructureReport::new(format!(
        "descent to the quotient by I = theta_{weight}([L, L])"
    ));
    report
        .witnesses
        .push(format!("I = {} (dimension {})", format_subspace(l, &ideal), ideal.dim()));
    if !op.preserves(&ideal) {
        report.verdict = Verdict::NotApplicable;
        report.witnesses.push("R does not preserve I; the descent makes no claim".into());
        return Ok(report);
    }
    report.witnesses.push("R preserves I".into());
    if !opstar.preserves(&ideal) {
        report.contradict("R preserves I but R* does not");
        return Ok(report);
    }
    report.witnesses.push("R* preserves I".into());
    let quotient = l.quotient(&ideal).expect("theta image is an ideal");
    let induced = quotient.induce_operator(&op).expect("R preserves the ideal");
    let induced_star = quotient.induce_operator(&opstar).expect("R* preserves the ideal");
    report
        .witnesses
        .push(format!("quotient dimension {}", quotient.quotient().dim()));
    if is_rota_baxter(quotient.quotient(), &induced, weight).holds() {
        report.witnesses.push(format!("induced R is Rota-Baxter of weight {weight}"));
    } else {
        report.contradict("induced R is not Rota-Baxter of the same weight");
    }
    if is_rota_baxter(quotient.quotient(), &induced_star, weight).holds() {
        report.witnesses.push(format!("induced R* is Rota-Baxter of weight {weight}"));
    } else {
        report.contradict("induced R* is not Rota-Baxter of the same weight");
    }
    let th_bar = theta(&induced, &induced_star, weight);
    let quotient_derived = quotient.quotient().derived_subalgebra();
    if quotient_derived.image_under(th_bar.matrix()).is_zero() {
        report
            .witnesses
            .push("theta vanishes on the commutators of the quotient".into());
    } else {
        report.contradict("theta does not vanish on the commutators of the quotient");
    }
    Ok(report)
}

/// Simplicity test adequate for the built-in algebras: non-abelian, and
/// the ideal generated by every basis line is everything.
pub fn is_simple(l: &LieAlgebra) -> bool {
    if l.dim() == 0 || l.derived_subalgebra().is_zero() {
        return false;
    }
    (0..l.dim()).all(|i| l.ideal_closure(&Subspace::line(&l.basis_vector(i))).is_full())
}

/// On a simple algebra, a nonzero Yang-Baxter solution with nonzero
/// invariant symmetric part yields an operator that is Rota-Baxter of a
/// single nonzero weight λ with `θ_λ = 0` identically.
pub fn simple_theta_vanishing(
    l: &LieAlgebra,
    form: &BilinearForm,
    r: &Tensor2,
) -> Result<StructureReport, StructureError> {
    check_dims(l, form, r.dim());
    ensure_nondegenerate(form)?;
    if r.is_zero() {
        return Err(hypothesis("the tensor is zero"));
    }
    let sym = r.add(&r.tau());
    if sym.is_zero() {
        return Err(hypothesis("the symmetric part r + tau(r) vanishes"));
    }
    if !is_ad_invariant2(l, &sym) {
        return Err(hypothesis("the symmetric part r + tau(r) is not invariant"));
    }
    if !is_cybe_solution(l, r) {
        return Err(hypothesis("the tensor does not solve the Yang-Baxter equation"));
    }
    if !is_simple(l) {
        return Err(StructureError::NotSimple);
    }
    let (op, opstar) = derived_pair(form, r);
    let weights = find_weights(l, &op);
    let mut report = StructureReport::new(
        "on a simple algebra the derived operator has one nonzero weight and theta vanishes",
    );
    let weight = match weights.single() {
        Some(w) => w.clone(),
        None => {
            report.contradict(format!("expected a single weight, found: {weights}"));
            return Ok(report);
        }
    };
    report.witnesses.push(format!("weight = {weight}"));
    if weight.is_zero() {
        report.contradict("the weight is zero");
        return Ok(report);
    }
    let th = theta(&op, &opstar, &weight);
    if th.is_zero() {
        report.witnesses.push(format!("theta_{weight} = 0"));
    } else {
        report.contradict(format!("theta_{weight} is nonzero"));
    }
    Ok(report)
}

/// Shared data of the two-sided decompositions.
struct SplitData {
    op: LinearOperator,
    opstar: LinearOperator,
    rb_op: bool,
    rb_opstar: bool,
    i1: Subspace,
}

fn split_data(
    l: &LieAlgebra,
    form: &BilinearForm,
    r: &Tensor2,
    weight: &Scalar,
) -> SplitData {
    let (op, opstar) = derived_pair(form, r);
    let rb_op = is_rota_baxter(l, &op, weight).holds();
    let rb_opstar = is_rota_baxter(l, &opstar, weight).holds();
    let th = theta(&op, &opstar, weight);
    let i1 = l.derived_subalgebra().image_under(th.matrix());
    SplitData { op, opstar, rb_op, rb_opstar, i1 }
}

/// Error payload when one of `R`, `R*` fails the Rota-Baxter identity:
/// names the failing operator and shows what it does to `I₁`.
fn both_rb_witnesses(l: &LieAlgebra, data: &SplitData, weight: &Scalar) -> Vec<String> {
    let mut witnesses = Vec::new();
    for (name, rb, operator) in [
        ("R", data.rb_op, &data.op),
        ("R*", data.rb_opstar, &data.opstar),
    ] {
        if !rb {
            witnesses.push(format!("{name} is not Rota-Baxter of weight {weight}"));
            let image = data.i1.image_under(operator.matrix());
            if !image.is_zero() {
                witnesses.push(format!(
                    "{name}(I1) = {} has dimension {}, expected 0",
                    format_subspace(l, &image),
                    image.dim()
                ));
            }
        }
    }
    witnesses
}

/// The splitting `[L, L] = I₁ ⊕ I₂` with `I₁ = θ_λ([L, L])` and
/// `I₂ = ker(θ_λ) ∩ [L, L]`.
///
/// Forward: for a non-skew Yang-Baxter solution with invariant symmetric
/// part whose `R` and `R*` are both Rota-Baxter of the same nonzero weight
/// λ, the split is direct with `R(I₁) = R*(I₁) = 0` and `θ_λ` zero on
/// `I₂`. Converse: when both operators are Rota-Baxter of weight λ, the
/// centroid identity holds and the split has those properties, the tensor
/// must solve the Yang-Baxter equation with nonzero invariant symmetric
/// part.
pub fn commutator_decomposition(
    l: &LieAlgebra,
    form: &BilinearForm,
    r: &Tensor2,
    weight: &Scalar,
    direction: Direction,
) -> Result<(Decomposition, StructureReport), StructureError> {
    check_dims(l, form, r.dim());
    ensure_nondegenerate(form)?;
    if weight.is_zero() {
        return Err(hypothesis("the weight must be nonzero"));
    }
    if direction == Direction::Forward {
        if r.is_skew() {
            return Err(hypothesis("the tensor is skew-symmetric"));
        }
        if !is_cybe_solution(l, r) {
            return Err(hypothesis("the tensor does not solve the Yang-Baxter equation"));
        }
        if !is_ad_invariant2(l, &r.add(&r.tau())) {
            return Err(hypothesis("the symmetric part r + tau(r) is not invariant"));
        }
    }
    let data = split_data(l, form, r, weight);
    if !(data.rb_op && data.rb_opstar) {
        return Err(StructureError::NotBothRotaBaxter {
            weight: weight.clone(),
            witnesses: both_rb_witnesses(l, &data, weight),
        });
    }
    if direction == Direction::Converse && !centroid_check(l, &data.op.add(&data.opstar)) {
        return Err(hypothesis("R + R* is not in the centroid"));
    }
    let derived = l.derived_subalgebra();
    let th = theta(&data.op, &data.opstar, weight);
    let i2 = th.kernel().intersect(&derived);
    let decomposition = Decomposition {
        ambient: derived.clone(),
        parts: vec![("I1".into(), data.i1.clone()), ("I2".into(), i2.clone())],
    };
    let mut report = StructureReport::new(format!(
        "{direction}: [L, L] = I1 (+) I2 with R(I1) = R*(I1) = 0 and theta_{weight}(I2) = 0"
    ));
    report
        .witnesses
        .push(format!("I1 = {} (dimension {})", format_subspace(l, &data.i1), data.i1.dim()));
    report
        .witnesses
        .push(format!("I2 = {} (dimension {})", format_subspace(l, &i2), i2.dim()));

    let mut property_failures = Vec::new();
    if !decomposition.is_direct() {
        property_failures.push("I1 + I2 is not a direct splitting of [L, L]".to_string());
    }
    for (name, operator) in [("R", &data.op), ("R*", &data.opstar)] {
        let image = data.i1.image_under(operator.matrix());
        if !image.is_zero() {
            property_failures.push(format!("{name}(I1) = {} is nonzero", format_subspace(l, &image)));
        }
    }
    if !i2.image_under(th.matrix()).is_zero() {
        property_failures.push(format!("theta_{weight} does not vanish on I2"));
    }

    match direction {
        Direction::Forward => {
            for failure in property_failures {
                report.contradict(failure);
            }
            // Proof step: x - (1/λ)θ_λ(x) lands in I₂ for x ∈ [L, L].
            let inv = &Scalar::from_integer(1.into()) / weight;
            for x in derived.basis_rows() {
                let shifted = vec_sub(&x, &vec_scale(&inv, &th.apply(&x)));
                if !i2.contains(&shifted) {
                    report.contradict(format!(
                        "x - (1/{weight}) theta(x) escapes I2 for x = {}",
                        l.format_element(&x)
                    ));
                }
            }
        }
        Direction::Converse => {
            if !property_failures.is_empty() {
                report.verdict = Verdict::NotApplicable;
                report.witnesses.extend(property_failures);
                return Ok((decomposition, report));
            }
            if !is_cybe_solution(l, r) {
                report.contradict("the tensor does not solve the Yang-Baxter equation");
            }
            let sym = r.add(&r.tau());
            if !is_ad_invariant2(l, &sym) {
                report.contradict("the symmetric part r + tau(r) is not invariant");
            }
            if sym.is_zero() {
                report.contradict("the symmetric part r + tau(r) vanishes");
            }
        }
    }
    Ok((decomposition, report))
}

/// The root-space splitting `L = I₁ ⊕ I₂` of `θ = R + R*`, with
/// `I₁ = L(−λ)` and `I₂` the sum of the other root spaces.
///
/// Forward: under the same hypotheses as the commutator splitting, every
/// root space is an ideal, `θ_λ(I₁) ⊆ Z(L)` and `R([I₂, L]) =
/// R*([I₂, L]) = 0`. Converse: when both operators are Rota-Baxter of
/// weight λ, the centroid identity holds and the split has those
/// properties, the tensor solves the Yang-Baxter equation with invariant
/// symmetric part.
pub fn root_space_decomposition(
    l: &LieAlgebra,
    form: &BilinearForm,
    r: &Tensor2,
    weight: &Scalar,
    direction: Direction,
) -> Result<(Decomposition, StructureReport), StructureError> {
    check_dims(l, form, r.dim());
    ensure_nondegenerate(form)?;
    if weight.is_zero() {
        return Err(hypothesis("the weight must be nonzero"));
    }
    if direction == Direction::Forward {
        if !is_cybe_solution(l, r) {
            return Err(hypothesis("the tensor does not solve the Yang-Baxter equation"));
        }
        if !is_ad_invariant2(l, &r.add(&r.tau())) {
            return Err(hypothesis("the symmetric part r + tau(r) is not invariant"));
        }
    }
    let data = split_data(l, form, r, weight);
    if !(data.rb_op && data.rb_opstar) {
        return Err(StructureError::NotBothRotaBaxter {
            weight: weight.clone(),
            witnesses: both_rb_witnesses(l, &data, weight),
        });
    }
    if direction == Direction::Converse && !centroid_check(l, &data.op.add(&data.opstar)) {
        return Err(hypothesis("R + R* is not in the centroid"));
    }
    let n = l.dim();
    let th0 = data.op.add(&data.opstar);
    let spaces = rational_eigen_decomposition(th0.matrix())?;
    let minus_weight = -weight;
    let mut report = StructureReport::new(format!(
        "{direction}: L = I1 (+) I2 from the root spaces of R + R*, I1 = L({minus_weight})"
    ));
    let spectrum: Vec<String> = spaces.iter().map(|(a, _)| a.to_string()).collect();
    report.witnesses.push(format!("spectrum of R + R*: {{{}}}", spectrum.join(", ")));
    let mut i1 = Subspace::zero(n);
    let mut i2 = Subspace::zero(n);
    for (alpha, space) in &spaces {
        report.witnesses.push(format!(
            "L({alpha}) = {} (dimension {})",
            format_subspace(l, space),
            space.dim()
        ));
        if !l.is_ideal(space) {
            report.contradict(format!("root space L({alpha}) is not an ideal"));
        }
        if *alpha == minus_weight {
            i1 = space.clone();
        } else {
            i2 = i2.sum(space);
        }
    }
    let decomposition = Decomposition {
        ambient: Subspace::full(n),
        parts: vec![("I1".into(), i1.clone()), ("I2".into(), i2.clone())],
    };

    let mut property_failures = Vec::new();
    if !decomposition.is_direct() {
        property_failures.push("I1 + I2 is not a direct splitting of L".to_string());
    }
    let th = theta(&data.op, &data.opstar, weight);
    let center = l.center();
    let central_image = i1.image_under(th.matrix());
    if !center.contains_subspace(&central_image) {
        property_failures.push(format!(
            "theta_{weight}(I1) = {} is not central",
            format_subspace(l, &central_image)
        ));
    }
    let bracket_i2 = l.bracket_subspaces(&i2, &Subspace::full(n));
    for (name, operator) in [("R", &data.op), ("R*", &data.opstar)] {
        let image = bracket_i2.image_under(operator.matrix());
        if !image.is_zero() {
            property_failures.push(format!(
                "{name}([I2, L]) = {} is nonzero",
                format_subspace(l, &image)
            ));
        }
    }

    match direction {
        Direction::Forward => {
            for failure in property_failures {
                report.contradict(failure);
            }
        }
        Direction::Converse => {
            if !property_failures.is_empty() {
                report.verdict = Verdict::NotApplicable;
                report.witnesses.extend(property_failures);
                return Ok((decomposition, report));
            }
            if !is_cybe_solution(l, r) {
                report.contradict("the tensor does not solve the Yang-Baxter equation");
            }
            if !is_ad_invariant2(l, &r.add(&r.tau())) {
                report.contradict("the symmetric part r + tau(r) is not invariant");
            }
        }
    }
    Ok((decomposition, report))
}

/// Scales the forms of independent components so that the combined
/// operator on the direct sum is Rota-Baxter of one target weight.
///
/// Component `i` with weight λ_i gets the factor `μ_i = λ/λ_i`; a
/// component whose operator admits every weight gets `μ_i = 1`. Mixing a
/// weight-zero component with a nonzero-weight one is impossible for any
/// scaling.
pub fn harmonize_weights(
    components: &[(LieAlgebra, BilinearForm, Tensor2)],
    target: &Scalar,
) -> Result<Vec<Scalar>, StructureError> {
    if target.is_zero() {
        return Err(StructureError::ZeroTargetWeight);
    }
    if components.is_empty() {
        return Err(hypothesis("no components given"));
    }
    enum ComponentWeight {
        Fixed(Scalar),
        Free,
    }
    let mut weights = Vec::new();
    for (index, (l, form, r)) in components.iter().enumerate() {
        check_dims(l, form, r.dim());
        ensure_nondegenerate(form)?;
        let op = operator_of(form, r);
        match find_weights(l, &op) {
            WeightSet::Empty => {
                return Err(hypothesis(format!(
                    "component {index} operator is not Rota-Baxter for any weight"
                )));
            }
            WeightSet::All => weights.push(ComponentWeight::Free),
            WeightSet::Finite(ws) => {
                let w = ws.into_iter().next().expect("finite weight sets are nonempty");
                weights.push(ComponentWeight::Fixed(w));
            }
        }
    }
    let any_zero = weights
        .iter()
        .any(|w| matches!(w, ComponentWeight::Fixed(v) if v.is_zero()));
    let any_nonzero = weights
        .iter()
        .any(|w| matches!(w, ComponentWeight::Fixed(v) if !v.is_zero()));
    if any_zero {
        if any_nonzero {
            return Err(StructureError::MixedZeroNonzeroWeights);
        }
        return Err(hypothesis(
            "a component has weight zero; no scaling reaches a nonzero target",
        ));
    }
    let factors: Vec<Scalar> = weights
        .iter()
        .map(|w| match w {
            ComponentWeight::Fixed(v) => target / v,
            ComponentWeight::Free => Scalar::from_integer(1.into()),
        })
        .collect();

    // The scaled direct sum must carry the target weight.
    let mut combined = components[0].0.clone();
    let mut combined_form = components[0].1.scale(&factors[0]);
    let mut combined_tensor = components[0].2.clone();
    for ((l, form, r), factor) in components.iter().zip(&factors).skip(1) {
        combined = combined.direct_sum(l);
        combined_form = combined_form.direct_sum(&form.scale(factor));
        combined_tensor = combined_tensor.direct_sum(r);
    }
    let combined_op = operator_of(&combined_form, &combined_tensor);
    assert!(
        is_rota_baxter(&combined, &combined_op, target).holds(),
        "scaled direct sum must be Rota-Baxter of the target weight"
    );
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::{dual_numbers_extension, killing_form};
    use crate::matrix::Matrix;
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

    fn standard_r() -> Tensor2 {
        Tensor2::from_terms(3, &[(0, 2, int(1)), (1, 1, rat(1, 4))])
    }

    /// sl₂ ⊗ F[t]/(t²) with its standard form, the projection onto the
    /// polynomial-degree-zero part, and the tensor that recovers it.
    fn dual_fixture() -> (LieAlgebra, BilinearForm, LinearOperator, Tensor2) {
        let base = sl2();
        let kappa = killing_form(&base);
        let (l2, omega) = dual_numbers_extension(&base, &kappa).unwrap();
        let op = LinearOperator::from_matrix(Matrix::from_fn(6, 6, |i, j| {
            if i == j && i < 3 {
                int(1)
            } else {
                int(0)
            }
        }));
        let r = tensor_of(&omega, &op).unwrap();
        (l2, omega, op, r)
    }

    fn unit_form(n: usize) -> BilinearForm {
        BilinearForm::new(Matrix::identity(n)).unwrap()
    }

    #[test]
    fn kernel_condition_on_dual_numbers() {
        let (l2, omega, _, r) = dual_fixture();
        let good = kernel_condition(&l2, &omega, &r, &int(-1)).unwrap();
        assert_eq!(good.verdict, Verdict::Holds);
        assert!(good.is_consistent());
        let bad = kernel_condition(&l2, &omega, &r, &int(0)).unwrap();
        assert_eq!(bad.verdict, Verdict::Fails);
        assert!(bad.is_consistent());
    }

    #[test]
    fn adjoint_kernel_condition_fails_for_every_weight_on_dual_numbers() {
        let (l2, omega, _, r) = dual_fixture();
        for weight in [int(-1), int(-2), int(0), int(3)] {
            let report = adjoint_kernel_condition(&l2, &omega, &r, &weight).unwrap();
            assert_eq!(report.verdict, Verdict::Fails, "weight {weight}");
            assert!(report.is_consistent());
        }
    }

    #[test]
    fn adjoint_kernel_condition_holds_on_sl2() {
        let l = sl2();
        let report =
            adjoint_kernel_condition(&l, &killing_form(&l), &standard_r(), &int(-4)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(report.is_consistent());
    }

    #[test]
    fn central_theta_on_sl2_and_dual_numbers() {
        let l = sl2();
        let kappa = killing_form(&l);
        let op = operator_of(&kappa, &standard_r());
        let report = central_theta_check(&l, &kappa, &op, &int(-4)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(report.is_consistent());

        let (l2, omega, proj, _) = dual_fixture();
        let report = central_theta_check(&l2, &omega, &proj, &int(-1)).unwrap();
        assert_eq!(report.verdict, Verdict::NotApplicable);
        assert!(report.witnesses.iter().any(|w| w.contains("not central")));

        assert!(matches!(
            central_theta_check(&l, &kappa, &op, &int(0)),
            Err(StructureError::ZeroWeight)
        ));
        assert!(matches!(
            central_theta_check(&l, &kappa, &op, &int(-2)),
            Err(StructureError::NotRotaBaxter { .. })
        ));
    }

    #[test]
    fn central_theta_trivial_on_abelian() {
        let l = LieAlgebra::abelian(2);
        let op = LinearOperator::from_matrix(Matrix::from_fn(2, 2, |i, j| {
            int(((i + 1) * (j + 2)) as i64)
        }));
        let report = central_theta_check(&l, &unit_form(2), &op, &int(3)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(report.is_consistent());
    }

    #[test]
    fn vanishing_theta_check_cases() {
        let l = sl2();
        let kappa = killing_form(&l);
        let op = operator_of(&kappa, &standard_r());
        let report = vanishing_theta_check(&l, &kappa, &op, &int(-4)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(report.is_consistent());

        let (l2, omega, proj, _) = dual_fixture();
        let report = vanishing_theta_check(&l2, &omega, &proj, &int(-1)).unwrap();
        assert_eq!(report.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn theta_ideal_values() {
        let l = sl2();
        let kappa = killing_form(&l);
        assert!(theta_ideal(&l, &kappa, &standard_r(), &int(-4)).unwrap().is_zero());

        let (l2, omega, _, r) = dual_fixture();
        let ideal = theta_ideal(&l2, &omega, &r, &int(-1)).unwrap();
        assert_eq!(ideal.dim(), 3);
        // The image is the degree-one copy of sl₂.
        for k in 3..6 {
            assert!(ideal.contains(&l2.basis_vector(k)));
        }

        let ab = LieAlgebra::abelian(2);
        let r0 = Tensor2::from_terms(2, &[(0, 0, int(1))]);
        assert!(theta_ideal(&ab, &unit_form(2), &r0, &int(5)).unwrap().is_zero());

        // e⊗e has non-invariant symmetric part on sl₂.
        let bad = Tensor2::from_terms(3, &[(0, 0, int(1))]);
        assert!(matches!(
            theta_ideal(&l, &kappa, &bad, &int(-4)),
            Err(StructureError::HypothesisViolated { .. })
        ));
    }

    #[test]
    fn quotient_descent_on_dual_numbers() {
        let (l2, omega, _, r) = dual_fixture();
        let report = quotient_descent(&l2, &omega, &r, &int(-1)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds, "{report}");
        assert!(report.is_consistent());
        assert!(report.witnesses.iter().any(|w| w.contains("dimension 3")));
    }

    #[test]
    fn quotient_descent_with_zero_ideal() {
        let l = sl2();
        let report = quotient_descent(&l, &killing_form(&l), &standard_r(), &int(-4)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(report.is_consistent());

        let ab = LieAlgebra::abelian(2);
        let r0 = Tensor2::from_terms(2, &[(0, 1, int(2))]);
        let report = quotient_descent(&ab, &unit_form(2), &r0, &int(7)).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(report.is_consistent());
    }

    #[test]
    fn simplicity_probe() {
        assert!(is_simple(&sl2()));
        assert!(!is_simple(&LieAlgebra::abelian(3)));
        assert!(!is_simple(&sl2().direct_sum(&LieAlgebra::abelian(1))));
        let (l2, ..) = dual_fixture();
        assert!(!is_simple(&l2));
    }

    #[test]
    fn simple_theta_vanishing_on_sl2() {
        let l = sl2();
        let kappa = killing_form(&l);
        let report = simple_theta_vanishing(&l, &kappa, &standard_r()).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(report.witnesses.iter().any(|w| w == "weight = -4"));

        // Scaling the form scales the weight: κ/4 gives −1.
        let report = simple_theta_vanishing(&l, &kappa.scale(&rat(1, 4)), &standard_r()).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(report.witnesses.iter().any(|w| w == "weight = -1"));
    }

    #[test]
    fn simple_theta_vanishing_gates() {
        let l = sl2();
        let kappa = killing_form(&l);
        // Skew tensor: symmetric part vanishes.
        let skew = Tensor2::from_terms(3, &[(0, 2, int(1)), (2, 0, int(-1))]);
        assert!(matches!(
            simple_theta_vanishing(&l, &kappa, &skew),
            Err(StructureError::HypothesisViolated { .. })
        ));
        let (l2, omega, _, r) = dual_fixture();
        assert!(matches!(
            simple_theta_vanishing(&l2, &omega, &r),
            Err(StructureError::NotSimple)
        ));
    }

    /// sl₂ ⊕ one abelian line with the form κ ⊕ (1) and the standard
    /// tensor supported in the sl₂ block.
    fn sl2_plus_line() -> (LieAlgebra, BilinearForm, Tensor2) {
        let l = sl2().direct_sum(&LieAlgebra::abelian(1));
        let form = killing_form(&sl2()).direct_sum(&unit_form(1));
        let r = standard_r().direct_sum(&Tensor2::zero(1));
        (l, form, r)
    }

    #[test]
    fn commutator_decomposition_forward_positive() {
        let (l, form, r) = sl2_plus_line();
        let (dec, report) =
            commutator_decomposition(&l, &form, &r, &int(-4), Direction::Forward).unwrap();
        assert_eq!(report.verdict, Verdict::Holds, "{report}");
        assert!(report.is_consistent());
        assert!(dec.part("I1").unwrap().is_zero());
        let i2 = dec.part("I2").unwrap();
        assert_eq!(i2.dim(), 3);
        for k in 0..3 {
            assert!(i2.contains(&l.basis_vector(k)));
        }
        assert!(dec.is_direct());
    }

    #[test]
    fn commutator_decomposition_rejects_unbalanced_operators() {
        let (l2, omega, _, r) = dual_fixture();
        let err =
            commutator_decomposition(&l2, &omega, &r, &int(-1), Direction::Forward).unwrap_err();
        match err {
            StructureError::NotBothRotaBaxter { witnesses, .. } => {
                assert!(witnesses.iter().any(|w| w.contains("R* is not Rota-Baxter")));
                assert!(witnesses.iter().any(|w| w.contains("R*(I1)")));
            }
            other => panic!("expected NotBothRotaBaxter, got {other:?}"),
        }
    }

    #[test]
    fn commutator_decomposition_vacuous_on_abelian() {
        let ab = LieAlgebra::abelian(2);
        let r = Tensor2::from_terms(2, &[(0, 0, int(1))]);
        let (dec, report) =
            commutator_decomposition(&ab, &unit_form(2), &r, &int(-4), Direction::Forward)
                .unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
        assert!(dec.part("I1").unwrap().is_zero());
        assert!(dec.part("I2").unwrap().is_zero());
    }

    #[test]
    fn commutator_decomposition_converse() {
        let (l, form, r) = sl2_plus_line();
        let (_, report) =
            commutator_decomposition(&l, &form, &r, &int(-4), Direction::Converse).unwrap();
        assert_eq!(report.verdict, Verdict::Holds, "{report}");
        assert!(report.is_consistent());
    }

    #[test]
    fn root_space_decomposition_on_sl2() {
        let l = sl2();
        let kappa = killing_form(&l);
        let (dec, report) =
            root_space_decomposition(&l, &kappa, &standard_r(), &int(-4), Direction::Forward)
                .unwrap();
        assert_eq!(report.verdict, Verdict::Holds, "{report}");
        assert!(report.is_consistent());
        assert!(report.witnesses.iter().any(|w| w.contains("spectrum of R + R*: {4}")));
        assert!(dec.part("I1").unwrap().is_full());
        assert!(dec.part("I2").unwrap().is_zero());
    }

    #[test]
    fn root_space_decomposition_with_center() {
        let (l, form, r) = sl2_plus_line();
        let (dec, report) =
            root_space_decomposition(&l, &form, &r, &int(-4), Direction::Forward).unwrap();
        assert_eq!(report.verdict, Verdict::Holds, "{report}");
        assert!(report.is_consistent());
        assert!(report.witnesses.iter().any(|w| w.contains("spectrum of R + R*: {0, 4}")));
        let i1 = dec.part("I1").unwrap();
        let i2 = dec.part("I2").unwrap();
        assert_eq!(i1.dim(), 3);
        assert_eq!(i2.dim(), 1);
        assert!(i2.contains(&l.basis_vector(3)));
        let (_, converse) =
            root_space_decomposition(&l, &form, &r, &int(-4), Direction::Converse).unwrap();
        assert_eq!(converse.verdict, Verdict::Holds, "{converse}");
    }

    #[test]
    fn root_space_decomposition_requires_both_operators() {
        let (l2, omega, _, r) = dual_fixture();
        assert!(matches!(
            root_space_decomposition(&l2, &omega, &r, &int(-1), Direction::Forward),
            Err(StructureError::NotBothRotaBaxter { .. })
        ));
    }

    #[test]
    fn root_space_decomposition_reports_irrational_spectra() {
        // On an abelian algebra every operator is Rota-Baxter of every
        // weight, so the gates pass; R + R* here has minimal polynomial
        // t² − t − 1 on a 2-dimensional block.
        let ab = LieAlgebra::abelian(3);
        let r = Tensor2::from_terms(3, &[(0, 1, int(1)), (1, 1, rat(1, 2))]);
        let err = root_space_decomposition(&ab, &unit_form(3), &r, &int(-4), Direction::Forward)
            .unwrap_err();
        match err {
            StructureError::NonRationalSpectrum(LinalgError::NonRationalSpectrum {
                dim,
                rational_dim,
            }) => {
                assert_eq!((dim, rational_dim), (3, 1));
            }
            other => panic!("expected NonRationalSpectrum, got {other:?}"),
        }
    }

    #[test]
    fn harmonize_two_sl2_copies() {
        let l = sl2();
        let kappa = killing_form(&l);
        let components = vec![
            (l.clone(), kappa.clone(), standard_r()),
            (l.clone(), kappa.clone(), standard_r().scale(&rat(1, 2))),
        ];
        // Weights are −4 and −2; matching −4 needs factors 1 and 2.
        assert_eq!(harmonize_weights(&components, &int(-4)).unwrap(), vec![int(1), int(2)]);
        assert_eq!(
            harmonize_weights(&components[..1], &int(-1)).unwrap(),
            vec![rat(1, 4)]
        );
    }

    #[test]
    fn harmonize_accepts_weight_free_components() {
        let l = sl2();
        let kappa = killing_form(&l);
        let ab = LieAlgebra::abelian(2);
        let r_ab = Tensor2::from_terms(2, &[(0, 0, int(1))]);
        let components = vec![
            (ab, unit_form(2), r_ab),
            (l, kappa, standard_r()),
        ];
        assert_eq!(
            harmonize_weights(&components, &int(-2)).unwrap(),
            vec![int(1), rat(1, 2)]
        );
    }

    #[test]
    fn harmonize_error_cases() {
        let l = sl2();
        let kappa = killing_form(&l);
        assert!(matches!(
            harmonize_weights(&[(l.clone(), kappa.clone(), standard_r())], &int(0)),
            Err(StructureError::ZeroTargetWeight)
        ));

        // A weight-zero skew component cannot join a weight −4 one.
        let base = sl2();
        let (l2, omega) = dual_numbers_extension(&base, &killing_form(&base)).unwrap();
        let skew = Tensor2::from_terms(6, &[(3, 5, int(1)), (5, 3, int(-1))]);
        let mixed = vec![
            (l2, omega, skew),
            (l.clone(), kappa.clone(), standard_r()),
        ];
        assert!(matches!(
            harmonize_weights(&mixed, &int(-4)),
            Err(StructureError::MixedZeroNonzeroWeights)
        ));

        // e⊗f − f⊗e admits no weight at all on sl₂.
        let no_weight = Tensor2::from_terms(3, &[(0, 2, int(1)), (2, 0, int(-1))]);
        assert!(matches!(
            harmonize_weights(&[(l, kappa, no_weight)], &int(-4)),
            Err(StructureError::HypothesisViolated { .. })
        ));
    }

    #[test]
    fn report_rendering() {
        let mut report = StructureReport::new("sample claim");
        report.witnesses.push("first witness".into());
        assert_eq!(format!("{report}"), "claim: sample claim\nverdict: holds\n  - first witness");
        report.contradict("broken conclusion");
        let text = format!("{report}");
        assert!(text.contains("verdict: fails"));
        assert!(text.contains("! broken conclusion"));
    }

    #[test]
    fn decomposition_directness() {
        let ambient = Subspace::full(3);
        let good = Decomposition {
            ambient: ambient.clone(),
            parts: vec![
                ("A".into(), Subspace::from_rows(3, &[vec![int(1), int(0), int(0)]])),
                (
                    "B".into(),
                    Subspace::from_rows(
                        3,
                        &[vec![int(0), int(1), int(0)], vec![int(0), int(0), int(1)]],
                    ),
                ),
            ],
        };
        assert!(good.is_direct());
        let overlapping = Decomposition {
            ambient,
            parts: vec![
                ("A".into(), Subspace::from_rows(3, &[vec![int(1), int(0), int(0)]])),
                ("B".into(), Subspace::full(3)),
            ],
        };
        assert!(!overlapping.is_direct());
    }
}
