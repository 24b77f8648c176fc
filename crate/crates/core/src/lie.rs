//! Lie algebras presented by structure constants.
//!
//! A [`BracketTable`] is a raw, possibly inconsistent bracket assignment
//! `(i, j) -> [e_i, e_j]` used for validation and file input. A
//! [`LieAlgebra`] is the checked object: antisymmetry is structural (only
//! pairs `i < j` are stored, the rest follows by sign) and the Jacobi
//! identity has been verified on all basis triples, which suffices by
//! trilinearity.

use crate::matrix::{axpy, vec_is_zero, Matrix};
use crate::operator::LinearOperator;
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

/// Raw bracket assignment on a basis, prior to any consistency checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTable {
    dim: usize,
    entries: Vec<Vec<Scalar>>, // entries[i * dim + j] = [e_i, e_j]
}

impl BracketTable {
    pub fn new(dim: usize) -> Self {
        BracketTable { dim, entries: vec![vec![Scalar::zero(); dim]; dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &[Scalar] {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Vec<Scalar>) {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        assert_eq!(value.len(), self.dim, "bracket value has wrong length");
        self.entries[i * self.dim + j] = value;
    }

    /// Sets `[e_i, e_j] = value` and `[e_j, e_i] = -value` in one step.
    pub fn set_pair(&mut self, i: usize, j: usize, value: Vec<Scalar>) {
        assert_ne!(i, j, "set_pair needs distinct indices");
        let negated = value.iter().map(|c| -c.clone()).collect();
        self.set(i, j, value);
        self.set(j, i, negated);
    }

    /// Bracket of arbitrary coordinate vectors, reading the table literally
    /// (no antisymmetry assumed). Used by validation.
    fn raw_bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let k = &x[i] * &y[j];
                axpy(&mut out, &k, self.get(i, j));
            }
        }
        out
    }
}

/// Every consistency violation in a bracket table, by basis indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    /// Pairs `(i, j)` with `i <= j` where `[e_i,e_j] + [e_j,e_i] != 0`.
    pub antisymmetry: Vec<(usize, usize)>,
    /// Triples `(i, j, k)` with `i < j < k` where the Jacobi sum is nonzero.
    pub jacobi: Vec<(usize, usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "structure constants are consistent");
        }
        let mut first = true;
        for (i, j) in &self.antisymmetry {
            if !first {
                writeln!(f)?;
            }
            write!(f, "antisymmetry violated at ({i},{j})")?;
            first = false;
        }
        for (i, j, k) in &self.jacobi {
            if !first {
                writeln!(f)?;
            }
            write!(f, "Jacobi identity violated at ({i},{j},{k})")?;
            first = false;
        }
        Ok(())
    }
}

/// Checks antisymmetry on all pairs (including the diagonal) and the
/// Jacobi identity on all triples `i < j < k`, which extends to arbitrary
/// arguments by trilinearity.
pub fn validate(table: &BracketTable) -> ValidationReport {
    let n = table.dim;
    let mut report = ValidationReport::default();
    for i in 0..n {
        for j in i..n {
            let sum: Vec<Scalar> =
                table.get(i, j).iter().zip(table.get(j, i)).map(|(a, b)| a + b).collect();
            if !vec_is_zero(&sum) {
                report.antisymmetry.push((i, j));
            }
        }
    }
    let basis = |i: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::from_integer(1.into());
        v
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut sum = table.raw_bracket(table.get(i, j), &basis(k));
                let t2 = table.raw_bracket(table.get(j, k), &basis(i));
                let t3 = table.raw_bracket(table.get(k, i), &basis(j));
                for idx in 0..n {
                    sum[idx] = &sum[idx] + &t2[idx] + &t3[idx];
                }
                if !vec_is_zero(&sum) {
                    report.jacobi.push((i, j, k));
                }
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("inconsistent structure constants: {0}")]
    Invalid(ValidationReport),
    #[error("expected {expected} basis labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("the given subspace is not an ideal")]
    NotAnIdeal,
    #[error("operator does not preserve the ideal, so it does not descend")]
    OperatorNotInvariant,
}

/// One sparse bracket `[e_i, e_j] = Σ coeff · e_k` as `(i, j, [(k, coeff)])`.
pub type SparseBracket = (usize, usize, Vec<(usize, Scalar)>);

/// A finite-dimensional Lie algebra over the rationals with a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    pairs: Vec<Vec<Scalar>>, // [e_i, e_j] for i < j, indexed by pair_index
}

fn pair_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// Validates the table and compresses it to the `i < j` pairs.
    pub fn from_table(labels: Vec<String>, table: &BracketTable) -> Result<Self, LieError> {
        let n = table.dim();
        if labels.len() != n {
            return Err(LieError::LabelCount { expected: n, got: labels.len() });
        }
        let report = validate(table);
        if !report.is_valid() {
            return Err(LieError::Invalid(report));
        }
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                pairs.push(table.get(i, j).to_vec());
            }
        }
        Ok(LieAlgebra { dim: n, labels, pairs })
    }

    /// Builds from sparse brackets `[e_i, e_j] = Σ coeff · e_k` given for
    /// `i < j` only; the mirrored entries are filled in by antisymmetry.
    pub fn from_sparse_brackets(
        dim: usize,
        labels: Vec<String>,
        brackets: &[SparseBracket],
    ) -> Result<Self, LieError> {
        let mut table = BracketTable::new(dim);
        for (i, j, terms) in brackets {
            assert!(i < j, "sparse brackets must have i < j");
            let mut col = vec![Scalar::zero(); dim];
            for (k, coeff) in terms {
                col[*k] = &col[*k] + coeff;
            }
            table.set_pair(*i, *j, col);
        }
        LieAlgebra::from_table(labels, &table)
    }

    pub fn abelian(dim: usize) -> Self {
        let labels = (0..dim).map(|i| format!("x{}", i + 1)).collect();
        LieAlgebra { dim, labels, pairs: vec![vec![Scalar::zero(); dim]; dim * (dim - 1) / 2] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn to_table(&self) -> BracketTable {
        let mut table = BracketTable::new(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                table.set_pair(i, j, self.bracket_basis(i, j));
            }
        }
        table
    }

    /// `[e_i, e_j]` for arbitrary index order.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => vec![Scalar::zero(); self.dim],
            Ordering::Less => self.pairs[pair_index(i, j, self.dim)].clone(),
            Ordering::Greater => {
                self.pairs[pair_index(j, i, self.dim)].iter().map(|c| -c.clone()).collect()
            }
        }
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "left argument has wrong length");
        assert_eq!(y.len(), self.dim, "right argument has wrong length");
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                // x_i y_j - x_j y_i multiplies [e_i, e_j]
                let k = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
                if !k.is_zero() {
                    axpy(&mut out, &k, &self.pairs[pair_index(i, j, self.dim)]);
                }
            }
        }
        out
    }

    /// Matrix of `ad x : y -> [x, y]` in the basis (columns are images).
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> =
            (0..self.dim).map(|j| self.bracket(x, &self.basis_vector(j))).collect();
        Matrix::from_cols(cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&self.basis_vector(i))
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        assert!(i < self.dim, "basis index out of range");
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::from_integer(1.into());
        v
    }

    /// `{z : [z, x] = 0 for all x}`, computed as the joint kernel of the
    /// adjoint maps of the basis.
    pub fn center(&self) -> Subspace {
        if self.dim == 0 {
            return Subspace::zero(0);
        }
        let mut stacked = Matrix::zeros(0, self.dim);
        for j in 0..self.dim {
            stacked = Matrix::vstack(&stacked, &self.ad_basis(j));
        }
        crate::subspace::kernel(&stacked)
    }

    /// `[L, L]`: the span of all basis brackets.
    pub fn derived_subalgebra(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                rows.push(self.pairs[pair_index(i, j, self.dim)].clone());
            }
        }
        Subspace::from_rows(self.dim, &rows)
    }

    /// Span of `[a, b]` over `a` in `s`, `b` in `t`.
    pub fn bracket_subspaces(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for a in s.basis_rows() {
            for b in t.basis_rows() {
                rows.push(self.bracket(&a, &b));
            }
        }
        Subspace::from_rows(self.dim, &rows)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        assert_eq!(s.ambient_dim(), self.dim, "subspace lives in a different algebra");
        s.basis_rows().iter().all(|v| {
            (0..self.dim).all(|j| s.contains(&self.bracket(v, &self.basis_vector(j))))
        })
    }

    /// Smallest ideal containing `s`: closes under bracketing with basis
    /// elements until the dimension stabilizes.
    pub fn ideal_closure(&self, s: &Subspace) -> Subspace {
        assert_eq!(s.ambient_dim(), self.dim, "subspace lives in a different algebra");
        let mut current = s.clone();
        loop {
            let mut rows = current.basis_rows();
            for v in current.basis_rows() {
                for j in 0..self.dim {
                    rows.push(self.bracket(&v, &self.basis_vector(j)));
                }
            }
            let next = Subspace::from_rows(self.dim, &rows);
            if next.dim() == current.dim() {
                return next;
            }
            current = next;
        }
    }

    /// Direct sum with componentwise brackets. Labels are kept when the two
    /// sets are disjoint; otherwise the second copy is primed.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim;
        let m = other.dim;
        let collision = other.labels.iter().any(|l| self.labels.contains(l));
        let mut labels = self.labels.clone();
        for l in &other.labels {
            labels.push(if collision { format!("{l}'") } else { l.clone() });
        }
        let mut table = BracketTable::new(n + m);
        for i in 0..n {
            for j in i + 1..n {
                let mut col = self.bracket_basis(i, j);
                col.extend(vec![Scalar::zero(); m]);
                table.set_pair(i, j, col);
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let mut col = vec![Scalar::zero(); n];
                col.extend(other.bracket_basis(i, j));
                table.set_pair(n + i, n + j, col);
            }
        }
        LieAlgebra::from_table(labels, &table).expect("direct sum of valid algebras is valid")
    }

    /// Quotient by an ideal, with an explicit linear section.
    ///
    /// The quotient basis is indexed by the non-pivot coordinates of the
    /// ideal's echelon basis; the section sends them to the corresponding
    /// standard basis vectors, and the projection is reduction modulo the
    /// ideal followed by restriction to those coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientAlgebra, LieError> {
        assert_eq!(ideal.ambient_dim(), self.dim, "ideal lives in a different algebra");
        if !self.is_ideal(ideal) {
            return Err(LieError::NotAnIdeal);
        }
        let pivots = ideal.pivot_columns();
        let free: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let q = free.len();
        // Column k of the projection reads off the free coordinates of the
        // canonical coset representative of e_k.
        let mut projection = Matrix::zeros(q, self.dim);
        for col in 0..self.dim {
            let reduced = ideal.reduce(&self.basis_vector(col));
            for (row, &c) in free.iter().enumerate() {
                projection.set(row, col, reduced[c].clone());
            }
        }
        let mut section = Matrix::zeros(self.dim, q);
        for (col, &c) in free.iter().enumerate() {
            section.set(c, col, Scalar::from_integer(1.into()));
        }
        let project = |v: &[Scalar]| -> Vec<Scalar> { projection.mul_col(v) };
        let mut table = BracketTable::new(q);
        for a in 0..q {
            for b in a + 1..q {
                let lifted = self.bracket(&section.col(a), &section.col(b));
                table.set_pair(a, b, project(&lifted));
            }
        }
        let labels = free.iter().map(|&c| self.labels[c].clone()).collect();
        let quotient = LieAlgebra::from_table(labels, &table)?;
        Ok(QuotientAlgebra {
            parent: self.clone(),
            ideal: ideal.clone(),
            section,
            projection,
            quotient,
        })
    }

    /// Structure-constant equality, ignoring labels.
    pub fn structure_equals(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.pairs == other.pairs
    }

    /// Renders a coordinate vector as a combination of basis labels,
    /// e.g. `4*e + 2*h - 1/2*f`.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        format_with_labels(v, &self.labels)
    }
}

/// Renders a coordinate vector over the given labels.
pub fn format_with_labels(v: &[Scalar], labels: &[String]) -> String {
    assert_eq!(v.len(), labels.len());
    let one = Scalar::from_integer(1.into());
    let minus_one = -one.clone();
    let mut out = String::new();
    for (c, label) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if *c == minus_one {
                out.push('-');
            } else if *c != one {
                out.push_str(&format!("{c}*"));
            }
        } else if c > &Scalar::zero() {
            out.push_str(" + ");
            if *c != one {
                out.push_str(&format!("{c}*"));
            }
        } else {
            out.push_str(" - ");
            let abs = -c.clone();
            if abs != one {
                out.push_str(&format!("{abs}*"));
            }
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A quotient `L / I` together with the projection and a chosen section.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    parent: LieAlgebra,
    ideal: Subspace,
    section: Matrix,    // dim(L) x dim(Q), maps quotient coordinates to coset reps
    projection: Matrix, // dim(Q) x dim(L)
    quotient: LieAlgebra,
}

impl QuotientAlgebra {
    pub fn parent(&self) -> &LieAlgebra {
        &self.parent
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn quotient(&self) -> &LieAlgebra {
        &self.quotient
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.mul_col(v)
    }

    pub fn lift(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.section.mul_col(v)
    }

    /// Pushes an operator down to the quotient. Requires `R(I) ⊆ I`; the
    /// induced matrix is `projection ∘ R ∘ section`, and the invariance
    /// guarantees `projection ∘ R = induced ∘ projection`.
    pub fn induce_operator(&self, r: &LinearOperator) -> Result<LinearOperator, LieError> {
        assert_eq!(r.dim(), self.parent.dim(), "operator dimension mismatch");
        if !r.preserves(&self.ideal) {
            return Err(LieError::OperatorNotInvariant);
        }
        let induced = &(&self.projection * r.matrix()) * &self.section;
        Ok(LinearOperator::from_matrix(induced))
    }
}
