//! quadlie: exact verification of classical Yang-Baxter solutions and
//! Rota-Baxter operators on quadratic Lie algebras.
//!
//! The crate works with finite-dimensional Lie algebras over the rationals,
//! presented by structure constants, and keeps every computation exact:
//!
//! - [`scalar`], [`matrix`], [`subspace`], [`eigen`]: arbitrary-precision
//!   rational linear algebra with canonical (reduced row echelon)
//!   subspace representations;
//! - [`lie`]: structure-constant Lie algebras, validation, ideals,
//!   quotients;
//! - [`form`]: invariant symmetric bilinear forms, Killing forms, adjoint
//!   operators, the dual-numbers extension;
//! - [`tensor`]: two- and three-tensors, the classical Yang-Baxter element,
//!   and the form-mediated correspondence between tensors and operators;
//! - [`rota_baxter`]: the Rota-Baxter identity of weight λ, defect reports,
//!   and weight search;
//! - [`structure`]: the structural consequences tying everything together
//!   (kernel criteria, the canonical ideal θ_λ([L,L]), quotient descent,
//!   commutator and root-space decompositions, weight harmonization);
//! - [`catalog`]: built-in worked examples with machine-checked expected
//!   outcomes;
//! - [`document`]: the JSON interchange format used by the command-line
//!   front end.

// Indexed loops mirror the written formulas throughout the matrix code.
#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod document;
pub mod eigen;
pub mod form;
pub mod lie;
pub mod matrix;
pub mod operator;
pub mod rota_baxter;
pub mod scalar;
pub mod structure;
pub mod subspace;
pub mod tensor;

pub use eigen::{char_poly, rational_eigen_decomposition, LinalgError};
pub use form::{killing_form, BilinearForm, FormError};
pub use lie::{validate, BracketTable, LieAlgebra, LieError, QuotientAlgebra, ValidationReport};
pub use matrix::Matrix;
pub use operator::LinearOperator;
pub use rota_baxter::{find_weights, is_rota_baxter, theta, DefectReport, WeightSet};
pub use scalar::{int, parse_scalar, rat, Scalar};
pub use structure::{Decomposition, Direction, StructureError, StructureReport, Verdict};
pub use subspace::{kernel, Subspace};
pub use tensor::{cybe_element, is_cybe_solution, operator_of, tensor_of, Tensor2, Tensor3};
