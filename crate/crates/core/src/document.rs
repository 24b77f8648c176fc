//! JSON documents for algebras, forms, tensors, and operators.
//!
//! One format, four kinds, discriminated by a top-level `"kind"` field:
//! `algebra`, `form`, `tensor2`, `operator`. Scalars travel as `"p/q"`
//! strings (or `"p"` when the denominator is 1). Algebra brackets are listed
//! sparsely for `i < j` only, so antisymmetry is structural and cannot be
//! mis-stated. Operator matrices carry an explicit
//! `"convention": "columns-are-images"` marker; column `j` is the image of
//! basis vector `j`.
//!
//! Unknown fields are rejected. Printing then parsing gives back the same
//! object, and parsing then printing canonicalizes.

use crate::form::{BilinearForm, FormError};
use crate::lie::{LieAlgebra, LieError};
use crate::matrix::Matrix;
use crate::operator::LinearOperator;
use crate::scalar::{parse_scalar, Scalar, ScalarParseError};
use crate::tensor::Tensor2;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const OPERATOR_CONVENTION: &str = "columns-are-images";

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid document syntax: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("unknown document kind `{0}`")]
    UnknownKind(String),
    #[error("expected a {expected} document, found {found}")]
    WrongKind { expected: &'static str, found: &'static str },
    #[error("bad scalar in {context}: {source}")]
    BadScalar { context: String, source: ScalarParseError },
    #[error("index {index} out of range in {context} (dim = {dim})")]
    IndexOutOfRange { context: String, index: usize, dim: usize },
    #[error("bracket pair ({i}, {j}) must satisfy i < j")]
    BadBracketPair { i: usize, j: usize },
    #[error("bracket pair ({i}, {j}) appears twice")]
    DuplicateBracket { i: usize, j: usize },
    #[error("{context} must have exactly {dim} entries per row and {dim} rows")]
    BadShape { context: String, dim: usize },
    #[error("operator convention must be {OPERATOR_CONVENTION:?}, found {0:?}")]
    BadConvention(String),
    #[error(transparent)]
    InvalidAlgebra(#[from] LieError),
    #[error(transparent)]
    InvalidForm(#[from] FormError),
}

/// The payload of a successfully parsed document.
#[derive(Debug, Clone)]
pub enum Payload {
    Algebra(LieAlgebra),
    Form(BilinearForm),
    Tensor(Tensor2),
    Operator(LinearOperator),
}

impl Payload {
    fn kind(&self) -> &'static str {
        match self {
            Payload::Algebra(_) => "algebra",
            Payload::Form(_) => "form",
            Payload::Tensor(_) => "tensor2",
            Payload::Operator(_) => "operator",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ParsedDocument {
    pub name: Option<String>,
    pub payload: Payload,
}

#[derive(Deserialize)]
struct KindProbe {
    kind: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    k: usize,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketDoc {
    i: usize,
    j: usize,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    brackets: Vec<BracketDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormDoc {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    gram: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Tensor2TermDoc {
    i: usize,
    j: usize,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorDoc {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    terms: Vec<Tensor2TermDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OperatorDoc {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    convention: String,
    columns: Vec<Vec<String>>,
}

/// Parses any of the four document kinds, dispatching on `"kind"`.
pub fn parse_document(text: &str) -> Result<ParsedDocument, DocumentError> {
    let probe: KindProbe = serde_json::from_str(text)?;
    match probe.kind.as_str() {
        "algebra" => {
            let doc: AlgebraDoc = serde_json::from_str(text)?;
            let (name, l) = algebra_from_doc(doc)?;
            Ok(ParsedDocument { name, payload: Payload::Algebra(l) })
        }
        "form" => {
            let doc: FormDoc = serde_json::from_str(text)?;
            let (name, f) = form_from_doc(doc)?;
            Ok(ParsedDocument { name, payload: Payload::Form(f) })
        }
        "tensor2" => {
            let doc: TensorDoc = serde_json::from_str(text)?;
            let (name, t) = tensor_from_doc(doc)?;
            Ok(ParsedDocument { name, payload: Payload::Tensor(t) })
        }
        "operator" => {
            let doc: OperatorDoc = serde_json::from_str(text)?;
            let (name, op) = operator_from_doc(doc)?;
            Ok(ParsedDocument { name, payload: Payload::Operator(op) })
        }
        other => Err(DocumentError::UnknownKind(other.to_string())),
    }
}

pub fn parse_algebra(text: &str) -> Result<(Option<String>, LieAlgebra), DocumentError> {
    let doc = parse_document(text)?;
    match doc.payload {
        Payload::Algebra(l) => Ok((doc.name, l)),
        other => Err(DocumentError::WrongKind { expected: "algebra", found: other.kind() }),
    }
}

pub fn parse_form(text: &str) -> Result<(Option<String>, BilinearForm), DocumentError> {
    let doc = parse_document(text)?;
    match doc.payload {
        Payload::Form(f) => Ok((doc.name, f)),
        other => Err(DocumentError::WrongKind { expected: "form", found: other.kind() }),
    }
}

pub fn parse_tensor(text: &str) -> Result<(Option<String>, Tensor2), DocumentError> {
    let doc = parse_document(text)?;
    match doc.payload {
        Payload::Tensor(t) => Ok((doc.name, t)),
        other => Err(DocumentError::WrongKind { expected: "tensor2", found: other.kind() }),
    }
}

pub fn parse_operator(text: &str) -> Result<(Option<String>, LinearOperator), DocumentError> {
    let doc = parse_document(text)?;
    match doc.payload {
        Payload::Operator(op) => Ok((doc.name, op)),
        other => Err(DocumentError::WrongKind { expected: "operator", found: other.kind() }),
    }
}

fn scalar(context: &str, text: &str) -> Result<Scalar, DocumentError> {
    parse_scalar(text)
        .map_err(|source| DocumentError::BadScalar { context: context.to_string(), source })
}

fn check_index(context: &str, index: usize, dim: usize) -> Result<(), DocumentError> {
    if index < dim {
        Ok(())
    } else {
        Err(DocumentError::IndexOutOfRange { context: context.to_string(), index, dim })
    }
}

fn square_matrix(
    context: &str,
    rows: &[Vec<String>],
    dim: usize,
) -> Result<Matrix, DocumentError> {
    if rows.len() != dim || rows.iter().any(|row| row.len() != dim) {
        return Err(DocumentError::BadShape { context: context.to_string(), dim });
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for row in rows {
        for cell in row {
            entries.push(scalar(context, cell)?);
        }
    }
    Ok(Matrix::from_rows(
        entries.chunks(dim).map(|chunk| chunk.to_vec()).collect(),
    ))
}

fn algebra_from_doc(doc: AlgebraDoc) -> Result<(Option<String>, LieAlgebra), DocumentError> {
    let dim = doc.dim;
    let mut seen: Vec<(usize, usize)> = Vec::new();
    let mut brackets = Vec::new();
    for bracket in &doc.brackets {
        let (i, j) = (bracket.i, bracket.j);
        check_index("brackets", i, dim)?;
        check_index("brackets", j, dim)?;
        if i >= j {
            return Err(DocumentError::BadBracketPair { i, j });
        }
        if seen.contains(&(i, j)) {
            return Err(DocumentError::DuplicateBracket { i, j });
        }
        seen.push((i, j));
        let mut terms = Vec::new();
        for term in &bracket.terms {
            check_index("bracket terms", term.k, dim)?;
            terms.push((term.k, scalar("bracket terms", &term.coeff)?));
        }
        brackets.push((i, j, terms));
    }
    let labels = match doc.labels {
        Some(labels) => labels,
        None => (0..dim).map(|i| format!("x{}", i + 1)).collect(),
    };
    let l = LieAlgebra::from_sparse_brackets(dim, labels, &brackets)?;
    Ok((doc.name, l))
}

fn form_from_doc(doc: FormDoc) -> Result<(Option<String>, BilinearForm), DocumentError> {
    let gram = square_matrix("gram", &doc.gram, doc.dim)?;
    Ok((doc.name, BilinearForm::new(gram)?))
}

fn tensor_from_doc(doc: TensorDoc) -> Result<(Option<String>, Tensor2), DocumentError> {
    let dim = doc.dim;
    let mut terms = Vec::new();
    for term in &doc.terms {
        check_index("tensor terms", term.i, dim)?;
        check_index("tensor terms", term.j, dim)?;
        terms.push((term.i, term.j, scalar("tensor terms", &term.coeff)?));
    }
    Ok((doc.name, Tensor2::from_terms(dim, &terms)))
}

fn operator_from_doc(doc: OperatorDoc) -> Result<(Option<String>, LinearOperator), DocumentError> {
    if doc.convention != OPERATOR_CONVENTION {
        return Err(DocumentError::BadConvention(doc.convention));
    }
    let dim = doc.dim;
    if doc.columns.len() != dim || doc.columns.iter().any(|col| col.len() != dim) {
        return Err(DocumentError::BadShape { context: "columns".to_string(), dim });
    }
    let mut columns = Vec::with_capacity(dim);
    for col in &doc.columns {
        let mut parsed = Vec::with_capacity(dim);
        for cell in col {
            parsed.push(scalar("columns", cell)?);
        }
        columns.push(parsed);
    }
    let matrix = Matrix::from_fn(dim, dim, |i, j| columns[j][i].clone());
    Ok((doc.name, LinearOperator::from_matrix(matrix)))
}

fn render<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    text
}

/// Canonical document for an algebra: sparse brackets, `i < j`, nonzero
/// terms only, ascending order.
pub fn algebra_to_doc(name: Option<&str>, l: &LieAlgebra) -> String {
    let dim = l.dim();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let coords = l.bracket_basis(i, j);
            let terms: Vec<TermDoc> = coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| TermDoc { k, coeff: c.to_string() })
                .collect();
            if !terms.is_empty() {
                brackets.push(BracketDoc { i, j, terms });
            }
        }
    }
    render(&AlgebraDoc {
        kind: "algebra".to_string(),
        name: name.map(str::to_string),
        dim,
        labels: Some(l.labels().to_vec()),
        brackets,
    })
}

pub fn form_to_doc(name: Option<&str>, form: &BilinearForm) -> String {
    let dim = form.dim();
    let gram = (0..dim)
        .map(|i| (0..dim).map(|j| form.gram().at(i, j).to_string()).collect())
        .collect();
    render(&FormDoc { kind: "form".to_string(), name: name.map(str::to_string), dim, gram })
}

pub fn tensor_to_doc(name: Option<&str>, t: &Tensor2) -> String {
    let terms = t
        .terms()
        .into_iter()
        .map(|(i, j, c)| Tensor2TermDoc { i, j, coeff: c.to_string() })
        .collect();
    render(&TensorDoc {
        kind: "tensor2".to_string(),
        name: name.map(str::to_string),
        dim: t.dim(),
        terms,
    })
}

pub fn operator_to_doc(name: Option<&str>, op: &LinearOperator) -> String {
    let dim = op.dim();
    let columns = (0..dim)
        .map(|j| (0..dim).map(|i| op.matrix().at(i, j).to_string()).collect())
        .collect();
    render(&OperatorDoc {
        kind: "operator".to_string(),
        name: name.map(str::to_string),
        dim,
        convention: OPERATOR_CONVENTION.to_string(),
        columns,
    })
}
