//! Command-line front end: reads algebra/form/tensor/operator documents,
//! runs the library checks, and renders one report per invocation.
//!
//! Exit codes: 0 when the verdict is pass (or not-applicable without
//! `--strict`), 1 when a checked property fails, 2 on usage or input
//! errors. `--json` (or `QUADLIE_OUTPUT=json`) switches to a
//! machine-readable report; identical invocations produce byte-identical
//! output.

use clap::{Parser, Subcommand};
use quadlie::document::{
    algebra_to_doc, form_to_doc, operator_to_doc, parse_algebra, parse_form, parse_operator,
    parse_tensor, tensor_to_doc, DocumentError,
};
use quadlie::form::adjoint;
use quadlie::rota_baxter::is_rota_baxter;
use quadlie::structure::{
    adjoint_kernel_condition, commutator_decomposition, format_subspace, harmonize_weights,
    kernel_condition, quotient_descent, root_space_decomposition, theta_ideal, Decomposition,
    Direction, StructureError, StructureReport, Verdict,
};
use quadlie::tensor::{cybe_element, is_ad_invariant2, operator_of, tensor_of};
use quadlie::{
    find_weights, parse_scalar, BilinearForm, LieAlgebra, LinearOperator, Scalar, Tensor2,
};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use thiserror::Error;

const OUTPUT_ENV: &str = "QUADLIE_OUTPUT";
const DETAIL_LIMIT: usize = 16;

#[derive(Parser)]
#[command(
    name = "quadlie",
    version,
    about = "Exact checks for Yang-Baxter solutions and Rota-Baxter operators on quadratic Lie algebras"
)]
struct Cli {
    /// Emit the report as JSON (default set by QUADLIE_OUTPUT=text|json).
    #[arg(long, global = true)]
    json: bool,
    /// Exit 1 instead of 0 when the verdict is not-applicable.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check antisymmetry and the Jacobi identity of an algebra file.
    Validate { algebra: PathBuf },
    /// Bilinear form checks.
    #[command(subcommand)]
    Form(FormCmd),
    /// Yang-Baxter checks on a tensor.
    #[command(subcommand)]
    Cybe(CybeCmd),
    /// Invariance of a tensor and of its symmetric part.
    Invariance { algebra: PathBuf, tensor: PathBuf },
    /// Conversions between tensors and operators through a form.
    #[command(subcommand)]
    Op(OpCmd),
    /// Rota-Baxter checks on an operator.
    #[command(subcommand)]
    Rb(RbCmd),
    /// Kernel condition: [θ_λ(x), y] lands in ker R exactly when R is
    /// Rota-Baxter of weight λ (given a Yang-Baxter tensor).
    Thm1 {
        algebra: PathBuf,
        form: PathBuf,
        tensor: PathBuf,
        #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
        weight: Scalar,
    },
    /// Adjoint-kernel variant: [θ_λ(x), y] lands in ker R*.
    Thm1star {
        algebra: PathBuf,
        form: PathBuf,
        tensor: PathBuf,
        #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
        weight: Scalar,
    },
    /// The canonical ideal θ_λ([L, L]).
    Ideal {
        algebra: PathBuf,
        form: PathBuf,
        tensor: PathBuf,
        #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
        weight: Scalar,
    },
    /// Descent to the quotient by θ_λ([L, L]).
    Thm2 {
        algebra: PathBuf,
        form: PathBuf,
        tensor: PathBuf,
        #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
        weight: Scalar,
    },
    /// Splitting of [L, L] into θ_λ([L, L]) and ker θ_λ ∩ [L, L].
    Thm3 {
        algebra: PathBuf,
        form: PathBuf,
        tensor: PathBuf,
        #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
        weight: Scalar,
        /// Check the converse direction instead.
        #[arg(long)]
        converse: bool,
    },
    /// Splitting of L by the root spaces of R + R*.
    Thm4 {
        algebra: PathBuf,
        form: PathBuf,
        tensor: PathBuf,
        #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
        weight: Scalar,
        /// Check the converse direction instead.
        #[arg(long)]
        converse: bool,
    },
    /// Rescale component forms so every summand carries the target weight.
    Harmonize {
        /// Component files as algebra form tensor triples.
        #[arg(num_args = 3.., value_name = "FILE")]
        components: Vec<PathBuf>,
        #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
        target: Scalar,
    },
    /// Built-in worked instances.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Subcommand)]
enum FormCmd {
    /// Check invariance and non-degeneracy against an algebra.
    Check { algebra: PathBuf, form: PathBuf },
}

#[derive(Subcommand)]
enum CybeCmd {
    /// Evaluate the Yang-Baxter element of a tensor.
    Check { algebra: PathBuf, tensor: PathBuf },
}

#[derive(Subcommand)]
enum OpCmd {
    /// Derive the operator of a tensor under a form.
    FromTensor { algebra: PathBuf, form: PathBuf, tensor: PathBuf },
    /// Recover the tensor of an operator under a form.
    ToTensor { algebra: PathBuf, form: PathBuf, operator: PathBuf },
    /// The adjoint operator with respect to a form.
    Adjoint { algebra: PathBuf, form: PathBuf, operator: PathBuf },
}

#[derive(Subcommand)]
enum RbCmd {
    /// Check the Rota-Baxter identity at one weight.
    Check {
        algebra: PathBuf,
        operator: PathBuf,
        #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
        weight: Scalar,
    },
    /// Solve for every weight making the operator Rota-Baxter.
    Weights { algebra: PathBuf, operator: PathBuf },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List the built-in entries.
    List,
    /// Write an entry's algebra, form, tensors, and operators as files.
    Emit {
        name: String,
        /// Directory to write into.
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
    /// Recompute an entry's stored expectations (or all with --all).
    Verify {
        name: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

fn scalar_arg(text: &str) -> Result<Scalar, String> {
    parse_scalar(text).map_err(|e| e.to_string())
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Document { path: String, source: DocumentError },
    #[error("{path}: dimension {got} does not match the algebra dimension {expected}")]
    Dimension { path: String, expected: usize, got: usize },
    #[error("{path}: the form is not invariant for the given algebra")]
    NotInvariant { path: String },
    #[error("{path}: the form is degenerate")]
    Degenerate { path: String },
    #[error("{0}")]
    Usage(String),
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    verdict: &'static str,
    details: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    document: Option<serde_json::Value>,
    exit_code: i32,
    #[serde(skip)]
    document_text: Option<String>,
}

impl RunReport {
    fn new(command: String, verdict: &'static str, details: Vec<String>, strict: bool) -> Self {
        let exit_code = match verdict {
            "fail" => 1,
            "not-applicable" if strict => 1,
            _ => 0,
        };
        RunReport { command, verdict, details, document: None, exit_code, document_text: None }
    }

    fn with_document(mut self, text: String) -> Self {
        self.document =
            Some(serde_json::from_str(&text).expect("emitted documents are valid JSON"));
        self.document_text = Some(text);
        self
    }

    fn render_text(&self) -> String {
        if let Some(doc) = &self.document_text {
            return doc.clone();
        }
        let mut out = format!("command: {}\nverdict: {}\n", self.command, self.verdict);
        for line in &self.details {
            writeln!(out, "  - {line}").expect("writing to a string cannot fail");
        }
        out
    }

    fn render_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let json = match output_json(&cli) {
        Ok(json) => json,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    match run(&cli, command) {
        Ok(report) => {
            print!("{}", if json { report.render_json() } else { report.render_text() });
            ExitCode::from(report.exit_code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn output_json(cli: &Cli) -> Result<bool, CliError> {
    if cli.json {
        return Ok(true);
    }
    match std::env::var(OUTPUT_ENV) {
        Err(_) => Ok(false),
        Ok(value) => match value.to_ascii_lowercase().as_str() {
            "json" => Ok(true),
            "text" | "" => Ok(false),
            other => Err(CliError::Usage(format!(
                "{OUTPUT_ENV} must be `text` or `json`, found `{other}`"
            ))),
        },
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load_algebra(path: &Path) -> Result<LieAlgebra, CliError> {
    let (_, l) = parse_algebra(&read(path)?)
        .map_err(|source| CliError::Document { path: path.display().to_string(), source })?;
    Ok(l)
}

fn check_dim(path: &Path, got: usize, expected: usize) -> Result<(), CliError> {
    if got == expected {
        Ok(())
    } else {
        Err(CliError::Dimension { path: path.display().to_string(), expected, got })
    }
}

fn load_form(path: &Path, l: &LieAlgebra) -> Result<BilinearForm, CliError> {
    let (_, form) = parse_form(&read(path)?)
        .map_err(|source| CliError::Document { path: path.display().to_string(), source })?;
    check_dim(path, form.dim(), l.dim())?;
    Ok(form)
}

/// Loads a form that will be inverted, so degeneracy is an input error.
fn load_nondegenerate_form(path: &Path, l: &LieAlgebra) -> Result<BilinearForm, CliError> {
    let form = load_form(path, l)?;
    if !form.is_nondegenerate() {
        return Err(CliError::Degenerate { path: path.display().to_string() });
    }
    Ok(form)
}

/// Loads a form and enforces the quadratic-algebra hypotheses the
/// structural checks are stated under.
fn load_quadratic_form(path: &Path, l: &LieAlgebra) -> Result<BilinearForm, CliError> {
    let form = load_nondegenerate_form(path, l)?;
    if !form.is_invariant(l) {
        return Err(CliError::NotInvariant { path: path.display().to_string() });
    }
    Ok(form)
}

fn load_tensor(path: &Path, l: &LieAlgebra) -> Result<Tensor2, CliError> {
    let (_, t) = parse_tensor(&read(path)?)
        .map_err(|source| CliError::Document { path: path.display().to_string(), source })?;
    check_dim(path, t.dim(), l.dim())?;
    Ok(t)
}

fn load_tensor_named(path: &Path, l: &LieAlgebra) -> Result<(Option<String>, Tensor2), CliError> {
    let (name, t) = parse_tensor(&read(path)?)
        .map_err(|source| CliError::Document { path: path.display().to_string(), source })?;
    check_dim(path, t.dim(), l.dim())?;
    Ok((name, t))
}

fn load_operator_named(
    path: &Path,
    l: &LieAlgebra,
) -> Result<(Option<String>, LinearOperator), CliError> {
    let (name, op) = parse_operator(&read(path)?)
        .map_err(|source| CliError::Document { path: path.display().to_string(), source })?;
    check_dim(path, op.dim(), l.dim())?;
    Ok((name, op))
}

fn verdict_name(verdict: Verdict) -> &'static str {
    match verdict {
        Verdict::Holds => "pass",
        Verdict::Fails => "fail",
        Verdict::NotApplicable => "not-applicable",
    }
}

/// Maps a structural check to a report. Internal contradictions force
/// exit 1 regardless of the verdict: they mean a proved statement failed.
fn structure_report(command: String, sr: StructureReport, strict: bool) -> RunReport {
    let mut details = vec![format!("claim: {}", sr.claim)];
    details.extend(sr.witnesses.iter().cloned());
    details.extend(sr.contradictions.iter().map(|c| format!("internal contradiction: {c}")));
    let mut report = RunReport::new(command, verdict_name(sr.verdict), details, strict);
    if !sr.is_consistent() {
        report.exit_code = 1;
    }
    report
}

/// Hypothesis failures are information, not errors: they become a
/// not-applicable report rather than exit 2.
fn hypothesis_report(command: String, err: StructureError, strict: bool) -> RunReport {
    let mut details = vec![err.to_string()];
    if let StructureError::NotBothRotaBaxter { witnesses, .. } = &err {
        details.extend(witnesses.iter().cloned());
    }
    RunReport::new(command, "not-applicable", details, strict)
}

fn decomposition_details(l: &LieAlgebra, dec: &Decomposition) -> Vec<String> {
    dec.parts
        .iter()
        .map(|(name, part)| {
            format!("{name} = {} (dimension {})", format_subspace(l, part), part.dim())
        })
        .collect()
}

fn run(cli: &Cli, command: String) -> Result<RunReport, CliError> {
    let strict = cli.strict;
    match &cli.command {
        Command::Validate { algebra } => {
            // An invalid algebra is this command's subject, not an input
            // error: parsing runs the validator and we unpack its outcome.
            let text = read(algebra)?;
            match parse_algebra(&text) {
                Ok((_, l)) => Ok(RunReport::new(
                    command,
                    "pass",
                    vec![format!("algebra of dimension {} is a Lie algebra", l.dim())],
                    strict,
                )),
                Err(DocumentError::InvalidAlgebra(err)) => Ok(RunReport::new(
                    command,
                    "fail",
                    err.to_string().lines().map(str::to_string).collect(),
                    strict,
                )),
                Err(source) => Err(CliError::Document {
                    path: algebra.display().to_string(),
                    source,
                }),
            }
        }
        Command::Form(FormCmd::Check { algebra, form }) => {
            let l = load_algebra(algebra)?;
            let form = load_form(form, &l)?;
            let invariant = form.is_invariant(&l);
            let nondegenerate = form.is_nondegenerate();
            let verdict = if invariant && nondegenerate { "pass" } else { "fail" };
            Ok(RunReport::new(
                command,
                verdict,
                vec![
                    format!("invariant: {invariant}"),
                    format!("non-degenerate: {nondegenerate}"),
                ],
                strict,
            ))
        }
        Command::Cybe(CybeCmd::Check { algebra, tensor }) => {
            let l = load_algebra(algebra)?;
            let t = load_tensor(tensor, &l)?;
            let element = cybe_element(&l, &t);
            let terms = element.terms();
            if terms.is_empty() {
                Ok(RunReport::new(
                    command,
                    "pass",
                    vec!["the Yang-Baxter element vanishes".to_string()],
                    strict,
                ))
            } else {
                let mut details = vec![format!(
                    "the Yang-Baxter element has {} nonzero coefficient(s)",
                    terms.len()
                )];
                for (p, q, s, c) in terms.iter().take(DETAIL_LIMIT) {
                    details.push(format!(
                        "coefficient of {}(x){}(x){} = {c}",
                        l.label(*p),
                        l.label(*q),
                        l.label(*s)
                    ));
                }
                if terms.len() > DETAIL_LIMIT {
                    details.push(format!("... {} more", terms.len() - DETAIL_LIMIT));
                }
                Ok(RunReport::new(command, "fail", details, strict))
            }
        }
        Command::Invariance { algebra, tensor } => {
            let l = load_algebra(algebra)?;
            let t = load_tensor(tensor, &l)?;
            let tensor_invariant = is_ad_invariant2(&l, &t);
            let sym_invariant = is_ad_invariant2(&l, &t.add(&t.tau()));
            // The quasitriangular hypothesis only needs the symmetric part.
            let verdict = if sym_invariant { "pass" } else { "fail" };
            Ok(RunReport::new(
                command,
                verdict,
                vec![
                    format!("tensor is invariant: {tensor_invariant}"),
                    format!("symmetric part r + tau(r) is invariant: {sym_invariant}"),
                ],
                strict,
            ))
        }
        Command::Op(OpCmd::FromTensor { algebra, form, tensor }) => {
            let l = load_algebra(algebra)?;
            let form = load_form(form, &l)?;
            let (name, t) = load_tensor_named(tensor, &l)?;
            let op = operator_of(&form, &t);
            let doc = operator_to_doc(name.as_deref(), &op);
            Ok(RunReport::new(command, "pass", Vec::new(), strict).with_document(doc))
        }
        Command::Op(OpCmd::ToTensor { algebra, form, operator }) => {
            let l = load_algebra(algebra)?;
            let form = load_nondegenerate_form(form, &l)?;
            let (name, op) = load_operator_named(operator, &l)?;
            let t = tensor_of(&form, &op).expect("non-degeneracy was checked at load");
            let doc = tensor_to_doc(name.as_deref(), &t);
            Ok(RunReport::new(command, "pass", Vec::new(), strict).with_document(doc))
        }
        Command::Op(OpCmd::Adjoint { algebra, form, operator }) => {
            let l = load_algebra(algebra)?;
            let form = load_nondegenerate_form(form, &l)?;
            let (name, op) = load_operator_named(operator, &l)?;
            let star = adjoint(&form, &op).expect("non-degeneracy was checked at load");
            let starred = name.map(|n| format!("{n}*"));
            let doc = operator_to_doc(starred.as_deref(), &star);
            Ok(RunReport::new(command, "pass", Vec::new(), strict).with_document(doc))
        }
        Command::Rb(RbCmd::Check { algebra, operator, weight }) => {
            let l = load_algebra(algebra)?;
            let (_, op) = load_operator_named(operator, &l)?;
            let defects = is_rota_baxter(&l, &op, weight);
            if defects.holds() {
                Ok(RunReport::new(
                    command,
                    "pass",
                    vec![format!("Rota-Baxter identity of weight {weight} holds")],
                    strict,
                ))
            } else {
                let mut details = Vec::new();
                for entry in &defects.failures {
                    details.push(format!(
                        "defect at ({}, {}) = {}",
                        l.label(entry.i),
                        l.label(entry.j),
                        l.format_element(&entry.defect)
                    ));
                }
                if defects.truncated {
                    details.push("... further failing pairs omitted".to_string());
                }
                Ok(RunReport::new(command, "fail", details, strict))
            }
        }
        Command::Rb(RbCmd::Weights { algebra, operator }) => {
            let l = load_algebra(algebra)?;
            let (_, op) = load_operator_named(operator, &l)?;
            let weights = find_weights(&l, &op);
            Ok(RunReport::new(command, "pass", vec![format!("weights: {weights}")], strict))
        }
        Command::Thm1 { algebra, form, tensor, weight } => {
            let l = load_algebra(algebra)?;
            let form = load_quadratic_form(form, &l)?;
            let t = load_tensor(tensor, &l)?;
            match kernel_condition(&l, &form, &t, weight) {
                Ok(sr) => Ok(structure_report(command, sr, strict)),
                Err(err) => Ok(hypothesis_report(command, err, strict)),
            }
        }
        Command::Thm1star { algebra, form, tensor, weight } => {
            let l = load_algebra(algebra)?;
            let form = load_quadratic_form(form, &l)?;
            let t = load_tensor(tensor, &l)?;
            match adjoint_kernel_condition(&l, &form, &t, weight) {
                Ok(sr) => Ok(structure_report(command, sr, strict)),
                Err(err) => Ok(hypothesis_report(command, err, strict)),
            }
        }
        Command::Ideal { algebra, form, tensor, weight } => {
            let l = load_algebra(algebra)?;
            let form = load_quadratic_form(form, &l)?;
            let t = load_tensor(tensor, &l)?;
            match theta_ideal(&l, &form, &t, weight) {
                Ok(ideal) => Ok(RunReport::new(
                    command,
                    "pass",
                    vec![format!(
                        "I = {} (dimension {})",
                        format_subspace(&l, &ideal),
                        ideal.dim()
                    )],
                    strict,
                )),
                Err(err) => Ok(hypothesis_report(command, err, strict)),
            }
        }
        Command::Thm2 { algebra, form, tensor, weight } => {
            let l = load_algebra(algebra)?;
            let form = load_quadratic_form(form, &l)?;
            let t = load_tensor(tensor, &l)?;
            match quotient_descent(&l, &form, &t, weight) {
                Ok(sr) => Ok(structure_report(command, sr, strict)),
                Err(err) => Ok(hypothesis_report(command, err, strict)),
            }
        }
        Command::Thm3 { algebra, form, tensor, weight, converse } => {
            let l = load_algebra(algebra)?;
            let form = load_quadratic_form(form, &l)?;
            let t = load_tensor(tensor, &l)?;
            let direction = if *converse { Direction::Converse } else { Direction::Forward };
            match commutator_decomposition(&l, &form, &t, weight, direction) {
                Ok((dec, sr)) => {
                    let extra = decomposition_details(&l, &dec);
                    let mut report = structure_report(command, sr, strict);
                    report.details.extend(extra);
                    Ok(report)
                }
                Err(err) => Ok(hypothesis_report(command, err, strict)),
            }
        }
        Command::Thm4 { algebra, form, tensor, weight, converse } => {
            let l = load_algebra(algebra)?;
            let form = load_quadratic_form(form, &l)?;
            let t = load_tensor(tensor, &l)?;
            let direction = if *converse { Direction::Converse } else { Direction::Forward };
            match root_space_decomposition(&l, &form, &t, weight, direction) {
                Ok((dec, sr)) => {
                    let extra = decomposition_details(&l, &dec);
                    let mut report = structure_report(command, sr, strict);
                    report.details.extend(extra);
                    Ok(report)
                }
                Err(err) => Ok(hypothesis_report(command, err, strict)),
            }
        }
        Command::Harmonize { components, target } => {
            if components.len() % 3 != 0 {
                return Err(CliError::Usage(
                    "harmonize expects algebra form tensor file triples".to_string(),
                ));
            }
            let mut parts = Vec::new();
            for chunk in components.chunks(3) {
                let l = load_algebra(&chunk[0])?;
                let form = load_quadratic_form(&chunk[1], &l)?;
                let t = load_tensor(&chunk[2], &l)?;
                parts.push((l, form, t));
            }
            match harmonize_weights(&parts, target) {
                Err(StructureError::ZeroTargetWeight) => {
                    Err(CliError::Usage("--target must be nonzero".to_string()))
                }
                Ok(factors) => {
                    let mut details: Vec<String> = factors
                        .iter()
                        .enumerate()
                        .map(|(i, f)| format!("component {i}: form scale factor {f}"))
                        .collect();
                    details.push(format!(
                        "the rescaled direct sum is Rota-Baxter of weight {target}"
                    ));
                    Ok(RunReport::new(command, "pass", details, strict))
                }
                Err(err) => Ok(hypothesis_report(command, err, strict)),
            }
        }
        Command::Catalog(CatalogCmd::List) => {
            let details = quadlie::catalog::list()
                .into_iter()
                .map(|(name, description)| format!("{name}: {description}"))
                .collect();
            Ok(RunReport::new(command, "pass", details, strict))
        }
        Command::Catalog(CatalogCmd::Emit { name, dir }) => {
            let entry = quadlie::catalog::get(name)
                .map_err(|err| CliError::Usage(err.to_string()))?;
            let mut files =
                vec![(format!("{name}.algebra.json"), algebra_to_doc(Some(name), &entry.algebra))];
            if let Some(form) = &entry.form {
                files.push((format!("{name}.form.json"), form_to_doc(Some(name), form)));
            }
            for (key, t) in &entry.tensors {
                files.push((format!("{name}.{key}.tensor2.json"), tensor_to_doc(Some(key), t)));
            }
            for (key, op) in &entry.operators {
                files.push((
                    format!("{name}.{key}.operator.json"),
                    operator_to_doc(Some(key), op),
                ));
            }
            std::fs::create_dir_all(dir)
                .map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
            let mut details = Vec::new();
            for (file_name, text) in files {
                let path = dir.join(&file_name);
                std::fs::write(&path, text)
                    .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
                details.push(format!("wrote {}", path.display()));
            }
            Ok(RunReport::new(command, "pass", details, strict))
        }
        Command::Catalog(CatalogCmd::Verify { name, all }) => {
            let outcomes = match (name, all) {
                (Some(name), false) => {
                    vec![quadlie::catalog::verify_entry(
                        &quadlie::catalog::get(name)
                            .map_err(|err| CliError::Usage(err.to_string()))?,
                    )]
                }
                (None, true) => quadlie::catalog::verify_all(),
                _ => {
                    return Err(CliError::Usage(
                        "catalog verify takes a name or --all".to_string(),
                    ))
                }
            };
            let mut details = Vec::new();
            let mut all_passed = true;
            for outcome in &outcomes {
                all_passed &= outcome.all_passed();
                details.push(format!(
                    "{}: {}",
                    outcome.name,
                    if outcome.all_passed() { "pass" } else { "FAIL" }
                ));
                for (desc, ok) in &outcome.checks {
                    details.push(format!("[{}] {desc}", if *ok { "ok" } else { "FAIL" }));
                }
            }
            let verdict = if all_passed { "pass" } else { "fail" };
            Ok(RunReport::new(command, verdict, details, strict))
        }
    }
}
