//! The JSON instance format.
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`); plain JSON integers
//! are accepted on input. Basis indices are 1-based. Matrices are lists of
//! rows, so column `j` holds the image of `e_j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cochain::{sort_sign, Cochain};
use crate::error::{Error, Result};
use crate::exterior::{BigElement, MultiIndex, MAX_DIM};
use crate::linalg::{format_rational, parse_rational, Matrix, Rational, TwistMap};
use crate::structures::{HomLieAlgebra, Representation, RightSymmetricAlgebra};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RawRational {
    Text(String),
    Int(i64),
}

impl RawRational {
    fn parse(&self, field: &str) -> Result<Rational> {
        match self {
            RawRational::Text(s) => parse_rational(s).map_err(|_| perr(field, format!("malformed rational `{s}`"))),
            RawRational::Int(i) => Ok(Rational::from_integer((*i).into())),
        }
    }

    fn from(r: &Rational) -> Self {
        RawRational::Text(format_rational(r))
    }
}

type RawMatrix = Vec<Vec<RawRational>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawValue {
    args: Vec<usize>,
    value: Vec<RawRational>,
}

/// A bracket entry: `{args, value}` or the shorthand `{i, j, coeffs}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RawMuEntry {
    Full(RawValue),
    Short { i: usize, j: usize, coeffs: Vec<RawRational> },
}

impl RawMuEntry {
    fn normalize(&self) -> RawValue {
        match self {
            RawMuEntry::Full(v) => v.clone(),
            RawMuEntry::Short { i, j, coeffs } => RawValue { args: vec![*i, *j], value: coeffs.clone() },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    cov: Vec<usize>,
    vec: Vec<usize>,
    coeff: RawRational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRep {
    wdim: usize,
    rho: Vec<RawMatrix>,
    beta: RawMatrix,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProduct {
    table: Vec<RawValue>,
    gamma: RawMatrix,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    #[serde(default)]
    name: String,
    dim: usize,
    alpha: RawMatrix,
    #[serde(default)]
    mu: Vec<RawMuEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    delta: Option<Vec<RawTerm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phi: Option<Vec<RawTerm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    psi: Option<Vec<RawTerm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rep: Option<RawRep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    t: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    product: Option<RawProduct>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    checks: Vec<String>,
}

/// A validated instance file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    pub alpha: TwistMap,
    pub mu: Cochain,
    pub delta: Option<BigElement>,
    pub phi: Option<BigElement>,
    pub psi: Option<BigElement>,
    pub n: Option<Matrix>,
    pub rep: Option<Representation>,
    pub t: Option<Matrix>,
    pub product: Option<RightSymmetricAlgebra>,
    /// Checks the instance is declared to pass.
    pub checks: Vec<String>,
}

fn perr(field: &str, msg: impl fmt::Display) -> Error {
    Error::ParseError(format!("{field}: {msg}"))
}

fn parse_vec(raw: &[RawRational], field: &str) -> Result<Vec<Rational>> {
    raw.iter().enumerate().map(|(i, r)| r.parse(&format!("{field}[{i}]"))).collect()
}

fn parse_matrix(raw: &RawMatrix, rows: usize, cols: usize, field: &str) -> Result<Matrix> {
    if raw.len() != rows {
        return Err(perr(field, format!("expected {rows} rows, found {}", raw.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for (i, row) in raw.iter().enumerate() {
        if row.len() != cols {
            return Err(perr(&format!("{field}[{i}]"), format!("expected {cols} entries, found {}", row.len())));
        }
        out.push(parse_vec(row, &format!("{field}[{i}]"))?);
    }
    if rows == 0 {
        return Ok(Matrix::zeros(0, cols));
    }
    Matrix::from_rows(out)
}

fn parse_twist(raw: &RawMatrix, dim: usize, field: &str) -> Result<TwistMap> {
    let m = parse_matrix(raw, dim, dim, field)?;
    TwistMap::new(m).map_err(|e| match e {
        Error::NotInvertible => Error::NotInvertible,
        other => perr(field, other),
    })
}

/// Converts 1-based indices to 0-based, checking the range.
fn indices(raw: &[usize], dim: usize, field: &str) -> Result<Vec<usize>> {
    raw.iter()
        .map(
            |&i| {
                if i == 0 || i > dim {
                    Err(perr(field, format!("index {i} out of range 1..={dim}")))
                } else {
                    Ok(i - 1)
                }
            },
        )
        .collect()
}

/// Sorts indices and returns the permutation sign, rejecting repeats.
fn sorted(mut idx: Vec<usize>, field: &str) -> Result<(MultiIndex, bool)> {
    let neg = sort_sign(&mut idx).ok_or_else(|| perr(field, "repeated index"))?;
    Ok((MultiIndex::from_indices(&idx)?, neg))
}

fn parse_values(raw: &[RawValue], dim: usize, target: usize, arity: usize, field: &str) -> Result<Cochain> {
    let mut c = Cochain::zero(dim, target, arity);
    let mut seen = std::collections::BTreeSet::new();
    for (k, v) in raw.iter().enumerate() {
        let f = format!("{field}[{k}]");
        if v.args.len() != arity {
            return Err(perr(&f, format!("expected {arity} arguments, found {}", v.args.len())));
        }
        let (args, neg) = sorted(indices(&v.args, dim, &format!("{f}.args"))?, &format!("{f}.args"))?;
        if !seen.insert(args) {
            return Err(perr(&f, "arguments listed twice"));
        }
        if v.value.len() != target {
            return Err(perr(&format!("{f}.value"), format!("expected {target} entries, found {}", v.value.len())));
        }
        let mut value = parse_vec(&v.value, &format!("{f}.value"))?;
        if neg {
            value.iter_mut().for_each(|x| *x = -x.clone());
        }
        c.set(args, value);
    }
    Ok(c)
}

fn parse_terms(raw: &[RawTerm], dim: usize, field: &str) -> Result<BigElement> {
    let mut out = BigElement::zero(dim);
    for (k, t) in raw.iter().enumerate() {
        let f = format!("{field}[{k}]");
        let (cov, n1) = sorted(indices(&t.cov, dim, &format!("{f}.cov"))?, &format!("{f}.cov"))?;
        let (vec, n2) = sorted(indices(&t.vec, dim, &format!("{f}.vec"))?, &format!("{f}.vec"))?;
        let mut c = t.coeff.parse(&format!("{f}.coeff"))?;
        if n1 != n2 {
            c = -c;
        }
        out.add_term(cov, vec, c);
    }
    Ok(out)
}

fn parse_rep(raw: &RawRep, dim: usize) -> Result<Representation> {
    if raw.rho.len() != dim {
        return Err(perr("rep.rho", format!("expected {dim} matrices, found {}", raw.rho.len())));
    }
    let rho = raw
        .rho
        .iter()
        .enumerate()
        .map(|(i, m)| parse_matrix(m, raw.wdim, raw.wdim, &format!("rep.rho[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let beta = parse_twist(&raw.beta, raw.wdim, "rep.beta")?;
    Representation::new(rho, beta)
}

fn parse_product(raw: &RawProduct, dim: usize) -> Result<RightSymmetricAlgebra> {
    let gamma = parse_twist(&raw.gamma, dim, "product.gamma")?;
    let mut table = vec![vec![vec![Rational::from_integer(0.into()); dim]; dim]; dim];
    let mut seen = std::collections::BTreeSet::new();
    for (k, v) in raw.table.iter().enumerate() {
        let f = format!("product.table[{k}]");
        if v.args.len() != 2 {
            return Err(perr(&f, "expected 2 arguments"));
        }
        let a = indices(&v.args, dim, &format!("{f}.args"))?;
        if !seen.insert((a[0], a[1])) {
            return Err(perr(&f, "arguments listed twice"));
        }
        if v.value.len() != dim {
            return Err(perr(&format!("{f}.value"), format!("expected {dim} entries")));
        }
        table[a[0]][a[1]] = parse_vec(&v.value, &format!("{f}.value"))?;
    }
    RightSymmetricAlgebra::new(table, gamma)
}

fn json_error(e: serde_json::Error) -> Error {
    Error::ParseError(format!("line {} column {}: {e}", e.line(), e.column()))
}

impl Instance {
    pub fn parse(text: &str) -> Result<Instance> {
        let raw: RawInstance = serde_json::from_str(text).map_err(json_error)?;
        let dim = raw.dim;
        if dim > MAX_DIM {
            return Err(perr("dim", format!("at most {MAX_DIM} is supported")));
        }
        let alpha = parse_twist(&raw.alpha, dim, "alpha")?;
        let mu_entries: Vec<RawValue> = raw.mu.iter().map(RawMuEntry::normalize).collect();
        let mu = parse_values(&mu_entries, dim, dim, 2, "mu")?;
        let terms = |r: &Option<Vec<RawTerm>>, f: &str| r.as_ref().map(|t| parse_terms(t, dim, f)).transpose();
        let rep = raw.rep.as_ref().map(|r| parse_rep(r, dim)).transpose()?;
        let t = match &raw.t {
            Some(m) => {
                let w = rep.as_ref().ok_or_else(|| perr("t", "requires `rep`"))?.wdim();
                Some(parse_matrix(m, dim, w, "t")?)
            }
            None => None,
        };
        Ok(Instance {
            name: raw.name,
            alpha,
            mu,
            delta: terms(&raw.delta, "delta")?,
            phi: terms(&raw.phi, "phi")?,
            psi: terms(&raw.psi, "psi")?,
            n: raw.n.as_ref().map(|m| parse_matrix(m, dim, dim, "n")).transpose()?,
            rep,
            t,
            product: raw.product.as_ref().map(|p| parse_product(p, dim)).transpose()?,
            checks: raw.checks,
        })
    }

    pub fn from_path(path: &std::path::Path) -> Result<Instance> {
        let text = std::fs::read_to_string(path).map_err(|e| perr(&path.display().to_string(), e))?;
        Instance::parse(&text)
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim()
    }

    /// The algebra without certification; verifiers report on it.
    pub fn algebra_unchecked(&self) -> HomLieAlgebra {
        HomLieAlgebra::new_unchecked(self.mu.clone(), self.alpha.clone())
    }

    /// The algebra, certified as hom-Lie.
    pub fn algebra(&self) -> Result<HomLieAlgebra> {
        HomLieAlgebra::new(self.mu.clone(), self.alpha.clone())
    }

    /// The canonical text form: sorted, zero-free, pretty-printed JSON.
    pub fn to_json_string(&self) -> String {
        let raw = RawInstance {
            name: self.name.clone(),
            dim: self.dim(),
            alpha: raw_matrix(self.alpha.forward()),
            mu: raw_values(&self.mu).into_iter().map(RawMuEntry::Full).collect(),
            delta: self.delta.as_ref().map(raw_terms),
            phi: self.phi.as_ref().map(raw_terms),
            psi: self.psi.as_ref().map(raw_terms),
            n: self.n.as_ref().map(raw_matrix),
            rep: self.rep.as_ref().map(|r| RawRep {
                wdim: r.wdim(),
                rho: r.rho_matrices().iter().map(raw_matrix).collect(),
                beta: raw_matrix(r.beta().forward()),
            }),
            t: self.t.as_ref().map(raw_matrix),
            product: self
                .product
                .as_ref()
                .map(|p| RawProduct { table: raw_table(p), gamma: raw_matrix(p.gamma().forward()) }),
            checks: self.checks.clone(),
        };
        let mut s = serde_json::to_string_pretty(&raw).expect("serializable");
        s.push('\n');
        s
    }
}

fn raw_vec(v: &[Rational]) -> Vec<RawRational> {
    v.iter().map(RawRational::from).collect()
}

fn raw_matrix(m: &Matrix) -> RawMatrix {
    m.to_rows().iter().map(|r| raw_vec(r)).collect()
}

fn raw_values(c: &Cochain) -> Vec<RawValue> {
    c.values().iter().map(|(k, v)| RawValue { args: k.iter().map(|i| i + 1).collect(), value: raw_vec(v) }).collect()
}

fn raw_terms(b: &BigElement) -> Vec<RawTerm> {
    b.terms()
        .iter()
        .map(|((c, v), x)| RawTerm {
            cov: c.iter().map(|i| i + 1).collect(),
            vec: v.iter().map(|i| i + 1).collect(),
            coeff: RawRational::from(x),
        })
        .collect()
}

fn raw_table(p: &RightSymmetricAlgebra) -> Vec<RawValue> {
    let mut out = Vec::new();
    for (i, row) in p.table().iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if v.iter().any(|x| x != &Rational::from_integer(0.into())) {
                out.push(RawValue { args: vec![i + 1, j + 1], value: raw_vec(v) });
            }
        }
    }
    out
}

/// Parses a standalone matrix file (a list of rows).
pub fn parse_matrix_text(text: &str, rows: usize, cols: usize) -> Result<Matrix> {
    let raw: RawMatrix = serde_json::from_str(text).map_err(json_error)?;
    parse_matrix(&raw, rows, cols, "matrix")
}

/// Parses a standalone square matrix file of unknown size.
pub fn parse_square_matrix_text(text: &str) -> Result<Matrix> {
    let raw: RawMatrix = serde_json::from_str(text).map_err(json_error)?;
    let n = raw.len();
    parse_matrix(&raw, n, n, "matrix")
}

/// Parses a standalone representation file `{wdim, rho, beta}`.
pub fn parse_rep_text(text: &str, dim: usize) -> Result<Representation> {
    let raw: RawRep = serde_json::from_str(text).map_err(json_error)?;
    parse_rep(&raw, dim)
}

/// Parses a standalone element file (a list of `{cov, vec, coeff}` terms).
pub fn parse_element_text(text: &str, dim: usize) -> Result<BigElement> {
    let raw: Vec<RawTerm> = serde_json::from_str(text).map_err(json_error)?;
    parse_terms(&raw, dim, "element")
}

/// Canonical JSON for a matrix.
pub fn matrix_json(m: &Matrix) -> serde_json::Value {
    serde_json::to_value(raw_matrix(m)).expect("serializable")
}

/// Canonical JSON for a cochain's values.
pub fn cochain_json(c: &Cochain) -> serde_json::Value {
    serde_json::to_value(raw_values(c)).expect("serializable")
}

/// Canonical JSON for an element of the exterior algebra.
pub fn element_json(b: &BigElement) -> serde_json::Value {
    serde_json::to_value(raw_terms(b)).expect("serializable")
}
