//! JSON input documents.
//!
//! ```json
//! {
//!   "name": "kodaira_thurston",
//!   "dim": 4,
//!   "brackets": [{"x": 1, "y": 2, "value": {"3": "1"}}],
//!   "complex_structure": {"kind": "endomorphism",
//!                         "matrix": [["0","-1","0","0"], ["1","0","0","0"],
//!                                    ["0","0","0","-1"], ["0","0","1","0"]]}
//! }
//! ```
//!
//! Indices are 1-based and `matrix[r][c]` is the `e_r` coefficient of `J e_c`.
//! A `"coframe"` structure instead lists `dω^a` for each `(1,0)`-form, with
//! `ω^a = e^{2a−1} + i e^{2a}`; brackets must then be omitted.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{self, AlgebraError, ComplexStructure, LieAlgebra, StructureConstants};
use crate::cohomology::MAX_DIM;
use crate::exterior::{self, BasisKind, Form};
use crate::linalg::Matrix;
use crate::scalar::{parse_scalar, GaussianRational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("cannot read {path}: {reason}")]
    Read { path: String, reason: String },
    #[error("parse error at {location}: {reason}")]
    ParseError { location: Location, reason: String },
    #[error("invalid {field}: {reason}")]
    ValidationError { field: String, reason: String },
}

fn invalid(field: impl Into<String>, reason: impl ToString) -> IoError {
    IoError::ValidationError {
        field: field.into(),
        reason: reason.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub x: usize,
    pub y: usize,
    pub value: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ComplexStructureSpec {
    Endomorphism { matrix: Vec<Vec<String>> },
    Coframe { equations: Vec<Vec<String>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    pub complex_structure: ComplexStructureSpec,
}

/// A validated document: nilpotent, Jacobi-checked, with an integrable complex structure.
#[derive(Clone, Debug)]
pub struct Input {
    pub name: String,
    pub algebra: LieAlgebra,
    pub complex_structure: ComplexStructure,
}

pub fn parse(text: &str) -> Result<InputDocument, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::ParseError {
        location: Location {
            line: e.line(),
            column: e.column(),
        },
        reason: e.to_string(),
    })
}

pub fn load(path: impl AsRef<Path>) -> Result<InputDocument, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| IoError::Read {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse(&text)
}

fn scalar(field: impl Into<String>, text: &str) -> Result<GaussianRational, IoError> {
    let field = field.into();
    parse_scalar(text).map_err(|e| invalid(field, e))
}

fn cs_error(e: AlgebraError) -> IoError {
    match e {
        AlgebraError::OddDimension(_) | AlgebraError::DimensionMismatch { .. } => invalid("dim", e),
        _ => invalid("complex_structure.matrix", e),
    }
}

impl InputDocument {
    /// Validates the document and builds the algebra and complex structure.
    pub fn validate(&self) -> Result<Input, IoError> {
        if self.dim == 0 {
            return Err(invalid("dim", "must be at least 1"));
        }
        if self.dim > MAX_DIM {
            return Err(invalid("dim", format!("exceeds the supported maximum {MAX_DIM}")));
        }
        let (constants, j) = match &self.complex_structure {
            ComplexStructureSpec::Endomorphism { matrix } => (self.constants()?, self.matrix(matrix)?),
            ComplexStructureSpec::Coframe { equations } => {
                if !self.brackets.is_empty() {
                    return Err(invalid("brackets", "must be empty when the complex structure is given by a coframe"));
                }
                coframe_to_constants(self.dim, equations)?
            }
        };
        let algebra = LieAlgebra::new(constants).map_err(|e| invalid("brackets", e))?;
        algebra.lower_central_series().map_err(|e| invalid("brackets", e))?;
        let cs = ComplexStructure::new(j).map_err(cs_error)?;
        if cs.dim() != algebra.dim() {
            return Err(invalid("dim", "complex structure and algebra dimensions differ"));
        }
        if let Some(w) = algebra::integrability_witness(&algebra, &cs).map_err(cs_error)? {
            return Err(invalid("complex_structure", AlgebraError::NotIntegrable(w)));
        }
        if let ComplexStructureSpec::Coframe { equations } = &self.complex_structure {
            let derived = coframe_equations(&algebra, &cs).map_err(|e| invalid("complex_structure", e))?;
            let given = parse_equations(self.dim / 2, equations)?;
            if derived != given {
                return Err(invalid(
                    "complex_structure.equations",
                    "re-derived coframe equations differ from the input",
                ));
            }
        }
        Ok(Input {
            name: self.name.clone(),
            algebra,
            complex_structure: cs,
        })
    }

    fn constants(&self) -> Result<StructureConstants, IoError> {
        let n = self.dim;
        let mut c = StructureConstants::new(n);
        let mut seen = BTreeMap::new();
        for (idx, b) in self.brackets.iter().enumerate() {
            let field = |f: &str| format!("brackets[{idx}].{f}");
            for (name, v) in [("x", b.x), ("y", b.y)] {
                if v == 0 || v > n {
                    return Err(invalid(field(name), format!("index {v} outside 1..={n}")));
                }
            }
            if b.x >= b.y {
                return Err(invalid(field("y"), format!("need x < y, got x = {}, y = {}", b.x, b.y)));
            }
            if let Some(prev) = seen.insert((b.x, b.y), idx) {
                return Err(invalid(field("x"), format!("bracket [e{}, e{}] already given in brackets[{prev}]", b.x, b.y)));
            }
            for (key, text) in &b.value {
                let k: usize = key
                    .parse()
                    .ok()
                    .filter(|k| (1..=n).contains(k))
                    .ok_or_else(|| invalid(field("value"), format!("key '{key}' is not an index in 1..={n}")))?;
                let v = scalar(field(&format!("value.{key}")), text)?;
                c.set(b.x - 1, b.y - 1, k - 1, v).map_err(|e| invalid(field("value"), e))?;
            }
        }
        Ok(c)
    }

    fn matrix(&self, rows: &[Vec<String>]) -> Result<Matrix, IoError> {
        let n = self.dim;
        if rows.len() != n {
            return Err(invalid("complex_structure.matrix", format!("expected {n} rows, got {}", rows.len())));
        }
        let mut m = Matrix::zeros(n, n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(invalid(
                    format!("complex_structure.matrix[{r}]"),
                    format!("expected {n} entries, got {}", row.len()),
                ));
            }
            for (c, text) in row.iter().enumerate() {
                m.set(r, c, scalar(format!("complex_structure.matrix[{r}][{c}]"), text)?);
            }
        }
        Ok(m)
    }

    /// Canonical document with an explicit endomorphism.
    pub fn from_algebra(name: impl Into<String>, g: &LieAlgebra, cs: &ComplexStructure) -> Self {
        let n = g.dim();
        let mut entries: BTreeMap<(usize, usize), BTreeMap<String, String>> = BTreeMap::new();
        for (i, j, k, v) in g.constants().nonzero() {
            entries
                .entry((i + 1, j + 1))
                .or_default()
                .insert((k + 1).to_string(), v.to_string());
        }
        let brackets = entries
            .into_iter()
            .map(|((x, y), value)| BracketEntry { x, y, value })
            .collect();
        let matrix = (0..n)
            .map(|r| (0..n).map(|c| cs.matrix().get(r, c).to_string()).collect())
            .collect();
        InputDocument {
            name: name.into(),
            dim: n,
            brackets,
            complex_structure: ComplexStructureSpec::Endomorphism { matrix },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

/// `dω^a` for every `(1,0)`-form of the coframe.
pub fn coframe_equations(g: &LieAlgebra, cs: &ComplexStructure) -> Result<Vec<Form>, exterior::ExteriorError> {
    let split = exterior::hodge_split(g, cs)?;
    Ok((0..cs.complex_dim()).map(|a| split.d.on_generator(a).clone()).collect())
}

/// Coframe equations rendered as the term lists used in documents.
pub fn render_equations(eqs: &[Form]) -> Vec<Vec<String>> {
    eqs.iter()
        .map(|f| {
            if f.is_zero() {
                Vec::new()
            } else {
                f.to_string().split(" + ").map(str::to_owned).collect()
            }
        })
        .collect()
}

/// Parses a bigraded monomial such as `w12`, `W12`, `w1W2` or `w1^W1` into 0-based generator indices.
pub fn parse_monomial(m: usize, text: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    let mut offset = None;
    for ch in text.chars() {
        match ch {
            'w' => offset = Some(0),
            'W' => offset = Some(m),
            '^' => {}
            d if d.is_ascii_digit() => {
                let base = offset.ok_or_else(|| format!("monomial '{text}' must start with w or W"))?;
                let k = d.to_digit(10).unwrap() as usize;
                if k == 0 || k > m {
                    return Err(format!("index {k} in '{text}' outside 1..={m}"));
                }
                out.push(base + k - 1);
            }
            other => return Err(format!("unexpected character '{other}' in monomial '{text}'")),
        }
    }
    if out.is_empty() {
        return Err(format!("empty monomial '{text}'"));
    }
    Ok(out)
}

/// Parses one term: `"<scalar> <monomial>"`, or a bare monomial with optional sign.
pub fn parse_term(m: usize, text: &str) -> Result<Form, String> {
    let text = text.trim();
    let (coeff, mono) = match text.rsplit_once(char::is_whitespace) {
        Some((c, mono)) => (parse_scalar(c).map_err(|e| e.to_string())?, mono),
        None => match text.strip_prefix('-') {
            Some(rest) => (GaussianRational::from_int(-1), rest),
            None => (GaussianRational::one(), text.strip_prefix('+').unwrap_or(text)),
        },
    };
    let idx = parse_monomial(m, mono)?;
    Ok(Form::from_indices(2 * m, BasisKind::Bigraded, &idx, coeff))
}

fn parse_equations(m: usize, equations: &[Vec<String>]) -> Result<Vec<Form>, IoError> {
    if equations.len() != m {
        return Err(invalid(
            "complex_structure.equations",
            format!("expected {m} equations, one per (1,0)-form, got {}", equations.len()),
        ));
    }
    equations
        .iter()
        .enumerate()
        .map(|(a, terms)| {
            let mut f = Form::zero(2 * m, BasisKind::Bigraded);
            for (t, text) in terms.iter().enumerate() {
                let field = format!("complex_structure.equations[{a}][{t}]");
                let term = parse_term(m, text).map_err(|e| invalid(field.clone(), e))?;
                if term.degree() != Some(2) {
                    return Err(invalid(field, "terms must be 2-forms"));
                }
                f = f.add(&term).expect("same basis");
            }
            Ok(f)
        })
        .collect()
}

/// Structure constants and the standard `J` from coframe equations, using
/// `d e^{2a−1} = Re dω^a`, `d e^{2a} = Im dω^a` and `d e^k = −Σ c^k_{ij} e^{ij}`.
fn coframe_to_constants(n: usize, equations: &[Vec<String>]) -> Result<(StructureConstants, Matrix), IoError> {
    if !n.is_multiple_of(2) {
        return Err(invalid("dim", "a coframe needs even dimension"));
    }
    let m = n / 2;
    let eqs = parse_equations(m, equations)?;
    let i = GaussianRational::i();
    let e = |k: usize| Form::generator(n, BasisKind::Real, k);
    let mut images = Vec::with_capacity(n);
    for a in 0..m {
        images.push(e(2 * a).add(&e(2 * a + 1).scale(&i)).expect("same basis"));
    }
    for a in 0..m {
        images.push(e(2 * a).sub(&e(2 * a + 1).scale(&i)).expect("same basis"));
    }
    let mut c = StructureConstants::new(n);
    for (a, f) in eqs.iter().enumerate() {
        let real = f.substitute(&images).expect("degree-one images");
        for (mask, coeff) in real.terms() {
            let ij: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
            let (x, y) = (ij[0], ij[1]);
            let re = GaussianRational::real(coeff.re.clone());
            let im = GaussianRational::real(coeff.im.clone());
            let field = format!("complex_structure.equations[{a}]");
            c.set(x, y, 2 * a, -re).map_err(|e| invalid(field.clone(), e))?;
            c.set(x, y, 2 * a + 1, -im).map_err(|e| invalid(field, e))?;
        }
    }
    let j = ComplexStructure::standard(n).map_err(cs_error)?.matrix().clone();
    Ok((c, j))
}
