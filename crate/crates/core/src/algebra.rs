//! Lie algebras given by structure constants and invariant complex structures.
//!
//! Indices are 0-based in this API. `[e_i, e_j] = Σ_k c^k_{ij} e_k`, and only
//! `i < j` is stored; antisymmetry supplies the rest.

use std::fmt;

use thiserror::Error;

use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(f, "({},{},{}) residual [", i + 1, j + 1, k + 1)?;
        for (n, c) in self.residual.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("a Lie algebra must have dimension at least 1")]
    ZeroDimension,
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket [e{0}, e{0}] must not be specified")]
    RepeatedIndex(usize),
    #[error("Jacobi identity fails on {}", join(.0))]
    JacobiViolation(Vec<JacobiViolation>),
    #[error("lower central series stabilizes at dimension {stable_dim}; algebra is not nilpotent")]
    NotNilpotent { stable_dim: usize },
    #[error("complex structure needs even dimension, got {0}")]
    OddDimension(usize),
    #[error("complex structure acts on dimension {cs}, algebra has dimension {algebra}")]
    DimensionMismatch { algebra: usize, cs: usize },
    #[error("complex structure matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("complex structure matrix must have rational entries")]
    NotReal,
    #[error("J^2 != -1")]
    NotAComplexStructure,
    #[error("complex structure is not integrable: [v{}, v{}] leaves g^(1,0)", .0.0 + 1, .0.1 + 1)]
    NotIntegrable((usize, usize)),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl AlgebraError {
    /// True for errors that can only come from a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, AlgebraError::Internal(_))
    }
}

/// Unvalidated antisymmetric bracket tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    // entry for the pair (i, j), i < j, at pair_index(i, j)
    entries: Vec<Vector>,
}

impl StructureConstants {
    pub fn new(dim: usize) -> Self {
        StructureConstants {
            dim,
            entries: vec![vec![GaussianRational::zero(); dim]; dim * dim.saturating_sub(1) / 2],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.dim);
        i * (2 * self.dim - i - 1) / 2 + (j - i - 1)
    }

    fn check(&self, index: usize) -> Result<(), AlgebraError> {
        if index >= self.dim {
            Err(AlgebraError::IndexOutOfRange {
                index,
                dim: self.dim,
            })
        } else {
            Ok(())
        }
    }

    /// Sets `c^k_{ij}`. Passing `i > j` stores `-value` under `(j, i)`.
    pub fn set(
        &mut self,
        i: usize,
        j: usize,
        k: usize,
        value: GaussianRational,
    ) -> Result<(), AlgebraError> {
        self.check(i)?;
        self.check(j)?;
        self.check(k)?;
        if i == j {
            return Err(AlgebraError::RepeatedIndex(i));
        }
        let (a, b, v) = if i < j { (i, j, value) } else { (j, i, -value) };
        let idx = self.pair_index(a, b);
        self.entries[idx][k] = v;
        Ok(())
    }

    /// Builder-style [`set`](Self::set) for integer constants; panics on bad indices.
    pub fn with(mut self, i: usize, j: usize, k: usize, value: i64) -> Self {
        self.set(i, j, k, GaussianRational::from_int(value))
            .expect("valid bracket indices");
        self
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> GaussianRational {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => GaussianRational::zero(),
            std::cmp::Ordering::Less => self.entries[self.pair_index(i, j)][k].clone(),
            std::cmp::Ordering::Greater => -&self.entries[self.pair_index(j, i)][k],
        }
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => vec![GaussianRational::zero(); self.dim],
            std::cmp::Ordering::Less => self.entries[self.pair_index(i, j)].clone(),
            std::cmp::Ordering::Greater => self.entries[self.pair_index(j, i)]
                .iter()
                .map(|c| -c)
                .collect(),
        }
    }

    /// Bilinear extension of the bracket to arbitrary (complex) vectors.
    pub fn bracket(&self, x: &[GaussianRational], y: &[GaussianRational]) -> Vector {
        let mut out = vec![GaussianRational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if i == j || y[j].is_zero() {
                    continue;
                }
                let coeff = &x[i] * &y[j];
                let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
                for (o, c) in out.iter_mut().zip(&self.entries[self.pair_index(a, b)]) {
                    if !c.is_zero() {
                        if sign > 0 {
                            *o += &coeff * c;
                        } else {
                            *o -= &coeff * c;
                        }
                    }
                }
            }
        }
        out
    }

    /// Iterates over nonzero `(i, j, k, c^k_{ij})` with `i < j`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &GaussianRational)> + '_ {
        (0..self.dim).flat_map(move |i| {
            (i + 1..self.dim).flat_map(move |j| {
                self.entries[self.pair_index(i, j)]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(k, c)| (i, j, k, c))
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(GaussianRational::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().flatten().all(GaussianRational::is_real)
    }

    /// Every triple `i < j < k` on which the Jacobi identity fails.
    pub fn jacobi_violations(&self) -> Vec<JacobiViolation> {
        let n = self.dim;
        let unit = |k: usize| {
            let mut v = vec![GaussianRational::zero(); n];
            v[k] = GaussianRational::one();
            v
        };
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let t1 = self.bracket(&self.bracket_basis(i, j), &unit(k));
                    let t2 = self.bracket(&self.bracket_basis(j, k), &unit(i));
                    let t3 = self.bracket(&self.bracket_basis(k, i), &unit(j));
                    let residual: Vector = t1
                        .into_iter()
                        .zip(t2)
                        .zip(t3)
                        .map(|((a, b), c)| a + b + c)
                        .collect();
                    if residual.iter().any(|c| !c.is_zero()) {
                        out.push(JacobiViolation {
                            triple: (i, j, k),
                            residual,
                        });
                    }
                }
            }
        }
        out
    }

    /// Structure constants of the same bracket in the basis given by the
    /// columns of `frame`; `coframe` must be its inverse.
    pub fn change_basis(&self, frame: &Matrix, coframe: &Matrix) -> StructureConstants {
        let basis: Vec<Vector> = (0..frame.cols()).map(|c| frame.column(c)).collect();
        let mut out = StructureConstants::new(self.dim);
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let coords = coframe.apply(&self.bracket(&basis[a], &basis[b]));
                let idx = out.pair_index(a, b);
                out.entries[idx] = coords;
            }
        }
        out
    }
}

/// Coefficient field of a Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarField {
    Rational,
    Gaussian,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LowerCentralSeries {
    pub dims: Vec<usize>,
    pub nilpotency_class: usize,
}

/// A finite-dimensional Lie algebra whose Jacobi identity has been checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    constants: StructureConstants,
    field: ScalarField,
    labels: Option<Vec<String>>,
}

impl LieAlgebra {
    pub fn new(constants: StructureConstants) -> Result<Self, AlgebraError> {
        if constants.dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        let violations = constants.jacobi_violations();
        if !violations.is_empty() {
            return Err(AlgebraError::JacobiViolation(violations));
        }
        let field = if constants.is_real() {
            ScalarField::Rational
        } else {
            ScalarField::Gaussian
        };
        Ok(LieAlgebra {
            constants,
            field,
            labels: None,
        })
    }

    pub fn abelian(dim: usize) -> Result<Self, AlgebraError> {
        Self::new(StructureConstants::new(dim))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim(), "one label per basis vector");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.constants.dim
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn bracket(&self, x: &[GaussianRational], y: &[GaussianRational]) -> Vector {
        self.constants.bracket(x, y)
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_zero()
    }

    /// Dimensions of `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …` down to zero.
    pub fn lower_central_series(&self) -> Result<LowerCentralSeries, AlgebraError> {
        let n = self.dim();
        let mut current = Subspace::span(
            n,
            (0..n).map(|k| {
                let mut v = vec![GaussianRational::zero(); n];
                v[k] = GaussianRational::one();
                v
            }),
        );
        let mut dims = vec![n];
        while current.dim() > 0 {
            let mut gens = Vec::new();
            for i in 0..n {
                let mut e = vec![GaussianRational::zero(); n];
                e[i] = GaussianRational::one();
                for b in current.basis() {
                    gens.push(self.bracket(&e, b));
                }
            }
            let next = Subspace::span(n, gens);
            if next.dim() == current.dim() {
                return Err(AlgebraError::NotNilpotent {
                    stable_dim: next.dim(),
                });
            }
            dims.push(next.dim());
            current = next;
        }
        Ok(LowerCentralSeries {
            nilpotency_class: dims.len() - 1,
            dims,
        })
    }
}

/// A complex structure `J` on a real vector space, with its adapted complex frame.
///
/// The (1,0)-coframe `ω^a` is the reduced echelon basis of covectors with
/// `ω∘J = iω`; `ω̄^a` are the conjugates. The frame `v_1…v_m, v̄_1…v̄_m` is
/// the dual basis, so `v_a` spans `g^{1,0}` (the `+i` eigenspace of `J`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexStructure {
    j: Matrix,
    coframe: Matrix,
    frame: Matrix,
}

impl ComplexStructure {
    /// `j[r][c]` is the `e_r` coefficient of `J e_c`.
    pub fn new(j: Matrix) -> Result<Self, AlgebraError> {
        if j.rows() != j.cols() {
            return Err(AlgebraError::NotSquare {
                rows: j.rows(),
                cols: j.cols(),
            });
        }
        let n = j.rows();
        if n % 2 == 1 {
            return Err(AlgebraError::OddDimension(n));
        }
        if (0..n).any(|r| j.row(r).iter().any(|x| !x.is_real())) {
            return Err(AlgebraError::NotReal);
        }
        let mut minus_id = Matrix::identity(n);
        for k in 0..n {
            minus_id.set(k, k, GaussianRational::from_int(-1));
        }
        if j.mul(&j) != minus_id {
            return Err(AlgebraError::NotAComplexStructure);
        }
        // covectors α (as columns) with Jᵀ α = i α
        let mut shifted = j.transpose();
        for k in 0..n {
            let d = shifted.get(k, k) - GaussianRational::i();
            shifted.set(k, k, d);
        }
        let holo = shifted.kernel();
        let m = n / 2;
        if holo.len() != m {
            return Err(AlgebraError::Internal(format!(
                "(1,0)-covectors span {} dimensions, expected {m}",
                holo.len()
            )));
        }
        let holo = Subspace::span(n, holo).basis().to_vec();
        let mut rows = holo.clone();
        rows.extend(holo.iter().map(|r| r.iter().map(GaussianRational::conj).collect()));
        let coframe = Matrix::from_rows(n, rows);
        let frame = coframe
            .inverse()
            .ok_or_else(|| AlgebraError::Internal("complex coframe is singular".into()))?;
        Ok(ComplexStructure { j, coframe, frame })
    }

    /// The standard structure `J e_{2a} = e_{2a+1}`, `J e_{2a+1} = -e_{2a}` (0-based).
    pub fn standard(n: usize) -> Result<Self, AlgebraError> {
        if n % 2 == 1 {
            return Err(AlgebraError::OddDimension(n));
        }
        let mut j = Matrix::zeros(n, n);
        for a in 0..n / 2 {
            j.set(2 * a + 1, 2 * a, GaussianRational::one());
            j.set(2 * a, 2 * a + 1, GaussianRational::from_int(-1));
        }
        Self::new(j)
    }

    pub fn dim(&self) -> usize {
        self.j.rows()
    }

    pub fn complex_dim(&self) -> usize {
        self.j.rows() / 2
    }

    pub fn matrix(&self) -> &Matrix {
        &self.j
    }

    /// Rows `ω^1…ω^m, ω̄^1…ω̄^m` in the real dual basis `e^1…e^n`.
    pub fn coframe(&self) -> &Matrix {
        &self.coframe
    }

    /// Columns `v_1…v_m, v̄_1…v̄_m` in the real basis.
    pub fn frame(&self) -> &Matrix {
        &self.frame
    }

    pub fn holomorphic_vector(&self, a: usize) -> Vector {
        self.frame.column(a)
    }

    pub fn antiholomorphic_vector(&self, a: usize) -> Vector {
        self.frame.column(self.complex_dim() + a)
    }

    /// Coordinates of a complex vector in the frame `(v, v̄)`.
    pub fn frame_coordinates(&self, x: &[GaussianRational]) -> Vector {
        self.coframe.apply(x)
    }

    /// Entries of `J` are rational by construction; rationality is relative to the input basis.
    pub fn is_rational(&self) -> bool {
        true
    }
}

fn check_dims(g: &LieAlgebra, cs: &ComplexStructure) -> Result<(), AlgebraError> {
    if g.dim() % 2 == 1 {
        return Err(AlgebraError::OddDimension(g.dim()));
    }
    if g.dim() != cs.dim() {
        return Err(AlgebraError::DimensionMismatch {
            algebra: g.dim(),
            cs: cs.dim(),
        });
    }
    Ok(())
}

/// Structure constants of `g ⊗ ℂ` in the frame `(v_1…v_m, v̄_1…v̄_m)`.
pub fn complexify(g: &LieAlgebra, cs: &ComplexStructure) -> Result<StructureConstants, AlgebraError> {
    check_dims(g, cs)?;
    Ok(g.constants().change_basis(cs.frame(), cs.coframe()))
}

/// First pair `(a, b)` of `g^{1,0}` frame vectors whose bracket leaves `g^{1,0}`.
pub fn integrability_witness(
    g: &LieAlgebra,
    cs: &ComplexStructure,
) -> Result<Option<(usize, usize)>, AlgebraError> {
    let c = complexify(g, cs)?;
    let m = cs.complex_dim();
    for a in 0..m {
        for b in a + 1..m {
            if (m..2 * m).any(|k| !c.get(a, b, k).is_zero()) {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// `[g^{1,0}, g^{1,0}] ⊆ g^{1,0}`.
pub fn check_integrability(g: &LieAlgebra, cs: &ComplexStructure) -> Result<bool, AlgebraError> {
    Ok(integrability_witness(g, cs)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ClassificationReport {
    pub integrable: bool,
    pub abelian_cs: bool,
    pub bi_invariant: bool,
    pub rational: bool,
    pub nilpotency_class: usize,
    pub lcs_dims: Vec<usize>,
}

pub fn classify(g: &LieAlgebra, cs: &ComplexStructure) -> Result<ClassificationReport, AlgebraError> {
    if let Some(w) = integrability_witness(g, cs)? {
        return Err(AlgebraError::NotIntegrable(w));
    }
    let lcs = g.lower_central_series()?;
    let c = complexify(g, cs)?;
    let m = cs.complex_dim();
    let n = 2 * m;
    let vanishes = |a: usize, b: usize| (0..n).all(|k| c.get(a, b, k).is_zero());
    let abelian_cs = (0..m).all(|a| (a + 1..m).all(|b| vanishes(a, b)));
    let bi_invariant = (0..m).all(|a| (m..n).all(|b| vanishes(a, b)));
    Ok(ClassificationReport {
        integrable: true,
        abelian_cs,
        bi_invariant,
        rational: cs.is_rational(),
        nilpotency_class: lcs.nilpotency_class,
        lcs_dims: lcs.dims,
    })
}

/// The bracket on `g ⊗ ℂ` dual to `∂̄`, in the frame `(v, v̄)`:
/// zero on `g^{1,0} × g^{1,0}`, the `(1,0)` part on mixed pairs, and the
/// ordinary bracket on `g^{0,1} × g^{0,1}`.
pub fn dolbeault_bracket(g: &LieAlgebra, cs: &ComplexStructure) -> Result<LieAlgebra, AlgebraError> {
    if let Some(w) = integrability_witness(g, cs)? {
        return Err(AlgebraError::NotIntegrable(w));
    }
    let c = complexify(g, cs)?;
    let m = cs.complex_dim();
    let n = 2 * m;
    let mut out = StructureConstants::new(n);
    for a in 0..n {
        for b in a + 1..n {
            let targets = match (a < m, b < m) {
                (true, true) => 0..0,
                (true, false) => 0..m,
                _ => 0..n,
            };
            for k in targets {
                let v = c.get(a, b, k);
                if !v.is_zero() {
                    out.set(a, b, k, v)?;
                }
            }
        }
    }
    let labels = (1..=m)
        .map(|a| format!("v{a}"))
        .chain((1..=m).map(|a| format!("V{a}")))
        .collect();
    let algebra = LieAlgebra::new(out)
        .map_err(|e| AlgebraError::Internal(format!("dbar-bracket: {e}")))?
        .with_labels(labels);
    algebra
        .lower_central_series()
        .map_err(|e| AlgebraError::Internal(format!("dbar-bracket: {e}")))?;
    Ok(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn heisenberg() -> StructureConstants {
        StructureConstants::new(3).with(0, 1, 2, 1)
    }

    fn kt() -> (LieAlgebra, ComplexStructure) {
        let g = LieAlgebra::new(StructureConstants::new(4).with(0, 1, 2, 1)).unwrap();
        (g, ComplexStructure::standard(4).unwrap())
    }

    fn iwasawa() -> (LieAlgebra, ComplexStructure) {
        let sc = StructureConstants::new(6)
            .with(0, 2, 4, 1)
            .with(1, 3, 4, -1)
            .with(0, 3, 5, 1)
            .with(1, 2, 5, 1);
        (LieAlgebra::new(sc).unwrap(), ComplexStructure::standard(6).unwrap())
    }

    fn c(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(re.into(), im.into())
    }

    fn vec_of(xs: &[(i64, i64)]) -> Vector {
        xs.iter().map(|&(a, b)| c(a, b)).collect()
    }

    #[test]
    fn validate_examples() {
        assert!(LieAlgebra::new(heisenberg()).is_ok());
        assert!(LieAlgebra::abelian(5).unwrap().is_abelian());
        let bad = StructureConstants::new(3).with(0, 1, 2, 1).with(0, 2, 0, 1);
        let Err(AlgebraError::JacobiViolation(v)) = LieAlgebra::new(bad) else {
            panic!("expected a Jacobi violation")
        };
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].triple, (0, 1, 2));
        assert_eq!(v[0].residual, vec_of(&[(0, 0), (0, 0), (-1, 0)]));
        assert_eq!(LieAlgebra::abelian(0), Err(AlgebraError::ZeroDimension));
        let mut sc = StructureConstants::new(3);
        assert_eq!(
            sc.set(0, 3, 1, GaussianRational::one()),
            Err(AlgebraError::IndexOutOfRange { index: 3, dim: 3 })
        );
        assert_eq!(
            sc.set(1, 1, 0, GaussianRational::one()),
            Err(AlgebraError::RepeatedIndex(1))
        );
    }

    #[test]
    fn antisymmetric_storage() {
        let mut sc = StructureConstants::new(3);
        sc.set(1, 0, 2, GaussianRational::one()).unwrap();
        assert_eq!(sc.get(0, 1, 2), GaussianRational::from_int(-1));
        assert_eq!(sc.bracket_basis(1, 0), vec_of(&[(0, 0), (0, 0), (1, 0)]));
        assert_eq!(sc.bracket_basis(2, 2), vec_of(&[(0, 0); 3]));
    }

    #[test]
    fn lower_central_series_examples() {
        let h3 = LieAlgebra::new(heisenberg()).unwrap().lower_central_series().unwrap();
        assert_eq!(h3.dims, vec![3, 1, 0]);
        assert_eq!(h3.nilpotency_class, 2);
        let ab = LieAlgebra::abelian(4).unwrap().lower_central_series().unwrap();
        assert_eq!(ab.dims, vec![4, 0]);
        assert_eq!(ab.nilpotency_class, 1);
        let solvable = LieAlgebra::new(StructureConstants::new(2).with(0, 1, 1, 1)).unwrap();
        assert_eq!(
            solvable.lower_central_series(),
            Err(AlgebraError::NotNilpotent { stable_dim: 1 })
        );
        let (iw, _) = iwasawa();
        assert_eq!(iw.lower_central_series().unwrap().dims, vec![6, 2, 0]);
    }

    #[test]
    fn frame_is_adapted() {
        let (_, cs) = kt();
        // ω¹ = e¹ + i e², ω² = e³ + i e⁴
        assert_eq!(cs.coframe().row(0), vec_of(&[(1, 0), (0, 1), (0, 0), (0, 0)]).as_slice());
        assert_eq!(cs.coframe().row(3), vec_of(&[(0, 0), (0, 0), (1, 0), (0, -1)]).as_slice());
        // v₁ = (e₁ - i e₂)/2, and J v = i v
        let v1 = cs.holomorphic_vector(0);
        let half = GaussianRational::ratio(1, 2);
        assert_eq!(v1[0], half);
        assert_eq!(v1[1], -half.mul_i());
        for a in 0..2 {
            let v = cs.holomorphic_vector(a);
            let jv = cs.matrix().apply(&v);
            let iv: Vector = v.iter().map(GaussianRational::mul_i).collect();
            assert_eq!(jv, iv);
            let vbar: Vector = v.iter().map(GaussianRational::conj).collect();
            assert_eq!(cs.antiholomorphic_vector(a), vbar);
        }
    }

    #[test]
    fn rejects_bad_complex_structures() {
        assert_eq!(
            ComplexStructure::new(Matrix::identity(3)).unwrap_err(),
            AlgebraError::OddDimension(3)
        );
        assert_eq!(
            ComplexStructure::new(Matrix::identity(2)).unwrap_err(),
            AlgebraError::NotAComplexStructure
        );
        let mut j = Matrix::zeros(2, 2);
        j.set(0, 1, GaussianRational::i());
        j.set(1, 0, GaussianRational::i());
        assert_eq!(ComplexStructure::new(j).unwrap_err(), AlgebraError::NotReal);
        assert_eq!(
            ComplexStructure::new(Matrix::zeros(2, 3)).unwrap_err(),
            AlgebraError::NotSquare { rows: 2, cols: 3 }
        );
    }

    #[test]
    fn integrability_examples() {
        let (g, cs) = kt();
        assert!(check_integrability(&g, &cs).unwrap());
        // J e1 = e3, J e2 = e4
        let mut j = Matrix::zeros(4, 4);
        j.set(2, 0, GaussianRational::one());
        j.set(0, 2, GaussianRational::from_int(-1));
        j.set(3, 1, GaussianRational::one());
        j.set(1, 3, GaussianRational::from_int(-1));
        let bad = ComplexStructure::new(j).unwrap();
        assert!(!check_integrability(&g, &bad).unwrap());
        assert_eq!(classify(&g, &bad), Err(AlgebraError::NotIntegrable((0, 1))));
        // [e1 - i e3, e2 - i e4] = e3 ∉ g^{1,0}
        let x = vec_of(&[(1, 0), (0, 0), (0, -1), (0, 0)]);
        let y = vec_of(&[(0, 0), (1, 0), (0, 0), (0, -1)]);
        assert_eq!(g.bracket(&x, &y), vec_of(&[(0, 0), (0, 0), (1, 0), (0, 0)]));
        let ab = LieAlgebra::abelian(4).unwrap();
        assert!(check_integrability(&ab, &bad).unwrap());
        let g3 = LieAlgebra::new(heisenberg()).unwrap();
        assert_eq!(
            check_integrability(&g3, &ComplexStructure::standard(2).unwrap()),
            Err(AlgebraError::OddDimension(3))
        );
    }

    #[test]
    fn classify_examples() {
        let (g, cs) = kt();
        let r = classify(&g, &cs).unwrap();
        assert!(r.integrable && r.abelian_cs && !r.bi_invariant && r.rational);
        assert_eq!(r.lcs_dims, vec![4, 1, 0]);
        // [X, X̄] = 2i e3 for X = e1 - i e2
        let x = vec_of(&[(1, 0), (0, -1), (0, 0), (0, 0)]);
        let xbar: Vector = x.iter().map(GaussianRational::conj).collect();
        assert_eq!(g.bracket(&x, &xbar), vec_of(&[(0, 0), (0, 0), (0, 2), (0, 0)]));

        let (g, cs) = iwasawa();
        let r = classify(&g, &cs).unwrap();
        assert!(!r.abelian_cs && r.bi_invariant);

        let t = LieAlgebra::abelian(4).unwrap();
        let r = classify(&t, &ComplexStructure::standard(4).unwrap()).unwrap();
        assert!(r.abelian_cs && r.bi_invariant);
        assert_eq!(r.nilpotency_class, 1);
    }

    #[test]
    fn dolbeault_bracket_examples() {
        let t = LieAlgebra::abelian(2).unwrap();
        assert!(dolbeault_bracket(&t, &ComplexStructure::standard(2).unwrap())
            .unwrap()
            .is_abelian());

        let (g, cs) = iwasawa();
        let db = dolbeault_bracket(&g, &cs).unwrap();
        let full = complexify(&g, &cs).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                if a < 3 || b < 3 {
                    assert!(db.constants().bracket_basis(a, b).iter().all(|x| x.is_zero()));
                } else {
                    assert_eq!(db.constants().bracket_basis(a, b), full.bracket_basis(a, b));
                }
            }
        }
        // the (0,1) part is a complex Heisenberg algebra
        assert!(!db.is_abelian());
        assert_eq!(db.lower_central_series().unwrap().dims, vec![6, 1, 0]);

        let (g, cs) = kt();
        let db = dolbeault_bracket(&g, &cs).unwrap();
        // in frame units X = 2v₁, Y = 2v₂: [X, X̄]_∂̄ = i·Y
        let mut x = vec![GaussianRational::zero(); 4];
        x[0] = GaussianRational::from_int(2);
        let mut xbar = vec![GaussianRational::zero(); 4];
        xbar[2] = GaussianRational::from_int(2);
        let mut iy = vec![GaussianRational::zero(); 4];
        iy[1] = c(0, 2);
        assert_eq!(db.bracket(&x, &xbar), iy);
        let nonzero: Vec<_> = db.constants().nonzero().map(|(i, j, k, _)| (i, j, k)).collect();
        assert_eq!(nonzero, vec![(0, 2, 1)]);
    }
}
