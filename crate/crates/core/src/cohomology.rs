//! Exact cohomology of finite cochain complexes, and of the Chevalley–Eilenberg
//! and Dolbeault algebras built from them.
//!
//! Representatives are kernel-basis vectors reduced modulo the echelon basis
//! of the image, kept greedily in kernel order. The Dolbeault complex is
//! handled one row `(Λ^{p,•}, ∂̄)` at a time.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, ComplexStructure, LieAlgebra};
use crate::exterior::{
    self, bigraded_monomials, monomials, BasisKind, Differential, ExteriorError, Form, Mask,
};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::GaussianRational;

/// Largest real dimension accepted; the exterior algebra has `2^n` monomials.
pub const MAX_DIM: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("D∘D != 0 starting in degree {degree}")]
    NotAComplex { degree: usize },
    #[error("matrix of degree {degree} has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    ShapeMismatch {
        degree: usize,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("dimension {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
    #[error("classes come from different cohomology tables ({0} vs {1})")]
    TableMismatch(String, String),
    #[error("form is not closed in {0}")]
    NotClosed(Slot),
    #[error("form does not lie in {0}")]
    WrongSlot(Slot),
    #[error("{0} is outside the complex")]
    OutOfRange(Slot),
    #[error("top cohomology has dimension {dim}, expected 1")]
    TopNotOneDimensional { dim: usize },
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl CohomologyError {
    pub fn is_internal(&self) -> bool {
        match self {
            CohomologyError::NotAComplex { .. } | CohomologyError::TopNotOneDimensional { .. } => true,
            CohomologyError::Exterior(e) => e.is_internal(),
            CohomologyError::Algebra(e) => e.is_internal(),
            _ => false,
        }
    }
}

/// A position in a graded (`Degree`) or bigraded (`Bidegree`) complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Degree(usize),
    Bidegree(usize, usize),
}

impl Slot {
    pub fn total_degree(self) -> usize {
        match self {
            Slot::Degree(k) => k,
            Slot::Bidegree(p, q) => p + q,
        }
    }

    /// Slot of a product.
    pub fn plus(self, other: Slot) -> Option<Slot> {
        match (self, other) {
            (Slot::Degree(a), Slot::Degree(b)) => Some(Slot::Degree(a + b)),
            (Slot::Bidegree(p, q), Slot::Bidegree(r, s)) => Some(Slot::Bidegree(p + r, q + s)),
            _ => None,
        }
    }

    /// Slot one step back along the differential.
    pub fn prev(self) -> Option<Slot> {
        match self {
            Slot::Degree(k) => k.checked_sub(1).map(Slot::Degree),
            Slot::Bidegree(p, q) => q.checked_sub(1).map(|q| Slot::Bidegree(p, q)),
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Degree(k) => write!(f, "degree {k}"),
            Slot::Bidegree(p, q) => write!(f, "bidegree ({p},{q})"),
        }
    }
}

impl Serialize for Slot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            Slot::Degree(k) => [k].serialize(s),
            Slot::Bidegree(p, q) => [p, q].serialize(s),
        }
    }
}

/// `C^0 → C^1 → … → C^top` with `maps[k] : C^k → C^{k+1}`.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl CochainComplex {
    pub fn new(dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self, CohomologyError> {
        assert_eq!(maps.len() + 1, dims.len().max(1), "one map between consecutive degrees");
        for (k, m) in maps.iter().enumerate() {
            if m.rows() != dims[k + 1] || m.cols() != dims[k] {
                return Err(CohomologyError::ShapeMismatch {
                    degree: k,
                    rows: m.rows(),
                    cols: m.cols(),
                    expected_rows: dims[k + 1],
                    expected_cols: dims[k],
                });
            }
        }
        for k in 0..maps.len().saturating_sub(1) {
            if !maps[k + 1].mul(&maps[k]).is_zero() {
                return Err(CohomologyError::NotAComplex { degree: k });
            }
        }
        Ok(CochainComplex { dims, maps })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn map(&self, k: usize) -> &Matrix {
        &self.maps[k]
    }

    fn incoming(&self, k: usize) -> Matrix {
        if k == 0 {
            Matrix::zeros(self.dims[0], 0)
        } else {
            self.maps[k - 1].clone()
        }
    }

    fn outgoing(&self, k: usize) -> Matrix {
        if k < self.maps.len() {
            self.maps[k].clone()
        } else {
            Matrix::zeros(0, self.dims[k])
        }
    }

    /// Cohomology in every degree.
    pub fn cohomology(&self) -> Vec<DegreeCohomology> {
        (0..self.dims.len())
            .map(|k| DegreeCohomology::compute(self.incoming(k), self.outgoing(k)))
            .collect()
    }
}

/// Cohomology of a complex at a single degree, with a fixed representative basis.
#[derive(Clone, Debug)]
pub struct DegreeCohomology {
    d_in: Matrix,
    d_out: Matrix,
    kernel: Vec<Vector>,
    image: Subspace,
    representatives: Vec<Vector>,
    rep_matrix: Matrix,
}

impl DegreeCohomology {
    fn compute(d_in: Matrix, d_out: Matrix) -> Self {
        let dim = d_out.cols();
        let kernel = d_out.kernel();
        let image = Subspace::column_space(&d_in);
        let mut representatives: Vec<Vector> = Vec::new();
        let mut chosen = Subspace::zero(dim);
        for z in &kernel {
            let r = image.reduce(z);
            if !chosen.contains(&r) {
                representatives.push(r);
                chosen = Subspace::span(dim, representatives.iter().cloned());
            }
        }
        assert_eq!(
            representatives.len() + image.dim(),
            kernel.len(),
            "image must lie in the kernel"
        );
        let rep_matrix = Matrix::from_columns(dim, &representatives);
        DegreeCohomology {
            d_in,
            d_out,
            kernel,
            image,
            representatives,
            rep_matrix,
        }
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn cochain_dim(&self) -> usize {
        self.d_out.cols()
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }

    /// Echelon basis of the cocycles.
    pub fn cocycles(&self) -> &[Vector] {
        &self.kernel
    }

    pub fn image_dim(&self) -> usize {
        self.image.dim()
    }

    pub fn representatives(&self) -> &[Vector] {
        &self.representatives
    }

    pub fn is_closed(&self, v: &[GaussianRational]) -> bool {
        self.d_out.apply(v).iter().all(GaussianRational::is_zero)
    }

    pub fn is_exact(&self, v: &[GaussianRational]) -> bool {
        self.image.contains(v)
    }

    /// Coordinates of the class of `v` in the representative basis; `None` if `v` is not closed.
    pub fn class_coordinates(&self, v: &[GaussianRational]) -> Option<Vector> {
        if !self.is_closed(v) {
            return None;
        }
        let reduced = self.image.reduce(v);
        Some(
            self.rep_matrix
                .solve(&reduced)
                .expect("reduced closed vector lies in the span of representatives"),
        )
    }

    /// First solution of `D x = v` in pivot order, if any.
    pub fn primitive(&self, v: &[GaussianRational]) -> Option<Vector> {
        self.d_in.solve(v)
    }
}

/// Generic entry point: cohomology dimensions and representatives of a validated complex.
pub fn complex_cohomology(cx: &CochainComplex) -> Vec<DegreeCohomology> {
    cx.cohomology()
}

/// Which differential a [`FormCohomology`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexKind {
    /// `(Λ* g*, d)`
    DeRham,
    /// `(Λ^{*,*} g*, ∂̄)`
    Dolbeault,
}

/// A cohomology class with a closed representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyClass {
    pub origin: String,
    pub slot: Slot,
    pub representative: Form,
    pub coordinates: Vec<GaussianRational>,
}

impl CohomologyClass {
    /// Index into the representative basis when this class is a basis element.
    pub fn class_id(&self) -> Option<usize> {
        let mut nonzero = self.coordinates.iter().enumerate().filter(|(_, c)| !c.is_zero());
        match (nonzero.next(), nonzero.next()) {
            (Some((k, c)), None) if c.is_one() => Some(k),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(GaussianRational::is_zero)
    }

    pub fn scale(&self, s: &GaussianRational) -> CohomologyClass {
        CohomologyClass {
            origin: self.origin.clone(),
            slot: self.slot,
            representative: self.representative.scale(s),
            coordinates: self.coordinates.iter().map(|c| c * s).collect(),
        }
    }
}

#[derive(Clone, Debug)]
struct SlotData {
    basis: Vec<Mask>,
    h: DegreeCohomology,
}

/// Cohomology of a differential graded algebra of forms, slot by slot.
#[derive(Clone, Debug)]
pub struct FormCohomology {
    label: String,
    kind: ComplexKind,
    differential: Differential,
    slots: BTreeMap<Slot, SlotData>,
}

fn check_size(n: usize) -> Result<(), CohomologyError> {
    if n > MAX_DIM {
        Err(CohomologyError::TooLarge { n, max: MAX_DIM })
    } else {
        Ok(())
    }
}

fn build_row(
    differential: &Differential,
    bases: Vec<Vec<Mask>>,
) -> Result<Vec<(Vec<Mask>, DegreeCohomology)>, CohomologyError> {
    let dims = bases.iter().map(Vec::len).collect();
    let maps = bases
        .windows(2)
        .map(|w| differential.matrix(&w[0], &w[1]))
        .collect();
    let cx = CochainComplex::new(dims, maps)?;
    Ok(bases.into_iter().zip(cx.cohomology()).collect())
}

impl FormCohomology {
    /// Chevalley–Eilenberg cohomology `H*(g)` in the real basis.
    pub fn de_rham(g: &LieAlgebra, label: impl Into<String>) -> Result<Self, CohomologyError> {
        let n = g.dim();
        check_size(n)?;
        let d = exterior::ce_differential(g);
        let bases = (0..=n).map(|k| monomials(n, k)).collect();
        let slots = build_row(&d, bases)?
            .into_iter()
            .enumerate()
            .map(|(k, (basis, h))| (Slot::Degree(k), SlotData { basis, h }))
            .collect();
        Ok(FormCohomology {
            label: label.into(),
            kind: ComplexKind::DeRham,
            differential: d,
            slots,
        })
    }

    /// Dolbeault cohomology `H^{p,q}_∂̄` of the Lie algebra.
    pub fn dolbeault(
        g: &LieAlgebra,
        cs: &ComplexStructure,
        label: impl Into<String>,
    ) -> Result<Self, CohomologyError> {
        check_size(g.dim())?;
        let split = exterior::hodge_split(g, cs)?;
        Self::from_dolbeault_differential(split.delbar, label)
    }

    /// Dolbeault-type cohomology for any `(0,1)`-shifting differential on a bigraded algebra.
    pub fn from_dolbeault_differential(
        delbar: Differential,
        label: impl Into<String>,
    ) -> Result<Self, CohomologyError> {
        let m = delbar.n() / 2;
        let mut slots = BTreeMap::new();
        for p in 0..=m {
            let bases = (0..=m).map(|q| bigraded_monomials(m, p, q)).collect();
            let row = build_row(&delbar, bases).map_err(|e| match e {
                CohomologyError::NotAComplex { degree } => CohomologyError::NotAComplex { degree: p + degree },
                other => other,
            })?;
            for (q, (basis, h)) in row.into_iter().enumerate() {
                slots.insert(Slot::Bidegree(p, q), SlotData { basis, h });
            }
        }
        Ok(FormCohomology {
            label: label.into(),
            kind: ComplexKind::Dolbeault,
            differential: delbar,
            slots,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn differential(&self) -> &Differential {
        &self.differential
    }

    pub fn n(&self) -> usize {
        self.differential.n()
    }

    pub fn basis_kind(&self) -> BasisKind {
        self.differential.kind()
    }

    pub fn slots(&self) -> impl Iterator<Item = Slot> + '_ {
        self.slots.keys().copied()
    }

    fn data(&self, slot: Slot) -> Result<&SlotData, CohomologyError> {
        self.slots.get(&slot).ok_or(CohomologyError::OutOfRange(slot))
    }

    pub fn contains_slot(&self, slot: Slot) -> bool {
        self.slots.contains_key(&slot)
    }

    /// The top slot: degree `n`, or bidegree `(m, m)`.
    pub fn top_slot(&self) -> Slot {
        *self.slots.keys().next_back().expect("nonempty complex")
    }

    pub fn dim(&self, slot: Slot) -> usize {
        self.slots.get(&slot).map_or(0, |s| s.h.dim())
    }

    pub fn cochain_basis(&self, slot: Slot) -> Result<&[Mask], CohomologyError> {
        Ok(&self.data(slot)?.basis)
    }

    pub fn degree_cohomology(&self, slot: Slot) -> Result<&DegreeCohomology, CohomologyError> {
        Ok(&self.data(slot)?.h)
    }

    fn form_of(&self, slot: Slot, v: &[GaussianRational]) -> Form {
        let basis = &self.slots[&slot].basis;
        Form::from_coordinates(self.n(), self.basis_kind(), basis, v)
    }

    /// Coordinates of `f` in the cochain basis of `slot`.
    pub fn vectorize(&self, slot: Slot, f: &Form) -> Result<Vector, CohomologyError> {
        let data = self.data(slot)?;
        if f.n() != self.n() || f.kind() != self.basis_kind() {
            return Err(ExteriorError::BasisMismatch.into());
        }
        f.coordinates(&data.basis).ok_or(CohomologyError::WrongSlot(slot))
    }

    /// The `k`-th basis class of `slot`.
    pub fn basis_class(&self, slot: Slot, k: usize) -> Result<CohomologyClass, CohomologyError> {
        let data = self.data(slot)?;
        let rep = data
            .h
            .representatives()
            .get(k)
            .ok_or(CohomologyError::OutOfRange(slot))?;
        let mut coordinates = vec![GaussianRational::zero(); data.h.dim()];
        coordinates[k] = GaussianRational::one();
        Ok(CohomologyClass {
            origin: self.label.clone(),
            slot,
            representative: self.form_of(slot, rep),
            coordinates,
        })
    }

    pub fn basis_classes(&self, slot: Slot) -> Vec<CohomologyClass> {
        (0..self.dim(slot))
            .map(|k| self.basis_class(slot, k).expect("index in range"))
            .collect()
    }

    /// The class of a closed form lying in `slot`.
    pub fn class_of(&self, slot: Slot, f: &Form) -> Result<CohomologyClass, CohomologyError> {
        let v = self.vectorize(slot, f)?;
        let coordinates = self
            .data(slot)?
            .h
            .class_coordinates(&v)
            .ok_or(CohomologyError::NotClosed(slot))?;
        Ok(CohomologyClass {
            origin: self.label.clone(),
            slot,
            representative: f.clone(),
            coordinates,
        })
    }

    /// The class with the given coordinates, represented by the matching
    /// combination of basis representatives.
    pub fn class_from_coordinates(
        &self,
        slot: Slot,
        coordinates: Vec<GaussianRational>,
    ) -> Result<CohomologyClass, CohomologyError> {
        let data = self.data(slot)?;
        assert_eq!(coordinates.len(), data.h.dim(), "one coordinate per basis class");
        let mut v = vec![GaussianRational::zero(); data.basis.len()];
        for (c, r) in coordinates.iter().zip(data.h.representatives()) {
            for (x, y) in v.iter_mut().zip(r) {
                *x += c * y;
            }
        }
        Ok(CohomologyClass {
            origin: self.label.clone(),
            slot,
            representative: self.form_of(slot, &v),
            coordinates,
        })
    }

    pub fn cocycle_basis(&self, slot: Slot) -> Result<Vec<Form>, CohomologyError> {
        let data = self.data(slot)?;
        Ok(data.h.cocycles().iter().map(|z| self.form_of(slot, z)).collect())
    }

    pub fn is_exact(&self, slot: Slot, f: &Form) -> Result<bool, CohomologyError> {
        let v = self.vectorize(slot, f)?;
        Ok(self.data(slot)?.h.is_exact(&v))
    }

    /// A form `x` one step before `slot` with `D x = f`, chosen by the
    /// deterministic echelon solve.
    pub fn primitive(&self, slot: Slot, f: &Form) -> Result<Option<Form>, CohomologyError> {
        let v = self.vectorize(slot, f)?;
        let Some(prev) = slot.prev() else {
            return Ok(f.is_zero().then(|| Form::zero(self.n(), self.basis_kind())));
        };
        if !self.contains_slot(prev) {
            return Ok(f.is_zero().then(|| Form::zero(self.n(), self.basis_kind())));
        }
        Ok(self.data(slot)?.h.primitive(&v).map(|x| self.form_of(prev, &x)))
    }

    fn check_origin(&self, c: &CohomologyClass) -> Result<(), CohomologyError> {
        if c.origin != self.label {
            Err(CohomologyError::TableMismatch(c.origin.clone(), self.label.clone()))
        } else {
            Ok(())
        }
    }

    /// `[a] ⌣ [b] = [a ∧ b]`.
    pub fn cup(&self, a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass, CohomologyError> {
        self.check_origin(a)?;
        self.check_origin(b)?;
        if a.origin != b.origin {
            return Err(CohomologyError::TableMismatch(a.origin.clone(), b.origin.clone()));
        }
        let slot = a.slot.plus(b.slot).ok_or(CohomologyError::WrongSlot(a.slot))?;
        let product = a.representative.wedge(&b.representative)?;
        if !self.contains_slot(slot) {
            return Err(CohomologyError::OutOfRange(slot));
        }
        self.class_of(slot, &product)
    }

    pub fn table(&self) -> CohomologyTable {
        let dims = match self.kind {
            ComplexKind::DeRham => Dims::Graded(self.slots.values().map(|s| s.h.dim()).collect()),
            ComplexKind::Dolbeault => {
                let m = self.n() / 2;
                Dims::Bigraded(
                    (0..=m)
                        .map(|p| (0..=m).map(|q| self.dim(Slot::Bidegree(p, q))).collect())
                        .collect(),
                )
            }
        };
        let representatives = self
            .slots
            .iter()
            .map(|(&slot, data)| SlotRepresentatives {
                slot,
                forms: data
                    .h
                    .representatives()
                    .iter()
                    .map(|r| self.form_of(slot, r))
                    .collect(),
            })
            .collect();
        CohomologyTable {
            label: self.label.clone(),
            kind: self.kind,
            dims,
            representatives,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Dims {
    /// `dims[k] = dim H^k`
    Graded(Vec<usize>),
    /// `dims[p][q] = h^{p,q}`
    Bigraded(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlotRepresentatives {
    pub slot: Slot,
    pub forms: Vec<Form>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub label: String,
    pub kind: ComplexKind,
    pub dims: Dims,
    pub representatives: Vec<SlotRepresentatives>,
}

impl CohomologyTable {
    pub fn betti(&self) -> Option<&[usize]> {
        match &self.dims {
            Dims::Graded(d) => Some(d),
            Dims::Bigraded(_) => None,
        }
    }

    pub fn hodge(&self, p: usize, q: usize) -> Option<usize> {
        match &self.dims {
            Dims::Bigraded(d) => d.get(p).and_then(|row| row.get(q)).copied(),
            Dims::Graded(_) => None,
        }
    }
}

/// Betti numbers of the Chevalley–Eilenberg complex.
pub fn betti_numbers(g: &LieAlgebra) -> Result<Vec<usize>, CohomologyError> {
    let h = FormCohomology::de_rham(g, "de Rham")?;
    Ok(h.slots().map(|s| h.dim(s)).collect())
}

/// Table of `h^{p,q}`; row `p = 0` is the cohomology of the `(0,*)`-Dolbeault algebra.
pub fn hodge_numbers(g: &LieAlgebra, cs: &ComplexStructure) -> Result<CohomologyTable, CohomologyError> {
    Ok(FormCohomology::dolbeault(g, cs, "Dolbeault")?.table())
}

/// `[a] ⌣ [b]`; both classes must come from `table`.
pub fn cup_product(
    table: &FormCohomology,
    a: &CohomologyClass,
    b: &CohomologyClass,
) -> Result<CohomologyClass, CohomologyError> {
    table.cup(a, b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pairing {
    pub left: Slot,
    pub right: Slot,
    pub top: Slot,
    pub top_dim: usize,
    pub matrix: Vec<Vec<GaussianRational>>,
    pub rank: usize,
    pub nondegenerate: bool,
}

/// Matrix of `H^{left} × H^{right} → H^{left+right}`, the target being one-dimensional.
pub fn pairing(h: &FormCohomology, left: Slot, right: Slot) -> Result<Pairing, CohomologyError> {
    let top = left.plus(right).ok_or(CohomologyError::WrongSlot(right))?;
    let top_dim = h.dim(top);
    if top_dim != 1 {
        return Err(CohomologyError::TopNotOneDimensional { dim: top_dim });
    }
    let a = h.basis_classes(left);
    let b = h.basis_classes(right);
    let mut rows = Vec::with_capacity(a.len());
    for x in &a {
        let mut row = Vec::with_capacity(b.len());
        for y in &b {
            row.push(h.cup(x, y)?.coordinates[0].clone());
        }
        rows.push(row);
    }
    let rank = Matrix::from_rows(b.len(), rows.clone()).rank();
    Ok(Pairing {
        left,
        right,
        top,
        top_dim,
        nondegenerate: a.len() == b.len() && rank == a.len(),
        rank,
        matrix: rows,
    })
}

/// Pairing `H^{p,q} × H^{m−p,m−q} → H^{m,m}` of the Dolbeault cohomology.
pub fn poincare_pairing(
    g: &LieAlgebra,
    cs: &ComplexStructure,
    p: usize,
    q: usize,
) -> Result<Pairing, CohomologyError> {
    let h = FormCohomology::dolbeault(g, cs, "Dolbeault")?;
    let m = cs.complex_dim();
    if p > m || q > m {
        return Err(CohomologyError::OutOfRange(Slot::Bidegree(p, q)));
    }
    pairing(&h, Slot::Bidegree(p, q), Slot::Bidegree(m - p, m - q))
}

/// Pairing `H^{0,q} × H^{0,m−q} → H^{0,m}` of the `(0,*)`-Dolbeault algebra.
pub fn zero_star_pairing(h: &FormCohomology, q: usize) -> Result<Pairing, CohomologyError> {
    let m = h.n() / 2;
    if q > m {
        return Err(CohomologyError::OutOfRange(Slot::Bidegree(0, q)));
    }
    pairing(h, Slot::Bidegree(0, q), Slot::Bidegree(0, m - q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DdbarEntry {
    pub p: usize,
    pub q: usize,
    pub holds: bool,
    /// A `∂̄`-exact `∂`-closed (or `∂`-exact `∂̄`-closed) form outside `im ∂∂̄`.
    pub witness: Option<Form>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DdbarReport {
    pub bidegrees: Vec<DdbarEntry>,
    pub holds: bool,
}

impl DdbarReport {
    pub fn first_failure(&self) -> Option<&DdbarEntry> {
        self.bidegrees.iter().find(|e| !e.holds)
    }
}

/// Checks `im ∂̄ ∩ ker ∂ ⊆ im ∂∂̄` and `im ∂ ∩ ker ∂̄ ⊆ im ∂∂̄` in every bidegree.
pub fn check_ddbar_lemma(g: &LieAlgebra, cs: &ComplexStructure) -> Result<DdbarReport, CohomologyError> {
    check_size(g.dim())?;
    let split = exterior::hodge_split(g, cs)?;
    let m = cs.complex_dim();
    let basis = |p: usize, q: usize| bigraded_monomials(m, p, q);
    let del = |p: usize, q: usize| split.del.matrix(&basis(p, q), &basis(p + 1, q));
    let delbar = |p: usize, q: usize| split.delbar.matrix(&basis(p, q), &basis(p, q + 1));
    let mut bidegrees = Vec::new();
    for p in 0..=m {
        for q in 0..=m {
            let here = basis(p, q);
            let target = if p > 0 && q > 0 {
                Subspace::column_space(&del(p - 1, q).mul(&delbar(p - 1, q - 1)))
            } else {
                Subspace::zero(here.len())
            };
            let mut candidates: Vec<Vector> = Vec::new();
            if q > 0 {
                // ∂̄ x with ∂∂̄ x = 0
                let db = delbar(p, q - 1);
                let ker = del(p, q).mul(&db).kernel();
                candidates.extend(ker.iter().map(|x| db.apply(x)));
            }
            if p > 0 {
                // ∂ x with ∂̄∂ x = 0
                let d = del(p - 1, q);
                let ker = delbar(p, q).mul(&d).kernel();
                candidates.extend(ker.iter().map(|x| d.apply(x)));
            }
            let witness = candidates
                .iter()
                .find(|v| !target.contains(v))
                .map(|v| Form::from_coordinates(2 * m, BasisKind::Bigraded, &here, v));
            bidegrees.push(DdbarEntry {
                p,
                q,
                holds: witness.is_none(),
                witness,
            });
        }
    }
    let holds = bidegrees.iter().all(|e| e.holds);
    Ok(DdbarReport { bidegrees, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureConstants;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
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

    fn e(n: usize, idx: &[usize]) -> Form {
        Form::from_indices(n, BasisKind::Real, idx, GaussianRational::one())
    }

    #[test]
    fn generic_complex_rejects_non_complexes() {
        let one = Matrix::from_rows(1, vec![vec![GaussianRational::one()]]);
        assert!(matches!(
            CochainComplex::new(vec![1, 1, 1], vec![one.clone(), one.clone()]),
            Err(CohomologyError::NotAComplex { degree: 0 })
        ));
        let cx = CochainComplex::new(vec![1, 1], vec![one]).unwrap();
        let h = complex_cohomology(&cx);
        assert_eq!(h.iter().map(DegreeCohomology::dim).collect::<Vec<_>>(), vec![0, 0]);
        assert!(matches!(
            CochainComplex::new(vec![1, 2], vec![Matrix::zeros(1, 1)]),
            Err(CohomologyError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn betti_examples() {
        for n in 1..=5 {
            let b = betti_numbers(&LieAlgebra::abelian(n).unwrap()).unwrap();
            assert_eq!(b, (0..=n).map(|k| binom(n, k)).collect::<Vec<_>>());
        }
        let h3 = LieAlgebra::new(StructureConstants::new(3).with(0, 1, 2, 1)).unwrap();
        assert_eq!(betti_numbers(&h3).unwrap(), vec![1, 2, 2, 1]);
        assert_eq!(betti_numbers(&kt().0).unwrap(), vec![1, 3, 4, 3, 1]);
        assert_eq!(
            betti_numbers(&LieAlgebra::abelian(17).unwrap()),
            Err(CohomologyError::TooLarge { n: 17, max: 16 })
        );
    }

    #[test]
    fn kodaira_thurston_representatives() {
        let h = FormCohomology::de_rham(&kt().0, "kt").unwrap();
        let reps: Vec<String> = h
            .basis_classes(Slot::Degree(2))
            .iter()
            .map(|c| c.representative.to_string())
            .collect();
        assert_eq!(reps, vec!["1 e13", "1 e14", "1 e23", "1 e24"]);
        let ones: Vec<String> = h
            .basis_classes(Slot::Degree(1))
            .iter()
            .map(|c| c.representative.to_string())
            .collect();
        assert_eq!(ones, vec!["1 e1", "1 e2", "1 e4"]);
    }

    #[test]
    fn hodge_examples() {
        let (g, cs) = iwasawa();
        let t = hodge_numbers(&g, &cs).unwrap();
        assert_eq!(t.hodge(1, 0), Some(3));
        assert_eq!(t.hodge(0, 1), Some(2));
        let (g, cs) = kt();
        let t = hodge_numbers(&g, &cs).unwrap();
        assert_eq!((0..=2).map(|q| t.hodge(0, q).unwrap()).collect::<Vec<_>>(), vec![1, 2, 1]);
        assert_eq!(t.hodge(1, 0), Some(1));
        let torus = LieAlgebra::abelian(6).unwrap();
        let t = hodge_numbers(&torus, &ComplexStructure::standard(6).unwrap()).unwrap();
        for p in 0..=3 {
            for q in 0..=3 {
                assert_eq!(t.hodge(p, q), Some(binom(3, p) * binom(3, q)));
            }
        }
    }

    #[test]
    fn cup_product_examples() {
        let h3 = LieAlgebra::new(StructureConstants::new(3).with(0, 1, 2, 1)).unwrap();
        let h = FormCohomology::de_rham(&h3, "h3").unwrap();
        let e1 = h.class_of(Slot::Degree(1), &e(3, &[0])).unwrap();
        let e2 = h.class_of(Slot::Degree(1), &e(3, &[1])).unwrap();
        assert!(h.cup(&e1, &e2).unwrap().is_zero());
        assert!(h.cup(&e1, &e1).unwrap().is_zero());

        let kt = FormCohomology::de_rham(&kt().0, "kt").unwrap();
        let e1 = kt.class_of(Slot::Degree(1), &e(4, &[0])).unwrap();
        let e4 = kt.class_of(Slot::Degree(1), &e(4, &[3])).unwrap();
        let p = kt.cup(&e1, &e4).unwrap();
        assert_eq!(p.class_id(), Some(1));
        assert_eq!(p.representative, e(4, &[0, 3]));

        let other = FormCohomology::de_rham(&h3, "other").unwrap();
        let x = other.basis_class(Slot::Degree(1), 0).unwrap();
        assert!(matches!(kt.cup(&e1, &x), Err(CohomologyError::TableMismatch(..))));
        assert_eq!(
            kt.class_of(Slot::Degree(1), &e(4, &[2])),
            Err(CohomologyError::NotClosed(Slot::Degree(1)))
        );
    }

    #[test]
    fn pairing_examples() {
        let torus = LieAlgebra::abelian(2).unwrap();
        let p = poincare_pairing(&torus, &ComplexStructure::standard(2).unwrap(), 0, 0).unwrap();
        assert_eq!(p.matrix, vec![vec![GaussianRational::one()]]);
        assert!(p.nondegenerate);

        let (g, cs) = iwasawa();
        let p = poincare_pairing(&g, &cs, 0, 1).unwrap();
        assert!(p.nondegenerate);
        assert_eq!(p.rank, 2);
        assert_eq!(p.top_dim, 1);

        let (g, cs) = kt();
        assert!(poincare_pairing(&g, &cs, 1, 0).unwrap().nondegenerate);
        let h = FormCohomology::dolbeault(&g, &cs, "kt").unwrap();
        for q in 0..=2 {
            assert!(zero_star_pairing(&h, q).unwrap().nondegenerate);
        }
    }

    #[test]
    fn ddbar_examples() {
        let torus = LieAlgebra::abelian(4).unwrap();
        assert!(check_ddbar_lemma(&torus, &ComplexStructure::standard(4).unwrap()).unwrap().holds);

        let (g, cs) = kt();
        let r = check_ddbar_lemma(&g, &cs).unwrap();
        assert!(!r.holds);
        let fail = r.bidegrees.iter().find(|e| (e.p, e.q) == (1, 1)).unwrap();
        assert!(!fail.holds);
        assert_eq!(fail.witness.as_ref().unwrap().to_string(), "-1/2i w1^W1");

        let (g, cs) = iwasawa();
        let r = check_ddbar_lemma(&g, &cs).unwrap();
        assert!(!r.holds);
        let fail = r.bidegrees.iter().find(|e| (e.p, e.q) == (0, 2)).unwrap();
        assert!(!fail.holds);
    }
}
