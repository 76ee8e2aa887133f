//! Sparse exterior algebra `Λ*(g*) ⊗ ℂ`, the Chevalley–Eilenberg differential
//! and its Hodge splitting `d = ∂ + ∂̄`.
//!
//! A monomial is a bitmask over the generators. In the real basis bit `k` is
//! `e^{k+1}`. In the bigraded basis of complex dimension `m`, bits `0..m` are
//! `ω^1…ω^m` and bits `m..2m` are `ω̄^1…ω̄^m`, so a monomial's bidegree is a
//! popcount per half.
//!
//! Sign convention: `(dα)(x, y) = -α([x, y])`, hence
//! `d e^k = -Σ_{i<j} c^k_{ij} e^i ∧ e^j`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{self, AlgebraError, ComplexStructure, LieAlgebra, StructureConstants};
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;

pub type Mask = u64;

pub const MAX_GENERATORS: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("forms live in different exterior algebras")]
    BasisMismatch,
    #[error("operation needs a form in the bigraded basis")]
    WrongBasis,
    #[error("complex structure is not integrable: d {generator} has the component {witness}")]
    NotIntegrable { generator: String, witness: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl ExteriorError {
    pub fn is_internal(&self) -> bool {
        match self {
            ExteriorError::Internal(_) => true,
            ExteriorError::Algebra(e) => e.is_internal(),
            _ => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// `e^1 … e^n`
    Real,
    /// `ω^1 … ω^m, ω̄^1 … ω̄^m`
    Bigraded,
}

/// Sign of reordering the concatenation `a ++ b` of two disjoint sorted index sets.
fn merge_sign(a: Mask, b: Mask) -> bool {
    let mut odd = false;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        let above = if j >= 63 { 0 } else { a >> (j + 1) };
        odd ^= above.count_ones() % 2 == 1;
        rest &= rest - 1;
    }
    odd
}

fn bits(mask: Mask) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(k)
        }
    })
}

/// All `k`-subsets of `positions`, as masks, in lexicographic order of index tuples.
fn subsets(positions: &[usize], k: usize) -> Vec<Mask> {
    fn rec(positions: &[usize], k: usize, start: usize, acc: Mask, out: &mut Vec<Mask>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for s in start..positions.len() {
            if positions.len() - s < k {
                break;
            }
            rec(positions, k - 1, s + 1, acc | (1 << positions[s]), out);
        }
    }
    let mut out = Vec::new();
    rec(positions, k, 0, 0, &mut out);
    out
}

/// Degree-`k` monomials on `n` generators, lexicographically ordered.
pub fn monomials(n: usize, degree: usize) -> Vec<Mask> {
    subsets(&(0..n).collect::<Vec<_>>(), degree)
}

/// Monomials of bidegree `(p, q)` in complex dimension `m`, lexicographically ordered.
pub fn bigraded_monomials(m: usize, p: usize, q: usize) -> Vec<Mask> {
    let holo = subsets(&(0..m).collect::<Vec<_>>(), p);
    let anti = subsets(&(m..2 * m).collect::<Vec<_>>(), q);
    holo.iter()
        .flat_map(|h| anti.iter().map(move |a| h | a))
        .collect()
}

/// An element of the exterior algebra on `n` generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    n: usize,
    kind: BasisKind,
    terms: BTreeMap<Mask, GaussianRational>,
}

impl Form {
    pub fn zero(n: usize, kind: BasisKind) -> Self {
        assert!(n <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators");
        assert!(kind == BasisKind::Real || n.is_multiple_of(2), "bigraded basis needs even n");
        Form {
            n,
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, kind: BasisKind) -> Self {
        Self::monomial(n, kind, 0, GaussianRational::one())
    }

    pub fn monomial(n: usize, kind: BasisKind, mask: Mask, coeff: GaussianRational) -> Self {
        let mut f = Self::zero(n, kind);
        assert!(n == 64 || mask >> n == 0, "monomial outside the algebra");
        if !coeff.is_zero() {
            f.terms.insert(mask, coeff);
        }
        f
    }

    /// The generator with 0-based index `k`.
    pub fn generator(n: usize, kind: BasisKind, k: usize) -> Self {
        Self::monomial(n, kind, 1 << k, GaussianRational::one())
    }

    /// Wedge of generators in the given order (0-based, any order, repeats give zero).
    pub fn from_indices(n: usize, kind: BasisKind, indices: &[usize], coeff: GaussianRational) -> Self {
        indices
            .iter()
            .fold(Self::monomial(n, kind, 0, coeff), |acc, &k| {
                acc.wedge(&Self::generator(n, kind, k))
                    .expect("same algebra")
            })
    }

    pub fn from_terms(
        n: usize,
        kind: BasisKind,
        terms: impl IntoIterator<Item = (Mask, GaussianRational)>,
    ) -> Self {
        let mut f = Self::zero(n, kind);
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    /// Dense coordinates over `basis`, with the inverse of [`coordinates`](Self::coordinates).
    pub fn from_coordinates(n: usize, kind: BasisKind, basis: &[Mask], coords: &[GaussianRational]) -> Self {
        Self::from_terms(n, kind, basis.iter().copied().zip(coords.iter().cloned()))
    }

    /// Dense coordinates over `basis`; terms outside the basis are reported as `None`.
    pub fn coordinates(&self, basis: &[Mask]) -> Option<Vec<GaussianRational>> {
        let mut out = vec![GaussianRational::zero(); basis.len()];
        let mut found = 0;
        for (k, m) in basis.iter().enumerate() {
            if let Some(c) = self.terms.get(m) {
                out[k] = c.clone();
                found += 1;
            }
        }
        (found == self.terms.len()).then_some(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    /// Complex dimension `m` of a bigraded algebra.
    pub fn complex_dim(&self) -> usize {
        self.n / 2
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &GaussianRational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, mask: Mask) -> GaussianRational {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, mask: Mask, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mask) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_algebra(&self, other: &Form) -> Result<(), ExteriorError> {
        if self.n != other.n || self.kind != other.kind {
            Err(ExteriorError::BasisMismatch)
        } else {
            Ok(())
        }
    }

    /// The degree if the form is homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| m.count_ones() as usize);
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    fn split(&self, mask: Mask) -> (usize, usize) {
        let m = self.n / 2;
        let low = (1u64 << m) - 1;
        ((mask & low).count_ones() as usize, (mask >> m).count_ones() as usize)
    }

    /// The bidegree if the form is nonzero and of pure type.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        if self.kind != BasisKind::Bigraded {
            return None;
        }
        let mut types = self.terms.keys().map(|&m| self.split(m));
        let t = types.next()?;
        types.all(|x| x == t).then_some(t)
    }

    pub fn add(&self, other: &Form) -> Result<Form, ExteriorError> {
        self.same_algebra(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Form) -> Result<Form, ExteriorError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Form {
        self.scale(&GaussianRational::from_int(-1))
    }

    pub fn scale(&self, s: &GaussianRational) -> Form {
        let mut out = Self::zero(self.n, self.kind);
        if s.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, c)| (*m, c * s)).collect();
        out
    }

    pub fn wedge(&self, other: &Form) -> Result<Form, ExteriorError> {
        self.same_algebra(other)?;
        let mut out = Self::zero(self.n, self.kind);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let c = ca * cb;
                out.add_term(a | b, if merge_sign(*a, *b) { -c } else { c });
            }
        }
        Ok(out)
    }

    /// Terms with exactly `p` unbarred and `q` barred generators.
    pub fn bidegree_project(&self, p: usize, q: usize) -> Result<Form, ExteriorError> {
        if self.kind != BasisKind::Bigraded {
            return Err(ExteriorError::WrongBasis);
        }
        let mut out = Self::zero(self.n, self.kind);
        out.terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.split(**m) == (p, q))
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        Ok(out)
    }

    /// Complex conjugation. In the bigraded basis it swaps `ω^a ↔ ω̄^a`.
    pub fn conj(&self) -> Form {
        let mut out = Self::zero(self.n, self.kind);
        for (&mask, c) in &self.terms {
            let c = c.conj();
            match self.kind {
                BasisKind::Real => out.add_term(mask, c),
                BasisKind::Bigraded => {
                    let m = self.n / 2;
                    let low = (1u64 << m) - 1;
                    let holo = mask & low;
                    let anti = mask >> m;
                    let swapped = anti | (holo << m);
                    let odd = (holo.count_ones() * anti.count_ones()) % 2 == 1;
                    out.add_term(swapped, if odd { -c } else { c });
                }
            }
        }
        out
    }

    /// Substitutes each generator by a degree-one form of another algebra.
    pub fn substitute(&self, images: &[Form]) -> Result<Form, ExteriorError> {
        assert_eq!(images.len(), self.n, "one image per generator");
        let target = images.first().map(|f| (f.n, f.kind)).unwrap();
        let mut out = Form::zero(target.0, target.1);
        for (&mask, c) in &self.terms {
            let mut prod = Form::monomial(target.0, target.1, 0, c.clone());
            for k in bits(mask) {
                prod = prod.wedge(&images[k])?;
            }
            out = out.add(&prod)?;
        }
        Ok(out)
    }

    fn fmt_monomial(&self, mask: Mask, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = |f: &mut fmt::Formatter<'_>, idx: &mut dyn Iterator<Item = usize>, wide: bool| {
            let idx: Vec<usize> = idx.collect();
            if wide {
                let s: Vec<String> = idx.iter().map(|k| k.to_string()).collect();
                write!(f, "{{{}}}", s.join(","))
            } else {
                idx.iter().try_for_each(|k| write!(f, "{k}"))
            }
        };
        match self.kind {
            BasisKind::Real => {
                write!(f, "e")?;
                digits(f, &mut bits(mask).map(|k| k + 1), self.n > 9)
            }
            BasisKind::Bigraded => {
                let m = self.n / 2;
                let low = (1u64 << m) - 1;
                let holo = mask & low;
                let anti = mask >> m;
                if holo != 0 {
                    write!(f, "w")?;
                    digits(f, &mut bits(holo).map(|k| k + 1), m > 9)?;
                }
                if holo != 0 && anti != 0 {
                    write!(f, "^")?;
                }
                if anti != 0 {
                    write!(f, "W")?;
                    digits(f, &mut bits(anti).map(|k| k + 1), m > 9)?;
                }
                Ok(())
            }
        }
    }

    /// Terms sorted by degree, then lexicographically by index tuple.
    fn sorted_terms(&self) -> Vec<(Mask, &GaussianRational)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|(m, _)| (m.count_ones(), bits(*m).collect::<Vec<_>>()));
        terms
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mask, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            if mask != 0 {
                write!(f, " ")?;
                self.fmt_monomial(mask, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Form {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Which bidegree a differential raises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BigradeShift {
    Ungraded,
    /// `(1, 0)`, as for `∂`
    Holomorphic,
    /// `(0, 1)`, as for `∂̄`
    Antiholomorphic,
}

/// An odd derivation determined by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Differential {
    n: usize,
    kind: BasisKind,
    images: Vec<Form>,
    shift: BigradeShift,
}

impl Differential {
    pub fn new(images: Vec<Form>, kind: BasisKind, shift: BigradeShift) -> Result<Self, ExteriorError> {
        let n = images.len();
        if images.iter().any(|f| f.n != n || f.kind != kind) {
            return Err(ExteriorError::BasisMismatch);
        }
        Ok(Differential {
            n,
            kind,
            images,
            shift,
        })
    }

    /// The derivation dual to a bracket tensor, without checking Jacobi.
    pub fn dual_to(constants: &StructureConstants, kind: BasisKind) -> Differential {
        let n = constants.dim();
        let mut images = vec![Form::zero(n, kind); n];
        for (i, j, k, c) in constants.nonzero() {
            images[k].add_term((1 << i) | (1 << j), -c);
        }
        Differential {
            n,
            kind,
            images,
            shift: BigradeShift::Ungraded,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn shift(&self) -> BigradeShift {
        self.shift
    }

    pub fn on_generator(&self, k: usize) -> &Form {
        &self.images[k]
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Form::is_zero)
    }

    fn apply_monomial(&self, mask: Mask, coeff: &GaussianRational, out: &mut Form) {
        for (t, g) in bits(mask).enumerate() {
            let image = &self.images[g];
            if image.is_zero() {
                continue;
            }
            let below = mask & ((1u64 << g) - 1);
            let above = mask & !((1u64 << (g + 1)) - 1);
            for (&img, c) in &image.terms {
                if img & (below | above) != 0 {
                    continue;
                }
                let odd = (t % 2 == 1) ^ merge_sign(below, img) ^ merge_sign(below | img, above);
                let v = coeff * c;
                out.add_term(below | img | above, if odd { -v } else { v });
            }
        }
    }

    pub fn apply(&self, f: &Form) -> Result<Form, ExteriorError> {
        if f.n != self.n || f.kind != self.kind {
            return Err(ExteriorError::BasisMismatch);
        }
        let mut out = Form::zero(self.n, self.kind);
        for (&m, c) in &f.terms {
            self.apply_monomial(m, c, &mut out);
        }
        Ok(out)
    }

    /// Matrix of the restriction `span(source) → span(target)`. Panics if an
    /// image leaves the target span.
    pub fn matrix(&self, source: &[Mask], target: &[Mask]) -> Matrix {
        let index: BTreeMap<Mask, usize> = target.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let mut out = Matrix::zeros(target.len(), source.len());
        for (col, &m) in source.iter().enumerate() {
            let mut img = Form::zero(self.n, self.kind);
            self.apply_monomial(m, &GaussianRational::one(), &mut img);
            for (t, c) in img.terms {
                let row = *index.get(&t).expect("image outside target basis");
                out.set(row, col, c);
            }
        }
        out
    }

    /// `D∘D` on each generator; a derivation squares to zero iff these vanish.
    pub fn square_on_generators(&self) -> Vec<Form> {
        self.images
            .iter()
            .map(|f| self.apply(f).expect("same algebra"))
            .collect()
    }

    pub fn squares_to_zero(&self) -> bool {
        self.square_on_generators().iter().all(Form::is_zero)
    }

    /// `a·D₁ + b·D₂`, still a derivation.
    pub fn combine(
        &self,
        a: &GaussianRational,
        other: &Differential,
        b: &GaussianRational,
    ) -> Result<Differential, ExteriorError> {
        if self.n != other.n || self.kind != other.kind {
            return Err(ExteriorError::BasisMismatch);
        }
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(x, y)| x.scale(a).add(&y.scale(b)))
            .collect::<Result<Vec<_>, _>>()?;
        let shift = if self.shift == other.shift {
            self.shift
        } else {
            BigradeShift::Ungraded
        };
        Ok(Differential {
            n: self.n,
            kind: self.kind,
            images,
            shift,
        })
    }

    /// The graded commutator `D₁D₂ + D₂D₁` evaluated on generators.
    pub fn anticommutator_on_generators(&self, other: &Differential) -> Vec<Form> {
        (0..self.n)
            .map(|k| {
                let a = self.apply(&other.images[k]).expect("same algebra");
                let b = other.apply(&self.images[k]).expect("same algebra");
                a.add(&b).expect("same algebra")
            })
            .collect()
    }
}

/// The Chevalley–Eilenberg differential of `g` in the real basis.
pub fn ce_differential(g: &LieAlgebra) -> Differential {
    Differential::dual_to(g.constants(), BasisKind::Real)
}

/// `d`, `∂`, `∂̄` and `d^c = i(∂̄ − ∂)` in the bigraded coframe.
#[derive(Clone, Debug)]
pub struct HodgeSplit {
    pub d: Differential,
    pub del: Differential,
    pub delbar: Differential,
    pub dc: Differential,
}

pub fn hodge_split(g: &LieAlgebra, cs: &ComplexStructure) -> Result<HodgeSplit, ExteriorError> {
    let complex = algebra::complexify(g, cs)?;
    let m = cs.complex_dim();
    let n = 2 * m;
    let d = Differential::dual_to(&complex, BasisKind::Bigraded);
    let name = |k: usize| {
        if k < m {
            format!("w{}", k + 1)
        } else {
            format!("W{}", k - m + 1)
        }
    };
    let mut del = Vec::with_capacity(n);
    let mut delbar = Vec::with_capacity(n);
    for k in 0..n {
        let image = d.on_generator(k);
        let (p2, p11, p02) = (
            image.bidegree_project(2, 0)?,
            image.bidegree_project(1, 1)?,
            image.bidegree_project(0, 2)?,
        );
        let (bad, good_del, good_delbar) = if k < m { (p02, p2, p11) } else { (p2, p11, p02) };
        if !bad.is_zero() {
            return Err(ExteriorError::NotIntegrable {
                generator: name(k),
                witness: bad.to_string(),
            });
        }
        del.push(good_del);
        delbar.push(good_delbar);
    }
    let del = Differential::new(del, BasisKind::Bigraded, BigradeShift::Holomorphic)?;
    let delbar = Differential::new(delbar, BasisKind::Bigraded, BigradeShift::Antiholomorphic)?;
    let i = GaussianRational::i();
    let dc = delbar.combine(&i, &del, &-&i)?;
    if !del.squares_to_zero() || !delbar.squares_to_zero() {
        return Err(ExteriorError::Internal("del or delbar does not square to zero".into()));
    }
    if !del
        .anticommutator_on_generators(&delbar)
        .iter()
        .all(Form::is_zero)
    {
        return Err(ExteriorError::Internal("del and delbar do not anticommute".into()));
    }
    Ok(HodgeSplit { d, del, delbar, dc })
}
