//! Triple Massey products and formality verdicts.
//!
//! The verdicts follow from abelianness criteria on the Lie algebra; Massey
//! witnesses only corroborate non-formality, since vanishing Massey products
//! never certify formality.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{self, AlgebraError, ComplexStructure, LieAlgebra};
use crate::cohomology::{CohomologyClass, CohomologyError, ComplexKind, FormCohomology, Slot};
use crate::exterior::{ExteriorError, Form};
use crate::linalg::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormalityError {
    #[error("no primitive for {0}, although its class vanishes")]
    NoSolution(Slot),
    #[error("given primitive does not satisfy D x = {0}")]
    InvalidPrimitive(String),
    #[error("class {0} is not a class of the selected complex")]
    WrongComplex(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl FormalityError {
    pub fn is_internal(&self) -> bool {
        match self {
            FormalityError::NoSolution(_) | FormalityError::Internal(_) => true,
            FormalityError::Cohomology(e) => e.is_internal(),
            FormalityError::Exterior(e) => e.is_internal(),
            FormalityError::Algebra(e) => e.is_internal(),
            _ => false,
        }
    }
}

/// Which DGA a Massey product lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MasseyComplex {
    /// `(Λ* g*, d)`
    Derham,
    /// `(Λ^{*,*} g*, ∂̄)`
    Dolbeault,
    /// The row `(Λ^{0,*} g*, ∂̄)`.
    ZeroStar,
}

impl MasseyComplex {
    pub fn name(self) -> &'static str {
        match self {
            MasseyComplex::Derham => "derham",
            MasseyComplex::Dolbeault => "dolbeault",
            MasseyComplex::ZeroStar => "zero-star",
        }
    }

    fn admits(self, slot: Slot) -> bool {
        matches!(
            (self, slot),
            (MasseyComplex::Derham, Slot::Degree(_))
                | (MasseyComplex::Dolbeault, Slot::Bidegree(..))
                | (MasseyComplex::ZeroStar, Slot::Bidegree(0, _))
        )
    }

    fn kind(self) -> ComplexKind {
        match self {
            MasseyComplex::Derham => ComplexKind::DeRham,
            _ => ComplexKind::Dolbeault,
        }
    }
}

impl std::str::FromStr for MasseyComplex {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "derham" => Ok(MasseyComplex::Derham),
            "dolbeault" => Ok(MasseyComplex::Dolbeault),
            "zero-star" => Ok(MasseyComplex::ZeroStar),
            other => Err(format!("unknown complex '{other}' (expected derham, dolbeault or zero-star)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MasseyInput {
    pub slot: Slot,
    pub class_id: Option<usize>,
    pub representative: Form,
}

impl From<&CohomologyClass> for MasseyInput {
    fn from(c: &CohomologyClass) -> Self {
        MasseyInput {
            slot: c.slot,
            class_id: c.class_id(),
            representative: c.representative.clone(),
        }
    }
}

/// `⟨a, b, c⟩ = [x∧c − (−1)^{|a|} a∧y]` with `D x = a∧b`, `D y = b∧c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MasseyResult {
    pub complex: MasseyComplex,
    pub inputs: Vec<MasseyInput>,
    /// Both pairwise products vanish in cohomology.
    pub defined: bool,
    pub primitives: Option<(Form, Form)>,
    pub representative: Option<CohomologyClass>,
    pub indeterminacy_basis: Vec<CohomologyClass>,
    /// The representative lies in the indeterminacy subspace.
    pub vanishes: bool,
}

impl MasseyResult {
    /// Short label like `<[e1],[e1],[e2]>`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .inputs
            .iter()
            .map(|i| format!("[{}]", i.representative))
            .collect();
        format!("<{}>", parts.join(","))
    }
}

/// Cohomology of the selected complex, built from `g` and `cs`.
pub fn cohomology_for(
    g: &LieAlgebra,
    cs: &ComplexStructure,
    complex: MasseyComplex,
) -> Result<FormCohomology, FormalityError> {
    Ok(match complex {
        MasseyComplex::Derham => FormCohomology::de_rham(g, "de Rham")?,
        MasseyComplex::Dolbeault | MasseyComplex::ZeroStar => FormCohomology::dolbeault(g, cs, "Dolbeault")?,
    })
}

fn check_class(h: &FormCohomology, complex: MasseyComplex, c: &CohomologyClass) -> Result<(), FormalityError> {
    if h.kind() != complex.kind() || !complex.admits(c.slot) || c.origin != h.label() {
        return Err(FormalityError::WrongComplex(c.representative.to_string()));
    }
    Ok(())
}

fn sign(degree: usize) -> crate::scalar::GaussianRational {
    crate::scalar::GaussianRational::from_int(if degree.is_multiple_of(2) { 1 } else { -1 })
}

/// Basis of `[a]·H^{|b|+|c|−1} + H^{|a|+|b|−1}·[c]` inside the target slot.
fn indeterminacy(
    h: &FormCohomology,
    a: &CohomologyClass,
    b: &CohomologyClass,
    c: &CohomologyClass,
    target: Slot,
) -> Result<(Vec<CohomologyClass>, Subspace), FormalityError> {
    let mut products = Vec::new();
    let mut push_products = |left: Option<&CohomologyClass>, mid: Option<Slot>, right: Option<&CohomologyClass>| -> Result<(), FormalityError> {
        let Some(slot) = mid.filter(|s| h.contains_slot(*s)) else {
            return Ok(());
        };
        for z in h.basis_classes(slot) {
            let p = match (left, right) {
                (Some(l), None) => h.cup(l, &z)?,
                (None, Some(r)) => h.cup(&z, r)?,
                _ => unreachable!(),
            };
            products.push(p);
        }
        Ok(())
    };
    push_products(Some(a), b.slot.plus(c.slot).and_then(Slot::prev), None)?;
    push_products(None, a.slot.plus(b.slot).and_then(Slot::prev), Some(c))?;
    let dim = h.dim(target);
    let mut basis: Vec<CohomologyClass> = Vec::new();
    let mut span = Subspace::zero(dim);
    for p in products {
        if p.slot != target {
            return Err(FormalityError::Internal(format!("indeterminacy product in {} instead of {target}", p.slot)));
        }
        if !span.contains(&p.coordinates) {
            basis.push(p);
            span = Subspace::span(dim, basis.iter().map(|b| b.coordinates.clone()));
        }
    }
    Ok((basis, span))
}

/// Triple Massey product with the deterministic echelon primitives.
pub fn triple_massey(
    h: &FormCohomology,
    complex: MasseyComplex,
    a: &CohomologyClass,
    b: &CohomologyClass,
    c: &CohomologyClass,
) -> Result<MasseyResult, FormalityError> {
    massey_impl(h, complex, a, b, c, None)
}

/// Triple Massey product with caller-chosen primitives `D x = a∧b`, `D y = b∧c`.
pub fn triple_massey_with_primitives(
    h: &FormCohomology,
    complex: MasseyComplex,
    a: &CohomologyClass,
    b: &CohomologyClass,
    c: &CohomologyClass,
    x: &Form,
    y: &Form,
) -> Result<MasseyResult, FormalityError> {
    massey_impl(h, complex, a, b, c, Some((x.clone(), y.clone())))
}

fn massey_impl(
    h: &FormCohomology,
    complex: MasseyComplex,
    a: &CohomologyClass,
    b: &CohomologyClass,
    c: &CohomologyClass,
    given: Option<(Form, Form)>,
) -> Result<MasseyResult, FormalityError> {
    for class in [a, b, c] {
        check_class(h, complex, class)?;
    }
    let inputs = vec![a.into(), b.into(), c.into()];
    let undefined = |inputs| MasseyResult {
        complex,
        inputs,
        defined: false,
        primitives: None,
        representative: None,
        indeterminacy_basis: Vec::new(),
        vanishes: false,
    };
    let (Some(ab_slot), Some(bc_slot)) = (a.slot.plus(b.slot), b.slot.plus(c.slot)) else {
        return Ok(undefined(inputs));
    };
    let Some(target) = ab_slot.plus(c.slot).and_then(Slot::prev) else {
        return Ok(undefined(inputs));
    };
    if !h.contains_slot(ab_slot) || !h.contains_slot(bc_slot) || !h.contains_slot(target) {
        return Ok(undefined(inputs));
    }
    let ab = h.cup(a, b)?;
    let bc = h.cup(b, c)?;
    if !ab.is_zero() || !bc.is_zero() {
        return Ok(undefined(inputs));
    }
    let d = h.differential();
    let (x, y) = match given {
        Some((x, y)) => {
            if d.apply(&x)? != ab.representative {
                return Err(FormalityError::InvalidPrimitive(ab.representative.to_string()));
            }
            if d.apply(&y)? != bc.representative {
                return Err(FormalityError::InvalidPrimitive(bc.representative.to_string()));
            }
            (x, y)
        }
        None => (
            h.primitive(ab_slot, &ab.representative)?.ok_or(FormalityError::NoSolution(ab_slot))?,
            h.primitive(bc_slot, &bc.representative)?.ok_or(FormalityError::NoSolution(bc_slot))?,
        ),
    };
    let xc = x.wedge(&c.representative)?;
    let ay = a.representative.wedge(&y)?.scale(&sign(a.slot.total_degree()));
    let form = xc.sub(&ay)?;
    if !d.apply(&form)?.is_zero() {
        return Err(FormalityError::Internal(format!("Massey representative {form} is not closed")));
    }
    let representative = h.class_of(target, &form).map_err(|e| match e {
        CohomologyError::WrongSlot(_) | CohomologyError::NotClosed(_) => {
            FormalityError::Internal(format!("Massey representative {form} does not lie in {target}"))
        }
        other => other.into(),
    })?;
    let (indeterminacy_basis, span) = indeterminacy(h, a, b, c, target)?;
    let vanishes = span.contains(&representative.coordinates);
    Ok(MasseyResult {
        complex,
        inputs,
        defined: true,
        primitives: Some((x, y)),
        representative: Some(representative),
        indeterminacy_basis,
        vanishes,
    })
}

/// All defined, non-vanishing triple Massey products of basis classes in
/// positive degree whose result has total degree at most `max_total_degree`,
/// in lexicographic order of the input triples.
///
/// An empty result says nothing about formality.
pub fn massey_search(
    h: &FormCohomology,
    complex: MasseyComplex,
    max_total_degree: usize,
) -> Result<Vec<MasseyResult>, FormalityError> {
    let classes: Vec<CohomologyClass> = h
        .slots()
        .filter(|s| complex.admits(*s) && s.total_degree() > 0)
        .flat_map(|s| h.basis_classes(s))
        .collect();
    let mut products: HashMap<(usize, usize), bool> = HashMap::new();
    let mut vanishing_product = |i: usize, j: usize| -> Result<bool, FormalityError> {
        if let Some(&v) = products.get(&(i, j)) {
            return Ok(v);
        }
        let slot = classes[i].slot.plus(classes[j].slot).expect("same grading");
        let v = !h.contains_slot(slot) || h.cup(&classes[i], &classes[j])?.is_zero();
        products.insert((i, j), v);
        Ok(v)
    };
    let mut out = Vec::new();
    for i in 0..classes.len() {
        for j in 0..classes.len() {
            let ab_degree = classes[i].slot.total_degree() + classes[j].slot.total_degree();
            if ab_degree > max_total_degree || !vanishing_product(i, j)? {
                continue;
            }
            for k in 0..classes.len() {
                if ab_degree + classes[k].slot.total_degree() - 1 > max_total_degree {
                    continue;
                }
                if !vanishing_product(j, k)? {
                    continue;
                }
                let r = triple_massey(h, complex, &classes[i], &classes[j], &classes[k])?;
                if r.defined && !r.vanishes {
                    out.push(r);
                }
            }
        }
    }
    Ok(out)
}

/// Result degree bound used for the witnesses attached to a verdict report.
pub const WITNESS_DEGREE: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub formal: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub derham_formal: Verdict,
    pub dolbeault_formal: Verdict,
    pub zero_star_formal: Verdict,
    pub witnesses: Vec<MasseyResult>,
    pub notes: Vec<String>,
}

fn derham_reason(abelian: bool) -> String {
    if abelian {
        "g is abelian: the nilmanifold is a torus, whose de Rham algebra is formal \
         (Hasegawa; Nomizu identifies de Rham cohomology with H*(g))"
            .into()
    } else {
        "g is not abelian: a nilmanifold is formal only if it is a torus \
         (Hasegawa; Nomizu identifies de Rham cohomology with H*(g))"
            .into()
    }
}

fn dolbeault_reason(abelian: bool) -> String {
    if abelian {
        "g is abelian: the nilmanifold is a complex torus, whose Dolbeault algebra is formal".into()
    } else {
        "g is not abelian: its Chevalley–Eilenberg algebra is not formal (Hasegawa), and the \
         Milivojevic–Stelzig–Zoller domination argument transfers this to the Dolbeault algebra; \
         a complex nilmanifold's Dolbeault algebra is formal only for tori"
            .into()
    }
}

fn zero_star_reason(abelian_01: bool) -> String {
    if abelian_01 {
        "g^{0,1} is abelian (abelian complex structure): the (0,*)-Dolbeault algebra is the \
         Chevalley–Eilenberg algebra of g^{0,1}, formal exactly when g^{0,1} is abelian (Hasegawa)"
            .into()
    } else {
        "g^{0,1} is not abelian (non-abelian complex structure): the (0,*)-Dolbeault algebra is the \
         Chevalley–Eilenberg algebra of g^{0,1}, hence not formal (Hasegawa); Serre duality makes the \
         manifold side Poincaré duality, so Milivojevic–Stelzig–Zoller domination rules out formality there"
            .into()
    }
}

/// Formality verdicts for the de Rham, Dolbeault and (0,*)-Dolbeault algebras
/// of the nilmanifold, with Massey witnesses of bounded degree attached.
pub fn formality_verdicts(g: &LieAlgebra, cs: &ComplexStructure) -> Result<VerdictReport, FormalityError> {
    g.lower_central_series()?;
    let report = algebra::classify(g, cs)?;
    let bracket = algebra::dolbeault_bracket(g, cs)?;
    let m = cs.complex_dim();
    let n = 2 * m;
    let c = bracket.constants();
    let abelian_01 = (m..n).all(|a| (a + 1..n).all(|b| (0..n).all(|k| c.get(a, b, k).is_zero())));
    if abelian_01 != report.abelian_cs {
        return Err(FormalityError::Internal(
            "abelianness of g^{0,1} disagrees with the abelian-complex-structure check".into(),
        ));
    }
    let abelian = g.is_abelian();

    let mut witnesses = Vec::new();
    let de_rham = FormCohomology::de_rham(g, "de Rham")?;
    witnesses.extend(massey_search(&de_rham, MasseyComplex::Derham, WITNESS_DEGREE)?);
    let dolbeault = FormCohomology::dolbeault(g, cs, "Dolbeault")?;
    witnesses.extend(massey_search(&dolbeault, MasseyComplex::Dolbeault, WITNESS_DEGREE)?);
    let zero_star = massey_search(&dolbeault, MasseyComplex::ZeroStar, WITNESS_DEGREE)?;
    if abelian_01 && !zero_star.is_empty() {
        return Err(FormalityError::Internal(
            "non-vanishing Massey product in a formal (0,*)-Dolbeault algebra".into(),
        ));
    }
    if abelian && !witnesses.is_empty() {
        return Err(FormalityError::Internal("non-vanishing Massey product on an abelian algebra".into()));
    }
    witnesses.extend(zero_star);

    Ok(VerdictReport {
        derham_formal: Verdict { formal: abelian, reason: derham_reason(abelian) },
        dolbeault_formal: Verdict { formal: abelian, reason: dolbeault_reason(abelian) },
        zero_star_formal: Verdict { formal: abelian_01, reason: zero_star_reason(abelian_01) },
        witnesses,
        notes: vec![
            "verdicts are decided by the abelianness criteria; witnesses are corroborating evidence only".into(),
            "vanishing of Massey products does not imply formality; an empty witness list certifies nothing".into(),
            format!("only triple Massey products with result degree <= {WITNESS_DEGREE} are searched"),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureConstants;
    use crate::exterior::BasisKind;
    use crate::scalar::GaussianRational;

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

    fn gen(n: usize, kind: BasisKind, k: usize) -> Form {
        Form::generator(n, kind, k)
    }

    #[test]
    fn kodaira_thurston_de_rham_massey() {
        let h = FormCohomology::de_rham(&kt().0, "de Rham").unwrap();
        let e = |k| h.class_of(Slot::Degree(1), &gen(4, BasisKind::Real, k)).unwrap();
        let r = triple_massey(&h, MasseyComplex::Derham, &e(0), &e(0), &e(1)).unwrap();
        assert!(r.defined);
        assert!(!r.vanishes);
        let (x, y) = r.primitives.clone().unwrap();
        assert!(x.is_zero());
        assert_eq!(y.to_string(), "-1 e3");
        assert_eq!(r.representative.as_ref().unwrap().representative.to_string(), "-1 e13");
        let ind: Vec<String> = r
            .indeterminacy_basis
            .iter()
            .map(|c| c.representative.to_string())
            .collect();
        assert_eq!(ind, vec!["1 e14", "-1 e24"]);
        assert_eq!(r.label(), "<[1 e1],[1 e1],[1 e2]>");
    }

    #[test]
    fn iwasawa_dolbeault_massey() {
        let (g, cs) = iwasawa();
        let h = FormCohomology::dolbeault(&g, &cs, "Dolbeault").unwrap();
        let w = |k: usize| h.class_of(Slot::Bidegree(0, 1), &gen(6, BasisKind::Bigraded, 3 + k)).unwrap();
        let r = triple_massey(&h, MasseyComplex::ZeroStar, &w(0), &w(0), &w(1)).unwrap();
        assert!(r.defined && !r.vanishes);
        assert_eq!(r.representative.unwrap().representative.to_string(), "-1 W13");
        assert!(r.indeterminacy_basis.is_empty());
    }

    #[test]
    fn torus_products_vanish_or_are_undefined() {
        let g = LieAlgebra::abelian(4).unwrap();
        let h = FormCohomology::de_rham(&g, "de Rham").unwrap();
        let cls = h.basis_classes(Slot::Degree(1));
        for a in &cls {
            for b in &cls {
                for c in &cls {
                    let r = triple_massey(&h, MasseyComplex::Derham, a, b, c).unwrap();
                    assert!(!r.defined || r.vanishes);
                }
            }
        }
        assert!(massey_search(&h, MasseyComplex::Derham, 4).unwrap().is_empty());
    }

    #[test]
    fn searches_find_the_known_witnesses() {
        let h = FormCohomology::de_rham(&kt().0, "de Rham").unwrap();
        let found = massey_search(&h, MasseyComplex::Derham, 4).unwrap();
        assert!(found.iter().any(|r| r.label() == "<[1 e1],[1 e1],[1 e2]>"));

        let (g, cs) = iwasawa();
        let h = FormCohomology::dolbeault(&g, &cs, "Dolbeault").unwrap();
        let found = massey_search(&h, MasseyComplex::ZeroStar, 3).unwrap();
        assert!(found.iter().any(|r| r.label() == "<[1 W1],[1 W1],[1 W2]>"));
        assert!(found.iter().all(|r| r.inputs.iter().all(|i| matches!(i.slot, Slot::Bidegree(0, _)))));
    }

    #[test]
    fn rejects_foreign_primitives_and_classes() {
        let h = FormCohomology::de_rham(&kt().0, "de Rham").unwrap();
        let e = |k| h.class_of(Slot::Degree(1), &gen(4, BasisKind::Real, k)).unwrap();
        let wrong = gen(4, BasisKind::Real, 2);
        assert!(matches!(
            triple_massey_with_primitives(&h, MasseyComplex::Derham, &e(0), &e(0), &e(1), &wrong, &wrong),
            Err(FormalityError::InvalidPrimitive(_))
        ));
        assert!(matches!(
            triple_massey(&h, MasseyComplex::Dolbeault, &e(0), &e(0), &e(1)),
            Err(FormalityError::WrongComplex(_))
        ));
    }

    #[test]
    fn scaling_inputs_keeps_vanishing() {
        let h = FormCohomology::de_rham(&kt().0, "de Rham").unwrap();
        let e = |k| h.class_of(Slot::Degree(1), &gen(4, BasisKind::Real, k)).unwrap();
        let s = GaussianRational::ratio(-3, 7);
        let r = triple_massey(&h, MasseyComplex::Derham, &e(0).scale(&s), &e(0), &e(1)).unwrap();
        assert!(r.defined && !r.vanishes);
    }

    #[test]
    fn verdicts_for_the_examples() {
        let torus = LieAlgebra::abelian(4).unwrap();
        let v = formality_verdicts(&torus, &ComplexStructure::standard(4).unwrap()).unwrap();
        assert!(v.derham_formal.formal && v.dolbeault_formal.formal && v.zero_star_formal.formal);
        assert!(v.witnesses.is_empty());

        let (g, cs) = kt();
        let v = formality_verdicts(&g, &cs).unwrap();
        assert!(!v.derham_formal.formal && !v.dolbeault_formal.formal && v.zero_star_formal.formal);
        assert!(v.derham_formal.reason.contains("Hasegawa"));

        let (g, cs) = iwasawa();
        let v = formality_verdicts(&g, &cs).unwrap();
        assert!(!v.derham_formal.formal && !v.dolbeault_formal.formal && !v.zero_star_formal.formal);
        assert!(v.witnesses.iter().any(|w| w.complex == MasseyComplex::ZeroStar));
    }
}
