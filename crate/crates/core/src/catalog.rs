//! Built-in examples with their expected invariants.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{ComplexStructure, LieAlgebra, StructureConstants};
use crate::io::InputDocument;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown catalog entry '{0}' (known: torus_c1, torus_c2, kodaira_thurston, iwasawa)")]
pub struct UnknownEntry(pub String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedVerdicts {
    pub derham_formal: bool,
    pub dolbeault_formal: bool,
    pub zero_star_formal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub betti: Vec<usize>,
    /// `hodge[p][q] = h^{p,q}`
    pub hodge: Vec<Vec<usize>>,
    pub abelian_cs: bool,
    pub bi_invariant: bool,
    pub nilpotency_class: usize,
    pub ddbar_lemma: bool,
    pub verdicts: ExpectedVerdicts,
}

impl Expected {
    pub fn h(&self, p: usize, q: usize) -> usize {
        self.hodge[p][q]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub document: InputDocument,
    pub expected: Expected,
}

impl CatalogEntry {
    pub fn algebra(&self) -> LieAlgebra {
        self.document.validate().expect("catalog entries are valid").algebra
    }

    pub fn complex_structure(&self) -> ComplexStructure {
        self.document
            .validate()
            .expect("catalog entries are valid")
            .complex_structure
    }
}

pub const NAMES: [&str; 4] = ["torus_c1", "torus_c2", "kodaira_thurston", "iwasawa"];

fn verdicts(derham: bool, dolbeault: bool, zero_star: bool) -> ExpectedVerdicts {
    ExpectedVerdicts {
        derham_formal: derham,
        dolbeault_formal: dolbeault,
        zero_star_formal: zero_star,
    }
}

fn document(name: &str, constants: StructureConstants) -> InputDocument {
    let n = constants.dim();
    let g = LieAlgebra::new(constants).expect("catalog brackets satisfy Jacobi");
    let cs = ComplexStructure::standard(n).expect("even dimension");
    InputDocument::from_algebra(name, &g, &cs)
}

fn grid(rows: &[&[usize]]) -> Vec<Vec<usize>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

pub fn entry(name: &str) -> Result<CatalogEntry, UnknownEntry> {
    Ok(match name {
        "torus_c1" => CatalogEntry {
            name: "torus_c1",
            description: "abelian R^2 with the standard complex structure (elliptic curve)",
            document: document(name, StructureConstants::new(2)),
            expected: Expected {
                betti: vec![1, 2, 1],
                hodge: grid(&[&[1, 1], &[1, 1]]),
                abelian_cs: true,
                bi_invariant: true,
                nilpotency_class: 1,
                ddbar_lemma: true,
                verdicts: verdicts(true, true, true),
            },
        },
        "torus_c2" => CatalogEntry {
            name: "torus_c2",
            description: "abelian R^4 with the standard complex structure",
            document: document(name, StructureConstants::new(4)),
            expected: Expected {
                betti: vec![1, 4, 6, 4, 1],
                hodge: grid(&[&[1, 2, 1], &[2, 4, 2], &[1, 2, 1]]),
                abelian_cs: true,
                bi_invariant: true,
                nilpotency_class: 1,
                ddbar_lemma: true,
                verdicts: verdicts(true, true, true),
            },
        },
        "kodaira_thurston" => CatalogEntry {
            name: "kodaira_thurston",
            description: "h3 + R with [e1,e2] = e3, Je1 = e2, Je3 = e4 (Kodaira surface)",
            document: document(name, StructureConstants::new(4).with(0, 1, 2, 1)),
            expected: Expected {
                betti: vec![1, 3, 4, 3, 1],
                hodge: grid(&[&[1, 2, 1], &[1, 2, 1], &[1, 2, 1]]),
                abelian_cs: true,
                bi_invariant: false,
                nilpotency_class: 2,
                ddbar_lemma: false,
                verdicts: verdicts(false, false, true),
            },
        },
        "iwasawa" => CatalogEntry {
            name: "iwasawa",
            description: "complex Heisenberg algebra: [e1,e3] = -[e2,e4] = e5, [e1,e4] = [e2,e3] = e6, \
                          Je1 = e2, Je3 = e4, Je5 = e6 (dω3 = -ω12)",
            document: document(
                name,
                StructureConstants::new(6)
                    .with(0, 2, 4, 1)
                    .with(1, 3, 4, -1)
                    .with(0, 3, 5, 1)
                    .with(1, 2, 5, 1),
            ),
            expected: Expected {
                betti: vec![1, 4, 8, 10, 8, 4, 1],
                hodge: grid(&[&[1, 2, 2, 1], &[3, 6, 6, 3], &[3, 6, 6, 3], &[1, 2, 2, 1]]),
                abelian_cs: false,
                bi_invariant: true,
                nilpotency_class: 2,
                ddbar_lemma: false,
                verdicts: verdicts(false, false, false),
            },
        },
        other => return Err(UnknownEntry(other.to_string())),
    })
}

pub fn entries() -> Vec<CatalogEntry> {
    NAMES.iter().map(|n| entry(n).expect("known name")).collect()
}
