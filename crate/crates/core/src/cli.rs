//! Command-line front end.
//!
//! `FILE` is a path to an input document or `catalog:NAME`. Exit status is 0
//! on success, 1 for invalid input and 2 for a violated internal invariant.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{self, ClassificationReport};
use crate::catalog;
use crate::cohomology::{self, CohomologyTable, DdbarReport, Dims, FormCohomology, Pairing, Slot};
use crate::error::Error;
use crate::formality::{self, MasseyComplex, MasseyResult, VerdictReport};
use crate::io::{self, Input};

#[derive(Parser, Debug)]
#[command(name = "nilform", version, about = "Exact cohomology and formality of nilpotent Lie algebras with complex structure")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate an input and classify its complex structure.
    Check { file: String },
    /// Print de Rham and/or Dolbeault cohomology tables.
    Cohomology {
        file: String,
        #[arg(long)]
        derham: bool,
        #[arg(long)]
        dolbeault: bool,
    },
    /// Formality verdicts with Massey witnesses.
    Verdicts { file: String },
    /// Search for non-vanishing triple Massey products.
    Massey {
        file: String,
        #[arg(long)]
        complex: MasseyComplex,
        #[arg(long = "max-degree")]
        max_degree: usize,
    },
    /// Ranks of the Dolbeault pairings into the top class.
    Pairing { file: String },
    /// Check the ∂∂̄-lemma bidegree by bidegree.
    Ddbar { file: String },
    /// List the built-in examples, or show one.
    Catalog { name: Option<String> },
}

fn resolve(file: &str) -> Result<Input, Error> {
    let doc = match file.strip_prefix("catalog:") {
        Some(name) => catalog::entry(name)?.document,
        None => io::load(file)?,
    };
    Ok(doc.validate()?)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn mark(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct CheckReport {
    name: String,
    dim: usize,
    classification: ClassificationReport,
    coframe_equations: Vec<Vec<String>>,
}

fn check(input: &Input, as_json: bool) -> Result<String, Error> {
    let (g, cs) = (&input.algebra, &input.complex_structure);
    let classification = algebra::classify(g, cs)?;
    let eqs = io::coframe_equations(g, cs)?;
    let report = CheckReport {
        name: input.name.clone(),
        dim: g.dim(),
        classification,
        coframe_equations: io::render_equations(&eqs),
    };
    if as_json {
        return Ok(json(&report));
    }
    let c = &report.classification;
    let mut s = String::new();
    writeln!(s, "{}: valid nilpotent Lie algebra of dimension {}", report.name, report.dim).unwrap();
    writeln!(s, "integrable: {}", mark(c.integrable)).unwrap();
    writeln!(s, "abelian complex structure: {}", mark(c.abelian_cs)).unwrap();
    writeln!(s, "bi-invariant: {}", mark(c.bi_invariant)).unwrap();
    writeln!(s, "rational: {}", mark(c.rational)).unwrap();
    writeln!(s, "nilpotency class: {}", c.nilpotency_class).unwrap();
    let lcs: Vec<String> = c.lcs_dims.iter().map(usize::to_string).collect();
    writeln!(s, "lower central series dims: {}", lcs.join(" ")).unwrap();
    writeln!(s, "structure equations:").unwrap();
    for (a, f) in eqs.iter().enumerate() {
        writeln!(s, "  dw{} = {}", a + 1, f).unwrap();
    }
    Ok(s)
}

fn render_table(s: &mut String, t: &CohomologyTable) {
    match &t.dims {
        Dims::Graded(b) => {
            let b: Vec<String> = b.iter().map(usize::to_string).collect();
            writeln!(s, "{} Betti numbers: {}", t.label, b.join(" ")).unwrap();
        }
        Dims::Bigraded(h) => {
            writeln!(s, "{} Hodge numbers h^(p,q) (rows p, columns q):", t.label).unwrap();
            let header: String = (0..h.len()).map(|q| format!(" q={q:<2}")).collect();
            writeln!(s, "     {header}").unwrap();
            for (p, row) in h.iter().enumerate() {
                let cells: String = row.iter().map(|d| format!(" {d:<4}")).collect();
                writeln!(s, "  p={p}{cells}").unwrap();
            }
        }
    }
    for r in &t.representatives {
        if r.forms.is_empty() {
            continue;
        }
        let forms: Vec<String> = r.forms.iter().map(|f| format!("[{f}]")).collect();
        writeln!(s, "  {}: {}", r.slot, forms.join(", ")).unwrap();
    }
}

#[derive(Serialize)]
struct CohomologyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    derham: Option<CohomologyTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dolbeault: Option<CohomologyTable>,
}

fn cohomology_cmd(input: &Input, derham: bool, dolbeault: bool, as_json: bool) -> Result<String, Error> {
    let both = !derham && !dolbeault;
    let (g, cs) = (&input.algebra, &input.complex_structure);
    let report = CohomologyReport {
        derham: (derham || both)
            .then(|| FormCohomology::de_rham(g, "de Rham").map(|h| h.table()))
            .transpose()?,
        dolbeault: (dolbeault || both)
            .then(|| cohomology::hodge_numbers(g, cs))
            .transpose()?,
    };
    if as_json {
        return Ok(json(&report));
    }
    let mut s = String::new();
    for t in report.derham.iter().chain(&report.dolbeault) {
        render_table(&mut s, t);
    }
    Ok(s)
}

fn render_massey(s: &mut String, r: &MasseyResult) {
    let rep = r
        .representative
        .as_ref()
        .map_or("undefined".to_string(), |c| format!("[{}]", c.representative));
    let ind: Vec<String> = r
        .indeterminacy_basis
        .iter()
        .map(|c| format!("[{}]", c.representative))
        .collect();
    writeln!(
        s,
        "  {:<9} {} = {} mod span({})",
        r.complex.name(),
        r.label(),
        rep,
        ind.join(", ")
    )
    .unwrap();
}

fn verdicts_cmd(input: &Input, as_json: bool) -> Result<String, Error> {
    let report: VerdictReport = formality::formality_verdicts(&input.algebra, &input.complex_structure)?;
    if as_json {
        return Ok(json(&report));
    }
    let mut s = String::new();
    let line = |s: &mut String, name: &str, v: &formality::Verdict| {
        let m = if v.formal { "✓ formal" } else { "✗ not formal" };
        writeln!(s, "{name:<10} {m} — {}", v.reason).unwrap();
    };
    line(&mut s, "derham", &report.derham_formal);
    line(&mut s, "dolbeault", &report.dolbeault_formal);
    line(&mut s, "zero-star", &report.zero_star_formal);
    writeln!(s, "witnesses: {}", report.witnesses.len()).unwrap();
    for w in &report.witnesses {
        render_massey(&mut s, w);
    }
    for n in &report.notes {
        writeln!(s, "note: {n}").unwrap();
    }
    Ok(s)
}

#[derive(Serialize)]
struct MasseyReport {
    complex: MasseyComplex,
    max_degree: usize,
    witnesses: Vec<MasseyResult>,
    note: &'static str,
}

const EMPTY_NOTE: &str = "vanishing of Massey products does not imply formality";

fn massey_cmd(input: &Input, complex: MasseyComplex, max_degree: usize, as_json: bool) -> Result<String, Error> {
    let h = formality::cohomology_for(&input.algebra, &input.complex_structure, complex)?;
    let witnesses = formality::massey_search(&h, complex, max_degree)?;
    let report = MasseyReport {
        complex,
        max_degree,
        witnesses,
        note: EMPTY_NOTE,
    };
    if as_json {
        return Ok(json(&report));
    }
    let mut s = String::new();
    writeln!(
        s,
        "{} non-vanishing triple Massey products in {} up to degree {}",
        report.witnesses.len(),
        complex.name(),
        max_degree
    )
    .unwrap();
    for w in &report.witnesses {
        render_massey(&mut s, w);
    }
    if report.witnesses.is_empty() {
        writeln!(s, "note: {EMPTY_NOTE}").unwrap();
    }
    Ok(s)
}

#[derive(Serialize)]
struct PairingReport {
    top_dim: usize,
    dolbeault: Vec<Pairing>,
    zero_star: Vec<Pairing>,
}

fn pairing_cmd(input: &Input, as_json: bool) -> Result<String, Error> {
    let h = FormCohomology::dolbeault(&input.algebra, &input.complex_structure, "Dolbeault")?;
    let m = input.complex_structure.complex_dim();
    let mut dolbeault = Vec::new();
    for p in 0..=m {
        for q in 0..=m {
            dolbeault.push(cohomology::pairing(&h, Slot::Bidegree(p, q), Slot::Bidegree(m - p, m - q))?);
        }
    }
    let zero_star = (0..=m)
        .map(|q| cohomology::zero_star_pairing(&h, q))
        .collect::<Result<Vec<_>, _>>()?;
    let report = PairingReport {
        top_dim: h.dim(Slot::Bidegree(m, m)),
        dolbeault,
        zero_star,
    };
    if as_json {
        return Ok(json(&report));
    }
    let mut s = String::new();
    writeln!(s, "dim H^({m},{m}) = {}", report.top_dim).unwrap();
    for p in report.dolbeault.iter().chain(&report.zero_star) {
        writeln!(
            s,
            "  {} x {} -> {}: rank {}, {}",
            p.left,
            p.right,
            p.top,
            p.rank,
            if p.nondegenerate { "nondegenerate" } else { "degenerate" }
        )
        .unwrap();
    }
    Ok(s)
}

fn ddbar_cmd(input: &Input, as_json: bool) -> Result<String, Error> {
    let report: DdbarReport = cohomology::check_ddbar_lemma(&input.algebra, &input.complex_structure)?;
    if as_json {
        return Ok(json(&report));
    }
    let mut s = String::new();
    writeln!(s, "ddbar-lemma: {}", if report.holds { "holds" } else { "fails" }).unwrap();
    for e in &report.bidegrees {
        match &e.witness {
            None => writeln!(s, "  ({},{}) holds", e.p, e.q).unwrap(),
            Some(w) => writeln!(s, "  ({},{}) fails: {w} is not ddbar-exact", e.p, e.q).unwrap(),
        }
    }
    Ok(s)
}

#[derive(Serialize)]
struct CatalogListing {
    name: &'static str,
    description: &'static str,
}

fn catalog_cmd(name: Option<&str>, as_json: bool) -> Result<String, Error> {
    match name {
        None => {
            let list: Vec<CatalogListing> = catalog::entries()
                .into_iter()
                .map(|e| CatalogListing {
                    name: e.name,
                    description: e.description,
                })
                .collect();
            if as_json {
                return Ok(json(&list));
            }
            Ok(list
                .iter()
                .map(|e| format!("{:<17} {}\n", e.name, e.description))
                .collect())
        }
        Some(name) => {
            let e = catalog::entry(name)?;
            if as_json {
                return Ok(json(&e));
            }
            let x = &e.expected;
            let mut s = String::new();
            writeln!(s, "{}: {}", e.name, e.description).unwrap();
            writeln!(s, "expected Betti numbers: {:?}", x.betti).unwrap();
            writeln!(s, "expected Hodge numbers: {:?}", x.hodge).unwrap();
            writeln!(
                s,
                "expected verdicts: derham {}, dolbeault {}, zero-star {}",
                mark(x.verdicts.derham_formal),
                mark(x.verdicts.dolbeault_formal),
                mark(x.verdicts.zero_star_formal)
            )
            .unwrap();
            writeln!(s, "document:\n{}", e.document.to_json()).unwrap();
            Ok(s)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<String, Error> {
    let j = cli.json;
    match &cli.command {
        Command::Check { file } => check(&resolve(file)?, j),
        Command::Cohomology { file, derham, dolbeault } => cohomology_cmd(&resolve(file)?, *derham, *dolbeault, j),
        Command::Verdicts { file } => verdicts_cmd(&resolve(file)?, j),
        Command::Massey { file, complex, max_degree } => massey_cmd(&resolve(file)?, *complex, *max_degree, j),
        Command::Pairing { file } => pairing_cmd(&resolve(file)?, j),
        Command::Ddbar { file } => ddbar_cmd(&resolve(file)?, j),
        Command::Catalog { name } => catalog_cmd(name.as_deref(), j),
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    kind: &'a str,
    message: String,
    exit_code: i32,
}

/// Runs the command line, writing the report to `out` and errors to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let as_json = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            return 1;
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let code = if e.is_internal() { 2 } else { 1 };
            if as_json {
                let report = ErrorReport {
                    kind: e.kind(),
                    message: e.to_string(),
                    exit_code: code,
                };
                let _ = err.write_all(json(&serde_json::json!({ "error": report })).as_bytes());
            } else {
                let _ = writeln!(err, "error[{}]: {e}", e.kind());
            }
            code
        }
    }
}

/// Runs against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
