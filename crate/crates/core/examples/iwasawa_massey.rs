//! Non-vanishing triple Massey products on the Iwasawa manifold.

use nilform::catalog;
use nilform::formality::{cohomology_for, massey_search, MasseyComplex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = catalog::entry("iwasawa")?;
    let (g, cs) = (e.algebra(), e.complex_structure());
    for complex in [MasseyComplex::Derham, MasseyComplex::Dolbeault, MasseyComplex::ZeroStar] {
        let h = cohomology_for(&g, &cs, complex)?;
        let found = massey_search(&h, complex, 3)?;
        println!("{}: {} non-vanishing products", complex.name(), found.len());
        if let Some(r) = found.first() {
            let rep = r.representative.as_ref().expect("defined");
            let ind: Vec<String> = r.indeterminacy_basis.iter().map(|c| format!("[{}]", c.representative)).collect();
            println!("  e.g. {} = [{}] mod span({})", r.label(), rep.representative, ind.join(", "));
        }
    }
    Ok(())
}
