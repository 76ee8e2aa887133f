//! Dolbeault cohomology of the Kodaira–Thurston surface, with representatives.

use nilform::catalog;
use nilform::cohomology::{FormCohomology, Slot};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = catalog::entry("kodaira_thurston")?;
    let (g, cs) = (e.algebra(), e.complex_structure());
    let h = FormCohomology::dolbeault(&g, &cs, "Dolbeault")?;
    let m = cs.complex_dim();
    for p in 0..=m {
        let row: Vec<String> = (0..=m).map(|q| h.dim(Slot::Bidegree(p, q)).to_string()).collect();
        println!("h^({p},*) = {}", row.join(" "));
    }
    for c in h.basis_classes(Slot::Bidegree(1, 1)) {
        println!("H^(1,1) class: {}", c.representative);
    }
    Ok(())
}
