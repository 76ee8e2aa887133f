//! Serre-duality pairings on Dolbeault cohomology and on its (0,*) part.

use nilform::catalog;
use nilform::cohomology::{poincare_pairing, zero_star_pairing, FormCohomology};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = catalog::entry("iwasawa")?;
    let (g, cs) = (e.algebra(), e.complex_structure());
    let m = cs.complex_dim();
    for p in 0..=m {
        for q in 0..=m {
            let pr = poincare_pairing(&g, &cs, p, q)?;
            println!("H^({p},{q}) x H^({},{}): rank {}, nondegenerate {}", m - p, m - q, pr.rank, pr.nondegenerate);
        }
    }
    let h = FormCohomology::dolbeault(&g, &cs, "Dolbeault")?;
    let pr = zero_star_pairing(&h, 1)?;
    println!("(0,*) pairing H^(0,1) x H^(0,2):");
    for row in &pr.matrix {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  {}", cells.join("  "));
    }
    Ok(())
}
