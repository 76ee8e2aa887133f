//! Betti numbers of Heisenberg-type nilmanifolds via Nomizu's theorem.

use nilform::cohomology::{betti_numbers, FormCohomology, Slot};
use nilform::{LieAlgebra, StructureConstants};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // [e1,e2] = e3
    let h3 = LieAlgebra::new(StructureConstants::new(3).with(0, 1, 2, 1))?;
    println!("h3:      {:?}", betti_numbers(&h3)?);

    // h5: [e1,e2] = [e3,e4] = e5
    let h5 = LieAlgebra::new(StructureConstants::new(5).with(0, 1, 4, 1).with(2, 3, 4, 1))?;
    println!("h5:      {:?}", betti_numbers(&h5)?);

    let h = FormCohomology::de_rham(&h3, "h3")?;
    for k in 0..=3 {
        let reps: Vec<String> = h.basis_classes(Slot::Degree(k)).iter().map(|c| c.representative.to_string()).collect();
        println!("H^{k}(h3) = span{{{}}}", reps.join(", "));
    }
    Ok(())
}
