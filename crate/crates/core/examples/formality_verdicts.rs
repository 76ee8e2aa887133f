//! De Rham, Dolbeault and (0,*)-Dolbeault formality for every catalog entry.

use nilform::catalog;
use nilform::formality::formality_verdicts;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for e in catalog::entries() {
        let v = formality_verdicts(&e.algebra(), &e.complex_structure())?;
        let mark = |f: bool| if f { "formal" } else { "not formal" };
        println!("{}", e.name);
        println!("  de Rham    {}", mark(v.derham_formal.formal));
        println!("  Dolbeault  {}", mark(v.dolbeault_formal.formal));
        println!("  (0,*)      {}", mark(v.zero_star_formal.formal));
        println!("  witnesses  {}", v.witnesses.len());
    }
    Ok(())
}
