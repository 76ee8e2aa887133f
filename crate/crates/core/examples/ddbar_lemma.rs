//! The ∂∂̄-lemma fails on non-toral nilmanifolds; the report names a witness.

use nilform::catalog;
use nilform::cohomology::check_ddbar_lemma;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for e in catalog::entries() {
        let r = check_ddbar_lemma(&e.algebra(), &e.complex_structure())?;
        match r.first_failure() {
            None => println!("{}: holds", e.name),
            Some(f) => println!(
                "{}: fails at ({},{}), witness {}",
                e.name,
                f.p,
                f.q,
                f.witness.as_ref().map(ToString::to_string).unwrap_or_default()
            ),
        }
    }
    Ok(())
}
