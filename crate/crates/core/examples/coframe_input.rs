//! Loading a nilmanifold from structure equations of a (1,0)-coframe.

use nilform::algebra::classify;
use nilform::cohomology::betti_numbers;
use nilform::io;

const DOC: &str = r#"{
  "name": "iwasawa",
  "dim": 6,
  "complex_structure": {"kind": "coframe", "equations": [[], [], ["-1 w12"]]}
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let input = io::parse(DOC)?.validate()?;
    let (g, cs) = (&input.algebra, &input.complex_structure);
    let c = classify(g, cs)?;
    println!("{}: nilpotency class {}, abelian complex structure {}", input.name, c.nilpotency_class, c.abelian_cs);
    println!("betti {:?}", betti_numbers(g)?);
    for (a, eq) in io::coframe_equations(g, cs)?.iter().enumerate() {
        println!("dw{} = {eq}", a + 1);
    }
    println!("{}", io::InputDocument::from_algebra(&input.name, g, cs).to_json());
    Ok(())
}
