//! Exact arithmetic over Q(i): everything downstream is computed without rounding.

use nilform::GaussianRational as Q;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a: Q = "1/2 - 3/4i".parse()?;
    let b: Q = "2i".parse()?;
    println!("a = {a}, b = {b}");
    println!("a + b = {}", &a + &b);
    println!("a * b = {}", &a * &b);
    println!("a / b = {}", a.checked_div(&b)?);
    println!("conj(a) = {}, |a|^2 = {}", a.conj(), a.norm_sqr());
    let i = Q::i();
    println!("i^2 = {}", &i * &i);
    Ok(())
}
