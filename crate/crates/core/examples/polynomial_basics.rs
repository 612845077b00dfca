//! Exact rational polynomials: parsing, arithmetic, gcd and square-free parts.
//!
//!     cargo run --example polynomial_basics

use realroots::poly::rat;
use realroots::Polynomial;

fn main() -> realroots::Result<()> {
    // coefficients lowest degree first: -2 + x^2
    let f: Polynomial = "-2 0 1".parse()?;
    let g = Polynomial::parse_any(r#"["1/2", "1"]"#)?;
    println!("f = {}", f.pretty());
    println!("g = {}", g.pretty());
    println!("f * g = {}", (&f * &g).pretty());
    println!("f'' = {}", f.derivative(2).pretty());
    println!("f(x + 1/2) = {}", f.translate(&rat(1, 2)).pretty());
    println!("f(3/2) = {}", f.evaluate(&rat(3, 2)));

    let h = &(&f * &g) * &g;
    println!("h = {}", h.pretty());
    println!("gcd(h, h') = {}", h.gcd(&h.derivative(1)).pretty());
    for (factor, m) in h.squarefree_decomposition() {
        println!("  ({})^{m}", factor.pretty());
    }
    println!(
        "text form: {:?}, JSON: {}",
        h.to_text(),
        serde_json::to_string(&h).unwrap()
    );
    Ok(())
}
