//! Build GF(16) from x^4 + x + 1 and print every element with its
//! coefficient vector, multiplicative order and minimal polynomial.
//!
//! ```text
//! cargo run --example field_table
//! cargo run --example field_table -- 3 2
//! ```

use gdm::finite_field::default_params;
use gdm::{FieldElement, GaloisField};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (p, m) = match args[..] {
        [p, m] => (p, m),
        _ => (2, 4),
    };
    let params = default_params(p, m).ok_or("no built-in polynomial for that field")?;
    let f = GaloisField::new(params)?;
    println!("GF({p}^{m}) reduced by {}", f.params().poly);
    println!(
        "{:>6}  {:>8}  {:<14} {:>5}  minimal polynomial",
        "power", "packed", "vector", "order"
    );

    println!(
        "{:>6}  {:>8}  {:<14} {:>5}  x",
        "0",
        "",
        f.format_coefficients(FieldElement::Zero),
        "-"
    );
    for e in f.elements().skip(1) {
        println!(
            "{:>6}  {:>8}  {:<14} {:>5}  {}",
            e.to_string(),
            format!("#{}", f.packed(e)),
            f.format_coefficients(e),
            f.element_order(e)?,
            f.minimal_polynomial(e)
        );
    }
    Ok(())
}
