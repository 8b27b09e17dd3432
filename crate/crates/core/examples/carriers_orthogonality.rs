//! Galois-Fourier carriers over GF(16) and their in-field correlation.
//!
//! Row i of the carrier matrix is (α^{ik}) for k = 0..N-1. Distinct rows
//! correlate to zero; a row with itself gives N reduced mod p.

use gdm::{CarrierSet, GaloisField, TransformPlan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = GaloisField::gf16();
    for n in [15, 5] {
        let set = CarrierSet::new(TransformPlan::new(&f, n)?);
        println!("N = {n}, kernel {}", set.plan().kernel());
        for i in 0..n {
            let row: Vec<String> = set.carrier(i)?.iter().map(|e| format!("{e:>5}")).collect();
            println!("  c{i:<2} {}", row.join(" "));
        }

        let m = set.correlation_matrix();
        let off_diagonal_zero = m
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(t, r)| i == t || r.is_zero()));
        println!("  R(i,i) = {}, off-diagonal all zero: {off_diagonal_zero}\n", m[0][0]);
    }
    Ok(())
}
