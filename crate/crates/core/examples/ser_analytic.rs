//! Closed-form symbol and frame error probabilities for each constellation.

use gdm::modem::{ser_curve, snr_range};
use gdm::ModulationKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid = snr_range(0.0, 16.0, 4.0)?;
    for kind in ModulationKind::ALL {
        for (label, exponent) in [("full", 15), ("compressed", 5)] {
            let curve = ser_curve(kind, exponent, &grid)?;
            print!("{kind:>6} {label:<10}");
            for pt in &curve.points {
                print!("  {:>4} dB: {:.2e}/{:.2e}", pt.es_n0_db, pt.p_m, pt.p_e);
            }
            println!();
        }
    }
    Ok(())
}
