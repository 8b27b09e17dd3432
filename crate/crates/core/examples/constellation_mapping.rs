//! How GF(16) elements land on each constellation, and how many channel
//! symbols a 15-user frame costs with and without compression.

use gdm::modem::FrameModulation;
use gdm::{GaloisField, ModulationKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = GaloisField::gf16();
    let qam = FrameModulation::new(&f, ModulationKind::Qam16)?;
    let scale = 10f64.sqrt();

    println!("16-QAM, 2D Gray (points scaled by sqrt(10)):");
    for e in f.elements() {
        let z = qam.map_spectrum(&[e])[0] * scale;
        println!(
            "  {:>5}  {}  ({:+.0}, {:+.0})",
            e.to_string(),
            f.format_coefficients(e),
            z.re,
            z.im
        );
    }

    println!("\nsymbols per frame, N = 15 (compressed to 5 leaders):");
    for kind in ModulationKind::ALL {
        let fm = FrameModulation::new(&f, kind)?;
        println!(
            "  {kind:>6}: {:>3} ({:>2})   {} B1 vs {} B1 compressed",
            fm.symbols_per_frame(15),
            fm.symbols_per_frame(5),
            fm.bandwidth(15),
            fm.bandwidth(5)
        );
    }
    Ok(())
}
