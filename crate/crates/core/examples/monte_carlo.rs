//! Simulate the full chain over AWGN and compare with the closed form.
//!
//! ```text
//! cargo run --release --example monte_carlo -- 16qam 20000
//! ```

use gdm::modem::{analytical_symbol_error, frame_error_probability, monte_carlo_ser, McConfig};
use gdm::{ChannelModel, FieldParams, Gdm, GdmConfig, ModulationKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let kind: ModulationKind = args.next().as_deref().unwrap_or("qpsk").parse()?;
    let frames: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5_000);

    let gdm = Gdm::new(GdmConfig::new(FieldParams::gf16(), 15))?;
    let per_frame = gdm::modem::FrameModulation::new(gdm.field(), kind)?.symbols_per_frame(15) as u32;
    let cfg = McConfig {
        gdm,
        kind,
        compressed: false,
        threads: None,
    };

    println!("{kind}, {frames} frames of {per_frame} symbols");
    println!(
        "{:>6} {:>11} {:>11} {:>11} {:>11}",
        "Es/N0", "P_M sim", "P_M theory", "P_E sim", "P_E theory"
    );
    for db in [0.0, 4.0, 8.0, 12.0] {
        let r = monte_carlo_ser(&cfg, frames, &ChannelModel::new(db, 1))?;
        let p = analytical_symbol_error(kind, db);
        println!(
            "{db:>6} {:>11.3e} {p:>11.3e} {:>11.3e} {:>11.3e}",
            r.p_m(),
            r.p_e(),
            frame_error_probability(p, per_frame)?
        );
    }
    Ok(())
}
