//! Closed-form symbol error probabilities over AWGN and the frame error
//! curves built from them.
//!
//! With γ = Es/N0 (linear) and coherent minimum-distance detection:
//!
//! | constellation | P_M                                              |
//! |---------------|--------------------------------------------------|
//! | BPSK          | Q(√(2γ)) (exact)                                  |
//! | QPSK          | 2Q(√γ) − Q(√γ)² (exact)                           |
//! | 8-PSK         | 2Q(√(2γ)·sin(π/8)) (nearest-neighbour approximation) |
//! | 16-QAM        | 1 − (1 − P_√M)², P_√M = 1.5·Q(√(γ/5)) (exact)      |
//!
//! A frame whose decoding needs `e` independent symbols right fails with
//! probability `1 − (1 − P_M)^e`.

use std::f64::consts::PI;

use super::{ModemError, ModulationKind};

/// Gaussian tail probability Q(x) = ½·erfc(x/√2).
pub fn q_function(x: f64) -> f64 {
    0.5 * libm::erfc(x / std::f64::consts::SQRT_2)
}

pub fn db_to_linear(db: f64) -> f64 {
    libm::pow(10.0, db / 10.0)
}

/// Es/N0 (dB) to Eb/N0 (dB) for `bits` bits per symbol.
pub fn es_to_eb_db(es_n0_db: f64, bits: u32) -> f64 {
    es_n0_db - 10.0 * (bits as f64).log10()
}

/// Eb/N0 (dB) to Es/N0 (dB) for `bits` bits per symbol.
pub fn eb_to_es_db(eb_n0_db: f64, bits: u32) -> f64 {
    eb_n0_db + 10.0 * (bits as f64).log10()
}

/// Symbol error probability of `kind` at the given Es/N0 in dB.
pub fn analytical_symbol_error(kind: ModulationKind, es_n0_db: f64) -> f64 {
    let g = db_to_linear(es_n0_db);
    let p = match kind {
        ModulationKind::Bpsk => q_function((2.0 * g).sqrt()),
        ModulationKind::Qpsk => {
            let q = q_function(g.sqrt());
            2.0 * q - q * q
        }
        ModulationKind::Psk8 => 2.0 * q_function((2.0 * g).sqrt() * (PI / 8.0).sin()),
        ModulationKind::Qam16 => {
            let axis = 1.5 * q_function((g / 5.0).sqrt());
            1.0 - (1.0 - axis) * (1.0 - axis)
        }
    };
    p.clamp(0.0, 1.0)
}

/// `1 − (1 − p_m)^exponent`, evaluated as `−expm1(exponent·log1p(−p_m))`.
pub fn frame_error_probability(p_m: f64, exponent: u32) -> Result<f64, ModemError> {
    if !(0.0..=1.0).contains(&p_m) {
        return Err(ModemError::DomainError(p_m));
    }
    if exponent == 0 {
        return Err(ModemError::ZeroExponent);
    }
    if p_m == 1.0 {
        return Ok(1.0);
    }
    Ok(-libm::expm1(exponent as f64 * libm::log1p(-p_m)))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SerPoint {
    pub es_n0_db: f64,
    pub p_m: f64,
    pub p_e: f64,
}

/// Analytical symbol and frame error probabilities over an SNR grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SerCurve {
    pub kind: ModulationKind,
    /// Frame exponent: N uncompressed, the coset count compressed.
    pub exponent: u32,
    pub points: Vec<SerPoint>,
}

impl SerCurve {
    /// CSV with header `snr_db,p_m,p_e`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("snr_db,p_m,p_e\n");
        for pt in &self.points {
            out.push_str(&format!("{},{},{}\n", pt.es_n0_db, pt.p_m, pt.p_e));
        }
        out
    }
}

pub fn ser_curve(kind: ModulationKind, exponent: u32, snr_grid: &[f64]) -> Result<SerCurve, ModemError> {
    if snr_grid.is_empty() {
        return Err(ModemError::EmptyGrid);
    }
    let points = snr_grid
        .iter()
        .map(|&es_n0_db| {
            let p_m = analytical_symbol_error(kind, es_n0_db);
            Ok(SerPoint {
                es_n0_db,
                p_m,
                p_e: frame_error_probability(p_m, exponent)?,
            })
        })
        .collect::<Result<_, ModemError>>()?;
    Ok(SerCurve { kind, exponent, points })
}

/// Inclusive grid `start, start+step, …, ≤ stop`.
pub fn snr_range(start: f64, stop: f64, step: f64) -> Result<Vec<f64>, ModemError> {
    if step.is_nan() || step <= 0.0 || stop < start {
        return Err(ModemError::EmptyGrid);
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bpsk_zero_db() {
        // Q(√2) = 0.5·erfc(1)
        let p = analytical_symbol_error(ModulationKind::Bpsk, 0.0);
        assert!((p - 0.078_649_603_525_142_6).abs() < 1e-12, "{p}");
    }

    #[test]
    fn low_snr_limits() {
        assert!((analytical_symbol_error(ModulationKind::Bpsk, -300.0) - 0.5).abs() < 1e-12);
        assert!((analytical_symbol_error(ModulationKind::Qpsk, -300.0) - 0.75).abs() < 1e-12);
        assert!((analytical_symbol_error(ModulationKind::Qam16, -300.0) - 15.0 / 16.0).abs() < 1e-12);
        assert!(analytical_symbol_error(ModulationKind::Psk8, -300.0) <= 1.0);
    }

    #[test]
    fn frame_error_examples() {
        assert_eq!(frame_error_probability(0.0, 15).unwrap(), 0.0);
        assert_eq!(frame_error_probability(1.0, 15).unwrap(), 1.0);
        let p = frame_error_probability(1e-3, 15).unwrap();
        assert!((p - 0.014_895_453_637_998).abs() < 1e-15, "{p}");
        assert_eq!(frame_error_probability(1.5, 3), Err(ModemError::DomainError(1.5)));
        assert!(frame_error_probability(-0.1, 3).is_err());
        assert!(frame_error_probability(f64::NAN, 3).is_err());
    }

    #[test]
    fn grid_helpers() {
        assert_eq!(snr_range(0.0, 12.0, 4.0).unwrap(), vec![0.0, 4.0, 8.0, 12.0]);
        assert_eq!(snr_range(1.0, 1.0, 1.0).unwrap(), vec![1.0]);
        assert!(snr_range(2.0, 1.0, 1.0).is_err());
        assert!(ser_curve(ModulationKind::Bpsk, 15, &[]).is_err());
        assert!((es_to_eb_db(eb_to_es_db(3.0, 4), 4) - 3.0).abs() < 1e-12);
        assert!((es_to_eb_db(6.0, 2) - (6.0 - 3.010_299_956_639_812)).abs() < 1e-12);
    }

    #[test]
    fn csv_layout() {
        let c = ser_curve(ModulationKind::Qpsk, 5, &[0.0, 10.0]).unwrap();
        let csv = c.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("snr_db,p_m,p_e"));
        assert!(lines.next().unwrap().starts_with("0,0.2921390182628"));
        assert_eq!(csv.lines().count(), 3);
    }
}
