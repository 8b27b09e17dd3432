use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::ModemError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModulationKind {
    Bpsk,
    Qpsk,
    Psk8,
    Qam16,
}

impl ModulationKind {
    pub const ALL: [ModulationKind; 4] = [Self::Bpsk, Self::Qpsk, Self::Psk8, Self::Qam16];

    pub fn bits_per_symbol(self) -> u32 {
        match self {
            Self::Bpsk => 1,
            Self::Qpsk => 2,
            Self::Psk8 => 3,
            Self::Qam16 => 4,
        }
    }

    /// Number of constellation points M.
    pub fn order(self) -> usize {
        1 << self.bits_per_symbol()
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Bpsk => "bpsk",
            Self::Qpsk => "qpsk",
            Self::Psk8 => "8psk",
            Self::Qam16 => "16qam",
        }
    }
}

impl fmt::Display for ModulationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModulationKind {
    type Err = ModemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "bpsk" => Ok(Self::Bpsk),
            "qpsk" | "4psk" => Ok(Self::Qpsk),
            "8psk" | "psk8" => Ok(Self::Psk8),
            "16qam" | "qam16" => Ok(Self::Qam16),
            _ => Err(ModemError::UnknownModulation(s.to_string())),
        }
    }
}

/// Gray levels for two bits on one 16-QAM axis: 00→-3, 01→-1, 11→+1, 10→+3.
const QAM16_LEVELS: [f64; 4] = [-3.0, -1.0, 3.0, 1.0];

/// A unit-energy constellation indexed by bit label.
///
/// Labels are read most significant bit first. Layouts:
/// - BPSK: 0 → -1, 1 → +1.
/// - QPSK: first bit on I, second on Q, each 0 → -, 1 → +.
/// - 8-PSK: the point at angle 2πk/8 carries the Gray label k ^ (k >> 1).
/// - 16-QAM: bits b3 b2 pick the I level and b1 b0 the Q level, each pair
///   Gray mapped 00 → -3, 01 → -1, 11 → +1, 10 → +3, scaled by 1/√10.
#[derive(Clone, Debug, PartialEq)]
pub struct Constellation {
    kind: ModulationKind,
    points: Vec<Complex64>,
}

impl Constellation {
    pub fn new(kind: ModulationKind) -> Self {
        let points = match kind {
            ModulationKind::Bpsk => vec![Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)],
            ModulationKind::Qpsk => {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                (0..4u32)
                    .map(|l| {
                        let sign = |b: u32| if b == 1 { s } else { -s };
                        Complex64::new(sign(l >> 1), sign(l & 1))
                    })
                    .collect()
            }
            ModulationKind::Psk8 => {
                let mut pts = vec![Complex64::default(); 8];
                for k in 0..8usize {
                    let label = k ^ (k >> 1);
                    pts[label] = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 8.0);
                }
                pts
            }
            ModulationKind::Qam16 => {
                let scale = 1.0 / 10f64.sqrt();
                (0..16usize)
                    .map(|l| Complex64::new(QAM16_LEVELS[l >> 2] * scale, QAM16_LEVELS[l & 3] * scale))
                    .collect()
            }
        };
        Self { kind, points }
    }

    pub fn kind(&self) -> ModulationKind {
        self.kind
    }

    pub fn bits_per_symbol(&self) -> u32 {
        self.kind.bits_per_symbol()
    }

    /// Points indexed by label.
    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn point(&self, label: usize) -> Complex64 {
        self.points[label]
    }

    /// Minimum-distance decision.
    pub fn decide(&self, z: Complex64) -> usize {
        match self.kind {
            ModulationKind::Bpsk => usize::from(z.re >= 0.0),
            ModulationKind::Qpsk => (usize::from(z.re >= 0.0) << 1) | usize::from(z.im >= 0.0),
            ModulationKind::Psk8 => {
                let sector = (z.arg() / (PI / 4.0)).round().rem_euclid(8.0) as usize;
                sector ^ (sector >> 1)
            }
            ModulationKind::Qam16 => {
                let scaled = z * 10f64.sqrt();
                (qam16_axis(scaled.re) << 2) | qam16_axis(scaled.im)
            }
        }
    }

    /// Exhaustive minimum-distance decision over all points.
    pub fn decide_exhaustive(&self, z: Complex64) -> usize {
        self.points
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - z).norm_sqr().total_cmp(&(b.1 - z).norm_sqr()))
            .map(|(l, _)| l)
            .expect("constellations are nonempty")
    }

    pub fn average_energy(&self) -> f64 {
        self.points.iter().map(|p| p.norm_sqr()).sum::<f64>() / self.points.len() as f64
    }

    pub fn min_distance(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (i, a) in self.points.iter().enumerate() {
            for b in &self.points[i + 1..] {
                best = best.min((a - b).norm());
            }
        }
        best
    }
}

/// Two-bit Gray label for an unscaled 16-QAM axis value.
fn qam16_axis(v: f64) -> usize {
    if v < -2.0 {
        0b00
    } else if v < 0.0 {
        0b01
    } else if v < 2.0 {
        0b11
    } else {
        0b10
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_energy() {
        for kind in ModulationKind::ALL {
            let c = Constellation::new(kind);
            assert_eq!(c.points().len(), kind.order());
            assert!((c.average_energy() - 1.0).abs() < 1e-12, "{kind}");
        }
    }

    #[test]
    fn qam16_axis_gray_layout() {
        let c = Constellation::new(ModulationKind::Qam16);
        let s = 10f64.sqrt();
        assert_eq!(c.point(0b0000) * s, Complex64::new(-3.0, -3.0));
        assert_eq!(c.point(0b0111) * s, Complex64::new(-1.0, 1.0));
        assert!((c.point(0b1110) * s - Complex64::new(1.0, 3.0)).norm() < 1e-12);
    }

    #[test]
    fn fast_decisions_agree_with_exhaustive_search() {
        for kind in ModulationKind::ALL {
            let c = Constellation::new(kind);
            for i in 0..2000 {
                let t = i as f64 * 0.7548776662466927;
                let z = Complex64::new(1.6 * (t.fract() * 2.0 - 1.0), 1.6 * ((t * 1.3).fract() * 2.0 - 1.0));
                assert_eq!(c.decide(z), c.decide_exhaustive(z), "{kind} at {z}");
            }
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("16QAM".parse::<ModulationKind>().unwrap(), ModulationKind::Qam16);
        assert_eq!("8-psk".parse::<ModulationKind>().unwrap(), ModulationKind::Psk8);
        assert!("ofdm".parse::<ModulationKind>().is_err());
    }
}
