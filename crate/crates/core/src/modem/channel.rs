//! AWGN channel and the reproducible noise source behind it.
//!
//! Randomness comes from ChaCha8 (`rand_chacha`): a master seed selects the
//! key and a 64-bit stream id selects an independent substream, so workers
//! can draw from `(seed, index)` without coordination. Gaussian samples use
//! the Box-Muller transform evaluated with `libm`, keeping the output
//! bit-identical across platforms.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded ChaCha8 substream `index` of `seed`.
pub fn substream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A pair of independent standard normal samples.
pub fn gaussian_pair<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    // u1 in (0, 1] so the logarithm is finite.
    let u1 = 1.0 - rng.random::<f64>();
    let u2 = rng.random::<f64>();
    let r = libm::sqrt(-2.0 * libm::log(u1));
    let theta = 2.0 * PI * u2;
    (r * libm::cos(theta), r * libm::sin(theta))
}

/// Additive white Gaussian noise at a given symbol SNR, for unit-energy
/// symbols.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelModel {
    /// Es/N0 in dB. `f64::INFINITY` disables noise.
    pub es_n0_db: f64,
    pub seed: u64,
}

impl ChannelModel {
    pub fn new(es_n0_db: f64, seed: u64) -> Self {
        Self { es_n0_db, seed }
    }

    pub fn noiseless() -> Self {
        Self::new(f64::INFINITY, 0)
    }

    /// Per-component noise variance N0/2 = 10^(-Es/N0 dB / 10) / 2.
    pub fn noise_variance(&self) -> f64 {
        if self.es_n0_db == f64::INFINITY {
            0.0
        } else {
            libm::pow(10.0, -self.es_n0_db / 10.0) / 2.0
        }
    }

    /// Add noise drawn from substream 0 of the channel seed.
    pub fn apply(&self, symbols: &[Complex64]) -> Vec<Complex64> {
        let mut out = symbols.to_vec();
        self.apply_in_place(&mut out, &mut substream(self.seed, 0));
        out
    }

    /// Add noise drawn from `rng`.
    pub fn apply_in_place<R: Rng + ?Sized>(&self, symbols: &mut [Complex64], rng: &mut R) {
        let sigma = self.noise_variance().sqrt();
        if sigma == 0.0 {
            return;
        }
        for s in symbols {
            let (a, b) = gaussian_pair(rng);
            *s += Complex64::new(sigma * a, sigma * b);
        }
    }
}

/// Pass symbols through the channel; deterministic in `ch.seed`.
pub fn awgn_channel(symbols: &[Complex64], ch: &ChannelModel) -> Vec<Complex64> {
    ch.apply(symbols)
}
