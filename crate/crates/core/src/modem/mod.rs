//! Carrying GF(2^m) spectra over digital constellations.
//!
//! Each field element is serialized as its m-bit coefficient vector, highest
//! degree first, the bits of a frame are concatenated and then cut into
//! constellation labels. When the bit count is not a multiple of the label
//! width the stream is zero-padded and the padding is dropped on demapping.

mod channel;
mod constellation;
mod monte_carlo;
mod ser;

use num_complex::Complex64;
use num_rational::Ratio;

pub use channel::{awgn_channel, gaussian_pair, substream, ChannelModel};
pub use constellation::{Constellation, ModulationKind};
pub use monte_carlo::{binomial_std_err, monte_carlo_ser, McConfig, McResult, FRAMES_PER_CHUNK};
pub use ser::{
    analytical_symbol_error, db_to_linear, eb_to_es_db, es_to_eb_db, frame_error_probability, q_function, ser_curve,
    snr_range, SerCurve, SerPoint,
};

use crate::finite_field::{FieldElement, GaloisField};
use crate::gdm_mux::GdmError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModemError {
    #[error("GF({p}^m) symbols cannot be bit-packed onto a binary-labeled constellation")]
    UnsupportedFieldConstellationPair { p: u32 },
    #[error("expected {expected} received symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("probability {0} outside [0, 1]")]
    DomainError(f64),
    #[error("frame exponent must be at least 1")]
    ZeroExponent,
    #[error("SNR grid is empty")]
    EmptyGrid,
    #[error("unknown modulation {0:?}")]
    UnknownModulation(String),
    #[error("frame count must be at least 1")]
    NoFrames,
    #[error("cannot build worker pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Gdm(#[from] GdmError),
}

/// A field paired with a constellation: bit packing and symbol accounting.
#[derive(Clone, Debug)]
pub struct FrameModulation {
    field: GaloisField,
    constellation: Constellation,
}

impl FrameModulation {
    pub fn new(field: &GaloisField, kind: ModulationKind) -> Result<Self, ModemError> {
        if field.characteristic() != 2 {
            return Err(ModemError::UnsupportedFieldConstellationPair {
                p: field.characteristic(),
            });
        }
        Ok(Self {
            field: field.clone(),
            constellation: Constellation::new(kind),
        })
    }

    pub fn constellation(&self) -> &Constellation {
        &self.constellation
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    /// m·log2(p) bits per field element.
    pub fn bits_per_field_symbol(&self) -> u32 {
        self.field.degree()
    }

    /// Constellation symbols needed for `field_symbols` field elements.
    pub fn symbols_per_frame(&self, field_symbols: usize) -> usize {
        let bits = field_symbols * self.bits_per_field_symbol() as usize;
        bits.div_ceil(self.constellation.bits_per_symbol() as usize)
    }

    /// Occupied bandwidth in units of B1: one B1 per constellation symbol
    /// per frame interval.
    pub fn bandwidth(&self, field_symbols: usize) -> Ratio<u64> {
        Ratio::from_integer(self.symbols_per_frame(field_symbols) as u64)
    }

    /// Bandwidth relative to TDM of `users` users (N·B1).
    pub fn bandwidth_vs_tdm(&self, field_symbols: usize, users: usize) -> Ratio<u64> {
        self.bandwidth(field_symbols) / Ratio::from_integer(users as u64)
    }

    /// Pack elements into constellation labels.
    pub fn labels(&self, elements: &[FieldElement]) -> Vec<usize> {
        let m = self.bits_per_field_symbol();
        let k = self.constellation.bits_per_symbol();
        let mut labels = Vec::with_capacity(self.symbols_per_frame(elements.len()));
        let (mut acc, mut filled) = (0usize, 0u32);
        for &e in elements {
            let packed = self.field.packed(e) as usize;
            for b in (0..m).rev() {
                acc = (acc << 1) | ((packed >> b) & 1);
                filled += 1;
                if filled == k {
                    labels.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            labels.push(acc << (k - filled));
        }
        labels
    }

    /// Inverse of [`labels`](Self::labels) for `n_elements` elements.
    pub fn unpack_labels(&self, labels: &[usize], n_elements: usize) -> Vec<FieldElement> {
        let m = self.bits_per_field_symbol();
        let k = self.constellation.bits_per_symbol();
        let mut out = Vec::with_capacity(n_elements);
        let (mut acc, mut filled) = (0u32, 0u32);
        'outer: for &label in labels {
            for b in (0..k).rev() {
                acc = (acc << 1) | ((label >> b) & 1) as u32;
                filled += 1;
                if filled == m {
                    out.push(self.field.from_packed(acc));
                    acc = 0;
                    filled = 0;
                    if out.len() == n_elements {
                        break 'outer;
                    }
                }
            }
        }
        out
    }

    /// Field elements to constellation points.
    pub fn map_spectrum(&self, elements: &[FieldElement]) -> Vec<Complex64> {
        self.labels(elements)
            .into_iter()
            .map(|l| self.constellation.point(l))
            .collect()
    }

    /// Minimum-distance detection followed by bit unpacking.
    pub fn demap(&self, received: &[Complex64], n_elements: usize) -> Result<Vec<FieldElement>, ModemError> {
        let expected = self.symbols_per_frame(n_elements);
        if received.len() != expected {
            return Err(ModemError::LengthMismatch {
                expected,
                got: received.len(),
            });
        }
        let labels: Vec<usize> = received.iter().map(|&z| self.constellation.decide(z)).collect();
        Ok(self.unpack_labels(&labels, n_elements))
    }
}
