//! End-to-end Monte Carlo over the full chain:
//! multiplex → (compress) → map → AWGN → demap → (decompress) → demultiplex.
//!
//! Frames are processed in fixed chunks of [`FRAMES_PER_CHUNK`]; chunk `c`
//! draws user data and noise from substream `c` of the channel seed. Counts
//! are integers summed over chunks, so the result does not depend on how
//! many worker threads run the chunks.

use rand::Rng;
use rayon::prelude::*;

use super::channel::substream;
use super::{ChannelModel, FrameModulation, ModemError, ModulationKind};
use crate::ffft::Spectrum;
use crate::gdm_mux::{CompressedSpectrum, Gdm, UserFrame};

pub const FRAMES_PER_CHUNK: u64 = 256;

#[derive(Clone, Debug)]
pub struct McConfig {
    pub gdm: Gdm,
    pub kind: ModulationKind,
    /// Send only coset-leader values.
    pub compressed: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

/// Error counts from a Monte Carlo run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct McResult {
    pub frames: u64,
    pub frame_errors: u64,
    /// Constellation symbols sent.
    pub symbols: u64,
    pub symbol_errors: u64,
    /// Field elements sent (N per frame, or the coset count when compressed).
    pub field_symbols: u64,
    pub field_symbol_errors: u64,
}

fn rate(errors: u64, trials: u64) -> f64 {
    if trials == 0 {
        0.0
    } else {
        errors as f64 / trials as f64
    }
}

/// Binomial standard error sqrt(p(1-p)/n).
pub fn binomial_std_err(p: f64, n: u64) -> f64 {
    if n == 0 {
        0.0
    } else {
        (p * (1.0 - p) / n as f64).sqrt()
    }
}

impl McResult {
    /// Constellation symbol error rate.
    pub fn p_m(&self) -> f64 {
        rate(self.symbol_errors, self.symbols)
    }

    /// Field-symbol error rate.
    pub fn p_s(&self) -> f64 {
        rate(self.field_symbol_errors, self.field_symbols)
    }

    /// Frame error rate.
    pub fn p_e(&self) -> f64 {
        rate(self.frame_errors, self.frames)
    }

    pub fn p_m_std_err(&self) -> f64 {
        binomial_std_err(self.p_m(), self.symbols)
    }

    /// Standard error of the frame error rate, reported as the confidence
    /// radius.
    pub fn ci_radius(&self) -> f64 {
        binomial_std_err(self.p_e(), self.frames)
    }

    fn merge(mut self, other: Self) -> Self {
        self.frames += other.frames;
        self.frame_errors += other.frame_errors;
        self.symbols += other.symbols;
        self.symbol_errors += other.symbol_errors;
        self.field_symbols += other.field_symbols;
        self.field_symbol_errors += other.field_symbol_errors;
        self
    }
}

pub fn monte_carlo_ser(cfg: &McConfig, n_frames: u64, ch: &ChannelModel) -> Result<McResult, ModemError> {
    if n_frames == 0 {
        return Err(ModemError::NoFrames);
    }
    let fm = FrameModulation::new(cfg.gdm.field(), cfg.kind)?;
    let chunks = n_frames.div_ceil(FRAMES_PER_CHUNK);
    let run = || {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let start = c * FRAMES_PER_CHUNK;
                let count = FRAMES_PER_CHUNK.min(n_frames - start);
                run_chunk(cfg, &fm, ch, c, count)
            })
            .try_reduce(McResult::default, |a, b| Ok(a.merge(b)))
    };
    match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| ModemError::ThreadPool(e.to_string()))?
            .install(run),
        None => run(),
    }
}

fn run_chunk(
    cfg: &McConfig,
    fm: &FrameModulation,
    ch: &ChannelModel,
    chunk: u64,
    count: u64,
) -> Result<McResult, ModemError> {
    let gdm = &cfg.gdm;
    let p = gdm.field().characteristic();
    let constellation = fm.constellation();
    let mut rng = substream(ch.seed, chunk);
    let mut out = McResult::default();

    for _ in 0..count {
        let frame = UserFrame((0..gdm.n()).map(|_| rng.random_range(0..p)).collect());
        let spectrum = gdm.multiplex(&frame)?;
        let payload = if cfg.compressed {
            gdm.compress(&spectrum)?.leader_values().to_vec()
        } else {
            spectrum.into_inner()
        };

        let labels = fm.labels(&payload);
        let mut rx: Vec<_> = labels.iter().map(|&l| constellation.point(l)).collect();
        ch.apply_in_place(&mut rx, &mut rng);
        let decided: Vec<usize> = rx.iter().map(|&z| constellation.decide(z)).collect();
        let elements = fm.unpack_labels(&decided, payload.len());

        out.frames += 1;
        out.symbols += labels.len() as u64;
        out.symbol_errors += labels.iter().zip(&decided).filter(|(a, b)| a != b).count() as u64;
        out.field_symbols += payload.len() as u64;
        out.field_symbol_errors += payload.iter().zip(&elements).filter(|(a, b)| a != b).count() as u64;

        let recovered = if cfg.compressed {
            CompressedSpectrum::new(gdm.structure_arc(), elements)
                .and_then(|c| gdm.decompress(&c))
                .and_then(|s| gdm.demultiplex(&s))
        } else {
            gdm.demultiplex(&Spectrum(elements))
        };
        if recovered.as_ref() != Ok(&frame) {
            out.frame_errors += 1;
        }
    }
    Ok(out)
}
