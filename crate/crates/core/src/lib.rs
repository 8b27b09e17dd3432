//! Galois-field division multiplexing (GDM).
//!
//! N users each contribute one GF(p) symbol per frame. The frame is spread
//! by the finite field Fourier transform over GF(p^m): user `i` rides the
//! carrier `(α^{ik})_k`, and the sum of all spread vectors is the spectrum
//! `V`. Because the users' symbols lie in the prime field, `V` satisfies
//! `V_k^p = V_{pk mod N}`, so only one value per cyclotomic coset needs to
//! be sent. The receiver rebuilds the full spectrum from the coset leaders
//! and inverts the transform.
//!
//! Modules, bottom up:
//!
//! - [`finite_field`]: GF(p^m) construction and table-driven arithmetic.
//! - [`ffft`]: the transform, its inverse, and the valid-spectrum test.
//! - [`carriers`]: spreading sequences and their correlation.
//! - [`gdm_mux`]: the multiplex pipeline and cyclotomic compression.
//! - [`modem`]: constellations, AWGN, analytical and Monte Carlo error rates.
//! - [`cli`]: the `gdm` command-line front end.

pub mod carriers;
pub mod cli;
pub mod ffft;
pub mod finite_field;
pub mod gdm_mux;
pub mod modem;

pub use finite_field::{BasePoly, FieldElement, FieldError, FieldParams, GaloisField};

pub use carriers::CarrierSet;
pub use ffft::{Spectrum, TimeVector, TransformPlan};
pub use gdm_mux::{CompressedSpectrum, CyclotomicStructure, Gdm, GdmConfig, UserFrame};
pub use modem::{ChannelModel, Constellation, ModulationKind, SerCurve};
