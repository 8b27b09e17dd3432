//! The GDM multiplex: spreading, cyclotomic compression, decompression and
//! despreading.
//!
//! A frame of N GF(p) symbols is spread into its spectrum `V` by the
//! forward transform. Since `V_k^p = V_{pk mod N}`, every spectral value is
//! determined by the value at the leader of its cyclotomic coset; only the
//! leaders are sent and the receiver regenerates the rest by repeated
//! p-th powers before inverting the transform.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::ffft::{Spectrum, TimeVector, TransformError, TransformPlan};
use crate::finite_field::{gcd, FieldElement, FieldError, FieldParams, GaloisField};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GdmError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error("length {n} is not coprime to the characteristic {p}")]
    NotCoprime { n: usize, p: u32 },
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("user {index} sent {value}, which is not in GF({p})")]
    NonBaseFieldSymbol { index: usize, value: u32, p: u32 },
    #[error("not the spectrum of a GF(p) frame: V_{k}^p != V_{pk_mod_n}")]
    InvalidSpectrum { k: usize, pk_mod_n: usize },
    #[error("leader value {value} for coset C({leader}) is not in GF(p^{size})")]
    InconsistentLeader {
        leader: usize,
        value: FieldElement,
        size: usize,
    },
    #[error("despread component {index} is {value}, outside the prime field")]
    NonBaseFieldResult { index: usize, value: FieldElement },
    #[error("compressed spectrum belongs to a different coset structure")]
    StructureMismatch,
    #[error("cannot parse user frame {0:?}")]
    Parse(String),
}

/// The cyclotomic cosets of p modulo N.
///
/// Each coset is stored as the cycle `(s, sp, sp², …) mod N` starting at its
/// leader `s`, the smallest member; cosets are sorted by leader.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicStructure {
    n: usize,
    p: u32,
    cosets: Vec<Vec<usize>>,
}

impl CyclotomicStructure {
    pub fn new(n: usize, p: u32) -> Result<Self, GdmError> {
        if n == 0 || gcd(n as u64, p as u64) != 1 {
            return Err(GdmError::NotCoprime { n, p });
        }
        let mut seen = vec![false; n];
        let mut cosets = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j);
                j = j * p as usize % n;
            }
            cosets.push(cycle);
        }
        Ok(Self { n, p, cosets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn leaders(&self) -> Vec<usize> {
        self.cosets.iter().map(|c| c[0]).collect()
    }

    /// Number of cosets.
    pub fn count(&self) -> usize {
        self.cosets.len()
    }

    /// The coset containing `k`.
    pub fn coset_of(&self, k: usize) -> Option<&[usize]> {
        self.cosets.iter().find(|c| c.contains(&k)).map(Vec::as_slice)
    }
}

impl fmt::Display for CyclotomicStructure {
    /// One coset per line: `C(3) = (3, 6, 12, 9)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cosets {
            let members: Vec<String> = c.iter().map(|k| k.to_string()).collect();
            writeln!(f, "C({}) = ({})", c[0], members.join(", "))?;
        }
        Ok(())
    }
}

/// Möbius function μ(n).
pub fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of monic irreducible polynomials of degree k over GF(p):
/// `(1/k) Σ_{d | k} μ(d) p^{k/d}`.
pub fn count_irreducible(k: u32, p: u32) -> u64 {
    assert!(k >= 1, "degree must be positive");
    let sum: i128 = (1..=k)
        .filter(|d| k.is_multiple_of(*d))
        .map(|d| mobius(d as u64) as i128 * (p as i128).pow(k / d))
        .sum();
    (sum / k as i128) as u64
}

/// Coset count of the full-length transform over GF(p^m), obtained from
/// irreducible-polynomial counts: `Σ_{k | m} I_k(p) - 1`.
pub fn coset_count_from_irreducibles(p: u32, m: u32) -> u64 {
    (1..=m)
        .filter(|k| m.is_multiple_of(*k))
        .map(|k| count_irreducible(k, p))
        .sum::<u64>()
        - 1
}

/// One GF(p) symbol per user.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UserFrame(pub Vec<u32>);

impl UserFrame {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u32>> for UserFrame {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for UserFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for UserFrame {
    type Err = GdmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map(UserFrame)
            .map_err(|_| GdmError::Parse(s.to_string()))
    }
}

/// Values at the coset leaders, ordered by leader.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressedSpectrum {
    structure: Arc<CyclotomicStructure>,
    leader_values: Vec<FieldElement>,
}

impl CompressedSpectrum {
    pub fn new(structure: Arc<CyclotomicStructure>, leader_values: Vec<FieldElement>) -> Result<Self, GdmError> {
        if leader_values.len() != structure.count() {
            return Err(GdmError::LengthMismatch {
                expected: structure.count(),
                got: leader_values.len(),
            });
        }
        Ok(Self {
            structure,
            leader_values,
        })
    }

    pub fn structure(&self) -> &CyclotomicStructure {
        &self.structure
    }

    pub fn leader_values(&self) -> &[FieldElement] {
        &self.leader_values
    }

    pub fn leader_values_mut(&mut self) -> &mut [FieldElement] {
        &mut self.leader_values
    }
}

impl fmt::Display for CompressedSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Spectrum(self.leader_values.clone()).to_string())
    }
}

/// Field, user count, and the abstract timing and bandwidth scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct GdmConfig {
    pub field: FieldParams,
    /// Number of users N; must divide p^m - 1.
    pub n: usize,
    /// Per-user symbol duration T. Each spectral value lasts T / N.
    pub symbol_duration: f64,
    /// Bandwidth B1 of a single user, in Hz.
    pub b1: f64,
}

impl GdmConfig {
    pub fn new(field: FieldParams, n: usize) -> Self {
        Self {
            field,
            n,
            symbol_duration: 1.0,
            b1: 1.0,
        }
    }

    /// Duration of one spectral value, T / N.
    pub fn chip_duration(&self) -> f64 {
        self.symbol_duration / self.n as f64
    }
}

/// A configured multiplexer: field, transform plan and coset structure.
#[derive(Clone, Debug)]
pub struct Gdm {
    config: GdmConfig,
    field: GaloisField,
    plan: TransformPlan,
    structure: Arc<CyclotomicStructure>,
}

impl Gdm {
    pub fn new(config: GdmConfig) -> Result<Self, GdmError> {
        let field = GaloisField::new(config.field.clone())?;
        Self::with_field(config, field)
    }

    /// Use an already constructed field (e.g. one with a searched generator).
    pub fn with_field(config: GdmConfig, field: GaloisField) -> Result<Self, GdmError> {
        let plan = TransformPlan::new(&field, config.n)?;
        let structure = Arc::new(CyclotomicStructure::new(config.n, field.characteristic())?);
        Ok(Self {
            config,
            field,
            plan,
            structure,
        })
    }

    pub fn config(&self) -> &GdmConfig {
        &self.config
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn plan(&self) -> &TransformPlan {
        &self.plan
    }

    pub fn structure(&self) -> &CyclotomicStructure {
        &self.structure
    }

    pub fn structure_arc(&self) -> Arc<CyclotomicStructure> {
        self.structure.clone()
    }

    pub fn n(&self) -> usize {
        self.config.n
    }

    /// Spread a frame: the transform of the users' GF(p) symbols.
    pub fn multiplex(&self, frame: &UserFrame) -> Result<Spectrum, GdmError> {
        let p = self.field.characteristic();
        if frame.len() != self.n() {
            return Err(GdmError::LengthMismatch {
                expected: self.n(),
                got: frame.len(),
            });
        }
        if let Some((index, &value)) = frame.0.iter().enumerate().find(|(_, &d)| d >= p) {
            return Err(GdmError::NonBaseFieldSymbol { index, value, p });
        }
        Ok(self.plan.ffft(&TimeVector::from_base(&self.field, &frame.0))?)
    }

    /// Multiplex many frames in parallel.
    pub fn multiplex_batch(&self, frames: &[UserFrame]) -> Result<Vec<Spectrum>, GdmError> {
        frames.par_iter().map(|f| self.multiplex(f)).collect()
    }

    /// Keep only the coset-leader values, after checking the conjugacy
    /// constraint on the whole spectrum.
    pub fn compress(&self, spectrum: &Spectrum) -> Result<CompressedSpectrum, GdmError> {
        let n = self.n();
        if spectrum.len() != n {
            return Err(GdmError::LengthMismatch {
                expected: n,
                got: spectrum.len(),
            });
        }
        let p = self.field.characteristic() as usize;
        if let Some(k) = (0..n).find(|&k| self.field.frobenius(spectrum[k]) != spectrum[p * k % n]) {
            return Err(GdmError::InvalidSpectrum { k, pk_mod_n: p * k % n });
        }
        let values = self.structure.cosets().iter().map(|c| spectrum[c[0]]).collect();
        CompressedSpectrum::new(self.structure.clone(), values)
    }

    /// Rebuild the full spectrum via `V_{sp^j} = V_s^{p^j}` along each coset.
    pub fn decompress(&self, compressed: &CompressedSpectrum) -> Result<Spectrum, GdmError> {
        if *compressed.structure != *self.structure {
            return Err(GdmError::StructureMismatch);
        }
        let mut out = vec![FieldElement::Zero; self.n()];
        for (coset, &leader_value) in self.structure.cosets().iter().zip(&compressed.leader_values) {
            let mut cur = self.field.check(leader_value)?;
            for &k in coset {
                out[k] = cur;
                cur = self.field.frobenius(cur);
            }
            // After |C| Frobenius steps the cycle must close on the leader.
            if cur != leader_value {
                return Err(GdmError::InconsistentLeader {
                    leader: coset[0],
                    value: leader_value,
                    size: coset.len(),
                });
            }
        }
        Ok(Spectrum(out))
    }

    /// Despread: inverse transform, rejecting results outside GF(p).
    pub fn demultiplex(&self, spectrum: &Spectrum) -> Result<UserFrame, GdmError> {
        let v = self.plan.iffft(spectrum)?;
        v.iter()
            .enumerate()
            .map(|(index, &value)| {
                self.field
                    .as_base(value)
                    .ok_or(GdmError::NonBaseFieldResult { index, value })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(UserFrame)
    }

    /// Bandwidth in units of B1.
    pub fn bandwidth_requirements(&self, compressed: bool) -> Ratio<u64> {
        bandwidth_requirements(&self.structure, compressed)
    }

    /// Bandwidth in Hz, scaling by the configured B1.
    pub fn bandwidth_hz(&self, compressed: bool) -> f64 {
        let r = self.bandwidth_requirements(compressed);
        *r.numer() as f64 / *r.denom() as f64 * self.config.b1
    }

    pub fn compactness_factor(&self) -> Ratio<u64> {
        compactness_factor(&self.structure)
    }
}

/// γ = N / v, users per transmitted coset value.
pub fn compactness_factor(structure: &CyclotomicStructure) -> Ratio<u64> {
    Ratio::new(structure.n() as u64, structure.count() as u64)
}

/// `N·B1` uncompressed, `N·B1/γ` compressed; returned in units of B1.
pub fn bandwidth_requirements(structure: &CyclotomicStructure, compressed: bool) -> Ratio<u64> {
    let n = Ratio::from_integer(structure.n() as u64);
    if compressed {
        n / compactness_factor(structure)
    } else {
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(k: u32) -> FieldElement {
        FieldElement::Pow(k)
    }

    const Z: FieldElement = FieldElement::Zero;

    fn gdm(n: usize) -> Gdm {
        Gdm::new(GdmConfig::new(FieldParams::gf16(), n)).unwrap()
    }

    fn frame15() -> UserFrame {
        UserFrame(vec![0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 0, 1])
    }

    fn spectrum15() -> Spectrum {
        Spectrum(vec![
            a(0),
            Z,
            Z,
            a(10),
            Z,
            a(5),
            a(5),
            a(10),
            Z,
            a(5),
            a(10),
            a(5),
            a(10),
            a(10),
            a(5),
        ])
    }

    #[test]
    fn cosets_mod_15_and_5() {
        let s = CyclotomicStructure::new(15, 2).unwrap();
        assert_eq!(
            s.cosets(),
            &[
                vec![0],
                vec![1, 2, 4, 8],
                vec![3, 6, 12, 9],
                vec![5, 10],
                vec![7, 14, 13, 11]
            ]
        );
        assert_eq!(s.leaders(), vec![0, 1, 3, 5, 7]);
        let s5 = CyclotomicStructure::new(5, 2).unwrap();
        assert_eq!(s5.cosets(), &[vec![0], vec![1, 2, 4, 3]]);
        assert_eq!(CyclotomicStructure::new(1, 2).unwrap().cosets(), &[vec![0]]);
        assert_eq!(CyclotomicStructure::new(6, 2), Err(GdmError::NotCoprime { n: 6, p: 2 }));
        assert!(s.to_string().contains("C(7) = (7, 14, 13, 11)"));
    }

    #[test]
    fn irreducible_counts() {
        assert_eq!(count_irreducible(1, 2), 2);
        assert_eq!(count_irreducible(2, 2), 1);
        assert_eq!(count_irreducible(4, 2), 3);
        assert_eq!(coset_count_from_irreducibles(2, 4), 5);
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn multiplex_examples() {
        assert_eq!(gdm(15).multiplex(&frame15()).unwrap(), spectrum15());
        assert_eq!(
            gdm(5).multiplex(&UserFrame(vec![0, 1, 1, 0, 1])).unwrap(),
            Spectrum(vec![a(0), a(7), a(14), a(11), a(13)])
        );
        assert_eq!(gdm(15).multiplex(&UserFrame(vec![0; 15])).unwrap(), Spectrum::zeros(15));
        assert!(matches!(
            gdm(5).multiplex(&UserFrame(vec![0, 2, 0, 0, 0])),
            Err(GdmError::NonBaseFieldSymbol {
                index: 1,
                value: 2,
                p: 2
            })
        ));
        assert!(matches!(
            gdm(5).multiplex(&UserFrame(vec![0; 4])),
            Err(GdmError::LengthMismatch { expected: 5, got: 4 })
        ));
    }

    #[test]
    fn compress_examples() {
        let g = gdm(15);
        let c = g.compress(&spectrum15()).unwrap();
        assert_eq!(c.leader_values(), &[a(0), Z, a(10), a(5), a(10)]);
        let g5 = gdm(5);
        let c5 = g5.compress(&Spectrum(vec![a(0), a(7), a(14), a(11), a(13)])).unwrap();
        assert_eq!(c5.leader_values(), &[a(0), a(7)]);
        assert_eq!(g.compress(&Spectrum::zeros(15)).unwrap().leader_values(), &[Z; 5]);

        let mut bad = Spectrum::zeros(15);
        bad.0[1] = a(1);
        assert!(matches!(g.compress(&bad), Err(GdmError::InvalidSpectrum { .. })));
    }

    #[test]
    fn decompress_examples() {
        let g = gdm(15);
        let c = CompressedSpectrum::new(g.structure_arc(), vec![a(0), Z, a(10), a(5), a(10)]).unwrap();
        let full = g.decompress(&c).unwrap();
        assert_eq!(full, spectrum15());
        assert_eq!((full[6], full[12], full[9]), (a(5), a(10), a(5)));

        let g5 = gdm(5);
        let c5 = CompressedSpectrum::new(g5.structure_arc(), vec![a(0), a(7)]).unwrap();
        assert_eq!(
            g5.decompress(&c5).unwrap(),
            Spectrum(vec![a(0), a(7), a(14), a(11), a(13)])
        );

        let bad = CompressedSpectrum::new(g.structure_arc(), vec![a(0), Z, a(10), a(1), a(10)]).unwrap();
        assert_eq!(
            g.decompress(&bad),
            Err(GdmError::InconsistentLeader {
                leader: 5,
                value: a(1),
                size: 2
            })
        );
        assert!(g.decompress(&c5).is_err());
        assert!(CompressedSpectrum::new(g.structure_arc(), vec![Z; 4]).is_err());
    }

    #[test]
    fn demultiplex_examples() {
        assert_eq!(gdm(15).demultiplex(&spectrum15()).unwrap(), frame15());
        assert_eq!(
            gdm(5)
                .demultiplex(&Spectrum(vec![a(0), a(7), a(14), a(11), a(13)]))
                .unwrap(),
            UserFrame(vec![0, 1, 1, 0, 1])
        );
        assert_eq!(
            gdm(15).demultiplex(&Spectrum::zeros(15)).unwrap(),
            UserFrame(vec![0; 15])
        );
        let mut bad = Spectrum::zeros(15);
        bad.0[1] = a(1);
        assert!(matches!(
            gdm(15).demultiplex(&bad),
            Err(GdmError::NonBaseFieldResult { .. })
        ));
    }

    #[test]
    fn compactness_and_bandwidth() {
        assert_eq!(gdm(15).compactness_factor(), Ratio::from_integer(3));
        assert_eq!(gdm(5).compactness_factor(), Ratio::new(5, 2));
        assert_eq!(gdm(1).compactness_factor(), Ratio::from_integer(1));
        assert_eq!(gdm(15).bandwidth_requirements(false), Ratio::from_integer(15));
        assert_eq!(gdm(15).bandwidth_requirements(true), Ratio::from_integer(5));
        assert_eq!(gdm(1).bandwidth_requirements(true), Ratio::from_integer(1));
        assert_eq!(gdm(1).bandwidth_requirements(false), Ratio::from_integer(1));
        let mut cfg = GdmConfig::new(FieldParams::gf16(), 15);
        cfg.b1 = 2.5;
        cfg.symbol_duration = 3.0;
        let g = Gdm::new(cfg).unwrap();
        assert_eq!(g.bandwidth_hz(true), 12.5);
        assert_eq!(g.config().chip_duration(), 0.2);
    }

    #[test]
    fn frame_text() {
        assert_eq!("0,1, 1 0".parse::<UserFrame>().unwrap(), UserFrame(vec![0, 1, 1, 0]));
        assert!("0,x".parse::<UserFrame>().is_err());
        assert_eq!(frame15().to_string(), "0,1,1,0,1,0,0,0,1,0,1,1,0,0,1");
    }
}
