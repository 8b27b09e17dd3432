//! Finite field Fourier transform of length N | p^m - 1.
//!
//! `V_k = Σ_i v_i α^{ik}` and `v_i = N^{-1} Σ_k V_k α^{-ik}`, with α of
//! multiplicative order exactly N and `N^{-1}` the inverse of N's image in
//! the field. Evaluation is the direct O(N²) sum over a precomputed table of
//! kernel powers.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::finite_field::{FieldElement, FieldError, GaloisField};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransformError {
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("kernel {alpha} has order {order}, transform length must match")]
    KernelOrder { alpha: FieldElement, order: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Precomputed state for transforms of one length over one field.
#[derive(Clone, Debug)]
pub struct TransformPlan {
    field: GaloisField,
    n: usize,
    alpha: FieldElement,
    powers: Vec<FieldElement>,
    n_inv: FieldElement,
}

impl TransformPlan {
    /// Plan of length `n` with kernel α^((p^m-1)/n).
    pub fn new(field: &GaloisField, n: usize) -> Result<Self, TransformError> {
        let alpha = field.find_element_of_order(n as u64)?;
        Self::with_kernel(field, alpha)
    }

    /// Plan whose length is the multiplicative order of `alpha`.
    pub fn with_kernel(field: &GaloisField, alpha: FieldElement) -> Result<Self, TransformError> {
        let alpha = field.check(alpha)?;
        let n = field.element_order(alpha)? as usize;
        let powers = (0..n as i64)
            .map(|k| field.pow(alpha, k))
            .collect::<Result<Vec<_>, _>>()?;
        // n divides p^m - 1, so n mod p ≠ 0 and its image is invertible.
        let n_inv = field.inv(field.embed_integer(n as u64))?;
        Ok(Self {
            field: field.clone(),
            n,
            alpha,
            powers,
            n_inv,
        })
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    /// Transform length N.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The kernel α (order N).
    pub fn kernel(&self) -> FieldElement {
        self.alpha
    }

    /// α^0, …, α^(N-1).
    pub fn kernel_powers(&self) -> &[FieldElement] {
        &self.powers
    }

    /// Inverse of the field image of N.
    pub fn n_inv(&self) -> FieldElement {
        self.n_inv
    }

    /// α^e for any integer e.
    pub fn kernel_pow(&self, e: i64) -> FieldElement {
        self.powers[e.rem_euclid(self.n as i64) as usize]
    }

    fn check_len(&self, got: usize) -> Result<(), TransformError> {
        if got != self.n {
            return Err(TransformError::LengthMismatch { expected: self.n, got });
        }
        Ok(())
    }

    /// Forward transform `V_k = Σ_i v_i α^{ik}`.
    pub fn ffft(&self, v: &TimeVector) -> Result<Spectrum, TransformError> {
        self.check_len(v.len())?;
        let n = self.n;
        let out = (0..n)
            .map(|k| {
                v.iter().enumerate().fold(FieldElement::Zero, |acc, (i, &vi)| {
                    if vi.is_zero() {
                        acc
                    } else {
                        self.field.add(acc, self.field.mul(vi, self.powers[i * k % n]))
                    }
                })
            })
            .collect();
        Ok(Spectrum(out))
    }

    /// Inverse transform `v_i = N^{-1} Σ_k V_k α^{-ik}`.
    pub fn iffft(&self, spectrum: &Spectrum) -> Result<TimeVector, TransformError> {
        self.check_len(spectrum.len())?;
        let n = self.n;
        let out = (0..n)
            .map(|i| {
                let sum = spectrum.iter().enumerate().fold(FieldElement::Zero, |acc, (k, &vk)| {
                    let e = (n - i * k % n) % n;
                    self.field.add(acc, self.field.mul(vk, self.powers[e]))
                });
                self.field.mul(sum, self.n_inv)
            })
            .collect();
        Ok(TimeVector(out))
    }

    /// True iff `V_k^p = V_{pk mod N}` for every k, i.e. the spectrum is the
    /// transform of a vector over GF(p).
    pub fn is_valid_base_field_spectrum(&self, spectrum: &Spectrum) -> Result<bool, TransformError> {
        self.check_len(spectrum.len())?;
        let p = self.field.characteristic() as usize;
        let n = self.n;
        Ok(spectrum
            .iter()
            .enumerate()
            .all(|(k, &vk)| self.field.frobenius(vk) == spectrum[p * k % n]))
    }
}

macro_rules! field_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
        pub struct $name(pub Vec<FieldElement>);

        impl $name {
            pub fn new(values: Vec<FieldElement>) -> Self {
                Self(values)
            }

            pub fn zeros(n: usize) -> Self {
                Self(vec![FieldElement::Zero; n])
            }

            pub fn into_inner(self) -> Vec<FieldElement> {
                self.0
            }
        }

        impl Deref for $name {
            type Target = [FieldElement];

            fn deref(&self) -> &[FieldElement] {
                &self.0
            }
        }

        impl From<Vec<FieldElement>> for $name {
            fn from(values: Vec<FieldElement>) -> Self {
                Self(values)
            }
        }

        /// Comma-separated power-index notation.
        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }

        impl FromStr for $name {
            type Err = FieldError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                parse_elements(s).map(Self)
            }
        }
    };
}

field_vector!(
    /// A time-domain vector of length N; a user frame has every entry in GF(p).
    TimeVector
);

field_vector!(
    /// A length-N Galois spectrum.
    Spectrum
);

impl TimeVector {
    /// Embed GF(p) digits.
    pub fn from_base(field: &GaloisField, digits: &[u32]) -> Self {
        Self(digits.iter().map(|&d| field.from_base(d as u64)).collect())
    }

    /// Base-field digits, or `None` if any entry lies outside GF(p).
    pub fn to_base(&self, field: &GaloisField) -> Option<Vec<u32>> {
        self.0.iter().map(|&x| field.as_base(x)).collect()
    }

    /// The delta vector with a one at position `i`.
    pub fn delta(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = FieldElement::ONE;
        v
    }
}

/// Parse comma- or whitespace-separated power-index notation.
pub fn parse_elements(s: &str) -> Result<Vec<FieldElement>, FieldError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}
