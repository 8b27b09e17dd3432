//! Dense polynomials over the prime field GF(p).

use std::fmt;

/// Polynomial over GF(p), coefficients stored low degree first with no
/// trailing zeros (the zero polynomial has an empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasePoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl BasePoly {
    pub fn new(p: u32, coeffs: impl Into<Vec<u32>>) -> Self {
        let mut coeffs: Vec<u32> = coeffs.into();
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        let mut poly = Self { p, coeffs };
        poly.trim();
        poly
    }

    pub fn zero(p: u32) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Self::new(p, vec![1])
    }

    /// The monomial `x`.
    pub fn x(p: u32) -> Self {
        Self::new(p, vec![0, 1])
    }

    /// Parse a high-degree-first digit string such as `10011` (x^4 + x + 1).
    ///
    /// Digits may be separated by commas, which is required once p > 10.
    pub fn from_digit_str(p: u32, s: &str) -> Option<Self> {
        let s = s.trim();
        let digits: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|d| d.trim().parse::<u32>().ok())
                .collect::<Option<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?
        };
        if digits.is_empty() || digits.iter().any(|&d| d >= p) {
            return None;
        }
        Some(Self::new(p, digits.into_iter().rev().collect::<Vec<_>>()))
    }

    /// Polynomial from the bits of `mask`, bit j being the coefficient of x^j.
    pub fn from_bitmask(mask: u64) -> Self {
        let coeffs: Vec<u32> = (0..64).map(|j| ((mask >> j) & 1) as u32).collect();
        Self::new(2, coeffs)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Coefficients, low degree first.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> u32 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// High-degree-first digit string, comma separated when p > 10.
    pub fn to_digit_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let digits = self.coeffs.iter().rev().map(|c| c.to_string());
        if self.p > 10 {
            digits.collect::<Vec<_>>().join(",")
        } else {
            digits.collect()
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs: Vec<u32> = (0..n).map(|j| (self.coeff(j) + other.coeff(j)) % self.p).collect();
        Self::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs: Vec<u32> = (0..n)
            .map(|j| (self.coeff(j) + self.p - other.coeff(j)) % self.p)
            .collect();
        Self::new(self.p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::new(self.p, out.into_iter().map(|c| c as u32).collect::<Vec<_>>())
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let p = self.p as u64;
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = inv_mod(divisor.coeffs[dd] as u64, p);
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        if rem.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top] * lead_inv % p;
            if c == 0 {
                continue;
            }
            quot[top - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + j;
                rem[idx] = (rem[idx] + p - c * d as u64 % p) % p;
            }
        }
        rem.truncate(dd);
        let to_u32 = |v: Vec<u64>| v.into_iter().map(|c| c as u32).collect::<Vec<_>>();
        (Self::new(self.p, to_u32(quot)), Self::new(self.p, to_u32(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Brute-force irreducibility test: trial division by every monic
    /// polynomial of degree 1..=deg/2.
    pub fn is_irreducible(&self) -> bool {
        let deg = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        for d in 1..=deg / 2 {
            for candidate in monic_polys(self.p, d) {
                if self.rem(&candidate).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// All monic polynomials of exact degree `deg` over GF(p).
pub fn monic_polys(p: u32, deg: usize) -> impl Iterator<Item = BasePoly> {
    let count = (p as u64).pow(deg as u32);
    (0..count).map(move |mut n| {
        let mut coeffs = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            coeffs.push((n % p as u64) as u32);
            n /= p as u64;
        }
        coeffs.push(1);
        BasePoly::new(p, coeffs)
    })
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for BasePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = if c == 1 && j > 0 { String::new() } else { c.to_string() };
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{j}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_table_notation() {
        assert_eq!(BasePoly::from_bitmask(0b10011).to_string(), "x^4 + x + 1");
        assert_eq!(BasePoly::from_bitmask(0b11).to_string(), "x + 1");
        assert_eq!(BasePoly::new(3, vec![2, 1, 2]).to_string(), "2x^2 + x + 2");
        assert_eq!(BasePoly::x(2).to_string(), "x");
    }

    #[test]
    fn digit_string_round_trip() {
        let p = BasePoly::from_digit_str(2, "10011").unwrap();
        assert_eq!(p, BasePoly::from_bitmask(0x13));
        assert_eq!(p.to_digit_string(), "10011");
        assert!(BasePoly::from_digit_str(2, "10021").is_none());
        assert!(BasePoly::from_digit_str(2, "").is_none());
        let big = BasePoly::from_digit_str(13, "1,12,2").unwrap();
        assert_eq!(big.coeffs(), &[2, 12, 1]);
        assert_eq!(big.to_digit_string(), "1,12,2");
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = BasePoly::new(5, vec![3, 0, 4, 1, 2]);
        let b = BasePoly::new(5, vec![1, 2, 3]);
        let (q, r) = a.div_rem(&b);
        assert!(r.degree().is_none_or(|d| d < 2));
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn irreducibility_small_cases() {
        assert!(BasePoly::from_bitmask(0b10011).is_irreducible());
        assert!(BasePoly::from_bitmask(0b11111).is_irreducible());
        assert!(BasePoly::from_bitmask(0b11001).is_irreducible());
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        assert!(!BasePoly::from_bitmask(0b10101).is_irreducible());
        assert!(!BasePoly::from_bitmask(0b1).is_irreducible());
    }
}
