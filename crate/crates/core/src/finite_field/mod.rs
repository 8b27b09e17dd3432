//! Arithmetic in GF(p^m) through exp/log tables.
//!
//! The field is built from a monic irreducible polynomial over GF(p). Elements
//! are stored as powers of a fixed generator `α` (the root of the reduction
//! polynomial when that polynomial is primitive), with a distinguished zero.
//! Coefficient vectors are a derived view, packed as base-p integers
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`.
//!
//! Addition goes through a Zech logarithm table, so every operation on
//! elements is a table lookup plus index arithmetic.

mod catalog;
mod poly;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub use catalog::default_params;
pub use poly::{monic_polys, BasePoly};

/// Largest supported field order p^m.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

const NO_LOG: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("reduction polynomial {poly} must be monic of degree {m}")]
    BadDegree { poly: String, m: u32 },
    #[error("polynomial {0} is not irreducible")]
    NotIrreducible(String),
    #[error("polynomial {poly} is not primitive: its root has order {order}, not {group_order}")]
    NotPrimitive { poly: String, order: u64, group_order: u64 },
    #[error("field order {0} exceeds the supported maximum of {MAX_FIELD_ORDER}")]
    TooLarge(u64),
    #[error("element {0} does not belong to this field")]
    FieldMismatch(FieldElement),
    #[error("division by zero")]
    DivisionByZero,
    #[error("no element of order {n}: {n} does not divide {group_order}")]
    OrderNotAvailable { n: u64, group_order: u64 },
    #[error("invalid coefficient vector {0:?}")]
    BadCoefficients(Vec<u32>),
    #[error("cannot parse field element {0:?}")]
    Parse(String),
}

/// Characteristic, extension degree and reduction polynomial of GF(p^m).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldParams {
    pub p: u32,
    pub m: u32,
    pub poly: BasePoly,
}

impl FieldParams {
    pub fn new(p: u32, m: u32, poly: BasePoly) -> Self {
        Self { p, m, poly }
    }

    /// Params whose degree is read off the polynomial.
    pub fn from_poly(p: u32, poly: BasePoly) -> Self {
        let m = poly.degree().unwrap_or(0) as u32;
        Self { p, m, poly }
    }

    /// Binary field from a high-degree-first bit string, e.g. `10011`.
    pub fn binary(bits: &str) -> Result<Self, FieldError> {
        let poly = BasePoly::from_digit_str(2, bits).ok_or_else(|| FieldError::NotIrreducible(bits.to_string()))?;
        Ok(Self::from_poly(2, poly))
    }

    /// GF(16) generated by x^4 + x + 1.
    pub fn gf16() -> Self {
        Self::from_poly(2, BasePoly::from_bitmask(0b10011))
    }

    /// Field order p^m, saturating on overflow.
    pub fn order(&self) -> u64 {
        (self.p as u64).saturating_pow(self.m)
    }

    fn validate(&self) -> Result<(), FieldError> {
        if !is_prime(self.p) {
            return Err(FieldError::NotPrime(self.p));
        }
        if self.m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if self.poly.characteristic() != self.p || self.poly.degree() != Some(self.m as usize) || !self.poly.is_monic()
        {
            return Err(FieldError::BadDegree {
                poly: self.poly.to_string(),
                m: self.m,
            });
        }
        let q = self.order();
        if q > MAX_FIELD_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        if !self.poly.is_irreducible() {
            return Err(FieldError::NotIrreducible(self.poly.to_string()));
        }
        Ok(())
    }
}

/// An element of GF(p^m): zero or a power α^k of the field generator.
///
/// Elements carry no reference to their field; the owning [`GaloisField`]
/// interprets them. `Display` uses power-index notation (`0`, `1`, `a^k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum FieldElement {
    #[default]
    Zero,
    Pow(u32),
}

impl FieldElement {
    pub const ONE: FieldElement = FieldElement::Pow(0);

    pub fn is_zero(self) -> bool {
        matches!(self, FieldElement::Zero)
    }

    /// Power index, `None` for zero.
    pub fn log(self) -> Option<u32> {
        match self {
            FieldElement::Zero => None,
            FieldElement::Pow(k) => Some(k),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Zero => f.write_str("0"),
            FieldElement::Pow(0) => f.write_str("1"),
            FieldElement::Pow(k) => write!(f, "a^{k}"),
        }
    }
}

impl FromStr for FieldElement {
    type Err = FieldError;

    /// Accepts `0`, `1`, `a`, `a^k` and `α^k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t {
            "0" => return Ok(FieldElement::Zero),
            "1" => return Ok(FieldElement::ONE),
            "a" | "α" => return Ok(FieldElement::Pow(1)),
            _ => {}
        }
        let rest = t
            .strip_prefix("a^")
            .or_else(|| t.strip_prefix("α^"))
            .ok_or_else(|| FieldError::Parse(s.to_string()))?;
        rest.parse::<u32>()
            .map(FieldElement::Pow)
            .map_err(|_| FieldError::Parse(s.to_string()))
    }
}

#[derive(Debug)]
struct Tables {
    params: FieldParams,
    q: u32,
    /// Multiplicative group order q - 1.
    n: u32,
    /// exp[k] = packed coefficients of α^k.
    exp: Vec<u32>,
    /// log[packed] = k, NO_LOG at index 0.
    log: Vec<u32>,
    /// zech[k] = log(1 + α^k), NO_LOG when 1 + α^k = 0.
    zech: Vec<u32>,
    /// log(-1).
    neg_one: u32,
    /// True when α is a root of the reduction polynomial.
    root_generated: bool,
}

/// The finite field GF(p^m) with precomputed exp, log and Zech tables.
///
/// Cloning is cheap; the tables are shared and immutable.
#[derive(Clone, Debug)]
pub struct GaloisField {
    t: Arc<Tables>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t)
            || (self.t.params == other.t.params
                && self.t.exp[1 % self.t.n as usize] == other.t.exp[1 % other.t.n as usize])
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    /// Build GF(p^m) from a primitive polynomial; α is its root.
    pub fn new(params: FieldParams) -> Result<Self, FieldError> {
        Self::build(params, true)
    }

    /// Build GF(p^m) from any irreducible polynomial.
    ///
    /// When the polynomial's root is not primitive the generator α is the
    /// primitive element with the smallest packed coefficient value.
    pub fn with_any_generator(params: FieldParams) -> Result<Self, FieldError> {
        Self::build(params, false)
    }

    /// The field GF(16) generated by x^4 + x + 1.
    pub fn gf16() -> Self {
        Self::new(FieldParams::gf16()).expect("x^4 + x + 1 is primitive")
    }

    fn build(params: FieldParams, require_primitive: bool) -> Result<Self, FieldError> {
        params.validate()?;
        let p = params.p;
        let m = params.m as usize;
        let q = params.order() as u32;
        let n = q - 1;

        let reduce_coeffs: Vec<u32> = (0..m).map(|j| params.poly.coeff(j)).collect();
        let mut digits = vec![0u32; m];
        digits[0] = 1 % p;
        let mut exp = Vec::with_capacity(n as usize);
        let mut root_order = 0u64;
        // Walk powers of the root x until returning to 1.
        loop {
            exp.push(pack(&digits, p));
            root_order += 1;
            let top = digits[m - 1];
            for j in (1..m).rev() {
                digits[j] = digits[j - 1];
            }
            digits[0] = 0;
            if top != 0 {
                for j in 0..m {
                    digits[j] = (digits[j] + (p - top) * reduce_coeffs[j] % p) % p;
                }
            }
            if pack(&digits, p) == 1 || root_order > n as u64 {
                break;
            }
        }

        let root_generated = root_order == n as u64;
        if !root_generated {
            if require_primitive {
                return Err(FieldError::NotPrimitive {
                    poly: params.poly.to_string(),
                    order: root_order,
                    group_order: n as u64,
                });
            }
            let gen = find_primitive_packed(&params, q);
            exp.clear();
            let mut cur = vec![0u32; m];
            cur[0] = 1 % p;
            let g = unpack(gen, p, m);
            for _ in 0..n {
                exp.push(pack(&cur, p));
                cur = mulmod_digits(&cur, &g, &reduce_coeffs, p);
            }
        }

        let mut log = vec![NO_LOG; q as usize];
        for (k, &e) in exp.iter().enumerate() {
            log[e as usize] = k as u32;
        }
        let zech = exp.iter().map(|&e| log[add_packed(1, e, p, m) as usize]).collect();
        let neg_one = if p == 2 { 0 } else { n / 2 };

        Ok(Self {
            t: Arc::new(Tables {
                params,
                q,
                n,
                exp,
                log,
                zech,
                neg_one,
                root_generated,
            }),
        })
    }

    pub fn params(&self) -> &FieldParams {
        &self.t.params
    }

    pub fn characteristic(&self) -> u32 {
        self.t.params.p
    }

    pub fn degree(&self) -> u32 {
        self.t.params.m
    }

    /// Number of elements p^m.
    pub fn order(&self) -> u32 {
        self.t.q
    }

    /// Order of the multiplicative group, p^m - 1.
    pub fn group_order(&self) -> u32 {
        self.t.n
    }

    /// Whether the generator α is the root of the reduction polynomial.
    pub fn is_root_generated(&self) -> bool {
        self.t.root_generated
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        match a {
            FieldElement::Zero => true,
            FieldElement::Pow(k) => k < self.t.n,
        }
    }

    /// All field elements: zero first, then α^0, α^1, ….
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        std::iter::once(FieldElement::Zero).chain((0..self.t.n).map(FieldElement::Pow))
    }

    /// α^k for any integer k.
    pub fn alpha_pow(&self, k: i64) -> FieldElement {
        FieldElement::Pow(k.rem_euclid(self.t.n as i64) as u32)
    }

    /// The generator α.
    pub fn generator(&self) -> FieldElement {
        self.alpha_pow(1)
    }

    /// Embed c ∈ GF(p) (taken mod p).
    pub fn from_base(&self, c: u64) -> FieldElement {
        self.from_packed((c % self.t.params.p as u64) as u32)
    }

    /// The field image of an integer: n copies of 1 summed.
    pub fn embed_integer(&self, n: u64) -> FieldElement {
        self.from_base(n)
    }

    /// The GF(p) value of `a`, or `None` when `a` lies outside the prime field.
    pub fn as_base(&self, a: FieldElement) -> Option<u32> {
        let packed = self.packed(a);
        (packed < self.t.params.p).then_some(packed)
    }

    /// Packed base-p integer of the coefficient vector.
    pub fn packed(&self, a: FieldElement) -> u32 {
        match a {
            FieldElement::Zero => 0,
            FieldElement::Pow(k) => self.t.exp[(k % self.t.n) as usize],
        }
    }

    /// Element from a packed coefficient integer (taken mod p^m).
    pub fn from_packed(&self, packed: u32) -> FieldElement {
        let packed = packed % self.t.q;
        match self.t.log[packed as usize] {
            NO_LOG => FieldElement::Zero,
            k => FieldElement::Pow(k),
        }
    }

    /// Coefficient vector, low degree first (length m).
    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        unpack(self.packed(a), self.t.params.p, self.t.params.m as usize)
    }

    /// Coefficient vector, high degree first, as printed in field tables.
    pub fn coefficients_high_first(&self, a: FieldElement) -> Vec<u32> {
        let mut c = self.coefficients(a);
        c.reverse();
        c
    }

    /// Element from a low-degree-first coefficient vector of length m.
    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        let p = self.t.params.p;
        if coeffs.len() != self.t.params.m as usize || coeffs.iter().any(|&c| c >= p) {
            return Err(FieldError::BadCoefficients(coeffs.to_vec()));
        }
        Ok(self.from_packed(pack(coeffs, p)))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match (a, b) {
            (FieldElement::Zero, x) | (x, FieldElement::Zero) => x,
            (FieldElement::Pow(i), FieldElement::Pow(j)) => {
                let n = self.t.n;
                // α^i + α^j = α^i (1 + α^(j-i))
                let z = self.t.zech[((j + n - i % n) % n) as usize];
                if z == NO_LOG {
                    FieldElement::Zero
                } else {
                    FieldElement::Pow((i % n + z) % n)
                }
            }
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match a {
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Pow(k) => FieldElement::Pow((k + self.t.neg_one) % self.t.n),
        }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match (a, b) {
            (FieldElement::Pow(i), FieldElement::Pow(j)) => {
                FieldElement::Pow(((i as u64 + j as u64) % self.t.n as u64) as u32)
            }
            _ => FieldElement::Zero,
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        match a {
            FieldElement::Zero => Err(FieldError::DivisionByZero),
            FieldElement::Pow(k) => Ok(FieldElement::Pow((self.t.n - k % self.t.n) % self.t.n)),
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^k; negative k requires a ≠ 0. By convention 0^0 = 1.
    pub fn pow(&self, a: FieldElement, k: i64) -> Result<FieldElement, FieldError> {
        match a {
            FieldElement::Zero if k < 0 => Err(FieldError::DivisionByZero),
            FieldElement::Zero if k == 0 => Ok(FieldElement::ONE),
            FieldElement::Zero => Ok(FieldElement::Zero),
            FieldElement::Pow(i) => {
                let n = self.t.n as i128;
                Ok(FieldElement::Pow((i as i128 * k as i128).rem_euclid(n) as u32))
            }
        }
    }

    /// The Frobenius map a ↦ a^p.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        match a {
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Pow(i) => FieldElement::Pow(((i as u64 * self.t.params.p as u64) % self.t.n as u64) as u32),
        }
    }

    /// Smallest t ≥ 1 with a^t = 1.
    pub fn element_order(&self, a: FieldElement) -> Result<u64, FieldError> {
        match a {
            FieldElement::Zero => Err(FieldError::DivisionByZero),
            FieldElement::Pow(i) => {
                let n = self.t.n as u64;
                Ok(n / gcd(i as u64 % n, n))
            }
        }
    }

    /// α^((p^m - 1)/n), an element of multiplicative order exactly n.
    pub fn find_element_of_order(&self, n: u64) -> Result<FieldElement, FieldError> {
        let group = self.t.n as u64;
        if n == 0 || !group.is_multiple_of(n) {
            return Err(FieldError::OrderNotAvailable { n, group_order: group });
        }
        Ok(FieldElement::Pow((group / n % group) as u32))
    }

    /// The conjugacy class {a, a^p, a^(p^2), …} in order of generation.
    pub fn conjugates(&self, a: FieldElement) -> Vec<FieldElement> {
        let mut out = vec![a];
        let mut cur = self.frobenius(a);
        while cur != a {
            out.push(cur);
            cur = self.frobenius(cur);
        }
        out
    }

    /// Minimal polynomial of `a` over GF(p): Π (x - c) over the conjugates c.
    pub fn minimal_polynomial(&self, a: FieldElement) -> BasePoly {
        let p = self.t.params.p;
        // Coefficients in GF(p^m), low degree first.
        let mut acc = vec![FieldElement::ONE];
        for c in self.conjugates(a) {
            let neg_c = self.neg(c);
            let mut next = vec![FieldElement::Zero; acc.len() + 1];
            for (j, &coef) in acc.iter().enumerate() {
                next[j + 1] = self.add(next[j + 1], coef);
                next[j] = self.add(next[j], self.mul(coef, neg_c));
            }
            acc = next;
        }
        let coeffs: Vec<u32> = acc
            .into_iter()
            .map(|c| {
                self.as_base(c)
                    .expect("minimal polynomial coefficients lie in the prime field")
            })
            .collect();
        BasePoly::new(p, coeffs)
    }

    pub fn checked_add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// Ensure `a` is a valid element of this field.
    pub fn check(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(FieldError::FieldMismatch(a))
        }
    }

    /// Coefficient vector formatted as in field tables, e.g. `(0,0,1,1)`.
    pub fn format_coefficients(&self, a: FieldElement) -> String {
        let parts: Vec<String> = self.coefficients_high_first(a).iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

fn pack(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

fn unpack(mut packed: u32, p: u32, m: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        out.push(packed % p);
        packed /= p;
    }
    out
}

fn add_packed(a: u32, b: u32, p: u32, m: usize) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (da, db) = (unpack(a, p, m), unpack(b, p, m));
    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
    pack(&sum, p)
}

/// Product of two residues modulo the monic reduction polynomial whose
/// lower coefficients are `reduce`.
fn mulmod_digits(a: &[u32], b: &[u32], reduce: &[u32], p: u32) -> Vec<u32> {
    let m = reduce.len();
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    for top in (m..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        prod[top] = 0;
        for (j, &r) in reduce.iter().enumerate() {
            let idx = top - m + j;
            prod[idx] = (prod[idx] + (p64 - c) * r as u64) % p64;
        }
    }
    prod.truncate(m);
    prod.into_iter().map(|c| c as u32).collect()
}

fn find_primitive_packed(params: &FieldParams, q: u32) -> u32 {
    let p = params.p;
    let m = params.m as usize;
    let n = (q - 1) as u64;
    let reduce: Vec<u32> = (0..m).map(|j| params.poly.coeff(j)).collect();
    let factors = prime_factors(n);
    let pow_digits = |base: &[u32], mut e: u64| {
        let mut acc = unpack(1 % p, p, m);
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod_digits(&acc, &b, &reduce, p);
            }
            b = mulmod_digits(&b, &b, &reduce, p);
            e >>= 1;
        }
        pack(&acc, p)
    };
    (1..q)
        .find(|&cand| {
            let digits = unpack(cand, p, m);
            factors.iter().all(|&r| pow_digits(&digits, n / r) != 1)
        })
        .expect("every finite field has a primitive element")
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Distinct prime factors, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(k: u32) -> FieldElement {
        FieldElement::Pow(k)
    }

    #[test]
    fn gf16_construction_rows() {
        let f = GaloisField::gf16();
        assert_eq!(f.format_coefficients(a(4)), "(0,0,1,1)");
        assert_eq!(f.format_coefficients(a(0)), "(0,0,0,1)");
        assert_eq!(f.format_coefficients(a(14)), "(1,0,0,1)");
        assert_eq!(f.format_coefficients(FieldElement::Zero), "(0,0,0,0)");
    }

    #[test]
    fn add_examples() {
        let f = GaloisField::gf16();
        assert_eq!(f.add(a(1), a(2)), a(5));
        for x in f.elements() {
            assert_eq!(f.add(x, x), FieldElement::Zero);
            assert_eq!(f.add(x, FieldElement::Zero), x);
        }
    }

    #[test]
    fn mul_inv_pow_examples() {
        let f = GaloisField::gf16();
        assert_eq!(f.mul(a(7), a(8)), FieldElement::ONE);
        assert_eq!(f.mul(a(3), FieldElement::Zero), FieldElement::Zero);
        assert_eq!(f.mul(a(3), FieldElement::ONE), a(3));
        assert_eq!(f.inv(a(1)).unwrap(), a(14));
        assert_eq!(f.inv(FieldElement::ONE).unwrap(), FieldElement::ONE);
        assert_eq!(f.inv(a(5)).unwrap(), a(10));
        assert_eq!(f.inv(FieldElement::Zero), Err(FieldError::DivisionByZero));
        assert_eq!(f.pow(a(1), 16).unwrap(), a(1));
        assert_eq!(f.pow(a(3), 5).unwrap(), FieldElement::ONE);
        assert_eq!(f.pow(FieldElement::Zero, 3).unwrap(), FieldElement::Zero);
        assert_eq!(f.pow(FieldElement::Zero, -1), Err(FieldError::DivisionByZero));
        assert_eq!(f.pow(a(2), -1).unwrap(), a(13));
    }

    #[test]
    fn orders() {
        let f = GaloisField::gf16();
        assert_eq!(f.element_order(a(5)).unwrap(), 3);
        assert_eq!(f.element_order(a(7)).unwrap(), 15);
        assert_eq!(f.element_order(FieldElement::ONE).unwrap(), 1);
        assert!(f.element_order(FieldElement::Zero).is_err());
        assert_eq!(f.find_element_of_order(5).unwrap(), a(3));
        assert_eq!(f.find_element_of_order(15).unwrap(), a(1));
        assert_eq!(f.find_element_of_order(1).unwrap(), FieldElement::ONE);
        assert!(matches!(
            f.find_element_of_order(7),
            Err(FieldError::OrderNotAvailable { n: 7, group_order: 15 })
        ));
    }

    #[test]
    fn minimal_polynomials() {
        let f = GaloisField::gf16();
        assert_eq!(f.minimal_polynomial(a(5)).to_string(), "x^2 + x + 1");
        assert_eq!(f.minimal_polynomial(a(7)).to_string(), "x^4 + x^3 + 1");
        assert_eq!(f.minimal_polynomial(FieldElement::ONE).to_string(), "x + 1");
        assert_eq!(f.minimal_polynomial(FieldElement::Zero).to_string(), "x");
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            GaloisField::new(FieldParams::from_poly(4, BasePoly::new(4, vec![1, 1, 1]))),
            Err(FieldError::NotPrime(4))
        );
        let not_prim = FieldParams::binary("11111").unwrap();
        assert!(matches!(
            GaloisField::new(not_prim.clone()),
            Err(FieldError::NotPrimitive {
                order: 5,
                group_order: 15,
                ..
            })
        ));
        let f = GaloisField::with_any_generator(not_prim).unwrap();
        assert!(!f.is_root_generated());
        assert_eq!(f.element_order(f.generator()).unwrap(), 15);
        assert!(matches!(
            GaloisField::new(FieldParams::binary("10101").unwrap()),
            Err(FieldError::NotIrreducible(_))
        ));
        assert!(matches!(
            GaloisField::new(FieldParams::new(2, 3, BasePoly::from_bitmask(0b10011))),
            Err(FieldError::BadDegree { .. })
        ));
        let huge = FieldParams::from_poly(2, BasePoly::from_bitmask((1 << 21) | 0b101));
        assert_eq!(GaloisField::new(huge), Err(FieldError::TooLarge(1 << 21)));
    }

    #[test]
    fn checked_ops_reject_foreign_elements() {
        let f = GaloisField::gf16();
        assert_eq!(f.checked_add(a(20), a(1)), Err(FieldError::FieldMismatch(a(20))));
        assert_eq!(f.checked_mul(a(3), a(4)).unwrap(), a(7));
    }

    #[test]
    fn element_parsing() {
        assert_eq!("a^10".parse::<FieldElement>().unwrap(), a(10));
        assert_eq!("α^3".parse::<FieldElement>().unwrap(), a(3));
        assert_eq!(" 0 ".parse::<FieldElement>().unwrap(), FieldElement::Zero);
        assert_eq!("1".parse::<FieldElement>().unwrap(), FieldElement::ONE);
        assert!("b^2".parse::<FieldElement>().is_err());
        assert_eq!(a(0).to_string(), "1");
        assert_eq!(a(7).to_string(), "a^7");
    }

    #[test]
    fn coefficient_round_trip_everywhere() {
        for f in [
            GaloisField::gf16(),
            GaloisField::new(default_params(3, 2).unwrap()).unwrap(),
        ] {
            for x in f.elements() {
                assert_eq!(f.from_coefficients(&f.coefficients(x)).unwrap(), x);
            }
        }
    }

    #[test]
    fn odd_characteristic_arithmetic() {
        let f = GaloisField::new(default_params(3, 2).unwrap()).unwrap();
        assert_eq!(f.order(), 9);
        let two = f.from_base(2);
        assert_eq!(f.add(two, FieldElement::ONE), FieldElement::Zero);
        assert_eq!(f.neg(FieldElement::ONE), two);
        assert_eq!(f.as_base(two), Some(2));
        assert_eq!(f.embed_integer(5), two);
    }
}
