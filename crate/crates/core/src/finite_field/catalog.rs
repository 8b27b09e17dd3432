//! Default primitive polynomials.

use super::poly::BasePoly;
use super::FieldParams;

/// Primitive polynomials over GF(2) for m = 1..=20, as bitmasks (bit j is
/// the coefficient of x^j).
const BINARY_PRIMITIVE: [u64; 20] = [
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
    0x20009,  // x^17 + x^3 + 1
    0x40081,  // x^18 + x^7 + 1
    0x80027,  // x^19 + x^5 + x^2 + x + 1
    0x100009, // x^20 + x^3 + 1
];

/// A few odd-characteristic primitive polynomials, low degree first.
const ODD_PRIMITIVE: &[(u32, &[u32])] = &[
    (3, &[2, 1, 1]),       // x^2 + x + 2
    (3, &[1, 2, 0, 1]),    // x^3 + 2x + 1
    (3, &[2, 0, 0, 1, 1]), // x^4 + x^3 + 2
    (5, &[2, 1, 1]),       // x^2 + x + 2
    (5, &[2, 3, 0, 1]),    // x^3 + 3x + 2
    (7, &[3, 1, 1]),       // x^2 + x + 3
    (7, &[2, 3, 0, 1]),    // x^3 + 3x + 2
];

/// Default primitive polynomial for GF(p^m), when one is known.
///
/// For m = 1 the polynomial is `x - g` for the smallest primitive root g.
pub fn default_params(p: u32, m: u32) -> Option<FieldParams> {
    if m == 0 {
        return None;
    }
    if p == 2 {
        let mask = *BINARY_PRIMITIVE.get(m as usize - 1)?;
        return Some(FieldParams::from_poly(2, BasePoly::from_bitmask(mask)));
    }
    if m == 1 {
        let g = smallest_primitive_root(p)?;
        return Some(FieldParams::from_poly(p, BasePoly::new(p, vec![p - g, 1])));
    }
    ODD_PRIMITIVE
        .iter()
        .find(|(q, c)| *q == p && c.len() == m as usize + 1)
        .map(|(q, c)| FieldParams::from_poly(*q, BasePoly::new(*q, c.to_vec())))
}

fn smallest_primitive_root(p: u32) -> Option<u32> {
    if !super::is_prime(p) {
        return None;
    }
    if p == 2 {
        return Some(1);
    }
    let factors = super::prime_factors(p as u64 - 1);
    (2..p).find(|&g| {
        factors
            .iter()
            .all(|&r| super::poly::pow_mod(g as u64, (p as u64 - 1) / r, p as u64) != 1)
    })
}
