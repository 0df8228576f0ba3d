//! Integer helpers shared by the extraction and colouring code. All
//! logarithms are base 2.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// `⌊log₂ m⌋` for `m ≥ 1`; `0` for `m = 0`.
pub fn floor_log2(m: usize) -> usize {
    if m == 0 {
        0
    } else {
        (usize::BITS - 1 - m.leading_zeros()) as usize
    }
}

/// `⌈log₂ m⌉` for `m ≥ 1`; `0` for `m ≤ 1`.
pub fn ceil_log2(m: usize) -> usize {
    if m <= 1 {
        0
    } else {
        floor_log2(m - 1) + 1
    }
}

/// Smallest `b ≥ 1` with `b^c ≥ m`, i.e. `max(1, ⌈m^{1/c}⌉)`.
pub fn ceil_root(m: usize, c: u32) -> usize {
    assert!(c >= 1, "root order must be positive");
    if m <= 1 {
        return 1;
    }
    let guess = (m as f64).powf(1.0 / c as f64).round() as usize;
    let mut b = guess.saturating_sub(1).max(1);
    while !pow_at_least(b, c, m) {
        b += 1;
    }
    while b > 1 && pow_at_least(b - 1, c, m) {
        b -= 1;
    }
    b
}

fn pow_at_least(b: usize, c: u32, m: usize) -> bool {
    let mut acc: u128 = 1;
    for _ in 0..c {
        acc = acc.saturating_mul(b as u128);
        if acc >= m as u128 {
            return true;
        }
    }
    acc >= m as u128
}

/// `⌈√(log₂ n)⌉` computed without floating point: the smallest `r` with
/// `2^{r²} ≥ n`.
pub fn ceil_sqrt_log2(n: usize) -> usize {
    let mut r = 0usize;
    while r * r < 64 && (1u128 << (r * r)) < n as u128 {
        r += 1;
    }
    r
}

/// The edge budget `⌊n² log₂ n⌋` of the colouring theorem.
///
/// Exact when `n` is a power of two; otherwise `n² log₂ n` is irrational and
/// the floor is taken of the correctly rounded double.
pub fn edge_budget(n: usize) -> u64 {
    if n.is_power_of_two() {
        return (n as u64).pow(2) * floor_log2(n) as u64;
    }
    let nf = n as f64;
    (nf * nf * nf.log2()).floor() as u64
}

/// Converts a finite double to the exact dyadic rational it denotes.
pub fn exact_rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite value")
}

/// `⌈x⌉` of a non-negative rational as `usize`.
pub fn ceil_rational(x: &BigRational) -> usize {
    x.ceil().to_integer().to_usize().expect("fits in usize")
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    x.to_f64().unwrap_or_else(|| {
        // numerator/denominator too wide for the direct conversion
        let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
        let scale = BigInt::from(1) << shift;
        let n = (x.numer() / &scale).to_f64().unwrap_or(0.0);
        let d = (x.denom() / &scale).to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}
