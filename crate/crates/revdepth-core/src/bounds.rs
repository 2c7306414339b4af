//! Counting bounds: exact circuit censuses over the gate alphabet and the
//! lower bounds on gate count and depth that follow from them, next to the
//! constructive upper bounds for cross-display.
//!
//! All censuses are exact big integers; the derived bounds are evaluated in
//! floating point with explicit clamp and domain flags instead of silent
//! saturation.

use alloc::vec::Vec;
use num_bigint::BigUint;

use crate::alphabet::gate_alphabet_size;

/// Exact gate-alphabet size on `w` lines as a big integer, safe for widths
/// where `w³` overflows machine words.
#[must_use]
pub fn gate_alphabet_size_big(w: usize) -> BigUint {
    let w = BigUint::from(w);
    (w.pow(3) - w.pow(2) + 2u32 * &w) / 2u32
}

/// Exact number of circuits on `w` lines with at most `s` gates: the
/// geometric sum `(r^{s+1} − 1)/(r − 1)` over the alphabet size `r`.
#[must_use]
pub fn circuit_count_upto(w: usize, s: usize) -> BigUint {
    assert!(w >= 2, "census needs at least two lines");
    let r = gate_alphabet_size_big(w);
    let s: u32 = s.try_into().expect("census length fits u32");
    (r.pow(s + 1) - 1u32) / (r - 1u32)
}

/// `log₂` of the census, exact to double precision.
#[must_use]
pub fn census_log2(w: usize, s: usize) -> f64 {
    big_log2(&circuit_count_upto(w, s))
}

fn big_log2(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 53 {
        libm::log2(u64::try_from(x).expect("fits after bits check") as f64)
    } else {
        let shift = bits - 53;
        let top = u64::try_from(&(x >> shift)).expect("53 top bits fit u64");
        libm::log2(top as f64) + shift as f64
    }
}

/// Exact check of the census envelope `C(w,s) ≤ (w³/2)^s · (1 + 1/(w−1))`,
/// compared in integers as `C(w,s) · 2^s · (w−1) ≤ w^{3s+1}`.
#[must_use]
pub fn census_bound_holds(w: usize, s: usize) -> bool {
    let c = circuit_count_upto(w, s);
    let s: u32 = s.try_into().expect("census length fits u32");
    let lhs = c * BigUint::from(2u32).pow(s) * BigUint::from(w - 1);
    let rhs = BigUint::from(w).pow(3 * s + 1);
    lhs <= rhs
}

/// One evaluated bound with its nonnegativity clamp flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bound {
    pub value: f64,
    /// Set when the raw formula value was negative (or undefined) and the
    /// reported value was clamped to 0.
    pub clamped: bool,
}

impl Bound {
    fn from_raw(raw: f64) -> Self {
        if raw.is_finite() && raw >= 0.0 {
            Bound { value: raw, clamped: false }
        } else {
            Bound { value: 0.0, clamped: true }
        }
    }
}

/// Lower bounds for realizing a worst-case `n`-input map with `q` ancilla,
/// together with the constructive upper-bound pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub n: usize,
    pub q: usize,
    /// Exact gate-alphabet size on `n + q` lines.
    pub alphabet: BigUint,
    /// `n·log₂(n+q)`: the output-placement term of the counting argument.
    pub placements_log2: f64,
    /// Gate-count lower bound `(2ⁿ(n−2) − n·log₂(n+q)) / (3·log₂(n+q))`.
    pub l_lower: Bound,
    /// Depth lower bound: the gate-count bound divided by `n + q`.
    pub d_lower: Bound,
    /// Ancilla-free depth lower bound `2ⁿ / (3·log₂ n)`.
    pub d0_lower: Bound,
    /// Constructive pair: depth ≈ 3n with about `2ⁿ` ancilla.
    pub upper_d3n: f64,
    pub upper_q3n: f64,
    /// Constructive pair: depth ≈ 2n with about `⌈log₂ n⌉·2ⁿ` ancilla.
    pub upper_d2n: f64,
    pub upper_q2n: f64,
    /// Set when `n + q < 3`, outside the stated validity of the log-based
    /// formulas; values are still evaluated where arithmetic allows.
    pub out_of_domain: bool,
}

/// Evaluates the counting lower bounds for `n` inputs and `q` ancilla.
#[must_use]
pub fn shannon_lower_bounds(n: usize, q: usize) -> BoundsReport {
    let w = n + q;
    let nf = n as f64;
    let log_w = if w >= 1 { libm::log2(w as f64) } else { 0.0 };
    let pow_n = libm::exp2(nf);
    let l_raw = (pow_n * (nf - 2.0) - nf * log_w) / (3.0 * log_w);
    let l_lower = Bound::from_raw(l_raw);
    let d_lower = Bound::from_raw(l_raw / w as f64);
    let d0_lower = Bound::from_raw(pow_n / (3.0 * libm::log2(nf)));
    let phi = libm::ceil(libm::log2(nf));
    BoundsReport {
        n,
        q,
        alphabet: gate_alphabet_size_big(w),
        placements_log2: nf * log_w,
        l_lower,
        d_lower,
        d0_lower,
        upper_d3n: 3.0 * nf,
        upper_q3n: pow_n,
        upper_d2n: 2.0 * nf,
        upper_q2n: phi * pow_n,
        out_of_domain: w < 3,
    }
}

/// The alphabet sizes for a range of widths, exact and machine-word, for
/// cross-checking.
#[must_use]
pub fn alphabet_sizes_upto(max_w: usize) -> Vec<(usize, u64)> {
    (1..=max_w).map(|w| (w, gate_alphabet_size(w))).collect()
}
