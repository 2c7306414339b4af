//! The gate alphabet over a fixed set of lines: every NOT, CNOT and 2-CNOT
//! placement on `w` lines, with a canonical ranking.
//!
//! The ranking enumerates NOT gates first (by target), then CNOT gates (by
//! control, then target), then 2-CNOT gates (by control pair in lexicographic
//! order, then target). Unranking inverts it, which gives uniform gate
//! sampling by drawing a rank.

use alloc::vec::Vec;

use crate::gate::Gate;

/// Number of distinct gates on `w` lines:
/// `w` NOT placements, `w(w-1)` CNOT placements and `w(w-1)(w-2)/2` 2-CNOT
/// placements, in total `(w^3 - w^2 + 2w) / 2`.
#[must_use]
pub fn gate_alphabet_size(w: usize) -> u64 {
    let w = w as u64;
    (w * w * w - w * w + 2 * w) / 2
}

/// All gates on `w` lines in rank order.
#[must_use]
pub fn enumerate_gates(w: usize) -> Vec<Gate> {
    let mut gates = Vec::with_capacity(gate_alphabet_size(w) as usize);
    for t in 0..w {
        gates.push(Gate::not(t));
    }
    for c in 0..w {
        for t in (0..w).filter(|&t| t != c) {
            gates.push(Gate::cnot(c, t));
        }
    }
    for a in 0..w {
        for b in a + 1..w {
            for t in (0..w).filter(|&t| t != a && t != b) {
                gates.push(Gate::ccnot(a, b, t));
            }
        }
    }
    gates
}

/// Gate of rank `r` on `w` lines, or `None` when `r` is out of range.
#[must_use]
pub fn unrank_gate(w: usize, r: u64) -> Option<Gate> {
    if r >= gate_alphabet_size(w) {
        return None;
    }
    let mut r = r as usize;
    if r < w {
        return Some(Gate::not(r));
    }
    r -= w;
    if r < w * (w - 1) {
        let c = r / (w - 1);
        let j = r % (w - 1);
        let t = if j < c { j } else { j + 1 };
        return Some(Gate::cnot(c, t));
    }
    r -= w * (w - 1);
    let pair = r / (w - 2);
    let j = r % (w - 2);
    let mut rest = pair;
    for a in 0..w {
        let with_a = w - 1 - a;
        if rest < with_a {
            let b = a + 1 + rest;
            let t = (0..w).filter(|&t| t != a && t != b).nth(j)?;
            return Some(Gate::ccnot(a, b, t));
        }
        rest -= with_a;
    }
    None
}
