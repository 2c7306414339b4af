//! Deterministic pseudorandom circuits and truth tables for property testing
//! and benchmarking.
//!
//! Sampling is keyed by an explicit seed and uses a fixed-stream generator,
//! so equal seeds give byte-identical artifacts on every platform and run.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use revdepth_core::{gate_alphabet_size, unrank_gate, Circuit, Gate, TruthTable};

/// A gate drawn uniformly from the alphabet on `width` lines.
#[must_use]
pub fn random_gate(rng: &mut ChaCha8Rng, width: usize) -> Gate {
    let size = gate_alphabet_size(width);
    let rank = ((u128::from(rng.next_u64()) * u128::from(size)) >> 64) as u64;
    unrank_gate(width, rank).expect("rank is below the alphabet size")
}

/// A circuit of `gates` uniform gates on `width` lines, all primary.
#[must_use]
pub fn random_circuit(rng: &mut ChaCha8Rng, width: usize, gates: usize) -> Circuit {
    let gates = (0..gates).map(|_| random_gate(rng, width)).collect();
    Circuit::new(width, width, gates, (0..width).collect())
}

/// [`random_circuit`] keyed by a bare seed.
#[must_use]
pub fn seeded_circuit(seed: u64, width: usize, gates: usize) -> Circuit {
    random_circuit(&mut ChaCha8Rng::seed_from_u64(seed), width, gates)
}

/// A uniform map on `n`-bit vectors (not necessarily a bijection).
#[must_use]
pub fn random_truth_table(rng: &mut ChaCha8Rng, n: usize) -> TruthTable {
    let mask = (1u64 << n) - 1;
    let image = (0..1u64 << n).map(|_| rng.next_u64() & mask).collect();
    TruthTable::new(n, image).expect("rows are masked to n bits")
}
