//! Circuit simulation: single states, bit-parallel truth tables of every
//! line, induced permutations and realization checks.
//!
//! Bit-parallel propagation keeps, for each line, its Boolean function of the
//! primary inputs as a `2^n`-bit vector. Applying a gate XORs the AND of its
//! control vectors into its target vector, so one pass over the gate list
//! evaluates the whole circuit on all inputs at once.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::circuit::Circuit;
use crate::truth_table::TruthTable;

/// Inputs cap for table-based propagation (memory is `width * 2^n` bits).
pub const MAX_TABLE_INPUTS: usize = 20;
/// Width cap for permutation extraction (memory is `width * 2^width` bits).
pub const MAX_PERMUTATION_WIDTH: usize = 20;

/// Errors from the simulation entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimError {
    /// The input vector length differs from the circuit's primary count.
    InputLength { have: usize, need: usize },
    /// The table or map arity differs from the circuit's primary count.
    ArityMismatch { table: usize, circuit: usize },
    /// A resource cap would be exceeded.
    CapExceeded { what: &'static str, requested: usize, cap: usize },
    /// The circuit fails structural validation.
    BadCircuit,
}

impl fmt::Display for SimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SimError::InputLength { have, need } => {
                write!(f, "input has {have} bits, circuit takes {need}")
            }
            SimError::ArityMismatch { table, circuit } => {
                write!(f, "table arity {table} does not match circuit arity {circuit}")
            }
            SimError::CapExceeded { what, requested, cap } => {
                write!(f, "{what} {requested} exceeds cap {cap}")
            }
            SimError::BadCircuit => write!(f, "circuit fails structural validation"),
        }
    }
}

fn check_structure(c: &Circuit) -> Result<(), SimError> {
    if c.validate().is_empty() {
        Ok(())
    } else {
        Err(SimError::BadCircuit)
    }
}

/// Runs `c` on one input assignment (`x[i]` is primary line `i`, variable
/// `i + 1`) and returns the final state of every line. Ancilla start at zero.
pub fn simulate(c: &Circuit, x: &[bool]) -> Result<Vec<bool>, SimError> {
    if x.len() != c.n_primary() {
        return Err(SimError::InputLength { have: x.len(), need: c.n_primary() });
    }
    check_structure(c)?;
    let mut state = vec![false; c.width()];
    state[..x.len()].copy_from_slice(x);
    for g in c.gates() {
        g.apply_in_place(&mut state);
    }
    Ok(state)
}

/// Convenience wrapper: runs `c` on the input encoded as an integer (variable
/// 1 in the most significant bit) and returns the realized output the same
/// way, read through the output map.
pub fn simulate_value(c: &Circuit, v: u64) -> Result<u64, SimError> {
    let n = c.n_primary();
    let x: Vec<bool> = (0..n).map(|i| v >> (n - 1 - i) & 1 == 1).collect();
    let state = simulate(c, &x)?;
    let mut out = 0u64;
    for (j, &line) in c.output_map().iter().enumerate() {
        if state[line] {
            out |= 1 << (n - 1 - j);
        }
    }
    Ok(out)
}

/// The Boolean function of every line as a packed `2^n`-bit vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFunctionTable {
    inputs: usize,
    words_per_line: usize,
    bits: Vec<u64>,
}

/// Bit patterns for projection variables living inside one word.
const WORD_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

impl LineFunctionTable {
    /// Number of input variables the tables range over.
    #[must_use]
    pub fn inputs(&self) -> usize {
        self.inputs
    }

    /// Packed function vector of `line`.
    #[must_use]
    pub fn line(&self, line: usize) -> &[u64] {
        &self.bits[line * self.words_per_line..(line + 1) * self.words_per_line]
    }

    /// Value of `line` on the input encoded by `v` (variable 1 is the most
    /// significant bit of `v`).
    #[must_use]
    pub fn value(&self, line: usize, v: u64) -> bool {
        self.line(line)[(v / 64) as usize] >> (v % 64) & 1 == 1
    }

    fn width(&self) -> usize {
        self.bits.len() / self.words_per_line
    }
}

/// Mask selecting the live bits of the last word when `2^n < 64`.
fn live_mask(inputs: usize) -> u64 {
    if inputs < 6 {
        (1u64 << (1usize << inputs)) - 1
    } else {
        u64::MAX
    }
}

/// Projection vector of input variable at bit position `b` (from the least
/// significant end of the input encoding), written into `out`.
fn fill_projection(out: &mut [u64], b: usize, mask: u64) {
    if b < 6 {
        out.fill(WORD_PATTERNS[b] & mask);
    } else {
        for (w, word) in out.iter_mut().enumerate() {
            *word = if w >> (b - 6) & 1 == 1 { u64::MAX } else { 0 };
        }
    }
}

fn propagate(c: &Circuit, inputs: usize) -> LineFunctionTable {
    let words = (1usize << inputs).div_ceil(64);
    let mask = live_mask(inputs);
    let mut bits = vec![0u64; c.width() * words];
    for line in 0..inputs.min(c.width()) {
        let b = inputs - 1 - line;
        fill_projection(&mut bits[line * words..(line + 1) * words], b, mask);
    }
    let mut acc = vec![0u64; words];
    for g in c.gates() {
        acc.fill(mask);
        for &ctrl in g.controls() {
            let row = &bits[ctrl * words..(ctrl + 1) * words];
            for (a, &r) in acc.iter_mut().zip(row) {
                *a &= r;
            }
        }
        let t = g.target() * words;
        for (w, &a) in acc.iter().enumerate() {
            bits[t + w] ^= a;
        }
    }
    LineFunctionTable { inputs, words_per_line: words, bits }
}

/// Computes the function of every line over the `n_primary` inputs, with all
/// ancilla fixed at zero.
pub fn propagate_truth_tables(c: &Circuit) -> Result<LineFunctionTable, SimError> {
    let n = c.n_primary();
    if n > MAX_TABLE_INPUTS {
        return Err(SimError::CapExceeded { what: "inputs", requested: n, cap: MAX_TABLE_INPUTS });
    }
    check_structure(c)?;
    Ok(propagate(c, n))
}

/// The permutation of full `width`-bit states induced by a circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    bits: usize,
    image: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation of `2^bits` points, checking bijectivity.
    pub fn new(bits: usize, image: Vec<u32>) -> Result<Self, SimError> {
        if bits > MAX_PERMUTATION_WIDTH || image.len() != 1usize << bits {
            return Err(SimError::CapExceeded {
                what: "permutation points",
                requested: image.len(),
                cap: 1usize << MAX_PERMUTATION_WIDTH,
            });
        }
        let mut seen = vec![false; image.len()];
        for &y in &image {
            if (y as usize) >= image.len() || seen[y as usize] {
                return Err(SimError::BadCircuit);
            }
            seen[y as usize] = true;
        }
        Ok(Permutation { bits, image })
    }

    /// Number of state bits.
    #[must_use]
    pub fn bits(&self) -> usize {
        self.bits
    }

    /// Image table over all `2^bits` states.
    #[must_use]
    pub fn image(&self) -> &[u32] {
        &self.image
    }

    /// Number of cycles in the cycle decomposition, fixed points included.
    #[must_use]
    pub fn cycle_count(&self) -> usize {
        let mut visited = vec![false; self.image.len()];
        let mut cycles = 0;
        for start in 0..self.image.len() {
            if visited[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !visited[at] {
                visited[at] = true;
                at = self.image[at] as usize;
            }
        }
        cycles
    }
}

/// Sign of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// Parity of `p` from its cycle decomposition: a cycle of length `l`
/// contributes `l - 1` transpositions.
#[must_use]
pub fn parity(p: &Permutation) -> Parity {
    if (p.image().len() - p.cycle_count()).is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Extracts the permutation of full `width`-bit states induced by `c` (line 0
/// is the most significant state bit).
pub fn extract_permutation(c: &Circuit) -> Result<Permutation, SimError> {
    let w = c.width();
    if w > MAX_PERMUTATION_WIDTH {
        return Err(SimError::CapExceeded {
            what: "width",
            requested: w,
            cap: MAX_PERMUTATION_WIDTH,
        });
    }
    check_structure(c)?;
    let tables = propagate(c, w);
    debug_assert_eq!(tables.width(), w);
    let mut image = vec![0u32; 1usize << w];
    for line in 0..w {
        let shift = w - 1 - line;
        for v in 0..image.len() as u64 {
            if tables.value(line, v) {
                image[v as usize] |= 1 << shift;
            }
        }
    }
    Permutation::new(w, image)
}

/// Outcome of a realization check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Realization {
    /// The circuit realizes the map on every input.
    Realizes,
    /// The first failing input, with the wanted and produced outputs.
    Counterexample { input: u64, expected: u64, actual: u64 },
}

impl Realization {
    #[must_use]
    pub fn is_pass(&self) -> bool {
        matches!(self, Realization::Realizes)
    }
}

/// Checks whether `c` realizes `f` in the ancilla sense: inputs on the
/// primary lines, zeros elsewhere, outputs read through the output map.
/// Returns the first counterexample in input order if any.
pub fn check_realizes(c: &Circuit, f: &TruthTable) -> Result<Realization, SimError> {
    let n = c.n_primary();
    if f.n() != n {
        return Err(SimError::ArityMismatch { table: f.n(), circuit: n });
    }
    if n <= MAX_TABLE_INPUTS {
        let tables = propagate_truth_tables(c)?;
        let words = (1usize << n).div_ceil(64);
        let mask = live_mask(n);
        // Expected bit vector per output position, then OR of mismatches.
        let mut any = vec![0u64; words];
        for (j, &line) in c.output_map().iter().enumerate() {
            let mut expected = vec![0u64; words];
            for v in 0..1u64 << n {
                if f.output_bit(v, j) {
                    expected[(v / 64) as usize] |= 1 << (v % 64);
                }
            }
            for (w, word) in any.iter_mut().enumerate() {
                *word |= (tables.line(line)[w] ^ expected[w]) & mask;
            }
        }
        let Some(w) = any.iter().position(|&x| x != 0) else {
            return Ok(Realization::Realizes);
        };
        let input = w as u64 * 64 + any[w].trailing_zeros() as u64;
        let mut actual = 0u64;
        for (j, &line) in c.output_map().iter().enumerate() {
            if tables.value(line, input) {
                actual |= 1 << (n - 1 - j);
            }
        }
        Ok(Realization::Counterexample { input, expected: f.apply(input), actual })
    } else {
        for v in 0..1u64 << n {
            let actual = simulate_value(c, v)?;
            if actual != f.apply(v) {
                return Ok(Realization::Counterexample { input: v, expected: f.apply(v), actual });
            }
        }
        Ok(Realization::Realizes)
    }
}
