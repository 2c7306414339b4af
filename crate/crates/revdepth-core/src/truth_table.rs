//! Truth tables of total maps on n-bit vectors.
//!
//! Entry `v` of the table is the image of the input whose first variable is
//! the most significant bit of `v`; outputs use the same convention. The map
//! need not be a bijection: synthesis adds ancilla as needed.

use alloc::vec::Vec;
use core::fmt;

/// A total map from n-bit inputs to n-bit outputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    n: usize,
    image: Vec<u64>,
}

impl TruthTable {
    /// Builds a table for `n` variables from its `2^n` images.
    pub fn new(n: usize, image: Vec<u64>) -> Result<Self, TruthTableError> {
        if n == 0 || n >= 64 {
            return Err(TruthTableError::BadArity { n });
        }
        if image.len() != 1usize << n {
            return Err(TruthTableError::BadRowCount { have: image.len(), need: 1usize << n });
        }
        if let Some(pos) = image.iter().position(|&y| y >> n != 0) {
            return Err(TruthTableError::ValueTooWide { row: pos, value: image[pos] });
        }
        Ok(TruthTable { n, image })
    }

    /// Builds a table by evaluating `f` on every input.
    pub fn from_fn(n: usize, mut f: impl FnMut(u64) -> u64) -> Result<Self, TruthTableError> {
        if n == 0 || n >= 64 {
            return Err(TruthTableError::BadArity { n });
        }
        let image = (0..1u64 << n).map(&mut f).collect();
        TruthTable::new(n, image)
    }

    /// The identity map.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        TruthTable::from_fn(n, |v| v).expect("arity checked by caller-visible constructors")
    }

    /// The bitwise complement map.
    #[must_use]
    pub fn complement(n: usize) -> Self {
        let mask = (1u64 << n) - 1;
        TruthTable::from_fn(n, |v| v ^ mask).expect("complement stays within n bits")
    }

    /// The constant-zero map.
    #[must_use]
    pub fn zero(n: usize) -> Self {
        TruthTable::from_fn(n, |_| 0).expect("zero stays within n bits")
    }

    /// The map reversing the order of the n input bits.
    #[must_use]
    pub fn bit_reversal(n: usize) -> Self {
        TruthTable::from_fn(n, |v| {
            let mut out = 0u64;
            for b in 0..n {
                out |= (v >> b & 1) << (n - 1 - b);
            }
            out
        })
        .expect("reversal stays within n bits")
    }

    /// Number of variables.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// All images, indexed by input value.
    #[must_use]
    pub fn image(&self) -> &[u64] {
        &self.image
    }

    /// Image of input `v`.
    #[must_use]
    pub fn apply(&self, v: u64) -> u64 {
        self.image[v as usize]
    }

    /// Bit `j` (zero-based, variable `j + 1`, most significant first) of the
    /// image of `v`.
    #[must_use]
    pub fn output_bit(&self, v: u64, j: usize) -> bool {
        self.apply(v) >> (self.n - 1 - j) & 1 == 1
    }

    /// Whether the map is a bijection.
    #[must_use]
    pub fn is_permutation(&self) -> bool {
        let mut seen = alloc::vec![false; self.image.len()];
        for &y in &self.image {
            let y = y as usize;
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }
}

/// Errors from truth-table construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruthTableError {
    BadArity { n: usize },
    BadRowCount { have: usize, need: usize },
    ValueTooWide { row: usize, value: u64 },
}

impl fmt::Display for TruthTableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TruthTableError::BadArity { n } => write!(f, "arity {n} not in 1..=63"),
            TruthTableError::BadRowCount { have, need } => {
                write!(f, "table has {have} rows, expected {need}")
            }
            TruthTableError::ValueTooWide { row, value } => {
                write!(f, "row {row} value {value} does not fit the arity")
            }
        }
    }
}
