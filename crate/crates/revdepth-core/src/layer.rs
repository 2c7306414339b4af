//! Depth via contiguous layering.
//!
//! The depth of a circuit is the minimum number of contiguous blocks its gate
//! sequence can be cut into such that the gates inside each block have
//! pairwise disjoint supports. The greedy maximal-prefix sweep below attains
//! that minimum: any contiguous block whose gates are pairwise disjoint stays
//! pairwise disjoint when truncated, so extending the current block as far as
//! possible never hurts.

use alloc::vec::Vec;
use core::ops::Range;

use crate::circuit::Circuit;
use crate::gate::Gate;

/// A partition of the gate sequence into contiguous depth-1 blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerPartition {
    blocks: Vec<Range<usize>>,
}

impl LayerPartition {
    /// Number of blocks; this is the circuit depth.
    #[must_use]
    pub fn depth(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks as gate-index ranges, in order. They cover `0..len` without
    /// gaps; an empty circuit has no blocks.
    #[must_use]
    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn iter(&self) -> impl Iterator<Item = Range<usize>> + '_ {
        self.blocks.iter().cloned()
    }
}

/// Set of lines touched by the current block, kept as a bitset so membership
/// tests stay O(1) at synthesizer widths.
struct LineSet {
    words: Vec<u64>,
}

impl LineSet {
    fn with_width(width: usize) -> Self {
        LineSet { words: alloc::vec![0; width.div_ceil(64).max(1)] }
    }

    fn contains(&self, line: usize) -> bool {
        self.words[line / 64] >> (line % 64) & 1 == 1
    }

    fn insert(&mut self, line: usize) {
        self.words[line / 64] |= 1 << (line % 64);
    }

    fn clear(&mut self) {
        self.words.fill(0);
    }

    fn conflicts_with(&self, g: &Gate) -> bool {
        g.support().iter().any(|l| self.contains(l))
    }

    fn absorb(&mut self, g: &Gate) {
        for l in g.support().iter() {
            self.insert(l);
        }
    }
}

/// Computes the canonical (minimum) contiguous layering of `c` by a greedy
/// maximal-prefix sweep. Gates must be in range for the circuit width.
#[must_use]
pub fn greedy_layering(c: &Circuit) -> LayerPartition {
    let mut blocks = Vec::new();
    if c.is_empty() {
        return LayerPartition { blocks };
    }
    let mut busy = LineSet::with_width(c.width());
    let mut start = 0usize;
    for (i, g) in c.gates().iter().enumerate() {
        if i > start && busy.conflicts_with(g) {
            blocks.push(start..i);
            busy.clear();
            start = i;
        }
        busy.absorb(g);
    }
    blocks.push(start..c.gates().len());
    LayerPartition { blocks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::reference_circuit;
    use alloc::vec;
    use alloc::vec::Vec;

    #[test]
    fn reference_circuit_has_depth_three() {
        let p = greedy_layering(&reference_circuit());
        assert_eq!(p.depth(), 3);
        assert_eq!(p.blocks(), &[0..1, 1..4, 4..6]);
    }

    #[test]
    fn empty_circuit_has_depth_zero() {
        let c = Circuit::identity(3);
        assert_eq!(greedy_layering(&c).depth(), 0);
        assert_eq!(c.depth(), 0);
    }

    #[test]
    fn repeated_line_forces_one_block_per_gate() {
        for l in 1..=5 {
            let gates = vec![Gate::not(0); l];
            let c = Circuit::new(1, 1, gates, vec![0]);
            assert_eq!(c.depth(), l);
        }
    }

    #[test]
    fn disjoint_gates_share_one_block() {
        let c = Circuit::new(
            6,
            6,
            vec![Gate::not(0), Gate::cnot(1, 2), Gate::ccnot(3, 4, 5)],
            (0..6).collect(),
        );
        assert_eq!(c.depth(), 1);
    }

    #[test]
    fn depth_is_within_the_complexity_sandwich() {
        // ceil(L / width) <= D <= L for every circuit with at least one gate.
        let c = reference_circuit();
        let l = c.len();
        let d = c.depth();
        assert!(l.div_ceil(c.width()) <= d && d <= l);
    }

    /// Exact minimum over contiguous partitions by dynamic programming, used
    /// as an independent oracle for the greedy sweep.
    pub(crate) fn min_contiguous_depth(c: &Circuit) -> usize {
        let gates = c.gates();
        let n = gates.len();
        if n == 0 {
            return 0;
        }
        // pairwise[i][j]: gates[i..=j] have pairwise disjoint supports.
        let mut ok = vec![vec![false; n]; n];
        for (i, row) in ok.iter_mut().enumerate() {
            row[i] = true;
            'outer: for j in i + 1..n {
                for a in i..j {
                    if gates[a].support().intersects(&gates[j].support()) {
                        break 'outer;
                    }
                }
                row[j] = true;
            }
        }
        let mut dp: Vec<usize> = vec![usize::MAX; n + 1];
        dp[0] = 0;
        for j in 1..=n {
            for i in 0..j {
                if ok[i][j - 1] && dp[i] != usize::MAX {
                    dp[j] = dp[j].min(dp[i] + 1);
                }
            }
        }
        dp[n]
    }

    #[test]
    fn greedy_matches_the_exhaustive_minimum_on_the_reference_circuit() {
        let c = reference_circuit();
        assert_eq!(greedy_layering(&c).depth(), min_contiguous_depth(&c));
    }
}
