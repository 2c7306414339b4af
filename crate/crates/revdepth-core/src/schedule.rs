//! Layered gate scheduling.
//!
//! Builders place gates as early as their lines allow (list scheduling with
//! per-line readiness), producing an explicit partition into layers of
//! pairwise disjoint gates. Flattening a schedule layer by layer yields a
//! gate sequence whose greedy contiguous layering never exceeds the schedule
//! depth, because the schedule's own layers already form a valid contiguous
//! partition.
//!
//! Larger constructions are composed by merging finished fragments at a
//! uniform offset: the whole fragment shifts by the maximum readiness over
//! the lines it touches. This keeps every fragment's internal layer count
//! intact, so the depth of a composite is bounded by sums of fragment depths
//! along line-sharing chains, while fragments on disjoint lines overlap
//! freely.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::gate::Gate;

/// Hands out fresh line indices, used for ancilla allocation.
#[derive(Debug, Clone)]
pub struct LineAllocator {
    first: usize,
    next: usize,
}

impl LineAllocator {
    /// Allocator whose first fresh line is `first`.
    #[must_use]
    pub fn starting_at(first: usize) -> Self {
        LineAllocator { first, next: first }
    }

    /// Returns a line index never handed out before.
    pub fn alloc(&mut self) -> usize {
        let line = self.next;
        self.next += 1;
        line
    }

    /// Number of lines handed out so far.
    #[must_use]
    pub fn allocated(&self) -> usize {
        self.next - self.first
    }

    /// Total width spanned: one past the highest line handed out, or the
    /// starting line when nothing was allocated.
    #[must_use]
    pub fn width(&self) -> usize {
        self.next
    }
}

/// A finished schedule: gates partitioned into layers of disjoint support.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Layers {
    layers: Vec<Vec<Gate>>,
}

impl Layers {
    /// Number of layers.
    #[must_use]
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// Total number of gates across all layers.
    #[must_use]
    pub fn gate_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// The layers in order.
    #[must_use]
    pub fn layers(&self) -> &[Vec<Gate>] {
        &self.layers
    }

    /// Gates in layer order, concatenated.
    #[must_use]
    pub fn flatten(&self) -> Vec<Gate> {
        self.layers.iter().flatten().copied().collect()
    }
}

/// Incremental schedule builder with per-line readiness tracking.
#[derive(Debug, Clone, Default)]
pub struct ScheduleBuilder {
    layers: Vec<Vec<Gate>>,
    ready: BTreeMap<usize, usize>,
}

impl ScheduleBuilder {
    #[must_use]
    pub fn new() -> Self {
        ScheduleBuilder::default()
    }

    /// Current depth of the partial schedule.
    #[must_use]
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// First layer at which `line` is free.
    #[must_use]
    pub fn line_ready(&self, line: usize) -> usize {
        self.ready.get(&line).copied().unwrap_or(0)
    }

    fn put(&mut self, layer: usize, g: Gate) {
        debug_assert!(layer <= self.layers.len());
        if layer == self.layers.len() {
            self.layers.push(Vec::new());
        }
        self.layers[layer].push(g);
        for &line in g.support().as_slice() {
            self.ready.insert(line, layer + 1);
        }
    }

    /// Places `g` in the earliest layer where all its lines are free.
    pub fn place(&mut self, g: Gate) {
        let layer = g
            .support()
            .as_slice()
            .iter()
            .map(|&line| self.line_ready(line))
            .max()
            .unwrap_or(0);
        self.put(layer, g);
    }

    /// Places every gate of `gates` in order.
    pub fn place_all(&mut self, gates: &[Gate]) {
        for &g in gates {
            self.place(g);
        }
    }

    /// Splices a finished fragment in at a uniform offset: the maximum
    /// readiness over every line the fragment touches. Relative layering
    /// inside the fragment is preserved exactly. Returns the half-open layer
    /// span the fragment occupies.
    pub fn merge(&mut self, fragment: &Layers) -> core::ops::Range<usize> {
        let offset = fragment
            .layers()
            .iter()
            .flatten()
            .flat_map(|g| g.support().as_slice().to_vec())
            .map(|line| self.line_ready(line))
            .max()
            .unwrap_or(0);
        for (i, layer) in fragment.layers().iter().enumerate() {
            for &g in layer {
                self.put(offset + i, g);
            }
        }
        offset..offset + fragment.depth()
    }

    /// Finishes the schedule.
    #[must_use]
    pub fn finish(self) -> Layers {
        Layers { layers: self.layers }
    }
}
