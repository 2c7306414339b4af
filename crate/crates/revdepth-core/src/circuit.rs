//! The circuit model: a gate sequence on `width` lines with a designated
//! primary-input prefix and an explicit output projection.
//!
//! A circuit on `width` lines realizes a map on `n_primary` variables in the
//! ancilla sense: inputs arrive on lines `0..n_primary`, every other line
//! starts at zero, and the realized outputs are read from the lines listed in
//! `output_map` after all gates have fired.

use alloc::vec::Vec;
use core::fmt;

use crate::gate::Gate;

/// A reversible circuit.
///
/// Invariants (checked by [`validate_circuit`], not by construction):
/// every gate's lines are distinct and below `width`; `n_primary <= width`;
/// `output_map` holds `n_primary` distinct line indices below `width`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    width: usize,
    n_primary: usize,
    gates: Vec<Gate>,
    output_map: Vec<usize>,
}

impl Circuit {
    /// Builds a circuit without validating; call [`Circuit::validate`] or
    /// [`validate_circuit`] to check the invariants.
    #[must_use]
    pub fn new(width: usize, n_primary: usize, gates: Vec<Gate>, output_map: Vec<usize>) -> Self {
        Circuit { width, n_primary, gates, output_map }
    }

    /// Circuit with no gates whose outputs are the inputs themselves.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        Circuit::new(n, n, Vec::new(), (0..n).collect())
    }

    /// Total number of lines.
    #[must_use]
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of primary input lines (the prefix `0..n_primary`).
    #[must_use]
    pub fn n_primary(&self) -> usize {
        self.n_primary
    }

    /// Number of ancilla lines.
    #[must_use]
    pub fn ancilla(&self) -> usize {
        self.width - self.n_primary
    }

    /// Gate sequence, in application order.
    #[must_use]
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Complexity: the number of gates.
    #[must_use]
    pub fn len(&self) -> usize {
        self.gates.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Lines the realized outputs are read from, one per primary input.
    #[must_use]
    pub fn output_map(&self) -> &[usize] {
        &self.output_map
    }

    /// Gate counts by kind: `[NOT, CNOT, CCNOT]`.
    #[must_use]
    pub fn counts_by_kind(&self) -> [usize; 3] {
        let mut counts = [0usize; 3];
        for g in &self.gates {
            counts[g.kind().controls()] += 1;
        }
        counts
    }

    /// Checks all structural invariants, returning every violation found.
    #[must_use]
    pub fn validate(&self) -> Vec<Violation> {
        validate_circuit(self)
    }

    /// Depth under the canonical greedy contiguous layering.
    #[must_use]
    pub fn depth(&self) -> usize {
        crate::layer::greedy_layering(self).depth()
    }

    /// Renames every line through `line_map` (old index -> `line_map[old]`),
    /// producing a circuit of width `new_width`. The map must be injective on
    /// `0..width` with image inside `0..new_width`; gate order, complexity and
    /// depth are unchanged. The output map is renamed alongside the gates.
    pub fn relocate(&self, line_map: &[usize], new_width: usize) -> Result<Circuit, RelocateError> {
        if line_map.len() < self.width {
            return Err(RelocateError::MapTooShort { have: line_map.len(), need: self.width });
        }
        let mut seen = alloc::collections::BTreeSet::new();
        for (old, &new) in line_map.iter().enumerate().take(self.width) {
            if new >= new_width {
                return Err(RelocateError::ImageOutOfRange { old, new, new_width });
            }
            if !seen.insert(new) {
                return Err(RelocateError::NotInjective { new });
            }
        }
        let gates = self
            .gates
            .iter()
            .map(|g| match *g {
                Gate::Not { target } => Gate::not(line_map[target]),
                Gate::Cnot { control, target } => Gate::cnot(line_map[control], line_map[target]),
                Gate::Ccnot { controls, target } => {
                    Gate::ccnot(line_map[controls[0]], line_map[controls[1]], line_map[target])
                }
            })
            .collect();
        let output_map = self.output_map.iter().map(|&l| line_map[l]).collect();
        Ok(Circuit::new(new_width, self.n_primary, gates, output_map))
    }
}

/// A structural invariant violation found by [`validate_circuit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `n_primary` exceeds the width.
    PrimaryExceedsWidth { n_primary: usize, width: usize },
    /// A gate line is out of range.
    GateLineOutOfRange { gate: usize, line: usize },
    /// A 2-CNOT repeats a control line.
    DuplicateControls { gate: usize, line: usize },
    /// A gate's target appears among its controls.
    TargetInControls { gate: usize, line: usize },
    /// `output_map` length differs from `n_primary`.
    OutputCountMismatch { have: usize, need: usize },
    /// An output index is out of range.
    OutputOutOfRange { position: usize, line: usize },
    /// Two outputs name the same line.
    DuplicateOutput { position: usize, line: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::PrimaryExceedsWidth { n_primary, width } => {
                write!(f, "{n_primary} primary inputs exceed width {width}")
            }
            Violation::GateLineOutOfRange { gate, line } => {
                write!(f, "gate {} uses line {} beyond the width", gate + 1, line + 1)
            }
            Violation::DuplicateControls { gate, line } => {
                write!(f, "gate {} repeats control line {}", gate + 1, line + 1)
            }
            Violation::TargetInControls { gate, line } => {
                write!(f, "gate {} uses line {} as both control and target", gate + 1, line + 1)
            }
            Violation::OutputCountMismatch { have, need } => {
                write!(f, "output map lists {have} lines, expected {need}")
            }
            Violation::OutputOutOfRange { position, line } => {
                write!(f, "output {} names line {} beyond the width", position + 1, line + 1)
            }
            Violation::DuplicateOutput { position, line } => {
                write!(f, "output {} repeats line {}", position + 1, line + 1)
            }
        }
    }
}

/// Checks every structural invariant of `c` and returns all violations, empty
/// when the circuit is well formed.
#[must_use]
pub fn validate_circuit(c: &Circuit) -> Vec<Violation> {
    let mut out = Vec::new();
    if c.n_primary() > c.width() {
        out.push(Violation::PrimaryExceedsWidth { n_primary: c.n_primary(), width: c.width() });
    }
    for (i, g) in c.gates().iter().enumerate() {
        for line in g.support().iter() {
            if line >= c.width() {
                out.push(Violation::GateLineOutOfRange { gate: i, line });
            }
        }
        let controls = g.controls();
        if controls.len() == 2 && controls[0] == controls[1] {
            out.push(Violation::DuplicateControls { gate: i, line: controls[0] });
        }
        if controls.contains(&g.target()) {
            out.push(Violation::TargetInControls { gate: i, line: g.target() });
        }
    }
    if c.output_map().len() != c.n_primary() {
        out.push(Violation::OutputCountMismatch {
            have: c.output_map().len(),
            need: c.n_primary(),
        });
    }
    let mut seen = alloc::collections::BTreeSet::new();
    for (position, &line) in c.output_map().iter().enumerate() {
        if line >= c.width() {
            out.push(Violation::OutputOutOfRange { position, line });
        }
        if !seen.insert(line) {
            out.push(Violation::DuplicateOutput { position, line });
        }
    }
    out
}

/// Errors from [`Circuit::relocate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelocateError {
    MapTooShort { have: usize, need: usize },
    ImageOutOfRange { old: usize, new: usize, new_width: usize },
    NotInjective { new: usize },
}

impl fmt::Display for RelocateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RelocateError::MapTooShort { have, need } => {
                write!(f, "line map covers {have} lines, circuit has {need}")
            }
            RelocateError::ImageOutOfRange { old, new, new_width } => {
                write!(f, "line {} maps to {} outside new width {}", old + 1, new + 1, new_width)
            }
            RelocateError::NotInjective { new } => {
                write!(f, "two lines map to {}", new + 1)
            }
        }
    }
}
