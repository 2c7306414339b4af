//! Gates of the reversible basis: NOT, CNOT and 2-CNOT (Toffoli).
//!
//! A gate inverts its target line exactly when all of its control lines carry
//! one; the empty conjunction is one, so NOT always inverts. Line indices are
//! zero-based throughout the library and one-based in every human-facing
//! format.

use core::fmt;

/// The three gate kinds of the basis, by control count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    /// Zero controls.
    Not,
    /// One control.
    Cnot,
    /// Two controls.
    Ccnot,
}

impl GateKind {
    /// Number of control lines for this kind.
    #[must_use]
    pub fn controls(self) -> usize {
        match self {
            GateKind::Not => 0,
            GateKind::Cnot => 1,
            GateKind::Ccnot => 2,
        }
    }

    /// Short mnemonic used by the text formats: `N`, `C` or `T`.
    #[must_use]
    pub fn mnemonic(self) -> char {
        match self {
            GateKind::Not => 'N',
            GateKind::Cnot => 'C',
            GateKind::Ccnot => 'T',
        }
    }
}

/// A single reversible gate.
///
/// Controls are stored in ascending order, so two gates with the same control
/// set compare equal regardless of the order they were given in. Use the
/// constructors; variant fields are public only for pattern matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    /// Inverts `target` unconditionally.
    Not { target: usize },
    /// Inverts `target` when `control` is one.
    Cnot { control: usize, target: usize },
    /// Inverts `target` when both controls are one.
    Ccnot { controls: [usize; 2], target: usize },
}

impl Gate {
    /// NOT on `target`.
    #[must_use]
    pub fn not(target: usize) -> Self {
        Gate::Not { target }
    }

    /// CNOT with the given control and target.
    #[must_use]
    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::Cnot { control, target }
    }

    /// 2-CNOT with the given controls (stored sorted) and target.
    #[must_use]
    pub fn ccnot(c1: usize, c2: usize, target: usize) -> Self {
        let controls = if c1 <= c2 { [c1, c2] } else { [c2, c1] };
        Gate::Ccnot { controls, target }
    }

    /// Kind of this gate.
    #[must_use]
    pub fn kind(&self) -> GateKind {
        match self {
            Gate::Not { .. } => GateKind::Not,
            Gate::Cnot { .. } => GateKind::Cnot,
            Gate::Ccnot { .. } => GateKind::Ccnot,
        }
    }

    /// Target line.
    #[must_use]
    pub fn target(&self) -> usize {
        match *self {
            Gate::Not { target } => target,
            Gate::Cnot { target, .. } => target,
            Gate::Ccnot { target, .. } => target,
        }
    }

    /// Control lines, ascending.
    #[must_use]
    pub fn controls(&self) -> &[usize] {
        match self {
            Gate::Not { .. } => &[],
            Gate::Cnot { control, .. } => core::slice::from_ref(control),
            Gate::Ccnot { controls, .. } => controls,
        }
    }

    /// Support of the gate: its target together with all controls.
    #[must_use]
    pub fn support(&self) -> Support {
        let mut lines = [0usize; 3];
        let controls = self.controls();
        lines[..controls.len()].copy_from_slice(controls);
        lines[controls.len()] = self.target();
        Support { lines, len: controls.len() + 1 }
    }

    /// Largest line index the gate touches.
    #[must_use]
    pub fn max_line(&self) -> usize {
        let mut m = self.target();
        for &c in self.controls() {
            if c > m {
                m = c;
            }
        }
        m
    }

    /// Applies the gate to a state in place. Panics if an index is out of
    /// range; [`apply_gate`] is the checked variant.
    pub fn apply_in_place(&self, state: &mut [bool]) {
        if self.controls().iter().all(|&c| state[c]) {
            state[self.target()] ^= true;
        }
    }
}

impl fmt::Display for Gate {
    /// One-based textual form, e.g. `T 1 4 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind().mnemonic())?;
        for &c in self.controls() {
            write!(f, " {}", c + 1)?;
        }
        write!(f, " {}", self.target() + 1)
    }
}

/// Small fixed-capacity set of the lines a gate touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Support {
    lines: [usize; 3],
    len: usize,
}

impl Support {
    /// Lines in the support (controls first, then target).
    #[must_use]
    pub fn as_slice(&self) -> &[usize] {
        &self.lines[..self.len]
    }

    /// Number of distinct roles (not deduplicated; an invalid gate may repeat
    /// a line).
    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Whether `line` belongs to the support.
    #[must_use]
    pub fn contains(&self, line: usize) -> bool {
        self.as_slice().contains(&line)
    }

    /// Whether two supports share a line.
    #[must_use]
    pub fn intersects(&self, other: &Support) -> bool {
        self.as_slice().iter().any(|l| other.contains(*l))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.as_slice().iter().copied()
    }
}

/// Applies `g` to a copy of `state` and returns the successor state.
///
/// The state is one bit per line; `state.len()` must cover every line the
/// gate touches.
pub fn apply_gate(g: &Gate, state: &[bool]) -> Result<alloc::vec::Vec<bool>, GateError> {
    if g.max_line() >= state.len() {
        return Err(GateError::LineOutOfRange { line: g.max_line(), width: state.len() });
    }
    let mut next = alloc::vec::Vec::from(state);
    g.apply_in_place(&mut next);
    Ok(next)
}

/// Errors from checked single-gate application.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateError {
    LineOutOfRange { line: usize, width: usize },
}

impl fmt::Display for GateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateError::LineOutOfRange { line, width } => {
                write!(f, "line {} out of range for width {}", line + 1, width)
            }
        }
    }
}
