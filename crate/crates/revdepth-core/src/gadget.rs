//! Reusable subcircuit builders: one- and two-input basis gadgets, fan-out
//! copy trees, XOR folds onto existing lines, the all-minterms family and the
//! subset-XOR family.
//!
//! Every builder draws fresh ancilla from a [`LineAllocator`] and returns a
//! layered fragment plus the lines holding its results. Input lines are only
//! ever used as gate controls, so their values survive; the one deliberate
//! exception is [`xor_fold`], which accumulates onto its first line and
//! clobbers the rest.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gate::Gate;
use crate::schedule::{Layers, LineAllocator, ScheduleBuilder};

/// Variable-count cap for the family builders (memory and gate count grow as
/// `2^k`).
pub const MAX_FAMILY_VARS: usize = 12;

/// A built subcircuit fragment: its layered gates, the lines carrying the
/// results, and how many fresh ancilla it drew.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetResult {
    /// Layered gate sequence; flattening in layer order preserves semantics.
    pub layers: Layers,
    /// Result lines. Families index by point: entry `σ` of
    /// [`minterm_family`] holds minterm `σ`, entry `i` of
    /// [`xor_subset_family`] answers the `i`-th demanded mask.
    pub outputs: Vec<usize>,
    /// Number of fresh ancilla drawn from the allocator.
    pub ancilla_used: usize,
}

/// Errors from the gadget builders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GadgetError {
    /// Too many variables for a family builder.
    TooManyVars { have: usize, cap: usize },
    /// The same line given twice where distinct lines are required.
    DuplicateLine { line: usize },
    /// An empty line list where at least one line is required.
    Empty,
    /// A mask with bits beyond the group size.
    MaskOutOfRange { mask: u64, width: usize },
    /// Wrong number of inputs for a basis operation.
    BadArity { op: &'static str, need: usize, have: usize },
}

impl fmt::Display for GadgetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GadgetError::TooManyVars { have, cap } => {
                write!(f, "{have} variables exceed the family cap {cap}")
            }
            GadgetError::DuplicateLine { line } => write!(f, "line {line} given twice"),
            GadgetError::Empty => write!(f, "at least one line is required"),
            GadgetError::MaskOutOfRange { mask, width } => {
                write!(f, "mask {mask:#b} has bits beyond the group size {width}")
            }
            GadgetError::BadArity { op, need, have } => {
                write!(f, "{op} takes {need} inputs, got {have}")
            }
        }
    }
}

fn check_distinct(lines: &[usize]) -> Result<(), GadgetError> {
    let mut seen = BTreeSet::new();
    for &line in lines {
        if !seen.insert(line) {
            return Err(GadgetError::DuplicateLine { line });
        }
    }
    Ok(())
}

/// One-output basis operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisOp {
    Neg,
    Xor,
    And,
}

impl BasisOp {
    fn arity(self) -> usize {
        match self {
            BasisOp::Neg => 1,
            BasisOp::Xor | BasisOp::And => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            BasisOp::Neg => "NEG",
            BasisOp::Xor => "XOR",
            BasisOp::And => "AND",
        }
    }
}

/// Computes `op` of the input lines onto one fresh ancilla: at most 2 gates,
/// depth at most 2, exactly 1 ancilla. Inputs are controls only.
pub fn basis_gadget(
    op: BasisOp,
    inputs: &[usize],
    alloc: &mut LineAllocator,
) -> Result<GadgetResult, GadgetError> {
    if inputs.len() != op.arity() {
        return Err(GadgetError::BadArity { op: op.name(), need: op.arity(), have: inputs.len() });
    }
    check_distinct(inputs)?;
    let a = alloc.alloc();
    let mut b = ScheduleBuilder::new();
    match op {
        BasisOp::Neg => {
            b.place(Gate::cnot(inputs[0], a));
            b.place(Gate::not(a));
        }
        BasisOp::Xor => {
            b.place(Gate::cnot(inputs[0], a));
            b.place(Gate::cnot(inputs[1], a));
        }
        BasisOp::And => {
            b.place(Gate::ccnot(inputs[0], inputs[1], a));
        }
    }
    Ok(GadgetResult { layers: b.finish(), outputs: vec![a], ancilla_used: 1 })
}

/// Doubling fan-out into an existing builder: every line already holding the
/// value (source included) feeds one new copy per round. Returns the copies
/// in creation order.
fn emit_copy_tree(
    src: usize,
    count: usize,
    alloc: &mut LineAllocator,
    b: &mut ScheduleBuilder,
) -> Vec<usize> {
    let mut feeders = vec![src];
    let mut copies = Vec::with_capacity(count);
    while copies.len() < count {
        let round = feeders.len();
        for f in 0..round {
            if copies.len() == count {
                break;
            }
            let c = alloc.alloc();
            b.place(Gate::cnot(feeders[f], c));
            copies.push(c);
            feeders.push(c);
        }
    }
    copies
}

/// Fans the value of `src` out onto `count` fresh ancilla with a doubling
/// schedule: exactly `count` CNOT gates in `⌈log₂(count+1)⌉` layers. The
/// source value is preserved.
#[must_use]
pub fn copy_tree(src: usize, count: usize, alloc: &mut LineAllocator) -> GadgetResult {
    let mut b = ScheduleBuilder::new();
    let outputs = emit_copy_tree(src, count, alloc, &mut b);
    GadgetResult { layers: b.finish(), outputs, ancilla_used: count }
}

/// Folds the XOR of `lines` onto `lines[0]` by balanced pairwise
/// accumulation: exactly `m − 1` CNOT gates in exactly `⌈log₂ m⌉` layers and
/// zero fresh ancilla. Every line except the accumulator may be clobbered.
pub fn xor_fold(lines: &[usize]) -> Result<GadgetResult, GadgetError> {
    if lines.is_empty() {
        return Err(GadgetError::Empty);
    }
    check_distinct(lines)?;
    let mut b = ScheduleBuilder::new();
    let mut len = lines.len();
    while len > 1 {
        let keep = len.div_ceil(2);
        for i in 0..len - keep {
            b.place(Gate::cnot(lines[i + keep], lines[i]));
        }
        len = keep;
    }
    Ok(GadgetResult { layers: b.finish(), outputs: vec![lines[0]], ancilla_used: 0 })
}

/// Builds all `2^k` minterms of the `vars` lines. Output `σ` carries the
/// conjunction that is 1 exactly when the variables spell `σ` (first variable
/// in the most significant bit).
///
/// Positive literals are the input lines themselves; negative literals go
/// onto fresh ancilla. The family splits the variables in half (first half
/// rounded up), builds both subfamilies, fans their outputs out with copy
/// trees and ANDs every cross pair into a fresh line with one CCNOT.
pub fn minterm_family(
    vars: &[usize],
    alloc: &mut LineAllocator,
) -> Result<GadgetResult, GadgetError> {
    if vars.is_empty() {
        return Err(GadgetError::Empty);
    }
    if vars.len() > MAX_FAMILY_VARS {
        return Err(GadgetError::TooManyVars { have: vars.len(), cap: MAX_FAMILY_VARS });
    }
    check_distinct(vars)?;
    let before = alloc.allocated();
    let mut b = ScheduleBuilder::new();
    let outputs = minterm_rec(vars, alloc, &mut b);
    Ok(GadgetResult {
        layers: b.finish(),
        outputs,
        ancilla_used: alloc.allocated() - before,
    })
}

fn minterm_rec(vars: &[usize], alloc: &mut LineAllocator, b: &mut ScheduleBuilder) -> Vec<usize> {
    if vars.len() == 1 {
        let x = vars[0];
        let neg = alloc.alloc();
        b.place(Gate::cnot(x, neg));
        b.place(Gate::not(neg));
        return vec![neg, x];
    }
    let (first, last) = vars.split_at(vars.len().div_ceil(2));
    let hi = minterm_rec(first, alloc, b);
    let lo = minterm_rec(last, alloc, b);
    // Every hi line pairs with every lo line; fan each side out so all
    // cross-product CCNOTs can run with disjoint operands.
    let hi_uses: Vec<Vec<usize>> = hi
        .iter()
        .map(|&line| {
            let mut uses = vec![line];
            uses.extend(emit_copy_tree(line, lo.len() - 1, alloc, b));
            uses
        })
        .collect();
    let lo_uses: Vec<Vec<usize>> = lo
        .iter()
        .map(|&line| {
            let mut uses = vec![line];
            uses.extend(emit_copy_tree(line, hi.len() - 1, alloc, b));
            uses
        })
        .collect();
    let mut outputs = Vec::with_capacity(hi.len() * lo.len());
    for i in 0..hi.len() {
        for j in 0..lo.len() {
            let t = alloc.alloc();
            b.place(Gate::ccnot(hi_uses[i][j], lo_uses[j][i], t));
            outputs.push(t);
        }
    }
    outputs
}

/// Builds, for each demanded mask, a line carrying the XOR of the selected
/// `group` lines. Mask bit `b` selects `group[b]`. Output `i` answers
/// `demanded[i]`; repeated masks share a line.
///
/// Mask 0 yields a fresh untouched ancilla (constant 0) and singleton masks
/// alias the group lines themselves. Only demanded masks and the sub-masks
/// they decompose into are built, so the cost never exceeds the full-family
/// build that demands every mask.
pub fn xor_subset_family(
    group: &[usize],
    demanded: &[u64],
    alloc: &mut LineAllocator,
) -> Result<GadgetResult, GadgetError> {
    if group.is_empty() {
        return Err(GadgetError::Empty);
    }
    if group.len() > MAX_FAMILY_VARS {
        return Err(GadgetError::TooManyVars { have: group.len(), cap: MAX_FAMILY_VARS });
    }
    check_distinct(group)?;
    let width = group.len();
    for &mask in demanded {
        if mask >> width != 0 {
            return Err(GadgetError::MaskOutOfRange { mask, width });
        }
    }
    let before = alloc.allocated();
    let mut b = ScheduleBuilder::new();
    let needed: BTreeSet<u64> = demanded.iter().copied().collect();
    let map = subset_rec(group, &needed, alloc, &mut b);
    let outputs = demanded.iter().map(|m| map[m]).collect();
    Ok(GadgetResult {
        layers: b.finish(),
        outputs,
        ancilla_used: alloc.allocated() - before,
    })
}

fn subset_rec(
    group: &[usize],
    needed: &BTreeSet<u64>,
    alloc: &mut LineAllocator,
    b: &mut ScheduleBuilder,
) -> BTreeMap<u64, usize> {
    let mut map = BTreeMap::new();
    if group.len() == 1 {
        if needed.contains(&0) {
            map.insert(0, alloc.alloc());
        }
        if needed.contains(&1) {
            map.insert(1, group[0]);
        }
        return map;
    }
    // Split the positions in half (first half rounded up, in the low mask
    // bits): a mask with one empty half aliases the other half's line, a mask
    // straddling both combines a fresh copy of its low-half line with a CNOT
    // from its high-half line.
    let mid = group.len().div_ceil(2);
    let low_bits = (1u64 << mid) - 1;
    let mut need_low = BTreeSet::new();
    let mut need_high = BTreeSet::new();
    let mut combines = Vec::new();
    for &m in needed {
        let (lo, hi) = (m & low_bits, m >> mid);
        match (lo, hi) {
            (0, hi) => {
                need_high.insert(hi);
            }
            (lo, 0) => {
                need_low.insert(lo);
            }
            (lo, hi) => {
                need_low.insert(lo);
                need_high.insert(hi);
                combines.push((lo, hi));
            }
        }
    }
    let low = subset_rec(&group[..mid], &need_low, alloc, b);
    let high = subset_rec(&group[mid..], &need_high, alloc, b);

    let mut lo_uses: BTreeMap<u64, usize> = BTreeMap::new();
    let mut hi_uses: BTreeMap<u64, usize> = BTreeMap::new();
    for &(lo, hi) in &combines {
        *lo_uses.entry(lo).or_insert(0) += 1;
        *hi_uses.entry(hi).or_insert(0) += 1;
    }
    // Low-half lines are copied once per use (each copy becomes one result
    // accumulator); high-half lines stay read-only controls, the original
    // donating one use and copies covering the rest.
    let mut lo_pool: BTreeMap<u64, Vec<usize>> = lo_uses
        .iter()
        .map(|(&m, &cnt)| (m, emit_copy_tree(low[&m], cnt, alloc, b)))
        .collect();
    let mut hi_pool: BTreeMap<u64, Vec<usize>> = hi_uses
        .iter()
        .map(|(&m, &cnt)| {
            let mut uses = vec![high[&m]];
            uses.extend(emit_copy_tree(high[&m], cnt - 1, alloc, b));
            (m, uses)
        })
        .collect();
    for &m in needed {
        let (lo, hi) = (m & low_bits, m >> mid);
        if lo == 0 {
            map.insert(m, high[&hi]);
        } else if hi == 0 {
            map.insert(m, low[&lo]);
        }
    }
    for (lo, hi) in combines {
        let acc = lo_pool.get_mut(&lo).unwrap().pop().unwrap();
        let ctl = hi_pool.get_mut(&hi).unwrap().pop().unwrap();
        b.place(Gate::cnot(ctl, acc));
        map.insert(hi << mid | lo, acc);
    }
    map
}
