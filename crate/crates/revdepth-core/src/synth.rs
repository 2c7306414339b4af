//! Truth-table synthesis over {NOT, CNOT, 2-CNOT} with ancilla.
//!
//! The construction splits each input `x` into a `k`-bit prefix and an
//! `(n−k)`-bit suffix and expands every output coordinate as
//!
//! ```text
//! f_j(x) = ⊕_i [suffix(x) = i] ∧ f_{i,j}(prefix(x))
//! ```
//!
//! where `f_{i,j}` ranges over the prefix functions obtained by fixing the
//! suffix. Each `f_{i,j}` is itself an XOR of subset-XORs of prefix minterms,
//! taken groupwise over a fixed partition of the `2^k` minterms into `p`
//! groups of at most `s`. Six stages realize this: prefix minterms (S1),
//! groupwise subset-XORs (S2), fan-out and folding into the coordinate
//! functions (S3), suffix minterms (S4), their fan-out (S5), and the final
//! pairing of suffix selectors with coordinate functions (S6). The prefix
//! chain S1–S3 and the suffix chain S4–S5 touch disjoint lines and run in
//! parallel; only S6 joins them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::circuit::Circuit;
use crate::gadget::{copy_tree, minterm_family, xor_fold, xor_subset_family};
use crate::gate::Gate;
use crate::layer::greedy_layering;
use crate::schedule::{LineAllocator, ScheduleBuilder};
use crate::truth_table::TruthTable;

/// Input cap for synthesis (circuit size grows as `n·2^n`).
pub const MAX_SYNTH_INPUTS: usize = 12;

/// Default floor for `2^k / s`: parameter selection raises `k` until the
/// minterm count per group ratio reaches this, keeping the fan-out stages
/// within their predicted budgets at practical sizes.
pub const DEFAULT_MIN_GROUP_RATIO: f64 = 8.0;

/// Parameter-selection target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Small prefix: depth ≈ 3n with ancilla ≈ 2^n.
    Depth3n,
    /// Large prefix: depth ≈ 2n at the price of ancilla ≈ φ(n)·2^n.
    Depth2n,
    /// Explicit prefix width.
    Manual { k: usize },
}

impl Mode {
    #[must_use]
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Depth3n => "d3n",
            Mode::Depth2n => "d2n",
            Mode::Manual { .. } => "manual",
        }
    }
}

/// The slowly growing trade-off function φ(n) steering parameter selection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhiSpec {
    /// φ(n) = ⌈log₂ n⌉.
    Log2,
    /// A fixed constant.
    Const(f64),
}

impl PhiSpec {
    #[must_use]
    pub fn value(&self, n: usize) -> f64 {
        match *self {
            PhiSpec::Log2 => libm::ceil(libm::log2(n as f64)),
            PhiSpec::Const(c) => c,
        }
    }
}

/// Chosen synthesis parameters: prefix width `k`, group capacity `s = n − k`
/// and group count `p = ⌈2^k / s⌉`.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthParams {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub p: usize,
    pub mode: Mode,
    pub phi: PhiSpec,
    pub min_group_ratio: f64,
    /// Materialize every subset-XOR of every group instead of only the
    /// demanded ones.
    pub full_groups: bool,
    /// Set when the requested `k` had to be repaired (range clamp or group
    /// ratio floor).
    pub clamped: bool,
}

impl SynthParams {
    #[must_use]
    pub fn with_full_groups(mut self, on: bool) -> Self {
        self.full_groups = on;
        self
    }
}

/// Errors from parameter selection and synthesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SynthError {
    /// Synthesis needs at least two inputs.
    TooFewInputs { n: usize },
    /// The input count exceeds the synthesis cap.
    TooManyInputs { n: usize, cap: usize },
    /// Parameters were chosen for a different arity than the table has.
    ArityMismatch { params: usize, table: usize },
}

impl fmt::Display for SynthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SynthError::TooFewInputs { n } => write!(f, "synthesis needs n >= 2, got {n}"),
            SynthError::TooManyInputs { n, cap } => {
                write!(f, "{n} inputs exceed the synthesis cap {cap}")
            }
            SynthError::ArityMismatch { params, table } => {
                write!(f, "parameters are for {params} inputs but the table has {table}")
            }
        }
    }
}

/// Picks `(k, s, p)` for `n` inputs under the default group-ratio floor.
pub fn choose_params(n: usize, mode: Mode, phi: PhiSpec) -> Result<SynthParams, SynthError> {
    choose_params_with_ratio(n, mode, phi, DEFAULT_MIN_GROUP_RATIO)
}

/// Picks `(k, s, p)` with an explicit floor on `2^k / s`. The floor only
/// constrains the automatic modes; `Manual` passes `k` through untouched
/// apart from the `[1, n−1]` range clamp.
pub fn choose_params_with_ratio(
    n: usize,
    mode: Mode,
    phi: PhiSpec,
    min_group_ratio: f64,
) -> Result<SynthParams, SynthError> {
    if n < 2 {
        return Err(SynthError::TooFewInputs { n });
    }
    let slice = libm::ceil(n as f64 / phi.value(n));
    let raw: i64 = match mode {
        Mode::Depth3n => slice as i64,
        Mode::Depth2n => n as i64 - slice as i64,
        Mode::Manual { k } => k as i64,
    };
    let mut k = raw.clamp(1, n as i64 - 1) as usize;
    let mut clamped = raw < 1 || raw > n as i64 - 1;
    if !matches!(mode, Mode::Manual { .. }) {
        while k < n - 1 && ((1u64 << k) as f64) < min_group_ratio * (n - k) as f64 {
            k += 1;
            clamped = true;
        }
        if ((1u64 << k) as f64) < min_group_ratio * (n - k) as f64 {
            clamped = true;
        }
    }
    let s = n - k;
    let p = (1usize << k).div_ceil(s);
    Ok(SynthParams {
        n,
        k,
        s,
        p,
        mode,
        phi,
        min_group_ratio,
        full_groups: false,
        clamped,
    })
}

/// The groupwise minterm selections realizing every coordinate function.
///
/// For suffix index `i`, output bit `j` and group `t`, the mask's bit `b`
/// selects prefix minterm `σ = t·s + b`. XORing the selected minterms of all
/// groups reproduces `f_{i,j}` over the prefix variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinatePlan {
    n: usize,
    k: usize,
    s: usize,
    p: usize,
    masks: Vec<u64>,
}

impl CoordinatePlan {
    /// Number of suffix assignments (`2^{n−k}`).
    #[must_use]
    pub fn suffix_count(&self) -> usize {
        1 << (self.n - self.k)
    }

    /// Number of groups.
    #[must_use]
    pub fn groups(&self) -> usize {
        self.p
    }

    /// Prefix minterm range covered by group `t`.
    #[must_use]
    pub fn group_range(&self, t: usize) -> Range<u64> {
        let lo = (t * self.s) as u64;
        lo..(lo + self.group_size(t) as u64)
    }

    /// Size of group `t` (equal to `s` except possibly for the last group).
    #[must_use]
    pub fn group_size(&self, t: usize) -> usize {
        self.s.min((1usize << self.k) - t * self.s)
    }

    /// Selection mask for suffix `i`, output bit `j`, group `t`.
    #[must_use]
    pub fn mask(&self, i: usize, j: usize, t: usize) -> u64 {
        self.masks[(i * self.n + j) * self.p + t]
    }
}

/// Prefix value `σ` and suffix index `i` composed back into an input value.
/// Suffix indices weight the first suffix variable least, so the suffix field
/// of the input is the bit-reversal of `i`.
fn compose_input(sigma: u64, i: u64, k: usize, n: usize) -> u64 {
    let m = n - k;
    let mut suffix = 0u64;
    for j in 0..m {
        if i >> j & 1 == 1 {
            suffix |= 1 << (m - 1 - j);
        }
    }
    sigma << m | suffix
}

/// Collects, for every suffix index and output bit, the groupwise masks of
/// prefix minterms on which the coordinate function is 1.
#[must_use]
pub fn plan_coordinates(f: &TruthTable, params: &SynthParams) -> CoordinatePlan {
    assert_eq!(f.n(), params.n, "plan arity mismatch");
    let (n, k, s, p) = (params.n, params.k, params.s, params.p);
    let mut masks = vec![0u64; (1 << (n - k)) * n * p];
    for i in 0..1u64 << (n - k) {
        for sigma in 0..1u64 << k {
            let v = compose_input(sigma, i, k, n);
            let (t, b) = (sigma as usize / s, sigma as usize % s);
            for j in 0..n {
                if f.output_bit(v, j) {
                    masks[(i as usize * n + j) * p + t] |= 1 << b;
                }
            }
        }
    }
    CoordinatePlan { n, k, s, p, masks }
}

/// Per-stage measured cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StageCost {
    pub gates: usize,
    /// The stage's own layer count: parallel fragments inside a stage count
    /// by their maximum, chained phases by their sum.
    pub layers: usize,
    pub ancilla: usize,
}

/// Closed-form cost predictions for a parameter choice.
#[derive(Debug, Clone, PartialEq)]
pub struct Predicted {
    /// ≈ 2n + s.
    pub depth: f64,
    /// ≈ n·2^{n+1} / s.
    pub gates: f64,
    /// ≈ n·2^n / s.
    pub ancilla: f64,
    pub stage_depth: [f64; 6],
    pub stage_gates: [f64; 6],
    pub stage_ancilla: [f64; 6],
}

/// Measured and predicted costs of one synthesis run.
#[derive(Debug, Clone, PartialEq)]
pub struct CostReport {
    pub gates: usize,
    pub depth: usize,
    pub ancilla: usize,
    pub width: usize,
    pub stages: [StageCost; 6],
    pub predicted: Predicted,
}

/// Evaluates the closed-form cost predictions for `params`.
#[must_use]
pub fn predicted_costs(params: &SynthParams) -> Predicted {
    let (n, k, s, p) = (
        params.n as f64,
        params.k as f64,
        params.s as f64,
        params.p as f64,
    );
    let pow = |e: f64| libm::exp2(e);
    Predicted {
        depth: 2.0 * n + s,
        gates: n * pow(n + 1.0) / s,
        ancilla: n * pow(n) / s,
        stage_depth: [
            k,
            s,
            n - k + libm::log2(p),
            n - k,
            libm::log2(n),
            n - k,
        ],
        stage_gates: [
            3.0 * pow(k),
            3.0 * p * pow(s),
            (2.0 * p - 1.0) * n * pow(n - k),
            3.0 * pow(n - k),
            (n - 1.0) * pow(n - k),
            3.0 * n * pow(n - k - 1.0),
        ],
        stage_ancilla: [
            3.0 * pow(k),
            2.0 * p * pow(s),
            p * n * pow(n - k),
            3.0 * pow(n - k),
            (n - 1.0) * pow(n - k),
            n * pow(n - k - 1.0),
        ],
    }
}

/// Runs the six-stage construction on `f` and returns the circuit together
/// with its cost report. The result realizes `f` with the inputs on lines
/// `0..n`, all other lines starting at zero and the outputs read through the
/// output map; primary lines are never gate targets.
pub fn synthesize(
    f: &TruthTable,
    params: &SynthParams,
) -> Result<(Circuit, CostReport), SynthError> {
    let n = params.n;
    if f.n() != n {
        return Err(SynthError::ArityMismatch { params: n, table: f.n() });
    }
    if n < 2 {
        return Err(SynthError::TooFewInputs { n });
    }
    if n > MAX_SYNTH_INPUTS {
        return Err(SynthError::TooManyInputs { n, cap: MAX_SYNTH_INPUTS });
    }
    let (k, s, p) = (params.k, params.s, params.p);
    debug_assert_eq!(k + s, n);
    let plan = plan_coordinates(f, params);
    let suffixes = plan.suffix_count();

    let mut alloc = LineAllocator::starting_at(n);
    let mut builder = ScheduleBuilder::new();
    let mut stages = [StageCost::default(); 6];

    // S1: all prefix minterms.
    let prefix_vars: Vec<usize> = (0..k).collect();
    let s1 = minterm_family(&prefix_vars, &mut alloc).expect("prefix width is within the cap");
    builder.merge(&s1.layers);
    stages[0] = StageCost {
        gates: s1.layers.gate_count(),
        layers: s1.layers.depth(),
        ancilla: s1.ancilla_used,
    };

    // S2: per group, the demanded subset-XORs of its minterms.
    let mut group_line: BTreeMap<(usize, u64), usize> = BTreeMap::new();
    for t in 0..p {
        let lines: Vec<usize> =
            plan.group_range(t).map(|sigma| s1.outputs[sigma as usize]).collect();
        let mut wanted: BTreeSet<u64> = BTreeSet::new();
        if params.full_groups {
            wanted.extend(0..1u64 << lines.len());
        } else {
            for i in 0..suffixes {
                for j in 0..n {
                    let m = plan.mask(i, j, t);
                    if m != 0 {
                        wanted.insert(m);
                    }
                }
            }
        }
        if wanted.is_empty() {
            continue;
        }
        let demanded: Vec<u64> = wanted.into_iter().collect();
        let fam =
            xor_subset_family(&lines, &demanded, &mut alloc).expect("group fits the family cap");
        builder.merge(&fam.layers);
        stages[1].gates += fam.layers.gate_count();
        stages[1].layers = stages[1].layers.max(fam.layers.depth());
        stages[1].ancilla += fam.ancilla_used;
        for (idx, &mask) in demanded.iter().enumerate() {
            group_line.insert((t, mask), fam.outputs[idx]);
        }
    }

    // S3: fan every demanded group line out to its uses, then fold each
    // coordinate function's group terms together. The original line donates
    // one use as a fold operand — folds clobber their operands, so a primary
    // line (which can back a singleton mask when k = 1) never donates.
    let mut demand: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..suffixes {
        for j in 0..n {
            for t in 0..p {
                let m = plan.mask(i, j, t);
                if m != 0 {
                    *demand.entry(group_line[&(t, m)]).or_insert(0) += 1;
                }
            }
        }
    }
    let mut fanout = ScheduleBuilder::new();
    let mut pools: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (&line, &uses) in &demand {
        let mut pool = Vec::with_capacity(uses);
        if line >= n {
            pool.push(line);
        }
        let tree = copy_tree(line, uses - pool.len(), &mut alloc);
        fanout.merge(&tree.layers);
        stages[2].gates += tree.layers.gate_count();
        stages[2].ancilla += tree.ancilla_used;
        pool.extend(tree.outputs);
        pools.insert(line, pool);
    }
    let copies_depth = fanout.depth();
    builder.merge(&fanout.finish());

    let mut coord_acc = vec![0usize; suffixes * n];
    let mut max_fold = 0;
    for i in 0..suffixes {
        for j in 0..n {
            let mut terms = Vec::new();
            for t in 0..p {
                let m = plan.mask(i, j, t);
                if m != 0 {
                    let line = group_line[&(t, m)];
                    terms.push(pools.get_mut(&line).unwrap().pop().unwrap());
                }
            }
            if terms.is_empty() {
                // Identically-zero coordinate: a fresh line is its constant.
                coord_acc[i * n + j] = alloc.alloc();
                stages[2].ancilla += 1;
                continue;
            }
            let fold = xor_fold(&terms).expect("fold terms are distinct");
            builder.merge(&fold.layers);
            stages[2].gates += fold.layers.gate_count();
            max_fold = max_fold.max(fold.layers.depth());
            coord_acc[i * n + j] = fold.outputs[0];
        }
    }
    stages[2].layers = copies_depth + max_fold;

    // S4: all suffix minterms, scheduled in parallel with the prefix chain.
    let suffix_vars: Vec<usize> = (k..n).collect();
    let s4 = minterm_family(&suffix_vars, &mut alloc).expect("suffix width is within the cap");
    builder.merge(&s4.layers);
    stages[3] = StageCost {
        gates: s4.layers.gate_count(),
        layers: s4.layers.depth(),
        ancilla: s4.ancilla_used,
    };

    // S5: every suffix selector fans out to one use per output bit; the
    // selector line itself serves the first use (controls only downstream).
    let mut s5 = ScheduleBuilder::new();
    let mut suffix_uses: Vec<Vec<usize>> = Vec::with_capacity(suffixes);
    for i in 0..suffixes {
        let selector = compose_input(0, i as u64, k, n) as usize;
        let line = s4.outputs[selector];
        let tree = copy_tree(line, n - 1, &mut alloc);
        s5.merge(&tree.layers);
        stages[4].gates += tree.layers.gate_count();
        stages[4].ancilla += tree.ancilla_used;
        let mut uses = vec![line];
        uses.extend(tree.outputs);
        suffix_uses.push(uses);
    }
    stages[4].layers = s5.depth();
    builder.merge(&s5.finish());

    // S6: pair consecutive suffix selectors into fresh lines, two CCNOTs
    // each, then fold each output bit's pair lines together.
    let mut s6 = ScheduleBuilder::new();
    let mut output_map = Vec::with_capacity(n);
    let mut pair_lists: Vec<Vec<usize>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut pairs = Vec::with_capacity(suffixes / 2);
        for m in 0..suffixes / 2 {
            let target = alloc.alloc();
            stages[5].ancilla += 1;
            s6.place(Gate::ccnot(suffix_uses[2 * m][j], coord_acc[2 * m * n + j], target));
            s6.place(Gate::ccnot(
                suffix_uses[2 * m + 1][j],
                coord_acc[(2 * m + 1) * n + j],
                target,
            ));
            pairs.push(target);
        }
        pair_lists.push(pairs);
    }
    for pairs in &pair_lists {
        let fold = xor_fold(pairs).expect("pair lines are distinct");
        for layer in fold.layers.layers() {
            for &g in layer {
                s6.place(g);
            }
        }
        output_map.push(fold.outputs[0]);
    }
    let s6 = s6.finish();
    builder.merge(&s6);
    stages[5].gates = s6.gate_count();
    stages[5].layers = s6.depth();

    let width = alloc.width();
    let ancilla = width - n;
    let schedule_depth = builder.depth();
    let circuit = Circuit::new(width, n, builder.finish().flatten(), output_map);
    debug_assert!(circuit.validate().is_empty());
    let depth = greedy_layering(&circuit).depth();
    debug_assert!(depth <= schedule_depth);
    let report = CostReport {
        gates: circuit.len(),
        depth,
        ancilla,
        width,
        stages,
        predicted: predicted_costs(params),
    };
    Ok((circuit, report))
}
