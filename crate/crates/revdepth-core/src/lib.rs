//! Reversible-circuit toolkit over the gate basis {NOT, CNOT, 2-CNOT}.
//!
//! A circuit is a sequence of gates acting on `width` lines, the first
//! `n_primary` of which carry the inputs; the rest are ancilla initialised to
//! zero. The crate models circuits and their depth (minimum number of
//! contiguous blocks of disjoint-support gates), simulates them bit-parallel,
//! builds the gadget library used by the synthesizer, synthesizes a circuit
//! with ancilla for an arbitrary truth table, and evaluates counting lower
//! bounds and construction upper bounds on complexity and depth.
//!
//! The crate is `no_std` (alloc required); IO, file formats and the CLI live
//! in the companion `revdepth` crate.

#![no_std]

extern crate alloc;

pub mod alphabet;
pub mod bounds;
pub mod circuit;
pub mod gadget;
pub mod gate;
pub mod layer;
pub mod schedule;
pub mod sim;
pub mod synth;
pub mod truth_table;

#[cfg(test)]
pub(crate) mod testutil;

pub use alphabet::{enumerate_gates, gate_alphabet_size, unrank_gate};
pub use bounds::{
    census_bound_holds, census_log2, circuit_count_upto, shannon_lower_bounds, Bound,
    BoundsReport,
};
pub use circuit::{validate_circuit, Circuit, Violation};
pub use gadget::{
    basis_gadget, copy_tree, minterm_family, xor_fold, xor_subset_family, BasisOp, GadgetError,
    GadgetResult,
};
pub use gate::{apply_gate, Gate, GateKind};
pub use layer::{greedy_layering, LayerPartition};
pub use schedule::{Layers, LineAllocator, ScheduleBuilder};
pub use sim::{
    check_realizes, extract_permutation, parity, propagate_truth_tables, simulate,
    simulate_value, LineFunctionTable, Parity, Permutation, Realization, SimError,
};
pub use synth::{
    choose_params, choose_params_with_ratio, plan_coordinates, predicted_costs, synthesize,
    CoordinatePlan, CostReport, Mode, PhiSpec, SynthError, SynthParams,
};
pub use truth_table::TruthTable;
