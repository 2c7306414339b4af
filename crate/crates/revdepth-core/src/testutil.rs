//! Shared fixtures for the unit tests.

use alloc::vec;

use crate::circuit::Circuit;
use crate::gate::Gate;

/// The four-line reference circuit used across the test suite, in one-based
/// notation: CNOT(1;2), CNOT(3;1), NOT(2), NOT(4), 2-CNOT(1,4;2), NOT(3).
/// Its complexity is 6 and its depth is 3.
pub(crate) fn reference_circuit() -> Circuit {
    Circuit::new(
        4,
        4,
        vec![
            Gate::cnot(0, 1),
            Gate::cnot(2, 0),
            Gate::not(1),
            Gate::not(3),
            Gate::ccnot(0, 3, 1),
            Gate::not(2),
        ],
        vec![0, 1, 2, 3],
    )
}
