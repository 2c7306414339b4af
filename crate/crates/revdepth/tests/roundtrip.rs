//! Round-trip and structural properties of the text formats.

use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use revdepth::format::{
    export_real, parse_circuit, parse_tt, write_circuit, write_tt, format_bits,
};
use revdepth::gen::{random_circuit, random_truth_table};
use revdepth_core::{gate_alphabet_size, unrank_gate, Circuit, Gate};

#[test]
fn seeded_circuit_corpus_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc1c);
    for trial in 0..100 {
        let w = 1 + trial % 10;
        let c = random_circuit(&mut rng, w, trial % 40);
        let text = write_circuit(&c);
        assert_eq!(parse_circuit(&text).expect(&text), c, "trial {trial}");
    }
}

#[test]
fn seeded_table_corpus_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ab1e);
    for trial in 0..100 {
        let n = 1 + trial % 8;
        let f = random_truth_table(&mut rng, n);
        assert_eq!(parse_tt(&write_tt(&f)).unwrap(), f, "trial {trial}");
    }
}

#[test]
fn writer_never_reorders_gates() {
    let gates = vec![Gate::not(0), Gate::ccnot(2, 1, 0), Gate::cnot(0, 1), Gate::not(0)];
    let c = Circuit::new(3, 3, gates.clone(), vec![0, 1, 2]);
    let back = parse_circuit(&write_circuit(&c)).unwrap();
    assert_eq!(back.gates(), &gates[..]);
}

#[test]
fn format_bits_is_most_significant_first() {
    assert_eq!(format_bits(0b100, 3), "100");
    assert_eq!(format_bits(1, 4), "0001");
    assert_eq!(format_bits(0, 1), "0");
}

proptest! {
    #[test]
    fn any_circuit_survives_write_then_parse(
        w in 1usize..10,
        ranks in prop::collection::vec(0u64..100_000, 0..40),
        ancilla in 0usize..3,
        seed: u64,
    ) {
        let width = w + ancilla;
        let gates: Vec<Gate> =
            ranks.iter().map(|r| unrank_gate(width, r % gate_alphabet_size(width)).unwrap()).collect();
        // Scatter the outputs: any distinct line set is representable.
        let mut outputs: Vec<usize> = (0..width).collect();
        if width > 1 {
            let swap = (seed as usize) % (width - 1);
            outputs.swap(swap, swap + 1);
        }
        outputs.truncate(w);
        let c = Circuit::new(width, w, gates, outputs);
        prop_assert_eq!(parse_circuit(&write_circuit(&c)).unwrap(), c);
    }

    #[test]
    fn any_table_survives_write_then_parse(n in 1usize..9, seed: u64) {
        let f = random_truth_table(&mut ChaCha8Rng::seed_from_u64(seed), n);
        prop_assert_eq!(parse_tt(&write_tt(&f)).unwrap(), f);
    }

    #[test]
    fn real_export_is_always_gates_plus_six_lines(
        w in 1usize..8,
        ranks in prop::collection::vec(0u64..100_000, 0..30),
    ) {
        let gates: Vec<Gate> =
            ranks.iter().map(|r| unrank_gate(w, r % gate_alphabet_size(w)).unwrap()).collect();
        let c = Circuit::new(w, w, gates, (0..w).collect());
        let text = export_real(&c);
        prop_assert_eq!(text.lines().count(), c.len() + 6);
        prop_assert_eq!(text.lines().filter(|l| l.starts_with('t')).count(), c.len());
    }
}
