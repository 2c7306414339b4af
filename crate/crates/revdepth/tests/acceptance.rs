//! Acceptance suite: one test per release criterion.
//!
//! Each test prints one `criterion N: PASS` line with its elapsed time (run
//! with `--nocapture` to see them); a failing criterion fails its test. Every
//! check compares against an oracle computed independently in this file or
//! against values frozen from sources outside the implementation. Runtime
//! budgets are always reported; they are enforced only in release builds,
//! where they are meaningful.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use revdepth::format::{export_real, parse_circuit, parse_tt, write_circuit, write_tt};
use revdepth::gen::{random_circuit, random_truth_table, seeded_circuit};
use revdepth_core::gadget::{copy_tree, minterm_family, xor_fold};
use revdepth_core::schedule::LineAllocator;
use revdepth_core::sim::{check_realizes, extract_permutation, parity, simulate, Parity};
use revdepth_core::synth::{choose_params, synthesize, CostReport, Mode, PhiSpec, SynthParams};
use revdepth_core::{
    circuit_count_upto, gate_alphabet_size, greedy_layering, shannon_lower_bounds, Circuit, Gate,
    TruthTable,
};

const FIG1: &str = "\
.width 4
.inputs 4
.outputs 1 2 3 4
C 1 2
C 3 1
N 2
N 4
T 1 4 2
N 3
.end
";

fn finish(criterion: usize, what: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("criterion {criterion}: PASS — {what} ({elapsed:?}, budget {budget:?})");
    #[cfg(not(debug_assertions))]
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its runtime budget: {elapsed:?} > {budget:?}"
    );
    #[cfg(debug_assertions)]
    let _ = budget;
}

fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

#[test]
fn criterion_01_reference_circuit_reproduction() {
    let started = Instant::now();
    let c = parse_circuit(FIG1).unwrap();
    assert_eq!(c.len(), 6, "complexity of the reference netlist");
    assert_eq!(greedy_layering(&c).depth(), 3, "depth of the reference netlist");
    finish(1, "reference netlist measures L=6 D=3", started, Duration::from_millis(1));
}

#[test]
fn criterion_02_gate_census_formula() {
    let started = Instant::now();
    for w in 2..=6usize {
        // Independent brute-force census: try every control/target shape.
        let mut count = 0u64;
        for t in 0..w {
            count += 1;
            for c in 0..w {
                if c != t {
                    count += 1;
                }
            }
            for c1 in 0..w {
                for c2 in c1 + 1..w {
                    if c1 != t && c2 != t {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(gate_alphabet_size(w), count, "alphabet size at width {w}");
        let listed = revdepth_core::enumerate_gates(w);
        assert_eq!(listed.len() as u64, count, "enumeration length at width {w}");
        let distinct: std::collections::HashSet<Gate> = listed.into_iter().collect();
        assert_eq!(distinct.len() as u64, count, "enumeration distinctness at width {w}");
    }
    finish(2, "alphabet formula matches brute enumeration for w=2..6", started, Duration::from_secs(1));
}

#[test]
fn criterion_03_census_counting_inequality() {
    let started = Instant::now();
    for w in 2..=5usize {
        let alphabet = BigUint::from(gate_alphabet_size(w));
        for s in 0..=6usize {
            // Independent census: sum the geometric series term by term.
            let mut expected = BigUint::from(0u32);
            for i in 0..=s {
                expected += alphabet.pow(i as u32);
            }
            assert_eq!(circuit_count_upto(w, s), expected, "census at w={w} s={s}");
            // census <= (w^3/2)^s * (1 + 1/(w-1)), cleared of denominators:
            // census * 2^s * (w-1) <= w^(3s) * w.
            let lhs = expected * (BigUint::from(1u32) << s) * BigUint::from(w - 1);
            let rhs = BigUint::from(w).pow(3 * s as u32 + 1);
            assert!(lhs <= rhs, "counting inequality at w={w} s={s}");
            assert!(revdepth_core::census_bound_holds(w, s), "library check at w={w} s={s}");
        }
    }
    finish(3, "circuit census and counting inequality exact for w=2..5, s=0..6", started, Duration::from_secs(1));
}

/// The synthesis test corpus for `n` inputs: the four named maps plus 25
/// seeded random tables.
fn corpus(n: usize) -> Vec<TruthTable> {
    let mut tables = vec![
        TruthTable::identity(n),
        TruthTable::complement(n),
        TruthTable::zero(n),
        TruthTable::bit_reversal(n),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97 + n as u64);
    for _ in 0..25 {
        tables.push(random_truth_table(&mut rng, n));
    }
    tables
}

fn synth_verified(f: &TruthTable, params: &SynthParams) -> (Circuit, CostReport) {
    let (c, report) = synthesize(f, params).expect("synthesis succeeds on corpus tables");
    assert!(c.validate().is_empty(), "structural invariants at n={}", f.n());
    let outcome = check_realizes(&c, f).expect("verification runs");
    assert!(
        outcome.is_pass(),
        "n={} mode={:?} full_groups={}: {:?}",
        f.n(),
        params.mode,
        params.full_groups,
        outcome
    );
    (c, report)
}

#[test]
fn criterion_04_synthesis_corpus_realizes_every_table() {
    let started = Instant::now();
    let mut runs = 0usize;
    for n in 3..=8usize {
        for f in &corpus(n) {
            for mode in [Mode::Depth3n, Mode::Depth2n] {
                let params = choose_params(n, mode, PhiSpec::Log2).unwrap();
                synth_verified(f, &params);
                runs += 1;
            }
        }
    }
    assert_eq!(runs, 6 * 29 * 2);
    finish(
        4,
        "348 corpus syntheses (n=3..8, both modes) all verify on every input",
        started,
        Duration::from_secs(180),
    );
}

/// `max(D1+D2+D3, D4+D5) + D6` from a run's own per-stage layer counts.
fn stage_depth_budget(report: &CostReport) -> usize {
    let d: Vec<usize> = report.stages.iter().map(|s| s.layers).collect();
    (d[0] + d[1] + d[2]).max(d[3] + d[4]) + d[5]
}

#[test]
fn criterion_05_depth_stays_within_stage_and_envelope_budgets() {
    let started = Instant::now();
    // Stage-sum budget on a cross-section of small and large syntheses.
    for n in 4..=7usize {
        for f in [TruthTable::identity(n), TruthTable::bit_reversal(n)] {
            for mode in [Mode::Depth3n, Mode::Depth2n] {
                let params = choose_params(n, mode, PhiSpec::Log2).unwrap();
                let (c, report) = synth_verified(&f, &params);
                assert!(
                    c.depth() <= stage_depth_budget(&report),
                    "stage budget at n={n} mode={mode:?}: depth {} > {}",
                    c.depth(),
                    stage_depth_budget(&report)
                );
            }
        }
    }
    // Finite-size depth envelope for the small-prefix mode.
    let mut rng = ChaCha8Rng::seed_from_u64(0xdee9);
    for n in 8..=12usize {
        let params = choose_params(n, Mode::Depth3n, PhiSpec::Log2).unwrap();
        let envelope = 2 * n + params.s + 2 * ceil_log2(n) + 12;
        for trial in 0..2 {
            let f = random_truth_table(&mut rng, n);
            for full in [false, true] {
                let (c, report) = synth_verified(&f, &params.clone().with_full_groups(full));
                let depth = c.depth();
                assert!(depth <= stage_depth_budget(&report), "stage budget at n={n}");
                assert!(
                    depth <= envelope,
                    "depth envelope at n={n} trial={trial} full={full}: {depth} > {envelope}"
                );
            }
        }
    }
    finish(
        5,
        "greedy depth within per-stage budgets and the 2n+s+2log2(n)+12 envelope",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_06_resources_track_the_predicted_trend() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e5d);
    for n in 8..=12usize {
        let params = choose_params(n, Mode::Depth3n, PhiSpec::Log2).unwrap();
        let s = params.s as f64;
        let gates_scale = n as f64 * (2f64).powi(n as i32 + 1) / s;
        let ancilla_scale = n as f64 * (2f64).powi(n as i32) / s;
        for _ in 0..2 {
            let f = random_truth_table(&mut rng, n);
            let (full_c, _) = synth_verified(&f, &params.clone().with_full_groups(true));
            let gate_ratio = full_c.len() as f64 / gates_scale;
            let ancilla_ratio = full_c.ancilla() as f64 / ancilla_scale;
            assert!(gate_ratio <= 1.5, "gate ratio {gate_ratio:.3} at n={n}");
            assert!(ancilla_ratio <= 1.5, "ancilla ratio {ancilla_ratio:.3} at n={n}");
            let (lazy_c, _) = synth_verified(&f, &params);
            assert!(
                lazy_c.len() <= full_c.len(),
                "lazy gates exceed full at n={n}: {} > {}",
                lazy_c.len(),
                full_c.len()
            );
            assert!(
                lazy_c.ancilla() <= full_c.ancilla(),
                "lazy ancilla exceed full at n={n}: {} > {}",
                lazy_c.ancilla(),
                full_c.ancilla()
            );
        }
    }
    finish(
        6,
        "complexity and ancilla within 1.5x of the predicted trend; lazy never exceeds full",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_07_gadget_budgets() {
    let started = Instant::now();
    for k in 2..=5usize {
        let vars: Vec<usize> = (0..k).collect();
        let mut alloc = LineAllocator::starting_at(k);
        let fam = minterm_family(&vars, &mut alloc).unwrap();
        assert!(fam.layers.depth() <= 2 * k, "minterm depth at k={k}");
        assert!(fam.layers.gate_count() <= 4 << k, "minterm gates at k={k}");
        assert!(fam.ancilla_used <= 4 << k, "minterm ancilla at k={k}");
        let c = Circuit::new(alloc.width(), k, fam.layers.flatten(), vars);
        for v in 0..1u64 << k {
            let x: Vec<bool> = (0..k).map(|i| v >> (k - 1 - i) & 1 == 1).collect();
            let state = simulate(&c, &x).unwrap();
            for (sigma, &line) in fam.outputs.iter().enumerate() {
                assert_eq!(state[line], sigma as u64 == v, "minterm value k={k} sigma={sigma}");
            }
        }
    }
    for k in 1..=64usize {
        let mut alloc = LineAllocator::starting_at(1);
        let tree = copy_tree(0, k, &mut alloc);
        assert_eq!(tree.layers.gate_count(), k, "copy-tree gates at k={k}");
        assert!(tree.layers.depth() <= ceil_log2(k) + 1, "copy-tree depth at k={k}");
    }
    for m in 1..=64usize {
        let lines: Vec<usize> = (0..m).collect();
        let fold = xor_fold(&lines).unwrap();
        assert_eq!(fold.layers.gate_count(), m - 1, "fold gates at m={m}");
        assert_eq!(fold.layers.depth(), ceil_log2(m), "fold depth at m={m}");
    }
    finish(
        7,
        "minterm family exact and in budget for k=2..5; copy-tree and fold budgets for 1..64",
        started,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_08_wide_circuits_are_even_permutations() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a51);
    for trial in 0..200 {
        let w = 4 + trial % 3;
        let gates = 1 + (trial * 7) % 24;
        let c = random_circuit(&mut rng, w, gates);
        let p = extract_permutation(&c).unwrap();
        assert_eq!(parity(&p), Parity::Even, "trial {trial} width {w}");
    }
    let ccnot = Circuit::new(3, 3, vec![Gate::ccnot(0, 1, 2)], vec![0, 1, 2]);
    assert_eq!(parity(&extract_permutation(&ccnot).unwrap()), Parity::Odd);
    finish(
        8,
        "200 random circuits on 4..6 lines are even; a lone 2-CNOT on 3 lines is odd",
        started,
        Duration::from_secs(10),
    );
}

/// Minimum contiguous-block depth by dynamic programming — the independent
/// oracle for the greedy sweep.
fn dp_min_depth(c: &Circuit) -> usize {
    let gates = c.gates();
    let l = gates.len();
    let mut best = vec![usize::MAX; l + 1];
    best[0] = 0;
    for j in 1..=l {
        'starts: for i in (0..j).rev() {
            // gates i..j must be pairwise disjoint; grow the window leftward.
            for e in i + 1..j {
                if gates[i].support().intersects(&gates[e].support()) {
                    break 'starts;
                }
            }
            if best[i] != usize::MAX && best[i] + 1 < best[j] {
                best[j] = best[i] + 1;
            }
        }
    }
    best[l]
}

#[test]
fn criterion_09_greedy_depth_is_optimal_and_sandwiched() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x09a1);
    for trial in 0..500 {
        let w = 2 + trial % 5;
        let gates = 1 + (trial * 3) % 8;
        let c = random_circuit(&mut rng, w, gates);
        let d = greedy_layering(&c).depth();
        let l = c.len();
        assert!(l.div_ceil(w) <= d && d <= l, "sandwich at trial {trial}");
        assert_eq!(d, dp_min_depth(&c), "optimality at trial {trial}: {c:?}");
    }
    finish(
        9,
        "greedy depth equals the exhaustive optimum on 500 random circuits",
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_10_lower_bound_spot_values_and_monotonicity() {
    let started = Instant::now();
    let r = shannon_lower_bounds(4, 0);
    assert!((r.l_lower.value - 4.0).abs() < 1e-9, "L lower bound at (4,0): {}", r.l_lower.value);
    assert!((r.d_lower.value - 1.0).abs() < 1e-9, "D lower bound at (4,0): {}", r.d_lower.value);
    for n in 4..=12usize {
        let mut qs = vec![0usize, 1];
        let mut q = 2usize;
        while q <= 1 << n {
            qs.push(q);
            q *= 2;
        }
        let mut last = f64::INFINITY;
        for q in qs {
            let d = shannon_lower_bounds(n, q).d_lower.value;
            assert!(
                d <= last + 1e-12,
                "D lower bound rose with more ancilla at n={n} q={q}: {d} > {last}"
            );
            last = d;
        }
    }
    finish(
        10,
        "bounds hit the spot values and weaken monotonically with ancilla",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_11_format_round_trips() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0f0f);
    for trial in 0..100 {
        let w = 1 + trial % 12;
        let c = random_circuit(&mut rng, w, (trial * 5) % 50);
        assert_eq!(parse_circuit(&write_circuit(&c)).unwrap(), c, "circuit trial {trial}");
        assert_eq!(export_real(&c).lines().count(), c.len() + 6, ".real lines at trial {trial}");
    }
    for trial in 0..100 {
        let n = 1 + trial % 9;
        let f = random_truth_table(&mut rng, n);
        assert_eq!(parse_tt(&write_tt(&f)).unwrap(), f, "table trial {trial}");
    }
    let c = seeded_circuit(3, 5, 10);
    assert_eq!(parse_circuit(&write_circuit(&c)).unwrap(), c);
    finish(
        11,
        "write-then-parse identity on 100 circuits and 100 tables; .real is gates+6 lines",
        started,
        Duration::from_secs(5),
    );
}
