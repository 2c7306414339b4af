//! `revdepth` — command-line front end for the reversible-circuit toolkit.
//!
//! Exit codes: 0 success or verification pass, 1 verification failure,
//! 2 usage/file/parse error, 3 resource-cap error. Results go to standard
//! output, diagnostics to standard error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use revdepth::format::{
    export_real, format_bits, parse_circuit, parse_tt, write_circuit, FormatError,
    FormatErrorKind,
};
use revdepth::gen::seeded_circuit;
use revdepth::stats::{BoundsStats, CircuitStats};
use revdepth_core::gadget::{minterm_family, GadgetError};
use revdepth_core::schedule::LineAllocator;
use revdepth_core::sim::{check_realizes, extract_permutation, parity, simulate, Parity, SimError};
use revdepth_core::synth::{choose_params, synthesize, Mode, PhiSpec, SynthError};
use revdepth_core::{greedy_layering, shannon_lower_bounds, Circuit, Realization, TruthTable};

#[derive(Parser)]
#[command(name = "revdepth", version, about = "Reversible-circuit toolkit: synthesis from truth tables, depth measurement, simulation and counting bounds over the NOT/CNOT/2-CNOT basis")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Depth near 3n with about 2^n ancilla.
    D3n,
    /// Depth near 2n with about log2(n)·2^n ancilla.
    D2n,
}

fn parse_phi(s: &str) -> Result<PhiSpec, String> {
    if s == "log2" {
        return Ok(PhiSpec::Log2);
    }
    match s.strip_prefix("const=") {
        Some(c) => {
            let v: f64 = c.parse().map_err(|_| format!("bad constant `{c}`"))?;
            if v.is_finite() && v > 0.0 {
                Ok(PhiSpec::Const(v))
            } else {
                Err("the constant must be positive and finite".into())
            }
        }
        None => Err(format!("expected `log2` or `const=<c>`, got `{s}`")),
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Synthesize a circuit for a truth table, self-verify and write it.
    Synth {
        /// Truth table in .rtt format.
        #[arg(long)]
        tt: PathBuf,
        /// Parameter-selection target.
        #[arg(long, value_enum, default_value = "d3n")]
        mode: ModeArg,
        /// Trade-off function: `log2` or `const=<c>`.
        #[arg(long, value_parser = parse_phi, default_value = "log2")]
        phi: PhiSpec,
        /// Explicit prefix width; overrides --mode.
        #[arg(long)]
        k: Option<usize>,
        /// Materialize every subset-XOR of every group, not only demanded ones.
        #[arg(long)]
        full_groups: bool,
        /// Output netlist (.rcirc).
        #[arg(short, long)]
        out: PathBuf,
        /// Also write a JSON stats file.
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Check that a circuit realizes a truth table; print pass or the first
    /// counterexample.
    Verify {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        tt: PathBuf,
    },
    /// Run a circuit on one input and print the final state.
    Sim {
        #[arg(long)]
        circuit: PathBuf,
        /// Input bits, first variable first, e.g. `1011`.
        #[arg(long)]
        input: String,
    },
    /// Print complexity and depth, optionally with the layer structure.
    Depth {
        #[arg(long)]
        circuit: PathBuf,
        /// Also print each layer's gates.
        #[arg(long)]
        layers: bool,
    },
    /// Evaluate counting lower bounds and construction upper bounds.
    Bounds {
        /// Number of inputs.
        #[arg(long)]
        n: usize,
        /// Number of ancilla lines.
        #[arg(long)]
        q: usize,
        /// Emit JSON instead of the table.
        #[arg(long)]
        json: bool,
    },
    /// Emit the circuit computing all 2^n minterms of n variables.
    Minterms {
        /// Number of variables.
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Write a seeded uniform random circuit; equal seeds give identical files.
    Random {
        /// Number of lines.
        #[arg(long)]
        lines: usize,
        /// Number of gates.
        #[arg(long)]
        gates: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Print the cycle count and parity of the permutation a circuit induces.
    Perm {
        #[arg(long)]
        circuit: PathBuf,
    },
    /// Export a circuit as a RevLib-style .real netlist.
    ExportReal {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
}

/// A failed run: what to print on the diagnostic stream and the exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: String) -> Self {
        Failure { code: 2, message }
    }

    fn verification(message: String) -> Self {
        Failure { code: 1, message }
    }

    fn cap(message: String) -> Self {
        Failure { code: 3, message }
    }

    fn from_sim(e: SimError) -> Self {
        match e {
            SimError::CapExceeded { .. } => Failure::cap(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }

    fn from_synth(e: SynthError) -> Self {
        match e {
            SynthError::TooManyInputs { .. } => Failure::cap(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn in_file(path: &Path, e: FormatError) -> Failure {
    let message = format!("{}: {e}", path.display());
    match e.kind {
        FormatErrorKind::Syntax => Failure::usage(message),
        FormatErrorKind::Cap => Failure::cap(message),
    }
}

fn load_circuit(path: &Path) -> Result<Circuit, Failure> {
    parse_circuit(&read_text(path)?).map_err(|e| in_file(path, e))
}

fn load_tt(path: &Path) -> Result<TruthTable, Failure> {
    parse_tt(&read_text(path)?).map_err(|e| in_file(path, e))
}

fn state_string(state: &[bool]) -> String {
    state.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn bound_line(b: revdepth_core::Bound) -> String {
    if b.clamped {
        format!("{:>14.2} (clamped to 0)", b.value)
    } else {
        format!("{:>14.2}", b.value)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Synth { tt, mode, phi, k, full_groups, out, stats } => {
            let f = load_tt(&tt)?;
            let mode = match k {
                Some(k) => Mode::Manual { k },
                None => match mode {
                    ModeArg::D3n => Mode::Depth3n,
                    ModeArg::D2n => Mode::Depth2n,
                },
            };
            let params = choose_params(f.n(), mode, phi)
                .map_err(Failure::from_synth)?
                .with_full_groups(full_groups);
            if params.clamped {
                eprintln!("note: prefix width adjusted to k={} to keep groups viable", params.k);
            }
            let (c, report) = synthesize(&f, &params).map_err(Failure::from_synth)?;
            match check_realizes(&c, &f).map_err(Failure::from_sim)? {
                Realization::Realizes => {}
                Realization::Counterexample { input, expected, actual } => {
                    return Err(Failure::verification(format!(
                        "self-verification failed on input {}: expected {}, got {}",
                        format_bits(input, f.n()),
                        format_bits(expected, f.n()),
                        format_bits(actual, f.n()),
                    )));
                }
            }
            write_text(&out, &write_circuit(&c))?;
            if let Some(stats_path) = stats {
                let json = CircuitStats::synthesized(&c, &params, &report).to_json();
                write_text(&stats_path, &format!("{json}\n"))?;
            }
            println!(
                "n={} k={} s={} p={} mode={} width={} gates={} depth={} verified",
                params.n,
                params.k,
                params.s,
                params.p,
                params.mode.name(),
                c.width(),
                c.len(),
                report.depth,
            );
            Ok(())
        }
        Cmd::Verify { circuit, tt } => {
            let c = load_circuit(&circuit)?;
            let f = load_tt(&tt)?;
            match check_realizes(&c, &f).map_err(Failure::from_sim)? {
                Realization::Realizes => {
                    println!("pass");
                    Ok(())
                }
                Realization::Counterexample { input, expected, actual } => {
                    println!(
                        "counterexample input={} expected={} actual={}",
                        format_bits(input, f.n()),
                        format_bits(expected, f.n()),
                        format_bits(actual, f.n()),
                    );
                    Err(Failure::verification("circuit does not realize the table".into()))
                }
            }
        }
        Cmd::Sim { circuit, input } => {
            let c = load_circuit(&circuit)?;
            if input.len() != c.n_primary() {
                return Err(Failure::usage(format!(
                    "input has {} bits, the circuit takes {}",
                    input.len(),
                    c.n_primary(),
                )));
            }
            let mut x = Vec::with_capacity(input.len());
            for ch in input.chars() {
                match ch {
                    '0' => x.push(false),
                    '1' => x.push(true),
                    other => {
                        return Err(Failure::usage(format!("invalid input bit `{other}`")));
                    }
                }
            }
            let state = simulate(&c, &x).map_err(Failure::from_sim)?;
            let outputs: Vec<bool> = c.output_map().iter().map(|&l| state[l]).collect();
            println!("state:   {}", state_string(&state));
            println!("outputs: {}", state_string(&outputs));
            Ok(())
        }
        Cmd::Depth { circuit, layers } => {
            let c = load_circuit(&circuit)?;
            let partition = greedy_layering(&c);
            println!("L={} D={}", c.len(), partition.depth());
            if layers {
                for (i, block) in partition.blocks().iter().enumerate() {
                    let text: Vec<String> =
                        block.clone().map(|g| c.gates()[g].to_string()).collect();
                    println!("layer {}: {}", i + 1, text.join(", "));
                }
            }
            Ok(())
        }
        Cmd::Bounds { n, q, json } => {
            let r = shannon_lower_bounds(n, q);
            if json {
                println!("{}", BoundsStats::from_report(&r).to_json());
            } else {
                println!("n={} q={} lines={}", r.n, r.q, r.n + r.q);
                println!("alphabet size       {:>14}", r.alphabet);
                println!("placements (log2)   {:>14.2}", r.placements_log2);
                println!("L lower bound       {}", bound_line(r.l_lower));
                println!("D lower bound       {}", bound_line(r.d_lower));
                println!("D lower bound (q=0) {}", bound_line(r.d0_lower));
                println!(
                    "construction 3n     depth {:.1}, ancilla {:.1}",
                    r.upper_d3n, r.upper_q3n
                );
                println!(
                    "construction 2n     depth {:.1}, ancilla {:.1}",
                    r.upper_d2n, r.upper_q2n
                );
                if r.out_of_domain {
                    println!("note: fewer than 3 lines is outside the bounds' domain");
                }
            }
            Ok(())
        }
        Cmd::Minterms { n, out } => {
            if n == 0 {
                return Err(Failure::usage("the family needs at least one variable".into()));
            }
            let vars: Vec<usize> = (0..n).collect();
            let mut alloc = LineAllocator::starting_at(n);
            let fam = minterm_family(&vars, &mut alloc).map_err(|e| match e {
                GadgetError::TooManyVars { .. } => Failure::cap(e.to_string()),
                _ => Failure::usage(e.to_string()),
            })?;
            let c = Circuit::new(alloc.width(), n, fam.layers.flatten(), vars);
            write_text(&out, &write_circuit(&c))?;
            for (sigma, &line) in fam.outputs.iter().enumerate() {
                println!("minterm {} -> line {}", format_bits(sigma as u64, n), line + 1);
            }
            Ok(())
        }
        Cmd::Random { lines, gates, seed, out } => {
            if lines == 0 {
                return Err(Failure::usage("a circuit needs at least one line".into()));
            }
            let c = seeded_circuit(seed, lines, gates);
            write_text(&out, &write_circuit(&c))
        }
        Cmd::Perm { circuit } => {
            let c = load_circuit(&circuit)?;
            let p = extract_permutation(&c).map_err(Failure::from_sim)?;
            let par = match parity(&p) {
                Parity::Even => "even",
                Parity::Odd => "odd",
            };
            println!("cycles={} parity={}", p.cycle_count(), par);
            Ok(())
        }
        Cmd::ExportReal { circuit, out } => {
            let c = load_circuit(&circuit)?;
            write_text(&out, &export_real(&c))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
