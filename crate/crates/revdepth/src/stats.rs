//! Machine-readable run summaries with a stable JSON schema.
//!
//! Circuit stats always carry the measured size figures; the `params` and
//! `predicted` blocks appear only for synthesized circuits. Integral numbers
//! are emitted unquoted and without a fractional part.

use serde::{Serialize, Serializer};

use revdepth_core::synth::CostReport;
use revdepth_core::{BoundsReport, Circuit, SynthParams};

/// Serializes an `f64` as an integer whenever it is one, so predicted depths
/// print as `21` rather than `21.0`.
fn compact_number<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() && x.fract() == 0.0 && x.abs() < 9e15 {
        s.serialize_i64(*x as i64)
    } else {
        s.serialize_f64(*x)
    }
}

/// Gate counts by kind, keyed by the format mnemonics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KindCounts {
    #[serde(rename = "N")]
    pub not: usize,
    #[serde(rename = "C")]
    pub cnot: usize,
    #[serde(rename = "T")]
    pub ccnot: usize,
}

/// The parameter block of a synthesized circuit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamStats {
    pub k: usize,
    pub s: usize,
    pub p: usize,
    pub mode: String,
}

/// The closed-form cost predictions of a synthesized circuit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PredictedStats {
    #[serde(serialize_with = "compact_number")]
    pub depth: f64,
    #[serde(serialize_with = "compact_number")]
    pub gates: f64,
    #[serde(serialize_with = "compact_number")]
    pub ancilla: f64,
}

/// Size summary of one circuit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CircuitStats {
    pub n: usize,
    pub q: usize,
    pub width: usize,
    pub gates: usize,
    pub depth: usize,
    pub by_kind: KindCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<PredictedStats>,
}

impl CircuitStats {
    /// Stats of a bare circuit, e.g. one parsed from a file.
    #[must_use]
    pub fn measure(c: &Circuit) -> Self {
        let [not, cnot, ccnot] = c.counts_by_kind();
        CircuitStats {
            n: c.n_primary(),
            q: c.ancilla(),
            width: c.width(),
            gates: c.len(),
            depth: c.depth(),
            by_kind: KindCounts { not, cnot, ccnot },
            params: None,
            predicted: None,
        }
    }

    /// Stats of a synthesized circuit, with the parameter and prediction
    /// blocks filled from its cost report.
    #[must_use]
    pub fn synthesized(c: &Circuit, params: &SynthParams, report: &CostReport) -> Self {
        let mut stats = CircuitStats::measure(c);
        stats.params = Some(ParamStats {
            k: params.k,
            s: params.s,
            p: params.p,
            mode: params.mode.name().to_string(),
        });
        stats.predicted = Some(PredictedStats {
            depth: report.predicted.depth,
            gates: report.predicted.gates,
            ancilla: report.predicted.ancilla,
        });
        stats
    }

    /// The stats as one JSON object.
    #[must_use]
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("stats serialization is infallible")
    }
}

/// One clamped-aware bound value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundStats {
    pub value: f64,
    pub clamped: bool,
}

/// JSON form of a lower/upper-bound evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsStats {
    pub n: usize,
    pub q: usize,
    /// Exact alphabet size as a decimal string.
    pub alphabet: String,
    pub placements_log2: f64,
    pub l_lower: BoundStats,
    pub d_lower: BoundStats,
    pub d0_lower: BoundStats,
    pub upper_depth_3n: f64,
    pub upper_ancilla_3n: f64,
    pub upper_depth_2n: f64,
    pub upper_ancilla_2n: f64,
    pub out_of_domain: bool,
}

impl BoundsStats {
    #[must_use]
    pub fn from_report(r: &BoundsReport) -> Self {
        BoundsStats {
            n: r.n,
            q: r.q,
            alphabet: r.alphabet.to_string(),
            placements_log2: r.placements_log2,
            l_lower: BoundStats { value: r.l_lower.value, clamped: r.l_lower.clamped },
            d_lower: BoundStats { value: r.d_lower.value, clamped: r.d_lower.clamped },
            d0_lower: BoundStats { value: r.d0_lower.value, clamped: r.d0_lower.clamped },
            upper_depth_3n: r.upper_d3n,
            upper_ancilla_3n: r.upper_q3n,
            upper_depth_2n: r.upper_d2n,
            upper_ancilla_2n: r.upper_q2n,
            out_of_domain: r.out_of_domain,
        }
    }

    /// The report as one JSON object.
    #[must_use]
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("stats serialization is infallible")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_circuit;
    use revdepth_core::shannon_lower_bounds;
    use revdepth_core::synth::{choose_params, predicted_costs, synthesize, Mode, PhiSpec};
    use revdepth_core::TruthTable;

    #[test]
    fn reference_circuit_stats_have_the_pinned_field_names() {
        let c = parse_circuit(
            ".width 4 .inputs 4 .outputs 1 2 3 4\nC 1 2\nC 3 1\nN 2\nN 4\nT 1 4 2\nN 3\n.end",
        )
        .unwrap();
        let json = CircuitStats::measure(&c).to_json();
        assert_eq!(
            json,
            r#"{"n":4,"q":0,"width":4,"gates":6,"depth":3,"by_kind":{"N":3,"C":2,"T":1}}"#
        );
    }

    #[test]
    fn empty_circuit_stats_are_all_zero() {
        let stats = CircuitStats::measure(&Circuit::identity(2));
        assert_eq!(stats.gates, 0);
        assert_eq!(stats.depth, 0);
        assert!(stats.to_json().contains(r#""gates":0,"depth":0"#));
    }

    #[test]
    fn predicted_block_prints_integral_values_unadorned() {
        let params = choose_params(8, Mode::Manual { k: 3 }, PhiSpec::Log2).unwrap();
        let p = predicted_costs(&params);
        let block =
            PredictedStats { depth: p.depth, gates: p.gates, ancilla: p.ancilla };
        let json = serde_json::to_string(&block).unwrap();
        assert_eq!(json, r#"{"depth":21,"gates":819.2,"ancilla":409.6}"#);
    }

    #[test]
    fn synthesized_stats_carry_params_and_predictions() {
        let f = TruthTable::identity(4);
        let params = choose_params(4, Mode::Depth3n, PhiSpec::Log2).unwrap();
        let (c, report) = synthesize(&f, &params).unwrap();
        let json = CircuitStats::synthesized(&c, &params, &report).to_json();
        assert!(json.contains(r#""params":{"k":"#), "{json}");
        assert!(json.contains(r#""mode":"d3n""#), "{json}");
        assert!(json.contains(r#""predicted":{"depth":"#), "{json}");
    }

    #[test]
    fn bounds_stats_round_numbers_survive_exactly() {
        let json = BoundsStats::from_report(&shannon_lower_bounds(4, 0)).to_json();
        assert!(json.contains(r#""alphabet":"28""#), "{json}");
        assert!(json.contains(r#""l_lower":{"value":4.0,"clamped":false}"#), "{json}");
    }
}
