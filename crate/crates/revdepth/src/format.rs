//! Text formats: `.rcirc` netlists, `.rtt` truth tables and RevLib-style
//! `.real` export.
//!
//! Both grammars are token streams — `#` starts a comment, whitespace
//! (including newlines) separates tokens — with one-based line indices in
//! files and zero-based indices in the library. Parse errors carry the line
//! and column of the offending token.

use std::fmt;
use std::fmt::Write as _;

use revdepth_core::{Circuit, Gate, TruthTable};

/// Largest truth-table arity the text format accepts; `2^n` rows must stay
/// readable and simulable.
pub const MAX_TT_VARS: usize = 20;

/// How a malformed file failed: a genuine syntax or validity error, or a
/// well-formed request beyond a resource cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormatErrorKind {
    Syntax,
    Cap,
}

/// A parse diagnostic with one-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub kind: FormatErrorKind,
}

impl FormatError {
    fn at(pos: (usize, usize), message: String) -> Self {
        FormatError { line: pos.0, column: pos.1, message, kind: FormatErrorKind::Syntax }
    }

    fn cap_at(pos: (usize, usize), message: String) -> Self {
        FormatError { line: pos.0, column: pos.1, message, kind: FormatErrorKind::Cap }
    }
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for FormatError {}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let bytes = body.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            out.push(Token { text: &body[start..i], line: ln + 1, col: start + 1 });
        }
    }
    out
}

struct Cursor<'a> {
    tokens: Vec<Token<'a>>,
    at: usize,
    end: (usize, usize),
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let tokens = tokenize(text);
        let end = tokens
            .last()
            .map_or((1, 1), |t| (t.line, t.col + t.text.len()));
        Cursor { tokens, at: 0, end }
    }

    fn peek(&self) -> Option<Token<'a>> {
        self.tokens.get(self.at).copied()
    }

    fn next(&mut self, what: &str) -> Result<Token<'a>, FormatError> {
        match self.tokens.get(self.at) {
            Some(&t) => {
                self.at += 1;
                Ok(t)
            }
            None => Err(FormatError::at(self.end, format!("expected {what}, found end of file"))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), FormatError> {
        let t = self.next(&format!("`{kw}`"))?;
        if t.text == kw {
            Ok(())
        } else {
            Err(FormatError::at((t.line, t.col), format!("expected `{kw}`, found `{}`", t.text)))
        }
    }

    fn number(&mut self, what: &str) -> Result<(usize, (usize, usize)), FormatError> {
        let t = self.next(what)?;
        match t.text.parse::<usize>() {
            Ok(v) => Ok((v, (t.line, t.col))),
            Err(_) => {
                Err(FormatError::at((t.line, t.col), format!("expected {what}, found `{}`", t.text)))
            }
        }
    }

    /// One-based line operand, returned zero-based.
    fn line_index(&mut self, width: usize) -> Result<usize, FormatError> {
        let (v, pos) = self.number("a line index")?;
        if v == 0 || v > width {
            return Err(FormatError::at(pos, format!("line {v} out of range for width {width}")));
        }
        Ok(v - 1)
    }

    fn finish(&self) -> Result<(), FormatError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => {
                Err(FormatError::at((t.line, t.col), format!("unexpected `{}` after `.end`", t.text)))
            }
        }
    }
}

/// Parses an `.rcirc` netlist: `.width`, `.inputs`, `.outputs`, one token
/// group per gate (`N t`, `C c t`, `T c1 c2 t`), then `.end`.
pub fn parse_circuit(text: &str) -> Result<Circuit, FormatError> {
    let mut cur = Cursor::new(text);
    cur.keyword(".width")?;
    let (width, _) = cur.number("the width")?;
    cur.keyword(".inputs")?;
    let (n, npos) = cur.number("the input count")?;
    if n > width {
        return Err(FormatError::at(npos, format!("{n} inputs exceed width {width}")));
    }
    cur.keyword(".outputs")?;
    let mut outputs = Vec::with_capacity(n);
    let mut seen = vec![false; width];
    for _ in 0..n {
        let t = cur.peek();
        let line = cur.line_index(width)?;
        if seen[line] {
            let t = t.expect("line_index consumed a token");
            return Err(FormatError::at((t.line, t.col), format!("duplicate output line {}", line + 1)));
        }
        seen[line] = true;
        outputs.push(line);
    }
    let mut gates = Vec::new();
    loop {
        let t = cur.next("a gate line or `.end`")?;
        match t.text {
            ".end" => break,
            "N" => {
                gates.push(Gate::not(cur.line_index(width)?));
            }
            "C" => {
                let c = cur.line_index(width)?;
                let tgt = cur.line_index(width)?;
                if c == tgt {
                    return Err(FormatError::at(
                        (t.line, t.col),
                        format!("control equals target on line {}", c + 1),
                    ));
                }
                gates.push(Gate::cnot(c, tgt));
            }
            "T" => {
                let c1 = cur.line_index(width)?;
                let c2 = cur.line_index(width)?;
                let tgt = cur.line_index(width)?;
                if c1 == c2 {
                    return Err(FormatError::at(
                        (t.line, t.col),
                        format!("duplicate control on line {}", c1 + 1),
                    ));
                }
                if tgt == c1 || tgt == c2 {
                    return Err(FormatError::at(
                        (t.line, t.col),
                        format!("control equals target on line {}", tgt + 1),
                    ));
                }
                gates.push(Gate::ccnot(c1, c2, tgt));
            }
            other => {
                return Err(FormatError::at(
                    (t.line, t.col),
                    format!("expected a gate line or `.end`, found `{other}`"),
                ));
            }
        }
    }
    cur.finish()?;
    let c = Circuit::new(width, n, gates, outputs);
    debug_assert!(c.validate().is_empty());
    Ok(c)
}

/// Writes a circuit in the `.rcirc` grammar; `parse_circuit` inverts this
/// exactly.
#[must_use]
pub fn write_circuit(c: &Circuit) -> String {
    let mut out = String::new();
    let _ = writeln!(out, ".width {}", c.width());
    let _ = writeln!(out, ".inputs {}", c.n_primary());
    out.push_str(".outputs");
    for &line in c.output_map() {
        let _ = write!(out, " {}", line + 1);
    }
    out.push('\n');
    for g in c.gates() {
        let _ = writeln!(out, "{g}");
    }
    out.push_str(".end\n");
    out
}

/// Parses an `.rtt` truth table: `.n <n>`, `2^n` rows of `n` bits with the
/// first variable as the most significant bit, then `.end`. Row `i` is the
/// image of input `i`.
pub fn parse_tt(text: &str) -> Result<TruthTable, FormatError> {
    let mut cur = Cursor::new(text);
    cur.keyword(".n")?;
    let (n, npos) = cur.number("the variable count")?;
    if n == 0 {
        return Err(FormatError::at(npos, "a table needs at least one variable".into()));
    }
    if n > MAX_TT_VARS {
        return Err(FormatError::cap_at(
            npos,
            format!("{n} variables exceed the {MAX_TT_VARS}-variable table cap"),
        ));
    }
    let rows = 1usize << n;
    let mut image = Vec::with_capacity(rows);
    for _ in 0..rows {
        let t = cur.next("a bit row")?;
        if t.text == ".end" {
            return Err(FormatError::at(
                (t.line, t.col),
                format!("expected {rows} rows, found {}", image.len()),
            ));
        }
        if t.text.len() != n {
            return Err(FormatError::at(
                (t.line, t.col),
                format!("row has {} bits, expected {n}", t.text.len()),
            ));
        }
        let mut v = 0u64;
        for (i, ch) in t.text.bytes().enumerate() {
            match ch {
                b'0' => v <<= 1,
                b'1' => v = v << 1 | 1,
                other => {
                    return Err(FormatError::at(
                        (t.line, t.col + i),
                        format!("invalid character `{}` in a bit row", other as char),
                    ));
                }
            }
        }
        image.push(v);
    }
    let t = cur.next("`.end`")?;
    if t.text != ".end" {
        return Err(FormatError::at(
            (t.line, t.col),
            format!("expected {rows} rows, found more (or a missing `.end`)"),
        ));
    }
    cur.finish()?;
    TruthTable::new(n, image)
        .map_err(|e| FormatError::at((1, 1), format!("inconsistent table: {e}")))
}

/// Writes a truth table in the `.rtt` grammar; `parse_tt` inverts this
/// exactly.
#[must_use]
pub fn write_tt(f: &TruthTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, ".n {}", f.n());
    for &y in f.image() {
        let _ = writeln!(out, "{}", format_bits(y, f.n()));
    }
    out.push_str(".end\n");
    out
}

/// Exports a circuit as a RevLib-style `.real` netlist: five header lines,
/// one `t1`/`t2`/`t3` line per gate with controls before the target, and a
/// closing `.end`. Primary lines are unconstrained inputs (`-`); ancilla are
/// constant `0`.
#[must_use]
pub fn export_real(c: &Circuit) -> String {
    let mut out = String::new();
    out.push_str(".version 2.0\n");
    let _ = writeln!(out, ".numvars {}", c.width());
    out.push_str(".variables");
    for line in 0..c.width() {
        let _ = write!(out, " x{}", line + 1);
    }
    out.push('\n');
    out.push_str(".constants ");
    for line in 0..c.width() {
        out.push(if line < c.n_primary() { '-' } else { '0' });
    }
    out.push('\n');
    out.push_str(".begin\n");
    for g in c.gates() {
        let _ = write!(out, "t{}", g.controls().len() + 1);
        for &ctl in g.controls() {
            let _ = write!(out, " x{}", ctl + 1);
        }
        let _ = writeln!(out, " x{}", g.target() + 1);
    }
    out.push_str(".end\n");
    out
}

/// `v` as `n` binary digits, first variable (most significant bit) first.
#[must_use]
pub fn format_bits(v: u64, n: usize) -> String {
    (0..n).map(|j| if v >> (n - 1 - j) & 1 == 1 { '1' } else { '0' }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn reference_netlist_parses_to_six_gates_of_depth_three() {
        let c = parse_circuit(FIG1).unwrap();
        assert_eq!(c.width(), 4);
        assert_eq!(c.len(), 6);
        assert_eq!(c.depth(), 3);
        assert_eq!(c.gates()[0], Gate::cnot(0, 1));
        assert_eq!(c.gates()[4], Gate::ccnot(0, 3, 1));
    }

    #[test]
    fn circuit_write_then_parse_is_identity() {
        let c = parse_circuit(FIG1).unwrap();
        assert_eq!(parse_circuit(&write_circuit(&c)).unwrap(), c);
        assert_eq!(write_circuit(&c), FIG1);
    }

    #[test]
    fn directives_may_share_a_line_and_comments_vanish() {
        let c = parse_circuit(".width 1 .inputs 1 .outputs 1 # identity\n.end").unwrap();
        assert_eq!(c, Circuit::identity(1));
    }

    #[test]
    fn duplicate_control_is_rejected_with_its_position() {
        let err = parse_circuit(".width 2\n.inputs 2\n.outputs 1 2\nT 1 1 2\n.end").unwrap_err();
        assert!(err.message.contains("duplicate control"), "{err}");
        assert_eq!((err.line, err.column), (4, 1));
    }

    #[test]
    fn control_equal_to_target_is_rejected() {
        let err = parse_circuit(".width 2\n.inputs 2\n.outputs 1 2\nC 2 2\n.end").unwrap_err();
        assert!(err.message.contains("control equals target"), "{err}");
    }

    #[test]
    fn out_of_range_lines_and_missing_end_are_rejected() {
        let err = parse_circuit(".width 2\n.inputs 2\n.outputs 1 2\nN 3\n.end").unwrap_err();
        assert!(err.message.contains("out of range"), "{err}");
        let err = parse_circuit(".width 2\n.inputs 2\n.outputs 1 2\nN 1\n").unwrap_err();
        assert!(err.message.contains("end of file"), "{err}");
    }

    #[test]
    fn inputs_beyond_width_and_duplicate_outputs_are_rejected() {
        let err = parse_circuit(".width 2\n.inputs 3\n.outputs 1 2 1\n.end").unwrap_err();
        assert!(err.message.contains("exceed width"), "{err}");
        let err = parse_circuit(".width 2\n.inputs 2\n.outputs 1 1\n.end").unwrap_err();
        assert!(err.message.contains("duplicate output"), "{err}");
    }

    #[test]
    fn single_bit_identity_table_parses() {
        let f = parse_tt(".n 1\n0\n1\n.end").unwrap();
        assert_eq!(f, TruthTable::identity(1));
    }

    #[test]
    fn two_bit_complement_table_parses() {
        let f = parse_tt(".n 2\n11\n10\n01\n00\n.end").unwrap();
        assert_eq!(f, TruthTable::complement(2));
    }

    #[test]
    fn wrong_row_count_reports_the_expectation() {
        let err = parse_tt(".n 2\n11\n10\n01\n.end").unwrap_err();
        assert!(err.message.contains("expected 4 rows"), "{err}");
        let err = parse_tt(".n 2\n11\n10\n01\n00\n11\n.end").unwrap_err();
        assert!(err.message.contains("expected 4 rows"), "{err}");
    }

    #[test]
    fn ragged_rows_and_bad_characters_are_rejected() {
        let err = parse_tt(".n 2\n11\n0\n01\n00\n.end").unwrap_err();
        assert!(err.message.contains("expected 2"), "{err}");
        let err = parse_tt(".n 2\n11\n1x\n01\n00\n.end").unwrap_err();
        assert!(err.message.contains("invalid character"), "{err}");
        assert_eq!((err.line, err.column), (3, 2));
    }

    #[test]
    fn arity_cap_is_a_cap_error() {
        let err = parse_tt(".n 21\n.end").unwrap_err();
        assert_eq!(err.kind, FormatErrorKind::Cap);
    }

    #[test]
    fn tt_write_then_parse_is_identity() {
        let f = TruthTable::bit_reversal(3);
        assert_eq!(parse_tt(&write_tt(&f)).unwrap(), f);
    }

    #[test]
    fn real_export_of_a_single_not_has_seven_lines() {
        let c = Circuit::new(2, 2, vec![Gate::not(0)], vec![0, 1]);
        let text = export_real(&c);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[3], ".constants --");
        assert_eq!(lines[5], "t1 x1");
    }

    #[test]
    fn real_export_of_the_reference_circuit_transcribes_each_gate() {
        let c = parse_circuit(FIG1).unwrap();
        let text = export_real(&c);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), c.len() + 6);
        assert_eq!(lines[0], ".version 2.0");
        assert_eq!(lines[5], "t2 x1 x2");
        assert_eq!(lines[9], "t3 x1 x4 x2");
        assert_eq!(lines.last(), Some(&".end"));
    }

    #[test]
    fn real_export_marks_ancilla_as_constant_zero() {
        let c = Circuit::new(4, 2, vec![], vec![0, 1]);
        assert!(export_real(&c).contains(".constants --00"));
    }

    #[test]
    fn empty_circuit_exports_header_and_empty_body() {
        let c = Circuit::identity(1);
        assert_eq!(export_real(&c).lines().count(), 6);
    }
}
