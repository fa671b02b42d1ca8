//! Netlists of Q-vector primitives: text format, validation and levelization.
//!
//! Netlist text is line oriented, `#` starts a comment:
//!
//! ```text
//! inputs 1 2 3 4 5 6
//! gate A 1  1 2      # out=A, q=decimal 1 (AND), inputs 1,2
//! gate 8 7  A 7      # OR
//! gate B 14 8 6      # NAND
//! outputs B
//! ```
//!
//! A gate's Q-vector literal is a decimal id (arity taken from the input
//! count), `id:arity`, or a `0b` binary vector.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qvector::QVector;

/// Index of a line inside a [`Circuit`]: external inputs first, then
/// primitive outputs in declaration order.
pub type LineIdx = usize;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Primitive {
    pub output: LineIdx,
    pub inputs: Vec<LineIdx>,
    pub q: QVector,
}

/// One `gate` statement before name resolution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GateDecl {
    pub output: String,
    pub q: String,
    pub inputs: Vec<String>,
    /// Source line, 0 when built programmatically.
    pub source_line: usize,
}

/// An unvalidated netlist as written.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Netlist {
    pub inputs: Vec<String>,
    pub gates: Vec<GateDecl>,
    pub outputs: Option<Vec<String>>,
}

/// A semantic problem found by [`Netlist::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Diagnostic {
    DuplicateInput(String),
    DuplicateDriver(String),
    UndeclaredLine { line: String, gate: String },
    UndeclaredOutput(String),
    DuplicateOutput(String),
    BadFunction { gate: String, message: String },
    Cycle(Vec<String>),
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::DuplicateInput(l) => write!(f, "input `{l}` declared twice"),
            Diagnostic::DuplicateDriver(l) => write!(f, "line `{l}` has more than one driver"),
            Diagnostic::UndeclaredLine { line, gate } => {
                write!(f, "gate `{gate}` reads undeclared line `{line}`")
            }
            Diagnostic::UndeclaredOutput(l) => write!(f, "output `{l}` is not a declared line"),
            Diagnostic::DuplicateOutput(l) => write!(f, "output `{l}` listed twice"),
            Diagnostic::BadFunction { gate, message } => write!(f, "gate `{gate}`: {message}"),
            Diagnostic::Cycle(lines) => write!(f, "cycle through {}", lines.join(" -> ")),
        }
    }
}

impl Netlist {
    pub fn new(inputs: &[&str]) -> Netlist {
        Netlist {
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn gate(&mut self, output: &str, q: &QVector, inputs: &[&str]) -> &mut Self {
        self.gates.push(GateDecl {
            output: output.into(),
            q: format!("0b{q}"),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            source_line: 0,
        });
        self
    }

    pub fn outputs(&mut self, outputs: &[&str]) -> &mut Self {
        self.outputs = Some(outputs.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn parse(text: &str) -> Result<Netlist> {
        parse_netlist_text(text)
    }

    /// Every structural violation; a cycle is reported only when the
    /// netlist is otherwise well formed.
    pub fn validate(&self) -> Vec<Diagnostic> {
        match self.resolve() {
            Err(diags) => diags,
            Ok(r) => match levelize(&r.lines, r.input_count, &r.primitives) {
                Ok(_) => Vec::new(),
                Err(cycle) => vec![Diagnostic::Cycle(cycle)],
            },
        }
    }

    fn resolve(&self) -> std::result::Result<Resolved, Vec<Diagnostic>> {
        let mut diags = Vec::new();
        let mut lines: Vec<String> = Vec::new();
        let mut index: HashMap<String, LineIdx> = HashMap::new();
        for name in &self.inputs {
            if index.contains_key(name) {
                diags.push(Diagnostic::DuplicateInput(name.clone()));
                continue;
            }
            index.insert(name.clone(), lines.len());
            lines.push(name.clone());
        }
        let input_count = lines.len();
        for g in &self.gates {
            if index.contains_key(&g.output) {
                let d = Diagnostic::DuplicateDriver(g.output.clone());
                if !diags.contains(&d) {
                    diags.push(d);
                }
                continue;
            }
            index.insert(g.output.clone(), lines.len());
            lines.push(g.output.clone());
        }
        let mut primitives = Vec::new();
        for g in &self.gates {
            let mut inputs = Vec::with_capacity(g.inputs.len());
            for name in &g.inputs {
                match index.get(name) {
                    Some(&i) => inputs.push(i),
                    None => diags.push(Diagnostic::UndeclaredLine {
                        line: name.clone(),
                        gate: g.output.clone(),
                    }),
                }
            }
            let q = if g.inputs.is_empty() {
                Err("gate has no inputs".to_string())
            } else {
                QVector::parse_literal(&g.q, Some(g.inputs.len()))
            };
            match q {
                Ok(q) => primitives.push(Primitive {
                    output: index[&g.output],
                    inputs,
                    q,
                }),
                Err(message) => diags.push(Diagnostic::BadFunction {
                    gate: g.output.clone(),
                    message,
                }),
            }
        }
        let outputs = match &self.outputs {
            Some(names) => {
                let mut outs = Vec::new();
                for name in names {
                    match index.get(name) {
                        Some(i) if outs.contains(i) => {
                            diags.push(Diagnostic::DuplicateOutput(name.clone()))
                        }
                        Some(&i) => outs.push(i),
                        None => diags.push(Diagnostic::UndeclaredOutput(name.clone())),
                    }
                }
                outs
            }
            None => {
                // primitive outputs that nothing reads
                let mut read = vec![false; lines.len()];
                for p in &primitives {
                    for &i in &p.inputs {
                        read[i] = true;
                    }
                }
                primitives
                    .iter()
                    .map(|p| p.output)
                    .filter(|&o| !read[o])
                    .collect()
            }
        };
        if !diags.is_empty() {
            return Err(diags);
        }
        Ok(Resolved {
            lines,
            index,
            input_count,
            primitives,
            outputs,
        })
    }
}

struct Resolved {
    lines: Vec<String>,
    index: HashMap<String, LineIdx>,
    input_count: usize,
    primitives: Vec<Primitive>,
    outputs: Vec<LineIdx>,
}

/// Groups primitives into levels by longest distance from the external
/// inputs. Inputs have rank 0; a primitive's rank is one more than the
/// highest rank among its drivers. Within a level, declaration order is kept.
///
/// Returns `(levels, rank per primitive)` or the line names of one cycle.
pub fn levelize(
    lines: &[String],
    input_count: usize,
    primitives: &[Primitive],
) -> std::result::Result<Levelization, Vec<String>> {
    let mut driver: Vec<Option<usize>> = vec![None; lines.len()];
    for (p, prim) in primitives.iter().enumerate() {
        driver[prim.output] = Some(p);
    }
    let mut fanout: Vec<Vec<usize>> = vec![Vec::new(); primitives.len()];
    let mut pending: Vec<usize> = vec![0; primitives.len()];
    for (p, prim) in primitives.iter().enumerate() {
        for &i in &prim.inputs {
            if let Some(d) = driver[i] {
                fanout[d].push(p);
                pending[p] += 1;
            }
        }
    }
    let mut rank = vec![0usize; primitives.len()];
    let mut ready: Vec<usize> = (0..primitives.len()).filter(|&p| pending[p] == 0).collect();
    for &p in &ready {
        rank[p] = 1;
    }
    let mut done = 0;
    while let Some(p) = ready.pop() {
        done += 1;
        for &s in &fanout[p] {
            rank[s] = rank[s].max(rank[p] + 1);
            pending[s] -= 1;
            if pending[s] == 0 {
                ready.push(s);
            }
        }
    }
    if done < primitives.len() {
        return Err(find_cycle(lines, primitives, &driver, &pending));
    }
    let depth = rank.iter().copied().max().unwrap_or(0);
    let mut levels = vec![Vec::new(); depth];
    for (p, &r) in rank.iter().enumerate() {
        levels[r - 1].push(p);
    }
    debug_assert!(primitives.iter().all(|p| p.output >= input_count));
    Ok((levels, rank))
}

fn find_cycle(
    lines: &[String],
    primitives: &[Primitive],
    driver: &[Option<usize>],
    pending: &[usize],
) -> Vec<String> {
    // every unresolved primitive has an unresolved driver, so walking
    // backwards must revisit a primitive
    let start = pending
        .iter()
        .position(|&n| n > 0)
        .expect("a primitive is blocked");
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut path = Vec::new();
    let mut p = start;
    loop {
        if let Some(&at) = seen.get(&p) {
            let mut cycle: Vec<String> = path[at..]
                .iter()
                .map(|&q: &usize| lines[primitives[q].output].clone())
                .collect();
            cycle.reverse();
            cycle.push(cycle[0].clone());
            return cycle;
        }
        seen.insert(p, path.len());
        path.push(p);
        p = primitives[p]
            .inputs
            .iter()
            .filter_map(|&i| driver[i])
            .find(|&d| pending[d] > 0)
            .expect("blocked primitive has a blocked driver");
    }
}

/// Primitive indices grouped by level, and each primitive's rank.
pub type Levelization = (Vec<Vec<usize>>, Vec<usize>);

/// A validated, levelized combinational circuit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Circuit {
    lines: Vec<String>,
    index: HashMap<String, LineIdx>,
    input_count: usize,
    primitives: Vec<Primitive>,
    outputs: Vec<LineIdx>,
    levels: Vec<Vec<usize>>,
    rank: Vec<usize>,
}

impl Circuit {
    pub fn from_netlist(netlist: &Netlist) -> Result<Circuit> {
        let r = netlist.resolve().map_err(Error::Semantic)?;
        let (levels, rank) =
            levelize(&r.lines, r.input_count, &r.primitives).map_err(Error::CyclicCircuit)?;
        Ok(Circuit {
            lines: r.lines,
            index: r.index,
            input_count: r.input_count,
            primitives: r.primitives,
            outputs: r.outputs,
            levels,
            rank,
        })
    }

    pub fn parse(text: &str) -> Result<Circuit> {
        Circuit::from_netlist(&Netlist::parse(text)?)
    }

    pub fn to_netlist(&self) -> Netlist {
        Netlist {
            inputs: self.lines[..self.input_count].to_vec(),
            gates: self
                .primitives
                .iter()
                .map(|p| GateDecl {
                    output: self.lines[p.output].clone(),
                    q: format!("0b{}", p.q),
                    inputs: p.inputs.iter().map(|&i| self.lines[i].clone()).collect(),
                    source_line: 0,
                })
                .collect(),
            outputs: Some(
                self.outputs
                    .iter()
                    .map(|&i| self.lines[i].clone())
                    .collect(),
            ),
        }
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn line_name(&self, line: LineIdx) -> &str {
        &self.lines[line]
    }

    pub fn line_names(&self) -> &[String] {
        &self.lines
    }

    pub fn line(&self, name: &str) -> Option<LineIdx> {
        self.index.get(name).copied()
    }

    pub fn input_count(&self) -> usize {
        self.input_count
    }

    pub fn inputs(&self) -> std::ops::Range<LineIdx> {
        0..self.input_count
    }

    pub fn is_input(&self, line: LineIdx) -> bool {
        line < self.input_count
    }

    pub fn primitives(&self) -> &[Primitive] {
        &self.primitives
    }

    pub fn outputs(&self) -> &[LineIdx] {
        &self.outputs
    }

    /// Primitive indices grouped by rank, rank 1 first.
    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    /// Rank of primitive `p` (1-based; external inputs are rank 0).
    pub fn rank(&self, p: usize) -> usize {
        self.rank[p]
    }

    /// The primitive driving `line`, if it is not an external input.
    pub fn driver(&self, line: LineIdx) -> Option<usize> {
        if line < self.input_count {
            None
        } else {
            // primitive outputs follow the inputs in declaration order
            Some(line - self.input_count)
        }
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_netlist().fmt(f)
    }
}

impl fmt::Display for Netlist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "inputs {}", self.inputs.join(" "))?;
        for g in &self.gates {
            writeln!(f, "gate {} {} {}", g.output, g.q, g.inputs.join(" "))?;
        }
        if let Some(outs) = &self.outputs {
            writeln!(f, "outputs {}", outs.join(" "))?;
        }
        Ok(())
    }
}

/// Splits a line into `(1-based column, token)` pairs, dropping comments.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let code = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in code.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &code[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &code[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (code[..s].chars().count() + 1, t))
        .collect()
}

pub(crate) fn is_line_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_q_literal(s: &str) -> bool {
    if let Some(b) = s.strip_prefix("0b") {
        return !b.is_empty() && b.chars().all(|c| c == '0' || c == '1');
    }
    let digits = |t: &str| !t.is_empty() && t.chars().all(|c| c.is_ascii_digit());
    match s.split_once(':') {
        Some((id, k)) => digits(id) && digits(k),
        None => digits(s),
    }
}

fn parse_netlist_text(text: &str) -> Result<Netlist> {
    const WHAT: &str = "netlist";
    let mut netlist = Netlist::default();
    let mut seen_inputs = false;
    let mut seen_outputs = false;
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let toks = tokens(raw);
        let Some(&(kcol, keyword)) = toks.first() else {
            continue;
        };
        let names = |toks: &[(usize, &str)]| -> Result<Vec<String>> {
            toks.iter()
                .map(|&(c, t)| {
                    if is_line_name(t) {
                        Ok(t.to_string())
                    } else {
                        Err(Error::parse(
                            WHAT,
                            ln,
                            c,
                            format!("invalid line name `{t}`"),
                        ))
                    }
                })
                .collect()
        };
        if seen_outputs {
            return Err(Error::parse(
                WHAT,
                ln,
                kcol,
                "nothing may follow the `outputs` line",
            ));
        }
        match keyword {
            "inputs" => {
                if seen_inputs {
                    return Err(Error::parse(WHAT, ln, kcol, "duplicate `inputs` line"));
                }
                if toks.len() < 2 {
                    return Err(Error::parse(WHAT, ln, kcol, "`inputs` declares no lines"));
                }
                netlist.inputs = names(&toks[1..])?;
                seen_inputs = true;
            }
            _ if !seen_inputs => {
                return Err(Error::parse(
                    WHAT,
                    ln,
                    kcol,
                    "the first statement must be `inputs`",
                ));
            }
            "gate" => {
                if toks.len() < 4 {
                    return Err(Error::parse(
                        WHAT,
                        ln,
                        kcol,
                        "expected `gate <out> <q-literal> <in>...`",
                    ));
                }
                let output = names(&toks[1..2])?.remove(0);
                let (qcol, q) = toks[2];
                if !is_q_literal(q) {
                    return Err(Error::parse(
                        WHAT,
                        ln,
                        qcol,
                        format!("invalid Q-vector literal `{q}`"),
                    ));
                }
                netlist.gates.push(GateDecl {
                    output,
                    q: q.to_string(),
                    inputs: names(&toks[3..])?,
                    source_line: ln,
                });
            }
            "outputs" => {
                netlist.outputs = Some(names(&toks[1..])?);
                seen_outputs = true;
            }
            other => {
                return Err(Error::parse(
                    WHAT,
                    ln,
                    kcol,
                    format!("unknown statement `{other}`"),
                ));
            }
        }
    }
    if !seen_inputs {
        return Err(Error::parse(WHAT, 1, 1, "missing `inputs` line"));
    }
    Ok(netlist)
}

/// Parses and validates a netlist, returning a levelized circuit.
pub fn parse_netlist(text: &str) -> Result<Circuit> {
    Circuit::parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const SAMPLE: &str = "\
inputs 1 2 3 4 5 6
gate A 1      1 2      # out=A, q=decimal 1 (AND), inputs 1,2
gate 7 1      3 4
gate 8 7      A 7      # OR
gate 9 7      7 5
gate B 14     8 6      # NAND
gate C 14     6 9
outputs B C
";

    fn level_names(c: &Circuit) -> Vec<Vec<&str>> {
        c.levels()
            .iter()
            .map(|l| {
                l.iter()
                    .map(|&p| c.line_name(c.primitives()[p].output))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn sample_levels() {
        let c = parse_netlist(SAMPLE).unwrap();
        assert_eq!(c.input_count(), 6);
        assert_eq!(c.primitives().len(), 6);
        assert_eq!(level_names(&c), [["A", "7"], ["8", "9"], ["B", "C"]]);
        assert_eq!(c.primitives()[4].q.to_string(), "1110");
        assert_eq!(Netlist::parse(SAMPLE).unwrap().validate(), []);
    }

    #[test]
    fn single_gate() {
        let c = parse_netlist("inputs a b\ngate y 0b0001 a b\n").unwrap();
        assert_eq!(c.levels().len(), 1);
        assert_eq!(c.outputs(), [c.line("y").unwrap()]);
    }

    #[test]
    fn repeated_input_line() {
        let c = parse_netlist("inputs a\ngate y 0b0001 a a\n").unwrap();
        let p = &c.primitives()[0];
        // AND(a, a) reads addresses 00 and 11 only
        assert!(!p.q.evaluate(&[false, false]).unwrap());
        assert!(p.q.evaluate(&[true, true]).unwrap());
    }

    #[test]
    fn chain_levels() {
        let c = parse_netlist(
            "inputs a\ngate n1 0b10 a\ngate n2 0b10 n1\ngate n3 0b10 n2\ngate n4 0b10 n3\n",
        )
        .unwrap();
        assert_eq!(level_names(&c), [["n1"], ["n2"], ["n3"], ["n4"]]);
    }

    #[test]
    fn forward_references_are_levelized() {
        let c = parse_netlist("inputs a b\ngate z 6 y a\ngate y 1 a b\n").unwrap();
        assert_eq!(level_names(&c), [["y"], ["z"]]);
        for (p, prim) in c.primitives().iter().enumerate() {
            for &i in &prim.inputs {
                if let Some(d) = c.driver(i) {
                    assert!(c.rank(d) < c.rank(p));
                }
            }
        }
    }

    #[test]
    fn diagnostics() {
        let dup = Netlist::parse("inputs a b\ngate y 1 a b\ngate y 7 a b\n").unwrap();
        assert_eq!(dup.validate(), [Diagnostic::DuplicateDriver("y".into())]);
        let undeclared = Netlist::parse("inputs a b\ngate y 1 a z\n").unwrap();
        assert_eq!(
            undeclared.validate(),
            [Diagnostic::UndeclaredLine {
                line: "z".into(),
                gate: "y".into()
            }]
        );
        let arity = Netlist::parse("inputs a b\ngate y 0b01 a b\n").unwrap();
        assert!(matches!(
            arity.validate().as_slice(),
            [Diagnostic::BadFunction { .. }]
        ));
        let drives_input = Netlist::parse("inputs a b\ngate a 1 a b\n").unwrap();
        assert_eq!(
            drives_input.validate(),
            [Diagnostic::DuplicateDriver("a".into())]
        );
        assert!(matches!(
            parse_netlist("inputs a b\ngate y 1 a z\n"),
            Err(Error::Semantic(_))
        ));
    }

    #[test]
    fn cycle_is_reported() {
        let text = "inputs a\ngate x 1 a z\ngate y 1 x a\ngate z 1 y a\n";
        match parse_netlist(text) {
            Err(Error::CyclicCircuit(lines)) => {
                assert_eq!(lines.first(), lines.last());
                assert_eq!(lines.len(), 4);
            }
            other => panic!("expected cycle, got {other:?}"),
        }
        assert!(matches!(
            Netlist::parse(text).unwrap().validate().as_slice(),
            [Diagnostic::Cycle(_)]
        ));
    }

    #[test]
    fn syntax_errors_carry_location() {
        let err = parse_netlist("inputs a b\ngate y 0b01x a b\n").unwrap_err();
        match err {
            Error::Parse { at, .. } => assert_eq!((at.line, at.column), (2, 8)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_netlist("gate y 1 a b\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_netlist("inputs a\noutputs a\ngate y 0b10 a\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_netlist("inputs a-b\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_netlist("inputs\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn print_parse_round_trip() {
        let c = parse_netlist(SAMPLE).unwrap();
        let printed = c.to_string();
        assert!(printed.contains("gate B 0b1110 8 6"));
        assert_eq!(parse_netlist(&printed).unwrap(), c);
    }

    #[test]
    fn tokenizer_columns() {
        assert_eq!(tokens("  gate  y # c"), [(3, "gate"), (9, "y")]);
    }
}
