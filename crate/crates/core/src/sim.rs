//! Levelized address-based simulation.
//!
//! The modeling vector `M` holds one state per line. Each primitive is
//! evaluated with a single read of its Q-vector at the address formed by
//! concatenating the states of its input lines, and the result is written
//! to `M` at the primitive's output line. Levels are processed in ascending
//! rank; primitives of one level read only lower-rank states.

use std::fmt;

use crate::circuit::{tokens, Circuit, LineIdx};
use crate::error::{Error, Result};
use crate::qvector::{address_of, bit_string, inputs_of};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Logic {
    Zero,
    One,
    /// Not yet computed for the current pattern.
    U,
}

impl Logic {
    pub fn to_bool(self) -> Option<bool> {
        match self {
            Logic::Zero => Some(false),
            Logic::One => Some(true),
            Logic::U => None,
        }
    }
}

impl From<bool> for Logic {
    fn from(b: bool) -> Self {
        if b {
            Logic::One
        } else {
            Logic::Zero
        }
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Logic::Zero => "0",
            Logic::One => "1",
            Logic::U => "U",
        })
    }
}

/// Per-line state of a circuit under one input pattern.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModelingVector {
    states: Vec<Logic>,
}

impl ModelingVector {
    pub fn undefined(lines: usize) -> Self {
        ModelingVector {
            states: vec![Logic::U; lines],
        }
    }

    pub fn get(&self, line: LineIdx) -> Logic {
        self.states[line]
    }

    pub fn set(&mut self, line: LineIdx, value: bool) {
        self.states[line] = value.into();
    }

    /// The defined value of `line`; reading `U` is a sequencing fault.
    pub fn read(&self, line: LineIdx) -> Result<bool> {
        self.states[line].to_bool().ok_or_else(|| {
            Error::InternalInvariantViolation(format!("line #{line} read before it was computed"))
        })
    }

    pub fn states(&self) -> &[Logic] {
        &self.states
    }

    pub fn is_complete(&self) -> bool {
        !self.states.contains(&Logic::U)
    }

    /// `name=bit` pairs in line order.
    pub fn describe(&self, c: &Circuit) -> String {
        self.states
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{}={s}", c.line_name(i)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Counts Q-vector table accesses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReadCounter {
    pub q_reads: u64,
}

/// Input patterns with a named column order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PatternSet {
    pub inputs: Vec<String>,
    pub rows: Vec<Vec<bool>>,
}

impl PatternSet {
    pub fn new(inputs: Vec<String>, rows: Vec<Vec<bool>>) -> Result<Self> {
        if let Some((i, r)) = rows
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != inputs.len())
        {
            return Err(Error::InvalidPattern(format!(
                "pattern {} has {} bits, header names {} inputs",
                i + 1,
                r.len(),
                inputs.len()
            )));
        }
        Ok(PatternSet { inputs, rows })
    }

    /// All `2^n` patterns over the circuit inputs in address order.
    pub fn exhaustive(c: &Circuit) -> Self {
        let n = c.input_count();
        PatternSet {
            inputs: c.inputs().map(|i| c.line_name(i).to_string()).collect(),
            rows: (0..1usize << n).map(|a| inputs_of(a, n)).collect(),
        }
    }

    pub fn empty_for(c: &Circuit) -> Self {
        PatternSet {
            inputs: c.inputs().map(|i| c.line_name(i).to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Parses `patterns <in>...` followed by one row of `0`/`1` characters per line.
    pub fn parse(text: &str) -> Result<Self> {
        const WHAT: &str = "pattern";
        let mut header: Option<Vec<String>> = None;
        let mut rows = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let ln = ln + 1;
            let toks = tokens(raw);
            let Some(&(col, first)) = toks.first() else {
                continue;
            };
            match &header {
                None => {
                    if first != "patterns" {
                        return Err(Error::parse(WHAT, ln, col, "expected `patterns <in>...`"));
                    }
                    for &(c, t) in &toks[1..] {
                        if !crate::circuit::is_line_name(t) {
                            return Err(Error::parse(
                                WHAT,
                                ln,
                                c,
                                format!("invalid line name `{t}`"),
                            ));
                        }
                    }
                    header = Some(toks[1..].iter().map(|(_, t)| t.to_string()).collect());
                }
                Some(_) => {
                    if toks.len() != 1 {
                        return Err(Error::parse(WHAT, ln, toks[1].0, "one pattern per line"));
                    }
                    let row = first
                        .chars()
                        .enumerate()
                        .map(|(i, ch)| match ch {
                            '0' => Ok(false),
                            '1' => Ok(true),
                            _ => Err(Error::parse(
                                WHAT,
                                ln,
                                col + i,
                                format!("pattern bit must be 0 or 1, got `{ch}`"),
                            )),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    rows.push(row);
                }
            }
        }
        let inputs = header.ok_or_else(|| Error::parse(WHAT, 1, 1, "missing `patterns` header"))?;
        PatternSet::new(inputs, rows)
    }

    /// Reorders every row into the circuit's input declaration order.
    pub fn align(&self, c: &Circuit) -> Result<Vec<Vec<bool>>> {
        self.align_to(&c.line_names()[..c.input_count()], c.line_names())
    }

    /// Reorders every row to follow `inputs`; `lines` names every line
    /// known to the model, for error reporting.
    pub fn align_to(&self, inputs: &[String], lines: &[String]) -> Result<Vec<Vec<bool>>> {
        let mut column_of = vec![None; inputs.len()];
        for (col, name) in self.inputs.iter().enumerate() {
            match inputs.iter().position(|n| n == name) {
                Some(l) => {
                    if column_of[l].replace(col).is_some() {
                        return Err(Error::InvalidPattern(format!(
                            "input `{name}` listed twice"
                        )));
                    }
                }
                None if lines.contains(name) => {
                    return Err(Error::InvalidPattern(format!(
                        "`{name}` is not an external input"
                    )))
                }
                None => return Err(Error::UnknownLine(name.clone())),
            }
        }
        if let Some(l) = column_of.iter().position(Option::is_none) {
            return Err(Error::InvalidPattern(format!(
                "input `{}` has no pattern column",
                inputs[l]
            )));
        }
        let order: Vec<usize> = column_of.into_iter().map(Option::unwrap).collect();
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if r.len() != self.inputs.len() {
                    return Err(Error::InvalidPattern(format!(
                        "pattern {} has {} bits, expected {}",
                        i + 1,
                        r.len(),
                        self.inputs.len()
                    )));
                }
                Ok(order.iter().map(|&col| r[col]).collect())
            })
            .collect()
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "patterns {}", self.inputs.join(" "))?;
        for r in &self.rows {
            writeln!(f, "{}", bit_string(r))?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OutputRow {
    /// The pattern as written in the pattern set's column order.
    pub pattern: Vec<bool>,
    pub values: Vec<bool>,
}

/// Output-line states, one row per pattern.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OutputTable {
    pub outputs: Vec<String>,
    pub rows: Vec<OutputRow>,
}

impl OutputTable {
    pub fn new(c: &Circuit) -> Self {
        OutputTable {
            outputs: c
                .outputs()
                .iter()
                .map(|&o| c.line_name(o).to_string())
                .collect(),
            rows: Vec::new(),
        }
    }
}

impl fmt::Display for OutputTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            write!(f, "{} :", bit_string(&row.pattern))?;
            for (name, v) in self.outputs.iter().zip(&row.values) {
                write!(f, " {name}={}", *v as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Core loop; `reorder` may permute each level's evaluation order.
pub(crate) fn run_levels(
    c: &Circuit,
    inputs: &[bool],
    counter: &mut ReadCounter,
    mut reorder: impl FnMut(&mut Vec<usize>),
) -> Result<ModelingVector> {
    if inputs.len() != c.input_count() {
        return Err(Error::InvalidPattern(format!(
            "pattern has {} bits, circuit has {} inputs",
            inputs.len(),
            c.input_count()
        )));
    }
    let mut m = ModelingVector::undefined(c.line_count());
    for (line, &v) in c.inputs().zip(inputs) {
        m.set(line, v);
    }
    let mut address_bits = Vec::new();
    for level in c.levels() {
        let mut order = level.clone();
        reorder(&mut order);
        for p in order {
            let prim = &c.primitives()[p];
            address_bits.clear();
            for &x in &prim.inputs {
                address_bits.push(m.read(x)?);
            }
            let a = address_of(&address_bits)?;
            counter.q_reads += 1;
            m.set(prim.output, prim.q.bit(a));
        }
    }
    if !m.is_complete() {
        return Err(Error::InternalInvariantViolation(
            "modeling vector has undefined lines after the last level".into(),
        ));
    }
    Ok(m)
}

/// `M(Y_i) = Q_i[M(X_i)]` for every primitive, level by level.
pub fn simulate_pattern(c: &Circuit, inputs: &[bool]) -> Result<ModelingVector> {
    run_levels(c, inputs, &mut ReadCounter::default(), |_| {})
}

pub fn simulate_pattern_counted(
    c: &Circuit,
    inputs: &[bool],
    counter: &mut ReadCounter,
) -> Result<ModelingVector> {
    run_levels(c, inputs, counter, |_| {})
}

/// Simulates every pattern from a fresh modeling vector.
pub fn simulate_batch(c: &Circuit, patterns: &PatternSet) -> Result<OutputTable> {
    simulate_batch_with(c, patterns, |_, _| {})
}

/// As [`simulate_batch`], handing each completed modeling vector to `observe`.
pub fn simulate_batch_with(
    c: &Circuit,
    patterns: &PatternSet,
    mut observe: impl FnMut(usize, &ModelingVector),
) -> Result<OutputTable> {
    let aligned = patterns.align(c)?;
    let mut table = OutputTable::new(c);
    for (t, (row, inputs)) in patterns.rows.iter().zip(&aligned).enumerate() {
        let m = simulate_pattern(c, inputs)?;
        observe(t, &m);
        table.rows.push(OutputRow {
            pattern: row.clone(),
            values: c
                .outputs()
                .iter()
                .map(|&o| m.read(o))
                .collect::<Result<_>>()?,
        });
    }
    Ok(table)
}
