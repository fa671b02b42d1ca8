//! Superposition: collapsing a circuit into one Q-vector over its external
//! inputs, by simulating every input assignment.

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::qvector::{address_of, inputs_of, QVector, MAX_ARITY};
use crate::sim::{simulate_pattern, ReadCounter};

/// The Q-vector of line `out` over the circuit inputs in declaration order.
pub fn superpose(c: &Circuit, out: &str) -> Result<QVector> {
    let line = c
        .line(out)
        .ok_or_else(|| Error::UnknownLine(out.to_string()))?;
    let n = c.input_count();
    if n > MAX_ARITY {
        return Err(Error::SuperpositionTooLarge(n));
    }
    let mut bits = Vec::with_capacity(1 << n);
    for a in 0..1usize << n {
        let m = simulate_pattern(c, &inputs_of(a, n))?;
        bits.push(m.read(line)?);
    }
    QVector::from_bits(&bits)
}

/// One Q-vector per declared output, in output order.
pub fn superpose_outputs(c: &Circuit) -> Result<Vec<(String, QVector)>> {
    c.outputs()
        .iter()
        .map(|&o| {
            let name = c.line_name(o).to_string();
            superpose(c, &name).map(|q| (name, q))
        })
        .collect()
}

/// Evaluates a superposed vector: a single table access per pattern.
pub fn evaluate_superposed(
    q: &QVector,
    inputs: &[bool],
    counter: &mut ReadCounter,
) -> Result<bool> {
    if inputs.len() != q.arity() {
        return Err(Error::InvalidArity(format!(
            "superposed vector has arity {}, pattern has {} bits",
            q.arity(),
            inputs.len()
        )));
    }
    counter.q_reads += 1;
    Ok(q.bit(address_of(inputs)?))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Equivalence {
    Equal,
    /// Lowest address where the vectors differ.
    Differ(usize),
}

pub fn qvector_equal(a: &QVector, b: &QVector) -> Result<Equivalence> {
    if a.arity() != b.arity() {
        return Err(Error::InvalidArity(format!(
            "cannot compare arity {} with arity {}",
            a.arity(),
            b.arity()
        )));
    }
    Ok(a.bits()
        .zip(b.bits())
        .position(|(x, y)| x != y)
        .map_or(Equivalence::Equal, Equivalence::Differ))
}
