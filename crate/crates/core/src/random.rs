//! Random combinational circuits for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::circuit::{Circuit, Netlist};
use crate::qvector::QVector;

#[derive(Clone, Debug)]
pub struct CircuitShape {
    pub max_inputs: usize,
    pub max_primitives: usize,
    pub max_arity: usize,
    /// Restrict every primitive to exactly two inputs (the emulator's format).
    pub two_input_only: bool,
}

impl Default for CircuitShape {
    fn default() -> Self {
        CircuitShape {
            max_inputs: 8,
            max_primitives: 20,
            max_arity: 3,
            two_input_only: false,
        }
    }
}

pub fn random_qvector<R: Rng + ?Sized>(rng: &mut R, arity: usize) -> QVector {
    QVector::from_fn(arity, |_| rng.gen()).expect("arity within limits")
}

/// An acyclic circuit with inputs `i0..`, primitives `n0..` declared in
/// shuffled order, and a non-empty random set of outputs.
pub fn random_circuit<R: Rng + ?Sized>(rng: &mut R, shape: &CircuitShape) -> Circuit {
    let n_inputs = rng.gen_range(1..=shape.max_inputs.max(1));
    let n_prims = rng.gen_range(1..=shape.max_primitives.max(1));
    let input_names: Vec<String> = (0..n_inputs).map(|i| format!("i{i}")).collect();
    let mut names = input_names.clone();
    let mut netlist = Netlist {
        inputs: input_names,
        ..Default::default()
    };
    for p in 0..n_prims {
        let arity = if shape.two_input_only {
            2
        } else {
            rng.gen_range(1..=shape.max_arity.max(1))
        };
        let ins: Vec<&str> = (0..arity)
            .map(|_| names[rng.gen_range(0..names.len())].as_str())
            .collect();
        let q = random_qvector(rng, arity);
        let out = format!("n{p}");
        netlist.gate(&out, &q, &ins);
        names.push(out);
    }
    netlist.gates.shuffle(rng);
    let mut outputs: Vec<&str> = netlist
        .gates
        .iter()
        .map(|g| g.output.as_str())
        .filter(|_| rng.gen_bool(0.4))
        .collect();
    if outputs.is_empty() {
        outputs.push(names.last().unwrap());
    }
    let outputs: Vec<String> = outputs.into_iter().map(String::from).collect();
    netlist.outputs = Some(outputs);
    Circuit::from_netlist(&netlist).expect("generated netlists are well formed")
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn respects_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let shape = CircuitShape {
            max_inputs: 4,
            max_primitives: 7,
            max_arity: 2,
            two_input_only: true,
        };
        for _ in 0..100 {
            let c = random_circuit(&mut rng, &shape);
            assert!(c.input_count() <= 4);
            assert!(c.primitives().len() <= 7);
            assert!(c.primitives().iter().all(|p| p.inputs.len() == 2));
            assert!(!c.outputs().is_empty());
        }
    }
}
