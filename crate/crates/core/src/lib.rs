//! Q-vector logic: truth-table columns as first-class values.
//!
//! A primitive is a Q-vector plus the lines feeding its address. Circuits of
//! primitives can be simulated level by level, collapsed into a single
//! Q-vector, laid out on a repairable matrix of cells, or run on a small
//! memory-based processor emulator.

pub mod alphabet;
pub mod circuit;
pub mod error;
pub mod functions;
pub mod hwemu;
pub mod qmatrix;
pub mod qvector;
pub mod random;
pub mod sim;
pub mod synth;

pub use alphabet::{encode_coverage, parse_truth_table, Coverage, Cube, Symbol1, Symbol2};
pub use circuit::{parse_netlist, Circuit, Diagnostic, Netlist, Primitive};
pub use error::{Error, ErrorClass, Result};
pub use functions::FunctionSet;
pub use hwemu::{
    assemble_images, assemble_images_with, dump_images, load_images, run_emulator, EmuConfig,
    MemoryImages,
};
pub use qmatrix::{matrix_from_circuit, QMatrix, RepairReport, Status};
pub use qvector::{enumerate_functions, QVector};
pub use sim::{
    simulate_batch, simulate_pattern, Logic, ModelingVector, OutputTable, PatternSet, ReadCounter,
};
pub use synth::{evaluate_superposed, qvector_equal, superpose, Equivalence};
