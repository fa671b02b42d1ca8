//! The quantum matrix: primitives laid out as columns (levels) and rows
//! (slots), with spare rows that can take over the configuration of a
//! faulty cell in the same column.
//!
//! Row and column numbers in this API are 1-based, matching the usual
//! `mu[i][j]` notation for the matrix.

use std::fmt;

use crate::circuit::{Circuit, LineIdx};
use crate::error::{Error, Result};
use crate::qvector::{address_of, QVector};
use crate::sim::{ModelingVector, OutputRow, OutputTable, PatternSet, ReadCounter};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Status {
    Active,
    Faulty,
    /// A faulty cell whose configuration now lives in a spare.
    Retired,
    SpareFree,
    SpareUsed,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Active => "active",
            Status::Faulty => "faulty",
            Status::Retired => "retired",
            Status::SpareFree => "spare-free",
            Status::SpareUsed => "spare-used",
        }
    }

    /// Whether the cell takes part in evaluation.
    pub fn is_live(self) -> bool {
        matches!(self, Status::Active | Status::SpareUsed | Status::Faulty)
    }
}

/// `(X, Q, Y)`: input lines, function, output line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quantum {
    pub x: Vec<LineIdx>,
    pub q: QVector,
    pub y: LineIdx,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cell {
    pub status: Status,
    pub quantum: Option<Quantum>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RepairMove {
    pub col: usize,
    pub from_row: usize,
    pub to_row: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RepairReport {
    pub moves: Vec<RepairMove>,
}

impl fmt::Display for RepairReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.moves.len();
        let s = if n == 1 { "" } else { "s" };
        write!(f, "{n} fault{s} repaired, {n} spare{s} used")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    lines: Vec<String>,
    input_count: usize,
    outputs: Vec<LineIdx>,
    rows: usize,
    cols: usize,
    spares: usize,
    cells: Vec<Option<Cell>>,
}

impl QMatrix {
    /// Column `j` holds the level-`j` primitives in declaration order;
    /// the last `spares` rows of every column are free spares.
    pub fn from_circuit(c: &Circuit, spares: usize) -> QMatrix {
        let cols = c.levels().len();
        let used_rows = c.levels().iter().map(Vec::len).max().unwrap_or(0);
        let rows = used_rows + spares;
        let mut cells = vec![None; rows * cols];
        for (j, level) in c.levels().iter().enumerate() {
            for (i, &p) in level.iter().enumerate() {
                let prim = &c.primitives()[p];
                cells[i * cols + j] = Some(Cell {
                    status: Status::Active,
                    quantum: Some(Quantum {
                        x: prim.inputs.clone(),
                        q: prim.q.clone(),
                        y: prim.output,
                    }),
                });
            }
            for i in used_rows..rows {
                cells[i * cols + j] = Some(Cell {
                    status: Status::SpareFree,
                    quantum: None,
                });
            }
        }
        QMatrix {
            lines: c.line_names().to_vec(),
            input_count: c.input_count(),
            outputs: c.outputs().to_vec(),
            rows,
            cols,
            spares,
            cells,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn spares(&self) -> usize {
        self.spares
    }

    fn slot(&self, row: usize, col: usize) -> Option<usize> {
        let inside = (1..=self.rows).contains(&row) && (1..=self.cols).contains(&col);
        inside.then(|| (row - 1) * self.cols + (col - 1))
    }

    pub fn cell(&self, row: usize, col: usize) -> Option<&Cell> {
        self.slot(row, col).and_then(|s| self.cells[s].as_ref())
    }

    fn cells_with(&self, status: Status) -> usize {
        self.cells
            .iter()
            .flatten()
            .filter(|c| c.status == status)
            .count()
    }

    /// Cells that evaluate their quantum: active ones and used spares.
    pub fn active_count(&self) -> usize {
        self.cells_with(Status::Active) + self.cells_with(Status::SpareUsed)
    }

    pub fn spare_used_count(&self) -> usize {
        self.cells_with(Status::SpareUsed)
    }

    pub fn faulty_count(&self) -> usize {
        self.cells_with(Status::Faulty)
    }

    /// Marks the quantum at `(row, col)` faulty.
    pub fn inject_fault(&mut self, row: usize, col: usize) -> Result<()> {
        let invalid = |reason: &str| Error::InvalidCell {
            row,
            col,
            reason: reason.to_string(),
        };
        let slot = self
            .slot(row, col)
            .ok_or_else(|| invalid("outside the matrix"))?;
        let cell = self.cells[slot]
            .as_mut()
            .ok_or_else(|| invalid("cell is empty"))?;
        match cell.status {
            Status::Active | Status::SpareUsed => {
                cell.status = Status::Faulty;
                Ok(())
            }
            Status::SpareFree => Err(invalid("cell is an unused spare")),
            Status::Faulty => Err(invalid("cell is already faulty")),
            Status::Retired => Err(invalid("cell is retired")),
        }
    }

    /// Readdresses every faulty quantum onto the lowest free spare of its
    /// column. Leaves the matrix unchanged on error.
    pub fn repair(&mut self) -> Result<RepairReport> {
        let mut plan = Vec::new();
        for col in 1..=self.cols {
            let faulty: Vec<usize> = (1..=self.rows)
                .filter(|&r| {
                    self.cell(r, col)
                        .is_some_and(|c| c.status == Status::Faulty)
                })
                .collect();
            let free: Vec<usize> = (1..=self.rows)
                .filter(|&r| {
                    self.cell(r, col)
                        .is_some_and(|c| c.status == Status::SpareFree)
                })
                .collect();
            if faulty.len() > free.len() {
                return Err(Error::RepairExhausted {
                    column: col,
                    faults: faulty.len(),
                    spares: free.len(),
                });
            }
            plan.extend(
                faulty
                    .into_iter()
                    .zip(free)
                    .map(|(from_row, to_row)| RepairMove {
                        col,
                        from_row,
                        to_row,
                    }),
            );
        }
        for mv in &plan {
            let from = self.slot(mv.from_row, mv.col).unwrap();
            let to = self.slot(mv.to_row, mv.col).unwrap();
            let faulty = self.cells[from].as_mut().unwrap();
            faulty.status = Status::Retired;
            let quantum = faulty.quantum.clone();
            self.cells[to] = Some(Cell {
                status: Status::SpareUsed,
                quantum,
            });
        }
        Ok(RepairReport { moves: plan })
    }

    /// Structural invariants: each live quantum reads only external inputs
    /// or lines produced in strictly earlier columns, and no line has two
    /// live drivers.
    pub fn check_invariants(&self) -> Result<()> {
        let mut produced_in: Vec<Option<usize>> = vec![None; self.lines.len()];
        for col in 1..=self.cols {
            for row in 1..=self.rows {
                let Some(Cell {
                    status,
                    quantum: Some(qt),
                }) = self.cell(row, col)
                else {
                    continue;
                };
                if !status.is_live() {
                    continue;
                }
                if produced_in[qt.y].replace(col).is_some() || qt.y < self.input_count {
                    return Err(Error::InternalInvariantViolation(format!(
                        "line `{}` has more than one driver",
                        self.lines[qt.y]
                    )));
                }
            }
        }
        for col in 1..=self.cols {
            for row in 1..=self.rows {
                let Some(Cell {
                    status,
                    quantum: Some(qt),
                }) = self.cell(row, col)
                else {
                    continue;
                };
                if !status.is_live() {
                    continue;
                }
                for &x in &qt.x {
                    if x >= self.input_count && !produced_in[x].is_some_and(|c| c < col) {
                        return Err(Error::InternalInvariantViolation(format!(
                            "quantum ({row},{col}) reads `{}` which is not produced in an earlier column",
                            self.lines[x]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The control automaton: for each input pattern `t`, load the inputs
    /// into `M`, then process columns `i = 1..=p` in order, evaluating every
    /// live quantum of the column against `M` as it stood at the start of
    /// that column.
    pub fn run_automaton(&self, patterns: &PatternSet) -> Result<OutputTable> {
        self.run_automaton_counted(patterns, &mut ReadCounter::default())
    }

    pub fn run_automaton_counted(
        &self,
        patterns: &PatternSet,
        counter: &mut ReadCounter,
    ) -> Result<OutputTable> {
        let aligned = self.align(patterns)?;
        let mut table = OutputTable {
            outputs: self
                .outputs
                .iter()
                .map(|&o| self.lines[o].clone())
                .collect(),
            rows: Vec::new(),
        };
        let mut results: Vec<(LineIdx, bool)> = Vec::with_capacity(self.rows);
        let mut address_bits = Vec::new();
        for (t, (row, inputs)) in patterns.rows.iter().zip(&aligned).enumerate() {
            // step 1: next input action
            let mut m = ModelingVector::undefined(self.lines.len());
            for (line, &v) in inputs.iter().enumerate() {
                m.set(line, v);
            }
            // steps 2-3: columns left to right
            for col in 1..=self.cols {
                results.clear();
                for r in 1..=self.rows {
                    let Some(cell) = self.cell(r, col) else {
                        continue;
                    };
                    match (cell.status, &cell.quantum) {
                        (Status::Faulty, _) => {
                            return Err(Error::FaultEncountered {
                                row: r,
                                col,
                                pattern: t + 1,
                            })
                        }
                        (Status::Active | Status::SpareUsed, Some(qt)) => {
                            address_bits.clear();
                            for &x in &qt.x {
                                address_bits.push(m.read(x).map_err(|_| {
                                    Error::InternalInvariantViolation(format!(
                                        "quantum ({r},{col}) read `{}` before it was produced",
                                        self.lines[x]
                                    ))
                                })?);
                            }
                            counter.q_reads += 1;
                            results.push((qt.y, qt.q.bit(address_of(&address_bits)?)));
                        }
                        _ => {}
                    }
                }
                for &(y, v) in &results {
                    m.set(y, v);
                }
            }
            let values = self
                .outputs
                .iter()
                .map(|&o| {
                    m.read(o).map_err(|_| {
                        Error::InternalInvariantViolation(format!(
                            "output `{}` was never produced",
                            self.lines[o]
                        ))
                    })
                })
                .collect::<Result<_>>()?;
            table.rows.push(OutputRow {
                pattern: row.clone(),
                values,
            });
        }
        Ok(table)
    }

    fn align(&self, patterns: &PatternSet) -> Result<Vec<Vec<bool>>> {
        patterns.align_to(&self.lines[..self.input_count], &self.lines)
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "matrix {}x{} spares={}",
            self.rows, self.cols, self.spares
        )?;
        for row in 1..=self.rows {
            for col in 1..=self.cols {
                write!(f, "({row},{col})")?;
                match self.cell(row, col) {
                    None => writeln!(f, " empty")?,
                    Some(Cell {
                        status,
                        quantum: None,
                    }) => writeln!(f, " {}", status.name())?,
                    Some(Cell {
                        status,
                        quantum: Some(qt),
                    }) => {
                        write!(f, " {} {} 0b{}", status.name(), self.lines[qt.y], qt.q)?;
                        for &x in &qt.x {
                            write!(f, " {}", self.lines[x])?;
                        }
                        writeln!(f)?;
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn matrix_from_circuit(c: &Circuit, spares: usize) -> QMatrix {
    QMatrix::from_circuit(c, spares)
}
