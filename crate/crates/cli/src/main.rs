use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use qlogic::hwemu::{assemble_images_with, EmuConfig};
use qlogic::sim::simulate_batch_with;
use qlogic::{
    encode_coverage, matrix_from_circuit, parse_netlist, parse_truth_table, run_emulator,
    superpose, Circuit, Error, ErrorClass, PatternSet, QVector,
};

#[derive(Parser)]
#[command(name = "qlogic", version, about = "Q-vector logic modeling tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Q-vector and decimal id of a function.
    Encode {
        #[arg(long)]
        arity: usize,
        /// Truth table file, one `<input bits> <output>` row per line.
        #[arg(long, conflicts_with = "id", required_unless_present = "id")]
        table: Option<PathBuf>,
        /// Function number (decimal, `0b...` or `id:arity`).
        #[arg(long, value_parser = parse_id)]
        id: Option<String>,
    },
    /// Minimize a truth table into a two-stroke cube coverage.
    Min {
        #[arg(long)]
        table: PathBuf,
    },
    /// Simulate a netlist over a pattern file.
    Sim {
        #[arg(long)]
        netlist: PathBuf,
        #[arg(long)]
        patterns: PathBuf,
        /// Print the full modeling vector after each row.
        #[arg(long)]
        dump_m: bool,
    },
    /// Collapse a circuit line into one Q-vector over the circuit inputs.
    Synth {
        #[arg(long)]
        netlist: PathBuf,
        #[arg(long)]
        out: String,
    },
    /// Run the circuit on a primitive matrix, optionally with faults and repair.
    Matrix {
        #[arg(long)]
        netlist: PathBuf,
        #[arg(long, default_value_t = 1)]
        spares: usize,
        /// Mark cell `ROW,COL` faulty (1-based); may be repeated.
        #[arg(long = "fault", value_parser = parse_cell)]
        faults: Vec<(usize, usize)>,
        #[arg(long)]
        repair: bool,
        /// Print the matrix layout before running.
        #[arg(long)]
        dump_matrix: bool,
        #[arg(long)]
        patterns: PathBuf,
    },
    /// Run the circuit on the memory-based processor emulator.
    Emu {
        #[arg(long)]
        netlist: PathBuf,
        #[arg(long)]
        patterns: PathBuf,
        /// Write the memory images to this directory.
        #[arg(long)]
        dump_images: Option<PathBuf>,
        /// Element slots (power of two).
        #[arg(long, default_value_t = 8)]
        elements: usize,
        /// Modeling memory depth (power of two).
        #[arg(long, default_value_t = 16)]
        lines: usize,
    },
}

fn parse_cell(s: &str) -> Result<(usize, usize), String> {
    let (r, c) = s.split_once(',').ok_or("expected ROW,COL")?;
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad number `{t}`"))
    };
    Ok((num(r)?, num(c)?))
}

fn parse_id(s: &str) -> Result<String, String> {
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let ok = match s.strip_prefix("0b") {
        Some(bits) => !bits.is_empty() && bits.bytes().all(|b| b == b'0' || b == b'1'),
        None => match s.split_once(':') {
            Some((id, k)) => digits(id) && digits(k),
            None => digits(s),
        },
    };
    if ok {
        Ok(s.to_string())
    } else {
        Err("expected a decimal id, `0b<bits>` or `<id>:<arity>`".into())
    }
}

fn read(path: &Path) -> qlogic::Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_circuit(path: &Path) -> qlogic::Result<Circuit> {
    parse_netlist(&read(path)?)
}

fn load_patterns(path: &Path) -> qlogic::Result<PatternSet> {
    PatternSet::parse(&read(path)?)
}

fn vector_line(q: &QVector) -> String {
    format!("{} (id {})", q.to_grouped_string(), q.decimal_id())
}

fn run(command: Command) -> qlogic::Result<String> {
    let mut out = String::new();
    match command {
        Command::Encode { arity, table, id } => {
            let q = match (table, id) {
                (Some(path), _) => {
                    let rows = parse_truth_table(&read(&path)?)?;
                    let q = QVector::from_truth_table(&rows)?;
                    if q.arity() != arity {
                        return Err(Error::InvalidArity(format!(
                            "table has {} inputs, --arity is {arity}",
                            q.arity()
                        )));
                    }
                    q
                }
                (None, Some(id)) => match id.parse::<BigUint>() {
                    Ok(n) => QVector::from_id(arity, &n)?,
                    Err(_) => {
                        QVector::parse_literal(&id, Some(arity)).map_err(Error::InvalidArity)?
                    }
                },
                (None, None) => unreachable!("clap requires one of --table, --id"),
            };
            out.push_str(&vector_line(&q));
            out.push('\n');
        }
        Command::Min { table } => {
            let rows = parse_truth_table(&read(&table)?)?;
            out = encode_coverage(&rows)?.minimize()?.to_string();
        }
        Command::Sim {
            netlist,
            patterns,
            dump_m,
        } => {
            let c = load_circuit(&netlist)?;
            let p = load_patterns(&patterns)?;
            let mut states = Vec::new();
            let table = simulate_batch_with(&c, &p, |_, m| states.push(m.describe(&c)))?;
            if dump_m {
                for (row, m) in table.to_string().lines().zip(&states) {
                    out.push_str(&format!("{row}\n  M: {m}\n"));
                }
            } else {
                out = table.to_string();
            }
        }
        Command::Synth { netlist, out: line } => {
            let c = load_circuit(&netlist)?;
            out = vector_line(&superpose(&c, &line)?);
            out.push('\n');
        }
        Command::Matrix {
            netlist,
            spares,
            faults,
            repair,
            dump_matrix,
            patterns,
        } => {
            let c = load_circuit(&netlist)?;
            let p = load_patterns(&patterns)?;
            let mut m = matrix_from_circuit(&c, spares);
            for (r, col) in faults {
                m.inject_fault(r, col)?;
            }
            let report = if repair { Some(m.repair()?) } else { None };
            if dump_matrix {
                out.push_str(&m.to_string());
            }
            out.push_str(&m.run_automaton(&p)?.to_string());
            if let Some(report) = report {
                out.push_str(&format!("{report}\n"));
            }
        }
        Command::Emu {
            netlist,
            patterns,
            dump_images,
            elements,
            lines,
        } => {
            let c = load_circuit(&netlist)?;
            let p = load_patterns(&patterns)?;
            let img = assemble_images_with(&c, EmuConfig { elements, lines })?;
            if let Some(dir) = dump_images {
                img.dump(&dir)?;
            }
            let (table, cycles) = run_emulator(&img, &p)?;
            out = format!("{table}cycles: {cycles}\n");
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.to_string().replace('\n', "; "));
            ExitCode::from(match e.class() {
                ErrorClass::Usage => 1,
                ErrorClass::Parse => 2,
                ErrorClass::Semantic => 3,
                ErrorClass::Internal => 4,
            })
        }
    }
}
