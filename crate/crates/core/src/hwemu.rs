//! Cycle-level emulation of a RAM-based primitive processor.
//!
//! Five memories describe a circuit of two-input primitives:
//!
//! | memory | shape (default)   | contents                                   |
//! |--------|-------------------|--------------------------------------------|
//! | `x1`   | 8 x 4             | line number of each element's first input  |
//! | `x2`   | 8 x 4             | line number of each element's second input |
//! | `out`  | 8 x 4             | line number of each element's output       |
//! | `q`    | 32 x 1            | Q-vector bits at `{element, input pair}`   |
//! | `m`    | 16 x 1, dual-port | the modeling vector                        |
//!
//! Lines are numbered inputs first, then primitive outputs in level order,
//! and elements are stored in level order. One pattern costs one cycle per
//! input load plus three cycles per element: read `m[x1]`, read `m[x2]`,
//! then read `q` and write `m[out]` in the same cycle.

use std::fmt;
use std::fs;
use std::path::Path;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::sim::{OutputRow, OutputTable, PatternSet};

/// A word-addressed memory of `depth` words, `width` bits each.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Memory {
    name: String,
    width: usize,
    words: Vec<u64>,
}

impl Memory {
    pub fn new(name: &str, depth: usize, width: usize) -> Memory {
        assert!((1..=64).contains(&width));
        Memory {
            name: name.to_string(),
            width,
            words: vec![0; depth],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn depth(&self) -> usize {
        self.words.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn read(&self, addr: usize) -> Option<u64> {
        self.words.get(addr).copied()
    }

    pub fn write(&mut self, addr: usize, value: u64) -> Option<()> {
        let mask = if self.width == 64 {
            u64::MAX
        } else {
            (1 << self.width) - 1
        };
        let slot = self.words.get_mut(addr)?;
        *slot = value & mask;
        Some(())
    }

    /// Parses `memory <name> <depth>x<width>` followed by exactly `depth`
    /// binary words, most significant bit first.
    pub fn parse(expected_name: &str, text: &str) -> Result<Memory> {
        let err = |message: String| Error::ImageFormat {
            file: format!("{expected_name}.mem"),
            message,
        };
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| err("empty file".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [kw, name, shape] = fields.as_slice() else {
            return Err(err(format!("bad header `{header}`")));
        };
        if *kw != "memory" || *name != expected_name {
            return Err(err(format!(
                "expected `memory {expected_name} ...`, got `{header}`"
            )));
        }
        let (depth, width) = shape
            .split_once('x')
            .and_then(|(d, w)| Some((d.parse::<usize>().ok()?, w.parse::<usize>().ok()?)))
            .filter(|&(d, w)| d > 0 && (1..=64).contains(&w))
            .ok_or_else(|| err(format!("bad shape `{shape}`")))?;
        let mut mem = Memory::new(expected_name, depth, width);
        for addr in 0..depth {
            let word = lines
                .next()
                .ok_or_else(|| err(format!("expected {depth} words, found {addr}")))?;
            if word.len() != width || !word.chars().all(|c| c == '0' || c == '1') {
                return Err(err(format!(
                    "word {addr} `{word}` is not {width} binary digits"
                )));
            }
            mem.words[addr] = u64::from_str_radix(word, 2).expect("checked binary");
        }
        if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
            return Err(err(format!("unexpected trailing content `{extra}`")));
        }
        Ok(mem)
    }
}

impl fmt::Display for Memory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "memory {} {}x{}", self.name, self.depth(), self.width)?;
        for w in &self.words {
            writeln!(f, "{:0width$b}", w, width = self.width)?;
        }
        Ok(())
    }
}

/// Memory depths; both must be powers of two.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EmuConfig {
    pub elements: usize,
    pub lines: usize,
}

impl Default for EmuConfig {
    fn default() -> Self {
        EmuConfig {
            elements: 8,
            lines: 16,
        }
    }
}

impl EmuConfig {
    /// The smallest power-of-two depths, no smaller than the defaults, that hold `c`.
    pub fn fitting(c: &Circuit) -> EmuConfig {
        let d = EmuConfig::default();
        EmuConfig {
            elements: c.primitives().len().next_power_of_two().max(d.elements),
            lines: c.line_count().next_power_of_two().max(d.lines),
        }
    }

    /// Bits needed to address a line.
    pub fn line_width(&self) -> usize {
        (self.lines.trailing_zeros() as usize).max(1)
    }

    fn check(&self) -> Result<()> {
        if !self.elements.is_power_of_two() || !self.lines.is_power_of_two() {
            return Err(Error::CapacityExceeded(format!(
                "memory depths must be powers of two, got {} elements and {} lines",
                self.elements, self.lines
            )));
        }
        Ok(())
    }
}

/// Descriptive data kept next to the memories.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ImageMeta {
    pub input_count: usize,
    pub primitive_count: usize,
    /// Names indexed by emulator line number.
    pub line_names: Vec<String>,
    pub outputs: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MemoryImages {
    pub x1: Memory,
    pub x2: Memory,
    pub out: Memory,
    pub q: Memory,
    pub m: Memory,
    pub meta: ImageMeta,
}

/// Builds the memory images with the default 8-element, 16-line layout.
pub fn assemble_images(c: &Circuit) -> Result<MemoryImages> {
    assemble_images_with(c, EmuConfig::default())
}

pub fn assemble_images_with(c: &Circuit, config: EmuConfig) -> Result<MemoryImages> {
    config.check()?;
    for p in c.primitives() {
        if p.inputs.len() != 2 {
            return Err(Error::UnsupportedArity {
                line: c.line_name(p.output).to_string(),
                arity: p.inputs.len(),
            });
        }
    }
    if c.primitives().len() > config.elements {
        return Err(Error::CapacityExceeded(format!(
            "{} primitives do not fit in {} element slots",
            c.primitives().len(),
            config.elements
        )));
    }
    if c.line_count() > config.lines {
        return Err(Error::CapacityExceeded(format!(
            "{} lines do not fit in a {}-word modeling memory",
            c.line_count(),
            config.lines
        )));
    }
    let element_order: Vec<usize> = c.levels().iter().flatten().copied().collect();
    let mut number = vec![0usize; c.line_count()];
    let mut line_names: Vec<String> = Vec::with_capacity(c.line_count());
    for line in c.inputs() {
        number[line] = line_names.len();
        line_names.push(c.line_name(line).to_string());
    }
    for &p in &element_order {
        let out = c.primitives()[p].output;
        number[out] = line_names.len();
        line_names.push(c.line_name(out).to_string());
    }
    let width = config.line_width();
    let mut img = MemoryImages {
        x1: Memory::new("x1", config.elements, width),
        x2: Memory::new("x2", config.elements, width),
        out: Memory::new("out", config.elements, width),
        q: Memory::new("q", config.elements * 4, 1),
        m: Memory::new("m", config.lines, 1),
        meta: ImageMeta {
            input_count: c.input_count(),
            primitive_count: element_order.len(),
            line_names,
            outputs: c.outputs().iter().map(|&o| number[o]).collect(),
        },
    };
    for (e, &p) in element_order.iter().enumerate() {
        let prim = &c.primitives()[p];
        img.x1.write(e, number[prim.inputs[0]] as u64);
        img.x2.write(e, number[prim.inputs[1]] as u64);
        img.out.write(e, number[prim.output] as u64);
        for pair in 0..4 {
            img.q.write(e * 4 + pair, prim.q.bit(pair) as u64);
        }
    }
    Ok(img)
}

impl MemoryImages {
    pub fn dump(&self, dir: &Path) -> Result<()> {
        let io = |path: &Path| {
            let path = path.display().to_string();
            move |source| Error::Io { path, source }
        };
        fs::create_dir_all(dir).map_err(io(dir))?;
        for mem in [&self.x1, &self.x2, &self.out, &self.q] {
            let path = dir.join(format!("{}.mem", mem.name()));
            fs::write(&path, mem.to_string()).map_err(io(&path))?;
        }
        let path = dir.join("meta.txt");
        fs::write(&path, self.meta_text()).map_err(io(&path))?;
        Ok(())
    }

    pub fn load(dir: &Path) -> Result<MemoryImages> {
        let read = |name: &str| {
            let path = dir.join(name);
            fs::read_to_string(&path).map_err(|source| Error::Io {
                path: path.display().to_string(),
                source,
            })
        };
        let x1 = Memory::parse("x1", &read("x1.mem")?)?;
        let x2 = Memory::parse("x2", &read("x2.mem")?)?;
        let out = Memory::parse("out", &read("out.mem")?)?;
        let q = Memory::parse("q", &read("q.mem")?)?;
        let (meta, lines) = parse_meta(&read("meta.txt")?)?;
        let img = MemoryImages {
            x1,
            x2,
            out,
            q,
            m: Memory::new("m", lines, 1),
            meta,
        };
        img.check_shapes()?;
        Ok(img)
    }

    fn check_shapes(&self) -> Result<()> {
        let err = |file: &str, message: String| Error::ImageFormat {
            file: file.to_string(),
            message,
        };
        let depth = self.x1.depth();
        for mem in [&self.x2, &self.out] {
            if mem.depth() != depth || mem.width() != self.x1.width() {
                return Err(err(
                    &format!("{}.mem", mem.name()),
                    "shape differs from x1.mem".into(),
                ));
            }
        }
        if self.q.depth() != depth * 4 || self.q.width() != 1 {
            return Err(err("q.mem", format!("expected {}x1", depth * 4)));
        }
        let m = &self.meta;
        if m.primitive_count > depth {
            return Err(err("meta.txt", "more primitives than element slots".into()));
        }
        if m.line_names.len() != m.input_count + m.primitive_count
            || m.line_names.len() > self.m.depth()
        {
            return Err(err("meta.txt", "line table does not match counts".into()));
        }
        if m.outputs.iter().any(|&o| o >= m.line_names.len()) {
            return Err(err("meta.txt", "output refers to an unknown line".into()));
        }
        Ok(())
    }

    fn meta_text(&self) -> String {
        let m = &self.meta;
        let mut s = format!(
            "inputs {}\nprimitives {}\nlines {}\n",
            m.input_count,
            m.primitive_count,
            self.m.depth()
        );
        for (i, name) in m.line_names.iter().enumerate() {
            s.push_str(&format!("line {i} {name}\n"));
        }
        let outs: Vec<String> = m.outputs.iter().map(|o| o.to_string()).collect();
        s.push_str(&format!("outputs {}\n", outs.join(" ")).replace(" \n", "\n"));
        s
    }
}

fn parse_meta(text: &str) -> Result<(ImageMeta, usize)> {
    let err = |message: String| Error::ImageFormat {
        file: "meta.txt".into(),
        message,
    };
    let mut inputs = None;
    let mut prims = None;
    let mut lines = None;
    let mut names = Vec::new();
    let mut outputs = None;
    for raw in text.lines() {
        let f: Vec<&str> = raw.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("bad number `{s}` in `{raw}`")))
        };
        match f.as_slice() {
            [] => {}
            ["inputs", n] => inputs = Some(num(n)?),
            ["primitives", n] => prims = Some(num(n)?),
            ["lines", n] => lines = Some(num(n)?),
            ["line", i, name] => {
                if num(i)? != names.len() {
                    return Err(err(format!("line table out of order at `{raw}`")));
                }
                names.push(name.to_string());
            }
            ["outputs", rest @ ..] => {
                outputs = Some(rest.iter().map(|s| num(s)).collect::<Result<Vec<_>>>()?)
            }
            _ => return Err(err(format!("unrecognized entry `{raw}`"))),
        }
    }
    let missing = |what: &str| err(format!("missing `{what}` entry"));
    Ok((
        ImageMeta {
            input_count: inputs.ok_or_else(|| missing("inputs"))?,
            primitive_count: prims.ok_or_else(|| missing("primitives"))?,
            line_names: names,
            outputs: outputs.ok_or_else(|| missing("outputs"))?,
        },
        lines.ok_or_else(|| missing("lines"))?,
    ))
}

/// The `Q[0]` mode flag: reading operands from `M` or writing a result to it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Read,
    Write,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Phase {
    LoadInput,
    ReadFirst,
    ReadSecond,
    Evaluate,
    Done,
}

/// Counters of the control unit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EmuState {
    pub element: usize,
    pub input: usize,
    pub pattern: usize,
    pub cycle: u64,
    pub mode: Mode,
}

pub struct Emulator<'a> {
    img: &'a MemoryImages,
    m: Memory,
    /// Which `m` words were written during the current pattern.
    written: Vec<bool>,
    state: EmuState,
    phase: Phase,
    first: bool,
    second: bool,
}

impl<'a> Emulator<'a> {
    pub fn new(img: &'a MemoryImages) -> Self {
        Emulator {
            img,
            m: img.m.clone(),
            written: vec![false; img.m.depth()],
            state: EmuState {
                element: 0,
                input: 0,
                pattern: 0,
                cycle: 0,
                mode: Mode::Write,
            },
            phase: Phase::Done,
            first: false,
            second: false,
        }
    }

    pub fn state(&self) -> EmuState {
        self.state
    }

    fn seq_err(&self, message: String) -> Error {
        Error::EmuSequenceError(format!(
            "pattern {}, element {}: {message}",
            self.state.pattern + 1,
            self.state.element
        ))
    }

    fn read_m(&self, mem: &Memory) -> Result<bool> {
        let e = self.state.element;
        let addr = mem
            .read(e)
            .ok_or_else(|| self.seq_err(format!("element slot beyond {} memory", mem.name())))?
            as usize;
        if !self.written.get(addr).copied().unwrap_or(false) {
            return Err(self.seq_err(format!(
                "{} names line {addr}, which holds no value yet",
                mem.name()
            )));
        }
        Ok(self.m.read(addr).unwrap() == 1)
    }

    fn start_pattern(&mut self) {
        self.written.iter_mut().for_each(|w| *w = false);
        self.state.input = 0;
        self.state.element = 0;
        self.phase = if self.img.meta.input_count > 0 {
            Phase::LoadInput
        } else if self.img.meta.primitive_count > 0 {
            Phase::ReadFirst
        } else {
            Phase::Done
        };
    }

    fn after_element(&mut self) {
        self.state.element += 1;
        self.phase = if self.state.element < self.img.meta.primitive_count {
            Phase::ReadFirst
        } else {
            Phase::Done
        };
    }

    /// Advances one clock cycle.
    fn step(&mut self, pattern: &[bool]) -> Result<()> {
        match self.phase {
            Phase::Done => return Ok(()),
            Phase::LoadInput => {
                let i = self.state.input;
                self.state.mode = Mode::Write;
                self.m.write(i, pattern[i] as u64);
                self.written[i] = true;
                self.state.input += 1;
                if self.state.input == self.img.meta.input_count {
                    self.phase = if self.img.meta.primitive_count > 0 {
                        Phase::ReadFirst
                    } else {
                        Phase::Done
                    };
                }
            }
            Phase::ReadFirst => {
                self.state.mode = Mode::Read;
                self.first = self.read_m(&self.img.x1)?;
                self.phase = Phase::ReadSecond;
            }
            Phase::ReadSecond => {
                self.state.mode = Mode::Read;
                self.second = self.read_m(&self.img.x2)?;
                self.phase = Phase::Evaluate;
            }
            Phase::Evaluate => {
                self.state.mode = Mode::Write;
                let e = self.state.element;
                let pair = (self.first as usize) << 1 | self.second as usize;
                let value = self
                    .img
                    .q
                    .read(e * 4 + pair)
                    .ok_or_else(|| self.seq_err("element beyond q memory".into()))?;
                let out = self.img.out.read(e).unwrap() as usize;
                if out < self.img.meta.input_count || out >= self.img.meta.line_names.len() {
                    return Err(
                        self.seq_err(format!("output address {out} is not an element line"))
                    );
                }
                self.m.write(out, value);
                self.written[out] = true;
                self.after_element();
            }
        }
        self.state.cycle += 1;
        Ok(())
    }

    /// Runs every pattern; returns the output table and total cycle count.
    pub fn run(&mut self, patterns: &PatternSet) -> Result<(OutputTable, u64)> {
        let meta = &self.img.meta;
        if meta.primitive_count > self.img.x1.depth() {
            return Err(Error::EmuSequenceError(format!(
                "{} primitives but only {} element slots",
                meta.primitive_count,
                self.img.x1.depth()
            )));
        }
        let aligned = patterns.align_to(&meta.line_names[..meta.input_count], &meta.line_names)?;
        let mut table = OutputTable {
            outputs: meta
                .outputs
                .iter()
                .map(|&o| meta.line_names[o].clone())
                .collect(),
            rows: Vec::new(),
        };
        let start = self.state.cycle;
        for (t, (row, inputs)) in patterns.rows.iter().zip(&aligned).enumerate() {
            self.state.pattern = t;
            self.start_pattern();
            while self.phase != Phase::Done {
                self.step(inputs)?;
            }
            let values = meta
                .outputs
                .iter()
                .map(|&o| {
                    if self.written[o] {
                        Ok(self.m.read(o).unwrap() == 1)
                    } else {
                        Err(self.seq_err(format!("output line {o} was never written")))
                    }
                })
                .collect::<Result<_>>()?;
            table.rows.push(OutputRow {
                pattern: row.clone(),
                values,
            });
        }
        Ok((table, self.state.cycle - start))
    }
}

pub fn run_emulator(img: &MemoryImages, patterns: &PatternSet) -> Result<(OutputTable, u64)> {
    Emulator::new(img).run(patterns)
}

pub fn dump_images(img: &MemoryImages, dir: &Path) -> Result<()> {
    img.dump(dir)
}

pub fn load_images(dir: &Path) -> Result<MemoryImages> {
    MemoryImages::load(dir)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::parse_netlist;
    use crate::sim::simulate_batch;

    const SAMPLE: &str = "inputs 1 2 3 4 5 6
gate A 1 1 2
gate 7 1 3 4
gate 8 7 A 7
gate 9 7 7 5
gate B 14 8 6
gate C 14 6 9
outputs B C
";

    #[test]
    fn sample_layout() {
        let c = parse_netlist(SAMPLE).unwrap();
        let img = assemble_images(&c).unwrap();
        assert_eq!(
            [
                img.x1.depth(),
                img.x2.depth(),
                img.out.depth(),
                img.q.depth(),
                img.m.depth()
            ],
            [8, 8, 8, 32, 16]
        );
        assert_eq!(img.x1.width(), 4);
        assert_eq!(&img.q.words()[0..4], [0, 0, 0, 1]);
        assert_eq!(img.meta.primitive_count, 6);
        assert_eq!(
            img.meta.line_names,
            ["1", "2", "3", "4", "5", "6", "A", "7", "8", "9", "B", "C"]
        );
        // element 2 is 8 = OR(A, 7)
        assert_eq!(
            [img.x1.words()[2], img.x2.words()[2], img.out.words()[2]],
            [6, 7, 8]
        );
        assert_eq!(&img.q.words()[8..12], [0, 1, 1, 1]);
        assert_eq!(img.meta.outputs, [10, 11]);
    }

    #[test]
    fn single_gate_out_ram() {
        let c = parse_netlist("inputs a b\ngate y 6 a b\n").unwrap();
        let img = assemble_images(&c).unwrap();
        assert_eq!(img.out.words()[0], 2);
    }

    #[test]
    fn sample_matches_simulator_and_cycle_count() {
        let c = parse_netlist(SAMPLE).unwrap();
        let img = assemble_images(&c).unwrap();
        let one = PatternSet::parse("patterns 1 2 3 4 5 6\n111110\n").unwrap();
        let (t, cycles) = run_emulator(&img, &one).unwrap();
        assert_eq!(cycles, 24);
        assert_eq!(t.to_string(), "111110 : B=1 C=1\n");
        let all = PatternSet::exhaustive(&c);
        let (t, cycles) = run_emulator(&img, &all).unwrap();
        assert_eq!(t, simulate_batch(&c, &all).unwrap());
        assert_eq!(cycles, 64 * 24);
        let (t, cycles) = run_emulator(&img, &PatternSet::empty_for(&c)).unwrap();
        assert!(t.rows.is_empty());
        assert_eq!(cycles, 0);
    }

    #[test]
    fn capacity_and_arity() {
        let wide = parse_netlist("inputs a b c\ngate y 0b00000001 a b c\n").unwrap();
        assert!(matches!(
            assemble_images(&wide),
            Err(Error::UnsupportedArity { arity: 3, .. })
        ));
        let mut text = String::from("inputs a b\n");
        for i in 0..9 {
            text.push_str(&format!("gate g{i} 6 a b\n"));
        }
        let big = parse_netlist(&text).unwrap();
        assert!(matches!(
            assemble_images(&big),
            Err(Error::CapacityExceeded(_))
        ));
        let cfg = EmuConfig::fitting(&big);
        assert_eq!((cfg.elements, cfg.lines), (16, 16));
        assemble_images_with(&big, cfg).unwrap();
    }

    #[test]
    fn hand_written_and_gate() {
        let mut img = MemoryImages {
            x1: Memory::new("x1", 8, 4),
            x2: Memory::new("x2", 8, 4),
            out: Memory::new("out", 8, 4),
            q: Memory::new("q", 32, 1),
            m: Memory::new("m", 16, 1),
            meta: ImageMeta {
                input_count: 2,
                primitive_count: 1,
                line_names: vec!["a".into(), "b".into(), "y".into()],
                outputs: vec![2],
            },
        };
        img.x1.write(0, 0);
        img.x2.write(0, 1);
        img.out.write(0, 2);
        img.q.write(3, 1);
        let p = PatternSet::parse("patterns a b\n00\n01\n10\n11\n").unwrap();
        let (t, cycles) = run_emulator(&img, &p).unwrap();
        assert_eq!(t.to_string(), "00 : y=0\n01 : y=0\n10 : y=0\n11 : y=1\n");
        assert_eq!(cycles, 4 * (2 + 3));
    }

    #[test]
    fn sequencing_error_on_unwritten_line() {
        let c = parse_netlist("inputs a b\ngate y 1 a b\ngate z 1 y b\n").unwrap();
        let mut img = assemble_images(&c).unwrap();
        // make element 0 read element 1's output
        img.x1.write(0, 3);
        let p = PatternSet::exhaustive(&c);
        assert!(matches!(
            run_emulator(&img, &p),
            Err(Error::EmuSequenceError(_))
        ));
    }

    #[test]
    fn dump_load_round_trip() {
        let c = parse_netlist(SAMPLE).unwrap();
        let img = assemble_images(&c).unwrap();
        let dir = tempfile::tempdir().unwrap();
        img.dump(dir.path()).unwrap();
        let q = fs::read_to_string(dir.path().join("q.mem")).unwrap();
        assert!(q.starts_with("memory q 32x1\n0\n0\n0\n1\n"));
        assert_eq!(q.lines().count(), 33);
        assert_eq!(MemoryImages::load(dir.path()).unwrap(), img);
    }

    #[test]
    fn truncated_image_is_rejected() {
        let c = parse_netlist(SAMPLE).unwrap();
        let img = assemble_images(&c).unwrap();
        let dir = tempfile::tempdir().unwrap();
        img.dump(dir.path()).unwrap();
        let path = dir.path().join("q.mem");
        let text = fs::read_to_string(&path).unwrap();
        let truncated: Vec<&str> = text.lines().take(20).collect();
        fs::write(&path, truncated.join("\n")).unwrap();
        assert!(matches!(
            MemoryImages::load(dir.path()),
            Err(Error::ImageFormat { .. })
        ));
    }

    #[test]
    fn memory_parse_errors() {
        assert!(Memory::parse("x1", "memory x2 8x4\n").is_err());
        assert!(Memory::parse("x1", "memory x1 2x4\n0000\n00a0\n").is_err());
        assert!(Memory::parse("x1", "memory x1 2x4\n0000\n0000\n0000\n").is_err());
        let m = Memory::parse("x1", "memory x1 2x4\n0000\n1010\n").unwrap();
        assert_eq!(m.words(), [0, 10]);
    }
}
