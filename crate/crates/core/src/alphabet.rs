//! The sixteen-symbol two-stroke alphabet, cube coverages built from it, and
//! co-edge minimization.
//!
//! A [`Symbol2`] names a subset of the four values an input pair can take
//! (`00`, `01`, `10`, `11`) as a 4-bit unitary code, written with the `00`
//! position first: `Q = 1000` is `{00}`, `V = 1110` is `{00, 01, 10}`. Set
//! algebra on symbols is bitwise algebra on codes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qvector::{inputs_of, QVector};

/// Symbol names indexed by code; bit `i` of the code is pair value `i`.
const SYMBOL_NAMES: [&str; 16] = [
    "∅", "Q", "E", "A", "H", "O", "P", "V", "J", "S", "I", "L", "B", "F", "C", "Y",
];

/// A subset of `{00, 01, 10, 11}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol2(u8);

impl Symbol2 {
    pub const EMPTY: Symbol2 = Symbol2(0);
    pub const Q: Symbol2 = Symbol2(0b0001);
    pub const E: Symbol2 = Symbol2(0b0010);
    pub const H: Symbol2 = Symbol2(0b0100);
    pub const J: Symbol2 = Symbol2(0b1000);
    pub const A: Symbol2 = Symbol2(0b0011);
    pub const B: Symbol2 = Symbol2(0b1100);
    pub const O: Symbol2 = Symbol2(0b0101);
    pub const I: Symbol2 = Symbol2(0b1010);
    pub const S: Symbol2 = Symbol2(0b1001);
    pub const P: Symbol2 = Symbol2(0b0110);
    pub const C: Symbol2 = Symbol2(0b1110);
    pub const F: Symbol2 = Symbol2(0b1101);
    pub const L: Symbol2 = Symbol2(0b1011);
    pub const V: Symbol2 = Symbol2(0b0111);
    pub const Y: Symbol2 = Symbol2(0b1111);

    pub fn from_code(code: u8) -> Symbol2 {
        Symbol2(code & 0xf)
    }

    /// The primitive symbol for one pair value (`0..4`).
    pub fn point(pair: usize) -> Symbol2 {
        assert!(pair < 4);
        Symbol2(1 << pair)
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn name(self) -> &'static str {
        SYMBOL_NAMES[self.0 as usize]
    }

    /// Unitary code text, `00` position first (`V` is `1110`).
    pub fn code_string(self) -> String {
        (0..4)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }

    pub fn contains(self, pair: usize) -> bool {
        pair < 4 && self.0 >> pair & 1 == 1
    }

    pub fn values(self) -> impl Iterator<Item = usize> {
        (0..4).filter(move |&p| self.contains(p))
    }

    pub fn union(self, other: Symbol2) -> Symbol2 {
        Symbol2(self.0 | other.0)
    }

    pub fn intersect(self, other: Symbol2) -> Symbol2 {
        Symbol2(self.0 & other.0)
    }

    pub fn complement(self) -> Symbol2 {
        Symbol2(!self.0 & 0xf)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn all() -> impl Iterator<Item = Symbol2> {
        (0..16).map(Symbol2)
    }
}

impl fmt::Display for Symbol2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Symbol2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.name(), self.code_string())
    }
}

impl FromStr for Symbol2 {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SYMBOL_NAMES
            .iter()
            .position(|&n| n == s)
            .map(|c| Symbol2(c as u8))
            .ok_or_else(|| format!("unknown symbol `{s}`"))
    }
}

/// A subset of `{0, 1}` for a trailing unpaired input: `0`, `1`, `X` (either) or `-` (none).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol1(u8);

impl Symbol1 {
    pub const EMPTY: Symbol1 = Symbol1(0b00);
    pub const ZERO: Symbol1 = Symbol1(0b01);
    pub const ONE: Symbol1 = Symbol1(0b10);
    pub const ANY: Symbol1 = Symbol1(0b11);

    pub fn point(value: bool) -> Symbol1 {
        if value {
            Symbol1::ONE
        } else {
            Symbol1::ZERO
        }
    }

    pub fn contains(self, value: bool) -> bool {
        self.0 >> value as u8 & 1 == 1
    }

    pub fn union(self, other: Symbol1) -> Symbol1 {
        Symbol1(self.0 | other.0)
    }

    pub fn intersect(self, other: Symbol1) -> Symbol1 {
        Symbol1(self.0 & other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn name(self) -> &'static str {
        ["-", "0", "1", "X"][self.0 as usize]
    }
}

impl fmt::Display for Symbol1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Symbol1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symbol1 {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "-" => Ok(Symbol1::EMPTY),
            "0" => Ok(Symbol1::ZERO),
            "1" => Ok(Symbol1::ONE),
            "X" => Ok(Symbol1::ANY),
            _ => Err(format!("unknown single-input symbol `{s}`")),
        }
    }
}

/// A product of symbols over consecutive input pairs (plus an optional
/// trailing single input) and the output value it asserts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cube {
    pub pairs: Vec<Symbol2>,
    pub tail: Option<Symbol1>,
    pub out: bool,
}

impl Cube {
    /// The cube covering exactly one input combination.
    pub fn minterm(inputs: &[bool], out: bool) -> Cube {
        let pairs = inputs
            .chunks_exact(2)
            .map(|p| Symbol2::point((p[0] as usize) << 1 | p[1] as usize))
            .collect();
        let tail = (inputs.len() % 2 == 1).then(|| Symbol1::point(inputs[inputs.len() - 1]));
        Cube { pairs, tail, out }
    }

    pub fn arity(&self) -> usize {
        2 * self.pairs.len() + self.tail.is_some() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.iter().any(|s| s.is_empty()) || self.tail.is_some_and(|t| t.is_empty())
    }

    fn same_shape(&self, other: &Cube) -> bool {
        self.pairs.len() == other.pairs.len() && self.tail.is_some() == other.tail.is_some()
    }

    pub fn covers(&self, inputs: &[bool]) -> Result<bool> {
        if inputs.len() != self.arity() {
            return Err(Error::InvalidArity(format!(
                "cube over {} inputs tested with {}",
                self.arity(),
                inputs.len()
            )));
        }
        let pairs_ok = self
            .pairs
            .iter()
            .zip(inputs.chunks_exact(2))
            .all(|(s, p)| s.contains((p[0] as usize) << 1 | p[1] as usize));
        let tail_ok = self
            .tail
            .is_none_or(|t| t.contains(inputs[inputs.len() - 1]));
        Ok(pairs_ok && tail_ok)
    }

    fn intersects(&self, other: &Cube) -> bool {
        self.pairs
            .iter()
            .zip(&other.pairs)
            .all(|(a, b)| !a.intersect(*b).is_empty())
            && match (self.tail, other.tail) {
                (Some(a), Some(b)) => !a.intersect(b).is_empty(),
                _ => true,
            }
    }

    /// Co-edge merge: defined when both cubes assert the same output and
    /// differ in at most one position, which becomes the union.
    pub fn merge(&self, other: &Cube) -> Option<Cube> {
        if self.out != other.out || !self.same_shape(other) {
            return None;
        }
        let pair_diffs: Vec<usize> = (0..self.pairs.len())
            .filter(|&i| self.pairs[i] != other.pairs[i])
            .collect();
        let tail_diff = self.tail != other.tail;
        match (pair_diffs.as_slice(), tail_diff) {
            ([], false) => Some(self.clone()),
            ([i], false) => {
                let mut merged = self.clone();
                merged.pairs[*i] = self.pairs[*i].union(other.pairs[*i]);
                Some(merged)
            }
            ([], true) => {
                let mut merged = self.clone();
                merged.tail = Some(self.tail.unwrap().union(other.tail.unwrap()));
                Some(merged)
            }
            _ => None,
        }
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.pairs {
            write!(f, "{s} ")?;
        }
        if let Some(t) = self.tail {
            write!(f, "{t} ")?;
        }
        write!(f, "-> {}", self.out as u8)
    }
}

/// A set of cubes of identical shape jointly describing a function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coverage {
    arity: usize,
    cubes: Vec<Cube>,
}

impl Coverage {
    pub fn new(arity: usize, cubes: Vec<Cube>) -> Result<Coverage> {
        if arity == 0 {
            return Err(Error::InvalidArity(
                "coverage arity must be at least 1".into(),
            ));
        }
        if let Some(c) = cubes.iter().find(|c| c.arity() != arity) {
            return Err(Error::InvalidArity(format!(
                "cube `{c}` has {} inputs, coverage has {arity}",
                c.arity()
            )));
        }
        Ok(Coverage { arity, cubes })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    /// One minterm cube per address, in address order.
    pub fn from_qvector(q: &QVector) -> Coverage {
        let k = q.arity();
        let cubes = (0..q.len())
            .map(|a| Cube::minterm(&inputs_of(a, k), q.bit(a)))
            .collect();
        Coverage { arity: k, cubes }
    }

    /// Parses the line format `V -> 1`, `Q E X -> 0`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Coverage> {
        let mut cubes = Vec::new();
        let mut arity = None;
        for (ln, raw) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            let col = |needle: &str| raw.find(needle).map_or(1, |p| raw[..p].chars().count() + 1);
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| Error::parse("coverage", ln, 1, "expected `<symbols> -> 0|1`"))?;
            let out = match rhs.trim() {
                "0" => false,
                "1" => true,
                other => {
                    return Err(Error::parse(
                        "coverage",
                        ln,
                        col("->") + 2,
                        format!("output must be 0 or 1, got `{other}`"),
                    ))
                }
            };
            let tokens: Vec<&str> = lhs.split_whitespace().collect();
            if tokens.is_empty() {
                return Err(Error::parse("coverage", ln, 1, "cube has no symbols"));
            }
            let mut pairs = Vec::new();
            let mut tail = None;
            for (i, tok) in tokens.iter().enumerate() {
                if let Ok(s) = tok.parse::<Symbol2>() {
                    if tail.is_some() {
                        return Err(Error::parse(
                            "coverage",
                            ln,
                            col(tok),
                            "pair symbol after the single-input symbol",
                        ));
                    }
                    pairs.push(s);
                } else if let Ok(s) = tok.parse::<Symbol1>() {
                    if i + 1 != tokens.len() {
                        return Err(Error::parse(
                            "coverage",
                            ln,
                            col(tok),
                            "single-input symbol must be last",
                        ));
                    }
                    tail = Some(s);
                } else {
                    return Err(Error::parse(
                        "coverage",
                        ln,
                        col(tok),
                        format!("unknown symbol `{tok}`"),
                    ));
                }
            }
            let cube = Cube { pairs, tail, out };
            match arity {
                None => arity = Some(cube.arity()),
                Some(k) if k != cube.arity() => {
                    return Err(Error::parse(
                        "coverage",
                        ln,
                        1,
                        format!("cube has {} inputs, earlier cubes have {k}", cube.arity()),
                    ))
                }
                _ => {}
            }
            cubes.push(cube);
        }
        let arity = arity.ok_or_else(|| Error::parse("coverage", 1, 1, "no cubes"))?;
        Coverage::new(arity, cubes)
    }

    fn check_consistent(&self) -> Result<()> {
        for (i, a) in self.cubes.iter().enumerate() {
            for b in &self.cubes[i + 1..] {
                if a.out != b.out && a.intersects(b) {
                    return Err(Error::InconsistentCoverage(format!(
                        "cubes `{a}` and `{b}` overlap with different outputs"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Applies co-edge merges until none is possible.
    ///
    /// Pairs are scanned in lexicographic index order; the first eligible
    /// pair `(i, j)` is replaced by the merged cube at position `i` and the
    /// scan restarts.
    pub fn minimize(&self) -> Result<Coverage> {
        self.check_consistent()?;
        let mut cubes = self.cubes.clone();
        'scan: loop {
            for i in 0..cubes.len() {
                for j in i + 1..cubes.len() {
                    if let Some(m) = cubes[i].merge(&cubes[j]) {
                        cubes[i] = m;
                        cubes.remove(j);
                        continue 'scan;
                    }
                }
            }
            break;
        }
        Ok(Coverage {
            arity: self.arity,
            cubes,
        })
    }

    pub fn to_qvector(&self) -> Result<QVector> {
        let k = self.arity;
        let mut bits = Vec::with_capacity(1 << k);
        let len = 1usize
            .checked_shl(k as u32)
            .filter(|_| k <= crate::qvector::MAX_ARITY)
            .ok_or_else(|| Error::InvalidArity(format!("coverage arity {k} too large")))?;
        for a in 0..len {
            let inputs = inputs_of(a, k);
            let mut value = None;
            for c in &self.cubes {
                if c.covers(&inputs)? {
                    match value {
                        Some(v) if v != c.out => {
                            return Err(Error::InconsistentCoverage(format!(
                                "address {a} is covered by both 0- and 1-cubes"
                            )))
                        }
                        _ => value = Some(c.out),
                    }
                }
            }
            bits.push(value.ok_or(Error::IncompleteCoverage(a))?);
        }
        QVector::from_bits(&bits)
    }
}

impl fmt::Display for Coverage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cubes {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// One cube per truth-table row, in row order.
pub fn encode_coverage<I: AsRef<[bool]>>(rows: &[(I, bool)]) -> Result<Coverage> {
    // completeness and arity checks
    let q = QVector::from_truth_table(rows)?;
    let cubes = rows
        .iter()
        .map(|(inputs, out)| Cube::minterm(inputs.as_ref(), *out))
        .collect();
    Coverage::new(q.arity(), cubes)
}

/// Parses a truth table: one `<input bits> <output bit>` row per line, `#` comments.
pub fn parse_truth_table(text: &str) -> Result<Vec<(Vec<bool>, bool)>> {
    let mut rows = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            [] => continue,
            [inputs, out] => {
                let inputs = parse_bits(inputs).ok_or_else(|| {
                    Error::parse(
                        "truth table",
                        ln,
                        1,
                        format!("invalid input bits `{inputs}`"),
                    )
                })?;
                let out = match *out {
                    "0" => false,
                    "1" => true,
                    _ => {
                        return Err(Error::parse(
                            "truth table",
                            ln,
                            raw.rfind(out).unwrap_or(0) + 1,
                            format!("output must be 0 or 1, got `{out}`"),
                        ))
                    }
                };
                rows.push((inputs, out));
            }
            _ => {
                return Err(Error::parse(
                    "truth table",
                    ln,
                    1,
                    "expected `<input bits> <output bit>`",
                ))
            }
        }
    }
    Ok(rows)
}

pub(crate) fn parse_bits(s: &str) -> Option<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })
        .collect()
}

/// Covered input addresses of a cube, for diagnostics and tests.
pub fn covered_addresses(cube: &Cube) -> Vec<usize> {
    let k = cube.arity();
    (0..1usize << k)
        .filter(|&a| cube.covers(&inputs_of(a, k)).unwrap_or(false))
        .collect()
}
