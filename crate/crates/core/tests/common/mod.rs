//! Brute-force reference evaluation, written without the library's
//! simulator: it re-reads the printed netlist and evaluates each output
//! recursively by line name.

#![allow(dead_code)]

use std::collections::HashMap;

use qlogic::{Circuit, OutputTable, PatternSet};

pub struct Oracle {
    inputs: Vec<String>,
    gates: HashMap<String, (Vec<char>, Vec<String>)>,
    pub outputs: Vec<String>,
}

impl Oracle {
    pub fn from_text(text: &str) -> Oracle {
        let mut o = Oracle {
            inputs: Vec::new(),
            gates: HashMap::new(),
            outputs: Vec::new(),
        };
        for line in text.lines() {
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.first() {
                Some(&"inputs") => o.inputs = words[1..].iter().map(|s| s.to_string()).collect(),
                Some(&"outputs") => o.outputs = words[1..].iter().map(|s| s.to_string()).collect(),
                Some(&"gate") => {
                    let ins: Vec<String> = words[3..].iter().map(|s| s.to_string()).collect();
                    let bits = match words[2].strip_prefix("0b") {
                        Some(b) => b.chars().collect(),
                        None => {
                            // decimal id, first table entry most significant
                            let id: u128 = words[2].split(':').next().unwrap().parse().unwrap();
                            let len = 1usize << ins.len();
                            (0..len)
                                .map(|i| {
                                    if id >> (len - 1 - i) & 1 == 1 {
                                        '1'
                                    } else {
                                        '0'
                                    }
                                })
                                .collect()
                        }
                    };
                    o.gates.insert(words[1].to_string(), (bits, ins));
                }
                _ => {}
            }
        }
        o
    }

    pub fn for_circuit(c: &Circuit) -> Oracle {
        Oracle::from_text(&c.to_string())
    }

    pub fn eval(&self, line: &str, pattern: &[bool]) -> bool {
        if let Some(i) = self.inputs.iter().position(|n| n == line) {
            return pattern[i];
        }
        let (bits, ins) = &self.gates[line];
        let mut addr = 0;
        for name in ins {
            addr = addr * 2 + self.eval(name, pattern) as usize;
        }
        bits[addr] == '1'
    }

    /// Every output for every assignment, first input as the high bit.
    pub fn table(&self) -> Vec<(Vec<bool>, Vec<bool>)> {
        let n = self.inputs.len();
        (0..1usize << n)
            .map(|a| {
                let p: Vec<bool> = (0..n).map(|i| a >> (n - 1 - i) & 1 == 1).collect();
                let v = self.outputs.iter().map(|o| self.eval(o, &p)).collect();
                (p, v)
            })
            .collect()
    }

    pub fn agrees_with(&self, t: &OutputTable) -> bool {
        t.outputs == self.outputs
            && t.rows.len() == 1 << self.inputs.len()
            && t.rows
                .iter()
                .zip(self.table())
                .all(|(r, (p, v))| r.pattern == p && r.values == v)
    }
}

pub const SAMPLE: &str = "inputs 1 2 3 4 5 6
gate A 1 1 2
gate 7 1 3 4
gate 8 7 A 7
gate 9 7 7 5
gate B 14 8 6
gate C 14 6 9
outputs B C
";

pub fn exhaustive(c: &Circuit) -> PatternSet {
    PatternSet::exhaustive(c)
}
