//! Q-vectors: the output column of a truth table, addressed by the
//! concatenated input values.
//!
//! A `k`-input function is stored as `2^k` bits. The first listed input is
//! the most significant address bit, so inputs `[1, 0]` read bit 2. The
//! decimal id of a vector reads address 0 as the most significant digit,
//! which gives the familiar numbering AND = 1, OR = 7, NAND = 14.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Largest supported arity (a 64 Ki-bit vector).
pub const MAX_ARITY: usize = 16;

/// Largest arity for which [`enumerate_functions`] will run.
pub const MAX_ENUMERATION_ARITY: usize = 4;

const WORD: usize = 64;

/// Concatenates input values into a table address, first input most significant.
pub fn address_of(inputs: &[bool]) -> Result<usize> {
    if inputs.is_empty() || inputs.len() > MAX_ARITY {
        return Err(Error::InvalidArity(format!(
            "address needs 1..={MAX_ARITY} input bits, got {}",
            inputs.len()
        )));
    }
    Ok(inputs.iter().fold(0, |acc, &b| (acc << 1) | b as usize))
}

/// Splits an address back into `arity` input values, first input first.
pub fn inputs_of(address: usize, arity: usize) -> Vec<bool> {
    (0..arity)
        .map(|i| (address >> (arity - 1 - i)) & 1 == 1)
        .collect()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QVector {
    arity: usize,
    words: Vec<u64>,
}

impl QVector {
    fn check_arity(arity: usize) -> Result<()> {
        if arity == 0 || arity > MAX_ARITY {
            return Err(Error::InvalidArity(format!(
                "Q-vector arity must be in 1..={MAX_ARITY}, got {arity}"
            )));
        }
        Ok(())
    }

    pub fn zeros(arity: usize) -> Result<Self> {
        Self::check_arity(arity)?;
        let len = 1usize << arity;
        Ok(QVector {
            arity,
            words: vec![0; len.div_ceil(WORD)],
        })
    }

    /// Builds a vector by asking `f` for the output at every address.
    pub fn from_fn(arity: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut q = Self::zeros(arity)?;
        for a in 0..q.len() {
            if f(a) {
                q.words[a / WORD] |= 1 << (a % WORD);
            }
        }
        Ok(q)
    }

    /// Builds a vector from its bits, address 0 first. The length must be `2^k`, `k >= 1`.
    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let len = bits.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidArity(format!(
                "Q-vector length must be a power of two >= 2, got {len}"
            )));
        }
        Self::from_fn(len.trailing_zeros() as usize, |a| bits[a])
    }

    /// Converts a complete truth table (each input combination exactly once).
    pub fn from_truth_table<I: AsRef<[bool]>>(rows: &[(I, bool)]) -> Result<Self> {
        let Some((first, _)) = rows.first() else {
            return Err(Error::IncompleteTable("table has no rows".into()));
        };
        let arity = first.as_ref().len();
        Self::check_arity(arity)?;
        let len = 1usize << arity;
        let mut seen = vec![None; len];
        for (inputs, out) in rows {
            let inputs = inputs.as_ref();
            if inputs.len() != arity {
                return Err(Error::InvalidArity(format!(
                    "row has {} inputs, expected {arity}",
                    inputs.len()
                )));
            }
            let a = address_of(inputs)?;
            if seen[a].replace(*out).is_some() {
                return Err(Error::IncompleteTable(format!(
                    "input combination {} appears twice",
                    bit_string(inputs)
                )));
            }
        }
        if let Some(a) = seen.iter().position(Option::is_none) {
            return Err(Error::IncompleteTable(format!(
                "input combination {} is missing",
                bit_string(&inputs_of(a, arity))
            )));
        }
        Self::from_fn(arity, |a| seen[a] == Some(true))
    }

    /// Inverse of [`QVector::decimal_id`].
    pub fn from_id(arity: usize, id: &BigUint) -> Result<Self> {
        Self::check_arity(arity)?;
        let len = 1usize << arity;
        if id.bits() > len as u64 {
            return Err(Error::InvalidFunctionNumber {
                arity,
                id: id.to_string(),
            });
        }
        let digits = if id.is_zero() {
            Vec::new()
        } else {
            id.to_radix_be(2)
        };
        let pad = len - digits.len();
        Self::from_fn(arity, |a| a >= pad && digits[a - pad] == 1)
    }

    pub fn from_id_u64(arity: usize, id: u64) -> Result<Self> {
        Self::from_id(arity, &BigUint::from(id))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of addressable bits, `2^arity`.
    pub fn len(&self) -> usize {
        1 << self.arity
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Reads the bit at `address`. Panics when `address >= len()`.
    #[inline]
    pub fn bit(&self, address: usize) -> bool {
        assert!(address < self.len(), "address {address} out of range");
        self.words[address / WORD] >> (address % WORD) & 1 == 1
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(|a| self.bit(a))
    }

    /// `Y = Q(X)`: one read at the concatenated input address.
    pub fn evaluate(&self, inputs: &[bool]) -> Result<bool> {
        if inputs.len() != self.arity {
            return Err(Error::InvalidArity(format!(
                "Q-vector of arity {} evaluated with {} inputs",
                self.arity,
                inputs.len()
            )));
        }
        Ok(self.bit(address_of(inputs)?))
    }

    /// The bits read as a binary numeral, address 0 most significant.
    pub fn decimal_id(&self) -> BigUint {
        let digits: Vec<u8> = self.bits().map(u8::from).collect();
        BigUint::from_radix_be(&digits, 2).expect("binary digits are valid")
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::InvalidArity(format!(
                "operands have arity {} and {}",
                self.arity, other.arity
            )));
        }
        Ok(QVector {
            arity: self.arity,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn or(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn not(&self) -> Self {
        let mut q = QVector {
            arity: self.arity,
            words: self.words.iter().map(|w| !w).collect(),
        };
        if self.len() < WORD {
            q.words[0] &= (1u64 << self.len()) - 1;
        }
        q
    }

    /// Binary text grouped in nibbles, e.g. `1111 1111 1111 0001`.
    pub fn to_grouped_string(&self) -> String {
        let s = self.to_string();
        s.as_bytes()
            .chunks(4)
            .map(|c| std::str::from_utf8(c).unwrap())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses a literal where a bare decimal id takes its arity from context.
    ///
    /// Accepted forms: `0b1110`, `14:2`, and (with `arity`) `14`.
    pub fn parse_literal(text: &str, arity: Option<usize>) -> std::result::Result<Self, String> {
        if let Some(bin) = text.strip_prefix("0b") {
            let bits = bin
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(format!("invalid binary digit `{c}` in `{text}`")),
                })
                .collect::<std::result::Result<Vec<_>, _>>()?;
            let q = QVector::from_bits(&bits).map_err(|e| e.to_string())?;
            if let Some(k) = arity {
                if q.arity != k {
                    return Err(format!("`{text}` has arity {}, expected {k}", q.arity));
                }
            }
            return Ok(q);
        }
        let (id_text, k) = match text.split_once(':') {
            Some((id, k)) => {
                let k: usize = k
                    .parse()
                    .map_err(|_| format!("invalid arity in `{text}`"))?;
                if let Some(expected) = arity {
                    if k != expected {
                        return Err(format!("`{text}` has arity {k}, expected {expected}"));
                    }
                }
                (id, k)
            }
            None => match arity {
                Some(k) => (text, k),
                None => return Err(format!("decimal literal `{text}` needs an explicit arity")),
            },
        };
        let id: BigUint = id_text
            .parse()
            .map_err(|_| format!("invalid Q-vector literal `{text}`"))?;
        QVector::from_id(k, &id).map_err(|e| e.to_string())
    }
}

impl FromStr for QVector {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        QVector::parse_literal(s, None)
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QVector({}:{})", self.arity, self)
    }
}

/// All `2^(2^arity)` functions of `arity` inputs, in increasing id order.
pub fn enumerate_functions(arity: usize) -> Result<Vec<QVector>> {
    if arity > MAX_ENUMERATION_ARITY {
        return Err(Error::EnumerationTooLarge(arity));
    }
    QVector::check_arity(arity)?;
    let count = 1u64 << (1 << arity);
    (0..count)
        .map(|id| QVector::from_id_u64(arity, id))
        .collect()
}

pub(crate) fn bit_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}
