//! Second-level vectors: a set of `k`-input functions encoded as one bit per
//! function number.

use std::fmt;

use crate::error::{Error, Result};
use crate::qvector::{QVector, MAX_ENUMERATION_ARITY};

/// A set of functions of `arity` inputs; bit `f` is set iff function id `f` is a member.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FunctionSet {
    arity: usize,
    members: QVector,
}

impl FunctionSet {
    fn members_len(arity: usize) -> Result<usize> {
        if arity == 0 || arity > MAX_ENUMERATION_ARITY {
            return Err(Error::InvalidFunctionSet(format!(
                "arity must be in 1..={MAX_ENUMERATION_ARITY}, got {arity}"
            )));
        }
        Ok(1 << (1 << arity))
    }

    pub fn from_bits(arity: usize, bits: &[bool]) -> Result<Self> {
        let len = Self::members_len(arity)?;
        if bits.len() != len {
            return Err(Error::InvalidFunctionSet(format!(
                "arity {arity} needs {len} member bits, got {}",
                bits.len()
            )));
        }
        Ok(FunctionSet {
            arity,
            members: QVector::from_bits(bits)?,
        })
    }

    pub fn empty(arity: usize) -> Result<Self> {
        let len = Self::members_len(arity)?;
        Ok(FunctionSet {
            arity,
            members: QVector::zeros(len.trailing_zeros() as usize)?,
        })
    }

    pub fn full(arity: usize) -> Result<Self> {
        Ok(Self::empty(arity)?.complement())
    }

    pub fn from_ids(arity: usize, ids: impl IntoIterator<Item = usize>) -> Result<Self> {
        let len = Self::members_len(arity)?;
        let mut bits = vec![false; len];
        for id in ids {
            *bits.get_mut(id).ok_or_else(|| {
                Error::InvalidFunctionSet(format!(
                    "function id {id} out of range for arity {arity}"
                ))
            })? = true;
        }
        Self::from_bits(arity, &bits)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn contains(&self, id: usize) -> bool {
        id < self.members.len() && self.members.bit(id)
    }

    /// Whether the function described by `q` is a member.
    pub fn contains_function(&self, q: &QVector) -> bool {
        q.arity() == self.arity
            && u64::try_from(q.decimal_id()).is_ok_and(|id| self.contains(id as usize))
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .bits()
            .enumerate()
            .filter(|&(_, b)| b)
            .map(|(i, _)| i)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::InvalidFunctionSet(format!(
                "operands have arity {} and {}",
                self.arity, other.arity
            )));
        }
        Ok(())
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(FunctionSet {
            arity: self.arity,
            members: self.members.or(&other.members)?,
        })
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(FunctionSet {
            arity: self.arity,
            members: self.members.and(&other.members)?,
        })
    }

    pub fn complement(&self) -> Self {
        FunctionSet {
            arity: self.arity,
            members: self.members.not(),
        }
    }

    /// The membership vector viewed as a Q-vector over `2^arity` inputs.
    pub fn as_qvector(&self) -> &QVector {
        &self.members
    }
}

impl fmt::Display for FunctionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.members.fmt(f)
    }
}
