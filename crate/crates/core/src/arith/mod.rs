//! Integer arithmetic used by the decision procedures: 2-adic valuations,
//! gcds with the empty-set convention, integer kernels and small polynomials.

pub mod lattice;
pub mod poly;

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

/// The 2-adic valuation of an integer; `ν₂(0) = ∞` compares above every
/// finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Nu2 {
    Finite(u32),
    Infinite,
}

pub fn nu2(k: i64) -> Nu2 {
    if k == 0 {
        Nu2::Infinite
    } else {
        Nu2::Finite(k.trailing_zeros())
    }
}

impl fmt::Display for Nu2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nu2::Finite(e) => write!(f, "{e}"),
            Nu2::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Nu2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Nu2::Finite(e) => s.serialize_u32(*e),
            Nu2::Infinite => s.serialize_str("inf"),
        }
    }
}

/// ν₂ of a set of integers, keyed by value.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ValuationTable(BTreeMap<i64, Nu2>);

impl ValuationTable {
    pub fn new(values: impl IntoIterator<Item = i64>) -> Self {
        ValuationTable(values.into_iter().map(|v| (v, nu2(v))).collect())
    }

    pub fn get(&self, value: i64) -> Option<Nu2> {
        self.0.get(&value).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Nu2)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// gcd of the absolute values; the gcd of the empty set (or of only zeros) is 0.
pub fn gcd_all(values: impl IntoIterator<Item = i64>) -> u64 {
    values.into_iter().fold(0u64, |acc, v| acc.gcd(&v.unsigned_abs()))
}
