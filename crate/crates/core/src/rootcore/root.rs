use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Classical Lie type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl LieType {
    pub const ALL: [LieType; 4] = [LieType::A, LieType::B, LieType::C, LieType::D];

    /// Smallest rank accepted for this type.
    pub fn min_rank(self) -> usize {
        match self {
            LieType::A => 1,
            LieType::B | LieType::C => 2,
            LieType::D => 3,
        }
    }

    /// Closed-form number of positive roots at the given rank.
    pub fn positive_root_count(self, rank: usize) -> usize {
        match self {
            LieType::A => rank * (rank + 1) / 2,
            LieType::B | LieType::C => rank * rank,
            LieType::D => rank * (rank - 1),
        }
    }

    /// Closed-form order of the Weyl group.
    pub fn weyl_order(self, rank: usize) -> u64 {
        let fact: u64 = (1..=rank as u64).product();
        match self {
            LieType::A => fact * (rank as u64 + 1),
            LieType::B | LieType::C => fact << rank,
            LieType::D => fact << (rank - 1),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
        };
        f.write_str(c)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::Parse(format!("unknown Lie type {other:?}"))),
        }
    }
}

/// A root, stored as its coefficient vector over the simple roots `α_1..α_n`.
///
/// Values handed out by [`RootSystem`](super::RootSystem) are always genuine
/// roots; the plain vector arithmetic helpers below may produce non-roots and
/// are only used for intermediate sums.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub(crate) Vec<i32>);

impl Root {
    pub(crate) fn from_coeffs(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn negate(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Coefficient of `α_i` (1-based).
    pub fn coeff(&self, i: usize) -> i32 {
        self.0[i - 1]
    }

    /// Componentwise sum; the result need not be a root.
    pub fn plus(&self, other: &Root) -> Vec<i32> {
        self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()
    }

    /// Componentwise difference `self - other`; the result need not be a root.
    pub fn minus(&self, other: &Root) -> Vec<i32> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    /// Text form: comma-separated signed coefficients, e.g. `1,1,0`.
    pub fn to_text(&self) -> String {
        self.0.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses the comma-separated coefficient form without validating rootness.
pub fn parse_coeffs(s: &str) -> Result<Vec<i32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i32>()
                .map_err(|_| Error::Parse(format!("bad root coefficient {t:?} in {s:?}")))
        })
        .collect()
}

/// Parses a space-separated list of 1-based reflection indices. The empty
/// string is the identity.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad reflection index {t:?} in {s:?}")))
        })
        .collect()
}

pub fn word_to_text(word: &[usize]) -> String {
    word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}
