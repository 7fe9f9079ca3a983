use std::fmt;

use serde::{Deserialize, Serialize};

/// A 0/1 assignment over the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpinConfig {
    bits: Vec<bool>,
}

impl SpinConfig {
    pub fn zeros(n: usize) -> Self {
        SpinConfig {
            bits: vec![false; n],
        }
    }

    pub fn ones(n: usize) -> Self {
        SpinConfig {
            bits: vec![true; n],
        }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        SpinConfig { bits }
    }

    /// Low `n` bits of `mask`, vertex `v` at bit `v`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        assert!(n <= 64);
        SpinConfig {
            bits: (0..n).map(|v| mask >> v & 1 == 1).collect(),
        }
    }

    pub fn to_mask(&self) -> Option<u64> {
        (self.bits.len() <= 64).then(|| {
            self.bits
                .iter()
                .enumerate()
                .fold(0u64, |m, (v, &b)| m | (u64::from(b) << v))
        })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, v: usize) -> bool {
        self.bits[v]
    }

    pub fn set(&mut self, v: usize, value: bool) {
        self.bits[v] = value;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Coordinatewise `self <= other`.
    pub fn le(&self, other: &SpinConfig) -> bool {
        self.bits.len() == other.bits.len()
            && self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }
}

impl fmt::Display for SpinConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ternary {
    Zero,
    One,
    Unknown,
}

/// Per-vertex knowledge shared by every chain of the grand coupling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TernaryConfig {
    pub states: Vec<Ternary>,
}

impl TernaryConfig {
    pub fn unknown(n: usize) -> Self {
        TernaryConfig {
            states: vec![Ternary::Unknown; n],
        }
    }

    pub fn unknown_count(&self) -> usize {
        self.states
            .iter()
            .filter(|&&s| s == Ternary::Unknown)
            .count()
    }

    /// True iff `config` agrees with every determined coordinate.
    pub fn admits(&self, config: &SpinConfig) -> bool {
        self.states
            .iter()
            .zip(config.bits())
            .all(|(s, &b)| match s {
                Ternary::Zero => !b,
                Ternary::One => b,
                Ternary::Unknown => true,
            })
    }
}

impl fmt::Display for TernaryConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.states {
            f.write_str(match s {
                Ternary::Zero => "0",
                Ternary::One => "1",
                Ternary::Unknown => "?",
            })?;
        }
        Ok(())
    }
}
