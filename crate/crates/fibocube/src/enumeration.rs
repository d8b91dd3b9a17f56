//! Enumeration of independent subsets as gap-constrained bitstrings.
//!
//! An independent subset of the h-power of a path on n vertices is encoded
//! as the bitstring b_1..b_n with b_i = 1 iff v_i belongs to the subset;
//! independence means any two 1-positions are more than h apart. Enumeration
//! emits the strings in ascending order of their base-2 numeral value (b_1
//! most significant).

use std::fmt;

use crate::counting::PathPower;
use crate::error::{Error, Result};

/// Default bound on n for enumeration; at h = 0 the output is all 2^n
/// strings, so fail loudly instead of exhausting memory.
pub const DEFAULT_ENUMERATION_CAP: u64 = 30;

/// A canonical bitstring encoding of an independent subset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndependentSubset {
    bits: Vec<bool>,
}

impl IndependentSubset {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// Parse a string of '0'/'1' characters.
    pub fn parse(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<bool>>>()
            .map(Self::from_bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Value of b_i, 1-based.
    pub fn bit(&self, i: u64) -> bool {
        self.bits[i as usize - 1]
    }

    /// Number of 1-bits, i.e. the subset size.
    pub fn cardinality(&self) -> u64 {
        self.bits.iter().filter(|&&b| b).count() as u64
    }

    /// 1-based positions of the 1-bits, ascending.
    pub fn one_positions(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(idx, _)| idx as u64 + 1)
    }

    pub fn is_independent(&self, h: u64) -> bool {
        is_independent(&self.bits, h)
    }
}

impl fmt::Display for IndependentSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// True iff every pair of 1-positions differs by more than h. It suffices to
/// check consecutive 1s.
pub fn is_independent(bits: &[bool], h: u64) -> bool {
    let mut last_one: Option<usize> = None;
    for (idx, &b) in bits.iter().enumerate() {
        if b {
            if let Some(prev) = last_one {
                if (idx - prev) as u64 <= h {
                    return false;
                }
            }
            last_one = Some(idx);
        }
    }
    true
}

/// All independent subsets of P_n^(h), ascending by base-2 numeral value,
/// under the default cap.
pub fn enumerate_independent(p: PathPower) -> Result<Vec<IndependentSubset>> {
    enumerate_independent_capped(p, DEFAULT_ENUMERATION_CAP)
}

/// As `enumerate_independent`, with an explicit cap on n.
pub fn enumerate_independent_capped(p: PathPower, cap: u64) -> Result<Vec<IndependentSubset>> {
    if p.n > cap {
        return Err(Error::Capacity { n: p.n, cap });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(p.n as usize);
    extend(p.n as usize, p.h as usize, &mut prefix, &mut out);
    Ok(out)
}

// Places bits left to right; after a 1 the next h positions are forced to 0,
// so every emitted string is independent by construction. The 0-branch comes
// first, which yields ascending numeral order.
fn extend(n: usize, h: usize, prefix: &mut Vec<bool>, out: &mut Vec<IndependentSubset>) {
    if prefix.len() == n {
        out.push(IndependentSubset::from_bits(prefix.clone()));
        return;
    }
    prefix.push(false);
    extend(n, h, prefix, out);
    prefix.pop();

    prefix.push(true);
    let forced_zeros = h.min(n - prefix.len());
    prefix.extend(std::iter::repeat_n(false, forced_zeros));
    extend(n, h, prefix, out);
    prefix.truncate(prefix.len() - forced_zeros - 1);
}

/// The independent k-subsets only, in the same relative order.
pub fn enumerate_independent_k(p: PathPower, k: u64) -> Result<Vec<IndependentSubset>> {
    enumerate_independent_k_capped(p, k, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_independent_k_capped(
    p: PathPower,
    k: u64,
    cap: u64,
) -> Result<Vec<IndependentSubset>> {
    let mut all = enumerate_independent_capped(p, cap)?;
    all.retain(|s| s.cardinality() == k);
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(subsets: &[IndependentSubset]) -> Vec<String> {
        subsets.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn is_independent_examples() {
        assert!(is_independent(&IndependentSubset::parse("0000").unwrap().bits, 1));
        assert!(is_independent(&IndependentSubset::parse("1010").unwrap().bits, 1));
        assert!(!is_independent(&IndependentSubset::parse("1010").unwrap().bits, 2));
    }

    #[test]
    fn enumerate_empty_graph() {
        let subsets = enumerate_independent(PathPower::new(0, 1)).unwrap();
        assert_eq!(strings(&subsets), vec![String::new()]);
    }

    #[test]
    fn enumerate_order_3_fibonacci_strings() {
        let subsets = enumerate_independent(PathPower::new(3, 1)).unwrap();
        assert_eq!(strings(&subsets), ["000", "001", "010", "100", "101"]);
    }

    #[test]
    fn enumerate_triangle() {
        // P_3^(2) is a triangle: only the empty set and the singletons
        let subsets = enumerate_independent(PathPower::new(3, 2)).unwrap();
        assert_eq!(strings(&subsets), ["000", "001", "010", "100"]);
    }

    #[test]
    fn enumerate_k_examples() {
        let pairs = enumerate_independent_k(PathPower::new(4, 1), 2).unwrap();
        assert_eq!(strings(&pairs), ["0101", "1001", "1010"]);

        let empty = enumerate_independent_k(PathPower::new(5, 2), 0).unwrap();
        assert_eq!(strings(&empty), ["00000"]);

        assert!(enumerate_independent_k(PathPower::new(2, 1), 2)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_independent(PathPower::new(31, 1)),
            Err(Error::Capacity { n: 31, cap: 30 })
        );
        assert!(enumerate_independent_capped(PathPower::new(31, 5), 31).is_ok());
    }

    #[test]
    fn output_is_strictly_increasing() {
        for h in 0..=3 {
            let subsets = enumerate_independent(PathPower::new(8, h)).unwrap();
            for pair in subsets.windows(2) {
                assert!(pair[0] < pair[1]);
            }
        }
    }

    #[test]
    fn one_positions_and_cardinality() {
        let s = IndependentSubset::parse("10010").unwrap();
        assert_eq!(s.one_positions().collect::<Vec<_>>(), [1, 4]);
        assert_eq!(s.cardinality(), 2);
        assert!(s.bit(1));
        assert!(!s.bit(2));
    }
}
