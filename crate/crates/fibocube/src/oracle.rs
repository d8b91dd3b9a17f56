//! Brute-force ground truth for the counting formulas.
//!
//! Everything here walks all 2^n bitmasks and tests independence straight
//! from the adjacency condition |j - i| <= h, sharing no code with the
//! closed forms or with the enumeration module. Bit idx - 1 of a mask holds
//! vertex v_idx.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::counting::PathPower;
use crate::error::{Error, Result};

/// Largest n for the exhaustive subset-counting scans.
pub const ORACLE_COUNT_CAP: u64 = 24;
/// Largest n for the exhaustive cover-pair count.
pub const ORACLE_EDGE_CAP: u64 = 20;

fn check_count_cap(p: PathPower) -> Result<()> {
    if p.n > ORACLE_COUNT_CAP {
        return Err(Error::Capacity {
            n: p.n,
            cap: ORACLE_COUNT_CAP,
        });
    }
    Ok(())
}

// v_i in the subset for each set bit; independent iff no two chosen
// vertices are at index distance <= h.
fn mask_is_independent(mask: u32, n: u64, h: u64) -> bool {
    for i in 1..=n {
        if mask & (1 << (i - 1)) == 0 {
            continue;
        }
        let upper = n.min(i + h);
        for j in (i + 1)..=upper {
            if mask & (1 << (j - 1)) != 0 {
                return false;
            }
        }
    }
    true
}

/// Number of independent subsets, by exhaustive scan.
pub fn brute_count(p: PathPower) -> Result<BigUint> {
    check_count_cap(p)?;
    let total = (0u64..1 << p.n)
        .filter(|&mask| mask_is_independent(mask as u32, p.n, p.h))
        .count();
    Ok(BigUint::from(total))
}

/// Number of independent k-subsets, by exhaustive scan.
pub fn brute_count_k(p: PathPower, k: u64) -> Result<BigUint> {
    check_count_cap(p)?;
    let total = (0u64..1 << p.n)
        .filter(|&mask| {
            mask.count_ones() as u64 == k && mask_is_independent(mask as u32, p.n, p.h)
        })
        .count();
    Ok(BigUint::from(total))
}

/// Number of independent k-subsets containing v_i, by exhaustive scan.
pub fn brute_count_containing(p: PathPower, k: u64, i: u64) -> Result<BigUint> {
    check_count_cap(p)?;
    if k == 0 {
        return Err(Error::ZeroCardinality);
    }
    if i == 0 || i > p.n {
        return Err(Error::InvalidVertexIndex { i, n: p.n });
    }
    let bit = 1u64 << (i - 1);
    let total = (0u64..1 << p.n)
        .filter(|&mask| {
            mask & bit != 0
                && mask.count_ones() as u64 == k
                && mask_is_independent(mask as u32, p.n, p.h)
        })
        .count();
    Ok(BigUint::from(total))
}

/// Number of cover pairs (S, S ∪ {v}) with both sets independent, by
/// pairing every independent subset with its one-bit extensions.
pub fn brute_edge_count(p: PathPower) -> Result<BigUint> {
    if p.n > ORACLE_EDGE_CAP {
        return Err(Error::Capacity {
            n: p.n,
            cap: ORACLE_EDGE_CAP,
        });
    }
    let independent: HashSet<u64> = (0u64..1 << p.n)
        .filter(|&mask| mask_is_independent(mask as u32, p.n, p.h))
        .collect();
    let mut total = 0u64;
    for &mask in &independent {
        for v in 0..p.n {
            let bit = 1u64 << v;
            if mask & bit == 0 && independent.contains(&(mask | bit)) {
                total += 1;
            }
        }
    }
    Ok(BigUint::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn brute_count_examples() {
        assert_eq!(brute_count(PathPower::new(0, 0)), Ok(big(1)));
        assert_eq!(brute_count(PathPower::new(5, 2)), Ok(big(9)));
        assert_eq!(brute_count(PathPower::new(6, 1)), Ok(big(21)));
    }

    #[test]
    fn brute_count_k_examples() {
        assert_eq!(brute_count_k(PathPower::new(4, 1), 2), Ok(big(3)));
        assert_eq!(brute_count_k(PathPower::new(4, 1), 0), Ok(big(1)));
        // P_4^(3) is complete: no independent pairs
        assert_eq!(brute_count_k(PathPower::new(4, 3), 2), Ok(big(0)));
    }

    #[test]
    fn brute_count_containing_examples() {
        assert_eq!(brute_count_containing(PathPower::new(4, 1), 2, 1), Ok(big(2)));
        assert_eq!(brute_count_containing(PathPower::new(5, 1), 1, 2), Ok(big(1)));
        assert_eq!(brute_count_containing(PathPower::new(4, 1), 2, 2), Ok(big(1)));
    }

    #[test]
    fn brute_edge_count_examples() {
        assert_eq!(brute_edge_count(PathPower::new(3, 1)), Ok(big(5)));
        assert_eq!(brute_edge_count(PathPower::new(1, 4)), Ok(big(1)));
        assert_eq!(brute_edge_count(PathPower::new(3, 0)), Ok(big(12)));
    }

    #[test]
    fn caps_are_enforced() {
        assert_eq!(
            brute_count(PathPower::new(25, 1)),
            Err(Error::Capacity { n: 25, cap: 24 })
        );
        assert_eq!(
            brute_edge_count(PathPower::new(21, 1)),
            Err(Error::Capacity { n: 21, cap: 20 })
        );
    }

    #[test]
    fn invalid_arguments_rejected() {
        assert_eq!(
            brute_count_containing(PathPower::new(4, 1), 2, 5),
            Err(Error::InvalidVertexIndex { i: 5, n: 4 })
        );
        assert_eq!(
            brute_count_containing(PathPower::new(4, 1), 0, 1),
            Err(Error::ZeroCardinality)
        );
    }
}
