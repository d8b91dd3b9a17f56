//! Exact counting formulas for independent subsets of path powers.
//!
//! All counts are exact `BigUint` values. The central quantities are
//! `p_{n,k}` (independent k-subsets of the h-power of a path on n vertices),
//! `p_n` (all independent subsets), `T_{k,i}` (those containing vertex `v_i`),
//! the h-Fibonacci sequence, and the Hasse-diagram edge count computed both
//! as a rank-weighted sum and as a sequence self-convolution.

use std::collections::HashMap;
use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Parameters (n, h) of the h-power of a path on vertices v_1..v_n.
///
/// Vertices v_i and v_j (i != j) are adjacent iff |j - i| <= h. So h = 1 is
/// the ordinary path, h = 0 the edgeless graph, and h >= n - 1 the complete
/// graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathPower {
    pub n: u64,
    pub h: u64,
}

impl PathPower {
    pub fn new(n: u64, h: u64) -> Self {
        Self { n, h }
    }

    /// Adjacency predicate on 1-based vertex indices.
    pub fn adjacent(&self, i: u64, j: u64) -> bool {
        i != j
            && (1..=self.n).contains(&i)
            && (1..=self.n).contains(&j)
            && i.abs_diff(j) <= self.h
    }

    /// Maximum cardinality of an independent subset: ceil(n / (h + 1)).
    pub fn max_independent_size(&self) -> u64 {
        self.n.div_ceil(self.h + 1)
    }
}

/// Binomial coefficient C(a, k), clamped to 0 for a < 0 or k > a.
///
/// The clamp lets every sum below run over a uniform index range: out-of-range
/// terms count no subsets and contribute nothing.
pub fn binomial(a: i64, k: u64) -> BigUint {
    if a < 0 || k > a as u64 {
        return BigUint::zero();
    }
    let a = a as u64;
    let mut result = BigUint::one();
    for i in 0..k {
        result = result * (a - i) / (i + 1);
    }
    result
}

/// Number of independent k-subsets: p_{n,k} = C(n - h*k + h, k).
pub fn count_independent_k(p: PathPower, k: u64) -> BigUint {
    let a = p.n as i128 - (p.h as i128) * (k as i128) + p.h as i128;
    if a < 0 {
        return BigUint::zero();
    }
    binomial(a.min(i64::MAX as i128) as i64, k)
}

/// Number of all independent subsets: p_n = sum of p_{n,k} over k.
pub fn count_independent_closed(p: PathPower) -> BigUint {
    (0..=p.max_independent_size())
        .map(|k| count_independent_k(p, k))
        .sum()
}

/// Same count via the recurrence p_n = p_{n-1} + p_{n-h-1}, base p_n = n + 1
/// for n <= h + 1. Evaluated bottom-up keeping a window of h + 2 values.
pub fn count_independent_recurrence(p: PathPower) -> BigUint {
    let PathPower { n, h } = p;
    if n <= h + 1 {
        return BigUint::from(n + 1);
    }
    // window holds p_{m-h-1} .. p_{m-1} when computing p_m
    let mut window: VecDeque<BigUint> = (0..=h).map(|m| BigUint::from(m + 1)).collect();
    for _ in (h + 1)..=n {
        let next = window.back().unwrap() + window.front().unwrap();
        window.pop_front();
        window.push_back(next);
    }
    window.pop_back().unwrap()
}

/// p-bar extension of p_{n,k} to negative n: clamps to the n = 0 value,
/// which is 1 for k = 0 and 0 otherwise.
pub fn extended_count_k(n: i64, h: u64, k: u64) -> BigUint {
    let n = n.max(0) as u64;
    count_independent_k(PathPower::new(n, h), k)
}

/// p-bar extension of p_n to negative n: clamps to p_0 = 1.
pub fn extended_count(n: i64, h: u64) -> BigUint {
    if n < 0 {
        BigUint::one()
    } else {
        count_independent_closed(PathPower::new(n as u64, h))
    }
}

/// T_{k,i}: independent k-subsets containing vertex v_i (1-based), computed
/// by splitting each subset at v_i into a left part on v_1..v_{i-h-1} and a
/// right part on v_{i+h+1}..v_n:
///
///   T_{k,i} = sum over r of pbar_{i-h-1, r} * pbar_{n-i-h, k-1-r}
pub fn count_containing(p: PathPower, k: u64, i: u64) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::ZeroCardinality);
    }
    if i == 0 || i > p.n {
        return Err(Error::InvalidVertexIndex { i, n: p.n });
    }
    let h = p.h as i64;
    let left_n = i as i64 - h - 1;
    let right_n = p.n as i64 - i as i64 - h;
    let total = (0..k)
        .map(|r| extended_count_k(left_n, p.h, r) * extended_count_k(right_n, p.h, k - 1 - r))
        .sum();
    Ok(total)
}

/// A finite prefix F_1..F_len of the h-Fibonacci sequence:
/// F_m = 1 for m <= h + 1, else F_m = F_{m-1} + F_{m-h-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceWindow {
    h: u64,
    values: Vec<BigUint>,
}

impl SequenceWindow {
    pub fn generate(h: u64, len: u64) -> Self {
        let len = len as usize;
        let mut values: Vec<BigUint> = Vec::with_capacity(len);
        for m in 1..=len {
            let value = if m as u64 <= h + 1 {
                BigUint::one()
            } else {
                &values[m - 2] + &values[m - 2 - h as usize]
            };
            values.push(value);
        }
        Self { h, values }
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    pub fn len(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// F_m, 1-based; panics if m is outside the window.
    pub fn get(&self, m: u64) -> &BigUint {
        &self.values[m as usize - 1]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// F_m of the h-Fibonacci sequence, m >= 1.
pub fn h_fibonacci(h: u64, m: u64) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::ZeroSequenceIndex);
    }
    let mut window = SequenceWindow::generate(h, m);
    Ok(window.values.pop().unwrap())
}

/// Edge count of the Hasse diagram via ranks: H_n = sum of k * p_{n,k}.
/// Each k-subset covers exactly its k one-element deletions.
pub fn edges_rank_weighted(p: PathPower) -> BigUint {
    (1..=p.max_independent_size())
        .map(|k| count_independent_k(p, k) * k)
        .sum()
}

/// Edge count via self-convolution of the h-Fibonacci sequence:
/// H_n = sum over i = 1..n of F_i * F_{n-i+1}. Empty sum for n = 0.
pub fn edges_convolution(p: PathPower) -> BigUint {
    let window = SequenceWindow::generate(p.h, p.n);
    (1..=p.n)
        .map(|i| window.get(i) * window.get(p.n - i + 1))
        .sum()
}

/// Memo table for the counting quantities, keyed by their full parameter
/// tuples. Fill-on-demand; a table is just a cache, every value equals the
/// corresponding formula above.
#[derive(Debug, Default, Clone)]
pub struct CountTable {
    per_k: HashMap<(u64, u64, u64), BigUint>,
    totals: HashMap<(u64, u64), BigUint>,
    containing: HashMap<(u64, u64, u64, u64), BigUint>,
    edges: HashMap<(u64, u64), BigUint>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn independent_k(&mut self, p: PathPower, k: u64) -> &BigUint {
        self.per_k
            .entry((p.n, p.h, k))
            .or_insert_with(|| count_independent_k(p, k))
    }

    pub fn independent(&mut self, p: PathPower) -> &BigUint {
        self.totals
            .entry((p.n, p.h))
            .or_insert_with(|| count_independent_closed(p))
    }

    pub fn containing(&mut self, p: PathPower, k: u64, i: u64) -> Result<&BigUint> {
        use std::collections::hash_map::Entry;
        match self.containing.entry((p.n, p.h, k, i)) {
            Entry::Occupied(entry) => Ok(entry.into_mut()),
            Entry::Vacant(entry) => Ok(entry.insert(count_containing(p, k, i)?)),
        }
    }

    pub fn hasse_edges(&mut self, p: PathPower) -> &BigUint {
        self.edges
            .entry((p.n, p.h))
            .or_insert_with(|| edges_rank_weighted(p))
    }
}
