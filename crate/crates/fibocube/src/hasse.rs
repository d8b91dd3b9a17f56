//! The Hasse diagram of independent subsets ordered by inclusion.
//!
//! Vertices are the enumeration's bitstrings; a directed edge goes from a
//! subset to each superset obtained by adding exactly one vertex. Because
//! the order is subset inclusion, these one-element extensions are exactly
//! the cover relation, so no transitive edges can arise.

use std::collections::HashMap;

use crate::counting::PathPower;
use crate::enumeration::{
    enumerate_independent_capped, IndependentSubset, DEFAULT_ENUMERATION_CAP,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseGraph {
    params: PathPower,
    vertices: Vec<IndependentSubset>,
    /// (subset index, superset index) pairs, sorted lexicographically.
    edges: Vec<(usize, usize)>,
}

/// True iff `upper`'s 1-positions are exactly `lower`'s plus one extra.
pub fn covers(lower: &IndependentSubset, upper: &IndependentSubset) -> Result<bool> {
    if lower.len() != upper.len() {
        return Err(Error::LengthMismatch {
            left: lower.len(),
            right: upper.len(),
        });
    }
    let mut added = 0u64;
    for (&l, &u) in lower.bits().iter().zip(upper.bits()) {
        match (l, u) {
            (true, false) => return Ok(false),
            (false, true) => added += 1,
            _ => {}
        }
    }
    Ok(added == 1)
}

pub fn build_hasse(p: PathPower) -> Result<HasseGraph> {
    build_hasse_capped(p, DEFAULT_ENUMERATION_CAP)
}

pub fn build_hasse_capped(p: PathPower, cap: u64) -> Result<HasseGraph> {
    let vertices = enumerate_independent_capped(p, cap)?;
    let index: HashMap<&IndependentSubset, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();

    let mut edges = Vec::new();
    for (upper_idx, vertex) in vertices.iter().enumerate() {
        // every one-element deletion of an independent set is independent,
        // so each lookup must succeed
        let mut bits = vertex.bits().to_vec();
        for pos in vertex.one_positions() {
            bits[pos as usize - 1] = false;
            let lower = IndependentSubset::from_bits(bits.clone());
            let lower_idx = index[&lower];
            edges.push((lower_idx, upper_idx));
            bits[pos as usize - 1] = true;
        }
    }
    edges.sort_unstable();

    Ok(HasseGraph {
        params: p,
        vertices,
        edges,
    })
}

impl HasseGraph {
    pub fn params(&self) -> PathPower {
        self.params
    }

    pub fn vertices(&self) -> &[IndependentSubset] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> u64 {
        self.vertices.len() as u64
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    /// For each vertex, the number of cover edges in which it is the upper
    /// element; equals the vertex's cardinality.
    pub fn down_degrees(&self) -> Vec<u64> {
        let mut degrees = vec![0u64; self.vertices.len()];
        for &(_, upper) in &self.edges {
            degrees[upper] += 1;
        }
        degrees
    }
}
