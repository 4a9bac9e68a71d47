//! Double counting in the containment graph between consecutive levels.
//!
//! `Ω_k` is the family of independent `k`-sets; the bipartite graph `H_k`
//! joins `W ∈ Ω_k` to `U ∈ Ω_{k+1}` when `W ⊂ U`. Each `U` has exactly `k+1`
//! neighbours, so `|E(H_k)| = (k+1)·s_{k+1}`. The edge count here is summed
//! from the `Ω_k` side, which makes the identity a real check.

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use super::independent_sets_of_size;
use crate::enumeration::independence_number;
use crate::graph::Graph;
use crate::{Error, Result};

/// Largest order accepted by [`level_double_count`].
pub const LEVEL_COUNT_MAX_VERTICES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCount {
    pub k: usize,
    /// `|Ω_k| = s_k`.
    pub omega_k: u64,
    /// `|Ω_{k+1}| = s_{k+1}`.
    pub omega_k1: u64,
    /// Number of containment pairs `W ⊂ U`.
    pub edge_count: u64,
    /// Smallest number of `(k+1)`-supersets of any `W ∈ Ω_k`.
    pub min_lower_degree: u64,
}

impl LevelCount {
    /// Whether `edge_count = (k+1)·s_{k+1}`.
    pub fn identity_holds(&self) -> bool {
        self.edge_count == (self.k as u64 + 1) * self.omega_k1
    }
}

pub fn level_double_count(g: &Graph, k: usize) -> Result<LevelCount> {
    let n = g.order();
    if n > LEVEL_COUNT_MAX_VERTICES {
        return Err(Error::SizeLimit {
            op: "level double counting",
            n,
            limit: LEVEL_COUNT_MAX_VERTICES,
        });
    }
    let alpha = independence_number(g);
    if k >= alpha {
        return Err(Error::LevelOutOfRange { k, alpha });
    }
    let lower = independent_sets_of_size(g, k);
    let upper: FxHashSet<u64> = independent_sets_of_size(g, k + 1)
        .into_iter()
        .map(|s| s.bits())
        .collect();

    let mut edge_count = 0u64;
    let mut min_lower_degree = u64::MAX;
    for w in &lower {
        let outside = g.vertices().difference(g.closed_neighborhood(*w));
        let degree = outside
            .iter()
            .filter(|&u| upper.contains(&w.with(u).bits()))
            .count() as u64;
        edge_count += degree;
        min_lower_degree = min_lower_degree.min(degree);
    }
    Ok(LevelCount {
        k,
        omega_k: lower.len() as u64,
        omega_k1: upper.len() as u64,
        edge_count,
        min_lower_degree,
    })
}
