//! Memoized vertex-decomposition counting.
//!
//! `I(G) = I(G - v) + x·I(G - N[v])`, applied per connected component, with
//! the residual vertex set (one word) as the memo key. All intermediate
//! coefficients fit in `u128`: a graph on at most 64 vertices has at most
//! `2^64` independent sets in total, and every partial product here counts
//! independent sets of some induced subgraph.

use rustc_hash::FxHashMap;

use crate::graph::{Graph, VertexSet};

/// Memo entries kept before the cache is cleared.
pub const MEMO_CAPACITY: usize = 1 << 20;

pub(crate) fn count_polynomial(g: &Graph) -> Vec<u128> {
    let mut counter = Counter {
        rows: g.rows(),
        memo: FxHashMap::default(),
    };
    counter.count(g.vertices().bits())
}

struct Counter<'g> {
    rows: &'g [u64],
    memo: FxHashMap<u64, Vec<u128>>,
}

impl Counter<'_> {
    fn count(&mut self, residual: u64) -> Vec<u128> {
        let mut acc = vec![1u128];
        let mut rest = residual;
        while rest != 0 {
            let comp = component(self.rows, rest);
            rest &= !comp;
            let part = self.count_connected(comp);
            acc = multiply(&acc, &part);
        }
        acc
    }

    fn count_connected(&mut self, comp: u64) -> Vec<u128> {
        let size = comp.count_ones() as u128;
        if size <= 2 {
            // a connected set of at most two vertices is K1 or K2
            return vec![1, size];
        }
        if let Some(hit) = self.memo.get(&comp) {
            return hit.clone();
        }
        let mut best = 0;
        let mut best_deg = 0;
        let mut complete = true;
        for v in VertexSet(comp) {
            let d = (self.rows[v] & comp).count_ones();
            if d as u128 != size - 1 {
                complete = false;
            }
            if d > best_deg {
                best_deg = d;
                best = v;
            }
        }
        let result = if complete {
            vec![1, size]
        } else {
            let without = self.count(comp & !(1 << best));
            let with = self.count(comp & !(self.rows[best] | 1 << best));
            let mut out = without;
            if out.len() < with.len() + 1 {
                out.resize(with.len() + 1, 0);
            }
            for (k, c) in with.into_iter().enumerate() {
                out[k + 1] += c;
            }
            out
        };
        if self.memo.len() >= MEMO_CAPACITY {
            self.memo.clear();
        }
        self.memo.insert(comp, result.clone());
        result
    }
}

#[inline]
fn component(rows: &[u64], within: u64) -> u64 {
    let mut comp = within & within.wrapping_neg();
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            next |= rows[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        next &= within & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

fn multiply(a: &[u128], b: &[u128]) -> Vec<u128> {
    if a.len() == 1 && a[0] == 1 {
        return b.to_vec();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Size of a maximum independent set of `G[residual]`, by branch and bound.
pub(crate) fn max_independent(rows: &[u64], residual: u64) -> usize {
    let mut best = 0;
    search(rows, residual, 0, &mut best);
    best
}

fn search(rows: &[u64], residual: u64, taken: usize, best: &mut usize) {
    if residual == 0 {
        *best = (*best).max(taken);
        return;
    }
    if taken + residual.count_ones() as usize <= *best {
        return;
    }
    let (mut lo, mut lo_deg, mut hi, mut hi_deg) = (0, u32::MAX, 0, 0);
    for v in VertexSet(residual) {
        let d = (rows[v] & residual).count_ones();
        if d < lo_deg {
            lo = v;
            lo_deg = d;
        }
        if d > hi_deg {
            hi = v;
            hi_deg = d;
        }
    }
    if lo_deg <= 1 {
        // some maximum independent set contains a vertex of degree <= 1
        search(rows, residual & !(rows[lo] | 1 << lo), taken + 1, best);
        return;
    }
    search(rows, residual & !(rows[hi] | 1 << hi), taken + 1, best);
    search(rows, residual & !(1 << hi), taken, best);
}
