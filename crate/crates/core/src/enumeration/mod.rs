//! Exact counting and enumeration of independent sets.

mod count;
mod level;
mod mis;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use count::MEMO_CAPACITY;
pub use level::{level_double_count, LevelCount, LEVEL_COUNT_MAX_VERTICES};
pub use mis::MaximalIndependentSets;

use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// Largest order accepted by [`brute_force_coefficients`].
pub const BRUTE_FORCE_MAX_VERTICES: usize = 24;
/// Ceiling for [`brute_force_coefficients_with_limit`].
pub const BRUTE_FORCE_HARD_MAX_VERTICES: usize = 32;

/// The coefficients `s_0, ..., s_α` of the independence polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoefficientSequence {
    #[serde(with = "crate::decimal")]
    coeffs: Vec<BigUint>,
}

impl CoefficientSequence {
    /// Wraps raw counts. Trailing zeros are dropped; an empty input becomes `[1]`
    /// (the empty graph has exactly one independent set).
    pub fn new(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigUint::from(1u8));
        }
        CoefficientSequence { coeffs }
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        Self::new(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    /// The independence number: degree of the polynomial.
    pub fn alpha(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn get(&self, k: usize) -> Option<&BigUint> {
        self.coeffs.get(k)
    }

    /// `Σ s_k`, the total number of independent sets.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Coefficients as `u64`, if they all fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(ToPrimitive::to_u64).collect()
    }

    pub fn into_vec(self) -> Vec<BigUint> {
        self.coeffs
    }
}

impl fmt::Debug for CoefficientSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CoefficientSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Counts independent sets of every size exactly.
///
/// Uses the vertex decomposition `I(G) = I(G-v) + x·I(G-N[v])` on a
/// maximum-degree vertex, factorizing over connected components first and
/// memoizing on the residual vertex set.
pub fn independence_coefficients(g: &Graph) -> CoefficientSequence {
    CoefficientSequence::new(
        count::count_polynomial(g)
            .into_iter()
            .map(BigUint::from)
            .collect(),
    )
}

/// Counts independent sets by testing all `2^n` vertex subsets against the
/// edge list.
///
/// Shares nothing with [`independence_coefficients`]; use it as an oracle.
/// Accepts at most [`BRUTE_FORCE_MAX_VERTICES`] vertices; see
/// [`brute_force_coefficients_with_limit`] to go further.
pub fn brute_force_coefficients(g: &Graph) -> Result<CoefficientSequence> {
    brute_force_coefficients_with_limit(g, BRUTE_FORCE_MAX_VERTICES)
}

/// [`brute_force_coefficients`] with a caller-chosen size limit, itself capped
/// at [`BRUTE_FORCE_HARD_MAX_VERTICES`].
///
/// A subset is written as `L ∪ H` with `L` inside the first half of the
/// vertices and `H` inside the second. It is independent exactly when `L` and
/// `H` are and no edge joins them, so each half is tested once per half-subset
/// and the cross edges once per `L`.
pub fn brute_force_coefficients_with_limit(g: &Graph, limit: usize) -> Result<CoefficientSequence> {
    let n = g.order();
    let limit = limit.min(BRUTE_FORCE_HARD_MAX_VERTICES);
    if n > limit {
        return Err(Error::SizeLimit {
            op: "brute-force counting",
            n,
            limit,
        });
    }
    let low = n / 2;
    let high = n - low;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let inside = |mask: u64, offset: usize, size: usize| {
        edges.iter().all(|&(u, v)| {
            let (in_u, in_v) = (
                u >= offset && u < offset + size,
                v >= offset && v < offset + size,
            );
            !(in_u && in_v) || mask >> (u - offset) & 1 == 0 || mask >> (v - offset) & 1 == 0
        })
    };
    let cross: Vec<(usize, usize)> = edges
        .iter()
        .filter(|&&(u, v)| u < low && v >= low)
        .map(|&(u, v)| (u, v - low))
        .collect();
    let high_sets: Vec<(u64, usize)> = (0u64..1 << high)
        .filter(|&h| inside(h, low, high))
        .map(|h| (h, h.count_ones() as usize))
        .collect();
    let mut tally = vec![0u64; n + 1];
    for l in 0u64..1 << low {
        if !inside(l, 0, low) {
            continue;
        }
        let blocked = cross
            .iter()
            .filter(|&&(u, _)| l >> u & 1 == 1)
            .fold(0u64, |acc, &(_, v)| acc | 1 << v);
        let base = l.count_ones() as usize;
        for &(h, size) in &high_sets {
            if h & blocked == 0 {
                tally[base + size] += 1;
            }
        }
    }
    Ok(CoefficientSequence::from_u64s(&tally))
}

/// α(G) by branch and bound, without computing the full polynomial.
pub fn independence_number(g: &Graph) -> usize {
    count::max_independent(g.rows(), g.vertices().bits())
}

/// Maximal independent sets, lexicographic by sorted vertex list.
pub fn maximal_independent_sets(g: &Graph) -> MaximalIndependentSets<'_> {
    MaximalIndependentSets::new(g)
}

/// All independent sets of size exactly `k`, in increasing bit order.
pub(crate) fn independent_sets_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    fn go(rows: &[u64], chosen: u64, allowed: u64, k: usize, out: &mut Vec<VertexSet>) {
        if k == 0 {
            out.push(VertexSet(chosen));
            return;
        }
        let mut rest = allowed;
        while rest.count_ones() as usize >= k {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            go(rows, chosen | 1 << v, rest & !rows[v], k - 1, out);
        }
    }
    let mut out = Vec::new();
    go(g.rows(), 0, g.vertices().bits(), k, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(values: &[u64]) -> CoefficientSequence {
        CoefficientSequence::from_u64s(values)
    }

    #[test]
    fn known_sequences() {
        assert_eq!(
            independence_coefficients(&Graph::empty(5).unwrap()),
            seq(&[1, 5, 10, 10, 5, 1])
        );
        assert_eq!(
            independence_coefficients(&Graph::cycle(5).unwrap()),
            seq(&[1, 5, 5])
        );
        let g = Graph::star(3)
            .unwrap()
            .corona_uniform(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!(independence_coefficients(&g), seq(&[1, 12, 51, 93, 62]));
    }

    #[test]
    fn brute_force_oracle() {
        assert_eq!(
            brute_force_coefficients(&Graph::complete(3).unwrap()).unwrap(),
            seq(&[1, 3])
        );
        assert_eq!(
            brute_force_coefficients(&Graph::path(4).unwrap()).unwrap(),
            seq(&[1, 4, 3])
        );
        assert_eq!(
            brute_force_coefficients(&Graph::cycle(7).unwrap()).unwrap(),
            seq(&[1, 7, 14, 7])
        );
        assert!(matches!(
            brute_force_coefficients(&Graph::empty(25).unwrap()),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn alpha() {
        assert_eq!(independence_number(&Graph::cycle(7).unwrap()), 3);
        for n in 1..10 {
            assert_eq!(independence_number(&Graph::complete(n).unwrap()), 1);
        }
        let h = Graph::path(5).unwrap();
        let g = h.corona_uniform(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(independence_number(&g), 5);
        assert_eq!(independence_coefficients(&g).alpha(), 5);
    }

    #[test]
    fn sized_sets() {
        let g = Graph::cycle(5).unwrap();
        assert_eq!(independent_sets_of_size(&g, 0), vec![VertexSet::EMPTY]);
        assert_eq!(independent_sets_of_size(&g, 2).len(), 5);
        assert!(independent_sets_of_size(&g, 3).is_empty());
    }

    #[test]
    fn serializes_as_decimal_strings() {
        let s = seq(&[1, 12, 51]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"["1","12","51"]"#);
        assert_eq!(
            serde_json::from_str::<CoefficientSequence>(&json).unwrap(),
            s
        );
    }
}
