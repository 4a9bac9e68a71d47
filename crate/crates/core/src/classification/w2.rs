//! Direct quantifier checks for class W₂ and for the two-disjoint-extensions
//! characterization of 1-well-covered graphs. These walk all independent
//! sets and are meant for cross-validation on small graphs.

use crate::enumeration::{independence_number, independent_sets_of_size};
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// Largest order accepted by the quantifier checks in this module.
pub const W2_MAX_VERTICES: usize = 16;

fn guard(g: &Graph, op: &'static str) -> Result<()> {
    if g.order() > W2_MAX_VERTICES {
        return Err(Error::SizeLimit {
            op,
            n: g.order(),
            limit: W2_MAX_VERTICES,
        });
    }
    Ok(())
}

fn all_independent_sets(g: &Graph) -> Vec<u64> {
    fn go(rows: &[u64], set: u64, allowed: u64, out: &mut Vec<u64>) {
        out.push(set);
        let mut rest = allowed;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            go(rows, set | 1 << v, rest & !rows[v], out);
        }
    }
    let mut out = Vec::new();
    go(g.rows(), 0, g.vertices().bits(), &mut out);
    out
}

fn closed(rows: &[u64], s: u64) -> u64 {
    let mut out = s;
    for v in VertexSet(s) {
        out |= rows[v];
    }
    out
}

/// Whether every two disjoint independent sets lie in two disjoint maximum
/// independent sets.
///
/// Containment is monotone, so only pairs `(A, B)` where neither side can
/// take another vertex outside `A ∪ B` are tested.
pub fn in_w2(g: &Graph) -> Result<bool> {
    guard(g, "W2 check")?;
    let rows = g.rows();
    let all = g.vertices().bits();
    let alpha = independence_number(g);
    let maximum: Vec<u64> = independent_sets_of_size(g, alpha)
        .into_iter()
        .map(VertexSet::bits)
        .collect();
    let mut disjoint_pairs = Vec::new();
    for &s1 in &maximum {
        for &s2 in &maximum {
            if s1 & s2 == 0 {
                disjoint_pairs.push((s1, s2));
            }
        }
    }
    if disjoint_pairs.is_empty() {
        return Ok(false);
    }
    let independent = all_independent_sets(g);
    let blocked: Vec<u64> = independent.iter().map(|&s| closed(rows, s)).collect();
    for (i, &a) in independent.iter().enumerate() {
        for (j, &b) in independent.iter().enumerate() {
            if a & b != 0 {
                continue;
            }
            let taken = a | b;
            if all & !blocked[i] & !taken != 0 || all & !blocked[j] & !taken != 0 {
                continue;
            }
            let extends = disjoint_pairs
                .iter()
                .any(|&(s1, s2)| a & !s1 == 0 && b & !s2 == 0);
            if !extends {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All unordered pairs `{B1, B2}` of disjoint sets, each disjoint from `a`,
/// such that `a ∪ B1` and `a ∪ B2` are maximum independent sets. Each pair is
/// returned with `B1` lexicographically first; pairs are sorted.
pub fn extension_witnesses(g: &Graph, a: VertexSet) -> Result<Vec<(VertexSet, VertexSet)>> {
    guard(g, "extension witnesses")?;
    if !a.is_subset(g.vertices()) || !g.is_independent(a) {
        return Err(Error::NotIndependent);
    }
    let alpha = independence_number(g);
    if a.len() >= alpha {
        return Err(Error::AlreadyMaximum);
    }
    let mut rests: Vec<VertexSet> = independent_sets_of_size(g, alpha)
        .into_iter()
        .filter(|m| a.is_subset(*m))
        .map(|m| m.difference(a))
        .collect();
    rests.sort_by(|x, y| x.lex_cmp(*y));
    let mut out = Vec::new();
    for (i, &b1) in rests.iter().enumerate() {
        for &b2 in &rests[i + 1..] {
            if b1.is_disjoint(b2) {
                out.push((b1, b2));
            }
        }
    }
    Ok(out)
}

/// Whether every non-maximum independent set has at least one pair of
/// disjoint extensions to maximum independent sets.
pub fn has_disjoint_extensions_everywhere(g: &Graph) -> Result<bool> {
    guard(g, "extension characterization")?;
    let alpha = independence_number(g);
    let maximum: Vec<u64> = independent_sets_of_size(g, alpha)
        .into_iter()
        .map(VertexSet::bits)
        .collect();
    for a in all_independent_sets(g) {
        if a.count_ones() as usize >= alpha {
            continue;
        }
        let containing: Vec<u64> = maximum.iter().copied().filter(|m| a & !m == 0).collect();
        // two maximum supersets with disjoint remainders meet exactly in `a`
        let found = containing
            .iter()
            .enumerate()
            .any(|(i, &m1)| containing[i + 1..].iter().any(|&m2| m1 & m2 == a));
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn witnesses() {
        let c5 = Graph::cycle(5).unwrap();
        let w = extension_witnesses(&c5, set(&[0])).unwrap();
        assert_eq!(w, vec![(set(&[2]), set(&[3]))]);

        let p4 = Graph::path(4).unwrap();
        assert!(extension_witnesses(&p4, set(&[1])).unwrap().is_empty());

        let c3 = Graph::cycle(3).unwrap();
        let w = extension_witnesses(&c3, VertexSet::EMPTY).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w[0], (set(&[0]), set(&[1])));
    }

    #[test]
    fn witness_errors() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(matches!(
            extension_witnesses(&c5, set(&[0, 1])),
            Err(Error::NotIndependent)
        ));
        assert!(matches!(
            extension_witnesses(&c5, set(&[0, 2])),
            Err(Error::AlreadyMaximum)
        ));
        assert!(extension_witnesses(&Graph::empty(17).unwrap(), VertexSet::EMPTY).is_err());
    }

    #[test]
    fn w2_small_cases() {
        assert!(in_w2(&Graph::complete(2).unwrap()).unwrap());
        assert!(in_w2(&Graph::cycle(5).unwrap()).unwrap());
        assert!(in_w2(&Graph::cycle(3).unwrap()).unwrap());
        assert!(!in_w2(&Graph::cycle(7).unwrap()).unwrap());
        assert!(!in_w2(&Graph::path(4).unwrap()).unwrap());
        assert!(!in_w2(&Graph::complete(1).unwrap()).unwrap());
        let k3k1 = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(1).unwrap())
            .unwrap();
        assert!(!in_w2(&k3k1).unwrap());
    }

    #[test]
    fn extension_characterization_small_cases() {
        assert!(has_disjoint_extensions_everywhere(&Graph::cycle(5).unwrap()).unwrap());
        assert!(!has_disjoint_extensions_everywhere(&Graph::cycle(7).unwrap()).unwrap());
        assert!(!has_disjoint_extensions_everywhere(&Graph::path(4).unwrap()).unwrap());
    }
}
