//! Membership in the well-coveredness hierarchy and the exact λ*.

mod quasi;
mod w2;

use serde::{Deserialize, Serialize};

pub use quasi::{
    is_quasi_regularizable, lambda_star, lambda_star_enumerated, min_deficiency, LambdaStar,
    LAMBDA_ENUMERATION_MAX_VERTICES,
};
pub use w2::{extension_witnesses, has_disjoint_extensions_everywhere, in_w2, W2_MAX_VERTICES};

use crate::enumeration::{independence_number, MaximalIndependentSets};
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub n: usize,
    pub alpha: usize,
    pub connected: bool,
    pub has_isolated: bool,
    pub well_covered: bool,
    pub very_well_covered: bool,
    pub one_well_covered: bool,
    /// Only filled in when requested (`n <= 16`).
    pub in_w2: Option<bool>,
    pub lambda_star: LambdaStar,
}

/// Classifies `g`. The W₂ quantifier check runs only when `compute_w2` is set.
pub fn classify(g: &Graph, compute_w2: bool) -> Result<ClassificationRecord> {
    let in_w2 = if compute_w2 {
        if g.order() > W2_MAX_VERTICES {
            return Err(Error::SizeLimit {
                op: "W2 classification",
                n: g.order(),
                limit: W2_MAX_VERTICES,
            });
        }
        Some(in_w2(g)?)
    } else {
        None
    };
    let alpha = independence_number(g);
    let has_isolated = g.has_isolated_vertex();
    let well_covered = is_well_covered(g);
    Ok(ClassificationRecord {
        n: g.order(),
        alpha,
        connected: g.is_connected(),
        has_isolated,
        well_covered,
        very_well_covered: well_covered
            && !has_isolated
            && g.order() >= 1
            && g.order() == 2 * alpha,
        one_well_covered: well_covered && one_well_covered_given_well_covered(g),
        in_w2,
        lambda_star: lambda_star(g),
    })
}

/// All maximal independent sets have the same size.
pub fn is_well_covered(g: &Graph) -> bool {
    well_covered_within(g, g.vertices())
}

fn well_covered_within(g: &Graph, within: VertexSet) -> bool {
    let mut sets = MaximalIndependentSets::within(g, within);
    let Some(first) = sets.next() else {
        return true;
    };
    let size = first.len();
    sets.all(|s| s.len() == size)
}

/// Well-covered, at least two vertices, and `G - v` well-covered for every `v`.
pub fn is_one_well_covered(g: &Graph) -> bool {
    is_well_covered(g) && one_well_covered_given_well_covered(g)
}

fn one_well_covered_given_well_covered(g: &Graph) -> bool {
    let all = g.vertices();
    g.order() >= 2 && (0..g.order()).all(|v| well_covered_within(g, all.without(v)))
}

/// Well-covered, no isolated vertices, and `n = 2α`.
pub fn is_very_well_covered(g: &Graph) -> bool {
    g.order() >= 1
        && !g.has_isolated_vertex()
        && g.order() == 2 * independence_number(g)
        && is_well_covered(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn hierarchy_examples() {
        let c7 = classify(&Graph::cycle(7).unwrap(), true).unwrap();
        assert!(c7.well_covered && !c7.one_well_covered);
        assert_eq!(c7.in_w2, Some(false));

        let p4 = classify(&Graph::path(4).unwrap(), false).unwrap();
        assert!(p4.very_well_covered && !p4.one_well_covered);

        let k3k1 = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(1).unwrap())
            .unwrap();
        let r = classify(&k3k1, true).unwrap();
        assert!(r.one_well_covered && r.has_isolated);
        assert_eq!(r.in_w2, Some(false));
        assert_eq!(r.lambda_star, LambdaStar::Finite(Rational64::from(0)));

        let g = Graph::cycle(3)
            .unwrap()
            .corona_uniform(&Graph::complete(2).unwrap())
            .unwrap();
        let r = classify(&g, false).unwrap();
        assert!(r.lambda_star >= LambdaStar::Finite(Rational64::from(2)));
        assert!(r.one_well_covered);
    }

    #[test]
    fn cycle_table() {
        for n in 3..=12 {
            let r = classify(&Graph::cycle(n).unwrap(), false).unwrap();
            assert_eq!(r.well_covered, [3, 4, 5, 7].contains(&n), "C{n}");
            assert_eq!(r.very_well_covered, n == 4, "C{n}");
            assert_eq!(r.one_well_covered, [3, 5].contains(&n), "C{n}");
        }
    }

    #[test]
    fn degenerate_orders() {
        let r = classify(&Graph::empty(0).unwrap(), true).unwrap();
        assert!(r.well_covered && !r.very_well_covered && !r.one_well_covered);
        assert_eq!(r.lambda_star, LambdaStar::Unbounded);

        let r = classify(&Graph::complete(1).unwrap(), false).unwrap();
        assert!(r.well_covered && !r.one_well_covered);

        let two_k2 = Graph::complete(2).unwrap().copies(2).unwrap();
        let r = classify(&two_k2, true).unwrap();
        assert!(r.one_well_covered && r.very_well_covered);
        assert_eq!(r.in_w2, Some(true));

        assert!(classify(&Graph::empty(17).unwrap(), true).is_err());
        assert!(classify(&Graph::empty(17).unwrap(), false).is_ok());
    }
}
