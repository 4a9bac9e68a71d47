use super::Graph;

/// Every labelled simple graph on `n` vertices, one per edge subset.
///
/// This is a naive generator for exhaustive tests on tiny orders; it does not
/// remove isomorphic copies. Edge subsets are visited in increasing order of
/// the bit mask over vertex pairs `(i, j)`, `i < j`, taken column by column.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    /// Largest order accepted (2^28 graphs).
    pub const MAX_ORDER: usize = 8;

    pub fn new(n: usize) -> Self {
        assert!(
            n <= Self::MAX_ORDER,
            "labelled enumeration is limited to n <= 8"
        );
        let pairs: Vec<_> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        LabeledGraphs {
            n,
            end: 1u64 << pairs.len(),
            pairs,
            next: 0,
        }
    }

    /// Number of graphs the iterator yields in total.
    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let mut adj = vec![0u64; self.n];
        for (b, &(i, j)) in self.pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        Some(Graph { n: self.n, adj })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_connected_labelled_graphs() {
        // OEIS A001187: 1, 1, 1, 4, 38, 728, 26704
        let connected: Vec<usize> = (0..=6)
            .map(|n| LabeledGraphs::new(n).filter(Graph::is_connected).count())
            .collect();
        assert_eq!(connected, vec![1, 1, 1, 4, 38, 728, 26704]);
        assert_eq!(LabeledGraphs::new(4).total(), 64);
    }
}
