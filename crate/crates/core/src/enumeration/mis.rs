use crate::graph::{Graph, VertexSet};

/// Streams the maximal independent sets of a graph in lexicographic order of
/// their ascending vertex lists.
///
/// Depth-first search that appends vertices in increasing order. A branch is
/// cut when some skipped vertex is still free and no remaining candidate can
/// cover it, since such a branch cannot end in a maximal set.
pub struct MaximalIndependentSets<'g> {
    rows: &'g [u64],
    all: u64,
    stack: Vec<Frame>,
    empty_graph: bool,
}

struct Frame {
    set: u64,
    candidates: u64,
}

impl<'g> MaximalIndependentSets<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Self::within(g, g.vertices())
    }

    /// Maximal independent sets of the induced subgraph `G[within]`, in the
    /// labels of `g`.
    pub fn within(g: &'g Graph, within: VertexSet) -> Self {
        let all = within.intersection(g.vertices()).bits();
        MaximalIndependentSets {
            rows: g.rows(),
            all,
            stack: vec![Frame {
                set: 0,
                candidates: all,
            }],
            empty_graph: all == 0,
        }
    }
}

impl Iterator for MaximalIndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.empty_graph {
            self.empty_graph = false;
            self.stack.clear();
            return Some(VertexSet::EMPTY);
        }
        while let Some(top) = self.stack.last_mut() {
            if top.candidates == 0 {
                self.stack.pop();
                continue;
            }
            let v = top.candidates.trailing_zeros() as usize;
            top.candidates &= top.candidates - 1;
            let set = top.set | 1 << v;

            let mut blocked = set;
            for u in VertexSet(set) {
                blocked |= self.rows[u];
            }
            let free = self.all & !blocked;
            let above = free & !((2u64 << v).wrapping_sub(1));
            let below = free & !above;

            if above == 0 {
                if below == 0 {
                    return Some(VertexSet(set));
                }
                continue;
            }
            let stranded = VertexSet(below).iter().any(|w| self.rows[w] & above == 0);
            if !stranded {
                self.stack.push(Frame {
                    set,
                    candidates: above,
                });
            }
        }
        None
    }
}
