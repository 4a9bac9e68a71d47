//! Immutable simple graphs on at most 64 vertices.
//!
//! Adjacency rows are packed bit sets, so neighbourhood unions and
//! independence tests cost one machine word per vertex.

mod format;
mod generate;
mod set;
mod spec;

use std::fmt;

pub use format::{
    parse_edge_list, parse_graph6, read_graph_file, to_edge_list, to_graph6, GRAPH6_MAX_VERTICES,
};
pub use generate::LabeledGraphs;
pub use set::VertexSet;
pub use spec::{parse_graph_spec, GraphSpec};

use crate::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A finite simple graph. Vertices are `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and looplessness.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let all = VertexSet::full(n).bits();
        for (v, &row) in adj.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - (row & !all).leading_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Cycle `0-1-...-(n-1)-0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Arity {
                family: "C",
                arg: n,
                reason: "a cycle needs at least 3 vertices",
            });
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Complete graph, `n >= 1`.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Arity {
                family: "K",
                arg: n,
                reason: "a complete graph needs at least 1 vertex",
            });
        }
        check_order(n)?;
        let all = VertexSet::full(n).bits();
        Ok(Graph {
            n,
            adj: (0..n).map(|v| all & !(1 << v)).collect(),
        })
    }

    /// Path `0-1-...-(n-1)`, `n >= 1`.
    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Arity {
                family: "P",
                arg: n,
                reason: "a path needs at least 1 vertex",
            });
        }
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// The star `K_{1,leaves}`: center 0, leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Result<Self> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Raw adjacency rows.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// `N(S) = {v : N(v) ∩ S ≠ ∅}`. May intersect `S` when `S` is not independent.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = 0;
        for v in s {
            out |= self.adj[v];
        }
        VertexSet(out)
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        self.neighborhood(s).union(s)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Connected components, each as a vertex set, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Connected components of the induced subgraph `G[within]`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = within.0;
        while rest != 0 {
            let comp = self.component_of(rest.trailing_zeros() as usize, VertexSet(rest));
            rest &= !comp.0;
            out.push(comp);
        }
        out
    }

    /// The component of `G[within]` containing `v`.
    #[inline]
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for u in VertexSet(frontier) {
                next |= self.adj[u];
            }
            next &= within.0 & !comp;
            comp |= next;
            frontier = next;
        }
        VertexSet(comp)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertices()).len() == self.n
    }

    /// The induced subgraph on `keep`, relabelled order-preservingly.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let keep = keep.intersection(self.vertices());
        let index: Vec<usize> = keep.to_vec();
        let adj = index
            .iter()
            .map(|&v| {
                let row = self.adj[v] & keep.0;
                index
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| row >> u & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Graph {
            n: index.len(),
            adj,
        }
    }

    /// `G - v`, with the remaining vertices relabelled order-preservingly.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(self.induced(self.vertices().without(v)))
    }

    /// `G ∪ H`; `h`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph> {
        let n = self.n + h.n;
        check_order(n)?;
        let off = self.n;
        let adj = self
            .adj
            .iter()
            .copied()
            .chain(h.adj.iter().map(|&r| r << off))
            .collect();
        Ok(Graph { n, adj })
    }

    /// `m` disjoint copies of `self`.
    pub fn copies(&self, m: usize) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for _ in 0..m {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    /// The corona `G ∘ {H_v}`: `self` plus one copy of `family[v]` per vertex `v`,
    /// with `v` joined to every vertex of its copy.
    ///
    /// Vertices of `self` keep their labels; the copy of `family[v]` follows,
    /// in order of `v`.
    pub fn corona(&self, family: &[Graph]) -> Result<Graph> {
        if family.len() != self.n {
            return Err(Error::CoronaFamilyLength {
                expected: self.n,
                got: family.len(),
            });
        }
        let total = self.n + family.iter().map(|h| h.n).sum::<usize>();
        check_order(total)?;
        let mut adj = self.adj.clone();
        adj.resize(total, 0);
        let mut off = self.n;
        for (v, h) in family.iter().enumerate() {
            let block = VertexSet::full(h.n).bits() << off;
            adj[v] |= block;
            for (i, &row) in h.adj.iter().enumerate() {
                adj[off + i] = row << off | 1 << v;
            }
            off += h.n;
        }
        Ok(Graph { n: total, adj })
    }

    /// `G ∘ H` with the same `H` at every vertex.
    pub fn corona_uniform(&self, h: &Graph) -> Result<Graph> {
        self.corona(&vec![h.clone(); self.n])
    }

    /// Checks the simple-graph invariants. Every constructor upholds these;
    /// exposed for tests.
    pub fn is_well_formed(&self) -> bool {
        self.adj.len() == self.n
            && self.n <= MAX_VERTICES
            && (0..self.n).all(|v| {
                let row = self.adj[v];
                row >> v & 1 == 0
                    && row & !VertexSet::full(self.n).bits() == 0
                    && VertexSet(row).iter().all(|u| self.adj[u] >> v & 1 == 1)
            })
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
