//! The quasi-regularizability ratio
//! `λ*(G) = min { |N(S)| / |S| : S independent, S ≠ ∅ }`.
//!
//! [`lambda_star`] finds λ* by parametric search: for a trial ratio `p/q`
//! it minimizes `q·|N(S)| - p·|S|` over independent `S` (the "deficiency")
//! and, while the minimum is negative, moves to the ratio of the minimizer.
//! Ratios strictly decrease and there are finitely many, so this terminates
//! at the exact minimum. [`lambda_star_enumerated`] walks every independent
//! set instead and serves as the oracle.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Signed;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::enumeration::MEMO_CAPACITY;
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// Largest order accepted by [`lambda_star_enumerated`] by default.
pub const LAMBDA_ENUMERATION_MAX_VERTICES: usize = 24;

/// The exact value of λ*. Graphs without vertices have no constraint at all
/// and get [`LambdaStar::Unbounded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum LambdaStar {
    Finite(Rational64),
    Unbounded,
}

impl LambdaStar {
    /// Whether the graph is λ-quasi-regularizable, i.e. `λ <= λ*`.
    pub fn admits(self, lambda: Rational64) -> bool {
        match self {
            LambdaStar::Finite(v) => lambda <= v,
            LambdaStar::Unbounded => true,
        }
    }

    pub fn finite(self) -> Option<Rational64> {
        match self {
            LambdaStar::Finite(v) => Some(v),
            LambdaStar::Unbounded => None,
        }
    }
}

impl PartialOrd for LambdaStar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LambdaStar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (LambdaStar::Finite(a), LambdaStar::Finite(b)) => a.cmp(b),
            (LambdaStar::Finite(_), LambdaStar::Unbounded) => Ordering::Less,
            (LambdaStar::Unbounded, LambdaStar::Finite(_)) => Ordering::Greater,
            (LambdaStar::Unbounded, LambdaStar::Unbounded) => Ordering::Equal,
        }
    }
}

impl fmt::Display for LambdaStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaStar::Finite(v) => write!(f, "{v}"),
            LambdaStar::Unbounded => f.write_str("inf"),
        }
    }
}

impl FromStr for LambdaStar {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "inf" => Ok(LambdaStar::Unbounded),
            other => other
                .parse::<Rational64>()
                .map(LambdaStar::Finite)
                .map_err(|e| format!("invalid ratio {other:?}: {e}")),
        }
    }
}

impl From<LambdaStar> for String {
    fn from(l: LambdaStar) -> String {
        l.to_string()
    }
}

impl TryFrom<String> for LambdaStar {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

/// Exact λ* by parametric deficiency minimization.
pub fn lambda_star(g: &Graph) -> LambdaStar {
    let n = g.order();
    if n == 0 {
        return LambdaStar::Unbounded;
    }
    let (mut p, mut q) = (0..n).map(|v| (g.degree(v) as i64, 1)).min().unwrap();
    loop {
        let (value, set) = min_deficiency_scaled(g, p, q);
        if value >= 0 {
            return LambdaStar::Finite(Rational64::new(p, q));
        }
        let ratio = Rational64::new(g.neighborhood(set).len() as i64, set.len() as i64);
        debug_assert!(ratio < Rational64::new(p, q));
        p = *ratio.numer();
        q = *ratio.denom();
    }
}

/// Whether `λ·|S| <= |N(S)|` for every independent set `S`.
pub fn is_quasi_regularizable(g: &Graph, lambda: Rational64) -> Result<bool> {
    if !lambda.is_positive() {
        return Err(Error::NonPositiveLambda(lambda.to_string()));
    }
    Ok(min_deficiency_scaled(g, *lambda.numer(), *lambda.denom()).0 >= 0)
}

/// Minimum of `|N(S)| - λ·|S|` over independent `S` (the empty set included,
/// so the value is at most zero), with a minimizing set.
pub fn min_deficiency(g: &Graph, lambda: Rational64) -> (Rational64, VertexSet) {
    let (p, q) = (*lambda.numer(), *lambda.denom());
    let (value, set) = min_deficiency_scaled(g, p, q);
    (Rational64::new(value as i64, q), set)
}

/// λ* by visiting every nonempty independent set.
pub fn lambda_star_enumerated(g: &Graph) -> Result<LambdaStar> {
    let n = g.order();
    if n > LAMBDA_ENUMERATION_MAX_VERTICES {
        return Err(Error::SizeLimit {
            op: "lambda* enumeration",
            n,
            limit: LAMBDA_ENUMERATION_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok(LambdaStar::Unbounded);
    }
    fn walk(g: &Graph, set: u64, covered: u64, allowed: u64, best: &mut (usize, usize)) {
        let mut rest = allowed;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let s = set | 1 << v;
            let nb = covered | g.rows()[v];
            let (num, den) = (nb.count_ones() as usize, s.count_ones() as usize);
            if num * best.1 < best.0 * den {
                *best = (num, den);
            }
            walk(g, s, nb, rest & !g.rows()[v], best);
        }
    }
    let mut best = (usize::MAX / 128, 1);
    walk(g, 0, 0, g.vertices().bits(), &mut best);
    Ok(LambdaStar::Finite(Rational64::new(
        best.0 as i64,
        best.1 as i64,
    )))
}

fn min_deficiency_scaled(g: &Graph, p: i64, q: i64) -> (i128, VertexSet) {
    let mut solver = Deficiency {
        rows: g.rows(),
        p: p as i128,
        q: q as i128,
        memo: FxHashMap::default(),
    };
    let (value, set) = solver.solve(g.vertices().bits(), 0);
    (value, VertexSet(set))
}

/// Minimizes `q·|N(S) ∩ (R ∪ U)| - p·|S|` over independent `S ⊆ R`.
///
/// `R` holds the undecided candidates (none adjacent to the partial set),
/// `U` the vertices outside `R` that are not yet dominated. Vertices already
/// dominated cost nothing more, so they drop out of the state.
struct Deficiency<'g> {
    rows: &'g [u64],
    p: i128,
    q: i128,
    memo: FxHashMap<(u64, u64), (i128, u64)>,
}

impl Deficiency<'_> {
    fn solve(&mut self, r: u64, u: u64) -> (i128, u64) {
        let mut reach = 0;
        for v in VertexSet(r) {
            reach |= self.rows[v];
        }
        let u = u & reach;
        let mut total = (0, 0);
        let mut rest = r;
        while rest != 0 {
            let (rc, uc) = self.component(rest, u);
            rest &= !rc;
            let (value, set) = self.solve_connected(rc, uc);
            total.0 += value;
            total.1 |= set;
        }
        total
    }

    /// The part of `(R, U)` reachable from the lowest vertex of `R`, where a
    /// `U` vertex links the candidates around it.
    fn component(&self, r: u64, u: u64) -> (u64, u64) {
        let start = r & r.wrapping_neg();
        let (mut rc, mut uc) = (start, 0u64);
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.rows[v];
            }
            let new_u = next & u & !uc;
            uc |= new_u;
            for w in VertexSet(new_u) {
                next |= self.rows[w];
            }
            let new_r = next & r & !rc;
            rc |= new_r;
            frontier = new_r;
        }
        (rc, uc)
    }

    fn solve_connected(&mut self, r: u64, u: u64) -> (i128, u64) {
        let live = r | u;
        if r.count_ones() == 1 {
            let v = r.trailing_zeros() as usize;
            let take = self.q * (self.rows[v] & live).count_ones() as i128 - self.p;
            return if take < 0 { (take, r) } else { (0, 0) };
        }
        if let Some(&hit) = self.memo.get(&(r, u)) {
            return hit;
        }
        let mut pivot = 0;
        let mut pivot_deg = 0;
        for v in VertexSet(r) {
            let d = (self.rows[v] & live).count_ones();
            if d > pivot_deg || pivot_deg == 0 {
                pivot = v;
                pivot_deg = d;
            }
        }
        let bit = 1u64 << pivot;
        let skip = self.solve(r & !bit, u | bit);
        let taken = self.solve(r & !(self.rows[pivot] | bit), u & !self.rows[pivot]);
        let take_cost = self.q * (self.rows[pivot] & live).count_ones() as i128 - self.p + taken.0;
        let best = if take_cost < skip.0 {
            (take_cost, taken.1 | bit)
        } else {
            skip
        };
        if self.memo.len() >= MEMO_CAPACITY {
            self.memo.clear();
        }
        self.memo.insert((r, u), best);
        best
    }
}
