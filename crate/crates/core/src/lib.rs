//! Exact independence polynomials and the well-coveredness hierarchy.
//!
//! The crate computes the coefficient sequence `s_k` (number of independent
//! sets of size `k`) of small graphs exactly, classifies graphs as
//! well-covered, very well-covered, 1-well-covered or in class W₂, computes
//! the exact quasi-regularizability ratio λ*, and evaluates the known
//! coefficient inequalities for these classes as structured reports.
//!
//! Module map:
//!
//! * [`graph`]: bit-packed simple graphs, named families, corona, graph6.
//! * [`enumeration`]: coefficient sequences, maximal independent sets,
//!   level double counting.
//! * [`classification`]: hierarchy membership and λ*.
//! * [`polynomial`]: big-integer polynomials, corona composition, shape
//!   analysis and Sturm root census.
//! * [`theorems`]: coefficient-bound checks and roller-coaster windows.
//! * [`survey`]: catalog pipeline over graph6 streams.

pub mod classification;
pub mod enumeration;
pub mod graph;
pub mod polynomial;
pub mod survey;
pub mod theorems;

mod decimal;
mod error;

pub use error::{Error, Result};
pub use graph::{Graph, GraphSpec, VertexSet};
