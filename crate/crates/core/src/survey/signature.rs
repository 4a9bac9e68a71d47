use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::enumeration::CoefficientSequence;
use crate::theorems::Window;
use crate::{Error, Result};

/// The observed order of the coefficients inside a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSignature {
    pub window: Window,
    /// Competition ranks of `s_lo, ..., s_hi`: rank 1 is the largest value and
    /// equal values share a rank.
    pub pattern: Vec<usize>,
    /// The same ranks when all values are distinct, i.e. a permutation.
    pub strict_pattern: Option<Vec<usize>>,
}

impl WindowSignature {
    pub fn is_strict(&self) -> bool {
        self.strict_pattern.is_some()
    }
}

pub fn pattern_signature(coeffs: &CoefficientSequence, window: Window) -> Result<WindowSignature> {
    let alpha = coeffs.alpha();
    if !window.is_empty() && window.hi > alpha {
        return Err(Error::WindowOutOfRange {
            lo: window.lo,
            hi: window.hi,
            alpha,
        });
    }
    let values: Vec<&BigUint> = if window.is_empty() {
        Vec::new()
    } else {
        coeffs.as_slice()[window.lo..=window.hi].iter().collect()
    };
    let pattern = competition_ranks(&values);
    let mut sorted = values.clone();
    sorted.sort();
    sorted.dedup();
    let strict_pattern = (sorted.len() == values.len()).then(|| pattern.clone());
    Ok(WindowSignature {
        window,
        pattern,
        strict_pattern,
    })
}

/// Rank 1 for the largest value; ties share the best rank of their group.
fn competition_ranks<T: Ord>(values: &[T]) -> Vec<usize> {
    values
        .iter()
        .map(|v| 1 + values.iter().filter(|w| *w > v).count())
        .collect()
}
