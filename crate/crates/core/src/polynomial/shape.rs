use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::IntPolynomial;

/// Order shape of a coefficient sequence `a_0, ..., a_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeProfile {
    /// Non-decreasing up to some index, non-increasing after it.
    pub unimodal: bool,
    /// First and last index attaining the maximum; `None` for an empty sequence.
    pub mode_indices: Option<(usize, usize)>,
    /// Largest `p` with `a_0 <= ... <= a_p`.
    pub nondecreasing_prefix_end: usize,
    /// Smallest `q` with `a_q >= ... >= a_d`.
    pub nonincreasing_suffix_start: usize,
    /// `a_k^2 >= a_{k-1}·a_{k+1}` at every interior index.
    pub log_concave: bool,
}

pub fn shape_profile(p: &IntPolynomial) -> ShapeProfile {
    shape_of(p.coeffs())
}

pub fn shape_of(a: &[BigInt]) -> ShapeProfile {
    if a.is_empty() {
        return ShapeProfile {
            unimodal: true,
            mode_indices: None,
            nondecreasing_prefix_end: 0,
            nonincreasing_suffix_start: 0,
            log_concave: true,
        };
    }
    let last = a.len() - 1;
    let prefix = (0..last).find(|&k| a[k] > a[k + 1]).unwrap_or(last);
    let suffix = (1..=last).rev().find(|&k| a[k - 1] < a[k]).unwrap_or(0);
    let max = a.iter().max().unwrap();
    let first_max = a.iter().position(|v| v == max).unwrap();
    let last_max = a.iter().rposition(|v| v == max).unwrap();
    let log_concave = (1..last).all(|k| &a[k] * &a[k] >= &a[k - 1] * &a[k + 1]);
    ShapeProfile {
        unimodal: prefix + 1 >= suffix,
        mode_indices: Some((first_max, last_max)),
        nondecreasing_prefix_end: prefix,
        nonincreasing_suffix_start: suffix,
        log_concave,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(v: &[i64]) -> ShapeProfile {
        shape_profile(&IntPolynomial::from_i64s(v))
    }

    #[test]
    fn examples() {
        let s = shape(&[1, 12, 51, 93, 62]);
        assert!(s.unimodal);
        assert_eq!(s.mode_indices, Some((3, 3)));

        let s = shape(&[1]);
        assert!(s.unimodal);
        assert_eq!(
            (s.nondecreasing_prefix_end, s.nonincreasing_suffix_start),
            (0, 0)
        );

        let s = shape(&[1, 9, 24, 20]);
        assert!(s.unimodal && s.log_concave);

        let s = shape(&[2, 1, 2]);
        assert!(!s.unimodal);
        assert_eq!(
            (s.nondecreasing_prefix_end, s.nonincreasing_suffix_start),
            (0, 2)
        );
        assert_eq!(s.mode_indices, Some((0, 2)));

        let s = shape(&[1, 3, 3, 1]);
        assert!(s.unimodal);
        assert_eq!(
            (s.nondecreasing_prefix_end, s.nonincreasing_suffix_start),
            (2, 1)
        );
        assert_eq!(s.mode_indices, Some((1, 2)));

        assert!(!shape(&[1, 1, 4]).log_concave);
        assert!(shape_of(&[]).unimodal);
    }
}
