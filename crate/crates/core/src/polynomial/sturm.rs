use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntPolynomial;
use crate::{Error, Result};

/// Exact count of the distinct real roots of an integer polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCensus {
    pub degree: usize,
    /// Degree of `p / gcd(p, p')`, the number of distinct complex roots.
    pub squarefree_degree: usize,
    pub distinct_real_roots: usize,
    /// Every complex root is real.
    pub real_rooted: bool,
}

/// Counts distinct real roots with a Sturm sequence on the square-free part.
/// All arithmetic is over the integers; no floating point is involved.
pub fn real_root_census(p: &IntPolynomial) -> Result<RootCensus> {
    let Some(degree) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if degree == 0 {
        return Ok(RootCensus {
            degree,
            squarefree_degree: 0,
            distinct_real_roots: 0,
            real_rooted: true,
        });
    }
    let g = gcd(p, &p.derivative());
    let sqf = exact_quotient(p, &g).primitive_part();
    let squarefree_degree = sqf.degree().unwrap();
    let distinct_real_roots = sturm_count(&sqf);
    Ok(RootCensus {
        degree,
        squarefree_degree,
        distinct_real_roots,
        real_rooted: distinct_real_roots == squarefree_degree,
    })
}

/// Number of distinct real roots of a square-free polynomial of positive degree.
fn sturm_count(p: &IntPolynomial) -> usize {
    let mut seq = vec![p.clone(), p.derivative().primitive_part()];
    loop {
        let [.., a, b] = seq.as_slice() else {
            unreachable!()
        };
        if b.degree() == Some(0) {
            break;
        }
        let r = positive_pseudo_remainder(a, b);
        if r.is_zero() {
            break;
        }
        seq.push(primitive_keep_sign(&(-&r)));
    }
    let at_pos_inf: Vec<bool> = seq
        .iter()
        .map(|s| s.leading().unwrap().is_positive())
        .collect();
    let at_neg_inf: Vec<bool> = seq
        .iter()
        .map(|s| s.leading().unwrap().is_positive() == (s.degree().unwrap() % 2 == 0))
        .collect();
    sign_changes(&at_neg_inf) - sign_changes(&at_pos_inf)
}

fn sign_changes(signs: &[bool]) -> usize {
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// A positive multiple of the remainder of `a` divided by `b` over the rationals.
fn positive_pseudo_remainder(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("nonzero divisor");
    let lb = b.leading().unwrap().clone();
    let scale = lb.abs();
    let sign = lb.signum();
    let mut r = a.clone();
    while let Some(dr) = r.degree().filter(|&d| d >= db) {
        let lr = r.leading().unwrap().clone();
        let shift = IntPolynomial::monomial(lr * &sign, dr - db);
        r = &r.scale(&scale) - &(&shift * b);
    }
    r
}

/// Divides by the content but never flips the sign.
fn primitive_keep_sign(p: &IntPolynomial) -> IntPolynomial {
    let c = p.content();
    if c.is_zero() {
        return p.clone();
    }
    IntPolynomial::new(p.coeffs().iter().map(|a| a / &c).collect())
}

/// Primitive gcd with positive leading coefficient.
fn gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut a = a.primitive_part();
    let mut b = b.primitive_part();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = positive_pseudo_remainder(&a, &b).primitive_part();
        a = b;
        b = r;
    }
    a
}

/// `a / b` when `b` is primitive and divides `a`; the quotient then has
/// integer coefficients, so long division never leaves the integers.
fn exact_quotient(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("nonzero divisor");
    let lb = b.leading().unwrap();
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.degree().map_or(0, |d| d.saturating_sub(db) + 1)];
    while let Some(dr) = r.degree().filter(|&d| d >= db) {
        let c = r.leading().unwrap() / lb;
        debug_assert!(!c.is_zero(), "divisor does not divide exactly");
        r = &r - &(&IntPolynomial::monomial(c.clone(), dr - db) * b);
        q[dr - db] = c;
    }
    debug_assert!(r.is_zero(), "divisor does not divide exactly");
    IntPolynomial::new(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn census(v: &[i64]) -> RootCensus {
        real_root_census(&IntPolynomial::from_i64s(v)).unwrap()
    }

    #[test]
    fn worked_examples() {
        let c = census(&[1, 12, 51, 93, 62]);
        assert_eq!((c.degree, c.squarefree_degree), (4, 4));
        assert!(!c.real_rooted);
        assert!(census(&[1, 9, 24, 20]).real_rooted);
        assert_eq!(census(&[1, 7, 16, 12]).squarefree_degree, 2);
        assert!(census(&[1, 7, 16, 12]).real_rooted);
    }

    #[test]
    fn binomial_powers() {
        for m in 1..=8 {
            let c = real_root_census(&IntPolynomial::from_i64s(&[1, 1]).pow(m)).unwrap();
            assert_eq!(c.degree, m as usize);
            assert_eq!(c.squarefree_degree, 1);
            assert_eq!(c.distinct_real_roots, 1);
            assert!(c.real_rooted);
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(census(&[5]).distinct_real_roots, 0);
        assert!(census(&[5]).real_rooted);
        assert_eq!(census(&[1, 0, 1]).distinct_real_roots, 0);
        assert!(!census(&[1, 0, 1]).real_rooted);
        assert_eq!(census(&[-1, 0, 1]).distinct_real_roots, 2);
        assert_eq!(census(&[0, -1, 0, 1]).distinct_real_roots, 3);
        assert_eq!(census(&[-2, 0, 0, 1]).distinct_real_roots, 1);
        assert_eq!(census(&[3, -2]).distinct_real_roots, 1);
        let c = census(&[0, 0, -1, 0, 1]);
        assert_eq!((c.squarefree_degree, c.distinct_real_roots), (3, 3));
        assert!(real_root_census(&IntPolynomial::zero()).is_err());
    }
}
