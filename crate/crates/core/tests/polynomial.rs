mod common;

use common::{graphs, random_graph, rng};
use indpoly::enumeration::independence_coefficients;
use indpoly::polynomial::{corona_compose, real_root_census, shape_profile, IntPolynomial};
use indpoly::Graph;
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::Rng;

fn poly_of(g: &Graph) -> IntPolynomial {
    IntPolynomial::from(&independence_coefficients(g))
}

/// Real roots counted from the eigenvalues of the companion matrix, or `None`
/// when some eigenvalue is too close to the real axis to classify.
fn float_real_roots(p: &IntPolynomial) -> Option<usize> {
    let d = p.degree().unwrap();
    let c: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap()).collect();
    let lead = c[d];
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -c[i] / lead;
    }
    let mut real = 0;
    for z in m.complex_eigenvalues().iter() {
        let scale = 1.0 + z.re.abs();
        let im = z.im.abs() / scale;
        if im < 1e-9 {
            real += 1;
        } else if im < 1e-4 {
            return None;
        }
    }
    Some(real)
}

#[test]
fn corona_compose_matches_enumeration_on_random_pairs() {
    let mut r = rng(11);
    for _ in 0..200 {
        let hn = r.gen_range(1..=6);
        let yn = r.gen_range(1..=4);
        let h = random_graph(&mut r, hn, 0.5);
        let y = random_graph(&mut r, yn, 0.5);
        let composed = corona_compose(&poly_of(&h), &poly_of(&y), hn).unwrap();
        assert_eq!(
            composed,
            poly_of(&h.corona_uniform(&y).unwrap()),
            "{h:?} {y:?}"
        );
    }
}

#[test]
fn corona_compose_examples() {
    let p4 = Graph::path(4).unwrap();
    let k1 = Graph::complete(1).unwrap();
    let composed = corona_compose(&poly_of(&p4), &IntPolynomial::from_i64s(&[1, 1]), 4).unwrap();
    assert_eq!(composed, poly_of(&p4.corona_uniform(&k1).unwrap()));

    let p3 = Graph::path(3).unwrap();
    let k2 = IntPolynomial::from_i64s(&[1, 2]);
    let composed = corona_compose(&poly_of(&p3), &k2, 3).unwrap();
    assert!(real_root_census(&composed).unwrap().real_rooted);
}

#[test]
fn sturm_census_agrees_with_companion_eigenvalues() {
    let mut r = rng(12);
    let mut compared = 0;
    let mut attempts = 0;
    while compared < 100 {
        attempts += 1;
        assert!(attempts < 10_000, "too few usable random polynomials");
        let d = r.gen_range(1..=8);
        let mut c: Vec<i64> = (0..=d).map(|_| r.gen_range(-9..=9)).collect();
        if c[d] == 0 {
            c[d] = 1;
        }
        let p = IntPolynomial::from_i64s(&c);
        let census = real_root_census(&p).unwrap();
        if census.squarefree_degree != census.degree {
            continue;
        }
        let Some(float) = float_real_roots(&p) else {
            continue;
        };
        assert_eq!(census.distinct_real_roots, float, "{p}");
        compared += 1;
    }
}

#[test]
fn census_bounds_hold_for_graph_polynomials() {
    let mut r = rng(13);
    for _ in 0..200 {
        let n = r.gen_range(1..=14);
        let g = random_graph(&mut r, n, 0.3);
        let c = real_root_census(&poly_of(&g)).unwrap();
        assert!(c.distinct_real_roots <= c.squarefree_degree);
        assert!(c.squarefree_degree <= c.degree);
        if c.real_rooted {
            assert!(shape_profile(&poly_of(&g)).log_concave, "{g:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn products_of_linear_factors_are_real_rooted_and_log_concave(
        factors in proptest::collection::vec((1i64..20, 1i64..20), 1..8)
    ) {
        let p = factors
            .iter()
            .fold(IntPolynomial::one(), |acc, &(a, b)| &acc * &IntPolynomial::from_i64s(&[a, b]));
        let census = real_root_census(&p).unwrap();
        prop_assert!(census.real_rooted);
        let shape = shape_profile(&p);
        prop_assert!(shape.log_concave);
        prop_assert!(shape.unimodal);
    }

    #[test]
    fn shape_and_census_ignore_positive_scaling(g in graphs(12), c in 1i64..1000) {
        let p = poly_of(&g);
        let scaled = p.scale(&BigInt::from(c));
        prop_assert_eq!(shape_profile(&scaled), shape_profile(&p));
        prop_assert_eq!(real_root_census(&scaled).unwrap(), real_root_census(&p).unwrap());
    }

    #[test]
    fn corona_compose_matches_enumeration(h in graphs(6), y in graphs(4)) {
        prop_assume!(y.order() > 0);
        let composed = corona_compose(&poly_of(&h), &poly_of(&y), h.order()).unwrap();
        prop_assert_eq!(composed, poly_of(&h.corona_uniform(&y).unwrap()));
    }
}
