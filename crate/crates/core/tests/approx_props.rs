use num::complex::Complex64;
use num::{BigInt, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zerograph::approx::{
    edge_cover_approx, log_distance, low_order_coeffs_ising_line, low_order_independent_set_counts,
    taylor_interpolate,
};
use zerograph::graphs::{gnp, random_hypergraph, random_uniform_hypergraph};
use zerograph::partition::{independence_poly, ising_line_graph_poly, Limits};
use zerograph::poly::{rat, rational_to_f64, ExactPoly, Rational};

fn to_c(p: &ExactPoly, m: usize) -> Vec<Complex64> {
    (0..=m)
        .map(|k| Complex64::new(rational_to_f64(&p.coeff(k)), 0.0))
        .collect()
}

#[test]
fn interpolation_is_additive_over_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let limits = Limits::default();
    for _ in 0..20 {
        let g1 = random_hypergraph(6, rng.gen_range(1..6), 3, &mut rng).unwrap();
        let g2 = random_hypergraph(5, rng.gen_range(1..6), 3, &mut rng).unwrap();
        let union = g1.disjoint_union(&g2);
        let m = 6;
        let count = |h| -> Vec<Complex64> {
            low_order_independent_set_counts(h, m, &limits)
                .unwrap()
                .iter()
                .map(|c: &BigInt| Complex64::new(c.to_string().parse().unwrap(), 0.0))
                .collect()
        };
        let xi = Complex64::new(rng.gen_range(-0.05..0.05), rng.gen_range(-0.05..0.05));
        let a = taylor_interpolate(&count(&g1), xi).unwrap();
        let b = taylor_interpolate(&count(&g2), xi).unwrap();
        let ab = taylor_interpolate(&count(&union), xi).unwrap();
        let sum = Complex64::from(a.approx_log) + Complex64::from(b.approx_log);
        assert!(log_distance(sum, ab.approx_log.into()) < 1e-12);
    }
}

#[test]
fn independent_set_prefix_matches_polynomial() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let limits = Limits::default();
    for _ in 0..30 {
        let h = random_hypergraph(7, rng.gen_range(0..8), 3, &mut rng).unwrap();
        let p = independence_poly(&h).unwrap();
        let m = rng.gen_range(1..10);
        let counts = low_order_independent_set_counts(&h, m, &limits).unwrap();
        assert_eq!(counts.len(), m + 1);
        for (k, c) in counts.iter().enumerate() {
            assert_eq!(Rational::from_integer(c.clone()), p.coeff(k));
        }
        assert!(counts.iter().skip(h.n() + 1).all(Zero::is_zero));
    }
}

#[test]
fn line_graph_prefix_matches_normalized_polynomial() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let limits = Limits::default();
    for _ in 0..20 {
        let g = gnp(rng.gen_range(2..7), 0.5, &mut rng);
        let b = rat(rng.gen_range(3..9), 2);
        let p = ising_line_graph_poly(&g, &b).unwrap();
        let m = g.num_edges() + 2;
        let a = low_order_coeffs_ising_line(&g, &b, m, &limits).unwrap();
        let c0 = p.coeff(0);
        for (k, ak) in a.iter().enumerate() {
            assert_eq!(ak.clone(), p.coeff(k) / &c0, "k={k}");
        }
    }
}

#[test]
fn edge_cover_error_sweep_is_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let limits = Limits::default();
    for _ in 0..10 {
        let k = 3;
        let h = random_uniform_hypergraph(9, rng.gen_range(3..8), k, &mut rng)
            .unwrap()
            .without_isolated();
        let xi = Complex64::from_polar(
            3.0 * 2f64.powi(k as i32),
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        let r = edge_cover_approx(&h, xi, 6, false, &limits).unwrap();
        for t in &r.trace {
            let err = t.abs_err.unwrap();
            assert!(
                err <= t.tail_bound.unwrap() + 1e-9,
                "order {} err {err}",
                t.order
            );
        }
        assert!(!r.diverging);
    }
}

#[test]
fn truncation_error_within_tail_bound() {
    // roots -1/2 and -1/3
    let p = ExactPoly::from_ints(&[1, 5, 6]);
    let xi = Complex64::new(0.1, 0.05);
    let r = taylor_interpolate(&to_c(&p, 12), xi)
        .unwrap()
        .with_exact(p.eval_complex(xi).ln())
        .with_radius(2, 1.0 / 3.0);
    for t in &r.trace {
        assert!(t.abs_err.unwrap() <= t.tail_bound.unwrap());
    }
    assert!(r.abs_err.unwrap() < 1e-5);
}
