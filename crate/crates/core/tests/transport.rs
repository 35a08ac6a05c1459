use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vfilt_core::bfun::{c_poly, transport, transport_by_gcd, transport_exponents, BFunction};
use vfilt_core::filtration::p_function;
use vfilt_core::oracle::{
    c_poly_bruteforce, c_poly_partial, p_function_greedy, p_function_greedy_with, stabilization_bound,
    transport_bruteforce,
};
use vfilt_core::ratpoly::{int, pochhammer, rat, Rational, RootPoly};

fn root() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (-5i64..=5).prop_map(int),
        (-10i64..=10).prop_map(|k| rat(k, 2)),
        (-15i64..=15).prop_map(|k| rat(k, 3)),
    ]
}

fn poly(max_deg: usize) -> impl Strategy<Value = RootPoly> {
    prop::collection::vec(root(), 0..=max_deg).prop_map(|rs| RootPoly::from_shifts(rs.iter()))
}

fn bfun(max_deg: usize) -> impl Strategy<Value = BFunction> {
    prop::collection::vec(root(), 1..=max_deg).prop_map(BFunction::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn c_poly_matches_partial_gcds(p in poly(6), q in poly(6)) {
        prop_assert_eq!(c_poly(&p, &q), c_poly_bruteforce(&p, &q));
    }

    #[test]
    fn partial_gcds_have_stabilized(p in poly(6), q in poly(6)) {
        let n = stabilization_bound(&p, &q);
        let g = c_poly_partial(&p, &q, n);
        prop_assert_eq!(&g, &c_poly_partial(&p, &q, n + 1));
        prop_assert_eq!(&g, &c_poly_partial(&p, &q, n + 5));
    }

    #[test]
    fn greedy_transport_matches_gcd_route(b in bfun(6), p in poly(6)) {
        let greedy = transport(&b, &p);
        prop_assert_eq!(&greedy, &transport_by_gcd(&b, &p));
        prop_assert_eq!(&greedy, &transport_bruteforce(&b, &p));
        prop_assert_eq!(greedy.degree(), b.degree());
    }

    #[test]
    fn greedy_runs_divide_p(b in bfun(6), p in poly(6)) {
        let ks = transport_exponents(&b, &p);
        let used = b.lambdas().iter().zip(&ks).fold(RootPoly::one(), |acc, (l, k)| acc.mul(&pochhammer(l, *k)));
        prop_assert!(used.divides(&p));
    }

    #[test]
    fn p_function_is_order_independent(b in bfun(4), j in -8i64..=16, seed in any::<u64>()) {
        let alpha = rat(j, 4);
        let closed = p_function(&b, &alpha).poly;
        prop_assert_eq!(&p_function_greedy(&b, &alpha), &closed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shuffled = p_function_greedy_with(&b, &alpha, |xs| {
            let idx: Vec<usize> = (0..xs.len()).collect();
            *idx.choose(&mut rng).unwrap()
        });
        prop_assert_eq!(shuffled, closed);
    }
}

#[test]
fn pinned_transport() {
    let b = BFunction::new(vec![int(1), int(2)]);
    let p = RootPoly::linear(&int(1));
    let want = BFunction::new(vec![int(2), int(2)]);
    assert_eq!(transport(&b, &p), want);
    assert_eq!(transport_by_gcd(&b, &p), want);
    assert_eq!(transport_bruteforce(&b, &p), want);
    assert_eq!(want.to_string(), "(s+2)^2");
}

#[test]
fn transport_of_a_long_run() {
    let b = BFunction::new(vec![int(1), int(2)]);
    let p = pochhammer(&int(1), 3);
    let moved = transport(&b, &p);
    assert_eq!(moved, BFunction::new(vec![int(2), int(4)]));
    assert_eq!(moved, transport_bruteforce(&b, &p));
}
