use proptest::prelude::*;

use vfilt_core::bfun::BFunction;
use vfilt_core::filtration::{dt_action, hodge_level, nu, p_function, t_action, weight_level};
use vfilt_core::ratpoly::{int, rat, Rational, RootPoly};

fn root() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (-5i64..=5).prop_map(int),
        (-10i64..=10).prop_map(|k| rat(k, 2)),
        (-15i64..=15).prop_map(|k| rat(k, 3)),
    ]
}

fn bfun() -> impl Strategy<Value = BFunction> {
    prop::collection::vec(root(), 1..=5).prop_map(BFunction::new)
}

fn alpha() -> impl Strategy<Value = Rational> {
    (-24i64..=48).prop_map(|j| rat(j, 12))
}

fn eps() -> Rational {
    rat(1, 1000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn shift_covariance(b in bfun(), a in alpha()) {
        let one = int(1);
        let lifted = p_function(&b.shift(&one), &(&a + &one)).poly;
        prop_assert_eq!(lifted, p_function(&b, &a).poly.shift(&one));
    }

    #[test]
    fn jump_identity(b in bfun(), a in alpha()) {
        let after = p_function(&b, &(&a + eps())).poly;
        let v = nu(&b, &a) as u32;
        let want = p_function(&b, &a).poly.mul(&RootPoly::from_roots([(-a.clone(), v)]));
        prop_assert_eq!(after, want);
    }

    #[test]
    fn monotone_in_alpha(b in bfun(), a in alpha(), step in 0i64..=24) {
        let lo = p_function(&b, &a).poly;
        let hi = p_function(&b, &(&a + rat(step, 12))).poly;
        prop_assert!(lo.divides(&hi));
    }

    #[test]
    fn no_root_at_minus_alpha(b in bfun(), a in alpha()) {
        prop_assert_eq!(p_function(&b, &a).poly.multiplicity(&-a), 0);
    }

    #[test]
    fn weight_level_bounded_by_degree(b in bfun(), a in alpha()) {
        prop_assert!(weight_level(&b, &a) <= b.degree());
    }

    #[test]
    fn hodge_level_left_continuous(b in bfun(), a in alpha()) {
        prop_assert_eq!(hodge_level(&b, &(&a - eps())), hodge_level(&b, &a));
    }

    #[test]
    fn t_then_dt_round_trips(b in bfun(), a in alpha()) {
        let p = p_function(&b, &a);
        let t = t_action(&p);
        prop_assert_eq!(&t, &p_function(&b.shift(&int(1)), &(&a + int(1))));
        let (outside, back) = dt_action(&t);
        prop_assert!(outside);
        prop_assert_eq!(back, p);
    }
}
