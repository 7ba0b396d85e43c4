//! Property tests for the algebra layer.

use proptest::prelude::*;

use prym_core::qalg::rat::{int, rat};
use prym_core::qalg::{
    disc_cubic, poly_gcd, rational_roots, resultant, RatFn, UniPoly,
};

fn small_poly() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(-6i64..=6, 1..5).prop_map(|v| UniPoly::from_i64(&v))
}

fn nonzero_poly() -> impl Strategy<Value = UniPoly> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_is_multiplicative(p in nonzero_poly(), q in nonzero_poly(), r in nonzero_poly()) {
        let lhs = resultant(&(&p * &q), &r).unwrap();
        let rhs = resultant(&p, &r).unwrap() * resultant(&q, &r).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn disc_cubic_vanishes_iff_tau_has_repeated_root(t1 in -5i64..=5, t2 in -5i64..=5, t3 in -5i64..=5) {
        let tau = UniPoly::from_i64(&[t3, t2, t1, 1]);
        let disc = disc_cubic(&int(t1), &int(t2), &int(t3));
        let shared = poly_gcd(&tau, &tau.derivative()).deg().unwrap_or(0) >= 1;
        prop_assert_eq!(disc == int(0), shared);
    }

    #[test]
    fn ratfn_canonicalization_is_idempotent(n in nonzero_poly(), d in nonzero_poly()) {
        let r = RatFn::new(n, d).unwrap();
        let r2 = RatFn::new(r.num().clone(), r.den().clone()).unwrap();
        prop_assert_eq!(&r, &r2);
    }

    #[test]
    fn rational_roots_are_exact_zeros(p in nonzero_poly()) {
        for root in rational_roots(&p).unwrap() {
            prop_assert_eq!(p.eval(&root), int(0));
        }
    }

    #[test]
    fn rational_roots_finds_planted_roots(
        nums in proptest::collection::vec(-9i64..=9, 3),
        dens in proptest::collection::vec(1i64..=7, 3),
        cof in proptest::collection::vec(-4i64..=4, 1..4),
    ) {
        let roots: Vec<_> = nums.iter().zip(&dens).map(|(&n, &d)| rat(n, d)).collect();
        let mut p = UniPoly::from_roots(&roots);
        let cofactor = UniPoly::from_i64(&cof);
        if !cofactor.is_zero() {
            p = &p * &cofactor;
        }
        let found = rational_roots(&p).unwrap();
        for r in &roots {
            prop_assert!(found.contains(r));
        }
    }
}
