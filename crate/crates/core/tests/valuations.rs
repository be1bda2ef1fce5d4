mod common;

use caforge_core::exactnum::{parse_rational, primes_up_to, vp_binomial, vp_rat, Rational, Valuation};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn kummer_matches_legendre() {
    for p in [2u64, 3, 5, 7, 11, 13] {
        for n in 0..=200u64 {
            for k in 0..=n {
                let expected = common::legendre(p, n) - common::legendre(p, k) - common::legendre(p, n - k);
                assert_eq!(
                    vp_binomial(p, n, k).unwrap(),
                    Valuation::Finite(expected as i64),
                    "p={p} n={n} k={k}"
                );
            }
        }
    }
}

#[test]
fn middle_binomials_of_p_plus_one() {
    for p in primes_up_to(100) {
        for k in 2..p {
            assert!(vp_binomial(p, p + 1, k).unwrap().is_positive(), "p={p} k={k}");
        }
    }
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-5000i64..=5000, 1i64..=5000)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #[test]
    fn valuation_is_additive(a in nonzero_rational(), b in nonzero_rational(), pi in 0usize..6) {
        let p = [2u64, 3, 5, 7, 11, 13][pi];
        prop_assert_eq!(vp_rat(p, &(&a * &b)).unwrap(), vp_rat(p, &a).unwrap() + vp_rat(p, &b).unwrap());
    }

    #[test]
    fn ultrametric_inequality(a in nonzero_rational(), b in nonzero_rational(), pi in 0usize..6) {
        let p = [2u64, 3, 5, 7, 11, 13][pi];
        let (va, vb) = (vp_rat(p, &a).unwrap(), vp_rat(p, &b).unwrap());
        let sum = &a + &b;
        let vs = vp_rat(p, &sum).unwrap();
        prop_assert!(vs >= va.min(vb));
        if va != vb {
            prop_assert_eq!(vs, va.min(vb));
        }
        if sum.is_zero() {
            prop_assert_eq!(vs, Valuation::Infinite);
        }
    }

    #[test]
    fn rational_text_round_trip(a in nonzero_rational()) {
        prop_assert_eq!(parse_rational(&a.to_string()).unwrap(), a);
    }
}
