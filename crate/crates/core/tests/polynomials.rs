mod common;

use caforge_core::exactnum::{binomial, factorial, rat, Rational};
use caforge_core::poly::{gcd, resultant, resultant_sylvester, squarefree_decomposition, NormalizedCoeffs, Poly};
use num_traits::{One, Zero};
use rand::Rng;

use common::{random_poly, rng, small_rational};

#[test]
fn product_rule() {
    let mut r = rng(1);
    for _ in 0..200 {
        let (df, dg) = (r.gen_range(0..=10), r.gen_range(0..=10));
        let f = random_poly(&mut r, df);
        let g = random_poly(&mut r, dg);
        let lhs = (&f * &g).derivative(1);
        let rhs = &(&f.derivative(1) * &g) + &(&f * &g.derivative(1));
        assert_eq!(lhs, rhs);
    }
}

/// Pairs with a forced common factor half of the time.
fn random_pair(r: &mut rand_chacha::ChaCha8Rng) -> (Poly, Poly) {
    let mut f = {
        let d = r.gen_range(1..=5);
        random_poly(r, d)
    };
    let mut g = {
        let d = r.gen_range(1..=5);
        random_poly(r, d)
    };
    if r.gen_bool(0.5) {
        let common = {
            let d = r.gen_range(1..=3);
            random_poly(r, d)
        };
        f = &f * &common;
        g = &g * &common;
    }
    (f, g)
}

#[test]
fn resultant_vanishes_iff_common_factor() {
    let mut r = rng(2);
    let mut zero_count = 0;
    for _ in 0..300 {
        let (f, g) = random_pair(&mut r);
        let res = resultant(&f, &g).unwrap();
        let common = gcd(&f, &g).unwrap();
        assert_eq!(res.is_zero(), common.deg() >= 1, "f = {f}, g = {g}");
        zero_count += usize::from(res.is_zero());
    }
    assert!(zero_count > 50);
}

#[test]
fn euclid_and_sylvester_resultants_agree() {
    let mut r = rng(3);
    for _ in 0..200 {
        let (f, g) = random_pair(&mut r);
        assert_eq!(
            resultant(&f, &g).unwrap(),
            resultant_sylvester(&f, &g).unwrap(),
            "f = {f}, g = {g}"
        );
    }
}

#[test]
fn resultant_of_products_of_linears() {
    // res(Π(z - x_i), Π(z - y_j)) = Π (x_i - y_j)
    let mut r = rng(4);
    for _ in 0..50 {
        let xs: Vec<Rational> = (0..r.gen_range(1..=4)).map(|_| small_rational(&mut r, 7, 4)).collect();
        let ys: Vec<Rational> = (0..r.gen_range(1..=4)).map(|_| small_rational(&mut r, 7, 4)).collect();
        let f = Poly::from_roots(&xs.iter().map(|x| (x.clone(), 1)).collect::<Vec<_>>());
        let g = Poly::from_roots(&ys.iter().map(|y| (y.clone(), 1)).collect::<Vec<_>>());
        let mut expected = Rational::one();
        for x in &xs {
            for y in &ys {
                expected *= x - y;
            }
        }
        assert_eq!(resultant(&f, &g).unwrap(), expected);
    }
}

#[test]
fn affine_transform_inverts() {
    let mut r = rng(5);
    for _ in 0..100 {
        let f = {
            let d = r.gen_range(1..=9);
            random_poly(&mut r, d)
        }
        .monic()
        .unwrap();
        let mut alpha = small_rational(&mut r, 9, 7);
        while alpha.is_zero() {
            alpha = small_rational(&mut r, 9, 7);
        }
        let beta = small_rational(&mut r, 9, 7);
        let g = f.affine_transform(&alpha, &beta).unwrap();
        assert!(g.is_monic());
        let back = g.affine_transform(&alpha.recip(), &(-&beta / &alpha)).unwrap();
        assert_eq!(back, f);
    }
}

#[test]
fn normalized_coefficients_round_trip() {
    let mut r = rng(6);
    for _ in 0..100 {
        let f = {
            let d = r.gen_range(1..=12);
            random_poly(&mut r, d)
        }
        .monic()
        .unwrap();
        assert_eq!(f.normalized_coeffs().unwrap().to_poly(), f);
    }
}

#[test]
fn normalized_derivatives_keep_their_coefficients() {
    // (l!/N!) f^(N-l) = Σ_{k<=l} C(l,k) a_k z^(l-k)
    let mut r = rng(7);
    for n in 1..=14usize {
        let mut a: Vec<Rational> = vec![Rational::one()];
        a.extend((1..=n).map(|_| small_rational(&mut r, 9, 6)));
        let f = NormalizedCoeffs {
            degree: n,
            a: a.clone(),
        }
        .to_poly();
        for l in 0..=n {
            let scale = Rational::new(factorial(l as u64), factorial(n as u64));
            let lhs = f.derivative(n - l).scale(&scale);
            let mut coeffs = vec![Rational::zero(); l + 1];
            for (k, ak) in a.iter().take(l + 1).enumerate() {
                coeffs[l - k] = ak * Rational::from_integer(binomial(l as u64, k as u64));
            }
            assert_eq!(lhs, Poly::from_coeffs(coeffs), "N={n} l={l}");
        }
    }
}

#[test]
fn squarefree_parts_rebuild_the_polynomial() {
    let mut r = rng(8);
    for _ in 0..100 {
        let degree = r.gen_range(1..=10);
        let distinct = r.gen_range(1..=degree);
        let roots = common::random_rooted(&mut r, degree, distinct);
        let f = Poly::from_roots(&roots);
        let parts = squarefree_decomposition(&f).unwrap();
        let mut rebuilt = Poly::one();
        for (part, m) in &parts {
            assert!(part.is_monic());
            assert!(gcd(part, &part.derivative(1)).unwrap().is_constant());
            rebuilt = &rebuilt * &part.pow(*m);
        }
        assert_eq!(rebuilt, f);
        let distinct_found: usize = parts.iter().map(|(p, _)| p.deg()).sum();
        assert_eq!(distinct_found, distinct);
    }
}

#[test]
fn taylor_shift_moves_roots() {
    let f = Poly::from_roots(&[(rat(1, 2), 2), (rat(-3, 1), 1)]);
    let g = f.taylor_shift(&rat(1, 2));
    assert!(g.eval(&Rational::zero()).is_zero());
    assert!(g.eval(&rat(-7, 2)).is_zero());
}
