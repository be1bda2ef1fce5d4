//! Seeded generators and independent oracles shared by the test targets.
#![allow(dead_code)]

use caforge_core::exactnum::{rat, Integer, Rational};
use caforge_core::poly::{gcd, Poly};
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> Poly {
    let mut coeffs: Vec<Rational> = (0..degree).map(|_| small_rational(rng, 9, 5)).collect();
    let mut lead = small_rational(rng, 9, 5);
    while lead.is_zero() {
        lead = small_rational(rng, 9, 5);
    }
    coeffs.push(lead);
    Poly::from_coeffs(coeffs)
}

/// Monic polynomial with `distinct` rational roots and random multiplicities
/// summing to `degree`.
pub fn random_rooted(rng: &mut ChaCha8Rng, degree: usize, distinct: usize) -> Vec<(Rational, u32)> {
    assert!(distinct >= 1 && distinct <= degree);
    let mut roots: Vec<Rational> = Vec::new();
    while roots.len() < distinct {
        let r = small_rational(rng, 6, 3);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    let mut mults = vec![1u32; distinct];
    for _ in distinct..degree {
        let i = rng.gen_range(0..distinct);
        mults[i] += 1;
    }
    roots.into_iter().zip(mults).collect()
}

/// `v_p(n!)` by Legendre's formula.
pub fn legendre(p: u64, n: u64) -> u64 {
    let mut total = 0;
    let mut pk = p;
    while pk <= n {
        total += n / pk;
        pk = match pk.checked_mul(p) {
            Some(x) => x,
            None => break,
        };
    }
    total
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<Integer>]) -> Integer {
    let n = m.len();
    if n == 0 {
        return Integer::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = Integer::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Integer>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * cofactor_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Roots as eigenvalues of the companion matrix.
pub fn companion_roots(f: &Poly) -> Vec<Complex64> {
    let n = f.deg();
    let c: Vec<f64> = f
        .monic()
        .unwrap()
        .coeffs()
        .iter()
        .map(|x| x.to_f64().unwrap())
        .collect();
    if n == 1 {
        return vec![Complex64::new(-c[0], 0.0)];
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -c[i];
    }
    m.complex_eigenvalues().iter().copied().collect()
}

/// `|f(z)| / Σ |c_j| max(1, |z|)^j`
fn eval_relative(f: &Poly, z: Complex64) -> f64 {
    let mut value = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    let r = z.norm().max(1.0);
    for c in f.coeffs().iter().rev() {
        let c = c.to_f64().unwrap();
        value = value * z + c;
        scale = scale * r + c.abs();
    }
    value.norm() / scale.max(f64::MIN_POSITIVE)
}

/// Per-order verdicts `f^(k)` shares a root with `f`, `1 <= k < N`, decided
/// numerically: the distinct roots come from the companion matrix of the
/// squarefree part and `f^(k)` must nearly vanish at one of them.
pub fn numeric_shared_roots(f: &Poly, tol: f64) -> Vec<bool> {
    let n = f.deg();
    let g = gcd(f, &f.derivative(1)).unwrap();
    let part = f.div_exact(&g).unwrap();
    let roots = companion_roots(&part);
    (1..n)
        .map(|k| {
            let d = f.derivative(k);
            roots.iter().any(|&z| eval_relative(&d, z) <= tol)
        })
        .collect()
}

pub fn max_abs_f64(f: &Poly) -> f64 {
    f.coeffs().iter().map(|c| c.abs().to_f64().unwrap()).fold(0.0, f64::max)
}
