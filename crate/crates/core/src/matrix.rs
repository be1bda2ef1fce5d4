//! Fraction-free integer determinants.

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::exactnum::{Integer, Rational};

/// Determinant of a square integer matrix by Bareiss elimination.
///
/// Every intermediate division is exact. A zero pivot is replaced by a
/// lower row with a non-zero entry in the same column; each swap flips
/// the sign.
pub fn bareiss_det(rows: &[Vec<Integer>]) -> Integer {
    let n = rows.len();
    if n == 0 {
        return Integer::one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut a: Vec<Vec<Integer>> = rows.to_vec();
    let mut negate = false;
    let mut prev = Integer::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Integer::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant of a rational matrix: each row is scaled to integers, the
/// Bareiss determinant taken, and the scaling divided back out.
pub fn rational_det(rows: &[Vec<Rational>]) -> Rational {
    let mut scale = Integer::one();
    let int_rows: Vec<Vec<Integer>> = rows
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(Integer::one(), |acc, q| acc.lcm(q.denom()));
            scale *= &lcm;
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect();
    Rational::new(bareiss_det(&int_rows), scale)
}

/// Determinant over `GF(p)` by Gaussian elimination.
pub fn det_mod_p(rows: &[Vec<Integer>], p: u64) -> u64 {
    let n = rows.len();
    let modulus = Integer::from(p);
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let m = x.mod_floor(&modulus);
                    u64::try_from(m).expect("residue fits in u64")
                })
                .collect()
        })
        .collect();
    let p128 = p as u128;
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p128) as u64;
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if piv != k {
            a.swap(k, piv);
            det = (p - det) % p;
        }
        det = mul(det, a[k][k]);
        let inv = pow_mod(a[k][k], p - 2, p);
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot = &top[k];
        for row in bottom {
            let factor = mul(row[k], inv);
            if factor == 0 {
                continue;
            }
            for (x, &y) in row[k..].iter_mut().zip(&pivot[k..]) {
                *x = (*x + p - mul(factor, y)) % p;
            }
        }
    }
    det
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}
