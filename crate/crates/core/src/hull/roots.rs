use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{to_f64, Rational};
use crate::poly::{squarefree_decomposition, Poly};

const MAX_ITERATIONS: usize = 2_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericRoot {
    pub re: f64,
    pub im: f64,
    pub multiplicity: u32,
    /// Relative backward error of the squarefree factor at this root.
    pub residual: f64,
}

impl NumericRoot {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Distinct roots of a polynomial with their exact multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct RootCloud {
    pub roots: Vec<NumericRoot>,
    /// Largest per-root residual.
    pub residual_bound: f64,
}

impl RootCloud {
    pub fn degree(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity as usize).sum()
    }
}

pub(crate) fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c)
}

/// `Σ |c_i| |z|^i`, the natural scale of `p(z)`.
pub(crate) fn eval_scale(coeffs: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.abs())
}

pub(crate) fn relative_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let scale = eval_scale(coeffs, z);
    if scale == 0.0 {
        0.0
    } else {
        horner(coeffs, z).norm() / scale
    }
}

/// Simultaneous Aberth–Ehrlich iteration on a polynomial with (ideally)
/// simple roots. `coeffs` run from the constant term up; the last one must
/// be non-zero. Starting points sit on a slightly rotated circle around
/// the root centroid.
pub fn aberth(coeffs: &[f64], tol: f64) -> Result<Vec<Complex64>> {
    // exact zero roots; the relative residual is meaningless near them
    let zeros = coeffs.iter().take_while(|c| **c == 0.0).count();
    if zeros > 0 && zeros < coeffs.len() {
        let mut roots = vec![Complex64::zero(); zeros];
        roots.extend(aberth(&coeffs[zeros..], tol)?);
        return Ok(roots);
    }
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[n];
    if n == 1 {
        return Ok(vec![Complex64::new(-coeffs[0] / lead, 0.0)]);
    }
    let deriv: Vec<f64> = coeffs.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect();
    let center = -coeffs[n - 1] / (n as f64 * lead);
    // Fujiwara bound on the root moduli
    let radius = (1..=n)
        .map(|k| (coeffs[n - k] / lead).abs().powf(1.0 / k as f64))
        .fold(0.0f64, f64::max)
        * 2.0;
    let radius = radius.max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = TAU * k as f64 / n as f64 + 0.4;
            Complex64::new(center, 0.0) + Complex64::from_polar(radius, angle)
        })
        .collect();

    let target = (tol * 1e-3).max(f64::EPSILON * 4.0);
    let mut settled = 0usize;
    for _ in 0..MAX_ITERATIONS {
        let mut worst = 0.0f64;
        for k in 0..n {
            let p = horner(coeffs, z[k]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / horner(&deriv, z[k]);
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::one() - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                worst = worst.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if worst <= target {
            // a few extra sweeps settle the last bits
            settled += 1;
            if settled >= 3 {
                break;
            }
        }
    }
    let worst_residual = z.iter().map(|&r| relative_residual(coeffs, r)).fold(0.0f64, f64::max);
    if !worst_residual.is_finite() || worst_residual > tol {
        return Err(Error::NoConvergence {
            iterations: MAX_ITERATIONS,
        });
    }
    Ok(z)
}

/// All complex roots of `f`, one entry per distinct root, with
/// multiplicities from the exact squarefree decomposition.
pub fn find_roots_numeric(f: &Poly, tol: f64) -> Result<RootCloud> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let mut roots = Vec::new();
    for (part, mult) in squarefree_decomposition(f)? {
        let coeffs = part.to_f64_coeffs();
        for z in aberth(&coeffs, tol)? {
            // snap imaginary noise on real roots of real polynomials
            let im = if z.im.abs() <= f64::EPSILON * 16.0 * (1.0 + z.re.abs()) {
                0.0
            } else {
                z.im
            };
            let z = Complex64::new(z.re, im);
            roots.push(NumericRoot {
                re: z.re,
                im: z.im,
                multiplicity: mult,
                residual: relative_residual(&coeffs, z),
            });
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let residual_bound = roots.iter().map(|r| r.residual).fold(0.0, f64::max);
    Ok(RootCloud { roots, residual_bound })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalRoots {
    /// Every root is rational; exact values with multiplicities, ascending.
    All(Vec<(Rational, u32)>),
    /// At least one root is certainly not rational.
    NotAll,
    /// Floating-point accuracy was too low to decide.
    Undetermined,
}

/// Decides whether all roots of `f` are rational. Numeric roots propose
/// candidates `round(L x) / L`, `L` the leading coefficient of the
/// primitive integer form of each squarefree factor; candidates are then
/// verified exactly.
pub fn rational_roots(f: &Poly, tol: f64) -> Result<RationalRoots> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut found = Vec::new();
    let mut undetermined = false;
    for (part, mult) in squarefree_decomposition(f)? {
        let denom_lcm = part.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let lead = Rational::from_integer(denom_lcm);
        let lead_f = to_f64(&lead);
        let mut verified: Vec<Rational> = Vec::new();
        for z in aberth(&part.to_f64_coeffs(), tol)? {
            let scaled = (z.re * lead_f).round();
            if !scaled.is_finite() {
                undetermined = true;
                continue;
            }
            let candidate = Rational::from_float(scaled).map(|s| s / &lead);
            match candidate {
                Some(c) if part.eval(&c).is_zero() => {
                    if !verified.contains(&c) {
                        verified.push(c);
                    }
                }
                _ => {
                    if lead_f * (1.0 + z.norm()) * 1e-9 > 0.25 {
                        undetermined = true;
                    }
                }
            }
        }
        if verified.len() != part.deg() {
            return Ok(if undetermined {
                RationalRoots::Undetermined
            } else {
                RationalRoots::NotAll
            });
        }
        found.extend(verified.into_iter().map(|r| (r, mult)));
    }
    found.sort();
    Ok(RationalRoots::All(found))
}
