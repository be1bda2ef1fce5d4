//! Dense univariate polynomials with exact rational coefficients.

mod algo;
mod factored;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, rat_int, to_f64, Integer, Rational};

pub use algo::{gcd, gcd_many, resultant, resultant_sylvester, squarefree_decomposition, sylvester_matrix};
pub use factored::{FactoredPoly, Root};
pub use text::{format_coeffs, parse_coeffs};

/// `coeffs[i]` is the coefficient of `z^i`. The last stored coefficient is
/// never zero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Monic polynomial `Π (z - r)^m`.
    pub fn from_roots(roots: &[(Rational, u32)]) -> Self {
        roots.iter().fold(Poly::one(), |acc, (r, m)| {
            let linear = Poly::from_coeffs(vec![-r.clone(), Rational::one()]);
            acc * linear.pow(*m)
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Result<Poly> {
        let lead = self.lead().ok_or(Error::ZeroPolynomial)?.clone();
        Ok(self.scale(&lead.recip()))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * z + c)
    }

    /// k-th derivative.
    pub fn derivative(&self, k: usize) -> Poly {
        if k == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(k)
            .map(|(i, c)| {
                // i (i-1) ... (i-k+1)
                let falling: Integer = (i - k + 1..=i).map(Integer::from).product();
                c * Rational::from_integer(falling)
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// `f(z + shift)`.
    pub fn taylor_shift(&self, shift: &Rational) -> Poly {
        let linear = Poly::from_coeffs(vec![shift.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &linear) + &Poly::constant(c.clone()))
    }

    /// `f(scale · z)`.
    pub fn scale_argument(&self, scale: &Rational) -> Poly {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c * &power;
                power *= scale;
                out
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// `alpha^{-N} f(alpha z + beta)` for monic `f` of degree `N`; the result
    /// is again monic, with roots `(r - beta) / alpha`.
    pub fn affine_transform(&self, alpha: &Rational, beta: &Rational) -> Result<Poly> {
        if alpha.is_zero() {
            return Err(Error::ZeroScale);
        }
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let n = self.deg() as i32;
        let g = self.taylor_shift(beta).scale_argument(alpha);
        Ok(g.scale(&alpha.pow(-n)))
    }

    /// Quotient and remainder; `divisor` must be non-zero.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let lead = divisor.lead().ok_or(Error::ZeroPolynomial)?;
        let dd = divisor.deg();
        if self.deg() < dd || self.is_zero() {
            return Ok((Poly::zero(), self.clone()));
        }
        let inv = lead.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact quotient; errors on a zero divisor, and debug-asserts a zero
    /// remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Ok(q)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.coeffs.iter().map(Signed::abs).max().unwrap_or_else(Rational::zero)
    }

    /// Binomially weighted coefficients of a monic polynomial: writing
    /// `f = Σ C(N,k) a_k z^{N-k}`, returns `a_0 = 1, a_1, ..., a_N`.
    pub fn normalized_coeffs(&self) -> Result<NormalizedCoeffs> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let n = self.deg();
        let a = (0..=n)
            .map(|k| {
                let weight = Rational::from_integer(binomial(n as u64, k as u64));
                &self.coeffs[n - k] / weight
            })
            .collect();
        Ok(NormalizedCoeffs { degree: n, a })
    }
}

/// `a_0..a_N` with `f(z) = Σ_k C(N,k) a_k z^{N-k}` and `a_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedCoeffs {
    pub degree: usize,
    pub a: Vec<Rational>,
}

impl NormalizedCoeffs {
    pub fn to_poly(&self) -> Poly {
        let n = self.degree;
        let coeffs = (0..=n)
            .map(|i| {
                let k = n - i;
                &self.a[k] * Rational::from_integer(binomial(n as u64, k as u64))
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

/// Human-readable form, highest degree first, e.g. `z^3 - 1/4*z`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}
