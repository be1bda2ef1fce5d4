//! Exact integers, rationals and `p`-adic valuations.
//!
//! Rationals are `num_rational::BigRational`, which keeps every value
//! reduced with a positive denominator, so equality is structural.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

/// `v_p` of a number: a finite exponent, or `+∞` for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// Strictly positive valuation, `+∞` included.
    pub fn is_positive(self) -> bool {
        match self {
            Valuation::Finite(v) => v > 0,
            Valuation::Infinite => true,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("+inf"),
        }
    }
}

/// Deterministic trial division; arguments here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&q| is_prime(q)).collect()
}

pub(crate) fn ensure_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Exponent of `p` in `n`; `+∞` when `n = 0`.
pub fn vp_int(p: u64, n: &Integer) -> Result<Valuation> {
    ensure_prime(p)?;
    Ok(vp_int_unchecked(p, n))
}

fn vp_int_unchecked(p: u64, n: &Integer) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let p = Integer::from(p);
    let mut rest = n.abs();
    let mut r = 0i64;
    loop {
        let (q, rem) = rest.div_rem(&p);
        if !rem.is_zero() {
            return Valuation::Finite(r);
        }
        rest = q;
        r += 1;
    }
}

/// `v_p(num) - v_p(den)` on the reduced fraction.
pub fn vp_rat(p: u64, q: &Rational) -> Result<Valuation> {
    ensure_prime(p)?;
    if q.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let num = vp_int_unchecked(p, q.numer()).finite().unwrap_or_default();
    let den = vp_int_unchecked(p, q.denom()).finite().unwrap_or_default();
    Ok(Valuation::Finite(num - den))
}

/// `v_p(C(n, k))` as the number of carries when adding `k` and `n - k` in
/// base `p` (Kummer).
pub fn vp_binomial(p: u64, n: u64, k: u64) -> Result<Valuation> {
    ensure_prime(p)?;
    if k > n {
        return Err(Error::BinomialRange { n, k });
    }
    let (mut a, mut b) = (k, n - k);
    let mut carry = 0u64;
    let mut carries = 0i64;
    while a > 0 || b > 0 || carry > 0 {
        let digit_sum = a % p + b % p + carry;
        carry = u64::from(digit_sum >= p);
        carries += carry as i64;
        a /= p;
        b /= p;
    }
    Ok(Valuation::Finite(carries))
}

pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * Integer::from(i))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn rat_int(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `p/q`, `p` or `-p/q`, tolerating surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: Integer = num.parse().map_err(|_| bad())?;
    let den: Integer = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Nearest `f64`; rationals far outside the `f64` range saturate.
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}
