//! Power sums of the roots of `f` and of its derivatives, read off the
//! binomially weighted coefficients.
//!
//! With `f = Σ C(N,k) a_k z^{N-k}`, the monic `l`-th derivative is
//! `Σ_k C(N-l,k) a_k z^{N-l-k}`, so one coefficient vector serves every
//! level. Newton's identities at level `l` read
//!
//! ```text
//! Σ_{k=1..j} σ_k(l) C(N-l, j-k) a_{j-k} = -j C(N-l, j) a_j,   1 <= j <= N-l
//! ```

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, Rational};
use crate::par::{map_ordered, Execution};
use crate::poly::NormalizedCoeffs;

/// `levels[l][m - 1]` is `σ_m(l)`, the m-th power sum of the roots of
/// `f^(l)`, for `1 <= m <= N - l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumTable {
    pub degree: usize,
    pub levels: Vec<Vec<Rational>>,
}

impl PowerSumTable {
    pub fn sigma(&self, m: usize, level: usize) -> Option<&Rational> {
        self.levels.get(level)?.get(m.checked_sub(1)?)
    }
}

/// `σ_1(l) .. σ_{m_max}(l)`.
pub fn power_sums(a: &NormalizedCoeffs, level: usize, m_max: usize) -> Result<Vec<Rational>> {
    let big_n = a.degree;
    if big_n == 0 || level > big_n - 1 {
        return Err(Error::IndexOutOfRange {
            index: level,
            lo: 0,
            hi: big_n.saturating_sub(1),
        });
    }
    let n = big_n - level;
    if m_max > n {
        return Err(Error::IndexOutOfRange {
            index: m_max,
            lo: 0,
            hi: n,
        });
    }
    // e[i] = C(n, i) a_i, the i-th coefficient of the monic derivative
    let e: Vec<Rational> = (0..=m_max)
        .map(|i| &a.a[i] * Rational::from_integer(binomial(n as u64, i as u64)))
        .collect();
    let mut sigma: Vec<Rational> = Vec::with_capacity(m_max);
    for j in 1..=m_max {
        let mut s = -Rational::from_integer(j.into()) * &e[j];
        for k in 1..j {
            s -= &sigma[k - 1] * &e[j - k];
        }
        sigma.push(s);
    }
    Ok(sigma)
}

pub fn power_sum_table(a: &NormalizedCoeffs, exec: Execution) -> Result<PowerSumTable> {
    let n = a.degree;
    let levels = map_ordered(exec, (0..n).collect(), |l| power_sums(a, l, n - l))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(PowerSumTable { degree: n, levels })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterMassInvariance {
    pub holds: bool,
    /// `σ_1(0) / N`, the center of mass of the roots of `f`.
    pub center: Rational,
    pub table: PowerSumTable,
}

/// Checks `σ_1(l) / (N - l) = σ_1(0) / N` for every level.
pub fn center_mass_invariance(a: &NormalizedCoeffs) -> Result<CenterMassInvariance> {
    let table = power_sum_table(a, Execution::default())?;
    let n = a.degree;
    let mean = |l: usize| &table.levels[l][0] / Rational::from_integer((n - l).into());
    let center = mean(0);
    let holds = (1..n).all(|l| mean(l) == center);
    Ok(CenterMassInvariance { holds, center, table })
}

/// Direct `Σ r^m` over roots with multiplicity.
pub fn root_power_sum(roots: &[(Rational, u32)], m: u32) -> Rational {
    roots.iter().fold(Rational::zero(), |acc, (r, mult)| {
        acc + r.pow(m as i32) * Rational::from_integer((*mult).into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};
    use crate::poly::Poly;

    #[test]
    fn cubic_power_sums() {
        let a = Poly::from_ints(&[0, -1, 0, 1]).normalized_coeffs().unwrap();
        assert_eq!(a.a, vec![rat(1, 1), rat(0, 1), rat(-1, 3), rat(0, 1)]);
        assert_eq!(power_sums(&a, 0, 3).unwrap(), vec![rat_int(0), rat_int(2), rat_int(0)]);
    }

    #[test]
    fn pure_power_has_zero_sums() {
        let a = Poly::monomial(rat(1, 1), 7).normalized_coeffs().unwrap();
        for l in 0..7 {
            assert!(power_sums(&a, l, 7 - l).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn double_root() {
        let a = Poly::from_roots(&[(rat(1, 1), 2)]).normalized_coeffs().unwrap();
        assert_eq!(power_sums(&a, 0, 2).unwrap(), vec![rat_int(2), rat_int(2)]);
    }

    #[test]
    fn range_errors() {
        let a = Poly::from_ints(&[0, -1, 0, 1]).normalized_coeffs().unwrap();
        assert!(power_sums(&a, 3, 1).is_err());
        assert!(power_sums(&a, 1, 3).is_err());
        assert!(power_sums(&a, 1, 2).is_ok());
    }

    #[test]
    fn invariance_examples() {
        let r = center_mass_invariance(&Poly::from_ints(&[-1, 0, 1]).normalized_coeffs().unwrap()).unwrap();
        assert!(r.holds);
        assert_eq!(r.center, rat(0, 1));
        let r = center_mass_invariance(&Poly::from_ints(&[0, 0, -3, 1]).normalized_coeffs().unwrap()).unwrap();
        assert!(r.holds);
        assert_eq!(r.center, rat(1, 1));
        // f' = 3z^2 - 6z has roots {0, 2}
        assert_eq!(r.table.sigma(1, 1), Some(&rat(2, 1)));
        assert_eq!(r.table.sigma(2, 1), Some(&rat(4, 1)));
    }
}
