//! Binomial divisibility sieves for degree `N = p + 1` and general `N`.
//!
//! For a candidate of degree `N = p + 1` normalized so that its center of
//! mass sits at 1, let `l_1 < ... < l_m` in `2..=N-2` be the orders with
//! `f^(N - l_j)(1) = 0`. The determinant of [`DeltaMatrix`] built from those
//! orders must then be divisible by `p`. [`delta_sieve`] lists every index
//! set that survives.

use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, ensure_prime, is_prime, primes_up_to, vp_binomial, vp_rat, Integer, Rational};
use crate::matrix::{bareiss_det, det_mod_p};
use crate::par::{map_ordered, Execution};

/// The `k` in `1..N` for which `q` does not divide `C(N, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionSet {
    pub n: u64,
    pub q: u64,
    pub ks: Vec<u64>,
}

pub fn binom_exception_set(n: u64, q: u64) -> Result<ExceptionSet> {
    ensure_prime(q)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!("degree must be at least 2, got {n}")));
    }
    let mut ks = Vec::new();
    for k in 1..n {
        if !vp_binomial(q, n, k)?.is_positive() {
            ks.push(k);
        }
    }
    Ok(ExceptionSet { n, q, ks })
}

/// The `(m+1) x (m+1)` integer matrix attached to orders `l_1 < ... < l_m`:
///
/// ```text
/// row j < m : [-1, C(l_j-2, l_1-2) l_j, ..., C(l_j-2, l_j-2) l_j = l_j, 0, ..., 0]
/// last row  : [-1, (-1)^{l_1}, ..., (-1)^{l_m}]
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMatrix {
    indices: Vec<usize>,
    entries: Vec<Vec<Integer>>,
}

impl DeltaMatrix {
    /// Orders must be non-empty, strictly increasing and at least 2.
    pub fn new(indices: &[usize]) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        if let Some(&bad) = indices.iter().find(|&&l| l < 2) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                lo: 2,
                hi: usize::MAX,
            });
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedIndices);
        }
        let m = indices.len();
        let mut entries = vec![vec![Integer::zero(); m + 1]; m + 1];
        for (j, &lj) in indices.iter().enumerate() {
            entries[j][0] = -Integer::one();
            for (i, &li) in indices.iter().enumerate().take(j + 1) {
                entries[j][i + 1] = binomial((lj - 2) as u64, (li - 2) as u64) * Integer::from(lj);
            }
        }
        entries[m][0] = -Integer::one();
        for (i, &li) in indices.iter().enumerate() {
            entries[m][i + 1] = if li % 2 == 0 { Integer::one() } else { -Integer::one() };
        }
        Ok(DeltaMatrix {
            indices: indices.to_vec(),
            entries,
        })
    }

    /// As [`DeltaMatrix::new`], additionally requiring `l_m <= n - 2`.
    pub fn for_degree(n: usize, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&l| l + 2 > n) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                lo: 2,
                hi: n.saturating_sub(2),
            });
        }
        DeltaMatrix::new(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn entries(&self) -> &[Vec<Integer>] {
        &self.entries
    }

    /// Exact determinant (Bareiss).
    pub fn det(&self) -> Integer {
        bareiss_det(&self.entries)
    }

    /// Determinant reduced into `GF(p)`.
    pub fn det_mod(&self, p: u64) -> u64 {
        det_mod_p(&self.entries, p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct SieveOptions {
    pub exec: Execution,
    /// Number of contiguous groups of leading indices; `None` gives one
    /// group per leading index.
    pub shards: Option<usize>,
    /// Test divisibility with the all-mod-`p` determinant instead of the
    /// exact one.
    pub modular: bool,
}

/// Every `m`-subset of `{2..=p-1}` (orders for `N = p + 1`) whose
/// determinant is divisible by `p`, in lexicographic order.
pub fn delta_sieve(p: u64, m: usize) -> Result<Vec<Vec<usize>>> {
    delta_sieve_with(p, m, SieveOptions::default())
}

pub fn delta_sieve_with(p: u64, m: usize, opts: SieveOptions) -> Result<Vec<Vec<usize>>> {
    ensure_prime(p)?;
    if m == 0 {
        return Err(Error::InvalidArgument("index set size must be at least 1".into()));
    }
    let n = (p + 1) as usize;
    let pool: Vec<usize> = (2..=n.saturating_sub(2)).collect();
    if m > pool.len() {
        return Ok(Vec::new());
    }
    let leading: Vec<usize> = (0..=pool.len() - m).collect();
    let shard_count = opts.shards.unwrap_or(leading.len()).clamp(1, leading.len());
    let per = leading.len().div_ceil(shard_count);
    let shards: Vec<Vec<usize>> = leading.chunks(per).map(<[usize]>::to_vec).collect();

    let keep = |set: &[usize]| -> bool {
        let matrix = DeltaMatrix::new(set).expect("sieve builds valid index sets");
        if opts.modular {
            matrix.det_mod(p) == 0
        } else {
            matrix.det().is_multiple_of(&Integer::from(p))
        }
    };
    let found = map_ordered(opts.exec, shards, |shard| {
        let mut out = Vec::new();
        for first in shard {
            let mut prefix = vec![pool[first]];
            for_each_combination(&pool[first + 1..], m - 1, &mut prefix, &mut |set| {
                if keep(set) {
                    out.push(set.to_vec());
                }
            });
        }
        out
    });
    Ok(found.into_iter().flatten().collect())
}

/// Calls `visit` with `prefix` extended by each `k`-subset of `pool`, in
/// lexicographic order.
pub(crate) fn for_each_combination<T: Copy>(pool: &[T], k: usize, prefix: &mut Vec<T>, visit: &mut dyn FnMut(&[T])) {
    if k == 0 {
        visit(prefix);
        return;
    }
    for i in 0..pool.len() {
        if pool.len() - i < k {
            break;
        }
        prefix.push(pool[i]);
        for_each_combination(&pool[i + 1..], k - 1, prefix, visit);
        prefix.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceRow {
    pub l: u64,
    /// `C(p+1, l) / p`
    pub lhs: String,
    /// `(-1)^l / (l (l-1))`
    pub rhs: String,
    /// `v_p(lhs - rhs) > 0`
    pub holds: bool,
}

/// Checks `C(p+1, l)/p ≡ (-1)^l / (l(l-1))` modulo `p` for `2 <= l <= p-1`.
pub fn binomial_congruence(p: u64) -> Result<Vec<CongruenceRow>> {
    ensure_prime(p)?;
    (2..p)
        .map(|l| {
            let lhs = Rational::new(binomial(p + 1, l), Integer::from(p));
            let sign: i64 = if l % 2 == 0 { 1 } else { -1 };
            let rhs = Rational::new(Integer::from(sign), Integer::from(l * (l - 1)));
            let holds = vp_rat(p, &(&lhs - &rhs))?.is_positive();
            Ok(CongruenceRow {
                l,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                holds,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DegreeConstraint {
    /// `f^(low)` and `f^(high)` have no common root.
    DisjointDerivativeRoots { low: u64, high: u64 },
    /// No `a` with `f(a) = f^(l)(a) = 0` for every listed `l`.
    NoCommonRootWithF { orders: Vec<u64> },
    /// The constraint is unsatisfiable, so no non-trivial example of this
    /// degree exists.
    DegreeExcluded { reason: String },
}

impl DegreeConstraint {
    pub fn describe(&self) -> String {
        match self {
            DegreeConstraint::DisjointDerivativeRoots { low, high } => {
                format!("f^({low}) and f^({high}) share no root")
            }
            DegreeConstraint::NoCommonRootWithF { orders } => {
                let list: Vec<String> = orders.iter().map(|l| format!("f^({l})")).collect();
                format!("no common root of f, {}", list.join(", "))
            }
            DegreeConstraint::DegreeExcluded { reason } => format!("degree excluded: {reason}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeConstraintEntry {
    pub exceptions: ExceptionSet,
    pub constraint: DegreeConstraint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeConstraintReport {
    pub n: u64,
    pub entries: Vec<DegreeConstraintEntry>,
}

fn power_of(q: u64, mut x: u64) -> Option<u32> {
    let mut e = 0;
    while x > 1 && x.is_multiple_of(q) {
        x /= q;
        e += 1;
    }
    (x == 1).then_some(e)
}

/// For every prime `q <= N`, the exception set of `C(N, ·)` modulo `q` and
/// the root constraint it forces on a non-trivial example of degree `N`.
pub fn degree_constraint_report(n: u64) -> Result<DegreeConstraintReport> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("degree must be at least 4, got {n}")));
    }
    let mut entries = Vec::new();
    for q in primes_up_to(n) {
        let exceptions = binom_exception_set(n, q)?;
        let constraint = classify_exceptions(n, q, &exceptions.ks);
        entries.push(DegreeConstraintEntry { exceptions, constraint });
    }
    Ok(DegreeConstraintReport { n, entries })
}

fn classify_exceptions(n: u64, q: u64, ks: &[u64]) -> DegreeConstraint {
    match ks {
        [] => DegreeConstraint::DegreeExcluded {
            reason: format!("{q} divides every C({n}, k), so f would have no root"),
        },
        [x] if 2 * x == n && power_of(q, *x).is_some() => DegreeConstraint::DegreeExcluded {
            reason: format!("N = 2*{x} with {x} a power of {q}: f^({x}) would share no root with itself"),
        },
        [x, y] if x + y == n && power_of(q, *x).is_some() && power_of(q, *y).is_some() => {
            DegreeConstraint::DisjointDerivativeRoots { low: *x, high: *y }
        }
        _ => DegreeConstraint::NoCommonRootWithF { orders: ks.to_vec() },
    }
}

/// `true` if `N - 1` is prime, i.e. the `p + 1` sieves apply.
pub fn is_prime_plus_one(n: u64) -> bool {
    n >= 3 && is_prime(n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Integer>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
            .collect()
    }

    #[test]
    fn exception_sets_degree_twelve() {
        assert_eq!(binom_exception_set(12, 2).unwrap().ks, vec![4, 8]);
        assert_eq!(binom_exception_set(12, 3).unwrap().ks, vec![3, 9]);
        assert_eq!(binom_exception_set(12, 11).unwrap().ks, vec![1, 11]);
        assert!(binom_exception_set(4, 2).unwrap().ks.is_empty());
        assert!(binom_exception_set(12, 4).is_err());
        assert!(binom_exception_set(1, 2).is_err());
    }

    #[test]
    fn matrices() {
        assert_eq!(
            DeltaMatrix::new(&[2]).unwrap().entries(),
            ints(&[&[-1, 2], &[-1, 1]]).as_slice()
        );
        assert_eq!(
            DeltaMatrix::new(&[3, 8]).unwrap().entries(),
            ints(&[&[-1, 3, 0], &[-1, 48, 8], &[-1, -1, 1]]).as_slice()
        );
        assert_eq!(
            DeltaMatrix::new(&[5, 6]).unwrap().entries(),
            ints(&[&[-1, 5, 0], &[-1, 24, 6], &[-1, -1, 1]]).as_slice()
        );
        assert_eq!(DeltaMatrix::new(&[]), Err(Error::EmptyIndexSet));
        assert_eq!(DeltaMatrix::new(&[5, 3]), Err(Error::UnsortedIndices));
        assert!(DeltaMatrix::new(&[1, 3]).is_err());
        assert!(DeltaMatrix::for_degree(12, &[3, 11]).is_err());
        assert!(DeltaMatrix::for_degree(12, &[3, 10]).is_ok());
    }

    #[test]
    fn determinants() {
        assert_eq!(DeltaMatrix::new(&[6]).unwrap().det(), Integer::from(5));
        assert_eq!(DeltaMatrix::new(&[7]).unwrap().det(), Integer::from(8));
        assert_eq!(DeltaMatrix::new(&[3, 8]).unwrap().det(), Integer::from(-77));
        assert_eq!(DeltaMatrix::new(&[5, 6]).unwrap().det(), Integer::from(-55));
        assert_eq!(DeltaMatrix::new(&[5, 6]).unwrap().det_mod(11), 0);
    }

    #[test]
    fn sieve_examples() {
        assert!(delta_sieve(11, 1).unwrap().is_empty());
        // Δ(7, 9) = 110 = 10 * 11 also survives
        assert_eq!(
            delta_sieve(11, 2).unwrap(),
            vec![vec![3, 8], vec![5, 6], vec![6, 8], vec![6, 9], vec![7, 9]]
        );
        assert_eq!(DeltaMatrix::new(&[7, 9]).unwrap().det(), Integer::from(110));
        assert!(delta_sieve(3, 1).unwrap().is_empty());
        assert!(delta_sieve(2, 1).unwrap().is_empty());
        assert!(delta_sieve(12, 1).is_err());
        assert!(delta_sieve(11, 0).is_err());
    }

    #[test]
    fn sharding_and_modular_path_agree() {
        for p in [7u64, 11, 13] {
            for m in 1..=3 {
                let reference = delta_sieve_with(
                    p,
                    m,
                    SieveOptions {
                        exec: Execution::Sequential,
                        shards: Some(1),
                        modular: false,
                    },
                )
                .unwrap();
                for shards in [None, Some(2), Some(3), Some(100)] {
                    for modular in [false, true] {
                        for exec in [Execution::Sequential, Execution::Parallel] {
                            let got = delta_sieve_with(p, m, SieveOptions { exec, shards, modular }).unwrap();
                            assert_eq!(got, reference, "p={p} m={m} shards={shards:?} modular={modular}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn congruence_rows() {
        let rows = binomial_congruence(11).unwrap();
        assert_eq!(rows.len(), 9);
        assert!(rows.iter().all(|r| r.holds));
        assert_eq!(rows[0].l, 2);
        assert_eq!(rows[0].lhs, "6");
        assert_eq!(rows[0].rhs, "1/2");
    }

    #[test]
    fn degree_twelve_report() {
        let report = degree_constraint_report(12).unwrap();
        let by_q = |q: u64| report.entries.iter().find(|e| e.exceptions.q == q).unwrap();
        assert_eq!(
            by_q(2).constraint,
            DegreeConstraint::DisjointDerivativeRoots { low: 4, high: 8 }
        );
        assert_eq!(
            by_q(3).constraint,
            DegreeConstraint::DisjointDerivativeRoots { low: 3, high: 9 }
        );
        assert_eq!(
            by_q(11).constraint,
            DegreeConstraint::DisjointDerivativeRoots { low: 1, high: 11 }
        );
        assert!(matches!(by_q(5).constraint, DegreeConstraint::NoCommonRootWithF { .. }));
        assert_eq!(by_q(2).constraint.describe(), "f^(4) and f^(8) share no root");
    }

    #[test]
    fn excluded_degrees() {
        let six = degree_constraint_report(6).unwrap();
        let q3 = six.entries.iter().find(|e| e.exceptions.q == 3).unwrap();
        assert_eq!(q3.exceptions.ks, vec![3]);
        assert!(matches!(q3.constraint, DegreeConstraint::DegreeExcluded { .. }));
        let four = degree_constraint_report(4).unwrap();
        assert!(matches!(
            four.entries[0].constraint,
            DegreeConstraint::DegreeExcluded { .. }
        ));
        assert!(degree_constraint_report(3).is_err());
    }
}
