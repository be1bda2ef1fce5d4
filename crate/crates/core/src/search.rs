//! Exhaustive small searches and closed-form checkpoints.

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::ca::is_ca;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, rat, Rational};
use crate::hull::aberth;
use crate::par::{map_ordered, Execution};
use crate::poly::{gcd, Poly};
use crate::report::{Check, Verdict};

pub const MAX_SEARCH_DEGREE: usize = 10;
pub const MAX_SEARCH_BOUND: i64 = 10;

/// Distinct integer roots with multiplicities, ascending.
pub type RootMultiset = Vec<(i64, u32)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub roots: RootMultiset,
    pub poly: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub degree: usize,
    pub bound: i64,
    pub enumerated: u64,
    pub hits: Vec<SearchHit>,
}

fn check_caps(n: usize, bound: i64) -> Result<()> {
    if n > MAX_SEARCH_DEGREE {
        return Err(Error::CapExceeded {
            what: "degree",
            value: n as u64,
            cap: MAX_SEARCH_DEGREE as u64,
        });
    }
    if !(0..=MAX_SEARCH_BOUND).contains(&bound) {
        return Err(Error::CapExceeded {
            what: "root bound",
            value: bound.unsigned_abs(),
            cap: MAX_SEARCH_BOUND as u64,
        });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    Ok(())
}

/// Multiplicity vectors over `values`, completing `prefix`, lexicographic
/// in the multiplicities.
fn fill(values: &[i64], remaining: u32, current: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    let idx = current.len();
    if idx == values.len() {
        if remaining == 0 {
            visit(current);
        }
        return;
    }
    let min = u32::from(values[idx] == 0);
    if idx + 1 == values.len() {
        if remaining >= min {
            current.push(remaining);
            visit(current);
            current.pop();
        }
        return;
    }
    for m in min..=remaining {
        current.push(m);
        fill(values, remaining - m, current, visit);
        current.pop();
    }
}

fn to_multiset(values: &[i64], mults: &[u32]) -> RootMultiset {
    values
        .iter()
        .zip(mults)
        .filter(|(_, &m)| m > 0)
        .map(|(&v, &m)| (v, m))
        .collect()
}

/// Shard prefixes: multiplicities of the first two values.
fn shard_prefixes(values: &[i64], n: u32) -> Vec<Vec<u32>> {
    let mut prefixes = Vec::new();
    if values.len() < 3 {
        prefixes.push(vec![]);
        return prefixes;
    }
    let min = |i: usize| u32::from(values[i] == 0);
    for a in min(0)..=n {
        for b in min(1)..=n - a {
            prefixes.push(vec![a, b]);
        }
    }
    prefixes
}

fn for_each_in_shard(values: &[i64], n: u32, prefix: &[u32], visit: &mut dyn FnMut(RootMultiset)) {
    let used: u32 = prefix.iter().sum();
    let mut current = prefix.to_vec();
    fill(values, n - used, &mut current, &mut |mults| {
        let ms = to_multiset(values, mults);
        if ms.len() >= 2 {
            visit(ms);
        }
    });
}

/// Every multiset of integer roots in `[-bound, bound]` that contains 0,
/// has `n` elements and at least two distinct values.
pub fn enumerate_root_multisets(n: usize, bound: i64) -> Result<Vec<RootMultiset>> {
    check_caps(n, bound)?;
    let values: Vec<i64> = (-bound..=bound).collect();
    let mut out = Vec::new();
    for prefix in shard_prefixes(&values, n as u32) {
        for_each_in_shard(&values, n as u32, &prefix, &mut |ms| out.push(ms));
    }
    Ok(out)
}

/// Integer coefficients of `Π (z - r)^m`, lowest degree first.
fn integer_expand(roots: &RootMultiset) -> Vec<i128> {
    let mut coeffs = vec![1i128];
    for &(r, m) in roots {
        for _ in 0..m {
            let mut next = vec![0i128; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r as i128;
            }
            coeffs = next;
        }
    }
    coeffs
}

/// `f^(i)(x) / i!` from integer coefficients.
fn taylor_coeff(coeffs: &[i128], i: usize, x: i64) -> i128 {
    let x = x as i128;
    let mut acc = 0i128;
    for j in (i..coeffs.len()).rev() {
        let weight = binomial(j as u64, i as u64);
        let weight = i128::try_from(weight).expect("binomial fits in i128 within caps");
        acc = acc * x + weight * coeffs[j];
    }
    acc
}

/// Whether every `f^(i)`, `1 <= i < N`, vanishes at one of the (known)
/// roots. With all roots at hand this is exactly the resultant test.
pub fn shares_root_with_every_derivative(roots: &RootMultiset) -> bool {
    let coeffs = integer_expand(roots);
    let n = coeffs.len() - 1;
    (1..n).all(|i| roots.iter().any(|&(r, _)| taylor_coeff(&coeffs, i, r) == 0))
}

pub fn exhaustive_integer_root_search(n: usize, bound: i64) -> Result<SearchReport> {
    exhaustive_integer_root_search_with(n, bound, Execution::default())
}

/// Searches all integer root multisets in `[-bound, bound]` containing 0
/// (any root may be moved to 0 by a translation) for a non-trivial
/// polynomial sharing a root with each derivative. Survivors of the
/// root-membership test are confirmed with the resultant test.
pub fn exhaustive_integer_root_search_with(n: usize, bound: i64, exec: Execution) -> Result<SearchReport> {
    check_caps(n, bound)?;
    let values: Vec<i64> = (-bound..=bound).collect();
    let nn = n as u32;
    let shards = shard_prefixes(&values, nn);
    let results = map_ordered(exec, shards, |prefix| {
        let mut count = 0u64;
        let mut hits = Vec::new();
        let mut failure = None;
        for_each_in_shard(&values, nn, &prefix, &mut |ms| {
            count += 1;
            if failure.is_some() || !shares_root_with_every_derivative(&ms) {
                return;
            }
            let roots: Vec<(Rational, u32)> = ms.iter().map(|&(r, m)| (rat(r, 1), m)).collect();
            let poly = Poly::from_roots(&roots);
            match is_ca(&poly) {
                Ok(report) if report.is_ca => hits.push(SearchHit { roots: ms, poly }),
                Ok(_) => {}
                Err(e) => failure = Some(e),
            }
        });
        match failure {
            Some(e) => Err(e),
            None => Ok((count, hits)),
        }
    });
    let mut enumerated = 0;
    let mut hits = Vec::new();
    for r in results {
        let (c, h) = r?;
        enumerated += c;
        hits.extend(h);
    }
    Ok(SearchReport {
        degree: n,
        bound,
        enumerated,
        hits,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProofCheckConfig {
    pub phi_start: f64,
    pub phi_end: f64,
    pub phi_steps: usize,
    pub n_min: u64,
    pub n_max: u64,
    pub integration_min: u64,
    pub integration_max: u64,
    #[serde(skip)]
    pub exec: Execution,
}

impl Default for ProofCheckConfig {
    fn default() -> Self {
        ProofCheckConfig {
            phi_start: 4.0,
            phi_end: 100.0,
            phi_steps: 9601,
            n_min: 3,
            n_max: 1_000_000,
            integration_min: 6,
            integration_max: 20,
            exec: Execution::default(),
        }
    }
}

/// One real solution of the reduced four-root subcase system with the
/// truth value of each side constraint.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubcaseSolution {
    pub a: f64,
    pub b: f64,
    pub constraints: Vec<(String, bool)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProofCheckReport {
    pub checks: Vec<Check>,
    pub phi_at_4: f64,
    pub subcase_solutions: Vec<SubcaseSolution>,
}

/// `(t - 2) ln((t + 1) / t) - ln(t / 2)`
pub fn phi(t: f64) -> f64 {
    (t - 2.0) * (1.0 / t).ln_1p() - (t / 2.0).ln()
}

/// Integrates `f^(N-1) = N! z` down to `f^(N-5)`, fixing each constant by
/// the vanishing of `f^(N-2)` at 1, `f^(N-3)` at 0, `f^(N-4)` at 1 and
/// `f^(N-5)` at 0.
pub fn integration_chain(n: u64) -> Poly {
    let mut g = Poly::monomial(Rational::from_integer(factorial(n)), 1);
    for point in [1, 0, 1, 0] {
        let anti: Vec<Rational> = std::iter::once(Rational::zero())
            .chain(
                g.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c / Rational::from_integer((i + 1).into())),
            )
            .collect();
        let anti = Poly::from_coeffs(anti);
        let shift = anti.eval(&rat(point, 1));
        g = &anti - &Poly::constant(shift);
    }
    g
}

/// `(N! / 5!) z (z^2 - 5)^2`
pub fn integration_chain_closed_form(n: u64) -> Poly {
    let scale = Rational::new(factorial(n), factorial(5));
    let inner = Poly::from_ints(&[-5, 0, 1]);
    (&Poly::z() * &inner.pow(2)).scale(&scale)
}

fn linear_and_cubic_residuals(a: f64, b: f64) -> (f64, f64) {
    (2.0 * a + 2.0 * b + 1.0, 2.0 * a.powi(3) + 2.0 * b.powi(3) + 1.0)
}

fn subcase_solutions() -> Vec<SubcaseSolution> {
    // 4a^2 + 2a - 1 = 0
    let disc: f64 = 2.0f64.powi(2) + 16.0;
    let roots = [(-2.0 - disc.sqrt()) / 8.0, (-2.0 + disc.sqrt()) / 8.0];
    roots
        .iter()
        .map(|&a| {
            let b = -(2.0 * a + 1.0) / 2.0;
            let (lin, cub) = linear_and_cubic_residuals(a, b);
            let mut constraints = vec![
                ("2a + 2b + 1 = 0".to_owned(), lin.abs() < 1e-12),
                ("2a^3 + 2b^3 + 1 = 0".to_owned(), cub.abs() < 1e-12),
                ("a < 0".to_owned(), a < 0.0),
                ("0 < b < 1".to_owned(), 0.0 < b && b < 1.0),
                ("-a > b".to_owned(), -a > b),
                ("a < -sqrt(5) b".to_owned(), a < -(5f64.sqrt()) * b),
                ("-a > 1/sqrt(3)".to_owned(), -a > 1.0 / 3f64.sqrt()),
            ];
            // f = (z - a)^2 z (z - b)^2 (z - 1), N = 6
            let mut coeffs = vec![1.0f64];
            for (r, m) in [(a, 2), (0.0, 1), (b, 2), (1.0, 1)] {
                for _ in 0..m {
                    let mut next = vec![0.0; coeffs.len() + 1];
                    for (i, &c) in coeffs.iter().enumerate() {
                        next[i + 1] += c;
                        next[i] -= c * r;
                    }
                    coeffs = next;
                }
            }
            let deriv = |k: usize| -> Vec<f64> {
                let mut c = coeffs.clone();
                for _ in 0..k {
                    c = c.iter().enumerate().skip(1).map(|(i, x)| x * i as f64).collect();
                }
                c
            };
            let vanishes = |k: usize, x: f64| {
                let c = deriv(k);
                let value = c.iter().rev().fold(0.0, |acc, v| acc * x + v);
                let scale = c.iter().rev().fold(0.0, |acc, v| acc * x.abs() + v.abs());
                value.abs() <= 1e-9 * scale.max(1.0)
            };
            constraints.push(("f^(5)(0) = 0".to_owned(), vanishes(5, 0.0)));
            constraints.push(("f^(4)(b) = 0".to_owned(), vanishes(4, b)));
            constraints.push(("f^(3)(0) = 0".to_owned(), vanishes(3, 0.0)));
            constraints.push(("f^(2)(b) = 0".to_owned(), vanishes(2, b)));
            let all_orders = (1..6).all(|k| [a, 0.0, b, 1.0].iter().any(|&r| vanishes(k, r)));
            constraints.push(("every f^(k), 1<=k<=5, vanishes at a root".to_owned(), all_orders));
            SubcaseSolution { a, b, constraints }
        })
        .collect()
}

/// Evaluates the closed-form checkpoints used in the root-count arguments.
pub fn proof_checks(config: &ProofCheckConfig) -> Result<ProofCheckReport> {
    if config.phi_steps < 2 || config.phi_end <= config.phi_start {
        return Err(Error::InvalidArgument(
            "phi grid needs at least two points on a non-empty range".into(),
        ));
    }
    if config.n_min > config.n_max || config.integration_min > config.integration_max || config.integration_min < 5 {
        return Err(Error::InvalidArgument("empty or invalid degree range".into()));
    }
    let mut checks = Vec::new();

    // (a) phi strictly decreasing on the grid, negative at 4
    let h = (config.phi_end - config.phi_start) / (config.phi_steps - 1) as f64;
    let grid: Vec<f64> = (0..config.phi_steps).map(|i| config.phi_start + h * i as f64).collect();
    let values: Vec<f64> = grid.iter().map(|&t| phi(t)).collect();
    let first_rise = values.windows(2).position(|w| w[1] >= w[0]);
    checks.push(Check::numeric(
        "phi_strictly_decreasing",
        Verdict::from_bool(first_rise.is_none()),
        match first_rise {
            None => format!(
                "{} grid points on [{}, {}]",
                config.phi_steps, config.phi_start, config.phi_end
            ),
            Some(i) => format!("rises between t = {} and t = {}", grid[i], grid[i + 1]),
        },
        &[("grid_step", h)],
    ));
    let phi_at_4 = phi(4.0);
    checks.push(Check::numeric(
        "phi_negative_at_4",
        Verdict::from_bool(phi_at_4 < 0.0),
        format!("phi(4) = {phi_at_4:.12}"),
        &[],
    ));

    // (b), (c): (N + 1)^2 = 2 N^2 and z = (N+1)/N with z^2 = 2
    let chunk = 65_536u64;
    let ranges: Vec<(u64, u64)> = (config.n_min..=config.n_max)
        .step_by(chunk as usize)
        .map(|lo| (lo, (lo + chunk - 1).min(config.n_max)))
        .collect();
    let found = map_ordered(config.exec, ranges, |(lo, hi)| {
        let mut square = Vec::new();
        let mut rational = Vec::new();
        let two = Ratio::from_integer(2i128);
        for n in lo..=hi {
            let (a, b) = (n as u128 + 1, n as u128);
            if a * a == 2 * b * b {
                square.push(n);
            }
            let z = Ratio::new(n as i128 + 1, n as i128);
            if z * z == two {
                rational.push(n);
            }
        }
        (square, rational)
    });
    let (square, rational): (Vec<u64>, Vec<u64>) =
        found
            .into_iter()
            .fold((Vec::new(), Vec::new()), |(mut s, mut r), (a, b)| {
                s.extend(a);
                r.extend(b);
                (s, r)
            });
    let range = format!("N in [{}, {}]", config.n_min, config.n_max);
    checks.push(Check::exact(
        "no_integer_solution_square_relation",
        Verdict::from_bool(square.is_empty()),
        if square.is_empty() {
            format!("(N+1)^2 != 2N^2 for {range}")
        } else {
            format!("solutions: {square:?}")
        },
    ));
    checks.push(Check::exact(
        "no_rational_point_z2_eq_2",
        Verdict::from_bool(rational.is_empty()),
        if rational.is_empty() {
            format!("((N+1)/N)^2 != 2 for {range}")
        } else {
            format!("solutions: {rational:?}")
        },
    ));

    // (d) exact integration chain
    let degrees: Vec<u64> = (config.integration_min..=config.integration_max).collect();
    let mismatches: Vec<u64> = degrees
        .iter()
        .copied()
        .filter(|&n| integration_chain(n) != integration_chain_closed_form(n))
        .collect();
    checks.push(Check::exact(
        "integration_chain_identity",
        Verdict::from_bool(mismatches.is_empty()),
        if mismatches.is_empty() {
            format!(
                "f^(N-5) = (N!/5!) z (z^2-5)^2 for N in [{}, {}]",
                config.integration_min, config.integration_max
            )
        } else {
            format!("mismatch for N = {mismatches:?}")
        },
    ));
    let sample = integration_chain(config.integration_min);
    let repeated = gcd(&sample, &sample.derivative(1))?;
    checks.push(Check::exact(
        "integration_chain_has_repeated_root",
        Verdict::from_bool(!repeated.is_constant()),
        format!("gcd(f^(N-5), f^(N-4)) = {repeated}"),
    ));

    // (e) reduced quadratic of the four-root subcase
    let subcase = subcase_solutions();
    for s in &subcase {
        let failed: Vec<&str> = s
            .constraints
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.as_str())
            .collect();
        checks.push(Check::numeric(
            format!("four_root_subcase_solution[a={:.12}]", s.a),
            Verdict::Info,
            format!(
                "b = {:.12}; unmet: {}",
                s.b,
                if failed.is_empty() {
                    "none".to_owned()
                } else {
                    failed.join("; ")
                }
            ),
            &[("vanishing", 1e-9)],
        ));
    }
    let quad_roots = aberth(&[-1.0, 2.0, 4.0], 1e-12)?;
    checks.push(Check::numeric(
        "four_root_subcase_quadratic_has_real_roots",
        Verdict::Info,
        format!(
            "4a^2 + 2a - 1 = 0 has {} real roots",
            quad_roots.iter().filter(|z| z.im.abs() < 1e-12).count()
        ),
        &[],
    ));
    Ok(ProofCheckReport {
        checks,
        phi_at_4,
        subcase_solutions: subcase,
    })
}
