//! Exact decision of the "common root with every derivative" property and
//! the ledger of necessary conditions for non-trivial examples.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{is_prime, Rational};
use crate::hull::{rational_roots, RationalRoots};
use crate::par::{map_ordered, Execution};
use crate::poly::{gcd, gcd_many, resultant, squarefree_decomposition, FactoredPoly, Poly};
use crate::report::{Check, Verdict};
use crate::sieve::{degree_constraint_report, DegreeConstraint, DeltaMatrix};

/// `verdicts[i - 1]` records whether `f` and `f^(i)` share a root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaReport {
    pub degree: usize,
    pub verdicts: Vec<bool>,
    pub is_ca: bool,
    pub is_trivial: bool,
}

impl CaReport {
    /// Orders `i` for which `f` and `f^(i)` have no common root.
    pub fn missing_orders(&self) -> Vec<usize> {
        self.verdicts
            .iter()
            .enumerate()
            .filter(|(_, shared)| !**shared)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

pub fn is_ca(f: &Poly) -> Result<CaReport> {
    is_ca_with(f, Execution::default())
}

/// `res(f, f^(i)) = 0` for every `1 <= i <= N-1`.
pub fn is_ca_with(f: &Poly, exec: Execution) -> Result<CaReport> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let n = f.deg();
    let verdicts = map_ordered(exec, (1..n).collect(), |i| {
        resultant(f, &f.derivative(i)).map(|r| r.is_zero())
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let is_ca = verdicts.iter().all(|&v| v);
    Ok(CaReport {
        degree: n,
        verdicts,
        is_ca,
        is_trivial: is_trivial(f)?.is_some(),
    })
}

/// `f = lead (z - root)^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triviality {
    pub lead: Rational,
    pub root: Rational,
}

pub fn is_trivial(f: &Poly) -> Result<Option<Triviality>> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let parts = squarefree_decomposition(f)?;
    match parts.as_slice() {
        [(part, _)] if part.deg() == 1 => Ok(Some(Triviality {
            lead: f.lead().expect("non-constant").clone(),
            root: -part.coeff(0),
        })),
        _ => Ok(None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterOfMass {
    pub center: Rational,
    pub is_root: bool,
}

/// Mean of the roots, `-coeff(z^{N-1}) / N`, for monic `f`.
pub fn center_of_mass(f: &Poly) -> Result<CenterOfMass> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.deg();
    let center = -f.coeff(n - 1) / Rational::from_integer(n.into());
    let is_root = f.eval(&center).is_zero();
    Ok(CenterOfMass { center, is_root })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringType {
    pub distinct_roots: usize,
    /// Minimal covering cardinality minus one.
    pub type_value: usize,
    pub witness: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoveringOutcome {
    Covering(CoveringType),
    /// Some derivative shares no root with `f`.
    NoCovering,
}

/// Smallest set of roots such that every `f^(i)`, `1 <= i <= N-1`, vanishes
/// at one of them. Subsets are tried by increasing size, in ascending root
/// order, so the witness is the lexicographically first minimal one.
pub fn covering_type(f: &FactoredPoly) -> Result<CoveringOutcome> {
    let roots = f.rational_roots()?;
    let n = f.degree();
    if n < 2 {
        return Err(Error::InvalidArgument(format!("degree must be at least 2, got {n}")));
    }
    if n > 129 {
        return Err(Error::CapExceeded {
            what: "degree",
            value: n as u64,
            cap: 129,
        });
    }
    let poly = f.to_poly()?;
    let derivs: Vec<Poly> = (1..n).map(|i| poly.derivative(i)).collect();
    let masks: Vec<u128> = roots
        .iter()
        .map(|(r, _)| {
            derivs
                .iter()
                .enumerate()
                .filter(|(_, d)| d.eval(r).is_zero())
                .fold(0u128, |acc, (i, _)| acc | (1u128 << i))
        })
        .collect();
    let full: u128 = if n - 1 == 128 {
        u128::MAX
    } else {
        (1u128 << (n - 1)) - 1
    };
    if masks.iter().fold(0, |acc, m| acc | m) != full {
        return Ok(CoveringOutcome::NoCovering);
    }
    let idx: Vec<usize> = (0..roots.len()).collect();
    for size in 1..=roots.len() {
        let mut found: Option<Vec<usize>> = None;
        crate::sieve::for_each_combination(&idx, size, &mut Vec::new(), &mut |set| {
            if found.is_none() && set.iter().fold(0u128, |acc, &i| acc | masks[i]) == full {
                found = Some(set.to_vec());
            }
        });
        if let Some(set) = found {
            return Ok(CoveringOutcome::Covering(CoveringType {
                distinct_roots: roots.len(),
                type_value: size - 1,
                witness: set.into_iter().map(|i| roots[i].0.clone()).collect(),
            }));
        }
    }
    unreachable!("the full root set covers")
}

/// Admissible type range `(lo, hi)` for a non-trivial example of degree
/// `n`: `2 <= type <= n - 3`, and `<= n - 4` when `n - 1` is prime.
pub fn type_bounds(n: usize) -> (usize, usize) {
    let hi = if n >= 3 && is_prime(n as u64 - 1) {
        n.saturating_sub(4)
    } else {
        n.saturating_sub(3)
    };
    (2, hi)
}

/// Whether `f` and all `f^(i)`, `i` in `indices`, share a common root.
pub fn common_root_of_set(f: &Poly, indices: &[usize]) -> Result<bool> {
    if indices.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let n = f.deg();
    if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i >= n) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            lo: 1,
            hi: n - 1,
        });
    }
    let derivs: Vec<Poly> = indices.iter().map(|&i| f.derivative(i)).collect();
    let g = gcd_many(std::iter::once(f).chain(derivs.iter()))?;
    Ok(!g.is_constant())
}

/// `Some((p, r))` when `n = p^r` for a prime `p`.
fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut rest = n;
    let mut r = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        r += 1;
    }
    (rest == 1).then_some((p, r))
}

/// `f(c + z)` and `f(c - z)` share a root other than `z = 0`.
fn symmetric_pair(f: &Poly, c: &Rational) -> Result<Option<Poly>> {
    let g = f.taylor_shift(c);
    let h = g.scale_argument(&-Rational::one());
    let mut common = gcd(&g, &h)?;
    let z = Poly::z();
    while common.coeff(0).is_zero() && !common.is_constant() {
        common = common.div_exact(&z)?;
    }
    Ok((!common.is_constant()).then_some(common))
}

fn orders_str(orders: &[usize]) -> String {
    let items: Vec<String> = orders.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// Evaluates every exactly checkable necessary condition for `f` to be a
/// non-trivial polynomial sharing a root with each of its derivatives.
/// Nothing here claims `f` has the property; a failed entry names a
/// condition that excludes it. Non-monic input is made monic first.
pub fn necessary_conditions(f: &Poly) -> Result<Vec<Check>> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let f = f.monic()?;
    let n = f.deg();
    let parts = squarefree_decomposition(&f)?;
    let distinct: usize = parts.iter().map(|(p, _)| p.deg()).sum();
    let max_mult = parts.iter().map(|(_, m)| *m as usize).max().unwrap_or(0);

    let mut checks = Vec::new();
    if let Some(t) = is_trivial(&f)? {
        let witness = format!("f = (z - {})^{n}", t.root);
        for name in [
            "distinct_roots_at_least_three",
            "distinct_roots_at_least_four",
            "distinct_roots_at_least_five",
            "degree_at_least_six",
            "max_multiplicity_at_most_n_minus_3",
            "center_of_mass_is_root",
        ] {
            checks.push(Check::exact(name, Verdict::Vacuous, witness.clone()));
        }
        return Ok(checks);
    }

    let distinct_w = format!("{distinct} distinct roots");
    checks.push(Check::exact(
        "distinct_roots_at_least_three",
        Verdict::from_bool(distinct >= 3),
        &distinct_w,
    ));
    checks.push(Check::exact(
        "distinct_roots_at_least_four",
        Verdict::from_bool(distinct >= 4),
        &distinct_w,
    ));
    checks.push(Check::exact(
        "distinct_roots_at_least_five",
        Verdict::from_bool(distinct >= 5),
        &distinct_w,
    ));
    checks.push(Check::exact(
        "degree_at_least_six",
        Verdict::from_bool(n >= 6),
        format!("degree {n}"),
    ));
    checks.push(Check::exact(
        "max_multiplicity_at_most_n_minus_3",
        Verdict::from_bool(max_mult + 3 <= n),
        format!("max multiplicity {max_mult}, N - 3 = {}", n as i64 - 3),
    ));

    let com = center_of_mass(&f)?;
    let c = com.center.clone();
    checks.push(Check::exact(
        "center_of_mass_is_root",
        Verdict::from_bool(com.is_root),
        format!("c = {c}"),
    ));

    for (order, min_degree) in [(2usize, 3usize), (3, 4)] {
        let name = format!("derivative_{order}_not_pure_power");
        if n < min_degree {
            checks.push(Check::exact(
                name,
                Verdict::Vacuous,
                format!("degree {n} < {min_degree}"),
            ));
            continue;
        }
        let d = f.derivative(order);
        let verdict = Verdict::from_bool(is_trivial(&d)?.is_none());
        checks.push(Check::exact(name, verdict, format!("f^({order}) = {d}")));
    }

    let at_c: Vec<bool> = (0..n).map(|k| f.derivative(k).eval(&c).is_zero()).collect();

    if let Some((p, r)) = prime_power(n as u64 - 1) {
        let d1 = f.derivative(1).eval(&c);
        checks.push(Check::exact(
            "first_derivative_nonzero_at_center",
            Verdict::from_bool(!d1.is_zero()),
            format!("N - 1 = {p}^{r}, f'(c) = {d1}"),
        ));
        if p >= 3 {
            for (name, g) in [
                ("no_symmetric_root_pair_about_center", f.clone()),
                ("no_symmetric_critical_pair_about_center", f.derivative(1)),
            ] {
                let pair = symmetric_pair(&g, &c)?;
                let witness = match &pair {
                    Some(w) => format!("common factor in w: {w}"),
                    None => "none".to_owned(),
                };
                checks.push(Check::exact(name, Verdict::from_bool(pair.is_none()), witness));
            }
        }
    }

    if n >= 4 && is_prime(n as u64 - 1) {
        let p = n as u64 - 1;
        let zero_orders: Vec<usize> = (2..=n - 2).filter(|&k| at_c[k]).collect();
        let nonzero_orders: Vec<usize> = (2..=n - 2).filter(|&k| !at_c[k]).collect();
        let top = f.derivative(n - 1).eval(&c);
        checks.push(Check::exact(
            "top_derivative_vanishes_at_center",
            Verdict::from_bool(top.is_zero()),
            format!("f^({}) (c) = {top}", n - 1),
        ));
        checks.push(Check::exact(
            "some_mid_derivative_nonzero_at_center",
            Verdict::from_bool(!nonzero_orders.is_empty()),
            format!(
                "orders k in 2..=N-2 with f^(k)(c) != 0: {}",
                orders_str(&nonzero_orders)
            ),
        ));
        checks.push(Check::exact(
            "some_mid_derivative_zero_at_center",
            Verdict::from_bool(!zero_orders.is_empty()),
            format!("orders k in 2..=N-2 with f^(k)(c) = 0: {}", orders_str(&zero_orders)),
        ));
        checks.push(Check::exact(
            "two_mid_derivatives_zero_at_center",
            Verdict::from_bool(zero_orders.len() >= 2),
            format!("{} such orders", zero_orders.len()),
        ));
        if zero_orders.is_empty() {
            checks.push(Check::exact(
                "delta_divisible_by_p",
                Verdict::Vacuous,
                "no vanishing mid-order derivative",
            ));
        } else {
            let mut indices: Vec<usize> = zero_orders.iter().map(|k| n - k).collect();
            indices.sort_unstable();
            let det = DeltaMatrix::for_degree(n, &indices)?.det();
            let divisible = (&det % num_bigint::BigInt::from(p)).is_zero();
            checks.push(Check::exact(
                "delta_divisible_by_p",
                Verdict::from_bool(divisible),
                format!("indices N-k = {}, delta = {det}, p = {p}", orders_str(&indices)),
            ));
        }
        if p >= 3 {
            let (verdict, witness) = match rational_roots(&f, 1e-10)? {
                RationalRoots::All(_) => (Verdict::Fail, "all roots rational".to_owned()),
                RationalRoots::NotAll => (Verdict::Pass, "some root is irrational".to_owned()),
                RationalRoots::Undetermined => (Verdict::Indeterminate, "could not decide".to_owned()),
            };
            checks.push(Check::exact("not_all_roots_rational", verdict, witness));
        }
    }

    if n >= 4 {
        for entry in degree_constraint_report(n as u64)?.entries {
            let q = entry.exceptions.q;
            let name = format!("binomial_constraint_mod_{q}");
            let description = entry.constraint.describe();
            let check = match &entry.constraint {
                DegreeConstraint::DisjointDerivativeRoots { low, high } => {
                    let shared = gcd(&f.derivative(*low as usize), &f.derivative(*high as usize))?;
                    Check::exact(
                        name,
                        Verdict::from_bool(shared.is_constant()),
                        format!("{description}; gcd = {shared}"),
                    )
                }
                DegreeConstraint::NoCommonRootWithF { orders } => {
                    let orders: Vec<usize> = orders.iter().map(|&o| o as usize).collect();
                    let common = common_root_of_set(&f, &orders)?;
                    Check::exact(name, Verdict::from_bool(!common), description)
                }
                DegreeConstraint::DegreeExcluded { .. } => Check::exact(name, Verdict::Fail, description),
            };
            checks.push(check);
        }
    }

    if let Some((p, r)) = prime_power(n as u64) {
        checks.push(Check::exact(
            "known_result_prime_power_degree",
            Verdict::Info,
            format!(
                "N = {p}^{r}: no non-trivial example exists in prime-power degree (published result, not re-derived)"
            ),
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn verdict(checks: &[Check], name: &str) -> Verdict {
        checks
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("no check {name}"))
            .verdict
    }

    #[test]
    fn ca_examples() {
        let r = is_ca(&Poly::from_roots(&[(rat(2, 1), 5)])).unwrap();
        assert!(r.is_ca && r.is_trivial);
        let r = is_ca(&Poly::from_ints(&[0, 0, -1, 1])).unwrap();
        assert!(!r.is_ca);
        assert_eq!(r.verdicts, vec![true, false]);
        assert_eq!(r.missing_orders(), vec![2]);
        let r = is_ca(&Poly::from_ints(&[-1, 0, 1])).unwrap();
        assert!(!r.is_ca && !r.is_trivial);
        assert_eq!(is_ca(&Poly::from_ints(&[4])), Err(Error::ConstantPolynomial));
        let linear = is_ca(&Poly::from_ints(&[1, 1])).unwrap();
        assert!(linear.is_ca && linear.verdicts.is_empty());
    }

    #[test]
    fn triviality() {
        let f = Poly::from_roots(&[(rat(-1, 2), 4)]).scale(&rat(3, 1));
        assert_eq!(
            is_trivial(&f).unwrap(),
            Some(Triviality {
                lead: rat(3, 1),
                root: rat(-1, 2)
            })
        );
        assert_eq!(is_trivial(&Poly::from_ints(&[-1, 0, 1])).unwrap(), None);
        let g = Poly::from_ints(&[-1, 3, -3, 1]);
        assert_eq!(is_trivial(&g).unwrap().unwrap().root, rat(1, 1));
    }

    #[test]
    fn centers() {
        assert_eq!(
            center_of_mass(&Poly::from_ints(&[-1, 0, 1])).unwrap(),
            CenterOfMass {
                center: rat(0, 1),
                is_root: false
            }
        );
        assert_eq!(
            center_of_mass(&Poly::from_ints(&[0, 0, -3, 1])).unwrap(),
            CenterOfMass {
                center: rat(1, 1),
                is_root: false
            }
        );
        assert_eq!(
            center_of_mass(&Poly::from_ints(&[-1, 3, -3, 1])).unwrap(),
            CenterOfMass {
                center: rat(1, 1),
                is_root: true
            }
        );
        assert_eq!(center_of_mass(&Poly::from_ints(&[1, 2])), Err(Error::NotMonic));
    }

    #[test]
    fn common_roots() {
        assert!(common_root_of_set(&Poly::from_ints(&[0, 0, 0, 1]), &[1, 2]).unwrap());
        assert!(!common_root_of_set(&Poly::from_ints(&[-1, 0, 1]), &[1]).unwrap());
        assert!(!common_root_of_set(&Poly::from_ints(&[-1, 0, 0, 0, 1]), &[1, 2, 3]).unwrap());
        assert_eq!(
            common_root_of_set(&Poly::from_ints(&[-1, 0, 1]), &[]),
            Err(Error::EmptyIndexSet)
        );
        assert!(common_root_of_set(&Poly::from_ints(&[-1, 0, 1]), &[2]).is_err());
    }

    #[test]
    fn covering() {
        let f = FactoredPoly::from_rational_roots(rat(1, 1), vec![(rat(3, 1), 5)]).unwrap();
        match covering_type(&f).unwrap() {
            CoveringOutcome::Covering(t) => {
                assert_eq!(t.type_value, 0);
                assert_eq!(t.witness, vec![rat(3, 1)]);
            }
            other => panic!("{other:?}"),
        }
        let g = FactoredPoly::from_rational_roots(rat(1, 1), vec![(rat(0, 1), 2), (rat(1, 1), 1)]).unwrap();
        assert_eq!(covering_type(&g).unwrap(), CoveringOutcome::NoCovering);
        let c = FactoredPoly::new(rat(1, 1), vec![(crate::poly::Root::Complex { re: 0.0, im: 1.0 }, 2)]).unwrap();
        assert_eq!(covering_type(&c), Err(Error::IrrationalRoots));
        assert_eq!(type_bounds(12), (2, 8));
        assert_eq!(type_bounds(10), (2, 7));
    }

    #[test]
    fn trivial_conditions_are_vacuous() {
        let checks = necessary_conditions(&Poly::from_roots(&[(rat(1, 1), 6)])).unwrap();
        assert!(checks.iter().all(|c| c.verdict == Verdict::Vacuous));
    }

    #[test]
    fn high_multiplicity_candidate() {
        // z^4 (z^2 - 6z + 5)
        let f = Poly::from_roots(&[(rat(0, 1), 4), (rat(1, 1), 1), (rat(5, 1), 1)]);
        assert!(!is_ca(&f).unwrap().is_ca);
        let checks = necessary_conditions(&f).unwrap();
        assert_eq!(verdict(&checks, "max_multiplicity_at_most_n_minus_3"), Verdict::Fail);
        assert_eq!(verdict(&checks, "distinct_roots_at_least_three"), Verdict::Pass);
        assert_eq!(verdict(&checks, "distinct_roots_at_least_four"), Verdict::Fail);
    }

    #[test]
    fn degree_twelve_double_root_at_center() {
        let mut roots = vec![(rat(0, 1), 2)];
        for k in 1..=5 {
            roots.push((rat(k, 1), 1));
            roots.push((rat(-k, 1), 1));
        }
        let f = Poly::from_roots(&roots);
        assert_eq!(f.deg(), 12);
        let checks = necessary_conditions(&f).unwrap();
        assert_eq!(verdict(&checks, "first_derivative_nonzero_at_center"), Verdict::Fail);
        assert_eq!(verdict(&checks, "center_of_mass_is_root"), Verdict::Pass);
        assert_eq!(verdict(&checks, "no_symmetric_root_pair_about_center"), Verdict::Fail);
        assert_eq!(verdict(&checks, "not_all_roots_rational"), Verdict::Fail);
        assert!(checks.iter().any(|c| c.name == "binomial_constraint_mod_2"));
    }

    #[test]
    fn prime_power_flag() {
        let f = Poly::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let checks = necessary_conditions(&f).unwrap();
        assert_eq!(verdict(&checks, "known_result_prime_power_degree"), Verdict::Info);
        assert_eq!(verdict(&checks, "binomial_constraint_mod_2"), Verdict::Fail);
    }
}
