use num_complex::Complex64;

use super::geometry::{classify_roots, HullClassification, Location};
use super::roots::{eval_scale, find_roots_numeric, horner, RootCloud};
use super::{Tolerances, FAILURE_MARGIN};
use crate::error::{Error, Result};
use crate::poly::{gcd_many, squarefree_decomposition, Poly};
use crate::report::{Check, Verdict};

fn fmt_point(re: f64, im: f64) -> String {
    // no "-0.000000000000" for values that round to zero
    let clean = |x: f64| if (x * 1e12).round() == 0.0 { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    if im == 0.0 {
        format!("{re:.12}")
    } else {
        format!("{re:.12}{im:+.12}i")
    }
}

/// For every root on the hull boundary with multiplicity `m < N`, checks
/// that `f^(k)` does not vanish there for `m <= k <= N-1`. For collinear
/// roots only the two endpoints are boundary.
pub fn boundary_root_check(f: &Poly, cloud: &RootCloud, hull: &HullClassification, tol: f64) -> Vec<Check> {
    let n = f.deg();
    let derivs: Vec<Vec<f64>> = (0..n).map(|k| f.derivative(k).to_f64_coeffs()).collect();
    let tolerances = [("derivative_nonvanishing", tol), ("hull_boundary", hull.tolerance)];
    debug_assert_eq!(cloud.roots.len(), hull.roots.len());
    let mut checks = Vec::new();
    for root in &hull.roots {
        let name = format!("boundary_root_derivatives_nonzero[{}]", fmt_point(root.re, root.im));
        let m = root.multiplicity as usize;
        let location = hull.relative_location(root);
        if location == Location::Indeterminate {
            checks.push(Check::numeric(
                name,
                Verdict::Indeterminate,
                "root too close to the hull boundary to place",
                &tolerances,
            ));
            continue;
        }
        if !location.on_boundary() {
            continue;
        }
        if m >= n {
            checks.push(Check::numeric(
                name,
                Verdict::Vacuous,
                format!("multiplicity {m} = degree"),
                &tolerances,
            ));
            continue;
        }
        let z = Complex64::new(root.re, root.im);
        let (mut worst_k, mut worst_ratio) = (m, f64::INFINITY);
        for (k, coeffs) in derivs.iter().enumerate().skip(m) {
            let scale = eval_scale(coeffs, z);
            let ratio = if scale == 0.0 {
                0.0
            } else {
                horner(coeffs, z).norm() / scale
            };
            if ratio < worst_ratio {
                worst_ratio = ratio;
                worst_k = k;
            }
        }
        let verdict = if worst_ratio > tol {
            Verdict::Pass
        } else if worst_ratio <= tol / FAILURE_MARGIN {
            Verdict::Fail
        } else {
            Verdict::Indeterminate
        };
        let witness = format!("m={m}, min |f^(k)(z)|/scale = {worst_ratio:.3e} at k={worst_k}");
        checks.push(Check::numeric(name, verdict, witness, &tolerances));
    }
    checks
}

#[derive(Clone, Debug, PartialEq)]
pub struct GlDiagnostics {
    pub cloud: RootCloud,
    pub hull: HullClassification,
    pub checks: Vec<Check>,
}

/// Hull-based conditions a non-trivial polynomial with a common root with
/// each derivative would need: at least two distinct roots strictly inside
/// the hull, at least five distinct roots and degree at least six; for
/// real-rooted input, a root of multiplicity `m <= i` is at most a simple
/// root of `f^(i)`. Boundary-root derivative checks are appended.
pub fn gl_diagnostics(f: &Poly, tol: &Tolerances) -> Result<GlDiagnostics> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let n = f.deg();
    let parts = squarefree_decomposition(f)?;
    let distinct: usize = parts.iter().map(|(p, _)| p.deg()).sum();
    let trivial = distinct == 1;
    let cloud = find_roots_numeric(f, tol.root_residual)?;
    let hull = classify_roots(&cloud, tol.hull_boundary);
    let pairs = tol.as_pairs();
    let mut checks = Vec::new();

    let vacuous = |name: &str| Check::exact(name, Verdict::Vacuous, "trivial polynomial");
    if trivial {
        checks.push(vacuous("two_distinct_roots_inside_hull"));
        checks.push(vacuous("hull_distinct_roots_at_least_five"));
        checks.push(vacuous("hull_degree_at_least_six"));
        checks.push(vacuous("real_roots_simple_in_derivatives"));
    } else {
        let interior = hull.count_relative(Location::Interior);
        let unsure = hull.count_relative(Location::Indeterminate);
        let verdict = if interior >= 2 {
            Verdict::Pass
        } else if interior + unsure >= 2 {
            Verdict::Indeterminate
        } else {
            Verdict::Fail
        };
        checks.push(Check::numeric(
            "two_distinct_roots_inside_hull",
            verdict,
            format!(
                "{interior} interior, {unsure} indeterminate, {} on boundary",
                hull.roots.len() - interior - unsure
            ),
            &pairs,
        ));
        checks.push(Check::exact(
            "hull_distinct_roots_at_least_five",
            Verdict::from_bool(distinct >= 5),
            format!("{distinct} distinct roots"),
        ));
        checks.push(Check::exact(
            "hull_degree_at_least_six",
            Verdict::from_bool(n >= 6),
            format!("degree {n}"),
        ));

        let real_rooted = cloud.roots.iter().all(|r| r.im.abs() <= tol.hull_boundary);
        if real_rooted {
            let mut bad = Vec::new();
            for (part, m) in &parts {
                for i in *m as usize..n {
                    let common = gcd_many([part, &f.derivative(i), &f.derivative(i + 1)])?;
                    if !common.is_constant() {
                        bad.push(format!("roots of {part} (m={m}) repeated in f^({i})"));
                    }
                }
            }
            let witness = if bad.is_empty() {
                "no repeated roots".to_owned()
            } else {
                bad.join("; ")
            };
            checks.push(Check::exact(
                "real_roots_simple_in_derivatives",
                Verdict::from_bool(bad.is_empty()),
                witness,
            ));
        } else {
            checks.push(Check::numeric(
                "real_roots_simple_in_derivatives",
                Verdict::Vacuous,
                "not real-rooted",
                &[("hull_boundary", tol.hull_boundary)],
            ));
        }
    }
    checks.extend(boundary_root_check(f, &cloud, &hull, tol.derivative_nonvanishing));
    Ok(GlDiagnostics { cloud, hull, checks })
}
