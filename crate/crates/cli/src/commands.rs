//! One function per subcommand.

use std::collections::BTreeMap;

use caforge_core::ca::{center_of_mass, covering_type, is_ca_with, necessary_conditions, CoveringOutcome};
use caforge_core::exactnum::primes_up_to;
use caforge_core::hull::{gl_diagnostics, rational_roots, RationalRoots, Tolerances};
use caforge_core::newton::{center_mass_invariance, power_sums, root_power_sum};
use caforge_core::report::{Check, Verdict};
use caforge_core::search::{exhaustive_integer_root_search_with, proof_checks, ProofCheckConfig};
use caforge_core::sieve::{
    binom_exception_set, binomial_congruence, degree_constraint_report, delta_sieve_with, DeltaMatrix, SieveOptions,
};
use caforge_core::{Error, Execution, FactoredPoly, Result};
use serde_json::json;

use crate::certificate::Certificate;
use crate::input::{PolyFormat, PolyInput};
use crate::table::render;

const IRRATIONAL_NOTE: &str =
    "valuations are evaluated on rational quantities only; claims about irrational roots are not tested";

/// Result of a completed command.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub table: String,
    pub certificate: Certificate,
}

fn args<const K: usize>(pairs: [(&str, String); K]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
}

fn checks_table(checks: &[Check]) -> String {
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                c.mode.to_string(),
                c.verdict.to_string(),
                c.witness.clone(),
            ]
        })
        .collect();
    render(&["check", "mode", "verdict", "witness"], &rows)
}

fn format_name(format: PolyFormat) -> String {
    match format {
        PolyFormat::Coeffs => "coeffs",
        PolyFormat::Roots => "roots",
    }
    .to_owned()
}

/// Rational factorization of the input, given or recovered.
fn factorization(input: &PolyInput, tol: f64) -> Result<Option<FactoredPoly>> {
    if let Some(f) = &input.factored {
        return Ok(f.rational_roots().is_ok().then(|| f.clone()));
    }
    match rational_roots(&input.poly, tol)? {
        RationalRoots::All(roots) => Ok(Some(FactoredPoly::from_rational_roots(
            input.poly.lead().cloned().ok_or(Error::ZeroPolynomial)?,
            roots,
        )?)),
        RationalRoots::NotAll | RationalRoots::Undetermined => Ok(None),
    }
}

pub fn cmd_check(text: &str, format: PolyFormat, tol: &Tolerances, exec: Execution) -> Result<Outcome> {
    let input = PolyInput::parse(text, format)?;
    let f = &input.poly;
    if f.is_constant() {
        return Err(if f.is_zero() {
            Error::ZeroPolynomial
        } else {
            Error::ConstantPolynomial
        });
    }
    let mut cert = Certificate::new(
        "check",
        args([
            ("poly", text.trim().to_owned()),
            ("format", format_name(format)),
            ("root_residual", tol.root_residual.to_string()),
            ("hull_boundary", tol.hull_boundary.to_string()),
            ("derivative_nonvanishing", tol.derivative_nonvanishing.to_string()),
        ]),
    );
    let report = is_ca_with(f, exec)?;
    let missing = report.missing_orders();
    let ca_witness = if report.is_trivial {
        "trivial: a single distinct root".to_owned()
    } else if missing.is_empty() {
        "every derivative shares a root with f".to_owned()
    } else {
        let list: Vec<String> = missing.iter().map(ToString::to_string).collect();
        format!("res(f, f^(k)) != 0 for k = {}", list.join(", "))
    };
    let mut checks = vec![Check::exact(
        "shares_root_with_every_derivative",
        Verdict::from_bool(report.is_ca),
        ca_witness,
    )];
    checks.extend(necessary_conditions(f)?);

    let mut numeric_roots = Vec::new();
    match gl_diagnostics(f, tol) {
        Ok(gl) => {
            numeric_roots = gl
                .cloud
                .roots
                .iter()
                .map(|r| json!([r.re, r.im, r.multiplicity]))
                .collect();
            checks.extend(gl.checks);
        }
        Err(e @ Error::NoConvergence { .. }) => {
            checks.push(Check::numeric(
                "root_localization",
                Verdict::Indeterminate,
                e.to_string(),
                &tol.as_pairs(),
            ));
        }
        Err(e) => return Err(e),
    }

    let factored = match factorization(&input, tol.root_residual) {
        Ok(f) => f,
        Err(Error::NoConvergence { .. }) => None,
        Err(e) => return Err(e),
    };
    let covering = match &factored {
        Some(fp) if fp.degree() >= 2 => match covering_type(fp)? {
            CoveringOutcome::Covering(c) => json!({
                "distinct_roots": c.distinct_roots,
                "type": c.type_value,
                "witness": c.witness.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }),
            CoveringOutcome::NoCovering => json!("none"),
        },
        _ => serde_json::Value::Null,
    };
    if factored.is_none() {
        cert.notes.push(IRRATIONAL_NOTE.to_owned());
    }
    let com = center_of_mass(&f.monic()?)?;

    let mut record = input.record();
    if record.factored.is_none() {
        record.factored = factored.as_ref().and_then(FactoredPoly::format);
    }
    cert.input = Some(record);
    cert.results = json!({
        "degree": report.degree,
        "is_ca": report.is_ca,
        "is_trivial": report.is_trivial,
        "missing_orders": missing,
        "center_of_mass": com.center.to_string(),
        "center_is_root": com.is_root,
        "covering": covering,
        "numeric_roots": numeric_roots,
        "tolerances": tol.as_pairs().iter().map(|(k, v)| ((*k).to_owned(), *v)).collect::<BTreeMap<_, _>>(),
    });

    let mut table = format!(
        "f = {f}\ndegree {}  is_ca {}  trivial {}  center of mass {}\n\n",
        report.degree, report.is_ca, report.is_trivial, com.center
    );
    table.push_str(&checks_table(&checks));
    cert.checks = checks;
    Ok(Outcome {
        table,
        certificate: cert,
    })
}

pub fn cmd_delta_sieve(p: u64, m: usize, shards: Option<usize>, modular: bool, exec: Execution) -> Result<Outcome> {
    let opts = SieveOptions { exec, shards, modular };
    let sets = delta_sieve_with(p, m, opts)?;
    let mut cert = Certificate::new(
        "delta-sieve",
        args([
            ("p", p.to_string()),
            ("m", m.to_string()),
            ("modular", modular.to_string()),
        ]),
    );
    let mut rows = Vec::new();
    let mut admissible = Vec::new();
    for set in &sets {
        let det = DeltaMatrix::new(set)?.det();
        let label: Vec<String> = set.iter().map(ToString::to_string).collect();
        rows.push(vec![format!("({})", label.join(",")), det.to_string()]);
        admissible.push(json!({ "indices": set, "delta": det.to_string() }));
    }
    let congruence = binomial_congruence(p)?;
    let bad: Vec<u64> = congruence.iter().filter(|r| !r.holds).map(|r| r.l).collect();
    cert.checks.push(Check::exact(
        "binomial_congruence_mod_p",
        Verdict::from_bool(bad.is_empty()),
        if bad.is_empty() {
            format!(
                "C({}, l)/{p} = (-1)^l/(l(l-1)) mod {p} for 2 <= l <= {}",
                p + 1,
                p.saturating_sub(1)
            )
        } else {
            format!("fails for l = {bad:?}")
        },
    ));
    cert.results = json!({ "p": p, "degree": p + 1, "m": m, "admissible": admissible });
    let mut table = format!(
        "N = {}, p = {p}, m = {m}: {} admissible index sets\n\n",
        p + 1,
        sets.len()
    );
    table.push_str(&render(&["indices", "delta"], &rows));
    table.push('\n');
    table.push_str(&checks_table(&cert.checks));
    Ok(Outcome {
        table,
        certificate: cert,
    })
}

pub fn cmd_binom(n: u64) -> Result<Outcome> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("degree must be at least 2, got {n}")));
    }
    let mut cert = Certificate::new("binom", args([("N", n.to_string())]));
    let mut rows = Vec::new();
    let mut exceptions = serde_json::Map::new();
    let constraints: BTreeMap<u64, String> = if n >= 4 {
        degree_constraint_report(n)?
            .entries
            .into_iter()
            .map(|e| {
                let d = e.constraint.describe();
                cert.checks.push(Check::exact(
                    format!("binomial_constraint_mod_{}", e.exceptions.q),
                    Verdict::Info,
                    &d,
                ));
                (e.exceptions.q, d)
            })
            .collect()
    } else {
        BTreeMap::new()
    };
    for q in primes_up_to(n) {
        let set = binom_exception_set(n, q)?;
        let ks: Vec<String> = set.ks.iter().map(ToString::to_string).collect();
        rows.push(vec![
            q.to_string(),
            format!("{{{}}}", ks.join(",")),
            constraints.get(&q).cloned().unwrap_or_default(),
        ]);
        exceptions.insert(q.to_string(), json!(set.ks));
    }
    cert.results = json!({
        "degree": n,
        "exceptions": exceptions,
        "constraints": constraints.iter().map(|(q, d)| json!({ "q": q, "constraint": d })).collect::<Vec<_>>(),
    });
    let mut table = format!("N = {n}: 1 <= k <= N-1 with q not dividing C(N, k)\n\n");
    table.push_str(&render(&["q", "exceptions", "constraint"], &rows));
    Ok(Outcome {
        table,
        certificate: cert,
    })
}

pub fn cmd_power_sums(text: &str, format: PolyFormat, level: usize, m_max: usize) -> Result<Outcome> {
    let input = PolyInput::parse(text, format)?;
    let f = input.poly.monic()?;
    let a = f.normalized_coeffs()?;
    let sums = power_sums(&a, level, m_max)?;
    let mut cert = Certificate::new(
        "power-sums",
        args([
            ("poly", text.trim().to_owned()),
            ("format", format_name(format)),
            ("l", level.to_string()),
            ("m", m_max.to_string()),
        ]),
    );
    cert.input = Some(input.record());
    let inv = center_mass_invariance(&a)?;
    cert.checks.push(Check::exact(
        "center_of_mass_invariant_across_derivatives",
        Verdict::from_bool(inv.holds),
        format!("sigma_1(l) / (N - l) = {}", inv.center),
    ));
    if level == 0 {
        if let Some(roots) = input.factored.as_ref().and_then(|fp| fp.rational_roots().ok()) {
            let bad: Vec<usize> = (1..=m_max)
                .filter(|&m| root_power_sum(&roots, m as u32) != sums[m - 1])
                .collect();
            cert.checks.push(Check::exact(
                "recurrence_matches_root_powers",
                Verdict::from_bool(bad.is_empty()),
                if bad.is_empty() {
                    format!("m = 1..{m_max}")
                } else {
                    format!("differs for m = {bad:?}")
                },
            ));
        }
    }
    let strings: Vec<String> = sums.iter().map(ToString::to_string).collect();
    cert.results =
        json!({ "degree": a.degree, "level": level, "power_sums": strings, "center_of_mass": inv.center.to_string() });
    let rows: Vec<Vec<String>> = strings
        .iter()
        .enumerate()
        .map(|(i, s)| vec![(i + 1).to_string(), s.clone()])
        .collect();
    let mut table = format!("power sums of the roots of f^({level}), f = {f}\n\n");
    table.push_str(&render(&["m", "sigma_m"], &rows));
    table.push('\n');
    table.push_str(&checks_table(&cert.checks));
    Ok(Outcome {
        table,
        certificate: cert,
    })
}

pub fn cmd_search(n: usize, bound: i64, exec: Execution) -> Result<Outcome> {
    let report = exhaustive_integer_root_search_with(n, bound, exec)?;
    let mut cert = Certificate::new("search", args([("N", n.to_string()), ("B", bound.to_string())]));
    let hits: Vec<serde_json::Value> = report
        .hits
        .iter()
        .map(|h| {
            let roots: Vec<String> = h.roots.iter().map(|(r, m)| format!("{r}^{m}")).collect();
            json!({ "roots": roots.join(", "), "coeffs": caforge_core::poly::format_coeffs(&h.poly) })
        })
        .collect();
    cert.checks.push(Check::exact(
        "no_nontrivial_integer_root_example",
        Verdict::from_bool(hits.is_empty()),
        format!(
            "{} root multisets in [-{bound}, {bound}] with 0 as a root, {} hits",
            report.enumerated,
            hits.len()
        ),
    ));
    cert.results = json!({ "degree": n, "bound": bound, "enumerated": report.enumerated, "hits": hits });
    let mut table = format!("degree {n}, integer roots in [-{bound}, {bound}], root 0 fixed\n\n");
    table.push_str(&checks_table(&cert.checks));
    Ok(Outcome {
        table,
        certificate: cert,
    })
}

pub fn cmd_proof_checks(config: &ProofCheckConfig) -> Result<Outcome> {
    let report = proof_checks(config)?;
    let mut cert = Certificate::new(
        "proof-checks",
        args([
            ("phi_start", config.phi_start.to_string()),
            ("phi_end", config.phi_end.to_string()),
            ("phi_steps", config.phi_steps.to_string()),
            ("n_min", config.n_min.to_string()),
            ("n_max", config.n_max.to_string()),
            ("integration_min", config.integration_min.to_string()),
            ("integration_max", config.integration_max.to_string()),
        ]),
    );
    cert.results = json!({
        "phi_at_4": report.phi_at_4,
        "subcase_solutions": serde_json::to_value(&report.subcase_solutions).expect("plain data"),
    });
    let table = checks_table(&report.checks);
    cert.checks = report.checks;
    Ok(Outcome {
        table,
        certificate: cert,
    })
}
