//! Recomputes every reference value from scratch and compares.

use std::io::Write;

use serde::{Deserialize, Serialize};
use sigmak_core::boundary::{self, DISPLAYED_H4_COEFFS, DISPLAYED_S3_COEFFS};
use sigmak_core::product::{self, ProductDims, HYPERBOLIC, SPHERE};
use sigmak_core::search::{self, SearchConfig};
use sigmak_core::{BoundaryGeometry, ConeVerdict, Integer, Rational, SearchHit};

use crate::args::{Format, VerifyArgs};
use crate::cache::{find_roots_cached, SearchCache};
use crate::commands::search::select;
use crate::output::{strings, write_csv, write_json, write_table};

pub const SIGMA4_ROOTS: [(u64, u64); 8] = [(1, 1), (1, 2), (1, 7), (3, 5), (7, 10), (30, 36), (715, 806), (7476, 7567)];
pub const SIGMA5_ROOTS: [(u64, u64); 9] =
    [(1, 2), (1, 3), (1, 9), (3, 7), (3, 14), (14, 22), (22, 45), (28, 39), (133, 156)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    #[serde(rename = "overallPass")]
    pub overall_pass: bool,
}

impl VerifyReport {
    pub fn exit_code(&self) -> i32 {
        if self.overall_pass {
            crate::EXIT_OK
        } else {
            crate::EXIT_VERIFY_FAILED
        }
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: PartialEq + ToString>(&mut self, name: &str, expected: T, computed: T) {
        self.0.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass: expected == computed,
        });
    }

    fn holds(&mut self, name: &str, expected: &str, computed: String, pass: bool) {
        self.0.push(Check { name: name.into(), expected: expected.into(), computed, pass });
    }
}

fn pairs(hits: &[SearchHit]) -> String {
    hits.iter().map(|h| format!("({},{})", h.m, h.n)).collect::<Vec<_>>().join(" ")
}

fn pair_list(list: &[(u64, u64)]) -> String {
    list.iter().map(|(m, n)| format!("({m},{n})")).collect::<Vec<_>>().join(" ")
}

fn q(p: i64, d: i64) -> Rational {
    Rational::ratio(p, d)
}

fn parse(s: &str) -> Rational {
    s.parse().expect("reference constants are valid rationals")
}

/// Runs every check. `cache` and `jobs` only affect how the two searches run.
pub fn run_checks(cache: Option<&SearchCache>, jobs: Option<usize>) -> anyhow::Result<VerifyReport> {
    let mut c = Checks::default();

    let mut cfg = SearchConfig::new(4, 10_000, 10_000);
    cfg.jobs = jobs;
    let (raw4, _) = find_roots_cached(&cfg, cache)?;
    let hits4 = select(raw4, 4, false, false);
    c.eq("sigma4_roots_10000", pair_list(&SIGMA4_ROOTS), pairs(&hits4));
    c.holds(
        "sigma4_roots_revalidate",
        "all hits vanish under the block formula",
        format!("{} of {} re-validated", hits4.iter().filter(|h| search::revalidate(h)).count(), hits4.len()),
        hits4.iter().all(search::revalidate),
    );
    let admissible = search::admissibility_filter(&hits4, 4);
    c.eq("sigma4_admissible_unique", "(715,806)".to_string(), pairs(&admissible));

    let mut cfg = SearchConfig::new(5, 1000, 1000);
    cfg.jobs = jobs;
    let (raw5, _) = find_roots_cached(&cfg, cache)?;
    let trivial = raw5.iter().filter(|h| h.trivial).count();
    let hits5 = select(raw5, 5, false, false);
    c.eq("sigma5_roots_1000", pair_list(&SIGMA5_ROOTS), pairs(&hits5));
    c.eq("sigma5_trivial_diagonal", 1000usize, trivial);

    let dims = ProductDims::new(806, 715)?;
    let profile = product::sigma_profile(dims, 4)?;
    for (j, expected) in [q(91, 2), q(3380, 4), q(56420, 8), q(0, 1)].into_iter().enumerate() {
        c.eq(&format!("profile_sigma{}", j + 1), expected, profile.values[j].clone());
    }
    c.eq(
        "profile_cone_k4",
        format!("{:?}", ConeVerdict::ClosureBoundary { first_nonpositive: 4 }),
        format!("{:?}", profile.verdict),
    );
    c.eq("profile_cone_k3", "interior".to_string(), product::sigma_profile(dims, 3)?.verdict.name().to_string());
    let t3 = product::newton_t3(dims)?;
    c.eq("t3_sphere", q(483 * 715, 52), t3.values.get(SPHERE).cloned().unwrap_or_else(Rational::zero));
    c.eq("t3_hyperbolic", q(483 * 806, 52), t3.values.get(HYPERBOLIC).cloned().unwrap_or_else(Rational::zero));
    c.holds("t3_positive", "true", t3.positive.to_string(), t3.positive);

    let nf = boundary::calibrate_n_formula(1520)?;
    c.eq("n_formula_calibration", 1519, nf);
    let h = boundary::hk_coefficients(4, nf)?;
    for (j, (p, d)) in DISPLAYED_H4_COEFFS.iter().enumerate() {
        c.eq(&format!("h4_coefficient_{j}"), q(*p, *d), h.coeffs[j].clone());
    }
    let s = boundary::sk_coefficients(4, nf)?;
    for (j, (p, d)) in DISPLAYED_S3_COEFFS.iter().enumerate() {
        c.eq(&format!("s3_coefficient_{j}"), q(*p, *d), s.coeffs[j].clone());
    }

    for (g, h4_lead, s3_lead) in [
        (BoundaryGeometry::Cap, "11194421414880/28977203", "927410178387/144886015"),
        (BoundaryGeometry::Ball, "24089939471088/144886015", "508268486964/144886015"),
    ] {
        let h4 = boundary::h4_polynomial(g, 806, 715)?;
        let s3 = boundary::s3_polynomial_blocks(g, 806, 715)?;
        c.eq(&format!("{}_h4_kappa7", g.name()), parse(h4_lead), h4.coeff(7));
        c.eq(&format!("{}_s3_closed_kappa5", g.name()), parse(s3_lead), s3.closed().coeff(5));
        let positive = h4.all_coefficients_positive() && s3.blocks.iter().all(|(_, p)| p.all_coefficients_positive());
        c.holds(&format!("{}_boundary_coefficients_positive", g.name()), "true", positive.to_string(), positive);
        let lin = boundary::admissibility_linearization(g, 806, 715)?;
        c.holds(&format!("{}_linearization_positive", g.name()), "> 0", lin.to_string(), lin > Integer::from(0));
    }

    let overall_pass = c.0.iter().all(|x| x.pass);
    Ok(VerifyReport { checks: c.0, overall_pass })
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let cache = SearchCache::from_args(&args.cache);
    let report = run_checks(cache.as_ref(), args.cache.jobs.map(usize::from))?;
    let rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| vec![c.name.clone(), c.expected.clone(), c.computed.clone(), pass_word(c.pass).into()])
        .collect();
    match args.format {
        Format::Json => write_json(out, "verify", serde_json::json!({}), &report)?,
        Format::Csv => write_csv(out, &strings(["name", "expected", "computed", "pass"]), &rows)?,
        Format::Table => {
            write_table(out, &strings(["check", "expected", "computed", "result"]), &rows)?;
            let passed = report.checks.iter().filter(|c| c.pass).count();
            writeln!(out, "{passed}/{} checks passed", report.checks.len())?;
        }
    }
    Ok(report.exit_code())
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_failure_fails_the_report() {
        let mut report = run_checks(None, Some(2)).unwrap();
        assert_eq!(report.exit_code(), 0);
        assert!(report.get("cap_h4_kappa7").unwrap().pass);
        report.checks[3].pass = false;
        report.overall_pass = report.checks.iter().all(|c| c.pass);
        assert_eq!(report.exit_code(), 1);
    }
}
