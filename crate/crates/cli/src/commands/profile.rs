use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use sigmak_core::product::{self, ProductDims};
use sigmak_core::{ConeVerdict, Rational};

use crate::args::{Format, ProfileArgs};
use crate::output::{strings, write_csv, write_json, write_table};

#[derive(Debug, Serialize)]
struct Params {
    n: u64,
    m: u64,
    kmax: u32,
}

#[derive(Debug, Serialize)]
struct Results {
    /// `sigma_1..sigma_kmax`.
    sigma: Vec<Rational>,
    cone: ConeVerdict,
    /// Absent when `n + m < 4`.
    t3: Option<BTreeMap<String, Rational>>,
    t3_positive: Option<bool>,
}

pub fn run(args: &ProfileArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let dims = ProductDims::new(args.n, args.m)?;
    let profile = product::sigma_profile(dims, args.kmax as usize)?;
    let t3 = (dims.dim() >= 4).then(|| product::newton_t3(dims)).transpose()?;
    let results = Results {
        sigma: profile.values.clone(),
        cone: profile.verdict,
        t3: t3.as_ref().map(|t| t.values.iter().map(|(l, v)| (l.to_string(), v.clone())).collect()),
        t3_positive: t3.as_ref().map(|t| t.positive),
    };
    match args.format {
        Format::Json => write_json(out, "profile", Params { n: args.n, m: args.m, kmax: args.kmax }, &results)?,
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = results
                .sigma
                .iter()
                .enumerate()
                .map(|(j, v)| vec![format!("sigma_{}", j + 1), String::new(), v.to_string()])
                .collect();
            if let Some(t3) = &results.t3 {
                rows.extend(t3.iter().map(|(l, v)| vec!["T_3".to_string(), l.clone(), v.to_string()]));
            }
            write_csv(out, &strings(["quantity", "block", "value"]), &rows)?;
        }
        Format::Table => {
            writeln!(out, "Schouten tensor of S^{} x H^{}: +1/2 (x{}), -1/2 (x{})", args.n, args.m, args.n, args.m)?;
            let rows: Vec<Vec<String>> = results
                .sigma
                .iter()
                .enumerate()
                .map(|(j, v)| vec![format!("sigma_{}", j + 1), v.to_string()])
                .collect();
            write_table(out, &strings(["quantity", "value"]), &rows)?;
            let witness = match results.cone.witness() {
                Some(j) => format!(" (first sigma_j <= 0 at j = {j})"),
                None => String::new(),
            };
            writeln!(out, "cone Gamma_{}: {}{witness}", args.kmax, results.cone.name())?;
            if let Some(t3) = &results.t3 {
                for (label, v) in t3 {
                    writeln!(out, "T_3[{label}] = {v}")?;
                }
                writeln!(out, "T_3 positive definite: {}", results.t3_positive == Some(true))?;
            }
        }
    }
    Ok(0)
}
