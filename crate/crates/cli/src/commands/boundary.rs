use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use sigmak_core::boundary::{self, BlockPolys};
use sigmak_core::exact::integer_text;
use sigmak_core::{BoundaryGeometry, Integer, KappaPoly, Rational};

use crate::args::{BoundaryArgs, Format};
use crate::output::{strings, write_csv, write_json, write_table};
use crate::UsageError;

#[derive(Debug, Serialize)]
struct Params {
    geometry: BoundaryGeometry,
    n: u64,
    m: u64,
    kappa: Option<Rational>,
    epsilon: Option<f64>,
}

#[derive(Debug, Serialize)]
struct Common {
    n_formula: i64,
    closed_factor: String,
    #[serde(with = "integer_text")]
    linearization: Integer,
}

#[derive(Debug, Serialize)]
struct Polynomials {
    #[serde(flatten)]
    common: Common,
    h4: KappaPoly,
    s3: BTreeMap<String, KappaPoly>,
}

#[derive(Debug, Serialize)]
struct Values {
    #[serde(flatten)]
    common: Common,
    kappa: Rational,
    /// Set when kappa came from a floating-point epsilon.
    approximate: bool,
    h4: Rational,
    s3: BTreeMap<String, Rational>,
}

/// `cot(eps)` for the cap, `coth(eps)` for the ball, computed in f64 and
/// rounded to twelve decimal places.
pub fn kappa_from_epsilon(g: BoundaryGeometry, eps: f64) -> Result<Rational, UsageError> {
    let kappa = match g {
        BoundaryGeometry::Cap if eps > 0.0 && eps < std::f64::consts::FRAC_PI_2 => eps.tan().recip(),
        BoundaryGeometry::Ball if eps > 0.0 => eps.tanh().recip(),
        BoundaryGeometry::Cap => return Err(UsageError::new("--epsilon must lie in (0, pi/2) for the cap")),
        BoundaryGeometry::Ball => return Err(UsageError::new("--epsilon must be positive for the ball")),
    };
    let exact = Rational::from_f64(kappa).ok_or_else(|| UsageError::new(format!("kappa = {kappa} is not finite")))?;
    let scale = Rational::from(10).pow(12);
    let rounded = (exact * &scale + Rational::half()).floor();
    Ok(Rational::from_integer(rounded) / scale)
}

pub fn run(args: &BoundaryArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let g: BoundaryGeometry = args.geometry.into();
    let h4 = boundary::h4_polynomial(g, args.n, args.m)?;
    let s3: BlockPolys = boundary::s3_polynomial_blocks(g, args.n, args.m)?;
    let common = Common {
        n_formula: boundary::n_formula(args.n, args.m),
        closed_factor: s3.closed_factor.clone(),
        linearization: boundary::admissibility_linearization(g, args.n, args.m)?,
    };
    let params = Params { geometry: g, n: args.n, m: args.m, kappa: args.kappa.clone(), epsilon: args.epsilon };

    let kappa = match (&args.kappa, args.epsilon) {
        (Some(k), _) => Some((k.clone(), false)),
        (None, Some(eps)) => Some((kappa_from_epsilon(g, eps)?, true)),
        (None, None) => None,
    };

    let Some((kappa, approximate)) = kappa else {
        let polys = Polynomials { common, h4, s3: s3.blocks.iter().map(|(l, p)| (l.clone(), p.clone())).collect() };
        match args.format {
            Format::Json => write_json(out, "boundary", params, &polys)?,
            Format::Csv => {
                let mut rows = Vec::new();
                for (deg, c) in polys.h4.terms() {
                    rows.push(vec!["H_4".into(), String::new(), deg.to_string(), c.to_string()]);
                }
                for (label, p) in &polys.s3 {
                    for (deg, c) in p.terms() {
                        rows.push(vec!["S_3".into(), label.clone(), deg.to_string(), c.to_string()]);
                    }
                }
                write_csv(out, &strings(["quantity", "block", "degree", "coefficient"]), &rows)?;
            }
            Format::Table => {
                write_header(out, g, args, &polys.common)?;
                writeln!(out, "H_4(κ) = {}", polys.h4)?;
                for (label, p) in &polys.s3 {
                    writeln!(out, "S_3[{label}](κ) = {p}{}", closed_marker(label, &polys.common))?;
                }
            }
        }
        return Ok(0);
    };

    let values = Values {
        h4: h4.eval(&kappa),
        s3: s3.blocks.iter().map(|(l, p)| (l.clone(), p.eval(&kappa))).collect(),
        kappa,
        approximate,
        common,
    };
    match args.format {
        Format::Json => write_json(out, "boundary", params, &values)?,
        Format::Csv => {
            let mut rows = vec![vec!["H_4".to_string(), String::new(), values.h4.to_string()]];
            rows.extend(values.s3.iter().map(|(l, v)| vec!["S_3".to_string(), l.clone(), v.to_string()]));
            write_csv(out, &strings(["quantity", "block", "value"]), &rows)?;
        }
        Format::Table => {
            write_header(out, g, args, &values.common)?;
            if approximate {
                writeln!(
                    out,
                    "κ = {} (approximate, from epsilon = {})",
                    values.kappa,
                    args.epsilon.unwrap_or_default()
                )?;
            } else {
                writeln!(out, "κ = {}", values.kappa)?;
            }
            let row = |name: String, v: &Rational| {
                let mut row = vec![name, v.to_string()];
                if approximate {
                    row.push(format!("{:.9e}", v.to_f64()));
                }
                row
            };
            let mut rows = vec![row("H_4".to_string(), &values.h4)];
            rows.extend(values.s3.iter().map(|(l, v)| row(format!("S_3[{l}]{}", closed_marker(l, &values.common)), v)));
            let header = if approximate {
                strings(["quantity", "value", "approximately"])
            } else {
                strings(["quantity", "value"])
            };
            write_table(out, &header, &rows)?;
        }
    }
    Ok(0)
}

fn closed_marker(label: &str, common: &Common) -> &'static str {
    if label == common.closed_factor {
        " (closed factor)"
    } else {
        ""
    }
}

fn write_header(out: &mut dyn Write, g: BoundaryGeometry, args: &BoundaryArgs, common: &Common) -> anyhow::Result<()> {
    writeln!(out, "{} boundary, n = {}, m = {}, coefficient index {}", g.name(), args.n, args.m, common.n_formula)?;
    writeln!(out, "admissibility linearization sum = {}", common.linearization)?;
    Ok(())
}
