use std::io::Write;

use serde::Serialize;
use sigmak_core::jacobi::{self, IndexModel, ModeSource, MODEL_TAG};
use sigmak_core::{BoundaryGeometry, IndexEstimate, ModeList, Rational};

use crate::args::{Format, IndexArgs, Modes};
use crate::output::{strings, write_csv, write_json, write_table};
use crate::UsageError;

#[derive(Debug, Serialize)]
struct Params {
    geometry: BoundaryGeometry,
    n: u64,
    m: u64,
    kappa: Vec<Rational>,
    modes: String,
    volume: Option<Rational>,
    lambda_max: Option<Rational>,
    l_cap: Option<u64>,
}

#[derive(Debug, Serialize)]
struct Row {
    #[serde(flatten)]
    estimate: IndexEstimate,
    modes: ModeSource,
}

#[derive(Debug, Serialize)]
struct Results {
    model: &'static str,
    closed_dim: u64,
    estimates: Vec<Row>,
}

pub fn run(args: &IndexArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    if let Some(bad) = args.kappa.iter().find(|k| !k.is_positive()) {
        return Err(UsageError::new(format!("kappa must be positive, got {bad}")).into());
    }
    let g: BoundaryGeometry = args.geometry.into();
    let model = IndexModel::new(g, args.n, args.m)?;
    let source = match (args.modes, g) {
        (Modes::Auto, BoundaryGeometry::Ball) => Modes::Sphere,
        (Modes::Auto, BoundaryGeometry::Cap) => Modes::Weyl,
        (Modes::Sphere, BoundaryGeometry::Cap) => {
            return Err(UsageError::new("sphere modes need a round closed factor; use --geometry ball").into())
        }
        (other, _) => other,
    };

    let weyl = if source == Modes::Weyl {
        let lambda_max = match &args.lambda_max {
            Some(l) => l.clone(),
            None => {
                let mut top = Rational::one();
                for kappa in &args.kappa {
                    let t = model.threshold(kappa)?;
                    if t > top {
                        top = t;
                    }
                }
                Rational::from_integer(top.floor() + 1)
            }
        };
        Some(jacobi::weyl_modes(model.closed_dim(), &args.volume, &lambda_max)?)
    } else {
        None
    };

    let mut estimates = Vec::with_capacity(args.kappa.len());
    for kappa in &args.kappa {
        let (estimate, modes) = match source {
            Modes::Sphere => {
                let (estimate, modes) = model.index_on_sphere(kappa, args.l_cap)?;
                (estimate, modes.source)
            }
            Modes::Weyl => {
                let modes: &ModeList = weyl.as_ref().expect("built above");
                (model.index(kappa, modes)?, modes.source.clone())
            }
            Modes::ConstantOnly | Modes::Auto => {
                let modes = ModeList::constant_only();
                (model.index(kappa, &modes)?, modes.source)
            }
        };
        estimates.push(Row { estimate, modes });
    }
    let results = Results { model: MODEL_TAG, closed_dim: model.closed_dim(), estimates };

    match args.format {
        Format::Json => {
            let params = Params {
                geometry: g,
                n: args.n,
                m: args.m,
                kappa: args.kappa.clone(),
                modes: mode_name(source).to_string(),
                volume: (source == Modes::Weyl).then(|| args.volume.clone()),
                lambda_max: match &weyl {
                    Some(ModeList { source: ModeSource::Weyl { lambda_max, .. }, .. }) => Some(lambda_max.clone()),
                    _ => None,
                },
                l_cap: (source == Modes::Sphere).then_some(args.l_cap),
            };
            write_json(out, "index", params, &results)?;
        }
        Format::Csv => write_csv(out, &header(), &rows(&results))?,
        Format::Table => {
            writeln!(out, "model: {MODEL_TAG}; modes: {}", mode_name(source))?;
            if source == Modes::Weyl {
                writeln!(out, "counts are Weyl-law estimates")?;
            }
            write_table(out, &header(), &rows(&results))?;
        }
    }
    Ok(0)
}

fn mode_name(m: Modes) -> &'static str {
    match m {
        Modes::Auto => "auto",
        Modes::Sphere => "sphere",
        Modes::Weyl => "weyl",
        Modes::ConstantOnly => "constant-only",
    }
}

fn header() -> Vec<String> {
    strings(["kappa", "threshold", "count", "ties", "truncated", "estimate"])
}

fn rows(results: &Results) -> Vec<Vec<String>> {
    results
        .estimates
        .iter()
        .map(|r| {
            let e = &r.estimate;
            vec![
                e.kappa.to_string(),
                e.threshold.to_string(),
                e.count.to_string(),
                e.ties.to_string(),
                e.truncated.to_string(),
                e.estimate.to_string(),
            ]
        })
        .collect()
}
