use std::io::Write;

use serde::Serialize;
use sigmak_core::search::{self, Orientation, SearchConfig};
use sigmak_core::SearchHit;

use crate::args::{Format, SearchArgs};
use crate::cache::{find_roots_cached, SearchCache};
use crate::output::{write_csv, write_json, write_table};
use crate::UsageError;

#[derive(Debug, Serialize)]
struct Params {
    k: u32,
    m_max: u64,
    n_max: u64,
    admissible: bool,
    both_orientations: bool,
    include_trivial: bool,
}

/// The report filters applied to a raw hit list. For `k = 1` every root is
/// trivial, so nothing is dropped.
pub fn select(hits: Vec<SearchHit>, k: usize, admissible: bool, include_trivial: bool) -> Vec<SearchHit> {
    let keep_trivial = include_trivial || k == 1;
    let hits: Vec<SearchHit> = hits.into_iter().filter(|h| keep_trivial || !h.trivial).collect();
    if admissible {
        search::admissibility_filter(&hits, k)
    } else {
        hits
    }
}

pub fn run(args: &SearchArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let m_max = args.m_max.or(args.max).ok_or_else(|| UsageError::new("--m-max or --max is required"))?;
    let n_max = args.n_max.or(args.max).ok_or_else(|| UsageError::new("--n-max or --max is required"))?;
    if m_max == 0 || n_max == 0 {
        return Err(UsageError::new("search bounds must be at least 1").into());
    }
    let k = args.k as usize;
    let mut cfg = SearchConfig::new(k, m_max, n_max);
    cfg.jobs = args.cache.jobs.map(usize::from);
    if args.both_orientations {
        cfg.orientation = Orientation::Both;
    }
    let cache = SearchCache::from_args(&args.cache);
    let (hits, _) = find_roots_cached(&cfg, cache.as_ref())?;
    let hits = select(hits, k, args.admissible, args.include_trivial);

    match args.format {
        Format::Json => {
            let params = Params {
                k: args.k,
                m_max,
                n_max,
                admissible: args.admissible,
                both_orientations: args.both_orientations,
                include_trivial: args.include_trivial,
            };
            write_json(out, "search", params, &hits)?;
        }
        Format::Csv => {
            let mut header = vec!["k".to_string(), "m".into(), "n".into()];
            header.extend((1..=k).map(|j| format!("sigma{j}")));
            header.extend(["admissible".into(), "large".into(), "trivial".into()]);
            let rows: Vec<Vec<String>> = hits
                .iter()
                .map(|h| {
                    let mut row = vec![h.k.to_string(), h.m.to_string(), h.n.to_string()];
                    row.extend(h.sigma_values.iter().map(|v| v.to_string()));
                    row.extend([h.admissible.to_string(), h.large.to_string(), h.trivial.to_string()]);
                    row
                })
                .collect();
            write_csv(out, &header, &rows)?;
        }
        Format::Table => {
            let mut header = vec!["m".to_string(), "n".into()];
            header.extend((1..k).map(|j| format!("sigma_{j}")));
            header.extend(["admissible".into(), "large".into(), "notes".into()]);
            let rows: Vec<Vec<String>> = hits
                .iter()
                .map(|h| {
                    let mut row = vec![h.m.to_string(), h.n.to_string()];
                    row.extend(h.sigma_values[..k - 1].iter().map(|v| v.to_string()));
                    let notes: Vec<&str> = [(h.trivial, "trivial"), (h.degenerate, "degenerate")]
                        .into_iter()
                        .filter_map(|(on, s)| on.then_some(s))
                        .collect();
                    row.extend([yes_no(h.admissible), yes_no(h.large), notes.join(",")]);
                    row
                })
                .collect();
            writeln!(out, "sigma_{k}(A_(m,n)) = 0 for 1 <= m <= {m_max}, 1 <= n <= {n_max}: {} hit(s)", hits.len())?;
            write_table(out, &header, &rows)?;
        }
    }
    Ok(0)
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}
