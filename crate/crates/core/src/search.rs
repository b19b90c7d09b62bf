//! Exhaustive search for signature matrices `A_{m,n}` (m entries `-1`,
//! n entries `+1`) with `sigma_k(A_{m,n}) = 0`.
//!
//! For fixed `m`, `sigma_k(A_{m,n}) = sum_j (-1)^j C(m,j) C(n,k-j)` is a
//! degree-`k` integer polynomial in `n`, so each row is walked with a
//! forward-difference table: one pass of `k` additions per candidate.
//! Rows are sharded across a rayon pool and merged in order.

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{choose, integer_text, BinomialRows, Integer, Rational};
use crate::symfunc::{self, Spectrum};

/// Largest `k` served from the `i128` binomial row cache.
pub const ROW_CACHE_MAX_K: usize = 5;

/// Headroom bound used to decide whether a box fits in `i128`.
const WIDE_LIMIT_BITS: f64 = 120.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignatureDims {
    /// Number of `-1` eigenvalues.
    pub m: u64,
    /// Number of `+1` eigenvalues.
    pub n: u64,
}

impl SignatureDims {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidArgument(format!("signature counts must be positive, got ({m}, {n})")));
        }
        Ok(SignatureDims { m, n })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub k: usize,
    pub m: u64,
    pub n: u64,
    /// `sigma_1, ..., sigma_k` of `A_{m,n}`.
    #[serde(with = "integer_text::vec")]
    pub sigma_values: Vec<Integer>,
    /// `sigma_j >= 0` for every `j < k`.
    pub admissible: bool,
    /// `m + n > 8`.
    pub large: bool,
    /// `m == n` for odd `k`, where `sigma_k` vanishes by antisymmetry.
    pub trivial: bool,
    /// `m + n < k`: fewer eigenvalues than `k`, so `sigma_k` vanishes vacuously.
    pub degenerate: bool,
}

impl SearchHit {
    pub fn dims(&self) -> SignatureDims {
        SignatureDims { m: self.m, n: self.n }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Report `(m, n)` with `m <= n`; a mirrored hit is kept only when its
    /// partner lies outside the box.
    Canonical,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arithmetic {
    /// `i128` when the box provably fits, arbitrary precision otherwise.
    Auto,
    Wide,
    Big,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub k: usize,
    pub m_max: u64,
    pub n_max: u64,
    pub orientation: Orientation,
    pub arithmetic: Arithmetic,
    /// Rows of `m` per work unit.
    pub shard_rows: u64,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub jobs: Option<usize>,
}

impl SearchConfig {
    pub fn new(k: usize, m_max: u64, n_max: u64) -> Self {
        SearchConfig {
            k,
            m_max,
            n_max,
            orientation: Orientation::Canonical,
            arithmetic: Arithmetic::Auto,
            shard_rows: 64,
            jobs: None,
        }
    }
}

/// `sigma_k(A_{m,n}) = sum_{j=0..k} (-1)^j C(m,j) C(n,k-j)`.
pub fn sigma_signature(d: SignatureDims, k: usize) -> Integer {
    let mut total = Integer::zero();
    for j in 0..=k as u64 {
        let term = choose(d.m, j) * choose(d.n, k as u64 - j);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Whether every value and difference of the row polynomials fits in `i128`.
///
/// `|sigma_k(A_{m,n})| <= C(m+n, k)`, and the difference table at most
/// multiplies that by `2^k`.
pub fn wide_arithmetic_safe(k: usize, m_max: u64, n_max: u64) -> bool {
    let span = (m_max as f64) + (n_max as f64) + k as f64 + 1.0;
    let bits = k as f64 * span.log2() + k as f64 + 1.0;
    bits < WIDE_LIMIT_BITS
}

/// All `(m, n)` in `[1, m_max] x [1, n_max]` with `sigma_k(A_{m,n}) = 0`,
/// canonical orientation, default sharding.
pub fn find_roots(k: usize, m_max: u64, n_max: u64) -> Result<Vec<SearchHit>> {
    find_roots_with(&SearchConfig::new(k, m_max, n_max))
}

pub fn find_roots_with(cfg: &SearchConfig) -> Result<Vec<SearchHit>> {
    if cfg.k == 0 {
        return Err(Error::InvalidArgument("search needs k >= 1".into()));
    }
    if cfg.m_max == 0 || cfg.n_max == 0 {
        return Err(Error::InvalidArgument("search bounds must be at least 1".into()));
    }
    let wide = match cfg.arithmetic {
        Arithmetic::Auto => wide_arithmetic_safe(cfg.k, cfg.m_max, cfg.n_max),
        Arithmetic::Wide => {
            if !wide_arithmetic_safe(cfg.k, cfg.m_max, cfg.n_max) {
                return Err(Error::InvalidArgument(format!(
                    "k = {} over a {}x{} box may overflow i128",
                    cfg.k, cfg.m_max, cfg.n_max
                )));
            }
            true
        }
        Arithmetic::Big => false,
    };

    let roots = match cfg.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
            pool.install(|| scan(cfg, wide))
        }
        None => scan(cfg, wide),
    };

    Ok(roots.into_iter().filter(|&(m, n)| keep_orientation(cfg, m, n)).map(|(m, n)| make_hit(cfg.k, m, n)).collect())
}

fn keep_orientation(cfg: &SearchConfig, m: u64, n: u64) -> bool {
    match cfg.orientation {
        Orientation::Both => true,
        Orientation::Canonical => m <= n || n > cfg.m_max || m > cfg.n_max,
    }
}

/// Zero positions in lexicographic order.
fn scan(cfg: &SearchConfig, wide: bool) -> Vec<(u64, u64)> {
    let shard = cfg.shard_rows.max(1);
    let shards: Vec<(u64, u64)> =
        (0..cfg.m_max.div_ceil(shard)).map(|i| (1 + i * shard, ((i + 1) * shard).min(cfg.m_max))).collect();
    let rows =
        if wide && cfg.k <= ROW_CACHE_MAX_K { BinomialRows::new(cfg.m_max.max(cfg.k as u64 + 1), cfg.k) } else { None };
    shards
        .par_iter()
        .map(|&(lo, hi)| {
            let mut out = Vec::new();
            for m in lo..=hi {
                if wide {
                    scan_row_wide(cfg.k, m, cfg.n_max, rows.as_ref(), &mut out);
                } else {
                    scan_row_big(cfg.k, m, cfg.n_max, &mut out);
                }
            }
            out
        })
        .collect::<Vec<_>>()
        .concat()
}

/// `[p(1), ..., p(k+1)]` for the row polynomial `p(n) = sigma_k(A_{m,n})`,
/// as exact integers.
fn row_seed(k: usize, m: u64) -> Vec<Integer> {
    (1..=k as u64 + 1).map(|n| sigma_signature(SignatureDims { m, n }, k)).collect()
}

/// Forward differences `[D^0 p(1), D^1 p(1), ..., D^k p(1)]`.
fn difference_table<T>(mut values: Vec<T>) -> Vec<T>
where
    T: Clone + std::ops::Sub<Output = T>,
{
    let len = values.len();
    for level in 1..len {
        for i in (level..len).rev() {
            values[i] = values[i].clone() - values[i - 1].clone();
        }
    }
    values
}

fn scan_row_wide(k: usize, m: u64, n_max: u64, rows: Option<&BinomialRows>, out: &mut Vec<(u64, u64)>) {
    let seed: Vec<i128> = match rows {
        Some(rows) => (1..=k as u64 + 1)
            .map(|n| {
                (0..=k)
                    .map(|j| {
                        let t = rows.get(m, j) * rows.get(n, k - j);
                        if j % 2 == 0 {
                            t
                        } else {
                            -t
                        }
                    })
                    .sum()
            })
            .collect(),
        None => row_seed(k, m).iter().map(|v| v.to_i128().expect("guarded by wide_arithmetic_safe")).collect(),
    };
    let mut diff = difference_table(seed);
    for n in 1..=n_max {
        if diff[0] == 0 {
            out.push((m, n));
        }
        for i in 0..k {
            diff[i] += diff[i + 1];
        }
    }
}

fn scan_row_big(k: usize, m: u64, n_max: u64, out: &mut Vec<(u64, u64)>) {
    let mut diff = difference_table(row_seed(k, m));
    for n in 1..=n_max {
        if diff[0].is_zero() {
            out.push((m, n));
        }
        for i in 0..k {
            let next = diff[i + 1].clone();
            diff[i] += next;
        }
    }
}

fn make_hit(k: usize, m: u64, n: u64) -> SearchHit {
    let d = SignatureDims { m, n };
    let sigma_values: Vec<Integer> = (1..=k).map(|j| sigma_signature(d, j)).collect();
    let admissible = sigma_values[..k - 1].iter().all(|v| v >= &Integer::zero());
    SearchHit {
        k,
        m,
        n,
        admissible,
        large: m + n > 8,
        trivial: k % 2 == 1 && m == n,
        degenerate: m + n < k as u64,
        sigma_values,
    }
}

/// Hits with `sigma_j >= 0` for all `j < k` and `m + n > 8`.
pub fn admissibility_filter(hits: &[SearchHit], k: usize) -> Vec<SearchHit> {
    hits.iter()
        .filter(|h| {
            let d = h.dims();
            h.m + h.n > 8 && (1..k).all(|j| sigma_signature(d, j) >= Integer::zero())
        })
        .cloned()
        .collect()
}

/// Recomputes `sigma_k` of the hit through the block generating function on
/// the spectrum `{-1 x m, +1 x n}`; independent of the search arithmetic.
pub fn revalidate(hit: &SearchHit) -> bool {
    let s = Spectrum::from_pairs([(Rational::from(-1), hit.m), (Rational::from(1), hit.n)])
        .expect("positive multiplicities");
    symfunc::sigma(&s, hit.k).is_zero()
        && (1..=hit.k).all(|j| symfunc::sigma(&s, j) == Rational::from_integer(hit.sigma_values[j - 1].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binomial;

    fn pairs(hits: &[SearchHit]) -> Vec<(u64, u64)> {
        hits.iter().map(|h| (h.m, h.n)).collect()
    }

    #[test]
    fn signature_examples() {
        assert_eq!(sigma_signature(SignatureDims::new(715, 806).unwrap(), 4), Integer::zero());
        let d = SignatureDims::new(1, 7).unwrap();
        assert_eq!(binomial(7, 4).unwrap() - binomial(7, 3).unwrap(), Integer::zero());
        assert_eq!(sigma_signature(d, 4), Integer::zero());
        let direct = binomial(36, 2).unwrap() - 1080 + binomial(30, 2).unwrap();
        assert_eq!(sigma_signature(SignatureDims::new(30, 36).unwrap(), 2), direct);
        assert_eq!(direct, Integer::from(-15));
        assert!(SignatureDims::new(0, 3).is_err());
    }

    #[test]
    fn k1_roots_are_the_diagonal() {
        let hits = find_roots(1, 12, 12).unwrap();
        assert_eq!(pairs(&hits), (1..=12).map(|i| (i, i)).collect::<Vec<_>>());
        assert!(hits.iter().all(|h| h.trivial));
    }

    #[test]
    fn small_k4_box() {
        let hits = find_roots(4, 50, 50).unwrap();
        assert_eq!(pairs(&hits), vec![(1, 1), (1, 2), (1, 7), (3, 5), (7, 10), (30, 36)]);
        assert!(hits[0].degenerate && hits[1].degenerate && !hits[2].degenerate);
        assert!(hits.iter().all(revalidate));
        assert!(hits.iter().all(|h| h.sigma_values[3].is_zero()));
    }

    #[test]
    fn both_orientations_are_mirror_images() {
        for k in [4usize, 5] {
            let mut cfg = SearchConfig::new(k, 60, 60);
            cfg.orientation = Orientation::Both;
            let hits = find_roots_with(&cfg).unwrap();
            let set: std::collections::BTreeSet<_> = pairs(&hits).into_iter().collect();
            for &(m, n) in &set {
                assert!(set.contains(&(n, m)), "k={k}: ({m},{n}) lacks its mirror");
            }
        }
    }

    #[test]
    fn canonical_keeps_mirror_outside_box() {
        // (7, 1) is a root; its mirror (1, 7) is outside a box with n_max = 5
        let hits = find_roots(4, 10, 5).unwrap();
        assert!(pairs(&hits).contains(&(7, 1)));
        assert!(!pairs(&find_roots(4, 10, 10).unwrap()).contains(&(7, 1)));
    }

    #[test]
    fn shard_layout_does_not_change_output() {
        let base = find_roots(5, 200, 200).unwrap();
        for (rows, jobs) in [(1, Some(1)), (7, Some(3)), (1000, Some(2)), (13, None)] {
            let mut cfg = SearchConfig::new(5, 200, 200);
            cfg.shard_rows = rows;
            cfg.jobs = jobs;
            assert_eq!(find_roots_with(&cfg).unwrap(), base);
        }
    }

    #[test]
    fn big_fallback_matches_wide_path() {
        for k in [2usize, 4, 5, 6, 7] {
            let mut big = SearchConfig::new(k, 150, 150);
            big.arithmetic = Arithmetic::Big;
            let mut wide = SearchConfig::new(k, 150, 150);
            wide.arithmetic = Arithmetic::Wide;
            assert_eq!(find_roots_with(&big).unwrap(), find_roots_with(&wide).unwrap(), "k={k}");
        }
    }

    #[test]
    fn auto_falls_back_when_the_box_is_too_wide() {
        assert!(wide_arithmetic_safe(4, 10_000, 10_000));
        assert!(wide_arithmetic_safe(5, 10_000, 10_000));
        assert!(!wide_arithmetic_safe(12, 10_000, 10_000));
        let mut cfg = SearchConfig::new(12, 10_000, 10_000);
        cfg.arithmetic = Arithmetic::Wide;
        assert!(find_roots_with(&cfg).is_err());
        // k = 20 on a 30 x 30 box overflows the i128 bound, so Auto takes the BigInt path
        assert!(!wide_arithmetic_safe(20, 30, 30));
        let mut cfg = SearchConfig::new(20, 30, 30);
        cfg.orientation = Orientation::Both;
        let hits = find_roots_with(&cfg).unwrap();
        let brute: Vec<(u64, u64)> = (1..=30u64)
            .flat_map(|m| (1..=30u64).map(move |n| (m, n)))
            .filter(|&(m, n)| sigma_signature(SignatureDims { m, n }, 20).is_zero())
            .collect();
        assert_eq!(pairs(&hits), brute);
        assert!(hits.iter().all(revalidate));
    }

    #[test]
    fn admissibility_examples() {
        assert!(admissibility_filter(&[], 4).is_empty());
        let h = make_hit(4, 30, 36);
        assert_eq!(h.sigma_values[1], Integer::from(-15));
        assert!(admissibility_filter(&[h], 4).is_empty());
        let good = make_hit(4, 715, 806);
        assert!(good.admissible && good.large);
        assert_eq!(admissibility_filter(std::slice::from_ref(&good), 4), vec![good]);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(find_roots(0, 10, 10).is_err());
        assert!(find_roots(4, 0, 10).is_err());
    }
}
