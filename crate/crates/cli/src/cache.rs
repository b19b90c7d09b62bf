//! Content-addressed cache for search results.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use sigmak_core::search::{self, SearchConfig};
use sigmak_core::SearchHit;

use crate::args::CacheArgs;

#[derive(Debug, Clone)]
pub struct SearchCache {
    dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Stored,
    Disabled,
}

impl SearchCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        SearchCache { dir: dir.into() }
    }

    /// `--cache-dir` / `SIGMAK_CACHE_DIR`, else the user cache directory.
    pub fn from_args(args: &CacheArgs) -> Option<Self> {
        if args.no_cache {
            return None;
        }
        if let Some(dir) = &args.cache_dir {
            return Some(Self::new(dir));
        }
        let base = std::env::var_os("XDG_CACHE_HOME")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
        Some(Self::new(base.join("sigmak")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Hex SHA-256 of everything that determines the raw hit list.
    pub fn key(cfg: &SearchConfig) -> String {
        let material = format!(
            "sigmak-search|{}|k={}|m_max={}|n_max={}|orientation={:?}",
            env!("CARGO_PKG_VERSION"),
            cfg.k,
            cfg.m_max,
            cfg.n_max,
            cfg.orientation
        );
        hex::encode(Sha256::digest(material.as_bytes()))
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("search-{key}.json"))
    }

    /// A cached list that fails to parse or re-validate counts as a miss.
    pub fn load(&self, cfg: &SearchConfig) -> Option<Vec<SearchHit>> {
        let bytes = fs::read(self.path(&Self::key(cfg))).ok()?;
        let hits: Vec<SearchHit> = serde_json::from_slice(&bytes).ok()?;
        let consistent =
            hits.iter().all(|h| h.k == cfg.k && h.m <= cfg.m_max && h.n <= cfg.n_max && search::revalidate(h));
        consistent.then_some(hits)
    }

    /// Write-temp-then-rename so readers never see a partial file.
    pub fn store(&self, cfg: &SearchConfig, hits: &[SearchHit]) -> anyhow::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, hits)?;
        tmp.flush()?;
        tmp.persist(self.path(&Self::key(cfg)))?;
        Ok(())
    }
}

/// Runs the search through the cache when one is configured. Failing to
/// write the cache is not an error; the result is still returned.
pub fn find_roots_cached(
    cfg: &SearchConfig,
    cache: Option<&SearchCache>,
) -> sigmak_core::Result<(Vec<SearchHit>, CacheStatus)> {
    let Some(cache) = cache else {
        return Ok((search::find_roots_with(cfg)?, CacheStatus::Disabled));
    };
    if let Some(hits) = cache.load(cfg) {
        return Ok((hits, CacheStatus::Hit));
    }
    let hits = search::find_roots_with(cfg)?;
    let status = match cache.store(cfg, &hits) {
        Ok(()) => CacheStatus::Stored,
        Err(_) => CacheStatus::Disabled,
    };
    Ok((hits, status))
}
