//! Leading-order model of the Jacobi operator's index as the boundary
//! shrinks.
//!
//! On functions pulled back from the closed factor of the boundary, and
//! dropping the interior normal-derivative term (bounded as `kappa` grows),
//! the operator acts as `s3(kappa) * Laplacian - 7 H4(kappa)`, where `s3` is
//! the closed-factor entry of `S_3`. A Laplace eigenvalue `lambda` contributes
//! a negative direction exactly when `lambda < 7 H4 / s3`, so the index is the
//! eigenvalue count strictly below that threshold.

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::boundary::{self, BlockPolys, BoundaryGeometry};
use crate::error::{Error, Result};
use crate::exact::{choose, integer_text, Integer, Rational};
use crate::kappa::KappaPoly;

pub const MODEL_TAG: &str = "leading-order, interior term dropped";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mode {
    pub eigenvalue: Rational,
    #[serde(with = "integer_text")]
    pub multiplicity: Integer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModeSource {
    Sphere { dim: u64, l_max: u64 },
    Weyl { dim: u64, volume: Rational, lambda_max: Rational },
    ConstantOnly,
}

/// Laplace eigenvalues of the closed factor with multiplicities, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeList {
    pub entries: Vec<Mode>,
    pub source: ModeSource,
}

impl ModeList {
    /// Whether the multiplicities are an asymptotic estimate rather than exact.
    pub fn is_estimate(&self) -> bool {
        matches!(self.source, ModeSource::Weyl { .. })
    }

    pub fn largest(&self) -> &Rational {
        &self.entries.last().expect("mode lists are nonempty").eigenvalue
    }

    /// Total multiplicity of eigenvalues `<= lambda`.
    pub fn counting(&self, lambda: &Rational) -> Integer {
        self.entries.iter().filter(|e| &e.eigenvalue <= lambda).map(|e| e.multiplicity.clone()).sum()
    }

    pub fn constant_only() -> Self {
        ModeList {
            entries: vec![Mode { eigenvalue: Rational::zero(), multiplicity: Integer::from(1) }],
            source: ModeSource::ConstantOnly,
        }
    }
}

fn sphere_mode(d: u64, l: u64) -> Mode {
    let multiplicity = if l >= 2 { choose(l + d, d) - choose(l + d - 2, d) } else { choose(l + d, d) };
    let multiplicity = if l == 0 { Integer::from(1) } else { multiplicity };
    Mode { eigenvalue: Rational::from_integer(Integer::from(l) * (l + d - 1)), multiplicity }
}

/// Spherical harmonics on the unit `S^d`: eigenvalue `l (l + d - 1)` with
/// multiplicity `C(l+d, d) - C(l+d-2, d)`, for `l = 0..=l_max`.
pub fn sphere_modes(d: u64, l_max: u64) -> Result<ModeList> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("sphere dimension must be >= 2, got {d}")));
    }
    Ok(ModeList {
        entries: (0..=l_max).map(|l| sphere_mode(d, l)).collect(),
        source: ModeSource::Sphere { dim: d, l_max },
    })
}

/// Sphere modes extended until some eigenvalue exceeds `threshold`, but never
/// past `l_cap`. The flag reports whether the cap was hit first.
pub fn sphere_modes_covering(d: u64, threshold: &Rational, l_cap: u64) -> Result<(ModeList, bool)> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("sphere dimension must be >= 2, got {d}")));
    }
    let mut l = 0u64;
    while &sphere_mode(d, l).eigenvalue <= threshold {
        if l == l_cap {
            return Ok((sphere_modes(d, l_cap)?, true));
        }
        l += 1;
    }
    Ok((sphere_modes(d, l)?, false))
}

/// `ln` of the Weyl count `omega_d vol lambda^{d/2} / (2 pi)^d`.
fn ln_weyl(d: u64, ln_volume: f64, lambda: f64) -> f64 {
    let half = d as f64 / 2.0;
    let ln_ball = half * std::f64::consts::PI.ln() - ln_gamma(half + 1.0);
    ln_ball + ln_volume + half * lambda.ln() - d as f64 * std::f64::consts::TAU.ln()
}

/// `floor(exp(x))` as an integer; approximate once it exceeds 2^53.
fn floor_exp(x: f64) -> Integer {
    if x < 0.0 {
        return Integer::zero();
    }
    let log2 = x / std::f64::consts::LN_2;
    if log2 < 52.0 {
        return Integer::from(x.exp().floor() as u64);
    }
    let shift = log2.floor() as u64 - 52;
    let mantissa = (log2 - shift as f64).exp2().floor() as u64;
    Integer::from(mantissa) << shift
}

fn ln_rational(r: &Rational) -> f64 {
    // ln(p) - ln(q) via bit lengths to survive huge numerators
    fn ln_int(v: &Integer) -> f64 {
        let bits = v.bits();
        if bits <= 1000 {
            v.to_f64().unwrap().ln()
        } else {
            let shift = bits - 64;
            (v >> shift as usize).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
        }
    }
    ln_int(r.numer()) - ln_int(r.denom())
}

/// Synthetic spectrum following the Weyl law `N(lambda) ~ omega_d vol lambda^{d/2} / (2 pi)^d`,
/// binned into unit eigenvalue buckets up to `lambda_max`, plus the constant mode.
pub fn weyl_modes(d: u64, volume: &Rational, lambda_max: &Rational) -> Result<ModeList> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("Weyl dimension must be >= 2, got {d}")));
    }
    if !volume.is_positive() {
        return Err(Error::InvalidArgument(format!("volume must be positive, got {volume}")));
    }
    if !lambda_max.is_positive() {
        return Err(Error::InvalidArgument(format!("lambda_max must be positive, got {lambda_max}")));
    }
    let ln_volume = ln_rational(volume);
    let top = lambda_max.numer() / lambda_max.denom();
    let top = top.to_u64().ok_or_else(|| Error::InvalidArgument("lambda_max too large".into()))?;
    let mut entries = vec![Mode { eigenvalue: Rational::zero(), multiplicity: Integer::from(1) }];
    let mut prev = Integer::zero();
    for bucket in 1..=top {
        let cum = floor_exp(ln_weyl(d, ln_volume, bucket as f64));
        let cum = if cum < prev { prev.clone() } else { cum };
        let count = &cum - &prev;
        if !count.is_zero() {
            entries.push(Mode { eigenvalue: Rational::from(bucket as i64), multiplicity: count });
        }
        prev = cum;
    }
    Ok(ModeList {
        entries,
        source: ModeSource::Weyl { dim: d, volume: volume.clone(), lambda_max: lambda_max.clone() },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexEstimate {
    pub model: String,
    pub geometry: BoundaryGeometry,
    pub kappa: Rational,
    /// `7 H4(kappa) / s3(kappa)`.
    pub threshold: Rational,
    /// Multiplicity of eigenvalues strictly below the threshold.
    #[serde(with = "integer_text")]
    pub count: Integer,
    /// Multiplicity of eigenvalues equal to the threshold (degenerate; not counted).
    #[serde(with = "integer_text")]
    pub ties: Integer,
    /// The mode list ends below the threshold, so `count` may be short.
    pub truncated: bool,
    /// Mode multiplicities came from the Weyl estimate.
    pub estimate: bool,
}

/// `H4` and the closed-factor `S3` entry for one boundary geometry.
#[derive(Debug, Clone)]
pub struct IndexModel {
    pub geometry: BoundaryGeometry,
    pub n: u64,
    pub m: u64,
    pub h4: KappaPoly,
    pub s3: BlockPolys,
}

impl IndexModel {
    pub fn new(geometry: BoundaryGeometry, n: u64, m: u64) -> Result<Self> {
        Ok(IndexModel {
            geometry,
            n,
            m,
            h4: boundary::h4_polynomial(geometry, n, m)?,
            s3: boundary::s3_polynomial_blocks(geometry, n, m)?,
        })
    }

    /// Dimension of the closed factor whose Laplacian enters the model.
    pub fn closed_dim(&self) -> u64 {
        match self.geometry {
            BoundaryGeometry::Cap => self.m,
            BoundaryGeometry::Ball => self.n,
        }
    }

    pub fn threshold(&self, kappa: &Rational) -> Result<Rational> {
        if !kappa.is_positive() {
            return Err(Error::NonPositiveKappa(kappa.to_string()));
        }
        let s3 = self.s3.closed().eval(kappa);
        if s3.is_zero() {
            return Err(Error::VanishingS3(kappa.to_string()));
        }
        Ok(Rational::from(7) * self.h4.eval(kappa) / s3)
    }

    /// Limit of `threshold(kappa) / kappa^2` as `kappa` grows: the ratio of
    /// leading coefficients.
    pub fn leading_ratio(&self) -> Result<Rational> {
        let (dh, ch) = self.h4.leading().ok_or_else(|| Error::InvalidArgument("H4 vanishes".into()))?;
        let (ds, cs) = self.s3.closed().leading().ok_or_else(|| Error::VanishingS3("all kappa".into()))?;
        if dh != ds + 2 {
            return Err(Error::InvalidArgument(format!("unexpected leading degrees {dh} and {ds}")));
        }
        Ok(Rational::from(7) * ch / cs)
    }

    pub fn index(&self, kappa: &Rational, modes: &ModeList) -> Result<IndexEstimate> {
        let threshold = self.threshold(kappa)?;
        let mut count = Integer::zero();
        let mut ties = Integer::zero();
        for mode in &modes.entries {
            match mode.eigenvalue.cmp(&threshold) {
                std::cmp::Ordering::Less => count += &mode.multiplicity,
                std::cmp::Ordering::Equal => ties += &mode.multiplicity,
                std::cmp::Ordering::Greater => {}
            }
        }
        Ok(IndexEstimate {
            model: MODEL_TAG.to_string(),
            geometry: self.geometry,
            kappa: kappa.clone(),
            truncated: modes.largest() < &threshold,
            estimate: modes.is_estimate(),
            threshold,
            count,
            ties,
        })
    }

    /// Index against exact spherical harmonics, extending the mode list past
    /// the threshold (up to `l_cap`). Only meaningful when the closed factor
    /// is a round sphere, i.e. for the ball geometry.
    pub fn index_on_sphere(&self, kappa: &Rational, l_cap: u64) -> Result<(IndexEstimate, ModeList)> {
        let threshold = self.threshold(kappa)?;
        let (modes, _) = sphere_modes_covering(self.closed_dim(), &threshold, l_cap)?;
        Ok((self.index(kappa, &modes)?, modes))
    }
}

pub fn model_index(g: BoundaryGeometry, n: u64, m: u64, kappa: &Rational, modes: &ModeList) -> Result<IndexEstimate> {
    IndexModel::new(g, n, m)?.index(kappa, modes)
}
