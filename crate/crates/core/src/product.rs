//! Interior geometry of `S^n x H^m` with sectional curvatures `+1` and `-1`.
//!
//! With this normalization the raised Schouten tensor is `+1/2` on the
//! sphere directions and `-1/2` on the hyperbolic ones.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::symfunc::{self, BlockValues, ConeVerdict, Spectrum};

pub const SPHERE: &str = "sphere";
pub const HYPERBOLIC: &str = "hyperbolic";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProductDims {
    pub n_sphere: u64,
    pub m_hyperbolic: u64,
}

impl ProductDims {
    pub fn new(n_sphere: u64, m_hyperbolic: u64) -> Result<Self> {
        if n_sphere == 0 || m_hyperbolic == 0 {
            return Err(Error::InvalidArgument(format!(
                "factor dimensions must be positive, got n = {n_sphere}, m = {m_hyperbolic}"
            )));
        }
        Ok(ProductDims { n_sphere, m_hyperbolic })
    }

    pub fn dim(&self) -> u64 {
        self.n_sphere + self.m_hyperbolic
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaProfile {
    /// `sigma_1, ..., sigma_kmax`
    pub values: Vec<Rational>,
    pub verdict: ConeVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonT3 {
    pub values: BlockValues,
    pub positive: bool,
}

/// Eigenvalues of `g^{-1} P`: `+1/2` with multiplicity `n`, `-1/2` with multiplicity `m`.
pub fn schouten_spectrum(d: ProductDims) -> Spectrum {
    Spectrum::from_triples([(Rational::half(), d.n_sphere, SPHERE), (-Rational::half(), d.m_hyperbolic, HYPERBOLIC)])
        .expect("positive dimensions and distinct labels")
}

pub fn sigma_profile(d: ProductDims, kmax: usize) -> Result<SigmaProfile> {
    if kmax == 0 || kmax as u64 > d.dim() {
        return Err(Error::InvalidArgument(format!("kmax = {kmax} must lie in 1..={}", d.dim())));
    }
    let mut values = symfunc::sigma_all(&schouten_spectrum(d), kmax);
    values.remove(0);
    let verdict = ConeVerdict::classify(&values);
    Ok(SigmaProfile { values, verdict })
}

pub fn newton_t3(d: ProductDims) -> Result<NewtonT3> {
    if d.dim() < 4 {
        return Err(Error::InvalidArgument(format!("T3 needs dimension >= 4, got {}", d.dim())));
    }
    let values = symfunc::newton_diag(&schouten_spectrum(d), 3);
    let positive = values.all_positive();
    Ok(NewtonT3 { values, positive })
}
