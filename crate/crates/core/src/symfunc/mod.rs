//! Elementary symmetric functions, Newton tensors and their two-argument
//! polarizations for block-diagonal (simultaneously diagonalized) matrices.
//!
//! A matrix is described by its blocks: an eigenvalue repeated
//! `multiplicity` times, tagged with a label naming the geometric factor it
//! comes from. Blocks with equal values are never merged.
//!
//! Everything here is evaluated through generating functions over blocks:
//! `sigma_k` is the `t^k` coefficient of `prod_b (1 + v_b t)^{mult_b}`, and
//! the polarization `sigma_{k,l}(B, C)` is
//! `l! (k-l)! / k!` times the `x^l y^{k-l}` coefficient of
//! `prod_b (1 + B_b x + C_b y)^{mult_b}`. The [`oracle`] module holds the
//! literal ordered-tuple sums these are checked against.

pub mod oracle;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{choose, factorial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub value: Rational,
    pub multiplicity: u64,
    pub label: String,
}

/// Eigenvalue multiset of a diagonal matrix, grouped into labeled blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    blocks: Vec<Block>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairedBlock {
    pub b_value: Rational,
    pub c_value: Rational,
    pub multiplicity: u64,
    pub label: String,
}

/// Two simultaneously diagonal matrices `(B, C)` sharing one block structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairedSpectrum {
    blocks: Vec<PairedBlock>,
}

fn check_structure<'a>(shape: impl Iterator<Item = (u64, &'a str)>) -> Result<u64> {
    let mut labels: Vec<&str> = Vec::new();
    let mut dim = 0u64;
    for (mult, label) in shape {
        if mult == 0 {
            return Err(Error::InvalidSpectrum(format!("block {label:?} has multiplicity 0")));
        }
        if labels.contains(&label) {
            return Err(Error::InvalidSpectrum(format!("duplicate block label {label:?}")));
        }
        labels.push(label);
        dim = dim.checked_add(mult).ok_or_else(|| Error::InvalidSpectrum("dimension overflows u64".into()))?;
    }
    if dim == 0 {
        return Err(Error::InvalidSpectrum("empty spectrum".into()));
    }
    Ok(dim)
}

impl Spectrum {
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        check_structure(blocks.iter().map(|b| (b.multiplicity, b.label.as_str())))?;
        Ok(Spectrum { blocks })
    }

    /// Convenience constructor from `(value, multiplicity, label)` triples.
    pub fn from_triples<L: Into<String>>(triples: impl IntoIterator<Item = (Rational, u64, L)>) -> Result<Self> {
        Self::new(
            triples
                .into_iter()
                .map(|(value, multiplicity, label)| Block { value, multiplicity, label: label.into() })
                .collect(),
        )
    }

    /// Unlabeled `(value, multiplicity)` pairs; blocks are labeled `b0, b1, ...`.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Rational, u64)>) -> Result<Self> {
        Self::from_triples(pairs.into_iter().enumerate().map(|(i, (v, m))| (v, m, format!("b{i}"))))
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn dim(&self) -> u64 {
        self.blocks.iter().map(|b| b.multiplicity).sum()
    }

    /// The same spectrum with one eigenvalue deleted from block `index`.
    /// Returns `None` when that leaves nothing.
    pub fn remove_one(&self, index: usize) -> Option<Spectrum> {
        let blocks: Vec<Block> = self
            .blocks
            .iter()
            .enumerate()
            .filter_map(|(i, b)| {
                let mult = if i == index { b.multiplicity - 1 } else { b.multiplicity };
                (mult > 0).then(|| Block { multiplicity: mult, ..b.clone() })
            })
            .collect();
        (!blocks.is_empty()).then_some(Spectrum { blocks })
    }

    /// Pairs each block with itself, `(B, B)`.
    pub fn diagonal_pair(&self) -> PairedSpectrum {
        PairedSpectrum {
            blocks: self
                .blocks
                .iter()
                .map(|b| PairedBlock {
                    b_value: b.value.clone(),
                    c_value: b.value.clone(),
                    multiplicity: b.multiplicity,
                    label: b.label.clone(),
                })
                .collect(),
        }
    }
}

impl PairedSpectrum {
    pub fn new(blocks: Vec<PairedBlock>) -> Result<Self> {
        check_structure(blocks.iter().map(|b| (b.multiplicity, b.label.as_str())))?;
        Ok(PairedSpectrum { blocks })
    }

    pub fn from_tuples<L: Into<String>>(
        tuples: impl IntoIterator<Item = (Rational, Rational, u64, L)>,
    ) -> Result<Self> {
        Self::new(
            tuples
                .into_iter()
                .map(|(b_value, c_value, multiplicity, label)| PairedBlock {
                    b_value,
                    c_value,
                    multiplicity,
                    label: label.into(),
                })
                .collect(),
        )
    }

    pub fn blocks(&self) -> &[PairedBlock] {
        &self.blocks
    }

    pub fn dim(&self) -> u64 {
        self.blocks.iter().map(|b| b.multiplicity).sum()
    }

    pub fn remove_one(&self, index: usize) -> Option<PairedSpectrum> {
        let blocks: Vec<PairedBlock> = self
            .blocks
            .iter()
            .enumerate()
            .filter_map(|(i, b)| {
                let mult = if i == index { b.multiplicity - 1 } else { b.multiplicity };
                (mult > 0).then(|| PairedBlock { multiplicity: mult, ..b.clone() })
            })
            .collect();
        (!blocks.is_empty()).then_some(PairedSpectrum { blocks })
    }

    /// The `B` half as a plain spectrum.
    pub fn b_spectrum(&self) -> Spectrum {
        Spectrum {
            blocks: self
                .blocks
                .iter()
                .map(|b| Block { value: b.b_value.clone(), multiplicity: b.multiplicity, label: b.label.clone() })
                .collect(),
        }
    }

    /// Multiplies every `C` entry by `factor`.
    pub fn scale_c(&self, factor: &Rational) -> PairedSpectrum {
        PairedSpectrum {
            blocks: self.blocks.iter().map(|b| PairedBlock { c_value: &b.c_value * factor, ..b.clone() }).collect(),
        }
    }
}

/// One scalar per block, in the block order of the spectrum it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockValues(pub Vec<(String, Rational)>);

impl BlockValues {
    pub fn get(&self, label: &str) -> Option<&Rational> {
        self.0.iter().find(|(l, _)| l == label).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.0.iter().map(|(l, v)| (l.as_str(), v))
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(l, _)| l.as_str())
    }

    pub fn all_positive(&self) -> bool {
        self.0.iter().all(|(_, v)| v.is_positive())
    }
}

/// Position of a spectrum relative to the Garding cone `Gamma_k^+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ConeVerdict {
    Interior,
    /// All of `sigma_1..sigma_k` are `>= 0` and `first_nonpositive` is the first that vanishes.
    ClosureBoundary {
        first_nonpositive: usize,
    },
    /// Some `sigma_j < 0`; `first_nonpositive` is the first `j` with `sigma_j <= 0`.
    Outside {
        first_nonpositive: usize,
    },
}

impl ConeVerdict {
    pub fn in_closure(&self) -> bool {
        !matches!(self, ConeVerdict::Outside { .. })
    }

    pub fn witness(&self) -> Option<usize> {
        match *self {
            ConeVerdict::Interior => None,
            ConeVerdict::ClosureBoundary { first_nonpositive } | ConeVerdict::Outside { first_nonpositive } => {
                Some(first_nonpositive)
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ConeVerdict::Interior => "interior",
            ConeVerdict::ClosureBoundary { .. } => "closure_boundary",
            ConeVerdict::Outside { .. } => "outside",
        }
    }

    /// Classifies a profile `sigma_1, ..., sigma_k`.
    pub fn classify(values: &[Rational]) -> ConeVerdict {
        let first_nonpositive = values.iter().position(|v| !v.is_positive()).map(|i| i + 1);
        match first_nonpositive {
            None => ConeVerdict::Interior,
            Some(j) if values.iter().any(Rational::is_negative) => ConeVerdict::Outside { first_nonpositive: j },
            Some(j) => ConeVerdict::ClosureBoundary { first_nonpositive: j },
        }
    }
}

/// `[1, v, v^2, ..., v^n]`
fn powers(value: &Rational, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::one());
    for i in 0..n {
        let next = &out[i] * value;
        out.push(next);
    }
    out
}

/// `[sigma_0, ..., sigma_k]` of the spectrum.
pub fn sigma_all(s: &Spectrum, k: usize) -> Vec<Rational> {
    let mut coeffs = vec![Rational::zero(); k + 1];
    coeffs[0] = Rational::one();
    let mut used = 0usize;
    for block in &s.blocks {
        let take = usize::try_from(block.multiplicity).unwrap_or(usize::MAX).min(k);
        let pw = powers(&block.value, take);
        let weights: Vec<Rational> =
            (0..=take).map(|a| Rational::from_integer(choose(block.multiplicity, a as u64)) * &pw[a]).collect();
        used = (used + take).min(k);
        // in-place convolution, high degrees first
        for t in (1..=used).rev() {
            let mut acc = Rational::zero();
            for a in 1..=take.min(t) {
                if !coeffs[t - a].is_zero() {
                    acc += &coeffs[t - a] * &weights[a];
                }
            }
            coeffs[t] += acc;
        }
    }
    coeffs
}

/// `sigma_k` of the eigenvalue multiset; `sigma_0 = 1` and `sigma_k = 0` for `k > dim`.
pub fn sigma(s: &Spectrum, k: usize) -> Rational {
    if k as u64 > s.dim() {
        return Rational::zero();
    }
    sigma_all(s, k).pop().unwrap()
}

/// Diagonal entries of the Newton tensor `T_k`, one per block:
/// `sigma_k` of the spectrum with one eigenvalue of that block removed.
pub fn newton_diag(s: &Spectrum, k: usize) -> BlockValues {
    BlockValues(
        s.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let entry = match s.remove_one(i) {
                    Some(rest) => sigma(&rest, k),
                    None if k == 0 => Rational::one(),
                    None => Rational::zero(),
                };
                (b.label.clone(), entry)
            })
            .collect(),
    )
}

/// Polarized `sigma_{k,l}(B, C)`: `sigma_k` evaluated on `l` copies of `B`
/// and `k - l` copies of `C`.
pub fn sigma_pol(p: &PairedSpectrum, k: usize, l: usize) -> Result<Rational> {
    if l > k {
        return Err(Error::InvalidArgument(format!("polarization index l = {l} exceeds k = {k}")));
    }
    if k as u64 > p.dim() {
        return Ok(Rational::zero());
    }
    let kc = k - l;
    // grid[a][c] is the x^a y^c coefficient of prod_b (1 + B_b x + C_b y)^{mult_b}
    let mut grid = vec![vec![Rational::zero(); kc + 1]; l + 1];
    grid[0][0] = Rational::one();
    for block in &p.blocks {
        let mult = block.multiplicity;
        let pb = powers(&block.b_value, l);
        let pc = powers(&block.c_value, kc);
        let mut next = vec![vec![Rational::zero(); kc + 1]; l + 1];
        for a in 0..=l {
            for c in 0..=kc {
                if (a + c) as u64 > mult {
                    continue;
                }
                let w = Rational::from_integer(choose(mult, a as u64) * choose(mult - a as u64, c as u64))
                    * &pb[a]
                    * &pc[c];
                if w.is_zero() {
                    continue;
                }
                for a0 in 0..=l - a {
                    for c0 in 0..=kc - c {
                        if !grid[a0][c0].is_zero() {
                            next[a0 + a][c0 + c] += &grid[a0][c0] * &w;
                        }
                    }
                }
            }
        }
        grid = next;
    }
    let norm = Rational::new(factorial(l as i64)? * factorial(kc as i64)?, factorial(k as i64)?)?;
    Ok(&grid[l][kc] * &norm)
}

/// Diagonal entries of the polarized Newton tensor `T_{k,l}(B, C)`, one per block.
pub fn newton_pol_diag(p: &PairedSpectrum, k: usize, l: usize) -> Result<BlockValues> {
    if l > k {
        return Err(Error::InvalidArgument(format!("polarization index l = {l} exceeds k = {k}")));
    }
    let entries = p
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let entry = match p.remove_one(i) {
                Some(rest) => sigma_pol(&rest, k, l)?,
                None if k == 0 => Rational::one(),
                None => Rational::zero(),
            };
            Ok((b.label.clone(), entry))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BlockValues(entries))
}

/// Membership of the spectrum in `Gamma_k^+` or its closure.
pub fn cone_membership(s: &Spectrum, k: usize) -> Result<ConeVerdict> {
    if k == 0 || k as u64 > s.dim() {
        return Err(Error::InvalidArgument(format!("cone index k = {k} must lie in 1..={}", s.dim())));
    }
    let values = sigma_all(s, k);
    Ok(ConeVerdict::classify(&values[1..]))
}
