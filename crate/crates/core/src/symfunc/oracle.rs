//! Brute-force reference evaluations by literal index enumeration.
//!
//! These never touch the block generating functions and exist to certify
//! them. Cost is factorial in the dimension, hence the hard size limit.

use crate::error::{Error, Result};
use crate::exact::{factorial, Rational};

use super::{BlockValues, PairedSpectrum, Spectrum};

pub const MAX_ORACLE_DIM: u64 = 12;

fn guard(dim: u64) -> Result<()> {
    if dim > MAX_ORACLE_DIM {
        return Err(Error::OracleTooLarge { dim, limit: MAX_ORACLE_DIM });
    }
    Ok(())
}

/// One `(B_i, C_i)` pair per index.
fn expand(p: &PairedSpectrum) -> Vec<(Rational, Rational)> {
    p.blocks()
        .iter()
        .flat_map(|b| std::iter::repeat_n((b.b_value.clone(), b.c_value.clone()), b.multiplicity as usize))
        .collect()
}

/// Sum over ordered tuples of `k` distinct indices not in `excluded`, of
/// `B(i_1)...B(i_l) C(i_{l+1})...C(i_k)`.
fn ordered_tuple_sum(entries: &[(Rational, Rational)], k: usize, l: usize, excluded: Option<usize>) -> Rational {
    fn go(
        entries: &[(Rational, Rational)],
        k: usize,
        l: usize,
        depth: usize,
        used: &mut Vec<bool>,
        partial: Rational,
        total: &mut Rational,
    ) {
        if depth == k {
            *total += partial;
            return;
        }
        for i in 0..entries.len() {
            if used[i] {
                continue;
            }
            let factor = if depth < l { &entries[i].0 } else { &entries[i].1 };
            used[i] = true;
            go(entries, k, l, depth + 1, used, &partial * factor, total);
            used[i] = false;
        }
    }
    let mut used = vec![false; entries.len()];
    if let Some(i) = excluded {
        used[i] = true;
    }
    let mut total = Rational::zero();
    go(entries, k, l, 0, &mut used, Rational::one(), &mut total);
    total
}

/// `(1/k!)` times the ordered-tuple sum defining `sigma_{k,l}(B, C)`.
pub fn oracle_sigma_pol(p: &PairedSpectrum, k: usize, l: usize) -> Result<Rational> {
    guard(p.dim())?;
    if l > k {
        return Err(Error::InvalidArgument(format!("polarization index l = {l} exceeds k = {k}")));
    }
    let entries = expand(p);
    let sum = ordered_tuple_sum(&entries, k, l, None);
    Ok(sum / Rational::from_integer(factorial(k as i64)?))
}

/// Ordered-tuple analogue of `newton_pol_diag`: for each block, the sum over
/// tuples avoiding one fixed index of that block.
pub fn oracle_newton_pol_diag(p: &PairedSpectrum, k: usize, l: usize) -> Result<BlockValues> {
    guard(p.dim())?;
    if l > k {
        return Err(Error::InvalidArgument(format!("polarization index l = {l} exceeds k = {k}")));
    }
    let entries = expand(p);
    let norm = Rational::from_integer(factorial(k as i64)?);
    let mut offset = 0usize;
    let mut out = Vec::with_capacity(p.blocks().len());
    for block in p.blocks() {
        let sum = ordered_tuple_sum(&entries, k, l, Some(offset));
        out.push((block.label.clone(), sum / &norm));
        offset += block.multiplicity as usize;
    }
    Ok(BlockValues(out))
}

/// `sigma_k` as a sum over `k`-subsets of eigenvalues.
pub fn oracle_sigma(s: &Spectrum, k: usize) -> Result<Rational> {
    if s.dim() > 20 {
        return Err(Error::OracleTooLarge { dim: s.dim(), limit: 20 });
    }
    let values: Vec<Rational> =
        s.blocks().iter().flat_map(|b| std::iter::repeat_n(b.value.clone(), b.multiplicity as usize)).collect();
    let d = values.len();
    let mut total = Rational::zero();
    for mask in 0u32..(1u32 << d) {
        if mask.count_ones() as usize == k {
            total += (0..d).filter(|i| mask & (1 << i) != 0).map(|i| values[i].clone()).product::<Rational>();
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::ratio(p, d)
    }

    #[test]
    fn refuses_large_inputs() {
        let p = PairedSpectrum::from_tuples([(q(1, 1), q(1, 1), 13, "a")]).unwrap();
        assert_eq!(oracle_sigma_pol(&p, 2, 1), Err(Error::OracleTooLarge { dim: 13, limit: 12 }));
    }

    #[test]
    fn k_beyond_dimension_is_zero() {
        let p = PairedSpectrum::from_tuples([(q(1, 1), q(2, 1), 2, "a"), (q(3, 1), q(-1, 1), 1, "b")]).unwrap();
        assert_eq!(oracle_sigma_pol(&p, 4, 2).unwrap(), Rational::zero());
    }

    #[test]
    fn all_b_factors_give_sigma_of_b() {
        let p = PairedSpectrum::from_tuples([(q(1, 2), q(7, 1), 2, "a"), (q(-3, 1), q(5, 3), 2, "b")]).unwrap();
        // sigma_2 of {1/2, 1/2, -3, -3}: one (1/2)^2 pair, four cross pairs, one (-3)^2 pair
        let expected = q(1, 4) + q(-3, 2) * q(4, 1) + q(9, 1);
        assert_eq!(oracle_sigma_pol(&p, 2, 2).unwrap(), expected);
        assert_eq!(oracle_sigma(&p.b_spectrum(), 2).unwrap(), expected);
    }
}
