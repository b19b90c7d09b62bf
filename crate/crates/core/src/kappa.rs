use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::Rational;

/// Sparse polynomial in the boundary mean-curvature parameter `kappa`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KappaPoly {
    terms: BTreeMap<u32, Rational>,
}

impl KappaPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        let mut p = Self::new();
        for (deg, c) in terms {
            p.add_term(deg, &c);
        }
        p
    }

    pub fn add_term(&mut self, degree: u32, coeff: &Rational) {
        let slot = self.terms.entry(degree).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&degree);
        }
    }

    pub fn coeff(&self, degree: u32) -> Rational {
        self.terms.get(&degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest-degree term.
    pub fn leading(&self) -> Option<(u32, &Rational)> {
        self.terms.iter().next_back().map(|(d, c)| (*d, c))
    }

    pub fn eval(&self, kappa: &Rational) -> Rational {
        self.terms.iter().map(|(d, c)| c * kappa.pow(*d)).sum()
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(Rational::is_positive)
    }
}

impl fmt::Display for KappaPoly {
    /// Highest degree first, e.g. `3/2 κ^3 - κ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (deg, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let one = mag == Rational::one();
            match (*deg, one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "κ")?,
                (1, false) => write!(f, "{mag} κ")?,
                (d, true) => write!(f, "κ^{d}")?,
                (d, false) => write!(f, "{mag} κ^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::ratio(p, d)
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = KappaPoly::from_terms([(3, q(1, 2)), (1, q(0, 1))]);
        assert_eq!(p.degrees().collect::<Vec<_>>(), vec![3]);
        p.add_term(3, &q(-1, 2));
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn eval_and_display() {
        let p = KappaPoly::from_terms([(3, q(3, 2)), (1, q(-1, 1)), (0, q(2, 1))]);
        assert_eq!(p.eval(&q(2, 1)), q(12 - 2 + 2, 1));
        assert_eq!(p.eval(&q(0, 1)), q(2, 1));
        assert_eq!(p.to_string(), "3/2 κ^3 - κ + 2");
        assert_eq!(p.leading(), Some((3, &q(3, 2))));
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"0":"2","1":"-1","3":"3/2"}"#);
        let back: KappaPoly = serde_json::from_str(r#"{"0":"2","1":"-1","3":"3/2"}"#).unwrap();
        assert_eq!(back, p);
    }
}
