//! Sums of simple poles `Σ_i c_i / (p_i − z)`.

use std::fmt;

use num_complex::Complex64;

/// Relative distance below which two poles are merged.
const POLE_MERGE_TOL: f64 = 1e-12;

/// A rational function with simple real poles, kept in partial-fraction form.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFn {
    /// `(pole, numerator)` pairs sorted by pole.
    terms: Vec<(f64, Complex64)>,
}

impl RationalFn {
    /// Merges equal poles and drops vanishing numerators.
    pub fn new(terms: impl IntoIterator<Item = (f64, Complex64)>) -> Self {
        let mut raw: Vec<(f64, Complex64)> = terms.into_iter().collect();
        raw.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, Complex64)> = Vec::new();
        for (p, c) in raw {
            match merged.last_mut() {
                Some((q, acc)) if (p - *q).abs() <= POLE_MERGE_TOL * p.abs().max(1.0) => *acc += c,
                _ => merged.push((p, c)),
            }
        }
        let scale = merged.iter().map(|t| t.1.norm()).fold(0.0, f64::max);
        merged.retain(|t| t.1.norm() > 1e-13 * scale.max(1.0));
        Self { terms: merged }
    }

    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(f64, Complex64)] {
        &self.terms
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.terms.iter().map(|&(p, c)| c / (p - z)).sum()
    }

    /// Coefficient of `z^g` in the expansion at `z = 0`: `Σ_i c_i p_i^{−(g+1)}`.
    pub fn series_coeff(&self, g: usize) -> Complex64 {
        self.terms
            .iter()
            .map(|&(p, c)| c * p.powi(-(g as i32 + 1)))
            .sum()
    }

    pub fn max_abs_diff(&self, other: &RationalFn) -> f64 {
        // Compare on the common pole set; a pole missing on one side counts fully.
        let both = RationalFn::new(
            self.terms
                .iter()
                .copied()
                .chain(other.terms.iter().map(|&(p, c)| (p, -c))),
        );
        both.terms.iter().map(|t| t.1.norm()).fold(0.0, f64::max)
    }
}

fn fmt_complex(c: Complex64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.im.abs() < 1e-12 {
        write!(f, "{:.12}", c.re)
    } else {
        write!(f, "({:.12}{:+.12}i)", c.re, c.im)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, &(p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            fmt_complex(c, f)?;
            write!(f, "/({p:.12} - z)")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        let r = RationalFn::new([(1.0, Complex64::new(1.0, 0.0))]);
        for g in 0..5 {
            assert!((r.series_coeff(g) - 1.0).norm() < 1e-15);
        }
        let z = Complex64::new(0.3, 0.0);
        assert!((r.eval(z) - 1.0 / 0.7).norm() < 1e-14);
    }

    #[test]
    fn merges_and_cancels() {
        let one = Complex64::new(1.0, 0.0);
        let r = RationalFn::new([(2.0, one), (2.0, one), (3.0, one), (3.0, -one)]);
        assert_eq!(r.terms(), &[(2.0, Complex64::new(2.0, 0.0))]);
        assert!(RationalFn::new([(3.0, one), (3.0, -one)]).is_zero());
        assert_eq!(r.max_abs_diff(&r), 0.0);
    }
}
