use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Polynomial with rational coefficients, ascending degree, trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Converts to an integer polynomial when every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::from_coeffs)
    }

    /// Clears denominators: returns `(p, d)` with `self = p / d`, `d > 0`.
    pub fn clear_denominators(&self) -> (IntPolynomial, BigInt) {
        let d = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let p = self.coeffs.iter().map(|c| (c * BigRational::from_integer(d.clone())).to_integer()).collect();
        (IntPolynomial::from_coeffs(p), d)
    }
}

impl From<&IntPolynomial> for RationalPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        RationalPolynomial::from_coeffs(p.coeffs().iter().cloned().map(BigRational::from_integer).collect())
    }
}

/// Newton divided-difference interpolation through `(x_i, y_i)`, exact over the rationals.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<RationalPolynomial> {
    let mut seen = HashSet::new();
    for (x, _) in points {
        if !seen.insert(x.clone()) {
            return Err(Error::InvalidInput(format!("duplicate interpolation abscissa {x}")));
        }
    }
    let n = points.len();
    let xs: Vec<&BigRational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner-style expansion of the Newton form.
    let mut acc: Vec<BigRational> = Vec::new();
    for i in (0..n).rev() {
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * xs[i];
        }
        next[0] += &table[i];
        acc = next;
    }
    Ok(RationalPolynomial::from_coeffs(acc))
}

/// Interpolates integer samples; fails if the interpolant is not integral.
pub fn interpolate_integer(points: &[(BigInt, BigInt)]) -> Result<IntPolynomial> {
    let rational: Vec<(BigRational, BigRational)> = points
        .iter()
        .map(|(x, y)| (BigRational::from_integer(x.clone()), BigRational::from_integer(y.clone())))
        .collect();
    interpolate(&rational)?
        .to_integer()
        .ok_or_else(|| Error::Internal("interpolant has non-integral coefficients".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn four_point_fit() {
        let pts: Vec<_> = [(0, 0), (1, -1), (2, 0), (-1, 3)].iter().map(|&(x, y)| (q(x), q(y))).collect();
        let f = interpolate(&pts).unwrap();
        // The cubic coefficient vanishes: the data lie on x^2 - 2x.
        assert_eq!(f.to_integer().unwrap(), IntPolynomial::from_i64(&[0, -2, 1]));
        for (x, y) in &pts {
            assert_eq!(&f.eval(x), y);
        }
    }

    #[test]
    fn duplicate_abscissa_rejected() {
        let pts = vec![(q(1), q(2)), (q(1), q(3))];
        assert!(matches!(interpolate(&pts), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn rational_interpolant_detected() {
        let pts = vec![(BigInt::from(0), BigInt::from(0)), (BigInt::from(2), BigInt::from(1))];
        assert!(interpolate_integer(&pts).is_err());
        let r = interpolate(&[(q(0), q(0)), (q(2), q(1))]).unwrap();
        let (p, d) = r.clear_denominators();
        assert_eq!((p, d), (IntPolynomial::from_i64(&[0, 1]), BigInt::from(2)));
    }
}
