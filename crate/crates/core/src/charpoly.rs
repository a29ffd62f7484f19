//! Characteristic polynomials, the coronal of a matrix, and determinants of
//! matrices over `Q(x)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::{bareiss_determinant, MatrixInt};
use crate::poly::{interpolate_integer, IntPolynomial, RationalFunction};

/// Largest number of sample points `det_rfmatrix` will evaluate.
pub const ABSCISSA_BUDGET: usize = 8192;

/// `det(xI - M)` by Faddeev–LeVerrier over the integers.
pub fn charpoly_exact(m: &MatrixInt) -> Result<IntPolynomial> {
    if !m.is_square() {
        return Err(Error::InvalidInput(format!("charpoly of a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut acc = MatrixInt::zeros(n, n);
    for k in 1..=n {
        for i in 0..n {
            acc[(i, i)] += &c[n - k + 1];
        }
        let trace = if k == n {
            (0..n).map(|i| (0..n).map(|j| &m[(i, j)] * &acc[(j, i)]).sum::<BigInt>()).sum()
        } else {
            acc = m.checked_mul(&acc)?;
            acc.trace()
        };
        let divisor = BigInt::from(k);
        debug_assert!((&trace % &divisor).is_zero(), "Faddeev-LeVerrier division is exact");
        c[n - k] = -trace / divisor;
    }
    Ok(IntPolynomial::from_coeffs(c))
}

/// `1^T (xI - M)^{-1} 1`, reduced.
///
/// The numerator `det(xI - M) * 1^T (xI - M)^{-1} 1` has degree below the
/// order, so it is recovered by exact interpolation from linear solves at
/// integer points beyond the Gershgorin radius.
pub fn coronal(m: &MatrixInt) -> Result<RationalFunction> {
    if !m.is_square() {
        return Err(Error::InvalidInput(format!("coronal of a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    if n == 0 {
        return Err(Error::InvalidInput("coronal of an empty matrix".into()));
    }
    let radius = m.max_abs_row_sum();
    let points: Vec<BigInt> = (1..=n).map(|i| &radius + BigInt::from(i)).collect();
    let samples = points
        .par_iter()
        .map(|s| Ok((s.clone(), adjugate_sum(m, s)?)))
        .collect::<Result<Vec<_>>>()?;
    let numerator = interpolate_integer(&samples)?;
    Ok(RationalFunction::new(numerator, charpoly_exact(m)?))
}

/// `det(sI - M) * sum((sI - M)^{-1} 1)` by exact Gaussian elimination.
fn adjugate_sum(m: &MatrixInt, s: &BigInt) -> Result<BigInt> {
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..n)
                .map(|j| {
                    let diag = if i == j { s.clone() } else { BigInt::zero() };
                    BigRational::from_integer(diag - &m[(i, j)])
                })
                .collect();
            row.push(BigRational::one());
            row
        })
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Internal(format!("sI - M singular at s = {s}")))?;
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for j in col..=n {
            a[col][j] = &a[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..=n {
                    let delta = &f * &a[col][j];
                    a[r][j] -= delta;
                }
            }
        }
    }
    let total: BigRational = a.iter().map(|row| row[n].clone()).sum();
    let value = det * total;
    if !value.is_integer() {
        return Err(Error::Internal("adjugate sum is not integral".into()));
    }
    Ok(value.to_integer())
}

/// `n / (x - t)`: the coronal of any order-`n` matrix with constant row sum `t`.
pub fn coronal_constant_row_sum(n: usize, t: impl Into<BigInt>) -> Result<RationalFunction> {
    if n == 0 {
        return Err(Error::InvalidParameter("coronal needs n >= 1".into()));
    }
    Ok(RationalFunction::simple_pole(BigInt::from(n), t))
}

/// Square matrix with entries in `Q(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RfMatrix {
    n: usize,
    entries: Vec<RationalFunction>,
}

impl RfMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> RationalFunction) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        RfMatrix { n, entries }
    }

    /// `xI - M` for an integer matrix.
    pub fn x_minus(m: &MatrixInt) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::InvalidInput("x I - M needs a square matrix".into()));
        }
        Ok(Self::from_fn(m.rows(), |i, j| {
            let mut p = IntPolynomial::constant(-m[(i, j)].clone());
            if i == j {
                p = &p + &IntPolynomial::x();
            }
            RationalFunction::from_poly(p)
        }))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: RationalFunction) {
        self.entries[i * self.n + j] = value;
    }

    /// Adds `coef * pattern` entrywise, where `pattern` is an integer matrix.
    pub fn add_scaled(&mut self, coef: &RationalFunction, pattern: &MatrixInt) -> Result<()> {
        if pattern.rows() != self.n || pattern.cols() != self.n {
            return Err(Error::InvalidInput("pattern dimension mismatch".into()));
        }
        for i in 0..self.n {
            for j in 0..self.n {
                let w = &pattern[(i, j)];
                if !w.is_zero() {
                    let term = coef * &RationalFunction::constant(w.clone());
                    let e = &mut self.entries[i * self.n + j];
                    *e = &*e + &term;
                }
            }
        }
        Ok(())
    }
}

/// Exact determinant of a matrix over `Q(x)`.
///
/// Each row is scaled by the lcm of its denominators, the resulting integer
/// polynomial matrix is evaluated at `0..=D` (`D` the row-degree bound), the
/// integer determinants are interpolated, and the row factors divided back out.
pub fn det_rfmatrix(m: &RfMatrix) -> Result<RationalFunction> {
    let n = m.order();
    if n == 0 {
        return Ok(RationalFunction::one());
    }
    let mut scales = Vec::with_capacity(n);
    let mut rows: Vec<Vec<IntPolynomial>> = Vec::with_capacity(n);
    for i in 0..n {
        let row: Vec<&RationalFunction> = (0..n).map(|j| m.get(i, j)).collect();
        let l = row.iter().filter(|r| !r.is_zero()).fold(IntPolynomial::one(), |acc, r| acc.lcm(r.den()));
        let cleared = row
            .iter()
            .map(|r| {
                let factor = l.div_exact(r.den()).ok_or_else(|| Error::Internal("row lcm not divisible".into()))?;
                Ok(r.num() * &factor)
            })
            .collect::<Result<Vec<_>>>()?;
        scales.push(l);
        rows.push(cleared);
    }
    let bound: usize = rows.iter().map(|r| r.iter().filter_map(IntPolynomial::degree).max().unwrap_or(0)).sum();
    if bound + 1 > ABSCISSA_BUDGET {
        return Err(Error::Internal(format!(
            "det_rfmatrix needs {} sample points, budget is {ABSCISSA_BUDGET}",
            bound + 1
        )));
    }
    let samples = (0..=bound)
        .into_par_iter()
        .map(|k| {
            let x = BigInt::from(k);
            let flat: Vec<BigInt> = rows.iter().flat_map(|r| r.iter().map(|p| p.eval(&x))).collect();
            (x, bareiss_determinant(flat, n))
        })
        .collect::<Vec<_>>();
    let det = interpolate_integer(&samples)?;
    let den: IntPolynomial = scales.into_iter().product();
    if den.leading().is_negative() || den.is_zero() {
        return Err(Error::Internal("row scale product has a non-positive leading coefficient".into()));
    }
    Ok(RationalFunction::new(det, den))
}
