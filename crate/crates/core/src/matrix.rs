//! Dense matrices over arbitrary-precision integers.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixInt {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl MatrixInt {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixInt { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        MatrixInt { rows, cols, data: vec![BigInt::one(); rows * cols] }
    }

    /// The all-ones column vector of length `n`.
    pub fn ones_column(n: usize) -> Self {
        Self::ones(n, 1)
    }

    /// Unit column vector `e_i` of length `n`.
    pub fn unit_column(n: usize, i: usize) -> Self {
        let mut m = Self::zeros(n, 1);
        m[(i, 0)] = BigInt::one();
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        MatrixInt { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(Self::from_fn(r, c, |i, j| BigInt::from(rows[i][j])))
    }

    pub fn diagonal(values: &[BigInt]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    /// Returns `Some(t)` when every row sums to the same constant `t`.
    pub fn constant_row_sum(&self) -> Option<BigInt> {
        let sums = self.row_sums();
        let first = sums.first()?.clone();
        sums.iter().all(|s| *s == first).then_some(first)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        MatrixInt { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn checked_mul(&self, other: &MatrixInt) -> Result<MatrixInt> {
        if self.cols != other.rows {
            return Err(Error::InvalidInput(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = MatrixInt::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[base + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product: the block matrix `(a_ij * B)`.
    pub fn kronecker(&self, other: &MatrixInt) -> MatrixInt {
        let (p, q) = (other.rows, other.cols);
        MatrixInt::from_fn(self.rows * p, self.cols * q, |i, j| {
            &self[(i / p, j / q)] * &other[(i % p, j % q)]
        })
    }

    /// Determinant via fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
        }
        Ok(bareiss_determinant(self.data.clone(), self.rows))
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }

    pub fn max_abs_row_sum(&self) -> BigInt {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<BigInt>())
            .max()
            .unwrap_or_default()
    }
}

/// Bareiss elimination on a row-major square buffer.
pub(crate) fn bareiss_determinant(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, swap * n + j);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let aik = a[i * n + k].clone();
            for j in k + 1..n {
                let v = (&pivot * &a[i * n + j] - &aik * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    sign * &a[n * n - 1]
}

impl Index<(usize, usize)> for MatrixInt {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for MatrixInt {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Add<&'a MatrixInt> for &'a MatrixInt {
    type Output = MatrixInt;
    fn add(self, rhs: &MatrixInt) -> MatrixInt {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        MatrixInt {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a MatrixInt> for &'a MatrixInt {
    type Output = MatrixInt;
    fn sub(self, rhs: &MatrixInt) -> MatrixInt {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        MatrixInt {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a MatrixInt> for &'a MatrixInt {
    type Output = MatrixInt;
    fn mul(self, rhs: &MatrixInt) -> MatrixInt {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl Neg for &MatrixInt {
    type Output = MatrixInt;
    fn neg(self) -> MatrixInt {
        MatrixInt { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for MatrixInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixInt {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> MatrixInt {
        MatrixInt::from_rows(rows).unwrap()
    }

    #[test]
    fn kronecker_identity_scalar() {
        let k = MatrixInt::identity(2).kronecker(&m(&[vec![5]]));
        assert_eq!(k, m(&[vec![5, 0], vec![0, 5]]));
    }

    #[test]
    fn kronecker_ones_columns() {
        let k = MatrixInt::ones_column(2).kronecker(&MatrixInt::ones_column(3));
        assert_eq!(k, MatrixInt::ones_column(6));
    }

    #[test]
    fn kronecker_mixed_product() {
        let a = m(&[vec![1, 2], vec![0, -1]]);
        let b = m(&[vec![3, 1, 0]]);
        let c = m(&[vec![2], vec![1]]);
        let d = m(&[vec![1], vec![-2], vec![4]]);
        let lhs = &a.kronecker(&b) * &c.kronecker(&d);
        let rhs = (&a * &c).kronecker(&(&b * &d));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bareiss_matches_hand_values() {
        assert_eq!(m(&[vec![2, 1], vec![1, 3]]).determinant().unwrap(), BigInt::from(5));
        let z = m(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        assert_eq!(z.determinant().unwrap(), BigInt::from(-2));
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).determinant().unwrap(), BigInt::zero());
        assert_eq!(MatrixInt::zeros(0, 0).determinant().unwrap(), BigInt::one());
    }

    #[test]
    fn non_square_determinant_fails() {
        assert!(MatrixInt::zeros(2, 3).determinant().is_err());
    }
}
