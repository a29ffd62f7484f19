//! Cyclic Jacobi eigensolver for real symmetric matrices, used as the
//! numeric oracle.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectrum::SpectrumMultiset;

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_CONVERGENCE: f64 = 1e-12;
pub const DEFAULT_MAX_SWEEPS: usize = 100;
pub const MAX_ORDER: usize = 200;

/// Eigenvalues in ascending order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericSpectrum {
    values: Vec<f64>,
}

impl NumericSpectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        NumericSpectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// Number of values within `tol` of `target`.
    pub fn count_near(&self, target: f64, tol: f64) -> usize {
        self.values.iter().filter(|v| (*v - target).abs() <= tol).count()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm falls below this.
    pub convergence: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        JacobiOptions { convergence: DEFAULT_CONVERGENCE, max_sweeps: DEFAULT_MAX_SWEEPS }
    }
}

/// Eigen-decomposition result: ascending eigenvalues and the accumulated
/// rotations (column `j` of `vectors` belongs to `values[j]`).
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

pub fn eig_sym(m: &[Vec<f64>]) -> Result<NumericSpectrum> {
    eig_sym_with(m, JacobiOptions::default()).map(|d| NumericSpectrum { values: d.values })
}

pub fn eig_sym_with(m: &[Vec<f64>], opts: JacobiOptions) -> Result<EigenDecomposition> {
    let n = m.len();
    if n > MAX_ORDER {
        return Err(Error::SizeLimitExceeded { order: n, limit: MAX_ORDER });
    }
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput("eig_sym needs a square matrix".into()));
    }
    for i in 0..n {
        for j in i + 1..n {
            if (m[i][j] - m[j][i]).abs() > 1e-12 {
                return Err(Error::InvalidInput(format!("matrix not symmetric at ({i}, {j})")));
            }
        }
    }
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    let off = |a: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&a) >= opts.convergence {
        if sweeps == opts.max_sweeps {
            return Err(Error::Internal(format!("Jacobi did not converge in {} sweeps", opts.max_sweeps)));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    let values = order.iter().map(|&i| a[i][i]).collect();
    let vectors = (0..n).map(|r| order.iter().map(|&c| v[r][c]).collect()).collect();
    Ok(EigenDecomposition { values, vectors, sweeps })
}

/// Anything that can be flattened to an ascending list of doubles.
pub trait SortedValues {
    fn sorted_values(&self) -> Vec<f64>;
}

impl SortedValues for NumericSpectrum {
    fn sorted_values(&self) -> Vec<f64> {
        self.values.clone()
    }
}

impl SortedValues for SpectrumMultiset {
    fn sorted_values(&self) -> Vec<f64> {
        self.to_f64_sorted()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MatchOutcome {
    pub matched: bool,
    pub max_deviation: f64,
}

/// Sorted pairwise comparison; errors if the totals differ.
pub fn spectra_match(s1: &impl SortedValues, s2: &impl SortedValues, tol: f64) -> Result<MatchOutcome> {
    let a = s1.sorted_values();
    let b = s2.sorted_values();
    if a.len() != b.len() {
        return Err(Error::InvalidInput(format!("spectra of sizes {} and {}", a.len(), b.len())));
    }
    let max_deviation = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    Ok(MatchOutcome { matched: max_deviation <= tol, max_deviation })
}

/// `||Mx - λx||∞ / ||x||∞`.
pub fn residual(m: &[Vec<f64>], x: &[f64], lambda: f64) -> Result<f64> {
    if m.len() != x.len() || m.iter().any(|r| r.len() != x.len()) {
        return Err(Error::InvalidInput("dimension mismatch in residual".into()));
    }
    let norm = x.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if norm == 0.0 {
        return Err(Error::InvalidInput("residual of the zero vector".into()));
    }
    let worst = m
        .iter()
        .zip(x)
        .map(|(row, xi)| (row.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() - lambda * xi).abs())
        .fold(0.0, f64::max);
    Ok(worst / norm)
}

/// Numerical rank by Gaussian elimination with partial pivoting.
pub fn numeric_rank(vectors: &[Vec<f64>], tol: f64) -> usize {
    let mut rows: Vec<Vec<f64>> = vectors.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).max_by(|&i, &j| rows[i][c].abs().total_cmp(&rows[j][c].abs())) else {
            break;
        };
        if rows[p][c].abs() <= tol {
            continue;
        }
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            let f = rows[r][c] / rows[rank][c];
            for k in c..cols {
                rows[r][k] -= f * rows[rank][k];
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    #[test]
    fn small_examples() {
        let k2 = generate(GraphKind::Complete(2)).unwrap();
        let s = eig_sym(&k2.adjacency_matrix().to_f64()).unwrap();
        assert!((s.values()[0] + 1.0).abs() < 1e-12 && (s.values()[1] - 1.0).abs() < 1e-12);
        let c4 = generate(GraphKind::Cycle(4)).unwrap();
        let q = eig_sym(&c4.signless_laplacian().to_f64()).unwrap();
        let expected = NumericSpectrum::from_values(vec![0.0, 2.0, 2.0, 4.0]);
        assert!(spectra_match(&q, &expected, 1e-10).unwrap().matched);
        let g = c4.cartesian_product(&generate(GraphKind::Complete(3)).unwrap());
        let a = eig_sym(&g.adjacency_matrix().to_f64()).unwrap();
        assert!((a.values().last().unwrap() - 4.0).abs() < 1e-10);
    }

    #[test]
    fn tolerance_boundary() {
        let a = NumericSpectrum::from_values(vec![0.0, 2.0, 2.0, 4.0]);
        let b = NumericSpectrum::from_values(vec![0.0, 2.0, 2.0, 4.0 + 2e-9]);
        let out = spectra_match(&a, &b, 1e-9).unwrap();
        assert!(!out.matched);
        assert!((out.max_deviation - 2e-9).abs() < 1e-15);
        assert_eq!(spectra_match(&a, &a, 1e-9).unwrap(), MatchOutcome { matched: true, max_deviation: 0.0 });
        assert!(spectra_match(&a, &NumericSpectrum::from_values(vec![1.0]), 1e-9).is_err());
    }

    #[test]
    fn residual_examples() {
        let m = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        assert_eq!(residual(&m, &[1.0, 1.0], 1.0).unwrap(), 0.0);
        assert_eq!(residual(&m, &[1.0, -1.0], 1.0).unwrap(), 2.0);
        assert!(residual(&m, &[0.0, 0.0], 1.0).is_err());
    }

    #[test]
    fn rotations_stay_orthogonal() {
        let g = generate(GraphKind::Cycle(7)).unwrap();
        let d = eig_sym_with(&g.signless_laplacian().to_f64(), JacobiOptions::default()).unwrap();
        let n = d.vectors.len();
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = (0..n).map(|k| d.vectors[k][i] * d.vectors[k][j]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(eig_sym(&[vec![0.0, 1.0], vec![0.0, 0.0]]).is_err());
    }
}
