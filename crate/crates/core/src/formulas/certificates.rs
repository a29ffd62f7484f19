use serde::Serialize;

use crate::eigen::{numeric_rank, residual};
use crate::error::{Error, Result};
use crate::graph::{generate, Graph, GraphKind};
use crate::pocket::PocketSpec;

/// Matrix whose eigenvectors are certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    A,
    QVertex,
    QEdge,
}

/// A vector supported on one pocket copy together with its claimed eigenvalue.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenvectorCertificate {
    pub kind: CertificateKind,
    pub copy: usize,
    pub s: usize,
    pub t: usize,
    pub eigenvalue: f64,
    pub vector: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CertificateCheck {
    pub max_residual: f64,
    pub rank: usize,
}

/// Adjacency eigenpairs of `C_p`, ascending, with the all-ones vector last.
pub fn cycle_eigenpairs(p: usize) -> Result<Vec<(f64, Vec<f64>)>> {
    if p < 3 {
        return Err(Error::InvalidParameter(format!("cycle length {p} is below 3")));
    }
    let angle = |j: usize, a: usize| 2.0 * std::f64::consts::PI * (j * a) as f64 / p as f64;
    let mut pairs = Vec::with_capacity(p);
    for j in 1..p.div_ceil(2) {
        let lambda = 2.0 * angle(j, 1).cos();
        pairs.push((lambda, (0..p).map(|a| angle(j, a).cos()).collect()));
        pairs.push((lambda, (0..p).map(|a| angle(j, a).sin()).collect()));
    }
    if p.is_multiple_of(2) {
        pairs.push((-2.0, (0..p).map(|a| if a % 2 == 0 { 1.0 } else { -1.0 }).collect()));
    }
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    pairs.push((2.0, vec![1.0; p]));
    Ok(pairs)
}

/// Adjacency eigenpairs of `K_q`, `e_0 - e_j` first and the all-ones vector last.
fn complete_eigenpairs(q: usize) -> Vec<(f64, Vec<f64>)> {
    let mut pairs: Vec<(f64, Vec<f64>)> = (1..q)
        .map(|j| {
            let mut y = vec![0.0; q];
            y[0] = 1.0;
            y[j] = -1.0;
            (-1.0, y)
        })
        .collect();
    pairs.push(((q - 1) as f64, vec![1.0; q]));
    pairs
}

/// One certificate per pocket copy built from `X_s ⊗ Y_t` on `C_p □ K_q`.
///
/// The pocket remainder must be exactly `C_p □ K_q` with vertex `a * q + x`.
/// `s` ranges over `1..=p` and `t` over `1..=q`, the all-ones vectors coming last.
pub fn pocket_eigenvector_certificates(
    kind: CertificateKind,
    spec: &PocketSpec,
    p: usize,
    s: usize,
    t: usize,
) -> Result<Vec<EigenvectorCertificate>> {
    let (remainder, copies, order, blocks): (Graph, usize, usize, Vec<std::ops::Range<usize>>) = match (kind, spec) {
        (CertificateKind::A | CertificateKind::QVertex, PocketSpec::Vertex(v)) => {
            v.require_full_degree()?;
            (v.h1(), v.k(), v.n() + v.k() * (v.m() - 1), (0..v.k()).map(|i| v.block(i)).collect())
        }
        (CertificateKind::QEdge, PocketSpec::Edge(e)) => {
            e.require_full_degree()?;
            (e.h2(), e.k(), e.n() + e.k() * (e.m() - 2), (0..e.k()).map(|i| e.block(i)).collect())
        }
        _ => return Err(Error::InvalidInput(format!("{kind:?} certificates do not apply to this pocket type"))),
    };
    if p < 3 || remainder.order() % p != 0 {
        return Err(Error::PreconditionViolation(format!(
            "a remainder of order {} is not C_{p} □ K_q",
            remainder.order()
        )));
    }
    let q = remainder.order() / p;
    let product = generate(GraphKind::Cycle(p))?.cartesian_product(&generate(GraphKind::Complete(q))?);
    if product != remainder {
        return Err(Error::PreconditionViolation(format!("pocket remainder is not C_{p} □ K_{q}")));
    }
    if !(1..=p).contains(&s) || !(1..=q).contains(&t) {
        return Err(Error::InvalidParameter(format!("index pair ({s}, {t}) outside 1..={p} x 1..={q}")));
    }
    if (s, t) == (p, q) {
        return Err(Error::ExcludedEigenvector);
    }
    let (lx, x) = cycle_eigenpairs(p)?.swap_remove(s - 1);
    let (ly, y) = complete_eigenpairs(q).swap_remove(t - 1);
    let eigenvalue = match kind {
        CertificateKind::A => lx + ly,
        // q-values of C_p and K_q are 2 + λ and (q - 2) + (λ + 1) respectively
        CertificateKind::QVertex => (lx + 2.0) + (ly + q as f64 - 1.0) + 1.0,
        CertificateKind::QEdge => (lx + 2.0) + (ly + q as f64 - 1.0) + 2.0,
    };
    let local: Vec<f64> = x.iter().flat_map(|xa| y.iter().map(move |yb| xa * yb)).collect();
    Ok((0..copies)
        .map(|i| {
            let mut vector = vec![0.0; order];
            vector[blocks[i].clone()].copy_from_slice(&local);
            EigenvectorCertificate { kind, copy: i, s, t, eigenvalue, vector }
        })
        .collect())
}

/// Residuals against `g` and the rank of the certificate family.
pub fn check_certificates(g: &Graph, certs: &[EigenvectorCertificate], tol: f64) -> Result<CertificateCheck> {
    let a = g.adjacency_matrix().to_f64();
    let q = g.signless_laplacian().to_f64();
    let mut max_residual = 0.0f64;
    for c in certs {
        let m = if c.kind == CertificateKind::A { &a } else { &q };
        max_residual = max_residual.max(residual(m, &c.vector, c.eigenvalue)?);
    }
    let vectors: Vec<Vec<f64>> = certs.iter().map(|c| c.vector.clone()).collect();
    Ok(CertificateCheck { max_residual, rank: numeric_rank(&vectors, tol) })
}
