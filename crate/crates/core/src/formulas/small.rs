use num_bigint::BigInt;

use super::{big, require_regular};
use crate::charpoly::charpoly_exact;
use crate::error::Result;
use crate::graph::Graph;
use crate::spectrum::{Eigenvalue, SpectrumMultiset};

/// Adjacency spectrum of `{v} ∨ H1` for regular `H1`.
pub fn hv_spectrum_a(h1: &Graph) -> Result<SpectrumMultiset> {
    let r1 = require_regular(h1, "H - v")?;
    let m = h1.order() + 1;
    let mut s = SpectrumMultiset::from_charpoly(&charpoly_exact(&h1.adjacency_matrix())?)?;
    s.remove(&Eigenvalue::int(r1), 1)?;
    // x^2 - r1 x - (m - 1)
    for e in Eigenvalue::quadratic_pair(1, -big(r1), -big(m - 1))? {
        s.insert(e, 1);
    }
    Ok(s)
}

/// Signless Laplacian spectrum of `{v} ∨ H1` for regular `H1`.
pub fn hv_spectrum_q(h1: &Graph) -> Result<SpectrumMultiset> {
    let r1 = require_regular(h1, "H - v")?;
    let m = h1.order() + 1;
    let mut base = SpectrumMultiset::from_charpoly(&charpoly_exact(&h1.signless_laplacian())?)?;
    base.remove(&Eigenvalue::int(2 * r1), 1)?;
    let mut s = base.shifted(&BigInt::from(1));
    // (x - 2r1 - 1)(x - m + 1) - (m - 1) = x^2 - (2r1 + m) x + 2r1 (m - 1)
    for e in Eigenvalue::quadratic_pair(1, -big(2 * r1 + m), big(2 * r1 * (m - 1)))? {
        s.insert(e, 1);
    }
    Ok(s)
}

/// Signless Laplacian spectrum of `K_2 ∨ H2` for regular `H2`.
pub fn huv_spectrum_q(h2: &Graph) -> Result<SpectrumMultiset> {
    let r2 = require_regular(h2, "H - {u, v}")?;
    let m = h2.order() + 2;
    let mut base = SpectrumMultiset::from_charpoly(&charpoly_exact(&h2.signless_laplacian())?)?;
    base.remove(&Eigenvalue::int(2 * r2), 1)?;
    let mut s = base.shifted(&BigInt::from(2));
    s.insert(Eigenvalue::int(m - 2), 1);
    // (x - 2r2 - 2)(x - m) - 2(m - 2)
    let b = -big(2 * r2 + 2 + m);
    let c = big((2 * r2 + 2) * m) - big(2 * (m - 2));
    for e in Eigenvalue::quadratic_pair(1, b, c)? {
        s.insert(e, 1);
    }
    Ok(s)
}
