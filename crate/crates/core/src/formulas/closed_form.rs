use num_bigint::BigInt;
use num_integer::Integer;

use super::big;
use crate::error::{Error, Result};
use crate::spectrum::{Eigenvalue, SpectrumMultiset};

/// Strip `m - 2` and the two join roots from the spectrum of `K_2 ∨ H2`.
fn inherited_from_huv(m: usize, r2: usize, huv: &SpectrumMultiset) -> Result<SpectrumMultiset> {
    if huv.total() != m {
        return Err(Error::InvalidInput(format!(
            "spectrum of K_2 ∨ H2 should have {m} values, got {}",
            huv.total()
        )));
    }
    let mut rest = huv.clone();
    let missing = |e: Error| Error::InvalidInput(format!("supplied spectrum is not that of K_2 ∨ H2: {e}"));
    rest.remove(&Eigenvalue::int(m - 2), 1).map_err(missing)?;
    let b = -big(2 * r2 + 2 + m);
    let c = big((2 * r2 + 2) * m) - big(2 * (m - 2));
    for e in Eigenvalue::quadratic_pair(1, b, c)? {
        rest.remove(&e, 1).map_err(missing)?;
    }
    Ok(rest)
}

/// Roots of `(x - a)(x - d) - e`.
fn coupled_pair(a: BigInt, d: BigInt, e: BigInt) -> Result<[Eigenvalue; 2]> {
    let b = -(&a + &d);
    let c = &a * &d - e;
    Eigenvalue::quadratic_pair(1, b, c)
}

/// Signless Laplacian spectrum of `K_{2k}` with an edge-pocket on each edge of a perfect matching.
///
/// `huv` is the signless Laplacian spectrum of `K_2 ∨ H2` where `H2` is `r2`-regular of order `m - 2`.
pub fn matching_pocket_spectrum_q(k: usize, m: usize, r2: usize, huv: &SpectrumMultiset) -> Result<SpectrumMultiset> {
    if k == 0 || r2 < 2 || m < 4 || r2 > m - 3 {
        return Err(Error::InvalidParameter(format!(
            "matching closed form needs k >= 1, m >= 4 and 2 <= r2 <= m - 3 (k = {k}, m = {m}, r2 = {r2})"
        )));
    }
    let mut out = inherited_from_huv(m, r2, huv)?.repeated(k);
    out.insert(Eigenvalue::int(m + 2 * k - 4), k);
    let tail = big(2 * r2 + 2);
    let coupling = big(2 * (m - 2));
    for e in coupled_pair(big(m + 4 * k) - BigInt::from(4), tail.clone(), coupling.clone())? {
        out.insert(e, 1);
    }
    if k > 1 {
        for e in coupled_pair(big(m + 2 * k) - BigInt::from(4), tail, coupling)? {
            out.insert(e, k - 1);
        }
    }
    Ok(out)
}

/// `2 + 2cos(2πl/n)` when it is an integer.
fn rational_cycle_value(l: usize, n: usize) -> Option<i64> {
    let g = l.gcd(&n);
    match (l / g, n / g) {
        (_, 1) => Some(4),
        (_, 2) => Some(0),
        (_, 3) => Some(1),
        (_, 4) => Some(2),
        (_, 6) => Some(3),
        _ => None,
    }
}

/// Signless Laplacian spectrum of `K_n` with an edge-pocket on each edge of a Hamiltonian cycle.
///
/// Values whose cosine is irrational come back as [`Eigenvalue::Approx`].
pub fn cycle_pocket_spectrum_q(n: usize, m: usize, r2: usize, huv: &SpectrumMultiset) -> Result<SpectrumMultiset> {
    if n < 3 || m < 3 || r2 > m - 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle closed form needs n >= 3, m >= 3 and r2 <= m - 3 (n = {n}, m = {m}, r2 = {r2})"
        )));
    }
    let mut out = inherited_from_huv(m, r2, huv)?.repeated(n);
    let tail = big(2 * r2 + 2);
    // 2m + n - 6 never underflows for n >= 3, m >= 3.
    let head = big(2 * m + n) - BigInt::from(6);
    for e in coupled_pair(&head + big(n), tail.clone(), big(4 * (m - 2)))? {
        out.insert(e, 1);
    }
    let scale = m - 2;
    for l in 1..n {
        match rational_cycle_value(l, n) {
            Some(c) => {
                for e in coupled_pair(head.clone(), tail.clone(), BigInt::from(c) * big(scale))? {
                    out.insert(e, 1);
                }
            }
            None => {
                let c = 2.0 + 2.0 * (2.0 * std::f64::consts::PI * l as f64 / n as f64).cos();
                let (a, d) = ((2 * m + n - 6) as f64, (2 * r2 + 2) as f64);
                let s = a + d;
                let disc = ((a - d) * (a - d) + 4.0 * scale as f64 * c).sqrt();
                out.insert(Eigenvalue::Approx((s - disc) / 2.0), 1);
                out.insert(Eigenvalue::Approx((s + disc) / 2.0), 1);
            }
        }
    }
    Ok(out)
}
