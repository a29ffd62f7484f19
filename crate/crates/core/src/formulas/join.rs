use num_bigint::BigInt;

use super::{big, require_regular};
use crate::charpoly::charpoly_exact;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{IntPolynomial, RationalFunction};

/// Adjacency characteristic polynomial of `G1 ∨ G2` for regular `G1`, `G2`.
pub fn join_charpoly_a(g1: &Graph, g2: &Graph) -> Result<IntPolynomial> {
    let r1 = require_regular(g1, "first join operand")?;
    let r2 = require_regular(g2, "second join operand")?;
    let (n1, n2) = (g1.order(), g2.order());
    let f1 = charpoly_exact(&g1.adjacency_matrix())?;
    let f2 = charpoly_exact(&g2.adjacency_matrix())?;
    let l1 = IntPolynomial::linear(big(r1));
    let l2 = IntPolynomial::linear(big(r2));
    let correction = &(&l1 * &l2) - &IntPolynomial::constant(big(n1 * n2));
    let value = &(&RationalFunction::from_poly(&f1 * &f2) * &RationalFunction::from_poly(correction))
        / &RationalFunction::from_poly(&l1 * &l2);
    value.as_polynomial().cloned().ok_or_else(|| Error::Internal("join formula is not a polynomial".into()))
}

/// Signless Laplacian characteristic polynomial of `G1 ∨ G2` for regular operands.
pub fn join_charpoly_q(g1: &Graph, g2: &Graph) -> Result<IntPolynomial> {
    let r1 = require_regular(g1, "first join operand")?;
    let r2 = require_regular(g2, "second join operand")?;
    let (n1, n2) = (g1.order(), g2.order());
    let f1 = charpoly_exact(&g1.signless_laplacian())?.shift(&big(n2));
    let f2 = charpoly_exact(&g2.signless_laplacian())?.shift(&big(n1));
    let d1 = IntPolynomial::linear(BigInt::from(n1 + 2 * r2));
    let d2 = IntPolynomial::linear(BigInt::from(n2 + 2 * r1));
    let ratio = RationalFunction::new(IntPolynomial::constant(big(n1 * n2)), &d1 * &d2);
    let value = &(&RationalFunction::one() - &ratio) * &RationalFunction::from_poly(&f1 * &f2);
    value.as_polynomial().cloned().ok_or_else(|| Error::Internal("join formula is not a polynomial".into()))
}
