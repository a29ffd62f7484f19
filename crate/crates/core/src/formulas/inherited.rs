use serde::Serialize;

use super::factored::{edge_pocket_charpoly_q, pocket_charpoly_a, pocket_charpoly_q, CoronalRoute, FactoredCharpoly};
use super::PocketKind;
use crate::error::{Error, Result};
use crate::pocket::PocketSpec;
use crate::poly::IntPolynomial;
use crate::spectrum::SpectrumMultiset;

/// Eigenvalues carried over from the pocket remainder, and what is left.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InheritedSpectrum {
    pub kind: PocketKind,
    /// Number of pockets; every inherited value occurs at least this often.
    pub copies: usize,
    /// Remainder spectrum (at the shifted argument) with the poles of the coronal removed.
    pub inherited: SpectrumMultiset,
    pub inherited_poly: IntPolynomial,
    /// `charpoly / inherited_poly^copies`, of degree `n + copies * poles`.
    pub residual_poly: IntPolynomial,
}

/// Split the characteristic polynomial of a pocket graph into the inherited part and the residual.
pub fn inherited_spectrum(kind: PocketKind, spec: &PocketSpec) -> Result<InheritedSpectrum> {
    let factored: FactoredCharpoly = match (kind, spec) {
        (PocketKind::AVertex, PocketSpec::Vertex(s)) => pocket_charpoly_a(s, CoronalRoute::Auto)?,
        (PocketKind::QVertex, PocketSpec::Vertex(s)) => pocket_charpoly_q(s, CoronalRoute::Auto)?,
        (PocketKind::QEdge, PocketSpec::Edge(s)) => edge_pocket_charpoly_q(s, CoronalRoute::Auto)?,
        _ => return Err(Error::InvalidInput(format!("{kind} formulas do not apply to this pocket type"))),
    };
    let (factor, exponent) = factored
        .scalar_factors
        .first()
        .cloned()
        .ok_or_else(|| Error::Internal("factored form without a scalar factor".into()))?;
    let den = factored.residual.coronal.den().clone();
    let inherited_poly = factor.div_exact(&den).ok_or_else(|| {
        Error::Internal("coronal denominator does not divide the remainder polynomial".into())
    })?;
    let residual_poly = factored
        .expanded
        .div_exact(&inherited_poly.pow(exponent))
        .ok_or_else(|| Error::Internal("inherited factor does not divide the characteristic polynomial".into()))?;
    Ok(InheritedSpectrum {
        kind,
        copies: exponent as usize,
        inherited: SpectrumMultiset::from_charpoly(&inherited_poly)?,
        inherited_poly,
        residual_poly,
    })
}
