//! Closed-form and factored spectral formulas for joins and pocket graphs.

mod certificates;
mod closed_form;
mod factored;
mod inherited;
mod join;
mod small;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use certificates::{
    check_certificates, cycle_eigenpairs, pocket_eigenvector_certificates, CertificateCheck, CertificateKind,
    EigenvectorCertificate,
};
pub use closed_form::{cycle_pocket_spectrum_q, matching_pocket_spectrum_q};
pub use factored::{
    edge_pocket_charpoly_q, pocket_charpoly_a, pocket_charpoly_q, spanning_edge_pocket_charpoly_q, CoronalRoute,
    FactoredCharpoly, Residual, ResidualPattern,
};
pub use inherited::{inherited_spectrum, InheritedSpectrum};
pub use join::{join_charpoly_a, join_charpoly_q};
pub use small::{huv_spectrum_q, hv_spectrum_a, hv_spectrum_q};

/// Which matrix and which pocket type a formula concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PocketKind {
    #[serde(rename = "A-vertex")]
    AVertex,
    #[serde(rename = "Q-vertex")]
    QVertex,
    #[serde(rename = "Q-edge")]
    QEdge,
}

impl std::str::FromStr for PocketKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a-vertex" | "a" => Ok(PocketKind::AVertex),
            "q-vertex" => Ok(PocketKind::QVertex),
            "q-edge" => Ok(PocketKind::QEdge),
            _ => Err(Error::InvalidInput(format!("unknown pocket kind `{s}`"))),
        }
    }
}

impl std::fmt::Display for PocketKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PocketKind::AVertex => "A-vertex",
            PocketKind::QVertex => "Q-vertex",
            PocketKind::QEdge => "Q-edge",
        })
    }
}

fn require_regular(g: &Graph, what: &str) -> Result<usize> {
    g.regularity().ok_or_else(|| Error::PreconditionViolation(format!("{what} is not regular")))
}

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}
