//! Exact adjacency and signless-Laplacian spectra of graphs with vertex
//! pockets and edge-pockets.

// Matrix kernels read better with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod charpoly;
pub mod cospectral;
pub mod eigen;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod matrix;
pub mod pocket;
pub mod poly;
pub mod spectrum;
pub mod verify;

pub use charpoly::{charpoly_exact, coronal};
pub use cospectral::{CospectralCertificate, CospectralVerdict, MatrixKind};
pub use eigen::NumericSpectrum;
pub use error::{Error, Result};
pub use formulas::{CoronalRoute, FactoredCharpoly, PocketKind};
pub use graph::{Graph, GraphKind, NonIsomorphismWitness};
pub use matrix::MatrixInt;
pub use pocket::{EdgePocketSpec, PocketSpec, VertexPocketSpec};
pub use poly::{IntPolynomial, RationalFunction};
pub use spectrum::{Eigenvalue, SpectrumMultiset};
pub use verify::{Check, RunReport, Suite, VerifyOptions};
