//! Cospectral pairs: exact certification, pocket constructions and catalog search.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charpoly::charpoly_exact;
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, distinguish, Graph, IsoOutcome, NonIsomorphismWitness, ISO_ORDER_LIMIT};
use crate::pocket::{build_edge_pockets, build_vertex_pockets, EdgePocketSpec, VertexPocketSpec};
use crate::poly::IntPolynomial;

/// Largest graph order accepted by [`search_cospectral_mates`].
pub const SEARCH_ORDER_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    A,
    Q,
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(MatrixKind::A),
            "Q" | "q" => Ok(MatrixKind::Q),
            _ => Err(Error::InvalidInput(format!("unknown matrix kind `{s}`, expected A or Q"))),
        }
    }
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MatrixKind::A => "A",
            MatrixKind::Q => "Q",
        })
    }
}

pub fn charpoly_of(g: &Graph, kind: MatrixKind) -> Result<IntPolynomial> {
    match kind {
        MatrixKind::A => charpoly_exact(&g.adjacency_matrix()),
        MatrixKind::Q => charpoly_exact(&g.signless_laplacian()),
    }
}

/// Two graphs with equal characteristic polynomials and, as far as checkable, different structure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CospectralCertificate {
    pub g1: Graph,
    pub g2: Graph,
    pub matrix_kind: MatrixKind,
    pub shared_charpoly: IntPolynomial,
    pub nonisomorphic_witness: NonIsomorphismWitness,
}

impl CospectralCertificate {
    /// Recompute both characteristic polynomials and the witness from scratch.
    pub fn recheck(&self) -> Result<bool> {
        let same = charpoly_of(&self.g1, self.matrix_kind)? == self.shared_charpoly
            && charpoly_of(&self.g2, self.matrix_kind)? == self.shared_charpoly;
        Ok(same && witness(&self.g1, &self.g2)? == Some(self.nonisomorphic_witness))
    }
}

/// Why two graphs are not cospectral.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CospectralMismatch {
    pub matrix_kind: MatrixKind,
    pub orders: (usize, usize),
    /// Lowest-degree coefficient where the polynomials differ.
    pub first_difference: Option<usize>,
    pub charpolys: Option<(IntPolynomial, IntPolynomial)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum CospectralVerdict {
    Certified(CospectralCertificate),
    /// Equal polynomials but the graphs are isomorphic.
    Isomorphic { shared_charpoly: IntPolynomial },
    Mismatch(CospectralMismatch),
}

impl CospectralVerdict {
    pub fn certificate(&self) -> Option<&CospectralCertificate> {
        match self {
            CospectralVerdict::Certified(c) => Some(c),
            _ => None,
        }
    }
}

/// `None` when the graphs are isomorphic.
fn witness(g1: &Graph, g2: &Graph) -> Result<Option<NonIsomorphismWitness>> {
    if g1.order().max(g2.order()) <= ISO_ORDER_LIMIT {
        return Ok(match are_isomorphic(g1, g2)? {
            IsoOutcome::Isomorphic(_) => None,
            IsoOutcome::NotIsomorphic(w) => Some(w),
        });
    }
    Ok(Some(distinguish(g1, g2).unwrap_or(NonIsomorphismWitness::NotChecked)))
}

fn first_difference(p1: &IntPolynomial, p2: &IntPolynomial) -> Option<usize> {
    let len = p1.coeffs().len().max(p2.coeffs().len());
    (0..len).find(|&i| p1.coeff(i) != p2.coeff(i))
}

/// Compare the exact characteristic polynomials of two graphs.
pub fn verify_cospectral(g1: &Graph, g2: &Graph, kind: MatrixKind) -> Result<CospectralVerdict> {
    if g1.order() != g2.order() {
        return Ok(CospectralVerdict::Mismatch(CospectralMismatch {
            matrix_kind: kind,
            orders: (g1.order(), g2.order()),
            first_difference: None,
            charpolys: None,
        }));
    }
    let (p1, p2) = rayon::join(|| charpoly_of(g1, kind), || charpoly_of(g2, kind));
    let (p1, p2) = (p1?, p2?);
    if p1 != p2 {
        return Ok(CospectralVerdict::Mismatch(CospectralMismatch {
            matrix_kind: kind,
            orders: (g1.order(), g2.order()),
            first_difference: first_difference(&p1, &p2),
            charpolys: Some((p1, p2)),
        }));
    }
    Ok(match witness(g1, g2)? {
        None => CospectralVerdict::Isomorphic { shared_charpoly: p1 },
        Some(w) => CospectralVerdict::Certified(CospectralCertificate {
            g1: g1.clone(),
            g2: g2.clone(),
            matrix_kind: kind,
            shared_charpoly: p1,
            nonisomorphic_witness: w,
        }),
    })
}

/// Seeds must be co-regular, of equal order, cospectral and not isomorphic.
fn check_seeds(s1: &Graph, s2: &Graph, kind: MatrixKind, min_degree: usize) -> Result<usize> {
    let r = match (s1.regularity(), s2.regularity()) {
        (Some(a), Some(b)) if a == b && s1.order() == s2.order() => a,
        _ => {
            return Err(Error::PreconditionViolation(
                "seed graphs must be regular of the same degree and order".into(),
            ))
        }
    };
    if r < min_degree {
        return Err(Error::PreconditionViolation(format!("seed degree {r} is below {min_degree}")));
    }
    match verify_cospectral(s1, s2, kind)? {
        CospectralVerdict::Certified(_) => Ok(r),
        CospectralVerdict::Isomorphic { .. } => Err(Error::PreconditionViolation("seed graphs are isomorphic".into())),
        CospectralVerdict::Mismatch(_) => {
            Err(Error::PreconditionViolation(format!("seed graphs are not {kind}-cospectral")))
        }
    }
}

fn certify_pair(g1: Graph, g2: Graph, kind: MatrixKind) -> Result<(Graph, Graph, CospectralCertificate)> {
    match verify_cospectral(&g1, &g2, kind)? {
        CospectralVerdict::Certified(c) => Ok((g1, g2, c)),
        CospectralVerdict::Isomorphic { .. } => {
            Err(Error::Internal("pocket graphs built from non-isomorphic seeds came out isomorphic".into()))
        }
        CospectralVerdict::Mismatch(_) => Err(Error::Internal("pocket graphs are not cospectral".into())),
    }
}

/// Attach `{v} ∨ H1` and `{v} ∨ H1'` at `V_k` and certify the pair.
pub fn make_cospectral_vertex_pocket_pair(
    f: &Graph,
    vk: &[usize],
    h1: &Graph,
    h1p: &Graph,
    kind: MatrixKind,
) -> Result<(Graph, Graph, CospectralCertificate)> {
    check_seeds(h1, h1p, kind, 0)?;
    let s1 = VertexPocketSpec::with_apex(f.clone(), vk.to_vec(), h1)?;
    let s2 = VertexPocketSpec::with_apex(f.clone(), vk.to_vec(), h1p)?;
    let (g1, g2) = rayon::join(|| build_vertex_pockets(&s1), || build_vertex_pockets(&s2));
    certify_pair(g1, g2, kind)
}

/// Attach `K_2 ∨ H2` and `K_2 ∨ H2'` along `E_k` and certify Q-cospectrality.
pub fn make_cospectral_edge_pocket_pair(
    f: &Graph,
    ek: &[(usize, usize)],
    h2: &Graph,
    h2p: &Graph,
) -> Result<(Graph, Graph, CospectralCertificate)> {
    check_seeds(h2, h2p, MatrixKind::Q, 2)?;
    let s1 = EdgePocketSpec::with_k2(f.clone(), ek.to_vec(), h2)?;
    let s2 = EdgePocketSpec::with_k2(f.clone(), ek.to_vec(), h2p)?;
    s1.require_regular_ek()?;
    let (g1, g2) = rayon::join(|| build_edge_pockets(&s1), || build_edge_pockets(&s2));
    certify_pair(g1, g2, MatrixKind::Q)
}

/// One cospectral pair found in a catalog, by line index.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchHit {
    pub lines: (usize, usize),
    pub certificate: CospectralCertificate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub matrix_kind: MatrixKind,
    pub graphs_read: usize,
    pub classes: usize,
    pub hits: Vec<SearchHit>,
    pub errors: Vec<LineError>,
}

/// Group a graph6 stream by exact characteristic polynomial and certify every non-isomorphic pair.
///
/// Blank lines and lines starting with `>` are skipped. Bad lines are reported and skipped.
pub fn search_cospectral_mates(catalog: &str, kind: MatrixKind, require_regular: bool) -> Result<SearchReport> {
    let lines: Vec<(usize, &str)> = catalog
        .lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('>'))
        .collect();
    let parsed: Vec<(usize, Result<(Graph, IntPolynomial)>)> = lines
        .par_iter()
        .map(|&(i, l)| {
            let entry = Graph::from_graph6(l).and_then(|g| {
                if g.order() > SEARCH_ORDER_LIMIT {
                    return Err(Error::SizeLimitExceeded { order: g.order(), limit: SEARCH_ORDER_LIMIT });
                }
                let p = charpoly_of(&g, kind)?;
                Ok((g, p))
            });
            (i, entry)
        })
        .collect();
    let mut errors = Vec::new();
    let mut graphs = Vec::new();
    let mut classes: BTreeMap<Vec<BigInt>, Vec<usize>> = BTreeMap::new();
    for (line, entry) in parsed {
        match entry {
            Ok((g, p)) => {
                classes.entry(p.coeffs().to_vec()).or_default().push(graphs.len());
                graphs.push((line, g, p));
            }
            Err(e) => errors.push(LineError { line, message: e.to_string() }),
        }
    }
    let mut candidates = Vec::new();
    for members in classes.values() {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                let (gi, gj) = (&graphs[i].1, &graphs[j].1);
                let coregular = gi.regularity().is_some() && gi.regularity() == gj.regularity();
                if !require_regular || coregular {
                    candidates.push((i, j));
                }
            }
        }
    }
    let mut hits = candidates
        .par_iter()
        .map(|&(i, j)| {
            let (li, gi, p) = &graphs[i];
            let (lj, gj, _) = &graphs[j];
            Ok(witness(gi, gj)?.map(|w| SearchHit {
                lines: (*li, *lj),
                certificate: CospectralCertificate {
                    g1: gi.clone(),
                    g2: gj.clone(),
                    matrix_kind: kind,
                    shared_charpoly: p.clone(),
                    nonisomorphic_witness: w,
                },
            }))
        })
        .collect::<Result<Vec<Option<SearchHit>>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    hits.sort_by_key(|h| h.lines);
    Ok(SearchReport { matrix_kind: kind, graphs_read: graphs.len(), classes: classes.len(), hits, errors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_text, named, rook, shrikhande};

    #[test]
    fn star_and_square_plus_point() {
        let v = verify_cospectral(&named("K1,4").unwrap(), &named("C4|E1").unwrap(), MatrixKind::A).unwrap();
        let c = v.certificate().unwrap();
        assert_eq!(c.shared_charpoly, IntPolynomial::from_i64(&[0, 0, 0, -4, 0, 1]));
        assert_eq!(c.nonisomorphic_witness, NonIsomorphismWitness::DegreeSequence);
        assert!(c.recheck().unwrap());
        let q = verify_cospectral(&named("K1,4").unwrap(), &named("C4|E1").unwrap(), MatrixKind::Q).unwrap();
        assert!(matches!(q, CospectralVerdict::Mismatch(CospectralMismatch { first_difference: Some(_), .. })));
    }

    #[test]
    fn isomorphic_and_order_mismatch() {
        let k3 = named("K3").unwrap();
        assert!(matches!(verify_cospectral(&k3, &k3, MatrixKind::A).unwrap(), CospectralVerdict::Isomorphic { .. }));
        let m = verify_cospectral(&k3, &named("K4").unwrap(), MatrixKind::A).unwrap();
        assert!(matches!(m, CospectralVerdict::Mismatch(CospectralMismatch { orders: (3, 4), .. })));
    }

    #[test]
    fn seeds_cospectral_both_kinds() {
        for kind in [MatrixKind::A, MatrixKind::Q] {
            let v = verify_cospectral(&shrikhande(), &rook(), kind).unwrap();
            let c = v.certificate().expect("cospectral");
            assert_eq!(c.nonisomorphic_witness, NonIsomorphismWitness::RefinementDistinguisher);
        }
    }

    #[test]
    fn non_cospectral_seeds_rejected() {
        let c6 = named("C6").unwrap();
        let two_k3 = named("K3|K3").unwrap();
        let f = named("P4").unwrap();
        let err = make_cospectral_vertex_pocket_pair(&f, &[0, 1], &c6, &two_k3, MatrixKind::A);
        assert!(matches!(err, Err(Error::PreconditionViolation(_))));
        let err = make_cospectral_edge_pocket_pair(&named("K4").unwrap(), &[(0, 1), (2, 3)], &c6, &two_k3);
        assert!(matches!(err, Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn small_search() {
        let text = ["C6", "K3|K3", "P6", "K3,3"].map(|s| named(s).unwrap().to_graph6()).join("\n");
        let report = search_cospectral_mates(&text, MatrixKind::A, false).unwrap();
        assert!(report.hits.is_empty());
        assert_eq!(report.graphs_read, 4);
        let report = search_cospectral_mates("D?{\nnot graph6 \u{1}\nDUW\n", MatrixKind::A, false).unwrap();
        assert_eq!(report.errors.len(), 1);
        assert_eq!(report.errors[0].line, 1);
    }

    #[test]
    fn order_five_adjacency_search() {
        let report = search_cospectral_mates(catalog_text(5).unwrap(), MatrixKind::A, false).unwrap();
        assert_eq!(report.graphs_read, 34);
        let star = named("K1,4").unwrap();
        assert!(report.hits.iter().any(|h| {
            let c = &h.certificate;
            (are_isomorphic(&c.g1, &star).unwrap().is_isomorphic() || are_isomorphic(&c.g2, &star).unwrap().is_isomorphic())
                && c.recheck().unwrap()
        }));
    }
}
