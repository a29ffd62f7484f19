use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{big, PocketKind};
use crate::charpoly::{charpoly_exact, coronal, coronal_constant_row_sum, det_rfmatrix, RfMatrix};
use crate::error::{Error, Result};
use crate::matrix::MatrixInt;
use crate::pocket::{EdgePocketSpec, VertexPocketSpec};
use crate::poly::{IntPolynomial, RationalFunction};

/// How the coronal of the pocket remainder is obtained.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoronalRoute {
    /// Constant-row-sum shortcut when the remainder is regular, general otherwise.
    #[default]
    Auto,
    /// Always interpolate the coronal from linear solves.
    General,
    /// Insist on the constant-row-sum shortcut.
    ConstantRowSum,
}

/// The matrix multiplying the coronal inside the residual determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResidualPattern {
    /// Identity on the attachment vertices.
    AttachmentIdentity,
    /// Signless Laplacian of the pasted edge subgraph.
    EdgeSubgraphQ,
    /// Spanning form: identity scaled by the regularity plus the pasted adjacency.
    SpanningAdjacency,
}

/// `det(xI - M)` where `M = base + shift * D + coronal * P` on the F-vertices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Residual {
    pub order: usize,
    /// `A(F)` or `Q(F)`.
    pub base: &'static str,
    /// Constant diagonal added on the pattern support (`m - 1` or `r (m - 2)`).
    #[serde(serialize_with = "crate::poly::bigint_json::serialize")]
    pub diagonal_shift: BigInt,
    /// The coronal term, already at its shifted argument.
    pub coronal: RationalFunction,
    pub pattern: ResidualPattern,
    pub determinant: RationalFunction,
}

/// `prod factor^exponent * residual`, together with its expansion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactoredCharpoly {
    pub kind: PocketKind,
    pub scalar_factors: Vec<(IntPolynomial, u32)>,
    pub residual: Residual,
    pub expanded: IntPolynomial,
}

impl FactoredCharpoly {
    fn assemble(
        kind: PocketKind,
        scalar_factors: Vec<(IntPolynomial, u32)>,
        residual: Residual,
        expected_degree: usize,
    ) -> Result<Self> {
        let product: IntPolynomial = scalar_factors.iter().map(|(f, e)| f.pow(*e)).product();
        let full = &RationalFunction::from_poly(product) * &residual.determinant;
        let expanded = full
            .as_polynomial()
            .cloned()
            .ok_or_else(|| Error::Internal(format!("factored form is not a polynomial: {full}")))?;
        if expanded.degree() != Some(expected_degree) {
            return Err(Error::Internal(format!(
                "expanded degree {:?} differs from assembled order {expected_degree}",
                expanded.degree()
            )));
        }
        Ok(FactoredCharpoly { kind, scalar_factors, residual, expanded })
    }
}

fn u32_of(k: usize) -> Result<u32> {
    u32::try_from(k).map_err(|_| Error::InvalidParameter(format!("exponent {k} too large")))
}

fn pick_coronal(
    route: CoronalRoute,
    m: &MatrixInt,
    regular: Option<usize>,
    row_sum: impl Fn(usize) -> usize,
) -> Result<RationalFunction> {
    match (route, regular) {
        (CoronalRoute::General, _) | (CoronalRoute::Auto, None) => coronal(m),
        (_, Some(r)) => coronal_constant_row_sum(m.rows(), big(row_sum(r))),
        (CoronalRoute::ConstantRowSum, None) => Err(Error::PreconditionViolation(
            "the constant-row-sum coronal needs a regular pocket remainder".into(),
        )),
    }
}

/// Indicator of the attachment vertices as an `n x n` diagonal matrix.
fn attachment_identity(n: usize, vk: &[usize]) -> MatrixInt {
    let mut d = MatrixInt::zeros(n, n);
    for &v in vk {
        d[(v, v)] = BigInt::from(1);
    }
    d
}

/// Residual matrix `xI - base - shift * diag - coef * pattern`.
fn residual_det(base: &MatrixInt, diag: &MatrixInt, shift: &BigInt, coef: &RationalFunction, pattern: &MatrixInt) -> Result<RationalFunction> {
    let mut m = RfMatrix::x_minus(base)?;
    m.add_scaled(&RationalFunction::constant(-shift.clone()), diag)?;
    m.add_scaled(&-coef, pattern)?;
    det_rfmatrix(&m)
}

/// Adjacency characteristic polynomial of a vertex-pocket graph in factored form.
pub fn pocket_charpoly_a(spec: &VertexPocketSpec, route: CoronalRoute) -> Result<FactoredCharpoly> {
    spec.require_full_degree()?;
    let (n, m, k) = (spec.n(), spec.m(), spec.k());
    let h1 = spec.h1();
    let a1 = h1.adjacency_matrix();
    let gamma = pick_coronal(route, &a1, h1.regularity(), |r| r)?;
    let pattern = attachment_identity(n, spec.vk());
    let zero = BigInt::from(0);
    let determinant = residual_det(&spec.f().adjacency_matrix(), &pattern, &zero, &gamma, &pattern)?;
    let residual = Residual {
        order: n,
        base: "A(F)",
        diagonal_shift: zero,
        coronal: gamma,
        pattern: ResidualPattern::AttachmentIdentity,
        determinant,
    };
    let factor = charpoly_exact(&a1)?;
    FactoredCharpoly::assemble(PocketKind::AVertex, vec![(factor, u32_of(k)?)], residual, n + k * (m - 1))
}

/// Signless Laplacian characteristic polynomial of a vertex-pocket graph in factored form.
pub fn pocket_charpoly_q(spec: &VertexPocketSpec, route: CoronalRoute) -> Result<FactoredCharpoly> {
    spec.require_full_degree()?;
    let (n, m, k) = (spec.n(), spec.m(), spec.k());
    let h1 = spec.h1();
    let q1 = h1.signless_laplacian();
    let one = BigInt::from(1);
    let gamma = pick_coronal(route, &q1, h1.regularity(), |r| 2 * r)?.shift(&one);
    let pattern = attachment_identity(n, spec.vk());
    let shift = big(m - 1);
    let determinant = residual_det(&spec.f().signless_laplacian(), &pattern, &shift, &gamma, &pattern)?;
    let residual = Residual {
        order: n,
        base: "Q(F)",
        diagonal_shift: shift,
        coronal: gamma,
        pattern: ResidualPattern::AttachmentIdentity,
        determinant,
    };
    let factor = charpoly_exact(&q1)?.shift(&one);
    FactoredCharpoly::assemble(PocketKind::QVertex, vec![(factor, u32_of(k)?)], residual, n + k * (m - 1))
}

/// `Q(E_k)` placed on the F-vertices.
fn embedded_edge_q(spec: &EdgePocketSpec) -> MatrixInt {
    let n = spec.n();
    let mut out = MatrixInt::zeros(n, n);
    for &(a, b) in spec.ek() {
        for (x, y) in [(a, a), (b, b), (a, b), (b, a)] {
            out[(x, y)] += BigInt::from(1);
        }
    }
    out
}

fn edge_prerequisites(spec: &EdgePocketSpec, route: CoronalRoute) -> Result<(usize, RationalFunction, IntPolynomial)> {
    spec.require_full_degree()?;
    let r = spec.require_regular_ek()?;
    let h2 = spec.h2();
    let q2 = h2.signless_laplacian();
    let two = BigInt::from(2);
    let gamma = pick_coronal(route, &q2, h2.regularity(), |r2| 2 * r2)?.shift(&two);
    let factor = charpoly_exact(&q2)?.shift(&two);
    Ok((r, gamma, factor))
}

/// Signless Laplacian characteristic polynomial of an edge-pocket graph in factored form.
pub fn edge_pocket_charpoly_q(spec: &EdgePocketSpec, route: CoronalRoute) -> Result<FactoredCharpoly> {
    let (r, gamma, factor) = edge_prerequisites(spec, route)?;
    let (n, m, k) = (spec.n(), spec.m(), spec.k());
    let support = attachment_identity(n, &spec.ek_subgraph().vertices);
    let shift = big(r * (m - 2));
    let determinant = residual_det(&spec.f().signless_laplacian(), &support, &shift, &gamma, &embedded_edge_q(spec))?;
    let residual = Residual {
        order: n,
        base: "Q(F)",
        diagonal_shift: shift,
        coronal: gamma,
        pattern: ResidualPattern::EdgeSubgraphQ,
        determinant,
    };
    FactoredCharpoly::assemble(PocketKind::QEdge, vec![(factor, u32_of(k)?)], residual, n + k * (m - 2))
}

/// Edge-pocket form for a regular spanning `E_k`, written with `A(E_k)`.
pub fn spanning_edge_pocket_charpoly_q(spec: &EdgePocketSpec, route: CoronalRoute) -> Result<FactoredCharpoly> {
    let (r, gamma, factor) = edge_prerequisites(spec, route)?;
    let (n, m, k) = (spec.n(), spec.m(), spec.k());
    if spec.p() != n {
        return Err(Error::PreconditionViolation(format!(
            "E_k covers {} of the {n} vertices of F; the spanning form needs all of them",
            spec.p()
        )));
    }
    // M = r((m - 2) + Γ) I + Q(F) + Γ A(E_k)
    let mut adj = MatrixInt::zeros(n, n);
    for &(a, b) in spec.ek() {
        adj[(a, b)] = BigInt::from(1);
        adj[(b, a)] = BigInt::from(1);
    }
    let identity = MatrixInt::identity(n);
    let shift = big(r * (m - 2));
    let mut mat = RfMatrix::x_minus(&spec.f().signless_laplacian())?;
    mat.add_scaled(&RationalFunction::constant(-shift.clone()), &identity)?;
    let r_gamma = &RationalFunction::constant(big(r)) * &gamma;
    mat.add_scaled(&-&r_gamma, &identity)?;
    mat.add_scaled(&-&gamma, &adj)?;
    let determinant = det_rfmatrix(&mat)?;
    let residual = Residual {
        order: n,
        base: "Q(F)",
        diagonal_shift: shift,
        coronal: gamma,
        pattern: ResidualPattern::SpanningAdjacency,
        determinant,
    };
    FactoredCharpoly::assemble(PocketKind::QEdge, vec![(factor, u32_of(k)?)], residual, n + k * (m - 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Graph, GraphKind};
    use crate::pocket::{build_edge_pockets, build_vertex_pockets};

    fn g(kind: GraphKind) -> Graph {
        generate(kind).unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn small_vertex_pockets() {
        let k2 = g(GraphKind::Complete(2));
        let p2 = g(GraphKind::Path(2));
        let one = VertexPocketSpec::new(k2.clone(), vec![0], p2.clone(), 1).unwrap();
        assert_eq!(pocket_charpoly_a(&one, CoronalRoute::Auto).unwrap().expanded, p(&[0, -2, 0, 1]));
        assert_eq!(pocket_charpoly_q(&one, CoronalRoute::Auto).unwrap().expanded, p(&[0, 3, -4, 1]));
        let two = VertexPocketSpec::new(k2, vec![0, 1], p2, 1).unwrap();
        assert_eq!(pocket_charpoly_a(&two, CoronalRoute::General).unwrap().expanded, p(&[1, 0, -3, 0, 1]));
    }

    #[test]
    fn irregular_remainder_uses_general_coronal() {
        let h = Graph::empty(1).join(&g(GraphKind::Path(3)));
        let spec = VertexPocketSpec::new(g(GraphKind::Cycle(4)), vec![0, 1], h, 0).unwrap();
        let direct = charpoly_exact(&build_vertex_pockets(&spec).adjacency_matrix()).unwrap();
        assert_eq!(pocket_charpoly_a(&spec, CoronalRoute::Auto).unwrap().expanded, direct);
        assert!(matches!(pocket_charpoly_a(&spec, CoronalRoute::ConstantRowSum), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn low_degree_vertex_rejected() {
        let spec = VertexPocketSpec::new(g(GraphKind::Complete(2)), vec![0], g(GraphKind::Path(3)), 0).unwrap();
        assert!(matches!(pocket_charpoly_q(&spec, CoronalRoute::Auto), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn matching_edge_pockets() {
        let spec = EdgePocketSpec::new(g(GraphKind::Complete(4)), vec![(0, 1), (2, 3)], g(GraphKind::Complete(5)), (0, 1))
            .unwrap();
        let f = edge_pocket_charpoly_q(&spec, CoronalRoute::Auto).unwrap();
        let expected = p(&[-3, 1]).pow(5) * p(&[-5, 1]).pow(2) * p(&[-8, 1]) * p(&[48, -15, 1]);
        assert_eq!(f.expanded, expected);
        assert_eq!(f.expanded, charpoly_exact(&build_edge_pockets(&spec).signless_laplacian()).unwrap());
        let s = spanning_edge_pocket_charpoly_q(&spec, CoronalRoute::Auto).unwrap();
        assert_eq!(s.expanded, f.expanded);
        assert_eq!(s.residual.determinant, f.residual.determinant);
    }

    #[test]
    fn irregular_edge_subgraph_rejected() {
        let spec = EdgePocketSpec::new(g(GraphKind::Complete(4)), vec![(0, 1), (0, 2)], g(GraphKind::Complete(4)), (0, 1))
            .unwrap();
        assert!(matches!(edge_pocket_charpoly_q(&spec, CoronalRoute::Auto), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn non_spanning_rejected() {
        let spec = EdgePocketSpec::new(g(GraphKind::Complete(4)), vec![(0, 1)], g(GraphKind::Complete(4)), (0, 1)).unwrap();
        assert!(edge_pocket_charpoly_q(&spec, CoronalRoute::Auto).is_ok());
        assert!(matches!(
            spanning_edge_pocket_charpoly_q(&spec, CoronalRoute::Auto),
            Err(Error::PreconditionViolation(_))
        ));
    }
}
