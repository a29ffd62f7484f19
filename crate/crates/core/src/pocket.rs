//! Graphs with vertex pockets and edge-pockets.
//!
//! The assembled graph keeps `F` on vertices `0..n` in its own order; copy `i`
//! of the pocket remainder follows contiguously in the order of `V_k` (resp.
//! `E_k`), with the remainder's vertices in their order inside `H`.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, distinguish, EdgeInducedSubgraph, Graph, ISO_ORDER_LIMIT};

/// `F` with a copy of `H_v` attached at each vertex of `V_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawVertexSpec", into = "RawVertexSpec")]
pub struct VertexPocketSpec {
    f: Graph,
    vk: Vec<usize>,
    h: Graph,
    v: usize,
}

impl VertexPocketSpec {
    pub fn new(f: Graph, vk: Vec<usize>, h: Graph, v: usize) -> Result<Self> {
        let n = f.order();
        if vk.is_empty() || vk.len() > n {
            return Err(Error::InvalidParameter(format!("need 1 <= k <= n = {n}, got k = {}", vk.len())));
        }
        if let Some(&bad) = vk.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidVertex(bad));
        }
        let mut sorted = vk.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("V_k has repeated vertices".into()));
        }
        if h.order() < 2 {
            return Err(Error::InvalidParameter("pocket graph needs m >= 2".into()));
        }
        if v >= h.order() {
            return Err(Error::InvalidVertex(v));
        }
        Ok(VertexPocketSpec { f, vk, h, v })
    }

    /// Pocket `{v} ∨ H1` with the apex as specified vertex.
    pub fn with_apex(f: Graph, vk: Vec<usize>, h1: &Graph) -> Result<Self> {
        Self::new(f, vk, Graph::empty(1).join(h1), 0)
    }

    pub fn f(&self) -> &Graph {
        &self.f
    }

    pub fn vk(&self) -> &[usize] {
        &self.vk
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn n(&self) -> usize {
        self.f.order()
    }

    pub fn m(&self) -> usize {
        self.h.order()
    }

    pub fn k(&self) -> usize {
        self.vk.len()
    }

    /// `H1 = H - v`.
    pub fn h1(&self) -> Graph {
        self.h.remove_vertices(&[self.v]).expect("v is a vertex of H")
    }

    /// Vertices of copy `i` in the assembled graph.
    pub fn block(&self, i: usize) -> Range<usize> {
        let s = self.n() + i * (self.m() - 1);
        s..s + self.m() - 1
    }

    pub fn validate(&self) -> AssumptionReport {
        AssumptionReport {
            specified_degree_full: self.h.degree(self.v) == self.m() - 1,
            h_remainder_regular: self.h1().regularity(),
            ek_regular: None,
            ek_spanning: false,
        }
    }

    /// Errors unless the specified vertex is adjacent to all of `H - v`.
    pub fn require_full_degree(&self) -> Result<()> {
        let d = self.h.degree(self.v);
        if d != self.m() - 1 {
            return Err(Error::PreconditionViolation(format!(
                "specified vertex has degree {d}, the formulas need m - 1 = {}",
                self.m() - 1
            )));
        }
        Ok(())
    }
}

/// `F` with a copy of `H_uv` pasted on each edge of `E_k`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "RawEdgeSpec", into = "RawEdgeSpec")]
pub struct EdgePocketSpec {
    f: Graph,
    ek: Vec<(usize, usize)>,
    h: Graph,
    uv: (usize, usize),
    flips: Vec<bool>,
    sub: EdgeInducedSubgraph,
}

impl PartialEq for EdgePocketSpec {
    fn eq(&self, other: &Self) -> bool {
        self.f == other.f && self.ek == other.ek && self.h == other.h && self.uv == other.uv && self.flips == other.flips
    }
}

impl EdgePocketSpec {
    pub fn new(f: Graph, ek: Vec<(usize, usize)>, h: Graph, uv: (usize, usize)) -> Result<Self> {
        let flips = vec![false; ek.len()];
        Self::with_flips(f, ek, h, uv, flips)
    }

    /// `flips[i]` swaps which endpoint of `E_k[i]` plays `u`.
    pub fn with_flips(f: Graph, ek: Vec<(usize, usize)>, h: Graph, uv: (usize, usize), flips: Vec<bool>) -> Result<Self> {
        if f.order() < 2 {
            return Err(Error::InvalidParameter("edge pockets need n >= 2".into()));
        }
        if ek.is_empty() {
            return Err(Error::InvalidParameter("E_k is empty".into()));
        }
        if flips.len() != ek.len() {
            return Err(Error::InvalidInput(format!("{} flips for {} edges", flips.len(), ek.len())));
        }
        if h.order() < 3 {
            return Err(Error::InvalidParameter("edge-pocket graph needs m >= 3".into()));
        }
        let sub = f.edge_induced_subgraph(&ek)?;
        let (u, v) = uv;
        if u >= h.order() || v >= h.order() || !h.has_edge(u, v) {
            return Err(Error::InvalidEdge(u, v));
        }
        if !removal_symmetric(&h, u, v)? {
            return Err(Error::AsymmetricPocket(u, v));
        }
        let ek = sub.edges.clone();
        Ok(EdgePocketSpec { f, ek, h, uv, flips, sub })
    }

    /// Pocket `K_2 ∨ H2` with the `K_2` edge as specified edge.
    pub fn with_k2(f: Graph, ek: Vec<(usize, usize)>, h2: &Graph) -> Result<Self> {
        let k2 = Graph::from_edges(2, &[(0, 1)])?;
        Self::new(f, ek, k2.join(h2), (0, 1))
    }

    pub fn f(&self) -> &Graph {
        &self.f
    }

    /// Edges normalised to `a < b`, in input order.
    pub fn ek(&self) -> &[(usize, usize)] {
        &self.ek
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    pub fn uv(&self) -> (usize, usize) {
        self.uv
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    pub fn n(&self) -> usize {
        self.f.order()
    }

    pub fn m(&self) -> usize {
        self.h.order()
    }

    pub fn k(&self) -> usize {
        self.ek.len()
    }

    /// The subgraph of `F` formed by `E_k`.
    pub fn ek_subgraph(&self) -> &EdgeInducedSubgraph {
        &self.sub
    }

    pub fn p(&self) -> usize {
        self.sub.p
    }

    pub fn r(&self) -> Option<usize> {
        self.sub.regularity
    }

    /// `H2 = H - {u, v}`.
    pub fn h2(&self) -> Graph {
        self.h.remove_vertices(&[self.uv.0, self.uv.1]).expect("u, v are vertices of H")
    }

    pub fn block(&self, i: usize) -> Range<usize> {
        let s = self.n() + i * (self.m() - 2);
        s..s + self.m() - 2
    }

    /// F-endpoints of edge `i` in the roles `(u, v)`.
    pub fn roles(&self, i: usize) -> (usize, usize) {
        let (a, b) = self.ek[i];
        if self.flips[i] {
            (b, a)
        } else {
            (a, b)
        }
    }

    pub fn validate(&self) -> AssumptionReport {
        let (u, v) = self.uv;
        AssumptionReport {
            specified_degree_full: self.h.degree(u) == self.m() - 1 && self.h.degree(v) == self.m() - 1,
            h_remainder_regular: self.h2().regularity(),
            ek_regular: self.r(),
            ek_spanning: self.p() == self.n(),
        }
    }

    pub fn require_full_degree(&self) -> Result<()> {
        let (u, v) = self.uv;
        let full = self.m() - 1;
        if self.h.degree(u) != full || self.h.degree(v) != full {
            return Err(Error::PreconditionViolation(format!(
                "specified edge endpoints have degrees {} and {}, the formulas need m - 1 = {full}",
                self.h.degree(u),
                self.h.degree(v)
            )));
        }
        Ok(())
    }

    /// Regularity of `E_k`'s subgraph, or a precondition error.
    pub fn require_regular_ek(&self) -> Result<usize> {
        self.r().ok_or_else(|| Error::PreconditionViolation("the subgraph formed by E_k is not regular".into()))
    }
}

/// Whether `H - u ≅ H - v`.
fn removal_symmetric(h: &Graph, u: usize, v: usize) -> Result<bool> {
    // Swapping u and v is an automorphism when their other neighbourhoods agree.
    let nu: Vec<usize> = h.neighbors(u).filter(|&x| x != v).collect();
    let nv: Vec<usize> = h.neighbors(v).filter(|&x| x != u).collect();
    if nu == nv {
        return Ok(true);
    }
    let hu = h.remove_vertices(&[u])?;
    let hv = h.remove_vertices(&[v])?;
    if distinguish(&hu, &hv).is_some() {
        return Ok(false);
    }
    if hu.order() > ISO_ORDER_LIMIT {
        return Err(Error::SizeLimitExceeded { order: hu.order(), limit: ISO_ORDER_LIMIT });
    }
    Ok(are_isomorphic(&hu, &hv)?.is_isomorphic())
}

/// Which of the spectral preconditions a spec satisfies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssumptionReport {
    pub specified_degree_full: bool,
    /// Degree of `H - v` (resp. `H - {u, v}`) when regular.
    pub h_remainder_regular: Option<usize>,
    pub ek_regular: Option<usize>,
    pub ek_spanning: bool,
}

pub fn build_vertex_pockets(spec: &VertexPocketSpec) -> Graph {
    let (n, m) = (spec.n(), spec.m());
    let order = n + spec.k() * (m - 1);
    let rest: Vec<usize> = (0..m).filter(|&x| x != spec.v).collect();
    let mut g = Graph::empty(order);
    for (a, b) in spec.f.edges() {
        g.set_edge(a, b, true);
    }
    for (i, &attach) in spec.vk.iter().enumerate() {
        let base = spec.block(i).start;
        for (x, &hx) in rest.iter().enumerate() {
            if spec.h.has_edge(spec.v, hx) {
                g.set_edge(attach, base + x, true);
            }
            for (y, &hy) in rest.iter().enumerate().skip(x + 1) {
                if spec.h.has_edge(hx, hy) {
                    g.set_edge(base + x, base + y, true);
                }
            }
        }
    }
    g
}

pub fn build_edge_pockets(spec: &EdgePocketSpec) -> Graph {
    let (n, m) = (spec.n(), spec.m());
    let (u, v) = spec.uv;
    let order = n + spec.k() * (m - 2);
    let rest: Vec<usize> = (0..m).filter(|&x| x != u && x != v).collect();
    let mut g = Graph::empty(order);
    for (a, b) in spec.f.edges() {
        g.set_edge(a, b, true);
    }
    for i in 0..spec.k() {
        let (fa, fb) = spec.roles(i);
        let base = spec.block(i).start;
        for (x, &hx) in rest.iter().enumerate() {
            if spec.h.has_edge(u, hx) {
                g.set_edge(fa, base + x, true);
            }
            if spec.h.has_edge(v, hx) {
                g.set_edge(fb, base + x, true);
            }
            for (y, &hy) in rest.iter().enumerate().skip(x + 1) {
                if spec.h.has_edge(hx, hy) {
                    g.set_edge(base + x, base + y, true);
                }
            }
        }
    }
    g
}

/// `F ∘ H`: a copy of `{v} ∨ H` on every vertex of `F`.
pub fn corona(f: &Graph, h: &Graph) -> Result<Graph> {
    let spec = VertexPocketSpec::with_apex(f.clone(), (0..f.order()).collect(), h)?;
    Ok(build_vertex_pockets(&spec))
}

/// `F ⋄ H`: a copy of `K_2 ∨ H` on every edge of `F`.
pub fn edge_corona(f: &Graph, h: &Graph) -> Result<Graph> {
    if f.edge_count() == 0 {
        return Err(Error::InvalidParameter("edge corona needs at least one edge".into()));
    }
    let spec = EdgePocketSpec::with_k2(f.clone(), f.edges(), h)?;
    Ok(build_edge_pockets(&spec))
}

/// A vertex- or edge-pocket spec as read from a JSON spec file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum PocketSpec {
    Vertex(VertexPocketSpec),
    Edge(EdgePocketSpec),
}

impl PocketSpec {
    pub fn build(&self) -> Graph {
        match self {
            PocketSpec::Vertex(s) => build_vertex_pockets(s),
            PocketSpec::Edge(s) => build_edge_pockets(s),
        }
    }

    pub fn validate(&self) -> AssumptionReport {
        match self {
            PocketSpec::Vertex(s) => s.validate(),
            PocketSpec::Edge(s) => s.validate(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawVertexSpec {
    #[serde(rename = "F")]
    f: Graph,
    #[serde(rename = "Vk")]
    vk: Vec<usize>,
    #[serde(rename = "H")]
    h: Graph,
    v: usize,
}

impl TryFrom<RawVertexSpec> for VertexPocketSpec {
    type Error = Error;
    fn try_from(r: RawVertexSpec) -> Result<Self> {
        VertexPocketSpec::new(r.f, r.vk, r.h, r.v)
    }
}

impl From<VertexPocketSpec> for RawVertexSpec {
    fn from(s: VertexPocketSpec) -> Self {
        RawVertexSpec { f: s.f, vk: s.vk, h: s.h, v: s.v }
    }
}

#[derive(Serialize, Deserialize)]
struct RawEdgeSpec {
    #[serde(rename = "F")]
    f: Graph,
    #[serde(rename = "Ek")]
    ek: Vec<(usize, usize)>,
    #[serde(rename = "H")]
    h: Graph,
    uv: (usize, usize),
    #[serde(default, skip_serializing_if = "Option::is_none")]
    flip: Option<Vec<bool>>,
}

impl TryFrom<RawEdgeSpec> for EdgePocketSpec {
    type Error = Error;
    fn try_from(r: RawEdgeSpec) -> Result<Self> {
        let flips = r.flip.unwrap_or_else(|| vec![false; r.ek.len()]);
        EdgePocketSpec::with_flips(r.f, r.ek, r.h, r.uv, flips)
    }
}

impl From<EdgePocketSpec> for RawEdgeSpec {
    fn from(s: EdgePocketSpec) -> Self {
        let flip = s.flips.iter().any(|&b| b).then(|| s.flips.clone());
        RawEdgeSpec { f: s.f, ek: s.ek, h: s.h, uv: s.uv, flip }
    }
}
