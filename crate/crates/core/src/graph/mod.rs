//! Simple undirected graphs with dense adjacency, standard families and
//! the graph operations used to assemble pocket graphs.

mod graph6;
mod iso;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::MatrixInt;

pub use graph6::{decode_graph6, encode_graph6, read_graph6_lines, Graph6Line};
pub use iso::{are_isomorphic, distinguish, is_isomorphism, IsoOutcome, NonIsomorphismWitness, ISO_ORDER_LIMIT};

/// A simple undirected loop-free graph. Vertex order is significant and is
/// preserved by every construction in this crate.
#[derive(Clone)]
pub struct Graph {
    order: usize,
    adj: Vec<bool>,
    labels: Option<Vec<String>>,
}

/// Standard graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteBipartite(usize, usize),
    Empty(usize),
}

/// Adjacency, degree and signless Laplacian matrices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMatrices {
    pub a: MatrixInt,
    pub d: MatrixInt,
    pub q: MatrixInt,
}

/// The subgraph of `F` spanned by a chosen edge set.
#[derive(Debug, Clone)]
pub struct EdgeInducedSubgraph {
    /// The subgraph on its own vertex set, relabelled `0..p` in increasing F order.
    pub graph: Graph,
    /// F-vertex ids of the subgraph's vertices, ascending.
    pub vertices: Vec<usize>,
    /// Edge list in F-vertex ids, normalised to `a < b`, in input order.
    pub edges: Vec<(usize, usize)>,
    pub p: usize,
    pub regularity: Option<usize>,
}

pub fn generate(kind: GraphKind) -> Result<Graph> {
    match kind {
        GraphKind::Complete(n) => {
            positive(n, "complete")?;
            let mut g = Graph::empty(n);
            for i in 0..n {
                for j in i + 1..n {
                    g.set_edge(i, j, true);
                }
            }
            Ok(g)
        }
        GraphKind::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!("cycle requires n >= 3, got {n}")));
            }
            let mut g = Graph::empty(n);
            for i in 0..n {
                g.set_edge(i, (i + 1) % n, true);
            }
            Ok(g)
        }
        GraphKind::Path(n) => {
            positive(n, "path")?;
            let mut g = Graph::empty(n);
            for i in 1..n {
                g.set_edge(i - 1, i, true);
            }
            Ok(g)
        }
        GraphKind::CompleteBipartite(a, b) => {
            positive(a, "complete-bipartite")?;
            positive(b, "complete-bipartite")?;
            Ok(Graph::empty(a).join(&Graph::empty(b)))
        }
        GraphKind::Empty(n) => {
            positive(n, "empty")?;
            Ok(Graph::empty(n))
        }
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!("{what} graph requires a positive size")))
    } else {
        Ok(())
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph { order, adj: vec![false; order * order], labels: None }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric 0/1 matrix with zero diagonal.
    pub fn from_adjacency(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput("adjacency matrix is not square".into()));
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 if i != j => g.adj[i * n + j] = true,
                    _ => return Err(Error::InvalidInput(format!("invalid adjacency entry at ({i},{j})"))),
                }
            }
        }
        if (0..n).any(|i| (0..n).any(|j| g.adj[i * n + j] != g.adj[j * n + i])) {
            return Err(Error::InvalidInput("adjacency matrix is not symmetric".into()));
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidInput("label count differs from graph order".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order && b < self.order && self.adj[a * self.order + b]
    }

    pub(crate) fn set_edge(&mut self, a: usize, b: usize, present: bool) {
        let n = self.order;
        self.adj[a * n + b] = present;
        self.adj[b * n + a] = present;
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.order {
            return Err(Error::InvalidVertex(a));
        }
        if b >= self.order {
            return Err(Error::InvalidVertex(b));
        }
        if a == b {
            return Err(Error::InvalidEdge(a, b));
        }
        self.set_edge(a, b, true);
        Ok(())
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.order;
        (0..n).filter(move |&j| self.adj[v * n + j])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.adj[a * n + b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&x| x).count() / 2
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regularity(&self) -> Option<usize> {
        let degs = self.degrees();
        let first = *degs.first()?;
        degs.iter().all(|&d| d == first).then_some(first)
    }

    pub fn is_regular(&self) -> bool {
        self.regularity().is_some()
    }

    pub fn complement(&self) -> Graph {
        let n = self.order;
        let mut g = Graph::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                g.set_edge(a, b, !self.has_edge(a, b));
            }
        }
        g
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.order;
        let mut g = Graph::empty(n1 + other.order);
        for (a, b) in self.edges() {
            g.set_edge(a, b, true);
        }
        for (a, b) in other.edges() {
            g.set_edge(n1 + a, n1 + b, true);
        }
        g
    }

    /// Join: disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.order;
        let mut g = self.disjoint_union(other);
        for a in 0..n1 {
            for b in 0..other.order {
                g.set_edge(a, n1 + b, true);
            }
        }
        g
    }

    /// Cartesian product; vertex `(a, x)` has index `a * |other| + x`,
    /// matching the Kronecker convention `A(G) (x) I + I (x) A(H)`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let n2 = other.order;
        let mut g = Graph::empty(self.order * n2);
        for a in 0..self.order {
            for (x, y) in other.edges() {
                g.set_edge(a * n2 + x, a * n2 + y, true);
            }
        }
        for (a, b) in self.edges() {
            for x in 0..n2 {
                g.set_edge(a * n2 + x, b * n2 + x, true);
            }
        }
        g
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        if let Some(&bad) = vertices.iter().find(|&&v| v >= self.order) {
            return Err(Error::InvalidVertex(bad));
        }
        let k = vertices.len();
        let mut g = Graph::empty(k);
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Deletes the listed vertices, keeping the remaining ones in order.
    pub fn remove_vertices(&self, removed: &[usize]) -> Result<Graph> {
        let keep: Vec<usize> = (0..self.order).filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.order];
        if perm.len() != self.order {
            return Err(Error::InvalidInput("permutation length differs from order".into()));
        }
        for &p in perm {
            if p >= self.order || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidInput("not a permutation".into()));
            }
        }
        self.induced_subgraph(perm)
    }

    pub fn adjacency_matrix(&self) -> MatrixInt {
        MatrixInt::from_fn(self.order, self.order, |i, j| BigInt::from(u8::from(self.has_edge(i, j))))
    }

    pub fn degree_matrix(&self) -> MatrixInt {
        let degs: Vec<BigInt> = self.degrees().into_iter().map(BigInt::from).collect();
        MatrixInt::diagonal(&degs)
    }

    /// `Q(G) = D(G) + A(G)`.
    pub fn signless_laplacian(&self) -> MatrixInt {
        &self.degree_matrix() + &self.adjacency_matrix()
    }

    pub fn matrices(&self) -> GraphMatrices {
        let a = self.adjacency_matrix();
        let d = self.degree_matrix();
        let q = &d + &a;
        GraphMatrices { a, d, q }
    }

    /// Vertex-edge incidence matrix, columns in `edges()` order. `R R^T = Q`.
    pub fn incidence_matrix(&self) -> MatrixInt {
        let edges = self.edges();
        let mut r = MatrixInt::zeros(self.order, edges.len());
        for (c, &(a, b)) in edges.iter().enumerate() {
            r[(a, c)] = BigInt::from(1);
            r[(b, c)] = BigInt::from(1);
        }
        r
    }

    /// The subgraph formed by `edges` and their endpoints.
    pub fn edge_induced_subgraph(&self, edges: &[(usize, usize)]) -> Result<EdgeInducedSubgraph> {
        let mut normalised = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if !self.has_edge(a, b) {
                return Err(Error::InvalidEdge(a, b));
            }
            let e = (a.min(b), a.max(b));
            if normalised.contains(&e) {
                return Err(Error::InvalidInput(format!("duplicate edge {}-{}", e.0, e.1)));
            }
            normalised.push(e);
        }
        let mut vertices: Vec<usize> = normalised.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let index = |v: usize| vertices.binary_search(&v).expect("endpoint present");
        let mut graph = Graph::empty(vertices.len());
        for &(a, b) in &normalised {
            graph.set_edge(index(a), index(b), true);
        }
        let regularity = graph.regularity();
        Ok(EdgeInducedSubgraph { p: vertices.len(), graph, vertices, edges: normalised, regularity })
    }

    /// Edge list as whitespace-separated `i-j` pairs.
    pub fn to_edge_list(&self) -> String {
        self.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ")
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        decode_graph6(text)
    }
}

/// Parses whitespace- or comma-separated `i-j` pairs.
pub fn parse_edge_list(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|tok| {
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| Error::InvalidInput(format!("edge token `{tok}` is not of the form i-j")))?;
            let parse = |s: &str| {
                s.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad vertex index in `{tok}`")))
            };
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[{}])", self.order, self.to_edge_list())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}

impl FromStr for Graph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Graph> {
        decode_graph6(s)
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&encode_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Graph, D::Error> {
        let s = String::deserialize(deserializer)?;
        decode_graph6(&s).map_err(serde::de::Error::custom)
    }
}
