//! Bundled small-graph catalogs and named graph literals.

use crate::error::{Error, Result};
use crate::graph::{generate, Graph, GraphKind};

const GRAPHS: [&str; 7] = [
    include_str!("../data/graphs1.g6"),
    include_str!("../data/graphs2.g6"),
    include_str!("../data/graphs3.g6"),
    include_str!("../data/graphs4.g6"),
    include_str!("../data/graphs5.g6"),
    include_str!("../data/graphs6.g6"),
    include_str!("../data/graphs7.g6"),
];

/// Largest order with a bundled catalog.
pub const CATALOG_MAX_ORDER: usize = GRAPHS.len();

/// Shrikhande graph in graph6.
pub const SHRIKHANDE_G6: &str = "OlfJHsHBGK_\\oHWKeBK_\\";
/// The 4 x 4 rook's graph `K_4 □ K_4` in graph6.
pub const ROOK_G6: &str = "O~`HW}GPHDaNaGPCcPWaN";

/// Raw graph6 text of all graphs of the given order up to isomorphism.
pub fn catalog_text(order: usize) -> Result<&'static str> {
    order
        .checked_sub(1)
        .and_then(|i| GRAPHS.get(i))
        .copied()
        .ok_or_else(|| Error::InvalidParameter(format!("no bundled catalog for order {order}")))
}

/// All graphs of the given order up to isomorphism.
pub fn catalog(order: usize) -> Result<Vec<Graph>> {
    catalog_text(order)?.lines().filter(|l| !l.trim().is_empty()).map(Graph::from_graph6).collect()
}

/// Regular graphs of order `1..=max_order` from the catalog.
pub fn regular_catalog(max_order: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for order in 1..=max_order {
        out.extend(catalog(order)?.into_iter().filter(Graph::is_regular));
    }
    Ok(out)
}

/// Cayley graph on `Z_4 x Z_4` with connection set `±(1,0), ±(0,1), ±(1,1)`.
pub fn shrikhande() -> Graph {
    let idx = |a: usize, b: usize| 4 * (a % 4) + b % 4;
    let mut g = Graph::empty(16);
    for a in 0..4 {
        for b in 0..4 {
            for (da, db) in [(1, 0), (0, 1), (1, 1)] {
                g.add_edge(idx(a, b), idx(a + da, b + db)).expect("distinct vertices");
            }
        }
    }
    g
}

/// `K_4 □ K_4`.
pub fn rook() -> Graph {
    let k4 = generate(GraphKind::Complete(4)).expect("K4");
    k4.cartesian_product(&k4)
}

fn sized(s: &str) -> Option<usize> {
    (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())).then(|| s.parse().ok()).flatten()
}

fn atom(s: &str) -> Result<Graph> {
    let bad = || Error::InvalidInput(format!("unknown graph literal `{s}`"));
    match s.to_ascii_lowercase().as_str() {
        "shrikhande" => return Ok(shrikhande()),
        "rook" => return Ok(rook()),
        "petersen" => return Graph::from_graph6("IheA@GUAo"),
        _ => {}
    }
    let (head, rest) = match (s.get(..1), s.get(1..)) {
        (Some(h), Some(r)) => (h, r),
        _ => return Err(bad()),
    };
    let kind = match head {
        "K" => match rest.split_once(',') {
            Some((a, b)) => GraphKind::CompleteBipartite(sized(a).ok_or_else(bad)?, sized(b).ok_or_else(bad)?),
            None => GraphKind::Complete(sized(rest).ok_or_else(bad)?),
        },
        "C" => GraphKind::Cycle(sized(rest).ok_or_else(bad)?),
        "P" => GraphKind::Path(sized(rest).ok_or_else(bad)?),
        "E" => GraphKind::Empty(sized(rest).ok_or_else(bad)?),
        _ => return Err(bad()),
    };
    generate(kind)
}

fn product(s: &str) -> Result<Graph> {
    let mut parts = s.split('#');
    let first = atom(parts.next().unwrap_or_default().trim())?;
    parts.try_fold(first, |g, p| Ok(g.cartesian_product(&atom(p.trim())?)))
}

fn union(s: &str) -> Result<Graph> {
    let mut parts = s.split('|');
    let first = product(parts.next().unwrap_or_default())?;
    parts.try_fold(first, |g, p| Ok(g.disjoint_union(&product(p)?)))
}

/// Parse a named graph literal.
///
/// Atoms are `Kn`, `Ka,b`, `Cn`, `Pn`, `En` (edgeless), `shrikhande`, `rook`
/// and `petersen`. `#` is the Cartesian product, `|` the disjoint union and
/// `+` the join, binding in that order.
pub fn named(s: &str) -> Result<Graph> {
    if s.trim().is_empty() {
        return Err(Error::InvalidInput("empty graph literal".into()));
    }
    let mut parts = s.split('+');
    let first = union(parts.next().unwrap_or_default())?;
    parts.try_fold(first, |g, p| Ok(g.join(&union(p)?)))
}

/// A named literal, or failing that a graph6 string.
pub fn parse_graph(s: &str) -> Result<Graph> {
    named(s).or_else(|named_err| Graph::from_graph6(s.trim()).map_err(|_| named_err))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        let sizes: Vec<usize> = (1..=7).map(|n| catalog(n).unwrap().len()).collect();
        assert_eq!(sizes, vec![1, 2, 4, 11, 34, 156, 1044]);
        assert!(catalog(8).is_err());
        assert!(catalog(0).is_err());
    }

    #[test]
    fn seed_literals_match_generators() {
        assert_eq!(Graph::from_graph6(SHRIKHANDE_G6).unwrap(), shrikhande());
        assert_eq!(Graph::from_graph6(ROOK_G6).unwrap(), rook());
        assert_eq!(shrikhande().regularity(), Some(6));
        assert_eq!(rook().regularity(), Some(6));
    }

    /// Every pair of vertices has `lambda` or `mu` common neighbours as it is adjacent or not.
    fn strongly_regular(g: &Graph, k: usize, lambda: usize, mu: usize) -> bool {
        let n = g.order();
        g.regularity() == Some(k)
            && (0..n).all(|a| {
                (a + 1..n).all(|b| {
                    let common = (0..n).filter(|&c| g.has_edge(a, c) && g.has_edge(b, c)).count();
                    common == if g.has_edge(a, b) { lambda } else { mu }
                })
            })
    }

    #[test]
    fn seeds_are_strongly_regular() {
        assert!(strongly_regular(&Graph::from_graph6(SHRIKHANDE_G6).unwrap(), 6, 2, 2));
        assert!(strongly_regular(&Graph::from_graph6(ROOK_G6).unwrap(), 6, 2, 2));
        assert!(strongly_regular(&named("petersen").unwrap(), 3, 0, 1));
    }

    #[test]
    fn literals() {
        assert_eq!(named("K2,3").unwrap(), generate(GraphKind::CompleteBipartite(2, 3)).unwrap());
        assert_eq!(named("K2+C4").unwrap().order(), 6);
        assert_eq!(named("K2+C4").unwrap().edge_count(), 1 + 4 + 8);
        assert_eq!(named("C6").unwrap().regularity(), Some(2));
        let two_k3 = named("K3|K3").unwrap();
        assert_eq!((two_k3.order(), two_k3.edge_count()), (6, 6));
        assert_eq!(named("C4#K2").unwrap().regularity(), Some(3));
        assert_eq!(named("petersen").unwrap().regularity(), Some(3));
        assert!(named("Q3").is_err());
        assert!(named("□").is_err());
        assert_eq!(parse_graph("Bw").unwrap(), named("K3").unwrap());
    }
}
