//! Small-graph isomorphism: colour refinement seeded with induced-neighbourhood
//! invariants, followed by individualisation/backtracking on colour classes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by the backtracking search.
pub const ISO_ORDER_LIMIT: usize = 16;

/// How two graphs were shown to be non-isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NonIsomorphismWitness {
    DegreeSequence,
    RefinementDistinguisher,
    ExhaustedBacktracking,
    NotChecked,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `perm[i]` is the vertex of the second graph that vertex `i` of the first maps to.
    Isomorphic(Vec<usize>),
    NotIsomorphic(NonIsomorphismWitness),
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<IsoOutcome> {
    for g in [g1, g2] {
        if g.order() > ISO_ORDER_LIMIT {
            return Err(Error::SizeLimitExceeded { order: g.order(), limit: ISO_ORDER_LIMIT });
        }
    }
    if let Some(w) = distinguish(g1, g2) {
        return Ok(IsoOutcome::NotIsomorphic(w));
    }
    let union = Union::new(g1, g2);
    let colors = union.initial_colors();
    match union.search(colors) {
        Some(perm) => Ok(IsoOutcome::Isomorphic(perm)),
        None => Ok(IsoOutcome::NotIsomorphic(NonIsomorphismWitness::ExhaustedBacktracking)),
    }
}

/// Cheap non-isomorphism certificate without the order limit: degree
/// sequences, then refinement from induced-neighbourhood invariants.
pub fn distinguish(g1: &Graph, g2: &Graph) -> Option<NonIsomorphismWitness> {
    if g1.order() != g2.order() || g1.degree_sequence() != g2.degree_sequence() {
        return Some(NonIsomorphismWitness::DegreeSequence);
    }
    let union = Union::new(g1, g2);
    let colors = union.refine(union.initial_colors());
    (!union.balanced(&colors)).then_some(NonIsomorphismWitness::RefinementDistinguisher)
}

/// Checks that `perm` maps `g1` onto `g2` edge for edge.
pub fn is_isomorphism(g1: &Graph, g2: &Graph, perm: &[usize]) -> bool {
    let n = g1.order();
    n == g2.order()
        && perm.len() == n
        && (0..n).all(|i| (i + 1..n).all(|j| g1.has_edge(i, j) == g2.has_edge(perm[i], perm[j])))
}

struct Union<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl<'a> Union<'a> {
    fn new(g1: &'a Graph, g2: &'a Graph) -> Self {
        let n = g1.order();
        let mut adj: Vec<Vec<usize>> = (0..n).map(|v| g1.neighbors(v).collect()).collect();
        adj.extend((0..n).map(|v| g2.neighbors(v).map(|u| u + n).collect()));
        Union { g1, g2, n, adj }
    }

    /// Degree, edge count and component count of each vertex's induced neighbourhood.
    fn initial_colors(&self) -> Vec<usize> {
        let keys: Vec<(usize, usize, usize)> = (0..2 * self.n)
            .map(|v| {
                let (g, local) = if v < self.n { (self.g1, v) } else { (self.g2, v - self.n) };
                let nbrs: Vec<usize> = g.neighbors(local).collect();
                let sub = g.induced_subgraph(&nbrs).expect("neighbours are vertices");
                (nbrs.len(), sub.edge_count(), component_count(&sub))
            })
            .collect();
        relabel(&keys)
    }

    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let mut classes = count_classes(&colors);
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (0..2 * self.n)
                .map(|v| {
                    let mut nc: Vec<usize> = self.adj[v].iter().map(|&u| colors[u]).collect();
                    nc.sort_unstable();
                    (colors[v], nc)
                })
                .collect();
            colors = relabel(&sigs);
            let next = count_classes(&colors);
            if next == classes {
                return colors;
            }
            classes = next;
        }
    }

    fn balanced(&self, colors: &[usize]) -> bool {
        let mut counts: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            let e = counts.entry(c).or_default();
            if v < self.n {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
        counts.values().all(|(a, b)| a == b)
    }

    fn search(&self, colors: Vec<usize>) -> Option<Vec<usize>> {
        let colors = self.refine(colors);
        if !self.balanced(&colors) {
            return None;
        }
        let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in &colors[..self.n] {
            *class_size.entry(c).or_default() += 1;
        }
        let target = class_size.iter().filter(|(_, &s)| s > 1).min_by_key(|(_, &s)| s).map(|(&c, _)| c);
        let Some(target) = target else {
            let mut perm = vec![0; self.n];
            for x in 0..self.n {
                let y = (self.n..2 * self.n).find(|&y| colors[y] == colors[x])?;
                perm[x] = y - self.n;
            }
            return is_isomorphism(self.g1, self.g2, &perm).then_some(perm);
        };
        let x = (0..self.n).find(|&v| colors[v] == target)?;
        let fresh = colors.iter().max().map_or(0, |m| m + 1);
        for y in (self.n..2 * self.n).filter(|&y| colors[y] == target) {
            let mut next = colors.clone();
            next[x] = fresh;
            next[y] = fresh;
            if let Some(perm) = self.search(next) {
                return Some(perm);
            }
        }
        None
    }
}

fn relabel<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut uniq: Vec<K> = keys.to_vec();
    uniq.sort();
    uniq.dedup();
    keys.iter().map(|k| uniq.binary_search(k).expect("key present")).collect()
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn component_count(g: &Graph) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    #[test]
    fn c4_is_k22() {
        let c4 = generate(GraphKind::Cycle(4)).unwrap();
        let k22 = generate(GraphKind::CompleteBipartite(2, 2)).unwrap();
        match are_isomorphic(&c4, &k22).unwrap() {
            IsoOutcome::Isomorphic(perm) => assert!(is_isomorphism(&c4, &k22, &perm)),
            other => panic!("expected isomorphic, got {other:?}"),
        }
    }

    #[test]
    fn star_vs_c4_plus_k1() {
        let star = generate(GraphKind::CompleteBipartite(1, 4)).unwrap();
        let other = generate(GraphKind::Cycle(4)).unwrap().disjoint_union(&Graph::empty(1));
        assert_eq!(
            are_isomorphic(&star, &other).unwrap(),
            IsoOutcome::NotIsomorphic(NonIsomorphismWitness::DegreeSequence)
        );
    }

    #[test]
    fn c6_vs_two_triangles_refined_apart() {
        let c6 = generate(GraphKind::Cycle(6)).unwrap();
        let k3 = generate(GraphKind::Complete(3)).unwrap();
        assert_eq!(distinguish(&c6, &k3.disjoint_union(&k3)), Some(NonIsomorphismWitness::RefinementDistinguisher));
    }

    #[test]
    fn size_limit_enforced() {
        let big = Graph::empty(17);
        assert_eq!(
            are_isomorphic(&big, &big),
            Err(Error::SizeLimitExceeded { order: 17, limit: ISO_ORDER_LIMIT })
        );
    }

    #[test]
    fn relabelled_petersen_is_found() {
        let outer = generate(GraphKind::Cycle(5)).unwrap();
        let mut g = outer.disjoint_union(&Graph::empty(5));
        for i in 0..5 {
            g.add_edge(i, i + 5).unwrap();
            g.add_edge(i + 5, (i + 2) % 5 + 5).unwrap();
        }
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        let h = g.permuted(&perm).unwrap();
        let IsoOutcome::Isomorphic(w) = are_isomorphic(&g, &h).unwrap() else { panic!("not found") };
        assert!(is_isomorphism(&g, &h, &w));
    }
}
