//! Simple undirected graphs with word-parallel neighbor sets, bipartitions,
//! the cross-bipartition complement, and the homotopy reduction engine for
//! independence complexes.

mod bitset;
mod canon;
mod certificate;
mod reduce;

use std::collections::VecDeque;

pub use bitset::VertexSet;
pub use canon::CanonicalGraph;
pub use certificate::{certificate_homology, CertificateError, HomotopyCertificate};
pub use reduce::{delete_closed_neighborhood, delete_vertex, fold_moves, pendant_moves, reduce, Reduction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![VertexSet::new(n); n], labels: None }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a vertex: its label if present, else its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Adds the edge `u`–`v`. Loops are ignored so the graph stays simple.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Subgraph induced on `keep`, vertices renumbered in increasing order.
    /// Returns the subgraph and the original index of each new vertex.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.vertex_count()).collect();
        let mut new_of = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut g = Graph::new(old.len());
        for (i, &v) in old.iter().enumerate() {
            for w in self.adj[v].intersection(keep).iter() {
                g.add_edge(i, new_of[w]);
            }
        }
        if let Some(l) = &self.labels {
            g.labels = Some(old.iter().map(|&v| l[v].clone()).collect());
        }
        (g, old)
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut g = Graph::new(shift + other.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift);
        }
        if self.labels.is_some() || other.labels.is_some() {
            let labels = (0..self.vertex_count())
                .map(|v| self.label(v))
                .chain((0..other.vertex_count()).map(|v| other.label(v)))
                .collect();
            g.labels = Some(labels);
        }
        g
    }

    /// Graph join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut g = self.disjoint_union(other);
        for u in 0..shift {
            for v in 0..other.vertex_count() {
                g.add_edge(u, v + shift);
            }
        }
        g
    }

    /// Connected components of the subgraph induced on `within`, each as a
    /// vertex set, ordered by smallest vertex.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.vertex_count());
        let mut out = Vec::new();
        for s in within.iter() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::new(self.vertex_count());
            let mut queue = VecDeque::from([s]);
            seen.insert(s);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for w in self.adj[v].intersection(within).iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Complement within the same vertex set (all non-edges become edges).
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl Side {
    fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Two-coloring with no monochromatic edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    sides: Vec<Side>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn part(&self, side: Side) -> VertexSet {
        VertexSet::from_iter_with_capacity(
            self.sides.len(),
            self.sides.iter().enumerate().filter(|(_, &s)| s == side).map(|(v, _)| v),
        )
    }

    pub fn sizes(&self) -> (usize, usize) {
        let a = self.sides.iter().filter(|&&s| s == Side::A).count();
        (a, self.sides.len() - a)
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.sides.len() == g.vertex_count() && g.edges().iter().all(|&(u, v)| self.sides[u] != self.sides[v])
    }
}

/// BFS 2-coloring; the smallest vertex of each component goes to side A.
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let n = g.vertex_count();
    let mut side: Vec<Option<Side>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::A);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let here = side[v].unwrap();
            for w in g.neighbors(v).iter() {
                match side[w] {
                    None => {
                        side[w] = Some(here.other());
                        queue.push_back(w);
                    }
                    Some(t) if t == here => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Bipartition { sides: side.into_iter().map(Option::unwrap).collect() })
}

/// Cross-bipartition non-edges: `a`–`b` for `a` in A, `b` in B, `a ≁ b` in `g`.
/// This is the 1-skeleton of `I(g)` with the two side cliques removed.
pub fn complement_graph(g: &Graph, b: &Bipartition) -> Graph {
    debug_assert!(b.is_valid_for(g));
    let n = g.vertex_count();
    let mut c = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if b.side(u) != b.side(v) && !g.has_edge(u, v) {
                c.add_edge(u, v);
            }
        }
    }
    c.labels = g.labels.clone();
    c
}

/// `u` dominates `v` when `N(v) ⊆ N(u)`.
pub fn dominates(g: &Graph, u: usize, v: usize) -> bool {
    debug_assert_ne!(u, v);
    g.neighbors(v).is_subset(g.neighbors(u))
}

/// Number of connected components of `g` that contain at least one edge.
pub fn edged_component_count(g: &Graph) -> usize {
    g.components().iter().filter(|c| c.len() > 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_examples() {
        let b = is_bipartite(&Graph::cycle(6)).unwrap();
        assert_eq!(b.sizes(), (3, 3));
        assert!(is_bipartite(&Graph::complete(3)).is_none());
        let star = is_bipartite(&Graph::star(4)).unwrap();
        assert_eq!(star.sizes(), (1, 4));
        assert_eq!(star.side(0), Side::A);
    }

    #[test]
    fn component_roots_on_side_a() {
        let g = Graph::from_edges(5, [(1, 2), (3, 4)]);
        let b = is_bipartite(&g).unwrap();
        assert_eq!(b.side(0), Side::A);
        assert_eq!(b.side(1), Side::A);
        assert_eq!(b.side(3), Side::A);
        assert_eq!(b.side(4), Side::B);
    }

    #[test]
    fn complement_examples() {
        let g = Graph::complete_bipartite(3, 2);
        let b = is_bipartite(&g).unwrap();
        assert_eq!(complement_graph(&g, &b).edge_count(), 0);

        let e = Graph::new(5);
        let b = Bipartition { sides: vec![Side::A, Side::A, Side::B, Side::B, Side::B] };
        let c = complement_graph(&e, &b);
        assert_eq!(c, Graph::complete_bipartite(2, 3));

        let c6 = Graph::cycle(6);
        let b = is_bipartite(&c6).unwrap();
        let c = complement_graph(&c6, &b);
        assert_eq!(c.edge_count(), 3);
        // complementing again relative to the same bipartition gives back g
        assert_eq!(complement_graph(&c, &b), c6);
    }

    #[test]
    fn domination_examples() {
        let s = Graph::star(4);
        assert!(dominates(&s, 1, 2));
        assert!(!dominates(&s, 0, 1));
        let k2 = Graph::complete(2);
        assert!(!dominates(&k2, 0, 1));
        let g = Graph::from_edges(3, [(0, 1)]);
        assert!(dominates(&g, 0, 2));
        assert!(dominates(&g, 1, 2));
    }

    #[test]
    fn induced_and_components() {
        let g = Graph::path(5);
        let keep = VertexSet::from_iter_with_capacity(5, [0, 1, 3, 4]);
        let (h, map) = g.induced(&keep);
        assert_eq!(map, vec![0, 1, 3, 4]);
        assert_eq!(h.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(h.components().len(), 2);
        assert_eq!(edged_component_count(&Graph::from_edges(5, [(0, 1)])), 1);
    }
}
