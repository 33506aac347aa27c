use std::cmp::Ordering;

use super::Graph;

/// Isomorphism-invariant key of a graph: two graphs have equal keys iff they
/// are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalGraph {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Rebuilds the canonical representative.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        let mut k = 0;
        for p in 1..self.n {
            for q in 0..p {
                if self.bits[k / 64] >> (k % 64) & 1 == 1 {
                    g.add_edge(p, q);
                }
                k += 1;
            }
        }
        g
    }
}

/// Color refinement by degree then neighbor-color multisets until stable.
/// Colors are ranks of signatures, so the partition is itself invariant.
fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        colors = sigs.iter().map(|s| uniq.binary_search(s).unwrap()).collect();
        if uniq.len() == classes {
            return colors;
        }
        classes = uniq.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    slots: Vec<Vec<usize>>,
    order: Vec<usize>,
    used: Vec<bool>,
    current: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, cmp: Ordering) {
        let n = self.g.vertex_count();
        if pos == n {
            if self.best.is_none() || cmp == Ordering::Less {
                self.best = Some(self.current.clone());
            }
            return;
        }
        let candidates = self.slots[pos].clone();
        for v in candidates {
            if self.used[v] {
                continue;
            }
            let start = self.current.len();
            let mut c = cmp;
            let mut pruned = false;
            for q in 0..pos {
                let bit = self.g.has_edge(v, self.order[q]);
                self.current.push(bit);
                if c == Ordering::Equal {
                    if let Some(best) = &self.best {
                        c = bit.cmp(&best[self.current.len() - 1]);
                        if c == Ordering::Greater {
                            pruned = true;
                            break;
                        }
                    }
                }
            }
            if !pruned {
                self.used[v] = true;
                self.order.push(v);
                self.run(pos + 1, c);
                self.order.pop();
                self.used[v] = false;
            }
            self.current.truncate(start);
        }
    }
}

impl Graph {
    /// Lexicographically minimal lower-triangle adjacency string over all
    /// orderings compatible with the refined color partition.
    pub fn canonical(&self) -> CanonicalGraph {
        let n = self.vertex_count();
        let colors = refined_colors(self);
        let mut by_color: Vec<usize> = (0..n).collect();
        by_color.sort_by_key(|&v| (colors[v], v));
        let slots: Vec<Vec<usize>> = by_color
            .iter()
            .map(|&v| (0..n).filter(|&w| colors[w] == colors[v]).collect())
            .collect();
        let mut s = Search {
            g: self,
            slots,
            order: Vec::with_capacity(n),
            used: vec![false; n],
            current: Vec::new(),
            best: None,
        };
        s.run(0, Ordering::Equal);
        let best = s.best.unwrap_or_default();
        let mut bits = vec![0u64; best.len().div_ceil(64)];
        for (k, &b) in best.iter().enumerate() {
            if b {
                bits[k / 64] |= 1 << (k % 64);
            }
        }
        CanonicalGraph { n, bits }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        Graph::from_edges(g.vertex_count(), g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }

    #[test]
    fn isomorphic_graphs_share_key() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]);
        let h = relabel(&g, &[5, 3, 1, 0, 2, 4]);
        assert_eq!(g.canonical(), h.canonical());
        assert_eq!(g.canonical().to_graph().canonical(), g.canonical());
    }

    #[test]
    fn non_isomorphic_graphs_differ() {
        // same degree sequence, different graphs
        let two_triangles = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert_ne!(two_triangles.canonical(), Graph::cycle(6).canonical());
        assert_ne!(Graph::path(4).canonical(), Graph::star(3).canonical());
    }

    #[test]
    fn empty_graph() {
        assert_eq!(Graph::new(0).canonical().vertex_count(), 0);
    }
}
