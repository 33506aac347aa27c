//! Simplicial complexes stored by facets, independence complexes of graphs,
//! joins, and exact reduced integral (co)homology.

mod chain;
mod groups;
pub mod reference;
mod snf;

use std::collections::BTreeMap;

use crate::graphs::{Graph, VertexSet};

pub use chain::{boundary_rows, ChainComplexZ, DescendingFaces, Face, FaceLevel};
pub use groups::{prime_power_factors, Group, HomologyResult};
pub use snf::{divisors, rank_mod_p, Divisors, SparseRow};

/// A finite simplicial complex given by its maximal faces.
///
/// The complex with no facets is the empty complex: its only face is the
/// empty simplex, and its reduced homology is `Z` in degree `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex { vertex_count: 0, facets: Vec::new() }
    }

    /// Normalizes the input: vertices sorted within each facet, duplicates
    /// and non-maximal faces dropped, facets sorted. Empty facets are ignored.
    pub fn from_facets<I, F>(facets: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u32>,
    {
        let mut fs: Vec<Face> = facets
            .into_iter()
            .map(|f| {
                let mut v: Vec<u32> = f.into_iter().collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .filter(|f| !f.is_empty())
            .collect();
        // longest first so any containing facet is seen before the contained one
        fs.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        fs.dedup();
        let mut kept: Vec<Face> = Vec::new();
        for f in fs {
            if !kept.iter().any(|k| k.len() > f.len() && is_sorted_subset(&f, k)) {
                kept.push(f);
            }
        }
        kept.sort();
        let vertex_count = kept.iter().flat_map(|f| f.iter()).max().map_or(0, |&m| m as usize + 1);
        SimplicialComplex { vertex_count, facets: kept }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest facet size minus one; `-1` for the empty complex.
    pub fn dimension(&self) -> i32 {
        self.facets.iter().map(|f| f.len() as i32 - 1).max().unwrap_or(-1)
    }

    /// Number of faces per dimension, the empty face included at `-1`.
    pub fn f_vector(&self) -> BTreeMap<i32, usize> {
        DescendingFaces::new(self).map(|l| (l.dim, l.faces.len())).collect()
    }

    pub fn chain_complex(&self) -> ChainComplexZ {
        ChainComplexZ::new(self)
    }

    /// Reduced integral homology via Smith normal form.
    pub fn homology(&self) -> HomologyResult {
        chain::reduced_homology(self)
    }

    /// Reduced integral cohomology (universal coefficients).
    pub fn cohomology(&self) -> HomologyResult {
        self.homology().cohomology()
    }

    /// Reduced Betti numbers over `GF(p)`.
    pub fn betti_mod_p(&self, p: i64) -> BTreeMap<i32, usize> {
        chain::reduced_betti_mod_p(self, p)
    }

    /// Number of connected components of the underlying space.
    pub fn component_count(&self) -> usize {
        let n = self.vertex_count;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let mut used = vec![false; n];
        for f in &self.facets {
            for &v in f {
                used[v as usize] = true;
            }
            for w in f.windows(2) {
                let (a, b) = (find(&mut parent, w[0] as usize), find(&mut parent, w[1] as usize));
                parent[a] = b;
            }
        }
        (0..n).filter(|&v| used[v] && find(&mut parent, v) == v).count()
    }
}

fn is_sorted_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// The independence complex: faces are the independent vertex sets of `g`,
/// facets the maximal ones (enumerated as maximal cliques of the complement
/// with pivoting Bron–Kerbosch on bitsets). The graph on zero vertices gives
/// the empty complex.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let n = g.vertex_count();
    if n == 0 {
        return SimplicialComplex::empty();
    }
    let all = g.vertices();
    // non-neighbors of each vertex, itself excluded
    let free: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut s = all.difference(g.neighbors(v));
            s.remove(v);
            s
        })
        .collect();
    let mut facets = Vec::new();
    let mut current = Vec::new();
    bron_kerbosch(&free, &mut current, all, VertexSet::new(n), &mut facets);
    facets.sort();
    SimplicialComplex { vertex_count: n, facets }
}

fn bron_kerbosch(
    free: &[VertexSet],
    current: &mut Vec<u32>,
    candidates: VertexSet,
    mut excluded: VertexSet,
    out: &mut Vec<Face>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            let mut f = current.clone();
            f.sort_unstable();
            out.push(f);
        }
        return;
    }
    let pivot = candidates
        .union(&excluded)
        .iter()
        .max_by_key(|&u| free[u].intersection(&candidates).len())
        .unwrap();
    let mut rest = candidates.clone();
    for v in candidates.difference(&free[pivot]).iter() {
        current.push(v as u32);
        bron_kerbosch(free, current, rest.intersection(&free[v]), excluded.intersection(&free[v]), out);
        current.pop();
        rest.remove(v);
        excluded.insert(v);
    }
}

/// Join of two complexes; `k2`'s vertices are shifted past `k1`'s. The empty
/// complex is the unit.
pub fn join(k1: &SimplicialComplex, k2: &SimplicialComplex) -> SimplicialComplex {
    if k1.is_empty() {
        return k2.clone();
    }
    if k2.is_empty() {
        return k1.clone();
    }
    let shift = k1.vertex_count as u32;
    let mut facets = Vec::with_capacity(k1.facets.len() * k2.facets.len());
    for a in &k1.facets {
        for b in &k2.facets {
            let mut f = a.clone();
            f.extend(b.iter().map(|v| v + shift));
            facets.push(f);
        }
    }
    facets.sort();
    SimplicialComplex { vertex_count: k1.vertex_count + k2.vertex_count, facets }
}

/// Join of a sequence of complexes (the empty complex for no factors).
pub fn join_all<'a>(ks: impl IntoIterator<Item = &'a SimplicialComplex>) -> SimplicialComplex {
    ks.into_iter().fold(SimplicialComplex::empty(), |acc, k| join(&acc, k))
}
