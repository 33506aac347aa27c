use super::snf::{self, SparseRow};
use super::{Group, HomologyResult, SimplicialComplex};

/// A face as its sorted vertex list.
pub type Face = Vec<u32>;

/// Faces of one dimension, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLevel {
    pub dim: i32,
    pub faces: Vec<Face>,
}

impl FaceLevel {
    pub fn index_of(&self, f: &[u32]) -> Option<usize> {
        self.faces.binary_search_by(|g| g.as_slice().cmp(f)).ok()
    }
}

/// Yields face levels from the top dimension down to `-1` (the empty face),
/// deriving each level from the one above plus the facets of that size.
pub struct DescendingFaces<'a> {
    complex: &'a SimplicialComplex,
    next: Option<FaceLevel>,
}

impl<'a> DescendingFaces<'a> {
    pub fn new(complex: &'a SimplicialComplex) -> Self {
        let top = complex.dimension();
        let next = if top < 0 {
            Some(FaceLevel { dim: -1, faces: vec![Vec::new()] })
        } else {
            let mut faces: Vec<Face> =
                complex.facets().iter().filter(|f| f.len() as i32 == top + 1).cloned().collect();
            faces.sort();
            Some(FaceLevel { dim: top, faces })
        };
        DescendingFaces { complex, next }
    }
}

impl Iterator for DescendingFaces<'_> {
    type Item = FaceLevel;

    fn next(&mut self) -> Option<FaceLevel> {
        let cur = self.next.take()?;
        if cur.dim >= 0 {
            let d = cur.dim;
            let mut below: Vec<Face> = self
                .complex
                .facets()
                .iter()
                .filter(|f| f.len() as i32 == d)
                .cloned()
                .collect();
            for f in &cur.faces {
                for skip in 0..f.len() {
                    let mut g = f.clone();
                    g.remove(skip);
                    below.push(g);
                }
            }
            below.sort();
            below.dedup();
            self.next = Some(FaceLevel { dim: d - 1, faces: below });
        }
        Some(cur)
    }
}

/// Boundary of `upper` into `lower` (`lower.dim == upper.dim - 1`), one sparse
/// row per upper face; the coefficient of the face with vertex `i` removed is
/// `(-1)^i`.
pub fn boundary_rows(upper: &FaceLevel, lower: &FaceLevel) -> Vec<SparseRow<i64>> {
    debug_assert_eq!(upper.dim, lower.dim + 1);
    upper
        .faces
        .iter()
        .map(|f| {
            let mut row: SparseRow<i64> = (0..f.len())
                .map(|skip| {
                    let mut g = f.clone();
                    g.remove(skip);
                    let idx = lower.index_of(&g).expect("face closure is downward closed");
                    (idx as u32, if skip % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            row.sort_unstable_by_key(|(c, _)| *c);
            row
        })
        .collect()
}

/// Augmented integral chain complex: face lists for dimensions `-1..=dim`
/// and boundary maps `∂_d : C_d → C_{d-1}` for `d ≥ 0` (`∂_0` is the
/// augmentation onto the empty face).
#[derive(Clone, Debug)]
pub struct ChainComplexZ {
    levels: Vec<FaceLevel>,
}

impl ChainComplexZ {
    pub fn new(k: &SimplicialComplex) -> Self {
        let mut levels: Vec<FaceLevel> = DescendingFaces::new(k).collect();
        levels.reverse();
        ChainComplexZ { levels }
    }

    /// Top dimension (`-1` for the empty complex).
    pub fn dimension(&self) -> i32 {
        self.levels.last().map_or(-1, |l| l.dim)
    }

    pub fn faces(&self, dim: i32) -> &[Face] {
        self.level(dim).map_or(&[], |l| l.faces.as_slice())
    }

    fn level(&self, dim: i32) -> Option<&FaceLevel> {
        usize::try_from(dim + 1).ok().and_then(|i| self.levels.get(i))
    }

    /// `∂_dim` as rows indexed by `dim`-faces, columns by `(dim-1)`-faces.
    pub fn boundary(&self, dim: i32) -> Vec<SparseRow<i64>> {
        match (self.level(dim), self.level(dim - 1)) {
            (Some(u), Some(l)) => boundary_rows(u, l),
            _ => Vec::new(),
        }
    }

    /// Dense form of `∂_dim`, rows indexed by `(dim-1)`-faces.
    pub fn boundary_dense(&self, dim: i32) -> Vec<Vec<i64>> {
        let rows = self.boundary(dim);
        let mut m = vec![vec![0; rows.len()]; self.faces(dim - 1).len()];
        for (j, r) in rows.iter().enumerate() {
            for (i, v) in r {
                m[*i as usize][j] = *v;
            }
        }
        m
    }
}

/// Reduced integral homology from the facet list. Only two consecutive
/// face levels are alive at a time.
pub fn reduced_homology(k: &SimplicialComplex) -> HomologyResult {
    // per dimension d ≥ -1: face count, rank of ∂_d, nontrivial divisors of ∂_d
    let mut counts = std::collections::BTreeMap::new();
    let mut ranks = std::collections::BTreeMap::new();
    let mut divisors = std::collections::BTreeMap::new();
    let mut prev: Option<FaceLevel> = None;
    for level in DescendingFaces::new(k) {
        counts.insert(level.dim, level.faces.len());
        if let Some(upper) = prev.take() {
            let rows = boundary_rows(&upper, &level);
            let d = snf::divisors(&rows, level.faces.len());
            ranks.insert(upper.dim, d.rank);
            divisors.insert(upper.dim, d.small_factors());
        }
        prev = Some(level);
    }
    let mut out = HomologyResult::zero();
    for (&d, &f) in &counts {
        let r_here = ranks.get(&d).copied().unwrap_or(0);
        let r_above = ranks.get(&(d + 1)).copied().unwrap_or(0);
        let torsion = divisors.get(&(d + 1)).cloned().unwrap_or_default();
        out.add(d, Group::new(f - r_here - r_above, torsion));
    }
    out
}

/// Betti numbers of the augmented complex over `GF(p)`, keyed by degree.
pub fn reduced_betti_mod_p(k: &SimplicialComplex, p: i64) -> std::collections::BTreeMap<i32, usize> {
    let mut counts = std::collections::BTreeMap::new();
    let mut ranks = std::collections::BTreeMap::new();
    let mut prev: Option<FaceLevel> = None;
    for level in DescendingFaces::new(k) {
        counts.insert(level.dim, level.faces.len());
        if let Some(upper) = prev.take() {
            let rows = boundary_rows(&upper, &level);
            ranks.insert(upper.dim, snf::rank_mod_p(&rows, level.faces.len(), p));
        }
        prev = Some(level);
    }
    counts
        .iter()
        .map(|(&d, &f)| {
            (d, f - ranks.get(&d).copied().unwrap_or(0) - ranks.get(&(d + 1)).copied().unwrap_or(0))
        })
        .filter(|&(_, b)| b > 0)
        .collect()
}
