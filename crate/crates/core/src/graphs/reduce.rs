use super::{Graph, HomotopyCertificate, VertexSet};

/// Outcome of [`reduce`]: a certificate whose `Unknown(i)` leaves refer to
/// `residuals[i]`, the irreducible pieces left over.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub certificate: HomotopyCertificate,
    pub residuals: Vec<Graph>,
}

impl Reduction {
    pub fn normalized(&self) -> HomotopyCertificate {
        self.certificate.normalize()
    }
}

/// Simplifies `I(g)` with moves that each preserve homotopy type:
///
/// - disjoint union becomes a join of the parts;
/// - a single vertex is a cone point (contractible);
/// - fold: if `N(u) ⊆ N(v)` for `u ≠ v`, delete `v`;
/// - pendant: if `N(v) = {u}`, the piece is `Σ I(g ∖ N[u])`;
/// - no vertices at all is `S^{-1}`.
///
/// Residual graphs keep the labels of `g` (or its vertex indices).
pub fn reduce(g: &Graph) -> Reduction {
    let labelled = match g.labels() {
        Some(_) => g.clone(),
        None => g.clone().with_labels((0..g.vertex_count()).map(|v| v.to_string()).collect()),
    };
    let mut residuals = Vec::new();
    let certificate = reduce_within(&labelled, labelled.vertices(), &mut residuals);
    Reduction { certificate, residuals }
}

fn reduce_within(g: &Graph, vs: VertexSet, residuals: &mut Vec<Graph>) -> HomotopyCertificate {
    if vs.is_empty() {
        return HomotopyCertificate::Sphere(-1);
    }
    let comps = g.components_within(&vs);
    if comps.len() > 1 {
        return HomotopyCertificate::Join(comps.into_iter().map(|c| reduce_within(g, c, residuals)).collect());
    }
    if vs.len() == 1 {
        return HomotopyCertificate::Contractible;
    }
    if let Some((_, v)) = find_fold(g, &vs) {
        let mut rest = vs;
        rest.remove(v);
        return reduce_within(g, rest, residuals);
    }
    if let Some((_, u)) = find_pendant(g, &vs) {
        let mut closed = g.neighbors(u).intersection(&vs);
        closed.insert(u);
        let rest = vs.difference(&closed);
        return HomotopyCertificate::Susp(Box::new(reduce_within(g, rest, residuals)));
    }
    residuals.push(g.induced(&vs).0);
    HomotopyCertificate::Unknown(residuals.len() - 1)
}

/// First pair `(u, v)`, `u ≠ v`, with `N(u) ⊆ N(v)` inside `vs`.
fn find_fold(g: &Graph, vs: &VertexSet) -> Option<(usize, usize)> {
    for u in vs.iter() {
        let nu = g.neighbors(u).intersection(vs);
        for v in vs.iter() {
            if u != v && nu.is_subset(&g.neighbors(v).intersection(vs)) {
                return Some((u, v));
            }
        }
    }
    None
}

/// First leaf `v` inside `vs`, with its unique neighbor `u`.
fn find_pendant(g: &Graph, vs: &VertexSet) -> Option<(usize, usize)> {
    vs.iter().find_map(|v| {
        let nv = g.neighbors(v).intersection(vs);
        (nv.len() == 1).then(|| (v, nv.first().unwrap()))
    })
}

/// All pairs `(u, v)` where the fold move may delete `v`.
pub fn fold_moves(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && g.neighbors(u).is_subset(g.neighbors(v)) {
                out.push((u, v));
            }
        }
    }
    out
}

/// All pairs `(v, u)` with `N(v) = {u}`.
pub fn pendant_moves(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.vertex_count())
        .filter(|&v| g.degree(v) == 1)
        .map(|v| (v, g.neighbors(v).first().unwrap()))
        .collect()
}

/// `g` with vertex `v` deleted.
pub fn delete_vertex(g: &Graph, v: usize) -> Graph {
    let mut keep = g.vertices();
    keep.remove(v);
    g.induced(&keep).0
}

/// `g ∖ N[u]`.
pub fn delete_closed_neighborhood(g: &Graph, u: usize) -> Graph {
    let mut closed = g.neighbors(u).clone();
    closed.insert(u);
    g.induced(&g.vertices().difference(&closed)).0
}
