//! A deliberately plain second route to the reduced homology of an
//! independence complex: every independent set is enumerated by brute force
//! over vertex subsets, boundary matrices are dense, and each is brought to
//! full Smith normal form (with the divisibility chain) over `i128`.
//!
//! It shares no code with the facet-based path and is used to re-verify any
//! result that would be reported as anomalous.

use std::collections::HashMap;

use super::{Group, HomologyResult};
use crate::graphs::Graph;

/// Largest graph accepted; all `2^n` subsets are visited.
pub const MAX_VERTICES: usize = 20;

pub fn independence_homology(g: &Graph) -> HomologyResult {
    let n = g.vertex_count();
    assert!(n <= MAX_VERTICES, "reference homology limited to {MAX_VERTICES} vertices");
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w)).collect();

    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1u32 << n) {
        let independent = (0..n).all(|v| mask >> v & 1 == 0 || adj[v] & mask == 0);
        if independent {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    while by_size.len() > 1 && by_size.last().unwrap().is_empty() {
        by_size.pop();
    }
    // by_size[s] holds faces of dimension s - 1
    let index: Vec<HashMap<u32, usize>> =
        by_size.iter().map(|fs| fs.iter().enumerate().map(|(i, &m)| (m, i)).collect()).collect();

    let mut ranks = vec![0usize; by_size.len() + 1];
    let mut torsion: Vec<Vec<i128>> = vec![Vec::new(); by_size.len() + 1];
    for s in 1..by_size.len() {
        // ∂ from size-s faces to size-(s-1) faces
        let mut m = vec![vec![0i128; by_size[s].len()]; by_size[s - 1].len()];
        for (j, &face) in by_size[s].iter().enumerate() {
            let verts: Vec<usize> = (0..n).filter(|&v| face >> v & 1 == 1).collect();
            for (pos, &v) in verts.iter().enumerate() {
                let i = index[s - 1][&(face & !(1 << v))];
                m[i][j] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        let d = smith_diagonal(m);
        ranks[s] = d.len();
        torsion[s] = d.into_iter().filter(|&x| x > 1).collect();
    }

    let mut out = HomologyResult::zero();
    for s in 0..by_size.len() {
        let free = by_size[s].len() - ranks[s] - ranks[s + 1];
        let t = torsion[s + 1].iter().map(|&x| u64::try_from(x).expect("torsion fits u64"));
        out.add(s as i32 - 1, Group::new(free, t));
    }
    out
}

/// Full Smith normal form diagonal (`d₁ | d₂ | …`), positive entries only.
fn smith_diagonal(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: any nonzero entry of least absolute value
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.is_none_or(|(a, b)| m[i][j].abs() < m[a][b].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for r in m.iter_mut() {
            r.swap(t, pj);
        }
        let mut clean = false;
        while !clean {
            clean = true;
            for i in t + 1..rows {
                let q = m[i][t].div_euclid(m[t][t]);
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                    m.swap(t, i);
                }
            }
            for j in t + 1..cols {
                let q = m[t][j].div_euclid(m[t][t]);
                if q != 0 {
                    for r in m.iter_mut().skip(t) {
                        r[j] -= q * r[t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                    for r in m.iter_mut() {
                        r.swap(t, j);
                    }
                }
            }
            if clean {
                // divisibility: fold any entry not divisible by the pivot into row t
                'outer: for i in t + 1..rows {
                    for j in t + 1..cols {
                        if m[i][j] % m[t][t] != 0 {
                            for k in t..cols {
                                m[t][k] += m[i][k];
                            }
                            clean = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}
