//! Naive homology oracle: the full face lattice, ranks over the rationals by
//! fraction-free elimination, torsion from a textbook Smith reduction. Shares
//! nothing with the library's homology code beyond the result types.

#![allow(dead_code)]

use std::collections::BTreeSet;

use chordhom::complexes::{Group, HomologyResult};
use chordhom::graphs::Graph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

/// Every face of the complex with the given facets, `∅` included, by size.
fn face_lattice(facets: &[Vec<u32>]) -> Vec<Vec<Vec<u32>>> {
    let mut all: BTreeSet<Vec<u32>> = BTreeSet::new();
    all.insert(Vec::new());
    for f in facets {
        let mut f = f.clone();
        f.sort_unstable();
        for mask in 1u64..(1u64 << f.len()) {
            all.insert((0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect());
        }
    }
    let top = all.iter().map(Vec::len).max().unwrap_or(0);
    let mut by_size = vec![Vec::new(); top + 1];
    for f in all {
        by_size[f.len()].push(f);
    }
    by_size
}

fn boundary(upper: &[Vec<u32>], lower: &[Vec<u32>]) -> Vec<Vec<BigInt>> {
    let mut m = vec![vec![BigInt::zero(); upper.len()]; lower.len()];
    for (j, f) in upper.iter().enumerate() {
        for i in 0..f.len() {
            let mut g = f.clone();
            g.remove(i);
            let row = lower.iter().position(|x| *x == g).expect("face of a face");
            m[row][j] = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        }
    }
    m
}

/// Rank over ℚ by Bareiss elimination.
pub fn rational_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Nonzero diagonal of a Smith-type reduction (not necessarily a divisor chain).
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !m[i][j].is_zero() && best.is_none_or(|(a, b)| m[i][j].abs() < m[a][b].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { return out };
            m.swap(t, pi);
            for r in m.iter_mut() {
                r.swap(t, pj);
            }
            let mut done = true;
            for i in t + 1..rows {
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..cols {
                    let v = &m[i][j] - &q * &m[t][j];
                    m[i][j] = v;
                }
                done &= m[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = m[t][j].div_floor(&m[t][t]);
                for r in m.iter_mut().skip(t) {
                    let v = &r[j] - &q * &r[t];
                    r[j] = v;
                }
                done &= m[t][j].is_zero();
            }
            if done {
                out.push(m[t][t].abs());
                break;
            }
        }
    }
    out
}

pub fn naive_complex_homology(facets: &[Vec<u32>]) -> HomologyResult {
    let faces = face_lattice(facets);
    // ∂ from size-s faces to size-(s-1) faces, s ≥ 1
    let mut ranks = vec![0usize; faces.len() + 1];
    let mut torsion: Vec<Vec<u64>> = vec![Vec::new(); faces.len() + 1];
    for s in 1..faces.len() {
        let b = boundary(&faces[s], &faces[s - 1]);
        ranks[s] = rational_rank(b.clone());
        torsion[s] = smith_diagonal(b)
            .into_iter()
            .filter(|d| *d > BigInt::one())
            .map(|d| d.to_u64().expect("small torsion"))
            .collect();
    }
    let mut h = HomologyResult::zero();
    for s in 0..faces.len() {
        let free = faces[s].len() - ranks[s] - ranks[s + 1];
        h.add(s as i32 - 1, Group::new(free, torsion[s + 1].iter().copied()));
    }
    h
}

/// All independent sets; the maximal ones are passed on as facets.
pub fn naive_independence_homology(g: &Graph) -> HomologyResult {
    let n = g.vertex_count();
    let independent: Vec<u32> = (0u32..1 << n)
        .filter(|m| (0..n).all(|u| (0..n).all(|v| !(m >> u & 1 == 1 && m >> v & 1 == 1 && g.has_edge(u, v)))))
        .collect();
    let facets: Vec<Vec<u32>> = independent
        .iter()
        .filter(|&&m| !independent.iter().any(|&o| o != m && o & m == m))
        .filter(|&&m| m != 0)
        .map(|&m| (0..n as u32).filter(|v| m >> v & 1 == 1).collect())
        .collect();
    naive_complex_homology(&facets)
}

pub fn random_graph(rng: &mut impl Rng, max_vertices: usize) -> Graph {
    let n = rng.gen_range(0..=max_vertices);
    let p: f64 = rng.gen_range(0.1..0.8);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}
