//! Integer elimination for boundary matrices: a sparse unit-pivot phase
//! followed by a dense Smith-style diagonalization of whatever is left.
//!
//! Arithmetic first runs in checked `i64`; on overflow the whole matrix is
//! redone over `BigInt`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed, ToPrimitive};

/// A sparse row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow<T> = Vec<(u32, T)>;

#[derive(Debug)]
struct Overflow;

trait Coeff: Clone + Integer + Signed + CheckedMul + CheckedSub + std::fmt::Debug {}

impl Coeff for i64 {}

impl Coeff for BigInt {}

/// Rank and nontrivial diagonal entries (`> 1`) of the Smith form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Divisors {
    pub rank: usize,
    pub factors: Vec<BigInt>,
}

impl Divisors {
    /// Factors as machine integers. Torsion coefficients of simplicial
    /// complexes at the sizes handled here always fit.
    pub fn small_factors(&self) -> Vec<u64> {
        self.factors
            .iter()
            .map(|f| f.to_u64().expect("torsion coefficient exceeds u64"))
            .collect()
    }
}

/// Rank and invariant-factor multiset of the matrix with the given rows.
pub fn divisors(rows: &[SparseRow<i64>], ncols: usize) -> Divisors {
    match eliminate::<i64>(rows.to_vec(), ncols) {
        Ok((rank, factors)) => Divisors { rank, factors: factors.into_iter().map(BigInt::from).collect() },
        Err(Overflow) => {
            let big: Vec<SparseRow<BigInt>> =
                rows.iter().map(|r| r.iter().map(|(c, v)| (*c, BigInt::from(*v))).collect()).collect();
            let (rank, factors) = eliminate::<BigInt>(big, ncols).expect("BigInt arithmetic cannot overflow");
            Divisors { rank, factors }
        }
    }
}

fn is_unit<T: Coeff>(v: &T) -> bool {
    v.abs().is_one()
}

/// `q - f·p` over sorted sparse rows.
fn axpy<T: Coeff>(q: &[(u32, T)], f: &T, p: &[(u32, T)]) -> Result<SparseRow<T>, Overflow> {
    let mut out = Vec::with_capacity(q.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < q.len() || j < p.len() {
        let take_q = j == p.len() || (i < q.len() && q[i].0 < p[j].0);
        let take_p = i == q.len() || (j < p.len() && p[j].0 < q[i].0);
        if take_q {
            out.push(q[i].clone());
            i += 1;
        } else {
            let prod = f.checked_mul(&p[j].1).ok_or(Overflow)?;
            let v = if take_p {
                T::zero().checked_sub(&prod).ok_or(Overflow)?
            } else {
                let v = q[i].1.checked_sub(&prod).ok_or(Overflow)?;
                i += 1;
                v
            };
            if !v.is_zero() {
                out.push((p[j].0, v));
            }
            j += 1;
        }
    }
    Ok(out)
}

fn eliminate<T: Coeff>(mut rows: Vec<SparseRow<T>>, ncols: usize) -> Result<(usize, Vec<T>), Overflow> {
    let mut cols: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            cols[*c as usize].insert(r as u32);
        }
    }
    let mut rank = 0;
    loop {
        let mut progress = false;
        for r in 0..rows.len() {
            if rows[r].is_empty() {
                continue;
            }
            let pivot = rows[r]
                .iter()
                .filter(|(_, v)| is_unit(v))
                .min_by_key(|(c, _)| cols[*c as usize].len())
                .cloned();
            let Some((pc, pv)) = pivot else { continue };
            let pivot_row = std::mem::take(&mut rows[r]);
            let others: Vec<u32> = cols[pc as usize].iter().copied().filter(|&q| q as usize != r).collect();
            for q in others {
                let q = q as usize;
                let qv = rows[q].iter().find(|(c, _)| *c == pc).map(|(_, v)| v.clone()).unwrap();
                // pv is ±1, so its inverse is itself
                let f = qv.checked_mul(&pv).ok_or(Overflow)?;
                let updated = axpy(&rows[q], &f, &pivot_row)?;
                for (c, _) in &rows[q] {
                    cols[*c as usize].remove(&(q as u32));
                }
                for (c, _) in &updated {
                    cols[*c as usize].insert(q as u32);
                }
                rows[q] = updated;
            }
            for (c, _) in &pivot_row {
                cols[*c as usize].remove(&(r as u32));
            }
            rank += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    let rest: Vec<SparseRow<T>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    if rest.is_empty() {
        return Ok((rank, Vec::new()));
    }
    let used: Vec<u32> = rest.iter().flat_map(|r| r.iter().map(|(c, _)| *c)).collect::<BTreeSet<_>>().into_iter().collect();
    let mut dense = vec![vec![T::zero(); used.len()]; rest.len()];
    for (i, row) in rest.iter().enumerate() {
        for (c, v) in row {
            dense[i][used.binary_search(c).unwrap()] = v.clone();
        }
    }
    let diag = diagonalize(dense)?;
    let factors = diag.iter().filter(|d| !d.is_one()).cloned().collect();
    Ok((rank + diag.len(), factors))
}

/// Diagonalizes a dense matrix by unimodular row and column operations,
/// always pivoting on the entry of least absolute value. Returns the nonzero
/// diagonal entries as absolute values.
fn diagonalize<T: Coeff>(mut m: Vec<Vec<T>>) -> Result<Vec<T>, Overflow> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..nrows.min(ncols) {
        let Some((pi, pj)) = min_entry(&m, t..nrows, t..ncols) else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..ncols {
                    let prod = q.checked_mul(&m[t][j]).ok_or(Overflow)?;
                    m[i][j] = m[i][j].checked_sub(&prod).ok_or(Overflow)?;
                }
                dirty |= !m[i][t].is_zero();
            }
            for j in t + 1..ncols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let prod = q.checked_mul(&row[t]).ok_or(Overflow)?;
                    row[j] = row[j].checked_sub(&prod).ok_or(Overflow)?;
                }
                dirty |= !m[t][j].is_zero();
            }
            if !dirty {
                break;
            }
            // a remainder smaller than the pivot survived: move it to (t, t)
            let col_best = (t..nrows).filter(|&i| !m[i][t].is_zero()).min_by_key(|&i| m[i][t].abs());
            let row_best = (t..ncols).filter(|&j| !m[t][j].is_zero()).min_by_key(|&j| m[t][j].abs());
            let (ci, rj) = (col_best.unwrap(), row_best.unwrap());
            if m[ci][t].abs() <= m[t][rj].abs() {
                m.swap(t, ci);
            } else {
                for row in m.iter_mut() {
                    row.swap(t, rj);
                }
            }
        }
        out.push(m[t][t].abs());
    }
    Ok(out)
}

fn min_entry<T: Coeff>(
    m: &[Vec<T>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if m[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                best = Some((i, j));
                if m[i][j].abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// Rank over `GF(p)` for a small prime `p`.
pub fn rank_mod_p(rows: &[SparseRow<i64>], ncols: usize, p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| {
            let mut d = vec![0; ncols];
            for (c, v) in r {
                d[*c as usize] = v.rem_euclid(p);
            }
            d
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..m.len()).find(|&i| m[i][col] != 0) else { continue };
        m.swap(rank, pr);
        let inv = mod_inverse(m[rank][col], p);
        for j in col..ncols {
            m[rank][j] = m[rank][j] * inv % p;
        }
        for i in 0..m.len() {
            if i != rank && m[i][col] != 0 {
                let f = m[i][col];
                for j in col..ncols {
                    m[i][j] = (m[i][j] - f * m[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    let e = a.extended_gcd(&p);
    e.x.rem_euclid(p)
}
