use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Finitely generated abelian group `Z^rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_k`, with the
/// torsion coefficients kept as sorted prime powers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Group {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl Group {
    pub fn free(rank: usize) -> Self {
        Group { rank, torsion: Vec::new() }
    }

    /// Builds a group from arbitrary invariant factors; entries ≤ 1 are
    /// dropped and the rest split into prime powers.
    pub fn new(rank: usize, factors: impl IntoIterator<Item = u64>) -> Self {
        let mut torsion: Vec<u64> = factors.into_iter().flat_map(prime_power_factors).collect();
        torsion.sort_unstable();
        Group { rank, torsion }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    fn sum(&self, other: &Group) -> Group {
        Group::new(self.rank + other.rank, self.torsion.iter().chain(&other.torsion).copied())
    }

    fn tensor(&self, other: &Group) -> Group {
        let mut t = Vec::new();
        for _ in 0..other.rank {
            t.extend_from_slice(&self.torsion);
        }
        for _ in 0..self.rank {
            t.extend_from_slice(&other.torsion);
        }
        for &a in &self.torsion {
            for &b in &other.torsion {
                t.push(prime_power_gcd(a, b));
            }
        }
        Group::new(self.rank * other.rank, t)
    }

    fn tor(&self, other: &Group) -> Group {
        let t = self.torsion.iter().flat_map(|&a| other.torsion.iter().map(move |&b| prime_power_gcd(a, b)));
        Group::new(0, t)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Reduced (co)homology, one group per degree; only nonzero groups are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyResult {
    groups: BTreeMap<i32, Group>,
}

impl HomologyResult {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_groups(groups: impl IntoIterator<Item = (i32, Group)>) -> Self {
        let mut h = Self::zero();
        for (d, g) in groups {
            h.add(d, g);
        }
        h
    }

    /// Reduced homology of `S^dim` (for `dim = -1`, the empty complex).
    pub fn sphere(dim: i32) -> Self {
        Self::from_groups([(dim, Group::free(1))])
    }

    pub fn add(&mut self, degree: i32, g: Group) {
        if g.is_zero() {
            return;
        }
        let slot = self.groups.entry(degree).or_default();
        *slot = slot.sum(&g);
    }

    pub fn get(&self, degree: i32) -> Group {
        self.groups.get(&degree).cloned().unwrap_or_default()
    }

    pub fn rank(&self, degree: i32) -> usize {
        self.groups.get(&degree).map_or(0, |g| g.rank)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &Group)> {
        self.groups.iter().map(|(&d, g)| (d, g))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.groups.keys().copied()
    }

    /// All reduced groups vanish.
    pub fn is_acyclic(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.values().all(Group::is_free)
    }

    pub fn total_rank(&self) -> usize {
        self.groups.values().map(|g| g.rank).sum()
    }

    /// Nonzero only in `degree` (and there torsion-free of positive rank).
    pub fn concentrated_in(&self, degree: i32) -> bool {
        self.groups.len() == 1 && self.groups.get(&degree).is_some_and(|g| g.rank > 0 && g.is_free())
    }

    /// Reduced Euler characteristic `Σ (-1)^d rank H̃_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups.iter().map(|(&d, g)| if d.rem_euclid(2) == 0 { g.rank as i64 } else { -(g.rank as i64) }).sum()
    }

    /// Reduced cohomology by universal coefficients: free parts stay, torsion
    /// of `H_d` moves to `H^{d+1}`.
    pub fn cohomology(&self) -> HomologyResult {
        let mut out = HomologyResult::zero();
        for (&d, g) in &self.groups {
            out.add(d, Group::free(g.rank));
            out.add(d + 1, Group::new(0, g.torsion.iter().copied()));
        }
        out
    }

    /// Degree shift; `shift(1)` is suspension.
    pub fn shift(&self, by: i32) -> HomologyResult {
        HomologyResult { groups: self.groups.iter().map(|(&d, g)| (d + by, g.clone())).collect() }
    }

    /// Direct sum (reduced homology of a wedge).
    pub fn direct_sum(&self, other: &HomologyResult) -> HomologyResult {
        let mut out = self.clone();
        for (&d, g) in &other.groups {
            out.add(d, g.clone());
        }
        out
    }

    /// Künneth formula for joins:
    /// `H̃_{k+1}(X∗Y) = ⊕_{i+j=k} H̃_i X ⊗ H̃_j Y ⊕ ⊕_{i+j=k-1} Tor(H̃_i X, H̃_j Y)`.
    pub fn join(&self, other: &HomologyResult) -> HomologyResult {
        let mut out = HomologyResult::zero();
        for (&i, a) in &self.groups {
            for (&j, b) in &other.groups {
                out.add(i + j + 1, a.tensor(b));
                out.add(i + j + 2, a.tor(b));
            }
        }
        out
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "all reduced groups vanish");
        }
        let parts: Vec<String> = self.groups.iter().map(|(d, g)| format!("{d}: {g}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Splits `n > 1` into its prime-power factors; `0` and `1` give nothing.
pub fn prime_power_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
            }
            out.push(q);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn smallest_prime(n: u64) -> u64 {
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return p;
        }
        p += 1;
    }
    n
}

/// gcd of two prime powers (1 when the primes differ).
fn prime_power_gcd(a: u64, b: u64) -> u64 {
    if smallest_prime(a) == smallest_prime(b) {
        a.min(b)
    } else {
        1
    }
}
