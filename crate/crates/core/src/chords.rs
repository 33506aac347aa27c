//! Chord diagrams: perfect matchings on `2n` points in clockwise circular
//! order, their intersection (circle) graphs, connected sums, linearity,
//! interlacing, and a dihedral canonical form.

use std::fmt;

use thiserror::Error;

use crate::graphs::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChordError {
    #[error("gap {gap} out of range for a diagram with {points} endpoints")]
    GapOutOfRange { gap: usize, points: usize },
    #[error("diagram is not linear")]
    NotLinear,
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
}

/// A chord diagram. Chords are numbered by their first endpoint; labels are
/// carried as names only and take no part in equality or canonical forms.
#[derive(Clone, Debug)]
pub struct ChordDiagram {
    partner: Vec<u32>,
    chords: Vec<(u32, u32)>,
    chord_at: Vec<u32>,
    labels: Vec<String>,
}

impl PartialEq for ChordDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.partner == other.partner
    }
}

impl Eq for ChordDiagram {}

impl ChordDiagram {
    pub fn empty() -> Self {
        Self::from_partner_unchecked(Vec::new(), None)
    }

    /// Builds a diagram from its endpoint involution.
    pub fn from_partner(partner: Vec<u32>) -> Result<Self, ChordError> {
        let m = partner.len();
        for (p, &q) in partner.iter().enumerate() {
            let q = q as usize;
            if q >= m || q == p || partner[q] as usize != p {
                return Err(ChordError::InvalidMatching(format!("position {p} is not properly paired")));
            }
        }
        Ok(Self::from_partner_unchecked(partner, None))
    }

    /// Builds a diagram from chord endpoint pairs covering `0..2n` exactly once.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self, ChordError> {
        let m = pairs.len() * 2;
        let mut partner = vec![u32::MAX; m];
        for &(a, b) in pairs {
            for x in [a, b] {
                if x as usize >= m || partner[x as usize] != u32::MAX {
                    return Err(ChordError::InvalidMatching(format!("endpoint {x} repeated or out of range")));
                }
            }
            if a == b {
                return Err(ChordError::InvalidMatching(format!("chord ({a},{b}) is a loop")));
            }
            partner[a as usize] = b;
            partner[b as usize] = a;
        }
        Self::from_partner(partner)
    }

    fn from_partner_unchecked(partner: Vec<u32>, labels: Option<Vec<String>>) -> Self {
        let mut chords = Vec::with_capacity(partner.len() / 2);
        let mut chord_at = vec![0; partner.len()];
        for (p, &q) in partner.iter().enumerate() {
            if (p as u32) < q {
                chord_at[p] = chords.len() as u32;
                chord_at[q as usize] = chords.len() as u32;
                chords.push((p as u32, q));
            }
        }
        let labels = labels.unwrap_or_else(|| (1..=chords.len()).map(|i| i.to_string()).collect());
        ChordDiagram { partner, chords, chord_at, labels }
    }

    /// Replaces the chord names (indexed like [`chords`](Self::chords)).
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.chord_count());
        self.labels = labels;
        self
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    /// Number of endpoints, `2n`.
    pub fn point_count(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// Chords as `(first, second)` endpoint positions, ordered by first endpoint.
    pub fn chords(&self) -> &[(u32, u32)] {
        &self.chords
    }

    pub fn partner(&self, pos: usize) -> usize {
        self.partner[pos] as usize
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Chord index at each endpoint position.
    pub fn word(&self) -> &[u32] {
        &self.chord_at
    }

    fn crosses(a: (u32, u32), b: (u32, u32)) -> bool {
        (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
    }

    /// The circle graph: a vertex per chord, an edge per crossing pair.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.chord_count();
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if Self::crosses(self.chords[i], self.chords[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g.with_labels(self.labels.clone())
    }

    /// Endpoint sequence read clockwise starting at gap `gap`, as positions.
    fn cut_at(&self, gap: usize) -> Vec<u32> {
        let m = self.point_count();
        (0..m).map(|i| ((gap + i) % m.max(1)) as u32).collect()
    }

    /// Rotation: position `p` moves to `p + k`.
    pub fn rotate(&self, k: usize) -> ChordDiagram {
        let m = self.point_count().max(1);
        self.moved(|p| (p + k) % m)
    }

    /// Reflection: position `p` moves to `2n - 1 - p`.
    pub fn reflect(&self) -> ChordDiagram {
        let m = self.point_count();
        self.moved(|p| m - 1 - p)
    }

    /// Applies a permutation of positions, keeping each chord's label.
    fn moved(&self, f: impl Fn(usize) -> usize) -> ChordDiagram {
        let pairs: Vec<(u32, u32)> =
            self.chords.iter().map(|&(a, b)| (f(a as usize) as u32, f(b as usize) as u32)).collect();
        let mut d = ChordDiagram::from_pairs(&pairs).expect("position permutation keeps a matching");
        d.labels = reorder_labels(&pairs, self.labels.clone(), &d);
        d
    }

    /// Dihedral canonical form.
    pub fn canonical_form(&self) -> CanonicalForm {
        let m = self.point_count();
        let mut best: Option<Vec<u32>> = None;
        for flip in [false, true] {
            for start in 0..m.max(1) {
                let seq: Vec<usize> = (0..m)
                    .map(|i| if flip { (start + m - i) % m } else { (start + i) % m })
                    .collect();
                let word = first_occurrence_word(&seq.iter().map(|&p| self.chord_at[p]).collect::<Vec<_>>());
                if best.as_ref().is_none_or(|b| word < *b) {
                    best = Some(word);
                }
            }
        }
        CanonicalForm { word: best.unwrap_or_default() }
    }
}

/// Renames symbols `1, 2, …` in order of first occurrence.
fn first_occurrence_word(seq: &[u32]) -> Vec<u32> {
    let mut names = std::collections::HashMap::new();
    seq.iter()
        .map(|s| {
            let next = names.len() as u32 + 1;
            *names.entry(*s).or_insert(next)
        })
        .collect()
}

/// Minimal relabelled word over all rotations and reflections.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub word: Vec<u32>,
}

impl CanonicalForm {
    pub fn to_diagram(&self) -> ChordDiagram {
        ChordDiagram::from_word(&self.word).expect("canonical words are valid")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.word.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl ChordDiagram {
    /// Diagram from a word of chord identifiers, each occurring exactly twice.
    pub fn from_word<T: Eq + std::hash::Hash + Clone + ToString>(word: &[T]) -> Result<Self, ChordError> {
        let mut first: std::collections::HashMap<T, usize> = std::collections::HashMap::new();
        let mut partner = vec![u32::MAX; word.len()];
        let mut order = Vec::new();
        for (p, s) in word.iter().enumerate() {
            match first.get(s) {
                None => {
                    first.insert(s.clone(), p);
                    order.push(s.clone());
                }
                Some(&q) => {
                    if partner[q] != u32::MAX {
                        return Err(ChordError::InvalidMatching(format!(
                            "label {} occurs more than twice",
                            s.to_string()
                        )));
                    }
                    partner[q] = p as u32;
                    partner[p] = q as u32;
                }
            }
        }
        if let Some(p) = partner.iter().position(|&x| x == u32::MAX) {
            return Err(ChordError::InvalidMatching(format!("label {} occurs once", word[p].to_string())));
        }
        let labels = order.iter().map(ToString::to_string).collect();
        Ok(Self::from_partner_unchecked(partner, Some(labels)))
    }
}

/// Connected sum at gaps `g1`, `g2`: each circle is cut at its gap and the two
/// resulting arcs are glued end to end, so no chord of one diagram meets a
/// chord of the other. Gap `g` sits between positions `g - 1` and `g`.
pub fn connected_sum(d1: &ChordDiagram, g1: usize, d2: &ChordDiagram, g2: usize) -> Result<ChordDiagram, ChordError> {
    for (d, g) in [(d1, g1), (d2, g2)] {
        if g > d.point_count() {
            return Err(ChordError::GapOutOfRange { gap: g, points: d.point_count() });
        }
    }
    let seq1 = d1.cut_at(g1);
    let seq2 = d2.cut_at(g2);
    let m1 = seq1.len();
    let mut pos1 = vec![0u32; m1];
    for (i, &p) in seq1.iter().enumerate() {
        pos1[p as usize] = i as u32;
    }
    let mut pos2 = vec![0u32; seq2.len()];
    for (i, &p) in seq2.iter().enumerate() {
        pos2[p as usize] = (m1 + i) as u32;
    }
    let mut pairs = Vec::with_capacity(d1.chord_count() + d2.chord_count());
    let mut labels: Vec<String> = Vec::new();
    for (i, &(a, b)) in d1.chords().iter().enumerate() {
        pairs.push((pos1[a as usize], pos1[b as usize]));
        labels.push(d1.labels[i].clone());
    }
    for (i, &(a, b)) in d2.chords().iter().enumerate() {
        pairs.push((pos2[a as usize], pos2[b as usize]));
        let mut l = d2.labels[i].clone();
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let mut d = ChordDiagram::from_pairs(&pairs)?;
    d.labels = reorder_labels(&pairs, labels, &d);
    Ok(d)
}

/// Labels given per input pair, re-indexed to the diagram's chord order.
fn reorder_labels(pairs: &[(u32, u32)], labels: Vec<String>, d: &ChordDiagram) -> Vec<String> {
    let mut out = vec![String::new(); d.chord_count()];
    for (&(a, _), l) in pairs.iter().zip(labels) {
        out[d.chord_at[a as usize] as usize] = l;
    }
    out
}

/// A circular arc of consecutive endpoint positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub start: usize,
    pub len: usize,
}

impl Arc {
    pub fn positions(&self, points: usize) -> impl Iterator<Item = usize> {
        let (start, len) = (self.start, self.len);
        (0..len).map(move |i| (start + i) % points.max(1))
    }
}

/// Two complementary arcs with one endpoint of every chord in each.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearWitness {
    pub a: Arc,
    pub b: Arc,
}

/// Searches all cut pairs for arcs witnessing linearity.
pub fn is_linear(d: &ChordDiagram) -> Option<LinearWitness> {
    let m = d.point_count();
    let n = d.chord_count();
    if m == 0 {
        return Some(LinearWitness { a: Arc { start: 0, len: 0 }, b: Arc { start: 0, len: 0 } });
    }
    // both arcs hold exactly n endpoints, so only the start of `a` varies
    for start in 0..m {
        let a = Arc { start, len: n };
        let mut inside = vec![false; m];
        for p in a.positions(m) {
            inside[p] = true;
        }
        if a.positions(m).all(|p| !inside[d.partner(p)]) {
            return Some(LinearWitness { a, b: Arc { start: (start + n) % m, len: n } });
        }
    }
    None
}

/// Superimposes two linear diagrams so every chord of one crosses every chord
/// of the other: the arcs are laid out as `a1, a2, b1, b2` around the circle.
/// The circle graph of the result is the graph join of the inputs' graphs.
pub fn interlace(d1: &ChordDiagram, d2: &ChordDiagram) -> Result<ChordDiagram, ChordError> {
    let w1 = is_linear(d1).ok_or(ChordError::NotLinear)?;
    let w2 = is_linear(d2).ok_or(ChordError::NotLinear)?;
    let (m1, m2) = (d1.point_count(), d2.point_count());
    // (source diagram, source position) in the new circular order
    let mut layout: Vec<(u8, usize)> = Vec::with_capacity(m1 + m2);
    layout.extend(w1.a.positions(m1).map(|p| (0, p)));
    layout.extend(w2.a.positions(m2).map(|p| (1, p)));
    layout.extend(w1.b.positions(m1).map(|p| (0, p)));
    layout.extend(w2.b.positions(m2).map(|p| (1, p)));
    let mut new_pos = [vec![0u32; m1], vec![0u32; m2]];
    for (i, &(s, p)) in layout.iter().enumerate() {
        new_pos[s as usize][p] = i as u32;
    }
    let mut pairs = Vec::new();
    let mut labels = Vec::new();
    for (i, &(a, b)) in d1.chords().iter().enumerate() {
        pairs.push((new_pos[0][a as usize], new_pos[0][b as usize]));
        labels.push(d1.labels[i].clone());
    }
    for (i, &(a, b)) in d2.chords().iter().enumerate() {
        pairs.push((new_pos[1][a as usize], new_pos[1][b as usize]));
        let mut l = d2.labels[i].clone();
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let mut d = ChordDiagram::from_pairs(&pairs)?;
    d.labels = reorder_labels(&pairs, labels, &d);
    Ok(d)
}

/// Diagram with `I ≃ S^dim`: the connected sum of `dim + 1` crossing pairs,
/// whose circle graph is `(dim + 1)·K₂`. `dim = -1` gives the empty diagram.
pub fn realize_sphere(dim: i32) -> ChordDiagram {
    assert!(dim >= -1, "sphere dimension must be at least -1");
    let gadget = ChordDiagram::from_word(&[1, 2, 1, 2]).unwrap();
    (0..=dim).fold(ChordDiagram::empty(), |acc, _| {
        let end = acc.point_count();
        connected_sum(&acc, end, &gadget, 0).expect("gap at the end is always valid")
    })
}
