use super::{KhovanovError, LinkDiagram};
use crate::chords::ChordDiagram;
use crate::graphs::{is_bipartite, Graph};

/// One side of a smoothed crossing: `side` 0 is the arc joining slots 0 and 1,
/// side 1 the arc joining slots 2 and 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Endpoint {
    pub crossing: usize,
    pub side: u8,
}

/// The all-A smoothing: circles as cyclic endpoint sequences and one chord
/// per crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AState {
    pub circles: Vec<Vec<Endpoint>>,
    /// `chords[x]` gives `(circle, position)` for both sides of crossing `x`.
    pub chords: Vec<[(usize, usize); 2]>,
    pub same_circle: Vec<bool>,
}

impl AState {
    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn is_adequate(&self) -> bool {
        !self.same_circle.iter().any(|&b| b)
    }
}

/// Smooths every crossing `X(a,b,c,d)` by joining slots `a,b` and `c,d`.
pub fn a_state(d: &LinkDiagram) -> Result<AState, KhovanovError> {
    d.validate()?;
    let partner = d.arc_partner()?;
    let c = d.crossing_count();
    let mut seen = vec![[false; 2]; c];
    let mut circles = Vec::new();
    let mut chords = vec![[(0, 0); 2]; c];
    for x0 in 0..c {
        for side0 in 0..2u8 {
            if seen[x0][side0 as usize] {
                continue;
            }
            let mut circle = Vec::new();
            // enter the smoothing arc at slot 2·side, leave at the paired slot
            let (mut x, mut s) = (x0, 2 * side0 as usize);
            loop {
                let side = (s / 2) as u8;
                if seen[x][side as usize] {
                    break;
                }
                seen[x][side as usize] = true;
                chords[x][side as usize] = (circles.len(), circle.len());
                circle.push(Endpoint { crossing: x, side });
                (x, s) = partner[x][s ^ 1];
            }
            circles.push(circle);
        }
    }
    circles.extend((0..d.free_loops()).map(|_| Vec::new()));
    let same_circle = chords.iter().map(|[a, b]| a.0 == b.0).collect();
    Ok(AState { circles, chords, same_circle })
}

/// Per circle: the chord diagram of chords with both ends on it (labelled by
/// 1-based crossing number) and its intersection graph.
pub fn circle_graphs(s: &AState) -> Result<Vec<(ChordDiagram, Graph)>, KhovanovError> {
    let out: Vec<(ChordDiagram, Graph)> = s
        .circles
        .iter()
        .map(|circle| {
            let word: Vec<usize> = circle
                .iter()
                .map(|e| e.crossing)
                .filter(|&x| s.same_circle[x])
                .map(|x| x + 1)
                .collect();
            let cd = ChordDiagram::from_word(&word).expect("same-circle chords occur twice");
            let g = cd.intersection_graph();
            (cd, g)
        })
        .collect();
    let whole = out.iter().fold(Graph::new(0), |acc, (_, g)| acc.disjoint_union(g));
    if is_bipartite(&whole).is_none() {
        return Err(KhovanovError::NotBipartite);
    }
    Ok(out)
}
