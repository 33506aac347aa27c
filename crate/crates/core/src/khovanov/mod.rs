//! Link diagrams, the all-A state, and the extreme Khovanov groups read off
//! the independence complex of the state's circle graph.

mod diagram;
mod pretzel;
mod state;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use diagram::{LinkDiagram, Orientation};
pub use pretzel::pretzel_pd;
pub use state::{a_state, circle_graphs, AState, Endpoint};

use crate::chords::ChordDiagram;
use crate::complexes::{independence_complex, join_all, Group, HomologyResult, SimplicialComplex};
use crate::graphs::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KhovanovError {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("cannot orient component {component}: arc labels do not fix a direction")]
    OrientationAmbiguous { component: usize },
    #[error("circle graph is not bipartite")]
    NotBipartite,
}

/// Positive and negative crossing counts, circle count of the A-state, and
/// the lowest quantum grading `p - 2n - k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gradings {
    pub p: usize,
    pub n: usize,
    pub k: usize,
    pub jmin: i64,
}

impl Gradings {
    pub fn new(p: usize, n: usize, k: usize) -> Self {
        Gradings { p, n, k, jmin: p as i64 - 2 * n as i64 - k as i64 }
    }
}

pub fn jmin(d: &LinkDiagram) -> Result<Gradings, KhovanovError> {
    let (p, n) = d.crossing_signs()?;
    let k = a_state(d)?.circle_count();
    Ok(Gradings::new(p, n, k))
}

/// `Kh^{i, jmin}` for every `i` where it is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremeKhovanov {
    pub gradings: Gradings,
    pub groups: BTreeMap<i64, Group>,
    /// Reduced homology of the independence complex it came from.
    pub complex_homology: HomologyResult,
}

impl fmt::Display for ExtremeKhovanov {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j_min = {}", self.gradings.jmin)?;
        if self.groups.is_empty() {
            return write!(f, "; Kh^{{*,{}}} = 0", self.gradings.jmin);
        }
        for (i, g) in &self.groups {
            write!(f, "; Kh^{{{},{}}} = {}", i, self.gradings.jmin, g)?;
        }
        Ok(())
    }
}

/// The complex `I(D)`: the join over circles of each circle's independence complex.
pub fn state_complex(circles: &[Graph]) -> SimplicialComplex {
    let parts: Vec<SimplicialComplex> = circles.iter().map(independence_complex).collect();
    join_all(parts.iter())
}

/// Extreme groups from per-circle chord diagrams and the diagram's gradings.
/// Cohomology in degree `d` lands at `i = d + 1 - n`.
pub fn extreme_from_circles(circles: &[ChordDiagram], gradings: Gradings) -> ExtremeKhovanov {
    let graphs: Vec<Graph> = circles.iter().map(ChordDiagram::intersection_graph).collect();
    let complex_homology = state_complex(&graphs).homology();
    let groups = complex_homology
        .cohomology()
        .iter()
        .map(|(d, g)| (d as i64 + 1 - gradings.n as i64, g.clone()))
        .collect();
    ExtremeKhovanov { gradings, groups, complex_homology }
}

pub fn extreme_khovanov(d: &LinkDiagram) -> Result<ExtremeKhovanov, KhovanovError> {
    let gradings = jmin(d)?;
    let state = a_state(d)?;
    let circles: Vec<ChordDiagram> = circle_graphs(&state)?.into_iter().map(|(c, _)| c).collect();
    Ok(extreme_from_circles(&circles, gradings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordio::parse_pd;

    #[test]
    fn gradings_formula() {
        assert_eq!(Gradings::new(12, 5, 7).jmin, -5);
        assert_eq!(Gradings::new(17, 10, 2).jmin, -5);
        assert_eq!(jmin(&LinkDiagram::unknot()).unwrap(), Gradings::new(0, 0, 1));
    }

    #[test]
    fn unknot_extreme() {
        let kh = extreme_khovanov(&LinkDiagram::unknot()).unwrap();
        assert_eq!(kh.gradings.jmin, -1);
        assert_eq!(kh.groups, BTreeMap::from([(0, Group::free(1))]));
    }

    #[test]
    fn negative_trefoil_extreme() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let kh = extreme_khovanov(&d).unwrap();
        assert_eq!(kh.gradings, Gradings::new(0, 3, 3));
        assert_eq!(kh.groups, BTreeMap::from([(-3, Group::free(1))]));
    }

    #[test]
    fn pretzel_gradings() {
        let d = pretzel_pd(&[3, 4, 5, -5]);
        assert_eq!(jmin(&d).unwrap(), Gradings::new(12, 5, 7));
    }

    #[test]
    fn distant_unknot_lowers_jmin() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let a = extreme_khovanov(&d).unwrap();
        let b = extreme_khovanov(&d.with_distant_unknot()).unwrap();
        assert_eq!(b.gradings.k, a.gradings.k + 1);
        assert_eq!(b.gradings.jmin, a.gradings.jmin - 1);
        assert_eq!(b.groups, a.groups);
    }

    #[test]
    fn rendering() {
        let kh = extreme_khovanov(&pretzel_pd(&[3, 4, 5, -5])).unwrap();
        assert_eq!(kh.to_string(), "j_min = -5; Kh^{-5,-5} = Z");
    }
}
