//! Named inputs shipped in `fixtures/`.

use thiserror::Error;

use crate::chordio::{parse_dow, parse_dow_file, parse_facets, parse_pd};
use crate::chords::ChordDiagram;
use crate::complexes::SimplicialComplex;
use crate::graphs::Graph;
use crate::khovanov::{Gradings, LinkDiagram};

const P3455_PD: &str = include_str!("../fixtures/p3455.pd");
const TREFOIL_PD: &str = include_str!("../fixtures/trefoil.pd");
const RP2_FACETS: &str = include_str!("../fixtures/rp2.facets");
const CA_DOW: &str = include_str!("../fixtures/ca.dow");
const DPRIME_DOW: &str = include_str!("../fixtures/dprime.dow");

/// Crossing signs of the expanded diagram whose A-state is [`dprime_circles`].
pub const DPRIME_SIGNS: (usize, usize) = (17, 10);

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown fixture {0:?}")]
pub struct UnknownFixture(pub String);

#[derive(Clone, Debug)]
pub enum Fixture {
    Link(LinkDiagram),
    Chords(ChordDiagram),
    /// A-state circles given directly, with the diagram's gradings.
    State { circles: Vec<ChordDiagram>, gradings: Gradings },
    Graph(Graph),
    Complex(SimplicialComplex),
}

pub const NAMES: &[&str] = &["p3455", "trefoil", "rp2", "ca", "dprime", "star4+tree13"];

pub fn load(name: &str) -> Result<Fixture, UnknownFixture> {
    Ok(match name {
        "p3455" => Fixture::Link(pretzel_3455()),
        "trefoil" => Fixture::Link(trefoil()),
        "rp2" => Fixture::Complex(rp2()),
        "ca" => Fixture::Chords(ca()),
        "dprime" => Fixture::State { circles: dprime_circles(), gradings: dprime_gradings() },
        "star4+tree13" => Fixture::Graph(dprime_graph()),
        _ => return Err(UnknownFixture(name.to_string())),
    })
}

pub fn pretzel_3455() -> LinkDiagram {
    parse_pd(P3455_PD).expect("fixture parses")
}

pub fn trefoil() -> LinkDiagram {
    parse_pd(TREFOIL_PD).expect("fixture parses")
}

pub fn rp2() -> SimplicialComplex {
    parse_facets(RP2_FACETS).expect("fixture parses")
}

/// Six chords with circle graph `C₆`.
pub fn ca() -> ChordDiagram {
    parse_dow(CA_DOW).expect("fixture parses")
}

/// Two circles: one carrying a star with four leaves, the other a tree with
/// a root, four children and two leaves under each child.
pub fn dprime_circles() -> Vec<ChordDiagram> {
    parse_dow_file(DPRIME_DOW).expect("fixture parses")
}

pub fn dprime_gradings() -> Gradings {
    let (p, n) = DPRIME_SIGNS;
    Gradings::new(p, n, dprime_circles().len())
}

/// Disjoint union of the circle graphs of [`dprime_circles`].
pub fn dprime_graph() -> Graph {
    dprime_circles().iter().fold(Graph::new(0), |g, d| g.disjoint_union(&d.intersection_graph()))
}
