//! Extreme Khovanov homology through independence complexes of circle
//! graphs, with exhaustive checks over small chord diagrams.

pub mod chordio;
pub mod chords;
pub mod cli;
pub mod complexes;
pub mod fixtures;
pub mod graphs;
pub mod khovanov;
pub mod search;
