//! Text formats: double-occurrence words, PD codes, edge lists, facet lists,
//! and the JSON result record.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chords::ChordDiagram;
use crate::complexes::{HomologyResult, SimplicialComplex};
use crate::graphs::Graph;
use crate::khovanov::LinkDiagram;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("label {label:?} occurs {count} times, expected 2")]
    LabelCount { label: String, count: usize },
    #[error("arc {arc} occurs {count} times, expected 2")]
    ArcCount { arc: u32, count: usize },
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Parses one word; tokens are whitespace separated, `#` starts a comment.
pub fn parse_dow(text: &str) -> Result<ChordDiagram, ParseError> {
    let tokens: Vec<&str> = text.lines().flat_map(|l| strip_comment(l).split_whitespace()).collect();
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for t in &tokens {
        *counts.entry(t).or_default() += 1;
    }
    if let Some(t) = tokens.iter().find(|t| counts[**t] != 2) {
        return Err(ParseError::LabelCount { label: t.to_string(), count: counts[*t] });
    }
    Ok(ChordDiagram::from_word(&tokens).expect("counts already checked"))
}

/// One diagram per non-blank line.
pub fn parse_dow_file(text: &str) -> Result<Vec<ChordDiagram>, ParseError> {
    text.lines().filter(|l| !strip_comment(l).trim().is_empty()).map(parse_dow).collect()
}

/// Word with chords renamed `1..n` by first endpoint.
pub fn emit_dow(d: &ChordDiagram) -> String {
    let w: Vec<String> = d.word().iter().map(|c| (c + 1).to_string()).collect();
    w.join(" ")
}

/// Parses whitespace-separated `X(a,b,c,d)` tuples. The empty text is the
/// crossingless unknot.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, ParseError> {
    let cleaned: String = text.lines().map(strip_comment).collect::<Vec<_>>().join("\n");
    let bytes = cleaned.as_bytes();
    let mut crossings = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let err = |offset: usize, message: &str| ParseError::Syntax { offset, message: message.to_string() };
    loop {
        skip_ws(&mut i);
        if i == bytes.len() {
            break;
        }
        if bytes[i] != b'X' {
            return Err(err(i, "expected 'X'"));
        }
        i += 1;
        if bytes.get(i) != Some(&b'(') {
            return Err(err(i, "expected '('"));
        }
        i += 1;
        let mut t = [0u32; 4];
        for (k, slot) in t.iter_mut().enumerate() {
            skip_ws(&mut i);
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            *slot = cleaned[start..i].parse().map_err(|_| err(start, "expected a positive integer"))?;
            if *slot == 0 {
                return Err(err(start, "arc labels are positive"));
            }
            skip_ws(&mut i);
            let want = if k == 3 { b')' } else { b',' };
            if bytes.get(i) != Some(&want) {
                return Err(err(i, if k == 3 { "expected ')'" } else { "expected ','" }));
            }
            i += 1;
        }
        crossings.push(t);
    }
    let mut counts: HashMap<u32, usize> = HashMap::new();
    for t in &crossings {
        for a in t {
            *counts.entry(*a).or_default() += 1;
        }
    }
    let mut bad: Vec<(u32, usize)> = counts.into_iter().filter(|&(_, c)| c != 2).collect();
    bad.sort();
    if let Some(&(arc, count)) = bad.first() {
        return Err(ParseError::ArcCount { arc, count });
    }
    let free_loops = usize::from(crossings.is_empty());
    Ok(LinkDiagram::new(crossings, free_loops))
}

pub fn emit_pd(d: &LinkDiagram) -> String {
    let xs: Vec<String> =
        d.crossings().iter().map(|[a, b, c, e]| format!("X({a},{b},{c},{e})")).collect();
    xs.join(" ")
}

/// Edge list: first non-comment token is the vertex count, then `u v` pairs.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut nums = Vec::new();
    for line in text.lines() {
        for tok in strip_comment(line).split_whitespace() {
            let v: usize = tok.parse().map_err(|_| ParseError::Syntax { offset: 0, message: format!("bad number {tok:?}") })?;
            nums.push(v);
        }
    }
    let Some((&n, rest)) = nums.split_first() else {
        return Err(ParseError::Syntax { offset: 0, message: "missing vertex count".into() });
    };
    if rest.len() % 2 == 1 {
        return Err(ParseError::Syntax { offset: 0, message: "odd number of edge endpoints".into() });
    }
    let mut g = Graph::new(n);
    for e in rest.chunks(2) {
        if e[0] >= n || e[1] >= n {
            return Err(ParseError::Syntax { offset: 0, message: format!("edge {} {} out of range", e[0], e[1]) });
        }
        g.add_edge(e[0], e[1]);
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Facet list: one facet per line, vertex indices separated by whitespace.
pub fn parse_facets(text: &str) -> Result<SimplicialComplex, ParseError> {
    let mut facets = Vec::new();
    for line in text.lines() {
        let line = strip_comment(line);
        if line.trim().is_empty() {
            continue;
        }
        let f: Result<Vec<u32>, _> = line.split_whitespace().map(str::parse).collect();
        facets.push(f.map_err(|_| ParseError::Syntax { offset: 0, message: format!("bad facet line {line:?}") })?);
    }
    Ok(SimplicialComplex::from_facets(facets))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub degree: i32,
    pub rank: usize,
    pub torsion: Vec<u64>,
}

/// The JSON result record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub input: String,
    pub jmin: Option<i64>,
    pub homology: Vec<DegreeEntry>,
    pub certificate: Option<String>,
}

impl ResultRecord {
    pub fn new(input: impl Into<String>, jmin: Option<i64>, h: &HomologyResult, certificate: Option<String>) -> Self {
        let homology = h
            .iter()
            .map(|(degree, g)| DegreeEntry { degree, rank: g.rank, torsion: g.torsion.clone() })
            .collect();
        ResultRecord { input: input.into(), jmin, homology, certificate }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result records serialize")
    }
}
