//! Exhaustive sweeps over chord diagrams, checking homological conditions
//! that wedges of spheres must satisfy.
//!
//! Reports only ever state that no homological obstruction was found; a free
//! homology group does not make a complex a wedge of spheres.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chordio::emit_dow;
use crate::chords::ChordDiagram;
use crate::complexes::{independence_complex, reference, HomologyResult};
use crate::graphs::{complement_graph, edged_component_count, is_bipartite, CanonicalGraph, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    /// Torsion in reduced homology.
    Torsion,
    /// `I(G)` of a bipartite circle graph is homologically `S⁰` or connected.
    S0,
    /// Degree-1 concentrated bipartite cases have rank at most 2.
    Dim1,
}

impl Task {
    /// Whether the task's hypothesis restricts to bipartite graphs.
    pub fn needs_bipartite(self) -> bool {
        matches!(self, Task::S0 | Task::Dim1)
    }
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "torsion" => Ok(Task::Torsion),
            "s0" => Ok(Task::S0),
            "dim1" => Ok(Task::Dim1),
            _ => Err(format!("unknown task {s:?} (expected torsion, s0 or dim1)")),
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Task::Torsion => "torsion",
            Task::S0 => "s0",
            Task::Dim1 => "dim1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub task: Task,
    pub bipartite_only: bool,
    pub dedupe: bool,
}

impl SearchOptions {
    pub fn new(task: Task) -> Self {
        SearchOptions { task, bipartite_only: task.needs_bipartite(), dedupe: false }
    }

    fn filters_bipartite(&self) -> bool {
        self.bipartite_only || self.task.needs_bipartite()
    }
}

/// `(2n - 1)!!`, the number of perfect matchings on `2n` points.
pub fn matching_count(n: usize) -> u64 {
    (1..=n as u64).map(|k| 2 * k - 1).product()
}

/// The `index`-th matching in enumeration order: the lowest unmatched point is
/// paired with each later point in turn, recursively.
pub fn matching_at(n: usize, mut index: u64) -> ChordDiagram {
    let mut free: Vec<u32> = (0..2 * n as u32).collect();
    let mut digits = Vec::with_capacity(n);
    for level in 0..n {
        let radix = matching_count(n - level - 1);
        digits.push((index / radix) as usize);
        index %= radix;
    }
    let mut pairs = Vec::with_capacity(n);
    for d in digits {
        let a = free.remove(0);
        let b = free.remove(d);
        pairs.push((a, b));
    }
    ChordDiagram::from_pairs(&pairs).expect("decoded pairs form a matching")
}

/// True when `d` is the representative of its rotation/reflection class.
pub fn is_canonical_representative(d: &ChordDiagram) -> bool {
    let own: Vec<u32> = d.word().iter().map(|c| c + 1).collect();
    d.canonical_form().word == own
}

/// All matchings on `2n` points in a fixed order; with `dedupe`, one per class.
pub fn enumerate_diagrams(n: usize, dedupe: bool) -> impl Iterator<Item = ChordDiagram> {
    (0..matching_count(n)).map(move |i| matching_at(n, i)).filter(move |d| !dedupe || is_canonical_representative(d))
}

/// What the sweep learns about one graph isomorphism class.
#[derive(Clone, Debug)]
struct GraphFacts {
    bipartite: bool,
    homology: HomologyResult,
    complex_components: usize,
    edged_complement_components: Option<usize>,
    field_mismatch: bool,
}

fn graph_facts(g: &Graph) -> GraphFacts {
    let k = independence_complex(g);
    let homology = k.homology();
    let bip = is_bipartite(g);
    let edged_complement_components = bip.as_ref().map(|b| edged_component_count(&complement_graph(g, b)));
    // universal coefficients: dim H̃_d(GF(p)) = rank_d + #p-torsion in degrees d and d-1
    let field_mismatch = [2i64, 3].iter().any(|&p| {
        let betti = k.betti_mod_p(p);
        let predicted = |d: i32| {
            let t = |e: i32| homology.get(e).torsion.iter().filter(|&&q| q as i64 % p == 0).count();
            homology.rank(d) + t(d) + t(d - 1)
        };
        let degrees: BTreeSet<i32> = betti.keys().copied().chain(homology.degrees()).chain(homology.degrees().map(|d| d + 1)).collect();
        degrees.into_iter().any(|d| betti.get(&d).copied().unwrap_or(0) != predicted(d))
    });
    GraphFacts {
        bipartite: bip.is_some(),
        homology,
        complex_components: k.component_count(),
        edged_complement_components,
        field_mismatch,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub chords: usize,
    pub word: String,
    pub homology: String,
    pub reason: String,
    /// Whether the brute-force reference computation agrees.
    pub confirmed: bool,
}

/// Counters from a sweep; partial reports from shards merge into the full one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub task: Option<Task>,
    pub bipartite_only: bool,
    pub dedupe: bool,
    /// Matchings visited, per chord count.
    pub examined: BTreeMap<usize, u64>,
    /// Matchings that passed the filters, per chord count.
    pub considered: BTreeMap<usize, u64>,
    pub bipartite: BTreeMap<usize, u64>,
    /// Canonical words of the rotation/reflection classes seen, per chord count.
    pub canonical_classes: BTreeMap<usize, BTreeSet<String>>,
    pub torsion_free: u64,
    pub torsion_flags: u64,
    /// Diagram count by rank of `H̃₀`.
    pub b0_profile: BTreeMap<usize, u64>,
    /// Diagram count by rank of `H̃₁` among cases nonzero only in degree 1.
    pub dim1_ranks: BTreeMap<usize, u64>,
    pub max_edged_complement_components: usize,
    pub max_complex_components: usize,
    /// Classes where field Betti numbers disagree with the integral groups.
    pub field_mismatches: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl SearchReport {
    fn empty(opts: &SearchOptions) -> Self {
        SearchReport {
            task: Some(opts.task),
            bipartite_only: opts.filters_bipartite(),
            dedupe: opts.dedupe,
            ..Default::default()
        }
    }

    /// Associative, commutative merge.
    pub fn merge(mut self, other: SearchReport) -> SearchReport {
        fn add<K: Ord>(a: &mut BTreeMap<K, u64>, b: BTreeMap<K, u64>) {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
        }
        self.task = self.task.or(other.task);
        self.bipartite_only |= other.bipartite_only;
        self.dedupe |= other.dedupe;
        add(&mut self.examined, other.examined);
        add(&mut self.considered, other.considered);
        add(&mut self.bipartite, other.bipartite);
        for (n, s) in other.canonical_classes {
            self.canonical_classes.entry(n).or_default().extend(s);
        }
        self.torsion_free += other.torsion_free;
        self.torsion_flags += other.torsion_flags;
        add(&mut self.b0_profile, other.b0_profile);
        add(&mut self.dim1_ranks, other.dim1_ranks);
        self.max_edged_complement_components =
            self.max_edged_complement_components.max(other.max_edged_complement_components);
        self.max_complex_components = self.max_complex_components.max(other.max_complex_components);
        self.field_mismatches += other.field_mismatches;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort();
        self.counterexamples.dedup();
        self
    }

    pub fn total_examined(&self) -> u64 {
        self.examined.values().sum()
    }

    pub fn class_count(&self, n: usize) -> usize {
        self.canonical_classes.get(&n).map_or(0, BTreeSet::len)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Rank-≥3 degree-1 cases.
    pub fn dim1_excess(&self) -> u64 {
        self.dim1_ranks.range(3..).map(|(_, c)| c).sum()
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        let task = self.task.map_or("-".to_string(), |t| t.to_string());
        s += &format!("task {task}, bipartite only: {}, dedupe: {}\n", self.bipartite_only, self.dedupe);
        for (n, e) in &self.examined {
            s += &format!(
                "  n = {n}: examined {e}, considered {}, bipartite {}, classes {}\n",
                self.considered.get(n).unwrap_or(&0),
                self.bipartite.get(n).unwrap_or(&0),
                self.class_count(*n)
            );
        }
        s += &format!("  torsion-free {}, torsion flags {}\n", self.torsion_free, self.torsion_flags);
        s += &format!("  b0 profile {:?}\n", self.b0_profile);
        s += &format!("  degree-1 ranks {:?}\n", self.dim1_ranks);
        s += &format!(
            "  max edged complement components {}, max components of I(G) {}\n",
            self.max_edged_complement_components, self.max_complex_components
        );
        if self.counterexamples.is_empty() {
            s += "  no homological obstruction found\n";
        } else {
            for c in &self.counterexamples {
                s += &format!("  flagged [{}] {}: {} (confirmed: {})\n", c.word, c.reason, c.homology, c.confirmed);
            }
        }
        s
    }
}

/// Per-worker state: the report so far and a cache keyed by graph shape.
struct Worker {
    opts: SearchOptions,
    report: SearchReport,
    cache: HashMap<CanonicalGraph, GraphFacts>,
}

impl Worker {
    fn new(opts: SearchOptions) -> Self {
        Worker { opts, report: SearchReport::empty(&opts), cache: HashMap::new() }
    }

    fn visit(&mut self, n: usize, d: &ChordDiagram) {
        *self.report.examined.entry(n).or_default() += 1;
        let canonical = d.canonical_form();
        let own: Vec<u32> = d.word().iter().map(|c| c + 1).collect();
        if self.opts.dedupe && canonical.word != own {
            return;
        }
        let g = d.intersection_graph();
        let facts = self.cache.entry(g.canonical()).or_insert_with(|| graph_facts(&g)).clone();
        if facts.bipartite {
            *self.report.bipartite.entry(n).or_default() += 1;
        }
        if self.opts.filters_bipartite() && !facts.bipartite {
            return;
        }
        let r = &mut self.report;
        *r.considered.entry(n).or_default() += 1;
        r.canonical_classes.entry(n).or_default().insert(canonical.to_string());
        let h = &facts.homology;
        if h.is_torsion_free() {
            r.torsion_free += 1;
        } else {
            r.torsion_flags += 1;
        }
        *r.b0_profile.entry(h.rank(0)).or_default() += 1;
        if h.degrees().eq([1]) {
            *r.dim1_ranks.entry(h.rank(1)).or_default() += 1;
        }
        r.max_complex_components = r.max_complex_components.max(facts.complex_components);
        if let Some(c) = facts.edged_complement_components {
            r.max_edged_complement_components = r.max_edged_complement_components.max(c);
        }
        if facts.field_mismatch {
            r.field_mismatches += 1;
        }
        for reason in self.violations(&facts) {
            let confirmed = g.vertex_count() <= reference::MAX_VERTICES
                && reference::independence_homology(&g) == facts.homology;
            self.report.counterexamples.push(Counterexample {
                chords: n,
                word: emit_dow(d),
                homology: facts.homology.to_string(),
                reason,
                confirmed,
            });
        }
    }

    fn violations(&self, f: &GraphFacts) -> Vec<String> {
        let h = &f.homology;
        let mut out = Vec::new();
        match self.opts.task {
            Task::Torsion => {
                if !h.is_torsion_free() {
                    out.push("torsion in reduced homology".to_string());
                }
            }
            Task::S0 => {
                if h.rank(0) > 1 {
                    out.push(format!("rank of H0 is {}", h.rank(0)));
                }
                if h.rank(0) == 1 && h.degrees().any(|d| d != 0) {
                    out.push("H0 of rank 1 alongside other homology".to_string());
                }
                if f.complex_components > 2 {
                    out.push(format!("{} components", f.complex_components));
                }
            }
            Task::Dim1 => {
                if h.degrees().eq([1]) && h.rank(1) >= 3 {
                    out.push(format!("homology only in degree 1, of rank {}", h.rank(1)));
                }
                if f.edged_complement_components.is_some_and(|c| c >= 4) {
                    out.push("complement graph has four or more components with edges".to_string());
                }
            }
        }
        if f.field_mismatch {
            out.push("field ranks disagree with integral groups".to_string());
        }
        out
    }
}

/// Matchings per parallel work unit.
const CHUNK: u64 = 2048;

fn sweep(opts: SearchOptions, n: usize, indices: impl Fn(u64) -> bool + Sync) -> SearchReport {
    let total = matching_count(n);
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut w = Worker::new(opts);
            for i in c * CHUNK..((c + 1) * CHUNK).min(total) {
                if indices(i) {
                    w.visit(n, &matching_at(n, i));
                }
            }
            w.report
        })
        .reduce(|| SearchReport::empty(&opts), SearchReport::merge)
}

/// One shard: the matchings whose enumeration index is `index` mod `count`.
pub fn run_sharded(opts: SearchOptions, n: usize, shard: (u64, u64)) -> SearchReport {
    let (index, count) = shard;
    assert!(count > 0 && index < count, "shard index out of range");
    sweep(opts, n, |i| i % count == index)
}

/// Every matching with `0..=n_max` chords.
pub fn run(opts: SearchOptions, n_max: usize) -> SearchReport {
    (0..=n_max).map(|n| sweep(opts, n, |_| true)).fold(SearchReport::empty(&opts), SearchReport::merge)
}

pub fn verify_wedge_necessary(n_max: usize, bipartite_only: bool) -> SearchReport {
    run(SearchOptions { bipartite_only, ..SearchOptions::new(Task::Torsion) }, n_max)
}

pub fn verify_s0_or_connected(n_max: usize) -> SearchReport {
    run(SearchOptions::new(Task::S0), n_max)
}

pub fn verify_dim1_bound(n_max: usize) -> SearchReport {
    run(SearchOptions::new(Task::Dim1), n_max)
}
