//! Command-line front end. [`run`] takes the argument list and returns the
//! exit status with everything written to stdout and stderr, so tests can
//! drive it directly.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::chordio::{self, emit_pd, parse_dow, parse_edge_list, parse_facets, parse_pd, ResultRecord};
use crate::chords::ChordDiagram;
use crate::complexes::{independence_complex, HomologyResult, SimplicialComplex};
use crate::fixtures::{self, Fixture};
use crate::graphs::{is_bipartite, reduce, Graph};
use crate::khovanov::{
    a_state, circle_graphs, extreme_from_circles, extreme_khovanov, jmin, pretzel_pd, state_complex, ExtremeKhovanov,
    Gradings, KhovanovError,
};
use crate::search::{self, SearchOptions, SearchReport, Task};

#[derive(Debug, Parser)]
#[command(name = "chordhom", version, about = "Extreme Khovanov homology via independence complexes of circle graphs")]
struct Cli {
    /// Worker threads for searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Reserved; every computation is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the circle graph of the input.
    Graph(InputArgs),
    /// Print the facets of the independence complex.
    Complex(InputArgs),
    /// Reduced integral homology of the independence complex.
    Homology(InputArgs),
    /// Crossing counts, circle count and lowest quantum grading.
    Jmin(InputArgs),
    /// Extreme Khovanov homology.
    Kh(InputArgs),
    /// PD code and gradings of a pretzel diagram.
    Pretzel {
        #[arg(allow_negative_numbers = true, required = true, value_delimiter = ',')]
        twists: Vec<i32>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive sweep over chord diagrams.
    Search(SearchArgs),
    /// Homotopy certificate from graph reductions.
    Reduce(InputArgs),
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
struct Sources {
    /// Double-occurrence word, inline or a `.dow` file.
    #[arg(long)]
    dow: Option<String>,
    /// PD code, inline or a `.pd` file.
    #[arg(long)]
    pd: Option<String>,
    /// Pretzel twists, comma separated.
    #[arg(long, allow_negative_numbers = true, value_delimiter = ',')]
    pretzel: Option<Vec<i32>>,
    /// Edge-list file or fixture name.
    #[arg(long)]
    graph: Option<String>,
    /// Facet-list file.
    #[arg(long)]
    facets: Option<String>,
    /// Shipped fixture by name.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Debug, Args)]
struct InputArgs {
    #[command(flatten)]
    source: Sources,
    /// Emit the JSON result record.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, default_value = "torsion")]
    task: Task,
    #[arg(long)]
    max_chords: usize,
    #[arg(long)]
    bipartite_only: bool,
    /// One representative per rotation/reflection class.
    #[arg(long)]
    dedupe: bool,
    #[arg(long, requires = "shard")]
    shards: Option<u64>,
    #[arg(long, requires = "shards")]
    shard: Option<u64>,
    /// Write the report as JSON to this path (`-` for stdout).
    #[arg(long)]
    json: Option<String>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(#[from] chordio::ParseError),
    #[error("{0}")]
    Khovanov(#[from] KhovanovError),
    #[error("{0}")]
    Fixture(#[from] fixtures::UnknownFixture),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Unsupported(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command)),
            Err(e) => Err(CliError::Usage(format!("cannot start {t} threads: {e}"))),
        },
        None => dispatch(cli.command),
    };
    match result {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read_or_inline(v: &str) -> Result<String, CliError> {
    if Path::new(v).is_file() {
        Ok(std::fs::read_to_string(v)?)
    } else {
        Ok(v.to_string())
    }
}

fn load_input(s: &Sources) -> Result<(String, Fixture), CliError> {
    if let Some(v) = &s.dow {
        return Ok((v.clone(), Fixture::Chords(parse_dow(&read_or_inline(v)?)?)));
    }
    if let Some(v) = &s.pd {
        return Ok((v.clone(), Fixture::Link(parse_pd(&read_or_inline(v)?)?)));
    }
    if let Some(t) = &s.pretzel {
        if t.contains(&0) {
            return Err(CliError::Usage("pretzel twists must be nonzero".into()));
        }
        let name = format!("pretzel {}", t.iter().map(i32::to_string).collect::<Vec<_>>().join(","));
        return Ok((name, Fixture::Link(pretzel_pd(t))));
    }
    if let Some(v) = &s.graph {
        if Path::new(v).is_file() {
            return Ok((v.clone(), Fixture::Graph(parse_edge_list(&std::fs::read_to_string(v)?)?)));
        }
        return match fixtures::load(v)? {
            Fixture::Graph(g) => Ok((v.clone(), Fixture::Graph(g))),
            _ => Err(CliError::Usage(format!("fixture {v:?} is not a graph"))),
        };
    }
    if let Some(v) = &s.facets {
        return Ok((v.clone(), Fixture::Complex(parse_facets(&std::fs::read_to_string(v)?)?)));
    }
    if let Some(v) = &s.fixture {
        return Ok((v.clone(), fixtures::load(v)?));
    }
    Err(CliError::Usage("no input given".into()))
}

/// Per-circle chord diagrams (for link inputs) or the single graph.
fn circle_diagrams(f: &Fixture) -> Result<Option<Vec<ChordDiagram>>, CliError> {
    Ok(match f {
        Fixture::Link(d) => Some(circle_graphs(&a_state(d)?)?.into_iter().map(|(c, _)| c).collect()),
        Fixture::State { circles, .. } => Some(circles.clone()),
        _ => None,
    })
}

fn input_graph(f: &Fixture) -> Result<Graph, CliError> {
    if let Some(cs) = circle_diagrams(f)? {
        return Ok(cs.iter().fold(Graph::new(0), |g, c| g.disjoint_union(&c.intersection_graph())));
    }
    match f {
        Fixture::Chords(c) => Ok(c.intersection_graph()),
        Fixture::Graph(g) => Ok(g.clone()),
        _ => Err(CliError::Unsupported("input has no circle graph".into())),
    }
}

fn input_complex(f: &Fixture) -> Result<SimplicialComplex, CliError> {
    if let Some(cs) = circle_diagrams(f)? {
        let gs: Vec<Graph> = cs.iter().map(ChordDiagram::intersection_graph).collect();
        return Ok(state_complex(&gs));
    }
    match f {
        Fixture::Complex(k) => Ok(k.clone()),
        _ => Ok(independence_complex(&input_graph(f)?)),
    }
}

fn input_khovanov(f: &Fixture) -> Result<ExtremeKhovanov, CliError> {
    match f {
        Fixture::Link(d) => Ok(extreme_khovanov(d)?),
        Fixture::State { circles, gradings } => Ok(extreme_from_circles(circles, *gradings)),
        _ => Err(CliError::Unsupported("Khovanov gradings need a link diagram".into())),
    }
}

fn input_gradings(f: &Fixture) -> Result<Gradings, CliError> {
    match f {
        Fixture::Link(d) => Ok(jmin(d)?),
        Fixture::State { gradings, .. } => Ok(*gradings),
        _ => Err(CliError::Unsupported("Khovanov gradings need a link diagram".into())),
    }
}

fn homology_lines(h: &HomologyResult) -> String {
    if h.is_acyclic() {
        return "all reduced groups vanish\n".to_string();
    }
    let mut s = String::new();
    for (d, g) in h.iter() {
        let _ = write!(s, "degree {d}: rank {}", g.rank);
        if !g.torsion.is_empty() {
            let _ = write!(s, ", torsion {:?}", g.torsion);
        }
        s.push('\n');
    }
    s
}

fn json_record(rec: ResultRecord) -> String {
    rec.to_json() + "\n"
}

fn dispatch(cmd: Command) -> Result<String, CliError> {
    match cmd {
        Command::Graph(a) => {
            let (name, f) = load_input(&a.source)?;
            let g = input_graph(&f)?;
            if a.json {
                let h = independence_complex(&g).homology();
                return Ok(json_record(ResultRecord::new(name, None, &h, None)));
            }
            let mut s = format!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
            match is_bipartite(&g) {
                Some(b) => {
                    let (x, y) = b.sizes();
                    let _ = writeln!(s, ", bipartite ({x}/{y})");
                }
                None => s.push_str(", not bipartite\n"),
            }
            for (u, v) in g.edges() {
                let _ = writeln!(s, "{} -- {}", g.label(u), g.label(v));
            }
            Ok(s)
        }
        Command::Complex(a) => {
            let (name, f) = load_input(&a.source)?;
            let k = input_complex(&f)?;
            if a.json {
                return Ok(json_record(ResultRecord::new(name, None, &k.homology(), None)));
            }
            let mut s = format!("dimension {}, {} facets\n", k.dimension(), k.facets().len());
            for facet in k.facets() {
                let v: Vec<String> = facet.iter().map(u32::to_string).collect();
                let _ = writeln!(s, "{}", v.join(" "));
            }
            Ok(s)
        }
        Command::Homology(a) => {
            let (name, f) = load_input(&a.source)?;
            let h = input_complex(&f)?.homology();
            if a.json {
                return Ok(json_record(ResultRecord::new(name, None, &h, None)));
            }
            Ok(homology_lines(&h))
        }
        Command::Jmin(a) => {
            let (name, f) = load_input(&a.source)?;
            let g = input_gradings(&f)?;
            if a.json {
                return Ok(json_record(ResultRecord::new(name, Some(g.jmin), &HomologyResult::zero(), None)));
            }
            Ok(format!("p = {}, n = {}, k = {}, j_min = {}\n", g.p, g.n, g.k, g.jmin))
        }
        Command::Kh(a) => {
            let (name, f) = load_input(&a.source)?;
            let kh = input_khovanov(&f)?;
            if a.json {
                let h = HomologyResult::from_groups(kh.groups.iter().map(|(&i, g)| (i as i32, g.clone())));
                return Ok(json_record(ResultRecord::new(name, Some(kh.gradings.jmin), &h, None)));
            }
            Ok(format!("{kh}\n"))
        }
        Command::Pretzel { twists, json } => {
            if twists.contains(&0) {
                return Err(CliError::Usage("pretzel twists must be nonzero".into()));
            }
            let d = pretzel_pd(&twists);
            let g = jmin(&d)?;
            if json {
                let name = format!("pretzel {}", twists.iter().map(i32::to_string).collect::<Vec<_>>().join(","));
                return Ok(json_record(ResultRecord::new(name, Some(g.jmin), &HomologyResult::zero(), None)));
            }
            Ok(format!("{}\np = {}, n = {}, k = {}, j_min = {}\n", emit_pd(&d), g.p, g.n, g.k, g.jmin))
        }
        Command::Reduce(a) => {
            let (name, f) = load_input(&a.source)?;
            let g = input_graph(&f)?;
            let r = reduce(&g);
            let cert = r.normalized();
            let residual: Vec<HomologyResult> =
                r.residuals.iter().map(|g| independence_complex(g).homology()).collect();
            let h = cert.homology_with(&residual).expect("every residual has homology");
            if a.json {
                return Ok(json_record(ResultRecord::new(name, None, &h, Some(cert.to_string()))));
            }
            let mut s = format!("{cert}\n");
            for (i, (g, rh)) in r.residuals.iter().zip(&residual).enumerate() {
                let labels: Vec<String> = (0..g.vertex_count()).map(|v| g.label(v)).collect();
                let _ = writeln!(s, "residual {i} on [{}]: {rh}", labels.join(" "));
            }
            Ok(s)
        }
        Command::Search(a) => {
            let opts = SearchOptions {
                task: a.task,
                bipartite_only: a.bipartite_only || a.task.needs_bipartite(),
                dedupe: a.dedupe,
            };
            let report: SearchReport = match (a.shards, a.shard) {
                (Some(count), Some(index)) => {
                    if count == 0 || index >= count {
                        return Err(CliError::Usage(format!("shard {index} out of range for {count} shards")));
                    }
                    (0..=a.max_chords)
                        .map(|n| search::run_sharded(opts, n, (index, count)))
                        .fold(SearchReport::default(), SearchReport::merge)
                }
                _ => search::run(opts, a.max_chords),
            };
            match a.json.as_deref() {
                Some("-") => Ok(report.to_json() + "\n"),
                Some(path) => {
                    std::fs::write(path, report.to_json())?;
                    Ok(report.summary())
                }
                None => Ok(report.summary()),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homology_of_crossing_pair() {
        let o = run(["chordhom", "homology", "--dow", "1 2 1 2"]);
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "degree 0: rank 1\n");
    }

    #[test]
    fn kh_of_pretzel() {
        let o = run(["chordhom", "kh", "--pretzel", "3,4,5,-5"]);
        assert_eq!(o.stdout, "j_min = -5; Kh^{-5,-5} = Z\n");
    }

    #[test]
    fn reduce_fixture() {
        let o = run(["chordhom", "reduce", "--graph", "star4+tree13"]);
        assert_eq!(o.stdout.lines().next(), Some("S(4)"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["chordhom"]).code, 2);
        assert_eq!(run(["chordhom", "homology"]).code, 2);
        assert_eq!(run(["chordhom", "homology", "--dow", "1 1", "--pd", "X(1,1,2,2)"]).code, 2);
        assert_eq!(run(["chordhom", "search", "--max-chords", "2", "--shards", "2", "--shard", "5"]).code, 2);
    }

    #[test]
    fn computation_errors_exit_1() {
        let o = run(["chordhom", "homology", "--dow", "1 2 1"]);
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("label"));
        assert_eq!(run(["chordhom", "kh", "--dow", "1 1"]).code, 1);
    }
}
