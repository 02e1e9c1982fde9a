//! Command-line front end. Every subcommand prints one JSON object on
//! standard output (or DOT / graph6 / edge-list text with `--format`).
//!
//! Exit codes: 0 affirmative or success, 1 negative verdict, 2 usage or
//! input error, 3 budget exhausted.

use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::enumerate::{self, CountOptions};
use crate::error::{Error, Result};
use crate::families::{self, Family};
use crate::graph::{self, io, GlueMode, Graph};
use crate::orientation::{self, Orientation, SearchConfig};
use crate::repnum::{self, RepresentationNumber, WordSearchConfig};
use crate::search::{Budget, SearchOutcome, Status};
use crate::words::{self, Pattern, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable naming the directory for default checkpoint files.
pub const CHECKPOINT_DIR_VAR: &str = "WORDREP_CHECKPOINT_DIR";

#[derive(Parser, Debug)]
#[command(name = "wordrep", version, about = "Word-representable graphs")]
struct Cli {
    #[command(flatten)]
    limits: Limits,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug, Clone)]
struct Limits {
    /// Node budget for each search (unlimited by default).
    #[arg(long, global = true)]
    max_nodes: Option<u64>,
    /// Time budget in seconds for each search (unlimited by default).
    #[arg(long, global = true)]
    max_seconds: Option<f64>,
    /// Worker threads for batch commands.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Graph6,
    Edges,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Does WORD represent GRAPH?
    CheckWord {
        word: String,
        #[arg(long)]
        graph: String,
    },
    /// The graph represented by WORD.
    WordGraph { word: String },
    /// Leftmost-occurrence orientation of the graph represented by WORD.
    OrientWord { word: String },
    /// Word-representability decision.
    Decide {
        graph: String,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
    },
    /// Find an orientation: semi-transitive by default.
    Orient {
        graph: String,
        /// Look for a transitive orientation instead.
        #[arg(long, conflicts_with = "coloring")]
        transitive: bool,
        /// Orient along a proper 3-coloring.
        #[arg(long)]
        coloring: bool,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
    },
    /// Find a representant: k-uniform with --k, pattern-avoiding with
    /// --pattern, otherwise the shortest uniform one.
    Represent {
        graph: String,
        #[arg(long, conflicts_with = "pattern")]
        k: Option<usize>,
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Representation number.
    Repnum { graph: String },
    /// Least number of concatenated permutations representing GRAPH.
    PermRepnum {
        graph: String,
        #[arg(long, default_value_t = 3)]
        max_p: usize,
    },
    /// Build a named family graph and its known representant.
    Family { spec: String },
    /// Apply a graph operation.
    Op {
        #[arg(value_enum)]
        kind: OpKind,
        graph: String,
        /// Second operand (cartesian, rooted, module, glue).
        other: Option<String>,
        /// Vertex for rooted (root of the second graph), module and glue.
        #[arg(long)]
        vertex: Option<usize>,
        /// Edge `u,v` for subdivide and contract.
        #[arg(long)]
        edge: Option<String>,
        /// Number of pieces for subdivide.
        #[arg(long, default_value_t = 2)]
        parts: usize,
        /// Vertex of the second graph for glue.
        #[arg(long)]
        other_vertex: Option<usize>,
        /// Join by a new edge instead of identifying vertices (glue).
        #[arg(long)]
        by_edge: bool,
    },
    /// Enumerate connected graphs on N vertices.
    Enumerate {
        n: usize,
        /// Count non-representable members.
        #[arg(long)]
        count_nonrep: bool,
        /// List minimal non-representable members.
        #[arg(long)]
        minimal: bool,
        /// Keep a resumable checkpoint, by default in $WORDREP_CHECKPOINT_DIR.
        #[arg(long, num_args = 0..=1)]
        checkpoint: Option<Option<PathBuf>>,
        /// Read the corpus from a graph6 file instead of generating it.
        #[arg(long)]
        ingest: Option<PathBuf>,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
    },
    /// Count pattern-avoiding representants up to a length.
    PatternCount {
        graph: String,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        max_len: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OpKind {
    Complement,
    Line,
    Cartesian,
    Rooted,
    Module,
    Apex,
    Subdivide,
    Contract,
    Glue,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses a word literal: comma-separated integers, or a compact digit
/// string in which a multi-digit letter is written in parentheses, as in
/// `12(10)3`.
pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    let letters: Vec<u32> = if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
            .collect::<Result<_>>()?
    } else {
        let mut out = Vec::new();
        let mut chars = s.chars();
        while let Some(c) = chars.next() {
            if c == '(' {
                let inner: String = chars.by_ref().take_while(|&d| d != ')').collect();
                out.push(inner.parse().map_err(|_| Error::Parse(format!("bad letter ({inner})")))?);
            } else {
                out.push(c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad character {c:?} in word")))?);
            }
        }
        out
    };
    if letters.is_empty() {
        return Err(Error::Parse("empty word".into()));
    }
    Word::new(letters)
}

fn word_text(w: &Word) -> String {
    w.letters().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Resolves `family:name:param`, `g6:STRING`, or a file holding an edge
/// list or a graph6 line.
pub fn parse_graph(arg: &str) -> Result<Graph> {
    if arg.starts_with("family:") {
        return families::make(arg.parse()?);
    }
    if let Some(g6) = arg.strip_prefix("g6:") {
        return io::from_graph6(g6);
    }
    let text = std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.split_whitespace().count() == 2 => io::from_edge_list_text(&text),
        Some(l) => io::from_graph6(l),
        None => Err(Error::Parse(format!("{arg}: empty graph file"))),
    }
}

fn parse_edge(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("edge must be u,v, got {s:?}")))?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex {t:?}")));
    Ok((p(a)?, p(b)?))
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edges(),
        "graph6": io::to_graph6(g),
    })
}

fn base(command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("verdict".into(), Value::Null);
    m.insert("exhaustive".into(), json!(true));
    m.insert("witness_word".into(), Value::Null);
    m.insert("witness_orientation".into(), Value::Null);
    m.insert("count".into(), Value::Null);
    m.insert("stats".into(), json!({ "nodes_expanded": 0 }));
    m
}

struct Reply {
    code: i32,
    body: Map<String, Value>,
    text: Option<String>,
}

impl Reply {
    fn json(code: i32, body: Map<String, Value>) -> Self {
        Reply { code, body, text: None }
    }
}

fn set_outcome<T>(m: &mut Map<String, Value>, o: &SearchOutcome<T>) -> i32 {
    m.insert("status".into(), json!(o.status));
    m.insert("verdict".into(), json!(o.verdict()));
    m.insert("exhaustive".into(), json!(o.status != Status::BudgetExhausted));
    m.insert("stats".into(), json!({ "nodes_expanded": o.nodes_expanded }));
    match o.status {
        Status::Witness => EXIT_OK,
        Status::Refuted => EXIT_NEGATIVE,
        Status::BudgetExhausted => EXIT_BUDGET,
    }
}

fn graph_reply(command: &str, g: &Graph, format: Format) -> Reply {
    let mut m = base(command);
    m.insert("graph".into(), graph_json(g));
    let text = match format {
        Format::Json => None,
        Format::Dot => Some(io::to_dot(g)),
        Format::Graph6 => Some(io::to_graph6(g) + "\n"),
        Format::Edges => Some(io::to_edge_list(g)),
    };
    Reply { code: EXIT_OK, body: m, text }
}

fn orientation_reply(mut m: Map<String, Value>, code: i32, o: Option<&Orientation>, format: Format) -> Reply {
    let text = match (o, format) {
        (Some(o), Format::Dot) => Some(o.to_dot()),
        _ => None,
    };
    if let Some(o) = o {
        m.insert("witness_orientation".into(), json!(o.arcs()));
    }
    Reply { code, body: m, text }
}

fn budget(l: &Limits) -> Budget {
    Budget {
        max_nodes: l.max_nodes,
        max_time: l.max_seconds.map(Duration::from_secs_f64),
    }
}

fn execute(cli: Cli) -> Result<Reply> {
    let l = &cli.limits;
    let b = budget(l);
    let wcfg = WordSearchConfig::with_budget(b);
    Ok(match cli.cmd {
        Command::CheckWord { word, graph } => {
            let w = parse_word(&word)?;
            let g = parse_graph(&graph)?;
            let represented = words::word_to_graph(&w)?;
            let ok = represented == g;
            let mut m = base("check-word");
            m.insert("verdict".into(), json!(ok));
            m.insert("represented_graph".into(), graph_json(&represented));
            if ok {
                m.insert("witness_word".into(), json!(word_text(&w)));
            }
            Reply::json(if ok { EXIT_OK } else { EXIT_NEGATIVE }, m)
        }
        Command::WordGraph { word } => {
            let w = parse_word(&word)?;
            let mut r = graph_reply("word-graph", &words::word_to_graph(&w)?, l.format);
            r.body.insert("uniformity".into(), json!(w.uniformity()));
            r
        }
        Command::OrientWord { word } => {
            let w = parse_word(&word)?;
            let o = orientation::word_to_orientation(&w)?;
            let mut m = base("orient-word");
            let st = orientation::is_semi_transitive(&o);
            m.insert("verdict".into(), json!(st));
            orientation_reply(m, if st { EXIT_OK } else { EXIT_NEGATIVE }, Some(&o), l.format)
        }
        Command::Decide { graph, max_vertices } => {
            let g = parse_graph(&graph)?;
            let o = orientation::decide_word_representable(&g, &SearchConfig { budget: b, max_vertices })?;
            let mut m = base("decide");
            let code = set_outcome(&mut m, &o);
            orientation_reply(m, code, o.witness.as_ref(), l.format)
        }
        Command::Orient {
            graph,
            transitive,
            coloring,
            max_vertices,
        } => {
            let g = parse_graph(&graph)?;
            let mut m = base("orient");
            if coloring {
                let c = orientation::three_color_with(&g, b);
                let code = set_outcome(&mut m, &c);
                let o = match &c.witness {
                    Some(col) => {
                        m.insert("coloring".into(), json!(col));
                        Some(orientation::orientation_from_coloring(&g, col)?)
                    }
                    None => None,
                };
                orientation_reply(m, code, o.as_ref(), l.format)
            } else {
                let cfg = SearchConfig { budget: b, max_vertices };
                let o = if transitive {
                    orientation::find_transitive(&g, &cfg)?
                } else {
                    orientation::find_semi_transitive(&g, &cfg)?
                };
                m.insert("kind".into(), json!(if transitive { "transitive" } else { "semi_transitive" }));
                let code = set_outcome(&mut m, &o);
                orientation_reply(m, code, o.witness.as_ref(), l.format)
            }
        }
        Command::Represent { graph, k, pattern } => {
            let g = parse_graph(&graph)?;
            let mut m = base("represent");
            let o = if let Some(p) = pattern {
                let t = Pattern::parse(&p)?;
                let s = repnum::find_pattern_avoiding_word(&g, &t, &wcfg)?;
                m.insert("pattern".into(), json!(t.to_string()));
                m.insert("caps".into(), json!(s.caps));
                m.insert("heuristic_caps".into(), json!(s.heuristic_caps));
                m.insert("complete".into(), json!(s.complete));
                s.outcome
            } else if let Some(k) = k {
                m.insert("k".into(), json!(k));
                repnum::find_k_uniform_word(&g, k, &wcfg)?
            } else {
                repnum::bounded_uniform_search(&g, &wcfg)?
            };
            let code = set_outcome(&mut m, &o);
            if let Some(w) = &o.witness {
                m.insert("witness_word".into(), json!(word_text(w)));
            }
            Reply::json(code, m)
        }
        Command::Repnum { graph } => {
            let g = parse_graph(&graph)?;
            let r = repnum::representation_number(&g, &wcfg)?;
            let mut m = base("repnum");
            m.insert(
                "repnum".into(),
                match r.value {
                    RepresentationNumber::Finite(k) => json!(k),
                    RepresentationNumber::Infinite => json!("infinity"),
                },
            );
            m.insert("verdict".into(), json!(matches!(r.value, RepresentationNumber::Finite(_))));
            m.insert("witness_word".into(), json!(r.witness.as_ref().map(word_text)));
            m.insert("stats".into(), json!({ "nodes_expanded": r.nodes_expanded }));
            Reply::json(EXIT_OK, m)
        }
        Command::PermRepnum { graph, max_p } => {
            let g = parse_graph(&graph)?;
            let o = repnum::permutational_representation_number(&g, max_p, &wcfg)?;
            let mut m = base("perm-repnum");
            let code = set_outcome(&mut m, &o);
            m.insert("max_p".into(), json!(max_p));
            m.insert("perm_repnum".into(), json!(o.witness.as_ref().map(|w| w.0)));
            m.insert("witness_word".into(), json!(o.witness.as_ref().map(|w| word_text(&w.1))));
            Reply::json(code, m)
        }
        Command::Family { spec } => {
            let f: Family = spec.parse()?;
            let g = families::make(f)?;
            let mut r = graph_reply("family", &g, l.format);
            r.body.insert("family".into(), json!(f.to_string()));
            r.body
                .insert("witness_word".into(), json!(families::known_representant(f).as_ref().map(word_text)));
            r
        }
        Command::Op {
            kind,
            graph,
            other,
            vertex,
            edge,
            parts,
            other_vertex,
            by_edge,
        } => {
            let g = parse_graph(&graph)?;
            let second = || -> Result<Graph> {
                parse_graph(other.as_deref().ok_or_else(|| Error::InvalidParameter("operation needs a second graph".into()))?)
            };
            let need = |v: Option<usize>, what: &str| v.ok_or_else(|| Error::InvalidParameter(format!("missing --{what}")));
            let edge = || parse_edge(edge.as_deref().ok_or_else(|| Error::InvalidParameter("missing --edge".into()))?);
            let h = match kind {
                OpKind::Complement => g.complement(),
                OpKind::Line => graph::line_graph(&g)?,
                OpKind::Cartesian => graph::cartesian_product(&g, &second()?)?,
                OpKind::Rooted => graph::rooted_product(&g, &second()?, vertex.unwrap_or(1))?,
                OpKind::Module => graph::substitute_module(&g, need(vertex, "vertex")?, &second()?)?,
                OpKind::Apex => graph::add_apex(&g)?,
                OpKind::Subdivide => graph::subdivide(&g, edge()?, parts)?,
                OpKind::Contract => graph::contract_edge(&g, edge()?)?,
                OpKind::Glue => {
                    let (u, v) = (need(vertex, "vertex")?, need(other_vertex, "other-vertex")?);
                    let mode = if by_edge { GlueMode::ByEdge(u, v) } else { GlueMode::AtVertex(u, v) };
                    graph::glue_or_connect(&g, &second()?, mode)?
                }
            };
            graph_reply("op", &h, l.format)
        }
        Command::Enumerate {
            n,
            count_nonrep,
            minimal,
            checkpoint,
            ingest,
            all,
        } => {
            let corpus = match &ingest {
                Some(p) => enumerate::ingest_graph6(p, n)?,
                None => enumerate::generate(n, !all)?,
            };
            let checkpoint = match checkpoint {
                None => None,
                Some(Some(p)) => Some(p),
                Some(None) => {
                    let dir = std::env::var_os(CHECKPOINT_DIR_VAR).ok_or_else(|| {
                        Error::InvalidParameter(format!("--checkpoint without a path needs {CHECKPOINT_DIR_VAR}"))
                    })?;
                    Some(PathBuf::from(dir).join(format!("nonrep-n{n}{}.tsv", if all { "-all" } else { "" })))
                }
            };
            let opts = CountOptions {
                jobs: l.jobs,
                budget: b,
                checkpoint,
            };
            let mut m = base("enumerate");
            m.insert("n".into(), json!(n));
            m.insert("corpus_size".into(), json!(corpus.len()));
            m.insert("count".into(), json!(corpus.len()));
            if count_nonrep || minimal {
                let r = match enumerate::count_non_representable(&corpus, &opts) {
                    Ok(r) => r,
                    Err(Error::BudgetExhausted(msg)) => {
                        m.insert("exhaustive".into(), json!(false));
                        m.insert("error".into(), json!(msg));
                        return Ok(Reply::json(EXIT_BUDGET, m));
                    }
                    Err(e) => return Err(e),
                };
                m.insert("count".into(), json!(r.count));
                m.insert("non_representable".into(), json!(r.graphs.iter().map(io::to_graph6).collect::<Vec<_>>()));
                m.insert("resumed".into(), json!(r.resumed));
                m.insert("stats".into(), json!({ "nodes_expanded": r.nodes_expanded }));
                if minimal {
                    let mins = enumerate::minimal_non_representable(&corpus, &opts)?;
                    m.insert("minimal".into(), json!(mins.iter().map(io::to_graph6).collect::<Vec<_>>()));
                    m.insert("minimal_count".into(), json!(mins.len()));
                }
            }
            Reply::json(EXIT_OK, m)
        }
        Command::PatternCount { graph, pattern, max_len } => {
            let g = parse_graph(&graph)?;
            let t = Pattern::parse(&pattern)?;
            let c = repnum::count_pattern_avoiding_representants(&g, &t, max_len)?;
            let mut m = base("pattern-count");
            m.insert("count".into(), json!(c));
            m.insert("pattern".into(), json!(t.to_string()));
            m.insert("max_len".into(), json!(max_len));
            Reply::json(EXIT_OK, m)
        }
    })
}

/// Runs one command line (including the program name in `args[0]`).
pub fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(cli) {
        Ok(r) => {
            let stdout = match r.text {
                Some(t) => t,
                None => serde_json::to_string(&Value::Object(r.body)).expect("json values serialize") + "\n",
            };
            Output {
                code: r.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let code = if matches!(e, Error::BudgetExhausted(_)) { EXIT_BUDGET } else { EXIT_USAGE };
            Output {
                code,
                stdout: serde_json::to_string(&json!({ "error": e.to_string() })).expect("json") + "\n",
                stderr: format!("wordrep: {e}\n"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, Value) {
        let mut v = vec!["wordrep"];
        v.extend_from_slice(args);
        let out = run(v);
        (out.code, serde_json::from_str(&out.stdout).unwrap_or(Value::Null))
    }

    #[test]
    fn word_literals() {
        assert_eq!(parse_word("1,2,1").unwrap(), Word::from_digits("121").unwrap());
        assert_eq!(parse_word("1213423").unwrap(), Word::from_digits("1213423").unwrap());
        let w = parse_word("12(10)").unwrap();
        assert_eq!(w.letters(), &[1, 2, 10]);
        assert!(parse_word("1a").is_err());
        assert!(parse_word("").is_err());
    }

    #[test]
    fn wheel_is_negative() {
        let (code, v) = call(&["decide", "family:wheel:5"]);
        assert_eq!(code, EXIT_NEGATIVE);
        assert_eq!(v["verdict"], json!(false));
        assert_eq!(v["exhaustive"], json!(true));
    }

    #[test]
    fn prism_repnum() {
        let (code, v) = call(&["repnum", "family:prism:3"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(v["repnum"], json!(3));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["nonsense"]).0, EXIT_USAGE);
        assert_eq!(call(&["decide", "family:blob:3"]).0, EXIT_USAGE);
        assert_eq!(call(&["decide", "/no/such/file"]).0, EXIT_USAGE);
    }

    #[test]
    fn budget_exit() {
        let (code, v) = call(&["orient", "family:prism:5", "--max-nodes", "1"]);
        assert_eq!(code, EXIT_BUDGET);
        assert_eq!(v["exhaustive"], json!(false));
    }

    #[test]
    fn dot_format() {
        let out = run(["wordrep", "family", "cycle:3", "--format", "dot"]);
        assert!(out.stdout.starts_with("graph G {"));
    }
}
