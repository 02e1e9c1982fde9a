//! Exhaustive graph generation and non-representability counts.

use std::collections::{HashMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::canon::CANON_MAX_VERTICES;
use crate::graph::{canonical_labeling, io, CanonicalForm, Graph};
use crate::orientation::{decide_word_representable, is_word_representable, SearchConfig};
use crate::search::{Budget, Status};

/// Largest order [`generate`] accepts.
pub const MAX_GENERATE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Generated,
    Ingested(PathBuf),
}

/// Pairwise non-isomorphic graphs on `n` vertices, each stored under its
/// canonical labeling.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub n: usize,
    pub graphs: Vec<Graph>,
    pub provenance: Provenance,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

fn canonical(g: &Graph) -> Result<(CanonicalForm, Graph)> {
    let (cf, perm) = canonical_labeling(g)?;
    Ok((cf, g.relabel(&perm)?))
}

/// All graphs on `n` vertices up to isomorphism (only connected ones when
/// `connected`). Each level extends every graph of the previous level by
/// one vertex joined to every subset, then removes duplicates by
/// canonical form.
pub fn generate(n: usize, connected: bool) -> Result<Corpus> {
    if n == 0 || n > MAX_GENERATE {
        return Err(Error::CeilingExceeded {
            what: "generated graph order",
            value: n,
            limit: MAX_GENERATE,
        });
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 1..n {
        let mut seen: HashMap<CanonicalForm, Graph> = HashMap::new();
        let next: Vec<Vec<(CanonicalForm, Graph)>> = level
            .par_iter()
            .map(|g| {
                (0..1u64 << m)
                    .map(|subset| {
                        let mut rows = g.rows().to_vec();
                        for (i, r) in rows.iter_mut().enumerate() {
                            if subset >> i & 1 == 1 {
                                *r |= 1 << m;
                            }
                        }
                        rows.push(subset);
                        let h = Graph::from_rows(rows).expect("augmented rows are symmetric");
                        canonical(&h).expect("order within the canonical ceiling")
                    })
                    .collect()
            })
            .collect();
        for (cf, h) in next.into_iter().flatten() {
            seen.entry(cf).or_insert(h);
        }
        let mut v: Vec<(CanonicalForm, Graph)> = seen.into_iter().collect();
        v.sort_by_key(|a| a.0);
        level = v.into_iter().map(|(_, g)| g).collect();
    }
    if connected {
        level.retain(Graph::is_connected);
    }
    Ok(Corpus {
        n,
        graphs: level,
        provenance: Provenance::Generated,
    })
}

/// Reads a graph6 corpus of graphs on `n` vertices. Isomorphic duplicates
/// are dropped with a warning; other orders are rejected.
pub fn ingest_graph6(path: &Path, n: usize) -> Result<Corpus> {
    let text = std::fs::read_to_string(path)?;
    let mut c = corpus_from_graph6(&text, n)?;
    c.provenance = Provenance::Ingested(path.to_path_buf());
    Ok(c)
}

pub fn corpus_from_graph6(text: &str, n: usize) -> Result<Corpus> {
    if n > CANON_MAX_VERTICES {
        return Err(Error::CeilingExceeded {
            what: "ingested graph order",
            value: n,
            limit: CANON_MAX_VERTICES,
        });
    }
    let mut seen = HashSet::new();
    let mut graphs = Vec::new();
    let mut dropped = 0;
    for g in io::read_graph6_corpus(text)? {
        if g.n() != n {
            return Err(Error::Parse(format!("graph on {} vertices in a corpus of order {n}", g.n())));
        }
        let (cf, h) = canonical(&g)?;
        if seen.insert(cf) {
            graphs.push(h);
        } else {
            dropped += 1;
        }
    }
    if dropped > 0 {
        log::warn!("dropped {dropped} isomorphic duplicates from graph6 input");
    }
    Ok(Corpus {
        n,
        graphs,
        provenance: Provenance::Generated,
    })
}

/// One line of a checkpoint file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckpointRecord {
    pub form: CanonicalForm,
    pub representable: bool,
    pub nodes_expanded: u64,
}

impl CheckpointRecord {
    pub fn to_line(&self) -> String {
        format!("{}\t{}\t{}", self.form.to_hex(), self.representable, self.nodes_expanded)
    }

    pub fn parse(line: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad checkpoint line {line:?}"));
        let mut it = line.split('\t');
        let (Some(a), Some(b), Some(c), None) = (it.next(), it.next(), it.next(), it.next()) else {
            return Err(bad());
        };
        Ok(CheckpointRecord {
            form: CanonicalForm::from_hex(a)?,
            representable: b.parse().map_err(|_| bad())?,
            nodes_expanded: c.parse().map_err(|_| bad())?,
        })
    }
}

/// Reads every record of a checkpoint file; a missing file is empty.
/// A truncated final line (from an interrupted run) is ignored.
pub fn read_checkpoint(path: &Path) -> Result<HashMap<CanonicalForm, CheckpointRecord>> {
    let mut out = HashMap::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(e.into()),
    };
    let lines: Vec<String> = BufReader::new(file).lines().collect::<std::io::Result<_>>()?;
    let last = lines.len().saturating_sub(1);
    for (i, l) in lines.iter().enumerate() {
        if l.trim().is_empty() {
            continue;
        }
        match CheckpointRecord::parse(l) {
            Ok(r) => {
                out.insert(r.form, r);
            }
            Err(_) if i == last => log::warn!("ignoring truncated checkpoint line"),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

// cut an unterminated last line so appended records start on a fresh line
fn drop_partial_tail(path: &Path) -> Result<()> {
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(()),
        Err(e) => return Err(e.into()),
    };
    if bytes.last().is_some_and(|&b| b != b'\n') {
        let keep = bytes.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
        OpenOptions::new().write(true).open(path)?.set_len(keep as u64)?;
    }
    Ok(())
}

#[derive(Clone, Debug, Default)]
pub struct CountOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Per-graph search budget.
    pub budget: Budget,
    /// Records are appended here and reused on the next run.
    pub checkpoint: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct CountReport {
    pub count: usize,
    /// The non-representable members, in corpus order.
    pub graphs: Vec<Graph>,
    pub nodes_expanded: u64,
    /// Members answered from the checkpoint instead of searched.
    pub resumed: usize,
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// Counts corpus members that are not word-representable. Every verdict
/// must be exhaustive; a budget hit aborts the count.
pub fn count_non_representable(corpus: &Corpus, opts: &CountOptions) -> Result<CountReport> {
    let done = match &opts.checkpoint {
        Some(p) => read_checkpoint(p)?,
        None => HashMap::new(),
    };
    let sink = match &opts.checkpoint {
        Some(p) => {
            drop_partial_tail(p)?;
            Some(Mutex::new(OpenOptions::new().create(true).append(true).open(p)?))
        }
        None => None,
    };
    let cfg = SearchConfig {
        budget: opts.budget,
        max_vertices: corpus.n.max(SearchConfig::default().max_vertices),
    };
    let verdicts: Vec<Result<(bool, u64, bool)>> = with_pool(opts.jobs, || {
        corpus
            .graphs
            .par_iter()
            .map(|g| {
                let form = crate::graph::canonical_form(g)?;
                if let Some(r) = done.get(&form) {
                    return Ok((r.representable, r.nodes_expanded, true));
                }
                let out = decide_word_representable(g, &cfg)?;
                let rep = match out.status {
                    Status::Witness => true,
                    Status::Refuted => false,
                    Status::BudgetExhausted => {
                        return Err(Error::BudgetExhausted(format!(
                            "graph {} after {} nodes",
                            io::to_graph6(g),
                            out.nodes_expanded
                        )))
                    }
                };
                if let Some(s) = &sink {
                    let rec = CheckpointRecord {
                        form,
                        representable: rep,
                        nodes_expanded: out.nodes_expanded,
                    };
                    let mut f = s.lock().expect("checkpoint lock");
                    writeln!(f, "{}", rec.to_line())?;
                }
                Ok((rep, out.nodes_expanded, false))
            })
            .collect()
    })?;
    let mut report = CountReport {
        count: 0,
        graphs: Vec::new(),
        nodes_expanded: 0,
        resumed: 0,
    };
    for (g, v) in corpus.graphs.iter().zip(verdicts) {
        let (rep, nodes, resumed) = v?;
        report.nodes_expanded += nodes;
        report.resumed += resumed as usize;
        if !rep {
            report.count += 1;
            report.graphs.push(g.clone());
        }
    }
    Ok(report)
}

/// Non-representable graphs whose every one-vertex-deleted subgraph is
/// representable.
pub fn minimal_non_representable(corpus: &Corpus, opts: &CountOptions) -> Result<Vec<Graph>> {
    let report = count_non_representable(corpus, opts)?;
    let keep: Vec<Result<bool>> = with_pool(opts.jobs, || {
        report
            .graphs
            .par_iter()
            .map(|g| {
                for v in 1..=g.n() {
                    if !is_word_representable(&g.delete_vertex(v)?)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
            .collect()
    })?;
    let mut out = Vec::new();
    for (g, k) in report.graphs.into_iter().zip(keep) {
        if k? {
            out.push(g);
        }
    }
    Ok(out)
}
