//! Representant synthesis: k-uniform words, representation numbers,
//! concatenations of permutations and pattern-avoiding representants.
//!
//! All word searches share one engine that grows a word left to right for
//! a fixed multiplicity vector. A pair of adjacent letters must keep
//! alternating, so a repeated `x` needs every neighbor of `x` to have
//! occurred since its previous copy. A pair of non-adjacent letters must
//! stop alternating, and once `x` has placed its last copy an unbroken
//! non-neighbor `y` can only break if at least two copies of `y` remain.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, max_clique_size, Graph};
use crate::orientation::{self, SearchConfig};
use crate::search::{Budget, Meter, SearchOutcome, Status};
use crate::words::{occurrence_ending_at, word_to_graph, Pattern, Word};

pub use crate::search::SearchOutcome as Outcome;

/// Limits for the word searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordSearchConfig {
    pub budget: Budget,
    /// Longest word a uniform or permutational search may build.
    pub max_length: usize,
    /// Largest vertex count for pattern-avoiding search.
    pub max_vertices: usize,
    /// Size cap of the table of failed states.
    pub memo_capacity: usize,
}

impl Default for WordSearchConfig {
    fn default() -> Self {
        WordSearchConfig {
            budget: Budget::UNLIMITED,
            max_length: 36,
            max_vertices: 12,
            memo_capacity: 1 << 22,
        }
    }
}

impl WordSearchConfig {
    pub fn with_budget(budget: Budget) -> Self {
        WordSearchConfig {
            budget,
            ..Self::default()
        }
    }
}

/// Twin classes: vertices with equal open or equal closed neighborhoods.
/// Swapping two twins is an automorphism. `prev[v]` is the next smaller
/// member of the class of `v`.
fn twin_predecessors(g: &Graph) -> Vec<Option<usize>> {
    let n = g.n();
    (0..n)
        .map(|v| {
            (0..v).rev().find(|&u| {
                let (nu, nv) = (g.neighbor_mask(u), g.neighbor_mask(v));
                nu & !bit(v) == nv & !bit(u)
            })
        })
        .collect()
}

struct Engine<'a> {
    g: &'a Graph,
    n: usize,
    target: Vec<u32>,
    nonadj: Vec<u64>,
    /// Every block of `n` letters is a permutation.
    block: bool,
    first: Option<usize>,
    twin_prev: Vec<Option<usize>>,
    pattern: Option<&'a [u32]>,
    count: Vec<u32>,
    since: Vec<u64>,
    broken: Vec<u64>,
    word: Vec<u32>,
    total: usize,
    memo: Option<HashSet<Box<[u64]>>>,
    memo_capacity: usize,
    meter: &'a mut Meter,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, target: Vec<u32>, meter: &'a mut Meter) -> Self {
        let n = g.n();
        let all = crate::graph::low_mask(n);
        let total = target.iter().map(|&c| c as usize).sum();
        Engine {
            g,
            n,
            nonadj: (0..n).map(|i| all & !g.neighbor_mask(i) & !bit(i)).collect(),
            target,
            block: false,
            first: None,
            twin_prev: vec![None; n],
            pattern: None,
            count: vec![0; n],
            since: vec![0; n],
            broken: vec![0; n],
            word: Vec::with_capacity(total),
            total,
            memo: None,
            memo_capacity: 0,
            meter,
        }
    }

    fn key(&self) -> Box<[u64]> {
        let mut k = Vec::with_capacity(2 * self.n + self.n.div_ceil(8));
        for chunk in self.count.chunks(8) {
            k.push(chunk.iter().fold(0u64, |a, &c| (a << 8) | c as u64));
        }
        for x in 0..self.n {
            if self.count[x] == self.target[x] {
                k.push(0);
                k.push(0);
            } else {
                // only neighbors and unbroken non-neighbors can still matter
                let live = self.g.neighbor_mask(x) | (self.nonadj[x] & !self.broken[x]);
                k.push(self.since[x] & live);
                k.push(self.broken[x]);
            }
        }
        k.into_boxed_slice()
    }

    fn allowed(&self, x: usize) -> bool {
        let c = self.count[x];
        if c == self.target[x] {
            return false;
        }
        if self.block && c as usize != self.word.len() / self.n {
            return false;
        }
        if c == 0 {
            if let Some(u) = self.twin_prev[x] {
                if self.count[u] == 0 {
                    return false;
                }
            }
        } else if self.g.neighbor_mask(x) & !self.since[x] != 0 {
            return false;
        }
        if c + 1 == self.target[x] {
            // last copy: a non-neighbor still alternating with x must be
            // able to repeat twice afterwards
            let newly = if c > 0 { self.nonadj[x] & !self.since[x] } else { 0 };
            let open = self.nonadj[x] & !self.broken[x] & !newly;
            if bits(open).any(|y| self.target[y] - self.count[y] < 2) {
                return false;
            }
        }
        true
    }

    /// Places `x`; returns the state needed to undo it.
    fn place(&mut self, x: usize) -> (Vec<u64>, Vec<u64>) {
        let undo = (self.since.clone(), self.broken.clone());
        if self.count[x] > 0 {
            let newly = self.nonadj[x] & !self.since[x] & !self.broken[x];
            self.broken[x] |= newly;
            for y in bits(newly) {
                self.broken[y] |= bit(x);
            }
        }
        for y in 0..self.n {
            if self.count[y] > 0 {
                self.since[y] |= bit(x);
            }
        }
        self.count[x] += 1;
        self.since[x] = 0;
        self.word.push(x as u32 + 1);
        undo
    }

    fn unplace(&mut self, x: usize, undo: (Vec<u64>, Vec<u64>)) {
        self.word.pop();
        self.count[x] -= 1;
        (self.since, self.broken) = undo;
    }

    fn dfs(&mut self) -> bool {
        if self.word.len() == self.total {
            return true;
        }
        if !self.meter.tick() {
            return false;
        }
        let key = match &self.memo {
            Some(m) => {
                let k = self.key();
                if m.contains(&k) {
                    return false;
                }
                Some(k)
            }
            None => None,
        };
        let candidates: Vec<usize> = match (self.word.is_empty(), self.first) {
            (true, Some(f)) => vec![f],
            _ => (0..self.n).collect(),
        };
        for x in candidates {
            if !self.allowed(x) {
                continue;
            }
            let undo = self.place(x);
            let ok = match self.pattern {
                Some(t) => !occurrence_ending_at(&self.word, t),
                None => true,
            };
            if ok && self.dfs() {
                return true;
            }
            self.unplace(x, undo);
            if self.meter.exhausted {
                return false;
            }
        }
        if let (Some(k), Some(m)) = (key, self.memo.as_mut()) {
            if m.len() < self.memo_capacity {
                m.insert(k);
            }
        }
        false
    }

    fn run(mut self) -> Option<Word> {
        if self.dfs() {
            let w = Word::new(self.word.clone()).expect("letters are positive");
            assert_eq!(
                word_to_graph(&w).as_ref().ok(),
                Some(self.g),
                "search produced a word that does not represent the graph"
            );
            Some(w)
        } else {
            None
        }
    }
}

fn check_length(n: usize, k: usize, cfg: &WordSearchConfig) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if n * k > cfg.max_length {
        return Err(Error::CeilingExceeded {
            what: "uniform word length",
            value: n * k,
            limit: cfg.max_length,
        });
    }
    Ok(())
}

fn uniform_search(g: &Graph, k: usize, permutational: bool, meter: &mut Meter, cfg: &WordSearchConfig) -> Option<Word> {
    let mut e = Engine::new(g, vec![k as u32; g.n()], meter);
    e.twin_prev = twin_predecessors(g);
    e.block = permutational;
    if !permutational {
        // rotating a uniform representant keeps the graph, so it may start
        // with any chosen letter; take the first vertex of maximum degree
        let deg = g.degrees();
        let top = *deg.iter().max().unwrap();
        e.first = deg.iter().position(|&d| d == top);
    }
    e.memo = Some(HashSet::new());
    e.memo_capacity = cfg.memo_capacity;
    e.run()
}

/// Searches for a `k`-uniform word representing `g` exactly.
///
/// Symmetry is broken by starting with the first maximum-degree vertex and
/// by ordering the first occurrences inside each twin class.
pub fn find_k_uniform_word(g: &Graph, k: usize, cfg: &WordSearchConfig) -> Result<SearchOutcome<Word>> {
    check_length(g.n(), k, cfg)?;
    let mut meter = Meter::new(cfg.budget);
    Ok(match uniform_search(g, k, false, &mut meter, cfg) {
        Some(w) => SearchOutcome::witness(w, &meter),
        None => SearchOutcome::without_witness(&meter),
    })
}

/// `2(n - ω)` for non-complete graphs, `1` for complete ones: every
/// word-representable graph is representable with that many copies.
pub fn uniform_bound(g: &Graph) -> usize {
    let w = max_clique_size(g);
    if w == g.n() {
        1
    } else {
        2 * (g.n() - w)
    }
}

/// Tries `k = 1, 2, ..` up to [`uniform_bound`]. A refutation here means
/// `g` is not word-representable at all.
pub fn bounded_uniform_search(g: &Graph, cfg: &WordSearchConfig) -> Result<SearchOutcome<Word>> {
    let top = uniform_bound(g);
    check_length(g.n(), top, cfg)?;
    let mut meter = Meter::new(cfg.budget);
    for k in 1..=top {
        if let Some(w) = uniform_search(g, k, false, &mut meter, cfg) {
            return Ok(SearchOutcome::witness(w, &meter));
        }
        if meter.exhausted {
            break;
        }
    }
    Ok(SearchOutcome::without_witness(&meter))
}

/// Value of a representation number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepresentationNumber {
    Finite(usize),
    Infinite,
}

#[derive(Clone, Debug)]
pub struct RepnumReport {
    pub value: RepresentationNumber,
    pub witness: Option<Word>,
    pub nodes_expanded: u64,
}

/// The least `k` admitting a `k`-uniform representant, or infinity when
/// the orientation search refutes representability.
pub fn representation_number(g: &Graph, cfg: &WordSearchConfig) -> Result<RepnumReport> {
    let orient = orientation::decide_word_representable(g, &SearchConfig { budget: cfg.budget, max_vertices: cfg.max_vertices })?;
    match orient.status {
        Status::Refuted => {
            return Ok(RepnumReport {
                value: RepresentationNumber::Infinite,
                witness: None,
                nodes_expanded: orient.nodes_expanded,
            })
        }
        Status::BudgetExhausted => {
            return Err(Error::BudgetExhausted("orientation search".into()));
        }
        Status::Witness => {}
    }
    let top = uniform_bound(g);
    let mut meter = Meter::new(cfg.budget);
    for k in 1..=top {
        check_length(g.n(), k, cfg)?;
        if let Some(w) = uniform_search(g, k, false, &mut meter, cfg) {
            return Ok(RepnumReport {
                value: RepresentationNumber::Finite(k),
                witness: Some(w),
                nodes_expanded: meter.nodes + orient.nodes_expanded,
            });
        }
        if meter.exhausted {
            return Err(Error::BudgetExhausted(format!("{k}-uniform search after {} nodes", meter.nodes)));
        }
    }
    unreachable!("a word-representable graph has a representant within the uniform bound")
}

/// Least `p` such that a concatenation of `p` permutations represents
/// `g`, searched up to `max_p`.
pub fn permutational_representation_number(
    g: &Graph,
    max_p: usize,
    cfg: &WordSearchConfig,
) -> Result<SearchOutcome<(usize, Word)>> {
    check_length(g.n(), max_p, cfg)?;
    let mut meter = Meter::new(cfg.budget);
    for p in 1..=max_p {
        if let Some(w) = uniform_search(g, p, true, &mut meter, cfg) {
            return Ok(SearchOutcome::witness((p, w), &meter));
        }
        if meter.exhausted {
            break;
        }
    }
    Ok(SearchOutcome::without_witness(&meter))
}

/// Result of a pattern-avoiding search with the multiplicity caps used.
#[derive(Clone, Debug)]
pub struct PatternSearch {
    pub outcome: SearchOutcome<Word>,
    /// Per-vertex copy caps, vertex `i + 1` at index `i`.
    pub caps: Vec<usize>,
    /// Vertices whose cap is an engineering choice rather than a proven bound.
    pub heuristic_caps: Vec<usize>,
    /// True when a refutation covers every representant, not only those
    /// within the caps.
    pub complete: bool,
}

/// Copy caps for representants avoiding a pattern of length `k + 1`:
/// `k` for degree at least 2, `k + 1` next to such a vertex, and
/// `max(3, k + 1)` otherwise (flagged). Avoiding 132 caps every letter at 2.
pub fn multiplicity_caps(g: &Graph, t: &Pattern) -> (Vec<usize>, Vec<usize>) {
    let k = t.len().saturating_sub(1).max(1);
    let deg = g.degrees();
    let big = (0..g.n()).fold(0u64, |m, i| if deg[i] >= 2 { m | bit(i) } else { m });
    let is_132 = t.letters() == [1, 3, 2];
    let mut flagged = Vec::new();
    let caps = (0..g.n())
        .map(|i| {
            if is_132 {
                2
            } else if deg[i] >= 2 {
                k
            } else if g.neighbor_mask(i) & big != 0 {
                k + 1
            } else {
                flagged.push(i + 1);
                3.max(k + 1)
            }
        })
        .collect();
    (caps, flagged)
}

fn multiplicity_vectors(g: &Graph, caps: &[usize]) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn go(g: &Graph, caps: &[usize], i: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for c in 1..=caps[i] as u32 {
            let ok = (0..i).all(|j| {
                if g.neighbor_mask(i) & bit(j) != 0 {
                    cur[j].abs_diff(c) <= 1
                } else {
                    !(c == 1 && cur[j] == 1)
                }
            });
            if ok {
                cur[i] = c;
                go(g, caps, i + 1, cur, out);
            }
        }
    }
    go(g, caps, 0, &mut cur, &mut out);
    out.sort_by_key(|v| (v.iter().sum::<u32>(), v.clone()));
    out
}

/// Searches for a word avoiding `t` that represents the labeled graph `g`.
/// Uniformity is not assumed; every multiplicity vector within the caps
/// of [`multiplicity_caps`] is tried, shortest first.
pub fn find_pattern_avoiding_word(g: &Graph, t: &Pattern, cfg: &WordSearchConfig) -> Result<PatternSearch> {
    if g.n() > cfg.max_vertices {
        return Err(Error::CeilingExceeded {
            what: "pattern search vertex count",
            value: g.n(),
            limit: cfg.max_vertices,
        });
    }
    let (caps, heuristic_caps) = multiplicity_caps(g, t);
    let supported = matches!(t.letters(), [1, 3, 2] | [1, 2, 3]);
    let complete = supported && heuristic_caps.is_empty();
    let mut meter = Meter::new(cfg.budget);
    let mut found = None;
    for target in multiplicity_vectors(g, &caps) {
        let mut e = Engine::new(g, target, &mut meter);
        e.pattern = Some(t.letters());
        if let Some(w) = e.run() {
            found = Some(w);
            break;
        }
        if meter.exhausted {
            break;
        }
    }
    let outcome = match found {
        Some(w) => {
            debug_assert!(!crate::words::contains_pattern(&w, t));
            SearchOutcome::witness(w, &meter)
        }
        None => SearchOutcome::without_witness(&meter),
    };
    Ok(PatternSearch {
        outcome,
        caps,
        heuristic_caps,
        complete,
    })
}

/// Number of distinct words of length at most `max_len` that avoid `t`
/// and represent the labeled graph `g`.
pub fn count_pattern_avoiding_representants(g: &Graph, t: &Pattern, max_len: usize) -> Result<u64> {
    let n = g.n();
    let space = (n as f64).powi(max_len as i32);
    if space > 1e8 {
        return Err(Error::CeilingExceeded {
            what: "pattern count search space",
            value: space.min(usize::MAX as f64) as usize,
            limit: 100_000_000,
        });
    }
    struct Counter<'a> {
        g: &'a Graph,
        t: &'a [u32],
        max_len: usize,
        word: Vec<u32>,
        since: Vec<u64>,
        present: u64,
        found: u64,
    }
    impl Counter<'_> {
        fn go(&mut self) {
            let n = self.g.n();
            if self.present == crate::graph::low_mask(n) {
                let w = Word::new(self.word.clone()).expect("positive letters");
                if word_to_graph(&w).as_ref() == Ok(self.g) {
                    self.found += 1;
                }
            }
            if self.word.len() == self.max_len {
                return;
            }
            for x in 0..n {
                if self.present & bit(x) != 0 && self.g.neighbor_mask(x) & !self.since[x] != 0 {
                    continue;
                }
                self.word.push(x as u32 + 1);
                if !occurrence_ending_at(&self.word, self.t) {
                    let saved = self.since.clone();
                    let present = self.present;
                    for y in bits(self.present) {
                        self.since[y] |= bit(x);
                    }
                    self.since[x] = 0;
                    self.present |= bit(x);
                    self.go();
                    self.since = saved;
                    self.present = present;
                }
                self.word.pop();
            }
        }
    }
    let mut c = Counter {
        g,
        t: t.letters(),
        max_len,
        word: Vec::new(),
        since: vec![0; n],
        present: 0,
        found: 0,
    };
    c.go();
    Ok(c.found)
}
