//! Orientations: acyclicity, transitivity, semi-transitivity, and the
//! backtracking searches that decide word-representability and
//! comparability.
//!
//! A graph is word-representable exactly when it has a semi-transitive
//! orientation: an acyclic one in which, for every arc `u -> v`, the
//! vertices lying on directed paths from `u` to `v` induce a transitive
//! sub-orientation.

use crate::error::{Error, Result};
use crate::graph::{bit, bits, io, Graph};
use crate::search::{Budget, Meter, SearchOutcome, Status};
use crate::words::{word_to_graph, Word};

/// A direction for every edge of `base`, stored as out-neighbor masks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orientation {
    base: Graph,
    out: Vec<u64>,
}

impl Orientation {
    /// Builds an orientation from 1-based arcs `(tail, head)`, which must
    /// cover every edge of `base` exactly once.
    pub fn from_arcs(base: Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut out = vec![0u64; base.n()];
        for &(u, v) in arcs {
            if !base.has_edge(u, v) || out[v - 1] & bit(u - 1) != 0 {
                return Err(Error::BadOrientation);
            }
            out[u - 1] |= bit(v - 1);
        }
        Self::from_out_masks(base, out)
    }

    /// Builds an orientation from 0-based out-neighbor masks.
    pub fn from_out_masks(base: Graph, out: Vec<u64>) -> Result<Self> {
        if out.len() != base.n() {
            return Err(Error::BadOrientation);
        }
        for i in 0..base.n() {
            let inn = (0..base.n()).fold(0u64, |m, j| if out[j] & bit(i) != 0 { m | bit(j) } else { m });
            if out[i] & inn != 0 || out[i] | inn != base.neighbor_mask(i) {
                return Err(Error::BadOrientation);
            }
        }
        Ok(Orientation { base, out })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// 0-based out-neighbor mask.
    pub fn out_mask(&self, i: usize) -> u64 {
        self.out[i]
    }

    /// 0-based in-neighbor mask.
    pub fn in_mask(&self, i: usize) -> u64 {
        self.base.neighbor_mask(i) & !self.out[i]
    }

    /// 1-based arc test.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.n() && v <= self.n() && self.out[u - 1] & bit(v - 1) != 0
    }

    /// Arcs `(tail, head)`, 1-based, ordered by the underlying edge.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .into_iter()
            .map(|(u, v)| if self.has_arc(u, v) { (u, v) } else { (v, u) })
            .collect()
    }

    /// The orientation with every arc flipped.
    pub fn reversed(&self) -> Orientation {
        let out = (0..self.n()).map(|i| self.in_mask(i)).collect();
        Orientation {
            base: self.base.clone(),
            out,
        }
    }

    pub fn to_dot(&self) -> String {
        io::arcs_to_dot(self.n(), &self.arcs())
    }

    /// Strict descendants of every vertex (0-based masks).
    fn descendants(&self) -> Vec<u64> {
        (0..self.n())
            .map(|v| {
                let mut seen = 0u64;
                let mut frontier = self.out[v];
                while frontier != 0 {
                    seen |= frontier;
                    frontier = bits(frontier).fold(0, |m, u| m | self.out[u]) & !seen;
                }
                seen
            })
            .collect()
    }
}

/// True iff there is no directed cycle (topological peeling of sources).
pub fn is_acyclic(o: &Orientation) -> bool {
    let n = o.n();
    let mut indeg: Vec<u32> = (0..n).map(|i| o.in_mask(i).count_ones()).collect();
    let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut removed = 0;
    while let Some(v) = ready.pop() {
        removed += 1;
        for u in bits(o.out[v]) {
            indeg[u] -= 1;
            if indeg[u] == 0 {
                ready.push(u);
            }
        }
    }
    removed == n
}

/// True iff `u -> v` and `v -> z` always come with the arc `u -> z`.
pub fn is_transitive(o: &Orientation) -> bool {
    transitive_within(o, o.base.vertex_mask())
}

fn transitive_within(o: &Orientation, set: u64) -> bool {
    bits(set).all(|x| {
        let ox = o.out[x] & set;
        bits(ox).all(|y| o.out[y] & set & !ox == 0)
    })
}

/// Acyclic and shortcut-free. For every arc `u -> v` the set of vertices
/// between `u` and `v` (reachable from `u` and reaching `v`) together with
/// `u` and `v` must induce a transitive sub-orientation.
pub fn is_semi_transitive(o: &Orientation) -> bool {
    if !is_acyclic(o) {
        return false;
    }
    let desc = o.descendants();
    let n = o.n();
    let mut anc = vec![0u64; n];
    for (v, &d) in desc.iter().enumerate() {
        for u in bits(d) {
            anc[u] |= bit(v);
        }
    }
    (0..n).all(|u| {
        bits(o.out[u]).all(|v| {
            let between = (desc[u] & anc[v]) | bit(u) | bit(v);
            transitive_within(o, between)
        })
    })
}

/// Orients the graph represented by `w` by leftmost occurrences:
/// `x -> y` when the first `x` precedes the first `y`.
pub fn word_to_orientation(w: &Word) -> Result<Orientation> {
    let g = word_to_graph(w)?;
    let mut first = vec![usize::MAX; g.n()];
    for (pos, &l) in w.letters().iter().enumerate() {
        let i = l as usize - 1;
        if first[i] == usize::MAX {
            first[i] = pos;
        }
    }
    let out = (0..g.n())
        .map(|i| bits(g.neighbor_mask(i)).filter(|&j| first[i] < first[j]).fold(0, |m, j| m | bit(j)))
        .collect();
    Ok(Orientation { base: g, out })
}

/// Limits for the orientation searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: Budget,
    /// Largest vertex count a search accepts.
    pub max_vertices: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: Budget::UNLIMITED,
            max_vertices: 12,
        }
    }
}

impl SearchConfig {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        SearchConfig {
            max_vertices,
            ..Self::default()
        }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.n() > self.max_vertices {
            Err(Error::CeilingExceeded {
                what: "orientation search vertex count",
                value: g.n(),
                limit: self.max_vertices,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    SemiTransitive,
    Transitive,
}

struct Conflict;

/// A partial orientation with the transitive closure of its arcs.
#[derive(Clone)]
struct Partial {
    out: Vec<u64>,
    inn: Vec<u64>,
    desc: Vec<u64>,
    anc: Vec<u64>,
    pending: Vec<(usize, usize)>,
}

struct Searcher<'a> {
    g: &'a Graph,
    goal: Goal,
    order: Vec<(usize, usize)>,
    meter: Meter,
}

impl Partial {
    fn new(n: usize) -> Self {
        Partial {
            out: vec![0; n],
            inn: vec![0; n],
            desc: vec![0; n],
            anc: vec![0; n],
            pending: Vec::new(),
        }
    }

    fn oriented(&self, a: usize, b: usize) -> bool {
        (self.out[a] | self.inn[a]) & bit(b) != 0
    }

    fn force(&mut self, a: usize, b: usize) -> std::result::Result<(), Conflict> {
        if self.out[a] & bit(b) != 0 {
            return Ok(());
        }
        if self.out[b] & bit(a) != 0 || self.desc[b] & bit(a) != 0 {
            return Err(Conflict);
        }
        self.out[a] |= bit(b);
        self.inn[b] |= bit(a);
        let up = self.anc[a] | bit(a);
        let down = self.desc[b] | bit(b);
        for x in bits(up) {
            self.desc[x] |= down;
        }
        for y in bits(down) {
            self.anc[y] |= up;
        }
        self.pending.push((a, b));
        Ok(())
    }
}

impl Searcher<'_> {
    fn propagate(&self, p: &mut Partial) -> std::result::Result<(), Conflict> {
        let adj = |v: usize| self.g.neighbor_mask(v);
        while let Some((a, b)) = p.pending.pop() {
            // close directed triangles
            for c in bits(p.out[b] & adj(a)) {
                p.force(a, c)?;
            }
            for c in bits(p.inn[a] & adj(b)) {
                p.force(c, b)?;
            }
            match self.goal {
                Goal::Transitive => {
                    if p.out[b] & !adj(a) & !bit(a) != 0 || p.inn[a] & !adj(b) & !bit(b) != 0 {
                        return Err(Conflict);
                    }
                    // arcs sharing an endpoint whose other ends are non-adjacent
                    // must agree at that endpoint
                    for c in bits(adj(a) & !adj(b) & !bit(b)) {
                        p.force(a, c)?;
                    }
                    for c in bits(adj(b) & !adj(a) & !bit(a)) {
                        p.force(c, b)?;
                    }
                }
                Goal::SemiTransitive => {
                    // a directed 2-path x -> y -> z with a fourth vertex d
                    // adjacent to x and z, not all four pairwise adjacent,
                    // completes uniquely as x -> d -> z
                    for c in bits(p.out[b]) {
                        self.complete_quad(p, a, b, c)?;
                    }
                    for x in bits(p.inn[a]) {
                        self.complete_quad(p, x, a, b)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn complete_quad(&self, p: &mut Partial, x: usize, y: usize, z: usize) -> std::result::Result<(), Conflict> {
        let adj = |v: usize| self.g.neighbor_mask(v);
        let xz = adj(x) & bit(z) != 0;
        for d in bits(adj(x) & adj(z) & !bit(y)) {
            if xz && adj(y) & bit(d) != 0 {
                continue;
            }
            p.force(x, d)?;
            p.force(d, z)?;
        }
        Ok(())
    }

    /// A shortcut already present among the oriented arcs: an arc `u -> v`
    /// and a directed path `x -> y -> z` between them with `x`, `z`
    /// non-adjacent in the graph.
    fn has_shortcut(&self, p: &Partial) -> bool {
        let n = self.g.n();
        for u in 0..n {
            for v in bits(p.out[u]) {
                let between = (p.desc[u] & p.anc[v]) | bit(u) | bit(v);
                if between.count_ones() < 4 {
                    continue;
                }
                for x in bits(between) {
                    for y in bits(p.out[x] & between) {
                        if p.out[y] & between & !self.g.neighbor_mask(x) != 0 {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    fn dfs(&mut self, p: Partial, from: usize, root: bool) -> Option<Partial> {
        if !self.meter.tick() {
            return None;
        }
        let Some(idx) = (from..self.order.len()).find(|&i| {
            let (u, v) = self.order[i];
            !p.oriented(u, v)
        }) else {
            return Some(p);
        };
        let (u, v) = self.order[idx];
        // reversing every arc preserves both properties, so the first
        // branching edge needs only one direction
        let dirs: &[(usize, usize)] = if root { &[(u, v)] } else { &[(u, v), (v, u)] };
        for &(a, b) in dirs {
            let mut q = p.clone();
            if q.force(a, b).is_err() || self.propagate(&mut q).is_err() {
                continue;
            }
            if self.goal == Goal::SemiTransitive && self.has_shortcut(&q) {
                continue;
            }
            if let Some(done) = self.dfs(q, idx + 1, false) {
                return Some(done);
            }
            if self.meter.exhausted {
                return None;
            }
        }
        None
    }
}

fn edge_order(g: &Graph) -> Vec<(usize, usize)> {
    let deg = g.degrees();
    let mut order: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (u - 1, v - 1)).collect();
    order.sort_by_key(|&(u, v)| std::cmp::Reverse(deg[u].min(deg[v])));
    order
}

fn orient_search(g: &Graph, goal: Goal, cfg: &SearchConfig) -> Result<SearchOutcome<Orientation>> {
    cfg.check(g)?;
    let mut s = Searcher {
        g,
        goal,
        order: edge_order(g),
        meter: Meter::new(cfg.budget),
    };
    let found = s.dfs(Partial::new(g.n()), 0, true);
    Ok(match found {
        Some(p) => {
            let o = Orientation::from_out_masks(g.clone(), p.out).expect("search orients every edge once");
            match goal {
                Goal::SemiTransitive => assert!(is_semi_transitive(&o), "search produced a non-semi-transitive orientation"),
                Goal::Transitive => assert!(is_transitive(&o), "search produced a non-transitive orientation"),
            }
            SearchOutcome::witness(o, &s.meter)
        }
        None => SearchOutcome::without_witness(&s.meter),
    })
}

/// Searches for a semi-transitive orientation by backtracking over edge
/// directions. Forced moves close directed triangles and complete
/// quadrilaterals; partial orientations containing a shortcut are cut.
pub fn find_semi_transitive(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome<Orientation>> {
    orient_search(g, Goal::SemiTransitive, cfg)
}

/// Searches for a transitive orientation (comparability recognition).
pub fn find_transitive(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome<Orientation>> {
    orient_search(g, Goal::Transitive, cfg)
}

fn decided(outcome: SearchOutcome<Orientation>, what: &str) -> Result<bool> {
    outcome
        .verdict()
        .ok_or_else(|| Error::BudgetExhausted(format!("{what} after {} nodes", outcome.nodes_expanded)))
}

pub fn is_comparability(g: &Graph) -> Result<bool> {
    decided(find_transitive(g, &SearchConfig::with_max_vertices(crate::graph::MAX_VERTICES))?, "transitive orientation search")
}

/// A graph is representable by a concatenation of permutations exactly
/// when it is a comparability graph.
pub fn is_permutationally_representable(g: &Graph) -> Result<bool> {
    is_comparability(g)
}

/// True when every vertex neighborhood induces a comparability graph,
/// a necessary condition for word-representability.
pub fn neighborhoods_are_comparability(g: &Graph) -> Result<bool> {
    for v in 1..=g.n() {
        if let Some(nb) = g.neighborhood(v) {
            if !is_comparability(&nb)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Decision with the neighborhood filter first, then the orientation
/// search. A refutation by the filter reports zero search nodes.
pub fn decide_word_representable(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome<Orientation>> {
    cfg.check(g)?;
    if !neighborhoods_are_comparability(g)? {
        return Ok(SearchOutcome {
            status: Status::Refuted,
            witness: None,
            nodes_expanded: 0,
            elapsed: std::time::Duration::ZERO,
        });
    }
    find_semi_transitive(g, cfg)
}

pub fn is_word_representable(g: &Graph) -> Result<bool> {
    is_word_representable_with(g, &SearchConfig::default())
}

pub fn is_word_representable_with(g: &Graph, cfg: &SearchConfig) -> Result<bool> {
    decided(decide_word_representable(g, cfg)?, "semi-transitive orientation search")
}

/// Adding an apex to `h` gives a word-representable graph exactly when `h`
/// is permutationally representable; this answers through `h`.
pub fn apex_representability_check(h: &Graph) -> Result<bool> {
    is_permutationally_representable(h)
}

/// Proper coloring with colors `1..=3` by backtracking in decreasing
/// degree order.
pub fn three_color(g: &Graph) -> SearchOutcome<Vec<u8>> {
    three_color_with(g, Budget::UNLIMITED)
}

pub fn three_color_with(g: &Graph, budget: Budget) -> SearchOutcome<Vec<u8>> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.neighbor_mask(v).count_ones()));
    let mut meter = Meter::new(budget);
    let mut color = vec![0u8; n];

    fn go(g: &Graph, order: &[usize], k: usize, color: &mut [u8], meter: &mut Meter) -> bool {
        if k == order.len() {
            return true;
        }
        if !meter.tick() {
            return false;
        }
        let v = order[k];
        let used = bits(g.neighbor_mask(v)).fold(0u8, |m, u| if color[u] > 0 { m | 1 << color[u] } else { m });
        // the first vertex takes color 1 without loss of generality
        let top = if k == 0 { 1 } else { 3 };
        for c in 1..=top {
            if used & (1 << c) == 0 {
                color[v] = c;
                if go(g, order, k + 1, color, meter) {
                    return true;
                }
                if meter.exhausted {
                    return false;
                }
            }
        }
        color[v] = 0;
        false
    }

    if go(g, &order, 0, &mut color, &mut meter) {
        SearchOutcome::witness(color, &meter)
    } else {
        SearchOutcome::without_witness(&meter)
    }
}

/// Orients every edge from the lower color to the higher one. The longest
/// directed path has three vertices, so the result is semi-transitive.
pub fn orientation_from_coloring(g: &Graph, coloring: &[u8]) -> Result<Orientation> {
    if coloring.len() != g.n() || coloring.iter().any(|&c| !(1..=3).contains(&c)) {
        return Err(Error::ImproperColoring);
    }
    let mut arcs = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        let (cu, cv) = (coloring[u - 1], coloring[v - 1]);
        match cu.cmp(&cv) {
            std::cmp::Ordering::Less => arcs.push((u, v)),
            std::cmp::Ordering::Greater => arcs.push((v, u)),
            std::cmp::Ordering::Equal => return Err(Error::ImproperColoring),
        }
    }
    Orientation::from_arcs(g.clone(), &arcs)
}
