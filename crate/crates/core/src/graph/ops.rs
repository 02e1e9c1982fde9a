//! Graph constructions and structural queries.
//!
//! Label conventions for operations that create or remove vertices are
//! documented per function; all results use dense labels `1..=n`.

use super::{bit, bits, low_mask, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn check_total(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

fn require_edge(g: &Graph, (u, v): (usize, usize)) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(Error::NotAnEdge(u, v))
    }
}

/// Line graph. Vertex `i` is the `i`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::Edgeless);
    }
    check_total(edges.len())?;
    let rows = edges
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            edges.iter().enumerate().fold(0u64, |m, (j, &(c, d))| {
                if i != j && (a == c || a == d || b == c || b == d) {
                    m | bit(j)
                } else {
                    m
                }
            })
        })
        .collect();
    Ok(Graph::from_rows_unchecked(rows))
}

/// Cartesian product. The pair `(u, u')` becomes vertex `(u - 1) * n(h) + u'`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.n(), h.n());
    check_total(ng * nh)?;
    let mut out = Graph::empty(ng * nh)?;
    let id = |u: usize, up: usize| (u - 1) * nh + up;
    for u in 1..=ng {
        for (a, b) in h.edges() {
            out.add_edge(id(u, a), id(u, b))?;
        }
    }
    for up in 1..=nh {
        for (a, b) in g.edges() {
            out.add_edge(id(a, up), id(b, up))?;
        }
    }
    Ok(out)
}

/// Rooted product `g ∘ h`. Vertices `1..=n(g)` are the vertices of `g`,
/// each identified with the root of its copy of `h`; the non-root vertices
/// of copy `i` follow, copy by copy, in increasing label order.
pub fn rooted_product(g: &Graph, h: &Graph, root: usize) -> Result<Graph> {
    h.check_vertex(root)?;
    let (ng, nh) = (g.n(), h.n());
    check_total(ng * nh)?;
    let mut out = Graph::empty(ng * nh)?;
    for (a, b) in g.edges() {
        out.add_edge(a, b)?;
    }
    for i in 1..=ng {
        let base = ng + (i - 1) * (nh - 1);
        let map = |x: usize| match x.cmp(&root) {
            std::cmp::Ordering::Equal => i,
            std::cmp::Ordering::Less => base + x,
            std::cmp::Ordering::Greater => base + x - 1,
        };
        for (a, b) in h.edges() {
            out.add_edge(map(a), map(b))?;
        }
    }
    Ok(out)
}

/// Replaces vertex `v` of `g` by the module `m`. Vertex 1 of `m` takes the
/// label `v`; the other vertices of `m` get `n(g) + 1 ..` in order. Every
/// module vertex is adjacent to exactly the old neighbors of `v`.
pub fn substitute_module(g: &Graph, v: usize, m: &Graph) -> Result<Graph> {
    g.check_vertex(v)?;
    let n = g.n() + m.n() - 1;
    check_total(n)?;
    let label = |x: usize| if x == 1 { v } else { g.n() + x - 1 };
    let mut out = Graph::empty(n)?;
    for (a, b) in g.edges() {
        if a != v && b != v {
            out.add_edge(a, b)?;
        }
    }
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    for x in 1..=m.n() {
        for &y in &nbrs {
            out.add_edge(label(x), y)?;
        }
    }
    for (a, b) in m.edges() {
        out.add_edge(label(a), label(b))?;
    }
    Ok(out)
}

/// Adds vertex `n + 1` adjacent to every existing vertex.
pub fn add_apex(g: &Graph) -> Result<Graph> {
    let n = g.n();
    check_total(n + 1)?;
    let mut rows: Vec<u64> = g.rows().iter().map(|r| r | bit(n)).collect();
    rows.push(low_mask(n));
    Ok(Graph::from_rows_unchecked(rows))
}

/// Replaces `edge` by a path with `parts` edges. The `parts - 1` new
/// vertices are `n + 1, n + 2, ..` in order from the smaller endpoint.
pub fn subdivide(g: &Graph, edge: (usize, usize), parts: usize) -> Result<Graph> {
    require_edge(g, edge)?;
    if parts < 2 {
        return Err(Error::InvalidParameter(format!(
            "subdivision needs at least 2 parts, got {parts}"
        )));
    }
    let (u, v) = (edge.0.min(edge.1), edge.0.max(edge.1));
    let n = g.n() + parts - 1;
    check_total(n)?;
    let mut rows = g.rows().to_vec();
    rows[u - 1] &= !bit(v - 1);
    rows[v - 1] &= !bit(u - 1);
    rows.resize(n, 0);
    let mut out = Graph::from_rows_unchecked(rows);
    let mut prev = u;
    for k in 1..parts {
        let w = g.n() + k;
        out.add_edge(prev, w)?;
        prev = w;
    }
    out.add_edge(prev, v)?;
    Ok(out)
}

/// Subdivides every edge into `parts` edges, edges taken in lexicographic
/// order.
pub fn subdivide_all(g: &Graph, parts: usize) -> Result<Graph> {
    let mut out = g.clone();
    for e in g.edges() {
        out = subdivide(&out, e, parts)?;
    }
    Ok(out)
}

/// Contracts `edge`: the merged vertex keeps the smaller label and the
/// larger endpoint is removed (labels above it shift down by one).
/// Loops and parallel edges collapse.
pub fn contract_edge(g: &Graph, edge: (usize, usize)) -> Result<Graph> {
    require_edge(g, edge)?;
    let (u, v) = (edge.0.min(edge.1), edge.0.max(edge.1));
    let mut rows = g.rows().to_vec();
    let merged = (rows[u - 1] | rows[v - 1]) & !bit(u - 1) & !bit(v - 1);
    rows[u - 1] = merged;
    for w in bits(merged) {
        rows[w] |= bit(u - 1);
    }
    let tmp = Graph::from_rows_unchecked(
        rows.iter()
            .enumerate()
            .map(|(i, r)| if i == v - 1 { 0 } else { r & !bit(v - 1) })
            .collect(),
    );
    tmp.delete_vertex(v)
}

/// How [`glue_or_connect`] joins two graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlueMode {
    /// Identify vertex `.0` of the first graph with vertex `.1` of the second.
    AtVertex(usize, usize),
    /// Join vertex `.0` of the first graph to vertex `.1` of the second.
    ByEdge(usize, usize),
}

/// Disjoint union glued at a vertex or joined by an edge. The first graph
/// keeps its labels; the second graph's vertices follow (minus the glued
/// vertex, which merges into the first graph's vertex).
pub fn glue_or_connect(g: &Graph, h: &Graph, mode: GlueMode) -> Result<Graph> {
    match mode {
        GlueMode::ByEdge(u, v) => {
            g.check_vertex(u)?;
            h.check_vertex(v)?;
            let mut out = g.disjoint_union(h)?;
            out.add_edge(u, g.n() + v)?;
            Ok(out)
        }
        GlueMode::AtVertex(u, v) => {
            g.check_vertex(u)?;
            h.check_vertex(v)?;
            let n = g.n() + h.n() - 1;
            check_total(n)?;
            let map = |x: usize| match x.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => g.n() + x,
                std::cmp::Ordering::Greater => g.n() + x - 1,
            };
            let mut out = Graph::empty(n)?;
            for (a, b) in g.edges() {
                out.add_edge(a, b)?;
            }
            for (a, b) in h.edges() {
                out.add_edge(map(a), map(b))?;
            }
            Ok(out)
        }
    }
}

/// True iff some vertex subset of `g` induces a graph isomorphic to `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    if h.n() > g.n() {
        return false;
    }
    // match h vertices in decreasing degree order for early failure
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.neighbor_mask(v).count_ones()));
    let mut image = vec![usize::MAX; h.n()];
    induced_backtrack(g, h, &order, 0, 0, &mut image)
}

fn induced_backtrack(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    used: u64,
    image: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let hv = order[depth];
    let need_deg = h.neighbor_mask(hv).count_ones();
    let mut candidates = g.vertex_mask() & !used;
    for &hu in &order[..depth] {
        let gu = image[hu];
        if h.neighbor_mask(hv) & bit(hu) != 0 {
            candidates &= g.neighbor_mask(gu);
        } else {
            candidates &= !g.neighbor_mask(gu);
        }
    }
    for gv in bits(candidates) {
        if g.neighbor_mask(gv).count_ones() < need_deg {
            continue;
        }
        image[hv] = gv;
        if induced_backtrack(g, h, order, depth + 1, used | bit(gv), image) {
            return true;
        }
    }
    image[hv] = usize::MAX;
    false
}

/// Exact clique number by branch and bound with a greedy-coloring bound.
pub fn max_clique_size(g: &Graph) -> usize {
    let mut best = 0;
    clique_expand(g, 0, g.vertex_mask(), &mut best);
    best
}

fn clique_expand(g: &Graph, size: usize, mut cand: u64, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    // greedy coloring of the candidates gives an upper bound per vertex
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !bit(v) & !g.neighbor_mask(v);
            uncolored &= !bit(v);
            order.push(v);
            colors.push(color);
        }
    }
    for idx in (0..order.len()).rev() {
        if size + colors[idx] <= *best {
            return;
        }
        let v = order[idx];
        clique_expand(g, size + 1, cand & g.neighbor_mask(v), best);
        cand &= !bit(v);
    }
}
