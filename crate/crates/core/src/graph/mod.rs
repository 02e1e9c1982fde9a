//! Simple undirected graphs on dense vertex labels `1..=n`.
//!
//! Adjacency is stored as one `u64` row per vertex, so every graph has at
//! most [`MAX_VERTICES`] vertices. Public methods take and return 1-based
//! vertex labels; methods ending in `_mask` work on 0-based bit masks.

pub mod canon;
pub mod io;
pub mod ops;

use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use ops::{
    add_apex, cartesian_product, contains_induced, contract_edge, glue_or_connect, line_graph,
    max_clique_size, rooted_product, subdivide, subdivide_all, substitute_module, GlueMode,
};

pub const MAX_VERTICES: usize = 64;

/// Iterates the set bits of `mask`, lowest first, as 0-based indices.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) const fn bit(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph `E_n`.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let all = low_mask(n);
        Ok(Graph {
            n,
            adj: (0..n).map(|i| all & !bit(i)).collect(),
        })
    }

    /// Builds a graph from 1-based unordered pairs. Duplicate pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from 0-based adjacency rows. Rows must be symmetric
    /// and loop-free.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let all = low_mask(n);
        for (i, &r) in rows.iter().enumerate() {
            if r & bit(i) != 0 {
                return Err(Error::SelfLoop(i + 1));
            }
            if r & !all != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 64 - r.leading_zeros() as usize,
                    n,
                });
            }
            for j in bits(r) {
                if rows[j] & bit(i) == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency rows are not symmetric at {{{}, {}}}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u - 1] |= bit(v - 1);
        self.adj[v - 1] |= bit(u - 1);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Adjacency test on 1-based labels; out-of-range labels are never adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.adj[u - 1] & bit(v - 1) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v - 1]).map(|i| i + 1)
    }

    /// 0-based neighbor mask of the vertex with 0-based index `i`.
    #[inline]
    pub fn neighbor_mask(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Edges as 1-based pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in bits(self.adj[i] & !low_mask(i + 1)) {
                out.push((i + 1, j + 1));
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|i| !self.adj[i] & all & !bit(i)).collect(),
        }
    }

    /// Subgraph induced by a non-empty 0-based vertex mask. The kept vertices
    /// are relabeled `1..` in increasing order of their old labels.
    pub fn induced_mask(&self, mask: u64) -> Result<Graph> {
        let mask = mask & self.vertex_mask();
        if mask == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let kept: Vec<usize> = bits(mask).collect();
        let mut pos = [usize::MAX; 64];
        for (k, &v) in kept.iter().enumerate() {
            pos[v] = k;
        }
        let rows = kept
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0u64, |acc, u| acc | bit(pos[u])))
            .collect();
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Subgraph induced by a set of 1-based vertices.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut mask = 0;
        for &v in vertices {
            self.check_vertex(v)?;
            mask |= bit(v - 1);
        }
        self.induced_mask(mask)
    }

    /// Deletes vertex `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced_mask(self.vertex_mask() & !bit(v - 1))
    }

    /// Subgraph induced by the open neighborhood of `v` (None when `v` is isolated).
    pub fn neighborhood(&self, v: usize) -> Option<Graph> {
        self.induced_mask(self.adj[v - 1]).ok()
    }

    /// Relabels with `perm[old - 1] = new` (both 1-based).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= bit(p - 1);
        }
        if seen != self.vertex_mask() {
            return Err(Error::InvalidParameter("relabeling is not a permutation".into()));
        }
        let mut rows = vec![0u64; self.n];
        for i in 0..self.n {
            rows[perm[i] - 1] = bits(self.adj[i]).fold(0, |acc, j| acc | bit(perm[j] - 1));
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Connected components as 0-based masks, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = bit(left.trailing_zeros() as usize);
            let comp = self.reach(start);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    fn reach(&self, start: u64) -> u64 {
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(1) == self.vertex_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// A proper 2-coloring (0/1 per vertex) when the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for comp in self.components() {
            let root = comp.trailing_zeros() as usize;
            color[root] = 0;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for u in bits(self.adj[v]) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyVertexSet)
    } else if n > MAX_VERTICES {
        Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.n, self.edge_count())?;
        for (u, v) in self.edges() {
            write!(f, "\n{u} {v}")?;
        }
        Ok(())
    }
}
