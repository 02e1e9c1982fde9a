//! Canonical forms by individualization and refinement.
//!
//! The search tree individualizes one vertex of the first non-singleton cell
//! of an equitable partition, refines, and recurses; every discrete leaf
//! yields an upper-triangle code and the maximum code wins. Vertices of a
//! cell that are twins of an already individualized sibling are skipped,
//! since swapping twins is an automorphism that fixes the partition.

use std::fmt;

use super::{bit, bits, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 10;

/// Label-invariant code: equal for two graphs iff they are isomorphic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Order byte followed by the 16 big-endian code bytes.
    pub fn bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(17);
        out.push(self.n);
        out.extend_from_slice(&self.code.to_be_bytes());
        out
    }

    pub fn to_hex(&self) -> String {
        self.bytes().iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() != 34 || !s.is_ascii() {
            return Err(Error::Parse(format!("bad canonical form hex {s:?}")));
        }
        let b = |i: usize| {
            u8::from_str_radix(&s[2 * i..2 * i + 2], 16)
                .map_err(|_| Error::Parse(format!("bad canonical form hex {s:?}")))
        };
        let n = b(0)?;
        let mut code = 0u128;
        for i in 1..17 {
            code = (code << 8) | b(i)? as u128;
        }
        Ok(CanonicalForm { n, code })
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

/// Upper-triangle code of `g` with vertices taken in `order`
/// (`order[position] = 0-based vertex`), column-major like graph6.
fn code_for_order(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        let row = g.neighbor_mask(order[j]);
        for &vi in &order[..j] {
            code = (code << 1) | ((row >> vi) & 1) as u128;
        }
    }
    code
}

struct Canon<'a> {
    g: &'a Graph,
    best: Option<(u128, Vec<usize>)>,
}

impl Canon<'_> {
    /// Splits cells until the partition is equitable. Cells are split by the
    /// number of neighbors in a splitter cell and the pieces are kept in
    /// increasing count order, so the result is label-equivariant.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let mut changed = false;
            let mut s = 0;
            while s < cells.len() {
                let splitter: u64 = cells[s].iter().fold(0, |m, &v| m | bit(v));
                let mut next = Vec::with_capacity(cells.len());
                for cell in cells.iter() {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = cell
                        .iter()
                        .map(|&v| ((self.g.neighbor_mask(v) & splitter).count_ones(), v))
                        .collect();
                    keyed.sort_unstable();
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                            start = i;
                        }
                    }
                }
                if next.len() != cells.len() {
                    changed = true;
                    *cells = next;
                }
                s += 1;
            }
            if !changed {
                break;
            }
        }
    }

    fn search(&mut self, mut cells: Vec<Vec<usize>>) {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = code_for_order(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&w| self.twins(v, w)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.search(next);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.g.neighbor_mask(u) & !bit(v) == self.g.neighbor_mask(v) & !bit(u)
    }
}

fn run(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    if g.n() > CANON_MAX_VERTICES {
        return Err(Error::CeilingExceeded {
            what: "canonical form vertex count",
            value: g.n(),
            limit: CANON_MAX_VERTICES,
        });
    }
    let mut c = Canon { g, best: None };
    // initial partition by degree
    let mut by_deg: Vec<(u32, usize)> = (0..g.n()).map(|v| (g.neighbor_mask(v).count_ones(), v)).collect();
    by_deg.sort_unstable();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (d, v) in by_deg {
        match cells.last_mut() {
            Some(last) if g.neighbor_mask(last[0]).count_ones() == d => last.push(v),
            _ => cells.push(vec![v]),
        }
    }
    c.search(cells);
    let (code, order) = c.best.expect("search visits at least one leaf");
    Ok((
        CanonicalForm {
            n: g.n() as u8,
            code,
        },
        order,
    ))
}

/// Canonical form of a graph on at most [`CANON_MAX_VERTICES`] vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    run(g).map(|(f, _)| f)
}

/// Canonical form plus the relabeling that realizes it:
/// `perm[old - 1] = new` (1-based), suitable for [`Graph::relabel`].
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let (form, order) = run(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos + 1;
    }
    Ok((form, perm))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    if g.n() > CANON_MAX_VERTICES {
        return Ok(super::ops::contains_induced(g, h));
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// True when the 0-based vertex map `perm` is an automorphism of `g`.
pub fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    (0..g.n()).all(|v| {
        let mapped = bits(g.neighbor_mask(v)).fold(0u64, |m, u| m | bit(perm[u]));
        mapped == g.neighbor_mask(perm[v])
    })
}
