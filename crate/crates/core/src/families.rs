//! Named graph families and explicit representants.
//!
//! Labelings:
//! - `path:n` is `1 - 2 - ... - n`, `cycle:n` adds `n - 1`.
//! - `ladder:n` has rails `1..n` and `n+1..2n` (primed vertex `i'` is
//!   `n + i`) with rungs `i - (n+i)`.
//! - `prism:n` has the outer cycle on `1..n`, the inner cycle on `n+1..2n`
//!   and spokes `i - (n+i)`.
//! - `crown:n` is `K_{n,n}` on parts `1..n` and `n+1..2n` minus the
//!   matching `i - (n+i)`; `crown_apex:n` adds the apex `2n+1`.
//! - `wheel:n` is the cycle on `1..n` with hub `n+1`.
//! - `star:m` is `K_{1,m}` with center 1; `claw` is `star:3`.
//! - `petersen` has the outer cycle `1..5`, spokes `i - (i+5)` and the inner
//!   pentagram `6-8-10-7-9-6`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{add_apex, bits, Graph};
use crate::repnum::{find_pattern_avoiding_word, WordSearchConfig};
use crate::words::{cyclic_shift, word_to_graph, Pattern, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Ladder(usize),
    Prism(usize),
    Crown(usize),
    CrownApex(usize),
    Wheel(usize),
    Star(usize),
    Claw,
    Petersen,
}

/// Alias kept for the textual `name:param` form.
pub type FamilySpec = Family;

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete(_) => "complete",
            Family::Empty(_) => "empty",
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Ladder(_) => "ladder",
            Family::Prism(_) => "prism",
            Family::Crown(_) => "crown",
            Family::CrownApex(_) => "crown_apex",
            Family::Wheel(_) => "wheel",
            Family::Star(_) => "star",
            Family::Claw => "claw",
            Family::Petersen => "petersen",
        }
    }

    pub fn param(&self) -> Option<usize> {
        match *self {
            Family::Complete(n)
            | Family::Empty(n)
            | Family::Path(n)
            | Family::Cycle(n)
            | Family::Ladder(n)
            | Family::Prism(n)
            | Family::Crown(n)
            | Family::CrownApex(n)
            | Family::Wheel(n)
            | Family::Star(n) => Some(n),
            Family::Claw | Family::Petersen => None,
        }
    }

    fn validate(&self) -> Result<()> {
        let (min, n) = match *self {
            Family::Complete(n) | Family::Empty(n) | Family::Path(n) => (1, n),
            Family::Cycle(n) | Family::Prism(n) | Family::Wheel(n) => (3, n),
            Family::Ladder(n) | Family::Crown(n) | Family::CrownApex(n) | Family::Star(n) => (1, n),
            Family::Claw | Family::Petersen => return Ok(()),
        };
        if n < min {
            return Err(Error::InvalidParameter(format!(
                "{} needs a parameter of at least {min}, got {n}",
                self.name()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param() {
            Some(p) => f.pad(&format!("{}:{p}", self.name())),
            None => f.pad(self.name()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name:param`, optionally prefixed by `family:`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.strip_prefix("family:").unwrap_or(s);
        let (name, param) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let p = || -> Result<usize> {
            let raw = param.ok_or_else(|| Error::Parse(format!("family {name} needs a parameter")))?;
            raw.parse()
                .map_err(|_| Error::Parse(format!("bad family parameter {raw:?}")))
        };
        let fam = match name {
            "complete" => Family::Complete(p()?),
            "empty" => Family::Empty(p()?),
            "path" => Family::Path(p()?),
            "cycle" => Family::Cycle(p()?),
            "ladder" => Family::Ladder(p()?),
            "prism" => Family::Prism(p()?),
            "crown" => Family::Crown(p()?),
            "crown_apex" => Family::CrownApex(p()?),
            "wheel" => Family::Wheel(p()?),
            "star" => Family::Star(p()?),
            "claw" | "petersen" if param.is_some() => {
                return Err(Error::Parse(format!("family {name} takes no parameter")))
            }
            "claw" => Family::Claw,
            "petersen" => Family::Petersen,
            _ => return Err(Error::Parse(format!("unknown family {name:?}"))),
        };
        fam.validate()?;
        Ok(fam)
    }
}

fn cycle_edges(offset: usize, n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (offset + i + 1, offset + (i + 1) % n + 1)).collect()
}

/// Builds the graph of a family under the labeling in the module docs.
pub fn make(f: Family) -> Result<Graph> {
    f.validate()?;
    match f {
        Family::Complete(n) => Graph::complete(n),
        Family::Empty(n) => Graph::empty(n),
        Family::Path(n) => Graph::from_edge_list(n, &(1..n).map(|i| (i, i + 1)).collect::<Vec<_>>()),
        Family::Cycle(n) => Graph::from_edge_list(n, &cycle_edges(0, n)),
        Family::Ladder(n) => {
            let mut e = Vec::new();
            for i in 1..=n {
                e.push((i, n + i));
                if i < n {
                    e.push((i, i + 1));
                    e.push((n + i, n + i + 1));
                }
            }
            Graph::from_edge_list(2 * n, &e)
        }
        Family::Prism(n) => {
            let mut e = cycle_edges(0, n);
            e.extend(cycle_edges(n, n));
            e.extend((1..=n).map(|i| (i, n + i)));
            Graph::from_edge_list(2 * n, &e)
        }
        Family::Crown(n) => {
            let mut e = Vec::new();
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        e.push((i, n + j));
                    }
                }
            }
            Graph::from_edge_list(2 * n, &e)
        }
        Family::CrownApex(n) => add_apex(&make(Family::Crown(n))?),
        Family::Wheel(n) => add_apex(&make(Family::Cycle(n))?),
        Family::Star(m) => Graph::from_edge_list(m + 1, &(2..=m + 1).map(|i| (1, i)).collect::<Vec<_>>()),
        Family::Claw => make(Family::Star(3)),
        Family::Petersen => {
            let mut e = cycle_edges(0, 5);
            e.extend((1..=5).map(|i| (i, i + 5)));
            e.extend([(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]);
            Graph::from_edge_list(10, &e)
        }
    }
}

/// The two 3-uniform representants of the Petersen graph.
pub const PETERSEN_WORDS: [[u32; 30]; 2] = [
    [1, 3, 8, 7, 2, 9, 6, 10, 7, 4, 9, 3, 5, 4, 1, 2, 8, 3, 10, 7, 6, 8, 5, 10, 1, 9, 4, 5, 6, 2],
    [1, 3, 4, 10, 5, 8, 6, 7, 9, 10, 2, 7, 3, 4, 1, 2, 8, 3, 5, 10, 6, 8, 1, 9, 7, 2, 6, 4, 9, 5],
];

/// 2-uniform ladder representants for `n = 1..=4`, primed letters already
/// mapped to `n + i`.
pub const LADDER_WORDS: [&[u32]; 4] = [
    &[1, 2, 1, 2],
    &[3, 2, 1, 4, 2, 3, 4, 1],
    &[1, 5, 4, 3, 2, 6, 3, 5, 6, 1, 2, 4],
    &[5, 2, 1, 7, 6, 4, 3, 8, 4, 7, 8, 2, 3, 5, 6, 1],
];

fn checked(w: Word, g: &Graph) -> Option<Word> {
    match word_to_graph(&w) {
        Ok(h) if &h == g => Some(w),
        _ => None,
    }
}

fn petersen_word(i: usize) -> Option<Word> {
    let w = Word::new(PETERSEN_WORDS[i].to_vec()).ok()?;
    let g = make(Family::Petersen).ok()?;
    let h = word_to_graph(&w).ok()?;
    if h == g {
        return Some(w);
    }
    if crate::graph::is_isomorphic(&h, &g).unwrap_or(false) {
        log::warn!("Petersen word {} represents the graph only up to isomorphism", i + 1);
        return Some(w);
    }
    None
}

/// Both Petersen words, each verified.
pub fn petersen_representants() -> Vec<Word> {
    (0..2).filter_map(petersen_word).collect()
}

/// The path word `1 2 1 3 2 4 3 ... n (n-1) n`.
fn path_word(n: usize) -> Word {
    if n == 1 {
        return Word::new(vec![1]).expect("positive");
    }
    let mut v = vec![1, 2, 1];
    for i in 3..=n as u32 {
        v.extend([i, i - 1]);
    }
    v.push(n as u32);
    Word::new(v).expect("positive")
}

/// Cycle word: the path word rotated by one position with its first two
/// letters swapped.
fn cycle_word(n: usize) -> Word {
    let mut v = cyclic_shift(&path_word(n)).into_letters();
    v.swap(0, 1);
    Word::new(v).expect("positive")
}

/// A representant given by an explicit construction, verified against
/// [`make`] before it is returned. `None` when no construction is known;
/// search is the fallback there.
pub fn known_representant(f: Family) -> Option<Word> {
    let g = make(f).ok()?;
    let w = match f {
        Family::Complete(n) => Word::new((1..=n as u32).collect()).ok()?,
        Family::Empty(n) => {
            let mut v: Vec<u32> = (1..=n as u32).collect();
            v.extend((1..=n as u32).rev());
            Word::new(v).ok()?
        }
        Family::Path(n) => path_word(n),
        Family::Cycle(n) => cycle_word(n),
        Family::Ladder(n) if n <= LADDER_WORDS.len() => Word::new(LADDER_WORDS[n - 1].to_vec()).ok()?,
        Family::Star(_) | Family::Claw => tree_two_representant(&g).ok()?,
        Family::Petersen => return petersen_word(0),
        _ => return None,
    };
    checked(w, &g)
}

/// 2-uniform representant of a tree: start from `r c r c` for an edge at
/// vertex 1 and attach leaves in breadth-first order, replacing the second
/// copy of the parent `y` by `x y x` for each new leaf `x`.
pub fn tree_two_representant(t: &Graph) -> Result<Word> {
    if t.n() < 2 || !t.is_tree() {
        return Err(Error::NotATree);
    }
    let w = component_word(t, 0);
    Ok(checked(w, t).expect("leaf insertion keeps the represented tree"))
}

fn component_word(t: &Graph, root: usize) -> Word {
    let first = t.neighbor_mask(root).trailing_zeros() as usize;
    if first >= 64 {
        let l = root as u32 + 1;
        return Word::new(vec![l, l]).expect("positive");
    }
    let (r, c) = (root as u32 + 1, first as u32 + 1);
    let mut w = vec![r, c, r, c];
    let mut placed = (1u64 << root) | (1u64 << first);
    let mut queue = std::collections::VecDeque::from([root, first]);
    while let Some(y) = queue.pop_front() {
        for x in bits(t.neighbor_mask(y) & !placed) {
            placed |= 1u64 << x;
            let yl = y as u32 + 1;
            let second = w.iter().rposition(|&l| l == yl).expect("parent is placed");
            w.splice(second..=second, [x as u32 + 1, yl, x as u32 + 1]);
            queue.push_back(x);
        }
    }
    Word::new(w).expect("positive")
}

/// 2-uniform representant of a forest: the concatenation of the words of
/// its trees (an isolated vertex contributes `x x`).
pub fn forest_two_representant(f: &Graph) -> Result<Word> {
    let comps = f.components();
    if f.edge_count() + comps.len() != f.n() {
        return Err(Error::NotATree);
    }
    let mut v = Vec::with_capacity(2 * f.n());
    for c in comps {
        v.extend(component_word(f, c.trailing_zeros() as usize).into_letters());
    }
    let w = Word::new(v)?;
    Ok(checked(w, f).expect("concatenated tree words represent the forest"))
}

/// 123-avoiding cycle representants found by search, indexed by `n - 3`.
const CYCLE_123_WORDS: [&str; 7] = [
    "132",
    "342312",
    "45342312",
    "5645342312",
    "675645342312",
    "78675645342312",
    "8978675645342312",
];

/// A pattern-avoiding representant of a cycle or complete graph.
pub fn pattern_avoiding_fixture(f: Family, t: &Pattern) -> Result<Word> {
    let g = make(f)?;
    let unsupported = || Error::InvalidParameter(format!("no pattern fixture for {f} avoiding {t}"));
    let w = match (f, t.letters()) {
        (Family::Cycle(n), [1, 3, 2]) => {
            let mut v = Vec::with_capacity(2 * n - 2);
            for i in (1..n as u32).rev() {
                v.extend([i, i + 1]);
            }
            Word::new(v)?
        }
        (Family::Complete(n), [1, 3, 2]) => Word::new((1..=n as u32).rev().collect())?,
        (Family::Complete(n), [1, 2, 3]) => {
            let mut v: Vec<u32> = (1..=n as u32).rev().collect();
            v.extend((1..=n as u32).rev());
            Word::new(v)?
        }
        (Family::Cycle(n), [1, 2, 3]) => match CYCLE_123_WORDS.get(n - 3) {
            Some(s) => Word::from_digits(s)?,
            None => find_pattern_avoiding_word(&g, t, &WordSearchConfig::default())?
                .outcome
                .witness
                .ok_or_else(unsupported)?,
        },
        _ => return Err(unsupported()),
    };
    if crate::words::contains_pattern(&w, t) {
        return Err(unsupported());
    }
    checked(w, &g).ok_or_else(unsupported)
}
