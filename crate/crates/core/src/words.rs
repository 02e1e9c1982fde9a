//! Words over positive integer letters: alternation, the graph a word
//! represents, uniform extension, cyclic shifts and classical patterns.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

/// A finite sequence of letters `>= 1`. Letters are integers, so words over
/// more than nine letters need no special notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidParameter("letters must be >= 1".into()));
        }
        Ok(Word(letters))
    }

    /// Builds a word from a digit string such as `"1213423"`.
    pub fn from_digits(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c.to_digit(10) {
                Some(d) if d > 0 => Ok(d),
                _ => Err(Error::Parse(format!("{c:?} is not a letter 1..9"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Number of occurrences of `x`.
    pub fn count(&self, x: u32) -> usize {
        self.0.iter().filter(|&&l| l == x).count()
    }

    /// Occurrence counts indexed by `letter - 1`, up to the largest letter.
    pub fn counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.max_letter() as usize];
        for &l in &self.0 {
            c[l as usize - 1] += 1;
        }
        c
    }

    /// `Some(k)` when every letter of `1..=max` occurs exactly `k` times.
    pub fn uniformity(&self) -> Option<usize> {
        let c = self.counts();
        let k = *c.first()?;
        c.iter().all(|&x| x == k).then_some(k)
    }

    pub fn is_uniform(&self) -> bool {
        self.uniformity().is_some()
    }

    /// Removes every copy of `x`.
    pub fn delete_letter(&self, x: u32) -> Word {
        Word(self.0.iter().copied().filter(|&l| l != x).collect())
    }

    /// Removes every copy of `x` and renames letters above `x` down by one,
    /// matching [`Graph::delete_vertex`].
    pub fn delete_vertex(&self, x: u32) -> Word {
        Word(
            self.0
                .iter()
                .copied()
                .filter(|&l| l != x)
                .map(|l| if l > x { l - 1 } else { l })
                .collect(),
        )
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    fn check_dense(&self) -> Result<usize> {
        let c = self.counts();
        if c.is_empty() {
            return Err(Error::InvalidParameter("empty word".into()));
        }
        if c.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: c.len(),
                max: MAX_VERTICES,
            });
        }
        if let Some(i) = c.iter().position(|&x| x == 0) {
            return Err(Error::AlphabetGap {
                missing: i as u32 + 1,
                max: c.len() as u32,
            });
        }
        Ok(c.len())
    }
}

impl fmt::Display for Word {
    /// Compact digits when every letter is at most 9, otherwise comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| l <= 9) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Self {
        w.0
    }
}

/// True iff the projection of `w` onto `{x, y}` strictly alternates.
pub fn alternate(w: &Word, x: u32, y: u32) -> Result<bool> {
    if x == y {
        return Err(Error::SameLetter);
    }
    for l in [x, y] {
        if !w.0.contains(&l) {
            return Err(Error::LetterAbsent(l));
        }
    }
    Ok(alternates(&w.0, x, y))
}

fn alternates(w: &[u32], x: u32, y: u32) -> bool {
    let mut last = 0;
    for &l in w {
        if l == x || l == y {
            if l == last {
                return false;
            }
            last = l;
        }
    }
    true
}

/// The graph on `1..=n` whose edges are the alternating pairs of `w`.
///
/// Runs in one pass: `since[x]` holds the letters seen after the latest
/// copy of `x`, and a pair stops alternating the moment either letter
/// repeats without the other in between.
pub fn word_to_graph(w: &Word) -> Result<Graph> {
    let n = w.check_dense()?;
    let mut since = vec![0u64; n];
    let mut seen = 0u64;
    let mut broken = vec![0u64; n];
    let all = crate::graph::low_mask(n);
    for &l in &w.0 {
        let x = l as usize - 1;
        if seen & bit(x) != 0 {
            // includes letters not seen yet: their projection starts with xx
            let b = all & !since[x] & !bit(x);
            broken[x] |= b;
            for y in crate::graph::bits(b) {
                broken[y] |= bit(x);
            }
        }
        seen |= bit(x);
        for y in crate::graph::bits(seen & !bit(x)) {
            since[y] |= bit(x);
        }
        since[x] = 0;
    }
    let rows = (0..n).map(|x| all & !broken[x] & !bit(x)).collect();
    Graph::from_rows(rows)
}

/// Letters occurring fewer than the maximum number of times, ordered by
/// their leftmost occurrence. Empty for uniform words.
pub fn initial_permutation(w: &Word) -> Word {
    let c = w.counts();
    let max = c.iter().copied().max().unwrap_or(0);
    let mut taken = vec![false; c.len()];
    let mut out = Vec::new();
    for &l in &w.0 {
        let i = l as usize - 1;
        if c[i] < max && !taken[i] {
            taken[i] = true;
            out.push(l);
        }
    }
    Word(out)
}

/// Repeatedly prepends the initial permutation until every letter occurs
/// the maximum number of times. Each pass raises the count of every
/// non-maximal letter by one, so the loop ends after `max - min` passes.
pub fn extend_to_uniform(w: &Word) -> Word {
    let mut cur = w.clone();
    loop {
        let p = initial_permutation(&cur);
        if p.is_empty() {
            return cur;
        }
        cur = p.concat(&cur);
    }
}

/// Moves the last letter to the front. The represented graph is preserved
/// when `w` is uniform.
pub fn cyclic_shift(w: &Word) -> Word {
    let mut v = w.0.clone();
    if let Some(last) = v.pop() {
        v.insert(0, last);
    }
    Word(v)
}

/// A classical pattern: a word over `1..=k` using every letter.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern(Vec<u32>);

impl Pattern {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidPattern("empty pattern".into()));
        }
        let k = *letters.iter().max().unwrap() as usize;
        let mut present = vec![false; k];
        for &l in &letters {
            if l == 0 {
                return Err(Error::InvalidPattern("letters must be >= 1".into()));
            }
            present[l as usize - 1] = true;
        }
        if let Some(i) = present.iter().position(|p| !p) {
            return Err(Error::InvalidPattern(format!("letter {} is missing", i + 1)));
        }
        Ok(Pattern(letters))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let w = Word::from_digits(s).map_err(|e| Error::InvalidPattern(e.to_string()))?;
        Pattern::new(w.0)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Size `k` of the alphabet `1..=k`.
    pub fn alphabet_size(&self) -> usize {
        *self.0.iter().max().unwrap() as usize
    }

    pub fn is_permutation(&self) -> bool {
        self.alphabet_size() == self.0.len()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Word(self.0.clone()))
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

/// True iff some subsequence of `w` is order-isomorphic to `t`.
pub fn contains_pattern(w: &Word, t: &Pattern) -> bool {
    (0..w.len()).any(|end| occurrence_ending_at(&w.0[..=end], &t.0))
}

/// True iff `w` has an occurrence of `t` whose last letter is the last
/// letter of `w`. Used to test a word incrementally as it grows.
pub fn occurrence_ending_at(w: &[u32], t: &[u32]) -> bool {
    let m = t.len();
    if m == 0 {
        return true;
    }
    if w.len() < m {
        return false;
    }
    let mut chosen = vec![0u32; m];
    chosen[m - 1] = *w.last().unwrap();
    fill_occurrence(w, t, m - 1, w.len() - 1, &mut chosen)
}

// positions are filled right to left; `slot` pattern letters are still free
fn fill_occurrence(w: &[u32], t: &[u32], slot: usize, limit: usize, chosen: &mut [u32]) -> bool {
    if slot == 0 {
        return true;
    }
    let p = slot - 1;
    for pos in (p..limit).rev() {
        let l = w[pos];
        let consistent = (slot..t.len()).all(|q| t[p].cmp(&t[q]) == l.cmp(&chosen[q]));
        if consistent {
            chosen[p] = l;
            if fill_occurrence(w, t, p, pos, chosen) {
                return true;
            }
        }
    }
    false
}
