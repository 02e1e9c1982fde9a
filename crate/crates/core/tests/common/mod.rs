//! Brute-force oracles shared by the integration suites. None of these
//! reuse the library's search code; they enumerate definitions directly.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use wordrep::graph::Graph;
use wordrep::Word;

pub fn cycle(n: usize) -> Graph {
    let mut e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    e.push((1, n));
    Graph::from_edge_list(n, &e).unwrap()
}

pub fn w(s: &str) -> Word {
    Word::from_digits(s).unwrap()
}

/// Pairwise projection check of every pair, straight from the definition.
pub fn brute_word_graph(word: &[u32]) -> Graph {
    let n = *word.iter().max().unwrap() as usize;
    let mut edges = Vec::new();
    for x in 1..=n as u32 {
        for y in x + 1..=n as u32 {
            let p: Vec<u32> = word.iter().copied().filter(|&l| l == x || l == y).collect();
            if p.windows(2).all(|ab| ab[0] != ab[1]) {
                edges.push((x as usize, y as usize));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Renames letters so the alphabet is exactly `1..=k`, keeping their order.
pub fn densify(word: &[u32]) -> Vec<u32> {
    let mut present: Vec<u32> = word.to_vec();
    present.sort_unstable();
    present.dedup();
    word.iter().map(|l| present.binary_search(l).unwrap() as u32 + 1).collect()
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Minimum edge code over all relabelings.
pub fn brute_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.n();
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            for j in 1..n {
                for i in 0..j {
                    let bit = g.has_edge(p[i] + 1, p[j] + 1) as u64;
                    code = (code << 1) | bit;
                }
            }
            code
        })
        .min()
        .unwrap()
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let perms = permutations(g.n());
    brute_code(g, &perms) == brute_code(h, &perms)
}

/// Every labeled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|j| (1..j).map(move |i| (i, j))).collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            let e: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
            Graph::from_edge_list(n, &e).unwrap()
        })
        .collect()
}

/// Number of isomorphism classes on `n` vertices, by brute force.
pub fn brute_class_count(n: usize, connected: bool) -> usize {
    let perms = permutations(n);
    let mut codes: Vec<u64> = labeled_graphs(n)
        .iter()
        .filter(|g| !connected || g.is_connected())
        .map(|g| brute_code(g, &perms))
        .collect();
    codes.sort_unstable();
    codes.dedup();
    codes.len()
}

/// Orientation as a 0/1 matrix `a[u][v]` = arc u -> v (0-based).
pub type Arcs = Vec<Vec<bool>>;

/// All `2^m` orientations of `g`.
pub fn all_orientations(g: &Graph) -> Vec<Arcs> {
    let edges = g.edges();
    let n = g.n();
    (0..1u64 << edges.len())
        .map(|mask| {
            let mut a = vec![vec![false; n]; n];
            for (k, &(u, v)) in edges.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    a[u - 1][v - 1] = true;
                } else {
                    a[v - 1][u - 1] = true;
                }
            }
            a
        })
        .collect()
}

pub fn arcs_of(a: &Arcs) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (u, row) in a.iter().enumerate() {
        for (v, &arc) in row.iter().enumerate() {
            if arc {
                out.push((u + 1, v + 1));
            }
        }
    }
    out
}

fn has_cycle(a: &Arcs) -> bool {
    let n = a.len();
    fn visit(a: &Arcs, v: usize, state: &mut [u8]) -> bool {
        state[v] = 1;
        for u in 0..a.len() {
            if a[v][u] && (state[u] == 1 || (state[u] == 0 && visit(a, u, state))) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    let mut state = vec![0u8; n];
    (0..n).any(|v| state[v] == 0 && visit(a, v, &mut state))
}

pub fn brute_transitive(a: &Arcs) -> bool {
    let n = a.len();
    (0..n).all(|x| (0..n).all(|y| !a[x][y] || (0..n).all(|z| !a[y][z] || a[x][z])))
}

/// Acyclic, and no directed path `v0 -> .. -> vk` with `k >= 3` and arc
/// `v0 -> vk` has a non-adjacent pair among its vertices.
pub fn brute_semi_transitive(a: &Arcs) -> bool {
    if has_cycle(a) {
        return false;
    }
    let n = a.len();
    let adj = |x: usize, y: usize| a[x][y] || a[y][x];
    fn paths(a: &Arcs, path: &mut Vec<usize>, target: usize, found: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let last = *path.last().unwrap();
        for nxt in 0..a.len() {
            if a[last][nxt] && !path.contains(&nxt) {
                path.push(nxt);
                let stop = if nxt == target { found(path) } else { paths(a, path, target, found) };
                path.pop();
                if stop {
                    return true;
                }
            }
        }
        false
    }
    for u in 0..n {
        for v in 0..n {
            if !a[u][v] {
                continue;
            }
            let mut path = vec![u];
            let mut check = |p: &[usize]| -> bool {
                p.len() >= 4 && p.iter().enumerate().any(|(i, &x)| p[i + 1..].iter().any(|&y| !adj(x, y)))
            };
            if paths(a, &mut path, v, &mut check) {
                return false;
            }
        }
    }
    true
}

pub fn brute_has_semi_transitive(g: &Graph) -> bool {
    all_orientations(g).iter().any(brute_semi_transitive)
}

pub fn brute_is_comparability(g: &Graph) -> bool {
    all_orientations(g).iter().any(brute_transitive)
}

/// Every word with letter multiplicities `counts` (multiset permutations).
pub fn multiset_words(counts: &[usize], mut f: impl FnMut(&[u32]) -> bool) -> bool {
    fn go(left: &mut [usize], cur: &mut Vec<u32>, total: usize, f: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        if cur.len() == total {
            return f(cur);
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i as u32 + 1);
                let stop = go(left, cur, total, f);
                cur.pop();
                left[i] += 1;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    let total = counts.iter().sum();
    let mut left = counts.to_vec();
    go(&mut left, &mut Vec::new(), total, &mut f)
}

/// Is there a `k`-uniform representant? Tries every k-uniform word.
pub fn brute_k_representable(g: &Graph, k: usize) -> bool {
    multiset_words(&vec![k; g.n()], |word| &brute_word_graph(word) == g)
}

pub fn brute_contains_pattern(word: &[u32], t: &[u32]) -> bool {
    let m = t.len();
    fn go(word: &[u32], t: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
        if chosen.len() == t.len() {
            let m = t.len();
            return (0..m).all(|i| (0..m).all(|j| t[i].cmp(&t[j]) == chosen[i].cmp(&chosen[j])));
        }
        for i in start..word.len() {
            chosen.push(word[i]);
            if go(word, t, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    m <= word.len() && go(word, t, 0, &mut Vec::new())
}

/// Every word over `1..=n` of length `1..=max_len`.
pub fn all_words(n: u32, max_len: usize, mut f: impl FnMut(&[u32])) {
    fn go(n: u32, max_len: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if !cur.is_empty() {
            f(cur);
        }
        if cur.len() == max_len {
            return;
        }
        for l in 1..=n {
            cur.push(l);
            go(n, max_len, cur, f);
            cur.pop();
        }
    }
    go(n, max_len, &mut Vec::new(), &mut f);
}

/// Words over exactly `1..=n` (each letter present).
pub fn dense_words(n: u32, max_len: usize, mut f: impl FnMut(&[u32])) {
    all_words(n, max_len, |word| {
        if (1..=n).all(|l| word.contains(&l)) {
            f(word)
        }
    })
}

/// Free trees on `n` vertices, one per isomorphism class.
pub fn free_trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).unwrap()];
    for m in 1..n {
        let mut next: Vec<(wordrep::graph::CanonicalForm, Graph)> = Vec::new();
        for t in &level {
            for parent in 1..=m {
                let mut e = t.edges();
                e.push((parent, m + 1));
                let h = Graph::from_edge_list(m + 1, &e).unwrap();
                let cf = wordrep::graph::canonical_form(&h).unwrap();
                if !next.iter().any(|(c, _)| *c == cf) {
                    next.push((cf, h));
                }
            }
        }
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    level
}

/// Deterministic sampler for the acceptance suite.
pub struct Sampler(TestRunner);

impl Sampler {
    pub fn new() -> Self {
        let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
        Sampler(TestRunner::new_with_rng(Config::default(), rng))
    }

    pub fn draw<S: Strategy>(&mut self, s: S) -> S::Value {
        s.new_tree(&mut self.0).expect("strategy draws").current()
    }
}

impl Default for Sampler {
    fn default() -> Self {
        Self::new()
    }
}

/// A random graph on `lo..=hi` vertices.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let pairs = (1..=n).flat_map(|j| (1..j).map(move |i| (i, j)));
            let e: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Graph::from_edge_list(n, &e).unwrap()
        })
}

/// A random orientation of a random graph, as a bit per edge.
pub fn arb_oriented(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Arcs)> {
    arb_graph(lo, hi).prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), proptest::collection::vec(any::<bool>(), m))
    })
    .prop_map(|(g, flips)| {
        let n = g.n();
        let mut a = vec![vec![false; n]; n];
        for (&(u, v), f) in g.edges().iter().zip(flips) {
            if f {
                a[u - 1][v - 1] = true;
            } else {
                a[v - 1][u - 1] = true;
            }
        }
        (g, a)
    })
}

/// A random dense word.
pub fn arb_word(max_alpha: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1..=max_alpha, 1..=max_len).prop_map(|v| densify(&v))
}

/// A random `k`-uniform word over `1..=n`.
pub fn arb_uniform_word(max_n: u32, max_k: usize) -> impl Strategy<Value = Vec<u32>> {
    (1..=max_n, 1..=max_k)
        .prop_flat_map(|(n, k)| {
            let base: Vec<u32> = (1..=n).flat_map(|l| std::iter::repeat_n(l, k)).collect();
            Just(base).prop_shuffle()
        })
}

/// Two graphs on seven vertices that are not word-representable although
/// every neighborhood is a comparability graph.
pub fn comparability_neighborhood_examples() -> [Graph; 2] {
    [
        Graph::from_edge_list(
            7,
            &[
                (5, 7), (5, 2), (5, 3), (5, 6), (2, 3), (2, 1), (2, 4), (2, 7),
                (1, 3), (1, 4), (6, 3), (6, 4), (6, 7), (4, 7), (4, 3),
            ],
        )
        .unwrap(),
        Graph::from_edge_list(
            7,
            // the straight segment from 4 to 5 is drawn through 2 and 3
            &[
                (1, 5), (1, 4), (1, 2), (1, 3), (4, 2), (2, 3), (3, 5),
                (6, 2), (6, 3), (6, 7), (7, 4), (7, 5),
            ],
        )
        .unwrap(),
    ]
}
