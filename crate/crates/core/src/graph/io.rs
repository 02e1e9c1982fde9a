//! Text formats: graph6, plain edge lists and DOT.

use super::{bits, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const G6_HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6: size header `N(n)` followed by the upper
/// triangle in column-major order, six bits per byte, offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | ((g.neighbor_mask(j) >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line (an optional `>>graph6<<` prefix is accepted).
pub fn from_graph6(line: &str) -> Result<Graph> {
    let s = line.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: &str| Error::Parse(format!("graph6 {s:?}: {msg}"));
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(bad("unsupported size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(bad("body length does not match vertex count"));
    }
    let bit_at = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                g.add_edge(i + 1, j + 1)?;
            }
            k += 1;
        }
    }
    if (nbits..body.len() * 6).any(bit_at) {
        return Err(bad("non-zero padding bits"));
    }
    Ok(g)
}

/// Reads every non-blank line of a graph6 file.
pub fn read_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(from_graph6)
        .collect()
}

/// Edge list text: a first line `n m`, then `m` lines `u v` (1-based).
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = g.to_string();
    s.push('\n');
    s
}

pub fn from_edge_list_text(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let parse_pair = |l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(Error::Parse(format!("expected two integers, got {l:?}"))),
        }
    };
    let (n, m) = parse_pair(header)?;
    let edges = lines.map(parse_pair).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} edges but {} follow",
            edges.len()
        )));
    }
    Graph::from_edge_list(n, &edges)
}

/// Undirected DOT export.
pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 1..=g.n() {
        s.push_str(&format!("  {v};\n"));
    }
    for i in 0..g.n() {
        for j in bits(g.neighbor_mask(i) >> (i + 1)) {
            s.push_str(&format!("  {} -- {};\n", i + 1, i + j + 2));
        }
    }
    s.push_str("}\n");
    s
}

/// Directed DOT export of an arc list.
pub fn arcs_to_dot(n: usize, arcs: &[(usize, usize)]) -> String {
    let mut s = String::from("digraph G {\n");
    for v in 1..=n {
        s.push_str(&format!("  {v};\n"));
    }
    for (u, v) in arcs {
        s.push_str(&format!("  {u} -> {v};\n"));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        // five vertices, edges a-c a-e b-d d-e
        let g = Graph::from_edge_list(5, &[(1, 3), (1, 5), (2, 4), (4, 5)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(from_graph6(">>graph6<<C~").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn graph6_errors() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err());
        assert!(from_graph6("C\x7f").is_err());
        // K2 with a padding bit set
        assert!(from_graph6("A_").is_ok());
        assert!(from_graph6("A`").is_err());
    }

    #[test]
    fn edge_list_text() {
        let g = Graph::from_edge_list(4, &[(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "4 4\n1 2\n2 3\n2 4\n3 4\n");
        assert_eq!(from_edge_list_text(&text).unwrap(), g);
        assert!(from_edge_list_text("3 2\n1 2\n").is_err());
        assert!(from_edge_list_text("3 1\n1 x\n").is_err());
    }

    #[test]
    fn dot_output() {
        let g = Graph::from_edge_list(3, &[(1, 2)]).unwrap();
        assert_eq!(to_dot(&g), "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n}\n");
        assert!(arcs_to_dot(2, &[(2, 1)]).contains("2 -> 1;"));
    }
}
