//! Read graph6 lines from a file (or stdin) and decide each graph.
//!
//!     cargo run --example graph6_io -- crates/core/tests/data/connected5.g6

use std::io::Read;

use wordrep::graph::io::{read_graph6_corpus, to_edge_list, to_graph6};
use wordrep::orientation::is_word_representable;

fn main() -> wordrep::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(p) => std::fs::read_to_string(p)?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let graphs = read_graph6_corpus(&text)?;
    let mut negative = 0;
    for g in &graphs {
        let r = is_word_representable(g)?;
        negative += !r as usize;
        println!("{}\t{r}", to_graph6(g));
    }
    println!("{} graphs, {negative} not word-representable", graphs.len());
    if let Some(g) = graphs.first() {
        print!("first graph as an edge list:\n{}", to_edge_list(g));
    }
    Ok(())
}
