//! Decide word-representability of one graph and print a semi-transitive
//! orientation when there is one.
//!
//!     cargo run --example decide -- family:wheel:5
//!     cargo run --example decide -- g6:FQhVO

use wordrep::cli::parse_graph;
use wordrep::orientation::{decide_word_representable, SearchConfig};
use wordrep::Status;

fn main() -> wordrep::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "family:petersen".into());
    let g = parse_graph(&arg)?;
    let out = decide_word_representable(&g, &SearchConfig::with_max_vertices(g.n().max(12)))?;
    match out.status {
        Status::Witness => {
            println!("{arg}: word-representable ({} nodes)", out.nodes_expanded);
            let o = out.witness.expect("witness present");
            for (u, v) in o.arcs() {
                println!("  {u} -> {v}");
            }
        }
        Status::Refuted => println!("{arg}: not word-representable ({} nodes)", out.nodes_expanded),
        Status::BudgetExhausted => println!("{arg}: undecided, budget exhausted"),
    }
    Ok(())
}
