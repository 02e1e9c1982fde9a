//! Smallest number of concatenated permutations representing a graph.
//!
//!     cargo run --release --example perm_repnum -- family:crown:3 3

use wordrep::cli::parse_graph;
use wordrep::repnum::{permutational_representation_number, WordSearchConfig};

fn main() -> wordrep::Result<()> {
    let mut args = std::env::args().skip(1);
    let g = parse_graph(&args.next().unwrap_or_else(|| "family:crown:3".into()))?;
    let max_p = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let out = permutational_representation_number(&g, max_p, &WordSearchConfig::default())?;
    match out.witness {
        Some((p, w)) => println!("{p} permutations: {w}"),
        None if out.is_refuted() => println!("needs more than {max_p} permutations"),
        None => println!("undecided"),
    }
    Ok(())
}
