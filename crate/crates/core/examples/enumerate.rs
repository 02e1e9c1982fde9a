//! Count non-word-representable connected graphs on `n` vertices,
//! optionally resuming from a checkpoint file.
//!
//!     cargo run --release --example enumerate -- 7
//!     cargo run --release --example enumerate -- 8 /tmp/nonrep-n8.tsv

use std::path::PathBuf;

use wordrep::enumerate::{count_non_representable, generate, minimal_non_representable, CountOptions};
use wordrep::graph::io::to_graph6;

fn main() -> wordrep::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let opts = CountOptions {
        checkpoint: args.next().map(PathBuf::from),
        ..Default::default()
    };
    let corpus = generate(n, true)?;
    let r = count_non_representable(&corpus, &opts)?;
    println!("n={n}: {} connected graphs, {} not word-representable ({} resumed)", corpus.len(), r.count, r.resumed);
    if n <= 7 {
        for g in minimal_non_representable(&corpus, &opts)? {
            println!("  minimal: {}", to_graph6(&g));
        }
    }
    Ok(())
}
