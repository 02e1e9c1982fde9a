//! Named families and their known representants.
//!
//!     cargo run --example families -- ladder:3

use wordrep::families::{known_representant, make, pattern_avoiding_fixture, tree_two_representant, Family};
use wordrep::{Graph, Pattern};

fn main() -> wordrep::Result<()> {
    if let Some(spec) = std::env::args().nth(1) {
        let f: Family = spec.parse()?;
        let g = make(f)?;
        println!("{f}: n={} edges {:?}", g.n(), g.edges());
        match known_representant(f) {
            Some(w) => println!("  representant {w}"),
            None => println!("  no closed-form representant; try the repnum example"),
        }
        return Ok(());
    }
    for f in [Family::Path(5), Family::Cycle(6), Family::Ladder(3), Family::Star(4), Family::Petersen] {
        if let Some(w) = known_representant(f) {
            println!("{f:<10} {w}");
        }
    }
    let t = Pattern::parse("123")?;
    println!("cycle:7 avoiding 123: {}", pattern_avoiding_fixture(Family::Cycle(7), &t)?);
    let spider = Graph::from_edge_list(7, &[(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])?;
    println!("spider tree: {}", tree_two_representant(&spider)?);
    Ok(())
}
