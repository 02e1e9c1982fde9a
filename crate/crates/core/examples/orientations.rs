//! Transitive orientations, comparability and 3-colorings.
//!
//!     cargo run --example orientations

use wordrep::families::{make, Family};
use wordrep::orientation::{
    find_transitive, is_comparability, orientation_from_coloring, three_color, SearchConfig,
};

fn main() -> wordrep::Result<()> {
    for f in [Family::Cycle(4), Family::Cycle(5), Family::Crown(3), Family::Petersen] {
        let g = make(f)?;
        println!("{f}: comparability {}", is_comparability(&g)?);
        if let Some(o) = find_transitive(&g, &SearchConfig::with_max_vertices(g.n()))?.witness {
            println!("  transitive arcs {:?}", o.arcs());
        }
        if let Some(col) = three_color(&g).witness {
            let o = orientation_from_coloring(&g, &col)?;
            println!("  coloring {col:?} gives {} arcs, all from lower to higher color", o.arcs().len());
        }
    }
    Ok(())
}
