//! Graph operations and what they do to representability.
//!
//!     cargo run --release --example operations

use wordrep::families::{make, Family};
use wordrep::graph::{
    add_apex, cartesian_product, glue_or_connect, line_graph, rooted_product, subdivide_all, substitute_module,
    GlueMode,
};
use wordrep::orientation::{is_word_representable_with, SearchConfig};
use wordrep::Graph;

fn report(name: &str, g: &Graph) -> wordrep::Result<()> {
    let r = is_word_representable_with(g, &SearchConfig::with_max_vertices(g.n()))?;
    println!("{name:<28} n={:<3} m={:<3} representable: {r}", g.n(), g.edge_count());
    Ok(())
}

fn main() -> wordrep::Result<()> {
    let c4 = make(Family::Cycle(4))?;
    let p3 = make(Family::Path(3))?;
    let w5 = make(Family::Wheel(5))?;
    report("C5 complement", &make(Family::Cycle(5))?.complement())?;
    report("C4 x P3", &cartesian_product(&c4, &p3)?)?;
    report("C4 rooted P3", &rooted_product(&c4, &p3, 2)?)?;
    report("C4 + apex", &add_apex(&c4)?)?;
    report("C5 + apex", &add_apex(&make(Family::Cycle(5))?)?)?;
    report("Pr3 with K3 module", &substitute_module(&make(Family::Prism(3))?, 1, &Graph::complete(3)?)?)?;
    report("L(K4)", &line_graph(&Graph::complete(4)?)?)?;
    report("L(K5)", &line_graph(&Graph::complete(5)?)?)?;
    report("W5 subdivided", &subdivide_all(&w5, 3)?)?;
    report("W5 glued to C4", &glue_or_connect(&w5, &c4, GlueMode::AtVertex(6, 1))?)?;
    Ok(())
}
