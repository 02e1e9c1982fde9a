//! Words and the graphs they represent.
//!
//!     cargo run --example words -- 3412132154

use wordrep::cli::parse_word;
use wordrep::orientation::{is_semi_transitive, word_to_orientation};
use wordrep::words::{alternate, cyclic_shift, extend_to_uniform, word_to_graph};

fn main() -> wordrep::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "23125413241362".into());
    let w = parse_word(&arg)?;
    let g = word_to_graph(&w)?;
    println!("word {w} represents a graph on {} vertices with edges {:?}", g.n(), g.edges());
    for (x, y) in [(1, 2), (2, 3), (1, 3)] {
        if let Ok(a) = alternate(&w, x, y) {
            println!("  {x},{y} alternate: {a}");
        }
    }
    let u = extend_to_uniform(&w);
    println!("uniform version {u} ({}-uniform)", u.uniformity().unwrap_or(0));
    let s = cyclic_shift(&u);
    println!("cyclic shift {s} represents the same graph: {}", word_to_graph(&s)? == g);
    let o = word_to_orientation(&w)?;
    println!("leftmost orientation {:?}, semi-transitive: {}", o.arcs(), is_semi_transitive(&o));
    Ok(())
}
