//! Representation numbers of a few families.
//!
//!     cargo run --release --example repnum

use wordrep::families::{make, Family};
use wordrep::repnum::{representation_number, RepresentationNumber, WordSearchConfig};

fn main() -> wordrep::Result<()> {
    let cfg = WordSearchConfig::default();
    let fams = [
        Family::Complete(5),
        Family::Empty(4),
        Family::Path(6),
        Family::Cycle(6),
        Family::Prism(3),
        Family::Crown(4),
        Family::Wheel(5),
    ];
    for f in fams {
        let r = representation_number(&make(f)?, &cfg)?;
        match (r.value, r.witness) {
            (RepresentationNumber::Finite(k), Some(w)) => println!("{f:<12} R = {k}  {w}"),
            (RepresentationNumber::Finite(k), None) => println!("{f:<12} R = {k}"),
            (RepresentationNumber::Infinite, _) => println!("{f:<12} R = infinity"),
        }
    }
    Ok(())
}
