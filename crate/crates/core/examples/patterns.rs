//! Pattern-avoiding representants and their counts.
//!
//!     cargo run --release --example patterns

use wordrep::families::{make, Family};
use wordrep::repnum::{count_pattern_avoiding_representants, find_pattern_avoiding_word, WordSearchConfig};
use wordrep::{Graph, Pattern};

fn main() -> wordrep::Result<()> {
    let cfg = WordSearchConfig::default();
    for t in ["132", "123"] {
        let t = Pattern::parse(t)?;
        for f in [Family::Cycle(5), Family::Claw, Family::Star(6), Family::Petersen] {
            let s = find_pattern_avoiding_word(&make(f)?, &t, &cfg)?;
            let verdict = match (&s.outcome.witness, s.outcome.is_refuted()) {
                (Some(w), _) => format!("avoided by {w}"),
                (None, true) if s.complete => "impossible".to_string(),
                (None, true) => "none within the caps".to_string(),
                (None, false) => "undecided".to_string(),
            };
            println!("{f:<10} avoiding {t}: {verdict}");
        }
    }
    let t = Pattern::parse("132")?;
    for n in 3..=6 {
        let c = count_pattern_avoiding_representants(&Graph::complete(n)?, &t, n + 3)?;
        println!("132-avoiding words of length <= {} representing K{n}: {c}", n + 3);
    }
    Ok(())
}
