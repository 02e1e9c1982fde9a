//! One PASS/FAIL line per acceptance criterion. Time limits are pinned
//! below; a criterion passes only when every check holds within its limit.

mod common;

use std::time::{Duration, Instant};

use common::*;
use wordrep::enumerate::{count_non_representable, generate, minimal_non_representable, CountOptions};
use wordrep::families::{make, pattern_avoiding_fixture, petersen_representants, Family, LADDER_WORDS};
use wordrep::graph::{
    add_apex, cartesian_product, is_isomorphic, line_graph, rooted_product, substitute_module, Graph,
};
use wordrep::orientation::{
    is_comparability, is_permutationally_representable, is_semi_transitive, is_word_representable,
    is_word_representable_with, neighborhoods_are_comparability, word_to_orientation, SearchConfig,
};
use wordrep::repnum::*;
use wordrep::words::{alternate, cyclic_shift, extend_to_uniform, word_to_graph, Pattern, Word};

const LIMIT_1: Duration = Duration::from_secs(1);
const LIMIT_2: Duration = Duration::from_secs(60);
const LIMIT_3: Duration = Duration::from_secs(600);
const LIMIT_4: Duration = Duration::from_secs(1800);
const LIMIT_5: Duration = Duration::from_secs(8 * 3600 + 16 * 60);
const LIMIT_5_N7: Duration = Duration::from_secs(15 * 60);
const LIMIT_5_N6: Duration = Duration::from_secs(60);
const LIMIT_5_N8: Duration = Duration::from_secs(8 * 3600);
const LIMIT_6: Duration = Duration::from_secs(300);
const LIMIT_7: Duration = Duration::from_secs(1800);

#[derive(Default)]
struct Checks {
    total: usize,
    failed: Vec<String>,
}

impl Checks {
    fn check(&mut self, name: &str, ok: bool) {
        self.total += 1;
        if !ok {
            self.failed.push(name.to_string());
        }
    }

    // errors count as failures rather than aborting the run
    fn check_r(&mut self, name: &str, ok: wordrep::Result<bool>) {
        self.check(name, ok.unwrap_or(false));
    }
}

// Checks whose expected outcome is false: a counterexample exists. They are
// still run and still print FAIL, but do not fail the process.
const DISPROVED: [&str; 1] = ["star labeled with center 4 is 132-refuted"];

/// Returns (criterion passed, failures other than the disproved checks).
fn criterion(id: usize, limit: Duration, body: impl FnOnce(&mut Checks)) -> (bool, usize) {
    let start = Instant::now();
    let mut c = Checks::default();
    body(&mut c);
    let took = start.elapsed();
    if took > limit {
        c.failed.push(format!("time limit {}s exceeded", limit.as_secs()));
    }
    let pass = c.failed.is_empty();
    let mut line = format!(
        "criterion {id}: {} ({}/{} checks, {:.2}s of {}s)",
        if pass { "PASS" } else { "FAIL" },
        c.total - c.failed.len().min(c.total),
        c.total,
        took.as_secs_f64(),
        limit.as_secs()
    );
    if !pass {
        line.push_str(&format!("; failed: {}", c.failed.join("; ")));
    }
    println!("{line}");
    (pass, c.failed.iter().filter(|f| !DISPROVED.contains(&f.as_str())).count())
}

fn fixtures(c: &mut Checks) {
    let v = w("23125413241362");
    let alt = |x, y| alternate(&v, x, y).unwrap_or(false);
    c.check("2,3 alternate in 23125413241362", alt(2, 3));
    c.check("5,6 alternate in 23125413241362", alt(5, 6));
    c.check("1,3 do not alternate in 23125413241362", !alt(1, 3));
    c.check("4,6 do not alternate in 23125413241362", !alt(4, 6));
    let tri = Graph::from_edge_list(4, &[(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
    c.check("1213423 represents the triangle with a pendant", word_to_graph(&w("1213423")).ok() == Some(tri));
    c.check("uniform extension of 3412132154", extend_to_uniform(&w("3412132154")) == w("534253412132154"));
    c.check("162132435465 represents C6", word_to_graph(&w("162132435465")).ok() == Some(cycle(6)));
    let p = make(Family::Petersen).unwrap();
    let pw = petersen_representants();
    c.check("two Petersen words", pw.len() == 2);
    for (i, x) in pw.iter().enumerate() {
        let h = word_to_graph(x).unwrap();
        c.check(&format!("Petersen word {} up to isomorphism", i + 1), is_isomorphic(&h, &p).unwrap_or(false));
        if h == p {
            log_line(&format!("Petersen word {} matches the labels exactly", i + 1));
        } else {
            log_line(&format!("Petersen word {} matches only up to isomorphism", i + 1));
        }
    }
    for (i, lw) in LADDER_WORDS.iter().enumerate() {
        let n = i + 1;
        let ok = Word::new(lw.to_vec()).ok().and_then(|x| word_to_graph(&x).ok()) == make(Family::Ladder(n)).ok();
        c.check(&format!("ladder word n={n}"), ok);
    }
    let o = word_to_orientation(&w("2421341")).unwrap();
    let mut arcs = o.arcs();
    arcs.sort();
    c.check("2421341 leftmost arcs", arcs == [(1, 3), (2, 4), (4, 1), (4, 3)]);
    c.check("2421341 leftmost orientation semi-transitive", is_semi_transitive(&o));
}

fn log_line(s: &str) {
    eprintln!("  note: {s}");
}

fn decisions(c: &mut Checks) {
    let small: Vec<Graph> = (1..=5).flat_map(|n| generate(n, false).unwrap().graphs).collect();
    c.check("34 graphs on five vertices", generate(5, false).unwrap().len() == 34);
    c.check("graphs on <= 5 vertices representable", small.iter().all(|g| is_word_representable(g).unwrap_or(false)));
    let refuted = |f: Family| is_word_representable(&make(f).unwrap()).map(|r| !r);
    c.check_r("W5 refuted", refuted(Family::Wheel(5)));
    c.check_r("W7 refuted", refuted(Family::Wheel(7)));
    c.check_r("Petersen affirmed", is_word_representable(&make(Family::Petersen).unwrap()));
    for n in 3..=5 {
        c.check_r(&format!("Pr{n} affirmed"), is_word_representable(&make(Family::Prism(n)).unwrap()));
    }
    for n in 1..=5 {
        c.check_r(&format!("H{n},{n} affirmed"), is_word_representable(&make(Family::Crown(n)).unwrap()));
    }
}

fn rep_numbers(c: &mut Checks) {
    let cfg = WordSearchConfig::default();
    let r = |g: &Graph| representation_number(g, &cfg).map(|r| r.value).ok();
    let fin = |k| Some(RepresentationNumber::Finite(k));
    for n in 1..=6 {
        c.check(&format!("R(K{n}) = 1"), r(&Graph::complete(n).unwrap()) == fin(1));
    }
    for n in 2..=6 {
        c.check(&format!("R(E{n}) = 2"), r(&Graph::empty(n).unwrap()) == fin(2));
    }
    for n in 4..=7 {
        c.check(&format!("R(C{n}) = 2"), r(&cycle(n)) == fin(2));
    }
    let pr3 = make(Family::Prism(3)).unwrap();
    c.check("R(Pr3) = 3", r(&pr3) == fin(3));
    c.check("Pr3 not 2-representable, exhaustively", find_k_uniform_word(&pr3, 2, &cfg).map(|o| o.is_refuted()).unwrap_or(false));
    for n in 3..=8 {
        let bad = free_trees(n).iter().filter(|t| r(t) != fin(2)).count();
        c.check(&format!("R(tree) = 2 on {n} vertices"), bad == 0);
    }
}

fn oracle_equivalence(c: &mut Checks) {
    let cfg = WordSearchConfig { max_length: 60, ..Default::default() };
    let mut disagreements = 0;
    for n in 1..=6 {
        for g in generate(n, true).unwrap().graphs {
            let a = is_word_representable(&g).ok();
            let b = bounded_uniform_search(&g, &cfg).ok().and_then(|o| o.verdict());
            if a.is_none() || a != b {
                disagreements += 1;
            }
        }
    }
    c.check("orientation decision equals bounded word search", disagreements == 0);
}

fn counts(c: &mut Checks) {
    let opts = CountOptions { jobs: Some(4), ..Default::default() };
    let timed = |c: &mut Checks, name: &str, limit: Duration, f: &dyn Fn() -> bool| {
        let start = Instant::now();
        let ok = f();
        c.check(name, ok);
        c.check(&format!("{name} within {}s", limit.as_secs()), start.elapsed() < limit);
    };
    timed(c, "n=6 non-representable count 1", LIMIT_5_N6, &|| {
        count_non_representable(&generate(6, true).unwrap(), &opts).map(|r| r.count == 1).unwrap_or(false)
    });
    let seven = generate(7, true).unwrap();
    timed(c, "n=7 non-representable count 25", LIMIT_5_N7, &|| {
        count_non_representable(&seven, &opts).map(|r| r.count == 25).unwrap_or(false)
    });
    c.check("n=7 minimal count 10", minimal_non_representable(&seven, &opts).map(|m| m.len() == 10).unwrap_or(false));
    timed(c, "n=8 non-representable count 929", LIMIT_5_N8, &|| {
        count_non_representable(&generate(8, true).unwrap(), &opts).map(|r| r.count == 929).unwrap_or(false)
    });
}

fn patterns(c: &mut Checks) {
    let cfg = WordSearchConfig::default();
    let t123 = Pattern::parse("123").unwrap();
    let t132 = Pattern::parse("132").unwrap();
    let star = make(Family::Star(6)).unwrap();
    for center in 1..=7 {
        // move the center to `center`
        let perm: Vec<usize> = (1..=7).map(|v| if v == 1 { center } else if v <= center { v - 1 } else { v }).collect();
        let g = star.relabel(&perm).unwrap();
        let s = find_pattern_avoiding_word(&g, &t123, &cfg);
        c.check(
            &format!("K1,6 with center {center} not 123-representable"),
            s.map(|s| s.complete && s.outcome.is_refuted()).unwrap_or(false),
        );
    }
    let k = |n| Graph::complete(n).unwrap();
    c.check("K4 132 count to length 7 is 27", count_pattern_avoiding_representants(&k(4), &t132, 7).ok() == Some(27));
    c.check("K5 132 count to length 8 is 72", count_pattern_avoiding_representants(&k(5), &t132, 8).ok() == Some(72));
    let mut over = 0;
    for n in 1..=6 {
        for g in generate(n, false).unwrap().graphs {
            if let Ok(s) = find_pattern_avoiding_word(&g, &t132, &cfg) {
                if let Some(x) = s.outcome.witness {
                    over += x.counts().iter().any(|&m| m > 2) as usize;
                }
            }
        }
    }
    c.check("132 witnesses use each letter at most twice", over == 0);
    for n in 3..=7 {
        c.check(&format!("C{n} 132 fixture"), pattern_avoiding_fixture(Family::Cycle(n), &t132).is_ok());
    }
    let claw = make(Family::Claw).unwrap();
    let left = find_pattern_avoiding_word(&claw, &t132, &cfg);
    c.check("star labeled with center 1 is 132-representable", left.map(|s| s.outcome.is_witness()).unwrap_or(false));
    let right = claw.relabel(&[4, 1, 2, 3]).unwrap();
    let rs = find_pattern_avoiding_word(&right, &t132, &cfg);
    c.check(
        "star labeled with center 4 is 132-refuted",
        rs.map(|s| s.complete && s.outcome.is_refuted()).unwrap_or(false),
    );
}

fn properties(c: &mut Checks) {
    let mut shift_bad = 0;
    for n in 1..=4u32 {
        for k in 1..=3usize {
            let counts = vec![k; n as usize];
            multiset_words(&counts, |v| {
                let x = Word::new(v.to_vec()).unwrap();
                if word_to_graph(&cyclic_shift(&x)).ok() != word_to_graph(&x).ok() {
                    shift_bad += 1;
                }
                true
            });
        }
    }
    c.check("cyclic shifts of uniform words", shift_bad == 0);
    let mut orient_bad = 0;
    for n in 1..=5 {
        dense_words(n, 8, |v| {
            let x = Word::new(v.to_vec()).unwrap();
            if !word_to_orientation(&x).map(|o| is_semi_transitive(&o)).unwrap_or(false) {
                orient_bad += 1;
            }
        });
    }
    c.check("leftmost orientations semi-transitive", orient_bad == 0);
    let small: Vec<Graph> = (1..=5).flat_map(|n| generate(n, false).unwrap().graphs).collect();
    let apex_bad = small
        .iter()
        .filter(|h| {
            is_word_representable(&add_apex(h).unwrap()).ok() != is_permutationally_representable(h).ok()
        })
        .count();
    c.check("apex equivalence on <= 5 vertices", apex_bad == 0);
    let nb_bad = (1..=6)
        .flat_map(|n| generate(n, false).unwrap().graphs)
        .filter(|g| is_word_representable(g).unwrap_or(false) && !neighborhoods_are_comparability(g).unwrap_or(false))
        .count();
    c.check("neighborhoods of representable graphs are comparability", nb_bad == 0);
    let sixteen = SearchConfig::with_max_vertices(16);
    let pairs: Vec<Graph> = (1..=4).flat_map(|n| generate(n, false).unwrap().graphs).collect();
    let mut prod_bad = 0;
    for g in &pairs {
        for h in &pairs {
            let mut gs = vec![cartesian_product(g, h).unwrap()];
            gs.extend((1..=h.n()).map(|r| rooted_product(g, h, r).unwrap()));
            prod_bad += gs.iter().filter(|p| !is_word_representable_with(p, &sixteen).unwrap_or(false)).count();
        }
    }
    c.check("products of representable pairs", prod_bad == 0);
    let cfg = WordSearchConfig::default();
    let pr3 = make(Family::Prism(3)).unwrap();
    let k3 = Graph::complete(3).unwrap();
    let mut sub_bad = 0;
    for v in 1..=6 {
        let h = substitute_module(&pr3, v, &k3).unwrap();
        if representation_number(&h, &cfg).map(|r| r.value).ok() != Some(RepresentationNumber::Finite(3)) {
            sub_bad += 1;
        }
    }
    for g in generate(5, true).unwrap().graphs {
        for m in 2..=3 {
            let h = substitute_module(&g, 1, &Graph::complete(m).unwrap()).unwrap();
            if !is_word_representable(&h).unwrap_or(false) {
                sub_bad += 1;
            }
        }
    }
    c.check("clique modules keep representability and R(Pr3)", sub_bad == 0);
    for (name, g) in [
        ("L(W4)", make(Family::Wheel(4)).unwrap()),
        ("L(W5)", make(Family::Wheel(5)).unwrap()),
        ("L(K5)", Graph::complete(5).unwrap()),
    ] {
        let l = line_graph(&g).unwrap();
        c.check(&format!("{name} refuted"), is_word_representable_with(&l, &sixteen).map(|r| !r).unwrap_or(false));
    }
    c.check("C5 not a comparability graph", is_comparability(&cycle(5)).map(|r| !r).unwrap_or(false));
    let h33 = make(Family::Crown(3)).unwrap();
    c.check(
        "H3,3 permutational number 3",
        permutational_representation_number(&h33, 3, &cfg).ok().and_then(|o| o.witness).map(|w| w.0) == Some(3),
    );
}

fn main() {
    let results = [
        criterion(1, LIMIT_1, fixtures),
        criterion(2, LIMIT_2, decisions),
        criterion(3, LIMIT_3, rep_numbers),
        criterion(4, LIMIT_4, oracle_equivalence),
        criterion(5, LIMIT_5, counts),
        criterion(6, LIMIT_6, patterns),
        criterion(7, LIMIT_7, properties),
    ];
    let passed = results.iter().filter(|r| r.0).count();
    let unexpected: usize = results.iter().map(|r| r.1).sum();
    println!("acceptance: {passed}/7 criteria pass");
    if passed < 7 {
        let w = Word::from_digits("3432141").unwrap();
        let star = make(Family::Claw).unwrap().relabel(&[4, 1, 2, 3]).unwrap();
        println!(
            "  counterexample for the disproved check: {w} avoids 132: {}, represents the star centered at 4: {}",
            !wordrep::words::contains_pattern(&w, &Pattern::parse("132").unwrap()),
            word_to_graph(&w).ok() == Some(star)
        );
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
