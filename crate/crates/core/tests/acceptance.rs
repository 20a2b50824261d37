//! Acceptance run: one line per criterion, non-zero exit if any fails.
//! Failing instances are written as JSON lines under the cargo test tmpdir.

use std::collections::BTreeMap;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use matchpow::classifier::{classify_last_power, verify_certificate, Condition, Trace};
use matchpow::harness::{
    are_isomorphic, construct_linear_forests, cross_validate, random_forest_on, rng,
    verify_forest_corpus, verify_induced_pairs, verify_unweighted_exhaustive, verify_unweighted_random,
    CorpusOptions, CorpusSummary,
};
use matchpow::homology::Field;
use matchpow::polymatroid::is_polymatroidal;
use matchpow::powers::{edge_ideal, matching_power};
use matchpow::resolution::{betti_numbers, has_linear_resolution};
use matchpow::{GraphDocument, Monomial, MonomialIdeal, SimpleGraph, WeightedOrientedGraph};

struct Outcome {
    pass: bool,
    detail: String,
    dump: Vec<GraphDocument>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
            dump: Vec::new(),
        }
    }
}

fn dump_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance")
}

fn run(number: usize, title: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Outcome::new(false, format!("panicked: {msg}"))
    });
    let tag = if outcome.pass { "PASS" } else { "FAIL" };
    println!(
        "criterion {number:>2} [{tag}] {title}: {} ({:.1?})",
        outcome.detail,
        start.elapsed()
    );
    if !outcome.dump.is_empty() {
        let dir = dump_dir();
        std::fs::create_dir_all(&dir).expect("tmpdir");
        let path = dir.join(format!("criterion-{number}.jsonl"));
        let mut file = std::fs::File::create(&path).expect("dump file");
        for doc in &outcome.dump {
            writeln!(file, "{}", serde_json::to_string(doc).unwrap()).unwrap();
        }
        println!("             failing instances written to {}", path.display());
    }
    outcome.pass
}

fn graph(n: usize, arcs: &[(usize, usize)], weights: &[u32]) -> WeightedOrientedGraph {
    WeightedOrientedGraph::from_arcs(n, arcs, weights).unwrap()
}

fn unweighted_exhaustive() -> Outcome {
    let s = verify_unweighted_exhaustive(7).unwrap();
    let mut o = Outcome::new(s.all_passed(), format!("{}/{} graphs", s.passed, s.graphs));
    o.dump = s
        .failures
        .iter()
        .map(|e| GraphDocument::from_graph(&WeightedOrientedGraph::from_simple(&SimpleGraph::from_edges(7, e).unwrap())))
        .collect();
    o
}

fn unweighted_random() -> Outcome {
    let s = verify_unweighted_random(500, 9, 42).unwrap();
    Outcome::new(s.all_passed() && s.graphs == 500, format!("{}/{} graphs, seed 42", s.passed, s.graphs))
}

fn corpus_equivalence(s: &CorpusSummary) -> Outcome {
    let pass = s.disagreements == 0
        && s.replay_failures == 0
        && s.considered > 0
        && s.skipped_fraction() < 0.01;
    let mut o = Outcome::new(
        pass,
        format!(
            "{} instances of {} enumerated, {} agree, {} disagree, {} oracle-skipped, {} accepted, {} replay failures, {} field mismatches logged",
            s.considered,
            s.enumerated,
            s.agreements,
            s.disagreements,
            s.oracle_skipped,
            s.classifier_true,
            s.replay_failures,
            s.field_mismatches
        ),
    );
    o.dump = s.failures.clone();
    o
}

fn corpus_lower_powers(s: &CorpusSummary) -> Outcome {
    Outcome::new(
        s.lower_powers_linearly_related == 0 && s.lower_powers_skipped == 0 && s.lower_powers > 0,
        format!(
            "{} powers below the last checked, {} linearly related, {} skipped",
            s.lower_powers, s.lower_powers_linearly_related, s.lower_powers_skipped
        ),
    )
}

fn corpus_constant_degrees(s: &CorpusSummary) -> Outcome {
    Outcome::new(
        s.constant_degree_violations == 0 && s.linearly_related_powers > 0,
        format!(
            "{} linearly related powers, {} violations",
            s.linearly_related_powers, s.constant_degree_violations
        ),
    )
}

fn induced_pairs() -> Outcome {
    let reports = verify_induced_pairs(50, 42, Field::Gf2).unwrap();
    let ok = reports.iter().filter(|r| r.holds).count();
    let mut o = Outcome::new(ok == 50 && reports.len() == 50, format!("{ok}/{} pairs, seed 42", reports.len()));
    o.dump = reports.iter().filter(|r| !r.holds).map(|r| r.graph.clone()).collect();
    o
}

fn corpus_strong_edges(s: &CorpusSummary) -> Outcome {
    Outcome::new(
        s.strong_edge_mismatches == 0 && s.strong_edge_checks > 0,
        format!(
            "{} configurations with one leaf, {} mismatches",
            s.strong_edge_checks, s.strong_edge_mismatches
        ),
    )
}

/// The seven-vertex forest: a..g = 0..6, arcs c->a, d->a, d->b, e->b,
/// f->d, g->d, w(a) = w(b) = 2.
fn seven_vertex() -> WeightedOrientedGraph {
    graph(7, &[(2, 0), (3, 0), (3, 1), (4, 1), (5, 3), (6, 3)], &[2, 2, 1, 1, 1, 1, 1])
}

fn families() -> Vec<(&'static str, WeightedOrientedGraph)> {
    vec![
        ("two in-stars", graph(4, &[(0, 1), (2, 3)], &[1, 2, 1, 2])),
        ("joined centres p->q", graph(4, &[(0, 1), (2, 3), (1, 3)], &[1, 2, 1, 2])),
        ("joined centres q->p", graph(4, &[(0, 1), (2, 3), (3, 1)], &[1, 2, 1, 2])),
        ("shared leaf", graph(5, &[(0, 1), (2, 1), (2, 3), (4, 3)], &[1, 2, 1, 2, 1])),
    ]
}

fn fixtures() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    let mut check = |ok: bool, what: &str| {
        if !ok {
            pass = false;
            notes.push(format!("failed: {what}"));
        }
    };

    // star with three leaves pointing at x4, w(x4) = 2
    let star = graph(4, &[(0, 3), (1, 3), (2, 3)], &[1, 1, 1, 2]);
    let expected = MonomialIdeal::variables(4, &[0, 1, 2])
        .scale(&Monomial::var_pow(4, 3, 2))
        .unwrap();
    check(classify_last_power(&star).unwrap().verdict, "star classified");
    check(edge_ideal(&star).ideal_equals(&expected).unwrap(), "star ideal factors");

    let d = seven_vertex();
    let last = matching_power(&edge_ideal(&d), 3).unwrap();
    let product = MonomialIdeal::principal(Monomial::from_slice(&[2, 2, 1, 1, 1, 0, 0]))
        .product(&MonomialIdeal::variables(7, &[5, 6]))
        .unwrap();
    check(last.len() == 2 && last.ideal_equals(&product).unwrap(), "last power of the seven-vertex forest");
    let cert = classify_last_power(&d).unwrap();
    check(cert.verdict, "seven-vertex forest classified");
    check(verify_certificate(&d, &cert).unwrap(), "seven-vertex certificate replays");
    let table = betti_numbers(&last, Field::Gf2).unwrap();
    let graded: BTreeMap<(usize, u32), usize> = [((0, 8), 2), ((1, 9), 1)].into();
    check(table.graded() == graded, "seven-vertex Betti table");
    check(has_linear_resolution(&last, Field::Gf2).unwrap(), "seven-vertex linear resolution");

    let built = construct_linear_forests(2, 500).unwrap();
    for (name, f) in families() {
        check(classify_last_power(&f).unwrap().verdict, name);
        check(is_polymatroidal(&matching_power(&edge_ideal(&f), 2).unwrap()), name);
        check(built.iter().any(|b| are_isomorphic(b, &f)), &format!("constructor reaches {name}"));
    }
    let first = construct_linear_forests(3, 1).unwrap();
    check(
        first.len() == 1 && are_isomorphic(&first[0], &d),
        "constructor starts with the seven-vertex forest",
    );

    let detail = if pass {
        format!(
            "star, seven-vertex forest (Betti {:?}), {} two-matching families, constructor",
            graded,
            families().len()
        )
    } else {
        notes.join("; ")
    };
    Outcome::new(pass, detail)
}

fn negative_fixture() -> Outcome {
    // a1=0, a2=1, b=2, c=3, e1=4, e2=5 with a1->b, b->a2, w(b)=2
    let d = graph(6, &[(0, 2), (2, 1), (2, 3), (3, 4), (3, 5)], &[1, 1, 2, 1, 1, 1]);
    let first = classify_last_power(&d).unwrap();
    let again = classify_last_power(&d).unwrap();
    let refuted_gamma = matches!(
        first.trace,
        Trace::Refuted {
            condition: Condition::Gamma,
            ..
        }
    );
    let report = cross_validate(&d).unwrap();
    let v = &report.verdicts;
    let all_false = !v.classifier
        && v.polymatroidal == Some(false)
        && v.linear_resolution == Some(false)
        && v.linearly_related == Some(false);
    let not_equigenerated = matching_power(&edge_ideal(&d), 2)
        .unwrap()
        .equigenerated_degree()
        .unwrap()
        .is_none();
    Outcome::new(
        refuted_gamma && all_false && not_equigenerated && first == again && report.agreement,
        format!("{}, oracles {:?}", first.label(), v),
    )
}

fn performance(suite_start: Instant) -> Outcome {
    let mut worst = Duration::ZERO;
    for seed in 0..5 {
        let d = random_forest_on(&mut rng(seed), 40, 3);
        let t = Instant::now();
        classify_last_power(&d).unwrap();
        worst = worst.max(t.elapsed());
    }
    let p4 = MonomialIdeal::minimalize(
        [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]].map(|e| Monomial::from_slice(&e)),
        4,
    )
    .unwrap();
    let t = Instant::now();
    betti_numbers(&p4, Field::Gf2).unwrap();
    let betti = t.elapsed();
    let total = suite_start.elapsed();
    Outcome::new(
        worst < Duration::from_secs(1) && betti < Duration::from_millis(10) && total < Duration::from_secs(30 * 60),
        format!("classify n=40 worst {worst:.1?}, Betti of the path ideal {betti:.1?}, suite {total:.1?}"),
    )
}

fn main() {
    let suite_start = Instant::now();
    let mut results = Vec::new();
    results.push(run(1, "unweighted last power, all graphs on 7 vertices", unweighted_exhaustive));
    results.push(run(2, "unweighted last power, 500 random graphs", unweighted_random));

    let corpus_start = Instant::now();
    let corpus = catch_unwind(|| verify_forest_corpus(6, 3, CorpusOptions::default()).unwrap());
    let corpus_time = corpus_start.elapsed();
    let corpus_ref = corpus.as_ref().ok();
    let with_corpus = |f: fn(&CorpusSummary) -> Outcome| {
        move || match corpus_ref {
            Some(s) => f(s),
            None => Outcome::new(false, "forest corpus run panicked"),
        }
    };
    results.push(run(3, "classifier vs oracles, forests on 6 vertices", || {
        let mut o = with_corpus(corpus_equivalence)();
        o.detail = format!("{}; shared corpus run {corpus_time:.1?}", o.detail);
        o
    }));
    results.push(run(4, "no lower matching power linearly related", with_corpus(corpus_lower_powers)));
    results.push(run(5, "constant high degrees in linearly related powers", with_corpus(corpus_constant_degrees)));
    results.push(run(6, "Betti and regularity monotone under induced subgraphs", induced_pairs));
    results.push(run(7, "strong-edge criterion vs matching numbers", with_corpus(corpus_strong_edges)));
    results.push(run(8, "worked examples", fixtures));
    results.push(run(9, "exponent mismatch on a double star", negative_fixture));
    results.push(run(10, "performance", || performance(suite_start)));

    let passed = results.iter().filter(|&&r| r).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
