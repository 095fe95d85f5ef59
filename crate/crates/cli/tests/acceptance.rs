//! Acceptance suite. Prints one PASS/FAIL line per criterion; expected values
//! are written out literally here rather than taken from the harness oracle.
//!
//! A criterion can be red because the claimed number is not what the graph
//! has. Those are listed in `KNOWN_RED` with the reason; the binary exits
//! nonzero only when a criterion's color differs from that list.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use eicolor_cli::{run_with_env, Streams};
use eicolor_core::family::{is_plane_rotation, path};
use eicolor_core::solve::brute_force_chromatic;
use eicolor_core::{chromatic_number, derived_graph, Budget, FamilySpec, Fixture, Graph, Mode};
use eicolor_harness::claims::corpus_instances;
use eicolor_harness::oracle::planar_question_bound;
use eicolor_harness::{check, evaluate, oracle_chi_ei, Claim, Eval, OracleValue, Params, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Whole of criterion 1.
const FAMILY_SWEEP_LIMIT: Duration = Duration::from_secs(300);
/// Each torus in criterion 5.
const TORUS_LIMIT: Duration = Duration::from_secs(180);
const SEED: u64 = 0x5eed_00e1;

/// Criteria that are red because the claimed values do not hold.
const KNOWN_RED: &[(usize, &str)] = &[
    (5, "C3□C7 has an 11-coloring; 12 is claimed"),
    (
        6,
        "the drawn M3 and M5 have 5- and 12-colorings; 6 and 13 are claimed",
    ),
    (
        8,
        "P3-pairs observation fails on graphs whose edges form an induced matching, e.g. K2",
    ),
];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(failures: Vec<String>, ok: String) -> Self {
        if failures.is_empty() {
            Outcome {
                pass: true,
                detail: ok,
            }
        } else {
            Outcome {
                pass: false,
                detail: failures.join("; "),
            }
        }
    }
}

fn spec(s: &str) -> FamilySpec {
    s.parse().expect("acceptance specs are valid")
}

/// Confronts `family` with the solver through the harness, against a value
/// written in this file. Also requires the oracle to agree with that value.
fn family_check(
    claim: Claim,
    s: &str,
    expected: usize,
    failures: &mut Vec<String>,
    want_pattern: bool,
) -> Duration {
    let sp = spec(s);
    if oracle_chi_ei(&sp) != OracleValue::Value(expected) {
        failures.push(format!(
            "{s}: oracle says {}, criterion says {expected}",
            oracle_chi_ei(&sp)
        ));
    }
    let r = match check(claim, &Params::Family(sp), Budget::default()) {
        Ok(r) => r,
        Err(e) => {
            failures.push(format!("{s}: {e}"));
            return Duration::ZERO;
        }
    };
    if r.solver != Some(expected) {
        failures.push(format!("{s}: solver {:?}, expected {expected}", r.solver));
    } else if r.verdict != Verdict::Pass {
        failures.push(format!("{s}: {}", r.note.clone().unwrap_or_default()));
    }
    if want_pattern && (r.pattern_valid != Some(true) || r.pattern_colors != Some(expected)) {
        failures.push(format!(
            "{s}: pattern {:?}/{:?}",
            r.pattern_valid, r.pattern_colors
        ));
    }
    r.elapsed
}

fn family_instances_1() -> Vec<(Claim, String, usize)> {
    let mut v = Vec::new();
    for n in 1..=12 {
        v.push((Claim::Path, format!("path:{n}"), if n <= 3 { 1 } else { 2 }));
    }
    for n in 3..=15 {
        let x = if n == 3 {
            1
        } else if n % 2 == 0 {
            2
        } else {
            3
        };
        v.push((Claim::Cycle, format!("cycle:{n}"), x));
    }
    for n in 1..=8 {
        v.push((
            Claim::Complete,
            format!("complete:{n}"),
            if n <= 3 { 1 } else { n },
        ));
    }
    for n in 3..=8 {
        v.push((Claim::Wheel, format!("wheel:{n}"), n + 1));
    }
    for m in 2..=5 {
        for n in 2..=5 {
            v.push((Claim::Bipartite, format!("bipartite:{m},{n}"), 2));
        }
    }
    v.push((Claim::Multipartite, "multipartite:1,1,1".into(), 1));
    for n in 4..=7 {
        v.push((
            Claim::Multipartite,
            format!("multipartite:{},1,1", n - 2),
            n - 1,
        ));
    }
    for (parts, n) in [("2,2,2", 6), ("1,2,2", 5), ("2,2,3", 7), ("1,1,1,1", 4)] {
        v.push((Claim::Multipartite, format!("multipartite:{parts}"), n));
    }
    v.push((Claim::Fan, "fan:1,2".into(), 1));
    for m in 2..=5 {
        v.push((Claim::Fan, format!("fan:{m},2"), m + 1));
    }
    for n in 4..=6 {
        v.push((Claim::Fan, format!("fan:1,{n}"), 1 + n));
    }
    for m in 2..=4 {
        for n in 3..=5 {
            v.push((Claim::Fan, format!("fan:{m},{n}"), m + n));
        }
    }
    v.push((Claim::Fan, "fan:1,3".into(), 3));
    for m in 4..=6 {
        for n in 4..=m {
            v.push((
                Claim::CliqueBridge,
                format!("cliquebridge:{m},{n}"),
                m + n - 1,
            ));
        }
    }
    v
}

const PRISMS: [usize; 10] = [6, 2, 5, 2, 4, 2, 3, 2, 3, 2];

fn prism_instances() -> Vec<(Claim, String, usize)> {
    (3..=12)
        .map(|n| (Claim::Prism, format!("prism:{n}"), PRISMS[n - 3]))
        .collect()
}

fn grid_instances() -> Vec<(Claim, String, usize)> {
    (2..=6)
        .flat_map(|m| (2..=6).map(move |n| (Claim::Grid, format!("grid:{m}x{n}"), 2)))
        .collect()
}

fn cylinder_instances() -> Vec<(Claim, String, usize)> {
    let value = |n: usize| match n {
        3 => 6,
        5 => 5,
        7 => 4,
        9 => 3,
        _ => 2,
    };
    (2..=4)
        .flat_map(|m| {
            (3..=9).map(move |n| (Claim::Cylinder, format!("cylinder:{m}x{n}"), value(n)))
        })
        .collect()
}

const TORI: [(usize, usize, usize); 11] = [
    (3, 3, 9),
    (3, 5, 15),
    (3, 7, 12),
    (3, 4, 6),
    (3, 6, 6),
    (3, 9, 9),
    (4, 4, 2),
    (4, 6, 2),
    (5, 4, 5),
    (5, 5, 5),
    (4, 7, 4),
];

fn torus_instances() -> Vec<(Claim, String, usize)> {
    TORI.iter()
        .map(|&(m, n, x)| (Claim::Torus, format!("torus:{m}x{n}"), x))
        .collect()
}

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    let start = Instant::now();
    let list = family_instances_1();
    for (claim, s, x) in &list {
        family_check(*claim, s, *x, &mut failures, false);
    }
    let took = start.elapsed();
    if took > FAMILY_SWEEP_LIMIT {
        failures.push(format!("took {took:?}, limit {FAMILY_SWEEP_LIMIT:?}"));
    }
    Outcome::from_failures(
        failures,
        format!("{} family instances agree, {:.2?}", list.len(), took),
    )
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    for (claim, s, x) in prism_instances() {
        let n: usize = s["prism:".len()..].parse().unwrap();
        family_check(
            claim,
            &s,
            x,
            &mut failures,
            n.is_multiple_of(2) || [5, 7, 9, 12].contains(&n),
        );
    }
    Outcome::from_failures(failures, format!("D3..D12 = {PRISMS:?}, patterns validate"))
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    for (claim, s, x) in grid_instances() {
        family_check(claim, &s, x, &mut failures, true);
    }
    Outcome::from_failures(failures, "25 grids give 2 with the parity pattern".into())
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    for (claim, s, x) in cylinder_instances() {
        family_check(claim, &s, x, &mut failures, true);
    }
    Outcome::from_failures(failures, "21 cylinders agree, patterns validate".into())
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for (claim, s, x) in torus_instances() {
        let took = family_check(claim, &s, x, &mut failures, true);
        if took > TORUS_LIMIT {
            failures.push(format!("{s}: took {took:?}, limit {TORUS_LIMIT:?}"));
        }
        slowest = slowest.max(took);
    }
    Outcome::from_failures(failures, format!("11 tori agree, slowest {slowest:.2?}"))
}

fn criterion_6() -> Outcome {
    let claimed = [
        (Fixture::M3, 6),
        (Fixture::M4, 12),
        (Fixture::M5, 13),
        (Fixture::M6, 16),
        (Fixture::M7, 16),
        (Fixture::M8, 16),
    ];
    let mut failures = Vec::new();
    for (f, x) in claimed {
        // The invariants gate the transcription before any value is compared.
        let data = f.data();
        let g = f.graph();
        if g.max_degree() != f.max_degree() || !is_plane_rotation(&g, &data.rotation) {
            failures.push(format!("{}: transcription invariants broken", f.name()));
            continue;
        }
        let r = check(
            Claim::Fixture,
            &Params::Family(FamilySpec::Fixture(f)),
            Budget::default(),
        )
        .unwrap();
        let bound = planar_question_bound(g.max_degree());
        match r.solver {
            Some(chi) if chi == x && chi > bound => {}
            Some(chi) => {
                failures.push(format!("{} = {chi} (claimed {x}, bound {bound})", f.name()))
            }
            None => failures.push(format!("{}: unsolved", f.name())),
        }
    }
    Outcome::from_failures(failures, "M3..M8 agree and exceed the planar bound".into())
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p: f64 = rng.gen_range(0.1..0.9);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edge_list(n, edges).unwrap()
}

fn random_tree(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edge_list(n, edges).unwrap()
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    for i in 0..500 {
        let g = random_graph(&mut rng, 8);
        for mode in Mode::ALL {
            let fast = chromatic_number(&g, mode, Budget::unlimited()).chi;
            let slow = brute_force_chromatic(&derived_graph(&g, mode)).unwrap();
            if fast != Some(slow) {
                failures.push(format!("graph {i} {mode}: {fast:?} vs {slow}"));
            }
        }
    }
    Outcome::from_failures(failures, "500 graphs x 4 modes, zero mismatches".into())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let budget = Budget::default();
    let mut failures = Vec::new();
    fn tally(failures: &mut Vec<String>, name: &str, evals: Vec<(String, Eval)>) {
        let checked = evals
            .iter()
            .filter(|(_, e)| !matches!(e, Eval::OutOfScope(_)))
            .count();
        let bad: Vec<&(String, Eval)> = evals
            .iter()
            .filter(|(_, e)| !matches!(e, Eval::Holds { .. } | Eval::OutOfScope(_)))
            .collect();
        if checked == 0 {
            failures.push(format!("{name}: nothing in scope"));
        }
        if let Some((label, e)) = bad.first() {
            failures.push(format!(
                "{name}: {} of {checked} violate, first {label}: {e:?}",
                bad.len()
            ));
        }
    }
    let ev = |claim: Claim, gs: Vec<Graph>| evaluate(claim, &gs, budget).unwrap();

    let graphs: Vec<Graph> = (0..500).map(|_| random_graph(&mut rng, 9)).collect();
    let obs: Vec<(String, Eval)> = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("g{i}"), ev(Claim::Observations, vec![g.clone()])))
        .collect();
    // Separate violations on induced matchings (hypothesis vacuous) from any other kind.
    let (matching, other): (Vec<_>, Vec<_>) = obs
        .iter()
        .zip(&graphs)
        .filter(|((_, e), _)| matches!(e, Eval::Violated(_)))
        .partition(|(_, g)| g.max_degree() == 1);
    if !other.is_empty() {
        failures.push(format!(
            "observations: {} violations beyond induced matchings, first {:?}",
            other.len(),
            other[0].0
        ));
    }
    if !matching.is_empty() {
        failures.push(format!("observations: {} of 500 graphs are induced matchings violating p3-pairs-are-p4-ends, first {}", matching.len(), matching[0].0 .0));
    }
    let obs = obs
        .into_iter()
        .filter(|(_, e)| !matches!(e, Eval::Violated(_)))
        .collect();
    tally(&mut failures, "observations", obs);

    let trees: Vec<(String, Eval)> = (0..200)
        .map(|i| {
            (
                format!("t{i}"),
                ev(Claim::TreeDichotomy, vec![random_tree(&mut rng, 12)]),
            )
        })
        .collect();
    tally(&mut failures, "tree dichotomy", trees);

    let mut with_edges = || loop {
        let g = random_graph(&mut rng, 6);
        if g.edge_count() > 0 {
            return g;
        }
    };
    let joins: Vec<(String, Eval)> = (0..50)
        .map(|i| {
            (
                format!("j{i}"),
                ev(Claim::Join, vec![with_edges(), with_edges()]),
            )
        })
        .collect();
    tally(&mut failures, "join", joins);
    let unions: Vec<(String, Eval)> = (0..50)
        .map(|i| {
            (
                format!("u{i}"),
                ev(
                    Claim::Union,
                    vec![random_graph(&mut rng, 7), random_graph(&mut rng, 7)],
                ),
            )
        })
        .collect();
    tally(&mut failures, "union", unions);

    // Degree bound over the random graphs and the built-in corpus; odd
    // cycles must attain it.
    let mut degree: Vec<(String, Eval)> = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("g{i}"), ev(Claim::DegreeBound, vec![g.clone()])))
        .collect();
    degree.extend(
        corpus_instances(Claim::DegreeBound)
            .into_iter()
            .map(|(l, gs)| (l, ev(Claim::DegreeBound, gs))),
    );
    for n in [5, 7] {
        let e = ev(
            Claim::DegreeBound,
            vec![spec(&format!("cycle:{n}")).generate().unwrap()],
        );
        if !matches!(&e, Eval::Holds { note: Some(_), .. }) {
            failures.push(format!("degree bound not attained at C{n}: {e:?}"));
        }
    }
    tally(&mut failures, "degree bound", degree);

    let mut packing: Vec<(String, Eval)> = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("g{i}"), ev(Claim::PackingChain, vec![g.clone()])))
        .collect();
    packing.extend(
        corpus_instances(Claim::PackingChain)
            .into_iter()
            .map(|(l, gs)| (l, ev(Claim::PackingChain, gs))),
    );
    tally(&mut failures, "packing chain", packing);

    for claim in [Claim::StrongProductLemma, Claim::CartesianSandwich] {
        let evals = corpus_instances(claim)
            .into_iter()
            .map(|(l, gs)| (l, ev(claim, gs)))
            .collect();
        tally(&mut failures, claim.as_str(), evals);
    }
    let sharp = ev(
        Claim::CartesianSandwich,
        vec![
            spec("cycle:3").generate().unwrap(),
            spec("cycle:5").generate().unwrap(),
        ],
    );
    if sharp
        != (Eval::Holds {
            chi: Some(15),
            note: Some("upper bound 15 attained".into()),
        })
    {
        failures.push(format!("C3, C5 sandwich: {sharp:?}"));
    }
    // The join formula on the worked example.
    if ev(Claim::Join, vec![path(3), path(3)])
        != (Eval::Holds {
            chi: Some(6),
            note: None,
        })
    {
        failures.push("join of P3 and P3 is not 6".into());
    }
    Outcome::from_failures(
        failures,
        "all structural claims hold, zero violations".into(),
    )
}

fn cli(args: &[&str], stdin: &str) -> (i32, String) {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with_env(
        std::iter::once("eicolor").chain(args.iter().copied()),
        Streams {
            stdin: &mut input,
            stdout: &mut out,
            stderr: &mut err,
        },
        |_| None,
    );
    (code, String::from_utf8(out).unwrap())
}

fn chi_of(json: &str) -> Option<u64> {
    let v: serde_json::Value = serde_json::from_str(json).ok()?;
    v.get("chi")?.as_u64()
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    let all: Vec<String> = [
        family_instances_1(),
        prism_instances(),
        grid_instances(),
        cylinder_instances(),
        torus_instances(),
    ]
    .concat()
    .into_iter()
    .map(|(_, s, _)| s)
    .collect();
    for s in &all {
        let (_, g) = cli(&["gen", s, "--json"], "");
        let (_, s3) = cli(&["transform", "-", "s3", "--json"], &g);
        let (_, via_s3) = cli(&["solve", "-", "--mode", "proper"], &s3);
        let (_, direct) = cli(&["solve", "-", "--mode", "einjective"], &g);
        match (chi_of(&via_s3), chi_of(&direct)) {
            (Some(a), Some(b)) if a == b => {}
            (a, b) => failures.push(format!("{s}: chi(S3) {a:?}, chi_ei {b:?}")),
        }
    }
    Outcome::from_failures(
        failures,
        format!("{} instances round-trip through the CLI", all.len()),
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("family formulas", criterion_1),
        ("prisms", criterion_2),
        ("grids", criterion_3),
        ("cylinders", criterion_4),
        ("tori", criterion_5),
        ("planar fixtures", criterion_6),
        ("solver vs partition enumeration", criterion_7),
        ("structural claims", criterion_8),
        ("three-step identity via CLI", criterion_9),
    ];
    let mut unexpected = Vec::new();
    for (i, (title, f)) in criteria.into_iter().enumerate() {
        let id = i + 1;
        let start = Instant::now();
        let o = f();
        let known = KNOWN_RED.iter().find(|(k, _)| *k == id);
        println!(
            "criterion {id} {}: {title}: {} ({:.2?})",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed()
        );
        match (o.pass, known) {
            (false, Some((_, why))) => println!("    known red: {why}"),
            (true, Some(_)) => {
                unexpected.push(format!("criterion {id} passes but is listed as known red"))
            }
            (false, None) => unexpected.push(format!("criterion {id} failed")),
            (true, None) => {}
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria match their recorded status");
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            println!("acceptance: {u}");
        }
        ExitCode::FAILURE
    }
}
