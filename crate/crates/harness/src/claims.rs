//! The claim registry and the check that confronts a claim with the solver.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use eicolor_core::family::{disjoint_union, join, product};
use eicolor_core::metrics::{packing_number, two_distance_domination_number};
use eicolor_core::solve::verify_coloring;
use eicolor_core::transform::structure_predicate;
use eicolor_core::{
    chromatic_number, Budget, Coloring, Diameter, FamilySpec, Graph, Mode, ProductKind,
    SolveResult, StructurePredicate,
};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::corpus;
use crate::oracle::{oracle_chi_ei, planar_question_bound, OracleValue};
use crate::pattern::{pattern_coloring, tree_coloring};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("{claim}: no value is claimed for {params}")]
    OutOfRange { claim: Claim, params: String },
    #[error("{claim} cannot be checked on {params}")]
    WrongParams { claim: Claim, params: String },
    #[error(transparent)]
    Core(#[from] eicolor_core::Error),
}

/// Registered claims, in the order reports are emitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Path,
    Cycle,
    Complete,
    Star,
    DoubleStar,
    Wheel,
    Bipartite,
    RegularBipartite,
    Multipartite,
    Fan,
    CliqueBridge,
    Ladder,
    Grid,
    Prism,
    Cylinder,
    Torus,
    Fixture,
    TreeDichotomy,
    Union,
    Join,
    DegreeBound,
    PackingChain,
    Observations,
    StrongProductLemma,
    CartesianSandwich,
}

impl Claim {
    pub const ALL: [Claim; 25] = [
        Claim::Path,
        Claim::Cycle,
        Claim::Complete,
        Claim::Star,
        Claim::DoubleStar,
        Claim::Wheel,
        Claim::Bipartite,
        Claim::RegularBipartite,
        Claim::Multipartite,
        Claim::Fan,
        Claim::CliqueBridge,
        Claim::Ladder,
        Claim::Grid,
        Claim::Prism,
        Claim::Cylinder,
        Claim::Torus,
        Claim::Fixture,
        Claim::TreeDichotomy,
        Claim::Union,
        Claim::Join,
        Claim::DegreeBound,
        Claim::PackingChain,
        Claim::Observations,
        Claim::StrongProductLemma,
        Claim::CartesianSandwich,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Claim::Path => "path",
            Claim::Cycle => "cycle",
            Claim::Complete => "complete",
            Claim::Star => "star",
            Claim::DoubleStar => "doublestar",
            Claim::Wheel => "wheel",
            Claim::Bipartite => "bipartite",
            Claim::RegularBipartite => "regular-bipartite",
            Claim::Multipartite => "multipartite",
            Claim::Fan => "fan",
            Claim::CliqueBridge => "cliquebridge",
            Claim::Ladder => "ladder",
            Claim::Grid => "grid",
            Claim::Prism => "prism",
            Claim::Cylinder => "cylinder",
            Claim::Torus => "torus",
            Claim::Fixture => "fixture",
            Claim::TreeDichotomy => "tree-dichotomy",
            Claim::Union => "union",
            Claim::Join => "join",
            Claim::DegreeBound => "degree-bound",
            Claim::PackingChain => "packing-chain",
            Claim::Observations => "observations",
            Claim::StrongProductLemma => "strong-product-lemma",
            Claim::CartesianSandwich => "cartesian-sandwich",
        }
    }

    /// Family claims take a `FamilySpec`; the rest take graphs or the
    /// built-in corpus.
    pub fn is_family(self) -> bool {
        self <= Claim::Fixture
    }

    /// Whether `spec` belongs to the family this claim is about.
    pub fn covers(self, spec: &FamilySpec) -> bool {
        use FamilySpec as F;
        matches!(
            (self, spec),
            (Claim::Path, F::Path(_))
                | (Claim::Cycle, F::Cycle(_))
                | (Claim::Complete, F::Complete(_))
                | (Claim::Star, F::Star(_))
                | (Claim::DoubleStar, F::DoubleStar(_, _))
                | (Claim::Wheel, F::Wheel(_))
                | (Claim::Bipartite, F::CompleteBipartite(_, _))
                | (Claim::Multipartite, F::CompleteMultipartite(_))
                | (Claim::Fan, F::Fan(_, _))
                | (Claim::CliqueBridge, F::CliqueBridge(_, _))
                | (Claim::Ladder, F::Ladder(_))
                | (Claim::Grid, F::Grid(_, _))
                | (Claim::Prism, F::Prism(_))
                | (Claim::Cylinder, F::Cylinder(_, _))
                | (Claim::Torus, F::Torus(_, _))
                | (Claim::Fixture, F::Fixture(_))
                | (Claim::RegularBipartite, _)
        )
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Claim {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        let s = s.trim().to_ascii_lowercase();
        Claim::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or(HarnessError::UnknownClaim(s))
    }
}

impl Serialize for Claim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub enum Params {
    Family(FamilySpec),
    /// Explicit graphs, in the order the claim names them.
    Graphs {
        label: String,
        graphs: Vec<Graph>,
    },
    /// The claim's built-in deterministic corpus.
    Corpus,
}

impl Params {
    pub fn graphs(label: impl Into<String>, graphs: Vec<Graph>) -> Self {
        Params::Graphs {
            label: label.into(),
            graphs,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Family(spec) => write!(f, "{spec}"),
            Params::Graphs { label, .. } => f.write_str(label),
            Params::Corpus => f.write_str("corpus"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The budget ran out before the claim could be decided.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub claim: Claim,
    pub params: String,
    /// Claimed value; absent for claims that are inequalities.
    pub expected: Option<OracleValue>,
    pub solver: Option<usize>,
    pub lower_bound: Option<usize>,
    pub upper_bound: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificate: Vec<u32>,
    pub pattern_valid: Option<bool>,
    pub pattern_colors: Option<usize>,
    /// Instances examined; corpus checks aggregate many.
    pub instances: usize,
    pub violations: usize,
    pub verdict: Verdict,
    pub note: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub(crate) fn empty(claim: Claim, params: String) -> Self {
        CheckReport {
            claim,
            params,
            expected: None,
            solver: None,
            lower_bound: None,
            upper_bound: None,
            certificate: Vec::new(),
            pattern_valid: None,
            pattern_colors: None,
            instances: 1,
            violations: 0,
            verdict: Verdict::Pass,
            note: None,
            elapsed: Duration::ZERO,
        }
    }
}

/// Checks one claim on one parameter set. Disagreement with the claimed
/// value is reported as a failed check, never corrected.
pub fn check(claim: Claim, params: &Params, budget: Budget) -> Result<CheckReport, HarnessError> {
    let start = Instant::now();
    let wrong = || HarnessError::WrongParams {
        claim,
        params: params.to_string(),
    };
    let mut report = match params {
        Params::Family(spec) if claim.is_family() && claim.covers(spec) => {
            check_family(claim, spec, budget)?
        }
        Params::Graphs { label, graphs } if claim == Claim::RegularBipartite => {
            let [g] = graphs.as_slice() else {
                return Err(wrong());
            };
            check_regular_bipartite(label.clone(), g, budget)?
        }
        Params::Graphs { label, graphs } if !claim.is_family() => {
            match evaluate(claim, graphs, budget)? {
                Eval::OutOfScope(_) => {
                    return Err(HarnessError::OutOfRange {
                        claim,
                        params: label.clone(),
                    })
                }
                eval => {
                    let mut r = CheckReport::empty(claim, label.clone());
                    r.apply(eval);
                    r
                }
            }
        }
        Params::Corpus if !claim.is_family() => check_corpus(claim, budget)?,
        _ => return Err(wrong()),
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

fn check_family(
    claim: Claim,
    spec: &FamilySpec,
    budget: Budget,
) -> Result<CheckReport, HarnessError> {
    if claim == Claim::RegularBipartite {
        let g = spec.generate()?;
        return check_regular_bipartite(spec.to_string(), &g, budget);
    }
    let Some(expected) = oracle_chi_ei(spec).value() else {
        return Err(HarnessError::OutOfRange {
            claim,
            params: spec.to_string(),
        });
    };
    let g = spec.generate()?;
    let mut report = CheckReport::empty(claim, spec.to_string());
    let pattern = pattern_coloring(spec);
    compare(&mut report, &g, expected, pattern.as_ref(), budget)?;
    if let FamilySpec::Fixture(f) = spec {
        let bound = planar_question_bound(g.max_degree());
        if let Some(chi) = report.solver {
            if chi <= bound {
                report.verdict = Verdict::Fail;
                report.add_note(format!(
                    "does not exceed the planar bound {bound} for maximum degree {}",
                    g.max_degree()
                ));
            }
        }
        if report.verdict == Verdict::Fail {
            let detail = report.note.take().unwrap_or_default();
            report.note = Some(format!(
                "{}: transcription flagged for review; {detail}",
                f.name()
            ));
        }
    }
    Ok(report)
}

fn check_regular_bipartite(
    label: String,
    g: &Graph,
    budget: Budget,
) -> Result<CheckReport, HarnessError> {
    let side = bipartition(g);
    let k = g.max_degree();
    let Some(side) = side.filter(|_| k >= 2 && g.min_degree() == k) else {
        return Err(HarnessError::OutOfRange {
            claim: Claim::RegularBipartite,
            params: label,
        });
    };
    let mut report = CheckReport::empty(Claim::RegularBipartite, label);
    let pattern = Coloring::new(side, Mode::EInjective)?;
    compare(&mut report, g, 2, Some(&pattern), budget)?;
    Ok(report)
}

/// Colors 1 and 2 by side, or `None` when `g` has an odd cycle.
fn bipartition(g: &Graph) -> Option<Vec<u32>> {
    let mut side = vec![0u32; g.n()];
    for comp in g.components() {
        let d = g.bfs_distances(comp[0]);
        for &v in &comp {
            side[v] = d[v].expect("same component") as u32 % 2 + 1;
        }
    }
    g.edges().all(|(u, v)| side[u] != side[v]).then_some(side)
}

/// Solver against the claimed value, plus pattern validation.
fn compare(
    report: &mut CheckReport,
    g: &Graph,
    expected: usize,
    pattern: Option<&Coloring>,
    budget: Budget,
) -> Result<(), HarnessError> {
    report.expected = Some(OracleValue::Value(expected));
    let solved = chromatic_number(g, Mode::EInjective, budget);
    report.solver = solved.chi;
    report.lower_bound = Some(solved.lower_bound);
    report.upper_bound = Some(solved.upper_bound);
    report.certificate = solved.certificate.colors().to_vec();

    let mut definite_failure = false;
    if !verify_coloring(g, &solved.certificate, Mode::EInjective)?.is_empty() {
        definite_failure = true;
        report.add_note("solver certificate failed verification".into());
    }
    if let Some(p) = pattern {
        let violations = verify_coloring(g, p, Mode::EInjective)?;
        report.pattern_valid = Some(violations.is_empty());
        report.pattern_colors = Some(p.k());
        if let Some(v) = violations.first() {
            definite_failure = true;
            report.add_note(format!(
                "pattern has {} violations, first {:?} at {:?}",
                violations.len(),
                v.kind,
                v.witness
            ));
        } else if p.k() != expected {
            definite_failure = true;
            report.add_note(format!("pattern uses {} colors, claimed {expected}", p.k()));
        }
    }
    match solved.chi {
        Some(chi) if chi < expected => {
            definite_failure = true;
            report.add_note(format!(
                "a verified {chi}-coloring exists, so {expected} is not the minimum"
            ));
        }
        Some(chi) if chi > expected => {
            definite_failure = true;
            report.add_note(format!(
                "exhaustive search finds no {expected}-coloring; the minimum is {chi}"
            ));
        }
        Some(_) => {}
        None => {
            if solved.upper_bound < expected {
                definite_failure = true;
                report.add_note(format!(
                    "a verified {}-coloring exists, so {expected} is not the minimum",
                    solved.upper_bound
                ));
            } else if solved.lower_bound > expected {
                definite_failure = true;
                report.add_note(format!(
                    "a clique of {} forces more than {expected} colors",
                    solved.lower_bound
                ));
            } else {
                report.add_note(budget_note(&solved));
            }
        }
    }
    report.verdict = if definite_failure {
        report.violations = 1;
        Verdict::Fail
    } else if solved.chi.is_none() {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    Ok(())
}

fn budget_note(solved: &SolveResult) -> String {
    format!(
        "budget exhausted after {} nodes with bounds {}..={}",
        solved.stats.nodes, solved.lower_bound, solved.upper_bound
    )
}

impl CheckReport {
    fn add_note(&mut self, note: String) {
        self.note = Some(match self.note.take() {
            Some(prev) => format!("{prev}; {note}"),
            None => note,
        });
    }

    fn apply(&mut self, eval: Eval) {
        match eval {
            Eval::Holds { note, chi } => {
                self.solver = chi;
                self.note = note;
            }
            Eval::Violated(why) => {
                self.verdict = Verdict::Fail;
                self.violations = 1;
                self.note = Some(why);
            }
            Eval::Unknown(why) => {
                self.verdict = Verdict::Inconclusive;
                self.note = Some(why);
            }
            Eval::OutOfScope(why) => {
                self.instances = 0;
                self.note = Some(why.into());
            }
        }
    }
}

/// Outcome of a structural claim on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eval {
    /// `note` marks a notable case such as equality in a bound.
    Holds {
        chi: Option<usize>,
        note: Option<String>,
    },
    Violated(String),
    Unknown(String),
    /// The claim's hypotheses do not hold for this instance.
    OutOfScope(&'static str),
}

impl Eval {
    fn holds() -> Self {
        Eval::Holds {
            chi: None,
            note: None,
        }
    }
}

struct Solver {
    budget: Budget,
}

impl Solver {
    fn chi(&self, g: &Graph, mode: Mode) -> Result<usize, String> {
        let r = chromatic_number(g, mode, self.budget);
        r.chi
            .ok_or_else(|| format!("{} {}", mode.as_str(), budget_note(&r)))
    }
}

/// Evaluates a structural claim on explicit graphs.
pub fn evaluate(claim: Claim, graphs: &[Graph], budget: Budget) -> Result<Eval, HarnessError> {
    let wrong = |n: usize| HarnessError::WrongParams {
        claim,
        params: format!("{n} graphs"),
    };
    let s = Solver { budget };
    let arity = match claim {
        Claim::Union | Claim::Join | Claim::StrongProductLemma | Claim::CartesianSandwich => 2,
        c if c.is_family() => return Err(wrong(graphs.len())),
        _ => 1,
    };
    if graphs.len() != arity {
        return Err(wrong(graphs.len()));
    }
    let eval = match claim {
        Claim::TreeDichotomy => tree_dichotomy(&s, &graphs[0])?,
        Claim::Union => union(&s, &graphs[0], &graphs[1]),
        Claim::Join => join_formula(&s, &graphs[0], &graphs[1]),
        Claim::DegreeBound => degree_bound(&s, &graphs[0]),
        Claim::PackingChain => packing_chain(&s, &graphs[0])?,
        Claim::Observations => observations(&s, &graphs[0]),
        Claim::StrongProductLemma => strong_product_lemma(&graphs[0], &graphs[1]),
        Claim::CartesianSandwich => cartesian_sandwich(&s, &graphs[0], &graphs[1]),
        _ => unreachable!("family claims are rejected above"),
    };
    Ok(eval)
}

macro_rules! chi {
    ($s:expr, $g:expr, $mode:expr) => {
        match $s.chi($g, $mode) {
            Ok(v) => v,
            Err(why) => return Eval::Unknown(why),
        }
    };
}

fn tree_dichotomy(s: &Solver, t: &Graph) -> Result<Eval, HarnessError> {
    if !t.is_tree() {
        return Ok(Eval::OutOfScope("not a tree"));
    }
    let long = matches!(t.diameter(), Diameter::Finite(d) if d >= 3);
    let expected = if long { 2 } else { 1 };
    let pattern = Coloring::new(tree_coloring(t), Mode::EInjective)?;
    let bad = verify_coloring(t, &pattern, Mode::EInjective)?;
    if !bad.is_empty() || pattern.k() != expected {
        return Ok(Eval::Violated(format!(
            "distance-parity coloring uses {} colors with {} violations",
            pattern.k(),
            bad.len()
        )));
    }
    Ok(match s.chi(t, Mode::EInjective) {
        Ok(chi) if chi == expected => Eval::Holds {
            chi: Some(chi),
            note: None,
        },
        Ok(chi) => Eval::Violated(format!("diameter {:?} but chi_ei = {chi}", t.diameter())),
        Err(why) => Eval::Unknown(why),
    })
}

fn union(s: &Solver, g: &Graph, h: &Graph) -> Eval {
    let a = chi!(s, g, Mode::EInjective);
    let b = chi!(s, h, Mode::EInjective);
    let u = chi!(s, &disjoint_union(g, h), Mode::EInjective);
    if u == a.max(b) {
        Eval::Holds {
            chi: Some(u),
            note: None,
        }
    } else {
        Eval::Violated(format!(
            "chi_ei of the union is {u}, parts give {a} and {b}"
        ))
    }
}

fn join_formula(s: &Solver, g: &Graph, h: &Graph) -> Eval {
    if g.edge_count() == 0 || h.edge_count() == 0 {
        return Eval::OutOfScope("both graphs need an edge");
    }
    let expected = g.n() + h.n();
    let chi = chi!(s, &join(g, h), Mode::EInjective);
    if chi == expected {
        Eval::Holds {
            chi: Some(chi),
            note: None,
        }
    } else {
        Eval::Violated(format!("chi_ei of the join is {chi}, expected {expected}"))
    }
}

fn degree_bound(s: &Solver, g: &Graph) -> Eval {
    let d = g.max_degree();
    let bound = d * d.saturating_sub(1).pow(2) + 1;
    let chi = chi!(s, g, Mode::EInjective);
    if chi > bound {
        Eval::Violated(format!(
            "chi_ei = {chi} exceeds {bound} at maximum degree {d}"
        ))
    } else {
        Eval::Holds {
            chi: Some(chi),
            note: (chi == bound && d >= 2).then(|| format!("equality at {chi}")),
        }
    }
}

fn packing_chain(s: &Solver, g: &Graph) -> Result<Eval, HarnessError> {
    if !g.is_connected() || g.diameter() != Diameter::Finite(3) {
        return Ok(Eval::OutOfScope("needs a connected graph of diameter 3"));
    }
    let rho = packing_number(g)?.value;
    let gamma = two_distance_domination_number(g)?.value;
    Ok(match s.chi(g, Mode::EInjective) {
        Ok(chi) if chi >= rho && rho >= gamma => Eval::Holds {
            chi: Some(chi),
            note: None,
        },
        Ok(chi) => Eval::Violated(format!(
            "chi_ei = {chi}, packing {rho}, 2-distance domination {gamma}"
        )),
        Err(why) => Eval::Unknown(why),
    })
}

/// The six conditional comparisons between chi_ei and the other modes.
fn observations(s: &Solver, g: &Graph) -> Eval {
    use StructurePredicate::*;
    let ei = chi!(s, g, Mode::EInjective);
    let mut broken = Vec::new();
    for p in StructurePredicate::ALL {
        if !structure_predicate(g, p) {
            continue;
        }
        let (mode, ei_is_upper) = match p {
            AdjImpliesP4 => (Mode::Proper, false),
            P4ImpliesAdj => (Mode::Proper, true),
            NeighborsArePairwiseP4 => (Mode::Injective, false),
            P4ImpliesCommonNeighbor => (Mode::Injective, true),
            P3PairsAreP4Ends => (Mode::TwoDistance, false),
            P4ImpliesAdjOrCommonNeighbor => (Mode::TwoDistance, true),
        };
        let other = chi!(s, g, mode);
        let ok = if ei_is_upper {
            ei <= other
        } else {
            other <= ei
        };
        if !ok {
            broken.push(format!("{p}: chi_ei = {ei}, {} = {other}", mode.as_str()));
        }
    }
    if broken.is_empty() {
        Eval::Holds {
            chi: Some(ei),
            note: None,
        }
    } else {
        Eval::Violated(broken.join("; "))
    }
}

fn product_hypotheses(g: &Graph, h: &Graph) -> bool {
    let p = StructurePredicate::P4ImpliesAdjOrCommonNeighbor;
    [g, h]
        .iter()
        .all(|x| x.n() > 0 && !x.has_isolated_vertex() && structure_predicate(x, p))
}

fn strong_product_lemma(g: &Graph, h: &Graph) -> Eval {
    if !product_hypotheses(g, h) {
        return Eval::OutOfScope("needs two graphs without isolated vertices whose P4 ends are adjacent or share a neighbor");
    }
    let strong = product(g, h, ProductKind::Strong);
    if structure_predicate(&strong, StructurePredicate::P4ImpliesAdjOrCommonNeighbor) {
        Eval::holds()
    } else {
        Eval::Violated("the strong product has a P4 whose ends are far apart".into())
    }
}

fn cartesian_sandwich(s: &Solver, g: &Graph, h: &Graph) -> Eval {
    if !product_hypotheses(g, h) {
        return Eval::OutOfScope("needs two graphs without isolated vertices whose P4 ends are adjacent or share a neighbor");
    }
    let lower = chi!(s, g, Mode::EInjective).max(chi!(s, h, Mode::EInjective));
    let upper = chi!(s, g, Mode::TwoDistance) * chi!(s, h, Mode::TwoDistance);
    let chi = chi!(s, &product(g, h, ProductKind::Cartesian), Mode::EInjective);
    if lower <= chi && chi <= upper {
        let note = match (chi == lower, chi == upper) {
            (true, true) => Some(format!("both bounds equal {chi}")),
            (false, true) => Some(format!("upper bound {upper} attained")),
            (true, false) => Some(format!("lower bound {lower} attained")),
            (false, false) => None,
        };
        Eval::Holds {
            chi: Some(chi),
            note,
        }
    } else {
        Eval::Violated(format!(
            "chi_ei of the product is {chi}, outside {lower}..={upper}"
        ))
    }
}

/// Labeled instances of the built-in corpus for a structural claim.
pub fn corpus_instances(claim: Claim) -> Vec<(String, Vec<Graph>)> {
    let small_all = || {
        (0..=5).flat_map(|n| {
            corpus::all_graphs(n)
                .enumerate()
                .map(move |(i, g)| (format!("n{n}#{i}"), vec![g]))
        })
    };
    let named = corpus::named_small;
    let pairs = |pool: Vec<(&'static str, Graph)>| {
        pool.iter()
            .flat_map(|(a, g)| {
                pool.iter()
                    .map(move |(b, h)| (format!("{a}+{b}"), vec![g.clone(), h.clone()]))
            })
            .collect::<Vec<_>>()
    };
    match claim {
        Claim::TreeDichotomy => (1..=7)
            .flat_map(|n| {
                corpus::all_trees(n)
                    .into_iter()
                    .enumerate()
                    .map(move |(i, t)| (format!("tree{n}#{i}"), vec![t]))
            })
            .collect(),
        Claim::Union | Claim::Join => pairs(named()),
        Claim::DegreeBound => small_all()
            .chain(named().into_iter().map(|(l, g)| (l.to_string(), vec![g])))
            .chain((3..=15).map(|n| (format!("C{n}"), vec![eicolor_core::family::cycle(n)])))
            .collect(),
        Claim::PackingChain => (0..=6)
            .flat_map(|n| {
                corpus::all_graphs(n)
                    .enumerate()
                    .map(move |(i, g)| (format!("n{n}#{i}"), vec![g]))
            })
            .filter(|(_, g)| g[0].is_connected() && g[0].diameter() == Diameter::Finite(3))
            .chain(named().into_iter().map(|(l, g)| (l.to_string(), vec![g])))
            .collect(),
        Claim::Observations => small_all()
            .chain(named().into_iter().map(|(l, g)| (l.to_string(), vec![g])))
            .collect(),
        Claim::StrongProductLemma | Claim::CartesianSandwich => {
            let p = StructurePredicate::P4ImpliesAdjOrCommonNeighbor;
            pairs(
                named()
                    .into_iter()
                    .filter(|(_, g)| structure_predicate(g, p))
                    .collect(),
            )
        }
        _ => Vec::new(),
    }
}

fn check_corpus(claim: Claim, budget: Budget) -> Result<CheckReport, HarnessError> {
    let mut report = CheckReport::empty(claim, "corpus".into());
    report.instances = 0;
    let mut first_violation = None;
    let mut first_unknown = None;
    let mut notable = Vec::new();
    for (label, graphs) in corpus_instances(claim) {
        match evaluate(claim, &graphs, budget)? {
            Eval::OutOfScope(_) => continue,
            Eval::Holds { note, .. } => {
                if let Some(n) = note {
                    notable.push(format!("{label} ({n})"));
                }
            }
            Eval::Violated(why) => {
                report.violations += 1;
                first_violation.get_or_insert(format!("{label}: {why}"));
            }
            Eval::Unknown(why) => {
                first_unknown.get_or_insert(format!("{label}: {why}"));
            }
        }
        report.instances += 1;
    }
    report.verdict = if report.violations > 0 {
        Verdict::Fail
    } else if first_unknown.is_some() {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    let mut parts: Vec<String> = first_violation.into_iter().chain(first_unknown).collect();
    if !notable.is_empty() {
        const SHOWN: usize = 6;
        let more = notable.len().saturating_sub(SHOWN);
        notable.truncate(SHOWN);
        let tail = if more > 0 {
            format!(" and {more} more")
        } else {
            String::new()
        };
        parts.push(format!("notable: {}{tail}", notable.join(", ")));
    }
    report.note = (!parts.is_empty()).then(|| parts.join("; "));
    Ok(report)
}
