//! Parameter sweeps over the registry, run on a fixed number of workers and
//! reported in registry order.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use eicolor_core::{Budget, FamilySpec, Fixture};
use serde::Serialize;

use crate::claims::{check, CheckReport, Claim, Params, Verdict};
use crate::corpus;
use crate::oracle::{oracle_chi_ei, OracleValue};

/// Inclusive parameter range, written `a..b` or a single number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamRange(pub RangeInclusive<usize>);

impl FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{s}` is not a range like 2..5"))
        };
        let r = match s.split_once("..") {
            Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
            None => num(s)?..=num(s)?,
        };
        if r.is_empty() {
            return Err(format!("range `{s}` is empty"));
        }
        Ok(ParamRange(r))
    }
}

/// Overrides for the first (`m`) and second (`n`) family parameter.
/// Single-parameter families read `n`.
#[derive(Clone, Debug, Default)]
pub struct Ranges {
    pub m: Option<ParamRange>,
    pub n: Option<ParamRange>,
}

impl Ranges {
    fn m(&self, default: RangeInclusive<usize>) -> RangeInclusive<usize> {
        self.m.as_ref().map_or(default, |r| r.0.clone())
    }

    fn n(&self, default: RangeInclusive<usize>) -> RangeInclusive<usize> {
        self.n.as_ref().map_or(default, |r| r.0.clone())
    }

    fn is_default(&self) -> bool {
        self.m.is_none() && self.n.is_none()
    }
}

fn pairs(
    m: RangeInclusive<usize>,
    n: RangeInclusive<usize>,
    f: impl Fn(usize, usize) -> FamilySpec,
) -> Vec<FamilySpec> {
    m.flat_map(|a| n.clone().map(move |b| (a, b)))
        .map(|(a, b)| f(a, b))
        .collect()
}

/// The instances a sweep of `claim` visits. Family instances outside the
/// claimed ranges are skipped.
pub fn instances(claim: Claim, ranges: &Ranges) -> Vec<Params> {
    use FamilySpec as F;
    let singles = |d: RangeInclusive<usize>, f: fn(usize) -> FamilySpec| {
        ranges.n(d).map(f).collect::<Vec<_>>()
    };
    let specs: Vec<FamilySpec> = match claim {
        Claim::Path => singles(1..=12, F::Path),
        Claim::Cycle => singles(3..=15, F::Cycle),
        Claim::Complete => singles(1..=8, F::Complete),
        Claim::Star => singles(1..=8, F::Star),
        Claim::DoubleStar => pairs(ranges.m(1..=4), ranges.n(1..=4), F::DoubleStar),
        Claim::Wheel => singles(3..=8, F::Wheel),
        Claim::Bipartite => pairs(ranges.m(2..=5), ranges.n(2..=5), F::CompleteBipartite),
        Claim::RegularBipartite => corpus::regular_bipartite(),
        Claim::Multipartite if ranges.n.is_some() => ranges
            .n(0..=0)
            .filter(|&n| n >= 3)
            .map(|n| F::CompleteMultipartite(vec![n - 2, 1, 1]))
            .collect(),
        Claim::Multipartite => [vec![1, 1, 1]]
            .into_iter()
            .chain((4..=7).map(|n| vec![n - 2, 1, 1]))
            .chain([
                vec![2, 2, 2],
                vec![1, 2, 2],
                vec![2, 2, 3],
                vec![1, 1, 1, 1],
            ])
            .map(F::CompleteMultipartite)
            .collect(),
        Claim::Fan if ranges.is_default() => [(1, 2), (1, 3)]
            .into_iter()
            .chain((2..=5).map(|m| (m, 2)))
            .chain((4..=6).map(|n| (1, n)))
            .chain((2..=4).flat_map(|m| (3..=5).map(move |n| (m, n))))
            .map(|(m, n)| F::Fan(m, n))
            .collect(),
        Claim::Fan => pairs(ranges.m(1..=5), ranges.n(2..=6), F::Fan),
        Claim::CliqueBridge => pairs(ranges.m(4..=6), ranges.n(4..=6), F::CliqueBridge)
            .into_iter()
            .filter(|s| matches!(s, F::CliqueBridge(m, n) if n <= m))
            .collect(),
        Claim::Ladder => singles(2..=10, F::Ladder),
        Claim::Grid => pairs(ranges.m(2..=6), ranges.n(2..=6), F::Grid),
        Claim::Prism => singles(3..=12, F::Prism),
        Claim::Cylinder => pairs(ranges.m(2..=4), ranges.n(3..=9), F::Cylinder),
        Claim::Torus if ranges.is_default() => {
            let mut specs = pairs(3..=5, 3..=9, F::Torus);
            specs.extend([(6, 9), (7, 7), (7, 9), (9, 9)].map(|(m, n)| F::Torus(m, n)));
            specs
        }
        Claim::Torus => pairs(ranges.m(3..=5), ranges.n(3..=9), F::Torus),
        Claim::Fixture => Fixture::ALL.into_iter().map(F::Fixture).collect(),
        _ => return vec![Params::Corpus],
    };
    specs
        .into_iter()
        .filter(|s| s.validate().is_ok())
        .filter(|s| claim == Claim::RegularBipartite || oracle_chi_ei(s) != OracleValue::Undefined)
        .map(Params::Family)
        .collect()
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub ranges: Ranges,
    pub budget: Budget,
    /// Checks run concurrently; each check is itself single-threaded.
    pub workers: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            ranges: Ranges::default(),
            budget: Budget::default(),
            workers: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
}

impl SuiteReport {
    /// True unless some check failed; inconclusive checks do not count.
    pub fn success(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn elapsed(&self) -> Duration {
        self.reports.iter().map(|r| r.elapsed).sum()
    }

    /// One JSON object per report, then a summary line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&serde_json::to_string(r).expect("reports serialize"));
            out.push('\n');
        }
        #[derive(Serialize)]
        struct Line<'a> {
            summary: &'a Summary,
        }
        out.push_str(
            &serde_json::to_string(&Line {
                summary: &self.summary,
            })
            .expect("summary serializes"),
        );
        out.push('\n');
        out
    }

    pub fn to_table(&self) -> String {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        let rows: Vec<[String; 7]> = self
            .reports
            .iter()
            .map(|r| {
                let pattern = match (r.pattern_valid, r.pattern_colors) {
                    (Some(true), Some(k)) => format!("ok/{k}"),
                    (Some(false), Some(k)) => format!("BAD/{k}"),
                    _ => "-".into(),
                };
                let solver = match (r.solver, r.lower_bound, r.upper_bound) {
                    (None, Some(lo), Some(hi)) => format!("{lo}..{hi}"),
                    (s, _, _) => opt(s),
                };
                [
                    r.claim.to_string(),
                    r.params.clone(),
                    r.expected.map_or("-".into(), |e| e.to_string()),
                    solver,
                    pattern,
                    if r.instances == 1 {
                        String::new()
                    } else {
                        format!("{} ({} bad)", r.instances, r.violations)
                    },
                    r.verdict.to_string(),
                ]
            })
            .collect();
        let header = [
            "claim",
            "params",
            "claimed",
            "solver",
            "pattern",
            "instances",
            "verdict",
        ];
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, cells: &[&str]| {
            for (cell, w) in cells.iter().zip(widths) {
                let _ = write!(out, "{cell:<w$}  ");
            }
            out.truncate(out.trim_end().len());
            out.push('\n');
        };
        line(&mut out, &header);
        for (row, r) in rows.iter().zip(&self.reports) {
            line(
                &mut out,
                &row.iter().map(String::as_str).collect::<Vec<_>>(),
            );
            if r.verdict != Verdict::Pass {
                if let Some(note) = &r.note {
                    let _ = writeln!(out, "    {note}");
                }
            }
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "{} checks: {} pass, {} fail, {} inconclusive",
            self.reports.len(),
            s.pass,
            s.fail,
            s.inconclusive
        );
        out
    }
}

/// Runs every instance of every claim in `filter`. Reports come back in
/// registry order, then instance order, whatever the worker count.
pub fn run_suite(filter: &[Claim], options: &SuiteOptions) -> SuiteReport {
    let mut claims = filter.to_vec();
    claims.sort();
    claims.dedup();
    let jobs: Vec<(Claim, Params)> = claims
        .into_iter()
        .flat_map(|c| {
            instances(c, &options.ranges)
                .into_iter()
                .map(move |p| (c, p))
        })
        .collect();

    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<CheckReport>>> = Mutex::new(vec![None; jobs.len()]);
    let workers = options.workers.clamp(1, jobs.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some((claim, params)) = jobs.get(i) else {
                    break;
                };
                let report = run_one(*claim, params, options.budget);
                slots
                    .lock()
                    .expect("no worker panics while holding the lock")[i] = Some(report);
            });
        }
    });

    let reports: Vec<CheckReport> = slots
        .into_inner()
        .expect("workers finished")
        .into_iter()
        .map(|r| r.expect("every job ran"))
        .collect();
    let mut summary = Summary::default();
    for r in &reports {
        match r.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Fail => summary.fail += 1,
            Verdict::Inconclusive => summary.inconclusive += 1,
        }
    }
    SuiteReport { reports, summary }
}

fn run_one(claim: Claim, params: &Params, budget: Budget) -> CheckReport {
    check(claim, params, budget).unwrap_or_else(|e| CheckReport {
        verdict: Verdict::Fail,
        note: Some(e.to_string()),
        ..CheckReport::empty(claim, params.to_string())
    })
}
