//! The `eicolor` command line. `run` takes its streams and environment as
//! arguments so tests can drive it in-process.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use eicolor_core::io::{parse_graph, to_dimacs_col, to_dot, to_json};
use eicolor_core::metrics::all_metrics;
use eicolor_core::solve::export_cnf;
use eicolor_core::{
    chromatic_number, derived_graph, verify_coloring, Budget, Coloring, FamilySpec, Graph, Mode,
};
use eicolor_harness::{run_suite, Claim, ParamRange, Ranges, SuiteOptions};
use serde_json::json;
use thiserror::Error;

pub const BUDGET_MS_VAR: &str = "EICOLOR_BUDGET_MS";
pub const BUDGET_NODES_VAR: &str = "EICOLOR_BUDGET_NODES";

#[derive(Debug, Parser)]
#[command(
    name = "eicolor",
    version,
    about = "E-injective and related graph colorings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a family member, e.g. `cycle:7`, `torus:3x5`, `fixture:M4`.
    Gen {
        spec: FamilySpec,
        #[command(flatten)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the derived graph whose proper colorings are the mode colorings.
    Transform {
        /// Graph file (JSON or DIMACS .col), `-` for standard input.
        input: String,
        which: Derived,
        #[command(flatten)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact chromatic number under a mode, with a certificate.
    Solve {
        input: String,
        #[arg(long, default_value = "einjective")]
        mode: Mode,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check a coloring (JSON array of 1-based colors) against a mode.
    Verify {
        input: String,
        coloring: String,
        #[arg(long, default_value = "einjective")]
        mode: Mode,
    },
    /// Packing, open packing and 2-distance domination numbers.
    Metrics { input: String },
    /// Run registered claims against the solver.
    Check {
        /// Claim ids, or `all`.
        #[arg(required = true)]
        claims: Vec<String>,
        /// First family parameter, e.g. `2..5`.
        #[arg(long)]
        m: Option<ParamRange>,
        /// Second (or only) family parameter.
        #[arg(long)]
        n: Option<ParamRange>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// JSON lines instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// DIMACS CNF asking for a `k`-coloring under a mode.
    ExportCnf {
        input: String,
        #[arg(long, default_value = "einjective")]
        mode: Mode,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Derived {
    S3,
    Square,
    Twostep,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    dot: bool,
    #[arg(long)]
    col: bool,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Time limit per search in milliseconds; 0 means none.
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Node limit per search; 0 means none.
    #[arg(long)]
    budget_nodes: Option<u64>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] eicolor_core::Error),
    #[error(transparent)]
    Harness(#[from] eicolor_harness::HarnessError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Where the process talks to the world.
pub struct Streams<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Runs the CLI with budget defaults from the process environment.
pub fn run<I, T>(args: I, io: Streams<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, io, |k| std::env::var(k).ok())
}

/// Exit status: 2 for usage errors, 1 for a failed verification or check,
/// 0 otherwise.
pub fn run_with_env<I, T>(args: I, io: Streams<'_>, env: impl Fn(&str) -> Option<String>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(io.stderr, "{text}");
                2
            } else {
                let _ = write!(io.stdout, "{text}");
                0
            };
        }
    };
    let Streams {
        stdin,
        stdout,
        stderr,
    } = io;
    let mut ctx = Ctx {
        stdin,
        stdout,
        stderr,
        stdin_used: false,
        env: &env,
    };
    match ctx.execute(cli.command) {
        Ok(ok) => {
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(ctx.stderr, "error: {e}");
            2
        }
    }
}

struct Ctx<'a, 'e> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
    stdin_used: bool,
    env: &'e dyn Fn(&str) -> Option<String>,
}

impl Ctx<'_, '_> {
    fn read(&mut self, path: &str) -> Result<String, CliError> {
        if path == "-" {
            if self.stdin_used {
                return Err(CliError::Usage(
                    "standard input can be read only once".into(),
                ));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.into(),
                source,
            })
        }
    }

    fn graph(&mut self, path: &str) -> Result<Graph, CliError> {
        Ok(parse_graph(&self.read(path)?)?)
    }

    fn emit(&mut self, text: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
        let io_err = |path: String| move |source| CliError::Io { path, source };
        match output {
            Some(p) => fs::write(p, text).map_err(io_err(p.display().to_string())),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(io_err("<stdout>".into())),
        }
    }

    fn budget(&self, args: &BudgetArgs) -> Result<Budget, CliError> {
        let from_env = |var: &str| -> Result<Option<u64>, CliError> {
            (self.env)(var)
                .map(|v| {
                    v.trim()
                        .parse::<u64>()
                        .map_err(|_| CliError::Usage(format!("{var}={v} is not a number")))
                })
                .transpose()
        };
        let ms = match args.budget_ms {
            Some(v) => Some(v),
            None => from_env(BUDGET_MS_VAR)?,
        };
        let nodes = match args.budget_nodes {
            Some(v) => Some(v),
            None => from_env(BUDGET_NODES_VAR)?,
        };
        let default = Budget::default();
        Ok(Budget {
            time: ms.map_or(default.time, |v| (v > 0).then(|| Duration::from_millis(v))),
            nodes: nodes.map_or(default.nodes, |v| (v > 0).then_some(v)),
        })
    }

    fn execute(&mut self, command: Command) -> Result<bool, CliError> {
        match command {
            Command::Gen {
                spec,
                format,
                output,
            } => {
                let g = spec.generate()?;
                self.emit(&render(&g, &format), output.as_ref())?;
            }
            Command::Transform {
                input,
                which,
                format,
                output,
            } => {
                let g = self.graph(&input)?;
                let mode = match which {
                    Derived::S3 => Mode::EInjective,
                    Derived::Square => Mode::TwoDistance,
                    Derived::Twostep => Mode::Injective,
                };
                self.emit(&render(&derived_graph(&g, mode), &format), output.as_ref())?;
            }
            Command::Solve {
                input,
                mode,
                budget,
            } => {
                let g = self.graph(&input)?;
                let r = chromatic_number(&g, mode, self.budget(&budget)?);
                self.emit(
                    &(serde_json::to_string(&r).expect("results serialize") + "\n"),
                    None,
                )?;
                let _ = writeln!(
                    self.stderr,
                    "{} in {:.3} s, {} nodes",
                    if r.exhausted {
                        "budget exhausted"
                    } else {
                        "solved"
                    },
                    r.stats.elapsed.as_secs_f64(),
                    r.stats.nodes
                );
            }
            Command::Verify {
                input,
                coloring,
                mode,
            } => {
                let g = self.graph(&input)?;
                let text = self.read(&coloring)?;
                let colors: Vec<u32> = serde_json::from_str(&text).map_err(|e| {
                    CliError::Usage(format!("{coloring}: expected a JSON array of colors: {e}"))
                })?;
                let c = Coloring::new(colors, mode)?;
                let violations = verify_coloring(&g, &c, mode)?;
                let out = json!({
                    "mode": mode,
                    "valid": violations.is_empty(),
                    "colors": c.k(),
                    "violations": violations,
                });
                self.emit(&format!("{out}\n"), None)?;
                return Ok(violations.is_empty());
            }
            Command::Metrics { input } => {
                let g = self.graph(&input)?;
                let m = all_metrics(&g)?;
                self.emit(
                    &(serde_json::to_string(&m).expect("metrics serialize") + "\n"),
                    None,
                )?;
            }
            Command::Check {
                claims,
                m,
                n,
                budget,
                workers,
                json,
            } => {
                let filter = parse_claims(&claims)?;
                let options = SuiteOptions {
                    ranges: Ranges { m, n },
                    budget: self.budget(&budget)?,
                    workers,
                };
                let start = Instant::now();
                let report = run_suite(&filter, &options);
                let text = if json {
                    report.to_json_lines()
                } else {
                    report.to_table()
                };
                self.emit(&text, None)?;
                let _ = writeln!(
                    self.stderr,
                    "{} checks in {:.2} s wall, {:.2} s summed",
                    report.reports.len(),
                    start.elapsed().as_secs_f64(),
                    report.elapsed().as_secs_f64()
                );
                return Ok(report.success());
            }
            Command::ExportCnf {
                input,
                mode,
                k,
                output,
            } => {
                let g = self.graph(&input)?;
                let mut buf = Vec::new();
                export_cnf(&derived_graph(&g, mode), k, &mut buf)?;
                self.emit(
                    &String::from_utf8(buf).expect("CNF is ASCII"),
                    output.as_ref(),
                )?;
            }
        }
        Ok(true)
    }
}

fn render(g: &Graph, format: &Format) -> String {
    if format.dot {
        to_dot(g)
    } else if format.col {
        to_dimacs_col(g)
    } else {
        to_json(g) + "\n"
    }
}

fn parse_claims(ids: &[String]) -> Result<Vec<Claim>, CliError> {
    let mut out = Vec::new();
    for id in ids
        .iter()
        .flat_map(|s| s.split(','))
        .filter(|s| !s.is_empty())
    {
        if id == "all" {
            out.extend(Claim::ALL);
        } else {
            out.push(id.parse()?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let env: Vec<(String, String)> = env
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        let code = run_with_env(
            std::iter::once("eicolor").chain(args.iter().copied()),
            Streams {
                stdin: &mut input,
                stdout: &mut out,
                stderr: &mut err,
            },
            |k| env.iter().find(|(key, _)| key == k).map(|(_, v)| v.clone()),
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn claims_list_accepts_all_and_commas() {
        assert_eq!(
            parse_claims(&["grid,prism".into()]).unwrap(),
            vec![Claim::Grid, Claim::Prism]
        );
        assert_eq!(
            parse_claims(&["all".into()]).unwrap().len(),
            Claim::ALL.len()
        );
        assert!(parse_claims(&["gird".into()]).is_err());
    }

    #[test]
    fn flags_override_environment_budget() {
        let ctx_budget = |args: BudgetArgs, env: &[(&str, &str)]| {
            let env: Vec<(String, String)> = env
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect();
            let lookup = |k: &str| env.iter().find(|(key, _)| key == k).map(|(_, v)| v.clone());
            let (mut i, mut o, mut e) = (&b""[..], Vec::new(), Vec::new());
            let ctx = Ctx {
                stdin: &mut i,
                stdout: &mut o,
                stderr: &mut e,
                stdin_used: false,
                env: &lookup,
            };
            ctx.budget(&args).map_err(|e| e.to_string())
        };
        let none = BudgetArgs {
            budget_ms: None,
            budget_nodes: None,
        };
        assert_eq!(ctx_budget(none, &[]).unwrap(), Budget::default());
        let b = ctx_budget(
            BudgetArgs {
                budget_ms: None,
                budget_nodes: None,
            },
            &[(BUDGET_NODES_VAR, "10")],
        )
        .unwrap();
        assert_eq!(b.nodes, Some(10));
        let b = ctx_budget(
            BudgetArgs {
                budget_ms: Some(0),
                budget_nodes: Some(5),
            },
            &[(BUDGET_NODES_VAR, "10")],
        )
        .unwrap();
        assert_eq!((b.time, b.nodes), (None, Some(5)));
        assert!(ctx_budget(
            BudgetArgs {
                budget_ms: None,
                budget_nodes: None
            },
            &[(BUDGET_MS_VAR, "soon")]
        )
        .is_err());
    }

    #[test]
    fn environment_budget_reaches_the_solver() {
        let (_, graph, _) = run_env(&["gen", "torus:3x11"], "", &[]);
        let (code, out, _) = run_env(&["solve", "-"], &graph, &[(BUDGET_NODES_VAR, "20")]);
        assert_eq!(code, 0);
        assert!(out.contains("\"chi\":null"), "{out}");
    }

    #[test]
    fn stdin_is_read_once() {
        let (code, _, err) = run_env(&["verify", "-", "-"], "{\"n\":1,\"edges\":[]}", &[]);
        assert_eq!(code, 2);
        assert!(err.contains("only once"));
    }
}
