//! Command-line front end. [`run`] does all the work and returns what should
//! be printed, so the binary stays a thin wrapper and tests can call it directly.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};

use crate::ball::BallUniverse;
use crate::congruence::congruence_closure;
use crate::element::{multiply, sigma_class, Element};
use crate::error::{Error, Result};
use crate::family::NormalizedFamily;
use crate::morphisms::{
    automorphisms, enumerate_retracts, isomorphic_families, refute_lower_retraction,
    shift_isomorphism, DEFAULT_RETRACT_BOUND,
};
use crate::order::{hasse_covers, hasse_dot, natural_leq};
use crate::text::{parse_element, parse_interval};
use crate::verify::run_suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

const DEFAULT_BALL: u64 = 6;
const DEFAULT_CUTOFF_SPAN: u64 = 4;

fn element_arg(s: &str) -> std::result::Result<Element, String> {
    parse_element(s).map_err(|e| e.to_string())
}

fn family_arg(s: &str) -> std::result::Result<NormalizedFamily, String> {
    parse_interval(s).map_err(|e| e.to_string())
}

fn pair_arg(s: &str) -> std::result::Result<(Element, Element), String> {
    let (x, y) = s
        .split_once('~')
        .ok_or_else(|| format!("expected X~Y, got '{s}'"))?;
    Ok((element_arg(x)?, element_arg(y)?))
}

#[derive(Debug, Parser)]
#[command(
    name = "bicyclic-ext",
    version,
    about = "Exact computations in bicyclic extensions over families of rays"
)]
pub struct Cli {
    /// Cutoff family, `lo..hi` or `lo..inf`.
    #[arg(long, global = true, default_value = "0..inf", value_parser = family_arg)]
    family: NormalizedFamily,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Product of two elements.
    Mul {
        #[arg(value_parser = element_arg)]
        x: Element,
        #[arg(value_parser = element_arg)]
        y: Element,
    },
    /// Inverse of an element.
    Inv {
        #[arg(value_parser = element_arg)]
        x: Element,
    },
    /// Whether X is below Y in the natural partial order.
    Leq {
        #[arg(value_parser = element_arg)]
        x: Element,
        #[arg(value_parser = element_arg)]
        y: Element,
    },
    /// Class of X under the least group congruence (j - i).
    SigmaClass {
        #[arg(value_parser = element_arg)]
        x: Element,
    },
    /// Cover relation of the idempotents on a ball.
    Hasse {
        #[arg(long, default_value_t = DEFAULT_BALL)]
        ball: u64,
        /// Largest cutoff included (default: lo + min(span, 4)).
        #[arg(long)]
        cutoffs: Option<u64>,
        #[arg(long)]
        dot: bool,
    },
    /// Congruence generated by the given pairs on a ball.
    Cong {
        /// Generator pair `X~Y`; repeat for more.
        #[arg(long = "pairs", value_parser = pair_arg, num_args = 0..)]
        pairs: Vec<(Element, Element)>,
        #[arg(long, default_value_t = DEFAULT_BALL)]
        ball: u64,
        #[arg(long)]
        cutoffs: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Homomorphic retracts of the family.
    Retracts {
        /// How far to list an infinite family.
        #[arg(long, default_value_t = DEFAULT_RETRACT_BOUND)]
        bound: u64,
        /// Include the identity and the constant retraction.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Witnesses that no retraction onto the cutoffs up to K exists among the candidate maps.
    Refute {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        json: bool,
    },
    /// Whether two families give isomorphic semigroups.
    Iso {
        #[arg(value_parser = family_arg)]
        f1: NormalizedFamily,
        #[arg(value_parser = family_arg)]
        f2: NormalizedFamily,
        /// Print the isomorphism; fails if there is none.
        #[arg(long)]
        map: bool,
        #[arg(long)]
        json: bool,
    },
    /// Automorphisms found by generator search on a ball.
    Automorphisms {
        #[arg(long, default_value_t = 5)]
        ball: u64,
    },
    /// Run the invariant suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_BALL)]
        ball: u64,
        #[arg(long)]
        cutoffs: Option<u64>,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

fn default_cutoffs(fam: &NormalizedFamily) -> u64 {
    fam.lo()
        + fam
            .span()
            .unwrap_or(DEFAULT_CUTOFF_SPAN)
            .min(DEFAULT_CUTOFF_SPAN)
}

fn ball(fam: &NormalizedFamily, n: u64, cutoffs: Option<u64>) -> Result<BallUniverse> {
    BallUniverse::new(*fam, n, cutoffs.unwrap_or_else(|| default_cutoffs(fam)))
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            let code = match e {
                Error::Parse { .. } | Error::InvertedInterval { .. } => EXIT_USAGE,
                _ => EXIT_COMPUTATION,
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let fam = &cli.family;
    let mut out = String::new();
    match &cli.command {
        Command::Mul { x, y } => writeln!(out, "{}", multiply(*x, *y, fam)?).unwrap(),
        Command::Inv { x } => {
            fam.check(x.a())?;
            writeln!(out, "{}", x.inverse()).unwrap();
        }
        Command::Leq { x, y } => writeln!(out, "{}", natural_leq(*x, *y, fam)?).unwrap(),
        Command::SigmaClass { x } => {
            fam.check(x.a())?;
            writeln!(out, "{}", sigma_class(*x)).unwrap();
        }
        Command::Hasse {
            ball: n,
            cutoffs,
            dot,
        } => {
            let b = ball(fam, *n, *cutoffs)?;
            if *dot {
                out = hasse_dot(&b);
            } else {
                for (u, l) in hasse_covers(&b) {
                    writeln!(out, "{u} -> {l}").unwrap();
                }
            }
        }
        Command::Cong {
            pairs,
            ball: n,
            cutoffs,
            json,
        } => {
            let b = ball(fam, *n, *cutoffs)?;
            let part = congruence_closure(pairs, &b)?;
            let export = part.export();
            if *json {
                out = to_json(&export);
            } else {
                let classes = export.classes.iter().filter(|c| c.len() > 1);
                writeln!(
                    out,
                    "classes: {} ({} non-singleton)",
                    export.classes.len(),
                    classes.clone().count()
                )
                .unwrap();
                for class in classes {
                    let items: Vec<String> = class.iter().map(|e| e.to_string()).collect();
                    writeln!(out, "  {{{}}}", items.join(", ")).unwrap();
                }
                let v = &export.verdict;
                writeln!(
                    out,
                    "group congruence on ball: {}",
                    v.group_congruence_on_ball
                )
                .unwrap();
                writeln!(out, "idempotents collapsed: {}", v.idempotents_collapsed).unwrap();
                for r in &v.bicyclic_restrictions {
                    let kind = if r.identity {
                        "identity"
                    } else {
                        "non-identity"
                    };
                    writeln!(out, "restriction to [{}): {kind}", r.cutoff).unwrap();
                }
                writeln!(out, "consistent: {}", v.consistent).unwrap();
            }
        }
        Command::Retracts { bound, all, json } => {
            let canon = fam.canonicalize();
            let list: Vec<_> = enumerate_retracts(&canon.family, *bound)?
                .into_iter()
                .filter(|d| *all || !d.trivial)
                .map(|d| d.shifted(canon.shift))
                .collect();
            if *json {
                out = to_json(&list);
            } else {
                for d in list {
                    writeln!(out, "{d}").unwrap();
                }
            }
        }
        Command::Refute { k, json } => {
            let ws = refute_lower_retraction(*k, fam)?;
            if *json {
                out = to_json(&ws);
            } else {
                for w in ws {
                    writeln!(
                        out,
                        "case {}: x={} y={} h(xy)={} h(x)h(y)={}",
                        w.case_id, w.x, w.y, w.lhs, w.rhs
                    )
                    .unwrap();
                }
            }
        }
        Command::Iso { f1, f2, map, json } => {
            if *map {
                let m = shift_isomorphism(f1, f2)?;
                out = to_json(&m);
            } else {
                let report = isomorphic_families(f1, f2)?;
                if *json {
                    out = to_json(&report);
                } else {
                    writeln!(out, "isomorphic: {}", report.isomorphic).unwrap();
                    writeln!(out, "equipotent: {}", report.equipotent).unwrap();
                    match report.shift {
                        Some(n) => writeln!(out, "shift: {n}").unwrap(),
                        None => writeln!(out, "shift: none").unwrap(),
                    }
                    match report.ball_evidence {
                        Some(b) => writeln!(out, "ball evidence: {b}").unwrap(),
                        None => writeln!(out, "ball evidence: not applicable").unwrap(),
                    }
                }
            }
        }
        Command::Automorphisms { ball: n } => {
            let canon = fam.canonicalize();
            let found = automorphisms(&canon.family, *n)?;
            let ids = found.iter().filter(|m| m.is_identity_table()).count();
            writeln!(
                out,
                "{} automorphism(s) on the ball of radius {n}",
                found.len()
            )
            .unwrap();
            writeln!(out, "identity among them: {}", ids == 1).unwrap();
            writeln!(out, "non-identity: {}", found.len() - ids).unwrap();
        }
        Command::Verify {
            suite,
            ball: n,
            cutoffs,
        } => {
            let b = ball(fam, *n, *cutoffs)?;
            let reports = run_suite(suite, fam, &b)?;
            let failed = reports.iter().any(|r| !r.passed());
            for r in &reports {
                writeln!(out, "{r}").unwrap();
            }
            writeln!(
                out,
                "{}",
                if failed {
                    "FAILED"
                } else {
                    "all suites passed"
                }
            )
            .unwrap();
            if failed {
                return Ok(Outcome {
                    code: EXIT_VERIFY,
                    stdout: out,
                    stderr: String::new(),
                });
            }
        }
    }
    Ok(Outcome::ok(out))
}
