//! The `w22` command line: argument parsing, dispatch and report rendering.
//!
//! [`run`] does all the work and hands back the text to print and the exit
//! status (0 success, 1 engine or verification failure, 2 usage error), so
//! the binary stays a one-liner and tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{bracket_combinations, Generator, GeneratorCombination};
use crate::error::Error;
use crate::expr::{self, Kind};
use crate::pbw::UeaElement;
use crate::solver::{
    ann_contains, descend, extract_whittaker_generator, whittaker_nullspace, whittaker_system,
    DescentStep,
};
use crate::structure::{
    composition_series, decompose, simplicity_check_in, submodule_closure, ClosureJson,
    DecompositionJson, SeriesJson, SimplicityVerdict,
};
use crate::verify::{self, CheckResult, VerifyConfig};
use crate::whittaker::{act, ModuleVector, QuotientSpec, Truncation, VectorJson, WhittakerType};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "w22",
    version,
    about = "Exact computations in U(W(2,2)) and its Whittaker modules"
)]
pub struct Cli {
    /// Whittaker type: phi(L1),phi(L2),phi(W1),phi(W2), all nonzero rationals.
    #[arg(long, global = true, default_value = "1,1,1,1", value_parser = parse_phi)]
    pub phi: WhittakerType,

    /// Module: `universal`, or a product of factors like "(z-1)^2*(z+3)".
    #[arg(long, global = true, default_value = "universal", value_parser = parse_quotient)]
    pub quotient: QuotientSpec,

    /// Window N,H,K: degree depth, length and z-degree bounds.
    #[arg(long, global = true, env = "W22_TRUNC", default_value = "4,3,2", value_parser = parse_trunc)]
    pub trunc: Truncation,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lie bracket of two elements of W(2,2).
    Bracket { left: String, right: String },
    /// PBW normal form of an algebra expression.
    Normalize { expression: String },
    /// Apply an algebra element to a module vector.
    Act {
        /// Module vector ending in `w`; `-` reads standard input.
        #[arg(long)]
        vector: String,
        #[arg(long, default_value = "1")]
        element: String,
    },
    /// Basis of the Whittaker vectors in the window.
    WhittakerSolve,
    /// Drive a vector down to a multiple of the cyclic vector.
    Descend {
        #[arg(long)]
        vector: String,
    },
    /// Generator q(z) of the Whittaker vectors in the submodule generated by a vector of M_phi.
    Extract {
        #[arg(long)]
        vector: String,
    },
    /// Whether an element annihilates the cyclic vector.
    AnnCheck {
        #[arg(long)]
        element: String,
    },
    /// Composition series of M_phi/(z-xi)^a M_phi (the quotient must have one root).
    CompSeries,
    /// Direct-sum decomposition along the roots of the quotient.
    Decompose,
    /// Windowed submodule generated by a vector.
    Closure {
        #[arg(long)]
        vector: String,
    },
    /// Simplicity certificate at the window.
    Simplicity {
        /// Root xi of the probe z - xi used in M_phi.
        #[arg(long, default_value = "0", value_parser = parse_rational)]
        probe: Rational,
    },
    /// Run the named property suites.
    Verify {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let e = expr::parse(s).map_err(|e| e.to_string())?;
    let u = expr::eval_algebra(&e).map_err(|e| e.to_string())?;
    scalar_of(&u).ok_or_else(|| format!("'{s}' is not a rational number"))
}

fn scalar_of(u: &UeaElement) -> Option<Rational> {
    match u.terms().collect::<Vec<_>>().as_slice() {
        [] => Some(Rational::from_integer(0.into())),
        [(m, c)] if m.is_one() && c.is_constant() => Some(c.coeff(0)),
        _ => None,
    }
}

pub fn parse_phi(s: &str) -> Result<WhittakerType, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b, c, d] = parts.as_slice() else {
        return Err("expected four comma-separated values".into());
    };
    let v = [a, b, c, d].map(|x| parse_rational(x));
    let [a, b, c, d] = v;
    WhittakerType::new(a?, b?, c?, d?).map_err(|e| e.to_string())
}

pub fn parse_trunc(s: &str) -> Result<Truncation, String> {
    let parts: Result<Vec<u32>, _> = s.split(',').map(|x| x.trim().parse::<u32>()).collect();
    match parts.map_err(|e| e.to_string())?.as_slice() {
        [n, h, k] => Ok(Truncation::new(*n, *h, *k)),
        [n, h] => Ok(Truncation::new(*n, *h, 0)),
        _ => Err("expected N,H,K".into()),
    }
}

fn parse_quotient(s: &str) -> Result<QuotientSpec, String> {
    expr::parse_quotient(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

type Outcome = Result<(String, bool), Failure>;

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli, stdin) {
        Ok((stdout, ok)) => Output {
            code: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Engine(e)) => Output {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn emit<T: Serialize>(cli: &Cli, command: &str, body: &T, text: String) -> String {
    match cli.format {
        Format::Text => text,
        Format::Json => {
            #[derive(Serialize)]
            struct Envelope<'a, T> {
                command: &'a str,
                #[serde(flatten)]
                body: &'a T,
            }
            let mut s = serde_json::to_string_pretty(&Envelope { command, body })
                .expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

fn read_source(src: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if src != "-" {
        return Ok(src.to_string());
    }
    let mut s = String::new();
    stdin
        .read_to_string(&mut s)
        .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
    Ok(s)
}

fn parse_expr(src: &str, want: Kind) -> Result<expr::Expr, Failure> {
    let (e, kind) = expr::parse_kind(src).map_err(|e| Failure::Usage(e.to_string()))?;
    if kind != want {
        let what = match want {
            Kind::Vector => "a module vector (ending in w)",
            Kind::Algebra => "an algebra element (without w)",
        };
        return Err(Failure::Usage(format!("expected {what}: {src}")));
    }
    Ok(e)
}

fn vector_arg(cli: &Cli, src: &str, stdin: &mut dyn Read) -> Result<ModuleVector, Failure> {
    let src = read_source(src, stdin)?;
    let e = parse_expr(src.trim(), Kind::Vector)?;
    Ok(expr::eval_vector(&e, &cli.phi, &cli.quotient)?)
}

fn element_arg(src: &str) -> Result<UeaElement, Failure> {
    Ok(expr::eval_algebra(&parse_expr(src, Kind::Algebra)?)?)
}

fn lie_element(src: &str) -> Result<GeneratorCombination, Failure> {
    let u = element_arg(src)?;
    let mut out = GeneratorCombination::zero();
    let not_lie = || Failure::Usage(format!("not an element of W(2,2): {src}"));
    for (m, c) in u.terms() {
        let factors = m.factors();
        match factors.as_slice() {
            [] if c.coeff(0) == Rational::from_integer(0.into()) && c.degree() == Some(1) => {
                out.add_term(Generator::Z, c.coeff(1))
            }
            [g] if c.is_constant() => out.add_term(*g, c.coeff(0)),
            _ => return Err(not_lie()),
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct TermReport {
    monomial: String,
    coefficient: String,
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let phi = cli.phi.to_string();
    let module = cli.quotient.to_string();
    let trunc = cli.trunc.to_string();
    match &cli.command {
        Command::Bracket { left, right } => {
            let a = lie_element(left)?;
            let b = lie_element(right)?;
            let r = bracket_combinations(&a, &b);
            #[derive(Serialize)]
            struct R {
                left: String,
                right: String,
                result: String,
                terms: Vec<TermReport>,
            }
            let body = R {
                left: a.to_string(),
                right: b.to_string(),
                result: r.to_string(),
                terms: r
                    .iter()
                    .map(|(g, c)| TermReport {
                        monomial: g.to_string(),
                        coefficient: c.to_string(),
                    })
                    .collect(),
            };
            let text = format!("[{}, {}] = {}\n", body.left, body.right, body.result);
            Ok((emit(cli, "bracket", &body, text), true))
        }
        Command::Normalize { expression } => {
            let u = element_arg(expression)?;
            let (mindeg, heights) = if u.is_zero() {
                (None, None)
            } else {
                (Some(u.mindeg()?), Some(u.heights()?))
            };
            #[derive(Serialize)]
            struct R {
                input: String,
                result: String,
                terms: Vec<TermReport>,
                mindeg: Option<i64>,
                height: Option<usize>,
                l_height: Option<usize>,
            }
            let body = R {
                input: expression.clone(),
                result: u.to_string(),
                terms: u
                    .terms()
                    .map(|(m, c)| TermReport {
                        monomial: if m.is_one() {
                            "1".into()
                        } else {
                            m.to_string()
                        },
                        coefficient: c.to_string(),
                    })
                    .collect(),
                mindeg,
                height: heights.map(|h| h.0),
                l_height: heights.map(|h| h.1),
            };
            let mut text = format!("{}\n", body.result);
            if let (Some(d), Some((h, h1))) = (mindeg, heights) {
                let _ = writeln!(text, "mindeg {d}, height {h}, L-height {h1}");
            }
            Ok((emit(cli, "normalize", &body, text), true))
        }
        Command::Act { vector, element } => {
            let v = vector_arg(cli, vector, stdin)?;
            let u = element_arg(element)?;
            let (r, _) = act(&u, &v, None, &cli.phi);
            #[derive(Serialize)]
            struct R {
                phi: String,
                element: String,
                vector: VectorJson,
                result: VectorJson,
            }
            let body = R {
                phi,
                element: u.to_string(),
                vector: v.to_json(),
                result: r.to_json(),
            };
            let text = format!("{r}\n");
            Ok((emit(cli, "act", &body, text), true))
        }
        Command::WhittakerSolve => {
            let system = whittaker_system(&cli.phi, &cli.quotient, &cli.trunc);
            let basis = whittaker_nullspace(&cli.phi, &cli.quotient, &cli.trunc);
            #[derive(Serialize)]
            struct R {
                phi: String,
                module: String,
                trunc: String,
                columns: usize,
                rows: usize,
                escaped: usize,
                dimension: usize,
                basis: Vec<VectorJson>,
            }
            let body = R {
                phi,
                module,
                trunc,
                columns: system.coordinates.len(),
                rows: system.rows.len(),
                escaped: system.escaped.dropped,
                dimension: basis.len(),
                basis: basis.iter().map(ModuleVector::to_json).collect(),
            };
            let mut text = format!("dimension {}\n", body.dimension);
            for b in &basis {
                let _ = writeln!(text, "  {b}");
            }
            Ok((emit(cli, "whittaker-solve", &body, text), true))
        }
        Command::Descend { vector } => {
            let v = vector_arg(cli, vector, stdin)?;
            let (wit, trace) = descend(&v, &cli.phi, &cli.quotient)?;
            #[derive(Serialize)]
            struct R<'a> {
                phi: String,
                input: VectorJson,
                terminal: VectorJson,
                coefficient: String,
                monic: String,
                steps: &'a [DescentStep],
            }
            let body = R {
                phi,
                input: v.to_json(),
                terminal: wit.vector.to_json(),
                coefficient: wit.coefficient.to_string(),
                monic: wit.monic.to_string(),
                steps: &trace.steps,
            };
            let mut text = format!("terminal {}\nsteps {}\n", wit.vector, trace.len());
            for (i, s) in trace.steps.iter().enumerate() {
                let _ = writeln!(
                    text,
                    "  {}. {} - phi: (mindeg, length) ({}, {}) -> ({}, {})",
                    i + 1,
                    s.operator,
                    s.before.mindeg,
                    s.before.length,
                    s.after.mindeg,
                    s.after.length
                );
            }
            Ok((emit(cli, "descend", &body, text), true))
        }
        Command::Extract { vector } => {
            let v = vector_arg(cli, vector, stdin)?;
            let q = extract_whittaker_generator(&v, &cli.phi)?;
            #[derive(Serialize)]
            struct R {
                phi: String,
                input: VectorJson,
                generator: String,
            }
            let body = R {
                phi,
                input: v.to_json(),
                generator: q.to_string(),
            };
            let text = format!("{}\n", body.generator);
            Ok((emit(cli, "extract", &body, text), true))
        }
        Command::AnnCheck { element } => {
            let u = element_arg(element)?;
            let yes = ann_contains(&u, &cli.phi, &cli.quotient);
            #[derive(Serialize)]
            struct R {
                phi: String,
                module: String,
                element: String,
                annihilates: bool,
            }
            let body = R {
                phi,
                module,
                element: u.to_string(),
                annihilates: yes,
            };
            let text = format!(
                "{}\n",
                if yes {
                    "annihilates w"
                } else {
                    "does not annihilate w"
                }
            );
            Ok((emit(cli, "ann-check", &body, text), true))
        }
        Command::CompSeries => {
            let QuotientSpec::Quotient(q) = &cli.quotient else {
                return Err(Failure::Usage(
                    "comp-series needs --quotient \"(z-xi)^a\"".into(),
                ));
            };
            let [(xi, a)] = q.roots() else {
                return Err(Failure::Usage(
                    "comp-series needs a quotient with a single root".into(),
                ));
            };
            let s = composition_series(&cli.phi, xi, *a, &cli.trunc)?;
            #[derive(Serialize)]
            struct R {
                phi: String,
                trunc: String,
                #[serde(flatten)]
                series: SeriesJson,
            }
            let mut text = format!("{} proper layers\n", s.layers.len());
            for l in &s.layers {
                let _ = writeln!(
                    text,
                    "  V{} = U(W)({}) whittaker={} simple={}",
                    l.index, l.cyclic, l.whittaker, l.simple
                );
            }
            let ok = s.terminates && s.layers.iter().all(|l| l.whittaker && l.simple);
            let body = R {
                phi,
                trunc,
                series: s.to_json(),
            };
            Ok((emit(cli, "comp-series", &body, text), ok))
        }
        Command::Decompose => {
            let d = decompose(&cli.phi, &cli.quotient)?;
            #[derive(Serialize)]
            struct R {
                phi: String,
                #[serde(flatten)]
                decomposition: DecompositionJson,
            }
            let mut text = format!(
                "bezout identity {}\n",
                if d.bezout_holds { "holds" } else { "FAILS" }
            );
            for c in &d.components {
                let _ = writeln!(
                    text,
                    "  root {} multiplicity {}: p = {}, q = {}",
                    c.root, c.multiplicity, c.complement, c.cofactor
                );
            }
            let ok = d.bezout_holds;
            let body = R {
                phi,
                decomposition: d.to_json(),
            };
            Ok((emit(cli, "decompose", &body, text), ok))
        }
        Command::Closure { vector } => {
            let v = vector_arg(cli, vector, stdin)?;
            let c = submodule_closure(&v, &cli.phi, &cli.quotient, &cli.trunc)?;
            #[derive(Serialize)]
            struct R {
                phi: String,
                trunc: String,
                input: VectorJson,
                #[serde(flatten)]
                closure: ClosureJson,
            }
            let text = format!(
                "rank {} of {} ({})\n",
                c.rank,
                c.window_rank,
                if c.complete { "complete" } else { "truncated" }
            );
            let body = R {
                phi,
                trunc,
                input: v.to_json(),
                closure: c.to_json(),
            };
            Ok((emit(cli, "closure", &body, text), true))
        }
        Command::Simplicity { probe } => {
            let verdict = simplicity_check_in(&cli.phi, &cli.quotient, probe, &cli.trunc)?;
            #[derive(Serialize)]
            struct R {
                phi: String,
                module: String,
                trunc: String,
                verdict: &'static str,
                probes: Option<usize>,
                witness: Option<VectorJson>,
                closure: Option<ClosureJson>,
            }
            let (body, text) = match &verdict {
                SimplicityVerdict::SimpleAtWindow { probes } => (
                    R {
                        phi,
                        module,
                        trunc,
                        verdict: "simple-at-window",
                        probes: Some(*probes),
                        witness: None,
                        closure: None,
                    },
                    format!("simple at window ({probes} probes)\n"),
                ),
                SimplicityVerdict::NotSimple { witness, closure } => (
                    R {
                        phi,
                        module,
                        trunc,
                        verdict: "not-simple",
                        probes: None,
                        witness: Some(witness.to_json()),
                        closure: Some(closure.to_json()),
                    },
                    format!(
                        "not simple: {witness} generates a submodule of rank {} of {}\n",
                        closure.rank, closure.window_rank
                    ),
                ),
            };
            Ok((emit(cli, "simplicity", &body, text), true))
        }
        Command::Verify { suite } => {
            let config = VerifyConfig {
                trunc: cli.trunc,
                seed: cli.seed,
            };
            let Some(report) = verify::run(suite, &config)? else {
                return Err(Failure::Usage(format!(
                    "unknown suite '{suite}'; expected all or one of {}",
                    verify::SUITES.join(", ")
                )));
            };
            let text = verify_table(&report.checks, report.passed);
            let ok = report.passed;
            Ok((emit(cli, "verify", &report, text), ok))
        }
    }
}

fn verify_table(checks: &[CheckResult], passed: bool) -> String {
    let width = checks
        .iter()
        .map(|c| c.suite.len() + c.check.len() + 1)
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for c in checks {
        let name = format!("{}/{}", c.suite, c.check);
        let _ = writeln!(
            out,
            "{} {name:<width$}  {}",
            if c.passed { "pass" } else { "FAIL" },
            c.detail
        );
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(
        out,
        "{}: {} checks, {failed} failed",
        if passed { "ok" } else { "FAILED" },
        checks.len()
    );
    out
}
