//! `fibrun` command-line front end.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use fibrun::genfunc::{self, family_polynomial, GfId, IdentityId};
use fibrun::polyring::Var;
use fibrun::{build, census, Family, MPoly, Method, PolyKind};

mod repro;

#[derive(Parser, Debug)]
#[command(
    name = "fibrun",
    version,
    about = "Subcube census and distance cube polynomials of Fibonacci-run, Lucas-run, Fibonacci and Lucas cube graphs"
)]
struct Cli {
    /// Worker threads; output does not depend on it.
    #[arg(long, global = true, env = "FIBRUN_THREADS")]
    threads: Option<usize>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the vertex set of a graph, sorted lexicographically.
    Vertices {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute an enumerator polynomial of one graph.
    Poly {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::DistCube)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand a catalog generating function.
    Gf {
        #[arg(long, value_parser = parse_gf_id)]
        id: GfId,
        #[arg(long, default_value_t = fibrun::polyring::DEFAULT_ORDER)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check one identity for every n up to --n-max.
    Verify {
        #[arg(long, value_parser = parse_identity)]
        id: IdentityId,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every reproduction check and print a pass/fail table.
    Repro {
        /// Seed for the randomized ring-axiom checks.
        #[arg(long, default_value_t = repro::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Q,
    Gamma,
    Lambda,
    R,
    Rl,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Q => Family::Hypercube,
            FamilyArg::Gamma => Family::Fibonacci,
            FamilyArg::Lambda => Family::Lucas,
            FamilyArg::R => Family::FibonacciRun,
            FamilyArg::Rl => Family::LucasRun,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    DistCube,
    Cube,
    Dcw,
    Weight,
    Updeg,
}

impl From<KindArg> for PolyKind {
    fn from(k: KindArg) -> PolyKind {
        match k {
            KindArg::DistCube => PolyKind::DistCube,
            KindArg::Cube => PolyKind::Cube,
            KindArg::Dcw => PolyKind::Dcw,
            KindArg::Weight => PolyKind::Weight,
            KindArg::Updeg => PolyKind::Updeg,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Topvertex,
    Gf,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Text,
    Json,
    Csv,
}

fn parse_gf_id(s: &str) -> Result<GfId, String> {
    s.parse().map_err(|e: genfunc::GfError| e.to_string())
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|e: genfunc::GfError| e.to_string())
}

/// How a command ended, mapped onto the process exit code.
enum Outcome {
    Ok,
    VerificationFailed,
}

/// Bad flag values caught after parsing (caps, unsupported combinations); exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(e: impl std::fmt::Display) -> anyhow::Error {
    anyhow::Error::new(UsageError(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<UsageError>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring worker threads")?;
    }
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(File::create(path).with_context(|| format!("creating {}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    let (text, outcome) = match cli.command {
        Command::Vertices { family, n, format } => (vertices(family.into(), n, format)?, Outcome::Ok),
        Command::Poly {
            family,
            n,
            kind,
            method,
            format,
        } => (poly(family.into(), n, kind.into(), method, format)?, Outcome::Ok),
        Command::Gf { id, order, format } => (gf(id, order, format)?, Outcome::Ok),
        Command::Verify {
            id,
            n_max,
            method,
            format,
        } => {
            let method = census_method(method)?;
            let report = genfunc::verify_with(id, n_max, method).map_err(usage)?;
            let text = match format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
                Format::Csv => return Err(usage(format_args!("verify supports text and json output"))),
            };
            (
                text,
                if report.passed {
                    Outcome::Ok
                } else {
                    Outcome::VerificationFailed
                },
            )
        }
        Command::Repro { seed, format } => {
            let table = repro::run(seed);
            let text = match format {
                Format::Json => table.to_json() + "\n",
                Format::Text => table.to_text(),
                Format::Csv => return Err(usage(format_args!("repro supports text and json output"))),
            };
            (
                text,
                if table.passed() {
                    Outcome::Ok
                } else {
                    Outcome::VerificationFailed
                },
            )
        }
    };
    sink.write_all(text.as_bytes())?;
    sink.flush()?;
    Ok(outcome)
}

fn census_method(m: MethodArg) -> anyhow::Result<Method> {
    match m {
        MethodArg::Oracle => Ok(Method::Oracle),
        MethodArg::Topvertex => Ok(Method::TopVertex),
        MethodArg::Auto => Ok(Method::Auto),
        MethodArg::Gf => Err(usage(format_args!(
            "method gf is only available for the poly subcommand"
        ))),
    }
}

fn vertices(family: Family, n: usize, format: Format) -> anyhow::Result<String> {
    let g = build(family, n).map_err(usage)?;
    let words: Vec<String> = g.vertices().iter().map(|v| v.to_string()).collect();
    match format {
        Format::Text => Ok(words.iter().map(|w| format!("{w}\n")).collect()),
        Format::Json => Ok(serde_json::to_string(&words)? + "\n"),
        Format::Csv => Err(usage(format_args!("vertices supports text and json output"))),
    }
}

fn poly(family: Family, n: usize, kind: PolyKind, method: MethodArg, format: Format) -> anyhow::Result<String> {
    let p = if method == MethodArg::Gf {
        family_polynomial(family, kind, n).map_err(usage)?
    } else {
        let g = build(family, n).map_err(usage)?;
        census::polynomial(&g, kind, census_method(method)?).map_err(usage)?
    };
    render_poly(&p, kind.vars(), format)
}

pub(crate) fn render_poly(p: &MPoly, vars: &[Var], format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Text => format!("{p}\n"),
        Format::Json => serde_json::to_string(&p.to_json_form(vars)?)? + "\n",
        Format::Csv => {
            let mut out = csv_header(&[], vars);
            for row in csv_rows(p, vars) {
                out.push_str(&row);
            }
            out
        }
    })
}

fn csv_header(leading: &[&str], vars: &[Var]) -> String {
    let cols: Vec<&str> = leading
        .iter()
        .copied()
        .chain(vars.iter().map(|v| v.name()))
        .chain(["coeff"])
        .collect();
    cols.join(",") + "\n"
}

fn csv_rows(p: &MPoly, vars: &[Var]) -> Vec<String> {
    p.terms()
        .map(|(m, c)| {
            let exps: Vec<String> = vars.iter().map(|&v| m.exponent(v).to_string()).collect();
            format!("{},{}\n", exps.join(","), c)
        })
        .collect()
}

fn gf(id: GfId, order: usize, format: Format) -> anyhow::Result<String> {
    let series = genfunc::catalog_expand(id, order);
    let vars = id.target().1.vars();
    Ok(match format {
        Format::Text => series.iter().enumerate().map(|(n, p)| format!("{n}\t{p}\n")).collect(),
        Format::Json => {
            let coeffs = series
                .iter()
                .map(|p| p.to_json_form(vars))
                .collect::<Result<Vec<_>, _>>()?;
            let doc = serde_json::json!({ "id": id.code(), "order": order, "coefficients": coeffs });
            serde_json::to_string(&doc)? + "\n"
        }
        Format::Csv => {
            let mut out = csv_header(&["n"], vars);
            for (n, p) in series.iter().enumerate() {
                for row in csv_rows(p, vars) {
                    out.push_str(&format!("{n},{row}"));
                }
            }
            out
        }
    })
}
