//! Command-line front end. Every command prints JSON on stdout.
//!
//! Exit codes: 0 success, 1 a verification found a violation, 2 usage or
//! input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::ferrers::{
    ferrers_e_poly, hook_content_order_poly, hooks_and_contents, verify_cover_interlacing, EMethod,
    Partition,
};
use crate::interlacing::{alternates, interlace_verdict, obreschkoff_probe};
use crate::poly::{parse_rational, Polynomial};
use crate::posets::{LabelledPoset, SpExpr};
use crate::rootedness::{count_roots, is_real_rooted, isolate_roots, roots_in_interval, Bound};
use crate::transforms::{
    alt_diamond, diamond, h_xi, hermite_poulain, laguerre_transform, lphi_diamond, schur_product,
};
use crate::verify::{Registry, SuiteConfig};

#[derive(Debug, Parser)]
#[command(
    name = "realroots",
    version,
    about = "Exact real-rootedness and interlacing toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Real roots of a single polynomial
    #[command(subcommand)]
    Roots(RootsCmd),
    /// Alternation and interlacing of two polynomials
    #[command(subcommand)]
    Interlace(InterlaceCmd),
    /// Products and transforms
    #[command(subcommand)]
    Poly(PolyCmd),
    /// E- and order polynomials of labelled posets
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Ferrers posets and the hook-content formula
    #[command(subcommand)]
    Ferrers(FerrersCmd),
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum RootsCmd {
    /// Isolating intervals (or exact values) and multiplicities
    Isolate {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Distinct real roots in (lo, hi]; bounds may be -inf / inf
    Count {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        lo: String,
        #[arg(allow_hyphen_values = true)]
        hi: String,
    },
    /// Real-rootedness classification
    CheckReal {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Whether all roots are real and lie in [lo, hi]
    InInterval {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        lo: String,
        #[arg(allow_hyphen_values = true)]
        hi: String,
        /// Use the open interval (lo, hi)
        #[arg(long)]
        open: bool,
    },
}

#[derive(Debug, Subcommand)]
enum InterlaceCmd {
    /// Whether g interlaces f (g ⪯ f, or g ≺ f with --strict)
    Check {
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        strict: bool,
    },
    /// Whether f and g alternate
    Alternates {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Sample real-rootedness of a f + b g
    Probe {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum PolyCmd {
    /// f ◇ g
    Diamond {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// f ⊙ g
    Schur {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Alternate diamond product
    Altdiamond {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// f(d/dx) g
    Hp {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Σ a_k x^k / k!
    Laguerre {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// H_ξ for h
    Hxi {
        #[arg(allow_hyphen_values = true)]
        h: String,
        #[arg(allow_hyphen_values = true)]
        xi: String,
    },
    /// L_φ(f)(ξ, z) for φ = · ◇ h, as a polynomial in z
    Lphi {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
        #[arg(allow_hyphen_values = true)]
        xi: String,
    },
}

#[derive(Debug, Subcommand)]
enum PosetCmd {
    /// E-polynomial; input is a JSON file or an SP expression
    Epoly { input: String },
    /// Order polynomial
    Order { input: String },
    /// E(P \ x) ⪯ E(P) for every element x
    VerifyDeletion { input: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    HookContent,
    Recursion,
    Enumeration,
}

impl From<MethodArg> for EMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::HookContent => EMethod::HookContent,
            MethodArg::Recursion => EMethod::Recursion,
            MethodArg::Enumeration => EMethod::Enumeration,
        }
    }
}

#[derive(Debug, Subcommand)]
enum FerrersCmd {
    /// Hook-content order polynomial
    Omega { parts: Vec<String> },
    /// E-polynomial of the column-strict Ferrers poset
    Epoly {
        parts: Vec<String>,
        #[arg(long, value_enum, default_value = "hook-content")]
        method: MethodArg,
    },
    /// E(P_μ) ⪯ E(P_λ) for every μ covered by λ
    VerifyCover { parts: Vec<String> },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Suite id, or `all`
    suite: String,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Write the report here instead of stdout
    #[arg(long)]
    json: Option<std::path::PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(&Registry::builtin(), args, out, err)
}

/// Like [`run`], with `verify` resolving suites in `registry`.
pub fn run_with<I, T>(registry: &Registry, args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(registry, cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn poly(s: &str) -> Result<Polynomial> {
    Polynomial::parse_any(s)
}

fn partition(parts: &[String]) -> Result<Partition> {
    parts.join(" ").parse()
}

/// A poset JSON file, a JSON literal, or an SP expression.
fn poset_input(input: &str) -> Result<LabelledPoset> {
    let text = if Path::new(input).is_file() {
        std::fs::read_to_string(input).map_err(|e| Error::Io(format!("{input}: {e}")))?
    } else {
        input.to_string()
    };
    if text.trim_start().starts_with('{') {
        LabelledPoset::from_json_str(&text)
    } else {
        Ok(crate::posets::sp_build(&text.trim().parse::<SpExpr>()?))
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    writeln!(out, "{text}").map_err(|e| Error::Io(e.to_string()))
}

fn poly_json(p: &Polynomial) -> serde_json::Value {
    json!({ "coefficients": p, "text": p.to_text(), "pretty": p.pretty() })
}

fn execute(registry: &Registry, command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Roots(cmd) => match cmd {
            RootsCmd::Isolate { poly: p } => emit(out, &isolate_roots(&poly(&p)?)?)?,
            RootsCmd::Count { poly: p, lo, hi } => {
                let count = count_roots(&poly(&p)?, &lo.parse::<Bound>()?, &hi.parse::<Bound>()?)?;
                emit(out, &json!({ "count": count }))?
            }
            RootsCmd::CheckReal { poly: p } => {
                emit(out, &json!({ "rootedness": is_real_rooted(&poly(&p)?)? }))?
            }
            RootsCmd::InInterval {
                poly: p,
                lo,
                hi,
                open,
            } => {
                let inside = roots_in_interval(
                    &poly(&p)?,
                    &parse_rational(&lo)?,
                    &parse_rational(&hi)?,
                    !open,
                )?;
                emit(out, &json!({ "in_interval": inside, "closed": !open }))?
            }
        },
        Command::Interlace(cmd) => match cmd {
            InterlaceCmd::Check { g, f, strict } => {
                emit(out, &interlace_verdict(&poly(&g)?, &poly(&f)?, strict)?)?
            }
            InterlaceCmd::Alternates { f, g } => emit(out, &alternates(&poly(&f)?, &poly(&g)?)?)?,
            InterlaceCmd::Probe {
                f,
                g,
                samples,
                seed,
            } => emit(
                out,
                &obreschkoff_probe(&poly(&f)?, &poly(&g)?, samples, seed)?,
            )?,
        },
        Command::Poly(cmd) => {
            let result = match cmd {
                PolyCmd::Diamond { f, g } => diamond(&poly(&f)?, &poly(&g)?),
                PolyCmd::Schur { f, g } => schur_product(&poly(&f)?, &poly(&g)?),
                PolyCmd::Altdiamond { f, g } => alt_diamond(&poly(&f)?, &poly(&g)?),
                PolyCmd::Hp { f, g } => hermite_poulain(&poly(&f)?, &poly(&g)?),
                PolyCmd::Laguerre { f } => laguerre_transform(&poly(&f)?),
                PolyCmd::Hxi { h, xi } => h_xi(&poly(&h)?, &parse_rational(&xi)?),
                PolyCmd::Lphi { f, h, xi } => {
                    lphi_diamond(&poly(&f)?, &poly(&h)?, &parse_rational(&xi)?)
                }
            };
            emit(out, &poly_json(&result))?
        }
        Command::Poset(cmd) => match cmd {
            PosetCmd::Epoly { input } => {
                emit(out, &poly_json(&poset_input(&input)?.e_polynomial()?))?
            }
            PosetCmd::Order { input } => {
                emit(out, &poly_json(&poset_input(&input)?.order_polynomial()?))?
            }
            PosetCmd::VerifyDeletion { input } => {
                let poset = poset_input(&input)?;
                let e = poset.e_polynomial()?;
                let real_rooted = is_real_rooted(&e)?.is_real();
                let mut ok = real_rooted;
                let mut deletions = Vec::new();
                for (x, name) in poset.names().iter().enumerate() {
                    let ex = poset.delete_element(x)?.e_polynomial()?;
                    let holds = crate::interlacing::interlaces(&ex, &e, false)?;
                    ok &= holds;
                    deletions.push(json!({ "element": name, "e_polynomial": ex.to_text(), "interlaces": holds }));
                }
                emit(
                    out,
                    &json!({
                        "e_polynomial": e.to_text(),
                        "real_rooted": real_rooted,
                        "deletions": deletions,
                        "passed": ok,
                    }),
                )?;
                return Ok(if ok { 0 } else { 1 });
            }
        },
        Command::Ferrers(cmd) => match cmd {
            FerrersCmd::Omega { parts } => {
                let lambda = partition(&parts)?;
                let cells: Vec<_> = hooks_and_contents(&lambda)
                    .into_iter()
                    .map(|c| json!({ "cell": c.cell, "hook": c.hook, "content": c.content }))
                    .collect();
                let omega = hook_content_order_poly(&lambda);
                emit(
                    out,
                    &json!({ "partition": lambda, "cells": cells, "order_polynomial": poly_json(&omega) }),
                )?
            }
            FerrersCmd::Epoly { parts, method } => emit(
                out,
                &poly_json(&ferrers_e_poly(&partition(&parts)?, method.into())?),
            )?,
            FerrersCmd::VerifyCover { parts } => {
                let report = verify_cover_interlacing(&partition(&parts)?)?;
                emit(out, &report)?;
                return Ok(if report.passed() { 0 } else { 1 });
            }
        },
        Command::Verify(args) => {
            let config = SuiteConfig {
                max_n: args.max_n,
                samples: args.samples,
                seed: args.seed,
            };
            let report = registry.run(&args.suite, &config)?;
            match &args.json {
                Some(path) => {
                    let text = serde_json::to_string_pretty(&report).expect("serializable");
                    std::fs::write(path, text + "\n")
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    emit(
                        out,
                        &json!({ "summary": report.to_string(), "report": path }),
                    )?
                }
                None => emit(out, &report)?,
            }
            return Ok(report.exit_code());
        }
    }
    Ok(0)
}
