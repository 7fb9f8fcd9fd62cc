//! Command-line surface over the library: sequence generation, continued
//! fraction expansion, Pell solving, the quartic pipeline, and the audits.
//!
//! Every command writes human-readable text by default; `--json` switches to
//! a single envelope object `{"command", "inputs", "result", "elapsed_ms"}`
//! on stdout, with diagnostics kept on stderr.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{self, Write};
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::cf::{self, PellSign};
use crate::error::Error;
use crate::pell;
use crate::quadform;
use crate::quartic;

pub const EXIT_SUCCESS: i32 = 0;
/// An audit ran and failed, or some other non-usage failure occurred.
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_RADICAND: i32 = 3;
pub const EXIT_UNSOLVABLE: i32 = 4;

#[derive(Parser)]
#[command(
    name = "ljunggren",
    version,
    about = "Exact Pell sequences, continued fractions of square roots, and the quartic 1 + x^2 = 2y^4"
)]
struct Cli {
    /// Emit a single JSON envelope object on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeqKind {
    /// The Pell numbers 0, 1, 2, 5, 12, ...
    #[value(name = "pell")]
    Pell,
    /// The odd-indexed subsequence 1, 5, 29, 169, ...
    #[value(name = "seq2")]
    Seq2,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first terms of a sequence.
    Seq {
        #[arg(value_enum)]
        kind: SeqKind,
        /// Number of terms to print (at least 1).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Expand sqrt(d) as a periodic continued fraction and list convergents.
    Cf {
        /// Nonsquare radicand, as a decimal string.
        #[arg(long, value_parser = parse_biguint)]
        d: BigUint,
        /// Number of convergents to print (at least 1).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// List solutions of x^2 - d*y^2 = +1 or -1.
    Pell {
        /// Nonsquare radicand, as a decimal string.
        #[arg(long, value_parser = parse_biguint)]
        d: BigUint,
        /// Right-hand side: +1 or -1.
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        sign: PellSign,
        /// Number of solutions to print (at least 1).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Search for solutions of 1 + x^2 = 2y^4 among the first `bound`
    /// solutions of x^2 - 2Y^2 = -1; exit 0 iff all requested audits pass.
    Ljunggren {
        /// How many negative-Pell solutions to examine (at least 1).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
        /// Also audit adjacent square sums up to this index (at least 5).
        #[arg(long, value_parser = clap::value_parser!(u64).range(5..))]
        max_n: Option<u64>,
        /// Also audit the leg-ratio claim up to this k (at least 1).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_k: Option<u64>,
    },
    /// Run the brute-force audits on their own; exit 0 iff all pass.
    #[command(group(ArgGroup::new("ranges").required(true).multiple(true).args(["max_n", "max_k"])))]
    Audit {
        /// Audit adjacent square sums up to this index (at least 5).
        #[arg(long, value_parser = clap::value_parser!(u64).range(5..))]
        max_n: Option<u64>,
        /// Audit the leg-ratio claim up to this k (at least 1).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_k: Option<u64>,
    },
}

fn parse_biguint(s: &str) -> Result<BigUint, String> {
    s.parse()
        .map_err(|e| format!("not a decimal natural number: {e}"))
}

fn parse_sign(s: &str) -> Result<PellSign, String> {
    match s {
        "1" | "+1" => Ok(PellSign::Plus),
        "-1" => Ok(PellSign::Minus),
        _ => Err(String::from("expected +1 or -1")),
    }
}

struct CommandOutput {
    command: &'static str,
    inputs: Value,
    result: Value,
    human: String,
    all_pass: bool,
}

/// Parse `std::env::args` and run; returns the process exit code.
pub fn run() -> i32 {
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    run_with(std::env::args_os(), &mut out, &mut err)
}

/// Run against explicit arguments and output sinks. First argument is the
/// binary name, as usual.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return e.exit_code();
        }
    };
    let started = Instant::now();
    match dispatch(&cli.command) {
        Ok(output) => {
            if cli.json {
                let envelope = json!({
                    "command": output.command,
                    "inputs": output.inputs,
                    "result": output.result,
                    "elapsed_ms": started.elapsed().as_millis() as u64,
                });
                let _ = writeln!(out, "{envelope}");
            } else {
                let _ = write!(out, "{}", output.human);
            }
            if output.all_pass {
                EXIT_SUCCESS
            } else {
                EXIT_FAILURE
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::InvalidRadicand(_) | Error::PerfectSquareRadicand(_) => EXIT_INVALID_RADICAND,
        Error::NoNegativePellSolution(_) => EXIT_UNSOLVABLE,
        Error::RangeTooSmall { .. } => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn dispatch(cmd: &Command) -> Result<CommandOutput, Error> {
    match cmd {
        Command::Seq { kind, count } => cmd_seq(*kind, *count),
        Command::Cf { d, count } => cmd_cf(d, *count),
        Command::Pell { d, sign, count } => cmd_pell(d, *sign, *count),
        Command::Ljunggren { bound, max_n, max_k } => cmd_ljunggren(*bound, *max_n, *max_k),
        Command::Audit { max_n, max_k } => cmd_audit(*max_n, *max_k),
    }
}

fn cmd_seq(kind: SeqKind, count: u64) -> Result<CommandOutput, Error> {
    let terms: Vec<String> = match kind {
        SeqKind::Pell => pell::pell_pairs(count)?.map(|p| p.a.to_string()).collect(),
        SeqKind::Seq2 => pell::seq2_numbers(count).iter().map(|t| t.to_string()).collect(),
    };
    let kind_name = match kind {
        SeqKind::Pell => "pell",
        SeqKind::Seq2 => "seq2",
    };
    Ok(CommandOutput {
        command: "seq",
        inputs: json!({ "kind": kind_name, "count": count }),
        result: json!({ "terms": terms }),
        human: format!("{}\n", terms.join(" ")),
        all_pass: true,
    })
}

fn cmd_cf(d: &BigUint, count: u64) -> Result<CommandOutput, Error> {
    let expansion = cf::cf_expand_sqrt(d)?;
    let convs = cf::convergents(&expansion, count);
    let line = convs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
    let human = format!("sqrt({d}) = {expansion}\nconvergents: {line}\n");
    Ok(CommandOutput {
        command: "cf",
        inputs: json!({ "d": d.to_string(), "count": count }),
        result: json!({
            "a0": expansion.a0.to_string(),
            "period": expansion.period.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
            "convergents": convs
                .iter()
                .map(|c| json!({ "k": c.k, "p": c.p.to_string(), "q": c.q.to_string() }))
                .collect::<Vec<_>>(),
        }),
        human,
        all_pass: true,
    })
}

fn cmd_pell(d: &BigUint, sign: PellSign, count: u64) -> Result<CommandOutput, Error> {
    let solutions = cf::pell_solutions(d, sign, count)?;
    let mut human = format!("x^2 - {d}*y^2 = {sign}\n");
    for sol in &solutions {
        human.push_str(&format!("{sol}\n"));
    }
    Ok(CommandOutput {
        command: "pell",
        inputs: json!({ "d": d.to_string(), "sign": sign.value(), "count": count }),
        result: json!({
            "solutions": solutions
                .iter()
                .map(|s| json!({ "x": s.x.to_string(), "y": s.y.to_string() }))
                .collect::<Vec<_>>(),
        }),
        human,
        all_pass: true,
    })
}

fn cmd_ljunggren(bound: u64, max_n: Option<u64>, max_k: Option<u64>) -> Result<CommandOutput, Error> {
    let mut cert = quartic::solve_ljunggren(bound);
    if let Some(max_n) = max_n {
        cert.audits
            .insert("square_sums".into(), quadform::audit_square_sums(max_n)?);
    }
    if let Some(max_k) = max_k {
        let report = quadform::audit_ratio_claim(max_k)?;
        cert.audits.insert("ratio_claim".into(), report.record);
    }
    let all_pass = cert.audits.values().all(|record| record.pass);

    let mut human = format!("searched the first {bound} solutions of x^2 - 2*Y^2 = -1\n");
    human.push_str("solutions of 1 + x^2 = 2*y^4:\n");
    for sol in &cert.solutions {
        human.push_str(&format!("  x = {}, y = {}\n", sol.x, sol.y));
    }
    human.push_str("squares in seq2:");
    if cert.squares_in_seq2.is_empty() {
        human.push_str(" none\n");
    } else {
        let entries: Vec<String> = cert
            .squares_in_seq2
            .iter()
            .map(|sq| format!("index {}: {} = {}^2", sq.index, sq.value, sq.root))
            .collect();
        human.push_str(&format!(" {}\n", entries.join("; ")));
    }
    for (name, record) in &cert.audits {
        human.push_str(&render_audit(name, record));
    }

    Ok(CommandOutput {
        command: "ljunggren",
        inputs: json!({ "bound": bound, "max_n": max_n, "max_k": max_k }),
        result: serde_json::to_value(&cert).expect("certificate serializes"),
        human,
        all_pass,
    })
}

fn cmd_audit(max_n: Option<u64>, max_k: Option<u64>) -> Result<CommandOutput, Error> {
    let mut audits = BTreeMap::new();
    let mut ratio_pairs = None;
    if let Some(max_n) = max_n {
        audits.insert("square_sums".to_string(), quadform::audit_square_sums(max_n)?);
    }
    if let Some(max_k) = max_k {
        let report = quadform::audit_ratio_claim(max_k)?;
        audits.insert("ratio_claim".to_string(), report.record);
        ratio_pairs = Some(report.pairs);
    }
    let all_pass = audits.values().all(|record| record.pass);

    let mut human = String::new();
    for (name, record) in &audits {
        human.push_str(&render_audit(name, record));
    }
    if let Some(pairs) = &ratio_pairs {
        let conforming = pairs.iter().filter(|p| p.conforms).count();
        human.push_str(&format!(
            "ratio_claim pairs: {} total, {} conforming\n",
            pairs.len(),
            conforming
        ));
    }

    Ok(CommandOutput {
        command: "audit",
        inputs: json!({ "max_n": max_n, "max_k": max_k }),
        result: json!({
            "audits": serde_json::to_value(&audits).expect("records serialize"),
            "ratio_pairs": ratio_pairs
                .map(|pairs| serde_json::to_value(&pairs).expect("pairs serialize"))
                .unwrap_or(Value::Null),
        }),
        human,
        all_pass,
    })
}

fn render_audit(name: &str, record: &quadform::AuditRecord) -> String {
    let mut text = format!(
        "audit {name}: {} over {}\n",
        if record.pass { "pass" } else { "FAIL" },
        record.range
    );
    const SHOWN: usize = 10;
    for line in record.counterexamples.iter().take(SHOWN) {
        text.push_str(&format!("  {line}\n"));
    }
    if record.counterexamples.len() > SHOWN {
        text.push_str(&format!(
            "  ... and {} more\n",
            record.counterexamples.len() - SHOWN
        ));
    }
    text
}
