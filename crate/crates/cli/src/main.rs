//! `weyl-lifts`: run the relation suites, print root data, and compute
//! closure orders of named generator sets.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or a closure
//! hits its cap, 2 on usage errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weyl_lifts::clifford::{
    clifford_closure, pin_weyl_lift, spin_lift_b, verify_pin_gl_suite, verify_pin_suite, verify_spin_suite,
};
use weyl_lifts::error::Error;
use weyl_lifts::exactmat::{group_closure, DEFAULT_CLOSURE_CAP};
use weyl_lifts::lifts::{
    classical_generators, gl_generators, outer_rep_d, sl_lift, so_odd_lift, verify_classical_suite,
    verify_gl_tits_presentation,
};
use weyl_lifts::liealg::{verify_adjoint_suite, verify_serre};
use weyl_lifts::quat::{quat_weyl_closure, verify_quat_suite, QUAT_MAX_DIM};
use weyl_lifts::report::SuiteReport;
use weyl_lifts::rootdata::{build_root_datum, fundamental_group, generate_root_system, TypeLabel};
use weyl_lifts::scalars::rational_to_string;

#[derive(Parser)]
#[command(name = "weyl-lifts", version, about = "Exact checks of Weyl group lifts for classical Lie groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the root datum of a classical type as JSON.
    Rootdata {
        #[arg(long = "type")]
        type_label: TypeLabel,
        #[arg(long)]
        rank: usize,
        /// Write the JSON here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one relation suite, or all of them.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long = "type")]
        type_label: Option<TypeLabel>,
        /// Rank ℓ. The gl suite works in GL_{ℓ+1}; the quat suite uses ℓ as the matrix size.
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the group generated by a named set, given as NAME:RANK.
    Closure {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
        cap: usize,
        /// Exit 1 unless the order equals this value.
        #[arg(long)]
        expect: Option<usize>,
        /// Include a shortest generator word for every element.
        #[arg(long)]
        words: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Gl,
    Classical,
    Sl,
    So,
    Pin,
    Spin,
    Quat,
    Adjoint,
    Serre,
    All,
}

/// Named generator sets accepted by `closure --set`.
const CATALOG: &[(&str, &str)] = &[
    ("gl-s", "S_i in GL_n"),
    ("gl-tits", "S_i and T_k in GL_n"),
    ("B-weyl-lift", "S^B_i in GL_{2l+1}"),
    ("C-weyl-lift", "S^C_i in GL_{2l}"),
    ("D-weyl-lift", "S^D_i in GL_{2l}"),
    ("B-tits", "sdot^B_i in GL_{2l+1}"),
    ("C-tits", "sdot^C_i in GL_{2l}"),
    ("D-tits", "sdot^D_i in GL_{2l}"),
    ("sl-lift", "sigma_i in SL_{l+1}"),
    ("so-lift", "sigma_i in SO_{2l+1}"),
    ("pin-b", "Pin lift of W(B_l)"),
    ("pin-d", "Pin lift of W(D_l)"),
    ("spin-b", "Spin lift of W(B_l)"),
    ("quat-c", "permutations and j-flips in GL_m(H)"),
];

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { cap, partial } => {
                Failure::Check(format!("closure cap {cap} exceeded after {partial} elements"))
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            match writeln!(stdout, "{text}") {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::Usage(format!("cannot write output: {e}"))),
                _ => Ok(()),
            }
        }
    }
}

fn require<T>(v: Option<T>, what: &str, suite: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("suite {suite} needs --{what}")))
}

fn rootdata(t: TypeLabel, rank: usize, out: &Option<PathBuf>) -> Result<bool, Failure> {
    let datum = build_root_datum(t, rank)?;
    let mut doc = datum.to_json();
    let roots: Vec<Vec<String>> = generate_root_system(&datum)
        .iter()
        .map(|v| v.iter().map(rational_to_string).collect())
        .collect();
    doc["roots"] = json!(roots);
    doc["fundamental_group"] = json!(fundamental_group(t, rank)?);
    let text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    emit(&text, out)?;
    Ok(true)
}

fn types_for(suite: Suite, requested: Option<TypeLabel>, rank: usize) -> Vec<TypeLabel> {
    let allowed: &[TypeLabel] = match suite {
        Suite::Classical => &[TypeLabel::B, TypeLabel::C, TypeLabel::D],
        Suite::Pin => &[TypeLabel::B, TypeLabel::D],
        _ => &[TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D],
    };
    allowed
        .iter()
        .copied()
        .filter(|t| requested.is_none_or(|r| r == *t))
        .filter(|t| rank >= t.min_rank())
        .collect()
}

fn run_suite(suite: Suite, t: Option<TypeLabel>, rank: Option<usize>) -> Result<Vec<SuiteReport>, Failure> {
    let name = suite.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut reports = Vec::new();
    match suite {
        Suite::Gl => reports.push(verify_gl_tits_presentation(require(rank, "rank", &name)? + 1)?),
        Suite::Sl => reports.push(sl_lift(require(rank, "rank", &name)?)?.1),
        Suite::So => reports.push(so_odd_lift(require(rank, "rank", &name)?)?.1),
        Suite::Spin => reports.push(verify_spin_suite(require(rank, "rank", &name)?)?),
        Suite::Quat => reports.push(verify_quat_suite(require(rank, "rank", &name)?)?),
        Suite::Classical => {
            let t = require(t, "type", &name)?;
            let rank = require(rank, "rank", &name)?;
            reports.push(verify_classical_suite(t, rank)?);
            if t == TypeLabel::D {
                reports.push(outer_rep_d(rank)?.1);
            }
        }
        Suite::Pin => {
            let rank = require(rank, "rank", &name)?;
            match t {
                None => reports.push(verify_pin_gl_suite(rank + 1)?),
                Some(t) => reports.push(verify_pin_suite(t, rank)?),
            }
        }
        Suite::Adjoint => reports.push(verify_adjoint_suite(require(t, "type", &name)?, require(rank, "rank", &name)?)?),
        Suite::Serre => reports.push(verify_serre(require(t, "type", &name)?, require(rank, "rank", &name)?)?),
        Suite::All => {
            let rank = require(rank, "rank", &name)?;
            if t.is_none() {
                reports.push(verify_gl_tits_presentation(rank + 1)?);
                reports.push(sl_lift(rank)?.1);
                reports.push(verify_pin_gl_suite(rank + 1)?);
                if rank <= QUAT_MAX_DIM {
                    reports.push(verify_quat_suite(rank)?);
                }
            }
            if t.is_none_or(|t| t == TypeLabel::B) {
                reports.push(so_odd_lift(rank)?.1);
                reports.push(verify_spin_suite(rank)?);
            }
            for ty in types_for(Suite::Classical, t, rank) {
                reports.extend(run_suite(Suite::Classical, Some(ty), Some(rank))?);
            }
            for ty in types_for(Suite::Pin, t, rank) {
                reports.push(verify_pin_suite(ty, rank)?);
            }
            for ty in types_for(Suite::Serre, t, rank) {
                reports.push(verify_serre(ty, rank)?);
                reports.push(verify_adjoint_suite(ty, rank)?);
            }
        }
    }
    Ok(reports)
}

fn verify(suite: Suite, t: Option<TypeLabel>, rank: Option<usize>, as_json: bool, out: &Option<PathBuf>) -> Result<bool, Failure> {
    let reports = run_suite(suite, t, rank)?;
    let passed = reports.iter().all(SuiteReport::passed);
    let text = if as_json {
        serde_json::to_string_pretty(&reports).expect("reports serialize")
    } else {
        let mut s: String = reports.iter().map(|r| r.to_string()).collect();
        let failed: usize = reports.iter().map(|r| r.failures().len()).sum();
        let total: usize = reports.iter().map(|r| r.checks.len()).sum();
        s.push_str(&format!("{} of {total} checks passed", total - failed));
        s
    };
    emit(&text, out)?;
    Ok(passed)
}

fn parse_set(set: &str) -> Result<(&str, usize), Failure> {
    let (name, rank) = set
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("generator set {set:?} is not NAME:RANK")))?;
    let rank = rank
        .parse()
        .map_err(|_| Failure::Usage(format!("rank {rank:?} is not a non-negative integer")))?;
    if !CATALOG.iter().any(|(n, _)| *n == name) {
        let known: Vec<&str> = CATALOG.iter().map(|(n, _)| *n).collect();
        return Err(Failure::Usage(format!("unknown generator set {name:?}; known sets: {}", known.join(", "))));
    }
    Ok((name, rank))
}

/// Order and, on request, the shortest words of the named closure.
fn closure_of(name: &str, rank: usize, cap: usize) -> Result<(usize, Vec<Vec<usize>>), Failure> {
    let matrix = |gens: Vec<_>| -> Result<(usize, Vec<Vec<usize>>), Failure> {
        let c = group_closure(&gens, cap)?;
        Ok((c.order, c.words))
    };
    let ty = |prefix: char| -> TypeLabel { prefix.to_string().parse().expect("catalog prefixes are type labels") };
    match name {
        "gl-s" => matrix(gl_generators(rank)?.all_s().to_vec()),
        "gl-tits" => {
            let g = gl_generators(rank)?;
            matrix(g.all_s().iter().chain(g.all_t()).cloned().collect())
        }
        "B-weyl-lift" | "C-weyl-lift" | "D-weyl-lift" => matrix(classical_generators(ty(name.chars().next().unwrap()), rank)?.s),
        "B-tits" | "C-tits" | "D-tits" => matrix(classical_generators(ty(name.chars().next().unwrap()), rank)?.sdot),
        "sl-lift" => matrix(sl_lift(rank)?.0),
        "so-lift" => matrix(so_odd_lift(rank)?.0),
        "pin-b" | "pin-d" => {
            let t = if name == "pin-b" { TypeLabel::B } else { TypeLabel::D };
            let c = clifford_closure(&pin_weyl_lift(t, rank)?.gens, cap)?;
            Ok((c.order, c.words))
        }
        "spin-b" => {
            let c = clifford_closure(&spin_lift_b(rank)?.gens, cap)?;
            Ok((c.order, c.words))
        }
        "quat-c" => {
            let (c, _) = quat_weyl_closure(rank, cap)?;
            Ok((c.order, c.words))
        }
        _ => unreachable!("names are checked against the catalog"),
    }
}

fn closure(set: &str, cap: usize, expect: Option<usize>, words: bool, as_json: bool, out: &Option<PathBuf>) -> Result<bool, Failure> {
    let (name, rank) = parse_set(set)?;
    let (order, ws) = closure_of(name, rank, cap)?;
    let ok = expect.is_none_or(|e| e == order);
    let text = if as_json {
        let mut doc = json!({ "set": set, "order": order, "expect": expect, "matches": ok });
        if words {
            doc["words"] = Value::from(ws);
        }
        serde_json::to_string_pretty(&doc).expect("JSON values serialize")
    } else {
        let mut s = format!("{set}: order {order}");
        if let Some(e) = expect {
            s.push_str(&format!(" (expected {e}: {})", if ok { "match" } else { "MISMATCH" }));
        }
        if words {
            for w in &ws {
                let w: Vec<String> = w.iter().map(|g| (g + 1).to_string()).collect();
                s.push_str(&format!("\n  [{}]", w.join(" ")));
            }
        }
        s
    };
    emit(&text, out)?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Rootdata { type_label, rank, out } => rootdata(type_label, rank, &out),
        Command::Verify {
            suite,
            type_label,
            rank,
            json,
            out,
        } => verify(suite, type_label, rank, json, &out),
        Command::Closure {
            set,
            cap,
            expect,
            words,
            json,
            out,
        } => closure(&set, cap, expect, words, json, &out),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
