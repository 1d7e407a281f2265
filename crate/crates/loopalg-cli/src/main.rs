//! Command line front end: affine matrices, verification suites, and
//! fixed-point bases for the sixteen affine families.
//!
//! Exit codes: 0 all selected checks pass, 1 a check failed, 2 bad
//! configuration, 3 resource cap.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use loopalg::{
    affine_label, all_instances, basis_report, gcm_report, verify_instance, CheckConfig, Error,
    FiniteType, Report,
};

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "loopalg",
    version,
    about = "Exact-arithmetic verification of twisted loop algebra realizations"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the affine generalized Cartan matrix read off the generators
    Gcm(GcmArgs),
    /// Run named verification checks and report pass/fail
    Verify(VerifyArgs),
    /// List the fixed-point basis grouped by loop degree
    Basis(BasisArgs),
}

#[derive(Args)]
struct GcmArgs {
    /// Finite type, e.g. A2, D4, E6
    #[arg(long = "type")]
    type_name: String,
    /// Twist order (1, 2, or 3)
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Finite type, e.g. A2, D4, E6
    #[arg(long = "type")]
    type_name: Option<String>,
    /// Twist order (1, 2, or 3)
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Verify the minimal representative of every affine family
    #[arg(long, conflicts_with = "type_name")]
    all: bool,
    /// Loop-degree window: degrees k with |k| <= window * r
    #[arg(short = 'd', long = "window", default_value_t = 1)]
    window: i64,
    /// Seed for the randomized parts of the checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated check names (default: all applicable)
    #[arg(long)]
    check: Option<String>,
    /// Enable group-level checks on E types (large matrices)
    #[arg(long)]
    group_checks: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BasisArgs {
    /// Finite type, e.g. A2, D4, E6
    #[arg(long = "type")]
    type_name: String,
    /// Twist order (1, 2, or 3)
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Loop-degree window: degrees k with |k| <= window * r
    #[arg(short = 'd', long = "window", default_value_t = 1)]
    window: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceCap(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Gcm(a) => cmd_gcm(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Basis(a) => cmd_basis(a),
    }
}

/// Attach the list of valid families to type errors so a typo is
/// self-correcting.
fn with_family_hint(e: Error) -> Error {
    match &e {
        Error::InvalidType(msg) | Error::UnsupportedAffineType(msg) => {
            let labels: Vec<String> = all_instances()
                .iter()
                .map(|&(t, r)| affine_label(t, r))
                .collect();
            Error::UnsupportedAffineType(format!(
                "{msg}; valid families at minimal rank: {} \
                 (higher ranks of the same shape are accepted)",
                labels.join(", ")
            ))
        }
        _ => e,
    }
}

fn parse_type(name: &str) -> Result<FiniteType, Error> {
    FiniteType::parse(name).map_err(with_family_hint)
}

fn emit_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn cmd_gcm(a: GcmArgs) -> Result<ExitCode, Error> {
    let ftype = parse_type(&a.type_name)?;
    let rep = gcm_report(ftype, a.r).map_err(with_family_hint)?;
    match a.format {
        Format::Json => emit_json(&rep),
        Format::Text => print!("{}", rep.render_text()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode, Error> {
    let only = a.check.as_ref().map(|s| {
        s.split(',')
            .map(|x| x.trim().to_string())
            .filter(|x| !x.is_empty())
            .collect::<Vec<_>>()
    });
    let cfg = CheckConfig {
        window: a.window,
        seed: a.seed,
        group_checks: a.group_checks,
        only,
        ..CheckConfig::default()
    };
    let reports: Vec<Report> = if a.all {
        let mut out = Vec::new();
        for (t, r) in all_instances() {
            out.push(verify_instance(t, r, &cfg)?);
        }
        out
    } else {
        let name = a
            .type_name
            .as_deref()
            .ok_or_else(|| Error::SetupMismatch("pass --type <NAME> or --all".to_string()))?;
        vec![verify_instance(parse_type(name)?, a.r, &cfg).map_err(with_family_hint)?]
    };
    let ok = reports.iter().all(|r| r.all_pass());
    match a.format {
        Format::Json => {
            if a.all {
                emit_json(&reports);
            } else {
                emit_json(&reports[0]);
            }
        }
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                print!("{}", r.render_text());
            }
        }
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_basis(a: BasisArgs) -> Result<ExitCode, Error> {
    let ftype = parse_type(&a.type_name)?;
    let rep = basis_report(ftype, a.r, a.window).map_err(with_family_hint)?;
    match a.format {
        Format::Json => emit_json(&rep),
        Format::Text => print!("{}", rep.render_text()),
    }
    Ok(ExitCode::SUCCESS)
}
