//! `appell`: exact Appell polynomial tables, evaluation, inverse
//! coefficients, and identity verification from the command line.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain
//! error, 4 singular transfer matrix.

use std::path::PathBuf;
use std::process;

use appell_core::appell::{
    classical_chebyshev1, classical_chebyshev2, classical_hermite, classical_laguerre,
    classical_legendre, AppellVector,
};
use appell_core::families::{gamma_coefficients, FamilySpec, TransferMatrix};
use appell_core::rat::Rat;
use appell_core::verify::{self, Outcome, VerifyConfig};
use appell_core::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use appell_cli::output::{OutputDocument, KIND_CLASSICAL_VALUES, KIND_GAMMA, KIND_VALUES};

#[derive(Parser)]
#[command(
    name = "appell",
    about = "Exact-arithmetic Appell polynomial families: coefficient tables, evaluation, \
             inverse coefficients, and an identity verification suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the transfer matrix; row n holds the coefficients of p_n
    Table {
        /// Family name, e.g. bernoulli, euler, hermite-monic
        family: String,
        /// Degree bound m (matrix order m+1)
        m: usize,
        #[command(flatten)]
        params: FamilyParams,
        #[command(flatten)]
        output: OutputParams,
    },
    /// Evaluate p_0(x)..p_m(x) at a rational point
    Eval {
        family: String,
        m: usize,
        /// Evaluation point as p/q (e.g. 1/2, -3)
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// Reconstruct the unmodified classical values (hermite-monic,
        /// laguerre-modified, legendre-modified, chebyshev1/2-modified;
        /// Legendre/Chebyshev need |x| < 1)
        #[arg(long)]
        classical: bool,
        #[command(flatten)]
        params: FamilyParams,
        #[command(flatten)]
        output: OutputParams,
    },
    /// Print the inverse coefficient sequence gamma_0..gamma_m
    Gamma {
        family: String,
        m: usize,
        #[command(flatten)]
        params: FamilyParams,
        #[command(flatten)]
        output: OutputParams,
    },
    /// Run the exact-identity verification suite
    Verify {
        /// Largest degree bound to check
        #[arg(long = "m-max", default_value_t = 16)]
        m_max: usize,
        /// Seed for the random rational stream
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated family names; default is every family
        #[arg(long)]
        families: Option<String>,
    },
}

#[derive(Args)]
struct FamilyParams {
    /// Laguerre parameter (laguerre-modified only), as p/q
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Inverse-coefficient constant (generalized-euler only), as p/q
    #[arg(long = "gamma-bar", allow_hyphen_values = true)]
    gamma_bar: Option<String>,
}

#[derive(Args)]
struct OutputParams {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the document to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn main() {
    let cli = Cli::parse();
    let code = match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    };
    process::exit(code);
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::OutOfDomain { .. } => 3,
        Error::NotInvertible { .. } | Error::SingularMatrix { .. } => 4,
        _ => 2,
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Table {
            family,
            m,
            params,
            output,
        } => {
            let spec = resolve_family(&family, &params)?;
            let tm = TransferMatrix::new(&spec, m);
            emit(&OutputDocument::matrix(&spec, m, tm.matrix()), &output)?;
            Ok(0)
        }
        Command::Eval {
            family,
            m,
            x,
            classical,
            params,
            output,
        } => {
            let spec = resolve_family(&family, &params)?;
            let x = parse_rat(&x, "x")?;
            let (kind, values) = if classical {
                (KIND_CLASSICAL_VALUES, classical_values(&spec, m, &x)?)
            } else {
                (KIND_VALUES, AppellVector::new(&spec, m).evaluate(&x))
            };
            emit(&OutputDocument::vector(&spec, m, kind, &values), &output)?;
            Ok(0)
        }
        Command::Gamma {
            family,
            m,
            params,
            output,
        } => {
            let spec = resolve_family(&family, &params)?;
            let gamma = gamma_coefficients(&spec, m)?;
            emit(
                &OutputDocument::vector(&spec, m, KIND_GAMMA, &gamma),
                &output,
            )?;
            Ok(0)
        }
        Command::Verify {
            m_max,
            seed,
            families,
        } => cmd_verify(m_max, seed, families),
    }
}

fn parse_rat(s: &str, what: &str) -> Result<Rat> {
    s.parse().map_err(|e| Error::BadParameter {
        message: format!("{what}: {e}"),
    })
}

fn resolve_family(name: &str, params: &FamilyParams) -> Result<FamilySpec> {
    let alpha = params
        .alpha
        .as_deref()
        .map(|s| parse_rat(s, "--alpha"))
        .transpose()?;
    let gamma_bar = params
        .gamma_bar
        .as_deref()
        .map(|s| parse_rat(s, "--gamma-bar"))
        .transpose()?;
    FamilySpec::from_name(name, alpha, gamma_bar)
}

fn classical_values(spec: &FamilySpec, m: usize, x: &Rat) -> Result<appell_core::RatVector> {
    match spec {
        FamilySpec::HermiteMonic => Ok(classical_hermite(m, x)),
        FamilySpec::LaguerreModified { alpha } => Ok(classical_laguerre(m, alpha, x)),
        FamilySpec::LegendreModified => classical_legendre(m, x),
        FamilySpec::ChebyshevFirstModified => classical_chebyshev1(m, x),
        FamilySpec::ChebyshevSecondModified => classical_chebyshev2(m, x),
        other => Err(Error::BadParameter {
            message: format!("--classical does not apply to {}", other.name()),
        }),
    }
}

fn emit(doc: &OutputDocument, output: &OutputParams) -> Result<()> {
    let rendered = match output.format {
        Format::Json => doc.to_json(),
        Format::Csv => doc.to_csv(),
    };
    match &output.out {
        Some(path) => std::fs::write(path, rendered).map_err(|e| Error::BadParameter {
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn cmd_verify(m_max: usize, seed: u64, families: Option<String>) -> Result<i32> {
    let mut config = VerifyConfig::new(m_max, seed);
    let label = match families {
        None => format!("all({})", config.families.len()),
        Some(list) => {
            let requested: Vec<String> = list
                .split(',')
                .map(|s| s.trim().to_owned())
                .filter(|s| !s.is_empty())
                .collect();
            if requested.is_empty() {
                return Err(Error::BadParameter {
                    message: "--families needs at least one name".into(),
                });
            }
            let known: Vec<&str> = config.families.iter().map(FamilySpec::name).collect();
            for name in &requested {
                if !known.contains(&name.as_str()) {
                    return Err(Error::UnknownFamily { name: name.clone() });
                }
            }
            config
                .families
                .retain(|f| requested.iter().any(|n| n == f.name()));
            requested.join(",")
        }
    };

    println!("exact-identity verification: m-max={m_max}, seed={seed}, families={label}");
    let report = verify::run(&config);
    for check in &report.checks {
        match &check.outcome {
            Outcome::Pass => println!("PASS {}: {}", check.name, check.detail),
            Outcome::Skipped(why) => println!("N/A  {}: {} ({why})", check.name, check.detail),
            Outcome::Fail(msg) => println!("FAIL {}: {} ({msg})", check.name, check.detail),
        }
    }
    let (passed, failed, skipped) = report.counts();
    println!(
        "summary: {} checks, {passed} passed, {failed} failed, {skipped} skipped",
        report.checks.len()
    );
    Ok(if report.all_passed() { 0 } else { 1 })
}
