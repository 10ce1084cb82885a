//! Command-line interface: exact q-Bernoulli numbers, Hankel determinants,
//! continued-fraction coefficients, and batch identity verification.
//!
//! Exit codes: 0 success (or EQUAL), 1 verification mismatch, 2 usage error,
//! 3 computation error (such as evaluating at a pole).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde_json::json;

use qbernoulli::bernoulli::beta_numbers;
use qbernoulli::contfrac::{
    closed_c, closed_c_z, closed_sfraction, closed_sfraction_z, moment_ogf, moment_ogf_z,
    sfraction_series, SeriesId,
};
use qbernoulli::hankel::{closed_form_shift, hankel_det};
use qbernoulli::ratfunc::{eval_at_q, fieldq_to_json, fieldqz_to_json, Rat};
use qbernoulli::verify::{run_all, Profile};

#[derive(Parser)]
#[command(
    name = "qbernoulli",
    version,
    about = "Exact computations with Carlitz q-Bernoulli numbers",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesArg {
    #[value(name = "B")]
    B,
    #[value(name = "B1")]
    B1,
    #[value(name = "B2")]
    B2,
    #[value(name = "Bz")]
    Bz,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-Bernoulli numbers beta_0 .. beta_n as reduced fractions
    Beta {
        /// Largest index to print
        #[arg(long)]
        n: usize,
        /// Also evaluate every number at this rational value of q (like 1 or -1/2)
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        at_q: Option<Rat>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Hankel determinant of the beta sequence with a shift
    Hankel {
        /// Row/column shift of the moment indices
        #[arg(long, default_value_t = 0)]
        shift: usize,
        /// Matrix size
        #[arg(long)]
        n: usize,
        /// Compare against the closed form (available for shifts 0..=3)
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Closed-form S-fraction coefficients of a moment generating series
    Cfrac {
        /// Which series: B, B1, B2 (shifted), or Bz (z-parameterized)
        #[arg(long, value_enum)]
        series: SeriesArg,
        /// How many coefficients c_1 .. c_order to print
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Expand the S-fraction and compare with the moment series
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the identity verification suite
    Verify {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if d == BigInt::from(0) {
        return Err("denominator must be nonzero".into());
    }
    Ok(Rat::new(n, d))
}

fn cmd_beta(n: usize, at_q: Option<Rat>, format: Format) -> ExitCode {
    let betas = beta_numbers(n);
    let values = match &at_q {
        None => None,
        Some(v) => {
            let mut out = Vec::with_capacity(betas.len());
            for (k, beta) in betas.iter().enumerate() {
                match eval_at_q(beta, v) {
                    Ok(value) => out.push(value),
                    Err(_) => {
                        eprintln!("error: beta_{k} has a pole at q = {v}");
                        return ExitCode::from(3);
                    }
                }
            }
            Some(out)
        }
    };
    match format {
        Format::Text => {
            for (k, beta) in betas.iter().enumerate() {
                println!("beta_{k} = {beta}");
            }
            if let (Some(values), Some(v)) = (&values, &at_q) {
                let rendered: Vec<String> = values.iter().map(|r| r.to_string()).collect();
                println!("at q = {v}: {}", rendered.join(", "));
            }
        }
        Format::Json => {
            let mut doc = json!({
                "beta": betas.iter().map(fieldq_to_json).collect::<Vec<_>>(),
            });
            if let (Some(values), Some(v)) = (&values, &at_q) {
                doc["at_q"] = json!({
                    "q": v.to_string(),
                    "values": values.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                });
            }
            println!("{doc}");
        }
    }
    ExitCode::SUCCESS
}

fn cmd_hankel(shift: usize, n: usize, verify: bool, format: Format) -> ExitCode {
    let needed = if n == 0 { 0 } else { 2 * n - 1 + shift };
    let betas = beta_numbers(needed.max(1) - 1);
    let value = hankel_det(&betas, n, shift);
    let closed = if verify && shift <= 3 { Some(closed_form_shift(shift, n)) } else { None };
    let equal = closed.as_ref().map(|c| *c == value);
    match format {
        Format::Text => {
            println!("det(shift={shift}, n={n}) = {value}");
            match (&closed, equal) {
                (Some(c), Some(eq)) => {
                    println!("closed form = {c}");
                    println!("{}", if eq { "EQUAL" } else { "DIFFER" });
                }
                _ if verify => println!("UNVERIFIED (no closed form for shift > 3)"),
                _ => {}
            }
        }
        Format::Json => {
            let mut doc = json!({
                "shift": shift,
                "n": n,
                "det": fieldq_to_json(&value),
            });
            if let (Some(c), Some(eq)) = (&closed, equal) {
                doc["verify"] = json!({
                    "closed_form": fieldq_to_json(c),
                    "equal": eq,
                });
            } else if verify {
                doc["verify"] = json!(null);
            }
            println!("{doc}");
        }
    }
    if equal == Some(false) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_cfrac(series: SeriesArg, order: usize, check: bool, format: Format) -> ExitCode {
    // expansion check compares the stored coefficients x^0 .. x^{order-1}
    let check_result = if !check || order == 0 {
        None
    } else {
        Some(match series {
            SeriesArg::B => {
                sfraction_series(&closed_sfraction(SeriesId::B, order + 1), order)
                    == moment_ogf(SeriesId::B, order)
            }
            SeriesArg::B1 => {
                sfraction_series(&closed_sfraction(SeriesId::B1, order + 1), order)
                    == moment_ogf(SeriesId::B1, order)
            }
            SeriesArg::B2 => {
                sfraction_series(&closed_sfraction(SeriesId::B2, order + 1), order)
                    == moment_ogf(SeriesId::B2, order)
            }
            SeriesArg::Bz => {
                sfraction_series(&closed_sfraction_z(order + 1), order) == moment_ogf_z(order)
            }
        })
    };
    match format {
        Format::Text => {
            for k in 1..=order {
                match series {
                    SeriesArg::B => println!("c_{k} = {}", closed_c(SeriesId::B, k)),
                    SeriesArg::B1 => println!("c_{k} = {}", closed_c(SeriesId::B1, k)),
                    SeriesArg::B2 => println!("c_{k} = {}", closed_c(SeriesId::B2, k)),
                    SeriesArg::Bz => println!("c_{k} = {}", closed_c_z(k)),
                }
            }
            match check_result {
                Some(true) => println!("check: OK (series matches moments to order {order})"),
                Some(false) => println!("check: MISMATCH"),
                None => {}
            }
        }
        Format::Json => {
            let coeffs: Vec<serde_json::Value> = (1..=order)
                .map(|k| match series {
                    SeriesArg::B => fieldq_to_json(&closed_c(SeriesId::B, k)),
                    SeriesArg::B1 => fieldq_to_json(&closed_c(SeriesId::B1, k)),
                    SeriesArg::B2 => fieldq_to_json(&closed_c(SeriesId::B2, k)),
                    SeriesArg::Bz => fieldqz_to_json(&closed_c_z(k)),
                })
                .collect();
            let name = match series {
                SeriesArg::B => "B",
                SeriesArg::B1 => "B1",
                SeriesArg::B2 => "B2",
                SeriesArg::Bz => "Bz",
            };
            let mut doc = json!({ "series": name, "c": coeffs });
            if let Some(ok) = check_result {
                doc["check"] = json!({ "order": order, "ok": ok });
            }
            println!("{doc}");
        }
    }
    if check_result == Some(false) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_verify(profile: ProfileArg, format: Format) -> ExitCode {
    let (profile, label) = match profile {
        ProfileArg::Quick => (Profile::Quick, "quick"),
        ProfileArg::Full => (Profile::Full, "full"),
    };
    let results = run_all(profile);
    let ok = results.iter().all(|r| r.pass);
    match format {
        Format::Text => {
            println!("profile: {label}");
            for (i, r) in results.iter().enumerate() {
                println!("{} {:2}. {}", if r.pass { "PASS" } else { "FAIL" }, i + 1, r.name);
            }
            println!(
                "{} of {} checks passed",
                results.iter().filter(|r| r.pass).count(),
                results.len()
            );
        }
        Format::Json => {
            let doc = json!({
                "profile": label,
                "results": results
                    .iter()
                    .map(|r| json!({ "name": r.name, "pass": r.pass }))
                    .collect::<Vec<_>>(),
                "ok": ok,
            });
            println!("{doc}");
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Beta { n, at_q, format } => cmd_beta(n, at_q, format),
        Command::Hankel { shift, n, verify, format } => cmd_hankel(shift, n, verify, format),
        Command::Cfrac { series, order, check, format } => cmd_cfrac(series, order, check, format),
        Command::Verify { profile, format } => cmd_verify(profile, format),
    }
}
