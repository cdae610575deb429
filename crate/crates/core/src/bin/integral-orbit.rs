use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use integral_orbit::arith::{OddPrimeSupport, DEFAULT_FACTOR_LIMIT};
use integral_orbit::bounds::{default_threshold, denominator_lower_bound, BoundVariant, DEFAULT_SCAN_LIMIT};
use integral_orbit::certify::{certify_with, reproduce_table, table_tsv, verify_suite, CertifyOptions};
use integral_orbit::exact::{parse_rational, Rational};
use integral_orbit::series::{cauchy_residual, coefficients_to_a, egf, exp_of_square, reflected_product};
use integral_orbit::Error;

#[derive(Parser)]
#[command(name = "integral-orbit", version, about = "Integrality certificates for x0 = 1, x(n+1) = c + n/x(n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, x_n, a_n, d_n, D_n.
    Table {
        #[arg(long)]
        c: u64,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Decide which x_n are integers and print the certificate.
    Certify {
        #[arg(long)]
        c: u64,
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long, value_parser = parse_threshold)]
        threshold: Option<Rational>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_SCAN_LIMIT)]
        scan_limit: usize,
        #[arg(long, default_value_t = DEFAULT_FACTOR_LIMIT)]
        factor_limit: u64,
    },
    /// Print generating-function coefficients and optionally check the ODE.
    Series {
        #[arg(long)]
        c: u64,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        check: bool,
    },
    /// Evaluate the denominator lower bound over a range of n.
    Bounds {
        #[arg(long)]
        c: u64,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// auto, E, E2, E3 or E4.
        #[arg(long, default_value = "auto", value_parser = parse_variant)]
        variant: VariantChoice,
        #[arg(long, value_parser = parse_threshold)]
        threshold: Option<Rational>,
    },
    /// Run every invariant over a range of c.
    Verify {
        #[arg(long)]
        c_from: u64,
        #[arg(long)]
        c_to: u64,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
}

fn parse_threshold(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy)]
struct VariantChoice(Option<BoundVariant>);

fn parse_variant(s: &str) -> Result<VariantChoice, String> {
    if s.eq_ignore_ascii_case("auto") {
        Ok(VariantChoice(None))
    } else {
        s.parse().map(|v| VariantChoice(Some(v))).map_err(|e: Error| e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Precondition(_) | Error::NonPositiveC | Error::Parse(_) | Error::UndefinedIndex { .. } => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(command: Command) -> integral_orbit::Result<bool> {
    match command {
        Command::Table { c, n_max, format } => {
            let rows = reproduce_table(c, n_max)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize")),
                _ => print!("{}", table_tsv(&rows)),
            }
            Ok(true)
        }
        Command::Certify { c, horizon, threshold, format, scan_limit, factor_limit } => {
            let opts = CertifyOptions { horizon, threshold, scan_limit, factor_limit, ..CertifyOptions::default() };
            let report = certify_with(c, &opts)?;
            let consistent = report
                .evidence
                .iter()
                .filter(|e| e.n >= 2 && (e.n as u64) < report.crossover)
                .all(|e| e.is_integer != e.justifies_non_integer());
            match format {
                Format::Json => println!("{}", report.to_json()),
                _ => {
                    println!("c = {}", report.c);
                    println!("crossover = {} ({}, threshold {})", report.crossover, report.threshold_variant, report.threshold);
                    println!("bound at crossover ~ {}", report.certificate.bound_at_index.decimal_hint);
                    println!("checked n <= {}", report.horizon_checked);
                    println!("integral indices = {:?}", report.integral_indices);
                    for d in &report.discrepancies {
                        println!("discrepancy [{}]: claimed {}; computed {}", d.claim_ref, d.claimed, d.computed);
                    }
                }
            }
            Ok(consistent)
        }
        Command::Series { c, order, check } => {
            let f = egf(c, order);
            let a = coefficients_to_a(&f)?;
            for (k, (coef, ak)) in f.coeffs().iter().zip(&a).enumerate() {
                println!("{k}\t{coef}\t{ak}");
            }
            if !check {
                return Ok(true);
            }
            let residual_ok = order < 2 || cauchy_residual(&f, c)?.is_zero();
            let product_ok = reflected_product(&f) == exp_of_square(order);
            println!("cauchy residual zero: {residual_ok}");
            println!("F(x)F(-x) = exp(x^2): {product_ok}");
            Ok(residual_ok && product_ok)
        }
        Command::Bounds { c, from, to, variant, threshold } => {
            let support = OddPrimeSupport::of(c)?;
            let threshold = threshold.unwrap_or_else(|| default_threshold(c));
            println!("n\tvariant\tbound\t>=threshold\tvalue");
            for n in from.max(2)..=to {
                let row = denominator_lower_bound(n, &support, variant.0, &threshold)?;
                println!("{}\t{}\t{}\t{}\t{}", row.n, row.variant, row.decimal_hint, row.verdict_ge_threshold, row.value);
            }
            Ok(true)
        }
        Command::Verify { c_from, c_to, n_max, json } => {
            if c_from == 0 || c_from > c_to {
                return Err(Error::Precondition(format!("need 1 <= c_from <= c_to, got {c_from}..{c_to}")));
            }
            let summary = verify_suite(c_from, c_to, n_max)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&summary).expect("summary serializes"));
            } else {
                print!("{}", summary.render());
            }
            Ok(summary.all_pass)
        }
    }
}
