use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use owa_cli::eval::write_atomic;
use owa_cli::table::csv_header;
use owa_cli::{evaluate, run_bench, run_sweep, CliError, Method, Status, SweepConfig};

/// OWA weight vectors for a desired orness.
///
/// Exit codes: 0 ok, 2 usage, 3 method-domain failure, 4 I/O.
#[derive(Debug, Parser)]
#[command(name = "owa", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Plain,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate one weight vector per selected method.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        orness: f64,
        /// linear, exp, exp-nopreset, maxent or all
        #[arg(long, default_value = "linear")]
        method: String,
        #[arg(long, default_value_t = owa_weights::DEFAULT_BETA)]
        beta: f64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Evaluate methods over an evenly spaced orness grid and emit CSV.
    Sweep {
        #[arg(long)]
        n: usize,
        /// Comma-separated methods, or all
        #[arg(long, default_value = "all", value_delimiter = ',')]
        method: Vec<String>,
        /// Shape exponents for the linear method
        #[arg(long, default_values_t = [1.0, 1.25, 1.5], value_delimiter = ',')]
        beta: Vec<f64>,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long, default_value_t = 0.0)]
        min_orness: f64,
        #[arg(long, default_value_t = 1.0)]
        max_orness: f64,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Time every method over a 101-point orness grid.
    Bench {
        #[arg(long, default_values_t = [10, 100], value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long, default_value_t = 20)]
        reps: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

fn parse_methods(specs: &[String]) -> Result<Vec<Method>, CliError> {
    let mut out = Vec::new();
    for s in specs {
        if s == "all" {
            out.extend(Method::ALL);
        } else {
            out.push(s.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types always serialize")
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let io_err = |e| CliError::io("cannot write to stdout", e);
    match cli.command {
        Command::Gen {
            n,
            orness,
            method,
            beta,
            format,
        } => {
            let methods = parse_methods(&[method])?;
            let rows = methods
                .iter()
                .map(|&m| evaluate(m, n, orness, beta))
                .collect::<Result<Vec<_>, _>>()?;
            let text = match format {
                Format::Json if rows.len() == 1 => json(&rows[0]),
                Format::Json => json(&rows),
                Format::Csv => {
                    let mut s = csv_header(n);
                    for r in &rows {
                        s.push('\n');
                        s.push_str(&r.to_csv_line(n));
                    }
                    s
                }
                Format::Plain => rows
                    .iter()
                    .map(|r| {
                        let weights: Vec<String> = r.w.iter().map(|w| format!("{w:.8}")).collect();
                        let mut s = format!("method:     {}\n", r.method);
                        if let Some(b) = r.beta {
                            s.push_str(&format!("beta:       {b}\n"));
                        }
                        s.push_str(&format!("status:     {}\n", r.status.name()));
                        if let (Some(o), Some(d)) = (r.achieved_orness, r.dispersion) {
                            s.push_str(&format!("weights:    [{}]\n", weights.join(", ")));
                            s.push_str(&format!("orness:     {o:.10}\n"));
                            s.push_str(&format!("dispersion: {d:.10}\n"));
                        }
                        s
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            writeln!(out, "{}", text.trim_end()).map_err(io_err)?;

            let failures: Vec<String> = rows
                .iter()
                .filter(|r| matches!(r.status, Status::Unstable | Status::Unsupported))
                .map(|r| format!("{}: {}", r.method, r.message.as_deref().unwrap_or("failed")))
                .collect();
            if !failures.is_empty() {
                return Err(CliError::MethodDomain(failures.join("\n")));
            }
            Ok(())
        }
        Command::Sweep {
            n,
            method,
            beta,
            steps,
            min_orness,
            max_orness,
            out: path,
            format,
        } => {
            let config = SweepConfig {
                n,
                methods: parse_methods(&method)?,
                betas: beta,
                steps,
                min_orness,
                max_orness,
            };
            let table = run_sweep(&config)?;
            let text = match format {
                Format::Json => json(&table.rows) + "\n",
                Format::Csv | Format::Plain => table.to_csv(&config.provenance()),
            };
            match path {
                Some(p) => write_atomic(&p, &text),
                None => out.write_all(text.as_bytes()).map_err(io_err),
            }
        }
        Command::Bench { n, reps, format } => {
            let report = run_bench(&n, reps)?;
            let text = match format {
                Format::Plain => report.to_plain(),
                Format::Csv => report.to_csv(),
                Format::Json => json(&report.rows) + "\n",
            };
            out.write_all(text.as_bytes()).map_err(io_err)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
