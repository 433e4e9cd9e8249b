mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kcharge::partition::parse_parts;
use kcharge::{Formulation, KTableau, Partition};

/// k-tableaux, their charge statistics and verification sweeps.
#[derive(Parser, Debug)]
#[command(name = "kcharge", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FormulationArg {
    Lp,
    Morse,
}

impl From<FormulationArg> for Formulation {
    fn from(f: FormulationArg) -> Self {
        match f {
            FormulationArg::Lp => Formulation::Lp,
            FormulationArg::Morse => Formulation::Morse,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Fast,
    Oracle,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List all k-tableaux of a weight in canonical order.
    Enumerate {
        #[arg(long)]
        k: usize,
        /// Comma-separated weight, e.g. 3,2,1.
        #[arg(long, value_parser = parse_list)]
        weight: List,
        /// Only tableaux of this shape.
        #[arg(long, value_parser = parse_partition)]
        shape: Option<Partition>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Fast)]
        strategy: StrategyArg,
    },
    /// Charge and cocharge of one tableau, with the per-sequence tables.
    Stat {
        /// Tableau file, or "-" for stdin.
        file: String,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        input: InputFormat,
    },
    /// Charge generating polynomials grouped by shape.
    Table {
        #[arg(long, required_unless_present = "classical")]
        k: Option<usize>,
        #[arg(long, value_parser = parse_partition)]
        weight: Partition,
        #[arg(long, value_parser = parse_partition)]
        shape: Option<Partition>,
        /// Kostka-Foulkes polynomials from classical charge instead.
        #[arg(long)]
        classical: bool,
        #[arg(long, value_enum, default_value_t = FormulationArg::Morse)]
        formulation: FormulationArg,
    },
    /// Check every identity over all k-tableaux within the bounds.
    Verify {
        #[arg(long)]
        max_k: usize,
        #[arg(long)]
        max_weight: usize,
        #[arg(long, default_value_t = 1)]
        min_k: usize,
        /// Also compare fast enumeration against the brute-force enumerator.
        #[arg(long)]
        oracle: bool,
    },
    /// Classical charge and cocharge of a semistandard tableau.
    Classical {
        /// File with rows top first, or "-" for stdin.
        file: String,
    },
}

/// Comma-separated integers from the command line.
#[derive(Clone, Debug)]
struct List(Vec<usize>);

fn parse_list(s: &str) -> Result<List, String> {
    parse_parts(s).map(List).map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

/// A failure carrying the process exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

fn read_input(file: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if file == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
    } else {
        text =
            fs::read_to_string(file).map_err(|e| Failure::usage(format!("reading {file}: {e}")))?;
    }
    Ok(text)
}

fn load_tableau(text: &str, input: InputFormat) -> Result<KTableau, Failure> {
    let json = match input {
        InputFormat::Auto => text.trim_start().starts_with('{'),
        InputFormat::Text => false,
        InputFormat::Json => true,
    };
    let parsed = if json {
        KTableau::parse_json(text)
    } else {
        KTableau::parse_text(text)
    };
    let t = parsed.map_err(|e| match e {
        kcharge::Error::Parse(_) => Failure::usage(e.to_string()),
        other => Failure::invalid(other.to_string()),
    })?;
    t.validate()
        .map_err(|v| Failure::invalid(format!("invalid k-tableau: {v}")))?;
    Ok(t)
}

/// Rows of a classical tableau, top row first; entries may carry `_residue`
/// suffixes and a leading `k=` header is ignored.
fn load_classical(text: &str) -> Result<Vec<Vec<usize>>, Failure> {
    let mut rows = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if line.starts_with("k=") {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                let letter = tok.split_once('_').map_or(tok, |(a, _)| a);
                letter
                    .parse::<usize>()
                    .map_err(|_| Failure::usage(format!("bad entry {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    rows.reverse();
    Ok(rows)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("KCHARGE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            Failure::usage(format!(
                "KCHARGE_THREADS must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::usage(e.to_string()))
}

/// Output text plus whether the run counts as a pass.
struct Rendered {
    body: String,
    passed: bool,
}

fn run(cli: &Cli) -> Result<Rendered, Failure> {
    let json = cli.format == Format::Json;
    let pass = |body: String| Ok(Rendered { body, passed: true });
    match &cli.command {
        Command::Enumerate {
            k,
            weight,
            shape,
            strategy,
        } => {
            let strategy = match strategy {
                StrategyArg::Fast => kcharge::Strategy::Fast,
                StrategyArg::Oracle => kcharge::Strategy::Oracle,
            };
            let ts = kcharge::enumerate_with(strategy, *k, &weight.0, shape.as_ref())
                .map_err(|e| Failure::usage(e.to_string()))?;
            pass(report::enumeration(
                *k,
                &weight.0,
                shape.as_ref(),
                &ts,
                json,
            ))
        }
        Command::Stat { file, input } => {
            let t = load_tableau(&read_input(file)?, *input)?;
            let stats = kcharge::TableauStatistics::compute(&t)
                .map_err(|e| Failure::invalid(e.to_string()))?;
            pass(report::statistics(&t, &stats, json))
        }
        Command::Table {
            k,
            weight,
            shape,
            classical,
            formulation,
        } => {
            let mut table = if *classical {
                kcharge::kostka_foulkes_table(weight)
            } else {
                let k = k.expect("required unless classical");
                kcharge::charge_table(k, weight, (*formulation).into()).map_err(|e| match e {
                    kcharge::Error::Parse(_) => Failure::invalid(e.to_string()),
                    other => Failure::usage(other.to_string()),
                })?
            };
            if let Some(s) = shape {
                let poly = table.remove(s).unwrap_or_default();
                table = [(s.clone(), poly)].into_iter().collect();
            }
            let k = if *classical { None } else { *k };
            pass(report::table(
                k,
                weight,
                (*formulation).into(),
                *classical,
                &table,
                json,
            ))
        }
        Command::Verify {
            max_k,
            max_weight,
            min_k,
            oracle,
        } => {
            if *max_k == 0 {
                return Err(Failure::usage("--max-k must be at least 1"));
            }
            let cfg = kcharge::SweepConfig {
                min_k: *min_k,
                max_k: *max_k,
                max_weight: *max_weight,
                oracle: *oracle,
            };
            let report = kcharge::sweep(&cfg).map_err(|e| Failure::usage(e.to_string()))?;
            Ok(Rendered {
                body: report::sweep(&report, json),
                passed: report.passed(),
            })
        }
        Command::Classical { file } => {
            let rows = load_classical(&read_input(file)?)?;
            let shape = kcharge::classical::check_semistandard(&rows)
                .map_err(|e| Failure::invalid(e.to_string()))?;
            let charge =
                kcharge::classical_charge(&rows).map_err(|e| Failure::invalid(e.to_string()))?;
            let cocharge =
                kcharge::classical_cocharge(&rows).map_err(|e| Failure::invalid(e.to_string()))?;
            let content = kcharge::classical::content(&rows);
            pass(report::classical(&shape, &content, charge, cocharge, json))
        }
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => fs::write(path, body)
            .map_err(|e| Failure::usage(format!("writing {}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::usage(format!("writing stdout: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = configure_threads()
        .and_then(|_| run(&cli))
        .and_then(|r| emit(&cli, &r.body).map(|_| r.passed));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
