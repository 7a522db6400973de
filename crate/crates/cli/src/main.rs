//! Command-line workbench: constructions, bounds, boundary curves, random
//! searches, and exhaustive oracles, with reproducible machine-readable
//! output.
//!
//! Every invocation prints one JSON record `{command, params, payload,
//! exit_code}` to stdout (the `curve` command defaults to bare CSV instead).
//! Exit codes: 0 success, 1 bad usage or violated precondition, 2 exceeded
//! enumeration budget. Seeded commands are bit-identical across runs.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wspectra::bounds::{bound_reports, domain_boundary, weight_count_lower, weight_count_upper};
use wspectra::code::{LinearCode, DEFAULT_ENUMERATION_BUDGET};
use wspectra::constructions::{
    ambient_code, binary_full_spectrum, doubling_step, iterated_doubling_with_spectrum,
    two_dim_full, two_dim_full_with,
};
use wspectra::nonlinear::{
    max_distances, saturating_length_upper, sidon_chain_with, singer_code,
    singer_difference_set, SidonStrategy,
};
use wspectra::search::{
    max_distances_at_length, max_weights_at_length, random_linear_search,
    smallest_distance_saturating_length, smallest_saturating_length, DEFAULT_SUBSPACE_BUDGET,
    DEFAULT_TUPLE_BUDGET,
};
use wspectra::Error;

const BUDGET_ENV: &str = "WSPECTRA_BUDGET";

#[derive(Parser)]
#[command(
    name = "wspectra",
    version,
    about = "Distinct weight and distance spectra of codes: build, bound, search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the named code families and report its spectrum.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Evaluate every bound family at (k, q), optionally length-aware.
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Sample the boundary of the admissible (R, L) region.
    Curve {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        points: usize,
        #[arg(long, value_enum, default_value_t = CurveFormat::Csv)]
        format: CurveFormat,
    },
    /// Randomized experiments.
    Search {
        #[command(subcommand)]
        what: SearchCmd,
    },
    /// Exhaustive ground-truth oracles (budgeted).
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Binary [2^k - 1, k] code realizing every weight in 1..2^k - 1.
    #[command(name = "binary-full")]
    BinaryFull {
        #[arg(long)]
        k: usize,
    },
    /// Two-dimensional code over GF(q) with q + 1 distinct weights.
    #[command(name = "two-dim")]
    TwoDim {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
    },
    /// One doubling step applied to a code read from a JSON file ('-' for stdin).
    Doubling {
        #[arg(long)]
        input: String,
        #[arg(long)]
        t: Option<u64>,
    },
    /// k - 2 doubling steps applied to the two-dimensional code.
    Iterated {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
    },
    /// The ambient code F_q^k.
    Ambient {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
    },
    /// Step code over a Sidon weight sequence with all C(M,2) distances.
    Sidon {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long, value_enum, default_value_t = SidonChoice::Greedy)]
        strategy: SidonChoice,
    },
    /// Difference-set code: s + 1 words, length s^2 + s + 1, C(s+1, 2) distances.
    Singer {
        #[arg(long)]
        s: u64,
        #[arg(long, default_value_t = 2)]
        q: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SidonChoice {
    Greedy,
    Doubling,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CurveFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Random generator matrices with i.i.d. uniform entries.
    Random {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Preset experiment grids at desk scale.
    Table {
        #[arg(long, value_enum)]
        preset: TablePreset,
        #[arg(long, value_enum, default_value_t = Scale::Desk)]
        scale: Scale,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TablePreset {
    /// Doubling-bound comparison grid.
    Table1,
    /// Saturation grid for small dimensions.
    Table2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scale {
    Desk,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Exact maximum number of distinct weights of an [n, k]_q code.
    #[command(name = "L")]
    MaxWeights(OracleLinearArgs),
    /// Exact maximum number of distinct distances of M words of length n.
    #[command(name = "N")]
    MaxDistances {
        #[arg(long)]
        n: u64,
        #[arg(long = "M")]
        m: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Smallest length reaching a target weight count at (k, q).
    #[command(name = "n0")]
    SmallestLength {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        target: u64,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Smallest length at which M words realize all C(M, 2) distances.
    #[command(name = "N0")]
    SmallestDistanceLength {
        #[arg(long = "M")]
        m: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct OracleLinearArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    budget: Option<u64>,
}

enum Output {
    Json(Value),
    Csv(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (command, params, result) = dispatch(cli.command);
    match result {
        Ok(Output::Csv(body)) => {
            write_stdout(&body);
            ExitCode::SUCCESS
        }
        Ok(Output::Json(payload)) => {
            emit(&command, &params, payload, 0);
            ExitCode::SUCCESS
        }
        Err(err) => {
            let code = exit_code_for(&err);
            emit(&command, &params, json!({ "error": err.to_string() }), code);
            ExitCode::from(code)
        }
    }
}

/// Downstream pipes may close early (e.g. `| head`); that is not an error.
fn write_stdout(body: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(body.as_bytes());
    let _ = out.flush();
}

fn emit(command: &str, params: &Value, payload: Value, exit_code: u8) {
    let record = json!({
        "command": command,
        "params": params,
        "payload": payload,
        "exit_code": exit_code,
    });
    let mut text = serde_json::to_string_pretty(&record).expect("serializable");
    text.push('\n');
    write_stdout(&text);
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::ResourceLimit { .. } => 2,
        _ => 1,
    }
}

fn budget_or(flag: Option<u64>, fallback: u64) -> u64 {
    flag.or_else(|| {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.parse::<u64>().ok())
    })
    .unwrap_or(fallback)
}

fn dispatch(command: Command) -> (String, Value, Result<Output, Error>) {
    match command {
        Command::Construct { what } => dispatch_construct(what),
        Command::Bounds { k, q, n } => {
            let params = json!({ "k": k, "q": q, "n": n });
            let result = bound_reports(k, q, n)
                .map(|reports| Output::Json(json!({ "reports": reports })));
            ("bounds".into(), params, result)
        }
        Command::Curve { q, points, format } => {
            let params = json!({ "q": q, "points": points });
            let result = domain_boundary(q, points).map(|curve| match format {
                CurveFormat::Csv => Output::Csv(curve.to_csv()),
                CurveFormat::Json => Output::Json(
                    serde_json::to_value(&curve).expect("curve serializes"),
                ),
            });
            ("curve".into(), params, result)
        }
        Command::Search { what } => dispatch_search(what),
        Command::Oracle { what } => dispatch_oracle(what),
    }
}

fn dispatch_construct(what: ConstructCmd) -> (String, Value, Result<Output, Error>) {
    match what {
        ConstructCmd::BinaryFull { k } => {
            let params = json!({ "k": k });
            let result = binary_full_spectrum(k).and_then(|code| {
                let spectrum = code.weight_spectrum()?;
                let upper = weight_count_upper(k, 2)?;
                Ok(Output::Json(json!({
                    "code": code,
                    "spectrum": spectrum,
                    "num_weights": spectrum.len(),
                    "upper_bound": upper.to_string(),
                    "meets_upper_bound": upper == spectrum.len().into(),
                })))
            });
            ("construct.binary-full".into(), params, result)
        }
        ConstructCmd::TwoDim { q, a, b } => {
            let params = json!({ "q": q, "a": a, "b": b });
            let result = (|| {
                let code = match (a, b) {
                    (None, None) => two_dim_full(q)?,
                    (a, b) => two_dim_full_with(q, a.unwrap_or(q), b.unwrap_or(q + 1))?,
                };
                let spectrum = code.weight_spectrum()?;
                Ok(Output::Json(json!({
                    "code": code,
                    "length": code.length(),
                    "spectrum": spectrum,
                    "num_weights": spectrum.len(),
                    "upper_bound": q + 1,
                    "meets_upper_bound": spectrum.len() as u64 == q + 1,
                })))
            })();
            ("construct.two-dim".into(), params, result)
        }
        ConstructCmd::Doubling { input, t } => {
            let params = json!({ "input": input, "t": t });
            let result = (|| {
                let code = read_code(&input)?;
                let before = code.weight_spectrum()?.len() as u64;
                let doubled = doubling_step(&code, t)?;
                let spectrum = doubled.weight_spectrum()?;
                Ok(Output::Json(json!({
                    "code": doubled,
                    "spectrum": spectrum,
                    "num_weights": spectrum.len(),
                    "expected_num_weights": 2 * before + 1,
                    "doubling_law_holds": spectrum.len() as u64 == 2 * before + 1,
                })))
            })();
            ("construct.doubling".into(), params, result)
        }
        ConstructCmd::Iterated { k, q } => {
            let params = json!({ "k": k, "q": q });
            let result = iterated_doubling_with_spectrum(k, q).and_then(|(code, spectrum)| {
                let lower = weight_count_lower(k, q)?;
                Ok(Output::Json(json!({
                    "code": code,
                    "spectrum": spectrum,
                    "num_weights": spectrum.len(),
                    "lower_bound": lower.to_string(),
                    "meets_lower_bound": spectrum.len() >= lower.to_string().parse().unwrap_or(usize::MAX),
                })))
            });
            ("construct.iterated".into(), params, result)
        }
        ConstructCmd::Ambient { k, q } => {
            let params = json!({ "k": k, "q": q });
            let result = ambient_code(k, q).and_then(|code| {
                let spectrum = code.weight_spectrum()?;
                Ok(Output::Json(json!({
                    "code": code,
                    "spectrum": spectrum,
                    "num_weights": spectrum.len(),
                    "lower_bound": k,
                    "meets_lower_bound": spectrum.len() == k,
                })))
            });
            ("construct.ambient".into(), params, result)
        }
        ConstructCmd::Sidon { m, q, strategy } => {
            let strategy_name = match strategy {
                SidonChoice::Greedy => "greedy",
                SidonChoice::Doubling => "doubling",
            };
            let params = json!({ "m": m, "q": q, "strategy": strategy_name });
            let result = (|| {
                let chain = sidon_chain_with(
                    m,
                    match strategy {
                        SidonChoice::Greedy => SidonStrategy::Greedy,
                        SidonChoice::Doubling => SidonStrategy::Doubling,
                    },
                )?;
                let code = chain.to_code(q)?;
                let distances = code.distance_spectrum();
                let target = max_distances(m as u64)?;
                Ok(Output::Json(json!({
                    "weights": chain,
                    "code": code,
                    "distances": distances,
                    "num_distances": distances.len(),
                    "max_distances": target,
                    "meets_max_distances": distances.len() as u64 == target,
                })))
            })();
            ("construct.sidon".into(), params, result)
        }
        ConstructCmd::Singer { s, q } => {
            let params = json!({ "s": s, "q": q });
            let result = (|| {
                let ds = singer_difference_set(s)?;
                let code = singer_code(s, q)?;
                let distances = code.distance_spectrum();
                let m = s + 1;
                let target = max_distances(m)?;
                Ok(Output::Json(json!({
                    "difference_set": ds,
                    "code": code,
                    "length": code.length(),
                    "length_bound": saturating_length_upper(m)?,
                    "distances": distances,
                    "num_distances": distances.len(),
                    "max_distances": target,
                    "meets_max_distances": distances.len() as u64 == target,
                })))
            })();
            ("construct.singer".into(), params, result)
        }
    }
}

fn dispatch_search(what: SearchCmd) -> (String, Value, Result<Output, Error>) {
    match what {
        SearchCmd::Random {
            n,
            k,
            q,
            trials,
            seed,
            budget,
        } => {
            let budget = budget_or(budget, DEFAULT_ENUMERATION_BUDGET);
            let params =
                json!({ "n": n, "k": k, "q": q, "trials": trials, "seed": seed, "budget": budget });
            let result = random_linear_search(n, k, q, trials, seed, budget).map(|report| {
                Output::Json(serde_json::to_value(&report).expect("report serializes"))
            });
            ("search.random".into(), params, result)
        }
        SearchCmd::Table {
            preset,
            scale: Scale::Desk,
            seed,
            format,
        } => {
            let (name, cells, n, trials): (&str, &[(usize, u64)], u64, u64) = match preset {
                TablePreset::Table1 => ("table1", &[(3, 3), (4, 5)], 2000, 50),
                TablePreset::Table2 => ("table2", &[(3, 3), (3, 4), (3, 5)], 5000, 100),
            };
            let params = json!({ "preset": name, "scale": "desk", "seed": seed });
            let result = (|| {
                let mut rows = Vec::new();
                for &(k, q) in cells {
                    let report =
                        random_linear_search(n, k, q, trials, seed, DEFAULT_ENUMERATION_BUDGET)?;
                    let upper = weight_count_upper(k, q)?;
                    let lower = weight_count_lower(k, q)?;
                    rows.push(json!({
                        "k": k,
                        "q": q,
                        "n": n,
                        "trials": trials,
                        "best_count": report.best_count,
                        "upper_bound": upper.to_string(),
                        "saturated": upper == report.best_count.into(),
                        "lower_bound": lower.to_string(),
                        "meets_lower_bound": lower <= report.best_count.into(),
                    }));
                }
                if format == TableFormat::Csv {
                    let mut body = String::from(
                        "k,q,n,trials,best_count,upper_bound,saturated,lower_bound,meets_lower_bound\n",
                    );
                    for r in &rows {
                        body.push_str(&format!(
                            "{},{},{},{},{},{},{},{},{}\n",
                            r["k"],
                            r["q"],
                            r["n"],
                            r["trials"],
                            r["best_count"],
                            r["upper_bound"].as_str().unwrap_or(""),
                            r["saturated"],
                            r["lower_bound"].as_str().unwrap_or(""),
                            r["meets_lower_bound"],
                        ));
                    }
                    return Ok(Output::Csv(body));
                }
                Ok(Output::Json(json!({ "rows": rows })))
            })();
            ("search.table".into(), params, result)
        }
    }
}

fn dispatch_oracle(what: OracleCmd) -> (String, Value, Result<Output, Error>) {
    match what {
        OracleCmd::MaxWeights(OracleLinearArgs { n, k, q, budget }) => {
            let budget = budget_or(budget, DEFAULT_SUBSPACE_BUDGET);
            let params = json!({ "n": n, "k": k, "q": q, "budget": budget });
            let result = max_weights_at_length(n, k, q, budget)
                .map(|value| Output::Json(json!({ "value": value })));
            ("oracle.L".into(), params, result)
        }
        OracleCmd::MaxDistances { n, m, q, budget } => {
            let budget = budget_or(budget, DEFAULT_TUPLE_BUDGET);
            let params = json!({ "n": n, "M": m, "q": q, "budget": budget });
            let result = max_distances_at_length(n, m, q, budget)
                .map(|value| Output::Json(json!({ "value": value })));
            ("oracle.N".into(), params, result)
        }
        OracleCmd::SmallestLength {
            k,
            q,
            target,
            budget,
        } => {
            let budget = budget_or(budget, DEFAULT_SUBSPACE_BUDGET);
            let params = json!({ "k": k, "q": q, "target": target, "budget": budget });
            let result = smallest_saturating_length(k, q, target, budget)
                .map(|value| Output::Json(json!({ "value": value })));
            ("oracle.n0".into(), params, result)
        }
        OracleCmd::SmallestDistanceLength { m, q, budget } => {
            let budget = budget_or(budget, DEFAULT_TUPLE_BUDGET);
            let params = json!({ "M": m, "q": q, "budget": budget });
            let result = smallest_distance_saturating_length(m, q, budget)
                .map(|value| Output::Json(json!({ "value": value })));
            ("oracle.N0".into(), params, result)
        }
    }
}

fn read_code(path: &str) -> Result<LinearCode, Error> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::PreconditionViolated(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::PreconditionViolated(format!("cannot read {path}: {e}")))?
    };
    serde_json::from_str(&text)
        .map_err(|e| Error::PreconditionViolated(format!("malformed code record: {e}")))
}
