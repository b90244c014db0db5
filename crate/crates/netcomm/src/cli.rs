//! Command-line surface: `test`, `model`, `simulate`, `phase`.
//!
//! Every run resolves a seed (flag, then the NETCOMM_SEED environment
//! variable, then a fixed constant) and embeds it, together with the
//! crate version, in the output, so identical invocations are
//! byte-identical. Exit codes: 0 success, 1 usage error, 2 degenerate
//! or infeasible input, 3 internal failure.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::experiments::compare::{
    Chi2VsSgnqConfig, MatchMode, NullCheckConfig, NullThetaMode, ScanVsSgnqConfig, chi2_vs_sgnq,
    null_calibration, scan_vs_sgnq,
};
use crate::experiments::{ExperimentError, phase};
use crate::graph::{Graph, GraphError, IdMode};
use crate::model::{ModelError, ModelSpecFile, ThetaProfile, TwoBlockSpec, spectral};
use crate::stats::chi2::{Sidedness, chi2_test};
use crate::stats::est::est_test;
use crate::stats::scan::{DEFAULT_CSTAR, DEFAULT_SCAN_BUDGET, scan_test};
use crate::stats::sgnq::sgnq_test;
use crate::stats::{StatsError, TestOutcome};

pub const DEFAULT_SEED: u64 = 1729;
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "netcomm",
    version,
    about = "Global community tests for networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for all randomized work (NETCOMM_SEED is used when absent).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker-thread cap; results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a test statistic on an edge-list file.
    Test(TestArgs),
    /// Describe a two-block model (b, alpha, spectra, balance).
    Model(ModelArgs),
    /// Monte-Carlo power tables and calibration sweeps.
    Simulate(SimulateArgs),
    /// Classify a (beta, gamma) grid into phase regions.
    Phase(PhaseArgs),
}

#[derive(Args, Debug)]
struct TestArgs {
    /// Which statistic to run.
    #[arg(value_enum)]
    which: WhichTest,
    /// Edge-list file: two tokens per line, '#' comments, optional
    /// leading "n=<count>".
    path: PathBuf,
    /// Test level kappa.
    #[arg(long, default_value_t = 0.05)]
    level: f64,
    /// chi2 only: reject on both tails at level/2.
    #[arg(long)]
    two_sided: bool,
    /// scan only: subset size to scan.
    #[arg(long)]
    n_small: Option<usize>,
    /// scan only: constant in the Bennett threshold.
    #[arg(long, default_value_t = DEFAULT_CSTAR)]
    cstar: f64,
    /// scan only: cap on enumerated subsets.
    #[arg(long, default_value_t = DEFAULT_SCAN_BUDGET)]
    budget: u128,
    /// est only: subset size v.
    #[arg(long)]
    v: Option<usize>,
    /// est only: edge threshold e.
    #[arg(long)]
    e: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WhichTest {
    Sgnq,
    Chi2,
    Scan,
    Est,
}

#[derive(Args, Debug)]
struct ModelArgs {
    #[command(subcommand)]
    action: ModelAction,
}

#[derive(Subcommand, Debug)]
enum ModelAction {
    /// Print b, alpha, lambda1, tilde lambda, and balance vectors.
    Describe(DescribeArgs),
}

#[derive(Args, Debug)]
struct DescribeArgs {
    /// JSON model spec {"n":..,"N":..,"a":..,"c":..,"theta":..,"seed":..}.
    #[arg(long, conflicts_with_all = ["n", "n_small", "a", "c"])]
    spec: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "N")]
    n_small: Option<usize>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    /// "ones" or "pareto".
    #[arg(long, default_value = "ones")]
    theta: String,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[command(subcommand)]
    which: SimulateCommand,
}

#[derive(Subcommand, Debug)]
enum SimulateCommand {
    /// Fig.-2-style power comparison of chi2 and SgnQ.
    Chi2VsSgnq(Chi2Args),
    /// Fig.-3-style oracle-scan vs SgnQ with calibrated threshold.
    ScanVsSgnq(ScanArgs),
    /// Null-distribution check of standardized SgnQ.
    NullCheck(NullCheckArgs),
}

#[derive(Args, Debug)]
struct Chi2Args {
    #[arg(long)]
    n: usize,
    #[arg(long = "N")]
    n_small: usize,
    #[arg(long)]
    c: f64,
    #[arg(long, value_enum)]
    mode: CliMatchMode,
    #[arg(long, default_value_t = 50)]
    reps: usize,
    #[arg(long, default_value_t = 0.05)]
    level: f64,
    #[arg(long, default_value_t = 20)]
    grid: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CliMatchMode {
    Matched,
    Unmatched,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long)]
    n: usize,
    #[arg(long = "N")]
    n_small: usize,
    #[arg(long)]
    alpha: f64,
    #[arg(long, default_value_t = 75)]
    m_cal: usize,
    #[arg(long, default_value_t = 200)]
    m_pow: usize,
    #[arg(long, default_value_t = 0.05)]
    level: f64,
    #[arg(long, default_value_t = 20)]
    grid: usize,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u128,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug)]
struct NullCheckArgs {
    #[arg(long)]
    n: usize,
    /// "ones" (with --alpha) or "pareto".
    #[arg(long, default_value = "ones")]
    theta: String,
    #[arg(long, default_value_t = 0.1)]
    alpha: f64,
    #[arg(long, default_value_t = 200)]
    reps: usize,
}

#[derive(Args, Debug)]
struct PhaseArgs {
    #[arg(long, default_value_t = 0.005)]
    beta_min: f64,
    #[arg(long, default_value_t = 0.995)]
    beta_max: f64,
    #[arg(long, default_value_t = -0.6)]
    gamma_min: f64,
    #[arg(long, default_value_t = 0.6)]
    gamma_max: f64,
    /// Grid points per axis.
    #[arg(long, default_value_t = 100)]
    grid: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Failure modes mapped to exit codes and machine-readable codes.
#[derive(Debug)]
enum CliError {
    Degenerate(String, String),
    Internal(String, String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Degenerate(..) => EXIT_DEGENERATE,
            CliError::Internal(..) => EXIT_INTERNAL,
        }
    }

    fn render(&self) -> String {
        let (code, message) = match self {
            CliError::Degenerate(c, m) | CliError::Internal(c, m) => (c, m),
        };
        format!(
            "{{\"error\":{{\"code\":\"{code}\",\"message\":{}}}}}",
            json_string(message)
        )
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization cannot fail")
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Io(io) => CliError::Internal("io".into(), io.to_string()),
            other => CliError::Degenerate("bad_edge_list".into(), other.to_string()),
        }
    }
}

impl From<StatsError> for CliError {
    fn from(e: StatsError) -> Self {
        let code = match &e {
            StatsError::DegenerateInput(_) => "degenerate_input",
            StatsError::BudgetExceeded { .. } => "budget_exceeded",
            StatsError::NoFeasiblePair { .. } => "no_feasible_pair",
            StatsError::BadParameter(_) => "bad_parameter",
            StatsError::Normal(_) => "bad_parameter",
        };
        CliError::Degenerate(code.into(), e.to_string())
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        match &e {
            ModelError::SinkhornDiverged { .. } => {
                CliError::Internal("sinkhorn_diverged".into(), e.to_string())
            }
            ModelError::Graph(_) => CliError::Internal("internal".into(), e.to_string()),
            _ => CliError::Degenerate(model_code(&e).into(), e.to_string()),
        }
    }
}

fn model_code(e: &ModelError) -> &'static str {
    match e {
        ModelError::InfeasibleAlternative { .. } => "infeasible_alternative",
        ModelError::ProbabilityOutOfRange { .. } => "probability_out_of_range",
        ModelError::DenseCapExceeded { .. } => "dense_cap_exceeded",
        _ => "bad_parameter",
    }
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        match e {
            ExperimentError::Model(m) => m.into(),
            ExperimentError::Stats(s) => s.into(),
            ExperimentError::TooManyDegenerate { .. } => {
                CliError::Degenerate("degenerate_majority".into(), e.to_string())
            }
            ExperimentError::BadConfig(_) => {
                CliError::Degenerate("bad_parameter".into(), e.to_string())
            }
        }
    }
}

/// Entry point used by the binary; parses real argv and process env.
pub fn main_entry() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let env_seed = std::env::var("NETCOMM_SEED")
        .ok()
        .and_then(|s| s.parse::<u64>().ok());
    let mut stdout = std::io::stdout();
    run(&args, env_seed, &mut stdout, &mut std::io::stderr())
}

/// Testable core: parses `args` (including argv(0)) and writes the
/// report to `out`. Returns the exit code.
pub fn run(
    args: &[String],
    env_seed: Option<u64>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own help/version on stdout with code 0.
            if e.use_stderr() {
                let _ = writeln!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    if let Some(t) = cli.threads {
        // Ignore failure: the global pool may already exist in-process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    let seed = cli.seed.or(env_seed).unwrap_or(DEFAULT_SEED);

    let rendered = match dispatch(&cli.command, seed) {
        Ok(text) => text,
        Err(e) => {
            let _ = writeln!(err, "{}", e.render());
            return e.code();
        }
    };
    let result = match &cli.out {
        Some(path) => std::fs::write(path, rendered.as_bytes()).map_err(|e| {
            CliError::Internal("io".into(), format!("writing {}: {e}", path.display()))
        }),
        None => out
            .write_all(rendered.as_bytes())
            .map_err(|e| CliError::Internal("io".into(), e.to_string())),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "{}", e.render());
            e.code()
        }
    }
}

fn dispatch(command: &Command, seed: u64) -> Result<String, CliError> {
    match command {
        Command::Test(args) => run_test(args, seed),
        Command::Model(args) => match &args.action {
            ModelAction::Describe(d) => run_describe(d, seed),
        },
        Command::Simulate(args) => run_simulate(args, seed),
        Command::Phase(args) => Ok(run_phase(args, seed)),
    }
}

fn envelope(
    seed: u64,
    command: &str,
    config: serde_json::Value,
    payload_key: &str,
    payload: serde_json::Value,
) -> String {
    let mut doc = serde_json::Map::new();
    doc.insert("version".into(), serde_json::json!(VERSION));
    doc.insert("seed".into(), serde_json::json!(seed));
    doc.insert("command".into(), serde_json::json!(command));
    doc.insert("config".into(), config);
    doc.insert(payload_key.into(), payload);
    let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(doc))
        .expect("serialization cannot fail");
    text.push('\n');
    text
}

fn run_test(args: &TestArgs, seed: u64) -> Result<String, CliError> {
    let g = Graph::from_edge_list_path(&args.path, IdMode::Auto)?;
    let base_config = |extra: serde_json::Value| {
        let mut cfg = serde_json::json!({
            "path": args.path.display().to_string(),
            "level": args.level,
            "nodes": g.node_count(),
            "edges": g.edge_count(),
        });
        if let (Some(map), Some(more)) = (cfg.as_object_mut(), extra.as_object()) {
            for (k, v) in more {
                map.insert(k.clone(), v.clone());
            }
        }
        // Token-to-id mapping for non-integer node labels.
        if let (Some(map), Some(labels)) = (cfg.as_object_mut(), g.labels()) {
            map.insert("labels".into(), serde_json::json!(labels));
        }
        cfg
    };
    let outcome: TestOutcome = match args.which {
        WhichTest::Sgnq => sgnq_test(&g, args.level)?,
        WhichTest::Chi2 => {
            let side = if args.two_sided {
                Sidedness::TwoSided
            } else {
                Sidedness::OneSided
            };
            chi2_test(&g, args.level, side)?
        }
        WhichTest::Scan => {
            let n_small = args.n_small.ok_or_else(|| {
                CliError::Degenerate(
                    "bad_parameter".into(),
                    "scan requires --n-small <subset size>".into(),
                )
            })?;
            let (outcome, subset) = scan_test(&g, n_small, args.cstar, args.budget, args.level)?;
            let config = base_config(serde_json::json!({
                "n_small": n_small,
                "cstar": args.cstar,
                "budget": args.budget.to_string(),
            }));
            // The maximizing subset rides next to the outcome so the
            // TestOutcome shape itself stays fixed.
            let mut text = envelope(
                seed,
                "test scan",
                config,
                "outcome",
                serde_json::to_value(&outcome).expect("serializable"),
            );
            let doc: serde_json::Value = serde_json::from_str(&text).expect("own output parses");
            let mut map = doc.as_object().cloned().expect("object");
            map.insert("maximizer".into(), serde_json::json!(subset));
            text = serde_json::to_string_pretty(&serde_json::Value::Object(map))
                .expect("serialization cannot fail");
            text.push('\n');
            return Ok(text);
        }
        WhichTest::Est => {
            let (v, e) = match (args.v, args.e) {
                (Some(v), Some(e)) => (v, e),
                _ => {
                    return Err(CliError::Degenerate(
                        "bad_parameter".into(),
                        "est requires --v and --e".into(),
                    ));
                }
            };
            est_test(&g, v, e, args.level)?
        }
    };
    let (label, config) = match args.which {
        WhichTest::Sgnq => ("test sgnq", base_config(serde_json::json!({}))),
        WhichTest::Chi2 => (
            "test chi2",
            base_config(serde_json::json!({"two_sided": args.two_sided})),
        ),
        WhichTest::Scan => unreachable!(),
        WhichTest::Est => (
            "test est",
            base_config(serde_json::json!({"v": args.v, "e": args.e})),
        ),
    };
    Ok(envelope(
        seed,
        label,
        config,
        "outcome",
        serde_json::to_value(&outcome).expect("serializable"),
    ))
}

fn run_describe(args: &DescribeArgs, seed: u64) -> Result<String, CliError> {
    let (spec, seed) = match &args.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Internal("io".into(), e.to_string()))?;
            let file = ModelSpecFile::parse(&text)?;
            let file_seed = file.seed;
            (
                file.to_spec()?,
                if file_seed != 0 { file_seed } else { seed },
            )
        }
        None => {
            let (n, n_small, a, c) = match (args.n, args.n_small, args.a, args.c) {
                (Some(n), Some(nn), Some(a), Some(c)) => (n, nn, a, c),
                _ => {
                    return Err(CliError::Degenerate(
                        "bad_parameter".into(),
                        "describe needs --spec or all of --n --N --a --c".into(),
                    ));
                }
            };
            let profile = parse_theta(&args.theta)?;
            (
                TwoBlockSpec::new(n, n_small, a, c)?.with_theta(profile),
                seed,
            )
        }
    };
    let summary = spectral::describe(&spec, seed)?;
    let config = serde_json::json!({
        "n": spec.n,
        "N": spec.n_small,
        "a": spec.a,
        "c": spec.c,
        "theta": format!("{:?}", spec.theta_profile),
    });
    Ok(envelope(
        seed,
        "model describe",
        config,
        "model",
        serde_json::to_value(&summary).expect("serializable"),
    ))
}

fn parse_theta(name: &str) -> Result<ThetaProfile, CliError> {
    match name {
        "ones" => Ok(ThetaProfile::Ones),
        "pareto" => Ok(ThetaProfile::pareto_default()),
        other => Err(CliError::Degenerate(
            "bad_parameter".into(),
            format!("unknown theta profile {other:?}"),
        )),
    }
}

fn run_simulate(args: &SimulateArgs, seed: u64) -> Result<String, CliError> {
    match &args.which {
        SimulateCommand::Chi2VsSgnq(a) => {
            let mut cfg = Chi2VsSgnqConfig::new(
                a.n,
                a.n_small,
                a.c,
                match a.mode {
                    CliMatchMode::Matched => MatchMode::Matched,
                    CliMatchMode::Unmatched => MatchMode::Unmatched,
                },
            );
            cfg.reps = a.reps;
            cfg.level = a.level;
            cfg.grid_points = a.grid;
            cfg.seed = seed;
            let table = chi2_vs_sgnq(&cfg)?;
            render_table(seed, "simulate chi2-vs-sgnq", &cfg, &table, a.format)
        }
        SimulateCommand::ScanVsSgnq(a) => {
            let mut cfg = ScanVsSgnqConfig::new(a.n, a.n_small, a.alpha);
            cfg.m_cal = a.m_cal;
            cfg.m_pow = a.m_pow;
            cfg.level = a.level;
            cfg.grid_points = a.grid;
            cfg.seed = seed;
            cfg.scan_budget = a.budget;
            let table = scan_vs_sgnq(&cfg)?;
            render_table(seed, "simulate scan-vs-sgnq", &cfg, &table, a.format)
        }
        SimulateCommand::NullCheck(a) => {
            let mode = match a.theta.as_str() {
                "ones" => NullThetaMode::Constant { alpha: a.alpha },
                "pareto" => NullThetaMode::Pareto,
                other => {
                    return Err(CliError::Degenerate(
                        "bad_parameter".into(),
                        format!("unknown theta profile {other:?}"),
                    ));
                }
            };
            let cfg = NullCheckConfig {
                mode,
                n: a.n,
                reps: a.reps,
                seed,
            };
            let s = null_calibration(&cfg)?;
            let payload = serde_json::json!({
                "mean": s.mean,
                "variance": s.variance,
                "ks_distance": s.ks_distance,
                "valid": s.valid,
                "degenerate": s.degenerate,
            });
            Ok(envelope(
                seed,
                "simulate null-check",
                serde_json::to_value(&cfg).expect("config serializes"),
                "summary",
                payload,
            ))
        }
    }
}

fn render_table<C: serde::Serialize>(
    seed: u64,
    command: &str,
    cfg: &C,
    table: &crate::experiments::PowerTable,
    format: Format,
) -> Result<String, CliError> {
    let cfg_json = serde_json::to_string(cfg).expect("config serializes");
    match format {
        Format::Csv => {
            let meta = vec![
                ("version".to_string(), VERSION.to_string()),
                ("command".to_string(), command.to_string()),
                ("seed".to_string(), seed.to_string()),
                ("config".to_string(), cfg_json),
            ];
            Ok(table.to_csv(&meta))
        }
        Format::Json => {
            let config = serde_json::from_str::<serde_json::Value>(&cfg_json).unwrap();
            Ok(envelope(
                seed,
                command,
                config,
                "table",
                serde_json::to_value(table).expect("serializable"),
            ))
        }
    }
}

fn run_phase(args: &PhaseArgs, seed: u64) -> String {
    let steps = args.grid.max(2);
    let grid = phase::classify_grid(
        (args.beta_min, args.beta_max),
        (args.gamma_min, args.gamma_max),
        steps,
    );
    let config = serde_json::json!({
        "beta_min": args.beta_min,
        "beta_max": args.beta_max,
        "gamma_min": args.gamma_min,
        "gamma_max": args.gamma_max,
        "grid": steps,
    });
    match args.format {
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&format!("# version={VERSION}\n"));
            out.push_str("# command=phase\n");
            out.push_str(&format!("# seed={seed}\n"));
            out.push_str(&format!("# config={config}\n"));
            out.push_str("beta,gamma,region\n");
            for (p, label) in grid {
                out.push_str(&format!("{},{},{}\n", p.beta, p.gamma, label.as_str()));
            }
            out
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = grid
                .iter()
                .map(|(p, label)| {
                    serde_json::json!({
                        "beta": p.beta,
                        "gamma": p.gamma,
                        "region": label.as_str(),
                    })
                })
                .collect();
            envelope(seed, "phase", config, "rows", serde_json::json!(rows))
        }
    }
}
