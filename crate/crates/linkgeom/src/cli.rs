//! Command-line surface: construct configurations, run verifiers and
//! partition solvers, run seeded random-trial campaigns, and emit
//! machine-readable reports.
//!
//! Reports are JSON on stdout, human summaries on stderr (`--quiet`
//! suppresses stderr). Exit codes: 0 success/confirmed, 1 theorem
//! violation (a bug alarm — verifiers never report `Violated` on inputs
//! passing their own position checks), 2 invalid input, 3 search budget
//! exhausted. Identical command and seed produce byte-identical reports
//! except for the `wall_ms` field.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::constructions::{
    cylinder_grid, deleted_face_instance, hexagon_helix6, k4n_grid_r4, moment_curve_default,
    product_hypergraph, rational_helix, simplex_plus_interior, torus_k3n, ConstructionError,
    ProductGrid, DEFAULT_SEARCH_BUDGET, DEFAULT_SHRINK_BUDGET,
};
use crate::constructions::cone;
use crate::files::{
    configuration_to_json, hypergraph_to_json, parse_rat_str, read_hypergraph_file,
    read_point_file, scalar_to_json, PointFile, TypedConfig,
};
use crate::kernel::{is_general_position, perturb, random_configuration, Configuration};
use crate::partitions::{
    radon_partition, tverberg_search, PartitionCertificate, PartitionError,
    DEFAULT_PARTITION_BUDGET,
};
use crate::realizability::is_linear_realization;
use crate::rng::SplitMix64;
use crate::scalar::{ExactScalar, Quad, Rat};
use crate::verifiers::{
    verify_cgs, verify_deleted_face_linking, verify_intersection_linking, verify_intersection_r3,
    verify_join3, verify_k33_plane, verify_plane_intersection, verify_product,
    verify_red_blue_quad, verify_sachs, verify_unlinking_plane, verify_unlinking_r3,
    verify_unlinking_r4, verify_vkf, ParityReport, Verdict, VerifierError,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATED: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

/// Theorem ids accepted by `verify`.
pub const THEOREM_IDS: &[&str] = &[
    "plane",
    "k33-plane",
    "red-blue-quad",
    "unlinking-plane",
    "cgs",
    "intersection-r3",
    "unlinking-r3",
    "sachs",
    "vkf",
    "unlinking-r4",
    "join3",
    "intersection-linking",
    "product",
    "deleted-face",
];

/// Construction names accepted by `construct` and `--construct`.
pub const CONSTRUCTION_NAMES: &[&str] = &[
    "moment-curve",
    "hexagon-helix",
    "rational-helix",
    "simplex-plus-interior",
    "cone",
    "cylinder-grid",
    "torus-k3n",
    "torus-k3x4",
    "k4n-grid",
    "tverberg-counterexample",
    "product-hypergraph",
    "deleted-face-instance",
];

#[derive(Parser)]
#[command(
    name = "linkgeom",
    version,
    about = "Exact-arithmetic linking/intersection parity toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a theorem verifier on a file, a construction, or random trials.
    Verify(VerifyArgs),
    /// Build a named configuration and write it as a point/grid file.
    Construct(ConstructArgs),
    /// Produce a validated Radon partition of d+2 points in R^d.
    Radon(RadonArgs),
    /// Search for a Tverberg partition into r blocks with a common point.
    Tverberg(TverbergArgs),
    /// Structural checks on files.
    Check(CheckArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// Point file to read.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["construct", "random"])]
    input: Option<PathBuf>,
    /// Construction name from the registry.
    #[arg(long, value_name = "NAME", conflicts_with = "random")]
    construct: Option<String>,
    /// Draw seeded random rational configurations.
    #[arg(long)]
    random: bool,
}

#[derive(Args)]
struct CommonArgs {
    /// Number of trials (each trial gets its own derived seed).
    #[arg(long, default_value_t = 1)]
    trials: usize,
    /// Master seed for the deterministic generator.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Bit width of random rational coordinates (numerator bits; the
    /// denominator is 2^bits).
    #[arg(long, default_value_t = 16)]
    bits: u32,
    /// Also write the JSON report to this file.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Suppress the human-readable summary on stderr.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem id (plane, k33-plane, red-blue-quad, unlinking-plane, cgs,
    /// intersection-r3, unlinking-r3, sachs, vkf, unlinking-r4, join3,
    /// intersection-linking, product, deleted-face).
    theorem: String,
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    common: CommonArgs,
    /// Cap on n for intersection-linking.
    #[arg(long = "max-n", default_value_t = 8)]
    max_n: usize,
    /// Dimension n (intersection-linking) or grid columns (product).
    #[arg(short = 'n', long = "n")]
    n: Option<usize>,
    /// Grid rows (product).
    #[arg(short = 'm', long = "m")]
    m: Option<usize>,
    /// Ambient dimension for random grids.
    #[arg(short = 'd', long = "d")]
    d: Option<usize>,
    /// Deleted faces for deleted-face, e.g. "2" or "2,3".
    #[arg(long, default_value = "2")]
    deleted: String,
}

#[derive(Args)]
struct ConstructArgs {
    /// Construction name (moment-curve, hexagon-helix, rational-helix,
    /// simplex-plus-interior, cone, cylinder-grid, torus-k3n, torus-k3x4,
    /// k4n-grid, tverberg-counterexample, product-hypergraph,
    /// deleted-face-instance).
    name: String,
    /// Point count / grid columns / curve length, where applicable.
    #[arg(short = 'n', long = "n")]
    n: Option<usize>,
    /// Grid rows (product-hypergraph).
    #[arg(short = 'm', long = "m")]
    m: Option<usize>,
    /// Ambient dimension, where applicable.
    #[arg(short = 'd', long = "d")]
    d: Option<usize>,
    /// Block count (tverberg-counterexample).
    #[arg(short = 'r', long = "r")]
    r: Option<usize>,
    /// Apex coordinates for cone, comma-separated "p/q" entries.
    #[arg(long, value_name = "CSV")]
    apex: Option<String>,
    /// Base point file for cone.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Output path (stdout if omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Suppress the human-readable summary on stderr.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct RadonArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    common: CommonArgs,
    /// Dimension for random draws (points drawn: d + 2).
    #[arg(short = 'd', long = "d")]
    d: Option<usize>,
}

#[derive(Args)]
struct TverbergArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    common: CommonArgs,
    /// Number of blocks.
    #[arg(short = 'r', long = "r", default_value_t = 3)]
    r: usize,
    /// Point count for random draws.
    #[arg(short = 'n', long = "n")]
    n: Option<usize>,
    /// Dimension for random draws and for tverberg-counterexample.
    #[arg(short = 'd', long = "d")]
    d: Option<usize>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(subcommand)]
    what: CheckCommand,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Check whether a point file linearly realizes a hypergraph file
    /// (vertex i maps to point i).
    Embedding {
        /// Hypergraph file.
        #[arg(long, value_name = "PATH")]
        hypergraph: PathBuf,
        /// Point file.
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        /// Also write the JSON report to this file.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Suppress the human-readable summary on stderr.
        #[arg(long)]
        quiet: bool,
    },
}

#[derive(Debug)]
enum CliFailure {
    Invalid(String),
    Budget(String),
}

impl From<VerifierError> for CliFailure {
    fn from(e: VerifierError) -> Self {
        CliFailure::Invalid(e.to_string())
    }
}

impl From<crate::files::FileError> for CliFailure {
    fn from(e: crate::files::FileError) -> Self {
        CliFailure::Invalid(e.to_string())
    }
}

impl From<ConstructionError> for CliFailure {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::SearchExhausted(_) => CliFailure::Budget(e.to_string()),
            other => CliFailure::Invalid(other.to_string()),
        }
    }
}

impl From<PartitionError> for CliFailure {
    fn from(e: PartitionError) -> Self {
        match e {
            PartitionError::BudgetExceeded { .. } => CliFailure::Budget(e.to_string()),
            other => CliFailure::Invalid(other.to_string()),
        }
    }
}

fn invalid(msg: impl Into<String>) -> CliFailure {
    CliFailure::Invalid(msg.into())
}

/// Parses the command line and runs it; returns the process exit code.
pub fn run() -> u8 {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(CliFailure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INVALID
        }
        Err(CliFailure::Budget(msg)) => {
            eprintln!("budget exhausted: {msg}");
            EXIT_BUDGET
        }
    }
}

fn execute(command: Command) -> Result<u8, CliFailure> {
    match command {
        Command::Verify(args) => cmd_verify(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Radon(args) => cmd_radon(args),
        Command::Tverberg(args) => cmd_tverberg(args),
        Command::Check(args) => match args.what {
            CheckCommand::Embedding {
                hypergraph,
                input,
                out,
                quiet,
            } => cmd_check_embedding(&hypergraph, &input, out.as_deref(), quiet),
        },
    }
}

fn command_echo() -> String {
    std::env::args().collect::<Vec<_>>().join(" ")
}

/// The `LINKGEOM_BUDGET` environment variable, if set and well-formed.
fn env_budget() -> Result<Option<u64>, CliFailure> {
    match std::env::var("LINKGEOM_BUDGET") {
        Err(_) => Ok(None),
        Ok(s) => s
            .parse::<u64>()
            .map(Some)
            .map_err(|_| invalid(format!("LINKGEOM_BUDGET must be an integer, got {s:?}"))),
    }
}

fn write_report(
    report: &Value,
    out: Option<&Path>,
) -> Result<(), CliFailure> {
    let text = format!(
        "{}\n",
        serde_json::to_string_pretty(report).expect("reports are serializable")
    );
    print!("{text}");
    if let Some(path) = out {
        std::fs::write(path, &text).map_err(|e| invalid(format!("cannot write {path:?}: {e}")))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// verify

/// One verifier input: a plain configuration or a product grid, in either
/// coordinate field.
enum VerifyInput {
    Rational(Configuration<Rat>),
    Quad(Configuration<Quad>),
    GridR(ProductGrid<Rat>),
    GridQ(ProductGrid<Quad>),
}

struct VerifyOptions {
    max_n: usize,
    deleted: Vec<usize>,
}

fn run_verifier(
    theorem: &str,
    input: &VerifyInput,
    opts: &VerifyOptions,
) -> Result<ParityReport, CliFailure> {
    if theorem == "product" {
        return match input {
            VerifyInput::GridR(g) => Ok(verify_product(g)?),
            VerifyInput::GridQ(g) => Ok(verify_product(g)?),
            _ => Err(invalid(
                "the product verifier needs a grid: a point file with a \"shape\" entry, \
                 a grid construction, or --random with -m/-n/-d",
            )),
        };
    }
    match input {
        VerifyInput::Rational(cfg) => run_config_verifier(theorem, cfg, opts),
        VerifyInput::Quad(cfg) => run_config_verifier(theorem, cfg, opts),
        VerifyInput::GridR(g) => run_config_verifier(theorem, g.config(), opts),
        VerifyInput::GridQ(g) => run_config_verifier(theorem, g.config(), opts),
    }
}

fn run_config_verifier<S: ExactScalar>(
    theorem: &str,
    cfg: &Configuration<S>,
    opts: &VerifyOptions,
) -> Result<ParityReport, CliFailure> {
    let report = match theorem {
        "plane" => verify_plane_intersection(cfg)?,
        "k33-plane" => verify_k33_plane(cfg)?,
        "red-blue-quad" => verify_red_blue_quad(cfg)?,
        "unlinking-plane" => verify_unlinking_plane(cfg)?,
        "cgs" => verify_cgs(cfg)?,
        "intersection-r3" => verify_intersection_r3(cfg)?,
        "unlinking-r3" => verify_unlinking_r3(cfg)?,
        "sachs" => verify_sachs(cfg)?,
        "vkf" => verify_vkf(cfg)?,
        "unlinking-r4" => verify_unlinking_r4(cfg)?,
        "join3" => verify_join3(cfg)?,
        "intersection-linking" => verify_intersection_linking(cfg, opts.max_n)?,
        "deleted-face" => verify_deleted_face_linking(cfg, &opts.deleted)?,
        other => {
            return Err(invalid(format!(
                "unknown theorem {other:?}; expected one of {}",
                THEOREM_IDS.join(", ")
            )))
        }
    };
    Ok(report)
}

/// Point count and ambient dimension drawn for `--random` per theorem.
fn random_shape(theorem: &str, n_param: Option<usize>) -> Result<(usize, usize), CliFailure> {
    Ok(match theorem {
        "plane" | "unlinking-plane" => (5, 2),
        "k33-plane" | "red-blue-quad" => (6, 2),
        "cgs" | "intersection-r3" | "unlinking-r3" | "deleted-face" => (6, 3),
        "sachs" => (8, 3),
        "vkf" | "unlinking-r4" => (7, 4),
        "join3" => (9, 4),
        "intersection-linking" => {
            let n = n_param.unwrap_or(4);
            (n + 3, n)
        }
        other => {
            return Err(invalid(format!(
                "theorem {other:?} has no random shape; use --input or --construct"
            )))
        }
    })
}

/// Draws a random configuration and nudges it into general position.
fn random_trial_config(
    dimension: usize,
    count: usize,
    bits: u32,
    seed: u64,
) -> Result<Configuration<Rat>, CliFailure> {
    let cfg = random_configuration(dimension, count, bits, seed)
        .map_err(|e| invalid(e.to_string()))?;
    if is_general_position(&cfg).0 {
        return Ok(cfg);
    }
    // Rare at 16-bit coordinates; if even perturbation fails, let the
    // verifier report the degeneracy rather than abort the campaign.
    Ok(perturb(&cfg, seed ^ 0x9e37_79b9_7f4a_7c15, |c| is_general_position(c).0).unwrap_or(cfg))
}

fn parse_deleted(spec: &str) -> Result<Vec<usize>, CliFailure> {
    spec.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| invalid(format!("--deleted expects integers, got {spec:?}")))
        })
        .collect()
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliFailure> {
    let start = Instant::now();
    let theorem = args.theorem.as_str();
    if !THEOREM_IDS.contains(&theorem) {
        return Err(invalid(format!(
            "unknown theorem {theorem:?}; expected one of {}",
            THEOREM_IDS.join(", ")
        )));
    }
    let opts = VerifyOptions {
        max_n: args.max_n,
        deleted: parse_deleted(&args.deleted)?,
    };
    let trials = args.common.trials.max(1);
    let budget = env_budget()?;

    // Assemble one input per trial. File and construction inputs are fixed
    // across trials; random inputs draw a fresh seed per trial.
    let mut trial_seeds: Option<Vec<u64>> = None;
    let inputs: Vec<VerifyInput> = if let Some(path) = &args.source.input {
        let file = read_point_file(path)?;
        let input = verify_input_from_file(theorem, file, args.m, args.n)?;
        (0..trials).map(|_| clone_input(&input)).collect()
    } else if let Some(name) = &args.source.construct {
        let built = build_construction(
            name,
            &ConstructParams {
                n: args.n,
                m: args.m,
                d: args.d,
                r: None,
                apex: None,
                input: None,
                budget,
            },
        )?;
        let input = match built {
            Built::Config(TypedConfig::Rational(c)) => VerifyInput::Rational(c),
            Built::Config(TypedConfig::Quad(c)) => VerifyInput::Quad(c),
            Built::GridR(g) => VerifyInput::GridR(g),
            Built::GridQ(g) => VerifyInput::GridQ(g),
            Built::Hypergraph(_) => {
                return Err(invalid(
                    "product-hypergraph builds an abstract hypergraph, not a point input",
                ))
            }
        };
        (0..trials).map(|_| clone_input(&input)).collect()
    } else if args.source.random {
        let mut seeder = SplitMix64::new(args.common.seed);
        let seeds: Vec<u64> = (0..trials).map(|_| seeder.next_u64()).collect();
        let inputs = seeds
            .iter()
            .map(|&s| -> Result<VerifyInput, CliFailure> {
                if theorem == "product" {
                    let (m, n, d) = (
                        args.m.unwrap_or(5),
                        args.n.unwrap_or(3),
                        args.d.unwrap_or(3),
                    );
                    let cfg = random_trial_config(d, m * n, args.common.bits, s)?;
                    Ok(VerifyInput::GridR(
                        ProductGrid::new(m, n, cfg).map_err(CliFailure::from)?,
                    ))
                } else {
                    let (count, dim) = random_shape(theorem, args.n)?;
                    Ok(VerifyInput::Rational(random_trial_config(
                        dim,
                        count,
                        args.common.bits,
                        s,
                    )?))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        trial_seeds = Some(seeds);
        inputs
    } else {
        return Err(invalid(
            "choose an input source: --input PATH, --construct NAME, or --random",
        ));
    };

    // The worker pool preserves seed order, so reports are deterministic.
    let reports: Vec<ParityReport> = inputs
        .par_iter()
        .map(|input| run_verifier(theorem, input, &opts))
        .collect::<Result<Vec<_>, _>>()?;

    let mut confirmed = 0usize;
    let mut degenerate = 0usize;
    let mut violated = 0usize;
    for (i, report) in reports.iter().enumerate() {
        match report.verdict {
            Verdict::Confirmed => confirmed += 1,
            Verdict::Degenerate => degenerate += 1,
            Verdict::Violated => violated += 1,
        }
        if !args.common.quiet {
            let seed_note = trial_seeds
                .as_ref()
                .map(|s| format!(" seed {:#018x}", s[i]))
                .unwrap_or_default();
            eprintln!(
                "[{theorem}] trial {}/{}{}: {:?} (count {}, claim {:?})",
                i + 1,
                trials,
                seed_note,
                report.verdict,
                report.count,
                report.claim
            );
        }
    }

    let report = json!({
        "command": command_echo(),
        "theorem": theorem,
        "seed": args.common.seed,
        "bits": args.common.bits,
        "trial_seeds": trial_seeds,
        "trials": reports,
        "aggregate": {
            "trials": trials,
            "confirmed": confirmed,
            "degenerate": degenerate,
            "violated": violated,
        },
        "wall_ms": start.elapsed().as_millis() as u64,
    });
    write_report(&report, args.common.out.as_deref())?;
    if !args.common.quiet {
        eprintln!(
            "[{theorem}] confirmed {confirmed}, degenerate {degenerate}, violated {violated}"
        );
    }
    Ok(if violated > 0 { EXIT_VIOLATED } else { EXIT_OK })
}

fn clone_input(input: &VerifyInput) -> VerifyInput {
    match input {
        VerifyInput::Rational(c) => VerifyInput::Rational(c.clone()),
        VerifyInput::Quad(c) => VerifyInput::Quad(c.clone()),
        VerifyInput::GridR(g) => VerifyInput::GridR(g.clone()),
        VerifyInput::GridQ(g) => VerifyInput::GridQ(g.clone()),
    }
}

/// Wraps a parsed point file for a verifier, honoring a grid shape from
/// the file or from -m/-n flags when the product verifier needs one.
fn verify_input_from_file(
    theorem: &str,
    file: PointFile,
    m_flag: Option<usize>,
    n_flag: Option<usize>,
) -> Result<VerifyInput, CliFailure> {
    let shape = match (file.shape, m_flag, n_flag) {
        (Some(s), _, _) => Some(s),
        (None, Some(m), Some(n)) => Some((m, n)),
        _ => None,
    };
    if theorem == "product" {
        let Some((m, n)) = shape else {
            return Err(invalid(
                "the product verifier needs a grid shape: a \"shape\" entry in the file \
                 or explicit -m and -n flags",
            ));
        };
        return Ok(match file.config {
            TypedConfig::Rational(c) => {
                VerifyInput::GridR(ProductGrid::new(m, n, c).map_err(CliFailure::from)?)
            }
            TypedConfig::Quad(c) => {
                VerifyInput::GridQ(ProductGrid::new(m, n, c).map_err(CliFailure::from)?)
            }
        });
    }
    Ok(match file.config {
        TypedConfig::Rational(c) => VerifyInput::Rational(c),
        TypedConfig::Quad(c) => VerifyInput::Quad(c),
    })
}

// ---------------------------------------------------------------------------
// construct

struct ConstructParams {
    n: Option<usize>,
    m: Option<usize>,
    d: Option<usize>,
    r: Option<usize>,
    apex: Option<String>,
    input: Option<PathBuf>,
    budget: Option<u64>,
}

enum Built {
    Config(TypedConfig),
    GridR(ProductGrid<Rat>),
    GridQ(ProductGrid<Quad>),
    Hypergraph(crate::realizability::Hypergraph2),
}

fn build_construction(name: &str, p: &ConstructParams) -> Result<Built, CliFailure> {
    let budget_u32 = |fallback: u32| p.budget.map(|b| b.min(u32::MAX as u64) as u32).unwrap_or(fallback);
    Ok(match name {
        "moment-curve" => Built::Config(TypedConfig::Rational(moment_curve_default(
            p.n.unwrap_or(6),
            p.d.unwrap_or(3),
        )?)),
        "hexagon-helix" => Built::Config(TypedConfig::Rational(hexagon_helix6())),
        "rational-helix" => {
            Built::Config(TypedConfig::Rational(rational_helix(p.n.unwrap_or(6))?))
        }
        "simplex-plus-interior" => Built::Config(TypedConfig::Rational(simplex_plus_interior(
            p.d.unwrap_or(3),
        )?)),
        "cone" => {
            let Some(apex_spec) = &p.apex else {
                return Err(invalid(
                    "cone needs --apex with comma-separated \"p/q\" coordinates",
                ));
            };
            let Some(base_path) = &p.input else {
                return Err(invalid("cone needs --input with the base point file"));
            };
            let apex: Vec<Rat> = apex_spec
                .split(',')
                .map(|t| parse_rat_str(t.trim()).map_err(CliFailure::from))
                .collect::<Result<Vec<_>, _>>()?;
            let base = read_point_file(base_path)?;
            let TypedConfig::Rational(base) = base.config else {
                return Err(invalid(
                    "cone via the CLI supports rational bases only (apex coordinates are \"p/q\")",
                ));
            };
            Built::Config(TypedConfig::Rational(cone(apex, &base)?))
        }
        "cylinder-grid" => Built::GridR(cylinder_grid(
            p.n.unwrap_or(4),
            budget_u32(DEFAULT_SHRINK_BUDGET),
        )?),
        "torus-k3n" => Built::GridQ(torus_k3n(p.n.unwrap_or(4))?),
        "torus-k3x4" => Built::GridQ(torus_k3n(4)?),
        "k4n-grid" => Built::GridR(k4n_grid_r4(
            p.n.unwrap_or(4),
            budget_u32(DEFAULT_SEARCH_BUDGET),
        )?),
        "tverberg-counterexample" => {
            let budget = p.budget.map(|b| b as usize).unwrap_or(DEFAULT_PARTITION_BUDGET);
            Built::Config(TypedConfig::Rational(crate::partitions::tverberg_counterexample(
                p.d.unwrap_or(2),
                p.r.unwrap_or(3),
                budget,
            )?))
        }
        "product-hypergraph" => {
            Built::Hypergraph(product_hypergraph(p.m.unwrap_or(3), p.n.unwrap_or(4))?)
        }
        "deleted-face-instance" => Built::Config(TypedConfig::Rational(deleted_face_instance())),
        other => {
            return Err(invalid(format!(
                "unknown construction {other:?}; expected one of {}",
                CONSTRUCTION_NAMES.join(", ")
            )))
        }
    })
}

fn cmd_construct(args: ConstructArgs) -> Result<u8, CliFailure> {
    let budget = env_budget()?;
    let built = build_construction(
        &args.name,
        &ConstructParams {
            n: args.n,
            m: args.m,
            d: args.d,
            r: args.r,
            apex: args.apex.clone(),
            input: args.input.clone(),
            budget,
        },
    )?;
    let (doc, human) = match &built {
        Built::Config(TypedConfig::Rational(c)) => (
            configuration_to_json(c, None),
            format!("{} points in R^{} (rational)", c.len(), c.dimension()),
        ),
        Built::Config(TypedConfig::Quad(c)) => (
            configuration_to_json(c, None),
            format!("{} points in R^{} (quad_sqrt3)", c.len(), c.dimension()),
        ),
        Built::GridR(g) => (
            configuration_to_json(g.config(), Some(g.shape())),
            format!(
                "{}x{} grid in R^{} (rational)",
                g.rows(),
                g.columns(),
                g.config().dimension()
            ),
        ),
        Built::GridQ(g) => (
            configuration_to_json(g.config(), Some(g.shape())),
            format!(
                "{}x{} grid in R^{} (quad_sqrt3)",
                g.rows(),
                g.columns(),
                g.config().dimension()
            ),
        ),
        Built::Hypergraph(hg) => (
            hypergraph_to_json(hg),
            format!(
                "hypergraph on {} vertices with {} faces",
                hg.vertices(),
                hg.faces().len()
            ),
        ),
    };
    let text = format!(
        "{}\n",
        serde_json::to_string_pretty(&doc).expect("documents are serializable")
    );
    match &args.out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| invalid(format!("cannot write {path:?}: {e}")))?;
            if !args.quiet {
                eprintln!("[construct {}] wrote {human} to {}", args.name, path.display());
            }
        }
        None => {
            print!("{text}");
            if !args.quiet {
                eprintln!("[construct {}] {human}", args.name);
            }
        }
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// partitions

fn certificate_json<S: ExactScalar>(
    cert: &PartitionCertificate<S>,
    cfg: &Configuration<S>,
) -> Value {
    let validated = cert.validate(cfg).is_ok();
    json!({
        "blocks": cert.blocks,
        "common_point": cert.common_point.iter().map(scalar_to_json).collect::<Vec<_>>(),
        "coefficients": cert
            .coefficients
            .iter()
            .map(|row| row.iter().map(scalar_to_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "validated": validated,
    })
}

/// Resolves a partition-command input source to one rational configuration
/// per trial (partition solvers run over ℚ).
fn partition_inputs(
    source: &SourceArgs,
    common: &CommonArgs,
    random_shape: (usize, usize),
    construct_params: &ConstructParams,
) -> Result<(Vec<Configuration<Rat>>, Option<Vec<u64>>), CliFailure> {
    let trials = common.trials.max(1);
    if let Some(path) = &source.input {
        let file = read_point_file(path)?;
        let TypedConfig::Rational(cfg) = file.config else {
            return Err(invalid("partition commands need rational point files"));
        };
        Ok(((0..trials).map(|_| cfg.clone()).collect(), None))
    } else if let Some(name) = &source.construct {
        let built = build_construction(name, construct_params)?;
        let cfg = match built {
            Built::Config(TypedConfig::Rational(c)) => c,
            Built::GridR(g) => g.into_config(),
            _ => {
                return Err(invalid(
                    "partition commands need rational configurations",
                ))
            }
        };
        Ok(((0..trials).map(|_| cfg.clone()).collect(), None))
    } else if source.random {
        let (count, dim) = random_shape;
        let mut seeder = SplitMix64::new(common.seed);
        let seeds: Vec<u64> = (0..trials).map(|_| seeder.next_u64()).collect();
        let cfgs = seeds
            .iter()
            .map(|&s| random_trial_config(dim, count, common.bits, s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((cfgs, Some(seeds)))
    } else {
        Err(invalid(
            "choose an input source: --input PATH, --construct NAME, or --random",
        ))
    }
}

fn cmd_radon(args: RadonArgs) -> Result<u8, CliFailure> {
    let start = Instant::now();
    let d = args.d.unwrap_or(2);
    let (inputs, trial_seeds) = partition_inputs(
        &args.source,
        &args.common,
        (d + 2, d),
        &ConstructParams {
            n: None,
            m: None,
            d: args.d,
            r: None,
            apex: None,
            input: None,
            budget: env_budget()?,
        },
    )?;
    let results: Vec<Value> = inputs
        .par_iter()
        .map(|cfg| -> Result<Value, CliFailure> {
            let cert = radon_partition(cfg)?;
            Ok(certificate_json(&cert, cfg))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let trials = results.len();
    if !args.common.quiet {
        for (i, r) in results.iter().enumerate() {
            eprintln!(
                "[radon] trial {}/{}: blocks {} (validated: {})",
                i + 1,
                trials,
                r["blocks"],
                r["validated"]
            );
        }
    }
    let report = json!({
        "command": command_echo(),
        "mode": "radon",
        "seed": args.common.seed,
        "bits": args.common.bits,
        "trial_seeds": trial_seeds,
        "trials": results,
        "aggregate": { "trials": trials, "found": trials },
        "wall_ms": start.elapsed().as_millis() as u64,
    });
    write_report(&report, args.common.out.as_deref())?;
    Ok(EXIT_OK)
}

fn cmd_tverberg(args: TverbergArgs) -> Result<u8, CliFailure> {
    let start = Instant::now();
    let budget_env = env_budget()?;
    let budget = budget_env
        .map(|b| b as usize)
        .unwrap_or(DEFAULT_PARTITION_BUDGET);
    let (inputs, trial_seeds) = partition_inputs(
        &args.source,
        &args.common,
        (args.n.unwrap_or(7), args.d.unwrap_or(2)),
        &ConstructParams {
            n: args.n,
            m: None,
            d: args.d,
            r: Some(args.r),
            apex: None,
            input: None,
            budget: budget_env,
        },
    )?;
    let results: Vec<Value> = inputs
        .par_iter()
        .map(|cfg| -> Result<Value, CliFailure> {
            let search = tverberg_search(cfg, args.r, budget)?;
            Ok(match &search.certificate {
                Some(cert) => json!({
                    "certificate": certificate_json(cert, cfg),
                    "partitions_checked": search.partitions_checked,
                }),
                None => json!({
                    "certificate": null,
                    "partitions_checked": search.partitions_checked,
                    "certified_absence": true,
                }),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let trials = results.len();
    let found = results
        .iter()
        .filter(|r| !r["certificate"].is_null())
        .count();
    if !args.common.quiet {
        for (i, r) in results.iter().enumerate() {
            if r["certificate"].is_null() {
                eprintln!(
                    "[tverberg r={}] trial {}/{}: no partition ({} partitions checked)",
                    args.r,
                    i + 1,
                    trials,
                    r["partitions_checked"]
                );
            } else {
                eprintln!(
                    "[tverberg r={}] trial {}/{}: certificate with blocks {}",
                    args.r,
                    i + 1,
                    trials,
                    r["certificate"]["blocks"]
                );
            }
        }
    }
    let report = json!({
        "command": command_echo(),
        "mode": "tverberg",
        "r": args.r,
        "budget": budget,
        "seed": args.common.seed,
        "bits": args.common.bits,
        "trial_seeds": trial_seeds,
        "trials": results,
        "aggregate": { "trials": trials, "found": found, "absent": trials - found },
        "wall_ms": start.elapsed().as_millis() as u64,
    });
    write_report(&report, args.common.out.as_deref())?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// check embedding

fn cmd_check_embedding(
    hypergraph: &Path,
    input: &Path,
    out: Option<&Path>,
    quiet: bool,
) -> Result<u8, CliFailure> {
    let start = Instant::now();
    let hg = read_hypergraph_file(hypergraph)?;
    let file = read_point_file(input)?;
    let vertex_map: Vec<usize> = (0..hg.vertices()).collect();
    let (realized, witness) = match &file.config {
        TypedConfig::Rational(cfg) => is_linear_realization(&hg, cfg, &vertex_map),
        TypedConfig::Quad(cfg) => is_linear_realization(&hg, cfg, &vertex_map),
    }
    .map_err(|e| invalid(e.to_string()))?;

    // The realization family is faces followed by edges; surface witness
    // indices as the member tuples.
    let member = |k: usize| -> Vec<usize> {
        if k < hg.faces().len() {
            hg.faces()[k].to_vec()
        } else {
            hg.edges()[k - hg.faces().len()].to_vec()
        }
    };
    let witness_json = witness.map(|(i, j)| json!({ "first": member(i), "second": member(j) }));
    let report = json!({
        "command": command_echo(),
        "mode": "check-embedding",
        "vertices": hg.vertices(),
        "faces": hg.faces().len(),
        "edges": hg.edges().len(),
        "realized": realized,
        "witness": witness_json,
        "wall_ms": start.elapsed().as_millis() as u64,
    });
    write_report(&report, out)?;
    if !quiet {
        if realized {
            eprintln!("[check embedding] linear realization confirmed");
        } else {
            eprintln!("[check embedding] not a realization; witness pair attached");
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_registry_matches_the_dispatcher() {
        // Every registered id dispatches without hitting the unknown-theorem
        // arm (arity errors are fine — the id was recognized).
        let cfg = random_configuration(2, 5, 8, 1).unwrap();
        let opts = VerifyOptions {
            max_n: 8,
            deleted: vec![2],
        };
        for id in THEOREM_IDS {
            if *id == "product" {
                continue;
            }
            let outcome = run_config_verifier(id, &cfg, &opts);
            if let Err(CliFailure::Invalid(msg)) = &outcome {
                assert!(
                    !msg.contains("unknown theorem"),
                    "{id} is not wired: {msg}"
                );
            }
        }
    }

    #[test]
    fn random_shapes_cover_every_theorem_with_a_shape() {
        for id in THEOREM_IDS {
            if matches!(*id, "product") {
                continue;
            }
            let (count, dim) = random_shape(id, Some(3)).unwrap();
            assert!(count > dim, "{id} shape ({count}, {dim})");
        }
        assert_eq!(random_shape("intersection-linking", Some(5)).unwrap(), (8, 5));
        assert!(random_shape("product", None).is_err());
    }

    #[test]
    fn deleted_lists_parse_strictly() {
        assert_eq!(parse_deleted("2").unwrap(), vec![2]);
        assert_eq!(parse_deleted("2, 3").unwrap(), vec![2, 3]);
        assert!(parse_deleted("2;3").is_err());
        assert!(parse_deleted("x").is_err());
    }

    #[test]
    fn constructions_registry_builds_all_cheap_entries() {
        let p = ConstructParams {
            n: None,
            m: None,
            d: None,
            r: None,
            apex: None,
            input: None,
            budget: None,
        };
        for name in [
            "moment-curve",
            "hexagon-helix",
            "rational-helix",
            "simplex-plus-interior",
            "cylinder-grid",
            "torus-k3n",
            "product-hypergraph",
            "deleted-face-instance",
            "tverberg-counterexample",
        ] {
            assert!(build_construction(name, &p).is_ok(), "{name} failed");
        }
        assert!(matches!(
            build_construction("nonesuch", &p),
            Err(CliFailure::Invalid(_))
        ));
        // cone demands apex and base.
        assert!(matches!(
            build_construction("cone", &p),
            Err(CliFailure::Invalid(_))
        ));
    }
}
