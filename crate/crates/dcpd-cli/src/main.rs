//! `dcpd` command line: decompose tensors against a dictionary, run the
//! synthetic benchmark grid, unmix hyperspectral matrices with the
//! self-dictionary model, and check dictionary spark.
//!
//! Exit codes: 0 success, 1 i/o error, 2 validation/model error,
//! 3 numerical failure. Option precedence: flag > config file > built-in
//! default; `DCPD_SEED` supplies the default seed.

use clap::{Args, Parser, Subcommand};
use dcpd::error::{Error, Result};
use dcpd::io;
use dcpd::selfdict::{self, SelfDictVariant};
use dcpd::solvers::{init_random, report_rel_err, run_solver, SolverConfig, SolverKind};
use dcpd::synthbench::{self, BenchSolver, InitPolicy, SynthSpec};
use serde::Deserialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dcpd", version, about = "Dictionary-constrained CP decomposition tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a tensor with one factor constrained to dictionary atoms.
    Decompose(DecomposeArgs),
    /// Run the synthetic benchmark grid and emit reports.
    Synth(SynthArgs),
    /// Self-dictionary unmixing of a pixels-by-bands matrix.
    Unmix(UnmixArgs),
    /// Brute-force spark of a matrix (smallest dependent column subset).
    Spark(SparkArgs),
}

#[derive(Args)]
struct SolverFlags {
    #[arg(long)]
    max_iters: Option<usize>,
    /// Relative cost-change stopping tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Nonnegative factor updates everywhere.
    #[arg(long)]
    nonneg: bool,
    /// Forbid selecting the same atom twice.
    #[arg(long)]
    no_repeat: bool,
    /// Coupling strength (SMPALS initial, Flex-MPALS fixed).
    #[arg(long)]
    lambda: Option<f64>,
    /// SMPALS coupling growth factor (> 1).
    #[arg(long)]
    p: Option<f64>,
    /// ALS-FG l1 penalty ceiling.
    #[arg(long)]
    delta_max: Option<f64>,
    /// Fast-gradient iterations per outer iteration.
    #[arg(long)]
    fg_inner_iters: Option<usize>,
    /// Use the literal squared-eigenvalue step constant in ALS-FG.
    #[arg(long)]
    fg_squared_lipschitz: bool,
    /// Rescale A's columns to unit norm after each update.
    #[arg(long)]
    normalize_a: bool,
    /// Record the objective after every block update (diagnostics).
    #[arg(long)]
    record_block_costs: bool,
    /// Cap on post-refinement NNLS abundance passes (unmix).
    #[arg(long)]
    refine_passes: Option<usize>,
    #[arg(long, env = "DCPD_SEED")]
    seed: Option<u64>,
    /// JSON file with solver-config keys (flags override it).
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Solver-config keys accepted in a `--config` JSON file.
#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct SolverFileConfig {
    rank: Option<usize>,
    max_outer_iters: Option<usize>,
    stop_tol: Option<f64>,
    nonneg: Option<bool>,
    no_repeat: Option<bool>,
    lambda: Option<f64>,
    p: Option<f64>,
    delta_max: Option<f64>,
    fg_inner_iters: Option<usize>,
    fg_squared_lipschitz: Option<bool>,
    normalize_a: Option<bool>,
    record_block_costs: Option<bool>,
    abundance_refine_passes: Option<usize>,
    seed: Option<u64>,
}

impl SolverFlags {
    fn file_config(&self) -> Result<SolverFileConfig> {
        match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)?;
                serde_json::from_str(&text)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
            }
            None => Ok(SolverFileConfig::default()),
        }
    }

    /// Overlays config-file keys, then flags, onto `cfg` (boolean flags only
    /// turn options on; a config file can turn them off).
    fn overlay(&self, cfg: &mut SolverConfig, rank_flag: Option<usize>) -> Result<bool> {
        let file = self.file_config()?;
        let rank_given = rank_flag.is_some() || file.rank.is_some();
        if let Some(v) = file.rank {
            cfg.rank = v;
        }
        if let Some(v) = file.max_outer_iters {
            cfg.max_outer_iters = v;
        }
        if let Some(v) = file.stop_tol {
            cfg.stop_tol = v;
        }
        if let Some(v) = file.nonneg {
            cfg.nonneg = v;
        }
        if let Some(v) = file.no_repeat {
            cfg.no_repeat = v;
        }
        if let Some(v) = file.lambda {
            cfg.lambda = v;
        }
        if let Some(v) = file.p {
            cfg.p = v;
        }
        if let Some(v) = file.delta_max {
            cfg.delta_max = v;
        }
        if let Some(v) = file.fg_inner_iters {
            cfg.fg_inner_iters = v;
        }
        if let Some(v) = file.fg_squared_lipschitz {
            cfg.fg_squared_lipschitz = v;
        }
        if let Some(v) = file.normalize_a {
            cfg.normalize_a = v;
        }
        if let Some(v) = file.record_block_costs {
            cfg.record_block_costs = v;
        }
        if let Some(v) = file.abundance_refine_passes {
            cfg.abundance_refine_passes = v;
        }
        if let Some(v) = file.seed {
            cfg.seed = v;
        }

        if let Some(v) = rank_flag {
            cfg.rank = v;
        }
        if let Some(v) = self.max_iters {
            cfg.max_outer_iters = v;
        }
        if let Some(v) = self.tol {
            cfg.stop_tol = v;
        }
        if self.nonneg {
            cfg.nonneg = true;
        }
        if self.no_repeat {
            cfg.no_repeat = true;
        }
        if let Some(v) = self.lambda {
            cfg.lambda = v;
        }
        if let Some(v) = self.p {
            cfg.p = v;
        }
        if let Some(v) = self.delta_max {
            cfg.delta_max = v;
        }
        if let Some(v) = self.fg_inner_iters {
            cfg.fg_inner_iters = v;
        }
        if self.fg_squared_lipschitz {
            cfg.fg_squared_lipschitz = true;
        }
        if self.normalize_a {
            cfg.normalize_a = true;
        }
        if self.record_block_costs {
            cfg.record_block_costs = true;
        }
        if let Some(v) = self.refine_passes {
            cfg.abundance_refine_passes = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        Ok(rank_given)
    }

    /// flag > config file > built-in default. The boolean reports whether the
    /// rank came from the user (flag or file) rather than the default.
    fn build(&self, rank_flag: Option<usize>) -> Result<(SolverConfig, bool)> {
        let mut cfg = SolverConfig::default();
        let rank_given = self.overlay(&mut cfg, rank_flag)?;
        Ok((cfg, rank_given))
    }
}

#[derive(Args)]
struct DecomposeArgs {
    /// Tensor file (raw f64 + JSON sidecar).
    #[arg(long)]
    tensor: PathBuf,
    /// Dictionary atom matrix (binary or CSV).
    #[arg(long)]
    dict: Option<PathBuf>,
    /// als | projected-als | mpals | smpals | flex-mpals | als-fg
    #[arg(long)]
    solver: String,
    /// Model rank R.
    #[arg(long)]
    rank: Option<usize>,
    #[command(flatten)]
    solver_flags: SolverFlags,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
    /// Emit measured wall-clock times (breaks byte-reproducibility).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct SynthArgs {
    /// Tensor dims as K,L,M.
    #[arg(long)]
    dims: Option<String>,
    #[arg(long)]
    atoms: Option<usize>,
    #[arg(long)]
    classes: Option<usize>,
    /// True rank R of the generated data.
    #[arg(long)]
    rank: Option<usize>,
    /// Estimated ranks: "7..13" or "7,9,11" (empty string for none).
    #[arg(long)]
    re: Option<String>,
    #[arg(long)]
    sigma: Option<f64>,
    /// Conditioning grid, e.g. "0.1,0.5,1.0" (empty string for none).
    #[arg(long)]
    rho: Option<String>,
    #[arg(long)]
    trials: Option<usize>,
    /// Comma-separated benchmark solvers (default: the comparison set).
    #[arg(long)]
    solvers: Option<String>,
    /// als | truth
    #[arg(long)]
    init: Option<String>,
    /// Worker threads for trials (0 = one per core).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    solver_flags: SolverFlags,
    /// JSON file with benchmark-spec keys (flags override it).
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct UnmixArgs {
    /// Pixels-by-bands matrix (binary or CSV; sidecar may carry height/width).
    #[arg(long)]
    input: PathBuf,
    /// Number of endmembers.
    #[arg(long)]
    rank: usize,
    /// "spa" or a JSON file with initial pixel indices.
    #[arg(long, default_value = "spa")]
    init: String,
    /// mpals | smpals | flex
    #[arg(long, default_value = "mpals")]
    variant: String,
    #[command(flatten)]
    solver_flags: SolverFlags,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct SparkArgs {
    /// Matrix whose columns are tested for linear dependence.
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long)]
    kmax: usize,
}

fn cmd_decompose(args: &DecomposeArgs) -> Result<()> {
    let kind: SolverKind = args.solver.parse()?;
    let (cfg, rank_given) = args.solver_flags.build(args.rank)?;
    if !rank_given {
        return Err(Error::InvalidInput("--rank is required for decompose".into()));
    }
    let tensor = io::load_tensor(&args.tensor)?;
    let dict = match (&args.dict, kind.needs_dictionary()) {
        (Some(path), _) => Some(io::load_dictionary(path)?),
        (None, false) => None,
        (None, true) => {
            return Err(Error::InvalidInput(format!(
                "solver '{}' requires --dict",
                kind.name()
            )))
        }
    };
    cfg.validate()?;
    let init = init_random(tensor.dims(), cfg.rank, cfg.seed);
    let report = run_solver(kind, &tensor, &cfg, &init, dict.as_ref())?;
    let rel_err = report_rel_err(&tensor, &report)?;

    std::fs::create_dir_all(&args.out)?;
    io::save_matrix(&args.out.join("A.bin"), &report.factors.a)?;
    io::save_matrix(&args.out.join("B.bin"), &report.factors.b)?;
    io::save_matrix(&args.out.join("C.bin"), &report.factors.c)?;
    if let Some(sel) = &report.selection {
        io::save_selection(&args.out.join("selection.json"), sel)?;
    }
    io::save_cost_trace(&args.out.join("cost_trace.csv"), &report.cost_trace)?;

    #[derive(serde::Serialize)]
    struct Summary<'a> {
        solver: &'a str,
        rel_err: f64,
        iterations: usize,
        converged: bool,
        runtime_s: f64,
        warnings: &'a [String],
    }
    let summary = Summary {
        solver: kind.name(),
        rel_err,
        iterations: report.iterations,
        converged: report.converged,
        runtime_s: if args.timings { report.wall_time_s } else { 0.0 },
        warnings: &report.warnings,
    };
    let json = serde_json::to_string_pretty(&summary)
        .map_err(|e| Error::Parse(format!("summary encode: {e}")))?;
    std::fs::write(args.out.join("summary.json"), json + "\n")?;
    println!("solver {} rel_err {} iterations {} converged {}",
        kind.name(), io::fmt_f64(rel_err), report.iterations, report.converged);
    Ok(())
}

fn parse_usize_list(s: &str, what: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    if let Some((a, b)) = s.split_once("..") {
        let lo: usize = a.trim().parse().map_err(|_| bad_list(what, s))?;
        let hi: usize = b.trim().parse().map_err(|_| bad_list(what, s))?;
        if lo > hi {
            return Err(bad_list(what, s));
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',')
        .map(|tok| tok.trim().parse::<usize>().map_err(|_| bad_list(what, s)))
        .collect()
}

fn parse_f64_list(s: &str, what: &str) -> Result<Vec<f64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|tok| tok.trim().parse::<f64>().map_err(|_| bad_list(what, s)))
        .collect()
}

fn bad_list(what: &str, s: &str) -> Error {
    Error::InvalidInput(format!("cannot parse {what} list '{s}'"))
}

/// Benchmark-spec keys accepted in a `--spec` JSON file.
#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct SynthFileSpec {
    dims: Option<(usize, usize, usize)>,
    atoms: Option<usize>,
    classes: Option<usize>,
    rank: Option<usize>,
    re_values: Option<Vec<usize>>,
    sigma: Option<f64>,
    rho_values: Option<Vec<f64>>,
    trials: Option<usize>,
    base_seed: Option<u64>,
    init: Option<InitPolicy>,
    solver_cfg: Option<SolverConfig>,
}

fn cmd_synth(args: &SynthArgs) -> Result<()> {
    let file: SynthFileSpec = match &args.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
        }
        None => SynthFileSpec::default(),
    };
    let mut spec = SynthSpec::default();
    if let Some(v) = file.dims {
        spec.dims = v;
    }
    if let Some(v) = file.atoms {
        spec.atoms = v;
    }
    if let Some(v) = file.classes {
        spec.classes = v;
    }
    if let Some(v) = file.rank {
        spec.rank = v;
    }
    if let Some(v) = file.re_values {
        spec.re_values = v;
    }
    if let Some(v) = file.sigma {
        spec.sigma = v;
    }
    if let Some(v) = file.rho_values {
        spec.rho_values = v;
    }
    if let Some(v) = file.trials {
        spec.trials = v;
    }
    if let Some(v) = file.base_seed {
        spec.base_seed = v;
    }
    if let Some(v) = file.init {
        spec.init = v;
    }
    if let Some(v) = file.solver_cfg {
        spec.solver_cfg = v;
    }

    if let Some(s) = &args.dims {
        let d = parse_usize_list(s, "dims")?;
        if d.len() != 3 {
            return Err(Error::InvalidInput("--dims needs exactly K,L,M".into()));
        }
        spec.dims = (d[0], d[1], d[2]);
    }
    if let Some(v) = args.atoms {
        spec.atoms = v;
    }
    if let Some(v) = args.classes {
        spec.classes = v;
    }
    if let Some(v) = args.rank {
        spec.rank = v;
    }
    if let Some(s) = &args.re {
        spec.re_values = parse_usize_list(s, "re")?;
    }
    if let Some(v) = args.sigma {
        spec.sigma = v;
    }
    if let Some(s) = &args.rho {
        spec.rho_values = parse_f64_list(s, "rho")?;
    }
    if let Some(v) = args.trials {
        spec.trials = v;
    }
    if let Some(s) = &args.init {
        spec.init = match s.as_str() {
            "als" => InitPolicy::Als,
            "truth" => InitPolicy::Truth,
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown init policy '{other}'; valid: als, truth"
                )))
            }
        };
    }
    // per-solver knobs overlay the benchmark's template config
    args.solver_flags.overlay(&mut spec.solver_cfg, None)?;
    if let Some(v) = args.solver_flags.seed {
        spec.base_seed = v;
    } else if spec.base_seed == 0 {
        spec.base_seed = spec.solver_cfg.seed;
    }

    let solvers: Vec<BenchSolver> = match &args.solvers {
        None => BenchSolver::DEFAULT.to_vec(),
        Some(s) => s
            .split(',')
            .map(|tok| tok.trim().parse::<BenchSolver>())
            .collect::<Result<_>>()?,
    };

    let report = synthbench::run_grid(&spec, &solvers, args.jobs)?;
    std::fs::create_dir_all(&args.out)?;
    io::save_report_csv(&args.out.join("report.csv"), &report, args.timings)?;
    io::save_report_json(&args.out.join("aggregate.json"), &report, args.timings)?;
    io::save_gnuplot_bundle(&args.out, &report)?;
    println!(
        "cells {} trials {} records {} failures {} (max intra-class cosine {})",
        report.summaries.len() / solvers.len().max(1),
        spec.trials,
        report.records.len(),
        report.failures.len(),
        io::fmt_f64(report.max_intraclass_cosine),
    );
    for s in &report.summaries {
        println!(
            "{} {} {}: id_rate {} rmse_B {} rel_err {}",
            s.cell.param.name(),
            io::fmt_f64(s.cell.value),
            s.solver,
            io::fmt_f64(s.mean_id_rate.unwrap_or(f64::NAN)),
            io::fmt_f64(s.mean_rmse_b),
            io::fmt_f64(s.mean_rel_err),
        );
    }
    Ok(())
}

fn cmd_unmix(args: &UnmixArgs) -> Result<()> {
    let hsi = io::load_hsi(&args.input)?;
    if args.rank == 0 || args.rank > hsi.bands().min(hsi.pixels()) {
        return Err(Error::InvalidInput(format!(
            "rank {} out of range for {} pixels x {} bands",
            args.rank,
            hsi.pixels(),
            hsi.bands()
        )));
    }
    let variant = match args.variant.as_str() {
        "mpals" => SelfDictVariant::Mpals,
        "smpals" => SelfDictVariant::Smpals,
        "flex" => SelfDictVariant::Flex,
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown variant '{other}'; valid: mpals, smpals, flex"
            )))
        }
    };
    let (mut cfg, _) = args.solver_flags.build(Some(args.rank))?;
    cfg.rank = args.rank;
    if args.solver_flags.max_iters.is_none() {
        cfg.max_outer_iters = 50;
    }
    if args.solver_flags.lambda.is_none() {
        cfg.lambda = selfdict::default_hsi_lambda(&hsi, args.rank);
    }
    let init_name;
    let init_indices = if args.init == "spa" {
        init_name = "spa".to_string();
        selfdict::spa(&hsi, args.rank)?
    } else {
        init_name = Path::new(&args.init)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "file".into());
        io::load_indices(Path::new(&args.init))?
    };
    let result = selfdict::self_dcpd(&hsi, args.rank, &cfg, &init_indices, variant)?;
    io::save_unmix_outputs(&args.out, &hsi, &result, args.timings)?;
    println!(
        "{} rel_err {} ({:.2}%)",
        init_name,
        io::fmt_f64(result.init_rel_err),
        100.0 * result.init_rel_err
    );
    println!(
        "d-{} ({}) rel_err {} ({:.2}%)",
        init_name,
        variant.name(),
        io::fmt_f64(result.rel_err),
        100.0 * result.rel_err
    );
    if args.timings {
        println!("runtime_s {}", io::fmt_f64(result.wall_time_s));
    }
    Ok(())
}

fn cmd_spark(args: &SparkArgs) -> Result<()> {
    let m = io::load_matrix(&args.matrix)?;
    let res = dcpd::numerics::spark_bruteforce(&m, args.kmax)?;
    println!("{res}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Decompose(args) => cmd_decompose(args),
        Command::Synth(args) => cmd_synth(args),
        Command::Unmix(args) => cmd_unmix(args),
        Command::Spark(args) => cmd_spark(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
