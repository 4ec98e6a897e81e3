//! `connect4`: command-line access to staircases, decompositions, point
//! sets, sliced Gröbner bases and stratum invariants.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input, 3 resource
//! guard exceeded.

use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use connect_four::connect4gb::{membership_check, reduce_to_psi, ReduceOptions, SlicedInstance};
use connect_four::decomposition::{decomposition_number, enumerate_decompositions};
use connect_four::graph::{build_iterated_graph, GraphError, GraphLimits};
use connect_four::pointset::{intersect_ideals_gb, slice, vanishing_ideal_gb, PointSet};
use connect_four::random::{random_instance, random_point_set};
use connect_four::stratum::{dimension_vs_nr, report, table};
use connect_four::{Field, FieldElement, ReducedGB, StandardSet};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "connect4",
    version,
    about = "Connect Four addition, decompositions and sliced lex Gröbner bases"
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Config {
    /// Coefficient field for generated data: Q or Fp:<prime>
    #[arg(long, global = true, default_value = "Q")]
    field: Field,
    /// Seed for every random choice
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Largest ambient dimension accepted
    #[arg(long, global = true, default_value_t = 6)]
    max_dim: usize,
    /// Largest standard set size accepted
    #[arg(long, global = true, default_value_t = 12)]
    max_size: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Output {
    Json,
    Table,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Connect Four sum of two standard sets
    Add {
        a: PathBuf,
        b: PathBuf,
        /// Embed both operands as Δ × {0} first
        #[arg(long)]
        embed: bool,
    },
    /// Decompositions of a standard set
    Decompose {
        delta: PathBuf,
        #[arg(long)]
        count_only: bool,
        /// Build the iterated decomposition graph
        #[arg(long)]
        graph: bool,
        /// Drop graph nodes of label at most 2
        #[arg(long, requires = "graph")]
        truncate: bool,
    },
    /// Standard set, slices and vanishing ideal of a point set
    Points {
        #[arg(required_unless_present = "random")]
        file: Option<PathBuf>,
        /// Generate this many random points instead of reading a file
        #[arg(long, conflicts_with = "file")]
        random: Option<usize>,
        /// Dimension of random points
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Random coordinates lie in 0..=spread
        #[arg(long, default_value_t = 3)]
        spread: i64,
        #[arg(long)]
        slice: bool,
        #[arg(long)]
        gb: bool,
    },
    /// Reduced lex Gröbner basis of a sliced instance
    #[command(alias = "connect4")]
    Gb {
        #[arg(long, required_unless_present = "random")]
        instance: Option<PathBuf>,
        /// Generate a random instance instead of reading a file
        #[arg(long, conflicts_with = "instance")]
        random: bool,
        /// Ambient dimension of a random instance
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Largest total size of a random instance
        #[arg(long, default_value_t = 6)]
        size: usize,
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum)]
        verify: Option<Verify>,
    },
    /// Dimension and component counts of strata
    Stratum {
        #[command(subcommand)]
        command: StratumCommand,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Verify {
    Oracle,
    Membership,
    Both,
}

#[derive(Subcommand, Debug)]
enum StratumCommand {
    Report {
        #[arg(long)]
        delta: PathBuf,
    },
    Table {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        size: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Verification(String),
    Input(String),
    Resource(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

fn input(e: impl ToString) -> CliError {
    CliError::Input(e.to_string())
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(input)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| input(format!("{}: {}", path.display(), e)))?
    };
    serde_json::from_str(&text).map_err(|e| input(format!("{}: {}", path.display(), e)))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable output")
}

impl Config {
    fn guard(&self, dim: usize, size: usize) -> Result<(), CliError> {
        if dim > self.max_dim {
            return Err(CliError::Resource(format!(
                "dimension {} exceeds --max-dim {}",
                dim, self.max_dim
            )));
        }
        if size > self.max_size {
            return Err(CliError::Resource(format!(
                "size {} exceeds --max-size {}",
                size, self.max_size
            )));
        }
        Ok(())
    }

    fn no_dot(&self) -> Result<(), CliError> {
        if self.output == Output::Dot {
            return Err(input("dot output is only available for decompose --graph"));
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn cmd_add(cfg: &Config, a: &Path, b: &Path, embed: bool) -> Result<String, CliError> {
    cfg.no_dot()?;
    let mut x: StandardSet = read_json(a)?;
    let mut y: StandardSet = read_json(b)?;
    if embed {
        x = x.embed();
        y = y.embed();
    }
    let sum = x.connect_four_add(&y).map_err(input)?;
    Ok(match cfg.output {
        Output::Table => format!("{}\n", sum),
        _ => to_json(&sum),
    })
}

fn cmd_decompose(
    cfg: &Config,
    path: &Path,
    count_only: bool,
    graph: bool,
    truncate: bool,
) -> Result<String, CliError> {
    let delta: StandardSet = read_json(path)?;
    cfg.guard(delta.dim(), delta.len())?;
    if graph {
        let limits = GraphLimits {
            max_dim: cfg.max_dim,
            max_size: cfg.max_size,
        };
        let mut g = build_iterated_graph(&delta, limits).map_err(|e| match e {
            GraphError::SizeLimitExceeded { .. } => CliError::Resource(e.to_string()),
        })?;
        if truncate {
            g = g.truncate();
        }
        return Ok(match cfg.output {
            Output::Dot => g.to_dot(),
            Output::Table => {
                let (s, d) = g.node_counts();
                format!(
                    "staircase nodes {}\ndecomposition nodes {}\nadmissible subgraphs {}\n",
                    s,
                    d,
                    g.count_admissible_subgraphs()
                )
            }
            Output::Json => to_json(&json!({
                "admissible_subgraphs": g.count_admissible_subgraphs(),
                "graph": g.to_json(),
            })),
        });
    }
    cfg.no_dot()?;
    let decs = enumerate_decompositions(&delta);
    let d = decomposition_number(&delta);
    Ok(match (cfg.output, count_only) {
        (Output::Table, true) => format!("decompositions {}\nd {}\n", decs.len(), d),
        (Output::Table, false) => {
            let mut out = String::new();
            for dec in &decs {
                let _ = writeln!(out, "{}", dec);
            }
            let _ = writeln!(out, "d {}", d);
            out
        }
        (_, true) => to_json(&json!({ "decompositions": decs.len(), "d": d })),
        (_, false) => to_json(&json!({
            "delta": delta,
            "decompositions": decs,
            "d": d,
        })),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_points(
    cfg: &Config,
    file: Option<&Path>,
    random: Option<usize>,
    dim: usize,
    spread: i64,
    want_slice: bool,
    want_gb: bool,
) -> Result<String, CliError> {
    cfg.no_dot()?;
    let a: PointSet = match (file, random) {
        (Some(f), _) => read_json(f)?,
        (None, Some(count)) => {
            cfg.guard(dim, count)?;
            let room = (spread.max(0) as u128 + 1).saturating_pow(dim as u32);
            if spread < 0 || count as u128 > room {
                return Err(input(format!(
                    "{} distinct points do not fit in [0, {}]^{}",
                    count, spread, dim
                )));
            }
            random_point_set(&mut cfg.rng(), dim, count, cfg.field, spread)
        }
        (None, None) => return Err(input("give a point file or --random")),
    };
    cfg.guard(a.dim(), a.len())?;
    let g = vanishing_ideal_gb(&a).map_err(input)?;
    let mut out = json!({ "points": a, "standard_set": g.delta() });
    let mut text = format!("D(A) = {}\n", g.delta());
    if want_slice {
        let sliced = slice(&a).map_err(input)?;
        let mut rows = Vec::new();
        for (lambda, s) in &sliced.slices {
            let d = vanishing_ideal_gb(s).map_err(input)?.delta().clone();
            let _ = writeln!(
                text,
                "x{} = {}: {} points, D = {}",
                a.dim(),
                lambda,
                s.len(),
                d
            );
            rows.push(json!({ "lambda": connect_four::field::RawScalar::from(lambda), "points": s, "standard_set": d }));
        }
        out["slices"] = Value::Array(rows);
    }
    if want_gb {
        for (c, f) in g.entries() {
            let _ = writeln!(text, "f_{} = {}", c, f);
        }
        out["basis"] = serde_json::to_value(&g).expect("serializable basis");
    }
    Ok(match cfg.output {
        Output::Table => text,
        _ => to_json(&out),
    })
}

struct GbArgs<'a> {
    instance: Option<&'a Path>,
    random: bool,
    dim: usize,
    size: usize,
    trace: bool,
    verify: Option<Verify>,
}

fn cmd_gb(cfg: &Config, args: GbArgs<'_>) -> Result<String, CliError> {
    cfg.no_dot()?;
    let inst: SlicedInstance = match args.instance {
        Some(p) => read_json(p)?,
        None if args.random => {
            if args.dim < 1 || !(1..=11).contains(&args.size) {
                return Err(input(
                    "random instances need --dim >= 1 and 1 <= --size <= 11",
                ));
            }
            cfg.guard(args.dim, args.size)?;
            random_instance(&mut cfg.rng(), args.dim, args.size, cfg.field)
        }
        None => return Err(input("give --instance or --random")),
    };
    cfg.guard(inst.dim(), inst.delta().len())?;
    let res = reduce_to_psi(
        &inst,
        ReduceOptions {
            trace: args.trace,
            ..Default::default()
        },
    )
    .map_err(|e| CliError::Verification(e.to_string()))?;

    let mut failures = Vec::new();
    let mut verification = serde_json::Map::new();
    if matches!(args.verify, Some(Verify::Oracle | Verify::Both)) {
        let pairs: Vec<(&ReducedGB, FieldElement)> = inst
            .summands()
            .iter()
            .map(|s| (&s.basis, s.lambda.clone()))
            .collect();
        let oracle = intersect_ideals_gb(&pairs).map_err(input)?;
        let pass = oracle == res.psi;
        if !pass {
            failures.push("result differs from the independent intersection".to_string());
        }
        verification.insert("oracle".into(), json!({ "pass": pass }));
    }
    if matches!(args.verify, Some(Verify::Membership | Verify::Both)) {
        let m = membership_check(&inst, &res);
        let failed: Vec<_> = m.checks.iter().filter(|c| !c.pass).collect();
        if !failed.is_empty() {
            failures.push(format!("{} membership checks failed", failed.len()));
        }
        verification.insert(
            "membership".into(),
            json!({ "pass": failed.is_empty(), "checks": m.checks.len(), "failures": failed }),
        );
    }

    let text = match cfg.output {
        Output::Table => {
            let mut t = format!("Δ = {}\n", res.delta);
            for (c, f) in res.psi.entries() {
                let _ = writeln!(t, "psi_{} = {}", c, f);
            }
            for (k, v) in &verification {
                let _ = writeln!(
                    t,
                    "{}: {}",
                    k,
                    if v["pass"] == json!(true) {
                        "pass"
                    } else {
                        "FAIL"
                    }
                );
            }
            t
        }
        _ => {
            let mut v = serde_json::to_value(&res).expect("serializable result");
            if args.random {
                v["instance"] = serde_json::to_value(&inst).expect("serializable instance");
            }
            if args.verify.is_some() {
                v["verification"] = Value::Object(verification);
            }
            to_json(&v)
        }
    };
    if failures.is_empty() {
        Ok(text)
    } else {
        print!("{}", text);
        Err(CliError::Verification(failures.join("; ")))
    }
}

fn cmd_stratum(cfg: &Config, command: &StratumCommand) -> Result<String, CliError> {
    cfg.no_dot()?;
    match command {
        StratumCommand::Report { delta } => {
            let delta: StandardSet = read_json(delta)?;
            cfg.guard(delta.dim(), delta.len())?;
            let r = report(&delta);
            let b = dimension_vs_nr(&delta);
            Ok(match cfg.output {
                Output::Table => format!(
                    "Δ = {}\ndimension {} (n·#Δ = {})\nirreducible components {}\nconnected components {}\nnote: {}\n",
                    r.delta, r.dimension, b.bound, r.irreducible_components, r.connected_components, r.caveat
                ),
                _ => {
                    let mut v = serde_json::to_value(&r).expect("serializable report");
                    v["nr_bound"] = json!(b);
                    to_json(&v)
                }
            })
        }
        StratumCommand::Table { dim, size } => {
            cfg.guard(*dim, *size)?;
            let rows = table(*dim, *size);
            Ok(match cfg.output {
                Output::Table => {
                    let mut t = format!("{:<40} {:>5} {:>6} {:>5}\n", "delta", "dim", "d", "nr");
                    for r in &rows {
                        let _ = writeln!(
                            t,
                            "{:<40} {:>5} {:>6} {:>5}",
                            r.delta.to_string(),
                            r.dimension,
                            r.d,
                            r.nr_bound
                        );
                    }
                    t
                }
                _ => to_json(&rows),
            })
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Add { a, b, embed } => cmd_add(cfg, a, b, *embed),
        Command::Decompose {
            delta,
            count_only,
            graph,
            truncate,
        } => cmd_decompose(cfg, delta, *count_only, *graph, *truncate),
        Command::Points {
            file,
            random,
            dim,
            spread,
            slice,
            gb,
        } => cmd_points(cfg, file.as_deref(), *random, *dim, *spread, *slice, *gb),
        Command::Gb {
            instance,
            random,
            dim,
            size,
            trace,
            verify,
        } => cmd_gb(
            cfg,
            GbArgs {
                instance: instance.as_deref(),
                random: *random,
                dim: *dim,
                size: *size,
                trace: *trace,
                verify: *verify,
            },
        ),
        Command::Stratum { command } => cmd_stratum(cfg, command),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            // a closed pipe (e.g. `| head`) is not an error
            match std::io::stdout().lock().write_all(out.as_bytes()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {}", e);
                    ExitCode::from(2)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            let (CliError::Verification(m) | CliError::Input(m) | CliError::Resource(m)) = &e;
            eprintln!("error: {}", m);
            ExitCode::from(e.code())
        }
    }
}
