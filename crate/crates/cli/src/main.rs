//! `sweepkit` command-line tool.
//!
//! Every command that computes a number ends its stdout with a single
//! `RESULT <value>` line. Human-readable detail goes to stderr.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use sweepkit::bounds::{
    pathwidth_bounds, product_search_bounds, search_number_bounds, BoundsReport,
};
use sweepkit::certificate::Certificate;
use sweepkit::io::{parse_graph, write_graph};
use sweepkit::pathdecomp::{
    build_clique_product_decomposition, pw_clique_product_formula, validate_path_decomposition,
};
use sweepkit::search::{
    sweep_strategy_product_with_path, SearchLimits, SearchSolver, MAX_VERTICES_ENV,
};
use sweepkit::vsep::{
    layout_to_decomposition, vertex_separation_exact_with_limit, DEFAULT_MAX_VERTICES,
};
use sweepkit::{Error, Graph, SearchMode};

#[derive(Parser)]
#[command(
    name = "sweepkit",
    version,
    about = "Pathwidth and edge-search numbers of graph products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph: `path:N`, `clique:N` or `product:AxB`.
    Generate {
        spec: String,
        /// Output file; the graph goes to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Pathwidth by subset DP, closed formula, or explicit construction.
    Pathwidth {
        #[arg(value_enum)]
        mode: PathwidthMode,
        graph: PathBuf,
        /// Write the witness decomposition here.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Exact edge-search number, or a yes/no answer for a fixed budget.
    SearchNumber {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Monotone)]
        mode: Mode,
        /// Only decide whether this many searchers suffice.
        #[arg(long)]
        k: Option<usize>,
        /// Write the winning strategy here.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Explicit strategies.
    Strategy {
        #[command(subcommand)]
        kind: StrategyKind,
    },
    /// Certified interval for the search number (or pathwidth). With two
    /// graphs the interval is for their Cartesian product.
    Bounds {
        graph: PathBuf,
        other: Option<PathBuf>,
        #[arg(long)]
        pathwidth: bool,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Re-check a certificate against its graph (or the two factors of a
    /// product bounds certificate).
    Verify {
        certificate: PathBuf,
        graph: PathBuf,
        other: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum StrategyKind {
    /// Clear `G □ P_n` with `|V(G)| + 1` searchers.
    Sweep {
        graph: PathBuf,
        #[arg(long)]
        length: usize,
        /// Write the product graph here.
        #[arg(long)]
        graph_out: Option<PathBuf>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PathwidthMode {
    Exact,
    Formula,
    Construct,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Monotone,
    Full,
}

impl From<Mode> for SearchMode {
    fn from(m: Mode) -> SearchMode {
        match m {
            Mode::Monotone => SearchMode::Monotone,
            Mode::Full => SearchMode::Full,
        }
    }
}

/// Bad input from the user, reported with exit status 2.
#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    /// A certificate failed verification.
    Rejected,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Rejected) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(command: Command) -> Result<Status> {
    match command {
        Command::Generate { spec, output } => generate(&spec, output.as_deref()),
        Command::Pathwidth { mode, graph, cert } => pathwidth(mode, &graph, cert.as_deref()),
        Command::SearchNumber {
            graph,
            mode,
            k,
            cert,
        } => search_number(&graph, mode.into(), k, cert.as_deref()),
        Command::Strategy {
            kind:
                StrategyKind::Sweep {
                    graph,
                    length,
                    graph_out,
                    cert,
                },
        } => sweep(&graph, length, graph_out.as_deref(), cert.as_deref()),
        Command::Bounds {
            graph,
            other,
            pathwidth,
            cert,
        } => bounds(&graph, other.as_deref(), pathwidth, cert.as_deref()),
        Command::Verify {
            certificate,
            graph,
            other,
        } => verify(&certificate, &graph, other.as_deref()),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn write_cert(path: Option<&Path>, cert: &Certificate) -> Result<()> {
    if let Some(path) = path {
        write_file(path, &(cert.to_json() + "\n"))?;
        eprintln!("certificate written to {}", path.display());
    }
    Ok(())
}

fn env_limit() -> Option<usize> {
    std::env::var(MAX_VERTICES_ENV).ok()?.trim().parse().ok()
}

fn parse_spec(spec: &str) -> Result<Graph> {
    let size = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| usage(format!("expected a vertex count, got {s:?}")))
    };
    if let Some(rest) = spec.strip_prefix("product:") {
        // Leftmost split where both sides parse.
        for (i, _) in rest.match_indices('x') {
            if let (Ok(g), Ok(h)) = (parse_spec(&rest[..i]), parse_spec(&rest[i + 1..])) {
                return Ok(Graph::cartesian_product(&g, &h)?);
            }
        }
        return Err(usage(format!("cannot split {rest:?} into two graph specs")));
    }
    let (family, n) = spec
        .split_once(':')
        .ok_or_else(|| usage(format!("malformed graph spec {spec:?}")))?;
    let n = size(n)?;
    if n == 0 {
        return Err(usage("a graph needs at least one vertex"));
    }
    match family {
        "path" => Ok(Graph::path(n)?),
        "clique" => Ok(Graph::complete(n)?),
        other => Err(usage(format!(
            "unknown family {other:?}; use path, clique or product"
        ))),
    }
}

fn generate(spec: &str, output: Option<&Path>) -> Result<Status> {
    let g = parse_spec(spec)?;
    let text = write_graph(&g);
    match output {
        Some(path) => {
            write_file(path, &text)?;
            eprintln!(
                "{} vertices, {} edges written to {}",
                g.vertex_count(),
                g.edge_count(),
                path.display()
            );
            println!("RESULT {}", g.vertex_count());
        }
        None => print!("{text}"),
    }
    Ok(Status::Ok)
}

/// `(rows, cols)` when `g` carries coordinates of `K_rows □ K_cols`.
fn clique_product_dims(g: &Graph) -> Result<(usize, usize)> {
    let not_product =
        || usage("this mode needs a product of two cliques with coordinates (see `generate`)");
    let (a, b) = g.factors().ok_or_else(not_product)?;
    let (rows, cols) = (a.vertex_count(), b.vertex_count());
    if !a.is_complete() || !b.is_complete() || rows < 2 || cols < 2 {
        return Err(not_product());
    }
    Ok((rows, cols))
}

fn pathwidth(mode: PathwidthMode, path: &Path, cert: Option<&Path>) -> Result<Status> {
    let g = read_graph(path)?;
    let (value, decomposition) = match mode {
        PathwidthMode::Exact => {
            let limit = env_limit().unwrap_or(DEFAULT_MAX_VERTICES);
            let layout = vertex_separation_exact_with_limit(&g, limit).map_err(|e| match e {
                Error::TooLarge { .. } => anyhow::Error::new(e).context(format!(
                    "use `sweepkit bounds --pathwidth` or raise {MAX_VERTICES_ENV}"
                )),
                e => e.into(),
            })?;
            let d = layout_to_decomposition(&g, &layout)?;
            (layout.cost(), Some(d))
        }
        PathwidthMode::Formula => {
            let (rows, cols) = clique_product_dims(&g)?;
            let value = pw_clique_product_formula(rows.min(cols), rows.max(cols))?;
            eprintln!("K_{rows} □ K_{cols}: closed formula");
            (value, None)
        }
        PathwidthMode::Construct => {
            let (rows, cols) = clique_product_dims(&g)?;
            let d = build_clique_product_decomposition(rows, cols)?;
            let report = validate_path_decomposition(&g, &d)?;
            if let Some(v) = report.violations.first() {
                anyhow::bail!("construction failed to validate: {v}");
            }
            eprintln!("{} bags, validated", d.len());
            (d.width()?, Some(d))
        }
    };
    if let Some(d) = &decomposition {
        write_cert(cert, &Certificate::path_decomposition(&g, d))?;
    } else if cert.is_some() {
        eprintln!("formula mode has no witness; no certificate written");
    }
    println!("RESULT {value}");
    Ok(Status::Ok)
}

fn search_number(
    path: &Path,
    mode: SearchMode,
    k: Option<usize>,
    cert: Option<&Path>,
) -> Result<Status> {
    let g = read_graph(path)?;
    let solver = SearchSolver::new(SearchLimits::from_env());
    let guidance = |e: Error| {
        match e {
        Error::TooLarge { .. } => anyhow::Error::new(e).context(format!(
            "exact search is out of reach; use `sweepkit bounds` for a certified interval or raise {MAX_VERTICES_ENV}"
        )),
        e => e.into(),
    }
    };
    match k {
        Some(k) => {
            let answer = solver.decide(&g, k, mode).map_err(guidance)?;
            match &answer {
                Some(strategy) => {
                    eprintln!("{k} searchers suffice ({} actions)", strategy.actions.len());
                    write_cert(cert, &Certificate::search_strategy(&g, strategy))?;
                }
                None => eprintln!("{k} searchers do not suffice"),
            }
            println!("RESULT {}", if answer.is_some() { "yes" } else { "no" });
        }
        None => {
            let (s, strategy) = solver.exact(&g, mode).map_err(guidance)?;
            eprintln!(
                "search number {s}, witness has {} actions",
                strategy.actions.len()
            );
            write_cert(cert, &Certificate::search_strategy(&g, &strategy))?;
            println!("RESULT {s}");
        }
    }
    Ok(Status::Ok)
}

fn sweep(
    path: &Path,
    length: usize,
    graph_out: Option<&Path>,
    cert: Option<&Path>,
) -> Result<Status> {
    let g = read_graph(path)?;
    let strategy = sweep_strategy_product_with_path(&g, length)?;
    let product = Graph::cartesian_product(&g, &Graph::path(length)?)?;
    if let Some(out) = graph_out {
        write_file(out, &write_graph(&product))?;
        eprintln!("product graph written to {}", out.display());
    }
    eprintln!(
        "{} searchers, {} actions",
        strategy.k,
        strategy.actions.len()
    );
    write_cert(cert, &Certificate::search_strategy(&product, &strategy))?;
    println!("RESULT {}", strategy.k);
    Ok(Status::Ok)
}

fn print_report(report: &BoundsReport) {
    for p in &report.provenance {
        let side = match p.side {
            sweepkit::bounds::Side::Lower => ">=",
            sweepkit::bounds::Side::Upper => "<=",
        };
        eprintln!("  {side} {:>3}  {}: {}", p.value, p.rule, p.basis);
    }
}

fn bounds(
    path: &Path,
    other: Option<&Path>,
    pathwidth: bool,
    cert: Option<&Path>,
) -> Result<Status> {
    let g = read_graph(path)?;
    let (report, certificate) = match (other, pathwidth) {
        (None, false) => {
            let r = search_number_bounds(&g)?;
            let c = Certificate::bounds(&g, &r);
            (r, c)
        }
        (None, true) => {
            let r = pathwidth_bounds(&g)?;
            let c = Certificate::bounds(&g, &r);
            (r, c)
        }
        (Some(other), false) => {
            let h = read_graph(other)?;
            let r = product_search_bounds(&g, &h)?;
            let c = Certificate::product_bounds(&g, &h, &r)?;
            (r, c)
        }
        (Some(_), true) => {
            return Err(usage(
                "--pathwidth takes a single graph; generate the product first",
            ))
        }
    };
    print_report(&report);
    write_cert(cert, &certificate)?;
    println!("RESULT {} {}", report.lower, report.upper);
    Ok(Status::Ok)
}

fn verify(cert_path: &Path, path: &Path, other: Option<&Path>) -> Result<Status> {
    let text = fs::read_to_string(cert_path)
        .with_context(|| format!("reading {}", cert_path.display()))?;
    let cert = Certificate::from_json(&text)?;
    let g = read_graph(path)?;
    let verification = match other {
        Some(other) => cert.verify_product(&g, &read_graph(other)?)?,
        None => cert.verify(&g)?,
    };
    for line in &verification.details {
        eprintln!("{line}");
    }
    if verification.ok {
        eprintln!("certificate is valid");
        println!("RESULT valid");
        Ok(Status::Ok)
    } else {
        println!("RESULT invalid");
        Ok(Status::Rejected)
    }
}
