//! Command-line interface.
//!
//! Exit status: 0 on success, 2 when the input cannot be used (unreadable or
//! malformed file, graph of the wrong shape, unsupported order, bad flag),
//! 3 when a computation contradicts a prediction or the methods disagree,
//! 1 when output cannot be written.

use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use bicyclic_core::condition::InertiaPredicate;
use bicyclic_core::engine::graph_inertia;
use bicyclic_core::extremal::{
    bound_for, build_gstar, build_gstarstar, check_small_index, classify_rank, BoundReport, Claim, ClassificationResult,
    ExtremalError,
};
use bicyclic_core::lab::{
    census_graph, census_inputs, derive_condition, path_to_star, sort_records, star_merge, star_shift, summarize,
    CensusConfig, CensusFilter, CensusRecord, LabError, TwinMode,
};
use bicyclic_core::matrix::Inertia;
use bicyclic_core::rational::int;
use bicyclic_core::structure::{classify, StructureError};
use bicyclic_core::{
    congruence_inertia, descartes_inertia, structural_inertia, BaseFamily, BaseKind, Rational, WeightedGraph,
};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use thiserror::Error;

use crate::format::{self, parse_weight, FormatError};
use crate::report::{text_report, JsonReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_OUTPUT: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_DISAGREE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "bicyclic", version, about = "Exact inertia of weighted bicyclic graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print `i+ i- i0` and the rank of a graph file.
    Inertia {
        /// Graph file, `-` for standard input.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Engine)]
        method: Method,
    },
    /// Recognise the base of a bicyclic graph and compare predictions with the engine.
    Classify { file: PathBuf },
    /// Lower bounds for bicyclic graphs with pendant vertices.
    Bounds {
        /// Check a graph file against the bound for its base.
        #[arg(conflicts_with_all = ["family", "max_order"])]
        file: Option<PathBuf>,
        /// Report a single family, e.g. `theta(1,0,2)`.
        #[arg(long, value_parser = parse_family)]
        family: Option<BaseFamily>,
        /// With --family, build the extremal graph on this many vertices.
        #[arg(long, requires = "family")]
        n: Option<usize>,
        /// Write the extremal graph to this file.
        #[arg(long, requires = "n")]
        write: Option<PathBuf>,
        /// List every family whose base has at most this many vertices.
        #[arg(long, default_value_t = 8)]
        max_order: usize,
    },
    /// Every bicyclic graph of one order under every grid weighting of its base.
    Census {
        #[arg(long)]
        n: usize,
        /// Comma-separated positive weights for the base edges.
        #[arg(long, default_value = "1,2", value_parser = parse_weights)]
        grid: WeightList,
        /// Comma-separated clauses, e.g. `i+=2,kind=theta,pendants=no`.
        #[arg(long, default_value = "none", value_parser = parse_filter)]
        filter: CensusFilter,
        /// Overrides any `twins=` clause of the filter.
        #[arg(long, value_parser = parse_twins)]
        twins: Option<TwinMode>,
        #[arg(long, default_value = "1", value_parser = parse_one_weight)]
        tree_weight: Rational,
        /// Worker threads, 0 for one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Print the JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Apply an index-monotone surgery and report both sides.
    Transform {
        #[command(subcommand)]
        kind: Transform,
    },
    /// Search for the weight condition matching an inertia statement on a grid.
    DeriveCondition {
        #[arg(long, value_parser = parse_family)]
        family: BaseFamily,
        /// e.g. `i+=2` or `rank=3`.
        #[arg(long, value_parser = parse_predicate)]
        target: InertiaPredicate,
        #[arg(long, default_value = "1,2,3", value_parser = parse_weights)]
        grid: WeightList,
        /// Re-check every derived condition on a second grid.
        #[arg(long, value_parser = parse_weights)]
        holdout: Option<WeightList>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Transform {
    /// Hang a star from `u`, then move its leaves onto `u`.
    StarShift {
        file: PathBuf,
        #[arg(long)]
        u: usize,
        #[arg(long, default_value = "1", value_parser = parse_one_weight)]
        link: Rational,
        #[arg(long, default_value = "1", value_parser = parse_weights)]
        leaves: WeightList,
        #[command(flatten)]
        out: TransformOutput,
    },
    /// Pendants on `u1` and `u2`, then all of them on `u1`.
    StarMerge {
        file: PathBuf,
        #[arg(long)]
        u1: usize,
        #[arg(long)]
        u2: usize,
        #[arg(long, default_value = "1", value_parser = parse_weights)]
        at_u1: WeightList,
        #[arg(long, default_value = "1", value_parser = parse_weights)]
        at_u2: WeightList,
        #[command(flatten)]
        out: TransformOutput,
    },
    /// Join two graphs by a path, then collapse the path into a star.
    PathToStar {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        /// Path edge weights, at least two.
        #[arg(long, default_value = "1,1", value_parser = parse_weights)]
        path: WeightList,
        #[command(flatten)]
        out: TransformOutput,
    },
}

#[derive(Debug, clap::Args)]
pub struct TransformOutput {
    /// Write the first graph here.
    #[arg(long)]
    pub before: Option<PathBuf>,
    /// Write the second graph here.
    #[arg(long)]
    pub after: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Congruence elimination.
    Engine,
    /// Pendant reduction with path and cycle formulas.
    Closed,
    /// Sign changes of the characteristic polynomial.
    Oracle,
    /// All three, compared.
    All,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Engine => "engine",
            Method::Closed => "closed",
            Method::Oracle => "oracle",
            Method::All => "all",
        })
    }
}

/// Comma-separated weights; the empty string is the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightList(pub Vec<Rational>);

fn parse_weights(s: &str) -> Result<WeightList, String> {
    if s.trim().is_empty() {
        return Ok(WeightList(Vec::new()));
    }
    s.split(',').map(|w| parse_weight(w.trim()).map_err(|e| e.to_string())).collect::<Result<_, _>>().map(WeightList)
}

fn parse_one_weight(s: &str) -> Result<Rational, String> {
    parse_weight(s.trim()).map_err(|e| e.to_string())
}

fn parse_family(s: &str) -> Result<BaseFamily, String> {
    let f = BaseFamily::from_str(s).map_err(|e| e.to_string())?;
    if f.is_valid() {
        Ok(f)
    } else {
        Err(format!("{s} is not a bicyclic base"))
    }
}

fn parse_predicate(s: &str) -> Result<InertiaPredicate, String> {
    s.parse().map_err(|e: bicyclic_core::condition::ConditionError| e.to_string())
}

fn parse_filter(s: &str) -> Result<CensusFilter, String> {
    s.parse().map_err(|e: LabError| e.to_string())
}

fn parse_twins(s: &str) -> Result<TwinMode, String> {
    s.parse().map_err(|e: LabError| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    Lab(#[from] LabError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Output(_) => EXIT_OUTPUT,
            _ => EXIT_INPUT,
        }
    }
}

type Outcome = Result<u8, CliError>;

/// Runs one command, printing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match cli.command {
        Command::Inertia { file, method } => inertia(&file, method, out, err),
        Command::Classify { file } => classify_cmd(&file, out),
        Command::Bounds { file, family, n, write, max_order } => bounds(file.as_deref(), family, n, write.as_deref(), max_order, out),
        Command::Census { n, grid, mut filter, twins, tree_weight, jobs, json, report } => {
            if let Some(t) = twins {
                filter.twins = t;
            }
            let cfg = CensusConfig { n, grid: grid.0, tree_weight, filter };
            census_cmd(&cfg, jobs, json, report.as_deref(), out)
        }
        Command::Transform { kind } => transform(kind, out),
        Command::DeriveCondition { family, target, grid, holdout } => derive(family, target, &grid.0, holdout, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn inertia_line(i: &Inertia) -> String {
    format!("{i} rank {}", i.rank())
}

fn inertia(file: &Path, method: Method, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let g = format::read_graph(file)?;
    let m = g.adjacency_matrix();
    let compute = |method| match method {
        Method::Closed => structural_inertia(&g),
        Method::Oracle => descartes_inertia(&m),
        _ => congruence_inertia(&m),
    };
    if method != Method::All {
        let i = compute(method);
        writeln!(out, "{i}\nrank {}", i.rank())?;
        return Ok(EXIT_OK);
    }
    let results: Vec<(Method, Inertia)> =
        [Method::Engine, Method::Closed, Method::Oracle].into_iter().map(|m| (m, compute(m))).collect();
    let first = results[0].1;
    if results.iter().all(|(_, i)| *i == first) {
        writeln!(out, "{first}\nrank {}", first.rank())?;
        for (m, i) in &results {
            writeln!(out, "{m} {i}")?;
        }
        writeln!(out, "methods agree")?;
        return Ok(EXIT_OK);
    }
    for (m, i) in &results {
        writeln!(out, "{m} {i}")?;
    }
    let detail: Vec<String> = results.iter().map(|(m, i)| format!("{m} {i}")).collect();
    writeln!(err, "discrepancy: {}", detail.join(", "))?;
    Ok(EXIT_DISAGREE)
}

fn join(ws: &[Rational]) -> String {
    if ws.is_empty() {
        return "-".into();
    }
    ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn claim(name: &str, c: Option<Claim>) -> Option<String> {
    c.map(|c| format!("{name}{c}"))
}

fn prediction_line(what: &str, r: &ClassificationResult, out: &mut dyn Write) -> io::Result<()> {
    let label = r.matched_theorem.unwrap_or("unmatched");
    if r.deferred {
        return writeln!(out, "{what} [{label}] deferred: the printed conditions disagree, see derive-condition");
    }
    let claims: Vec<String> =
        [claim("i+", r.pos), claim("i-", r.neg), claim("rank", r.rank)].into_iter().flatten().collect();
    if claims.is_empty() {
        writeln!(out, "{what} [{label}] no prediction")
    } else {
        let verdict = if r.agrees() { "holds" } else { "fails" };
        writeln!(out, "{what} [{label}] predicted {}: {verdict}", claims.join(" "))
    }
}

/// The general pendant bound: kind-wide floor on `i+`, `i-` and ceiling on `i0`.
fn general_bound(kind: BaseKind) -> (&'static str, usize, usize) {
    match kind {
        BaseKind::Infinity => ("Thm 3.3", 3, 6),
        BaseKind::Theta => ("Thm 3.7", 2, 4),
    }
}

/// Prints the pendant bounds for a graph; true when all hold.
fn check_pendant_bounds(family: &BaseFamily, g: &WeightedGraph, i: &Inertia, out: &mut dyn Write) -> Result<bool, CliError> {
    let (label, floor, gap) = general_bound(family.kind);
    let n = g.order();
    let general = i.pos >= floor && i.neg >= floor && i.zero + gap <= n;
    writeln!(
        out,
        "general [{label}] i+>={floor} i->={floor} i0<={}: {}",
        n.saturating_sub(gap),
        if general { "holds" } else { "fails" }
    )?;
    let bound = bound_for(family)?;
    let specific = bound.admits(i);
    writeln!(out, "bound {bound}: {}", if specific { "holds" } else { "fails" })?;
    Ok(general && specific)
}

fn classify_cmd(file: &Path, out: &mut dyn Write) -> Outcome {
    let g = format::read_graph(file)?;
    let c = classify(&g)?;
    let base = &c.base;
    let f = base.family;
    writeln!(out, "family {f}")?;
    writeln!(out, "kind {} p={} l={} q={}", f.kind, f.p, f.l, f.q)?;
    writeln!(out, "order {} pendants {}", g.order(), if c.has_pendants { "yes" } else { "no" })?;
    writeln!(out, "a {}\nb {}\nc {}", join(&base.a), join(&base.b), join(&base.c))?;
    let engine = graph_inertia(&g);
    let ok = if c.has_pendants {
        check_pendant_bounds(&f, &g, &engine, out)?
    } else {
        let small = check_small_index(base);
        let rank = classify_rank(base);
        prediction_line("small-index", &small, out)?;
        prediction_line("rank", &rank, out)?;
        for check in &small.conditions {
            let value = match check.value {
                Some(true) => "true",
                Some(false) => "false",
                None => "n/a",
            };
            let text = if check.text.is_empty() { "always" } else { check.text.as_str() };
            writeln!(out, "condition [{}] {} if {text}: {value}", check.source, check.target)?;
        }
        small.agrees() && rank.agrees()
    };
    writeln!(out, "engine {}", inertia_line(&engine))?;
    Ok(if ok { EXIT_OK } else { EXIT_DISAGREE })
}

fn ones(k: usize) -> Vec<Rational> {
    vec![int(1); k]
}

fn construction(family: &BaseFamily, n: usize) -> Result<(String, WeightedGraph), CliError> {
    let (p, l, q) = (family.p, family.l, family.q);
    Ok(match family.kind {
        BaseKind::Infinity => {
            (format!("G* on infinity({p},1,{q})"), build_gstar(p, q, n, &ones(p), &ones(q))?)
        }
        BaseKind::Theta => (format!("G** on {family}"), build_gstarstar((p, l, q), n, &ones(p + 1), &ones(l + 1), &ones(q + 1))?),
    })
}

fn bounds(
    file: Option<&Path>,
    family: Option<BaseFamily>,
    n: Option<usize>,
    write: Option<&Path>,
    max_order: usize,
    out: &mut dyn Write,
) -> Outcome {
    if let Some(file) = file {
        let g = format::read_graph(file)?;
        let c = classify(&g)?;
        writeln!(out, "family {}", c.base.family)?;
        if !c.has_pendants {
            writeln!(out, "no pendant vertices: the bounds do not apply")?;
            return Ok(EXIT_OK);
        }
        let i = graph_inertia(&g);
        let ok = check_pendant_bounds(&c.base.family, &g, &i, out)?;
        writeln!(out, "engine {}", inertia_line(&i))?;
        return Ok(if ok { EXIT_OK } else { EXIT_DISAGREE });
    }
    let Some(family) = family else {
        for f in BaseFamily::all_up_to(max_order) {
            writeln!(out, "{}", bound_for(&f)?)?;
        }
        return Ok(EXIT_OK);
    };
    let bound: BoundReport = bound_for(&family)?;
    writeln!(out, "{bound}")?;
    let Some(n) = n else {
        return Ok(EXIT_OK);
    };
    let (name, g) = construction(&family, n)?;
    let i = graph_inertia(&g);
    let verdict = match i.pos.min(i.neg) {
        m if m == bound.effective_bound => "attains the bound",
        m if m > bound.effective_bound => "exceeds the bound",
        _ => "violates the bound",
    };
    writeln!(out, "{name} order {n}: {} ({verdict})", inertia_line(&i))?;
    if let Some(path) = write {
        format::save_graph(path, &g)?;
    }
    Ok(if bound.admits(&i) { EXIT_OK } else { EXIT_DISAGREE })
}

fn run_census(cfg: &CensusConfig, jobs: usize) -> Result<Vec<CensusRecord>, CliError> {
    let inputs = census_inputs(cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    let per_graph: Vec<Vec<CensusRecord>> =
        pool.install(|| inputs.par_iter().map(|g| census_graph(g, cfg)).collect::<Result<_, _>>())?;
    let mut records: Vec<CensusRecord> = per_graph.into_iter().flatten().collect();
    sort_records(&mut records);
    Ok(records)
}

fn census_cmd(cfg: &CensusConfig, jobs: usize, json: bool, report: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let records = run_census(cfg, jobs)?;
    let summary = summarize(&records);
    let needs_json = json || report.is_some();
    let json_text = needs_json.then(|| JsonReport::new(cfg, &records, &summary).to_json());
    if let (Some(path), Some(text)) = (report, &json_text) {
        std::fs::write(path, format!("{text}\n"))
            .map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    }
    match (&json_text, json) {
        (Some(text), true) => writeln!(out, "{text}")?,
        _ => out.write_all(text_report(cfg, &records, &summary).as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn transform(kind: Transform, out: &mut dyn Write) -> Outcome {
    let (pair, dest) = match kind {
        Transform::StarShift { file, u, link, leaves, out } => {
            (star_shift(&format::read_graph(&file)?, u, &link, &leaves.0)?, out)
        }
        Transform::StarMerge { file, u1, u2, at_u1, at_u2, out } => {
            (star_merge(&format::read_graph(&file)?, u1, u2, &at_u1.0, &at_u2.0)?, out)
        }
        Transform::PathToStar { first, second, u, v, path, out } => {
            let (g1, g2) = (format::read_graph(&first)?, format::read_graph(&second)?);
            (path_to_star(&g1, &g2, u, v, &path.0)?, out)
        }
    };
    let (a, b) = (graph_inertia(&pair.0), graph_inertia(&pair.1));
    writeln!(out, "before {}\nafter {}", inertia_line(&a), inertia_line(&b))?;
    let monotone = a.pos >= b.pos && a.neg >= b.neg;
    writeln!(out, "monotone {}", if monotone { "yes" } else { "no" })?;
    if let Some(path) = dest.before {
        format::save_graph(&path, &pair.0)?;
    }
    if let Some(path) = dest.after {
        format::save_graph(&path, &pair.1)?;
    }
    Ok(if monotone { EXIT_OK } else { EXIT_DISAGREE })
}

fn derive(family: BaseFamily, target: InertiaPredicate, grid: &[Rational], holdout: Option<WeightList>, out: &mut dyn Write) -> Outcome {
    let report = derive_condition(family, target, grid)?;
    write!(out, "{report}")?;
    let Some(holdout) = holdout else {
        return Ok(EXIT_OK);
    };
    let mut ok = true;
    for r in report.revalidate(&holdout.0)? {
        ok &= r.holds();
        writeln!(out, "holdout {{{}}} {}: {}/{} mismatches", join(&holdout.0), r.condition, r.mismatches, r.assignments)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_DISAGREE })
}
