//! `fewlen`: generate graphs, draw them with few distinct edge lengths,
//! verify drawings, search for drawings, and evaluate bounds.
//!
//! Exit codes: 0 success, 2 usage or input error, 3 a construction exceeded
//! its own bound, 4 `verify` found a degenerate drawing.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fewlen_core::bounds::{self, BoundsReport};
use fewlen_core::constructions::{
    self, collinear_path_drawing, draw_cartesian_product, draw_complete_bipartite_ngon, draw_complete_ngon,
    draw_from_ordering, draw_h_partition, draw_k2n, draw_k3n, draw_k4minus_free, draw_tree_unit,
    draw_treewidth_pipeline, ConstructionResult,
};
use fewlen_core::geometry::{parse_drawing, to_json, to_svg, verify_drawing, DrawingJson, Tolerances};
use fewlen_core::graph::{bandwidth_ordering, is_k4minus_free, layer_partition, parse_graph_text, write_graph6, Family};
use fewlen_core::search::{search_min_k_with, Budget, SearchOptions};
use fewlen_core::{Drawing, DrawingKind, Error, Graph, Point};

#[derive(Parser, Debug)]
#[command(name = "fewlen", version, about = "Graph drawings with few distinct edge lengths")]
struct Cli {
    /// Seed for every random choice (falls back to FEWLEN_SEED, then 0).
    #[arg(long, global = true, env = "FEWLEN_SEED", default_value_t = 0)]
    seed: u64,
    /// Relative tolerance for grouping edge lengths.
    #[arg(long, global = true, default_value_t = 1e-9)]
    rel_tol: f64,
    /// Coincidence tolerance, relative to the drawing's diameter.
    #[arg(long, global = true, default_value_t = 1e-9)]
    abs_tol: f64,
    /// Worker threads for parallel restarts (results do not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a family member as graph6.
    Gen {
        /// Family descriptor, e.g. complete:5 or frame:18.
        descriptor: Option<String>,
        /// List the descriptor syntax of every family.
        #[arg(long)]
        list_families: bool,
    },
    /// Draw a graph with one of the constructions.
    Draw(DrawArgs),
    /// Check a drawing JSON file ("-" for stdin).
    Verify { path: String },
    /// Search for a drawing with few lengths.
    Search(SearchArgs),
    /// Evaluate a closed-form bound.
    Bounds(BoundsArgs),
}

#[derive(Args, Debug)]
struct Input {
    /// Family descriptor (see `gen --list-families`).
    #[arg(long)]
    family: Option<String>,
    /// Graph source: g6:<graph6>, file:<path> (graph6 or edge list) or a
    /// family descriptor.
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Auto,
    Ngon,
    Bipartite,
    K2n,
    K3n,
    TreeUnit,
    K4minus,
    Ordering,
    Hpartition,
    Treewidth,
    Product,
}

#[derive(Args, Debug)]
struct DrawArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = Strategy::Auto)]
    strategy: Strategy,
    /// Factor descriptors for `--strategy product` (two or more).
    #[arg(long = "factor")]
    factors: Vec<String>,
    /// Write the drawing JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG rendering.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value_t = 5)]
    kmax: usize,
    /// Solver restarts (e.g. 2000), or a wall-clock limit such as 60s
    /// (not reproducible).
    #[arg(long, default_value = "2000")]
    budget: String,
    /// Allow vertices on edges.
    #[arg(long)]
    degenerate: bool,
    /// Forbid non-adjacent pairs at any edge length.
    #[arg(long)]
    unit_exclusion: bool,
    /// Write the best drawing JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Formula {
    Lower,
    Ex,
    Regular,
    Matchings,
    ZeroPatterns,
    GraphCount,
    Degree7Exponent,
    Degree8Exponent,
    DegreeExponents,
    PolyExponent,
    Treewidth,
    HPartition,
    TreePartition,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    formula: Formula,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    w: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    /// Value of the unspecified constant in density bounds.
    #[arg(long, default_value_t = 1.0)]
    c: f64,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // a second initialisation can only fail if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CliResult<u8> {
    match &cli.command {
        Command::Gen { descriptor, list_families } => cmd_gen(descriptor.as_deref(), *list_families),
        Command::Draw(a) => cmd_draw(cli, a),
        Command::Verify { path } => cmd_verify(cli, path),
        Command::Search(a) => cmd_search(cli, a),
        Command::Bounds(a) => cmd_bounds(cli, a),
    }
}

fn cmd_gen(descriptor: Option<&str>, list: bool) -> CliResult<u8> {
    if list {
        for (syntax, what) in Family::SYNTAX {
            println!("{syntax:<30} {what}");
        }
        return Ok(0);
    }
    let d = descriptor.ok_or_else(|| Failure::usage("gen needs a family descriptor (or --list-families)"))?;
    let g = d.parse::<Family>()?.build()?;
    println!("{}", write_graph6(&g));
    Ok(0)
}

fn read_source(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("reading {path}: {e}")))
    }
}

fn load_graph(input: &Input) -> CliResult<Graph> {
    match (&input.family, &input.graph) {
        (Some(f), None) => Ok(f.parse::<Family>()?.build()?),
        (None, Some(src)) => {
            if let Some(g6) = src.strip_prefix("g6:") {
                Ok(parse_graph_text(g6)?)
            } else if let Some(path) = src.strip_prefix("file:") {
                Ok(parse_graph_text(&read_source(path)?)?)
            } else {
                Ok(src.parse::<Family>()?.build()?)
            }
        }
        (None, None) => Err(Failure::usage("give exactly one of --family or --graph")),
        (Some(_), Some(_)) => Err(Failure::usage("give exactly one of --family or --graph, not both")),
    }
}

fn write_out(path: &PathBuf, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("writing {}: {e}", path.display())))
}

/// Moves a construction on canonical labels (`sides.0` first, then
/// `sides.1`) onto the labels of `g`.
fn onto(g: &Graph, sides: (&[usize], &[usize]), d: &Drawing) -> CliResult<Drawing> {
    let mut pos = vec![Point::ORIGIN; g.n()];
    for (i, &v) in sides.0.iter().chain(sides.1).enumerate() {
        pos[v] = d.pos[i];
    }
    Ok(Drawing::new(g.clone(), pos, d.kind)?)
}

fn bipartite_with_side(g: &Graph, size: usize, name: &str) -> CliResult<(Vec<usize>, Vec<usize>)> {
    let (a, b) = g
        .complete_bipartite_sides()
        .ok_or_else(|| Failure::usage(format!("strategy {name} needs a complete bipartite graph")))?;
    if a.len() == size {
        Ok((a, b))
    } else if b.len() == size {
        Ok((b, a))
    } else {
        Err(Failure::usage(format!("strategy {name} needs a side with {size} vertices")))
    }
}

fn relabelled(g: &Graph, sides: (&[usize], &[usize]), r: ConstructionResult) -> CliResult<ConstructionResult> {
    Ok(ConstructionResult { drawing: onto(g, sides, &r.drawing)?, ..r })
}

fn auto_strategy(g: &Graph) -> Strategy {
    if g.n() >= 3 && g.is_complete() {
        Strategy::Ngon
    } else if let Some((a, b)) = g.complete_bipartite_sides() {
        if a.len() == 2 || b.len() == 2 {
            Strategy::K2n
        } else {
            Strategy::Bipartite
        }
    } else if g.is_tree() {
        Strategy::TreeUnit
    } else if g.n() >= 2 && g.is_connected() && is_k4minus_free(g).free {
        Strategy::K4minus
    } else {
        Strategy::Ordering
    }
}

fn construct(g: &Graph, strategy: Strategy, seed: u64) -> CliResult<ConstructionResult> {
    Ok(match strategy {
        Strategy::Auto => construct(g, auto_strategy(g), seed)?,
        Strategy::Ngon => {
            if !g.is_complete() {
                return Err(Failure::usage("strategy ngon needs a complete graph"));
            }
            draw_complete_ngon(g.n())?
        }
        Strategy::Bipartite => {
            let (a, b) = g
                .complete_bipartite_sides()
                .ok_or_else(|| Failure::usage("strategy bipartite needs a complete bipartite graph"))?;
            relabelled(g, (&a, &b), draw_complete_bipartite_ngon(a.len(), b.len())?)?
        }
        Strategy::K2n => {
            let (a, b) = bipartite_with_side(g, 2, "k2n")?;
            relabelled(g, (&a, &b), draw_k2n(b.len(), seed)?)?
        }
        Strategy::K3n => {
            let (a, b) = bipartite_with_side(g, 3, "k3n")?;
            relabelled(g, (&a, &b), draw_k3n(b.len())?)?
        }
        Strategy::TreeUnit => {
            if !g.is_tree() {
                return Err(Failure::usage("strategy tree-unit needs a tree"));
            }
            draw_tree_unit(g)?
        }
        Strategy::K4minus => draw_k4minus_free(g, seed)?,
        Strategy::Ordering => draw_from_ordering(g, &bandwidth_ordering(g))?,
        Strategy::Hpartition => {
            let part = layer_partition(g)?;
            let h = collinear_path_drawing(&part.quotient)?;
            draw_h_partition(g, &part, &h, seed)?.result
        }
        Strategy::Treewidth => draw_treewidth_pipeline(g, seed)?.result,
        Strategy::Product => return Err(Failure::usage("strategy product takes --factor descriptors, not a graph")),
    })
}

fn construct_product(factors: &[String], seed: u64) -> CliResult<ConstructionResult> {
    if factors.len() < 2 {
        return Err(Failure::usage("strategy product needs at least two --factor descriptors"));
    }
    let mut acc: Option<ConstructionResult> = None;
    for (i, f) in factors.iter().enumerate() {
        let g = f.parse::<Family>()?.build()?;
        let r = construct(&g, Strategy::Auto, seed.wrapping_add(i as u64))?;
        acc = Some(match acc {
            None => r,
            Some(prev) => draw_cartesian_product(&prev.drawing, &r.drawing, seed.wrapping_add(i as u64))?,
        });
    }
    Ok(acc.expect("at least two factors"))
}

fn cmd_draw(cli: &Cli, a: &DrawArgs) -> CliResult<u8> {
    let result = if a.strategy == Strategy::Product {
        if a.input.family.is_some() || a.input.graph.is_some() {
            return Err(Failure::usage("strategy product builds its graph from --factor descriptors"));
        }
        construct_product(&a.factors, cli.seed)?
    } else {
        if !a.factors.is_empty() {
            return Err(Failure::usage("--factor is only used with --strategy product"));
        }
        construct(&load_graph(&a.input)?, a.strategy, cli.seed)?
    };
    let json = to_json(&result.drawing, Some(cli.seed));
    match &a.out {
        Some(p) => write_out(p, &json)?,
        None => print!("{json}"),
    }
    if let Some(p) = &a.svg {
        write_out(p, &to_svg(&result.drawing, cli.rel_tol))?;
    }
    let report = result.report(cli.rel_tol);
    println!("{report}");
    if report.measured > report.bound {
        eprintln!("error: self-check failed, {} lengths exceed the bound {}", report.measured, report.bound);
        return Ok(3);
    }
    Ok(0)
}

#[derive(Serialize)]
struct WithSeed<'a, T: Serialize> {
    #[serde(flatten)]
    body: &'a T,
    seed: u64,
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string(v).expect("output serializes"));
}

fn cmd_verify(cli: &Cli, path: &str) -> CliResult<u8> {
    let d = parse_drawing(&read_source(path)?)?;
    let report = verify_drawing(&d, &Tolerances { rel_tol: cli.rel_tol, abs_tol: cli.abs_tol });
    print_json(&WithSeed { body: &report, seed: cli.seed });
    Ok(if report.is_degenerate { 4 } else { 0 })
}

fn parse_budget(s: &str) -> CliResult<Budget> {
    let bad = || Failure::usage(format!("bad budget {s:?}: use a restart count or seconds such as 60s"));
    if let Some(secs) = s.strip_suffix('s') {
        let secs: f64 = secs.parse().map_err(|_| bad())?;
        if !(secs.is_finite() && secs > 0.0) {
            return Err(bad());
        }
        Ok(Budget::wall(Duration::from_secs_f64(secs)))
    } else {
        Ok(Budget::work(s.parse().map_err(|_| bad())?))
    }
}

#[derive(Serialize)]
struct SearchOutput {
    k_achieved: Option<usize>,
    residual: Option<f64>,
    iterations: usize,
    work_used: u64,
    method: String,
    kmax: usize,
    budget: String,
    seed: u64,
    drawing: Option<DrawingJson>,
}

fn cmd_search(cli: &Cli, a: &SearchArgs) -> CliResult<u8> {
    if a.kmax == 0 {
        return Err(Failure::usage("--kmax must be at least 1"));
    }
    let g = load_graph(&a.input)?;
    let budget = parse_budget(&a.budget)?;
    let opts = SearchOptions {
        kind: if a.degenerate { DrawingKind::DegenerateAllowed } else { DrawingKind::Strict },
        unit_exclusion: a.unit_exclusion,
        ..SearchOptions::default()
    };
    let r = search_min_k_with(&g, a.kmax, budget, cli.seed, &opts);
    if let Some(d) = &r.best_drawing {
        if let Some(p) = &a.out {
            write_out(p, &to_json(d, Some(cli.seed)))?;
        }
        if let Some(p) = &a.svg {
            write_out(p, &to_svg(d, cli.rel_tol))?;
        }
    }
    let s = r.summary();
    print_json(&SearchOutput {
        k_achieved: s.k_achieved,
        residual: s.residual,
        iterations: s.iterations,
        work_used: s.work_used,
        method: s.method,
        kmax: a.kmax,
        budget: a.budget.clone(),
        seed: cli.seed,
        drawing: r.best_drawing.as_ref().map(|d| DrawingJson::from_drawing(d, Some(cli.seed))),
    });
    Ok(0)
}

fn need<T: Copy>(v: Option<T>, name: &str, formula: &str) -> CliResult<T> {
    v.ok_or_else(|| Failure::usage(format!("formula {formula} needs --{name}")))
}

#[derive(Serialize)]
struct SimpleValue {
    name: String,
    value: f64,
}

fn simple_report(formula: &str, params: &[(&str, f64)], name: &str, value: f64) -> serde_json::Value {
    #[derive(Serialize)]
    struct Simple<'a> {
        formula: &'a str,
        params: Vec<bounds::Param>,
        values: Vec<SimpleValue>,
        constants_policy: &'a str,
    }
    serde_json::to_value(Simple {
        formula,
        params: params.iter().map(|&(n, v)| bounds::Param { name: n.into(), value: v }).collect(),
        values: vec![SimpleValue { name: name.into(), value }],
        constants_policy: bounds::CONSTANTS_POLICY,
    })
    .expect("report serializes")
}

fn cmd_bounds(cli: &Cli, a: &BoundsArgs) -> CliResult<u8> {
    let name = a.formula.to_possible_value().expect("named variant").get_name().to_string();
    let f = name.as_str();
    let report: serde_json::Value = match a.formula {
        Formula::Lower => to_value(bounds::eval_lower_bounds(need(a.n, "n", f)?, need(a.m, "m", f)?, a.c)?.report()),
        Formula::Ex => to_value(bounds::eval_ex_bound(need(a.n, "n", f)?, need(a.d, "d", f)?, a.c)?.report()),
        Formula::Regular => to_value(bounds::eval_regular_count_bound(need(a.n, "n", f)?, need(a.delta, "delta", f)?)?.report()),
        Formula::Matchings => {
            let n = need(a.n, "n", f)?;
            let v = bounds::count_perfect_matchings(n)?;
            exact_report(f, &[("n", n as f64)], "matchings", &v)
        }
        Formula::ZeroPatterns => {
            let (d, t, p) = (need(a.d, "d", f)? as u64, need(a.t, "t", f)?, need(a.p, "p", f)?);
            let v = bounds::eval_zero_pattern_bound(d, t, p)?;
            exact_report(f, &[("d", d as f64), ("t", t as f64), ("p", p as f64)], "zero_patterns", &v)
        }
        Formula::GraphCount => to_value(
            bounds::eval_graph_count_bound(need(a.n, "n", f)?, need(a.m, "m", f)?, need(a.d, "d", f)?, a.c)?.report(),
        ),
        Formula::Degree7Exponent | Formula::Degree8Exponent => {
            let (delta, eps) = (need(a.delta, "delta", f)?, need(a.eps, "eps", f)?);
            let e = bounds::eval_degree_lower_exponents(delta, eps)?;
            if a.formula == Formula::Degree7Exponent {
                let v = e.degree7.ok_or_else(|| Failure::usage("the degree-7 exponent needs --delta >= 7"))?;
                simple_report(f, &[("delta", delta as f64), ("eps", eps)], "exponent", v)
            } else {
                simple_report(f, &[("delta", delta as f64), ("eps", eps)], "exponent", e.degree8)
            }
        }
        Formula::DegreeExponents => {
            to_value(bounds::eval_degree_lower_exponents(need(a.delta, "delta", f)?, need(a.eps, "eps", f)?)?.report())
        }
        Formula::PolyExponent => {
            let (al, be) = (need(a.alpha, "alpha", f)?, need(a.beta, "beta", f)?);
            let (delta, eps) = (need(a.delta, "delta", f)?, need(a.eps, "eps", f)?);
            let v = bounds::poly_bound_exponent(al, be, delta as f64, eps);
            simple_report(f, &[("alpha", al), ("beta", be), ("delta", delta as f64), ("eps", eps)], "exponent", v)
        }
        Formula::Treewidth => {
            let (n, delta, w) = (need(a.n, "n", f)?, need(a.delta, "delta", f)?, need(a.w, "w", f)?);
            let v = constructions::treewidth_formula_bound(n, delta, w);
            simple_report(f, &[("n", n as f64), ("delta", delta as f64), ("w", w as f64)], "lengths", v)
        }
        Formula::HPartition => {
            let (s, l, w) = (need(a.s, "s", f)?, need(a.l, "l", f)?, need(a.w, "w", f)?);
            let v = constructions::h_partition_bound(s, l, w) as f64;
            simple_report(f, &[("s", s as f64), ("l", l as f64), ("w", w as f64)], "lengths", v)
        }
        Formula::TreePartition => {
            let (k, delta) = (need(a.k, "k", f)?, need(a.delta, "delta", f)?);
            let v = fewlen_core::graph::tree_partition_bound(k, delta);
            simple_report(f, &[("k", k as f64), ("delta", delta as f64)], "width", v)
        }
    };
    print_json(&WithSeed { body: &report, seed: cli.seed });
    Ok(0)
}

fn to_value(r: BoundsReport) -> serde_json::Value {
    serde_json::to_value(r).expect("report serializes")
}

fn exact_report(formula: &str, params: &[(&str, f64)], name: &str, v: &num_bigint::BigUint) -> serde_json::Value {
    #[derive(Serialize)]
    struct Exact<'a> {
        formula: &'a str,
        params: Vec<bounds::Param>,
        values: Vec<ExactValue>,
        constants_policy: &'a str,
    }
    #[derive(Serialize)]
    struct ExactValue {
        name: String,
        value: Option<f64>,
        exact: String,
    }
    serde_json::to_value(Exact {
        formula,
        params: params.iter().map(|&(n, v)| bounds::Param { name: n.into(), value: v }).collect(),
        values: vec![ExactValue { name: name.into(), value: num_traits::ToPrimitive::to_f64(v), exact: v.to_string() }],
        constants_policy: bounds::CONSTANTS_POLICY,
    })
    .expect("report serializes")
}
