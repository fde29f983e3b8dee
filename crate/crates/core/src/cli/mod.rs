//! Command-line front end. [`run`] parses the arguments, writes results to
//! standard output and returns the process exit code: 0 on success, 2 on a
//! usage error and 1 on a computation error. Every error is a single
//! `code: message` line on standard error.

mod spec;
mod verify;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{CharacterTable, GroupDescriptor};
use crate::scheme::SchemeSpec;
use crate::spectral::{
    catalog, catalog_names, catalog_parameters, compare_with_reference, continuous_line_distribution, golub_welsch,
    jacobi_from_intersection, meixner_distribution, srg_distribution, DiscreteDistribution, DEFAULT_TAIL_TOLERANCE,
};
use crate::walk::{
    average_eigen, average_group, average_spectral, cayley_distribution, dispatch, hamming_eigenstructure,
    hamming_walk, vertex_averages, Engine, WalkRequest,
};

pub use spec::parse_graph_spec;
pub use verify::{verify, Check};

/// Overrides the truncation tolerance of infinite spectral distributions.
pub const TAIL_TOL_VAR: &str = "SCHEME_WALK_TAIL_TOL";

#[derive(Parser, Debug)]
#[command(
    name = "scheme-walk",
    version,
    about = "Continuous-time quantum walks on association schemes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stratum (or vertex) amplitudes over a time grid.
    Walk(WalkArgs),
    /// Spectral distribution of the adjacency in the root state.
    Spectrum(SpectrumArgs),
    /// Long-time average probabilities per stratum.
    Average(AverageArgs),
    /// Character table of a group as CSV.
    Characters(CharactersArgs),
    /// Named distance-regular graphs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Checks the engines against the explicit graph.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct GraphArg {
    /// `catalog:name[:p1,p2]`, `srg:n,k,l,m`, `group:kind:n[:class]`,
    /// `product:n,copies`, inline JSON or a JSON file.
    #[arg(long)]
    graph: String,
    /// Generating class index for group specs.
    #[arg(long)]
    class: Option<usize>,
}

#[derive(Args, Debug)]
struct TimeGrid {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    t0: f64,
    #[arg(long, allow_negative_numbers = true)]
    t1: Option<f64>,
    /// Number of grid points from t0 to t1 inclusive.
    #[arg(long)]
    steps: Option<usize>,
    /// Explicit comma-separated times.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["t1", "steps"], allow_negative_numbers = true)]
    times: Option<Vec<f64>>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Eigen,
    Character,
    Spectral,
    Auto,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Eigen => Engine::Eigen,
            EngineArg::Character => Engine::Character,
            EngineArg::Spectral => Engine::Spectral,
            EngineArg::Auto => Engine::Auto,
        }
    }
}

#[derive(Args, Debug)]
struct WalkArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[command(flatten)]
    grid: TimeGrid,
    #[arg(long, value_enum, default_value = "auto")]
    engine: EngineArg,
    /// Walk with the adjacency divided by the degree.
    #[arg(long)]
    normalized: bool,
    /// Report single-vertex amplitudes instead of stratum amplitudes.
    #[arg(long)]
    vertex_level: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "source")]
struct SpectrumSource {
    #[arg(long)]
    graph: Option<String>,
    /// Arcsine law of the infinite line, sampled at this many nodes.
    #[arg(long)]
    line_nodes: Option<usize>,
    /// Geometric atomic measure of the Johnson-graph limit, `0 < p < 1`.
    #[arg(long)]
    meixner: Option<f64>,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    #[command(flatten)]
    source: SpectrumSource,
    #[arg(long)]
    class: Option<usize>,
    /// Tail mass left out of infinite distributions.
    #[arg(long)]
    tail_tol: Option<f64>,
}

#[derive(Args, Debug)]
struct AverageArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long)]
    vertex_level: bool,
}

#[derive(Args, Debug)]
struct CharactersArgs {
    /// cyclic, dihedral or symmetric; alternatively a JSON descriptor.
    #[arg(long)]
    group: String,
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Names with their parameters and defaults.
    List,
    /// Intersection array and distribution of one entry.
    Show {
        name: String,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        params: Vec<i64>,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long, default_value_t = 20.0)]
    t1: f64,
    #[arg(long, default_value_t = 64)]
    steps: usize,
}

/// Failure classes of a command.
enum Failure {
    Usage(Error),
    Compute(Error),
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e)
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

/// Twelve decimals, with negative zero written as zero.
pub fn fmt12(x: f64) -> String {
    let s = format!("{x:.12}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

/// Rounded `(re, im, prob)` with `prob` taken from the rounded parts.
fn rounded(z: Complex64) -> (String, String, String) {
    let (re, im) = (fmt12(z.re), fmt12(z.im));
    let (r, i): (f64, f64) = (re.parse().unwrap(), im.parse().unwrap());
    (re, im, fmt12(r * r + i * i))
}

fn time_grid(grid: &TimeGrid) -> Result<Vec<f64>> {
    if let Some(times) = &grid.times {
        return Ok(times.clone());
    }
    match (grid.t1, grid.steps) {
        (Some(t1), Some(steps)) => {
            if steps == 0 {
                return Err(Error::BadParameter("--steps must be positive".into()));
            }
            if steps == 1 {
                return Ok(vec![grid.t0]);
            }
            let h = (t1 - grid.t0) / (steps - 1) as f64;
            Ok((0..steps).map(|i| grid.t0 + h * i as f64).collect())
        }
        _ => Err(Error::BadParameter("give --times or both --t1 and --steps".into())),
    }
}

fn graph_spec(arg: &GraphArg) -> std::result::Result<SchemeSpec, Failure> {
    let mut spec = parse_graph_spec(&arg.graph).map_err(usage)?;
    if let Some(c) = arg.class {
        match &mut spec {
            SchemeSpec::FromGroup { class, .. } => *class = Some(c),
            _ => return Err(usage(Error::BadParameter("--class applies to group specs only".into()))),
        }
    }
    Ok(spec)
}

fn tail_tolerance(flag: Option<f64>) -> Result<f64> {
    let tol = match (flag, std::env::var(TAIL_TOL_VAR)) {
        (Some(t), _) => t,
        (None, Ok(v)) => v
            .trim()
            .parse()
            .map_err(|_| Error::BadParameter(format!("{TAIL_TOL_VAR}={v} is not a number")))?,
        (None, Err(_)) => DEFAULT_TAIL_TOLERANCE,
    };
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::BadParameter(format!("tail tolerance {tol} outside (0, 1)")));
    }
    Ok(tol)
}

#[derive(Serialize)]
struct Record {
    t: f64,
    stratum: usize,
    re: f64,
    im: f64,
    prob: f64,
}

fn walk(args: &WalkArgs, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let spec = graph_spec(&args.graph)?;
    let times = time_grid(&args.grid).map_err(usage)?;
    let req = WalkRequest::new(spec, times)
        .engine(args.engine.into())
        .normalized(args.normalized);
    let mut series = dispatch(&req)?;
    if args.vertex_level {
        series = series.to_vertex();
    }
    let mut rows = Vec::new();
    for (t, amps) in series.times.iter().zip(&series.amplitudes) {
        for (k, z) in amps.iter().enumerate() {
            let (re, im, prob) = rounded(*z);
            rows.push((fmt12(*t), k, re, im, prob));
        }
    }
    let text = match args.format {
        Format::Csv => {
            let mut s = String::from("t,stratum,re,im,prob\n");
            for (t, k, re, im, prob) in &rows {
                s.push_str(&format!("{t},{k},{re},{im},{prob}\n"));
            }
            s
        }
        Format::Json => {
            let records: Vec<Record> = rows
                .iter()
                .map(|(t, k, re, im, prob)| Record {
                    t: t.parse().unwrap(),
                    stratum: *k,
                    re: re.parse().unwrap(),
                    im: im.parse().unwrap(),
                    prob: prob.parse().unwrap(),
                })
                .collect();
            serde_json::to_string_pretty(&records).map_err(|e| Error::Io(e.to_string()))? + "\n"
        }
    };
    write_all(out, &text)
}

fn write_all(out: &mut dyn Write, text: &str) -> std::result::Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Compute(Error::Io(e.to_string())))
}

fn distribution_csv(dist: &DiscreteDistribution) -> String {
    let mut s = String::from("atom,weight\n");
    for (x, w) in dist.atoms.iter().zip(&dist.weights) {
        s.push_str(&format!("{},{}\n", fmt12(*x), fmt12(*w)));
    }
    s
}

/// Discrete spectral distribution behind a spec.
pub fn spec_distribution(spec: &SchemeSpec) -> Result<DiscreteDistribution> {
    match spec {
        SchemeSpec::FromSrg { n, k, lambda, mu } => srg_distribution(*n, *k, *lambda, *mu),
        SchemeSpec::Product { n, copies } => hamming_walk(*n, *copies, &[]).map(|(_, d)| d),
        SchemeSpec::FromGroup { group, class } => {
            let table = group.character_table()?;
            let strata = group.strata(&table, *class)?;
            cayley_distribution(&table, &strata[1])
        }
        _ => golub_welsch(&jacobi_from_intersection(&spec.intersection_array()?)?),
    }
}

/// Long-time average probability per stratum, by the route `walk` uses
/// for the spec with the automatic engine.
pub fn spec_average(spec: &SchemeSpec) -> Result<(Vec<f64>, crate::scheme::ValencyVector)> {
    let hamming = |n: u64, d: u64| -> Result<_> {
        let es = hamming_eigenstructure(n, d)?;
        Ok((average_eigen(&es), es.valencies))
    };
    match spec {
        SchemeSpec::FromGroup { group, class } => {
            let table = group.character_table()?;
            let strata = group.strata(&table, *class)?;
            let sizes = strata
                .iter()
                .map(|p| p.iter().map(|&k| table.class_sizes[k]).sum())
                .collect();
            Ok((
                average_group(&table, &strata[1], &strata)?,
                crate::scheme::ValencyVector::from_sizes(sizes),
            ))
        }
        SchemeSpec::Product { n, copies } => hamming(*n, *copies),
        SchemeSpec::Catalog { name, params } if name == "hamming" => {
            let p = catalog(name, params)?.params;
            hamming(p[1] as u64, p[0] as u64)
        }
        _ => {
            let ia = spec.intersection_array()?;
            let jc = jacobi_from_intersection(&ia)?;
            let dist = spec_distribution(spec)?;
            Ok((
                average_spectral(&dist, &jc, &ia)?,
                crate::scheme::derive_stratum_sizes(&ia)?,
            ))
        }
    }
}

fn spectrum(args: &SpectrumArgs, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let src = &args.source;
    let text = if let Some(nodes) = src.line_nodes {
        if nodes == 0 {
            return Err(usage(Error::BadParameter("--line-nodes must be positive".into())));
        }
        let dist = continuous_line_distribution(nodes);
        let mut s = String::from("node,density_weight\n");
        for (x, w) in dist.quadrature() {
            s.push_str(&format!("{},{}\n", fmt12(x), fmt12(w)));
        }
        s
    } else if let Some(p) = src.meixner {
        let tol = tail_tolerance(args.tail_tol).map_err(usage)?;
        let atoms = meixner_distribution(p, tol).map_err(usage)?.truncated();
        let (x, w): (Vec<f64>, Vec<f64>) = atoms.into_iter().unzip();
        distribution_csv(&DiscreteDistribution::new(x, w)?)
    } else {
        let spec = graph_spec(&GraphArg {
            graph: src.graph.clone().unwrap_or_default(),
            class: args.class,
        })?;
        distribution_csv(&spec_distribution(&spec)?)
    };
    write_all(out, &text)
}

fn average(args: &AverageArgs, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let spec = graph_spec(&args.graph)?;
    let (mut avg, sizes) = spec_average(&spec)?;
    if args.vertex_level {
        avg = vertex_averages(&avg, &sizes);
    }
    let mut s = String::from("stratum,avg_prob\n");
    for (k, p) in avg.iter().enumerate() {
        s.push_str(&format!("{k},{}\n", fmt12(*p)));
    }
    write_all(out, &s)
}

fn group_descriptor(args: &CharactersArgs) -> Result<GroupDescriptor> {
    if args.group.trim_start().starts_with('{') {
        match parse_graph_spec(&format!(
            "{{\"kind\":\"group\",{}",
            args.group.trim_start().trim_start_matches('{')
        ))? {
            SchemeSpec::FromGroup { group, .. } => return Ok(group),
            _ => unreachable!("kind is group"),
        }
    }
    let n = args
        .n
        .ok_or_else(|| Error::BadParameter("--n is required with a group name".into()))?;
    GroupDescriptor::new(&args.group, n)
}

fn characters(args: &CharactersArgs, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let group = group_descriptor(args).map_err(usage)?;
    let table: CharacterTable = group.character_table()?;
    write_all(out, &table.to_csv())
}

fn catalog_command(action: &CatalogAction, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let text = match action {
        CatalogAction::List => {
            let mut s = String::from("name,parameters,defaults\n");
            for name in catalog_names() {
                let (names, defaults) = catalog_parameters(name)?;
                let defaults: Vec<String> = defaults.iter().map(|d| d.to_string()).collect();
                s.push_str(&format!("{name},{},{}\n", names.join(" "), defaults.join(" ")));
            }
            s
        }
        CatalogAction::Show { name, params } => {
            let entry = catalog(name, params).map_err(usage)?;
            let join = |v: &[u64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            let mut s = format!(
                "name,{}\nparameters,{}\nc_forward,{}\nb_backward,{}\n",
                entry.name,
                entry.params.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
                join(entry.array.c_forward()),
                join(entry.array.b_backward()),
            );
            if let Some(cmp) = compare_with_reference(&entry, 1e-9)? {
                s.push_str(&format!(
                    "reference_form,{}\n",
                    if cmp.matches() { "agrees" } else { "disagrees" }
                ));
                for m in &cmp.mismatches {
                    s.push_str(&format!("mismatch,{m}\n"));
                }
            }
            s.push('\n');
            s.push_str(&distribution_csv(&golub_welsch(&jacobi_from_intersection(
                &entry.array,
            )?)?));
            s
        }
    };
    write_all(out, &text)
}

fn verify_command(args: &VerifyArgs, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let spec = graph_spec(&args.graph)?;
    if args.steps == 0 {
        return Err(usage(Error::BadParameter("--steps must be positive".into())));
    }
    let times = time_grid(&TimeGrid {
        t0: 0.0,
        t1: Some(args.t1),
        steps: Some(args.steps),
        times: None,
    })
    .map_err(usage)?;
    let checks = verify(&spec, &times)?;
    let mut s = String::from("invariant,max_deviation,tolerance,status\n");
    for c in &checks {
        s.push_str(&format!(
            "{},{:.3e},{:.0e},{}\n",
            c.name,
            c.deviation,
            c.tolerance,
            if c.passed() { "PASS" } else { "FAIL" }
        ));
    }
    write_all(out, &s)?;
    match checks.iter().find(|c| !c.passed()) {
        Some(c) => Err(Failure::Compute(Error::InconsistentInputs(format!(
            "invariant {} failed with deviation {:.3e}",
            c.name, c.deviation
        )))),
        None => Ok(()),
    }
}

/// Runs the command line `argv` (program name first), writing results to
/// `out` and diagnostics to `err`; returns the exit code.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let rendered = e.render().to_string();
            let line = rendered.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(err, "usage: {line}");
            return 2;
        }
    };
    // buffer so that a failing command never leaves partial data
    let mut buffer = Vec::new();
    let result = match &cli.command {
        Command::Walk(a) => walk(a, &mut buffer),
        Command::Spectrum(a) => spectrum(a, &mut buffer),
        Command::Average(a) => average(a, &mut buffer),
        Command::Characters(a) => characters(a, &mut buffer),
        Command::Catalog { action } => catalog_command(action, &mut buffer),
        Command::Verify(a) => verify_command(a, &mut buffer),
    };
    let (code, error) = match result {
        Ok(()) => (0, None),
        Err(Failure::Usage(e)) => (2, Some(e)),
        Err(Failure::Compute(e)) => (1, Some(e)),
    };
    // a failed verification still prints its table
    if code == 0 || matches!(cli.command, Command::Verify(_)) {
        if let Err(e) = out.write_all(&buffer) {
            let _ = writeln!(err, "io_error: {e}");
            return 1;
        }
    }
    if let Some(e) = error {
        let _ = writeln!(err, "{}: {}", e.code(), e.to_string().replace('\n', " "));
    }
    code
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
