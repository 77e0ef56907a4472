//! Command-line surface for the strongedge toolkit.
//!
//! Exit codes: 0 success (and valid colorings), 1 invalid coloring,
//! 2 usage error, 3 precondition violation, 4 timeout/unknown.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use strongedge::coloring::{self, ColorMode, ColoringError, PaletteMode};
use strongedge::decompose::DecomposeError;
use strongedge::exact::{self, ExactError, SearchLimits};
use strongedge::formats::{self, FormatError, GraphFormat};
use strongedge::generators::{self, GenError, GenSpec};
use strongedge::graph::Graph;
use strongedge::structure;

#[derive(Parser)]
#[command(name = "strongedge", version, about = "Strong edge coloring toolkit")]
struct Cli {
    /// Output mode for reports
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    output: OutputMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report: degeneracy, degrees, forests of 3+-vertices,
    /// biconnectivity, chordless, minimally 2-connected
    Analyze {
        /// Graph file; "-" reads standard input
        file: String,
        /// Input format (graph6, dimacs, edgelist); default from extension
        #[arg(long)]
        format: Option<String>,
    },
    /// Greedy strong edge coloring with a guaranteed palette
    Color {
        /// Graph file; "-" reads standard input
        file: String,
        /// degenerate:auto, degenerate:<k>, or forest
        #[arg(long, default_value = "degenerate:auto")]
        mode: String,
        /// Print the star decomposition trace to standard error
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        format: Option<String>,
        /// Also write the coloring file here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring file against a graph; exits 0 iff valid
    Verify {
        graph: String,
        coloring: String,
        #[arg(long)]
        format: Option<String>,
    },
    /// Exact strong chromatic index by exhaustive search (small graphs)
    Exact {
        file: String,
        /// Search cap on the number of edges
        #[arg(long, default_value_t = 30)]
        max_edges: usize,
        /// Wall-clock budget in seconds
        #[arg(long, default_value_t = 60.0)]
        timeout: f64,
        #[arg(long)]
        format: Option<String>,
    },
    /// Emit a graph from a family spec, e.g. cycle:5 or
    /// random_k_degenerate:n=30,k=2,seed=7
    Generate {
        spec: String,
        /// Output format
        #[arg(long, default_value = "graph6")]
        out: String,
        /// Default seed for random families (spec seed= wins)
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Published palette-size bounds evaluated at (k, delta)
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Color a family of seeded instances and tabulate the results
    Bench {
        /// Family spec; instance i uses seed base+i
        #[arg(long)]
        family: String,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Coloring mode for every instance
        #[arg(long, default_value = "degenerate:auto")]
        mode: String,
        /// Run the exact solver on instances with at most this many edges
        #[arg(long, default_value_t = 30)]
        exact_max_edges: usize,
        /// Per-instance exact-solver budget in seconds
        #[arg(long, default_value_t = 5.0)]
        timeout: f64,
    },
}

enum CliError {
    Usage(String),
    Precondition(String),
    Timeout(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Timeout(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Precondition(m) | CliError::Timeout(m) => m,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GenError> for CliError {
    fn from(e: GenError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ColoringError> for CliError {
    fn from(e: ColoringError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<DecomposeError> for CliError {
    fn from(e: DecomposeError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::TooLarge { .. } => CliError::Precondition(e.to_string()),
            ExactError::TimeBudgetExceeded => CliError::Timeout(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let output = cli.output;
    match cli.command {
        Command::Analyze { file, format } => analyze(&file, format.as_deref(), output),
        Command::Color {
            file,
            mode,
            trace,
            format,
            out,
        } => color(
            &file,
            &mode,
            trace,
            format.as_deref(),
            out.as_deref(),
            output,
        ),
        Command::Verify {
            graph,
            coloring,
            format,
        } => verify(&graph, &coloring, format.as_deref(), output),
        Command::Exact {
            file,
            max_edges,
            timeout,
            format,
        } => run_exact(&file, max_edges, timeout, format.as_deref(), output),
        Command::Generate { spec, out, seed } => generate(&spec, &out, seed, output),
        Command::Bounds { k, delta } => bounds(k, delta, output),
        Command::Bench {
            family,
            count,
            seed,
            mode,
            exact_max_edges,
            timeout,
        } => bench(
            &family,
            count,
            seed,
            &mode,
            exact_max_edges,
            timeout,
            output,
        ),
    }
}

fn read_input(path: &str) -> Result<Vec<u8>, CliError> {
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| CliError::Usage(format!("cannot read '{path}': {e}")))
    }
}

fn parse_format_flag(flag: Option<&str>) -> Result<Option<GraphFormat>, CliError> {
    flag.map(|s| s.parse::<GraphFormat>().map_err(CliError::Usage))
        .transpose()
}

fn detect_format(path: &str, data: &[u8], flag: Option<&str>) -> Result<GraphFormat, CliError> {
    if let Some(f) = parse_format_flag(flag)? {
        return Ok(f);
    }
    if path != "-" {
        if let Some(f) = GraphFormat::from_extension(path) {
            return Ok(f);
        }
    }
    sniff_format(data).ok_or_else(|| {
        CliError::Usage(format!(
            "cannot detect graph format of '{path}'; pass --format"
        ))
    })
}

fn sniff_format(data: &[u8]) -> Option<GraphFormat> {
    let text = std::str::from_utf8(data).ok()?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty())?;
    if first.starts_with(">>graph6<<") {
        return Some(GraphFormat::Graph6);
    }
    let tokens: Vec<&str> = first.split_whitespace().collect();
    match tokens[0] {
        "p" | "c" => return Some(GraphFormat::Dimacs),
        "n" => return Some(GraphFormat::EdgeList),
        t if t.starts_with('#') => return Some(GraphFormat::EdgeList),
        _ => {}
    }
    if tokens.len() >= 2 && tokens.iter().all(|t| t.chars().all(|c| c.is_ascii_digit())) {
        return Some(GraphFormat::EdgeList);
    }
    if tokens.len() == 1 && first.bytes().all(|b| (63..=126).contains(&b)) {
        return Some(GraphFormat::Graph6);
    }
    None
}

fn load_graph(path: &str, flag: Option<&str>) -> Result<Graph, CliError> {
    let data = read_input(path)?;
    let format = detect_format(path, &data, flag)?;
    Ok(formats::parse_graph(&data, format)?)
}

fn parse_mode(s: &str) -> Result<ColorMode, CliError> {
    match s {
        "forest" => Ok(ColorMode::Forest),
        "degenerate" | "degenerate:auto" => Ok(ColorMode::DegenerateAuto),
        _ => s
            .strip_prefix("degenerate:")
            .and_then(|k| k.parse().ok())
            .map(ColorMode::Degenerate)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "invalid mode '{s}' (expected degenerate:auto, degenerate:<k>, or forest)"
                ))
            }),
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("STRONGEDGE_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid STRONGEDGE_SEED '{v}'"))),
        Err(_) => Ok(0),
    }
}

fn analyze(path: &str, fmt: Option<&str>, output: OutputMode) -> Result<u8, CliError> {
    let g = load_graph(path, fmt)?;
    let r = structure::structure_report(&g);
    match output {
        OutputMode::Text => {
            println!("degeneracy: {}", r.degeneracy);
            println!("max_degree: {}", r.max_degree);
            println!("min_degree: {}", r.min_degree);
            println!("three_plus_forest: {}", r.three_plus_forest);
            println!("biconnected: {}", r.biconnected);
            println!("chordless: {}", r.chordless);
            println!("minimally_two_connected: {}", r.minimally_two_connected);
        }
        OutputMode::Json => {
            println!(
                "{}",
                json!({
                    "degeneracy": r.degeneracy,
                    "max_degree": r.max_degree,
                    "min_degree": r.min_degree,
                    "three_plus_forest": r.three_plus_forest,
                    "biconnected": r.biconnected,
                    "chordless": r.chordless,
                    "minimally_two_connected": r.minimally_two_connected,
                })
            );
        }
    }
    Ok(0)
}

fn mode_fields(mode: PaletteMode) -> (&'static str, Option<usize>) {
    match mode {
        PaletteMode::Degenerate(k) => ("degenerate", Some(k)),
        PaletteMode::Forest => ("forest", None),
        PaletteMode::ExplicitLists => ("explicit_lists", None),
    }
}

fn color(
    path: &str,
    mode: &str,
    trace: bool,
    fmt: Option<&str>,
    out: Option<&std::path::Path>,
    output: OutputMode,
) -> Result<u8, CliError> {
    let g = load_graph(path, fmt)?;
    let mode = parse_mode(mode)?;
    let (coloring, palette, decomposition) = coloring::greedy_strong_coloring(&g, mode)?;
    if trace {
        eprint!("{}", decomposition.trace());
    }
    let file = coloring::serialize_coloring(&coloring);
    if let Some(out) = out {
        fs::write(out, &file)
            .map_err(|e| CliError::Usage(format!("cannot write '{}': {e}", out.display())))?;
    }
    let (mode_name, k) = mode_fields(palette.mode);
    let delta = g.max_degree();
    match output {
        OutputMode::Text => {
            print!("{file}");
            let k_text = k.map_or("-".to_string(), |k| k.to_string());
            println!(
                "# mode={mode_name} k={k_text} delta={delta} bound={} colors_used={} valid=true",
                palette.size,
                coloring.colors_used()
            );
        }
        OutputMode::Json => {
            println!(
                "{}",
                json!({
                    "mode": mode_name,
                    "k": k,
                    "delta": delta,
                    "bound": palette.size,
                    "colors_used": coloring.colors_used(),
                    "valid": true,
                })
            );
        }
    }
    Ok(0)
}

fn verify(
    graph_path: &str,
    coloring_path: &str,
    fmt: Option<&str>,
    output: OutputMode,
) -> Result<u8, CliError> {
    let g = load_graph(graph_path, fmt)?;
    let coloring = coloring::parse_coloring(&read_input(coloring_path)?)?;
    let report = coloring::verify_strong_coloring(&g, &coloring)?;
    match output {
        OutputMode::Text => {
            println!("valid: {}", report.valid);
            for &(e, f) in &report.violations {
                let c = coloring.color(e).expect("violating edge is colored");
                println!("violation: {e} {f} color={c}");
            }
            for e in &report.uncolored {
                println!("uncolored: {e}");
            }
        }
        OutputMode::Json => {
            let violations: Vec<_> = report
                .violations
                .iter()
                .map(|(e, f)| json!([[e.u(), e.v()], [f.u(), f.v()]]))
                .collect();
            let uncolored: Vec<_> = report
                .uncolored
                .iter()
                .map(|e| json!([e.u(), e.v()]))
                .collect();
            println!(
                "{}",
                json!({
                    "valid": report.valid,
                    "violations": violations,
                    "uncolored": uncolored,
                })
            );
        }
    }
    Ok(if report.valid { 0 } else { 1 })
}

fn search_limits(max_edges: usize, timeout: f64) -> Result<SearchLimits, CliError> {
    if !timeout.is_finite() || timeout <= 0.0 {
        return Err(CliError::Usage("timeout must be positive".into()));
    }
    Ok(SearchLimits {
        max_edges,
        time_budget: Duration::from_secs_f64(timeout),
    })
}

fn run_exact(
    path: &str,
    max_edges: usize,
    timeout: f64,
    fmt: Option<&str>,
    output: OutputMode,
) -> Result<u8, CliError> {
    let g = load_graph(path, fmt)?;
    let limits = search_limits(max_edges, timeout)?;
    let (chi, witness) = exact::exact_strong_chromatic_index(&g, &limits)?;
    match output {
        OutputMode::Text => {
            println!("# chi = {chi}");
            print!("{}", coloring::serialize_coloring(&witness));
        }
        OutputMode::Json => {
            let edges: Vec<_> = witness
                .iter()
                .map(|(e, c)| json!([e.u(), e.v(), c]))
                .collect();
            println!("{}", json!({ "chi": chi, "witness": edges }));
        }
    }
    Ok(0)
}

fn generate(
    spec: &str,
    out_format: &str,
    seed: Option<u64>,
    _output: OutputMode,
) -> Result<u8, CliError> {
    let seed = resolve_seed(seed)?;
    let spec = GenSpec::parse_with_seed(spec, seed)?;
    let g = generators::generate(&spec)?;
    let format: GraphFormat = out_format.parse().map_err(CliError::Usage)?;
    let text = formats::serialize_graph(&g, format)?;
    if text.ends_with('\n') {
        print!("{text}");
    } else {
        println!("{text}");
    }
    Ok(0)
}

fn bounds(k: usize, delta: usize, output: OutputMode) -> Result<u8, CliError> {
    let t = coloring::bound_table(k, delta)?;
    match output {
        OutputMode::Text => {
            println!("k: {}", t.k);
            println!("delta: {}", t.delta);
            if let Some(v) = t.chang_narayanan {
                println!("chang_narayanan: {v}");
            }
            if let Some(v) = t.luo_yu {
                println!("luo_yu: {v}");
            }
            println!("debski: {}", t.debski);
            println!("yu: {}", t.yu);
            println!("greedy_guarantee: {}", t.greedy_guarantee);
        }
        OutputMode::Json => {
            let mut map = serde_json::Map::new();
            map.insert("k".into(), json!(t.k));
            map.insert("delta".into(), json!(t.delta));
            if let Some(v) = t.chang_narayanan {
                map.insert("chang_narayanan".into(), json!(v));
            }
            if let Some(v) = t.luo_yu {
                map.insert("luo_yu".into(), json!(v));
            }
            map.insert("debski".into(), json!(t.debski));
            map.insert("yu".into(), json!(t.yu));
            map.insert("greedy_guarantee".into(), json!(t.greedy_guarantee));
            println!("{}", serde_json::Value::Object(map));
        }
    }
    Ok(0)
}

struct BenchRow {
    instance: usize,
    n: usize,
    m: usize,
    delta: usize,
    k: Option<usize>,
    bound: usize,
    colors_used: usize,
    exact: Option<usize>,
    valid: bool,
}

#[allow(clippy::too_many_arguments)]
fn bench(
    family: &str,
    count: usize,
    seed: Option<u64>,
    mode: &str,
    exact_max_edges: usize,
    timeout: f64,
    output: OutputMode,
) -> Result<u8, CliError> {
    let base = resolve_seed(seed)?;
    let mode = parse_mode(mode)?;
    let base_spec = GenSpec::parse_with_seed(family, base)?;
    let limits = search_limits(exact_max_edges, timeout)?;
    let mut rows = Vec::with_capacity(count);
    let mut bound_violations = 0usize;
    let mut invalid = 0usize;
    for i in 0..count {
        let mut spec = base_spec;
        spec.seed = spec.seed.wrapping_add(i as u64);
        let g = generators::generate(&spec)?;
        let (coloring, palette, _) = coloring::greedy_strong_coloring(&g, mode)?;
        let report = coloring::verify_strong_coloring(&g, &coloring)?;
        let exact_chi = match exact::exact_strong_chromatic_index(&g, &limits) {
            Ok((chi, _)) => Some(chi),
            Err(_) => None,
        };
        let colors_used = coloring.colors_used();
        if g.edge_count() > 0 && colors_used > palette.size {
            bound_violations += 1;
        }
        if !report.valid {
            invalid += 1;
        }
        let (_, k) = mode_fields(palette.mode);
        rows.push(BenchRow {
            instance: i,
            n: g.n(),
            m: g.edge_count(),
            delta: g.max_degree(),
            k,
            bound: palette.size,
            colors_used,
            exact: exact_chi,
            valid: report.valid,
        });
    }
    match output {
        OutputMode::Text => {
            println!("# instance n m delta k bound colors_used exact valid");
            for r in &rows {
                println!(
                    "{} {} {} {} {} {} {} {} {}",
                    r.instance,
                    r.n,
                    r.m,
                    r.delta,
                    r.k.map_or("-".to_string(), |k| k.to_string()),
                    r.bound,
                    r.colors_used,
                    r.exact.map_or("-".to_string(), |x| x.to_string()),
                    r.valid
                );
            }
            println!(
                "# instances={count} valid={} bound_violations={bound_violations}",
                count - invalid
            );
        }
        OutputMode::Json => {
            let instances: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "instance": r.instance,
                        "n": r.n,
                        "m": r.m,
                        "delta": r.delta,
                        "k": r.k,
                        "bound": r.bound,
                        "colors_used": r.colors_used,
                        "exact": r.exact,
                        "valid": r.valid,
                    })
                })
                .collect();
            println!(
                "{}",
                json!({
                    "instances": instances,
                    "summary": {
                        "count": count,
                        "valid": count - invalid,
                        "bound_violations": bound_violations,
                    }
                })
            );
        }
    }
    if bound_violations > 0 || invalid > 0 {
        return Err(CliError::Precondition(format!(
            "bench found {bound_violations} bound violation(s) and {invalid} invalid coloring(s)"
        )));
    }
    Ok(0)
}
