//! The command tree. Every command prints to stdout in the `--format` asked
//! for; `--out` options write the main artifact to a file instead.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cwlab_core::cliquewidth::{builds_graph, evaluate, exact_cliquewidth, grid_expression, label_count, CliqueWidth, Expression};
use cwlab_core::clusters::{bar_partition, build_cluster_graph, max_disjoint_paths, xy_graph_partition, ClusterGraph};
use cwlab_core::graph::{build_h, build_w, embed_w, find_induced_embedding, is_isomorphic, is_prime, nontrivial_module, similarity_partition, Graph};
use cwlab_core::vertexminor::{exact_rankwidth, infer_letters, reduce_to_23, remove_one, remove_zero, Branch, OneRule, ReductionTrace, ZeroRule};
use cwlab_core::words::{factor, factor_complexity, gamma_membership_probe, gap_report, recurrence_window_estimate, FiniteWord, WordSpec};
use serde_json::{json, Value};

use crate::experiments::{self, ExperimentConfig, PRESETS};
use crate::formats::{dot, graph_json, sexp, to_sorted_json, trace_json, word_json};
use crate::{CliError, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(name = "cwlab", version, about = "Word-defined grid graphs, clique-width and rank-width experiments")]
pub struct Cli {
    /// Word spec: `golden`, `psi`, `periodic:<digits>`, `explicit:<digits>`, inline JSON or a JSON file.
    #[arg(long, global = true)]
    pub spec: Option<String>,
    /// Directory for experiment reports.
    #[arg(long, global = true)]
    pub out_dir: Option<PathBuf>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Sexp,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Letters, factors, complexity and gap statistics of a word.
    #[command(subcommand)]
    Word(WordCmd),
    /// Build grid and diagonal graphs; isomorphism, embedding and primality tests.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Clique-width: exact values, constructed expressions, evaluation.
    #[command(subcommand)]
    Cwd(CwdCmd),
    /// Exact rank-width of a small graph.
    Rwd(GraphArg),
    /// 0-removal, 1-removal and full reductions of grid windows.
    #[command(subcommand)]
    Reduce(ReduceCmd),
    /// Cluster graphs, disjoint paths, separators and the bar partition.
    #[command(subcommand)]
    Cluster(ClusterCmd),
    /// Run an experiment preset.
    Experiment(ExperimentArgs),
    /// Convert an artifact between formats.
    Export(ExportArgs),
}

#[derive(Subcommand, Debug)]
pub enum WordCmd {
    /// First letters of the word.
    Letters {
        #[arg(long, default_value_t = 40)]
        horizon: usize,
    },
    /// The factor of length `len` starting at `start` (1-based).
    Factor {
        #[arg(long, default_value_t = 1)]
        start: usize,
        #[arg(long)]
        len: usize,
    },
    /// Number of distinct factors of each length up to `n`.
    Complexity {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5000)]
        horizon: usize,
    },
    /// Occurrences of a factor and the weights of the gaps between them.
    Gaps {
        #[arg(long)]
        beta: String,
        #[arg(long, default_value_t = 10_000)]
        horizon: usize,
    },
    /// Finite-horizon evidence on bounded gap weights for all short factors.
    GammaProbe {
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 10_000)]
        horizon: usize,
    },
}

#[derive(Args, Debug)]
pub struct WindowArgs {
    #[arg(long)]
    pub rows: usize,
    #[arg(long)]
    pub cols: usize,
    /// Row of the top-left vertex.
    #[arg(long, default_value_t = 1)]
    pub row0: usize,
    /// Column of the top-left vertex, also the index of the first letter used.
    #[arg(long, default_value_t = 1)]
    pub col0: usize,
}

#[derive(Args, Debug)]
pub struct GraphArg {
    /// Graph JSON file.
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum GraphCmd {
    /// The grid window with `rows` rows and `cols` columns.
    BuildH {
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The diagonal graph on `n × n` vertices.
    BuildW {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The explicit embedding of the diagonal graph into a grid window.
    EmbedW {
        #[arg(long)]
        n: usize,
    },
    /// Whether two graphs are isomorphic.
    Iso {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        other: PathBuf,
    },
    /// Search an induced embedding of `pattern` into `host`.
    Embed {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
    },
    /// Primality, with a non-trivial module when there is one.
    Prime(GraphArg),
}

#[derive(Subcommand, Debug)]
pub enum CwdCmd {
    /// Exact clique-width by dynamic programming.
    Exact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
        /// Write the witness expression here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// The row-by-row expression of a grid window.
    Construct {
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Evaluate an s-expression, optionally against a graph.
    Evaluate {
        #[arg(long)]
        expr: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct ReduceWindow {
    /// `j,p`: the window over the letters `α_j..α_{j+p-1}`.
    #[arg(long)]
    pub window: String,
    /// Write the trace as JSON.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum ReduceCmd {
    /// Remove a 0 beside column `col`, the middle column of a two-letter factor.
    Zero {
        #[command(flatten)]
        window: ReduceWindow,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        col: usize,
    },
    /// Remove the 1s of the three-letter factor starting at column `col`.
    One {
        #[command(flatten)]
        window: ReduceWindow,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        col: usize,
    },
    /// Reduce the window to a {2,3} word, starting from enough rows.
    To23 {
        #[command(flatten)]
        window: ReduceWindow,
    },
}

#[derive(Args, Debug)]
pub struct ClusterInput {
    /// Graph JSON file with coordinates; without it the full window from `--rows/--cols` is used.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub rows: Option<usize>,
    #[arg(long)]
    pub cols: Option<usize>,
    /// `lo,hi`: the columns to use; defaults to all occupied columns.
    #[arg(long)]
    pub range: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum ClusterCmd {
    /// The cluster graph.
    Build(ClusterInput),
    /// Disjoint paths between the outer columns and the separator.
    Paths(ClusterInput),
    /// The X/Y split of the window's vertices.
    Partition(ClusterInput),
    /// Bar partition and the composed expression.
    Pipeline {
        #[command(flatten)]
        input: ClusterInput,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        beta_start: usize,
        #[arg(long)]
        window_len: usize,
    },
}

#[derive(Args, Debug)]
pub struct ExperimentArgs {
    /// Preset name.
    pub preset: Option<String>,
    /// JSON config file; its fields override the flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub samples: Option<usize>,
    /// List the presets.
    #[arg(long)]
    pub list: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Graph,
    Expression,
    Cluster,
    Trace,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parse arguments, run, and return the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    graph_json::parse(&read(path)?)
}

fn spec(cli: &Cli) -> Result<WordSpec, CliError> {
    let arg = cli.spec.as_deref().ok_or_else(|| CliError::Usage("this command needs --spec".into()))?;
    word_json::resolve(arg)
}

fn pair(arg: &str, what: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("{what} must look like `a,b`, got {arg:?}"));
    let (a, b) = arg.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

/// Print `text` or `value` according to `--format`; other formats are
/// rejected for this output.
fn emit(cli: &Cli, text: String, value: Value) -> Result<i32, CliError> {
    match cli.format {
        Format::Text => print!("{text}"),
        Format::Json => print!("{}", to_sorted_json(&value)?),
        f => return Err(CliError::Usage(format!("format {f:?} is not available for this command"))),
    }
    Ok(EXIT_OK)
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn graph_output(cli: &Cli, g: &Graph) -> Result<String, CliError> {
    match cli.format {
        Format::Text | Format::Json => graph_json::print(g),
        Format::Dot => Ok(dot::graph(g)),
        Format::Sexp => Err(CliError::Usage("graphs have no s-expression form".into())),
    }
}

fn ids(g: &Graph, ps: &[usize]) -> Vec<usize> {
    ps.iter().map(|&p| g.vertex(p).id).collect()
}

pub fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Word(cmd) => word(cli, cmd),
        Command::Graph(cmd) => graph(cli, cmd),
        Command::Cwd(cmd) => cwd(cli, cmd),
        Command::Rwd(arg) => rwd(cli, arg),
        Command::Reduce(cmd) => reduce(cli, cmd),
        Command::Cluster(cmd) => cluster(cli, cmd),
        Command::Experiment(args) => experiment(cli, args),
        Command::Export(args) => export(cli, args),
    }
}

fn word(cli: &Cli, cmd: &WordCmd) -> Result<i32, CliError> {
    let w = spec(cli)?;
    match cmd {
        WordCmd::Letters { horizon } => {
            let p = w.prefix(*horizon)?;
            emit(cli, format!("{p}\n"), json!({"horizon": horizon, "letters": p.to_string()}))
        }
        WordCmd::Factor { start, len } => {
            let f = factor(&w, *start, *len)?;
            emit(cli, format!("{f}\n"), json!({"start": start, "factor": f.to_string(), "weight": f.weight()}))
        }
        WordCmd::Complexity { n, horizon } => {
            let counts: Vec<usize> = (1..=*n).map(|k| factor_complexity(&w, k, *horizon)).collect::<Result<_, _>>()?;
            let text: String = counts.iter().enumerate().map(|(i, c)| format!("{} {c}\n", i + 1)).collect();
            emit(cli, text, json!({"horizon": horizon, "complexity": counts}))
        }
        WordCmd::Gaps { beta, horizon } => {
            let beta: FiniteWord = beta.parse()?;
            let rep = gap_report(&w, &beta, *horizon)?;
            let window = recurrence_window_estimate(&w, &beta, *horizon)?;
            let bound = w.declared_gap_bound(&beta);
            let text = format!(
                "occurrences {}\nmax gap weight {}\ndeclared bound {}\nrecurrence window {}\n",
                rep.occurrences.len(),
                rep.max_gap_weight,
                bound.map_or("none".into(), |b| b.to_string()),
                window.map_or("none".into(), |l| l.to_string()),
            );
            let value = json!({
                "factor": beta.to_string(),
                "horizon": horizon,
                "occurrences": rep.occurrences.len(),
                "max_gap_weight": rep.max_gap_weight,
                "declared_bound": bound,
                "recurrence_window": window,
            });
            emit(cli, text, value)
        }
        WordCmd::GammaProbe { max_len, horizon } => {
            let probes = gamma_membership_probe(&w, *max_len, *horizon)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for p in &probes {
                text.push_str(&format!("{} {} max={} trend={:?}\n", p.factor, p.verdict.as_str(), p.max_gap_weight, p.trend));
                rows.push(json!({
                    "factor": p.factor.to_string(),
                    "occurrences": p.occurrences,
                    "max_gap_weight": p.max_gap_weight,
                    "declared_bound": p.declared_bound,
                    "trend": p.trend,
                    "verdict": p.verdict.as_str(),
                }));
            }
            emit(cli, text, json!({"horizon": horizon, "factors": rows}))
        }
    }
}

fn graph(cli: &Cli, cmd: &GraphCmd) -> Result<i32, CliError> {
    match cmd {
        GraphCmd::BuildH { window, out } => {
            let g = build_h(&spec(cli)?, window.row0, window.col0, window.rows, window.cols)?;
            write_or_print(out.as_deref(), &graph_output(cli, &g)?)?;
            Ok(EXIT_OK)
        }
        GraphCmd::BuildW { n, out } => {
            let g = build_w(&spec(cli)?, *n)?;
            write_or_print(out.as_deref(), &graph_output(cli, &g)?)?;
            Ok(EXIT_OK)
        }
        GraphCmd::EmbedW { n } => {
            let e = embed_w(&spec(cli)?, *n)?;
            let induced = e.embedding.is_induced(&e.pattern, &e.host);
            let map: Vec<Value> = (0..e.pattern.n())
                .map(|p| json!({"from": e.pattern.coord(p), "to": e.host.coord(e.embedding.map[p])}))
                .collect();
            let mut text = format!("induced {induced}\n");
            for m in &map {
                text.push_str(&format!("{} -> {}\n", m["from"], m["to"]));
            }
            emit(cli, text, json!({"induced": induced, "map": map}))
        }
        GraphCmd::Iso { graph, other } => {
            let iso = is_isomorphic(&read_graph(graph)?.plain(), &read_graph(other)?.plain());
            emit(cli, format!("{}\n", if iso { "isomorphic" } else { "not isomorphic" }), json!({"isomorphic": iso}))
        }
        GraphCmd::Embed { pattern, host } => {
            let (p, h) = (read_graph(pattern)?, read_graph(host)?);
            match find_induced_embedding(&p.plain(), &h.plain()) {
                Some(e) => {
                    let pairs: Vec<[usize; 2]> = (0..p.n()).map(|i| [p.vertex(i).id, h.vertex(e.map[i]).id]).collect();
                    let text: String = pairs.iter().map(|[a, b]| format!("{a} -> {b}\n")).collect();
                    emit(cli, text, json!({"found": true, "map": pairs}))
                }
                None => emit(cli, "no embedding\n".into(), json!({"found": false})),
            }
        }
        GraphCmd::Prime(arg) => {
            let g = read_graph(&arg.graph)?;
            let prime = is_prime(&g);
            let module = nontrivial_module(&g).map(|m| ids(&g, &m));
            let text = match &module {
                None => "prime\n".to_string(),
                Some(m) => format!("not prime, module {m:?}\n"),
            };
            emit(cli, text, json!({"prime": prime, "module": module}))
        }
    }
}

fn expression_json(e: &Expression) -> Value {
    match e {
        Expression::Create { label, tag } => json!({"op": "create", "label": label, "tag": tag}),
        Expression::Union(l, r) => json!({"op": "union", "left": expression_json(l), "right": expression_json(r)}),
        Expression::Join { a, b, inner } => json!({"op": "join", "a": a, "b": b, "inner": expression_json(inner)}),
        Expression::Relabel { from, to, inner } => json!({"op": "relabel", "from": from, "to": to, "inner": expression_json(inner)}),
    }
}

fn cwd(cli: &Cli, cmd: &CwdCmd) -> Result<i32, CliError> {
    match cmd {
        CwdCmd::Exact { graph, kmax, witness } => {
            let g = read_graph(graph)?;
            match exact_cliquewidth(&g, *kmax, None)? {
                CliqueWidth::Exact { width, witness: w } => {
                    if let (Some(path), Some(w)) = (witness, &w) {
                        std::fs::write(path, format!("{}\n", sexp::print(w)))?;
                    }
                    emit(cli, format!("cwd {width}\n"), json!({"cwd": width, "exact": true}))
                }
                CliqueWidth::GreaterThan(k) => emit(cli, format!("cwd > {k}\n"), json!({"greater_than": k, "exact": false})),
            }
        }
        CwdCmd::Construct { window, witness } => {
            let w = spec(cli)?;
            let e = grid_expression(&w, window.row0, window.col0, window.rows, window.cols)?;
            let letters = w.letters(window.col0, window.cols.saturating_sub(1))?;
            let t = letters.iter().filter(|l| !l.is_zero()).count();
            if let Some(path) = witness {
                std::fs::write(path, format!("{}\n", sexp::print(&e)))?;
            }
            let labels = label_count(&e);
            emit(cli, format!("labels {labels}\nbound {}\n", 6 * t + 3), json!({"labels": labels, "bound": 6 * t + 3, "t": t}))
        }
        CwdCmd::Evaluate { expr, graph } => {
            let e = sexp::parse(&read(expr)?)?;
            let lg = evaluate(&e)?;
            match graph {
                Some(path) => {
                    let ok = builds_graph(&e, &read_graph(path)?)?;
                    emit(cli, format!("{}\n", if ok { "builds the graph" } else { "does not build the graph" }), json!({"builds": ok}))
                }
                None => {
                    let mut g = lg.graph.clone();
                    let doc = graph_json::GraphDoc::from_graph(&g);
                    let tagged: Vec<Value> = doc.vertices.iter().map(|v| json!({"id": v.id, "tag": lg.tags[v.id], "label": lg.labels[v.id]})).collect();
                    if cli.format == Format::Json {
                        print!("{}", to_sorted_json(&json!({"graph": doc, "vertices": tagged}))?);
                    } else {
                        g = g.plain();
                        print!("{}", graph_json::print(&g)?);
                    }
                    Ok(EXIT_OK)
                }
            }
        }
    }
}

fn branch_text(b: &Branch) -> String {
    match b {
        Branch::Leaf(id) => id.to_string(),
        Branch::Split(l, r) => format!("({} {})", branch_text(l), branch_text(r)),
    }
}

fn rwd(cli: &Cli, arg: &GraphArg) -> Result<i32, CliError> {
    let g = read_graph(&arg.graph)?;
    let rw = exact_rankwidth(&g)?;
    let tree = rw.witness.as_ref().map(branch_text);
    emit(cli, format!("rwd {}\n{}\n", rw.width, tree.clone().unwrap_or_default()), json!({"rwd": rw.width, "decomposition": tree}))
}

fn zero_rule(w: &WordSpec, col: usize) -> Result<ZeroRule, CliError> {
    let pair = w.letters(col.checked_sub(1).filter(|&c| c > 0).ok_or_else(|| CliError::Usage("col must be at least 2".into()))?, 2)?;
    let (a, b) = (pair[0].value(), pair[1].value());
    Ok(match (a, b) {
        (0, 0) => ZeroRule::Double,
        (0, 1) | (1, 0) => ZeroRule::BesideOne,
        (0, _) | (_, 0) => ZeroRule::BesideTwoThree,
        _ => return Err(CliError::Usage(format!("letters {a}{b} around column {col} contain no 0"))),
    })
}

fn one_rule(w: &WordSpec, col: usize) -> Result<OneRule, CliError> {
    let l: Vec<u8> = w.letters(col, 3)?.iter().map(|l| l.value()).collect();
    Ok(match l.as_slice() {
        [a, 1, 1] | [1, 1, a] if *a >= 2 => OneRule::Single,
        [a, 1, b] if *a >= 2 && a == b => OneRule::Same,
        [a, 1, b] if *a >= 2 && *b >= 2 => OneRule::Mixed,
        _ => return Err(CliError::Usage(format!("factor {l:?} at column {col} has no 1-removal rule"))),
    })
}

fn reduce(cli: &Cli, cmd: &ReduceCmd) -> Result<i32, CliError> {
    let w = spec(cli)?;
    let (trace, window): (ReductionTrace, &ReduceWindow) = match cmd {
        ReduceCmd::Zero { window, rows, col } => {
            let (j, p) = pair(&window.window, "--window")?;
            let g = build_h(&w, 1, j, *rows, p + 1)?;
            (remove_zero(&g, *col, zero_rule(&w, *col)?)?, window)
        }
        ReduceCmd::One { window, rows, col } => {
            let (j, p) = pair(&window.window, "--window")?;
            let g = build_h(&w, 1, j, *rows, p + 1)?;
            (remove_one(&g, *col, one_rule(&w, *col)?)?, window)
        }
        ReduceCmd::To23 { window } => {
            let (j, p) = pair(&window.window, "--window")?;
            (reduce_to_23(&w, j, p)?.trace, window)
        }
    };
    if let Some(path) = &window.trace {
        std::fs::write(path, trace_json::print(&trace)?)?;
    }
    let before = infer_letters(&trace.initial)?.to_string();
    let after = infer_letters(&trace.final_graph)?.to_string();
    let rows = |g: &Graph| g.coord(0).map_or(0, |c| g.column(c.1).len());
    let (r0, r1) = (rows(&trace.initial), rows(&trace.final_graph));
    let text = format!("{before} ({r0} rows) -> {after} ({r1} rows) in {} steps\n", trace.steps.len());
    emit(cli, text, json!({"initial": before, "final": after, "initial_rows": r0, "final_rows": r1, "steps": trace.steps.len()}))
}

fn cluster_input(cli: &Cli, input: &ClusterInput) -> Result<(WordSpec, Graph, (usize, usize)), CliError> {
    let w = spec(cli)?;
    let g = match (&input.graph, input.rows, input.cols) {
        (Some(path), _, _) => read_graph(path)?,
        (None, Some(r), Some(c)) => build_h(&w, 1, 1, r, c)?,
        _ => return Err(CliError::Usage("give --graph, or --rows and --cols".into())),
    };
    let cols: Vec<usize> = (0..g.n()).map(|p| g.coord(p).map(|c| c.1).ok_or(cwlab_core::Error::MissingCoords(g.vertex(p).id))).collect::<Result<_, _>>()?;
    let range = match &input.range {
        Some(r) => pair(r, "--range")?,
        None => (cols.iter().copied().min().unwrap_or(1), cols.iter().copied().max().unwrap_or(1)),
    };
    Ok((w, g, range))
}

fn cluster_json(b: &ClusterGraph) -> Value {
    json!({
        "first_col": b.first_col,
        "letters": b.letters.iter().map(|l| l.value()).collect::<Vec<_>>(),
        "columns": b.columns,
        "clusters": b.clusters.iter().map(|c| json!({"id": c.id, "column": c.column, "members": c.members, "kind": format!("{:?}", c.kind)})).collect::<Vec<_>>(),
        "type_a": b.type_a.iter().map(|e| json!({"from": e.from, "to": e.to, "vertex": e.vertex})).collect::<Vec<_>>(),
        "type_b": b.type_b,
    })
}

fn cluster(cli: &Cli, cmd: &ClusterCmd) -> Result<i32, CliError> {
    match cmd {
        ClusterCmd::Build(input) | ClusterCmd::Paths(input) | ClusterCmd::Partition(input) => {
            let (w, g, (lo, hi)) = cluster_input(cli, input)?;
            let b = build_cluster_graph(&g, &w, lo..=hi)?;
            match cmd {
                ClusterCmd::Build(_) => {
                    if cli.format == Format::Dot {
                        print!("{}", dot::cluster_graph(&b, None));
                        return Ok(EXIT_OK);
                    }
                    let text = format!("column sizes {:?}\ntype-A edges {}\ntype-B edges {}\n", b.column_sizes(), b.type_a.len(), b.type_b.len());
                    emit(cli, text, cluster_json(&b))
                }
                ClusterCmd::Paths(_) => {
                    let sp = max_disjoint_paths(&b);
                    if cli.format == Format::Dot {
                        print!("{}", dot::cluster_graph(&b, Some(&sp)));
                        return Ok(EXIT_OK);
                    }
                    let members = |c: &usize| b.clusters[*c].members.clone();
                    let paths: Vec<Vec<Vec<usize>>> = sp.paths.iter().map(|p| p.iter().map(members).collect()).collect();
                    let separator: Vec<Vec<usize>> = sp.separator.iter().map(members).collect();
                    let text = format!("s {}\nseparator {separator:?}\n", sp.s());
                    emit(cli, text, json!({"s": sp.s(), "paths": sp.paths, "path_members": paths, "separator": sp.separator}))
                }
                _ => {
                    let sp = max_disjoint_paths(&b);
                    let (x, y) = xy_graph_partition(&sp, &b)?;
                    let pos = |v: &[usize]| v.iter().filter_map(|&id| g.position_of_id(id)).collect::<Vec<_>>();
                    let (mx, my) = (similarity_partition(&g, &pos(&x))?.mu(), similarity_partition(&g, &pos(&y))?.mu());
                    let text = format!("s {}\nX {x:?}\nY {y:?}\nmu(X) {mx}\nmu(Y) {my}\n", sp.s());
                    emit(cli, text, json!({"s": sp.s(), "x": x, "y": y, "mu_x": mx, "mu_y": my}))
                }
            }
        }
        ClusterCmd::Pipeline { input, k, beta_start, window_len } => {
            let (w, g, _) = cluster_input(cli, input)?;
            let out = bar_partition(&g, &w, *beta_start, *k, *window_len)?;
            if cli.format == Format::Sexp {
                print!("{}", out.expression.as_ref().map(|e| format!("{}\n", sexp::print(e))).unwrap_or_default());
                return Ok(EXIT_OK);
            }
            let bars: Vec<Value> = out
                .bars
                .iter()
                .map(|b| json!({"first_col": b.first_col, "last_col": b.last_col, "window_col": b.window_col, "s": b.s, "mu_x": b.mu_x, "mu_y": b.mu_y, "x": b.x, "y": b.y}))
                .collect();
            let text = format!("parts {}\nlabels {}\nbound {}\nmu max {}\n", out.parts.len(), out.labels, out.bound, out.mu_max);
            emit(cli, text, json!({"parts": out.parts, "labels": out.labels, "bound": out.bound, "mu_max": out.mu_max, "k_parts": out.k_parts, "bars": bars}))
        }
    }
}

fn experiment(cli: &Cli, args: &ExperimentArgs) -> Result<i32, CliError> {
    if args.list {
        for p in PRESETS {
            println!("{p}");
        }
        return Ok(EXIT_OK);
    }
    let flags = ExperimentConfig {
        name: args.preset.clone().unwrap_or_default(),
        spec: cli.spec.clone().map(Value::String),
        samples: args.samples,
        seed: cli.seed,
        ..Default::default()
    };
    let cfg = match &args.config {
        Some(path) => {
            let file: ExperimentConfig = serde_json::from_str(&read(path)?)?;
            file.or(&flags)
        }
        None => flags,
    };
    let resolved = experiments::resolve(&cfg)?;
    let report = experiments::run(&resolved)?;
    if let Some(dir) = &cli.out_dir {
        report.write_to(dir)?;
    }
    match cli.format {
        Format::Json => print!("{}", report.to_json()?),
        _ => print!("{}", report.summary()),
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn export(cli: &Cli, args: &ExportArgs) -> Result<i32, CliError> {
    let text = read(&args.input)?;
    let out = match (args.kind, cli.format) {
        (Kind::Graph, Format::Json | Format::Text) => graph_json::print(&graph_json::parse(&text)?)?,
        (Kind::Graph, Format::Dot) => dot::graph(&graph_json::parse(&text)?),
        (Kind::Expression, Format::Sexp | Format::Text) => format!("{}\n", sexp::print(&sexp::parse(&text)?)),
        (Kind::Expression, Format::Json) => to_sorted_json(&expression_json(&sexp::parse(&text)?))?,
        (Kind::Cluster, Format::Dot | Format::Json | Format::Text) => {
            let g = graph_json::parse(&text)?;
            let w = spec(cli)?;
            let cols: Vec<usize> = (0..g.n()).filter_map(|p| g.coord(p).map(|c| c.1)).collect();
            let (lo, hi) = (cols.iter().copied().min().unwrap_or(1), cols.iter().copied().max().unwrap_or(1));
            let b = build_cluster_graph(&g, &w, lo..=hi)?;
            if cli.format == Format::Dot {
                dot::cluster_graph(&b, Some(&max_disjoint_paths(&b)))
            } else {
                to_sorted_json(&cluster_json(&b))?
            }
        }
        (Kind::Trace, Format::Json | Format::Text) => trace_json::print(&trace_json::parse(&text)?)?,
        (kind, format) => return Err(CliError::Usage(format!("cannot export {kind:?} as {format:?}"))),
    };
    write_or_print(args.out.as_deref(), &out)?;
    Ok(EXIT_OK)
}
