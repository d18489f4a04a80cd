//! Experiment presets. Each preset runs a family of checks over generated
//! instances and returns a [`Report`]; randomized presets draw from a
//! ChaCha8 stream seeded by the resolved `seed`.

use std::collections::BTreeSet;

use cwlab_core::cliquewidth::{builds_graph, exact_cliquewidth, grid_expression, label_count};
use cwlab_core::clusters::{bar_partition, build_cluster_graph, max_disjoint_paths, xy_graph_partition};
use cwlab_core::graph::{build_h, enumerate_graphs, find_induced_embedding, is_isomorphic, similarity_partition, Graph};
use cwlab_core::vertexminor::{exact_rankwidth, infer_letters, remove_one, remove_zero, OneRule, ReductionTrace, StepKind, ZeroRule};
use cwlab_core::words::{factor_complexity, gamma_membership_probe, FiniteWord, GammaVerdict, Substitution, WordSpec};
use cwlab_core::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::formats::word_json;
use crate::report::Report;
use crate::CliError;

pub const PRESETS: [&str; 9] = [
    "sandwich-inequality",
    "grid-expression-sweep",
    "oracle-values",
    "monotonicity",
    "reductions",
    "menger",
    "pipeline",
    "words",
    "lem-embed",
];

/// An experiment configuration as read from a JSON file. Missing fields take
/// the preset defaults.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub name: String,
    /// A word spec shorthand, file path or inline JSON object.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horizon: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ExperimentConfig {
    pub fn named(name: &str) -> Self {
        ExperimentConfig { name: name.to_string(), ..Default::default() }
    }

    /// Fill the fields `self` leaves open from `other`.
    pub fn or(mut self, other: &ExperimentConfig) -> Self {
        if self.name.is_empty() {
            self.name = other.name.clone();
        }
        self.spec = self.spec.or_else(|| other.spec.clone());
        self.m = self.m.or(other.m);
        self.n = self.n.or(other.n);
        self.k = self.k.or(other.k);
        self.horizon = self.horizon.or(other.horizon);
        self.samples = self.samples.or(other.samples);
        self.seed = self.seed.or(other.seed);
        self
    }
}

/// Configuration with every field a preset reads filled in.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Resolved {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<Value>,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub horizon: usize,
    pub samples: usize,
    pub seed: u64,
}

struct Limits {
    m: (usize, usize),
    n: (usize, usize),
    k: (usize, usize),
    horizon: (usize, usize),
    samples: (usize, usize),
    randomized: bool,
}

// (default, cap) per field
fn limits(name: &str) -> Option<Limits> {
    let base = Limits { m: (0, 0), n: (0, 0), k: (0, 0), horizon: (0, 0), samples: (0, 0), randomized: false };
    Some(match name {
        "sandwich-inequality" => Limits { n: (7, 7), ..base },
        "grid-expression-sweep" => Limits { m: (5, 6), n: (4, 5), ..base },
        "oracle-values" => base,
        "monotonicity" => Limits { n: (8, 10), samples: (200, 5000), randomized: true, ..base },
        "reductions" => Limits { m: (16, 20), ..base },
        "menger" => Limits { k: (4, 4), samples: (50, 2000), randomized: true, ..base },
        "pipeline" => Limits { n: (10, 10), samples: (20, 500), randomized: true, ..base },
        "words" => Limits { n: (12, 16), horizon: (10_000, 200_000), ..base },
        "lem-embed" => Limits { m: (5, 6), n: (10, 12), k: (5, 5), ..base },
        _ => return None,
    })
}

pub const DEFAULT_SEED: u64 = 20_241_015;

/// Validate `cfg` against the preset named in it and fill in defaults.
pub fn resolve(cfg: &ExperimentConfig) -> Result<Resolved, CliError> {
    if cfg.name.is_empty() {
        return Err(CliError::Usage(format!("experiment config has no name; presets: {}", PRESETS.join(", "))));
    }
    let lim = limits(&cfg.name).ok_or_else(|| CliError::Usage(format!("unknown preset {:?}; presets: {}", cfg.name, PRESETS.join(", "))))?;
    let pick = |field: &str, v: Option<usize>, (default, cap): (usize, usize)| -> Result<usize, CliError> {
        let v = v.unwrap_or(default);
        if v > cap {
            return Err(CliError::Usage(format!("{}: {field} = {v} exceeds the cap {cap}", cfg.name)));
        }
        Ok(v)
    };
    if let Some(spec) = &cfg.spec {
        spec_from_value(spec)?;
    }
    Ok(Resolved {
        name: cfg.name.clone(),
        spec: cfg.spec.clone(),
        m: pick("m", cfg.m, lim.m)?,
        n: pick("n", cfg.n, lim.n)?,
        k: pick("k", cfg.k, lim.k)?,
        horizon: pick("horizon", cfg.horizon, lim.horizon)?,
        samples: pick("samples", cfg.samples, lim.samples)?,
        seed: if lim.randomized { cfg.seed.unwrap_or(DEFAULT_SEED) } else { 0 },
    })
}

pub fn spec_from_value(v: &Value) -> Result<WordSpec, CliError> {
    match v {
        Value::String(s) => word_json::resolve(s),
        Value::Object(_) => word_json::parse(&v.to_string()),
        _ => Err(CliError::Usage("spec must be a string or an object".into())),
    }
}

pub fn run(cfg: &Resolved) -> Result<Report, CliError> {
    let config = serde_json::to_value(cfg)?;
    let mut r = Report::new(&cfg.name, config);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    match cfg.name.as_str() {
        "sandwich-inequality" => sandwich(cfg, &mut r)?,
        "grid-expression-sweep" => grid_sweep(cfg, &mut r)?,
        "oracle-values" => oracle_values(&mut r)?,
        "monotonicity" => monotonicity(cfg, &mut rng, &mut r)?,
        "reductions" => reductions(cfg, &mut r)?,
        "menger" => menger(cfg, &mut rng, &mut r)?,
        "pipeline" => pipeline(cfg, &mut rng, &mut r)?,
        "words" => words(cfg, &mut r)?,
        "lem-embed" => lem_embed(cfg, &mut r)?,
        other => return Err(CliError::Usage(format!("unknown preset {other:?}"))),
    }
    Ok(r)
}

fn cwd(g: &Graph) -> Result<usize, CliError> {
    let k = g.n().max(1);
    exact_cliquewidth(g, k, None)?.width().ok_or_else(|| CliError::Usage("clique-width search exhausted".into()))
}

fn sandwich(cfg: &Resolved, r: &mut Report) -> Result<(), CliError> {
    let mut per_n = Vec::new();
    let mut bad = Vec::new();
    for n in 1..=cfg.n {
        let graphs = enumerate_graphs(n)?;
        let mut widths = BTreeSet::new();
        for g in &graphs {
            let rw = exact_rankwidth(g)?.width;
            let cw = cwd(g)?;
            widths.insert((rw, cw));
            if !(rw <= cw && cw < (1 << (rw + 1))) {
                bad.push(format!("n={n} edges={:?} rwd={rw} cwd={cw}", g.edges()));
            }
        }
        per_n.push(json!({"n": n, "graphs": graphs.len(), "pairs": widths.into_iter().map(|(a, b)| [a, b]).collect::<Vec<_>>()}));
    }
    let total: u64 = per_n.iter().map(|v| v["graphs"].as_u64().unwrap()).sum();
    r.check("rwd <= cwd <= 2^(rwd+1)-1", bad.is_empty(), format!("{total} graphs on 1..={} vertices, {} violations", cfg.n, bad.len()));
    r.record("per_n", per_n);
    r.record("violations", bad);
    Ok(())
}

fn words_over(alphabet: &[u8], len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w| alphabet.iter().map(move |d| format!("{w}{d}"))).collect();
    }
    out
}

fn grid_sweep(cfg: &Resolved, r: &mut Report) -> Result<(), CliError> {
    let mut cases = 0;
    let mut worst = 0i64;
    let mut bad = Vec::new();
    for len in 1..=cfg.n {
        for factor in words_over(&[0, 2, 3], len) {
            let t = factor.chars().filter(|&c| c != '0').count();
            if t == 0 {
                continue;
            }
            let w = WordSpec::explicit(&factor)?;
            for m in 1..=cfg.m {
                let e = grid_expression(&w, 1, 1, m, len + 1)?;
                let g = build_h(&w, 1, 1, m, len + 1)?;
                let labels = label_count(&e);
                let bound = 6 * t + 3;
                worst = worst.max(labels as i64 - bound as i64);
                if !builds_graph(&e, &g)? || labels > bound {
                    bad.push(format!("{factor} m={m}: {labels} labels, bound {bound}"));
                }
                cases += 1;
            }
        }
    }
    r.check("grid expressions rebuild the window within 6t+3 labels", bad.is_empty(), format!("{cases} windows, largest labels-minus-bound {worst}"));
    r.record("violations", bad);
    Ok(())
}

fn oracle_values(r: &mut Report) -> Result<(), CliError> {
    let cycle = |n: usize| Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>());
    let cases = [
        ("edgeless-5", Graph::with_vertices(5), 1),
        ("K2", Graph::from_edges(2, &[(0, 1)])?, 2),
        ("P4", Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])?, 3),
        ("C5", cycle(5)?, 3),
    ];
    for (name, g, want) in cases {
        let got = cwd(&g)?;
        r.check(format!("cwd({name}) = {want}"), got == want, format!("computed {got}"));
    }
    Ok(())
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Result<Graph, CliError> {
    let p = rng.gen_range(0.2..0.8);
    let mut g = Graph::with_vertices(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

/// A trace of 1 to 5 random local complementations, pivots and deletions.
fn random_trace(rng: &mut ChaCha8Rng, g: Graph) -> Result<ReductionTrace, CliError> {
    let mut t = ReductionTrace::new(g);
    for _ in 0..rng.gen_range(1..=5) {
        let h = &t.final_graph;
        if h.n() == 0 {
            break;
        }
        let ids: Vec<usize> = h.vertices().iter().map(|v| v.id).collect();
        let edges = h.edges();
        match rng.gen_range(0..3) {
            0 => t.push(StepKind::LocalComplement(ids[rng.gen_range(0..ids.len())]), "random local complementation")?,
            1 if !edges.is_empty() => {
                let (a, b) = edges[rng.gen_range(0..edges.len())];
                t.push(StepKind::Pivot(h.vertex(a).id, h.vertex(b).id), "random pivot")?
            }
            _ => {
                let v = ids[rng.gen_range(0..ids.len())];
                t.push(StepKind::DeleteVertices([v].into_iter().collect()), "random deletion")?
            }
        }
    }
    Ok(t)
}

fn monotonicity(cfg: &Resolved, rng: &mut ChaCha8Rng, r: &mut Report) -> Result<(), CliError> {
    let mut bad = Vec::new();
    let mut steps = 0;
    for i in 0..cfg.samples {
        let n = rng.gen_range(2..=cfg.n.max(2));
        let g = random_graph(rng, n)?;
        let t = random_trace(rng, g)?;
        steps += t.steps.len();
        let before = exact_rankwidth(&t.initial)?.width;
        let after = exact_rankwidth(&t.final_graph)?.width;
        if after > before {
            bad.push(format!("sample {i}: rwd {before} -> {after}"));
        }
    }
    r.check("rwd(vertex minor) <= rwd(graph)", bad.is_empty(), format!("{} traces, {steps} steps, {} violations", cfg.samples, bad.len()));
    r.record("violations", bad);
    Ok(())
}

fn grid(word: &str, rows: usize) -> Result<Graph, CliError> {
    Ok(build_h(&WordSpec::explicit(word)?, 1, 1, rows, word.len() + 1)?)
}

fn reductions(cfg: &Resolved, r: &mut Report) -> Result<(), CliError> {
    let zero = [
        ("00", "0", ZeroRule::Double),
        ("01", "1", ZeroRule::BesideOne),
        ("10", "1", ZeroRule::BesideOne),
        ("02", "2", ZeroRule::BesideTwoThree),
        ("20", "2", ZeroRule::BesideTwoThree),
        ("03", "3", ZeroRule::BesideTwoThree),
        ("30", "3", ZeroRule::BesideTwoThree),
    ];
    let one = [
        ("211", "2", OneRule::Single),
        ("112", "2", OneRule::Single),
        ("311", "3", OneRule::Single),
        ("113", "3", OneRule::Single),
        ("212", "22", OneRule::Same),
        ("313", "33", OneRule::Same),
        ("213", "22", OneRule::Mixed),
        ("312", "33", OneRule::Mixed),
    ];
    let rows = 8..=cfg.m.max(8);
    let mut run = |word: &str, want: &str, apply: &dyn Fn(&Graph) -> cwlab_core::Result<ReductionTrace>| -> Result<(), CliError> {
        let mut bad = Vec::new();
        for m in rows.clone() {
            let t = apply(&grid(word, m)?)?;
            let got = infer_letters(&t.final_graph)?.to_string();
            let first = t.final_graph.coord(0).map(|c| c.1).unwrap_or(0);
            let rr = t.final_graph.column(first).len();
            let iso = got == want && is_isomorphic(&t.final_graph.plain(), &grid(want, rr)?.plain());
            if !iso || 2 * rr + 4 < m {
                bad.push(format!("m={m}: got {got} with {rr} rows"));
            }
        }
        r.check(format!("{word} -> {want}"), bad.is_empty(), format!("rows {}..={} {}", rows.start(), rows.end(), bad.join("; ")).trim_end().to_string());
        Ok(())
    };
    for (word, want, rule) in zero {
        run(word, want, &|g| remove_zero(g, 2, rule))?;
    }
    for (word, want, rule) in one {
        run(word, want, &|g| remove_one(g, 1, rule))?;
    }
    Ok(())
}

fn window(w: &WordSpec, rows: usize, cols: usize, cells: &[(usize, usize)]) -> Result<Graph, CliError> {
    let h = build_h(w, 1, 1, rows, cols)?;
    let ps: Vec<usize> = cells.iter().map(|&(r, c)| h.position_of_coord(r, c).expect("cell inside window")).collect();
    Ok(h.induced_subgraph(&ps)?)
}

fn random_cells(rng: &mut ChaCha8Rng, rows: usize, cols: usize, p: f64) -> Vec<(usize, usize)> {
    (1..=rows).flat_map(|r| (1..=cols).map(move |c| (r, c))).filter(|_| rng.gen_bool(p)).collect()
}

fn random_word(rng: &mut ChaCha8Rng, len: usize, alphabet: &[u8]) -> String {
    (0..len).map(|_| char::from(b'0' + alphabet[rng.gen_range(0..alphabet.len())])).collect()
}

fn menger(cfg: &Resolved, rng: &mut ChaCha8Rng, r: &mut Report) -> Result<(), CliError> {
    let mut bad = Vec::new();
    let mut full = 0;
    for k in 1..=cfg.k {
        for beta in words_over(&[0, 2, 3], k - 1) {
            let w = WordSpec::explicit(&beta)?;
            let g = build_h(&w, 1, 1, k, k)?;
            let s = max_disjoint_paths(&build_cluster_graph(&g, &w, 1..=k)?).s();
            if s != k {
                bad.push(format!("{beta}: s = {s}"));
            }
            full += 1;
        }
    }
    r.check("full grids H(k,k) have k disjoint paths", bad.is_empty(), format!("{full} grids with k <= {}", cfg.k));

    let (mut found, mut tries) = (0, 0);
    let mut paths_bad = Vec::new();
    let mut mu_bad = Vec::new();
    let mut worst_mu = 0;
    while found < cfg.samples && tries < cfg.samples * 200 {
        tries += 1;
        let k = rng.gen_range(2..=cfg.k.max(2));
        let beta = random_word(rng, k - 1, &[0, 1, 2, 3]);
        let w = WordSpec::explicit(&beta)?;
        let rows = rng.gen_range(k..k + 4);
        let cells = random_cells(rng, rows, k, 0.7);
        let g = window(&w, rows, k, &cells)?;
        if find_induced_embedding(&build_h(&w, 1, 1, k, k)?.plain(), &g.plain()).is_some() {
            continue;
        }
        let b = match build_cluster_graph(&g, &w, 1..=k) {
            Ok(b) => b,
            Err(Error::NonConsecutiveColumns { .. } | Error::NonPrimeCluster { .. }) => continue,
            Err(e) => return Err(e.into()),
        };
        found += 1;
        let sp = max_disjoint_paths(&b);
        if sp.s() >= k {
            paths_bad.push(format!("{beta} cells {cells:?}: s = {}", sp.s()));
        }
        let (x, y) = xy_graph_partition(&sp, &b)?;
        let cap = 4 * k * k - 3 * k;
        for side in [&x, &y] {
            let ps: Vec<usize> = side.iter().map(|&id| g.position_of_id(id).expect("window vertex")).collect();
            let mu = similarity_partition(&g, &ps)?.mu();
            worst_mu = worst_mu.max(mu);
            if mu > cap {
                mu_bad.push(format!("{beta} cells {cells:?}: mu = {mu} > {cap}"));
            }
        }
    }
    r.check("enough free windows", found == cfg.samples, format!("{found} of {} after {tries} draws", cfg.samples));
    r.check("free windows have at most k-1 disjoint paths", paths_bad.is_empty(), format!("{found} windows, {} violations", paths_bad.len()));
    r.check("mu(X), mu(Y) <= 4k^2-3k", mu_bad.is_empty(), format!("largest mu {worst_mu}"));
    r.record("path_violations", paths_bad);
    r.record("mu_violations", mu_bad);
    Ok(())
}

fn pipeline(cfg: &Resolved, rng: &mut ChaCha8Rng, r: &mut Report) -> Result<(), CliError> {
    let (mut found, mut tries) = (0, 0);
    let mut bad = Vec::new();
    let mut rows_out = Vec::new();
    while found < cfg.samples && tries < cfg.samples * 200 {
        tries += 1;
        let k = rng.gen_range(2..=3);
        let len = rng.gen_range(1..=2);
        let period = random_word(rng, len, &[0, 1, 2, 3]);
        let w = WordSpec::periodic(&period)?;
        let (rows, cols) = (rng.gen_range(1..=3), rng.gen_range(2..=5));
        let cells = random_cells(rng, rows, cols, 0.6);
        if cells.is_empty() || cells.len() > cfg.n {
            continue;
        }
        let g = window(&w, rows, cols, &cells)?;
        let out = match bar_partition(&g, &w, 1, k, k + len) {
            Ok(out) => out,
            Err(Error::ForbiddenPatternPresent) => continue,
            Err(e) => return Err(e.into()),
        };
        found += 1;
        let e = out.expression.as_ref().expect("non-empty graph");
        let builds = builds_graph(e, &g)?;
        let cw = cwd(&g)?;
        if !builds || out.labels < cw || out.labels as u64 > out.bound {
            bad.push(format!("period {period} k={k} cells {cells:?}: builds={builds} labels={} cwd={cw}", out.labels));
        }
        rows_out.push(json!({"period": period, "k": k, "n": g.n(), "cwd": cw, "labels": out.labels, "bound": out.bound}));
    }
    r.check("enough forbidden-pattern-free graphs", found == cfg.samples, format!("{found} of {} after {tries} draws", cfg.samples));
    r.check("composed expressions rebuild the graph with cwd <= labels <= bound", bad.is_empty(), format!("{found} graphs, {} violations", bad.len()));
    r.record("graphs", rows_out);
    r.record("violations", bad);
    Ok(())
}

fn words(cfg: &Resolved, r: &mut Report) -> Result<(), CliError> {
    let sturmian = match &cfg.spec {
        Some(v) => spec_from_value(v)?,
        None => WordSpec::golden(),
    };
    let complexity: Vec<usize> = (1..=cfg.n).map(|n| factor_complexity(&sturmian, n, 5000)).collect::<Result<_, _>>()?;
    let ok = complexity.iter().enumerate().all(|(i, &c)| c == i + 2);
    r.check("Sturmian complexity n+1", ok, format!("n = 1..={}: {complexity:?}", cfg.n));

    let psi = Substitution::psi();
    let weights: Vec<usize> = (0..=cfg.n).map(|n| psi.iterate(n).map(|w| w.weight())).collect::<Result<_, _>>()?;
    let ok = weights.iter().enumerate().all(|(n, &w)| w == 1 << n);
    r.check("weight(psi^n(1)) = 2^n", ok, format!("n = 0..={}", cfg.n));

    let probes = gamma_membership_probe(&WordSpec::psi(), 4, cfg.horizon)?;
    let exceeded: Vec<String> = probes.iter().filter(|p| p.verdict == GammaVerdict::BoundExceeded).map(|p| p.factor.to_string()).collect();
    let bounded = probes.iter().filter(|p| p.declared_bound.is_some()).count();
    r.check("psi gap weights within 2^(z+1)", exceeded.is_empty() && bounded == probes.len(), format!("{} factors up to length 4 at horizon {}, exceeded: {exceeded:?}", probes.len(), cfg.horizon));

    let comp = WordSpec::Explicit(WordSpec::psi().prefix(cfg.horizon)?.complement_binary());
    let probes = gamma_membership_probe(&comp, 1, cfg.horizon)?;
    let zero: FiniteWord = "0".parse()?;
    let flagged = probes.iter().any(|p| p.factor == zero && p.verdict == GammaVerdict::UnboundedTrend);
    r.check("complement of psi shows growing gaps", flagged, "factor 0".to_string());
    Ok(())
}

fn lem_embed(cfg: &Resolved, r: &mut Report) -> Result<(), CliError> {
    let test_words = ["1", "10", "100", "110", "1000", "1101000", "10010", "1110"];
    let mut agree = 0;
    let mut disagree = Vec::new();
    let mut missed = Vec::new();
    for k in 3..=cfg.k {
        for mask in 0u32..(1 << (k - 1)) {
            let beta: String = (0..k - 1).map(|i| if mask >> i & 1 == 1 { '1' } else { '0' }).collect();
            if !beta.contains('1') {
                continue;
            }
            let rev: String = beta.chars().rev().collect();
            let f = build_h(&WordSpec::explicit(&beta)?, 1, 1, 3, k)?;
            for word in test_words {
                let w = WordSpec::periodic(word)?;
                let letters = w.prefix(cfg.n - 1)?;
                let occurs = letters.contains_factor(&beta.parse()?) || letters.contains_factor(&rev.parse()?);
                for rows in 3..=cfg.m {
                    let embeds = find_induced_embedding(&f, &build_h(&w, 1, 1, rows, cfg.n)?).is_some();
                    match (embeds, occurs) {
                        (a, b) if a == b => agree += 1,
                        (true, false) => disagree.push(format!("beta={beta} word={word} rows={rows}")),
                        _ => missed.push(format!("beta={beta} word={word} rows={rows}")),
                    }
                }
            }
        }
    }
    r.check("factor occurs => factor graph embeds", missed.is_empty(), format!("{} misses", missed.len()));
    r.check(
        "factor graph embeds => factor or reverse occurs",
        disagree.is_empty(),
        format!("{agree} agreements, {} embeddings without the factor", disagree.len()),
    );
    r.record("embeds_without_factor", disagree);
    r.record("missed", missed);
    Ok(())
}
