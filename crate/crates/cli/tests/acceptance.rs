//! One PASS/FAIL line per acceptance criterion. Criteria listed in
//! `KNOWN_FAILURES` are expected to fail; the run exits non-zero only when
//! the outcome differs from that expectation.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use cwlab::experiments::{self, ExperimentConfig};
use cwlab::report::Report;
use cwlab_core::cliquewidth::{exact_cliquewidth, CliqueWidth};
use cwlab_core::graph::Graph;

const KNOWN_FAILURES: &[u32] = &[9];

/// Non-isomorphic graphs on 1..=7 vertices.
const GRAPH_COUNTS: [u64; 7] = [1, 2, 4, 11, 34, 156, 1044];

struct Outcome {
    id: u32,
    passed: bool,
    detail: String,
}

fn preset(name: &str) -> Report {
    let resolved = experiments::resolve(&ExperimentConfig::named(name)).expect("preset resolves");
    experiments::run(&resolved).expect("preset runs")
}

fn from_report(id: u32, r: &Report) -> Outcome {
    let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    let detail = r.checks.iter().map(|c| c.detail.as_str()).collect::<Vec<_>>().join("; ");
    let detail = if failed.is_empty() { detail } else { format!("failed [{}]: {detail}", failed.join(", ")) };
    Outcome { id, passed: r.passed(), detail }
}

/// Exhaustive search for a k-expression of a graph on at most 8 vertices.
/// A state is the set of built vertices, their labels and the edges added so
/// far. States where two equally labelled vertices still need different
/// edges are dead and dropped.
mod expression_search {
    use super::*;

    #[derive(Clone, Copy, PartialEq, Eq, Hash)]
    struct State {
        built: u8,
        labels: [u8; 8],
        edges: u64,
    }

    fn pair(u: usize, v: usize) -> u64 {
        let (a, b) = (u.min(v), u.max(v));
        1 << (a * 8 + b)
    }

    struct Target {
        n: usize,
        edges: u64,
    }

    impl Target {
        fn pending(&self, s: &State, u: usize, x: usize) -> bool {
            self.edges & pair(u, x) != 0 && s.edges & pair(u, x) == 0
        }

        fn alive(&self, s: &State) -> bool {
            if s.edges & !self.edges != 0 {
                return false;
            }
            for u in 0..self.n {
                for w in u + 1..self.n {
                    if s.built >> u & 1 == 0 || s.built >> w & 1 == 0 || s.labels[u] != s.labels[w] {
                        continue;
                    }
                    if (0..self.n).any(|x| x != u && x != w && self.pending(s, u, x) != self.pending(s, w, x)) {
                        return false;
                    }
                    if self.pending(s, u, w) {
                        return false;
                    }
                }
            }
            true
        }

        fn canonical(&self, mut s: State) -> State {
            let mut map = [0u8; 9];
            let mut next = 1;
            for v in 0..self.n {
                let l = s.labels[v] as usize;
                if l != 0 {
                    if map[l] == 0 {
                        map[l] = next;
                        next += 1;
                    }
                    s.labels[v] = map[l];
                }
            }
            s
        }
    }

    pub fn has_expression(g: &Graph, k: u8) -> bool {
        let n = g.n();
        assert!(n <= 8);
        let target = Target { n, edges: g.edges().iter().fold(0, |acc, &(u, v)| acc | pair(u, v)) };
        let full = ((1u16 << n) - 1) as u8;
        let mut seen: HashSet<State> = HashSet::new();
        let mut all: Vec<State> = Vec::new();
        let mut work: Vec<State> = (0..n)
            .map(|v| {
                let mut labels = [0; 8];
                labels[v] = 1;
                State { built: 1 << v, labels, edges: 0 }
            })
            .collect();
        while let Some(s) = work.pop() {
            if !seen.insert(s) {
                continue;
            }
            if s.built == full && s.edges == target.edges {
                return true;
            }
            let mut next = Vec::new();
            let used: Vec<u8> = (1..=k).filter(|&l| (0..n).any(|v| s.labels[v] == l)).collect();
            for &a in &used {
                for &b in &used {
                    if a == b {
                        continue;
                    }
                    let mut r = s;
                    for v in 0..n {
                        if r.labels[v] == a {
                            r.labels[v] = b;
                        }
                    }
                    next.push(r);
                    if a < b {
                        let mut j = s;
                        for u in 0..n {
                            for w in 0..n {
                                if s.labels[u] == a && s.labels[w] == b {
                                    j.edges |= pair(u, w);
                                }
                            }
                        }
                        next.push(j);
                    }
                }
            }
            for t in &all {
                if t.built & s.built != 0 {
                    continue;
                }
                // Both label alignments up to permutation: try every injective
                // renaming of the other side's labels into 1..=k.
                for perm in permutations(k) {
                    let mut u = State { built: s.built | t.built, labels: s.labels, edges: s.edges | t.edges };
                    for v in 0..n {
                        if t.built >> v & 1 == 1 {
                            u.labels[v] = perm[t.labels[v] as usize - 1];
                        }
                    }
                    next.push(u);
                }
            }
            all.push(s);
            for t in next {
                let t = target.canonical(t);
                if target.alive(&t) && !seen.contains(&t) {
                    work.push(t);
                }
            }
        }
        false
    }

    fn permutations(k: u8) -> Vec<Vec<u8>> {
        fn extend(k: u8, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if prefix.len() == k as usize {
                out.push(prefix.clone());
                return;
            }
            for l in 1..=k {
                if !prefix.contains(&l) {
                    prefix.push(l);
                    extend(k, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        extend(k, &mut Vec::new(), &mut out);
        out
    }
}

fn smallest_k(g: &Graph) -> u8 {
    (1..=g.n() as u8).find(|&k| expression_search::has_expression(g, k)).unwrap()
}

fn criterion_two() -> Outcome {
    let graphs = [
        ("edgeless5", Graph::from_edges(5, &[]).unwrap(), 1),
        ("K2", Graph::from_edges(2, &[(0, 1)]).unwrap(), 2),
        ("P4", Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(), 3),
        ("C5", Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(), 3),
    ];
    let mut passed = true;
    let mut parts = Vec::new();
    for (name, g, want) in &graphs {
        let dp = match exact_cliquewidth(g, 6, None).unwrap() {
            CliqueWidth::Exact { width, .. } => width,
            CliqueWidth::GreaterThan(_) => 0,
        };
        let search = smallest_k(g) as usize;
        passed &= dp == *want && search == *want;
        parts.push(format!("{name}: dp={dp} search={search} expected={want}"));
    }
    Outcome { id: 2, passed, detail: parts.join(", ") }
}

fn criterion_three() -> Outcome {
    let start = Instant::now();
    let r = preset("sandwich-inequality");
    let mut out = from_report(3, &r);
    let counts: Vec<u64> = r.data["per_n"].as_array().unwrap().iter().map(|v| v["graphs"].as_u64().unwrap()).collect();
    let elapsed = start.elapsed().as_secs_f64();
    if counts != GRAPH_COUNTS {
        out.passed = false;
        out.detail.push_str(&format!("; class counts {counts:?} differ from {GRAPH_COUNTS:?}"));
    }
    if elapsed > 600.0 {
        out.passed = false;
    }
    out.detail.push_str(&format!("; {elapsed:.1}s"));
    out
}

fn main() -> ExitCode {
    let runs: Vec<(u32, &str, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "row-by-row expressions use at most 6t+3 labels", Box::new(|| from_report(1, &preset("grid-expression-sweep")))),
        (2, "exact clique-width matches known values and an exhaustive search", Box::new(criterion_two)),
        (3, "rwd <= cwd <= 2^(rwd+1)-1 on all graphs up to 7 vertices", Box::new(criterion_three)),
        (4, "rank-width does not grow along vertex-minor traces", Box::new(|| from_report(4, &preset("monotonicity")))),
        (5, "reduction operations give the reduced-word grid", Box::new(|| from_report(5, &preset("reductions")))),
        (6, "disjoint paths and separators on grid windows", Box::new(|| from_report(6, &preset("menger")))),
        (7, "bar partition expressions rebuild the graph", Box::new(|| from_report(7, &preset("pipeline")))),
        (8, "word complexity, weights and gap bounds", Box::new(|| from_report(8, &preset("words")))),
        (9, "factor graph embeds iff factor or reverse occurs", Box::new(|| from_report(9, &preset("lem-embed")))),
    ];
    let mut unexpected = 0;
    for (id, title, run) in runs {
        let start = Instant::now();
        let o = run();
        assert_eq!(o.id, id);
        let known = KNOWN_FAILURES.contains(&id);
        let tag = if o.passed { "PASS" } else { "FAIL" };
        let note = match (o.passed, known) {
            (false, true) => " (known failure)",
            (true, true) => " (expected to fail)",
            _ => "",
        };
        if o.passed == known {
            unexpected += 1;
        }
        println!("{tag} criterion {id}: {title}{note} [{:.1}s] {}", start.elapsed().as_secs_f64(), o.detail);
    }
    if unexpected == 0 {
        println!("acceptance: outcome matches expectations");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected outcome(s)");
        ExitCode::FAILURE
    }
}
