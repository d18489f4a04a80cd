use std::collections::BTreeSet;

use cwlab_core::cliquewidth::{exact_cliquewidth, CliqueWidth};
use cwlab_core::graph::{build_h, enumerate_graphs, is_isomorphic, Graph};
use cwlab_core::vertexminor::*;
use cwlab_core::words::WordSpec;
use cwlab_core::Error;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn grid(word: &str, rows: usize) -> Graph {
    build_h(&WordSpec::explicit(word).unwrap(), 1, 1, rows, word.len() + 1).unwrap()
}

fn rows_of(g: &Graph) -> usize {
    g.column(g.coord(0).unwrap().1).len()
}

fn assert_grid_of(g: &Graph, word: &str) {
    assert_eq!(infer_letters(g).unwrap().to_string(), word);
    assert!(is_isomorphic(&g.plain(), &grid(word, rows_of(g)).plain()));
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::with_vertices(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

// Every branch decomposition, as the cubic trees on the leaves.
fn rankwidth_by_trees(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    // trees are grown by inserting leaf k on an edge of the tree on 0..k
    fn grow(g: &Graph, edges: &mut Vec<(usize, usize)>, next_leaf: usize, next_inner: usize, best: &mut usize) {
        let n = g.n();
        if next_leaf == n {
            let width = edges.iter().map(|&e| side_rank(g, edges, e)).max().unwrap_or(0);
            *best = (*best).min(width);
            return;
        }
        for i in 0..edges.len() {
            let (a, b) = edges[i];
            let mid = next_inner;
            edges[i] = (a, mid);
            edges.push((mid, b));
            edges.push((mid, next_leaf));
            grow(g, edges, next_leaf + 1, next_inner + 1, best);
            edges.pop();
            edges.pop();
            edges[i] = (a, b);
        }
    }
    fn side_rank(g: &Graph, edges: &[(usize, usize)], (a, b): (usize, usize)) -> usize {
        let mut seen = BTreeSet::from([a]);
        let mut stack = vec![a];
        while let Some(v) = stack.pop() {
            for &(x, y) in edges {
                for (p, q) in [(x, y), (y, x)] {
                    if p == v && !(p == a && q == b) && seen.insert(q) {
                        stack.push(q);
                    }
                }
            }
        }
        let side: BTreeSet<usize> = seen.into_iter().filter(|&v| v < g.n()).collect();
        cut_rank(g, &side).unwrap()
    }
    let mut best = usize::MAX;
    grow(g, &mut vec![(0, 1)], 2, 100, &mut best);
    best
}

#[test]
fn rankwidth_matches_tree_enumeration_up_to_six_vertices() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let rw = exact_rankwidth(&g).unwrap();
            assert_eq!(rw.width, rankwidth_by_trees(&g), "{:?}", g.edges());
            assert_eq!(branch_width(&g, rw.witness.as_ref().unwrap()).unwrap(), rw.width);
        }
    }
}

#[test]
fn rankwidth_matches_tree_enumeration_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..24 {
        let n = if k < 20 { 7 } else { 8 };
        let g = random_graph(&mut rng, n, 0.45);
        assert_eq!(exact_rankwidth(&g).unwrap().width, rankwidth_by_trees(&g));
    }
}

#[test]
fn sandwich_inequality_on_small_graphs() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let rw = exact_rankwidth(&g).unwrap().width;
            let CliqueWidth::Exact { width: cw, .. } = exact_cliquewidth(&g, 8, None).unwrap() else { panic!() };
            assert!(rw <= cw && cw < 1 << (rw + 1), "rw {rw} cw {cw}");
        }
    }
}

#[test]
fn zero_removals_give_the_shorter_grid() {
    let cases = [
        ("00", "0"),
        ("01", "1"),
        ("10", "1"),
        ("02", "2"),
        ("20", "2"),
        ("03", "3"),
        ("30", "3"),
    ];
    for (word, want) in cases {
        for m in 4..=13 {
            let g = grid(word, m);
            let rule = match word {
                "00" => ZeroRule::Double,
                "01" | "10" => ZeroRule::BesideOne,
                _ => ZeroRule::BesideTwoThree,
            };
            let t = remove_zero(&g, 2, rule).unwrap();
            assert_grid_of(&t.final_graph, want);
            let r = rows_of(&t.final_graph);
            assert!(2 * r + 4 >= m, "{word} m={m} r={r}");
            assert_eq!(replay(&g, &t.steps).unwrap(), t.final_graph);
        }
    }
}

#[test]
fn zero_removal_examples() {
    let t = remove_zero(&grid("00", 6), 2, ZeroRule::Double).unwrap();
    assert!(is_isomorphic(&t.final_graph.plain(), &grid("0", 6).plain()));
    let t = remove_zero(&grid("02", 8), 2, ZeroRule::BesideTwoThree).unwrap();
    assert!(is_isomorphic(&t.final_graph.plain(), &grid("2", 4).plain()));
    let t = remove_zero(&grid("01", 6), 2, ZeroRule::BesideOne).unwrap();
    assert!(is_isomorphic(&t.final_graph.plain(), &grid("1", 6).plain()));
}

#[test]
fn zero_removal_inside_a_longer_window() {
    for m in 5..=9 {
        let t = remove_zero(&grid("3102231", m), 4, ZeroRule::BesideTwoThree).unwrap();
        assert_grid_of(&t.final_graph, "312231");
    }
}

#[test]
fn one_removals_give_the_shorter_grid() {
    let cases = [
        ("211", "2", OneRule::Single),
        ("112", "2", OneRule::Single),
        ("311", "3", OneRule::Single),
        ("113", "3", OneRule::Single),
        ("212", "22", OneRule::Same),
        ("313", "33", OneRule::Same),
        ("213", "22", OneRule::Mixed),
        ("312", "33", OneRule::Mixed),
    ];
    for (word, want, rule) in cases {
        for m in 8..=16 {
            let g = grid(word, m);
            let t = remove_one(&g, 1, rule).unwrap();
            assert_grid_of(&t.final_graph, want);
            assert_eq!(replay(&g, &t.steps).unwrap(), t.final_graph);
        }
    }
}

#[test]
fn one_removal_inside_a_longer_window() {
    for m in 8..=11 {
        let t = remove_one(&grid("22133", m), 2, OneRule::Mixed).unwrap();
        assert_grid_of(&t.final_graph, "2223");
    }
}

#[test]
fn removal_errors() {
    let g = grid("23", 6);
    assert_eq!(remove_zero(&g, 2, ZeroRule::Double), Err(Error::FactorMismatch { column: 2, rule: "00" }));
    assert!(matches!(remove_zero(&grid("02", 3), 2, ZeroRule::BesideTwoThree), Err(Error::TooFewRows { .. })));
    assert!(matches!(remove_one(&grid("212", 6), 2, OneRule::Same), Err(Error::FactorMismatch { .. })));
    assert!(matches!(remove_one(&grid("211", 6), 1, OneRule::Same), Err(Error::FactorMismatch { .. })));
    assert_eq!(infer_letters(&Graph::with_vertices(3)), Err(Error::MissingCoords(0)));
}

#[test]
fn reduce_to_23_examples() {
    let r = reduce_to_23(&WordSpec::explicit("023").unwrap(), 1, 3).unwrap();
    assert_eq!(r.word.to_string(), "23");
    assert_eq!(r.rows[0], 12);
    assert!(*r.rows.last().unwrap() >= 2);
    assert_eq!(replay(&r.trace.initial, &r.trace.steps).unwrap(), r.trace.final_graph);

    let r = reduce_to_23(&WordSpec::explicit("23").unwrap(), 1, 2).unwrap();
    assert!(r.trace.steps.is_empty());
    assert_eq!(r.word.to_string(), "23");

    assert_eq!(reduce_to_23(&WordSpec::explicit("0101").unwrap(), 1, 4).map(|_| ()), Err(Error::NoTwoThreeLetter));
}

#[test]
fn reduce_to_23_keeps_enough_rows() {
    let words = ["0123", "1021", "21113", "3010", "12031", "200103", "110211", "3112"];
    for w in words {
        let spec = WordSpec::explicit(w).unwrap();
        let r = reduce_to_23(&spec, 1, w.len()).unwrap();
        let want: String = w.chars().filter(|c| *c == '2' || *c == '3').collect();
        let q = want.len();
        assert!(r.word.letters().iter().all(|l| l.is_two_three()));
        assert!(*r.rows.last().unwrap() >= q, "{w}: {:?}", r.rows);
        for pair in r.rows.windows(2) {
            assert!(2 * pair[1] + 4 >= pair[0], "{w}: {:?}", r.rows);
        }
        assert_eq!(replay(&r.trace.initial, &r.trace.steps).unwrap(), r.trace.final_graph);
        assert!(is_isomorphic(&r.trace.final_graph.plain(), &grid(&r.word.to_string(), rows_of(&r.trace.final_graph)).plain()));
    }
}

fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::with_vertices(n);
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        g.add_edge(a, b).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_bipartite(max: usize) -> impl Strategy<Value = (Graph, usize)> {
    (2..=max).prop_flat_map(|n| {
        (1..n, proptest::collection::vec(any::<bool>(), n * n)).prop_map(move |(split, bits)| {
            let mut g = Graph::with_vertices(n);
            for a in 0..split {
                for b in split..n {
                    if bits[a * n + b] {
                        g.add_edge(a, b).unwrap();
                    }
                }
            }
            (g, split)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn local_complement_is_an_involution(g in arb_graph(10), v in 0usize..10) {
        let v = v % g.n();
        prop_assert_eq!(local_complement(&local_complement(&g, v).unwrap(), v).unwrap(), g);
    }

    #[test]
    fn pivot_is_symmetric(g in arb_graph(10)) {
        for (v, w) in g.edges() {
            prop_assert_eq!(pivot(&g, v, w).unwrap(), pivot(&g, w, v).unwrap());
        }
    }

    #[test]
    fn bipartite_pivot_rules_agree((g, _) in arb_bipartite(10)) {
        for (v, w) in g.edges() {
            let three = pivot(&g, v, w).unwrap();
            let mut swap: Vec<usize> = (0..g.n()).collect();
            swap.swap(v, w);
            let rule = pivot_bipartite(&g, v, w).unwrap().permuted(&swap);
            prop_assert_eq!(three.edges(), rule.edges());
        }
    }

    #[test]
    fn rankwidth_does_not_grow_under_vertex_minors(g in arb_graph(8), ops in proptest::collection::vec((0u8..3, 0usize..8, 0usize..8), 1..5)) {
        let mut t = ReductionTrace::new(g.clone());
        for (kind, a, b) in ops {
            let ids: Vec<usize> = t.final_graph.vertices().iter().map(|v| v.id).collect();
            if ids.is_empty() {
                break;
            }
            let (a, b) = (ids[a % ids.len()], ids[b % ids.len()]);
            let step = match kind {
                0 => StepKind::LocalComplement(a),
                1 => StepKind::DeleteVertices([a].into_iter().collect()),
                _ => {
                    let (pa, pb) = (t.final_graph.position_of_id(a).unwrap(), t.final_graph.position_of_id(b).unwrap());
                    if !t.final_graph.has_edge(pa, pb) {
                        continue;
                    }
                    StepKind::Pivot(a, b)
                }
            };
            t.push(step, "random").unwrap();
        }
        prop_assert_eq!(replay(&g, &t.steps).unwrap(), t.final_graph.clone());
        let before = exact_rankwidth(&g).unwrap().width;
        let after = exact_rankwidth(&t.final_graph).unwrap().width;
        prop_assert!(after <= before);
    }

    #[test]
    fn local_complement_keeps_rankwidth(g in arb_graph(8), v in 0usize..8) {
        let v = v % g.n();
        let h = local_complement(&g, v).unwrap();
        prop_assert_eq!(exact_rankwidth(&h).unwrap().width, exact_rankwidth(&g).unwrap().width);
    }
}
