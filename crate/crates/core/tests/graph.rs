use cwlab_core::graph::*;
use cwlab_core::words::{FiniteWord, Letter, WordSpec};
use proptest::prelude::*;

fn periodic(s: &str) -> WordSpec {
    WordSpec::periodic(s).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && permutations(g.n())
            .iter()
            .any(|p| g.edges().iter().all(|&(a, b)| h.has_edge(p[a], p[b])) && g.edge_count() == h.edge_count())
}

fn brute_embeds(pattern: &Graph, host: &Graph) -> bool {
    fn rec(pattern: &Graph, host: &Graph, map: &mut Vec<usize>) -> bool {
        let d = map.len();
        if d == pattern.n() {
            return true;
        }
        for x in 0..host.n() {
            if map.contains(&x) {
                continue;
            }
            if (0..d).all(|u| pattern.has_edge(u, d) == host.has_edge(map[u], x)) {
                map.push(x);
                if rec(pattern, host, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    rec(pattern, host, &mut Vec::new())
}

fn brute_prime(g: &Graph) -> bool {
    let n = g.n();
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < 2 || k == n {
            continue;
        }
        let inside: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let module = (0..n).filter(|&z| mask >> z & 1 == 0).all(|z| {
            let seen = inside.iter().filter(|&&v| g.has_edge(z, v)).count();
            seen == 0 || seen == k
        });
        if module {
            return false;
        }
    }
    true
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
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

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

#[test]
fn two_window_is_a_path() {
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let h = build_h(&periodic("2"), 1, 1, 2, 2).unwrap();
    assert!(is_isomorphic(&h, &p4));
    assert!(brute_isomorphic(&h, &p4));
}

#[test]
fn enumeration_matches_known_counts() {
    let counts: Vec<usize> = (1..=7).map(|n| enumerate_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn enumerated_graphs_are_pairwise_non_isomorphic() {
    let graphs = enumerate_graphs(5).unwrap();
    for (i, g) in graphs.iter().enumerate() {
        for h in &graphs[i + 1..] {
            assert!(!brute_isomorphic(g, h));
        }
    }
}

#[test]
fn w_embeds_for_all_short_two_three_words() {
    for n in 1..=6 {
        let len = (2 * n - 2).max(1);
        for mask in 0u32..(1 << len.min(10)) {
            let word: String = (0..len).map(|i| if mask >> (i % 10) & 1 == 1 { '3' } else { '2' }).collect();
            let w = WordSpec::explicit(&word).unwrap();
            let e = embed_w(&w, n).unwrap();
            assert!(e.embedding.is_induced(&e.pattern, &e.host), "word {word} n={n}");
            let grid = |x: usize, y: usize| e.pattern.position_of_coord(x, y).unwrap();
            for x in 1..=n {
                for y in 1..=n {
                    if x < n {
                        assert!(e.pattern.has_edge(grid(x, y), grid(x + 1, y)));
                    }
                    if y < n {
                        assert!(e.pattern.has_edge(grid(x, y), grid(x, y + 1)));
                    }
                }
            }
        }
    }
}

#[test]
fn w_edges_only_join_consecutive_diagonals() {
    let w = periodic("23");
    let g = build_w(&w, 5).unwrap();
    for (a, b) in g.edges() {
        let (x, y) = g.coord(a).unwrap();
        let (k, l) = g.coord(b).unwrap();
        assert_eq!((x + y).abs_diff(k + l), 1);
    }
    // 40 grid edges plus the extra diagonal-to-diagonal edges of the rule
    let mut extra = 0;
    for m in 1..=8usize {
        let letter = if m % 2 == 1 { 2 } else { 3 };
        for i in 1..=5usize {
            for j in 1..=5usize {
                if i + j - 1 != m {
                    continue;
                }
                for k in 1..=5usize {
                    for l in 1..=5usize {
                        if k + l - 1 == m + 1 && ((letter == 2 && k >= i) || (letter == 3 && l >= j)) {
                            extra += 1;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(g.edge_count(), extra);
    assert!(g.edge_count() > 40);
}

#[test]
fn c6_embeds_in_a_one_window() {
    let f = build_h(&periodic("1"), 1, 1, 3, 2).unwrap();
    let host = build_h(&periodic("1"), 1, 1, 4, 3).unwrap();
    let e = find_induced_embedding(&f, &host).unwrap();
    assert!(e.is_induced(&f, &host));
    let single = Graph::with_vertices(1);
    assert!(find_induced_embedding(&single, &host).is_some());
}

/// Windows of 3 and 4 rows over several words: `F_β` embeds whenever `β` or
/// its reverse occurs in the window's letters.
#[test]
fn factor_graphs_embed_when_factor_occurs() {
    let words = ["10", "100", "110", "1101000", "10010"];
    for k in 3..=4usize {
        for mask in 1u32..(1 << (k - 1)) {
            let beta: String = (0..k - 1).map(|i| if mask >> i & 1 == 1 { '1' } else { '0' }).collect();
            let rev: String = beta.chars().rev().collect();
            let f = build_h(&WordSpec::explicit(&beta).unwrap(), 1, 1, 3, k).unwrap();
            for word in words {
                let w = periodic(word);
                for rows in [3, 4] {
                    let cols = 7;
                    let letters = w.prefix(cols - 1).unwrap();
                    let occurs = letters.contains_factor(&beta.parse::<FiniteWord>().unwrap())
                        || letters.contains_factor(&rev.parse::<FiniteWord>().unwrap());
                    let host = build_h(&w, 1, 1, rows, cols).unwrap();
                    if occurs {
                        assert!(find_induced_embedding(&f, &host).is_some(), "beta={beta} word={word} rows={rows}");
                    }
                }
            }
        }
    }
}

/// The converse fails: these factor graphs embed in 3-row windows whose
/// letters contain neither the factor nor its reverse.
#[test]
fn factor_graphs_can_embed_without_the_factor() {
    for (beta, word, cols) in [("10", "1", 6), ("100", "10", 7), ("001", "110", 8), ("1000", "10", 9)] {
        let w = periodic(word);
        let letters = w.prefix(cols - 1).unwrap();
        let rev: String = beta.chars().rev().collect();
        assert!(!letters.contains_factor(&beta.parse().unwrap()));
        assert!(!letters.contains_factor(&rev.parse().unwrap()));
        let f = build_h(&WordSpec::explicit(beta).unwrap(), 1, 1, 3, beta.len() + 1).unwrap();
        let host = build_h(&w, 1, 1, 3, cols).unwrap();
        let e = find_induced_embedding(&f, &host).expect(beta);
        assert!(e.is_induced(&f, &host));
        assert!(brute_embeds(&f, &host));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn iso_agrees_with_brute_force(g in arb_graph(6), h in arb_graph(6)) {
        prop_assert_eq!(is_isomorphic(&g, &h), brute_isomorphic(&g, &h));
    }

    #[test]
    fn iso_is_invariant_under_shuffling(g in arb_graph(9), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm);
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn canonical_form_decides_isomorphism(g in arb_graph(6), h in arb_graph(6)) {
        prop_assert_eq!(canonical_form(&g).unwrap() == canonical_form(&h).unwrap(), brute_isomorphic(&g, &h));
    }

    #[test]
    fn embedding_search_agrees_with_brute_force(p in arb_graph(4), host in arb_graph(7)) {
        let found = find_induced_embedding(&p, &host);
        prop_assert_eq!(found.is_some(), brute_embeds(&p, &host));
        if let Some(e) = found {
            prop_assert!(e.is_induced(&p, &host));
            let image = host.induced_subgraph(e.image()).unwrap();
            prop_assert!(is_isomorphic(&image, &p));
        }
    }

    #[test]
    fn primality_agrees_with_subset_search(g in arb_graph(8)) {
        prop_assert_eq!(is_prime(&g), brute_prime(&g));
        if let Some(m) = nontrivial_module(&g) {
            prop_assert_eq!(similarity_partition(&g, &m).unwrap().mu(), 1);
            prop_assert!(m.len() >= 2 && m.len() < g.n());
        }
    }

    #[test]
    fn mu_one_iff_module(g in arb_graph(7), mask in any::<u32>()) {
        let u: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!u.is_empty());
        let p = similarity_partition(&g, &u).unwrap();
        let closure = module_closure(&g, &u);
        prop_assert_eq!(p.mu() == 1, closure == u);
        let total: usize = p.classes.iter().map(Vec::len).sum();
        prop_assert_eq!(total, u.len());
    }

    #[test]
    fn windows_restrict_coherently(word in proptest::collection::vec(0u8..4, 1..8), m in 1usize..5, i in 1usize..4, j in 1usize..4) {
        let w = WordSpec::Periodic(FiniteWord::from_values(&word).unwrap());
        let n = 6;
        let big = build_h(&w, i, j, m, n).unwrap();
        for n2 in 1..=n {
            let small = build_h(&w, i, j, m, n2).unwrap();
            let cols: Vec<usize> = (0..big.n()).filter(|&p| big.coord(p).unwrap().1 < j + n2).collect();
            prop_assert_eq!(big.induced_subgraph(&cols).unwrap(), small);
        }
    }

    #[test]
    fn window_edges_follow_link_rule(word in proptest::collection::vec(0u8..4, 1..6), m in 1usize..5) {
        let w = WordSpec::Periodic(FiniteWord::from_values(&word).unwrap());
        let g = build_h(&w, 2, 1, m, 4).unwrap();
        for a in 0..g.n() {
            for b in 0..g.n() {
                let (r, c) = g.coord(a).unwrap();
                let (s, d) = g.coord(b).unwrap();
                let expect = d == c + 1 && link_adjacent(Letter::new(word[(c - 1) % word.len()]).unwrap(), r, s);
                if d == c + 1 {
                    prop_assert_eq!(g.has_edge(a, b), expect);
                } else if c.abs_diff(d) != 1 {
                    prop_assert!(!g.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn shuffled_permutation_strategy_is_bijective(p in arb_perm(6)) {
        let mut q = p.clone();
        q.sort_unstable();
        prop_assert_eq!(q, (0..6).collect::<Vec<_>>());
    }
}
