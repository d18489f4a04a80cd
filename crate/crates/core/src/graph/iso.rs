//! Isomorphism testing, canonical forms and enumeration of small graphs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`canonical_form`].
pub const CANONICAL_CAP: usize = 10;

/// Stable colour refinement run on several graphs at once, so that colours
/// are comparable between them.
fn refine(graphs: &[&Graph], initial: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut colours = initial;
    let mut classes = usize::MAX;
    loop {
        let mut sigs: Vec<Vec<(usize, Vec<usize>)>> = Vec::with_capacity(graphs.len());
        for (g, col) in graphs.iter().zip(&colours) {
            let s = (0..g.n())
                .map(|v| {
                    let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| col[u]).collect();
                    nb.sort_unstable();
                    (col[v], nb)
                })
                .collect();
            sigs.push(s);
        }
        let all: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().flatten().collect();
        let index: BTreeMap<&(usize, Vec<usize>), usize> = all.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next: Vec<Vec<usize>> = sigs.iter().map(|s| s.iter().map(|x| index[x]).collect()).collect();
        let count = index.len();
        colours = next;
        if count == classes {
            return colours;
        }
        classes = count;
    }
}

/// True iff an adjacency-preserving bijection exists. Coordinates and ids are ignored.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let cols = refine(&[g, h], vec![vec![0; n], vec![0; n]]);
    let (cg, ch) = (&cols[0], &cols[1]);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return false;
    }
    // rarest colour first, then stay connected to what is already placed
    let mut freq = BTreeMap::new();
    for &c in cg {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| g.has_edge(u, v)).count();
                (links, usize::MAX - freq[&cg[v]], usize::MAX - v)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(g, h, cg, ch, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for x in 0..h.n() {
        if used[x] || ch[x] != cg[v] {
            continue;
        }
        let ok = order[..depth].iter().all(|&u| g.has_edge(u, v) == h.has_edge(map[u], x));
        if !ok {
            continue;
        }
        map[v] = x;
        used[x] = true;
        if backtrack(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        used[x] = false;
    }
    map[v] = usize::MAX;
    false
}

/// Canonical adjacency code: equal for two graphs iff they are isomorphic.
///
/// The code is the lexicographically largest upper-triangle bit string over
/// all orderings compatible with the refined colour classes. Exhaustive within
/// classes, so it is capped at [`CANONICAL_CAP`] vertices.
pub fn canonical_form(g: &Graph) -> Result<(usize, u64)> {
    let n = g.n();
    if n > CANONICAL_CAP {
        return Err(Error::SizeCap { what: "canonical form", size: n, cap: CANONICAL_CAP });
    }
    let colours = refine(&[g], vec![vec![0; n]]).pop().unwrap();
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(colours[v]).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    permute_cells(g, &cells, 0, &mut order, &mut best);
    Ok((n, best))
}

fn code_of(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = (code << 1) | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

fn permute_cells(g: &Graph, cells: &[Vec<usize>], cell: usize, order: &mut Vec<usize>, best: &mut u64) {
    if cell == cells.len() {
        *best = (*best).max(code_of(g, order));
        return;
    }
    let mut items = cells[cell].clone();
    heap_permutations(&mut items, &mut |perm| {
        let base = order.len();
        order.extend_from_slice(perm);
        permute_cells(g, cells, cell + 1, order, best);
        order.truncate(base);
    });
}

fn heap_permutations(items: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    f(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// produced by vertex augmentation and deduplicated by canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > CANONICAL_CAP {
        return Err(Error::SizeCap { what: "graph enumeration", size: n, cap: CANONICAL_CAP });
    }
    let mut level = vec![Graph::with_vertices(0)];
    for k in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (k - 1)) {
                let mut h = Graph::with_vertices(k);
                for (a, b) in g.edges() {
                    h.add_edge(a, b)?;
                }
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, k - 1)?;
                    }
                }
                if seen.insert(canonical_form(&h)?) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn basic_isomorphisms() {
        let c4 = cycle(4);
        assert!(is_isomorphic(&c4, &c4.permuted(&[2, 0, 3, 1])));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&p4, &star));
        // 2C3 vs C6: same degrees, refinement cannot split them
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&two_triangles, &cycle(6)));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156]);
    }
}
