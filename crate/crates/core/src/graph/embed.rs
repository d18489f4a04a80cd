//! Induced-subgraph search.

use alloc::vec;
use alloc::vec::Vec;

use super::Graph;

/// Injective map from pattern positions to host positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Check injectivity and the induced-subgraph condition edge by edge.
    pub fn is_induced(&self, pattern: &Graph, host: &Graph) -> bool {
        let n = pattern.n();
        if self.map.len() != n || self.map.iter().any(|&x| x >= host.n()) {
            return false;
        }
        let mut img = self.map.clone();
        img.sort_unstable();
        img.dedup();
        if img.len() != n {
            return false;
        }
        (0..n).all(|a| (a + 1..n).all(|b| pattern.has_edge(a, b) == host.has_edge(self.map[a], self.map[b])))
    }

    /// Image positions in pattern order.
    pub fn image(&self) -> &[usize] {
        &self.map
    }
}

/// Find an induced copy of `pattern` in `host`.
///
/// Pattern vertices are placed greedily: most neighbours already placed, then
/// higher degree, then lower position. Host candidates are tried in ascending
/// position, so the result is deterministic.
pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<Embedding> {
    let n = pattern.n();
    if n > host.n() {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                (links, pattern.degree(v), usize::MAX - v)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; host.n()];
    if search(pattern, host, &order, 0, &mut map, &mut used) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn search(pattern: &Graph, host: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    // restrict to neighbours of an already-placed neighbour when there is one
    let anchor = order[..depth].iter().find(|&&u| pattern.has_edge(u, v)).map(|&u| map[u]);
    let candidates: Vec<usize> = match anchor {
        Some(a) => host.neighbors(a).iter().collect(),
        None => (0..host.n()).collect(),
    };
    for x in candidates {
        if used[x] || host.degree(x) < pattern.degree(v) {
            continue;
        }
        if !order[..depth].iter().all(|&u| pattern.has_edge(u, v) == host.has_edge(map[u], x)) {
            continue;
        }
        map[v] = x;
        used[x] = true;
        if search(pattern, host, order, depth + 1, map, used) {
            return true;
        }
        used[x] = false;
    }
    map[v] = usize::MAX;
    false
}
