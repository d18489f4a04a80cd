use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::ClusterGraph;
use crate::error::{Error, Result};

#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum Side {
    X,
    Y,
    Separator,
}

/// Vertex-disjoint directed paths from the first to the last cluster column,
/// a separator with one vertex on each path, and the split of the remaining
/// clusters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeparatorPartition {
    /// Cluster ids along each path, first column to last.
    pub paths: Vec<Vec<usize>>,
    pub separator: Vec<usize>,
    /// Side of each cluster. `X` holds what the first column reaches without
    /// crossing the separator, `Y` what reaches the last column that way;
    /// clusters in neither go to `X`.
    pub side: Vec<Side>,
}

impl SeparatorPartition {
    pub fn s(&self) -> usize {
        self.paths.len()
    }

    pub fn clusters_on(&self, side: Side) -> Vec<usize> {
        (0..self.side.len()).filter(|&c| self.side[c] == side).collect()
    }
}

struct Network {
    head: Vec<usize>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(n: usize) -> Self {
        Network { head: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); n] }
    }

    fn add(&mut self, a: usize, b: usize, c: i32) {
        self.adj[a].push(self.head.len());
        self.head.push(b);
        self.cap.push(c);
        self.adj[b].push(self.head.len());
        self.head.push(a);
        self.cap.push(0);
    }

    /// Residual reachability from `s`, with the arc used to enter each node.
    fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut via = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in &self.adj[v] {
                let u = self.head[e];
                if self.cap[e] > 0 && !seen[u] {
                    seen[u] = true;
                    via[u] = Some(e);
                    queue.push_back(u);
                }
            }
        }
        via
    }
}

/// Maximum set of vertex-disjoint directed paths between the outer columns
/// of `b` (augmenting paths by breadth-first search), with the separator read
/// off the final residual network.
pub fn max_disjoint_paths(b: &ClusterGraph) -> SeparatorPartition {
    let n = b.clusters.len();
    let (source, sink) = (2 * n, 2 * n + 1);
    let big = n as i32 + 1;
    let inn = |c: usize| 2 * c;
    let out = |c: usize| 2 * c + 1;
    let mut net = Network::new(2 * n + 2);
    for c in 0..n {
        net.add(inn(c), out(c), 1);
    }
    let succ = b.out_edges();
    for (c, next) in succ.iter().enumerate() {
        for &d in next {
            net.add(out(c), inn(d), big);
        }
    }
    let last = b.columns.len() - 1;
    for &c in &b.columns[0] {
        net.add(source, inn(c), big);
    }
    for &c in &b.columns[last] {
        net.add(out(c), sink, big);
    }
    loop {
        let via = net.bfs(source);
        if via[sink].is_none() {
            break;
        }
        let mut v = sink;
        while v != source {
            let e = via[v].expect("augmenting path");
            net.cap[e] -= 1;
            net.cap[e ^ 1] += 1;
            v = net.head[e ^ 1];
        }
    }

    // a cluster carries flow when its unit arc is saturated
    let carries = |c: usize| net.cap[2 * c] == 0;
    let flow_to = |c: usize| -> Option<usize> {
        net.adj[out(c)].iter().find(|&&e| e % 2 == 0 && net.head[e] != sink && net.cap[e] < big).map(|&e| net.head[e] / 2)
    };
    let mut paths = Vec::new();
    for &start in &b.columns[0] {
        if !carries(start) {
            continue;
        }
        let mut path = vec![start];
        let mut c = start;
        while b.clusters[c].column != last || flow_to(c).is_some() {
            match flow_to(c) {
                Some(d) => {
                    path.push(d);
                    c = d;
                }
                None => break,
            }
        }
        paths.push(path);
    }

    let via = net.bfs(source);
    let reached = |v: usize| v == source || via[v].is_some();
    let separator: Vec<usize> = (0..n).filter(|&c| reached(inn(c)) && !reached(out(c))).collect();
    let cut: BTreeSet<usize> = separator.iter().copied().collect();

    let mut side = vec![Side::X; n];
    for &c in &cut {
        side[c] = Side::Separator;
    }
    let forward = reach(&succ, &b.columns[0], &cut);
    let mut pred = vec![Vec::new(); n];
    for (c, next) in succ.iter().enumerate() {
        for &d in next {
            pred[d].push(c);
        }
    }
    let backward = reach(&pred, &b.columns[last], &cut);
    for c in 0..n {
        if !cut.contains(&c) && backward[c] && !forward[c] {
            side[c] = Side::Y;
        }
    }
    SeparatorPartition { paths, separator, side }
}

fn reach(adj: &[Vec<usize>], starts: &[usize], blocked: &BTreeSet<usize>) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut stack: Vec<usize> = starts.iter().copied().filter(|c| !blocked.contains(c)).collect();
    for &c in &stack {
        seen[c] = true;
    }
    while let Some(c) = stack.pop() {
        for &d in &adj[c] {
            if !seen[d] && !blocked.contains(&d) {
                seen[d] = true;
                stack.push(d);
            }
        }
    }
    seen
}

/// Split the window's vertices by the type-A edges carrying them. An edge
/// belongs to `X` when one of its ends is in `X`, otherwise to `Y` when one
/// of its ends is in `Y`, and to `X` when both ends are separator clusters.
pub fn xy_graph_partition(sp: &SeparatorPartition, b: &ClusterGraph) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut x = BTreeSet::new();
    let mut y = BTreeSet::new();
    for e in &b.type_a {
        let ends = [sp.side[e.from], sp.side[e.to]];
        if ends.contains(&Side::X) || !ends.contains(&Side::Y) {
            x.insert(e.vertex);
        } else {
            y.insert(e.vertex);
        }
    }
    if let Some(v) = b.vertices().into_iter().find(|v| !x.contains(v) && !y.contains(v)) {
        return Err(Error::UntaggedVertex(v));
    }
    Ok((x.into_iter().collect(), y.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clusters::build_cluster_graph;
    use crate::graph::build_h;
    use crate::words::WordSpec;

    #[test]
    fn full_grid_has_one_path_per_row() {
        for word in ["000", "232", "0230"] {
            let w = WordSpec::explicit(word).unwrap();
            let k = word.len() + 1;
            let g = build_h(&w, 1, 1, k, k).unwrap();
            let b = build_cluster_graph(&g, &w, 1..=k).unwrap();
            let sp = max_disjoint_paths(&b);
            assert_eq!(sp.s(), k, "{word}");
            assert_eq!(sp.separator.len(), k);
            for p in &sp.paths {
                assert_eq!(b.clusters[p[0]].column, 0);
                assert_eq!(b.clusters[*p.last().unwrap()].column, k);
            }
            let (x, y) = xy_graph_partition(&sp, &b).unwrap();
            assert_eq!(x.len() + y.len(), g.n());
        }
    }
}
