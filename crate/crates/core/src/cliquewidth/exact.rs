//! Exact clique-width for small graphs.
//!
//! Subset dynamic programming. An expression can be rearranged so that the
//! graph built at every node is the induced subgraph on its vertex set `S`
//! (edges are created at the lowest union where both ends are present), and
//! two vertices can only share a label when they have the same neighbourhood
//! outside `S`. The state for `S` keeps one label per similarity class of `S`.
//! A union of `S1` and `S2` costs the number of classes of both sides minus
//! the number of classes identified across the union; an identified pair must
//! lie in one class of `S`, have no edges across, and every pair of labels
//! that needs a join must be complete in the graph.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::Expression;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap of [`exact_cliquewidth`].
pub const EXACT_CAP: usize = 10;
const HARD_CAP: usize = 20;
const INF: u8 = u8::MAX;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CliqueWidth {
    /// The minimum, with a witness expression (absent for the empty graph).
    Exact { width: usize, witness: Option<Expression> },
    /// No expression with at most this many labels exists.
    GreaterThan(usize),
}

impl CliqueWidth {
    pub fn width(&self) -> Option<usize> {
        match self {
            CliqueWidth::Exact { width, .. } => Some(*width),
            CliqueWidth::GreaterThan(_) => None,
        }
    }
}

struct Solver {
    adj: Vec<u32>,
    /// similarity classes of each subset, ordered by lowest vertex
    classes: Vec<Vec<u32>>,
    best: Vec<u8>,
    choice: Vec<(u32, Vec<(usize, usize)>)>,
}

impl Solver {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u)).collect();
        let mut classes = Vec::with_capacity(1 << n);
        for s in 0..=full {
            let mut cl: Vec<(u32, u32)> = Vec::new();
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let key = adj[v] & !s;
                match cl.iter_mut().find(|(k, _)| *k == key) {
                    Some((_, m)) => *m |= 1 << v,
                    None => cl.push((key, 1 << v)),
                }
            }
            classes.push(cl.into_iter().map(|(_, m)| m).collect());
        }
        Solver { adj, classes, best: vec![INF; 1 << n], choice: vec![(0, Vec::new()); 1 << n] }
    }

    fn complete(&self, x: u32, y: u32) -> bool {
        let mut rest = x;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & y != y {
                return false;
            }
        }
        true
    }

    fn touches(&self, x: u32, y: u32) -> bool {
        let mut rest = x;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & y != 0 {
                return true;
            }
        }
        false
    }

    /// Labels `x` and `y` (groups spanning both sides) may coexist: either no
    /// edge crosses between them, or they are complete to each other.
    fn consistent(&self, x: u32, y: u32, s1: u32, s2: u32) -> bool {
        let crosses = self.touches(x & s1, y & s2) || self.touches(x & s2, y & s1);
        !crosses || self.complete(x, y)
    }

    /// Largest valid identification between the classes of `s1` and `s2`.
    fn best_matching(&self, s: u32, s1: u32, s2: u32) -> Vec<(usize, usize)> {
        let c1 = &self.classes[s1 as usize];
        let c2 = &self.classes[s2 as usize];
        let cs = &self.classes[s as usize];
        let class_in_s = |m: u32| cs.iter().position(|&c| c & m != 0).unwrap();
        let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); c1.len()];
        for (a, &ma) in c1.iter().enumerate() {
            for (b, &mb) in c2.iter().enumerate() {
                if class_in_s(ma) == class_in_s(mb) && !self.touches(ma, mb) {
                    candidates[a].push(b);
                }
            }
        }
        let mut groups: Vec<u32> = c1.iter().chain(c2.iter()).copied().collect();
        let mut current = Vec::new();
        let mut best = Vec::new();
        let mut used = vec![false; c2.len()];
        self.extend_matching(0, &candidates, c1.len(), s1, s2, &mut groups, &mut used, &mut current, &mut best);
        best
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_matching(
        &self,
        a: usize,
        candidates: &[Vec<usize>],
        n1: usize,
        s1: u32,
        s2: u32,
        groups: &mut Vec<u32>,
        used: &mut [bool],
        current: &mut Vec<(usize, usize)>,
        best: &mut Vec<(usize, usize)>,
    ) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        if a == candidates.len() {
            return;
        }
        let free = used.iter().filter(|u| !**u).count();
        if current.len() + (candidates.len() - a).min(free) <= best.len() {
            return;
        }
        for &b in &candidates[a] {
            if used[b] {
                continue;
            }
            // merge group of class b (index n1+b) into group a
            let merged = groups[a] | groups[n1 + b];
            let ok = groups
                .iter()
                .enumerate()
                .filter(|&(i, &m)| i != a && i != n1 + b && m != 0)
                .all(|(_, &m)| self.consistent(merged, m, s1, s2));
            if !ok {
                continue;
            }
            let (saved_a, saved_b) = (groups[a], groups[n1 + b]);
            groups[a] = merged;
            groups[n1 + b] = 0;
            used[b] = true;
            current.push((a, b));
            self.extend_matching(a + 1, candidates, n1, s1, s2, groups, used, current, best);
            current.pop();
            used[b] = false;
            groups[a] = saved_a;
            groups[n1 + b] = saved_b;
        }
        self.extend_matching(a + 1, candidates, n1, s1, s2, groups, used, current, best);
    }

    fn solve(&mut self, n: usize, k_max: usize) {
        let full: u32 = (1u32 << n) - 1;
        let cap = k_max.min(INF as usize - 1) as u8;
        for s in 1..=full {
            let mu = self.classes[s as usize].len();
            if s.count_ones() == 1 {
                self.best[s as usize] = 1;
                continue;
            }
            if mu > cap as usize {
                continue;
            }
            let low = s & s.wrapping_neg();
            let rest = s ^ low;
            // s1 always holds the lowest vertex; s2 = s ^ s1 is non-empty
            let mut sub = rest;
            loop {
                sub = (sub.wrapping_sub(1)) & rest;
                let s1 = sub | low;
                let s2 = s ^ s1;
                if s2 != 0 {
                    self.try_split(s, s1, s2, cap);
                    if self.best[s as usize] as usize == mu {
                        break;
                    }
                }
                if sub == 0 {
                    break;
                }
            }
        }
    }

    fn try_split(&mut self, s: u32, s1: u32, s2: u32, cap: u8) {
        let (b1, b2) = (self.best[s1 as usize], self.best[s2 as usize]);
        let current = self.best[s as usize].min(cap + 1);
        if b1.max(b2) >= current {
            return;
        }
        let w0 = self.classes[s1 as usize].len() + self.classes[s2 as usize].len();
        let floor = self.classes[s as usize].len().max(b1.max(b2) as usize);
        let mut matching = Vec::new();
        if w0 > floor {
            matching = self.best_matching(s, s1, s2);
        }
        let width = (w0 - matching.len()).max(b1.max(b2) as usize);
        if width < current as usize {
            self.best[s as usize] = width as u8;
            self.choice[s as usize] = (s1, matching);
        }
    }

    /// Expression for `s` whose root labels are `names[i]` for class `i` of `s`.
    fn build(&self, g: &Graph, s: u32, names: &[u32], k: u32) -> Expression {
        if s.count_ones() == 1 {
            let v = s.trailing_zeros() as usize;
            return Expression::create(names[0], g.vertex(v).id.to_string());
        }
        let (s1, matching) = &self.choice[s as usize];
        let s2 = s ^ s1;
        let (c1, c2, cs) = (&self.classes[*s1 as usize], &self.classes[s2 as usize], &self.classes[s as usize]);
        // groups: (mask, class of s, left class, right class)
        let mut groups: Vec<(u32, usize, Option<usize>, Option<usize>)> = Vec::new();
        for (a, &ma) in c1.iter().enumerate() {
            let partner = matching.iter().find(|p| p.0 == a).map(|p| p.1);
            let mask = ma | partner.map_or(0, |b| c2[b]);
            groups.push((mask, 0, Some(a), partner));
        }
        for (b, &mb) in c2.iter().enumerate() {
            if !matching.iter().any(|p| p.1 == b) {
                groups.push((mb, 0, None, Some(b)));
            }
        }
        for grp in &mut groups {
            grp.1 = cs.iter().position(|&c| c & grp.0 != 0).unwrap();
        }
        let mut group_name = vec![0u32; groups.len()];
        let mut designated = vec![usize::MAX; cs.len()];
        for (i, grp) in groups.iter().enumerate() {
            if designated[grp.1] == usize::MAX {
                designated[grp.1] = i;
                group_name[i] = names[grp.1];
            }
        }
        let mut taken: Vec<u32> = names.to_vec();
        for i in 0..groups.len() {
            if group_name[i] == 0 {
                let x = (1..=k).find(|x| !taken.contains(x)).expect("enough labels");
                taken.push(x);
                group_name[i] = x;
            }
        }
        let mut names1 = vec![0; c1.len()];
        let mut names2 = vec![0; c2.len()];
        for (i, grp) in groups.iter().enumerate() {
            if let Some(a) = grp.2 {
                names1[a] = group_name[i];
            }
            if let Some(b) = grp.3 {
                names2[b] = group_name[i];
            }
        }
        let mut e = Expression::union(self.build(g, *s1, &names1, k), self.build(g, s2, &names2, k));
        for i in 0..groups.len() {
            for j in i + 1..groups.len() {
                let (x, y) = (groups[i].0, groups[j].0);
                if self.touches(x & s1, y & s2) || self.touches(x & s2, y & s1) {
                    e = Expression::join(group_name[i], group_name[j], e);
                }
            }
        }
        for (i, grp) in groups.iter().enumerate() {
            if designated[grp.1] != i {
                e = Expression::relabel(group_name[i], names[grp.1], e);
            }
        }
        e
    }
}

/// Smallest `k <= k_max` such that `g` has a `k`-expression, with a witness
/// whose tags are the vertex ids of `g`. Graphs above `cap` vertices are refused.
pub fn exact_cliquewidth(g: &Graph, k_max: usize, cap: Option<usize>) -> Result<CliqueWidth> {
    let n = g.n();
    let cap = cap.unwrap_or(EXACT_CAP).min(HARD_CAP);
    if n > cap {
        return Err(Error::SizeCap { what: "exact clique-width", size: n, cap });
    }
    if n == 0 {
        return Ok(CliqueWidth::Exact { width: 0, witness: None });
    }
    let mut solver = Solver::new(g);
    solver.solve(n, k_max);
    let full = ((1u64 << n) - 1) as u32;
    let width = solver.best[full as usize];
    if width == INF || width as usize > k_max {
        return Ok(CliqueWidth::GreaterThan(k_max));
    }
    let witness = solver.build(g, full, &[1], width as u32);
    Ok(CliqueWidth::Exact { width: width as usize, witness: Some(witness) })
}
