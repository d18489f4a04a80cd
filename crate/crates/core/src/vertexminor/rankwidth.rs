use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by [`exact_rankwidth`].
pub const RANKWIDTH_CAP: usize = 12;

/// Rank over GF(2) of the adjacency matrix between the vertices with ids in
/// `side` and the rest of the graph.
pub fn cut_rank(g: &Graph, side: &BTreeSet<usize>) -> Result<usize> {
    let mut inside = vec![false; g.n()];
    for &id in side {
        inside[g.position_of_id(id).ok_or(Error::UnknownVertex(id))?] = true;
    }
    let outside: Vec<usize> = (0..g.n()).filter(|&p| !inside[p]).collect();
    let words = outside.len().div_ceil(64);
    let rows: Vec<Vec<u64>> = (0..g.n())
        .filter(|&p| inside[p])
        .map(|p| {
            let mut row = vec![0u64; words];
            for (k, &q) in outside.iter().enumerate() {
                if g.has_edge(p, q) {
                    row[k / 64] |= 1 << (k % 64);
                }
            }
            row
        })
        .collect();
    Ok(gf2_rank(rows))
}

fn gf2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, |r| r.len() * 64);
    for c in 0..cols {
        let (w, bit) = (c / 64, 1u64 << (c % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else { continue };
        rows.swap(rank, pivot);
        let top = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && rows[r][w] & bit != 0 {
                for (x, y) in rows[r].iter_mut().zip(&top) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mask_rank(adj: &[u32], set: u32, full: u32) -> u32 {
    let out = full & !set;
    let mut basis = [0u32; 32];
    let mut rank = 0;
    let mut s = set;
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        s &= s - 1;
        let mut row = adj[v] & out;
        while row != 0 {
            let hi = 31 - row.leading_zeros() as usize;
            if basis[hi] == 0 {
                basis[hi] = row;
                rank += 1;
                break;
            }
            row ^= basis[hi];
        }
    }
    rank
}

/// A rooted binary tree whose leaves are vertex ids. The root stands for
/// the middle of an edge of a cubic tree, so every proper subtree is one
/// side of an edge cut.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Branch {
    Leaf(usize),
    Split(Box<Branch>, Box<Branch>),
}

impl Branch {
    pub fn leaves(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(b) = stack.pop() {
            match b {
                Branch::Leaf(v) => {
                    out.insert(*v);
                }
                Branch::Split(l, r) => {
                    stack.push(l);
                    stack.push(r);
                }
            }
        }
        out
    }
}

/// Largest cut-rank over the edges of the decomposition.
pub fn branch_width(g: &Graph, b: &Branch) -> Result<usize> {
    fn walk(g: &Graph, b: &Branch, root: bool, best: &mut usize) -> Result<BTreeSet<usize>> {
        let leaves = match b {
            Branch::Leaf(v) => [*v].into_iter().collect(),
            Branch::Split(l, r) => {
                let mut s = walk(g, l, false, best)?;
                s.extend(walk(g, r, false, best)?);
                s
            }
        };
        if !root {
            *best = (*best).max(cut_rank(g, &leaves)?);
        }
        Ok(leaves)
    }
    let mut best = 0;
    let leaves = walk(g, b, true, &mut best)?;
    let ids: BTreeSet<usize> = g.vertices().iter().map(|v| v.id).collect();
    if leaves != ids {
        return Err(Error::NotAPartition);
    }
    Ok(best)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankWidth {
    pub width: usize,
    /// `None` for the empty graph.
    pub witness: Option<Branch>,
}

/// Exact rank-width by dynamic programming over vertex subsets.
///
/// Graphs with at most one vertex have rank-width 0.
pub fn exact_rankwidth(g: &Graph) -> Result<RankWidth> {
    let n = g.n();
    if n > RANKWIDTH_CAP {
        return Err(Error::SizeCap { what: "rank-width", size: n, cap: RANKWIDTH_CAP });
    }
    let id = |p: usize| g.vertex(p).id;
    match n {
        0 => return Ok(RankWidth { width: 0, witness: None }),
        1 => return Ok(RankWidth { width: 0, witness: Some(Branch::Leaf(id(0))) }),
        _ => {}
    }
    let adj: Vec<u32> = (0..n).map(|p| g.neighbors(p).iter().fold(0, |m, q| m | 1 << q)).collect();
    let full = (1u32 << n) - 1;
    // best[s]: least width of a subtree with leaf set s, counting the edge above it
    let mut best = vec![u32::MAX; 1 << n];
    let mut split = vec![0u32; 1 << n];
    for s in 1..full {
        let cr = mask_rank(&adj, s, full);
        if s.count_ones() == 1 {
            best[s as usize] = cr;
            continue;
        }
        let low = s & s.wrapping_neg();
        let mut a = (s - 1) & s;
        while a != 0 {
            if a & low != 0 {
                let w = best[a as usize].max(best[(s ^ a) as usize]);
                if w < best[s as usize] {
                    best[s as usize] = w;
                    split[s as usize] = a;
                }
            }
            a = (a - 1) & s;
        }
        best[s as usize] = best[s as usize].max(cr);
    }
    let mut root = (u32::MAX, 0);
    let low = 1u32;
    let mut a = (full - 1) & full;
    while a != 0 {
        if a & low != 0 {
            let w = best[a as usize].max(best[(full ^ a) as usize]);
            if w < root.0 {
                root = (w, a);
            }
        }
        a = (a - 1) & full;
    }
    fn build(s: u32, split: &[u32], id: &dyn Fn(usize) -> usize) -> Branch {
        if s.count_ones() == 1 {
            return Branch::Leaf(id(s.trailing_zeros() as usize));
        }
        let a = split[s as usize];
        Branch::Split(Box::new(build(a, split, id)), Box::new(build(s ^ a, split, id)))
    }
    let witness = Branch::Split(Box::new(build(root.1, &split, &id)), Box::new(build(full ^ root.1, &split, &id)));
    Ok(RankWidth { width: root.0 as usize, witness: Some(witness) })
}
