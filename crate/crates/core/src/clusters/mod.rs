//! Cluster graphs of grid-embedded graphs, disjoint paths and separators
//! between their outer columns, and the bar partition that turns them into
//! clique-width expressions.
//!
//! Graphs here carry global `(row, col)` coordinates of an embedding in the
//! grid graph of a word, with rows counted from the top. Vertices are named
//! by id throughout.

mod flow;
mod pipeline;

pub use flow::{max_disjoint_paths, xy_graph_partition, SeparatorPartition, Side};
pub use pipeline::{bar_partition, BarPartition, BarReport};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{link_adjacent, Graph};
use crate::words::{Letter, WordSpec};

/// The subgraph induced by two consecutive columns, described by the letter
/// between them and the `(id, row)` pairs of each column sorted by row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Link {
    pub letter: Letter,
    pub left: Vec<(usize, usize)>,
    pub right: Vec<(usize, usize)>,
}

impl Link {
    /// The link between columns `col` and `col + 1` of `g`, whose letter is
    /// `α_col`. Edges of `g` must follow the letter.
    pub fn from_graph(g: &Graph, w: &WordSpec, col: usize) -> Result<Link> {
        let letter = w.letters(col, 1)?[0];
        let side = |c: usize| -> Result<Vec<(usize, usize)>> {
            g.column(c).into_iter().map(|p| Ok((g.vertex(p).id, g.coord(p).ok_or(Error::MissingCoords(g.vertex(p).id))?.0))).collect()
        };
        let link = Link { letter, left: side(col)?, right: side(col + 1)? };
        for &(a, ra) in &link.left {
            for &(b, rb) in &link.right {
                let pa = g.position_of_id(a).ok_or(Error::UnknownVertex(a))?;
                let pb = g.position_of_id(b).ok_or(Error::UnknownVertex(b))?;
                if g.has_edge(pa, pb) != link_adjacent(letter, ra, rb) {
                    return Err(Error::NotAGridWindow);
                }
            }
        }
        Ok(link)
    }

    pub fn adjacent(&self, left_row: usize, right_row: usize) -> bool {
        link_adjacent(self.letter, left_row, right_row)
    }

    fn neighbourhoods(&self, from_left: bool) -> Vec<(usize, usize, BTreeSet<usize>)> {
        let (this, other) = if from_left { (&self.left, &self.right) } else { (&self.right, &self.left) };
        this.iter()
            .map(|&(id, r)| {
                let nb = other
                    .iter()
                    .filter(|&&(_, s)| if from_left { self.adjacent(r, s) } else { self.adjacent(s, r) })
                    .map(|&(o, _)| o)
                    .collect();
                (id, r, nb)
            })
            .collect()
    }

    /// Modules of the left column as seen from the right one, sorted by row.
    pub fn right_modules(&self) -> Vec<Vec<(usize, usize)>> {
        group_by_neighbourhood(self.neighbourhoods(true))
    }

    /// Modules of the right column as seen from the left one, sorted by row.
    pub fn left_modules(&self) -> Vec<Vec<(usize, usize)>> {
        group_by_neighbourhood(self.neighbourhoods(false))
    }
}

fn group_by_neighbourhood(items: Vec<(usize, usize, BTreeSet<usize>)>) -> Vec<Vec<(usize, usize)>> {
    let mut groups: Vec<(BTreeSet<usize>, Vec<(usize, usize)>)> = Vec::new();
    for (id, r, nb) in items {
        match groups.iter_mut().find(|(k, _)| *k == nb) {
            Some((_, members)) => members.push((id, r)),
            None => groups.push((nb, alloc::vec![(id, r)])),
        }
    }
    groups.into_iter().map(|(_, m)| m).collect()
}

/// Re-embed a link with as few rows as possible, keeping the vertical order
/// inside each column and every adjacency.
///
/// For `0` and `1` links this only closes gaps between occupied rows. For `2`
/// and `3` links rows may be merged across the columns; each vertex is placed
/// on the lowest row number its order and adjacency constraints allow.
pub fn standard_form(link: &Link) -> Link {
    if !link.letter.is_two_three() {
        let rows: BTreeSet<usize> = link.left.iter().chain(&link.right).map(|p| p.1).collect();
        let rank = |r: usize| rows.range(..r).count() + 1;
        let map = |side: &[(usize, usize)]| side.iter().map(|&(id, r)| (id, rank(r))).collect();
        return Link { letter: link.letter, left: map(&link.left), right: map(&link.right) };
    }
    let (nl, nr) = (link.left.len(), link.right.len());
    // constraints new[a] >= new[b] + w over left vertices 0..nl and right vertices nl..
    let mut cons: Vec<(usize, usize, usize)> = Vec::new();
    for i in 1..nl {
        cons.push((i, i - 1, 1));
    }
    for i in 1..nr {
        cons.push((nl + i, nl + i - 1, 1));
    }
    let two = link.letter.value() == 2;
    for (i, &(_, a)) in link.left.iter().enumerate() {
        for (j, &(_, b)) in link.right.iter().enumerate() {
            let (l, r) = (i, nl + j);
            cons.push(match (link.adjacent(a, b), two) {
                (true, true) => (r, l, 0),
                (false, true) => (l, r, 1),
                (true, false) => (l, r, 0),
                (false, false) => (r, l, 1),
            });
        }
    }
    let mut row = alloc::vec![1usize; nl + nr];
    loop {
        let mut changed = false;
        for &(a, b, w) in &cons {
            if row[a] < row[b] + w {
                row[a] = row[b] + w;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Link {
        letter: link.letter,
        left: link.left.iter().enumerate().map(|(i, &(id, _))| (id, row[i])).collect(),
        right: link.right.iter().enumerate().map(|(j, &(id, _))| (id, row[nl + j])).collect(),
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum ColumnSide {
    Left,
    Right,
}

/// Ids of column `col` of `g` grouped by their neighbourhood in the column on
/// the given side. A missing or empty neighbouring column gives one module.
pub fn column_modules(g: &Graph, col: usize, side: ColumnSide) -> Vec<Vec<usize>> {
    let other = match side {
        ColumnSide::Left => col.checked_sub(1),
        ColumnSide::Right => Some(col + 1),
    };
    let others: Vec<usize> = other.map(|c| g.column(c)).unwrap_or_default();
    let items = g
        .column(col)
        .into_iter()
        .map(|p| {
            let nb = others.iter().filter(|&&q| g.has_edge(p, q)).map(|&q| g.vertex(q).id).collect();
            (g.vertex(p).id, 0, nb)
        })
        .collect();
    group_by_neighbourhood(items).into_iter().map(|m| m.into_iter().map(|(id, _)| id).collect()).collect()
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum ClusterKind {
    /// A right module paired with the left module it overlaps.
    Paired,
    /// A vertex of the left column that sees the whole right column alike.
    RightBoundary,
    /// A vertex of the right column that sees the whole left column alike.
    LeftBoundary,
    /// A vertex of an added outer column.
    Outer,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cluster {
    pub id: usize,
    /// Column of the cluster graph.
    pub column: usize,
    /// Vertex ids, sorted.
    pub members: Vec<usize>,
    pub kind: ClusterKind,
}

/// A left-to-right edge between consecutive cluster columns, carrying the
/// graph vertex the two clusters share.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct TypeAEdge {
    pub from: usize,
    pub to: usize,
    pub vertex: usize,
}

/// Cluster graph of a window occupying columns `first_col..first_col+n`.
///
/// Column 0 holds one cluster per vertex of the first graph column, column
/// `t` (`1 <= t < n`) the clusters of the link between graph columns
/// `first_col+t-1` and `first_col+t`, and column `n` one cluster per vertex of
/// the last graph column. Columns list cluster ids from top to bottom.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClusterGraph {
    pub first_col: usize,
    pub letters: Vec<Letter>,
    pub clusters: Vec<Cluster>,
    pub columns: Vec<Vec<usize>>,
    pub type_a: Vec<TypeAEdge>,
    /// Within-column edges: downward for a `2` link, upward for a `3` link.
    pub type_b: Vec<(usize, usize)>,
}

impl ClusterGraph {
    pub fn out_edges(&self) -> Vec<Vec<usize>> {
        let mut out = alloc::vec![Vec::new(); self.clusters.len()];
        for e in &self.type_a {
            out[e.from].push(e.to);
        }
        for &(a, b) in &self.type_b {
            out[a].push(b);
        }
        for o in &mut out {
            o.sort_unstable();
            o.dedup();
        }
        out
    }

    pub fn column_sizes(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    /// Ids of all vertices of the window.
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.clusters.iter().flat_map(|c| c.members.iter().copied()).collect()
    }
}

/// Cluster graph of `g` restricted to the columns in `cols`.
///
/// The columns must all be occupied, and two clusters may share at most one
/// vertex, as happens for prime graphs.
pub fn build_cluster_graph(g: &Graph, w: &WordSpec, cols: core::ops::RangeInclusive<usize>) -> Result<ClusterGraph> {
    let (lo, hi) = (*cols.start(), *cols.end());
    for c in lo..=hi {
        if g.column(c).is_empty() {
            return Err(Error::NonConsecutiveColumns { column: c });
        }
    }
    let b = cluster_graph_of_columns(g, w, lo, hi)?;
    for e in &b.type_a {
        let shared = b.type_a.iter().filter(|f| (f.from, f.to) == (e.from, e.to)).count();
        if shared > 1 {
            return Err(Error::NonPrimeCluster { column: b.clusters[e.to].column, shared });
        }
    }
    Ok(b)
}

/// Cluster graph over columns `lo..=hi` without the primality and occupancy
/// checks; parallel type-A edges appear when clusters share several vertices.
pub(crate) fn cluster_graph_of_columns(g: &Graph, w: &WordSpec, lo: usize, hi: usize) -> Result<ClusterGraph> {
    let n = hi + 1 - lo;
    let letters = if n >= 2 { w.letters(lo, n - 1)? } else { Vec::new() };
    let mut b = ClusterGraph { first_col: lo, letters: letters.clone(), clusters: Vec::new(), columns: alloc::vec![Vec::new(); n + 1], type_a: Vec::new(), type_b: Vec::new() };
    // for each vertex id, its cluster on the left and on the right
    let mut left_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut right_of: BTreeMap<usize, usize> = BTreeMap::new();

    let ids = |c: usize| g.column(c).into_iter().map(|p| g.vertex(p).id).collect::<Vec<_>>();
    let push = |b: &mut ClusterGraph, column: usize, members: Vec<usize>, kind: ClusterKind| {
        let id = b.clusters.len();
        b.clusters.push(Cluster { id, column, members, kind });
        id
    };
    for v in ids(lo) {
        let id = push(&mut b, 0, alloc::vec![v], ClusterKind::Outer);
        b.columns[0].push(id);
        left_of.insert(v, id);
    }
    for t in 1..n {
        let col = lo + t - 1;
        let link = Link::from_graph(g, w, col)?;
        let std = standard_form(&link);
        let rows: BTreeMap<usize, usize> = std.left.iter().chain(&std.right).copied().collect();
        let rs = std.right_modules();
        let ls = std.left_modules();
        let row_set = |m: &[(usize, usize)]| m.iter().map(|&(id, _)| rows[&id]).collect::<BTreeSet<usize>>();
        let mut used_l = alloc::vec![false; ls.len()];
        let mut found: Vec<(Vec<usize>, ClusterKind)> = Vec::new();
        let mut unmatched_r = 0;
        for r in &rs {
            let rr = row_set(r);
            let hits: Vec<usize> = (0..ls.len()).filter(|&i| row_set(&ls[i]).intersection(&rr).next().is_some()).collect();
            match hits.as_slice() {
                [] => {
                    unmatched_r += 1;
                    found.extend(r.iter().map(|&(id, _)| (alloc::vec![id], ClusterKind::RightBoundary)));
                }
                [i] if !used_l[*i] && row_set(&ls[*i]).intersection(&rr).count() == 1 => {
                    used_l[*i] = true;
                    let mut members: Vec<usize> = r.iter().chain(&ls[*i]).map(|&(id, _)| id).collect();
                    members.sort_unstable();
                    found.push((members, ClusterKind::Paired));
                }
                _ => return Err(Error::ClusterPairing { column: col }),
            }
        }
        let unmatched_l: Vec<usize> = (0..ls.len()).filter(|&i| !used_l[i]).collect();
        if unmatched_r > 1 || unmatched_l.len() > 1 {
            return Err(Error::ClusterPairing { column: col });
        }
        for i in unmatched_l {
            found.extend(ls[i].iter().map(|&(id, _)| (alloc::vec![id], ClusterKind::LeftBoundary)));
        }
        found.sort_by_key(|(m, _)| {
            let rs: Vec<usize> = m.iter().map(|id| rows[id]).collect();
            (*rs.iter().min().unwrap(), *rs.iter().max().unwrap(), m[0])
        });
        let left_ids: BTreeSet<usize> = link.left.iter().map(|p| p.0).collect();
        for (members, kind) in found {
            let id = push(&mut b, t, members.clone(), kind);
            b.columns[t].push(id);
            for v in members {
                if left_ids.contains(&v) {
                    right_of.insert(v, id);
                } else {
                    left_of.insert(v, id);
                }
            }
        }
        let column = &b.columns[t];
        match letters[t - 1].value() {
            2 => b.type_b.extend(column.windows(2).map(|p| (p[0], p[1]))),
            3 => b.type_b.extend(column.windows(2).map(|p| (p[1], p[0]))),
            _ => {}
        }
    }
    for v in ids(hi) {
        let id = push(&mut b, n, alloc::vec![v], ClusterKind::Outer);
        b.columns[n].push(id);
        right_of.insert(v, id);
    }
    for (&v, &from) in &left_of {
        let to = *right_of.get(&v).ok_or(Error::UntaggedVertex(v))?;
        b.type_a.push(TypeAEdge { from, to, vertex: v });
    }
    b.type_a.sort();
    Ok(b)
}
