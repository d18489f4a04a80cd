//! Vertex-minor operations: local complementation, pivots and deletions,
//! recorded as replayable traces, together with cut-rank, exact rank-width
//! for small graphs and the grid reduction operations.
//!
//! All operations address vertices by id, so steps stay meaningful after
//! deletions shift positions.

mod rankwidth;
mod reduce;

pub use rankwidth::{branch_width, cut_rank, exact_rankwidth, Branch, RankWidth, RANKWIDTH_CAP};
pub use reduce::{infer_letters, reduce_to_23, remove_one, remove_zero, OneRule, Reduction, ZeroRule};

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn position(g: &Graph, id: usize) -> Result<usize> {
    g.position_of_id(id).ok_or(Error::UnknownVertex(id))
}

/// Complement the edges inside the neighbourhood of `v`.
pub fn local_complement(g: &Graph, v: usize) -> Result<Graph> {
    let p = position(g, v)?;
    let nb: Vec<usize> = g.neighbors(p).iter().collect();
    let mut out = g.clone();
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            out.toggle_edge(a, b);
        }
    }
    Ok(out)
}

/// Pivot on the edge `vw`: local complementation at `v`, `w`, then `v` again.
pub fn pivot(g: &Graph, v: usize, w: usize) -> Result<Graph> {
    let (pv, pw) = (position(g, v)?, position(g, w)?);
    if !g.has_edge(pv, pw) {
        return Err(Error::NotAnEdge(v, w));
    }
    local_complement(&local_complement(&local_complement(g, v)?, w)?, v)
}

/// Pivot on `vw` by complementing the edges between `N(v)∖{w}` and
/// `N(w)∖{v}`. On bipartite graphs this agrees with [`pivot`] once the
/// names of `v` and `w` are exchanged.
pub fn pivot_bipartite(g: &Graph, v: usize, w: usize) -> Result<Graph> {
    let (pv, pw) = (position(g, v)?, position(g, w)?);
    if !g.has_edge(pv, pw) {
        return Err(Error::NotAnEdge(v, w));
    }
    let mut out = g.clone();
    let xs: Vec<usize> = g.neighbors(pv).iter().filter(|&x| x != pw).collect();
    let ys: Vec<usize> = g.neighbors(pw).iter().filter(|&y| y != pv).collect();
    for &x in &xs {
        for &y in &ys {
            if x != y {
                out.toggle_edge(x, y);
            }
        }
    }
    Ok(out)
}

/// Delete the vertices with the given ids, then renumber coordinates so
/// that occupied columns are consecutive and the rows inside each column are
/// consecutive. The smallest occupied row and column keep their numbers.
pub fn delete(g: &Graph, ids: &BTreeSet<usize>) -> Result<Graph> {
    let mut drop = Vec::with_capacity(ids.len());
    for &id in ids {
        drop.push(position(g, id)?);
    }
    let mut out = g.remove_vertices(&drop)?;
    compact_coords(&mut out);
    Ok(out)
}

fn compact_coords(g: &mut Graph) {
    let coords: Vec<(usize, usize)> = (0..g.n()).filter_map(|p| g.coord(p)).collect();
    let cols: BTreeSet<usize> = coords.iter().map(|c| c.1).collect();
    let (Some(r0), Some(&c0)) = (coords.iter().map(|c| c.0).min(), cols.first()) else { return };
    for p in 0..g.n() {
        if let Some((r, c)) = g.coord(p) {
            let above = coords.iter().filter(|&&(r2, c2)| c2 == c && r2 < r).count();
            g.set_coord(p, Some((r0 + above, c0 + cols.range(..c).count())));
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StepKind {
    LocalComplement(usize),
    Pivot(usize, usize),
    DeleteVertices(BTreeSet<usize>),
}

/// One operation of a trace; `note` says which rule produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub note: String,
}

impl ReductionStep {
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match &self.kind {
            StepKind::LocalComplement(v) => local_complement(g, *v),
            StepKind::Pivot(v, w) => pivot(g, *v, *w),
            StepKind::DeleteVertices(ids) => delete(g, ids),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionTrace {
    pub initial: Graph,
    pub steps: Vec<ReductionStep>,
    pub final_graph: Graph,
}

impl ReductionTrace {
    pub fn new(initial: Graph) -> Self {
        ReductionTrace { final_graph: initial.clone(), initial, steps: Vec::new() }
    }

    /// Apply a step to the current final graph and record it.
    pub fn push(&mut self, kind: StepKind, note: impl Into<String>) -> Result<()> {
        let step = ReductionStep { kind, note: note.into() };
        self.final_graph = step.apply(&self.final_graph)?;
        self.steps.push(step);
        Ok(())
    }

    pub fn extend(&mut self, other: ReductionTrace) {
        self.steps.extend(other.steps);
        self.final_graph = other.final_graph;
    }
}

/// Apply `steps` in order starting from `initial`.
pub fn replay(initial: &Graph, steps: &[ReductionStep]) -> Result<Graph> {
    steps.iter().try_fold(initial.clone(), |g, s| s.apply(&g))
}
