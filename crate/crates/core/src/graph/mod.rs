//! Small simple graphs and the grid constructions built from words.
//!
//! Vertices are addressed by their dense position `0..n`. Each vertex also
//! carries an external `id` (kept by [`Graph::induced_subgraph`]) and an
//! optional `(row, col)` coordinate. Rows are counted from the top.

mod embed;
mod iso;
mod modules;

pub use embed::{find_induced_embedding, Embedding};
pub use iso::{canonical_form, enumerate_graphs, is_isomorphic, CANONICAL_CAP};
pub use modules::{is_prime, module_closure, nontrivial_module, similarity_partition, SimilarityPartition};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::words::{Letter, WordSpec};

#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub struct Vertex {
    pub id: usize,
    pub coord: Option<(usize, usize)>,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Graph {
    vertices: Vec<Vertex>,
    adj: Vec<BitSet>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// `n` isolated vertices with ids `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Graph::new();
        for i in 0..n {
            g.vertices.push(Vertex { id: i, coord: None });
            g.adj.push(BitSet::new(n));
        }
        g
    }

    /// Build from vertex records and edges given by vertex id.
    pub fn from_parts(vertices: Vec<Vertex>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v)?;
        }
        let index: BTreeMap<usize, usize> = g.vertices.iter().enumerate().map(|(i, v)| (v.id, i)).collect();
        for &(a, b) in edges {
            let ia = *index.get(&a).ok_or(Error::UnknownVertex(a))?;
            let ib = *index.get(&b).ok_or(Error::UnknownVertex(b))?;
            g.add_edge(ia, ib)?;
        }
        Ok(g)
    }

    /// Build from an edge list over positions `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::with_vertices(n);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Append a vertex and return its position.
    pub fn add_vertex(&mut self, v: Vertex) -> Result<usize> {
        if self.vertices.iter().any(|u| u.id == v.id) {
            return Err(Error::DuplicateId(v.id));
        }
        if let Some((row, col)) = v.coord {
            if self.vertices.iter().any(|u| u.coord == v.coord) {
                return Err(Error::DuplicateCoord { row, col });
            }
        }
        self.vertices.push(v);
        self.adj.push(BitSet::new(self.vertices.len()));
        Ok(self.vertices.len() - 1)
    }

    /// Add the edge `ab`; loops are rejected, repeated edges are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.n();
        if a >= n {
            return Err(Error::UnknownVertex(a));
        }
        if b >= n {
            return Err(Error::UnknownVertex(b));
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        Ok(())
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a].remove(b);
        self.adj[b].remove(a);
    }

    /// Flip adjacency of `a` and `b` (`a != b`).
    pub fn toggle_edge(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        self.adj[a].toggle(b);
        self.adj[b].toggle(a);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn coord(&self, v: usize) -> Option<(usize, usize)> {
        self.vertices[v].coord
    }

    pub fn set_coord(&mut self, v: usize, coord: Option<(usize, usize)>) {
        self.vertices[v].coord = coord;
    }

    pub fn position_of_id(&self, id: usize) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn position_of_coord(&self, row: usize, col: usize) -> Option<usize> {
        self.vertices.iter().position(|v| v.coord == Some((row, col)))
    }

    /// Edges as position pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n() {
            for b in self.adj[a].iter() {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Subgraph induced by the given positions, kept in ascending order.
    /// Ids and coordinates are preserved.
    pub fn induced_subgraph(&self, positions: &[usize]) -> Result<Graph> {
        let mut keep: Vec<usize> = positions.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&p| p >= self.n()) {
            return Err(Error::UnknownVertex(bad));
        }
        let mut g = Graph::new();
        for &p in &keep {
            g.vertices.push(self.vertices[p]);
            g.adj.push(BitSet::new(keep.len()));
        }
        for (i, &p) in keep.iter().enumerate() {
            for (j, &q) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(p, q) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok(g)
    }

    /// The graph with the given positions removed.
    pub fn remove_vertices(&self, positions: &[usize]) -> Result<Graph> {
        if let Some(&bad) = positions.iter().find(|&&p| p >= self.n()) {
            return Err(Error::UnknownVertex(bad));
        }
        let keep: Vec<usize> = (0..self.n()).filter(|p| !positions.contains(p)).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabel positions: vertex `p` moves to position `perm[p]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        let mut g = Graph::with_vertices(n);
        for p in 0..n {
            g.vertices[perm[p]] = self.vertices[p];
        }
        for (a, b) in self.edges() {
            g.adj[perm[a]].insert(perm[b]);
            g.adj[perm[b]].insert(perm[a]);
        }
        g
    }

    /// Drop coordinates and renumber ids to positions.
    pub fn plain(&self) -> Graph {
        let mut g = self.clone();
        for (i, v) in g.vertices.iter_mut().enumerate() {
            *v = Vertex { id: i, coord: None };
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = BitSet::new(self.n());
        let mut stack = alloc::vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for u in self.adj[v].iter() {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen.len() == self.n()
    }

    /// Positions carrying coordinates in column `col`, sorted by row.
    pub fn column(&self, col: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.n()).filter(|&p| matches!(self.coord(p), Some((_, c)) if c == col)).collect();
        v.sort_by_key(|&p| self.coord(p).map(|(r, _)| r));
        v
    }
}

/// Adjacency rule between row `i` of one column and row `k` of the next,
/// for the link letter between them.
pub fn link_adjacent(letter: Letter, i: usize, k: usize) -> bool {
    match letter.value() {
        0 => i == k,
        1 => i != k,
        2 => i <= k,
        _ => i >= k,
    }
}

/// The `m × n` window of the grid graph of `w` whose top-left vertex is `v_{i,j}`.
///
/// Positions are column-major; coordinates are the global `(row, col)`.
pub fn build_h(w: &WordSpec, i: usize, j: usize, m: usize, n: usize) -> Result<Graph> {
    if i == 0 || j == 0 {
        return Err(Error::ZeroIndex);
    }
    let letters = if n >= 2 { w.letters(j, n - 1)? } else { Vec::new() };
    let mut g = Graph::with_vertices(m * n);
    for c in 0..n {
        for r in 0..m {
            g.vertices[c * m + r].coord = Some((i + r, j + c));
        }
    }
    for (c, &letter) in letters.iter().enumerate() {
        for r in 0..m {
            for s in 0..m {
                if link_adjacent(letter, i + r, i + s) {
                    let a = c * m + r;
                    let b = (c + 1) * m + s;
                    g.adj[a].insert(b);
                    g.adj[b].insert(a);
                }
            }
        }
    }
    Ok(g)
}

fn two_three_letters(w: &WordSpec, count: usize) -> Result<Vec<Letter>> {
    let letters = w.letters(1, count)?;
    if let Some((p, l)) = letters.iter().enumerate().find(|(_, l)| !l.is_two_three()) {
        return Err(Error::LetterNotTwoThree { position: p + 1, letter: l.value() });
    }
    Ok(letters)
}

/// The diagonal graph `W_n`: vertices `u_{x,y}` (`1 <= x, y <= n`, coordinate `(x, y)`)
/// with `u_{x,y}` on diagonal `D_{x+y-1}`. An edge joins `u_{i,j} ∈ D_m` and
/// `u_{k,l} ∈ D_{m+1}` when `α_m = 2` and `k >= i`, or `α_m = 3` and `l >= j`.
pub fn build_w(w: &WordSpec, n: usize) -> Result<Graph> {
    let letters = two_three_letters(w, (2 * n).saturating_sub(2))?;
    let mut g = Graph::with_vertices(n * n);
    let pos = |x: usize, y: usize| (x - 1) * n + (y - 1);
    for x in 1..=n {
        for y in 1..=n {
            g.vertices[pos(x, y)].coord = Some((x, y));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let m = i + j - 1;
            if m > 2 * n - 2 {
                continue;
            }
            let letter = letters[m - 1].value();
            for k in 1..=n {
                // u_{k,l} on D_{m+1}
                let Some(l) = (m + 2).checked_sub(k) else { continue };
                if l == 0 || l > n {
                    continue;
                }
                if (letter == 2 && k >= i) || (letter == 3 && l >= j) {
                    g.add_edge(pos(i, j), pos(k, l))?;
                }
            }
        }
    }
    Ok(g)
}

/// `build_w(w, n)`, the host window `build_h(w, 1, 1, 2n-1, 2n-1)` and the
/// embedding `u_{x,y} -> v_{i,j}` with `j = x+y-1` and
/// `i = n + x - 1 - #{m <= x+y-2 : α_m = 3}`.
#[derive(Clone, Debug)]
pub struct WEmbedding {
    pub pattern: Graph,
    pub host: Graph,
    pub embedding: Embedding,
}

pub fn embed_w(w: &WordSpec, n: usize) -> Result<WEmbedding> {
    let pattern = build_w(w, n)?;
    let letters = two_three_letters(w, (2 * n).saturating_sub(2))?;
    let host = build_h(w, 1, 1, 2 * n - 1, 2 * n - 1)?;
    let mut map = Vec::with_capacity(n * n);
    for p in 0..pattern.n() {
        let (x, y) = pattern.coord(p).expect("build_w sets coordinates");
        let threes = letters[..x + y - 2].iter().filter(|l| l.value() == 3).count();
        let (i, j) = (n + x - 1 - threes, x + y - 1);
        map.push(host.position_of_coord(i, j).expect("row inside host"));
    }
    Ok(WEmbedding { pattern, host, embedding: Embedding { map } })
}
