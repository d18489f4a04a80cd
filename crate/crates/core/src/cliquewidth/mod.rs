//! Clique-width expressions: evaluation, constructive bounds and an exact
//! solver for small graphs.

mod compose;
mod exact;

pub use compose::{compose_partition_expression, grid_expression, row_expression, ComposeReport};
pub use exact::{exact_cliquewidth, CliqueWidth, EXACT_CAP};

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A clique-width expression. Labels are positive integers; tags name vertices.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Expression {
    /// One vertex with the given label.
    Create { label: u32, tag: String },
    /// Disjoint union.
    Union(Box<Expression>, Box<Expression>),
    /// Add every edge between label `a` and label `b`.
    Join { a: u32, b: u32, inner: Box<Expression> },
    /// Rename label `from` to `to`.
    Relabel { from: u32, to: u32, inner: Box<Expression> },
}

impl Expression {
    pub fn create(label: u32, tag: impl Into<String>) -> Self {
        Expression::Create { label, tag: tag.into() }
    }

    pub fn union(left: Expression, right: Expression) -> Self {
        Expression::Union(Box::new(left), Box::new(right))
    }

    pub fn join(a: u32, b: u32, inner: Expression) -> Self {
        Expression::Join { a, b, inner: Box::new(inner) }
    }

    pub fn relabel(from: u32, to: u32, inner: Expression) -> Self {
        Expression::Relabel { from, to, inner: Box::new(inner) }
    }

    /// Union of several expressions, left-nested; `None` when empty.
    pub fn union_all(items: impl IntoIterator<Item = Expression>) -> Option<Self> {
        items.into_iter().reduce(Expression::union)
    }

    /// Distinct labels mentioned anywhere.
    pub fn labels(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.visit(&mut |e| match e {
            Expression::Create { label, .. } => {
                out.insert(*label);
            }
            Expression::Join { a, b, .. } => {
                out.insert(*a);
                out.insert(*b);
            }
            Expression::Relabel { from, to, .. } => {
                out.insert(*from);
                out.insert(*to);
            }
            Expression::Union(..) => {}
        });
        out
    }

    /// Tags of the created vertices, in creation order.
    pub fn tags(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.visit(&mut |e| {
            if let Expression::Create { tag, .. } = e {
                out.push(tag.as_str());
            }
        });
        out
    }

    /// Number of operation nodes.
    pub fn size(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |_| n += 1);
        n
    }

    /// Pre-order traversal; children left to right.
    pub fn visit<'a>(&'a self, f: &mut dyn FnMut(&'a Expression)) {
        let mut stack = alloc::vec![self];
        while let Some(e) = stack.pop() {
            f(e);
            match e {
                Expression::Create { .. } => {}
                Expression::Union(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
                Expression::Join { inner, .. } | Expression::Relabel { inner, .. } => stack.push(inner),
            }
        }
    }

    /// Rename labels through `f`, applied at every node.
    pub fn map_labels(&self, f: &dyn Fn(u32) -> u32) -> Expression {
        match self {
            Expression::Create { label, tag } => Expression::create(f(*label), tag.clone()),
            Expression::Union(l, r) => Expression::union(l.map_labels(f), r.map_labels(f)),
            Expression::Join { a, b, inner } => Expression::join(f(*a), f(*b), inner.map_labels(f)),
            Expression::Relabel { from, to, inner } => Expression::relabel(f(*from), f(*to), inner.map_labels(f)),
        }
    }
}

/// Number of distinct labels mentioned anywhere in `e`.
pub fn label_count(e: &Expression) -> usize {
    e.labels().len()
}

/// Graph built by an expression. Positions follow creation order; ids are positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<u32>,
    pub tags: Vec<String>,
}

impl LabeledGraph {
    pub fn position_of_tag(&self, tag: &str) -> Option<usize> {
        self.tags.iter().position(|t| t == tag)
    }
}

/// Bottom-up semantics of an expression.
pub fn evaluate(e: &Expression) -> Result<LabeledGraph> {
    let tags: Vec<String> = e.tags().into_iter().map(ToString::to_string).collect();
    let mut seen = BTreeSet::new();
    for t in &tags {
        if !seen.insert(t.as_str()) {
            return Err(Error::DuplicateTag(t.clone()));
        }
    }
    let mut out = LabeledGraph { graph: Graph::with_vertices(tags.len()), labels: Vec::with_capacity(tags.len()), tags };
    eval_into(e, &mut out)?;
    Ok(out)
}

// A subtree creates a contiguous range of positions, so joins and relabels
// only touch the range of their own subtree.
fn eval_into(e: &Expression, out: &mut LabeledGraph) -> Result<usize> {
    let start = out.labels.len();
    match e {
        Expression::Create { label, .. } => {
            if *label == 0 {
                return Err(Error::ZeroLabel);
            }
            out.labels.push(*label);
        }
        Expression::Union(l, r) => {
            eval_into(l, out)?;
            eval_into(r, out)?;
        }
        Expression::Join { a, b, inner } => {
            if a == b {
                return Err(Error::SelfJoin(*a));
            }
            if *a == 0 || *b == 0 {
                return Err(Error::ZeroLabel);
            }
            eval_into(inner, out)?;
            let end = out.labels.len();
            let xs: Vec<usize> = (start..end).filter(|&v| out.labels[v] == *a).collect();
            let ys: Vec<usize> = (start..end).filter(|&v| out.labels[v] == *b).collect();
            for &x in &xs {
                for &y in &ys {
                    out.graph.add_edge(x, y)?;
                }
            }
        }
        Expression::Relabel { from, to, inner } => {
            if *from == 0 || *to == 0 {
                return Err(Error::ZeroLabel);
            }
            eval_into(inner, out)?;
            for l in &mut out.labels[start..] {
                if *l == *from {
                    *l = *to;
                }
            }
        }
    }
    Ok(start)
}

/// Does `e` build exactly `g`, with every tag the decimal id of a vertex of `g`?
pub fn builds_graph(e: &Expression, g: &Graph) -> Result<bool> {
    let lg = evaluate(e)?;
    if lg.tags.len() != g.n() {
        return Ok(false);
    }
    let by_id: BTreeMap<usize, usize> = g.vertices().iter().enumerate().map(|(p, v)| (v.id, p)).collect();
    let mut pos = Vec::with_capacity(lg.tags.len());
    for t in &lg.tags {
        let p = t.parse::<usize>().ok().and_then(|id| by_id.get(&id).copied());
        match p {
            Some(p) => pos.push(p),
            None => return Err(Error::UnknownTag(t.clone())),
        }
    }
    let n = lg.tags.len();
    Ok((0..n).all(|a| (a + 1..n).all(|b| lg.graph.has_edge(a, b) == g.has_edge(pos[a], pos[b]))))
}
