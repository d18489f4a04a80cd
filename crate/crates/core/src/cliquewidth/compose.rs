//! Constructive upper bounds: composing expressions along an ordered
//! vertex partition, and the row-by-row construction for grid windows.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{builds_graph, label_count, Expression};
use crate::error::{Error, Result};
use crate::graph::{build_h, similarity_partition, Graph};
use crate::words::WordSpec;

/// Outcome of [`compose_partition_expression`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComposeReport {
    pub expression: Expression,
    /// Largest label count among the part expressions.
    pub k: usize,
    /// Largest similarity-class count seen over parts and prefixes.
    pub mu_max: usize,
    /// Labels used by the composed expression.
    pub labels: usize,
}

/// Expression for the vertices `order` of `g` (tags are vertex ids), valid when
/// every edge among them joins neighbours in `order`. Uses at most 3 labels.
pub fn row_expression(g: &Graph, order: &[usize]) -> Result<Expression> {
    for (i, &a) in order.iter().enumerate() {
        for &b in order.iter().skip(i + 2) {
            if g.has_edge(a, b) {
                return Err(Error::NotALinearForest);
            }
        }
    }
    let tag = |p: usize| g.vertex(p).id.to_string();
    let (&first, rest) = order.split_first().ok_or(Error::NotAPartition)?;
    let mut e = Expression::create(1, tag(first));
    let mut prev = first;
    for &v in rest {
        e = if g.has_edge(prev, v) {
            let joined = Expression::join(1, 2, Expression::union(e, Expression::create(2, tag(v))));
            Expression::relabel(2, 1, Expression::relabel(1, 3, joined))
        } else {
            Expression::union(Expression::relabel(1, 3, e), Expression::create(1, tag(v)))
        };
        prev = v;
    }
    Ok(e)
}

type Pair = (u32, usize);

/// Expression over pair labels `(original label, similarity class)`.
enum PairExpr {
    Create(Pair, String),
    Union(alloc::boxed::Box<PairExpr>, alloc::boxed::Box<PairExpr>),
    Join(Pair, Pair, alloc::boxed::Box<PairExpr>),
    Relabel(Pair, Pair, alloc::boxed::Box<PairExpr>),
}

/// Split every label by similarity class, emitting only operations on pairs
/// that actually occur. Returns the rewritten tree and the pairs at its root.
fn refine(e: &Expression, class_of: &BTreeMap<&str, usize>, all: &mut BTreeSet<Pair>) -> Result<(PairExpr, BTreeSet<Pair>)> {
    use alloc::boxed::Box;
    Ok(match e {
        Expression::Create { label, tag } => {
            let c = *class_of.get(tag.as_str()).ok_or_else(|| Error::UnknownTag(tag.clone()))?;
            all.insert((*label, c));
            (PairExpr::Create((*label, c), tag.clone()), [(*label, c)].into_iter().collect())
        }
        Expression::Union(l, r) => {
            let (le, mut lp) = refine(l, class_of, all)?;
            let (re, rp) = refine(r, class_of, all)?;
            lp.extend(rp);
            (PairExpr::Union(Box::new(le), Box::new(re)), lp)
        }
        Expression::Join { a, b, inner } => {
            let (mut ie, present) = refine(inner, class_of, all)?;
            let xs: Vec<Pair> = present.iter().filter(|p| p.0 == *a).copied().collect();
            let ys: Vec<Pair> = present.iter().filter(|p| p.0 == *b).copied().collect();
            for &x in &xs {
                for &y in &ys {
                    ie = PairExpr::Join(x, y, Box::new(ie));
                }
            }
            (ie, present)
        }
        Expression::Relabel { from, to, inner } => {
            let (mut ie, present) = refine(inner, class_of, all)?;
            let mut next = BTreeSet::new();
            for &p in &present {
                if p.0 == *from && from != to {
                    let q = (*to, p.1);
                    all.insert(q);
                    ie = PairExpr::Relabel(p, q, Box::new(ie));
                    next.insert(q);
                } else {
                    next.insert(p);
                }
            }
            (ie, next)
        }
    })
}

fn lower(e: &PairExpr, num: &BTreeMap<Pair, u32>) -> Expression {
    match e {
        PairExpr::Create(p, tag) => Expression::create(num[p], tag.clone()),
        PairExpr::Union(l, r) => Expression::union(lower(l, num), lower(r, num)),
        PairExpr::Join(a, b, inner) => Expression::join(num[a], num[b], lower(inner, num)),
        PairExpr::Relabel(a, b, inner) => Expression::relabel(num[a], num[b], lower(inner, num)),
    }
}

/// Compose part expressions along the ordered partition `parts` of `g`.
///
/// Each part's labels are refined by its similarity classes, each class is
/// collapsed onto one label, the part is added to the prefix built so far,
/// cross edges are created class by class, and the labels are merged down to
/// the similarity classes of the new prefix. When every part and every prefix
/// has at most `l` similarity classes, the result uses at most
/// `max(k·l, 2l)` labels, `k` being the largest part label count.
pub fn compose_partition_expression(
    g: &Graph,
    parts: &[Vec<usize>],
    part_expressions: &[Expression],
    l: usize,
) -> Result<ComposeReport> {
    let n = g.n();
    let mut seen = alloc::vec![false; n];
    for p in parts.iter().flatten() {
        if *p >= n || seen[*p] {
            return Err(Error::NotAPartition);
        }
        seen[*p] = true;
    }
    if seen.iter().any(|s| !s) || parts.iter().any(Vec::is_empty) || parts.len() != part_expressions.len() {
        return Err(Error::NotAPartition);
    }
    let mut k = 0;
    let mut mu_max = 0;
    let mut prefix_vertices: Vec<usize> = Vec::new();
    // prefix similarity classes, each with its current label
    let mut prefix: Option<(Expression, Vec<(Vec<usize>, u32)>)> = None;

    for (index, (part, pe)) in parts.iter().zip(part_expressions).enumerate() {
        let sub = g.induced_subgraph(part)?;
        if !builds_graph(pe, &sub).unwrap_or(false) {
            return Err(Error::PartMismatch { index: index + 1 });
        }
        k = k.max(label_count(pe));
        let classes = similarity_partition(g, part)?;
        if classes.mu() > l {
            return Err(Error::SimilarityBound { index: index + 1, mu: classes.mu(), bound: l, prefix: false });
        }
        prefix_vertices.extend_from_slice(part);
        let next_classes = similarity_partition(g, &prefix_vertices)?;
        if next_classes.mu() > l {
            return Err(Error::SimilarityBound { index: index + 1, mu: next_classes.mu(), bound: l, prefix: true });
        }
        mu_max = mu_max.max(classes.mu()).max(next_classes.mu());

        let id_tags: Vec<String> = (0..n).map(|p| g.vertex(p).id.to_string()).collect();
        let class_of: BTreeMap<&str, usize> = classes
            .classes
            .iter()
            .enumerate()
            .flat_map(|(c, members)| members.iter().map(move |&v| (v, c)))
            .map(|(v, c)| (id_tags[v].as_str(), c))
            .collect();
        let mut all = BTreeSet::new();
        let (tree, root) = refine(pe, &class_of, &mut all)?;

        // one designated root pair per class, numbered clear of the prefix labels
        let avoid: BTreeSet<u32> = prefix.as_ref().map(|(_, cl)| cl.iter().map(|c| c.1).collect()).unwrap_or_default();
        let mut designated: BTreeMap<usize, Pair> = BTreeMap::new();
        for &p in &root {
            designated.entry(p.1).or_insert(p);
        }
        let mut num: BTreeMap<Pair, u32> = BTreeMap::new();
        let mut used: BTreeSet<u32> = BTreeSet::new();
        let next_free = |used: &BTreeSet<u32>, skip: &BTreeSet<u32>| (1u32..).find(|x| !used.contains(x) && !skip.contains(x)).unwrap();
        for p in designated.values() {
            let x = next_free(&used, &avoid);
            used.insert(x);
            num.insert(*p, x);
        }
        for p in &all {
            if !num.contains_key(p) {
                let x = next_free(&used, &BTreeSet::new());
                used.insert(x);
                num.insert(*p, x);
            }
        }
        let mut e = lower(&tree, &num);
        for p in &root {
            let d = designated[&p.1];
            if *p != d {
                e = Expression::relabel(num[p], num[&d], e);
            }
        }
        let part_classes: Vec<(Vec<usize>, u32)> = classes
            .classes
            .iter()
            .enumerate()
            .map(|(c, members)| (members.clone(), num[&designated[&c]]))
            .collect();

        let mut groups: Vec<(Vec<usize>, u32)> = Vec::new();
        if let Some((pe_prefix, prefix_classes)) = prefix.take() {
            e = Expression::union(pe_prefix, e);
            for (pa, la) in &prefix_classes {
                for (pc, lc) in &part_classes {
                    if pa.iter().any(|&x| pc.iter().any(|&y| g.has_edge(x, y))) {
                        e = Expression::join(*la, *lc, e);
                    }
                }
            }
            groups.extend(prefix_classes);
        }
        groups.extend(part_classes);

        // merge onto the classes of the new prefix, keeping an existing label per class
        let mut new_classes = Vec::with_capacity(next_classes.mu());
        for members in &next_classes.classes {
            let inside: Vec<&(Vec<usize>, u32)> = groups.iter().filter(|(m, _)| members.contains(&m[0])).collect();
            let rep = inside[0].1;
            for (_, lab) in &inside[1..] {
                e = Expression::relabel(*lab, rep, e);
            }
            new_classes.push((members.clone(), rep));
        }
        prefix = Some((e, new_classes));
    }
    let (expression, _) = prefix.ok_or(Error::NotAPartition)?;
    let labels = label_count(&expression);
    Ok(ComposeReport { expression, k, mu_max, labels })
}

/// Expression for `build_h(w, i, j, m, n)` built row by row. Each row is a
/// linear forest with a 3-label expression, and every row and row prefix has
/// at most `2t+1` similarity classes, so at most `6t+3` labels are used,
/// `t` being the number of non-zero letters among `α_j..α_{j+n-2}`.
pub fn grid_expression(w: &WordSpec, i: usize, j: usize, m: usize, n: usize) -> Result<Expression> {
    let letters = if n >= 2 { w.letters(j, n - 1)? } else { Vec::new() };
    if letters.iter().all(|l| l.is_zero()) {
        return Err(Error::AllZeroFactor);
    }
    let g = build_h(w, i, j, m, n)?;
    let rows: Vec<Vec<usize>> = (0..m).map(|r| (0..n).map(|c| c * m + r).collect()).collect();
    let exprs = rows.iter().map(|row| row_expression(&g, row)).collect::<Result<Vec<_>>>()?;
    let mut l = 0;
    let mut prefix = Vec::new();
    for row in &rows {
        prefix.extend_from_slice(row);
        l = l.max(similarity_partition(&g, row)?.mu()).max(similarity_partition(&g, &prefix)?.mu());
    }
    Ok(compose_partition_expression(&g, &rows, &exprs, l)?.expression)
}
