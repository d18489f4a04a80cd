use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{cluster_graph_of_columns, max_disjoint_paths, xy_graph_partition};
use crate::cliquewidth::{compose_partition_expression, row_expression, Expression};
use crate::error::{Error, Result};
use crate::graph::{build_h, find_induced_embedding, similarity_partition, Graph};
use crate::words::WordSpec;

/// What happened inside one bar.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarReport {
    pub first_col: usize,
    pub last_col: usize,
    /// First column of the window `G*` holding the copy of β.
    pub window_col: usize,
    /// Number of disjoint paths through the window's cluster graph.
    pub s: usize,
    /// Similarity class counts of the two sides inside `G*`.
    pub mu_x: usize,
    pub mu_y: usize,
    /// Vertex ids of `X_i` and `Y_i`.
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarPartition {
    /// Parts `U_i` as vertex ids, in composition order; empty parts are dropped.
    pub parts: Vec<Vec<usize>>,
    /// `None` exactly when the graph is empty.
    pub expression: Option<Expression>,
    pub labels: usize,
    /// Largest label count of a part expression.
    pub k_parts: usize,
    /// Largest similarity class count over parts and prefixes.
    pub mu_max: usize,
    /// `(12L + 15)(8k² − 6k)` with `L = window_len − 1`.
    pub bound: u64,
    pub bars: Vec<BarReport>,
}

fn col_of(g: &Graph, p: usize) -> Result<usize> {
    g.coord(p).map(|c| c.1).ok_or(Error::MissingCoords(g.vertex(p).id))
}

/// Cut `g` into bars of `window_len` columns, split each bar through the
/// separator of a window carrying `β = α_{beta_start}..α_{beta_start+k−2}`,
/// and compose an expression along the resulting parts.
///
/// `g` must not contain `H^α_{1,beta_start}(k,k)` as an induced subgraph.
pub fn bar_partition(g: &Graph, w: &WordSpec, beta_start: usize, k: usize, window_len: usize) -> Result<BarPartition> {
    if k == 0 || window_len < k {
        return Err(Error::SizeCap { what: "window length", size: window_len, cap: k });
    }
    let l = (window_len - 1) as u64;
    let kk = k as u64;
    let bound = (12 * l + 15) * (8 * kk * kk - 6 * kk);
    let h = build_h(w, 1, beta_start, k, k)?;
    if find_induced_embedding(&h.plain(), &g.plain()).is_some() {
        return Err(Error::ForbiddenPatternPresent);
    }
    let mut result = BarPartition { parts: Vec::new(), expression: None, labels: 0, k_parts: 0, mu_max: 0, bound, bars: Vec::new() };
    if g.n() == 0 {
        return Ok(result);
    }
    let cols = (0..g.n()).map(|p| col_of(g, p)).collect::<Result<Vec<_>>>()?;
    let (a, b) = (*cols.iter().min().unwrap(), *cols.iter().max().unwrap());
    let beta = if k >= 2 { w.letters(beta_start, k - 1)? } else { Vec::new() };

    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut carry: Vec<usize> = Vec::new();
    let mut bar = 0;
    let mut start = a;
    while start <= b {
        let end = start + window_len - 1;
        let mut found = None;
        for y in start..=end + 1 - k {
            if k < 2 || w.letters(y, k - 1)? == beta {
                found = Some(y);
                break;
            }
        }
        let y = found.ok_or(Error::FactorNotInBar { bar: bar + 1 })?;
        let inside: Vec<usize> = (0..g.n()).filter(|&p| (y..y + k).contains(&cols[p])).collect();
        let window = g.induced_subgraph(&inside)?;
        let cg = cluster_graph_of_columns(&window, w, y, y + k - 1)?;
        let sp = max_disjoint_paths(&cg);
        let (xs, ys) = xy_graph_partition(&sp, &cg)?;
        let pos = |ids: &[usize]| ids.iter().map(|&id| window.position_of_id(id).ok_or(Error::UnknownVertex(id))).collect::<Result<Vec<_>>>();
        let mu_x = similarity_partition(&window, &pos(&xs)?)?.mu();
        let mu_y = similarity_partition(&window, &pos(&ys)?)?.mu();

        let xs: BTreeSet<usize> = xs.into_iter().collect();
        let mut x_part = Vec::new();
        let mut y_part = Vec::new();
        for p in 0..g.n() {
            let (c, id) = (cols[p], g.vertex(p).id);
            if c < start || c > end {
                continue;
            }
            if c < y || (c < y + k && xs.contains(&id)) {
                x_part.push(p);
            } else {
                y_part.push(p);
            }
        }
        let ids = |ps: &[usize]| ps.iter().map(|&p| g.vertex(p).id).collect::<Vec<_>>();
        result.bars.push(BarReport { first_col: start, last_col: end, window_col: y, s: sp.s(), mu_x, mu_y, x: ids(&x_part), y: ids(&y_part) });
        carry.extend(x_part);
        parts.push(core::mem::take(&mut carry));
        carry = y_part;
        bar += 1;
        start = end + 1;
    }
    parts.push(carry);
    parts.retain(|p| !p.is_empty());
    for p in &mut parts {
        p.sort_unstable();
    }

    let exprs = parts.iter().map(|part| part_expression(g, part, &cols)).collect::<Result<Vec<_>>>()?;
    let mut l = 1;
    let mut prefix = Vec::new();
    for part in &parts {
        prefix.extend_from_slice(part);
        l = l.max(similarity_partition(g, part)?.mu()).max(similarity_partition(g, &prefix)?.mu());
    }
    let report = compose_partition_expression(g, &parts, &exprs, l)?;
    result.parts = parts.iter().map(|ps| ps.iter().map(|&p| g.vertex(p).id).collect()).collect();
    result.labels = report.labels;
    result.k_parts = report.k;
    result.mu_max = report.mu_max;
    result.expression = Some(report.expression);
    Ok(result)
}

/// Expression for one part: each row is a linear forest ordered by column,
/// and the rows are composed from top to bottom.
fn part_expression(g: &Graph, part: &[usize], cols: &[usize]) -> Result<Expression> {
    let sub = g.induced_subgraph(part)?;
    let mut rows: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for (q, &p) in part.iter().enumerate() {
        let r = g.coord(p).ok_or(Error::MissingCoords(g.vertex(p).id))?.0;
        match rows.iter_mut().find(|(row, _)| *row == r) {
            Some((_, members)) => members.push((cols[p], q)),
            None => rows.push((r, alloc::vec![(cols[p], q)])),
        }
    }
    rows.sort_unstable();
    let orders: Vec<Vec<usize>> = rows
        .into_iter()
        .map(|(_, mut members)| {
            members.sort_unstable();
            members.into_iter().map(|(_, q)| q).collect()
        })
        .collect();
    if orders.len() == 1 {
        return row_expression(&sub, &orders[0]);
    }
    let exprs = orders.iter().map(|o| row_expression(&sub, o)).collect::<Result<Vec<_>>>()?;
    let mut l = 1;
    let mut prefix = Vec::new();
    for o in &orders {
        prefix.extend_from_slice(o);
        l = l.max(similarity_partition(&sub, o)?.mu()).max(similarity_partition(&sub, &prefix)?.mu());
    }
    Ok(compose_partition_expression(&sub, &orders, &exprs, l)?.expression)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliquewidth::builds_graph;

    #[test]
    fn empty_graph_has_no_parts() {
        let w = WordSpec::periodic("2").unwrap();
        let out = bar_partition(&Graph::new(), &w, 1, 2, 2).unwrap();
        assert!(out.parts.is_empty());
        assert!(out.expression.is_none());
        assert_eq!(out.bound, (12 + 15) * 20);
    }

    #[test]
    fn forbidden_pattern_is_rejected() {
        let w = WordSpec::periodic("2").unwrap();
        let g = build_h(&w, 1, 1, 3, 3).unwrap();
        assert_eq!(bar_partition(&g, &w, 1, 2, 2), Err(Error::ForbiddenPatternPresent));
    }

    #[test]
    fn a_thin_grid_is_rebuilt() {
        let w = WordSpec::periodic("2").unwrap();
        let g = build_h(&w, 1, 1, 2, 7).unwrap();
        let out = bar_partition(&g, &w, 1, 3, 3).unwrap();
        assert!(builds_graph(out.expression.as_ref().unwrap(), &g).unwrap());
        assert!(out.labels as u64 <= out.bound);
        assert_eq!(out.bars.len(), 3);
    }
}
