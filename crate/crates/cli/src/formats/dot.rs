//! Graphviz output. Grid vertices are pinned at `(col, -row)`; cluster graphs
//! put each cluster column on one rank and draw type-B edges dotted.

use std::fmt::Write;

use cwlab_core::clusters::{ClusterGraph, ClusterKind, SeparatorPartition, Side};
use cwlab_core::graph::Graph;

pub fn graph(g: &Graph) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, width=0.3, fixedsize=true];\n");
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&p| g.vertex(p).id);
    for &p in &order {
        let v = g.vertex(p);
        match v.coord {
            Some((r, c)) => writeln!(out, "  v{} [label=\"{}\", pos=\"{},{}!\"];", v.id, v.id, c, -(r as i64)).unwrap(),
            None => writeln!(out, "  v{} [label=\"{}\"];", v.id, v.id).unwrap(),
        }
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (g.vertex(a).id, g.vertex(b).id);
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort_unstable();
    for (a, b) in edges {
        writeln!(out, "  v{a} -- v{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Cluster graph with one rank per column. When a separator partition is
/// given, separator clusters are boxed and `Y` clusters shaded.
pub fn cluster_graph(b: &ClusterGraph, sp: Option<&SeparatorPartition>) -> String {
    let mut out = String::from("digraph B {\n  rankdir=LR;\n  node [shape=ellipse];\n");
    for (t, column) in b.columns.iter().enumerate() {
        write!(out, "  subgraph col{t} {{ rank=same;").unwrap();
        for c in column {
            write!(out, " c{c};").unwrap();
        }
        out.push_str(" }\n");
    }
    for c in &b.clusters {
        let members: Vec<String> = c.members.iter().map(|m| m.to_string()).collect();
        let mut attrs = format!("label=\"{}\"", members.join(","));
        if c.kind == ClusterKind::Outer {
            attrs.push_str(", style=dashed");
        }
        if let Some(sp) = sp {
            match sp.side[c.id] {
                Side::Separator => attrs.push_str(", shape=box"),
                Side::Y => attrs.push_str(", style=filled, fillcolor=lightgray"),
                Side::X => {}
            }
        }
        writeln!(out, "  c{} [{attrs}];", c.id).unwrap();
    }
    for e in &b.type_a {
        writeln!(out, "  c{} -> c{} [label=\"{}\"];", e.from, e.to, e.vertex).unwrap();
    }
    for &(x, y) in &b.type_b {
        writeln!(out, "  c{x} -> c{y} [style=dotted, constraint=false];").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_with_and_without_coordinates() {
        let mut g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(graph(&g), "graph G {\n  node [shape=circle, width=0.3, fixedsize=true];\n  v0 [label=\"0\"];\n  v1 [label=\"1\"];\n  v0 -- v1;\n}\n");
        g.set_coord(0, Some((2, 3)));
        assert!(graph(&g).contains("pos=\"3,-2!\""));
    }
}
