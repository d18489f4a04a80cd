//! `{"vertices":[{"id":0,"row":1,"col":1}],"edges":[[0,1]]}`; `row` and
//! `col` are optional but come together. Edges name vertex ids.

use cwlab_core::graph::{Graph, Vertex};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub col: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        let mut vertices: Vec<VertexDoc> = g
            .vertices()
            .iter()
            .map(|v| VertexDoc { id: v.id, row: v.coord.map(|c| c.0), col: v.coord.map(|c| c.1) })
            .collect();
        vertices.sort_by_key(|v| v.id);
        let mut edges: Vec<[usize; 2]> = g
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (g.vertex(a).id, g.vertex(b).id);
                [x.min(y), x.max(y)]
            })
            .collect();
        edges.sort_unstable();
        GraphDoc { vertices, edges }
    }

    pub fn to_graph(&self) -> Result<Graph, CliError> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            let coord = match (v.row, v.col) {
                (Some(r), Some(c)) => Some((r, c)),
                (None, None) => None,
                _ => return Err(CliError::Usage(format!("vertex {} has only one of row/col", v.id))),
            };
            vertices.push(Vertex { id: v.id, coord });
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Ok(Graph::from_parts(vertices, &edges)?)
    }
}

pub fn parse(text: &str) -> Result<Graph, CliError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    doc.to_graph()
}

pub fn print(g: &Graph) -> Result<String, CliError> {
    super::to_sorted_json(&GraphDoc::from_graph(g))
}
