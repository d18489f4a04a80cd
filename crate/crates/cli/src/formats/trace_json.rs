//! Reduction traces: the initial graph, the steps with the rule that
//! produced them, and the final graph.

use std::collections::BTreeSet;

use cwlab_core::vertexminor::{ReductionStep, ReductionTrace, StepKind};
use serde::{Deserialize, Serialize};

use super::graph_json::GraphDoc;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Op {
    LocalComplement,
    Pivot,
    Delete,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDoc {
    pub op: Op,
    pub vertices: Vec<usize>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub initial: GraphDoc,
    pub steps: Vec<StepDoc>,
    #[serde(rename = "final")]
    pub final_graph: GraphDoc,
}

impl StepDoc {
    fn from_step(s: &ReductionStep) -> Self {
        let (op, vertices) = match &s.kind {
            StepKind::LocalComplement(v) => (Op::LocalComplement, vec![*v]),
            StepKind::Pivot(v, w) => (Op::Pivot, vec![*v, *w]),
            StepKind::DeleteVertices(ids) => (Op::Delete, ids.iter().copied().collect()),
        };
        StepDoc { op, vertices, note: s.note.clone() }
    }

    fn to_step(&self) -> Result<ReductionStep, CliError> {
        let kind = match (&self.op, self.vertices.as_slice()) {
            (Op::LocalComplement, [v]) => StepKind::LocalComplement(*v),
            (Op::Pivot, [v, w]) => StepKind::Pivot(*v, *w),
            (Op::Delete, ids) => StepKind::DeleteVertices(ids.iter().copied().collect::<BTreeSet<_>>()),
            (op, vs) => return Err(CliError::Usage(format!("{op:?} step with {} vertices", vs.len()))),
        };
        Ok(ReductionStep { kind, note: self.note.clone() })
    }
}

impl TraceDoc {
    pub fn from_trace(t: &ReductionTrace) -> Self {
        TraceDoc {
            initial: GraphDoc::from_graph(&t.initial),
            steps: t.steps.iter().map(StepDoc::from_step).collect(),
            final_graph: GraphDoc::from_graph(&t.final_graph),
        }
    }

    /// Rebuild the trace by replaying the steps; the recorded final graph
    /// must agree with the replay.
    pub fn to_trace(&self) -> Result<ReductionTrace, CliError> {
        let mut trace = ReductionTrace::new(self.initial.to_graph()?);
        for s in &self.steps {
            let step = s.to_step()?;
            trace.push(step.kind, step.note)?;
        }
        if trace.final_graph != self.final_graph.to_graph()? {
            return Err(CliError::Usage("recorded final graph differs from the replayed steps".into()));
        }
        Ok(trace)
    }
}

pub fn print(t: &ReductionTrace) -> Result<String, CliError> {
    super::to_sorted_json(&TraceDoc::from_trace(t))
}

pub fn parse(text: &str) -> Result<ReductionTrace, CliError> {
    let doc: TraceDoc = serde_json::from_str(text)?;
    doc.to_trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use cwlab_core::graph::Graph;

    #[test]
    fn round_trip() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let mut t = ReductionTrace::new(c5);
        t.push(StepKind::LocalComplement(0), "lc").unwrap();
        t.push(StepKind::Pivot(2, 3), "pivot").unwrap();
        t.push(StepKind::DeleteVertices([4, 1].into_iter().collect()), "delete").unwrap();
        let text = print(&t).unwrap();
        assert_eq!(parse(&text).unwrap(), t);
        let tampered = text.replacen("\"op\": \"pivot\"", "\"op\": \"local-complement\"", 1);
        assert!(parse(&tampered).is_err());
    }
}
