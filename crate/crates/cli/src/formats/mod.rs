//! File formats: graph and word-spec JSON, clique-width expressions as
//! s-expressions, reduction traces and DOT drawings.

pub mod dot;
pub mod graph_json;
pub mod sexp;
pub mod trace_json;
pub mod word_json;

use serde::Serialize;

use crate::CliError;

/// Pretty JSON with object keys sorted, so equal values print identically.
pub fn to_sorted_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let v = serde_json::to_value(value)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}
