//! Text, JSON, DOT and CSV formats.
//!
//! The text format has one item per line; `#` starts a comment.
//!
//! ```text
//! surface torus
//! v 0 + 0
//! v 1 - 0
//! e 0 1
//! e 0 1
//! slope 3 2
//! ```
//!
//! The JSON form of a class is
//! `{"surface":"torus","vertices":[{"id":0,"sign":1,"genus":0},...],"edges":[[0,1],...],"slope":[3,2]}`
//! with `"slope"` null or absent when the graph is a tree.

mod dot;
mod table;
mod text;

pub use dot::{export_dot, parse_dot_metadata};
pub use table::{record_json, summary_csv, table_csv, table_jsonl, tight_count_json};
pub use text::{class_from_json, class_to_json, class_to_text, parse_dividing_set, parse_region_graph, ParseError};

use num_bigint::BigUint;
use serde::Serializer;

/// Big integers are written as decimal strings so that JSON readers with
/// 64-bit numbers stay exact.
pub(crate) fn ser_big<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_str_radix(10))
}
