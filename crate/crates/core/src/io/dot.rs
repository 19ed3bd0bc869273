use std::fmt::Write as _;

use super::text::{class_to_text, parse_dividing_set, ParseError};
use crate::surface::DividingSetClass;

const METADATA_PREFIX: &str = "// bcontact class: ";

/// Graphviz description of a class. A leading comment carries the class in
/// the text format (lines joined by `; `) so the file can be read back with
/// [`parse_dot_metadata`].
pub fn export_dot(d: &DividingSetClass) -> String {
    let text = class_to_text(d);
    let g = d.graph.normalized();
    let mut out = String::new();
    let _ = writeln!(out, "{METADATA_PREFIX}{}", text.trim_end().replace('\n', "; "));
    out.push_str("graph dividing_set {\n");
    let label = match d.slope {
        Some(s) => format!("{}, slope ({},{})", d.surface, s.p, s.q),
        None => d.surface.to_string(),
    };
    let _ = writeln!(out, "  label=\"{label}\";");
    for v in &g.vertices {
        let _ = writeln!(out, "  n{} [label=\"{}g{}\"];", v.id, v.sign, v.genus);
    }
    for (a, b) in &g.edges {
        let _ = writeln!(out, "  n{a} -- n{b};");
    }
    out.push_str("}\n");
    out
}

pub fn parse_dot_metadata(dot: &str) -> Result<DividingSetClass, ParseError> {
    let line =
        dot.lines().find_map(|l| l.strip_prefix(METADATA_PREFIX)).ok_or(ParseError::Missing("bcontact class"))?;
    parse_dividing_set(&line.replace("; ", "\n"))
}
