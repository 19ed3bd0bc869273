use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::region_graph::{RegionGraph, Sign, Vertex};
use crate::surface::{DividingSetClass, EmbeddingViolation, Slope, SurfaceKind};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: unexpected '{token}': {message}")]
    Syntax { line: usize, token: String, message: String },
    #[error("missing '{0}' line")]
    Missing(&'static str),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("invalid dividing set: {0}")]
    Invalid(#[from] EmbeddingViolation),
}

impl ParseError {
    /// Name of the violated invariant for validation failures.
    pub fn invariant(&self) -> Option<&'static str> {
        match self {
            ParseError::Invalid(v) => Some(v.name()),
            _ => None,
        }
    }
}

fn syntax(line: usize, token: &str, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, token: token.to_string(), message: message.into() }
}

fn number<T: std::str::FromStr>(line: usize, token: Option<&str>, what: &str) -> Result<T, ParseError> {
    let token = token.ok_or_else(|| syntax(line, "<end of line>", format!("expected {what}")))?;
    token.parse().map_err(|_| syntax(line, token, format!("expected {what}")))
}

struct Parsed {
    surface: Option<SurfaceKind>,
    graph: RegionGraph,
    slope: Option<Slope>,
}

fn parse_lines(text: &str) -> Result<Parsed, ParseError> {
    let mut parsed = Parsed { surface: None, graph: RegionGraph::new(Vec::new(), Vec::new()), slope: None };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(head) = tokens.next() else { continue };
        match head {
            "surface" => {
                let token = tokens.next().ok_or_else(|| syntax(line, head, "expected sphere or torus"))?;
                if parsed.surface.is_some() {
                    return Err(syntax(line, head, "surface declared twice"));
                }
                parsed.surface = Some(token.parse().map_err(|m: String| syntax(line, token, m))?);
            }
            "v" => {
                let id = number(line, tokens.next(), "a non-negative vertex id")?;
                let sign = match tokens.next() {
                    Some("+") => Sign::Plus,
                    Some("-") => Sign::Minus,
                    Some(t) => return Err(syntax(line, t, "expected + or -")),
                    None => return Err(syntax(line, "<end of line>", "expected + or -")),
                };
                let genus = number(line, tokens.next(), "genus 0 or 1")?;
                parsed.graph.vertices.push(Vertex::new(id, sign, genus));
            }
            "e" => {
                let a = number(line, tokens.next(), "a vertex id")?;
                let b = number(line, tokens.next(), "a vertex id")?;
                parsed.graph.edges.push((a, b));
            }
            "slope" => {
                if parsed.slope.is_some() {
                    return Err(syntax(line, head, "slope declared twice"));
                }
                let p = number(line, tokens.next(), "slope numerator p")?;
                let q = number(line, tokens.next(), "slope denominator q")?;
                parsed.slope = Some(Slope { p, q });
            }
            other => return Err(syntax(line, other, "expected one of surface, v, e, slope")),
        }
        if let Some(extra) = tokens.next() {
            return Err(syntax(line, extra, "trailing token"));
        }
    }
    Ok(parsed)
}

/// Parses a bare region graph (`v` and `e` lines only) and validates it.
pub fn parse_region_graph(text: &str) -> Result<RegionGraph, ParseError> {
    let parsed = parse_lines(text)?;
    parsed.graph.validate().map_err(EmbeddingViolation::from)?;
    Ok(parsed.graph)
}

/// Parses a dividing-set class from the text or JSON format and checks that
/// it embeds in its surface.
pub fn parse_dividing_set(text: &str) -> Result<DividingSetClass, ParseError> {
    let class = if text.trim_start().starts_with('{') {
        class_from_json(text)?
    } else {
        let parsed = parse_lines(text)?;
        let surface = parsed.surface.ok_or(ParseError::Missing("surface"))?;
        DividingSetClass::new(surface, parsed.graph, parsed.slope)
    };
    class.check_embeddable()?;
    Ok(class)
}

pub fn class_to_text(d: &DividingSetClass) -> String {
    let g = d.graph.normalized();
    let mut out = format!("surface {}\n", d.surface);
    for v in &g.vertices {
        let _ = writeln!(out, "v {} {} {}", v.id, v.sign, v.genus);
    }
    for (a, b) in &g.edges {
        let _ = writeln!(out, "e {a} {b}");
    }
    if let Some(s) = d.slope {
        let _ = writeln!(out, "slope {} {}", s.p, s.q);
    }
    out
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    surface: SurfaceKind,
    vertices: Vec<Vertex>,
    edges: Vec<(u32, u32)>,
    #[serde(default)]
    slope: Option<(u64, u64)>,
}

/// Single-line JSON with keys in the fixed order surface, vertices, edges,
/// slope.
pub fn class_to_json(d: &DividingSetClass) -> String {
    let g = d.graph.normalized();
    let dto =
        ClassJson { surface: d.surface, vertices: g.vertices, edges: g.edges, slope: d.slope.map(|s| (s.p, s.q)) };
    serde_json::to_string(&dto).expect("plain data serialises")
}

pub(crate) fn class_json_value(d: &DividingSetClass) -> serde_json::Value {
    serde_json::from_str(&class_to_json(d)).expect("round trip of our own output")
}

/// Reads the JSON form without checking embeddability.
pub fn class_from_json(text: &str) -> Result<DividingSetClass, ParseError> {
    let dto: ClassJson = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    Ok(DividingSetClass::new(
        dto.surface,
        RegionGraph::new(dto.vertices, dto.edges),
        dto.slope.map(|(p, q)| Slope { p, q }),
    ))
}
