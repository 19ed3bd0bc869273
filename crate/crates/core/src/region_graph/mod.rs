//! Signed, genus-labelled multigraphs describing a system of cooriented
//! separating curves on a closed surface.
//!
//! Each vertex is a connected region of the surface minus the curves and
//! carries the sign of that region together with its genus. Each edge is one
//! curve, joining the two regions it separates. Because the curves are
//! cooriented and separate a positive region from a negative one, the graph is
//! properly two-coloured by sign.

mod canon;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use canon::{are_isomorphic, canonical_code, CanonicalCode};

/// Largest number of parallel curves between two regions.
pub const MAX_EDGE_MULTIPLICITY: usize = 2;

/// Largest vertex count accepted by the canonical labelling.
pub const MAX_VERTICES: usize = 255;

/// Sign of a region: the sign of the contact-form coefficient on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.as_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match i8::deserialize(deserializer)? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(serde::de::Error::custom(format!("sign must be 1 or -1, got {other}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub id: u32,
    pub sign: Sign,
    pub genus: u8,
}

impl Vertex {
    pub fn new(id: u32, sign: Sign, genus: u8) -> Self {
        Vertex { id, sign, genus }
    }
}

/// A region graph. Fields are public; call [`RegionGraph::validate`] before
/// relying on any structural invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegionGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(u32, u32)>,
}

/// The first invariant a [`RegionGraph`] fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoCurves,
    DuplicateVertexId(u32),
    GenusOutOfRange { id: u32, genus: u8 },
    UnknownVertex { edge: usize, id: u32 },
    SelfLoop { edge: usize, id: u32 },
    EdgeMultiplicity { a: u32, b: u32, count: usize },
    TooManyVertices(usize),
    EdgeCount { vertices: usize, edges: usize },
    Disconnected,
    ImproperColoring { edge: usize, a: u32, b: u32 },
    GenusSum(u32),
}

impl Violation {
    /// Short stable name of the violated invariant.
    pub fn name(&self) -> &'static str {
        match self {
            Violation::NoCurves => "no curves",
            Violation::DuplicateVertexId(_) => "duplicate vertex id",
            Violation::GenusOutOfRange { .. } => "genus out of range",
            Violation::UnknownVertex { .. } => "unknown vertex",
            Violation::SelfLoop { .. } => "self-loop",
            Violation::EdgeMultiplicity { .. } => "edge multiplicity",
            Violation::TooManyVertices(_) => "too many vertices",
            Violation::EdgeCount { .. } => "edge count",
            Violation::Disconnected => "disconnected",
            Violation::ImproperColoring { .. } => "improper coloring",
            Violation::GenusSum(_) => "genus sum",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            Violation::NoCurves => write!(f, "{name}: a dividing set needs at least one curve"),
            Violation::DuplicateVertexId(id) => write!(f, "{name}: id {id} appears twice"),
            Violation::GenusOutOfRange { id, genus } => {
                write!(f, "{name}: vertex {id} has genus {genus}, expected 0 or 1")
            }
            Violation::UnknownVertex { edge, id } => {
                write!(f, "{name}: edge {edge} references undeclared vertex {id}")
            }
            Violation::SelfLoop { edge, id } => write!(f, "{name}: edge {edge} joins vertex {id} to itself"),
            Violation::EdgeMultiplicity { a, b, count } => {
                write!(f, "{name}: {count} parallel edges between {a} and {b} (at most {MAX_EDGE_MULTIPLICITY})")
            }
            Violation::TooManyVertices(n) => {
                write!(f, "{name}: {n} vertices (at most {MAX_VERTICES})")
            }
            Violation::EdgeCount { vertices, edges } => {
                write!(f, "{name}: {edges} edges on {vertices} vertices, expected a tree or exactly one cycle")
            }
            Violation::Disconnected => write!(f, "{name}: the region graph must be connected"),
            Violation::ImproperColoring { edge, a, b } => {
                write!(f, "{name}: edge {edge} joins {a} and {b}, which have the same sign")
            }
            Violation::GenusSum(sum) => write!(f, "{name}: total genus {sum}, expected 0 or 1"),
        }
    }
}

impl std::error::Error for Violation {}

/// Index-based view of a validated graph, used by the algorithms.
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub sign: Vec<Sign>,
    pub genus: Vec<u8>,
    /// Symmetric multiplicity matrix.
    pub mult: Vec<Vec<u8>>,
    pub degree: Vec<usize>,
}

impl Dense {
    pub fn len(&self) -> usize {
        self.sign.len()
    }
}

impl RegionGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(u32, u32)>) -> Self {
        RegionGraph { vertices, edges }
    }

    /// Builds a graph with ids `0..labels.len()`.
    pub fn from_labels(labels: &[(Sign, u8)], edges: &[(u32, u32)]) -> Self {
        let vertices =
            labels.iter().enumerate().map(|(i, &(sign, genus))| Vertex::new(i as u32, sign, genus)).collect();
        RegionGraph::new(vertices, edges.to_vec())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertices.len()
    }

    pub fn total_genus(&self) -> u32 {
        self.vertices.iter().map(|v| v.genus as u32).sum()
    }

    pub fn index_of(&self, id: u32) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    /// Degrees in vertex order (parallel edges counted separately).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(a, b) in &self.edges {
            if let Some(i) = self.index_of(a) {
                deg[i] += 1;
            }
            if let Some(j) = self.index_of(b) {
                deg[j] += 1;
            }
        }
        deg
    }

    /// Checks every invariant and reports the first one that fails.
    pub fn validate(&self) -> Result<(), Violation> {
        if self.edges.is_empty() {
            return Err(Violation::NoCurves);
        }
        let mut index = BTreeMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.id, i).is_some() {
                return Err(Violation::DuplicateVertexId(v.id));
            }
            if v.genus > 1 {
                return Err(Violation::GenusOutOfRange { id: v.id, genus: v.genus });
            }
        }
        let mut pairs: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            for id in [a, b] {
                if !index.contains_key(&id) {
                    return Err(Violation::UnknownVertex { edge: k, id });
                }
            }
            if a == b {
                return Err(Violation::SelfLoop { edge: k, id: a });
            }
            *pairs.entry((a.min(b), a.max(b))).or_default() += 1;
        }
        if let Some((&(a, b), &count)) = pairs.iter().find(|(_, &c)| c > MAX_EDGE_MULTIPLICITY) {
            return Err(Violation::EdgeMultiplicity { a, b, count });
        }
        let n = self.vertices.len();
        if n > MAX_VERTICES {
            return Err(Violation::TooManyVertices(n));
        }
        let e = self.edges.len();
        if e + 1 != n && e != n {
            return Err(Violation::EdgeCount { vertices: n, edges: e });
        }
        if !self.is_connected(&index) {
            return Err(Violation::Disconnected);
        }
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            if self.vertices[index[&a]].sign == self.vertices[index[&b]].sign {
                return Err(Violation::ImproperColoring { edge: k, a, b });
            }
        }
        let genus = self.total_genus();
        if genus > 1 {
            return Err(Violation::GenusSum(genus));
        }
        Ok(())
    }

    fn is_connected(&self, index: &BTreeMap<u32, usize>) -> bool {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            let (i, j) = (index[&a], index[&b]);
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Dense view. Callers must have validated the graph.
    pub(crate) fn dense(&self) -> Dense {
        let n = self.vertices.len();
        let mut mult = vec![vec![0u8; n]; n];
        let mut degree = vec![0; n];
        for &(a, b) in &self.edges {
            let i = self.index_of(a).expect("validated");
            let j = self.index_of(b).expect("validated");
            mult[i][j] += 1;
            mult[j][i] += 1;
            degree[i] += 1;
            degree[j] += 1;
        }
        Dense {
            sign: self.vertices.iter().map(|v| v.sign).collect(),
            genus: self.vertices.iter().map(|v| v.genus).collect(),
            mult,
            degree,
        }
    }

    /// The same graph with every sign negated.
    pub fn swapped(&self) -> RegionGraph {
        RegionGraph {
            vertices: self.vertices.iter().map(|v| Vertex { sign: v.sign.flip(), ..*v }).collect(),
            edges: self.edges.clone(),
        }
    }

    /// Renames vertex ids through `rename`. Edge and vertex order are kept.
    pub fn relabeled(&self, rename: impl Fn(u32) -> u32) -> RegionGraph {
        RegionGraph {
            vertices: self.vertices.iter().map(|v| Vertex { id: rename(v.id), ..*v }).collect(),
            edges: self.edges.iter().map(|&(a, b)| (rename(a), rename(b))).collect(),
        }
    }

    /// Renumbers ids densely from 0 in vertex order and orients each edge as
    /// `(low, high)`; edges are sorted.
    pub fn normalized(&self) -> RegionGraph {
        let index: BTreeMap<u32, u32> = self.vertices.iter().enumerate().map(|(i, v)| (v.id, i as u32)).collect();
        let mut g = self.relabeled(|id| index.get(&id).copied().unwrap_or(id));
        for e in &mut g.edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        g.edges.sort_unstable();
        g
    }

    /// Marks the edges lying on the unique cycle, if any. Edges of a tree are
    /// all `false`. Works by repeatedly stripping degree-one vertices.
    pub fn cycle_edges(&self) -> Vec<bool> {
        let n = self.vertices.len();
        let ends: Vec<(usize, usize)> =
            self.edges.iter().filter_map(|&(a, b)| Some((self.index_of(a)?, self.index_of(b)?))).collect();
        let mut removed = vec![false; ends.len()];
        let mut degree = vec![0usize; n];
        for &(i, j) in &ends {
            degree[i] += 1;
            degree[j] += 1;
        }
        let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        while let Some(v) = leaves.pop() {
            if degree[v] != 1 {
                continue;
            }
            let Some(k) = (0..ends.len()).find(|&k| !removed[k] && (ends[k].0 == v || ends[k].1 == v)) else {
                continue;
            };
            removed[k] = true;
            let w = if ends[k].0 == v { ends[k].1 } else { ends[k].0 };
            degree[v] -= 1;
            degree[w] -= 1;
            if degree[w] == 1 {
                leaves.push(w);
            }
        }
        removed.into_iter().map(|r| !r).collect()
    }

    /// Vertices that lie on some cycle.
    pub fn cycle_vertices(&self) -> BTreeSet<u32> {
        self.edges.iter().zip(self.cycle_edges()).filter(|(_, on)| *on).flat_map(|(&(a, b), _)| [a, b]).collect()
    }

    /// `true` when every edge lies on the cycle.
    pub fn is_bare_cycle(&self) -> bool {
        !self.is_tree() && self.cycle_edges().into_iter().all(|c| c)
    }
}
