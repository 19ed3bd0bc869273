//! Binding region graphs to the sphere or the torus inside S³.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::region_graph::{canonical_code, CanonicalCode, RegionGraph, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    Sphere,
    Torus,
}

impl SurfaceKind {
    pub fn genus(self) -> u8 {
        match self {
            SurfaceKind::Sphere => 0,
            SurfaceKind::Torus => 1,
        }
    }

    pub fn euler_characteristic(self) -> i64 {
        2 - 2 * self.genus() as i64
    }

    pub fn name(self) -> &'static str {
        match self {
            SurfaceKind::Sphere => "sphere",
            SurfaceKind::Torus => "torus",
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SurfaceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sphere" => Ok(SurfaceKind::Sphere),
            "torus" => Ok(SurfaceKind::Torus),
            other => Err(format!("unknown surface '{other}' (expected sphere or torus)")),
        }
    }
}

/// The b-manifolds in scope: S³ with critical surface a 2-sphere or an
/// unknotted torus. Both critical surfaces separate S³ into two pieces
/// (two balls, resp. two solid tori).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Manifold {
    #[serde(rename = "s3-s2")]
    S3S2,
    #[serde(rename = "s3-t2")]
    S3T2,
}

/// One of the two components of S³ minus the critical surface. `A` is the
/// side the coorientation of the first curve points into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplementSide {
    A,
    B,
}

impl Manifold {
    pub fn critical(self) -> SurfaceKind {
        match self {
            Manifold::S3S2 => SurfaceKind::Sphere,
            Manifold::S3T2 => SurfaceKind::Torus,
        }
    }

    pub fn for_surface(kind: SurfaceKind) -> Manifold {
        match kind {
            SurfaceKind::Sphere => Manifold::S3S2,
            SurfaceKind::Torus => Manifold::S3T2,
        }
    }

    pub fn complement_sides(self) -> [ComplementSide; 2] {
        [ComplementSide::A, ComplementSide::B]
    }

    pub fn name(self) -> &'static str {
        match self {
            Manifold::S3S2 => "s3-s2",
            Manifold::S3T2 => "s3-t2",
        }
    }
}

impl fmt::Display for Manifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Manifold {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "s3-s2" => Ok(Manifold::S3S2),
            "s3-t2" => Ok(Manifold::S3T2),
            other => Err(format!("unknown manifold '{other}' (expected s3-s2 or s3-t2)")),
        }
    }
}

/// Homology class of the essential curves on the torus, normalised to
/// coprime `0 < q <= p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slope {
    pub p: u64,
    pub q: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("slope ({p},{q}) must satisfy 0 < q <= p and gcd(p,q) = 1")]
pub struct SlopeError {
    pub p: u64,
    pub q: u64,
}

impl Slope {
    pub fn new(p: u64, q: u64) -> Result<Slope, SlopeError> {
        if q == 0 || q > p || p.gcd(&q) != 1 {
            return Err(SlopeError { p, q });
        }
        Ok(Slope { p, q })
    }

    /// All normalised slopes with `p <= max_p`, ordered by `(p, q)`.
    pub fn all_up_to(max_p: u64) -> Vec<Slope> {
        (1..=max_p).flat_map(|p| (1..=p).filter_map(move |q| Slope::new(p, q).ok())).collect()
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// An isotopy class of cooriented separating curves on a surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DividingSetClass {
    pub surface: SurfaceKind,
    pub graph: RegionGraph,
    pub slope: Option<Slope>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingViolation {
    #[error(transparent)]
    Graph(#[from] Violation),
    #[error("sphere requires tree: {edges} curves on {vertices} regions")]
    SphereRequiresTree { vertices: usize, edges: usize },
    #[error("sphere regions have genus 0")]
    SphereGenus,
    #[error("torus tree needs exactly one genus-1 region, found {0}")]
    TorusTreeGenus(u32),
    #[error("torus cycle regions have genus 0")]
    TorusCycleGenus,
    #[error("slope only applies to torus classes with a cycle")]
    UnexpectedSlope,
    #[error("torus class with a cycle needs a slope")]
    MissingSlope,
    #[error(transparent)]
    Slope(#[from] SlopeError),
}

impl EmbeddingViolation {
    pub fn name(&self) -> &'static str {
        match self {
            EmbeddingViolation::Graph(v) => v.name(),
            EmbeddingViolation::SphereRequiresTree { .. } => "sphere requires tree",
            EmbeddingViolation::SphereGenus => "sphere genus",
            EmbeddingViolation::TorusTreeGenus(_) => "torus tree genus",
            EmbeddingViolation::TorusCycleGenus => "torus cycle genus",
            EmbeddingViolation::UnexpectedSlope => "unexpected slope",
            EmbeddingViolation::MissingSlope => "missing slope",
            EmbeddingViolation::Slope(_) => "invalid slope",
        }
    }
}

/// Sort and identity key for a class: graph code plus slope.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassKey {
    pub graph: CanonicalCode,
    pub slope: Option<Slope>,
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.graph)?;
        if let Some(s) = self.slope {
            write!(f, "@{}/{}", s.p, s.q)?;
        }
        Ok(())
    }
}

impl DividingSetClass {
    pub fn new(surface: SurfaceKind, graph: RegionGraph, slope: Option<Slope>) -> Self {
        DividingSetClass { surface, graph, slope }
    }

    pub fn sphere(graph: RegionGraph) -> Self {
        DividingSetClass::new(SurfaceKind::Sphere, graph, None)
    }

    pub fn torus(graph: RegionGraph, slope: Option<Slope>) -> Self {
        DividingSetClass::new(SurfaceKind::Torus, graph, slope)
    }

    pub fn check_embeddable(&self) -> Result<(), EmbeddingViolation> {
        self.graph.validate()?;
        let g = &self.graph;
        if let Some(s) = self.slope {
            Slope::new(s.p, s.q)?;
        }
        match self.surface {
            SurfaceKind::Sphere => {
                if !g.is_tree() {
                    return Err(EmbeddingViolation::SphereRequiresTree {
                        vertices: g.vertex_count(),
                        edges: g.edge_count(),
                    });
                }
                if g.total_genus() != 0 {
                    return Err(EmbeddingViolation::SphereGenus);
                }
                if self.slope.is_some() {
                    return Err(EmbeddingViolation::UnexpectedSlope);
                }
            }
            SurfaceKind::Torus if g.is_tree() => {
                if g.total_genus() != 1 {
                    return Err(EmbeddingViolation::TorusTreeGenus(g.total_genus()));
                }
                if self.slope.is_some() {
                    return Err(EmbeddingViolation::UnexpectedSlope);
                }
            }
            SurfaceKind::Torus => {
                if g.total_genus() != 0 {
                    return Err(EmbeddingViolation::TorusCycleGenus);
                }
                if self.slope.is_none() {
                    return Err(EmbeddingViolation::MissingSlope);
                }
            }
        }
        Ok(())
    }

    /// Sum of region Euler characteristics; equals χ of the closed surface
    /// for every embeddable class.
    pub fn total_euler(&self) -> i64 {
        self.graph.vertices.iter().zip(self.graph.degrees()).map(|(v, d)| region_euler(v.genus, d)).sum()
    }

    pub fn key(&self, modulo_swap: bool) -> Result<ClassKey, Violation> {
        Ok(ClassKey { graph: canonical_code(&self.graph, modulo_swap)?, slope: self.slope })
    }
}

/// Euler characteristic of a compact orientable surface with the given genus
/// and number of boundary circles.
pub fn region_euler(genus: u8, boundary_count: usize) -> i64 {
    assert!(boundary_count >= 1, "a region is bounded by at least one curve");
    2 - 2 * genus as i64 - boundary_count as i64
}
