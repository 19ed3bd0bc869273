//! Classification of b-contact structures up to b-isotopy for a fixed
//! admissible dividing set, and the leaf census of the associated b-Jacobi
//! foliation.
//!
//! Each regime is reported by the shape of its parameter space: a finite
//! number of discrete choices times a free abelian group of some rank.
//!
//! | manifold | dividing set         | tight      | mixed       | fully overtwisted |
//! |----------|----------------------|------------|-------------|-------------------|
//! | (S³,S²)  | one curve            | 1          | 2 × ℤ       | ℤ²                |
//! | (S³,S²)  | several curves       | none       | none        | ℤ²                |
//! | (S³,T²)  | 2n essential curves  | 2N         | 2N × ℤ²     | ℤ⁴                |
//! | (S³,T²)  | a contractible curve | none       | none        | ℤ⁴                |
//!
//! Here `N = N(n, -p, q)` is the solid-torus tight count.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::admissibility::{euler_pairing, is_tight_candidate};
use crate::ct_arith::{tight_count_solid_torus, TightCountResult};
use crate::enumerator::{enum_sphere_classes, enum_torus_classes_with, EnumError, Limits};
use crate::surface::{ClassKey, DividingSetClass, EmbeddingViolation, Manifold, SurfaceKind};

/// `finite_factor` discrete choices times `ℤ^free_rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegimeDescriptor {
    #[serde(serialize_with = "crate::io::ser_big")]
    pub finite_factor: BigUint,
    pub free_rank: u32,
}

impl RegimeDescriptor {
    pub fn new(finite_factor: impl Into<BigUint>, free_rank: u32) -> Self {
        let finite_factor = finite_factor.into();
        let free_rank = if finite_factor.is_zero() { 0 } else { free_rank };
        RegimeDescriptor { finite_factor, free_rank }
    }

    pub fn impossible() -> Self {
        RegimeDescriptor::new(0u32, 0)
    }

    pub fn is_possible(&self) -> bool {
        !self.finite_factor.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub manifold: Manifold,
    pub dividing_set: DividingSetClass,
    pub tight: RegimeDescriptor,
    /// Tight on one side of the critical surface, overtwisted on the other.
    pub mixed: RegimeDescriptor,
    pub fully_overtwisted: RegimeDescriptor,
    pub tight_count_detail: Option<TightCountResult>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LeafCensus {
    pub leaves_dim3: usize,
    pub leaves_dim2: usize,
    pub leaves_dim1: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("not embeddable: {0}")]
    NotEmbeddable(#[from] EmbeddingViolation),
    #[error("{surface} dividing set does not live on {manifold}")]
    SurfaceMismatch { manifold: Manifold, surface: SurfaceKind },
    #[error("inadmissible: χ(Z+) - χ(Z-) = {pairing}, but the Euler class on S³ vanishes")]
    Inadmissible { pairing: i64 },
}

fn check(m: Manifold, d: &DividingSetClass) -> Result<(), ClassifyError> {
    d.check_embeddable()?;
    if m.critical() != d.surface {
        return Err(ClassifyError::SurfaceMismatch { manifold: m, surface: d.surface });
    }
    match euler_pairing(d) {
        0 => Ok(()),
        pairing => Err(ClassifyError::Inadmissible { pairing }),
    }
}

pub fn classify(m: Manifold, d: &DividingSetClass) -> Result<ClassificationRecord, ClassifyError> {
    check(m, d)?;
    let tight_side = is_tight_candidate(m, d).holds;
    let (tight, mixed, fully_overtwisted, detail) = match m {
        Manifold::S3S2 if tight_side => {
            (RegimeDescriptor::new(1u32, 0), RegimeDescriptor::new(2u32, 1), RegimeDescriptor::new(1u32, 2), None)
        }
        Manifold::S3S2 => {
            (RegimeDescriptor::impossible(), RegimeDescriptor::impossible(), RegimeDescriptor::new(1u32, 2), None)
        }
        Manifold::S3T2 if tight_side => {
            let slope = d.slope.expect("cycle classes carry a slope");
            let n = (d.graph.edge_count() / 2) as u64;
            let detail = tight_count_solid_torus(n, slope.p, slope.q).expect("slope validated");
            let both_sides = BigUint::from(2u32) * &detail.count;
            (
                RegimeDescriptor::new(both_sides.clone(), 0),
                RegimeDescriptor::new(both_sides, 2),
                RegimeDescriptor::new(1u32, 4),
                Some(detail),
            )
        }
        Manifold::S3T2 => {
            (RegimeDescriptor::impossible(), RegimeDescriptor::impossible(), RegimeDescriptor::new(1u32, 4), None)
        }
    };
    Ok(ClassificationRecord {
        manifold: m,
        dividing_set: d.clone(),
        tight,
        mixed,
        fully_overtwisted,
        tight_count_detail: detail,
    })
}

/// Leaves of the b-Jacobi foliation by dimension: the two components of
/// S³ minus the critical surface, the regions of the surface minus the
/// dividing set, and the dividing curves.
pub fn leaf_census(m: Manifold, d: &DividingSetClass) -> Result<LeafCensus, ClassifyError> {
    check(m, d)?;
    Ok(LeafCensus {
        leaves_dim3: m.complement_sides().len(),
        leaves_dim2: d.graph.vertex_count(),
        leaves_dim1: d.graph.edge_count(),
    })
}

/// One row of a classification table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub key: ClassKey,
    pub record: ClassificationRecord,
    pub census: LeafCensus,
}

/// Classifies every enumerated admissible class with at most `max_curves`
/// curves (and, on the torus, slopes with `p <= max_slope`). Rows are sorted
/// by class key.
pub fn classification_table(
    m: Manifold,
    max_curves: usize,
    max_slope: u64,
    modulo_swap: bool,
    limits: &Limits,
) -> Result<Vec<TableRow>, EnumError> {
    let classes = match m {
        Manifold::S3S2 => enum_sphere_classes(max_curves, modulo_swap, limits)?,
        Manifold::S3T2 => enum_torus_classes_with(max_curves, max_slope, modulo_swap, limits)?,
    };
    let mut rows: Vec<TableRow> = classes
        .par_iter()
        .map(|d| TableRow {
            key: d.key(modulo_swap).expect("enumerated classes are valid"),
            record: classify(m, d).expect("enumerated classes are admissible"),
            census: leaf_census(m, d).expect("enumerated classes are admissible"),
        })
        .collect();
    rows.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(rows)
}
