//! Enumeration and classification of dividing sets of b-contact structures
//! on the b-manifolds (S³, S²) and (S³, unknotted T²).
//!
//! A dividing set is encoded by its [`RegionGraph`]: regions of the critical
//! surface are vertices, dividing curves are edges. The crate enumerates
//! these graphs up to isomorphism, decides which can occur (the Euler
//! obstruction) and which allow tight structures (the Giroux criterion), and
//! reports the classification of b-contact structures up to b-isotopy for
//! each, including the solid-torus tight count `C_n((r - s)n + s)`.
//!
//! ```
//! use bcontact::{classify, io::parse_dividing_set, Manifold};
//!
//! let gamma = parse_dividing_set("surface torus\nv 0 + 0\nv 1 - 0\ne 0 1\ne 0 1\nslope 3 2").unwrap();
//! let record = classify(Manifold::S3T2, &gamma).unwrap();
//! assert_eq!(record.tight.finite_factor, 4u32.into());
//! ```

pub mod admissibility;
pub mod classifier;
pub mod cli;
pub mod ct_arith;
pub mod enumerator;
pub mod io;
pub mod region_graph;
pub mod surface;

pub use admissibility::{euler_pairing, is_admissible, is_tight_candidate, Verdict};
pub use classifier::{
    classification_table, classify, leaf_census, ClassificationRecord, ClassifyError, LeafCensus, RegimeDescriptor,
    TableRow,
};
pub use ct_arith::{
    catalan, honda_rs, neg_cf, tight_count_solid_torus, ArithError, ContinuedFraction, TightCountResult,
};
pub use enumerator::{
    enum_equicolored_trees, enum_sphere_classes, enum_torus_classes, oracle_count_trees, EnumError, Limits,
};
pub use region_graph::{are_isomorphic, canonical_code, CanonicalCode, RegionGraph, Sign, Vertex, Violation};
pub use surface::{region_euler, ClassKey, DividingSetClass, EmbeddingViolation, Manifold, Slope, SurfaceKind};
