//! Enumeration of dividing-set classes up to isomorphism.
//!
//! Sphere classes are balanced properly two-coloured trees; they are produced
//! from the canonical free-tree generator by colouring each tree with its
//! bipartition and, when signs are distinguished, its swap. Torus classes are
//! composed from trees carrying one genus-1 region and from unicyclic graphs
//! paired with every normalised slope; those are deduplicated by canonical
//! code and filtered by the Euler obstruction.

mod oracle;
mod trees;

use std::collections::BTreeMap;

pub use oracle::{oracle_count_trees, ORACLE_MAX_N};
pub use trees::{bipartition, FreeTrees};

use crate::admissibility::euler_pairing;
use crate::region_graph::{canonical_code, CanonicalCode, RegionGraph, Sign};
use crate::surface::{DividingSetClass, Slope};

/// Resource caps. Requests beyond them are refused.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for balanced trees on `2n` vertices.
    pub max_tree_n: usize,
    /// Largest number of curves for torus enumeration.
    pub max_curves: usize,
    /// Largest `p` for torus slopes.
    pub max_slope: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_tree_n: 10, max_curves: 12, max_slope: 200 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("{what} must be at least 1")]
    Zero { what: &'static str },
    #[error("{what} = {requested} exceeds the cap of {cap}")]
    TooLarge { what: &'static str, requested: u64, cap: u64 },
}

fn guard(what: &'static str, requested: u64, cap: u64) -> Result<(), EnumError> {
    if requested == 0 {
        return Err(EnumError::Zero { what });
    }
    if requested > cap {
        return Err(EnumError::TooLarge { what, requested, cap });
    }
    Ok(())
}

fn signed_tree(order: usize, edges: &[(u32, u32)], side: &[bool], flip: bool) -> RegionGraph {
    let labels: Vec<(Sign, u8)> =
        side.iter().take(order).map(|&s| (if s != flip { Sign::Minus } else { Sign::Plus }, 0)).collect();
    RegionGraph::from_labels(&labels, edges).normalized()
}

fn code(g: &RegionGraph, modulo_swap: bool) -> CanonicalCode {
    canonical_code(g, modulo_swap).expect("generated graphs are valid")
}

/// Balanced properly two-coloured trees on `2n` vertices, one per
/// isomorphism class, sorted by canonical code.
pub fn enum_equicolored_trees(n: usize, modulo_swap: bool) -> Result<Vec<RegionGraph>, EnumError> {
    enum_equicolored_trees_with(n, modulo_swap, &Limits::default())
}

pub fn enum_equicolored_trees_with(
    n: usize,
    modulo_swap: bool,
    limits: &Limits,
) -> Result<Vec<RegionGraph>, EnumError> {
    guard("n", n as u64, limits.max_tree_n as u64)?;
    let order = 2 * n;
    let mut out: Vec<(CanonicalCode, RegionGraph)> = Vec::new();
    for edges in FreeTrees::new(order) {
        let side = bipartition(order, &edges);
        if side.iter().filter(|&&s| s).count() != n {
            continue;
        }
        let g = signed_tree(order, &edges, &side, false);
        if modulo_swap {
            out.push((code(&g, true), g));
        } else {
            let swapped = g.swapped();
            let (c1, c2) = (code(&g, false), code(&swapped, false));
            if c1 != c2 {
                out.push((c2, swapped));
            }
            out.push((c1, g));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// Admissible sphere classes with at most `max_curves` curves.
pub fn enum_sphere_classes(
    max_curves: usize,
    modulo_swap: bool,
    limits: &Limits,
) -> Result<Vec<DividingSetClass>, EnumError> {
    guard("max curves", max_curves as u64, 2 * limits.max_tree_n as u64 - 1)?;
    let mut out = Vec::new();
    for n in (1..).take_while(|n| 2 * n - 1 <= max_curves) {
        out.extend(enum_equicolored_trees_with(n, modulo_swap, limits)?.into_iter().map(DividingSetClass::sphere));
    }
    Ok(out)
}

/// Torus classes with at most `max_curves` curves and slopes with
/// `p <= max_p`, one per isomorphism class, all admissible.
pub fn enum_torus_classes(
    max_curves: usize,
    max_p: u64,
    modulo_swap: bool,
) -> Result<Vec<DividingSetClass>, EnumError> {
    enum_torus_classes_with(max_curves, max_p, modulo_swap, &Limits::default())
}

pub fn enum_torus_classes_with(
    max_curves: usize,
    max_p: u64,
    modulo_swap: bool,
    limits: &Limits,
) -> Result<Vec<DividingSetClass>, EnumError> {
    guard("max curves", max_curves as u64, limits.max_curves as u64)?;
    guard("max slope", max_p, limits.max_slope)?;

    let flips: &[bool] = if modulo_swap { &[false] } else { &[false, true] };
    let mut genus_trees: BTreeMap<CanonicalCode, RegionGraph> = BTreeMap::new();
    for curves in 1..=max_curves {
        let order = curves + 1;
        for edges in FreeTrees::new(order) {
            let side = bipartition(order, &edges);
            for &flip in flips {
                let base = signed_tree(order, &edges, &side, flip);
                for v in 0..order {
                    let mut g = base.clone();
                    g.vertices[v].genus = 1;
                    if euler_pairing(&DividingSetClass::torus(g.clone(), None)) != 0 {
                        continue;
                    }
                    genus_trees.entry(code(&g, modulo_swap)).or_insert(g);
                }
            }
        }
    }

    let mut cycles: BTreeMap<CanonicalCode, RegionGraph> = BTreeMap::new();
    for order in (2..=max_curves).step_by(2) {
        for edges in FreeTrees::new(order) {
            let side = bipartition(order, &edges);
            if side.iter().filter(|&&s| s).count() * 2 != order {
                continue;
            }
            let dist = all_distances(order, &edges);
            for (u, row) in dist.iter().enumerate() {
                for (v, &d) in row.iter().enumerate().skip(u + 1) {
                    if d % 2 == 0 {
                        continue;
                    }
                    let mut with_cycle = edges.clone();
                    with_cycle.push((u as u32, v as u32));
                    for &flip in flips {
                        let g = signed_tree(order, &with_cycle, &side, flip);
                        cycles.entry(code(&g, modulo_swap)).or_insert(g);
                    }
                }
            }
        }
    }

    let slopes = Slope::all_up_to(max_p);
    let mut out: Vec<DividingSetClass> = genus_trees.into_values().map(|g| DividingSetClass::torus(g, None)).collect();
    for g in cycles.into_values() {
        out.extend(slopes.iter().map(|&s| DividingSetClass::torus(g.clone(), Some(s))));
    }
    out.sort_by_cached_key(|d| d.key(modulo_swap).expect("valid"));
    Ok(out)
}

fn all_distances(order: usize, edges: &[(u32, u32)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); order];
    for &(a, b) in edges {
        adj[a as usize].push(b as usize);
        adj[b as usize].push(a as usize);
    }
    (0..order)
        .map(|s| {
            let mut d = vec![usize::MAX; order];
            d[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if d[w] == usize::MAX {
                        d[w] = d[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}
