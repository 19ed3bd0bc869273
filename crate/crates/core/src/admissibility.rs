//! Which dividing sets occur for a b-contact structure on S³, and which of
//! them leave room for a tight structure.
//!
//! The Euler class of any plane field on S³ vanishes, so a dividing set is
//! realised iff `χ(Z₊) = χ(Z₋)`. Tightness additionally forbids contractible
//! dividing curves, except that a connected dividing set on the sphere is
//! allowed.

use std::fmt;

use crate::surface::{region_euler, DividingSetClass, Manifold, SurfaceKind};

/// A yes/no answer with the witness that decided it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub reason: String,
}

impl Verdict {
    fn yes(reason: impl Into<String>) -> Self {
        Verdict { holds: true, reason: reason.into() }
    }

    fn no(reason: impl Into<String>) -> Self {
        Verdict { holds: false, reason: reason.into() }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", if self.holds { "yes" } else { "no" }, self.reason)
    }
}

/// `χ(Z₊) − χ(Z₋)`, read off the region graph.
pub fn euler_pairing(d: &DividingSetClass) -> i64 {
    d.graph
        .vertices
        .iter()
        .zip(d.graph.degrees())
        .map(|(v, deg)| v.sign.as_i8() as i64 * region_euler(v.genus, deg))
        .sum()
}

pub fn is_admissible(m: Manifold, d: &DividingSetClass) -> Verdict {
    if m.critical() != d.surface {
        return Verdict::no(format!("{} class on manifold {m}", d.surface));
    }
    match euler_pairing(d) {
        0 => Verdict::yes("χ(Z+) = χ(Z-)"),
        pairing => Verdict::no(format!("Euler obstruction: χ(Z+) - χ(Z-) = {pairing}, but the Euler class on S³ is 0")),
    }
}

pub fn is_tight_candidate(m: Manifold, d: &DividingSetClass) -> Verdict {
    let admissible = is_admissible(m, d);
    if !admissible.holds {
        return admissible;
    }
    let g = &d.graph;
    match d.surface {
        SurfaceKind::Sphere if g.edge_count() == 1 => Verdict::yes("connected dividing set on the sphere"),
        SurfaceKind::Sphere => {
            let (a, b) = g.edges[0];
            Verdict::no(format!("{} curves on the sphere; edge 0 ({a}-{b}) is a contractible curve", g.edge_count()))
        }
        SurfaceKind::Torus => match g.cycle_edges().iter().position(|on_cycle| !on_cycle) {
            None => Verdict::yes(format!("{} essential curves, none contractible", g.edge_count())),
            Some(k) => {
                let (a, b) = g.edges[k];
                Verdict::no(format!("edge {k} ({a}-{b}) is a contractible curve"))
            }
        },
    }
}
