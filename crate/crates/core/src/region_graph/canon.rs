//! Canonical labelling of region graphs.
//!
//! Vertices are first coloured by (sign, genus, degree), the colouring is
//! refined until equitable, and then non-singleton cells are individualised
//! one vertex at a time. Every leaf of that search tree is a total order of
//! the vertices; the canonical code is the lexicographically smallest
//! encoding over all leaves. Automorphisms found on the way (two leaves with
//! equal encodings) prune sibling branches in the same orbit.

use std::fmt;

use super::{Dense, RegionGraph, Sign, Violation};

/// Byte string identifying an isomorphism class of region graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

const TAG_SIGNED: u8 = b'P';
const TAG_SWAP: u8 = b'S';

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<CanonicalCode> {
        if !s.len().is_multiple_of(2) {
            return None;
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok())
            .collect::<Option<Vec<u8>>>()
            .map(CanonicalCode)
    }

    /// `true` when the code was computed with signs identified up to a swap.
    pub fn is_modulo_swap(&self) -> bool {
        self.0.first() == Some(&TAG_SWAP)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Canonical code of `g`. With `modulo_swap` the code is also invariant under
/// negating every sign.
pub fn canonical_code(g: &RegionGraph, modulo_swap: bool) -> Result<CanonicalCode, Violation> {
    g.validate()?;
    let dense = g.dense();
    let mut code = if modulo_swap {
        let direct = min_encoding(&dense);
        let mut flipped = dense;
        flipped.sign.iter_mut().for_each(|s| *s = s.flip());
        direct.min(min_encoding(&flipped))
    } else {
        min_encoding(&dense)
    };
    code.insert(0, if modulo_swap { TAG_SWAP } else { TAG_SIGNED });
    Ok(CanonicalCode(code))
}

pub fn are_isomorphic(a: &RegionGraph, b: &RegionGraph, modulo_swap: bool) -> Result<bool, Violation> {
    a.validate()?;
    b.validate()?;
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_code(a, modulo_swap)? == canonical_code(b, modulo_swap)?)
}

fn min_encoding(g: &Dense) -> Vec<u8> {
    let initial: Vec<(u8, u8, usize)> = (0..g.len()).map(|v| (sign_byte(g.sign[v]), g.genus[v], g.degree[v])).collect();
    let mut colors = rank(&initial);
    refine(g, &mut colors);
    let mut search = Search { g, best: None, automorphisms: Vec::new() };
    search.explore(&mut Vec::new(), colors);
    search.best.expect("search visits at least one leaf").0
}

fn sign_byte(s: Sign) -> u8 {
    match s {
        Sign::Plus => 1,
        Sign::Minus => 2,
    }
}

/// Replaces each key by its rank among the distinct keys.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter().map(|k| distinct.binary_search(k).expect("key present") as u32).collect()
}

fn count_colors(colors: &[u32]) -> usize {
    colors.iter().max().map_or(0, |&m| m as usize + 1)
}

/// Colour refinement to the coarsest equitable partition finer than `colors`.
fn refine(g: &Dense, colors: &mut Vec<u32>) {
    let n = g.len();
    loop {
        let before = count_colors(colors);
        let signatures: Vec<(u32, Vec<(u32, u8)>)> = (0..n)
            .map(|v| {
                let mut nbrs: Vec<(u32, u8)> =
                    (0..n).filter(|&u| g.mult[v][u] > 0).map(|u| (colors[u], g.mult[v][u])).collect();
                nbrs.sort_unstable();
                (colors[v], nbrs)
            })
            .collect();
        *colors = rank(&signatures);
        if count_colors(colors) == before {
            return;
        }
    }
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let c = colors[v];
    let keys: Vec<u64> =
        colors.iter().enumerate().map(|(u, &cu)| 2 * cu as u64 + u64::from(cu == c && u != v)).collect();
    rank(&keys)
}

struct Search<'a> {
    g: &'a Dense,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn explore(&mut self, prefix: &mut Vec<usize>, colors: Vec<u32>) {
        let n = self.g.len();
        if count_colors(&colors) == n {
            self.visit_leaf(&colors);
            return;
        }
        let target = (0..n as u32)
            .find(|&c| colors.iter().filter(|&&x| x == c).count() > 1)
            .expect("some cell is not a singleton");
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() {
                let orbits = self.orbits_fixing(prefix);
                if tried.iter().any(|&w| find(&orbits, w) == find(&orbits, v)) {
                    continue;
                }
            }
            let mut child = individualize(&colors, v);
            refine(self.g, &mut child);
            prefix.push(v);
            self.explore(prefix, child);
            prefix.pop();
            tried.push(v);
        }
    }

    fn visit_leaf(&mut self, colors: &[u32]) {
        let n = self.g.len();
        let mut order = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        let code = encode(self.g, &order);
        match &self.best {
            Some((best, best_order)) if *best == code => {
                let mut perm = vec![0usize; n];
                for i in 0..n {
                    perm[order[i]] = best_order[i];
                }
                if perm.iter().enumerate().any(|(i, &p)| i != p) {
                    self.automorphisms.push(perm);
                }
            }
            Some((best, _)) if *best < code => {}
            _ => self.best = Some((code, order)),
        }
    }

    /// Union-find parents for the orbits of the group generated by the known
    /// automorphisms that fix every vertex of `prefix`.
    fn orbits_fixing(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.g.len()).collect();
        for perm in &self.automorphisms {
            if prefix.iter().all(|&p| perm[p] == p) {
                for (i, &j) in perm.iter().enumerate() {
                    let (a, b) = (find(&parent, i), find(&parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        parent
    }
}

fn find(parent: &[usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

fn encode(g: &Dense, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(1 + 2 * n + n * (n - 1) / 2);
    out.push(n as u8);
    for &v in order {
        out.push(sign_byte(g.sign[v]));
        out.push(g.genus[v]);
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(g.mult[order[i]][order[j]]);
        }
    }
    out
}
