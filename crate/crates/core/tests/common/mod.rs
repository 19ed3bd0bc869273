#![allow(dead_code)]

use bcontact::{RegionGraph, Sign};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random valid region graph on `order >= 2` vertices: a random tree, with
/// probability one half closed into a single even cycle, and with a single
/// genus label with probability one third.
pub fn random_graph<R: Rng>(rng: &mut R, order: usize) -> RegionGraph {
    let mut edges: Vec<(u32, u32)> = (1..order as u32).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut side = vec![false; order];
    for &(a, b) in &edges {
        side[b as usize] = !side[a as usize];
    }
    if rng.gen_bool(0.5) {
        let candidates: Vec<(u32, u32)> = (0..order as u32)
            .flat_map(|a| (a + 1..order as u32).map(move |b| (a, b)))
            .filter(|&(a, b)| side[a as usize] != side[b as usize])
            .collect();
        edges.push(*candidates.choose(rng).expect("order >= 2"));
    }
    let flip = rng.gen_bool(0.5);
    let genus_at = rng.gen_bool(1.0 / 3.0).then(|| rng.gen_range(0..order));
    let labels: Vec<(Sign, u8)> = (0..order)
        .map(|v| {
            let sign = if side[v] != flip { Sign::Minus } else { Sign::Plus };
            (sign, u8::from(genus_at == Some(v)))
        })
        .collect();
    let g = RegionGraph::from_labels(&labels, &edges);
    g.validate().expect("generator produces valid graphs");
    g
}

/// Relabels ids through a random permutation and shuffles vertex and edge
/// order.
pub fn scramble<R: Rng>(rng: &mut R, g: &RegionGraph) -> RegionGraph {
    let mut perm: Vec<u32> = (0..g.vertex_count() as u32).collect();
    perm.shuffle(rng);
    let ids: Vec<u32> = g.vertices.iter().map(|v| v.id).collect();
    let mut h = g.relabeled(|id| perm[ids.iter().position(|&x| x == id).unwrap()] + 100);
    h.vertices.shuffle(rng);
    h.edges.shuffle(rng);
    for e in &mut h.edges {
        if rng.gen_bool(0.5) {
            *e = (e.1, e.0);
        }
    }
    h
}

struct Labelled {
    sign: Vec<Sign>,
    genus: Vec<u8>,
    mult: Vec<Vec<u8>>,
}

fn labelled(g: &RegionGraph) -> Labelled {
    let n = g.vertex_count();
    let index = |id: u32| g.vertices.iter().position(|v| v.id == id).unwrap();
    let mut mult = vec![vec![0u8; n]; n];
    for &(a, b) in &g.edges {
        mult[index(a)][index(b)] += 1;
        mult[index(b)][index(a)] += 1;
    }
    Labelled {
        sign: g.vertices.iter().map(|v| v.sign).collect(),
        genus: g.vertices.iter().map(|v| v.genus).collect(),
        mult,
    }
}

/// Exhaustive search over vertex bijections, extending a partial map one
/// vertex at a time and checking every constraint among mapped vertices.
pub fn brute_isomorphic(a: &RegionGraph, b: &RegionGraph, modulo_swap: bool) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (la, lb) = (labelled(a), labelled(b));
    let flips: &[bool] = if modulo_swap { &[false, true] } else { &[false] };
    flips.iter().any(|&flip| {
        let mut map = Vec::new();
        let mut used = vec![false; a.vertex_count()];
        extend(&la, &lb, flip, &mut map, &mut used)
    })
}

fn extend(a: &Labelled, b: &Labelled, flip: bool, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = map.len();
    if i == a.sign.len() {
        return true;
    }
    for j in 0..b.sign.len() {
        if used[j] {
            continue;
        }
        let sign_ok = if flip { a.sign[i] != b.sign[j] } else { a.sign[i] == b.sign[j] };
        if !sign_ok || a.genus[i] != b.genus[j] {
            continue;
        }
        if (0..i).any(|k| a.mult[i][k] != b.mult[j][map[k]]) {
            continue;
        }
        used[j] = true;
        map.push(j);
        if extend(a, b, flip, map, used) {
            return true;
        }
        map.pop();
        used[j] = false;
    }
    false
}

/// Applies one random structural edit that may break any invariant.
pub fn mutate<R: Rng>(rng: &mut R, g: &RegionGraph) -> RegionGraph {
    let mut g = g.normalized();
    let n = g.vertex_count() as u32;
    match rng.gen_range(0..7) {
        0 => {
            let at = rng.gen_range(0..n);
            g.vertices.push(bcontact::Vertex::new(n, Sign::Plus, 0));
            g.edges.push((at, n));
        }
        1 => {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            g.edges.push((a, b));
        }
        2 if !g.edges.is_empty() => {
            let i = rng.gen_range(0..g.edges.len());
            g.edges.swap_remove(i);
        }
        3 if !g.edges.is_empty() => {
            let i = rng.gen_range(0..g.edges.len());
            let (a, b) = g.edges.swap_remove(i);
            g.vertices.push(bcontact::Vertex::new(n, Sign::Minus, 0));
            g.edges.extend([(a, n), (n, b)]);
        }
        4 => {
            let v = rng.gen_range(0..n as usize);
            g.vertices[v].genus ^= 1;
        }
        5 => {
            let v = rng.gen_range(0..n as usize);
            g.vertices[v].sign = g.vertices[v].sign.flip();
        }
        _ if n > 2 => {
            let v = rng.gen_range(0..n);
            g.vertices.retain(|x| x.id != v);
            g.edges.retain(|&(a, b)| a != v && b != v);
        }
        _ => {}
    }
    g
}

/// Rebuilds a valid class on `surface` from an arbitrary labelled multigraph:
/// reconnects components, keeps a spanning tree plus at most one even-cycle
/// edge (torus only), recolours by bipartition and fixes genus labels.
pub fn repair<R: Rng>(rng: &mut R, surface: bcontact::SurfaceKind, g: &RegionGraph) -> bcontact::DividingSetClass {
    use bcontact::{DividingSetClass, Slope, SurfaceKind};
    let ids: Vec<u32> = g.vertices.iter().map(|v| v.id).collect();
    let mut n = ids.len().max(1);
    let index = |id: u32| ids.iter().position(|&x| x == id);
    let mut edges: Vec<(usize, usize)> =
        g.edges.iter().filter_map(|&(a, b)| Some((index(a)?, index(b)?))).filter(|&(a, b)| a != b).collect();
    if n == 1 {
        n = 2;
        edges.push((0, 1));
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    let mut tree = Vec::new();
    let mut spare = Vec::new();
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            spare.push((a, b));
        } else {
            parent[ra] = rb;
            tree.push((a, b));
        }
    }
    for v in 1..n {
        let (r0, rv) = (find(&mut parent, 0), find(&mut parent, v));
        if r0 != rv {
            parent[rv] = r0;
            tree.push((rng.gen_range(0..v), v));
        }
    }
    let mut side = vec![None; n];
    side[0] = Some(false);
    while side.iter().any(Option::is_none) {
        for &(a, b) in &tree {
            match (side[a], side[b]) {
                (Some(s), None) => side[b] = Some(!s),
                (None, Some(s)) => side[a] = Some(!s),
                _ => {}
            }
        }
    }
    let side: Vec<bool> = side.into_iter().map(Option::unwrap).collect();
    let mut all = tree;
    let extra = spare.into_iter().find(|&(a, b)| side[a] != side[b]);
    if surface == SurfaceKind::Torus {
        all.extend(extra);
    }
    let is_tree = all.len() == n - 1;
    let keep_genus = g.vertices.iter().position(|v| v.genus > 0).filter(|&i| i < n);
    let genus_at = match (surface, is_tree) {
        (SurfaceKind::Torus, true) => Some(keep_genus.unwrap_or_else(|| rng.gen_range(0..n))),
        _ => None,
    };
    let flip = rng.gen_bool(0.5);
    let labels: Vec<(Sign, u8)> = (0..n)
        .map(|v| (if side[v] != flip { Sign::Minus } else { Sign::Plus }, u8::from(genus_at == Some(v))))
        .collect();
    let edges: Vec<(u32, u32)> = all.iter().map(|&(a, b)| (a as u32, b as u32)).collect();
    let graph = RegionGraph::from_labels(&labels, &edges);
    let slope = (!is_tree).then(|| {
        let all = Slope::all_up_to(20);
        all[rng.gen_range(0..all.len())]
    });
    DividingSetClass::new(surface, graph, slope)
}

/// Σ over regions of 2 − 2g − (boundary curves), straight from the labels.
pub fn euler_by_hand(g: &RegionGraph) -> i64 {
    g.vertices
        .iter()
        .map(|v| {
            let boundary = g.edges.iter().filter(|&&(a, b)| a == v.id || b == v.id).count() as i64;
            2 - 2 * i64::from(v.genus) - boundary
        })
        .sum()
}
