//! Brute-force count of balanced two-coloured trees, independent of the
//! level-sequence generator and of the refinement-based canonical labelling.
//!
//! Every labelled tree on `2n` vertices is decoded from its Prüfer sequence.
//! Labels `0..n` are positive and `n..2n` negative, so a labelled tree
//! survives iff every edge joins the two halves; every balanced signed tree
//! has such a labelling. Survivors are quotiented by isomorphism through a
//! centre-rooted AHU encoding.

use std::collections::HashSet;

use rayon::prelude::*;

use super::EnumError;

/// Largest `n` the oracle accepts (`2n <= 10` vertices).
pub const ORACLE_MAX_N: usize = 5;

const MAX_ORDER: usize = 2 * ORACLE_MAX_N;

pub fn oracle_count_trees(n: usize, modulo_swap: bool) -> Result<u64, EnumError> {
    if n == 0 {
        return Err(EnumError::Zero { what: "n" });
    }
    if n > ORACLE_MAX_N {
        return Err(EnumError::TooLarge { what: "oracle n", requested: n as u64, cap: ORACLE_MAX_N as u64 });
    }
    let order = 2 * n;
    let len = order - 2;
    if len == 0 {
        let mut classes = HashSet::new();
        classes.insert(encode_tree(order, n, &[(0, 1)], modulo_swap));
        return Ok(classes.len() as u64);
    }
    let classes: HashSet<Vec<u8>> = (0..order)
        .into_par_iter()
        .map(|first| {
            let mut local = HashSet::new();
            let mut seq = [0usize; MAX_ORDER];
            seq[0] = first;
            let mut edges = [(0usize, 0usize); MAX_ORDER];
            loop {
                if decode_crossing(order, n, &seq[..len], &mut edges) {
                    local.insert(encode_tree(order, n, &edges[..order - 1], modulo_swap));
                }
                // odometer over positions 1..len
                let mut i = len;
                loop {
                    if i == 1 {
                        return local;
                    }
                    i -= 1;
                    seq[i] += 1;
                    if seq[i] < order {
                        break;
                    }
                    seq[i] = 0;
                }
            }
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(classes.len() as u64)
}

/// Decodes a Prüfer sequence into `edges`; returns `false` as soon as an edge
/// joins two labels of the same half.
fn decode_crossing(order: usize, n: usize, seq: &[usize], edges: &mut [(usize, usize)]) -> bool {
    let mut degree = [1usize; MAX_ORDER];
    for &a in seq {
        degree[a] += 1;
    }
    for (k, &a) in seq.iter().enumerate() {
        let leaf = (0..order).find(|&v| degree[v] == 1).expect("a leaf exists");
        if (leaf < n) == (a < n) {
            return false;
        }
        edges[k] = (leaf, a);
        degree[leaf] = 0;
        degree[a] -= 1;
    }
    let mut rest = (0..order).filter(|&v| degree[v] == 1);
    let (u, v) = (rest.next().expect("two left"), rest.next().expect("two left"));
    if (u < n) == (v < n) {
        return false;
    }
    edges[order - 2] = (u, v);
    true
}

fn encode_tree(order: usize, n: usize, edges: &[(usize, usize)], modulo_swap: bool) -> Vec<u8> {
    let mut adj = vec![Vec::new(); order];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let positive: Vec<bool> = (0..order).map(|v| v < n).collect();
    let direct = centred_encoding(&adj, &positive);
    if modulo_swap {
        let flipped: Vec<bool> = positive.iter().map(|p| !p).collect();
        direct.min(centred_encoding(&adj, &flipped))
    } else {
        direct
    }
}

fn centres(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

fn rooted(adj: &[Vec<usize>], positive: &[bool], v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> =
        adj[v].iter().filter(|&&w| w != parent).map(|&w| rooted(adj, positive, w, v)).collect();
    children.sort();
    let mut out = vec![b'(', if positive[v] { b'+' } else { b'-' }];
    children.into_iter().for_each(|c| out.extend(c));
    out.push(b')');
    out
}

fn centred_encoding(adj: &[Vec<usize>], positive: &[bool]) -> Vec<u8> {
    match centres(adj).as_slice() {
        &[c] => rooted(adj, positive, c, usize::MAX),
        &[a, b] => {
            let mut halves = [rooted(adj, positive, a, b), rooted(adj, positive, b, a)];
            halves.sort();
            let mut out = vec![b'='];
            out.extend_from_slice(&halves[0]);
            out.extend_from_slice(&halves[1]);
            out
        }
        other => unreachable!("a tree has one or two centres, got {}", other.len()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_counts() {
        assert_eq!(oracle_count_trees(1, false).unwrap(), 1);
        assert_eq!(oracle_count_trees(2, false).unwrap(), 1);
        assert_eq!(oracle_count_trees(3, false).unwrap(), 4);
        assert_eq!(oracle_count_trees(3, true).unwrap(), 3);
    }

    #[test]
    fn refuses_large_n() {
        assert!(matches!(oracle_count_trees(6, false), Err(EnumError::TooLarge { .. })));
        assert!(matches!(oracle_count_trees(0, false), Err(EnumError::Zero { .. })));
    }
}
