//! Unlabelled free trees, one per isomorphism class, generated as canonical
//! level sequences (Wright, Richmond, Odlyzko and McKay). Each tree is rooted
//! at its centre; the generator walks the canonical sequences in constant
//! amortised time without any isomorphism filtering.

/// Iterator over the free trees with `order` vertices, as edge lists on
/// `0..order`.
pub struct FreeTrees {
    order: usize,
    pending: Option<Vec<usize>>,
    single_done: bool,
}

impl FreeTrees {
    pub fn new(order: usize) -> Self {
        let pending = (order >= 2).then(|| (0..=order / 2).chain(1..order.div_ceil(2)).collect());
        FreeTrees { order, pending, single_done: order != 1 }
    }
}

impl Iterator for FreeTrees {
    type Item = Vec<(u32, u32)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.order == 1 {
            let first = !self.single_done;
            self.single_done = true;
            return first.then(Vec::new);
        }
        let layout = self.pending.take()?;
        let tree = next_tree(layout)?;
        self.pending = next_rooted_tree(&tree, None);
        Some(layout_to_edges(&tree))
    }
}

/// Splits a level sequence into the first subtree of the root (levels
/// shifted down by one) and the remainder (including the root).
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout.iter().enumerate().filter(|(_, &l)| l == 1).nth(1).map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

fn next_rooted_tree(predecessor: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = predecessor.len() - 1;
            while predecessor[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while predecessor[q] != predecessor[p] - 1 {
        q -= 1;
    }
    let mut result = predecessor.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let left_bigger = left.len() > rest.len() || (left.len() == rest.len() && left > rest);
    if rest_height > left_height || (rest_height == left_height && !left_bigger) {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (offset, level) in (1..=height + 1).enumerate() {
            next[len - (height + 1) + offset] = level;
        }
    }
    Some(next)
}

fn layout_to_edges(layout: &[usize]) -> Vec<(u32, u32)> {
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if layout[top] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&parent) = stack.last() {
            edges.push((parent as u32, i as u32));
        }
        stack.push(i);
    }
    edges
}

/// Side of each vertex in the unique bipartition of a tree, with vertex 0 on
/// side `false`.
pub fn bipartition(order: usize, edges: &[(u32, u32)]) -> Vec<bool> {
    let mut adj = vec![Vec::new(); order];
    for &(a, b) in edges {
        adj[a as usize].push(b as usize);
        adj[b as usize].push(a as usize);
    }
    let mut side = vec![None; order];
    let mut stack = vec![0];
    side[0] = Some(false);
    while let Some(v) = stack.pop() {
        let s = side[v].expect("visited");
        for &w in &adj[v] {
            if side[w].is_none() {
                side[w] = Some(!s);
                stack.push(w);
            }
        }
    }
    side.into_iter().map(|s| s.unwrap_or(false)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_tree_counts() {
        // OEIS A000055 for orders 1..=12
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(FreeTrees::new(i + 1).count(), count, "order {}", i + 1);
        }
    }

    #[test]
    fn every_output_is_a_spanning_tree() {
        for order in 2..=9 {
            for edges in FreeTrees::new(order) {
                assert_eq!(edges.len(), order - 1);
                let side = bipartition(order, &edges);
                assert!(edges.iter().all(|&(a, b)| side[a as usize] != side[b as usize]));
            }
        }
    }
}
