mod common;

use bcontact::{are_isomorphic, canonical_code, RegionGraph, Sign};
use common::{brute_isomorphic, random_graph, scramble};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use Sign::{Minus as M, Plus as P};

fn path(signs: &[Sign]) -> RegionGraph {
    let labels: Vec<_> = signs.iter().map(|&s| (s, 0)).collect();
    let edges: Vec<_> = (1..signs.len() as u32).map(|i| (i - 1, i)).collect();
    RegionGraph::from_labels(&labels, &edges)
}

#[test]
fn code_is_invariant_under_relabelling() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..40 {
        let order = rng.gen_range(2..=12);
        let g = random_graph(&mut rng, order);
        for swap in [false, true] {
            let code = canonical_code(&g, swap).unwrap();
            for _ in 0..100 {
                assert_eq!(canonical_code(&scramble(&mut rng, &g), swap).unwrap(), code);
            }
        }
    }
}

#[test]
fn swap_mode_identifies_negation() {
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..200 {
        let order = rng.gen_range(2..=10);
        let g = random_graph(&mut rng, order);
        assert_eq!(canonical_code(&g, true).unwrap(), canonical_code(&g.swapped(), true).unwrap());
    }
}

#[test]
fn agrees_with_brute_force_up_to_eight_vertices() {
    let mut rng = StdRng::seed_from_u64(9);
    let mut positives = 0;
    for _ in 0..3000 {
        let order = rng.gen_range(2..=8);
        let a = random_graph(&mut rng, order);
        // small sizes collide often, which exercises the positive case
        let b = if rng.gen_bool(0.2) { scramble(&mut rng, &a) } else { random_graph(&mut rng, order) };
        for swap in [false, true] {
            let expected = brute_isomorphic(&a, &b, swap);
            positives += usize::from(expected);
            assert_eq!(are_isomorphic(&a, &b, swap).unwrap(), expected, "{a:?} vs {b:?} swap={swap}");
        }
    }
    assert!(positives > 500, "too few isomorphic pairs sampled: {positives}");
}

#[test]
fn isomorphism_is_an_equivalence() {
    let mut rng = StdRng::seed_from_u64(10);
    for _ in 0..500 {
        let order = rng.gen_range(2..=5);
        let [a, b, c] = [(); 3].map(|_| random_graph(&mut rng, order));
        for swap in [false, true] {
            let iso = |x: &RegionGraph, y: &RegionGraph| are_isomorphic(x, y, swap).unwrap();
            assert!(iso(&a, &a));
            assert_eq!(iso(&a, &b), iso(&b, &a));
            if iso(&a, &b) && iso(&b, &c) {
                assert!(iso(&a, &c));
            }
        }
    }
}

#[test]
fn six_vertex_path_and_double_star_differ() {
    let p6 = path(&[P, M, P, M, P, M]);
    // centres 0 (+) and 1 (-), each with two leaves
    let double_star = RegionGraph::from_labels(
        &[(P, 0), (M, 0), (M, 0), (M, 0), (P, 0), (P, 0)],
        &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)],
    );
    for swap in [false, true] {
        assert!(!brute_isomorphic(&p6, &double_star, swap));
        assert!(!are_isomorphic(&p6, &double_star, swap).unwrap());
    }
}

#[test]
fn path_and_star_on_four_vertices() {
    let p4 = path(&[P, M, P, M]);
    let star = RegionGraph::from_labels(&[(P, 0), (M, 0), (M, 0), (M, 0)], &[(0, 1), (0, 2), (0, 3)]);
    assert!(!brute_isomorphic(&p4, &star, true));
    assert_ne!(canonical_code(&p4, true).unwrap(), canonical_code(&star, true).unwrap());
}

#[test]
fn highly_symmetric_graphs_stay_fast() {
    // spider with nine arms of length two: 9! leaves without orbit pruning
    let mut labels = vec![(P, 0)];
    let mut edges = Vec::new();
    for arm in 0..9u32 {
        labels.push((M, 0));
        labels.push((P, 0));
        edges.push((0, 1 + 2 * arm));
        edges.push((1 + 2 * arm, 2 + 2 * arm));
    }
    let spider = RegionGraph::from_labels(&labels, &edges);
    let start = std::time::Instant::now();
    let code = canonical_code(&spider, false).unwrap();
    let reversed = spider.relabeled(|id| 18 - id);
    assert_eq!(canonical_code(&reversed, false).unwrap(), code);
    assert!(start.elapsed().as_secs() < 10);
}

proptest! {
    #[test]
    fn proper_colouring_gives_even_cycles(seed in any::<u64>(), order in 2usize..=14) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(&mut rng, order);
        let on_cycle = g.cycle_edges().into_iter().filter(|&c| c).count();
        prop_assert_eq!(on_cycle % 2, 0);
        prop_assert_eq!(on_cycle == 0, g.is_tree());
    }
}
