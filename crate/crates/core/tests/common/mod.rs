#![allow(dead_code)]

use eqdom::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 20_240_611;

/// 50 seeded G(n, p) graphs with 1 ≤ n ≤ 7, not necessarily connected.
pub fn small_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..50)
        .map(|_| {
            let n = rng.gen_range(1..=7);
            let p = rng.gen_range(0.15..0.85);
            Graph::random(n, p, &mut rng).unwrap()
        })
        .collect()
}

/// Every labeled graph on `n` vertices, one per edge subset.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

use eqdom::{Family, GraphClassSpec};

/// Every instance for which an explicit coloring is offered, up to desk-scale sizes.
pub fn construction_grid() -> Vec<GraphClassSpec> {
    let mut grid = Vec::new();
    let plain = |f| GraphClassSpec::new(f);
    let co = |f| GraphClassSpec::complemented(f);
    grid.extend((1..=30).map(|n| plain(Family::Path(n))));
    grid.extend((6..=30).map(|n| plain(Family::Cycle(n))));
    grid.extend((1..=12).map(|n| plain(Family::Complete(n))));
    for a in 1..=10 {
        grid.extend((1..=10).map(|b| plain(Family::CompleteBipartite(a, b))));
    }
    for a in 2..=10 {
        grid.extend((2..=10).map(|b| plain(Family::BiStar(a, b))));
        grid.extend((2..=10).map(|b| co(Family::BiStar(a, b))));
    }
    grid.extend((3..=30).map(|t| plain(Family::Wheel(t))));
    grid.extend((5..=20).map(|t| plain(Family::Helm(t))));
    grid.extend((5..=30).map(|n| co(Family::Path(n))));
    grid.extend((5..=30).map(|n| co(Family::Cycle(n))));
    grid.extend((5..=30).map(|t| co(Family::Wheel(t))));
    grid.extend((4..=20).map(|t| co(Family::Helm(t))));
    grid
}
