#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sweepkit::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn product(g: &Graph, h: &Graph) -> Graph {
    Graph::cartesian_product(g, h).unwrap()
}

pub fn k(n: usize) -> Graph {
    Graph::complete(n).unwrap()
}

pub fn p(n: usize) -> Graph {
    Graph::path(n).unwrap()
}

/// Erdős–Rényi `G(n, prob)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, prob: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// A random spanning tree plus up to `extra` further edges, with shuffled
/// labels.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, extra: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !edges.contains(&(u, v)))
        .collect();
    missing.shuffle(rng);
    edges.extend(missing.into_iter().take(extra));
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, &edges).unwrap().relabel(&perm).unwrap()
}

/// Connected graphs with at most `max_edges` edges.
pub fn sparse_connected_corpus(seed: u64, count: usize, max_edges: usize) -> Vec<Graph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_edges + 1);
            let extra = rng.gen_range(0..=max_edges + 1 - n);
            random_connected_graph(&mut rng, n, extra)
        })
        .collect()
}
