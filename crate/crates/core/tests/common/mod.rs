#![allow(dead_code)]

use bicyclic_core::rational::{frac, int};
use bicyclic_core::structure::{BaseFamily, BicyclicBase};
use bicyclic_core::{Rational, WeightedGraph};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `p/q` with `1 <= p, q <= 9`.
pub fn rational(rng: &mut StdRng) -> Rational {
    frac(rng.gen_range(1..=9), rng.gen_range(1..=9))
}

/// One of 1, 1/2, 2, 3.
pub fn small_weight(rng: &mut StdRng) -> Rational {
    [int(1), frac(1, 2), int(2), int(3)].choose(rng).unwrap().clone()
}

pub fn permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// A random spanning tree plus `extra` further edges where possible.
pub fn connected(rng: &mut StdRng, n: usize, extra: usize, weight: fn(&mut StdRng) -> Rational) -> WeightedGraph {
    let mut g = WeightedGraph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v, weight(rng)).unwrap();
    }
    let mut tries = 0;
    let mut added = 0;
    while added < extra && tries < 50 {
        tries += 1;
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v, weight(rng)).unwrap();
            added += 1;
        }
    }
    g.permuted(&permutation(rng, n))
}

/// A weighted base of order at most `max_base` with `1..=max_leaves` trees
/// grown on it, vertices shuffled.
pub fn bicyclic_with_pendants(rng: &mut StdRng, max_base: usize, max_leaves: usize) -> WeightedGraph {
    let families = BaseFamily::all_up_to(max_base);
    let family = *families.choose(rng).unwrap();
    let weights: Vec<Rational> = (0..family.size()).map(|_| small_weight(rng)).collect();
    let mut g = BicyclicBase::from_flat(family, &weights).unwrap().to_graph();
    for _ in 0..rng.gen_range(1..=max_leaves) {
        let at = rng.gen_range(0..g.order());
        let leaf = g.add_vertex();
        g.add_edge(at, leaf, small_weight(rng)).unwrap();
    }
    let n = g.order();
    g.permuted(&permutation(rng, n))
}

pub fn grid(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| int(v)).collect()
}

/// Every assignment of `grid` values to `len` slots, first slot slowest.
pub fn assignments(grid: &[Rational], len: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                grid.iter().map(move |g| {
                    let mut p = prefix.clone();
                    p.push(g.clone());
                    p
                })
            })
            .collect();
    }
    out
}
