//! Canonical labelling of small unweighted graphs.
//!
//! Vertices start in cells by decreasing degree. Cells are split by how many
//! neighbours each vertex has in every other cell until nothing changes; a
//! remaining non-singleton cell is broken by trying each of its vertices
//! first. Every leaf of that search is a labelling, and the one giving the
//! smallest sorted edge list wins. Two vertices with the same neighbourhood
//! give the same leaves, so only one of them is tried.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::WeightedGraph;

/// Sorted edge list of a graph under its canonical labelling. Equal forms
/// mean isomorphic underlying graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    /// The graph itself, unit weights.
    pub fn graph(&self) -> WeightedGraph {
        WeightedGraph::unit(self.order, &self.edges).expect("canonical edges are valid")
    }
}

type Partition = Vec<Vec<usize>>;

/// The canonical form of the underlying graph of `g` together with the
/// labelling that produces it: vertex `v` becomes `perm[v]`.
pub fn canonical_labeling(g: &WeightedGraph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    assert!(n <= 64, "canonical labelling supports at most 64 vertices");
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).fold(0u64, |m, (u, _)| m | 1 << u)).collect();

    let mut degrees: Vec<usize> = (0..n).map(|v| adj[v].count_ones() as usize).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees.dedup();
    let initial: Partition = degrees
        .iter()
        .map(|&d| (0..n).filter(|&v| adj[v].count_ones() as usize == d).collect())
        .collect();

    let mut best: Option<(Vec<(usize, usize)>, Vec<usize>)> = None;
    search(&adj, initial, &mut best);
    let (edges, perm) = best.unwrap_or_default();
    (CanonicalForm { order: n, edges }, perm)
}

pub fn canonical_form(g: &WeightedGraph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// `g` relabelled canonically, weights carried along.
pub fn canonicalize(g: &WeightedGraph) -> WeightedGraph {
    g.permuted(&canonical_labeling(g).1)
}

pub fn is_isomorphic(g: &WeightedGraph, h: &WeightedGraph) -> bool {
    canonical_form(g) == canonical_form(h)
}

fn search(adj: &[u64], partition: Partition, best: &mut Option<(Vec<(usize, usize)>, Vec<usize>)>) {
    let p = refine(adj, partition);
    let Some(t) = p.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; adj.len()];
        for (i, cell) in p.iter().enumerate() {
            perm[cell[0]] = i;
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            for v in u + 1..adj.len() {
                if row >> v & 1 == 1 {
                    let (a, b) = (perm[u], perm[v]);
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
        edges.sort_unstable();
        if best.as_ref().is_none_or(|(e, _)| edges < *e) {
            *best = Some((edges, perm));
        }
        return;
    };

    let cell = &p[t];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&w| twins(adj, v, w)) {
            continue;
        }
        tried.push(v);
        let mut next: Partition = Vec::with_capacity(p.len() + 1);
        next.extend(p[..t].iter().cloned());
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&x| x != v).collect());
        next.extend(p[t + 1..].iter().cloned());
        search(adj, next, best);
    }
}

fn twins(adj: &[u64], v: usize, w: usize) -> bool {
    adj[v] & !(1 << w) == adj[w] & !(1 << v)
}

/// Splits cells by neighbour counts into every cell until stable.
fn refine(adj: &[u64], mut p: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = p.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next: Partition = Vec::with_capacity(p.len());
        for cell in &p {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == p.len() {
            return next;
        }
        p = next;
    }
}
