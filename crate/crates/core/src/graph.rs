//! Simple undirected graphs with positive rational edge weights.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::matrix::SymmetricMatrix;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} has non-positive weight")]
    NonPositiveWeight(usize, usize),
}

/// A simple undirected graph on vertices `0..n` with a positive rational
/// weight on every edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    adj: Vec<BTreeMap<usize, Rational>>,
    size: usize,
}

/// A graph carved out of a larger one, with `vertex_map[i]` the id in the
/// parent graph of local vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: WeightedGraph,
    pub vertex_map: Vec<usize>,
}

impl WeightedGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        WeightedGraph {
            adj: vec![BTreeMap::new(); n],
            size: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut g = Self::empty(n);
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    /// Unit weight on every listed edge.
    pub fn unit(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_edges(n, edges.iter().map(|&(u, v)| (u, v, Rational::from_integer(1.into()))))
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: Rational) -> Result<(), GraphError> {
        let order = self.order();
        for x in [u, v] {
            if x >= order {
                return Err(GraphError::VertexOutOfRange { vertex: x, order });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !w.is_positive() {
            return Err(GraphError::NonPositiveWeight(u.min(v), u.max(v)));
        }
        if self.adj[u].contains_key(&v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v, w.clone());
        self.adj[v].insert(u, w);
        self.size += 1;
        Ok(())
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeMap::new());
        self.adj.len() - 1
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeMap::len).collect()
    }

    /// Neighbours of `v` in increasing id order, with edge weights.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.adj[v].iter().map(|(&u, w)| (u, w))
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<&Rational> {
        self.adj.get(u)?.get(&v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.weight(u, v).is_some()
    }

    /// All edges `(u, v, w)` with `u < v`, sorted by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.range(u + 1..).map(move |(&v, w)| (u, v, w))
        })
    }

    /// `a_ij = w(ij)` for every edge and zero elsewhere.
    pub fn adjacency_matrix(&self) -> SymmetricMatrix {
        let n = self.order();
        let mut m = SymmetricMatrix::zeros(n);
        for (u, v, w) in self.edges() {
            m.set(u, v, w.clone());
        }
        m
    }

    /// Copy of the graph with every weight replaced by `w`.
    pub fn reweighted(&self, w: &Rational) -> Self {
        let mut g = self.clone();
        for row in &mut g.adj {
            for x in row.values_mut() {
                *x = w.clone();
            }
        }
        g
    }

    /// Copy of the graph with the weight of edge `{u, v}` replaced.
    pub fn with_weight(&self, u: usize, v: usize, w: Rational) -> Result<Self, GraphError> {
        if !w.is_positive() {
            return Err(GraphError::NonPositiveWeight(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        match g.adj.get_mut(u).and_then(|row| row.get_mut(&v)) {
            Some(x) => *x = w.clone(),
            None => return Err(GraphError::VertexOutOfRange { vertex: v, order: self.order() }),
        }
        *g.adj[v].get_mut(&u).expect("symmetric adjacency") = w;
        Ok(g)
    }

    /// The subgraph induced by `keep`. Local ids follow the order of `keep`.
    pub fn induced(&self, keep: &[usize]) -> Subgraph {
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let mut graph = Self::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for (u, w) in self.neighbors(v) {
                let j = local[u];
                if j != usize::MAX && i < j {
                    graph.add_edge(i, j, w.clone()).expect("induced edges are valid");
                }
            }
        }
        Subgraph {
            graph,
            vertex_map: keep.to_vec(),
        }
    }

    /// Deletes the given vertices, keeping the remaining ids in order.
    pub fn without(&self, removed: &[usize]) -> Subgraph {
        let keep: Vec<usize> = (0..self.order()).filter(|v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order());
        let mut g = Self::empty(self.order());
        for (u, v, w) in self.edges() {
            g.add_edge(perm[u], perm[v], w.clone()).expect("permutation is a bijection");
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.order();
        let mut g = self.clone();
        g.adj.extend((0..other.order()).map(|_| BTreeMap::new()));
        for (u, v, w) in other.edges() {
            g.add_edge(u + shift, v + shift, w.clone()).expect("disjoint vertex sets");
        }
        g
    }

    /// Connected components, each as an induced subgraph with increasing
    /// local ids. Components are ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Subgraph> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for (u, _) in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        members.push(u);
                        queue.push_back(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(self.induced(&members));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// All pendant vertices with their unique neighbour, by increasing id.
    pub fn pendants(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().filter_map(|(v, row)| {
            if row.len() == 1 {
                row.keys().next().map(|&u| (v, u))
            } else {
                None
            }
        })
    }

    /// The smallest-id pendant vertex `v` and its neighbour `u`.
    pub fn find_pendant(&self) -> Option<(usize, usize)> {
        self.pendants().next()
    }

    /// Every pair `(x, y)`, `x < y`, of pendant vertices sharing their neighbour.
    pub fn pendant_twins(&self) -> Vec<(usize, usize)> {
        let mut by_anchor: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, u) in self.pendants() {
            by_anchor.entry(u).or_default().push(v);
        }
        let mut out = Vec::new();
        for leaves in by_anchor.values() {
            for (i, &x) in leaves.iter().enumerate() {
                for &y in &leaves[i + 1..] {
                    out.push((x, y));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Lexicographically smallest pair of pendant twins.
    pub fn find_pendant_twins(&self) -> Option<(usize, usize)> {
        self.pendant_twins().into_iter().next()
    }

    pub fn has_pendant_twins(&self) -> bool {
        self.find_pendant_twins().is_some()
    }

    /// Sum of all weights; zero for an edgeless graph.
    pub fn total_weight(&self) -> Rational {
        self.edges().fold(Rational::zero(), |acc, (_, _, w)| acc + w)
    }
}
