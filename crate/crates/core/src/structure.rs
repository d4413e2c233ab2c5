//! Bicyclic graphs and their pendant-free bases.
//!
//! A connected graph with one more edge than vertices peels, by repeatedly
//! deleting degree-one vertices, down to a unique base of minimum degree two.
//! That base is either an ∞-graph `infinity(p, l, q)`, two cycles `C^p` and
//! `C^q` joined by a path on `l` vertices (`l = 1` means they share a
//! vertex), or a θ-graph `theta(p, l, q)`, two vertices joined by three
//! internally disjoint paths with `p`, `l` and `q` interior vertices.
//!
//! Edge weights are labelled as follows.
//!
//! * ∞: `a_1..a_p` around `C^p` starting at its attachment vertex and leaving
//!   towards the smaller-id neighbour, `c_1..c_{l-1}` along the connecting
//!   path starting from the `C^p` side, `b_1..b_q` around `C^q` in the same
//!   way. `p <= q`.
//! * θ: the three paths run from `u` (the branch vertex with smaller id) to
//!   `v` and carry `b_1..b_{l+1}`, `a_1..a_{p+1}`, `c_1..c_{q+1}`, with
//!   `l <= p <= q`.
//!
//! Ties between equally long cycles or paths are broken by the
//! lexicographically smaller weight sequence, then by the smallest vertex id.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::graph::WeightedGraph;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph is not bicyclic (connected with one more edge than vertices)")]
    NotBicyclic,
    #[error("graph is not a pendant-free bicyclic base")]
    NotABase,
    #[error("invalid family {0}")]
    InvalidFamily(BaseFamily),
    #[error("weight sequence `{path}` has length {got}, expected {expected}")]
    WeightCount { path: char, got: usize, expected: usize },
    #[error("cannot parse family `{0}`")]
    Parse(alloc::string::String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseKind {
    Infinity,
    Theta,
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseKind::Infinity => "infinity",
            BaseKind::Theta => "theta",
        })
    }
}

/// Shape of a base, without weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BaseFamily {
    pub kind: BaseKind,
    pub p: usize,
    pub l: usize,
    pub q: usize,
}

impl BaseFamily {
    pub fn infinity(p: usize, l: usize, q: usize) -> Self {
        BaseFamily { kind: BaseKind::Infinity, p, l, q }
    }

    pub fn theta(p: usize, l: usize, q: usize) -> Self {
        BaseFamily { kind: BaseKind::Theta, p, l, q }
    }

    /// Shape constraints: `p, q >= 3, l >= 1` for ∞; at most one zero for θ.
    pub fn is_valid(&self) -> bool {
        match self.kind {
            BaseKind::Infinity => self.p >= 3 && self.q >= 3 && self.l >= 1,
            BaseKind::Theta => [self.p, self.l, self.q].iter().filter(|&&x| x == 0).count() <= 1,
        }
    }

    /// Valid and in the canonical parameter order used by classification.
    pub fn is_normalized(&self) -> bool {
        self.is_valid()
            && match self.kind {
                BaseKind::Infinity => self.p <= self.q,
                BaseKind::Theta => self.l <= self.p && self.p <= self.q,
            }
    }

    /// Number of vertices of the base.
    pub fn order(&self) -> usize {
        match self.kind {
            BaseKind::Infinity => self.p + self.q + self.l - 2,
            BaseKind::Theta => self.p + self.l + self.q + 2,
        }
    }

    /// Lengths of the `a`, `b`, `c` weight sequences.
    pub fn sequence_lengths(&self) -> [usize; 3] {
        match self.kind {
            BaseKind::Infinity => [self.p, self.q, self.l - 1],
            BaseKind::Theta => [self.p + 1, self.l + 1, self.q + 1],
        }
    }

    /// Number of edges, always `order() + 1`.
    pub fn size(&self) -> usize {
        self.sequence_lengths().iter().sum()
    }

    /// Every normalised family whose base has at most `max_order` vertices.
    pub fn all_up_to(max_order: usize) -> Vec<BaseFamily> {
        let mut out = Vec::new();
        for p in 3..=max_order {
            for q in p..=max_order {
                for l in 1..=max_order {
                    let f = BaseFamily::infinity(p, l, q);
                    if f.order() <= max_order {
                        out.push(f);
                    }
                }
            }
        }
        for l in 0..=max_order {
            for p in l..=max_order {
                for q in p..=max_order {
                    let f = BaseFamily::theta(p, l, q);
                    if f.is_valid() && f.order() <= max_order {
                        out.push(f);
                    }
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for BaseFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{},{})", self.kind, self.p, self.l, self.q)
    }
}

impl FromStr for BaseFamily {
    type Err = StructureError;

    /// Accepts `theta(p,l,q)` / `infinity(p,l,q)`; `inf` and `∞`/`θ` also work.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || StructureError::Parse(s.into());
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let kind = match s[..open].trim() {
            "theta" | "θ" => BaseKind::Theta,
            "infinity" | "inf" | "∞" => BaseKind::Infinity,
            _ => return Err(bad()),
        };
        let nums: Vec<usize> = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let [p, l, q] = nums[..] else { return Err(bad()) };
        let fam = BaseFamily { kind, p, l, q };
        if !fam.is_valid() {
            return Err(StructureError::InvalidFamily(fam));
        }
        Ok(fam)
    }
}

/// A labelled base. `vertex_map[i]` is the graph vertex playing the role of
/// vertex `i` in the canonical layout produced by [`BicyclicBase::to_graph`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BicyclicBase {
    pub family: BaseFamily,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
    pub vertex_map: Vec<usize>,
}

/// Which weight sequence a symbol refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strand {
    A,
    B,
    C,
}

impl BicyclicBase {
    /// A base in canonical layout (identity vertex map).
    pub fn new(family: BaseFamily, a: Vec<Rational>, b: Vec<Rational>, c: Vec<Rational>) -> Result<Self, StructureError> {
        if !family.is_valid() {
            return Err(StructureError::InvalidFamily(family));
        }
        for ((path, seq), expected) in ['a', 'b', 'c'].into_iter().zip([&a, &b, &c]).zip(family.sequence_lengths()) {
            if seq.len() != expected {
                return Err(StructureError::WeightCount { path, got: seq.len(), expected });
            }
        }
        Ok(BicyclicBase {
            vertex_map: (0..family.order()).collect(),
            family,
            a,
            b,
            c,
        })
    }

    /// Unit weights everywhere.
    pub fn unit(family: BaseFamily) -> Result<Self, StructureError> {
        Self::from_flat(family, &vec![Rational::from_integer(1.into()); family.size()])
    }

    /// Weights given as `a` then `b` then `c`, concatenated.
    pub fn from_flat(family: BaseFamily, weights: &[Rational]) -> Result<Self, StructureError> {
        let [la, lb, lc] = family.sequence_lengths();
        if weights.len() != la + lb + lc {
            return Err(StructureError::WeightCount { path: '*', got: weights.len(), expected: la + lb + lc });
        }
        Self::new(
            family,
            weights[..la].to_vec(),
            weights[la..la + lb].to_vec(),
            weights[la + lb..].to_vec(),
        )
    }

    pub fn kind(&self) -> BaseKind {
        self.family.kind
    }

    pub fn strand(&self, s: Strand) -> &[Rational] {
        match s {
            Strand::A => &self.a,
            Strand::B => &self.b,
            Strand::C => &self.c,
        }
    }

    /// Weight `a_i`, `b_i` or `c_i` with 1-based `index`.
    pub fn weight(&self, s: Strand, index: usize) -> Option<&Rational> {
        index.checked_sub(1).and_then(|i| self.strand(s).get(i))
    }

    /// The base in canonical layout.
    ///
    /// θ: `u = 0`, `v = 1`, then interior vertices of the `a`, `b` and `c`
    /// paths in order from `u`. ∞: attachment vertex of `C^p` is `0`, the
    /// rest of `C^p` follows in labelling order, then the connecting path's
    /// interior, then the attachment vertex of `C^q` (which is `0` itself
    /// when `l = 1`), then the rest of `C^q`.
    pub fn to_graph(&self) -> WeightedGraph {
        let f = self.family;
        let mut g = WeightedGraph::empty(f.order());
        let mut next = 0usize;
        let mut fresh = |k: usize| {
            let ids: Vec<usize> = (next..next + k).collect();
            next += k;
            ids
        };
        let chain = |g: &mut WeightedGraph, vs: &[usize], ws: &[Rational]| {
            for (pair, w) in vs.windows(2).zip(ws) {
                g.add_edge(pair[0], pair[1], w.clone()).expect("layout edges are distinct");
            }
        };
        match f.kind {
            BaseKind::Theta => {
                let ends = fresh(2);
                let (u, v) = (ends[0], ends[1]);
                for (k, ws) in [(f.p, &self.a), (f.l, &self.b), (f.q, &self.c)] {
                    let mut vs = vec![u];
                    vs.extend(fresh(k));
                    vs.push(v);
                    chain(&mut g, &vs, ws);
                }
            }
            BaseKind::Infinity => {
                let hub_p = fresh(1)[0];
                let mut cp = vec![hub_p];
                cp.extend(fresh(f.p - 1));
                cp.push(hub_p);
                chain(&mut g, &cp, &self.a);
                let mut path = vec![hub_p];
                if f.l >= 2 {
                    path.extend(fresh(f.l - 1));
                }
                chain(&mut g, &path, &self.c);
                let hub_q = *path.last().expect("path is nonempty");
                let mut cq = vec![hub_q];
                cq.extend(fresh(f.q - 1));
                cq.push(hub_q);
                chain(&mut g, &cq, &self.b);
            }
        }
        g
    }

    /// The base as it sits in the graph it was classified from.
    pub fn reassemble(&self, order: usize) -> WeightedGraph {
        let canon = self.to_graph();
        let mut g = WeightedGraph::empty(order);
        for (u, v, w) in canon.edges() {
            g.add_edge(self.vertex_map[u], self.vertex_map[v], w.clone())
                .expect("vertex map is injective");
        }
        g
    }
}

/// Connected with exactly one more edge than vertices.
pub fn is_bicyclic(g: &WeightedGraph) -> bool {
    g.size() == g.order() + 1 && g.is_connected()
}

/// Result of peeling pendant vertices off a bicyclic graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractedBase {
    /// The base, vertices renumbered in increasing original-id order.
    pub graph: WeightedGraph,
    /// `vertex_map[i]` is the original id of base vertex `i`.
    pub vertex_map: Vec<usize>,
    pub has_pendants: bool,
}

/// Repeatedly deletes degree-one vertices.
pub fn extract_base(g: &WeightedGraph) -> Result<ExtractedBase, StructureError> {
    if !is_bicyclic(g) {
        return Err(StructureError::NotBicyclic);
    }
    let n = g.order();
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = queue.pop_front() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for (u, _) in g.neighbors(v) {
            if !removed[u] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    queue.push_back(u);
                }
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let has_pendants = keep.len() < n;
    let sub = g.induced(&keep);
    Ok(ExtractedBase {
        graph: sub.graph,
        vertex_map: sub.vertex_map,
        has_pendants,
    })
}

/// A maximal run through degree-two vertices.
struct Walk {
    /// Interior vertices in walking order.
    interior: Vec<usize>,
    weights: Vec<Rational>,
    end: usize,
}

impl Walk {
    fn key(&self) -> (usize, &[Rational], Option<usize>) {
        (self.interior.len(), &self.weights, self.interior.iter().copied().min())
    }

    fn reversed(mut self, start: usize) -> Walk {
        self.interior.reverse();
        self.weights.reverse();
        self.end = start;
        self
    }
}

fn walk(g: &WeightedGraph, start: usize, first: usize) -> Walk {
    let mut interior = Vec::new();
    let mut weights = vec![g.weight(start, first).expect("first step is an edge").clone()];
    let (mut prev, mut cur) = (start, first);
    while g.degree(cur) == 2 && cur != start {
        interior.push(cur);
        let (next, w) = g
            .neighbors(cur)
            .find(|&(x, _)| x != prev)
            .expect("degree-two vertex has another neighbour");
        weights.push(w.clone());
        prev = cur;
        cur = next;
    }
    Walk { interior, weights, end: cur }
}

/// The cycle through `hub` whose two hub-neighbours are `ends`, walked
/// from `hub` towards the smaller of them.
fn oriented_cycle(g: &WeightedGraph, hub: usize, ends: (usize, usize)) -> Walk {
    walk(g, hub, ends.0.min(ends.1))
}

/// Labels a pendant-free bicyclic base.
pub fn classify_base(base: &WeightedGraph) -> Result<BicyclicBase, StructureError> {
    if !is_bicyclic(base) || base.degrees().iter().any(|&d| d < 2) {
        return Err(StructureError::NotABase);
    }
    let branch: Vec<usize> = (0..base.order()).filter(|&v| base.degree(v) > 2).collect();
    match branch[..] {
        [hub] if base.degree(hub) == 4 => classify_shared_hub(base, hub),
        [u, v] if base.degree(u) == 3 && base.degree(v) == 3 => {
            let walks: Vec<Walk> = base.neighbors(u).map(|(x, _)| walk(base, u, x)).collect();
            if walks.iter().all(|w| w.end == v) {
                Ok(classify_theta(u, v, walks))
            } else {
                classify_bridged(base, u, v, walks)
            }
        }
        _ => Err(StructureError::NotABase),
    }
}

fn classify_theta(u: usize, v: usize, mut paths: Vec<Walk>) -> BicyclicBase {
    paths.sort_by(|x, y| x.key().cmp(&y.key()));
    let [short, mid, long]: [Walk; 3] = paths.try_into().ok().expect("three paths");
    let family = BaseFamily::theta(mid.interior.len(), short.interior.len(), long.interior.len());
    let mut vertex_map = vec![u, v];
    vertex_map.extend(&mid.interior);
    vertex_map.extend(&short.interior);
    vertex_map.extend(&long.interior);
    BicyclicBase {
        family,
        a: mid.weights,
        b: short.weights,
        c: long.weights,
        vertex_map,
    }
}

/// Both cycles of an ∞-graph with `l = 1` pass through `hub`.
fn classify_shared_hub(g: &WeightedGraph, hub: usize) -> Result<BicyclicBase, StructureError> {
    let nbrs: Vec<usize> = g.neighbors(hub).map(|(x, _)| x).collect();
    let mut cycles: Vec<Walk> = Vec::new();
    let mut used = Vec::new();
    for &x in &nbrs {
        if used.contains(&x) {
            continue;
        }
        let w = walk(g, hub, x);
        if w.end != hub {
            return Err(StructureError::NotABase);
        }
        let back = *w.interior.last().unwrap_or(&x);
        used.extend([x, back]);
        cycles.push(oriented_cycle(g, hub, (x, back)));
    }
    if cycles.len() != 2 {
        return Err(StructureError::NotABase);
    }
    cycles.sort_by(|x, y| x.key().cmp(&y.key()));
    let [cp, cq]: [Walk; 2] = cycles.try_into().ok().expect("two cycles");
    let family = BaseFamily::infinity(cp.weights.len(), 1, cq.weights.len());
    let mut vertex_map = vec![hub];
    vertex_map.extend(&cp.interior);
    vertex_map.extend(&cq.interior);
    Ok(BicyclicBase {
        family,
        a: cp.weights,
        b: cq.weights,
        c: Vec::new(),
        vertex_map,
    })
}

/// Two cycles joined by a path with at least one edge.
fn classify_bridged(g: &WeightedGraph, u: usize, v: usize, walks: Vec<Walk>) -> Result<BicyclicBase, StructureError> {
    let (loops, bridges): (Vec<Walk>, Vec<Walk>) = walks.into_iter().partition(|w| w.end == u);
    let [bridge]: [Walk; 1] = bridges.try_into().map_err(|_| StructureError::NotABase)?;
    if loops.len() != 2 || bridge.end != v {
        return Err(StructureError::NotABase);
    }
    let ends_at = |hub: usize, skip: usize| -> Result<Walk, StructureError> {
        let ends: Vec<usize> = g.neighbors(hub).map(|(x, _)| x).filter(|&x| x != skip).collect();
        let cycle = oriented_cycle(g, hub, (ends[0], ends[1]));
        if cycle.end != hub {
            return Err(StructureError::NotABase);
        }
        Ok(cycle)
    };
    let first_on_bridge = |from_u: bool| {
        if from_u {
            *bridge.interior.first().unwrap_or(&v)
        } else {
            *bridge.interior.last().unwrap_or(&u)
        }
    };
    let cu = ends_at(u, first_on_bridge(true))?;
    let cv = ends_at(v, first_on_bridge(false))?;

    let (cp, cq, path, hub_p, hub_q) = if cu.key() <= cv.key() {
        (cu, cv, bridge, u, v)
    } else {
        let path = bridge.reversed(u);
        (cv, cu, path, v, u)
    };
    let family = BaseFamily::infinity(cp.weights.len(), path.weights.len() + 1, cq.weights.len());
    let mut vertex_map = vec![hub_p];
    vertex_map.extend(&cp.interior);
    vertex_map.extend(&path.interior);
    vertex_map.push(hub_q);
    vertex_map.extend(&cq.interior);
    Ok(BicyclicBase {
        family,
        a: cp.weights,
        b: cq.weights,
        c: path.weights,
        vertex_map,
    })
}

/// A classified bicyclic graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classified {
    /// Labelled base, `vertex_map` in the ids of the input graph.
    pub base: BicyclicBase,
    pub has_pendants: bool,
}

/// [`extract_base`] followed by [`classify_base`].
pub fn classify(g: &WeightedGraph) -> Result<Classified, StructureError> {
    let extracted = extract_base(g)?;
    let mut base = classify_base(&extracted.graph)?;
    for v in &mut base.vertex_map {
        *v = extracted.vertex_map[*v];
    }
    Ok(Classified {
        base,
        has_pendants: extracted.has_pendants,
    })
}
