//! Graph surgeries that never increase either index.
//!
//! Each function returns the pair `(before, after)` with
//! `i+(before) >= i+(after)` and `i-(before) >= i-(after)`.

use alloc::vec::Vec;

use crate::graph::WeightedGraph;
use crate::rational::{is_positive, Rational};

use super::LabError;

fn check_vertex(g: &WeightedGraph, v: usize) -> Result<(), LabError> {
    if v < g.order() {
        Ok(())
    } else {
        Err(LabError::InvalidVertex { vertex: v, order: g.order() })
    }
}

fn check_weights(ws: &[Rational]) -> Result<(), LabError> {
    match ws.iter().find(|w| !is_positive(w)) {
        Some(w) => Err(LabError::NonPositiveWeight(alloc::string::ToString::to_string(w))),
        None => Ok(()),
    }
}

fn attach_leaves(g: &mut WeightedGraph, at: usize, weights: &[Rational]) {
    for w in weights {
        let leaf = g.add_vertex();
        g.add_edge(at, leaf, w.clone()).expect("fresh leaf");
    }
}

/// A star with centre `v` and leaves weighted `leaves` is hung from `u` by an
/// edge of weight `link`; the second graph moves every leaf from `v` to `u`.
pub fn star_shift(
    g0: &WeightedGraph,
    u: usize,
    link: &Rational,
    leaves: &[Rational],
) -> Result<(WeightedGraph, WeightedGraph), LabError> {
    check_vertex(g0, u)?;
    check_weights(core::slice::from_ref(link))?;
    check_weights(leaves)?;
    let mut g1 = g0.clone();
    let v = g1.add_vertex();
    g1.add_edge(u, v, link.clone())?;
    let mut g2 = g1.clone();
    attach_leaves(&mut g1, v, leaves);
    attach_leaves(&mut g2, u, leaves);
    Ok((g1, g2))
}

/// Pendants `at_u1` on `u1` and `at_u2` on `u2`, against all of them on `u1`.
/// `u1` must keep at least one pendant of its own unless nothing moves.
pub fn star_merge(
    g0: &WeightedGraph,
    u1: usize,
    u2: usize,
    at_u1: &[Rational],
    at_u2: &[Rational],
) -> Result<(WeightedGraph, WeightedGraph), LabError> {
    check_vertex(g0, u1)?;
    check_vertex(g0, u2)?;
    if u1 == u2 {
        return Err(LabError::InvalidVertex { vertex: u2, order: g0.order() });
    }
    if at_u1.is_empty() && !at_u2.is_empty() {
        return Err(LabError::EmptyStar);
    }
    check_weights(at_u1)?;
    check_weights(at_u2)?;
    let mut g1 = g0.clone();
    attach_leaves(&mut g1, u1, at_u1);
    attach_leaves(&mut g1, u2, at_u2);
    let mut g2 = g0.clone();
    attach_leaves(&mut g2, u1, at_u1);
    attach_leaves(&mut g2, u1, at_u2);
    Ok((g1, g2))
}

/// `u` of `g1` and `v` of `g2` joined by a path with edge weights `path`
/// (so `path.len() + 1` vertices), against `u` and `v` merged into the
/// centre of a star carrying the same weights.
pub fn path_to_star(
    g1: &WeightedGraph,
    g2: &WeightedGraph,
    u: usize,
    v: usize,
    path: &[Rational],
) -> Result<(WeightedGraph, WeightedGraph), LabError> {
    check_vertex(g1, u)?;
    check_vertex(g2, v)?;
    let l = path.len() + 1;
    if l < 3 {
        return Err(LabError::PathTooShort(l));
    }
    check_weights(path)?;

    let shift = g1.order();
    let mut joined = g1.disjoint_union(g2);
    let mut prev = u;
    for (i, w) in path.iter().enumerate() {
        let next = if i + 1 == path.len() { shift + v } else { joined.add_vertex() };
        joined.add_edge(prev, next, w.clone())?;
        prev = next;
    }

    // g2 without v, packed after g1; v itself becomes u
    let place = |x: usize| match x.cmp(&v) {
        core::cmp::Ordering::Equal => u,
        core::cmp::Ordering::Less => shift + x,
        core::cmp::Ordering::Greater => shift + x - 1,
    };
    let mut merged = g1.clone();
    for _ in 1..g2.order() {
        merged.add_vertex();
    }
    let moved: Vec<(usize, usize, Rational)> = g2.edges().map(|(x, y, w)| (place(x), place(y), w.clone())).collect();
    for (x, y, w) in moved {
        merged.add_edge(x, y, w)?;
    }
    attach_leaves(&mut merged, u, path);
    Ok((joined, merged))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::graph_inertia;
    use crate::lab::canon::is_isomorphic;
    use crate::rational::int;
    use alloc::vec;

    fn ones(k: usize) -> Vec<Rational> {
        vec![int(1); k]
    }

    fn monotone(pair: &(WeightedGraph, WeightedGraph)) -> bool {
        let (a, b) = (graph_inertia(&pair.0), graph_inertia(&pair.1));
        a.pos >= b.pos && a.neg >= b.neg && pair.0.order() == pair.1.order()
    }

    #[test]
    fn shift_on_single_vertex() {
        let pair = star_shift(&WeightedGraph::empty(1), 0, &int(1), &ones(1)).unwrap();
        let p3 = WeightedGraph::unit(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(is_isomorphic(&pair.0, &p3));
        assert!(is_isomorphic(&pair.1, &p3));
    }

    #[test]
    fn shift_examples() {
        let p2 = WeightedGraph::unit(2, &[(0, 1)]).unwrap();
        assert!(monotone(&star_shift(&p2, 0, &int(1), &ones(2)).unwrap()));
        let c3 = WeightedGraph::unit(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(monotone(&star_shift(&c3, 1, &int(2), &[int(3)]).unwrap()));
        assert!(star_shift(&c3, 3, &int(1), &ones(1)).is_err());
    }

    #[test]
    fn merge_examples() {
        let p2 = WeightedGraph::unit(2, &[(0, 1)]).unwrap();
        let (g1, g2) = star_merge(&p2, 0, 1, &ones(1), &ones(1)).unwrap();
        assert_eq!(graph_inertia(&g1).pos, 2);
        assert_eq!(graph_inertia(&g2).pos, 1);
        let (g1, g2) = star_merge(&p2, 0, 1, &[], &[]).unwrap();
        assert_eq!((&g1, &g2), (&p2, &p2));
        let c4 = WeightedGraph::unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(monotone(&star_merge(&c4, 0, 2, &ones(1), &ones(1)).unwrap()));
        assert!(star_merge(&c4, 1, 1, &[], &[]).is_err());
        // moving pendants onto a vertex without any can raise both indices
        let p3 = WeightedGraph::unit(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(star_merge(&p3, 0, 1, &[], &ones(1)), Err(LabError::EmptyStar));
    }

    #[test]
    fn path_to_star_examples() {
        let k1 = WeightedGraph::empty(1);
        let (gp, gs) = path_to_star(&k1, &k1, 0, 0, &ones(2)).unwrap();
        assert!(is_isomorphic(&gp, &WeightedGraph::unit(3, &[(0, 1), (1, 2)]).unwrap()));
        assert_eq!(gs.order(), 3);
        assert!(monotone(&(gp, gs)));

        let p2 = WeightedGraph::unit(2, &[(0, 1)]).unwrap();
        assert!(monotone(&path_to_star(&p2, &p2, 1, 0, &ones(2)).unwrap()));
        let c3 = WeightedGraph::unit(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let pair = path_to_star(&c3, &k1, 2, 0, &[int(1), int(2), int(3)]).unwrap();
        assert_eq!(pair.0.size(), pair.1.size());
        assert!(monotone(&pair));
        assert_eq!(path_to_star(&k1, &k1, 0, 0, &ones(1)), Err(LabError::PathTooShort(2)));
    }
}
