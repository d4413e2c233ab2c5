//! Inertia from structure instead of elimination.
//!
//! Paths and cycles have closed forms. Anything else is reduced: the inertia
//! of a disjoint union is the sum over components, deleting one of two
//! pendant vertices hanging off the same neighbour removes one zero, and
//! deleting a pendant vertex together with its neighbour removes exactly
//! one positive and one negative eigenvalue. What survives the reduction
//! without a closed form is handed to [`congruence_inertia`].

use alloc::vec::Vec;

use num_traits::{One, Signed};
use thiserror::Error;

use crate::engine::congruence_inertia;
use crate::graph::WeightedGraph;
use crate::matrix::Inertia;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("a path needs at least one vertex")]
    EmptyPath,
    #[error("a cycle needs at least three vertices, got {0}")]
    ShortCycle(usize),
    #[error("cycle weight {0} is not positive")]
    NonPositiveWeight(usize),
}

/// Inertia of a path on `n` vertices, for any positive weights.
pub fn path_inertia(n: usize) -> Result<Inertia, ClosedFormError> {
    if n == 0 {
        return Err(ClosedFormError::EmptyPath);
    }
    let half = n / 2;
    Ok(Inertia::new(half, half, n % 2))
}

/// Inertia of the cycle `v_1 v_2 ... v_n v_1` with `w(v_i v_{i+1}) = weights[i-1]`.
///
/// Only `n ≡ 0 (mod 4)` depends on the weights: the cycle is singular, with
/// nullity two, exactly when the products of odd- and even-indexed weights
/// coincide.
pub fn cycle_inertia(weights: &[Rational]) -> Result<Inertia, ClosedFormError> {
    let n = weights.len();
    if n < 3 {
        return Err(ClosedFormError::ShortCycle(n));
    }
    if let Some(i) = weights.iter().position(|w| !w.is_positive()) {
        return Err(ClosedFormError::NonPositiveWeight(i));
    }
    Ok(match n % 4 {
        1 => Inertia::new(n.div_ceil(2), (n - 1) / 2, 0),
        2 => Inertia::new(n / 2, n / 2, 0),
        3 => Inertia::new((n - 1) / 2, n.div_ceil(2), 0),
        _ => {
            if alternating_products_equal(weights) {
                Inertia::new(n / 2 - 1, n / 2 - 1, 2)
            } else {
                Inertia::new(n / 2, n / 2, 0)
            }
        }
    })
}

/// Chooses which candidate reduction to apply next.
pub trait ReductionOrder {
    /// Index into `candidates`, which is never empty.
    fn pick(&mut self, candidates: &[(usize, usize)]) -> usize;
}

/// Always the first candidate, i.e. the smallest ids.
#[derive(Debug, Default, Clone, Copy)]
pub struct SmallestId;

impl ReductionOrder for SmallestId {
    fn pick(&mut self, _: &[(usize, usize)]) -> usize {
        0
    }
}

impl<F: FnMut(&[(usize, usize)]) -> usize> ReductionOrder for F {
    fn pick(&mut self, candidates: &[(usize, usize)]) -> usize {
        self(candidates)
    }
}

/// Inertia by pendant reduction, deterministic smallest-id order.
pub fn structural_inertia(g: &WeightedGraph) -> Inertia {
    structural_inertia_with(g, &mut SmallestId)
}

/// Inertia by pendant reduction with the reduction order chosen by `order`.
/// The result does not depend on `order`.
pub fn structural_inertia_with<R: ReductionOrder + ?Sized>(g: &WeightedGraph, order: &mut R) -> Inertia {
    g.components()
        .iter()
        .map(|c| connected_inertia(&c.graph, order))
        .sum()
}

fn connected_inertia<R: ReductionOrder + ?Sized>(g: &WeightedGraph, order: &mut R) -> Inertia {
    let n = g.order();
    if n == 1 {
        return Inertia::new(0, 0, 1);
    }
    if let Some(weights) = path_or_cycle(g) {
        return match weights {
            Shape::Path => path_inertia(n).expect("nonempty"),
            Shape::Cycle(ws) => cycle_inertia(&ws).expect("valid cycle"),
        };
    }

    // (kept, dropped) in both orientations, so the order decides which twin goes
    let twins: Vec<(usize, usize)> = g.pendant_twins().into_iter().flat_map(|(x, y)| [(x, y), (y, x)]).collect();
    if !twins.is_empty() {
        let (_, drop) = twins[order.pick(&twins)];
        return Inertia::new(0, 0, 1) + structural_inertia_with(&g.without(&[drop]).graph, order);
    }

    let pendants: Vec<(usize, usize)> = g.pendants().collect();
    if !pendants.is_empty() {
        let (v, u) = pendants[order.pick(&pendants)];
        return Inertia::new(1, 1, 0) + structural_inertia_with(&g.without(&[u, v]).graph, order);
    }

    congruence_inertia(&g.adjacency_matrix())
}

enum Shape {
    Path,
    Cycle(Vec<Rational>),
}

/// Recognises a connected path or cycle purely from degrees.
fn path_or_cycle(g: &WeightedGraph) -> Option<Shape> {
    let n = g.order();
    let degrees = g.degrees();
    let ones = degrees.iter().filter(|&&d| d == 1).count();
    let twos = degrees.iter().filter(|&&d| d == 2).count();
    if ones == 2 && twos == n - 2 {
        return Some(Shape::Path);
    }
    if twos == n && n >= 3 {
        let mut weights = Vec::with_capacity(n);
        let (mut prev, mut cur) = (0usize, g.neighbors(0).next()?.0);
        weights.push(g.weight(0, cur)?.clone());
        while cur != 0 {
            let (next, w) = g.neighbors(cur).find(|&(x, _)| x != prev)?;
            weights.push(w.clone());
            prev = cur;
            cur = next;
        }
        return Some(Shape::Cycle(weights));
    }
    None
}

/// The product of the odd-indexed weights equals that of the even-indexed ones.
pub fn alternating_products_equal(weights: &[Rational]) -> bool {
    let odd: Rational = weights.iter().step_by(2).fold(Rational::one(), |a, w| a * w);
    let even: Rational = weights.iter().skip(1).step_by(2).fold(Rational::one(), |a, w| a * w);
    odd == even
}
