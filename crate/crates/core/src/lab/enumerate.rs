//! All connected bicyclic graphs of a given order, up to isomorphism.
//!
//! Every bicyclic graph with a pendant vertex comes from a bicyclic graph
//! one vertex smaller by adding a leaf, and every pendant-free one is a
//! base. Growing order by order and deduplicating on canonical form
//! therefore reaches each class exactly once.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::WeightedGraph;
use crate::structure::{BaseFamily, BicyclicBase};

use super::canon::{canonical_form, CanonicalForm};
use super::LabError;

pub const MIN_ORDER: usize = 4;
pub const MAX_ORDER: usize = 10;
/// Largest order the brute-force search accepts.
pub const BRUTE_FORCE_MAX: usize = 7;

/// Canonical forms of all bicyclic graphs on `n` vertices, sorted.
pub fn enumerate_forms(n: usize) -> Result<Vec<CanonicalForm>, LabError> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(LabError::UnsupportedOrder { n, min: MIN_ORDER, max: MAX_ORDER });
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    for k in MIN_ORDER..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let g = form.graph();
            for v in 0..g.order() {
                let mut h = g.clone();
                let leaf = h.add_vertex();
                h.add_edge(v, leaf, crate::rational::int(1)).expect("fresh leaf");
                next.insert(canonical_form(&h));
            }
        }
        for family in BaseFamily::all_up_to(k).into_iter().filter(|f| f.order() == k) {
            let base = BicyclicBase::unit(family).expect("valid family");
            next.insert(canonical_form(&base.to_graph()));
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// All bicyclic graphs on `n` vertices, canonically labelled, unit weights.
pub fn enumerate_bicyclic(n: usize) -> Result<Vec<WeightedGraph>, LabError> {
    Ok(enumerate_forms(n)?.iter().map(CanonicalForm::graph).collect())
}

/// The same set by checking every `(n+1)`-edge subset of `K_n`.
pub fn brute_force_forms(n: usize) -> Result<Vec<CanonicalForm>, LabError> {
    if !(MIN_ORDER..=BRUTE_FORCE_MAX).contains(&n) {
        return Err(LabError::UnsupportedOrder { n, min: MIN_ORDER, max: BRUTE_FORCE_MAX });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut found = BTreeSet::new();
    let mut pick: Vec<usize> = (0..=n).collect();
    loop {
        let edges: Vec<(usize, usize)> = pick.iter().map(|&i| pairs[i]).collect();
        let g = WeightedGraph::unit(n, &edges).expect("distinct pairs");
        if g.is_connected() {
            found.insert(canonical_form(&g));
        }
        if !next_combination(&mut pick, pairs.len()) {
            break;
        }
    }
    Ok(found.into_iter().collect())
}

fn next_combination(pick: &mut [usize], m: usize) -> bool {
    let k = pick.len();
    let Some(i) = (0..k).rev().find(|&i| pick[i] < m - k + i) else {
        return false;
    };
    pick[i] += 1;
    for j in i + 1..k {
        pick[j] = pick[j - 1] + 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::classify;
    use alloc::vec;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_forms(4).unwrap().len(), 1);
        assert_eq!(enumerate_forms(5).unwrap().len(), 5);
        assert_eq!(enumerate_forms(6).unwrap().len(), 19);
    }

    #[test]
    fn order_five_families() {
        let mut seen: Vec<(BaseFamily, bool)> = enumerate_bicyclic(5)
            .unwrap()
            .iter()
            .map(|g| {
                let c = classify(g).unwrap();
                (c.base.family, c.has_pendants)
            })
            .collect();
        seen.sort();
        let mut expected = vec![
            (BaseFamily::infinity(3, 1, 3), false),
            (BaseFamily::theta(1, 0, 1), true),
            (BaseFamily::theta(1, 0, 1), true),
            (BaseFamily::theta(1, 0, 2), false),
            (BaseFamily::theta(1, 1, 1), false),
        ];
        expected.sort();
        assert_eq!(seen, expected);
    }

    #[test]
    fn matches_brute_force() {
        for n in 4..=6 {
            assert_eq!(enumerate_forms(n).unwrap(), brute_force_forms(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn out_of_range() {
        assert_eq!(enumerate_forms(3), Err(LabError::UnsupportedOrder { n: 3, min: 4, max: 10 }));
        assert!(enumerate_forms(11).is_err());
        assert!(brute_force_forms(8).is_err());
    }
}
