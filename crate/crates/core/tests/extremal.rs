mod common;

use bicyclic_core::engine::graph_inertia;
use bicyclic_core::extremal::{
    bound_for, build_gstar, build_gstarstar, check_small_index, classify_rank, infinity_pendant_bound,
    theta_pendant_bound, Claim, ExtremalError,
};
use bicyclic_core::lab::{census, CensusConfig};
use bicyclic_core::rational::int;
use bicyclic_core::{BaseFamily, BaseKind, BicyclicBase, Rational, WeightedGraph};

use common::*;

fn ones(k: usize) -> Vec<Rational> {
    vec![int(1); k]
}

fn odd_zero_theta(f: &BaseFamily) -> bool {
    f.kind == BaseKind::Theta && f.l == 0 && (f.p + f.q) % 2 == 1
}

#[test]
fn small_index_predictions_match_engine() {
    for family in BaseFamily::all_up_to(8) {
        for ws in assignments(&grid(&[1, 2]), family.size()) {
            let r = check_small_index(&BicyclicBase::from_flat(family, &ws).unwrap());
            assert!(r.agrees(), "{family} {ws:?}: {:?}/{:?} against {}", r.pos, r.neg, r.engine);
        }
    }
}

#[test]
fn rank_predictions_match_engine() {
    for family in BaseFamily::all_up_to(7) {
        for ws in assignments(&grid(&[1, 2, 3]), family.size()) {
            let r = classify_rank(&BicyclicBase::from_flat(family, &ws).unwrap());
            assert!(r.agrees(), "{family} {ws:?}: {:?} against {}", r.rank, r.engine);
        }
    }
}

#[test]
fn rank_two_only_on_theta_111() {
    for family in BaseFamily::all_up_to(7) {
        for ws in assignments(&grid(&[1, 2]), family.size()) {
            let base = BicyclicBase::from_flat(family, &ws).unwrap();
            if graph_inertia(&base.to_graph()).rank() == 2 {
                assert_eq!(family, BaseFamily::theta(1, 1, 1));
                assert_eq!(classify_rank(&base).rank, Some(Claim::Exactly(2)));
            }
        }
    }
}

#[test]
fn pendant_graphs_respect_general_bounds() {
    for n in 5..=8 {
        for r in census(&CensusConfig::new(n, grid(&[1, 2]))).unwrap() {
            if !r.has_pendants {
                continue;
            }
            let (i, min, zero) = match r.family.kind {
                BaseKind::Infinity => (r.inertia, 3, 6),
                BaseKind::Theta => (r.inertia, 2, 4),
            };
            assert!(i.pos >= min && i.neg >= min && i.zero + zero <= n, "{} {:?}: {i}", r.family, r.edges);
        }
    }
}

#[test]
fn pendant_graphs_respect_family_bounds() {
    for n in 5..=8 {
        for r in census(&CensusConfig::new(n, grid(&[1, 2]))).unwrap() {
            if !r.has_pendants || odd_zero_theta(&r.family) {
                continue;
            }
            let bound = bound_for(&r.family).unwrap();
            assert!(bound.admits(&r.inertia), "{bound} violated by {:?}: {}", r.edges, r.inertia);
        }
    }
}

#[test]
fn odd_zero_theta_bound_is_exceeded() {
    let bound = theta_pendant_bound(1, 0, 2).unwrap();
    assert_eq!(bound.effective_bound, 3);
    let g = WeightedGraph::unit(7, &[(0, 1), (0, 2), (0, 5), (0, 6), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
    let c = bicyclic_core::structure::classify(&g).unwrap();
    assert_eq!(c.base.family, BaseFamily::theta(1, 0, 2));
    assert!(c.has_pendants);
    let i = graph_inertia(&g);
    assert_eq!((i.pos, i.neg, i.zero), (2, 2, 3));
    assert!(!bound.admits(&i));
}

#[test]
fn constructions_attain_bounds() {
    for family in BaseFamily::all_up_to(9) {
        let bound = bound_for(&family).unwrap();
        if bound.caveat || odd_zero_theta(&family) {
            continue;
        }
        let g = match family.kind {
            BaseKind::Infinity if family.l == 1 => {
                build_gstar(family.p, family.q, family.p + family.q + 1, &ones(family.p), &ones(family.q)).unwrap()
            }
            BaseKind::Infinity => continue,
            BaseKind::Theta => {
                let (p, l, q) = (family.p, family.l, family.q);
                build_gstarstar((p, l, q), p + l + q + 3, &ones(p + 1), &ones(l + 1), &ones(q + 1)).unwrap()
            }
        };
        let i = graph_inertia(&g);
        assert!(bound.admits(&i), "{family}: {i}");
        assert_eq!(i.pos.min(i.neg), bound.effective_bound, "{family}: {i} against {bound}");
    }
}

#[test]
fn invalid_parameters() {
    assert!(matches!(infinity_pendant_bound(2, 3), Err(ExtremalError::InvalidParameters(_))));
    assert!(matches!(theta_pendant_bound(0, 0, 2), Err(ExtremalError::InvalidParameters(_))));
    assert_eq!(build_gstar(3, 3, 5, &ones(3), &ones(3)), Err(ExtremalError::OrderTooSmall { n: 5, min: 6 }));
    assert_eq!(
        build_gstarstar((1, 1, 1), 5, &ones(2), &ones(2), &ones(2)),
        Err(ExtremalError::OrderTooSmall { n: 5, min: 6 })
    );
}
