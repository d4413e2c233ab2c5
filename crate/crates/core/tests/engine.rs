mod common;

use bicyclic_core::closed_form::structural_inertia_with;
use bicyclic_core::engine::graph_inertia;
use bicyclic_core::rational::{frac, int};
use bicyclic_core::{
    congruence_inertia, cycle_inertia, descartes_inertia, path_inertia, structural_inertia, Inertia, Rational,
    SymmetricMatrix, WeightedGraph,
};
use proptest::prelude::*;
use rand::Rng;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn arb_symmetric(max: usize) -> impl Strategy<Value = SymmetricMatrix> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(arb_rational(), n * (n + 1) / 2).prop_map(move |vals| {
            let mut m = SymmetricMatrix::zeros(n);
            let mut it = vals.into_iter();
            for i in 0..n {
                for j in i..n {
                    m.set(i, j, it.next().unwrap());
                }
            }
            m
        })
    })
}

fn arb_graph(max: usize) -> impl Strategy<Value = WeightedGraph> {
    (1..=max, any::<u64>(), 0usize..=4).prop_map(|(n, seed, extra)| {
        let mut rng = common::rng(seed);
        common::connected(&mut rng, n, extra, common::small_weight)
    })
}

fn unit_lower_triangular(n: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = common::rng(seed);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => frac(rng.gen_range(1..=3), rng.gen_range(1..=3)),
                    std::cmp::Ordering::Greater => frac(rng.gen_range(-3..=3), rng.gen_range(1..=3)),
                    std::cmp::Ordering::Less => int(0),
                })
                .collect()
        })
        .collect()
}

fn congruent(m: &SymmetricMatrix, q: &[Vec<Rational>]) -> SymmetricMatrix {
    let n = m.order();
    let mut out = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let mut s = int(0);
            for k in 0..n {
                for l in 0..n {
                    s += &q[i][k] * m.get(k, l) * &q[j][l];
                }
            }
            out.set(i, j, s);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn routes_agree_up_to_ten(m in arb_symmetric(10)) {
        let a = congruence_inertia(&m);
        prop_assert_eq!(a, descartes_inertia(&m));
        prop_assert_eq!(a.order(), m.order());
    }

    #[test]
    fn congruence_invariance(m in arb_symmetric(6), seed in any::<u64>()) {
        let q = unit_lower_triangular(m.order(), seed);
        prop_assert_eq!(congruence_inertia(&congruent(&m, &q)), congruence_inertia(&m));
    }

    #[test]
    fn bordering_changes_each_index_by_at_most_one(m in arb_symmetric(8), drop in any::<prop::sample::Index>()) {
        let n = m.order();
        let k = drop.index(n);
        let keep: Vec<usize> = (0..n).filter(|&i| i != k).collect();
        let (a, b) = (congruence_inertia(&m), congruence_inertia(&m.principal(&keep)));
        prop_assert!(b.pos <= a.pos && a.pos <= b.pos + 1);
        prop_assert!(b.neg <= a.neg && a.neg <= b.neg + 1);
    }

    #[test]
    fn induced_subgraphs_do_not_increase_indices(g in arb_graph(9), mask in any::<u16>()) {
        let keep: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
        let (a, b) = (graph_inertia(&g), graph_inertia(&g.induced(&keep).graph));
        prop_assert!(b.pos <= a.pos && b.neg <= a.neg);
    }

    #[test]
    fn structural_matches_engine(g in arb_graph(12)) {
        prop_assert_eq!(structural_inertia(&g), graph_inertia(&g));
    }

    #[test]
    fn reduction_order_is_irrelevant(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::bicyclic_with_pendants(&mut rng, 8, 6);
        let reference = structural_inertia(&g);
        for _ in 0..10 {
            let mut pick = |c: &[(usize, usize)]| rng.gen_range(0..c.len());
            prop_assert_eq!(structural_inertia_with(&g, &mut pick), reference);
        }
    }

    #[test]
    fn components_add_up(g in arb_graph(6), h in arb_graph(6)) {
        let u = g.disjoint_union(&h);
        prop_assert_eq!(graph_inertia(&u), graph_inertia(&g) + graph_inertia(&h));
        prop_assert_eq!(structural_inertia(&u), graph_inertia(&u));
    }

    #[test]
    fn path_and_odd_cycle_ignore_weights(ws in proptest::collection::vec(1i64..=9, 2..=11)) {
        let n = ws.len();
        let weights: Vec<Rational> = ws.iter().map(|&w| int(w)).collect();
        let p = WeightedGraph::from_edges(n + 1, weights.iter().enumerate().map(|(i, w)| (i, i + 1, w.clone()))).unwrap();
        prop_assert_eq!(graph_inertia(&p), path_inertia(n + 1).unwrap());
        if n >= 3 && n % 2 == 1 {
            prop_assert_eq!(cycle_inertia(&weights).unwrap(), cycle_inertia(&vec![int(1); n]).unwrap());
        }
    }
}

#[test]
fn random_trees_unicyclic_bicyclic() {
    let mut rng = common::rng(11);
    for extra in 0..=2 {
        for _ in 0..100 {
            let n = rng.gen_range(3..=12);
            let g = common::connected(&mut rng, n, extra, common::rational);
            assert_eq!(structural_inertia(&g), graph_inertia(&g), "{:?}", g.edges().collect::<Vec<_>>());
        }
    }
}

#[test]
fn spec_examples() {
    let k23 = WeightedGraph::unit(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    assert_eq!(graph_inertia(&k23), Inertia::new(1, 1, 3));
    assert_eq!(graph_inertia(&WeightedGraph::empty(3)), Inertia::new(0, 0, 3));
    let c5: Vec<Rational> = vec![int(1); 5];
    assert_eq!(cycle_inertia(&c5).unwrap(), Inertia::new(3, 2, 0));
}
