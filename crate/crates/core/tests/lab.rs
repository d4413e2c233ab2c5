mod common;

use bicyclic_core::condition::Condition;
use bicyclic_core::engine::graph_inertia;
use bicyclic_core::lab::{
    brute_force_forms, canonical_form, census, derive_condition, enumerate_bicyclic, enumerate_forms, path_to_star,
    star_merge, star_shift, summarize, CensusConfig, CensusFilter, LabError, TwinMode, Verdict,
};
use bicyclic_core::rational::int;
use bicyclic_core::structure::{classify, extract_base};
use bicyclic_core::{BaseFamily, BaseKind, Rational, WeightedGraph};
use proptest::prelude::*;
use rand::Rng;

use common::*;

#[test]
fn enumeration_counts() {
    let counts: Vec<usize> = (4..=10).map(|n| enumerate_forms(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 5, 19, 67, 236, 797, 2678]);
}

#[test]
fn enumeration_matches_brute_force_at_seven() {
    assert_eq!(enumerate_forms(7).unwrap(), brute_force_forms(7).unwrap());
}

#[test]
fn enumerated_graphs_are_bicyclic_and_distinct() {
    for n in 4..=8 {
        let graphs = enumerate_bicyclic(n).unwrap();
        let mut forms: Vec<_> = graphs.iter().map(canonical_form).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), graphs.len());
        for g in &graphs {
            assert_eq!((g.order(), g.size()), (n, n + 1));
            assert!(g.is_connected());
        }
    }
}

#[test]
fn record_invariants() {
    for n in 4..=7 {
        for r in census(&CensusConfig::new(n, grid(&[1, 2]))).unwrap() {
            let i = r.inertia;
            assert_eq!(i.pos + i.neg + i.zero, n);
            assert_eq!(r.rank(), i.pos + i.neg);
            let g = r.graph();
            assert_eq!(graph_inertia(&g), i);
            assert_eq!(extract_base(&g).unwrap().has_pendants, r.has_pendants);
            assert_eq!(classify(&g).unwrap().base.family, r.family);
        }
    }
}

#[test]
fn tree_weights_do_not_matter() {
    for n in 5..=7 {
        let unit = CensusConfig::new(n, grid(&[1, 2]));
        let mut heavy = unit.clone();
        heavy.tree_weight = int(7);
        let a = census(&unit).unwrap();
        let b = census(&heavy).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!((&x.edges, &x.base_weights, x.inertia), (&y.edges, &y.base_weights, y.inertia));
        }
    }
}

#[test]
fn census_is_deterministic() {
    let cfg = CensusConfig::new(6, grid(&[1, 2])).with_filter("i+>=3".parse().unwrap());
    assert_eq!(census(&cfg).unwrap(), census(&cfg).unwrap());
}

#[test]
fn census_examples() {
    let rank2 = census(&CensusConfig::new(5, grid(&[1])).with_filter("rank=2".parse().unwrap())).unwrap();
    assert_eq!(rank2.len(), 1);
    assert_eq!(rank2[0].family, BaseFamily::theta(1, 1, 1));
    assert!(!rank2[0].has_pendants);

    let diamond = census(&CensusConfig::new(4, grid(&[1, 2])).with_filter("i+=1".parse().unwrap())).unwrap();
    let cond: Condition = "a2c1=a1c2".parse().unwrap();
    let all = census(&CensusConfig::new(4, grid(&[1, 2]))).unwrap();
    let expected = all.iter().filter(|r| cond.eval(&classify(&r.graph()).unwrap().base).unwrap()).count();
    assert_eq!(diamond.len(), expected);
    assert!(!diamond.is_empty());

    let filter: CensusFilter = "i+>=3,kind=infinity,pendants=yes".parse().unwrap();
    let inf = census(&CensusConfig::new(6, grid(&[1])).with_filter(filter)).unwrap();
    assert!(!inf.is_empty());
    assert!(inf.iter().all(|r| r.inertia.pos >= 3 && r.family.kind == BaseKind::Infinity && r.has_pendants));
}

#[test]
fn twin_filters_shrink_the_census() {
    let any = census(&CensusConfig::new(7, grid(&[1]))).unwrap();
    let mut cfg = CensusConfig::new(7, grid(&[1]));
    cfg.filter.twins = TwinMode::TwinFree;
    let free = census(&cfg).unwrap();
    cfg.filter.twins = TwinMode::TwinReduced;
    let reduced = census(&cfg).unwrap();
    assert!(free.len() < any.len());
    assert!(reduced.len() < any.len());
    assert!(free.iter().all(|r| any.contains(r)));
}

#[test]
fn summary_counts_records() {
    let records = census(&CensusConfig::new(6, grid(&[1, 2]))).unwrap();
    let summary = summarize(&records);
    assert_eq!(summary.iter().map(|s| s.records).sum::<usize>(), records.len());
    for s in &summary {
        let mine: Vec<_> = records.iter().filter(|r| r.family == s.family && r.has_pendants == s.has_pendants).collect();
        assert_eq!(mine.len(), s.records);
        assert_eq!(s.pos.min, mine.iter().map(|r| r.inertia.pos).min().unwrap());
        assert_eq!(s.neg.max, mine.iter().map(|r| r.inertia.neg).max().unwrap());
    }
}

#[test]
fn census_errors() {
    assert!(matches!(census(&CensusConfig::new(3, grid(&[1]))), Err(LabError::UnsupportedOrder { .. })));
    assert_eq!(census(&CensusConfig::new(5, Vec::new())), Err(LabError::EmptyGrid));
    assert!(matches!(census(&CensusConfig::new(5, vec![int(0)])), Err(LabError::NonPositiveWeight(_))));
    assert!("i+>>2".parse::<CensusFilter>().is_err());
}

fn weights(seed: u64, k: usize) -> Vec<Rational> {
    let mut rng = rng(seed);
    (0..k).map(|_| small_weight(&mut rng)).collect()
}

fn base_graph(seed: u64, n: usize, extra: usize) -> WeightedGraph {
    connected(&mut rng(seed), n, extra, small_weight)
}

fn assert_monotone(pair: &(WeightedGraph, WeightedGraph)) -> Result<(), TestCaseError> {
    let (a, b) = (graph_inertia(&pair.0), graph_inertia(&pair.1));
    prop_assert_eq!(pair.0.order(), pair.1.order());
    prop_assert!(a.pos >= b.pos && a.neg >= b.neg, "{} then {}", a, b);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn star_shift_is_monotone(seed in any::<u64>(), n in 1usize..=6, extra in 0usize..=2, k in 1usize..=4) {
        let g0 = base_graph(seed, n, extra);
        let u = rng(seed ^ 1).gen_range(0..n);
        let ws = weights(seed ^ 2, k);
        assert_monotone(&star_shift(&g0, u, &ws[0], &ws[1..]).unwrap())?;
    }

    #[test]
    fn star_merge_is_monotone(seed in any::<u64>(), n in 2usize..=6, extra in 0usize..=2, l in 1usize..=3, t in 0usize..=3) {
        let g0 = base_graph(seed, n, extra);
        let mut r = rng(seed ^ 1);
        let u1 = r.gen_range(0..n);
        let u2 = (u1 + r.gen_range(1..n)) % n;
        assert_monotone(&star_merge(&g0, u1, u2, &weights(seed ^ 2, l), &weights(seed ^ 3, t)).unwrap())?;
    }

    #[test]
    fn path_to_star_is_monotone(seed in any::<u64>(), n1 in 1usize..=5, n2 in 1usize..=5, len in 3usize..=6) {
        let g1 = base_graph(seed, n1, seed as usize % 3);
        let g2 = base_graph(seed ^ 5, n2, (seed >> 8) as usize % 3);
        let mut r = rng(seed ^ 1);
        let (u, v) = (r.gen_range(0..n1), r.gen_range(0..n2));
        let pair = path_to_star(&g1, &g2, u, v, &weights(seed ^ 2, len - 1)).unwrap();
        prop_assert_eq!(pair.0.size(), pair.1.size());
        assert_monotone(&pair)?;
    }
}

#[test]
fn derive_diamond() {
    let r = derive_condition(BaseFamily::theta(1, 0, 1), "i+=1".parse().unwrap(), &grid(&[1, 2, 3])).unwrap();
    assert_eq!(r.derived.len(), 1);
    let expected: Condition = "a2c1=a1c2".parse().unwrap();
    for ws in assignments(&grid(&[1, 2, 3, 4]), r.family.size()) {
        let base = bicyclic_core::BicyclicBase::from_flat(r.family, &ws).unwrap();
        assert_eq!(r.derived[0].eval(&base).unwrap(), expected.eval(&base).unwrap());
    }
    assert!(r.agreeing_printed().count() >= 1);
    assert!(r.revalidate(&grid(&[1, 2, 5])).unwrap().iter().all(|v| v.holds()));
}

#[test]
fn derive_rank_two() {
    let r = derive_condition(BaseFamily::theta(1, 1, 1), "rank=2".parse().unwrap(), &grid(&[1, 2])).unwrap();
    let expected: Condition = "c1a2=a1c2 and a2b1=a1b2".parse().unwrap();
    let all = assignments(&grid(&[1, 2, 3]), r.family.size());
    let first = r.derived.first().expect("a derived condition");
    for ws in &all {
        let base = bicyclic_core::BicyclicBase::from_flat(r.family, ws).unwrap();
        assert_eq!(first.eval(&base).unwrap(), expected.eval(&base).unwrap());
    }
}

#[test]
fn derive_theta_202_names_the_printed_variant() {
    let r = derive_condition(BaseFamily::theta(2, 0, 2), "i+=2".parse().unwrap(), &grid(&[1, 2, 3])).unwrap();
    assert!(!r.derived.is_empty());
    assert!(r.printed.len() >= 2);
    let agreeing: Vec<&str> = r.agreeing_printed().map(|p| p.source).collect();
    assert_eq!(agreeing, ["Table 1"]);
    assert!(r.printed.iter().any(|p| matches!(p.verdict, Verdict::Disagrees { .. })));
    let text = r.to_string();
    assert!(text.contains("Table 1") && text.contains("agrees"));
    assert!(r.revalidate(&grid(&[1, 2, 5])).unwrap().iter().all(|v| v.holds()));
}
