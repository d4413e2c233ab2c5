//! Exhaustive inertia census over weighted bicyclic graphs.
//!
//! Only base edges are weighted from the grid. Tree edges carry one fixed
//! weight, since removing a pendant vertex with its neighbour drops exactly
//! one positive and one negative eigenvalue whatever the weight.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::condition::{Index, InertiaPredicate};
use crate::engine::graph_inertia;
use crate::extremal::matched_label;
use crate::graph::WeightedGraph;
use crate::matrix::Inertia;
use crate::rational::{int, Rational};
use crate::structure::{classify, BaseFamily, BaseKind, BicyclicBase};

use super::canon::{canonical_form, CanonicalForm};
use super::enumerate::enumerate_forms;
use super::LabError;

/// Largest number of weight assignments tried on a single graph.
pub const MAX_ASSIGNMENTS: usize = 59_049;

/// How graphs with pendant twins are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum TwinMode {
    /// Every graph.
    #[default]
    Any,
    /// Only graphs without pendant twins.
    TwinFree,
    /// Every graph reduced to one pendant per neighbour, duplicates dropped.
    TwinReduced,
}

impl fmt::Display for TwinMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwinMode::Any => "any",
            TwinMode::TwinFree => "free",
            TwinMode::TwinReduced => "reduced",
        })
    }
}

impl FromStr for TwinMode {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        match s.trim() {
            "any" | "all" => Ok(TwinMode::Any),
            "free" | "twin-free" => Ok(TwinMode::TwinFree),
            "reduced" | "twin-reduced" => Ok(TwinMode::TwinReduced),
            other => Err(LabError::Filter(alloc::format!("unknown twin mode `{other}`"))),
        }
    }
}

/// Which records a census keeps. All parts must hold.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CensusFilter {
    pub predicates: Vec<InertiaPredicate>,
    pub kind: Option<BaseKind>,
    pub family: Option<BaseFamily>,
    pub pendants: Option<bool>,
    pub twins: TwinMode,
}

impl CensusFilter {
    fn admits_graph(&self, family: &BaseFamily, has_pendants: bool) -> bool {
        self.kind.is_none_or(|k| k == family.kind)
            && self.family.is_none_or(|f| f == *family)
            && self.pendants.is_none_or(|p| p == has_pendants)
    }

    pub fn admits(&self, inertia: &Inertia) -> bool {
        self.predicates.iter().all(|p| p.holds(inertia))
    }
}

impl fmt::Display for CensusFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.predicates.iter().map(ToString::to_string).collect();
        if let Some(k) = self.kind {
            parts.push(alloc::format!("kind={k}"));
        }
        if let Some(fam) = self.family {
            parts.push(alloc::format!("family={fam}"));
        }
        if let Some(p) = self.pendants {
            parts.push(alloc::format!("pendants={}", if p { "yes" } else { "no" }));
        }
        if self.twins != TwinMode::Any {
            parts.push(alloc::format!("twins={}", self.twins));
        }
        if parts.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

/// Comma-separated clauses: inertia predicates such as `i+>=3` or `rank=2`,
/// and `kind=`, `family=`, `pendants=yes|no`, `twins=any|free|reduced`.
impl FromStr for CensusFilter {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        let mut filter = CensusFilter::default();
        let s = s.trim();
        if s.is_empty() || s == "none" {
            return Ok(filter);
        }
        for clause in split_top_level(s) {
            let clause = clause.trim();
            let bad = || LabError::Filter(alloc::format!("bad clause `{clause}`"));
            if let Some((key, value)) = clause.split_once('=') {
                let value = value.trim();
                match key.trim() {
                    "kind" => {
                        filter.kind = Some(match value {
                            "infinity" | "inf" | "∞" => BaseKind::Infinity,
                            "theta" | "θ" => BaseKind::Theta,
                            _ => return Err(bad()),
                        });
                        continue;
                    }
                    "family" => {
                        filter.family = Some(value.parse().map_err(|_| bad())?);
                        continue;
                    }
                    "pendants" => {
                        filter.pendants = Some(match value {
                            "yes" | "true" | "1" => true,
                            "no" | "false" | "0" => false,
                            _ => return Err(bad()),
                        });
                        continue;
                    }
                    "twins" => {
                        filter.twins = value.parse()?;
                        continue;
                    }
                    _ => {}
                }
            }
            filter.predicates.push(clause.parse().map_err(|_| bad())?);
        }
        Ok(filter)
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusConfig {
    pub n: usize,
    pub grid: Vec<Rational>,
    pub tree_weight: Rational,
    pub filter: CensusFilter,
}

impl CensusConfig {
    pub fn new(n: usize, grid: Vec<Rational>) -> Self {
        CensusConfig { n, grid, tree_weight: int(1), filter: CensusFilter::default() }
    }

    pub fn with_filter(mut self, filter: CensusFilter) -> Self {
        self.filter = filter;
        self
    }

    fn validate(&self) -> Result<(), LabError> {
        if self.grid.is_empty() {
            return Err(LabError::EmptyGrid);
        }
        if let Some(w) = self.grid.iter().chain([&self.tree_weight]).find(|w| !crate::rational::is_positive(w)) {
            return Err(LabError::NonPositiveWeight(w.to_string()));
        }
        Ok(())
    }
}

/// One weighted graph of the census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub order: usize,
    /// Edges of the canonically labelled underlying graph, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Weight of each entry of `edges`.
    pub weights: Vec<Rational>,
    /// Base weights `a`, `b`, `c` concatenated.
    pub base_weights: Vec<Rational>,
    pub inertia: Inertia,
    pub family: BaseFamily,
    pub has_pendants: bool,
    /// Statement covering the record, `None` when unmatched.
    pub label: Option<&'static str>,
}

impl CensusRecord {
    pub fn rank(&self) -> usize {
        self.inertia.rank()
    }

    pub fn graph(&self) -> WeightedGraph {
        WeightedGraph::from_edges(self.order, self.edges.iter().zip(&self.weights).map(|(&(u, v), w)| (u, v, w.clone())))
            .expect("record edges are valid")
    }

    fn sort_key(&self) -> (usize, &[(usize, usize)], &[Rational]) {
        (self.order, &self.edges, &self.weights)
    }
}

/// Graphs a census visits, canonically labelled and sorted.
pub fn census_inputs(cfg: &CensusConfig) -> Result<Vec<WeightedGraph>, LabError> {
    cfg.validate()?;
    let forms = enumerate_forms(cfg.n)?;
    let forms: Vec<CanonicalForm> = match cfg.filter.twins {
        TwinMode::Any => forms,
        TwinMode::TwinFree => forms.into_iter().filter(|f| !f.graph().has_pendant_twins()).collect(),
        TwinMode::TwinReduced => {
            let reduced: BTreeSet<CanonicalForm> = forms.iter().map(|f| canonical_form(&twin_reduced(&f.graph()))).collect();
            reduced.into_iter().collect()
        }
    };
    Ok(forms.iter().map(CanonicalForm::graph).collect())
}

/// Deletes pendant twins until every vertex keeps at most one pendant.
pub fn twin_reduced(g: &WeightedGraph) -> WeightedGraph {
    let mut g = g.clone();
    while let Some((_, drop)) = g.find_pendant_twins() {
        g = g.without(&[drop]).graph;
    }
    g
}

/// Records for every grid weighting of one graph that pass the filter.
pub fn census_graph(g: &WeightedGraph, cfg: &CensusConfig) -> Result<Vec<CensusRecord>, LabError> {
    cfg.validate()?;
    let classified = classify(g)?;
    let family = classified.base.family;
    if !cfg.filter.admits_graph(&family, classified.has_pendants) {
        return Ok(Vec::new());
    }
    let m = family.size();
    let count = u32::try_from(m)
        .ok()
        .and_then(|m| cfg.grid.len().checked_pow(m))
        .filter(|&c| c <= MAX_ASSIGNMENTS)
        .ok_or(LabError::TooManyAssignments { family, grid: cfg.grid.len(), edges: m, cap: MAX_ASSIGNMENTS })?;

    // tag each base edge with its position in the flat weight vector
    let tags: Vec<Rational> = (1..=m as i64).map(int).collect();
    let mut tagged = BicyclicBase::from_flat(family, &tags)?;
    tagged.vertex_map = classified.base.vertex_map.clone();
    let slot: BTreeMap<(usize, usize), usize> = tagged
        .to_graph()
        .edges()
        .map(|(x, y, w)| {
            let (u, v) = (tagged.vertex_map[x], tagged.vertex_map[y]);
            let i = w.to_integer().try_into().unwrap_or(0usize) - 1;
            ((u.min(v), u.max(v)), i)
        })
        .collect();
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v, _)| (u, v)).collect();

    let mut out = Vec::new();
    let mut digits = alloc::vec![0usize; m];
    for _ in 0..count {
        let flat: Vec<Rational> = digits.iter().map(|&d| cfg.grid[d].clone()).collect();
        let weights: Vec<Rational> =
            edges.iter().map(|e| slot.get(e).map_or_else(|| cfg.tree_weight.clone(), |&i| flat[i].clone())).collect();
        let weighted = WeightedGraph::from_edges(g.order(), edges.iter().zip(&weights).map(|(&(u, v), w)| (u, v, w.clone())))?;
        let inertia = graph_inertia(&weighted);
        if cfg.filter.admits(&inertia) {
            let mut base = BicyclicBase::from_flat(family, &flat)?;
            base.vertex_map = classified.base.vertex_map.clone();
            out.push(CensusRecord {
                order: g.order(),
                edges: edges.clone(),
                weights,
                label: matched_label(&base, classified.has_pendants),
                base_weights: flat,
                inertia,
                family,
                has_pendants: classified.has_pendants,
            });
        }
        advance(&mut digits, cfg.grid.len());
    }
    Ok(out)
}

fn advance(digits: &mut [usize], base: usize) {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return;
        }
        *d = 0;
    }
}

/// Puts records in their canonical output order.
pub fn sort_records(records: &mut [CensusRecord]) {
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

/// Sequential census; see [`census_inputs`] and [`census_graph`] for the
/// pieces a parallel driver needs.
pub fn census(cfg: &CensusConfig) -> Result<Vec<CensusRecord>, LabError> {
    let mut out = Vec::new();
    for g in census_inputs(cfg)? {
        out.extend(census_graph(&g, cfg)?);
    }
    sort_records(&mut out);
    Ok(out)
}

/// Range of an index over a set of records.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub min: usize,
    pub max: usize,
}

impl Span {
    fn of(v: usize) -> Self {
        Span { min: v, max: v }
    }

    fn add(&mut self, v: usize) {
        self.min = self.min.min(v);
        self.max = self.max.max(v);
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.min, self.max)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySummary {
    pub family: BaseFamily,
    pub has_pendants: bool,
    pub graphs: usize,
    pub records: usize,
    pub pos: Span,
    pub neg: Span,
    pub zero: Span,
    pub rank: Span,
}

impl FamilySummary {
    pub fn span(&self, index: Index) -> Span {
        match index {
            Index::Pos => self.pos,
            Index::Neg => self.neg,
            Index::Zero => self.zero,
            Index::Rank => self.rank,
        }
    }
}

/// Per family and pendant flag: counts and index ranges.
pub fn summarize(records: &[CensusRecord]) -> Vec<FamilySummary> {
    let mut groups: BTreeMap<(BaseFamily, bool), (BTreeSet<&[(usize, usize)]>, FamilySummary)> = BTreeMap::new();
    for r in records {
        let i = &r.inertia;
        let (graphs, s) = groups.entry((r.family, r.has_pendants)).or_insert_with(|| {
            (
                BTreeSet::new(),
                FamilySummary {
                    family: r.family,
                    has_pendants: r.has_pendants,
                    graphs: 0,
                    records: 0,
                    pos: Span::of(i.pos),
                    neg: Span::of(i.neg),
                    zero: Span::of(i.zero),
                    rank: Span::of(i.rank()),
                },
            )
        });
        graphs.insert(&r.edges);
        s.records += 1;
        s.pos.add(i.pos);
        s.neg.add(i.neg);
        s.zero.add(i.zero);
        s.rank.add(i.rank());
    }
    groups
        .into_values()
        .map(|(graphs, mut s)| {
            s.graphs = graphs.len();
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::condition::Condition;
    use alloc::vec;

    fn grid(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_two_at_order_five() {
        let cfg = CensusConfig::new(5, grid(&[1])).with_filter("rank=2".parse().unwrap());
        let records = census(&cfg).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].family, BaseFamily::theta(1, 1, 1));
        assert_eq!(records[0].label, Some("Thm 4.1"));
    }

    #[test]
    fn positive_index_one_on_diamond() {
        let cfg = CensusConfig::new(4, grid(&[1, 2])).with_filter("i+=1".parse().unwrap());
        let records = census(&cfg).unwrap();
        let cond: Condition = "a2c1=a1c2".parse().unwrap();
        let expected = (0..32u32)
            .filter(|bits| {
                let w: Vec<Rational> = (0..5).map(|i| int(1 + (bits >> i & 1) as i64)).collect();
                cond.eval(&BicyclicBase::from_flat(BaseFamily::theta(1, 0, 1), &w).unwrap()).unwrap()
            })
            .count();
        assert_eq!(records.len(), expected);
        for r in &records {
            let b = BicyclicBase::from_flat(r.family, &r.base_weights).unwrap();
            assert!(cond.eval(&b).unwrap());
        }
    }

    #[test]
    fn infinity_with_pendants_at_six() {
        let cfg = CensusConfig::new(6, grid(&[1])).with_filter("i+>=3,kind=infinity,pendants=yes".parse().unwrap());
        let records = census(&cfg).unwrap();
        assert!(!records.is_empty());
        assert!(records.iter().all(|r| r.inertia.pos >= 3 && r.family.kind == BaseKind::Infinity && r.has_pendants));
    }

    #[test]
    fn unit_grid_visits_each_graph_once() {
        let records = census(&CensusConfig::new(5, grid(&[1]))).unwrap();
        assert_eq!(records.len(), 5);
        assert!(records.iter().all(|r| r.inertia.order() == 5));
        assert_eq!(summarize(&records).iter().map(|s| s.graphs).sum::<usize>(), 5);
    }

    #[test]
    fn twin_modes() {
        let any = census_inputs(&CensusConfig::new(6, grid(&[1]))).unwrap();
        let mut cfg = CensusConfig::new(6, grid(&[1]));
        cfg.filter.twins = TwinMode::TwinFree;
        let free = census_inputs(&cfg).unwrap();
        cfg.filter.twins = TwinMode::TwinReduced;
        let reduced = census_inputs(&cfg).unwrap();
        assert!(free.len() < any.len());
        assert!(free.iter().all(|g| !g.has_pendant_twins()));
        assert!(reduced.iter().all(|g| !g.has_pendant_twins() && g.order() <= 6));
        assert!(reduced.iter().any(|g| g.order() < 6));
    }

    #[test]
    fn errors() {
        assert_eq!(census(&CensusConfig::new(5, vec![])), Err(LabError::EmptyGrid));
        assert!(matches!(census(&CensusConfig::new(5, grid(&[0]))), Err(LabError::NonPositiveWeight(_))));
        assert!(matches!(census(&CensusConfig::new(11, grid(&[1]))), Err(LabError::UnsupportedOrder { .. })));
        let g = BicyclicBase::unit(BaseFamily::infinity(5, 1, 5)).unwrap().to_graph();
        assert!(matches!(
            census_graph(&g, &CensusConfig::new(9, grid(&[1, 2, 3, 4]))),
            Err(LabError::TooManyAssignments { .. })
        ));
    }

    #[test]
    fn filter_round_trip() {
        let f: CensusFilter = "i+>=3, family=theta(1,0,1), pendants=no, twins=free".parse().unwrap();
        assert_eq!(f.family, Some(BaseFamily::theta(1, 0, 1)));
        assert_eq!(f.to_string().parse::<CensusFilter>().unwrap(), f);
        assert!("kind=square".parse::<CensusFilter>().is_err());
        assert_eq!("none".parse::<CensusFilter>().unwrap(), CensusFilter::default());
    }
}
