//! Lower bounds on the indices of weighted bicyclic graphs with pendant
//! vertices, the graphs attaining them, and the weight conditions under which
//! a pendant-free base has positive or negative index at most two or rank at
//! most four.
//!
//! Every prediction is returned next to the engine's answer for the same
//! base, so a caller can always see whether the printed statement holds.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::condition::{Condition, Index, InertiaPredicate};
use crate::engine::congruence_inertia;
use crate::graph::WeightedGraph;
use crate::matrix::Inertia;
use crate::rational::Rational;
use crate::structure::{self, BaseFamily, BaseKind, BicyclicBase, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("order {n} is too small, need at least {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("graph has pendant vertices")]
    HasPendants,
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// A lower bound on `i+` and `i-` for a family of bicyclic graphs with
/// pendant vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BaseKind,
    pub p: usize,
    /// `None` for ∞-graphs: their bound does not depend on the path length.
    pub l: Option<usize>,
    pub q: usize,
    /// The bound exactly as printed; may be a half-integer.
    pub stated_bound: Rational,
    /// `ceil(stated_bound)`, the bound an integer index must satisfy.
    pub effective_bound: usize,
    pub constrains: Vec<Index>,
    pub theorem_label: &'static str,
    /// The printed expression is not an integer for these parameters.
    pub caveat: bool,
}

impl BoundReport {
    fn new(kind: BaseKind, (p, l, q): (usize, Option<usize>, usize), stated: Rational, label: &'static str) -> Self {
        let ceil = stated.ceil().to_integer();
        BoundReport {
            kind,
            p,
            l,
            q,
            caveat: !stated.is_integer(),
            effective_bound: usize::try_from(ceil).expect("bounds are small and positive"),
            stated_bound: stated,
            constrains: vec![Index::Pos, Index::Neg],
            theorem_label: label,
        }
    }

    /// Whether an observed inertia respects the bound on every constrained index.
    pub fn admits(&self, inertia: &Inertia) -> bool {
        self.constrains.iter().all(|ix| ix.of(inertia) >= self.effective_bound)
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.l {
            Some(l) => write!(f, "{}({},{},{})", self.kind, self.p, l, self.q)?,
            None => write!(f, "{}({},l,{})", self.kind, self.p, self.q)?,
        }
        write!(
            f,
            ": i+, i- >= {} (stated {}) [{}]",
            self.effective_bound, self.stated_bound, self.theorem_label
        )?;
        if self.caveat {
            f.write_str(" caveat: stated bound is not an integer")?;
        }
        Ok(())
    }
}

fn half(x: usize) -> Rational {
    Rational::new(BigInt::from(x), BigInt::from(2))
}

fn whole(x: usize) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Bound for graphs with pendants whose base is `infinity(p, l, q)`.
pub fn infinity_pendant_bound(p: usize, q: usize) -> Result<BoundReport, ExtremalError> {
    if p < 3 || q < 3 {
        return Err(ExtremalError::InvalidParameters(alloc::format!("cycle lengths {p}, {q} must be at least 3")));
    }
    let stated = match (p % 2 == 1, q % 2 == 1) {
        (true, true) => half(p + q),
        (false, false) => half(p + q) - whole(1),
        _ => half(p + q - 1),
    };
    Ok(BoundReport::new(BaseKind::Infinity, (p, None, q), stated, "Thm 3.1/3.2"))
}

/// Bound for graphs with pendants whose base is `theta(p, l, q)`.
///
/// When one parameter is zero the other two are the ones that matter. When
/// all three are odd the printed bound `(p+q+l)/2` is a half-integer; the
/// report keeps it verbatim and flags it.
pub fn theta_pendant_bound(p: usize, l: usize, q: usize) -> Result<BoundReport, ExtremalError> {
    let zeros = [p, l, q].iter().filter(|&&x| x == 0).count();
    if zeros > 1 {
        return Err(ExtremalError::InvalidParameters(alloc::format!("theta({p},{l},{q}) has two empty paths")));
    }
    let params = (p, Some(l), q);
    if zeros == 1 {
        let s = p + l + q;
        let stated = if s.is_multiple_of(2) { whole(1) + half(s) } else { whole(1) + half(s + 1) };
        return Ok(BoundReport::new(BaseKind::Theta, params, stated, "Thm 3.6"));
    }
    let s = p + l + q;
    let stated = if s.is_multiple_of(2) {
        whole(1) + half(s)
    } else if p % 2 == 1 && l % 2 == 1 && q % 2 == 1 {
        half(s)
    } else {
        whole(1) + half(s + 1)
    };
    Ok(BoundReport::new(BaseKind::Theta, params, stated, "Thm 3.4/3.5"))
}

fn attach_pendants(g: &mut WeightedGraph, at: usize, count: usize) {
    for _ in 0..count {
        let leaf = g.add_vertex();
        g.add_edge(at, leaf, whole(1)).expect("fresh leaf");
    }
}

/// `infinity(p, 1, q)` with cycle weights `a`, `b` and `n - p - q + 1` unit
/// pendants on the shared vertex.
pub fn build_gstar(p: usize, q: usize, n: usize, a: &[Rational], b: &[Rational]) -> Result<WeightedGraph, ExtremalError> {
    if p < 3 || q < 3 {
        return Err(ExtremalError::InvalidParameters(alloc::format!("cycle lengths {p}, {q} must be at least 3")));
    }
    if n < p + q {
        return Err(ExtremalError::OrderTooSmall { n, min: p + q });
    }
    let base = BicyclicBase::new(BaseFamily::infinity(p, 1, q), a.to_vec(), b.to_vec(), Vec::new())?;
    let mut g = base.to_graph();
    attach_pendants(&mut g, 0, n - p - q + 1);
    Ok(g)
}

/// `theta(p, l, q)` with path weights `a`, `b`, `c` and `n - p - q - l - 2`
/// unit pendants on the branch vertex `v` (id 1).
pub fn build_gstarstar(
    (p, l, q): (usize, usize, usize),
    n: usize,
    a: &[Rational],
    b: &[Rational],
    c: &[Rational],
) -> Result<WeightedGraph, ExtremalError> {
    let min = p + q + l + 3;
    if n < min {
        return Err(ExtremalError::OrderTooSmall { n, min });
    }
    let base = BicyclicBase::new(BaseFamily::theta(p, l, q), a.to_vec(), b.to_vec(), c.to_vec())?;
    let mut g = base.to_graph();
    attach_pendants(&mut g, 1, n - p - q - l - 2);
    Ok(g)
}

/// A weight condition as printed for one family and one target statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedCondition {
    pub family: BaseFamily,
    pub source: &'static str,
    /// The statement the condition is claimed to characterise, e.g. `i+=2`.
    pub target: InertiaPredicate,
    /// `None` when the statement holds for every weighting.
    pub condition: Option<Condition>,
}

const THETA111_ONE: &str = "c1a2=a1c2 and a2b1=a1b2";
const THETA111_TWO: &str = "a2b1!=a1b2 or a2c1!=a1c2";

/// The catalogue of printed weight conditions, verbatim up to notation.
pub fn printed_conditions() -> Vec<PrintedCondition> {
    let rows: [(BaseFamily, &str, &str, &str); 22] = [
        (BaseFamily::theta(1, 1, 1), "Thm 4.1", "i+=1", THETA111_ONE),
        (BaseFamily::theta(1, 1, 1), "Thm 4.2", "i-=1", THETA111_ONE),
        (BaseFamily::theta(1, 1, 1), "Table 1", "i+=2", THETA111_TWO),
        (BaseFamily::theta(1, 1, 1), "Thm 4.5", "i-=2", THETA111_TWO),
        (BaseFamily::theta(1, 1, 1), "Thm 5.1", "rank=2", "a1c2=a2c1 and a1b2=a2b1"),
        (BaseFamily::theta(1, 1, 1), "Thm 5.3", "rank=4", THETA111_TWO),
        (BaseFamily::theta(1, 0, 1), "Thm 4.1", "i+=1", "a2c1=a1c2"),
        (BaseFamily::theta(1, 0, 1), "Table 1", "i+=2", "a2c1!=a1c2"),
        (BaseFamily::theta(1, 0, 1), "Thm 4.5", "i-=2", ""),
        (BaseFamily::theta(1, 0, 1), "Thm 5.2", "rank=3", "a2c1=a1c2"),
        (BaseFamily::theta(1, 0, 1), "Thm 5.3", "rank=4", "a2c1!=a1c2"),
        (BaseFamily::infinity(3, 1, 3), "Table 1", "i+=2", ""),
        (BaseFamily::infinity(3, 2, 3), "Table 1", "i+=2", "4a1a3b1b3-a2b2c1^2>=0"),
        (BaseFamily::infinity(3, 1, 4), "Table 1", "i+=2", "b1b3=b2b4"),
        (BaseFamily::infinity(4, 1, 4), "Table 1", "i+=2", "a1a3=a2a4 and b1b3=b2b4"),
        (BaseFamily::infinity(4, 1, 4), "Thm 4.5", "i-=2", "a1a3=a2a4 and b1b3=b2b4"),
        (BaseFamily::infinity(4, 1, 4), "Thm 5.3", "rank=4", "a1a3=a2a4 and b1b3=b2b4"),
        (BaseFamily::theta(1, 0, 2), "Table 1", "i+=2", "a1b2>=c1c3"),
        (BaseFamily::theta(1, 0, 2), "Thm 4.5", "i-=2", "a1b2<=c1c3"),
        (BaseFamily::theta(1, 0, 2), "Thm 5.3", "rank=4", "a1b2=c1c3"),
        (BaseFamily::theta(2, 0, 2), "Table 1", "i+=2", "a2b1c2=a1a3c2+a2c1c3"),
        (BaseFamily::theta(2, 0, 2), "Thm 4.5", "i-=2", "a2b1c3-a1a3c2-a2c1c3=0"),
    ];
    let mut out: Vec<PrintedCondition> = rows
        .iter()
        .map(|&(family, source, target, text)| PrintedCondition {
            family,
            source,
            target: target.parse().expect("catalogue predicate"),
            condition: (!text.is_empty()).then(|| text.parse().expect("catalogue condition")),
        })
        .collect();
    out.push(PrintedCondition {
        family: BaseFamily::theta(2, 0, 2),
        source: "Thm 5.3",
        target: "rank=4".parse().expect("catalogue predicate"),
        condition: Some("a2b1c3-a1a3c2-a2c1c3=0".parse().expect("catalogue condition")),
    });
    out.push(PrintedCondition {
        family: BaseFamily::theta(1, 1, 2),
        source: "Thm 4.5",
        target: "i-=2".parse().expect("catalogue predicate"),
        condition: Some("a1b2=a2b1".parse().expect("catalogue condition")),
    });
    out
}

/// Families whose printed conditions disagree with each other or refer to
/// weights the family does not have; checkers defer to the engine there.
pub fn is_deferred(family: &BaseFamily) -> bool {
    *family == BaseFamily::theta(1, 0, 2) || *family == BaseFamily::theta(2, 0, 2)
}

/// A predicted index: an exact value, or only a lower bound when the
/// statement is "not in the list, hence larger".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    Exactly(usize),
    AtLeast(usize),
}

impl Claim {
    pub fn holds(&self, value: usize) -> bool {
        match *self {
            Claim::Exactly(k) => value == k,
            Claim::AtLeast(k) => value >= k,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Exactly(k) => write!(f, "={k}"),
            Claim::AtLeast(k) => write!(f, ">={k}"),
        }
    }
}

/// A printed condition evaluated on a concrete base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub source: &'static str,
    pub target: InertiaPredicate,
    /// Rendered condition, empty when unconditional.
    pub text: String,
    /// `None` when the condition mentions a weight the base lacks.
    pub value: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub family: BaseFamily,
    /// Label of the statement the prediction comes from, `None` if the
    /// family is not covered.
    pub matched_theorem: Option<&'static str>,
    pub pos: Option<Claim>,
    pub neg: Option<Claim>,
    pub rank: Option<Claim>,
    pub conditions: Vec<ConditionCheck>,
    /// The printed conditions for this family are inconsistent; no
    /// prediction is made.
    pub deferred: bool,
    /// Inertia of the base computed by congruence elimination.
    pub engine: Inertia,
}

impl ClassificationResult {
    /// Every prediction made is consistent with the engine.
    pub fn agrees(&self) -> bool {
        let e = &self.engine;
        self.pos.is_none_or(|c| c.holds(e.pos))
            && self.neg.is_none_or(|c| c.holds(e.neg))
            && self.rank.is_none_or(|c| c.holds(e.rank()))
    }

    pub fn has_prediction(&self) -> bool {
        self.pos.is_some() || self.neg.is_some() || self.rank.is_some()
    }

    fn empty(base: &BicyclicBase) -> Self {
        let engine = congruence_inertia(&base.to_graph().adjacency_matrix());
        let conditions = printed_conditions()
            .into_iter()
            .filter(|pc| pc.family == base.family)
            .map(|pc| ConditionCheck {
                source: pc.source,
                target: pc.target,
                text: pc.condition.as_ref().map(ToString::to_string).unwrap_or_default(),
                value: match &pc.condition {
                    Some(c) => c.eval(base).ok(),
                    None => Some(true),
                },
            })
            .collect();
        ClassificationResult {
            family: base.family,
            matched_theorem: None,
            pos: None,
            neg: None,
            rank: None,
            conditions,
            deferred: is_deferred(&base.family),
            engine,
        }
    }
}

fn holds(base: &BicyclicBase, text: &str) -> bool {
    let c: Condition = text.parse().expect("built-in condition");
    c.eval(base).expect("built-in condition uses existing weights")
}

struct Prediction {
    label: Option<&'static str>,
    pos: Option<Claim>,
    neg: Option<Claim>,
    rank: Option<Claim>,
}

impl Prediction {
    const NONE: Prediction = Prediction { label: None, pos: None, neg: None, rank: None };

    fn index(label: &'static str, pos: Claim, neg: Claim) -> Self {
        Prediction { label: Some(label), pos: Some(pos), neg: Some(neg), rank: None }
    }

    fn rank(label: &'static str, rank: Claim) -> Self {
        Prediction { label: Some(label), pos: None, neg: None, rank: Some(rank) }
    }

    fn deferred(label: &'static str) -> Self {
        Prediction { label: Some(label), ..Self::NONE }
    }

    fn into_result(self, base: &BicyclicBase) -> ClassificationResult {
        let mut r = ClassificationResult::empty(base);
        r.matched_theorem = self.label;
        r.pos = self.pos;
        r.neg = self.neg;
        r.rank = self.rank;
        r
    }
}

fn predict_small_index(base: &BicyclicBase) -> Prediction {
    use Claim::{AtLeast, Exactly};

    let f = base.family;
    if f == BaseFamily::theta(1, 1, 1) {
        if holds(base, THETA111_ONE) {
            Prediction::index("Thm 4.1", Exactly(1), Exactly(1))
        } else {
            Prediction::index("Table 1", Exactly(2), Exactly(2))
        }
    } else if f == BaseFamily::theta(1, 0, 1) {
        if holds(base, "a2c1=a1c2") {
            Prediction::index("Thm 4.1", Exactly(1), Exactly(2))
        } else {
            Prediction::index("Table 1", Exactly(2), Exactly(2))
        }
    } else if f == BaseFamily::infinity(3, 1, 3) {
        Prediction::index("Table 1", Exactly(2), AtLeast(3))
    } else if f == BaseFamily::infinity(3, 2, 3) {
        let pos = if holds(base, "4a1a3b1b3-a2b2c1^2>=0") { Exactly(2) } else { AtLeast(3) };
        Prediction::index("Table 1", pos, AtLeast(3))
    } else if f == BaseFamily::infinity(3, 1, 4) {
        let pos = if holds(base, "b1b3=b2b4") { Exactly(2) } else { AtLeast(3) };
        Prediction::index("Table 1", pos, AtLeast(3))
    } else if f == BaseFamily::infinity(4, 1, 4) {
        if holds(base, "a1a3=a2a4 and b1b3=b2b4") {
            Prediction::index("Table 1", Exactly(2), Exactly(2))
        } else {
            Prediction::index("Table 1", AtLeast(3), AtLeast(3))
        }
    } else if f == BaseFamily::theta(1, 1, 2) {
        let neg = if holds(base, "a1b2=a2b1") { Exactly(2) } else { AtLeast(3) };
        Prediction::index("Thm 4.5", AtLeast(3), neg)
    } else if is_deferred(&f) {
        Prediction::deferred("Table 1")
    } else {
        Prediction::NONE
    }
}

fn predict_rank(base: &BicyclicBase) -> Prediction {
    use Claim::{AtLeast, Exactly};

    let f = base.family;
    if f == BaseFamily::theta(1, 1, 1) {
        if holds(base, THETA111_ONE) {
            Prediction::rank("Thm 5.1", Exactly(2))
        } else {
            Prediction::rank("Thm 5.3", Exactly(4))
        }
    } else if f == BaseFamily::theta(1, 0, 1) {
        if holds(base, "a2c1=a1c2") {
            Prediction::rank("Thm 5.2", Exactly(3))
        } else {
            Prediction::rank("Thm 5.3", Exactly(4))
        }
    } else if f == BaseFamily::infinity(4, 1, 4) {
        if holds(base, "a1a3=a2a4 and b1b3=b2b4") {
            Prediction::rank("Thm 5.3", Exactly(4))
        } else {
            Prediction::rank("Thm 5.3", AtLeast(5))
        }
    } else if is_deferred(&f) {
        Prediction::deferred("Thm 5.3")
    } else {
        Prediction::NONE
    }
}

/// Predicted `i+` / `i-` of a pendant-free base from the small-index
/// characterisations.
pub fn check_small_index(base: &BicyclicBase) -> ClassificationResult {
    predict_small_index(base).into_result(base)
}

/// Predicted rank of a pendant-free base from the rank 2, 3, 4
/// characterisations.
pub fn classify_rank(base: &BicyclicBase) -> ClassificationResult {
    predict_rank(base).into_result(base)
}

/// The statement covering a weighted base, small-index results first.
/// Graphs with pendants are covered by their lower bound.
pub fn matched_label(base: &BicyclicBase, has_pendants: bool) -> Option<&'static str> {
    if has_pendants {
        return bound_for(&base.family).ok().map(|b| b.theorem_label);
    }
    predict_small_index(base).label.or_else(|| predict_rank(base).label)
}

/// Classifies a whole graph, which must be a pendant-free bicyclic graph.
pub fn classify_graph_base(g: &WeightedGraph) -> Result<BicyclicBase, ExtremalError> {
    let c = structure::classify(g)?;
    if c.has_pendants {
        return Err(ExtremalError::HasPendants);
    }
    Ok(c.base)
}

/// [`check_small_index`] on a graph.
pub fn check_small_index_graph(g: &WeightedGraph) -> Result<ClassificationResult, ExtremalError> {
    classify_graph_base(g).map(|b| check_small_index(&b))
}

/// [`classify_rank`] on a graph.
pub fn classify_rank_graph(g: &WeightedGraph) -> Result<ClassificationResult, ExtremalError> {
    classify_graph_base(g).map(|b| classify_rank(&b))
}

/// The bound applying to a bicyclic graph with pendants, from its base.
pub fn bound_for(family: &BaseFamily) -> Result<BoundReport, ExtremalError> {
    match family.kind {
        BaseKind::Infinity => infinity_pendant_bound(family.p, family.q),
        BaseKind::Theta => theta_pendant_bound(family.p, family.l, family.q),
    }
}
