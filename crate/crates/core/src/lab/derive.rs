//! Searching for the weight condition behind an inertia statement.
//!
//! The engine labels every grid weighting of a base as satisfying the
//! target or not. A candidate condition is reported when it draws exactly
//! the same line. Candidates are the printed conditions for the family,
//! comparisons `m1 ~ m2` between coprime monomials of equal degree at most
//! three, equalities `m1 = m2 + m3` of the same shape, and conjunctions of
//! equalities (or disjunctions of their negations).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::condition::{Cmp, Condition, InertiaPredicate, Poly, Relation, Symbol, Term};
use crate::engine::graph_inertia;
use crate::extremal::printed_conditions;
use crate::rational::Rational;
use crate::structure::{BaseFamily, BicyclicBase, StructureError};

use super::census::MAX_ASSIGNMENTS;
use super::LabError;

const MAX_DEGREE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Agrees,
    Disagrees { mismatches: usize },
    /// The condition names a weight the family lacks.
    NotEvaluable(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Agrees => f.write_str("agrees"),
            Verdict::Disagrees { mismatches } => write!(f, "disagrees ({mismatches} mismatches)"),
            Verdict::NotEvaluable(why) => write!(f, "not evaluable ({why})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedVerdict {
    pub source: &'static str,
    /// The statement the condition is printed for.
    pub claimed: InertiaPredicate,
    /// Rendered condition, `true` when unconditional.
    pub text: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeriveReport {
    pub family: BaseFamily,
    pub target: InertiaPredicate,
    pub grid: Vec<Rational>,
    pub assignments: usize,
    pub satisfying: usize,
    pub printed: Vec<PrintedVerdict>,
    /// Candidates agreeing with the engine on every grid point, simplest first.
    pub derived: Vec<Condition>,
    /// The target holds everywhere (`Some(true)`) or nowhere on the grid.
    pub constant: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Revalidation {
    pub condition: Condition,
    pub assignments: usize,
    pub mismatches: usize,
}

impl Revalidation {
    pub fn holds(&self) -> bool {
        self.mismatches == 0
    }
}

impl DeriveReport {
    /// Printed conditions that agree with the engine.
    pub fn agreeing_printed(&self) -> impl Iterator<Item = &PrintedVerdict> {
        self.printed.iter().filter(|p| p.verdict == Verdict::Agrees)
    }

    /// Checks every derived condition on another grid.
    pub fn revalidate(&self, grid: &[Rational]) -> Result<Vec<Revalidation>, LabError> {
        let sweep = Sweep::new(self.family, &self.target, grid)?;
        Ok(self
            .derived
            .iter()
            .map(|c| Revalidation {
                condition: c.clone(),
                assignments: sweep.bases.len(),
                mismatches: sweep.mismatches(c).unwrap_or(sweep.bases.len()),
            })
            .collect())
    }
}

impl fmt::Display for DeriveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grid: Vec<String> = self.grid.iter().map(ToString::to_string).collect();
        writeln!(f, "family {} target {} grid {{{}}}", self.family, self.target, grid.join(","))?;
        writeln!(f, "assignments {} satisfying {}", self.assignments, self.satisfying)?;
        for p in &self.printed {
            writeln!(f, "printed [{}] {} for {}: {}", p.source, p.text, p.claimed, p.verdict)?;
        }
        match self.constant {
            Some(true) => writeln!(f, "target holds for every weighting")?,
            Some(false) => writeln!(f, "target holds for no weighting")?,
            None => {}
        }
        if self.derived.is_empty() && self.constant.is_none() {
            writeln!(f, "no candidate matches")?;
        }
        for c in &self.derived {
            writeln!(f, "derived {c}")?;
        }
        Ok(())
    }
}

/// Every weighting of a family over a grid with its engine verdict.
struct Sweep {
    bases: Vec<BicyclicBase>,
    truth: Vec<bool>,
}

impl Sweep {
    fn new(family: BaseFamily, target: &InertiaPredicate, grid: &[Rational]) -> Result<Self, LabError> {
        if grid.is_empty() {
            return Err(LabError::EmptyGrid);
        }
        if let Some(w) = grid.iter().find(|w| !crate::rational::is_positive(w)) {
            return Err(LabError::NonPositiveWeight(w.to_string()));
        }
        if !family.is_valid() {
            return Err(StructureError::InvalidFamily(family).into());
        }
        let m = family.size();
        let count = u32::try_from(m)
            .ok()
            .and_then(|m| grid.len().checked_pow(m))
            .filter(|&c| c <= MAX_ASSIGNMENTS)
            .ok_or(LabError::TooManyAssignments { family, grid: grid.len(), edges: m, cap: MAX_ASSIGNMENTS })?;
        let mut bases = Vec::with_capacity(count);
        let mut truth = Vec::with_capacity(count);
        let mut digits = vec![0usize; m];
        for _ in 0..count {
            let flat: Vec<Rational> = digits.iter().map(|&d| grid[d].clone()).collect();
            let base = BicyclicBase::from_flat(family, &flat)?;
            truth.push(target.holds(&graph_inertia(&base.to_graph())));
            bases.push(base);
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < grid.len() {
                    break;
                }
                *d = 0;
            }
        }
        Ok(Sweep { bases, truth })
    }

    fn mismatches(&self, c: &Condition) -> Result<usize, String> {
        let mut bad = 0;
        for (b, &t) in self.bases.iter().zip(&self.truth) {
            if c.eval(b).map_err(|e| e.to_string())? != t {
                bad += 1;
            }
        }
        Ok(bad)
    }
}

/// Monomials as sorted symbol indices, with exact values at every grid point
/// after clearing denominators.
struct Monomials {
    factors: Vec<Vec<usize>>,
    values: Vec<Vec<u128>>,
}

impl Monomials {
    fn new(sweep: &Sweep, symbols: &[Symbol], grid: &[Rational]) -> Option<Self> {
        // one common scale keeps equal-degree comparisons exact
        let lcm = grid.iter().fold(BigInt::one(), |acc, g| acc.lcm(g.denom()));
        let scaled: Vec<(Rational, u128)> = grid
            .iter()
            .map(|g| Some((g.clone(), (g * Rational::from_integer(lcm.clone())).to_integer().to_u64()?)))
            .collect::<Option<Vec<_>>>()?
            .into_iter()
            .map(|(g, k)| (g, u128::from(k)))
            .collect();
        if scaled.iter().any(|&(_, k)| k >= 1 << 42) {
            return None;
        }
        let point: Vec<Vec<u128>> = sweep
            .bases
            .iter()
            .map(|b| {
                symbols
                    .iter()
                    .map(|s| {
                        let w = b.weight(s.strand, s.index).expect("symbol of the family");
                        scaled.iter().find(|(g, _)| g == w).expect("grid value").1
                    })
                    .collect()
            })
            .collect();

        let mut factors = Vec::new();
        let k = symbols.len();
        for d in 1..=MAX_DEGREE {
            let mut idx = vec![0usize; d];
            loop {
                factors.push(idx.clone());
                // next non-decreasing sequence
                let Some(i) = (0..d).rev().find(|&i| idx[i] + 1 < k) else { break };
                idx[i] += 1;
                for j in i + 1..d {
                    idx[j] = idx[i];
                }
            }
        }
        let values = factors
            .iter()
            .map(|f| point.iter().map(|p| f.iter().map(|&i| p[i]).product()).collect())
            .collect();
        Some(Monomials { factors, values })
    }

    fn term(&self, i: usize, symbols: &[Symbol]) -> Term {
        Term::monomial(self.factors[i].iter().map(|&s| symbols[s]).collect())
    }

    fn disjoint(&self, i: usize, j: usize) -> bool {
        !self.factors[i].iter().any(|s| self.factors[j].contains(s))
    }
}

fn relation(lhs: Vec<Term>, cmp: Cmp, rhs: Vec<Term>) -> Condition {
    Condition::Rel(Relation { lhs: Poly(lhs), cmp, rhs: Poly(rhs) })
}

/// Sweeps `family` over `grid` and reports which conditions reproduce the
/// engine's answer to `target`.
pub fn derive_condition(family: BaseFamily, target: InertiaPredicate, grid: &[Rational]) -> Result<DeriveReport, LabError> {
    let sweep = Sweep::new(family, &target, grid)?;
    let total = sweep.truth.len();
    let satisfying = sweep.truth.iter().filter(|&&t| t).count();

    let printed = printed_conditions()
        .into_iter()
        .filter(|pc| pc.family == family)
        .map(|pc| {
            let (text, verdict) = match &pc.condition {
                None => {
                    let bad = total - satisfying;
                    ("true".into(), if bad == 0 { Verdict::Agrees } else { Verdict::Disagrees { mismatches: bad } })
                }
                Some(c) => (
                    c.to_string(),
                    match sweep.mismatches(c) {
                        Ok(0) => Verdict::Agrees,
                        Ok(n) => Verdict::Disagrees { mismatches: n },
                        Err(e) => Verdict::NotEvaluable(e),
                    },
                ),
            };
            PrintedVerdict { source: pc.source, claimed: pc.target, text, verdict }
        })
        .collect();

    let constant = match satisfying {
        0 => Some(false),
        s if s == total => Some(true),
        _ => None,
    };
    let mut derived = Vec::new();
    if constant.is_none() {
        let symbols = Symbol::all_for(&sweep.bases[0]);
        if let Some(mono) = Monomials::new(&sweep, &symbols, grid) {
            derived = search(&sweep.truth, &mono, &symbols);
        }
    }

    Ok(DeriveReport {
        family,
        target,
        grid: grid.to_vec(),
        assignments: total,
        satisfying,
        printed,
        derived,
        constant,
    })
}

fn search(truth: &[bool], mono: &Monomials, symbols: &[Symbol]) -> Vec<Condition> {
    let n = mono.factors.len();
    let deg = |i: usize| mono.factors[i].len();
    let mut out = Vec::new();
    // equalities that hold wherever the target does
    let mut necessary: Vec<(usize, usize, Vec<bool>)> = Vec::new();
    let mut sufficient_ne: Vec<(usize, usize, Vec<bool>)> = Vec::new();

    for i in 0..n {
        for j in i + 1..n {
            if deg(i) != deg(j) || !mono.disjoint(i, j) {
                continue;
            }
            let (vi, vj) = (&mono.values[i], &mono.values[j]);
            for cmp in Cmp::ALL {
                if (0..truth.len()).all(|t| cmp.test(&vi[t], &vj[t]) == truth[t]) {
                    out.push(relation(vec![mono.term(i, symbols)], cmp, vec![mono.term(j, symbols)]));
                }
            }
            let eq: Vec<bool> = (0..truth.len()).map(|t| vi[t] == vj[t]).collect();
            if truth.iter().zip(&eq).all(|(&t, &e)| !t || e) {
                necessary.push((i, j, eq.clone()));
            }
            if truth.iter().zip(&eq).all(|(&t, &e)| t || e) {
                sufficient_ne.push((i, j, eq));
            }
        }
    }

    out.extend(trinomials(truth, mono, symbols));

    let target: Vec<bool> = truth.to_vec();
    if let Some(parts) = minimal_conjunction(&target, &necessary) {
        if parts.len() > 1 {
            out.push(Condition::All(
                parts
                    .iter()
                    .map(|&(i, j)| relation(vec![mono.term(i, symbols)], Cmp::Eq, vec![mono.term(j, symbols)]))
                    .collect(),
            ));
        }
    }
    let complement: Vec<bool> = truth.iter().map(|t| !t).collect();
    if let Some(parts) = minimal_conjunction(&complement, &sufficient_ne) {
        if parts.len() > 1 {
            out.push(Condition::Any(
                parts
                    .iter()
                    .map(|&(i, j)| relation(vec![mono.term(i, symbols)], Cmp::Ne, vec![mono.term(j, symbols)]))
                    .collect(),
            ));
        }
    }
    out
}

/// A smallest-found set of equalities whose conjunction is exactly `target`.
fn minimal_conjunction(target: &[bool], candidates: &[(usize, usize, Vec<bool>)]) -> Option<Vec<(usize, usize)>> {
    let meet = |set: &[usize]| -> Vec<bool> {
        (0..target.len()).map(|t| set.iter().all(|&k| candidates[k].2[t])).collect()
    };
    let mut keep: Vec<usize> = (0..candidates.len()).collect();
    if keep.is_empty() || meet(&keep) != target {
        return None;
    }
    // drop the highest-degree, latest candidates first
    for k in (0..candidates.len()).rev() {
        let trial: Vec<usize> = keep.iter().copied().filter(|&x| x != k).collect();
        if !trial.is_empty() && meet(&trial) == target {
            keep = trial;
        }
    }
    Some(keep.iter().map(|&k| (candidates[k].0, candidates[k].1)).collect())
}

/// `m1 = m2 + m3` with all three of one degree, no symbol common to all of
/// them and `m1` distinct from both summands.
fn trinomials(truth: &[bool], mono: &Monomials, symbols: &[Symbol]) -> Vec<Condition> {
    let Some(t0) = truth.iter().position(|&t| t) else {
        return Vec::new();
    };
    let n = mono.factors.len();
    let mut at_t0: BTreeMap<(usize, u128), Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        at_t0.entry((mono.factors[i].len(), mono.values[i][t0])).or_default().push(i);
    }
    let mut out = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            let d = mono.factors[j].len();
            if mono.factors[k].len() != d {
                continue;
            }
            let sum = mono.values[j][t0] + mono.values[k][t0];
            let Some(heads) = at_t0.get(&(d, sum)) else { continue };
            for &i in heads {
                let common = mono.factors[i].iter().any(|s| mono.factors[j].contains(s) && mono.factors[k].contains(s));
                if common {
                    continue;
                }
                let (vi, vj, vk) = (&mono.values[i], &mono.values[j], &mono.values[k]);
                if (0..truth.len()).all(|t| (vi[t] == vj[t] + vk[t]) == truth[t]) {
                    out.push(relation(vec![mono.term(i, symbols)], Cmp::Eq, vec![mono.term(j, symbols), mono.term(k, symbols)]));
                }
            }
        }
    }
    out
}
