//! Weight conditions on labelled bases and predicates on inertia triples.
//!
//! A condition is a polynomial (in)equality over the labelled weights
//! `a_i`, `b_i`, `c_i` of a [`BicyclicBase`], or a conjunction/disjunction of
//! such relations. Conditions parse from and print to a compact text form:
//!
//! ```text
//! a2c1=a1c2 and a2b1=a1b2
//! 4a1a3b1b3-a2b2c1^2>=0
//! a2b1c2=a1a3c2+a2c1c3
//! ```

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::matrix::Inertia;
use crate::rational::Rational;
use crate::structure::{BicyclicBase, Strand};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionError {
    #[error("cannot parse condition `{0}`")]
    Parse(String),
    #[error("weight {0} does not exist in this family")]
    MissingSymbol(Symbol),
    #[error("cannot parse predicate `{0}`")]
    Predicate(String),
}

/// One labelled weight, e.g. `a2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub strand: Strand,
    /// 1-based position along the strand.
    pub index: usize,
}

impl Symbol {
    pub fn new(strand: Strand, index: usize) -> Self {
        Symbol { strand, index }
    }

    /// All symbols of a family, `a` first.
    pub fn all_for(base: &BicyclicBase) -> Vec<Symbol> {
        [Strand::A, Strand::B, Strand::C]
            .into_iter()
            .flat_map(|s| (1..=base.strand(s).len()).map(move |i| Symbol::new(s, i)))
            .collect()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.strand {
            Strand::A => 'a',
            Strand::B => 'b',
            Strand::C => 'c',
        };
        write!(f, "{c}{}", self.index)
    }
}

/// `coeff * x_1 * x_2 * ...`, factors sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub coeff: i64,
    pub factors: Vec<Symbol>,
}

impl Term {
    pub fn monomial(mut factors: Vec<Symbol>) -> Self {
        factors.sort();
        Term { coeff: 1, factors }
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    fn eval<'a>(&self, value: &impl Fn(Symbol) -> Option<&'a Rational>) -> Result<Rational, ConditionError> {
        let mut acc = Rational::from_integer(BigInt::from(self.coeff));
        for &s in &self.factors {
            acc *= value(s).ok_or(ConditionError::MissingSymbol(s))?;
        }
        Ok(acc)
    }

    fn fmt_abs(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coeff.unsigned_abs();
        if c != 1 || self.factors.is_empty() {
            write!(f, "{c}")?;
        }
        let mut i = 0;
        while i < self.factors.len() {
            let s = self.factors[i];
            let run = self.factors[i..].iter().take_while(|&&x| x == s).count();
            write!(f, "{s}")?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// A sum of terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly(pub Vec<Term>);

impl Poly {
    fn eval<'a>(&self, value: &impl Fn(Symbol) -> Option<&'a Rational>) -> Result<Rational, ConditionError> {
        let mut acc = Rational::zero();
        for t in &self.0 {
            acc += t.eval(value)?;
        }
        Ok(acc)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().flat_map(|t| t.factors.iter().copied())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.0.iter().enumerate() {
            if t.coeff < 0 {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            t.fmt_abs(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cmp {
    Eq,
    Ne,
    Ge,
    Le,
    Gt,
    Lt,
}

impl Cmp {
    pub const ALL: [Cmp; 6] = [Cmp::Eq, Cmp::Ne, Cmp::Ge, Cmp::Le, Cmp::Gt, Cmp::Lt];

    pub fn test<T: Ord>(self, lhs: &T, rhs: &T) -> bool {
        match self {
            Cmp::Eq => lhs == rhs,
            Cmp::Ne => lhs != rhs,
            Cmp::Ge => lhs >= rhs,
            Cmp::Le => lhs <= rhs,
            Cmp::Gt => lhs > rhs,
            Cmp::Lt => lhs < rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Cmp::Eq => "=",
            Cmp::Ne => "!=",
            Cmp::Ge => ">=",
            Cmp::Le => "<=",
            Cmp::Gt => ">",
            Cmp::Lt => "<",
        }
    }

    /// Splits `text` at the first comparison operator.
    fn split(text: &str) -> Option<(&str, Cmp, &str)> {
        // two-character operators first
        for (tok, op) in [("!=", Cmp::Ne), ("≠", Cmp::Ne), (">=", Cmp::Ge), ("≥", Cmp::Ge), ("<=", Cmp::Le), ("≤", Cmp::Le)] {
            if let Some(i) = text.find(tok) {
                return Some((&text[..i], op, &text[i + tok.len()..]));
            }
        }
        for (tok, op) in [("=", Cmp::Eq), (">", Cmp::Gt), ("<", Cmp::Lt)] {
            if let Some(i) = text.find(tok) {
                return Some((&text[..i], op, &text[i + tok.len()..]));
            }
        }
        None
    }
}

/// `lhs cmp rhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    pub lhs: Poly,
    pub cmp: Cmp,
    pub rhs: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    Rel(Relation),
    All(Vec<Condition>),
    Any(Vec<Condition>),
}

impl Condition {
    /// Evaluates against arbitrary symbol values.
    pub fn eval_with<'a>(&self, value: &impl Fn(Symbol) -> Option<&'a Rational>) -> Result<bool, ConditionError> {
        match self {
            Condition::Rel(r) => Ok(r.cmp.test(&r.lhs.eval(value)?, &r.rhs.eval(value)?)),
            Condition::All(parts) => {
                let mut all = true;
                for p in parts {
                    all &= p.eval_with(value)?;
                }
                Ok(all)
            }
            Condition::Any(parts) => {
                let mut any = false;
                for p in parts {
                    any |= p.eval_with(value)?;
                }
                Ok(any)
            }
        }
    }

    /// Evaluates on the weights of a labelled base. Fails when the
    /// condition names a weight the base does not have.
    pub fn eval(&self, base: &BicyclicBase) -> Result<bool, ConditionError> {
        self.eval_with(&|s: Symbol| base.weight(s.strand, s.index))
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_symbols(&self, out: &mut Vec<Symbol>) {
        match self {
            Condition::Rel(r) => out.extend(r.lhs.symbols().chain(r.rhs.symbols())),
            Condition::All(ps) | Condition::Any(ps) => ps.iter().for_each(|p| p.collect_symbols(out)),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Rel(r) => write!(f, "{}{}{}", r.lhs, r.cmp.symbol(), r.rhs),
            Condition::All(ps) | Condition::Any(ps) => {
                let sep = if matches!(self, Condition::All(_)) { " and " } else { " or " };
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        f.write_str(sep)?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Condition {
    type Err = ConditionError;

    /// Either all parts joined by ` and ` or all by ` or `; no nesting.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.contains(" or ") {
            return s.split(" or ").map(parse_relation).collect::<Result<_, _>>().map(Condition::Any);
        }
        if s.contains(" and ") {
            return s.split(" and ").map(parse_relation).collect::<Result<_, _>>().map(Condition::All);
        }
        parse_relation(s)
    }
}

fn parse_relation(text: &str) -> Result<Condition, ConditionError> {
    let bad = || ConditionError::Parse(text.to_string());
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (lhs, cmp, rhs) = Cmp::split(&compact).ok_or_else(bad)?;
    Ok(Condition::Rel(Relation {
        lhs: parse_poly(lhs).ok_or_else(bad)?,
        cmp,
        rhs: parse_poly(rhs).ok_or_else(bad)?,
    }))
}

fn parse_poly(text: &str) -> Option<Poly> {
    if text == "0" {
        return Some(Poly::default());
    }
    let mut terms = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i64;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if !terms.is_empty() {
            return None;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: i64 = if i > start { text[start..i].parse().ok()? } else { 1 };
        let mut factors = Vec::new();
        while i < bytes.len() && matches!(bytes[i], b'a' | b'b' | b'c') {
            let strand = match bytes[i] {
                b'a' => Strand::A,
                b'b' => Strand::B,
                _ => Strand::C,
            };
            i += 1;
            let s = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let index: usize = text[s..i].parse().ok()?;
            let mut power = 1usize;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let s = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                power = text[s..i].parse().ok()?;
            }
            factors.extend(core::iter::repeat_n(Symbol::new(strand, index), power));
        }
        if i == start {
            return None;
        }
        factors.sort();
        terms.push(Term { coeff: sign * coeff, factors });
    }
    if terms.is_empty() {
        None
    } else {
        Some(Poly(terms))
    }
}

/// Which number of an inertia triple a predicate looks at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Index {
    Pos,
    Neg,
    Zero,
    Rank,
}

impl Index {
    pub fn of(self, i: &Inertia) -> usize {
        match self {
            Index::Pos => i.pos,
            Index::Neg => i.neg,
            Index::Zero => i.zero,
            Index::Rank => i.rank(),
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Index::Pos => "i+",
            Index::Neg => "i-",
            Index::Zero => "i0",
            Index::Rank => "rank",
        })
    }
}

/// `index cmp value`, e.g. `i+=1` or `rank>=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InertiaPredicate {
    pub index: Index,
    pub cmp: Cmp,
    pub value: usize,
}

impl InertiaPredicate {
    pub fn new(index: Index, cmp: Cmp, value: usize) -> Self {
        InertiaPredicate { index, cmp, value }
    }

    pub fn holds(&self, i: &Inertia) -> bool {
        self.cmp.test(&self.index.of(i), &self.value)
    }
}

impl fmt::Display for InertiaPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.index, self.cmp.symbol(), self.value)
    }
}

impl FromStr for InertiaPredicate {
    type Err = ConditionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConditionError::Predicate(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        // `i+=1`: the index name itself may contain + or -, so match names first
        let names: [(&str, Index); 9] = [
            ("i+", Index::Pos),
            ("i-", Index::Neg),
            ("i0", Index::Zero),
            ("pos", Index::Pos),
            ("neg", Index::Neg),
            ("zero", Index::Zero),
            ("nullity", Index::Zero),
            ("rank", Index::Rank),
            ("r", Index::Rank),
        ];
        let (name, index) = names.iter().find(|(n, _)| compact.starts_with(n)).ok_or_else(bad)?;
        let rest = &compact[name.len()..];
        let (empty, cmp, value) = Cmp::split(rest).ok_or_else(bad)?;
        if !empty.is_empty() {
            return Err(bad());
        }
        let value = value.parse().map_err(|_| bad())?;
        Ok(InertiaPredicate::new(*index, cmp, value))
    }
}
