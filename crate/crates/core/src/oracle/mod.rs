//! Bounded semi-decision for submonoid and rational subset membership.
//!
//! The search explores products breadth first and deduplicates elements by
//! normal form. A hit is returned with a certificate that is re-evaluated
//! before being reported. Failing to find the target within the bound is
//! reported as `Unknown`, never as non-membership.

pub mod rational;

use std::collections::HashSet;

use serde_json::{json, Value};
use thiserror::Error;

use crate::detector::find_forbidden;
use crate::dihedral::{DihedralError, DihedralGroup};
use crate::elementary::{CleanContext, ElementaryError};
use crate::graph::ArtinGraph;
use crate::raag::{RaagContext, RaagError};
use crate::word::Word;

pub use rational::{Automaton, RationalExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("unsupported context: {0}")]
    UnsupportedContext(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("malformed expression: {0}")]
    Expr(String),
    #[error("certificate failed re-verification: {0}")]
    Certificate(String),
}

impl From<RaagError> for OracleError {
    fn from(e: RaagError) -> Self {
        OracleError::InvalidWord(e.to_string())
    }
}

impl From<ElementaryError> for OracleError {
    fn from(e: ElementaryError) -> Self {
        OracleError::InvalidWord(e.to_string())
    }
}

impl From<DihedralError> for OracleError {
    fn from(e: DihedralError) -> Self {
        OracleError::InvalidWord(e.to_string())
    }
}

/// A group with a computable normal form.
#[derive(Debug, Clone)]
pub enum GroupContext {
    Raag(RaagContext),
    CleanArtin(CleanContext),
    Dihedral(DihedralGroup),
}

impl GroupContext {
    /// Right-angled graphs use the RAAG normal form (this covers the
    /// poisonous `A(P4)` and `A(C4)`); other graphs need to be clean.
    pub fn from_graph(g: ArtinGraph) -> Result<Self, OracleError> {
        if g.is_right_angled() {
            return Ok(GroupContext::Raag(RaagContext::new(g)?));
        }
        if let Some(p) = find_forbidden(&g) {
            return Err(OracleError::UnsupportedContext(format!(
                "graph has labels > 2 and contains {p}; no word problem solution is implemented"
            )));
        }
        let ctx = CleanContext::new(g).map_err(|e| OracleError::UnsupportedContext(e.to_string()))?;
        Ok(GroupContext::CleanArtin(ctx))
    }

    pub fn generators(&self) -> Vec<String> {
        match self {
            GroupContext::Raag(c) => c.graph().vertex_names().to_vec(),
            GroupContext::CleanArtin(c) => c.graph().vertex_names().to_vec(),
            GroupContext::Dihedral(d) => d.gens().to_vec(),
        }
    }

    /// Canonical key; equal keys iff equal elements.
    pub fn normal_key(&self, w: &Word) -> Result<String, OracleError> {
        Ok(match self {
            GroupContext::Raag(c) => c.reduce(w)?.to_string(),
            GroupContext::CleanArtin(c) => c.normal_key(w)?,
            GroupContext::Dihedral(d) => d.key(w)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Indices into the generator list, left to right.
    Factorization(Vec<usize>),
    /// A word of the rational language equal to the target.
    Word(Word),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipResult {
    Member { certificate: Certificate, bound: usize },
    Unknown { bound: usize },
}

impl MembershipResult {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipResult::Member { .. })
    }

    pub fn to_json(&self) -> Value {
        match self {
            MembershipResult::Member { certificate, bound } => {
                let cert = match certificate {
                    Certificate::Factorization(ix) => json!({ "factorization": ix }),
                    Certificate::Word(w) => json!({ "word": w.to_string() }),
                };
                json!({ "outcome": "member", "certificate": cert, "bound": bound })
            }
            MembershipResult::Unknown { bound } => {
                json!({ "outcome": "unknown", "certificate": null, "bound": bound })
            }
        }
    }
}

fn evaluate(gens: &[Word], factorization: &[usize]) -> Word {
    factorization.iter().fold(Word::empty(), |acc, &i| acc.concat(&gens[i]))
}

/// Searches products of at most `bound` generators for `target`.
///
/// The returned factorization is shortest, and lexicographically least
/// among the shortest.
pub fn member_submonoid(
    ctx: &GroupContext,
    gens: &[Word],
    target: &Word,
    bound: usize,
) -> Result<MembershipResult, OracleError> {
    for g in gens {
        ctx.normal_key(g)?;
    }
    let target_key = ctx.normal_key(target)?;
    let identity = ctx.normal_key(&Word::empty())?;
    let hit = |fact: Vec<usize>| -> Result<MembershipResult, OracleError> {
        let key = ctx.normal_key(&evaluate(gens, &fact))?;
        if key != target_key {
            return Err(OracleError::Certificate(format!("{fact:?} evaluates to {key}")));
        }
        Ok(MembershipResult::Member { certificate: Certificate::Factorization(fact), bound })
    };
    if identity == target_key {
        return hit(Vec::new());
    }

    let mut seen: HashSet<String> = HashSet::from([identity]);
    // Kept in lexicographic order of factorizations.
    let mut frontier: Vec<(Vec<usize>, Word)> = vec![(Vec::new(), Word::empty())];
    for _ in 0..bound {
        let mut next = Vec::new();
        for (fact, word) in &frontier {
            for (i, g) in gens.iter().enumerate() {
                let w = word.concat(g);
                let key = ctx.normal_key(&w)?;
                if !seen.insert(key.clone()) {
                    continue;
                }
                let mut f = fact.clone();
                f.push(i);
                if key == target_key {
                    return hit(f);
                }
                next.push((f, w));
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(MembershipResult::Unknown { bound })
}

/// Searches words of length at most `bound` in the language of `expr` for
/// one equal to `target`.
pub fn member_rational(
    ctx: &GroupContext,
    expr: &RationalExpr,
    target: &Word,
    bound: usize,
) -> Result<MembershipResult, OracleError> {
    let gens = ctx.generators();
    if let Some(l) = expr.atoms().into_iter().find(|l| !gens.contains(&l.name)) {
        return Err(OracleError::Expr(format!("atom `{}` is not a generator", l.name)));
    }
    let target_key = ctx.normal_key(target)?;
    let automaton = Automaton::compile(expr);
    let hit = |w: Word| -> Result<MembershipResult, OracleError> {
        let key = ctx.normal_key(&w)?;
        if key != target_key || !automaton.accepts(&w) {
            return Err(OracleError::Certificate(format!("word {w} does not certify the target")));
        }
        Ok(MembershipResult::Member { certificate: Certificate::Word(w), bound })
    };

    let start_key = ctx.normal_key(&Word::empty())?;
    if automaton.accepting[0] && start_key == target_key {
        return hit(Word::empty());
    }
    let mut seen: HashSet<(usize, String)> = HashSet::from([(0, start_key)]);
    let mut frontier: Vec<(usize, Word)> = vec![(0, Word::empty())];
    for _ in 0..bound {
        let mut next = Vec::new();
        for (state, word) in &frontier {
            for (letter, to) in &automaton.transitions[*state] {
                let mut w = word.clone();
                w.push(letter.clone());
                let key = ctx.normal_key(&w)?;
                if !seen.insert((*to, key.clone())) {
                    continue;
                }
                if automaton.accepting[*to] && key == target_key {
                    return hit(w);
                }
                next.push((*to, w));
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(MembershipResult::Unknown { bound })
}
