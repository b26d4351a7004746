//! Word problem in right-angled Artin groups.
//!
//! Two letters commute when their generators are joined by an edge. A word
//! is fully reduced once no pair `g^e ... g^-e` is separated only by letters
//! commuting with `g`; fully reduced words for the same element differ only
//! by commuting adjacent letters, so the lexicographically least such
//! shuffle is a canonical form.

use thiserror::Error;

use crate::graph::{ArtinGraph, GraphError, VertexId, VertexSet};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RaagError {
    #[error("`{0}` is not a vertex of the graph")]
    UnknownLetter(String),
    #[error("edge {{{u}, {v}}} has label {label}; right-angled graphs need label 2 everywhere")]
    NotRightAngled { u: String, v: String, label: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

// (vertex, inverse); the derived order puts g before g^-1.
type Sym = (VertexId, bool);

/// A right-angled Artin group, given by a graph with all labels 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaagContext {
    graph: ArtinGraph,
}

impl RaagContext {
    pub fn new(graph: ArtinGraph) -> Result<Self, RaagError> {
        if let Some((i, j, m)) = graph.edges().find(|&(_, _, m)| m != 2) {
            return Err(RaagError::NotRightAngled {
                u: graph.name(i).to_string(),
                v: graph.name(j).to_string(),
                label: m,
            });
        }
        Ok(RaagContext { graph })
    }

    pub fn graph(&self) -> &ArtinGraph {
        &self.graph
    }

    fn encode(&self, w: &Word) -> Result<Vec<Sym>, RaagError> {
        w.letters()
            .iter()
            .map(|l| {
                self.graph
                    .index_of(&l.name)
                    .map(|v| (v, l.inverse))
                    .ok_or_else(|| RaagError::UnknownLetter(l.name.clone()))
            })
            .collect()
    }

    fn decode(&self, syms: &[Sym]) -> Word {
        syms.iter().map(|&(v, inverse)| Letter { name: self.graph.name(v).to_string(), inverse }).collect()
    }

    /// Cancels `g^e ... g^-e` pairs whose separating letters all commute with `g`.
    fn full_reduce(&self, syms: &[Sym]) -> Vec<Sym> {
        let mut out: Vec<Sym> = Vec::with_capacity(syms.len());
        for &(v, inv) in syms {
            let mut cancel_at = None;
            for (pos, &(u, uinv)) in out.iter().enumerate().rev() {
                if u == v {
                    if uinv != inv {
                        cancel_at = Some(pos);
                    }
                    break;
                }
                if !self.graph.commute(u, v) {
                    break;
                }
            }
            match cancel_at {
                Some(pos) => {
                    out.remove(pos);
                }
                None => out.push((v, inv)),
            }
        }
        out
    }

    /// Least shuffle of `syms`: repeatedly emit the least letter that
    /// commutes past everything before it.
    fn lex_least(&self, mut rest: Vec<Sym>) -> Vec<Sym> {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                let (v, _) = rest[i];
                let movable = rest[..i].iter().all(|&(u, _)| u != v && self.graph.commute(u, v));
                if movable && best.is_none_or(|b| rest[i] < rest[b]) {
                    best = Some(i);
                }
            }
            let b = best.expect("the first letter is always movable");
            out.push(rest.remove(b));
        }
        out
    }

    /// Canonical representative of `w`; equal elements give equal words.
    pub fn reduce(&self, w: &Word) -> Result<Word, RaagError> {
        let syms = self.encode(w)?;
        let reduced = self.full_reduce(&syms);
        Ok(self.decode(&self.lex_least(reduced)))
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool, RaagError> {
        Ok(self.reduce(u)? == self.reduce(v)?)
    }

    pub fn commutes(&self, u: &Word, v: &Word) -> Result<bool, RaagError> {
        Ok(self.reduce(&Word::commutator(u, v))?.is_empty())
    }

    /// The retraction onto the parabolic subgroup on `s`: letters outside
    /// `s` are deleted and the rest reduced in the induced subgraph.
    pub fn retraction(&self, s: &VertexSet, w: &Word) -> Result<Word, RaagError> {
        self.encode(w)?;
        let sub = RaagContext::new(self.graph.induced_subgraph(s)?)?;
        sub.reduce(&w.restrict(|name| s.contains(name)))
    }
}

/// Canonical form of `w` in the right-angled Artin group on `ctx`.
pub fn raag_reduce(ctx: &RaagContext, w: &Word) -> Result<Word, RaagError> {
    ctx.reduce(w)
}

pub fn raag_retraction(ctx: &RaagContext, s: &VertexSet, w: &Word) -> Result<Word, RaagError> {
    ctx.retraction(s, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn ctx(text: &str) -> RaagContext {
        RaagContext::new(ArtinGraph::parse(text).unwrap()).unwrap()
    }

    fn c4() -> RaagContext {
        ctx("vertex a\nvertex b\nvertex c\nvertex d\nedge a b\nedge b c\nedge c d\nedge d a")
    }

    #[test]
    fn adjacent_conjugation_cancels() {
        assert_eq!(c4().reduce(&w("b a b'")).unwrap(), w("a"));
    }

    #[test]
    fn non_adjacent_conjugation_is_kept() {
        assert_eq!(c4().reduce(&w("a c a'")).unwrap(), w("a c a'"));
    }

    #[test]
    fn free_group_only_free_reduces() {
        let f2 = ctx("vertex a\nvertex b");
        assert_eq!(f2.reduce(&w("a b b' a")).unwrap(), w("a a"));
    }

    #[test]
    fn lex_least_shuffle() {
        let z2 = ctx("vertex a\nvertex b\nedge a b");
        assert_eq!(z2.reduce(&w("b a b")).unwrap(), w("a b b"));
        assert_eq!(z2.reduce(&w("b' a'")).unwrap(), w("a' b'"));
    }

    #[test]
    fn cancellation_across_commuting_block() {
        // a commutes with b and d, so a ... a' cancels across them.
        assert_eq!(c4().reduce(&w("a b d b' a'")).unwrap(), w("b d b'"));
    }

    #[test]
    fn retraction_examples() {
        let p4 = ctx("vertex a\nvertex b\nvertex c\nvertex d\nedge a b\nedge b c\nedge c d");
        assert_eq!(p4.retraction(&VertexSet::new(["a", "b"]), &w("a c d b")).unwrap(), w("a b"));
        let c = c4();
        assert_eq!(c.retraction(&VertexSet::all(c.graph()), &w("c a b")).unwrap(), c.reduce(&w("c a b")).unwrap());
        assert_eq!(c.retraction(&VertexSet::new(["a"]), &w("a b a b'")).unwrap(), w("a a"));
    }

    #[test]
    fn errors() {
        assert_eq!(c4().reduce(&w("z")), Err(RaagError::UnknownLetter("z".into())));
        let g = ArtinGraph::parse("vertex a\nvertex b\nedge a b 3").unwrap();
        assert!(matches!(RaagContext::new(g), Err(RaagError::NotRightAngled { label: 3, .. })));
        assert!(matches!(
            c4().retraction(&VertexSet::new(["q"]), &w("a")),
            Err(RaagError::Graph(GraphError::UnknownVertex(_)))
        ));
    }
}
