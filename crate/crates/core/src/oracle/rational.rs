//! Rational expressions over generator letters and their automata.
//!
//! Syntax: atoms `a`, `a'` (or `a^-1`), juxtaposition for concatenation,
//! `|` for union, postfix `*` for Kleene star, parentheses, `_` for the
//! empty word. Whitespace is ignored.

use std::collections::BTreeSet;
use std::fmt;

use crate::oracle::OracleError;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RationalExpr {
    Epsilon,
    Atom(Letter),
    Concat(Vec<RationalExpr>),
    Union(Vec<RationalExpr>),
    Star(Box<RationalExpr>),
}

impl RationalExpr {
    pub fn word(w: &Word) -> Self {
        match w.len() {
            0 => RationalExpr::Epsilon,
            1 => RationalExpr::Atom(w.letters()[0].clone()),
            _ => RationalExpr::Concat(w.letters().iter().cloned().map(RationalExpr::Atom).collect()),
        }
    }

    /// `(g_1 | ... | g_k)*`, the submonoid generated by `gens`.
    pub fn submonoid(gens: &[Word]) -> Self {
        let alts: Vec<_> = gens.iter().map(Self::word).collect();
        let inner = match alts.len() {
            0 => RationalExpr::Epsilon,
            1 => alts.into_iter().next().expect("one element"),
            _ => RationalExpr::Union(alts),
        };
        RationalExpr::Star(Box::new(inner))
    }

    pub fn atoms(&self) -> Vec<&Letter> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a Letter>) {
        match self {
            RationalExpr::Epsilon => {}
            RationalExpr::Atom(l) => out.push(l),
            RationalExpr::Concat(xs) | RationalExpr::Union(xs) => {
                for x in xs {
                    x.collect_atoms(out);
                }
            }
            RationalExpr::Star(x) => x.collect_atoms(out),
        }
    }

    pub fn parse(text: &str) -> Result<Self, OracleError> {
        Self::parse_with(text, &[] as &[&str])
    }

    /// Parses with knowledge of multi-character generator names; at each
    /// position the longest matching name wins.
    pub fn parse_with<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Self, OracleError> {
        let mut names: Vec<Vec<char>> = names.iter().map(|n| n.as_ref().chars().collect()).collect();
        names.sort_by_key(|n| std::cmp::Reverse(n.len()));
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { chars: &chars, pos: 0, names: &names, text };
        let e = p.union()?;
        if p.pos != chars.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }
}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalExpr::Epsilon => f.write_str("_"),
            RationalExpr::Atom(l) => write!(f, "{l}"),
            RationalExpr::Concat(xs) => {
                for x in xs {
                    match x {
                        RationalExpr::Union(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            RationalExpr::Union(xs) => {
                let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join("|"))
            }
            RationalExpr::Star(x) => match x.as_ref() {
                RationalExpr::Atom(_) | RationalExpr::Epsilon => write!(f, "{x}*"),
                _ => write!(f, "({x})*"),
            },
        }
    }
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    names: &'a [Vec<char>],
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> OracleError {
        OracleError::Expr(format!("{msg} at position {} in `{}`", self.pos, self.text))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn union(&mut self) -> Result<RationalExpr, OracleError> {
        let mut alts = vec![self.concat()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            alts.push(self.concat()?);
        }
        Ok(if alts.len() == 1 { alts.pop().expect("one element") } else { RationalExpr::Union(alts) })
    }

    fn concat(&mut self) -> Result<RationalExpr, OracleError> {
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            parts.push(self.repeat()?);
        }
        Ok(match parts.len() {
            0 => RationalExpr::Epsilon,
            1 => parts.pop().expect("one element"),
            _ => RationalExpr::Concat(parts),
        })
    }

    fn repeat(&mut self) -> Result<RationalExpr, OracleError> {
        let mut e = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            e = RationalExpr::Star(Box::new(e));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<RationalExpr, OracleError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.union()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('_') => {
                self.pos += 1;
                Ok(RationalExpr::Epsilon)
            }
            Some(c) if c.is_alphabetic() => {
                let name = self.name();
                let inverse = if self.peek() == Some('\'') {
                    self.pos += 1;
                    true
                } else if self.chars[self.pos..].starts_with(&['^', '-', '1']) {
                    self.pos += 3;
                    true
                } else {
                    false
                };
                Ok(RationalExpr::Atom(Letter { name, inverse }))
            }
            Some(c) => Err(self.error(&format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of expression")),
        }
    }

    fn name(&mut self) -> String {
        let rest = &self.chars[self.pos..];
        if let Some(n) = self.names.iter().find(|n| rest.starts_with(n)) {
            self.pos += n.len();
            return n.iter().collect();
        }
        let start = self.pos;
        self.pos += 1;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}

/// An epsilon-free automaton over letters; state 0 is initial.
#[derive(Debug, Clone)]
pub struct Automaton {
    /// Per state, `(letter, target)` sorted by letter then target.
    pub transitions: Vec<Vec<(Letter, usize)>>,
    pub accepting: Vec<bool>,
}

#[derive(Default)]
struct Thompson {
    eps: Vec<Vec<usize>>,
    moves: Vec<Vec<(Letter, usize)>>,
}

impl Thompson {
    fn state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.moves.push(Vec::new());
        self.eps.len() - 1
    }

    // Returns (entry, exit).
    fn build(&mut self, e: &RationalExpr) -> (usize, usize) {
        match e {
            RationalExpr::Epsilon => {
                let s = self.state();
                (s, s)
            }
            RationalExpr::Atom(l) => {
                let (s, t) = (self.state(), self.state());
                self.moves[s].push((l.clone(), t));
                (s, t)
            }
            RationalExpr::Concat(xs) => {
                let s = self.state();
                let mut cur = s;
                for x in xs {
                    let (a, b) = self.build(x);
                    self.eps[cur].push(a);
                    cur = b;
                }
                (s, cur)
            }
            RationalExpr::Union(xs) => {
                let (s, t) = (self.state(), self.state());
                for x in xs {
                    let (a, b) = self.build(x);
                    self.eps[s].push(a);
                    self.eps[b].push(t);
                }
                (s, t)
            }
            RationalExpr::Star(x) => {
                let s = self.state();
                let (a, b) = self.build(x);
                self.eps[s].push(a);
                self.eps[b].push(s);
                (s, s)
            }
        }
    }

    fn closure(&self, s: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([s]);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in &self.eps[u] {
                if seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        seen
    }
}

impl Automaton {
    pub fn compile(e: &RationalExpr) -> Self {
        let mut t = Thompson::default();
        let (entry, exit) = t.build(e);
        // Keep the entry and every state entered by a letter; renumber so
        // the entry is 0.
        let mut keep = vec![entry];
        for moves in &t.moves {
            for (_, target) in moves {
                if !keep.contains(target) {
                    keep.push(*target);
                }
            }
        }
        let index = |s: usize| keep.iter().position(|&k| k == s).expect("kept state");
        let mut transitions = Vec::with_capacity(keep.len());
        let mut accepting = Vec::with_capacity(keep.len());
        for &s in &keep {
            let closure = t.closure(s);
            accepting.push(closure.contains(&exit));
            let mut out: Vec<(Letter, usize)> =
                closure.iter().flat_map(|&u| t.moves[u].iter().map(|(l, v)| (l.clone(), index(*v)))).collect();
            out.sort();
            out.dedup();
            transitions.push(out);
        }
        Automaton { transitions, accepting }
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let mut current = BTreeSet::from([0usize]);
        for l in w.letters() {
            current = current
                .iter()
                .flat_map(|&s| self.transitions[s].iter().filter(|(x, _)| x == l).map(|&(_, t)| t))
                .collect();
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|&s| self.accepting[s])
    }
}
