//! Words over group generators.

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

use crate::graph::ArtinGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alternating word needs two distinct generators, got `{0}` twice")]
    SameGenerator(String),
    #[error("cannot parse word `{text}`: {reason}")]
    Syntax { text: String, reason: String },
}

/// A generator or its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub name: String,
    pub inverse: bool,
}

impl Letter {
    pub fn new(name: impl Into<String>) -> Self {
        Letter { name: name.into(), inverse: false }
    }

    pub fn inv(name: impl Into<String>) -> Self {
        Letter { name: name.into(), inverse: true }
    }

    /// `+1` or `-1`.
    pub fn exponent(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(&self) -> Self {
        Letter { name: self.name.clone(), inverse: !self.inverse }
    }

    pub fn cancels(&self, other: &Letter) -> bool {
        self.name == other.name && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}'", self.name)
        } else {
            f.write_str(&self.name)
        }
    }
}

/// A finite sequence of letters; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// `name^k`, expanded into `|k|` letters.
    pub fn power_of(name: &str, k: i64) -> Self {
        let l = if k >= 0 { Letter::new(name) } else { Letter::inv(name) };
        Word(vec![l; k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverted).collect())
    }

    pub fn pow(&self, k: usize) -> Word {
        Word((0..k).flat_map(|_| self.0.iter().cloned()).collect())
    }

    /// `u v u^-1 v^-1`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }

    pub fn exponent_sum(&self, name: &str) -> i64 {
        self.0.iter().filter(|l| l.name == name).map(Letter::exponent).sum()
    }

    /// Distinct generator names in order of first occurrence.
    pub fn support(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for l in &self.0 {
            if !out.contains(&l.name.as_str()) {
                out.push(&l.name);
            }
        }
        out
    }

    /// Keeps only the letters whose generator satisfies `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(&str) -> bool) -> Word {
        Word(self.0.iter().filter(|l| keep(&l.name)).cloned().collect())
    }

    /// Renames generators through `f`.
    pub fn rename(&self, mut f: impl FnMut(&str) -> String) -> Word {
        Word(self.0.iter().map(|l| Letter { name: f(&l.name), inverse: l.inverse }).collect())
    }

    /// Free reduction: cancels adjacent `g g^-1` pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for l in &self.0 {
            if out.last().is_some_and(|top| top.cancels(l)) {
                out.pop();
            } else {
                out.push(l.clone());
            }
        }
        Word(out)
    }

    /// Parses the CLI word syntax. Letters are separated by whitespace or
    /// juxtaposed; a name is a letter followed by optional digits or `_`.
    /// A trailing `'` or `^-1` inverts, `^k` repeats.
    ///
    /// ```
    /// # use artin_core::word::Word;
    /// let w = Word::parse("a b' a").unwrap();
    /// assert_eq!(w.to_string(), "a b' a");
    /// assert_eq!(Word::parse("ab^-1a").unwrap(), w);
    /// ```
    pub fn parse(text: &str) -> Result<Word, WordError> {
        Self::parse_with(text, &[] as &[&str])
    }

    /// Like [`Word::parse`], but a whitespace-separated token that is exactly
    /// one of `names` (optionally with an inverse or power suffix) is taken
    /// as a single generator even if it is several characters long.
    pub fn parse_with<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Word, WordError> {
        let err = |reason: &str| WordError::Syntax { text: text.to_string(), reason: reason.to_string() };
        let mut out = Vec::new();
        let trimmed = text.trim();
        if trimmed == "_" || trimmed == "ε" || trimmed == "1" {
            return Ok(Word::empty());
        }
        for token in trimmed.split_whitespace() {
            let (base, suffix) = split_suffix(token);
            if names.iter().any(|n| n.as_ref() == base) {
                if let Some(exp) = parse_exponent(suffix) {
                    out.extend(Word::power_of(base, exp).0);
                    continue;
                }
            }
            let chars: Vec<char> = token.chars().collect();
            let mut i = 0;
            while i < chars.len() {
                let c = chars[i];
                if !(c.is_alphabetic() || c == '_') {
                    return Err(err(&format!("unexpected character `{c}`")));
                }
                let start = i;
                i += 1;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                let mut exp = 1i64;
                if i < chars.len() && chars[i] == '\'' {
                    exp = -1;
                    i += 1;
                } else if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let s = i;
                    if i < chars.len() && chars[i] == '-' {
                        i += 1;
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let num: String = chars[s..i].iter().collect();
                    exp = num.parse().map_err(|_| err("bad exponent"))?;
                }
                out.extend(Word::power_of(&name, exp).0);
            }
        }
        Ok(Word(out))
    }
}

fn split_suffix(token: &str) -> (&str, &str) {
    if let Some(stripped) = token.strip_suffix('\'') {
        return (stripped, "'");
    }
    match token.find('^') {
        Some(pos) => (&token[..pos], &token[pos..]),
        None => (token, ""),
    }
}

fn parse_exponent(suffix: &str) -> Option<i64> {
    match suffix {
        "" => Some(1),
        "'" => Some(-1),
        s => s.strip_prefix('^')?.parse().ok(),
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("_");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// The length-`m` prefix of `u v u v ...`.
pub fn alternating_word(u: &str, v: &str, m: usize) -> Result<Word, WordError> {
    if u == v {
        return Err(WordError::SameGenerator(u.to_string()));
    }
    Ok((0..m).map(|i| Letter::new(if i % 2 == 0 { u } else { v })).collect())
}

/// The defining relations `(u,v)_m = (v,u)_m` of `A(g)`, one per edge.
pub fn relations(g: &ArtinGraph) -> Vec<(Word, Word)> {
    g.edges()
        .map(|(i, j, m)| {
            let (u, v) = (g.name(i), g.name(j));
            let m = m as usize;
            (
                alternating_word(u, v, m).expect("edge endpoints differ"),
                alternating_word(v, u, m).expect("edge endpoints differ"),
            )
        })
        .collect()
}
