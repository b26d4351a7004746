//! Word problem in dihedral Artin groups `D_m = <a, b | (a,b)_m = (b,a)_m>`
//! via the left-greedy Garside normal form.
//!
//! Every element is uniquely `Δ^p s_1 ... s_r` where `Δ = (a,b)_m` and the
//! `s_i` are proper simple elements (alternating words of length
//! `1..m-1`) with `last(s_i) = first(s_{i+1})`. Simples are stored as
//! `(first letter, length)`; products are computed by arithmetic on
//! that pair.

use std::fmt;

use thiserror::Error;

use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DihedralError {
    #[error("letter `{letter}` is not one of the generators {gens:?}")]
    LetterOutside { letter: String, gens: [String; 2] },
    #[error("dihedral label must be at least 2, got {0}")]
    LabelTooSmall(u32),
    #[error("generators must be distinct")]
    SameGenerators,
    #[error("coset index must be at least 1")]
    ZeroIndex,
}

/// A proper simple element: the alternating word of length `len` starting
/// with generator `first` (0 or 1), `1 <= len <= m - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simple {
    pub first: u8,
    pub len: u32,
}

impl Simple {
    pub fn last(self) -> u8 {
        if self.len % 2 == 1 {
            self.first
        } else {
            1 - self.first
        }
    }

    /// Letters of the simple, as generator indices.
    pub fn letters(self) -> impl Iterator<Item = u8> {
        (0..self.len).map(move |i| if i % 2 == 0 { self.first } else { 1 - self.first })
    }
}

/// `Δ^delta_power · simples[0] · simples[1] · ...`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideNF {
    pub m: u32,
    pub delta_power: i64,
    pub simples: Vec<Simple>,
}

impl GarsideNF {
    pub fn identity(m: u32) -> Self {
        GarsideNF { m, delta_power: 0, simples: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.simples.is_empty()
    }

    /// Conjugation by `Δ`: swaps the generators when `m` is odd.
    fn flip(&mut self) {
        if self.m % 2 == 1 {
            for s in &mut self.simples {
                s.first = 1 - s.first;
            }
        }
    }

    /// Right multiplication by a generator.
    pub fn push_letter(&mut self, g: u8) {
        match self.simples.last_mut() {
            Some(s) if s.last() != g => {
                s.len += 1;
                if s.len == self.m {
                    self.simples.pop();
                    // s_1 ... s_{r-1} Δ = Δ τ(s_1) ... τ(s_{r-1})
                    self.flip();
                    self.delta_power += 1;
                }
            }
            _ => self.simples.push(Simple { first: g, len: 1 }),
        }
    }

    /// Right multiplication by the inverse of a generator:
    /// `g^-1 = Δ^-1 (Δ g^-1)` with `Δ g^-1` the simple completing `g` to `Δ`.
    pub fn push_inverse(&mut self, g: u8) {
        self.flip();
        self.delta_power -= 1;
        let first = if self.m % 2 == 1 { g } else { 1 - g };
        let complement = Simple { first, len: self.m - 1 };
        for l in complement.letters() {
            self.push_letter(l);
        }
    }

    /// Checks the left-weighted chain condition.
    pub fn is_left_weighted(&self) -> bool {
        self.simples.iter().all(|s| s.len >= 1 && s.len < self.m)
            && self.simples.windows(2).all(|w| w[0].last() == w[1].first)
    }

    /// Renders as `Δ^p · s1 · s2 · ...` with simples written over `gens`.
    pub fn render(&self, gens: &[String; 2]) -> String {
        let compact = gens.iter().all(|g| g.chars().count() == 1);
        let mut parts = vec![format!("Δ^{}", self.delta_power)];
        for s in &self.simples {
            let letters: Vec<&str> = s.letters().map(|l| gens[l as usize].as_str()).collect();
            parts.push(if compact { letters.concat() } else { letters.join(" ") });
        }
        parts.join(" · ")
    }

    /// A word representing this element.
    pub fn to_word(&self, gens: &[String; 2]) -> Word {
        let delta: Vec<Letter> =
            Simple { first: 0, len: self.m }.letters().map(|l| Letter::new(gens[l as usize].clone())).collect();
        let mut out = Vec::new();
        if self.delta_power >= 0 {
            for _ in 0..self.delta_power {
                out.extend(delta.iter().cloned());
            }
        } else {
            let inv: Vec<Letter> = delta.iter().rev().map(Letter::inverted).collect();
            for _ in 0..(-self.delta_power) {
                out.extend(inv.iter().cloned());
            }
        }
        for s in &self.simples {
            out.extend(s.letters().map(|l| Letter::new(gens[l as usize].clone())));
        }
        Word::from_letters(out)
    }
}

impl fmt::Display for GarsideNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&["a".to_string(), "b".to_string()]))
    }
}

/// The dihedral Artin group `D_m` on two named generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralGroup {
    m: u32,
    gens: [String; 2],
}

impl DihedralGroup {
    pub fn new(m: u32, a: &str, b: &str) -> Result<Self, DihedralError> {
        if m < 2 {
            return Err(DihedralError::LabelTooSmall(m));
        }
        if a == b {
            return Err(DihedralError::SameGenerators);
        }
        Ok(DihedralGroup { m, gens: [a.to_string(), b.to_string()] })
    }

    /// `D_m` on generators `a` and `b`.
    pub fn standard(m: u32) -> Result<Self, DihedralError> {
        Self::new(m, "a", "b")
    }

    pub fn label(&self) -> u32 {
        self.m
    }

    pub fn gens(&self) -> &[String; 2] {
        &self.gens
    }

    fn index(&self, l: &Letter) -> Result<u8, DihedralError> {
        if l.name == self.gens[0] {
            Ok(0)
        } else if l.name == self.gens[1] {
            Ok(1)
        } else {
            Err(DihedralError::LetterOutside { letter: l.name.clone(), gens: self.gens.clone() })
        }
    }

    /// The Garside element `Δ = (a,b)_m`.
    pub fn delta(&self) -> Word {
        crate::word::alternating_word(&self.gens[0], &self.gens[1], self.m as usize).expect("generators are distinct")
    }

    pub fn normal_form(&self, w: &Word) -> Result<GarsideNF, DihedralError> {
        let mut nf = GarsideNF::identity(self.m);
        for l in w.letters() {
            let g = self.index(l)?;
            if l.inverse {
                nf.push_inverse(g);
            } else {
                nf.push_letter(g);
            }
        }
        debug_assert!(nf.is_left_weighted());
        Ok(nf)
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool, DihedralError> {
        Ok(self.normal_form(u)? == self.normal_form(v)?)
    }

    /// Whether `u` and `v` commute in `D_m`.
    pub fn commutes(&self, u: &Word, v: &Word) -> Result<bool, DihedralError> {
        Ok(self.normal_form(&Word::commutator(u, v))?.is_identity())
    }

    /// Stable text key of the element.
    pub fn key(&self, w: &Word) -> Result<String, DihedralError> {
        Ok(self.normal_form(w)?.render(&self.gens))
    }
}

/// Garside normal form of `w` in `D_m` over generators `a`, `b`.
pub fn garside_nf(m: u32, w: &Word) -> Result<GarsideNF, DihedralError> {
    DihedralGroup::standard(m)?.normal_form(w)
}

/// Whether `u` and `v` commute in `D_m` over generators `a`, `b`.
pub fn dihedral_commutes(m: u32, u: &Word, v: &Word) -> Result<bool, DihedralError> {
    DihedralGroup::standard(m)?.commutes(u, v)
}

/// The coset of `w` modulo the index-`n` normal subgroup
/// `H_n = <x^n, a, x a x^-1, ...>` of `D_{2n}`, where `x = ab`: the exponent
/// sum of `b`, reduced mod `n`.
pub fn hn_coset(n: u32, w: &Word) -> Result<u32, DihedralError> {
    if n == 0 {
        return Err(DihedralError::ZeroIndex);
    }
    let group = DihedralGroup::standard(2 * n)?;
    let mut sum: i64 = 0;
    for l in w.letters() {
        if group.index(l)? == 1 {
            sum += l.exponent();
        }
    }
    Ok(sum.rem_euclid(i64::from(n)) as u32)
}
