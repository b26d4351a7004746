//! Explicit poisonous subgroups for forbidden patterns.
//!
//! Each forbidden pattern yields four ambient words that generate a copy
//! of `A(P4)` or `A(C4)`. Verification checks the defining relations of
//! the target: every pair of words on a target edge must commute. Each
//! such pair lives in a parabolic subgroup on at most two vertices, which
//! is free, free abelian, or dihedral, so the check never needs a word
//! problem for the ambient group. Injectivity is a cited theorem and is
//! not checked here.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::detector::{ForbiddenPattern, PatternKind};
use crate::dihedral::DihedralGroup;
use crate::graph::ArtinGraph;
use crate::raag::RaagContext;
use crate::word::{alternating_word, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("pattern {0} does not match the graph")]
    PatternMismatch(ForbiddenPattern),
    #[error("words {0} and {1} span {2} generators; only 2-generator parabolics can be checked")]
    UnsupportedVerification(String, String, usize),
    #[error("checked pairs do not form the target graph's edge set")]
    ShapeMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Target {
    P4,
    C4,
}

impl Target {
    /// Edges of the target graph with vertices numbered in path or cycle order.
    pub fn edges(self) -> Vec<(usize, usize)> {
        match self {
            Target::P4 => vec![(0, 1), (1, 2), (2, 3)],
            Target::C4 => vec![(0, 1), (1, 2), (2, 3), (3, 0)],
        }
    }
}

/// One claimed commutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    /// Target vertices, as indices into the assignment.
    pub edge: (usize, usize),
    /// Generators used by the two words, in declaration order.
    pub support: Vec<String>,
    /// Label of the support edge; `None` for a single generator or a
    /// non-edge (free pair).
    pub label: Option<u32>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub pattern: ForbiddenPattern,
    pub target: Target,
    /// `(role, word)` per target vertex, in path or cycle order.
    pub assignment: Vec<(String, Word)>,
    pub checks: Vec<Check>,
    pub citation: String,
    pub verified: bool,
}

fn sq(v: &str) -> (String, Word) {
    (format!("{v}^2"), Word::power_of(v, 2))
}

fn centre_sq(u: &str, v: &str, m: u32) -> (String, Word) {
    let z = alternating_word(u, v, m as usize).expect("pattern vertices are distinct");
    (format!("z({u},{v})^2"), z.pow(2))
}

/// Builds the witness assignment for `pat`, which must be a pattern of `g`.
/// Checks are created unverified; see [`verify_witness`].
pub fn make_witness(g: &ArtinGraph, pat: &ForbiddenPattern) -> Result<WitnessReport, WitnessError> {
    if !pat.validate(g) {
        return Err(WitnessError::PatternMismatch(pat.clone()));
    }
    let v: Vec<&str> = pat.vertices.iter().map(String::as_str).collect();
    let (target, assignment, citation) = match pat.kind {
        PatternKind::P4 | PatternKind::C4 => {
            let target = if pat.kind == PatternKind::P4 { Target::P4 } else { Target::C4 };
            let assignment = v.iter().map(|&x| (x.to_string(), Word::power_of(x, 1))).collect();
            (
                target,
                assignment,
                "the parabolic subgroup on an induced subgraph of a right-angled Artin group is a retract, \
                 so the identity assignment is injective",
            )
        }
        PatternKind::ChordalSquareP | PatternKind::ChordalSquarePQ => (
            Target::C4,
            v.iter().map(|&x| sq(x)).collect(),
            "Crisp–Paris (Tits conjecture): squares of the vertices generate the right-angled Artin group \
             whose edges are the label-2 edges",
        ),
        PatternKind::Path3 => {
            let (mut a, b, mut c) = (v[0], v[1], v[2]);
            let (mut m, mut n) = (pat.labels[0], pat.labels[1]);
            if m > n {
                std::mem::swap(&mut a, &mut c);
                std::mem::swap(&mut m, &mut n);
            }
            (
                Target::P4,
                vec![centre_sq(a, b, m), sq(b), centre_sq(b, c, n), sq(c)],
                "Jankiewicz–Schreve: z_ab^2, b^2, z_bc^2, c^2 generate a copy of A(P4) when m <= n and m + n > 4",
            )
        }
        PatternKind::Triangle => {
            let (b, c) = (v[1], v[2]);
            let (m, n) = (pat.labels[1], pat.labels[2]);
            (
                Target::P4,
                vec![sq(b), centre_sq(b, c, m), sq(c), centre_sq(c, v[0], n)],
                "Jankiewicz–Schreve: b^2, z_bc^2, c^2, z_ac^2 generate a copy of A(P4) when at most one label is 2",
            )
        }
    };
    let checks = target
        .edges()
        .into_iter()
        .map(|edge| Check { edge, support: Vec::new(), label: None, verified: false })
        .collect();
    Ok(WitnessReport {
        pattern: pat.clone(),
        target,
        assignment,
        checks,
        citation: citation.to_string(),
        verified: false,
    })
}

/// Checks every target-edge commutation inside its 2-generator parabolic.
pub fn verify_witness(g: &ArtinGraph, r: &WitnessReport) -> Result<WitnessReport, WitnessError> {
    if !r.pattern.validate(g) {
        return Err(WitnessError::PatternMismatch(r.pattern.clone()));
    }
    let mut checked: Vec<(usize, usize)> = r.checks.iter().map(|c| c.edge).collect();
    let mut want = r.target.edges();
    checked.sort_unstable();
    want.sort_unstable();
    if checked != want || r.assignment.len() != 4 {
        return Err(WitnessError::ShapeMismatch);
    }

    let mut out = r.clone();
    for check in &mut out.checks {
        let (w1, w2) = (&r.assignment[check.edge.0].1, &r.assignment[check.edge.1].1);
        let mut support: Vec<usize> = w1
            .concat(w2)
            .support()
            .into_iter()
            .map(|name| g.index_of(name).ok_or(WitnessError::PatternMismatch(r.pattern.clone())))
            .collect::<Result<_, _>>()?;
        support.sort_unstable();
        check.support = support.iter().map(|&v| g.name(v).to_string()).collect();
        check.verified = match support.as_slice() {
            [] | [_] => {
                check.label = None;
                true
            }
            &[u, v] => {
                check.label = g.label(u, v);
                match check.label {
                    Some(p) if p > 2 => {
                        DihedralGroup::new(p, g.name(u), g.name(v)).and_then(|d| d.commutes(w1, w2)).unwrap_or(false)
                    }
                    _ => RaagContext::new(g.induced(&[u, v])).and_then(|ctx| ctx.commutes(w1, w2)).unwrap_or(false),
                }
            }
            more => return Err(WitnessError::UnsupportedVerification(w1.to_string(), w2.to_string(), more.len())),
        };
    }
    out.verified = out.checks.iter().all(|c| c.verified);
    Ok(out)
}

impl WitnessReport {
    pub fn to_json(&self) -> Value {
        let assignment: Vec<Value> =
            self.assignment.iter().map(|(role, w)| json!({ "role": role, "word": w.to_string() })).collect();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "edge": [self.assignment[c.edge.0].0, self.assignment[c.edge.1].0],
                    "support": c.support,
                    "label": c.label,
                    "verified": c.verified,
                })
            })
            .collect();
        json!({
            "pattern": self.pattern,
            "target": self.target,
            "assignment": assignment,
            "checks": checks,
            "citation": self.citation,
            "verified": self.verified,
            "sketch": self.sketch(),
        })
    }

    /// Human-readable account of each check.
    pub fn sketch(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} contains {:?} via:", self.pattern, self.target);
        for (role, w) in &self.assignment {
            let _ = writeln!(out, "  {role} = {w}");
        }
        for c in &self.checks {
            let (r1, r2) = (&self.assignment[c.edge.0].0, &self.assignment[c.edge.1].0);
            let group = match (c.support.len(), c.label) {
                (0 | 1, _) => "a cyclic group".to_string(),
                (_, Some(p)) if p > 2 => format!("D_{p} on {{{}}}", c.support.join(", ")),
                (_, Some(_)) => format!("Z^2 on {{{}}}", c.support.join(", ")),
                (_, None) => format!("F_2 on {{{}}}", c.support.join(", ")),
            };
            let status = if c.verified { "commute" } else { "DO NOT commute" };
            let _ = writeln!(out, "  {r1} and {r2} {status} in {group}");
        }
        let _ = writeln!(out, "  injectivity: {}", self.citation);
        out
    }
}
