//! Forbidden induced subgraphs and the membership verdict.
//!
//! An Artin group has decidable submonoid membership, decidable rational
//! subset membership, and is subgroup separable exactly when its graph has
//! none of these induced subgraphs:
//!
//! * `P4`, `C4` with all labels 2;
//! * chordal squares: a label-2 square with one chord labeled `p > 2`, or
//!   with both chords labeled `p, q > 2`;
//! * a 3-vertex path with labels `m + n > 4`;
//! * a triangle with at most one label equal to 2.
//!
//! The scan is brute force over 3-subsets then 4-subsets in lexicographic
//! vertex order, so the first hit is deterministic and smallest.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::decompose::{decompose, DecomposeError, DecompositionTree};
use crate::graph::{ArtinGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    P4,
    C4,
    ChordalSquareP,
    ChordalSquarePQ,
    Path3,
    Triangle,
}

impl PatternKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PatternKind::P4 => "P4",
            PatternKind::C4 => "C4",
            PatternKind::ChordalSquareP => "ChordalSquareP",
            PatternKind::ChordalSquarePQ => "ChordalSquarePQ",
            PatternKind::Path3 => "Path3",
            PatternKind::Triangle => "Triangle",
        }
    }
}

/// A forbidden labeled induced subgraph, with vertices in role order:
///
/// * `P4`: path order, the lesser endpoint first.
/// * `C4`: cycle order from the least vertex towards its lesser neighbour.
/// * `ChordalSquareP`: cycle `a b c d` with the chord on `{b, d}`.
/// * `ChordalSquarePQ`: cycle `a b c d`, chords `{a, c}` and `{b, d}`;
///   labels are `[label(a,c), label(b,d)]`.
/// * `Path3`: `a b c` with `b` the middle vertex and `a < c`; labels
///   `[label(a,b), label(b,c)]`.
/// * `Triangle`: `a b c` with `label(a,b) <= label(b,c) <= label(a,c)`;
///   labels `[l, m, n]` sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ForbiddenPattern {
    #[serde(rename = "type")]
    pub kind: PatternKind,
    pub vertices: Vec<String>,
    pub labels: Vec<u32>,
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}", self.kind.as_str(), self.vertices.join(","))?;
        if !self.labels.is_empty() {
            let labels: Vec<String> = self.labels.iter().map(u32::to_string).collect();
            write!(f, "; {}", labels.join(","))?;
        }
        f.write_str(")")
    }
}

impl ForbiddenPattern {
    /// Vertex ids in `g`, in role order.
    pub fn vertex_ids(&self, g: &ArtinGraph) -> Option<Vec<VertexId>> {
        self.vertices.iter().map(|v| g.index_of(v)).collect()
    }

    /// Re-derives the pattern from the subgraph `g` induces on its
    /// vertices and checks it matches exactly.
    pub fn validate(&self, g: &ArtinGraph) -> bool {
        let Some(ids) = self.vertex_ids(g) else {
            return false;
        };
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != ids.len() {
            return false;
        }
        match_subset(g, &sorted).as_ref() == Some(self)
    }

    /// Which poisonous right-angled Artin group the pattern carries.
    pub fn poison(&self) -> &'static str {
        match self.kind {
            PatternKind::P4 | PatternKind::Path3 | PatternKind::Triangle => "A(P4)",
            PatternKind::C4 | PatternKind::ChordalSquareP | PatternKind::ChordalSquarePQ => "A(C4)",
        }
    }
}

fn pattern(g: &ArtinGraph, kind: PatternKind, ids: &[VertexId], labels: Vec<u32>) -> ForbiddenPattern {
    ForbiddenPattern { kind, vertices: ids.iter().map(|&v| g.name(v).to_string()).collect(), labels }
}

/// Classifies a sorted 3- or 4-vertex subset.
pub(crate) fn match_subset(g: &ArtinGraph, ids: &[VertexId]) -> Option<ForbiddenPattern> {
    match ids.len() {
        3 => match_three(g, [ids[0], ids[1], ids[2]]),
        4 => match_four(g, [ids[0], ids[1], ids[2], ids[3]]),
        _ => None,
    }
}

fn match_three(g: &ArtinGraph, s: [VertexId; 3]) -> Option<ForbiddenPattern> {
    let edges: Vec<(VertexId, VertexId)> =
        [(s[0], s[1]), (s[0], s[2]), (s[1], s[2])].into_iter().filter(|&(u, v)| g.is_adjacent(u, v)).collect();
    match edges.len() {
        2 => {
            let mid = *s
                .iter()
                .find(|&&v| edges.iter().all(|&(x, y)| x == v || y == v))
                .expect("two edges on three vertices share a vertex");
            let mut ends: Vec<VertexId> = s.iter().copied().filter(|&v| v != mid).collect();
            ends.sort_unstable();
            let m = g.label(ends[0], mid)?;
            let n = g.label(mid, ends[1])?;
            (m + n > 4).then(|| pattern(g, PatternKind::Path3, &[ends[0], mid, ends[1]], vec![m, n]))
        }
        3 => {
            let mut best: Option<([VertexId; 3], [u32; 3])> = None;
            for [a, b, c] in permutations3(s) {
                let l = g.label(a, b)?;
                let m = g.label(b, c)?;
                let n = g.label(a, c)?;
                if l <= m && m <= n && best.is_none_or(|(order, _)| [a, b, c] < order) {
                    best = Some(([a, b, c], [l, m, n]));
                }
            }
            let (order, labels) = best?;
            (labels[1] > 2).then(|| pattern(g, PatternKind::Triangle, &order, labels.to_vec()))
        }
        _ => None,
    }
}

fn permutations3(s: [VertexId; 3]) -> [[VertexId; 3]; 6] {
    let [x, y, z] = s;
    [[x, y, z], [x, z, y], [y, x, z], [y, z, x], [z, x, y], [z, y, x]]
}

fn match_four(g: &ArtinGraph, s: [VertexId; 4]) -> Option<ForbiddenPattern> {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let label = |i: usize, j: usize| g.label(s[i], s[j]);
    let present: Vec<(usize, usize)> = pairs.into_iter().filter(|&(i, j)| label(i, j).is_some()).collect();
    let twos: Vec<(usize, usize)> = present.iter().copied().filter(|&(i, j)| label(i, j) == Some(2)).collect();
    let degree = |v: usize, es: &[(usize, usize)]| es.iter().filter(|&&(i, j)| i == v || j == v).count();

    match present.len() {
        3 if twos.len() == 3 => {
            let degs: Vec<usize> = (0..4).map(|v| degree(v, &twos)).collect();
            if degs.iter().filter(|&&d| d == 1).count() != 2 || degs.contains(&0) {
                return None;
            }
            // Walk the path from its lesser endpoint.
            let start = (0..4).find(|&v| degs[v] == 1)?;
            let order = walk(start, &twos, 4)?;
            let ids: Vec<VertexId> = order.iter().map(|&i| s[i]).collect();
            Some(pattern(g, PatternKind::P4, &ids, vec![]))
        }
        4 if twos.len() == 4 => {
            if (0..4).any(|v| degree(v, &twos) != 2) {
                return None;
            }
            let order = cycle_order(&twos)?;
            let ids: Vec<VertexId> = order.iter().map(|&i| s[i]).collect();
            Some(pattern(g, PatternKind::C4, &ids, vec![]))
        }
        5 if twos.len() == 4 => {
            let (mx, my) = pairs.into_iter().find(|&(i, j)| label(i, j).is_none())?;
            let rest: Vec<usize> = (0..4).filter(|&v| v != mx && v != my).collect();
            let p = label(rest[0], rest[1])?;
            if p <= 2 {
                return None;
            }
            let ids = [s[mx], s[rest[0]], s[my], s[rest[1]]];
            Some(pattern(g, PatternKind::ChordalSquareP, &ids, vec![p]))
        }
        6 if twos.len() == 4 => {
            if (0..4).any(|v| degree(v, &twos) != 2) {
                return None;
            }
            let chords: Vec<(usize, usize)> = present.iter().copied().filter(|e| !twos.contains(e)).collect();
            // Vertex 0 is the least; its chord partner sits opposite.
            let (_, c) = *chords.iter().find(|&&(i, _)| i == 0)?;
            let rest: Vec<usize> = (1..4).filter(|&v| v != c).collect();
            let (b, d) = (rest[0], rest[1]);
            let p = label(0, c)?;
            let q = label(b, d)?;
            Some(pattern(g, PatternKind::ChordalSquarePQ, &[s[0], s[b], s[c], s[d]], vec![p, q]))
        }
        _ => None,
    }
}

fn walk(start: usize, edges: &[(usize, usize)], len: usize) -> Option<Vec<usize>> {
    let mut order = vec![start];
    while order.len() < len {
        let cur = *order.last()?;
        let next = edges
            .iter()
            .filter_map(|&(i, j)| {
                if i == cur {
                    Some(j)
                } else if j == cur {
                    Some(i)
                } else {
                    None
                }
            })
            .filter(|v| !order.contains(v))
            .min()?;
        order.push(next);
    }
    Some(order)
}

fn cycle_order(edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    walk(0, edges, 4)
}

/// First forbidden pattern in scan order: all 3-subsets in lexicographic
/// order, then all 4-subsets.
pub fn find_forbidden(g: &ArtinGraph) -> Option<ForbiddenPattern> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if let Some(p) = match_three(g, [a, b, c]) {
                    return Some(p);
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if let Some(p) = match_four(g, [a, b, c, d]) {
                        return Some(p);
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decidability {
    Decidable,
    Undecidable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Pattern(ForbiddenPattern),
    Decomposition(DecompositionTree),
}

/// Answer to the rational subset membership, submonoid membership and
/// subgroup separability questions for one Artin group. The three answers
/// always coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub rational_subset: Decidability,
    pub submonoid: Decidability,
    pub subgroup_separable: Decidability,
    pub evidence: Evidence,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn is_decidable(&self) -> bool {
        self.rational_subset == Decidability::Decidable
    }

    pub fn fields_agree(&self) -> bool {
        self.rational_subset == self.submonoid && self.submonoid == self.subgroup_separable
    }

    pub fn to_json(&self) -> Value {
        let evidence = match &self.evidence {
            Evidence::Pattern(p) => json!({
                "type": p.kind.as_str(),
                "vertices": p.vertices,
                "labels": p.labels,
            }),
            Evidence::Decomposition(t) => json!({
                "decomposition": t,
                "description": t.describe(),
            }),
        };
        json!({
            "problems": {
                "rational_subset": self.rational_subset,
                "submonoid": self.submonoid,
                "subgroup_separable": self.subgroup_separable,
            },
            "evidence": evidence,
            "notes": self.notes,
        })
    }
}

/// Decides all three problems for `A(g)`. An error means the decomposer
/// failed on a graph the detector found clean, which is a bug.
pub fn classify(g: &ArtinGraph) -> Result<Verdict, DecomposeError> {
    if let Some(p) = find_forbidden(g) {
        let notes = vec![
            format!("{} is an induced subgraph, so A(Γ) contains {}", p, p.poison()),
            "Mikhailova: A(C4) = F2 × F2 contains a subgroup where membership is undecidable".to_string(),
            "Lohrey–Steinberg: A(P4) and A(C4) contain a submonoid where membership is undecidable".to_string(),
            "a group containing A(P4) or A(C4) is not subgroup separable".to_string(),
        ];
        return Ok(Verdict {
            rational_subset: Decidability::Undecidable,
            submonoid: Decidability::Undecidable,
            subgroup_separable: Decidability::Undecidable,
            evidence: Evidence::Pattern(p),
            notes,
        });
    }
    let tree = match decompose(g) {
        Ok(t) => t,
        Err(DecomposeError::PoisonousGraph(p)) => {
            return Err(DecomposeError::InternalContradiction(format!(
                "decomposer found {p} on a graph the detector accepted"
            )))
        }
        Err(e) => return Err(e),
    };
    let notes = vec![
        format!("A(Γ) ≅ {} is elementary", tree.describe()),
        "Z and dihedral Artin groups have decidable rational subset membership".to_string(),
        "the class is closed under free products and direct products with Z".to_string(),
    ];
    Ok(Verdict {
        rational_subset: Decidability::Decidable,
        submonoid: Decidability::Decidable,
        subgroup_separable: Decidability::Decidable,
        evidence: Evidence::Decomposition(tree),
        notes,
    })
}
