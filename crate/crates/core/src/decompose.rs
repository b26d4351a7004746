//! Elementary decomposition of clean Artin graphs.
//!
//! A graph with no forbidden induced subgraph splits recursively: connected
//! components give free products, a vertex joined to every other vertex by
//! label-2 edges splits off a direct `Z` factor, and what remains at the
//! bottom is a single vertex (`Z`) or a single edge labeled `p > 2`
//! (the dihedral Artin group `D_p`).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::detector::{find_forbidden, ForbiddenPattern};
use crate::graph::{ArtinGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("graph contains the forbidden pattern {0}")]
    PoisonousGraph(ForbiddenPattern),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("not elementary: {0}")]
    NotElementary(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum DecompositionTree {
    Trivial,
    Z { vertex: String },
    Dihedral { label: u32, vertices: [String; 2] },
    FreeProduct { children: Vec<DecompositionTree> },
    DirectZ { vertex: String, child: Box<DecompositionTree> },
}

/// The declaration-order-least vertex joined to every other vertex by a
/// label-2 edge.
pub fn find_central_vertex(g: &ArtinGraph) -> Option<VertexId> {
    let n = g.vertex_count();
    (0..n).find(|&v| (0..n).all(|u| u == v || g.commute(u, v)))
}

/// Decomposes `g` into free products and direct products with `Z` of `Z`
/// and dihedral leaves. Fails with [`DecomposeError::PoisonousGraph`] when
/// `g` contains a forbidden pattern.
pub fn decompose(g: &ArtinGraph) -> Result<DecompositionTree, DecomposeError> {
    if let Some(p) = find_forbidden(g) {
        return Err(DecomposeError::PoisonousGraph(p));
    }
    build(g).map_err(|e| match e {
        DecomposeError::NotElementary(msg) => DecomposeError::InternalContradiction(msg),
        e => e,
    })
}

/// Runs the component / central-vertex recursion without consulting the
/// pattern detector. Fails with [`DecomposeError::NotElementary`] when some
/// stage is connected, has no central vertex and is not a single labeled
/// edge.
pub fn decompose_structural(g: &ArtinGraph) -> Result<DecompositionTree, DecomposeError> {
    build(g)
}

fn build(g: &ArtinGraph) -> Result<DecompositionTree, DecomposeError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(DecompositionTree::Trivial);
    }
    let comps = g.components();
    if comps.len() > 1 {
        let children = comps.iter().map(|c| build(&g.induced(c))).collect::<Result<Vec<_>, _>>()?;
        return Ok(DecompositionTree::FreeProduct { children });
    }
    if n == 1 {
        return Ok(DecompositionTree::Z { vertex: g.name(0).to_string() });
    }
    if n == 2 {
        let m = g.label(0, 1).expect("connected two-vertex graph has its edge");
        if m > 2 {
            return Ok(DecompositionTree::Dihedral {
                label: m,
                vertices: [g.name(0).to_string(), g.name(1).to_string()],
            });
        }
    }
    check_link_structure(g)?;
    match find_central_vertex(g) {
        Some(c) => {
            Ok(DecompositionTree::DirectZ { vertex: g.name(c).to_string(), child: Box::new(build(&g.without(c))?) })
        }
        None => Err(DecomposeError::NotElementary(format!(
            "connected graph on {:?} has no central vertex",
            g.vertex_names()
        ))),
    }
}

/// For every edge `{x, y}` with label `p > 2` in a clean connected graph,
/// the common neighbours `L` of `x` and `y` must be pairwise joined by
/// label-2 edges, and every edge from `L` to the remaining vertices must
/// have label 2.
pub fn check_link_structure(g: &ArtinGraph) -> Result<(), DecomposeError> {
    let n = g.vertex_count();
    for (x, y, p) in g.edges() {
        if p <= 2 {
            continue;
        }
        let link: Vec<VertexId> =
            (0..n).filter(|&v| v != x && v != y && g.is_adjacent(v, x) && g.is_adjacent(v, y)).collect();
        for (i, &l1) in link.iter().enumerate() {
            for &l2 in &link[i + 1..] {
                if !g.commute(l1, l2) {
                    return Err(DecomposeError::NotElementary(format!(
                        "link of {{{}, {}}} is not complete with label 2 at {{{}, {}}}",
                        g.name(x),
                        g.name(y),
                        g.name(l1),
                        g.name(l2)
                    )));
                }
            }
        }
        for &l in &link {
            for f in 0..n {
                if f == x || f == y || link.contains(&f) {
                    continue;
                }
                if let Some(k) = g.label(l, f) {
                    if k != 2 {
                        return Err(DecomposeError::NotElementary(format!(
                            "edge {{{}, {}}} between link and rest has label {k}",
                            g.name(l),
                            g.name(f)
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

impl DecompositionTree {
    /// Vertices covered by the leaves and central nodes, in tree order.
    pub fn vertices(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_vertices(&mut out);
        out
    }

    fn collect_vertices<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            DecompositionTree::Trivial => {}
            DecompositionTree::Z { vertex } => out.push(vertex),
            DecompositionTree::Dihedral { vertices, .. } => out.extend(vertices.iter().map(String::as_str)),
            DecompositionTree::FreeProduct { children } => {
                for c in children {
                    c.collect_vertices(out);
                }
            }
            DecompositionTree::DirectZ { vertex, child } => {
                out.push(vertex);
                child.collect_vertices(out);
            }
        }
    }

    /// Checks the structural invariants of a decomposition of `g`: the
    /// tree's vertices partition the graph, central vertices commute with
    /// everything left at their stage, free factors are the connected
    /// components, and dihedral leaves carry the graph's label.
    pub fn verify(&self, g: &ArtinGraph) -> Result<(), String> {
        let mut seen: Vec<&str> = self.vertices();
        seen.sort_unstable();
        let mut expected: Vec<&str> = g.vertex_names().iter().map(String::as_str).collect();
        expected.sort_unstable();
        if seen != expected {
            return Err(format!("tree vertices {seen:?} do not partition {expected:?}"));
        }
        self.verify_stage(g)
    }

    fn verify_stage(&self, g: &ArtinGraph) -> Result<(), String> {
        match self {
            DecompositionTree::Trivial => {
                if g.is_empty() {
                    Ok(())
                } else {
                    Err("trivial node over a non-empty graph".into())
                }
            }
            DecompositionTree::Z { vertex } => {
                if g.vertex_names() == [vertex.clone()] {
                    Ok(())
                } else {
                    Err(format!("Z leaf {vertex} over {:?}", g.vertex_names()))
                }
            }
            DecompositionTree::Dihedral { label, vertices } => {
                if g.vertex_count() == 2 && g.label_by_name(&vertices[0], &vertices[1]) == Some(*label) && *label > 2 {
                    Ok(())
                } else {
                    Err(format!("dihedral leaf {vertices:?} does not match graph"))
                }
            }
            DecompositionTree::FreeProduct { children } => {
                let comps = g.components();
                if comps.len() != children.len() || children.len() < 2 {
                    return Err("free factors do not match components".into());
                }
                for (comp, child) in comps.iter().zip(children) {
                    let sub = g.induced(comp);
                    let mut names: Vec<&str> = child.vertices();
                    names.sort_unstable();
                    let mut want: Vec<&str> = sub.vertex_names().iter().map(String::as_str).collect();
                    want.sort_unstable();
                    if names != want {
                        return Err(format!("free factor {names:?} is not component {want:?}"));
                    }
                    child.verify_stage(&sub)?;
                }
                Ok(())
            }
            DecompositionTree::DirectZ { vertex, child } => {
                let c = g.index_of(vertex).ok_or_else(|| format!("central vertex {vertex} not in stage"))?;
                if (0..g.vertex_count()).any(|u| u != c && !g.commute(u, c)) {
                    return Err(format!("{vertex} is not central"));
                }
                child.verify_stage(&g.without(c))
            }
        }
    }

    /// Text rendering such as `Z × F_2` or `Z^2 × (F_2 ∗ D_3)`.
    pub fn describe(&self) -> String {
        self.render().0
    }

    // Returns the text and whether it is atomic (needs no parentheses).
    fn render(&self) -> (String, bool) {
        match self {
            DecompositionTree::Trivial => ("1".into(), true),
            DecompositionTree::Z { .. } => ("Z".into(), true),
            DecompositionTree::Dihedral { label, .. } => (format!("D_{label}"), true),
            DecompositionTree::FreeProduct { children } => {
                let free_rank = children.iter().filter(|c| matches!(c, DecompositionTree::Z { .. })).count();
                let mut parts = Vec::new();
                match free_rank {
                    0 => {}
                    1 => parts.push("Z".to_string()),
                    k => parts.push(format!("F_{k}")),
                }
                for c in children {
                    if matches!(c, DecompositionTree::Z { .. }) {
                        continue;
                    }
                    parts.push(parenthesize(c.render()));
                }
                let atomic = parts.len() == 1;
                (parts.join(" ∗ "), atomic)
            }
            DecompositionTree::DirectZ { .. } => {
                let mut k = 0;
                let mut node = self;
                while let DecompositionTree::DirectZ { child, .. } = node {
                    k += 1;
                    node = child;
                }
                let base = match node {
                    DecompositionTree::Z { .. } => "F_1".to_string(),
                    other => parenthesize(other.render()),
                };
                let head = if k == 1 { "Z".to_string() } else { format!("Z^{k}") };
                (format!("{head} × {base}"), false)
            }
        }
    }

    /// Graphviz rendering of the tree.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph decomposition {\n  node [shape=box];\n");
        let mut counter = 0;
        self.dot_node(&mut out, &mut counter);
        out.push_str("}\n");
        out
    }

    fn dot_node(&self, out: &mut String, counter: &mut usize) -> usize {
        let id = *counter;
        *counter += 1;
        let label = match self {
            DecompositionTree::Trivial => "1".to_string(),
            DecompositionTree::Z { vertex } => format!("Z ({vertex})"),
            DecompositionTree::Dihedral { label, vertices } => {
                format!("D_{label} ({}, {})", vertices[0], vertices[1])
            }
            DecompositionTree::FreeProduct { .. } => "∗".to_string(),
            DecompositionTree::DirectZ { vertex, .. } => format!("Z ({vertex}) ×"),
        };
        let _ = writeln!(out, "  n{id} [label=\"{label}\"];");
        let children: Vec<&DecompositionTree> = match self {
            DecompositionTree::FreeProduct { children } => children.iter().collect(),
            DecompositionTree::DirectZ { child, .. } => vec![child.as_ref()],
            _ => Vec::new(),
        };
        for c in children {
            let cid = c.dot_node(out, counter);
            let _ = writeln!(out, "  n{id} -> n{cid};");
        }
        id
    }
}

fn parenthesize((text, atomic): (String, bool)) -> String {
    if atomic {
        text
    } else {
        format!("({text})")
    }
}
