//! Labeled Artin graphs.
//!
//! A graph is a finite simplicial graph whose edges carry integer labels
//! `m >= 2`. An edge `{u, v}` labeled `m` stands for the relation
//! `(u,v)_m = (v,u)_m`; a missing edge means the two generators are free
//! of relations. Vertices are kept in declaration order, which is the
//! canonical total order used for every tie-break in the crate.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a vertex in declaration order.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("edge {{{u}, {v}}} has label {label}, labels must be at least 2")]
    LabelTooSmall { u: String, v: String, label: u64 },
    #[error("edge {{{u}, {v}}} declared with label {old} and again with label {new}")]
    ConflictingEdge { u: String, v: String, old: u32, new: u32 },
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("malformed statement: {0}")]
    Malformed(String),
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Box<GraphError>,
    },
}

/// A finite simplicial graph with edge labels `>= 2`.
#[derive(Clone, Default)]
pub struct ArtinGraph {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    // Dense symmetric label matrix; graphs here have a handful of vertices.
    labels: Vec<Vec<Option<u32>>>,
}

impl PartialEq for ArtinGraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.labels == other.labels
    }
}

impl Eq for ArtinGraph {}

impl fmt::Debug for ArtinGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArtinGraph").field("vertices", &self.names).field("edges", &self.edge_list()).finish()
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl ArtinGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from vertex names and `(u, v, label)` triples.
    pub fn from_parts<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, u32)]) -> Result<Self, GraphError> {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v.as_ref())?;
        }
        for (u, v, m) in edges {
            g.add_edge(u.as_ref(), v.as_ref(), *m)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId, GraphError> {
        if !valid_name(name) {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        if self.index.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        for row in &mut self.labels {
            row.push(None);
        }
        self.labels.push(vec![None; id + 1]);
        Ok(id)
    }

    /// Adds the edge `{u, v}` with label `m`. Re-adding an edge with the
    /// same label is a no-op.
    pub fn add_edge(&mut self, u: &str, v: &str, m: u32) -> Result<(), GraphError> {
        let i = self.require(u)?;
        let j = self.require(v)?;
        self.add_edge_ids(i, j, m)
    }

    pub fn add_edge_ids(&mut self, i: VertexId, j: VertexId, m: u32) -> Result<(), GraphError> {
        if i == j {
            return Err(GraphError::SelfLoop(self.names[i].clone()));
        }
        if m < 2 {
            return Err(GraphError::LabelTooSmall {
                u: self.names[i].clone(),
                v: self.names[j].clone(),
                label: u64::from(m),
            });
        }
        match self.labels[i][j] {
            Some(old) if old != m => {
                Err(GraphError::ConflictingEdge { u: self.names[i].clone(), v: self.names[j].clone(), old, new: m })
            }
            _ => {
                self.labels[i][j] = Some(m);
                self.labels[j][i] = Some(m);
                Ok(())
            }
        }
    }

    fn require(&self, name: &str) -> Result<VertexId, GraphError> {
        self.index_of(name).ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn label(&self, u: VertexId, v: VertexId) -> Option<u32> {
        self.labels[u][v]
    }

    pub fn label_by_name(&self, u: &str, v: &str) -> Option<u32> {
        let (i, j) = (self.index_of(u)?, self.index_of(v)?);
        self.label(i, j)
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.labels[u][v].is_some()
    }

    /// Whether `u` and `v` commute as generators, i.e. are joined by a
    /// label-2 edge.
    pub fn commute(&self, u: VertexId, v: VertexId) -> bool {
        self.labels[u][v] == Some(2)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.labels[v].iter().enumerate().filter_map(|(j, l)| l.map(|_| j))
    }

    /// Edges `(u, v, label)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, u32)> + '_ {
        let n = self.names.len();
        (0..n).flat_map(move |i| ((i + 1)..n).filter_map(move |j| self.labels[i][j].map(|m| (i, j, m))))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    fn edge_list(&self) -> Vec<(&str, &str, u32)> {
        self.edges().map(|(i, j, m)| (self.name(i), self.name(j), m)).collect()
    }

    /// True when every edge is labeled 2.
    pub fn is_right_angled(&self) -> bool {
        self.edges().all(|(_, _, m)| m == 2)
    }

    /// The subgraph induced on `ids`. The result keeps the relative
    /// declaration order of the chosen vertices regardless of the order of
    /// `ids`.
    pub fn induced(&self, ids: &[VertexId]) -> ArtinGraph {
        let mut sorted = ids.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut g = ArtinGraph::new();
        for &v in &sorted {
            g.add_vertex(&self.names[v]).expect("names are unique");
        }
        for (a, &u) in sorted.iter().enumerate() {
            for (b, &v) in sorted.iter().enumerate().skip(a + 1) {
                if let Some(m) = self.labels[u][v] {
                    g.add_edge_ids(a, b, m).expect("labels already validated");
                }
            }
        }
        g
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<ArtinGraph, GraphError> {
        let ids = s.resolve(self)?;
        Ok(self.induced(&ids))
    }

    /// The graph with vertex `v` deleted.
    pub fn without(&self, v: VertexId) -> ArtinGraph {
        let rest: Vec<_> = (0..self.vertex_count()).filter(|&u| u != v).collect();
        self.induced(&rest)
    }

    /// Connected components, each sorted, ordered by least member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Serializes to the line-oriented graph format accepted by [`ArtinGraph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            let _ = writeln!(out, "vertex {name}");
        }
        for (i, j, m) in self.edges() {
            if m == 2 {
                let _ = writeln!(out, "edge {} {}", self.names[i], self.names[j]);
            } else {
                let _ = writeln!(out, "edge {} {} {m}", self.names[i], self.names[j]);
            }
        }
        out
    }

    /// DOT rendering. Label-2 edges are drawn unlabeled. Vertices in
    /// `highlight` are filled and edges between them drawn bold.
    pub fn to_dot(&self, highlight: &[VertexId]) -> String {
        let mut out = String::from("graph artin {\n");
        for (v, name) in self.names.iter().enumerate() {
            if highlight.contains(&v) {
                let _ = writeln!(out, "  \"{name}\" [style=filled, fillcolor=red];");
            } else {
                let _ = writeln!(out, "  \"{name}\";");
            }
        }
        for (i, j, m) in self.edges() {
            let mut attrs = Vec::new();
            if m > 2 {
                attrs.push(format!("label=\"{m}\""));
            }
            if highlight.contains(&i) && highlight.contains(&j) {
                attrs.push("penwidth=3".to_string());
            }
            let attrs = if attrs.is_empty() { String::new() } else { format!(" [{}]", attrs.join(", ")) };
            let _ = writeln!(out, "  \"{}\" -- \"{}\"{attrs};", self.names[i], self.names[j]);
        }
        out.push_str("}\n");
        out
    }

    /// Parses the line-oriented graph format:
    ///
    /// ```text
    /// # comment
    /// vertex a
    /// vertex b
    /// edge a b 3
    /// edge a c        # label 2
    /// ```
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut g = ArtinGraph::new();
        for (lineno, raw) in text.lines().enumerate() {
            let at = |source: GraphError| GraphError::Parse { line: lineno + 1, source: Box::new(source) };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["vertex", name] => {
                    g.add_vertex(name).map_err(at)?;
                }
                ["edge", u, v] => g.add_edge(u, v, 2).map_err(at)?,
                ["edge", u, v, label] => {
                    let m: u64 = label
                        .parse()
                        .map_err(|_| at(GraphError::Malformed(format!("label `{label}` is not an integer"))))?;
                    if m < 2 {
                        return Err(at(GraphError::LabelTooSmall { u: u.to_string(), v: v.to_string(), label: m }));
                    }
                    let m = u32::try_from(m).map_err(|_| at(GraphError::Malformed(format!("label {m} too large"))))?;
                    g.add_edge(u, v, m).map_err(at)?;
                }
                _ => return Err(at(GraphError::Malformed(line.to_string()))),
            }
        }
        Ok(g)
    }
}

impl FromStr for ArtinGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Display for ArtinGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<String>,
    edges: Vec<(String, String, u32)>,
}

impl Serialize for ArtinGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            vertices: self.names.clone(),
            edges: self.edges().map(|(i, j, m)| (self.names[i].clone(), self.names[j].clone(), m)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ArtinGraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        ArtinGraph::from_parts(&repr.vertices, &repr.edges).map_err(serde::de::Error::custom)
    }
}

/// A set of vertex names, interpreted against a graph in its declaration
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexSet(Vec<String>);

impl VertexSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let mut v: Vec<String> = Vec::new();
        for n in names {
            let n = n.into();
            if !v.contains(&n) {
                v.push(n);
            }
        }
        VertexSet(v)
    }

    pub fn all(g: &ArtinGraph) -> Self {
        VertexSet(g.vertex_names().to_vec())
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.iter().any(|n| n == name)
    }

    /// Vertex ids in `g`, sorted in declaration order.
    pub fn resolve(&self, g: &ArtinGraph) -> Result<Vec<VertexId>, GraphError> {
        let mut ids = self.0.iter().map(|n| g.require(n)).collect::<Result<Vec<_>, _>>()?;
        ids.sort_unstable();
        Ok(ids)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_single_labeled_edge() {
        let g = ArtinGraph::parse("vertex a\nvertex b\nedge a b 3").unwrap();
        assert_eq!(g.vertex_names(), ["a", "b"]);
        assert_eq!(g.label(0, 1), Some(3));
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_single_vertex() {
        let g = ArtinGraph::parse("vertex a").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = ArtinGraph::parse("vertex a\nedge a a 2").unwrap_err();
        match err {
            GraphError::Parse { line, source } => {
                assert_eq!(line, 2);
                assert_eq!(*source, GraphError::SelfLoop("a".into()));
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("vertex a\nvertex a", 2, "duplicate vertex"),
            ("vertex a\nedge a b", 2, "unknown vertex"),
            ("vertex a\nvertex b\n\nedge a b 1", 4, "at least 2"),
            ("vertex a\nvertex b\nedge a b 3\nedge b a 4", 4, "again with label"),
            ("vertex a\nfoo bar", 2, "malformed"),
            ("vertex a\nvertex b\nedge a b x", 3, "not an integer"),
        ];
        for (text, line, needle) in cases {
            let err = ArtinGraph::parse(text).unwrap_err();
            let msg = err.to_string();
            assert!(msg.starts_with(&format!("line {line}:")), "{msg}");
            assert!(msg.contains(needle), "{msg}");
        }
    }

    #[test]
    fn repeated_edge_with_same_label_is_recorded_once() {
        let g = ArtinGraph::parse("vertex a\nvertex b\nedge a b 3\nedge b a 3").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn unlabeled_edge_defaults_to_two_and_comments_are_skipped() {
        let g = ArtinGraph::parse("# square\nvertex a  # first\nvertex b\nedge a b\n").unwrap();
        assert_eq!(g.label(0, 1), Some(2));
        assert!(g.is_right_angled());
    }

    #[test]
    fn induced_on_non_adjacent_pair() {
        let g = ArtinGraph::parse("vertex a\nvertex b\nvertex c\nvertex d\nedge a b\nedge b c\nedge c d").unwrap();
        let h = g.induced_subgraph(&VertexSet::new(["c", "a"])).unwrap();
        assert_eq!(h.vertex_names(), ["a", "c"]);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn induced_keeps_labels() {
        let g = ArtinGraph::parse("vertex a\nvertex b\nvertex c\nedge a b 2\nedge b c 3\nedge a c 4").unwrap();
        let h = g.induced_subgraph(&VertexSet::new(["b", "c"])).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1, 3)]);
    }

    #[test]
    fn induced_rejects_unknown_vertex() {
        let g = ArtinGraph::parse("vertex a").unwrap();
        assert_eq!(g.induced_subgraph(&VertexSet::new(["z"])).unwrap_err(), GraphError::UnknownVertex("z".into()));
    }

    #[test]
    fn components_in_declaration_order() {
        let g = ArtinGraph::parse("vertex a\nvertex b\nvertex c\nvertex d\nedge b d\nedge a c").unwrap();
        assert_eq!(g.components(), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn dot_labels_only_non_commuting_edges() {
        let g = ArtinGraph::parse("vertex a\nvertex b\nvertex c\nedge a b\nedge b c 5").unwrap();
        let dot = g.to_dot(&[]);
        assert!(dot.contains("\"a\" -- \"b\";"));
        assert!(dot.contains("\"b\" -- \"c\" [label=\"5\"];"));
    }

    #[test]
    fn json_round_trip() {
        let g = ArtinGraph::parse("vertex a\nvertex b\nedge a b 7").unwrap();
        let s = serde_json::to_string(&g).unwrap();
        let back: ArtinGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(g, back);
    }
}
