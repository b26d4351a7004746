//! Python bindings for `artin-core`.
//!
//! Words are passed as strings in the CLI word syntax (`"a b' a"`), graphs
//! as [`Graph`] objects. Structured results (verdicts, trees, witnesses,
//! membership results) come back as plain dicts with the same shape as the
//! CLI's JSON output.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde_json::Value;

use artin_core::oracle::OracleError;
use artin_core::{
    alternating_word, classify as core_classify, decompose as core_decompose, find_forbidden as core_find_forbidden,
    make_witness, member_rational as core_member_rational, member_submonoid as core_member_submonoid, verify_witness,
    ArtinGraph, CleanContext, DecomposeError, DihedralGroup, GroupContext, RaagContext, RationalExpr, VertexSet, Word,
};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn parse_word(text: &str, names: &[String]) -> PyResult<Word> {
    Word::parse_with(text, names).map_err(value_error)
}

fn parse_ab(text: &str) -> PyResult<Word> {
    parse_word(text, &["a".to_string(), "b".to_string()])
}

/// A labeled Artin graph.
///
///     g = Graph("vertex a\nvertex b\nedge a b 3")
#[pyclass(name = "Graph", frozen, module = "artin", from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: ArtinGraph,
}

#[pymethods]
impl PyGraph {
    /// Parses the text format: `vertex <name>`, `edge <u> <v> [<m>]`, `#` comments.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        ArtinGraph::parse(text).map(|inner| PyGraph { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn from_file(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path).map_err(value_error)?;
        Self::new(&text)
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.vertex_names().to_vec()
    }

    /// `(u, v, m)` for every edge, in declaration order of `u` then `v`.
    #[getter]
    fn edges(&self) -> Vec<(String, String, u32)> {
        let g = &self.inner;
        g.edges().map(|(i, j, m)| (g.name(i).to_string(), g.name(j).to_string(), m)).collect()
    }

    /// Label of the edge `{u, v}`, or `None` if there is no edge.
    fn label(&self, u: &str, v: &str) -> PyResult<Option<u32>> {
        for x in [u, v] {
            if self.inner.index_of(x).is_none() {
                return Err(PyValueError::new_err(format!("unknown vertex `{x}`")));
            }
        }
        Ok(self.inner.label_by_name(u, v))
    }

    fn induced(&self, vertices: Vec<String>) -> PyResult<Self> {
        let inner = self.inner.induced_subgraph(&VertexSet::new(vertices)).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    fn is_right_angled(&self) -> bool {
        self.inner.is_right_angled()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot(&[])
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __repr__(&self) -> String {
        format!("Graph({} vertices, {} edges)", self.inner.vertex_count(), self.inner.edge_count())
    }
}

/// Verdict for the three problems, with evidence, as a dict.
#[pyfunction]
fn classify<'py>(py: Python<'py>, graph: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let v = core_classify(&graph.inner).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    to_py(py, &v.to_json())
}

/// The first forbidden induced subgraph as a dict, or `None` if the graph is clean.
#[pyfunction]
fn find_forbidden<'py>(py: Python<'py>, graph: &PyGraph) -> PyResult<Option<Bound<'py, PyAny>>> {
    core_find_forbidden(&graph.inner)
        .map(|p| to_py(py, &serde_json::to_value(p).expect("patterns serialize")))
        .transpose()
}

/// `{"tree": ..., "description": ...}`; raises `ValueError` on poisonous graphs.
#[pyfunction]
fn decompose<'py>(py: Python<'py>, graph: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let tree = core_decompose(&graph.inner).map_err(|e| match e {
        DecomposeError::PoisonousGraph(_) => value_error(e),
        e => PyRuntimeError::new_err(e.to_string()),
    })?;
    let v = serde_json::json!({ "tree": tree, "description": tree.describe() });
    to_py(py, &v)
}

/// Verified witness report for the graph's first forbidden pattern.
#[pyfunction]
fn witness<'py>(py: Python<'py>, graph: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let g = &graph.inner;
    let pat = core_find_forbidden(g).ok_or_else(|| PyValueError::new_err("graph has no forbidden pattern"))?;
    let report = make_witness(g, &pat)
        .and_then(|r| verify_witness(g, &r))
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    to_py(py, &report.to_json())
}

#[pyfunction]
#[pyo3(name = "alternating_word")]
fn py_alternating_word(u: &str, v: &str, m: usize) -> PyResult<String> {
    alternating_word(u, v, m).map(|w| w.to_string()).map_err(value_error)
}

#[pyfunction]
fn free_reduce(word: &str) -> PyResult<String> {
    Ok(Word::parse(word).map_err(value_error)?.free_reduce().to_string())
}

/// Garside normal form in `D_m` on generators `a`, `b`, e.g. `"Δ^1 · b"`.
#[pyfunction]
fn garside_nf(m: u32, word: &str) -> PyResult<String> {
    let d = DihedralGroup::standard(m).map_err(value_error)?;
    let nf = d.normal_form(&parse_ab(word)?).map_err(value_error)?;
    Ok(nf.render(d.gens()))
}

#[pyfunction]
fn dihedral_commutes(m: u32, u: &str, v: &str) -> PyResult<bool> {
    artin_core::dihedral_commutes(m, &parse_ab(u)?, &parse_ab(v)?).map_err(value_error)
}

#[pyfunction]
fn hn_coset(n: u32, word: &str) -> PyResult<u32> {
    artin_core::hn_coset(n, &parse_ab(word)?).map_err(value_error)
}

/// Canonical form of `word` in a right-angled Artin group.
#[pyfunction]
fn raag_reduce(graph: &PyGraph, word: &str) -> PyResult<String> {
    let ctx = RaagContext::new(graph.inner.clone()).map_err(value_error)?;
    let w = parse_word(word, graph.inner.vertex_names())?;
    Ok(ctx.reduce(&w).map_err(value_error)?.to_string())
}

fn clean(graph: &PyGraph) -> PyResult<CleanContext> {
    CleanContext::new(graph.inner.clone()).map_err(value_error)
}

/// Canonical key of `word` in a clean Artin group.
#[pyfunction]
fn normal_key(graph: &PyGraph, word: &str) -> PyResult<String> {
    let w = parse_word(word, graph.inner.vertex_names())?;
    clean(graph)?.normal_key(&w).map_err(value_error)
}

#[pyfunction]
fn elementary_equal(graph: &PyGraph, w1: &str, w2: &str) -> PyResult<bool> {
    let names = graph.inner.vertex_names();
    let (u, v) = (parse_word(w1, names)?, parse_word(w2, names)?);
    clean(graph)?.equal(&u, &v).map_err(value_error)
}

fn oracle_error(e: OracleError) -> PyErr {
    match e {
        OracleError::Certificate(_) => PyRuntimeError::new_err(e.to_string()),
        e => value_error(e),
    }
}

/// Bounded search for `target` in the submonoid generated by `gens`.
#[pyfunction]
#[pyo3(signature = (graph, gens, target, bound = 10))]
fn member_submonoid<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    gens: Vec<String>,
    target: &str,
    bound: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let ctx = GroupContext::from_graph(graph.inner.clone()).map_err(oracle_error)?;
    let names = ctx.generators();
    let gens = gens.iter().map(|g| parse_word(g, &names)).collect::<PyResult<Vec<_>>>()?;
    let target = parse_word(target, &names)?;
    let res = core_member_submonoid(&ctx, &gens, &target, bound).map_err(oracle_error)?;
    to_py(py, &res.to_json())
}

/// Bounded search for `target` in the rational subset described by `expr`.
#[pyfunction]
#[pyo3(signature = (graph, expr, target, bound = 10))]
fn member_rational<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    expr: &str,
    target: &str,
    bound: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let ctx = GroupContext::from_graph(graph.inner.clone()).map_err(oracle_error)?;
    let names = ctx.generators();
    let expr = RationalExpr::parse_with(expr, &names).map_err(oracle_error)?;
    let target = parse_word(target, &names)?;
    let res = core_member_rational(&ctx, &expr, &target, bound).map_err(oracle_error)?;
    to_py(py, &res.to_json())
}

#[pymodule]
fn artin(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(find_forbidden, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(py_alternating_word, m)?)?;
    m.add_function(wrap_pyfunction!(free_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(garside_nf, m)?)?;
    m.add_function(wrap_pyfunction!(dihedral_commutes, m)?)?;
    m.add_function(wrap_pyfunction!(hn_coset, m)?)?;
    m.add_function(wrap_pyfunction!(raag_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(normal_key, m)?)?;
    m.add_function(wrap_pyfunction!(elementary_equal, m)?)?;
    m.add_function(wrap_pyfunction!(member_submonoid, m)?)?;
    m.add_function(wrap_pyfunction!(member_rational, m)?)?;
    Ok(())
}
