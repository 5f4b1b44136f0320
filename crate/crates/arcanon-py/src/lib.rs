//! Python bindings: a thin wrapper over the arcanon crate exposing graph
//! construction, recognition, canonical strings and isomorphism.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use arcanon::model::graph_of_model;
use arcanon::{canonizer, graphfile, oracle};

fn pyerr(e: arcanon::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An undirected graph with 1-based vertex ids and optional vertex colors.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: arcanon::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges = vec![]))]
    fn new(n: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        Ok(Graph {
            inner: arcanon::Graph::from_edges(n, &edges).map_err(pyerr)?,
        })
    }

    /// Parse the `p ca <n> <m>` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: graphfile::parse_graph(text).map_err(pyerr)?,
        })
    }

    fn add_edge(&mut self, u: u32, v: u32) -> PyResult<()> {
        self.inner.add_edge(u, v).map_err(pyerr)
    }

    fn set_color(&mut self, v: u32, color: u64) -> PyResult<()> {
        self.inner.set_color(v, color).map_err(pyerr)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges()
    }

    /// Relabel vertices; `perm[v-1]` is the new id of vertex v.
    fn permuted(&self, perm: Vec<u32>) -> PyResult<Self> {
        if perm.len() != self.inner.n() {
            return Err(PyValueError::new_err("permutation length must equal n"));
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p == 0 || p as usize > perm.len() || seen[p as usize - 1] {
                return Err(PyValueError::new_err("not a permutation of 1..n"));
            }
            seen[p as usize - 1] = true;
        }
        Ok(Graph {
            inner: self.inner.permuted(&perm),
        })
    }

    /// True iff the graph is a circular-arc graph.
    #[pyo3(signature = (k_max = canonizer::DEFAULT_K_MAX))]
    fn recognize(&self, k_max: usize) -> PyResult<bool> {
        canonizer::recognize(&self.inner, k_max).map_err(pyerr)
    }

    /// The canonical token string, or None for non-CA graphs.
    #[pyo3(signature = (k_max = canonizer::DEFAULT_K_MAX))]
    fn canonical_string(&self, k_max: usize) -> PyResult<Option<String>> {
        canonizer::canonical_string(&self.inner, k_max).map_err(pyerr)
    }

    fn to_text(&self) -> String {
        graphfile::write_graph(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

/// Isomorphism of two circular-arc graphs; raises for non-CA inputs.
#[pyfunction]
#[pyo3(signature = (a, b, k_max = canonizer::DEFAULT_K_MAX))]
fn isomorphic(a: &Graph, b: &Graph, k_max: usize) -> PyResult<bool> {
    canonizer::isomorphic(&a.inner, &b.inner, k_max).map_err(pyerr)
}

/// Brute-force recognition ground truth for small graphs.
#[pyfunction]
#[pyo3(signature = (g, limit = oracle::DEFAULT_LIMIT))]
fn oracle_is_ca(g: &Graph, limit: usize) -> PyResult<bool> {
    oracle::oracle_is_ca(&g.inner, limit).map_err(pyerr)
}

/// A random circular-arc graph: the intersection graph of a seeded random
/// arc model on n arcs.
#[pyfunction]
fn random_ca_graph(n: usize, seed: u64) -> PyResult<Graph> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    let rep = arcanon::Representation::identity(oracle::random_model(n, seed));
    Ok(Graph {
        inner: graph_of_model(&rep),
    })
}

#[pymodule]
fn arcanon_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_is_ca, m)?)?;
    m.add_function(wrap_pyfunction!(random_ca_graph, m)?)?;
    Ok(())
}
