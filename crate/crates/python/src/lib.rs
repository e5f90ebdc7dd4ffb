use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use zdg::harness::{rows_to_string, Format, Oracle};
use zdg::{AuditFinding, ZdgError};

fn to_py_err(e: ZdgError) -> PyErr {
    match e {
        ZdgError::ResourceLimit(_) => PyRuntimeError::new_err(e.to_string()),
        ZdgError::Usage(_) | ZdgError::NoZeroDivisors(_) => PyValueError::new_err(e.to_string()),
    }
}

fn parse_oracle(name: &str) -> PyResult<Oracle> {
    match name {
        "flow" => Ok(Oracle::Flow),
        "exhaustive" => Ok(Oracle::Exhaustive),
        other => Err(PyValueError::new_err(format!(
            "oracle must be 'flow' or 'exhaustive', got {other:?}"
        ))),
    }
}

fn parse_format(name: &str) -> PyResult<Format> {
    match name {
        "csv" => Ok(Format::Csv),
        "json" => Ok(Format::Json),
        other => Err(PyValueError::new_err(format!(
            "format must be 'csv' or 'json', got {other:?}"
        ))),
    }
}

fn factorization(n: u64) -> PyResult<zdg::Factorization> {
    zdg::factorize(n).map_err(to_py_err)
}

fn finding_dict<'py>(py: Python<'py>, row: &AuditFinding) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("n", row.n)?;
    d.set_item("factorization", &row.factorization)?;
    d.set_item("vertices", row.vertices)?;
    d.set_item("edges", row.edges)?;
    d.set_item("delta", row.delta)?;
    d.set_item("kappa_e", row.kappa_e)?;
    d.set_item("kappa", row.kappa)?;
    d.set_item("pred_delta", row.pred_delta)?;
    d.set_item("pred_kappa_e", row.pred_kappa_e)?;
    d.set_item("pred_kappa", row.pred_kappa)?;
    d.set_item("tags", row.tags.as_deref())?;
    d.set_item("match", row.is_match)?;
    d.set_item("skip_reason", row.skip_reason.map(|r| r.to_string()))?;
    Ok(d)
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
#[pyfunction]
fn factorize(n: u64) -> PyResult<Vec<(u64, u32)>> {
    Ok(factorization(n)?.factors().to_vec())
}

#[pyfunction]
fn totient(n: u64) -> PyResult<u64> {
    Ok(factorization(n)?.totient())
}

#[pyfunction]
fn divisors(n: u64) -> PyResult<Vec<u64>> {
    Ok(factorization(n)?.divisors())
}

/// Explicit zero divisor graph of Z_n.
#[pyclass(frozen, name = "ZeroDivisorGraph")]
struct PyZeroDivisorGraph {
    inner: zdg::ZeroDivisorGraph,
}

#[pymethods]
impl PyZeroDivisorGraph {
    #[new]
    fn new(py: Python<'_>, n: u64) -> PyResult<Self> {
        let inner = py.detach(|| zdg::build_explicit(n)).map_err(to_py_err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn n(&self) -> u64 {
        self.inner.n()
    }

    #[getter]
    fn vertices(&self) -> Vec<u64> {
        self.inner.vertices().to_vec()
    }

    #[getter]
    fn edges(&self) -> Vec<(u64, u64)> {
        self.inner.edge_labels().collect()
    }

    #[getter]
    fn num_edges(&self) -> usize {
        self.inner.num_edges()
    }

    fn __len__(&self) -> usize {
        self.inner.num_vertices()
    }

    fn __repr__(&self) -> String {
        format!(
            "ZeroDivisorGraph(n={}, vertices={}, edges={})",
            self.inner.n(),
            self.inner.num_vertices(),
            self.inner.num_edges()
        )
    }

    fn neighbors(&self, v: u64) -> PyResult<Vec<u64>> {
        self.inner
            .neighbor_labels(v)
            .ok_or_else(|| PyValueError::new_err(format!("{v} is not a vertex")))
    }

    fn min_degree(&self) -> usize {
        zdg::min_degree(&self.inner)
    }

    fn is_connected(&self) -> bool {
        zdg::is_connected(&self.inner)
    }

    /// `(kappa, witness vertex cut)`
    fn vertex_connectivity(&self, py: Python<'_>) -> (usize, Vec<u64>) {
        let cut = py.detach(|| zdg::vertex_connectivity(&self.inner));
        (cut.value, cut.vertices)
    }

    /// `(kappa_e, witness edge cut)`
    fn edge_connectivity(&self, py: Python<'_>) -> (usize, Vec<(u64, u64)>) {
        let cut = py.detach(|| zdg::edge_connectivity(&self.inner));
        (cut.value, cut.edges)
    }

    #[pyo3(signature = (budget = zdg::DEFAULT_EXHAUSTIVE_BUDGET))]
    fn exhaustive_vertex_connectivity(&self, py: Python<'_>, budget: u64) -> PyResult<usize> {
        py.detach(|| zdg::exhaustive_vertex_connectivity(&self.inner, budget))
            .map_err(to_py_err)
    }

    #[pyo3(signature = (budget = zdg::DEFAULT_EXHAUSTIVE_BUDGET))]
    fn exhaustive_edge_connectivity(&self, py: Python<'_>, budget: u64) -> PyResult<usize> {
        py.detach(|| zdg::exhaustive_edge_connectivity(&self.inner, budget))
            .map_err(to_py_err)
    }

    fn is_vertex_cut(&self, cut: Vec<u64>) -> bool {
        zdg::is_vertex_cut(&self.inner, &cut)
    }

    fn is_edge_cut(&self, cut: Vec<(u64, u64)>) -> bool {
        zdg::is_edge_cut(&self.inner, &cut)
    }

    #[pyo3(signature = (color_classes = false))]
    fn to_dot(&self, color_classes: bool) -> String {
        zdg::export_dot(&self.inner, color_classes)
    }
}

/// Divisor-class quotient of the zero divisor graph of Z_n.
#[pyclass(frozen, name = "CompressedZdg")]
struct PyCompressedZdg {
    inner: zdg::CompressedZdg,
}

#[pymethods]
impl PyCompressedZdg {
    #[new]
    fn new(n: u64) -> PyResult<Self> {
        Ok(Self {
            inner: zdg::build_compressed(n).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> u64 {
        self.inner.n()
    }

    /// `(divisor, size, self_saturated)` per class
    #[getter]
    fn classes(&self) -> Vec<(u64, u64, bool)> {
        self.inner
            .classes()
            .iter()
            .map(|c| (c.divisor, c.size, c.self_saturated))
            .collect()
    }

    #[getter]
    fn adjacency(&self) -> Vec<(u64, u64)> {
        self.inner.adjacency()
    }

    #[getter]
    fn num_vertices(&self) -> u64 {
        self.inner.num_vertices()
    }

    /// `(divisor, size, degree)` per class
    fn degree_profile(&self) -> Vec<(u64, u64, u64)> {
        zdg::degree_profile(&self.inner).class_degrees
    }

    fn min_degree(&self) -> Option<u64> {
        zdg::degree_profile(&self.inner).min_degree()
    }

    fn edge_count(&self) -> u64 {
        zdg::degree_profile(&self.inner).edge_count()
    }

    fn __repr__(&self) -> String {
        format!(
            "CompressedZdg(n={}, classes={})",
            self.inner.n(),
            self.inner.classes().len()
        )
    }
}

/// `(value, theorem tag)`
#[pyfunction]
fn predict_vertex_connectivity(n: u64) -> PyResult<(u64, String)> {
    let p = zdg::predict_vertex_connectivity(&factorization(n)?).map_err(to_py_err)?;
    Ok((p.value, p.tag.to_string()))
}

#[pyfunction]
fn predict_edge_connectivity(n: u64) -> PyResult<(u64, String)> {
    let p = zdg::predict_edge_connectivity(&factorization(n)?).map_err(to_py_err)?;
    Ok((p.value, p.tag.to_string()))
}

#[pyfunction]
fn predict_min_degree(n: u64) -> PyResult<(u64, String)> {
    let p = zdg::predict_min_degree(&factorization(n)?).map_err(to_py_err)?;
    Ok((p.value, p.tag.to_string()))
}

#[pyfunction]
fn witness_cut(n: u64) -> PyResult<Vec<u64>> {
    zdg::witness_cut(&factorization(n)?).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (n, oracle = "flow"))]
fn analyze<'py>(py: Python<'py>, n: u64, oracle: &str) -> PyResult<Bound<'py, PyDict>> {
    let oracle = parse_oracle(oracle)?;
    let row = py.detach(|| zdg::analyze(n, oracle));
    finding_dict(py, &row)
}

/// One dict per modulus in `start..=stop`.
#[pyfunction]
#[pyo3(signature = (start, stop, jobs = 1, oracle = "flow"))]
fn sweep<'py>(
    py: Python<'py>,
    start: u64,
    stop: u64,
    jobs: usize,
    oracle: &str,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let oracle = parse_oracle(oracle)?;
    let rows = py
        .detach(|| zdg::sweep(start, stop, jobs, oracle))
        .map_err(to_py_err)?;
    rows.iter().map(|r| finding_dict(py, r)).collect()
}

/// Sweep encoded exactly as the command line tool writes it.
#[pyfunction]
#[pyo3(signature = (start, stop, jobs = 1, oracle = "flow", format = "csv"))]
fn sweep_text(
    py: Python<'_>,
    start: u64,
    stop: u64,
    jobs: usize,
    oracle: &str,
    format: &str,
) -> PyResult<String> {
    let oracle = parse_oracle(oracle)?;
    let format = parse_format(format)?;
    let rows = py
        .detach(|| zdg::sweep(start, stop, jobs, oracle))
        .map_err(to_py_err)?;
    Ok(rows_to_string(&rows, format))
}

/// `(checked, mismatches, reported rows)`
#[pyfunction]
#[pyo3(signature = (start, stop, jobs = 1, oracle = "flow"))]
fn audit<'py>(
    py: Python<'py>,
    start: u64,
    stop: u64,
    jobs: usize,
    oracle: &str,
) -> PyResult<(usize, usize, Vec<Bound<'py, PyDict>>)> {
    let oracle = parse_oracle(oracle)?;
    let summary = py
        .detach(|| zdg::audit(start, stop, jobs, oracle))
        .map_err(to_py_err)?;
    let rows = summary
        .reported
        .iter()
        .map(|r| finding_dict(py, r))
        .collect::<PyResult<_>>()?;
    Ok((summary.checked, summary.mismatches, rows))
}

#[pymodule]
fn zdgraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyZeroDivisorGraph>()?;
    m.add_class::<PyCompressedZdg>()?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(totient, m)?)?;
    m.add_function(wrap_pyfunction!(divisors, m)?)?;
    m.add_function(wrap_pyfunction!(predict_vertex_connectivity, m)?)?;
    m.add_function(wrap_pyfunction!(predict_edge_connectivity, m)?)?;
    m.add_function(wrap_pyfunction!(predict_min_degree, m)?)?;
    m.add_function(wrap_pyfunction!(witness_cut, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_text, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    m.add("CSV_HEADER", zdg::harness::CSV_HEADER)?;
    Ok(())
}
