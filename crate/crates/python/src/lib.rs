//! Python bindings: digraphs, colorings, verification, the exact solver,
//! constructions and predictions.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde_json::Value;

use rcdc::constructions::{self, ColoredDigraph, Family, SubcycleOutcome};
use rcdc::report::ReportFamily;
use rcdc::{digraph, format, solver, verify as rainbow};

fn err(e: rcdc::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    match v {
        Value::Null => Ok(py.None()),
        Value::Bool(b) => b.into_py_any(py),
        Value::Number(n) => match n.as_u64() {
            Some(u) => u.into_py_any(py),
            None => n.as_f64().unwrap_or(f64::NAN).into_py_any(py),
        },
        Value::String(s) => s.into_py_any(py),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_py_any(py)
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, json_to_py(py, item)?)?;
            }
            dict.into_py_any(py)
        }
    }
}

/// A simple digraph on vertices `0..n` with arcs in insertion order.
#[pyclass(name = "Digraph", module = "pyrcdc", frozen)]
struct PyDigraph {
    inner: digraph::Digraph,
}

#[pymethods]
impl PyDigraph {
    #[new]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        digraph::Digraph::new(n, arcs)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    /// Parse the `digraph n m` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        format::parse_digraph(text)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    fn to_text(&self) -> String {
        format::write_digraph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.arc_count()
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs().to_vec()
    }

    fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.inner.has_arc(tail, head)
    }

    fn arc_index(&self, tail: usize, head: usize) -> Option<usize> {
        self.inner.arc_index(tail, head)
    }

    fn is_strongly_connected(&self) -> bool {
        self.inner.is_strongly_connected()
    }

    /// Shortest-path distances from `source`; `None` where unreachable.
    fn distances_from(&self, source: usize) -> PyResult<Vec<Option<usize>>> {
        self.inner.distances_from(source).map_err(err)
    }

    fn diameter(&self) -> PyResult<usize> {
        self.inner.diameter().map_err(err)
    }

    fn count_asymmetric_arcs(&self) -> usize {
        self.inner.count_asymmetric_arcs()
    }

    /// `(length, arcs)` of the union of all shortest `u -> v` paths.
    fn geodesic_dag(&self, u: usize, v: usize) -> PyResult<(usize, Vec<(usize, usize)>)> {
        let dag = self.inner.geodesic_dag(u, v).map_err(err)?;
        Ok((
            dag.length,
            dag.arcs.iter().map(|&a| self.inner.arc(a)).collect(),
        ))
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __repr__(&self) -> String {
        format!(
            "Digraph(n={}, m={})",
            self.inner.vertex_count(),
            self.inner.arc_count()
        )
    }
}

/// Colors `1..=num_colors`, one per arc, aligned with the digraph's arcs.
#[pyclass(name = "ArcColoring", module = "pyrcdc", frozen)]
struct PyArcColoring {
    inner: rainbow::ArcColoring,
}

#[pymethods]
impl PyArcColoring {
    #[new]
    #[pyo3(signature = (colors, num_colors=None))]
    fn new(colors: Vec<u32>, num_colors: Option<usize>) -> PyResult<Self> {
        let inner = match num_colors {
            Some(c) => rainbow::ArcColoring::new(colors, c),
            None => rainbow::ArcColoring::from_colors(colors),
        };
        inner.map(|inner| Self { inner }).map_err(err)
    }

    #[staticmethod]
    fn from_text(text: &str, digraph: &PyDigraph) -> PyResult<Self> {
        format::parse_coloring(text, &digraph.inner)
            .map(|inner| Self { inner })
            .map_err(err)
    }

    fn to_text(&self, digraph: &PyDigraph) -> String {
        format::write_coloring(&digraph.inner, &self.inner)
    }

    #[getter]
    fn colors(&self) -> Vec<u32> {
        self.inner.colors().to_vec()
    }

    #[getter]
    fn num_colors(&self) -> usize {
        self.inner.num_colors()
    }

    fn __repr__(&self) -> String {
        format!(
            "ArcColoring(m={}, c={})",
            self.inner.arc_count(),
            self.inner.num_colors()
        )
    }
}

fn parse_mode(mode: &str) -> PyResult<rainbow::Mode> {
    mode.parse().map_err(err)
}

fn colored(py: Python<'_>, c: ColoredDigraph) -> PyResult<Py<PyAny>> {
    (
        PyDigraph { inner: c.digraph },
        PyArcColoring { inner: c.coloring },
    )
        .into_py_any(py)
}

#[pyfunction]
fn circulant(n: usize, generators: Vec<usize>) -> PyResult<PyDigraph> {
    let spec = digraph::CirculantSpec::new(n, generators).map_err(err)?;
    Ok(PyDigraph {
        inner: digraph::make_circulant(&spec),
    })
}

#[pyfunction]
fn biorient(n: usize, edges: Vec<(usize, usize)>) -> PyResult<PyDigraph> {
    digraph::biorient(n, &edges)
        .map(|inner| PyDigraph { inner })
        .map_err(err)
}

#[pyfunction]
fn directed_cycle(n: usize) -> PyResult<PyDigraph> {
    digraph::directed_cycle(n)
        .map(|inner| PyDigraph { inner })
        .map_err(err)
}

/// `(H, coloring)` or, with `extra_arc`, `(D, coloring)`.
#[pyfunction]
#[pyo3(signature = (extra_arc=false))]
fn figure1(py: Python<'_>, extra_arc: bool) -> PyResult<Py<PyAny>> {
    colored(py, constructions::figure1(extra_arc))
}

/// Verification report as a dict with `verdict`, `failures` and, on
/// request, `witnesses`.
#[pyfunction]
#[pyo3(signature = (digraph, coloring, mode="strong", witnesses=false))]
fn verify(
    py: Python<'_>,
    digraph: &PyDigraph,
    coloring: &PyArcColoring,
    mode: &str,
    witnesses: bool,
) -> PyResult<Py<PyAny>> {
    let mode = parse_mode(mode)?;
    let report = py
        .detach(|| rainbow::verify(&digraph.inner, &coloring.inner, mode, witnesses))
        .map_err(err)?;
    json_to_py(
        py,
        &serde_json::to_value(report).expect("report serializes"),
    )
}

#[pyfunction]
fn exists_rainbow_path(
    digraph: &PyDigraph,
    coloring: &PyArcColoring,
    u: usize,
    v: usize,
) -> PyResult<Option<Vec<usize>>> {
    rainbow::exists_rainbow_path(&digraph.inner, &coloring.inner, u, v).map_err(err)
}

#[pyfunction]
fn exists_rainbow_geodesic(
    digraph: &PyDigraph,
    coloring: &PyArcColoring,
    u: usize,
    v: usize,
) -> PyResult<Option<Vec<usize>>> {
    rainbow::exists_rainbow_geodesic(&digraph.inner, &coloring.inner, u, v).map_err(err)
}

/// Exact `rc*` (`target="rc"`) or `src*` (`target="src"`).
///
/// Returns a dict with `status`, `value`, `lower`, `upper`, `nodes` and
/// `certificate` (an `ArcColoring` or `None`).
#[pyfunction]
#[pyo3(signature = (digraph, target="rc", budget=solver::DEFAULT_NODE_BUDGET, max_colors=rainbow::MAX_COLORS))]
fn solve(
    py: Python<'_>,
    digraph: &PyDigraph,
    target: &str,
    budget: u64,
    max_colors: usize,
) -> PyResult<Py<PyAny>> {
    let target: solver::Target = target.parse().map_err(err)?;
    let limits = solver::SolveLimits {
        max_colors,
        node_budget: budget,
        find_certificate: true,
    };
    let result = py
        .detach(|| solver::solve(&digraph.inner, target, &limits))
        .map_err(err)?;
    let dict = PyDict::new(py);
    dict.set_item("target", format!("{:?}", result.target).to_lowercase())?;
    dict.set_item(
        "status",
        serde_json::to_value(result.status)
            .expect("status serializes")
            .as_str(),
    )?;
    dict.set_item("value", result.value)?;
    dict.set_item("lower", result.lower)?;
    dict.set_item("upper", result.upper)?;
    dict.set_item("nodes", result.stats.nodes)?;
    dict.set_item(
        "certificate",
        result.certificate.map(|inner| PyArcColoring { inner }),
    )?;
    dict.into_py_any(py)
}

#[pyfunction]
#[pyo3(signature = (digraph, budget=solver::DEFAULT_NODE_BUDGET))]
fn exact_rc(py: Python<'_>, digraph: &PyDigraph, budget: u64) -> PyResult<Py<PyAny>> {
    solve(py, digraph, "rc", budget, rainbow::MAX_COLORS)
}

#[pyfunction]
#[pyo3(signature = (digraph, budget=solver::DEFAULT_NODE_BUDGET))]
fn exact_src(py: Python<'_>, digraph: &PyDigraph, budget: u64) -> PyResult<Py<PyAny>> {
    solve(py, digraph, "src", budget, rainbow::MAX_COLORS)
}

fn family_from_kwargs(name: &str, kwargs: Option<&Bound<'_, PyDict>>) -> PyResult<Family> {
    let mut obj = serde_json::Map::new();
    obj.insert("family".into(), Value::String(name.into()));
    if let Some(kwargs) = kwargs {
        for (k, v) in kwargs.iter() {
            let key: String = k.extract()?;
            let value = if let Ok(i) = v.extract::<u64>() {
                Value::from(i)
            } else if let Ok(s) = v.extract::<String>() {
                Value::from(s)
            } else if let Ok(list) = v.extract::<Vec<u64>>() {
                Value::from(list)
            } else {
                return Err(PyValueError::new_err(format!(
                    "unsupported value for {key}"
                )));
            };
            obj.insert(key, value);
        }
    }
    serde_json::from_value(Value::Object(obj))
        .map_err(|e| PyValueError::new_err(format!("bad family: {e}")))
}

/// Predicted values, e.g. `predict("interval", n=7, k=3)`.
#[pyfunction]
#[pyo3(signature = (family, **params))]
fn predict(
    py: Python<'_>,
    family: &str,
    params: Option<&Bound<'_, PyDict>>,
) -> PyResult<Py<PyAny>> {
    let prediction = constructions::predict(&family_from_kwargs(family, params)?);
    json_to_py(
        py,
        &serde_json::to_value(prediction).expect("prediction serializes"),
    )
}

/// `(digraph, coloring)` of a family's explicit construction, or `None`.
#[pyfunction]
#[pyo3(signature = (family, **params))]
fn construct(
    py: Python<'_>,
    family: &str,
    params: Option<&Bound<'_, PyDict>>,
) -> PyResult<Py<PyAny>> {
    match family_from_kwargs(family, params)?
        .construct()
        .map_err(err)?
    {
        Some(c) => colored(py, c),
        None => Ok(py.None()),
    }
}

/// Color the biorientation of `C_n` minus `missing`; raises when three or
/// more arcs are asymmetric.
#[pyfunction]
fn color_subcycle(py: Python<'_>, n: usize, missing: Vec<(usize, usize)>) -> PyResult<Py<PyAny>> {
    match constructions::color_subcycle(n, &missing).map_err(err)? {
        SubcycleOutcome::Colored(c) => colored(py, c),
        SubcycleOutcome::Refused {
            asymmetric, value, ..
        } => Err(PyValueError::new_err(format!(
            "{asymmetric} asymmetric arcs: rc* = src* = {value}"
        ))),
    }
}

#[pyfunction]
#[pyo3(signature = (family, max, budget=1_000_000))]
fn report_csv(py: Python<'_>, family: &str, max: usize, budget: u64) -> PyResult<String> {
    let family: ReportFamily = family.parse().map_err(PyValueError::new_err)?;
    py.detach(|| rcdc::report::report_csv(family, max, budget))
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pymodule]
fn pyrcdc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDigraph>()?;
    m.add_class::<PyArcColoring>()?;
    m.add_function(wrap_pyfunction!(circulant, m)?)?;
    m.add_function(wrap_pyfunction!(biorient, m)?)?;
    m.add_function(wrap_pyfunction!(directed_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(figure1, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(exists_rainbow_path, m)?)?;
    m.add_function(wrap_pyfunction!(exists_rainbow_geodesic, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(exact_rc, m)?)?;
    m.add_function(wrap_pyfunction!(exact_src, m)?)?;
    m.add_function(wrap_pyfunction!(predict, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(color_subcycle, m)?)?;
    m.add_function(wrap_pyfunction!(report_csv, m)?)?;
    Ok(())
}
