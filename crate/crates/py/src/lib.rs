//! Python bindings. Integers cross the boundary as Python ints of arbitrary size.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use friezelab::cc;
use friezelab::chebyshev;
use friezelab::cluster;
use friezelab::fixtures;
use friezelab::frieze;
use friezelab::laurent::{self, make_vars};
use friezelab::rep;
use friezelab::reproduce;
use friezelab::theta;

create_exception!(friezelab, FriezelabError, PyException);

fn err<E: Into<friezelab::Error>>(e: E) -> PyErr {
    let e: friezelab::Error = e.into();
    FriezelabError::new_err(format!("{}: {}", e.kind(), e))
}

#[pyclass(name = "LaurentPoly", module = "friezelab", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyLaurent(laurent::LaurentPoly);

#[pymethods]
impl PyLaurent {
    /// Parse `text` as a Laurent polynomial in the named variables.
    #[staticmethod]
    fn parse(text: &str, variables: Vec<String>) -> PyResult<Self> {
        laurent::LaurentPoly::parse(text, &make_vars(&variables)).map(PyLaurent).map_err(err)
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.0.vars().iter().map(|v| v.to_string()).collect()
    }

    /// Terms as `(exponents, coefficient)` pairs.
    fn terms(&self) -> Vec<(Vec<i32>, BigInt)> {
        self.0.terms().map(|(e, c)| (e.0.clone(), c.clone())).collect()
    }

    fn at_ones(&self) -> BigInt {
        self.0.at_ones()
    }

    fn div_exact(&self, other: &PyLaurent) -> PyResult<Self> {
        self.0.div_exact(&other.0).map(PyLaurent).map_err(err)
    }

    fn __add__(&self, other: &PyLaurent) -> PyResult<Self> {
        self.0.try_add(&other.0).map(PyLaurent).map_err(err)
    }

    fn __sub__(&self, other: &PyLaurent) -> PyResult<Self> {
        self.0.try_sub(&other.0).map(PyLaurent).map_err(err)
    }

    fn __mul__(&self, other: &PyLaurent) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(PyLaurent).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly({:?})", self.0.to_string())
    }
}

#[pyclass(name = "Quiver", module = "friezelab", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyQuiver(cluster::Quiver);

#[pymethods]
impl PyQuiver {
    /// Build from vertex labels and `(tail, head)` index pairs; repeat a pair for multiple arrows.
    #[new]
    fn new(labels: Vec<String>, arrows: Vec<(usize, usize)>) -> PyResult<Self> {
        cluster::Quiver::from_arrows(&labels, &arrows).map(PyQuiver).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let json: cluster::QuiverJson = serde_json::from_str(text).map_err(err)?;
        json.to_quiver().map(|(q, _)| PyQuiver(q)).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0.to_json(&[])).expect("serializable")
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    #[getter]
    fn matrix(&self) -> Vec<Vec<i32>> {
        self.0.matrix().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.size()
    }

    fn index_of(&self, label: &str) -> PyResult<usize> {
        self.0.index_of(label).map_err(err)
    }

    fn mutate(&self, k: usize) -> PyResult<Self> {
        self.0.mutate(k).map(PyQuiver).map_err(err)
    }

    fn mutate_word(&self, word: Vec<usize>) -> PyResult<Self> {
        self.0.mutate_word(&word).map(PyQuiver).map_err(err)
    }

    fn is_isomorphic(&self, other: &PyQuiver) -> bool {
        cluster::canonical_form(&self.0) == cluster::canonical_form(&other.0)
    }

    fn double_arrows(&self) -> Vec<(usize, usize)> {
        self.0.double_arrows()
    }

    /// Size of the mutation class up to isomorphism, failing beyond `max_nodes`.
    #[pyo3(signature = (max_nodes = cluster::DEFAULT_MAX_NODES))]
    fn mutation_class_size(&self, max_nodes: usize) -> PyResult<usize> {
        cluster::mutation_class(&self.0, &[], max_nodes).map(|c| c.len()).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Quiver({})", self.0)
    }
}

#[pyclass(name = "Seed", module = "friezelab", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PySeed(cluster::Seed);

#[pymethods]
impl PySeed {
    /// The initial seed of a quiver, with variables named after its vertices.
    #[new]
    fn new(quiver: &PyQuiver) -> Self {
        PySeed(cluster::Seed::initial(&quiver.0))
    }

    #[getter]
    fn quiver(&self) -> PyQuiver {
        PyQuiver(self.0.quiver().clone())
    }

    #[getter]
    fn variables(&self) -> Vec<PyLaurent> {
        self.0.vars().iter().cloned().map(PyLaurent).collect()
    }

    fn mutate(&self, k: usize) -> PyResult<Self> {
        self.0.mutate(k).map(PySeed).map_err(err)
    }

    fn mutate_word(&self, word: Vec<usize>) -> PyResult<Self> {
        self.0.mutate_word(&word).map(PySeed).map_err(err)
    }

    /// The growth element at this seed, which needs a double arrow flanked by triangles.
    fn theta(&self) -> PyResult<(PyLaurent, BigInt)> {
        let t = theta::theta_at_seed(&self.0).map_err(err)?;
        Ok((PyLaurent(t.laurent), t.integer))
    }

    fn __repr__(&self) -> String {
        format!("Seed({})", self.0.quiver())
    }
}

#[pyclass(name = "Frieze", module = "friezelab", frozen)]
pub struct PyFrieze(frieze::FriezePattern);

#[pymethods]
impl PyFrieze {
    #[new]
    #[pyo3(signature = (quiddity, depth = None))]
    fn new(quiddity: Vec<BigInt>, depth: Option<usize>) -> PyResult<Self> {
        let q = frieze::Quiddity::new(quiddity).map_err(err)?;
        let depth = depth.unwrap_or_else(|| frieze::default_depth(q.period()));
        frieze::FriezePattern::generate(&q, depth).map(PyFrieze).map_err(err)
    }

    #[getter]
    fn quiddity(&self) -> Vec<BigInt> {
        self.0.quiddity().entries().to_vec()
    }

    #[getter]
    fn depth(&self) -> usize {
        self.0.depth()
    }

    /// Rows 1..=depth, each with one entry per position of the period.
    fn rows(&self) -> Vec<Vec<BigInt>> {
        self.0.rows()
    }

    fn growth(&self, k: usize) -> PyResult<BigInt> {
        self.0.growth(k).map_err(err)
    }

    fn growth_coefficients(&self, kmax: usize) -> PyResult<Vec<BigInt>> {
        self.0.growth_coefficients(kmax).map_err(err)
    }
}

#[pyclass(name = "QuiverRep", module = "friezelab", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyRep(rep::QuiverRep);

#[pymethods]
impl PyRep {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let json: rep::RepJson = serde_json::from_str(text).map_err(err)?;
        rep::QuiverRep::from_json(&json).map(PyRep).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0.to_json()).expect("serializable")
    }

    #[getter]
    fn dims(&self) -> Vec<u32> {
        self.0.dims().0.clone()
    }

    #[getter]
    fn quiver(&self) -> PyQuiver {
        PyQuiver(self.0.quiver().clone())
    }

    fn direct_sum(&self, other: &PyRep) -> PyResult<Self> {
        self.0.direct_sum(&other.0).map(PyRep).map_err(err)
    }
}

/// `[(e, chi)]` over all subdimension vectors with a nonempty Grassmannian.
#[pyfunction]
#[pyo3(signature = (m, primes = None))]
fn grassmannian_table(py: Python<'_>, m: &PyRep, primes: Option<Vec<u64>>) -> PyResult<Vec<(Vec<u32>, BigInt)>> {
    let t = py
        .detach(|| rep::grassmannian_table(&m.0, primes.as_deref()))
        .map_err(err)?;
    Ok(t.rows.into_iter().map(|r| (r.e.0, r.chi)).collect())
}

#[pyfunction]
fn euler_characteristic(m: &PyRep, e: Vec<u32>, primes: Vec<u64>) -> PyResult<BigInt> {
    rep::euler_characteristic(&m.0, &rep::DimVector(e), &primes).map(|(chi, _)| chi).map_err(err)
}

/// The Caldero-Chapoton value `(X_M, X_M at 1)`.
#[pyfunction]
fn cc_map(py: Python<'_>, m: &PyRep) -> PyResult<(PyLaurent, BigInt)> {
    let v = py.detach(|| cc::cc_map(&m.0)).map_err(err)?;
    Ok((PyLaurent(v.laurent), v.at_ones))
}

#[pyfunction]
fn quiddity_from_tube(tube: Vec<PyRep>) -> PyResult<Vec<BigInt>> {
    let reps: Vec<rep::QuiverRep> = tube.into_iter().map(|r| r.0).collect();
    cc::quiddity_from_tube(&reps).map(|q| q.entries().to_vec()).map_err(err)
}

/// Growth element of an affine quiver: `(theta, value at 1, mutation word)`.
#[pyfunction]
#[pyo3(signature = (quiver, max_nodes = cluster::DEFAULT_MAX_NODES))]
fn growth_from_affine_quiver(quiver: &PyQuiver, max_nodes: usize) -> PyResult<(PyLaurent, BigInt, Vec<usize>)> {
    let g = theta::growth_from_affine_quiver(&quiver.0, max_nodes).map_err(err)?;
    Ok((PyLaurent(g.theta.laurent), g.theta.integer, g.word))
}

#[pyfunction]
fn chebyshev_t(k: usize, x: BigInt) -> BigInt {
    chebyshev::chebyshev_t(k, &x)
}

#[pyfunction]
fn growth_via_homogeneous(x1: BigInt, k: usize) -> PyResult<BigInt> {
    cc::growth_via_homogeneous(&x1, k).map_err(err)
}

/// Whether the modular-group relations hold on the standard E-shaped seed with parameter `k`.
#[pyfunction]
fn modular_relations_hold(k: usize) -> PyResult<bool> {
    let q = cluster::EShape::standard_quiver(k).map_err(err)?;
    let action = cluster::ModularAction::new(&q).map_err(err)?;
    cluster::check_relations(&action, &cluster::Seed::initial(&q)).map(|r| r.all_hold()).map_err(err)
}

#[pyfunction]
fn fixture_quiver(name: &str) -> PyResult<PyQuiver> {
    let q = match name {
        "d4" => fixtures::d4_quiver(),
        "e6" => fixtures::e6_quiver(),
        "e7" => fixtures::e7_star(),
        "e8" => fixtures::e8_star(),
        "kronecker" => fixtures::kronecker_quiver(),
        _ => return Err(FriezelabError::new_err(format!("unknown fixture quiver {name:?}"))),
    };
    Ok(PyQuiver(q))
}

/// Built-in representations: `m_lambda`, `m_degenerate`, `kronecker_regular`.
#[pyfunction]
#[pyo3(signature = (name, parameter = 2))]
fn fixture_rep(name: &str, parameter: i64) -> PyResult<PyRep> {
    let m = match name {
        "m_lambda" => fixtures::m_lambda(parameter),
        "m_degenerate" => fixtures::m_degenerate(),
        "kronecker_regular" => fixtures::kronecker_regular(parameter),
        _ => return Err(FriezelabError::new_err(format!("unknown fixture representation {name:?}"))),
    };
    Ok(PyRep(m))
}

#[pyfunction]
fn d4_tube(i: usize) -> PyResult<Vec<PyRep>> {
    if !(1..=3).contains(&i) {
        return Err(FriezelabError::new_err("tube index must be 1, 2 or 3"));
    }
    Ok(fixtures::d4_tube(i).into_iter().map(PyRep).collect())
}

/// Run the end-to-end checks against the shipped fixtures; one dict per check.
#[pyfunction]
#[pyo3(signature = (only = Vec::new(), fixtures_dir = None))]
fn run_checks<'py>(py: Python<'py>, only: Vec<String>, fixtures_dir: Option<String>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let dir = fixtures_dir.map(Into::into).unwrap_or_else(fixtures::default_dir);
    let results = py.detach(|| reproduce::run(&dir, &only));
    results
        .into_iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("name", r.name)?;
            d.set_item("group", r.group)?;
            d.set_item("passed", r.passed)?;
            d.set_item("detail", r.detail)?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
#[pyo3(name = "friezelab")]
fn friezelab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("FriezelabError", m.py().get_type::<FriezelabError>())?;
    m.add_class::<PyLaurent>()?;
    m.add_class::<PyQuiver>()?;
    m.add_class::<PySeed>()?;
    m.add_class::<PyFrieze>()?;
    m.add_class::<PyRep>()?;
    m.add_function(wrap_pyfunction!(grassmannian_table, m)?)?;
    m.add_function(wrap_pyfunction!(euler_characteristic, m)?)?;
    m.add_function(wrap_pyfunction!(cc_map, m)?)?;
    m.add_function(wrap_pyfunction!(quiddity_from_tube, m)?)?;
    m.add_function(wrap_pyfunction!(growth_from_affine_quiver, m)?)?;
    m.add_function(wrap_pyfunction!(chebyshev_t, m)?)?;
    m.add_function(wrap_pyfunction!(growth_via_homogeneous, m)?)?;
    m.add_function(wrap_pyfunction!(modular_relations_hold, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_quiver, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_rep, m)?)?;
    m.add_function(wrap_pyfunction!(d4_tube, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    Ok(())
}
