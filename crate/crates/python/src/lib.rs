//! Python bindings: the `Polynomial` type, Schur polynomials by every route,
//! partition helpers and the identity checks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use schurpath::identities::{self, VerifyArgs};
use schurpath::{combinat, symfun, CheckReport, Error, Partition, SchurMethod, SuiteConfig};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::TooLarge(_) | Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        Error::NotDivisible { .. } => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(py_err)
}

/// Exact polynomial with integer coefficients in x_i, y_i, a_i and t.
#[pyclass(name = "Polynomial", module = "schurpath", frozen, eq)]
#[derive(PartialEq)]
struct PyPolynomial(schurpath::Polynomial);

#[pymethods]
impl PyPolynomial {
    /// Parses canonical text such as "x1^2 - 2*x1*y1 + 3".
    #[new]
    #[pyo3(signature = (text = "0"))]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyPolynomial).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.0)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.to_string().hash(&mut h);
        h.finish()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyPolynomial(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyPolynomial(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyPolynomial(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        PyPolynomial(-&self.0)
    }

    fn __pow__(&self, exp: u32, modulo: Option<Py<PyAny>>) -> PyResult<Self> {
        if modulo.is_some() {
            return Err(PyValueError::new_err("modular powers are not supported"));
        }
        Ok(PyPolynomial(self.0.pow(exp)))
    }

    fn __bool__(&self) -> bool {
        !self.0.is_zero()
    }

    /// Total degree; -1 for the zero polynomial.
    fn degree(&self) -> i64 {
        self.0.degree()
    }

    fn num_terms(&self) -> usize {
        self.0.num_terms()
    }

    /// (monomial text, coefficient) pairs, leading term first.
    fn terms(&self) -> Vec<(String, BigInt)> {
        self.0
            .terms()
            .rev()
            .map(|(m, c)| (m.to_string(), c.clone()))
            .collect()
    }

    /// Quotient by a divisor that must divide exactly.
    fn exact_div(&self, divisor: &Self) -> PyResult<Self> {
        self.0
            .exact_div(&divisor.0)
            .map(PyPolynomial)
            .map_err(py_err)
    }

    /// Keeps the terms of total degree at most `cap`.
    fn truncate(&self, cap: u32) -> Self {
        PyPolynomial(self.0.truncate(cap))
    }

    /// Evaluates at integer values keyed by variable name ("x1", "t", ...).
    fn evaluate(&self, values: BTreeMap<String, BigInt>) -> PyResult<BigInt> {
        let mut point = BTreeMap::new();
        for (name, v) in values {
            let var = name
                .parse::<schurpath::Polynomial>()
                .ok()
                .and_then(|p| {
                    p.variables()
                        .first()
                        .copied()
                        .filter(|&v| p == schurpath::Polynomial::var(v))
                })
                .ok_or_else(|| PyValueError::new_err(format!("not a variable: {name:?}")))?;
            point.insert(var, v);
        }
        self.0.eval_int(&point).map_err(py_err)
    }
}

/// `S_λ(x_1..x_n)` by "tableaux", "jacobitrudi", "bialternant" or "lgv".
#[pyfunction]
#[pyo3(signature = (shape, n, method = "tableaux"))]
fn schur(shape: Vec<u32>, n: u32, method: &str) -> PyResult<PyPolynomial> {
    let method: SchurMethod = method.parse().map_err(py_err)?;
    schurpath::compute_schur(&partition(shape)?, n, method)
        .map(PyPolynomial)
        .map_err(py_err)
}

/// `Π_{i<j} (x_i − x_j)`.
#[pyfunction]
fn vandermonde(n: u32) -> PyPolynomial {
    PyPolynomial(symfun::vandermonde(n))
}

#[pyfunction]
fn complete_homogeneous(k: i64, n: u32) -> PyPolynomial {
    PyPolynomial(symfun::complete_homogeneous(k, n))
}

#[pyfunction]
fn conjugate(shape: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(partition(shape)?.conjugate().parts().to_vec())
}

#[pyfunction]
fn partitions_in_box(rows: usize, cols: u32) -> Vec<Vec<u32>> {
    combinat::partitions_in_box(rows, cols)
        .into_iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

/// Semistandard tableaux of `shape` with entries at most `n`, each as rows.
#[pyfunction]
fn tableaux(shape: Vec<u32>, n: u32) -> PyResult<Vec<Vec<Vec<u32>>>> {
    let lam = partition(shape)?;
    Ok(combinat::ssyt_enumerate(&lam, n)
        .map(|t| {
            (1..=lam.rows())
                .map(|r| (1..=lam.part(r) as usize).map(|c| t.get(r, c)).collect())
                .collect()
        })
        .collect())
}

fn report_dict<'py>(py: Python<'py>, r: &CheckReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("identity", &r.identity)?;
    d.set_item("params", r.params.clone())?;
    d.set_item("status", r.status.to_string())?;
    if let Some(l) = &r.lhs {
        d.set_item("lhs", l)?;
    }
    if let Some(rhs) = &r.rhs {
        d.set_item("rhs", rhs)?;
    }
    if let Some(m) = &r.message {
        d.set_item("message", m)?;
    }
    d.set_item("elapsed_ms", r.elapsed_ms)?;
    Ok(d)
}

/// Runs one identity check and returns its report as a dict.
#[pyfunction]
#[pyo3(signature = (identity, n = None, m = None, shape = None, degree_cap = None))]
fn verify<'py>(
    py: Python<'py>,
    identity: &str,
    n: Option<u32>,
    m: Option<u32>,
    shape: Option<Vec<u32>>,
    degree_cap: Option<u32>,
) -> PyResult<Bound<'py, PyDict>> {
    let args = VerifyArgs {
        n,
        m,
        shape: shape.map(partition).transpose()?,
        degree_cap,
        scheme: None,
    };
    let report = py
        .detach(|| identities::verify(identity, &args))
        .map_err(py_err)?;
    report_dict(py, &report)
}

/// Runs the suite; `config` is the JSON config text (defaults when omitted).
#[pyfunction]
#[pyo3(signature = (config = None))]
fn run_suite<'py>(py: Python<'py>, config: Option<&str>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let cfg: SuiteConfig = match config {
        Some(text) => {
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?
        }
        None => SuiteConfig::default(),
    };
    cfg.validate().map_err(py_err)?;
    let reports = py.detach(|| identities::run_suite(&cfg));
    reports.iter().map(|r| report_dict(py, r)).collect()
}

#[pymodule]
#[pyo3(name = "schurpath")]
fn schurpath_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_function(wrap_pyfunction!(schur, m)?)?;
    m.add_function(wrap_pyfunction!(vandermonde, m)?)?;
    m.add_function(wrap_pyfunction!(complete_homogeneous, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(partitions_in_box, m)?)?;
    m.add_function(wrap_pyfunction!(tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add("IDENTITIES", identities::IDENTITIES.to_vec())?;
    Ok(())
}
