//! Python bindings. Weights cross the boundary as strings such as
//! `"(5/2,3/2,1)"` or as lists of ints and fraction strings.

use std::collections::BTreeMap;

use diraccoh::catalog::{make_spec, standard_catalog, Flavor, UnipotentSpec};
use diraccoh::dirac::{necessary_condition as nc, spin_factor, HDResult};
use diraccoh::repr::weyl_dim as wd;
use diraccoh::roots::{integral_subsystem, parse_system};
use diraccoh::weight::parse_q;
use diraccoh::{Error, Weight};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(pydiraccoh, BudgetExceeded, PyRuntimeError, "An operation exceeded the engine budget.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[derive(FromPyObject)]
enum WeightArg {
    Text(String),
    Ints(Vec<i64>),
    Parts(Vec<String>),
}

impl WeightArg {
    fn weight(self) -> PyResult<Weight> {
        match self {
            WeightArg::Text(s) => s.parse().map_err(py_err),
            WeightArg::Ints(v) => Ok(Weight::from_ints(&v)),
            WeightArg::Parts(v) => {
                Ok(Weight::new(v.iter().map(|s| parse_q(s)).collect::<diraccoh::Result<_>>().map_err(py_err)?))
            }
        }
    }
}

fn map_out(m: BTreeMap<Weight, u64>) -> BTreeMap<String, u64> {
    m.into_iter().map(|(w, k)| (w.to_string(), k)).collect()
}

/// A root system such as `"C5"`, `"F4"` or `"GL4"`.
#[pyclass(name = "RootSystem", frozen)]
struct PyRootSystem {
    inner: diraccoh::RootSystem,
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(label: &str) -> PyResult<Self> {
        Ok(PyRootSystem { inner: parse_system(label).map_err(py_err)? })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn rho(&self) -> String {
        self.inner.rho().to_string()
    }

    #[getter]
    fn positive_roots(&self) -> Vec<String> {
        self.inner.positive_roots().iter().map(ToString::to_string).collect()
    }

    #[getter]
    fn simple_roots(&self) -> Vec<String> {
        self.inner.simple_roots().iter().map(ToString::to_string).collect()
    }

    #[getter]
    fn spin_factor(&self) -> u64 {
        spin_factor(&self.inner)
    }

    fn dominant(&self, weight: WeightArg) -> PyResult<String> {
        Ok(self.inner.dominant(&weight.weight()?).map_err(py_err)?.to_string())
    }

    fn weyl_dim(&self, highest: WeightArg) -> PyResult<String> {
        Ok(wd(&self.inner, &highest.weight()?).map_err(py_err)?.to_string())
    }

    /// Type of the subsystem of roots with integral coroot pairing.
    fn integral_type(&self, weight: WeightArg) -> PyResult<String> {
        Ok(integral_subsystem(&self.inner, &weight.weight()?).map_err(py_err)?.cartan_type.to_string())
    }

    /// `(regular, integral, tau')` for `2 lambda`.
    fn necessary_condition(&self, lam: WeightArg) -> PyResult<(bool, bool, Option<String>)> {
        let c = nc(&self.inner, &lam.weight()?).map_err(py_err)?;
        Ok((c.regular, c.integral, c.tau.map(|t| t.to_string())))
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.label())
    }
}

/// Dirac cohomology per copy of `E(rho)`.
#[pyclass(name = "HDResult", frozen, get_all)]
struct PyHDResult {
    label: String,
    status: String,
    tau: Option<String>,
    per_copy_multiplicity: u64,
    spin_factor: u64,
    total_multiplicity: u64,
    contributions: Vec<(String, u64)>,
}

#[pymethods]
impl PyHDResult {
    fn __repr__(&self) -> String {
        format!(
            "HDResult({}: {}, tau={}, per_copy={}, spin_factor={})",
            self.label,
            self.status,
            self.tau.as_deref().unwrap_or("-"),
            self.per_copy_multiplicity,
            self.spin_factor
        )
    }
}

impl PyHDResult {
    fn from(label: String, r: HDResult) -> Self {
        PyHDResult {
            label,
            status: r.status.to_string(),
            tau: r.summands.keys().next().map(ToString::to_string),
            per_copy_multiplicity: r.per_copy_multiplicity(),
            spin_factor: r.spin_factor,
            total_multiplicity: r.total_multiplicity(),
            contributions: r.contributions.iter().map(|(w, m)| (w.to_string(), *m)).collect(),
        }
    }
}

#[pyclass(name = "Check", frozen, get_all)]
struct PyCheck {
    suite: String,
    case: String,
    passed: bool,
    detail: String,
}

#[pymethods]
impl PyCheck {
    fn __repr__(&self) -> String {
        format!("Check({} {} {}: {})", if self.passed { "PASS" } else { "FAIL" }, self.suite, self.case, self.detail)
    }
}

fn spec(flavor: &str) -> PyResult<UnipotentSpec> {
    let f: Flavor = flavor.parse().map_err(py_err)?;
    match f {
        Flavor::GlMaxpar { alpha, beta, k, l } => diraccoh::catalog::gl_maxpar_family(alpha, beta, k, l),
        f => make_spec(f),
    }
    .map_err(py_err)
}

#[pyclass(name = "Engine", frozen)]
struct PyEngine {
    inner: diraccoh::Engine,
}

#[pymethods]
impl PyEngine {
    #[new]
    #[pyo3(signature = (budget = None, memo = true))]
    fn new(budget: Option<u64>, memo: bool) -> Self {
        let e = if memo { diraccoh::Engine::with_memo() } else { diraccoh::Engine::new() };
        PyEngine {
            inner: match budget {
                Some(b) => e.budget(b),
                None => e,
            },
        }
    }

    #[getter]
    fn budget(&self) -> u64 {
        self.inner.budget_limit()
    }

    /// All weights of `E(highest)` with multiplicities.
    fn freudenthal(
        &self,
        py: Python<'_>,
        system: &PyRootSystem,
        highest: WeightArg,
    ) -> PyResult<BTreeMap<String, u64>> {
        let hw = highest.weight()?;
        let ch = py.detach(|| self.inner.freudenthal(&system.inner, &hw)).map_err(py_err)?;
        Ok(ch.entries().into_iter().map(|(w, m)| (w.to_string(), m)).collect())
    }

    fn weight_multiplicity(
        &self,
        py: Python<'_>,
        system: &PyRootSystem,
        highest: WeightArg,
        mu: WeightArg,
    ) -> PyResult<u64> {
        let (hw, mu) = (highest.weight()?, mu.weight()?);
        py.detach(|| self.inner.weight_multiplicity(&system.inner, &hw, &mu)).map_err(py_err)
    }

    /// `E(a) (x) E(b)` as highest weight to multiplicity.
    fn tensor(
        &self,
        py: Python<'_>,
        system: &PyRootSystem,
        a: WeightArg,
        b: WeightArg,
    ) -> PyResult<BTreeMap<String, u64>> {
        let (a, b) = (a.weight()?, b.weight()?);
        py.detach(|| self.inner.klimyk_tensor(&system.inner, &a, &b)).map(map_out).map_err(py_err)
    }

    /// `(equality subsets, |W|, all statements hold)`.
    fn kostant_scan(&self, py: Python<'_>, system: &PyRootSystem) -> PyResult<(u64, u64, bool)> {
        let r = py.detach(|| self.inner.kostant_scan(&system.inner)).map_err(py_err)?;
        Ok((r.equality_subsets, r.weyl_order, r.all_hold()))
    }

    /// Dirac cohomology of a catalog flavor such as `"sp-metaplectic(5,odd)"`.
    fn hd(&self, py: Python<'_>, flavor: &str) -> PyResult<PyHDResult> {
        let s = spec(flavor)?;
        let r = py.detach(|| self.inner.hd_of_spec(&s)).map_err(py_err)?;
        Ok(PyHDResult::from(s.label(), r))
    }

    /// Whether the closed form and the engine agree for a catalog flavor.
    fn crosscheck(&self, py: Python<'_>, flavor: &str) -> PyResult<bool> {
        let s = spec(flavor)?;
        py.detach(|| self.inner.crosscheck(&s)).map(|r| r.agree).map_err(py_err)
    }

    /// Rows of the `F4` table as `(row, lambda_R, unitary, mu, [pi:E(rho)])`.
    fn f4_table(&self, py: Python<'_>) -> PyResult<Vec<(usize, String, bool, String, Option<u64>)>> {
        let rows = py.detach(|| self.inner.f4_table()).map_err(py_err)?;
        Ok(rows
            .into_iter()
            .map(|r| (r.row.index, r.row.lambda_r.to_string(), r.row.unitary, r.mu.to_string(), r.e_rho_multiplicity))
            .collect())
    }

    #[pyo3(signature = (suite, args = Vec::new()))]
    fn verify(&self, py: Python<'_>, suite: &str, args: Vec<String>) -> PyResult<Vec<PyCheck>> {
        let checks = py.detach(|| self.inner.verify(suite, &args)).map_err(py_err)?;
        Ok(checks
            .into_iter()
            .map(|c| PyCheck { suite: c.suite.to_string(), case: c.case, passed: c.passed, detail: c.detail })
            .collect())
    }
}

/// Flavor strings of the standard catalog.
#[pyfunction]
fn catalog() -> Vec<String> {
    standard_catalog().iter().map(ToString::to_string).collect()
}

/// Dominant `2 lambda` of a catalog flavor.
#[pyfunction]
fn two_lambda(flavor: &str) -> PyResult<String> {
    Ok(spec(flavor)?.two_lambda().map_err(py_err)?.to_string())
}

#[pymodule]
fn pydiraccoh(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_class::<PyEngine>()?;
    m.add_class::<PyHDResult>()?;
    m.add_class::<PyCheck>()?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(two_lambda, m)?)?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
