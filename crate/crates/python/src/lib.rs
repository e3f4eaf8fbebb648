//! Python bindings: `import tlgsb_py`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use tlgsb::combinatorics::{fc_words as core_fc_words, group_oracle_check, packet_decomposition};
use tlgsb::presentations::{
    dimension as core_dimension, gs_basis, gs_basis_tagged, standard_monomials as core_standard_monomials,
    subalg_dimension, Family, TlAlgebra,
};
use tlgsb::rewrite::{bounded_completion, is_closed_under_composition};
use tlgsb::{NcPoly, Word};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn family(name: &str, n: usize, d: Option<usize>) -> PyResult<Family> {
    let need_d = || d.ok_or_else(|| PyValueError::new_err("family gd1n needs d"));
    match name {
        "a" => Family::type_a(n),
        "b" => Family::type_b(n),
        "gd1n" => Family::gd1n(need_d()?, n),
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}; use a, b or gd1n"))),
    }
    .map_err(err)
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(err)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn word(letters: Vec<u8>) -> Word {
    Word::new(letters)
}

/// Dimension of a Temperley–Lieb algebra from the closed formula.
#[pyfunction]
#[pyo3(signature = (family_name, n, d=None))]
fn dimension(family_name: &str, n: usize, d: Option<usize>) -> PyResult<u128> {
    core_dimension(&family(family_name, n, d)?).map_err(err)
}

/// Dimension of the subalgebra T(d,r,n).
#[pyfunction]
fn subalgebra_dimension(d: usize, r: usize, n: usize) -> PyResult<u128> {
    subalg_dimension(d, r, n).map_err(err)
}

/// Standard monomials as lists of generator indices.
#[pyfunction]
#[pyo3(signature = (family_name, n, d=None))]
fn standard_monomials(family_name: &str, n: usize, d: Option<usize>) -> PyResult<Vec<Vec<u8>>> {
    let f = family(family_name, n, d)?;
    Ok(core_standard_monomials(&f).iter().map(|m| m.word().into_letters()).collect())
}

/// The listed rewriting rules, as `(family, rule)` strings.
#[pyfunction]
#[pyo3(signature = (family_name, n, d=None))]
fn rules(family_name: &str, n: usize, d: Option<usize>) -> PyResult<Vec<(String, String)>> {
    let f = family(family_name, n, d)?;
    Ok(gs_basis_tagged(&f).iter().map(|(t, r)| (t.to_string(), r.to_string())).collect())
}

/// Closure report of the listed rules as a dict.
#[pyfunction]
#[pyo3(signature = (family_name, n, d=None))]
fn verify_gs<'py>(py: Python<'py>, family_name: &str, n: usize, d: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let f = family(family_name, n, d)?;
    to_py(py, &is_closed_under_composition(&gs_basis(&f)))
}

/// Bounded completion of the defining relations.
#[pyfunction]
#[pyo3(signature = (family_name, n, d=None, max_degree=12))]
fn complete<'py>(
    py: Python<'py>,
    family_name: &str,
    n: usize,
    d: Option<usize>,
    max_degree: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let f = family(family_name, n, d)?;
    let report = bounded_completion(&tlgsb::presentations::defining_relations(&f), max_degree).map_err(err)?;
    to_py(py, &report.summary())
}

#[pyfunction]
fn fc_words(d: usize, n: usize) -> PyResult<Vec<String>> {
    Ok(core_fc_words(d, n).map_err(err)?.iter().map(|w| w.to_string()).collect())
}

#[pyfunction]
fn packets<'py>(py: Python<'py>, d: usize, n: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &packet_decomposition(d, n).map_err(err)?)
}

#[pyfunction]
fn oracle<'py>(py: Python<'py>, d: usize, n: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &group_oracle_check(d, n).map_err(err)?)
}

/// Runs the command line; returns `(exit_code, stdout)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String) {
    let mut argv = vec!["tlgsb".to_string()];
    argv.extend(args);
    let mut out = Vec::new();
    let code = tlgsb::cli::run(&argv, &mut out);
    (code, String::from_utf8_lossy(&out).into_owned())
}

/// An algebra with its rules and standard basis.
#[pyclass(name = "Algebra", frozen)]
struct PyAlgebra {
    inner: TlAlgebra,
}

#[pymethods]
impl PyAlgebra {
    /// `completed=True` uses the completion of the defining relations
    /// instead of the listed rules.
    #[new]
    #[pyo3(signature = (family_name, n, d=None, completed=false))]
    fn new(family_name: &str, n: usize, d: Option<usize>, completed: bool) -> PyResult<Self> {
        let f = family(family_name, n, d)?;
        let inner = if completed { TlAlgebra::completed(f, 12) } else { TlAlgebra::new(f) }.map_err(err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.family().to_string()
    }

    fn basis(&self) -> Vec<Vec<u8>> {
        self.inner.basis().iter().map(|m| m.word().into_letters()).collect()
    }

    fn normal_form(&self, w: Vec<u8>) -> PyResult<String> {
        Ok(self.inner.normal_form(&NcPoly::word(word(w))).map_err(err)?.to_string())
    }

    fn mul(&self, a: Vec<u8>, b: Vec<u8>) -> PyResult<String> {
        Ok(self.inner.product_words(&word(a), &word(b)).map_err(err)?.to_string())
    }

    fn __repr__(&self) -> String {
        format!("Algebra({}, dim={})", self.inner.family(), self.inner.dim())
    }
}

#[pymodule]
fn tlgsb_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(dimension, m)?)?;
    m.add_function(wrap_pyfunction!(subalgebra_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(standard_monomials, m)?)?;
    m.add_function(wrap_pyfunction!(rules, m)?)?;
    m.add_function(wrap_pyfunction!(verify_gs, m)?)?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(fc_words, m)?)?;
    m.add_function(wrap_pyfunction!(packets, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    m.add_class::<PyAlgebra>()?;
    Ok(())
}
