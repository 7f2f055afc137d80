//! Python bindings for `polya-cert`.
//!
//! Rationals cross the boundary as `fractions.Fraction`. Inputs may be
//! `int`, `Fraction` or `"p/q"` strings; floats are rejected so that every
//! certificate stays exact.
//!
//! ```python
//! import polya_cert
//! form = polya_cert.MatrixForm.from_json(open("f.json").read())
//! report = polya_cert.certify(form, m_max=20)
//! print(report.outcome, report.m)
//! ```

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

use ::polya_cert as core;
use core::certify::{self as engine, Outcome};
use core::io::{self, EmitOptions};
use core::{MultiIndex, Rational, SymMatrixQ};

fn value_error(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if obj.is_instance_of::<pyo3::types::PyFloat>() {
        return Err(PyValueError::new_err(
            "floats are not exact; pass int, Fraction or a \"p/q\" string",
        ));
    }
    let text = obj.str()?;
    core::rational::parse(text.to_str()?).map_err(PyValueError::new_err)
}

fn to_rationals(values: &Bound<'_, PyAny>) -> PyResult<Vec<Rational>> {
    values.try_iter()?.map(|v| to_rational(&v?)).collect()
}

fn to_matrix(rows: &Bound<'_, PyAny>) -> PyResult<SymMatrixQ> {
    let rows = rows
        .try_iter()?
        .map(|row| to_rationals(&row?))
        .collect::<PyResult<Vec<_>>>()?;
    SymMatrixQ::from_rows(rows).map_err(value_error)
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((core::rational::format(r),))
}

fn fractions<'py>(py: Python<'py>, values: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = values
        .iter()
        .map(|v| fraction(py, v))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn matrix_rows<'py>(py: Python<'py>, m: &SymMatrixQ) -> PyResult<Bound<'py, PyList>> {
    let rows = m
        .rows()
        .map(|row| fractions(py, row))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, rows)
}

/// Symmetric matrix of forms of a fixed degree.
#[pyclass(name = "MatrixForm", frozen)]
struct PyMatrixForm {
    inner: core::MatrixForm,
}

#[pymethods]
impl PyMatrixForm {
    /// Parse the JSON document format used by the command-line tool.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::parse_matrix_form(text)
            .map(|inner| PyMatrixForm { inner })
            .map_err(value_error)
    }

    /// Build from a list of `(alpha, matrix)` pairs.
    #[new]
    fn new(
        n_vars: usize,
        size: usize,
        degree: u32,
        coeffs: Vec<(Vec<u32>, Bound<'_, PyAny>)>,
    ) -> PyResult<Self> {
        let terms = coeffs
            .into_iter()
            .map(|(alpha, m)| Ok((MultiIndex::new(alpha), to_matrix(&m)?)))
            .collect::<PyResult<Vec<_>>>()?;
        core::MatrixForm::new(n_vars, size, degree, terms)
            .map(|inner| PyMatrixForm { inner })
            .map_err(value_error)
    }

    fn to_json(&self) -> String {
        io::serialize_matrix_form(&self.inner)
    }

    #[getter]
    fn n_vars(&self) -> usize {
        self.inner.n_vars()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    /// Entrywise product with `x_1 + ... + x_n`.
    fn sigma_mul(&self) -> Self {
        PyMatrixForm {
            inner: self.inner.sigma_mul(),
        }
    }

    fn coefficient<'py>(&self, py: Python<'py>, alpha: Vec<u32>) -> PyResult<Bound<'py, PyList>> {
        let p = self
            .inner
            .coefficient(&MultiIndex::new(alpha))
            .map_err(value_error)?;
        matrix_rows(py, &p)
    }

    /// Exact value `B(x)` as nested lists of fractions.
    fn eval<'py>(&self, py: Python<'py>, x: Bound<'py, PyAny>) -> PyResult<Bound<'py, PyList>> {
        let x = to_rationals(&x)?;
        let m = self.inner.eval(&x).map_err(value_error)?;
        matrix_rows(py, &m)
    }

    fn __repr__(&self) -> String {
        format!(
            "MatrixForm(n_vars={}, size={}, degree={}, terms={})",
            self.inner.n_vars(),
            self.inner.size(),
            self.inner.degree(),
            self.inner.num_terms()
        )
    }
}

/// Result of `certify`.
#[pyclass(name = "SearchReport", frozen)]
struct PySearchReport {
    inner: core::SearchReport,
}

#[pymethods]
impl PySearchReport {
    /// `"certified"`, `"refuted"` or `"inconclusive"`.
    #[getter]
    fn outcome(&self) -> &'static str {
        match self.inner.outcome {
            Outcome::Certified(_) => "certified",
            Outcome::Refuted(_) => "refuted",
            Outcome::Inconclusive => "inconclusive",
        }
    }

    /// The certified exponent, or `None`.
    #[getter]
    fn m(&self) -> Option<u32> {
        self.inner.certificate().map(|c| c.m)
    }

    #[getter]
    fn m_tried(&self) -> u32 {
        self.inner.m_tried
    }

    /// `(point, direction, value)` for a refutation, else `None`.
    #[getter]
    #[allow(clippy::type_complexity)]
    fn counterexample<'py>(
        &self,
        py: Python<'py>,
    ) -> PyResult<Option<(Bound<'py, PyList>, Bound<'py, PyList>, Bound<'py, PyAny>)>> {
        self.inner
            .counterexample()
            .map(|cx| {
                Ok((
                    fractions(py, &cx.point)?,
                    fractions(py, &cx.direction)?,
                    fraction(py, &cx.value)?,
                ))
            })
            .transpose()
    }

    #[getter]
    fn margin<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        self.inner
            .margin
            .as_ref()
            .map(|m| fraction(py, m))
            .transpose()
    }

    #[pyo3(signature = (witnesses=false, diagnostics=false))]
    fn to_json(&self, witnesses: bool, diagnostics: bool) -> String {
        io::emit_report(
            &self.inner,
            EmitOptions {
                witnesses,
                diagnostics,
            },
        )
    }
}

#[pyfunction]
#[pyo3(signature = (form, m_max=50, grid_depth=16))]
fn certify(
    py: Python<'_>,
    form: &PyMatrixForm,
    m_max: u32,
    grid_depth: u32,
) -> PyResult<PySearchReport> {
    let opts = core::SearchOptions {
        m_max,
        grid_depth,
        ..Default::default()
    };
    let b = form.inner.clone();
    py.detach(move || engine::polya_exponent_search(&b, &opts))
        .map(|inner| PySearchReport { inner })
        .map_err(value_error)
}

/// Re-check a certificate given as the JSON of `SearchReport.to_json(witnesses=True)`.
#[pyfunction]
fn verify_certificate(form: &PyMatrixForm, certificate_json: &str) -> PyResult<bool> {
    let cert = io::parse_certificate(certificate_json).map_err(value_error)?;
    engine::verify_certificate(&form.inner, &cert).map_err(value_error)
}

#[pyfunction]
fn has_strict_pd_coefficients(form: &PyMatrixForm) -> bool {
    engine::has_strict_pd_coefficients(&form.inner).is_strict()
}

#[pyfunction]
#[allow(clippy::type_complexity)]
fn counterexample_search<'py>(
    py: Python<'py>,
    form: &PyMatrixForm,
    depth: u32,
) -> PyResult<Option<(Bound<'py, PyList>, Bound<'py, PyList>, Bound<'py, PyAny>)>> {
    let found = engine::counterexample_search(&form.inner, depth).map_err(value_error)?;
    found
        .map(|cx| {
            Ok((
                fractions(py, &cx.point)?,
                fractions(py, &cx.direction)?,
                fraction(py, &cx.value)?,
            ))
        })
        .transpose()
}

#[pyfunction]
fn margin_estimate<'py>(
    py: Python<'py>,
    form: &PyMatrixForm,
    depth: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let eps = engine::margin_estimate(&form.inner, depth).map_err(value_error)?;
    fraction(py, &eps)
}

#[pyfunction]
fn pure_state_evaluate<'py>(
    py: Python<'py>,
    form: &PyMatrixForm,
    x: Bound<'py, PyAny>,
    v: Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyAny>> {
    let x = to_rationals(&x)?;
    let v = to_rationals(&v)?;
    let value = engine::pure_state_evaluate(&form.inner, &x, &v).map_err(value_error)?;
    fraction(py, &value)
}

/// Least integer N with N*I + A'_alpha PSD for every weighted coefficient.
#[pyfunction]
fn order_unit_shift(form: &PyMatrixForm) -> BigUint {
    let nf = core::WeightedNormalForm::new(&form.inner);
    core::order_unit_shift(&nf)
}

/// `(is_definite, leading_minors)`.
#[pyfunction]
fn is_pd_exact<'py>(
    py: Python<'py>,
    matrix: Bound<'py, PyAny>,
) -> PyResult<(bool, Bound<'py, PyList>)> {
    let check = core::is_pd_exact(&to_matrix(&matrix)?);
    Ok((check.is_definite(), fractions(py, &check.minors)?))
}

#[pyfunction]
fn is_psd_exact(matrix: Bound<'_, PyAny>) -> PyResult<bool> {
    Ok(core::is_psd_exact(&to_matrix(&matrix)?))
}

#[pyfunction]
fn min_eig_float(matrix: Bound<'_, PyAny>) -> PyResult<f64> {
    Ok(core::min_eig_float(&to_matrix(&matrix)?))
}

#[pyfunction]
fn rayleigh<'py>(
    py: Python<'py>,
    matrix: Bound<'py, PyAny>,
    v: Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyAny>> {
    let value = core::rayleigh(&to_matrix(&matrix)?, &to_rationals(&v)?).map_err(value_error)?;
    fraction(py, &value)
}

#[pyfunction]
fn multinomial(degree: u32, alpha: Vec<u32>) -> PyResult<BigUint> {
    core::multinomial(degree, &MultiIndex::new(alpha)).map_err(value_error)
}

#[pymodule]
#[pyo3(name = "polya_cert")]
fn polya_cert_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatrixForm>()?;
    m.add_class::<PySearchReport>()?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(has_strict_pd_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(counterexample_search, m)?)?;
    m.add_function(wrap_pyfunction!(margin_estimate, m)?)?;
    m.add_function(wrap_pyfunction!(pure_state_evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(order_unit_shift, m)?)?;
    m.add_function(wrap_pyfunction!(is_pd_exact, m)?)?;
    m.add_function(wrap_pyfunction!(is_psd_exact, m)?)?;
    m.add_function(wrap_pyfunction!(min_eig_float, m)?)?;
    m.add_function(wrap_pyfunction!(rayleigh, m)?)?;
    m.add_function(wrap_pyfunction!(multinomial, m)?)?;
    Ok(())
}
