//! Python bindings. Scalars cross the boundary as `fractions.Fraction`; any
//! object whose `str()` parses as a rational (int, Fraction, "3/4") is accepted.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use quadlie::analysis::{self, format};
use quadlie::constructions as c;
use quadlie::derivations;
use quadlie::forms::{self, Metrizability};
use quadlie::linalg::{format_scalar, parse_scalar, Scalar};
use quadlie::{sampling, BilinearForm, Matrix, Subspace};

fn err(e: quadlie::Error) -> PyErr {
    match e {
        quadlie::Error::Parse { .. } | quadlie::Error::InvalidParameter(_) => {
            PyValueError::new_err(e.to_string())
        }
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn scalar(obj: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    let text = obj.str()?.to_string();
    parse_scalar(&text).map_err(|e| PyValueError::new_err(format!("not a rational: {text} ({e})")))
}

fn vector(objs: &[Bound<'_, PyAny>]) -> PyResult<Vec<Scalar>> {
    objs.iter().map(scalar).collect()
}

fn fraction<'py>(py: Python<'py>, x: &Scalar) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_scalar(x),))
}

fn fractions<'py>(py: Python<'py>, v: &[Scalar]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    v.iter().map(|x| fraction(py, x)).collect()
}

fn matrix_out<'py>(py: Python<'py>, m: &Matrix) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
    m.row_vectors().map(|r| fractions(py, r)).collect()
}

fn matrix_in(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Matrix> {
    let rows = rows.iter().map(|r| vector(r)).collect::<PyResult<Vec<_>>>()?;
    let n = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != n) {
        return Err(PyValueError::new_err("ragged matrix"));
    }
    Ok(Matrix::from_rows_with_cols(rows, n))
}

fn span(dim: usize, vectors: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Subspace> {
    let vs = vectors.iter().map(|v| vector(v)).collect::<PyResult<Vec<_>>>()?;
    if vs.iter().any(|v| v.len() != dim) {
        return Err(PyValueError::new_err(format!("vectors must have length {dim}")));
    }
    Ok(Subspace::span(dim, vs))
}

fn json_value<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

type BracketEntry<'py> = ((usize, usize), Vec<Bound<'py, PyAny>>);

#[pyclass(name = "LieAlgebra", module = "quadlie_py", frozen)]
struct PyLie {
    inner: quadlie::LieAlgebra,
}

#[pymethods]
impl PyLie {
    /// Table from `brackets[(i, j)] = [c_0, .., c_{n-1}]`, `i < j`.
    #[new]
    fn new(labels: Vec<String>, brackets: Vec<BracketEntry<'_>>) -> PyResult<Self> {
        let n = labels.len();
        let mut b = quadlie::LieAlgebraBuilder::new(labels);
        for ((i, j), v) in brackets {
            if i >= n || j >= n || i == j || v.len() != n {
                return Err(PyValueError::new_err(format!("bad bracket entry ({i}, {j})")));
            }
            b.add_vector(i, j, &vector(&v)?);
        }
        Ok(PyLie { inner: b.build() })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn bracket<'py>(
        &self,
        py: Python<'py>,
        x: Vec<Bound<'py, PyAny>>,
        y: Vec<Bound<'py, PyAny>>,
    ) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let v = self.inner.bracket(&vector(&x)?, &vector(&y)?).map_err(err)?;
        fractions(py, &v)
    }

    /// Antisymmetry and Jacobi violations; empty for a Lie algebra.
    fn validate(&self) -> Vec<String> {
        self.inner.validate().iter().map(ToString::to_string).collect()
    }

    fn type_pair(&self) -> (usize, usize) {
        let t = self.inner.type_pair();
        (t.r, t.s)
    }

    fn is_solvable(&self) -> bool {
        self.inner.is_solvable()
    }

    fn is_nilpotent(&self) -> bool {
        self.inner.is_nilpotent()
    }

    fn is_perfect(&self) -> bool {
        self.inner.is_perfect()
    }

    fn is_semisimple(&self) -> bool {
        self.inner.is_semisimple()
    }

    fn is_simple(&self) -> bool {
        self.inner.is_simple()
    }

    fn is_local(&self) -> bool {
        analysis::is_local(&self.inner)
    }

    /// Dimensions of `g²`, `Z`, `rad`, `n` and `J`.
    fn dims<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let l = &self.inner;
        let d = PyDict::new(py);
        d.set_item("derived", l.derived_algebra().dim())?;
        d.set_item("center", l.center().dim())?;
        d.set_item("radical", l.radical().dim())?;
        d.set_item("nilradical", l.nilradical().dim())?;
        d.set_item("jacobson", l.jacobson_radical().dim())?;
        Ok(d)
    }

    fn killing_form<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        matrix_out(py, self.inner.killing_form().gram())
    }

    /// Basis of the invariant symmetric forms, as Gram matrices.
    fn invariant_forms<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Vec<Bound<'py, PyAny>>>>> {
        forms::invariant_forms(&self.inner)
            .iter()
            .map(|f| matrix_out(py, f.gram()))
            .collect()
    }

    fn derivations_dim(&self) -> usize {
        derivations::derivations(&self.inner).dim()
    }

    fn inner_derivations_dim(&self) -> usize {
        derivations::inner_derivations(&self.inner).dim()
    }

    /// `("quadratic", QuadraticAlgebra)`, `("not_quadratic", certificate)` or `("undecided", None)`.
    #[pyo3(signature = (seed = 0))]
    fn metrizability<'py>(&self, py: Python<'py>, seed: u64) -> PyResult<(String, Bound<'py, PyAny>)> {
        Ok(match forms::find_quadratic_structure(&self.inner, seed) {
            Metrizability::Quadratic { algebra, .. } => (
                "quadratic".into(),
                Bound::new(py, PyQuadratic { inner: algebra })?.into_any(),
            ),
            Metrizability::NotQuadratic(cert) => {
                ("not_quadratic".into(), cert.to_string().into_pyobject(py)?.into_any())
            }
            Metrizability::Undecided { .. } => ("undecided".into(), py.None().into_bound(py)),
        })
    }

    /// Full structural report as a dict.
    #[pyo3(signature = (seed = 0))]
    fn analyze<'py>(&self, py: Python<'py>, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        json_value(py, &analysis::analyze(&self.inner, None, seed))
    }

    fn chain_dot(&self) -> String {
        analysis::chain_dot(&self.inner, None)
    }

    fn to_text(&self) -> String {
        format::serialize(&self.inner, None)
    }

    fn __repr__(&self) -> String {
        format!("LieAlgebra(dim={}, labels={:?})", self.inner.dim(), self.inner.labels())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

#[pyclass(name = "QuadraticAlgebra", module = "quadlie_py", frozen)]
struct PyQuadratic {
    inner: quadlie::QuadraticAlgebra,
}

#[pymethods]
impl PyQuadratic {
    #[new]
    fn new(algebra: &PyLie, gram: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let form = BilinearForm::new(matrix_in(gram)?).map_err(err)?;
        let inner = quadlie::QuadraticAlgebra::new(algebra.inner.clone(), form).map_err(err)?;
        Ok(PyQuadratic { inner })
    }

    #[getter]
    fn algebra(&self) -> PyLie {
        PyLie {
            inner: self.inner.algebra().clone(),
        }
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn gram<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        matrix_out(py, self.inner.form().gram())
    }

    fn skew_derivations_dim(&self) -> PyResult<usize> {
        Ok(derivations::skew_derivations(self.inner.algebra(), self.inner.form())
            .map_err(err)?
            .dim())
    }

    /// Basis of the orthogonal complement of the span of `vectors`.
    fn perp<'py>(&self, py: Python<'py>, vectors: Vec<Vec<Bound<'py, PyAny>>>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        let s = span(self.inner.dim(), vectors)?;
        self.inner.perp(&s).basis_vectors().iter().map(|v| fractions(py, v)).collect()
    }

    /// Basis of the ideal generated by `vectors`.
    fn ideal_closure<'py>(
        &self,
        py: Python<'py>,
        vectors: Vec<Vec<Bound<'py, PyAny>>>,
    ) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        let s = span(self.inner.dim(), vectors)?;
        let c = self.inner.algebra().ideal_closure(&s).map_err(err)?;
        c.basis_vectors().iter().map(|v| fractions(py, v)).collect()
    }

    /// Letter a..e, "unclassified", or None when not local.
    fn classify(&self) -> Option<&'static str> {
        analysis::classify_local_quadratic(&self.inner).ok().map(|c| c.letter())
    }

    #[pyo3(signature = (seed = 0))]
    fn patterns<'py>(&self, py: Python<'py>, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        json_value(py, &forms::pattern_report_seeded(&self.inner, seed))
    }

    /// Number of random ideals on which the duality checks failed.
    #[pyo3(signature = (trials = 50, seed = 0))]
    fn dualcheck(&self, trials: usize, seed: u64) -> PyResult<usize> {
        let l = self.inner.algebra();
        let mut rng = sampling::rng(seed);
        let ideals: Vec<Subspace> = (0..trials).map(|_| sampling::random_ideal(l, &mut rng)).collect();
        let report = forms::duality_report(&self.inner, &ideals).map_err(err)?;
        Ok(report.failures.len())
    }

    #[pyo3(signature = (seed = 0))]
    fn analyze<'py>(&self, py: Python<'py>, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        json_value(py, &analysis::analyze(self.inner.algebra(), Some(self.inner.form()), seed))
    }

    fn chain_dot(&self) -> String {
        analysis::chain_dot(self.inner.algebra(), Some(self.inner.form()))
    }

    fn to_text(&self) -> String {
        format::serialize(self.inner.algebra(), Some(self.inner.form()))
    }

    fn __repr__(&self) -> String {
        format!("QuadraticAlgebra(dim={})", self.inner.dim())
    }
}

fn quad(q: quadlie::Result<quadlie::QuadraticAlgebra>) -> PyResult<PyQuadratic> {
    q.map(|inner| PyQuadratic { inner }).map_err(err)
}

fn lie(l: quadlie::Result<quadlie::LieAlgebra>) -> PyResult<PyLie> {
    l.map(|inner| PyLie { inner }).map_err(err)
}

/// Parses the text format: a `QuadraticAlgebra` when a valid form is present,
/// otherwise a `LieAlgebra`.
#[pyfunction]
fn parse<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    let f = format::parse(text).map_err(err)?;
    if let Some(form) = f.form {
        if let Ok(inner) = quadlie::QuadraticAlgebra::new(f.algebra.clone(), form) {
            return Ok(Bound::new(py, PyQuadratic { inner })?.into_any());
        }
    }
    Ok(Bound::new(py, PyLie { inner: f.algebra })?.into_any())
}

#[pyfunction]
fn heisenberg(n: usize) -> PyResult<PyLie> {
    lie(c::heisenberg(n))
}

#[pyfunction]
fn free_nilpotent(d: usize, t: usize) -> PyResult<PyLie> {
    lie(c::free_nilpotent(d, t))
}

#[pyfunction]
fn sl2() -> PyLie {
    PyLie { inner: c::sl2() }
}

#[pyfunction]
fn split_h3_extension() -> PyLie {
    PyLie {
        inner: c::split_h3_extension(),
    }
}

#[pyfunction]
fn sl2_killing() -> PyQuadratic {
    PyQuadratic { inner: c::sl2_killing() }
}

#[pyfunction]
fn abelian_quadratic(n: usize) -> PyQuadratic {
    PyQuadratic {
        inner: c::abelian_quadratic(n),
    }
}

#[pyfunction]
fn oscillator_d4() -> PyQuadratic {
    PyQuadratic {
        inner: c::oscillator_d4(),
    }
}

#[pyfunction]
fn generalized_oscillator(lambdas: Vec<Bound<'_, PyAny>>) -> PyResult<PyQuadratic> {
    quad(c::generalized_oscillator(&vector(&lambdas)?))
}

#[pyfunction]
fn n23_quadratic() -> PyQuadratic {
    PyQuadratic {
        inner: c::n23_quadratic(),
    }
}

#[pyfunction]
fn n32_quadratic() -> PyQuadratic {
    PyQuadratic {
        inner: c::n32_quadratic(),
    }
}

#[pyfunction]
fn n23s() -> PyQuadratic {
    PyQuadratic { inner: c::n23s() }
}

#[pyfunction]
fn n32s() -> PyQuadratic {
    PyQuadratic { inner: c::n32s() }
}

#[pyfunction]
fn a_sl2(m: usize) -> PyResult<PyQuadratic> {
    quad(c::a_sl2(m))
}

#[pyfunction]
fn tensor_truncated(q: &PyQuadratic, n: usize) -> PyResult<PyQuadratic> {
    quad(c::tensor_truncated(&q.inner, n))
}

/// Trivial T*-extension `g ⋉ g*`.
#[pyfunction]
fn tstar(l: &PyLie) -> PyResult<PyQuadratic> {
    quad(c::tstar_extension(&l.inner, None))
}

#[pyfunction]
fn double_extension_by_derivation(q: &PyQuadratic, delta: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<PyQuadratic> {
    quad(c::double_extension_by_derivation(&q.inner, &matrix_in(delta)?))
}

#[pymodule]
fn quadlie_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLie>()?;
    m.add_class::<PyQuadratic>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(heisenberg, m)?)?;
    m.add_function(wrap_pyfunction!(free_nilpotent, m)?)?;
    m.add_function(wrap_pyfunction!(sl2, m)?)?;
    m.add_function(wrap_pyfunction!(split_h3_extension, m)?)?;
    m.add_function(wrap_pyfunction!(sl2_killing, m)?)?;
    m.add_function(wrap_pyfunction!(abelian_quadratic, m)?)?;
    m.add_function(wrap_pyfunction!(oscillator_d4, m)?)?;
    m.add_function(wrap_pyfunction!(generalized_oscillator, m)?)?;
    m.add_function(wrap_pyfunction!(n23_quadratic, m)?)?;
    m.add_function(wrap_pyfunction!(n32_quadratic, m)?)?;
    m.add_function(wrap_pyfunction!(n23s, m)?)?;
    m.add_function(wrap_pyfunction!(n32s, m)?)?;
    m.add_function(wrap_pyfunction!(a_sl2, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_truncated, m)?)?;
    m.add_function(wrap_pyfunction!(tstar, m)?)?;
    m.add_function(wrap_pyfunction!(double_extension_by_derivation, m)?)?;
    Ok(())
}
