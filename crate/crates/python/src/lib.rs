//! Python bindings: `import idsball`.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyString};

use idsball::verify::{self, Check, GridSpec};
use idsball::{Alphabet, BallParams, Error, IndexSet};

pyo3::create_exception!(
    idsball,
    IdsballError,
    PyValueError,
    "Domain, parse or precondition error."
);
pyo3::create_exception!(
    idsball,
    WordCapError,
    IdsballError,
    "An enumeration would exceed the word cap."
);

fn to_py(err: Error) -> PyErr {
    match err {
        Error::WordCapExceeded { .. } => WordCapError::new_err(err.to_string()),
        _ => IdsballError::new_err(err.to_string()),
    }
}

trait OrPy<T> {
    fn py_err(self) -> PyResult<T>;
}

impl<T> OrPy<T> for idsball::Result<T> {
    fn py_err(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

/// A word over the alphabet `{0, ..., q-1}`.
///
/// Build one from its text form (`Sequence("0120", 3)`) or from a list of
/// symbols (`Sequence([0, 1, 2, 0], 3)`).
#[pyclass(
    name = "Sequence",
    module = "idsball",
    frozen,
    eq,
    hash,
    ord,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PySequence(idsball::Sequence);

#[pymethods]
impl PySequence {
    #[new]
    fn new(word: &Bound<'_, PyAny>, q: u32) -> PyResult<Self> {
        let q = Alphabet::new(q).py_err()?;
        let inner = if let Ok(text) = word.cast::<PyString>() {
            idsball::Sequence::parse(text.to_str()?, q)
        } else {
            idsball::Sequence::new(q, word.extract::<Vec<u16>>()?)
        };
        inner.map(PySequence).py_err()
    }

    #[staticmethod]
    fn zeros(q: u32, n: usize) -> PyResult<Self> {
        Ok(PySequence(idsball::Sequence::zeros(
            Alphabet::new(q).py_err()?,
            n,
        )))
    }

    #[getter]
    fn q(&self) -> u32 {
        self.0.q()
    }

    #[getter]
    fn symbols(&self) -> Vec<u16> {
        self.0.symbols().to_vec()
    }

    fn run_count(&self) -> usize {
        idsball::run_count(&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Sequence({:?}, {})", self.0.to_string(), self.0.q())
    }
}

fn words(set: idsball::BallSet) -> Vec<PySequence> {
    set.into_members().into_iter().map(PySequence).collect()
}

fn positions(set: &IndexSet) -> Vec<usize> {
    set.positions().to_vec()
}

/// Every member of `B_{t,s,p}(x)`, sorted lexicographically.
#[pyfunction]
#[pyo3(signature = (x, t = 0, s = 0, p = 0, word_cap = idsball::DEFAULT_WORD_CAP))]
fn ball(x: &PySequence, t: usize, s: usize, p: usize, word_cap: u64) -> PyResult<Vec<PySequence>> {
    let params = BallParams::new(t, s, p);
    params.check_length(x.0.len()).py_err()?;
    idsball::balls::check_word_cap(x.0.alphabet(), params.output_len(x.0.len()), word_cap)
        .py_err()?;
    idsball::ball(&x.0, params).map(words).py_err()
}

#[pyfunction]
#[pyo3(signature = (x, t = 0, s = 0, p = 0, word_cap = idsball::DEFAULT_WORD_CAP))]
fn ball_size(x: &PySequence, t: usize, s: usize, p: usize, word_cap: u64) -> PyResult<BigUint> {
    idsball::ball_size_capped(&x.0, BallParams::new(t, s, p), word_cap).py_err()
}

/// Membership tested straight from the index-set definition.
#[pyfunction]
#[pyo3(signature = (z, x, t = 0, s = 0, p = 0))]
fn member_definitional(
    z: &PySequence,
    x: &PySequence,
    t: usize,
    s: usize,
    p: usize,
) -> PyResult<bool> {
    idsball::member_definitional(&z.0, &x.0, BallParams::new(t, s, p)).py_err()
}

#[pyfunction]
fn insertion_ball(x: &PySequence, t: usize) -> Vec<PySequence> {
    words(idsball::insertion_ball(&x.0, t))
}

#[pyfunction]
fn deletion_ball(x: &PySequence, s: usize) -> PyResult<Vec<PySequence>> {
    idsball::deletion_ball(&x.0, s).map(words).py_err()
}

#[pyfunction]
fn substitution_ball(x: &PySequence, p: usize) -> Vec<PySequence> {
    words(idsball::substitution_ball(&x.0, p))
}

#[pyfunction]
fn binomial(n: i64, k: i64) -> BigUint {
    idsball::binomial(n, k)
}

#[pyfunction]
fn size_substitution_ball(n: usize, q: u32, p: usize) -> PyResult<BigUint> {
    Ok(idsball::size_substitution_ball(
        n,
        Alphabet::new(q).py_err()?,
        p,
    ))
}

#[pyfunction]
fn size_insertion_ball(n: usize, q: u32, t: usize) -> PyResult<BigUint> {
    Ok(idsball::size_insertion_ball(
        n,
        Alphabet::new(q).py_err()?,
        t,
    ))
}

#[pyfunction]
#[pyo3(signature = (n, q, t = 0, s = 0, p = 0))]
fn size_zero_ball(n: usize, q: u32, t: usize, s: usize, p: usize) -> PyResult<BigUint> {
    idsball::size_zero_ball(n, Alphabet::new(q).py_err()?, BallParams::new(t, s, p)).py_err()
}

#[pyfunction]
#[pyo3(signature = (n, q, t = 0, s = 0, p = 0))]
fn min_ball_bound(n: usize, q: u32, t: usize, s: usize, p: usize) -> PyResult<BigUint> {
    idsball::min_ball_bound(n, Alphabet::new(q).py_err()?, BallParams::new(t, s, p)).py_err()
}

/// `{"bound": int, "minimal_predicted": bool, "conditions": [str, ...]}`
#[pyfunction]
#[pyo3(signature = (x, t = 0, s = 0, p = 0))]
fn minimality_predicate<'py>(
    py: Python<'py>,
    x: &PySequence,
    t: usize,
    s: usize,
    p: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let report = idsball::minimality_predicate(&x.0, BallParams::new(t, s, p)).py_err()?;
    let dict = PyDict::new(py);
    dict.set_item("bound", report.bound)?;
    dict.set_item("minimal_predicted", report.minimal_predicted)?;
    let conditions: Vec<String> = report.conditions.iter().map(ToString::to_string).collect();
    dict.set_item("conditions", conditions)?;
    Ok(dict)
}

#[pyfunction]
fn levenshtein_intersection_max(n: usize, q: u32, p: usize) -> PyResult<BigUint> {
    idsball::levenshtein_intersection_max(n, Alphabet::new(q).py_err()?, p).py_err()
}

#[pyfunction]
fn hamming(x: &PySequence, y: &PySequence) -> PyResult<usize> {
    idsball::hamming(&x.0, &y.0).py_err()
}

#[pyfunction]
fn is_subsequence(u: &PySequence, v: &PySequence) -> bool {
    idsball::is_subsequence(&u.0, &v.0)
}

/// 1-based positions of the greedy leftmost embedding of `z` in `x`.
#[pyfunction]
fn matching_set(z: &PySequence, x: &PySequence) -> PyResult<Vec<usize>> {
    idsball::matching_set(&z.0, &x.0)
        .map(|m| positions(&m))
        .py_err()
}

fn trace_dict<'py>(
    py: Python<'py>,
    trace: idsball::InjectionTrace,
) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("I", positions(&trace.matched))?;
    dict.set_item("J", trace.fill.as_ref().map(positions))?;
    dict.set_item("K", trace.anchors.as_ref().map(positions))?;
    dict.set_item("z", PySequence(trace.output))?;
    Ok(dict)
}

/// Maps `y ∈ I_t(0^n)` to `I_t(x)`; returns `{"I", "J", "K", "z"}` with `J`, `K` set to None.
#[pyfunction]
fn bijection_insertion<'py>(
    py: Python<'py>,
    y: &PySequence,
    x: &PySequence,
    t: usize,
) -> PyResult<Bound<'py, PyDict>> {
    trace_dict(py, idsball::bijection_insertion(&y.0, &x.0, t).py_err()?)
}

#[pyfunction]
fn bijection_insertion_inverse(z: &PySequence, x: &PySequence, t: usize) -> PyResult<PySequence> {
    idsball::bijection_insertion_inverse(&z.0, &x.0, t)
        .map(PySequence)
        .py_err()
}

/// Maps `y ∈ B_{t,0,p}(0^n)` into `B_{t,0,p}(x)`; returns `{"I", "J", "K", "z"}`.
#[pyfunction]
fn injection_idp<'py>(
    py: Python<'py>,
    y: &PySequence,
    x: &PySequence,
    t: usize,
    p: usize,
) -> PyResult<Bound<'py, PyDict>> {
    trace_dict(py, idsball::injection_idp(&y.0, &x.0, t, p).py_err()?)
}

#[pyfunction]
fn witness_swap_flip<'py>(
    py: Python<'py>,
    x: &PySequence,
    t: usize,
    p: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let w = idsball::witness_swap_flip(&x.0, t, p).py_err()?;
    let dict = PyDict::new(py);
    dict.set_item("pivot", w.pivot)?;
    dict.set_item("flips", positions(&w.flips))?;
    dict.set_item("z", PySequence(w.word))?;
    Ok(dict)
}

#[pyfunction]
fn witness_deletion_pair<'py>(
    py: Python<'py>,
    x: &PySequence,
    s: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let w = idsball::witness_deletion_pair(&x.0, s).py_err()?;
    let dict = PyDict::new(py);
    dict.set_item("pivot", w.pivot)?;
    dict.set_item("kept", positions(&w.kept))?;
    dict.set_item("u", PySequence(w.first))?;
    dict.set_item("v", PySequence(w.second))?;
    Ok(dict)
}

#[pyfunction]
fn witness_nonsurjective<'py>(
    py: Python<'py>,
    x: &PySequence,
    t: usize,
    p: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let w = idsball::witness_nonsurjective(&x.0, t, p).py_err()?;
    let verdict = idsball::NonSurjectionVerdict::evaluate(&w.word, &x.0, t, p).py_err()?;
    let dict = PyDict::new(py);
    dict.set_item("w", PySequence(w.intermediate))?;
    dict.set_item(
        "case",
        match w.case {
            idsball::NonSurjectionCase::Prefix => "prefix",
            idsball::NonSurjectionCase::Suffix => "suffix",
        },
    )?;
    dict.set_item("pivot", w.pivot)?;
    dict.set_item("z", PySequence(w.word))?;
    dict.set_item("member", verdict.member)?;
    dict.set_item("prefix_differs", verdict.prefix_differs)?;
    dict.set_item("tail_not_embedded", verdict.tail_not_embedded)?;
    Ok(dict)
}

#[pyclass(name = "VerificationReport", module = "idsball", frozen)]
struct PyReport(verify::VerificationReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    #[getter]
    fn cases_run(&self) -> usize {
        self.0.summary.cases_run
    }

    #[getter]
    fn cases_skipped(&self) -> usize {
        self.0.summary.cases_skipped
    }

    #[getter]
    fn failures(&self) -> usize {
        self.0.summary.failures
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn to_csv(&self) -> String {
        self.0.to_csv()
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    fn __repr__(&self) -> String {
        format!("<VerificationReport {}>", self.0.summary_line())
    }
}

/// Runs the verification grid; `checks` defaults to every check.
#[pyfunction]
#[pyo3(signature = (q_values = vec![1, 2, 3], n_max = 5, budget_max = 2, word_cap = 1_000_000, checks = None))]
fn run_verification(
    py: Python<'_>,
    q_values: Vec<u32>,
    n_max: usize,
    budget_max: usize,
    word_cap: u64,
    checks: Option<Vec<String>>,
) -> PyResult<PyReport> {
    let checks = match checks {
        None => Check::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|name| name.parse::<Check>())
            .collect::<idsball::Result<_>>()
            .py_err()?,
    };
    let grid = GridSpec {
        q_values,
        n_max,
        budget_max,
        word_cap,
        checks,
    };
    py.detach(|| verify::run(&grid)).map(PyReport).py_err()
}

#[pymodule(name = "idsball")]
fn idsball_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySequence>()?;
    m.add_class::<PyReport>()?;
    m.add("IdsballError", m.py().get_type::<IdsballError>())?;
    m.add("WordCapError", m.py().get_type::<WordCapError>())?;
    m.add_function(wrap_pyfunction!(ball, m)?)?;
    m.add_function(wrap_pyfunction!(ball_size, m)?)?;
    m.add_function(wrap_pyfunction!(member_definitional, m)?)?;
    m.add_function(wrap_pyfunction!(insertion_ball, m)?)?;
    m.add_function(wrap_pyfunction!(deletion_ball, m)?)?;
    m.add_function(wrap_pyfunction!(substitution_ball, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(size_substitution_ball, m)?)?;
    m.add_function(wrap_pyfunction!(size_insertion_ball, m)?)?;
    m.add_function(wrap_pyfunction!(size_zero_ball, m)?)?;
    m.add_function(wrap_pyfunction!(min_ball_bound, m)?)?;
    m.add_function(wrap_pyfunction!(minimality_predicate, m)?)?;
    m.add_function(wrap_pyfunction!(levenshtein_intersection_max, m)?)?;
    m.add_function(wrap_pyfunction!(hamming, m)?)?;
    m.add_function(wrap_pyfunction!(is_subsequence, m)?)?;
    m.add_function(wrap_pyfunction!(matching_set, m)?)?;
    m.add_function(wrap_pyfunction!(bijection_insertion, m)?)?;
    m.add_function(wrap_pyfunction!(bijection_insertion_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(injection_idp, m)?)?;
    m.add_function(wrap_pyfunction!(witness_swap_flip, m)?)?;
    m.add_function(wrap_pyfunction!(witness_deletion_pair, m)?)?;
    m.add_function(wrap_pyfunction!(witness_nonsurjective, m)?)?;
    m.add_function(wrap_pyfunction!(run_verification, m)?)?;
    Ok(())
}
