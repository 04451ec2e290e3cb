//! Python bindings: the braid word type, alphabet schemes, the string
//! metric, and the efficiency scan, importable as `braidcode_py`.

use pyo3::exceptions::{PyResourceWarning, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use braidcode::cli::{parse_symbols, parse_word};
use braidcode::codec::{CodeScheme, SymbolString};
use braidcode::efficiency;
use braidcode::metric;
use braidcode::word_problem;
use braidcode::Error;

fn to_py_err(err: Error) -> PyErr {
    match err {
        Error::BudgetExceeded { .. } | Error::StepLimitExceeded { .. } => {
            PyResourceWarning::new_err(err.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

fn symbols_arg(text: &str, alphabet: usize) -> PyResult<SymbolString> {
    parse_symbols(text, Some(alphabet)).map_err(to_py_err)
}

/// A word in the Artin generators of a braid group.
#[pyclass(name = "BraidWord", skip_from_py_object)]
#[derive(Clone)]
struct PyBraidWord {
    inner: braidcode::BraidWord,
}

#[pymethods]
impl PyBraidWord {
    /// BraidWord(strands, letters): letters are nonzero signed indices,
    /// k for σ_k and -k for its inverse.
    #[new]
    #[pyo3(signature = (strands, letters=Vec::new()))]
    fn new(strands: usize, letters: Vec<i64>) -> PyResult<Self> {
        braidcode::BraidWord::from_signed(strands, &letters)
            .map(|inner| PyBraidWord { inner })
            .map_err(to_py_err)
    }

    /// Parse the text form "B<n>: k1 k2 ...".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_word(text)
            .map(|inner| PyBraidWord { inner })
            .map_err(to_py_err)
    }

    #[getter]
    fn strands(&self) -> usize {
        self.inner.strands()
    }

    #[getter]
    fn letters(&self) -> Vec<i64> {
        self.inner.signed_letters()
    }

    fn concat(&self, other: &PyBraidWord) -> PyResult<Self> {
        self.inner
            .concat(&other.inner)
            .map(|inner| PyBraidWord { inner })
            .map_err(to_py_err)
    }

    fn invert(&self) -> Self {
        PyBraidWord {
            inner: self.inner.invert(),
        }
    }

    fn free_reduce(&self) -> Self {
        PyBraidWord {
            inner: self.inner.free_reduce(),
        }
    }

    /// Dehornoy handle reduction: an equivalent word with no handles left.
    fn handle_reduce(&self) -> Self {
        PyBraidWord {
            inner: word_problem::handle_reduce(&self.inner),
        }
    }

    fn exponent_sum(&self) -> i64 {
        self.inner.exponent_sum()
    }

    /// One-line notation of the induced strand permutation (1-based).
    fn permutation(&self) -> Vec<usize> {
        self.inner.permutation().one_line()
    }

    fn is_trivial(&self) -> bool {
        word_problem::is_trivial(&self.inner)
    }

    fn equivalent(&self, other: &PyBraidWord) -> PyResult<bool> {
        word_problem::equivalent(&self.inner, &other.inner).map_err(to_py_err)
    }

    /// Burau-oracle verdict: "TRIVIAL", "NONTRIVIAL", or "INCONCLUSIVE".
    fn burau_verdict(&self) -> String {
        word_problem::burau_verdict(&self.inner).to_string()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __eq__(&self, other: &PyBraidWord) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("BraidWord.parse({:?})", self.inner.to_string())
    }
}

/// An N-symbol alphabet carried by pure generators on N+1 strands.
#[pyclass(name = "CodeScheme")]
struct PyCodeScheme {
    inner: CodeScheme,
}

#[pymethods]
impl PyCodeScheme {
    #[new]
    fn new(alphabet_size: usize) -> PyResult<Self> {
        CodeScheme::new(alphabet_size)
            .map(|inner| PyCodeScheme { inner })
            .map_err(to_py_err)
    }

    #[getter]
    fn alphabet_size(&self) -> usize {
        self.inner.alphabet_size()
    }

    #[getter]
    fn strands(&self) -> usize {
        self.inner.strands()
    }

    #[getter]
    fn distinguished_strand(&self) -> usize {
        self.inner.distinguished_strand()
    }

    /// List of (symbol, (i, j)) pairs: symbol k is carried by l_{i,j}.
    fn symbol_map(&self) -> Vec<(usize, (usize, usize))> {
        self.inner
            .symbol_map()
            .into_iter()
            .map(|(s, g)| (s, (g.lower(), g.upper())))
            .collect()
    }

    fn encode(&self, symbols: &str) -> PyResult<PyBraidWord> {
        let s = symbols_arg(symbols, self.inner.alphabet_size())?;
        self.inner
            .encode(&s)
            .map(|inner| PyBraidWord { inner })
            .map_err(to_py_err)
    }

    fn inverse_string(&self, symbols: &str) -> PyResult<PyBraidWord> {
        let s = symbols_arg(symbols, self.inner.alphabet_size())?;
        self.inner
            .inverse_string(&s)
            .map(|inner| PyBraidWord { inner })
            .map_err(to_py_err)
    }

    /// True when the encoding annihilates with its inverse string.
    fn verify_roundtrip(&self, symbols: &str) -> PyResult<bool> {
        let s = symbols_arg(symbols, self.inner.alphabet_size())?;
        self.inner.verify_roundtrip(&s).map_err(to_py_err)
    }

    /// The symbol string (as text) a word encodes, or None.
    fn decode_exhaustive(&self, word: &PyBraidWord, max_len: usize) -> PyResult<Option<String>> {
        self.inner
            .decode_exhaustive(&word.inner, max_len)
            .map(|found| found.map(|s| s.to_string()))
            .map_err(to_py_err)
    }

    fn injectivity_check<'py>(
        &self,
        py: Python<'py>,
        max_len: usize,
    ) -> PyResult<Bound<'py, PyDict>> {
        let report = self.inner.injectivity_check(max_len).map_err(to_py_err)?;
        let out = PyDict::new(py);
        out.set_item("passed", report.passed())?;
        out.set_item("strings_checked", report.strings_checked)?;
        out.set_item("pairs_checked", report.pairs_checked)?;
        out.set_item(
            "collisions",
            report
                .collisions
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect::<Vec<_>>(),
        )?;
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!("CodeScheme({})", self.inner.alphabet_size())
    }
}

/// Longest shared suffix of two symbol strings.
#[pyfunction]
fn common_suffix_len(alphabet: usize, s1: &str, s2: &str) -> PyResult<usize> {
    let a = symbols_arg(s1, alphabet)?;
    let b = symbols_arg(s2, alphabet)?;
    metric::common_suffix_len(&a, &b).map_err(to_py_err)
}

/// Suffix distance between two symbol strings.
#[pyfunction]
fn distance(alphabet: usize, s1: &str, s2: &str) -> PyResult<usize> {
    let a = symbols_arg(s1, alphabet)?;
    let b = symbols_arg(s2, alphabet)?;
    metric::distance(&a, &b).map_err(to_py_err)
}

/// Hamming distance between equal-length symbol strings.
#[pyfunction]
fn hamming_distance(alphabet: usize, s1: &str, s2: &str) -> PyResult<usize> {
    let a = symbols_arg(s1, alphabet)?;
    let b = symbols_arg(s2, alphabet)?;
    metric::hamming_distance(&a, &b).map_err(to_py_err)
}

/// Brute-force the metric axioms; returns a report dict.
#[pyfunction]
fn verify_axioms(py: Python<'_>, alphabet: usize, max_len: usize) -> PyResult<Bound<'_, PyDict>> {
    let report = metric::verify_axioms(alphabet, max_len).map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("passed", report.passed())?;
    out.set_item("strings_checked", report.strings_checked)?;
    out.set_item("triples_checked", report.triples_checked)?;
    out.set_item("violations", report.violations.clone())?;
    Ok(out)
}

/// Histogram {distance: count} around a reference string (all-zeros when
/// omitted).
#[pyfunction]
#[pyo3(signature = (alphabet, length, reference=None))]
fn distance_distribution<'py>(
    py: Python<'py>,
    alphabet: usize,
    length: usize,
    reference: Option<&str>,
) -> PyResult<Bound<'py, PyDict>> {
    let reference = match reference {
        Some(text) => symbols_arg(text, alphabet)?,
        None => SymbolString::new(alphabet, vec![0; length]).map_err(to_py_err)?,
    };
    let report = metric::distance_distribution(alphabet, length, &reference).map_err(to_py_err)?;
    let out = PyDict::new(py);
    for (d, count) in &report.histogram {
        out.set_item(d, count)?;
    }
    Ok(out)
}

/// Information gain of an N-symbol alphabet: log2(N).
#[pyfunction]
fn gain(n: usize) -> PyResult<f64> {
    efficiency::gain(n).map_err(to_py_err)
}

/// Cost per gain N^exponent / log2(N).
#[pyfunction]
fn ratio(n: usize, exponent: f64) -> PyResult<f64> {
    let model = efficiency::CostModel::new(exponent).map_err(to_py_err)?;
    efficiency::ratio(n, &model).map_err(to_py_err)
}

/// The alphabet size in [2, n_max] minimizing cost per gain.
#[pyfunction]
fn argmin_alphabet(exponent: f64, n_max: usize) -> PyResult<usize> {
    if n_max < 2 {
        return Err(PyValueError::new_err("n_max must be at least 2"));
    }
    let model = efficiency::CostModel::new(exponent).map_err(to_py_err)?;
    Ok(efficiency::argmin_integer(&model, n_max))
}

/// Rows (N, cost, gain, ratio) for N in [n_min, n_max].
#[pyfunction]
fn efficiency_curve(
    exponent: f64,
    n_min: usize,
    n_max: usize,
) -> PyResult<Vec<(usize, f64, f64, f64)>> {
    if n_min < 2 || n_min > n_max {
        return Err(PyValueError::new_err("need 2 <= n_min <= n_max"));
    }
    let model = efficiency::CostModel::new(exponent).map_err(to_py_err)?;
    Ok(efficiency::curve(&model, n_min, n_max)
        .rows()
        .iter()
        .map(|row| (row.n, row.cost, row.gain, row.ratio))
        .collect())
}

#[pymodule]
fn braidcode_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyBraidWord>()?;
    m.add_class::<PyCodeScheme>()?;
    m.add_function(wrap_pyfunction!(common_suffix_len, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(hamming_distance, m)?)?;
    m.add_function(wrap_pyfunction!(verify_axioms, m)?)?;
    m.add_function(wrap_pyfunction!(distance_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(gain, m)?)?;
    m.add_function(wrap_pyfunction!(ratio, m)?)?;
    m.add_function(wrap_pyfunction!(argmin_alphabet, m)?)?;
    m.add_function(wrap_pyfunction!(efficiency_curve, m)?)?;
    Ok(())
}
