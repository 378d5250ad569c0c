//! Python bindings: words, standard Young tableaux, the k-statistics, the
//! maj-transfer bijections, distributions, classes and verification suites.
//!
//! ```text
//! import kmaj_py as km
//! w = km.Word("9 8 6 1 7 3 2 4 5")
//! assert w.maj_k(3) == 19
//! assert str(w.phi(3).psi(3)) == str(w)
//! ```

use std::collections::{BTreeMap, BTreeSet};

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyType;

use kmaj::bijections;
use kmaj::distribution::{self, Statistic};
use kmaj::equivalence;
use kmaj::tableau;
use kmaj::verify;

fn value_err(e: kmaj::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn pair_list(set: &kmaj::IndexPairSet) -> Vec<(usize, usize)> {
    set.iter().collect()
}

fn parse_partition(parts: Vec<usize>) -> PyResult<kmaj::Partition> {
    kmaj::Partition::new(parts).map_err(value_err)
}

fn parse_multiset(counts: BTreeMap<u32, usize>) -> PyResult<kmaj::Multiset> {
    kmaj::Multiset::from_counts(counts).map_err(value_err)
}

fn parse_statistic(name: &str) -> PyResult<Statistic> {
    match name {
        "maj" => Ok(Statistic::Maj),
        "inv" => Ok(Statistic::Inv),
        "majk" | "maj_k" => Ok(Statistic::MajK),
        other => Err(PyValueError::new_err(format!(
            "unknown statistic {other:?}; expected maj, inv or majk"
        ))),
    }
}

/// A word over positive integers, possibly with spacer slots (`None` /
/// `_`). Positions are 1-based.
#[pyclass(name = "Word", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyWord {
    inner: kmaj::Word,
}

#[pymethods]
impl PyWord {
    /// Build from text like `"9 8 _ 6 1"` or from a list of letters with
    /// `None` for spacers.
    #[new]
    fn new(source: Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = if let Ok(text) = source.extract::<String>() {
            text.parse().map_err(value_err)?
        } else {
            let letters: Vec<Option<u32>> = source.extract()?;
            kmaj::Word::new(
                letters
                    .into_iter()
                    .map(|l| l.map(kmaj::Letter::Int).unwrap_or(kmaj::Letter::Spacer))
                    .collect(),
            )
            .map_err(value_err)?
        };
        Ok(PyWord { inner })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Word(\"{}\")", self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut hasher = std::hash::DefaultHasher::new();
        self.inner.hash(&mut hasher);
        hasher.finish()
    }

    /// Letters as a list, `None` for spacers.
    fn letters(&self) -> Vec<Option<u32>> {
        self.inner.letters().iter().map(|l| l.value()).collect()
    }

    fn spacer_positions(&self) -> Vec<usize> {
        self.inner.spacer_positions().into_iter().collect()
    }

    fn is_permutation(&self) -> bool {
        self.inner.is_permutation()
    }

    fn descent_set_k(&self, k: usize) -> PyResult<Vec<(usize, usize)>> {
        if k < 1 {
            return Err(PyValueError::new_err("k must be at least 1"));
        }
        Ok(pair_list(&self.inner.descent_set_k(k)))
    }

    fn inversion_set_k(&self, k: usize) -> PyResult<Vec<(usize, usize)>> {
        if k < 1 {
            return Err(PyValueError::new_err("k must be at least 1"));
        }
        Ok(pair_list(&self.inner.inversion_set_k(k)))
    }

    fn maj_k(&self, k: usize) -> PyResult<usize> {
        if k < 1 {
            return Err(PyValueError::new_err("k must be at least 1"));
        }
        Ok(self.inner.maj_k(k))
    }

    fn maj(&self) -> usize {
        self.inner.maj()
    }

    fn inv(&self) -> usize {
        self.inner.inv()
    }

    /// Inverse descent set: values i sitting to the right of i+1.
    fn ides(&self) -> PyResult<Vec<u32>> {
        Ok(self.inner.ides().map_err(value_err)?.into_iter().collect())
    }

    /// The swap-anchor chain selected at position j with step k.
    fn gamma_index_set(&self, j: usize, k: usize) -> PyResult<Vec<usize>> {
        check_gamma_args(&self.inner, j, k)?;
        Ok(bijections::gamma_index_set(&self.inner, j, k)
            .indices()
            .to_vec())
    }

    fn gamma(&self, j: usize, k: usize) -> PyResult<PyWord> {
        check_gamma_args(&self.inner, j, k)?;
        Ok(PyWord {
            inner: bijections::gamma(&self.inner, j, k),
        })
    }

    /// The maj-transfer bijection: maj_{k-1}(w) == maj_k(w.phi(k)).
    fn phi(&self, k: usize) -> PyResult<PyWord> {
        if k < 2 {
            return Err(PyValueError::new_err("phi needs k >= 2"));
        }
        Ok(PyWord {
            inner: bijections::phi(&self.inner, k),
        })
    }

    fn psi(&self, k: usize) -> PyResult<PyWord> {
        if k < 2 {
            return Err(PyValueError::new_err("psi needs k >= 2"));
        }
        Ok(PyWord {
            inner: bijections::psi(&self.inner, k),
        })
    }

    /// Compose transfers to carry maj_{from_k} to maj_{to_k}.
    fn phi_range(&self, to_k: usize, from_k: usize) -> PyResult<PyWord> {
        Ok(PyWord {
            inner: bijections::phi_range(&self.inner, to_k, from_k).map_err(value_err)?,
        })
    }

    /// The classical second fundamental transformation.
    fn foata(&self) -> PyResult<PyWord> {
        Ok(PyWord {
            inner: bijections::foata(&self.inner).map_err(value_err)?,
        })
    }

    /// Row-insertion pair (P, Q); Q's descent positions equal `ides`.
    fn rsk(&self) -> PyResult<(PyTableau, PyTableau)> {
        let (p, q) = tableau::rsk(&self.inner).map_err(value_err)?;
        Ok((PyTableau { inner: p }, PyTableau { inner: q }))
    }
}

fn check_gamma_args(w: &kmaj::Word, j: usize, k: usize) -> PyResult<()> {
    if k < 2 {
        return Err(PyValueError::new_err("gamma needs k >= 2"));
    }
    if j < 1 || j > w.len() {
        return Err(PyValueError::new_err(format!(
            "position j must be in 1..={}",
            w.len()
        )));
    }
    Ok(())
}

/// A standard Young tableau in the French orientation (bottom row first).
#[pyclass(name = "StandardTableau", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyTableau {
    inner: kmaj::StandardTableau,
}

#[pymethods]
impl PyTableau {
    /// Build from a text form like `"1 3 4 7 / 2 5 6 / 8"` or a list of
    /// rows (bottom-up).
    #[new]
    fn new(source: Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = if let Ok(text) = source.extract::<String>() {
            text.parse().map_err(value_err)?
        } else {
            let rows: Vec<Vec<u32>> = source.extract()?;
            kmaj::StandardTableau::from_rows(rows).map_err(value_err)?
        };
        Ok(PyTableau { inner })
    }

    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, json: &str) -> PyResult<Self> {
        let inner: kmaj::StandardTableau =
            serde_json::from_str(json).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyTableau { inner })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("tableau serializes")
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("StandardTableau(\"{}\")", self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut hasher = std::hash::DefaultHasher::new();
        self.inner.hash(&mut hasher);
        hasher.finish()
    }

    /// Rows bottom-up.
    fn rows(&self) -> Vec<Vec<u32>> {
        self.inner.rows().to_vec()
    }

    fn shape(&self) -> Vec<usize> {
        self.inner.shape().parts().to_vec()
    }

    /// (col, row) of an entry, both 1-based from the bottom-left.
    fn cell_of(&self, entry: u32) -> PyResult<(usize, usize)> {
        if entry < 1 || entry as usize > self.inner.size() {
            return Err(PyValueError::new_err("entry out of range"));
        }
        let cell = self.inner.cell_of(entry);
        Ok((cell.col, cell.row))
    }

    fn attacks(&self, i: u32, m: u32) -> PyResult<bool> {
        self.inner.attacks(i, m).map_err(value_err)
    }

    fn descent_set(&self) -> Vec<(usize, usize)> {
        pair_list(&self.inner.descent_set())
    }

    fn maj(&self) -> usize {
        self.inner.maj()
    }

    fn descent_set_k(&self, k: usize) -> PyResult<Vec<(usize, usize)>> {
        Ok(pair_list(&self.inner.descent_set_k(k).map_err(value_err)?))
    }

    fn inversion_set_k(&self, k: usize) -> PyResult<Vec<(usize, usize)>> {
        Ok(pair_list(
            &self.inner.inversion_set_k(k).map_err(value_err)?,
        ))
    }

    fn maj_k(&self, k: usize) -> PyResult<usize> {
        self.inner.maj_k(k).map_err(value_err)
    }

    fn gamma(&self, j: u32, k: usize) -> PyResult<PyTableau> {
        Ok(PyTableau {
            inner: self.inner.gamma(j, k).map_err(value_err)?,
        })
    }

    /// The tableau maj-transfer: maj_{k-1}(T) == maj_k(T.phi(k)), k in {2,3}.
    fn phi(&self, k: usize) -> PyResult<PyTableau> {
        Ok(PyTableau {
            inner: self.inner.phi(k).map_err(value_err)?,
        })
    }

    fn psi(&self, k: usize) -> PyResult<PyTableau> {
        Ok(PyTableau {
            inner: self.inner.psi(k).map_err(value_err)?,
        })
    }
}

/// All standard Young tableaux of a shape.
#[pyfunction]
fn enumerate_syt(shape: Vec<usize>) -> PyResult<Vec<PyTableau>> {
    let shape = parse_partition(shape)?;
    Ok(tableau::enumerate_syt(&shape)
        .into_iter()
        .map(|inner| PyTableau { inner })
        .collect())
}

/// Number of standard Young tableaux of a shape (hook length formula).
#[pyfunction]
fn syt_count(shape: Vec<usize>) -> PyResult<u64> {
    Ok(parse_partition(shape)?.syt_count())
}

/// Coefficients of the q-multinomial for a multiset given as a
/// value -> multiplicity dict.
#[pyfunction]
fn q_multinomial(multiset: BTreeMap<u32, usize>) -> PyResult<Vec<u64>> {
    Ok(distribution::q_multinomial(&parse_multiset(multiset)?)
        .coeffs()
        .to_vec())
}

/// Coefficients of `sum q^{stat(w)}` over the words on a multiset with
/// fixed spacer positions; `stat` is "maj", "inv" or "majk".
#[pyfunction]
#[pyo3(signature = (multiset, spacers=None, stat="majk", k=1))]
fn word_distribution(
    multiset: BTreeMap<u32, usize>,
    spacers: Option<Vec<usize>>,
    stat: &str,
    k: usize,
) -> PyResult<Vec<u64>> {
    let m = parse_multiset(multiset)?;
    let mask: BTreeSet<usize> = spacers.unwrap_or_default().into_iter().collect();
    if k < 1 {
        return Err(PyValueError::new_err("k must be at least 1"));
    }
    let poly =
        distribution::word_distribution(&m, &mask, parse_statistic(stat)?, k).map_err(value_err)?;
    Ok(poly.coeffs().to_vec())
}

/// Coefficients of `sum q^{maj_k(T)}` over the standard tableaux of a
/// shape, k in {1, 2, 3}.
#[pyfunction]
fn syt_distribution(shape: Vec<usize>, k: usize) -> PyResult<Vec<u64>> {
    let shape = parse_partition(shape)?;
    Ok(distribution::syt_distribution(&shape, k)
        .map_err(value_err)?
        .coeffs()
        .to_vec())
}

/// The distance-switched involution at letter i and level k.
#[pyfunction]
fn d_k(word: &PyWord, i: u32, k: usize) -> PyResult<PyWord> {
    if k < 1 {
        return Err(PyValueError::new_err("k must be at least 1"));
    }
    Ok(PyWord {
        inner: equivalence::d_k(&word.inner, i, k).map_err(value_err)?,
    })
}

/// Orbit classes of the permutations of 1..=n under the distance-switched
/// involutions at level k, as dicts with members, des_k and inv_k.
#[pyfunction]
#[pyo3(signature = (n, k, spacers=None))]
fn k_classes(
    py: Python<'_>,
    n: usize,
    k: usize,
    spacers: Option<Vec<usize>>,
) -> PyResult<Vec<Py<PyAny>>> {
    if n < 1 || k < 1 {
        return Err(PyValueError::new_err("n and k must be at least 1"));
    }
    let mask: Option<BTreeSet<usize>> = spacers.map(|s| s.into_iter().collect());
    let classes = equivalence::k_classes(n, k, mask.as_ref()).map_err(value_err)?;
    classes
        .into_iter()
        .map(|class| {
            let dict = pyo3::types::PyDict::new(py);
            dict.set_item(
                "members",
                class
                    .members
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>(),
            )?;
            dict.set_item("des_k", pair_list(&class.shared_des_k))?;
            dict.set_item("inv_k", class.shared_inv_count)?;
            Ok(dict.into_any().unbind())
        })
        .collect()
}

/// Run a named verification suite; returns (pass, json_report).
#[pyfunction]
#[pyo3(signature = (suite, max_size=None))]
fn run_verify(suite: &str, max_size: Option<usize>) -> PyResult<(bool, String)> {
    let report = verify::run_suite(suite, max_size).map_err(value_err)?;
    let json = serde_json::to_string(&report).expect("report serializes");
    Ok((report.pass, json))
}

#[pymodule]
fn kmaj_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyTableau>()?;
    m.add_function(wrap_pyfunction!(enumerate_syt, m)?)?;
    m.add_function(wrap_pyfunction!(syt_count, m)?)?;
    m.add_function(wrap_pyfunction!(q_multinomial, m)?)?;
    m.add_function(wrap_pyfunction!(word_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(syt_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(d_k, m)?)?;
    m.add_function(wrap_pyfunction!(k_classes, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
