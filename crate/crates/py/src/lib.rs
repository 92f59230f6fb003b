//! Python bindings: the free-algebra and Weyl-algebra types plus the
//! identity solver, exposed as the `weylpi_py` extension module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use weylpi::catalog;
use weylpi::freealg::{self, FreePoly, MultiDegree};
use weylpi::idsolve::{self, MatrixLabel};
use weylpi::linearize;
use weylpi::scalar::Char;
use weylpi::weyl;
use weylpi::witt::{self, BasisIndex};

fn char_of(p: u64) -> PyResult<Char> {
    if p == 0 {
        Ok(Char::Zero)
    } else {
        Char::prime(p).map_err(|e| PyValueError::new_err(e.to_string()))
    }
}

fn value_to_py(py: Python<'_>, v: &serde_json::Value) -> PyResult<Py<PyAny>> {
    Ok(match v {
        serde_json::Value::Null => py.None(),
        serde_json::Value::Bool(b) => (*b).into_pyobject(py)?.to_owned().into_any().unbind(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any().unbind()
            } else {
                n.as_f64().unwrap().into_pyobject(py)?.into_any().unbind()
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py)?.into_any().unbind(),
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(value_to_py(py, item)?)?;
            }
            list.into_any().unbind()
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, val) in map {
                dict.set_item(k, value_to_py(py, val)?)?;
            }
            dict.into_any().unbind()
        }
    })
}

/// An element of the free algebra over Q or a prime field.
#[pyclass(name = "Poly", skip_from_py_object)]
#[derive(Clone)]
struct PyPoly {
    inner: FreePoly,
}

impl PyPoly {
    fn check_same_char(&self, other: &PyPoly) -> PyResult<()> {
        if self.inner.char() != other.inner.char() {
            return Err(PyValueError::new_err(format!(
                "characteristic mismatch: {} vs {}",
                self.inner.char(),
                other.inner.char()
            )));
        }
        Ok(())
    }
}

#[pymethods]
impl PyPoly {
    /// Parse an expression like "St3(x1,x2,x3)*x1" or "[x1,[x2,x3]]".
    #[new]
    #[pyo3(signature = (text, char=0))]
    fn new(text: &str, char: u64) -> PyResult<Self> {
        let ch = char_of(char)?;
        let inner = freealg::parse(text, ch).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyPoly { inner })
    }

    fn __repr__(&self) -> String {
        format!("Poly(\"{}\", char={})", self.inner, self.inner.char())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __eq__(&self, other: &PyPoly) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.check_same_char(other)?;
        Ok(PyPoly {
            inner: self.inner.add(&other.inner),
        })
    }

    fn __sub__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.check_same_char(other)?;
        Ok(PyPoly {
            inner: self.inner.sub(&other.inner),
        })
    }

    fn __mul__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.check_same_char(other)?;
        Ok(PyPoly {
            inner: self.inner.mul(&other.inner),
        })
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly {
            inner: self.inner.neg(),
        }
    }

    /// The commutator [self, other].
    fn bracket(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.check_same_char(other)?;
        Ok(PyPoly {
            inner: self.inner.bracket(&other.inner),
        })
    }

    #[getter]
    fn char(&self) -> u64 {
        self.inner.char().value()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// The multidegree of a multihomogeneous polynomial.
    fn mdeg(&self) -> PyResult<Vec<u32>> {
        self.inner
            .mdeg()
            .map(|d| d.entries().to_vec())
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Evaluate at basis elements: variable x_t becomes c_(point[t-1]).
    fn eval(&self, point: Vec<u32>) -> PyResult<PyWeylElem> {
        let point: Vec<BasisIndex> = point.into_iter().map(BasisIndex).collect();
        witt::eval_concrete(&self.inner, &point)
            .map(|inner| PyWeylElem { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Exact identity test; returns a dict with "verdict" and, on
    /// refutation, a re-checkable "witness".
    fn is_identity(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let report = witt::is_identity(&self.inner);
        value_to_py(py, &report.to_json())
    }

    /// Partial linearization of one variable with the given composition.
    fn linearize(&self, var: u32, parts: Vec<u32>) -> PyResult<PyPoly> {
        let gamma =
            linearize::Composition::new(parts).map_err(|e| PyValueError::new_err(e.to_string()))?;
        linearize::lin(&self.inner, var, &gamma)
            .map(|inner| PyPoly { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Complete linearization (multilinear output).
    fn lin_complete(&self) -> PyResult<PyPoly> {
        linearize::lin_complete(&self.inner)
            .map(|inner| PyPoly { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }
}

/// A normal-ordered element of the Weyl algebra.
#[pyclass(name = "WeylElem", skip_from_py_object)]
#[derive(Clone)]
struct PyWeylElem {
    inner: weyl::WeylElement,
}

impl PyWeylElem {
    fn check_same_char(&self, other: &PyWeylElem) -> PyResult<()> {
        if self.inner.char() != other.inner.char() {
            return Err(PyValueError::new_err(format!(
                "characteristic mismatch: {} vs {}",
                self.inner.char(),
                other.inner.char()
            )));
        }
        Ok(())
    }
}

#[pymethods]
impl PyWeylElem {
    fn __repr__(&self) -> String {
        format!("WeylElem(\"{}\", char={})", self.inner, self.inner.char())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __eq__(&self, other: &PyWeylElem) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &PyWeylElem) -> PyResult<PyWeylElem> {
        self.check_same_char(other)?;
        Ok(PyWeylElem {
            inner: self.inner.add(&other.inner),
        })
    }

    fn __sub__(&self, other: &PyWeylElem) -> PyResult<PyWeylElem> {
        self.check_same_char(other)?;
        Ok(PyWeylElem {
            inner: self.inner.sub(&other.inner),
        })
    }

    fn __mul__(&self, other: &PyWeylElem) -> PyResult<PyWeylElem> {
        self.check_same_char(other)?;
        Ok(PyWeylElem {
            inner: self.inner.mul(&other.inner),
        })
    }

    fn __neg__(&self) -> PyWeylElem {
        PyWeylElem {
            inner: self.inner.neg(),
        }
    }

    /// The commutator [self, other].
    fn commutator(&self, other: &PyWeylElem) -> PyResult<PyWeylElem> {
        self.check_same_char(other)?;
        Ok(PyWeylElem {
            inner: self.inner.commutator(&other.inner),
        })
    }

    #[getter]
    fn char(&self) -> u64 {
        self.inner.char().value()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Coefficient of x^i*y^j as a string ("a/b" or a residue).
    fn coefficient(&self, i: u32, j: u32) -> String {
        self.inner.coefficient(i, j).coeff_string()
    }
}

/// Build a catalog element by name (case-insensitive), e.g. "phi22".
#[pyfunction]
#[pyo3(signature = (name, char=0))]
fn named(name: &str, char: u64) -> PyResult<PyPoly> {
    let ch = char_of(char)?;
    let name: catalog::Name = name
        .parse()
        .map_err(|e: weylpi::Error| PyValueError::new_err(e.to_string()))?;
    Ok(PyPoly {
        inner: catalog::named(name, ch),
    })
}

/// Names accepted by `named`.
#[pyfunction]
fn catalog_names() -> Vec<String> {
    catalog::ALL_NAMES.iter().map(|n| n.to_string()).collect()
}

/// The basis element c_i = x^i*y.
#[pyfunction]
#[pyo3(signature = (i, char=0))]
fn basis(i: u32, char: u64) -> PyResult<PyWeylElem> {
    Ok(PyWeylElem {
        inner: weyl::WeylElement::basis_c(i, char_of(char)?),
    })
}

/// Normal-order a word over the alphabet {x, y}, e.g. "yxxy".
#[pyfunction]
#[pyo3(signature = (word, char=0))]
fn normal_form(word: &str, char: u64) -> PyResult<PyWeylElem> {
    let ch = char_of(char)?;
    let letters = weyl::parse_word(word).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(PyWeylElem {
        inner: weyl::normal_form(&letters, ch),
    })
}

/// The standard polynomial St_N of distinct variables.
#[pyfunction]
#[pyo3(signature = (vars, char=0))]
fn st(vars: Vec<u32>, char: u64) -> PyResult<PyPoly> {
    let ch = char_of(char)?;
    freealg::standard_polynomial(vars.len(), &vars, ch)
        .map(|inner| PyPoly { inner })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Compute the identity space of one multidegree; returns the report dict
/// with "mdeg", "char", "monomial_order", "dimension", and "basis".
#[pyfunction]
#[pyo3(signature = (mdeg, char=0))]
fn solve(py: Python<'_>, mdeg: Vec<u32>, char: u64) -> PyResult<Py<PyAny>> {
    let ch = char_of(char)?;
    let report = idsolve::solve(&MultiDegree::new(mdeg), ch);
    value_to_py(py, &report.to_json())
}

fn label_of(label: &str) -> PyResult<MatrixLabel> {
    label
        .parse()
        .map_err(|e: weylpi::Error| PyValueError::new_err(e.to_string()))
}

/// Entries of one of the stored verification matrices: "P44", "P45", "P45S".
#[pyfunction]
fn check_matrix(label: &str) -> PyResult<Vec<Vec<i64>>> {
    Ok(idsolve::assemble_check_matrix(label_of(label)?).entries)
}

/// Exact integer determinant of one of the verification matrices.
#[pyfunction]
fn check_matrix_det(label: &str) -> PyResult<i64> {
    let det = idsolve::assemble_check_matrix(label_of(label)?).det();
    i64::try_from(det).map_err(|_| PyValueError::new_err("determinant does not fit i64"))
}

/// Run the built-in verification table; returns a list of
/// (name, passed, detail) triples.
#[pyfunction]
fn repro() -> Vec<(String, bool, String)> {
    weylpi::repro::run_all()
        .into_iter()
        .map(|r| (r.name.to_string(), r.passed, r.detail))
        .collect()
}

#[pymodule]
fn weylpi_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyWeylElem>()?;
    m.add_function(wrap_pyfunction!(named, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(basis, m)?)?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(st, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(check_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(check_matrix_det, m)?)?;
    m.add_function(wrap_pyfunction!(repro, m)?)?;
    Ok(())
}
