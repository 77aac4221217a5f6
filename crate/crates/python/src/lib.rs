//! Python bindings.

use mixcode_core::quantum::{css_with_cap, cyclic_code_from_assignment, search_dual_containing, DISTANCE_CAP};
use mixcode_core::reproduce::{self, Target};
use mixcode_core::spec_io::{enumerator_to_json, parse_kind, parse_word, CodeSpec};
use mixcode_core::weight_enum::{
    complete_enumerator, hamming_enumerator, hamming_transform, lee_enumerator, lee_transform,
    macwilliams_complete_check, symmetrized_enumerator, symmetrized_transform,
};
use mixcode_core::{
    polynomial, AdditiveCode as Code, BlockProfile, Enumerator, EnumeratorKind, Error, FactorAssignment,
    FieldElement, GrayContext, LinearCode as Linear, Poly, Prime, ShiftUnits,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.code()))
}

fn prime(p: u32) -> PyResult<Prime> {
    Prime::new(p).map_err(err)
}

fn enumerator(code: &Code, kind: EnumeratorKind) -> PyResult<Enumerator> {
    match kind {
        EnumeratorKind::Complete => complete_enumerator(code),
        EnumeratorKind::Hamming => hamming_enumerator(code),
        EnumeratorKind::Symmetrized => symmetrized_enumerator(code),
        EnumeratorKind::Lee => lee_enumerator(code),
    }
    .map_err(err)
}

/// An S-submodule of Z_p^q x R^r x S^s.
#[pyclass(name = "AdditiveCode", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct AdditiveCode(Code);

#[pymethods]
impl AdditiveCode {
    /// Builds a code from its JSON description.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let spec = CodeSpec::from_json(text).map_err(err)?;
        Ok(AdditiveCode(spec.build().map_err(err)?))
    }

    /// The submodule spanned by words in block notation, e.g. "(1,0;0,u;1+u^2,0)".
    #[staticmethod]
    fn span(p: u32, q: usize, r: usize, s: usize, words: Vec<String>) -> PyResult<Self> {
        let prof = BlockProfile::new(p, q, r, s).map_err(err)?;
        let gens = words
            .iter()
            .map(|w| parse_word(prof, w))
            .collect::<mixcode_core::Result<Vec<_>>>()
            .map_err(err)?;
        Ok(AdditiveCode(Code::span_closure(prof, &gens).map_err(err)?))
    }

    #[getter]
    fn p(&self) -> u32 {
        self.0.profile().p().get()
    }

    /// (q, r, s)
    #[getter]
    fn profile(&self) -> (usize, usize, usize) {
        let prof = self.0.profile();
        (prof.q(), prof.r(), prof.s())
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    /// Number of codewords.
    #[getter]
    fn size(&self) -> Option<u128> {
        self.0.size()
    }

    fn dual(&self) -> Self {
        AdditiveCode(self.0.dual())
    }

    fn contains(&self, word: &str) -> PyResult<bool> {
        let w = parse_word(self.0.profile(), word).map_err(err)?;
        self.0.contains(&w).map_err(err)
    }

    fn contains_code(&self, other: &AdditiveCode) -> PyResult<bool> {
        self.0.contains_code(&other.0).map_err(err)
    }

    fn is_dual_containing(&self) -> bool {
        self.0.is_dual_containing()
    }

    /// Tests invariance under the shift with units given as coefficient lists.
    fn is_constacyclic(&self, mu0: Vec<u32>, mu1: Vec<u32>, mu2: Vec<u32>) -> PyResult<bool> {
        let units = ShiftUnits::new(self.0.profile().p(), &mu0, &mu1, &mu2).map_err(err)?;
        self.0.is_constacyclic(&units).map_err(err)
    }

    /// A Z_p basis in block notation.
    fn basis(&self) -> Vec<String> {
        self.0.basis_words().iter().map(|w| w.to_string()).collect()
    }

    /// A Z_p basis as flattened coefficient rows.
    fn flat_basis(&self) -> Vec<Vec<u32>> {
        self.0.basis().rows().to_vec()
    }

    fn to_json(&self) -> String {
        CodeSpec::from_code(&self.0).to_json()
    }

    fn gray_image(&self) -> PyResult<LinearCode> {
        let gray = GrayContext::new(self.0.profile().p()).map_err(err)?;
        Ok(LinearCode(gray.gray_image(&self.0).map_err(err)?))
    }

    /// The enumerator of the given kind as text.
    #[pyo3(signature = (kind = "hamming"))]
    fn weight_enumerator(&self, kind: &str) -> PyResult<String> {
        Ok(enumerator(&self.0, parse_kind(kind).map_err(err)?)?.to_string())
    }

    /// (exponents, coefficient) pairs in decreasing order.
    #[pyo3(signature = (kind = "hamming"))]
    fn enumerator_terms(&self, kind: &str) -> PyResult<Vec<(Vec<u32>, i128)>> {
        Ok(enumerator(&self.0, parse_kind(kind).map_err(err)?)?.dense_terms())
    }

    /// The enumerator as a JSON document.
    #[pyo3(signature = (kind = "hamming"))]
    fn enumerator_json(&self, kind: &str) -> PyResult<String> {
        let w = enumerator(&self.0, parse_kind(kind).map_err(err)?)?;
        Ok(enumerator_to_json(&w).to_string())
    }

    /// Whether the transform of this code's enumerator equals the dual's.
    #[pyo3(signature = (kind = "hamming"))]
    fn macwilliams(&self, kind: &str) -> PyResult<bool> {
        let kind = parse_kind(kind).map_err(err)?;
        if kind == EnumeratorKind::Complete {
            return macwilliams_complete_check(&self.0).map_err(err);
        }
        let p = self.0.profile().p();
        let size = self.0.size().ok_or_else(|| err(Error::Overflow))? as i128;
        let w = enumerator(&self.0, kind)?;
        let t = match kind {
            EnumeratorKind::Hamming => hamming_transform(&w, size, p),
            EnumeratorKind::Symmetrized => symmetrized_transform(&w, size, p),
            _ => lee_transform(&w, size, p),
        }
        .map_err(err)?;
        Ok(t == enumerator(&self.0.dual(), kind)?)
    }

    fn __repr__(&self) -> String {
        let (q, r, s) = self.profile();
        format!("AdditiveCode(p={}, q={q}, r={r}, s={s}, rank={})", self.p(), self.rank())
    }
}

/// A linear code over Z_p.
#[pyclass(name = "LinearCode", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct LinearCode(Linear);

#[pymethods]
impl LinearCode {
    #[new]
    #[pyo3(signature = (p, rows, n = None))]
    fn new(p: u32, rows: Vec<Vec<u32>>, n: Option<usize>) -> PyResult<Self> {
        let n = match (n, rows.first()) {
            (Some(n), _) => n,
            (None, Some(r)) => r.len(),
            (None, None) => return Err(PyValueError::new_err("n is required when there are no rows")),
        };
        Ok(LinearCode(Linear::new(prime(p)?, n, &rows).map_err(err)?))
    }

    #[getter]
    fn p(&self) -> u32 {
        self.0.prime().get()
    }

    #[getter]
    fn length(&self) -> usize {
        self.0.length()
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.0.dimension()
    }

    fn generator(&self) -> Vec<Vec<u32>> {
        self.0.generator().to_vec()
    }

    fn parity_check(&self) -> Vec<Vec<u32>> {
        self.0.parity_check()
    }

    fn euclidean_dual(&self) -> Self {
        LinearCode(self.0.euclidean_dual())
    }

    fn contains(&self, v: Vec<u32>) -> bool {
        self.0.contains(&v)
    }

    fn is_dual_containing(&self) -> bool {
        self.0.is_dual_containing()
    }

    /// Exact minimum distance; with a cap, raises when it is not reached.
    #[pyo3(signature = (cap = None))]
    fn min_distance(&self, cap: Option<usize>) -> PyResult<usize> {
        self.0.min_distance(cap.unwrap_or(self.0.length())).map_err(err)
    }

    fn is_quasi_twisted(&self, lam: u32, l: usize) -> PyResult<bool> {
        self.0.is_quasi_twisted(lam, l).map_err(err)
    }

    /// (n, k, d, exact) of the CSS code.
    #[pyo3(signature = (cap = DISTANCE_CAP))]
    fn css(&self, cap: usize) -> PyResult<(usize, usize, usize, bool)> {
        let q = css_with_cap(&self.0, cap).map_err(err)?;
        Ok((q.n, q.k, q.d.value(), q.d.is_exact()))
    }

    fn __repr__(&self) -> String {
        format!("LinearCode(p={}, n={}, k={})", self.p(), self.length(), self.dimension())
    }
}

/// Irreducible factors of x^n - lam over Z_p, lowest degree coefficient first.
#[pyfunction]
#[pyo3(signature = (p, n, lam = 1))]
fn factor(p: u32, n: usize, lam: u32) -> PyResult<Vec<Vec<u32>>> {
    let p = prime(p)?;
    let fs = polynomial::factor_xn_minus_lambda(p, n, FieldElement::from_prime(lam as u64, p)).map_err(err)?;
    Ok(fs.iter().map(|f| f.residues()).collect())
}

/// The cyclic code <F0^, u F1^> of length s over R, given F0 and F1.
#[pyfunction]
fn cyclic_code(p: u32, s: usize, f0: Vec<u32>, f1: Vec<u32>) -> PyResult<AdditiveCode> {
    let p = prime(p)?;
    let fa = FactorAssignment::from_products(p, s, &Poly::from_field(p, &f0), &Poly::from_field(p, &f1))
        .map_err(err)?;
    Ok(AdditiveCode(cyclic_code_from_assignment(&fa)))
}

/// Dual-containing Gray images of cyclic codes over R, one per parameter set.
#[pyfunction]
fn css_search<'py>(py: Python<'py>, p: u32, s: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let hits = search_dual_containing(prime(p)?, s).map_err(err)?;
    hits.iter()
        .map(|h| {
            let d = PyDict::new(py);
            d.set_item("g0", h.assignment.hat_f0().residues())?;
            d.set_item("g1", h.assignment.hat_f1().residues())?;
            d.set_item("slots", h.assignment.slots().to_vec())?;
            d.set_item("gray", (2 * s, h.gray_dimension, h.params.d.value()))?;
            d.set_item("quantum", (h.params.n, h.params.k, h.params.d.value()))?;
            d.set_item("exact", h.params.d.is_exact())?;
            Ok(d)
        })
        .collect()
}

/// (item, passed, detail) for each stored comparison of a target.
#[pyfunction]
fn reproduce_target(target: &str) -> PyResult<Vec<(String, bool, String)>> {
    let t: Target = target.parse().map_err(err)?;
    let checks = reproduce::run(t).map_err(err)?;
    Ok(checks.into_iter().map(|c| (c.item, c.pass, c.detail)).collect())
}

#[pymodule]
fn mixcode(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<AdditiveCode>()?;
    m.add_class::<LinearCode>()?;
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_code, m)?)?;
    m.add_function(wrap_pyfunction!(css_search, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_target, m)?)?;
    Ok(())
}
