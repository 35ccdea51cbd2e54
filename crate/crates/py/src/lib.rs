//! Python bindings: the finite-algebra types, the star calculus, the
//! theorem constructions and the suite runner, exposed as an extension
//! module named `starreg_py`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use starreg_core::algebra::{self, text, AlgebraRef, Congruence, FiniteAlgebra, Subalgebra};
use starreg_core::catalog::CatalogSpec;
use starreg_core::hopf;
use starreg_core::star::{self, IdealContext};
use starreg_core::suite;
use starreg_core::theorems;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_context(context: &str) -> PyResult<IdealContext> {
    match context {
        "pointed" => Ok(IdealContext::Pointed),
        "total" => Ok(IdealContext::Total),
        other => Err(PyValueError::new_err(format!(
            "unknown context {other:?} (pointed|total)"
        ))),
    }
}

/// A finite group or unital ring given by validated operation tables.
#[pyclass(name = "FiniteAlgebra", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyFiniteAlgebra {
    inner: AlgebraRef,
}

#[pymethods]
impl PyFiniteAlgebra {
    #[staticmethod]
    fn cyclic_group(n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("order must be positive"));
        }
        Ok(PyFiniteAlgebra { inner: FiniteAlgebra::cyclic_group(n) })
    }

    #[staticmethod]
    fn dihedral_group(n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("rotation order must be positive"));
        }
        Ok(PyFiniteAlgebra { inner: FiniteAlgebra::dihedral_group(n) })
    }

    #[staticmethod]
    fn symmetric_group(n: usize) -> PyResult<Self> {
        if !(1..=4).contains(&n) {
            return Err(PyValueError::new_err("supported range is 1..=4"));
        }
        Ok(PyFiniteAlgebra { inner: FiniteAlgebra::symmetric_group(n) })
    }

    #[staticmethod]
    fn quaternion_group() -> Self {
        PyFiniteAlgebra { inner: FiniteAlgebra::quaternion_group() }
    }

    #[staticmethod]
    fn cyclic_ring(n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("size must be positive"));
        }
        Ok(PyFiniteAlgebra { inner: FiniteAlgebra::cyclic_ring(n) })
    }

    /// Parse one record of the plain-text table format.
    #[staticmethod]
    fn from_table_text(text_record: &str) -> PyResult<Self> {
        Ok(PyFiniteAlgebra { inner: text::parse_algebra(text_record).map_err(err)? })
    }

    /// Direct product with component-wise operations.
    fn product(&self, other: &PyFiniteAlgebra) -> PyResult<Self> {
        let p = algebra::product(&self.inner, &other.inner).map_err(err)?;
        Ok(PyFiniteAlgebra { inner: p.algebra })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn signature(&self) -> String {
        self.inner.signature().to_string()
    }

    fn element_order(&self, x: usize) -> PyResult<usize> {
        if x >= self.inner.size() {
            return Err(PyValueError::new_err("element out of range"));
        }
        Ok(self.inner.element_order(x))
    }

    fn to_table_text(&self) -> String {
        text::write_algebra(&self.inner)
    }

    /// Every subalgebra, as sorted element lists.
    fn subalgebras(&self) -> Vec<Vec<usize>> {
        starreg_core::catalog::enumerate_subalgebras(&self.inner)
            .iter()
            .map(|s| s.elements().to_vec())
            .collect()
    }

    /// Every normal subgroup (groups only), as sorted element lists.
    fn normal_subgroups(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(starreg_core::catalog::enumerate_normal_subgroups(&self.inner)
            .map_err(err)?
            .iter()
            .map(|s| s.elements().to_vec())
            .collect())
    }

    /// Every congruence, as class-index arrays.
    fn congruences(&self) -> Vec<Vec<usize>> {
        starreg_core::catalog::enumerate_congruences(&self.inner)
            .iter()
            .map(|c| (0..self.inner.size()).map(|x| c.class_of(x)).collect())
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("FiniteAlgebra({})", self.inner)
    }

    fn __eq__(&self, other: &PyFiniteAlgebra) -> bool {
        self.inner == other.inner
    }
}

/// A total map between two carriers.
#[pyclass(name = "Morphism", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMorphism {
    inner: algebra::Morphism,
}

#[pymethods]
impl PyMorphism {
    #[new]
    fn new(dom: &PyFiniteAlgebra, cod: &PyFiniteAlgebra, map: Vec<usize>) -> PyResult<Self> {
        Ok(PyMorphism {
            inner: algebra::Morphism::new(dom.inner.clone(), cod.inner.clone(), map)
                .map_err(err)?,
        })
    }

    #[getter]
    fn dom(&self) -> PyFiniteAlgebra {
        PyFiniteAlgebra { inner: self.inner.dom().clone() }
    }

    #[getter]
    fn cod(&self) -> PyFiniteAlgebra {
        PyFiniteAlgebra { inner: self.inner.cod().clone() }
    }

    #[getter]
    fn map(&self) -> Vec<usize> {
        self.inner.map().to_vec()
    }

    fn apply(&self, x: usize) -> PyResult<usize> {
        if x >= self.inner.dom().size() {
            return Err(PyValueError::new_err("element out of range"));
        }
        Ok(self.inner.apply(x))
    }

    fn is_homomorphism(&self) -> bool {
        self.inner.is_homomorphism()
    }

    fn is_injective(&self) -> bool {
        self.inner.is_injective()
    }

    fn is_surjective(&self) -> bool {
        self.inner.is_surjective()
    }

    fn is_isomorphism(&self) -> bool {
        self.inner.is_isomorphism()
    }

    fn __repr__(&self) -> String {
        format!("Morphism({})", self.inner)
    }
}

/// A monic star in canonical pair-set form.
#[pyclass(name = "MonicStar", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMonicStar {
    inner: star::MonicStar,
}

#[pymethods]
impl PyMonicStar {
    /// Pointed star `{e} × K` of a subgroup given by its elements.
    #[staticmethod]
    fn from_subgroup(a: &PyFiniteAlgebra, elements: Vec<usize>) -> PyResult<Self> {
        let sub = Subalgebra::new(a.inner.clone(), elements).map_err(err)?;
        Ok(PyMonicStar { inner: star::MonicStar::from_subgroup(&sub).map_err(err)? })
    }

    /// Total star of the congruence generated by the given pairs.
    #[staticmethod]
    fn from_congruence_pairs(
        a: &PyFiniteAlgebra,
        pairs: Vec<(usize, usize)>,
    ) -> PyResult<Self> {
        let c = Congruence::generated(a.inner.clone(), &pairs).map_err(err)?;
        Ok(PyMonicStar { inner: star::MonicStar::from_congruence(&c) })
    }

    #[getter]
    fn context(&self) -> String {
        self.inner.context().to_string()
    }

    #[getter]
    fn pairs(&self) -> Vec<(usize, usize)> {
        self.inner.pairs().to_vec()
    }

    #[getter]
    fn base_size(&self) -> usize {
        self.inner.base().size()
    }

    fn is_kernel_star(&self) -> PyResult<bool> {
        star::is_kernel_star(&self.inner).map_err(err)
    }

    /// Quotient by the congruence the star generates, with the surjection.
    fn coequalizer(&self) -> PyResult<(PyFiniteAlgebra, PyMorphism)> {
        let (q, map) = star::coequalizer_of_star(&self.inner).map_err(err)?;
        Ok((PyFiniteAlgebra { inner: q }, PyMorphism { inner: map }))
    }

    fn __repr__(&self) -> String {
        format!("MonicStar({})", self.inner)
    }
}

/// Outcome of one claimed isomorphism.
#[pyclass(name = "IsoVerdict", frozen)]
struct PyIsoVerdict {
    #[pyo3(get)]
    verified: bool,
    #[pyo3(get)]
    lhs_size: usize,
    #[pyo3(get)]
    rhs_size: usize,
    #[pyo3(get)]
    witness: Option<Vec<usize>>,
}

impl From<theorems::IsoVerdict> for PyIsoVerdict {
    fn from(v: theorems::IsoVerdict) -> Self {
        PyIsoVerdict {
            verified: v.is_verified(),
            lhs_size: v.lhs.size(),
            rhs_size: v.rhs.size(),
            witness: v.witness.map(|w| w.map().to_vec()),
        }
    }
}

#[pymethods]
impl PyIsoVerdict {
    fn __repr__(&self) -> String {
        format!(
            "IsoVerdict(verified={}, lhs_size={}, rhs_size={})",
            self.verified, self.lhs_size, self.rhs_size
        )
    }
}

/// Exhaustive isomorphism search; `None` means definitively not isomorphic
/// at these sizes.
#[pyfunction]
fn find_isomorphism(a: &PyFiniteAlgebra, b: &PyFiniteAlgebra) -> Option<PyMorphism> {
    algebra::find_isomorphism(&a.inner, &b.inner).map(|m| PyMorphism { inner: m })
}

/// Kernel star of a morphism in the given context.
#[pyfunction]
fn kernel_star(f: &PyMorphism, context: &str) -> PyResult<PyMonicStar> {
    let ctx = parse_context(context)?;
    Ok(PyMonicStar { inner: star::kernel_star(&f.inner, ctx).map_err(err)? })
}

/// Asymmetric join of a kernel star with a subobject, as an element list.
#[pyfunction]
fn asymmetric_join(f: &PyMonicStar, m_elements: Vec<usize>) -> PyResult<Vec<usize>> {
    let m = Subalgebra::new(f.inner.base().clone(), m_elements).map_err(err)?;
    let join = theorems::asymmetric_join_sub(&f.inner, &m).map_err(err)?;
    Ok(join.elements().to_vec())
}

/// Diamond isomorphism theorem instance.
#[pyfunction]
fn diamond_iso(f: &PyMonicStar, m_elements: Vec<usize>) -> PyResult<PyIsoVerdict> {
    let m = Subalgebra::new(f.inner.base().clone(), m_elements).map_err(err)?;
    let outcome = theorems::diamond_iso(&f.inner, &m).map_err(err)?;
    if !outcome.holds() {
        return Err(PyValueError::new_err("classical cross-check failed"));
    }
    Ok(outcome.verdict.into())
}

/// Double quotient isomorphism theorem instance for nested kernel stars.
#[pyfunction]
fn double_quotient_iso(f: &PyMonicStar, g: &PyMonicStar) -> PyResult<PyIsoVerdict> {
    let outcome = theorems::double_quotient_iso(&f.inner, &g.inner).map_err(err)?;
    Ok(outcome.verdict.into())
}

/// Zassenhaus lemma instance on a group: subgroups `u`, `v` and normal
/// subgroups `n1` of `u`, `n2` of `v`, all as global element lists.
/// Returns the three quotient sizes and whether every claimed isomorphism
/// was verified.
#[pyfunction]
fn zassenhaus(
    a: &PyFiniteAlgebra,
    u_elements: Vec<usize>,
    v_elements: Vec<usize>,
    n1_elements: Vec<usize>,
    n2_elements: Vec<usize>,
) -> PyResult<(bool, usize, usize, usize)> {
    let u = Subalgebra::new(a.inner.clone(), u_elements).map_err(err)?;
    let v = Subalgebra::new(a.inner.clone(), v_elements).map_err(err)?;
    let star_on = |outer: &Subalgebra, inner: &[usize]| -> PyResult<star::MonicStar> {
        let (alg, _) = outer.to_algebra();
        let local: Vec<usize> = inner
            .iter()
            .map(|&x| {
                outer
                    .position(x)
                    .ok_or_else(|| PyValueError::new_err("kernel leaves its subgroup"))
            })
            .collect::<PyResult<_>>()?;
        star::MonicStar::from_subgroup(&Subalgebra::new(alg, local).map_err(err)?).map_err(err)
    };
    let f = star_on(&u, &n1_elements)?;
    let g = star_on(&v, &n2_elements)?;
    let outcome = theorems::zassenhaus(&a.inner, &u, &v, &f, &g).map_err(err)?;
    Ok((
        outcome.holds(),
        outcome.left.size(),
        outcome.middle.size(),
        outcome.right.size(),
    ))
}

/// Dimension of the Hopf quotient `F_p[G] / F_p[G] K⁺` for the span of a
/// normal subgroup.
#[pyfunction]
fn hopf_quotient_dim(g: &PyFiniteAlgebra, n_elements: Vec<usize>, p: u64) -> PyResult<usize> {
    let h = hopf::group_algebra(&g.inner, p).map_err(err)?;
    let span = hopf::Subspace::span_of_basis(&h, &n_elements);
    let (q, _) = hopf::hopf_quotient(&h, &span).map_err(err)?;
    Ok(q.dim())
}

/// Hopf Zassenhaus instance over `F_p`; returns (verified-and-oracle-match,
/// left dim, right dim).
#[pyfunction]
#[allow(clippy::too_many_arguments)]
fn hopf_zassenhaus(
    g: &PyFiniteAlgebra,
    u_elements: Vec<usize>,
    v_elements: Vec<usize>,
    k_elements: Vec<usize>,
    l_elements: Vec<usize>,
    p: u64,
) -> PyResult<(bool, usize, usize)> {
    let h = hopf::group_algebra(&g.inner, p).map_err(err)?;
    let span = |idx: &[usize]| hopf::Subspace::span_of_basis(&h, idx);
    let outcome = hopf::zassenhaus_hopf(
        &h,
        &span(&u_elements),
        &span(&v_elements),
        &span(&k_elements),
        &span(&l_elements),
    )
    .map_err(err)?;
    Ok((outcome.holds(), outcome.left.dim(), outcome.right.dim()))
}

/// Run one verification suite and return the JSON report as a string.
#[pyfunction]
#[pyo3(signature = (suite, context, groups_max=8, rings_max=8, primes=vec![2, 3, 5], jobs=1))]
fn run_suite(
    suite: &str,
    context: &str,
    groups_max: usize,
    rings_max: usize,
    primes: Vec<u64>,
    jobs: usize,
) -> PyResult<String> {
    let suite: suite::Suite = suite.parse().map_err(err)?;
    let ctx = parse_context(context)?;
    let catalog = if suite.is_hopf() || ctx == IdealContext::Pointed {
        CatalogSpec::groups(groups_max)
    } else {
        CatalogSpec::rings(rings_max)
    };
    let options = suite::SuiteOptions { primes, jobs: jobs.max(1) };
    let report = suite::run_suite(suite, ctx, &catalog, &options).map_err(err)?;
    report.to_json_string().map_err(err)
}

#[pymodule]
fn starreg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyFiniteAlgebra>()?;
    m.add_class::<PyMorphism>()?;
    m.add_class::<PyMonicStar>()?;
    m.add_class::<PyIsoVerdict>()?;
    m.add_function(wrap_pyfunction!(find_isomorphism, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_star, m)?)?;
    m.add_function(wrap_pyfunction!(asymmetric_join, m)?)?;
    m.add_function(wrap_pyfunction!(diamond_iso, m)?)?;
    m.add_function(wrap_pyfunction!(double_quotient_iso, m)?)?;
    m.add_function(wrap_pyfunction!(zassenhaus, m)?)?;
    m.add_function(wrap_pyfunction!(hopf_quotient_dim, m)?)?;
    m.add_function(wrap_pyfunction!(hopf_zassenhaus, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
