//! Python bindings: `ttspec.Space`, `ttspec.Subset` and the statement checker.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ttspec_core::verify::{self, Scope, Statement};
use ttspec_core::{catalog, dot, format, topology, tt, FinitePoset, RadicalIdealCount, SpaceExpr, SymbolicSubset};

create_exception!(ttspec, TtspecError, PyValueError);

fn err(e: ttspec_core::Error) -> PyErr {
    TtspecError::new_err(e.to_string())
}

/// A spectral space built from finite posets, the generic point over an
/// antichain, Hochster duals and finite sums.
#[pyclass(frozen, eq, from_py_object, module = "ttspec")]
#[derive(Clone, PartialEq)]
struct Space {
    expr: SpaceExpr,
}

/// A subset of a particular space.
#[pyclass(frozen, eq, skip_from_py_object, module = "ttspec")]
#[derive(Clone, PartialEq)]
struct Subset {
    space: SpaceExpr,
    set: SymbolicSubset,
}

impl Space {
    fn own(&self, s: &Subset) -> PyResult<SymbolicSubset> {
        if s.space.normalize() != self.expr.normalize() {
            return Err(err(ttspec_core::Error::CarrierMismatch));
        }
        Ok(s.set.clone())
    }

    fn wrap(&self, set: SymbolicSubset) -> Subset {
        Subset {
            space: self.expr.clone(),
            set,
        }
    }
}

#[pymethods]
impl Space {
    /// A finite poset; `leq` holds pairs `(x, y)` with `x` in the closure of `y`.
    #[staticmethod]
    #[pyo3(signature = (elements, leq = None))]
    fn finite(elements: Vec<String>, leq: Option<Vec<(String, String)>>) -> PyResult<Self> {
        let p = FinitePoset::build(&elements, &leq.unwrap_or_default()).map_err(err)?;
        Ok(Self {
            expr: SpaceExpr::finite(p),
        })
    }

    /// Closed points `c0, c1, …` under one generic point.
    #[staticmethod]
    fn goa() -> Self {
        Self { expr: SpaceExpr::goa() }
    }

    #[staticmethod]
    fn sum(parts: Vec<Space>) -> Self {
        Self {
            expr: SpaceExpr::sum(parts.into_iter().map(|s| s.expr).collect()),
        }
    }

    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        catalog::lookup(name)
            .map(|entry| Self { expr: entry.expr })
            .ok_or_else(|| TtspecError::new_err(format!("no catalog entry `{name}`")))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            expr: format::parse_space(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        format::space_to_json(&self.expr)
    }

    /// The Hochster dual, normalized.
    fn dual(&self) -> Self {
        Self { expr: self.expr.dual() }
    }

    fn normalize(&self) -> Self {
        Self {
            expr: self.expr.normalize(),
        }
    }

    fn is_finite(&self) -> bool {
        self.expr.is_finite()
    }

    fn point_classes(&self) -> Vec<String> {
        self.expr.point_classes().iter().map(|c| self.expr.describe_class(c)).collect()
    }

    fn hasse_dot(&self) -> PyResult<String> {
        dot::space_dot(&self.expr).map_err(err)
    }

    fn props<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let p = topology::space_props(&self.expr).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("finite", p.is_finite)?;
        d.set_item("noetherian", p.is_noetherian)?;
        d.set_item("inverse_noetherian", p.is_inverse_noetherian)?;
        d.set_item("weakly_noetherian", p.is_weakly_noetherian)?;
        let invisible: Vec<String> = p
            .visibility
            .iter()
            .filter(|w| !w.visible)
            .map(|w| self.expr.describe_class(&w.class))
            .collect();
        d.set_item("invisible_points", invisible)?;
        Ok(d)
    }

    /// Every flag of the equivalence between finite generation and the
    /// Noetherian-type conditions, with witnesses described as strings.
    fn cohen_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = tt::cohen_report(&self.expr).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("finite", r.finite)?;
        d.set_item("every_radical_fg", r.every_radical_fg)?;
        d.set_item("every_prime_fg", r.every_prime_fg)?;
        d.set_item("inverse_noetherian", r.inverse_noetherian)?;
        d.set_item("weakly_noetherian", r.weakly_noetherian)?;
        let radical = match &r.non_fg_radical {
            Some(i) => Some(self.expr.describe_subset(i.support()).map_err(err)?),
            None => None,
        };
        d.set_item("non_fg_radical_support", radical)?;
        d.set_item("non_fg_prime", r.non_fg_prime.as_ref().map(|p| self.expr.describe_point(p.point())))?;
        Ok(d)
    }

    /// The number of radical ideals, or `None` when there are infinitely many.
    fn count_radical_ideals(&self) -> PyResult<Option<u128>> {
        Ok(match tt::count_radical_ideals(&self.expr).map_err(err)? {
            RadicalIdealCount::Finite(n) => Some(n),
            RadicalIdealCount::Infinite(_) => None,
        })
    }

    fn find_non_fg_prime(&self) -> PyResult<Option<String>> {
        let class = tt::find_non_fg_prime(&self.expr).map_err(err)?;
        Ok(class.map(|c| self.expr.describe_point(&c.representative())))
    }

    /// Reads a subset document such as `{"members": ["a"]}`.
    fn subset(&self, doc: &str) -> PyResult<Subset> {
        Ok(self.wrap(format::parse_subset(&self.expr, doc).map_err(err)?))
    }

    fn empty(&self) -> Subset {
        self.wrap(SymbolicSubset::empty(&self.expr))
    }

    fn full(&self) -> Subset {
        self.wrap(SymbolicSubset::full(&self.expr))
    }

    fn is_open(&self, s: &Subset) -> PyResult<bool> {
        topology::is_open(&self.expr, &self.own(s)?).map_err(err)
    }

    fn is_closed(&self, s: &Subset) -> PyResult<bool> {
        topology::is_closed(&self.expr, &self.own(s)?).map_err(err)
    }

    fn is_quasi_compact_open(&self, s: &Subset) -> PyResult<bool> {
        topology::is_quasi_compact_open(&self.expr, &self.own(s)?).map_err(err)
    }

    fn is_thomason(&self, s: &Subset) -> PyResult<bool> {
        topology::is_thomason(&self.expr, &self.own(s)?).map_err(err)
    }

    fn is_constructible(&self, s: &Subset) -> PyResult<bool> {
        topology::is_constructible(&self.expr, &self.own(s)?).map_err(err)
    }

    fn is_weakly_visible(&self, s: &Subset) -> PyResult<bool> {
        topology::is_weakly_visible(&self.expr, &self.own(s)?).map_err(err)
    }

    fn closure(&self, s: &Subset) -> PyResult<Subset> {
        Ok(self.wrap(topology::closure(&self.expr, &self.own(s)?).map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("Space({:?})", self.expr)
    }
}

impl Subset {
    fn same_space(&self, other: &Subset) -> PyResult<SymbolicSubset> {
        Space {
            expr: self.space.clone(),
        }
        .own(other)
    }
}

#[pymethods]
impl Subset {
    fn complement(&self) -> Self {
        Self {
            space: self.space.clone(),
            set: self.set.complement(),
        }
    }

    fn union(&self, other: &Subset) -> PyResult<Self> {
        Ok(Self {
            space: self.space.clone(),
            set: self.set.union(&self.same_space(other)?).map_err(err)?,
        })
    }

    fn intersection(&self, other: &Subset) -> PyResult<Self> {
        Ok(Self {
            space: self.space.clone(),
            set: self.set.intersection(&self.same_space(other)?).map_err(err)?,
        })
    }

    fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    fn to_json(&self) -> PyResult<String> {
        format::subset_to_json(&self.space, &self.set).map_err(err)
    }

    fn __str__(&self) -> PyResult<String> {
        self.space.describe_subset(&self.set).map_err(err)
    }

    fn __repr__(&self) -> PyResult<String> {
        Ok(format!("Subset({})", self.__str__()?))
    }
}

/// Checks a statement on all labeled posets up to `posets` points and,
/// with `catalog`, on the builtin catalog. Returns a summary dict.
#[pyfunction]
#[pyo3(signature = (statement, posets = None, catalog = false))]
fn check<'py>(py: Python<'py>, statement: &str, posets: Option<usize>, catalog: bool) -> PyResult<Bound<'py, PyDict>> {
    let stmt: Statement = statement.parse().map_err(err)?;
    let scope = match (posets, catalog) {
        (Some(n), true) => Scope::Both(n),
        (Some(n), false) => Scope::Posets(n),
        (None, _) => Scope::Catalog,
    };
    let result = py.detach(|| verify::check_statement(stmt, &scope)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("statement", &result.statement)?;
    d.set_item("instances", result.instances)?;
    d.set_item("failures", result.failures.len())?;
    d.set_item("passed", result.passed())?;
    d.set_item("seconds", result.elapsed.as_secs_f64())?;
    Ok(d)
}

#[pyfunction]
fn statements() -> Vec<&'static str> {
    Statement::ALL.iter().map(|s| s.id()).collect()
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    catalog::catalog().iter().map(|e| e.name).collect()
}

#[pymodule]
fn ttspec(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Space>()?;
    m.add_class::<Subset>()?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(statements, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add("TtspecError", m.py().get_type::<TtspecError>())?;
    Ok(())
}
