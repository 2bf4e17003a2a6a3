//! Python access to single graphs (criticality, c-values, canonical keys,
//! class C) and to the disk catalogs. Graphs cross the boundary as `rotg`
//! text, so anything read from a stored catalog can be passed in directly.

use critatlas::catalog::{hex, CatalogStore};
use critatlas::color::{c_pair, is_critical, oracle::is_critical_exhaustive};
use critatlas::cylgen::{class_c_with, is_class_c};
use critatlas::diskgen::DiskCatalog;
use critatlas::embed::rotg::{parse_records, write_record};
use critatlas::embed::{boundary_distance, canonical_key, IsoGroup, MarkedPlaneGraph};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A plane graph with a precolored outer face or two precolored boundaries.
#[pyclass(name = "MarkedGraph", frozen, module = "critatlas_py")]
#[derive(Clone)]
struct PyMarked {
    inner: MarkedPlaneGraph,
}

#[pymethods]
impl PyMarked {
    /// Parses exactly one `rotg` record.
    #[staticmethod]
    fn from_rotg(text: &str) -> PyResult<Self> {
        let mut gs = parse_records(text).map_err(value_err)?;
        if gs.len() != 1 {
            return Err(value_err(format!("expected one record, found {}", gs.len())));
        }
        Ok(PyMarked { inner: gs.remove(0) })
    }

    fn to_rotg(&self) -> String {
        write_record(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.graph().n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.graph().m()
    }

    #[getter]
    fn is_cylinder(&self) -> bool {
        self.inner.is_cylinder()
    }

    /// Lengths of the marked faces (0 for a vertex boundary).
    #[getter]
    fn boundary_lengths(&self) -> Vec<usize> {
        (0..self.inner.marks().len()).map(|i| self.inner.mark_len(i)).collect()
    }

    fn face_lengths(&self) -> Vec<usize> {
        let g = self.inner.graph();
        (0..g.face_count() as u32).map(|f| g.face_len(f)).collect()
    }

    fn is_critical(&self) -> bool {
        is_critical(&self.inner)
    }

    /// Brute force over all subgraphs; `None` above the size limit.
    fn is_critical_exhaustive(&self) -> Option<bool> {
        is_critical_exhaustive(&self.inner)
    }

    /// `(c(C1 -> C2), c(C2 -> C1))` for a cylinder graph.
    fn c_pair(&self) -> PyResult<(usize, usize)> {
        if !self.inner.is_cylinder() {
            return Err(value_err("c-values need two boundaries"));
        }
        Ok(c_pair(&self.inner))
    }

    fn boundary_distance(&self) -> PyResult<usize> {
        if !self.inner.is_cylinder() {
            return Err(value_err("distance needs two boundaries"));
        }
        Ok(boundary_distance(&self.inner))
    }

    fn is_class_c(&self) -> bool {
        is_class_c(&self.inner)
    }

    /// Hex canonical key; with `reflect` mirror images share a key.
    #[pyo3(signature = (reflect = true))]
    fn key(&self, reflect: bool) -> String {
        let group = if reflect { IsoGroup::Reflect } else { IsoGroup::OrientOnly };
        hex(&canonical_key(&self.inner, group))
    }

    fn mirror(&self) -> Self {
        PyMarked { inner: self.inner.mirror() }
    }

    fn swapped(&self) -> PyResult<Self> {
        if !self.inner.is_cylinder() {
            return Err(value_err("only cylinder graphs have two boundaries"));
        }
        Ok(PyMarked { inner: self.inner.swapped() })
    }

    fn __repr__(&self) -> String {
        format!("MarkedGraph(n={}, m={}, boundaries={:?})", self.n(), self.m(), self.boundary_lengths())
    }
}

/// The class-C chain with `flips[i]` choosing the root of step `i + 1`.
#[pyfunction]
#[pyo3(signature = (n, flips = None))]
fn class_c(n: usize, flips: Option<Vec<bool>>) -> PyResult<PyMarked> {
    let flips = flips.unwrap_or_else(|| vec![false; n]);
    if flips.len() != n {
        return Err(value_err(format!("{} flips for {n} steps", flips.len())));
    }
    Ok(PyMarked { inner: class_c_with(&flips) })
}

/// Builds the disk catalogs in memory; returns `{length: [graphs]}`.
#[pyfunction]
fn disk_catalog(py: Python<'_>, max_len: usize) -> PyResult<Vec<(usize, Vec<PyMarked>)>> {
    if !(5..=16).contains(&max_len) {
        return Err(value_err("max_len must lie in 5..=16"));
    }
    let cat = py.allow_threads(|| {
        let mut c = DiskCatalog::new(IsoGroup::Reflect);
        c.build_up_to(max_len);
        c
    });
    Ok((5..=max_len).map(|l| (l, cat.graphs(l).map(|g| PyMarked { inner: g.clone() }).collect())).collect())
}

/// Reads a stored family such as `disk/K13` or `cyl/level1`.
#[pyfunction]
fn load_family(root: &str, family: &str) -> PyResult<Vec<PyMarked>> {
    let store = CatalogStore::open(root).map_err(value_err)?;
    let gs = store.read_family(family).map_err(value_err)?;
    Ok(gs.into_iter().map(|inner| PyMarked { inner }).collect())
}

#[pymodule]
fn critatlas_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMarked>()?;
    m.add_function(wrap_pyfunction!(class_c, m)?)?;
    m.add_function(wrap_pyfunction!(disk_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(load_family, m)?)?;
    Ok(())
}
