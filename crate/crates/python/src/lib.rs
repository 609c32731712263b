//! Python bindings: the main polygon type and the verification entry
//! points, exposed as the `volprod` extension module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use volprod_core::canonical::{bumped_ngon, random_body, regular_ngon, Symmetry};
use volprod_core::geometry::{make_polygon, pt, ConvexPolygon};
use volprod_core::polarity::{
    eggleston_product, polar, polar_area_quadrature, volume_product, CenteredBody,
};
use volprod_core::santalo::{default_tolerance, santalo_point};
use volprod_core::sectors::{f_bound, g_bound, gamma_constant};
use volprod_core::stability::{
    centre_offset_for_excess, eggleston_refined_bound, verify_difference_stability,
    verify_nfold_stability, verify_parallelogram_stability, verify_triangle_stability,
    TheoremVerdict,
};

fn err(e: volprod_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn verdict_dict(py: Python<'_>, v: &TheoremVerdict) -> PyResult<Py<PyDict>> {
    let d = PyDict::new(py);
    d.set_item("suite", v.suite.as_str())?;
    d.set_item("eps", v.eps)?;
    d.set_item("bm_upper", v.bm_upper)?;
    d.set_item("claimed", v.claimed)?;
    d.set_item("centre_distance", v.centre_distance)?;
    d.set_item("centre_claimed", v.centre_claimed)?;
    d.set_item("pass", v.pass)?;
    Ok(d.into())
}

/// A convex polygon, canonical (counterclockwise, deduplicated, starting at
/// the lexicographically smallest vertex).
#[pyclass(name = "Polygon")]
#[derive(Clone)]
struct PyPolygon {
    inner: ConvexPolygon,
}

#[pymethods]
impl PyPolygon {
    /// Build from a vertex list; the convex hull is taken.
    #[new]
    fn new(vertices: Vec<(f64, f64)>) -> PyResult<Self> {
        let pts: Vec<_> = vertices.iter().map(|&(x, y)| pt(x, y)).collect();
        Ok(PyPolygon {
            inner: make_polygon(&pts).map_err(err)?,
        })
    }

    /// Regular n-gon with the given circumradius and phase.
    #[staticmethod]
    #[pyo3(signature = (n, circumradius=1.0, phase=0.0))]
    fn regular(n: u32, circumradius: f64, phase: f64) -> PyResult<Self> {
        Ok(PyPolygon {
            inner: regular_ngon(n, circumradius, phase).map_err(err)?,
        })
    }

    /// The near-extremal 2n-gon: a regular n-gon with its side midpoints
    /// pushed out by the factor 1 + eps.
    #[staticmethod]
    fn bumped(n: u32, eps: f64) -> PyResult<Self> {
        Ok(PyPolygon {
            inner: bumped_ngon(n, eps).map_err(err)?,
        })
    }

    /// Seeded random body; symmetry is "none", "central", or an n-fold
    /// order given as an integer.
    #[staticmethod]
    #[pyo3(signature = (seed, n=8, symmetry="none"))]
    fn random(seed: u64, n: u32, symmetry: &str) -> PyResult<Self> {
        let sym = match symmetry {
            "none" => Symmetry::None,
            "central" => Symmetry::Central,
            other => match other.parse::<u32>() {
                Ok(k) if k >= 2 => Symmetry::NFold(k),
                _ => {
                    return Err(PyValueError::new_err(format!(
                        "symmetry must be 'none', 'central', or an integer order, got {other:?}"
                    )))
                }
            },
        };
        Ok(PyPolygon {
            inner: random_body(seed, n, sym),
        })
    }

    fn vertices(&self) -> Vec<(f64, f64)> {
        self.inner.vertices().iter().map(|v| (v.x, v.y)).collect()
    }

    fn area(&self) -> f64 {
        self.inner.area()
    }

    fn centroid(&self) -> (f64, f64) {
        let c = self.inner.centroid();
        (c.x, c.y)
    }

    fn diameter(&self) -> f64 {
        self.inner.diameter()
    }

    fn support(&self, ux: f64, uy: f64) -> f64 {
        self.inner.support(pt(ux, uy))
    }

    #[pyo3(signature = (x, y, slack=0.0))]
    fn contains(&self, x: f64, y: f64, slack: f64) -> bool {
        self.inner.contains(pt(x, y), slack)
    }

    /// Polar polygon about the given centre (default: the origin).
    #[pyo3(signature = (centre=None))]
    fn polar(&self, centre: Option<(f64, f64)>) -> PyResult<PyPolygon> {
        let c = centre.map(|(x, y)| pt(x, y)).unwrap_or_default();
        let body = CenteredBody::new(self.inner.clone(), c).map_err(err)?;
        Ok(PyPolygon {
            inner: polar(&body),
        })
    }

    /// `|K| * |(K - centre)^*|`.
    #[pyo3(signature = (centre=None))]
    fn volume_product(&self, centre: Option<(f64, f64)>) -> PyResult<f64> {
        let c = centre.map(|(x, y)| pt(x, y)).unwrap_or_default();
        let body = CenteredBody::new(self.inner.clone(), c).map_err(err)?;
        Ok(volume_product(&body).product)
    }

    /// Quadrature cross-check of the polar area.
    #[pyo3(signature = (centre=None, nodes=256))]
    fn polar_area_quadrature(&self, centre: Option<(f64, f64)>, nodes: usize) -> PyResult<f64> {
        let c = centre.map(|(x, y)| pt(x, y)).unwrap_or_default();
        let body = CenteredBody::new(self.inner.clone(), c).map_err(err)?;
        polar_area_quadrature(&body, nodes).map_err(err)
    }

    /// `|K| * |((K - K)/2)^*|`, minimised exactly by triangles at 6.
    fn eggleston_product(&self) -> f64 {
        eggleston_product(&self.inner)
    }

    /// The Santalo point and solve diagnostics.
    fn santalo(&self, py: Python<'_>) -> PyResult<Py<PyDict>> {
        let s = santalo_point(&self.inner, default_tolerance(&self.inner)).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("point", (s.point.x, s.point.y))?;
        d.set_item("polar_area", s.polar_area_at_min)?;
        d.set_item("gradient_norm", s.gradient_norm)?;
        d.set_item("iterations", s.iterations)?;
        Ok(d.into())
    }

    /// Parallelogram-stability verdict (o-symmetric bodies).
    fn verify_parallelogram(&self, py: Python<'_>) -> PyResult<Py<PyDict>> {
        verdict_dict(py, &verify_parallelogram_stability(&self.inner).map_err(err)?)
    }

    /// Triangle-stability verdict at the Santalo point.
    fn verify_triangle(&self, py: Python<'_>) -> PyResult<Py<PyDict>> {
        verdict_dict(py, &verify_triangle_stability(&self.inner).map_err(err)?)
    }

    /// n-fold similarity-stability verdict.
    fn verify_nfold(&self, py: Python<'_>, n: u32) -> PyResult<Py<PyDict>> {
        verdict_dict(py, &verify_nfold_stability(&self.inner, n).map_err(err)?)
    }

    /// Difference-body stability verdict.
    fn verify_difference(&self, py: Python<'_>) -> PyResult<Py<PyDict>> {
        verdict_dict(py, &verify_difference_stability(&self.inner).map_err(err)?)
    }

    /// Refined difference-body bound through the hexagon chain.
    fn refined_difference_bound(&self, py: Python<'_>) -> PyResult<Py<PyDict>> {
        let r = eggleston_refined_bound(&self.inner).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("alpha", r.alpha)?;
        d.set_item("bound", r.bound)?;
        d.set_item("product", r.product)?;
        d.set_item("pass", r.pass)?;
        Ok(d.into())
    }

    fn __repr__(&self) -> String {
        format!("Polygon({} vertices, area {:.6})", self.inner.len(), self.inner.area())
    }
}

/// Sector lower bound `f(lambda, mu)`.
#[pyfunction]
fn sector_f(lambda: f64, mu: f64) -> PyResult<f64> {
    f_bound(lambda, mu).map_err(err)
}

/// Sector refinement coefficient `g(lambda, mu)`.
#[pyfunction]
fn sector_g(lambda: f64, mu: f64) -> PyResult<f64> {
    g_bound(lambda, mu).map_err(err)
}

/// Dichotomy constant `gamma(lambda, mu)`.
#[pyfunction]
fn sector_gamma(lambda: f64, mu: f64) -> f64 {
    gamma_constant(lambda, mu)
}

/// Smallest centre offset with the given product excess for the regular
/// n-gon of diameter 1, with its sqrt(eps) floor.
#[pyfunction]
fn centre_offset(py: Python<'_>, n: u32, eps: f64) -> PyResult<Py<PyDict>> {
    let r = centre_offset_for_excess(n, eps).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("offset_needed", r.offset_needed)?;
    d.set_item("sqrt_eps_bound", r.sqrt_eps_bound)?;
    d.set_item("pass", r.pass)?;
    Ok(d.into())
}

#[pymodule]
fn volprod(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolygon>()?;
    m.add_function(wrap_pyfunction!(sector_f, m)?)?;
    m.add_function(wrap_pyfunction!(sector_g, m)?)?;
    m.add_function(wrap_pyfunction!(sector_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(centre_offset, m)?)?;
    Ok(())
}
