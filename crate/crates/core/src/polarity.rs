//! Polar polygons and volume products.
//!
//! The polar of an n-gon with the origin strictly inside is again an n-gon:
//! the k-th edge line `{ q : <n_k, q> = d_k }` dualises to the vertex
//! `n_k / d_k`. Polars are computed exactly that way; the quadrature of the
//! support-function integral `(1/2) ∮ h(u)^{-2} du` is kept as an
//! independent cross-check.

use crate::error::{Error, Result};
use crate::geometry::{make_polygon, pt, ConvexPolygon, Point2};
use crate::quad::{integrate_panel, panel_rule};

/// Minimum clearance of the centre to every edge line, relative to the
/// diameter; nearer centres dualise to huge vertices and are rejected.
pub const CENTRE_CLEARANCE_REL: f64 = 1e-10;

/// A convex polygon together with a designated polarity centre strictly
/// inside it.
#[derive(Debug, Clone, PartialEq)]
pub struct CenteredBody {
    polygon: ConvexPolygon,
    centre: Point2,
}

impl CenteredBody {
    pub fn new(polygon: ConvexPolygon, centre: Point2) -> Result<CenteredBody> {
        let min_clear = CENTRE_CLEARANCE_REL * polygon.diameter();
        for i in 0..polygon.len() {
            let clearance = -polygon.edge_halfplane(i).excess(centre);
            if clearance <= min_clear {
                return Err(Error::CentreNotInterior { edge: i, clearance });
            }
        }
        Ok(CenteredBody { polygon, centre })
    }

    /// Centre at the origin; the usual frame for o-symmetric bodies.
    pub fn about_origin(polygon: ConvexPolygon) -> Result<CenteredBody> {
        CenteredBody::new(polygon, Point2::ORIGIN)
    }

    pub fn about_centroid(polygon: ConvexPolygon) -> CenteredBody {
        let centre = polygon.centroid();
        CenteredBody::new(polygon, centre).expect("centroid is strictly interior")
    }

    pub fn polygon(&self) -> &ConvexPolygon {
        &self.polygon
    }

    pub fn centre(&self) -> Point2 {
        self.centre
    }

    /// The body translated so its centre sits at the origin.
    pub fn centred_polygon(&self) -> ConvexPolygon {
        self.polygon.translate(-self.centre)
    }
}

/// Exact polar polygon of `body` about its centre, returned about the origin.
pub fn polar(body: &CenteredBody) -> ConvexPolygon {
    let shifted = body.centred_polygon();
    let duals: Vec<Point2> = (0..shifted.len())
        .map(|i| {
            let h = shifted.edge_halfplane(i);
            // offset > 0 is guaranteed by the interior-centre invariant.
            h.normal * (1.0 / h.offset)
        })
        .collect();
    make_polygon(&duals).expect("polar of a valid centred polygon is a polygon")
}

/// Sorted support-function breakpoints: the edge-normal angles of `k`.
fn edge_normal_angles(k: &ConvexPolygon) -> Vec<f64> {
    let mut angles: Vec<f64> = (0..k.len())
        .map(|i| {
            let n = k.edge_halfplane(i).normal;
            n.angle()
        })
        .collect();
    angles.sort_by(|a, b| a.total_cmp(b));
    angles
}

/// Polar area by composite Gauss–Legendre quadrature of
/// `(1/2) ∮ h_{K-c}(u)^{-2} du`, with panels aligned to the edge-normal
/// breakpoints so the integrand is analytic on every panel. `nodes` is the
/// minimum total node budget (at least 16).
pub fn polar_area_quadrature(body: &CenteredBody, nodes: usize) -> Result<f64> {
    if nodes < 16 {
        return Err(Error::InvalidParameter(format!(
            "need at least 16 quadrature nodes, got {nodes}"
        )));
    }
    let shifted = body.centred_polygon();
    let angles = edge_normal_angles(&shifted);
    let rule = panel_rule();
    let panels = angles.len();
    let per_panel = nodes.div_ceil(16 * panels).max(1);
    let mut total = 0.0;
    for i in 0..panels {
        let a = angles[i];
        let mut b = angles[(i + 1) % panels];
        if b <= a {
            b += 2.0 * std::f64::consts::PI;
        }
        // Wide arcs get extra subpanels beyond the budget share: the
        // integrand grows like sec^2 toward the arc ends, and capping the
        // subpanel width keeps the rule in its spectral regime.
        let splits = per_panel.max(((b - a) / 0.35).ceil() as usize).max(1);
        for s in 0..splits {
            let lo = a + (b - a) * s as f64 / splits as f64;
            let hi = a + (b - a) * (s + 1) as f64 / splits as f64;
            total += integrate_panel(rule, lo, hi, |theta| {
                let u = pt(theta.cos(), theta.sin());
                let h = shifted.support(u);
                0.5 / (h * h)
            });
        }
    }
    Ok(total)
}

/// Volume product `|K| * |(K - c)^*|` with its factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeProductReport {
    pub body_area: f64,
    pub polar_area: f64,
    pub product: f64,
    pub centre: Point2,
}

pub fn volume_product(body: &CenteredBody) -> VolumeProductReport {
    let body_area = body.polygon().area();
    let polar_area = polar(body).area();
    VolumeProductReport {
        body_area,
        polar_area,
        product: body_area * polar_area,
        centre: body.centre(),
    }
}

/// The difference-body product `|K| * |((K - K)/2)^*|`; translation and
/// linear invariant, minimised exactly by triangles at the value 6.
pub fn eggleston_product(k: &ConvexPolygon) -> f64 {
    let sym = k.central_symmetral();
    let body = CenteredBody::about_origin(sym).expect("difference body contains the origin");
    k.area() * polar(&body).area()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::regular_ngon;
    use crate::geometry::LinearMap2;

    fn square2() -> ConvexPolygon {
        make_polygon(&[pt(-1.0, -1.0), pt(1.0, -1.0), pt(1.0, 1.0), pt(-1.0, 1.0)]).unwrap()
    }

    fn poly_close(a: &ConvexPolygon, b: &ConvexPolygon, tol: f64) -> bool {
        a.len() == b.len()
            && a.vertices()
                .iter()
                .zip(b.vertices())
                .all(|(p, q)| (*p - *q).norm() <= tol)
    }

    #[test]
    fn centre_must_be_interior() {
        let sq = square2();
        assert!(CenteredBody::new(sq.clone(), pt(0.2, -0.3)).is_ok());
        let err = CenteredBody::new(sq.clone(), pt(1.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::CentreNotInterior { .. }));
        assert!(CenteredBody::new(sq, pt(3.0, 0.0)).is_err());
    }

    #[test]
    fn polar_of_square_is_diamond() {
        let body = CenteredBody::about_origin(square2()).unwrap();
        let p = polar(&body);
        let diamond =
            make_polygon(&[pt(1.0, 0.0), pt(0.0, 1.0), pt(-1.0, 0.0), pt(0.0, -1.0)]).unwrap();
        assert!(poly_close(&p, &diamond, 1e-14));
    }

    #[test]
    fn polar_of_regular_triangle() {
        // Circumradius 1 about the centroid dualises to circumradius 2,
        // rotated by pi/3.
        let t = regular_ngon(3, 1.0, 0.0).unwrap();
        let body = CenteredBody::about_origin(t).unwrap();
        let p = polar(&body);
        let expected = regular_ngon(3, 2.0, std::f64::consts::PI / 3.0).unwrap();
        assert!(poly_close(&p, &expected, 1e-12));
    }

    #[test]
    fn double_polar_returns_translated_body() {
        let k = make_polygon(&[
            pt(1.5, 0.2),
            pt(0.4, 1.3),
            pt(-0.9, 0.8),
            pt(-1.1, -0.5),
            pt(0.3, -1.2),
        ])
        .unwrap();
        let centre = pt(0.1, -0.2);
        let body = CenteredBody::new(k.clone(), centre).unwrap();
        let once = polar(&body);
        let twice = polar(&CenteredBody::about_origin(once).unwrap());
        let expected = k.translate(-centre);
        assert!(poly_close(&twice, &expected, 1e-9));
    }

    #[test]
    fn quadrature_matches_exact_polar() {
        let body = CenteredBody::about_origin(square2()).unwrap();
        let q = polar_area_quadrature(&body, 256).unwrap();
        assert!((q - 2.0).abs() < 1e-8, "got {q}");

        let hexa = regular_ngon(6, 1.0, 0.0).unwrap();
        let body = CenteredBody::about_origin(hexa).unwrap();
        let q = polar_area_quadrature(&body, 96).unwrap();
        let exact = polar(&body).area();
        assert!((exact - 2.0 * 3f64.sqrt()).abs() < 1e-12);
        assert!((q - exact).abs() < 1e-8 * exact);

        assert!(polar_area_quadrature(&body, 8).is_err());
    }

    #[test]
    fn volume_product_equality_cases() {
        let body = CenteredBody::about_origin(square2()).unwrap();
        let rep = volume_product(&body);
        assert!((rep.product - 8.0).abs() < 1e-12);
        assert!((rep.body_area * rep.polar_area - rep.product).abs() <= 1e-12 * rep.product);

        let t = regular_ngon(3, 1.0, 0.0).unwrap();
        let rep = volume_product(&CenteredBody::about_origin(t).unwrap());
        assert!((rep.product - 27.0 / 4.0).abs() < 1e-12);

        for n in 3..=12u32 {
            let k = regular_ngon(n, 1.0, 0.4).unwrap();
            let rep = volume_product(&CenteredBody::about_origin(k).unwrap());
            let expected = (n as f64 * (std::f64::consts::PI / n as f64).sin()).powi(2);
            assert!(
                (rep.product - expected).abs() < 1e-12 * expected,
                "n={n}: {} vs {expected}",
                rep.product
            );
        }
    }

    #[test]
    fn volume_product_linear_invariance() {
        let k = make_polygon(&[
            pt(1.5, 0.2),
            pt(0.4, 1.3),
            pt(-0.9, 0.8),
            pt(-1.1, -0.5),
            pt(0.3, -1.2),
        ])
        .unwrap();
        let centre = pt(0.15, 0.1);
        let base = volume_product(&CenteredBody::new(k.clone(), centre).unwrap()).product;
        let map = LinearMap2 {
            a11: 1.3,
            a12: -0.4,
            a21: 0.2,
            a22: 0.9,
            tx: 0.0,
            ty: 0.0,
        };
        let kk = k.apply_map(&map).unwrap();
        let moved = volume_product(&CenteredBody::new(kk, map.apply(centre)).unwrap()).product;
        assert!((moved - base).abs() < 1e-9 * base);
    }

    #[test]
    fn polar_reverses_inclusion_and_scales() {
        let inner = regular_ngon(5, 0.8, 0.3).unwrap();
        let outer = regular_ngon(7, 1.1, 0.0).unwrap();
        let pi = polar(&CenteredBody::about_origin(inner.clone()).unwrap());
        let po = polar(&CenteredBody::about_origin(outer).unwrap());
        // inner subset outer, so polar(outer) subset polar(inner).
        for v in po.vertices() {
            assert!(pi.contains(*v, 1e-9));
        }
        // polar(lambda K) = (1/lambda) polar(K).
        let scaled = inner.apply_map(&crate::geometry::LinearMap2::scaling(2.0)).unwrap();
        let ps = polar(&CenteredBody::about_origin(scaled).unwrap());
        let expected = pi.apply_map(&crate::geometry::LinearMap2::scaling(0.5)).unwrap();
        assert!(poly_close(&ps, &expected, 1e-12));
    }

    #[test]
    fn eggleston_examples() {
        let t = make_polygon(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)]).unwrap();
        assert!((eggleston_product(&t) - 6.0).abs() < 1e-9);
        // Any triangle, any placement.
        let t2 = make_polygon(&[pt(2.0, 1.0), pt(5.0, 2.0), pt(3.0, 4.5)]).unwrap();
        assert!((eggleston_product(&t2) - 6.0).abs() < 1e-9);
        // Symmetric body reduces to the plain volume product.
        assert!((eggleston_product(&square2()) - 8.0).abs() < 1e-12);
        // Translation invariance.
        let k = make_polygon(&[pt(0.0, 0.0), pt(2.0, 0.3), pt(1.5, 1.8), pt(0.2, 1.1)]).unwrap();
        let a = eggleston_product(&k);
        let b = eggleston_product(&k.translate(pt(-4.0, 7.0)));
        assert!((a - b).abs() < 1e-9 * a);
    }
}
