//! Canonical bodies, near-extremal families, inscribed models, sandwich
//! certificates, and seeded random polygon generation.

use crate::error::{Error, Result};
use crate::geometry::{make_polygon, pt, ConvexPolygon, LinearMap2, Point2};
use crate::rng::SplitMix64;
use std::f64::consts::PI;

/// Regular n-gon about the origin with vertices at `phase + 2*pi*k/n`.
pub fn regular_ngon(n: u32, circumradius: f64, phase: f64) -> Result<ConvexPolygon> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need n >= 3, got {n}")));
    }
    if !(circumradius.is_finite() && circumradius > 0.0) {
        return Err(Error::InvalidParameter("circumradius must be positive".into()));
    }
    let verts: Vec<Point2> = (0..n)
        .map(|k| {
            let a = phase + 2.0 * PI * k as f64 / n as f64;
            pt(circumradius * a.cos(), circumradius * a.sin())
        })
        .collect();
    make_polygon(&verts)
}

/// The 2n-gon with the vertices of the regular n-gon (circumradius 1,
/// vertex at angle 0) interleaved with `1 + eps` times its side midpoints.
/// Convex and inside the unit circle for `0 <= eps <= 1/cos(pi/n) - 1`;
/// at `eps = 0` the midpoints are collinear and the regular n-gon returns.
pub fn bumped_ngon(n: u32, eps: f64) -> Result<ConvexPolygon> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need n >= 3, got {n}")));
    }
    let max_eps = 1.0 / (PI / n as f64).cos() - 1.0;
    if !(0.0..=max_eps).contains(&eps) {
        return Err(Error::InvalidParameter(format!(
            "bump eps={eps} outside [0, sec(pi/{n}) - 1 = {max_eps:.6}]"
        )));
    }
    let m = (PI / n as f64).cos();
    let mut verts = Vec::with_capacity(2 * n as usize);
    for k in 0..n {
        let a = 2.0 * PI * k as f64 / n as f64;
        verts.push(pt(a.cos(), a.sin()));
        let b = a + PI / n as f64;
        verts.push(pt((1.0 + eps) * m * b.cos(), (1.0 + eps) * m * b.sin()));
    }
    make_polygon(&verts)
}

/// Volume product of `bumped_ngon(n, eps)` about the origin, in closed form.
pub fn bumped_ngon_product(n: u32, eps: f64) -> f64 {
    let s = (n as f64 * (PI / n as f64).sin()).powi(2);
    let cot = 1.0 / (PI / n as f64).tan();
    s + s * (eps - eps * eps * cot * cot) / (1.0 + eps)
}

/// Difference-body product of `bumped_ngon(3, eps)`, in closed form.
pub fn bumped_triangle_eggleston(eps: f64) -> f64 {
    6.0 * (9.0 + 15.0 * eps + 3.0 * eps * eps - 3.0 * eps.powi(3)) / (3.0 + eps).powi(2)
}

/// Maximal-area o-symmetric parallelogram inscribed in an o-symmetric `k`.
///
/// For a polygon the maximum of `2 |p1 x p2|` over boundary points is
/// attained at a vertex pair (the objective is linear in each argument), so
/// the vertex pairs are a complete candidate set.
pub fn max_area_inscribed_symmetric_parallelogram(k: &ConvexPolygon) -> Result<ConvexPolygon> {
    let tol = 1e-9 * k.diameter();
    if !k.is_origin_symmetric(tol) {
        return Err(Error::NotSymmetric(
            "inscribed-parallelogram model needs an o-symmetric body".into(),
        ));
    }
    let vs = k.vertices();
    let mut best = (0usize, 0usize, -1.0f64);
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let area = 2.0 * vs[i].cross(vs[j]).abs();
            if area > best.2 + tol {
                best = (i, j, area);
            }
        }
    }
    let (i, j, _) = best;
    make_polygon(&[vs[i], vs[j], -vs[i], -vs[j]])
}

/// Maximal-area triangle inscribed in `k`, with vertices at polygon
/// vertices (complete for polygon inputs); ties within `1e-9 * diam^2`
/// resolve to the lexicographically smallest index triple. The flag reports
/// whether such a tie occurred.
pub fn max_area_inscribed_triangle_with_ties(k: &ConvexPolygon) -> (ConvexPolygon, bool) {
    let vs = k.vertices();
    let n = vs.len();
    let tie_tol = 1e-9 * k.diameter() * k.diameter();
    let mut best = (0usize, 1usize, 2usize);
    let mut best_area = -1.0f64;
    let mut tie = false;
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                let area = 0.5 * (vs[j] - vs[i]).cross(vs[l] - vs[i]).abs();
                if area > best_area + tie_tol {
                    best = (i, j, l);
                    best_area = area;
                    tie = false;
                } else if (area - best_area).abs() <= tie_tol {
                    tie = true;
                }
            }
        }
    }
    let t = make_polygon(&[vs[best.0], vs[best.1], vs[best.2]])
        .expect("maximal inscribed triangle of a valid polygon is non-degenerate");
    (t, tie)
}

pub fn max_area_inscribed_triangle(k: &ConvexPolygon) -> ConvexPolygon {
    max_area_inscribed_triangle_with_ties(k).0
}

/// The canonical model a sandwich certificate is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Parallelogram,
    Triangle,
    RegularNGon(u32),
}

/// A homothetic pair `lambda1 M + x  ⊆  K  ⊆  lambda2 M + x` around a
/// canonical model `M`; the ratio `lambda2 / lambda1` upper-bounds the
/// Banach–Mazur distance of `K` from the model class (the similarity
/// variant for `RegularNGon`).
#[derive(Debug, Clone)]
pub struct SandwichCertificate {
    pub inner: ConvexPolygon,
    pub outer: ConvexPolygon,
    pub model: Model,
    pub lambda1: f64,
    pub lambda2: f64,
    pub x: Point2,
    /// Linear part carrying the canonical model to the placed model `M`;
    /// the placement is `map(.) + x`.
    pub map: LinearMap2,
    /// True when the inscribed-model search had area ties within tolerance
    /// (the translation witness `x` is then not unique).
    pub model_ties: bool,
}

impl SandwichCertificate {
    pub fn ratio(&self) -> f64 {
        self.lambda2 / self.lambda1
    }

    /// The placed model `lambda * M + x`.
    pub fn placed(&self, lambda: f64) -> ConvexPolygon {
        let m = LinearMap2 {
            a11: self.map.a11 * lambda,
            a12: self.map.a12 * lambda,
            a21: self.map.a21 * lambda,
            a22: self.map.a22 * lambda,
            tx: self.x.x,
            ty: self.x.y,
        };
        canonical_model(self.model)
            .apply_map(&m)
            .expect("certificate map is invertible")
    }
}

/// Canonical placements: cross-polytope square, regular triangle with a
/// vertex pointing up, regular n-gon with a vertex at angle 0. All centred.
pub fn canonical_model(model: Model) -> ConvexPolygon {
    match model {
        Model::Parallelogram => {
            make_polygon(&[pt(1.0, 0.0), pt(0.0, 1.0), pt(-1.0, 0.0), pt(0.0, -1.0)]).unwrap()
        }
        Model::Triangle => regular_ngon(3, 1.0, PI / 2.0).unwrap(),
        Model::RegularNGon(n) => regular_ngon(n, 1.0, 0.0).unwrap(),
    }
}

fn tightest_pair(
    k: &ConvexPolygon,
    placed_model: &ConvexPolygon,
    x: Point2,
) -> (f64, f64) {
    // lambda1 = max { l : l M + x ⊆ K }  = 1 / max_w gauge_{K - x}(w),
    // lambda2 = min { l : K ⊆ l M + x }  = max_v gauge_M(v - x).
    let shifted = k.translate(-x);
    let lambda1 = 1.0
        / placed_model
            .vertices()
            .iter()
            .map(|&w| shifted.gauge(w))
            .fold(f64::NEG_INFINITY, f64::max);
    let lambda2 = k
        .vertices()
        .iter()
        .map(|&v| placed_model.gauge(v - x))
        .fold(f64::NEG_INFINITY, f64::max);
    (lambda1, lambda2)
}

/// Builds the sandwich certificate of `k` for the given model:
/// the maximal inscribed model fixes the placement, the circumscribed copy
/// whose side midpoints are the inscribed model's vertices bounds the
/// outer ratio (2 for parallelograms, 4 for triangles, `sec^2(pi/n)` for
/// regular n-gons), and the homothety pair is then tightened against `k`.
pub fn sandwich(k: &ConvexPolygon, model: Model) -> Result<SandwichCertificate> {
    let tol = 1e-9 * k.diameter();
    match model {
        Model::Parallelogram => {
            let inner_model = max_area_inscribed_symmetric_parallelogram(k)?;
            let vs = inner_model.vertices();
            // vs = [w1, w2, -w1, -w2] in counterclockwise order.
            let (w1, w2) = (vs[0], vs[1]);
            let map = LinearMap2::from_columns(w1, w2);
            let x = Point2::ORIGIN;
            let (lambda1, lambda2) = tightest_pair(k, &inner_model, x);
            finish(k, model, inner_model, map, x, lambda1, lambda2, false, tol)
        }
        Model::Triangle => {
            let (tri, ties) = max_area_inscribed_triangle_with_ties(k);
            let g = tri.centroid();
            let placed = tri.translate(-g);
            let canon = canonical_model(Model::Triangle);
            // Linear map sending the canonical triangle to `placed`
            // (both centred, so two vertex pairs determine it).
            let cv = canon.vertices();
            let pv = placed.vertices();
            let basis = LinearMap2::from_columns(cv[0], cv[1]).inverse()?;
            let map = LinearMap2::from_columns(pv[0], pv[1]).compose(&basis);
            let (lambda1, lambda2) = tightest_pair(k, &placed, g);
            finish(k, model, placed, map, g, lambda1, lambda2, ties, tol)
        }
        Model::RegularNGon(n) => {
            if !k.is_nfold_symmetric(n, tol) {
                return Err(Error::NotSymmetric(format!(
                    "regular-{n}-gon model needs {n}-fold symmetry about the origin"
                )));
            }
            // Farthest vertex from the origin becomes a vertex of the
            // inscribed regular n-gon; ties resolve lexicographically.
            let far = k
                .vertices()
                .iter()
                .copied()
                .max_by(|a, b| {
                    (a.norm_sq(), a.x, a.y)
                        .partial_cmp(&(b.norm_sq(), b.x, b.y))
                        .unwrap()
                })
                .unwrap();
            let inner_model = regular_ngon(n, far.norm(), far.angle())?;
            let map = LinearMap2::rotation(far.angle()).compose(&LinearMap2::scaling(far.norm()));
            let x = Point2::ORIGIN;
            let (lambda1, lambda2) = tightest_pair(k, &inner_model, x);
            finish(k, model, inner_model, map, x, lambda1, lambda2, false, tol)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn finish(
    k: &ConvexPolygon,
    model: Model,
    placed: ConvexPolygon,
    map: LinearMap2,
    x: Point2,
    lambda1: f64,
    lambda2: f64,
    model_ties: bool,
    tol: f64,
) -> Result<SandwichCertificate> {
    if !(lambda1.is_finite() && lambda2.is_finite() && lambda1 > 0.0 && lambda2 >= lambda1 - 1e-12)
    {
        return Err(Error::DegenerateInput(format!(
            "sandwich collapsed: lambda1={lambda1}, lambda2={lambda2}"
        )));
    }
    let scale = |l: f64| -> ConvexPolygon {
        let verts: Vec<Point2> = placed.vertices().iter().map(|&w| w * l + x).collect();
        make_polygon(&verts).expect("scaled model stays a polygon")
    };
    let cert = SandwichCertificate {
        inner: scale(lambda1),
        outer: scale(lambda2),
        model,
        lambda1,
        lambda2,
        x,
        map,
        model_ties,
    };
    // Certified inclusions.
    for v in cert.inner.vertices() {
        if !k.contains(*v, tol) {
            return Err(Error::DegenerateInput(
                "inner model escapes the body".into(),
            ));
        }
    }
    for v in k.vertices() {
        if !cert.outer.contains(*v, tol) {
            return Err(Error::DegenerateInput(
                "body escapes the outer model".into(),
            ));
        }
    }
    Ok(cert)
}

/// Symmetrisation applied by the random generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    None,
    Central,
    NFold(u32),
}

/// Deterministic seeded random convex polygon: `n` radial samples with radii
/// in `[1/2, 1]`, convex hull, then the requested symmetrisation. The same
/// seed always yields the same polygon.
pub fn random_body(seed: u64, n: u32, symmetry: Symmetry) -> ConvexPolygon {
    let n = n.max(3);
    let mut rng = SplitMix64::new(seed);
    loop {
        let mut pts_raw = Vec::with_capacity(n as usize);
        for _ in 0..n {
            let angle = rng.uniform(0.0, 2.0 * PI);
            let radius = rng.uniform(0.5, 1.0);
            pts_raw.push(pt(radius * angle.cos(), radius * angle.sin()));
        }
        let expanded: Vec<Point2> = match symmetry {
            Symmetry::None => pts_raw,
            Symmetry::Central => pts_raw.iter().flat_map(|&p| [p, -p]).collect(),
            Symmetry::NFold(k) => {
                let k = k.max(1);
                let mut all = Vec::with_capacity(pts_raw.len() * k as usize);
                for j in 0..k {
                    let rot = LinearMap2::rotation(2.0 * PI * j as f64 / k as f64);
                    all.extend(pts_raw.iter().map(|&p| rot.apply(p)));
                }
                all
            }
        };
        match make_polygon(&expanded) {
            Ok(poly) => return poly,
            // Nearly collinear draw: continue the stream deterministically.
            Err(_) => continue,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarity::{eggleston_product, volume_product, CenteredBody};

    #[test]
    fn regular_ngon_examples() {
        let d = regular_ngon(4, 1.0, 0.0).unwrap();
        let expected =
            make_polygon(&[pt(1.0, 0.0), pt(0.0, 1.0), pt(-1.0, 0.0), pt(0.0, -1.0)]).unwrap();
        assert_eq!(d.len(), 4);
        for (a, b) in d.vertices().iter().zip(expected.vertices()) {
            assert!((*a - *b).norm() < 1e-15);
        }
        let t = regular_ngon(3, 1.0, 0.0).unwrap();
        assert!((t.area() - 3.0 * 3f64.sqrt() / 4.0).abs() < 1e-14);
        assert!(t.is_nfold_symmetric(3, 1e-12));
        assert!(regular_ngon(2, 1.0, 0.0).is_err());
        assert!(regular_ngon(5, 0.0, 0.0).is_err());
    }

    #[test]
    fn bumped_ngon_examples() {
        // eps = 0 reproduces the regular n-gon exactly (midpoints merge).
        let k = bumped_ngon(5, 0.0).unwrap();
        let r5 = regular_ngon(5, 1.0, 0.0).unwrap();
        assert_eq!(k.len(), 5);
        for (a, b) in k.vertices().iter().zip(r5.vertices()) {
            assert!((*a - *b).norm() < 1e-12);
        }
        // Valid bump gives a 2n-gon inside the unit circle.
        let k = bumped_ngon(4, 0.05).unwrap();
        assert_eq!(k.len(), 8);
        assert!(k.vertices().iter().all(|v| v.norm() <= 1.0 + 1e-12));
        assert!(k.is_nfold_symmetric(4, 1e-12));
        // Out-of-domain bumps are rejected.
        assert!(bumped_ngon(12, 0.1).is_err());
        assert!(bumped_ngon(4, -0.01).is_err());
    }

    #[test]
    fn bumped_ngon_product_closed_form() {
        // n = 4, eps = 0.01: 8 + 8 (0.01 - 0.0001) / 1.01.
        let expected = 8.0 + 8.0 * (0.01 - 0.0001) / 1.01;
        assert!((bumped_ngon_product(4, 0.01) - expected).abs() < 1e-12);
        assert!((expected - 8.078_415_841_584_159).abs() < 1e-12);
        let k = bumped_ngon(4, 0.01).unwrap();
        let prod = volume_product(&CenteredBody::about_origin(k).unwrap()).product;
        assert!((prod - expected).abs() < 1e-9 * expected);
    }

    #[test]
    fn bumped_triangle_eggleston_closed_form() {
        for &eps in &[1e-4, 1e-2, 0.3] {
            let k = bumped_ngon(3, eps).unwrap();
            let lhs = eggleston_product(&k);
            let rhs = bumped_triangle_eggleston(eps);
            assert!((lhs - rhs).abs() < 1e-9 * rhs, "eps={eps}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn parallelogram_of_square_is_itself() {
        let sq =
            make_polygon(&[pt(-1.0, -1.0), pt(1.0, -1.0), pt(1.0, 1.0), pt(-1.0, 1.0)]).unwrap();
        let p = max_area_inscribed_symmetric_parallelogram(&sq).unwrap();
        assert!((p.area() - 4.0).abs() < 1e-12);
        let t = make_polygon(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)]).unwrap();
        assert!(max_area_inscribed_symmetric_parallelogram(&t).is_err());
    }

    #[test]
    fn parallelogram_of_hexagon_beats_grid_search() {
        let hexa = regular_ngon(6, 1.0, 0.0).unwrap();
        let p = max_area_inscribed_symmetric_parallelogram(&hexa).unwrap();
        // Direction-pair grid oracle at 1e-3 radians.
        let radius = |theta: f64| -> f64 {
            let u = pt(theta.cos(), theta.sin());
            1.0 / hexa.gauge(u)
        };
        let mut oracle: f64 = 0.0;
        let steps = (std::f64::consts::PI / 1e-3) as usize;
        for i in 0..steps {
            let t1 = i as f64 * 1e-3;
            let r1 = radius(t1);
            // The second direction only needs a coarse scan refined once.
            for j in 1..180 {
                let t2 = t1 + j as f64 * (PI / 180.0);
                let r2 = radius(t2);
                oracle = oracle.max(2.0 * r1 * r2 * (t2 - t1).sin().abs());
            }
        }
        assert!(p.area() >= oracle - 1e-3);
        assert!((p.area() - 3f64.sqrt()).abs() < 1e-12);
        // All four vertices on the boundary.
        for v in p.vertices() {
            assert!(hexa.clearance(*v).abs() < 1e-9);
        }
    }

    #[test]
    fn parallelogram_area_ratio_affine_invariant() {
        let k = random_body(11, 12, Symmetry::Central);
        let p = max_area_inscribed_symmetric_parallelogram(&k).unwrap();
        let ratio = p.area() / k.area();
        let map = LinearMap2 {
            a11: 0.7,
            a12: 1.1,
            a21: -0.3,
            a22: 1.4,
            tx: 0.0,
            ty: 0.0,
        };
        let km = k.apply_map(&map).unwrap();
        let pm = max_area_inscribed_symmetric_parallelogram(&km).unwrap();
        assert!((pm.area() / km.area() - ratio).abs() < 1e-6);
    }

    #[test]
    fn triangle_of_triangle_is_itself() {
        let t = make_polygon(&[pt(0.0, 0.0), pt(3.0, 0.2), pt(1.0, 2.0)]).unwrap();
        let m = max_area_inscribed_triangle(&t);
        assert_eq!(m, t);
    }

    #[test]
    fn triangle_of_square_has_half_area() {
        let sq =
            make_polygon(&[pt(-1.0, -1.0), pt(1.0, -1.0), pt(1.0, 1.0), pt(-1.0, 1.0)]).unwrap();
        let (m, tie) = max_area_inscribed_triangle_with_ties(&sq);
        assert!((m.area() - 2.0).abs() < 1e-12);
        assert!(tie, "the square has four tying maximal triangles");
    }

    #[test]
    fn triangle_of_hexagon_alternates_vertices() {
        let hexa = regular_ngon(6, 1.0, 0.0).unwrap();
        let m = max_area_inscribed_triangle(&hexa);
        assert!((m.area() - 3.0 * 3f64.sqrt() / 4.0).abs() < 1e-12);
        for v in m.vertices() {
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn triangle_beats_boundary_grid() {
        let k = random_body(5, 9, Symmetry::None);
        let best = max_area_inscribed_triangle(&k).area();
        // Coarse boundary grid oracle.
        let m = 60usize;
        let boundary: Vec<Point2> = (0..m)
            .map(|i| {
                let theta = 2.0 * PI * i as f64 / m as f64;
                let u = pt(theta.cos(), theta.sin());
                u * (1.0 / k.gauge(u))
            })
            .collect();
        let mut oracle: f64 = 0.0;
        for i in 0..m {
            for j in i + 1..m {
                for l in j + 1..m {
                    oracle = oracle.max(
                        0.5 * (boundary[j] - boundary[i])
                            .cross(boundary[l] - boundary[i])
                            .abs(),
                    );
                }
            }
        }
        assert!(best >= oracle - 1e-9);
    }

    #[test]
    fn sandwich_square_is_tight() {
        let sq =
            make_polygon(&[pt(-1.0, -1.0), pt(1.0, -1.0), pt(1.0, 1.0), pt(-1.0, 1.0)]).unwrap();
        let cert = sandwich(&sq, Model::Parallelogram).unwrap();
        assert!((cert.ratio() - 1.0).abs() < 1e-12);
        assert!(cert.x.norm() < 1e-12);
    }

    #[test]
    fn sandwich_regular_ngon_is_tight() {
        for n in [3u32, 5, 8] {
            let k = regular_ngon(n, 1.3, 0.7).unwrap();
            let cert = sandwich(&k, Model::RegularNGon(n)).unwrap();
            assert!((cert.ratio() - 1.0).abs() < 1e-9, "n={n}");
        }
    }

    #[test]
    fn sandwich_respects_model_ratio_caps() {
        for seed in 0..40u64 {
            let k = random_body(seed, 10, Symmetry::Central);
            let cert = sandwich(&k, Model::Parallelogram).unwrap();
            assert!(cert.ratio() <= 2.0 + 1e-9, "seed={seed}: {}", cert.ratio());
            for v in cert.inner.vertices() {
                assert!(k.contains(*v, 1e-9));
            }
            for v in k.vertices() {
                assert!(cert.outer.contains(*v, 1e-9));
            }
        }
        for seed in 0..40u64 {
            let k = random_body(seed, 9, Symmetry::None);
            let cert = sandwich(&k, Model::Triangle).unwrap();
            assert!(cert.ratio() <= 4.0 + 1e-9, "seed={seed}: {}", cert.ratio());
        }
        for seed in 0..20u64 {
            let k = random_body(seed, 6, Symmetry::NFold(5));
            let cert = sandwich(&k, Model::RegularNGon(5)).unwrap();
            let cap = 1.0 / (PI / 5.0).cos().powi(2);
            assert!(cert.ratio() <= cap + 1e-9, "seed={seed}: {}", cert.ratio());
        }
    }

    #[test]
    fn sandwich_certificate_reconstructs_from_map() {
        let k = random_body(3, 8, Symmetry::None);
        let cert = sandwich(&k, Model::Triangle).unwrap();
        let inner = cert.placed(cert.lambda1);
        assert_eq!(inner.len(), cert.inner.len());
        for (a, b) in inner.vertices().iter().zip(cert.inner.vertices()) {
            assert!((*a - *b).norm() < 1e-9);
        }
    }

    #[test]
    fn bumped_sandwich_ratio_tracks_bump() {
        for &eps in &[0.01, 0.05, 0.2] {
            let k = bumped_ngon(4, eps).unwrap();
            let cert = sandwich(&k, Model::Parallelogram).unwrap();
            // Support-function oracle: max_u h_K(u) / h_M(u) over a grid.
            let mut oracle: f64 = 0.0;
            for i in 0..720 {
                let theta = 2.0 * PI * i as f64 / 720.0;
                let u = pt(theta.cos(), theta.sin());
                oracle = oracle.max(k.support(u) / cert.inner.support(u));
            }
            assert!(cert.ratio() <= oracle * (1.0 + 1e-9) + 1e-12);
            assert!((cert.ratio() - (1.0 + eps)).abs() < 1e-9, "eps={eps}");
        }
    }

    #[test]
    fn random_body_determinism_and_symmetry() {
        let a = random_body(42, 10, Symmetry::None);
        let b = random_body(42, 10, Symmetry::None);
        assert_eq!(a, b);
        let c = random_body(43, 10, Symmetry::None);
        assert_ne!(a, c);
        let sym = random_body(7, 8, Symmetry::Central);
        assert!(sym.is_origin_symmetric(1e-9));
        let six = random_body(9, 5, Symmetry::NFold(6));
        assert!(six.is_nfold_symmetric(6, 1e-9));
    }
}
