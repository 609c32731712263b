//! Planar convex-polygon primitives.
//!
//! Everything operates on `f64` with tolerances scaled by the operand
//! magnitudes: predicates use a relative cross-product tolerance of `1e-12`
//! and construction merges collinear triples whose triangle area falls below
//! `1e-12 * diameter^2`. Polygons are canonical after construction —
//! counterclockwise, strictly convex, starting at the lexicographically
//! smallest vertex — so equality is a plain vertexwise comparison.

use crate::error::{Error, Result};
use std::ops::{Add, Mul, Neg, Sub};

/// Relative tolerance for collinearity / degeneracy decisions.
pub const REL_TOL: f64 = 1e-12;

/// A point (or vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

/// Shorthand constructor.
pub fn pt(x: f64, y: f64) -> Point2 {
    Point2 { x, y }
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product `self × other`.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    /// Counterclockwise rotation by 90 degrees.
    pub fn perp(self) -> Point2 {
        pt(-self.y, self.x)
    }

    pub fn normalized(self) -> Point2 {
        let n = self.norm();
        pt(self.x / n, self.y / n)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        pt(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        pt(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        pt(-self.x, -self.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        pt(self.x * s, self.y * s)
    }
}

/// Closed half-plane `{ q : <normal, q> <= offset }` with a unit normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    pub normal: Point2,
    pub offset: f64,
}

impl HalfPlane {
    /// Builds the half-plane, normalising `normal`.
    pub fn new(normal: Point2, offset: f64) -> Result<HalfPlane> {
        let n = normal.norm();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::InvalidParameter("half-plane normal is zero".into()));
        }
        Ok(HalfPlane {
            normal: normal * (1.0 / n),
            offset: offset / n,
        })
    }

    /// Half-plane whose boundary passes through `a` and `b`, keeping the
    /// left side of `a -> b` (the interior side for counterclockwise edges).
    pub fn left_of(a: Point2, b: Point2) -> Result<HalfPlane> {
        let outward = -(b - a).perp();
        HalfPlane::new(outward, outward.dot(a))
    }

    /// Signed distance of `q` beyond the boundary (positive means outside).
    pub fn excess(&self, q: Point2) -> f64 {
        self.normal.dot(q) - self.offset
    }
}

/// An affine map `q -> L q + t` with linear part `L = [[a11, a12], [a21, a22]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearMap2 {
    pub a11: f64,
    pub a12: f64,
    pub a21: f64,
    pub a22: f64,
    pub tx: f64,
    pub ty: f64,
}

impl LinearMap2 {
    pub const IDENTITY: LinearMap2 = LinearMap2 {
        a11: 1.0,
        a12: 0.0,
        a21: 0.0,
        a22: 1.0,
        tx: 0.0,
        ty: 0.0,
    };

    /// Linear map sending `e1 -> c1`, `e2 -> c2` (columns), no translation.
    pub fn from_columns(c1: Point2, c2: Point2) -> LinearMap2 {
        LinearMap2 {
            a11: c1.x,
            a12: c2.x,
            a21: c1.y,
            a22: c2.y,
            tx: 0.0,
            ty: 0.0,
        }
    }

    pub fn translation(t: Point2) -> LinearMap2 {
        LinearMap2 {
            tx: t.x,
            ty: t.y,
            ..LinearMap2::IDENTITY
        }
    }

    pub fn scaling(s: f64) -> LinearMap2 {
        LinearMap2 {
            a11: s,
            a22: s,
            ..LinearMap2::IDENTITY
        }
    }

    pub fn rotation(angle: f64) -> LinearMap2 {
        let (s, c) = angle.sin_cos();
        LinearMap2 {
            a11: c,
            a12: -s,
            a21: s,
            a22: c,
            tx: 0.0,
            ty: 0.0,
        }
    }

    pub fn with_translation(mut self, t: Point2) -> LinearMap2 {
        self.tx = t.x;
        self.ty = t.y;
        self
    }

    pub fn det(&self) -> f64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        pt(
            self.a11 * p.x + self.a12 * p.y + self.tx,
            self.a21 * p.x + self.a22 * p.y + self.ty,
        )
    }

    /// Applies only the linear part.
    pub fn apply_linear(&self, p: Point2) -> Point2 {
        pt(self.a11 * p.x + self.a12 * p.y, self.a21 * p.x + self.a22 * p.y)
    }

    pub fn inverse(&self) -> Result<LinearMap2> {
        let d = self.det();
        if !(d.is_finite() && d.abs() > 0.0) {
            return Err(Error::SingularMap);
        }
        let inv = LinearMap2 {
            a11: self.a22 / d,
            a12: -self.a12 / d,
            a21: -self.a21 / d,
            a22: self.a11 / d,
            tx: 0.0,
            ty: 0.0,
        };
        let t = inv.apply_linear(pt(self.tx, self.ty));
        Ok(inv.with_translation(-t))
    }

    /// Transpose of the inverse of the linear part; carries polars of linear
    /// images: `(A K)^* = (A^{-1})^T K^*`.
    pub fn inverse_transpose(&self) -> Result<LinearMap2> {
        let inv = LinearMap2 {
            tx: 0.0,
            ty: 0.0,
            ..self.inverse()?
        };
        Ok(LinearMap2 {
            a11: inv.a11,
            a12: inv.a21,
            a21: inv.a12,
            a22: inv.a22,
            tx: 0.0,
            ty: 0.0,
        })
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &LinearMap2) -> LinearMap2 {
        let c1 = self.apply_linear(pt(other.a11, other.a21));
        let c2 = self.apply_linear(pt(other.a12, other.a22));
        let t = self.apply(pt(other.tx, other.ty));
        LinearMap2::from_columns(c1, c2).with_translation(t)
    }
}

/// A strictly convex polygon, counterclockwise, canonical start vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    verts: Vec<Point2>,
}

/// Convex hull with tolerance-based collinear merging; returns the canonical
/// polygon. This is the only constructor.
pub fn make_polygon(points: &[Point2]) -> Result<ConvexPolygon> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::InvalidParameter("non-finite coordinate".into()));
    }
    if points.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "need at least 3 points, got {}",
            points.len()
        )));
    }
    // Scale reference: bounding-box diagonal of the input.
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in points {
        xmin = xmin.min(p.x);
        xmax = xmax.max(p.x);
        ymin = ymin.min(p.y);
        ymax = ymax.max(p.y);
    }
    let scale = (xmax - xmin).hypot(ymax - ymin);
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::DegenerateInput("all points coincide".into()));
    }
    let dedup_tol = REL_TOL * scale;
    // Triangle area below REL_TOL * diam^2 counts as collinear; the popped
    // cross product is twice the area.
    let cross_tol = 2.0 * REL_TOL * scale * scale;

    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup_by(|a, b| (*a - *b).norm() <= dedup_tol);
    if pts.len() < 3 {
        return Err(Error::DegenerateInput("fewer than 3 distinct points".into()));
    }

    // Andrew's monotone chain, popping non-left turns (collinear included).
    let chain = |iter: &mut dyn Iterator<Item = Point2>| -> Vec<Point2> {
        let mut out: Vec<Point2> = Vec::new();
        for p in iter {
            while out.len() >= 2 {
                let a = out[out.len() - 2];
                let b = out[out.len() - 1];
                if (b - a).cross(p - a) <= cross_tol {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        out
    };
    let lower = chain(&mut pts.iter().copied());
    let upper = chain(&mut pts.iter().rev().copied());
    let mut hull = lower;
    hull.pop();
    hull.extend_from_slice(&upper[..upper.len().saturating_sub(1)]);

    if hull.len() < 3 {
        return Err(Error::DegenerateInput("hull is not two-dimensional".into()));
    }
    // The seam vertices can leave one residual collinear triple; sweep once more.
    let mut cleaned: Vec<Point2> = Vec::with_capacity(hull.len());
    for &p in &hull {
        while cleaned.len() >= 2 {
            let a = cleaned[cleaned.len() - 2];
            let b = cleaned[cleaned.len() - 1];
            if (b - a).cross(p - a) <= cross_tol {
                cleaned.pop();
            } else {
                break;
            }
        }
        cleaned.push(p);
    }
    while cleaned.len() >= 3 {
        let n = cleaned.len();
        let a = cleaned[n - 2];
        let b = cleaned[n - 1];
        let c = cleaned[0];
        if (b - a).cross(c - a) <= cross_tol {
            cleaned.pop();
            continue;
        }
        let d = cleaned[1];
        if (c - b).cross(d - b) <= cross_tol {
            cleaned.remove(0);
            continue;
        }
        break;
    }
    if cleaned.len() < 3 {
        return Err(Error::DegenerateInput("hull is not two-dimensional".into()));
    }

    let poly = ConvexPolygon {
        verts: canonical_start(cleaned),
    };
    if poly.area() <= REL_TOL * scale * scale {
        return Err(Error::DegenerateInput("hull area below tolerance".into()));
    }
    Ok(poly)
}

fn canonical_start(mut verts: Vec<Point2>) -> Vec<Point2> {
    let mut start = 0;
    for i in 1..verts.len() {
        if (verts[i].x, verts[i].y) < (verts[start].x, verts[start].y) {
            start = i;
        }
    }
    verts.rotate_left(start);
    verts
}

impl ConvexPolygon {
    /// Vertices, counterclockwise from the lexicographically smallest.
    pub fn vertices(&self) -> &[Point2] {
        &self.verts
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    /// Directed edges `(v_i, v_{i+1})`.
    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.verts.len();
        (0..n).map(move |i| (self.verts[i], self.verts[(i + 1) % n]))
    }

    /// Outward half-plane of edge `i`; the polygon is the intersection of all of them.
    pub fn edge_halfplane(&self, i: usize) -> HalfPlane {
        let n = self.verts.len();
        let (a, b) = (self.verts[i], self.verts[(i + 1) % n]);
        HalfPlane::left_of(a, b).expect("polygon edges are non-degenerate")
    }

    /// Shoelace area (positive).
    pub fn area(&self) -> f64 {
        let mut acc = 0.0;
        for (a, b) in self.edges() {
            acc += a.cross(b);
        }
        0.5 * acc
    }

    /// Area-weighted centroid; strictly interior by convexity.
    pub fn centroid(&self) -> Point2 {
        let mut acc = Point2::ORIGIN;
        let mut area2 = 0.0;
        for (a, b) in self.edges() {
            let c = a.cross(b);
            acc = acc + (a + b) * c;
            area2 += c;
        }
        acc * (1.0 / (3.0 * area2))
    }

    /// Support function `h_K(u) = max_v <u, v>`.
    pub fn support(&self, u: Point2) -> f64 {
        self.verts
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Largest pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        let mut best = 0.0f64;
        for i in 0..self.verts.len() {
            for j in i + 1..self.verts.len() {
                best = best.max((self.verts[i] - self.verts[j]).norm_sq());
            }
        }
        best.sqrt()
    }

    /// Membership test: inside every edge half-plane up to `slack` (a distance).
    pub fn contains(&self, q: Point2, slack: f64) -> bool {
        (0..self.verts.len()).all(|i| self.edge_halfplane(i).excess(q) <= slack)
    }

    /// Signed clearance of `q` to the boundary: min over edges of
    /// `offset - <n, q>`; positive iff strictly interior.
    pub fn clearance(&self, q: Point2) -> f64 {
        (0..self.verts.len())
            .map(|i| -self.edge_halfplane(i).excess(q))
            .fold(f64::INFINITY, f64::min)
    }

    /// Minkowski gauge of `q` with respect to `self` about the origin
    /// (requires the origin strictly inside).
    pub fn gauge(&self, q: Point2) -> f64 {
        let mut best = 0.0f64;
        for i in 0..self.verts.len() {
            let h = self.edge_halfplane(i);
            debug_assert!(h.offset > 0.0, "gauge needs the origin strictly inside");
            best = best.max(h.normal.dot(q) / h.offset);
        }
        best
    }

    /// Intersection with a half-plane (Sutherland–Hodgman step).
    pub fn clip(&self, h: &HalfPlane) -> Result<ConvexPolygon> {
        let scale = self.diameter();
        let eps = REL_TOL * scale;
        let n = self.verts.len();
        let mut out: Vec<Point2> = Vec::with_capacity(n + 2);
        for i in 0..n {
            let a = self.verts[i];
            let b = self.verts[(i + 1) % n];
            let da = h.excess(a);
            let db = h.excess(b);
            if da <= eps {
                out.push(a);
            }
            if (da > eps && db < -eps) || (da < -eps && db > eps) {
                let t = da / (da - db);
                out.push(a + (b - a) * t);
            }
        }
        if out.len() < 3 {
            return Err(Error::DegenerateInput(
                "clip result has no interior".into(),
            ));
        }
        make_polygon(&out)
    }

    /// Intersection of two convex polygons.
    pub fn intersect(&self, other: &ConvexPolygon) -> Result<ConvexPolygon> {
        let mut acc = self.clone();
        for i in 0..other.len() {
            acc = acc.clip(&other.edge_halfplane(i))?;
        }
        Ok(acc)
    }

    /// Vertexwise affine image; orientation is restored if the map reverses it.
    pub fn apply_map(&self, map: &LinearMap2) -> Result<ConvexPolygon> {
        let d = map.det();
        if !(d.is_finite() && d != 0.0) {
            return Err(Error::SingularMap);
        }
        let imgs: Vec<Point2> = self.verts.iter().map(|&v| map.apply(v)).collect();
        make_polygon(&imgs)
    }

    pub fn translate(&self, t: Point2) -> ConvexPolygon {
        let verts = self.verts.iter().map(|&v| v + t).collect();
        ConvexPolygon {
            verts: canonical_start(verts),
        }
    }

    /// Central symmetral `(K + (-K)) / 2`, an o-symmetric body; computed by
    /// the edge-angle merge so the edge structure is exact.
    pub fn central_symmetral(&self) -> ConvexPolygon {
        let half: Vec<Point2> = self.verts.iter().map(|&v| v * 0.5).collect();
        let a = ConvexPolygon {
            verts: canonical_start(half.clone()),
        };
        let b = ConvexPolygon {
            verts: canonical_start(half.iter().map(|&v| -v).collect()),
        };
        minkowski_sum(&a, &b)
    }

    /// Intersection with the closed cone at `apex` spanned counterclockwise
    /// from `ray1` to `ray2` (angle strictly between 0 and pi).
    pub fn clip_sector(&self, apex: Point2, ray1: Point2, ray2: Point2) -> Result<ConvexPolygon> {
        if self.clearance(apex) <= 0.0 {
            return Err(Error::InvalidParameter(
                "sector apex must be strictly inside".into(),
            ));
        }
        let cr = ray1.cross(ray2);
        if cr <= REL_TOL * ray1.norm() * ray2.norm() {
            return Err(Error::DegenerateInput(
                "sector angle must lie strictly between 0 and pi".into(),
            ));
        }
        // Left of ray1 and right of ray2.
        let h1 = HalfPlane::new(-ray1.perp(), (-ray1.perp()).dot(apex))?;
        let h2 = HalfPlane::new(ray2.perp(), ray2.perp().dot(apex))?;
        self.clip(&h1)?.clip(&h2)
    }

    /// True when `-v` is a vertex for every vertex `v` (within `tol`).
    pub fn is_origin_symmetric(&self, tol: f64) -> bool {
        self.verts
            .iter()
            .all(|&v| self.verts.iter().any(|&w| (w + v).norm() <= tol))
    }

    /// True when rotation by `2*pi/n` about the origin permutes the vertices.
    pub fn is_nfold_symmetric(&self, n: u32, tol: f64) -> bool {
        if n < 2 {
            return true;
        }
        let rot = LinearMap2::rotation(2.0 * std::f64::consts::PI / n as f64);
        self.verts.iter().all(|&v| {
            let r = rot.apply(v);
            self.verts.iter().any(|&w| (w - r).norm() <= tol)
        })
    }
}

/// Minkowski sum of convex polygons by merging edge lists in angular order.
pub fn minkowski_sum(p: &ConvexPolygon, q: &ConvexPolygon) -> ConvexPolygon {
    // Edge vectors in sweep order, starting at the bottom-most (then
    // left-most) vertex; angles are unwrapped so the sequence is monotone.
    fn edges_from_bottom(poly: &ConvexPolygon) -> (Point2, Vec<(f64, Point2)>) {
        let vs = poly.vertices();
        let n = vs.len();
        let mut k = 0;
        for i in 1..n {
            if (vs[i].y, vs[i].x) < (vs[k].y, vs[k].x) {
                k = i;
            }
        }
        let mut out = Vec::with_capacity(n);
        let mut prev = 0.0f64;
        for t in 0..n {
            let e = vs[(k + t + 1) % n] - vs[(k + t) % n];
            let mut a = e.y.atan2(e.x);
            while a < prev - 1e-9 {
                a += 2.0 * std::f64::consts::PI;
            }
            prev = a;
            out.push((a, e));
        }
        (vs[k], out)
    }
    let (sp, ep) = edges_from_bottom(p);
    let (sq, eq) = edges_from_bottom(q);
    let mut out = Vec::with_capacity(ep.len() + eq.len());
    let mut cur = sp + sq;
    let (mut i, mut j) = (0usize, 0usize);
    while i < ep.len() || j < eq.len() {
        out.push(cur);
        let take_p = j >= eq.len() || (i < ep.len() && ep[i].0 < eq[j].0 - 1e-12);
        let take_q = i >= ep.len() || (j < eq.len() && eq[j].0 < ep[i].0 - 1e-12);
        let step = if take_p {
            i += 1;
            ep[i - 1].1
        } else if take_q {
            j += 1;
            eq[j - 1].1
        } else {
            // Parallel edges advance together.
            i += 1;
            j += 1;
            ep[i - 1].1 + eq[j - 1].1
        };
        cur = cur + step;
    }
    make_polygon(&out).expect("Minkowski sum of convex polygons is convex")
}
