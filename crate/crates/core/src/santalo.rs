//! The Santalo point: the unique interior minimiser of the polar area.
//!
//! With `u = (cos t, sin t)` the polar area and its derivatives are
//! integrals of powers of `h_K(u) - <u, x>` over the circle. On the arc
//! between two consecutive edge normals the support is attained at one
//! vertex `w`, so `h(u) - <u, x> = R cos(t - p)` for `w - x = R (cos p, sin p)`,
//! and the gradient integrands have elementary antiderivatives per arc:
//!
//! ```text
//! d/dx1 |(K-x)^*| = ∮ u1 (h - <u,x>)^{-3} du
//!   = sum over arcs of R^{-3} [ cos p * tan s - (sin p / 2) sec^2 s ]
//! d/dx2: R^{-3} [ sin p * tan s + (cos p / 2) sec^2 s ],   s = t - p.
//! ```
//!
//! The minimiser is found by damped Newton with this exact gradient, a
//! finite-difference 2x2 Hessian, and an interior safeguard; the objective
//! is strictly convex (its second directional derivatives are bounded below
//! by `3 pi / diam^4`), so the minimiser is unique.

use crate::error::{Error, Result};
use crate::geometry::{pt, ConvexPolygon, Point2};
use crate::polarity::{polar, CenteredBody};
use std::f64::consts::PI;

/// Exact gradient of `x -> |(K - x)^*|` at the body's centre.
pub fn polar_area_gradient(body: &CenteredBody) -> Point2 {
    let shifted = body.centred_polygon();
    let n = shifted.len();
    // Arc boundaries are the edge-normal angles; on the arc between the
    // normals of edges i-1 and i the support vertex is vertex i.
    let mut grad = Point2::ORIGIN;
    for i in 0..n {
        let prev = shifted.edge_halfplane((i + n - 1) % n).normal;
        let next = shifted.edge_halfplane(i).normal;
        let w = shifted.vertices()[i];
        let r = w.norm();
        let phase = w.angle();
        // Arc [angle(prev), angle(next)] measured relative to `phase`;
        // both half-angles are strictly inside (-pi/2, pi/2) because the
        // origin is strictly inside the body.
        let rel = |a: f64| -> f64 {
            let mut d = a - phase;
            while d > PI {
                d -= 2.0 * PI;
            }
            while d < -PI {
                d += 2.0 * PI;
            }
            d
        };
        let s0 = rel(prev.angle());
        let s1 = rel(next.angle());
        let anti = |s: f64| -> Point2 {
            let t = s.tan();
            let sec2 = 1.0 / (s.cos() * s.cos());
            pt(
                phase.cos() * t - 0.5 * phase.sin() * sec2,
                phase.sin() * t + 0.5 * phase.cos() * sec2,
            )
        };
        grad = grad + (anti(s1) - anti(s0)) * (1.0 / (r * r * r));
    }
    grad
}

/// The uniform lower bound `3 pi / (diam K)^4` on every second directional
/// derivative of the polar area at d = 2.
pub fn polar_area_hessian_lower(body: &CenteredBody) -> f64 {
    let d = body.polygon().diameter();
    3.0 * PI / d.powi(4)
}

/// Result of the Santalo-point solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SantaloResult {
    pub point: Point2,
    pub polar_area_at_min: f64,
    pub gradient_norm: f64,
    pub iterations: usize,
}

/// Default gradient tolerance; the gradient scales like `length^{-3}`.
pub fn default_tolerance(k: &ConvexPolygon) -> f64 {
    1e-9 / k.diameter().powi(3)
}

const MAX_ITERATIONS: usize = 200;

fn objective(k: &ConvexPolygon, x: Point2) -> Option<f64> {
    CenteredBody::new(k.clone(), x).ok().map(|b| polar(&b).area())
}

/// Minimises `z -> |(K - z)^*|` by damped Newton from the centroid.
pub fn santalo_point(k: &ConvexPolygon, tol: f64) -> Result<SantaloResult> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let diam = k.diameter();
    let safeguard = 1e-6 * diam;
    let fd_step = 1e-6 * diam;
    let grad_at = |p: Point2| -> Option<Point2> {
        CenteredBody::new(k.clone(), p)
            .ok()
            .map(|b| polar_area_gradient(&b))
    };

    let mut x = k.centroid();
    let mut g = grad_at(x).expect("centroid is strictly interior");
    for iter in 0..MAX_ITERATIONS {
        let gnorm = g.norm();
        if gnorm <= tol {
            return Ok(SantaloResult {
                point: x,
                polar_area_at_min: objective(k, x).expect("iterate is interior"),
                gradient_norm: gnorm,
                iterations: iter,
            });
        }
        // Finite-difference Hessian of the exact gradient, symmetrised.
        let hess = (|| -> Option<[f64; 3]> {
            let gx1 = grad_at(x + pt(fd_step, 0.0))?;
            let gx0 = grad_at(x - pt(fd_step, 0.0))?;
            let gy1 = grad_at(x + pt(0.0, fd_step))?;
            let gy0 = grad_at(x - pt(0.0, fd_step))?;
            let h11 = (gx1.x - gx0.x) / (2.0 * fd_step);
            let h12 = 0.5 * ((gx1.y - gx0.y) + (gy1.x - gy0.x)) / (2.0 * fd_step);
            let h22 = (gy1.y - gy0.y) / (2.0 * fd_step);
            Some([h11, h12, h22])
        })();
        // Newton direction, falling back to steepest descent (scaled by the
        // uniform convexity bound) when the Hessian estimate is unusable.
        let fallback = {
            let body = CenteredBody::new(k.clone(), x)?;
            -g * (1.0 / polar_area_hessian_lower(&body))
        };
        let dir = match hess {
            Some([h11, h12, h22]) => {
                let det = h11 * h22 - h12 * h12;
                let trace = h11 + h22;
                if det > 1e-12 * trace * trace && trace > 0.0 {
                    pt(
                        -(h22 * g.x - h12 * g.y) / det,
                        -(h11 * g.y - h12 * g.x) / det,
                    )
                } else {
                    fallback
                }
            }
            None => fallback,
        };
        // Backtracking on the gradient norm (the objective itself flattens
        // below floating-point resolution near the minimum); the iterate
        // stays safely interior, where the objective is finite and smooth.
        let mut step = 1.0;
        let mut advanced = false;
        for _ in 0..60 {
            let cand = x + dir * step;
            if k.clearance(cand) >= safeguard {
                if let Some(gc) = grad_at(cand) {
                    if gc.norm() <= gnorm * (1.0 - 1e-4 * step) {
                        x = cand;
                        g = gc;
                        advanced = true;
                        break;
                    }
                }
            }
            step *= 0.5;
        }
        if !advanced {
            return Err(Error::NoConvergence {
                iterations: iter,
                gradient_norm: gnorm,
            });
        }
    }
    let gnorm = g.norm();
    if gnorm <= tol {
        return Ok(SantaloResult {
            point: x,
            polar_area_at_min: objective(k, x).expect("iterate is interior"),
            gradient_norm: gnorm,
            iterations: MAX_ITERATIONS,
        });
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        gradient_norm: gnorm,
    })
}

/// Norm of the centroid of `(K - s(K))^*`; a first-order optimality
/// diagnostic that vanishes at the true Santalo point.
pub fn centroid_of_polar_check(k: &ConvexPolygon) -> Result<f64> {
    let s = santalo_point(k, default_tolerance(k))?;
    let body = CenteredBody::new(k.clone(), s.point)?;
    Ok(polar(&body).centroid().norm())
}
