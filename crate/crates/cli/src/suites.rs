//! Verification suites: canonical bodies, near-extremal grids, and seeded
//! random bodies per theorem, evaluated to one report row per body.

use crate::io::{fmt_f64, fmt_opt};
use crate::par::parallel_map;
use serde::Serialize;
use std::f64::consts::PI;
use volprod_core::canonical::{bumped_ngon, random_body, regular_ngon, Symmetry};
use volprod_core::geometry::{make_polygon, pt, ConvexPolygon, LinearMap2, Point2};
use volprod_core::rng::SplitMix64;
use volprod_core::stability::{
    eggleston_refined_bound, verify_difference_stability, verify_incidence_bound,
    verify_nfold_stability, verify_parallelogram_stability, verify_triangle_stability, Suite,
};
use volprod_core::Result;

/// One verdict row; unused columns stay `None` and serialise away.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub index: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub eps: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bm_upper: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claimed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centre_distance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centre_claimed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain_hex: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain_mean: Option<f64>,
    pub tie: bool,
    pub pass: bool,
}

/// The valid bump range for the 2n-gon family.
fn bump_grid(n: u32) -> Vec<f64> {
    let cap = 1.0 / (PI / n as f64).cos() - 1.0;
    [1e-4, 1e-3, 1e-2, 1e-1]
        .into_iter()
        .filter(|e| *e <= cap)
        .collect()
}

fn shear_square() -> ConvexPolygon {
    let sq = make_polygon(&[pt(-1.0, -1.0), pt(1.0, -1.0), pt(1.0, 1.0), pt(-1.0, 1.0)]).unwrap();
    sq.apply_map(&LinearMap2 {
        a11: 1.0,
        a12: 0.6,
        a21: 0.0,
        a22: 1.0,
        tx: 0.0,
        ty: 0.0,
    })
    .unwrap()
}

fn skew_triangle() -> ConvexPolygon {
    make_polygon(&[pt(-0.8, -0.5), pt(1.9, -0.1), pt(0.2, 1.4)]).unwrap()
}

/// The bodies a stability suite runs over: canonical equality cases, the
/// near-extremal bumped grid, then `count` seeded random bodies.
fn stability_bodies(suite: Suite, seed: u64, count: usize) -> Vec<(u64, ConvexPolygon)> {
    let mut bodies: Vec<(u64, ConvexPolygon)> = Vec::new();
    match suite {
        Suite::T1 => {
            bodies.push((0, make_polygon(&[pt(-1.0, -1.0), pt(1.0, -1.0), pt(1.0, 1.0), pt(-1.0, 1.0)]).unwrap()));
            bodies.push((0, regular_ngon(4, 1.0, 0.0).unwrap()));
            bodies.push((0, shear_square()));
            bodies.push((0, regular_ngon(6, 1.2, 0.2).unwrap()));
            bodies.push((0, regular_ngon(8, 0.9, 0.1).unwrap()));
            for n in [4u32, 6, 8, 10, 12] {
                for e in bump_grid(n) {
                    bodies.push((0, bumped_ngon(n, e).unwrap()));
                }
            }
            for i in 0..count {
                let s = seed.wrapping_add(i as u64);
                bodies.push((s, random_body(s, 7 + (i % 6) as u32, Symmetry::Central)));
            }
        }
        Suite::T2 | Suite::T6 | Suite::L7 => {
            bodies.push((0, make_polygon(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)]).unwrap()));
            bodies.push((0, regular_ngon(3, 1.0, 0.4).unwrap()));
            bodies.push((0, skew_triangle()));
            bodies.push((0, regular_ngon(5, 1.0, 0.0).unwrap()));
            bodies.push((0, regular_ngon(6, 1.0, 0.0).unwrap()));
            for e in bump_grid(3) {
                bodies.push((0, bumped_ngon(3, e).unwrap()));
            }
            for i in 0..count {
                let s = seed.wrapping_add(i as u64);
                bodies.push((s, random_body(s, 6 + (i % 7) as u32, Symmetry::None)));
            }
        }
        Suite::T5 => {
            for n in 3..=8u32 {
                bodies.push((0, regular_ngon(n, 1.0, 0.1 * n as f64).unwrap()));
            }
            for n in [3u32, 4, 5, 6, 8, 12] {
                for e in bump_grid(n) {
                    bodies.push((0, bumped_ngon(n, e).unwrap()));
                }
            }
            for i in 0..count {
                let s = seed.wrapping_add(i as u64);
                let k = [3u32, 5, 6, 8][i % 4];
                bodies.push((s, random_body(s, 4 + (i % 4) as u32, Symmetry::NFold(k))));
            }
        }
        Suite::T3 => unreachable!("t3 bodies are built with their sandwiches"),
    }
    bodies
}

fn stability_row(suite: Suite, index: usize, seed: u64, k: &ConvexPolygon) -> Result<Row> {
    let v = match suite {
        Suite::T1 => verify_parallelogram_stability(k)?,
        Suite::T2 => verify_triangle_stability(k)?,
        Suite::T6 => verify_difference_stability(k)?,
        Suite::T5 => {
            let n = nfold_order(k);
            verify_nfold_stability(k, n)?
        }
        _ => unreachable!(),
    };
    Ok(Row {
        index,
        seed,
        n: None,
        eps: v.eps,
        bm_upper: Some(v.bm_upper),
        claimed: Some(v.claimed),
        centre_distance: v.centre_distance,
        centre_claimed: v.centre_claimed,
        alpha: None,
        bound: None,
        product: None,
        chain_hex: None,
        chain_mean: None,
        tie: v.witness_tie,
        pass: v.pass,
    })
}

/// The largest symmetry order (up to 12) of a body about the origin.
fn nfold_order(k: &ConvexPolygon) -> u32 {
    let tol = 1e-9 * k.diameter();
    (3..=12u32)
        .rev()
        .find(|n| k.is_nfold_symmetric(*n, tol))
        .unwrap_or(3)
}

fn refined_row(index: usize, seed: u64, k: &ConvexPolygon) -> Result<Row> {
    let r = eggleston_refined_bound(k)?;
    Ok(Row {
        index,
        seed,
        n: None,
        eps: r.product / 6.0 - 1.0,
        bm_upper: None,
        claimed: None,
        centre_distance: None,
        centre_claimed: None,
        alpha: Some(r.alpha),
        bound: Some(r.bound),
        product: Some(r.product),
        chain_hex: Some(r.chain[0]),
        chain_mean: Some(r.chain[1]),
        tie: false,
        pass: r.pass,
    })
}

/// The incidence suite builds its own sandwich per row: a regular inner
/// n-gon, the circumscribed n-gon with side midpoints at the inner
/// vertices, and an interpolated body between them.
fn incidence_row(index: usize, seed: u64) -> Result<Row> {
    let n = [3u32, 4, 5, 6, 8][index % 5];
    let ki = regular_ngon(n, 1.0, 0.0)?;
    let ko = regular_ngon(n, 1.0 / (PI / n as f64).cos(), PI / n as f64)?;
    let (k, centre) = if seed == 0 {
        // Equality rows alternate between the inner and outer bodies.
        let k = if index % 2 == 0 { ki.clone() } else { ko.clone() };
        (k, Point2::ORIGIN)
    } else {
        let mut rng = SplitMix64::new(seed);
        let mut pts_all = ki.vertices().to_vec();
        for v in ko.vertices() {
            let t = rng.next_f64();
            pts_all.push(*v * t);
        }
        let k = make_polygon(&pts_all)?;
        let centre = if rng.below(2) == 0 {
            Point2::ORIGIN
        } else {
            let angle = rng.uniform(0.0, 2.0 * PI);
            let radius = 0.2 * (PI / n as f64).cos() * rng.next_f64();
            pt(radius * angle.cos(), radius * angle.sin())
        };
        (k, centre)
    };
    let r = verify_incidence_bound(&k, &ki, &ko, centre)?;
    Ok(Row {
        index,
        seed,
        n: Some(n),
        eps: r.verdict.eps,
        bm_upper: None,
        claimed: None,
        centre_distance: None,
        centre_claimed: None,
        alpha: None,
        bound: Some(r.bound),
        product: Some(r.product),
        chain_hex: None,
        chain_mean: None,
        tie: false,
        pass: r.verdict.pass,
    })
}

/// Runs a suite and returns its rows in index order.
pub fn run_suite(suite: Suite, seed: u64, count: usize) -> Result<Vec<Row>> {
    match suite {
        Suite::T3 => {
            // A dozen equality rows, then the seeded interpolants.
            let rows = parallel_map(12 + count, |i| {
                let s = if i < 12 { 0 } else { seed.wrapping_add(i as u64 - 12) };
                incidence_row(i, s)
            });
            rows.into_iter().collect()
        }
        Suite::L7 => {
            let bodies = stability_bodies(Suite::L7, seed, count);
            let rows = parallel_map(bodies.len(), |i| refined_row(i, bodies[i].0, &bodies[i].1));
            rows.into_iter().collect()
        }
        _ => {
            let bodies = stability_bodies(suite, seed, count);
            let rows =
                parallel_map(bodies.len(), |i| stability_row(suite, i, bodies[i].0, &bodies[i].1));
            rows.into_iter().collect()
        }
    }
}

/// CSV layout per suite (fixed and documented in the README).
pub fn csv_header(suite: Suite) -> &'static str {
    match suite {
        Suite::T3 => "index,seed,n,eps,product,bound,pass",
        Suite::L7 => "index,seed,eps,alpha,bound,product,chain_hex,chain_mean,pass",
        _ => "index,seed,eps,bm_upper,claimed,centre_distance,centre_claimed,tie,pass",
    }
}

pub fn csv_row(suite: Suite, r: &Row) -> String {
    match suite {
        Suite::T3 => format!(
            "{},{},{},{},{},{},{}",
            r.index,
            r.seed,
            r.n.unwrap_or(0),
            fmt_f64(r.eps),
            fmt_opt(r.product),
            fmt_opt(r.bound),
            r.pass
        ),
        Suite::L7 => format!(
            "{},{},{},{},{},{},{},{},{}",
            r.index,
            r.seed,
            fmt_f64(r.eps),
            fmt_opt(r.alpha),
            fmt_opt(r.bound),
            fmt_opt(r.product),
            fmt_opt(r.chain_hex),
            fmt_opt(r.chain_mean),
            r.pass
        ),
        _ => format!(
            "{},{},{},{},{},{},{},{},{}",
            r.index,
            r.seed,
            fmt_f64(r.eps),
            fmt_opt(r.bm_upper),
            fmt_opt(r.claimed),
            fmt_opt(r.centre_distance),
            fmt_opt(r.centre_claimed),
            r.tie,
            r.pass
        ),
    }
}

pub fn rows_to_csv(suite: Suite, rows: &[Row]) -> String {
    let mut out = String::from(csv_header(suite));
    out.push('\n');
    for r in rows {
        out.push_str(&csv_row(suite, r));
        out.push('\n');
    }
    out
}
