//! Planar convex geometry around the volume product `|K| * |K^*|`.
//!
//! The crate computes polar polygons, volume products, Santalo points,
//! difference bodies, and the sandwich certificates that turn sharp
//! stability estimates for the planar volume-product inequalities into
//! checkable numerical statements. Everything is pure and deterministic:
//! values are immutable after construction and seeded generators fully
//! determine their output, so all of it can be driven from sweeps or
//! bindings without shared state.
//!
//! Module map:
//!
//! * [`geometry`] — convex polygons, half-planes, affine maps, clipping,
//!   Minkowski sums.
//! * [`polarity`] — exact polar polygons, the support-function quadrature
//!   cross-check, volume products, the difference-body product.
//! * [`santalo`] — polar-area gradient in closed form and the damped-Newton
//!   minimiser locating the Santalo point.
//! * [`canonical`] — regular and bumped n-gons, maximal inscribed models,
//!   sandwich certificates, seeded random bodies.
//! * [`sectors`] — the sector product bound, its refinement, thresholds,
//!   and the near-equality dichotomy.
//! * [`stability`] — end-to-end verdicts for the stability estimates and
//!   the centre-of-polarity bounds.

pub mod canonical;
pub mod error;
pub mod geometry;
pub mod polarity;
pub mod quad;
pub mod rng;
pub mod santalo;
pub mod sectors;
pub mod stability;

pub use error::{Error, Result};
pub use geometry::{make_polygon, minkowski_sum, pt, ConvexPolygon, HalfPlane, LinearMap2, Point2};
pub use polarity::{polar, volume_product, CenteredBody, VolumeProductReport};
pub use santalo::{santalo_point, SantaloResult};
