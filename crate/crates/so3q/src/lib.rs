//! SO(3) quantum invariants of knots and of the torus, computed on two sides.
//!
//! The skein side ([`skein`], [`jones`], [`tqft`]) works with exact Laurent
//! polynomials in `A`, cabled Kauffman brackets and the finite-dimensional
//! torus space `V'_r(T^2)`. The geometric side ([`geom`]) realizes the same
//! space as theta sections over the torus, with Heisenberg translations and
//! quadrature inner products. [`knot_state`] ties both together through the
//! L2-norm of knot states and the volume-conjecture sequence.
//!
//! Throughout, `A = exp(i*pi/(2r+1))`, so `A^4 = exp(2*pi*i/(r+1/2))`.

pub mod error;
pub mod geom;
pub mod jones;
pub mod knot_state;
pub mod precision;
pub mod skein;
pub mod tqft;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Crate version recorded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Identifier of the sign and chirality conventions used by every module.
pub const CONVENTIONS: &str = "so3q-conventions-1";
