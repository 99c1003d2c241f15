//! Exact skein arithmetic: Laurent polynomials in `A`, planar diagrams and
//! braid closures, the Kauffman bracket state sum, cabling by Chebyshev
//! colors, and evaluation at the SO(3) root of unity.

mod bracket;
mod cable;
mod diagram;
mod poly;
mod root;

pub use bracket::{kauffman_bracket, MAX_STATE_SUM_CROSSINGS};
pub use cable::{cabled_bracket, chebyshev_coeffs, colored_bracket, twist_power, ChebyshevColor};
pub use diagram::{BraidWord, Component, Crossing, LinkDiagram};
pub use poly::LaurentPoly;
pub use root::{eval_at_root, quantum_integer, RootContext};
