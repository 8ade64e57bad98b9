//! Exact-arithmetic models of the little n-cubes operad, the comonad it
//! induces on pointed spaces, suspension coalgebras, and the approximation
//! and recognition machinery connecting the two.
//!
//! Every coordinate is an arbitrary-precision rational and every law checked
//! by the companion harness is decided by exact equality — there are no
//! floating-point tolerances anywhere in this crate.
//!
//! Maps between spaces (loops, comonad elements, pointed maps) are
//! closure-backed. Two maps are compared by evaluating both on a fixed,
//! documented probe set for their dimension ([`probe`]); all `PartialEq`
//! impls on map-like types use that protocol and nothing else.

pub mod approximation;
pub mod coalgebra;
pub mod comonad;
pub mod convolution;
pub mod error;
pub mod geometry;
pub mod operad;
pub mod probe;
pub mod rational;
pub mod recognition;
pub mod rng;
pub mod spaces;

pub use error::{Error, Result};
pub use rational::Rational;
