//! Egyptian-fraction algebra over exact rationals, digit-vector arithmetic in
//! Z2 and balanced Z3, and the correspondence between the linearity of the
//! unit-fraction summation map and membership in two fractals: the Sierpinski
//! triangle and the hexagon snowflake.
//!
//! The crate is organized around eight concerns:
//!
//! - [`exact`]: arbitrary-precision rational arithmetic, the universal value type
//! - [`digitvec`]: finite-support digit sequences over {0,1} and {-1,0,1}
//! - [`egyptian`]: Egyptian fractions, the h and sigma maps, greedy expansion,
//!   disjoint and general sum/difference, and the linearity reports
//! - [`numeral`]: binary and balanced-ternary codecs, dual representations
//! - [`fractal`]: exact geometric membership oracles and digit-condition tests
//! - [`render`]: deterministic SVG and PGM emission of approximants and clouds
//! - [`verify`]: exhaustive desk-scale verification of the propositions
//!
//! All core logic is exact: no floating point anywhere.

pub mod digitvec;
pub mod egyptian;
pub mod error;
pub mod exact;
pub mod fractal;
pub mod numeral;
pub mod render;
pub mod verify;

pub use digitvec::{AgreementVector, DigitVec2, DigitVec3};
pub use egyptian::EgyptianFraction;
pub use error::Error;
pub use exact::Rational;
pub use fractal::{ApproximantSpec, CellList, Fractal, Point};
pub use render::{ImageFormat, RenderJob, RenderTarget, Viewport};
pub use verify::VerificationReport;
