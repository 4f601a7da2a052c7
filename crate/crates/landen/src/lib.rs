//! Numerical integration of rational functions over the real line by
//! iterated integral-preserving coefficient maps.
//!
//! Given `F = B/A` with `deg A = p` even, `A` free of real roots, and
//! `deg B <= p - 2`, each step of order `m` maps the `2p - 1` coefficients of
//! `F` to those of a new rational function with the same integral. The
//! iterates converge (with order `m`) to a multiple of `1/(x^2+1)^(p/2)`, so
//! `pi` times the ratio of trailing coefficients converges to the integral —
//! no roots, partial fractions, or quadrature grids involved.
//!
//! The crate provides:
//!
//! - [`transform`]: the coefficient pipeline, generic over exact rational,
//!   arbitrary-precision float, and symbolic coefficient rings;
//! - [`scalars`]: exact rationals with continued-fraction compression, and
//!   tagged arbitrary-precision floats;
//! - [`upoly`]: dense univariate polynomials, resultants, real-root counting;
//! - [`cotangent`]: the polynomial pairs behind the multiple-angle
//!   substitution that powers each step.

pub mod cotangent;
pub mod driver;
pub mod error;
pub mod quadrature;
pub mod scalars;
pub mod symbolic;
pub mod transform;
pub mod upoly;

pub use error::Error;
