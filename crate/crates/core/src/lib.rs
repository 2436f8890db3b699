//! Exact detection of homogeneous polynomial first integrals for polynomial
//! vector fields, specialized to the six Bianchi class A cosmological
//! systems.
//!
//! The crate is layered bottom-up:
//!
//! - [`coefficients`]: exact rationals and polynomials in the
//!   equation-of-state parameter `k`.
//! - [`multipoly`]: sparse multivariate polynomials over either ring.
//! - [`vectorfields`]: the Bianchi class A systems, Lie derivatives and
//!   weighted-power first integrals.
//! - [`engine`]: the annihilation system `X(F) = 0` as exact linear algebra,
//!   pluggable nullspace solvers, degree sweeps, independence ranks and the
//!   PDE analyzers behind the non-existence arguments.
//! - [`dynamics`]: floating-point trajectories and invariant-drift reports.

pub mod coefficients;
pub mod dynamics;
pub mod engine;
pub mod error;
pub mod multipoly;
pub mod vectorfields;

pub use coefficients::{Coeff, KPoly, Rational};
pub use error::{Error, Result};
pub use multipoly::{Monomial, MultiPoly};
pub use vectorfields::{BianchiModel, KMode, ModelType, VectorField};
