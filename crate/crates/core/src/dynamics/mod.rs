//! Floating-point trajectories of the Bianchi systems and drift monitoring
//! of their first integrals.

mod integrator;
mod invariants;
mod monitor;
mod rhs;

pub use integrator::{integrate_fn, IntegrationStatus, IntegratorConfig, State, Trajectory};
pub use invariants::{
    default_invariants, default_x0, discriminant, invariants_for, PolynomialInvariant, ScalarField, TranscendentalInvariant,
    WeightedPowerInvariant, DIFFERENCE_STEP,
};
pub use monitor::{drift_report, integrate, monitor_invariant, write_csv, DriftReport, InvariantDrift};
pub use rhs::{quadratic_form, rhs, Point};
