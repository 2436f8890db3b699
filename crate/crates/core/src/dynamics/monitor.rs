use std::io::{self, Write};

use serde::Serialize;

use super::integrator::{integrate_fn, IntegrationStatus, IntegratorConfig, Trajectory};
use super::invariants::ScalarField;
use super::rhs::{rhs, Point};
use crate::error::Result;
use crate::vectorfields::ModelType;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantDrift {
    pub name: String,
    pub initial: Option<f64>,
    /// `max |v(t) - v(0)| / max(1, |v(0)|)` over the points in the domain.
    pub max_drift: f64,
    pub domain_violation: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DriftReport {
    pub model: ModelType,
    pub k: f64,
    pub x0: Point,
    pub config: IntegratorConfig,
    pub status: IntegrationStatus,
    pub accepted_steps: usize,
    pub rejected_steps: usize,
    pub t_final: f64,
    pub invariants: Vec<InvariantDrift>,
}

impl DriftReport {
    pub fn drift_of(&self, name: &str) -> Option<&InvariantDrift> {
        self.invariants.iter().find(|d| d.name == name)
    }
}

pub fn integrate(model: ModelType, k: f64, x0: Point, cfg: &IntegratorConfig) -> Result<Trajectory> {
    integrate_fn(|x| rhs(model, k, x), x0, cfg)
}

pub fn monitor_invariant(traj: &Trajectory, inv: &dyn ScalarField) -> InvariantDrift {
    let initial = inv.value(&traj.states[0].x);
    let mut violation = initial.is_none();
    let mut max_drift: f64 = 0.0;
    if let Some(v0) = initial {
        let scale = v0.abs().max(1.0);
        for s in &traj.states[1..] {
            match inv.value(&s.x) {
                Some(v) => max_drift = max_drift.max((v - v0).abs() / scale),
                None => violation = true,
            }
        }
    }
    InvariantDrift {
        name: inv.name(),
        initial,
        max_drift,
        domain_violation: violation,
    }
}

pub fn drift_report(
    model: ModelType,
    k: f64,
    x0: Point,
    cfg: &IntegratorConfig,
    invariants: &[Box<dyn ScalarField>],
) -> Result<(Trajectory, DriftReport)> {
    let traj = integrate(model, k, x0, cfg)?;
    let report = DriftReport {
        model,
        k,
        x0,
        config: cfg.clone(),
        status: traj.status,
        accepted_steps: traj.states.len() - 1,
        rejected_steps: traj.rejected_steps,
        t_final: traj.last().t,
        invariants: invariants.iter().map(|inv| monitor_invariant(&traj, inv.as_ref())).collect(),
    };
    Ok((traj, report))
}

/// One row per accepted step, 17 significant digits.
pub fn write_csv(traj: &Trajectory, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "t,x1,x2,x3,x4,x5,x6")?;
    for s in &traj.states {
        write!(out, "{:.16e}", s.t)?;
        for v in &s.x {
            write!(out, ",{v:.16e}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}
