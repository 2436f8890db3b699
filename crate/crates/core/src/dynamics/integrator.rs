//! Dormand–Prince 5(4) with PI step-size control.

use serde::Serialize;

use super::rhs::Point;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegratorConfig {
    pub t_end: f64,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_steps: usize,
    /// Zero selects a starting step automatically.
    pub initial_step: f64,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        IntegratorConfig {
            t_end: 1.0,
            rel_tol: 1e-12,
            abs_tol: 1e-12,
            max_steps: 1_000_000,
            initial_step: 0.0,
        }
    }
}

impl IntegratorConfig {
    pub fn with_tol(t_end: f64, tol: f64) -> Self {
        IntegratorConfig {
            t_end,
            rel_tol: tol,
            abs_tol: tol,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.t_end.is_finite()
            && self.t_end >= 0.0
            && self.rel_tol > 0.0
            && self.abs_tol > 0.0
            && self.max_steps > 0
            && self.initial_step >= 0.0
            && self.initial_step.is_finite();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("invalid integrator configuration {self:?}")))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct State {
    pub t: f64,
    pub x: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegrationStatus {
    Completed,
    StepSizeUnderflow,
    MaxStepsExceeded,
    NonFinite,
}

/// Every accepted step, starting with the initial state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub states: Vec<State>,
    pub status: IntegrationStatus,
    pub rejected_steps: usize,
}

impl Trajectory {
    pub fn last(&self) -> &State {
        self.states.last().expect("trajectory holds the initial state")
    }
}

const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
/// Fifth-order weights minus embedded fourth-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

const SAFETY: f64 = 0.9;
const BETA: f64 = 0.04;
const ALPHA: f64 = 0.2 - 0.75 * BETA;
const FAC_MIN: f64 = 0.2;
const FAC_MAX: f64 = 10.0;

fn axpy(x: &Point, h: f64, coeffs: &[f64], k: &[Point]) -> Point {
    let mut out = *x;
    for (c, ki) in coeffs.iter().zip(k) {
        if *c != 0.0 {
            for j in 0..6 {
                out[j] += h * c * ki[j];
            }
        }
    }
    out
}

fn error_norm(err: &Point, x: &Point, x_new: &Point, cfg: &IntegratorConfig) -> f64 {
    let sum: f64 = (0..6)
        .map(|j| {
            let scale = cfg.abs_tol + cfg.rel_tol * x[j].abs().max(x_new[j].abs());
            (err[j] / scale).powi(2)
        })
        .sum();
    (sum / 6.0).sqrt()
}

fn initial_step(f: &impl Fn(&Point) -> Point, x0: &Point, cfg: &IntegratorConfig) -> f64 {
    let scale = |j: usize| cfg.abs_tol + cfg.rel_tol * x0[j].abs();
    let f0 = f(x0);
    let rms = |v: &Point| ((0..6).map(|j| (v[j] / scale(j)).powi(2)).sum::<f64>() / 6.0).sqrt();
    let (d0, d1) = (rms(x0), rms(&f0));
    let h0 = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    let x1 = axpy(x0, h0, &[1.0], &[f0]);
    let f1 = f(&x1);
    let diff: Point = std::array::from_fn(|j| f1[j] - f0[j]);
    let d2 = rms(&diff) / h0;
    let h1 = if d1.max(d2) <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d1.max(d2)).powf(0.2)
    };
    (100.0 * h0).min(h1).min(cfg.t_end.max(f64::MIN_POSITIVE))
}

/// Integrates `x' = f(x)` from `t = 0` to `cfg.t_end`.
pub fn integrate_fn(f: impl Fn(&Point) -> Point, x0: Point, cfg: &IntegratorConfig) -> Result<Trajectory> {
    cfg.validate()?;
    let mut states = vec![State { t: 0.0, x: x0 }];
    let mut rejected = 0;
    let mut t = 0.0;
    let mut x = x0;
    if cfg.t_end == 0.0 {
        return Ok(Trajectory {
            states,
            status: IntegrationStatus::Completed,
            rejected_steps: 0,
        });
    }
    let mut h = if cfg.initial_step > 0.0 {
        cfg.initial_step
    } else {
        initial_step(&f, &x0, cfg)
    };
    let mut err_old: f64 = 1e-4;
    let mut last_rejected = false;
    let mut k: [Point; 7] = [[0.0; 6]; 7];
    k[0] = f(&x);
    let mut steps = 0;
    let status = loop {
        if t >= cfg.t_end {
            break IntegrationStatus::Completed;
        }
        if steps >= cfg.max_steps {
            break IntegrationStatus::MaxStepsExceeded;
        }
        if h < 1e-14 * t.abs().max(1.0) {
            break IntegrationStatus::StepSizeUnderflow;
        }
        steps += 1;
        let last = t + h >= cfg.t_end;
        if last {
            h = cfg.t_end - t;
        }
        for s in 1..7 {
            let xs = axpy(&x, h, &A[s][..s], &k[..s]);
            k[s] = f(&xs);
        }
        let x_new = axpy(&x, h, &A[6][..6], &k[..6]);
        let err_vec = axpy(&[0.0; 6], h, &E, &k);
        let err = error_norm(&err_vec, &x, &x_new, cfg);
        if !err.is_finite() || x_new.iter().any(|v| !v.is_finite()) {
            if h < 1e-14 * t.abs().max(1.0) {
                break IntegrationStatus::NonFinite;
            }
            h *= FAC_MIN;
            rejected += 1;
            last_rejected = true;
            continue;
        }
        if err <= 1.0 {
            let fac = if err == 0.0 {
                FAC_MAX
            } else {
                (SAFETY * err.powf(-ALPHA) * err_old.powf(BETA)).clamp(FAC_MIN, FAC_MAX)
            };
            let fac = if last_rejected { fac.min(1.0) } else { fac };
            err_old = err.max(1e-4);
            t = if last { cfg.t_end } else { t + h };
            x = x_new;
            // First-same-as-last: the seventh stage is f at the new point.
            k[0] = k[6];
            states.push(State { t, x });
            h *= fac;
            last_rejected = false;
        } else {
            h *= (SAFETY * err.powf(-ALPHA)).clamp(FAC_MIN, 1.0);
            rejected += 1;
            last_rejected = true;
        }
    };
    Ok(Trajectory {
        states,
        status,
        rejected_steps: rejected,
    })
}
