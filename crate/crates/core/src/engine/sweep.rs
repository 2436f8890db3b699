use rayon::prelude::*;
use serde::Serialize;

use super::ansatz::enumerate_monomials;
use super::nullspace::{NullspaceBasis, NullspaceSolver};
use super::system::assemble_system;
use crate::coefficients::{Coeff, Rational};
use crate::multipoly::MultiPoly;
use crate::vectorfields::{BianchiField, BianchiModel, ModelType, VectorField, DIM};

fn linear(text: &str) -> MultiPoly<Rational> {
    MultiPoly::parse(DIM, text).expect("valid literal")
}

/// What the classification theorem predicts at one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expectation {
    /// At least `min_dim` integrals, and every listed polynomial is one.
    AtLeast { min_dim: usize, members: Vec<MultiPoly<Rational>> },
    /// Exactly the span of the listed polynomials.
    Exactly { span: Vec<MultiPoly<Rational>> },
}

impl Expectation {
    pub fn for_model(model: ModelType, m: u32) -> Self {
        match model {
            ModelType::I => {
                let (u, v) = (linear("x4 - x5"), linear("x4 - x6"));
                let members = (0..=m).map(|i| &u.pow(i) * &v.pow(m - i)).collect();
                Expectation::AtLeast {
                    min_dim: m as usize + 1,
                    members,
                }
            }
            ModelType::II => Expectation::Exactly {
                span: vec![linear("x5 - x6").pow(m)],
            },
            _ => Expectation::Exactly { span: Vec::new() },
        }
    }

    pub fn describe_dim(&self) -> String {
        match self {
            Expectation::AtLeast { min_dim, .. } => format!(">= {min_dim}"),
            Expectation::Exactly { span } => format!("= {}", span.len()),
        }
    }

    fn listed(&self) -> &[MultiPoly<Rational>] {
        match self {
            Expectation::AtLeast { members, .. } => members,
            Expectation::Exactly { span } => span,
        }
    }

    pub fn is_met_by(&self, kernel: &NullspaceBasis, m: u32) -> bool {
        let basis = enumerate_monomials(DIM, m);
        let listed: Option<Vec<Vec<Rational>>> = self.listed().iter().map(|p| basis.coordinates(p)).collect();
        let Some(listed) = listed else {
            return false;
        };
        let all_members = listed.iter().all(|v| kernel.contains(v));
        match self {
            Expectation::AtLeast { min_dim, .. } => all_members && kernel.dim() >= *min_dim,
            Expectation::Exactly { .. } => {
                all_members && kernel.same_span(&NullspaceBasis::from_spanning_set(basis.len(), listed))
            }
        }
    }
}

/// Kernel of the degree-`m` annihilation system, with its post-hoc check.
#[derive(Debug, Clone)]
pub struct DegreeResult {
    pub m: u32,
    pub kernel: NullspaceBasis,
    pub basis: Vec<MultiPoly<Rational>>,
    /// Every basis polynomial re-checked with an independent Lie derivative.
    pub verified: bool,
}

impl DegreeResult {
    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }
}

pub fn solve_degree<C: Coeff>(field: &VectorField<C>, m: u32, solver: &dyn NullspaceSolver) -> DegreeResult {
    let ansatz = enumerate_monomials(field.nvars(), m);
    let system = assemble_system(field, &ansatz);
    let kernel = solver.nullspace(&system);
    let basis: Vec<MultiPoly<Rational>> = kernel
        .vectors
        .iter()
        .map(|v| ansatz.polynomial::<Rational>(v))
        .collect();
    let verified = basis
        .iter()
        .all(|p| field.lie_derivative(&p.lift::<C>()).is_zero());
    DegreeResult {
        m,
        kernel,
        basis,
        verified,
    }
}

/// Kernels for degrees `1..=m_max`, in increasing degree.
pub fn degree_sweep<C: Coeff>(field: &VectorField<C>, m_max: u32, solver: &dyn NullspaceSolver) -> Vec<DegreeResult> {
    (1..=m_max)
        .into_par_iter()
        .map(|m| solve_degree(field, m, solver))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeRecord {
    pub m: u32,
    pub dim: usize,
    pub basis: Vec<String>,
    pub verified: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpectedRecord {
    pub m: u32,
    pub dim: String,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EngineInfo {
    pub pivot_rule: &'static str,
    pub solver: &'static str,
    pub m_max: u32,
    pub scope: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntegrabilityReport {
    pub model: ModelType,
    pub k: String,
    pub mode: &'static str,
    pub degrees: Vec<DegreeRecord>,
    pub expected: Vec<ExpectedRecord>,
    pub pass: bool,
    pub engine: EngineInfo,
}

pub const PIVOT_RULE: &str = "first nonzero in row order";

/// Sweeps one model at one k mode and compares with the expectation table.
pub fn integrability_report(model: &BianchiModel, m_max: u32, solver: &dyn NullspaceSolver) -> IntegrabilityReport {
    let results = match model.field() {
        BianchiField::Fixed(x) => degree_sweep(&x, m_max, solver),
        BianchiField::Symbolic(x) => degree_sweep(&x, m_max, solver),
    };
    let mut degrees = Vec::new();
    let mut expected = Vec::new();
    for r in &results {
        let exp = Expectation::for_model(model.model, r.m);
        degrees.push(DegreeRecord {
            m: r.m,
            dim: r.dim(),
            basis: r.basis.iter().map(ToString::to_string).collect(),
            verified: r.verified,
            pass: r.verified && exp.is_met_by(&r.kernel, r.m),
        });
        expected.push(ExpectedRecord {
            m: r.m,
            dim: exp.describe_dim(),
            basis: exp.listed().iter().map(ToString::to_string).collect(),
        });
    }
    let pass = degrees.iter().all(|d| d.pass);
    IntegrabilityReport {
        model: model.model,
        k: model.k.to_string(),
        mode: if matches!(model.k, crate::vectorfields::KMode::Symbolic) {
            "symbolic"
        } else {
            "fixed"
        },
        degrees,
        expected,
        pass,
        engine: EngineInfo {
            pivot_rule: PIVOT_RULE,
            solver: solver.name(),
            m_max,
            scope: format!("verified up to degree {m_max}"),
        },
    }
}
