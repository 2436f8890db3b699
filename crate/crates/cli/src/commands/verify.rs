use std::fmt::Write;

use bianchi_core::vectorfields::{verify_weighted_power_integral, BianchiField, WeightedPowerIntegral};
use bianchi_core::{BianchiModel, Coeff, KPoly, ModelType, MultiPoly, Rational, VectorField};
use serde::Serialize;

use super::outcome;
use crate::args::{Common, Format, VerifyArgs};
use crate::output::{emit, format_or_json, to_json, CmdResult};
use crate::Outcome;

#[derive(Serialize)]
pub struct Check {
    pub integral: String,
    pub kind: &'static str,
    pub holds: bool,
    pub witness: String,
}

#[derive(Serialize)]
pub struct Verification {
    pub model: ModelType,
    pub k: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

pub fn polynomial_integrals(model: ModelType) -> Vec<MultiPoly<Rational>> {
    let texts: &[&str] = match model {
        ModelType::I => &["x4 - x5", "x4 - x6"],
        ModelType::II => &["x5 - x6"],
        _ => &[],
    };
    texts.iter().map(|t| MultiPoly::parse(6, t).expect("valid literal")).collect()
}

fn checks<C: Coeff>(model: ModelType, field: &VectorField<C>, k: C) -> CmdResult<Vec<Check>> {
    let mut out = Vec::new();
    for p in polynomial_integrals(model) {
        let w = field.lie_derivative(&p.lift::<C>());
        out.push(Check {
            integral: p.to_string(),
            kind: "polynomial",
            holds: w.is_zero(),
            witness: w.to_string(),
        });
    }
    let h = WeightedPowerIntegral::hamiltonian(model, k);
    let v = verify_weighted_power_integral(field, &h)?;
    out.push(Check {
        integral: format!("(x1*x2*x3)^({}) * ({})", h.weights[0], h.factor),
        kind: "weighted power",
        holds: v.holds,
        witness: v.witness.to_string(),
    });
    Ok(out)
}

pub fn verify_model(model: &BianchiModel) -> CmdResult<Verification> {
    let checks = match model.field() {
        BianchiField::Fixed(x) => {
            let bianchi_core::KMode::Fixed(k) = &model.k else { unreachable!() };
            checks(model.model, &x, k.clone())?
        }
        BianchiField::Symbolic(x) => checks(model.model, &x, KPoly::k())?,
    };
    let pass = checks.iter().all(|c| c.holds);
    Ok(Verification {
        model: model.model,
        k: model.k.to_string(),
        checks,
        pass,
    })
}

pub fn run(common: &Common, args: &VerifyArgs) -> CmdResult<Outcome> {
    let v = verify_model(&BianchiModel::new(args.model, args.k.clone()))?;
    let text = match format_or_json(common, &[Format::Text])? {
        Format::Text => {
            let mut s = format!("model {} k = {}\n", v.model, v.k);
            for c in &v.checks {
                writeln!(s, "  {} [{}]: {}", c.integral, c.kind, if c.holds { "holds" } else { "FAILS" })?;
                if !c.holds {
                    writeln!(s, "    witness: {}", c.witness)?;
                }
            }
            s
        }
        _ => to_json(common, &v)?,
    };
    emit(common, &text)?;
    Ok(outcome(v.pass))
}
