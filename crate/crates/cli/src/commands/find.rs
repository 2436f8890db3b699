use std::fmt::Write;

use bianchi_core::engine::{integrability_report, IntegrabilityReport};
use bianchi_core::BianchiModel;

use super::{outcome, solver};
use crate::args::{Common, FindArgs, Format};
use crate::output::{emit, format_or_json, to_json, CmdResult};
use crate::Outcome;

pub fn render_text(report: &IntegrabilityReport) -> CmdResult<String> {
    let mut s = format!(
        "model {} k = {} ({}), {}\n",
        report.model, report.k, report.mode, report.engine.scope
    );
    for (d, e) in report.degrees.iter().zip(&report.expected) {
        writeln!(
            s,
            "  m = {}: dim {} (expected {}) {}",
            d.m,
            d.dim,
            e.dim,
            if d.pass { "ok" } else { "MISMATCH" }
        )?;
        for p in &d.basis {
            writeln!(s, "    {p}")?;
        }
    }
    writeln!(s, "{}", if report.pass { "pass" } else { "fail" })?;
    Ok(s)
}

pub fn run(common: &Common, args: &FindArgs) -> CmdResult<Outcome> {
    let solver = solver(common)?;
    let model = BianchiModel::new(args.model, args.k.clone());
    let report = integrability_report(&model, args.max_degree, solver.as_ref());
    let text = match format_or_json(common, &[Format::Text])? {
        Format::Text => render_text(&report)?,
        _ => to_json(common, &report)?,
    };
    emit(common, &text)?;
    Ok(outcome(report.pass))
}
