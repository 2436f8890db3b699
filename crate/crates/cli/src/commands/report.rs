use std::fmt::Write;

use bianchi_core::dynamics::{default_invariants, ScalarField};
use bianchi_core::engine::{independence_rank, integrability_report, IntegrabilityReport, RankReport};
use bianchi_core::{BianchiModel, KMode, ModelType};
use rayon::prelude::*;
use serde::Serialize;

use super::{outcome, solver};
use crate::args::{Common, Format, ReportArgs};
use crate::output::{emit, format_or_json, to_json, CmdResult};
use crate::Outcome;

/// What the classification asserts for each model, for every degree.
pub fn claim(model: ModelType) -> &'static str {
    match model {
        ModelType::I => "completely integrable: x4 - x5, x4 - x6, H and two transcendental integrals, functionally independent",
        ModelType::II => "polynomial first integral x5 - x6; no further polynomial first integral independent of it and H",
        _ => "no polynomial first integrals",
    }
}

#[derive(Serialize)]
pub struct IndependenceCell {
    pub k: String,
    pub expected_rank: usize,
    pub result: RankReport,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct ModelSection {
    pub model: ModelType,
    pub claim: &'static str,
    pub claim_scope: &'static str,
    pub evidence_scope: String,
    pub cells: Vec<IntegrabilityReport>,
    pub independence: Vec<IndependenceCell>,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct TheoremReport {
    pub m_max: u32,
    pub k_samples: Vec<String>,
    pub symbolic: bool,
    pub sections: Vec<ModelSection>,
    pub pass: bool,
}

fn independence_cell(model: ModelType, k: &KMode) -> CmdResult<Option<IndependenceCell>> {
    let KMode::Fixed(kr) = k else { return Ok(None) };
    if !matches!(model, ModelType::I | ModelType::II) {
        return Ok(None);
    }
    let fs = default_invariants(model, kr.to_f64());
    let refs: Vec<&dyn ScalarField> = fs.iter().map(|f| f.as_ref()).collect();
    let result = independence_rank(&refs)?;
    let expected_rank = refs.len();
    Ok(Some(IndependenceCell {
        k: k.to_string(),
        expected_rank,
        pass: result.rank == expected_rank,
        result,
    }))
}

pub fn build(args: &ReportArgs, common: &Common) -> CmdResult<TheoremReport> {
    let solver = solver(common)?;
    let mut modes = args.k_samples.clone();
    if !args.no_symbolic {
        modes.push(KMode::Symbolic);
    }
    let jobs: Vec<(ModelType, KMode)> = ModelType::ALL
        .iter()
        .flat_map(|&m| modes.iter().map(move |k| (m, k.clone())))
        .collect();
    let cells: Vec<IntegrabilityReport> = jobs
        .par_iter()
        .map(|(m, k)| integrability_report(&BianchiModel::new(*m, k.clone()), args.max_degree, solver.as_ref()))
        .collect();
    let mut sections = Vec::new();
    for model in ModelType::ALL {
        let cells: Vec<IntegrabilityReport> = cells.iter().filter(|c| c.model == model).cloned().collect();
        let mut independence = Vec::new();
        for k in &args.k_samples {
            independence.extend(independence_cell(model, k)?);
        }
        let pass = cells.iter().all(|c| c.pass) && independence.iter().all(|c| c.pass);
        sections.push(ModelSection {
            model,
            claim: claim(model),
            claim_scope: "proved for all degrees",
            evidence_scope: format!("machine-verified up to degree {}", args.max_degree),
            cells,
            independence,
            pass,
        });
    }
    let pass = sections.iter().all(|s| s.pass);
    Ok(TheoremReport {
        m_max: args.max_degree,
        k_samples: args.k_samples.iter().map(ToString::to_string).collect(),
        symbolic: !args.no_symbolic,
        sections,
        pass,
    })
}

fn render_text(r: &TheoremReport) -> CmdResult<String> {
    let mut s = String::new();
    for sec in &r.sections {
        writeln!(s, "{}: {}", sec.model, sec.claim)?;
        writeln!(s, "  {}; {}", sec.claim_scope, sec.evidence_scope)?;
        for c in &sec.cells {
            let dims: Vec<String> = c.degrees.iter().map(|d| d.dim.to_string()).collect();
            writeln!(s, "  k = {:<9} dims [{}] {}", c.k, dims.join(", "), if c.pass { "ok" } else { "MISMATCH" })?;
        }
        for i in &sec.independence {
            writeln!(
                s,
                "  k = {:<9} independence rank {} of {} {}",
                i.k,
                i.result.rank,
                i.expected_rank,
                if i.pass { "ok" } else { "MISMATCH" }
            )?;
        }
    }
    writeln!(s, "{}", if r.pass { "pass" } else { "fail" })?;
    Ok(s)
}

pub fn run(common: &Common, args: &ReportArgs) -> CmdResult<Outcome> {
    let report = build(args, common)?;
    let text = match format_or_json(common, &[Format::Text])? {
        Format::Text => render_text(&report)?,
        _ => to_json(common, &report)?,
    };
    emit(common, &text)?;
    Ok(outcome(report.pass))
}
