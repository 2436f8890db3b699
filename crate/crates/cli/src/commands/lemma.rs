use std::fmt::Write;

use bianchi_core::engine::{lemma_registry, LemmaParams};

use super::{outcome, solver};
use crate::args::{Common, Format, LemmaArgs, LemmaCommand};
use crate::output::{emit, format_or_json, to_json, CmdResult};
use crate::Outcome;

pub fn run(common: &Common, args: &LemmaArgs) -> CmdResult<Outcome> {
    let (name, params) = match &args.which {
        LemmaCommand::Estrella { a, k, degree } => {
            let a: [_; 3] = a
                .clone()
                .try_into()
                .map_err(|v: Vec<_>| format!("--a needs 3 values, got {}", v.len()))?;
            (
                "estrella",
                LemmaParams {
                    a: Some(a),
                    k: Some(k.clone()),
                    degree: Some(*degree),
                    n: None,
                },
            )
        }
        LemmaCommand::Dificil { k, n } => (
            "dificil",
            LemmaParams {
                k: Some(k.clone()),
                n: Some(*n),
                ..Default::default()
            },
        ),
        LemmaCommand::Sn { n } => (
            "sn",
            LemmaParams {
                n: Some(*n),
                ..Default::default()
            },
        ),
    };
    if let Some(k) = &params.k {
        bianchi_core::KMode::fixed(k.clone())?;
    }
    let result = lemma_registry().get(name)?.analyze(&params, solver(common)?.as_ref())?;
    let text = match format_or_json(common, &[Format::Text])? {
        Format::Text => {
            let mut s = format!("lemma {}", result.lemma);
            for (key, v) in &result.parameters {
                write!(s, " {key}={v}")?;
            }
            s.push('\n');
            if let (Some(d), Some(e)) = (result.dim, result.expected_dim) {
                writeln!(s, "  dim {d} (expected {e})")?;
            }
            for (key, v) in &result.findings {
                writeln!(s, "  {key}: {v}")?;
            }
            writeln!(s, "{}", if result.pass { "pass" } else { "fail" })?;
            s
        }
        _ => to_json(common, &result)?,
    };
    emit(common, &text)?;
    Ok(outcome(result.pass))
}
