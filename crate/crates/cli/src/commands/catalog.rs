use std::fmt::Write;

use bianchi_core::vectorfields::BianchiField;
use bianchi_core::{BianchiModel, KMode, ModelType};
use serde::Serialize;

use crate::args::{CatalogArgs, Common, Format};
use crate::output::{emit, format_or_json, to_json, CmdResult};
use crate::Outcome;

#[derive(Serialize)]
struct SystemEntry {
    model: ModelType,
    structure_constants: [i64; 3],
    quadratic_form: String,
    components: Vec<String>,
}

#[derive(Serialize)]
struct Catalog {
    k: String,
    systems: Vec<SystemEntry>,
}

fn entry(model: ModelType, k: &KMode) -> SystemEntry {
    let bm = BianchiModel::new(model, k.clone());
    let components = match bm.field() {
        BianchiField::Fixed(x) => x.components().iter().map(ToString::to_string).collect(),
        BianchiField::Symbolic(x) => x.components().iter().map(ToString::to_string).collect(),
    };
    SystemEntry {
        model,
        structure_constants: model.structure_constants(),
        quadratic_form: bm.quadratic_form().to_string(),
        components,
    }
}

pub fn run(common: &Common, args: &CatalogArgs) -> CmdResult<Outcome> {
    let catalog = Catalog {
        k: args.k.to_string(),
        systems: ModelType::ALL.iter().map(|&m| entry(m, &args.k)).collect(),
    };
    let text = match format_or_json(common, &[Format::Text])? {
        Format::Text => {
            let mut s = format!("k = {}\n", catalog.k);
            for sys in &catalog.systems {
                let [n1, n2, n3] = sys.structure_constants;
                writeln!(s, "\n{} (n1, n2, n3) = ({n1}, {n2}, {n3})", sys.model)?;
                writeln!(s, "  F = {}", sys.quadratic_form)?;
                for (i, c) in sys.components.iter().enumerate() {
                    writeln!(s, "  x{}' = {c}", i + 1)?;
                }
            }
            s
        }
        _ => to_json(common, &catalog)?,
    };
    emit(common, &text)?;
    Ok(Outcome::Pass)
}
