pub mod catalog;
pub mod find;
pub mod lemma;
pub mod report;
pub mod simulate;
pub mod verify;

use std::sync::Arc;

use bianchi_core::engine::{solver_registry, NullspaceSolver};

use crate::args::Common;
use crate::output::CmdResult;
use crate::Outcome;

pub fn solver(common: &Common) -> CmdResult<Arc<dyn NullspaceSolver>> {
    Ok(solver_registry().get(&common.solver)?)
}

pub fn outcome(pass: bool) -> Outcome {
    if pass {
        Outcome::Pass
    } else {
        Outcome::Mismatch
    }
}
