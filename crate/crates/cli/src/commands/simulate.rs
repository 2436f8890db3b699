use std::fs::File;
use std::io::{self, BufWriter};

use bianchi_core::dynamics::{default_x0, invariants_for, drift_report, write_csv, IntegratorConfig, Point};
use bianchi_core::KMode;

use crate::args::{Common, Format, SimulateArgs};
use crate::output::{emit, format_or_json, to_json, write_to, CmdResult};
use crate::Outcome;

pub fn run(common: &Common, args: &SimulateArgs) -> CmdResult<Outcome> {
    let KMode::Fixed(k) = &args.k else {
        return Err("simulate needs a numeric --k".into());
    };
    let x0: Point = match &args.x0 {
        None => default_x0(args.model),
        Some(v) => v
            .as_slice()
            .try_into()
            .map_err(|_| format!("--x0 needs 6 values, got {}", v.len()))?,
    };
    let cfg = IntegratorConfig {
        max_steps: args.max_steps,
        ..IntegratorConfig::with_tol(args.t_end, args.tol)
    };
    let k = k.to_f64();
    let invariants = invariants_for(args.model, k, &x0);
    let (traj, report) = drift_report(args.model, k, x0, &cfg, &invariants)?;
    let json = to_json(common, &report)?;
    match (format_or_json(common, &[Format::Csv])?, &common.out) {
        (Format::Csv, None) => write_csv(&traj, io::stdout().lock())?,
        (_, Some(path)) => {
            write_csv(&traj, BufWriter::new(File::create(path)?))?;
            write_to(Some(&path.with_extension("drift.json")), &json)?;
            write_to(None, &json)?;
        }
        (_, None) => emit(common, &json)?,
    }
    Ok(Outcome::Pass)
}

