use lattice_susy::shape::{algebraic_spectrum, check_shape_invariance};
use lattice_susy::Error;
use serde_json::json;

use super::Outcome;
use crate::config::RunConfig;
use crate::output::{Report, Table};

pub fn run(cfg: &RunConfig) -> anyhow::Result<Outcome> {
    let model = cfg.model()?;
    // Check the starting parameter even when no rest is needed.
    let check = check_shape_invariance(model.as_ref(), cfg.l);
    if !check.holds {
        return Err(Error::NotShapeInvariant {
            parameter: cfg.l,
            residual: check.residual.to_string(),
        }
        .into());
    }
    let spectrum = algebraic_spectrum(model.as_ref(), cfg.l, cfg.levels)?;
    let mut table = Table::new("levels", &["n", "e_susy", "e_shifted", "parameter"]);
    for level in &spectrum.levels {
        table.push(vec![
            level.n.into(),
            level.e_susy.into(),
            level.e_shifted.into(),
            level.parameter.into(),
        ]);
    }
    let meta = json!({
        "command": "spectrum",
        "model": spectrum.model,
        "l": cfg.l,
        "levels": cfg.levels,
        "units": cfg.units,
        "e0": model.e0(cfg.l),
        "trail": spectrum.trail,
        "columns": {
            "e_susy": "sum of extracted rests; ground level of A^+A is 0",
            "e_shifted": "e0 + e_susy",
        },
    });
    Ok(Outcome {
        report: Report::new(meta).table(table),
        pass: true,
    })
}
