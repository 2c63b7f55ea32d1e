use lattice_susy::ops::Window;
use lattice_susy::sqm::solve_ground_state_series;
use lattice_susy::SampledFunction;
use serde_json::json;

use super::Outcome;
use crate::config::{usage, RunConfig};
use crate::output::{Report, Table};

const DEFAULT_WINDOW: usize = 40;

pub fn run(cfg: &RunConfig) -> anyhow::Result<Outcome> {
    let model = cfg.model()?;
    let sp = model.superpotential(cfg.l);
    let series = solve_ground_state_series(&sp, cfg.terms)?;

    let mut coefficients = Table::new("coefficients", &["j", "c_j"]);
    for (j, &c) in series.coefficients.iter().enumerate() {
        coefficients.push(vec![j.into(), c.into()]);
    }

    let n = cfg.window_or(DEFAULT_WINDOW);
    let window = Window::half_line(n).map_err(|e| usage(e.to_string()))?;
    let raw = match series.closed_form {
        Some(cf) => SampledFunction::from_real_fn(window, move |m| cf.eval(1.0, m as f64)),
        None => {
            let s = series.clone();
            SampledFunction::from_real_fn(window, move |m| s.eval(m as f64))
        }
    };
    let psi = raw.resample(window).normalized()?;
    let mut samples = Table::new("psi", &["n", "psi"]);
    for (m, v) in window.sites().zip(psi.values()) {
        samples.push(vec![m.into(), v.re.into()]);
    }

    let closed_form = series.closed_form.map(|cf| {
        json!({
            "power": cf.power,
            "decay": cf.decay,
            "expression": format!("N n^{} exp(-{} n)", cf.power, cf.decay),
        })
    });
    let meta = json!({
        "command": "ground-state",
        "model": cfg.model,
        "l": cfg.l,
        "units": cfg.units,
        "superpotential": sp.w.to_string(),
        "prefactor": sp.prefactor,
        "terms": cfg.terms,
        "normalization": series.normalization,
        "closed_form": closed_form,
        "zero_mode_residual": series.zero_mode_residual().max_abs_coefficient(),
        "window": window,
        "psi_norm": psi.norm(),
        "psi_source": if series.closed_form.is_some() { "closed form" } else { "series" },
    });

    let report = match &cfg.emit {
        Some(path) => {
            let emit_meta = json!({
                "command": "ground-state",
                "model": cfg.model,
                "l": cfg.l,
                "window": window,
                "normalization": "unit discrete norm",
            });
            Report::new(emit_meta)
                .table(samples)
                .write_to(path, cfg.format)?;
            Report::new(meta).table(coefficients)
        }
        None => Report::new(meta).table(coefficients).table(samples),
    };
    Ok(Outcome { report, pass: true })
}
