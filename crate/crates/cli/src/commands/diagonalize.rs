use lattice_susy::oracle::{
    assemble_hamiltonian, compare_spectra, diagonalize, EigenReport, TruncatedOperator, DEFAULT_TOL,
};
use lattice_susy::ops::Window;
use lattice_susy::shape::{algebraic_spectrum, ShapeInvariantModel};
use lattice_susy::sqm::build_partner_potentials;
use serde_json::json;

use super::Outcome;
use crate::config::{usage, RunConfig};
use crate::output::{Report, Table};

pub const DEFAULT_WINDOW: usize = 200;
/// Default pass threshold on |numeric - e_susy|.
pub const DEFAULT_TOL_DEVIATION: f64 = 2e-2;

fn solve(
    model: &dyn ShapeInvariantModel,
    cfg: &RunConfig,
    n: usize,
    cutoff: usize,
) -> anyhow::Result<(TruncatedOperator, EigenReport)> {
    let window = Window::half_line(n).map_err(|e| usage(e.to_string()))?;
    let v = build_partner_potentials(&model.superpotential(cfg.l)).v_minus;
    let op = assemble_hamiltonian((&v).into(), window, cutoff, &cfg.units)?;
    let eig = diagonalize(&op, DEFAULT_TOL)?;
    Ok((op, eig))
}

pub fn run(cfg: &RunConfig) -> anyhow::Result<Outcome> {
    let model = cfg.model()?;
    let n = cfg.window_or(DEFAULT_WINDOW);
    let cutoff = cfg.kernel_cutoff_for(n);
    let tol = cfg.tol_or(DEFAULT_TOL_DEVIATION);

    let (op, eig) = solve(model.as_ref(), cfg, n, cutoff)?;
    let algebraic = algebraic_spectrum(model.as_ref(), cfg.l, cfg.levels)?;
    let report = compare_spectra(&eig, &algebraic, cfg.levels).with_assembly(op.info);

    // Same run on half the window, for a truncation-drift estimate.
    let half = n / 2;
    let coarse = if half >= report.rows.len().max(1) {
        Some(solve(model.as_ref(), cfg, half, cutoff.min(half))?.1)
    } else {
        None
    };

    let mut table = Table::new(
        "levels",
        &["n", "numeric", "e_susy", "abs_dev", "rel_dev", "drift_half_window"],
    );
    for (k, row) in report.rows.iter().enumerate() {
        let drift = coarse.as_ref().map(|c| (row.numeric - c.eigenvalues[k]).abs());
        table.push(vec![
            row.n.into(),
            row.numeric.into(),
            row.algebraic.into(),
            row.abs_dev.into(),
            row.rel_dev.into(),
            drift.into(),
        ]);
    }
    let pass = report.rows.iter().all(|r| r.abs_dev <= tol);
    let meta = json!({
        "command": "diagonalize",
        "model": report.model,
        "l": cfg.l,
        "potential": "v_minus = W^2 - p D1 W",
        "window": op.info.window,
        "kernel_cutoff": cutoff,
        "boundary": op.info.boundary,
        "units": cfg.units,
        "requested_levels": report.requested_levels,
        "compared_levels": report.rows.len(),
        "matrix_dim": report.matrix_dim,
        "sweeps": report.sweeps,
        "off_diagonal": report.off_diagonal,
        "orthogonality_defect": eig.orthogonality_defect(eig.dim()),
        "reconstruction_residual": eig.reconstruction_residual(&op.matrix),
        "drift_window": coarse.as_ref().map(|_| half),
        "tolerance": tol,
        "pass": pass,
    });

    if let Some(path) = &cfg.emit {
        let columns: Vec<String> = std::iter::once("n".to_string())
            .chain((0..eig.dim()).map(|k| format!("v{k}")))
            .collect();
        let mut vectors = Table::new("eigenvectors", &columns);
        for (i, site) in op.window().sites().enumerate() {
            let mut row = vec![site.into()];
            row.extend(eig.eigenvectors.row(i).iter().map(|&x| x.into()));
            vectors.push(row);
        }
        let emit_meta = json!({
            "command": "diagonalize",
            "model": report.model,
            "l": cfg.l,
            "window": op.info.window,
            "kernel_cutoff": cutoff,
            "eigenvalues": eig.eigenvalues,
        });
        Report::new(emit_meta).table(vectors).write_to(path, cfg.format)?;
    }

    Ok(Outcome {
        report: Report::new(meta).table(table),
        pass,
    })
}
