use serde::Serialize;

use super::assemble::{AssemblyInfo, TruncatedOperator};
use super::eigen::EigenReport;
use crate::error::{Error, Result};
use crate::ops::SampledFunction;
use crate::shape::AlgebraicSpectrum;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LevelComparison {
    pub n: usize,
    pub numeric: f64,
    pub algebraic: f64,
    pub abs_dev: f64,
    /// `None` when the algebraic level is zero.
    pub rel_dev: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub model: String,
    pub requested_levels: usize,
    pub rows: Vec<LevelComparison>,
    pub matrix_dim: usize,
    pub sweeps: usize,
    pub off_diagonal: f64,
    pub assembly: Option<AssemblyInfo>,
}

impl SpectrumReport {
    pub fn with_assembly(mut self, info: AssemblyInfo) -> Self {
        self.assembly = Some(info);
        self
    }

    pub fn max_abs_dev(&self) -> f64 {
        self.rows.iter().map(|r| r.abs_dev).fold(0.0, f64::max)
    }
}

/// Pairs the lowest oracle eigenvalues with `e_susy` by rank.
///
/// Levels beyond what either side provides are dropped; `requested_levels`
/// records the original request.
pub fn compare_spectra(
    report: &EigenReport,
    algebraic: &AlgebraicSpectrum,
    n_levels: usize,
) -> SpectrumReport {
    let rows = report
        .eigenvalues
        .iter()
        .zip(&algebraic.levels)
        .take(n_levels)
        .map(|(&numeric, level)| {
            let abs_dev = (numeric - level.e_susy).abs();
            LevelComparison {
                n: level.n,
                numeric,
                algebraic: level.e_susy,
                abs_dev,
                rel_dev: (level.e_susy != 0.0).then(|| abs_dev / level.e_susy.abs()),
            }
        })
        .collect();
    SpectrumReport {
        model: algebraic.model.clone(),
        requested_levels: n_levels,
        rows,
        matrix_dim: report.dim(),
        sweeps: report.sweeps,
        off_diagonal: report.off_diagonal,
        assembly: None,
    }
}

/// `|Hψ - Eψ|₂ / |ψ|₂` over the operator's window.
pub fn residual_check(op: &TruncatedOperator, psi: &SampledFunction, energy: f64) -> Result<f64> {
    residual_check_interior(op, psi, energy, 0)
}

/// As [`residual_check`], but both norms only run over sites at least
/// `margin` sites away from either window edge.
pub fn residual_check_interior(
    op: &TruncatedOperator,
    psi: &SampledFunction,
    energy: f64,
    margin: usize,
) -> Result<f64> {
    let window = op.window();
    let values: Vec<_> = window.sites().map(|n| psi.value(n)).collect();
    let dim = values.len();
    let interior = margin..dim.saturating_sub(margin);
    if interior.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "margin {margin} leaves no interior in a window of {dim} sites"
        )));
    }
    let mut num = 0.0;
    let mut den = 0.0;
    for i in interior {
        let row = op.matrix.row(i);
        let h_psi = row
            .iter()
            .zip(&values)
            .fold(num_complex::Complex64::new(0.0, 0.0), |acc, (h, v)| acc + v * h);
        num += (h_psi - values[i] * energy).norm_sqr();
        den += values[i].norm_sqr();
    }
    if den == 0.0 {
        return Err(Error::InvalidArgument("psi has zero norm".into()));
    }
    Ok((num / den).sqrt())
}
