use serde::Serialize;

use super::model::ShapeInvariantModel;
use crate::error::{Error, Result};
use crate::ops::PowerSum;
use crate::sqm::build_partner_potentials;

/// Coefficients below this fraction of the largest input coefficient count as zero.
pub const CONSTANT_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShapeInvarianceCheck {
    pub parameter: f64,
    pub partner_parameter: f64,
    pub holds: bool,
    /// Constant part of `v_plus(a) - v_minus(φ(a))`.
    pub rest_extracted: f64,
    /// Non-constant remainder; empty when `holds`.
    pub residual: PowerSum,
    /// Residual before chopping at [`CONSTANT_REL_TOL`].
    pub raw_residual_max: f64,
    pub rest_declared: f64,
}

/// Checks `W²(a) + pΔ¹W(a) = W²(φ(a)) - pΔ¹W(φ(a)) + R(a)` symbolically.
pub fn check_shape_invariance(model: &dyn ShapeInvariantModel, a: f64) -> ShapeInvarianceCheck {
    let a2 = model.phi(a);
    let upper = build_partner_potentials(&model.superpotential(a)).v_plus;
    let lower = build_partner_potentials(&model.superpotential(a2)).v_minus;
    let diff = &upper - &lower;
    let scale = upper.max_abs_coefficient().max(lower.max_abs_coefficient());
    let raw = diff.non_constant_part();
    let residual = raw.chop(CONSTANT_REL_TOL, scale);
    ShapeInvarianceCheck {
        parameter: a,
        partner_parameter: a2,
        holds: residual.is_zero(),
        rest_extracted: diff.constant_term(),
        raw_residual_max: raw.max_abs_coefficient(),
        residual,
        rest_declared: model.rest(a),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumLevel {
    pub n: usize,
    /// `Σ_{k=1}^{n} R(a_k)`, ground level 0.
    pub e_susy: f64,
    /// `E₀(a₁) + e_susy`.
    pub e_shifted: f64,
    /// `a_{n+1}`, the parameter of the hierarchy member whose ground level this is.
    pub parameter: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgebraicSpectrum {
    pub model: String,
    pub levels: Vec<SpectrumLevel>,
    /// `a₁, φ(a₁), ...`, one entry per level.
    pub trail: Vec<f64>,
}

impl AlgebraicSpectrum {
    pub fn e_susy(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.e_susy).collect()
    }
}

/// Spectrum by accumulating extracted rests along `a₁, φ(a₁), φ²(a₁), ...`.
pub fn algebraic_spectrum(
    model: &dyn ShapeInvariantModel,
    a1: f64,
    n_levels: usize,
) -> Result<AlgebraicSpectrum> {
    let e0 = model.e0(a1);
    let mut levels = Vec::with_capacity(n_levels);
    let mut trail = Vec::with_capacity(n_levels);
    let mut a = a1;
    let mut acc = 0.0;
    for n in 0..n_levels {
        if n > 0 {
            let check = check_shape_invariance(model, a);
            if !check.holds {
                return Err(Error::NotShapeInvariant {
                    parameter: a,
                    residual: check.residual.to_string(),
                });
            }
            acc += check.rest_extracted;
            a = check.partner_parameter;
        }
        trail.push(a);
        levels.push(SpectrumLevel {
            n,
            e_susy: acc,
            e_shifted: e0 + acc,
            parameter: a,
        });
    }
    Ok(AlgebraicSpectrum {
        model: model.name().to_string(),
        levels,
        trail,
    })
}
