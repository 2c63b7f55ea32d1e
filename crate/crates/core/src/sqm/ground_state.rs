use serde::Serialize;

use super::superpotential::Superpotential;
use crate::error::{Error, Result};
use crate::ops::PowerSum;

/// Relative tolerance for recognizing the exponential pattern in the coefficients.
const PATTERN_REL_TOL: f64 = 1e-12;

/// `ψ[n] = N nˢ e^{-decay·n}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedForm {
    pub power: u32,
    pub decay: f64,
}

impl ClosedForm {
    pub fn eval(&self, normalization: f64, n: f64) -> f64 {
        normalization * n.powi(self.power as i32) * (-self.decay * n).exp()
    }
}

/// Truncated power series `ψ = Σ_j c_j nʲ` for the zero mode of `A`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroundStateSeries {
    /// `c_0, c_1, ...`
    pub coefficients: Vec<f64>,
    pub closed_form: Option<ClosedForm>,
    /// The free coefficient `N`, i.e. the leading nonzero `c_s`.
    pub normalization: f64,
    /// Recurrence inputs, kept for the residual check.
    pub superpotential: Superpotential,
}

impl GroundStateSeries {
    pub fn eval(&self, n: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, c| acc * n + c)
    }

    pub fn to_power_sum(&self) -> PowerSum {
        PowerSum::from_pairs(
            self.coefficients
                .iter()
                .enumerate()
                .map(|(j, &c)| (c, j as f64)),
        )
    }

    /// `Wψ + pΔ¹ψ` restricted to the powers the truncation leaves intact;
    /// the top power `n^J` only lacks its partner from `c_{J+1}`.
    pub fn zero_mode_residual(&self) -> PowerSum {
        let psi = self.to_power_sum();
        let sp = &self.superpotential;
        let image = &(&sp.w * &psi) + &psi.difference().scale(sp.prefactor);
        image.below_power((self.coefficients.len() - 1) as f64)
    }
}

/// Solves `Wψ = -pΔ¹ψ` for `W = w₀ + w₋₁/n` with a power-series ansatz.
///
/// Matching powers gives `w₋₁ c₀ = 0` from `n⁻¹` and
/// `(p(j+1) + w₋₁) c_{j+1} = -w₀ c_j` from `nʲ`. With `c₀ = 0` every
/// coefficient vanishes until the recurrence hits its pole at
/// `s = -w₋₁/p`, where `c_s = N` is free.
pub fn solve_ground_state_series(sp: &Superpotential, max_terms: usize) -> Result<GroundStateSeries> {
    if max_terms < 2 {
        return Err(Error::InvalidArgument(format!(
            "max_terms must be at least 2, got {max_terms}"
        )));
    }
    let (w0, wm1) = sp.two_term().ok_or_else(|| {
        Error::UnsupportedForm(format!("superpotential {} is not of the form w0 + w1/n", sp.w))
    })?;
    let p = sp.prefactor;
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::InvalidArgument(format!("prefactor must be positive, got {p}")));
    }
    if !(wm1 < 0.0) {
        return Err(Error::NoSeriesSolution(format!(
            "the 1/n coefficient {wm1} is not negative, so no bound zero mode exists"
        )));
    }
    let s_real = -wm1 / p;
    let s = s_real.round();
    if (s_real - s).abs() > 1e-12 * s_real.max(1.0) {
        return Err(Error::NoSeriesSolution(format!(
            "the recurrence pole sits at non-integer power {s_real}; every coefficient vanishes"
        )));
    }
    let s = s as usize;
    if s >= max_terms {
        return Err(Error::InvalidArgument(format!(
            "the leading power {s} needs more than {max_terms} terms"
        )));
    }

    let normalization = 1.0;
    let mut c = vec![0.0; max_terms];
    // c_0 = 0 from the n^-1 constraint; the recurrence keeps zeros up to the pole.
    for j in 0..max_terms - 1 {
        let denom = p * (j + 1) as f64 + wm1;
        if j + 1 == s {
            if c[j] != 0.0 {
                return Err(Error::NoSeriesSolution(format!(
                    "recurrence pole at power {s} with nonzero incoming coefficient"
                )));
            }
            c[j + 1] = normalization;
        } else {
            c[j + 1] = -w0 * c[j] / denom;
        }
    }

    let closed_form = detect_closed_form(&c, s, w0 / p);
    Ok(GroundStateSeries {
        coefficients: c,
        closed_form,
        normalization,
        superpotential: sp.clone(),
    })
}

/// Checks `c_{s+k} = c_s (-λ)^k / k!` for every generated coefficient.
fn detect_closed_form(c: &[f64], s: usize, lambda: f64) -> Option<ClosedForm> {
    let lead = c[s];
    if c[..s].iter().any(|&x| x != 0.0) {
        return None;
    }
    let mut expected = lead;
    for (k, &ck) in c[s..].iter().enumerate() {
        if k > 0 {
            expected *= -lambda / k as f64;
        }
        if (ck - expected).abs() > PATTERN_REL_TOL * expected.abs().max(f64::MIN_POSITIVE) {
            return None;
        }
    }
    Some(ClosedForm {
        power: s as u32,
        decay: lambda,
    })
}
