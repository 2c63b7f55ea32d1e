use serde::{Deserialize, Serialize};

use crate::ops::PowerSum;

/// `W[n]` together with the ladder prefactor `ħ/(√(2m) a)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Superpotential {
    pub w: PowerSum,
    pub prefactor: f64,
}

impl Superpotential {
    pub fn new(w: PowerSum, prefactor: f64) -> Self {
        Self { w, prefactor }
    }

    /// `(w₀, w₋₁)` when `W = w₀ + w₋₁/n`, otherwise `None`.
    pub fn two_term(&self) -> Option<(f64, f64)> {
        self.w
            .terms()
            .iter()
            .all(|t| t.exponent == 0.0 || t.exponent == -1.0)
            .then(|| (self.w.coefficient(0.0), self.w.coefficient(-1.0)))
    }
}

/// The two partner potentials, tagged by the sign in front of `Δ¹W`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartnerPotentials {
    /// `W² - pΔ¹W`, the potential of `A†A`.
    pub v_minus: PowerSum,
    /// `W² + pΔ¹W`, the potential of `AA†`.
    pub v_plus: PowerSum,
}

pub fn build_partner_potentials(sp: &Superpotential) -> PartnerPotentials {
    let w2 = sp.w.square();
    let dw = sp.w.difference().scale(sp.prefactor);
    PartnerPotentials {
        v_minus: &w2 - &dw,
        v_plus: &w2 + &dw,
    }
}
