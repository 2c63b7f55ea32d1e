use num_complex::Complex64;
use serde::Serialize;

use super::superpotential::Superpotential;
use crate::error::{Error, Result};
use crate::ops::{apply_difference, Kernel, PowerSum, SampledFunction, SummationPolicy, Window};
use crate::oracle::{difference_matrix, DenseMatrix};

/// Image norm below this fraction of the input norm counts as annihilation.
pub const ANNIHILATION_THRESHOLD: f64 = 1e-6;

/// The first-order operator `d·Δ¹ + W`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LadderOperator {
    pub derivative: f64,
    pub w: PowerSum,
}

/// `second·Δ² + first·Δ¹ + zeroth`, with power-sum coefficients.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SecondOrderOperator {
    pub second: f64,
    pub first: PowerSum,
    pub zeroth: PowerSum,
}

impl SecondOrderOperator {
    /// The potential, if the operator has the Schrödinger form `c·Δ² + V`.
    pub fn potential(&self) -> Option<&PowerSum> {
        self.first.is_zero().then_some(&self.zeroth)
    }
}

impl LadderOperator {
    pub fn new(derivative: f64, w: PowerSum) -> Self {
        Self { derivative, w }
    }

    pub fn apply_symbolic(&self, psi: &PowerSum) -> PowerSum {
        &psi.difference().scale(self.derivative) + &(&self.w * psi)
    }

    fn w_at(&self, n: i64) -> Result<f64> {
        let v = self.w.eval(n as f64);
        if !self.w.is_regular_at(n) || !v.is_finite() {
            return Err(Error::InvalidDomain {
                site: n,
                reason: format!("superpotential {} is singular here", self.w),
            });
        }
        Ok(v)
    }

    pub fn apply_at(
        &self,
        psi: &SampledFunction,
        n: i64,
        policy: &SummationPolicy,
    ) -> Result<Complex64> {
        let d = apply_difference(1, psi, n, policy)?.value;
        Ok(d * self.derivative + psi.value(n) * self.w_at(n)?)
    }

    /// The image sampled on `window`, zero-extended beyond it.
    pub fn apply_sampled(
        &self,
        psi: &SampledFunction,
        window: Window,
        policy: &SummationPolicy,
    ) -> Result<SampledFunction> {
        let values = window
            .sites()
            .map(|n| self.apply_at(psi, n, policy))
            .collect::<Result<Vec<_>>>()?;
        SampledFunction::from_values(window, values)
    }

    /// Dirichlet-truncated matrix on `window`.
    pub fn matrix(&self, window: Window, cutoff: usize) -> Result<DenseMatrix> {
        let mut m = difference_matrix(Kernel::FIRST, window, cutoff, self.derivative);
        for (i, n) in window.sites().enumerate() {
            m[(i, i)] += self.w_at(n)?;
        }
        Ok(m)
    }

    /// `self ∘ rhs`, expanded with the semigroup and Leibniz rules.
    pub fn compose(&self, rhs: &LadderOperator) -> SecondOrderOperator {
        let (d1, d2) = (self.derivative, rhs.derivative);
        let first = &rhs.w.scale(d1) + &self.w.scale(d2);
        let zeroth = &rhs.w.difference().scale(d1) + &(&self.w * &rhs.w);
        SecondOrderOperator {
            second: d1 * d2,
            first,
            zeroth,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LadderPair {
    /// `pΔ¹ + W`
    pub a: LadderOperator,
    /// `-pΔ¹ + W`
    pub a_dagger: LadderOperator,
}

impl LadderPair {
    /// `A†A = -p²Δ² + v_minus`.
    pub fn lower_hamiltonian(&self) -> SecondOrderOperator {
        self.a_dagger.compose(&self.a)
    }

    /// `AA† = -p²Δ² + v_plus`.
    pub fn upper_hamiltonian(&self) -> SecondOrderOperator {
        self.a.compose(&self.a_dagger)
    }
}

pub fn ladder_pair(sp: &Superpotential) -> LadderPair {
    LadderPair {
        a: LadderOperator::new(sp.prefactor, sp.w.clone()),
        a_dagger: LadderOperator::new(-sp.prefactor, sp.w.clone()),
    }
}

#[derive(Debug, Clone)]
pub enum Intertwined {
    /// Unit-norm image.
    Image(SampledFunction),
    Annihilated { image_norm: f64, input_norm: f64 },
}

impl Intertwined {
    pub fn image(&self) -> Option<&SampledFunction> {
        match self {
            Self::Image(f) => Some(f),
            Self::Annihilated { .. } => None,
        }
    }

    pub fn is_annihilated(&self) -> bool {
        matches!(self, Self::Annihilated { .. })
    }
}

/// Maps `psi` through `op` onto `window` and normalizes the result.
pub fn intertwine(
    op: &LadderOperator,
    psi: &SampledFunction,
    window: Window,
    policy: &SummationPolicy,
) -> Result<Intertwined> {
    let input_norm = psi.resample(window).norm();
    if input_norm == 0.0 {
        return Err(Error::InvalidArgument(
            "input state vanishes on the window".into(),
        ));
    }
    let image = op.apply_sampled(psi, window, policy)?;
    let image_norm = image.norm();
    if image_norm < ANNIHILATION_THRESHOLD * input_norm {
        return Ok(Intertwined::Annihilated {
            image_norm,
            input_norm,
        });
    }
    Ok(Intertwined::Image(image.normalized()?))
}
