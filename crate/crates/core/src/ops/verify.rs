use num_complex::Complex64;

use super::difference::{apply_difference, SummationPolicy};
use super::power_sum::PowerSum;
use super::sampled::{SampledFunction, Window};
use crate::error::Result;

/// Max over `window` of `|Δ²f[n] - Δ¹(Δ¹f)[n]|`.
///
/// The inner `Δ¹f` is evaluated with the same policy at every site the outer
/// sum touches, so both sides see the same truncation.
pub fn verify_semigroup(
    f: &SampledFunction,
    window: Window,
    policy: &SummationPolicy,
) -> Result<f64> {
    policy.validate()?;
    let reach = policy.cutoff;
    // Tabulate f once; each inner sum then reads from memory.
    let dense = f.resample(window.widen(2 * reach));
    let inner_window = window.widen(reach);
    let inner = inner_window
        .sites()
        .map(|m| apply_difference(1, &dense, m, policy).map(|r| r.value))
        .collect::<Result<Vec<Complex64>>>()?;
    let inner = SampledFunction::from_values(inner_window, inner)?;

    let mut worst = 0.0_f64;
    for n in window.sites() {
        let direct = apply_difference(2, &dense, n, policy)?.value;
        let composed = apply_difference(1, &inner, n, policy)?.value;
        worst = worst.max((direct - composed).norm());
    }
    Ok(worst)
}

/// Largest coefficient of `Δ¹(fg) - Δ¹(f) g - f Δ¹(g)`.
pub fn verify_leibniz(f: &PowerSum, g: &PowerSum) -> f64 {
    let lhs = (f * g).difference();
    let rhs = &(&f.difference() * g) + &(f * &g.difference());
    (&lhs - &rhs).max_abs_coefficient()
}
