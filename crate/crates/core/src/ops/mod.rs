//! Exact-discretization difference operators.
//!
//! The first- and second-order kernels are infinite-range convolutions whose
//! Fourier symbols are `ik` and `-k²` on `(-π, π)`. Numerical application goes
//! through a [`SummationPolicy`]; the symbolic calculus on [`PowerSum`]s uses
//! the power rule `Δ¹ nᵏ = k nᵏ⁻¹`.

mod difference;
mod kernel;
mod power_sum;
mod sampled;
mod verify;

pub use difference::{
    apply_difference, apply_difference_symbolic, CoverageWarning, DifferenceResult,
    SummationMode, SummationPolicy,
};
pub use kernel::{kernel_coefficient, Kernel, KernelOrder};
pub use power_sum::{PowerSum, Term};
pub use sampled::{Extension, SampledFunction, Sample, Window};
pub use verify::{verify_leibniz, verify_semigroup};
