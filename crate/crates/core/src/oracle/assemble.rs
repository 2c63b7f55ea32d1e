use serde::Serialize;

use super::matrix::DenseMatrix;
use crate::error::{Error, Result};
use crate::ops::{Kernel, PowerSum, SampledFunction, Window};
use crate::units::Units;

/// Potential values for assembly: a closed-form power sum or stored samples.
#[derive(Debug, Clone, Copy)]
pub enum PotentialSource<'a> {
    Symbolic(&'a PowerSum),
    Sampled(&'a SampledFunction),
}

impl<'a> From<&'a PowerSum> for PotentialSource<'a> {
    fn from(p: &'a PowerSum) -> Self {
        Self::Symbolic(p)
    }
}

impl<'a> From<&'a SampledFunction> for PotentialSource<'a> {
    fn from(f: &'a SampledFunction) -> Self {
        Self::Sampled(f)
    }
}

impl PotentialSource<'_> {
    fn at(&self, n: i64) -> Result<f64> {
        match self {
            Self::Symbolic(p) => {
                let v = p.eval(n as f64);
                if !p.is_regular_at(n) || !v.is_finite() {
                    return Err(Error::InvalidDomain {
                        site: n,
                        reason: format!("potential {p} is singular here"),
                    });
                }
                Ok(v)
            }
            Self::Sampled(f) => {
                let s = f.sample(n);
                if !s.covered {
                    return Err(Error::InvalidDomain {
                        site: n,
                        reason: "sampled potential does not cover this site".into(),
                    });
                }
                Ok(s.value.re)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Boundary {
    /// Couplings to sites outside the window are dropped.
    Dirichlet,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AssemblyInfo {
    pub window: Window,
    pub kernel_cutoff: usize,
    pub boundary: Boundary,
    pub units: Units,
}

/// A lattice operator restricted to a finite window.
#[derive(Debug, Clone)]
pub struct TruncatedOperator {
    pub matrix: DenseMatrix,
    pub info: AssemblyInfo,
}

impl TruncatedOperator {
    pub fn window(&self) -> Window {
        self.info.window
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// Matrix of `scale * Δᵐ` on `window`: entry `(n, n')` is `scale * K_m[n - n']`
/// for `|n - n'| <= cutoff`.
pub fn difference_matrix(kernel: Kernel, window: Window, cutoff: usize, scale: f64) -> DenseMatrix {
    let dim = window.len();
    DenseMatrix::from_fn(dim, dim, |i, j| {
        let offset = i as i64 - j as i64;
        if offset.unsigned_abs() as usize > cutoff {
            0.0
        } else {
            scale * kernel.coefficient(offset)
        }
    })
}

/// `H = -prefactor² Δ² + V` on `window` with Dirichlet truncation.
///
/// The diagonal carries `prefactor² π²/3 + V[n]`; off-diagonal entries are
/// `2 prefactor² (-1)^(n-n') / (n-n')²` up to the kernel cutoff.
pub fn assemble_hamiltonian(
    potential: PotentialSource<'_>,
    window: Window,
    kernel_cutoff: usize,
    units: &Units,
) -> Result<TruncatedOperator> {
    units.validate()?;
    if kernel_cutoff == 0 {
        return Err(Error::InvalidArgument("kernel cutoff must be positive".into()));
    }
    let diag = window
        .sites()
        .map(|n| potential.at(n))
        .collect::<Result<Vec<f64>>>()?;
    let p2 = units.prefactor().powi(2);
    let mut matrix = difference_matrix(Kernel::SECOND, window, kernel_cutoff, -p2);
    for (i, v) in diag.into_iter().enumerate() {
        matrix[(i, i)] += v;
    }
    Ok(TruncatedOperator {
        matrix,
        info: AssemblyInfo {
            window,
            kernel_cutoff,
            boundary: Boundary::Dirichlet,
            units: *units,
        },
    })
}
