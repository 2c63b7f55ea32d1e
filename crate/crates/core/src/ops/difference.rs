use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::kernel::{Kernel, KernelOrder};
use super::power_sum::PowerSum;
use super::sampled::SampledFunction;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SummationMode {
    /// Offsets `+j` and `-j` are accumulated together.
    Paired,
    /// Paired partial sums followed by iterated averaging of consecutive
    /// partial sums (`cesaro_depth` passes). One pass is the plain average of
    /// the last two partial sums; each further pass removes one more power of
    /// `j` from an alternating remainder `(-1)^J P(J)`.
    PairedCesaro,
}

/// Truncation and regularization of the kernel sums.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SummationPolicy {
    pub cutoff: usize,
    pub mode: SummationMode,
    pub tail_tol: f64,
    pub cesaro_depth: usize,
}

impl Default for SummationPolicy {
    fn default() -> Self {
        Self {
            cutoff: 10_000,
            mode: SummationMode::Paired,
            tail_tol: 1e-3,
            cesaro_depth: 4,
        }
    }
}

impl SummationPolicy {
    pub fn paired(cutoff: usize) -> Self {
        Self {
            cutoff,
            ..Self::default()
        }
    }

    pub fn paired_cesaro(cutoff: usize) -> Self {
        Self {
            cutoff,
            mode: SummationMode::PairedCesaro,
            ..Self::default()
        }
    }

    pub fn with_tail_tol(mut self, tail_tol: f64) -> Self {
        self.tail_tol = tail_tol;
        self
    }

    pub fn with_cesaro_depth(mut self, depth: usize) -> Self {
        self.cesaro_depth = depth;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.cutoff == 0 {
            return Err(Error::InvalidArgument("cutoff must be positive".into()));
        }
        if !(self.tail_tol > 0.0) {
            return Err(Error::InvalidArgument("tail_tol must be positive".into()));
        }
        if self.mode == SummationMode::PairedCesaro && self.cesaro_depth == 0 {
            return Err(Error::InvalidArgument("cesaro_depth must be positive".into()));
        }
        if self.cutoff + 1 < self.history_len() {
            return Err(Error::InvalidArgument(format!(
                "cutoff {} too small for the requested averaging depth",
                self.cutoff
            )));
        }
        Ok(())
    }

    /// Partial sums S_{J-h+1}..S_J needed to form the result and its tail estimate.
    fn history_len(&self) -> usize {
        match self.mode {
            SummationMode::Paired => 3,
            SummationMode::PairedCesaro => self.cesaro_depth + 3,
        }
    }
}

/// Out-of-window reads under zero extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverageWarning {
    pub uncovered_reads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DifferenceResult {
    pub value: Complex64,
    /// Twice the larger of the last two increments of the reported sequence.
    pub tail_estimate: f64,
    pub cutoff: usize,
    pub coverage: Option<CoverageWarning>,
}

/// `Σ_j K[j] f[n - j]` truncated at `|j| <= cutoff` and regularized per `policy`.
pub fn apply_difference(
    order: u32,
    f: &SampledFunction,
    n: i64,
    policy: &SummationPolicy,
) -> Result<DifferenceResult> {
    let kernel = Kernel::new(order)?;
    policy.validate()?;

    let cutoff = policy.cutoff;
    let keep = policy.history_len();
    let first_kept = cutoff + 1 - keep;

    let mut uncovered = 0usize;
    let mut read = |m: i64| {
        let s = f.sample(m);
        if !s.covered {
            uncovered += 1;
        }
        s.value
    };

    let mut sum = match kernel.order() {
        KernelOrder::First => Complex64::new(0.0, 0.0),
        KernelOrder::Second => read(n) * kernel.coefficient(0),
    };
    let mut history = Vec::with_capacity(keep);
    if first_kept == 0 {
        history.push(sum);
    }
    let even = kernel.is_even();
    for j in 1..=cutoff {
        let jj = j as i64;
        let k = kernel.coefficient(jj);
        let behind = read(n - jj);
        let ahead = read(n + jj);
        sum += if even {
            (behind + ahead) * k
        } else {
            (behind - ahead) * k
        };
        if j >= first_kept {
            history.push(sum);
        }
    }

    let seq = match policy.mode {
        SummationMode::Paired => history,
        SummationMode::PairedCesaro => iterated_average(history, policy.cesaro_depth),
    };
    let m = seq.len();
    let value = seq[m - 1];
    let tail_estimate = 2.0 * (seq[m - 1] - seq[m - 2]).norm().max((seq[m - 2] - seq[m - 3]).norm());

    if !(tail_estimate <= policy.tail_tol) {
        return Err(Error::ToleranceNotMet {
            tail_estimate,
            tail_tol: policy.tail_tol,
            cutoff,
        });
    }
    Ok(DifferenceResult {
        value,
        tail_estimate,
        cutoff,
        coverage: (uncovered > 0).then_some(CoverageWarning {
            uncovered_reads: uncovered,
        }),
    })
}

fn iterated_average(mut seq: Vec<Complex64>, passes: usize) -> Vec<Complex64> {
    for _ in 0..passes {
        seq = seq.windows(2).map(|w| (w[0] + w[1]) * 0.5).collect();
    }
    seq
}

/// Power-rule difference of a power sum: `Δ¹` once for order 1, twice for order 2.
pub fn apply_difference_symbolic(order: u32, p: &PowerSum) -> Result<PowerSum> {
    Ok(match KernelOrder::from_order(order)? {
        KernelOrder::First => p.difference(),
        KernelOrder::Second => p.difference().difference(),
    })
}
