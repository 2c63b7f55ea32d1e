use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Closed integer interval `[min, max]` of lattice sites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub min: i64,
    pub max: i64,
}

impl Window {
    pub fn new(min: i64, max: i64) -> Result<Self> {
        if min > max {
            return Err(Error::InvalidArgument(format!(
                "empty window [{min}, {max}]"
            )));
        }
        Ok(Self { min, max })
    }

    /// `[1, n]`, the half-line window used for radial problems.
    pub fn half_line(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("window size must be positive".into()));
        }
        Ok(Self {
            min: 1,
            max: n as i64,
        })
    }

    /// `[-half_width, half_width]`.
    pub fn symmetric(half_width: i64) -> Self {
        let h = half_width.abs();
        Self { min: -h, max: h }
    }

    pub fn len(&self) -> usize {
        (self.max - self.min + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, n: i64) -> bool {
        (self.min..=self.max).contains(&n)
    }

    pub fn sites(&self) -> impl Iterator<Item = i64> {
        self.min..=self.max
    }

    pub fn index_of(&self, n: i64) -> Option<usize> {
        self.contains(n).then(|| (n - self.min) as usize)
    }

    /// The window grown by `margin` sites on each side.
    pub fn widen(&self, margin: usize) -> Self {
        let m = margin as i64;
        Self {
            min: self.min - m,
            max: self.max + m,
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.min, self.max)
    }
}

type Rule = Arc<dyn Fn(i64) -> Complex64 + Send + Sync>;

/// How a [`SampledFunction`] is continued outside its window.
#[derive(Clone)]
pub enum Extension {
    /// Out-of-window sites read as zero (Dirichlet truncation).
    Zero,
    /// A closed-form rule valid for every integer.
    Analytic(Rule),
}

impl fmt::Debug for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Zero => write!(f, "Zero"),
            Self::Analytic(_) => write!(f, "Analytic(..)"),
        }
    }
}

/// Lookup result: the value and whether it came from stored or analytic data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub value: Complex64,
    /// False when the site was outside the window under zero extension.
    pub covered: bool,
}

/// A lattice function stored on a finite window plus an extension policy.
#[derive(Debug, Clone)]
pub struct SampledFunction {
    window: Window,
    values: Vec<Complex64>,
    extension: Extension,
}

impl SampledFunction {
    /// Samples `rule` on the window and keeps it as the analytic extension.
    pub fn from_fn<F>(window: Window, rule: F) -> Self
    where
        F: Fn(i64) -> Complex64 + Send + Sync + 'static,
    {
        let values = window.sites().map(&rule).collect();
        Self {
            window,
            values,
            extension: Extension::Analytic(Arc::new(rule)),
        }
    }

    /// Real-valued convenience wrapper around [`SampledFunction::from_fn`].
    pub fn from_real_fn<F>(window: Window, rule: F) -> Self
    where
        F: Fn(i64) -> f64 + Send + Sync + 'static,
    {
        Self::from_fn(window, move |n| Complex64::new(rule(n), 0.0))
    }

    /// Stored values with zero extension.
    pub fn from_values(window: Window, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != window.len() {
            return Err(Error::InvalidArgument(format!(
                "{} values for a window of {} sites",
                values.len(),
                window.len()
            )));
        }
        Ok(Self {
            window,
            values,
            extension: Extension::Zero,
        })
    }

    pub fn from_real_values(window: Window, values: &[f64]) -> Result<Self> {
        Self::from_values(
            window,
            values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        )
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn extension(&self) -> &Extension {
        &self.extension
    }

    pub fn is_analytic(&self) -> bool {
        matches!(self.extension, Extension::Analytic(_))
    }

    #[inline]
    pub fn sample(&self, n: i64) -> Sample {
        if let Some(i) = self.window.index_of(n) {
            return Sample {
                value: self.values[i],
                covered: true,
            };
        }
        match &self.extension {
            Extension::Zero => Sample {
                value: Complex64::new(0.0, 0.0),
                covered: false,
            },
            Extension::Analytic(rule) => Sample {
                value: rule(n),
                covered: true,
            },
        }
    }

    pub fn value(&self, n: i64) -> Complex64 {
        self.sample(n).value
    }

    /// Re-samples onto another window, keeping the extension.
    pub fn resample(&self, window: Window) -> Self {
        Self {
            window,
            values: window.sites().map(|n| self.value(n)).collect(),
            extension: self.extension.clone(),
        }
    }

    /// Discrete 2-norm over the stored window.
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Unit-norm copy with zero extension. Errors on a zero function.
    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::InvalidArgument("cannot normalize a zero function".into()));
        }
        Self::from_values(self.window, self.values.iter().map(|v| v / norm).collect())
    }

    /// `Σ conj(self[n]) other[n]` over the common window sites.
    pub fn inner(&self, other: &SampledFunction) -> Complex64 {
        let lo = self.window.min.max(other.window.min);
        let hi = self.window.max.min(other.window.max);
        (lo..=hi)
            .map(|n| self.value(n).conj() * other.value(n))
            .sum()
    }
}
