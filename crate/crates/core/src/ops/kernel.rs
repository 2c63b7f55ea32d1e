use std::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelOrder {
    First,
    Second,
}

impl KernelOrder {
    pub fn from_order(order: u32) -> Result<Self> {
        match order {
            1 => Ok(Self::First),
            2 => Ok(Self::Second),
            other => Err(Error::InvalidArgument(format!(
                "difference order must be 1 or 2, got {other}"
            ))),
        }
    }

    pub fn order(self) -> u32 {
        match self {
            Self::First => 1,
            Self::Second => 2,
        }
    }
}

/// Coefficient sequence `K_m[j]` of the order-`m` lattice difference operator,
/// `Δᵐ f[n] = Σ_j K_m[j] f[n - j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Kernel {
    order: KernelOrder,
}

impl Kernel {
    pub const FIRST: Kernel = Kernel {
        order: KernelOrder::First,
    };
    pub const SECOND: Kernel = Kernel {
        order: KernelOrder::Second,
    };

    pub fn new(order: u32) -> Result<Self> {
        KernelOrder::from_order(order).map(|order| Self { order })
    }

    pub fn order(&self) -> KernelOrder {
        self.order
    }

    /// `K₁[j] = (-1)ʲ/j`, `K₂[j] = -2(-1)ʲ/j²` for `j ≠ 0`; `K₁[0] = 0`, `K₂[0] = -π²/3`.
    #[inline]
    pub fn coefficient(&self, j: i64) -> f64 {
        match (self.order, j) {
            (KernelOrder::First, 0) => 0.0,
            (KernelOrder::Second, 0) => -PI * PI / 3.0,
            (KernelOrder::First, j) => alternating_sign(j) / j as f64,
            (KernelOrder::Second, j) => {
                let jf = j as f64;
                -2.0 * alternating_sign(j) / (jf * jf)
            }
        }
    }

    /// Whether `K[-j] = K[j]` (even) rather than `K[-j] = -K[j]` (odd).
    pub fn is_even(&self) -> bool {
        self.order == KernelOrder::Second
    }
}

#[inline]
pub(crate) fn alternating_sign(j: i64) -> f64 {
    if j.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

pub fn kernel_coefficient(order: u32, j: i64) -> Result<f64> {
    Kernel::new(order).map(|k| k.coefficient(j))
}
