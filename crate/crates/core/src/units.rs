use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lattice constant and physical constants.
///
/// Index-space operators carry the ladder prefactor `hbar / (sqrt(2m) * a)`;
/// the kinetic term of a Hamiltonian is `-prefactor^2 * Δ²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Units {
    pub lattice_constant: f64,
    pub hbar: f64,
    pub two_m: f64,
}

impl Default for Units {
    fn default() -> Self {
        Self {
            lattice_constant: 1.0,
            hbar: 1.0,
            two_m: 1.0,
        }
    }
}

impl Units {
    pub fn new(lattice_constant: f64, hbar: f64, two_m: f64) -> Result<Self> {
        let units = Self {
            lattice_constant,
            hbar,
            two_m,
        };
        units.validate()?;
        Ok(units)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("lattice_constant", self.lattice_constant),
            ("hbar", self.hbar),
            ("two_m", self.two_m),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "{name} must be positive and finite, got {value}"
                )));
            }
        }
        Ok(())
    }

    /// `hbar / sqrt(2m)`, the scale of a superpotential in physical units.
    pub fn superpotential_scale(&self) -> f64 {
        self.hbar / self.two_m.sqrt()
    }

    /// Coefficient of `Δ¹` in the ladder operators.
    pub fn prefactor(&self) -> f64 {
        self.superpotential_scale() / self.lattice_constant
    }
}
