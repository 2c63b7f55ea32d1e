use std::fmt;

use serde::{Deserialize, Serialize};

use super::expr::ParamExpr;
use crate::error::{Error, Result};
use crate::ops::PowerSum;
use crate::sqm::Superpotential;
use crate::units::Units;

/// A parametrized superpotential family with its parameter flow and rest.
pub trait ShapeInvariantModel: Send + Sync + fmt::Debug {
    fn name(&self) -> &str;

    fn superpotential(&self, a: f64) -> Superpotential;

    /// Parameter of the partner: `a₂ = φ(a₁)`.
    fn phi(&self, a: f64) -> f64;

    /// Declared rest `R(a)`; the shape-invariance check extracts its own.
    fn rest(&self, a: f64) -> f64;

    /// Declared ground-state reference energy `E₀(a)`.
    fn e0(&self, a: f64) -> f64;
}

/// Radial Coulomb problem, parameter `a = ℓ`.
///
/// `W[n] = s (1/(ℓ+1) - (ℓ+1)/(c n))` with `s = ħ/√(2m)` and lattice constant
/// `c`, so that `A†A = -p²Δ² + s²(1/(ℓ+1)² - 2/(c n) + ℓ(ℓ+1)/(c n)²)`.
/// The parameter flow is `ℓ ↦ ℓ + 1` and the rest is
/// `s² (2ℓ+3)/((ℓ+1)²(ℓ+2)²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coulomb {
    units: Units,
}

impl Coulomb {
    pub fn new(units: Units) -> Self {
        Self { units }
    }
}

impl Default for Coulomb {
    fn default() -> Self {
        Self::new(Units::default())
    }
}

impl ShapeInvariantModel for Coulomb {
    fn name(&self) -> &str {
        "coulomb"
    }

    fn superpotential(&self, l: f64) -> Superpotential {
        let s = self.units.superpotential_scale();
        let c = self.units.lattice_constant;
        let w = PowerSum::from_pairs([(s / (l + 1.0), 0.0), (-s * (l + 1.0) / c, -1.0)]);
        Superpotential::new(w, self.units.prefactor())
    }

    fn phi(&self, l: f64) -> f64 {
        l + 1.0
    }

    fn rest(&self, l: f64) -> f64 {
        let s2 = self.units.superpotential_scale().powi(2);
        s2 * (2.0 * l + 3.0) / ((l + 1.0).powi(2) * (l + 2.0).powi(2))
    }

    fn e0(&self, l: f64) -> f64 {
        self.units.superpotential_scale().powi(2) / (l + 1.0).powi(2)
    }
}

/// `W = 0`: the free lattice particle, trivially shape invariant with zero rest.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Free {
    units: Units,
}

impl Free {
    pub fn new(units: Units) -> Self {
        Self { units }
    }
}

impl ShapeInvariantModel for Free {
    fn name(&self) -> &str {
        "free"
    }

    fn superpotential(&self, _a: f64) -> Superpotential {
        Superpotential::new(PowerSum::zero(), self.units.prefactor())
    }

    fn phi(&self, a: f64) -> f64 {
        a
    }

    fn rest(&self, _a: f64) -> f64 {
        0.0
    }

    fn e0(&self, _a: f64) -> f64 {
        0.0
    }
}

/// `a' = alpha * a + beta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineMap {
    pub alpha: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    /// Expression in the parameter.
    pub coefficient: String,
    pub exponent: f64,
}

/// Declarative form of a custom family, as read from a configuration file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomFamilySpec {
    pub name: String,
    pub w: Vec<TermSpec>,
    pub phi: AffineMap,
    pub rest: String,
    #[serde(default)]
    pub e0: Option<String>,
}

/// A family `W(a) = Σ c_i(a) n^{e_i}` with affine parameter flow.
#[derive(Debug, Clone)]
pub struct CustomFamily {
    name: String,
    terms: Vec<(ParamExpr, f64)>,
    phi: AffineMap,
    rest: ParamExpr,
    e0: Option<ParamExpr>,
    prefactor: f64,
}

impl CustomFamily {
    pub fn from_spec(spec: &CustomFamilySpec, units: &Units) -> Result<Self> {
        units.validate()?;
        if spec.name.trim().is_empty() {
            return Err(Error::InvalidArgument("custom model needs a name".into()));
        }
        let terms = spec
            .w
            .iter()
            .map(|t| {
                if !t.exponent.is_finite() {
                    return Err(Error::InvalidArgument(format!(
                        "non-finite exponent {}",
                        t.exponent
                    )));
                }
                Ok((ParamExpr::parse(&t.coefficient)?, t.exponent))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            name: spec.name.clone(),
            terms,
            phi: spec.phi,
            rest: ParamExpr::parse(&spec.rest)?,
            e0: spec.e0.as_deref().map(ParamExpr::parse).transpose()?,
            prefactor: units.prefactor(),
        })
    }
}

impl ShapeInvariantModel for CustomFamily {
    fn name(&self) -> &str {
        &self.name
    }

    fn superpotential(&self, a: f64) -> Superpotential {
        let w = PowerSum::from_pairs(self.terms.iter().map(|(c, e)| (c.eval(a), *e)));
        Superpotential::new(w, self.prefactor)
    }

    fn phi(&self, a: f64) -> f64 {
        self.phi.alpha * a + self.phi.beta
    }

    fn rest(&self, a: f64) -> f64 {
        self.rest.eval(a)
    }

    fn e0(&self, a: f64) -> f64 {
        self.e0.as_ref().map_or(0.0, |e| e.eval(a))
    }
}

pub const BUILTIN_MODELS: [&str; 2] = ["coulomb", "free"];

/// Built-in model by name.
pub fn builtin_model(name: &str, units: &Units) -> Result<Box<dyn ShapeInvariantModel>> {
    units.validate()?;
    match name {
        "coulomb" => Ok(Box::new(Coulomb::new(*units))),
        "free" => Ok(Box::new(Free::new(*units))),
        other => Err(Error::InvalidArgument(format!(
            "unknown model `{other}` (built in: {})",
            BUILTIN_MODELS.join(", ")
        ))),
    }
}
