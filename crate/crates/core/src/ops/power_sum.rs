use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// One term `coefficient * n^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub coefficient: f64,
    pub exponent: f64,
}

/// A finite formal sum `Σ c_α n^α` with real exponents.
///
/// Terms are kept with pairwise distinct exponents, sorted descending, and no
/// zero coefficients. Exponents within `1e-12` of a rational with denominator
/// at most 12 are snapped to it so that equal exponents compare equal.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PowerSum {
    terms: Vec<Term>,
}

fn snap_exponent(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    for den in 1..=12_i32 {
        let d = f64::from(den);
        let num = (x * d).round();
        if (x * d - num).abs() < 1e-12 * d {
            return num / d;
        }
    }
    x
}

impl PowerSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        Self::monomial(c, 0.0)
    }

    pub fn monomial(coefficient: f64, exponent: f64) -> Self {
        Self::from_terms([Term {
            coefficient,
            exponent,
        }])
    }

    /// Builds a normalized sum from `(coefficient, exponent)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (f64, f64)>>(pairs: I) -> Self {
        Self::from_terms(pairs.into_iter().map(|(coefficient, exponent)| Term {
            coefficient,
            exponent,
        }))
    }

    pub fn from_terms<I: IntoIterator<Item = Term>>(terms: I) -> Self {
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|t| Term {
                coefficient: t.coefficient,
                exponent: snap_exponent(t.exponent),
            })
            .collect();
        // stable: equal exponents are merged in insertion order
        raw.sort_by(|a, b| b.exponent.total_cmp(&a.exponent));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.exponent == t.exponent => last.coefficient += t.coefficient,
                _ => terms.push(t),
            }
        }
        terms.retain(|t| t.coefficient != 0.0);
        Self { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the zero sum and for a lone `n⁰` term.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.exponent == 0.0)
    }

    pub fn coefficient(&self, exponent: f64) -> f64 {
        let e = snap_exponent(exponent);
        self.terms
            .iter()
            .find(|t| t.exponent == e)
            .map_or(0.0, |t| t.coefficient)
    }

    pub fn constant_term(&self) -> f64 {
        self.coefficient(0.0)
    }

    /// The sum with its constant term removed.
    pub fn non_constant_part(&self) -> PowerSum {
        Self {
            terms: self
                .terms
                .iter()
                .copied()
                .filter(|t| t.exponent != 0.0)
                .collect(),
        }
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coefficient.abs())
            .fold(0.0, f64::max)
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.iter().any(|t| t.exponent < 0.0)
    }

    pub fn scale(&self, factor: f64) -> PowerSum {
        Self::from_terms(self.terms.iter().map(|t| Term {
            coefficient: t.coefficient * factor,
            exponent: t.exponent,
        }))
    }

    /// Drops terms whose coefficient is below `rel_tol * scale`.
    pub fn chop(&self, rel_tol: f64, scale: f64) -> PowerSum {
        let cut = rel_tol * scale;
        Self {
            terms: self
                .terms
                .iter()
                .copied()
                .filter(|t| t.coefficient.abs() > cut)
                .collect(),
        }
    }

    /// Drops every term with exponent `>= exponent`.
    pub fn below_power(&self, exponent: f64) -> PowerSum {
        Self {
            terms: self
                .terms
                .iter()
                .copied()
                .filter(|t| t.exponent < exponent)
                .collect(),
        }
    }

    /// First difference by the power rule `Δ¹ nᵏ = k nᵏ⁻¹`; constants vanish.
    pub fn difference(&self) -> PowerSum {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|t| t.exponent != 0.0)
                .map(|t| Term {
                    coefficient: t.coefficient * t.exponent,
                    exponent: t.exponent - 1.0,
                }),
        )
    }

    pub fn square(&self) -> PowerSum {
        self * self
    }

    /// Evaluates at a real point. Poles give infinities, non-integer powers of
    /// negative numbers give NaN.
    pub fn eval(&self, n: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                if t.exponent == 0.0 {
                    t.coefficient
                } else if t.exponent.fract() == 0.0 && t.exponent.abs() < i32::MAX as f64 {
                    t.coefficient * n.powi(t.exponent as i32)
                } else {
                    t.coefficient * n.powf(t.exponent)
                }
            })
            .sum()
    }

    /// Whether evaluation at integer `n` is finite.
    pub fn is_regular_at(&self, n: i64) -> bool {
        self.terms.iter().all(|t| {
            if n == 0 {
                t.exponent >= 0.0
            } else if n < 0 {
                t.exponent.fract() == 0.0
            } else {
                true
            }
        })
    }
}

impl Add for &PowerSum {
    type Output = PowerSum;
    fn add(self, rhs: &PowerSum) -> PowerSum {
        PowerSum::from_terms(self.terms.iter().chain(rhs.terms.iter()).copied())
    }
}

impl Sub for &PowerSum {
    type Output = PowerSum;
    fn sub(self, rhs: &PowerSum) -> PowerSum {
        self + &(-rhs)
    }
}

impl Neg for &PowerSum {
    type Output = PowerSum;
    fn neg(self) -> PowerSum {
        PowerSum {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: -t.coefficient,
                    exponent: t.exponent,
                })
                .collect(),
        }
    }
}

impl Mul for &PowerSum {
    type Output = PowerSum;
    fn mul(self, rhs: &PowerSum) -> PowerSum {
        PowerSum::from_terms(self.terms.iter().flat_map(|a| {
            rhs.terms.iter().map(move |b| Term {
                coefficient: a.coefficient * b.coefficient,
                exponent: a.exponent + b.exponent,
            })
        }))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for PowerSum {
            type Output = PowerSum;
            fn $m(self, rhs: PowerSum) -> PowerSum { (&self).$m(&rhs) }
        }
        impl $tr<&PowerSum> for PowerSum {
            type Output = PowerSum;
            fn $m(self, rhs: &PowerSum) -> PowerSum { (&self).$m(rhs) }
        }
        impl $tr<PowerSum> for &PowerSum {
            type Output = PowerSum;
            fn $m(self, rhs: PowerSum) -> PowerSum { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for PowerSum {
    type Output = PowerSum;
    fn neg(self) -> PowerSum {
        -&self
    }
}

impl fmt::Display for PowerSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let (sign, mag) = if t.coefficient < 0.0 {
                ("-", -t.coefficient)
            } else {
                ("+", t.coefficient)
            };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if t.exponent == 0.0 {
                write!(f, "{mag}")?;
            } else if t.exponent == 1.0 {
                write!(f, "{mag} n")?;
            } else {
                write!(f, "{mag} n^{}", t.exponent)?;
            }
        }
        Ok(())
    }
}
