//! Shape-invariant families, the symbolic invariance check and the
//! algebraic spectrum built from it.

mod expr;
mod invariance;
mod model;

pub use expr::ParamExpr;
pub use invariance::{
    algebraic_spectrum, check_shape_invariance, AlgebraicSpectrum, ShapeInvarianceCheck,
    SpectrumLevel, CONSTANT_REL_TOL,
};
pub use model::{
    builtin_model, AffineMap, Coulomb, CustomFamily, CustomFamilySpec, Free, ShapeInvariantModel,
    TermSpec, BUILTIN_MODELS,
};
