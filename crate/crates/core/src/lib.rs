//! Exact-discretization lattice operators and a discretized N=2 supersymmetric
//! quantum mechanics engine.
//!
//! * [`ops`]: long-range difference kernels, their regularized application to
//!   lattice functions, and the power-rule calculus on [`PowerSum`]s.
//! * [`sqm`]: ladder operators, partner potentials, Hamiltonian hierarchy and
//!   the series solution of the zero-mode equation.
//! * [`shape`]: shape-invariance checks and algebraic spectra.
//! * [`oracle`]: dense truncated Hamiltonians and a cyclic Jacobi eigensolver
//!   used to cross-check the algebra numerically.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod ops;
pub mod oracle;
pub mod shape;
pub mod sqm;
pub mod units;

pub use error::{Error, Result};
pub use ops::{
    apply_difference, apply_difference_symbolic, kernel_coefficient, verify_leibniz,
    verify_semigroup, Kernel, PowerSum, SampledFunction, SummationMode, SummationPolicy, Window,
};
pub use oracle::{
    assemble_hamiltonian, compare_spectra, diagonalize, residual_check, DenseMatrix, EigenReport,
    SpectrumReport, TruncatedOperator,
};
pub use shape::{
    algebraic_spectrum, builtin_model, check_shape_invariance, AlgebraicSpectrum, Coulomb,
    CustomFamily, CustomFamilySpec, ShapeInvariantModel,
};
pub use sqm::{
    build_partner_potentials, hamiltonian_hierarchy, intertwine, ladder_pair,
    solve_ground_state_series, GroundStateSeries, LadderPair, PartnerPotentials, Superpotential,
};
pub use units::Units;
