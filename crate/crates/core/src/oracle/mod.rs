//! Numerical cross-checks: truncated lattice Hamiltonians as dense matrices,
//! a cyclic Jacobi eigensolver and comparisons against the algebra.

mod assemble;
mod compare;
mod eigen;
mod matrix;

pub use assemble::{
    assemble_hamiltonian, difference_matrix, AssemblyInfo, Boundary, PotentialSource,
    TruncatedOperator,
};
pub use compare::{
    compare_spectra, residual_check, residual_check_interior, LevelComparison, SpectrumReport,
};
pub use eigen::{diagonalize, jacobi_eigen, EigenReport, DEFAULT_TOL};
pub use matrix::DenseMatrix;
