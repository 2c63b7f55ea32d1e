//! Shared fixtures for the benchmarks.

use lattice_susy::oracle::{assemble_hamiltonian, TruncatedOperator};
use lattice_susy::shape::{Coulomb, ShapeInvariantModel};
use lattice_susy::sqm::build_partner_potentials;
use lattice_susy::{PowerSum, SampledFunction, Units, Window};
use num_complex::Complex64;

pub fn plane_wave(k: f64) -> SampledFunction {
    SampledFunction::from_fn(Window::symmetric(0), move |n| {
        Complex64::from_polar(1.0, k * n as f64)
    })
}

pub fn coulomb_potential(l: f64) -> PowerSum {
    build_partner_potentials(&Coulomb::default().superpotential(l)).v_minus
}

/// Coulomb `A†A` on `[1, n]` with the kernel cutoff equal to `n`.
pub fn coulomb_hamiltonian(n: usize) -> TruncatedOperator {
    let v = coulomb_potential(0.0);
    let window = Window::half_line(n).expect("non-empty window");
    assemble_hamiltonian((&v).into(), window, n, &Units::default()).expect("regular potential")
}
