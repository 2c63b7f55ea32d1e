use approx::assert_relative_eq;
use lattice_susy::oracle::{
    assemble_hamiltonian, compare_spectra, diagonalize, jacobi_eigen, residual_check_interior,
    DenseMatrix, DEFAULT_TOL,
};
use lattice_susy::ops::{SampledFunction, Window};
use lattice_susy::shape::{algebraic_spectrum, Coulomb, ShapeInvariantModel};
use lattice_susy::sqm::build_partner_potentials;
use lattice_susy::{PowerSum, Units};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> DenseMatrix {
    let mut h = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let v: f64 = rng.gen_range(-2.0..2.0);
            h[(i, j)] = v;
            h[(j, i)] = v;
        }
    }
    h
}

fn nalgebra_eigenvalues(h: &DenseMatrix) -> Vec<f64> {
    let m = DMatrix::from_row_slice(h.rows(), h.cols(), h.as_slice());
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[test]
fn jacobi_agrees_with_nalgebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [1, 2, 3, 5, 8, 13, 21, 34] {
        let h = random_symmetric(&mut rng, n);
        let ours = jacobi_eigen(&h, DEFAULT_TOL).unwrap();
        let theirs = nalgebra_eigenvalues(&h);
        for (a, b) in ours.eigenvalues.iter().zip(&theirs) {
            assert!((a - b).abs() < 1e-10 * h.frobenius().max(1.0), "n = {n}: {a} vs {b}");
        }
        assert!(ours.orthogonality_defect(n) < 1e-8);
        assert!(ours.reconstruction_residual(&h) < 1e-8 * h.max_abs());
    }
}

#[test]
fn coulomb_hamiltonian_agrees_with_nalgebra() {
    let v = build_partner_potentials(&Coulomb::default().superpotential(0.0)).v_minus;
    let op = assemble_hamiltonian((&v).into(), Window::half_line(60).unwrap(), 60, &Units::default())
        .unwrap();
    assert_eq!(op.matrix.max_asymmetry(), 0.0);
    let ours = diagonalize(&op, DEFAULT_TOL).unwrap();
    let theirs = nalgebra_eigenvalues(&op.matrix);
    for (a, b) in ours.eigenvalues.iter().zip(&theirs) {
        assert_relative_eq!(*a, *b, epsilon = 1e-9);
    }
}

#[test]
fn eigenvectors_satisfy_the_eigen_equation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let h = random_symmetric(&mut rng, 20);
    let r = jacobi_eigen(&h, DEFAULT_TOL).unwrap();
    for k in 0..20 {
        let v = r.eigenvector(k);
        let hv = h.matvec(&v).unwrap();
        let worst = hv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - r.eigenvalues[k] * b).abs())
            .fold(0.0, f64::max);
        assert!(worst < 1e-9, "level {k}: {worst:e}");
    }
}

#[test]
fn coulomb_low_levels_converge_with_window() {
    let v = build_partner_potentials(&Coulomb::default().superpotential(0.0)).v_minus;
    let levels: Vec<Vec<f64>> = [100, 200, 400]
        .iter()
        .map(|&n| {
            let op = assemble_hamiltonian((&v).into(), Window::half_line(n).unwrap(), n, &Units::default())
                .unwrap();
            let r = diagonalize(&op, DEFAULT_TOL).unwrap();
            assert!(r.eigenvalues[0] >= -1e-8 * op.matrix.max_abs());
            r.eigenvalues[..2].to_vec()
        })
        .collect();
    let (l0, l1, l2) = (&levels[0], &levels[1], &levels[2]);
    for (k, ((a, b), c)) in l0.iter().zip(l1).zip(l2).enumerate() {
        let d1 = (b - a).abs();
        let d2 = (c - b).abs();
        assert!(d2 <= d1, "level {k}: {d1:e} then {d2:e}");
    }
}

#[test]
fn compare_spectra_reports_metadata() {
    let m = Coulomb::default();
    let v = build_partner_potentials(&m.superpotential(0.0)).v_minus;
    let op = assemble_hamiltonian((&v).into(), Window::half_line(40).unwrap(), 40, &Units::default())
        .unwrap();
    let eig = diagonalize(&op, DEFAULT_TOL).unwrap();
    let alg = algebraic_spectrum(&m, 0.0, 2).unwrap();
    let report = compare_spectra(&eig, &alg, 2).with_assembly(op.info);
    assert_eq!(report.rows.len(), 2);
    assert_eq!(report.rows[1].algebraic, 0.75);
    assert_eq!(report.matrix_dim, 40);
    assert_eq!(report.assembly.unwrap().kernel_cutoff, 40);
    assert!(report.rows[0].rel_dev.is_none());
}

#[test]
fn windowed_sine_has_small_interior_residual() {
    // On the free lattice sin(kn) has energy k² up to the truncated couplings.
    let k = 0.3;
    let n = 200;
    let window = Window::half_line(n).unwrap();
    let op = assemble_hamiltonian((&PowerSum::zero()).into(), window, n, &Units::default()).unwrap();
    let psi = SampledFunction::from_real_fn(window, move |m| (k * m as f64).sin());
    let edge = residual_check_interior(&op, &psi, k * k, 0).unwrap();
    let interior = residual_check_interior(&op, &psi, k * k, 60).unwrap();
    assert!(interior < edge);
    assert!(interior < 0.1, "interior residual {interior}");
}
