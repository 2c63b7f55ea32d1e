use lattice_susy::shape::{algebraic_spectrum, Coulomb, ShapeInvariantModel};
use lattice_susy::sqm::{build_partner_potentials, solve_ground_state_series};
use lattice_susy::{assemble_hamiltonian, compare_spectra, diagonalize, Units, Window};

fn main() -> lattice_susy::Result<()> {
    let units = Units::new(0.2, 1.0, 1.0)?;
    let model = Coulomb::new(units);
    let l = 0.0;

    let spectrum = algebraic_spectrum(&model, l, 3)?;
    println!("algebraic: {:?}", spectrum.e_susy());

    let w = model.superpotential(l);
    let ground = solve_ground_state_series(&w, 40)?;
    println!("ground state closed form: {:?}", ground.closed_form);

    let v = build_partner_potentials(&w).v_minus;
    let op = assemble_hamiltonian((&v).into(), Window::half_line(200)?, 200, &units)?;
    let eig = diagonalize(&op, 1e-10)?;
    for row in compare_spectra(&eig, &spectrum, 3).rows {
        println!("n={} numeric={:.5} algebraic={:.5}", row.n, row.numeric, row.algebraic);
    }
    Ok(())
}
