//! Acceptance suite. Prints one PASS/FAIL line per criterion, with the
//! individual checks listed underneath, and exits non-zero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use lattice_susy::oracle::{
    assemble_hamiltonian, diagonalize, jacobi_eigen, residual_check, DenseMatrix, EigenReport,
    DEFAULT_TOL,
};
use lattice_susy::ops::{
    apply_difference, kernel_coefficient, verify_leibniz, verify_semigroup, PowerSum,
    SampledFunction, SummationPolicy, Window,
};
use lattice_susy::shape::{algebraic_spectrum, check_shape_invariance, Coulomb};
use lattice_susy::sqm::{
    build_partner_potentials, intertwine, ladder_pair, solve_ground_state_series, Intertwined,
};
use lattice_susy::ShapeInvariantModel;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Check {
    label: String,
    ok: bool,
    detail: String,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, label: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.0.push(Check {
            label: label.into(),
            ok,
            detail: detail.into(),
        });
    }
}

// ---------------------------------------------------------------------------
// 1. kernels

fn kernels() -> Checks {
    let mut c = Checks::default();
    let k1 = |j| kernel_coefficient(1, j).unwrap();
    let k2 = |j| kernel_coefficient(2, j).unwrap();
    let table = [
        ("K1[1] = -1", k1(1), -1.0),
        ("K1[2] = 1/2", k1(2), 0.5),
        ("K2[0] = -pi^2/3", k2(0), -PI * PI / 3.0),
        ("K2[1] = 2", k2(1), 2.0),
    ];
    for (label, got, want) in table {
        let err = (got - want).abs();
        c.add(label, err <= 1e-15, format!("got {got:.17e}, |err| {err:.1e}"));
    }
    let mut odd = 0;
    let mut even = 0;
    for j in -1000..=1000_i64 {
        if k1(-j) != -k1(j) {
            odd += 1;
        }
        if k2(-j) != k2(j) {
            even += 1;
        }
    }
    c.add("K1 odd over |j| <= 1000", odd == 0, format!("{odd} violations"));
    c.add("K2 even over |j| <= 1000", even == 0, format!("{even} violations"));
    c
}

// ---------------------------------------------------------------------------
// 2. spectral symbol

fn plane_wave(k: f64) -> SampledFunction {
    SampledFunction::from_fn(Window::symmetric(0), move |n| {
        Complex64::from_polar(1.0, k * n as f64)
    })
}

fn symbol_error(order: u32, k: f64, cutoff: usize) -> Result<f64, String> {
    let f = plane_wave(k);
    let n = 3;
    let symbol = if order == 1 {
        Complex64::new(0.0, k)
    } else {
        Complex64::new(-k * k, 0.0)
    };
    let r = apply_difference(order, &f, n, &SummationPolicy::paired(cutoff))
        .map_err(|e| e.to_string())?;
    Ok((r.value - symbol * f.value(n)).norm())
}

fn spectral_symbol() -> Checks {
    let mut c = Checks::default();
    for frac in [0.1, 0.5, 0.9] {
        let k = frac * PI;
        for order in [1, 2] {
            let label = format!("order {order}, k = {frac}pi");
            match (symbol_error(order, k, 10_000), symbol_error(order, k, 20_000)) {
                (Ok(e1), Ok(e2)) => c.add(
                    label,
                    e1 < 1e-3 && e2 < e1,
                    format!("err(J=1e4) {e1:.2e}, err(J=2e4) {e2:.2e}"),
                ),
                (a, b) => c.add(label, false, format!("{a:?} / {b:?}")),
            }
        }
    }
    c
}

// ---------------------------------------------------------------------------
// 3. semigroup and Leibniz

fn random_power_sum(rng: &mut ChaCha8Rng) -> PowerSum {
    let terms = rng.gen_range(1..=4);
    PowerSum::from_pairs((0..terms).map(|_| {
        let coefficient = f64::from(rng.gen_range(-6..=6_i32));
        let exponent = f64::from(rng.gen_range(-8..=8_i32)) / 2.0;
        (coefficient, exponent)
    }))
}

fn semigroup_and_leibniz() -> Checks {
    let mut c = Checks::default();
    let window = Window::symmetric(20);
    let policy = SummationPolicy::default();
    let tests: Vec<(&str, SampledFunction)> = vec![
        ("e^{i 0.3pi n}", plane_wave(0.3 * PI)),
        (
            "cos(0.2pi n) + sin(0.55pi n)/2",
            SampledFunction::from_real_fn(window, |n| {
                let n = n as f64;
                (0.2 * PI * n).cos() + 0.5 * (0.55 * PI * n).sin()
            }),
        ),
        (
            "e^{-i 0.7pi n}",
            plane_wave(-0.7 * PI),
        ),
    ];
    for (label, f) in tests {
        match verify_semigroup(&f, window, &policy) {
            Ok(r) => c.add(
                format!("semigroup on {label}, 41 sites"),
                r < 1e-3,
                format!("residual {r:.2e}"),
            ),
            Err(e) => c.add(format!("semigroup on {label}"), false, e.to_string()),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e1b);
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let f = random_power_sum(&mut rng);
        let g = random_power_sum(&mut rng);
        worst = worst.max(verify_leibniz(&f, &g));
    }
    c.add(
        "Leibniz on 100 random pairs",
        worst == 0.0,
        format!("largest residual coefficient {worst:e}"),
    );
    c
}

// ---------------------------------------------------------------------------
// 4. power-law regularization

fn power_law() -> Checks {
    let mut c = Checks::default();
    let policy = SummationPolicy::paired_cesaro(10_000);
    for k in 1..=4_i32 {
        let f = SampledFunction::from_real_fn(Window::symmetric(0), move |n| (n as f64).powi(k));
        for n in [10_i64, 25, 50] {
            let exact = f64::from(k) * (n as f64).powi(k - 1);
            let label = format!("n^{k} at n = {n}");
            // The tail tolerance is the criterion's own relative bound.
            let p = policy.with_tail_tol(1e-2 * exact.abs());
            match apply_difference(1, &f, n, &p) {
                Ok(r) => {
                    let rel = (r.value.re - exact).abs() / exact.abs();
                    c.add(label, rel < 1e-2, format!("relative error {rel:.2e}"));
                }
                Err(e) => c.add(label, false, e.to_string()),
            }
        }
    }
    c
}

// ---------------------------------------------------------------------------
// 5. Coulomb shape invariance

fn coulomb_shape_invariance() -> Checks {
    let mut c = Checks::default();
    let m = Coulomb::default();
    for l in 0..=10 {
        let lf = f64::from(l);
        let check = check_shape_invariance(&m, lf);
        let want = (2.0 * lf + 3.0) / ((lf + 1.0).powi(2) * (lf + 2.0).powi(2));
        let rel = (check.rest_extracted - want).abs() / want;
        c.add(
            format!("l = {l}"),
            check.holds && check.raw_residual_max == 0.0 && rel < 1e-14,
            format!(
                "residual `{}` (raw max {:e}), rest {:.17} vs {:.17}",
                check.residual, check.raw_residual_max, check.rest_extracted, want
            ),
        );
    }
    let r0 = check_shape_invariance(&m, 0.0).rest_extracted;
    c.add("R(0) = 0.75 exactly", r0 == 0.75, format!("{r0:.17}"));
    c
}

// ---------------------------------------------------------------------------
// 6. algebraic spectrum

fn algebraic_spectrum_check() -> Checks {
    let mut c = Checks::default();
    let m = Coulomb::default();
    let mut worst_tele = 0.0_f64;
    let mut worst_shifted = 0.0_f64;
    let mut failure = None;
    for l in 0..=5 {
        let lf = f64::from(l);
        let spec = match algebraic_spectrum(&m, lf, 21) {
            Ok(s) => s,
            Err(e) => {
                failure = Some(e.to_string());
                continue;
            }
        };
        let e0 = (lf + 1.0).powi(-2);
        for level in &spec.levels {
            let n = level.n as f64;
            let tele = e0 - (lf + n + 1.0).powi(-2);
            worst_tele = worst_tele.max((level.e_susy - tele).abs());
            // The displayed formula, summed term by term.
            let displayed = e0
                + (1..=level.n)
                    .map(|m| {
                        let x = lf + m as f64;
                        (2.0 * x + 1.0) / (x * x * (x + 1.0) * (x + 1.0))
                    })
                    .sum::<f64>();
            worst_shifted = worst_shifted.max((level.e_shifted - displayed).abs());
            worst_shifted = worst_shifted.max((level.e_shifted - (level.e_susy + e0)).abs());
        }
    }
    c.add(
        "e_susy vs 1/(l+1)^2 - 1/(l+n+1)^2, n <= 20, l <= 5",
        failure.is_none() && worst_tele < 1e-12,
        format!("max |dev| {worst_tele:.2e}{}", failure.clone().unwrap_or_default()),
    );
    c.add(
        "e_shifted vs displayed sum",
        failure.is_none() && worst_shifted < 1e-12,
        format!("max |dev| {worst_shifted:.2e}"),
    );
    c
}

// ---------------------------------------------------------------------------
// 7. ground-state series

fn factorial(j: u32) -> BigInt {
    (1..=j).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn alternating(j: u32) -> BigRational {
    if j % 2 == 1 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// Substitutes `Σ c_j n^j` into `W ψ + Δ¹ψ` with `W = 1 - 1/n` and solves
/// the resulting coefficient equations exactly, choosing `c_1 = N = 1`.
fn rational_oracle(terms: usize) -> Vec<BigRational> {
    // n^-1:  -c_0 = 0
    // n^j:    c_j - c_{j+1} + (j+1) c_{j+1} = 0
    let mut c = vec![BigRational::zero(); terms];
    c[1] = BigRational::one();
    for j in 1..terms - 1 {
        c[j + 1] = -c[j].clone() / BigRational::from_integer(BigInt::from(j));
    }
    c
}

fn ground_state_series() -> Checks {
    let mut c = Checks::default();
    let w = Coulomb::default().superpotential(0.0);
    let series = match solve_ground_state_series(&w, 80) {
        Ok(s) => s,
        Err(e) => {
            c.add("solver", false, e.to_string());
            return c;
        }
    };
    let oracle = rational_oracle(21);
    let n = BigRational::from_float(series.normalization).unwrap();

    c.add(
        "c_0 = 0",
        series.coefficients[0] == 0.0 && oracle[0].is_zero(),
        format!("c_0 = {}", series.coefficients[0]),
    );

    // As stated: c_j = (-1)^{j-1} N / j!.
    let stated: Vec<u32> = (1..=20)
        .filter(|&j| {
            let want = alternating(j) * n.clone() / BigRational::from_integer(factorial(j));
            oracle[j as usize] != want
        })
        .collect();
    c.add(
        "c_j = (-1)^{j-1} N / j!, j <= 20 (rational)",
        stated.is_empty(),
        format!("mismatch at j = {stated:?}"),
    );

    // The form the recurrence j c_{j+1} + c_j = 0 actually produces.
    let shifted: Vec<u32> = (1..=20)
        .filter(|&j| {
            let want = alternating(j) * n.clone() / BigRational::from_integer(factorial(j - 1));
            oracle[j as usize] != want
        })
        .collect();
    c.add(
        "c_j = (-1)^{j-1} N / (j-1)!, j <= 20 (rational)",
        shifted.is_empty(),
        format!("mismatch at j = {shifted:?}"),
    );

    let worst_rel = (1..=20)
        .map(|j| {
            let exact = &oracle[j];
            let got = BigRational::from_float(series.coefficients[j]).unwrap();
            let rel = ((got - exact) / exact).abs();
            rel_to_f64(&rel)
        })
        .fold(0.0, f64::max);
    c.add(
        "solver coefficients vs rational oracle",
        worst_rel < 1e-14,
        format!("max relative deviation {worst_rel:.1e}"),
    );

    let worst = (1..=10)
        .map(|n| {
            let x = f64::from(n);
            (series.eval(x) - series.normalization * x * (-x).exp()).abs()
        })
        .fold(0.0, f64::max);
    c.add(
        "80-term series vs N n e^{-n}, n in [1, 10]",
        worst < 1e-10,
        format!("max |dev| {worst:.2e}"),
    );
    c.add(
        "closed form detected as n e^{-n}",
        series
            .closed_form
            .is_some_and(|cf| cf.power == 1 && cf.decay == 1.0),
        format!("{:?}", series.closed_form),
    );
    c
}

fn rel_to_f64(r: &BigRational) -> f64 {
    let scale = BigInt::from(10).pow(30);
    let scaled = (r * BigRational::from_integer(scale)).to_integer();
    scaled.to_string().parse::<f64>().unwrap_or(f64::INFINITY) * 1e-30
}

// ---------------------------------------------------------------------------
// 8. oracle cross-validation

fn coulomb_spectrum(n: usize, plus: bool) -> Result<(EigenReport, lattice_susy::TruncatedOperator), String> {
    let m = Coulomb::default();
    let p = build_partner_potentials(&m.superpotential(0.0));
    let v = if plus { &p.v_plus } else { &p.v_minus };
    let window = Window::half_line(n).map_err(|e| e.to_string())?;
    let op = assemble_hamiltonian(v.into(), window, n, &lattice_susy::Units::default())
        .map_err(|e| e.to_string())?;
    let eig = diagonalize(&op, DEFAULT_TOL).map_err(|e| e.to_string())?;
    Ok((eig, op))
}

fn zero_mode(n: usize) -> SampledFunction {
    SampledFunction::from_real_fn(Window::half_line(n).unwrap(), |n| {
        n as f64 * (-(n as f64)).exp()
    })
}

fn oracle_cross_validation() -> Checks {
    let mut c = Checks::default();
    let (small, big) = match (coulomb_spectrum(200, false), coulomb_spectrum(400, false)) {
        (Ok(s), Ok(b)) => (s, b),
        (a, b) => {
            c.add("assembly/diagonalization", false, format!("{:?} {:?}", a.err(), b.err()));
            return c;
        }
    };
    let targets = [(0.0, 2e-2), (0.75, 5e-2)];
    for (k, (target, tol)) in targets.into_iter().enumerate() {
        let e400 = big.0.eigenvalues[k];
        let e200 = small.0.eigenvalues[k];
        let gap400 = (e400 - target).abs();
        let gap200 = (e200 - target).abs();
        c.add(
            format!("level {k} within {tol:e} of {target} at N = 400"),
            gap400 < tol,
            format!("eigenvalue {e400:.6}, gap {gap400:.4e}"),
        );
        c.add(
            format!("level {k} gap shrinks from N = 200 to 400"),
            gap400 < gap200,
            format!("gap {gap200:.6e} -> {gap400:.6e}"),
        );
    }
    let r200 = residual_check(&small.1, &zero_mode(200), 0.0);
    let r400 = residual_check(&big.1, &zero_mode(400), 0.0);
    match (r200, r400) {
        (Ok(a), Ok(b)) => {
            c.add("residual of n e^{-n} < 1e-2 at N = 400", b < 1e-2, format!("{b:.4e}"));
            c.add(
                "residual decreases from N = 200 to 400",
                b < a,
                format!("{a:.6e} -> {b:.6e}"),
            );
        }
        (a, b) => c.add("residual_check", false, format!("{a:?} {b:?}")),
    }
    c
}

// ---------------------------------------------------------------------------
// 9. SUSY partnership

fn partnership() -> Checks {
    let mut c = Checks::default();
    let runs = [200, 400].map(|n| (coulomb_spectrum(n, false), coulomb_spectrum(n, true)));
    let [(Ok(m200), Ok(p200)), (Ok(m400), Ok(p400))] = runs else {
        c.add("assembly/diagonalization", false, "failed");
        return c;
    };
    for k in 0..3 {
        let lower = m400.0.eigenvalues[k + 1];
        let upper = p400.0.eigenvalues[k];
        let drift = (m400.0.eigenvalues[k + 1] - m200.0.eigenvalues[k + 1])
            .abs()
            .max((p400.0.eigenvalues[k] - p200.0.eigenvalues[k]).abs());
        let tol = drift.max(1e-2);
        let gap = (lower - upper).abs();
        c.add(
            format!("A^+A level {} vs AA^+ level {k}", k + 1),
            gap <= tol,
            format!("{lower:.6} vs {upper:.6}, |diff| {gap:.3e}, tolerance {tol:.3e}"),
        );
    }

    let n = 400;
    let window = Window::half_line(n).unwrap();
    let excited = SampledFunction::from_real_values(window, &m400.0.eigenvector(1)).unwrap();
    let pair = ladder_pair(&Coulomb::default().superpotential(0.0));
    // Reaching 2N offsets covers every coupling inside the window, so the
    // zero-extended sum is complete.
    match intertwine(&pair.a, &excited, window, &SummationPolicy::paired(2 * n)) {
        Ok(Intertwined::Image(img)) => {
            let ground = SampledFunction::from_real_values(window, &p400.0.eigenvector(0)).unwrap();
            let overlap = img.inner(&ground).norm();
            c.add(
                "overlap of A psi_1 with ground state of AA^+",
                overlap > 0.99,
                format!("{overlap:.6}"),
            );
        }
        other => c.add("intertwine", false, format!("{other:?}")),
    }
    c
}

// ---------------------------------------------------------------------------
// 10. eigensolver

fn eigensolver() -> Checks {
    let mut c = Checks::default();
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let mut worst = 0.0_f64;
    for _ in 0..10 {
        let mut h = DenseMatrix::zeros(50, 50);
        for i in 0..50 {
            for j in 0..=i {
                let v: f64 = rng.gen_range(-1.0..1.0);
                h[(i, j)] = v;
                h[(j, i)] = v;
            }
        }
        match jacobi_eigen(&h, DEFAULT_TOL) {
            Ok(r) => worst = worst.max(r.reconstruction_residual(&h) / h.max_abs()),
            Err(_) => worst = f64::INFINITY,
        }
    }
    c.add(
        "random symmetric 50x50 reconstruction",
        worst < 1e-8,
        format!("max relative residual {worst:.2e}"),
    );

    let cases = [(2.0, 1.0, 2.0), (1.0, 0.0, -3.0), (4.0, -2.5, 0.5), (1e-3, 7.0, 1e3)];
    let mut worst = 0.0_f64;
    for (a, b, d) in cases {
        let h = DenseMatrix::from_rows(&[vec![a, b], vec![b, d]]).unwrap();
        let mean = 0.5 * (a + d);
        let radius = (0.25 * (a - d) * (a - d) + b * b).sqrt();
        match jacobi_eigen(&h, DEFAULT_TOL) {
            Ok(r) => {
                worst = worst.max((r.eigenvalues[0] - (mean - radius)).abs());
                worst = worst.max((r.eigenvalues[1] - (mean + radius)).abs());
            }
            Err(_) => worst = f64::INFINITY,
        }
    }
    c.add("2x2 analytic eigenvalues", worst <= 1e-12, format!("max |err| {worst:.2e}"));
    c
}

type Criterion = (u32, &'static str, fn() -> Checks);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "kernel exactness", kernels),
        (2, "spectral symbol", spectral_symbol),
        (3, "semigroup and Leibniz", semigroup_and_leibniz),
        (4, "power-law regularization", power_law),
        (5, "Coulomb shape invariance", coulomb_shape_invariance),
        (6, "algebraic spectrum", algebraic_spectrum_check),
        (7, "ground-state series", ground_state_series),
        (8, "oracle cross-validation", oracle_cross_validation),
        (9, "SUSY partnership numerics", partnership),
        (10, "eigensolver self-checks", eigensolver),
    ];
    let mut failed = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let checks = run();
        let ok = checks.0.iter().all(|c| c.ok);
        println!(
            "criterion {id:>2} {name}: {} ({:.2?})",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed()
        );
        for c in &checks.0 {
            println!(
                "    [{}] {}: {}",
                if c.ok { "ok" } else { "FAIL" },
                c.label,
                c.detail
            );
        }
        if !ok {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
