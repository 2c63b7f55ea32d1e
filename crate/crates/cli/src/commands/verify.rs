use std::f64::consts::PI;

use clap::ValueEnum;
use lattice_susy::ops::{kernel_coefficient, verify_leibniz, verify_semigroup, Window};
use lattice_susy::shape::check_shape_invariance;
use lattice_susy::sqm::{build_partner_potentials, ladder_pair};
use lattice_susy::{PowerSum, SampledFunction};
use num_complex::Complex64;
use serde_json::json;

use super::Outcome;
use crate::config::RunConfig;
use crate::output::{Report, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Kernels,
    Semigroup,
    Leibniz,
    ShapeInvariance,
    Factorization,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Self::Kernels => "kernels",
            Self::Semigroup => "semigroup",
            Self::Leibniz => "leibniz",
            Self::ShapeInvariance => "shape-invariance",
            Self::Factorization => "factorization",
        }
    }

    fn default_tol(self) -> f64 {
        match self {
            Self::Kernels => 1e-15,
            Self::Semigroup => 1e-3,
            Self::Leibniz => 0.0,
            Self::ShapeInvariance | Self::Factorization => 1e-12,
        }
    }
}

struct Checks {
    table: Table,
    tol: f64,
    pass: bool,
}

impl Checks {
    fn new(tol: f64) -> Self {
        Self {
            table: Table::new("checks", &["check", "value", "residual", "tolerance", "pass"]),
            tol,
            pass: true,
        }
    }

    fn add(&mut self, check: impl Into<String>, value: f64, residual: f64) {
        let ok = residual <= self.tol;
        self.pass &= ok;
        self.table.push(vec![
            check.into().into(),
            value.into(),
            residual.into(),
            self.tol.into(),
            ok.into(),
        ]);
    }
}

pub fn run(suite: Suite, cfg: &RunConfig) -> anyhow::Result<Outcome> {
    let tol = cfg.tol_or(suite.default_tol());
    let mut checks = Checks::new(tol);
    let mut meta = json!({
        "command": "verify",
        "suite": suite.name(),
        "tolerance": tol,
    });
    match suite {
        Suite::Kernels => kernels(&mut checks)?,
        Suite::Semigroup => {
            let window = semigroup(cfg, &mut checks)?;
            meta["window"] = json!(window);
            meta["k_over_pi"] = json!(cfg.k);
            meta["summation"] = json!(cfg.summation);
        }
        Suite::Leibniz => leibniz(cfg, &mut checks)?,
        Suite::ShapeInvariance => {
            meta["model"] = json!(cfg.model);
            meta["l"] = json!(cfg.l);
            meta["units"] = json!(cfg.units);
            shape_invariance(cfg, &mut checks)?;
        }
        Suite::Factorization => {
            meta["model"] = json!(cfg.model);
            meta["l"] = json!(cfg.l);
            meta["units"] = json!(cfg.units);
            meta["potential_labels"] = json!({
                "v_minus": "W^2 - p D1 W, potential of A^+ A",
                "v_plus": "W^2 + p D1 W, potential of A A^+",
            });
            factorization(cfg, &mut checks)?;
        }
    }
    meta["pass"] = json!(checks.pass);
    Ok(Outcome {
        report: Report::new(meta).table(checks.table),
        pass: checks.pass,
    })
}

fn kernels(c: &mut Checks) -> anyhow::Result<()> {
    let k1 = |j| kernel_coefficient(1, j);
    let k2 = |j| kernel_coefficient(2, j);
    for (label, got, want) in [
        ("K1[1]", k1(1)?, -1.0),
        ("K1[2]", k1(2)?, 0.5),
        ("K2[0]", k2(0)?, -PI * PI / 3.0),
        ("K2[1]", k2(1)?, 2.0),
        ("K2[2]", k2(2)?, -0.5),
    ] {
        c.add(label, got, (got - want).abs());
    }
    let mut odd = 0.0_f64;
    let mut even = 0.0_f64;
    for j in 0..=1000_i64 {
        odd = odd.max((k1(-j)? + k1(j)?).abs());
        even = even.max((k2(-j)? - k2(j)?).abs());
    }
    c.add("K1 odd, |j| <= 1000", odd, odd);
    c.add("K2 even, |j| <= 1000", even, even);
    Ok(())
}

fn semigroup(cfg: &RunConfig, c: &mut Checks) -> anyhow::Result<Window> {
    let half = (cfg.window_or(41) / 2) as i64;
    let window = Window::symmetric(half);
    let k = cfg.k * PI;
    let f = SampledFunction::from_fn(window, move |n| Complex64::from_polar(1.0, k * n as f64));
    let r = verify_semigroup(&f, window, &cfg.summation)?;
    c.add(format!("D2 vs D1 D1 on exp(i {} pi n)", cfg.k), r, r);
    Ok(window)
}

fn leibniz(cfg: &RunConfig, c: &mut Checks) -> anyhow::Result<()> {
    let exps: Vec<f64> = (-6..=6).map(|e| f64::from(e) / 2.0).collect();
    let monomials: Vec<PowerSum> = exps
        .iter()
        .enumerate()
        .map(|(i, &e)| PowerSum::monomial((i % 5) as f64 - 2.5, e))
        .collect();
    let mut worst = 0.0_f64;
    for f in &monomials {
        for g in &monomials {
            worst = worst.max(verify_leibniz(f, g));
        }
    }
    c.add(
        format!("monomial pairs, exponents -3..3 step 1/2 ({})", monomials.len().pow(2)),
        worst,
        worst,
    );

    let w = cfg.model()?.superpotential(cfg.l).w;
    let mut worst = 0.0_f64;
    for g in monomials.iter().chain(std::iter::once(&w)) {
        worst = worst.max(verify_leibniz(&w, g));
    }
    c.add(format!("{} superpotential W = {w}", cfg.model), worst, worst);
    Ok(())
}

fn shape_invariance(cfg: &RunConfig, c: &mut Checks) -> anyhow::Result<()> {
    let model = cfg.model()?;
    let check = check_shape_invariance(model.as_ref(), cfg.l);
    let residual = if check.holds {
        0.0
    } else {
        check.residual.max_abs_coefficient()
    };
    c.add(format!("non-constant residual `{}`", check.residual), residual, residual);
    let rel = (check.rest_extracted - check.rest_declared).abs() / check.rest_declared.abs().max(1.0);
    c.add("rest (extracted vs declared)", check.rest_extracted, rel);
    c.add("partner parameter", check.partner_parameter, 0.0);
    Ok(())
}

fn factorization(cfg: &RunConfig, c: &mut Checks) -> anyhow::Result<()> {
    let model = cfg.model()?;
    let sp = model.superpotential(cfg.l);
    let pair = ladder_pair(&sp);
    let partners = build_partner_potentials(&sp);
    let scale = partners
        .v_minus
        .max_abs_coefficient()
        .max(partners.v_plus.max_abs_coefficient())
        .max(1.0);
    let p2 = sp.prefactor * sp.prefactor;
    for (label, op, v) in [
        ("A^+A", pair.lower_hamiltonian(), &partners.v_minus),
        ("AA^+", pair.upper_hamiltonian(), &partners.v_plus),
    ] {
        c.add(format!("{label}: D2 coefficient + p^2"), op.second, (op.second + p2).abs() / scale);
        let first = op.first.max_abs_coefficient();
        c.add(format!("{label}: D1 coefficient"), first, first / scale);
        let dev = (&op.zeroth - v).max_abs_coefficient();
        c.add(format!("{label}: potential `{}`", op.zeroth), dev, dev / scale);
    }
    Ok(())
}
