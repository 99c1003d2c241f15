use std::f64::consts::PI;

use num_complex::Complex64;

use super::{
    basis_phi, basis_psi, curve_operator_geom, gram_matrix, iso_from_skein, modular_phase_check, psi,
    translate_pointwise, unnormalized_norm_sq, FrameGenerator, QuantizationContext, ThetaSection,
};
use crate::tqft::{curve_operator_skein, CMatrix, TorusVector};
use crate::Result;

/// One named residual with its tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Residuals of the geometric-side identities at one `(r, tau)`.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub r: u32,
    pub tau: Complex64,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, residual: f64, tolerance: f64) {
        self.checks.push(Check {
            name: name.to_string(),
            residual,
            tolerance,
            passed: residual.is_finite() && residual < tolerance,
        });
    }
}

/// Deterministic sample points spread over and slightly beyond `[0,1)^2`.
pub fn sample_points() -> Vec<(f64, f64)> {
    let mut pts = Vec::new();
    for i in 0..5 {
        for j in 0..5 {
            let p = -0.3 + 0.317 * i as f64 + 0.011 * j as f64;
            let q = -0.2 + 0.283 * j as f64 + 0.007 * i as f64;
            pts.push((p, q));
        }
    }
    pts
}

fn max_offdiag_identity(m: &CMatrix) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((m[(i, j)] - want).norm());
        }
    }
    worst
}

/// Largest singular value.
pub fn op_norm(m: &CMatrix) -> f64 {
    m.clone().singular_values().iter().copied().fold(0.0, f64::max)
}

/// Residuals of `T*_{mu/N} t = t` and of `T*_mu T*_lambda = e^{2 pi i/N} T*_lambda T*_mu`
/// (composition applies the right factor first), pointwise on all `Psi_l`,
/// relative to the largest value sampled.
pub fn heisenberg_residuals(ctx: &QuantizationContext) -> Result<(f64, f64)> {
    ctx.series_window()?;
    let nf = ctx.n() as f64;
    let step = 1.0 / nf;
    let pts = sample_points();

    let frame = |p: f64, q: f64| ctx.frame_t(p, q);
    let moved = translate_pointwise(ctx, frame, step, 0.0);
    let res_i = pts
        .iter()
        .map(|&(p, q)| (moved(p, q) - frame(p, q)).norm() / frame(p, q).norm())
        .fold(0.0, f64::max);

    let omega = Complex64::from_polar(1.0, 2.0 * PI / nf);
    let mut res_ii = 0.0f64;
    for l in 0..ctx.n() as i64 {
        let s = psi(ctx, l);
        let f = |p: f64, q: f64| s.eval(p, q).expect("window checked");
        let lam_then_mu = translate_pointwise(ctx, translate_pointwise(ctx, f, 0.0, step), step, 0.0);
        let mu_then_lam = translate_pointwise(ctx, translate_pointwise(ctx, f, step, 0.0), 0.0, step);
        let scale = pts.iter().map(|&(p, q)| f(p, q).norm()).fold(0.0, f64::max);
        for &(p, q) in &pts {
            let d = (lam_then_mu(p, q) - omega * mu_then_lam(p, q)).norm() / scale;
            res_ii = res_ii.max(d);
        }
    }
    Ok((res_i, res_ii))
}

/// `max_l |T*_{mu/N} Psi_l - e^{2 pi i l/N} Psi_l|` pointwise, relative.
pub fn eigen_residual(ctx: &QuantizationContext) -> Result<f64> {
    ctx.series_window()?;
    let nf = ctx.n() as f64;
    let mut worst = 0.0f64;
    for (l, s) in basis_psi(ctx).iter().enumerate() {
        let f = |p: f64, q: f64| s.eval(p, q).expect("window checked");
        let moved = translate_pointwise(ctx, f, 1.0 / nf, 0.0);
        let ev = Complex64::from_polar(1.0, 2.0 * PI * l as f64 / nf);
        for (p, q) in sample_points() {
            let v = f(p, q);
            worst = worst.max((moved(p, q) - ev * v).norm() / v.norm().max(1e-300).max(1e-3));
        }
    }
    Ok(worst)
}

/// Largest relative violation of `s(p+m, q+n) = exp(-N pi i (x_p n - x_q m)) ...`
/// expressed for `g`: `g(p+m, q+n) = exp(-N pi i (tau n^2 + 2n(p + tau q))) g(p, q)`.
pub fn quasi_periodicity_residual(s: &ThetaSection) -> Result<f64> {
    let nf = s.ctx.n() as f64;
    let tau = s.ctx.tau;
    let mut worst = 0.0f64;
    for (p, q) in sample_points() {
        let g0 = s.g(p, q)?;
        for (m, n) in [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0)] {
            let factor = (-Complex64::i() * nf * PI * (tau * (n * n) + (tau * q + p) * (2.0 * n))).exp();
            let g1 = s.g(p + m, q + n)?;
            worst = worst.max((g1 - factor * g0).norm() / (factor * g0).norm().max(1e-12));
        }
    }
    Ok(worst)
}

/// `I(Z'(gamma)) - T(gamma)(I)` as an operator norm on the alternating space.
pub fn intertwining_residual(ctx: &QuantizationContext, a: i64, b: i64) -> Result<f64> {
    let r = ctx.r as usize;
    let skein = curve_operator_skein(a, b, ctx.r)?;
    let geom = curve_operator_geom(a, b, ctx)?;
    let basis = basis_phi(ctx);
    let images: Vec<ThetaSection> = (0..r)
        .map(|l| iso_from_skein(&TorusVector::basis(ctx.r, l), ctx))
        .collect::<Result<_>>()?;
    let iso = gram_matrix(&basis, &images)?;
    Ok(op_norm(&(&iso * skein - geom * iso)))
}

/// Run the full geometric verification suite.
pub fn verify(ctx: &QuantizationContext) -> Result<VerifyReport> {
    let mut rep = VerifyReport {
        r: ctx.r,
        tau: ctx.tau,
        checks: Vec::new(),
    };
    let nf = ctx.n() as f64;
    let b = ctx.tau.im;

    let raw = unnormalized_norm_sq(ctx)?;
    let want = (8.0 * PI * PI / (nf * b)).sqrt();
    rep.push("unnormalized_norm_g0", (raw - want).abs() / want, 1e-8);

    let psis = basis_psi(ctx);
    rep.push("gram_psi", max_offdiag_identity(&gram_matrix(&psis, &psis)?), 1e-6);
    let phis = basis_phi(ctx);
    rep.push("gram_phi", max_offdiag_identity(&gram_matrix(&phis, &phis)?), 1e-6);

    let (h1, h2) = heisenberg_residuals(ctx)?;
    rep.push("heisenberg_frame_fixed", h1, 1e-10);
    rep.push("heisenberg_commutation", h2, 1e-10);
    rep.push("psi_eigenvalues", eigen_residual(ctx)?, 1e-9);

    let mut qp = 0.0f64;
    for s in &psis {
        qp = qp.max(quasi_periodicity_residual(s)?);
    }
    rep.push("quasi_periodicity", qp, 1e-9);

    let mut odd = 0.0f64;
    for s in &phis {
        for (p, q) in sample_points() {
            odd = odd.max((s.eval(p, q)? + s.eval(-p, -q)?).norm());
        }
    }
    rep.push("phi_odd", odd, 1e-9);

    let geom_mu = curve_operator_geom(1, 0, ctx)?;
    let mut eig = 0.0f64;
    for l in 1..=ctx.r as usize {
        let want = -2.0 * (2.0 * PI * l as f64 / nf).cos();
        eig = eig.max((geom_mu[(l - 1, l - 1)] - want).norm());
    }
    rep.push("curve_mu_spectrum", eig, 1e-10);

    for (name, a, bb) in [
        ("intertwining_mu", 1, 0),
        ("intertwining_lambda", 0, 1),
        ("intertwining_mu_plus_lambda", 1, 1),
    ] {
        rep.push(name, intertwining_residual(ctx, a, bb)?, 1e-8);
    }

    for gen in [FrameGenerator::T, FrameGenerator::S] {
        let m = modular_phase_check(gen, ctx)?;
        rep.push(&format!("modular_{gen}_projective"), m.projective_deviation, 1e-6);
        rep.push(&format!("modular_{gen}_in_space"), m.in_space_residual, 1e-6);
    }
    Ok(rep)
}
