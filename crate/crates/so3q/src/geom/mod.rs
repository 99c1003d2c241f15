//! Geometric quantization of the torus at level `r + 1/2`.
//!
//! Points of `V/Λ` are written `x = p mu + q lambda` with `(p, q)` in
//! `[0,1)^2` and complex coordinate `z = p + tau q`. A holomorphic section is
//! `g(z) t(p, q)` with `t = exp(N pi i q (p + tau q))`, `N = 2r+1`, and
//! `g(z) = sum_M rho_M exp(2 pi i M z)`. Invariant sections are determined by
//! `rho_0, ..., rho_{2r}`; internally they are stored as the `N`-periodic
//! Gaussian coefficients `a_m = rho_m exp(-pi i tau m^2 / N)`.

mod modular;
mod operators;
mod quadrature;
mod verify;

use std::f64::consts::PI;

use num_complex::Complex64;

pub use modular::{frame_basis_values, modular_phase_check, FrameGenerator, ModularReport};
pub use operators::{curve_operator_geom, iso_from_skein, iso_to_skein, iso_to_skein_quadrature, spin_sign};
pub use quadrature::{gram_matrix, gram_of_values, inner_product, unnormalized_norm_sq, Grid, QuadratureCache};
pub use verify::{
    eigen_residual, heisenberg_residuals, intertwining_residual, op_norm, quasi_periodicity_residual, sample_points,
    verify, Check, VerifyReport,
};

use crate::{Error, Result};

/// Trapezoid quadrature on `[0,1)^2`, refined by doubling.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureConfig {
    /// Initial points per axis.
    pub points: usize,
    /// Accept once doubling changes results by less than this (relative).
    pub refine_until: f64,
    pub max_points: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            points: 128,
            refine_until: 1e-8,
            max_points: 4096,
        }
    }
}

/// Level, modular parameter and numerical settings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuantizationContext {
    pub r: u32,
    pub tau: Complex64,
    pub quad: QuadratureConfig,
    pub series_tol: f64,
}

impl QuantizationContext {
    pub fn new(r: u32, tau: Complex64) -> Result<Self> {
        if r < 3 {
            return Err(Error::InvalidLevel(r));
        }
        if tau.im.is_nan() || tau.im <= 0.0 || !tau.re.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "tau = {tau} must lie in the upper half plane"
            )));
        }
        Ok(Self {
            r,
            tau,
            quad: QuadratureConfig::default(),
            series_tol: 1e-14,
        })
    }

    /// `N = 2r + 1`, the dimension of the full section space.
    pub fn n(&self) -> usize {
        2 * self.r as usize + 1
    }

    /// Symplectic volume of the fundamental domain.
    pub fn volume(&self) -> f64 {
        4.0 * PI
    }

    /// `((2r+1) / 4 pi)^(1/4)`, the prefactor making `Psi_0` a unit vector.
    pub fn psi_prefactor(&self) -> f64 {
        (self.n() as f64 / (4.0 * PI)).powf(0.25)
    }

    /// Pointwise hermitian weight of the half-form frame, `sqrt(b / 2 pi)`.
    pub fn halfform_weight(&self) -> f64 {
        (self.tau.im / (2.0 * PI)).sqrt()
    }

    /// Truncation half-width of the theta series, and its hard cap.
    fn series_window(&self) -> Result<i64> {
        let nb = self.n() as f64 * self.tau.im;
        let cap = 50 + 10 * (1.0 / nb.sqrt()).ceil() as i64;
        let k = ((-self.series_tol.ln()) / (PI * nb)).sqrt().ceil() as i64 + 1;
        if k > cap {
            return Err(Error::NonconvergentSeries(cap as usize));
        }
        Ok(k)
    }

    /// `t(p, q) = exp(N pi i q (p + tau q))`.
    pub fn frame_t(&self, p: f64, q: f64) -> Complex64 {
        (Complex64::i() * (self.n() as f64 * PI * q) * (self.tau * q + p)).exp()
    }

    /// `theta_m(p, q)`: the section value of the unit Gaussian coefficient at
    /// residue `m`, summed over `M = m + N n`.
    pub fn residue_series(&self, m: usize, p: f64, q: f64) -> Result<Complex64> {
        let k = self.series_window()?;
        Ok(self.residue_series_k(m, p, q, k))
    }

    fn residue_series_k(&self, m: usize, p: f64, q: f64, k: i64) -> Complex64 {
        let nf = self.n() as f64;
        let shift = m as f64 / nf + q;
        let n0 = (-shift).round() as i64;
        let mut sum = Complex64::new(0.0, 0.0);
        for n in n0 - k..=n0 + k {
            let u = n as f64 + shift;
            let big_m = m as f64 + nf * n as f64;
            let arg = self.tau * (PI * nf * u * u) + PI * p * (2.0 * big_m + nf * q);
            sum += (Complex64::i() * arg).exp();
        }
        sum
    }
}

/// Invariant section of `L^r (x) L^(1/2) (x) delta`, times the half-form frame.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaSection {
    pub ctx: QuantizationContext,
    /// Gaussian coefficients `a_0, ..., a_{2r}`.
    coeffs: Vec<Complex64>,
    pub halfform_scale: Complex64,
}

impl ThetaSection {
    pub fn zero(ctx: &QuantizationContext) -> Self {
        Self::from_coeffs(ctx, vec![Complex64::new(0.0, 0.0); ctx.n()]).expect("length N")
    }

    /// Section with Gaussian coefficients `a_m`.
    pub fn from_coeffs(ctx: &QuantizationContext, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != ctx.n() {
            return Err(Error::DimensionMismatch {
                expected: ctx.n(),
                got: coeffs.len(),
            });
        }
        Ok(Self {
            ctx: *ctx,
            coeffs,
            halfform_scale: Complex64::new(1.0, 0.0),
        })
    }

    /// Section determined by `rho_0, ..., rho_{2r}` through
    /// `rho_{m+Nn} = exp(n pi i tau (2m + N n)) rho_m`.
    pub fn from_rho(ctx: &QuantizationContext, rho: Vec<Complex64>) -> Result<Self> {
        let n = ctx.n() as f64;
        let coeffs = rho
            .iter()
            .enumerate()
            .map(|(m, r)| r * (-Complex64::i() * PI * ctx.tau * ((m * m) as f64 / n)).exp())
            .collect();
        Self::from_coeffs(ctx, coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `rho_0, ..., rho_{2r}`.
    pub fn rho(&self) -> Vec<Complex64> {
        let n = self.ctx.n() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(m, a)| a * (Complex64::i() * PI * self.ctx.tau * ((m * m) as f64 / n)).exp())
            .collect()
    }

    /// `rho_M` for any integer `M`, from the quasi-periodic extension.
    pub fn rho_at(&self, big_m: i64) -> Complex64 {
        let n = self.ctx.n() as i64;
        let m = big_m.rem_euclid(n);
        let k = (big_m - m) / n;
        let rho_m = self.rho()[m as usize];
        rho_m * (Complex64::i() * PI * self.ctx.tau * (k * (2 * m + n * k)) as f64).exp()
    }

    /// Full value `g(z) t(p, q)` times the half-form scale.
    pub fn eval(&self, p: f64, q: f64) -> Result<Complex64> {
        let k = self.ctx.series_window()?;
        let mut sum = Complex64::new(0.0, 0.0);
        for (m, a) in self.coeffs.iter().enumerate() {
            if *a != Complex64::new(0.0, 0.0) {
                sum += a * self.ctx.residue_series_k(m, p, q, k);
            }
        }
        Ok(sum * self.halfform_scale)
    }

    /// `g(z)` alone, the value divided by the frame `t` and the half-form scale.
    pub fn g(&self, p: f64, q: f64) -> Result<Complex64> {
        Ok(self.eval(p, q)? / (self.ctx.frame_t(p, q) * self.halfform_scale))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut s = self.clone();
        s.coeffs.iter_mut().for_each(|a| *a *= c);
        s
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut s = self.clone();
        let ratio = other.halfform_scale / self.halfform_scale;
        for (a, b) in s.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * ratio;
        }
        Ok(s)
    }

    fn check_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::InvalidArgument("sections live over different contexts".into()));
        }
        Ok(())
    }

    /// `T*_x` for `x = (alpha mu + beta lambda) / N`:
    /// `a'_{m+beta} = exp(pi i alpha (2m + beta) / N) a_m`.
    pub fn translate_steps(&self, alpha: i64, beta: i64) -> Self {
        let n = self.ctx.n() as i64;
        let mut out = vec![Complex64::new(0.0, 0.0); n as usize];
        for (m, a) in self.coeffs.iter().enumerate() {
            let m = m as i64;
            let phase = Complex64::from_polar(1.0, PI * ((alpha * (2 * m + beta)).rem_euclid(2 * n)) as f64 / n as f64);
            out[(m + beta).rem_euclid(n) as usize] += a * phase;
        }
        Self {
            ctx: self.ctx,
            coeffs: out,
            halfform_scale: self.halfform_scale,
        }
    }

    /// `T*_x` for lattice coordinates `x = (c_mu, c_lambda)`, both multiples
    /// of `1/N`.
    pub fn translate(&self, c_mu: f64, c_lambda: f64) -> Result<Self> {
        let n = self.ctx.n() as f64;
        let to_steps = |c: f64| -> Option<i64> {
            let s = c * n;
            ((s - s.round()).abs() < 1e-9 && s.is_finite()).then_some(s.round() as i64)
        };
        match (to_steps(c_mu), to_steps(c_lambda)) {
            (Some(a), Some(b)) => Ok(self.translate_steps(a, b)),
            _ => Err(Error::NotLatticeFraction(c_mu, c_lambda)),
        }
    }
}

/// Pointwise Heisenberg translation,
/// `(T*_x f)(p, q) = exp(-i N pi (x_p q - x_q p)) f(p + x_p, q + x_q)`.
pub fn translate_pointwise<F>(ctx: &QuantizationContext, f: F, xp: f64, xq: f64) -> impl Fn(f64, f64) -> Complex64
where
    F: Fn(f64, f64) -> Complex64,
{
    let n = ctx.n() as f64;
    move |p, q| Complex64::from_polar(1.0, -n * PI * (xp * q - xq * p)) * f(p + xp, q + xq)
}

/// Reduce an index modulo `N` onto `1..=r` using `Phi_{-l} = -Phi_l`:
/// `None` for `l = 0 mod N`, else `(k, sign)` with `Phi_l = sign * Phi_k`.
pub fn fold_index(l: i64, r: u32) -> Option<(usize, f64)> {
    let n = 2 * r as i64 + 1;
    let l = l.rem_euclid(n);
    if l == 0 {
        None
    } else if l <= r as i64 {
        Some((l as usize, 1.0))
    } else {
        Some(((n - l) as usize, -1.0))
    }
}

/// Orthonormal basis `Psi_0, ..., Psi_{2r}`, `Psi_l = (T*_{lambda/N})^l Psi_0`.
pub fn basis_psi(ctx: &QuantizationContext) -> Vec<ThetaSection> {
    let n = ctx.n();
    let c = ctx.psi_prefactor();
    (0..n)
        .map(|l| {
            let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
            coeffs[l] = Complex64::new(c, 0.0);
            ThetaSection::from_coeffs(ctx, coeffs).expect("length N")
        })
        .collect()
}

/// `Psi_l` for any integer `l`, read modulo `N`.
pub fn psi(ctx: &QuantizationContext, l: i64) -> ThetaSection {
    let n = ctx.n() as i64;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n as usize];
    coeffs[l.rem_euclid(n) as usize] = Complex64::new(ctx.psi_prefactor(), 0.0);
    ThetaSection::from_coeffs(ctx, coeffs).expect("length N")
}

/// `Phi_l = (Psi_l - Psi_{-l}) / sqrt 2` for any integer `l`.
pub fn phi(ctx: &QuantizationContext, l: i64) -> ThetaSection {
    psi(ctx, l)
        .add(&psi(ctx, -l).scale(Complex64::new(-1.0, 0.0)))
        .expect("same context")
        .scale(Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0))
}

/// Orthonormal basis `Phi_1, ..., Phi_r` of the alternating subspace.
pub fn basis_phi(ctx: &QuantizationContext) -> Vec<ThetaSection> {
    (1..=ctx.r as i64).map(|l| phi(ctx, l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fold() {
        assert_eq!(fold_index(0, 3), None);
        assert_eq!(fold_index(7, 3), None);
        assert_eq!(fold_index(4, 3), Some((3, -1.0)));
        assert_eq!(fold_index(-1, 3), Some((1, -1.0)));
        assert_eq!(fold_index(2, 3), Some((2, 1.0)));
    }

    #[test]
    fn rho_round_trip() {
        let ctx = QuantizationContext::new(3, Complex64::new(0.3, 1.7)).unwrap();
        let rho: Vec<Complex64> = (0..7).map(|k| Complex64::new(k as f64, 1.0 - k as f64)).collect();
        let s = ThetaSection::from_rho(&ctx, rho.clone()).unwrap();
        for (a, b) in s.rho().iter().zip(&rho) {
            assert!((a - b).norm() < 1e-12);
        }
    }
}
