use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use num_complex::Complex64;

use super::{basis_phi, gram_of_values, QuantizationContext};
use crate::tqft::{max_abs_diff, projective_deviation, rep_s, rep_t, CMatrix};
use crate::Result;

/// Generator whose action on the lattice basis defines the new frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrameGenerator {
    /// New basis `(mu, mu + lambda)`, `tau -> tau + 1`.
    T,
    /// New basis `(lambda, -mu)`, `tau -> -1/tau`.
    S,
}

impl FrameGenerator {
    /// Columns are the new `mu`, `lambda` in old coordinates.
    pub fn matrix(self) -> [[i64; 2]; 2] {
        match self {
            Self::T => [[1, 1], [0, 1]],
            Self::S => [[0, -1], [1, 0]],
        }
    }
}

impl fmt::Display for FrameGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::T => "T",
            Self::S => "S",
        })
    }
}

pub type PointwiseSection = Box<dyn Fn(f64, f64) -> Complex64 + Sync + Send>;

/// `Psi~_0` of the frame with columns `(a, c)`, `(b, d)`: the unit theta
/// section for the new lattice basis, written back in the `Omega_mu` frame.
fn frame_psi0(ctx: QuantizationContext, m: [[i64; 2]; 2]) -> impl Fn(f64, f64) -> Complex64 + Sync + Send + Clone {
    let [[a, b], [c, d]] = m;
    let nf = ctx.n() as f64;
    let tau = ctx.tau;
    let w = tau * c as f64 + a as f64;
    let tau_t = (tau * d as f64 + b as f64) / w;
    let alpha = if (a * c).rem_euclid(2) == 1 { 0.5 } else { 0.0 };
    let beta = if (b * d).rem_euclid(2) == 1 { 0.5 } else { 0.0 };
    let pref = ctx.psi_prefactor() / w.sqrt();
    let width = ((-ctx.series_tol.ln()) / (PI * nf * tau_t.im)).sqrt().ceil() as i64 + 2;
    move |p: f64, q: f64| {
        // inverse of a unimodular matrix
        let pt = d as f64 * p - b as f64 * q;
        let qt = -(c as f64) * p + a as f64 * q;
        let zt = (tau * q + p) / w;
        let center = (-zt.im / tau_t.im - alpha).round() as i64;
        let mut g = Complex64::new(0.0, 0.0);
        for k in center - width..=center + width {
            let u = k as f64 + alpha;
            let arg = (zt + beta) * (2.0 * PI * nf * u) + tau_t * (PI * nf * u * u);
            g += (Complex64::i() * arg).exp();
        }
        let t = (Complex64::i() * (nf * PI * qt) * (tau_t * qt + pt)).exp();
        g * t * pref
    }
}

/// `Phi~_1, ..., Phi~_r` of the frame, as pointwise sections.
pub fn frame_basis_values(ctx: &QuantizationContext, gen: FrameGenerator) -> Vec<PointwiseSection> {
    let m = gen.matrix();
    let (lb, ld) = (m[0][1], m[1][1]);
    let nf = ctx.n() as f64;
    let psi0 = frame_psi0(*ctx, m);
    let psi = move |l: i64| {
        let sign = if (lb * ld * l).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let (xp, xq) = (l as f64 * lb as f64 / nf, l as f64 * ld as f64 / nf);
        let f = psi0.clone();
        move |p: f64, q: f64| sign * Complex64::from_polar(1.0, -nf * PI * (xp * q - xq * p)) * f(p + xp, q + xq)
    };
    (1..=ctx.r as i64)
        .map(|l| {
            let (plus, minus) = (psi(l), psi(-l));
            Box::new(move |p: f64, q: f64| (plus(p, q) - minus(p, q)) * FRAC_1_SQRT_2) as PointwiseSection
        })
        .collect()
}

/// Change of basis from the transformed frame to `Phi_1, ..., Phi_r`,
/// compared with the skein-side matrix.
#[derive(Clone, Debug)]
pub struct ModularReport {
    pub generator: FrameGenerator,
    pub r: u32,
    pub tau: Complex64,
    /// `measured[m][l] = <Phi_{m+1}, Phi~_{l+1}>`.
    pub measured: CMatrix,
    /// `rep_T` or `rep_S`.
    pub predicted: CMatrix,
    /// Unit phase `c` minimizing `measured - c * predicted`.
    pub global_phase: Complex64,
    pub projective_deviation: f64,
    /// `max_l |1 - sum_m |measured[m][l]|^2|`: zero when the new basis lies
    /// in the alternating subspace.
    pub in_space_residual: f64,
    /// For `T`: `exp(pi i (l^2 - 1) / N)`, `l = 1..r`; empty for `S`.
    pub literal_phases: Vec<Complex64>,
    /// Deviation from the literal prediction without any phase freedom.
    pub literal_deviation: f64,
}

impl ModularReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.projective_deviation < tol && self.in_space_residual < tol
    }
}

pub fn modular_phase_check(gen: FrameGenerator, ctx: &QuantizationContext) -> Result<ModularReport> {
    let r = ctx.r;
    let basis = basis_phi(ctx);
    let lhs: Vec<_> = basis
        .iter()
        .map(|s| {
            let s = s.clone();
            move |p: f64, q: f64| s.eval(p, q).expect("series window checked")
        })
        .collect();
    ctx.series_window()?;
    let rhs = frame_basis_values(ctx, gen);
    let measured = gram_of_values(ctx, &lhs, &rhs)?;
    let predicted = match gen {
        FrameGenerator::T => rep_t(r)?,
        FrameGenerator::S => rep_s(r)?,
    };
    let (global_phase, dev) = projective_deviation(&measured, &predicted);
    let in_space_residual = (0..r as usize)
        .map(|l| (1.0 - measured.column(l).iter().map(|x| x.norm_sqr()).sum::<f64>()).abs())
        .fold(0.0, f64::max);
    let nf = ctx.n() as f64;
    let (literal_phases, literal_deviation) = match gen {
        FrameGenerator::T => {
            let lit: Vec<Complex64> = (1..=r as i64)
                .map(|l| Complex64::from_polar(1.0, PI * (l * l - 1) as f64 / nf))
                .collect();
            let lit_m = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(lit.clone()));
            (lit, max_abs_diff(&measured, &lit_m))
        }
        FrameGenerator::S => (Vec::new(), max_abs_diff(&measured, &predicted)),
    };
    Ok(ModularReport {
        generator: gen,
        r,
        tau: ctx.tau,
        measured,
        predicted,
        global_phase,
        projective_deviation: dev,
        in_space_residual,
        literal_phases,
        literal_deviation,
    })
}
