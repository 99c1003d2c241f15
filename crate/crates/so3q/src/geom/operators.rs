use num_complex::Complex64;
use num_integer::Integer;

use super::{basis_phi, gram_matrix, phi, QuantizationContext, ThetaSection};
use crate::tqft::{CMatrix, TorusVector};
use crate::{Error, Result};

/// `(-1)^(ab)`, the spin lift of the translation by `a mu + b lambda`.
pub fn spin_sign(a: i64, b: i64) -> f64 {
    if (a * b).rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `T(gamma) s = -eps (T*_{gamma/N} s + T*_{-gamma/N} s)` with `eps = (-1)^(ab)`.
fn apply_curve(a: i64, b: i64, s: &ThetaSection) -> ThetaSection {
    let eps = spin_sign(a, b);
    s.translate_steps(a, b)
        .add(&s.translate_steps(-a, -b))
        .expect("same context")
        .scale(Complex64::new(-eps, 0.0))
}

/// Matrix of the curve operator of `a mu + b lambda` in `Phi_1, ..., Phi_r`,
/// computed by quadrature projection onto the basis.
pub fn curve_operator_geom(a: i64, b: i64, ctx: &QuantizationContext) -> Result<CMatrix> {
    if a.gcd(&b) != 1 {
        return Err(Error::NotPrimitive(a, b));
    }
    let basis = basis_phi(ctx);
    let images: Vec<ThetaSection> = basis.iter().map(|s| apply_curve(a, b, s)).collect();
    gram_matrix(&basis, &images)
}

/// `I'_r`: `e_l -> Phi_{l+1}`, extended linearly.
pub fn iso_from_skein(v: &TorusVector, ctx: &QuantizationContext) -> Result<ThetaSection> {
    if v.coeffs.len() != ctx.r as usize {
        return Err(Error::DimensionMismatch {
            expected: ctx.r as usize,
            got: v.coeffs.len(),
        });
    }
    let mut out = ThetaSection::zero(ctx);
    for (l, c) in v.coeffs.iter().enumerate() {
        out = out.add(&phi(ctx, l as i64 + 1).scale(*c))?;
    }
    Ok(out)
}

/// Inverse of [`iso_from_skein`] read off the coefficients; the
/// non-alternating part of `s` is discarded.
pub fn iso_to_skein(s: &ThetaSection) -> TorusVector {
    let ctx = &s.ctx;
    let n = ctx.n();
    let c = ctx.psi_prefactor();
    let a = s.coeffs();
    let coeffs = (1..=ctx.r as usize)
        .map(|l| (a[l] - a[n - l]) / (std::f64::consts::SQRT_2 * c) * s.halfform_scale)
        .collect();
    TorusVector { r: ctx.r, coeffs }
}

/// Inverse of [`iso_from_skein`] by quadrature projections `<Phi_{l+1}, s>`.
pub fn iso_to_skein_quadrature(s: &ThetaSection) -> Result<TorusVector> {
    let basis = basis_phi(&s.ctx);
    let g = gram_matrix(&basis, std::slice::from_ref(s))?;
    Ok(TorusVector {
        r: s.ctx.r,
        coeffs: g.column(0).iter().copied().collect(),
    })
}
