//! Knot states in the torus space, their L2-norms and the volume sequence.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io;

use num_complex::Complex64;

use crate::geom::{inner_product, iso_from_skein, QuantizationContext, ThetaSection};
use crate::jones::{catalog_values, jones_at_root, Backend, CatalogKnot, KnotPresentation};
use crate::skein::RootContext;
use crate::tqft::{kirby_constants, TorusVector};
use crate::{Error, Result};

/// Largest level at which [`knot_state`] attaches the theta section.
pub const GEOMETRIC_LEVEL_BOUND: u32 = 8;

/// Knot state of a knot complement at level `r`.
#[derive(Clone, Debug)]
pub struct KnotState {
    pub knot: KnotPresentation,
    pub r: u32,
    /// `eta' <e_{n-1}>_K` for `n = 1..r`.
    pub coeffs: Vec<Complex64>,
    /// Image in the theta-section model at `tau = i`, when `r` is small.
    pub section: Option<ThetaSection>,
}

impl KnotState {
    pub fn vector(&self) -> TorusVector {
        TorusVector {
            r: self.r,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Map the state into the theta-section model at `ctx`.
    pub fn attach_section(&mut self, ctx: &QuantizationContext) -> Result<()> {
        self.section = Some(iso_from_skein(&self.vector(), ctx)?);
        Ok(())
    }

    /// Squared norm summed directly over the skein coordinates.
    pub fn norm_sq(&self) -> f64 {
        kahan_sum(self.coeffs.iter().map(|c| c.norm_sqr()))
    }
}

/// `||Z'_r||^2` and `||Z'_r||`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct L2Norm {
    pub norm_sq: f64,
    pub norm: f64,
}

fn kahan_sum(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for v in values {
        let y = v - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// `J_{K,1}, ..., J_{K,r}` at the root, batched for the catalog backend.
pub fn jones_values(k: &KnotPresentation, ctx: &RootContext, backend: Backend) -> Result<Vec<Complex64>> {
    if backend == Backend::Catalog {
        let knot = k.catalog.ok_or_else(|| Error::UnknownCatalogEntry(k.name.clone()))?;
        return catalog_values(knot, ctx);
    }
    (1..=ctx.r).map(|n| jones_at_root(k, n, ctx, backend)).collect()
}

fn state_coeffs(jones: &[Complex64], ctx: &RootContext, eta: f64) -> Vec<Complex64> {
    jones
        .iter()
        .enumerate()
        .map(|(i, j)| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            j * (eta * sign * ctx.quantum_integer(i as i64 + 1))
        })
        .collect()
}

/// Build the knot state of `S^3 \ K` at level `r`.
pub fn knot_state(k: &KnotPresentation, r: u32, backend: Backend) -> Result<KnotState> {
    knot_state_with_precision(k, r, backend, 53)
}

pub fn knot_state_with_precision(
    k: &KnotPresentation,
    r: u32,
    backend: Backend,
    precision_bits: u32,
) -> Result<KnotState> {
    let ctx = RootContext::with_precision(r, precision_bits)?;
    let eta = kirby_constants(r)?.eta;
    let coeffs = state_coeffs(&jones_values(k, &ctx, backend)?, &ctx, eta);
    let mut state = KnotState {
        knot: k.clone(),
        r,
        coeffs,
        section: None,
    };
    if r <= GEOMETRIC_LEVEL_BOUND {
        state.attach_section(&QuantizationContext::new(r, Complex64::new(0.0, 1.0))?)?;
    }
    Ok(state)
}

fn norm_from_jones(jones: &[Complex64], ctx: &RootContext, eta: f64) -> L2Norm {
    let norm_sq = kahan_sum(jones.iter().enumerate().map(|(i, j)| {
        let q = eta * ctx.quantum_integer(i as i64 + 1);
        q * q * j.norm_sqr()
    }));
    L2Norm {
        norm_sq,
        norm: norm_sq.sqrt(),
    }
}

/// `sum_{n=1..r} |eta' [n]|^2 |J_{K,n}|^2` in ascending `n`, compensated.
pub fn l2_norm_formula(k: &KnotPresentation, r: u32, backend: Backend) -> Result<L2Norm> {
    l2_norm_formula_with_precision(k, r, backend, 53)
}

pub fn l2_norm_formula_with_precision(
    k: &KnotPresentation,
    r: u32,
    backend: Backend,
    precision_bits: u32,
) -> Result<L2Norm> {
    let ctx = RootContext::with_precision(r, precision_bits)?;
    let eta = kirby_constants(r)?.eta;
    Ok(norm_from_jones(&jones_values(k, &ctx, backend)?, &ctx, eta))
}

/// `<s, s>` of the attached section by quadrature.
pub fn quadrature_norm_sq(state: &KnotState) -> Result<f64> {
    let s = state
        .section
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument(format!("no section attached at level {}", state.r)))?;
    Ok(inner_product(s, s)?.re)
}

/// Clausen function `Cl_2(x) = sum sin(n x)/n^2` for `|x| <= pi`, from
/// `x - x ln|x| + sum_k zeta(2k) x (x/2pi)^(2k) / (k (2k+1))`.
pub fn clausen2(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let ratio = (x / (2.0 * PI)).powi(2);
    let mut acc = x - x * x.abs().ln();
    let mut pow = 1.0;
    for k in 1..200u32 {
        pow *= ratio;
        let zeta = if k == 1 { PI * PI / 6.0 } else { zeta_even(k) };
        let kf = k as f64;
        let term = zeta * x * pow / (kf * (2.0 * kf + 1.0));
        acc += term;
        if term.abs() < 1e-17 * acc.abs() {
            break;
        }
    }
    acc
}

fn zeta_even(k: u32) -> f64 {
    const M: i32 = 64;
    let s = 2 * k as i32;
    let mut acc = 0.0;
    for n in (1..M).rev() {
        acc += (n as f64).powi(-s);
    }
    // Euler-Maclaurin tail from M on
    let m = M as f64;
    let sf = s as f64;
    acc + m.powi(1 - s) / (sf - 1.0) + 0.5 * m.powi(-s) + sf * m.powi(-s - 1) / 12.0
}

/// Lobachevsky function `Lambda(theta) = Cl_2(2 theta) / 2`.
pub fn lobachevsky(theta: f64) -> f64 {
    let x = (2.0 * theta).rem_euclid(2.0 * PI);
    let x = if x > PI { x - 2.0 * PI } else { x };
    0.5 * clausen2(x)
}

/// Volume of the figure-eight complement, `6 Lambda(pi/3)`.
pub fn figure_eight_volume() -> f64 {
    6.0 * lobachevsky(PI / 3.0)
}

/// Simplicial volume of the complement. A user value is passed through.
pub fn reference_volume(name: &str, user: Option<f64>) -> Result<f64> {
    if let Some(v) = user {
        return Ok(v);
    }
    Ok(match CatalogKnot::from_name(name)? {
        CatalogKnot::Unknot | CatalogKnot::Trefoil => 0.0,
        CatalogKnot::FigureEight => figure_eight_volume(),
    })
}

/// One level of the volume sequence.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VolumeRow {
    pub r: u32,
    pub norm_sq: f64,
    /// `(2 pi / r) ln ||Z'_r||`.
    pub v_r: f64,
    /// Color `n` maximizing `|J_{K,n}|`.
    pub argmax_n: u32,
    pub ref_vol: f64,
    /// `|v_r - ref_vol| / ref_vol`, or the absolute gap when `ref_vol = 0`.
    pub rel_err: f64,
}

fn argmax(values: &[Complex64]) -> u32 {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if v.norm() > values[best].norm() {
            best = i;
        }
    }
    best as u32 + 1
}

fn volume_row(k: &KnotPresentation, r: u32, backend: Backend, precision_bits: u32, ref_vol: f64) -> Result<VolumeRow> {
    let ctx = RootContext::with_precision(r, precision_bits)?;
    let eta = kirby_constants(r)?.eta;
    let jones = jones_values(k, &ctx, backend)?;
    let norm_sq = norm_from_jones(&jones, &ctx, eta).norm_sq;
    let v_r = PI / r as f64 * norm_sq.ln();
    if !(norm_sq > 0.0 && v_r.is_finite()) {
        return Err(Error::InvalidArgument(format!("degenerate norm {norm_sq} at r = {r}")));
    }
    let gap = (v_r - ref_vol).abs();
    Ok(VolumeRow {
        r,
        norm_sq,
        v_r,
        argmax_n: argmax(&jones),
        ref_vol,
        rel_err: if ref_vol > 0.0 { gap / ref_vol } else { gap },
    })
}

/// Rows for every level in `r_list`, in ascending `r`.
pub fn volume_sequence(
    k: &KnotPresentation,
    r_list: &[u32],
    backend: Backend,
    precision_bits: u32,
    ref_vol: f64,
) -> Result<Vec<VolumeRow>> {
    let mut levels = r_list.to_vec();
    levels.sort_unstable();
    levels.dedup();
    let row = |&r: &u32| volume_row(k, r, backend, precision_bits, ref_vol);
    #[cfg(feature = "parallel")]
    let rows: Result<Vec<VolumeRow>> = {
        use rayon::prelude::*;
        levels.par_iter().map(row).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows: Result<Vec<VolumeRow>> = levels.iter().map(row).collect();
    rows
}

/// `x` with 15 significant digits, fixed notation for moderate exponents.
pub fn format_sig15(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.14e}");
    let exp: i32 = sci.rsplit('e').next().and_then(|e| e.parse().ok()).unwrap_or(0);
    if (-5..15).contains(&exp) {
        format!("{:.*}", (14 - exp) as usize, x)
    } else {
        sci
    }
}

pub const CSV_HEADER: &str = "r,norm_sq,v_r,argmax_n,ref_vol,rel_err";

pub fn to_csv(rows: &[VolumeRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            row.r,
            format_sig15(row.norm_sq),
            format_sig15(row.v_r),
            row.argmax_n,
            format_sig15(row.ref_vol),
            format_sig15(row.rel_err)
        );
    }
    out
}

pub fn write_csv<W: io::Write>(rows: &[VolumeRow], mut w: W) -> io::Result<()> {
    w.write_all(to_csv(rows).as_bytes())
}
