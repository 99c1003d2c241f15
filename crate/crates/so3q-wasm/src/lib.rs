//! Browser bindings: colored Jones values, SL(2,Z) matrices and theta-section fields.

use so3q::geom::{phi, QuantizationContext};
use so3q::jones::{default_backend, jones_at_root, KnotPresentation};
use so3q::knot_state::{figure_eight_volume, reference_volume, volume_sequence};
use so3q::skein::RootContext;
use so3q::tqft::{sl2z_rep, MappingClassWord};
use so3q::Complex64;
use wasm_bindgen::prelude::*;

fn js(e: so3q::Error) -> JsError {
    JsError::new(&e.to_string())
}

/// `[re, im, |J|, v_r, ref_vol]` for `J_{K,n}` at `exp(2 pi i/(r+1/2))`;
/// `v_r` is the volume-sequence term of the same knot at level `r`.
#[wasm_bindgen]
pub fn colored_jones(knot: &str, n: u32, r: u32) -> Result<Vec<f64>, JsError> {
    let k = KnotPresentation::catalog(knot).map_err(js)?;
    let ctx = RootContext::new(r).map_err(js)?;
    let backend = default_backend(&k);
    let z = jones_at_root(&k, n, &ctx, backend).map_err(js)?;
    let vol = reference_volume(&k.name, None).map_err(js)?;
    let row = volume_sequence(&k, &[r], backend, 53, vol).map_err(js)?[0];
    Ok(vec![z.re, z.im, z.norm(), row.v_r, vol])
}

/// Hyperbolic volume of the figure-eight complement.
#[wasm_bindgen]
pub fn figure_eight_reference() -> f64 {
    figure_eight_volume()
}

/// Integer matrix `[a, b, c, d]` of a word in `S`, `T`.
#[wasm_bindgen]
pub fn word_matrix(word: &str) -> Result<Vec<i32>, JsError> {
    let w: MappingClassWord = word.parse().map_err(js)?;
    Ok(w.matrix.iter().flatten().map(|&x| x as i32).collect())
}

/// Quantum representation of the word at level `r`, row-major `(re, im)` pairs.
#[wasm_bindgen]
pub fn word_representation(word: &str, r: u32) -> Result<Vec<f64>, JsError> {
    let w: MappingClassWord = word.parse().map_err(js)?;
    let m = sl2z_rep(&w, r).map_err(js)?;
    let mut out = Vec::with_capacity(2 * m.len());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            out.push(m[(i, j)].re);
            out.push(m[(i, j)].im);
        }
    }
    Ok(out)
}

/// `|Phi_l(p, q)|` on a `size x size` grid over `[0,1)^2`, rows indexed by `q`.
#[wasm_bindgen]
pub fn theta_field(r: u32, tau_re: f64, tau_im: f64, l: i32, size: usize) -> Result<Vec<f64>, JsError> {
    let ctx = QuantizationContext::new(r, Complex64::new(tau_re, tau_im)).map_err(js)?;
    let s = phi(&ctx, l as i64);
    let mut out = Vec::with_capacity(size * size);
    for iq in 0..size {
        for ip in 0..size {
            let (p, q) = (ip as f64 / size as f64, iq as f64 / size as f64);
            out.push(s.eval(p, q).map_err(js)?.norm());
        }
    }
    Ok(out)
}
