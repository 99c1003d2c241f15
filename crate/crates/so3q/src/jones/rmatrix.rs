use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::skein::{BraidWord, RootContext};
use crate::{Error, Result};

/// Largest `n^strands` the dense-vector R-matrix backend accepts.
pub const RMATRIX_STATE_BUDGET: usize = 1 << 12;

/// Sparse local operator on `V_n (x) V_n`: `cols[p]` lists `(q, value)` with
/// `op(e_p) = sum value * e_q`, where `p = i*n + j` encodes `e_i (x) e_j`.
struct LocalOp {
    cols: Vec<Vec<(usize, Complex64)>>,
}

/// Braided R-matrix of the `n`-dimensional representation with `s = A^2`,
/// in the basis `e_m` of weight `n - 1 - 2m`.
fn r_check(n: usize, ctx: &RootContext) -> DMatrix<Complex64> {
    let qi = |k: i64| ctx.quantum_integer(k);
    let weight = |m: i64| n as i64 - 1 - 2 * m;
    let ds = ctx.a_pow(2) - ctx.a_pow(-2);
    let mut m = DMatrix::<Complex64>::zeros(n * n, n * n);
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            let mut coef = Complex64::new(1.0, 0.0);
            let mut fact = 1.0;
            for k in 0..=i.min(n as i64 - 1 - j) {
                if k > 0 {
                    // E lowers i, F raises j
                    coef *= ds * (qi(i - k + 1) * qi(n as i64 - j - k));
                    fact *= qi(k);
                }
                let (a, b) = (i - k, j + k);
                let v = coef / fact * ctx.a_pow(k * (k - 1) + weight(a) * weight(b));
                // the flip sends e_a (x) e_b to e_b (x) e_a
                let q = b as usize * n + a as usize;
                let p = i as usize * n + j as usize;
                m[(q, p)] += v;
            }
        }
    }
    m
}

fn sparsify(m: &DMatrix<Complex64>, n: usize) -> LocalOp {
    let cols = (0..n * n)
        .map(|p| {
            let wp = p / n + p % n;
            (0..n * n)
                .filter(|&q| q / n + q % n == wp)
                .map(|q| (q, m[(q, p)]))
                .filter(|(_, v)| *v != Complex64::new(0.0, 0.0))
                .collect()
        })
        .collect();
    LocalOp { cols }
}

fn apply(op: &LocalOp, n: usize, strands: usize, pos: usize, v: &[Complex64], out: &mut [Complex64]) {
    out.iter_mut().for_each(|x| *x = Complex64::new(0.0, 0.0));
    // strand 0 is the most significant digit
    let pl = n.pow((strands - 1 - pos) as u32);
    let pr = pl / n;
    for (idx, &c) in v.iter().enumerate() {
        if c == Complex64::new(0.0, 0.0) {
            continue;
        }
        let x = idx / pl % n;
        let y = idx / pr % n;
        let rest = idx - x * pl - y * pr;
        for &(q, val) in &op.cols[x * n + y] {
            out[rest + q / n * pl + q % n * pr] += val * c;
        }
    }
}

/// `J_{K,n}` of the braid closure at `t = A^4` by the quantum trace of the
/// braid action on `V_n^(x)s`.
pub fn colored_jones_rmatrix(braid: &BraidWord, n: u32, ctx: &RootContext) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidArgument("colors start at n = 1".into()));
    }
    let nd = n as usize;
    let s = braid.strands;
    let dim = (nd as f64).powi(s as i32);
    if dim > RMATRIX_STATE_BUDGET as f64 {
        return Err(Error::StateSpaceTooLarge {
            dim: dim.min(usize::MAX as f64) as usize,
            budget: RMATRIX_STATE_BUDGET,
        });
    }
    if nd == 1 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let dim = nd.pow(s as u32);
    let rm = r_check(nd, ctx);
    let rinv = rm
        .clone()
        .lu()
        .try_inverse()
        .ok_or_else(|| Error::InvalidArgument("singular R-matrix".into()))?;
    let fwd = sparsify(&rm, nd);
    let bwd = sparsify(&rinv, nd);

    // K = s^H on each strand
    let k_weight: Vec<Complex64> = (0..dim)
        .map(|idx| {
            let total: i64 = (0..s)
                .map(|t| {
                    let m = (idx / nd.pow((s - 1 - t) as u32) % nd) as i64;
                    nd as i64 - 1 - 2 * m
                })
                .sum();
            ctx.a_pow(2 * total)
        })
        .collect();

    let column = |b: usize| -> Complex64 {
        let mut v = vec![Complex64::new(0.0, 0.0); dim];
        let mut w = v.clone();
        v[b] = Complex64::new(1.0, 0.0);
        for &g in &braid.gens {
            let op = if g > 0 { &fwd } else { &bwd };
            apply(op, nd, s, g.unsigned_abs() as usize - 1, &v, &mut w);
            std::mem::swap(&mut v, &mut w);
        }
        k_weight[b] * v[b]
    };
    let diag: Vec<Complex64> = collect_columns(dim, column);
    let trace: Complex64 = diag.iter().sum();

    let dim_q = ctx.quantum_integer(n as i64);
    // ribbon twist on V_n
    let theta = ctx.a_pow(n as i64 * n as i64 - 1);
    Ok(trace / dim_q * theta.powi(-braid.writhe() as i32))
}

#[cfg(feature = "parallel")]
fn collect_columns(dim: usize, f: impl Fn(usize) -> Complex64 + Sync + Send) -> Vec<Complex64> {
    use rayon::prelude::*;
    (0..dim).into_par_iter().map(&f).collect()
}

#[cfg(not(feature = "parallel"))]
fn collect_columns(dim: usize, f: impl Fn(usize) -> Complex64) -> Vec<Complex64> {
    (0..dim).map(f).collect()
}
