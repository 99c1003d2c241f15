use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

use super::{QuantizationContext, ThetaSection};
use crate::tqft::CMatrix;
use crate::{Error, Result};

/// Uniform `G x G` grid on `[0,1)^2`, point `(i/G, j/G)` at index `i*G + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub points: usize,
}

impl Grid {
    pub fn len(&self) -> usize {
        self.points * self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points == 0
    }

    pub fn point(&self, idx: usize) -> (f64, f64) {
        let g = self.points as f64;
        ((idx / self.points) as f64 / g, (idx % self.points) as f64 / g)
    }

    /// Evaluate `f` at every grid point, rows in parallel when enabled.
    pub fn sample<T: Send>(&self, f: impl Fn(f64, f64) -> T + Sync + Send) -> Vec<T> {
        map_indices(self.len(), |idx| {
            let (p, q) = self.point(idx);
            f(p, q)
        })
    }
}

#[cfg(feature = "parallel")]
fn map_indices<T: Send>(len: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_indices<T: Send>(len: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..len).map(f).collect()
}

/// Pairwise (cascade) summation in fixed order.
fn pairwise_sum(xs: &[Complex64]) -> Complex64 {
    if xs.len() <= 32 {
        return xs.iter().sum();
    }
    let (a, b) = xs.split_at(xs.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

/// `4 pi sqrt(b / 2 pi) * mean(conj(u) v)` over the grid.
fn pairing(ctx: &QuantizationContext, u: &[Complex64], v: &[Complex64]) -> Complex64 {
    let prods: Vec<Complex64> = u.iter().zip(v).map(|(x, y)| x.conj() * y).collect();
    pairwise_sum(&prods) / prods.len() as f64 * ctx.volume() * ctx.halfform_weight()
}

fn rel_change(a: &CMatrix, b: &CMatrix) -> f64 {
    let scale = b.iter().map(|x| x.norm()).fold(0.0, f64::max).max(1e-300);
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max) / scale
}

/// Refine `f(grid)` by doubling until successive results agree.
fn refine(ctx: &QuantizationContext, f: impl Fn(Grid) -> Result<CMatrix>) -> Result<(CMatrix, usize)> {
    let q = ctx.quad;
    let mut g = q.points.max(4);
    let mut prev = f(Grid { points: g })?;
    loop {
        let next_g = 2 * g;
        if next_g > q.max_points {
            return Err(Error::QuadratureNotConverged {
                change: f64::NAN,
                points: g,
            });
        }
        let next = f(Grid { points: next_g })?;
        let change = rel_change(&prev, &next);
        if change < q.refine_until {
            return Ok((next, next_g));
        }
        if 2 * next_g > q.max_points {
            return Err(Error::QuadratureNotConverged { change, points: next_g });
        }
        prev = next;
        g = next_g;
    }
}

/// Converged quadrature weights `W[m][m'] = <theta_m, theta_m'>` of the
/// residue series; every inner product of invariant sections is `a^* W b`.
#[derive(Clone, Debug)]
pub struct QuadratureCache {
    pub weights: CMatrix,
    pub points: usize,
}

type CacheKey = (u32, u64, u64, usize, u64, usize, u64);

fn key(ctx: &QuantizationContext) -> CacheKey {
    (
        ctx.r,
        ctx.tau.re.to_bits(),
        ctx.tau.im.to_bits(),
        ctx.quad.points,
        ctx.quad.refine_until.to_bits(),
        ctx.quad.max_points,
        ctx.series_tol.to_bits(),
    )
}

impl QuadratureCache {
    /// Compute the weights from scratch.
    pub fn build(ctx: &QuantizationContext) -> Result<Self> {
        let n = ctx.n();
        let k = ctx.series_window()?;
        let (weights, points) = refine(ctx, |grid| {
            let table: Vec<Vec<Complex64>> =
                grid.sample(|p, q| (0..n).map(|m| ctx.residue_series_k(m, p, q, k)).collect());
            let cols: Vec<Vec<Complex64>> = (0..n).map(|m| table.iter().map(|row| row[m]).collect()).collect();
            Ok(CMatrix::from_fn(n, n, |i, j| pairing(ctx, &cols[i], &cols[j])))
        })?;
        Ok(Self { weights, points })
    }

    /// Memoized weights for this context.
    pub fn for_context(ctx: &QuantizationContext) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<QuadratureCache>>>> = OnceLock::new();
        let map = CACHE.get_or_init(Default::default);
        let k = key(ctx);
        if let Some(c) = map.lock().expect("cache lock").get(&k) {
            return Ok(c.clone());
        }
        let c = Arc::new(Self::build(ctx)?);
        map.lock().expect("cache lock").insert(k, c.clone());
        Ok(c)
    }

    pub fn inner(&self, s1: &ThetaSection, s2: &ThetaSection) -> Complex64 {
        let a = s1.coeffs();
        let b = s2.coeffs();
        let mut sum = Complex64::new(0.0, 0.0);
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                sum += x.conj() * self.weights[(i, j)] * y;
            }
        }
        sum * s1.halfform_scale.conj() * s2.halfform_scale
    }
}

/// Hermitian inner product `<s1, s2>` by converged quadrature.
pub fn inner_product(s1: &ThetaSection, s2: &ThetaSection) -> Result<Complex64> {
    if s1.ctx != s2.ctx {
        return Err(Error::InvalidArgument("sections live over different contexts".into()));
    }
    Ok(QuadratureCache::for_context(&s1.ctx)?.inner(s1, s2))
}

/// Matrix of inner products `<lhs_i, rhs_j>`.
pub fn gram_matrix(lhs: &[ThetaSection], rhs: &[ThetaSection]) -> Result<CMatrix> {
    let Some(first) = lhs.first().or(rhs.first()) else {
        return Ok(CMatrix::zeros(lhs.len(), rhs.len()));
    };
    if lhs.iter().chain(rhs).any(|s| s.ctx != first.ctx) {
        return Err(Error::InvalidArgument("sections live over different contexts".into()));
    }
    let cache = QuadratureCache::for_context(&first.ctx)?;
    Ok(CMatrix::from_fn(lhs.len(), rhs.len(), |i, j| {
        cache.inner(&lhs[i], &rhs[j])
    }))
}

/// Converged `<f_i, g_j>` for sections given only pointwise, as values of the
/// full section (frame included) at `(p, q)`.
pub fn gram_of_values<F, G>(ctx: &QuantizationContext, lhs: &[F], rhs: &[G]) -> Result<CMatrix>
where
    F: Fn(f64, f64) -> Complex64 + Sync,
    G: Fn(f64, f64) -> Complex64 + Sync,
{
    refine(ctx, |grid| {
        let lv: Vec<Vec<Complex64>> = lhs.iter().map(|f| grid.sample(f)).collect();
        let rv: Vec<Vec<Complex64>> = rhs.iter().map(|g| grid.sample(g)).collect();
        Ok(CMatrix::from_fn(lhs.len(), rhs.len(), |i, j| {
            pairing(ctx, &lv[i], &rv[j])
        }))
    })
    .map(|(m, _)| m)
}

/// `||g_0 t||^2` with the measure `4 pi dp dq` and no half-form weight.
pub fn unnormalized_norm_sq(ctx: &QuantizationContext) -> Result<f64> {
    let k = ctx.series_window()?;
    let (m, _) = refine(ctx, |grid| {
        let v = grid.sample(|p, q| ctx.residue_series_k(0, p, q, k));
        let w = pairing(ctx, &v, &v) / ctx.halfform_weight();
        Ok(CMatrix::from_element(1, 1, w))
    })?;
    Ok(m[(0, 0)].re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive() {
        let xs: Vec<Complex64> = (0..1000).map(|k| Complex64::new(k as f64, -(k as f64))).collect();
        assert_eq!(pairwise_sum(&xs), Complex64::new(499500.0, -499500.0));
    }

    #[test]
    fn grid_points() {
        let g = Grid { points: 4 };
        assert_eq!(g.point(0), (0.0, 0.0));
        assert_eq!(g.point(5), (0.25, 0.25));
        assert_eq!(g.len(), 16);
    }
}
