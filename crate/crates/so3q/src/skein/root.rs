use std::f64::consts::PI;

use num_complex::Complex64;

use super::poly::LaurentPoly;
use crate::{Error, Result};

/// Evaluation point `A = exp(i*pi/(2r+1))`, a primitive `(4r+2)`-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootContext {
    pub r: u32,
    pub a_value: Complex64,
    /// Working precision in bits for extended-precision code paths.
    pub precision_bits: u32,
}

impl RootContext {
    pub fn new(r: u32) -> Result<Self> {
        Self::with_precision(r, 53)
    }

    pub fn with_precision(r: u32, precision_bits: u32) -> Result<Self> {
        if r < 3 {
            return Err(Error::InvalidLevel(r));
        }
        Ok(Self {
            r,
            a_value: Complex64::from_polar(1.0, PI / (2 * r + 1) as f64),
            precision_bits,
        })
    }

    /// `2r + 1`.
    pub fn n_odd(&self) -> i64 {
        2 * self.r as i64 + 1
    }

    /// `A^k`, reduced modulo the root order before taking the exponential.
    pub fn a_pow(&self, k: i64) -> Complex64 {
        let order = 2 * self.n_odd();
        let k = k.rem_euclid(order);
        Complex64::from_polar(1.0, PI * k as f64 / self.n_odd() as f64)
    }

    /// `t = A^4 = exp(2*pi*i/(r+1/2))`.
    pub fn t_value(&self) -> Complex64 {
        self.a_pow(4)
    }

    /// `[n]` at the root, i.e. `sin(2*pi*n/(2r+1)) / sin(2*pi/(2r+1))`.
    ///
    /// Computed from the complex closed form; the imaginary residue is
    /// checked against `1e-12` before it is discarded.
    pub fn quantum_integer(&self, n: i64) -> f64 {
        let num = self.a_pow(2 * n) - self.a_pow(-2 * n);
        let den = self.a_pow(2) - self.a_pow(-2);
        let v = num / den;
        debug_assert!(v.im.abs() < 1e-12 * v.re.abs().max(1.0));
        v.re
    }

    /// Twist eigenvalue `(-1)^n A^(n^2+2n)` of the color `e_n`.
    pub fn twist(&self, n: i64) -> Complex64 {
        let s = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        self.a_pow(n * n + 2 * n) * s
    }

    /// Evaluate a Laurent polynomial in `A` at the root, ascending exponents.
    pub fn eval(&self, p: &LaurentPoly) -> Complex64 {
        p.eval_with(|e| self.a_pow(e))
    }

    /// Evaluate a Laurent polynomial in `t = A^4` at the root.
    pub fn eval_t(&self, p: &LaurentPoly) -> Complex64 {
        p.eval_with(|e| self.a_pow(4 * e))
    }
}

/// Free-function form of [`RootContext::quantum_integer`].
pub fn quantum_integer(n: i64, ctx: &RootContext) -> f64 {
    ctx.quantum_integer(n)
}

/// Free-function form of [`RootContext::eval`].
pub fn eval_at_root(p: &LaurentPoly, ctx: &RootContext) -> Complex64 {
    ctx.eval(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_root() {
        for r in 3..12 {
            let ctx = RootContext::new(r).unwrap();
            let order = 4 * r as i64 + 2;
            assert!((ctx.a_value.powi(order as i32) - 1.0).norm() < 1e-12);
            for k in 1..order {
                assert!((ctx.a_pow(k) - 1.0).norm() > 1e-6);
            }
            let t = Complex64::from_polar(1.0, 2.0 * PI / (r as f64 + 0.5));
            assert!((ctx.t_value() - t).norm() < 1e-14);
        }
    }

    #[test]
    fn rejects_small_level() {
        assert_eq!(RootContext::new(2), Err(Error::InvalidLevel(2)));
    }
}
