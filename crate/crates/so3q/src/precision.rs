//! Extended-precision real and complex arithmetic on top of `astro-float`,
//! restricted to what the closed-form colored Jones sums need: ring
//! operations and sines/cosines of rational multiples of pi.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

const RM: RoundingMode = RoundingMode::ToEven;

/// Working context: precision, rounding mode and the constant cache.
pub struct ExtContext {
    p: usize,
    cc: Consts,
    pi: BigFloat,
}

impl std::fmt::Debug for ExtContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ExtContext").field("bits", &self.p).finish()
    }
}

impl ExtContext {
    /// Context with at least `bits` bits of mantissa (rounded up to whole words).
    pub fn new(bits: u32) -> Self {
        let p = (bits.max(64) as usize).div_ceil(64) * 64;
        let mut cc = Consts::new().expect("astro-float constant cache");
        let pi = cc.pi(p, RM);
        Self { p, cc, pi }
    }

    pub fn bits(&self) -> usize {
        self.p
    }

    pub fn int(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.p)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, RM)
    }

    /// `sin(pi * num / den)`, with `num` reduced modulo `2 den` first.
    pub fn sin_pi_frac(&mut self, num: i64, den: i64) -> BigFloat {
        let x = self.angle(num, den);
        x.sin(self.p, RM, &mut self.cc)
    }

    /// `cos(pi * num / den)`, with `num` reduced modulo `2 den` first.
    pub fn cos_pi_frac(&mut self, num: i64, den: i64) -> BigFloat {
        let x = self.angle(num, den);
        x.cos(self.p, RM, &mut self.cc)
    }

    fn angle(&self, num: i64, den: i64) -> BigFloat {
        let num = num.rem_euclid(2 * den);
        let frac = self.div(&self.int(num), &self.int(den));
        self.mul(&self.pi, &frac)
    }

    /// `exp(i pi num / den)`.
    pub fn unit(&mut self, num: i64, den: i64) -> ExtComplex {
        ExtComplex {
            re: self.cos_pi_frac(num, den),
            im: self.sin_pi_frac(num, den),
        }
    }

    /// Round to the nearest `f64` through the decimal formatter.
    pub fn to_f64(&mut self, x: &BigFloat) -> f64 {
        if x.is_zero() {
            return 0.0;
        }
        x.format(Radix::Dec, RM, &mut self.cc)
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .unwrap_or(f64::NAN)
    }

    pub fn c_add(&self, a: &ExtComplex, b: &ExtComplex) -> ExtComplex {
        ExtComplex {
            re: self.add(&a.re, &b.re),
            im: self.add(&a.im, &b.im),
        }
    }

    pub fn c_mul(&self, a: &ExtComplex, b: &ExtComplex) -> ExtComplex {
        ExtComplex {
            re: self.sub(&self.mul(&a.re, &b.re), &self.mul(&a.im, &b.im)),
            im: self.add(&self.mul(&a.re, &b.im), &self.mul(&a.im, &b.re)),
        }
    }

    pub fn c_scale(&self, a: &ExtComplex, s: &BigFloat) -> ExtComplex {
        ExtComplex {
            re: self.mul(&a.re, s),
            im: self.mul(&a.im, s),
        }
    }

    pub fn c_zero(&self) -> ExtComplex {
        ExtComplex {
            re: self.int(0),
            im: self.int(0),
        }
    }

    pub fn c_to_f64(&mut self, z: &ExtComplex) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.to_f64(&z.re), self.to_f64(&z.im))
    }
}

/// Complex number with extended-precision parts.
#[derive(Clone, Debug)]
pub struct ExtComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trig_and_conversion() {
        let mut x = ExtContext::new(256);
        let s = x.sin_pi_frac(1, 6);
        assert!((x.to_f64(&s) - 0.5).abs() < 1e-16);
        let c = x.cos_pi_frac(-7, 3);
        assert!((x.to_f64(&c) - 0.5).abs() < 1e-16);
        let v = x.div(&x.int(1), &x.int(3));
        assert!((x.to_f64(&v) - 1.0 / 3.0).abs() < 1e-17);
        assert_eq!(x.to_f64(&x.int(0)), 0.0);
    }
}
