//! The torus space `V'_r(T^2)` with basis `e_0, ..., e_{r-1}`: curve
//! operators, the projective `SL(2,Z)` representation, SO(3) Kirby constants
//! and invariants of integer surgeries on a single knot.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_integer::Integer;

use crate::jones::{so3_bracket_coefficient, Backend, KnotPresentation};
use crate::skein::RootContext;
use crate::{Error, Result};

/// Dense complex matrix, row-major semantics in every exported format.
pub type CMatrix = DMatrix<Complex64>;

/// Coordinates in the Hermitian basis `e_0, ..., e_{r-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusVector {
    pub r: u32,
    pub coeffs: Vec<Complex64>,
}

impl TorusVector {
    pub fn new(r: u32, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != r as usize {
            return Err(Error::DimensionMismatch {
                expected: r as usize,
                got: coeffs.len(),
            });
        }
        Ok(Self { r, coeffs })
    }

    /// Basis vector `e_l`.
    pub fn basis(r: u32, l: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); r as usize];
        coeffs[l] = Complex64::new(1.0, 0.0);
        Self { r, coeffs }
    }

    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn apply(&self, m: &CMatrix) -> Result<Self> {
        if m.ncols() != self.coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: m.ncols(),
                got: self.coeffs.len(),
            });
        }
        let v = m * nalgebra::DVector::from_column_slice(&self.coeffs);
        Ok(Self {
            r: self.r,
            coeffs: v.iter().copied().collect(),
        })
    }
}

fn root(r: u32) -> Result<RootContext> {
    RootContext::new(r)
}

/// `Z'_r(mu)`: diagonal `-2 cos(2(n+1) pi / (2r+1))`.
pub fn curve_operator_mu(r: u32) -> Result<CMatrix> {
    let nn = root(r)?.n_odd() as f64;
    Ok(CMatrix::from_diagonal(&nalgebra::DVector::from_fn(
        r as usize,
        |n, _| Complex64::new(-2.0 * (2.0 * (n as f64 + 1.0) * PI / nn).cos(), 0.0),
    )))
}

/// `Z'_r(lambda)`: `e_n -> -(e_{n-1} + e_{n+1})` with `e_{-1} = 0` and
/// `e_r = -e_{r-1}`.
pub fn curve_operator_lambda(r: u32) -> Result<CMatrix> {
    root(r)?;
    let r = r as usize;
    let mut m = CMatrix::zeros(r, r);
    for n in 0..r {
        if n > 0 {
            m[(n - 1, n)] = Complex64::new(-1.0, 0.0);
        }
        if n + 1 < r {
            m[(n + 1, n)] = Complex64::new(-1.0, 0.0);
        }
    }
    m[(r - 1, r - 1)] = Complex64::new(1.0, 0.0);
    Ok(m)
}

/// `Z'_r(gamma)` for the primitive class `a mu + b lambda`, obtained by
/// conjugating `Z'_r(mu)` with `Z'_r(g)` for some `g` in `SL(2,Z)` with
/// `g mu = gamma`.
pub fn curve_operator_skein(a: i64, b: i64, r: u32) -> Result<CMatrix> {
    let g = completion(a, b)?;
    let w = MappingClassWord::from_matrix(g)?;
    let rep = sl2z_rep(&w, r)?;
    let inv = rep.adjoint();
    Ok(&rep * curve_operator_mu(r)? * inv)
}

/// A matrix `[[a, c], [b, d]]` of determinant one with first column `(a, b)`.
pub fn completion(a: i64, b: i64) -> Result<[[i64; 2]; 2]> {
    let e = a.extended_gcd(&b);
    if e.gcd != 1 {
        return Err(Error::NotPrimitive(a, b));
    }
    // a x + b y = 1, so det [[a, -y], [b, x]] = 1
    Ok([[a, -e.y], [b, e.x]])
}

/// `T`: diagonal of twist eigenvalues `(-1)^n A^(n^2+2n)`.
pub fn rep_t(r: u32) -> Result<CMatrix> {
    let ctx = root(r)?;
    Ok(CMatrix::from_diagonal(&nalgebra::DVector::from_fn(
        r as usize,
        |n, _| ctx.twist(n as i64),
    )))
}

/// `S[m][n] = (2i e^(-i pi/4) / sqrt(2r+1)) sin(2 pi (m+1)(n+1) / (2r+1))`.
pub fn rep_s(r: u32) -> Result<CMatrix> {
    let nn = root(r)?.n_odd();
    let pref = Complex64::new(0.0, 2.0) * Complex64::from_polar(1.0, -PI / 4.0) / (nn as f64).sqrt();
    Ok(CMatrix::from_fn(r as usize, r as usize, |m, n| {
        let k = ((m as i64 + 1) * (n as i64 + 1)).rem_euclid(nn);
        pref * (2.0 * PI * k as f64 / nn as f64).sin()
    }))
}

/// Generators of `SL(2,Z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    T,
    TInv,
    S,
    SInv,
}

impl Generator {
    pub fn matrix(self) -> [[i64; 2]; 2] {
        match self {
            Self::T => [[1, 1], [0, 1]],
            Self::TInv => [[1, -1], [0, 1]],
            Self::S => [[0, -1], [1, 0]],
            Self::SInv => [[0, 1], [-1, 0]],
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::T => "T",
            Self::TInv => "T^-1",
            Self::S => "S",
            Self::SInv => "S^-1",
        })
    }
}

fn mat_mul(x: [[i64; 2]; 2], y: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut z = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    z
}

/// Word in `T^{±1}, S^{±1}` together with its product matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingClassWord {
    pub word: Vec<Generator>,
    pub matrix: [[i64; 2]; 2],
}

impl MappingClassWord {
    pub fn new(word: Vec<Generator>) -> Self {
        let matrix = word.iter().fold([[1, 0], [0, 1]], |m, g| mat_mul(m, g.matrix()));
        Self { word, matrix }
    }

    /// A word whose product is `m` (which must have determinant one).
    pub fn from_matrix(m: [[i64; 2]; 2]) -> Result<Self> {
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1 {
            return Err(Error::InvalidArgument(format!("{m:?} is not in SL(2,Z)")));
        }
        let mut word = Vec::new();
        let mut cur = m;
        // cur = T^k S cur' with |cur'[1][0]| < |cur[1][0]|
        while cur[1][0] != 0 {
            let k = Integer::div_floor(&cur[0][0], &cur[1][0]);
            push_power(&mut word, k);
            word.push(Generator::S);
            cur = mat_mul(Generator::SInv.matrix(), mat_mul([[1, -k], [0, 1]], cur));
        }
        // cur = ±T^k
        if cur[0][0] == -1 {
            word.push(Generator::S);
            word.push(Generator::S);
            push_power(&mut word, -cur[0][1]);
        } else {
            push_power(&mut word, cur[0][1]);
        }
        let w = Self::new(word);
        debug_assert_eq!(w.matrix, m);
        Ok(w)
    }
}

fn push_power(word: &mut Vec<Generator>, k: i64) {
    let g = if k >= 0 { Generator::T } else { Generator::TInv };
    word.extend(std::iter::repeat_n(g, k.unsigned_abs() as usize));
}

impl FromStr for MappingClassWord {
    type Err = Error;

    /// Whitespace-separated letters: `T`, `S`, `T^-1`, `S^-1`, `Ti`, `Si`,
    /// and powers such as `T^3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut word = Vec::new();
        for tok in s.split_whitespace() {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<i64>()
                        .map_err(|_| Error::InvalidArgument(format!("bad exponent in '{tok}'")))?,
                ),
                None => match tok {
                    "Ti" | "Sinv" | "Si" | "Tinv" => (&tok[..1], -1),
                    _ => (tok, 1),
                },
            };
            let (pos, neg) = match base {
                "T" => (Generator::T, Generator::TInv),
                "S" => (Generator::S, Generator::SInv),
                _ => return Err(Error::InvalidArgument(format!("unknown generator '{tok}'"))),
            };
            let g = if exp >= 0 { pos } else { neg };
            word.extend(std::iter::repeat_n(g, exp.unsigned_abs() as usize));
        }
        Ok(Self::new(word))
    }
}

impl fmt::Display for MappingClassWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Ordered product of `T` and `S` factors; the identity for the empty word.
pub fn sl2z_rep(w: &MappingClassWord, r: u32) -> Result<CMatrix> {
    let t = rep_t(r)?;
    let s = rep_s(r)?;
    let mut out = CMatrix::identity(r as usize, r as usize);
    for g in &w.word {
        let f = match g {
            Generator::T => t.clone(),
            Generator::TInv => t.adjoint(),
            Generator::S => s.clone(),
            Generator::SInv => s.adjoint(),
        };
        out *= f;
    }
    Ok(out)
}

/// Best unit phase `c` with `a ≈ c b`, and the largest entry of `a - c b`.
pub fn projective_deviation(a: &CMatrix, b: &CMatrix) -> (Complex64, f64) {
    let overlap: Complex64 = b.iter().zip(a.iter()).map(|(x, y)| x.conj() * y).sum();
    let phase = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    let dev = a
        .iter()
        .zip(b.iter())
        .map(|(x, y)| (x - phase * y).norm())
        .fold(0.0, f64::max);
    (phase, dev)
}

/// Largest entry of `a - b`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `eta'_r`, `kappa'_r` and the Kirby coloring weights `<e_i>`.
#[derive(Clone, Debug, PartialEq)]
pub struct KirbyConstants {
    pub eta: f64,
    pub kappa: Complex64,
    pub omega_coeffs: Vec<Complex64>,
}

pub fn kirby_constants(r: u32) -> Result<KirbyConstants> {
    let ctx = root(r)?;
    let nn = ctx.n_odd() as f64;
    let eta = 2.0 * (2.0 * PI / nn).sin() / nn.sqrt();
    let omega_coeffs: Vec<Complex64> = (0..r as i64)
        .map(|i| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            Complex64::new(sign * ctx.quantum_integer(i + 1), 0.0)
        })
        .collect();
    let sum: Complex64 = omega_coeffs
        .iter()
        .enumerate()
        .map(|(i, w)| w * w * ctx.twist(i as i64))
        .sum();
    Ok(KirbyConstants {
        eta,
        kappa: sum * eta,
        omega_coeffs,
    })
}

/// `<M>'_r` of integer surgery on a knot, or of `S^3` when `knot` is `None`.
///
/// `(eta')^2 (kappa')^(-sigma) sum_i <e_i> ((-1)^i A^(i^2+2i))^f <e_i>_K`,
/// with `sigma = sign(f)` and `<e_i>_K` the 0-framed colored bracket.
pub fn rt_invariant(knot: Option<&KnotPresentation>, framing: i64, r: u32, backend: Backend) -> Result<Complex64> {
    let ctx = root(r)?;
    let kc = kirby_constants(r)?;
    let Some(k) = knot else {
        return Ok(Complex64::new(kc.eta, 0.0));
    };
    let mut sum = Complex64::new(0.0, 0.0);
    for (i, w) in kc.omega_coeffs.iter().enumerate() {
        let coef = so3_bracket_coefficient(k, i as u32, &ctx, backend)?;
        sum += w * ctx.twist(i as i64).powi(framing as i32) * coef;
    }
    let kappa = kc.kappa.powi(-(framing.signum() as i32));
    Ok(sum * kappa * kc.eta * kc.eta)
}
