use num_complex::Complex64;

use crate::precision::{ExtComplex, ExtContext};
use crate::skein::{BraidWord, RootContext};
use crate::{Error, Result};

/// Knots with pinned braid words and closed-form colored Jones sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogKnot {
    Unknot,
    Trefoil,
    FigureEight,
}

impl CatalogKnot {
    pub const ALL: [CatalogKnot; 3] = [Self::Unknot, Self::Trefoil, Self::FigureEight];

    pub fn from_name(name: &str) -> Result<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "unknot" | "0_1" => Ok(Self::Unknot),
            "trefoil" | "3_1" => Ok(Self::Trefoil),
            "figure-eight" | "figure_eight" | "figure8" | "4_1" => Ok(Self::FigureEight),
            _ => Err(Error::UnknownCatalogEntry(name.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Unknot => "unknot",
            Self::Trefoil => "trefoil",
            Self::FigureEight => "figure-eight",
        }
    }

    /// Pinned braid word: empty on one strand, `s1^3`, `(s1 s2^-1)^2`.
    pub fn braid(self) -> BraidWord {
        let (strands, gens) = match self {
            Self::Unknot => (1, vec![]),
            Self::Trefoil => (2, vec![1, 1, 1]),
            Self::FigureEight => (3, vec![1, -2, 1, -2]),
        };
        BraidWord::new(strands, gens).expect("catalog braid words are valid")
    }
}

/// Extended precision is used when more than double precision is asked
/// for, and always beyond `r = 600`.
pub fn wants_extended(ctx: &RootContext) -> bool {
    ctx.precision_bits > 53 || ctx.r > 600
}

/// `J_{K,n}` at `t = A^4` from the closed form.
pub fn colored_jones_catalog(knot: CatalogKnot, n: u32, ctx: &RootContext) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidArgument("colors start at n = 1".into()));
    }
    if wants_extended(ctx) {
        let mut x = ExtContext::new(ctx.precision_bits.max(128));
        let tables = ExtTables::new(&mut x, ctx.n_odd());
        return ext_value(knot, n as i64, &tables, &mut x);
    }
    f64_value(knot, n as i64, ctx)
}

/// `J_{K,1}, ..., J_{K,r}` sharing one set of trigonometric tables.
pub fn catalog_values(knot: CatalogKnot, ctx: &RootContext) -> Result<Vec<Complex64>> {
    let r = ctx.r as i64;
    if wants_extended(ctx) {
        let mut x = ExtContext::new(ctx.precision_bits.max(128));
        let tables = ExtTables::new(&mut x, ctx.n_odd());
        return (1..=r).map(|n| ext_value(knot, n, &tables, &mut x)).collect();
    }
    (1..=r).map(|n| f64_value(knot, n, ctx)).collect()
}

/// Exponent of `A` in the trefoil phase for summand `j` of color `n`.
fn trefoil_phase(n: i64, j: i64) -> i64 {
    6 * j * (j + 1) - 6 * (n * n - 1)
}

fn f64_value(knot: CatalogKnot, n: i64, ctx: &RootContext) -> Result<Complex64> {
    let nn = ctx.n_odd();
    let sin2 = |x: i64| (2.0 * std::f64::consts::PI * x.rem_euclid(nn) as f64 / nn as f64).sin();
    match knot {
        CatalogKnot::Unknot => Ok(Complex64::new(1.0, 0.0)),
        CatalogKnot::FigureEight => {
            let mut term = 1.0;
            let mut sum = 1.0;
            for j in 1..n {
                term *= -4.0 * sin2(n + j) * sin2(n - j);
                sum += term;
            }
            Ok(Complex64::new(sum, 0.0))
        }
        CatalogKnot::Trefoil => {
            if n % nn == 0 {
                return Err(Error::InexactDivision(format!("[{n}] vanishes at level {}", ctx.r)));
            }
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                let sign = if (n - 1 - j) % 2 == 0 { 1.0 } else { -1.0 };
                sum += ctx.a_pow(trefoil_phase(n, j)) * (sign * ctx.quantum_integer(2 * j + 1));
            }
            Ok(sum / ctx.quantum_integer(n))
        }
    }
}

/// `exp(i pi k / N)` for `k` in `0..2N`.
struct ExtTables {
    nn: i64,
    unit: Vec<ExtComplex>,
}

impl ExtTables {
    fn new(x: &mut ExtContext, nn: i64) -> Self {
        let unit = (0..2 * nn).map(|k| x.unit(k, nn)).collect();
        Self { nn, unit }
    }

    fn unit(&self, k: i64) -> &ExtComplex {
        &self.unit[k.rem_euclid(2 * self.nn) as usize]
    }

    /// `sin(2 pi k / N)`.
    fn sin2(&self, k: i64) -> &astro_float::BigFloat {
        &self.unit(2 * k).im
    }
}

fn ext_value(knot: CatalogKnot, n: i64, t: &ExtTables, x: &mut ExtContext) -> Result<Complex64> {
    match knot {
        CatalogKnot::Unknot => Ok(Complex64::new(1.0, 0.0)),
        CatalogKnot::FigureEight => {
            let mut term = x.int(1);
            let mut sum = x.int(1);
            let minus4 = x.int(-4);
            for j in 1..n {
                let f = x.mul(&minus4, &x.mul(t.sin2(n + j), t.sin2(n - j)));
                term = x.mul(&term, &f);
                sum = x.add(&sum, &term);
            }
            Ok(Complex64::new(x.to_f64(&sum), 0.0))
        }
        CatalogKnot::Trefoil => {
            if n % t.nn == 0 {
                return Err(Error::InexactDivision(format!("[{n}] vanishes at N = {}", t.nn)));
            }
            let qi = |k: i64, x: &ExtContext| x.div(t.sin2(k), t.sin2(1));
            let mut sum = x.c_zero();
            for j in 0..n {
                let mut w = qi(2 * j + 1, x);
                if (n - 1 - j) % 2 != 0 {
                    w = w.neg();
                }
                sum = x.c_add(&sum, &x.c_scale(t.unit(trefoil_phase(n, j)), &w));
            }
            let inv = x.div(&x.int(1), &qi(n, x));
            let v = x.c_scale(&sum, &inv);
            Ok(x.c_to_f64(&v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for k in CatalogKnot::ALL {
            assert_eq!(CatalogKnot::from_name(k.name()).unwrap(), k);
        }
        assert!(matches!(
            CatalogKnot::from_name("5_2"),
            Err(Error::UnknownCatalogEntry(_))
        ));
    }

    #[test]
    fn extended_matches_double() {
        let ctx = RootContext::new(9).unwrap();
        let ext = RootContext::with_precision(9, 192).unwrap();
        for k in CatalogKnot::ALL {
            let a = catalog_values(k, &ctx).unwrap();
            let b = catalog_values(k, &ext).unwrap();
            for (u, v) in a.iter().zip(&b) {
                assert!((u - v).norm() < 1e-11 * v.norm().max(1.0));
            }
        }
    }
}
