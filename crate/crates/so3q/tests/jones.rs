use num_complex::Complex64;
use proptest::prelude::*;
use so3q::jones::*;
use so3q::precision::ExtContext;
use so3q::skein::*;
use so3q::Error;

fn t_poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

fn knot(name: &str) -> KnotPresentation {
    KnotPresentation::catalog(name).unwrap()
}

fn ctx(r: u32) -> RootContext {
    RootContext::new(r).unwrap()
}

fn custom(strands: usize, gens: &[i32]) -> KnotPresentation {
    KnotPresentation::from_braid(BraidWord::new(strands, gens.to_vec()).unwrap()).unwrap()
}

/// Cyclotomic expansion of the trefoil,
/// `sum_k (-1)^k q^(-k(k+3)/2) prod_{j<=k} {N+j}{N-j}`, in extended precision.
fn trefoil_cyclotomic(n: i64, r: u32, bits: u32) -> Complex64 {
    let nn = 2 * r as i64 + 1;
    let mut x = ExtContext::new(bits);
    let mut prod = x.int(1);
    let mut sum = x.c_zero();
    for k in 0..n {
        if k > 0 {
            let a = x.sin_pi_frac(2 * (n + k), nn);
            let b = x.sin_pi_frac(2 * (n - k), nn);
            prod = x.mul(&prod, &x.mul(&x.int(-4), &x.mul(&a, &b)));
        }
        let mut phase = x.unit(-2 * k * (k + 3), nn);
        if k % 2 == 1 {
            phase = x.c_scale(&phase, &x.int(-1));
        }
        sum = x.c_add(&sum, &x.c_scale(&phase, &prod));
    }
    x.c_to_f64(&sum)
}

#[test]
fn trefoil_j2_golden() {
    let j = colored_jones_exact(&knot("trefoil"), 2).unwrap();
    assert_eq!(j, t_poly(&[(-1, 1), (-3, 1), (-4, -1)]));
}

#[test]
fn figure_eight_j2_golden() {
    let j = colored_jones_exact(&knot("figure-eight"), 2).unwrap();
    assert_eq!(j.to_string_var("t"), "t^-2 - t^-1 + 1 - t + t^2");
    assert_eq!(j, j.mirror());
}

#[test]
fn trivial_color_and_unknot() {
    for name in ["unknot", "trefoil", "figure-eight"] {
        assert_eq!(colored_jones_exact(&knot(name), 1).unwrap(), LaurentPoly::one());
    }
    for n in 1..=4 {
        assert_eq!(
            colored_jones_exact(&KnotPresentation::unknot(), n).unwrap(),
            LaurentPoly::one()
        );
    }
    let z = colored_jones_rmatrix(&KnotPresentation::unknot().braid, 5, &ctx(10)).unwrap();
    assert!((z - 1.0).norm() < 1e-12);
    let z = colored_jones_catalog(CatalogKnot::Unknot, 7, &ctx(10)).unwrap();
    assert!((z - 1.0).norm() < 1e-12);
}

#[test]
fn unknot_with_twisted_braid_is_trivial() {
    // closure of s1 s2^-1 on three strands is an unknot with kinks
    let k = custom(3, &[1, -2]);
    for n in 1..=3 {
        assert_eq!(colored_jones_exact(&k, n).unwrap(), LaurentPoly::one());
    }
    for n in 1..=5 {
        assert!((colored_jones_rmatrix(&k.braid, n, &ctx(7)).unwrap() - 1.0).norm() < 1e-10);
    }
}

#[test]
fn cross_oracle_examples() {
    let t = knot("trefoil");
    let c = ctx(4);
    let exact = c.eval_t(&colored_jones_exact(&t, 2).unwrap());
    assert!((colored_jones_rmatrix(&t.braid, 2, &c).unwrap() - exact).norm() < 1e-10);

    let f = knot("figure-eight");
    let c = ctx(5);
    let exact = c.eval_t(&colored_jones_exact(&f, 3).unwrap());
    assert!((colored_jones_rmatrix(&f.braid, 3, &c).unwrap() - exact).norm() < 1e-10);

    let c = ctx(3);
    let exact = c.eval_t(&colored_jones_exact(&f, 2).unwrap());
    assert!((colored_jones_catalog(CatalogKnot::FigureEight, 2, &c).unwrap() - exact).norm() < 1e-10);

    let c = ctx(4);
    let rm = colored_jones_rmatrix(&t.braid, 3, &c).unwrap();
    assert!((colored_jones_catalog(CatalogKnot::Trefoil, 3, &c).unwrap() - rm).norm() < 1e-10);
}

#[test]
fn backends_agree_pairwise() {
    for name in ["trefoil", "figure-eight"] {
        let k = knot(name);
        for n in 1..=3 {
            let exact = colored_jones_exact(&k, n).unwrap();
            for r in 3..=8 {
                let c = ctx(r);
                let vals = [
                    c.eval_t(&exact),
                    jones_at_root(&k, n, &c, Backend::RMatrix).unwrap(),
                    jones_at_root(&k, n, &c, Backend::Catalog).unwrap(),
                ];
                for a in &vals {
                    for b in &vals {
                        assert!((a - b).norm() < 1e-9, "{name} n={n} r={r}: {vals:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn writhe_invariance_under_stabilization() {
    let base = knot("trefoil");
    let plus = custom(3, &[1, 1, 1, 2]);
    let minus = custom(3, &[1, 1, 1, -2]);
    let j = colored_jones_exact(&base, 2).unwrap();
    assert_eq!(colored_jones_exact(&plus, 2).unwrap(), j);
    assert_eq!(colored_jones_exact(&minus, 2).unwrap(), j);
    for r in 3..=6 {
        let c = ctx(r);
        for n in 1..=5 {
            let a = colored_jones_rmatrix(&base.braid, n, &c).unwrap();
            for k in [&plus, &minus] {
                assert!((colored_jones_rmatrix(&k.braid, n, &c).unwrap() - a).norm() < 1e-9);
            }
        }
    }
}

#[test]
fn mirror_preserves_modulus() {
    let t = knot("trefoil");
    let m = custom(2, &[-1, -1, -1]);
    assert_eq!(
        colored_jones_exact(&m, 2).unwrap(),
        colored_jones_exact(&t, 2).unwrap().mirror()
    );
    for r in 3..=7 {
        let c = ctx(r);
        for n in 1..=4 {
            let a = colored_jones_rmatrix(&t.braid, n, &c).unwrap();
            let b = colored_jones_rmatrix(&m.braid, n, &c).unwrap();
            assert!((a.norm() - b.norm()).abs() < 1e-10);
            assert!((a.conj() - b).norm() < 1e-10);
        }
    }
}

#[test]
fn quantum_integer_reflection() {
    for r in 3..=12u32 {
        let c = ctx(r);
        for n in 0..=2 * r as i64 + 1 {
            let a = c.quantum_integer(n).abs();
            let b = c.quantum_integer(2 * r as i64 + 1 - n).abs();
            assert!((a - b).abs() < 1e-12, "r={r} n={n}");
        }
    }
}

#[test]
fn so3_coefficients() {
    let u = KnotPresentation::unknot();
    for r in 3..=6 {
        let c = ctx(r);
        for n in 0..r {
            let v = so3_bracket_coefficient(&u, n, &c, Backend::Catalog).unwrap();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((v - sign * c.quantum_integer(n as i64 + 1)).norm() < 1e-12);
        }
    }
    for name in ["trefoil", "figure-eight"] {
        for backend in [Backend::Exact, Backend::RMatrix, Backend::Catalog] {
            let v = so3_bracket_coefficient(&knot(name), 0, &ctx(5), backend).unwrap();
            assert!((v - 1.0).norm() < 1e-12);
        }
    }
    let c = ctx(3);
    let f = knot("figure-eight");
    let lhs = so3_bracket_coefficient(&f, 1, &c, Backend::Exact).unwrap().norm();
    let j2 = c.eval_t(&t_poly(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]));
    assert!((lhs - (c.quantum_integer(2) * j2).norm()).abs() < 1e-12);
    assert!(matches!(
        so3_bracket_coefficient(&f, 3, &c, Backend::Catalog),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn catalog_trefoil_matches_cyclotomic_sum() {
    for r in [5u32, 12, 30] {
        let c = ctx(r);
        let vals = catalog_values(CatalogKnot::Trefoil, &c).unwrap();
        for n in 1..=r as i64 {
            let oracle = trefoil_cyclotomic(n, r, 512);
            let got = vals[n as usize - 1];
            assert!((got - oracle).norm() < 1e-9 * oracle.norm().max(1.0), "r={r} n={n}");
        }
    }
}

#[test]
fn extended_catalog_path() {
    let lo = ctx(40);
    let hi = RootContext::with_precision(40, 256).unwrap();
    for knot in [CatalogKnot::Trefoil, CatalogKnot::FigureEight] {
        let a = catalog_values(knot, &lo).unwrap();
        let b = catalog_values(knot, &hi).unwrap();
        for (u, v) in a.iter().zip(&b) {
            assert!((u - v).norm() <= 1e-9 * v.norm().max(1.0));
        }
    }
}

#[test]
fn errors() {
    assert!(matches!(
        KnotPresentation::from_braid(BraidWord::new(2, vec![1, 1]).unwrap()),
        Err(Error::NotAKnot(2))
    ));
    assert!(matches!(
        KnotPresentation::catalog("5_2"),
        Err(Error::UnknownCatalogEntry(_))
    ));
    let big = custom(6, &[1, 2, 3, 4, 5]);
    assert!(matches!(
        colored_jones_rmatrix(&big.braid, 5, &ctx(5)),
        Err(Error::StateSpaceTooLarge { .. })
    ));
    assert!(matches!(
        colored_jones(&big, 2, &ctx(5), Backend::Catalog),
        Err(Error::UnknownCatalogEntry(_))
    ));
    assert!(matches!(
        colored_jones_exact(&knot("figure-eight"), 4),
        Err(Error::TooManyCrossings { .. })
    ));
}

#[test]
fn jones_value_reports_backend() {
    let c = ctx(4);
    let v = colored_jones(&knot("trefoil"), 2, &c, Backend::Exact).unwrap();
    assert_eq!(v.backend, Backend::Exact);
    assert!(matches!(v.value, JonesData::Exact(_)));
    let w = colored_jones(&knot("trefoil"), 2, &c, Backend::RMatrix).unwrap();
    assert!((v.at(&c) - w.at(&c)).norm() < 1e-10);
}

fn knot_braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=3, prop::collection::vec((1i32..=2, any::<bool>()), 1..=6))
        .prop_map(|(s, gens)| {
            let gens = gens
                .into_iter()
                .map(|(g, pos)| {
                    let g = 1 + (g - 1) % (s as i32 - 1);
                    if pos {
                        g
                    } else {
                        -g
                    }
                })
                .collect();
            BraidWord::new(s, gens).unwrap()
        })
        .prop_filter("closure must be a knot", |b| b.closure_components() == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn exact_and_rmatrix_agree(b in knot_braid(), r in 3u32..=8) {
        let k = KnotPresentation::from_braid(b).unwrap();
        let c = ctx(r);
        let exact = c.eval_t(&colored_jones_exact(&k, 2).unwrap());
        let rm = colored_jones_rmatrix(&k.braid, 2, &c).unwrap();
        prop_assert!((exact - rm).norm() < 1e-9);
    }

    #[test]
    fn conjugation_invariance(b in knot_braid(), r in 3u32..=8, n in 2u32..=4) {
        let mut rotated = b.gens.clone();
        rotated.rotate_left(1);
        let k = KnotPresentation::from_braid(b.clone()).unwrap();
        let c = ctx(r);
        let a = colored_jones_rmatrix(&k.braid, n, &c).unwrap();
        let z = colored_jones_rmatrix(&BraidWord::new(b.strands, rotated).unwrap(), n, &c).unwrap();
        prop_assert!((a - z).norm() < 1e-9 * a.norm().max(1.0));
    }
}
