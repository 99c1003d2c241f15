use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;
use so3q::skein::*;

fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

fn delta() -> LaurentPoly {
    LaurentPoly::loop_value()
}

/// Independent bracket: smooth crossings one at a time by the skein relation
/// and count loops by merging labels at the leaves.
fn oracle_bracket(crossings: &[[u32; 4]], free: usize) -> LaurentPoly {
    fn leaf_loops(pairs: &[(u32, u32)]) -> usize {
        let mut adj: std::collections::HashMap<u32, Vec<u32>> = Default::default();
        for &(a, b) in pairs {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen = std::collections::HashSet::new();
        let mut loops = 0;
        for &start in adj.keys() {
            if seen.insert(start) {
                loops += 1;
                let mut stack = vec![start];
                while let Some(x) = stack.pop() {
                    for &y in &adj[&x] {
                        if seen.insert(y) {
                            stack.push(y);
                        }
                    }
                }
            }
        }
        loops
    }
    fn rec(xs: &[[u32; 4]], pairs: &mut Vec<(u32, u32)>, free: usize) -> LaurentPoly {
        match xs.split_first() {
            None => delta().pow((leaf_loops(pairs) + free) as u32),
            Some((x, rest)) => {
                pairs.push((x[0], x[1]));
                pairs.push((x[2], x[3]));
                let a = rec(rest, pairs, free).shift(1);
                pairs.truncate(pairs.len() - 2);
                pairs.push((x[0], x[3]));
                pairs.push((x[1], x[2]));
                let b = rec(rest, pairs, free).shift(-1);
                pairs.truncate(pairs.len() - 2);
                &a + &b
            }
        }
    }
    rec(crossings, &mut Vec::new(), free)
}

fn braid(strands: usize, gens: &[i32]) -> LinkDiagram {
    BraidWord::new(strands, gens.to_vec())
        .unwrap()
        .closure_diagram()
        .unwrap()
}

/// (-1)^n [n+1] as a Laurent polynomial.
fn unknot_color(n: i64) -> LaurentPoly {
    let s = if n % 2 == 0 { 1 } else { -1 };
    LaurentPoly::quantum_integer(n + 1).scale(&BigInt::from(s))
}

#[test]
fn single_loop_and_empty() {
    assert_eq!(kauffman_bracket(&LinkDiagram::unknot()).unwrap(), delta());
    let empty = LinkDiagram::new(vec![], 0).unwrap();
    assert_eq!(kauffman_bracket(&empty).unwrap(), LaurentPoly::one());
}

#[test]
fn hopf_link_golden() {
    // positive Hopf link as the closure of sigma_1^2
    let d = braid(2, &[1, 1]);
    let expected = &delta() * &lp(&[(4, -1), (-4, -1)]);
    assert_eq!(expected, lp(&[(6, 1), (2, 1), (-2, 1), (-6, 1)]));
    assert_eq!(kauffman_bracket(&d).unwrap(), expected);
    assert_eq!(oracle_bracket(d.crossings(), d.free_loops()), expected);
}

#[test]
fn trefoil_golden() {
    let d = braid(2, &[1, 1, 1]);
    let expected = lp(&[(7, 1), (3, 1), (-1, 1), (-9, -1)]);
    assert_eq!(expected, &delta() * &lp(&[(5, -1), (-3, -1), (-7, 1)]));
    assert_eq!(kauffman_bracket(&d).unwrap(), expected);
    assert_eq!(oracle_bracket(d.crossings(), d.free_loops()), expected);
}

#[test]
fn figure_eight_matches_oracle() {
    let d = braid(3, &[1, -2, 1, -2]);
    let got = kauffman_bracket(&d).unwrap();
    assert_eq!(got, oracle_bracket(d.crossings(), d.free_loops()));
    // amphichiral and writhe 0: the bracket is symmetric under A -> 1/A
    assert_eq!(got.mirror(), got);
}

#[test]
fn reidemeister_one_kinks() {
    let pos = LinkDiagram::new(vec![[2, 2, 1, 1]], 0).unwrap();
    let neg = LinkDiagram::new(vec![[1, 2, 2, 1]], 0).unwrap();
    assert_eq!(pos.writhe(), 1);
    assert_eq!(neg.writhe(), -1);
    assert_eq!(kauffman_bracket(&pos).unwrap(), &delta() * &lp(&[(3, -1)]));
    assert_eq!(kauffman_bracket(&neg).unwrap(), &delta() * &lp(&[(-3, -1)]));
}

#[test]
fn reidemeister_two_and_three() {
    // sigma_1 sigma_1^-1 closes to a two-component unlink
    assert_eq!(kauffman_bracket(&braid(2, &[1, -1])).unwrap(), delta().pow(2));
    let l = kauffman_bracket(&braid(3, &[1, 2, 1, -2])).unwrap();
    let r = kauffman_bracket(&braid(3, &[2, 1, 2, -2])).unwrap();
    assert_eq!(l, r);
}

#[test]
fn pd_text_round_trip() {
    let d = LinkDiagram::parse("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n").unwrap();
    assert_eq!(d.components().len(), 1);
    assert_eq!(kauffman_bracket(&d).unwrap(), oracle_bracket(d.crossings(), 0));
    assert_eq!(d.writhe().abs(), 3);
}

#[test]
fn colored_unknot_zero_framed() {
    let round = LinkDiagram::unknot();
    // a 2-crossing unknot diagram with writhe 0
    let twisted = braid(3, &[1, -2]);
    assert_eq!(twisted.components().len(), 1);
    assert_eq!(twisted.writhe(), 0);
    for n in 0..=4u32 {
        let want = unknot_color(n as i64);
        assert_eq!(colored_bracket(&round, &[n]).unwrap(), want, "round n={n}");
        if n <= 3 {
            assert_eq!(colored_bracket(&twisted, &[n]).unwrap(), want, "twisted n={n}");
        }
    }
}

#[test]
fn colored_plus_one_framed_unknot() {
    let kink = LinkDiagram::new(vec![[2, 2, 1, 1]], 0).unwrap();
    let framed_loop = LinkDiagram::parse("F 1\n").unwrap();
    for n in 0..=3i64 {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let want = &lp(&[(n * n + 2 * n, sign)]) * &unknot_color(n);
        assert_eq!(colored_bracket(&kink, &[n as u32]).unwrap(), want, "kink n={n}");
        assert_eq!(colored_bracket(&framed_loop, &[n as u32]).unwrap(), want, "F1 n={n}");
    }
}

#[test]
fn colored_trivial_colors() {
    let d = braid(3, &[1, -2, 1, -2]);
    assert_eq!(colored_bracket(&d, &[0]).unwrap(), LaurentPoly::one());
    assert_eq!(colored_bracket(&d, &[1]).unwrap(), kauffman_bracket(&d).unwrap());
    let hopf = braid(2, &[1, 1]);
    assert_eq!(colored_bracket(&hopf, &[0, 0]).unwrap(), LaurentPoly::one());
    assert_eq!(colored_bracket(&hopf, &[1, 0]).unwrap(), delta());
}

#[test]
fn cabled_crossing_guard() {
    let d = braid(2, &[1, 1, 1]);
    assert!(matches!(
        colored_bracket(&d, &[3]),
        Err(so3q::Error::TooManyCrossings { crossings: 27, .. })
    ));
}

#[test]
fn quantum_integer_examples() {
    for r in 3..10 {
        let ctx = RootContext::new(r).unwrap();
        assert!((quantum_integer(1, &ctx) - 1.0).abs() < 1e-14);
        assert!(quantum_integer(2 * r as i64 + 1, &ctx).abs() < 1e-12);
    }
    let ctx = RootContext::new(3).unwrap();
    let want = 2.0 * (2.0 * std::f64::consts::PI / 7.0).cos();
    assert!((quantum_integer(2, &ctx) - want).abs() < 1e-12);
    assert!((quantum_integer(2, &ctx) - 1.246980).abs() < 1e-6);
}

#[test]
fn eval_examples() {
    let ctx = RootContext::new(3).unwrap();
    assert!((eval_at_root(&LaurentPoly::one(), &ctx) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    let full = LaurentPoly::monomial(1, 4 * 3 + 2);
    assert!((eval_at_root(&full, &ctx) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    let v = eval_at_root(&delta(), &ctx);
    assert!((v.re + 1.246980).abs() < 1e-6 && v.im.abs() < 1e-12);
}

#[test]
fn chebyshev_examples() {
    let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(chebyshev_coeffs(0).coeffs, big(&[1]));
    assert_eq!(chebyshev_coeffs(2).coeffs, big(&[-1, 0, 1]));
    assert_eq!(chebyshev_coeffs(5).coeffs, big(&[0, 3, 0, -4, 0, 1]));
}

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -5i64..=5), 0..6).prop_map(LaurentPoly::from_terms)
}

fn braid_word(strands: usize) -> impl Strategy<Value = Vec<i32>> {
    let s = strands as i32 - 1;
    prop::collection::vec(
        (1..=s, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g }),
        0..6,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!(a.terms().all(|(_, c)| c != &BigInt::from(0)));
    }

    #[test]
    fn division_inverts_multiplication(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn eval_is_ring_homomorphism(a in small_poly(), b in small_poly(), r in 3u32..12) {
        let ctx = RootContext::new(r).unwrap();
        let lhs = eval_at_root(&(&a * &b), &ctx);
        let rhs = eval_at_root(&a, &ctx) * eval_at_root(&b, &ctx);
        prop_assert!((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
        let sum = eval_at_root(&(&a + &b), &ctx) - eval_at_root(&a, &ctx) - eval_at_root(&b, &ctx);
        prop_assert!(sum.norm() < 1e-12 * (1.0 + rhs.norm()));
    }

    #[test]
    fn chebyshev_shape(n in 0u32..30) {
        let e = chebyshev_coeffs(n);
        prop_assert_eq!(e.coeffs.len(), n as usize + 1);
        prop_assert_eq!(e.coeffs.last().unwrap(), &BigInt::from(1));
    }

    #[test]
    fn state_sum_matches_recursive_oracle(w in braid_word(3)) {
        let d = braid(3, &w);
        prop_assert_eq!(kauffman_bracket(&d).unwrap(), oracle_bracket(d.crossings(), d.free_loops()));
    }

    #[test]
    fn reidemeister_two_insertion(w in braid_word(3), at in 0usize..7, g in 1i32..=2, neg in any::<bool>()) {
        let g = if neg { -g } else { g };
        let mut w2 = w.clone();
        let at = at.min(w.len());
        w2.splice(at..at, [g, -g]);
        prop_assert_eq!(kauffman_bracket(&braid(3, &w)).unwrap(), kauffman_bracket(&braid(3, &w2)).unwrap());
    }

    #[test]
    fn reidemeister_three_braid_relation(pre in braid_word(3), post in braid_word(3)) {
        let mut a = pre.clone();
        a.extend([1, 2, 1]);
        a.extend(&post);
        let mut b = pre.clone();
        b.extend([2, 1, 2]);
        b.extend(&post);
        prop_assert_eq!(kauffman_bracket(&braid(3, &a)).unwrap(), kauffman_bracket(&braid(3, &b)).unwrap());
    }

    #[test]
    fn stabilization_is_a_kink(w in braid_word(3), neg in any::<bool>()) {
        // adding a strand with sigma_3^{+-1} is a Reidemeister I move
        let mut w4 = w.clone();
        w4.push(if neg { -3 } else { 3 });
        let base = kauffman_bracket(&braid(3, &w)).unwrap();
        let kink = LaurentPoly::monomial(-1, if neg { -3 } else { 3 });
        prop_assert_eq!(kauffman_bracket(&braid(4, &w4)).unwrap(), &base * &kink);
    }

    #[test]
    fn colored_color_one_is_bracket(w in braid_word(3)) {
        let d = braid(3, &w);
        let ones = vec![1u32; d.components().len()];
        prop_assert_eq!(colored_bracket(&d, &ones).unwrap(), kauffman_bracket(&d).unwrap());
    }
}
