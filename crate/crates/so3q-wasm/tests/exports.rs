use so3q_wasm::{colored_jones, figure_eight_reference, theta_field, word_matrix, word_representation};

#[test]
fn jones_export() {
    let v = colored_jones("figure-eight", 1, 5).unwrap();
    assert!((v[0] - 1.0).abs() < 1e-12 && v[1].abs() < 1e-12);
    assert_eq!(v.len(), 5);
    assert_eq!(v[4], figure_eight_reference());
}

#[test]
fn word_exports() {
    assert_eq!(word_matrix("S").unwrap(), vec![0, -1, 1, 0]);
    assert_eq!(word_matrix("T^2").unwrap(), vec![1, 2, 0, 1]);
    let t = word_representation("T", 3).unwrap();
    assert_eq!(t.len(), 18);
    assert_eq!((t[2], t[3]), (0.0, 0.0));
}

#[test]
fn theta_export() {
    let f = theta_field(3, 0.0, 1.0, 1, 8).unwrap();
    assert_eq!(f.len(), 64);
    // odd sections vanish at the origin
    assert!(f[0] < 1e-12);
    assert!(f.iter().all(|x| x.is_finite()));
}
