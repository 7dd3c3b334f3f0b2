use hnnlin::spectra::{
    cartan_projection, exterior_power, gt_matrix, jordan_projection, obstruction_witness, power_length_check, quat_complex_embed, symmetric_power,
    to_complex, translation_length_quat, translation_length_via_rep, Obstruction, PowerRep, QuatMatrix, RealMatrix, DEFAULT_TOL,
};
use nalgebra::Quaternion;
use proptest::prelude::*;

fn matrix(d: usize) -> impl Strategy<Value = RealMatrix> {
    prop::collection::vec(-2.0f64..2.0, d * d)
        .prop_map(move |v| RealMatrix::from_row_slice(d, d, &v))
        .prop_filter("well conditioned", |m| m.determinant().abs() > 0.05)
}

/// Rescaled to determinant ±1.
fn sl_matrix(d: usize) -> impl Strategy<Value = RealMatrix> {
    matrix(d).prop_map(move |m| {
        let s = m.determinant().abs().powf(-1.0 / d as f64);
        m * s
    })
}

fn quat_matrix(n: usize) -> impl Strategy<Value = QuatMatrix> {
    prop::collection::vec(prop::array::uniform4(-2.0f64..2.0), n * n).prop_map(move |v| {
        let rows = v.chunks(n).map(|r| r.iter().map(|&[a, b, c, d]| Quaternion::new(a, b, c, d)).collect()).collect();
        QuatMatrix::from_rows(rows).unwrap()
    })
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol * (1.0 + x.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cartan_of_inverse(g in matrix(3)) {
        let mu = cartan_projection(&g).unwrap();
        let inv = cartan_projection(&g.clone().try_inverse().unwrap()).unwrap();
        let want: Vec<f64> = mu.iter().rev().map(|x| -x).collect();
        prop_assert!(close(&inv, &want, 1e-9), "{:?} vs {:?}", inv, want);
    }

    #[test]
    fn jordan_is_dominated_by_cartan(g in matrix(4)) {
        let mu = cartan_projection(&g).unwrap();
        let ell = jordan_projection(&g).unwrap();
        let (mut sm, mut sl) = (0.0, 0.0);
        for i in 0..4 {
            sm += mu[i];
            sl += ell[i];
            prop_assert!(sl <= sm + 1e-9 * (1.0 + sm.abs()));
        }
        prop_assert!((sl - sm).abs() < 1e-9 * (1.0 + sm.abs()));
    }

    #[test]
    fn jordan_is_conjugation_invariant(g in matrix(3), h in matrix(3)) {
        let conj = &h * &g * h.clone().try_inverse().unwrap();
        let a = jordan_projection(&g).unwrap();
        let b = jordan_projection(&conj).unwrap();
        prop_assert!(close(&a, &b, 1e-6), "{:?} vs {:?}", a, b);
    }

    #[test]
    fn exterior_powers_are_multiplicative(g in sl_matrix(4), h in sl_matrix(4), p in 1usize..=4) {
        let lhs = exterior_power(&(&g * &h), p).unwrap();
        let rhs = exterior_power(&g, p).unwrap() * exterior_power(&h, p).unwrap();
        prop_assert!((&lhs - &rhs).norm() < 1e-9 * (1.0 + lhs.norm()));
    }

    #[test]
    fn symmetric_powers_are_multiplicative(g in sl_matrix(3), h in sl_matrix(3), p in 1usize..=3) {
        let lhs = symmetric_power(&(&g * &h), p).unwrap();
        let rhs = symmetric_power(&g, p).unwrap() * symmetric_power(&h, p).unwrap();
        prop_assert!((&lhs - &rhs).norm() < 1e-9 * (1.0 + lhs.norm()));
    }

    #[test]
    fn translation_length_is_conjugation_invariant(t in 0.1f64..2.0, h in sl_matrix(3)) {
        let g = to_complex(&(&h * gt_matrix(t, 2) * h.clone().try_inverse().unwrap()));
        let m = exterior_power(&g, 2).unwrap();
        let tl = translation_length_via_rep(&m, 1e-7).unwrap();
        prop_assert!((tl.length - t).abs() < 1e-7, "{:?}", tl);
    }

    #[test]
    fn quaternion_embedding_is_multiplicative(a in quat_matrix(2), b in quat_matrix(2)) {
        let lhs = quat_complex_embed(&a.mul(&b));
        let rhs = quat_complex_embed(&a) * quat_complex_embed(&b);
        prop_assert!((&lhs - &rhs).norm() < 1e-12 * (1.0 + lhs.norm()));
    }
}

#[test]
fn translation_length_through_powers() {
    for k in [2, 3] {
        for rep in [PowerRep::Exterior, PowerRep::Symmetric] {
            for p in [2, 3] {
                for t in [0.25, 0.5, 1.0, 2.0] {
                    let r = power_length_check(k, rep, p, t, DEFAULT_TOL).unwrap();
                    if rep == PowerRep::Exterior && p == k + 1 {
                        assert!(r.length.elliptic, "{r:?}");
                    } else {
                        assert!(r.holds, "{r:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn conjugate_pairs_are_inconclusive() {
    let g = QuatMatrix::gt_sp(1.0, 2);
    // a boost along the first coordinate composed with a quaternionic phase
    let s: f64 = 0.6;
    let mut boost = RealMatrix::identity(3, 3);
    boost[(0, 0)] = s.cosh();
    boost[(2, 2)] = s.cosh();
    boost[(0, 2)] = s.sinh();
    boost[(2, 0)] = s.sinh();
    let phase = QuatMatrix::from_rows(vec![
        vec![Quaternion::new(0.0, 1.0, 0.0, 0.0), Quaternion::new(0.0, 0.0, 0.0, 0.0), Quaternion::new(0.0, 0.0, 0.0, 0.0)],
        vec![Quaternion::new(0.0, 0.0, 0.0, 0.0), Quaternion::new(0.0, 0.0, 1.0, 0.0), Quaternion::new(0.0, 0.0, 0.0, 0.0)],
        vec![Quaternion::new(0.0, 0.0, 0.0, 0.0), Quaternion::new(0.0, 0.0, 0.0, 0.0), Quaternion::new(1.0, 0.0, 0.0, 0.0)],
    ])
    .unwrap();
    let h = QuatMatrix::from_real(&boost).unwrap().mul(&phase);
    let h_inv = QuatMatrix::j_form(3).mul(&h.adjoint()).mul(&QuatMatrix::j_form(3));
    assert!(h.mul(&h_inv).j_residual() < 1e-12);
    let conj = h.mul(&g).mul(&h_inv);
    assert!((translation_length_quat(&conj, DEFAULT_TOL).unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(obstruction_witness(&g, &conj, DEFAULT_TOL).unwrap().verdict, Obstruction::Inconclusive);
}
