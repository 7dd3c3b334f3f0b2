use crate::exact::ScalarMatrix;
use crate::words::GammaElement;

use super::{conjugator_from_biproximal, RepSpec, WeightData};

/// Two-generator Schottky subgroup of SL(2, ℤ) with `w = a`, whose
/// eigenvalues `(7 ± 3√5)/2` live in ℚ(√5), and weights `χ = (1, −1)`.
pub fn schottky_q5() -> RepSpec {
    let a = ScalarMatrix::from_integers(&[&[5, 3], &[3, 2]]).expect("square");
    let b = ScalarMatrix::from_integers(&[&[2, 3], &[3, 5]]).expect("square");
    let (h, _, _) = conjugator_from_biproximal(&a).expect("a is hyperbolic");
    RepSpec {
        name: Some("schottky-q5".into()),
        d: 2,
        m: Some(5),
        generators: vec![a, b],
        w: GammaElement::generator(0, 1),
        h: Some(h),
        weights: WeightData::from_integers(&[1, -1]).expect("nonconstant weights"),
    }
}
