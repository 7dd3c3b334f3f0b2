use num_traits::Zero;

use crate::exact::{Exponent, QMatrix, QPoly, Ring, ScalarMatrix};
use crate::words::{CyclicMembership, GammaElement, HnnWord};

use super::{LinearizeError, RepSpec, ValidatedSpec, WeightData};

/// The representation `t ↦ diag(q^{χ₁},…,q^{χ_d})`, `γ ↦ h·ρ(γ)·h⁻¹` of the
/// HNN extension `Γ∗_⟨w⟩`. Immutable once built.
#[derive(Clone, Debug)]
pub struct PiQ {
    spec: ValidatedSpec,
}

/// `image = q^shift · matrix`, where every entry of `matrix` is a polynomial
/// in `q` (no negative exponents).
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedImage {
    pub shift: Exponent,
    pub matrix: QMatrix,
}

impl NormalizedImage {
    pub fn expand(&self) -> QMatrix {
        self.matrix.map(|p| p.shift(self.shift))
    }
}

/// Validates `spec` and builds the representation.
pub fn build_pi_q(spec: &RepSpec) -> Result<PiQ, LinearizeError> {
    Ok(PiQ { spec: spec.validate()? })
}

/// Exact image of `word` under `π_q`.
pub fn evaluate_word(pi: &PiQ, word: &HnnWord) -> QMatrix {
    pi.evaluate(word)
}

/// Multiply column `j` by `q^{eⱼ}`.
fn shift_columns(m: &QMatrix, e: &[Exponent]) -> QMatrix {
    QMatrix::from_fn(m.dim(), |i, j| m.get(i, j).shift(e[j]))
}

/// `m · c` for a constant matrix `c`.
fn times_constant(m: &QMatrix, c: &ScalarMatrix) -> QMatrix {
    let d = m.dim();
    QMatrix::from_fn(d, |i, j| {
        let mut acc = QPoly::zero();
        for k in 0..d {
            let ckj = c.get(k, j);
            if !ckj.is_zero() {
                acc = acc.plus(&m.get(i, k).scale(ckj));
            }
        }
        acc
    })
}

impl PiQ {
    pub fn validated(&self) -> &ValidatedSpec {
        &self.spec
    }

    pub fn spec(&self) -> &RepSpec {
        self.spec.spec()
    }

    pub fn weights(&self) -> &WeightData {
        self.spec.weights()
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn oracle(&self) -> &CyclicMembership {
        self.spec.membership()
    }

    /// `h·ρ(γ)·h⁻¹`.
    pub fn gamma_image(&self, g: &GammaElement) -> ScalarMatrix {
        self.spec.gamma_image(g)
    }

    /// `π_q(tᵖ) = diag(q^{pχᵢ})`.
    pub fn stable_image(&self, p: i64) -> QMatrix {
        QMatrix::diag_q_powers(&self.weights().scaled(p))
    }

    pub fn corner_check(&self, g: &GammaElement) -> bool {
        self.spec.corner_check(g)
    }

    pub fn evaluate(&self, word: &HnnWord) -> QMatrix {
        let mut m = self.gamma_image(word.prefix()).to_qmatrix();
        for s in word.syllables() {
            m = shift_columns(&m, &self.weights().scaled(s.power()));
            m = times_constant(&m, &self.gamma_image(s.element()));
        }
        m
    }

    /// The image factored as `q^s · N` with `N` polynomial: each `tᵖ`
    /// contributes `q^{mᵢ}·Aᵢ` where `Aᵢ` is diagonal with exponents
    /// `p(χⱼ − χ_d)` (`p > 0`) or `p(χⱼ − χ₁)` (`p < 0`).
    pub fn evaluate_normalized(&self, word: &HnnWord) -> NormalizedImage {
        let mut m = self.gamma_image(word.prefix()).to_qmatrix();
        let mut shift = Exponent::zero();
        for s in word.syllables() {
            let (exps, mono) = self.weights().normalized_power(s.power());
            shift += mono;
            m = shift_columns(&m, &exps);
            m = times_constant(&m, &self.gamma_image(s.element()));
        }
        NormalizedImage { shift, matrix: m }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linearize::schottky_q5;
    use crate::words::{HnnLetter, Letter};

    fn pi() -> PiQ {
        build_pi_q(&schottky_q5()).unwrap()
    }

    fn word(letters: &[HnnLetter]) -> HnnWord {
        HnnWord::from_letters(letters.iter().copied())
    }

    const W: HnnLetter = HnnLetter::G(Letter(0, 1));
    const WI: HnnLetter = HnnLetter::G(Letter(0, -1));
    const B: HnnLetter = HnnLetter::G(Letter(1, 1));
    const T: HnnLetter = HnnLetter::T(1);
    const TI: HnnLetter = HnnLetter::T(-1);

    #[test]
    fn defining_relation_holds() {
        let pi = pi();
        assert!(pi.evaluate(&word(&[T, W, TI, WI])).is_identity());
        assert_eq!(pi.evaluate(&word(&[T, W, TI])), pi.evaluate(&word(&[W])));
        assert!(pi.stable_image(1).mul(&pi.stable_image(-1)).is_identity());
    }

    #[test]
    fn stable_letter_squared() {
        let e = |n| Exponent::from_integer(n);
        assert_eq!(pi().stable_image(2), QMatrix::diag_q_powers(&[e(2), e(-2)]));
        assert_eq!(pi().evaluate(&word(&[T, T])), QMatrix::diag_q_powers(&[e(2), e(-2)]));
    }

    #[test]
    fn gamma_words_have_constant_images() {
        let pi = pi();
        assert!(pi.evaluate(&HnnWord::identity()).is_identity());
        let img = pi.evaluate(&word(&[B]));
        assert_eq!(img, pi.gamma_image(&GammaElement::generator(1, 1)).to_qmatrix());
        assert_eq!(img.max_degree(), Some(Exponent::zero()));
    }

    #[test]
    fn normalized_factorization_matches() {
        let pi = pi();
        for letters in [&[T, B, T, B][..], &[TI, B, T, B, TI, W, B], &[B, TI, TI, B]] {
            let w = word(letters);
            let n = pi.evaluate_normalized(&w);
            assert_eq!(n.expand(), pi.evaluate(&w));
            for i in 0..2 {
                for j in 0..2 {
                    if let Some(v) = n.matrix.get(i, j).valuation() {
                        assert!(v >= Exponent::zero());
                    }
                }
            }
        }
    }

    #[test]
    fn t_b_t_b_degrees() {
        // t·b·t·b with χ = (1, −1): s = −2 and the (1,1) entry reaches s + 4
        let pi = pi();
        let w = word(&[T, B, T, B]);
        let n = pi.evaluate_normalized(&w);
        assert_eq!(n.shift, Exponent::from_integer(-2));
        let full = pi.evaluate(&w);
        let top = n.shift + Exponent::from_integer(4);
        assert_eq!(full.get(0, 0).degree(), Some(top));
        assert!(full.max_degree().unwrap() <= top);
    }
}
