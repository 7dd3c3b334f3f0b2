use rayon::prelude::*;
use serde::Serialize;

use crate::exact::Exponent;
use crate::words::{britton_reduce, HnnWord};

use super::{canonicalize, check_ledger, PiQ};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The normalized corner entries reach the ledger degree exactly.
    NontrivialByDegree,
    /// The image is not a scalar matrix.
    NontrivialByNonscalar,
    /// The image is the identity.
    Trivial,
    /// No certificate applies: the image is scalar but not the identity, or
    /// the degree argument was unavailable and the image is scalar.
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub word: HnnWord,
    pub reduced: HnnWord,
    /// Cyclically reduced conjugate used for the ledger, if the word is not
    /// conjugate into Γ.
    pub canonical: Option<HnnWord>,
    #[serde(serialize_with = "super::ser_opt_exponent")]
    pub d_k: Option<Exponent>,
    #[serde(serialize_with = "super::ser_opt_exponent")]
    pub degree_11: Option<Exponent>,
    #[serde(serialize_with = "super::ser_opt_exponent")]
    pub degree_1d: Option<Exponent>,
    pub verdict: Verdict,
}

/// Certifies that `word` is nontrivial in `Γ∗_⟨w⟩` through its image.
///
/// Words reducing into Γ are compared with the identity. Otherwise, when
/// every syllable element of the canonical conjugate passes the corner check,
/// the ledger degrees are verified; failing that, the certificate falls back
/// to exact non-scalarity of the image.
pub fn certify_nontrivial(pi: &PiQ, word: &HnnWord) -> Certificate {
    let reduced = britton_reduce(word, pi.oracle());
    let mut cert = Certificate {
        word: word.clone(),
        reduced: reduced.clone(),
        canonical: None,
        d_k: None,
        degree_11: None,
        degree_1d: None,
        verdict: Verdict::Indeterminate,
    };
    let image = pi.evaluate(&reduced);
    let nonscalar_verdict = if image.is_identity() {
        Verdict::Trivial
    } else if !image.is_scalar_multiple_of_identity() {
        Verdict::NontrivialByNonscalar
    } else {
        Verdict::Indeterminate
    };
    if reduced.is_in_gamma() {
        cert.verdict = nonscalar_verdict;
        return cert;
    }
    let Some(canonical) = canonicalize(&reduced, pi.oracle()) else {
        cert.verdict = nonscalar_verdict;
        return cert;
    };
    cert.canonical = Some(canonical.word.clone());
    let corners_ok = canonical.word.syllables().iter().all(|s| pi.corner_check(s.element()));
    if corners_ok {
        if let Ok(check) = check_ledger(pi, &canonical.word) {
            cert.d_k = Some(check.d_k);
            cert.degree_11 = check.degree_11;
            cert.degree_1d = check.degree_1d;
            if check.holds() {
                cert.verdict = Verdict::NontrivialByDegree;
                return cert;
            }
        }
    }
    cert.verdict = nonscalar_verdict;
    cert
}

/// Certificates in input order, computed in parallel.
pub fn certify_batch(pi: &PiQ, words: &[HnnWord]) -> Vec<Certificate> {
    words.par_iter().map(|w| certify_nontrivial(pi, w)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linearize::{build_pi_q, schottky_q5};
    use crate::words::{HnnLetter, Letter};

    fn word(letters: &[HnnLetter]) -> HnnWord {
        HnnWord::from_letters(letters.iter().copied())
    }

    const W: HnnLetter = HnnLetter::G(Letter(0, 1));
    const WI: HnnLetter = HnnLetter::G(Letter(0, -1));
    const B: HnnLetter = HnnLetter::G(Letter(1, 1));
    const BI: HnnLetter = HnnLetter::G(Letter(1, -1));
    const T: HnnLetter = HnnLetter::T(1);
    const TI: HnnLetter = HnnLetter::T(-1);

    #[test]
    fn verdicts_on_fixture() {
        let pi = build_pi_q(&schottky_q5()).unwrap();
        assert_eq!(certify_nontrivial(&pi, &word(&[T, W, TI, WI])).verdict, Verdict::Trivial);

        let cert = certify_nontrivial(&pi, &word(&[T, B, TI, BI]));
        assert_eq!(cert.verdict, Verdict::NontrivialByDegree);
        assert_eq!(cert.d_k, Some(Exponent::from_integer(4)));
        assert_eq!(cert.degree_11, Some(Exponent::from_integer(4)));

        assert_eq!(certify_nontrivial(&pi, &word(&[B])).verdict, Verdict::NontrivialByNonscalar);
    }

    #[test]
    fn conjugates_of_w_fall_back_to_nonscalar() {
        let pi = build_pi_q(&schottky_q5()).unwrap();
        // t·w is a single syllable whose element fails the corner check
        let cert = certify_nontrivial(&pi, &word(&[T, W]));
        assert_eq!(cert.verdict, Verdict::NontrivialByNonscalar);
        assert!(cert.d_k.is_none());
    }

    #[test]
    fn batch_preserves_order() {
        let pi = build_pi_q(&schottky_q5()).unwrap();
        let words = vec![word(&[B]), word(&[T, W, TI, WI]), word(&[T, B, TI, BI])];
        let verdicts: Vec<_> = certify_batch(&pi, &words).into_iter().map(|c| c.verdict).collect();
        assert_eq!(verdicts, [Verdict::NontrivialByNonscalar, Verdict::Trivial, Verdict::NontrivialByDegree]);
    }

    #[test]
    fn certificate_json() {
        let pi = build_pi_q(&schottky_q5()).unwrap();
        let cert = certify_nontrivial(&pi, &word(&[T, B, TI, BI]));
        let js = serde_json::to_value(&cert).unwrap();
        assert_eq!(js["verdict"], "nontrivial-by-degree");
        assert_eq!(js["d_k"], "4");
    }
}
