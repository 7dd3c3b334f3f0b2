use serde::Serialize;

use crate::exact::{Exponent, QMatrix};
use crate::words::{cyclically_reduce, CyclicOracle, HnnWord, Syllable};

use super::{LinearizeError, PiQ, WeightData};

/// Predicted top degree `(χ₁ − χ_d)·Σ|pᵢ|` of the normalized corner entries.
///
/// The word must be `t^{p₁}g₁⋯t^{p_k}g_k` with an empty prefix, `k ≥ 1`, and
/// either `p₁ > 0` or every `pᵢ < 0` (the mirror case).
pub fn degree_ledger(word: &HnnWord, weights: &WeightData) -> Result<Exponent, LinearizeError> {
    if !word.prefix().is_empty() {
        return Err(LinearizeError::NotCanonical("prefix must be empty".into()));
    }
    let Some(first) = word.syllables().first() else {
        return Err(LinearizeError::NotCanonical("word has no stable letters".into()));
    };
    if first.power() < 0 && word.syllables().iter().any(|s| s.power() > 0) {
        return Err(LinearizeError::NotCanonical("rotate so that p_1 > 0".into()));
    }
    Ok(weights.span() * Exponent::from_integer(word.stable_length() as i64))
}

/// A cyclically reduced conjugate rotated so that `p₁ > 0` when some power is
/// positive; `mirrored` marks the all-negative case.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalWord {
    pub word: HnnWord,
    pub mirrored: bool,
}

/// Cyclic reduction followed by rotation. `None` when the word is conjugate
/// into Γ.
pub fn canonicalize<O: CyclicOracle + ?Sized>(word: &HnnWord, oracle: &O) -> Option<CanonicalWord> {
    let cyc = cyclically_reduce(word, oracle);
    if cyc.is_in_gamma() {
        return None;
    }
    let syl = cyc.syllables();
    let (word, mirrored) = match syl.iter().position(|s| s.power() > 0) {
        Some(start) => {
            let rotated: Vec<Syllable> = syl[start..].iter().chain(&syl[..start]).cloned().collect();
            (HnnWord::new(Default::default(), rotated).expect("powers stay nonzero"), false)
        }
        None => (cyc, true),
    };
    Some(CanonicalWord { word, mirrored })
}

/// Observed degrees of the normalized image against the ledger.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LedgerCheck {
    #[serde(serialize_with = "super::ser_exponent")]
    pub d_k: Exponent,
    #[serde(serialize_with = "super::ser_exponent")]
    pub shift: Exponent,
    /// Degree of the normalized `(1,1)` entry (`(d,d)` when mirrored).
    #[serde(serialize_with = "super::ser_opt_exponent")]
    pub degree_11: Option<Exponent>,
    /// Degree of the normalized `(1,d)` entry (`(d,1)` when mirrored).
    #[serde(serialize_with = "super::ser_opt_exponent")]
    pub degree_1d: Option<Exponent>,
    /// Every entry of the leading row has degree ≤ `d_k`.
    pub leading_row_bounded: bool,
    /// Every entry outside the leading row has degree ≤ `d_k − 1`.
    pub other_rows_bounded: bool,
    pub mirrored: bool,
    /// The image is not a scalar matrix.
    pub nonscalar: bool,
}

impl LedgerCheck {
    pub fn holds(&self) -> bool {
        self.degree_11 == Some(self.d_k) && self.degree_1d == Some(self.d_k) && self.leading_row_bounded && self.other_rows_bounded
    }
}

/// Compares the normalized image of a canonical word with the ledger: the
/// `(1,1)` and `(1,d)` entries must have degree exactly `d_k`, the rest of the
/// first row at most `d_k`, and every other entry at most `d_k − 1`. The
/// all-negative case is read in the reversed basis.
pub fn check_ledger(pi: &PiQ, word: &HnnWord) -> Result<LedgerCheck, LinearizeError> {
    let d_k = degree_ledger(word, pi.weights())?;
    let mirrored = word.syllables()[0].power() < 0;
    let normalized = pi.evaluate_normalized(word);
    let n: QMatrix = if mirrored { normalized.matrix.reverse_basis() } else { normalized.matrix };
    let d = n.dim();
    let deg = |i: usize, j: usize| n.get(i, j).degree();
    let within = |i: usize, j: usize, bound: Exponent| deg(i, j).is_none_or(|e| e <= bound);
    let one = Exponent::from_integer(1);
    Ok(LedgerCheck {
        d_k,
        shift: normalized.shift,
        degree_11: deg(0, 0),
        degree_1d: deg(0, d - 1),
        leading_row_bounded: (0..d).all(|j| within(0, j, d_k)),
        other_rows_bounded: (1..d).all(|i| (0..d).all(|j| within(i, j, d_k - one))),
        mirrored,
        nonscalar: !n.is_scalar_multiple_of_identity(),
    })
}

/// `(χ₁ − χ_d)·Σ|pᵢ|` for a bare list of stable powers.
pub fn ledger_for_powers(powers: &[i64], weights: &WeightData) -> Exponent {
    let total: i64 = powers.iter().map(|p| p.abs()).sum();
    weights.span() * Exponent::from_integer(total)
}
