use serde::{Deserialize, Serialize};

use super::{CyclicOracle, GammaElement, Letter, WordsError};

/// `t^p` followed by an element of Γ.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Syllable(pub i64, pub GammaElement);

impl Syllable {
    pub fn power(&self) -> i64 {
        self.0
    }

    pub fn element(&self) -> &GammaElement {
        &self.1
    }
}

/// A letter of an HNN word: a power of the stable letter or a generator power.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HnnLetter {
    T(i64),
    G(Letter),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHnnWord {
    #[serde(default)]
    prefix: GammaElement,
    #[serde(default)]
    syllables: Vec<Syllable>,
}

impl TryFrom<RawHnnWord> for HnnWord {
    type Error = WordsError;

    fn try_from(raw: RawHnnWord) -> Result<Self, Self::Error> {
        HnnWord::new(raw.prefix, raw.syllables)
    }
}

/// `g₀ t^{p₁} g₁ ⋯ t^{p_s} g_s` in the HNN extension of Γ over `⟨w⟩` with
/// `t` acting trivially on `⟨w⟩`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "RawHnnWord")]
pub struct HnnWord {
    prefix: GammaElement,
    syllables: Vec<Syllable>,
}

impl HnnWord {
    pub fn new(prefix: GammaElement, syllables: Vec<Syllable>) -> Result<Self, WordsError> {
        if let Some(index) = syllables.iter().position(|s| s.0 == 0) {
            return Err(WordsError::ZeroStablePower { index });
        }
        Ok(HnnWord { prefix, syllables })
    }

    pub fn identity() -> Self {
        HnnWord::default()
    }

    pub fn in_gamma(g: GammaElement) -> Self {
        HnnWord { prefix: g, syllables: Vec::new() }
    }

    /// `t^{p₁}g₁⋯t^{p_k}g_k` from `(pᵢ, gᵢ)` pairs.
    pub fn from_syllables<I: IntoIterator<Item = (i64, GammaElement)>>(syllables: I) -> Result<Self, WordsError> {
        HnnWord::new(GammaElement::identity(), syllables.into_iter().map(|(p, g)| Syllable(p, g)).collect())
    }

    /// Builds a word from letters, merging adjacent stable-letter powers and
    /// freely reducing generator runs.
    pub fn from_letters<I: IntoIterator<Item = HnnLetter>>(letters: I) -> Self {
        let mut elems = vec![GammaElement::identity()];
        let mut pows: Vec<i64> = Vec::new();
        for l in letters {
            match l {
                HnnLetter::T(0) => {}
                HnnLetter::T(p) => {
                    if !pows.is_empty() && elems.last().is_some_and(|e| e.is_empty()) {
                        elems.pop();
                        let merged = pows.pop().unwrap_or(0) + p;
                        if merged != 0 {
                            pows.push(merged);
                            elems.push(GammaElement::identity());
                        }
                    } else {
                        pows.push(p);
                        elems.push(GammaElement::identity());
                    }
                }
                HnnLetter::G(g) => {
                    let last = elems.last_mut().expect("element list is never empty");
                    *last = last.concat(&GammaElement::from_letters([g]));
                }
            }
        }
        Self::from_parts(elems, pows)
    }

    /// `elems.len() == pows.len() + 1`, all powers nonzero.
    fn from_parts(mut elems: Vec<GammaElement>, pows: Vec<i64>) -> Self {
        let prefix = elems.remove(0);
        let syllables = pows.into_iter().zip(elems).map(|(p, g)| Syllable(p, g)).collect();
        HnnWord { prefix, syllables }
    }

    fn into_parts(self) -> (Vec<GammaElement>, Vec<i64>) {
        let mut elems = vec![self.prefix];
        let mut pows = Vec::with_capacity(self.syllables.len());
        for Syllable(p, g) in self.syllables {
            pows.push(p);
            elems.push(g);
        }
        (elems, pows)
    }

    pub fn to_letters(&self) -> Vec<HnnLetter> {
        let mut out: Vec<HnnLetter> = self.prefix.letters().iter().map(|&l| HnnLetter::G(l)).collect();
        for s in &self.syllables {
            out.push(HnnLetter::T(s.0));
            out.extend(s.1.letters().iter().map(|&l| HnnLetter::G(l)));
        }
        out
    }

    /// Letters of exponent ±1 only.
    pub fn to_unit_letters(&self) -> Vec<HnnLetter> {
        self.to_letters()
            .into_iter()
            .flat_map(|l| {
                let (n, unit) = match l {
                    HnnLetter::T(p) => (p.unsigned_abs(), HnnLetter::T(p.signum())),
                    HnnLetter::G(Letter(g, e)) => (e.unsigned_abs(), HnnLetter::G(Letter(g, e.signum()))),
                };
                std::iter::repeat_n(unit, n as usize)
            })
            .collect()
    }

    pub fn prefix(&self) -> &GammaElement {
        &self.prefix
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// No stable letters: the word lies in Γ.
    pub fn is_in_gamma(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty() && self.prefix.is_empty()
    }

    /// `Σ |pᵢ|`.
    pub fn stable_length(&self) -> u64 {
        self.syllables.iter().map(|s| s.0.unsigned_abs()).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.to_letters();
        letters.extend(other.to_letters());
        Self::from_letters(letters)
    }

    pub fn inverse(&self) -> Self {
        let letters = self.to_letters().into_iter().rev().map(|l| match l {
            HnnLetter::T(p) => HnnLetter::T(-p),
            HnnLetter::G(Letter(g, e)) => HnnLetter::G(Letter(g, -e)),
        });
        Self::from_letters(letters)
    }

    pub fn max_generator(&self) -> Option<usize> {
        std::iter::once(&self.prefix).chain(self.syllables.iter().map(|s| &s.1)).filter_map(|g| g.max_generator()).max()
    }
}

/// Longest nonempty unit-letter prefix of `g` lying in `⟨w⟩`, as `(k, rest)`
/// with `g = wᵏ·rest`.
pub(crate) fn split_w_prefix<O: CyclicOracle + ?Sized>(g: &GammaElement, oracle: &O) -> Option<(i64, GammaElement)> {
    (1..=g.unit_length()).rev().find_map(|n| {
        let (head, rest) = g.split_units(n);
        oracle.power_of_w(&head).map(|k| (k, rest))
    })
}

/// Britton reduction in `Γ∗_⟨w⟩`.
///
/// Repeatedly (a) collapses the leftmost `t^p u t^{p'}` with `u ∈ ⟨w⟩` into
/// `u t^{p+p'}`, and (b) moves the longest `⟨w⟩`-prefix of every syllable
/// element across its stable letter to the left. Elements recognised as
/// `wᵏ` are respelled as the `k`-th power of the oracle's word for `w`, so the
/// result depends only on group elements, not on how they were spelled.
///
/// The output has no pinch; it has no stable letters iff the input lies in
/// Γ, in which case the element is returned as the prefix.
pub fn britton_reduce<O: CyclicOracle + ?Sized>(word: &HnnWord, oracle: &O) -> HnnWord {
    let w = oracle.w_word();
    let (mut elems, mut pows) = word.clone().into_parts();
    loop {
        // (a) leftmost interior element in ⟨w⟩
        let pinch = (1..pows.len()).find_map(|i| oracle.power_of_w(&elems[i]).map(|k| (i, k)));
        if let Some((i, k)) = pinch {
            elems[i - 1] = elems[i - 1].concat(&w.pow(k));
            elems.remove(i);
            let merged = pows[i - 1] + pows.remove(i);
            if merged == 0 {
                pows.remove(i - 1);
                let next = elems.remove(i);
                elems[i - 1] = elems[i - 1].concat(&next);
            } else {
                pows[i - 1] = merged;
            }
            continue;
        }
        // (b) absorb-left, right to left
        let mut moved = false;
        for i in (1..elems.len()).rev() {
            if let Some((k, rest)) = split_w_prefix(&elems[i], oracle) {
                elems[i] = rest;
                elems[i - 1] = elems[i - 1].concat(&w.pow(k));
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    if let Some(k) = oracle.power_of_w(&elems[0]) {
        elems[0] = w.pow(k);
    }
    HnnWord::from_parts(elems, pows)
}

/// Cyclic reduction of a word, up to conjugation: the result has an empty
/// prefix and no syllable element (cyclically) in `⟨w⟩`, unless a single
/// syllable remains. A word conjugate into Γ comes back with no syllables.
pub fn cyclically_reduce<O: CyclicOracle + ?Sized>(word: &HnnWord, oracle: &O) -> HnnWord {
    let reduced = britton_reduce(word, oracle);
    let (mut elems, mut pows) = reduced.into_parts();
    if pows.is_empty() {
        return HnnWord::in_gamma(elems.remove(0));
    }
    // rotate the prefix onto the tail: g₀ X g_s ~ X (g_s g₀)
    let g0 = elems.remove(0);
    let last = elems.len() - 1;
    elems[last] = elems[last].concat(&g0);
    // elems[i] follows t^{pows[i]}, cyclically
    let w = oracle.w_word();
    while pows.len() > 1 {
        let n = pows.len();
        let Some((i, k)) = (0..n).find_map(|i| oracle.power_of_w(&elems[i]).map(|k| (i, k))) else {
            break;
        };
        // t^{pᵢ} wᵏ t^{pᵢ₊₁} gᵢ₊₁ = wᵏ t^{pᵢ+pᵢ₊₁} gᵢ₊₁ and wᵏ joins the element before t^{pᵢ}
        let prev = (i + n - 1) % n;
        let next = (i + 1) % n;
        elems[prev] = elems[prev].concat(&w.pow(k));
        let merged = pows[i] + pows[next];
        let next_elem = elems[next].clone();
        if merged == 0 && n == 2 {
            return HnnWord::in_gamma(elems.swap_remove(prev));
        } else if merged == 0 {
            // the two stable letters cancel: prev element absorbs next element
            elems[prev] = elems[prev].concat(&next_elem);
            let (hi, lo) = if i > next { (i, next) } else { (next, i) };
            pows.remove(hi);
            pows.remove(lo);
            elems.remove(hi);
            elems.remove(lo);
            if pows.is_empty() {
                return HnnWord::in_gamma(elems.remove(0));
            }
        } else {
            pows[i] = merged;
            elems[i] = next_elem;
            pows.remove(next);
            elems.remove(next);
        }
    }
    HnnWord { prefix: GammaElement::identity(), syllables: pows.into_iter().zip(elems).map(|(p, g)| Syllable(p, g)).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// ⟨w⟩ for `w` = generator 0 in the free group on two generators: an
    /// element lies in ⟨w⟩ iff its reduced spelling is a single power of 0.
    struct FreeOracle(GammaElement);

    impl CyclicOracle for FreeOracle {
        fn power_of_w(&self, g: &GammaElement) -> Option<i64> {
            match g.letters() {
                [] => Some(0),
                [Letter(0, k)] => Some(*k),
                _ => None,
            }
        }
        fn w_word(&self) -> &GammaElement {
            &self.0
        }
    }

    fn oracle() -> FreeOracle {
        FreeOracle(GammaElement::generator(0, 1))
    }

    fn w(k: i64) -> HnnLetter {
        HnnLetter::G(Letter(0, k))
    }
    fn b(k: i64) -> HnnLetter {
        HnnLetter::G(Letter(1, k))
    }
    fn t(k: i64) -> HnnLetter {
        HnnLetter::T(k)
    }

    #[test]
    fn pinch_collapses_to_prefix() {
        let word = HnnWord::from_letters([t(1), w(1), t(-1)]);
        let r = britton_reduce(&word, &oracle());
        assert!(r.is_in_gamma());
        assert_eq!(r.prefix(), &GammaElement::generator(0, 1));
    }

    #[test]
    fn no_pinch_is_left_alone() {
        let word = HnnWord::from_letters([t(1), b(1), t(-1)]);
        assert_eq!(britton_reduce(&word, &oracle()), word);
    }

    #[test]
    fn two_step_reduction_to_empty() {
        let word = HnnWord::from_letters([t(1), w(2), t(-1), w(-2)]);
        assert!(britton_reduce(&word, &oracle()).is_empty());
    }

    #[test]
    fn w_prefix_moves_left_and_powers_merge() {
        let word = HnnWord::from_letters([t(1), w(1), t(1), w(2), b(1)]);
        let r = britton_reduce(&word, &oracle());
        assert_eq!(r, HnnWord::from_letters([w(3), t(2), b(1)]));
    }

    #[test]
    fn json_shape_and_zero_power_rejected() {
        let word = HnnWord::from_letters([w(1), t(2), b(-1)]);
        let js = serde_json::to_string(&word).unwrap();
        assert_eq!(js, r#"{"prefix":[[0,1]],"syllables":[[2,[[1,-1]]]]}"#);
        assert_eq!(serde_json::from_str::<HnnWord>(&js).unwrap(), word);
        assert!(serde_json::from_str::<HnnWord>(r#"{"prefix":[],"syllables":[[0,[]]]}"#).is_err());
        assert!(serde_json::from_str::<HnnWord>(r#"{"prefix":[],"extra":1}"#).is_err());
    }

    #[test]
    fn inverse_cancels() {
        let word = HnnWord::from_letters([w(1), t(2), b(-1), t(-1), b(3)]);
        assert!(word.concat(&word.inverse()).is_empty());
    }

    #[test]
    fn cyclic_reduction_rotates_and_merges() {
        // b t w b^{-1} is conjugate to t w
        let word = HnnWord::from_letters([b(1), t(1), w(1), b(-1)]);
        let c = cyclically_reduce(&word, &oracle());
        assert_eq!(c.syllables().len(), 1);
        assert_eq!(c.syllables()[0].power(), 1);
        assert_eq!(oracle().power_of_w(c.syllables()[0].element()), Some(1));
        // t b t^{-1} b^{-1} stays with two syllables
        let word = HnnWord::from_letters([t(1), b(1), t(-1), b(-1)]);
        assert_eq!(cyclically_reduce(&word, &oracle()).syllables().len(), 2);
        // w t w t^{-1} is conjugate into Γ
        let word = HnnWord::from_letters([w(1), t(1), w(1), t(-1)]);
        assert!(cyclically_reduce(&word, &oracle()).is_in_gamma());
        // t w t^{-1} b reduces to w b
        let word = HnnWord::from_letters([t(1), w(1), t(-1), b(1)]);
        let c = cyclically_reduce(&word, &oracle());
        assert!(c.is_in_gamma());
        assert_eq!(c.prefix(), &GammaElement::from_letters([Letter(0, 1), Letter(1, 1)]));
    }
}
