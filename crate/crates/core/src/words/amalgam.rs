use serde::{Deserialize, Serialize};

use super::{CyclicOracle, GammaElement, GeneratorSet, WordsError};

/// Which copy of Γ a syllable belongs to. Serialized as `1` or `2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Factor {
    First,
    Second,
}

impl Factor {
    pub fn other(self) -> Self {
        match self {
            Factor::First => Factor::Second,
            Factor::Second => Factor::First,
        }
    }
}

impl TryFrom<u8> for Factor {
    type Error = WordsError;

    fn try_from(tag: u8) -> Result<Self, Self::Error> {
        match tag {
            1 => Ok(Factor::First),
            2 => Ok(Factor::Second),
            other => Err(WordsError::InvalidFactor(other)),
        }
    }
}

impl From<Factor> for u8 {
    fn from(f: Factor) -> u8 {
        match f {
            Factor::First => 1,
            Factor::Second => 2,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AmalgamSyllable(pub Factor, pub GammaElement);

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAmalgamWord {
    syllables: Vec<AmalgamSyllable>,
}

impl From<RawAmalgamWord> for AmalgamWord {
    fn from(raw: RawAmalgamWord) -> Self {
        AmalgamWord::new(raw.syllables)
    }
}

/// An alternating product of elements of the two factors of an amalgam
/// `Γ₁ ∗_E Γ₂`. Construction drops empty syllables and merges neighbours
/// with equal tags, so tags always alternate.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(from = "RawAmalgamWord")]
pub struct AmalgamWord {
    syllables: Vec<AmalgamSyllable>,
}

impl AmalgamWord {
    pub fn new<I: IntoIterator<Item = AmalgamSyllable>>(syllables: I) -> Self {
        let mut out: Vec<AmalgamSyllable> = Vec::new();
        for AmalgamSyllable(f, g) in syllables {
            match out.last_mut() {
                Some(last) if last.0 == f => {
                    last.1 = last.1.concat(&g);
                    if last.1.is_empty() {
                        out.pop();
                    }
                }
                _ if g.is_empty() => {}
                _ => out.push(AmalgamSyllable(f, g)),
            }
        }
        AmalgamWord { syllables: out }
    }

    pub fn syllables(&self) -> &[AmalgamSyllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        AmalgamWord::new(self.syllables.iter().chain(&other.syllables).cloned())
    }

    pub fn inverse(&self) -> Self {
        AmalgamWord::new(self.syllables.iter().rev().map(|s| AmalgamSyllable(s.0, s.1.inverse())))
    }
}

/// Membership in the edge group of an amalgam, with its identification
/// between the two factors.
pub trait EdgeOracle: Sync {
    /// If `g ∈ Γ_from` lies in the edge group, the same element spelled in
    /// the other factor.
    fn transfer(&self, g: &GammaElement, from: Factor) -> Option<GammaElement>;

    fn is_trivial(&self, g: &GammaElement, factor: Factor) -> bool;
}

/// Edge group `⟨w₁⟩ = ⟨w₂⟩` with `w₁ ↦ w₂`.
#[derive(Clone, Debug)]
pub struct CyclicEdge<O> {
    first: O,
    second: O,
}

impl<O: CyclicOracle> CyclicEdge<O> {
    pub fn new(first: O, second: O) -> Self {
        CyclicEdge { first, second }
    }

    fn side(&self, f: Factor) -> &O {
        match f {
            Factor::First => &self.first,
            Factor::Second => &self.second,
        }
    }
}

impl<O: CyclicOracle + Clone> CyclicEdge<O> {
    /// The double `Γ ∗_⟨w⟩ Γ`.
    pub fn double(oracle: O) -> Self {
        CyclicEdge { first: oracle.clone(), second: oracle }
    }
}

impl<O: CyclicOracle> EdgeOracle for CyclicEdge<O> {
    fn transfer(&self, g: &GammaElement, from: Factor) -> Option<GammaElement> {
        let k = self.side(from).power_of_w(g)?;
        Some(self.side(from.other()).w_word().pow(k))
    }

    fn is_trivial(&self, g: &GammaElement, factor: Factor) -> bool {
        self.side(factor).power_of_w(g) == Some(0)
    }
}

/// The degenerate double `Γ ∗_Γ Γ`, where both copies are identified.
#[derive(Clone, Debug)]
pub struct WholeGroup {
    gens: GeneratorSet,
}

impl WholeGroup {
    pub fn new(gens: GeneratorSet) -> Self {
        WholeGroup { gens }
    }
}

impl EdgeOracle for WholeGroup {
    fn transfer(&self, g: &GammaElement, _from: Factor) -> Option<GammaElement> {
        Some(g.clone())
    }

    fn is_trivial(&self, g: &GammaElement, _factor: Factor) -> bool {
        self.gens.eval(g).is_identity()
    }
}

/// Longest nonempty unit prefix of `g ∈ Γ_from` in the edge group, as
/// `(prefix spelled in the other factor, rest)`.
fn split_edge_prefix<E: EdgeOracle + ?Sized>(g: &GammaElement, from: Factor, edge: &E) -> Option<(GammaElement, GammaElement)> {
    (1..=g.unit_length()).rev().find_map(|n| {
        let (head, rest) = g.split_units(n);
        edge.transfer(&head, from).map(|moved| (moved, rest))
    })
}

/// Normal form in the amalgam: every syllable after the first has its
/// longest edge-group prefix moved into its left neighbour, a leading edge
/// element is pushed into the next syllable, and a lone edge element is
/// spelled in the first factor. The result is empty iff the word is trivial.
pub fn amalgam_normal_form<E: EdgeOracle + ?Sized>(word: &AmalgamWord, edge: &E) -> AmalgamWord {
    let mut syl: Vec<AmalgamSyllable> = word.syllables.clone();
    loop {
        let mut changed = false;
        for s in &mut syl {
            if !s.1.is_empty() && edge.is_trivial(&s.1, s.0) {
                s.1 = GammaElement::identity();
                changed = true;
            }
        }
        syl = AmalgamWord::new(syl).syllables;
        for i in (1..syl.len()).rev() {
            if let Some((moved, rest)) = split_edge_prefix(&syl[i].1, syl[i].0, edge) {
                syl[i].1 = rest;
                syl[i - 1].1 = syl[i - 1].1.concat(&moved);
                changed = true;
            }
        }
        if syl.len() >= 2 && !syl.iter().any(|s| s.1.is_empty()) {
            if let Some(moved) = edge.transfer(&syl[0].1, syl[0].0) {
                syl[1].1 = moved.concat(&syl[1].1);
                syl.remove(0);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if let [AmalgamSyllable(Factor::Second, g)] = syl.as_slice() {
        if let Some(moved) = edge.transfer(g, Factor::Second) {
            syl = vec![AmalgamSyllable(Factor::First, moved)];
        }
    }
    AmalgamWord::new(syl)
}

/// Normal form of a conjugate of `word` whose first and last syllables lie
/// in different factors, rotated to start in the first factor. A word
/// conjugate into one factor comes back with at most one syllable.
pub fn cyclic_amalgam_normal_form<E: EdgeOracle + ?Sized>(word: &AmalgamWord, edge: &E) -> AmalgamWord {
    let mut nf = amalgam_normal_form(word, edge);
    while nf.len() >= 2 && nf.syllables[0].0 == nf.syllables[nf.len() - 1].0 {
        // conjugate the last syllable around to the front
        let mut syl = nf.syllables;
        let last = syl.pop().expect("at least two syllables");
        syl[0].1 = last.1.concat(&syl[0].1);
        nf = amalgam_normal_form(&AmalgamWord::new(syl), edge);
    }
    if nf.len() >= 2 && nf.syllables[0].0 == Factor::Second {
        let mut syl = nf.syllables;
        syl.rotate_left(1);
        nf = AmalgamWord { syllables: syl };
    }
    nf
}

/// `(1, u)·(2, u⁻¹)`: nontrivial in `Γ ∗_⟨w⟩ Γ` when `u ∉ ⟨w⟩`, yet trivial in
/// any double over a subgroup containing `u`.
pub fn collapse_witness<E: EdgeOracle + ?Sized>(u: &GammaElement, edge: &E) -> Result<AmalgamWord, WordsError> {
    if edge.transfer(u, Factor::First).is_some() {
        return Err(WordsError::NoWitness);
    }
    Ok(AmalgamWord::new([AmalgamSyllable(Factor::First, u.clone()), AmalgamSyllable(Factor::Second, u.inverse())]))
}
