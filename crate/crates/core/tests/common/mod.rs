//! Independent oracles shared by the integration and acceptance targets.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use hnnlin::words::{HnnLetter, HnnWord, Letter};

/// Unit letters of `⟨a, b, t | at = ta⟩`, the HNN extension of the free group
/// `⟨a, b⟩` over `⟨a⟩` with `a` as generator 0 and `b` as generator 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sym {
    A,
    AInv,
    B,
    BInv,
    T,
    TInv,
}

pub const ALPHABET: [Sym; 6] = [Sym::A, Sym::AInv, Sym::B, Sym::BInv, Sym::T, Sym::TInv];

impl Sym {
    pub fn inverse(self) -> Sym {
        match self {
            Sym::A => Sym::AInv,
            Sym::AInv => Sym::A,
            Sym::B => Sym::BInv,
            Sym::BInv => Sym::B,
            Sym::T => Sym::TInv,
            Sym::TInv => Sym::T,
        }
    }

    fn commutes_with(self, other: Sym) -> bool {
        let is_a = |s| matches!(s, Sym::A | Sym::AInv);
        let is_t = |s| matches!(s, Sym::T | Sym::TInv);
        (is_a(self) && is_t(other)) || (is_t(self) && is_a(other))
    }

    pub fn to_hnn(self) -> HnnLetter {
        match self {
            Sym::A => HnnLetter::G(Letter(0, 1)),
            Sym::AInv => HnnLetter::G(Letter(0, -1)),
            Sym::B => HnnLetter::G(Letter(1, 1)),
            Sym::BInv => HnnLetter::G(Letter(1, -1)),
            Sym::T => HnnLetter::T(1),
            Sym::TInv => HnnLetter::T(-1),
        }
    }

    pub fn from_hnn(l: HnnLetter) -> Sym {
        match l {
            HnnLetter::G(Letter(0, 1)) => Sym::A,
            HnnLetter::G(Letter(0, -1)) => Sym::AInv,
            HnnLetter::G(Letter(1, 1)) => Sym::B,
            HnnLetter::G(Letter(1, -1)) => Sym::BInv,
            HnnLetter::T(1) => Sym::T,
            HnnLetter::T(-1) => Sym::TInv,
            other => panic!("not a unit letter over a, b, t: {other:?}"),
        }
    }
}

/// Every word of length at most `max_len`.
pub fn all_words(max_len: usize) -> Vec<Vec<Sym>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        frontier = frontier.iter().flat_map(|w: &Vec<Sym>| ALPHABET.iter().map(move |&s| [w.as_slice(), &[s]].concat())).collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// Breadth-first closure under deleting `x x⁻¹` and swapping adjacent commuting
/// letters; the lexicographically least shortest word reached. Two words give
/// the same result iff they are equal in `⟨a, b, t | at = ta⟩`.
pub fn bfs_canonical(word: &[Sym]) -> Vec<Sym> {
    let mut seen: HashSet<Vec<Sym>> = HashSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    let mut best = word.to_vec();
    while let Some(w) = queue.pop_front() {
        if (w.len(), &w) < (best.len(), &best) {
            best = w.clone();
        }
        for i in 0..w.len().saturating_sub(1) {
            let next = if w[i + 1] == w[i].inverse() {
                [&w[..i], &w[i + 2..]].concat()
            } else if w[i].commutes_with(w[i + 1]) {
                let mut s = w.clone();
                s.swap(i, i + 1);
                s
            } else {
                continue;
            };
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    best
}

pub fn to_hnn_word(word: &[Sym]) -> HnnWord {
    HnnWord::from_letters(word.iter().map(|s| s.to_hnn()))
}

pub fn from_hnn_word(word: &HnnWord) -> Vec<Sym> {
    word.to_unit_letters().into_iter().map(Sym::from_hnn).collect()
}

/// Trial division.
pub fn squarefree(m: u64) -> bool {
    (2..).take_while(|p| p * p <= m).all(|p| !m.is_multiple_of(p * p))
}

/// Smallest `y ≥ 1` with `1 + m·y²` a perfect square, by search.
pub fn brute_pell(m: u64) -> (u64, u64) {
    (1u64..)
        .find_map(|y| {
            let n = 1 + m * y * y;
            let x = (n as f64).sqrt().round() as u64;
            (x * x == n).then_some((x, y))
        })
        .unwrap()
}
