//! Words in the HNN extension `Γ∗_⟨w⟩` (stable letter `t` commuting with `w`)
//! and in two-factor amalgams such as the double `Γ ∗_⟨w⟩ Γ`, together with
//! their reductions to normal form.
//!
//! Elements of Γ are compared as exact matrices: every reduction consults a
//! membership oracle that evaluates words against concrete generators.

mod amalgam;
mod gamma;
mod hnn;
mod membership;

pub use amalgam::{
    amalgam_normal_form, collapse_witness, cyclic_amalgam_normal_form, AmalgamSyllable, AmalgamWord, CyclicEdge, EdgeOracle, Factor, WholeGroup,
};
pub use gamma::{GammaElement, GeneratorSet, Letter};
pub use hnn::{britton_reduce, cyclically_reduce, HnnLetter, HnnWord, Syllable};
pub use membership::{cyclic_membership, CyclicMembership, CyclicOracle};

use rayon::prelude::*;
use thiserror::Error;

use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordsError {
    #[error("conjugator h is not invertible")]
    SingularConjugator,
    #[error("w is not biproximal in the basis given by h: need diag(s1, A, s_d) with |s1| > |s_d|")]
    NotBiproximal,
    #[error("generator index {0} is out of range")]
    UnknownGenerator(usize),
    #[error("syllable {index} has stable-letter power 0")]
    ZeroStablePower { index: usize },
    #[error("factor tag {0} is not 1 or 2")]
    InvalidFactor(u8),
    #[error("u lies in <w>: no collapse witness")]
    NoWitness,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Reduces every word, preserving input order.
pub fn britton_reduce_batch<O: CyclicOracle + ?Sized>(words: &[HnnWord], oracle: &O) -> Vec<HnnWord> {
    words.par_iter().map(|w| britton_reduce(w, oracle)).collect()
}
