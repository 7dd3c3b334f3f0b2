//! The linear representation `π_q` of `Γ∗_⟨w⟩` over Laurent polynomials in
//! `q`, its degree ledger and nontriviality certificates, and the analogous
//! representation of the double `Γ ∗_⟨w⟩ Γ`.

mod certify;
mod conjugator;
mod double;
mod fixture;
mod ledger;
mod pi_q;
mod spec;
mod weights;

pub use certify::{certify_batch, certify_nontrivial, Certificate, Verdict};
pub use conjugator::conjugator_from_biproximal;
pub use double::{build_double_rep, AlternationDegree, DoubleRep};
pub use fixture::schottky_q5;
pub use ledger::{canonicalize, check_ledger, degree_ledger, ledger_for_powers, CanonicalWord, LedgerCheck};
pub use pi_q::{build_pi_q, evaluate_word, NormalizedImage, PiQ};
pub use spec::{RepSpec, ValidatedSpec};
pub use weights::WeightData;

use serde::Serializer;
use thiserror::Error;

use crate::exact::{ExactError, Exponent};
use crate::words::WordsError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearizeError {
    #[error("invalid representation data in `{field}`: {reason}")]
    InvalidSpec { field: String, reason: String },
    #[error("word is not in canonical form: {0}")]
    NotCanonical(String),
    #[error("the two factors disagree on w in the common basis")]
    AmalgamMismatch,
    #[error("w has a repeated eigenvalue")]
    RepeatedEigenvalue,
    #[error("w has non-real eigenvalues")]
    NonRealEigenvalues,
    #[error("w is not biproximal: {0}")]
    NotBiproximal(String),
    #[error(transparent)]
    Words(#[from] WordsError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub(crate) fn ser_exponent<S: Serializer>(e: &Exponent, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(e)
}

pub(crate) fn ser_opt_exponent<S: Serializer>(e: &Option<Exponent>, s: S) -> Result<S::Ok, S::Error> {
    match e {
        Some(e) => s.collect_str(e),
        None => s.serialize_none(),
    }
}
