use serde::Serialize;

use crate::exact::{Exponent, QMatrix, QPoly};
use crate::words::{cyclic_amalgam_normal_form, AmalgamWord, CyclicEdge, CyclicMembership, Factor, GammaElement};

use super::{LinearizeError, RepSpec, ValidatedSpec, WeightData};

/// The representation of the double `Γ₁ ∗_⟨w⟩ Γ₂`: first-factor letters act
/// through `h₁ρ₁h₁⁻¹`, second-factor letters through
/// `h_q·h₂ρ₂h₂⁻¹·h_q⁻¹` with `h_q = diag(q^{χ₁},…,q^{χ_d})`.
#[derive(Clone, Debug)]
pub struct DoubleRep {
    first: ValidatedSpec,
    second: ValidatedSpec,
    edge: CyclicEdge<CyclicMembership>,
}

/// Degree data for the cyclic normal form of an alternating word.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlternationDegree {
    pub cyclic: AmalgamWord,
    /// Number of `(1, ·)(2, ·)` pairs in the cyclic normal form.
    pub alternations: usize,
    /// `alternations · (χ₁ − χ_d)`.
    #[serde(serialize_with = "super::ser_exponent")]
    pub predicted: Exponent,
    /// Degree minus valuation of the `(1,1)` entry of the cyclic form's image.
    #[serde(serialize_with = "super::ser_opt_exponent")]
    pub observed: Option<Exponent>,
    pub nonscalar: bool,
}

impl AlternationDegree {
    pub fn matches(&self) -> bool {
        self.observed == Some(self.predicted)
    }
}

/// Validates both factors and checks that they agree on `w` in the common
/// `h`-basis and on the weights.
pub fn build_double_rep(spec1: &RepSpec, spec2: &RepSpec) -> Result<DoubleRep, LinearizeError> {
    let first = spec1.validate()?;
    let second = spec2.validate()?;
    if first.dim() != second.dim() || first.weights() != second.weights() {
        return Err(LinearizeError::InvalidSpec { field: "weights".into(), reason: "both factors must share the same weights".into() });
    }
    if first.membership().w_in_h_basis() != second.membership().w_in_h_basis() {
        return Err(LinearizeError::AmalgamMismatch);
    }
    let edge = CyclicEdge::new(first.membership().clone(), second.membership().clone());
    Ok(DoubleRep { first, second, edge })
}

impl DoubleRep {
    pub fn edge(&self) -> &CyclicEdge<CyclicMembership> {
        &self.edge
    }

    pub fn weights(&self) -> &WeightData {
        self.first.weights()
    }

    pub fn dim(&self) -> usize {
        self.first.dim()
    }

    pub fn factor_image(&self, factor: Factor, g: &GammaElement) -> QMatrix {
        match factor {
            Factor::First => self.first.gamma_image(g).to_qmatrix(),
            Factor::Second => {
                let m = self.second.gamma_image(g);
                let chi = self.weights().chi();
                QMatrix::from_fn(m.dim(), |i, j| QPoly::monomial(m.get(i, j).clone(), chi[i] - chi[j]))
            }
        }
    }

    pub fn evaluate(&self, word: &AmalgamWord) -> QMatrix {
        word.syllables().iter().fold(QMatrix::identity(self.dim()), |acc, s| acc.mul(&self.factor_image(s.0, &s.1)))
    }

    /// Compares the `(1,1)` entry of the cyclic normal form against
    /// `k·(χ₁ − χ_d)` for `k` alternations.
    pub fn alternation_degree(&self, word: &AmalgamWord) -> AlternationDegree {
        let cyclic = cyclic_amalgam_normal_form(word, &self.edge);
        let alternations = cyclic.len() / 2;
        let predicted = self.weights().span() * Exponent::from_integer(alternations as i64);
        let observed = self.evaluate(&cyclic).get(0, 0).spread();
        let image = self.evaluate(word);
        AlternationDegree { cyclic, alternations, predicted, observed, nonscalar: !image.is_scalar_multiple_of_identity() }
    }
}
