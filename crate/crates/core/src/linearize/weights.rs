use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::{parse_exponent, Exponent};

use super::LinearizeError;

/// Weight values `(χ₁, …, χ_d)` of the element that `t` exponentiates.
///
/// Position 1 carries the strictly largest weight and position `d` the
/// strictly smallest; every other weight differs from both by an integer.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, try_from = "RawWeights")]
pub struct WeightData {
    #[serde(serialize_with = "ser_exponents")]
    chi: Vec<Exponent>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWeights {
    #[serde(deserialize_with = "de_exponents")]
    chi: Vec<Exponent>,
}

impl TryFrom<RawWeights> for WeightData {
    type Error = LinearizeError;

    fn try_from(raw: RawWeights) -> Result<Self, Self::Error> {
        WeightData::new(raw.chi)
    }
}

fn invalid(reason: impl Into<String>) -> LinearizeError {
    LinearizeError::InvalidSpec { field: "weights.chi".into(), reason: reason.into() }
}

impl WeightData {
    pub fn new(chi: Vec<Exponent>) -> Result<Self, LinearizeError> {
        let d = chi.len();
        if d < 2 {
            return Err(invalid("need at least two weights"));
        }
        let (top, bottom) = (chi[0], chi[d - 1]);
        for (i, c) in chi.iter().enumerate().skip(1) {
            let gap = top - c;
            if !gap.is_integer() || !gap.is_positive() {
                return Err(invalid(format!("chi_1 - chi_{} = {gap} is not a positive integer", i + 1)));
            }
        }
        for (j, c) in chi.iter().enumerate().take(d - 1) {
            let gap = bottom - c;
            if !gap.is_integer() || !gap.is_negative() {
                return Err(invalid(format!("chi_{d} - chi_{} = {gap} is not a negative integer", j + 1)));
            }
        }
        Ok(WeightData { chi })
    }

    pub fn from_integers(chi: &[i64]) -> Result<Self, LinearizeError> {
        Self::new(chi.iter().map(|&c| Exponent::from_integer(c)).collect())
    }

    pub fn chi(&self) -> &[Exponent] {
        &self.chi
    }

    pub fn dim(&self) -> usize {
        self.chi.len()
    }

    pub fn top(&self) -> Exponent {
        self.chi[0]
    }

    pub fn bottom(&self) -> Exponent {
        self.chi[self.chi.len() - 1]
    }

    /// `χ₁ − χ_d`.
    pub fn span(&self) -> Exponent {
        self.top() - self.bottom()
    }

    /// Exponents of the normalized image of `t^p`: `p(χᵢ − χ_d)` for `p > 0`
    /// and `p(χᵢ − χ₁)` for `p < 0`, all nonnegative; the second value is
    /// the stripped monomial exponent.
    pub fn normalized_power(&self, p: i64) -> (Vec<Exponent>, Exponent) {
        let p = Exponent::from_integer(p);
        let base = if p.is_positive() { self.bottom() } else { self.top() };
        (self.chi.iter().map(|c| p * (c - base)).collect(), p * base)
    }

    pub fn scaled(&self, p: i64) -> Vec<Exponent> {
        let p = Exponent::from_integer(p);
        self.chi.iter().map(|c| p * c).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.chi.iter().all(Zero::is_zero)
    }
}

fn ser_exponents<S: Serializer>(chi: &[Exponent], s: S) -> Result<S::Ok, S::Error> {
    chi.iter().map(|c| c.to_string()).collect::<Vec<_>>().serialize(s)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntOrString {
    Int(i64),
    Str(String),
}

fn de_exponents<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Exponent>, D::Error> {
    use serde::de::Error;
    Vec::<IntOrString>::deserialize(d)?
        .into_iter()
        .map(|v| match v {
            IntOrString::Int(n) => Ok(Exponent::from_integer(n)),
            IntOrString::Str(s) => parse_exponent(&s).map_err(D::Error::custom),
        })
        .collect()
}
