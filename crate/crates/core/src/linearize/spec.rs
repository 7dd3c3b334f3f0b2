use std::collections::BTreeSet;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::exact::{ExactScalar, QMatrix, ScalarMatrix};
use crate::words::{CyclicMembership, GammaElement, GeneratorSet};

use super::{conjugator_from_biproximal, LinearizeError, WeightData};

/// A finitely generated matrix group Γ with a designated biproximal element
/// `w`, a conjugator `h` block-diagonalizing it, and the weights that define
/// the image of the stable letter.
///
/// JSON:
/// `{"name": "...", "d": 2, "m": 5, "generators": [[["5","3"],["3","2"]], ...],
///   "w": [[0, 1]], "h": [[...]], "weights": {"chi": ["1", "-1"]}}`.
/// `h` may be omitted when `d = 2`; it is then computed from `w`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    pub generators: Vec<ScalarMatrix>,
    pub w: GammaElement,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<ScalarMatrix>,
    pub weights: WeightData,
}

fn invalid(field: impl Into<String>, reason: impl Into<String>) -> LinearizeError {
    LinearizeError::InvalidSpec { field: field.into(), reason: reason.into() }
}

/// A [`RepSpec`] whose invariants have been verified, with everything needed
/// downstream precomputed in the `h`-basis.
#[derive(Clone, Debug)]
pub struct ValidatedSpec {
    pub(crate) spec: RepSpec,
    pub(crate) h: ScalarMatrix,
    pub(crate) membership: CyclicMembership,
}

impl ValidatedSpec {
    pub fn spec(&self) -> &RepSpec {
        &self.spec
    }

    pub fn h(&self) -> &ScalarMatrix {
        &self.h
    }

    pub fn membership(&self) -> &CyclicMembership {
        &self.membership
    }

    pub fn weights(&self) -> &WeightData {
        &self.spec.weights
    }

    pub fn dim(&self) -> usize {
        self.spec.d
    }

    /// `h·ρ(g)·h⁻¹`.
    pub fn gamma_image(&self, g: &GammaElement) -> ScalarMatrix {
        self.membership.generators_in_h_basis().eval(g)
    }

    /// All four corner entries of `h·ρ(g)·h⁻¹` are nonzero.
    pub fn corner_check(&self, g: &GammaElement) -> bool {
        let m = self.gamma_image(g);
        let d = m.dim() - 1;
        [(0, 0), (0, d), (d, 0), (d, d)].iter().all(|&(i, j)| !m.get(i, j).is_zero())
    }
}

impl RepSpec {
    /// Checks every invariant and prepares the `h`-basis data.
    pub fn validate(&self) -> Result<ValidatedSpec, LinearizeError> {
        let d = self.d;
        if d < 2 {
            return Err(invalid("d", "dimension must be at least 2"));
        }
        if self.weights.dim() != d {
            return Err(invalid("weights.chi", format!("expected {d} weights, found {}", self.weights.dim())));
        }
        if self.generators.is_empty() {
            return Err(invalid("generators", "at least one generator is required"));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.dim() != d {
                return Err(invalid(format!("generators[{i}]"), format!("expected {d}x{d}, found {0}x{0}", g.dim())));
            }
            let det = g.determinant();
            if det != ExactScalar::one() && det != ExactScalar::from_integer(-1) {
                return Err(invalid(format!("generators[{i}]"), format!("determinant is {det}, not +-1")));
            }
        }
        if self.w.is_empty() {
            return Err(invalid("w", "w must be a nontrivial word"));
        }
        if let Some(k) = self.w.max_generator().filter(|&k| k >= self.generators.len()) {
            return Err(invalid("w", format!("generator index {k} out of range")));
        }
        let gens = GeneratorSet::new(self.generators.clone()).map_err(|e| invalid("generators", e.to_string()))?;
        let w_matrix = gens.eval(&self.w);
        let h = match &self.h {
            Some(h) if h.dim() != d => return Err(invalid("h", format!("expected {d}x{d}, found {0}x{0}", h.dim()))),
            Some(h) => h.clone(),
            None if d == 2 => conjugator_from_biproximal(&w_matrix).map_err(|e| invalid("w", format!("cannot compute conjugator: {e}")))?.0,
            None => return Err(invalid("h", "a conjugator is required when d > 2")),
        };
        self.check_field(&h)?;
        let membership = CyclicMembership::new(&gens, self.w.clone(), &h).map_err(|e| invalid("h", e.to_string()))?;
        let w_h = membership.w_in_h_basis().clone();
        check_biproximal(&w_h)?;
        let diag = QMatrix::diag_q_powers(self.weights.chi());
        let w_q = w_h.to_qmatrix();
        if diag.mul(&w_q) != w_q.mul(&diag) {
            return Err(invalid("weights.chi", "diag(q^chi) does not commute with h*rho(w)*h^-1"));
        }
        Ok(ValidatedSpec { spec: self.clone(), h, membership })
    }

    fn check_field(&self, h: &ScalarMatrix) -> Result<(), LinearizeError> {
        let mut radicands = BTreeSet::new();
        for (i, g) in self.generators.iter().enumerate() {
            let r = g.radicand().map_err(|e| invalid(format!("generators[{i}]"), e.to_string()))?;
            radicands.extend(r);
        }
        radicands.extend(h.radicand().map_err(|e| invalid("h", e.to_string()))?);
        match (self.m, radicands.len()) {
            (_, n) if n > 1 => Err(invalid("m", format!("entries mix radicands {radicands:?}"))),
            (Some(m), 1) if !radicands.contains(&m) => {
                Err(invalid("m", format!("entries live in Q(sqrt({}))", radicands.first().copied().unwrap_or(m))))
            }
            _ => Ok(()),
        }
    }
}

/// `|s₁| > ρ(A) ≥ min |eig A| > |s_d|` for `h·w·h⁻¹ = diag(s₁, A, s_d)`.
fn check_biproximal(w_h: &ScalarMatrix) -> Result<(), LinearizeError> {
    let d = w_h.dim();
    let s1 = w_h.get(0, 0).to_f64().abs();
    let sd = w_h.get(d - 1, d - 1).to_f64().abs();
    if d == 2 {
        return if s1 > sd { Ok(()) } else { Err(invalid("w", "|s1| <= |s_d|")) };
    }
    let full = w_h.to_f64();
    let block: DMatrix<f64> = full.view((1, 1), (d - 2, d - 2)).into_owned();
    let moduli: Vec<f64> = block.complex_eigenvalues().iter().map(|z| z.norm()).collect();
    let top = moduli.iter().copied().fold(0.0, f64::max);
    let bottom = moduli.iter().copied().fold(f64::INFINITY, f64::min);
    if s1 > top && bottom > sd {
        Ok(())
    } else {
        Err(invalid("w", format!("not biproximal: |s1| = {s1}, middle moduli in [{bottom}, {top}], |s_d| = {sd}")))
    }
}
