use crate::exact::{ExactScalar, ScalarMatrix};

use super::{GammaElement, GeneratorSet, WordsError};

/// Decides membership in a cyclic subgroup `⟨w⟩` of the base group.
pub trait CyclicOracle: Sync {
    /// `Some(k)` when `g = wᵏ` (so `Some(0)` for the identity), `None` otherwise.
    fn power_of_w(&self, g: &GammaElement) -> Option<i64>;

    /// The generator word for `w`.
    fn w_word(&self) -> &GammaElement;
}

/// Exact membership test for `⟨w⟩` when `w` is biproximal.
///
/// In the basis given by `h`, `w` is block diagonal `diag(s₁, A, s_d)` with
/// `|s₁| > |s_d|`; an element of `⟨w⟩` must share that block shape, and its
/// exponent is read off the two corner entries and then verified exactly.
#[derive(Clone, Debug)]
pub struct CyclicMembership {
    gens_h: GeneratorSet,
    w: GammaElement,
    w_h: ScalarMatrix,
    s1: ExactScalar,
    sd: ExactScalar,
    log_ratio: f64,
}

impl CyclicMembership {
    pub fn new(gens: &GeneratorSet, w: GammaElement, h: &ScalarMatrix) -> Result<Self, WordsError> {
        if let Err(k) = gens.check_indices(&w) {
            return Err(WordsError::UnknownGenerator(k));
        }
        if h.dim() != gens.dim() {
            return Err(WordsError::Exact(crate::exact::ExactError::DimensionMismatch { left: gens.dim(), right: h.dim() }));
        }
        let h_inv = h.try_inverse().map_err(|_| WordsError::SingularConjugator)?;
        let gens_h = gens.conjugated(h, &h_inv);
        let w_h = gens_h.eval(&w);
        let (s1, sd, log_ratio) = block_corners(&w_h).ok_or(WordsError::NotBiproximal)?;
        Ok(CyclicMembership { gens_h, w, w_h, s1, sd, log_ratio })
    }

    /// Generators already conjugated into the `h`-basis.
    pub fn generators_in_h_basis(&self) -> &GeneratorSet {
        &self.gens_h
    }

    /// `h·w·h⁻¹`.
    pub fn w_in_h_basis(&self) -> &ScalarMatrix {
        &self.w_h
    }

    /// The corner eigenvalues `(s₁, s_d)`.
    pub fn corner_eigenvalues(&self) -> (&ExactScalar, &ExactScalar) {
        (&self.s1, &self.sd)
    }

    /// Membership for a matrix already expressed in the `h`-basis.
    pub fn power_of_matrix(&self, g: &ScalarMatrix) -> Option<i64> {
        if !has_block_shape(g) {
            return None;
        }
        let d = g.dim();
        let (g11, gdd) = (g.get(0, 0), g.get(d - 1, d - 1));
        if g11.is_zero() || gdd.is_zero() {
            return None;
        }
        let ratio = (g11.to_f64() / gdd.to_f64()).abs().ln();
        if !ratio.is_finite() {
            return None;
        }
        let k = (ratio / self.log_ratio).round() as i64;
        let s1k = self.s1.pow(k).ok()?;
        if &s1k != g11 {
            return None;
        }
        let wk = self.w_h.pow(k).ok()?;
        (wk == *g).then_some(k)
    }
}

impl CyclicOracle for CyclicMembership {
    fn power_of_w(&self, g: &GammaElement) -> Option<i64> {
        if g.is_empty() {
            return Some(0);
        }
        self.power_of_matrix(&self.gens_h.eval(g))
    }

    fn w_word(&self) -> &GammaElement {
        &self.w
    }
}

/// Zero pattern of `diag(s₁, A, s_d)`: first and last row and column vanish
/// off the diagonal.
fn has_block_shape(g: &ScalarMatrix) -> bool {
    let d = g.dim();
    if d < 2 {
        return true;
    }
    let last = d - 1;
    (0..d).all(|j| {
        (j == 0 || g.get(0, j).is_zero())
            && (j == 0 || g.get(j, 0).is_zero())
            && (j == last || g.get(last, j).is_zero())
            && (j == last || g.get(j, last).is_zero())
    })
}

fn block_corners(w_h: &ScalarMatrix) -> Option<(ExactScalar, ExactScalar, f64)> {
    if w_h.dim() < 2 || !has_block_shape(w_h) {
        return None;
    }
    let d = w_h.dim();
    let s1 = w_h.get(0, 0).clone();
    let sd = w_h.get(d - 1, d - 1).clone();
    if sd.is_zero() || s1.abs() <= sd.abs() {
        return None;
    }
    let log_ratio = (s1.to_f64() / sd.to_f64()).abs().ln();
    (log_ratio.is_finite() && log_ratio > 0.0).then_some((s1, sd, log_ratio))
}

/// Single-shot membership: `k` with `g = wᵏ`, using the block test in the
/// basis where `h·w·h⁻¹` is block diagonal.
pub fn cyclic_membership(g: &ScalarMatrix, w: &ScalarMatrix, h: &ScalarMatrix) -> Result<Option<i64>, WordsError> {
    let gens = GeneratorSet::new(vec![w.clone()])?;
    let oracle = CyclicMembership::new(&gens, GammaElement::generator(0, 1), h)?;
    let h_inv = h.try_inverse().map_err(|_| WordsError::SingularConjugator)?;
    let g_h = h.try_mul(g)?.try_mul(&h_inv)?;
    Ok(oracle.power_of_matrix(&g_h))
}
