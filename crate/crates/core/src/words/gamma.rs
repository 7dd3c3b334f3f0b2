use serde::{Deserialize, Serialize};

use crate::exact::{ExactError, ScalarMatrix};

/// `gen^exp` for a generator index of the base group.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter(pub usize, pub i64);

impl Letter {
    pub fn generator(&self) -> usize {
        self.0
    }

    pub fn exponent(&self) -> i64 {
        self.1
    }
}

/// An element of the base group Γ written as a freely reduced product of
/// generator powers. Adjacent letters always carry distinct generators and
/// every exponent is nonzero.
///
/// Equality of *group elements* is decided by evaluating to exact matrices
/// (see [`GeneratorSet::eval`]); the derived `PartialEq` compares spellings.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Letter>", into = "Vec<Letter>")]
pub struct GammaElement {
    letters: Vec<Letter>,
}

impl From<Vec<Letter>> for GammaElement {
    fn from(letters: Vec<Letter>) -> Self {
        GammaElement::from_letters(letters)
    }
}

impl From<GammaElement> for Vec<Letter> {
    fn from(g: GammaElement) -> Self {
        g.letters
    }
}

impl GammaElement {
    pub fn identity() -> Self {
        GammaElement { letters: Vec::new() }
    }

    pub fn generator(gen: usize, exp: i64) -> Self {
        Self::from_letters([Letter(gen, exp)])
    }

    /// Freely reduces while building.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut g = GammaElement::identity();
        for l in letters {
            g.push(l);
        }
        g
    }

    fn push(&mut self, l: Letter) {
        if l.1 == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.0 == l.0 => {
                last.1 += l.1;
                if last.1 == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(l),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Length counted in letters of exponent ±1.
    pub fn unit_length(&self) -> usize {
        self.letters.iter().map(|l| l.1.unsigned_abs() as usize).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut g = self.clone();
        for &l in &other.letters {
            g.push(l);
        }
        g
    }

    pub fn inverse(&self) -> Self {
        GammaElement { letters: self.letters.iter().rev().map(|l| Letter(l.0, -l.1)).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut g = GammaElement::identity();
        for _ in 0..k.unsigned_abs() {
            g = g.concat(&base);
        }
        g
    }

    /// The spelling expanded into letters of exponent ±1.
    pub fn unit_letters(&self) -> Vec<Letter> {
        self.letters.iter().flat_map(|l| std::iter::repeat_n(Letter(l.0, l.1.signum()), l.1.unsigned_abs() as usize)).collect()
    }

    /// Split after the first `n` unit letters.
    pub fn split_units(&self, n: usize) -> (Self, Self) {
        let units = self.unit_letters();
        let n = n.min(units.len());
        (Self::from_letters(units[..n].iter().copied()), Self::from_letters(units[n..].iter().copied()))
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.0).max()
    }
}

/// Concrete generator matrices (with precomputed inverses) against which
/// [`GammaElement`]s are evaluated exactly.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    gens: Vec<ScalarMatrix>,
    inverses: Vec<ScalarMatrix>,
}

impl GeneratorSet {
    pub fn new(gens: Vec<ScalarMatrix>) -> Result<Self, ExactError> {
        if let Some(first) = gens.first() {
            let d = first.dim();
            if let Some(bad) = gens.iter().find(|g| g.dim() != d) {
                return Err(ExactError::DimensionMismatch { left: d, right: bad.dim() });
            }
        }
        let inverses = gens.iter().map(|g| g.try_inverse()).collect::<Result<_, _>>()?;
        Ok(GeneratorSet { gens, inverses })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.gens.first().map_or(0, |g| g.dim())
    }

    pub fn matrices(&self) -> &[ScalarMatrix] {
        &self.gens
    }

    /// Conjugate every generator: `h·g·h⁻¹`.
    pub fn conjugated(&self, h: &ScalarMatrix, h_inv: &ScalarMatrix) -> Self {
        GeneratorSet {
            gens: self.gens.iter().map(|g| h.mul(g).mul(h_inv)).collect(),
            inverses: self.inverses.iter().map(|g| h.mul(g).mul(h_inv)).collect(),
        }
    }

    /// Exact image of `g`; panics if `g` uses a generator index out of range
    /// (validated inputs never do).
    pub fn eval(&self, g: &GammaElement) -> ScalarMatrix {
        let mut acc = ScalarMatrix::identity(self.dim());
        for l in g.letters() {
            let base = if l.1 > 0 { &self.gens[l.0] } else { &self.inverses[l.0] };
            acc = acc.mul(&base.pow_nonneg(l.1.unsigned_abs()));
        }
        acc
    }

    pub fn check_indices(&self, g: &GammaElement) -> Result<(), usize> {
        match g.max_generator() {
            Some(k) if k >= self.gens.len() => Err(k),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction_on_construction() {
        let g = GammaElement::from_letters([Letter(0, 2), Letter(0, -2), Letter(1, 1), Letter(1, 3), Letter(0, 0)]);
        assert_eq!(g.letters(), &[Letter(1, 4)]);
        let h = GammaElement::generator(0, 1).concat(&GammaElement::generator(1, 1));
        assert!(h.concat(&h.inverse()).is_empty());
    }

    #[test]
    fn unit_split() {
        let g = GammaElement::from_letters([Letter(0, 3), Letter(1, -1)]);
        let (a, b) = g.split_units(2);
        assert_eq!(a, GammaElement::generator(0, 2));
        assert_eq!(b.letters(), &[Letter(0, 1), Letter(1, -1)]);
        assert_eq!(g.unit_length(), 4);
    }

    #[test]
    fn json_form_is_pairs() {
        let g = GammaElement::from_letters([Letter(0, 1), Letter(1, -2)]);
        assert_eq!(serde_json::to_string(&g).unwrap(), "[[0,1],[1,-2]]");
        let back: GammaElement = serde_json::from_str("[[0,1],[0,-1],[1,2]]").unwrap();
        assert_eq!(back, GammaElement::generator(1, 2));
    }
}
