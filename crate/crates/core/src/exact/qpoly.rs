use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::Zero;

use super::{ExactScalar, Ring};

/// Exponent of the formal variable `q`.
pub type Exponent = Ratio<i64>;

/// A Laurent polynomial `Σ cₑ qᵉ` with rational exponents and exact coefficients.
///
/// No zero coefficient is ever stored, so the zero polynomial has an empty
/// term map and neither a degree nor a valuation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QPoly {
    terms: BTreeMap<Exponent, ExactScalar>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::monomial(c, Exponent::zero())
    }

    /// `c·qᵉ`.
    pub fn monomial(c: ExactScalar, e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        QPoly { terms }
    }

    /// `qᵉ`.
    pub fn q_pow(e: Exponent) -> Self {
        Self::monomial(ExactScalar::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, ExactScalar)>>(terms: I) -> Self {
        let mut p = QPoly::zero();
        for (e, c) in terms {
            p.accumulate(e, &c);
        }
        p
    }

    fn accumulate(&mut self, e: Exponent, c: &ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing = existing.plus(c);
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<Exponent> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<Exponent> {
        self.terms.keys().next().copied()
    }

    /// `degree − valuation`: the degree of `f` when the polynomial is written
    /// as `q^r·f(q)` with `f(0) ≠ 0`.
    pub fn spread(&self) -> Option<Exponent> {
        Some(self.degree()? - self.valuation()?)
    }

    pub fn leading_coefficient(&self) -> Option<&ExactScalar> {
        self.terms.values().next_back()
    }

    pub fn coefficient(&self, e: &Exponent) -> ExactScalar {
        self.terms.get(e).cloned().unwrap_or_else(ExactScalar::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant coefficient when the polynomial has no other term.
    pub fn as_constant(&self) -> Option<ExactScalar> {
        match self.terms.len() {
            0 => Some(ExactScalar::zero()),
            1 => self.terms.get(&Exponent::zero()).cloned(),
            _ => None,
        }
    }

    /// Multiply by `qᵉ`.
    pub fn shift(&self, e: Exponent) -> Self {
        QPoly { terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect() }
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly { terms: self.terms.iter().map(|(k, v)| (*k, v.times(c))).collect() }
    }
}

impl Ring for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(*e, c);
        }
        out
    }
    fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(*e, &c.negated());
        }
        out
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = QPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.accumulate(e1 + e2, &c1.times(c2));
            }
        }
        out
    }
    fn negated(&self) -> Self {
        QPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.negated())).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: i64, d: i64) -> Exponent {
        Exponent::new(n, d)
    }

    fn poly(terms: &[(i64, i64)]) -> QPoly {
        QPoly::from_terms(terms.iter().map(|&(k, c)| (e(k, 1), ExactScalar::from_integer(c))))
    }

    #[test]
    fn difference_of_squares() {
        let p = poly(&[(1, 1), (0, 1)]).times(&poly(&[(1, 1), (0, -1)]));
        assert_eq!(p, poly(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn half_exponents_add() {
        let h = QPoly::q_pow(e(1, 2));
        assert_eq!(h.times(&h), QPoly::q_pow(e(1, 1)));
    }

    #[test]
    fn laurent_valuation_shift() {
        let p = poly(&[(2, 2), (1, 1)]).times(&QPoly::q_pow(e(-1, 1)));
        assert_eq!(p, poly(&[(1, 2), (0, 1)]));
        assert_eq!(p.valuation(), Some(e(0, 1)));
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        let z = poly(&[(3, 1)]).minus(&poly(&[(3, 1)]));
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.valuation(), None);
        assert_eq!(z.spread(), None);
        assert!(QPoly::monomial(ExactScalar::zero(), e(4, 1)).is_zero());
    }

    #[test]
    fn spread_ignores_monomial_factor() {
        let p = poly(&[(-2, 3), (1, 1)]);
        assert_eq!(p.spread(), Some(e(3, 1)));
        assert_eq!(p.shift(e(7, 2)).spread(), Some(e(3, 1)));
    }
}
