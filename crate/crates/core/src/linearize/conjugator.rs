use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{ExactScalar, ScalarMatrix};

use super::LinearizeError;

/// `x = r²·m` with `m` squarefree (`m = 1` when `x` is a rational square).
pub(crate) fn split_square(x: &BigRational) -> Option<(BigRational, u64)> {
    if !x.is_positive() {
        return None;
    }
    // x = (n·d) / d²
    let nd: BigInt = x.numer() * x.denom();
    let mut rest = nd.to_u64()?;
    let mut root = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        while rest % (p * p) == 0 {
            rest /= p * p;
            root *= p;
        }
        p += 1;
    }
    Some((BigRational::new(BigInt::from(root), x.denom().clone()), rest))
}

/// Exact eigenbasis of a 2×2 rational matrix with real eigenvalues of
/// distinct moduli.
///
/// Returns `(h, s₁, s_d)` with `h·w·h⁻¹ = diag(s₁, s_d)` and `|s₁| > |s_d|`.
/// The rows of `h` are left eigenvectors of `w`, so the columns of `h⁻¹` are
/// (right) eigenvectors. Entries live in ℚ or ℚ(√m) where `m` is the
/// squarefree part of the discriminant.
pub fn conjugator_from_biproximal(w: &ScalarMatrix) -> Result<(ScalarMatrix, ExactScalar, ExactScalar), LinearizeError> {
    if w.dim() != 2 {
        return Err(LinearizeError::NotBiproximal("only 2x2 conjugators are computed; supply h for d > 2".into()));
    }
    let entry = |i, j| w.get(i, j).as_rational().cloned().ok_or_else(|| LinearizeError::NotBiproximal("w must have rational entries".into()));
    let (a, b, c, d) = (entry(0, 0)?, entry(0, 1)?, entry(1, 0)?, entry(1, 1)?);
    let tr = &a + &d;
    let disc = &tr * &tr - BigRational::from_integer(4.into()) * (&a * &d - &b * &c);
    if disc.is_zero() {
        return Err(LinearizeError::RepeatedEigenvalue);
    }
    if disc.is_negative() {
        return Err(LinearizeError::NonRealEigenvalues);
    }
    let (r, m) = split_square(&disc).ok_or_else(|| LinearizeError::NotBiproximal("discriminant too large to factor".into()))?;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mid = &tr * &half;
    let (plus, minus) = if m == 1 {
        (ExactScalar::from_rational(&mid + &r * &half), ExactScalar::from_rational(&mid - &r * &half))
    } else {
        (ExactScalar::quadratic(mid.clone(), &r * &half, m)?, ExactScalar::quadratic(mid, -(&r * &half), m)?)
    };
    let (s1, sd) = if plus.abs() > minus.abs() {
        (plus, minus)
    } else if minus.abs() > plus.abs() {
        (minus, plus)
    } else {
        return Err(LinearizeError::NotBiproximal("eigenvalues have equal modulus".into()));
    };
    let q = |x: &BigRational| ExactScalar::from_rational(x.clone());
    let h = if !c.is_zero() {
        // (c, λ − a)·w = λ·(c, λ − a)
        let row = |lam: &ExactScalar| vec![q(&c), lam - &q(&a)];
        ScalarMatrix::from_rows(vec![row(&s1), row(&sd)])?
    } else if !b.is_zero() {
        // (λ − d, b)·w = λ·(λ − d, b) for upper triangular w
        let row = |lam: &ExactScalar| vec![lam - &q(&d), q(&b)];
        ScalarMatrix::from_rows(vec![row(&s1), row(&sd)])?
    } else if s1 == q(&a) {
        ScalarMatrix::identity(2)
    } else {
        ScalarMatrix::from_integers(&[&[0, 1], &[1, 0]])?
    };
    Ok((h, s1, sd))
}
