use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExactError, Ring};

/// An element `a + b·√m` of ℚ or of a real quadratic field ℚ(√m).
///
/// Invariants: rationals are kept in lowest terms (by `BigRational`), `m` is
/// squarefree and at least 2, and `m` is present iff `b != 0`. Two scalars
/// with different radicands can only be combined when one of them is rational.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactScalar {
    a: BigRational,
    b: BigRational,
    m: Option<u64>,
}

pub fn is_squarefree(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

fn join_radicands(l: Option<u64>, r: Option<u64>) -> Result<Option<u64>, ExactError> {
    match (l, r) {
        (Some(x), Some(y)) if x != y => Err(ExactError::IncompatibleRadicands { left: x, right: y }),
        (Some(x), _) | (None, Some(x)) => Ok(Some(x)),
        (None, None) => Ok(None),
    }
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl ExactScalar {
    fn normalized(a: BigRational, b: BigRational, m: Option<u64>) -> Self {
        if b.is_zero() {
            ExactScalar { a, b, m: None }
        } else {
            ExactScalar { a, b, m }
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    pub fn from_rational(a: BigRational) -> Self {
        ExactScalar { a, b: BigRational::zero(), m: None }
    }

    /// `num/den`, rejecting a zero denominator.
    pub fn rational(num: i64, den: i64) -> Result<Self, ExactError> {
        if den == 0 {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::from_rational(BigRational::new(num.into(), den.into())))
    }

    /// `a + b·√m`; `m` must be squarefree and at least 2.
    pub fn quadratic(a: BigRational, b: BigRational, m: u64) -> Result<Self, ExactError> {
        if !is_squarefree(m) {
            return Err(ExactError::BadRadicand(m));
        }
        Ok(Self::normalized(a, b, Some(m)))
    }

    pub fn sqrt_of(m: u64) -> Result<Self, ExactError> {
        Self::quadratic(BigRational::zero(), BigRational::one(), m)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> Option<u64> {
        self.m
    }

    pub fn is_rational(&self) -> bool {
        self.m.is_none()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one()
    }

    fn radicand_value(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.m.unwrap_or(0)))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        let m = join_radicands(self.m, other.m)?;
        Ok(Self::normalized(&self.a + &other.a, &self.b + &other.b, m))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        let m = join_radicands(self.m, other.m)?;
        Ok(Self::normalized(&self.a - &other.a, &self.b - &other.b, m))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let m = join_radicands(self.m, other.m)?;
        if self.b.is_zero() {
            return Ok(Self::normalized(&self.a * &other.a, &self.a * &other.b, m));
        }
        if other.b.is_zero() {
            return Ok(Self::normalized(&self.a * &other.a, &self.b * &other.a, m));
        }
        let mv = BigRational::from_integer(BigInt::from(m.unwrap_or(0)));
        let a = &self.a * &other.a + &self.b * &other.b * mv;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::normalized(a, b, m))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_mul(&other.try_inverse()?)
    }

    /// Field norm `a² − m·b²`; multiplicative.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * self.radicand_value()
    }

    /// Galois conjugate `a − b·√m`.
    pub fn conjugate(&self) -> Self {
        Self::normalized(self.a.clone(), -self.b.clone(), self.m)
    }

    pub fn try_inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // √m is irrational, so the norm of a nonzero element never vanishes.
        let n = self.norm();
        Ok(Self::normalized(&self.a / &n, -&self.b / &n, self.m))
    }

    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let mb2 = &self.b * &self.b * self.radicand_value();
        if a2 > mb2 {
            sa
        } else {
            sb
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            self.negated()
        } else {
            self.clone()
        }
    }

    /// Nearest double; avoids cancellation when the two parts have opposite sign.
    pub fn to_f64(&self) -> f64 {
        let af = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return af;
        }
        let bf = self.b.to_f64().unwrap_or(f64::NAN);
        let root = (self.m.unwrap_or(0) as f64).sqrt();
        if sign_of(&self.a) * sign_of(&self.b) >= 0 {
            af + bf * root
        } else {
            self.norm().to_f64().unwrap_or(f64::NAN) / (af - bf * root)
        }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.try_inverse()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.try_mul(&sq)?;
            }
            n >>= 1;
            if n > 0 {
                sq = sq.try_mul(&sq)?;
            }
        }
        Ok(acc)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field operation with explicit error reporting for division by zero and
/// mixed radicands.
pub fn scalar_arith(a: &ExactScalar, b: &ExactScalar, op: ArithOp) -> Result<ExactScalar, ExactError> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

impl PartialOrd for ExactScalar {
    /// `None` when the operands live in different quadratic fields.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let d = self.try_sub(other).ok()?;
        Some(d.signum().cmp(&0))
    }
}

impl Ring for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("scalars from incompatible quadratic fields")
    }
    fn minus(&self, other: &Self) -> Self {
        self.try_sub(other).expect("scalars from incompatible quadratic fields")
    }
    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).expect("scalars from incompatible quadratic fields")
    }
    fn negated(&self) -> Self {
        ExactScalar { a: -self.a.clone(), b: -self.b.clone(), m: self.m }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $ring:ident) => {
        impl $tr<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                Ring::$ring(self, rhs)
            }
        }
        impl $tr for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                Ring::$ring(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, times);

impl Div for ExactScalar {
    type Output = ExactScalar;
    /// Panics on division by zero or mixed radicands; see [`ExactScalar::try_div`].
    fn div(self, rhs: ExactScalar) -> ExactScalar {
        self.try_div(&rhs).expect("invalid exact division")
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        self.negated()
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::from_integer(n)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        ExactScalar::from_rational(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn quad(a: i64, b: i64, m: u64) -> ExactScalar {
        ExactScalar::quadratic(q(a, 1), q(b, 1), m).unwrap()
    }

    #[test]
    fn golden_ratio_norm_identity() {
        let p = quad(1, 1, 5).try_mul(&quad(1, -1, 5)).unwrap();
        assert_eq!(p, ExactScalar::from_integer(-4));
    }

    #[test]
    fn pell_unit_for_two() {
        // brute force: smallest y >= 1 with 2y^2 + 1 a square is y = 2, x = 3
        let (x, y) = (1..10i64)
            .find_map(|y| {
                let x2 = 2 * y * y + 1;
                let x = (x2 as f64).sqrt().round() as i64;
                (x * x == x2).then_some((x, y))
            })
            .unwrap();
        assert_eq!((x, y), (3, 2));
        let p = quad(x, y, 2).try_mul(&quad(x, -y, 2)).unwrap();
        assert!(p.is_one());
    }

    #[test]
    fn rational_sum() {
        let s = ExactScalar::rational(1, 2).unwrap().try_add(&ExactScalar::rational(1, 3).unwrap()).unwrap();
        assert_eq!(s, ExactScalar::rational(5, 6).unwrap());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let err = scalar_arith(&ExactScalar::one(), &ExactScalar::zero(), ArithOp::Div).unwrap_err();
        assert_eq!(err, ExactError::DivisionByZero);
        assert_eq!(ExactScalar::rational(1, 0).unwrap_err(), ExactError::DivisionByZero);
    }

    #[test]
    fn mixed_radicands_are_rejected() {
        let err = quad(0, 1, 2).try_add(&quad(0, 1, 3)).unwrap_err();
        assert_eq!(err, ExactError::IncompatibleRadicands { left: 2, right: 3 });
        // a rational operand mixes with anything
        assert!(quad(0, 1, 2).try_mul(&ExactScalar::from_integer(3)).is_ok());
    }

    #[test]
    fn radicand_must_be_squarefree() {
        assert_eq!(ExactScalar::sqrt_of(8).unwrap_err(), ExactError::BadRadicand(8));
        assert_eq!(ExactScalar::sqrt_of(1).unwrap_err(), ExactError::BadRadicand(1));
        assert!(ExactScalar::sqrt_of(30).is_ok());
    }

    #[test]
    fn cancelling_radical_drops_to_rational() {
        let x = quad(3, 2, 2).try_add(&quad(0, -2, 2)).unwrap();
        assert!(x.is_rational());
        assert_eq!(x, ExactScalar::from_integer(3));
    }

    #[test]
    fn sign_and_float_of_small_conjugate() {
        // (7 - 3√5)/2 ≈ 0.1459 is positive despite the large negative radical part
        let s = ExactScalar::quadratic(q(7, 2), q(-3, 2), 5).unwrap();
        assert_eq!(s.signum(), 1);
        let expected = (7.0 - 3.0 * 5f64.sqrt()) / 2.0;
        assert!((s.to_f64() - expected).abs() < 1e-15);
        assert_eq!(quad(1, -1, 2).signum(), -1);
        assert!(quad(1, -1, 2) < ExactScalar::zero());
    }

    #[test]
    fn inverse_and_powers() {
        let u = quad(3, 2, 2);
        let inv = u.try_inverse().unwrap();
        assert_eq!(inv, quad(3, -2, 2));
        assert_eq!(u.pow(-2).unwrap(), inv.pow(2).unwrap());
        assert_eq!(u.pow(0).unwrap(), ExactScalar::one());
        assert_eq!(u.pow(3).unwrap(), u.try_mul(&u).unwrap().try_mul(&u).unwrap());
    }
}
