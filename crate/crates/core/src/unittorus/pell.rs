use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::exact::{is_squarefree, ExactScalar, ScalarMatrix};

use super::{orbit_span_check, UnitTorusError};

fn ser_bigint<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(n)
}

/// A norm-one unit `x + y√m` of ℚ(√m) with `x, y > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitSpec {
    pub m: u64,
    #[serde(serialize_with = "ser_bigint")]
    pub x: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub y: BigInt,
}

impl UnitSpec {
    pub fn new(m: u64, x: BigInt, y: BigInt) -> Result<Self, UnitTorusError> {
        if !is_squarefree(m) {
            return Err(UnitTorusError::NotSquarefree(m));
        }
        if !x.is_positive() || !y.is_positive() || &x * &x - BigInt::from(m) * &y * &y != BigInt::one() {
            return Err(UnitTorusError::NotPell { m, x: x.to_string(), y: y.to_string() });
        }
        Ok(Self { m, x, y })
    }

    /// `uⁿ` for `n ≥ 1`, computed in ℤ[√m].
    pub fn pow(&self, n: u32) -> Self {
        let m = BigInt::from(self.m);
        let (mut x, mut y) = (self.x.clone(), self.y.clone());
        for _ in 1..n {
            (x, y) = (&x * &self.x + &m * &y * &self.y, &x * &self.y + &y * &self.x);
        }
        Self { m: self.m, x, y }
    }

    pub fn as_scalar(&self) -> ExactScalar {
        self.scalar(BigRational::from(self.y.clone()))
    }

    pub fn conjugate_scalar(&self) -> ExactScalar {
        self.scalar(BigRational::from(-self.y.clone()))
    }

    fn scalar(&self, y: BigRational) -> ExactScalar {
        ExactScalar::quadratic(BigRational::from(self.x.clone()), y, self.m).expect("squarefree radicand")
    }
}

/// Minimal positive solution of `x² − m·y² = 1`, found as the first
/// continued-fraction convergent of `√m` with norm one. When the period is
/// odd this is the square of the norm −1 unit.
pub fn pell_fundamental(m: u64) -> Result<UnitSpec, UnitTorusError> {
    let a0 = m.sqrt();
    if a0 * a0 == m {
        return Err(UnitTorusError::PerfectSquare(m));
    }
    if !is_squarefree(m) {
        return Err(UnitTorusError::NotSquarefree(m));
    }
    let big_m = BigInt::from(m);
    let (mut mn, mut dn, mut an) = (0u64, 1u64, a0);
    let (mut p_prev, mut p) = (BigInt::one(), BigInt::from(a0));
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    while &p * &p - &big_m * &q * &q != BigInt::one() {
        mn = dn * an - mn;
        dn = (m - mn * mn) / dn;
        an = (a0 + mn) / dn;
        let a = BigInt::from(an);
        (p_prev, p) = (p.clone(), &a * &p + &p_prev);
        (q_prev, q) = (q.clone(), &a * &q + &q_prev);
    }
    UnitSpec::new(m, p, q)
}

/// Multiplication by `x + y√m` on the basis `{1, √m}`: `[[x, m·y], [y, x]]`.
pub fn regular_rep(u: &UnitSpec) -> ScalarMatrix {
    let int = |n: BigInt| ExactScalar::from_bigint(n);
    ScalarMatrix::from_rows(vec![vec![int(u.x.clone()), int(BigInt::from(u.m) * &u.y)], vec![int(u.y.clone()), int(u.x.clone())]]).expect("2x2")
}

/// `(log(x + y√m), log(x − y√m))`. Norm one makes the second component the
/// negative of the first: `x − y√m = 1/(x + y√m)`.
pub fn log_embedding(u: &UnitSpec) -> [f64; 2] {
    let x = u.x.to_f64().unwrap_or(f64::INFINITY);
    let y = u.y.to_f64().unwrap_or(f64::INFINITY);
    let big = x + y * (u.m as f64).sqrt();
    [big.ln(), (1.0 / big).ln()]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Density {
    Dense,
    NotDense,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TorusCertificate {
    pub unit: UnitSpec,
    pub matrix: ScalarMatrix,
    /// `x + y√m` and `x − y√m`, each verified to be a root of the
    /// characteristic polynomial.
    pub eigenvalues: [ExactScalar; 2],
    pub log_vector: [f64; 2],
    /// Galois action on the two real embeddings.
    pub permutations: Vec<Vec<usize>>,
    pub rank: usize,
    pub verdict: Density,
}

/// Pell unit, its regular representation, and the orbit-span certificate that
/// the cyclic group it generates is Zariski dense in the diagonalizing torus.
pub fn zariski_dense_cyclic(m: u64, tol: f64) -> Result<TorusCertificate, UnitTorusError> {
    let unit = pell_fundamental(m)?;
    let matrix = regular_rep(&unit);
    let eigenvalues = [unit.as_scalar(), unit.conjugate_scalar()];
    let trace = matrix.get(0, 0).try_add(matrix.get(1, 1))?;
    let det = matrix.determinant();
    for l in &eigenvalues {
        let value = l.try_mul(l)?.try_sub(&trace.try_mul(l)?)?.try_add(&det)?;
        assert!(value.is_zero(), "x ± y√m is a root of X² − 2xX + 1");
    }
    let log_vector = log_embedding(&unit);
    let permutations = vec![vec![1, 0]];
    let rank = orbit_span_check(&log_vector, &permutations, tol)?;
    let verdict = if rank == 1 { Density::Dense } else { Density::NotDense };
    Ok(TorusCertificate { unit, matrix, eigenvalues, log_vector, permutations, rank, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest y ≥ 1 with m·y² + 1 a perfect square.
    fn brute_force(m: u64) -> (u64, u64) {
        (1u64..)
            .find_map(|y| {
                let x2 = m * y * y + 1;
                let x = x2.sqrt();
                (x * x == x2).then_some((x, y))
            })
            .unwrap()
    }

    fn big(n: u64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn pell_examples() {
        for m in [2, 3, 5, 7, 13, 46] {
            let u = pell_fundamental(m).unwrap();
            let (x, y) = brute_force(m);
            assert_eq!((u.x, u.y), (big(x), big(y)), "m = {m}");
        }
        assert_eq!(pell_fundamental(4), Err(UnitTorusError::PerfectSquare(4)));
        assert_eq!(pell_fundamental(8), Err(UnitTorusError::NotSquarefree(8)));
    }

    #[test]
    fn odd_period_squares_the_negative_unit() {
        // 1 + √2 has norm −1; its square is 3 + 2√2
        let u = pell_fundamental(2).unwrap();
        assert_eq!((u.x, u.y), (big(3), big(2)));
    }

    #[test]
    fn regular_rep_examples() {
        let rep = |m| regular_rep(&pell_fundamental(m).unwrap());
        assert_eq!(rep(2), ScalarMatrix::from_integers(&[&[3, 4], &[2, 3]]).unwrap());
        assert_eq!(rep(3), ScalarMatrix::from_integers(&[&[2, 3], &[1, 2]]).unwrap());
        assert!(rep(5).determinant().is_one());
    }

    #[test]
    fn log_embedding_examples() {
        let u = pell_fundamental(2).unwrap();
        let l = log_embedding(&u);
        let want = (3.0 + 2.0 * 2f64.sqrt()).ln();
        assert!((l[0] - want).abs() < 1e-15 && (l[1] + want).abs() < 1e-15);
        assert!((l[0] + l[1]).abs() < 1e-12);
        let trivial = UnitSpec { m: 2, x: big(1), y: big(0) };
        assert_eq!(log_embedding(&trivial), [0.0, 0.0]);
    }

    #[test]
    fn unit_validation() {
        assert!(UnitSpec::new(2, big(3), big(2)).is_ok());
        assert!(matches!(UnitSpec::new(2, big(3), big(1)), Err(UnitTorusError::NotPell { .. })));
        assert!(matches!(UnitSpec::new(4, big(1), big(0)), Err(UnitTorusError::NotSquarefree(4))));
    }

    #[test]
    fn powers_match_matrix_powers() {
        let u = pell_fundamental(7).unwrap();
        let m = regular_rep(&u);
        for n in 1..=5u32 {
            assert_eq!(regular_rep(&u.pow(n)), m.pow(n as i64).unwrap());
        }
    }

    #[test]
    fn certificates() {
        let c = zariski_dense_cyclic(2, 1e-9).unwrap();
        assert_eq!(c.matrix, ScalarMatrix::from_integers(&[&[3, 4], &[2, 3]]).unwrap());
        assert_eq!((c.rank, c.verdict), (1, Density::Dense));
        let c = zariski_dense_cyclic(5, 1e-9).unwrap();
        assert_eq!(c.matrix, ScalarMatrix::from_integers(&[&[9, 20], &[4, 9]]).unwrap());
        assert_eq!(c.verdict, Density::Dense);
        assert_eq!(c.eigenvalues[0].to_string(), "9+4*sqrt(5)");
        assert_eq!(zariski_dense_cyclic(4, 1e-9).unwrap_err(), UnitTorusError::PerfectSquare(4));
    }
}
