use nalgebra::{Complex, Quaternion};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{translation_length_via_rep, ComplexMatrix, RealMatrix, SpectraError};

/// Square matrix over Hamilton's quaternions, row-major.
///
/// JSON: rows of `[a, b, c, d]` tuples for `a + bi + cj + dk`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuatMatrix {
    n: usize,
    entries: Vec<Quaternion<f64>>,
}

impl QuatMatrix {
    pub fn from_rows(rows: Vec<Vec<Quaternion<f64>>>) -> Result<Self, SpectraError> {
        let n = rows.len();
        if n == 0 {
            return Err(SpectraError::InvalidQuat("empty matrix".into()));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(SpectraError::InvalidQuat(format!("row {i} has {} entries, expected {n}", r.len())));
        }
        Ok(Self { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_real(g: &RealMatrix) -> Result<Self, SpectraError> {
        let n = super::check_square(g)?;
        Ok(Self { n, entries: (0..n * n).map(|i| Quaternion::new(g[(i / n, i % n)], 0.0, 0.0, 0.0)).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Quaternion::new(1.0, 0.0, 0.0, 0.0))
    }

    /// `z·I`.
    pub fn scalar(n: usize, z: Quaternion<f64>) -> Self {
        let zero = Quaternion::new(0.0, 0.0, 0.0, 0.0);
        Self { n, entries: (0..n * n).map(|i| if i / n == i % n { z } else { zero }).collect() }
    }

    /// `J = diag(1, …, 1, −1)` of size `n`.
    pub fn j_form(n: usize) -> Self {
        let mut j = Self::identity(n);
        j.entries[n * n - 1] = Quaternion::new(-1.0, 0.0, 0.0, 0.0);
        j
    }

    /// `g(t)` inside Sp(k, 1): the hyperbolic block acts on the last two
    /// coordinates so that `J` is preserved.
    pub fn gt_sp(t: f64, k: usize) -> Self {
        let n = k + 1;
        let mut g = RealMatrix::identity(n, n);
        let (a, b) = (n - 2, n - 1);
        g[(a, a)] = t.cosh();
        g[(b, b)] = t.cosh();
        g[(a, b)] = t.sinh();
        g[(b, a)] = t.sinh();
        Self::from_real(&g).expect("square")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Quaternion<f64> {
        self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let entries = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                (0..n).map(|k| self.get(i, k) * other.get(k, j)).fold(Quaternion::new(0.0, 0.0, 0.0, 0.0), |a, b| a + b)
            })
            .collect();
        Self { n, entries }
    }

    /// `g*`: conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.n;
        Self { n, entries: (0..n * n).map(|idx| self.get(idx % n, idx / n).conjugate()).collect() }
    }

    /// `‖g*Jg − J‖_F / max(1, ‖g‖_F²)`.
    pub fn j_residual(&self) -> f64 {
        let j = Self::j_form(self.n);
        let lhs = self.adjoint().mul(&j).mul(self);
        let diff: f64 = lhs.entries.iter().zip(&j.entries).map(|(a, b)| (a - b).norm_squared()).sum();
        let norm2: f64 = self.entries.iter().map(|q| q.norm_squared()).sum();
        diff.sqrt() / norm2.max(1.0)
    }
}

impl Serialize for QuatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 4]>> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let q = self.get(i, j);
                        [q.w, q.i, q.j, q.k]
                    })
                    .collect()
            })
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuatMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<[f64; 4]>>::deserialize(d)?;
        let rows = rows.into_iter().map(|r| r.into_iter().map(|[a, b, c, e]| Quaternion::new(a, b, c, e)).collect()).collect();
        QuatMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// The 2n×2n complex matrix with block `[[α, β], [−β̄, ᾱ]]` for each entry
/// `α + βj`, `α = a + bi`, `β = c + di`.
pub fn quat_complex_embed(q: &QuatMatrix) -> ComplexMatrix {
    let n = q.n;
    ComplexMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let z = q.get(r / 2, c / 2);
        let alpha = Complex::new(z.w, z.i);
        let beta = Complex::new(z.j, z.k);
        match (r % 2, c % 2) {
            (0, 0) => alpha,
            (0, 1) => beta,
            (1, 0) => -beta.conj(),
            _ => alpha.conj(),
        }
    })
}

/// Translation length in quaternionic hyperbolic space, read off the complex
/// embedding. `q` must preserve `J` up to `tol`.
pub fn translation_length_quat(q: &QuatMatrix, tol: f64) -> Result<f64, SpectraError> {
    let residual = q.j_residual();
    if residual > tol {
        return Err(SpectraError::JResidual { residual, tol });
    }
    Ok(translation_length_via_rep(&quat_complex_embed(q), tol)?.length)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Obstruction {
    /// The translation lengths differ by more than `3·tol`.
    Obstructed,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ObstructionReport {
    pub length_1: f64,
    pub length_2: f64,
    pub verdict: Obstruction,
}

/// Compares the translation lengths of two edge generators.
pub fn obstruction_witness(g1: &QuatMatrix, g2: &QuatMatrix, tol: f64) -> Result<ObstructionReport, SpectraError> {
    let length_1 = translation_length_quat(g1, tol)?;
    let length_2 = translation_length_quat(g2, tol)?;
    let verdict = if (length_1 - length_2).abs() > 3.0 * tol { Obstruction::Obstructed } else { Obstruction::Inconclusive };
    Ok(ObstructionReport { length_1, length_2, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::DEFAULT_TOL;

    fn q(a: f64, b: f64, c: f64, d: f64) -> Quaternion<f64> {
        Quaternion::new(a, b, c, d)
    }

    #[test]
    fn embedding_is_multiplicative_on_units() {
        let units = [q(0.0, 1.0, 0.0, 0.0), q(0.0, 0.0, 1.0, 0.0), q(0.0, 0.0, 0.0, 1.0), q(1.0, 2.0, -3.0, 0.5)];
        for &x in &units {
            for &y in &units {
                let (a, b) = (QuatMatrix::scalar(1, x), QuatMatrix::scalar(1, y));
                let lhs = quat_complex_embed(&a.mul(&b));
                let rhs = quat_complex_embed(&a) * quat_complex_embed(&b);
                assert!((lhs - rhs).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn adjoint_embeds_as_conjugate_transpose() {
        let g = QuatMatrix::from_rows(vec![vec![q(1.0, 2.0, 3.0, 4.0), q(0.5, -1.0, 0.0, 2.0)], vec![q(0.0, 0.0, 1.0, 0.0), q(-2.0, 1.0, 1.0, 1.0)]])
            .unwrap();
        assert!((quat_complex_embed(&g.adjoint()) - quat_complex_embed(&g).adjoint()).norm() < 1e-12);
    }

    #[test]
    fn real_matrix_doubles_multiplicities() {
        let g = RealMatrix::from_row_slice(2, 2, &[5.0, 3.0, 3.0, 2.0]);
        let e = quat_complex_embed(&QuatMatrix::from_real(&g).unwrap());
        let mut moduli: Vec<f64> = e.schur().eigenvalues().unwrap().iter().map(|z| z.norm()).collect();
        moduli.sort_by(f64::total_cmp);
        let s5 = 5f64.sqrt();
        let (lo, hi) = ((7.0 - 3.0 * s5) / 2.0, (7.0 + 3.0 * s5) / 2.0);
        for (m, want) in moduli.iter().zip([lo, lo, hi, hi]) {
            assert!((m - want).abs() < 1e-10);
        }
    }

    #[test]
    fn translation_lengths() {
        for t in [0.25, 1.0, 2.0] {
            let tl = translation_length_quat(&QuatMatrix::gt_sp(t, 2), DEFAULT_TOL).unwrap();
            assert!((tl - t).abs() < 1e-9);
        }
        let jq = QuatMatrix::scalar(3, q(0.0, 0.0, 1.0, 0.0));
        assert!(jq.j_residual() < 1e-15);
        assert_eq!(translation_length_quat(&jq, DEFAULT_TOL).unwrap(), 0.0);
        let unitary = quat_complex_embed(&jq);
        assert!((unitary.adjoint() * &unitary - ComplexMatrix::identity(6, 6)).norm() < 1e-15);
    }

    #[test]
    fn non_isometry_is_rejected() {
        let g = QuatMatrix::from_real(&RealMatrix::from_diagonal_element(3, 3, 2.0)).unwrap();
        assert!(matches!(translation_length_quat(&g, DEFAULT_TOL), Err(SpectraError::JResidual { .. })));
    }

    #[test]
    fn obstruction_examples() {
        let tol = DEFAULT_TOL;
        let r = obstruction_witness(&QuatMatrix::gt_sp(1.0, 2), &QuatMatrix::gt_sp(2.0, 2), tol).unwrap();
        assert_eq!(r.verdict, Obstruction::Obstructed);
        let r = obstruction_witness(&QuatMatrix::gt_sp(1.0, 2), &QuatMatrix::gt_sp(1.0 + 1e-12, 2), tol).unwrap();
        assert_eq!(r.verdict, Obstruction::Inconclusive);
    }

    #[test]
    fn json_round_trip() {
        let g = QuatMatrix::gt_sp(0.5, 2).mul(&QuatMatrix::scalar(3, q(0.0, 1.0, 0.0, 0.0)));
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<QuatMatrix>(&s).unwrap(), g);
        assert!(serde_json::from_str::<QuatMatrix>("[[[1,0,0,0]],[]]").is_err());
    }
}
