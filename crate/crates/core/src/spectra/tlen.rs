use serde::{Deserialize, Serialize};

use super::{check_square, exterior_power, gt_matrix, sort_desc, symmetric_power, to_complex, ComplexMatrix, SpectraError};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TranslationLength {
    /// `log λᵢ − log λᵢ₊₁` for the top cluster of size `i`; 0 when elliptic.
    pub length: f64,
    pub top_multiplicity: usize,
    /// Every eigenvalue modulus agrees with the top one.
    pub elliptic: bool,
}

/// Log eigenvalue moduli in non-increasing order.
pub(crate) fn log_moduli(m: &ComplexMatrix) -> Result<Vec<f64>, SpectraError> {
    check_square(m)?;
    let eig = m.clone().schur().eigenvalues().expect("complex Schur form is triangular");
    let mut l: Vec<f64> = eig.iter().map(|z| z.norm().ln()).collect();
    if l.iter().any(|x| !x.is_finite()) {
        return Err(SpectraError::Singular);
    }
    sort_desc(&mut l);
    Ok(l)
}

/// Gap between the top cluster of eigenvalue moduli and the next modulus.
/// Moduli whose logs agree with the top within `tol` (relative to
/// `max(1, |log λ₁|)`) form the top cluster.
pub fn translation_length_via_rep(m: &ComplexMatrix, tol: f64) -> Result<TranslationLength, SpectraError> {
    let l = log_moduli(m)?;
    let top = l[0];
    let eps = tol * top.abs().max(1.0);
    let mult = l.iter().take_while(|&&x| top - x <= eps).count();
    if mult == l.len() {
        return Ok(TranslationLength { length: 0.0, top_multiplicity: mult, elliptic: true });
    }
    Ok(TranslationLength { length: top - l[mult], top_multiplicity: mult, elliptic: false })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PowerRep {
    Exterior,
    Symmetric,
}

impl PowerRep {
    pub fn apply(self, g: &ComplexMatrix, p: usize) -> Result<ComplexMatrix, SpectraError> {
        match self {
            PowerRep::Exterior => exterior_power(g, p),
            PowerRep::Symmetric => symmetric_power(g, p),
        }
    }
}

/// Translation length of `τ(g(t))` for `τ = Λᵖ` or `Symᵖ` of SL(k+1),
/// compared with `t`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PowerLengthReport {
    pub k: usize,
    pub rep: PowerRep,
    pub p: usize,
    pub t: f64,
    pub length: TranslationLength,
    /// `k < 2`: `g(t)` has no eigenvalue 1 and the comparison is not expected
    /// to hold.
    pub small_k: bool,
    /// Not elliptic and `|length − t| < tol`.
    pub holds: bool,
}

pub fn power_length_check(k: usize, rep: PowerRep, p: usize, t: f64, tol: f64) -> Result<PowerLengthReport, SpectraError> {
    let m = rep.apply(&to_complex(&gt_matrix(t, k)), p)?;
    let length = translation_length_via_rep(&m, tol)?;
    let holds = !length.elliptic && (length.length - t).abs() < tol;
    Ok(PowerLengthReport { k, rep, p, t, length, small_k: k < 2, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::DEFAULT_TOL;

    #[test]
    fn identity_is_elliptic() {
        let tl = translation_length_via_rep(&to_complex(&gt_matrix(0.0, 3)), DEFAULT_TOL).unwrap();
        assert!(tl.elliptic);
        assert_eq!(tl.length, 0.0);
    }

    #[test]
    fn power_length_examples() {
        let r = power_length_check(2, PowerRep::Exterior, 2, 1.0, DEFAULT_TOL).unwrap();
        assert!(r.holds, "{r:?}");
        let r = power_length_check(3, PowerRep::Symmetric, 3, 0.5, DEFAULT_TOL).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.length.top_multiplicity, 1);
    }

    #[test]
    fn exterior_square_of_sl4_has_double_top() {
        // eigenvalues e^t, 1, 1, e^{-t}: wedge pairs give e^t twice
        let r = power_length_check(3, PowerRep::Exterior, 2, 2.0, DEFAULT_TOL).unwrap();
        assert_eq!(r.length.top_multiplicity, 2);
        assert!(r.holds);
    }

    #[test]
    fn k_one_is_flagged() {
        // in SL(2), Sym² has moduli e^{2t}, 1, e^{-2t}: the gap is 2t
        let r = power_length_check(1, PowerRep::Symmetric, 2, 0.5, DEFAULT_TOL).unwrap();
        assert!(r.small_k);
        assert!(!r.holds);
        assert!((r.length.length - 1.0).abs() < 1e-12);
    }

    #[test]
    fn top_exterior_power_is_elliptic() {
        let r = power_length_check(2, PowerRep::Exterior, 3, 1.0, DEFAULT_TOL).unwrap();
        assert!(r.length.elliptic);
        assert!(!r.holds);
    }

    #[test]
    fn singular_is_rejected() {
        assert_eq!(translation_length_via_rep(&ComplexMatrix::zeros(2, 2), DEFAULT_TOL), Err(SpectraError::Singular));
    }
}
