use nalgebra::DMatrix;
use serde::Serialize;

use super::{check_square, exterior_power, sort_desc, RealMatrix, SpectraError};

/// Cartan and Jordan projections of one matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralData {
    /// Log singular values, non-increasing.
    pub sigma: Vec<f64>,
    /// Log eigenvalue moduli, non-increasing.
    pub lambda: Vec<f64>,
    pub tol: f64,
}

impl SpectralData {
    pub fn new(g: &RealMatrix, tol: f64) -> Result<Self, SpectraError> {
        Ok(Self { sigma: cartan_projection(g)?, lambda: jordan_projection(g)?, tol })
    }

    /// Both vectors sorted, `Σσᵢ = log|det g|` and `λᵢ ≤ σ₁`, within `tol`
    /// relative to the largest magnitude involved.
    pub fn is_consistent(&self, log_abs_det: f64) -> bool {
        let scale = |x: f64| self.tol * x.abs().max(1.0);
        let sorted = |v: &[f64]| v.windows(2).all(|w| w[0] >= w[1]);
        let sum: f64 = self.sigma.iter().sum();
        sorted(&self.sigma)
            && sorted(&self.lambda)
            && (sum - log_abs_det).abs() <= scale(self.sigma[0]) * self.sigma.len() as f64
            && self.lambda.iter().all(|&l| l <= self.sigma[0] + scale(self.sigma[0]))
    }
}

fn singular_values(g: &RealMatrix) -> Result<Vec<f64>, SpectraError> {
    let n = check_square(g)?;
    let mut sv: Vec<f64> = g.clone().svd(false, false).singular_values.iter().copied().collect();
    sort_desc(&mut sv);
    if sv[n - 1] <= sv[0] * f64::EPSILON * n as f64 {
        return Err(SpectraError::Singular);
    }
    Ok(sv)
}

/// `μ(g)`: log singular values in non-increasing order.
pub fn cartan_projection(g: &RealMatrix) -> Result<Vec<f64>, SpectraError> {
    Ok(singular_values(g)?.into_iter().map(f64::ln).collect())
}

/// `ℓ(g)`: log eigenvalue moduli in non-increasing order.
pub fn jordan_projection(g: &RealMatrix) -> Result<Vec<f64>, SpectraError> {
    singular_values(g)?;
    let mut l: Vec<f64> = g.complex_eigenvalues().iter().map(|z| z.norm().ln()).collect();
    sort_desc(&mut l);
    Ok(l)
}

/// `log σ₁(Aⁿ)` by repeated squaring with rescaling, so large powers neither
/// overflow nor lose the top singular value.
fn log_top_sv_of_power(a: &RealMatrix, n: u32) -> f64 {
    let normalize = |m: RealMatrix, log: f64| {
        let s = m.amax();
        if s > 0.0 {
            (m / s, log + s.ln())
        } else {
            (m, log)
        }
    };
    let (mut base, mut base_log) = normalize(a.clone(), 0.0);
    let (mut acc, mut acc_log) = (DMatrix::identity(a.nrows(), a.ncols()), 0.0);
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            (acc, acc_log) = normalize(&acc * &base, acc_log + base_log);
        }
        e >>= 1;
        if e > 0 {
            (base, base_log) = normalize(&base * &base, 2.0 * base_log);
        }
    }
    let top = acc.svd(false, false).singular_values.max();
    top.ln() + acc_log
}

/// Largest deviation between `μ(gⁿ)/n` and `ℓ(g)`.
///
/// `μᵢ(gⁿ)` is read off exterior powers as
/// `log σ₁(Λⁱ(g)ⁿ) − log σ₁(Λ^{i−1}(g)ⁿ)`, which keeps small singular values
/// accurate. For non-normal `g` the deviation decays only like `1/n`.
pub fn jordan_crosscheck(g: &RealMatrix, n: u32) -> Result<f64, SpectraError> {
    let d = check_square(g)?;
    let ell = jordan_projection(g)?;
    let mut prev = 0.0;
    let mut worst: f64 = 0.0;
    for i in 1..=d {
        let top = log_top_sv_of_power(&exterior_power(g, i)?, n);
        worst = worst.max(((top - prev) / n as f64 - ell[i - 1]).abs());
        prev = top;
    }
    Ok(worst)
}
