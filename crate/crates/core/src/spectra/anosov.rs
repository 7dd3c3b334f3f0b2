use rayon::prelude::*;
use serde::Serialize;

use crate::words::{GammaElement, Letter};

use super::powers::exterior_power_any;
use super::{check_square, RealMatrix, SpectraError};

/// Smallest root gap among the reduced words of one length.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GapRow {
    pub length: usize,
    pub min_gap: f64,
    pub witness: GammaElement,
    pub count: usize,
}

/// Affine lower bound `gapᵢ(γ) ≥ c·|γ| − C` over a finite ball.
///
/// `c_mu` is the largest slope valid with `C = 0`; `c_ell` bounds the slope by
/// the Jordan gaps of cyclically reduced words, which any linear lower bound
/// must respect on powers. `c = min(c_mu, c_ell)`. A positive `c` is evidence
/// on the ball only, not a proof.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GapFit {
    pub root: usize,
    pub radius: usize,
    pub c: f64,
    #[serde(rename = "C")]
    pub big_c: f64,
    pub c_mu: f64,
    pub c_ell: f64,
    pub certified: bool,
    pub table: Vec<GapRow>,
}

/// `Λ^{i−1}, Λ^i, Λ^{i+1}` images, multiplied along a word.
#[derive(Clone)]
struct Images([RealMatrix; 3]);

impl Images {
    fn of(g: &RealMatrix, root: usize) -> Self {
        Images([exterior_power_any(g, root - 1), exterior_power_any(g, root), exterior_power_any(g, root + 1)])
    }

    fn mul(&self, other: &Self) -> Self {
        Images([&self.0[0] * &other.0[0], &self.0[1] * &other.0[1], &self.0[2] * &other.0[2]])
    }

    /// `2·log f(Λⁱ) − log f(Λ^{i−1}) − log f(Λ^{i+1})`.
    fn gap(&self, f: impl Fn(&RealMatrix) -> f64) -> f64 {
        2.0 * f(&self.0[1]).ln() - f(&self.0[0]).ln() - f(&self.0[2]).ln()
    }

    fn singular_gap(&self) -> f64 {
        self.gap(|m| m.clone().svd(false, false).singular_values.max())
    }

    fn jordan_gap(&self) -> f64 {
        self.gap(|m| m.complex_eigenvalues().iter().map(|z| z.norm()).fold(0.0, f64::max))
    }
}

struct Acc {
    /// Per length: (min gap, witness letters, count).
    rows: Vec<(f64, Vec<Letter>, usize)>,
    c_ell: f64,
}

impl Acc {
    fn new(radius: usize) -> Self {
        Self { rows: vec![(f64::INFINITY, Vec::new(), 0); radius + 1], c_ell: f64::INFINITY }
    }

    /// Keeps the earlier witness on ties, so merging in letter order is
    /// deterministic.
    fn merge(mut self, other: Acc) -> Acc {
        for (mine, theirs) in self.rows.iter_mut().zip(other.rows) {
            mine.2 += theirs.2;
            if theirs.0 < mine.0 {
                (mine.0, mine.1) = (theirs.0, theirs.1);
            }
        }
        self.c_ell = self.c_ell.min(other.c_ell);
        self
    }
}

fn inverse_letter(l: usize) -> usize {
    l ^ 1
}

fn explore(word: &mut Vec<usize>, image: &Images, letters: &[Images], radius: usize, acc: &mut Acc) {
    let n = word.len();
    let gap = image.singular_gap();
    let row = &mut acc.rows[n];
    row.2 += 1;
    if gap < row.0 {
        row.0 = gap;
        row.1 = word.iter().map(|&l| Letter(l / 2, if l % 2 == 0 { 1 } else { -1 })).collect();
    }
    if inverse_letter(word[0]) != word[n - 1] {
        acc.c_ell = acc.c_ell.min(image.jordan_gap() / n as f64);
    }
    if n == radius {
        return;
    }
    for (l, li) in letters.iter().enumerate() {
        if l == inverse_letter(word[n - 1]) {
            continue;
        }
        word.push(l);
        explore(word, &image.mul(li), letters, radius, acc);
        word.pop();
    }
}

/// Fits `gapᵢ(γ) = log σᵢ(γ) − log σᵢ₊₁(γ) ≥ c·|γ| − C` over all freely
/// reduced words of length at most `radius` in the generators and their
/// inverses (`|γ|` is the free word length). `root` is 1-based.
pub fn anosov_gap_fit(generators: &[RealMatrix], radius: usize, root: usize, tol: f64) -> Result<GapFit, SpectraError> {
    let first = generators.first().ok_or(SpectraError::NoGenerators)?;
    let d = check_square(first)?;
    if radius < 2 {
        return Err(SpectraError::RadiusTooSmall(radius));
    }
    if root == 0 || root >= d {
        return Err(SpectraError::RootOutOfRange { root, max: d - 1 });
    }
    let mut letters = Vec::with_capacity(2 * generators.len());
    for (index, g) in generators.iter().enumerate() {
        let found = check_square(g)?;
        if found != d {
            return Err(SpectraError::DimensionMismatch { index, found, expected: d });
        }
        let inv = g.clone().try_inverse().ok_or(SpectraError::Singular)?;
        letters.push(Images::of(g, root));
        letters.push(Images::of(&inv, root));
    }

    let acc = (0..letters.len())
        .into_par_iter()
        .map(|l| {
            let mut acc = Acc::new(radius);
            explore(&mut vec![l], &letters[l], &letters, radius, &mut acc);
            acc
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Acc::new(radius), Acc::merge);

    let mut table: Vec<GapRow> = acc
        .rows
        .into_iter()
        .enumerate()
        .map(|(length, (min_gap, w, count))| GapRow { length, min_gap, witness: GammaElement::from_letters(w), count })
        .collect();
    table[0] = GapRow { length: 0, min_gap: 0.0, witness: GammaElement::identity(), count: 1 };

    let c_mu = table[1..].iter().map(|r| r.min_gap / r.length as f64).fold(f64::INFINITY, f64::min);
    let c = c_mu.min(acc.c_ell);
    let big_c = table.iter().map(|r| c * r.length as f64 - r.min_gap).fold(0.0, f64::max);
    Ok(GapFit { root, radius, c, big_c, c_mu, c_ell: acc.c_ell, certified: c > tol, table })
}
