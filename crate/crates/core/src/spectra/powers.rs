use std::collections::HashMap;

use nalgebra::{Complex, ComplexField, DMatrix};

use super::{check_square, ComplexMatrix, RealMatrix, SpectraError};

/// `p`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, p, &mut Vec::with_capacity(p), &mut out);
    out
}

/// `p`-element multisets of `0..n`, as sorted index lists, in lexicographic
/// order.
pub fn multisets(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, p, &mut Vec::with_capacity(p), &mut out);
    out
}

/// `Λᵖ(g)` on the basis `e_{i₁}∧⋯∧e_{i_p}`, `i₁ < ⋯ < i_p`, ordered
/// lexicographically. `p = 0` gives the 1×1 identity.
pub(crate) fn exterior_power_any<T: ComplexField + Copy>(g: &DMatrix<T>, p: usize) -> DMatrix<T> {
    let basis = subsets(g.nrows(), p);
    let mut out = DMatrix::zeros(basis.len(), basis.len());
    for (r, rows) in basis.iter().enumerate() {
        for (c, cols) in basis.iter().enumerate() {
            out[(r, c)] = DMatrix::from_fn(p, p, |i, j| g[(rows[i], cols[j])]).determinant();
        }
    }
    out
}

/// `Λᵖ(g)` for `1 ≤ p ≤ dim`.
pub fn exterior_power<T: ComplexField + Copy>(g: &DMatrix<T>, p: usize) -> Result<DMatrix<T>, SpectraError> {
    let dim = check_square(g)?;
    if p == 0 || p > dim {
        return Err(SpectraError::PowerOutOfRange { p, dim });
    }
    Ok(exterior_power_any(g, p))
}

/// `Symᵖ(g)` on the monomial basis `e^α`, `|α| = p`, with multi-indices in the
/// lexicographic order of [`multisets`]. Column `β` holds the expansion of
/// `∏ₖ g·e_{βₖ}`.
pub fn symmetric_power<T: ComplexField + Copy>(g: &DMatrix<T>, p: usize) -> Result<DMatrix<T>, SpectraError> {
    let n = check_square(g)?;
    if p == 0 {
        return Err(SpectraError::PowerOutOfRange { p, dim: n });
    }
    let basis = multisets(n, p);
    let index: HashMap<&[usize], usize> = basis.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mut out = DMatrix::zeros(basis.len(), basis.len());
    for (c, beta) in basis.iter().enumerate() {
        let mut poly: HashMap<Vec<usize>, T> = HashMap::from([(Vec::new(), T::one())]);
        for &j in beta {
            let mut next: HashMap<Vec<usize>, T> = HashMap::new();
            for (mono, coeff) in &poly {
                for i in 0..n {
                    let gij = g[(i, j)];
                    if gij == T::zero() {
                        continue;
                    }
                    let mut m = mono.clone();
                    let pos = m.partition_point(|&x| x <= i);
                    m.insert(pos, i);
                    *next.entry(m).or_insert_with(T::zero) += *coeff * gij;
                }
            }
            poly = next;
        }
        for (mono, coeff) in poly {
            out[(index[mono.as_slice()], c)] = coeff;
        }
    }
    Ok(out)
}

/// `g(t)` in SL(k+1, ℝ): the hyperbolic block `[[cosh t, sinh t], [sinh t, cosh t]]`
/// in the first two coordinates and the identity on the remaining `k − 1`.
///
/// # Panics
/// If `k = 0`.
pub fn gt_matrix(t: f64, k: usize) -> RealMatrix {
    assert!(k >= 1, "g(t) needs k >= 1");
    let mut g = RealMatrix::identity(k + 1, k + 1);
    g[(0, 0)] = t.cosh();
    g[(1, 1)] = t.cosh();
    g[(0, 1)] = t.sinh();
    g[(1, 0)] = t.sinh();
    g
}

pub fn to_complex(g: &RealMatrix) -> ComplexMatrix {
    g.map(|x| Complex::new(x, 0.0))
}
