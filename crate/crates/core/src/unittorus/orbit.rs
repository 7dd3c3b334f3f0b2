use std::collections::{HashSet, VecDeque};

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::UnitTorusError;

fn check_perms(d: usize, perms: &[Vec<usize>]) -> Result<(), UnitTorusError> {
    if perms.is_empty() && d > 1 {
        return Err(UnitTorusError::NoGenerators(d));
    }
    for p in perms {
        let mut seen = vec![false; d];
        if p.len() != d || !p.iter().all(|&i| i < d && !std::mem::replace(&mut seen[i], true)) {
            return Err(UnitTorusError::InvalidPermutation(format!("{p:?} is not a permutation of 0..{d}")));
        }
    }
    Ok(())
}

/// Elements of the permutation group generated by `perms`.
fn group(d: usize, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..d).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(g) = queue.pop_front() {
        for p in perms {
            let h: Vec<usize> = g.iter().map(|&i| p[i]).collect();
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
        out.push(g);
    }
    out
}

/// Rank of the span of `{σ·x}` over the group generated by `perms`, where
/// `(σ·x)_{σ(i)} = x_i`. Rank `d − 1` means the orbit spans the sum-zero
/// hyperplane.
pub fn orbit_span_check(x: &[f64], perms: &[Vec<usize>], tol: f64) -> Result<usize, UnitTorusError> {
    let d = x.len();
    check_perms(d, perms)?;
    let sum: f64 = x.iter().sum();
    let scale: f64 = x.iter().map(|v| v.abs()).sum::<f64>().max(1.0);
    if sum.abs() > tol * scale {
        return Err(UnitTorusError::NotSumZero(sum));
    }
    let orbit = group(d, perms);
    let rows = DMatrix::from_fn(orbit.len(), d, |r, c| {
        let sigma = &orbit[r];
        let src = sigma.iter().position(|&i| i == c).expect("permutation");
        x[src]
    });
    let sv = rows.svd(false, false).singular_values;
    let top = sv.max();
    Ok(sv.iter().filter(|&&s| s > 0.0 && s > tol * top).count())
}

/// Integer row echelon form with positive pivots.
fn echelon(mut rows: Vec<Vec<BigInt>>, d: usize) -> Vec<Vec<BigInt>> {
    let mut r = 0;
    for c in 0..d {
        loop {
            let pivot = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).min_by_key(|&i| rows[i][c].abs());
            let Some(p) = pivot else { break };
            rows.swap(r, p);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i][c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &q * y;
                }
                done &= rows[i][c].is_zero();
            }
            if done {
                if rows[r][c].is_negative() {
                    rows[r].iter_mut().for_each(|v| *v = -v.clone());
                }
                r += 1;
                break;
            }
        }
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

fn in_lattice(basis: &[Vec<BigInt>], mut v: Vec<BigInt>) -> bool {
    for row in basis {
        let c = row.iter().position(|e| !e.is_zero()).expect("echelon rows are nonzero");
        let (q, rem) = v[c].div_rem(&row[c]);
        if !rem.is_zero() {
            return false;
        }
        for (vk, rk) in v.iter_mut().zip(row) {
            *vk -= &q * rk;
        }
    }
    v.iter().all(Zero::is_zero)
}

/// `true` iff the ℤ-span of `characters` is mapped into itself by every
/// permutation generator (coordinates permuted by `(σ·v)_{σ(i)} = v_i`).
pub fn galois_invariance_check(characters: &[Vec<i64>], perms: &[Vec<usize>]) -> Result<bool, UnitTorusError> {
    let Some(d) = characters.first().map(Vec::len) else {
        return Ok(true);
    };
    if characters.iter().any(|c| c.len() != d) {
        return Err(UnitTorusError::InvalidPermutation("characters have different lengths".into()));
    }
    check_perms(d, perms)?;
    let rows: Vec<Vec<BigInt>> = characters.iter().map(|c| c.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let basis = echelon(rows.clone(), d);
    Ok(perms.iter().all(|p| {
        rows.iter().all(|v| {
            let mut moved = vec![BigInt::zero(); d];
            for (i, x) in v.iter().enumerate() {
                moved[p[i]] = x.clone();
            }
            in_lattice(&basis, moved)
        })
    }))
}
