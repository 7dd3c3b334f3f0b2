use std::f64::consts::PI;

use serde::Serialize;

use super::RealMatrix;

/// Containment and disjointness slack, in radians.
const MARGIN: f64 = 1e-9;
const GRID: usize = 120;

/// Closed arc of the projective line in angle coordinates: directions
/// `(cos θ, sin θ)` for `θ ∈ [start, start + length]` mod π.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Arc {
    pub start: f64,
    pub length: f64,
}

fn modpi(x: f64) -> f64 {
    x.rem_euclid(PI)
}

impl Arc {
    fn centered(center: f64, radius: f64) -> Self {
        Arc { start: modpi(center - radius), length: 2.0 * radius }
    }

    fn complement(self) -> Self {
        Arc { start: modpi(self.start + self.length), length: PI - self.length }
    }

    fn contains(self, inner: Arc) -> bool {
        let offset = modpi(inner.start - self.start);
        offset >= MARGIN && offset + inner.length <= self.length - MARGIN
    }

    fn disjoint(self, other: Arc) -> bool {
        modpi(other.start - self.start) >= self.length + MARGIN && modpi(self.start - other.start) >= other.length + MARGIN
    }
}

fn act(g: &RealMatrix, theta: f64) -> f64 {
    let (x, y) = (theta.cos(), theta.sin());
    modpi((g[(1, 0)] * x + g[(1, 1)] * y).atan2(g[(0, 0)] * x + g[(0, 1)] * y))
}

/// A projective map sends arcs to arcs; orientation follows the sign of det.
fn image(g: &RealMatrix, arc: Arc) -> Arc {
    let (p, q) = (act(g, arc.start), act(g, arc.start + arc.length));
    if g.determinant() > 0.0 {
        Arc { start: p, length: modpi(q - p) }
    } else {
        Arc { start: q, length: modpi(p - q) }
    }
}

/// Attracting and repelling fixed points of a 2×2 matrix with real
/// eigenvalues of distinct moduli.
fn fixed_points(g: &RealMatrix) -> Option<(f64, f64)> {
    if g.shape() != (2, 2) {
        return None;
    }
    let (tr, det) = (g.trace(), g.determinant());
    let disc = tr * tr - 4.0 * det;
    if disc <= 0.0 || tr == 0.0 || det == 0.0 {
        return None;
    }
    let root = disc.sqrt();
    let big = (tr + tr.signum() * root) / 2.0;
    let small = det / big;
    let dir = |l: f64| {
        // eigenvector of [[a, b], [c, d]] for l: (b, l − a) or (l − d, c)
        let (a, b, c, d) = (g[(0, 0)], g[(0, 1)], g[(1, 0)], g[(1, 1)]);
        let (v1, v2) = if b.abs() + (l - a).abs() > c.abs() + (l - d).abs() { (b, l - a) } else { (l - d, c) };
        modpi(v2.atan2(v1))
    };
    Some((dir(big), dir(small)))
}

/// Four disjoint arcs `(A⁺, A⁻, B⁺, B⁻)` with
/// `a(complement A⁻) ⊂ A⁺`, `a⁻¹(complement A⁺) ⊂ A⁻` and likewise for b,
/// which makes ⟨a, b⟩ free of rank two.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PingPong {
    pub certified: bool,
    pub intervals: Option<[Arc; 4]>,
}

/// Searches arcs centered at the fixed points over a grid of radii. `false`
/// means no certificate was found, not that the group is not free.
pub fn ping_pong_certify(a: &RealMatrix, b: &RealMatrix) -> PingPong {
    let fail = PingPong { certified: false, intervals: None };
    let (Some((ap, am)), Some((bp, bm))) = (fixed_points(a), fixed_points(b)) else {
        return fail;
    };
    let (Some(ai), Some(bi)) = (a.clone().try_inverse(), b.clone().try_inverse()) else {
        return fail;
    };
    let mut centers = [ap, am, bp, bm];
    centers.sort_by(f64::total_cmp);
    let min_gap = (0..4).map(|i| modpi(centers[(i + 1) % 4] - centers[i])).fold(PI, f64::min);
    if min_gap <= 2.0 * MARGIN {
        return fail;
    }
    let radii: Vec<f64> = (1..GRID).map(|k| min_gap * k as f64 / GRID as f64).collect();
    for &ra in &radii {
        let (iap, iam) = (Arc::centered(ap, ra), Arc::centered(am, ra));
        if !(iap.disjoint(iam) && iap.contains(image(a, iam.complement())) && iam.contains(image(&ai, iap.complement()))) {
            continue;
        }
        for &rb in &radii {
            let (ibp, ibm) = (Arc::centered(bp, rb), Arc::centered(bm, rb));
            let arcs = [iap, iam, ibp, ibm];
            let disjoint = (0..4).all(|i| (i + 1..4).all(|j| arcs[i].disjoint(arcs[j])));
            if disjoint && ibp.contains(image(b, ibm.complement())) && ibm.contains(image(&bi, ibp.complement())) {
                return PingPong { certified: true, intervals: Some(arcs) };
            }
        }
    }
    fail
}
