//! Fixtures and independent oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use toric::{Cone, Fan, IntVector, LatticePolytope, RationalVector};

pub fn v(x: &[i64]) -> IntVector {
    IntVector::from(x)
}

pub fn cone(g: &[&[i64]]) -> Cone {
    Cone::from_i64(g).unwrap()
}

pub fn fan(cones: &[&[&[i64]]]) -> Fan {
    let n = cones[0][0].len();
    Fan::new(n, cones.iter().map(|c| c.iter().map(|g| v(g)).collect()).collect()).unwrap()
}

pub fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn point(xs: &[(i64, i64)]) -> RationalVector {
    RationalVector::new(xs.iter().map(|&(n, d)| rational(n, d)).collect())
}

pub fn polygon(vertices: &[(i64, i64)]) -> LatticePolytope {
    LatticePolytope::from_vertices(2, vertices.iter().map(|&(a, b)| point(&[(a, 1), (b, 1)])).collect()).unwrap()
}

pub fn p2() -> Fan {
    fan(&[&[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, -1]], &[&[-1, -1], &[1, 0]]])
}

pub fn p1xp1() -> Fan {
    fan(&[&[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, 0]], &[&[-1, 0], &[0, -1]], &[&[0, -1], &[1, 0]]])
}

/// The weighted projective plane from the worked divisor example.
pub fn ex73() -> Fan {
    fan(&[&[&[2, -1], &[-1, 2]], &[&[-1, 2], &[-1, -1]], &[&[-1, -1], &[2, -1]]])
}

pub const EX73_RAYS: [[i64; 2]; 3] = [[2, -1], [-1, 2], [-1, -1]];

/// Hirzebruch surface `F_a`.
pub fn hirzebruch(a: i64) -> Fan {
    fan(&[
        &[&[1, 0], &[0, 1]],
        &[&[0, 1], &[-1, a]],
        &[&[-1, a], &[0, -1]],
        &[&[0, -1], &[1, 0]],
    ])
}

/// `P¹×P¹` blown up at its four fixed points.
pub fn octagon() -> Fan {
    fan(&[
        &[&[1, 0], &[1, 1]],
        &[&[1, 1], &[0, 1]],
        &[&[0, 1], &[-1, 1]],
        &[&[-1, 1], &[-1, 0]],
        &[&[-1, 0], &[-1, -1]],
        &[&[-1, -1], &[0, -1]],
        &[&[0, -1], &[1, -1]],
        &[&[1, -1], &[1, 0]],
    ])
}

/// `P²` blown up at one and at three fixed points.
pub fn blowups_of_p2() -> Vec<Fan> {
    vec![
        fan(&[&[&[1, 0], &[1, 1]], &[&[1, 1], &[0, 1]], &[&[0, 1], &[-1, -1]], &[&[-1, -1], &[1, 0]]]),
        fan(&[
            &[&[1, 0], &[1, 1]],
            &[&[1, 1], &[0, 1]],
            &[&[0, 1], &[-1, 0]],
            &[&[-1, 0], &[-1, -1]],
            &[&[-1, -1], &[0, -1]],
            &[&[0, -1], &[1, 0]],
        ]),
    ]
}

/// Smooth complete plane fans.
pub fn smooth_complete_2d() -> Vec<Fan> {
    let mut out = vec![p2(), p1xp1(), octagon()];
    out.extend((1..=3).map(hirzebruch));
    out.extend(blowups_of_p2());
    out
}

/// Every plane fan in the corpus, singular ones included.
pub fn fans_2d() -> Vec<Fan> {
    let mut out = smooth_complete_2d();
    out.push(ex73());
    out.push(fan(&[&[&[1, 0], &[1, 2]], &[&[1, 2], &[-1, 0]], &[&[-1, 0], &[1, -3]], &[&[1, -3], &[1, 0]]]));
    out
}

/// Lattice polygons for the normal-fan round trips.
pub fn polygons() -> Vec<LatticePolytope> {
    vec![
        polygon(&[(0, 0), (1, 0), (0, 1)]),
        polygon(&[(0, 0), (1, 0), (0, 1), (1, 1)]),
        polygon(&[(0, 0), (3, 0), (0, 3)]),
        polygon(&[(0, 0), (2, 0), (0, 1)]),
        polygon(&[(1, 0), (0, 1), (-1, 0), (0, -1)]),
        polygon(&[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]),
        polygon(&[(0, 0), (3, 0), (1, 2), (0, 2)]),
        polygon(&[(-6, -6), (-2, 2), (2, -2)]),
        polygon(&[(0, 0), (4, 1), (1, 3)]),
        polygon(&[(0, 0), (2, 0), (3, 1), (3, 3), (1, 2)]),
    ]
}

/// Primitive vector perpendicular to `r`, turned to pair nonnegatively
/// with `other`.
fn inward_normal(r: &[i64; 2], other: &[i64; 2]) -> [i64; 2] {
    let mut n = [-r[1], r[0]];
    if n[0] * other[0] + n[1] * other[1] < 0 {
        n = [-n[0], -n[1]];
    }
    let g = gcd(n[0], n[1]);
    [n[0] / g, n[1] / g]
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rays of the dual of the full-dimensional plane cone spanned by `a, b`.
pub fn dual_rays(a: [i64; 2], b: [i64; 2]) -> ([i64; 2], [i64; 2]) {
    (inward_normal(&a, &b), inward_normal(&b, &a))
}

/// Minimal generators of the semigroup of lattice points in the pointed
/// plane cone spanned by `a, b` (`det(a, b) ≠ 0`), by brute force: nonzero
/// points that are not the sum of two nonzero points. Every minimal
/// generator lies in the parallelogram spanned by the primitive rays, and
/// any splitting of such a point stays inside that parallelogram's box.
pub fn brute_force_hilbert_basis(a: [i64; 2], b: [i64; 2]) -> BTreeSet<[i64; 2]> {
    let prim = |r: [i64; 2]| {
        let g = gcd(r[0], r[1]);
        [r[0] / g, r[1] / g]
    };
    let (a, b) = (prim(a), prim(b));
    let (na, nb) = dual_rays(a, b);
    let inside = |p: [i64; 2]| p[0] * na[0] + p[1] * na[1] >= 0 && p[0] * nb[0] + p[1] * nb[1] >= 0;
    let m = a[0].abs().max(a[1].abs()) + b[0].abs().max(b[1].abs());
    let mut points = Vec::new();
    for x in -m..=m {
        for y in -m..=m {
            if (x, y) != (0, 0) && inside([x, y]) {
                points.push([x, y]);
            }
        }
    }
    let set: HashSet<[i64; 2]> = points.iter().copied().collect();
    // Coordinates in the real basis (a, b), scaled by det.
    let det = a[0] * b[1] - a[1] * b[0];
    let in_parallelogram = |p: [i64; 2]| {
        let s = (p[0] * b[1] - p[1] * b[0]) * det.signum();
        let t = (a[0] * p[1] - a[1] * p[0]) * det.signum();
        s <= det.abs() && t <= det.abs()
    };
    points
        .iter()
        .copied()
        .filter(|&p| in_parallelogram(p))
        .filter(|&p| !points.iter().any(|&q| q != p && set.contains(&[p[0] - q[0], p[1] - q[1]])))
        .collect()
}

pub fn as_pairs(vs: &[IntVector]) -> BTreeSet<[i64; 2]> {
    vs.iter()
        .map(|g| {
            let e = g.to_i64s().unwrap();
            [e[0], e[1]]
        })
        .collect()
}

/// Deterministic pseudo-random full-dimensional plane cones with entries in
/// `[-bound, bound]`.
pub fn random_plane_cones(count: usize, bound: i64, seed: u64) -> Vec<([i64; 2], [i64; 2])> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a = [rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound)];
        let b = [rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound)];
        if a[0] * b[1] - a[1] * b[0] != 0 {
            out.push((a, b));
        }
    }
    out
}

/// Number of points of `P²` over `F_q`.
pub fn projective_plane_points(q: u64) -> u64 {
    q * q + q + 1
}
