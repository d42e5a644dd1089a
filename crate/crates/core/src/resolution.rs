//! Resolution of two-dimensional affine toric singularities.
//!
//! A plane cone is subdivided by the rays through the lattice points on the
//! compact boundary of `conv(σ ∩ Z² ∖ {0})` (Hirzebruch–Jung). Each piece is
//! regular, so its patch is a plane, and the resolution map is monomial on
//! every patch.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::affine::{torus_embedding, AffineToricVariety, MonomialMap};
use crate::cones::{det2, hilbert_basis, Cone};
use crate::error::{Error, Result};
use crate::lattice::{IntVector, Lattice};

/// A regular subdivision of a plane cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Refinement2D {
    pub original: Cone,
    /// All rays in order, from `original.rays()[0]` to `original.rays()[1]`.
    pub rays: Vec<IntVector>,
    /// The rays strictly inside the original cone, in the same order.
    pub inserted_rays: Vec<IntVector>,
    /// Cones spanned by consecutive rays.
    pub subcones: Vec<Cone>,
}

fn require_plane_cone(c: &Cone) -> Result<()> {
    if c.ambient_dim() != 2 || c.dim() != 2 {
        return Err(Error::InvalidInput(format!("{c} is not a two-dimensional cone in the plane")));
    }
    if !c.is_strongly_convex() {
        return Err(Error::NotStronglyConvex(c.to_string()));
    }
    Ok(())
}

/// Ceiling of `a / b` for `b > 0`.
fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// The Hirzebruch–Jung subdivision of a strongly convex plane cone.
pub fn refine_to_regular(c: &Cone) -> Result<Refinement2D> {
    require_plane_cone(c)?;
    let (first, last) = (c.rays()[0].clone(), c.rays()[1].clone());
    let flipped = det2(&first, &last).is_negative();
    let (start, end) = if flipped { (last.clone(), first.clone()) } else { (first.clone(), last.clone()) };

    // Walk counterclockwise. From a ray `u`, the lattice points `w` with
    // det(u, w) = 1 form the line `w0 + t·u`; the next ray is the point on it
    // that is closest to `end` while still inside the cone.
    let mut rays = vec![start.clone()];
    let mut u = start;
    while u != end {
        let eg = u[0].extended_gcd(&u[1]);
        let w0 = IntVector::new(vec![-eg.y, eg.x]);
        let slope = det2(&u, &end);
        let t = div_ceil(&-det2(&w0, &end), &slope);
        let next = &w0 + &u.scale(&t);
        rays.push(next.clone());
        u = next;
    }
    if flipped {
        rays.reverse();
    }
    let subcones = rays
        .windows(2)
        .map(|w| Cone::new(2, vec![w[0].clone(), w[1].clone()]))
        .collect::<Result<Vec<_>>>()?;
    Ok(Refinement2D {
        original: c.clone(),
        inserted_rays: rays[1..rays.len() - 1].to_vec(),
        rays,
        subcones,
    })
}

/// One chart of a resolution: a regular subcone and the map from its plane
/// coordinates `(X, Y)` into `U_σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Patch {
    pub subcone: Cone,
    pub map: MonomialMap,
}

/// Monomial resolution maps, one per regular subcone, plus the torus chart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionMap {
    pub patches: Vec<Patch>,
    /// `(x_1, x_2) ↦ (χ^{u_1}, …, χ^{u_t})` on the dense torus.
    pub torus_chart: MonomialMap,
}

/// Patch maps for a refinement whose rays are given in the coordinates of `l`.
///
/// For a subcone spanned by consecutive rays `r_a, r_b` with dual basis
/// `w_a, w_b`, the chart coordinates are `X = χ^{w_b}` and `Y = χ^{w_a}`, so
/// a generator `u` of `S_σ` becomes `X^{⟨u, r_b⟩} Y^{⟨u, r_a⟩}`.
pub fn resolution_map(r: &Refinement2D, l: &Lattice) -> Result<ResolutionMap> {
    if l.rank() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: l.rank(),
        });
    }
    let plane = Lattice::standard(2);
    let gens = hilbert_basis(&r.original, &plane)?;
    let mut patches = Vec::with_capacity(r.subcones.len());
    for pair in r.rays.windows(2) {
        let (ra, rb) = (&pair[0], &pair[1]);
        if !det2(ra, rb).abs().is_one() {
            return Err(Error::Inconsistent(format!("subcone [{ra},{rb}] is not regular")));
        }
        let exponents = gens
            .gens
            .iter()
            .map(|u| {
                let e = IntVector::new(vec![u.dot(rb), u.dot(ra)]);
                if e.iter().any(Signed::is_negative) {
                    return Err(Error::Inconsistent(format!("{u} has a negative exponent on [{ra},{rb}]")));
                }
                Ok(e)
            })
            .collect::<Result<Vec<_>>>()?;
        patches.push(Patch {
            subcone: Cone::new(2, vec![ra.clone(), rb.clone()])?,
            map: MonomialMap::new(2, exponents)?,
        });
    }
    Ok(ResolutionMap {
        patches,
        torus_chart: torus_embedding(&r.original, &plane)?,
    })
}

/// `U_σ` with its resolution.
pub fn desing_affine_toric_variety(c: &Cone, l: &Lattice) -> Result<(AffineToricVariety, ResolutionMap)> {
    let local = c.in_lattice_coordinates(l)?;
    let plane = Lattice::standard(2);
    let refinement = refine_to_regular(&local)?;
    let map = resolution_map(&refinement, &plane)?;
    let variety = AffineToricVariety::new(&local, &plane)?;
    for p in &map.patches {
        if !p.map.satisfies_ideal(&variety.ideal)? {
            return Err(Error::Inconsistent(format!("patch {} does not map into U_σ", p.subcone)));
        }
    }
    Ok((variety, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(g: &[&[i64]]) -> Cone {
        Cone::from_i64(g).unwrap()
    }

    fn v(x: &[i64]) -> IntVector {
        IntVector::from(x)
    }

    #[test]
    fn worked_refinements() {
        let r = refine_to_regular(&cone(&[&[0, 1], &[3, -2]])).unwrap();
        assert_eq!(r.inserted_rays, [v(&[1, 0]), v(&[2, -1])]);
        assert_eq!(
            r.subcones,
            [cone(&[&[0, 1], &[1, 0]]), cone(&[&[1, 0], &[2, -1]]), cone(&[&[2, -1], &[3, -2]])]
        );
        let r = refine_to_regular(&cone(&[&[1, 0], &[3, 2]])).unwrap();
        assert_eq!(r.inserted_rays, [v(&[2, 1])]);
        assert!(refine_to_regular(&cone(&[&[1, 0], &[1, 1]])).unwrap().inserted_rays.is_empty());
        assert!(refine_to_regular(&cone(&[&[1, 0]])).is_err());
    }

    #[test]
    fn chart_of_the_quadric_cone() {
        let r = refine_to_regular(&cone(&[&[1, 0], &[3, 2]])).unwrap();
        let m = resolution_map(&r, &Lattice::standard(2)).unwrap();
        assert_eq!(m.patches[0].subcone, cone(&[&[1, 0], &[2, 1]]));
        assert_eq!(m.patches[0].map.format_coordinates("X"), ["X1", "X1*X2", "X1*X2^2"]);
    }

    #[test]
    fn desing_session_chart() {
        let (v, m) = desing_affine_toric_variety(&cone(&[&[1, 0], &[3, 4]]), &Lattice::standard(2)).unwrap();
        assert_eq!(m.torus_chart.format_coordinates("x"), ["x2", "x1", "x1^2/x2", "x1^3/x2^2", "x1^4/x2^3"]);
        assert_eq!(v.semigroup.len(), 5);
        for p in &m.patches {
            assert!(p.map.satisfies_ideal(&v.ideal).unwrap());
        }
        let (_, trivial) = desing_affine_toric_variety(&cone(&[&[1, 0], &[0, 1]]), &Lattice::standard(2)).unwrap();
        assert_eq!(trivial.patches.len(), 1);
        assert_eq!(trivial.patches[0].map.format_coordinates("x"), ["x1", "x2"]);
    }
}
