//! Polytopes, support functions and T-invariant divisors.
//!
//! Conventions: a halfspace `(a, c)` is `{x : ⟨x, a⟩ ≥ −c}`. The normal fan
//! of a polytope `P` has one cone per vertex `v`, namely the directions `n`
//! for which `⟨·, n⟩` attains its minimum over `P` at `v`; its support
//! function is `h_P(n) = −min_{m∈P} ⟨m, n⟩`. With these conventions
//! `P(Δ, h_P) = P`, and the vertex of `P(Δ, h)` belonging to a maximal cone
//! `σ` is `−h_σ`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cones::{check_dim, Cone};
use crate::error::{Error, Result};
use crate::fans::Fan;
use crate::lattice::{primitive, solve_integer, solve_rational, IntMatrix, IntVector, RationalVector};
use crate::monomial::format_laurent;

/// Largest bounding box scanned by [`LatticePolytope::lattice_points`].
pub const LATTICE_POINT_LIMIT: u128 = 10_000_000;

/// The halfspace `{x : ⟨x, normal⟩ ≥ −offset}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: IntVector,
    pub offset: BigInt,
}

impl Halfspace {
    pub fn new(normal: IntVector, offset: BigInt) -> Self {
        Halfspace { normal, offset }
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        x.dot_int(&self.normal) + BigRational::from_integer(self.offset.clone()) >= BigRational::zero()
    }
}

/// A bounded polyhedron with rational vertices, possibly empty.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    dim: usize,
    inequalities: Vec<Halfspace>,
    vertices: Vec<RationalVector>,
}

/// Equal as point sets.
impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

fn rat(a: &BigInt) -> BigRational {
    BigRational::from_integer(a.clone())
}

impl LatticePolytope {
    /// The polytope cut out by `inequalities`; errors when unbounded.
    pub fn from_inequalities(dim: usize, inequalities: Vec<Halfspace>) -> Result<Self> {
        check_dim(dim + 1)?;
        for h in &inequalities {
            h.normal.check_dim(dim)?;
        }
        // Homogenize: (t, x) with t ≥ 0 and ⟨x, a⟩ + c·t ≥ 0.
        let mut lifted = vec![IntVector::unit(dim + 1, 0)];
        for h in &inequalities {
            let mut row = vec![h.offset.clone()];
            row.extend(h.normal.iter().cloned());
            lifted.push(IntVector::new(row));
        }
        let cone = Cone::from_constraints(dim + 1, &[], &lifted)?;
        if !cone.lineality().is_empty() || cone.rays().iter().any(|r| r[0].is_zero()) {
            return Err(Error::InvalidInput("the inequalities define an unbounded polyhedron".into()));
        }
        let mut vertices: Vec<RationalVector> = cone
            .rays()
            .iter()
            .map(|r| RationalVector::new(r.iter().skip(1).map(|x| BigRational::new(x.clone(), r[0].clone())).collect()))
            .collect();
        vertices.sort();
        Ok(LatticePolytope {
            dim,
            inequalities,
            vertices,
        })
    }

    /// The convex hull of `vertices`.
    pub fn from_vertices(dim: usize, vertices: Vec<RationalVector>) -> Result<Self> {
        check_dim(dim + 1)?;
        if vertices.is_empty() {
            return Err(Error::InvalidInput("a polytope needs at least one vertex".into()));
        }
        let lifted = vertices
            .iter()
            .map(|v| {
                if v.dim() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: v.dim(),
                    });
                }
                let mut row = vec![BigRational::from_integer(1.into())];
                row.extend(v.entries().iter().cloned());
                Ok(RationalVector::new(row).clear_denominators())
            })
            .collect::<Result<Vec<_>>>()?;
        let cone = Cone::new(dim + 1, lifted)?;
        let split = |a: &IntVector| Halfspace::new(IntVector::new(a.iter().skip(1).cloned().collect()), a[0].clone());
        let mut inequalities: Vec<Halfspace> = cone.facet_normals().iter().map(split).collect();
        for e in &cone.halfspaces().equations {
            inequalities.push(split(e));
            inequalities.push(split(&-e));
        }
        Self::from_inequalities(dim, inequalities)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Halfspace] {
        &self.inequalities
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Irredundant inequalities, normalized: facets with primitive normals,
    /// plus `±` pairs for the affine hull, sorted.
    pub fn canonical_inequalities(&self) -> Result<Vec<Halfspace>> {
        if self.is_empty() {
            return Ok(Vec::new());
        }
        let mut h = Self::from_vertices(self.dim, self.vertices.clone())?.inequalities;
        h.sort();
        Ok(h)
    }

    /// Dimension of the affine hull (`None` when empty).
    pub fn affine_dim(&self) -> Option<usize> {
        let first = self.vertices.first()?;
        let diffs: Vec<IntVector> = self.vertices[1..]
            .iter()
            .map(|v| {
                RationalVector::new(v.entries().iter().zip(first.entries()).map(|(a, b)| a - b).collect())
                    .clear_denominators()
            })
            .collect();
        Some(IntMatrix::new(diffs, self.dim).map(|m| m.rank()).unwrap_or(0))
    }

    pub fn contains(&self, x: &IntVector) -> bool {
        let x = x.to_rational();
        self.inequalities.iter().all(|h| h.contains(&x))
    }

    /// Integer points in lexicographic order.
    pub fn lattice_points(&self) -> Result<Vec<IntVector>> {
        if self.is_empty() {
            return Ok(Vec::new());
        }
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let coords = self.vertices.iter().map(|v| &v.entries()[i]);
            let min = coords.clone().min().expect("nonempty").ceil().to_integer();
            let max = coords.max().expect("nonempty").floor().to_integer();
            let (Some(min), Some(max)) = (min.to_i64(), max.to_i64()) else {
                return Err(Error::Overflow("polytope bounding box".into()));
            };
            lo.push(min);
            hi.push(max);
        }
        let size = lo
            .iter()
            .zip(&hi)
            .fold(1u128, |acc, (a, b)| acc.saturating_mul((b - a + 1).max(0) as u128));
        if size > LATTICE_POINT_LIMIT {
            return Err(Error::budget("lattice point", size, LATTICE_POINT_LIMIT));
        }
        let mut out = Vec::new();
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Ok(out);
        }
        let mut p = lo.clone();
        loop {
            let v = IntVector::from(p.clone());
            if self.contains(&v) {
                out.push(v);
            }
            let mut k = self.dim;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                if p[k] < hi[k] {
                    p[k] += 1;
                    break;
                }
                p[k] = lo[k];
            }
        }
    }

    /// Area of a plane polytope (zero when degenerate).
    pub fn area(&self) -> Result<BigRational> {
        if self.dim != 2 {
            return Err(Error::InvalidInput("area needs a polygon in the plane".into()));
        }
        if self.affine_dim() != Some(2) {
            return Ok(BigRational::zero());
        }
        let n = self.vertices.len();
        let cx: BigRational = self.vertices.iter().map(|v| v.entries()[0].clone()).sum::<BigRational>()
            / BigRational::from_integer(n.into());
        let cy: BigRational = self.vertices.iter().map(|v| v.entries()[1].clone()).sum::<BigRational>()
            / BigRational::from_integer(n.into());
        let mut around: Vec<(BigRational, BigRational)> = self
            .vertices
            .iter()
            .map(|v| (&v.entries()[0] - &cx, &v.entries()[1] - &cy))
            .collect();
        around.sort_by(|a, b| angular_cmp(a, b));
        let twice: BigRational = (0..n)
            .map(|i| {
                let (a, b) = (&around[i], &around[(i + 1) % n]);
                &a.0 * &b.1 - &a.1 * &b.0
            })
            .sum();
        Ok(twice / BigRational::from_integer(2.into()))
    }
}

fn half<T: Signed + Zero>(x: &T, y: &T) -> u8 {
    if y.is_positive() || (y.is_zero() && x.is_positive()) {
        0
    } else {
        1
    }
}

/// Counterclockwise order starting from the positive x-axis.
fn angular_cmp<T: Signed + Zero + Clone + Ord>(a: &(T, T), b: &(T, T)) -> Ordering {
    half(&a.0, &a.1).cmp(&half(&b.0, &b.1)).then_with(|| {
        let cross = a.0.clone() * b.1.clone() - a.1.clone() * b.0.clone();
        T::zero().cmp(&cross)
    })
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PolytopeJson {
    Inequalities { inequalities: Vec<(IntVector, IntegerJson)> },
    Vertices { vertices: Vec<RationalVector> },
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct IntegerJson(#[serde(with = "crate::lattice::big")] BigInt);

impl Serialize for LatticePolytope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeJson::Inequalities {
            inequalities: self
                .inequalities
                .iter()
                .map(|h| (h.normal.clone(), IntegerJson(h.offset.clone())))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePolytope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match PolytopeJson::deserialize(d)? {
            PolytopeJson::Inequalities { inequalities } => {
                let dim = inequalities
                    .first()
                    .map(|(a, _)| a.dim())
                    .ok_or_else(|| D::Error::custom("no inequalities given"))?;
                let hs = inequalities.into_iter().map(|(a, c)| Halfspace::new(a, c.0)).collect();
                LatticePolytope::from_inequalities(dim, hs)
            }
            PolytopeJson::Vertices { vertices } => {
                let dim = vertices.first().map(RationalVector::dim).unwrap_or(0);
                LatticePolytope::from_vertices(dim, vertices)
            }
        }
        .map_err(D::Error::custom)
    }
}

fn full_dimensional(p: &LatticePolytope) -> Result<()> {
    if p.affine_dim() != Some(p.dim) {
        return Err(Error::InvalidInput("the polytope is not full-dimensional".into()));
    }
    Ok(())
}

/// The normal fan `Δ(P)`.
pub fn fan_from_polytope(p: &LatticePolytope) -> Result<Fan> {
    full_dimensional(p)?;
    let n = p.dim;
    let cones = p
        .vertices
        .iter()
        .map(|v| {
            let edges: Vec<IntVector> = p
                .vertices
                .iter()
                .filter(|w| *w != v)
                .map(|w| {
                    RationalVector::new(w.entries().iter().zip(v.entries()).map(|(a, b)| a - b).collect())
                        .clear_denominators()
                })
                .collect();
            Cone::from_constraints(n, &[], &edges)
        })
        .collect::<Result<Vec<_>>>()?;
    Fan::from_cones(n, cones)
}

/// An integer-valued function on the rays of a fan, extended linearly on
/// each cone. Values are aligned with `fan.rays()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFunction {
    pub fan: Fan,
    pub values: Vec<BigInt>,
}

impl SupportFunction {
    pub fn new(fan: Fan, values: Vec<BigInt>) -> Result<Self> {
        if values.len() != fan.rays().len() {
            return Err(Error::DimensionMismatch {
                expected: fan.rays().len(),
                got: values.len(),
            });
        }
        Ok(SupportFunction { fan, values })
    }

    pub fn value(&self, ray: &IntVector) -> Option<&BigInt> {
        self.fan.rays().iter().position(|r| r == ray).map(|i| &self.values[i])
    }

    /// The linear form `h_σ` with `⟨r, h_σ⟩ = h(r)` on the rays of `sigma`,
    /// or `None` when `h` is not linear on `sigma`.
    pub fn linear_form(&self, sigma: &Cone) -> Option<RationalVector> {
        let rows: Vec<Vec<BigRational>> = sigma.rays().iter().map(|r| r.iter().map(rat).collect()).collect();
        let rhs: Vec<BigRational> = sigma.rays().iter().map(|r| rat(self.value(r).expect("ray of the fan"))).collect();
        solve_rational(&rows, &rhs, self.fan.ambient_dim()).map(RationalVector::new)
    }

    fn linear_forms(&self) -> Result<Vec<RationalVector>> {
        self.fan
            .maximal_cones()
            .iter()
            .map(|c| {
                self.linear_form(c)
                    .ok_or_else(|| Error::InvalidInput(format!("the support function is not linear on {c}")))
            })
            .collect()
    }
}

/// `h_P(r) = −min_{m∈P} ⟨m, r⟩` on the rays of `f`.
pub fn support_from_polytope(p: &LatticePolytope, f: &Fan) -> Result<SupportFunction> {
    if p.is_empty() {
        return Err(Error::InvalidInput("support function of an empty polytope".into()));
    }
    let values = f
        .rays()
        .iter()
        .map(|r| {
            let min = p.vertices.iter().map(|v| v.dot_int(r)).min().expect("nonempty");
            if min.is_integer() {
                Ok(-min.to_integer())
            } else {
                Err(Error::InvalidInput(format!("the support value at {r} is not an integer")))
            }
        })
        .collect::<Result<_>>()?;
    SupportFunction::new(f.clone(), values)
}

/// `P(Δ, h) = {m : ⟨m, r⟩ ≥ −h(r) for every ray r}`.
pub fn polytope_from_support(f: &Fan, h: &SupportFunction) -> Result<LatticePolytope> {
    h.linear_forms()?;
    let inequalities = f
        .rays()
        .iter()
        .map(|r| {
            let value = h
                .value(r)
                .ok_or_else(|| Error::InvalidInput(format!("no support value at ray {r}")))?;
            Ok(Halfspace::new(r.clone(), value.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    LatticePolytope::from_inequalities(f.ambient_dim(), inequalities)
}

/// Every `h_σ` lies strictly below `h` at the rays outside `σ`, and the
/// `h_σ` are pairwise distinct.
pub fn is_strictly_upper_convex(h: &SupportFunction) -> Result<bool> {
    let forms = h.linear_forms()?;
    if forms.iter().collect::<BTreeSet<_>>().len() != forms.len() {
        return Ok(false);
    }
    for (sigma, form) in h.fan.maximal_cones().iter().zip(&forms) {
        for (r, value) in h.fan.rays().iter().zip(&h.values) {
            if !sigma.rays().contains(r) && form.dot_int(r) >= rat(value) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A T-invariant divisor `Σ d_i D_i`; coefficients follow `fan.rays()`.
///
/// The prime divisors `D_i` are the orbit closures of the rays; only their
/// coefficients are stored.
#[derive(Clone, Debug)]
pub struct TDivisor {
    pub fan: Fan,
    pub coefficients: Vec<BigInt>,
}

/// Same fan and same coefficient at every ray, whatever the ray order.
impl PartialEq for TDivisor {
    fn eq(&self, other: &Self) -> bool {
        self.fan == other.fan
            && self
                .rays()
                .iter()
                .zip(&self.coefficients)
                .all(|(r, c)| other.coefficient(r) == Some(c))
    }
}

impl Eq for TDivisor {}

impl TDivisor {
    pub fn new(fan: Fan, coefficients: Vec<BigInt>) -> Result<Self> {
        if coefficients.len() != fan.rays().len() {
            return Err(Error::DimensionMismatch {
                expected: fan.rays().len(),
                got: coefficients.len(),
            });
        }
        Ok(TDivisor { fan, coefficients })
    }

    /// Coefficients given per ray, in any order. Without explicit cones the
    /// rays must lie in the plane, and the complete fan they cut out is used.
    pub fn from_rays(rays: &[IntVector], coefficients: &[BigInt], maximal_cones: Option<Vec<Vec<IntVector>>>) -> Result<Self> {
        if rays.len() != coefficients.len() {
            return Err(Error::DimensionMismatch {
                expected: rays.len(),
                got: coefficients.len(),
            });
        }
        let rays: Vec<IntVector> = rays.iter().map(primitive).collect::<Result<_>>()?;
        let dim = rays
            .first()
            .map(IntVector::dim)
            .ok_or_else(|| Error::InvalidInput("a divisor needs at least one ray".into()))?;
        let fan = match maximal_cones {
            Some(cones) => Fan::new(dim, cones)?,
            None => complete_plane_fan(&rays)?,
        };
        let mut ordered = Vec::with_capacity(rays.len());
        for r in fan.rays() {
            let i = rays
                .iter()
                .position(|x| x == r)
                .ok_or_else(|| Error::InvalidInput(format!("no coefficient given for ray {r}")))?;
            ordered.push(coefficients[i].clone());
        }
        if fan.rays().len() != rays.len() {
            return Err(Error::InvalidInput("the rays do not match the rays of the fan".into()));
        }
        Self::new(fan, ordered)
    }

    pub fn rays(&self) -> &[IntVector] {
        self.fan.rays()
    }

    pub fn coefficient(&self, ray: &IntVector) -> Option<&BigInt> {
        self.rays().iter().position(|r| r == ray).map(|i| &self.coefficients[i])
    }
}

/// The fan of consecutive ray pairs in counterclockwise order.
fn complete_plane_fan(rays: &[IntVector]) -> Result<Fan> {
    if rays.iter().any(|r| r.dim() != 2) || rays.len() < 3 {
        return Err(Error::InvalidInput(
            "without maximal_cones the divisor needs at least three rays in the plane".into(),
        ));
    }
    let mut sorted = rays.to_vec();
    sorted.sort_by(|a, b| angular_cmp(&(a[0].clone(), a[1].clone()), &(b[0].clone(), b[1].clone())));
    // Keep the caller's order for the first ray so coefficient alignment is stable.
    let start = sorted.iter().position(|r| r == &rays[0]).expect("present");
    sorted.rotate_left(start);
    let k = sorted.len();
    let cones = (0..k).map(|i| vec![sorted[i].clone(), sorted[(i + 1) % k].clone()]).collect();
    let fan = Fan::new(2, cones)?;
    if !fan.is_complete()? {
        return Err(Error::InvalidInput("the rays do not cut the plane into strongly convex cones".into()));
    }
    Ok(fan)
}

#[derive(Serialize, Deserialize)]
struct DivisorJson {
    rays: Vec<IntVector>,
    #[serde(with = "big_list")]
    coefficients: Vec<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    maximal_cones: Option<Vec<Vec<IntVector>>>,
}

mod big_list {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::lattice::big::Wrapped;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|x| Wrapped(x.clone())).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(Vec::<Wrapped>::deserialize(d)?.into_iter().map(|w| w.0).collect())
    }
}

impl Serialize for TDivisor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DivisorJson {
            rays: self.fan.rays().to_vec(),
            coefficients: self.coefficients.clone(),
            maximal_cones: Some(self.fan.maximal_cones().iter().map(|c| c.generators().to_vec()).collect()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TDivisor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = DivisorJson::deserialize(d)?;
        TDivisor::from_rays(&raw.rays, &raw.coefficients, raw.maximal_cones).map_err(D::Error::custom)
    }
}

/// `P_D = {x : ⟨x, v_i⟩ ≥ −d_i}`.
pub fn divisor_polytope(d: &TDivisor) -> Result<LatticePolytope> {
    let hs = d
        .rays()
        .iter()
        .zip(&d.coefficients)
        .map(|(r, c)| Halfspace::new(r.clone(), c.clone()))
        .collect();
    LatticePolytope::from_inequalities(d.fan.ambient_dim(), hs)
}

/// Exponents of the monomial basis of `L(D)`, lexicographically ordered.
pub fn riemann_roch(d: &TDivisor) -> Result<Vec<IntVector>> {
    divisor_polytope(d)?.lattice_points()
}

/// The basis of `L(D)` printed as Laurent monomials in `x1, x2, …`.
pub fn riemann_roch_monomials(d: &TDivisor) -> Result<Vec<String>> {
    Ok(riemann_roch(d)?.iter().map(|u| format_laurent(u.entries(), "x")).collect())
}

/// Local principality: on each maximal cone some integral `u` satisfies
/// `⟨v_i, u⟩ = −d_i` for all of its rays.
pub fn is_cartier(d: &TDivisor) -> Result<bool> {
    let n = d.fan.ambient_dim();
    for sigma in d.fan.maximal_cones() {
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (r, c) in d.rays().iter().zip(&d.coefficients) {
            if sigma.rays().contains(r) {
                rows.push(r.clone());
                rhs.push(-c);
            }
        }
        if solve_integer(&IntMatrix::new(rows, n)?, &IntVector::new(rhs)).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn divisor_from_support(h: &SupportFunction) -> TDivisor {
    TDivisor {
        fan: h.fan.clone(),
        coefficients: h.values.clone(),
    }
}

pub fn support_from_divisor(d: &TDivisor) -> SupportFunction {
    SupportFunction {
        fan: d.fan.clone(),
        values: d.coefficients.clone(),
    }
}

/// Greatest common divisor of all coefficients; zero for the zero divisor.
pub fn divisor_content(d: &TDivisor) -> BigInt {
    d.coefficients.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> IntVector {
        IntVector::from(x)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn qv(xs: &[(i64, i64)]) -> RationalVector {
        RationalVector::new(xs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    fn ex73(coeffs: [i64; 3]) -> TDivisor {
        TDivisor::from_rays(
            &[v(&[2, -1]), v(&[-1, 2]), v(&[-1, -1])],
            &coeffs.map(BigInt::from),
            None,
        )
        .unwrap()
    }

    fn square() -> LatticePolytope {
        LatticePolytope::from_vertices(2, [(0, 0), (1, 0), (0, 1), (1, 1)].iter().map(|&(a, b)| qv(&[(a, 1), (b, 1)])).collect())
            .unwrap()
    }

    #[test]
    fn representations_agree() {
        let s = square();
        assert_eq!(s.inequalities().len(), 4);
        assert_eq!(s.lattice_points().unwrap().len(), 4);
        let back = LatticePolytope::from_inequalities(2, s.inequalities().to_vec()).unwrap();
        assert_eq!(back, s);
        let unbounded = LatticePolytope::from_inequalities(2, vec![Halfspace::new(v(&[1, 0]), 0.into())]);
        assert!(unbounded.is_err());
        let empty = LatticePolytope::from_inequalities(
            1,
            vec![Halfspace::new(v(&[1]), (-1).into()), Halfspace::new(v(&[-1]), 0.into())],
        )
        .unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn divisor_triangles() {
        let d = ex73([6, 6, 0]);
        let p = divisor_polytope(&d).unwrap();
        assert_eq!(p.vertices(), [qv(&[(-6, 1), (-6, 1)]), qv(&[(-2, 1), (2, 1)]), qv(&[(2, 1), (-2, 1)])]);
        assert_eq!(p.lattice_points().unwrap().len(), 31);
        let mons = riemann_roch_monomials(&d).unwrap();
        assert_eq!(mons.first().unwrap(), "1/(x1^6*x2^6)");
        assert_eq!(mons.last().unwrap(), "x1^2/x2^2");

        let g = divisor_polytope(&ex73([0, 0, 10])).unwrap();
        assert_eq!(g.vertices(), [qv(&[(0, 1), (0, 1)]), qv(&[(10, 3), (20, 3)]), qv(&[(20, 3), (10, 3)])]);
        assert_eq!(g.area().unwrap(), q(50, 3));
        assert_eq!(g.lattice_points().unwrap().len(), 22);
        assert_eq!(riemann_roch_monomials(&ex73([0, 0, 0])).unwrap(), ["1"]);
    }

    #[test]
    fn cartier() {
        assert!(is_cartier(&ex73([6, 6, 0])).unwrap());
        assert!(!is_cartier(&ex73([1, 0, 0])).unwrap());
        let p1xp1 = TDivisor::from_rays(
            &[v(&[1, 0]), v(&[0, 1]), v(&[-1, 0]), v(&[0, -1])],
            &[1, 2, 3, 5].map(BigInt::from),
            None,
        )
        .unwrap();
        assert!(is_cartier(&p1xp1).unwrap());
    }

    #[test]
    fn normal_fans_and_supports() {
        let s = square();
        let f = fan_from_polytope(&s).unwrap();
        assert_eq!(f.rays().len(), 4);
        assert!(f.is_complete().unwrap());
        let h = support_from_polytope(&s, &f).unwrap();
        assert_eq!(h.value(&v(&[1, 0])), Some(&BigInt::from(0)));
        assert_eq!(h.value(&v(&[-1, 0])), Some(&BigInt::from(1)));
        assert!(is_strictly_upper_convex(&h).unwrap());
        assert_eq!(polytope_from_support(&f, &h).unwrap(), s);
        let d = divisor_from_support(&h);
        assert_eq!(divisor_polytope(&d).unwrap(), s);

        let ones = SupportFunction::new(f.clone(), vec![BigInt::from(1); 4]).unwrap();
        let big = polytope_from_support(&f, &ones).unwrap();
        assert_eq!(big.lattice_points().unwrap().len(), 9);
        let zero = SupportFunction::new(f.clone(), vec![BigInt::zero(); 4]).unwrap();
        assert!(!is_strictly_upper_convex(&zero).unwrap());
        assert_eq!(polytope_from_support(&f, &zero).unwrap().lattice_points().unwrap(), [v(&[0, 0])]);

        let tri = LatticePolytope::from_vertices(2, vec![qv(&[(0, 1), (0, 1)]), qv(&[(1, 1), (0, 1)]), qv(&[(0, 1), (1, 1)])]).unwrap();
        let tf = fan_from_polytope(&tri).unwrap();
        let th = support_from_polytope(&tri, &tf).unwrap();
        assert_eq!(fan_from_polytope(&polytope_from_support(&tf, &th).unwrap()).unwrap(), tf);
        let seg = LatticePolytope::from_vertices(1, vec![qv(&[(0, 1)]), qv(&[(1, 1)])]).unwrap();
        assert_eq!(fan_from_polytope(&seg).unwrap().cones().len(), 3);
    }

    #[test]
    fn divisor_json() {
        let d: TDivisor =
            serde_json::from_str(r#"{"rays": [[2,-1],[-1,2],[-1,-1]], "coefficients": [6,6,0]}"#).unwrap();
        assert_eq!(d, ex73([6, 6, 0]));
        let text = serde_json::to_string(&d).unwrap();
        let back: TDivisor = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
        let p: LatticePolytope = serde_json::from_str(r#"{"vertices": [[0,0],[1,0],[0,1],[1,1]]}"#).unwrap();
        assert_eq!(p, square());
    }
}
