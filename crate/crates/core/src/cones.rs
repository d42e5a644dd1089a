//! Rational polyhedral cones and the semigroups of lattice points in their duals.
//!
//! A [`Cone`] always stores its canonical generator form: the primitive
//! extreme rays plus `±` a Hermite basis of the lineality space, sorted
//! lexicographically. Two cones are equal exactly when they are the same
//! set. The halfspace description is derived on construction by an exact
//! double-description step, which is why the ambient dimension is capped at
//! [`MAX_DIM`].

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{
    integer_kernel_basis, inverse_rational, primitive, smith_normal_form, solve_integer,
    IntMatrix, IntVector, Lattice,
};

/// Largest ambient dimension handled by the exact cone algorithms.
pub const MAX_DIM: usize = 4;

/// Largest box scanned when enumerating Hilbert-basis candidates.
pub const HILBERT_CANDIDATE_LIMIT: u128 = 2_000_000;

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n > MAX_DIM {
        return Err(Error::UnsupportedDimension { dim: n, max: MAX_DIM });
    }
    Ok(())
}

/// All `k`-element index subsets of `0..n`, in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn matrix(rows: &[IntVector], n: usize) -> IntMatrix {
    IntMatrix::new(rows.to_vec(), n).expect("rows share the ambient dimension")
}

fn dedup_primitive(vs: impl IntoIterator<Item = IntVector>) -> Vec<IntVector> {
    let set: BTreeSet<IntVector> = vs
        .into_iter()
        .filter(|v| !v.is_zero())
        .map(|v| primitive(&v).expect("nonzero"))
        .collect();
    set.into_iter().collect()
}

/// Output of the double-description step.
struct Polyhedral {
    lineality: Vec<IntVector>,
    rays: Vec<IntVector>,
}

/// Generators of `{x : ⟨e, x⟩ = 0 for e in eqs, ⟨a, x⟩ ≥ 0 for a in ineqs}`.
///
/// The lineality space is the kernel of all constraints. Extreme rays of
/// the pointed part are found by choosing enough inequalities to cut the
/// pointed part's span down to a line and keeping the feasible direction.
fn cone_from_constraints(n: usize, eqs: &[IntVector], ineqs: &[IntVector]) -> Polyhedral {
    let ineqs = dedup_primitive(ineqs.iter().cloned());
    let eqs: Vec<IntVector> = eqs.iter().filter(|e| !e.is_zero()).cloned().collect();
    let all: Vec<IntVector> = eqs.iter().chain(&ineqs).cloned().collect();
    let lineality = integer_kernel_basis(&matrix(&all, n)).into_rows();

    let base: Vec<IntVector> = eqs.iter().chain(&lineality).cloned().collect();
    let base_rank = matrix(&base, n).rank();
    let free = n - base_rank;
    let mut rays = BTreeSet::new();
    if free > 0 {
        for subset in combinations(ineqs.len(), free - 1) {
            let mut rows = base.clone();
            rows.extend(subset.iter().map(|&i| ineqs[i].clone()));
            let k = integer_kernel_basis(&matrix(&rows, n));
            if k.nrows() != 1 {
                continue;
            }
            let d = k.row(0).clone();
            for s in [d.clone(), -&d] {
                if ineqs.iter().all(|a| !a.dot(&s).is_negative()) {
                    rays.insert(primitive(&s).expect("kernel vector is nonzero"));
                }
            }
        }
    }
    Polyhedral {
        lineality,
        rays: rays.into_iter().collect(),
    }
}

/// Halfspace description `{x : ⟨x, e⟩ = 0 ∀ e ∈ equations, ⟨x, a⟩ ≥ 0 ∀ a ∈ normals}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfspaceRep {
    /// A basis of the orthogonal complement of the cone's span.
    pub equations: Vec<IntVector>,
    /// Primitive inward facet normals.
    pub normals: Vec<IntVector>,
}

/// A rational polyhedral cone in `Q^n`, stored in canonical generator form.
#[derive(Clone, Debug)]
pub struct Cone {
    ambient_dim: usize,
    generators: Vec<IntVector>,
    rays: Vec<IntVector>,
    lineality: Vec<IntVector>,
    halfspaces: HalfspaceRep,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.generators == other.generators
    }
}

impl Eq for Cone {}

impl Hash for Cone {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient_dim.hash(state);
        self.generators.hash(state);
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Cones order by dimension first, then by generator list.
impl Ord for Cone {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient_dim, self.dim(), &self.generators).cmp(&(other.ambient_dim, other.dim(), &other.generators))
    }
}

impl Cone {
    /// The cone spanned by `generators` in `Q^ambient_dim`.
    pub fn new(ambient_dim: usize, generators: Vec<IntVector>) -> Result<Self> {
        check_dim(ambient_dim)?;
        for g in &generators {
            g.check_dim(ambient_dim)?;
        }
        let gens = dedup_primitive(generators);
        let n = ambient_dim;
        if gens.is_empty() {
            return Ok(Self::zero(n));
        }
        let equations = integer_kernel_basis(&matrix(&gens, n)).into_rows();
        let normals = cone_from_constraints(n, &[], &gens).rays;
        let primal = cone_from_constraints(n, &equations, &normals);
        let mut generators: Vec<IntVector> = primal.rays.clone();
        for l in &primal.lineality {
            generators.push(l.clone());
            generators.push(-l);
        }
        generators.sort();
        Ok(Cone {
            ambient_dim: n,
            generators,
            rays: primal.rays,
            lineality: primal.lineality,
            halfspaces: HalfspaceRep { equations, normals },
        })
    }

    /// Convenience constructor from small integer rows; the dimension is
    /// taken from the first row.
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        let n = rows
            .first()
            .map(|r| r.len())
            .ok_or_else(|| Error::InvalidInput("cannot infer the dimension of an empty generator list".into()))?;
        Self::new(n, rows.iter().map(|r| IntVector::from(*r)).collect())
    }

    /// The cone `{x : ⟨e, x⟩ = 0, ⟨a, x⟩ ≥ 0}`.
    pub fn from_constraints(ambient_dim: usize, equations: &[IntVector], inequalities: &[IntVector]) -> Result<Self> {
        check_dim(ambient_dim)?;
        for v in equations.iter().chain(inequalities) {
            v.check_dim(ambient_dim)?;
        }
        let p = cone_from_constraints(ambient_dim, equations, inequalities);
        let mut gens = p.rays;
        for l in &p.lineality {
            gens.push(l.clone());
            gens.push(-l);
        }
        Self::new(ambient_dim, gens)
    }

    /// The cone `{0}`.
    pub fn zero(ambient_dim: usize) -> Self {
        Cone {
            ambient_dim,
            generators: Vec::new(),
            rays: Vec::new(),
            lineality: Vec::new(),
            halfspaces: HalfspaceRep {
                equations: IntMatrix::identity(ambient_dim).into_rows(),
                normals: Vec::new(),
            },
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Canonical generators: extreme rays and `±` lineality basis, sorted.
    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    /// Primitive extreme rays (empty for cones that contain a line and have
    /// no pointed directions).
    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    /// Hermite basis of the largest linear subspace contained in the cone.
    pub fn lineality(&self) -> &[IntVector] {
        &self.lineality
    }

    pub fn halfspaces(&self) -> &HalfspaceRep {
        &self.halfspaces
    }

    pub fn facet_normals(&self) -> &[IntVector] {
        &self.halfspaces.normals
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.ambient_dim - self.halfspaces.equations.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.halfspaces.equations.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// True when the cone contains no line.
    pub fn is_strongly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Membership of an ambient vector.
    pub fn contains(&self, v: &IntVector) -> Result<bool> {
        v.check_dim(self.ambient_dim)?;
        Ok(self.halfspaces.equations.iter().all(|e| e.dot(v).is_zero())
            && self.halfspaces.normals.iter().all(|a| !a.dot(v).is_negative()))
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators.iter().all(|g| self.contains(g).unwrap_or(false))
    }

    /// True when `⟨v, w⟩ ≥ 0` for every generator `v`.
    pub fn in_dual(&self, w: &IntVector) -> Result<bool> {
        w.check_dim(self.ambient_dim)?;
        Ok(self.generators.iter().all(|g| !g.dot(w).is_negative()))
    }

    /// The dual cone in the same coordinates (dual basis of the standard lattice).
    pub fn dual(&self) -> Cone {
        let mut gens = self.halfspaces.normals.clone();
        for e in &self.halfspaces.equations {
            gens.push(e.clone());
            gens.push(-e);
        }
        Cone::new(self.ambient_dim, gens).expect("dimension already checked")
    }

    pub fn intersection(&self, other: &Cone) -> Result<Cone> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        let eqs: Vec<IntVector> = self
            .halfspaces
            .equations
            .iter()
            .chain(&other.halfspaces.equations)
            .cloned()
            .collect();
        let ineqs: Vec<IntVector> = self
            .halfspaces
            .normals
            .iter()
            .chain(&other.halfspaces.normals)
            .cloned()
            .collect();
        Cone::from_constraints(self.ambient_dim, &eqs, &ineqs)
    }

    /// Every face, from `{0}` (or the lineality space) up to the cone itself,
    /// ordered by dimension and then generators.
    pub fn faces(&self) -> Vec<Cone> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.clone()];
        while let Some(f) = stack.pop() {
            if seen.contains(&f) {
                continue;
            }
            for a in f.facet_normals() {
                let tight: Vec<IntVector> = f.generators.iter().filter(|g| a.dot(g).is_zero()).cloned().collect();
                stack.push(Cone::new(f.ambient_dim, tight).expect("sub-generators of a valid cone"));
            }
            seen.insert(f);
        }
        seen.into_iter().collect()
    }

    pub fn has_face(&self, face: &Cone) -> bool {
        if !self.contains_cone(face) {
            return false;
        }
        self.faces().contains(face)
    }

    /// A point of the relative interior: the sum of the generators.
    pub fn interior_point(&self) -> IntVector {
        self.generators
            .iter()
            .fold(IntVector::zeros(self.ambient_dim), |acc, g| &acc + g)
    }

    /// Applies the linear map `m` (acting on column vectors) to the generators.
    pub fn image(&self, m: &IntMatrix) -> Result<Cone> {
        let gens = self.generators.iter().map(|g| m.apply(g)).collect::<Result<Vec<_>>>()?;
        Cone::new(m.nrows(), gens)
    }

    /// Rewrites the cone in the coordinates of lattice `l` (which must have
    /// full rank in the cone's ambient space).
    pub fn in_lattice_coordinates(&self, l: &Lattice) -> Result<Cone> {
        if l.is_standard() {
            if l.degree() != self.ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: self.ambient_dim,
                    got: l.degree(),
                });
            }
            return Ok(self.clone());
        }
        let gens = self
            .generators
            .iter()
            .map(|g| l.coordinates(g).map(|c| c.clear_denominators()))
            .collect::<Result<Vec<_>>>()?;
        Cone::new(l.rank(), gens)
    }
}

impl std::fmt::Display for Cone {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Cone {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cone {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let gens: Vec<IntVector> = Vec::deserialize(d)?;
        let n = gens
            .first()
            .map(IntVector::dim)
            .ok_or_else(|| D::Error::custom("a cone needs at least one generator to fix its dimension"))?;
        Cone::new(n, gens).map_err(D::Error::custom)
    }
}

/// Dual cone of `c` expressed in the dual-basis coordinates of `l`.
pub fn dual_cone(c: &Cone, l: &Lattice) -> Result<Cone> {
    check_dim(c.ambient_dim())?;
    Ok(c.in_lattice_coordinates(l)?.dual())
}

pub fn in_cone(v: &IntVector, c: &Cone) -> Result<bool> {
    c.contains(v)
}

pub fn in_dual_cone(w: &IntVector, c: &Cone) -> Result<bool> {
    c.in_dual(w)
}

pub fn is_strongly_convex(c: &Cone) -> bool {
    c.is_strongly_convex()
}

/// True when the primitive generators extend to a basis of `l`.
pub fn is_regular(c: &Cone, l: &Lattice) -> Result<bool> {
    if !c.is_strongly_convex() {
        return Err(Error::NotStronglyConvex(c.to_string()));
    }
    let c = c.in_lattice_coordinates(l)?;
    if c.is_zero() {
        return Ok(true);
    }
    if c.rays().len() != c.dim() {
        return Ok(false);
    }
    let (s, _, _) = smith_normal_form(&matrix(c.rays(), c.ambient_dim()))?;
    Ok((0..c.dim()).all(|i| s.get(i, i).is_one()))
}

pub fn faces(c: &Cone) -> Result<Vec<Cone>> {
    check_dim(c.ambient_dim())?;
    Ok(c.faces())
}

/// `|det|` of two plane vectors.
pub(crate) fn det2(a: &IntVector, b: &IntVector) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
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

fn normal_form_from(first: &IntVector, second: &IntVector) -> (BigInt, BigInt, IntMatrix) {
    let (p, q) = (first[0].clone(), first[1].clone());
    let eg = p.extended_gcd(&q);
    let (mut x, mut y) = (eg.x, eg.y);
    if eg.gcd.is_negative() {
        x = -x;
        y = -y;
    }
    let mut g = [[x, y], [-q, p]];
    let apply = |g: &[[BigInt; 2]; 2], v: &IntVector| {
        (
            &g[0][0] * &v[0] + &g[0][1] * &v[1],
            &g[1][0] * &v[0] + &g[1][1] * &v[1],
        )
    };
    let (a0, b0) = apply(&g, second);
    if b0.is_negative() {
        g[1][0] = -g[1][0].clone();
        g[1][1] = -g[1][1].clone();
    }
    let b = b0.abs();
    // Shear (x, y) ↦ (x + k·y, y) brings a into [0, b).
    let a = a0.mod_floor(&b);
    let k = (&a - &a0) / &b;
    let r0 = [&g[0][0] + &k * &g[1][0], &g[0][1] + &k * &g[1][1]];
    let m = IntMatrix::new(
        vec![
            IntVector::new(r0.to_vec()),
            IntVector::new(vec![g[1][0].clone(), g[1][1].clone()]),
        ],
        2,
    )
    .expect("2x2");
    (a, b, m)
}

/// A transform in `GL₂(Z)` taking `c` onto `⟨e₁, a·e₁ + b·e₂⟩` with
/// `b = |det| > 0` and `0 ≤ a < b`. Of the two choices of which ray goes to
/// `e₁`, the one with the smaller `a` is returned.
pub fn normal_form_2d(c: &Cone) -> Result<(BigInt, BigInt, IntMatrix)> {
    require_plane_cone(c)?;
    let r = c.rays();
    let f1 = normal_form_from(&r[0], &r[1]);
    let f2 = normal_form_from(&r[1], &r[0]);
    Ok(if f2.0 < f1.0 { f2 } else { f1 })
}

/// Minimal generators of the semigroup `σ* ∩ L*`.
///
/// Generators that are units come last, in `±` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemigroupGens {
    pub ambient_dim: usize,
    pub gens: Vec<IntVector>,
}

impl SemigroupGens {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// The cone spanned by the generators.
    pub fn cone(&self) -> Result<Cone> {
        Cone::new(self.ambient_dim, self.gens.clone())
    }

    /// Nonnegative exponents `c` with `Σ c_i · gens[i] = u`, or `None` when
    /// `u` is not in the semigroup.
    pub fn decompose(&self, u: &IntVector) -> Result<Option<Vec<BigInt>>> {
        u.check_dim(self.ambient_dim)?;
        let span = self.cone()?;
        if !span.contains(u)? || !crate::lattice::in_integer_span(&self.gens, u) {
            return Ok(None);
        }
        // A relative-interior point of the dual grades the pointed generators
        // positively and the units by zero.
        let omega = span.dual().interior_point();
        let mut coeffs = vec![BigInt::zero(); self.gens.len()];
        let mut rest = u.clone();
        loop {
            if omega.dot(&rest).is_zero() {
                break;
            }
            let step = self.gens.iter().enumerate().find(|(_, g)| {
                omega.dot(g).is_positive() && span.contains(&(&rest - g)).unwrap_or(false)
            });
            let Some((i, g)) = step else {
                return Ok(None);
            };
            rest = &rest - g;
            coeffs[i] += 1;
        }
        if rest.is_zero() {
            return Ok(Some(coeffs));
        }
        let units: Vec<usize> = (0..self.gens.len()).filter(|&i| omega.dot(&self.gens[i]).is_zero()).collect();
        let cols = matrix(&units.iter().map(|&i| self.gens[i].clone()).collect::<Vec<_>>(), self.ambient_dim);
        let Some(sol) = solve_integer(&cols.transpose(), &rest) else {
            return Ok(None);
        };
        for (k, &i) in units.iter().enumerate() {
            let c = &sol[k];
            if c.is_negative() {
                let neg = -&self.gens[i];
                match self.gens.iter().position(|g| *g == neg) {
                    Some(j) => coeffs[j] += c.abs(),
                    None => return Ok(None),
                }
            } else {
                coeffs[i] += c;
            }
        }
        Ok(Some(coeffs))
    }
}

fn bounded_box(lo: &[BigInt], hi: &[BigInt]) -> Result<Vec<IntVector>> {
    let mut size: u128 = 1;
    let mut ranges = Vec::new();
    for (a, b) in lo.iter().zip(hi) {
        let (a, b) = (
            a.to_i64().ok_or_else(|| Error::Overflow(a.to_string()))?,
            b.to_i64().ok_or_else(|| Error::Overflow(b.to_string()))?,
        );
        size = size.saturating_mul((b - a + 1).max(0) as u128);
        ranges.push((a, b));
    }
    if size > HILBERT_CANDIDATE_LIMIT {
        return Err(Error::budget("Hilbert-basis candidate box", size, HILBERT_CANDIDATE_LIMIT));
    }
    let mut out = vec![Vec::new()];
    for &(a, b) in &ranges {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (a..=b).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(IntVector::from).collect())
}

/// Keeps the candidates that are not a sum of another candidate and a
/// nonzero element of `dual`.
fn irreducible(candidates: BTreeSet<IntVector>, dual: &Cone) -> Vec<IntVector> {
    let cands: Vec<IntVector> = candidates.into_iter().filter(|v| !v.is_zero()).collect();
    cands
        .iter()
        .filter(|h| {
            !cands
                .iter()
                .any(|g| g != *h && dual.contains(&(*h - g)).unwrap_or(false))
        })
        .cloned()
        .collect()
}

fn parallelepiped_points(gens: &[IntVector]) -> Result<Vec<IntVector>> {
    let n = gens[0].dim();
    let mut lo = vec![BigInt::zero(); n];
    let mut hi = vec![BigInt::zero(); n];
    for g in gens {
        for i in 0..n {
            if g[i].is_negative() {
                lo[i] += &g[i];
            } else {
                hi[i] += &g[i];
            }
        }
    }
    let inv = inverse_rational(&matrix(gens, n)).ok_or_else(|| Error::Inconsistent("dependent simplex".into()))?;
    let zero = BigRational::zero();
    let one = BigRational::one();
    Ok(bounded_box(&lo, &hi)?
        .into_iter()
        .filter(|p| {
            // p = λ·G  ⇒  λ = p·G⁻¹
            (0..n).all(|j| {
                let l: BigRational = (0..n).map(|i| BigRational::from(p[i].clone()) * &inv[i][j]).sum();
                l >= zero && l <= one
            })
        })
        .collect())
}

/// Hilbert basis of the dual of a full-dimensional strongly convex cone in `Z^n`.
fn pointed_hilbert_basis(c: &Cone) -> Result<Vec<IntVector>> {
    let n = c.ambient_dim();
    let dual = c.dual();
    let dual_rays = dual.rays().to_vec();
    match n {
        1 => Ok(dual_rays),
        2 => {
            // Irreducibles lie in the triangle spanned by 0 and the two dual rays.
            let first = &c.rays()[0];
            let (start, end) = if dual_rays[0].dot(first).is_zero() {
                (dual_rays[0].clone(), dual_rays[1].clone())
            } else {
                (dual_rays[1].clone(), dual_rays[0].clone())
            };
            let det = det2(&start, &end);
            let lo: Vec<BigInt> = (0..2).map(|i| start[i].clone().min(end[i].clone()).min(BigInt::zero())).collect();
            let hi: Vec<BigInt> = (0..2).map(|i| start[i].clone().max(end[i].clone()).max(BigInt::zero())).collect();
            let cands: BTreeSet<IntVector> = bounded_box(&lo, &hi)?
                .into_iter()
                .filter(|p| {
                    // p = α·start + β·end with α, β ≥ 0 and α + β ≤ 1
                    let alpha = det2(p, &end) * det.signum();
                    let beta = det2(&start, p) * det.signum();
                    !alpha.is_negative() && !beta.is_negative() && alpha + beta <= det.abs()
                })
                .collect();
            let mut hb = irreducible(cands, &dual);
            let orient = det.signum();
            hb.sort_by(|a, b| {
                let d = det2(a, b) * &orient;
                if d.is_positive() {
                    Ordering::Less
                } else if d.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            });
            Ok(hb)
        }
        _ => {
            let mut cands: BTreeSet<IntVector> = dual_rays.iter().cloned().collect();
            for subset in combinations(dual_rays.len(), n) {
                let simplex: Vec<IntVector> = subset.iter().map(|&i| dual_rays[i].clone()).collect();
                if matrix(&simplex, n).rank() < n {
                    continue;
                }
                cands.extend(parallelepiped_points(&simplex)?);
            }
            Ok(irreducible(cands, &dual))
        }
    }
}

/// Completes a saturated basis of a sublattice to a basis of `Z^n`: the
/// returned rows are the complement. Unit vectors are preferred.
fn lattice_complement(basis: &[IntVector], n: usize) -> Result<Vec<IntVector>> {
    let need = n - basis.len();
    for subset in combinations(n, need) {
        let mut rows = basis.to_vec();
        let extra: Vec<IntVector> = subset.iter().map(|&i| IntVector::unit(n, i)).collect();
        rows.extend(extra.iter().cloned());
        if matrix(&rows, n).is_unimodular() {
            return Ok(extra);
        }
    }
    let (_, _, v) = smith_normal_form(&matrix(basis, n))?;
    let inv = inverse_rational(&v).ok_or_else(|| Error::Inconsistent("singular Smith transform".into()))?;
    Ok((basis.len()..n)
        .map(|i| IntVector::new(inv[i].iter().map(|a| a.to_integer()).collect()))
        .collect())
}

/// Minimal generators of `S_σ = σ* ∩ L*`, in the dual-basis coordinates of `l`.
///
/// Plane cones list the generators in angular order, starting from the dual
/// ray orthogonal to the lexicographically first ray of `σ`. When `σ` is not
/// full-dimensional the semigroup has units; they are appended as `±` pairs.
pub fn hilbert_basis(c: &Cone, l: &Lattice) -> Result<SemigroupGens> {
    check_dim(c.ambient_dim())?;
    if !c.is_strongly_convex() {
        return Err(Error::NotStronglyConvex(c.to_string()));
    }
    let c = c.in_lattice_coordinates(l)?;
    let n = c.ambient_dim();
    if c.is_full_dimensional() {
        return Ok(SemigroupGens {
            ambient_dim: n,
            gens: pointed_hilbert_basis(&c)?,
        });
    }
    let units = c.halfspaces().equations.clone();
    let complement = lattice_complement(&units, n)?;
    let d = complement.len();
    let mut gens = Vec::new();
    if d > 0 {
        // Coordinates on the complement identify σ* modulo its lineality with
        // the dual of a full-dimensional cone in Z^d.
        let projected: Vec<IntVector> = c
            .generators()
            .iter()
            .map(|g| IntVector::new(complement.iter().map(|q| q.dot(g)).collect()))
            .collect();
        let small = Cone::new(d, projected)?;
        for h in pointed_hilbert_basis(&small)? {
            let lifted = complement
                .iter()
                .zip(h.iter())
                .fold(IntVector::zeros(n), |acc, (q, a)| &acc + &q.scale(a));
            gens.push(lifted);
        }
    }
    for w in &units {
        gens.push(w.clone());
        gens.push(-w);
    }
    Ok(SemigroupGens { ambient_dim: n, gens })
}

/// Diagnostic for the conjectured candidate set
/// `G = {w ∈ σ* ∩ L* : |w| ≤ max |v*|}` over the primitive dual rays `v*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub candidates: Vec<IntVector>,
    pub contains_hilbert_basis: bool,
}

#[allow(non_snake_case)]
pub fn check_conjecture_G(c: &Cone, l: &Lattice) -> Result<ConjectureReport> {
    let hb = hilbert_basis(c, l)?;
    let local = c.in_lattice_coordinates(l)?;
    let dual = local.dual();
    let n = local.ambient_dim();
    let radius2 = dual.generators().iter().map(|v| v.dot(v)).max().unwrap_or_else(BigInt::zero);
    let r = radius2.sqrt();
    let lo = vec![-&r; n];
    let hi = vec![r.clone(); n];
    let candidates: Vec<IntVector> = bounded_box(&lo, &hi)?
        .into_iter()
        .filter(|w| !w.is_zero() && w.dot(w) <= radius2 && dual.contains(w).unwrap_or(false))
        .collect();
    let set: HashSet<&IntVector> = candidates.iter().collect();
    let contains_hilbert_basis = hb.gens.iter().all(|h| set.contains(h));
    Ok(ConjectureReport {
        candidates,
        contains_hilbert_basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> IntVector {
        IntVector::from(x)
    }

    fn set(vs: &[&[i64]]) -> BTreeSet<IntVector> {
        vs.iter().map(|x| v(x)).collect()
    }

    fn z2() -> Lattice {
        Lattice::standard(2)
    }

    #[test]
    fn dual_cone_examples() {
        let c = Cone::from_i64(&[&[0, 1], &[2, -1]]).unwrap();
        assert_eq!(dual_cone(&c, &z2()).unwrap(), Cone::from_i64(&[&[1, 0], &[1, 2]]).unwrap());
        let orth = Cone::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(orth.dual(), orth);
        let c = Cone::from_i64(&[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1], &[1, 0, 1]]).unwrap();
        let d = c.dual();
        assert_eq!(
            d.rays().iter().cloned().collect::<BTreeSet<_>>(),
            set(&[&[0, 0, 1], &[1, -1, 0], &[1, 0, -1], &[0, 1, 0]])
        );
    }

    #[test]
    fn membership() {
        let q = Cone::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(q.contains(&v(&[1, 1])).unwrap());
        assert!(!q.contains(&v(&[-1, 0])).unwrap());
        let c = Cone::from_i64(&[&[1, 0], &[3, 4]]).unwrap();
        assert!(c.contains(&v(&[5, 4])).unwrap());
        assert!(!c.in_dual(&v(&[1, -7])).unwrap());
        assert!(c.in_dual(&v(&[4, -3])).unwrap());
        assert!(c.in_dual(&v(&[0, 0])).unwrap());
        assert!(c.contains(&v(&[1])).is_err());
    }

    #[test]
    fn convexity_and_regularity() {
        assert!(Cone::from_i64(&[&[1, 0], &[0, 1]]).unwrap().is_strongly_convex());
        assert!(!Cone::from_i64(&[&[1, 0], &[-1, 0]]).unwrap().is_strongly_convex());
        let sigma8 = Cone::from_i64(&[&[1, 0], &[-1, 0], &[0, -1]]).unwrap();
        assert!(!sigma8.is_strongly_convex());
        assert_eq!(sigma8.lineality(), &[v(&[1, 0])]);
        assert!(is_regular(&Cone::from_i64(&[&[1, 0], &[1, 1]]).unwrap(), &z2()).unwrap());
        assert!(!is_regular(&Cone::from_i64(&[&[1, 0], &[3, 4]]).unwrap(), &z2()).unwrap());
        assert!(!is_regular(&Cone::from_i64(&[&[0, 1], &[2, -1]]).unwrap(), &z2()).unwrap());
        assert!(is_regular(&sigma8, &z2()).is_err());
    }

    #[test]
    fn canonical_form_drops_redundant_generators() {
        let a = Cone::from_i64(&[&[2, 0], &[1, 1], &[0, 3], &[1, 2]]).unwrap();
        let b = Cone::from_i64(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.generators(), &[v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn face_counts() {
        let c = Cone::from_i64(&[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1], &[1, 0, 1]]).unwrap();
        let f = c.faces();
        assert_eq!(f.len(), 10);
        assert_eq!(f.iter().filter(|x| x.dim() == 1).count(), 4);
        assert_eq!(f.iter().filter(|x| x.dim() == 2).count(), 4);
        assert_eq!(Cone::zero(2).faces().len(), 1);
        assert_eq!(Cone::from_i64(&[&[1, 0], &[0, 1]]).unwrap().faces().len(), 4);
    }

    #[test]
    fn normal_forms() {
        let (a, b, _) = normal_form_2d(&Cone::from_i64(&[&[1, 0], &[0, 1]]).unwrap()).unwrap();
        assert_eq!((a, b), (BigInt::zero(), BigInt::one()));
        for rows in [[[0, 1], [3, -2]], [[1, 0], [3, 4]]] {
            let c = Cone::from_i64(&[&rows[0], &rows[1]]).unwrap();
            let (a, b, t) = normal_form_2d(&c).unwrap();
            assert!(t.is_unimodular());
            let target = Cone::new(2, vec![v(&[1, 0]), IntVector::new(vec![a.clone(), b.clone()])]).unwrap();
            assert_eq!(c.image(&t).unwrap(), target);
            assert_eq!(b, det2(&c.rays()[0], &c.rays()[1]).abs());
            assert!(a < b);
        }
    }

    #[test]
    fn hilbert_basis_examples() {
        let hb = hilbert_basis(&Cone::from_i64(&[&[1, 0], &[3, 4]]).unwrap(), &z2()).unwrap();
        assert_eq!(hb.gens, vec![v(&[0, 1]), v(&[1, 0]), v(&[2, -1]), v(&[3, -2]), v(&[4, -3])]);
        let hb = hilbert_basis(&Cone::from_i64(&[&[0, 1], &[2, -1]]).unwrap(), &z2()).unwrap();
        assert_eq!(hb.gens, vec![v(&[1, 0]), v(&[1, 1]), v(&[1, 2])]);
        let hb = hilbert_basis(&Cone::from_i64(&[&[1, 0], &[-2, 3]]).unwrap(), &z2()).unwrap();
        assert_eq!(hb.gens.iter().cloned().collect::<BTreeSet<_>>(), set(&[&[0, 1], &[1, 1], &[3, 2]]));
        let orth = Cone::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(hilbert_basis(&orth, &Lattice::standard(3)).unwrap().gens.len(), 3);
    }

    #[test]
    fn hilbert_basis_with_units() {
        let zero = Cone::zero(1);
        let hb = hilbert_basis(&zero, &Lattice::standard(1)).unwrap();
        assert_eq!(hb.gens, vec![v(&[1]), v(&[-1])]);
        let ray = Cone::from_i64(&[&[1, 1]]).unwrap();
        let hb = hilbert_basis(&ray, &z2()).unwrap();
        assert_eq!(hb.gens.len(), 3);
        for g in &hb.gens {
            assert!(ray.in_dual(g).unwrap());
        }
        let d = hb.decompose(&v(&[5, -3])).unwrap().unwrap();
        let back = hb
            .gens
            .iter()
            .zip(&d)
            .fold(IntVector::zeros(2), |acc, (g, c)| &acc + &g.scale(c));
        assert_eq!(back, v(&[5, -3]));
        assert!(hb.decompose(&v(&[-1, -1])).unwrap().is_none());
    }

    #[test]
    fn nonstandard_lattice() {
        // L = 2Z ⊕ Z: the ray (2,1) is primitive in L.
        let l = Lattice::new(IntMatrix::from_i64(&[&[2, 0], &[0, 1]]).unwrap()).unwrap();
        let c = Cone::from_i64(&[&[0, 1], &[2, 1]]).unwrap();
        assert!(is_regular(&c, &l).unwrap());
        assert!(!is_regular(&c, &z2()).unwrap());
    }

    #[test]
    fn conjecture_diagnostic() {
        let c = Cone::from_i64(&[&[1, 0], &[3, 4]]).unwrap();
        let r = check_conjecture_G(&c, &z2()).unwrap();
        assert!(r.contains_hilbert_basis);
    }
}
