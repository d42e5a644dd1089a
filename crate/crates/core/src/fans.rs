//! Fans: validation with face completion, completeness, stars, cone counts,
//! cohomological and arithmetic invariants, morphisms, gluing data and
//! automorphism groups.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::affine::{prime_power, MonomialMap};
use crate::cones::{check_dim, hilbert_basis, is_regular, Cone};
use crate::error::{Error, Result};
use crate::lattice::{integer_kernel_basis, inverse_rational, primitive, IntMatrix, IntVector, Lattice};

/// A fan, closed under taking faces.
///
/// `cones` holds every cone ordered by dimension and then generators.
/// `rays` keeps the primitive ray generators in the order they first appear
/// in the input, which is the order divisor coefficients refer to.
#[derive(Clone, Debug)]
pub struct Fan {
    ambient_dim: usize,
    cones: Vec<Cone>,
    maximal: Vec<Cone>,
    rays: Vec<IntVector>,
}

impl PartialEq for Fan {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.cones == other.cones
    }
}

impl Eq for Fan {}

impl Fan {
    /// Validates a list of cones given by generators (usually just the
    /// maximal ones) and adds all faces.
    pub fn new(ambient_dim: usize, cones: Vec<Vec<IntVector>>) -> Result<Self> {
        check_dim(ambient_dim)?;
        let mut built = Vec::with_capacity(cones.len());
        let mut rays = Vec::new();
        for gens in cones {
            let c = Cone::new(ambient_dim, gens.clone())?;
            for g in gens.iter().filter(|g| !g.is_zero()) {
                let p = primitive(g)?;
                if c.rays().contains(&p) && !rays.contains(&p) {
                    rays.push(p);
                }
            }
            built.push(c);
        }
        let mut fan = Self::from_cones(ambient_dim, built)?;
        for r in std::mem::take(&mut fan.rays) {
            if !rays.contains(&r) {
                rays.push(r);
            }
        }
        fan.rays = rays;
        Ok(fan)
    }

    /// Same as [`Fan::new`] for cones that are already built.
    pub fn from_cones(ambient_dim: usize, input: Vec<Cone>) -> Result<Self> {
        check_dim(ambient_dim)?;
        for c in &input {
            if c.ambient_dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: c.ambient_dim(),
                });
            }
            if !c.is_strongly_convex() {
                return Err(Error::NotStronglyConvex(c.to_string()));
            }
        }
        let distinct: Vec<&Cone> = input.iter().collect::<BTreeSet<_>>().into_iter().collect();
        for (i, a) in distinct.iter().enumerate() {
            for b in &distinct[i + 1..] {
                let meet = a.intersection(b)?;
                if !a.has_face(&meet) || !b.has_face(&meet) {
                    return Err(Error::NotAFan(format!(
                        "{a} and {b} meet in {meet}, which is not a face of both"
                    )));
                }
            }
        }
        let mut all: BTreeSet<Cone> = distinct.iter().flat_map(|c| c.faces()).collect();
        all.insert(Cone::zero(ambient_dim));
        let cones: Vec<Cone> = all.into_iter().collect();
        let maximal: Vec<Cone> = cones
            .iter()
            .filter(|c| !cones.iter().any(|d| d.dim() > c.dim() && d.contains_cone(c)))
            .cloned()
            .collect();
        let rays = cones
            .iter()
            .filter(|c| c.dim() == 1)
            .map(|c| c.rays()[0].clone())
            .collect();
        Ok(Fan {
            ambient_dim,
            cones,
            maximal,
            rays,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Every cone of the fan, including `{0}`.
    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn maximal_cones(&self) -> &[Cone] {
        &self.maximal
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn contains_cone(&self, c: &Cone) -> bool {
        self.cones.binary_search(c).is_ok()
    }

    /// All maximal cones are regular.
    pub fn is_smooth(&self) -> bool {
        let l = Lattice::standard(self.ambient_dim);
        self.maximal.iter().all(|c| is_regular(c, &l).unwrap_or(false))
    }

    /// The fan covers the whole space.
    ///
    /// Checked by facet pairing: every maximal cone is full-dimensional and
    /// every codimension-one face lies in exactly two maximal cones.
    pub fn is_complete(&self) -> Result<bool> {
        let n = self.ambient_dim;
        if n > 3 {
            return Err(Error::UnsupportedDimension { dim: n, max: 3 });
        }
        if n == 0 {
            return Ok(true);
        }
        if self.maximal.iter().any(|c| c.dim() != n) {
            return Ok(false);
        }
        let mut uses: BTreeMap<&Cone, usize> = BTreeMap::new();
        for c in &self.cones {
            if c.dim() == n - 1 {
                uses.insert(c, 0);
            }
        }
        for (facet, count) in uses.iter_mut() {
            *count = self.maximal.iter().filter(|m| m.contains_cone(facet)).count();
        }
        Ok(uses.values().all(|&k| k == 2))
    }

    /// Number `d_k` of `k`-dimensional cones.
    pub fn number_of_cones_dim(&self, k: usize) -> Result<usize> {
        if k > self.ambient_dim {
            return Err(Error::InvalidInput(format!(
                "cone dimension {k} exceeds the ambient dimension {}",
                self.ambient_dim
            )));
        }
        Ok(self.cones.iter().filter(|c| c.dim() == k).count())
    }

    fn counts(&self) -> Vec<i64> {
        (0..=self.ambient_dim)
            .map(|k| self.cones.iter().filter(|c| c.dim() == k).count() as i64)
            .collect()
    }

    fn warn_unless_smooth_complete(&self, what: &str) {
        if !self.is_smooth() || !matches!(self.is_complete(), Ok(true)) {
            log::warn!("{what} assumes a smooth complete fan; the result may be meaningless here");
        }
    }

    /// `b_k` from cone counts. Odd Betti numbers vanish.
    pub fn betti_number(&self, k: usize) -> i64 {
        self.warn_unless_smooth_complete("betti_number");
        if k % 2 == 1 {
            return 0;
        }
        let (j, n) = (k / 2, self.ambient_dim);
        if j > n {
            return 0;
        }
        let d = self.counts();
        (j..=n)
            .map(|i| {
                let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                sign * binomial(i, j) * d[n - i]
            })
            .sum()
    }

    /// The number of maximal-dimensional cones.
    pub fn euler_characteristic(&self) -> i64 {
        if !matches!(self.is_complete(), Ok(true)) {
            log::warn!("euler_characteristic assumes a complete fan");
        }
        self.counts()[self.ambient_dim]
    }

    /// `|X(F_q)| = Σ_k (q−1)^k d_{n−k}`: each `k`-cone contributes one torus
    /// orbit of dimension `n − k`.
    pub fn cardinality_of_x(&self, q: u64) -> Result<BigInt> {
        if prime_power(q).is_none() {
            return Err(Error::InvalidInput(format!("{q} is not a prime power")));
        }
        let n = self.ambient_dim;
        let d = self.counts();
        let unit = BigInt::from(q - 1);
        Ok((0..=n).map(|k| Pow::pow(&unit, k as u32) * BigInt::from(d[n - k])).sum())
    }

    /// The image of the fan under a unimodular change of coordinates.
    pub fn transform(&self, m: &IntMatrix) -> Result<Fan> {
        let cones = self.maximal.iter().map(|c| c.image(m)).collect::<Result<Vec<_>>>()?;
        let mut fan = Fan::from_cones(m.nrows(), cones)?;
        fan.rays = self.rays.iter().map(|r| m.apply(r)).collect::<Result<_>>()?;
        Ok(fan)
    }

    /// Cones containing `sigma`, and the projected fan in `N / span(σ)`.
    pub fn star(&self, sigma: &Cone) -> Result<Star> {
        if !self.contains_cone(sigma) {
            return Err(Error::InvalidInput(format!("{sigma} is not a cone of the fan")));
        }
        let containing: Vec<Cone> = self.cones.iter().filter(|t| t.has_face(sigma)).cloned().collect();
        let gens = IntMatrix::new(sigma.generators().to_vec(), self.ambient_dim)?;
        // Rows span the integer annihilator of σ, so `x ↦ K·x` is onto with
        // kernel exactly `span(σ) ∩ Z^n`.
        let projection = integer_kernel_basis(&gens);
        let images = containing.iter().map(|t| t.image(&projection)).collect::<Result<Vec<_>>>()?;
        let projected = Fan::from_cones(projection.nrows(), images)?;
        Ok(Star {
            cones: containing,
            projection,
            projected,
        })
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Result of [`Fan::star`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star {
    /// Cones of the fan having σ as a face, unprojected.
    pub cones: Vec<Cone>,
    /// Surjection `Z^n → Z^{n − dim σ}` with kernel `span(σ) ∩ Z^n`.
    pub projection: IntMatrix,
    pub projected: Fan,
}

pub fn validate_fan(ambient_dim: usize, cones: Vec<Vec<IntVector>>) -> Result<Fan> {
    Fan::new(ambient_dim, cones)
}

#[derive(Serialize, Deserialize)]
struct FanJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ambient_dim: Option<usize>,
    maximal_cones: Vec<Vec<IntVector>>,
}

impl Serialize for Fan {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FanJson {
            ambient_dim: Some(self.ambient_dim),
            maximal_cones: self.maximal.iter().map(|c| c.generators().to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Fan {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = FanJson::deserialize(d)?;
        let n = raw
            .ambient_dim
            .or_else(|| raw.maximal_cones.iter().flatten().next().map(IntVector::dim))
            .ok_or_else(|| D::Error::custom("fan needs ambient_dim or at least one generator"))?;
        Fan::new(n, raw.maximal_cones).map_err(D::Error::custom)
    }
}

/// A lattice map compatible with two fans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanMorphism {
    pub matrix: IntMatrix,
    pub source: Fan,
    pub target: Fan,
    /// `assignment[i]` indexes the smallest cone of `target.cones()` that
    /// contains the image of `source.cones()[i]`.
    pub assignment: Vec<usize>,
}

/// Checks that `m` (acting on column vectors) sends every cone of `source`
/// into some cone of `target`.
pub fn is_fan_morphism(m: &IntMatrix, source: &Fan, target: &Fan) -> Result<FanMorphism> {
    if m.ncols() != source.ambient_dim || m.nrows() != target.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: source.ambient_dim,
            got: m.ncols(),
        });
    }
    let mut assignment = Vec::with_capacity(source.cones.len());
    for c in &source.cones {
        let image = c.image(m)?;
        // Cones are sorted by dimension, so the first hit is the smallest.
        let hit = target
            .cones
            .iter()
            .position(|t| t.contains_cone(&image))
            .ok_or_else(|| Error::NotAMorphism(format!("the image of {c} lies in no cone of the target")))?;
        assignment.push(hit);
    }
    Ok(FanMorphism {
        matrix: m.clone(),
        source: source.clone(),
        target: target.clone(),
        assignment,
    })
}

/// Unimodular matrices permuting the cones of a fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanAutomorphismGroup {
    pub elements: Vec<IntMatrix>,
}

impl FanAutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Contains the identity and is closed under products and inverses.
    pub fn is_group(&self) -> bool {
        let set: BTreeSet<&IntMatrix> = self.elements.iter().collect();
        let Some(first) = self.elements.first() else {
            return false;
        };
        let n = first.ncols();
        if !set.contains(&IntMatrix::identity(n)) {
            return false;
        }
        self.elements.iter().all(|a| {
            let inverse_ok = inverse_rational(a)
                .and_then(|rows| integral_matrix(&rows, n))
                .is_some_and(|inv| set.contains(&inv));
            inverse_ok && self.elements.iter().all(|b| a.mul(b).is_ok_and(|p| set.contains(&p)))
        })
    }
}

fn integral_matrix(rows: &[Vec<BigRational>], ncols: usize) -> Option<IntMatrix> {
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.is_integer().then(|| x.to_integer()))
                .collect::<Option<Vec<_>>>()
                .map(IntVector::new)
        })
        .collect::<Option<Vec<_>>>()?;
    IntMatrix::new(rows, ncols).ok()
}

fn ordered_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !cur.contains(&i) {
                cur.push(i);
                go(n, k, cur, out);
                cur.pop();
            }
        }
    }
    go(n, k, &mut Vec::new(), &mut out);
    out
}

/// The automorphism group of a fan whose rays span the space.
///
/// An automorphism permutes the rays, so it is determined by where a fixed
/// independent set of `n` rays goes. Every ordered choice of target rays is
/// tried and the resulting map is kept when it is integral, unimodular and
/// permutes the maximal cones.
pub fn fan_automorphism_group(f: &Fan) -> Result<FanAutomorphismGroup> {
    let n = f.ambient_dim;
    if n > 3 {
        return Err(Error::UnsupportedDimension { dim: n, max: 3 });
    }
    let mut basis: Vec<IntVector> = Vec::new();
    for r in &f.rays {
        let mut trial = basis.clone();
        trial.push(r.clone());
        if IntMatrix::new(trial.clone(), n)?.rank() == trial.len() {
            basis = trial;
        }
    }
    if basis.len() < n {
        return Err(Error::InvalidInput(
            "the rays do not span the space, so the automorphism group may be infinite".into(),
        ));
    }
    let inv = inverse_rational(&IntMatrix::new(basis, n)?.transpose()).expect("independent rays");
    let rays: BTreeSet<&IntVector> = f.rays.iter().collect();
    let maximal: BTreeSet<&Cone> = f.maximal.iter().collect();
    let mut found = BTreeSet::new();
    for tuple in ordered_tuples(f.rays.len(), n) {
        let m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        tuple.iter().enumerate().fold(BigRational::zero(), |acc, (j, &t)| {
                            acc + BigRational::from_integer(f.rays[t][i].clone()) * &inv[j][k]
                        })
                    })
                    .collect()
            })
            .collect();
        let Some(m) = integral_matrix(&m, n) else {
            continue;
        };
        if !m.det()?.abs().is_one() {
            continue;
        }
        let permutes_rays = f.rays.iter().all(|r| m.apply(r).is_ok_and(|x| rays.contains(&x)));
        if permutes_rays
            && f.maximal
                .iter()
                .all(|c| c.image(&m).is_ok_and(|x| maximal.contains(&x)))
        {
            found.insert(m);
        }
    }
    Ok(FanAutomorphismGroup {
        elements: found.into_iter().collect(),
    })
}

/// Restriction maps `U_τ → U_{σ_i}` for a common face `τ`.
///
/// Each Hilbert-basis generator of `S_{σ_i}` is written over the generators
/// of `S_τ`; the resulting exponent vectors define monomial maps from the
/// coordinates of `U_τ` to those of `U_{σ_i}`.
pub fn gluing_map(tau: &Cone, sigma1: &Cone, sigma2: &Cone, l: &Lattice) -> Result<(MonomialMap, MonomialMap)> {
    if !sigma1.has_face(tau) || !sigma2.has_face(tau) {
        return Err(Error::InvalidInput(format!("{tau} is not a face of both {sigma1} and {sigma2}")));
    }
    let small = hilbert_basis(tau, l)?;
    let restrict = |sigma: &Cone| -> Result<MonomialMap> {
        let big = hilbert_basis(sigma, l)?;
        let exponents = big
            .gens
            .iter()
            .map(|u| {
                small
                    .decompose(u)?
                    .map(IntVector::new)
                    .ok_or_else(|| Error::Inconsistent(format!("{u} is not in the semigroup of the face")))
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialMap::new(small.len(), exponents)
    };
    Ok((restrict(sigma1)?, restrict(sigma2)?))
}
