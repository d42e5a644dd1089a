//! Affine toric varieties: binomial ideals, torus embeddings and points over
//! prime fields.
//!
//! The toric ideal of semigroup generators `u_1, …, u_t` is the lattice ideal
//! of `ker(U)`, `U` being the matrix with columns `u_i`. It is computed fiber
//! by fiber: monomials with the same image under `U` are joined by the moves
//! found so far, and each fiber that stays disconnected contributes new
//! binomials. When the generators span a pointed cone the fibers are graded
//! by a positive weight and processed completely up to a weight bound, so
//! every minimal generator up to that bound is found.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cones::{hilbert_basis, Cone, SemigroupGens};
use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, IntVector, Lattice};
use crate::monomial::{format_binomial, format_laurent, format_torus_monomial};

/// Degree bound used by [`toric_ideal`].
pub const DEFAULT_IDEAL_DEGREE: u32 = 8;

/// Largest number of monomials enumerated while building a toric ideal.
pub const MONOMIAL_LIMIT: u128 = 400_000;

/// Default budget for [`toric_points`] (number of points of `F_q^t`).
pub const POINT_LIMIT: u128 = 10_000_000;

/// `x^lhs - x^rhs` with disjoint supports.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    lhs: IntVector,
    rhs: IntVector,
}

impl Binomial {
    pub fn new(lhs: IntVector, rhs: IntVector) -> Result<Self> {
        rhs.check_dim(lhs.dim())?;
        if lhs.iter().chain(rhs.iter()).any(Signed::is_negative) {
            return Err(Error::InvalidInput("binomial exponents must be nonnegative".into()));
        }
        if lhs.iter().zip(rhs.iter()).any(|(a, b)| !a.is_zero() && !b.is_zero()) {
            return Err(Error::InvalidInput("binomial sides must have disjoint supports".into()));
        }
        if lhs.is_zero() && rhs.is_zero() {
            return Err(Error::InvalidInput("the zero binomial is not allowed".into()));
        }
        Ok(Binomial { lhs, rhs })
    }

    /// Splits a nonzero exponent difference into its positive and negative parts.
    pub fn from_difference(d: &IntVector) -> Result<Self> {
        let pos = IntVector::new(d.iter().map(|a| a.clone().max(BigInt::zero())).collect());
        let neg = IntVector::new(d.iter().map(|a| (-a).max(BigInt::zero())).collect());
        Self::new(pos, neg)
    }

    pub fn lhs(&self) -> &IntVector {
        &self.lhs
    }

    pub fn rhs(&self) -> &IntVector {
        &self.rhs
    }

    pub fn num_vars(&self) -> usize {
        self.lhs.dim()
    }

    pub fn difference(&self) -> IntVector {
        &self.lhs - &self.rhs
    }

    pub fn format(&self, var: &str) -> String {
        format_binomial(self.lhs.entries(), self.rhs.entries(), var)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format("x"))
    }
}

/// An ideal generated by binomials in `num_vars` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialIdeal {
    pub num_vars: usize,
    pub generators: Vec<Binomial>,
}

type Mono = Vec<i64>;

fn small(v: &IntVector) -> Result<Mono> {
    v.to_i64s()
}

fn moves_of(gens: &[Binomial]) -> Result<Vec<(Mono, Mono)>> {
    gens.iter().map(|b| Ok((small(&b.lhs)?, small(&b.rhs)?))).collect()
}

fn step(m: &Mono, from: &Mono, to: &Mono) -> Option<Mono> {
    if m.iter().zip(from).all(|(a, b)| a >= b) {
        Some(m.iter().zip(from).zip(to).map(|((a, b), c)| a - b + c).collect())
    } else {
        None
    }
}

/// Whether `start` and `target` are joined by binomial moves through
/// monomials of total degree at most `cap`.
fn connected(start: &Mono, target: &Mono, moves: &[(Mono, Mono)], cap: i64) -> bool {
    let mut seen: HashSet<Mono> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(m) = queue.pop_front() {
        if &m == target {
            return true;
        }
        for (a, b) in moves {
            for (from, to) in [(a, b), (b, a)] {
                if let Some(next) = step(&m, from, to) {
                    if next.iter().sum::<i64>() <= cap && seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    false
}

impl BinomialIdeal {
    pub fn new(num_vars: usize, generators: Vec<Binomial>) -> Result<Self> {
        for g in &generators {
            g.lhs.check_dim(num_vars)?;
        }
        Ok(BinomialIdeal { num_vars, generators })
    }

    /// Decides whether `b` rewrites to zero modulo the generators, exploring
    /// monomials of total degree at most `max_degree` (or the degree of `b`
    /// if larger). Exact whenever the relevant fiber is finite and fits.
    pub fn reduces_to_zero(&self, b: &Binomial, max_degree: u32) -> Result<bool> {
        b.lhs.check_dim(self.num_vars)?;
        let (l, r) = (small(&b.lhs)?, small(&b.rhs)?);
        let cap = (max_degree as i64).max(l.iter().sum()).max(r.iter().sum());
        Ok(connected(&l, &r, &moves_of(&self.generators)?, cap))
    }

    /// Every generator of `other` reduces to zero modulo `self`.
    pub fn contains_ideal(&self, other: &BinomialIdeal, max_degree: u32) -> Result<bool> {
        for g in &other.generators {
            if !self.reduces_to_zero(g, max_degree)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mutual rewriting check.
    pub fn same_ideal(&self, other: &BinomialIdeal, max_degree: u32) -> Result<bool> {
        Ok(self.contains_ideal(other, max_degree)? && other.contains_ideal(self, max_degree)?)
    }

    /// Renames variables: variable `i` of `self` becomes variable `perm[i]`.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<BinomialIdeal> {
        if perm.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: perm.len(),
            });
        }
        let move_vec = |v: &IntVector| {
            let mut out = vec![BigInt::zero(); v.dim()];
            for (i, a) in v.iter().enumerate() {
                out[perm[i]] = a.clone();
            }
            IntVector::new(out)
        };
        let generators = self
            .generators
            .iter()
            .map(|b| Binomial::new(move_vec(&b.lhs), move_vec(&b.rhs)))
            .collect::<Result<_>>()?;
        Ok(BinomialIdeal {
            num_vars: self.num_vars,
            generators,
        })
    }
}

/// A monomial map: target coordinate `i` is `∏_j x_j^{exponents[i][j]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMap {
    pub source_dim: usize,
    pub exponents: Vec<IntVector>,
}

impl MonomialMap {
    pub fn new(source_dim: usize, exponents: Vec<IntVector>) -> Result<Self> {
        for e in &exponents {
            e.check_dim(source_dim)?;
        }
        Ok(MonomialMap { source_dim, exponents })
    }

    pub fn identity(n: usize) -> Self {
        MonomialMap {
            source_dim: n,
            exponents: (0..n).map(|i| IntVector::unit(n, i)).collect(),
        }
    }

    pub fn target_dim(&self) -> usize {
        self.exponents.len()
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn after(&self, inner: &MonomialMap) -> Result<MonomialMap> {
        if self.source_dim != inner.target_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.source_dim,
                got: inner.target_dim(),
            });
        }
        let exponents = self
            .exponents
            .iter()
            .map(|e| {
                e.iter()
                    .zip(&inner.exponents)
                    .fold(IntVector::zeros(inner.source_dim), |acc, (c, v)| &acc + &v.scale(c))
            })
            .collect();
        Ok(MonomialMap {
            source_dim: inner.source_dim,
            exponents,
        })
    }

    /// Exponent of `x` obtained by substituting the map into `y^a`.
    pub fn pullback(&self, a: &IntVector) -> Result<IntVector> {
        a.check_dim(self.target_dim())?;
        Ok(a.iter()
            .zip(&self.exponents)
            .fold(IntVector::zeros(self.source_dim), |acc, (c, v)| &acc + &v.scale(c)))
    }

    /// Substituting the map into the binomial gives the zero Laurent polynomial.
    pub fn satisfies(&self, b: &Binomial) -> Result<bool> {
        Ok(self.pullback(&b.lhs)? == self.pullback(&b.rhs)?)
    }

    pub fn satisfies_ideal(&self, i: &BinomialIdeal) -> Result<bool> {
        for b in &i.generators {
            if !self.satisfies(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Target coordinates as Laurent monomials in `x1, x2, …`.
    pub fn format_coordinates(&self, var: &str) -> Vec<String> {
        self.exponents.iter().map(|e| format_laurent(e.entries(), var)).collect()
    }

    /// Target coordinates over the presented torus, with `x_{n+i}` standing
    /// for `x_i^{-1}`.
    pub fn format_torus_coordinates(&self, var: &str) -> Vec<String> {
        self.exponents.iter().map(|e| format_torus_monomial(e.entries(), var)).collect()
    }

    /// Exponent vectors generate the whole character lattice.
    pub fn generates_lattice(&self) -> bool {
        crate::lattice::lattice_basis(&self.exponents, self.source_dim) == IntMatrix::identity(self.source_dim)
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let src: Vec<String> = (1..=self.source_dim).map(|i| format!("x{i}")).collect();
        write!(f, "({}) -> ({})", src.join(", "), self.format_coordinates("x").join(", "))
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn count_monomials(weights: &[i64], bound: i64) -> u128 {
    // ways[w] = number of monomials of weight exactly w
    let mut ways = vec![0u128; bound as usize + 1];
    ways[0] = 1;
    for &w in weights {
        let w = w as usize;
        for total in w..ways.len() {
            ways[total] = ways[total].saturating_add(ways[total - w]);
        }
    }
    ways.iter().fold(0u128, |a, &b| a.saturating_add(b))
}

fn monomials_up_to(weights: &[i64], bound: i64) -> Vec<(i64, Mono)> {
    fn go(i: usize, weights: &[i64], left: i64, cur: &mut Mono, out: &mut Vec<(i64, Mono)>, used: i64) {
        if i == weights.len() {
            out.push((used, cur.clone()));
            return;
        }
        let mut e = 0;
        while e * weights[i] <= left {
            cur.push(e);
            go(i + 1, weights, left - e * weights[i], cur, out, used + e * weights[i]);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    go(0, weights, bound, &mut Vec::new(), &mut out, 0);
    out
}

/// Toric ideal of the semigroup, with the default degree bound.
pub fn toric_ideal(gens: &SemigroupGens) -> Result<BinomialIdeal> {
    toric_ideal_up_to(gens, DEFAULT_IDEAL_DEGREE)
}

/// Toric ideal with every minimal generator of total degree at most `degree`.
pub fn toric_ideal_up_to(gens: &SemigroupGens, degree: u32) -> Result<BinomialIdeal> {
    if gens.gens.is_empty() {
        return Err(Error::InvalidInput("toric ideal of an empty generator list".into()));
    }
    let t = gens.gens.len();
    let n = gens.ambient_dim;
    let columns: Vec<Mono> = gens.gens.iter().map(|g| g.to_i64s()).collect::<Result<_>>()?;
    let u = IntMatrix::new(gens.gens.clone(), n)?.transpose();
    if u.rank() == t {
        return Ok(BinomialIdeal {
            num_vars: t,
            generators: Vec::new(),
        });
    }

    let span = Cone::new(n, gens.gens.clone())?;
    let pointed = span.is_strongly_convex() && gens.gens.iter().all(|g| !g.is_zero());
    let weights: Vec<i64> = if pointed {
        let omega = span.dual().interior_point();
        gens.gens
            .iter()
            .map(|g| {
                omega
                    .dot(g)
                    .to_i64()
                    .ok_or_else(|| Error::Overflow("grading weight".into()))
            })
            .collect::<Result<_>>()?
    } else {
        vec![1; t]
    };
    let (wmin, wmax) = (*weights.iter().min().unwrap(), *weights.iter().max().unwrap());
    let mut bound = degree as i64 * wmax;
    if count_monomials(&weights, bound) > MONOMIAL_LIMIT {
        bound = degree as i64 * wmin;
    }
    let needed = count_monomials(&weights, bound);
    if needed > MONOMIAL_LIMIT {
        return Err(Error::budget("toric ideal monomial", needed, MONOMIAL_LIMIT));
    }

    let mut fibers: BTreeMap<(i64, Mono), Vec<Mono>> = BTreeMap::new();
    for (w, m) in monomials_up_to(&weights, bound) {
        let image: Mono = (0..n)
            .map(|i| m.iter().zip(&columns).map(|(e, c)| e * c[i]).sum())
            .collect();
        // Without a positive grading, group by degree-free image only.
        let key = if pointed { (w, image) } else { (0, image) };
        fibers.entry(key).or_default().push(m);
    }
    let mut ordered: Vec<((i64, Mono), Vec<Mono>)> = fibers.into_iter().collect();
    if !pointed {
        ordered.sort_by_key(|(_, ms)| ms.iter().map(|m| m.iter().sum::<i64>()).max().unwrap_or(0));
    }

    let mut moves: Vec<(Mono, Mono)> = Vec::new();
    let mut generators = Vec::new();
    for (_, mut fiber) in ordered {
        if fiber.len() < 2 {
            continue;
        }
        fiber.sort_by(|a, b| b.cmp(a));
        let index: HashMap<&Mono, usize> = fiber.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut uf = UnionFind::new(fiber.len());
        for (i, m) in fiber.iter().enumerate() {
            for (a, b) in &moves {
                for (from, to) in [(a, b), (b, a)] {
                    if let Some(next) = step(m, from, to) {
                        if let Some(&j) = index.get(&next) {
                            uf.union(i, j);
                        }
                    }
                }
            }
        }
        // Fiber is sorted lexicographically descending, so the first member of
        // each component is its lexicographic maximum.
        let lead = fiber[0].clone();
        let mut joined = HashSet::from([uf.find(0)]);
        for i in 1..fiber.len() {
            let root = uf.find(i);
            if joined.insert(root) {
                let d: Vec<i64> = lead.iter().zip(&fiber[i]).map(|(a, b)| a - b).collect();
                let b = Binomial::from_difference(&IntVector::from(d))?;
                moves.push((small(&b.lhs)?, small(&b.rhs)?));
                generators.push(b);
                uf.union(0, i);
            }
        }
    }
    Ok(BinomialIdeal {
        num_vars: t,
        generators,
    })
}

/// `(x_1, …, x_n) ↦ (χ^{u_1}, …, χ^{u_t})` over the Hilbert basis of `S_σ`.
pub fn torus_embedding(c: &Cone, l: &Lattice) -> Result<MonomialMap> {
    let hb = hilbert_basis(c, l)?;
    MonomialMap::new(hb.ambient_dim, hb.gens)
}

/// The ideal `⟨x_i x_{n+i} - 1⟩` of the torus `(F^×)^n` in `2n` variables.
pub fn create_torus(n: usize) -> Result<BinomialIdeal> {
    if n == 0 {
        return Err(Error::InvalidInput("torus of dimension zero".into()));
    }
    let generators = (0..n)
        .map(|i| {
            let mut lhs = IntVector::unit(2 * n, i);
            lhs = &lhs + &IntVector::unit(2 * n, n + i);
            Binomial::new(lhs, IntVector::zeros(2 * n))
        })
        .collect::<Result<_>>()?;
    Ok(BinomialIdeal {
        num_vars: 2 * n,
        generators,
    })
}

pub(crate) fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// `(p, m)` with `q = p^m`, when `q` is a prime power.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn pow_mod(base: u64, e: &BigInt, q: u64) -> u64 {
    let mut e = e.to_u64().expect("nonnegative exponent");
    let (mut acc, mut b) = (1 % q, base % q);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    acc
}

/// All points of `F_q^t` (q prime) where every generator vanishes, in
/// lexicographic order.
pub fn toric_points(i: &BinomialIdeal, q: u64, limit: u128) -> Result<Vec<Vec<u64>>> {
    if !is_prime(q) {
        return Err(Error::InvalidInput(format!("toric_points needs a prime field, got q = {q}")));
    }
    let t = i.num_vars;
    let needed = (q as u128).checked_pow(t as u32).unwrap_or(u128::MAX);
    if needed > limit {
        return Err(Error::budget("toric_points", needed, limit));
    }
    let mut out = Vec::new();
    let mut p = vec![0u64; t];
    loop {
        let ok = i.generators.iter().all(|b| {
            let eval = |e: &IntVector| {
                p.iter()
                    .zip(e.iter())
                    .fold(1 % q, |acc, (&x, k)| acc * pow_mod(x, k, q) % q)
            };
            eval(&b.lhs) == eval(&b.rhs)
        });
        if ok {
            out.push(p.clone());
        }
        // Next point in lexicographic order.
        let mut k = t;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            p[k] += 1;
            if p[k] < q {
                break;
            }
            p[k] = 0;
        }
    }
}

/// `U_σ` with its semigroup, ideal and torus embedding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineToricVariety {
    pub cone: Cone,
    pub semigroup: SemigroupGens,
    pub ideal: BinomialIdeal,
    pub embedding: MonomialMap,
}

impl AffineToricVariety {
    pub fn new(c: &Cone, l: &Lattice) -> Result<Self> {
        let semigroup = hilbert_basis(c, l)?;
        let ideal = toric_ideal(&semigroup)?;
        let embedding = MonomialMap::new(semigroup.ambient_dim, semigroup.gens.clone())?;
        let v = AffineToricVariety {
            cone: c.clone(),
            semigroup,
            ideal,
            embedding,
        };
        if !v.embedding.satisfies_ideal(&v.ideal)? {
            return Err(Error::Inconsistent("torus embedding does not satisfy the toric ideal".into()));
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(vs: &[&[i64]]) -> SemigroupGens {
        SemigroupGens {
            ambient_dim: vs[0].len(),
            gens: vs.iter().map(|v| IntVector::from(*v)).collect(),
        }
    }

    fn binomial(l: &[i64], r: &[i64]) -> Binomial {
        Binomial::new(IntVector::from(l), IntVector::from(r)).unwrap()
    }

    #[test]
    fn hyperboloid_ideal() {
        let i = toric_ideal(&gens(&[&[1, 0], &[1, 1], &[1, 2]])).unwrap();
        assert_eq!(i.generators, vec![binomial(&[1, 0, 1], &[0, 2, 0])]);
        assert_eq!(i.generators[0].to_string(), "x1*x3 - x2^2");
    }

    #[test]
    fn quartic_cone_contains_session_binomials() {
        let i = toric_ideal(&gens(&[&[0, 1], &[1, 0], &[2, -1], &[3, -2], &[4, -3]])).unwrap();
        assert_eq!(i.generators.len(), 6);
        assert!(i.reduces_to_zero(&binomial(&[1, 0, 0, 0, 3], &[0, 0, 0, 4, 0]), 8).unwrap());
        assert!(i.reduces_to_zero(&binomial(&[0, 1, 0, 0, 2], &[0, 0, 0, 3, 0]), 8).unwrap());
    }

    #[test]
    fn torus_ideal_and_points() {
        let t = create_torus(2).unwrap();
        assert_eq!(t.generators.len(), 2);
        assert_eq!(t.generators[0].to_string(), "x1*x3 - 1");
        assert_eq!(toric_points(&t, 3, POINT_LIMIT).unwrap().len(), 4);
        let units = toric_ideal(&gens(&[&[1], &[-1]])).unwrap();
        assert_eq!(units.generators, vec![binomial(&[1, 1], &[0, 0])]);
    }

    #[test]
    fn points_on_the_cone() {
        let i = BinomialIdeal::new(3, vec![binomial(&[1, 0, 1], &[0, 2, 0])]).unwrap();
        let pts = toric_points(&i, 2, POINT_LIMIT).unwrap();
        assert_eq!(pts, vec![vec![0, 0, 0], vec![0, 0, 1], vec![1, 0, 0], vec![1, 1, 1]]);
        let empty = BinomialIdeal::new(1, vec![]).unwrap();
        assert_eq!(toric_points(&empty, 2, POINT_LIMIT).unwrap().len(), 2);
        assert!(Binomial::new(IntVector::from([1]), IntVector::from([1])).is_err());
        assert!(toric_points(&empty, 4, POINT_LIMIT).is_err());
    }

    #[test]
    fn embeddings() {
        let c = Cone::from_i64(&[&[1, 0], &[3, 4]]).unwrap();
        let e = torus_embedding(&c, &Lattice::standard(2)).unwrap();
        assert_eq!(e.format_coordinates("x"), ["x2", "x1", "x1^2/x2", "x1^3/x2^2", "x1^4/x2^3"]);
        let z = torus_embedding(&Cone::zero(1), &Lattice::standard(1)).unwrap();
        assert_eq!(z.format_coordinates("x"), ["x1", "1/x1"]);
        let v = AffineToricVariety::new(&c, &Lattice::standard(2)).unwrap();
        assert!(v.embedding.generates_lattice());
    }
}
