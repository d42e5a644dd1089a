//! Toric evaluation codes.
//!
//! The code of a finite set of exponent vectors `ℓ ∈ Z^n` over `GF(q)` is
//! spanned by the rows `(t^ℓ)_{t ∈ (GF(q)^×)^n}`, with the torus points in
//! lexicographic order. Minimum distances are computed by exhausting all
//! codewords.

pub mod field;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{IntVector, RationalVector};
use crate::polytopes::{riemann_roch, LatticePolytope, TDivisor};

pub use field::{FieldElement, GaloisField};

/// Largest number of torus points enumerated.
pub const TORUS_LIMIT: u128 = 1_000_000;
/// Largest code length for which generator rows are built.
pub const LENGTH_LIMIT: u128 = 10_000;
/// Largest number of codewords enumerated for a minimum distance.
pub const CODEWORD_LIMIT: u128 = 10_000_000;
/// Largest number of codewords listed explicitly.
pub const LISTING_LIMIT: u128 = 10_000;

fn count(base: u64, exp: usize) -> u128 {
    (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX)
}

/// Points of `(GF(q)^×)^n` in lexicographic order.
pub fn torus_points(q: u64, n: usize) -> Result<Vec<Vec<FieldElement>>> {
    torus_points_with_limit(q, n, TORUS_LIMIT)
}

fn torus_points_with_limit(q: u64, n: usize, limit: u128) -> Result<Vec<Vec<FieldElement>>> {
    if q < 2 {
        return Err(Error::UnsupportedField(q));
    }
    let needed = count(q - 1, n);
    if needed > limit {
        return Err(Error::budget("torus point", needed, limit));
    }
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..q as u32).map(move |a| {
                    let mut p = p.clone();
                    p.push(a);
                    p
                })
            })
            .collect();
    }
    Ok(out)
}

/// A linear code over `GF(q)` given by a generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: GaloisField,
    length: usize,
    generators: Vec<Vec<FieldElement>>,
    basis: Vec<Vec<FieldElement>>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order() && self.length == other.length && self.basis == other.basis
    }
}

/// Reduced row echelon form, zero rows dropped.
fn row_reduce(f: &GaloisField, rows: &[Vec<FieldElement>], length: usize) -> Vec<Vec<FieldElement>> {
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let mut rank = 0;
    for col in 0..length {
        let Some(pivot) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let scale = f.inv(m[rank][col]).expect("nonzero pivot");
        for x in m[rank].iter_mut() {
            *x = f.mul(*x, scale);
        }
        for i in 0..m.len() {
            if i != rank && m[i][col] != 0 {
                let factor = f.neg(m[i][col]);
                for j in 0..length {
                    let add = f.mul(factor, m[rank][j]);
                    m[i][j] = f.add(m[i][j], add);
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    m
}

impl LinearCode {
    pub fn new(field: GaloisField, length: usize, generators: Vec<Vec<FieldElement>>) -> Result<Self> {
        for row in &generators {
            if row.len() != length {
                return Err(Error::DimensionMismatch {
                    expected: length,
                    got: row.len(),
                });
            }
            if row.iter().any(|&x| x >= field.order()) {
                return Err(Error::InvalidInput("generator entry outside the field".into()));
            }
        }
        let basis = row_reduce(&field, &generators, length);
        Ok(LinearCode {
            field,
            length,
            generators,
            basis,
        })
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// The rows the code was built from.
    pub fn generator_rows(&self) -> &[Vec<FieldElement>] {
        &self.generators
    }

    /// Reduced row echelon basis.
    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    /// Number of codewords, `q^k`.
    pub fn size(&self) -> u128 {
        count(self.field.order() as u64, self.dimension())
    }

    /// A basis over the prime field: `α^j · b` for basis rows `b`, where
    /// `α^j` runs over a basis of `GF(q)` over `GF(p)`.
    fn prime_field_basis(&self) -> Vec<Vec<FieldElement>> {
        let f = &self.field;
        let p = f.characteristic();
        let mut out = Vec::new();
        for row in &self.basis {
            for j in 0..f.degree() {
                let scalar = p.pow(j);
                out.push(row.iter().map(|&x| f.mul(scalar, x)).collect());
            }
        }
        out
    }

    /// Calls `visit` on every codeword, stopping early when it returns false.
    ///
    /// Codewords are visited as an odometer over prime-field coordinates, so
    /// each step costs one or a few vector additions.
    fn for_each_codeword(&self, mut visit: impl FnMut(&[FieldElement]) -> bool) {
        let f = &self.field;
        let p = f.characteristic();
        let gens = self.prime_field_basis();
        let mut word = vec![0; self.length];
        let mut digits = vec![0u32; gens.len()];
        if !visit(&word) {
            return;
        }
        loop {
            let mut i = 0;
            loop {
                if i == gens.len() {
                    return;
                }
                for (w, g) in word.iter_mut().zip(&gens[i]) {
                    *w = f.add(*w, *g);
                }
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if !visit(&word) {
                return;
            }
        }
    }

    /// Exact minimum distance; `None` for the zero code.
    pub fn minimum_distance(&self) -> Result<Option<usize>> {
        self.minimum_distance_with_limit(CODEWORD_LIMIT)
    }

    pub fn minimum_distance_with_limit(&self, limit: u128) -> Result<Option<usize>> {
        if self.size() > limit {
            return Err(Error::budget("codeword", self.size(), limit));
        }
        if self.basis.is_empty() {
            return Ok(None);
        }
        let mut best = self.length;
        self.for_each_codeword(|w| {
            let weight = w.iter().filter(|&&x| x != 0).count();
            if weight > 0 && weight < best {
                best = weight;
            }
            best > 1
        });
        Ok(Some(best))
    }

    /// All codewords, sorted.
    pub fn codewords(&self) -> Result<Vec<Vec<FieldElement>>> {
        self.codewords_with_limit(LISTING_LIMIT)
    }

    pub fn codewords_with_limit(&self, limit: u128) -> Result<Vec<Vec<FieldElement>>> {
        if self.size() > limit {
            return Err(Error::budget("codeword listing", self.size(), limit));
        }
        let mut out = Vec::new();
        self.for_each_codeword(|w| {
            out.push(w.to_vec());
            true
        });
        out.sort();
        Ok(out)
    }

    /// Codewords `c` with `Σ c_i g_i = 0` for every generator row `g`.
    pub fn dual(&self) -> LinearCode {
        let f = &self.field;
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero row"))
            .collect();
        let mut rows = Vec::new();
        for free in (0..self.length).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; self.length];
            v[free] = 1;
            for (row, &pc) in self.basis.iter().zip(&pivots) {
                v[pc] = f.neg(row[free]);
            }
            rows.push(v);
        }
        LinearCode::new(f.clone(), self.length, rows).expect("entries are field elements")
    }

    /// `[n, k, d] Linear Code over GF(q)`.
    pub fn summary(&self) -> Result<String> {
        let d = self.minimum_distance()?.unwrap_or(0);
        Ok(format!(
            "[{}, {}, {}] Linear Code over GF({})",
            self.length,
            self.dimension(),
            d,
            self.field.order()
        ))
    }
}

/// An evaluation code together with the data it was built from.
#[derive(Clone, Debug, PartialEq)]
pub struct ToricCode {
    pub q: u64,
    pub torus_dim: usize,
    pub source_points: Vec<IntVector>,
    pub torus: Vec<Vec<FieldElement>>,
    pub code: LinearCode,
}

impl ToricCode {
    pub fn length(&self) -> usize {
        self.code.length()
    }

    pub fn dimension(&self) -> usize {
        self.code.dimension()
    }

    pub fn generator_rows(&self) -> &[Vec<FieldElement>] {
        self.code.generator_rows()
    }

    pub fn minimum_distance(&self) -> Result<Option<usize>> {
        self.code.minimum_distance()
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] Linear Code over GF({})", self.length, self.dimension(), self.field.order())
    }
}

/// The code spanned by the evaluations of the monomials `t^ℓ`, `ℓ ∈ points`,
/// at every point of the torus `(GF(q)^×)^n`.
pub fn toric_code(points: &[IntVector], q: u64) -> Result<ToricCode> {
    let field = GaloisField::new(q)?;
    let n = points
        .first()
        .map(IntVector::dim)
        .ok_or_else(|| Error::InvalidInput("a toric code needs at least one exponent vector".into()))?;
    let torus = torus_points_with_limit(q, n, LENGTH_LIMIT)?;
    let exps: Vec<Vec<i64>> = points
        .iter()
        .map(|p| {
            p.check_dim(n)?;
            p.to_i64s()
        })
        .collect::<Result<_>>()?;
    let rows = exps
        .iter()
        .map(|e| {
            torus
                .iter()
                .map(|t| t.iter().zip(e).fold(1, |acc, (&x, &k)| field.mul(acc, field.pow(x, k))))
                .collect()
        })
        .collect();
    let code = LinearCode::new(field, torus.len(), rows)?;
    Ok(ToricCode {
        q,
        torus_dim: n,
        source_points: points.to_vec(),
        torus,
        code,
    })
}

/// The Goppa-style code of `L(D)` evaluated on the torus, with its dual.
pub fn goppa_toric_code(d: &TDivisor, q: u64) -> Result<(ToricCode, LinearCode)> {
    let points = riemann_roch(d)?;
    let code = toric_code(&points, q)?;
    let dual = code.code.dual();
    Ok((code, dual))
}

/// The three polygon shapes with known distance bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HansenCase {
    /// Triangle with vertices `(0,0)`, `(a,a)`, `(0,2a)`.
    Isosceles,
    /// Triangle with vertices `(0,0)`, `(a,0)`, `(0,a)`.
    Standard,
    /// Rectangle with vertices `(0,0)`, `(a,0)`, `(0,b)`, `(a,b)`.
    Rectangle,
}

impl HansenCase {
    pub const ALL: [HansenCase; 3] = [HansenCase::Isosceles, HansenCase::Standard, HansenCase::Rectangle];

    /// The polygon of the case (`b` is ignored for the triangles).
    pub fn polytope(self, a: u32, b: u32) -> Result<LatticePolytope> {
        let (a, b) = (a as i64, b as i64);
        let corners: Vec<[i64; 2]> = match self {
            HansenCase::Isosceles => vec![[0, 0], [a, a], [0, 2 * a]],
            HansenCase::Standard => vec![[0, 0], [a, 0], [0, a]],
            HansenCase::Rectangle => vec![[0, 0], [a, 0], [0, b], [a, b]],
        };
        LatticePolytope::from_vertices(2, corners.into_iter().map(|c| IntVector::from(c).to_rational()).collect::<Vec<RationalVector>>())
    }

    fn hypothesis(self, a: u32, b: u32, q: u64) -> (bool, String) {
        match self {
            HansenCase::Isosceles => (q > 2 * a as u64 + 1, format!("q > 2a + 1 = {}", 2 * a + 1)),
            HansenCase::Standard => (q > a as u64 + 1, format!("q > a + 1 = {}", a + 1)),
            HansenCase::Rectangle => (q > a.max(b) as u64 + 1, format!("q > max(a, b) + 1 = {}", a.max(b) + 1)),
        }
    }
}

/// Length, dimension and distance lower bound for a Hansen polygon code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HansenBound {
    pub case: HansenCase,
    pub a: u32,
    pub b: u32,
    pub q: u64,
    pub n: u64,
    pub k: u64,
    pub d_lower: i64,
}

pub fn hansen_bound(case: HansenCase, a: u32, b: u32, q: u64) -> Result<HansenBound> {
    if a == 0 || (case == HansenCase::Rectangle && b == 0) {
        return Err(Error::InvalidInput("the side lengths must be positive".into()));
    }
    let (holds, needed) = case.hypothesis(a, b, q);
    if !holds {
        return Err(Error::HypothesisViolated(format!("{needed} is required, got q = {q}")));
    }
    let (ai, bi, qi) = (a as i64, b as i64, q as i64);
    let n = (qi - 1) * (qi - 1);
    let (k, d_lower) = match case {
        HansenCase::Isosceles => ((ai + 1) * (ai + 1), n - 2 * ai * (qi - 1)),
        HansenCase::Standard => ((ai + 1) * (ai + 2) / 2, n - ai * (qi - 1)),
        HansenCase::Rectangle => ((ai + 1) * (bi + 1), n - ai * (qi - 1) - bi * (qi - 1) + ai * bi),
    };
    Ok(HansenBound {
        case,
        a,
        b,
        q,
        n: n as u64,
        k: k as u64,
        d_lower,
    })
}

/// The bound next to the exhaustively computed code parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureCheck {
    pub bound: HansenBound,
    pub actual_k: usize,
    pub actual_d: usize,
    /// The bound is attained.
    pub equal: bool,
}

pub fn check_distance_conjecture(case: HansenCase, a: u32, b: u32, q: u64) -> Result<ConjectureCheck> {
    let bound = hansen_bound(case, a, b, q)?;
    let points = case.polytope(a, b)?.lattice_points()?;
    let code = toric_code(&points, q)?;
    let actual_d = code.minimum_distance()?.unwrap_or(0);
    Ok(ConjectureCheck {
        equal: actual_d as i64 == bound.d_lower,
        actual_k: code.dimension(),
        actual_d,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(xs: &[[i64; 2]]) -> Vec<IntVector> {
        xs.iter().map(|&p| IntVector::from(p)).collect()
    }

    #[test]
    fn torus_orders() {
        assert_eq!(torus_points(3, 2).unwrap(), [[1, 1], [1, 2], [2, 1], [2, 2]]);
        assert_eq!(torus_points(2, 2).unwrap(), [[1, 1]]);
        assert_eq!(torus_points(5, 1).unwrap().len(), 4);
        assert!(torus_points(11, 7).is_err());
    }

    #[test]
    fn triangle_code() {
        let c = toric_code(&pts(&[[0, 0], [1, 0], [0, 1]]), 3).unwrap();
        assert_eq!(c.generator_rows(), [[1, 1, 1, 1], [1, 1, 2, 2], [1, 2, 1, 2]]);
        assert_eq!(c.dimension(), 3);
        assert_eq!(c.code.codewords().unwrap().len(), 27);
        assert_eq!(c.minimum_distance().unwrap(), Some(2));
        assert_eq!(c.code.summary().unwrap(), "[4, 3, 2] Linear Code over GF(3)");
        let dual = c.code.dual();
        assert_eq!(dual.dimension(), 1);
        for w in dual.basis() {
            for g in c.generator_rows() {
                let f = c.code.field();
                assert_eq!(w.iter().zip(g).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y))), 0);
            }
        }
    }

    #[test]
    fn polyb_and_constants() {
        let polyb = pts(&[[0, 0], [0, 1], [1, 0], [1, 1], [0, 2], [1, 2], [2, 0], [2, 1], [0, 3], [3, 0]]);
        let c = toric_code(&polyb, 3).unwrap();
        assert_eq!(c.code.summary().unwrap(), "[4, 4, 1] Linear Code over GF(3)");
        let ones = toric_code(&pts(&[[0, 0]]), 3).unwrap();
        assert_eq!((ones.dimension(), ones.minimum_distance().unwrap()), (1, Some(4)));
        let inverse = toric_code(&pts(&[[-1, 0]]), 3).unwrap();
        assert_eq!(inverse.generator_rows(), [[1, 1, 2, 2]]);
    }

    #[test]
    fn hansen() {
        let b = hansen_bound(HansenCase::Standard, 1, 0, 3).unwrap();
        assert_eq!((b.n, b.k, b.d_lower), (4, 3, 2));
        let c = hansen_bound(HansenCase::Rectangle, 1, 1, 4).unwrap();
        assert_eq!((c.n, c.k, c.d_lower), (9, 4, 4));
        let a = hansen_bound(HansenCase::Isosceles, 1, 0, 5).unwrap();
        assert_eq!((a.n, a.k, a.d_lower), (16, 4, 8));
        assert!(matches!(hansen_bound(HansenCase::Isosceles, 1, 0, 3), Err(Error::HypothesisViolated(_))));
        let check = check_distance_conjecture(HansenCase::Standard, 1, 0, 3).unwrap();
        assert_eq!((check.bound.d_lower, check.actual_d, check.equal), (2, 2, true));
        let gf4 = check_distance_conjecture(HansenCase::Standard, 2, 0, 4).unwrap();
        assert!(gf4.actual_d as i64 >= gf4.bound.d_lower);
        assert_eq!(gf4.actual_k as u64, gf4.bound.k);
    }
}
