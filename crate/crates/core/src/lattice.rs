//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers. The Hermite
//! normal form is row-style: `u·m = h` with `h` in echelon form, positive
//! pivots, and entries above each pivot reduced into `[0, pivot)`. Golden
//! tests compare matrices through this convention.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer vector of fixed dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    /// The `i`-th standard basis vector of `Z^dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Greatest common divisor of the entries (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, a| g.gcd(a))
    }

    /// Entries as machine integers, for bounded enumeration loops.
    pub fn to_i64s(&self) -> Result<Vec<i64>> {
        self.0
            .iter()
            .map(|a| {
                a.to_i64()
                    .ok_or_else(|| Error::Overflow(format!("{a} does not fit in 64 bits")))
            })
            .collect()
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| BigRational::from(a.clone())).collect())
    }

    pub fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected,
                got: self.dim(),
            })
        }
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v.into_iter().map(BigInt::from).collect())
    }
}

impl From<&[i64]> for IntVector {
    fn from(v: &[i64]) -> Self {
        IntVector(v.iter().map(|&a| BigInt::from(a)).collect())
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> Self {
        Self::from(&v[..])
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

// Integers serialize as JSON numbers when they fit in 64 bits, as decimal
// strings otherwise; both forms are accepted on input.
pub(crate) mod big {
    use super::*;
    use serde::de::{self, Visitor};

    pub fn serialize<S: Serializer>(a: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        match a.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&a.to_string()),
        }
    }

    struct BigVisitor;

    impl Visitor<'_> for BigVisitor {
        type Value = BigInt;
        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("an integer or a decimal string")
        }
        fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<BigInt, E> {
            Ok(BigInt::from(v))
        }
        fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<BigInt, E> {
            Ok(BigInt::from(v))
        }
        fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<BigInt, E> {
            v.trim().parse().map_err(E::custom)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        d.deserialize_any(BigVisitor)
    }

    #[derive(Serialize, Deserialize)]
    #[serde(transparent)]
    pub struct Wrapped(#[serde(with = "self")] pub BigInt);
}

impl Serialize for IntVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|a| big::Wrapped(a.clone())))
    }
}

impl<'de> Deserialize<'de> for IntVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<big::Wrapped> = Vec::deserialize(d)?;
        Ok(IntVector(v.into_iter().map(|w| w.0).collect()))
    }
}

/// A rational vector; entries are kept in lowest terms by `BigRational`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(Vec<BigRational>);

impl RationalVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        RationalVector(entries)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn dot_int(&self, v: &IntVector) -> BigRational {
        self.0
            .iter()
            .zip(v.iter())
            .map(|(a, b)| a * BigRational::from(b.clone()))
            .sum()
    }

    /// Least common multiple of the denominators.
    pub fn denominator(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |l, a| l.lcm(a.denom()))
    }

    /// The vector scaled by its common denominator, as integers.
    pub fn clear_denominators(&self) -> IntVector {
        let d = self.denominator();
        IntVector(
            self.0
                .iter()
                .map(|a| (a * BigRational::from(d.clone())).to_integer())
                .collect(),
        )
    }

    /// `Some` when every entry is an integer.
    pub fn to_integral(&self) -> Option<IntVector> {
        self.0
            .iter()
            .map(|a| a.is_integer().then(|| a.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntVector)
    }
}

impl Index<usize> for RationalVector {
    type Output = BigRational;
    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|a| {
            if a.is_integer() {
                serde_json_like::Num::Int(a.to_integer())
            } else {
                serde_json_like::Num::Str(a.to_string())
            }
        }))
    }
}

impl<'de> Deserialize<'de> for RationalVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw: Vec<serde_json_like::Num> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|n| match n {
                serde_json_like::Num::Int(a) => Ok(BigRational::from(a)),
                serde_json_like::Num::Str(s) => s.trim().parse::<BigRational>().map_err(D::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(RationalVector)
    }
}

mod serde_json_like {
    use super::*;

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    pub enum Num {
        Int(#[serde(with = "super::big")] BigInt),
        Str(String),
    }
}

/// A rectangular integer matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: Vec<IntVector>,
    ncols: usize,
}

impl IntMatrix {
    pub fn new(rows: Vec<IntVector>, ncols: usize) -> Result<Self> {
        for r in &rows {
            r.check_dim(ncols)?;
        }
        Ok(IntMatrix { rows, ncols })
    }

    /// Builds a matrix from nonempty rows, taking the width from the first.
    pub fn from_rows(rows: Vec<IntVector>) -> Result<Self> {
        let ncols = rows
            .first()
            .map(IntVector::dim)
            .ok_or_else(|| Error::InvalidInput("matrix needs at least one row".into()))?;
        Self::new(rows, ncols)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| IntVector::from(*r)).collect())
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix {
            rows: (0..n).map(|i| IntVector::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            rows: vec![IntVector::zeros(ncols); nrows],
            ncols,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<IntVector> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &IntVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn transpose(&self) -> IntMatrix {
        let rows = (0..self.ncols)
            .map(|j| IntVector(self.rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        IntMatrix {
            rows,
            ncols: self.nrows(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.ncols,
                got: other.nrows(),
            });
        }
        let cols = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| IntVector(cols.rows.iter().map(|c| r.dot(c)).collect()))
            .collect();
        Ok(IntMatrix {
            rows,
            ncols: other.ncols,
        })
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &IntVector) -> Result<IntVector> {
        v.check_dim(self.ncols)?;
        Ok(IntVector(self.rows.iter().map(|r| r.dot(v)).collect()))
    }

    pub fn rank(&self) -> usize {
        if self.rows.is_empty() || self.ncols == 0 {
            return 0;
        }
        let (h, _) = hnf_raw(self);
        h.iter().filter(|r| !r.iter().all(Zero::is_zero)).count()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        let n = self.nrows();
        if n != self.ncols {
            return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
        }
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = self.rows.iter().map(|r| r.0.clone()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }

    pub(crate) fn to_rational_rows(&self) -> Vec<Vec<BigRational>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|a| BigRational::from(a.clone())).collect())
            .collect()
    }
}

impl Index<usize> for IntMatrix {
    type Output = IntVector;
    fn index(&self, i: usize) -> &IntVector {
        &self.rows[i]
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows: Vec<IntVector> = Vec::deserialize(d)?;
        let ncols = rows.first().map(IntVector::dim).unwrap_or(0);
        IntMatrix::new(rows, ncols).map_err(D::Error::custom)
    }
}

type Rows = Vec<Vec<BigInt>>;

fn rows_of(m: &IntMatrix) -> Rows {
    m.rows.iter().map(|r| r.0.clone()).collect()
}

fn matrix_of(rows: Rows, ncols: usize) -> IntMatrix {
    IntMatrix {
        rows: rows.into_iter().map(IntVector).collect(),
        ncols,
    }
}

fn identity_rows(n: usize) -> Rows {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn row_axpy(rows: &mut Rows, target: usize, source: usize, k: &BigInt) {
    let src = rows[source].clone();
    for (t, s) in rows[target].iter_mut().zip(&src) {
        *t -= k * s;
    }
}

fn negate_row(rows: &mut Rows, i: usize) {
    for a in rows[i].iter_mut() {
        *a = -std::mem::take(a);
    }
}

fn hnf_raw(m: &IntMatrix) -> (Rows, Rows) {
    let mut a = rows_of(m);
    let r = a.len();
    let mut u = identity_rows(r);
    let mut p = 0;
    for col in 0..m.ncols {
        if p == r {
            break;
        }
        loop {
            let best = (p..r)
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()));
            let Some(best) = best else { break };
            a.swap(p, best);
            u.swap(p, best);
            let mut clean = true;
            for i in p + 1..r {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[p][col]);
                row_axpy(&mut a, i, p, &q);
                row_axpy(&mut u, i, p, &q);
                clean &= a[i][col].is_zero();
            }
            if clean {
                break;
            }
        }
        if a[p][col].is_zero() {
            continue;
        }
        if a[p][col].is_negative() {
            negate_row(&mut a, p);
            negate_row(&mut u, p);
        }
        for i in 0..p {
            let q = a[i][col].div_floor(&a[p][col]);
            if !q.is_zero() {
                row_axpy(&mut a, i, p, &q);
                row_axpy(&mut u, i, p, &q);
            }
        }
        p += 1;
    }
    (a, u)
}

/// Row-style Hermite normal form: returns `(h, u)` with `u` unimodular and
/// `u·m = h`. Zero rows of `h` sit at the bottom.
pub fn hermite_normal_form(m: &IntMatrix) -> Result<(IntMatrix, IntMatrix)> {
    if m.is_empty() {
        return Err(Error::InvalidInput("hermite_normal_form of an empty matrix".into()));
    }
    let (h, u) = hnf_raw(m);
    let r = m.nrows();
    Ok((matrix_of(h, m.ncols), matrix_of(u, r)))
}

/// Nonzero rows of the Hermite normal form: a canonical basis of the row lattice.
pub fn lattice_basis(rows: &[IntVector], ncols: usize) -> IntMatrix {
    if rows.is_empty() {
        return IntMatrix::zeros(0, ncols);
    }
    let m = IntMatrix {
        rows: rows.to_vec(),
        ncols,
    };
    let (h, _) = hnf_raw(&m);
    matrix_of(
        h.into_iter().filter(|r| !r.iter().all(Zero::is_zero)).collect(),
        ncols,
    )
}

/// True when the two row sets generate the same subgroup of `Z^n`.
pub fn same_lattice(a: &[IntVector], b: &[IntVector], ncols: usize) -> bool {
    lattice_basis(a, ncols) == lattice_basis(b, ncols)
}

/// True when `v` lies in the integer span of `rows`.
pub fn in_integer_span(rows: &[IntVector], v: &IntVector) -> bool {
    let n = v.dim();
    if rows.is_empty() {
        return v.is_zero();
    }
    let m = IntMatrix {
        rows: rows.to_vec(),
        ncols: n,
    };
    solve_integer(&m.transpose(), v).is_some()
}

/// Smith normal form: `(s, u, v)` with `u·m·v = s` diagonal and
/// `s[0][0] | s[1][1] | …`, all diagonal entries nonnegative.
pub fn smith_normal_form(m: &IntMatrix) -> Result<(IntMatrix, IntMatrix, IntMatrix)> {
    if m.is_empty() {
        return Err(Error::InvalidInput("smith_normal_form of an empty matrix".into()));
    }
    let (r, c) = (m.nrows(), m.ncols);
    let mut a = rows_of(m);
    let mut u = identity_rows(r);
    // Column operations are tracked on v transposed, so they become row operations.
    let mut vt = identity_rows(c);
    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            a.swap(t, bi);
            u.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            vt.swap(t, bj);

            let mut clean = true;
            for i in t + 1..r {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..c {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut() {
                    let s = row[t].clone();
                    row[j] -= &q * s;
                }
                row_axpy(&mut vt, j, t, &q);
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut a, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if t < r && t < c && a[t][t].is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut u, t);
        }
    }
    let v = matrix_of(vt, c).transpose();
    Ok((matrix_of(a, c), matrix_of(u, r), v))
}

/// Rows form a basis of `{x ∈ Z^ncols : m·xᵀ = 0}`, in Hermite normal form.
/// The result has zero rows when the kernel is trivial.
pub fn integer_kernel_basis(m: &IntMatrix) -> IntMatrix {
    let n = m.ncols;
    if m.is_empty() {
        return IntMatrix::identity(n);
    }
    if n == 0 {
        return IntMatrix::zeros(0, 0);
    }
    let (h, u) = hnf_raw(&m.transpose());
    let kernel: Vec<IntVector> = h
        .iter()
        .zip(u)
        .filter(|(hr, _)| hr.iter().all(Zero::is_zero))
        .map(|(_, ur)| IntVector(ur))
        .collect();
    lattice_basis(&kernel, n)
}

/// Divides out the content of a nonzero vector.
pub fn primitive(v: &IntVector) -> Result<IntVector> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::InvalidInput("primitive vector of zero".into()));
    }
    Ok(IntVector(v.iter().map(|a| a / &g).collect()))
}

/// One rational solution of `a·x = b` (free variables set to zero).
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational], ncols: usize) -> Option<Vec<BigRational>> {
    let r = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut row = row.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut p = 0;
    for col in 0..ncols {
        let Some(i) = (p..r).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(p, i);
        let inv = m[p][col].recip();
        for x in m[p].iter_mut() {
            *x *= &inv;
        }
        for i in 0..r {
            if i != p && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let src = m[p].clone();
                for (x, s) in m[i].iter_mut().zip(&src) {
                    *x -= &f * s;
                }
            }
        }
        pivots.push(col);
        p += 1;
        if p == r {
            break;
        }
    }
    if m[p..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = m[i][ncols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix over the rationals.
pub fn inverse_rational(m: &IntMatrix) -> Option<Vec<Vec<BigRational>>> {
    let n = m.nrows();
    if n != m.ncols || m.det().ok()?.is_zero() {
        return None;
    }
    let a = m.to_rational_rows();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<BigRational> = (0..n)
            .map(|i| if i == j { BigRational::one() } else { BigRational::zero() })
            .collect();
        cols.push(solve_rational(&a, &e, n)?);
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// An integer solution of `a·x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &IntVector) -> Option<IntVector> {
    let (r, c) = (a.nrows(), a.ncols());
    if b.dim() != r {
        return None;
    }
    if r == 0 || c == 0 {
        return b.is_zero().then(|| IntVector::zeros(c));
    }
    let (s, u, v) = smith_normal_form(a).ok()?;
    let ub = u.apply(b).ok()?;
    let mut y = vec![BigInt::zero(); c];
    for i in 0..r {
        let d = if i < c { s.get(i, i).clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !ub[i].is_zero() {
                return None;
            }
        } else {
            let (q, rem) = ub[i].div_rem(&d);
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    v.apply(&IntVector(y)).ok()
}

/// A lattice given by an integral basis (rows) inside `Z^degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lattice {
    basis: IntMatrix,
}

impl Lattice {
    pub fn new(basis: IntMatrix) -> Result<Self> {
        if basis.rank() != basis.nrows() {
            return Err(Error::InvalidInput("lattice basis rows are dependent".into()));
        }
        Ok(Lattice { basis })
    }

    /// The standard lattice `Z^n`.
    pub fn standard(n: usize) -> Self {
        Lattice {
            basis: IntMatrix::identity(n),
        }
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn degree(&self) -> usize {
        self.basis.ncols()
    }

    pub fn is_standard(&self) -> bool {
        self.basis == IntMatrix::identity(self.degree())
    }

    fn require_full_rank(&self) -> Result<()> {
        if self.rank() != self.degree() {
            return Err(Error::InvalidInput(format!(
                "lattice of rank {} in degree {} is not full rank",
                self.rank(),
                self.degree()
            )));
        }
        Ok(())
    }

    /// Rational coordinates of an ambient vector with respect to the basis.
    pub fn coordinates(&self, v: &IntVector) -> Result<RationalVector> {
        self.require_full_rank()?;
        v.check_dim(self.degree())?;
        let bt = self.basis.transpose().to_rational_rows();
        let rhs: Vec<BigRational> = v.iter().map(|a| BigRational::from(a.clone())).collect();
        solve_rational(&bt, &rhs, self.rank())
            .map(RationalVector)
            .ok_or_else(|| Error::Inconsistent("full-rank basis system unsolvable".into()))
    }

    /// The ambient vector with the given integer coordinates.
    pub fn from_coordinates(&self, c: &IntVector) -> Result<IntVector> {
        c.check_dim(self.rank())?;
        self.basis.transpose().apply(c)
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        self.coordinates(v)
            .map(|c| c.to_integral().is_some())
            .unwrap_or(false)
    }
}

/// The dual lattice as an integral matrix together with a common denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualLatticeData {
    pub rescaled_basis: IntMatrix,
    #[serde(with = "big")]
    pub denominator: BigInt,
}

impl DualLatticeData {
    /// The lattice generated by the rescaled rows (that is, `denominator · L*`).
    pub fn rescaled_lattice(&self) -> Result<Lattice> {
        Lattice::new(self.rescaled_basis.clone())
    }
}

/// `L* = {v : ⟨v, w⟩ ∈ Z for all w ∈ L}` with the minimal denominator `d`
/// such that `d·L*` is integral; the rescaled basis is in Hermite normal form.
pub fn dual_lattice(l: &Lattice) -> Result<DualLatticeData> {
    l.require_full_rank()?;
    let n = l.degree();
    let inv = inverse_rational(&l.basis)
        .ok_or_else(|| Error::Inconsistent("full-rank basis is singular".into()))?;
    // Rows of the dual basis are the columns of B⁻¹.
    let dual: Vec<RationalVector> = (0..n)
        .map(|j| RationalVector((0..n).map(|i| inv[i][j].clone()).collect()))
        .collect();
    let d = dual.iter().fold(BigInt::one(), |acc, r| acc.lcm(&r.denominator()));
    let dq = BigRational::from(d.clone());
    let rows: Vec<IntVector> = dual
        .iter()
        .map(|r| IntVector(r.0.iter().map(|a| (a * &dq).to_integer()).collect()))
        .collect();
    Ok(DualLatticeData {
        rescaled_basis: lattice_basis(&rows, n),
        denominator: d,
    })
}

/// Recovers the lattice whose dual is described by `data`.
pub fn lattice_from_dual(data: &DualLatticeData) -> Result<Lattice> {
    let n = data.rescaled_basis.ncols();
    let scaled = Lattice::new(data.rescaled_basis.clone())?;
    let dd = dual_lattice(&scaled)?;
    // (L*/d)* = d·L, so L = (rows of dd)/dd.denominator · (1/d) inverted; work it out exactly.
    let factor = BigRational::new(data.denominator.clone(), dd.denominator.clone());
    let rows: Vec<IntVector> = dd
        .rescaled_basis
        .rows()
        .iter()
        .map(|r| {
            let q: Vec<BigRational> = r.iter().map(|a| BigRational::from(a.clone()) * &factor).collect();
            RationalVector(q)
                .to_integral()
                .ok_or_else(|| Error::Inconsistent("dual of a dual is not integral".into()))
        })
        .collect::<Result<_>>()?;
    Lattice::new(lattice_basis(&rows, n))
}
