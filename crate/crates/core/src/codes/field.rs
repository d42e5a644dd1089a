//! Finite fields `GF(q)` for `q ≤ 64`, by lookup tables.
//!
//! Elements are numbered `0..q`. For `q = p^m` the number `Σ c_i p^i` stands
//! for the residue class of `Σ c_i α^i`, where `α` is a root of the defining
//! polynomial below. For prime `q` this is ordinary integer arithmetic mod q.

use crate::affine::prime_power;
use crate::error::{Error, Result};

/// A field element, numbered as described in the module docs.
pub type FieldElement = u32;

/// Defining polynomials for the non-prime fields, as coefficient lists from
/// the constant term up, leading coefficient omitted. These are the Conway
/// polynomials, so the class of `x` generates the multiplicative group.
pub const DEFINING_POLYNOMIALS: [(u64, &[u32]); 9] = [
    (4, &[1, 1]),
    (8, &[1, 1, 0]),
    (16, &[1, 1, 0, 0]),
    (32, &[1, 0, 1, 0, 0]),
    (64, &[1, 1, 0, 1, 1, 0]),
    (9, &[2, 2]),
    (27, &[1, 2, 0]),
    (25, &[2, 4]),
    (49, &[3, 6]),
];

/// Arithmetic tables for one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    q: u32,
    p: u32,
    degree: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

fn digits(x: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m).map(|i| x / p.pow(i) % p).collect()
}

fn number(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl GaloisField {
    /// `GF(q)`; errors unless `q` is a prime power with a tabulated
    /// defining polynomial (every prime power up to 64).
    pub fn new(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::UnsupportedField(q))?;
        if q > 64 {
            return Err(Error::UnsupportedField(q));
        }
        let modulus: Vec<u32> = if m == 1 {
            Vec::new()
        } else {
            DEFINING_POLYNOMIALS
                .iter()
                .find(|(size, _)| *size == q)
                .map(|(_, c)| c.to_vec())
                .ok_or(Error::UnsupportedField(q))?
        };
        let (q, p) = (q as u32, p as u32);
        let idx = |a: u32, b: u32| (a * q + b) as usize;
        let mut add = vec![0; (q * q) as usize];
        let mut mul = vec![0; (q * q) as usize];
        for a in 0..q {
            let da = digits(a, p, m);
            for b in 0..q {
                let db = digits(b, p, m);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[idx(a, b)] = number(&sum, p);
                mul[idx(a, b)] = if m == 1 {
                    a * b % p
                } else {
                    // Schoolbook product, then reduce with x^m = −Σ c_i x^i.
                    let mut prod = vec![0u32; (2 * m - 1) as usize];
                    for (i, x) in da.iter().enumerate() {
                        for (j, y) in db.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    for top in (m as usize..prod.len()).rev() {
                        let c = prod[top];
                        prod[top] = 0;
                        for (i, coef) in modulus.iter().enumerate() {
                            let at = top - m as usize + i;
                            prod[at] = (prod[at] + c * (p - coef) % p) % p;
                        }
                    }
                    number(&prod[..m as usize], p)
                };
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[idx(a, b)] == 0).expect("group")).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[idx(a, b)] == 1).unwrap_or(0) })
            .collect();
        Ok(GaloisField {
            q,
            p,
            degree: m,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// `a^e` for any integer `e`; `a` must be nonzero when `e < 0`.
    pub fn pow(&self, a: FieldElement, e: i64) -> FieldElement {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let mut e = e.rem_euclid(self.q as i64 - 1);
        let (mut acc, mut base) = (1, a);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// The nonzero elements in increasing numbering.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> {
        1..self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        let f3 = GaloisField::new(3).unwrap();
        assert_eq!(f3.add(1, 2), 0);
        let f4 = GaloisField::new(4).unwrap();
        // α = 2, α + 1 = 3.
        assert_eq!(f4.mul(2, 2), 3);
        let f8 = GaloisField::new(8).unwrap();
        assert!(f8.units().any(|a| f8.multiplicative_order(a) == Some(7)));
        assert!(matches!(GaloisField::new(6), Err(Error::UnsupportedField(6))));
        assert!(matches!(GaloisField::new(81), Err(Error::UnsupportedField(81))));
    }

    #[test]
    fn every_table_is_a_field_with_primitive_root() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64] {
            let f = GaloisField::new(q).unwrap();
            let q = q as u32;
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in [1, q - 1] {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            // The class of x (numbered p) generates the unit group.
            if f.degree() > 1 {
                assert_eq!(f.multiplicative_order(f.characteristic()), Some(q - 1), "q={q}");
            }
        }
    }
}
