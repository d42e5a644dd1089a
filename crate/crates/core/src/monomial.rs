//! Printing Laurent monomials in the `x1^2/x2` session style.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

fn factor(name: &str, e: &BigInt) -> String {
    if e.is_one() {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

/// Formats `∏ x_i^{e_i}` with negative exponents moved to a denominator,
/// e.g. `1/(x1^6*x2^6)`, `x2/x1^2`, `1`.
pub fn format_laurent(exponents: &[BigInt], var: &str) -> String {
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (i, e) in exponents.iter().enumerate() {
        let name = format!("{var}{}", i + 1);
        if e.is_positive() {
            num.push(factor(&name, e));
        } else if e.is_negative() {
            den.push(factor(&name, &e.abs()));
        }
    }
    let top = if num.is_empty() { "1".to_string() } else { num.join("*") };
    match den.len() {
        0 => top,
        1 => format!("{top}/{}", den[0]),
        _ => format!("{top}/({})", den.join("*")),
    }
}

/// Formats a binomial `x^a - x^b` over nonnegative exponents.
pub fn format_binomial(lhs: &[BigInt], rhs: &[BigInt], var: &str) -> String {
    let side = |e: &[BigInt]| {
        if e.iter().all(Zero::is_zero) {
            "1".to_string()
        } else {
            format_laurent(e, var)
        }
    };
    format!("{} - {}", side(lhs), side(rhs))
}

/// Formats a Laurent monomial on an `n`-torus presented as
/// `k[x_1..x_n, x_{n+1}..x_{2n}]/(x_i x_{n+i} - 1)`, so `x_i^{-1}` is written
/// `x_{n+i}`, e.g. `x1^2*x4` for `x1^2/x2` with `n = 2`.
pub fn format_torus_monomial(exponents: &[BigInt], var: &str) -> String {
    let n = exponents.len();
    let mut doubled = vec![BigInt::zero(); 2 * n];
    for (i, e) in exponents.iter().enumerate() {
        if e.is_negative() {
            doubled[n + i] = -e;
        } else {
            doubled[i] = e.clone();
        }
    }
    format_laurent(&doubled, var)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(e: &[i64]) -> String {
        format_laurent(&e.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(), "x")
    }

    #[test]
    fn session_forms() {
        assert_eq!(f(&[-6, -6]), "1/(x1^6*x2^6)");
        assert_eq!(f(&[-3, -1]), "1/(x1^3*x2)");
        assert_eq!(f(&[-3, 0]), "1/x1^3");
        assert_eq!(f(&[-2, 1]), "x2/x1^2");
        assert_eq!(f(&[0, 0]), "1");
        assert_eq!(f(&[1, -2]), "x1/x2^2");
        assert_eq!(f(&[2, -2]), "x1^2/x2^2");
        assert_eq!(f(&[1, 0, 0, 0, 3]), "x1*x5^3");
    }

    #[test]
    fn torus_variables() {
        let t = |e: &[i64]| format_torus_monomial(&e.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(), "x");
        assert_eq!(t(&[0, 1]), "x2");
        assert_eq!(t(&[2, -1]), "x1^2*x4");
        assert_eq!(t(&[4, -3]), "x1^4*x4^3");
        assert_eq!(t(&[0, 0]), "1");
    }
}
