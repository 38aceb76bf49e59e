//! The lifting polynomials `ε_N`.
//!
//! `(X + Y)^{2N-1} = ε_N(X, Y) + ε_N(Y, X)` with
//! `ε_N(X, Y) = Σ_{i<N} C(2N-1, i) X^{2N-1-i} Y^i`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldKind, Poly};
use crate::linalg::Matrix;

fn binomials(m: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 1..=m {
        let next = &row[k as usize - 1] * BigInt::from(m - k + 1) / BigInt::from(k);
        row.push(next);
    }
    row
}

/// Integer polynomial in two commuting variables, `(i, j) ↦ coeff of X^i Y^j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Bivariate(pub BTreeMap<(u32, u32), BigInt>);

impl Bivariate {
    pub fn monomial(c: BigInt, i: u32, j: u32) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert((i, j), c);
        }
        Bivariate(m)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (k, c) in &other.0 {
            let e = m.entry(*k).or_insert_with(BigInt::zero);
            *e += c;
            if e.is_zero() {
                m.remove(k);
            }
        }
        Bivariate(m)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&Bivariate(other.0.iter().map(|(k, c)| (*k, -c)).collect()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Bivariate::default();
        for ((a, b), c) in &self.0 {
            for ((x, y), d) in &other.0 {
                out = out.add(&Bivariate::monomial(c * d, a + x, b + y));
            }
        }
        out
    }

    /// `X ↔ Y`.
    pub fn swap(&self) -> Self {
        Bivariate(self.0.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect())
    }

    /// Whether every monomial is divisible by `X^a Y^b`.
    pub fn divisible_by(&self, a: u32, b: u32) -> bool {
        self.0.keys().all(|&(i, j)| i >= a && j >= b)
    }
}

/// `ε_N(X, Y)`.
pub fn epsilon_bivariate(n: u32) -> Bivariate {
    assert!(n >= 1);
    let m = 2 * n - 1;
    let c = binomials(m);
    (0..n).fold(Bivariate::default(), |acc, i| acc.add(&Bivariate::monomial(c[i as usize].clone(), m - i, i)))
}

/// Integer coefficients of `ε_N(X) = ε_N(X, 1 - X)`, constant term first.
pub fn epsilon_coefficients(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    if n == 1 {
        return vec![BigInt::zero(), BigInt::one()];
    }
    let m = 2 * n - 1;
    let c = binomials(m);
    let mut out = vec![BigInt::zero(); m as usize + 1];
    for i in 0..n {
        // C(m, i) X^{m-i} (1 - X)^i
        let ci = binomials(i);
        for (l, b) in ci.iter().enumerate() {
            let sign = if l % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            out[(m - i) as usize + l] += &c[i as usize] * b * sign;
        }
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

pub fn epsilon_poly(field: FieldKind, n: u32) -> Poly {
    Poly::new(field, epsilon_coefficients(n).iter().map(|c| field.from_bigint(c)).collect())
}

/// `e = ε_N(x)`, checked to be idempotent.
pub fn lift_idempotent(x: &Matrix, n: u32) -> Result<Matrix> {
    if !x.is_square() {
        return Err(Error::NotSquare { rows: x.rows(), cols: x.cols() });
    }
    let e = x.eval_poly(&epsilon_poly(x.field(), n.max(1)));
    if !e.is_idempotent() {
        return Err(Error::Precondition(format!("ε_{n}(x) is not idempotent; x^2 - x is not nilpotent of degree <= {n}")));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldKind = FieldKind::Rationals;

    #[test]
    fn small_cases() {
        assert_eq!(epsilon_poly(Q, 1), Poly::x(Q));
        assert_eq!(epsilon_poly(Q, 2), Poly::from_i64(Q, &[0, 0, 3, -2]));
        // ε_3 = 10X^3 - 15X^4 + 6X^5
        assert_eq!(epsilon_poly(Q, 3), Poly::from_i64(Q, &[0, 0, 0, 10, -15, 6]));
    }

    #[test]
    fn partition_of_unity() {
        for n in 1..=6 {
            let e = epsilon_poly(Q, n);
            let one_minus_x = Poly::from_i64(Q, &[1, -1]);
            // ε(1 - X) by composition
            let composed = e.coeffs().iter().rev().fold(Poly::zero(Q), |acc, c| acc.mul(&one_minus_x).add(&Poly::constant(Q, c.clone())));
            assert!(e.add(&composed).is_one(), "N = {n}");
        }
    }

    #[test]
    fn congruences() {
        for n in 2..=4 {
            let e = epsilon_bivariate(n);
            let top = Bivariate::monomial(BigInt::one(), 2 * n - 1, 0);
            assert!(e.sub(&top).divisible_by(1, 1));
            assert!(e.divisible_by(n, 0));
            assert!(e.mul(&e.swap()).divisible_by(n, n));
        }
    }

    #[test]
    fn lifting() {
        let x = Matrix::from_i64(Q, &[&[1, 3], &[0, 0]]);
        assert_eq!(lift_idempotent(&x, 2).unwrap(), x);
        let x = Matrix::from_i64(Q, &[&[1, 1], &[0, 0]]).add(&Matrix::from_i64(Q, &[&[0, 4], &[0, 0]]));
        assert_eq!(lift_idempotent(&x, 2).unwrap(), x);
        // (1,0)-diagonal, x^2 ≠ x
        let x = Matrix::from_i64(Q, &[&[1, 1, 2], &[0, 0, 5], &[0, 0, 0]]);
        assert!(!x.is_idempotent());
        let e = lift_idempotent(&x, 3).unwrap();
        assert!(e.sub(&x).diag().iter().all(|c| c.is_zero()));
        assert!(lift_idempotent(&Matrix::from_i64(Q, &[&[2]]), 2).is_err());
    }
}
