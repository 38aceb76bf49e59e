//! `A = R[X]/(∏(X - c_j))` with cellular basis `a_i = ∏_{j<i}(X - c_j)` and
//! the single JM element `x`, so that `a_i x = c_i a_i + a_{i+1}`.

use std::sync::Arc;

use super::{Instance, InstanceKind};
use crate::cellular::{AlgebraElement, Cell, CellDatum, ContentTable, Multiplication};
use crate::error::{Error, Result};
use crate::field::{FieldKind, Poly, Scalar};

pub struct ToyAlgebra {
    field: FieldKind,
    contents: Vec<Scalar>,
    modulus: Poly,
}

impl ToyAlgebra {
    fn n(&self) -> usize {
        self.contents.len()
    }

    /// Basis index of `a_i` (1-based `i`): `a_n` comes first.
    fn index_of(&self, i: usize) -> usize {
        self.n() - i
    }

    fn to_poly(&self, x: &[Scalar]) -> Poly {
        // Horner in the Newton basis: b_1 + (X - c_1)(b_2 + (X - c_2)(...))
        let mut acc = Poly::zero(self.field);
        for i in (1..=self.n()).rev() {
            acc = acc.mul(&Poly::linear(self.field, &self.contents[i - 1]));
            acc = acc.add(&Poly::constant(self.field, x[self.index_of(i)].clone()));
        }
        acc
    }

    fn from_poly(&self, p: &Poly) -> Vec<Scalar> {
        let mut rest = p.divrem(&self.modulus).1;
        let mut out = vec![self.field.zero(); self.n()];
        for i in 1..=self.n() {
            let (q, r) = rest.divide_linear(&self.contents[i - 1]);
            out[self.index_of(i)] = r;
            rest = q;
        }
        debug_assert!(rest.is_zero());
        out
    }
}

impl Multiplication for ToyAlgebra {
    fn dim(&self) -> usize {
        self.n()
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut x = vec![self.field.zero(); self.n()];
        let mut y = x.clone();
        x[i] = self.field.one();
        y[j] = self.field.one();
        self.product(&x, &y)
    }

    fn one(&self) -> Vec<Scalar> {
        self.from_poly(&Poly::one(self.field))
    }

    fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.from_poly(&self.to_poly(x).mul(&self.to_poly(y)))
    }
}

pub fn build_toy(field: FieldKind, contents: Vec<Scalar>) -> Result<Instance> {
    let n = contents.len();
    if n == 0 {
        return Err(Error::Invalid("the toy algebra needs at least one content".into()));
    }
    let contents: Vec<Scalar> = contents.iter().map(|c| field.embed(c)).collect();
    let modulus = contents
        .iter()
        .fold(Poly::one(field), |acc, c| acc.mul(&Poly::linear(field, c)));
    let alg = Arc::new(ToyAlgebra { field, contents: contents.clone(), modulus });
    // cell l is λ = n - l; larger λ is more dominant
    let cells: Vec<Cell> = (0..n)
        .map(|l| Cell::totally_ordered((n - l).to_string(), vec![(n - l).to_string()]))
        .collect();
    let greater = (0..n).map(|l| (0..n).map(|m| l < m).collect()).collect();
    let x = AlgebraElement::from_dense(field, &alg.from_poly(&Poly::x(field)));
    let datum = CellDatum::new(field, cells, greater, alg)?;
    let table = ContentTable {
        contents: (0..n).map(|l| vec![contents[n - 1 - l].clone()]).collect(),
        jm: vec![x.clone()],
    };
    Ok(Instance { kind: InstanceKind::Toy { contents }, datum, table, generators: vec![x] })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&c| Scalar::rational(c, 1)).collect()
    }

    #[test]
    fn a2_times_x_is_a2() {
        let t = build_toy(FieldKind::Rationals, q(&[0, 1])).unwrap();
        let a2 = t.datum.basis(0);
        let x = &t.table.jm[0];
        assert_eq!(t.datum.mul(&a2, x), a2);
        // x = c_1 a_1 + a_2 = a_2 when c_1 = 0
        assert_eq!(x, &a2);
    }

    #[test]
    fn one_dimensional() {
        let t = build_toy(FieldKind::Rationals, q(&[5])).unwrap();
        assert_eq!(t.table.jm[0], t.datum.one().scale(&Scalar::rational(5, 1)));
    }

    #[test]
    fn newton_round_trip() {
        let t = build_toy(FieldKind::Rationals, q(&[0, 1, 3])).unwrap();
        for i in 0..3 {
            assert_eq!(t.datum.mul(&t.datum.basis(i), &t.datum.one()), t.datum.basis(i));
        }
    }
}
