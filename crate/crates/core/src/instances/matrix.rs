//! The full matrix algebra `M_n(R)`: one cell, basis `e_ij`, JM elements
//! `L_i = e_ii`.

use std::sync::Arc;

use super::{Instance, InstanceKind};
use crate::cellular::{AlgebraElement, Cell, CellDatum, ContentTable, Multiplication};
use crate::error::{Error, Result};
use crate::field::{FieldKind, Scalar};

struct MatrixUnits {
    field: FieldKind,
    n: usize,
}

impl Multiplication for MatrixUnits {
    fn dim(&self) -> usize {
        self.n * self.n
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        let (a, b, c, d) = (i / self.n, i % self.n, j / self.n, j % self.n);
        if b == c {
            v[a * self.n + d] = self.field.one();
        }
        v
    }

    fn one(&self) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        for i in 0..self.n {
            v[i * self.n + i] = self.field.one();
        }
        v
    }

    fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let mut out = vec![self.field.zero(); n * n];
        for a in 0..n {
            for b in 0..n {
                let xa = &x[a * n + b];
                if xa.is_zero() {
                    continue;
                }
                for d in 0..n {
                    let yb = &y[b * n + d];
                    if !yb.is_zero() {
                        out[a * n + d] += &(xa * yb);
                    }
                }
            }
        }
        out
    }
}

pub fn build_matrix_algebra(field: FieldKind, n: usize) -> Result<Instance> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let cell = Cell::totally_ordered("1", (1..=n).map(|t| t.to_string()).collect());
    let datum = CellDatum::new(field, vec![cell], vec![vec![false]], Arc::new(MatrixUnits { field, n }))?;
    let contents = (0..n)
        .map(|t| (0..n).map(|i| if i == t { field.one() } else { field.zero() }).collect())
        .collect();
    let jm = (0..n).map(|i| AlgebraElement::basis(field, i * n + i)).collect();
    let generators = (0..n * n).map(|i| AlgebraElement::basis(field, i)).collect();
    Ok(Instance { kind: InstanceKind::Matrix { n }, datum, table: ContentTable { contents, jm }, generators })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_products() {
        let m = build_matrix_algebra(FieldKind::Rationals, 3).unwrap();
        // e_12 e_23 = e_13
        assert_eq!(m.datum.mul(&m.datum.basis(1), &m.datum.basis(5)), m.datum.basis(2));
        let one = build_matrix_algebra(FieldKind::Rationals, 1).unwrap();
        assert_eq!(one.table.jm[0], one.datum.one());
    }
}
