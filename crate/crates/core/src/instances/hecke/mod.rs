//! The Hecke algebra `H_q(S_n)` with its Murphy basis; `q = 1` gives the
//! group algebra of the symmetric group.

pub mod algebra;
pub mod perm;
pub mod tableau;

use std::sync::Arc;

use algebra::Murphy;
pub use tableau::{partitions, standard_tableaux, Partition, Tableau};

use super::{GateKind, Gates, Instance, InstanceKind};
use crate::cellular::{AlgebraElement, Cell, CellDatum, ContentTable};
use crate::error::{Error, Result};
use crate::field::{quantum_integer, FieldKind, Scalar};

/// Extra data carried by a Hecke instance.
pub struct HeckeData {
    pub n: usize,
    pub q: Scalar,
    pub shapes: Vec<Partition>,
    pub tableaux: Vec<Vec<Tableau>>,
    pub murphy: Arc<Murphy>,
}

impl HeckeData {
    /// `T_{s_i}` for 1-based `i`, in Murphy coordinates.
    pub fn generator(&self, field: FieldKind, i: usize) -> AlgebraElement {
        let tb = self.murphy.tbasis();
        let w = perm::transposition(self.n, i - 1, i);
        AlgebraElement::from_dense(field, &self.murphy.from_t(&tb.t(&w)))
    }

    /// Any T-basis element, in Murphy coordinates.
    pub fn t_element(&self, field: FieldKind, w: &[u8]) -> AlgebraElement {
        AlgebraElement::from_dense(field, &self.murphy.from_t(&self.murphy.tbasis().t(w)))
    }
}

/// `c_t(i) = [c - r]_q` for the node of `i` in `t`.
pub fn content(t: &Tableau, i: usize, q: &Scalar) -> Result<Scalar> {
    let (r, c) = t.position(i);
    quantum_integer(c as i64 - r as i64, q)
}

pub fn build_hecke(n: usize, field: FieldKind, q: Scalar, gates: Gates) -> Result<Instance> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    if !q.belongs_to(field) && !q.belongs_to(field.base().kind()) {
        return Err(Error::Invalid(format!("q = {q} is not in {field}")));
    }
    let q = field.embed(&q);
    if q.is_zero() {
        return Err(Error::Precondition("q must be invertible".into()));
    }
    gates.check(GateKind::HeckeConstruction, n, field)?;

    let murphy = Arc::new(Murphy::new(n, field, q.clone()));
    let shapes = murphy.shapes.clone();
    let tableaux = murphy.tableaux.clone();

    let cells: Vec<Cell> = shapes
        .iter()
        .zip(&tableaux)
        .map(|(shape, ts)| {
            let dominates = ts.iter().map(|s| ts.iter().map(|t| s != t && s.dominates(t)).collect()).collect();
            Cell { label: shape.to_string(), tableaux: ts.iter().map(ToString::to_string).collect(), dominates }
        })
        .collect();
    let greater = shapes
        .iter()
        .map(|a| shapes.iter().map(|b| a != b && a.dominates(b)).collect())
        .collect();
    let datum = CellDatum::new(field, cells, greater, murphy.clone())?;

    let mut contents = Vec::new();
    for ts in &tableaux {
        for t in ts {
            contents.push((1..=n).map(|i| content(t, i, &q)).collect::<Result<Vec<_>>>()?);
        }
    }
    let tb = murphy.tbasis();
    let jm = (1..=n)
        .map(|i| AlgebraElement::from_dense(field, &murphy.from_t(&tb.jm_element(i))))
        .collect();
    let data = HeckeData { n, q, shapes, tableaux, murphy };
    let generators = (1..n).map(|i| data.generator(field, i)).collect();
    Ok(Instance {
        kind: InstanceKind::Hecke(data),
        datum,
        table: ContentTable { contents, jm },
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::BaseField;

    fn generic() -> (FieldKind, Scalar) {
        let k = FieldKind::functions(BaseField::Rationals, 'q');
        let q = k.generator().unwrap();
        (k, q)
    }

    #[test]
    fn contents_n2() {
        let (k, q) = generic();
        let h = build_hecke(2, k, q.clone(), Gates::default()).unwrap();
        assert_eq!(h.table.contents[0], vec![k.zero(), k.one()]);
        assert_eq!(h.table.contents[1], vec![k.zero(), -q.inv().unwrap()]);
    }

    #[test]
    fn inner_product_of_trivial_cell() {
        let (k, q) = generic();
        let h = build_hecke(2, k, q.clone(), Gates::default()).unwrap();
        assert_eq!(h.datum.module(0).inner_product(0, 0), &k.one() + &q);
    }

    #[test]
    fn q_must_be_invertible() {
        assert!(build_hecke(2, FieldKind::Rationals, Scalar::rational(0, 1), Gates::default()).is_err());
    }
}
