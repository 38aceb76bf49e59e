use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::field::{FieldKind, Scalar};

/// Sparse element of a cellular algebra: basis index to nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    field: FieldKind,
    coeffs: BTreeMap<usize, Scalar>,
}

impl AlgebraElement {
    pub fn zero(field: FieldKind) -> Self {
        AlgebraElement { field, coeffs: BTreeMap::new() }
    }

    pub fn basis(field: FieldKind, idx: usize) -> Self {
        AlgebraElement { field, coeffs: BTreeMap::from([(idx, field.one())]) }
    }

    pub fn from_pairs(field: FieldKind, pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut out = AlgebraElement::zero(field);
        for (i, c) in pairs {
            out.add_term(i, &c);
        }
        out
    }

    pub fn from_dense(field: FieldKind, v: &[Scalar]) -> Self {
        let coeffs = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, field.embed(c)))
            .collect();
        AlgebraElement { field, coeffs }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); dim];
        for (&i, c) in &self.coeffs {
            v[i] = c.clone();
        }
        v
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: usize) -> Scalar {
        self.coeffs.get(&idx).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn add_term(&mut self, idx: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let c = self.field.embed(c);
        let e = self.coeffs.entry(idx).or_insert_with(|| self.field.zero());
        *e += &c;
        if e.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c);
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(self.field);
        }
        AlgebraElement { field: self.field, coeffs: self.coeffs.iter().map(|(&i, x)| (i, x * c)).collect() }
    }

    /// Applies a scalar map coefficientwise, dropping zeros (e.g. reduction
    /// modulo the maximal ideal).
    pub fn try_map<E>(&self, field: FieldKind, f: impl Fn(&Scalar) -> Result<Scalar, E>) -> Result<AlgebraElement, E> {
        let mut out = AlgebraElement::zero(field);
        for (i, c) in self.terms() {
            out.add_term(i, &f(c)?);
        }
        Ok(out)
    }

    /// `{"index": coefficient}` with scalars in the exact text encoding.
    pub fn to_json(&self) -> Value {
        let m: serde_json::Map<String, Value> =
            self.coeffs.iter().map(|(i, c)| (i.to_string(), json!(c.to_string()))).collect();
        Value::Object(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_explicit_zeros() {
        let q = FieldKind::Rationals;
        let mut x = AlgebraElement::basis(q, 3);
        x.add_term(3, &q.from_i64(-1));
        assert!(x.is_zero());
        let y = AlgebraElement::from_dense(q, &[q.zero(), q.one()]);
        assert_eq!(y.support().collect::<Vec<_>>(), vec![1]);
        assert!(y.scale(&q.zero()).is_zero());
    }
}
