use std::collections::BTreeSet;

use super::Matrix;
use crate::error::{Error, Result};

/// A nonempty subset `J` of the index range `0..d` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeSet {
    d: usize,
    members: BTreeSet<usize>,
}

impl ShapeSet {
    pub fn new(d: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::Invalid("shape set must be nonempty".into()));
        }
        if let Some(&bad) = members.iter().find(|&&i| i >= d) {
            return Err(Error::Invalid(format!("index {bad} out of range for d = {d}")));
        }
        Ok(ShapeSet { d, members })
    }

    pub fn singleton(d: usize, i: usize) -> Result<Self> {
        ShapeSet::new(d, [i])
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether `(k, l)` lies in the region `u_J = {(k, l) : k <= i <= l, i in J}`.
    pub fn region_contains(&self, k: usize, l: usize) -> bool {
        self.members.range(k..).next().is_some_and(|&i| i <= l)
    }
}

impl Matrix {
    /// The support lies in `u_J` and the diagonal is the indicator of `J`.
    pub fn has_shape(&self, j: &ShapeSet) -> bool {
        if !self.is_square() || self.rows() != j.dim() {
            return false;
        }
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                let x = self.get(r, c);
                if r == c {
                    let want_one = j.contains(r);
                    if (want_one && !x.is_one()) || (!want_one && !x.is_zero()) {
                        return false;
                    }
                } else if !x.is_zero() && !j.region_contains(r, c) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldKind;
    use proptest::prelude::*;

    const Q: FieldKind = FieldKind::Rationals;

    #[test]
    fn shape_examples() {
        let j1 = ShapeSet::singleton(2, 0).unwrap();
        assert!(Matrix::unit(Q, 2, 0, 0).has_shape(&j1));
        assert!(Matrix::from_i64(Q, &[&[1, 5], &[0, 0]]).has_shape(&j1));
        let j12 = ShapeSet::new(2, [0, 1]).unwrap();
        assert!(!Matrix::from_i64(Q, &[&[1, 0], &[1, 1]]).has_shape(&j12));
        // entry (0,2) lies above i = 1, entry (0,1) too; (1,2) does as well
        let m = Matrix::from_i64(Q, &[&[0, 1, 1], &[0, 1, 1], &[0, 0, 0]]);
        assert!(m.has_shape(&ShapeSet::singleton(3, 1).unwrap()));
        // (0, 0)-row entry at column 0 is outside u_{1}
        let m = Matrix::from_i64(Q, &[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        assert!(m.has_shape(&ShapeSet::singleton(3, 1).unwrap()));
        assert!(ShapeSet::new(3, []).is_err());
        assert!(ShapeSet::new(3, [3]).is_err());
    }

    proptest! {
        #[test]
        fn singleton_shape_is_unit_plus_nilpotent(
            d in 1usize..6,
            i in 0usize..6,
            entries in proptest::collection::vec(-2i64..3, 36),
        ) {
            let i = i % d;
            let j = ShapeSet::singleton(d, i).unwrap();
            let mut a = Matrix::zeros(Q, d, d);
            for r in 0..d {
                for c in 0..d {
                    if r == c {
                        a.set(r, c, if r == i { Q.one() } else { Q.zero() });
                    } else if r <= i && i <= c {
                        a.set(r, c, Q.from_i64(entries[r * 6 + c]));
                    }
                }
            }
            prop_assert!(a.has_shape(&j));
            let rest = a.sub(&Matrix::unit(Q, d, i, i));
            prop_assert!(rest.is_strictly_upper_triangular());
            for r in 0..d {
                for c in 0..d {
                    if !rest.get(r, c).is_zero() {
                        prop_assert!(r <= i && i <= c);
                    }
                }
            }
        }
    }
}
