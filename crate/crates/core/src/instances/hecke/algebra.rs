use std::sync::OnceLock;

use super::perm::{self, SymmetricGroup};
use super::tableau::{partitions, standard_tableaux, Partition, Tableau};
use crate::cellular::Multiplication;
use crate::field::{FieldKind, Scalar};
use crate::linalg::Matrix;

/// `H_q(S_n)` in its T-basis, elements as dense vectors indexed by the rank
/// of `w` in [`SymmetricGroup`].
pub struct TBasis {
    group: SymmetricGroup,
    field: FieldKind,
    q: Scalar,
    q_minus_one: Scalar,
}

impl TBasis {
    pub fn new(n: usize, field: FieldKind, q: Scalar) -> Self {
        let q = field.embed(&q);
        let q_minus_one = &q - &field.one();
        TBasis { group: SymmetricGroup::new(n), field, q, q_minus_one }
    }

    pub fn group(&self) -> &SymmetricGroup {
        &self.group
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn t(&self, w: &[u8]) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[self.group.rank_of(w)] = self.field.one();
        v
    }

    /// `x T_{s_i}` using `T_w T_s = T_{ws}` when `l(ws) > l(w)` and
    /// `T_w T_s = q T_{ws} + (q - 1) T_w` otherwise.
    pub fn times_generator(&self, x: &[Scalar], i: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (w, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ws = self.group.right(w, i);
            if self.group.right_up(w, i) {
                out[ws] += c;
            } else {
                out[ws] += &(&self.q * c);
                out[w] += &(&self.q_minus_one * c);
            }
        }
        out
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        // x T_w for every w needed, built along the parent tree
        let mut need = vec![false; n];
        for (w, c) in y.iter().enumerate() {
            if !c.is_zero() {
                let mut cur = w;
                while !need[cur] {
                    need[cur] = true;
                    match self.group.parent(cur) {
                        Some((p, _)) => cur = p,
                        None => break,
                    }
                }
            }
        }
        let mut cache: Vec<Option<Vec<Scalar>>> = vec![None; n];
        let mut out = vec![self.field.zero(); n];
        for &w in self.group.by_length() {
            if !need[w] {
                continue;
            }
            let v = match self.group.parent(w) {
                None => x.to_vec(),
                Some((p, i)) => self.times_generator(cache[p].as_ref().expect("parent computed first"), i),
            };
            let c = &y[w];
            if !c.is_zero() {
                for (o, a) in out.iter_mut().zip(&v) {
                    if !a.is_zero() {
                        *o += &(c * a);
                    }
                }
            }
            cache[w] = Some(v);
        }
        out
    }

    /// `T_w ↦ T_{w^{-1}}`.
    pub fn star(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (w, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out[self.group.rank_of(&perm::inverse(self.group.element(w)))] = c.clone();
            }
        }
        out
    }

    /// `L_i = Σ_{j<i} q^{j-i} T_{(j,i)}` for 1-based `i` (`L_1 = 0`).
    pub fn jm_element(&self, i: usize) -> Vec<Scalar> {
        let n = self.group.n();
        let mut v = vec![self.field.zero(); self.dim()];
        for j in 1..i {
            let w = perm::transposition(n, j - 1, i - 1);
            let c = self.q.pow(j as i64 - i as i64).expect("q is invertible");
            v[self.group.rank_of(&w)] = c;
        }
        v
    }
}

/// The Murphy basis `m_st = T_{d(s)}^* m_λ T_{d(t)}`, with the change of
/// basis to the T-basis and its (lazily computed) inverse.
pub struct Murphy {
    tb: TBasis,
    pub(crate) shapes: Vec<Partition>,
    pub(crate) tableaux: Vec<Vec<Tableau>>,
    /// T-coordinates of each `m_st`, in cellular index order.
    columns: Vec<Vec<Scalar>>,
    inverse: OnceLock<Matrix>,
}

impl Murphy {
    pub fn new(n: usize, field: FieldKind, q: Scalar) -> Self {
        let tb = TBasis::new(n, field, q);
        let shapes = partitions(n);
        let tableaux: Vec<Vec<Tableau>> = shapes.iter().map(standard_tableaux).collect();
        let mut columns = Vec::with_capacity(tb.dim());
        for (shape, ts) in shapes.iter().zip(&tableaux) {
            let m = row_stabilizer_sum(&tb, shape);
            let right: Vec<Vec<Scalar>> = ts.iter().map(|t| tb.product(&m, &tb.t(&t.d()))).collect();
            for s in ts {
                let left = tb.t(&perm::inverse(&s.d()));
                for r in &right {
                    columns.push(tb.product(&left, r));
                }
            }
        }
        Murphy { tb, shapes, tableaux, columns, inverse: OnceLock::new() }
    }

    pub fn tbasis(&self) -> &TBasis {
        &self.tb
    }

    /// Murphy coordinates to T-coordinates.
    pub fn to_t(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.tb.field.zero(); self.tb.dim()];
        for (c, col) in x.iter().zip(&self.columns) {
            if c.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(col) {
                if !a.is_zero() {
                    *o += &(c * a);
                }
            }
        }
        out
    }

    fn inverse(&self) -> &Matrix {
        self.inverse.get_or_init(|| {
            let p = Matrix::from_columns(self.tb.field, self.tb.dim(), &self.columns);
            p.inverse().expect("the Murphy basis is a basis")
        })
    }

    /// T-coordinates to Murphy coordinates.
    pub fn from_t(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.inverse().mul_vec(v)
    }
}

fn row_stabilizer_sum(tb: &TBasis, shape: &Partition) -> Vec<Scalar> {
    let sup = Tableau::superstandard(shape);
    let row_of: Vec<usize> = sup.row_sequence();
    let mut v = vec![tb.field.zero(); tb.dim()];
    for r in 0..tb.dim() {
        let w = tb.group.element(r);
        if w.iter().enumerate().all(|(i, &x)| row_of[i] == row_of[x as usize]) {
            v[r] = tb.field.one();
        }
    }
    v
}

impl Multiplication for Murphy {
    fn dim(&self) -> usize {
        self.tb.dim()
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.from_t(&self.tb.product(&self.columns[i], &self.columns[j]))
    }

    fn one(&self) -> Vec<Scalar> {
        self.from_t(&self.tb.t(&perm::identity(self.tb.group.n())))
    }

    fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.from_t(&self.tb.product(&self.to_t(x), &self.to_t(y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::BaseField;
    use proptest::prelude::*;

    fn generic(n: usize) -> TBasis {
        let k = FieldKind::functions(BaseField::Rationals, 'q');
        TBasis::new(n, k, k.generator().unwrap())
    }

    #[test]
    fn quadratic_relation() {
        let tb = generic(3);
        let k = tb.field();
        let q = k.generator().unwrap();
        let s = tb.t(&perm::transposition(3, 0, 1));
        let s2 = tb.product(&s, &s);
        // T_s^2 = (q-1) T_s + q
        let mut want = s.iter().map(|c| c * &(&q - &k.one())).collect::<Vec<_>>();
        want[0] = q.clone();
        assert_eq!(s2, want);
    }

    #[test]
    fn group_algebra_at_q_one() {
        for n in 1..=4 {
            let tb = TBasis::new(n, FieldKind::Rationals, Scalar::rational(1, 1));
            let g = tb.group();
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let p = tb.product(&tb.t(g.element(a)), &tb.t(g.element(b)));
                    assert_eq!(p, tb.t(&perm::compose(g.element(a), g.element(b))));
                }
            }
        }
    }

    #[test]
    fn jm_elements_commute() {
        let tb = generic(4);
        let ls: Vec<_> = (1..=4).map(|i| tb.jm_element(i)).collect();
        for a in &ls {
            for b in &ls {
                assert_eq!(tb.product(a, b), tb.product(b, a));
            }
            assert_eq!(&tb.star(a), a);
        }
    }

    #[test]
    fn murphy_two() {
        // m_(2) = 1 + T_1 squares to (1 + q) m_(2)
        let k = FieldKind::functions(BaseField::Rationals, 'q');
        let q = k.generator().unwrap();
        let m = Murphy::new(2, k, q.clone());
        let first = m.columns[0].clone();
        assert_eq!(first, vec![k.one(), k.one()]);
        let sq = m.product(&[k.one(), k.zero()], &[k.one(), k.zero()]);
        assert_eq!(sq, vec![&k.one() + &q, k.zero()]);
    }

    proptest! {
        #[test]
        fn t_basis_associative(a in 0usize..24, b in 0usize..24, c in 0usize..24, q in 2i64..5) {
            let tb = TBasis::new(4, FieldKind::Prime(101), FieldKind::Prime(101).from_i64(q));
            let g = tb.group();
            let (x, y, z) = (tb.t(g.element(a)), tb.t(g.element(b)), tb.t(g.element(c)));
            prop_assert_eq!(tb.product(&tb.product(&x, &y), &z), tb.product(&x, &tb.product(&y, &z)));
        }
    }
}
