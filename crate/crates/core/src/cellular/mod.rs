//! Cell data in the sense of Graham–Lehrer: a poset `Λ`, ordered tableau
//! sets `T(λ)`, a basis `a_st` with a multiplication oracle and the
//! involution `a_st* = a_ts`.
//!
//! Basis index order: `λ` in a linear extension of `Λ` with the most dominant
//! first, then `(s, t)` lexicographically in the `T(λ)` order.  Matrices of
//! operators use the column convention (column `j` holds the image of basis
//! element `j`), which makes the JM elements upper triangular.

mod element;
mod module;

pub use element::AlgebraElement;
pub use module::CellModule;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldKind, Scalar};
use crate::linalg::Matrix;

/// Structure constants of an algebra in its cellular basis.
pub trait Multiplication: Send + Sync {
    fn dim(&self) -> usize;

    /// `a_i a_j` as a dense coordinate vector.
    fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar>;

    /// The identity element.
    fn one(&self) -> Vec<Scalar>;

    /// `x y` for dense coordinate vectors; the default expands bilinearly.
    fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let zero = x.first().map(Scalar::zero_like).expect("nonempty algebra");
        let mut out = vec![zero; n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let c = a * b;
                for (o, p) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !p.is_zero() {
                        *o += &(&c * &p);
                    }
                }
            }
        }
        out
    }
}

/// One cell label `λ` with its ordered tableaux.
#[derive(Clone, Debug)]
pub struct Cell {
    pub label: String,
    /// `T(λ)` in a total order refining dominance, most dominant first.
    pub tableaux: Vec<String>,
    /// `dominates[s][t]` iff `s ⊳ t` (strict).
    pub dominates: Vec<Vec<bool>>,
}

impl Cell {
    /// A cell whose tableau order is itself the dominance order.
    pub fn totally_ordered(label: impl Into<String>, tableaux: Vec<String>) -> Cell {
        let n = tableaux.len();
        let dominates = (0..n).map(|s| (0..n).map(|t| s < t).collect()).collect();
        Cell { label: label.into(), tableaux, dominates }
    }
}

pub struct CellDatum {
    field: FieldKind,
    cells: Vec<Cell>,
    /// `greater[l][m]` iff `λ_l > λ_m` in `Λ`.
    greater: Vec<Vec<bool>>,
    offsets: Vec<usize>,
    tab_offsets: Vec<usize>,
    mult: Arc<dyn Multiplication>,
}

impl std::fmt::Debug for CellDatum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CellDatum")
            .field("field", &self.field)
            .field("cells", &self.cells.iter().map(|c| &c.label).collect::<Vec<_>>())
            .finish()
    }
}

impl CellDatum {
    pub fn new(field: FieldKind, cells: Vec<Cell>, greater: Vec<Vec<bool>>, mult: Arc<dyn Multiplication>) -> Result<Self> {
        let k = cells.len();
        if greater.len() != k || greater.iter().any(|r| r.len() != k) {
            return Err(Error::Dimension("poset relation size".into()));
        }
        for l in 0..k {
            for m in 0..k {
                if greater[l][m] && l >= m {
                    return Err(Error::Invalid(format!(
                        "cell order is not a linear extension: {} > {}",
                        cells[l].label, cells[m].label
                    )));
                }
            }
            let n = cells[l].tableaux.len();
            let dom = &cells[l].dominates;
            if n == 0 || dom.len() != n || dom.iter().any(|r| r.len() != n) {
                return Err(Error::Invalid(format!("cell {} has a malformed tableau order", cells[l].label)));
            }
            for s in 0..n {
                for t in 0..n {
                    if dom[s][t] && s >= t {
                        return Err(Error::Invalid(format!(
                            "tableau order of {} does not refine dominance",
                            cells[l].label
                        )));
                    }
                }
            }
        }
        let mut offsets = Vec::with_capacity(k + 1);
        let mut tab_offsets = Vec::with_capacity(k + 1);
        let (mut o, mut to) = (0, 0);
        for c in &cells {
            offsets.push(o);
            tab_offsets.push(to);
            o += c.tableaux.len() * c.tableaux.len();
            to += c.tableaux.len();
        }
        offsets.push(o);
        tab_offsets.push(to);
        if mult.dim() != o {
            return Err(Error::Dimension(format!("oracle dimension {} but cells give {o}", mult.dim())));
        }
        Ok(CellDatum { field, cells, greater, offsets, tab_offsets, mult })
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.offsets[self.cells.len()]
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn cell(&self, l: usize) -> &Cell {
        &self.cells[l]
    }

    pub fn cell_size(&self, l: usize) -> usize {
        self.cells[l].tableaux.len()
    }

    pub fn lambda_greater(&self, l: usize, m: usize) -> bool {
        self.greater[l][m]
    }

    pub fn index(&self, l: usize, s: usize, t: usize) -> usize {
        let n = self.cell_size(l);
        debug_assert!(s < n && t < n);
        self.offsets[l] + s * n + t
    }

    /// `(λ, s, t)` of a basis index.
    pub fn decode(&self, idx: usize) -> (usize, usize, usize) {
        let l = self.offsets.partition_point(|&o| o <= idx) - 1;
        let n = self.cell_size(l);
        let r = idx - self.offsets[l];
        (l, r / n, r % n)
    }

    pub fn star_index(&self, idx: usize) -> usize {
        let (l, s, t) = self.decode(idx);
        self.index(l, t, s)
    }

    /// Total number of tableaux `|T(Λ)|`.
    pub fn num_tableaux(&self) -> usize {
        self.tab_offsets[self.cells.len()]
    }

    /// Global tableau number of `t ∈ T(λ_l)`.
    pub fn tableau_id(&self, l: usize, t: usize) -> usize {
        self.tab_offsets[l] + t
    }

    pub fn decode_tableau(&self, g: usize) -> (usize, usize) {
        let l = self.tab_offsets.partition_point(|&o| o <= g) - 1;
        (l, g - self.tab_offsets[l])
    }

    pub fn tableau_label(&self, g: usize) -> String {
        let (l, t) = self.decode_tableau(g);
        self.cells[l].tableaux[t].clone()
    }

    /// Strict dominance on `T(Λ)`: `λ > μ`, or the same `λ` and `s ⊳ t`.
    pub fn tableau_dominates(&self, g: usize, h: usize) -> bool {
        let (l, s) = self.decode_tableau(g);
        let (m, t) = self.decode_tableau(h);
        if l == m {
            self.cells[l].dominates[s][t]
        } else {
            self.greater[l][m]
        }
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.field)
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::from_dense(self.field, &self.mult.one())
    }

    pub fn basis(&self, idx: usize) -> AlgebraElement {
        AlgebraElement::basis(self.field, idx)
    }

    pub fn star(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_pairs(self.field, x.terms().map(|(i, c)| (self.star_index(i), c.clone())))
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        if x.is_zero() || y.is_zero() {
            return self.zero();
        }
        let v = self.mult.product(&x.to_dense(self.dim()), &y.to_dense(self.dim()));
        AlgebraElement::from_dense(self.field, &v)
    }

    pub fn mul_dense(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.mult.product(x, y)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> AlgebraElement {
        AlgebraElement::from_dense(self.field, &self.mult.basis_product(i, j))
    }

    /// Matrix of `y ↦ y x` on the full basis (column convention).
    pub fn regular_representation(&self, x: &AlgebraElement) -> Matrix {
        let n = self.dim();
        let xd = x.to_dense(n);
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mult.product(&unit(self.field, n, j), &xd)).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Matrix of `y ↦ x y` on the full basis (column convention).
    pub fn left_representation(&self, x: &AlgebraElement) -> Matrix {
        let n = self.dim();
        let xd = x.to_dense(n);
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mult.product(&xd, &unit(self.field, n, j))).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    pub fn module(&self, l: usize) -> CellModule<'_> {
        CellModule::new(self, l)
    }

    /// Sum of `|T(λ)|^2`; equals `dim` by construction.
    pub fn cell_dimension_count(&self) -> usize {
        self.cells.iter().map(|c| c.tableaux.len().pow(2)).sum()
    }
}

pub(crate) fn unit(field: FieldKind, n: usize, j: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[j] = field.one();
    v
}

/// Jucys–Murphy data: the elements `L_1..L_M` and contents `c_t(i)`.
#[derive(Clone, Debug)]
pub struct ContentTable {
    /// `contents[g][i]` for the global tableau number `g`.
    pub contents: Vec<Vec<Scalar>>,
    pub jm: Vec<AlgebraElement>,
}

impl ContentTable {
    pub fn m(&self) -> usize {
        self.jm.len()
    }

    pub fn content(&self, g: usize, i: usize) -> &Scalar {
        &self.contents[g][i]
    }

    /// `𝒞(i)`: distinct contents at `i`, in order of first appearance over
    /// `T(Λ)` (most dominant cell first).
    pub fn content_set(&self, i: usize) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = Vec::new();
        for row in &self.contents {
            if !out.contains(&row[i]) {
                out.push(row[i].clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 2x2 matrix algebra as a one-cell datum.
    struct Units;

    impl Multiplication for Units {
        fn dim(&self) -> usize {
            4
        }
        fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
            let q = FieldKind::Rationals;
            let (a, b, c, d) = (i / 2, i % 2, j / 2, j % 2);
            let mut v = vec![q.zero(); 4];
            if b == c {
                v[a * 2 + d] = q.one();
            }
            v
        }
        fn one(&self) -> Vec<Scalar> {
            let q = FieldKind::Rationals;
            vec![q.one(), q.zero(), q.zero(), q.one()]
        }
    }

    fn datum() -> CellDatum {
        let cell = Cell::totally_ordered("1", vec!["1".into(), "2".into()]);
        CellDatum::new(FieldKind::Rationals, vec![cell], vec![vec![false]], Arc::new(Units)).unwrap()
    }

    #[test]
    fn indexing_round_trip() {
        let d = datum();
        for idx in 0..d.dim() {
            let (l, s, t) = d.decode(idx);
            assert_eq!(d.index(l, s, t), idx);
            assert_eq!(d.star_index(d.star_index(idx)), idx);
        }
        assert_eq!(d.star_index(1), 2);
    }

    #[test]
    fn representations() {
        let d = datum();
        assert!(d.regular_representation(&d.one()).is_identity());
        let e12 = d.basis(1);
        let r = d.regular_representation(&e12);
        // e_21 e_12 = e_22: column 2 has a one in row 3
        assert!(r.get(3, 2).is_one());
        assert_eq!(d.module(0).gram_matrix(), Matrix::identity(FieldKind::Rationals, 2));
    }

    #[test]
    fn rejects_bad_order() {
        let cells = vec![
            Cell::totally_ordered("a", vec!["a".into()]),
            Cell::totally_ordered("b", vec!["b".into()]),
        ];
        let greater = vec![vec![false, false], vec![true, false]];
        struct Two;
        impl Multiplication for Two {
            fn dim(&self) -> usize {
                2
            }
            fn basis_product(&self, _: usize, _: usize) -> Vec<Scalar> {
                vec![Scalar::rational(0, 1); 2]
            }
            fn one(&self) -> Vec<Scalar> {
                vec![Scalar::rational(0, 1); 2]
            }
        }
        assert!(CellDatum::new(FieldKind::Rationals, cells, greater, Arc::new(Two)).is_err());
    }
}
