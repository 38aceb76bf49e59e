use super::{unit, AlgebraElement, CellDatum};
use crate::field::Scalar;
use crate::linalg::Matrix;

/// The cell module `C(λ)` with basis `a_t`, realised inside `A` as the span
/// of `a_{s t}` modulo `A^λ` for a fixed first tableau `s`.
pub struct CellModule<'a> {
    datum: &'a CellDatum,
    lambda: usize,
}

impl<'a> CellModule<'a> {
    pub fn new(datum: &'a CellDatum, lambda: usize) -> Self {
        CellModule { datum, lambda }
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn dim(&self) -> usize {
        self.datum.cell_size(self.lambda)
    }

    /// Coordinates of `a_{s t} y` on `a_{s v}`, `v ∈ T(λ)`.
    fn row_product(&self, s: usize, t: usize, y: &[Scalar]) -> Vec<Scalar> {
        let d = self.datum;
        let n = d.dim();
        let p = d.mul_dense(&unit(d.field(), n, d.index(self.lambda, s, t)), y);
        (0..self.dim()).map(|v| p[d.index(self.lambda, s, v)].clone()).collect()
    }

    /// Matrix of the right action of `x` on `{a_t}` (column `t` is `a_t x`).
    pub fn action(&self, x: &AlgebraElement) -> Matrix {
        self.action_via(0, x)
    }

    /// The same action read off with first tableau `s`; independent of `s`
    /// by the cellular axioms.
    pub fn action_via(&self, s: usize, x: &AlgebraElement) -> Matrix {
        let xd = x.to_dense(self.datum.dim());
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|t| self.row_product(s, t, &xd)).collect();
        Matrix::from_columns(self.datum.field(), self.dim(), &cols)
    }

    /// `⟨a_t, a_u⟩` as the coefficient of `a_{s v}` in `a_{s t} a_{u v}`.
    pub fn inner_product_via(&self, s: usize, v: usize, t: usize, u: usize) -> Scalar {
        let d = self.datum;
        let l = self.lambda;
        let p = d.mul_dense(&unit(d.field(), d.dim(), d.index(l, s, t)), &unit(d.field(), d.dim(), d.index(l, u, v)));
        p[d.index(l, s, v)].clone()
    }

    pub fn inner_product(&self, t: usize, u: usize) -> Scalar {
        self.inner_product_via(0, 0, t, u)
    }

    pub fn gram_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut g = Matrix::zeros(self.datum.field(), n, n);
        for t in 0..n {
            for u in t..n {
                let x = self.inner_product(t, u);
                g.set(u, t, x.clone());
                g.set(t, u, x);
            }
        }
        g
    }

    /// `dim D(λ) = |T(λ)| - dim rad C(λ)`.
    pub fn gram_rank(&self) -> usize {
        self.gram_matrix().rank()
    }

    /// `⟨v, w⟩` for coordinate vectors over `{a_t}`.
    pub fn form(gram: &Matrix, v: &[Scalar], w: &[Scalar]) -> Scalar {
        let gw = gram.mul_vec(w);
        v.iter().zip(&gw).fold(gram.field().zero(), |acc, (a, b)| &acc + &(a * b))
    }
}
