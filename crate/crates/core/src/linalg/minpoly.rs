use super::Matrix;
use crate::error::Result;
use crate::field::{Poly, Scalar};

/// Incremental echelon basis that remembers how each reduced vector was
/// formed from the inserted ones.
struct Tracker {
    rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
}

impl Tracker {
    fn new() -> Self {
        Tracker { rows: Vec::new() }
    }

    /// Reduces `v` against the basis; returns the residue and the
    /// combination (over previously inserted vectors, plus `v` itself at
    /// position `slot`).
    fn reduce(&self, v: &[Scalar], slot: usize, width: usize) -> (Vec<Scalar>, Vec<Scalar>) {
        let zero = v[0].zero_like();
        let mut r = v.to_vec();
        let mut comb = vec![zero; width];
        comb[slot] = v[0].one_like();
        for (p, row, c) in &self.rows {
            let f = r[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            for (x, y) in comb.iter_mut().zip(c) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        (r, comb)
    }

    fn insert(&mut self, r: Vec<Scalar>, comb: Vec<Scalar>) {
        let p = r.iter().position(|x| !x.is_zero()).expect("nonzero residue");
        let inv = r[p].inv().expect("unit");
        let r: Vec<Scalar> = r.iter().map(|x| x * &inv).collect();
        let comb: Vec<Scalar> = comb.iter().map(|x| x * &inv).collect();
        self.rows.push((p, r, comb));
    }
}

impl Matrix {
    /// Monic minimal polynomial, as the lcm of the annihilators of the
    /// standard basis vectors, skipping those already inside the invariant
    /// subspace spanned so far.
    pub fn minimal_polynomial(&self) -> Result<Poly> {
        let n = self.require_square()?;
        let field = self.field();
        let mut result = Poly::one(field);
        let mut span = Tracker::new();
        for j in 0..n {
            let mut e = vec![field.zero(); n];
            e[j] = field.one();
            if span.reduce(&e, 0, 1).0.iter().all(Scalar::is_zero) {
                continue;
            }
            // local annihilator of e_j
            let mut local = Tracker::new();
            let mut w = e;
            let mut krylov = Vec::new();
            let ann = loop {
                let k = krylov.len();
                let (r, comb) = local.reduce(&w, k, n + 1);
                if r.iter().all(Scalar::is_zero) {
                    break Poly::new(field, comb[..=k].to_vec());
                }
                local.insert(r, comb);
                krylov.push(w.clone());
                w = self.mul_vec(&w);
            };
            result = result.lcm(&ann);
            for v in krylov {
                let (r, _) = span.reduce(&v, 0, 1);
                if !r.iter().all(Scalar::is_zero) {
                    span.insert(r, vec![field.one()]);
                }
            }
        }
        Ok(result.monic())
    }

    /// Characteristic polynomial `det(X - A)` by Berkowitz's division-free
    /// algorithm.
    pub fn characteristic_polynomial(&self) -> Result<Poly> {
        let n = self.require_square()?;
        let field = self.field();
        if n == 0 {
            return Ok(Poly::one(field));
        }
        // coefficient vectors, highest degree first
        let mut v: Vec<Scalar> = vec![field.one(), -self.get(0, 0).clone()];
        for r in 1..n {
            // A_r = leading (r+1)x(r+1) block; split as [[M, C],[R, a]]
            let a = self.get(r, r).clone();
            let col: Vec<Scalar> = (0..r).map(|i| self.get(i, r).clone()).collect();
            let row: Vec<Scalar> = (0..r).map(|j| self.get(r, j).clone()).collect();
            let m = {
                let mut m = Matrix::zeros(field, r, r);
                for i in 0..r {
                    for j in 0..r {
                        m.set(i, j, self.get(i, j).clone());
                    }
                }
                m
            };
            // Toeplitz column: 1, -a, -R C, -R M C, ..., -R M^{r-1} C
            let mut t = vec![field.one(), -a];
            let mut mc = col;
            for _ in 0..r {
                let s: Scalar = row.iter().zip(&mc).fold(field.zero(), |acc, (x, y)| &acc + &(x * y));
                t.push(-s);
                mc = m.mul_vec(&mc);
            }
            let mut next = vec![field.zero(); r + 2];
            for (i, out) in next.iter_mut().enumerate() {
                for (k, vk) in v.iter().enumerate() {
                    if k <= i && i - k < t.len() {
                        *out += &(&t[i - k] * vk);
                    }
                }
            }
            v = next;
        }
        v.reverse();
        Ok(Poly::new(field, v))
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        let n = self.rows();
        let field = self.field();
        let mut acc = Matrix::zeros(field, n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let x = acc.get(i, i) + c;
                acc.set(i, i, x);
            }
        }
        acc
    }
}
