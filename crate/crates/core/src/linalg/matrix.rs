use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldKind, Scalar};

/// Dense matrix over an exact field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldKind,
    data: Vec<Scalar>,
}

/// Result of Gauss–Jordan elimination: the reduced form, pivot columns and
/// the determinant factor accumulated along the way (for square inputs).
struct Reduced {
    rref: Matrix,
    pivots: Vec<usize>,
    det: Scalar,
}

impl Matrix {
    pub fn new(field: FieldKind, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(bad) = data.iter().find(|x| !x.belongs_to(field) && !x.belongs_to(field.base().kind())) {
            return Err(Error::Invalid(format!("entry {bad} is not in {field}")));
        }
        let data = data.iter().map(|x| field.embed(x)).collect();
        Ok(Matrix { rows, cols, field, data })
    }

    pub fn zeros(field: FieldKind, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldKind, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Matrix unit `E_ij`.
    pub fn unit(field: FieldKind, n: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        m.set(i, j, field.one());
        m
    }

    pub fn diagonal(field: FieldKind, diag: &[Scalar]) -> Matrix {
        let n = diag.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, field.embed(d));
        }
        m
    }

    pub fn from_rows(field: FieldKind, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Matrix::new(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(field: FieldKind, rows: &[&[i64]]) -> Matrix {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, rows).expect("rectangular literal")
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(field: FieldKind, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn diag(&self) -> Vec<Scalar> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Reinterprets the entries in another field (e.g. `K` vs a base-field
    /// matrix); entries are embedded, not reduced.
    pub fn embed(&self, field: FieldKind) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, field, data: self.data.iter().map(|x| field.embed(x)).collect() }
    }

    pub fn map(&self, field: FieldKind, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, field, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map(&self, field: FieldKind, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Matrix> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, field, data })
    }

    fn check_same(&self, other: &Matrix) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.check_same(other);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        self.with_data(data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.check_same(other);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        self.with_data(data)
    }

    pub fn neg(&self) -> Matrix {
        self.with_data(self.data.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        self.with_data(self.data.iter().map(|a| a * c).collect())
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.rows, v.len(), "vector length");
        let mut out = vec![self.field.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[j] += &(a * b);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_strictly_upper_triangular(&self) -> bool {
        self.is_upper_triangular() && self.diag().iter().all(Scalar::is_zero)
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && &self.mul(self) == self
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gauss–Jordan elimination with the first nonzero entry as pivot.
    fn reduce(&self) -> Reduced {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det = self.field.one();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                det = self.field.zero();
                continue;
            };
            if p != r {
                m.swap_rows(p, r);
                det = -det;
            }
            let pv = m.get(r, c).clone();
            det = &det * &pv;
            let inv = pv.inv().expect("nonzero pivot");
            for j in c..m.cols {
                let x = m.get(r, j);
                if !x.is_zero() {
                    let y = x * &inv;
                    m.set(r, j, y);
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let x = m.get(r, j);
                    if !x.is_zero() {
                        let y = m.get(i, j) - &(&f * x);
                        m.set(i, j, y);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        if pivots.len() < m.rows {
            det = self.field.zero();
        }
        Reduced { rref: m, pivots, det }
    }

    pub fn rank(&self) -> usize {
        self.reduce().pivots.len()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let r = self.reduce();
        (r.rref, r.pivots)
    }

    /// The determinant; the empty matrix has determinant 1.
    pub fn determinant(&self) -> Result<Scalar> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(self.field.one());
        }
        Ok(self.reduce().det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let red = aug.reduce();
        if red.pivots.len() < n || red.pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.rref.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Some solution of `A x = b`, or `Singular` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let n = self.cols;
        let mut aug = Matrix::zeros(self.field, self.rows, n + 1);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n, self.field.embed(&b[i]));
        }
        let red = aug.reduce();
        if red.pivots.last() == Some(&n) {
            return Err(Error::Singular);
        }
        let mut x = vec![self.field.zero(); n];
        for (r, &c) in red.pivots.iter().enumerate() {
            x[c] = red.rref.get(r, n).clone();
        }
        Ok(x)
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let red = self.reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !red.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &c) in red.pivots.iter().enumerate() {
                    v[c] = -red.rref.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Rows concatenated vertically.
    pub fn stack(blocks: &[Matrix]) -> Matrix {
        let first = blocks.first().expect("at least one block");
        let cols = first.cols;
        let mut data = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols, "column mismatch in stack");
            data.extend(b.data.iter().cloned());
        }
        let rows = data.len() / cols.max(1);
        Matrix { rows, cols, field: first.field, data }
    }

    /// Readable rendering with scalars in pretty form.
    pub fn pretty(&self, var: char) -> String {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.pretty(var)).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        cells
            .iter()
            .map(|r| {
                let items: Vec<String> = r.iter().map(|s| format!("{s:>width$}")).collect();
                format!("[ {} ]", items.join("  "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty(self.field.var().unwrap_or('q')))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldKind = FieldKind::Rationals;

    #[test]
    fn determinant_examples() {
        assert_eq!(Matrix::from_i64(Q, &[&[2, 1], &[1, 2]]).determinant().unwrap(), Q.from_i64(3));
        assert_eq!(Matrix::zeros(Q, 0, 0).determinant().unwrap(), Q.one());
        assert_eq!(Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]).determinant().unwrap(), Q.from_i64(-1));
        assert!(Matrix::zeros(Q, 2, 3).determinant().is_err());
    }

    #[test]
    fn rank_inverse_solve() {
        assert_eq!(Matrix::zeros(Q, 4, 4).rank(), 0);
        assert_eq!(Matrix::identity(Q, 3).inverse().unwrap(), Matrix::identity(Q, 3));
        assert_eq!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
        let a = Matrix::from_i64(Q, &[&[2, 1], &[1, 3]]);
        let x = a.solve(&[Q.from_i64(3), Q.from_i64(4)]).unwrap();
        assert_eq!(x, vec![Q.one(), Q.one()]);
        let ns = Matrix::from_i64(Q, &[&[1, 2, 3]]).nullspace();
        assert_eq!(ns.len(), 2);
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-4i64..5, n * n).prop_map(move |v| {
            Matrix::new(Q, n, n, v.into_iter().map(|x| Q.from_i64(x)).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn determinant_is_multiplicative(a in small_matrix(3), b in small_matrix(3)) {
            let lhs = a.mul(&b).determinant().unwrap();
            prop_assert_eq!(lhs, &a.determinant().unwrap() * &b.determinant().unwrap());
        }

        #[test]
        fn inverse_round_trip(a in small_matrix(3)) {
            match a.inverse() {
                Ok(inv) => prop_assert!(a.mul(&inv).is_identity()),
                Err(_) => prop_assert!(a.determinant().unwrap().is_zero()),
            }
        }
    }
}
