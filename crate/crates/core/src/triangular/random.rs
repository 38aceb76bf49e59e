//! Seeded random families for the randomized suites.

use rand::seq::SliceRandom;
use rand::Rng;

use super::TriangularFamily;
use crate::field::{FieldKind, Poly, Scalar};
use crate::linalg::Matrix;

fn upper<R: Rng>(rng: &mut R, field: FieldKind, diag: &[Scalar]) -> Matrix {
    let d = diag.len();
    let mut m = Matrix::zeros(field, d, d);
    for i in 0..d {
        m.set(i, i, diag[i].clone());
        for j in i + 1..d {
            m.set(i, j, field.from_i64(rng.gen_range(-3..=3)));
        }
    }
    m
}

fn residue_vectors<R: Rng>(rng: &mut R, field: FieldKind, count: usize, n: usize, range: i64) -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = Vec::with_capacity(count);
    while out.len() < count {
        let v: Vec<Scalar> = (0..n).map(|_| field.from_i64(rng.gen_range(-range..=range))).collect();
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

fn assemble<R: Rng>(rng: &mut R, field: FieldKind, rows: &[Vec<Scalar>], n: usize) -> TriangularFamily {
    let d = rows.len();
    let ms = (0..n)
        .map(|k| {
            let diag: Vec<Scalar> = rows.iter().map(|r| r[k].clone()).collect();
            upper(rng, field, &diag)
        })
        .collect();
    TriangularFamily::new(field, d, ms).expect("upper triangular by construction")
}

/// `n` upper-triangular rational matrices whose residue sequences are
/// pairwise distinct.
pub fn separated_family<R: Rng>(rng: &mut R, d: usize, n: usize) -> TriangularFamily {
    let q = FieldKind::Rationals;
    let rows = residue_vectors(rng, q, d, n, 2 * d as i64);
    assemble(rng, q, &rows, n)
}

/// A family over `field` with `classes` distinct residue sequences, each
/// shared exactly by the members of its class.  Returns the family and the
/// intended partition.
pub fn linkage_family<R: Rng>(rng: &mut R, field: FieldKind, d: usize, n: usize, classes: usize) -> (TriangularFamily, Vec<Vec<usize>>) {
    let classes = classes.clamp(1, d);
    let mut owner: Vec<usize> = (0..d).map(|i| if i < classes { i } else { rng.gen_range(0..classes) }).collect();
    owner.shuffle(rng);
    let char = field.characteristic();
    let range = if char == 0 { 3 } else { (char as i64 - 1) / 2 };
    // enough distinct sequences exist as long as (2 range + 1)^n >= classes
    let seqs = residue_vectors(rng, field, classes, n, range);
    let rows: Vec<Vec<Scalar>> = owner.iter().map(|&c| seqs[c].clone()).collect();
    let fam = assemble(rng, field, &rows, n);
    let mut partition: Vec<Vec<usize>> = (0..classes).map(|c| (0..d).filter(|&i| owner[i] == c).collect()).collect();
    partition.sort();
    (fam, partition)
}

/// `L_k = p_k(A)` for one random upper-triangular `A`; the family commutes.
pub fn commuting_family<R: Rng>(rng: &mut R, field: FieldKind, d: usize, n: usize) -> TriangularFamily {
    let diag: Vec<Scalar> = (0..d).map(|_| field.from_i64(rng.gen_range(-3..=3))).collect();
    let a = upper(rng, field, &diag);
    let ms = (0..n)
        .map(|_| {
            let coeffs: Vec<Scalar> = (0..3).map(|_| field.from_i64(rng.gen_range(-2..=2))).collect();
            a.eval_poly(&Poly::new(field, coeffs))
        })
        .collect();
    TriangularFamily::new(field, d, ms).expect("polynomials in an upper-triangular matrix")
}
