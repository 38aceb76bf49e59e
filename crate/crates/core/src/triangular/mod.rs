//! Complete sets of orthogonal idempotents from families of upper-triangular
//! matrices, by lifting with `ε_N` and a directed Gram–Schmidt sweep.
//!
//! Indices are 0-based throughout.  Every `ε` lift uses `N = d`.

pub mod epsilon;
pub mod random;

use serde_json::{json, Value};

pub use epsilon::{epsilon_coefficients, epsilon_poly, lift_idempotent};

use crate::cellular::{AlgebraElement, CellDatum};
use crate::error::{Error, Result};
use crate::field::{DvrContext, FieldKind, Scalar};
use crate::linalg::{Matrix, ShapeSet};
use crate::report::{first_failure, Report};

/// Upper-triangular `d × d` matrices `L_1, …, L_n` over a common field.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangularFamily {
    d: usize,
    field: FieldKind,
    matrices: Vec<Matrix>,
}

impl TriangularFamily {
    pub fn new(field: FieldKind, d: usize, matrices: Vec<Matrix>) -> Result<Self> {
        for (k, m) in matrices.iter().enumerate() {
            if m.rows() != d || m.cols() != d {
                return Err(Error::Dimension(format!("L_{} is {}x{}, expected {d}x{d}", k + 1, m.rows(), m.cols())));
            }
            if !m.field().compatible(field) {
                return Err(Error::Invalid(format!("L_{} is over {}, expected {field}", k + 1, m.field())));
            }
            if !m.is_upper_triangular() {
                return Err(Error::Invalid(format!("L_{} is not upper triangular", k + 1)));
            }
        }
        Ok(TriangularFamily { d, field, matrices })
    }

    /// The right regular representations of `elements` on `datum`.
    pub fn from_elements(datum: &CellDatum, elements: &[AlgebraElement]) -> Result<Self> {
        let ms = elements.iter().map(|x| datum.regular_representation(x)).collect();
        TriangularFamily::new(datum.field(), datum.dim(), ms)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// `r_k^j`.
    pub fn residue(&self, k: usize, j: usize) -> &Scalar {
        self.matrices[k].get(j, j)
    }

    /// Entrywise reduction modulo the maximal ideal of `ctx`.
    pub fn reduce(&self, ctx: &DvrContext) -> Result<Self> {
        let k = ctx.residue_field();
        let ms = self.matrices.iter().map(|m| m.try_map(k, |x| ctx.reduce(x))).collect::<Result<Vec<_>>>()?;
        TriangularFamily::new(k, self.d, ms)
    }

    pub fn commutes(&self) -> bool {
        self.matrices.iter().enumerate().all(|(a, x)| self.matrices[a + 1..].iter().all(|y| x.commutator(y).is_zero()))
    }

    /// `{"d": d, "field": ..., "matrices": [...]}`; each matrix is a list of
    /// rows or a matrix object.
    pub fn from_json(v: &Value) -> Result<Self> {
        let field: FieldKind = v
            .get("field")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("family is missing `field`".into()))?
            .parse()?;
        let d = v.get("d").and_then(Value::as_u64).ok_or_else(|| Error::Parse("family is missing `d`".into()))? as usize;
        let list = v
            .get("matrices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("family is missing `matrices`".into()))?;
        let mut ms = Vec::with_capacity(list.len());
        for (k, m) in list.iter().enumerate() {
            let m = match m {
                Value::Array(_) => Matrix::from_json(&json!({ "entries": m }), Some(field)),
                _ => Matrix::from_json(m, Some(field)),
            }
            .map_err(|e| Error::Parse(format!("matrices[{k}]: {e}")))?;
            ms.push(m);
        }
        TriangularFamily::new(field, d, ms)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "field": self.field.to_string(),
            "matrices": self.matrices.iter().map(|m| m.to_json()["entries"].clone()).collect::<Vec<_>>(),
        })
    }
}

/// Units and the maximal ideal of the coefficient ring.
#[derive(Clone, Debug)]
pub enum LocalRingContext {
    /// A field: the maximal ideal is zero.
    Field,
    /// The localisation at `t = q`; scalars must lie in `R`.
    Dvr(DvrContext),
}

impl LocalRingContext {
    pub fn is_unit(&self, x: &Scalar) -> bool {
        match self {
            LocalRingContext::Field => !x.is_zero(),
            LocalRingContext::Dvr(ctx) => ctx.is_unit(x),
        }
    }

    pub fn in_maximal_ideal(&self, x: &Scalar) -> bool {
        !self.is_unit(x)
    }

    fn check(&self, fam: &TriangularFamily) -> Result<()> {
        if let LocalRingContext::Dvr(ctx) = self {
            for m in fam.matrices() {
                for x in m.entries() {
                    if let Some(v) = ctx.valuation(x).filter(|&v| v < 0) {
                        return Err(Error::NotInRing(v));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `(L_k - r_k^j) / (r_k^i - r_k^j)` for the smallest `k` with a unit
/// denominator.
fn factor(fam: &TriangularFamily, ctx: &LocalRingContext, i: usize, j: usize) -> Option<Matrix> {
    (0..fam.len()).find_map(|k| {
        let den = fam.residue(k, i) - fam.residue(k, j);
        if !ctx.is_unit(&den) {
            return None;
        }
        let l = &fam.matrices[k];
        let shifted = l.sub(&Matrix::identity(fam.field, fam.d).scale(fam.residue(k, j)));
        Some(shifted.scale(&den.inv().expect("unit")))
    })
}

/// `Z_i = ∏_{j ≠ i} (L_k - r_k^j) / (r_k^i - r_k^j)`, `j` ascending.
pub fn separating_product(fam: &TriangularFamily, ctx: &LocalRingContext, i: usize) -> Result<Matrix> {
    let mut z = Matrix::identity(fam.field, fam.d);
    for j in (0..fam.d).filter(|&j| j != i) {
        let f = factor(fam, ctx, i, j).ok_or(Error::Unseparated { i, j })?;
        z = z.mul(&f);
    }
    Ok(z)
}

/// `E_i = Z_i^d`, checked to have shape `{i}`.
pub fn separating_idempotent(fam: &TriangularFamily, ctx: &LocalRingContext, i: usize) -> Result<Matrix> {
    let e = separating_product(fam, ctx, i)?.pow(fam.d as u32);
    if !e.has_shape(&ShapeSet::singleton(fam.d, i)?) {
        return Err(Error::Precondition(format!("Z_{i}^d does not have shape {{{i}}}")));
    }
    Ok(e)
}

fn sum(field: FieldKind, d: usize, ms: &[Matrix]) -> Matrix {
    ms.iter().fold(Matrix::zeros(field, d, d), |acc, m| acc.add(m))
}

fn first_nonzero_product(ms: &[Matrix]) -> Option<(usize, usize)> {
    (0..ms.len()).flat_map(|i| (i + 1..ms.len()).map(move |j| (i, j))).find(|&(i, j)| !ms[j].mul(&ms[i]).is_zero())
}

/// Gram–Schmidt for a directed list `rest` following the orthogonal
/// `prefix`: accept the head `f`, then replace each later `f_j` by
/// `(1 - F) f_j` with `F` the sum of everything accepted.
pub fn orthogonalize_directed(prefix: Vec<Matrix>, rest: Vec<Matrix>) -> Result<Vec<Matrix>> {
    let Some(first) = prefix.first().or(rest.first()) else {
        return Ok(Vec::new());
    };
    let (field, d) = (first.field(), first.rows());
    let reversed: Vec<Matrix> = prefix.iter().rev().cloned().collect();
    if let Some((a, b)) = first_nonzero_product(&prefix).or(first_nonzero_product(&reversed)) {
        return Err(Error::Precondition(format!("prefix idempotents {a} and {b} are not orthogonal")));
    }
    if let Some(bad) = prefix.iter().position(|e| rest.iter().any(|f| !e.mul(f).is_zero() || !f.mul(e).is_zero())) {
        return Err(Error::Precondition(format!("prefix idempotent {bad} is not orthogonal to the directed list")));
    }
    if let Some((earlier, later)) = first_nonzero_product(&rest) {
        return Err(Error::NotDirected { earlier, later });
    }
    let one = Matrix::identity(field, d);
    let mut done = prefix;
    let mut rest = rest;
    while !rest.is_empty() {
        let head = rest.remove(0);
        done.push(head);
        let complement = one.sub(&sum(field, d, &done));
        rest = rest.iter().map(|f| complement.mul(f)).collect();
    }
    Ok(done)
}

/// Linkage classes: `i ~ j` iff `r_k^i - r_k^j ∈ 𝔪` for every `k`.
/// Classes are ordered by least element.
pub fn linkage_classes(fam: &TriangularFamily, ctx: &LocalRingContext) -> Vec<Vec<usize>> {
    let mut class_of: Vec<Option<usize>> = vec![None; fam.d];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for j in 0..fam.d {
        if class_of[j].is_some() {
            continue;
        }
        let c = classes.len();
        let members: Vec<usize> = (j..fam.d)
            .filter(|&i| (0..fam.len()).all(|k| ctx.in_maximal_ideal(&(fam.residue(k, i) - fam.residue(k, j)))))
            .collect();
        for &i in &members {
            class_of[i] = Some(c);
        }
        classes.push(members);
    }
    classes
}

/// `Z_J = ∏_{j ∉ J} (L_k - r_k^j) / (r_k^i - r_k^j)` with `i = min J` and the
/// smallest admissible `k`.
pub fn class_product(fam: &TriangularFamily, ctx: &LocalRingContext, class: &[usize]) -> Result<Matrix> {
    let i = *class.first().ok_or_else(|| Error::Invalid("empty linkage class".into()))?;
    let mut z = Matrix::identity(fam.field, fam.d);
    for j in (0..fam.d).filter(|j| !class.contains(j)) {
        let f = factor(fam, ctx, i, j).ok_or(Error::MissingUnit { j, i, checked: fam.len() })?;
        z = z.mul(&f);
    }
    Ok(z)
}

/// Output of [`complete_idempotents`].
#[derive(Clone, Debug)]
pub struct Completion {
    pub classes: Vec<Vec<usize>>,
    pub idempotents: Vec<Matrix>,
    /// Operators replaced by `1 + L_k` because all their residues vanish.
    pub shifted: Vec<usize>,
}

/// The separated pipeline: `E_i = Z_i^d`, then the directed sweep.
pub fn separated_idempotents(fam: &TriangularFamily, ctx: &LocalRingContext) -> Result<Vec<Matrix>> {
    ctx.check(fam)?;
    let es = (0..fam.d).map(|i| separating_idempotent(fam, ctx, i)).collect::<Result<Vec<_>>>()?;
    let out = orthogonalize_directed(Vec::new(), es)?;
    if !sum(fam.field, fam.d, &out).is_identity() {
        return Err(Error::Precondition("orthogonalised idempotents do not sum to 1".into()));
    }
    Ok(out)
}

/// The linkage pipeline: `U_J = Z_J^d`, `f_J = ε_d(U_J)`, then the two-sided
/// sweep `f ↦ ε_d(ε_d((1 - F) f)(1 - F))`.
pub fn complete_idempotents(fam: &TriangularFamily, ctx: &LocalRingContext) -> Result<Completion> {
    ctx.check(fam)?;
    let (field, d) = (fam.field, fam.d);
    let one = Matrix::identity(field, d);
    let shifted: Vec<usize> = (0..fam.len()).filter(|&k| (0..d).all(|j| fam.residue(k, j).is_zero())).collect();
    let fam = if shifted.is_empty() || d == 0 {
        fam.clone()
    } else {
        let ms = fam
            .matrices
            .iter()
            .enumerate()
            .map(|(k, m)| if shifted.contains(&k) { one.add(m) } else { m.clone() })
            .collect();
        TriangularFamily::new(field, d, ms)?
    };
    let classes = linkage_classes(&fam, ctx);
    let n = d as u32;
    let mut fs = Vec::with_capacity(classes.len());
    for class in &classes {
        let u = class_product(&fam, ctx, class)?.pow(n);
        if !u.has_shape(&ShapeSet::new(d, class.iter().copied())?) {
            return Err(Error::Precondition(format!(
                "Z_J^d does not have shape J for J = {class:?}; residues within a class must agree exactly"
            )));
        }
        fs.push(lift_idempotent(&u, n)?);
    }
    let mut done: Vec<Matrix> = Vec::with_capacity(fs.len());
    while !fs.is_empty() {
        done.push(fs.remove(0));
        let complement = one.sub(&sum(field, d, &done));
        fs = fs
            .iter()
            .map(|f| {
                let left = lift_idempotent(&complement.mul(f), n)?;
                lift_idempotent(&left.mul(&complement), n)
            })
            .collect::<Result<_>>()?;
    }
    if d > 0 && !sum(field, d, &done).is_identity() {
        return Err(Error::Precondition("idempotents do not sum to 1".into()));
    }
    Ok(Completion { classes, idempotents: done, shifted })
}

/// Idempotence, orthogonality, completeness, shapes, and — for commuting
/// inputs — commuting outputs.
pub fn verify(fam: &TriangularFamily, c: &Completion) -> Report {
    let es = &c.idempotents;
    let d = fam.d;
    let mut r = Report::new();
    r.check_first("idempotent", first_failure(es.iter().enumerate(), |(_, e)| e.is_idempotent(), |(i, _)| format!("e_{i}")));
    r.check_first(
        "pairwise orthogonal",
        first_failure(
            (0..es.len()).flat_map(|a| (0..es.len()).filter(move |&b| b != a).map(move |b| (a, b))),
            |&(a, b)| es[a].mul(&es[b]).is_zero(),
            |(a, b)| format!("e_{a} e_{b}"),
        ),
    );
    r.check("sum to 1", d == 0 || sum(fam.field, d, es).is_identity());
    r.check_first(
        "e_i has shape J_i",
        first_failure(
            es.iter().zip(&c.classes).enumerate(),
            |(_, (e, j))| ShapeSet::new(d, j.iter().copied()).is_ok_and(|s| e.has_shape(&s)),
            |(i, _)| format!("e_{i}"),
        ),
    );
    if fam.commutes() {
        r.check_first(
            "outputs commute with each other and with the family",
            first_failure(
                es.iter().enumerate(),
                |(_, e)| es.iter().chain(fam.matrices()).all(|x| e.commutator(x).is_zero()),
                |(i, _)| format!("e_{i}"),
            ),
        );
    }
    r
}

pub fn completion_json(fam: &TriangularFamily, c: &Completion, report: &Report) -> Value {
    json!({
        "d": fam.d,
        "field": fam.field.to_string(),
        "classes": c.classes,
        "shifted": c.shifted,
        "idempotents": c.idempotents.iter().map(|m| m.to_json()["entries"].clone()).collect::<Vec<_>>(),
        "checks": report.checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::BaseField;

    const Q: FieldKind = FieldKind::Rationals;

    fn fam(ms: &[&[&[i64]]]) -> TriangularFamily {
        let d = ms[0].len();
        TriangularFamily::new(Q, d, ms.iter().map(|m| Matrix::from_i64(Q, m)).collect()).unwrap()
    }

    #[test]
    fn two_by_two_separating() {
        let f = fam(&[&[&[2, 3], &[0, 5]]]);
        let z = separating_product(&f, &LocalRingContext::Field, 0).unwrap();
        assert_eq!(z, Matrix::from_rows(Q, vec![vec![Q.one(), Scalar::rational(-1, 1)], vec![Q.zero(), Q.zero()]]).unwrap());
        assert!(z.is_idempotent());
    }

    #[test]
    fn trivial_sizes() {
        let f = fam(&[&[&[7]]]);
        assert!(separating_product(&f, &LocalRingContext::Field, 0).unwrap().is_identity());
        let c = complete_idempotents(&f, &LocalRingContext::Field).unwrap();
        assert_eq!(c.idempotents.len(), 1);
        assert!(c.idempotents[0].is_identity());
    }

    #[test]
    fn diagonal_family_gives_matrix_units() {
        let f = fam(&[&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]], &[&[0, 0, 0], &[0, 3, 0], &[0, 0, 3]]]);
        for i in 0..3 {
            assert_eq!(separating_product(&f, &LocalRingContext::Field, i).unwrap(), Matrix::unit(Q, 3, i, i));
        }
    }

    #[test]
    fn lemma_four_by_hand() {
        let f1 = Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]);
        let f2 = Matrix::from_i64(Q, &[&[0, 5], &[0, 1]]);
        let out = orthogonalize_directed(Vec::new(), vec![f1.clone(), f2]).unwrap();
        assert_eq!(out[0], f1);
        assert_eq!(out[1], Matrix::from_i64(Q, &[&[0, -2], &[0, 1]]));
        assert!(out[0].add(&out[1]).is_identity());
        let units = vec![Matrix::unit(Q, 2, 0, 0), Matrix::unit(Q, 2, 1, 1)];
        assert_eq!(orthogonalize_directed(Vec::new(), units.clone()).unwrap(), units);
        let bad = vec![Matrix::from_i64(Q, &[&[0, 0], &[0, 1]]), Matrix::from_i64(Q, &[&[1, 1], &[0, 0]])];
        assert_eq!(orthogonalize_directed(Vec::new(), bad), Err(Error::NotDirected { earlier: 0, later: 1 }));
    }

    #[test]
    fn unseparated_pair_is_reported() {
        let f = fam(&[&[&[1, 1, 0], &[0, 2, 0], &[0, 0, 1]]]);
        assert_eq!(separating_product(&f, &LocalRingContext::Field, 0), Err(Error::Unseparated { i: 0, j: 2 }));
        let c = complete_idempotents(&f, &LocalRingContext::Field).unwrap();
        assert_eq!(c.classes, vec![vec![0, 2], vec![1]]);
        assert!(verify(&f, &c).passed());
    }

    #[test]
    fn single_class_and_footnote_shift() {
        let f = fam(&[&[&[0, 1], &[0, 0]]]);
        let c = complete_idempotents(&f, &LocalRingContext::Field).unwrap();
        assert_eq!(c.shifted, vec![0]);
        assert_eq!(c.classes, vec![vec![0, 1]]);
        assert!(c.idempotents[0].is_identity());
    }

    #[test]
    fn separated_pipelines_agree() {
        let f = fam(&[&[&[1, 2, -1], &[0, 3, 4], &[0, 0, -2]], &[&[0, 1, 1], &[0, 0, 1], &[0, 0, 5]]]);
        let ctx = LocalRingContext::Field;
        let a = separated_idempotents(&f, &ctx).unwrap();
        let c = complete_idempotents(&f, &ctx).unwrap();
        assert_eq!(c.classes, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(a, c.idempotents);
        assert!(verify(&f, &c).passed());
    }

    #[test]
    fn dvr_separation_and_reduction() {
        let base = BaseField::Rationals;
        let ctx = DvrContext::new(base, Scalar::rational(2, 1), 't').unwrap();
        let k = ctx.ambient();
        let t = ctx.parameter();
        let two = k.from_i64(2);
        // diagonal (t, 2): difference t - 2 is not a unit
        let m = Matrix::from_rows(k, vec![vec![t.clone(), k.one()], vec![k.zero(), two.clone()]]).unwrap();
        let f = TriangularFamily::new(k, 2, vec![m]).unwrap();
        let local = LocalRingContext::Dvr(ctx.clone());
        assert_eq!(linkage_classes(&f, &local), vec![vec![0, 1]]);
        let reduced = f.reduce(&ctx).unwrap();
        assert_eq!(reduced.field(), Q);
        assert_eq!(linkage_classes(&reduced, &LocalRingContext::Field), vec![vec![0, 1]]);
        // a pole is rejected
        let bad = Matrix::from_rows(k, vec![vec![(&t - &two).inv().unwrap()]]).unwrap();
        let bad = TriangularFamily::new(k, 1, vec![bad]).unwrap();
        assert!(matches!(complete_idempotents(&bad, &local), Err(Error::NotInRing(-1))));
    }

    #[test]
    fn json_round_trip() {
        let f = fam(&[&[&[1, 2], &[0, 3]], &[&[0, 0], &[0, 1]]]);
        let g = TriangularFamily::from_json(&f.to_json()).unwrap();
        assert_eq!(f, g);
        let v = serde_json::json!({"d": 2, "field": "Q", "matrices": [[["1", "1/2"], ["0", "3"]]]});
        assert_eq!(TriangularFamily::from_json(&v).unwrap().residue(0, 1), &Q.from_i64(3));
        let v = serde_json::json!({"d": 2, "field": "Q", "matrices": [[["1", "0"], ["1", "3"]]]});
        assert!(TriangularFamily::from_json(&v).is_err());
    }

    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn random_separated_families(seed in any::<u64>(), d in 1usize..7, n in 1usize..4) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random::separated_family(&mut rng, d, n);
            let ctx = LocalRingContext::Field;
            let c = complete_idempotents(&f, &ctx).unwrap();
            prop_assert_eq!(c.classes.len(), d);
            let r = verify(&f, &c);
            prop_assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
            prop_assert_eq!(separated_idempotents(&f, &ctx).unwrap(), c.idempotents);
        }

        #[test]
        fn random_linkage_families(seed in any::<u64>(), d in 1usize..7, classes in 1usize..4) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let k = FieldKind::Prime(5);
            let (f, partition) = random::linkage_family(&mut rng, k, d, 2, classes);
            let c = complete_idempotents(&f, &LocalRingContext::Field).unwrap();
            prop_assert_eq!(&c.classes, &partition);
            let r = verify(&f, &c);
            prop_assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }

        #[test]
        fn commuting_inputs_commuting_outputs(seed in any::<u64>(), d in 1usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random::commuting_family(&mut rng, FieldKind::Rationals, d, 3);
            prop_assert!(f.commutes());
            let c = complete_idempotents(&f, &LocalRingContext::Field).unwrap();
            let r = verify(&f, &c);
            prop_assert!(r.checks.iter().any(|c| c.name.starts_with("outputs commute")));
            prop_assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
