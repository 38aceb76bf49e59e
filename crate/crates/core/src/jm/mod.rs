//! The separated case: the idempotents `F_t`, the seminormal basis and the
//! factorisation of Gram determinants into the scalars `γ_t`.
//!
//! `F_t = ∏_i ∏_{c ∈ 𝒞(i), c ≠ c_t(i)} (L_i - c)/(c_t(i) - c)`, factors in the
//! order `i` ascending, then `c` in the order of [`ContentTable::content_set`].

mod algebra;
pub mod suite;

pub use algebra::AlgebraLevel;

use crate::cellular::{CellDatum, ContentTable};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::instances::Instance;
use crate::linalg::Matrix;

/// A pair of comparable tableaux (global numbers, more dominant first) with
/// equal content vectors, if there is one.
pub fn check_separation(datum: &CellDatum, table: &ContentTable) -> Option<(usize, usize)> {
    let n = datum.num_tableaux();
    for g in 0..n {
        for h in g + 1..n {
            let comparable = datum.tableau_dominates(g, h) || datum.tableau_dominates(h, g);
            if comparable && table.contents[g] == table.contents[h] {
                return if datum.tableau_dominates(g, h) { Some((g, h)) } else { Some((h, g)) };
            }
        }
    }
    None
}

/// One factor `(L_i - c) · inv` of `F_t`.
#[derive(Clone, Debug)]
pub struct Factor {
    pub i: usize,
    pub c: Scalar,
    pub inv: Scalar,
}

/// Per-cell seminormal data on `C(λ)`.
#[derive(Clone, Debug)]
pub struct SeminormalData {
    pub lambda: usize,
    /// Column `t` holds `f_t = a_t F_t` in the basis `{a_v}`.
    pub transition: Matrix,
    pub gammas: Vec<Scalar>,
    /// Action of each `F_t` on `C(λ)`.
    pub ft_actions: Vec<Matrix>,
    pub gram: Matrix,
    /// Action of each `L_i` on `C(λ)`.
    pub jm_actions: Vec<Matrix>,
}

impl SeminormalData {
    pub fn gram_determinant(&self) -> Scalar {
        self.gammas.iter().fold(self.gram.field().one(), |acc, g| &acc * g)
    }

    pub fn f(&self, t: usize) -> Vec<Scalar> {
        self.transition.col(t)
    }
}

/// An instance whose JM elements separate `T(Λ)`.
pub struct Seminormal<'a> {
    inst: &'a Instance,
    sets: Vec<Vec<Scalar>>,
}

impl<'a> Seminormal<'a> {
    pub fn new(inst: &'a Instance) -> Result<Self> {
        if let Some((g, h)) = check_separation(&inst.datum, &inst.table) {
            return Err(Error::SeparationViolated {
                first: inst.datum.tableau_label(g),
                second: inst.datum.tableau_label(h),
            });
        }
        let sets = (0..inst.table.m()).map(|i| inst.table.content_set(i)).collect();
        Ok(Seminormal { inst, sets })
    }

    pub fn instance(&self) -> &'a Instance {
        self.inst
    }

    /// `𝒞(i)` for 0-based `i`.
    pub fn content_set(&self, i: usize) -> &[Scalar] {
        &self.sets[i]
    }

    pub fn factors(&self, g: usize) -> Result<Vec<Factor>> {
        let mut out = Vec::new();
        for (i, set) in self.sets.iter().enumerate() {
            let ct = self.inst.table.content(g, i);
            for c in set.iter().filter(|&c| c != ct) {
                let inv = (ct - c).inv().ok_or_else(|| Error::SeparationViolated {
                    first: self.inst.datum.tableau_label(g),
                    second: format!("content {c} at {}", i + 1),
                })?;
                out.push(Factor { i, c: c.clone(), inv });
            }
        }
        Ok(out)
    }

    /// `v ↦ v F_t` given the column-convention matrices of the `L_i`.
    pub fn apply(&self, g: usize, ops: &[Matrix], mut v: Vec<Scalar>) -> Result<Vec<Scalar>> {
        for f in self.factors(g)? {
            let w = ops[f.i].mul_vec(&v);
            v = w.iter().zip(&v).map(|(a, b)| &(a - &(&f.c * b)) * &f.inv).collect();
        }
        Ok(v)
    }

    /// The matrix of `F_t` given the matrices of the `L_i`.
    pub fn operator(&self, g: usize, ops: &[Matrix]) -> Result<Matrix> {
        let n = ops[0].rows();
        let field = ops[0].field();
        let cols = (0..n)
            .map(|j| self.apply(g, ops, crate::cellular::unit(field, n, j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(field, n, &cols))
    }

    pub fn jm_actions(&self, l: usize) -> Vec<Matrix> {
        let m = self.inst.datum.module(l);
        self.inst.table.jm.iter().map(|x| m.action(x)).collect()
    }

    pub fn data(&self, l: usize) -> Result<SeminormalData> {
        let d = &self.inst.datum;
        let module = d.module(l);
        let gram = module.gram_matrix();
        let jm_actions = self.jm_actions(l);
        let n = module.dim();
        let ft_actions = (0..n)
            .map(|t| self.operator(d.tableau_id(l, t), &jm_actions))
            .collect::<Result<Vec<_>>>()?;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|t| ft_actions[t].col(t)).collect();
        let transition = Matrix::from_columns(d.field(), n, &cols);
        let gammas = cols.iter().map(|f| crate::cellular::CellModule::form(&gram, f, f)).collect();
        Ok(SeminormalData { lambda: l, transition, gammas, ft_actions, gram, jm_actions })
    }

    pub fn all_data(&self) -> Result<Vec<SeminormalData>> {
        (0..self.inst.datum.num_cells()).map(|l| self.data(l)).collect()
    }

    /// `G(λ) = ∏_t γ_t`.
    pub fn gram_determinant(&self, l: usize) -> Result<Scalar> {
        Ok(self.data(l)?.gram_determinant())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{BaseField, FieldKind};
    use crate::instances::{build_hecke, build_matrix_algebra, build_toy, Gates};

    fn rat(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&c| Scalar::rational(c, 1)).collect()
    }

    #[test]
    fn separation_examples() {
        let k = FieldKind::functions(BaseField::Rationals, 'q');
        let h = build_hecke(3, k, k.generator().unwrap(), Gates::default()).unwrap();
        assert_eq!(check_separation(&h.datum, &h.table), None);

        let h = build_hecke(2, FieldKind::Rationals, Scalar::rational(-1, 1), Gates::default()).unwrap();
        assert_eq!(check_separation(&h.datum, &h.table), Some((0, 1)));
        assert_eq!(h.table.contents[0], h.table.contents[1]);
        assert_eq!(h.table.contents[0], rat(&[0, 1]));

        let t = build_toy(FieldKind::Rationals, rat(&[0, 0])).unwrap();
        assert!(check_separation(&t.datum, &t.table).is_some());
        assert!(matches!(Seminormal::new(&t), Err(Error::SeparationViolated { .. })));
    }

    #[test]
    fn toy_gammas_and_determinant() {
        let t = build_toy(FieldKind::Rationals, rat(&[0, 1, 3])).unwrap();
        let sn = Seminormal::new(&t).unwrap();
        // cell 0 is λ = 3
        assert_eq!(sn.gram_determinant(0).unwrap(), Scalar::rational(6, 1));
        assert_eq!(sn.gram_determinant(2).unwrap(), Scalar::rational(1, 1));
    }

    #[test]
    fn matrix_gammas_are_one() {
        let m = build_matrix_algebra(FieldKind::Rationals, 3).unwrap();
        let data = Seminormal::new(&m).unwrap().data(0).unwrap();
        assert!(data.gammas.iter().all(Scalar::is_one));
        assert!(data.transition.is_identity());
    }

    #[test]
    fn hecke_trivial_gamma() {
        let k = FieldKind::functions(BaseField::Rationals, 'q');
        let q = k.generator().unwrap();
        let h = build_hecke(3, k, q.clone(), Gates::default()).unwrap();
        let g = Seminormal::new(&h).unwrap().data(0).unwrap().gammas[0].clone();
        let one = k.one();
        assert_eq!(g, &(&one + &q) * &(&(&one + &q) + &(&q * &q)));
    }
}
