use super::Seminormal;
use crate::cellular::AlgebraElement;
use crate::error::Result;
use crate::field::Scalar;
use crate::instances::{GateKind, Gates};
use crate::linalg::Matrix;

/// The `F_t` and `f_st` as elements of the algebra, computed through the
/// regular representations of the JM elements.
pub struct AlgebraLevel<'a> {
    sn: &'a Seminormal<'a>,
    reps: Vec<Matrix>,
    ft: Vec<AlgebraElement>,
}

impl<'a> AlgebraLevel<'a> {
    pub fn new(sn: &'a Seminormal<'a>, gates: Gates) -> Result<Self> {
        let inst = sn.instance();
        gates.check_instance(GateKind::RegularRepresentation, inst)?;
        let d = &inst.datum;
        let reps: Vec<Matrix> = inst.table.jm.iter().map(|x| d.regular_representation(x)).collect();
        let one = d.one().to_dense(d.dim());
        let ft = (0..d.num_tableaux())
            .map(|g| Ok(AlgebraElement::from_dense(d.field(), &sn.apply(g, &reps, one.clone())?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraLevel { sn, reps, ft })
    }

    pub fn seminormal(&self) -> &'a Seminormal<'a> {
        self.sn
    }

    /// Regular representations of `L_1..L_M`.
    pub fn reps(&self) -> &[Matrix] {
        &self.reps
    }

    /// `F_t` for the global tableau number `g`.
    pub fn ft(&self, g: usize) -> &AlgebraElement {
        &self.ft[g]
    }

    pub fn all_ft(&self) -> &[AlgebraElement] {
        &self.ft
    }

    /// `F_λ = Σ_{t ∈ T(λ)} F_t`.
    pub fn f_lambda(&self, l: usize) -> AlgebraElement {
        let d = &self.sn.instance().datum;
        (0..d.cell_size(l)).fold(d.zero(), |acc, t| acc.add(&self.ft[d.tableau_id(l, t)]))
    }

    /// `x F_t`.
    pub fn times_ft(&self, x: &AlgebraElement, g: usize) -> AlgebraElement {
        let d = &self.sn.instance().datum;
        let v = self.sn.apply(g, &self.reps, x.to_dense(d.dim())).expect("factors exist once separation holds");
        AlgebraElement::from_dense(d.field(), &v)
    }

    /// `F_s x`, using `F_s* = F_s`.
    pub fn ft_times(&self, g: usize, x: &AlgebraElement) -> AlgebraElement {
        let d = &self.sn.instance().datum;
        d.star(&self.times_ft(&d.star(x), g))
    }

    /// `f_st = F_s a_st F_t` for `s, t ∈ T(λ)`.
    pub fn f(&self, l: usize, s: usize, t: usize) -> AlgebraElement {
        let d = &self.sn.instance().datum;
        let right = self.times_ft(&d.basis(d.index(l, s, t)), d.tableau_id(l, t));
        self.ft_times(d.tableau_id(l, s), &right)
    }

    /// `Σ_t c_t(i) F_t` for 0-based `i`.
    pub fn spectral_sum(&self, i: usize) -> AlgebraElement {
        let inst = self.sn.instance();
        let d = &inst.datum;
        (0..d.num_tableaux()).fold(d.zero(), |acc, g| acc.add(&self.ft[g].scale(inst.table.content(g, i))))
    }

    pub fn one_vector(&self) -> Vec<Scalar> {
        let d = &self.sn.instance().datum;
        d.one().to_dense(d.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{BaseField, FieldKind};
    use crate::instances::{build_hecke, build_toy};

    #[test]
    fn hecke_two_trivial_idempotent() {
        let k = FieldKind::functions(BaseField::Rationals, 'q');
        let q = k.generator().unwrap();
        let h = build_hecke(2, k, q.clone(), Gates::default()).unwrap();
        let sn = Seminormal::new(&h).unwrap();
        let al = AlgebraLevel::new(&sn, Gates::default()).unwrap();
        // F_(2) = (T_1 + 1)/(q + 1)
        let data = h.hecke().unwrap();
        let t1 = data.t_element(k, &[1, 0]);
        let want = t1.add(&h.datum.one()).scale(&(&q + &k.one()).inv().unwrap());
        assert_eq!(al.ft(0), &want);
        assert_eq!(al.ft(0).add(al.ft(1)), h.datum.one());
    }

    #[test]
    fn toy_lagrange() {
        let t = build_toy(FieldKind::Rationals, vec![Scalar::rational(0, 1), Scalar::rational(1, 1)]).unwrap();
        let sn = Seminormal::new(&t).unwrap();
        let al = AlgebraLevel::new(&sn, Gates::default()).unwrap();
        let x = &t.table.jm[0];
        // the tableau of λ = 2 (content c_2 = 1) comes first
        assert_eq!(al.ft(0), x);
        assert_eq!(al.ft(1), &t.datum.one().sub(x));
    }
}
