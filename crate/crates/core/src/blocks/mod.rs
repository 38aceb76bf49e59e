//! The non-separated case: a modular system `(R, K, k)` with `R` the
//! localisation of `k[t, t^{-1}]` at `(t - q)`, residue and linkage classes,
//! the lifted idempotents `G_T`, the g-basis and block decompositions.

pub mod report;

use crate::cellular::{AlgebraElement, CellDatum, ContentTable};
use crate::error::{Error, Result};
use crate::field::{quantum_integer, BaseField, DvrContext, FieldKind, Scalar};
use crate::instances::hecke::Partition;
use crate::instances::{build_hecke, build_toy, Gates, Instance};
use crate::jm::{AlgebraLevel, Seminormal};

pub const PARAMETER: char = 't';

/// The generic algebra `A_K` (over `k(t)`) and its specialisation `A_k`,
/// built with the same cellular basis order.
pub struct ModularSystem {
    pub ctx: DvrContext,
    pub generic: Instance,
    pub special: Instance,
}

impl ModularSystem {
    /// `A_R = H_{R,t}(S_n)` and `A_k = H_{k,q}(S_n)`.
    pub fn hecke(n: usize, base: BaseField, q: Scalar, gates: Gates) -> Result<ModularSystem> {
        let ctx = DvrContext::new(base, q.clone(), PARAMETER)?;
        let generic = build_hecke(n, ctx.ambient(), ctx.parameter(), gates)?;
        let special = build_hecke(n, ctx.residue_field(), q, gates)?;
        Ok(ModularSystem { ctx, generic, special })
    }

    /// The toy algebra with contents in `R ⊂ k(t)`, specialised at `t = q`.
    pub fn toy(base: BaseField, q: Scalar, contents: Vec<Scalar>) -> Result<ModularSystem> {
        let ctx = DvrContext::new(base, q, PARAMETER)?;
        let k = ctx.ambient();
        let contents: Vec<Scalar> = contents.iter().map(|c| k.embed(c)).collect();
        let reduced = contents.iter().map(|c| ctx.reduce(c)).collect::<Result<Vec<_>>>()?;
        let generic = build_toy(k, contents)?;
        let special = build_toy(ctx.residue_field(), reduced)?;
        Ok(ModularSystem { ctx, generic, special })
    }

    pub fn residue_field(&self) -> FieldKind {
        self.ctx.residue_field()
    }
}

/// Tableaux (global numbers) sharing a residue vector.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueClass {
    pub residues: Vec<Scalar>,
    pub members: Vec<usize>,
}

/// A set of cells closed under residual linkage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkageClass {
    pub cells: Vec<usize>,
}

/// `r_t(i)` for every tableau, after checking that distinct residues come
/// from contents whose difference is a unit of `R`.
pub fn residues(table: &ContentTable, ctx: &DvrContext) -> Result<Vec<Vec<Scalar>>> {
    let all: Vec<&Scalar> = table.contents.iter().flatten().collect();
    let mut distinct: Vec<(&Scalar, Scalar)> = Vec::new();
    for c in all {
        if distinct.iter().all(|(d, _)| *d != c) {
            distinct.push((c, ctx.reduce(c)?));
        }
    }
    for (a, (c, rc)) in distinct.iter().enumerate() {
        for (d, rd) in &distinct[a + 1..] {
            if rc != rd && !ctx.is_unit(&(*c - *d)) {
                return Err(Error::ResidueHypothesis { first: c.to_string(), second: d.to_string() });
            }
        }
    }
    table.contents.iter().map(|row| row.iter().map(|c| ctx.reduce(c)).collect()).collect()
}

/// Residue classes in order of first appearance over `T(Λ)`.
pub fn residue_classes(table: &ContentTable, ctx: &DvrContext) -> Result<Vec<ResidueClass>> {
    let mut classes: Vec<ResidueClass> = Vec::new();
    for (g, r) in residues(table, ctx)?.into_iter().enumerate() {
        match classes.iter_mut().find(|c| c.residues == r) {
            Some(c) => c.members.push(g),
            None => classes.push(ResidueClass { residues: r, members: vec![g] }),
        }
    }
    Ok(classes)
}

/// Connected components of "λ and μ have tableaux in a common residue class".
pub fn linkage_classes(datum: &CellDatum, classes: &[ResidueClass]) -> Vec<LinkageClass> {
    let n = datum.num_cells();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for class in classes {
        let cells: Vec<usize> = class.members.iter().map(|&g| datum.decode_tableau(g).0).collect();
        for &c in &cells[1..] {
            let (a, b) = (find(&mut parent, cells[0]), find(&mut parent, c));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut out: Vec<LinkageClass> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; n];
    for l in 0..n {
        let r = find(&mut parent, l);
        match root_of[r] {
            Some(i) => out[i].cells.push(l),
            None => {
                root_of[r] = Some(out.len());
                out.push(LinkageClass { cells: vec![l] });
            }
        }
    }
    out
}

/// The residues `[c - r]_t mod π` of the nodes of `λ`, as a sorted multiset.
pub fn residue_multiset(lambda: &Partition, ctx: &DvrContext) -> Result<Vec<Scalar>> {
    let t = ctx.parameter();
    let mut out = lambda
        .nodes()
        .map(|(r, c)| ctx.reduce(&quantum_integer(c as i64 - r as i64, &t)?))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(Scalar::sort_key);
    Ok(out)
}

/// Whether `ℛ_λ = ℛ_μ` as multisets.
pub fn hecke_block_predicate(lambda: &Partition, mu: &Partition, ctx: &DvrContext) -> Result<bool> {
    Ok(residue_multiset(lambda, ctx)? == residue_multiset(mu, ctx)?)
}

/// `G_T`: the reduction mod `π` of `F_T = Σ_{t ∈ T} F_t`, after checking
/// that every coordinate of `F_T` lies in `R`.
pub fn class_idempotent(al: &AlgebraLevel, class: &ResidueClass, ctx: &DvrContext) -> Result<AlgebraElement> {
    let d = &al.seminormal().instance().datum;
    let ft = class.members.iter().fold(d.zero(), |acc, &g| acc.add(al.ft(g)));
    for (index, c) in ft.terms() {
        if let Some(valuation) = ctx.valuation(c).filter(|&v| v < 0) {
            return Err(Error::NotIntegral { index, valuation });
        }
    }
    ft.try_map(ctx.residue_field(), |c| ctx.reduce(c))
}

/// The g-basis of one linkage class together with `G_Γ`.
#[derive(Clone, Debug)]
pub struct BlockBasis {
    pub cells: Vec<usize>,
    /// `(λ, s, t, g_st)`.
    pub elements: Vec<(usize, usize, usize, AlgebraElement)>,
    pub idempotent: AlgebraElement,
}

/// Classes, lifted idempotents and block data of a modular system.
pub struct Blocks<'a> {
    pub system: &'a ModularSystem,
    pub classes: Vec<ResidueClass>,
    pub linkage: Vec<LinkageClass>,
    /// Residue class of each tableau.
    pub class_of: Vec<usize>,
    /// `G_T` for each residue class, in `A_k`.
    pub class_idempotents: Vec<AlgebraElement>,
}

impl<'a> Blocks<'a> {
    pub fn new(system: &'a ModularSystem, gates: Gates) -> Result<Blocks<'a>> {
        let classes = residue_classes(&system.generic.table, &system.ctx)?;
        let linkage = linkage_classes(&system.generic.datum, &classes);
        let mut class_of = vec![0; system.generic.datum.num_tableaux()];
        for (i, c) in classes.iter().enumerate() {
            for &g in &c.members {
                class_of[g] = i;
            }
        }
        let sn = Seminormal::new(&system.generic)?;
        let al = AlgebraLevel::new(&sn, gates)?;
        let class_idempotents = classes
            .iter()
            .map(|c| class_idempotent(&al, c, &system.ctx))
            .collect::<Result<Vec<_>>>()?;
        Ok(Blocks { system, classes, linkage, class_of, class_idempotents })
    }

    /// Residue classes and linkage classes only (no idempotents, no gate).
    pub fn partition_only(system: &ModularSystem) -> Result<(Vec<ResidueClass>, Vec<LinkageClass>)> {
        let classes = residue_classes(&system.generic.table, &system.ctx)?;
        let linkage = linkage_classes(&system.generic.datum, &classes);
        Ok((classes, linkage))
    }

    fn special(&self) -> &CellDatum {
        &self.system.special.datum
    }

    /// `g_st = G_{T_s} a_st G_{T_t}` in `A_k`.
    pub fn g(&self, l: usize, s: usize, t: usize) -> AlgebraElement {
        let d = self.special();
        let gs = &self.class_idempotents[self.class_of[d.tableau_id(l, s)]];
        let gt = &self.class_idempotents[self.class_of[d.tableau_id(l, t)]];
        d.mul(&d.mul(gs, &d.basis(d.index(l, s, t))), gt)
    }

    /// `G_Γ`: the sum of the `G_T` over the residue classes inside `Γ`.
    pub fn block_idempotent(&self, gamma: &LinkageClass) -> AlgebraElement {
        let d = self.special();
        self.classes
            .iter()
            .zip(&self.class_idempotents)
            .filter(|(c, _)| gamma.cells.contains(&d.decode_tableau(c.members[0]).0))
            .fold(d.zero(), |acc, (_, g)| acc.add(g))
    }

    pub fn block_basis(&self, gamma: &LinkageClass) -> BlockBasis {
        let d = self.special();
        let mut elements = Vec::new();
        for &l in &gamma.cells {
            let n = d.cell_size(l);
            for s in 0..n {
                for t in 0..n {
                    elements.push((l, s, t, self.g(l, s, t)));
                }
            }
        }
        BlockBasis { cells: gamma.cells.clone(), elements, idempotent: self.block_idempotent(gamma) }
    }

    pub fn block_bases(&self) -> Vec<BlockBasis> {
        self.linkage.iter().map(|g| self.block_basis(g)).collect()
    }

    /// `ℛ(i)`: the distinct residues at `i`, in order of first appearance.
    pub fn residue_set(&self, i: usize) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = Vec::new();
        for c in &self.classes {
            if !out.contains(&c.residues[i]) {
                out.push(c.residues[i].clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hecke(n: usize, q: i64) -> ModularSystem {
        ModularSystem::hecke(n, BaseField::Rationals, Scalar::rational(q, 1), Gates::default()).unwrap()
    }

    #[test]
    fn n3_at_minus_one() {
        let sys = hecke(3, -1);
        let (classes, linkage) = Blocks::partition_only(&sys).unwrap();
        let rat = |v: &[i64]| v.iter().map(|&c| Scalar::rational(c, 1)).collect::<Vec<_>>();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].residues, rat(&[0, 1, 0]));
        assert_eq!(classes[0].members, vec![0, 3]);
        assert_eq!(classes[1].residues, rat(&[0, 1, 1]));
        assert_eq!(classes[1].members, vec![1, 2]);
        assert_eq!(linkage, vec![LinkageClass { cells: vec![0, 2] }, LinkageClass { cells: vec![1] }]);
    }

    #[test]
    fn predicate_examples() {
        let ctx = DvrContext::new(BaseField::Rationals, Scalar::rational(-1, 1), 't').unwrap();
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert!(hecke_block_predicate(&p(&[3]), &p(&[1, 1, 1]), &ctx).unwrap());
        assert!(!hecke_block_predicate(&p(&[3]), &p(&[2, 1]), &ctx).unwrap());
        let f7 = DvrContext::new(BaseField::Prime(7), FieldKind::Prime(7).from_i64(2), 't').unwrap();
        assert!(hecke_block_predicate(&p(&[3]), &p(&[2, 1]), &f7).unwrap());
        assert!(hecke_block_predicate(&p(&[2, 1]), &p(&[1, 1, 1]), &f7).unwrap());
    }

    #[test]
    fn two_at_minus_one_is_one_class() {
        let sys = hecke(2, -1);
        let b = Blocks::new(&sys, Gates::default()).unwrap();
        assert_eq!(b.classes.len(), 1);
        assert_eq!(b.class_idempotents[0], sys.special.datum.one());
    }

    #[test]
    fn toy_collapsing_contents() {
        let k = FieldKind::functions(BaseField::Rationals, 't');
        let sys = ModularSystem::toy(BaseField::Rationals, Scalar::rational(0, 1), vec![k.zero(), k.generator().unwrap()]).unwrap();
        let b = Blocks::new(&sys, Gates::default()).unwrap();
        assert_eq!(b.classes.len(), 1);
        assert_eq!(b.classes[0].residues, vec![Scalar::rational(0, 1)]);
        assert_eq!(b.class_idempotents[0], sys.special.datum.one());
    }

    #[test]
    fn separated_classes_are_singletons() {
        // q = 2 over Q: [k]_2 never vanishes for small k
        let sys = hecke(3, 2);
        let (classes, linkage) = Blocks::partition_only(&sys).unwrap();
        assert!(classes.iter().all(|c| c.members.len() == 1));
        assert_eq!(linkage.len(), 3);
    }
}
