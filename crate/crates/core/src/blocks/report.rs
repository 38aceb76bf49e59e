//! Verification of the block decomposition of `A_k`.
//!
//! Two statements are checked in corrected form.  `L_i` need not act
//! semisimply on `A_k` (already `(L_2 - 1)^2 = 0 ≠ L_2 - 1` in `H_{-1}(S_2)`),
//! so instead of `L_i g_st = r_s(i) g_st` and `L_i = Σ_T r_T(i) G_T` we check
//! that `g_st` is a generalised eigenvector, that `L_i - Σ_T r_T(i) G_T` is
//! nilpotent, and that the roots of the minimal polynomial are exactly `ℛ(i)`.

use serde_json::{json, Value};

use super::{hecke_block_predicate, BlockBasis, Blocks};
use crate::cellular::{AlgebraElement, CellModule};
use crate::field::{Poly, Scalar};
use crate::linalg::Matrix;
use crate::error::Result;
use crate::report::{first_failure, Report};
use crate::triangular::{complete_idempotents, verify, Completion, LocalRingContext, TriangularFamily};

fn in_span(field: crate::field::FieldKind, dim: usize, basis: &[Vec<Scalar>], extra: &[Vec<Scalar>]) -> bool {
    let base = Matrix::from_columns(field, dim, basis).rank();
    let all: Vec<Vec<Scalar>> = basis.iter().chain(extra).cloned().collect();
    Matrix::from_columns(field, dim, &all).rank() == base
}

fn is_nilpotent(m: &Matrix) -> bool {
    m.is_zero() || m.minimal_polynomial().is_ok_and(|p| p.is_monic_monomial())
}

/// `(M - r)^N v = 0` with `N = dim`.
fn generalised_eigenvector(m: &Matrix, r: &Scalar, v: &[Scalar]) -> bool {
    let mut w = v.to_vec();
    for _ in 0..m.rows() {
        if w.iter().all(Scalar::is_zero) {
            return true;
        }
        let mw = m.mul_vec(&w);
        w = mw.iter().zip(&w).map(|(a, b)| a - &(r * b)).collect();
    }
    w.iter().all(Scalar::is_zero)
}

pub fn block_report(b: &Blocks) -> Report {
    let sys = b.system;
    let d = &sys.special.datum;
    let k = d.field();
    let dim = d.dim();
    let one = d.one();
    let gs = &b.class_idempotents;
    let bases = b.block_bases();
    let mut r = Report::new();

    let reduced: Option<Vec<Vec<Scalar>>> = b
        .system
        .generic
        .table
        .contents
        .iter()
        .map(|row| row.iter().map(|c| sys.ctx.reduce(c).ok()).collect())
        .collect();
    r.check("contents of A_k are the residues of those of A_K", reduced.as_ref() == Some(&sys.special.table.contents));

    let nc = gs.len();
    r.check_first(
        "G_S G_T = delta_ST G_T",
        first_failure(
            (0..nc).flat_map(|a| (0..nc).map(move |c| (a, c))),
            |&(a, c)| {
                let p = d.mul(&gs[a], &gs[c]);
                if a == c { p == gs[a] } else { p.is_zero() }
            },
            |&(a, c)| format!("classes {a}, {c}"),
        ),
    );
    r.check_first("G_T* = G_T", first_failure(0..nc, |&a| d.star(&gs[a]) == gs[a], |a| format!("class {a}")));
    r.check("sum_T G_T = 1", gs.iter().fold(d.zero(), |acc, g| acc.add(g)) == one);

    let nb = bases.len();
    r.check_first(
        "G_Gamma are pairwise orthogonal idempotents",
        first_failure(
            (0..nb).flat_map(|a| (0..nb).map(move |c| (a, c))),
            |&(a, c)| {
                let p = d.mul(&bases[a].idempotent, &bases[c].idempotent);
                if a == c { p == bases[a].idempotent } else { p.is_zero() }
            },
            |&(a, c)| format!("blocks {a}, {c}"),
        ),
    );
    r.check("sum_Gamma G_Gamma = 1", bases.iter().fold(d.zero(), |acc, g| acc.add(&g.idempotent)) == one);
    r.check_first(
        "G_Gamma is central",
        first_failure(
            bases.iter().enumerate(),
            |(_, bb)| (0..dim).all(|i| d.mul(&bb.idempotent, &d.basis(i)) == d.mul(&d.basis(i), &bb.idempotent)),
            |(a, _)| format!("block {a}"),
        ),
    );

    r.check_first(
        "g_st = a_st + more dominant terms",
        first_failure(
            bases.iter().flat_map(|bb| bb.elements.iter()),
            |(l, s, t, g)| {
                let own = d.index(*l, *s, *t);
                g.coeff(own).is_one()
                    && g.support().all(|idx| {
                        let (m, u, v) = d.decode(idx);
                        idx == own
                            || d.lambda_greater(m, *l)
                            || (m == *l && dom_eq(d, m, u, *s) && dom_eq(d, m, v, *t))
                    })
            },
            |(l, s, t, _)| format!("g_{{{},{}}}", d.cell(*l).tableaux[*s], d.cell(*l).tableaux[*t]),
        ),
    );

    let cols = |bb: &BlockBasis| bb.elements.iter().map(|e| e.3.to_dense(dim)).collect::<Vec<_>>();
    let total: Vec<Vec<Scalar>> = bases.iter().flat_map(cols).collect();
    r.check("the g-basis is a basis of A_k", total.len() == dim && Matrix::from_columns(k, dim, &total).rank() == dim);

    r.check_first(
        "A_k^Gamma is closed under multiplication",
        first_failure(
            bases.iter().enumerate(),
            |(_, bb)| {
                let products: Vec<Vec<Scalar>> = bb
                    .elements
                    .iter()
                    .flat_map(|x| bb.elements.iter().map(move |y| (x, y)))
                    .map(|(x, y)| d.mul(&x.3, &y.3).to_dense(dim))
                    .collect();
                in_span(k, dim, &cols(bb), &products)
            },
            |(a, _)| format!("block {a}"),
        ),
    );
    r.check_first(
        "g-basis products across linkage classes vanish",
        first_failure(
            (0..nb).flat_map(|a| (0..nb).filter(move |&c| c != a).map(move |c| (a, c))),
            |&(a, c)| bases[a].elements.iter().all(|x| bases[c].elements.iter().all(|y| d.mul(&x.3, &y.3).is_zero())),
            |&(a, c)| format!("blocks {a}, {c}"),
        ),
    );
    r.check_first(
        "G_Gamma is the identity of A_k^Gamma",
        first_failure(
            bases.iter().enumerate(),
            |(_, bb)| bb.elements.iter().all(|e| d.mul(&bb.idempotent, &e.3) == e.3 && d.mul(&e.3, &bb.idempotent) == e.3),
            |(a, _)| format!("block {a}"),
        ),
    );
    r.check_first(
        "G_T g_st = delta g_st and g_st G_T = delta g_st",
        first_failure(
            bases.iter().flat_map(|bb| bb.elements.iter()),
            |(l, s, t, g)| {
                let (cs, ct) = (b.class_of[d.tableau_id(*l, *s)], b.class_of[d.tableau_id(*l, *t)]);
                (0..nc).all(|c| {
                    let left = if c == cs { g.clone() } else { d.zero() };
                    let right = if c == ct { g.clone() } else { d.zero() };
                    d.mul(&gs[c], g) == left && d.mul(g, &gs[c]) == right
                })
            },
            |(l, s, t, _)| format!("g_{{{},{}}}", d.cell(*l).tableaux[*s], d.cell(*l).tableaux[*t]),
        ),
    );

    let jm = &sys.special.table.jm;
    let lefts: Vec<Matrix> = jm.iter().map(|x| d.left_representation(x)).collect();
    let rights: Vec<Matrix> = jm.iter().map(|x| d.regular_representation(x)).collect();
    r.check_first(
        "g_st is a generalised eigenvector: (L_i - r_s(i))^N g_st = 0 = g_st (L_i - r_t(i))^N",
        first_failure(
            bases.iter().flat_map(|bb| bb.elements.iter()),
            |(l, s, t, g)| {
                let v = g.to_dense(dim);
                let (rs, rt) = (&b.classes[b.class_of[d.tableau_id(*l, *s)]], &b.classes[b.class_of[d.tableau_id(*l, *t)]]);
                (0..jm.len()).all(|i| {
                    generalised_eigenvector(&lefts[i], &rs.residues[i], &v) && generalised_eigenvector(&rights[i], &rt.residues[i], &v)
                })
            },
            |(l, s, t, _)| format!("g_{{{},{}}}", d.cell(*l).tableaux[*s], d.cell(*l).tableaux[*t]),
        ),
    );
    r.check_first(
        "L_i - sum_T r_T(i) G_T is nilpotent",
        first_failure(
            0..jm.len(),
            |&i| {
                let s = b.classes.iter().zip(gs).fold(d.zero(), |acc, (c, g)| acc.add(&g.scale(&c.residues[i])));
                is_nilpotent(&d.regular_representation(&jm[i].sub(&s)))
            },
            |&i| format!("i = {}", i + 1),
        ),
    );
    r.check_first(
        "the roots of the minimal polynomial of L_i on A_k are R(i)",
        first_failure(
            0..jm.len(),
            |&i| {
                let p = b.residue_set(i).iter().fold(Poly::one(k), |acc, c| acc.mul(&Poly::linear(k, c)));
                rights[i].minimal_polynomial().is_ok_and(|m| {
                    let deg = m.degree().unwrap_or(0) as u32;
                    p.divides(&m) && m.divides(&p.pow(deg))
                })
            },
            |&i| format!("i = {}", i + 1),
        ),
    );

    // cell modules: g_t = a_t G_{T_t}
    r.check_first(
        "{g_t} is a basis of C(lambda), orthogonal across residue classes",
        first_failure(
            0..d.num_cells(),
            |&l| {
                let module = d.module(l);
                let n = module.dim();
                let gram = module.gram_matrix();
                let cols: Vec<Vec<Scalar>> =
                    (0..n).map(|t| module.action(&gs[b.class_of[d.tableau_id(l, t)]]).col(t)).collect();
                let basis_ok = Matrix::from_columns(k, n, &cols).rank() == n;
                let form_ok = (0..n).all(|t| {
                    (0..n).all(|u| {
                        let same = b.class_of[d.tableau_id(l, t)] == b.class_of[d.tableau_id(l, u)];
                        let g = CellModule::form(&gram, &cols[t], &cols[u]);
                        let e = crate::cellular::unit(k, n, t);
                        if same { g == CellModule::form(&gram, &e, &cols[u]) } else { g.is_zero() }
                    })
                });
                basis_ok && form_ok
            },
            |&l| d.cell(l).label.clone(),
        ),
    );

    let p1 = jm.iter().fold(d.zero(), |acc, x| acc.add(x));
    let p2 = jm.iter().fold(d.zero(), |acc, x| acc.add(&d.mul(x, x)));
    let central = |p: &AlgebraElement| sys.special.generators.iter().all(|x| d.mul(p, x) == d.mul(x, p));
    r.check("power sums p_1, p_2 of the JM elements are central", central(&p1) && central(&p2));

    if let (Some(h), true) = (sys.special.hecke(), true) {
        let mut same_block = vec![vec![false; d.num_cells()]; d.num_cells()];
        for gamma in &b.linkage {
            for &x in &gamma.cells {
                for &y in &gamma.cells {
                    same_block[x][y] = true;
                }
            }
        }
        r.check_first(
            "linkage classes agree with the residue-multiset predicate",
            first_failure(
                (0..d.num_cells()).flat_map(|x| (0..d.num_cells()).map(move |y| (x, y))),
                |&(x, y)| hecke_block_predicate(&h.shapes[x], &h.shapes[y], &sys.ctx).ok() == Some(same_block[x][y]),
                |&(x, y)| format!("{} vs {}", h.shapes[x], h.shapes[y]),
            ),
        );
    }
    r
}

fn dom_eq(d: &crate::cellular::CellDatum, l: usize, u: usize, s: usize) -> bool {
    u == s || d.cell(l).dominates[u][s]
}

/// Whether each `L_i` acts semisimply on `A_k`, i.e. its minimal polynomial
/// is `∏_{r ∈ ℛ(i)} (X - r)`.
pub fn jm_semisimple(b: &Blocks) -> Vec<bool> {
    let d = &b.system.special.datum;
    let k = d.field();
    b.system
        .special
        .table
        .jm
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let p = b.residue_set(i).iter().fold(Poly::one(k), |acc, c| acc.mul(&Poly::linear(k, c)));
            d.regular_representation(x).minimal_polynomial().is_ok_and(|m| m == p)
        })
        .collect()
}

/// Classes, blocks and minimal polynomials as JSON.
pub fn summary(b: &Blocks) -> Value {
    let sys = b.system;
    let d = &sys.special.datum;
    let k = d.field();
    let var = 'X';
    let classes: Vec<Value> = b
        .classes
        .iter()
        .map(|c| {
            json!({
                "residues": c.residues.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "tableaux": c.members.iter().map(|&g| d.tableau_label(g)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let blocks: Vec<Value> = b
        .block_bases()
        .iter()
        .map(|bb| {
            json!({
                "cells": bb.cells.iter().map(|&l| d.cell(l).label.clone()).collect::<Vec<_>>(),
                "dimension": bb.elements.len(),
                "idempotent": bb.idempotent.to_json(),
                "g_basis": bb.elements.iter().map(|(l, s, t, g)| json!({
                    "cell": d.cell(*l).label,
                    "s": d.cell(*l).tableaux[*s],
                    "t": d.cell(*l).tableaux[*t],
                    "coefficients": g.to_dense(d.dim()).iter().map(ToString::to_string).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let minpolys: Vec<Value> = sys
        .special
        .table
        .jm
        .iter()
        .zip(jm_semisimple(b))
        .map(|(x, ss)| {
            let m = d.regular_representation(x).minimal_polynomial().unwrap_or_else(|_| Poly::zero(k));
            json!({"minimal_polynomial": m.pretty(var), "semisimple": ss})
        })
        .collect();
    json!({
        "field": k.to_string(),
        "q": sys.ctx.q().to_string(),
        "residue_classes": classes,
        "linkage_classes": blocks,
        "jm": minpolys,
    })
}

/// Runs the triangular pipeline on the JM family of `A_K` reduced modulo `π`
/// and compares with the class idempotents `G_T`.
pub fn appendix_agreement(b: &Blocks) -> Result<(Completion, Report)> {
    let sys = b.system;
    let generic = TriangularFamily::from_elements(&sys.generic.datum, &sys.generic.table.jm)?;
    let fam = generic.reduce(&sys.ctx)?;
    let c = complete_idempotents(&fam, &LocalRingContext::Field)?;
    let d = &sys.special.datum;
    let dim = d.dim();
    let mut r = Report::new();
    for check in verify(&fam, &c).checks {
        r.check_first(format!("appendix: {}", check.name), if check.passed { None } else { Some(check.detail.unwrap_or_default()) });
    }
    let special = TriangularFamily::from_elements(d, &sys.special.table.jm)?;
    r.check("reduced JM family is the JM family of A_k", fam == special);

    let column_class: Vec<usize> = (0..dim)
        .map(|j| {
            let (l, _, t) = d.decode(j);
            b.class_of[d.tableau_id(l, t)]
        })
        .collect();
    let mut expected: Vec<Vec<usize>> =
        (0..b.classes.len()).map(|c| (0..dim).filter(|&j| column_class[j] == c).collect()).collect();
    expected.sort();
    r.check("linkage classes of columns are the residue classes", c.classes == expected);

    let reps: Vec<Matrix> = b.class_idempotents.iter().map(|g| d.regular_representation(g)).collect();
    let flat = |ms: &[Matrix]| ms.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>();
    let k = d.field();
    let (a, g) = (flat(&c.idempotents), flat(&reps));
    let both: Vec<Vec<Scalar>> = a.iter().chain(&g).cloned().collect();
    let rank = |v: &[Vec<Scalar>]| Matrix::from_columns(k, dim * dim, v).rank();
    r.check("span of the appendix idempotents is the span of the G_T", rank(&a) == rank(&g) && rank(&both) == rank(&g));
    r.check(
        "each appendix idempotent is some R(G_T)",
        c.idempotents.iter().all(|e| reps.contains(e)),
    );
    Ok((c, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::ModularSystem;
    use crate::field::{BaseField, FieldKind};
    use crate::instances::Gates;

    #[test]
    fn n3_minus_one_report() {
        let sys = ModularSystem::hecke(3, BaseField::Rationals, Scalar::rational(-1, 1), Gates::default()).unwrap();
        let b = Blocks::new(&sys, Gates::default()).unwrap();
        let r = block_report(&b);
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:?}");
        let (c, agree) = appendix_agreement(&b).unwrap();
        assert_eq!(c.idempotents.len(), 2);
        assert!(agree.passed(), "{:?}", agree.failures().collect::<Vec<_>>());
        let dims: Vec<usize> = b.block_bases().iter().map(|bb| bb.elements.len()).collect();
        assert_eq!(dims, vec![2, 4]);
    }

    #[test]
    fn jm_not_semisimple_at_minus_one() {
        let sys = ModularSystem::hecke(2, BaseField::Rationals, Scalar::rational(-1, 1), Gates::default()).unwrap();
        let b = Blocks::new(&sys, Gates::default()).unwrap();
        assert_eq!(jm_semisimple(&b), vec![true, false]);
        let m = sys.special.datum.regular_representation(&sys.special.table.jm[1]).minimal_polynomial().unwrap();
        let k = FieldKind::Rationals;
        assert_eq!(m, Poly::linear(k, &k.one()).pow(2));
        assert!(block_report(&b).passed());
    }

    #[test]
    fn order_three_in_f7() {
        let sys = ModularSystem::hecke(3, BaseField::Prime(7), FieldKind::Prime(7).from_i64(2), Gates::default()).unwrap();
        let b = Blocks::new(&sys, Gates::default()).unwrap();
        assert_eq!(b.linkage.len(), 1);
        let r = block_report(&b);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
