//! Verification suites for the separated case.  Each returns a [`Report`]
//! with one entry per identity; failures carry the first counterexample.

use super::{AlgebraLevel, Seminormal, SeminormalData};
use crate::cellular::{AlgebraElement, CellModule};
use crate::field::{Poly, Scalar};
use crate::linalg::Matrix;
use crate::report::{first_failure, Report};

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

/// Module-level identities for every cell: unitriangularity, `γ_t ≠ 0`,
/// the `F_t` actions, `⟨f_s, f_t⟩ = δ_st γ_t = ⟨a_s, f_t⟩`, the eigenvalue
/// equations `f_t L_i = c_t(i) f_t`, `G(λ) = det Gram` and irreducibility.
pub fn module_suite(sn: &Seminormal, data: &[SeminormalData]) -> Report {
    let inst = sn.instance();
    let d = &inst.datum;
    let mut r = Report::new();
    let label = |l: usize| d.cell(l).label.clone();

    r.check_first(
        "transition a -> f is upper unitriangular",
        first_failure(data, |s| s.transition.is_upper_triangular() && s.transition.diag().iter().all(Scalar::is_one), |s| label(s.lambda)),
    );
    r.check_first(
        "gamma_t != 0",
        first_failure(data.iter().flat_map(|s| (0..s.gammas.len()).map(move |t| (s, t))), |(s, t)| !s.gammas[*t].is_zero(), |(s, t)| d.cell(s.lambda).tableaux[*t].clone()),
    );
    r.check_first(
        "F_t acts idempotently and orthogonally on C(lambda), summing to 1",
        first_failure(
            data,
            |s| {
                let n = s.ft_actions.len();
                let sum = s.ft_actions.iter().fold(Matrix::zeros(d.field(), n, n), |a, b| a.add(b));
                sum.is_identity()
                    && pairs(n).all(|(a, b)| {
                        let p = s.ft_actions[a].mul(&s.ft_actions[b]);
                        if a == b { p == s.ft_actions[a] } else { p.is_zero() }
                    })
            },
            |s| label(s.lambda),
        ),
    );
    r.check_first(
        "<f_s, f_t> = delta_st gamma_t",
        first_failure(
            data.iter().flat_map(|s| pairs(s.gammas.len()).map(move |p| (s, p))),
            |(s, (a, b))| {
                let want = if a == b { s.gammas[*b].clone() } else { d.field().zero() };
                CellModule::form(&s.gram, &s.f(*a), &s.f(*b)) == want
            },
            |(s, (a, b))| format!("{} at ({a}, {b})", label(s.lambda)),
        ),
    );
    // a_s = Σ_v (P^{-1})_{vs} f_v, so <a_s, f_t> = (P^{-1})_{ts} γ_t: this is
    // δ_st γ_t unless t ▷ s, where it need not vanish.
    r.check_first(
        "<a_s, f_t> = (P^-1)_ts gamma_t, = delta_st gamma_t unless t dominates s",
        first_failure(
            data.iter().flat_map(|s| pairs(s.gammas.len()).map(move |p| (s, p))),
            |(s, (a, b))| {
                let Ok(pinv) = s.transition.inverse() else { return false };
                let e = crate::cellular::unit(d.field(), s.gammas.len(), *a);
                let want = pinv.get(*b, *a) * &s.gammas[*b];
                let dominated = d.cell(s.lambda).dominates[*b][*a];
                CellModule::form(&s.gram, &e, &s.f(*b)) == want && (dominated || a == b || want.is_zero())
            },
            |(s, (a, b))| format!("{} at ({a}, {b})", label(s.lambda)),
        ),
    );
    r.check_first(
        "f_t L_i = c_t(i) f_t on C(lambda)",
        first_failure(
            data.iter().flat_map(|s| (0..s.gammas.len()).map(move |t| (s, t))),
            |(s, t)| {
                let f = s.f(*t);
                let g = d.tableau_id(s.lambda, *t);
                s.jm_actions.iter().enumerate().all(|(i, m)| {
                    let c = inst.table.content(g, i);
                    m.mul_vec(&f) == f.iter().map(|x| c * x).collect::<Vec<_>>()
                })
            },
            |(s, t)| d.cell(s.lambda).tableaux[*t].clone(),
        ),
    );
    r.check_first(
        "G(lambda) = prod gamma_t = det Gram(lambda)",
        first_failure(data, |s| s.gram.determinant().ok() == Some(s.gram_determinant()), |s| label(s.lambda)),
    );
    r.check_first(
        "gram_rank(lambda) = |T(lambda)|",
        first_failure(data, |s| s.gram.rank() == s.gammas.len(), |s| label(s.lambda)),
    );
    r.check("sum |T(lambda)|^2 = dim A", d.cell_dimension_count() == d.dim());
    if d.field().is_function_field() && inst.hecke().is_some() {
        r.check_first(
            "prod gamma_t is a Laurent polynomial",
            first_failure(data, |s| s.gram_determinant().as_function().is_some_and(|f| f.is_laurent()), |s| label(s.lambda)),
        );
    }
    r
}

/// Algebra-level identities for the seminormal basis: `f_st f_uv = δ_tu γ_t f_sv`
/// (with `γ_t` taken from the module computation), `L_i f_st = c_s(i) f_st`,
/// `f_st L_i = c_t(i) f_st`, `f_st F_u = δ_tu f_su`, and `f_st A ≅ C(λ)`.
pub fn orthogonality_suite(al: &AlgebraLevel, data: &[SeminormalData]) -> Report {
    let sn = al.seminormal();
    let inst = sn.instance();
    let d = &inst.datum;
    let mut r = Report::new();
    // f_st for every cell
    let fs: Vec<Vec<Vec<AlgebraElement>>> = (0..d.num_cells())
        .map(|l| (0..d.cell_size(l)).map(|s| (0..d.cell_size(l)).map(|t| al.f(l, s, t)).collect()).collect())
        .collect();
    let tab = |l: usize, t: usize| d.cell(l).tableaux[t].clone();

    let mut mult_fail = None;
    'outer: for l in 0..d.num_cells() {
        for m in 0..d.num_cells() {
            let (nl, nm) = (d.cell_size(l), d.cell_size(m));
            for (s, t) in pairs(nl) {
                for (u, v) in pairs(nm) {
                    let p = d.mul(&fs[l][s][t], &fs[m][u][v]);
                    let want = if l == m && t == u { fs[l][s][v].scale(&data[l].gammas[t]) } else { d.zero() };
                    if p != want {
                        mult_fail = Some(format!("f_{{{},{}}} f_{{{},{}}}", tab(l, s), tab(l, t), tab(m, u), tab(m, v)));
                        break 'outer;
                    }
                }
            }
        }
    }
    r.check_first("f_st f_uv = delta_tu gamma_t f_sv", mult_fail);

    let mut eig_fail = None;
    let mut proj_fail = None;
    for l in 0..d.num_cells() {
        for (s, t) in pairs(d.cell_size(l)) {
            let f = &fs[l][s][t];
            let (gs, gt) = (d.tableau_id(l, s), d.tableau_id(l, t));
            for (i, li) in inst.table.jm.iter().enumerate() {
                let left = d.mul(li, f) == f.scale(inst.table.content(gs, i));
                let right = d.mul(f, li) == f.scale(inst.table.content(gt, i));
                if !(left && right) && eig_fail.is_none() {
                    eig_fail = Some(format!("f_{{{},{}}} with L_{}", tab(l, s), tab(l, t), i + 1));
                }
            }
            for u in 0..d.num_tableaux() {
                let want = if u == gt { f.clone() } else { d.zero() };
                if al.times_ft(f, u) != want && proj_fail.is_none() {
                    proj_fail = Some(format!("f_{{{},{}}} F_{}", tab(l, s), tab(l, t), d.tableau_label(u)));
                }
            }
        }
    }
    r.check_first("L_i f_st = c_s(i) f_st and f_st L_i = c_t(i) f_st", eig_fail);
    r.check_first("f_st F_u = delta_tu f_su", proj_fail);
    r.check_first("f_st A is a copy of C(lambda)", first_failure(0..d.num_cells(), |&l| cyclic_ok(al, l, &fs[l][0][0]), |&l| d.cell(l).label.clone()));
    r
}

/// `f_st A` has dimension `|T(λ)|`, and `a_v ↦ F_s a_sv` intertwines the
/// action on `C(λ)` with right multiplication (checked for `s = t = first`).
fn cyclic_ok(al: &AlgebraLevel, l: usize, fst: &AlgebraElement) -> bool {
    let inst = al.seminormal().instance();
    let d = &inst.datum;
    let n = d.cell_size(l);
    let left = d.left_representation(fst);
    if left.rank() != n {
        return false;
    }
    let phi: Vec<AlgebraElement> = (0..n).map(|v| al.ft_times(d.tableau_id(l, 0), &d.basis(d.index(l, 0, v)))).collect();
    let module = d.module(l);
    inst.generators.iter().chain(&inst.table.jm).all(|x| {
        let m = module.action(x);
        (0..n).all(|v| {
            let want = (0..n).fold(d.zero(), |acc, u| acc.add(&phi[u].scale(m.get(u, v))));
            d.mul(&phi[v], x) == want
        })
    })
}

/// `F_t^2 = F_t`, `F_s F_t = 0`, `Σ F_t = 1`, `F_λ` central and
/// `F_t = γ_t^{-1} f_tt`.
pub fn idempotent_suite(al: &AlgebraLevel, data: &[SeminormalData]) -> Report {
    let d = &al.seminormal().instance().datum;
    let n = d.num_tableaux();
    let mut r = Report::new();
    r.check_first(
        "F_s F_t = delta_st F_t",
        first_failure(
            pairs(n),
            |&(a, b)| {
                let p = d.mul(al.ft(a), al.ft(b));
                if a == b { &p == al.ft(a) } else { p.is_zero() }
            },
            |&(a, b)| format!("F_{} F_{}", d.tableau_label(a), d.tableau_label(b)),
        ),
    );
    let sum = al.all_ft().iter().fold(d.zero(), |acc, f| acc.add(f));
    r.check("sum_t F_t = 1", sum == d.one());
    r.check_first(
        "F_lambda is central",
        first_failure(
            0..d.num_cells(),
            |&l| {
                let fl = al.f_lambda(l);
                (0..d.dim()).all(|b| d.mul(&fl, &d.basis(b)) == d.mul(&d.basis(b), &fl))
            },
            |&l| d.cell(l).label.clone(),
        ),
    );
    r.check_first(
        "F_t = gamma_t^{-1} f_tt",
        first_failure(
            0..n,
            |&g| {
                let (l, t) = d.decode_tableau(g);
                data[l].gammas[t].inv().is_some_and(|inv| al.f(l, t, t).scale(&inv) == *al.ft(g))
            },
            |&g| d.tableau_label(g),
        ),
    );
    r
}

/// `L_i = Σ_t c_t(i) F_t` and the minimal polynomial of `L_i` on `A` is
/// `∏_{c ∈ 𝒞(i)} (X - c)`.
pub fn spectral_identities(al: &AlgebraLevel) -> Report {
    let sn = al.seminormal();
    let inst = sn.instance();
    let field = inst.field();
    let mut r = Report::new();
    r.check_first(
        "L_i = sum_t c_t(i) F_t",
        first_failure(0..inst.table.m(), |&i| al.spectral_sum(i) == inst.table.jm[i], |&i| format!("i = {}", i + 1)),
    );
    r.check_first(
        "minimal polynomial of L_i = prod_{c in C(i)} (X - c)",
        first_failure(
            0..inst.table.m(),
            |&i| {
                let want = sn.content_set(i).iter().fold(Poly::one(field), |acc, c| acc.mul(&Poly::linear(field, c)));
                al.reps()[i].minimal_polynomial().ok() == Some(want)
            },
            |&i| format!("i = {}", i + 1),
        ),
    );
    r
}

/// The `F_t` are linearly independent and span the centralizer of the JM
/// elements, which therefore has dimension `|T(Λ)|`.
pub fn maximal_abelian_check(al: &AlgebraLevel) -> Report {
    let inst = al.seminormal().instance();
    let d = &inst.datum;
    let n = d.num_tableaux();
    let mut r = Report::new();
    let cols: Vec<Vec<Scalar>> = al.all_ft().iter().map(|f| f.to_dense(d.dim())).collect();
    let span = Matrix::from_columns(d.field(), d.dim(), &cols);
    let rank = span.rank();
    r.check_first("dim span{F_t} = |T(Lambda)|", (rank != n).then(|| format!("rank {rank}, expected {n}")));
    let blocks: Vec<Matrix> = inst
        .table
        .jm
        .iter()
        .zip(al.reps())
        .map(|(x, rep)| rep.sub(&d.left_representation(x)))
        .collect();
    let stacked = Matrix::stack(&blocks);
    let dim = d.dim() - stacked.rank();
    r.check_first("dim centralizer{L_i} = |T(Lambda)|", (dim != n).then(|| format!("dimension {dim}, expected {n}")));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{BaseField, FieldKind};
    use crate::instances::{build_hecke, build_matrix_algebra, build_toy, Gates, Instance};

    fn run_all(inst: &Instance) -> Report {
        let sn = Seminormal::new(inst).unwrap();
        let data = sn.all_data().unwrap();
        let mut r = module_suite(&sn, &data);
        let al = AlgebraLevel::new(&sn, Gates::default()).unwrap();
        r.extend(orthogonality_suite(&al, &data));
        r.extend(idempotent_suite(&al, &data));
        r.extend(spectral_identities(&al));
        r.extend(maximal_abelian_check(&al));
        r
    }

    fn assert_all(r: &Report) {
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn small_instances_pass() {
        let k = FieldKind::functions(BaseField::Rationals, 'q');
        assert_all(&run_all(&build_hecke(2, k, k.generator().unwrap(), Gates::default()).unwrap()));
        assert_all(&run_all(&build_matrix_algebra(FieldKind::Rationals, 3).unwrap()));
        let cs = [0, 1, 3].iter().map(|&c| Scalar::rational(c, 1)).collect();
        assert_all(&run_all(&build_toy(FieldKind::Rationals, cs).unwrap()));
    }

    #[test]
    fn symmetric_group_three() {
        let h = build_hecke(3, FieldKind::Rationals, Scalar::rational(1, 1), Gates::default()).unwrap();
        assert_all(&run_all(&h));
    }
}
