//! Mechanical checks of the cell-datum and JM axioms on a built instance.

use rand::Rng;

use super::{GateKind, Gates, Instance};
use crate::cellular::{AlgebraElement, CellModule};
use crate::report::{first_failure, Report};

/// Exhaustive up to this many basis pairs, sampled beyond.
const EXHAUSTIVE_PAIRS: usize = 1024;

fn pairs<R: Rng>(rng: &mut R, dim: usize, samples: usize) -> Vec<(usize, usize)> {
    if dim * dim <= EXHAUSTIVE_PAIRS {
        (0..dim).flat_map(|i| (0..dim).map(move |j| (i, j))).collect()
    } else {
        (0..samples).map(|_| (rng.gen_range(0..dim), rng.gen_range(0..dim))).collect()
    }
}

pub fn instance_report<R: Rng>(inst: &Instance, gates: Gates, rng: &mut R, samples: usize) -> Report {
    let d = &inst.datum;
    let dim = d.dim();
    let jm = &inst.table.jm;
    let mut r = Report::new();
    let ps = pairs(rng, dim, samples);

    r.check_first(
        "a_st a_uv = sum r a_sv' + sum r a_u'v + higher cells",
        first_failure(
            ps.iter(),
            |&&(i, j)| {
                let (l, s, _) = d.decode(i);
                let (m, _, v) = d.decode(j);
                let p = d.basis_product(i, j);
                let ok = p.support().all(|k| {
                    let (c, x, y) = d.decode(k);
                    (d.lambda_greater(c, l) || (c == l && x == s)) && (d.lambda_greater(c, m) || (c == m && y == v))
                });
                ok
            },
            |(i, j)| format!("basis {i} * basis {j}"),
        ),
    );
    r.check_first(
        "* is an involutive anti-automorphism",
        first_failure(
            ps.iter(),
            |&&(i, j)| {
                let (x, y) = (d.basis(i), d.basis(j));
                d.star(&d.star(&x)) == x && d.star(&d.mul(&x, &y)) == d.mul(&d.star(&y), &d.star(&x))
            },
            |(i, j)| format!("basis {i}, {j}"),
        ),
    );

    r.check_first("L_i* = L_i", first_failure(jm.iter().enumerate(), |(_, x)| d.star(x) == **x, |(i, _)| format!("L_{}", i + 1)));
    r.check_first(
        "L_i L_j = L_j L_i",
        first_failure(
            (0..jm.len()).flat_map(|a| (a + 1..jm.len()).map(move |b| (a, b))),
            |&(a, b)| d.mul(&jm[a], &jm[b]) == d.mul(&jm[b], &jm[a]),
            |(a, b)| format!("L_{}, L_{}", a + 1, b + 1),
        ),
    );
    let content = |l: usize, t: usize, i: usize| inst.table.content(d.tableau_id(l, t), i).clone();
    if gates.check_instance(GateKind::RegularRepresentation, inst).is_ok() {
        r.check_first(
            "R(L_i) is upper triangular with diagonal c_t(i) at column (s, t)",
            first_failure(
                0..jm.len(),
                |&i| {
                    let m = d.regular_representation(&jm[i]);
                    m.is_upper_triangular()
                        && (0..dim).all(|k| {
                            let (l, _, t) = d.decode(k);
                            *m.get(k, k) == content(l, t, i)
                        })
                },
                |i| format!("L_{}", i + 1),
            ),
        );
    } else {
        r.check_first(
            "L_i acts on each C(lambda) upper triangularly with diagonal c_t(i)",
            first_failure(
                (0..d.num_cells()).flat_map(|l| (0..jm.len()).map(move |i| (l, i))),
                |&(l, i)| {
                    let m = d.module(l).action(&jm[i]);
                    m.is_upper_triangular() && (0..m.rows()).all(|t| *m.get(t, t) == content(l, t, i))
                },
                |(l, i)| format!("{} L_{}", d.cell(*l).label, i + 1),
            ),
        );
    }

    let mut form_ok: Option<String> = None;
    let mut assoc_ok: Option<String> = None;
    let mut hom_ok: Option<String> = None;
    for l in 0..d.num_cells() {
        let module: CellModule = d.module(l);
        let n = module.dim();
        let gram = module.gram_matrix();
        let last = n - 1;
        let sym = (0..n).all(|t| (0..n).all(|u| gram.get(t, u) == gram.get(u, t) && module.inner_product_via(last, last, t, u) == *gram.get(t, u)));
        if !sym && form_ok.is_none() {
            form_ok = Some(d.cell(l).label.clone());
        }
        for _ in 0..samples.min(8) {
            let x = d.basis(rng.gen_range(0..dim));
            let y = d.basis(rng.gen_range(0..dim));
            let (ax, ay) = (module.action(&x), module.action(&y));
            let axs = module.action(&d.star(&x));
            let (t, u) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let et = crate::cellular::unit(d.field(), n, t);
            let eu = crate::cellular::unit(d.field(), n, u);
            if CellModule::form(&gram, &ax.mul_vec(&et), &eu) != CellModule::form(&gram, &et, &axs.mul_vec(&eu)) && assoc_ok.is_none() {
                assoc_ok = Some(d.cell(l).label.clone());
            }
            if module.action(&d.mul(&x, &y)) != ay.mul(&ax) && hom_ok.is_none() {
                hom_ok = Some(d.cell(l).label.clone());
            }
        }
    }
    r.check_first("<,> is symmetric and independent of (s, v)", form_ok);
    r.check_first("<a x, b> = <a, b x*>", assoc_ok);
    r.check_first("C(lambda) action is an anti-homomorphism: M(xy) = M(y) M(x)", hom_ok);
    r.check("sum of |T(lambda)|^2 is dim A", d.cell_dimension_count() == dim);
    let one: AlgebraElement = d.one();
    r.check("1 is a two-sided identity", (0..dim).all(|i| d.mul(&one, &d.basis(i)) == d.basis(i) && d.mul(&d.basis(i), &one) == d.basis(i)));
    r
}
