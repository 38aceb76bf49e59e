use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use seminormal::blocks::report::{appendix_agreement, block_report, summary};
use seminormal::blocks::{Blocks, ModularSystem, PARAMETER};
use seminormal::field::{BaseField, DvrContext, FieldKind};
use seminormal::instances::verify::instance_report;
use seminormal::instances::{AlgebraName, GateKind, Gates, Instance, InstanceSpec};
use seminormal::jm::suite::{idempotent_suite, maximal_abelian_check, module_suite, orthogonality_suite, spectral_identities};
use seminormal::jm::{AlgebraLevel, Seminormal};
use seminormal::linalg::Matrix;
use seminormal::report::Report;
use seminormal::triangular::{complete_idempotents, completion_json, random, verify, LocalRingContext, TriangularFamily};
use seminormal::{Error, Result};

use crate::render::columns;
use crate::{AppendixArgs, Cli, Command, InstanceArgs, Outcome, VerifyArgs};

pub fn dispatch(cli: &Cli, gates: Gates) -> Result<Outcome> {
    match &cli.command {
        Command::Gram(a) => gram(&a.spec()?.build(gates)?),
        Command::Seminormal(a) => seminormal(&a.spec()?.build(gates)?),
        Command::Idempotents(a) => idempotents(&a.spec()?.build(gates)?, gates),
        Command::Blocks(a) => blocks(a, gates),
        Command::Appendix(a) => appendix(a),
        Command::Verify(a) => run_verify(a, gates, cli.seed),
    }
}

fn var(field: FieldKind) -> char {
    field.var().unwrap_or('q')
}

fn header(inst: &Instance) -> String {
    format!("{} over {}\n", inst.name(), inst.field())
}

fn matrix_rows(m: &Matrix, v: char) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.pretty(v)).collect()).collect()
}

fn gram(inst: &Instance) -> Result<Outcome> {
    let d = &inst.datum;
    let v = var(inst.field());
    let mut report = Report::new();
    let mut cells = Vec::new();
    let mut rows = vec![vec!["cell".to_string(), "tableau".into(), "gamma_t".into()]];
    let sn = Seminormal::new(inst).ok();
    for l in 0..d.num_cells() {
        let cell = d.cell(l);
        let det = d.module(l).gram_matrix().determinant()?;
        let mut entry = json!({"cell": cell.label, "det_gram": det.to_string()});
        if let Some(sn) = &sn {
            let data = sn.data(l)?;
            let g = data.gram_determinant();
            report.check(format!("G{} = product of gamma_t = det Gram", cell.label), g == det);
            if let (Some(f), Some(_)) = (g.as_function(), inst.hecke()) {
                report.check(format!("G{} is a Laurent polynomial", cell.label), f.is_laurent());
            }
            entry["gammas"] = cell.tableaux.iter().zip(&data.gammas).map(|(t, g)| json!({"tableau": t, "gamma": g.to_string()})).collect();
            entry["G"] = json!(g.to_string());
            for (t, g) in cell.tableaux.iter().zip(&data.gammas) {
                rows.push(vec![cell.label.clone(), t.clone(), g.pretty(v)]);
            }
        }
        rows.push(vec![cell.label.clone(), "G".into(), det.pretty(v)]);
        cells.push(entry);
    }
    let mut table = header(inst);
    if sn.is_none() {
        table.push_str("not separated: Gram determinants only\n");
    }
    table.push_str(&columns(&rows));
    Ok(Outcome {
        command: "gram",
        result: json!({"instance": inst.name(), "field": inst.field().to_string(), "separated": sn.is_some(), "cells": cells}),
        report,
        table,
    })
}

fn seminormal(inst: &Instance) -> Result<Outcome> {
    let sn = Seminormal::new(inst)?;
    let data = sn.all_data()?;
    let d = &inst.datum;
    let v = var(inst.field());
    let report = module_suite(&sn, &data);
    let mut table = header(inst);
    let mut cells = Vec::new();
    for sd in &data {
        let cell = d.cell(sd.lambda);
        table.push_str(&format!("\ncell {}: f_t = a_t F_t (column t)\n", cell.label));
        table.push_str(&columns(&matrix_rows(&sd.transition, v)));
        let gammas: Vec<String> = sd.gammas.iter().map(|g| g.pretty(v)).collect();
        table.push_str(&format!("gamma: {}\n", gammas.join(", ")));
        cells.push(json!({
            "cell": cell.label,
            "tableaux": cell.tableaux,
            "transition": sd.transition.to_json(),
            "gammas": sd.gammas.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "F_t": sd.ft_actions.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        }));
    }
    Ok(Outcome { command: "seminormal", result: json!({"instance": inst.name(), "cells": cells}), report, table })
}

fn idempotents(inst: &Instance, gates: Gates) -> Result<Outcome> {
    let sn = Seminormal::new(inst)?;
    let data = sn.all_data()?;
    let al = AlgebraLevel::new(&sn, gates)?;
    let d = &inst.datum;
    let v = var(inst.field());
    let mut report = idempotent_suite(&al, &data);
    report.extend(orthogonality_suite(&al, &data));
    report.extend(spectral_identities(&al));
    report.extend(maximal_abelian_check(&al));
    let mut rows = vec![vec!["tableau".to_string(), "F_t (basis index: coefficient)".into()]];
    let mut fts = Vec::new();
    for g in 0..d.num_tableaux() {
        let f = al.ft(g);
        let terms: Vec<String> = f.terms().map(|(i, c)| format!("{i}: {}", c.pretty(v))).collect();
        rows.push(vec![d.tableau_label(g), terms.join(", ")]);
        fts.push(json!({"tableau": d.tableau_label(g), "F_t": f.to_json()}));
    }
    let mut table = header(inst);
    table.push_str(&columns(&rows));
    Ok(Outcome { command: "idempotents", result: json!({"instance": inst.name(), "idempotents": fts}), report, table })
}

fn modular_system(spec: &InstanceSpec, gates: Gates) -> Result<ModularSystem> {
    let k: FieldKind = spec.field.as_deref().unwrap_or("Q").parse()?;
    let base = match k {
        FieldKind::Rationals => BaseField::Rationals,
        FieldKind::Prime(p) => BaseField::Prime(p),
        FieldKind::Functions { .. } => return Err(Error::Invalid("blocks: --field is the residue field k and must be Q or F_p".into())),
    };
    let q = spec.q.as_ref().ok_or_else(|| Error::Invalid("blocks: --q is required".into()))?.parse(k)?;
    match spec.algebra {
        AlgebraName::Hecke => ModularSystem::hecke(spec.n.ok_or_else(|| Error::Invalid("`n` is required".into()))?, base, q, gates),
        AlgebraName::Toy => {
            let ambient = FieldKind::functions(base, PARAMETER);
            let cs = spec.contents.as_ref().ok_or_else(|| Error::Invalid("the toy algebra needs `contents`".into()))?;
            let cs = cs.iter().map(|c| c.parse(ambient)).collect::<Result<Vec<_>>>()?;
            ModularSystem::toy(base, q, cs)
        }
        AlgebraName::Matrix => Err(Error::Invalid("blocks: the matrix algebra is semisimple over every field".into())),
    }
}

fn blocks(a: &InstanceArgs, gates: Gates) -> Result<Outcome> {
    let sys = modular_system(&a.spec()?, gates)?;
    let b = Blocks::new(&sys, gates)?;
    let mut report = block_report(&b);
    let agreement = match appendix_agreement(&b) {
        Ok((_, r)) => r,
        Err(e) => {
            let mut r = Report::new();
            r.check_first("appendix pipeline on the reduced JM family", Some(e.to_string()));
            r
        }
    };
    report.extend(agreement);
    let s = summary(&b);
    let d = &sys.special.datum;
    let mut table = format!("{} over {}, reduced from {} at t = {}\n\nresidue classes:\n", sys.special.name(), sys.residue_field(), sys.ctx.ambient(), sys.ctx.q());
    let mut rows = Vec::new();
    for c in &b.classes {
        let res: Vec<String> = c.residues.iter().map(ToString::to_string).collect();
        let ts: Vec<String> = c.members.iter().map(|&g| d.tableau_label(g)).collect();
        rows.push(vec![format!("({})", res.join(",")), ts.join(" ")]);
    }
    table.push_str(&columns(&rows));
    table.push_str("\nlinkage classes:\n");
    let mut rows = Vec::new();
    for bb in b.block_bases() {
        let cells: Vec<String> = bb.cells.iter().map(|&l| d.cell(l).label.clone()).collect();
        rows.push(vec![format!("{{{}}}", cells.join(", ")), format!("dim {}", bb.elements.len())]);
    }
    table.push_str(&columns(&rows));
    Ok(Outcome { command: "blocks", result: s, report, table })
}

fn read_json(path: &std::path::Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}, line {} column {}: {e}", path.display(), e.line(), e.column())))
}

fn appendix(a: &AppendixArgs) -> Result<Outcome> {
    let fam = TriangularFamily::from_json(&read_json(&a.input)?)?;
    let (fam, ctx) = match &a.q {
        None => (fam, LocalRingContext::Field),
        Some(q) => {
            let FieldKind::Functions { base, var } = fam.field() else {
                return Err(Error::Invalid("--q needs a family over a rational function field".into()));
            };
            let q = base.kind().parse_scalar(q)?;
            let dvr = DvrContext::new(base, q, var)?;
            if a.reduce {
                (fam.reduce(&dvr)?, LocalRingContext::Field)
            } else {
                (fam, LocalRingContext::Dvr(dvr))
            }
        }
    };
    let c = complete_idempotents(&fam, &ctx)?;
    let report = verify(&fam, &c);
    let v = var(fam.field());
    let mut table = format!("d = {} over {}, {} operators\n", fam.dim(), fam.field(), fam.len());
    if !c.shifted.is_empty() {
        let ks: Vec<String> = c.shifted.iter().map(|k| format!("L_{}", k + 1)).collect();
        table.push_str(&format!("replaced by 1 + L_k: {}\n", ks.join(", ")));
    }
    for (j, e) in c.classes.iter().zip(&c.idempotents) {
        let members: Vec<String> = j.iter().map(|i| (i + 1).to_string()).collect();
        table.push_str(&format!("\nJ = {{{}}}\n", members.join(", ")));
        table.push_str(&columns(&matrix_rows(e, v)));
    }
    let mut result = completion_json(&fam, &c, &report);
    result["classes"] = json!(c.classes.iter().map(|j| j.iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>());
    result["shifted"] = json!(c.shifted.iter().map(|k| k + 1).collect::<Vec<_>>());
    if let Some(o) = result.as_object_mut() {
        o.remove("checks");
    }
    Ok(Outcome { command: "appendix", result, report, table })
}

fn random_suites(seed: u64, trials: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new();
    let mut fail = None;
    for trial in 0..trials {
        let d = 1 + trial % 6;
        let fam = random::separated_family(&mut rng, d, 1 + trial % 3);
        let ok = complete_idempotents(&fam, &LocalRingContext::Field).map(|c| c.classes.len() == d && verify(&fam, &c).passed());
        if !matches!(ok, Ok(true)) && fail.is_none() {
            fail = Some(format!("trial {trial}"));
        }
    }
    r.check_first(format!("{trials} random separated families: complete orthogonal shape-{{i}} idempotents"), fail);
    let mut fail = None;
    for trial in 0..trials {
        let d = 2 + trial % 5;
        let (fam, partition) = random::linkage_family(&mut rng, FieldKind::Prime(5), d, 2, 1 + trial % 3);
        let ok = complete_idempotents(&fam, &LocalRingContext::Field).map(|c| c.classes == partition && verify(&fam, &c).passed());
        if !matches!(ok, Ok(true)) && fail.is_none() {
            fail = Some(format!("trial {trial}"));
        }
    }
    r.check_first(format!("{trials} random linkage families over F_5: complete orthogonal shape-J idempotents"), fail);
    r
}

fn run_verify(a: &VerifyArgs, gates: Gates, seed: u64) -> Result<Outcome> {
    let spec = a.instance.spec()?;
    let inst = spec.build(gates)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = instance_report(&inst, gates, &mut rng, a.samples);
    let mut notes = Vec::new();
    match Seminormal::new(&inst) {
        Ok(sn) => {
            let data = sn.all_data()?;
            report.extend(module_suite(&sn, &data));
            match AlgebraLevel::new(&sn, gates) {
                Ok(al) => {
                    report.extend(idempotent_suite(&al, &data));
                    report.extend(orthogonality_suite(&al, &data));
                    report.extend(spectral_identities(&al));
                    report.extend(maximal_abelian_check(&al));
                }
                Err(e @ Error::SizeGate { .. }) => notes.push(format!("algebra-level suites skipped: {e}")),
                Err(e) => return Err(e),
            }
        }
        Err(Error::SeparationViolated { first, second }) => {
            notes.push(format!("not separated ({first}, {second}): separated-case suites skipped"));
            let numeric = !inst.field().is_function_field();
            if numeric && spec.algebra == AlgebraName::Hecke && gates.check_instance(GateKind::RegularRepresentation, &inst).is_ok() {
                let mut bspec = spec.clone();
                bspec.field = Some(inst.field().to_string());
                let sys = modular_system(&bspec, gates)?;
                let b = Blocks::new(&sys, gates)?;
                report.extend(block_report(&b));
            }
        }
        Err(e) => return Err(e),
    }
    report.extend(random_suites(seed, a.trials));
    let mut table = header(&inst);
    for n in &notes {
        table.push_str(n);
        table.push('\n');
    }
    let result = json!({"instance": inst.name(), "field": inst.field().to_string(), "seed": seed, "notes": notes});
    Ok(Outcome { command: "verify", result, report, table })
}
