//! Acceptance criteria 1–9. Every comparison is exact; each criterion prints
//! one `criterion N: PASS|FAIL` line. Runs without the libtest harness so the
//! verdicts are always visible.

use std::path::Path;
use std::process::Command;

use diffalg::cli::{check_structure, generate_structures, GenKind};
use diffalg::cohom::CochainComplex;
use diffalg::corresp::{check_crossed_module, cocycle_to_skeletal, crossed_to_strict, skeletal_to_cocycle, strict_to_crossed};
use diffalg::derived::{graph_subalgebra_check, mc_check};
use diffalg::diffainf2::{check_diff_morphism, compose_diff_morphism, is_skeletal, is_strict, DiffAInf2Morphism, TwoTermDiffAInf};
use diffalg::diffalg::check_difference;
use diffalg::exactlin::{int, Lin};
use diffalg::format::{parse, print, Structure};
use diffalg::genkit::{catalog, gen};
use diffalg::hbimod::{check_diff_hbimod, semidirect_ainf2, semidirect_diff, DiffHBimod2};
use diffalg::twoalg::{
    alpha, alpha_inverse, check_diffass2, check_diffass2_morphism, compose_diffass2_morphism, functor_s, functor_s_mor, functor_t, functor_t_mor, is_strict_2alg,
    recoordinatize, DiffAss2Morphism,
};

const MAX_DIM: usize = 4;

fn verdict(n: u32, failures: &[String], summary: String) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {status} ({summary})");
    for f in failures.iter().take(10) {
        println!("  {f}");
    }
    if !failures.is_empty() {
        panic!("criterion {n} failed");
    }
}

fn corpus() -> Vec<TwoTermDiffAInf> {
    gen::gen_diff_ainf_corpus(17, MAX_DIM)
}

fn criterion_1_difference_operator_triple_agreement() {
    let mut failures = Vec::new();
    let (mut pairs, mut valid) = (0, 0);
    for (k, e) in catalog::catalog_algebras().into_iter().enumerate() {
        let mut ops = catalog::gen_difference_ops(&e.alg);
        ops.extend(gen::random_ops(&e.alg, 1000 + k as u64, 26));
        for d in ops {
            let eq1 = check_difference(&e.alg, &d).unwrap().passed();
            let graph = graph_subalgebra_check(&e.alg, &d).unwrap().passed();
            let mc = mc_check(&e.alg, &d).unwrap();
            pairs += 1;
            valid += eq1 as usize;
            if eq1 != graph || graph != mc {
                failures.push(format!("{}: identity {eq1}, graph {graph}, MC {mc}", e.name));
            }
        }
    }
    if pairs < 200 {
        failures.push(format!("only {pairs} pairs"));
    }
    verdict(1, &failures, format!("{pairs} pairs, {valid} valid"));
}

fn criterion_2_cochain_complex_law() {
    let mut failures = Vec::new();
    let mut count = 0;
    for (k, da) in gen::difference_algebras().into_iter().enumerate() {
        for (j, bm) in gen::coefficient_bimodules(&da).unwrap().into_iter().enumerate() {
            let cx = CochainComplex::new(da.clone(), bm).unwrap();
            for degree in 0..=3 {
                let c = gen::random_cochain(&cx, degree, (100 * k + 10 * j + degree) as u64);
                let dd = cx.diff_coboundary(&cx.diff_coboundary(&c).unwrap()).unwrap();
                count += 1;
                if !dd.is_zero() {
                    failures.push(format!("{} degree {degree} coefficients {j}", da.space()));
                }
            }
        }
    }
    verdict(2, &failures, format!("{count} cochains"));
}

fn criterion_3_cocycles_and_skeletal_structures() {
    let mut failures = Vec::new();
    let mut count = 0;
    for (k, da) in gen::difference_algebras().into_iter().enumerate() {
        for (j, bm) in gen::coefficient_bimodules(&da).unwrap().into_iter().enumerate() {
            let data = gen::gen_cocycle(&da, &bm, (7 * k + j) as u64).unwrap();
            let cx = CochainComplex::new(da.clone(), bm).unwrap();
            count += 1;
            if !cx.is_3_cocycle(&data.mu, &data.chi).unwrap() {
                failures.push(format!("coboundary on {} is not a cocycle", da.space()));
                continue;
            }
            let x = cocycle_to_skeletal(&data).unwrap();
            if !x.check().unwrap().passed() || !is_skeletal(&x) {
                failures.push(format!("skeletal structure on {} is invalid", da.space()));
            }
            let back = skeletal_to_cocycle(&x).unwrap();
            if back != data {
                failures.push("cocycle → skeletal → cocycle differs".into());
            }
            if cocycle_to_skeletal(&back).unwrap() != x {
                failures.push("skeletal → cocycle → skeletal differs".into());
            }
        }
    }
    if count < 50 {
        failures.push(format!("only {count} instances"));
    }
    verdict(3, &failures, format!("{count} instances"));
}

fn criterion_4_crossed_modules_and_strict_structures() {
    let mut failures = Vec::new();
    let cms = gen::gen_crossed_modules();
    let minus_id = cms.iter().filter(|cm| cm.base.d == cm.base.alg.identity().neg()).count();
    let identity = cms.iter().filter(|cm| cm.partial.rank() == cm.base.alg.dim() && cm.top.alg.dim() == cm.base.alg.dim()).count();
    for cm in &cms {
        if !check_crossed_module(cm).unwrap().passed() {
            failures.push(format!("invalid crossed module over {}", cm.base.space()));
            continue;
        }
        let x = crossed_to_strict(cm).unwrap();
        if !is_strict(&x) || !x.check().unwrap().passed() {
            failures.push("image is not a valid strict structure".into());
        }
        let back = strict_to_crossed(&x).unwrap();
        if back != *cm {
            failures.push("crossed → strict → crossed differs".into());
        }
        if crossed_to_strict(&back).unwrap() != x {
            failures.push("strict → crossed → strict differs".into());
        }
    }
    if cms.len() < 50 || minus_id == 0 || identity == 0 {
        failures.push(format!("{} instances, {identity} with ∂ = Id, {minus_id} with d = −Id", cms.len()));
    }
    verdict(4, &failures, format!("{} instances, {identity} with ∂ = Id, {minus_id} with d = −Id", cms.len()));
}

fn hbimod_is_strict(dhb: &DiffHBimod2) -> bool {
    let b = &dhb.base;
    b.nu_aav.is_zero() && b.nu_ava.is_zero() && b.nu_vaa.is_zero() && dhb.theta_am.is_zero() && dhb.theta_ma.is_zero()
}

fn criterion_5_semidirect_products_are_sound() {
    let mut failures = Vec::new();
    let mut count = 0;
    for (da, dhb) in gen::gen_diff_hbimods() {
        if da.alg.dim() > MAX_DIM {
            continue;
        }
        count += 1;
        if !check_diff_hbimod(&da, &dhb).unwrap().passed() {
            failures.push(format!("generated bimodule over {} invalid", da.space()));
            continue;
        }
        let a = semidirect_ainf2(&da.alg, &dhb.base).unwrap();
        let r = diffalg::ainf2::check_ainf2(&a).unwrap();
        if !r.passed() {
            failures.push(format!("semidirect A∞ product fails {:?}", r.failed_tags()));
        }
        let x = semidirect_diff(&da, &dhb).unwrap();
        let r = diffalg::diffainf2::check_diffop2(&x.ainf, &x.dop).unwrap();
        if !r.passed() {
            failures.push(format!("semidirect difference operator fails {:?}", r.failed_tags()));
        }
        if dhb.base.delta.is_zero() && !is_skeletal(&x) {
            failures.push("skeletal input, non-skeletal output".into());
        }
        if hbimod_is_strict(&dhb) && !is_strict(&x) {
            failures.push("strict input, non-strict output".into());
        }
    }
    verdict(5, &failures, format!("{count} bimodules up to homotopy"));
}

/// A unipotent change of coordinates on `C1` that moves `T(x)` off the image of `T`.
fn shear(c1: &diffalg::exactlin::Space) -> Lin {
    Lin::from_fn(c1.clone(), c1.clone(), |i, j| int((i == j || j == i + 1) as i64))
}

fn criterion_6_s_and_t_are_inverse_equivalences() {
    let mut failures = Vec::new();
    let xs = corpus();
    let mut moved = 0;
    for (k, x) in xs.iter().enumerate() {
        let tx = functor_t(x).unwrap();
        if functor_s(&tx).unwrap() != *x {
            failures.push(format!("#{k}: S(T(x)) ≠ x"));
        }
        if is_strict_2alg(&tx).unwrap() != is_strict(x) {
            failures.push(format!("#{k}: T changes strictness"));
        }
        let c = recoordinatize(&tx, &shear(&tx.tv.c1)).unwrap();
        if !check_diffass2(&c).unwrap().passed() {
            failures.push(format!("#{k}: recoordinatized T(x) invalid"));
            continue;
        }
        if is_strict(&functor_s(&c).unwrap()) != is_strict_2alg(&c).unwrap() {
            failures.push(format!("#{k}: S changes strictness"));
        }
        let (ts, a) = alpha(&c).unwrap();
        moved += (ts != c) as usize;
        let b = alpha_inverse(&c).unwrap();
        if !check_diffass2_morphism(&ts, &c, &a).unwrap().passed() {
            failures.push(format!("#{k}: α is not a homomorphism"));
        }
        if !check_diffass2_morphism(&c, &ts, &b).unwrap().passed() {
            failures.push(format!("#{k}: α⁻¹ is not a homomorphism"));
        }
        if compose_diffass2_morphism(&c, &a, &b).unwrap() != DiffAss2Morphism::identity(&c).unwrap()
            || compose_diffass2_morphism(&ts, &b, &a).unwrap() != DiffAss2Morphism::identity(&ts).unwrap()
        {
            failures.push(format!("#{k}: α and α⁻¹ are not inverse"));
        }
        let chain = gen::gen_morphism_chain(x, k as u64, 2).unwrap();
        let ((y, f), (z, g)) = (&chain[0], &chain[1]);
        let (ty, tz) = (functor_t(y).unwrap(), functor_t(z).unwrap());
        let (tf, tg) = (functor_t_mor(x, y, f).unwrap(), functor_t_mor(y, z, g).unwrap());
        let gf = compose_diff_morphism(g, f).unwrap();
        if functor_t_mor(x, z, &gf).unwrap() != compose_diffass2_morphism(&tz, &tg, &tf).unwrap() {
            failures.push(format!("#{k}: T does not preserve composition"));
        }
        if functor_t_mor(x, x, &DiffAInf2Morphism::identity(x)).unwrap() != DiffAss2Morphism::identity(&tx).unwrap() {
            failures.push(format!("#{k}: T does not preserve identities"));
        }
        let sf = functor_s_mor(&tx, &ty, &tf).unwrap();
        let sg = functor_s_mor(&ty, &tz, &tg).unwrap();
        let tgtf = compose_diffass2_morphism(&tz, &tg, &tf).unwrap();
        if sf != *f || functor_s_mor(&tx, &tz, &tgtf).unwrap() != compose_diff_morphism(&sg, &sf).unwrap() {
            failures.push(format!("#{k}: S does not preserve composition"));
        }
        if functor_s_mor(&tx, &tx, &DiffAss2Morphism::identity(&tx).unwrap()).unwrap() != DiffAInf2Morphism::identity(x) {
            failures.push(format!("#{k}: S does not preserve identities"));
        }
    }
    if moved == 0 {
        failures.push("no 2-algebra outside the image of T was exercised".into());
    }
    verdict(6, &failures, format!("{} structures, {moved} off the image of T", xs.len()));
}

fn criterion_7_category_axioms() {
    let mut failures = Vec::new();
    let xs = corpus();
    for (k, x) in xs.iter().enumerate() {
        let chain = gen::gen_morphism_chain(x, 500 + k as u64, 3).unwrap();
        let ((y, f), (z, g), (w, h)) = (&chain[0], &chain[1], &chain[2]);
        for (src, dst, m) in [(x, y, f), (y, z, g), (z, w, h)] {
            if !check_diff_morphism(src, dst, m).unwrap().passed() {
                failures.push(format!("#{k}: generated morphism invalid"));
            }
        }
        let c = |a: &DiffAInf2Morphism, b: &DiffAInf2Morphism| compose_diff_morphism(a, b).unwrap();
        if c(h, &c(g, f)) != c(&c(h, g), f) {
            failures.push(format!("#{k}: composition is not associative"));
        }
        if c(&DiffAInf2Morphism::identity(y), f) != *f || c(f, &DiffAInf2Morphism::identity(x)) != *f {
            failures.push(format!("#{k}: identity law fails"));
        }
        if !check_diff_morphism(x, z, &c(g, f)).unwrap().passed() {
            failures.push(format!("#{k}: composite is not a morphism"));
        }
        let [tx, ty, tz, tw] = [x, y, z, w].map(|s| functor_t(s).unwrap());
        let (tf, tg, th) = (
            functor_t_mor(x, y, f).unwrap(),
            functor_t_mor(y, z, g).unwrap(),
            functor_t_mor(z, w, h).unwrap(),
        );
        let left = compose_diffass2_morphism(&tw, &th, &compose_diffass2_morphism(&tz, &tg, &tf).unwrap()).unwrap();
        let right = compose_diffass2_morphism(&tw, &compose_diffass2_morphism(&tw, &th, &tg).unwrap(), &tf).unwrap();
        if left != right {
            failures.push(format!("#{k}: 2-algebra composition is not associative"));
        }
        let id_y = DiffAss2Morphism::identity(&ty).unwrap();
        let id_x = DiffAss2Morphism::identity(&tx).unwrap();
        if compose_diffass2_morphism(&ty, &id_y, &tf).unwrap() != tf || compose_diffass2_morphism(&ty, &tf, &id_x).unwrap() != tf {
            failures.push(format!("#{k}: 2-algebra identity law fails"));
        }
        if !check_diffass2_morphism(&tx, &tz, &compose_diffass2_morphism(&tz, &tg, &tf).unwrap()).unwrap().passed() {
            failures.push(format!("#{k}: 2-algebra composite is not a morphism"));
        }
    }
    verdict(7, &failures, format!("{} morphism triples", xs.len()));
}

const MU_TAGS: [&str; 6] = ["(A4)", "(A5)", "(A6)", "(A7)", "(A8)", "(D4)"];
const D2_TAGS: [&str; 4] = ["(D1)", "(D2)", "(D3)", "(D4)"];

fn criterion_8_coherence_checks_as_structure() {
    let mut failures = Vec::new();
    let xs = corpus();
    for (k, x) in xs.iter().enumerate() {
        let r = check_diffass2(&functor_t(x).unwrap()).unwrap();
        for tag in ["pentagon", "(2-diff)"] {
            if !r.check(tag).is_some_and(|c| c.passed()) {
                failures.push(format!("#{k}: T-image fails {tag}"));
            }
        }
    }
    let mut perturbed = 0;
    for (k, x) in xs.iter().enumerate().filter(|(_, x)| x.ainf.delta().rank() == x.ainf.a1().dim && x.ainf.a1().dim > 0) {
        let (n0, n1) = (x.ainf.a0().dim, x.ainf.a1().dim);
        let idx = [k % n0, (k + 1) % n0, (k + 2) % n0];
        let mut y = x.clone();
        let v = y.ainf.mu.get(k % n1, &idx).clone();
        y.ainf.mu.set(k % n1, &idx, v + int(1));
        let tags = y.check().unwrap().failed_tags();
        if !tags.iter().any(|t| t == "(A4)") || tags.iter().any(|t| !MU_TAGS.contains(&t.as_str())) {
            failures.push(format!("#{k}: μ perturbation reported as {tags:?}"));
        }
        let mut y = x.clone();
        let v = y.dop.d2.get(k % n1, &idx[..2]).clone();
        y.dop.d2.set(k % n1, &idx[..2], v - int(1));
        let tags = y.check().unwrap().failed_tags();
        if !tags.iter().any(|t| t == "(D1)") || tags.iter().any(|t| !D2_TAGS.contains(&t.as_str())) {
            failures.push(format!("#{k}: d2 perturbation reported as {tags:?}"));
        }
        perturbed += 1;
    }
    if perturbed == 0 {
        failures.push("no structure with injective δ in the corpus".into());
    }
    verdict(8, &failures, format!("{} T-images, {perturbed} perturbed structures", xs.len()));
}

fn exe(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_diffalg")).args(args).output().expect("binary runs");
    let mut text = String::from_utf8_lossy(&out.stdout).into_owned();
    text.push_str(&String::from_utf8_lossy(&out.stderr));
    (out.status.code().unwrap_or(-1), text)
}

fn files_in(dir: &Path) -> Vec<std::path::PathBuf> {
    let mut v: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    v.sort();
    v
}

fn criterion_9_cli_contract() {
    let mut failures = Vec::new();
    let dir = tempfile::tempdir().unwrap();
    let kinds = [
        ("algebra", GenKind::Algebra),
        ("diff-algebra", GenKind::DiffAlgebra),
        ("invalid-diff-algebra", GenKind::InvalidDiffAlgebra),
        ("diff-bimodule", GenKind::DiffBimodule),
        ("cochain", GenKind::Cochain),
        ("diff-ainf2", GenKind::DiffAinf2),
        ("diff-morphism", GenKind::DiffMorphism),
        ("crossed-module", GenKind::CrossedModule),
        ("hbimod", GenKind::Hbimod),
        ("diff-hbimod", GenKind::DiffHbimod),
        ("diffass2", GenKind::Diffass2),
    ];
    let mut files = 0;
    for (name, kind) in kinds {
        let sub = dir.path().join(name);
        let (code, text) = exe(&["gen", name, "--seed", "3", "--max-dim", "2", "--out-dir", sub.to_str().unwrap()]);
        if code != 0 {
            failures.push(format!("gen {name} exited {code}: {text}"));
            continue;
        }
        let expected = generate_structures(kind, 3, 2).unwrap();
        let paths = files_in(&sub);
        if paths.len() != expected.len() {
            failures.push(format!("gen {name}: {} files, expected {}", paths.len(), expected.len()));
        }
        for (p, s) in paths.iter().zip(&expected) {
            files += 1;
            let text = std::fs::read_to_string(p).unwrap();
            let parsed = parse(&text).unwrap();
            if parsed != *s || print(&parsed) != text {
                failures.push(format!("{}: round trip not byte-identical", p.display()));
            }
            let ps = p.to_str().unwrap();
            let verdict_code = if check_structure(s).unwrap().iter().all(|r| r.passed()) { 0 } else { 1 };
            let (code, _) = exe(&["check", ps]);
            if code != verdict_code {
                failures.push(format!("{ps}: check exited {code}, checker says {verdict_code}"));
            }
            if matches!(s, Structure::DiffAlgebra(_)) {
                let (mc, out) = exe(&["mc", ps]);
                if mc == 3 || mc != verdict_code {
                    failures.push(format!("{ps}: mc exited {mc}: {out}"));
                }
            }
            let (rt, out) = exe(&["roundtrip", ps]);
            if rt != 0 {
                failures.push(format!("{ps}: roundtrip exited {rt}: {out}"));
            }
        }
    }
    let sample = files_in(&dir.path().join("diff-ainf2")).into_iter().find(|p| {
        let Ok(Structure::DiffAInf2(x)) = parse(&std::fs::read_to_string(p).unwrap()) else { return false };
        x.ainf.delta().rank() == x.ainf.a1().dim && x.ainf.a1().dim > 0
    });
    match sample {
        Some(p) => {
            let Structure::DiffAInf2(mut x) = parse(&std::fs::read_to_string(&p).unwrap()).unwrap() else { unreachable!() };
            let v = x.ainf.mu.get(0, &[0, 0, 0]).clone();
            x.ainf.mu.set(0, &[0, 0, 0], v + int(1));
            let bad = dir.path().join("flipped.json");
            std::fs::write(&bad, print(&Structure::DiffAInf2(x))).unwrap();
            let (code, out) = exe(&["check", bad.to_str().unwrap()]);
            if code != 1 || !(out.contains("(A4)") || out.contains("(A8)") || out.contains("(D4)")) {
                failures.push(format!("flipped μ: exit {code}"));
            }
            let zero_den = std::fs::read_to_string(&p).unwrap().replacen("\"1\"", "\"1/0\"", 1);
            let malformed = dir.path().join("malformed.json");
            std::fs::write(&malformed, zero_den).unwrap();
            let (code, _) = exe(&["check", malformed.to_str().unwrap()]);
            if code != 2 {
                failures.push(format!("\"1/0\": exit {code}"));
            }
            let (code, out) = exe(&["check", "--json", bad.to_str().unwrap()]);
            let doc: serde_json::Value = serde_json::from_str(&out).unwrap_or_default();
            if code != 1 || doc["exit_code"] != 1 {
                failures.push(format!("--json report: exit {code}"));
            }
        }
        None => failures.push("no diff_ainf2 sample with injective δ".into()),
    }
    let regular = dir.path().join("diff-algebra");
    let first = files_in(&regular).remove(0);
    let converted = dir.path().join("t.json");
    let back = dir.path().join("back.json");
    let (c1, _) = exe(&["convert", first.to_str().unwrap(), "--to-2alg", "-o", converted.to_str().unwrap()]);
    if c1 != 1 {
        failures.push(format!("convert accepted a diff_algebra file: exit {c1}"));
    }
    let ainf = files_in(&dir.path().join("diff-ainf2")).remove(0);
    let (c2, _) = exe(&["convert", ainf.to_str().unwrap(), "--to-2alg", "-o", converted.to_str().unwrap()]);
    let (c3, _) = exe(&["convert", converted.to_str().unwrap(), "--to-ainf", "-o", back.to_str().unwrap()]);
    if c2 != 0 || c3 != 0 || std::fs::read(&ainf).unwrap() != std::fs::read(&back).unwrap() {
        failures.push("convert round trip is not byte-identical".into());
    }
    verdict(9, &failures, format!("{files} generated files"));
}

fn main() {
    let criteria: [(u32, fn()); 9] = [
        (1, criterion_1_difference_operator_triple_agreement),
        (2, criterion_2_cochain_complex_law),
        (3, criterion_3_cocycles_and_skeletal_structures),
        (4, criterion_4_crossed_modules_and_strict_structures),
        (5, criterion_5_semidirect_products_are_sound),
        (6, criterion_6_s_and_t_are_inverse_equivalences),
        (7, criterion_7_category_axioms),
        (8, criterion_8_coherence_checks_as_structure),
        (9, criterion_9_cli_contract),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let handles: Vec<_> = criteria.into_iter().map(|(n, f)| (n, std::thread::spawn(f))).collect();
    let mut failed = Vec::new();
    for (n, h) in handles {
        if let Err(payload) = h.join() {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            if !msg.starts_with("criterion") {
                println!("criterion {n}: FAIL (panicked: {msg})");
            }
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 9 criteria pass");
    } else {
        println!("acceptance: criteria {failed:?} failed");
        std::process::exit(1);
    }
}
