//! End-to-end acceptance criteria, one PASS/FAIL line each. Every
//! comparison is exact.

mod common;

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use common::{fixture, fixture_dir, fixture_set, reserialize};
use whakit_cli::report::RunReport;
use whakit_core::examples::{group_zn, sweedler};
use whakit_core::face_algebra::{
    build_face_algebra, check_expected_tables, check_block_decomposition, cocycle_galois_object, cocycle_group_probe,
};
use whakit_core::galois::{
    certify_galois, check_group_law, check_identity_cotensor, check_inverse_law, check_trivializable, ComoduleAlgebra,
};
use whakit_core::module_cat::HModule;
use whakit_core::quasitriangular::QtAlgebra;
use whakit_core::transmutation::{check_braided_hopf, transmute, BraidedHopf};
use whakit_core::weak_hopf::Certified;
use whakit_core::yetter_drinfeld::default_comodule_samples;
use whakit_core::Scalar;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Ctx) -> Outcome);
/// Subcommand, file, exit code and the expected first failure with a witness label.
type Corrupted = (&'static str, &'static str, i32, Option<(&'static str, &'static str)>);

struct Ctx {
    dir: PathBuf,
}

struct Run {
    code: i32,
    report: Option<RunReport>,
}

impl Ctx {
    fn whakit(&self, args: &[&str]) -> Run {
        let state = self.dir.join("state.json");
        let _ = std::fs::remove_file(&state);
        let out = Command::new(env!("CARGO_BIN_EXE_whakit"))
            .args(args)
            .arg("--state")
            .arg(&state)
            .current_dir(&self.dir)
            .output()
            .expect("whakit runs");
        let report = std::fs::read_to_string(&state).ok().and_then(|t| serde_json::from_str(&t).ok());
        Run { code: out.status.code().unwrap_or(-1), report }
    }

    fn path(&self, name: &str) -> String {
        self.dir.join(name).to_string_lossy().into_owned()
    }
}

fn qt(inst: whakit_core::examples::QtInstance) -> QtAlgebra<Scalar> {
    inst.certify().expect("catalog instance certifies")
}

fn rh(q: &QtAlgebra<Scalar>) -> BraidedHopf<Scalar> {
    transmute(q).expect("transmutes")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expect_pass(what: &str, run: &Run) -> Result<(), String> {
    let first = run
        .report
        .as_ref()
        .and_then(|r| r.first_failure.as_ref().map(|f| format!("{}: {}", f.report, f.check.name)))
        .unwrap_or_default();
    ensure(run.code == 0, || format!("{what} exited {} {first}", run.code))
}

fn check_names(run: &Run) -> Vec<String> {
    run.report.iter().flat_map(|r| r.reports.iter()).flat_map(|r| r.checks.iter().map(|c| c.name.clone())).collect()
}

fn face_certification(ctx: &Ctx) -> Outcome {
    let mut n5 = Duration::ZERO;
    for n in 2..=5 {
        let file = ctx.path(&format!("face_{n}.json"));
        let emitted = ctx.whakit(&["face", "--n", &n.to_string(), "-o", &file]);
        expect_pass(&format!("face --n {n}"), &emitted)?;
        let start = Instant::now();
        let run = ctx.whakit(&["check", &file]);
        let took = start.elapsed();
        expect_pass(&format!("check face_{n}.json"), &run)?;
        let names = check_names(&run);
        for needle in ["axiom (i)", "axiom (ii)", "axiom (iii)", "axiom (iv)", "Yang-Baxter"] {
            ensure(names.iter().any(|c| c.starts_with(needle)), || format!("face_{n}: no {needle} check"))?;
        }
        let titles: Vec<&str> =
            run.report.iter().flat_map(|r| r.reports.iter()).map(|r| r.title.as_str()).collect();
        ensure(titles.len() >= 3, || format!("face_{n}: reports {titles:?}"))?;
        if n == 5 {
            n5 = took;
        }
    }
    ensure(n5 <= Duration::from_secs(60), || format!("face_5 took {n5:?}"))?;
    Ok(format!("N = 2..5, N = 5 in {:.1} s", n5.as_secs_f64()))
}

fn transmutation_tables(_: &Ctx) -> Outcome {
    for n in 2..=5 {
        let b = rh(&qt(build_face_algebra(n)));
        ensure(b.dim() == n * n, || format!("N = {n}: dim {}", b.dim()))?;
        let rep = check_expected_tables(&b).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("N = {n}: {rep}"))?;
    }
    Ok("N = 2..5".into())
}

fn block_decomposition(_: &Ctx) -> Outcome {
    for n in 2..=5 {
        let rep = check_block_decomposition(n).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("N = {n}: {rep}"))?;
    }
    Ok("N = 2..5".into())
}

fn braided_hopf(_: &Ctx) -> Outcome {
    for (name, inst) in
        [("face_2", build_face_algebra(2)), ("face_3", build_face_algebra(3)), ("sweedler", sweedler()), ("group_z3", group_zn(3))]
    {
        let rep = check_braided_hopf(&rh(&qt(inst)));
        ensure(rep.passed(), || format!("{name}: {rep}"))?;
    }
    Ok("face_2, face_3, sweedler, group_z3".into())
}

fn yd_roundtrip(ctx: &Ctx) -> Outcome {
    for name in ["face_2.json", "face_3.json", "sweedler.json"] {
        let run = ctx.whakit(&["yd-roundtrip", &fixture(name), "--samples", "regular,ht,rh"]);
        expect_pass(name, &run)?;
        let names = check_names(&run);
        for needle in ["G(F(", "F(G(", ") = G("] {
            ensure(names.iter().any(|c| c.contains(needle)), || format!("{name}: no {needle} check"))?;
        }
    }
    Ok("face_2, face_3, sweedler".into())
}

fn braiding(ctx: &Ctx) -> Outcome {
    for name in ["face_2.json", "sweedler.json"] {
        let run = ctx.whakit(&["braiding-check", &fixture(name)]);
        expect_pass(name, &run)?;
        let names = check_names(&run);
        for needle in ["displayed inverse", "natural", "first comodule hexagon", "second comodule hexagon"] {
            ensure(names.iter().any(|c| c.contains(needle)), || format!("{name}: no {needle} check"))?;
        }
    }
    Ok("face_2, sweedler".into())
}

fn group_identity(_: &Ctx) -> Outcome {
    for (name, inst) in [("face_2", build_face_algebra(2)), ("face_3", build_face_algebra(3)), ("sweedler", sweedler())] {
        let b = rh(&qt(inst));
        let g = certify_galois(&b, ComoduleAlgebra::regular(&b));
        ensure(g.is_galois && g.quantum_commutative && g.cocommutative, || format!("{name}: {}", g.report))?;
        let rep = check_identity_cotensor(&b, &default_comodule_samples(&b));
        ensure(rep.passed(), || format!("{name}: {rep}"))?;
    }
    Ok("face_2, face_3, sweedler".into())
}

const COCYCLE_FIXTURES: [&str; 5] =
    ["face_2_A_1.json", "face_2_A_2.json", "face_2_A_-1.json", "face_3_A_1.json", "face_3_A_2.json"];

fn diagram(ctx: &Ctx) -> Outcome {
    for name in COCYCLE_FIXTURES {
        let run = ctx.whakit(&["autoequiv-test", &fixture(name), "--probe", "regular,trivial"]);
        expect_pass(name, &run)?;
        let diagrams = check_names(&run).iter().filter(|c| c.starts_with("autoequivalence diagram")).count();
        ensure(diagrams == 2, || format!("{name}: {diagrams} diagram checks"))?;
    }
    Ok("N = 2 with a = 1, 2, -1; N = 3 with a = 1, 2".into())
}

fn contrapositive(ctx: &Ctx) -> Outcome {
    let run = ctx.whakit(&["autoequiv-test", &fixture("clifford_z2z2.json"), "--probe", "regular"]);
    ensure(run.code == 1, || format!("clifford control exited {}", run.code))?;
    let report = run.report.as_ref().ok_or("clifford control wrote no report")?;
    let galois = report.reports.iter().flat_map(|r| r.checks.iter()).find(|c| c.name == "diagram test is non-vacuous");
    ensure(galois.is_some_and(|c| c.passed), || "clifford control does not certify as bi-Galois".into())?;
    let fail = report.first_failure.as_ref().ok_or("clifford control has no failure")?;
    ensure(fail.check.name.starts_with("autoequivalence diagram"), || format!("first failure {}", fail.check.name))?;
    let witness = fail.check.witness.as_ref().ok_or("no witness")?;
    ensure(!witness.labels.is_empty(), || "witness without basis labels".into())?;

    let perturbed = fixture_dir().join("corrupted").join("face_2_A_2_perturbed.json");
    let run = ctx.whakit(&["autoequiv-test", &perturbed.to_string_lossy(), "--probe", "regular"]);
    let vacuous = run
        .report
        .iter()
        .flat_map(|r| r.reports.iter())
        .flat_map(|r| r.checks.iter())
        .any(|c| c.name == "diagram test is non-vacuous" && !c.passed);
    ensure(run.code == 1 && vacuous, || "perturbed face object was not reported vacuous".into())?;
    Ok(format!("clifford fails at ({}); perturbed face case vacuous", witness.labels.join(", ")))
}

fn group_law(_: &Ctx) -> Outcome {
    let b = rh(&qt(build_face_algebra(2)));
    let obj = |a: &Scalar| cocycle_galois_object(&b, 0, a).map_err(|e| e.to_string());
    let half = Scalar::rational(1, 2);
    let pairs = [
        (Scalar::int(1), Scalar::int(1)),
        (Scalar::int(2), Scalar::int(3)),
        (Scalar::int(2), half),
        (Scalar::int(-1), Scalar::int(-1)),
        (Scalar::int(2), Scalar::int(-1)),
    ];
    for (x, y) in &pairs {
        let (ax, ay) = (obj(x)?, obj(y)?);
        let c = cocycle_group_probe(&b, &ax, &ay).map_err(|e| e.to_string())?;
        ensure(c == x.clone() * y.clone(), || format!("probe({}, {}) = {}", x.render(), y.render(), c.render()))?;
        let (rep, prod) = check_group_law(&b, &ax, &ay);
        ensure(rep.passed(), || rep.to_string())?;
        ensure(prod.is_some_and(|g| g.algebra.dim() == b.dim()), || "dim A [] B differs from dim B".into())?;
        let rep = check_inverse_law(&b, &ax);
        ensure(rep.passed(), || rep.to_string())?;
    }
    Ok("5 pairs including (2, 1/2)".into())
}

fn trivializable(_: &Ctx) -> Outcome {
    let mut count = 0;
    let mut run = |q: &QtAlgebra<Scalar>, params: &[Scalar]| -> Result<(), String> {
        let b = rh(q);
        let h: &Certified<Scalar> = q;
        let samples = vec![HModule::regular(h), b.unit_object().clone()];
        let mut objects = vec![ComoduleAlgebra::regular(&b)];
        for a in params {
            objects.push(cocycle_galois_object(&b, 0, a).map_err(|e| e.to_string())?);
        }
        for a in objects {
            let g = certify_galois(&b, a);
            ensure(g.is_qc_galois(), || format!("{} is not QC-Galois", g.algebra.name()))?;
            let rep = check_trivializable(&b, &g.algebra, &samples, 0);
            ensure(rep.passed(), || rep.to_string())?;
            count += 1;
        }
        Ok(())
    };
    run(&qt(build_face_algebra(2)), &[Scalar::int(1), Scalar::int(2), Scalar::int(-1)])?;
    run(&qt(build_face_algebra(3)), &[Scalar::int(1), Scalar::int(2)])?;
    run(&qt(sweedler()), &[])?;
    Ok(format!("{count} QC-Galois objects"))
}

fn serialization(ctx: &Ctx) -> Outcome {
    let set = fixture_set();
    ensure(set.len() == 20, || format!("{} fixtures", set.len()))?;
    for (name, text) in &set {
        let on_disk = std::fs::read_to_string(fixture_dir().join(name)).map_err(|e| format!("{name}: {e}"))?;
        ensure(&on_disk == text, || format!("{name} differs from its generator"))?;
        ensure(&reserialize(name, &on_disk) == text, || format!("{name} changed on reload"))?;
    }
    let corrupted = |f: &str| fixture_dir().join("corrupted").join(f).to_string_lossy().into_owned();
    let cases: [Corrupted; 3] = [
        ("check", "sweedler_antipode_h_zeroed.json", 1, Some(("axiom (iv) h1 S(h2) = eps_t(h)", "h"))),
        ("check", "malformed.json", 2, None),
        ("galois", "face_2_A_2_perturbed.json", 1, Some(("algebra A[2]: multiplication is H-linear", ""))),
    ];
    for (cmd, file, code, failure) in cases {
        let path = corrupted(file);
        let args: Vec<&str> = if cmd == "galois" { vec!["galois", "check", &path] } else { vec![cmd, &path] };
        let run = ctx.whakit(&args);
        ensure(run.code == code, || format!("{file} exited {}, expected {code}", run.code))?;
        if let Some((check, label)) = failure {
            let f = run.report.as_ref().and_then(|r| r.first_failure.as_ref()).ok_or(format!("{file}: no failure"))?;
            ensure(f.check.name == check, || format!("{file}: first failure {}", f.check.name))?;
            let w = f.check.witness.as_ref().ok_or(format!("{file}: no witness"))?;
            ensure(label.is_empty() || w.labels.iter().any(|l| l == label), || format!("{file}: witness {:?}", w.labels))?;
        }
    }
    Ok("20 fixtures, 3 corrupted".into())
}

fn scratch_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("whakit-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch directory");
    dir
}

fn main() {
    let ctx = Ctx { dir: scratch_dir() };
    let criteria: [Criterion; 12] = [
        ("face algebra certification", face_certification),
        ("transmutation matches the closed form", transmutation_tables),
        ("block decomposition", block_decomposition),
        ("braided Hopf certification", braided_hopf),
        ("Yetter-Drinfeld round trip", yd_roundtrip),
        ("comodule braiding", braiding),
        ("regular object is the group identity", group_identity),
        ("autoequivalence diagram", diagram),
        ("non-quantum-commutative control", contrapositive),
        ("group law", group_law),
        ("trivializable on plain modules", trivializable),
        ("serialization", serialization),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        match f(&ctx) {
            Ok(detail) => println!("PASS criterion {}: {title} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {why}", i + 1);
            }
        }
    }
    let _ = std::fs::remove_dir_all(Path::new(&ctx.dir));
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
