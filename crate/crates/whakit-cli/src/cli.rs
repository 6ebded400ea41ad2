//! Argument parsing and the subcommands.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use whakit_core::face_algebra::{build_face_algebra, check_block_decomposition, cocycle_galois_object};
use whakit_core::galois::{
    certify_galois, check_autoequivalence_diagram, check_group_law, check_identity_law, check_inverse_law,
    check_trivializable, ComoduleAlgebra,
};
use whakit_core::linalg::{SVec, Subspace};
use whakit_core::module_cat::{check_monoidal_coherence, HModule};
use whakit_core::quasitriangular::{check_derived_r_identities, check_quasitriangular, solve_r_bar, QtAlgebra};
use whakit_core::report::{CheckResult, VerificationReport};
use whakit_core::rng::Lcg;
use whakit_core::transmutation::{check_braided_hopf, transmute, BraidedHopf};
use whakit_core::weak_hopf::{Certified, WeakHopfAlgebra};
use whakit_core::yetter_drinfeld::{
    check_comodule_braiding, check_equivalence_roundtrip, check_induced_braiding, RhComodule,
};
use whakit_core::{FieldDesc, Scalar};

use crate::bundle::{to_canonical_json, AlgebraBundle, BraidedBundle, ComoduleAlgebraBundle};
use crate::catalog::{instance_field, load_algebra, load_comodule_algebra, load_module, InputDigest};
use crate::report::RunReport;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// The state file read back by `whakit report`.
pub const DEFAULT_STATE: &str = ".whakit/last_report.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Probe {
    /// `M = B` with its regular coaction.
    Regular,
    /// `M = H_t` with the trivial coaction.
    Trivial,
}

#[derive(Debug, Parser)]
#[command(name = "whakit", version, about = "Exact checks for quasitriangular weak Hopf algebras and their braided Galois objects")]
pub struct Cli {
    /// Seed of the linear congruential generator used for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated samples: regular, ht, rh, random, or module bundle paths.
    #[arg(long, global = true, value_delimiter = ',')]
    pub samples: Option<Vec<String>>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Output path: the emitted bundle, or the run report for pure checks.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
    /// Record wall-clock time per report.
    #[arg(long, global = true)]
    pub timings: bool,
    /// Solve for the weak inverse of R when a bundle omits `r_inverse`.
    #[arg(long, global = true)]
    pub solve_r_bar: bool,
    /// Where the last run report is stored.
    #[arg(long, global = true, default_value = DEFAULT_STATE)]
    pub state: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weak Hopf axioms, the R-matrix axioms and the derived identities.
    Check { algebra: String },
    /// Builds the transmuted braided Hopf algebra and certifies it.
    Transmute { algebra: String },
    /// Round trip between Yetter-Drinfeld modules and comodules of the transmutation.
    YdRoundtrip { algebra: String },
    /// Hexagons, naturality and inverse of the comodule braiding.
    BraidingCheck { algebra: String },
    /// Galois object certification.
    Galois {
        #[command(subcommand)]
        command: GaloisCommand,
    },
    /// Cotensor product of two comodule algebras with the group-law checks.
    Cotensor { left: String, right: String },
    /// The braided autoequivalence diagram for a comodule algebra.
    AutoequivTest {
        algebra: String,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "regular")]
        probe: Vec<Probe>,
    },
    /// Emits the face algebra bundle with its R-matrix.
    Face {
        #[arg(long)]
        n: usize,
    },
    /// Transmutation tables and block decomposition of the face algebra.
    FaceCheck {
        #[arg(long)]
        n: usize,
    },
    /// Emits a cocycle Galois object over the face algebra transmutation.
    FaceGalois {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        component: usize,
        #[arg(long, allow_hyphen_values = true)]
        param: String,
    },
    /// Prints the last run report.
    Report,
}

#[derive(Debug, Subcommand)]
pub enum GaloisCommand {
    Check { algebra: String },
}

/// Why a command stopped early.
enum Stop {
    /// Unreadable or malformed input: exit 2.
    Input(String),
    /// A construction on valid input failed: exit 1.
    Failed(String),
}

type Step<T> = Result<T, Stop>;

struct Run {
    cli_seed: u64,
    solve_r_bar: bool,
    timings: bool,
    report: RunReport,
    emitted: Option<String>,
}

impl Run {
    fn time<T>(&mut self, f: impl FnOnce() -> T) -> (T, Option<u64>) {
        let start = Instant::now();
        let out = f();
        let ms = self.timings.then(|| start.elapsed().as_millis() as u64);
        (out, ms)
    }

    fn record(&mut self, f: impl FnOnce() -> VerificationReport) -> bool {
        let (rep, ms) = self.time(f);
        self.report.add(&rep, ms);
        rep.passed()
    }

    fn input(&mut self, d: InputDigest) {
        self.report.add_input(d);
    }
}

fn input_err(e: impl std::fmt::Display) -> Stop {
    Stop::Input(e.to_string())
}

fn failed(e: impl std::fmt::Display) -> Stop {
    Stop::Failed(e.to_string())
}

/// Parses and certifies an algebra bundle. A failed certification is
/// recorded as a failing report.
fn certify_bundle(run: &mut Run, bundle: &AlgebraBundle) -> Step<QtAlgebra<Scalar>> {
    let (sc, r) = bundle.to_instance().map_err(input_err)?;
    let (r, r_bar) = r.ok_or_else(|| Stop::Input(format!("{} carries no r_matrix", bundle.name)))?;
    if r_bar.is_none() && !run.solve_r_bar {
        return Err(missing_r_bar(&bundle.name));
    }
    let alg = WeakHopfAlgebra::from_constants(sc).map_err(input_err)?;
    let rep = alg.check();
    if !rep.passed() {
        run.report.add(&rep, None);
        return Err(Stop::Failed(format!("{} is not a weak Hopf algebra", bundle.name)));
    }
    let cert = alg.certify().map_err(failed)?;
    QtAlgebra::certify(cert, r, r_bar).map_err(|e| {
        if let whakit_core::quasitriangular::QtError::NotCertified { report, .. } = &e {
            run.report.add(report, None);
        }
        failed(e)
    })
}

fn missing_r_bar(name: &str) -> Stop {
    Stop::Input(format!("{name} carries no r_inverse; pass --solve-r-bar to solve for it"))
}

fn load_qt(run: &mut Run, arg: &str) -> Step<(AlgebraBundle, QtAlgebra<Scalar>)> {
    let (bundle, digest) = load_algebra(arg).map_err(input_err)?;
    run.input(digest);
    let q = certify_bundle(run, &bundle)?;
    Ok((bundle, q))
}

fn transmuted(q: &QtAlgebra<Scalar>) -> Step<BraidedHopf<Scalar>> {
    transmute(q).map_err(failed)
}

fn load_comodule(run: &mut Run, arg: &str) -> Step<(ComoduleAlgebraBundle, BraidedHopf<Scalar>, ComoduleAlgebra<Scalar>)> {
    let (bundle, digest) = load_comodule_algebra(arg).map_err(input_err)?;
    run.input(digest);
    let q = certify_bundle(run, &bundle.base)?;
    let b = transmuted(&q)?;
    let a = bundle.to_algebra(&b).map_err(input_err)?;
    Ok((bundle, b, a))
}

/// A cyclic submodule of the regular module generated by a sampled vector.
fn random_submodule(h: &Certified<Scalar>, seed: u64) -> Step<HModule<Scalar>> {
    let mut rng = Lcg::new(seed);
    let d = h.dim();
    let mut v = SVec::new();
    for _ in 0..2 {
        let i = rng.below(d as u32) as usize;
        let c = rng.small_int(3);
        v.add_at(i, Scalar::int(if c == 0 { 1 } else { c }));
    }
    let reg = HModule::regular(h);
    let gens: Vec<_> = (0..d).map(|i| reg.act(&SVec::unit(i), &v)).collect();
    let sub = Subspace::span(d, gens);
    reg.restrict(&sub, format!("random submodule (seed {seed})")).map_err(failed)
}

enum Sample {
    Plain(HModule<Scalar>),
    Comodule(RhComodule<Scalar>),
}

fn samples(run: &mut Run, names: &Option<Vec<String>>, b: &BraidedHopf<Scalar>, field: FieldDesc) -> Step<Vec<Sample>> {
    let default = ["regular", "ht", "rh"].map(String::from).to_vec();
    let names = names.clone().unwrap_or(default);
    let h: &Certified<Scalar> = b.base();
    let mut out = Vec::new();
    for name in names {
        let s = match name.as_str() {
            "regular" => Sample::Plain(HModule::regular(h)),
            "ht" => Sample::Plain(b.unit_object().clone()),
            "rh" => Sample::Comodule(RhComodule::regular(b)),
            "random" => Sample::Plain(random_submodule(h, run.cli_seed)?),
            path => {
                let (mb, digest) = load_module(path).map_err(input_err)?;
                run.input(digest);
                let m = mb.to_module(h, field).map_err(input_err)?;
                match &mb.coaction_rh {
                    Some(t) => {
                        let rho = mb.coaction_map(t, b.dim(), field).map_err(input_err)?;
                        Sample::Comodule(RhComodule::new(b, m, rho).map_err(input_err)?)
                    }
                    None => Sample::Plain(m),
                }
            }
        };
        out.push(s);
    }
    Ok(out)
}

fn comodule_samples(b: &BraidedHopf<Scalar>, s: &[Sample]) -> Vec<RhComodule<Scalar>> {
    s.iter()
        .map(|x| match x {
            Sample::Plain(m) => RhComodule::trivial(b, m),
            Sample::Comodule(c) => c.clone(),
        })
        .collect()
}

fn module_samples(s: &[Sample]) -> Vec<HModule<Scalar>> {
    s.iter()
        .map(|x| match x {
            Sample::Plain(m) => m.clone(),
            Sample::Comodule(c) => c.module.clone(),
        })
        .collect()
}

fn cmd_check(run: &mut Run, arg: &str) -> Step<()> {
    let (bundle, digest) = load_algebra(arg).map_err(input_err)?;
    run.input(digest);
    let (sc, r) = bundle.to_instance().map_err(input_err)?;
    let alg = WeakHopfAlgebra::from_constants(sc).map_err(input_err)?;
    let ok = run.record(|| {
        let mut rep = alg.check();
        rep.flag("is_hopf", alg.is_hopf());
        rep.flag("is_regular", alg.is_regular());
        rep
    });
    if !ok {
        return Ok(());
    }
    let Some((r, r_bar)) = r else { return Ok(()) };
    if r_bar.is_none() && !run.solve_r_bar {
        return Err(missing_r_bar(&bundle.name));
    }
    let h = alg.certify().map_err(failed)?;
    let r_bar = match r_bar.or_else(|| solve_r_bar(&h, &r)) {
        Some(rb) => rb,
        None => {
            let mut rep = VerificationReport::new(format!("quasitriangular structure on {}", h.name()));
            rep.push(CheckResult::from_bool("R-matrix has a weak inverse", false, || "no solution".into()));
            run.report.add(&rep, None);
            return Ok(());
        }
    };
    if run.record(|| check_quasitriangular(&h, &r, &r_bar)) {
        run.record(|| check_derived_r_identities(&h, &r));
    }
    Ok(())
}

fn cmd_transmute(run: &mut Run, arg: &str) -> Step<()> {
    let (bundle, q) = load_qt(run, arg)?;
    let (b, ms) = run.time(|| transmuted(&q));
    let b = b?;
    let rep = check_braided_hopf(&b);
    run.report.add(&rep, ms);
    run.emitted = Some(to_canonical_json(&BraidedBundle::from_braided(&b, bundle.field_desc())));
    Ok(())
}

fn cmd_yd_roundtrip(run: &mut Run, cli: &Cli, arg: &str) -> Step<()> {
    let (bundle, q) = load_qt(run, arg)?;
    let b = transmuted(&q)?;
    let s = samples(run, &cli.samples, &b, bundle.field_desc())?;
    let cs = comodule_samples(&b, &s);
    run.record(|| check_equivalence_roundtrip(&b, &cs));
    Ok(())
}

fn cmd_braiding(run: &mut Run, cli: &Cli, arg: &str) -> Step<()> {
    let (bundle, q) = load_qt(run, arg)?;
    let b = transmuted(&q)?;
    let s = samples(run, &cli.samples, &b, bundle.field_desc())?;
    let cs = comodule_samples(&b, &s);
    let ms = module_samples(&s);
    let seed = cli.seed;
    run.record(|| check_comodule_braiding(&b, &cs, seed));
    run.record(|| check_induced_braiding(&q, &ms));
    run.record(|| check_monoidal_coherence(&q, &ms, seed));
    Ok(())
}

fn trivializable_samples(b: &BraidedHopf<Scalar>) -> Vec<HModule<Scalar>> {
    let h: &Certified<Scalar> = b.base();
    vec![HModule::regular(h), b.unit_object().clone()]
}

fn cmd_galois_check(run: &mut Run, cli: &Cli, arg: &str) -> Step<()> {
    let (_, b, a) = load_comodule(run, arg)?;
    let (g, ms) = run.time(|| certify_galois(&b, a));
    run.report.add(&g.report, ms);
    if g.is_qc_galois() {
        let seed = cli.seed;
        run.record(|| check_identity_law(&b, &g.algebra));
        run.record(|| check_inverse_law(&b, &g.algebra));
        run.record(|| check_trivializable(&b, &g.algebra, &trivializable_samples(&b), seed));
    }
    Ok(())
}

fn cmd_cotensor(run: &mut Run, left: &str, right: &str) -> Step<()> {
    let (lb, b, a) = load_comodule(run, left)?;
    let (rb, digest) = load_comodule_algebra(right).map_err(input_err)?;
    run.input(digest);
    if rb.base != lb.base {
        return Err(Stop::Input(format!("{left} and {right} live over different algebras")));
    }
    let a2 = rb.to_algebra(&b).map_err(input_err)?;
    let ((rep, prod), ms) = run.time(|| check_group_law(&b, &a, &a2));
    run.report.add(&rep, ms);
    if let Some(p) = prod {
        run.emitted = Some(to_canonical_json(&ComoduleAlgebraBundle::from_algebra(lb.base.clone(), &b, &p.algebra)));
    }
    Ok(())
}

fn cmd_autoequiv(run: &mut Run, arg: &str, probes: &[Probe]) -> Step<()> {
    let (_, b, a) = load_comodule(run, arg)?;
    let g = certify_galois(&b, a);
    run.report.add(&g.report, None);
    let reg = RhComodule::regular(&b);
    let mut rep = VerificationReport::new(format!("autoequivalence test for {}", g.algebra.name()));
    rep.push(CheckResult::from_bool("diagram test is non-vacuous", g.is_galois, || "input is not a bi-Galois object".into()));
    let (_, ms) = run.time(|| {
        for p in probes {
            let m = match p {
                Probe::Regular => reg.clone(),
                Probe::Trivial => RhComodule::trivial(&b, b.unit_object()),
            };
            rep.push(check_autoequivalence_diagram(&b, &g.algebra, &m, &reg));
        }
    });
    rep.flag("quantum_commutative", g.quantum_commutative);
    run.report.add(&rep, ms);
    Ok(())
}

fn face_bundle(n: usize) -> Step<AlgebraBundle> {
    if n < 2 {
        return Err(Stop::Input(format!("face algebra needs N >= 2, got {n}")));
    }
    let inst = build_face_algebra(n);
    let field = instance_field(&inst);
    Ok(AlgebraBundle::from_instance(&inst, field))
}

fn cmd_face(run: &mut Run, n: usize) -> Step<()> {
    let bundle = face_bundle(n)?;
    run.emitted = Some(to_canonical_json(&bundle));
    Ok(())
}

fn cmd_face_check(run: &mut Run, n: usize) -> Step<()> {
    if n < 2 {
        return Err(Stop::Input(format!("face algebra needs N >= 2, got {n}")));
    }
    let (rep, ms) = run.time(|| check_block_decomposition(n));
    run.report.add(&rep.map_err(failed)?, ms);
    Ok(())
}

fn cmd_face_galois(run: &mut Run, n: usize, component: usize, param: &str) -> Step<()> {
    let bundle = face_bundle(n)?;
    let a = Scalar::parse(param, bundle.field_desc()).map_err(input_err)?;
    if component >= n {
        return Err(Stop::Input(format!("component {component} out of range for N = {n}")));
    }
    let q = certify_bundle(run, &bundle)?;
    let b = transmuted(&q)?;
    let obj = cocycle_galois_object(&b, component, &a).map_err(|e| match e {
        whakit_core::face_algebra::FaceError::ZeroParameter => input_err(e),
        e => failed(e),
    })?;
    let (g, ms) = run.time(|| certify_galois(&b, obj));
    run.report.add(&g.report, ms);
    run.emitted = Some(to_canonical_json(&ComoduleAlgebraBundle::from_algebra(bundle, &b, &g.algebra)));
    Ok(())
}

fn write_file(path: &std::path::Path, text: &str) -> std::io::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, text)
}

fn cmd_report(cli: &Cli) -> i32 {
    let text = match std::fs::read_to_string(&cli.state) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", cli.state.display());
            return EXIT_INPUT;
        }
    };
    let report: RunReport = match serde_json::from_str(&text) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {} is not a run report: {e}", cli.state.display());
            return EXIT_INPUT;
        }
    };
    match cli.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.render_text()),
    }
    EXIT_PASS
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    if let Command::Report = cli.command {
        return cmd_report(&cli);
    }
    let mut run = Run {
        cli_seed: cli.seed,
        solve_r_bar: cli.solve_r_bar,
        timings: cli.timings,
        report: RunReport::new(argv.iter().skip(1).cloned().collect(), cli.seed),
        emitted: None,
    };
    let step = match &cli.command {
        Command::Check { algebra } => cmd_check(&mut run, algebra),
        Command::Transmute { algebra } => cmd_transmute(&mut run, algebra),
        Command::YdRoundtrip { algebra } => cmd_yd_roundtrip(&mut run, &cli, algebra),
        Command::BraidingCheck { algebra } => cmd_braiding(&mut run, &cli, algebra),
        Command::Galois { command: GaloisCommand::Check { algebra } } => cmd_galois_check(&mut run, &cli, algebra),
        Command::Cotensor { left, right } => cmd_cotensor(&mut run, left, right),
        Command::AutoequivTest { algebra, probe } => cmd_autoequiv(&mut run, algebra, probe),
        Command::Face { n } => cmd_face(&mut run, *n),
        Command::FaceCheck { n } => cmd_face_check(&mut run, *n),
        Command::FaceGalois { n, component, param } => cmd_face_galois(&mut run, *n, *component, param),
        Command::Report => unreachable!("handled above"),
    };
    let mut code = match step {
        Ok(()) if run.report.passed => EXIT_PASS,
        Ok(()) => EXIT_FAIL,
        Err(Stop::Failed(msg)) => {
            run.report.fail_with(msg);
            EXIT_FAIL
        }
        Err(Stop::Input(msg)) => {
            run.report.fail_with(msg);
            EXIT_INPUT
        }
    };
    let json = run.report.to_json();
    let emits = matches!(
        cli.command,
        Command::Transmute { .. } | Command::Cotensor { .. } | Command::Face { .. } | Command::FaceGalois { .. }
    );
    let artifact = if emits { run.emitted.as_deref() } else { Some(json.as_str()) };
    if let (Some(path), Some(text)) = (&cli.output, artifact) {
        if let Err(e) = write_file(path, text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            code = EXIT_INPUT;
        }
    } else if emits && cli.output.is_none() && cli.format == Format::Text {
        if let Some(text) = &run.emitted {
            print!("{text}");
        }
    }
    if let Err(e) = write_file(&cli.state, &json) {
        eprintln!("warning: cannot write {}: {e}", cli.state.display());
    }
    match cli.format {
        Format::Json => print!("{json}"),
        Format::Text if emits && cli.output.is_none() => eprint!("{}", run.report.render_text()),
        Format::Text => print!("{}", run.report.render_text()),
    }
    code
}
