//! The `diffalg` command-line front end.
//!
//! Exit codes: 0 pass, 1 identity violation or invalid input, 2 parse,
//! shape or I/O error, 3 internal inconsistency.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::ainf2::check_ainf2;
use crate::cohom::{CochainComplex, DiffCochain};
use crate::corresp::{check_crossed_module, cocycle_to_skeletal, crossed_to_strict, skeletal_to_cocycle, strict_to_crossed, CocycleData};
use crate::derived::{graph_subalgebra_check, mc_residual};
use crate::diffainf2::{check_diff_morphism, is_skeletal, is_strict};
use crate::diffalg::{check_diff_bimodule, check_difference, DiffBimodule};
use crate::format::{parse, print, Structure};
use crate::genkit::gen;
use crate::hbimod::{check_diff_hbimod, check_hbimod, semidirect_ainf2, semidirect_diff, split_semidirect};
use crate::twoalg::{alpha, check_diffass2, check_diffass2_morphism, functor_s, functor_t, is_strict_2alg};
use crate::{Error, Report, Result};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "diffalg", version, about = "Check, convert and construct difference algebra structures")]
pub struct Cli {
    /// Emit a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every identity check for the structure in a file.
    Check { path: PathBuf },
    /// Apply T (to a 2-algebra) or S (to a 2-term structure).
    Convert {
        path: PathBuf,
        #[arg(long = "to-2alg", conflicts_with = "to_ainf", required_unless_present = "to_ainf")]
        to_2alg: bool,
        #[arg(long = "to-ainf")]
        to_ainf: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build a structure from its ingredients.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Compare the difference-operator identity, the graph criterion and the
    /// Maurer–Cartan residual.
    Mc { path: PathBuf },
    /// Write generated instances of a kind into a directory.
    Gen {
        kind: GenKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest dimension of the underlying algebra.
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Run the correspondences on a file and report whether it comes back.
    Roundtrip { path: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Skeletal structure from a degree-3 cochain that is a cocycle.
    FromCocycle {
        path: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// 2-term A∞-algebra from a bimodule up to homotopy.
    Semidirect {
        path: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Strict structure from a crossed module.
    FromCrossedModule {
        path: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// 2-term difference A∞-algebra from a difference bimodule up to homotopy.
    SemidirectDiff {
        path: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Algebra,
    DiffAlgebra,
    InvalidDiffAlgebra,
    DiffBimodule,
    Cochain,
    DiffAinf2,
    DiffMorphism,
    CrossedModule,
    Hbimod,
    DiffHbimod,
    Diffass2,
}

/// Everything a command has to say, rendered as text or JSON at the end.
#[derive(Debug, Default)]
struct Outcome {
    code: i32,
    reports: Vec<Report>,
    notes: Vec<String>,
    output: Option<String>,
}

impl Outcome {
    fn from_reports(reports: Vec<Report>) -> Self {
        let code = if reports.iter().all(Report::passed) { EXIT_PASS } else { EXIT_VIOLATION };
        Outcome { code, reports, ..Default::default() }
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Invalid { .. } | Error::Precondition(_) => EXIT_VIOLATION,
        Error::Shape(_) | Error::Parse(_) | Error::ArityCap { .. } => EXIT_PARSE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_PASS };
            if code == EXIT_PASS {
                let _ = write!(stdout, "{e}");
            } else {
                let _ = write!(stderr, "{e}");
            }
            return code;
        }
    };
    let outcome = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(e) => Outcome {
            code: error_code(&e),
            reports: match &e {
                Error::Invalid { report, .. } => vec![(**report).clone()],
                _ => vec![],
            },
            notes: vec![format!("error: {e}")],
            output: None,
        },
    };
    render(&cli, outcome, stdout, stderr)
}

fn render(cli: &Cli, o: Outcome, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    if let Some(text) = &o.output {
        let _ = stdout.write_all(text.as_bytes());
    }
    let status = match o.code {
        EXIT_PASS => "pass",
        EXIT_VIOLATION => "fail",
        EXIT_PARSE => "error",
        _ => "inconsistent",
    };
    let sink: &mut dyn Write = if o.output.is_some() { stderr } else { stdout };
    if cli.json {
        let doc = json!({
            "status": status,
            "exit_code": o.code,
            "notes": o.notes,
            "reports": o.reports,
        });
        let _ = writeln!(sink, "{}", serde_json::to_string_pretty(&doc).expect("reports serialize"));
    } else {
        for r in &o.reports {
            let _ = write!(sink, "{r}");
        }
        for n in &o.notes {
            let _ = writeln!(sink, "{n}");
        }
        let _ = writeln!(sink, "{}", status.to_uppercase());
    }
    o.code
}

fn load(path: &Path) -> Result<Structure> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse(&text)
}

fn emit(s: &Structure, out: &Option<PathBuf>) -> Result<Option<String>> {
    let text = print(s);
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Check { path } => Ok(Outcome::from_reports(check_structure(&load(path)?)?)),
        Command::Convert { path, to_2alg, out, .. } => convert(&load(path)?, *to_2alg, out),
        Command::Construct { what } => construct(what),
        Command::Mc { path } => mc(&load(path)?),
        Command::Gen { kind, seed, max_dim, out_dir } => generate(*kind, *seed, *max_dim, out_dir),
        Command::Roundtrip { path } => roundtrip(&load(path)?),
    }
}

/// Every report relevant to the validity of `s`.
pub fn check_structure(s: &Structure) -> Result<Vec<Report>> {
    Ok(match s {
        Structure::Algebra(alg) => vec![alg.check_associative()?],
        Structure::DiffAlgebra(da) => vec![da.check()?],
        Structure::DiffBimodule(da, bm) => vec![da.check()?, check_diff_bimodule(da, bm)?],
        Structure::AInf2(a) => vec![check_ainf2(a)?],
        Structure::DiffAInf2(x) => vec![x.check()?],
        Structure::DiffMorphism { src, dst, mor } => vec![src.check()?, dst.check()?, check_diff_morphism(src, dst, mor)?],
        Structure::Cochain { da, bm, .. } => vec![da.check()?, check_diff_bimodule(da, bm)?],
        Structure::CrossedModule(cm) => vec![check_crossed_module(cm)?],
        Structure::HBimod(alg, hb) => vec![alg.check_associative()?, check_hbimod(alg, hb)?],
        Structure::DiffHBimod(da, dhb) => vec![da.check()?, check_diff_hbimod(da, dhb)?],
        Structure::DiffAss2(x) => vec![check_diffass2(x)?],
    })
}

fn wrong_kind(s: &Structure, wanted: &str) -> Error {
    Error::Precondition(format!("expected a {wanted} file, got {}", s.kind()))
}

fn convert(s: &Structure, to_2alg: bool, out: &Option<PathBuf>) -> Result<Outcome> {
    match (s, to_2alg) {
        (Structure::DiffAInf2(x), true) => {
            let y = functor_t(x)?;
            let back = functor_s(&y)?;
            let mut o = Outcome::default().note(if back == *x {
                "S(T(input)) reproduces the input exactly"
            } else {
                "S(T(input)) differs from the input"
            });
            if back != *x {
                o.code = EXIT_INCONSISTENT;
            }
            o.output = emit(&Structure::DiffAss2(y), out)?;
            Ok(o)
        }
        (Structure::DiffAss2(x), false) => {
            let y = functor_s(x)?;
            let t = functor_t(&y)?;
            let mut o = Outcome::default();
            o = if t == *x {
                o.note("T(S(input)) reproduces the input exactly")
            } else {
                let (_, a) = alpha(x)?;
                let r = check_diffass2_morphism(&t, x, &a)?;
                let note = if r.passed() {
                    "the input is isomorphic to T(S(input)) via α"
                } else {
                    "α failed its homomorphism checks"
                };
                if !r.passed() {
                    o.code = EXIT_INCONSISTENT;
                }
                o.reports.push(r);
                o.note(note)
            };
            o.output = emit(&Structure::DiffAInf2(y), out)?;
            Ok(o)
        }
        (s, true) => Err(wrong_kind(s, "diff_ainf2")),
        (s, false) => Err(wrong_kind(s, "diffass2")),
    }
}

fn construct(what: &Construct) -> Result<Outcome> {
    let (built, out) = match what {
        Construct::FromCocycle { path, out } => match load(path)? {
            Structure::Cochain { da, bm, cochain: DiffCochain::Higher { f, chi } } if f.arity() == 3 => {
                (Structure::DiffAInf2(cocycle_to_skeletal(&CocycleData { da, bm, mu: f, chi })?), out)
            }
            s => return Err(wrong_kind(&s, "degree-3 cochain")),
        },
        Construct::Semidirect { path, out } => match load(path)? {
            Structure::HBimod(alg, hb) => (Structure::AInf2(semidirect_ainf2(&alg, &hb)?), out),
            s => return Err(wrong_kind(&s, "hbimod")),
        },
        Construct::FromCrossedModule { path, out } => match load(path)? {
            Structure::CrossedModule(cm) => (Structure::DiffAInf2(crossed_to_strict(&cm)?), out),
            s => return Err(wrong_kind(&s, "crossed_module")),
        },
        Construct::SemidirectDiff { path, out } => match load(path)? {
            Structure::DiffHBimod(da, dhb) => (Structure::DiffAInf2(semidirect_diff(&da, &dhb)?), out),
            s => return Err(wrong_kind(&s, "diff_hbimod")),
        },
    };
    let mut o = Outcome::from_reports(check_structure(&built)?);
    if let Structure::DiffAInf2(x) = &built {
        o = o.note(format!("strict: {}", is_strict(x))).note(format!("skeletal: {}", is_skeletal(x)));
    }
    o.output = emit(&built, out)?;
    Ok(o)
}

fn mc(s: &Structure) -> Result<Outcome> {
    let Structure::DiffAlgebra(da) = s else {
        return Err(wrong_kind(s, "diff_algebra"));
    };
    let eq = check_difference(&da.alg, &da.d)?;
    let graph = graph_subalgebra_check(&da.alg, &da.d)?;
    let residual = mc_residual(&da.alg, &da.d)?;
    let verdict = |b: bool| if b { "pass" } else { "fail" };
    let mut o = Outcome::default()
        .note(format!("difference identity: {}", verdict(eq.passed())))
        .note(format!("graph criterion:     {}", verdict(graph.passed())))
        .note(format!("MC residual:         {}", verdict(residual.is_zero())));
    if !residual.is_zero() {
        let mut r = Report::new("l1(d) + ½ l2(d, d)");
        r.expect_zero("MC residual", &residual)?;
        o.reports.push(r);
    }
    let agree = eq.passed() == graph.passed() && graph.passed() == residual.is_zero();
    o.code = match (agree, eq.passed()) {
        (false, _) => EXIT_INCONSISTENT,
        (true, true) => EXIT_PASS,
        (true, false) => EXIT_VIOLATION,
    };
    Ok(if agree { o } else { o.note("the three criteria disagree") })
}

/// Instances of `kind` whose underlying algebra has dimension at most `max_dim`.
pub fn generate_structures(kind: GenKind, seed: u64, max_dim: usize) -> Result<Vec<Structure>> {
    let das: Vec<_> = gen::difference_algebras().into_iter().filter(|da| da.alg.dim() <= max_dim).collect();
    let mut out = Vec::new();
    match kind {
        GenKind::Algebra => {
            for e in crate::genkit::catalog_algebras() {
                if e.alg.dim() <= max_dim {
                    out.push(Structure::Algebra(e.alg));
                }
            }
        }
        GenKind::DiffAlgebra => out.extend(das.into_iter().map(Structure::DiffAlgebra)),
        GenKind::InvalidDiffAlgebra => {
            for (k, e) in crate::genkit::catalog_algebras().into_iter().enumerate() {
                if e.alg.dim() <= max_dim {
                    for d in gen::random_ops(&e.alg, seed.wrapping_add(k as u64), 2) {
                        out.push(Structure::DiffAlgebra(crate::diffalg::DifferenceAlgebra { alg: e.alg.clone(), d }));
                    }
                }
            }
        }
        GenKind::DiffBimodule => {
            for da in das {
                for bm in gen::coefficient_bimodules(&da)? {
                    out.push(Structure::DiffBimodule(da.clone(), bm));
                }
            }
        }
        GenKind::Cochain => {
            for (k, da) in das.into_iter().enumerate() {
                let bm = DiffBimodule::regular(&da);
                let c = gen::gen_cocycle(&da, &bm, seed.wrapping_add(k as u64))?;
                out.push(Structure::Cochain { cochain: DiffCochain::Higher { f: c.mu, chi: c.chi }, da, bm });
            }
        }
        GenKind::DiffAinf2 => out.extend(gen::gen_diff_ainf_corpus(seed, max_dim).into_iter().map(Structure::DiffAInf2)),
        GenKind::DiffMorphism => {
            for (k, x) in gen::gen_diff_ainf_corpus(seed, max_dim).into_iter().enumerate() {
                let (y, mor) = gen::gen_morphism(&x, seed.wrapping_add(k as u64))?;
                out.push(Structure::DiffMorphism { src: x, dst: y, mor });
            }
        }
        GenKind::CrossedModule => {
            for cm in gen::gen_crossed_modules() {
                if cm.base.alg.dim() <= max_dim && cm.top.alg.dim() <= max_dim {
                    out.push(Structure::CrossedModule(cm));
                }
            }
        }
        GenKind::Hbimod | GenKind::DiffHbimod => {
            for (da, dhb) in gen::gen_diff_hbimods() {
                if da.alg.dim() <= max_dim {
                    out.push(if kind == GenKind::Hbimod {
                        Structure::HBimod(da.alg, dhb.base)
                    } else {
                        Structure::DiffHBimod(da, dhb)
                    });
                }
            }
        }
        GenKind::Diffass2 => {
            for x in gen::gen_diff_ainf_corpus(seed, max_dim) {
                out.push(Structure::DiffAss2(functor_t(&x)?));
            }
        }
    }
    Ok(out)
}

fn generate(kind: GenKind, seed: u64, max_dim: usize, dir: &Path) -> Result<Outcome> {
    let items = generate_structures(kind, seed, max_dim)?;
    std::fs::create_dir_all(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
    let mut o = Outcome::default();
    for (k, s) in items.iter().enumerate() {
        let p = dir.join(format!("{}-{k:03}.json", s.kind()));
        std::fs::write(&p, print(s)).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
        o.notes.push(p.display().to_string());
    }
    Ok(o.note(format!("wrote {} file(s)", items.len())))
}

fn same(name: &str, identical: bool) -> String {
    format!("{name}: {}", if identical { "identical" } else { "DIFFERS" })
}

fn roundtrip(s: &Structure) -> Result<Outcome> {
    let text = print(s);
    let mut checks = vec![("parse(print(x)) byte-identical".to_string(), print(&parse(&text)?) == text)];
    match s {
        Structure::DiffAInf2(x) => {
            checks.push(("S(T(x)) = x".into(), functor_s(&functor_t(x)?)? == *x));
            if is_strict(x) {
                checks.push(("crossed module and back".into(), crossed_to_strict(&strict_to_crossed(x)?)? == *x));
            }
            if is_skeletal(x) {
                checks.push(("cocycle and back".into(), cocycle_to_skeletal(&skeletal_to_cocycle(x)?)? == *x));
            }
        }
        Structure::DiffAss2(x) => {
            let (tsx, a) = alpha(x)?;
            checks.push(("T(S(x)) = x".into(), tsx == *x));
            checks.push(("α: T(S(x)) → x is a homomorphism".into(), check_diffass2_morphism(&tsx, x, &a)?.passed()));
            checks.push(("strictness preserved".into(), is_strict_2alg(x)? == is_strict(&functor_s(x)?)));
        }
        Structure::CrossedModule(cm) => {
            checks.push(("strict structure and back".into(), strict_to_crossed(&crossed_to_strict(cm)?)? == *cm));
        }
        Structure::Cochain { da, bm, cochain: DiffCochain::Higher { f, chi } } if f.arity() == 3 => {
            let data = CocycleData { da: da.clone(), bm: bm.clone(), mu: f.clone(), chi: chi.clone() };
            checks.push(("skeletal structure and back".into(), skeletal_to_cocycle(&cocycle_to_skeletal(&data)?)? == data));
            let cx = CochainComplex::new(da.clone(), bm.clone())?;
            checks.push(("is a 3-cocycle".into(), cx.is_3_cocycle(f, chi)?));
        }
        Structure::DiffHBimod(da, dhb) => {
            let x = semidirect_diff(da, dhb)?;
            let (da2, dhb2) = split_semidirect(da.space(), &dhb.base.m0, &x)?;
            checks.push(("semidirect product and back".into(), da2 == *da && dhb2 == *dhb));
        }
        _ => {}
    }
    let ok = checks.iter().all(|(_, b)| *b);
    let mut o = Outcome { code: if ok { EXIT_PASS } else { EXIT_VIOLATION }, ..Default::default() };
    for (name, b) in checks {
        o.notes.push(same(&name, b));
    }
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["diffalg"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        out.extend(err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn generated_files_check_and_mc_agrees() {
        let dir = std::env::temp_dir().join(format!("diffalg-cli-{}", std::process::id()));
        let d = dir.to_str().unwrap();
        for kind in ["diff-algebra", "invalid-diff-algebra"] {
            assert_eq!(run_args(&["gen", kind, "--max-dim", "2", "--out-dir", d]).0, 0);
        }
        let mut files: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
        files.sort();
        for f in files {
            let p = f.to_str().unwrap();
            let (check, _) = run_args(&["check", p]);
            let (mc_code, text) = run_args(&["mc", p]);
            assert_ne!(mc_code, EXIT_INCONSISTENT, "{text}");
            assert_eq!(check, mc_code, "{p}");
        }
        std::fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn bad_arguments_and_missing_files() {
        assert_eq!(run_args(&["check"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["check", "/nonexistent/file.json"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["--help"]).0, EXIT_PASS);
    }
}
