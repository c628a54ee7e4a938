//! The `sgkit` command line.
//!
//! Reports are `key: value` lines.  Element indices are 0-based; α labels
//! `alpha p q` are 1-based positions in the base simplex.  Exit codes: 0
//! holds, 1 property fails, 2 input error, 3 internal invariant breach.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::extremal::{dodeca_system, eisenstein_planes, hesse_points, tri_lattice};
use crate::lemmas::{
    canonical_lemma_c, check_hexagon_lemma, check_lemma_c, check_lemma_l1, check_parallelotope_lemma,
    check_triangle_lemma, eisenstein_as_quat, hexagon_suite, lemma_c_parallel, parallelotope_suite,
    reciprocal_closure, sign_sum_identity, triangle_suite, Certificate, SampleReport, SuiteConfig,
};
use crate::minsimplex::{argmin_measure, derive_alpha_system, generic_infinity_in, AlphaSystem, SimplexTable, DEFAULT_ATTEMPTS};
use crate::projective::{dualize, dualize_arrangement, AnyDocument, Coord, Document, Hyperplane};
use crate::scalars::{CPair, Quad, Quat, Rat, RealScalar, Scalar};
use crate::sg_core::{verify_dual_sg, verify_sg};

#[derive(Parser, Debug)]
#[command(name = "sgkit", version, about = "Exact Sylvester-Gallai and minimal-simplex checks")]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance for the floating-point sampling suites.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Write the report here instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the SG condition on points or the dual condition on planes.
    Verify {
        /// Configuration file, `-` for standard input.
        #[arg(default_value = "-")]
        file: String,
        /// Defaults to `sg` when the file has points, `dual` otherwise.
        #[arg(long, value_enum)]
        mode: Option<VerifyMode>,
    },
    /// Swap points and hyperplanes.
    Dualize {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Emit one of the extremal configurations.
    Gen {
        #[arg(value_enum)]
        name: Generator,
        /// Lattice bound (trilattice: |m| ≤ M, default 3; eisenstein: norm ≤ M, default 1).
        #[arg(long)]
        m: Option<u32>,
    },
    /// Measure every simplex of an arrangement and find the least.
    Minsimplex {
        #[arg(default_value = "-")]
        file: String,
        /// Print the α-system of the base simplex with per-inequality slack.
        #[arg(long)]
        alphas: bool,
        /// Base simplex plane indices; the minimum when omitted.
        #[arg(long, value_delimiter = ',')]
        base: Option<Vec<usize>>,
        /// Replace the hyperplane at infinity by a random tie-free one.
        #[arg(long)]
        generic: bool,
        #[arg(long, default_value_t = DEFAULT_ATTEMPTS)]
        attempts: usize,
    },
    /// The α-system of a simplex and its inequalities.
    Alphas {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long, value_delimiter = ',')]
        base: Option<Vec<usize>>,
    },
    /// Exact checks of a lemma's extremal case, then its sampling suite.
    Lemma {
        #[arg(value_enum)]
        name: LemmaName,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    Sg,
    Dual,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Hesse,
    Trilattice,
    Eisenstein,
    Dodeca,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaName {
    Triangle,
    Hexagon,
    Parallelotope,
    L1,
    C,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoFiniteSimplex | Error::RetryExhausted(_) => EXIT_FAIL,
        Error::Internal(_) | Error::SearchFailed(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

/// Text of a command and its exit code.
struct Report {
    text: String,
    code: i32,
}

impl Report {
    fn new() -> Self {
        Report {
            text: String::new(),
            code: EXIT_OK,
        }
    }

    fn line(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.text, "{key}: {value}");
    }

    fn fail_unless(&mut self, ok: bool) {
        if !ok && self.code == EXIT_OK {
            self.code = EXIT_FAIL;
        }
    }
}

macro_rules! dispatch {
    ($doc:expr, $d:ident => $body:expr) => {
        match $doc {
            AnyDocument::Real($d) => $body,
            AnyDocument::RealQuad($d) | AnyDocument::Complex($d) => $body,
            AnyDocument::Quaternion($d) => $body,
            AnyDocument::QuaternionQuad($d) => $body,
        }
    };
}

/// Extra conclusions checked on quaternionic α-systems.
trait Certify: Scalar {
    fn certify(_sys: &AlphaSystem<Self>) -> Option<Certificate> {
        None
    }
}

impl Certify for Rat {}
impl Certify for Quad {}
impl<F: RealScalar> Certify for Quat<F> {
    fn certify(sys: &AlphaSystem<Self>) -> Option<Certificate> {
        Some(check_lemma_l1(sys))
    }
}

fn read_input(file: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    let res = if file == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(file).map(|t| text = t)
    };
    res.map_err(|e| Error::InvalidParameter(format!("cannot read {file}: {e}")))?;
    Ok(text)
}

fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn vector<S: std::fmt::Display>(xs: &[S]) -> String {
    format!("[{}]", xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn ordering_word(o: Option<Ordering>) -> &'static str {
    match o {
        Some(Ordering::Less) => "below",
        Some(Ordering::Equal) => "equal",
        Some(Ordering::Greater) => "above",
        None => "undecided",
    }
}

fn cmd_verify<S: Coord>(doc: &Document<S>, mode: Option<VerifyMode>) -> Result<Report> {
    let mode = mode.unwrap_or(if doc.points.is_empty() { VerifyMode::Dual } else { VerifyMode::Sg });
    let rep = match mode {
        VerifyMode::Sg => verify_sg(&doc.configuration()?),
        VerifyMode::Dual => verify_dual_sg(&doc.arrangement()?),
    };
    let mut out = Report::new();
    out.line("domain", doc.domain);
    out.text.push_str(&rep.render());
    out.fail_unless(rep.is_sg);
    Ok(out)
}

fn cmd_dualize<S: Coord>(doc: &Document<S>) -> Result<Report> {
    let mut dual = if doc.points.is_empty() {
        Document::from_configuration(&dualize_arrangement(&doc.arrangement()?))
    } else {
        Document::from_arrangement(&dualize(&doc.configuration()?))
    };
    dual.notes = doc.notes.clone();
    let mut out = Report::new();
    out.text = dual.to_string();
    Ok(out)
}

fn cmd_gen(name: Generator, m: Option<u32>) -> Result<Report> {
    let text = match name {
        Generator::Hesse => {
            let mut d = Document::from_configuration(&hesse_points());
            d.notes.push("hesse configuration: the nine flexes of x^3 + y^3 + z^3 = 0".into());
            d.to_string()
        }
        Generator::Trilattice => {
            let m = m.unwrap_or(3);
            let mut d = Document::from_arrangement(&tri_lattice(m)?);
            d.notes.push(format!("skew triangular lattice: x_i = m (x1 + x2 + x3), |m| <= {m}"));
            d.to_string()
        }
        Generator::Eisenstein => {
            let m = m.unwrap_or(1);
            let mut d = Document::from_arrangement(&eisenstein_planes(m)?);
            d.notes.push(format!("eisenstein planes: x_f - rho^c x_(f+1) = m x0, N(m) <= {m}"));
            d.to_string()
        }
        Generator::Dodeca => dodeca_system()?.document().to_string(),
    };
    let mut out = Report::new();
    out.text = text;
    Ok(out)
}

fn render_alphas<S: Coord + Certify>(out: &mut Report, sys: &AlphaSystem<S>) {
    out.line("base", join(&sys.base));
    for ((p, q), k) in &sys.thirds {
        let _ = writeln!(out.text, "third {} {}: {k}", p + 1, q + 1);
    }
    for ((p, q), a) in &sys.alpha {
        let _ = writeln!(out.text, "alpha {} {}: {a}", p + 1, q + 1);
    }
    for i in &sys.inequalities {
        let set: Vec<usize> = i.set.iter().map(|q| q + 1).collect();
        let _ = writeln!(out.text, "inequality {} [{}]: value {} slack {}", i.p + 1, join(&set), i.value, i.slack());
    }
    let units = sys.alpha.values().filter(|a| a.abs_sq().is_one()).count();
    let bound = 2 * sys.pairs();
    out.line("inequalities", sys.inequalities.len());
    out.line("all_hold", sys.all_hold());
    out.line("equalities", sys.inequalities.iter().filter(|i| i.is_equality()).count());
    out.line("all_equalities", sys.all_equalities());
    out.line("reciprocal", sys.alpha.iter().all(|(&(p, q), a)| (a.clone() * sys.alpha(q, p).clone()).is_one()));
    out.line("unit_norms", format!("{units}/{}", sys.alpha.len()));
    out.line("agm_bound", bound);
    out.line("abs_sum_vs_bound", ordering_word(sys.abs_sum_cmp(&S::Real::from_int(bound as i64))));
    if let Some(cert) = S::certify(sys) {
        out.text.push_str(&cert.render());
        out.line("certificate", if cert.holds() { "holds" } else { "FAIL" });
    }
    out.fail_unless(sys.all_hold());
}

fn cmd_minsimplex<S: Coord + Certify>(
    doc: &Document<S>,
    alphas: bool,
    base: Option<Vec<usize>>,
    generic: Option<(u64, usize)>,
) -> Result<Report> {
    let mut a = doc.arrangement()?;
    let table = SimplexTable::build(&a)?;
    let mut out = Report::new();
    out.line("domain", a.domain());
    out.line("planes", a.len());
    if let Some((seed, attempts)) = generic {
        let g = generic_infinity_in(&a, &table, seed, attempts)?;
        out.line("generic_attempts", g.attempts);
        a = a.with_infinity(Some(g.infinity))?;
    }
    let inf: Hyperplane<S> = a.infinity_or_barycentric();
    out.line("infinity", vector(inf.covector()));
    let measures = table.measures(&inf)?;
    out.line("simplices", table.len());
    for (t, m) in table.simplices.iter().zip(&measures) {
        let _ = writeln!(out.text, "measure {}: {m}", join(t));
    }
    let (b, ties) = match argmin_measure(&measures) {
        Ok(x) => x,
        Err(Error::NoFiniteSimplex) => {
            out.line("minimum", "none");
            out.code = EXIT_FAIL;
            return Ok(out);
        }
        Err(e) => return Err(e),
    };
    out.line("minimum", &measures[b]);
    out.line("min_simplex", join(&table.simplices[b]));
    out.line("ties", ties.len());
    for t in &ties {
        out.line("tie", join(&table.simplices[*t]));
    }
    if alphas {
        let base = base.unwrap_or_else(|| table.simplices[b].clone());
        let sys = derive_alpha_system(&a, &base)?;
        render_alphas(&mut out, &sys);
    }
    Ok(out)
}

fn cmd_alphas<S: Coord + Certify>(doc: &Document<S>, base: Option<Vec<usize>>) -> Result<Report> {
    let a = doc.arrangement()?;
    let base = match base {
        Some(b) => b,
        None => {
            let table = SimplexTable::build(&a)?;
            let (b, _) = argmin_measure(&table.measures(&a.infinity_or_barycentric())?)?;
            table.simplices[b].clone()
        }
    };
    let sys = derive_alpha_system(&a, &base)?;
    let mut out = Report::new();
    out.line("domain", a.domain());
    render_alphas(&mut out, &sys);
    Ok(out)
}

fn suite_lines(out: &mut Report, rep: &SampleReport) {
    out.text.push_str(&rep.to_string());
    out.fail_unless(rep.passed());
}

fn cmd_lemma(name: LemmaName, cfg: &SuiteConfig) -> Result<Report> {
    let mut out = Report::new();
    let run_suite = cfg.samples > 0;
    match name {
        LemmaName::Triangle => {
            let ones: BTreeMap<_, _> = [((0, 1), Rat::one()), ((0, 2), Rat::one()), ((1, 2), Rat::one())].into_iter().collect();
            let o = check_triangle_lemma(&reciprocal_closure(&ones)?)?;
            out.line("exact_areas", join(&o.areas));
            out.line("exact_conclusion_holds", o.conclusion_holds);
            out.line("exact_equality_case", o.equality_case);
            out.line("exact_parallels_forced", o.parallels_forced);
            let stretched: BTreeMap<_, _> =
                [((0, 1), Rat::from_int(2)), ((0, 2), Rat::one()), ((1, 2), Rat::one())].into_iter().collect();
            let s = check_triangle_lemma(&reciprocal_closure(&stretched)?)?;
            out.line("exact_stretched_holds", s.holds());
            out.fail_unless(o.holds() && o.equality_case && s.holds());
            if run_suite {
                suite_lines(&mut out, &triangle_suite(cfg));
            }
        }
        LemmaName::Hexagon => {
            let rho = Quad::rho();
            let o = check_hexagon_lemma(&[Quad::one(), -rho.clone(), -rho.galois_conj()])?;
            out.line("exact_sum_vs_3", ordering_word(Some(o.sum_cmp)));
            out.line("exact_equality", o.equality);
            let z = CPair::new(Rat::zero(), Rat::zero());
            let zero = check_hexagon_lemma(&[z.clone(), z.clone(), z])?;
            out.line("exact_zero_holds", zero.holds);
            out.fail_unless(o.holds && o.equality && zero.holds && !zero.equality);
            if run_suite {
                suite_lines(&mut out, &hexagon_suite(cfg));
            }
        }
        LemmaName::Parallelotope => {
            let h = |x: i64| Rat::new(x, 2);
            let b = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]
                .map(|v| Quat::new(h(v[0]), h(v[1]), h(v[2]), h(v[3])));
            let o = check_parallelotope_lemma(&b)?;
            out.line("exact_sum_vs_4", ordering_word(Some(o.sum_cmp)));
            out.line("exact_equality", o.equality);
            out.line("exact_sign_sum_identity", sign_sum_identity(&b));
            out.fail_unless(o.holds && o.equality && sign_sum_identity(&b));
            if run_suite {
                suite_lines(&mut out, &parallelotope_suite(cfg));
            }
        }
        LemmaName::L1 => {
            let sys = dodeca_system()?.alpha_system()?;
            let cert = check_lemma_l1(&sys);
            out.text.push_str(&cert.render());
            out.line("holds", cert.holds());
            let embedded: BTreeMap<_, _> = canonical_lemma_c()
                .iter()
                .map(|(&k, v)| eisenstein_as_quat(v).map(|q| (k, q)))
                .collect::<Result<_>>()?;
            let c = check_lemma_l1(&AlphaSystem::from_alphas(4, embedded)?);
            out.line("embedded_complex_solution", c.first_failure().map_or("accepted".into(), |f| format!("rejected at {f}")));
            out.fail_unless(cert.holds() && !c.holds());
        }
        LemmaName::C => {
            let canon = canonical_lemma_c();
            let o = check_lemma_c(&canon)?;
            let parallel = lemma_c_parallel(&canon)?;
            out.line("inequalities", o.system.inequalities.len());
            out.line("admissible", o.admissible);
            out.line("tight", o.tight);
            out.line("vanishing", o.vanishing);
            out.line("all_equalities", o.all_equalities);
            out.line("abs_sum_vs_12", ordering_word(o.sum_cmp));
            let perm = o.matched_permutation.map_or("none".into(), |s| join(&s.map(|i| i + 1)));
            out.line("matched_permutation", perm);
            out.line("parallel_13_24", parallel);
            out.line("holds", o.holds());
            out.fail_unless(o.holds() && parallel);
        }
    }
    Ok(out)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Report> {
    let parse = |file: &str, stdin: &mut dyn Read| -> Result<AnyDocument> { AnyDocument::parse(&read_input(file, stdin)?) };
    match &cli.command {
        Command::Verify { file, mode } => dispatch!(parse(file, stdin)?, d => cmd_verify(&d, *mode)),
        Command::Dualize { file } => dispatch!(parse(file, stdin)?, d => cmd_dualize(&d)),
        Command::Gen { name, m } => cmd_gen(*name, *m),
        Command::Minsimplex {
            file,
            alphas,
            base,
            generic,
            attempts,
        } => {
            let g = generic.then_some((cli.seed, *attempts));
            dispatch!(parse(file, stdin)?, d => cmd_minsimplex(&d, *alphas, base.clone(), g))
        }
        Command::Alphas { file, base } => dispatch!(parse(file, stdin)?, d => cmd_alphas(&d, base.clone())),
        Command::Lemma { name, samples } => cmd_lemma(
            *name,
            &SuiteConfig {
                samples: *samples,
                seed: cli.seed,
                tol: cli.tol,
            },
        ),
    }
}

/// Parse `args` (program name first), run, and return the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let report = match execute(&cli, stdin) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &report.text),
        None => stdout.write_all(report.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_INPUT;
    }
    report.code
}
