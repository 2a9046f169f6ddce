//! The `costress` command line. Exit codes: 0 success, 1 domain error,
//! 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;

use crate::artinian::{self, ArtinianSpec};
use crate::complex::SimplicialComplex;
use crate::compositions;
use crate::datasets;
use crate::error::{Error, Result};
use crate::homology;
use crate::inverse;
use crate::linalg::Field;
use crate::poly::{DualPolynomial, Polynomial};
use crate::random::{self, LMConfig, MonteCarloMode, MonteCarloReport};

/// Environment variable holding the worker-thread count.
pub const THREADS_ENV: &str = "COSTRESS_THREADS";

#[derive(Debug, Parser)]
#[command(name = "costress", version, about = "Stresses, inverse systems and Lefschetz properties of simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct FieldArg {
    /// `q` for the rationals or a prime such as `2` or `p2`
    #[arg(long, default_value = "q")]
    field: Field,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// f/h/g-vectors, pseudomanifold report, Betti numbers, Cohen–Macaulayness
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArg,
        /// Write the canonical complex JSON to this path
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Top stresses of every top cycle and their annihilation checks
    Stress {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Inverse-system dimensions and dual generator counts by degree
    Perp {
        file: PathBuf,
        /// `elementary`, a JSON file of polynomials, or linear forms `c,c,…;c,c,…`
        #[arg(long, default_value = "elementary")]
        extra: String,
        /// Largest degree; defaults to C(d+2, 2)
        #[arg(long = "max")]
        max_degree: Option<usize>,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Ranks of multiplication by L = x_1 + … + x_n and the WLP verdict
    Wlp {
        file: PathBuf,
        /// A single cap for every variable or a comma-separated list
        #[arg(long)]
        caps: String,
        #[command(flatten)]
        field: FieldArg,
        /// Print the Hilbert function of A and of A/LA instead
        #[arg(long)]
        quotient: bool,
        /// Also report ranks of L^j for j up to this power
        #[arg(long, default_value_t = 1)]
        max_power: usize,
    },
    /// Hilbert function of A and of A/LA
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        caps: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Bounded composition counts
    Compositions {
        #[command(subcommand)]
        action: CompositionsAction,
    },
    /// Monte Carlo over Linial–Meshulam random complexes
    Lm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// homology, wlp_criterion or wlp_direct
        #[arg(long, default_value = "homology")]
        mode: MonteCarloMode,
        #[command(flatten)]
        field: FieldArg,
        /// Largest multiplication matrix (rows × cols) evaluated by wlp_direct
        #[arg(long, default_value_t = random::DEFAULT_WLP_BUDGET)]
        budget: usize,
    },
    /// Table of the threshold constants c_d
    Cd {
        #[arg(long, default_value_t = 8)]
        dmax: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Debug, Subcommand)]
enum CompositionsAction {
    /// Peak inequalities and linkage identities for d = 1..=dmax
    Verify {
        #[arg(long)]
        dmax: usize,
    },
    /// a(n, k, l) and b(n, k, l)
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
}

/// Reads a complex file. A name that does not exist on disk but matches a
/// bundled data file (`rp2.json`, `pinched_torus.json`, `gamma.json`) loads
/// the bundled copy.
pub fn load_complex(path: &Path) -> Result<SimplicialComplex> {
    if !path.exists() {
        let bundled = match path.file_name().and_then(|s| s.to_str()) {
            Some("rp2.json") => Some(datasets::RP2_JSON),
            Some("pinched_torus.json") => Some(datasets::PINCHED_TORUS_JSON),
            Some("gamma.json") => Some(datasets::GAMMA_JSON),
            _ => None,
        };
        if let (Some(json), None | Some("")) = (bundled, path.parent().and_then(|p| p.to_str())) {
            return SimplicialComplex::from_json_str(json);
        }
    }
    let text = std::fs::read_to_string(path)?;
    SimplicialComplex::from_json_str(&text)
}

fn parse_caps(s: &str, n: usize) -> Result<Vec<u32>> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad cap {p:?}"))))
        .collect::<Result<_>>()?;
    match parts.len() {
        1 => Ok(vec![parts[0]; n]),
        m if m == n => Ok(parts),
        m => Err(Error::VariableMismatch(n, m)),
    }
}

fn parse_extra(s: &str, cx: &SimplicialComplex) -> Result<Vec<Polynomial>> {
    let n = cx.n_vertices();
    if s == "elementary" {
        return Ok(Polynomial::elementary_sequence(n, (cx.dim() + 1).max(0) as usize));
    }
    if s.ends_with(".json") {
        let text = std::fs::read_to_string(s)?;
        let raw: Vec<serde_json::Value> = serde_json::from_str(&text)?;
        return raw
            .iter()
            .map(|v| {
                let d = DualPolynomial::from_json(&v.to_string())?;
                Polynomial::from_terms(n, d.terms().iter().map(|(e, c)| (e.clone(), c.clone())))
            })
            .collect();
    }
    s.split(';')
        .filter(|form| !form.trim().is_empty())
        .map(|form| {
            let coeffs: Vec<BigRational> = form
                .split(',')
                .map(|c| BigRational::from_str(c.trim()).map_err(|_| Error::Parse(format!("bad coefficient {c:?}"))))
                .collect::<Result<_>>()?;
            if coeffs.len() != n {
                return Err(Error::VariableMismatch(n, coeffs.len()));
            }
            Ok(Polynomial::linear_form(&coeffs))
        })
        .collect()
}

fn tuple<T: ToString>(v: &[T]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn labeled(cx: &SimplicialComplex, faces: &[Vec<usize>]) -> String {
    if faces.is_empty() {
        return "none".into();
    }
    faces.iter().map(|f| tuple(&f.iter().map(|&v| cx.label(v)).collect::<Vec<_>>())).collect::<Vec<_>>().join(" ")
}

fn analyze(out: &mut dyn Write, file: &Path, field: Field, emit: Option<&Path>) -> Result<()> {
    let cx = load_complex(file)?;
    let fv = cx.fhg_vectors();
    let pm = cx.classify_pseudomanifold();
    let betti = homology::reduced_betti(&cx, field)?;
    let reisner = homology::reisner_check(&cx, field)?;
    let orientable = pm.is_without_boundary && betti.get(cx.dim()) > 0;
    writeln!(out, "vertices: {}", tuple(cx.labels()))?;
    writeln!(out, "dimension: {}", cx.dim())?;
    writeln!(out, "facets: {}", cx.facets().len())?;
    writeln!(out, "f-vector: {}", tuple(&fv.f))?;
    writeln!(out, "h-vector: {}", tuple(&fv.h))?;
    writeln!(out, "g-vector: {}", tuple(&fv.g))?;
    writeln!(out, "pseudomanifold: {}, orientable: {}", yes_no(pm.is_pseudomanifold), yes_no(orientable))?;
    writeln!(out, "pure: {}", yes_no(pm.is_pure))?;
    writeln!(out, "strongly connected: {}", yes_no(pm.is_strongly_connected))?;
    writeln!(out, "without boundary: {}", yes_no(pm.is_without_boundary))?;
    writeln!(out, "max ridge degree: {}", pm.max_ridge_degree)?;
    writeln!(out, "boundary ridges: {}", labeled(&cx, &pm.boundary_ridges))?;
    let apexes: Vec<i64> = pm.cone_apexes.iter().map(|&v| cx.label(v)).collect();
    writeln!(out, "cone apexes: {}", if apexes.is_empty() { "none".into() } else { tuple(&apexes) })?;
    writeln!(out, "minimal nonfaces: {}", cx.minimal_nonfaces().len())?;
    writeln!(out, "field: {field}")?;
    writeln!(out, "reduced betti: {}", tuple(betti.nonnegative()))?;
    writeln!(out, "cohen-macaulay: {}", yes_no(reisner.is_cohen_macaulay))?;
    writeln!(out, "homology sphere: {}", yes_no(reisner.is_homology_sphere))?;
    if let Some(path) = emit {
        std::fs::write(path, cx.to_json_string() + "\n")?;
    }
    Ok(())
}

fn stress(out: &mut dyn Write, file: &Path, field: Field) -> Result<()> {
    let cx = load_complex(file)?;
    let cycles = homology::top_cycle_space(&cx, field)?;
    let d = cx.dim();
    writeln!(out, "top cycles: {}", cycles.basis.len())?;
    let extra = Polynomial::elementary_sequence(cx.n_vertices(), (d + 1).max(0) as usize);
    let n_gens = cx.minimal_nonfaces().len();
    for (i, cycle) in cycles.basis.iter().enumerate() {
        let f = inverse::top_stress(&cx, cycle)?;
        writeln!(out, "stress {}: degree {}, {} terms", i + 1, f.degree, f.len())?;
        writeln!(out, "{}", f.to_json())?;
        let bad = inverse::annihilation_failures(&cx, &extra, &f, field)?;
        let bad_e = extra.iter().filter(|e| bad.contains(e)).count();
        writeln!(out, "elementary symmetric e_1..e_{}: {}", d + 1, if bad_e == 0 { "annihilate" } else { "FAIL" })?;
        writeln!(out, "stanley-reisner generators ({n_gens}): {}", if bad.len() == bad_e { "annihilate" } else { "FAIL" })?;
        if !bad.is_empty() {
            return Err(Error::IdentityViolated(format!("{} generator(s) do not annihilate stress {}", bad.len(), i + 1)));
        }
    }
    Ok(())
}

fn perp(out: &mut dyn Write, file: &Path, extra: &str, max_degree: Option<usize>, field: Field) -> Result<()> {
    let cx = load_complex(file)?;
    let extra = parse_extra(extra, &cx)?;
    let profile = inverse::dual_module_generators(&cx, &extra, max_degree, field)?;
    writeln!(out, "k,perp_dim,generators")?;
    for (k, (dim, gens)) in profile.perp_dims.iter().zip(&profile.generator_counts).enumerate() {
        writeln!(out, "{k},{dim},{gens}")?;
    }
    Ok(())
}

fn wlp(out: &mut dyn Write, file: &Path, caps: &str, field: Field, quotient: bool, max_power: usize) -> Result<()> {
    let cx = load_complex(file)?;
    let caps = parse_caps(caps, cx.n_vertices())?;
    let spec = ArtinianSpec::new(cx, caps, field)?;
    let report = artinian::lefschetz_verdict(&spec, max_power)?;
    if quotient {
        write!(out, "{}", report.quotient_table())?;
    } else {
        write!(out, "{}", report.to_csv())?;
    }
    writeln!(out)?;
    writeln!(out, "wlp,{}", report.verdict_wlp)?;
    if max_power > 1 {
        writeln!(out, "slp_up_to_power_{max_power},{}", report.verdict_slp)?;
    }
    if !report.failure_degrees.is_empty() {
        writeln!(out, "failure,from,to,power,rank,full_rank_target,kind")?;
        for f in &report.failure_degrees {
            let kind = match f.kind {
                artinian::FailureKind::Injectivity => "injectivity",
                artinian::FailureKind::Surjectivity => "surjectivity",
            };
            writeln!(out, "failure,{},{},{},{},{},{kind}", f.from, f.to, f.power, f.rank, f.full_rank_target)?;
        }
    }
    Ok(())
}

fn hilbert(out: &mut dyn Write, file: &Path, caps: &str, field: Field) -> Result<()> {
    let cx = load_complex(file)?;
    let caps = parse_caps(caps, cx.n_vertices())?;
    let spec = ArtinianSpec::new(cx, caps, field)?;
    let report = artinian::lefschetz_verdict(&spec, 1)?;
    write!(out, "{}", report.quotient_table())?;
    Ok(())
}

/// Truncates to three decimals and drops trailing zeros.
fn three_decimals(x: f64) -> String {
    let s = format!("{:.3}", (x * 1000.0).floor() / 1000.0);
    let s = s.trim_end_matches('0');
    s.trim_end_matches('.').to_string()
}

fn thresholds(out: &mut dyn Write, dmax: usize, tol: f64) -> Result<()> {
    if dmax < 2 {
        return Err(Error::InvalidConfig("dmax must be at least 2".into()));
    }
    let ds: Vec<usize> = (2..=dmax).collect();
    let cs: Vec<String> = ds.iter().map(|&d| random::threshold_cd(d, tol).map(three_decimals)).collect::<Result<_>>()?;
    writeln!(out, "d,{}", ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))?;
    writeln!(out, "c_d,{}", cs.join(","))?;
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Analyze { file, field, emit } => analyze(out, &file, field.field, emit.as_deref()),
        Command::Stress { file, field } => stress(out, &file, field.field),
        Command::Perp { file, extra, max_degree, field } => perp(out, &file, &extra, max_degree, field.field),
        Command::Wlp { file, caps, field, quotient, max_power } => wlp(out, &file, &caps, field.field, quotient, max_power),
        Command::Hilbert { file, caps, field } => hilbert(out, &file, &caps, field.field),
        Command::Compositions { action: CompositionsAction::Verify { dmax } } => {
            if dmax == 0 {
                return compositions::verify_identities(dmax).map(|_| ());
            }
            // print the full table before failing so a violation is visible
            let report = compositions::identity_report(dmax);
            write!(out, "{}", report.to_csv())?;
            compositions::verify_identities(dmax).map(|_| ())
        }
        Command::Compositions { action: CompositionsAction::Count { n, k, l } } => {
            writeln!(out, "n,k,l,a,b")?;
            writeln!(out, "{n},{k},{l},{},{}", compositions::count_a(n, k, l), compositions::count_b(n, k, l))?;
            Ok(())
        }
        Command::Lm { n, d, p, trials, seed, mode, field, budget } => {
            let cfg = LMConfig::new(n, d, p, trials, seed)?.with_field(field.field).with_budget(budget);
            let report = random::monte_carlo(&cfg, mode)?;
            writeln!(out, "{}", MonteCarloReport::CSV_HEADER)?;
            writeln!(out, "{}", report.csv_row(&cfg))?;
            Ok(())
        }
        Command::Cd { dmax, tol } => thresholds(out, dmax, tol),
    }
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Configures the rayon pool from `COSTRESS_THREADS`, if set.
pub fn init_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}
