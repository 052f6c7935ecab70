//! Command-line front end.
//!
//! Every subcommand prints one JSON document (schema `weyl-torus/1`) on
//! stdout, except `hermite --format text`, `raster` without `--csv` (CSV on
//! stdout) and `verify` (a plain table).
//!
//! Exit codes: 0 success (for `member`: inside or on the boundary), 2 argument
//! errors, 3 point outside (`member`, `preimage`), 4 numeric failure (an `"error"` document
//! is printed), 1 a failed `verify` suite or an I/O error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weyl_torus::exactnum::{circle_from_angle, circle_from_tangent, parse_rational, CirclePoint, Rational};
use weyl_torus::geometry::{
    chebyshev_first, chebyshev_second, hermitian_eigenvalues, is_nsd_exact, m_matrix_at_exact, m_matrix_at_f64,
    m_matrix_symbolic, orthogonality_mc, sufficiency_probe, weight_phi, weight_phi_real, TrigKind,
};
use weyl_torus::json;
use weyl_torus::orbitspace::{region_raster, OrbitSpace, RasterSpec, SvgColors, FLOAT_TOLERANCE, MAX_RESOLUTION};
use weyl_torus::rootdata::{Family, RootSystemType};
use weyl_torus::verify::{all_passed, format_table, run_suite, Suite};
use weyl_torus::Error;

const EXIT_OUTSIDE: u8 = 3;
const EXIT_NUMERIC: u8 = 4;

#[derive(Parser)]
#[command(name = "weyl-torus", version, about = "Orbit spaces of Weyl groups acting on the compact torus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Kind {
    /// Root system family: A, B, C or D.
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    rank: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Hermite matrix H(z), symbolically or at a rational point.
    Hermite {
        #[command(flatten)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Evaluate at this point instead of printing polynomials.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rationals)]
        point: Option<Rationals>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide whether z lies in the orbit space.
    Member {
        #[command(flatten)]
        kind: Kind,
        /// Real coordinates, as integers, fractions p/q or decimals.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rationals)]
        point: Rationals,
        /// Use floating point with an absolute tolerance on the coefficients.
        #[arg(long)]
        float: bool,
        #[arg(long, default_value_t = FLOAT_TOLERANCE)]
        tolerance: f64,
        /// Also reconstruct torus preimages of an inside point.
        #[arg(long)]
        preimages: bool,
    },
    /// Orbit-space coordinates of a torus point.
    Theta {
        #[command(flatten)]
        kind: Kind,
        #[command(flatten)]
        torus: TorusPoint,
    },
    /// Torus points over z.
    Preimage {
        #[command(flatten)]
        kind: Kind,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_floats)]
        point: Floats,
    },
    /// Membership verdicts on a grid over a two-dimensional slice.
    Raster {
        #[command(flatten)]
        kind: Kind,
        #[arg(long, default_value_t = 200)]
        resolution: usize,
        /// xmin,xmax,ymin,ymax
        #[arg(long, allow_hyphen_values = true, value_parser = parse_floats, default_value = "-1.1,1.1,-1.1,1.1")]
        window: Floats,
        /// Coordinates on the horizontal and vertical axes, 1-based.
        #[arg(long, value_parser = parse_floats, default_value = "1,2")]
        axes: Floats,
        /// Values of all coordinates; those on the axes are ignored.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_floats)]
        fixed: Option<Floats>,
        #[arg(long, default_value_t = FLOAT_TOLERANCE)]
        tolerance: f64,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value = "#b0b0b0")]
        inside_color: String,
        #[arg(long, default_value = "#303030")]
        boundary_color: String,
        #[arg(long, default_value = "#ffffff")]
        background_color: String,
    },
    /// Generalized Chebyshev polynomial T_α or U_α.
    Cheb {
        #[command(flatten)]
        kind: Kind,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ints)]
        alpha: Ints,
        /// First kind T_α or second kind U_α.
        #[arg(long = "kind", value_enum, default_value_t = ChebKind::First)]
        which: ChebKind,
    },
    /// The weight φ with φ(θ) = Υ_δ².
    Phi {
        #[command(flatten)]
        kind: Kind,
        /// Print in complex coordinates instead of real ones.
        #[arg(long)]
        complex: bool,
    },
    /// The matrix M, symbolically, at a torus point, or sampled against H.
    Mmatrix {
        #[command(flatten)]
        kind: Kind,
        #[command(flatten)]
        torus: OptionalTorusPoint,
        /// Experimental: sample this many rational points where M ⪯ 0 and
        /// report those outside the orbit space.
        #[arg(long)]
        check_sufficiency: Option<usize>,
        /// Half-width of the sampling box for --check-sufficiency.
        #[arg(long, default_value_t = 2)]
        bound: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Monte Carlo estimate of a generalized cosine or sine inner product.
    Ortho {
        #[command(flatten)]
        kind: Kind,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ints)]
        mu: Ints,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ints)]
        nu: Ints,
        #[arg(long = "trig", value_enum, default_value_t = Trig::Cos)]
        trig: Trig,
        #[arg(long, default_value_t = 200_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run verification suites and print a pass/fail table.
    Verify {
        /// golden, forward, preimage, identities, necessary, degrees, psd, ortho or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TorusPoint {
    /// Angles as fractions of a full turn: x_k = exp(2πi a_k).
    #[arg(long, allow_hyphen_values = true, value_parser = parse_floats)]
    angles: Option<Floats>,
    /// Exact points x_k = (1 + i t_k)/(1 − i t_k).
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rationals)]
    tangent: Option<Rationals>,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OptionalTorusPoint {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_floats)]
    angles: Option<Floats>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rationals)]
    tangent: Option<Rationals>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChebKind {
    First,
    Second,
}

#[derive(Clone, Copy, ValueEnum)]
enum Trig {
    Cos,
    Sin,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn split(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim)
}

// Comma-separated lists, kept as single clap values.
#[derive(Clone)]
struct Rationals(Vec<Rational>);
#[derive(Clone)]
struct Floats(Vec<f64>);
#[derive(Clone)]
struct Ints(Vec<i64>);

fn parse_rationals(s: &str) -> Result<Rationals, String> {
    split(s).map(|t| parse_rational(t).map_err(|e| e.to_string())).collect::<Result<_, _>>().map(Rationals)
}

fn parse_floats(s: &str) -> Result<Floats, String> {
    split(s).map(|t| t.parse::<f64>().map_err(|_| format!("not a number: {t:?}"))).collect::<Result<_, _>>().map(Floats)
}

fn parse_ints(s: &str) -> Result<Ints, String> {
    split(s).map(|t| t.parse::<i64>().map_err(|_| format!("not an integer: {t:?}"))).collect::<Result<_, _>>().map(Ints)
}

enum Failure {
    Usage(String),
    Numeric(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Numeric(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn space(k: Kind) -> Result<OrbitSpace, Failure> {
    let t = RootSystemType::new(k.family, k.rank).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(OrbitSpace::new(t)?)
}

fn arity<T>(s: &OrbitSpace, v: &[T], what: &str) -> Result<(), Failure> {
    if v.len() != s.rank() {
        return Err(Failure::Usage(format!("{what} needs {} coordinates, got {}", s.rank(), v.len())));
    }
    Ok(())
}

// A closed pipe (`| head`) is not an error worth reporting.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print(v: &Value) {
    out(&(serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"));
}

fn emit(text: String, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text)?,
        None => out(&text),
    }
    Ok(())
}

fn exact_torus(t: &[Rational]) -> Vec<CirclePoint> {
    t.iter().map(circle_from_tangent).collect()
}

fn hermite(kind: Kind, format: Format, point: Option<Vec<Rational>>, output: Option<PathBuf>) -> Outcome {
    let s = space(kind)?;
    let text = match (point, format) {
        (Some(z), f) => {
            arity(&s, &z, "--point")?;
            let h = s.hermite_at(&z)?;
            match f {
                Format::Json => {
                    serde_json::to_string_pretty(&json::hermite_value_to_json(s.kind(), &z, &h)).unwrap() + "\n"
                }
                Format::Text => h
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(|q| q.to_string()).collect::<Vec<_>>().join("\t") + "\n")
                    .collect(),
            }
        }
        (None, Format::Json) => serde_json::to_string_pretty(&json::hermite_to_json(s.hermite())).unwrap() + "\n",
        (None, Format::Text) => {
            let h = s.hermite().h.to_matrix();
            let mut out = String::new();
            for i in 0..h.rows() {
                for j in i..h.cols() {
                    out.push_str(&format!("H[{},{}] = {}\n", i + 1, j + 1, h.get(i, j)));
                }
            }
            out
        }
    };
    emit(text, output.as_ref())?;
    Ok(0)
}

fn member(kind: Kind, point: Vec<Rational>, float: bool, tolerance: f64, preimages: bool) -> Outcome {
    let s = space(kind)?;
    arity(&s, &point, "--point")?;
    let report = if float {
        let z: Vec<f64> = point.iter().map(weyl_torus::exactnum::rational_to_f64).collect();
        s.membership_f64(&z, tolerance, preimages)?
    } else {
        s.membership(&point, preimages)?
    };
    print(&json::membership_to_json(&report));
    Ok(if report.psd { 0 } else { EXIT_OUTSIDE })
}

fn theta(kind: Kind, torus: TorusPoint) -> Outcome {
    let s = space(kind)?;
    let (real, complex): (Vec<Value>, Vec<Value>) = match (torus.angles.map(|a| a.0), torus.tangent.map(|t| t.0)) {
        (_, Some(t)) => {
            arity(&s, &t, "--tangent")?;
            let x = exact_torus(&t);
            let c = s.theta_complex_exact(&x)?;
            let r = s.theta_exact(&x)?;
            (r.iter().map(json::rational_to_json).collect(), c.iter().map(json::gaussian_to_json).collect())
        }
        (Some(a), None) => {
            arity(&s, &a, "--angles")?;
            let x: Vec<_> = a.iter().map(|&v| circle_from_angle(v)).collect();
            let c = s.theta_complex_f64(&x)?;
            let r = s.theta_f64(&x)?;
            (r.iter().map(|v| json!(v)).collect(), c.iter().map(|v| json::complex_to_json(*v)).collect())
        }
        (None, None) => return Err(Failure::Usage("--angles or --tangent is required".into())),
    };
    print(&json::theta_to_json(s.kind(), &real, &complex));
    Ok(0)
}

fn preimage(kind: Kind, point: Vec<f64>) -> Outcome {
    let s = space(kind)?;
    arity(&s, &point, "--point")?;
    let report = s.membership_f64(&point, FLOAT_TOLERANCE, false)?;
    if !report.psd {
        print(&json::membership_to_json(&report));
        return Ok(EXIT_OUTSIDE);
    }
    let pre = s.preimages(&point)?;
    print(&json::preimages_to_json(s.kind(), &point, &pre));
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn raster(
    kind: Kind,
    resolution: usize,
    window: Vec<f64>,
    axes: Vec<f64>,
    fixed: Option<Vec<f64>>,
    tolerance: f64,
    csv: Option<PathBuf>,
    svg: Option<PathBuf>,
    colors: SvgColors,
) -> Outcome {
    let s = space(kind)?;
    let [x0, x1, y0, y1] =
        <[f64; 4]>::try_from(window).map_err(|_| Failure::Usage("--window needs xmin,xmax,ymin,ymax".into()))?;
    if !(x0 < x1 && y0 < y1) || ![x0, x1, y0, y1].iter().all(|v| v.is_finite()) {
        return Err(Failure::Usage("--window needs finite xmin < xmax and ymin < ymax".into()));
    }
    let axis = |v: f64| -> Result<usize, Failure> {
        if v.fract() == 0.0 && v >= 1.0 && (v as usize) <= s.rank() {
            Ok(v as usize - 1)
        } else {
            Err(Failure::Usage(format!("axis {v} is not a coordinate index in 1..={}", s.rank())))
        }
    };
    if axes.len() != 2 {
        return Err(Failure::Usage("--axes needs two indices".into()));
    }
    let axes = (axis(axes[0])?, axis(axes[1])?);
    if axes.0 == axes.1 {
        return Err(Failure::Usage("--axes must name two different coordinates".into()));
    }
    if resolution == 0 || resolution > MAX_RESOLUTION {
        return Err(Failure::Usage(format!("--resolution must lie in 1..={MAX_RESOLUTION}")));
    }
    let fixed = fixed.unwrap_or_else(|| vec![0.0; s.rank()]);
    arity(&s, &fixed, "--fixed")?;
    let spec = RasterSpec { window: [x0, x1, y0, y1], resolution, axes, fixed, tolerance };
    let r = region_raster(&s, &spec)?;
    match &csv {
        Some(p) => fs::write(p, r.to_csv())?,
        None => out(&r.to_csv()),
    }
    if let Some(p) = &svg {
        fs::write(p, r.to_svg(&colors))?;
    }
    Ok(0)
}

fn cheb(kind: Kind, alpha: Vec<i64>, which: ChebKind) -> Outcome {
    let s = space(kind)?;
    arity(&s, &alpha, "--alpha")?;
    let (name, c) = match which {
        ChebKind::First => ("T", chebyshev_first(s.data(), &alpha)?),
        ChebKind::Second => ("U", chebyshev_second(s.data(), &alpha)?),
    };
    let label = format!("{name}{alpha:?}");
    print(&json::polys_to_json(s.kind(), "chebyshev", &[(label, &c.poly)]));
    Ok(0)
}

fn phi(kind: Kind, complex: bool) -> Outcome {
    let s = space(kind)?;
    let p = if complex { weight_phi(s.data())? } else { weight_phi_real(s.data())? };
    let label = if complex { "phi (complex coordinates)" } else { "phi" };
    print(&json::polys_to_json(s.kind(), "phi", &[(label.to_string(), &p)]));
    Ok(0)
}

fn mmatrix(kind: Kind, torus: OptionalTorusPoint, check: Option<usize>, bound: i64, seed: u64) -> Outcome {
    let s = space(kind)?;
    if let Some(samples) = check {
        if bound < 1 {
            return Err(Failure::Usage("--bound must be positive".into()));
        }
        let r = sufficiency_probe(&s, samples, bound, seed)?;
        print(&json!({
            "schema": json::SCHEMA,
            "kind": "sufficiency_probe",
            "family": s.kind().family.to_string(),
            "rank": s.rank(),
            "experimental": true,
            "seed": seed,
            "sampled": r.sampled,
            "nsd": r.nsd,
            "counterexamples": r.counterexamples.iter()
                .map(|z| z.iter().map(json::rational_to_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        }));
        return Ok(0);
    }
    let doc = match (torus.angles.map(|a| a.0), torus.tangent.map(|t| t.0)) {
        (_, Some(t)) => {
            arity(&s, &t, "--tangent")?;
            let m = m_matrix_at_exact(s.data(), &exact_torus(&t))?;
            let f = m.map(|g| g.to_complex());
            let mut doc = json::mmatrix_value_to_json(s.kind(), &f, &hermitian_eigenvalues(&f));
            doc["nsd_exact"] = json!(is_nsd_exact(&m)?);
            doc
        }
        (Some(a), None) => {
            arity(&s, &a, "--angles")?;
            let x: Vec<_> = a.iter().map(|&v| circle_from_angle(v)).collect();
            let m = m_matrix_at_f64(s.data(), &x)?;
            json::mmatrix_value_to_json(s.kind(), &m, &hermitian_eigenvalues(&m))
        }
        (None, None) => {
            let m = m_matrix_symbolic(s.data())?.real(s.embedding())?;
            json::mmatrix_to_json(s.kind(), &m.map(|c| (c.re.clone(), c.im.clone())))
        }
    };
    print(&doc);
    Ok(0)
}

fn ortho(kind: Kind, mu: Vec<i64>, nu: Vec<i64>, trig: Trig, samples: usize, seed: u64) -> Outcome {
    let s = space(kind)?;
    arity(&s, &mu, "--mu")?;
    arity(&s, &nu, "--nu")?;
    let k = match trig {
        Trig::Cos => TrigKind::Cosine,
        Trig::Sin => TrigKind::Sine,
    };
    let e = orthogonality_mc(s.data(), k, &mu, &nu, samples, seed)?;
    print(&json::mc_to_json(s.kind(), &mu, &nu, seed, &e));
    Ok(0)
}

fn verify(suite: &str, seed: u64) -> Outcome {
    let suites: Vec<Suite> = if suite.eq_ignore_ascii_case("all") {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?]
    };
    let mut ok = true;
    for s in suites {
        let rows = run_suite(s, seed);
        out(&format!("suite {} (seed {seed})\n{}", s.name(), format_table(&rows)));
        ok &= all_passed(&rows);
    }
    Ok(if ok { 0 } else { 1 })
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Hermite { kind, format, point, output } => hermite(kind, format, point.map(|p| p.0), output),
        Command::Member { kind, point, float, tolerance, preimages } => {
            member(kind, point.0, float, tolerance, preimages)
        }
        Command::Theta { kind, torus } => theta(kind, torus),
        Command::Preimage { kind, point } => preimage(kind, point.0),
        Command::Raster {
            kind,
            resolution,
            window,
            axes,
            fixed,
            tolerance,
            csv,
            svg,
            inside_color,
            boundary_color,
            background_color,
        } => raster(
            kind,
            resolution,
            window.0,
            axes.0,
            fixed.map(|f| f.0),
            tolerance,
            csv,
            svg,
            SvgColors { inside: inside_color, boundary: boundary_color, background: background_color },
        ),
        Command::Cheb { kind, alpha, which } => cheb(kind, alpha.0, which),
        Command::Phi { kind, complex } => phi(kind, complex),
        Command::Mmatrix { kind, torus, check_sufficiency, bound, seed } => {
            mmatrix(kind, torus, check_sufficiency, bound, seed)
        }
        Command::Ortho { kind, mu, nu, trig, samples, seed } => ortho(kind, mu.0, nu.0, trig, samples, seed),
        Command::Verify { suite, seed } => verify(&suite, seed),
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("WEYL_TORUS_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| format!("WEYL_TORUS_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("WEYL_TORUS_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
        Err(Failure::Numeric(e)) => {
            print(&json::error_to_json(&e));
            ExitCode::from(EXIT_NUMERIC)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
