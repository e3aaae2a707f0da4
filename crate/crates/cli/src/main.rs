//! Command-line front end: parse polynomial/graph/matrix files, run the
//! decision procedures and samplers, and emit human-readable or JSON
//! reports.
//!
//! Exit codes: 0 = property holds / AGREE, 1 = property fails / falsified /
//! CONFLICT (witness in the report), 2 = usage or parse error,
//! 3 = INCONCLUSIVE-NEGATIVE (sampler budget exhausted on a negative
//! stability instance).

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lorentzian::directional::{
    build_directional_gadget, directional_exact_verdict, directional_lc_at,
    gadget_directional_verdict, DirectionalVerdict,
};
use lorentzian::gadgets::{
    build_directional_instance, build_quartic_lc_gadget, build_stability_gadget, GadgetSidecar,
};
use lorentzian::lorentzian::{cubic_is_log_concave, is_lorentzian, FailureKind};
use lorentzian::oracles::{
    clique_number, max_clique, verify_reduction, ReductionKind, ReductionOutcome,
};
use lorentzian::text;
use lorentzian::{inertia, Error, QPoly, Rational};

const EXIT_OK: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "lorentzian",
    about = "Exact tests for Lorentzian, stable and log-concave polynomials",
    version
)]
struct Cli {
    /// Emit a JSON report on stdout instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    /// Cap the worker thread count (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Seed for all sampling (identical seed => identical report).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a homogeneous polynomial is Lorentzian (completely
    /// log-concave). Exact, polynomial time.
    CheckLorentzian { poly: PathBuf },

    /// Decide log-concavity of a homogeneous cubic with nonnegative
    /// coefficients. Exact, polynomial time.
    CheckCubicLc { poly: PathBuf },

    /// Directional log-concavity checks: exact for graph instances, a grid
    /// scan for a raw cubic q, or a single-point test.
    CheckDirectional(DirectionalArgs),

    /// Construct a reduction gadget and write `<out>.poly` plus a JSON
    /// sidecar `<out>.json`.
    BuildGadget(BuildArgs),

    /// Build a gadget, compute the exact clique verdict, and confirm it on
    /// the polynomial side (samplers / exact witnesses).
    VerifyReduction(VerifyArgs),

    /// Exact maximum clique of a graph.
    Clique { graph: PathBuf },

    /// Exact eigenvalue sign counts of a symmetric rational matrix.
    Inertia { matrix: PathBuf },
}

#[derive(Args)]
struct DirectionalArgs {
    /// Graph file: decide the instance exactly through the clique oracle.
    #[arg(long, conflicts_with_all = ["q", "poly"])]
    graph: Option<PathBuf>,

    /// k for the graph instance.
    #[arg(long, requires = "graph")]
    k: Option<i64>,

    /// Cubic q ≥ 0: build z³ + 3|x|²z + 2q(x) and scan the simplex grid.
    #[arg(long, conflicts_with = "poly")]
    q: Option<PathBuf>,

    /// Polynomial for a single-point directional test.
    #[arg(long, requires_all = ["base", "dir"])]
    poly: Option<PathBuf>,

    /// Base point, comma-separated rationals.
    #[arg(long)]
    base: Option<String>,

    /// Direction, comma-separated rationals.
    #[arg(long)]
    dir: Option<String>,

    /// Simplex subdivisions per axis for the grid scan.
    #[arg(long, default_value_t = 20)]
    grid: u32,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, value_enum)]
    kind: GadgetKind,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    k: i64,
    /// Override the stability gadget's ε (rational, e.g. 1/10000).
    #[arg(long)]
    epsilon: Option<String>,
    /// Output prefix: writes `<out>.poly` and `<out>.json`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    kind: GadgetKind,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    k: i64,
    /// Sampling budget.
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    Stability,
    QuarticLc,
    Directional,
}

impl From<GadgetKind> for ReductionKind {
    fn from(k: GadgetKind) -> Self {
        match k {
            GadgetKind::Stability => ReductionKind::Stability,
            GadgetKind::QuarticLc => ReductionKind::QuarticLc,
            GadgetKind::Directional => ReductionKind::Directional,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        // a later global-pool builder wins only once; ignore re-init errors
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let code = match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    std::process::exit(code);
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })
}

fn load_poly(path: &Path) -> Result<QPoly, Error> {
    text::parse_polynomial(&read(path)?)
}

fn emit(json_mode: bool, value: &Value, human: &str) {
    if json_mode {
        println!("{value}");
    } else {
        println!("{human}");
    }
}

fn alpha_json(alpha: &[u32]) -> Value {
    Value::Array(alpha.iter().map(|&e| json!(e)).collect())
}

fn alpha_human(alpha: &[u32]) -> String {
    let inner: Vec<String> = alpha.iter().map(u32::to_string).collect();
    format!("({})", inner.join(","))
}

fn dispatch(cli: &Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::CheckLorentzian { poly } => {
            let f = load_poly(poly)?;
            let verdict = is_lorentzian(&f);
            let witness = verdict.failure_witness.as_ref();
            let value = json!({
                "command": "check-lorentzian",
                "num_vars": f.num_vars(),
                "num_terms": f.num_terms(),
                "degree": f.degree(),
                "is_lorentzian": verdict.is_lorentzian,
                "witness": witness.map(|w| {
                    let mut v = json!({
                        "alpha": alpha_json(&w.alpha.to_dense(f.num_vars())),
                        "kind": w.kind.name(),
                    });
                    if let FailureKind::BadInertia { inertia } = &w.kind {
                        v["inertia"] = json!({
                            "n_pos": inertia.n_pos,
                            "n_zero": inertia.n_zero,
                            "n_neg": inertia.n_neg,
                        });
                    }
                    v
                }),
            });
            let mut human = format!(
                "polynomial: {} variables, {} terms, degree {}\nLorentzian: {}",
                f.num_vars(),
                f.num_terms(),
                f.degree().map_or("undefined".into(), |d| d.to_string()),
                if verdict.is_lorentzian { "yes" } else { "no" }
            );
            if let Some(w) = witness {
                human.push_str(&format!(
                    "\nwitness alpha={}: {}",
                    alpha_human(&w.alpha.to_dense(f.num_vars())),
                    match &w.kind {
                        FailureKind::BadInertia { inertia } =>
                            format!("bad-inertia ({} positive eigenvalues)", inertia.n_pos),
                        other => other.name().to_string(),
                    }
                ));
            }
            emit(cli.json, &value, &human);
            Ok(if verdict.is_lorentzian { EXIT_OK } else { EXIT_FAIL })
        }

        Command::CheckCubicLc { poly } => {
            let f = load_poly(poly)?;
            let ok = cubic_is_log_concave(&f)?;
            let value = json!({
                "command": "check-cubic-lc",
                "num_vars": f.num_vars(),
                "log_concave": ok,
            });
            let human = format!("cubic log concave on the positive orthant: {}", yes_no(ok));
            emit(cli.json, &value, &human);
            Ok(if ok { EXIT_OK } else { EXIT_FAIL })
        }

        Command::CheckDirectional(args) => check_directional(cli, args),

        Command::BuildGadget(args) => build_gadget(cli, args),

        Command::VerifyReduction(args) => {
            let g = text::parse_graph(&read(&args.graph)?)?;
            let report = verify_reduction(args.kind.into(), &g, args.k, args.trials, cli.seed)?;
            let value = report.to_json();
            let mut human = format!(
                "kind: {}\ngraph: n={} k={} omega={}\nexact verdict: {}\noutcome: {}",
                report.kind.name(),
                report.n,
                report.k,
                report.omega,
                if report.exact_positive { "positive" } else { "negative" },
                report.outcome.name(),
            );
            if let Some(s) = &report.sampler {
                human.push_str(&format!("\nsamples tried: {}", s.samples_tried));
            }
            emit(cli.json, &value, &human);
            Ok(match report.outcome {
                ReductionOutcome::Agree => EXIT_OK,
                ReductionOutcome::Conflict => EXIT_FAIL,
                ReductionOutcome::InconclusiveNegative => EXIT_INCONCLUSIVE,
            })
        }

        Command::Clique { graph } => {
            let g = text::parse_graph(&read(graph)?)?;
            let (omega, members) = max_clique(&g)?;
            let value = json!({
                "command": "clique",
                "n": g.n(),
                "omega": omega,
                "clique": members,
            });
            let human = format!(
                "omega = {omega}, witness clique: {{{}}}",
                members
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            emit(cli.json, &value, &human);
            Ok(EXIT_OK)
        }

        Command::Inertia { matrix } => {
            let m = text::parse_matrix(&read(matrix)?)?;
            let ine = inertia(&m);
            let value = json!({
                "command": "inertia",
                "n": m.n(),
                "n_pos": ine.n_pos,
                "n_zero": ine.n_zero,
                "n_neg": ine.n_neg,
            });
            let human = format!(
                "inertia: {} positive, {} zero, {} negative",
                ine.n_pos, ine.n_zero, ine.n_neg
            );
            emit(cli.json, &value, &human);
            Ok(EXIT_OK)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn check_directional(cli: &Cli, args: &DirectionalArgs) -> Result<i32, Error> {
    if let (Some(graph), Some(k)) = (&args.graph, args.k) {
        let g = text::parse_graph(&read(graph)?)?;
        let inst = build_directional_instance(&g, k)?;
        let omega = clique_number(&g)?;
        let ok = directional_exact_verdict(&inst.ell, omega);
        let value = json!({
            "command": "check-directional",
            "mode": "graph-exact",
            "n": g.n(),
            "k": inst.k,
            "omega": omega,
            "ell": inst.ell.to_string(),
            "log_concave_in_z": ok,
        });
        let human = format!(
            "graph instance: n={} k={} omega={} ell={}\nlog concave in the z direction: {}",
            g.n(),
            inst.k,
            omega,
            inst.ell,
            yes_no(ok)
        );
        emit(cli.json, &value, &human);
        return Ok(if ok { EXIT_OK } else { EXIT_FAIL });
    }

    if let Some(qpath) = &args.q {
        let q = load_poly(qpath)?;
        let gadget = build_directional_gadget(&q)?;
        let verdict = gadget_directional_verdict(&gadget, None, args.grid)?;
        let value = match &verdict {
            DirectionalVerdict::Exact { log_concave } => json!({
                "command": "check-directional",
                "mode": "grid-scan",
                "grid": args.grid,
                "verdict": "exact",
                "log_concave_in_z": log_concave,
            }),
            DirectionalVerdict::Falsified { x, grid_coords } => json!({
                "command": "check-directional",
                "mode": "grid-scan",
                "grid": args.grid,
                "verdict": "falsified",
                "grid_coords": grid_coords,
                "x": x.iter().map(Rational::to_string).collect::<Vec<_>>(),
            }),
            DirectionalVerdict::NotFalsified { points_checked } => json!({
                "command": "check-directional",
                "mode": "grid-scan",
                "grid": args.grid,
                "verdict": "not-falsified",
                "points_checked": points_checked,
            }),
        };
        let human = match &verdict {
            DirectionalVerdict::Exact { log_concave } => {
                format!("verdict: exact, log concave: {}", yes_no(*log_concave))
            }
            DirectionalVerdict::Falsified { x, grid_coords } => format!(
                "verdict: falsified at grid point {:?} (x = {})",
                grid_coords,
                x.iter()
                    .map(Rational::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            DirectionalVerdict::NotFalsified { points_checked } => format!(
                "verdict: not falsified over {points_checked} grid points (semi-decision)"
            ),
        };
        emit(cli.json, &value, &human);
        return Ok(if verdict.as_bool() { EXIT_OK } else { EXIT_FAIL });
    }

    if let Some(polypath) = &args.poly {
        let f = load_poly(polypath)?;
        let base = text::parse_vector(args.base.as_deref().expect("required by clap"))?;
        let dir = text::parse_vector(args.dir.as_deref().expect("required by clap"))?;
        let ok = directional_lc_at(&f, &base, &dir)?;
        let value = json!({
            "command": "check-directional",
            "mode": "point",
            "log_concave_at_point": ok,
        });
        let human = format!("log concave in the given direction at the point: {}", yes_no(ok));
        emit(cli.json, &value, &human);
        return Ok(if ok { EXIT_OK } else { EXIT_FAIL });
    }

    Err(Error::Parse {
        line: 0,
        msg: "check-directional needs --graph/--k, --q, or --poly/--base/--dir".to_string(),
    })
}

fn build_gadget(cli: &Cli, args: &BuildArgs) -> Result<i32, Error> {
    let g = text::parse_graph(&read(&args.graph)?)?;
    let epsilon = match &args.epsilon {
        None => None,
        Some(s) => Some(text::parse_rational(s, 0)?),
    };
    let (poly_text, sidecar) = match args.kind {
        GadgetKind::Stability => {
            let gadget = build_stability_gadget(&g, args.k, epsilon)?;
            (
                text::polynomial_to_text(&gadget.p_tilde),
                GadgetSidecar::for_stability(&gadget),
            )
        }
        GadgetKind::QuarticLc => {
            if epsilon.is_some() {
                return Err(Error::Parse {
                    line: 0,
                    msg: "--epsilon only applies to stability gadgets".to_string(),
                });
            }
            let gadget = build_quartic_lc_gadget(&g, args.k)?;
            (
                text::polynomial_to_text(&gadget.g),
                GadgetSidecar::for_quartic(&gadget),
            )
        }
        GadgetKind::Directional => {
            if epsilon.is_some() {
                return Err(Error::Parse {
                    line: 0,
                    msg: "--epsilon only applies to stability gadgets".to_string(),
                });
            }
            let inst = build_directional_instance(&g, args.k)?;
            let gadget = inst.gadget.as_ref().ok_or(Error::InvalidK {
                k: args.k,
                reason: "ℓ(1) = 0 with edges present leaves q_G/ℓ undefined",
            })?;
            (
                text::polynomial_to_text(&gadget.assembled),
                GadgetSidecar::for_directional(&inst),
            )
        }
    };
    let poly_path = args.out.with_extension("poly");
    let json_path = args.out.with_extension("json");
    let sidecar_json =
        serde_json::to_value(&sidecar).expect("sidecar serialization cannot fail");
    fs::write(&poly_path, &poly_text).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", poly_path.display()),
    })?;
    fs::write(&json_path, format!("{sidecar_json}\n")).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", json_path.display()),
    })?;
    let human = format!(
        "wrote {} and {}\nconstruction: {} (n={}, k={})",
        poly_path.display(),
        json_path.display(),
        sidecar.construction,
        sidecar.n,
        sidecar.k,
    );
    emit(cli.json, &sidecar_json, &human);
    Ok(EXIT_OK)
}
