//! Command-line frontend: load structures from files, run constructions and
//! checkers, emit human-readable or JSON reports.
//!
//! Exit codes: 0 when every axiom passes, 1 when a checker reports a failing
//! axiom (or a delegated precondition check fails), 2 on parse, shape or
//! input-validation errors.

use crate::format;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::{CliError, CliResult};
use homhopf::crossed::{diagonal_crossed_product, drinfeld_double, functor_f, functor_g};
use homhopf::hopf::{
    check_hom_hopf, dual_hopf, verify_automorphism, HomHopfAlgebra,
};
use homhopf::rep::{check_bicomodule_algebra, check_comodule, check_module};
use homhopf::report::AxiomReport;
use homhopf::scalar::parse_scalar;
use homhopf::tcoalg::{build_mhd, check_crossing, check_t_coalgebra};
use homhopf::twist::{
    anti_yd_to_yd, cor49_iso, check_cor49_iso, nyd_tensor, shift_functor, sweep_involutive_pairs,
    twist_to_untwisted, InvolutivePair, ModularPair,
};
use homhopf::yd::{
    braiding, check_dual_pairing, check_yd, datum_from_yd, group_inv, yd_dual, yd_tensor,
    alpha_beta_bicomodule, DualSide, GradedYDModule, YDModule,
};

#[derive(Parser)]
#[command(name = "homhopf", version, about = "Exact checks and constructions for twisted Hopf-type structures")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the axiom checker matching a structure kind on a file.
    Check {
        /// One of: hopf, module, comodule, bicomodule-algebra, yd-module, aut-pair.
        kind: String,
        file: PathBuf,
    },
    /// Run a construction and write the result as a structure file.
    Build(Box<BuildArgs>),
    /// Build a registry example and write it with its report.
    Examples {
        /// One of: h4, sweedler, cyclic-twist, cyclic-literal.
        name: String,
        /// Parameter `c` for h4 (an exact rational such as 1/2).
        #[arg(long)]
        c: Option<String>,
        /// Cyclic group order.
        #[arg(long)]
        n: Option<usize>,
        /// Cyclic automorphism exponent.
        #[arg(long)]
        t: Option<usize>,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct BuildArgs {
    /// One of: double, diagonal, mhd, dual, dual-module, yd-tensor, braiding,
    /// functor-F, functor-G, twist, shift, anti-yd, nyd-tensor, cor49.
    what: String,
    /// Hopf structure file (`--alg`).
    #[arg(long)]
    alg: Option<PathBuf>,
    /// Bicomodule-algebra file.
    #[arg(long)]
    bicomodule: Option<PathBuf>,
    /// Automorphism-pair file.
    #[arg(long)]
    pair: Option<PathBuf>,
    /// Additional automorphism-pair files (mhd).
    #[arg(long, num_args = 0..)]
    pairs: Vec<PathBuf>,
    /// Yetter-Drinfeld module file.
    #[arg(long)]
    yd: Option<PathBuf>,
    /// Module file (functor-G).
    #[arg(long)]
    module: Option<PathBuf>,
    /// Left and right factors for tensor and braiding builds.
    #[arg(long, alias = "m")]
    left: Option<PathBuf>,
    #[arg(long, alias = "n")]
    right: Option<PathBuf>,
    /// Grades attached to --left/--right for graded builds.
    #[arg(long)]
    grade_left: Option<i64>,
    #[arg(long)]
    grade_right: Option<i64>,
    /// Character coefficients, comma-separated exact rationals.
    #[arg(long)]
    theta: Option<String>,
    /// Group-like coefficients, comma-separated exact rationals.
    #[arg(long)]
    omega: Option<String>,
    /// Which automorphism of --pair shifts the label (shift build).
    #[arg(long, value_enum, default_value_t = PairSide::Alpha)]
    side: PairSide,
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum PairSide {
    Alpha,
    Beta,
}

pub fn main_entry() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(report) => {
            print_report(format, &report);
            if report.all_passed() {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("failed: {msg}");
            ExitCode::from(1)
        }
    }
}

fn print_report(format: Format, report: &AxiomReport) {
    match format {
        Format::Text => print!("{report}"),
        Format::Json => {
            let checks: Vec<serde_json::Value> = report
                .checks
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "id": c.id,
                        "passed": c.passed,
                        "counterexample": c.counterexample.as_ref().map(|ce| serde_json::json!({
                            "basis_index": ce.basis_index,
                            "lhs": ce.lhs.iter().map(homhopf::scalar::render_scalar).collect::<Vec<_>>(),
                            "rhs": ce.rhs.iter().map(homhopf::scalar::render_scalar).collect::<Vec<_>>(),
                        })),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "passed": report.all_passed(),
                "checks": checks,
                "notes": report.info,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        }
    }
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(|p| p.to_path_buf()).unwrap_or_default()
}

fn run(cli: Cli) -> CliResult<AxiomReport> {
    match cli.command {
        Command::Check { kind, file } => cmd_check(&kind, &file),
        Command::Build(args) => cmd_build(*args),
        Command::Examples { name, c, n, t, out } => cmd_examples(&name, c, n, t, &out),
    }
}

fn cmd_check(kind: &str, path: &Path) -> CliResult<AxiomReport> {
    let file = format::read_file(path)?;
    if file.kind != kind {
        return Err(CliError::Input(format!(
            "file {} has kind {:?}, expected {:?}",
            path.display(),
            file.kind,
            kind
        )));
    }
    let dir = base_dir(path);
    match kind {
        "hopf" => Ok(check_hom_hopf(&format::hopf_from_file(&file)?)),
        "module" => Ok(check_module(&format::module_from_file(&dir, &file)?)),
        "comodule" => Ok(check_comodule(&format::comodule_from_file(&dir, &file)?)),
        "bicomodule-algebra" => Ok(check_bicomodule_algebra(&format::bicomodule_from_file(&dir, &file)?)),
        "yd-module" => Ok(check_yd(&format::yd_from_file(&dir, &file)?)),
        "aut-pair" => {
            let p = format::autpair_from_file(&dir, &file)?;
            let mut out = AxiomReport::new();
            out.absorb("alpha/", verify_automorphism(p.carrier(), &p.alpha.matrix));
            out.absorb("beta/", verify_automorphism(p.carrier(), &p.beta.matrix));
            Ok(out)
        }
        other => Err(CliError::Input(format!("unknown kind {other:?}"))),
    }
}

fn load_hopf(path: &Option<PathBuf>) -> CliResult<(Arc<HomHopfAlgebra>, format::CarrierRef)> {
    let path = path
        .as_ref()
        .ok_or(CliError::Input("this build needs --alg".into()))?;
    let file = format::read_file(path)?;
    let hopf = Arc::new(format::hopf_from_file(&file)?);
    Ok((hopf, format::CarrierRef::Path(path.display().to_string())))
}

fn load_yd(path: &Option<PathBuf>, flag: &str) -> CliResult<YDModule> {
    let path = path
        .as_ref()
        .ok_or(CliError::Input(format!("this build needs {flag}")))?;
    let file = format::read_file(path)?;
    format::yd_from_file(&base_dir(path), &file)
}

fn parse_coeffs(arg: &Option<String>, dim: usize, flag: &str) -> CliResult<Vec<homhopf::Scalar>> {
    let arg = arg
        .as_ref()
        .ok_or(CliError::Input(format!("this build needs {flag}")))?;
    let parts: Vec<&str> = arg.split(',').collect();
    if parts.len() != dim {
        return Err(CliError::Input(format!(
            "{flag} needs {dim} comma-separated rationals, got {}",
            parts.len()
        )));
    }
    parts.iter().map(|p| parse_scalar(p).map_err(Into::into)).collect()
}

fn graded(m: YDModule, grade: Option<i64>, flag: &str) -> CliResult<GradedYDModule> {
    let grade = grade.ok_or(CliError::Input(format!("this build needs {flag}")))?;
    // a grade that contradicts the stored label is an input error
    GradedYDModule::new(m, grade).map_err(|e| CliError::Input(e.to_string()))
}

fn cmd_build(args: BuildArgs) -> CliResult<AxiomReport> {
    let out = args.out.clone();
    let (file, report) = match args.what.as_str() {
        "double" => {
            let (hopf, _) = load_hopf(&args.alg)?;
            let dd = drinfeld_double(&hopf)?;
            (format::hopf_to_file(&dd.hopf), dd.report)
        }
        "dual" => {
            let (hopf, _) = load_hopf(&args.alg)?;
            let dual = dual_hopf(&hopf)?;
            let report = check_hom_hopf(&dual);
            (format::hopf_to_file(&dual), report)
        }
        "diagonal" => {
            let (hopf, carrier) = load_hopf(&args.alg)?;
            let base = if let Some(bpath) = &args.bicomodule {
                let bfile = format::read_file(bpath)?;
                format::bicomodule_from_file(&base_dir(bpath), &bfile)?
            } else if let Some(ppath) = &args.pair {
                let pfile = format::read_file(ppath)?;
                let pair = format::autpair_from_file(&base_dir(ppath), &pfile)?;
                if pair.carrier().as_ref() != hopf.as_ref() {
                    return Err(CliError::Input("pair carrier differs from --alg".into()));
                }
                alpha_beta_bicomodule(&pair)
            } else {
                homhopf::rep::BicomoduleAlgebra::regular(&hopf)
            };
            let dcp = diagonal_crossed_product(&hopf, &base)?;
            let report = homhopf::hopf::check_hom_algebra(&dcp.algebra);
            let basis = {
                let mut v = Vec::new();
                for f in &hopf.basis {
                    for a in 0..base.algebra.dim {
                        v.push(format!("{f}*|{a}"));
                    }
                }
                v
            };
            let mut file = format::algebra_to_file(&dcp.algebra, Some(basis));
            file.carrier = Some(carrier);
            (file, report)
        }
        "mhd" => {
            let (hopf, carrier) = load_hopf(&args.alg)?;
            let mut pairs = Vec::new();
            for ppath in &args.pairs {
                let pfile = format::read_file(ppath)?;
                let pair = format::autpair_from_file(&base_dir(ppath), &pfile)?;
                if pair.carrier().as_ref() != hopf.as_ref() {
                    return Err(CliError::Input("pair carrier differs from --alg".into()));
                }
                pairs.push(pair);
            }
            // close under inverses so partially specified sets still build
            let mut closed = pairs.clone();
            for p in &pairs {
                let inv = group_inv(p);
                if !closed.contains(&inv) {
                    closed.push(inv);
                }
            }
            let mhd = build_mhd(&hopf, &closed)?;
            let mut report = check_t_coalgebra(&mhd.t);
            report.absorb("", check_crossing(&mhd.t));
            (format::tcoalgebra_to_file(&mhd, carrier), report)
        }
        "dual-module" => {
            let m = load_yd(&args.yd, "--yd")?;
            let dual = yd_dual(&m, DualSide::Right);
            let mut report = check_yd(&dual);
            report.absorb("", check_dual_pairing(&m, &dual)?);
            let carrier = yd_carrier(&args.yd)?;
            (format::yd_to_file(&dual, carrier), report)
        }
        "yd-tensor" => {
            let m = load_yd(&args.left, "--left")?;
            let n = load_yd(&args.right, "--right")?;
            let t = yd_tensor(&m, &n)?;
            let report = check_yd(&t);
            let carrier = yd_carrier(&args.left)?;
            (format::yd_to_file(&t, carrier), report)
        }
        "nyd-tensor" => {
            let m = graded(load_yd(&args.left, "--left")?, args.grade_left, "--grade-left")?;
            let n = graded(load_yd(&args.right, "--right")?, args.grade_right, "--grade-right")?;
            let t = nyd_tensor(&m, &n)?;
            let report = check_yd(&t.inner);
            let carrier = yd_carrier(&args.left)?;
            let mut file = format::yd_to_file(&t.inner, carrier);
            file.grade = Some(t.grade);
            (file, report)
        }
        "braiding" => {
            let m = graded(load_yd(&args.left, "--left")?, args.grade_left, "--grade-left")?;
            let n = graded(load_yd(&args.right, "--right")?, args.grade_right, "--grade-right")?;
            if m.carrier().as_ref() != n.carrier().as_ref() {
                return Err(CliError::Input("braiding factors live over different carriers".into()));
            }
            let c = braiding(&m, &n)?;
            let report = homhopf::yd::check_braiding(&m, &n)?;
            (format::linmap_to_file(c.as_lin()), report)
        }
        "functor-F" => {
            let m = load_yd(&args.yd, "--yd")?;
            let base = alpha_beta_bicomodule(&m.pair);
            let dcp = diagonal_crossed_product(m.carrier(), &base)?;
            let module = functor_f(&dcp, &datum_from_yd(&m))?;
            let report = check_module(&module);
            let basis = None;
            let carrier = format::CarrierRef::Inline(Box::new(format::algebra_to_file(&dcp.algebra, basis)));
            (format::module_to_file(&module, carrier), report)
        }
        "functor-G" => {
            let (hopf, carrier) = load_hopf(&args.alg)?;
            let ppath = args.pair.as_ref().ok_or(CliError::Input("functor-G needs --pair".into()))?;
            let pfile = format::read_file(ppath)?;
            let pair = format::autpair_from_file(&base_dir(ppath), &pfile)?;
            if pair.carrier().as_ref() != hopf.as_ref() {
                return Err(CliError::Input("pair carrier differs from --alg".into()));
            }
            let mpath = args.module.as_ref().ok_or(CliError::Input("functor-G needs --module".into()))?;
            let mfile = format::read_file(mpath)?;
            let module = format::module_from_file(&base_dir(mpath), &mfile)?;
            let dcp = diagonal_crossed_product(&hopf, &alpha_beta_bicomodule(&pair))?;
            let datum = functor_g(&dcp, &module)?;
            let yd = YDModule::new(pair, datum.dim, datum.xi.clone(), datum.action.clone(), datum.coaction.clone());
            let report = check_yd(&yd);
            (format::yd_to_file(&yd, carrier), report)
        }
        "twist" => {
            let m = load_yd(&args.yd, "--yd")?;
            let dim = m.carrier().dim;
            let pi = InvolutivePair {
                theta: parse_coeffs(&args.theta, dim, "--theta")?,
                omega: parse_coeffs(&args.omega, dim, "--omega")?,
            };
            let flat = twist_to_untwisted(&m, &pi)?;
            let report = check_yd(&flat);
            let carrier = yd_carrier(&args.yd)?;
            (format::yd_to_file(&flat, carrier), report)
        }
        "anti-yd" => {
            let m = load_yd(&args.yd, "--yd")?;
            let dim = m.carrier().dim;
            let mp = ModularPair {
                theta: parse_coeffs(&args.theta, dim, "--theta")?,
                omega: parse_coeffs(&args.omega, dim, "--omega")?,
            };
            let out_mod = anti_yd_to_yd(&m, &mp)?;
            let report = check_yd(&out_mod);
            let carrier = yd_carrier(&args.yd)?;
            (format::yd_to_file(&out_mod, carrier), report)
        }
        "shift" => {
            let m = load_yd(&args.yd, "--yd")?;
            let ppath = args.pair.as_ref().ok_or(CliError::Input("shift needs --pair".into()))?;
            let pfile = format::read_file(ppath)?;
            let pair = format::autpair_from_file(&base_dir(ppath), &pfile)?;
            let by = match args.side {
                PairSide::Alpha => pair.alpha.clone(),
                PairSide::Beta => pair.beta.clone(),
            };
            let shifted = shift_functor(&m, &by)?;
            let report = check_yd(&shifted);
            let carrier = yd_carrier(&args.yd)?;
            (format::yd_to_file(&shifted, carrier), report)
        }
        "cor49" => {
            let (hopf, _) = load_hopf(&args.alg)?;
            let ppath = args.pair.as_ref().ok_or(CliError::Input("cor49 needs --pair".into()))?;
            let pfile = format::read_file(ppath)?;
            let pair = format::autpair_from_file(&base_dir(ppath), &pfile)?;
            if pair.carrier().as_ref() != hopf.as_ref() {
                return Err(CliError::Input("pair carrier differs from --alg".into()));
            }
            let pi = if args.theta.is_some() || args.omega.is_some() {
                InvolutivePair {
                    theta: parse_coeffs(&args.theta, hopf.dim, "--theta")?,
                    omega: parse_coeffs(&args.omega, hopf.dim, "--omega")?,
                }
            } else {
                sweep_involutive_pairs(&pair, &[])
                    .into_iter()
                    .next()
                    .ok_or(CliError::Input("no pair in involution found by sweep".into()))?
            };
            let (fwd, bwd) = cor49_iso(&pair, &pi)?;
            let dd = drinfeld_double(&hopf)?;
            let dcp = diagonal_crossed_product(&hopf, &alpha_beta_bicomodule(&pair))?;
            let report = check_cor49_iso(&dd, &dcp, &fwd, &bwd);
            (format::isopair_to_file(&fwd, &bwd), report)
        }
        other => return Err(CliError::Input(format!("unknown build {other:?}"))),
    };
    format::write_file(&out, &file)?;
    Ok(report)
}

fn yd_carrier(path: &Option<PathBuf>) -> CliResult<format::CarrierRef> {
    let path = path.as_ref().expect("validated by load_yd");
    let file = format::read_file(path)?;
    file.carrier
        .ok_or(CliError::Input("module file has no carrier".into()))
}

fn cmd_examples(
    name: &str,
    c: Option<String>,
    n: Option<usize>,
    t: Option<usize>,
    out: &Path,
) -> CliResult<AxiomReport> {
    let mut params: BTreeMap<String, String> = BTreeMap::new();
    if let Some(c) = c {
        params.insert("c".into(), c);
    }
    if let Some(n) = n {
        params.insert("n".into(), n.to_string());
    }
    if let Some(t) = t {
        params.insert("t".into(), t.to_string());
    }
    let built = homhopf::registry::build_example(name, &params)?;
    let file = format::hopf_to_file(&built.hopf);
    format::write_file(out, &file)?;
    Ok(built.report)
}
