//! Command-line front end for `homlie-core`: algebra and module files,
//! command dispatch, and human or `--json` reports.
//!
//! Exit codes: 0 on success or a confirmed check, 1 when a validation or
//! hypothesis check fails (or a check is inconclusive over Q), 2 on
//! malformed input or usage errors.

pub mod files;
pub mod render;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homlie_core::catalog::{self, verify_loop_centroid_with_twist, LaurentPoly};
use homlie_core::linalg::parse_scalar;
use homlie_core::maps::{
    central_subspace, solve, special_subspace, verify_adjoint_biderivations,
    verify_cent_equals_com, verify_centroid_induced, verify_commuting_decomposition, TheoremReport,
};
use homlie_core::reduction::{reduce_bider_s, reduce_com};
use homlie_core::{Error, HomLieAlgebra, MapKind, Representation, Verdict};

use crate::files::{emit_algebra, parse_algebra, parse_module, InputError};
use crate::render::*;

#[derive(Debug, Parser)]
#[command(
    name = "homlie",
    version,
    about = "Exact biderivations, centroids and commuting maps of Hom-Lie algebras over Q"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Hom-Jacobi identity and multiplicativity of an algebra file.
    Validate {
        algebra: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print brackets, twist, center and derived subalgebra.
    Info {
        algebra: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Solve for a space of maps into a module.
    Solve {
        kind: SolveKind,
        algebra: PathBuf,
        #[command(flatten)]
        module: ModuleArgs,
        /// Keep only maps with values in Z_V(L).
        #[arg(long, conflicts_with = "special")]
        central: bool,
        /// Keep only maps with values in Z_V(L') that vanish on L'.
        #[arg(long)]
        special: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compute a space through quotients and restrictions and compare with
    /// the direct solve.
    Reduce {
        kind: ReduceKind,
        algebra: PathBuf,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value_t = 8)]
        max_levels: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check a structural statement on one algebra and module.
    Verify {
        check: Check,
        algebra: PathBuf,
        #[command(flatten)]
        module: ModuleArgs,
        /// Offset s of the target module ad_{k+s} (schur).
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        s: i64,
        /// Seed of the simplicity falsifier.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random vectors tried by the simplicity falsifier.
        #[arg(long, default_value_t = 32)]
        trials: usize,
        #[arg(long)]
        json: bool,
    },
    /// List or emit built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check γ = α̌^{k+1} ⊗ Φ on the loop algebra of sl2 within a degree window.
    LoopCheck {
        #[arg(long)]
        k: u32,
        /// Laurent polynomial such as "1 + 2t^2 - t^-3".
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long)]
        window: u32,
        /// Use α̌^P instead of α̌^{k+1}.
        #[arg(long)]
        twist_power: Option<u32>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct ModuleArgs {
    /// Twisted adjoint module ad_K (default 0).
    #[arg(long, allow_negative_numbers = true, conflicts_with = "module_file")]
    pub adjoint: Option<i64>,
    /// Module file over the given algebra.
    #[arg(long)]
    pub module_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SolveKind {
    /// Biderivations.
    Bider,
    /// Skew-symmetric biderivations.
    BiderS,
    /// Centroid.
    Cent,
    /// Commuting linear maps.
    Com,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ReduceKind {
    BiderS,
    Com,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Check {
    /// Skew biderivations come from the centroid (perfect algebra, faithful module).
    Thm36,
    /// Skew biderivations of ad_k are multiples of α^k([-,-]) on an algebra
    /// asserted simple.
    Thm37,
    /// Centroid equals commuting maps (perfect algebra, Z_V(L') = 0).
    Thm43,
    /// Commuting maps of ad_k split as centroid plus central part.
    Prop47,
    /// Module maps ad_k -> ad_{k+s} are multiples of α^{s+1} on an algebra
    /// asserted simple.
    Schur,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Thm36 => "thm36",
            Check::Thm37 => "thm37",
            Check::Thm43 => "thm43",
            Check::Prop47 => "prop47",
            Check::Schur => "schur",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List {
        #[arg(long)]
        json: bool,
    },
    /// Write the algebra file of a built-in algebra.
    Emit {
        name: String,
        #[arg(long, num_args = 0.., allow_hyphen_values = true)]
        params: Vec<String>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self::with_code(0, stdout)
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

#[derive(Debug)]
enum Failure {
    /// Exit 2.
    Input(String),
    /// Exit 1.
    Rejected(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DimensionMismatch { .. }
            | Error::InvalidStructure(_)
            | Error::InvalidParameter(_)
            | Error::KindMismatch { .. }
            | Error::WindowTooSmall { .. }
            | Error::AlgebraMismatch => Failure::Input(e.to_string()),
            _ => Failure::Rejected(e.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(Failure::Input(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Rejected(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<HomLieAlgebra, Failure> {
    parse_algebra(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// An algebra that passes validation.
fn load_accepted(path: &Path) -> Result<Arc<HomLieAlgebra>, Failure> {
    let l = load_algebra(path)?;
    l.ensure_accepted()?;
    Ok(Arc::new(l))
}

/// The selected module with the names used for its basis in reports.
fn load_module(
    l: &Arc<HomLieAlgebra>,
    args: &ModuleArgs,
) -> Result<(Representation, Vec<String>, String), Failure> {
    if let Some(path) = &args.module_file {
        let v = parse_module(&read(path)?, l.clone())
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        v.ensure_accepted()?;
        let names = (1..=v.dim()).map(|a| format!("v{a}")).collect();
        return Ok((v, names, path.display().to_string()));
    }
    let k = args.adjoint.unwrap_or(0);
    let v = Representation::adjoint(l.clone(), k)?;
    Ok((v, l.basis_names().to_vec(), format!("ad_{k}")))
}

fn kind_of(kind: SolveKind) -> MapKind {
    match kind {
        SolveKind::Bider => MapKind::Bider,
        SolveKind::BiderS => MapKind::BiderS,
        SolveKind::Cent => MapKind::Cent,
        SolveKind::Com => MapKind::Com,
    }
}

fn dispatch(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Validate { algebra, json } => {
            let l = load_algebra(&algebra)?;
            let report = l.validate();
            let code = if report.is_accepted() { 0 } else { 1 };
            let text = if json {
                to_json(&ValidationJson::new(&report))
            } else {
                validation_text(&l, &report)
            };
            Ok(Outcome::with_code(code, text))
        }
        Command::Info { algebra, json } => {
            let l = load_algebra(&algebra)?;
            let code = if l.validate().is_accepted() { 0 } else { 1 };
            let text = if json {
                to_json(&InfoJson::new(&l))
            } else {
                info_text(&l)
            };
            Ok(Outcome::with_code(code, text))
        }
        Command::Solve {
            kind,
            algebra,
            module,
            central,
            special,
            json,
        } => {
            let l = load_accepted(&algebra)?;
            let (v, names, label) = load_module(&l, &module)?;
            let mut space = solve(kind_of(kind), &v)?;
            if central {
                space = central_subspace(&space)?;
            } else if special {
                space = special_subspace(&space)?;
            }
            if json {
                return Ok(Outcome::ok(to_json(&MapSpaceJson::new(&space))));
            }
            let mut text = format!("{}(L, {label}): dim {}\n", space.kind(), space.dim());
            text.push_str(&map_space_text(&space, &names));
            Ok(Outcome::ok(text))
        }
        Command::Reduce {
            kind,
            algebra,
            module,
            max_levels,
            json,
        } => {
            let l = load_accepted(&algebra)?;
            let (report, names, label) = match kind {
                ReduceKind::BiderS => {
                    if module.module_file.is_some() {
                        return Err(Failure::Input(
                            "reduce bider-s works on adjoint modules only; use --adjoint".into(),
                        ));
                    }
                    let k = module.adjoint.unwrap_or(0);
                    let r = reduce_bider_s(&l, k, max_levels)?;
                    (r, l.basis_names().to_vec(), format!("ad_{k}"))
                }
                ReduceKind::Com => {
                    let (v, names, label) = load_module(&l, &module)?;
                    (reduce_com(&v, max_levels)?, names, label)
                }
            };
            let code = if report.agrees_with_direct && report.is_complete() {
                0
            } else {
                1
            };
            if json {
                return Ok(Outcome::with_code(
                    code,
                    to_json(&ReductionJson::new(&report)),
                ));
            }
            let mut text = format!(
                "{}(L, {label}): dim {} by reduction, {}\n",
                report.space.kind(),
                report.space.dim(),
                if report.agrees_with_direct {
                    "equal to the direct solve"
                } else {
                    "DIFFERS from the direct solve"
                }
            );
            if !report.is_complete() {
                text.push_str(
                    "hypotheses failed at some level; those levels were solved directly\n",
                );
            }
            text.push_str(&trace_text(&report));
            text.push_str(&map_space_text(&report.space, &names));
            Ok(Outcome::with_code(code, text))
        }
        Command::Verify {
            check,
            algebra,
            module,
            s,
            seed,
            trials,
            json,
        } => {
            let l = load_accepted(&algebra)?;
            let k = module.adjoint.unwrap_or(0);
            let needs_adjoint = matches!(check, Check::Thm37 | Check::Prop47 | Check::Schur);
            if needs_adjoint && module.module_file.is_some() {
                return Err(Failure::Input(format!(
                    "{} works on adjoint modules only; use --adjoint",
                    check.name()
                )));
            }
            let (report, statement) = match check {
                Check::Thm36 => {
                    let (v, _, label) = load_module(&l, &module)?;
                    (
                        verify_centroid_induced(&v)?,
                        format!("every skew biderivation into {label} is centroid-induced"),
                    )
                }
                Check::Thm43 => {
                    let (v, _, _) = load_module(&l, &module)?;
                    (verify_cent_equals_com(&v)?, "Cent = Com".to_string())
                }
                Check::Thm37 => (
                    verify_adjoint_biderivations(&l, k, true, trials, seed)?,
                    format!("Bider_s(L, ad_{k}) is spanned by α^{k}([-,-])"),
                ),
                Check::Prop47 => (
                    verify_commuting_decomposition(&l, k)?,
                    format!("Com(L, ad_{k}) = Cent(L, ad_{k}) + central commuting maps"),
                ),
                Check::Schur => {
                    let r = Representation::schur_check(l.clone(), k, s, true, trials, seed)?;
                    let mut dims = Vec::new();
                    if let Some(space) = &r.space {
                        dims.push(("hom", space.dim()));
                    }
                    (
                        TheoremReport {
                            verdict: r.verdict,
                            dims,
                            falsifier: Some(r.falsifier),
                        },
                        format!("Hom(ad_{k}, ad_{}) = span{{α^{}}}", k + s, s + 1),
                    )
                }
            };
            let code = if report.verdict == Verdict::Confirmed {
                0
            } else {
                1
            };
            let text = if json {
                to_json(&VerifyJson::new(check.name(), &report))
            } else {
                verify_text(&statement, &report, l.basis_names())
            };
            Ok(Outcome::with_code(code, text))
        }
        Command::Catalog { action } => match action {
            CatalogAction::List { json } => {
                if json {
                    #[derive(serde::Serialize)]
                    struct Entry {
                        name: &'static str,
                        params: &'static [&'static str],
                        summary: &'static str,
                    }
                    let entries: Vec<Entry> = catalog::ENTRIES
                        .iter()
                        .map(|e| Entry {
                            name: e.name,
                            params: e.params,
                            summary: e.summary,
                        })
                        .collect();
                    return Ok(Outcome::ok(to_json(&entries)));
                }
                let mut text = String::new();
                let width = catalog::ENTRIES
                    .iter()
                    .map(|e| e.name.len())
                    .max()
                    .unwrap_or(0);
                let pwidth = catalog::ENTRIES
                    .iter()
                    .map(|e| e.params.join(" ").len())
                    .max()
                    .unwrap_or(0);
                for e in catalog::ENTRIES {
                    text.push_str(&format!(
                        "{:width$}  {:pwidth$}  {}\n",
                        e.name,
                        e.params.join(" "),
                        e.summary
                    ));
                }
                Ok(Outcome::ok(text))
            }
            CatalogAction::Emit { name, params } => {
                let params = params
                    .iter()
                    .enumerate()
                    .map(|(i, p)| {
                        parse_scalar(p).map_err(|e| Failure::Input(format!("--params[{i}]: {e}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let l = catalog::build(&name, &params)?;
                Ok(Outcome::ok(emit_algebra(&l)))
            }
        },
        Command::LoopCheck {
            k,
            phi,
            window,
            twist_power,
            json,
        } => {
            let poly =
                LaurentPoly::parse(&phi).map_err(|e| Failure::Input(format!("--phi: {e}")))?;
            let power = twist_power.unwrap_or(k + 1);
            let verdict = verify_loop_centroid_with_twist(k, power, &poly, window)?;
            let code = if verdict.is_confirmed() { 0 } else { 1 };
            let shown = poly.to_string();
            let text = if json {
                to_json(&LoopJson::new(k, power, shown, window, &verdict))
            } else {
                loop_text(k, power, &shown, window, &verdict)
            };
            Ok(Outcome::with_code(code, text))
        }
    }
}
