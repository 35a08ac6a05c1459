use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use vfilt::check;
use vfilt::input::{load_family, load_pi_sets, parse_alpha, parse_weight};
use vfilt::json::{
    dense_json, root_poly_json, BFunctionJson, FdfJson, GrVReportJson, PFunctionJson, TaggedWeightJson, WeightSetJson,
};
use vfilt::{graded_character_par, ideal_weight_set_par, CliError, Result};
use vfilt_core::bfun::BFunction;
use vfilt_core::filtration::{
    fdf_matrices, fs_hodge_test, hodge_level_checked, nu, p_function, v_cap_f_basis, v_ideal_structure,
    weight_level, GrVReport,
};
use vfilt_core::ratpoly::Rational;
use vfilt_core::spaces::{grv_report, CharacterMode, Route, SpaceFamily};

#[derive(Parser)]
#[command(name = "vfilt", version, about = "Isotypic V-filtration, weight and Hodge data of equivariant D-modules")]
struct Cli {
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Space {
    /// Built-in space: det, symdet, pfaffian or e6.
    #[arg(long, conflicts_with = "space_file", required_unless_present = "space_file")]
    space: Option<String>,
    /// JSON description of an affine b-function family.
    #[arg(long)]
    space_file: Option<PathBuf>,
    /// Matrix size for det, symdet and pfaffian.
    #[arg(long)]
    n: Option<usize>,
}

impl Space {
    fn family(&self) -> Result<SpaceFamily> {
        if let Some(path) = &self.space_file {
            return load_family(path);
        }
        let name = self.space.as_deref().unwrap_or_default();
        let n = match (name, self.n) {
            ("e6", n) => n.unwrap_or(3),
            (_, Some(n)) => n,
            (_, None) => return Err(CliError::Usage(format!("--n is required for {name}"))),
        };
        Ok(SpaceFamily::builtin(name, n)?)
    }
}

#[derive(Args)]
struct Point {
    #[command(flatten)]
    space: Space,
    /// Comma-separated weight coordinates.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

impl Point {
    fn bfunction(&self) -> Result<BFunction> {
        let fam = self.space.family()?;
        Ok(fam.b_of_weight(&parse_weight(&self.weight)?)?)
    }
}

#[derive(Args)]
struct PointAlpha {
    #[command(flatten)]
    point: Point,
    /// Rational such as 3, -1/2 or 7/4.
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
}

impl PointAlpha {
    fn inputs(&self) -> Result<(BFunction, Rational)> {
        Ok((self.point.bfunction()?, parse_alpha(&self.alpha)?))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Degree,
    Inequality,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Weight,
    #[value(name = "grW", alias = "grw")]
    GrW,
    #[value(name = "grWgrV", alias = "grwgrv")]
    GrWGrV,
}

#[derive(Subcommand)]
enum Command {
    /// b-function of one isotypic component.
    Bfun(Point),
    /// p-function p_{λ,α}.
    Pfun(PointAlpha),
    /// ν_{λ,α}.
    Nu(PointAlpha),
    /// Weight filtration level of m f^{-α}.
    WeightLevel(PointAlpha),
    /// Hodge filtration level of m f^{-α}.
    HodgeLevel(PointAlpha),
    /// Generator of the V^α component on the pushforward of the structure sheaf.
    VIdeal(PointAlpha),
    /// Basis of the component of V^α ∩ F_{k+1}.
    VCapF {
        #[command(flatten)]
        at: PointAlpha,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Jordan data of W_ℓ gr_V^α over a weight box, or at one weight.
    Grv {
        #[command(flatten)]
        space: Space,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        level: i64,
        #[arg(long, default_value_t = 3)]
        degree_bound: i64,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Weights of the Hodge ideal I_k(αD) inside a box.
    Ideal {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 4)]
        degree_bound: i64,
        #[arg(long, value_enum, default_value = "degree")]
        route: RouteArg,
    },
    /// Weights of a weight-filtration piece inside a box.
    Character {
        #[command(flatten)]
        space: Space,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        level: i64,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 3)]
        degree_bound: i64,
    },
    /// Matrices of f and ∂f on W_ℓ gr_V^α.
    FdfMatrices {
        #[command(flatten)]
        at: PointAlpha,
        #[arg(long, allow_hyphen_values = true)]
        level: i64,
    },
    /// Hodge test against user-supplied Π sets.
    FsTest {
        #[command(flatten)]
        at: PointAlpha,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        pi_file: PathBuf,
    },
    /// Randomized self-check of the library's invariants.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

fn emit<T: Serialize>(as_json: bool, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    if as_json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        println!("{}", text());
    }
    Ok(())
}

fn positive(alpha: &Rational, what: &str) -> Result<()> {
    if *alpha <= Rational::from_integer(0.into()) {
        return Err(CliError::Usage(format!("{what} needs α > 0, got {alpha}")));
    }
    Ok(())
}

fn render_report(r: &GrVReport) -> String {
    r.entries
        .iter()
        .map(|e| format!("{:?}\tν = {}\tlength {}", e.weight, e.nu, e.exponent))
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(cli: Cli) -> Result<()> {
    let j = cli.json;
    match cli.command {
        Command::Bfun(p) => {
            let b = p.bfunction()?;
            emit(j, &BFunctionJson::from(&b), || b.to_string())
        }
        Command::Pfun(at) => {
            let (b, alpha) = at.inputs()?;
            let p = p_function(&b, &alpha);
            emit(j, &PFunctionJson::from(&p), || p.poly.to_string())
        }
        Command::Nu(at) => {
            let (b, alpha) = at.inputs()?;
            let v = nu(&b, &alpha);
            emit(j, &json!({ "nu": v }), || v.to_string())
        }
        Command::WeightLevel(at) => {
            let (b, alpha) = at.inputs()?;
            let v = weight_level(&b, &alpha);
            emit(j, &json!({ "weight_level": v }), || v.to_string())
        }
        Command::HodgeLevel(at) => {
            let (b, alpha) = at.inputs()?;
            let v = hodge_level_checked(&b, &alpha)?;
            emit(j, &json!({ "hodge_level": v }), || v.to_string())
        }
        Command::VIdeal(at) => {
            let (b, alpha) = at.inputs()?;
            let g = v_ideal_structure(&b, &alpha);
            emit(j, &json!({ "text": g.to_string(), "roots": root_poly_json(&g) }), || g.to_string())
        }
        Command::VCapF { at, k } => {
            let (b, alpha) = at.inputs()?;
            let basis = v_cap_f_basis(&b, &alpha, k);
            let coeffs: Vec<_> = basis.iter().map(dense_json).collect();
            emit(j, &json!({ "basis": coeffs }), || {
                basis.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n")
            })
        }
        Command::Grv { space, alpha, level, degree_bound, weight } => {
            let fam = space.family()?;
            let alpha = parse_alpha(&alpha)?;
            let report = match weight {
                Some(w) => {
                    let w = parse_weight(&w)?;
                    let b = fam.b_of_weight(&w)?;
                    GrVReport::build(&alpha, level, [(w, &b)])
                }
                None => grv_report(&fam, &alpha, level, degree_bound)?,
            };
            emit(j, &GrVReportJson::from(&report), || render_report(&report))
        }
        Command::Ideal { space, k, alpha, degree_bound, route } => {
            let fam = space.family()?;
            let alpha = parse_alpha(&alpha)?;
            positive(&alpha, "ideal")?;
            let route = match route {
                RouteArg::Degree => Route::Degree,
                RouteArg::Inequality => Route::Inequality,
                RouteArg::Both => Route::Both,
            };
            let set = ideal_weight_set_par(&fam, k, &alpha, degree_bound, route)?;
            emit(j, &WeightSetJson::from(&set), || {
                let mut out = Vec::new();
                out.push(format!("constraints: {}", set.constraints.join(", ")));
                if let Some(pd) = &set.primary_decomposition {
                    let parts: Vec<String> = pd.iter().map(|(t, e)| format!("J_{t}^({e})")).collect();
                    out.push(format!("primary decomposition: {}", parts.join(" ∩ ")));
                }
                out.push(format!("{} weights:", set.weights.len()));
                out.extend(set.weights.iter().map(|w| format!("{w:?}")));
                out.join("\n")
            })
        }
        Command::Character { space, alpha, level, mode, degree_bound } => {
            let fam = space.family()?;
            let alpha = parse_alpha(&alpha)?;
            let mode = match mode {
                ModeArg::Weight => CharacterMode::Weight,
                ModeArg::GrW => CharacterMode::GrW,
                ModeArg::GrWGrV => CharacterMode::GrWGrV,
            };
            let weights = graded_character_par(&fam, &alpha, level, degree_bound, mode)?;
            let out: Vec<TaggedWeightJson> = weights.iter().map(TaggedWeightJson::from).collect();
            emit(j, &out, || {
                weights.iter().map(|t| format!("{:?} - {}σ", t.weight, t.alpha)).collect::<Vec<_>>().join("\n")
            })
        }
        Command::FdfMatrices { at, level } => {
            let (b, alpha) = at.inputs()?;
            let m = fdf_matrices(&b, &alpha, level)?;
            emit(j, &FdfJson::from(&m), || {
                let rows = |mat: &vfilt_core::ratpoly::Matrix| {
                    mat.to_rows()
                        .iter()
                        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                        .collect::<Vec<_>>()
                        .join("\n")
                };
                format!("ρ = {}, ν = {}, μ = {}\nf:\n{}\n∂f:\n{}", m.rho, m.nu, m.mu, rows(&m.f), rows(&m.df))
            })
        }
        Command::FsTest { at, k, pi_file } => {
            let (b, alpha) = at.inputs()?;
            let pi = load_pi_sets(&pi_file)?;
            pi.validate(b.degree())?;
            let ok = fs_hodge_test(&b, &alpha, &pi, k)?;
            emit(j, &json!({ "member": ok }), || ok.to_string())
        }
        Command::Check { seed, cases } => {
            let outcomes = check::run(seed, cases);
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            let rows: Vec<_> = outcomes
                .iter()
                .map(|o| json!({ "name": o.name, "cases": o.cases, "passed": o.passed(), "failures": o.failures }))
                .collect();
            emit(j, &rows, || {
                let mut out = Vec::new();
                for o in &outcomes {
                    let tag = if o.passed() { "ok  " } else { "FAIL" };
                    out.push(format!("{tag} {} ({} cases)", o.name, o.cases));
                    out.extend(o.failures.iter().map(|f| format!("       {f}")));
                }
                out.join("\n")
            })?;
            if failed > 0 {
                return Err(CliError::ChecksFailed { failed, total: outcomes.len() });
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
