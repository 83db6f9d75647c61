//! Command-line surface. Exit codes: 0 success, 1 negative verdict, 2 input error.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{check_axioms, check_multiplicative, HomLieAntialgebra};
use crate::catalog::{lookup, CatalogEntry, ConformalSamples};
use crate::cohomology::{CohomologyDims, CochainComplex};
use crate::deformations::{
    check_infinitesimal, deform, deformation_from_nijenhuis, is_nijenhuis, verify_trivial,
    InfinitesimalReport, NijenhuisCandidate,
};
use crate::error::{Error, Result};
use crate::extensions::{extension_from_cocycle, h2_classification_report, omega_to_cochain};
use crate::io::{from_json, to_canonical_json, AlgebraFile, OmegaFile, OperatorFile, RepFile};
use crate::report::IdentityReport;
use crate::representation::{adjoint_representation, trivial_representation, HomModule, Representation};
use crate::scalar::{format_rational, frac, int, parse_rational};

pub const MAX_DEGREE_VAR: &str = "HOMANTI_MAX_DEGREE";
const DEFAULT_MAX_DEGREE: usize = 4;

#[derive(Debug, Parser)]
#[command(name = "homanti", version, about = "Exact computations for Hom-Lie antialgebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the output to this path instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the algebra identities (and optionally multiplicativity).
    Check {
        /// Algebra file or catalog name such as `k1`, `k1-twisted?mu=3`, `conformal?r=2`.
        algebra: String,
        #[arg(long)]
        multiplicative: bool,
        /// Window half-width for lazily evaluated catalog algebras.
        #[arg(long, default_value_t = 2)]
        window: i64,
    },
    /// Dimensions of the cohomology in one degree.
    Cohomology {
        algebra: String,
        /// `adjoint`, `trivial`, `trivial:r,s` or a representation file.
        #[arg(long)]
        rep: String,
        #[arg(long)]
        degree: usize,
    },
    /// Build the extension defined by a 2-cochain.
    Extend {
        algebra: String,
        #[arg(long)]
        rep: String,
        /// Omega file with blocks valued in the module.
        #[arg(long)]
        cocycle: PathBuf,
        /// Also write the extension algebra file here.
        #[arg(long)]
        algebra_out: Option<PathBuf>,
    },
    /// Deform the products by `t·ω`.
    Deform {
        algebra: String,
        #[arg(long)]
        omega: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        algebra_out: Option<PathBuf>,
    },
    /// Test a linear operator for the Nijenhuis identities and build its deformation.
    Nijenhuis {
        algebra: String,
        /// `id`, `zero` or an operator file.
        #[arg(long)]
        phi: String,
    },
    /// Second cohomology with representatives and their extensions.
    H2 {
        algebra: String,
        #[arg(long)]
        rep: String,
    },
    /// Print a finite algebra (catalog name or file) as a canonical algebra file.
    Export { algebra: String },
}

/// Rendered output and whether the requested verdict was positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub success: bool,
}

pub fn exit_code(result: &Result<Outcome>) -> i32 {
    match result {
        Ok(o) if o.success => 0,
        Ok(_) => 1,
        Err(e) if e.is_input_error() => 2,
        Err(_) => 1,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

enum Loaded {
    Finite(HomLieAntialgebra),
    Lazy(crate::catalog::ConformalAlgebra),
}

fn load_any(source: &str) -> Result<Loaded> {
    let path = Path::new(source);
    if path.exists() {
        let file: AlgebraFile = from_json(&read(path)?)?;
        return Ok(Loaded::Finite(file.to_algebra()?));
    }
    match lookup(source) {
        Ok(CatalogEntry::Finite(a)) => Ok(Loaded::Finite(a)),
        Ok(CatalogEntry::Conformal(c)) => Ok(Loaded::Lazy(c)),
        Err(e) => Err(Error::Input(format!("{source:?} is neither a file nor a catalog entry ({e})"))),
    }
}

fn load_algebra(source: &str) -> Result<HomLieAntialgebra> {
    match load_any(source)? {
        Loaded::Finite(a) => Ok(a),
        Loaded::Lazy(_) => Err(Error::Input(format!("{source} is infinite-dimensional; only `check` accepts it"))),
    }
}

fn load_rep(source: &str, a: &HomLieAntialgebra) -> Result<Representation> {
    match source {
        "adjoint" => adjoint_representation(a),
        "trivial" => Ok(trivial_representation(a, HomModule::identity(1, 0))),
        _ if source.starts_with("trivial:") => {
            let dims: Vec<&str> = source["trivial:".len()..].split(',').collect();
            let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Input(format!("bad module size in {source:?}")));
            match dims.as_slice() {
                [r, s] => Ok(trivial_representation(a, HomModule::identity(parse(r)?, parse(s)?))),
                _ => Err(Error::Input(format!("expected trivial:r,s, got {source:?}"))),
            }
        }
        _ => {
            let file: RepFile = from_json(&read(Path::new(source))?)?;
            file.to_representation(a)
        }
    }
}

fn max_degree() -> Result<usize> {
    match std::env::var(MAX_DEGREE_VAR) {
        Ok(v) => v
            .parse()
            .map_err(|_| Error::Input(format!("{MAX_DEGREE_VAR}={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn render<T: Serialize>(json: bool, report: &T, text: String) -> Result<String> {
    if json {
        to_canonical_json(report)
    } else {
        Ok(text)
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

#[derive(Serialize)]
struct CheckReport {
    algebra: String,
    verdict: &'static str,
    axioms: IdentityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplicativity: Option<IdentityReport>,
}

#[derive(Serialize)]
struct CohomologyReport {
    #[serde(flatten)]
    dims: CohomologyDims,
    modular_ranks_agree: bool,
}

#[derive(Serialize)]
struct ExtendReport {
    verdict: &'static str,
    cocycle: bool,
    extension: AlgebraFile,
    axioms: IdentityReport,
}

#[derive(Serialize)]
struct DeformReport {
    t: String,
    verdict: &'static str,
    deformed: AlgebraFile,
    axioms: IdentityReport,
    infinitesimal: InfinitesimalReport,
}

#[derive(Serialize)]
struct SampleReport {
    t: String,
    homomorphism: IdentityReport,
}

#[derive(Serialize)]
struct NijenhuisReport {
    verdict: &'static str,
    nijenhuis: IdentityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    omega: Option<OmegaFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    infinitesimal: Option<InfinitesimalReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    triviality: Option<Vec<SampleReport>>,
}

#[derive(Serialize)]
struct RepresentativeReport {
    omega: OmegaFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    extension_axioms: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    construction_error: Option<String>,
}

#[derive(Serialize)]
struct H2CliReport {
    dim: usize,
    realizable_dim: usize,
    representatives: Vec<RepresentativeReport>,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::Check {
            algebra,
            multiplicative,
            window,
        } => match load_any(algebra)? {
            Loaded::Finite(a) => {
                let axioms = check_axioms(&a);
                let mult = multiplicative.then(|| check_multiplicative(&a));
                let ok = axioms.passed() && mult.as_ref().is_none_or(IdentityReport::passed);
                let mut text = format!("{algebra}: {}\n{axioms}", verdict(ok));
                if let Some(m) = &mult {
                    text.push_str(&m.to_string());
                }
                let report = CheckReport {
                    algebra: algebra.clone(),
                    verdict: verdict(ok),
                    axioms,
                    multiplicativity: mult,
                };
                Ok(Outcome {
                    text: render(json, &report, text)?,
                    success: ok,
                })
            }
            Loaded::Lazy(c) => {
                let axioms = c.spot_check_axioms(&ConformalSamples::window(*window));
                let ok = axioms.passed();
                let text = format!("{algebra} (window {window}): {}\n{axioms}", verdict(ok));
                let report = CheckReport {
                    algebra: algebra.clone(),
                    verdict: verdict(ok),
                    axioms,
                    multiplicativity: None,
                };
                Ok(Outcome {
                    text: render(json, &report, text)?,
                    success: ok,
                })
            }
        },
        Command::Cohomology { algebra, rep, degree } => {
            let cap = max_degree()?;
            if *degree == 0 || *degree > cap {
                return Err(Error::Input(format!("degree must lie in 1..={cap} ({MAX_DEGREE_VAR})")));
            }
            let a = load_algebra(algebra)?;
            let rho = load_rep(rep, &a)?;
            let c = CochainComplex::new(&a, &rho)?;
            let dims = c.cohomology_dim(*degree)?;
            let agree = dims.rank_d.agrees() && dims.rank_d_prev.as_ref().is_none_or(|r| r.agrees());
            let k = dims.degree;
            let text = format!(
                "dim C^{k} (admissible) = {}\nrank d^{} = {}\ndim ker d^{k} = {}\ndim H^{k} = {}\nmodular rank check at {} primes: {}\n",
                dims.cochain_dim,
                k - 1,
                dims.coboundary_dim,
                dims.cocycle_dim,
                dims.cohomology_dim,
                dims.rank_d.modular.len(),
                if agree { "agree" } else { "DISAGREE" }
            );
            let report = CohomologyReport {
                dims,
                modular_ranks_agree: agree,
            };
            Ok(Outcome {
                text: render(json, &report, text)?,
                success: agree,
            })
        }
        Command::Extend {
            algebra,
            rep,
            cocycle,
            algebra_out,
        } => {
            let a = load_algebra(algebra)?;
            let rho = load_rep(rep, &a)?;
            let file: OmegaFile = from_json(&read(cocycle)?)?;
            let omega = file.to_omega(a.even_dim(), a.odd_dim(), rho.even_dim(), rho.odd_dim())?;
            let big = extension_from_cocycle(&a, &rho, &omega)?;
            let c = CochainComplex::new(&a, &rho)?;
            let is_cocycle = c.is_cocycle(&omega_to_cochain(&c, &omega)?)?;
            let axioms = check_axioms(&big);
            let out_file = AlgebraFile::from_algebra(&big);
            if let Some(p) = algebra_out {
                std::fs::write(p, to_canonical_json(&out_file)?)?;
            }
            let ok = axioms.passed();
            let text = format!(
                "extension {}|{}: {}\ncocycle: {}\n{axioms}",
                big.even_dim(),
                big.odd_dim(),
                verdict(ok),
                is_cocycle
            );
            let report = ExtendReport {
                verdict: verdict(ok),
                cocycle: is_cocycle,
                extension: out_file,
                axioms,
            };
            Ok(Outcome {
                text: render(json, &report, text)?,
                success: ok,
            })
        }
        Command::Deform {
            algebra,
            omega,
            t,
            algebra_out,
        } => {
            let a = load_algebra(algebra)?;
            let t = parse_rational(t)?;
            let file: OmegaFile = from_json(&read(omega)?)?;
            let (p, q) = (a.even_dim(), a.odd_dim());
            let w = file.to_omega(p, q, p, q)?;
            let d = deform(&a, &w, &t)?;
            let axioms = check_axioms(&d);
            let infinitesimal = check_infinitesimal(&a, &w)?;
            let out_file = AlgebraFile::from_algebra(&d);
            if let Some(path) = algebra_out {
                std::fs::write(path, to_canonical_json(&out_file)?)?;
            }
            let ok = axioms.passed();
            let text = format!(
                "deformation at t = {}: {}\ncondition (i): {}\ncondition (ii): {}\n{axioms}",
                format_rational(&t),
                verdict(ok),
                verdict(infinitesimal.condition_i.passed()),
                verdict(infinitesimal.condition_ii.passed()),
            );
            let report = DeformReport {
                t: format_rational(&t),
                verdict: verdict(ok),
                deformed: out_file,
                axioms,
                infinitesimal,
            };
            Ok(Outcome {
                text: render(json, &report, text)?,
                success: ok,
            })
        }
        Command::Nijenhuis { algebra, phi } => {
            let a = load_algebra(algebra)?;
            let cand = match phi.as_str() {
                "id" => NijenhuisCandidate::identity(&a),
                "zero" => NijenhuisCandidate::zero(&a),
                path => {
                    let f: OperatorFile = from_json(&read(Path::new(path))?)?;
                    f.to_candidate(a.even_dim(), a.odd_dim())?
                }
            };
            let nij = is_nijenhuis(&a, &cand)?;
            let mut report = NijenhuisReport {
                verdict: verdict(nij.passed()),
                nijenhuis: nij.clone(),
                omega: None,
                infinitesimal: None,
                triviality: None,
            };
            let mut text = format!("Nijenhuis: {}\n{nij}", verdict(nij.passed()));
            let mut ok = nij.passed();
            if ok {
                let w = deformation_from_nijenhuis(&a, &cand)?;
                let inf = check_infinitesimal(&a, &w)?;
                let samples = [int(1), int(-1), frac(1, 2), frac(1, 3)];
                let triv = verify_trivial(&a, &w, &cand, &samples)?;
                ok = inf.passed() && triv.passed();
                text.push_str(&format!(
                    "generated deformation: condition (i) {}, condition (ii) {}\ntrivial at t in {{1, -1, 1/2, 1/3}}: {}\n",
                    verdict(inf.condition_i.passed()),
                    verdict(inf.condition_ii.passed()),
                    verdict(triv.passed())
                ));
                report.verdict = verdict(ok);
                report.omega = Some(OmegaFile::from_omega(&w));
                report.infinitesimal = Some(inf);
                report.triviality = Some(
                    triv.samples
                        .into_iter()
                        .map(|(t, r)| SampleReport {
                            t: format_rational(&t),
                            homomorphism: r,
                        })
                        .collect(),
                );
            }
            Ok(Outcome {
                text: render(json, &report, text)?,
                success: ok,
            })
        }
        Command::H2 { algebra, rep } => {
            let a = load_algebra(algebra)?;
            let rho = load_rep(rep, &a)?;
            let h2 = h2_classification_report(&a, &rho)?;
            let mut text = format!("dim H^2 = {}\nrealizable (symmetric omega0) = {}\n", h2.dim, h2.realizable_dim);
            let reps: Vec<RepresentativeReport> = h2
                .representatives
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let status = r.axioms.as_ref().map(|x| verdict(x.passed()));
                    text.push_str(&format!(
                        "representative {i}: extension {}\n",
                        status.map_or_else(
                            || format!("not constructible ({})", r.construction_error.clone().unwrap_or_default()),
                            |s| s.to_string()
                        )
                    ));
                    RepresentativeReport {
                        omega: OmegaFile::from_omega(&r.omega),
                        extension_axioms: status,
                        construction_error: r.construction_error.clone(),
                    }
                })
                .collect();
            let ok = h2.representatives.iter().all(|r| r.axioms.as_ref().is_none_or(IdentityReport::passed));
            let report = H2CliReport {
                dim: h2.dim,
                realizable_dim: h2.realizable_dim,
                representatives: reps,
            };
            Ok(Outcome {
                text: render(json, &report, text)?,
                success: ok,
            })
        }
        Command::Export { algebra } => Ok(Outcome {
            text: to_canonical_json(&AlgebraFile::from_algebra(&load_algebra(algebra)?))?,
            success: true,
        }),
    }
}

/// Parses arguments, runs, writes output, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = run(&cli);
    let code = exit_code(&result);
    match result {
        Ok(o) => {
            let written = match &cli.out {
                Some(p) => std::fs::write(p, &o.text),
                None => {
                    print!("{}", o.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    code
}
