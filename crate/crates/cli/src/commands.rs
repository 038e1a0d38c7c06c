//! Command implementations; each returns the text to print and a pass flag.

use std::fmt::Write;
use std::fs;
use std::path::{Path, PathBuf};

use bihom_core::coherence::sample::{random_double_seq, random_duoidal_instance, random_lax_instance, Bounds, EndoStyle};
use bihom_core::coherence::{check_duoidal_figure, check_exponent_identities, check_lax_figure, FigureLevel, FigureReport};
use bihom_core::exactlin::Field;
use bihom_core::structures::{
    check_bimonoid, check_bisemigroup, check_comodule, check_comonoid, check_cosemigroup, check_hopf_module,
    check_module, check_monoid, check_semigroup, coassoc_sweep, delta_n, CheckReport, StructureBundle, Variant,
};
use bihom_core::twist::{antipode_solve, untwist, yau_twist, AntipodeMethod, AntipodeVerdict, Direction, PlainStructure};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{CliError, CliResult};
use crate::format::{load, Instance, InstanceFile, ModuleData};
use crate::render;

#[derive(Debug, Parser)]
#[command(name = "bihom", version, about = "Exact checks for BiHom monoids, comonoids and bimonoids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of a named structure or module.
    Check(CheckArgs),
    /// Run randomized coherence checks.
    Coherence(CoherenceArgs),
    /// Apply or undo the Yau twist and write the resulting file.
    Twist(TwistArgs),
    /// Solve for the antipode of a bimonoid.
    Antipode(AntipodeArgs),
    /// Print the iterated comultiplication and sweep generalized coassociativity.
    Delta(DeltaArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Semigroup,
    Cosemigroup,
    Monoid,
    Comonoid,
    Bisemigroup,
    Bimonoid,
    Module,
    Comodule,
    HopfModule,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub structure: Kind,
    #[arg(long)]
    pub name: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Symbolic,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Endos {
    Diagonal,
    Polynomial,
}

#[derive(Debug, Args)]
pub struct CoherenceArgs {
    #[arg(long, value_enum, default_value = "symbolic")]
    pub level: Level,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Maximum number of rows (or columns of the duoidal grid); 4 symbolic, 2 matrix.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Maximum row length; 3 symbolic, 2 matrix.
    #[arg(long)]
    pub max_m: Option<usize>,
    /// Maximum index entry; 4 symbolic, 2 matrix.
    #[arg(long)]
    pub max_k: Option<usize>,
    /// Maximum carrier dimension at matrix level.
    #[arg(long, default_value_t = 2)]
    pub max_dim: usize,
    #[arg(long, default_value_t = 7)]
    pub modulus: u64,
    #[arg(long, value_enum, default_value = "diagonal")]
    pub endos: Endos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TwistDirection {
    Twist,
    Untwist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TwistMode {
    Comonoid,
    Monoid,
    Bimonoid,
}

#[derive(Debug, Args)]
pub struct TwistArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub name: String,
    #[arg(long, value_enum, default_value = "twist")]
    pub direction: TwistDirection,
    #[arg(long, value_enum, default_value = "bimonoid")]
    pub mode: TwistMode,
    /// Output path; stdout when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Untwist,
}

#[derive(Debug, Args)]
pub struct AntipodeArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub name: String,
    #[arg(long, value_enum, default_value = "direct")]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub name: String,
    #[arg(short, default_value_t = 3)]
    pub n: usize,
    #[arg(long)]
    pub check_all_sequences: bool,
    /// Bound on K + Z for the sweep.
    #[arg(long = "max-K", alias = "max-k", default_value_t = 5)]
    pub max_total: usize,
}

/// Text to print and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub text: String,
}

pub fn run(cli: &Cli, threads: usize) -> CliResult<Outcome> {
    match &cli.command {
        Command::Check(a) => check(a),
        Command::Coherence(a) => coherence(a, threads),
        Command::Twist(a) => twist(a),
        Command::Antipode(a) => antipode(a),
        Command::Delta(a) => delta(a),
    }
}

fn read(path: &Path) -> CliResult<(InstanceFile, Instance)> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    load(&text)
}

fn structure<'a>(inst: &'a Instance, name: &str) -> CliResult<&'a StructureBundle> {
    inst.structures.get(name).ok_or_else(|| CliError::UnknownName { kind: "structure", name: name.to_string() })
}

fn check(a: &CheckArgs) -> CliResult<Outcome> {
    let (_, inst) = read(&a.file)?;
    let report: CheckReport = match a.structure {
        Kind::Module | Kind::Comodule | Kind::HopfModule => {
            let m = inst
                .modules
                .get(&a.name)
                .ok_or_else(|| CliError::UnknownName { kind: "module", name: a.name.clone() })?;
            match (a.structure, m) {
                (Kind::Module, ModuleData::Module(m)) => check_module(m)?,
                (Kind::Module, ModuleData::Hopf(h)) => check_module(&h.module())?,
                (Kind::Comodule, ModuleData::Comodule(c)) => check_comodule(c)?,
                (Kind::Comodule, ModuleData::Hopf(h)) => check_comodule(&h.comodule())?,
                (Kind::HopfModule, ModuleData::Hopf(h)) => check_hopf_module(h)?,
                _ => return Err(CliError::Usage(format!("module `{}` does not carry the requested data", a.name))),
            }
        }
        kind => {
            let b = structure(&inst, &a.name)?;
            match kind {
                Kind::Semigroup => check_semigroup(b)?,
                Kind::Cosemigroup => check_cosemigroup(b)?,
                Kind::Monoid => check_monoid(b)?,
                Kind::Comonoid => check_comonoid(b)?,
                Kind::Bisemigroup => check_bisemigroup(b)?,
                _ => check_bimonoid(b)?,
            }
        }
    };
    let title = format!("{} `{}`", report.kind.name(), a.name);
    Ok(Outcome { passed: report.passed(), text: render::report(&title, &report) })
}

/// Generator for trial `t`: the master seed with stream `t`.
pub fn trial_rng(seed: u64, t: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(t as u64);
    rng
}

#[derive(Default)]
struct Tally {
    checked: [usize; 3],
    vacuous: usize,
    failures: Vec<String>,
}

fn figure_tally(t: usize, rep: &FigureReport, slot: usize, tally: &mut Tally) {
    tally.checked[slot] += rep.regions.len();
    for r in rep.regions.iter().filter(|r| !r.passed) {
        tally.failures.push(format!("trial {t}: {:?} region `{}` differs at {:?}", rep.level, r.name, r.counterexample));
    }
}

fn coherence(a: &CoherenceArgs, threads: usize) -> CliResult<Outcome> {
    if a.trials == 0 {
        return Err(CliError::Usage("--trials must be positive".into()));
    }
    if a.level == Level::Matrix && a.max_dim == 0 {
        return Err(CliError::Usage("--max-dim must be positive".into()));
    }
    let field = Field::prime(a.modulus).map_err(|e| CliError::Usage(e.to_string()))?;
    let (n, m, k) = match a.level {
        Level::Symbolic => (4, 3, 4),
        Level::Matrix => (2, 2, 2),
    };
    let bounds = Bounds {
        max_n: a.max_n.unwrap_or(n),
        max_m: a.max_m.unwrap_or(m),
        max_k: a.max_k.unwrap_or(k),
        max_dim: a.max_dim,
    };
    let style = match a.endos {
        Endos::Diagonal => EndoStyle::Diagonal,
        Endos::Polynomial => EndoStyle::Polynomial,
    };
    let level = a.level;
    let trial = move |t: usize| -> CliResult<Tally> {
        let mut rng = trial_rng(a.seed, t);
        let mut tally = Tally::default();
        match level {
            Level::Symbolic => {
                let k = random_double_seq(&mut rng, bounds.max_n, bounds.max_m, bounds.max_k);
                for (i, row) in k.rows().iter().enumerate() {
                    for j in 0..row.len() {
                        let c = check_exponent_identities(&k, i + 1, j + 1)?;
                        tally.checked[0] += 1;
                        tally.vacuous += c.vacuous as usize;
                        for r in (0..4).filter(|&r| !c.holds(r)) {
                            tally.failures.push(format!("trial {t}: identity {} fails at {:?} slot ({},{})", r + 1, k, i + 1, j + 1));
                        }
                    }
                }
            }
            Level::Matrix => {
                let lax = random_lax_instance(&mut rng, field, bounds, style);
                figure_tally(t, &check_lax_figure(FigureLevel::Lax, &lax)?, 0, &mut tally);
                figure_tally(t, &check_lax_figure(FigureLevel::Oplax, &lax)?, 1, &mut tally);
                let duo = random_duoidal_instance(&mut rng, field, bounds, style);
                figure_tally(t, &check_duoidal_figure(&duo)?, 2, &mut tally);
            }
        }
        Ok(tally)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker threads: {e}")))?;
    let tallies: Vec<Tally> = pool.install(|| (0..a.trials).into_par_iter().map(trial).collect::<CliResult<_>>())?;
    let mut total = Tally::default();
    for t in tallies {
        for s in 0..3 {
            total.checked[s] += t.checked[s];
        }
        total.vacuous += t.vacuous;
        total.failures.extend(t.failures);
    }
    let mut text = String::new();
    match level {
        Level::Symbolic => {
            writeln!(text, "coherence symbolic: {} trials, seed {}", a.trials, a.seed).unwrap();
            writeln!(text, "slots checked: {} ({} vacuous)", total.checked[0], total.vacuous).unwrap();
        }
        Level::Matrix => {
            writeln!(text, "coherence matrix over F_{}: {} trials, seed {}", a.modulus, a.trials, a.seed).unwrap();
            writeln!(text, "lax regions checked: {}", total.checked[0]).unwrap();
            writeln!(text, "oplax regions checked: {}", total.checked[1]).unwrap();
            writeln!(text, "duoidal regions checked: {}", total.checked[2]).unwrap();
        }
    }
    writeln!(text, "failures: {}", total.failures.len()).unwrap();
    for f in total.failures.iter().take(20) {
        writeln!(text, "  {f}").unwrap();
    }
    let passed = total.failures.is_empty();
    writeln!(text, "{}", render::verdict(passed)).unwrap();
    Ok(Outcome { passed, text })
}

fn twist(a: &TwistArgs) -> CliResult<Outcome> {
    let (mut file, inst) = read(&a.file)?;
    let b = structure(&inst, &a.name)?;
    let out = match a.direction {
        TwistDirection::Twist => {
            let mode = match a.mode {
                TwistMode::Comonoid => Direction::Comonoid,
                TwistMode::Monoid => Direction::Monoid,
                TwistMode::Bimonoid => Direction::Bimonoid,
            };
            yau_twist(&PlainStructure::new(b.clone())?, mode)?
        }
        TwistDirection::Untwist => untwist(b)?.into_bundle(),
    };
    file.replace_structure(&a.name, &out)?;
    let json = file.to_json();
    let text = match &a.output {
        Some(path) => {
            fs::write(path, &json).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            format!("wrote {}\n", path.display())
        }
        None => json,
    };
    Ok(Outcome { passed: true, text })
}

fn antipode(a: &AntipodeArgs) -> CliResult<Outcome> {
    let (_, inst) = read(&a.file)?;
    let b = structure(&inst, &a.name)?;
    let method = match a.method {
        Method::Direct => AntipodeMethod::Direct,
        Method::Untwist => AntipodeMethod::ViaUntwist,
    };
    let r = antipode_solve(b, method)?;
    let mut text = String::new();
    let label = match r.verdict {
        AntipodeVerdict::Unique => "unique antipode",
        AntipodeVerdict::NoAntipode => "no antipode",
        AntipodeVerdict::NonUnique => "antipode not unique; one witness",
    };
    writeln!(text, "antipode of `{}` ({:?}): {label}", a.name, method).unwrap();
    if let Some(chi) = &r.chi {
        text.push_str(&render::matrix(chi));
        writeln!(text, "both sides verified: {}", if r.both_sided { "yes" } else { "no" }).unwrap();
    }
    Ok(Outcome { passed: r.verdict == AntipodeVerdict::Unique && r.both_sided, text })
}

fn delta(a: &DeltaArgs) -> CliResult<Outcome> {
    let (_, inst) = read(&a.file)?;
    let b = structure(&inst, &a.name)?;
    let d = delta_n(b, a.n, Variant::Iterative)?;
    let agree = d == delta_n(b, a.n, Variant::Alternative)?;
    let mut text = String::new();
    writeln!(text, "delta_{} of `{}` ({} x {}):", a.n, a.name, d.dst_dim(), d.src_dim()).unwrap();
    text.push_str(&render::matrix(&d));
    writeln!(text, "iterative and alternative recursions agree: {}", if agree { "yes" } else { "no" }).unwrap();
    let mut passed = agree;
    if a.check_all_sequences {
        let sweep = coassoc_sweep(b, a.max_total)?;
        let failed: Vec<_> = sweep.iter().filter(|(_, r)| !r.passed()).collect();
        writeln!(text, "generalized coassociativity: {} sequences with K+Z <= {}, {} failing", sweep.len(), a.max_total, failed.len())
            .unwrap();
        for (k, _) in failed.iter().take(20) {
            writeln!(text, "  fails for k = {:?}", k.items()).unwrap();
        }
        passed &= failed.is_empty();
    }
    writeln!(text, "{}", render::verdict(passed)).unwrap();
    Ok(Outcome { passed, text })
}
