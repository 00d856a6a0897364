//! The `subcone` command line.
//!
//! Every option can also be set through a `SUBCONE_*` environment variable;
//! flags take precedence over the environment, which takes precedence over
//! the defaults. Exit codes: 0 success, 1 negative verdict, 2 bad input,
//! 3 guard exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures::PolytopeList;
use crate::grower::{self, Family, VerifyOptions};
use crate::io::{self, InputDoc, PolytopeDoc, GPOLYMATROID_KIND};
use crate::polymat::GPolymatroid;
use crate::raycone::{self, EnumerateOptions};
use crate::seeds;
use crate::submod::{SetFunction, TightTriple, DEFAULT_MAX_N, MAX_GROUND_SET};

#[derive(Debug, Parser)]
#[command(name = "subcone", version, about = "Rays of the submodular cone and fertile compositions")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, env = "SUBCONE_JOBS", default_value_t = 0)]
    pub jobs: usize,
    /// Largest ground set accepted for permutation-based computations.
    #[arg(long, global = true, env = "SUBCONE_MAX_N", default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
    /// Exhaustive family verification at every size.
    #[arg(long, global = true, env = "SUBCONE_FULL")]
    pub full: bool,
    /// Ordered pairs sampled for fertility checks above n = 5.
    #[arg(long, global = true, env = "SUBCONE_SAMPLE", default_value_t = grower::DEFAULT_SAMPLE)]
    pub sample: usize,
    /// Seed for sampled verification.
    #[arg(long, global = true, env = "SUBCONE_SEED", default_value_t = grower::DEFAULT_SEED)]
    pub seed: u64,
    /// Allow the multi-hour n = 5 ray enumeration.
    #[arg(long, global = true, env = "SUBCONE_LONG_RUN")]
    pub long_run: bool,
}

impl Config {
    fn validate(&self) -> Result<()> {
        if self.max_n > MAX_GROUND_SET {
            return Err(Error::Input(format!("--max-n must be at most {MAX_GROUND_SET}")));
        }
        Ok(())
    }

    fn verify_options(&self) -> VerifyOptions {
        VerifyOptions {
            full: self.full,
            sample: self.sample,
            seed: self.seed,
            ..VerifyOptions::default()
        }
    }

    fn guard(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::GroundSetTooLarge { n, limit: self.max_n });
        }
        Ok(())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Submodularity, tight set and indecomposability of one set function.
    Check {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Seed report for an ordered pair (P, Q).
    Fertile {
        #[arg(short, long, num_args = 2, required = true, value_names = ["P", "Q"])]
        input: Vec<PathBuf>,
    },
    /// Composes a fertile pair into a ray on one more element.
    Compose {
        #[arg(short, long, num_args = 2, required = true, value_names = ["P", "Q"])]
        input: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Vertex list of a deformed permutahedron or generalized polymatroid.
    Vertices {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Extreme rays of the submodular cone on n elements.
    Enumerate {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Checkpoint file, written every ten facets and resumed from.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Grows a pairwise fertile family, writing one family file per level.
    Grow {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        /// Directory for `family_n<k>.json` files.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Checks validity, indecomposability, inequivalence and fertility.
    VerifyFamily {
        #[arg(short, long)]
        input: PathBuf,
        /// Writes the family back with its verdicts.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compares p^(2^(n−k)) with 2^(2^(n−2)) and n^(2^n).
    Bounds {
        #[arg(short, long)]
        k: usize,
        #[arg(short, long)]
        p: u64,
        #[arg(short, long)]
        n: usize,
    },
}

/// Parses `args`, runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32> {
    cli.config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.config.jobs)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    pool.install(|| dispatch(&cli.command, &cli.config, out, err))
}

fn emit<T: Serialize>(value: &T, path: Option<&Path>, out: &mut (dyn Write + Send)) -> Result<()> {
    match path {
        Some(p) => io::write_json(p, value),
        None => Ok(out.write_all(io::to_json(value)?.as_bytes())?),
    }
}

fn load(path: &Path, config: &Config) -> Result<SetFunction> {
    let f = io::read_set_function(path)?;
    config.guard(f.n())?;
    Ok(f)
}

#[derive(Serialize)]
struct CheckReport {
    n: usize,
    submodular: bool,
    violation: Option<TightTriple>,
    defo_dim: Option<usize>,
    tight_count: Option<usize>,
    indecomposable: Option<bool>,
    point: bool,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FamilyInput {
    Family(Family),
    List(PolytopeList),
}

fn load_family(path: &Path, config: &Config) -> Result<Family> {
    let fam = match io::read_json::<FamilyInput>(path)? {
        FamilyInput::Family(f) => f,
        FamilyInput::List(l) => {
            let members = l
                .polytopes
                .iter()
                .map(|p| SetFunction::from_vertices(l.n, &p.vertices))
                .collect::<Result<Vec<_>>>()?;
            Family::axioms(members)?
        }
    };
    config.guard(fam.n)?;
    Ok(fam)
}

fn dispatch(command: &Command, config: &Config, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32> {
    match command {
        Command::Check { input } => {
            let f = load(input, config)?;
            let violation = f.first_violation();
            let mut report = CheckReport {
                n: f.n(),
                submodular: violation.is_none(),
                violation,
                defo_dim: None,
                tight_count: None,
                indecomposable: None,
                point: false,
            };
            if report.submodular {
                let tight = f.tight_set();
                report.tight_count = Some(tight.len());
                report.defo_dim = Some(f.defo_dim());
                match f.is_indecomposable() {
                    Ok(c) => report.indecomposable = Some(c.indecomposable),
                    Err(Error::PointPolytope) => {
                        report.point = true;
                        report.indecomposable = Some(false);
                    }
                    Err(e) => return Err(e),
                }
            }
            emit(&report, None, out)?;
            Ok(if report.submodular { 0 } else { 1 })
        }
        Command::Fertile { input } => {
            let (p, q) = (load(&input[0], config)?, load(&input[1], config)?);
            let fertile = seeds::is_fertile(&p, &q)?;
            let report = seeds::seed_report(&p, &q)?;
            debug_assert_eq!(fertile, report.fertile);
            emit(&report, None, out)?;
            Ok(if fertile { 0 } else { 1 })
        }
        Command::Compose { input, output } => {
            let (p, q) = (load(&input[0], config)?, load(&input[1], config)?);
            let composed = seeds::compose(&p, &q)?;
            match output {
                Some(path) => {
                    io::write_json(path, &composed.lifted)?;
                    emit(&composed, None, out)?;
                }
                None => emit(&composed, None, out)?,
            }
            Ok(0)
        }
        Command::Vertices { input, output } => {
            let text = std::fs::read_to_string(input)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", input.display())))?;
            let doc: InputDoc =
                serde_json::from_str(&text).map_err(|e| Error::Input(format!("unrecognized document: {e}")))?;
            let polytope = match doc {
                InputDoc::SetFunction(d) if d.kind.as_deref() == Some(GPOLYMATROID_KIND) => {
                    let g = GPolymatroid::from_lifted(d.into_set_function()?)?;
                    config.guard(g.lifted().n())?;
                    PolytopeDoc {
                        n: g.n(),
                        vertices: g.vertices()?,
                    }
                }
                doc => {
                    let f = doc.into_set_function()?;
                    config.guard(f.n())?;
                    PolytopeDoc {
                        n: f.n(),
                        vertices: f.vertex_table_with_limit(config.max_n)?.distinct().to_vec(),
                    }
                }
            };
            emit(&polytope, output.as_deref(), out)?;
            Ok(0)
        }
        Command::Enumerate { n, output, checkpoint } => {
            let opts = EnumerateOptions {
                long_run: config.long_run,
                checkpoint: checkpoint.clone(),
            };
            let rays = raycone::enumerate_rays(raycone::sc_facets(*n)?, &opts)?;
            match output {
                Some(p) => rays.write(p)?,
                None => out.write_all(rays.to_text().as_bytes())?,
            }
            writeln!(err, "n = {n}: {} rays", rays.count())?;
            Ok(0)
        }
        Command::Grow { input, steps, output } => {
            let opts = config.verify_options();
            let mut family = load_family(input, config)?;
            std::fs::create_dir_all(output)?;
            for _ in 0..*steps {
                config.guard(family.n + 1)?;
                let grown = grower::grow_once(&mut family, &opts)?;
                let path = output.join(format!("family_n{}.json", grown.n));
                io::write_json(&path, &grown)?;
                if let Some(r) = &grown.verdicts {
                    writeln!(err, "{r}")?;
                }
                writeln!(err, "wrote {} members to {}", grown.len(), path.display())?;
                family = grown;
            }
            Ok(0)
        }
        Command::VerifyFamily { input, output } => {
            let mut family = load_family(input, config)?;
            let report = grower::verify_family_cached(&mut family, &config.verify_options())?;
            writeln!(err, "{report}")?;
            emit(&report, None, out)?;
            if let Some(p) = output {
                io::write_json(p, &family)?;
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Bounds { k, p, n } => {
            let report = grower::bound_report(*k, *p, *n)?;
            writeln!(err, "{report}")?;
            emit(&report, None, out)?;
            Ok(0)
        }
    }
}
