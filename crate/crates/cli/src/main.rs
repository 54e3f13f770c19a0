//! `codebench`: command-line access to codes, trunk morphisms, polyhedral
//! realizations and the `C_n` family.
//!
//! Exit status is 0 on success, 1 when a verification fails, and 2 on usage,
//! input or format errors.

mod render;

use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use codebench::cn;
use codebench::covering::{covered_code, covering_children};
use codebench::geometry::realization::{parse_system_json, DEFAULT_CAP};
use codebench::geometry::{
    affine_slice_check, colorful_witness_check, feasible, parse_points_json,
    random_colorful_harness, random_hyperplane_harness, theorem_sunflower_check, AffineFlat,
    Hyperplane, Realization, Sunflower,
};
use codebench::morphism::MorphismSpec;
use codebench::{isomorphism, Code, Codeword};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "codebench",
    version,
    about = "Combinatorial codes, trunk morphisms and open-polyhedron realizations"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Queries on a single code (text or JSON file, `-` for stdin).
    #[command(subcommand)]
    Code(CodeCmd),
    /// Covered codes and covering candidates.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Realizations by open polyhedra and sunflower checks.
    #[command(subcommand)]
    Geom(GeomCmd),
    /// The family C_n.
    #[command(subcommand)]
    Cn(CnCmd),
}

#[derive(Subcommand, Debug)]
enum CodeCmd {
    /// List every trunk.
    Trunks { input: String },
    /// Remove trivial and redundant indices.
    Reduce { input: String },
    /// Decide isomorphism of two codes.
    Iso { left: String, right: String },
    /// Decide max-intersection completeness.
    Mic { input: String },
    /// Count and list missing intersections of maximal words.
    Missing { input: String },
    /// The simplicial complex Δ(C), or the link of a face in it.
    Delta {
        input: String,
        /// Face whose link to report, e.g. `3` or `1,2`.
        #[arg(long)]
        link: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum PosetCmd {
    /// The i-th covered code of a reduced code (all of them without --i).
    Covered {
        input: String,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Covered codes and simple-trunk candidates below a reduced code.
    Children { input: String },
    /// Image of a code under a trunk-determined morphism.
    Image { input: String, morphism: String },
}

#[derive(Subcommand, Debug)]
enum GeomCmd {
    /// Code and nerve of a realization.
    Code {
        input: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Check that the sets of a realization form a sunflower.
    Sunflower { input: String },
    /// Check one hyperplane against the sunflower of a realization's sets.
    Hyperplane { input: String, hyperplane: String },
    /// Check an affine flat against the sunflower of a realization's sets.
    Slice { input: String, flat: String },
    /// Colorful convex-hull check on given points, or on random ones.
    Colorful {
        input: String,
        points: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random hyperplane search for counterexamples.
    Harness {
        input: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Feasibility of an ad hoc linear system.
    Feasible { input: String },
}

#[derive(Subcommand, Debug)]
enum CnCmd {
    /// Print C_n.
    Gen { n: usize },
    /// Run every check on C_n (structure only for n > 4).
    Verify { n: usize },
}

/// Rendered output plus exit status.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }

    fn check(text: String, ok: bool) -> Self {
        Outcome { text, ok }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        std::fs::read_to_string(Path::new(path)).with_context(|| format!("reading {path}"))
    }
}

fn load_code(path: &str) -> Result<Code> {
    Code::parse_any(&read_input(path)?).with_context(|| format!("parsing code from {path}"))
}

fn load_realization(path: &str) -> Result<Realization> {
    Realization::parse_json(&read_input(path)?)
        .with_context(|| format!("parsing realization from {path}"))
}

fn load_sunflower(path: &str) -> Result<Sunflower> {
    let real = load_realization(path)?;
    Sunflower::new(real.sets().to_vec()).with_context(|| format!("sets of {path}"))
}

fn parse_face(text: &str) -> Result<Codeword> {
    text.parse::<Codeword>()
        .map_err(|e| anyhow!("bad face {text:?}: {e}"))
}

fn run(cli: Cli) -> Result<Outcome> {
    let f = cli.format;
    match cli.command {
        Command::Code(cmd) => run_code(cmd, f),
        Command::Poset(cmd) => run_poset(cmd, f),
        Command::Geom(cmd) => run_geom(cmd, f),
        Command::Cn(cmd) => run_cn(cmd, f),
    }
}

fn run_code(cmd: CodeCmd, f: Format) -> Result<Outcome> {
    Ok(match cmd {
        CodeCmd::Trunks { input } => Outcome::ok(render::trunks(&load_code(&input)?, f)),
        CodeCmd::Reduce { input } => {
            Outcome::ok(render::reduction(&load_code(&input)?.reduce(), f))
        }
        CodeCmd::Iso { left, right } => {
            let (a, b) = (load_code(&left)?, load_code(&right)?);
            Outcome::ok(render::iso(isomorphism(&a, &b).as_ref(), f))
        }
        CodeCmd::Mic { input } => {
            let report = load_code(&input)?.max_intersections()?;
            Outcome::ok(render::mic(&report, f))
        }
        CodeCmd::Missing { input } => {
            let report = load_code(&input)?.max_intersections()?;
            Outcome::ok(render::missing(&report, f))
        }
        CodeCmd::Delta { input, link } => {
            let delta = load_code(&input)?.delta();
            let (face, complex) = match link {
                Some(t) => {
                    let face = parse_face(&t)?;
                    (Some(face), delta.link(face)?)
                }
                None => (None, delta),
            };
            Outcome::ok(render::complex(&complex, face, f))
        }
    })
}

fn run_poset(cmd: PosetCmd, f: Format) -> Result<Outcome> {
    Ok(match cmd {
        PosetCmd::Covered { input, i } => {
            let code = load_code(&input)?;
            match i {
                Some(i) => Outcome::ok(render::code(&covered_code(&code, i)?, f)),
                None => {
                    let all = (1..=code.n())
                        .map(|i| Ok((i, covered_code(&code, i)?)))
                        .collect::<Result<Vec<_>>>()?;
                    Outcome::ok(render::covered_all(&all, f))
                }
            }
        }
        PosetCmd::Children { input } => {
            let code = load_code(&input)?;
            Outcome::ok(render::children(&covering_children(&code)?, f))
        }
        PosetCmd::Image { input, morphism } => {
            let code = load_code(&input)?;
            let spec = MorphismSpec::parse_json(&read_input(&morphism)?)
                .with_context(|| format!("parsing morphism from {morphism}"))?;
            let m = spec.build(code)?;
            Outcome::ok(render::code(&m.image(), f))
        }
    })
}

fn run_geom(cmd: GeomCmd, f: Format) -> Result<Outcome> {
    Ok(match cmd {
        GeomCmd::Code { input, cap } => {
            let real = load_realization(&input)?;
            let code = real.code_with_cap(cap)?;
            Outcome::ok(render::realization_code(&code, f))
        }
        GeomCmd::Sunflower { input } => {
            let real = load_realization(&input)?;
            let check = render::sunflower(real.sets())?;
            let ok = check.is_sunflower;
            Outcome::check(render::sunflower_text(&check, f), ok)
        }
        GeomCmd::Hyperplane { input, hyperplane } => {
            let sf = load_sunflower(&input)?;
            let h = Hyperplane::parse_json(&read_input(&hyperplane)?)
                .with_context(|| format!("parsing hyperplane from {hyperplane}"))?;
            let check = theorem_sunflower_check(&sf, &h)?;
            let ok = !check.verdict.is_counterexample();
            Outcome::check(render::theorem(&check, f), ok)
        }
        GeomCmd::Slice { input, flat } => {
            let sf = load_sunflower(&input)?;
            let fl = AffineFlat::parse_json(&read_input(&flat)?)
                .with_context(|| format!("parsing flat from {flat}"))?;
            let verdict = affine_slice_check(&sf, &fl)?;
            let ok = !verdict.is_counterexample();
            Outcome::check(render::slice(&verdict, f), ok)
        }
        GeomCmd::Colorful {
            input,
            points,
            trials,
            seed,
        } => {
            let sf = load_sunflower(&input)?;
            match points {
                Some(p) => {
                    let pts = parse_points_json(&read_input(&p)?)
                        .with_context(|| format!("parsing points from {p}"))?;
                    let out = colorful_witness_check(&sf, &pts)?;
                    let ok = out.holds;
                    Outcome::check(render::colorful(&out, f), ok)
                }
                None => {
                    if sf.len() < sf.dim() + 1 {
                        bail!("need at least {} petals, got {}", sf.dim() + 1, sf.len());
                    }
                    let report = random_colorful_harness(&sf, trials, seed);
                    let ok = report.failures == 0;
                    Outcome::check(render::colorful_harness(&report, f), ok)
                }
            }
        }
        GeomCmd::Harness {
            input,
            trials,
            seed,
        } => {
            let sf = load_sunflower(&input)?;
            let report = random_hyperplane_harness(&sf, trials, seed);
            let ok = report.counterexamples == 0;
            Outcome::check(render::harness(&report, sf.len(), sf.dim(), f), ok)
        }
        GeomCmd::Feasible { input } => {
            let (dim, rows) = parse_system_json(&read_input(&input)?)
                .with_context(|| format!("parsing system from {input}"))?;
            Outcome::ok(render::feasibility(&feasible(dim, &rows)?, f))
        }
    })
}

fn run_cn(cmd: CnCmd, f: Format) -> Result<Outcome> {
    Ok(match cmd {
        CnCmd::Gen { n } => Outcome::ok(render::code(&cn::generate_cn(n)?, f)),
        CnCmd::Verify { n } => {
            let report = if n <= cn::MAX_VERIFY_N {
                cn::verify_covered_family(n)?
            } else {
                cn::combinatorics_only_report(n)?
            };
            let ok = report.passed;
            let text = match f {
                Format::Text => report.to_table(),
                Format::Json => report.to_json() + "\n",
            };
            Outcome::check(text, ok)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
