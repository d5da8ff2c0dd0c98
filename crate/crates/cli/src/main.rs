use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use helly_plane::algorithms::{choose_signs, ginzburg_reduce, verify_signs};
use helly_plane::harness::{run_gallery, run_suite, Mode, SuiteConfig, SuiteKind};
use helly_plane::io::{parse_ball, parse_polygon, parse_vectors};
use helly_plane::svg::{render_body, render_instance};
use helly_plane::symmetry::{check_symmetry, verify_witness, ConvexBody};
use helly_plane::{Float, Rational, Scalar, Vec2};

/// Verifiers for sums of unit vectors in normed planes.
#[derive(Parser)]
#[command(name = "helly-plane", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded property suite and write a JSON report.
    Verify {
        /// thm1, thm2, thm3, lemma-conv, lemma-main, claim1, corollary,
        /// signs, generic, symmetry, gallery or ginzburg.
        suite: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "exact")]
        mode: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// maxnorm, euclidean, random or a ball JSON file.
        #[arg(long, default_value = "random")]
        ball: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The fixed counterexample gallery.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
    /// Choose signs making every odd signed subsum have norm at least 1.
    Signs {
        vectors: PathBuf,
        #[arg(long)]
        ball: PathBuf,
        #[arg(long, default_value = "exact")]
        mode: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Trace the rotation reduction; one JSON line per step.
    Ginzburg {
        vectors: PathBuf,
        /// Halfplane direction as `x,y`.
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        u: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Central symmetry of a convex polygon.
    Symmetry {
        #[command(subcommand)]
        action: SymmetryAction,
    },
}

#[derive(Subcommand)]
enum GalleryAction {
    Run {
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Subcommand)]
enum SymmetryAction {
    Check {
        polygon: PathBuf,
        #[arg(long, default_value = "exact")]
        mode: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

/// `Ok(true)` when nothing substantive failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify {
            suite,
            trials,
            seed,
            mode,
            tol,
            ball,
            out,
        } => {
            let config = SuiteConfig {
                suite: suite.parse()?,
                trials,
                seed,
                mode: mode.parse()?,
                tol,
                ball: ball.parse()?,
            };
            verify(&config, out.as_deref())
        }
        Command::Gallery {
            action: GalleryAction::Run { tol },
        } => {
            let outcomes = run_gallery(tol);
            for o in &outcomes {
                println!("{}", serde_json::to_string(o)?);
            }
            Ok(outcomes.iter().all(|o| o.pass))
        }
        Command::Signs {
            vectors,
            ball,
            mode,
            svg,
        } => match mode.parse()? {
            Mode::Exact => signs::<Rational>(&vectors, &ball, svg.as_deref()),
            Mode::Float => signs::<Float>(&vectors, &ball, svg.as_deref()),
        },
        Command::Ginzburg {
            vectors,
            u,
            tol,
            svg,
        } => ginzburg(&vectors, &u, tol, svg.as_deref()),
        Command::Symmetry {
            action: SymmetryAction::Check { polygon, mode, svg },
        } => match mode.parse()? {
            Mode::Exact => symmetry::<Rational>(&polygon, svg.as_deref()),
            Mode::Float => symmetry::<Float>(&polygon, svg.as_deref()),
        },
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_svg(path: Option<&Path>, svg: impl FnOnce() -> String) -> Result<()> {
    if let Some(p) = path {
        fs::write(p, svg()).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn verify(config: &SuiteConfig, out: Option<&Path>) -> Result<bool> {
    if config.trials == 0 && config.suite != SuiteKind::Gallery {
        bail!("--trials must be positive");
    }
    let report = run_suite(config)?;
    if let Some(p) = out {
        fs::write(p, report.to_json()).with_context(|| format!("writing {}", p.display()))?;
    }
    let c = report.counts;
    println!(
        "{}: {} records, {} pass, {} fail, {} vacuous, {} error",
        config.suite,
        report.records.len(),
        c.pass,
        c.fail,
        c.vacuous,
        c.error
    );
    eprintln!("wall time {:.3}s", report.wall_time.as_secs_f64());
    Ok(report.passed())
}

fn signs<S: Scalar>(vectors: &Path, ball: &Path, svg: Option<&Path>) -> Result<bool> {
    let ball = parse_ball::<S>(&read(ball)?)?;
    let v = parse_vectors::<S>(&read(vectors)?)?;
    let s = choose_signs(&ball, &v)?;
    let check = verify_signs(&ball, &v, &s);
    println!("{}", serde_json::json!({ "signs": s, "check": check }));
    let signed = s.apply(&v);
    write_svg(svg, || {
        render_instance(&ball, signed.as_slice(), &[signed.total()])
    })?;
    Ok(check.passed())
}

fn parse_direction(text: &str) -> Result<Vec2<Float>> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        bail!("expected `x,y`, got `{text}`");
    }
    Ok(Vec2::new(
        Float::parse_str(parts[0])?,
        Float::parse_str(parts[1])?,
    ))
}

fn ginzburg(vectors: &Path, u: &str, tol: f64, svg: Option<&Path>) -> Result<bool> {
    Float::set_tolerance(tol);
    let v = parse_vectors::<Float>(&read(vectors)?)?;
    let u = parse_direction(u)?;
    let trace = ginzburg_reduce(&v, &u)?;
    for step in &trace.steps {
        println!("{}", serde_json::to_string(step)?);
    }
    let check = trace.check(tol);
    println!(
        "{}",
        serde_json::json!({
            "final_vectors": trace.final_vectors,
            "final_sum": trace.final_sum,
            "final_norm": trace.final_norm,
            "check": check.as_ref().err().map_or("ok", |s| s.as_str()),
        })
    );
    write_svg(svg, || {
        let total = v.total();
        render_instance(&helly_plane::UnitBall::Euclidean, v.as_slice(), &[total])
    })?;
    Ok(check.is_ok())
}

fn symmetry<S: Scalar>(polygon: &Path, svg: Option<&Path>) -> Result<bool> {
    let body = ConvexBody::new(&parse_polygon::<S>(&read(polygon)?)?)?;
    let report = check_symmetry(&body)?;
    println!("{}", serde_json::to_string(&report)?);
    let witnesses: Vec<_> = report.witness_i.iter().chain(&report.witness_ii).collect();
    write_svg(svg, || render_body(&body, &witnesses))?;
    Ok(report.consistent() && witnesses.iter().all(|w| verify_witness(&body, w)))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
