//! Seeded property suites.
//!
//! Trial `i` of a run with seed `s` draws everything from the sub-seed
//! `s ^ i`, so trials are independent of each other and of execution order.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::gallery::run_gallery;
use super::generators::*;
use crate::algorithms::generic::norm_collision;
use crate::algorithms::{choose_signs, ginzburg_reduce, make_generic, verify_signs};
use crate::error::{Error, Result};
use crate::io::{ball_to_json, parse_ball, read_to_string, vectors_to_json};
use crate::norms::UnitBall;
use crate::sample::{direction, rng_from_seed};
use crate::scalar::{Float, Rational, Scalar};
use crate::symmetry::{check_symmetry, verify_witness, ConvexBody};
use crate::theorems::{
    claim1_triplets, corollary_check, halfplane_certificate, lemma_conv_check, lemma_main_witness,
    verify_helly, verify_theorem1, VerifyReport,
};
use crate::vector::{Vec2, VectorMultiset};

/// Largest vertex count of generated balls and polygons.
pub const MAX_VERTICES: usize = 12;
/// Draws spent looking for an instance of a strict hypothesis.
pub const HYPOTHESIS_ATTEMPTS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteKind {
    Thm1,
    Thm2,
    Thm3,
    LemmaConv,
    LemmaMain,
    Claim1,
    Corollary,
    Signs,
    Generic,
    Symmetry,
    Gallery,
    Ginzburg,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 12] = [
        SuiteKind::Thm1,
        SuiteKind::Thm2,
        SuiteKind::Thm3,
        SuiteKind::LemmaConv,
        SuiteKind::LemmaMain,
        SuiteKind::Claim1,
        SuiteKind::Corollary,
        SuiteKind::Signs,
        SuiteKind::Generic,
        SuiteKind::Symmetry,
        SuiteKind::Gallery,
        SuiteKind::Ginzburg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Thm1 => "thm1",
            SuiteKind::Thm2 => "thm2",
            SuiteKind::Thm3 => "thm3",
            SuiteKind::LemmaConv => "lemma-conv",
            SuiteKind::LemmaMain => "lemma-main",
            SuiteKind::Claim1 => "claim1",
            SuiteKind::Corollary => "corollary",
            SuiteKind::Signs => "signs",
            SuiteKind::Generic => "generic",
            SuiteKind::Symmetry => "symmetry",
            SuiteKind::Gallery => "gallery",
            SuiteKind::Ginzburg => "ginzburg",
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            _ => Err(Error::Parse(format!("unknown mode `{s}` (exact|float)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BallSource {
    MaxNorm,
    Euclidean,
    /// A fresh random polygon per trial.
    Random,
    File(PathBuf),
}

impl FromStr for BallSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "maxnorm" => BallSource::MaxNorm,
            "euclidean" => BallSource::Euclidean,
            "random" => BallSource::Random,
            path => BallSource::File(PathBuf::from(path)),
        })
    }
}

impl fmt::Display for BallSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BallSource::MaxNorm => f.write_str("maxnorm"),
            BallSource::Euclidean => f.write_str("euclidean"),
            BallSource::Random => f.write_str("random"),
            BallSource::File(p) => write!(f, "{}", p.display()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub suite: SuiteKind,
    pub trials: usize,
    pub seed: u64,
    pub mode: Mode,
    pub tol: f64,
    pub ball: BallSource,
}

impl SuiteConfig {
    pub fn new(suite: SuiteKind, trials: usize, seed: u64) -> Self {
        Self {
            suite,
            trials,
            seed,
            mode: Mode::Exact,
            tol: 1e-9,
            ball: BallSource::Random,
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_ball(mut self, ball: BallSource) -> Self {
        self.ball = ball;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The generated data did not satisfy the suite's hypothesis.
    Vacuous,
    /// A routine returned an error on valid input.
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub digest: String,
    pub status: Status,
    pub witnesses: Value,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub error: usize,
}

impl Counts {
    /// Failures and errors; the exit status of a run is zero iff this is.
    pub fn substantive_failures(&self) -> usize {
        self.fail + self.error
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteKind,
    pub mode: Mode,
    pub seed: u64,
    pub trials: usize,
    pub tol: f64,
    pub ball: String,
    pub counts: Counts,
    pub records: Vec<TrialRecord>,
    /// Not serialized, so reports of equal configs are byte-identical.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn passed(&self) -> bool {
        self.counts.substantive_failures() == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Parallel,
    Sequential,
}

/// Runs a suite on all cores when the `parallel` feature is on.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    run_suite_with(config, Execution::Parallel)
}

pub fn run_suite_with(config: &SuiteConfig, execution: Execution) -> Result<SuiteReport> {
    let start = Instant::now();
    if config.mode == Mode::Float {
        Float::set_tolerance(config.tol);
    }
    let records = match config.mode {
        Mode::Exact => run_typed::<Rational>(config, execution)?,
        Mode::Float => run_typed::<Float>(config, execution)?,
    };
    let mut counts = Counts::default();
    for r in &records {
        match r.status {
            Status::Pass => counts.pass += 1,
            Status::Fail => counts.fail += 1,
            Status::Vacuous => counts.vacuous += 1,
            Status::Error => counts.error += 1,
        }
    }
    Ok(SuiteReport {
        suite: config.suite,
        mode: config.mode,
        seed: config.seed,
        trials: config.trials,
        tol: config.tol,
        ball: config.ball.to_string(),
        counts,
        records,
        wall_time: start.elapsed(),
    })
}

enum Balls<S: Scalar> {
    Fixed(UnitBall<S>),
    Random,
}

impl<S: Scalar> Balls<S> {
    fn resolve(source: &BallSource) -> Result<Self> {
        Ok(match source {
            BallSource::MaxNorm => Balls::Fixed(UnitBall::max_norm()),
            BallSource::Euclidean => Balls::Fixed(UnitBall::Euclidean),
            BallSource::Random => Balls::Random,
            BallSource::File(p) => Balls::Fixed(parse_ball(&read_to_string(p)?)?),
        })
    }

    fn for_trial(&self, sub_seed: u64) -> UnitBall<S> {
        match self {
            Balls::Fixed(b) => b.clone(),
            Balls::Random => gen_random_ball(sub_seed.rotate_left(32) ^ 0xB0_B0, MAX_VERTICES),
        }
    }
}

fn run_typed<S: Scalar>(config: &SuiteConfig, execution: Execution) -> Result<Vec<TrialRecord>> {
    if config.suite == SuiteKind::Gallery {
        return Ok(gallery_records(config.tol));
    }
    let balls = Balls::<S>::resolve(&config.ball)?;
    let run = |trial: usize| -> TrialRecord {
        let sub = config.seed ^ trial as u64;
        let out = run_trial(config, &balls, trial, sub);
        TrialRecord {
            trial,
            digest: digest(&out.instance),
            status: out.status,
            witnesses: out.witnesses,
            note: out.note,
        }
    };
    Ok(match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..config.trials).into_par_iter().map(run).collect(),
        _ => (0..config.trials).map(run).collect(),
    })
}

fn digest(instance: &str) -> String {
    hex::encode(Sha256::digest(instance.as_bytes()))[..16].to_string()
}

fn gallery_records(tol: f64) -> Vec<TrialRecord> {
    run_gallery(tol)
        .into_iter()
        .enumerate()
        .map(|(i, o)| TrialRecord {
            trial: i,
            digest: digest(&o.name),
            status: if o.pass { Status::Pass } else { Status::Fail },
            witnesses: serde_json::to_value(&o).expect("outcome serializes"),
            note: String::new(),
        })
        .collect()
}

struct Outcome {
    instance: String,
    status: Status,
    witnesses: Value,
    note: String,
}

impl Outcome {
    fn new(instance: String, status: Status, witnesses: Value) -> Self {
        Self {
            instance,
            status,
            witnesses,
            note: String::new(),
        }
    }

    fn pass_if(instance: String, ok: bool, witnesses: Value) -> Self {
        Self::new(
            instance,
            if ok { Status::Pass } else { Status::Fail },
            witnesses,
        )
    }

    fn error(instance: String, e: &Error) -> Self {
        let status = match e {
            Error::TheoremFalsified(_) | Error::SamplingExhausted { .. } => Status::Fail,
            _ => Status::Error,
        };
        Self {
            instance,
            status,
            witnesses: Value::Null,
            note: e.to_string(),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

fn instance<S: Scalar>(ball: &UnitBall<S>, vectors: &VectorMultiset<S>) -> String {
    format!("{}|{}", ball_to_json(ball), vectors_to_json(vectors))
}

fn report_json<S: Scalar>(r: &VerifyReport<S>) -> Value {
    json!({
        "hypothesis": r.hypothesis_holds,
        "conclusion": r.conclusion_holds,
        "total_norm": r.total_norm.to_string(),
        "witnesses": r.witnesses.iter().map(|w| w.subset.clone()).collect::<Vec<_>>(),
    })
}

fn helly_outcome<S: Scalar>(inst: String, r: VerifyReport<S>, extra: Value) -> Outcome {
    let mut w = report_json(&r);
    if let (Value::Object(m), Value::Object(e)) = (&mut w, extra) {
        m.extend(e);
    }
    if !r.hypothesis_holds {
        Outcome::new(inst, Status::Vacuous, w)
    } else {
        Outcome::pass_if(inst, r.conclusion_holds, w).with_note(r.notes.clone())
    }
}

fn odd_n(rng: &mut impl Rng, choices: &[usize]) -> usize {
    choices[rng.gen_range(0..choices.len())]
}

fn run_trial<S: Scalar>(config: &SuiteConfig, balls: &Balls<S>, trial: usize, sub: u64) -> Outcome {
    let ball = balls.for_trial(sub);
    let mut rng = rng_from_seed(sub);
    let collinear = trial.is_multiple_of(10);
    match config.suite {
        SuiteKind::Thm1 => {
            let n = odd_n(&mut rng, &[3, 5, 7, 9]);
            let u: Vec2<S> = direction(&mut rng);
            let v = gen_unit_vectors(&ball, n, rng.gen(), Some(&u));
            let inst = format!("{}|{u}", instance(&ball, &v));
            let report = match verify_theorem1(&ball, &v, &u) {
                Ok(r) => r,
                Err(e) => return Outcome::error(inst, &e),
            };
            if !report.hypothesis_holds {
                return Outcome::new(inst, Status::Vacuous, report_json(&report));
            }
            match halfplane_certificate(&ball, &v, &u) {
                Ok(c) => {
                    let ok = report.conclusion_holds
                        && c.projection_sum.compare(&S::one()) != Ordering::Less
                        && ball.cmp_gauge(&report.total, &c.projection_sum) != Ordering::Less;
                    let mut w = report_json(&report);
                    w["projection_sum"] = json!(c.projection_sum.to_string());
                    w["k"] = json!(c.k);
                    Outcome::pass_if(inst, ok, w)
                }
                Err(e) => Outcome::error(inst, &e),
            }
        }
        SuiteKind::Thm2 => {
            let n = odd_n(&mut rng, &[3, 5, 7, 9]);
            let antipodal = !collinear && trial.is_multiple_of(3);
            let v = if collinear {
                gen_collinear_unit(&ball, n, rng.gen())
            } else {
                gen_unit_helly(&ball, n, rng.gen(), antipodal)
            };
            let inst = instance(&ball, &v);
            match verify_helly(&ball, &v, false) {
                Ok(r) => helly_outcome(
                    inst,
                    r,
                    json!({"collinear": collinear, "antipodal": antipodal}),
                ),
                Err(e) => Outcome::error(inst, &e),
            }
        }
        SuiteKind::Thm3 => {
            let n = odd_n(&mut rng, &[3, 5, 7, 9]);
            let seed = rng.gen();
            let (v, attempts) = strict_instance(&ball, n, seed, collinear, |v| {
                verify_helly(&ball, v, true).is_ok_and(|r| r.hypothesis_holds)
            });
            let inst = instance(&ball, &v);
            match verify_helly(&ball, &v, true) {
                Ok(r) => helly_outcome(
                    inst,
                    r,
                    json!({"collinear": collinear, "attempts": attempts}),
                ),
                Err(e) => Outcome::error(inst, &e),
            }
        }
        SuiteKind::Corollary => {
            let n = odd_n(&mut rng, &[7, 9]);
            let seed = rng.gen();
            let (v, attempts) = strict_instance(&ball, n, seed, collinear, |v| {
                corollary_check(&ball, v, 5).is_ok_and(|r| r.hypothesis_holds)
            });
            let inst = instance(&ball, &v);
            let mut all = Vec::new();
            for k in [5, 7] {
                match corollary_check(&ball, &v, k) {
                    Ok(r) => all.push(r),
                    Err(e) => return Outcome::error(inst, &e),
                }
            }
            let w = json!({
                "attempts": attempts,
                "k5": report_json(&all[0]),
                "k7": report_json(&all[1]),
            });
            if !all[0].hypothesis_holds {
                Outcome::new(inst, Status::Vacuous, w)
            } else {
                Outcome::pass_if(inst, all.iter().all(|r| r.conclusion_holds), w)
            }
        }
        SuiteKind::LemmaConv => {
            let [a, b, c] = gen_boundary_triple(&ball, rng.gen());
            let v: VectorMultiset<S> = vec![a.clone(), b.clone(), c.clone()].into();
            let inst = instance(&ball, &v);
            match lemma_conv_check(&ball, &a, &b, &c) {
                Ok((zero_in, sum_in)) => Outcome::pass_if(
                    inst,
                    zero_in == sum_in,
                    json!({"origin_in_triangle": zero_in, "sum_in_triangle": sum_in}),
                ),
                Err(e) => Outcome::error(inst, &e),
            }
        }
        SuiteKind::LemmaMain => {
            let z = gen_zero_sum_six(&ball, rng.gen());
            let inst = instance(&ball, &z);
            match lemma_main_witness(&ball, &z) {
                Ok(t) => {
                    let ok = ball.contains(&z.subset_sum(&t));
                    Outcome::pass_if(inst, ok, json!({"triple": t}))
                }
                Err(e) => Outcome::error(inst, &e),
            }
        }
        SuiteKind::Claim1 => {
            let x: Vec<S> = gen_zero_sum_reals(rng.gen());
            let inst = x
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(",");
            match claim1_triplets(&x) {
                Ok(ts) => {
                    let set: HashSet<[usize; 3]> = ts.iter().copied().collect();
                    let closed = ts.iter().all(|t| {
                        let c: Vec<usize> = (0..6).filter(|i| !t.contains(i)).collect();
                        set.contains(&[c[0], c[1], c[2]])
                    });
                    Outcome::pass_if(
                        inst,
                        ts.len() >= 12 && closed,
                        json!({"count": ts.len(), "closed": closed}),
                    )
                }
                Err(e) => Outcome::error(inst, &e),
            }
        }
        SuiteKind::Signs => {
            let n = rng.gen_range(1..=11);
            let v = gen_unit_vectors(&ball, n, rng.gen(), None);
            let inst = instance(&ball, &v);
            match choose_signs(&ball, &v) {
                Ok(s) => {
                    let check = verify_signs(&ball, &v, &s);
                    let w = json!({
                        "signs": s.signs,
                        "min_norm": check.min_norm.to_string(),
                        "subsets_checked": check.subsets_checked,
                    });
                    Outcome::pass_if(inst, check.exhaustive && check.passed(), w)
                }
                Err(e) => Outcome::error(inst, &e),
            }
        }
        SuiteKind::Generic => {
            let n = rng.gen_range(1..=7);
            let v = match &ball {
                UnitBall::Polygonal(_) => gen_unit_vectors(&ball, n, rng.gen(), None),
                UnitBall::Euclidean => {
                    return Outcome::error(
                        instance(&ball, &VectorMultiset::new(vec![])),
                        &Error::NotPolygonal,
                    )
                }
            };
            let inst = instance(&ball, &v);
            let (lambda, eps) = (S::from_ratio(99, 100), S::from_ratio(1, 1000));
            match make_generic(&ball, &v, &lambda, &eps, rng.gen()) {
                Ok(u) => {
                    let distinct = norm_collision(&ball, &u).is_none();
                    let close = v.iter().zip(u.iter()).all(|(a, b)| {
                        ball.cmp_gauge(&(b - &a.scale(&lambda)), &eps) != Ordering::Greater
                    });
                    Outcome::pass_if(
                        inst,
                        distinct && close,
                        json!({"distinct": distinct, "proximity": close}),
                    )
                }
                Err(e) => Outcome::error(inst, &e),
            }
        }
        SuiteKind::Symmetry => {
            let symmetric = trial.is_multiple_of(2);
            let pts: Vec<Vec2<S>> = if symmetric {
                gen_symmetric_polygon(sub, MAX_VERTICES)
            } else {
                gen_asymmetric_polygon(sub, MAX_VERTICES)
            };
            let inst = vectors_to_json(&VectorMultiset::new(pts.clone()));
            let body = match ConvexBody::new(&pts) {
                Ok(b) => b,
                Err(e) => return Outcome::error(inst, &e),
            };
            match check_symmetry(&body) {
                Ok(r) => {
                    let verified =
                        |w: &Option<_>| w.as_ref().is_some_and(|w| verify_witness(&body, w));
                    let ok = if symmetric {
                        r.symmetric && r.witness_i.is_none() && r.witness_ii.is_none()
                    } else {
                        !r.symmetric && verified(&r.witness_i) && verified(&r.witness_ii)
                    };
                    let w = json!({
                        "expected_symmetric": symmetric,
                        "symmetric": r.symmetric,
                        "witness_i": r.witness_i.is_some(),
                        "witness_ii": r.witness_ii.is_some(),
                    });
                    Outcome::pass_if(inst, ok, w)
                }
                Err(e) => Outcome::error(inst, &e),
            }
        }
        SuiteKind::Ginzburg => ginzburg_trial(&mut rng, config.tol),
        SuiteKind::Gallery => unreachable!("handled before trials"),
    }
}

/// Draws candidates until `holds` accepts one. After
/// [`HYPOTHESIS_ATTEMPTS`] misses it falls back to `n` copies of `9/10` of a
/// unit vector, whose 3-sums have norm `27/10`.
fn strict_instance<S: Scalar>(
    ball: &UnitBall<S>,
    n: usize,
    seed: u64,
    collinear: bool,
    holds: impl Fn(&VectorMultiset<S>) -> bool,
) -> (VectorMultiset<S>, usize) {
    for attempt in 0..HYPOTHESIS_ATTEMPTS {
        let v = gen_ball_candidate(ball, n, seed, attempt, collinear);
        if holds(&v) {
            return (v, attempt + 1);
        }
    }
    let v = gen_unit_vectors(ball, 1, seed, None)[0].scale(&S::from_ratio(9, 10));
    (vec![v; n].into(), HYPOTHESIS_ATTEMPTS + 1)
}

fn ginzburg_trial(rng: &mut impl Rng, tol: f64) -> Outcome {
    use std::f64::consts::PI;
    let n = odd_n(rng, &[1, 3, 5, 7, 9]);
    let alpha: f64 = rng.gen_range(0.0..2.0 * PI);
    let u = Vec2::new(Float(alpha.cos()), Float(alpha.sin()));
    let start = alpha - PI / 2.0;
    let v: VectorMultiset<Float> = (0..n)
        .map(|_| {
            let t = match rng.gen_range(0..20) {
                0 => 0.0,
                1 => PI,
                _ => rng.gen_range(0.0..=PI),
            };
            Vec2::new(Float((start + t).cos()), Float((start + t).sin()))
        })
        .collect();
    let inst = format!("{}|{u}", vectors_to_json(&v));
    match ginzburg_reduce(&v, &u) {
        Ok(trace) => {
            let check = trace.check(tol);
            let w = json!({"final_norm": trace.final_norm, "steps": trace.steps.len()});
            match check {
                Ok(()) => Outcome::new(inst, Status::Pass, w),
                Err(msg) => Outcome::new(inst, Status::Fail, w).with_note(msg),
            }
        }
        Err(e) => Outcome::error(inst, &e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for k in SuiteKind::ALL {
            assert_eq!(k.name().parse::<SuiteKind>().unwrap(), k);
        }
        assert_eq!(
            "nope".parse::<SuiteKind>(),
            Err(Error::UnknownSuite("nope".into()))
        );
    }

    #[test]
    fn gallery_suite_has_five_passing_records() {
        let r = run_suite(&SuiteConfig::new(SuiteKind::Gallery, 1, 0)).unwrap();
        assert_eq!(r.records.len(), 5);
        assert!(r.passed());
    }

    #[test]
    fn every_suite_passes_a_short_run() {
        for k in SuiteKind::ALL {
            let r = run_suite(&SuiteConfig::new(k, 20, 7)).unwrap();
            assert!(r.passed(), "{k}: {:?}", r.counts);
            assert_eq!(r.counts.vacuous, 0, "{k}");
        }
    }

    #[test]
    fn deterministic_and_order_independent() {
        let c = SuiteConfig::new(SuiteKind::LemmaMain, 40, 42);
        let a = run_suite_with(&c, Execution::Parallel).unwrap().to_json();
        let b = run_suite_with(&c, Execution::Sequential).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn float_mode_runs() {
        let c = SuiteConfig::new(SuiteKind::Thm1, 20, 3)
            .with_mode(Mode::Float)
            .with_ball(BallSource::Euclidean);
        assert!(run_suite(&c).unwrap().passed());
    }

    #[test]
    fn missing_ball_file_is_an_io_error() {
        let c = SuiteConfig::new(SuiteKind::Thm1, 1, 0)
            .with_ball(BallSource::File("/nonexistent/ball.json".into()));
        assert!(matches!(run_suite(&c), Err(Error::Io(_))));
    }
}
