//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use helly_plane::harness::{
    run_gallery, run_suite, BallSource, Mode, Status, SuiteConfig, SuiteKind, SuiteReport,
};
use helly_plane::{Rational, Scalar, UnitBall, Vec2, VectorMultiset};
use itertools::Itertools;

const SEED: u64 = 20_240_601;
const TAU: f64 = 1e-9;

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn timed(config: &SuiteConfig) -> (SuiteReport, Duration) {
    let start = Instant::now();
    let report = run_suite(config).expect("suite runs");
    (report, start.elapsed())
}

fn summary(r: &SuiteReport, t: Duration) -> String {
    let c = &r.counts;
    format!(
        "{} trials: {} pass, {} fail, {} vacuous, {} error in {:.1}s",
        r.records.len(),
        c.pass,
        c.fail,
        c.vacuous,
        c.error,
        t.as_secs_f64()
    )
}

fn clean(r: &SuiteReport, trials: usize) -> bool {
    r.records.len() == trials && r.counts.pass == trials && r.passed()
}

fn count_flag(r: &SuiteReport, key: &str) -> usize {
    r.records
        .iter()
        .filter(|t| t.status == Status::Pass && t.witnesses[key] == true)
        .count()
}

/// Independent recomputation of the gallery's planar and 3D fixtures.
fn gallery_oracle() -> bool {
    let q = Rational::from_ratio;
    let sq = UnitBall::<Rational>::max_norm();
    let h = Vec2::new(q(0, 1), q(-1, 2));
    let v: VectorMultiset<Rational> = vec![
        Vec2::from_ints(1, 1),
        Vec2::from_ints(-1, 1),
        h.clone(),
        h.clone(),
        h,
    ]
    .into();
    let min3 = (0..5)
        .combinations(3)
        .map(|s| sq.gauge(&v.subset_sum(&s)))
        .min()
        .unwrap();
    let closed_fails = sq.gauge(&v.total()) == q(1, 2) && min3 == q(1, 1);

    let eps = 0.01_f64;
    let r = (1.0 - eps * eps).sqrt();
    let seven: Vec<[f64; 3]> = (0..7)
        .map(|j| {
            let t = 2.0 * std::f64::consts::PI * f64::from(j) / 7.0;
            [r * t.cos(), r * t.sin(), eps]
        })
        .collect();
    let norm = |p: [f64; 3]| (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    let add = |a: [f64; 3], b: [f64; 3]| [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
    let total7 = seven.iter().copied().fold([0.0; 3], add);
    let remark2 = (norm(total7) - 7.0 * eps).abs() < TAU;

    let s = 1.0 / 3f64.sqrt();
    let tet = [[s, s, s], [s, -s, -s], [-s, s, -s], [-s, -s, s]];
    let threes = (0..4)
        .combinations(3)
        .all(|c| (norm(c.iter().map(|&i| tet[i]).fold([0.0; 3], add)) - 1.0).abs() < TAU);
    let tet_total = norm(tet.iter().copied().fold([0.0; 3], add)) < TAU;
    closed_fails && remark2 && threes && tet_total
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let cases = run_gallery(TAU);
    let t = start.elapsed();
    let actual = |case: &str, check: &str| -> String {
        cases
            .iter()
            .find(|c| c.name == case)
            .and_then(|c| c.checks.iter().find(|k| k.name == check))
            .map(|k| k.actual.clone())
            .unwrap_or_default()
    };
    let exact = actual("thm3-closed-fails", "total_gauge") == "1/2"
        && actual("thm3-closed-fails", "min_3sum_gauge") == "1"
        && actual("remark1-equality", "total_gauge") == "1"
        && actual("even-n", "total_norm") == "1/20";
    let approx = |case: &str, check: &str, want: f64| {
        actual(case, check)
            .parse::<f64>()
            .is_ok_and(|x| (x - want).abs() < TAU)
    };
    let floats = approx("remark2-3d", "total_norm", 0.07)
        && approx("remark4-tetrahedron", "min_3sum_norm", 1.0)
        && approx("remark4-tetrahedron", "max_3sum_norm", 1.0)
        && approx("remark4-tetrahedron", "total_norm", 0.0);
    let all = cases.len() == 5 && cases.iter().all(|c| c.pass);
    let oracle = gallery_oracle();
    check(
        all && exact && floats && oracle && t < Duration::from_secs(1),
        format!(
            "gallery: 5 cases reproduced, oracle agrees = {oracle}, {:.3}s",
            t.as_secs_f64()
        ),
    )
}

fn criteria2_3() -> (Outcome, Outcome) {
    let (r, t) = timed(&SuiteConfig::new(SuiteKind::Thm1, 10_000, SEED));
    let c2 = check(
        clean(&r, 10_000) && t < Duration::from_secs(120),
        format!("thm1: {}", summary(&r, t)),
    );
    let certified = r
        .records
        .iter()
        .filter(|rec| {
            rec.witnesses["projection_sum"]
                .as_str()
                .and_then(|s| Rational::parse_str(s).ok())
                .is_some_and(|p| p >= Rational::one())
        })
        .count();
    let c3 = check(
        certified == 10_000,
        format!("certificate: {certified}/10000 with projection_sum >= 1"),
    );
    (c2, c3)
}

fn criterion4() -> Outcome {
    let start = Instant::now();
    let mut lines = Vec::new();
    let mut ok = true;
    for kind in [SuiteKind::Thm2, SuiteKind::Thm3] {
        let (r, t) = timed(&SuiteConfig::new(kind, 10_000, SEED));
        let collinear = count_flag(&r, "collinear");
        ok &= clean(&r, 10_000) && collinear >= 1000;
        lines.push(format!("{kind}: {}, {collinear} collinear", summary(&r, t)));
        if kind == SuiteKind::Thm2 {
            lines.push(format!("{} antipodal", count_flag(&r, "antipodal")));
        }
    }
    ok &= start.elapsed() < Duration::from_secs(180);
    check(ok, lines.join("; "))
}

fn simple(
    kind: SuiteKind,
    trials: usize,
    config: impl FnOnce(SuiteConfig) -> SuiteConfig,
) -> Outcome {
    let (r, t) = timed(&config(SuiteConfig::new(kind, trials, SEED)));
    check(clean(&r, trials), format!("{kind}: {}", summary(&r, t)))
}

fn criterion11() -> Outcome {
    let (r, t) = timed(&SuiteConfig::new(SuiteKind::Symmetry, 200, SEED));
    let sym = count_flag(&r, "expected_symmetric");
    let asym_with_both = r
        .records
        .iter()
        .filter(|rec| {
            rec.status == Status::Pass
                && rec.witnesses["expected_symmetric"] == false
                && rec.witnesses["witness_i"] == true
                && rec.witnesses["witness_ii"] == true
        })
        .count();
    check(
        clean(&r, 200) && sym == 100 && asym_with_both == 100 && t < Duration::from_secs(120),
        format!(
            "symmetry: {}; {sym} symmetric, {asym_with_both} asymmetric with both witnesses",
            summary(&r, t)
        ),
    )
}

fn main() -> ExitCode {
    let mut results: Vec<(u32, Outcome)> = vec![(1, criterion1())];
    let (c2, c3) = criteria2_3();
    results.push((2, c2));
    results.push((3, c3));
    results.push((4, criterion4()));
    results.push((5, simple(SuiteKind::LemmaConv, 10_000, |c| c)));
    results.push((6, simple(SuiteKind::LemmaMain, 10_000, |c| c)));
    results.push((7, simple(SuiteKind::Claim1, 10_000, |c| c)));
    results.push((
        8,
        simple(SuiteKind::Ginzburg, 1000, |c| {
            c.with_mode(Mode::Float)
                .with_tol(TAU)
                .with_ball(BallSource::Euclidean)
        }),
    ));
    results.push((9, simple(SuiteKind::Signs, 1000, |c| c)));
    results.push((10, simple(SuiteKind::Generic, 100, |c| c)));
    results.push((11, criterion11()));
    results.push((12, simple(SuiteKind::Corollary, 1000, |c| c)));

    let mut failed = 0;
    for (n, o) in &results {
        println!(
            "{} criterion {n}: {}",
            if o.ok { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.ok);
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
