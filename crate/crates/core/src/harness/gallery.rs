//! Fixed counterexamples and boundary cases, with their expected values.
//!
//! Plane fixtures are evaluated exactly. The "even-n" fixture needs the
//! irrational coordinate `sqrt(1 - eps^2 / 4)`; it is carried symbolically
//! as a multiple of `sqrt(d)`, so every squared norm is rational. The two
//! space fixtures use a small `f64` vector type and a tolerance.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::norms::UnitBall;
use crate::scalar::{Rational, Scalar};
use crate::vector::{Vec2, VectorMultiset};

/// Names of all registered cases, in report order.
pub const GALLERY: [&str; 5] = [
    "thm3-closed-fails",
    "even-n",
    "remark1-equality",
    "remark2-3d",
    "remark4-tetrahedron",
];

const EVEN_K: i64 = 5;
const EVEN_EPS: (i64, i64) = (1, 100);
const PRISM_N: usize = 7;
const PRISM_EPS: f64 = 0.01;

/// `a * sqrt(d) * e_x + y * e_y` for a fixed rational `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct SurdVec {
    pub a: Rational,
    pub y: Rational,
}

impl SurdVec {
    fn add(&self, o: &Self) -> Self {
        SurdVec {
            a: self.a.clone() + o.a.clone(),
            y: self.y.clone() + o.y.clone(),
        }
    }

    fn norm_squared(&self, d: &Rational) -> Rational {
        self.a.clone() * self.a.clone() * d.clone() + self.y.clone() * self.y.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3(pub [f64; 3]);

impl Vec3 {
    fn add(self, o: Self) -> Self {
        Vec3([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }

    fn dot(self, o: Self) -> f64 {
        self.0[0] * o.0[0] + self.0[1] * o.0[1] + self.0[2] * o.0[2]
    }

    fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GalleryBall {
    Plane(UnitBall<Rational>),
    Euclidean3d,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Fixture {
    Plane(VectorMultiset<Rational>),
    Surd { d: Rational, vectors: Vec<SurdVec> },
    Space(Vec<Vec3>),
}

/// A computed or expected quantity.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Vector(Vec2<Rational>),
    Approx(f64),
    Flag(bool),
}

impl Value {
    fn matches(&self, other: &Value, tol: f64) -> bool {
        match (self, other) {
            (Value::Approx(a), Value::Approx(b)) => (a - b).abs() <= tol,
            _ => self == other,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{q}"),
            Value::Vector(v) => write!(f, "{v}"),
            Value::Approx(x) => write!(f, "{x}"),
            Value::Flag(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GalleryCase {
    pub name: &'static str,
    pub ball: GalleryBall,
    pub vectors: Fixture,
    /// Halfplane direction, where the case is about one.
    pub u: Option<Vec2<Rational>>,
    pub expected: Vec<(&'static str, Value)>,
    pub note: &'static str,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn exact(n: i64, d: i64) -> Value {
    Value::Exact(q(n, d))
}

pub fn gallery_case(name: &str) -> Result<GalleryCase> {
    let case = match name {
        "thm3-closed-fails" => {
            let h = Vec2::new(q(0, 1), q(-1, 2));
            GalleryCase {
                name: "thm3-closed-fails",
                ball: GalleryBall::Plane(UnitBall::max_norm()),
                vectors: Fixture::Plane(
                    vec![
                        Vec2::from_ints(1, 1),
                        Vec2::from_ints(-1, 1),
                        h.clone(),
                        h.clone(),
                        h,
                    ]
                    .into(),
                ),
                u: None,
                expected: vec![
                    ("all_in_ball", Value::Flag(true)),
                    ("min_3sum_gauge", exact(1, 1)),
                    ("total", Value::Vector(Vec2::new(q(0, 1), q(1, 2)))),
                    ("total_gauge", exact(1, 2)),
                ],
                note: "vectors in the ball with every 3-sum of norm at least 1 but total norm 1/2",
            }
        }
        "even-n" => {
            let (en, ed) = EVEN_EPS;
            let eps = q(en, ed);
            let d = Rational::from_i64(1) - eps.clone() * eps.clone() / Rational::from_i64(4);
            let half = eps / Rational::from_i64(2);
            let w1 = SurdVec {
                a: q(1, 1),
                y: half.clone(),
            };
            let w2 = SurdVec {
                a: q(-1, 1),
                y: half,
            };
            let vectors = (0..EVEN_K)
                .map(|_| w1.clone())
                .chain((0..EVEN_K).map(|_| w2.clone()))
                .collect();
            GalleryCase {
                name: "even-n",
                ball: GalleryBall::Plane(UnitBall::Euclidean),
                vectors: Fixture::Surd { d, vectors },
                u: Some(Vec2::from_ints(0, 1)),
                expected: vec![
                    ("all_unit", Value::Flag(true)),
                    ("all_dots_positive", Value::Flag(true)),
                    ("pair_norm", exact(en, ed)),
                    ("total_norm", exact(EVEN_K * en, ed)),
                ],
                note:
                    "k copies each of two almost antipodal unit vectors: total norm k*eps = eps*n/2",
            }
        }
        "remark1-equality" => {
            let l = Vec2::new(q(-1, 1), q(1, 10));
            let r = Vec2::new(q(1, 1), q(1, 10));
            GalleryCase {
                name: "remark1-equality",
                ball: GalleryBall::Plane(UnitBall::max_norm()),
                vectors: Fixture::Plane(vec![l.clone(), l.clone(), l, r.clone(), r].into()),
                u: Some(Vec2::from_ints(0, 1)),
                expected: vec![
                    ("all_unit", Value::Flag(true)),
                    ("all_dots_positive", Value::Flag(true)),
                    ("total", Value::Vector(Vec2::new(q(-1, 1), q(1, 2)))),
                    ("total_gauge", exact(1, 1)),
                ],
                note: "strictly positive dot products still allow total norm exactly 1",
            }
        }
        "remark2-3d" => {
            let r = (1.0 - PRISM_EPS * PRISM_EPS).sqrt();
            let vectors = (0..PRISM_N)
                .map(|i| {
                    let t = std::f64::consts::TAU * i as f64 / PRISM_N as f64;
                    Vec3([r * t.cos(), r * t.sin(), PRISM_EPS])
                })
                .collect();
            GalleryCase {
                name: "remark2-3d",
                ball: GalleryBall::Euclidean3d,
                vectors: Fixture::Space(vectors),
                u: None,
                expected: vec![
                    ("all_unit", Value::Flag(true)),
                    ("all_dots_positive", Value::Flag(true)),
                    ("total_norm", Value::Approx(PRISM_EPS * PRISM_N as f64)),
                ],
                note: "regular 7-gon at height eps on the unit sphere: total eps*n*u",
            }
        }
        "remark4-tetrahedron" => {
            let s = 1.0 / 3f64.sqrt();
            let vectors = [
                [1.0, 1.0, 1.0],
                [1.0, -1.0, -1.0],
                [-1.0, 1.0, -1.0],
                [-1.0, -1.0, 1.0],
            ]
            .iter()
            .map(|p| Vec3([p[0] * s, p[1] * s, p[2] * s]))
            .collect();
            GalleryCase {
                name: "remark4-tetrahedron",
                ball: GalleryBall::Euclidean3d,
                vectors: Fixture::Space(vectors),
                u: None,
                expected: vec![
                    ("all_unit", Value::Flag(true)),
                    ("min_3sum_norm", Value::Approx(1.0)),
                    ("max_3sum_norm", Value::Approx(1.0)),
                    ("total_norm", Value::Approx(0.0)),
                ],
                note: "every 3-sum of the tetrahedron vertices has norm 1, the total is 0",
            }
        }
        other => return Err(Error::UnknownCase(other.to_string())),
    };
    Ok(case)
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseOutcome {
    pub name: String,
    pub pass: bool,
    pub checks: Vec<CheckOutcome>,
    pub note: String,
}

fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| [i, j, k])))
}

/// Recomputes every quantity named in the case from its data.
fn measure(case: &GalleryCase, tol: f64) -> Vec<(&'static str, Value)> {
    let one = Rational::from_i64(1);
    match (&case.ball, &case.vectors) {
        (GalleryBall::Plane(ball), Fixture::Plane(v)) => {
            let total = v.total();
            let mut out = vec![
                (
                    "all_in_ball",
                    Value::Flag(v.iter().all(|p| ball.contains(p))),
                ),
                ("all_unit", Value::Flag(v.iter().all(|p| ball.is_unit(p)))),
                ("total_gauge", Value::Exact(ball.gauge(&total))),
                ("total", Value::Vector(total)),
            ];
            if let Some(u) = &case.u {
                out.push((
                    "all_dots_positive",
                    Value::Flag(v.iter().all(|p| u.dot(p).is_positive())),
                ));
            }
            if let Some(m) = triples(v.len())
                .map(|t| ball.gauge(&v.subset_sum(&t)))
                .min_by(|a, b| a.compare(b))
            {
                out.push(("min_3sum_gauge", Value::Exact(m)));
            }
            out
        }
        (_, Fixture::Surd { d, vectors }) => {
            let total = vectors
                .iter()
                .skip(1)
                .fold(vectors[0].clone(), |acc, w| acc.add(w));
            let pair = vectors[0].add(&vectors[vectors.len() - 1]);
            let all_unit = vectors.iter().all(|w| w.norm_squared(d) == one);
            let dots = case.u.as_ref().is_none_or(|u| {
                // `u` has no x-component here, so only `y` matters.
                u.x.is_zero()
                    && vectors
                        .iter()
                        .all(|w| (u.y.clone() * w.y.clone()).is_positive())
            });
            vec![
                ("all_unit", Value::Flag(all_unit)),
                ("all_dots_positive", Value::Flag(dots)),
                ("pair_norm", Value::Exact(pair.norm_squared(d).sqrt())),
                ("total_norm", Value::Exact(total.norm_squared(d).sqrt())),
            ]
        }
        (_, Fixture::Space(v)) => {
            let total = v.iter().copied().fold(Vec3([0.0; 3]), Vec3::add);
            let u = Vec3([0.0, 0.0, 1.0]);
            let sums: Vec<f64> = triples(v.len())
                .map(|[i, j, k]| v[i].add(v[j]).add(v[k]).norm())
                .collect();
            vec![
                (
                    "all_unit",
                    Value::Flag(v.iter().all(|p| (p.norm() - 1.0).abs() <= tol)),
                ),
                (
                    "all_dots_positive",
                    Value::Flag(v.iter().all(|p| p.dot(u) > 0.0)),
                ),
                (
                    "min_3sum_norm",
                    Value::Approx(sums.iter().copied().fold(f64::INFINITY, f64::min)),
                ),
                (
                    "max_3sum_norm",
                    Value::Approx(sums.iter().copied().fold(f64::NEG_INFINITY, f64::max)),
                ),
                ("total_norm", Value::Approx(total.norm())),
            ]
        }
        (GalleryBall::Euclidean3d, Fixture::Plane(_)) => {
            unreachable!("plane vectors in a space ball")
        }
    }
}

/// Evaluates all expected checks; `tol` applies to the floating-point ones.
pub fn evaluate(case: &GalleryCase, tol: f64) -> CaseOutcome {
    let actual = measure(case, tol);
    let checks: Vec<CheckOutcome> = case
        .expected
        .iter()
        .map(|(name, want)| {
            let got = actual.iter().find(|(n, _)| n == name).map(|(_, v)| v);
            CheckOutcome {
                name: name.to_string(),
                expected: want.to_string(),
                actual: got.map_or_else(|| "missing".into(), |v| v.to_string()),
                pass: got.is_some_and(|g| g.matches(want, tol)),
            }
        })
        .collect();
    CaseOutcome {
        name: case.name.to_string(),
        pass: checks.iter().all(|c| c.pass),
        checks,
        note: case.note.to_string(),
    }
}

/// Evaluates every registered case in order.
pub fn run_gallery(tol: f64) -> Vec<CaseOutcome> {
    GALLERY
        .iter()
        .map(|n| evaluate(&gallery_case(n).expect("registered"), tol))
        .collect()
}
