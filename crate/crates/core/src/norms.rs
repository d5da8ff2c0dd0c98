//! Norms on the plane: the Euclidean norm and norms whose unit ball is a
//! 0-symmetric convex polygon.
//!
//! A polygonal unit ball stores its vertices counterclockwise together with
//! one [`EdgeFunctional`] per edge, the linear map equal to 1 along that
//! edge. The gauge of `z` is the largest edge-functional value at `z`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{all_collinear_with_origin, convex_hull, orient};
use crate::scalar::Scalar;
use crate::vector::Vec2;

/// The linear map `z -> p * z.x + q * z.y`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct EdgeFunctional<S: Scalar> {
    #[serde(serialize_with = "crate::io::ser_scalar")]
    pub p: S,
    #[serde(serialize_with = "crate::io::ser_scalar")]
    pub q: S,
}

impl<S: Scalar> EdgeFunctional<S> {
    pub fn new(p: S, q: S) -> Self {
        Self { p, q }
    }

    /// The functional equal to 1 at both `a` and `b`; the line through them
    /// must miss the origin.
    pub fn through(a: &Vec2<S>, b: &Vec2<S>) -> Self {
        let det = a.cross(b);
        assert!(!det.is_zero(), "edge line passes through the origin");
        Self {
            p: (b.y.clone() - a.y.clone()) / det.clone(),
            q: (a.x.clone() - b.x.clone()) / det,
        }
    }

    pub fn eval(&self, z: &Vec2<S>) -> S {
        self.p.clone() * z.x.clone() + self.q.clone() * z.y.clone()
    }

    pub fn scaled(&self, t: &S) -> Self {
        Self::new(self.p.clone() * t.clone(), self.q.clone() * t.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.p.clone() + other.p.clone(),
            self.q.clone() + other.q.clone(),
        )
    }
}

/// Edge functionals of a counterclockwise convex polygon containing the
/// origin in its interior.
pub(crate) fn polygon_functionals<S: Scalar>(vertices: &[Vec2<S>]) -> Vec<EdgeFunctional<S>> {
    let n = vertices.len();
    (0..n)
        .map(|i| EdgeFunctional::through(&vertices[i], &vertices[(i + 1) % n]))
        .collect()
}

/// Gauge of a convex polygon with the origin in its interior.
pub(crate) fn polygon_gauge<S: Scalar>(edges: &[EdgeFunctional<S>], z: &Vec2<S>) -> S {
    edges
        .iter()
        .map(|e| e.eval(z))
        .fold(S::zero(), |acc, v| acc.max_of(v))
}

/// Rotates a counterclockwise cycle so it starts at the vertex of smallest
/// polar angle in `[0, 2pi)`.
pub(crate) fn start_at_smallest_angle<S: Scalar>(vertices: &mut [Vec2<S>]) {
    let half = |v: &Vec2<S>| -> u8 {
        if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
            0
        } else {
            1
        }
    };
    let first = (0..vertices.len())
        .min_by(|&i, &j| {
            let (a, b) = (&vertices[i], &vertices[j]);
            half(a).cmp(&half(b)).then_with(|| b.cross(a).sign())
        })
        .unwrap_or(0);
    vertices.rotate_left(first);
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolygonalBall<S: Scalar> {
    vertices: Vec<Vec2<S>>,
    edges: Vec<EdgeFunctional<S>>,
}

impl<S: Scalar> PolygonalBall<S> {
    /// Counterclockwise vertices, starting at the smallest polar angle.
    pub fn vertices(&self) -> &[Vec2<S>] {
        &self.vertices
    }

    /// Functionals in edge order: edge `i` joins vertex `i` and `i + 1`.
    pub fn edges(&self) -> &[EdgeFunctional<S>] {
        &self.edges
    }
}

/// Unit ball of a norm on the plane.
#[derive(Clone, Debug, PartialEq)]
pub enum UnitBall<S: Scalar> {
    Euclidean,
    Polygonal(PolygonalBall<S>),
}

impl<S: Scalar> UnitBall<S> {
    /// Validates and canonicalizes a 0-symmetric polygon given by any
    /// superset of its vertices in any order.
    pub fn polygonal(vertices: &[Vec2<S>]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::NotConvexBody("no vertices".into()));
        }
        let mut hull = convex_hull(vertices);
        if hull.len() < 3 {
            return Err(Error::NotConvexBody("vertices are collinear".into()));
        }
        let symmetric = hull.iter().all(|v| hull.iter().any(|w| w.approx_eq(&-v)));
        if !symmetric {
            return Err(Error::NotSymmetric);
        }
        let origin = Vec2::zero();
        let n = hull.len();
        if (0..n).any(|i| orient(&hull[i], &hull[(i + 1) % n], &origin) != Ordering::Greater) {
            return Err(Error::NotConvexBody("origin not strictly inside".into()));
        }
        start_at_smallest_angle(&mut hull);
        let edges = polygon_functionals(&hull);
        Ok(UnitBall::Polygonal(PolygonalBall {
            vertices: hull,
            edges,
        }))
    }

    /// Unit ball of the max norm, `[-1, 1]^2`.
    pub fn max_norm() -> Self {
        let pts = [(1, 1), (-1, 1), (-1, -1), (1, -1)].map(|(x, y)| Vec2::from_ints(x, y));
        Self::polygonal(&pts).expect("square is a valid ball")
    }

    pub fn is_polygonal(&self) -> bool {
        matches!(self, UnitBall::Polygonal(_))
    }

    pub fn as_polygon(&self) -> Option<&PolygonalBall<S>> {
        match self {
            UnitBall::Polygonal(p) => Some(p),
            UnitBall::Euclidean => None,
        }
    }

    /// The norm of `z`.
    pub fn gauge(&self, z: &Vec2<S>) -> S {
        match self {
            UnitBall::Euclidean => z.norm_squared().sqrt(),
            UnitBall::Polygonal(p) => polygon_gauge(&p.edges, z),
        }
    }

    /// Compares `gauge(z)` with `t`. Exact for the Euclidean norm over exact
    /// scalars even when the norm is irrational.
    pub fn cmp_gauge(&self, z: &Vec2<S>, t: &S) -> Ordering {
        match self {
            UnitBall::Euclidean if S::EXACT => {
                if t.is_negative() {
                    Ordering::Greater
                } else {
                    z.norm_squared().compare(&(t.clone() * t.clone()))
                }
            }
            _ => self.gauge(z).compare(t),
        }
    }

    /// Closed-ball membership.
    pub fn contains(&self, z: &Vec2<S>) -> bool {
        self.cmp_gauge(z, &S::one()) != Ordering::Greater
    }

    pub fn is_unit(&self, z: &Vec2<S>) -> bool {
        self.cmp_gauge(z, &S::one()) == Ordering::Equal
    }

    pub fn edge_functionals(&self) -> Result<&[EdgeFunctional<S>]> {
        self.as_polygon()
            .map(|p| p.edges())
            .ok_or(Error::NotPolygonal)
    }

    /// The point `t * direction`, `t > 0`, with gauge 1.
    pub fn boundary_point(&self, direction: &Vec2<S>) -> Result<Vec2<S>> {
        if direction.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let g = self.gauge(direction);
        Ok(Vec2::new(
            direction.x.clone() / g.clone(),
            direction.y.clone() / g,
        ))
    }

    /// A linear functional `g` with `g(v) = 1` and `g <= gauge`, i.e. a
    /// supporting line of the ball at the unit vector `v`. At a polygon vertex
    /// the two incident edge functionals are averaged.
    pub fn supporting_functional(&self, v: &Vec2<S>) -> EdgeFunctional<S> {
        match self {
            UnitBall::Euclidean => {
                let n2 = v.norm_squared();
                EdgeFunctional::new(v.x.clone() / n2.clone(), v.y.clone() / n2)
            }
            UnitBall::Polygonal(p) => {
                let g = self.gauge(v);
                let active: Vec<&EdgeFunctional<S>> =
                    p.edges.iter().filter(|e| e.eval(v).approx_eq(&g)).collect();
                let summed = active
                    .iter()
                    .skip(1)
                    .fold(active[0].clone(), |acc, e| acc.add(e));
                let rho = summed.eval(v);
                summed.scaled(&(S::one() / rho))
            }
        }
    }

    pub fn convert<T: Scalar>(&self) -> UnitBall<T> {
        match self {
            UnitBall::Euclidean => UnitBall::Euclidean,
            UnitBall::Polygonal(p) => {
                let verts: Vec<Vec2<T>> = p.vertices.iter().map(|v| v.convert()).collect();
                UnitBall::polygonal(&verts).expect("conversion keeps validity")
            }
        }
    }
}

/// The polygonal ball `conv{+-p : p in points}`.
pub fn symmetric_hull<S: Scalar>(points: &[Vec2<S>]) -> Result<UnitBall<S>> {
    if all_collinear_with_origin(points) {
        return Err(Error::DegenerateHull);
    }
    let signed: Vec<Vec2<S>> = points.iter().flat_map(|p| [p.clone(), -p]).collect();
    UnitBall::polygonal(&signed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Float, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn v(x: Rational, y: Rational) -> Vec2<Rational> {
        Vec2::new(x, y)
    }

    fn hexagon() -> UnitBall<Rational> {
        let pts = [
            v(q(1, 1), q(1, 1)),
            v(q(-3, 10), q(7, 5)),
            v(q(-1, 1), q(1, 1)),
            v(q(-1, 1), q(-1, 1)),
            v(q(3, 10), q(-7, 5)),
            v(q(1, 1), q(-1, 1)),
        ];
        UnitBall::polygonal(&pts).unwrap()
    }

    #[test]
    fn square_is_canonicalized() {
        let ball = UnitBall::<Rational>::max_norm();
        let verts = ball.as_polygon().unwrap().vertices();
        assert_eq!(verts[0], Vec2::from_ints(1, 1));
        assert_eq!(verts.len(), 4);
    }

    #[test]
    fn rejects_bad_polygons() {
        let seg = [Vec2::<Rational>::from_ints(1, 0), Vec2::from_ints(-1, 0)];
        assert!(matches!(
            UnitBall::polygonal(&seg),
            Err(Error::NotConvexBody(_))
        ));
        let tri = [(2, -1), (-2, -1), (0, 2)].map(|(x, y)| Vec2::<Rational>::from_ints(x, y));
        assert_eq!(UnitBall::polygonal(&tri), Err(Error::NotSymmetric));
        assert!(UnitBall::<Rational>::polygonal(&[]).is_err());
    }

    #[test]
    fn redundant_input_vertices_are_removed() {
        let pts = [(1, 1), (0, 1), (-1, 1), (-1, -1), (0, -1), (1, -1), (0, 0)]
            .map(|(x, y)| Vec2::<Rational>::from_ints(x, y));
        let ball = UnitBall::polygonal(&pts).unwrap();
        assert_eq!(ball, UnitBall::max_norm());
    }

    #[test]
    fn max_norm_gauge_values() {
        let ball = UnitBall::<Rational>::max_norm();
        assert_eq!(ball.gauge(&v(q(0, 1), q(1, 2))), q(1, 2));
        assert_eq!(ball.gauge(&v(q(1, 1), q(1, 1))), q(1, 1));
        assert_eq!(ball.gauge(&v(q(-3, 1), q(2, 1))), q(3, 1));
    }

    #[test]
    fn hexagon_has_six_unit_vertices() {
        let ball = hexagon();
        let poly = ball.as_polygon().unwrap();
        assert_eq!(poly.edges().len(), 6);
        for w in poly.vertices() {
            assert_eq!(ball.gauge(w), q(1, 1));
        }
        // (0, 1.4) lies above the edge joining (1,1) and (-0.3,1.4).
        assert_eq!(ball.gauge(&v(q(0, 1), q(7, 5))), q(91, 85));
    }

    #[test]
    fn edge_functionals_take_value_one_on_edges() {
        let ball = hexagon();
        let poly = ball.as_polygon().unwrap();
        let verts = poly.vertices();
        for (i, e) in poly.edges().iter().enumerate() {
            assert_eq!(e.eval(&verts[i]), q(1, 1));
            assert_eq!(e.eval(&verts[(i + 1) % verts.len()]), q(1, 1));
            assert_eq!(e.eval(&Vec2::zero()), q(0, 1));
        }
        assert_eq!(
            UnitBall::<Rational>::Euclidean
                .edge_functionals()
                .unwrap_err(),
            Error::NotPolygonal
        );
    }

    #[test]
    fn boundary_points() {
        let ball = UnitBall::<Rational>::max_norm();
        assert_eq!(
            ball.boundary_point(&Vec2::from_ints(2, 0)).unwrap(),
            Vec2::from_ints(1, 0)
        );
        assert_eq!(
            ball.boundary_point(&Vec2::from_ints(1, 1)).unwrap(),
            Vec2::from_ints(1, 1)
        );
        assert_eq!(
            ball.boundary_point(&Vec2::zero()),
            Err(Error::ZeroDirection)
        );
        let e = UnitBall::<Rational>::Euclidean;
        assert_eq!(
            e.boundary_point(&Vec2::from_ints(3, 4)).unwrap(),
            v(q(3, 5), q(4, 5))
        );
    }

    #[test]
    fn symmetric_hull_examples() {
        let sq =
            symmetric_hull(&[Vec2::<Rational>::from_ints(1, 1), Vec2::from_ints(-1, 1)]).unwrap();
        assert_eq!(sq, UnitBall::max_norm());
        assert_eq!(
            symmetric_hull(&[Vec2::<Rational>::from_ints(1, 0), Vec2::from_ints(2, 0)]),
            Err(Error::DegenerateHull)
        );
        let hex = symmetric_hull(
            &[(1, 0), (0, 1), (1, 1)].map(|(x, y)| Vec2::<Rational>::from_ints(x, y)),
        )
        .unwrap();
        assert_eq!(hex.as_polygon().unwrap().vertices().len(), 6);
    }

    #[test]
    fn euclidean_cmp_is_exact_for_irrational_norms() {
        let e = UnitBall::<Rational>::Euclidean;
        let z = Vec2::from_ints(1, 1);
        assert_eq!(e.cmp_gauge(&z, &q(141_421, 100_000)), Ordering::Greater);
        assert_eq!(e.cmp_gauge(&z, &q(141_422, 100_000)), Ordering::Less);
        let f = UnitBall::<Float>::Euclidean;
        assert!(f.is_unit(&Vec2::new(Float(0.6), Float(0.8))));
    }

    #[test]
    fn supporting_functional_at_vertex_and_edge() {
        let ball = UnitBall::<Rational>::max_norm();
        let g = ball.supporting_functional(&Vec2::from_ints(1, 1));
        assert_eq!(g, EdgeFunctional::new(q(1, 2), q(1, 2)));
        let g = ball.supporting_functional(&v(q(1, 2), q(1, 1)));
        assert_eq!(g, EdgeFunctional::new(q(0, 1), q(1, 1)));
    }
}
