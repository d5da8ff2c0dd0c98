//! Convex-position primitives: hulls, origin classification, strict
//! separation and Carathéodory triples.
//!
//! All predicates reduce to the sign of a 2x2 determinant, so they are exact
//! over [`Rational`](crate::scalar::Rational).

use std::cmp::Ordering;

use serde::Serialize;

use crate::scalar::Scalar;
use crate::vector::Vec2;

/// Position of the origin relative to the convex hull of a finite set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OriginPosition {
    Interior,
    Boundary,
    Exterior,
}

/// Sign of `(b - a) x (c - a)`: `Greater` for a left turn.
pub fn orient<S: Scalar>(a: &Vec2<S>, b: &Vec2<S>, c: &Vec2<S>) -> Ordering {
    (b - a).cross(&(c - a)).sign()
}

fn lex_cmp<S: Scalar>(a: &Vec2<S>, b: &Vec2<S>) -> Ordering {
    a.x.compare(&b.x).then_with(|| a.y.compare(&b.y))
}

/// Counterclockwise extreme points without collinear vertices, starting at the
/// lexicographically smallest point. Degenerate inputs come back as a single
/// point or the two endpoints of a segment.
pub fn convex_hull<S: Scalar>(points: &[Vec2<S>]) -> Vec<Vec2<S>> {
    let mut pts: Vec<Vec2<S>> = points.to_vec();
    pts.sort_by(lex_cmp);
    pts.dedup_by(|a, b| a.approx_eq(b));
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<Vec2<S>> = Vec::with_capacity(pts.len() + 1);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Vec2<S>>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for p in iter {
            while hull.len() >= start + 2
                && orient(&hull[hull.len() - 2], &hull[hull.len() - 1], p) != Ordering::Greater
            {
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull.pop();
    }
    if hull.len() < 3 {
        // All points collinear.
        return vec![pts[0].clone(), pts[pts.len() - 1].clone()];
    }
    hull
}

/// Classifies `p` against `conv(points)`. Hulls without interior (points,
/// segments) never report `Interior`.
pub fn point_position<S: Scalar>(points: &[Vec2<S>], p: &Vec2<S>) -> OriginPosition {
    assert!(!points.is_empty(), "empty point set");
    let hull = convex_hull(points);
    match hull.len() {
        1 => {
            if hull[0].approx_eq(p) {
                OriginPosition::Boundary
            } else {
                OriginPosition::Exterior
            }
        }
        2 => {
            if on_segment(&hull[0], &hull[1], p) {
                OriginPosition::Boundary
            } else {
                OriginPosition::Exterior
            }
        }
        n => {
            let mut on_edge = false;
            for i in 0..n {
                match orient(&hull[i], &hull[(i + 1) % n], p) {
                    Ordering::Less => return OriginPosition::Exterior,
                    Ordering::Equal => on_edge = true,
                    Ordering::Greater => {}
                }
            }
            if on_edge {
                OriginPosition::Boundary
            } else {
                OriginPosition::Interior
            }
        }
    }
}

/// Closed-segment membership.
pub fn on_segment<S: Scalar>(a: &Vec2<S>, b: &Vec2<S>, p: &Vec2<S>) -> bool {
    orient(a, b, p) == Ordering::Equal && !(p - a).dot(&(p - b)).is_positive()
}

pub fn origin_in_hull<S: Scalar>(points: &[Vec2<S>]) -> OriginPosition {
    point_position(points, &Vec2::zero())
}

/// Closed convex-hull membership of `p`.
pub fn in_hull<S: Scalar>(points: &[Vec2<S>], p: &Vec2<S>) -> bool {
    point_position(points, p) != OriginPosition::Exterior
}

/// A direction `u` with `u . p > 0` for every point, present exactly when the
/// origin is outside the hull.
pub fn strict_separating_direction<S: Scalar>(points: &[Vec2<S>]) -> Option<Vec2<S>> {
    assert!(!points.is_empty(), "empty point set");
    let hull = convex_hull(points);
    let origin = Vec2::zero();
    let candidate = match hull.len() {
        1 => hull[0].clone(),
        2 => {
            let (a, b) = (&hull[0], &hull[1]);
            let edge = b - a;
            match orient(a, b, &origin) {
                // origin on the line through the segment but outside it
                Ordering::Equal => a.clone(),
                // inward normal points away from the origin's side
                Ordering::Greater => -edge.perp(),
                Ordering::Less => edge.perp(),
            }
        }
        n => {
            // The hull edge whose supporting line has the origin strictly on
            // its outer side; its inward normal separates.
            let i = (0..n)
                .find(|&i| orient(&hull[i], &hull[(i + 1) % n], &origin) == Ordering::Less)?;
            (&hull[(i + 1) % n] - &hull[i]).perp()
        }
    };
    if candidate.is_zero() {
        return None;
    }
    points
        .iter()
        .all(|p| candidate.dot(p).is_positive())
        .then_some(candidate)
}

/// Lexicographically first `i < j < k` with `0 ∈ conv{p_i, p_j, p_k}`.
pub fn caratheodory_triple<S: Scalar>(points: &[Vec2<S>]) -> Option<(usize, usize, usize)> {
    let n = points.len();
    if n < 3 || origin_in_hull(points) == OriginPosition::Exterior {
        return None;
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let tri = [points[i].clone(), points[j].clone(), points[k].clone()];
                if origin_in_hull(&tri) != OriginPosition::Exterior {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// True when all vectors lie on one line through the origin (zero vectors
/// included).
pub fn all_collinear_with_origin<S: Scalar>(points: &[Vec2<S>]) -> bool {
    match points.iter().find(|p| !p.is_zero()) {
        None => true,
        Some(r) => points.iter().all(|p| r.cross(p).is_zero()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn v(x: i64, y: i64) -> Vec2<Rational> {
        Vec2::from_ints(x, y)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn hull_drops_interior_and_collinear() {
        let pts = vec![v(0, 0), v(1, 0), v(0, 1), Vec2::new(q(1, 5), q(1, 5))];
        assert_eq!(convex_hull(&pts), vec![v(0, 0), v(1, 0), v(0, 1)]);
        let square = vec![v(0, 0), v(1, 0), v(2, 0), v(2, 2), v(0, 2), v(1, 2)];
        assert_eq!(convex_hull(&square).len(), 4);
        assert_eq!(convex_hull(&[v(1, 1)]), vec![v(1, 1)]);
        assert_eq!(
            convex_hull(&[v(2, 2), v(0, 0), v(1, 1)]),
            vec![v(0, 0), v(2, 2)]
        );
    }

    #[test]
    fn origin_classification() {
        assert_eq!(
            origin_in_hull(&[v(1, 0), v(0, 1), v(-1, -1)]),
            OriginPosition::Interior
        );
        assert_eq!(
            origin_in_hull(&[v(1, 0), v(-1, 0), v(0, 1)]),
            OriginPosition::Boundary
        );
        assert_eq!(
            origin_in_hull(&[v(1, 1), v(2, 1), v(1, 2)]),
            OriginPosition::Exterior
        );
        assert_eq!(origin_in_hull(&[v(0, 0)]), OriginPosition::Boundary);
        assert_eq!(
            origin_in_hull(&[v(1, 0), v(-1, 0)]),
            OriginPosition::Boundary
        );
        assert_eq!(
            origin_in_hull(&[v(1, 0), v(2, 0)]),
            OriginPosition::Exterior
        );
    }

    #[test]
    fn separation_examples() {
        let u = strict_separating_direction(&[v(1, 0), v(0, 1)]).unwrap();
        assert!(u.dot(&v(1, 0)).is_positive() && u.dot(&v(0, 1)).is_positive());
        assert!(strict_separating_direction(&[v(1, 0), v(-1, 0), v(0, 1)]).is_none());
        let u = strict_separating_direction(&[v(1, 0), v(3, 0)]).unwrap();
        assert!(u.dot(&v(3, 0)).is_positive());
        assert!(strict_separating_direction(&[v(1, 1), v(2, -1)]).is_some());
        assert!(strict_separating_direction(&[v(0, 0)]).is_none());
    }

    #[test]
    fn caratheodory_examples() {
        assert_eq!(
            caratheodory_triple(&[v(1, 0), v(0, 1), v(-1, -1), v(5, 5)]),
            Some((0, 1, 2))
        );
        assert_eq!(caratheodory_triple(&[v(1, 1), v(2, 1), v(1, 2)]), None);
    }

    #[test]
    fn segment_membership() {
        assert!(on_segment(&v(-1, 0), &v(1, 0), &v(0, 0)));
        assert!(!on_segment(&v(1, 0), &v(2, 0), &v(0, 0)));
    }
}
