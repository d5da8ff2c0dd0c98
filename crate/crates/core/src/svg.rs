//! Minimal SVG rendering of a single instance: the ball, the vectors from the
//! origin and highlighted sums.

use std::fmt::Write;

use crate::norms::UnitBall;
use crate::scalar::Scalar;
use crate::symmetry::{ConvexBody, ViolationWitness};
use crate::vector::Vec2;

const SIZE: f64 = 480.0;

struct Canvas {
    body: String,
    scale: f64,
}

impl Canvas {
    /// A canvas showing the square `[-extent, extent]^2`.
    fn new(extent: f64) -> Self {
        Self {
            body: String::new(),
            scale: SIZE / (2.0 * extent.max(1.0) * 1.1),
        }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        (
            SIZE / 2.0 + p[0] * self.scale,
            SIZE / 2.0 - p[1] * self.scale,
        )
    }

    fn polygon(&mut self, pts: &[[f64; 2]], fill: &str) {
        let path: Vec<String> = pts
            .iter()
            .map(|&p| {
                let (x, y) = self.map(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            self.body,
            r#"<polygon points="{}" fill="{fill}" stroke="black" stroke-width="1"/>"#,
            path.join(" ")
        );
    }

    fn circle(&mut self, r: f64) {
        let (cx, cy) = self.map([0.0, 0.0]);
        let _ = writeln!(
            self.body,
            r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{:.2}" fill="none" stroke="black"/>"#,
            r * self.scale
        );
    }

    fn arrow(&mut self, from: [f64; 2], to: [f64; 2], colour: &str) {
        let (x1, y1) = self.map(from);
        let (x2, y2) = self.map(to);
        let _ = writeln!(
            self.body,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{colour}" stroke-width="2"/>"#
        );
        let _ = writeln!(
            self.body,
            r#"<circle cx="{x2:.2}" cy="{y2:.2}" r="3" fill="{colour}"/>"#
        );
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n\
             <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.body
        )
    }
}

fn extent(points: &[[f64; 2]]) -> f64 {
    points
        .iter()
        .map(|p| p[0].abs().max(p[1].abs()))
        .fold(1.0, f64::max)
}

/// The ball, each vector as an arrow from the origin (blue) and each of
/// `sums` (red).
pub fn render_instance<S: Scalar>(
    ball: &UnitBall<S>,
    vectors: &[Vec2<S>],
    sums: &[Vec2<S>],
) -> String {
    let vs: Vec<[f64; 2]> = vectors.iter().map(Vec2::to_f64).collect();
    let ss: Vec<[f64; 2]> = sums.iter().map(Vec2::to_f64).collect();
    let verts: Vec<[f64; 2]> = ball
        .as_polygon()
        .map(|p| p.vertices().iter().map(Vec2::to_f64).collect())
        .unwrap_or_default();
    let all: Vec<[f64; 2]> = vs.iter().chain(&ss).chain(&verts).copied().collect();
    let mut c = Canvas::new(extent(&all));
    match ball {
        UnitBall::Euclidean => c.circle(1.0),
        UnitBall::Polygonal(_) => c.polygon(&verts, "#eef"),
    }
    for &v in &vs {
        c.arrow([0.0, 0.0], v, "#1f4e9c");
    }
    for &s in &ss {
        c.arrow([0.0, 0.0], s, "#c0392b");
    }
    c.finish()
}

/// A convex body with the triangle and sum of each witness.
pub fn render_body<S: Scalar>(body: &ConvexBody<S>, witnesses: &[&ViolationWitness<S>]) -> String {
    let verts: Vec<[f64; 2]> = body.vertices().iter().map(Vec2::to_f64).collect();
    let hs: Vec<[f64; 2]> = witnesses.iter().map(|w| w.h.to_f64()).collect();
    let all: Vec<[f64; 2]> = verts.iter().chain(&hs).copied().collect();
    let mut c = Canvas::new(extent(&all));
    c.polygon(&verts, "#efe");
    for (w, colour) in witnesses.iter().zip(["#1f4e9c", "#8e44ad"]) {
        let tri = [w.a.to_f64(), w.b.to_f64(), w.c.to_f64()];
        c.polygon(&tri, "none");
        for p in tri {
            c.arrow([0.0, 0.0], p, colour);
        }
        c.arrow([0.0, 0.0], w.h.to_f64(), "#c0392b");
    }
    c.finish()
}
