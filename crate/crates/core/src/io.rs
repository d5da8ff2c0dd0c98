//! JSON file formats.
//!
//! Coordinates are strings holding an integer, a decimal or `p/q`, so that
//! exact inputs survive the round trip:
//!
//! ```json
//! {"type":"polygonal","vertices":[["1","1"],["-1","1"],["-1","-1"],["1","-1"]]}
//! {"type":"euclidean"}
//! {"vectors":[["1","1"],["-1","1"]]}
//! {"vertices":[["2","-1"],["-2","-1"],["0","2"]]}
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::norms::UnitBall;
use crate::scalar::Scalar;
use crate::vector::{Vec2, VectorMultiset};

pub(crate) fn ser_scalar<S: Scalar, Z: Serializer>(v: &S, s: Z) -> Result<Z::Ok, Z::Error> {
    s.serialize_str(&v.to_string())
}

type RawPoint = [String; 2];

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum BallFile {
    Euclidean,
    Polygonal { vertices: Vec<RawPoint> },
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VectorsFile {
    pub vectors: Vec<RawPoint>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PolygonFile {
    pub vertices: Vec<RawPoint>,
}

fn parse_point<S: Scalar>(raw: &RawPoint) -> Result<Vec2<S>> {
    Ok(Vec2::new(S::parse_str(&raw[0])?, S::parse_str(&raw[1])?))
}

fn parse_points<S: Scalar>(raw: &[RawPoint]) -> Result<Vec<Vec2<S>>> {
    raw.iter().map(parse_point).collect()
}

fn raw_points<S: Scalar>(points: &[Vec2<S>]) -> Vec<RawPoint> {
    points
        .iter()
        .map(|p| [p.x.to_string(), p.y.to_string()])
        .collect()
}

pub fn parse_ball<S: Scalar>(json: &str) -> Result<UnitBall<S>> {
    match serde_json::from_str::<BallFile>(json)? {
        BallFile::Euclidean => Ok(UnitBall::Euclidean),
        BallFile::Polygonal { vertices } => UnitBall::polygonal(&parse_points(&vertices)?),
    }
}

pub fn ball_to_json<S: Scalar>(ball: &UnitBall<S>) -> String {
    let file = match ball {
        UnitBall::Euclidean => BallFile::Euclidean,
        UnitBall::Polygonal(p) => BallFile::Polygonal {
            vertices: raw_points(p.vertices()),
        },
    };
    serde_json::to_string(&file).expect("ball serializes")
}

pub fn parse_vectors<S: Scalar>(json: &str) -> Result<VectorMultiset<S>> {
    let file: VectorsFile = serde_json::from_str(json)?;
    Ok(parse_points(&file.vectors)?.into())
}

pub fn vectors_to_json<S: Scalar>(vectors: &VectorMultiset<S>) -> String {
    serde_json::to_string(&VectorsFile {
        vectors: raw_points(vectors.as_slice()),
    })
    .expect("vectors serialize")
}

/// Vertices of a polygon file, unvalidated.
pub fn parse_polygon<S: Scalar>(json: &str) -> Result<Vec<Vec2<S>>> {
    let file: PolygonFile = serde_json::from_str(json)?;
    parse_points(&file.vertices)
}

pub fn read_to_string(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
