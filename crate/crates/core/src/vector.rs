//! Plane vectors and ordered multisets of them.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Vec2<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Vec2<S> {
    pub fn new(x: S, y: S) -> Self {
        Self { x, y }
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero())
    }

    /// Integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(S::from_i64(x), S::from_i64(y))
    }

    pub fn dot(&self, other: &Self) -> S {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    /// z-component of the 3D cross product.
    pub fn cross(&self, other: &Self) -> S {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    pub fn scale(&self, t: &S) -> Self {
        Self::new(self.x.clone() * t.clone(), self.y.clone() * t.clone())
    }

    /// Counterclockwise quarter turn.
    pub fn perp(&self) -> Self {
        Self::new(-self.y.clone(), self.x.clone())
    }

    pub fn norm_squared(&self) -> S {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Coordinate-wise equality under [`Scalar::compare`].
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.x.approx_eq(&other.x) && self.y.approx_eq(&other.y)
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [self.x.to_f64(), self.y.to_f64()]
    }

    pub fn convert<T: Scalar>(&self) -> Vec2<T> {
        Vec2::new(
            crate::scalar::convert(&self.x),
            crate::scalar::convert(&self.y),
        )
    }
}

impl<S: Scalar> Add for &Vec2<S> {
    type Output = Vec2<S>;
    fn add(self, rhs: &Vec2<S>) -> Vec2<S> {
        Vec2::new(
            self.x.clone() + rhs.x.clone(),
            self.y.clone() + rhs.y.clone(),
        )
    }
}

impl<S: Scalar> Add for Vec2<S> {
    type Output = Vec2<S>;
    fn add(self, rhs: Vec2<S>) -> Vec2<S> {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<S: Scalar> Sub for &Vec2<S> {
    type Output = Vec2<S>;
    fn sub(self, rhs: &Vec2<S>) -> Vec2<S> {
        Vec2::new(
            self.x.clone() - rhs.x.clone(),
            self.y.clone() - rhs.y.clone(),
        )
    }
}

impl<S: Scalar> Sub for Vec2<S> {
    type Output = Vec2<S>;
    fn sub(self, rhs: Vec2<S>) -> Vec2<S> {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<S: Scalar> Neg for &Vec2<S> {
    type Output = Vec2<S>;
    fn neg(self) -> Vec2<S> {
        Vec2::new(-self.x.clone(), -self.y.clone())
    }
}

impl<S: Scalar> Neg for Vec2<S> {
    type Output = Vec2<S>;
    fn neg(self) -> Vec2<S> {
        Vec2::new(-self.x, -self.y)
    }
}

impl<S: Scalar> fmt::Display for Vec2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Serialized as `["x","y"]`.
impl<S: Scalar> Serialize for Vec2<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> Result<Z::Ok, Z::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.x.to_string())?;
        t.serialize_element(&self.y.to_string())?;
        t.end()
    }
}

/// Sum of a sequence of vectors.
pub fn sum<'a, S: Scalar>(items: impl IntoIterator<Item = &'a Vec2<S>>) -> Vec2<S> {
    items.into_iter().fold(Vec2::zero(), |acc, v| &acc + v)
}

/// Ordered multiset of plane vectors; duplicates are kept.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent, bound = "")]
pub struct VectorMultiset<S: Scalar> {
    items: Vec<Vec2<S>>,
}

impl<S: Scalar> VectorMultiset<S> {
    pub fn new(items: Vec<Vec2<S>>) -> Self {
        Self { items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vec2<S>> {
        self.items.iter()
    }

    pub fn as_slice(&self) -> &[Vec2<S>] {
        &self.items
    }

    pub fn into_vec(self) -> Vec<Vec2<S>> {
        self.items
    }

    pub fn total(&self) -> Vec2<S> {
        sum(&self.items)
    }

    /// Sum of the vectors at `indices`.
    pub fn subset_sum(&self, indices: &[usize]) -> Vec2<S> {
        indices
            .iter()
            .fold(Vec2::zero(), |acc, &i| &acc + &self.items[i])
    }
}

impl<S: Scalar> Index<usize> for VectorMultiset<S> {
    type Output = Vec2<S>;
    fn index(&self, i: usize) -> &Vec2<S> {
        &self.items[i]
    }
}

impl<S: Scalar> From<Vec<Vec2<S>>> for VectorMultiset<S> {
    fn from(items: Vec<Vec2<S>>) -> Self {
        Self::new(items)
    }
}

impl<S: Scalar> FromIterator<Vec2<S>> for VectorMultiset<S> {
    fn from_iter<I: IntoIterator<Item = Vec2<S>>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl<'a, S: Scalar> IntoIterator for &'a VectorMultiset<S> {
    type Item = &'a Vec2<S>;
    type IntoIter = std::slice::Iter<'a, Vec2<S>>;
    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}
