use serde::Serialize;

use super::ksum::KSum;
use crate::scalar::Scalar;
use crate::vector::Vec2;

/// Which statement a report is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremId {
    /// Odd number of unit vectors in a closed halfplane.
    T1,
    /// Unit vectors whose 3-sums all have norm at least 1.
    T2,
    /// Vectors in the ball whose 3-sums all have norm larger than 1.
    T3,
    /// Every k-sum outside the ball once every 3-sum is.
    Corollary,
}

/// Outcome of checking one theorem on one instance.
///
/// A report with `hypothesis_holds && !conclusion_holds` is a counterexample
/// to the theorem; verifiers never raise it as an error.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct VerifyReport<S: Scalar> {
    pub theorem: TheoremId,
    #[serde(rename = "hypothesis")]
    pub hypothesis_holds: bool,
    #[serde(rename = "conclusion")]
    pub conclusion_holds: bool,
    pub total: Vec2<S>,
    #[serde(serialize_with = "crate::io::ser_scalar")]
    pub total_norm: S,
    pub witnesses: Vec<KSum<S>>,
    pub notes: String,
}

impl<S: Scalar> VerifyReport<S> {
    /// True unless the instance contradicts the theorem.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_holds || self.conclusion_holds
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
