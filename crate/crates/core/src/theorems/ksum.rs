use itertools::Itertools;
use serde::Serialize;

use crate::scalar::Scalar;
use crate::vector::{Vec2, VectorMultiset};

/// A subset of indices together with the sum of the vectors it selects.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct KSum<S: Scalar> {
    pub subset: Vec<usize>,
    pub value: Vec2<S>,
}

impl<S: Scalar> KSum<S> {
    pub fn of(vectors: &VectorMultiset<S>, subset: Vec<usize>) -> Self {
        let value = vectors.subset_sum(&subset);
        Self { subset, value }
    }

    pub fn size(&self) -> usize {
        self.subset.len()
    }
}

/// All `k`-element subsets in lexicographic order with their sums. `k = 0`
/// yields the single empty subset with sum zero.
pub fn all_ksums<S: Scalar>(vectors: &VectorMultiset<S>, k: usize) -> Vec<KSum<S>> {
    assert!(k <= vectors.len(), "k exceeds the number of vectors");
    (0..vectors.len())
        .combinations(k)
        .map(|subset| KSum::of(vectors, subset))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn empty_subset_sums_to_zero() {
        let v: VectorMultiset<Rational> = vec![Vec2::from_ints(1, 0), Vec2::from_ints(0, 1)].into();
        let sums = all_ksums(&v, 0);
        assert_eq!(
            sums,
            vec![KSum {
                subset: vec![],
                value: Vec2::zero()
            }]
        );
    }

    #[test]
    fn full_subset_of_three() {
        let v: VectorMultiset<Rational> = vec![
            Vec2::from_ints(1, 1),
            Vec2::from_ints(-1, 1),
            Vec2::new(q(0, 1), q(-1, 2)),
        ]
        .into();
        let sums = all_ksums(&v, 3);
        assert_eq!(sums.len(), 1);
        assert_eq!(sums[0].value, Vec2::new(q(0, 1), q(3, 2)));
    }

    #[test]
    fn six_choose_three_is_twenty_in_lex_order() {
        let v: VectorMultiset<Rational> = (0..6).map(|i| Vec2::from_ints(i, 1)).collect();
        let sums = all_ksums(&v, 3);
        assert_eq!(sums.len(), 20);
        assert_eq!(sums[0].subset, vec![0, 1, 2]);
        assert_eq!(sums[19].subset, vec![3, 4, 5]);
        assert!(sums.windows(2).all(|w| w[0].subset < w[1].subset));
    }
}
