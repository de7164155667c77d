//! Sorting as a moving frame for `S_n` permuting the coordinates of a point.
//!
//! The action is `(σ·v)_i = v_{σ⁻¹(i)}`, the same convention as the pair
//! group acting on edge vectors; with it `frame(σ·v) = frame(v) ∘ σ⁻¹`
//! whenever the entries of `v` are distinct.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pairgroup::VertexPermutation;
use crate::scalar::Scalar;

/// A point of `Q^n`, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointVector {
    values: Vec<Scalar>,
}

impl PointVector {
    pub fn new(values: Vec<Scalar>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        Ok(PointVector { values })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        PointVector::new(values.iter().map(|&v| crate::scalar::from_i64(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }
}

/// `σ·v`: the entry at position `i` moves to position `σ(i)`.
pub fn permute(v: &PointVector, sigma: &VertexPermutation) -> Result<PointVector> {
    if sigma.degree() != v.len() {
        return Err(Error::DimensionMismatch { expected: v.len(), found: sigma.degree() });
    }
    let mut out = vec![Scalar::zero(); v.len()];
    for (i, x) in v.values.iter().enumerate() {
        out[sigma.images0()[i]] = x.clone();
    }
    Ok(PointVector { values: out })
}

/// Sorted copy of `v` and the frame taking `v` to it.
///
/// Equal values keep their original relative order, which makes the frame
/// the lex-smallest permutation achieving the sorted vector.
pub fn sort_frame(v: &PointVector) -> (PointVector, VertexPermutation) {
    let mut order: Vec<usize> = (0..v.len()).collect();
    order.sort_by(|&a, &b| v.values[a].cmp(&v.values[b]));
    let mut rank = vec![0; v.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let sorted = order.iter().map(|&i| v.values[i].clone()).collect();
    (PointVector { values: sorted }, VertexPermutation::from_zero_based(rank))
}

pub fn order_statistics(v: &PointVector) -> PointVector {
    sort_frame(v).0
}

/// `e_k(v)`, the sum of all products of `k` distinct coordinates.
pub fn elementary_symmetric(k: usize, v: &PointVector) -> Result<Scalar> {
    let n = v.len();
    if k == 0 || k > n {
        return Err(Error::DegreeOutOfRange { k, n });
    }
    // e[j] after processing a prefix holds e_j of that prefix.
    let mut e = vec![Scalar::zero(); k + 1];
    e[0] = Scalar::one();
    for x in &v.values {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * x;
            e[j] += add;
        }
    }
    Ok(e.swap_remove(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(v: &[i64]) -> PointVector {
        PointVector::from_integers(v).unwrap()
    }

    #[test]
    fn sorts_distinct() {
        let (sorted, frame) = sort_frame(&pv(&[3, 1, 2]));
        assert_eq!(sorted, pv(&[1, 2, 3]));
        assert_eq!(permute(&pv(&[3, 1, 2]), &frame).unwrap(), sorted);
    }

    #[test]
    fn constant_vector_has_identity_frame() {
        let (sorted, frame) = sort_frame(&pv(&[5, 5, 5]));
        assert_eq!(sorted, pv(&[5, 5, 5]));
        assert!(frame.is_identity());
    }

    #[test]
    fn repeated_values_take_lex_smallest_frame() {
        let v = pv(&[2, 1, 2, 1]);
        let (sorted, frame) = sort_frame(&v);
        assert_eq!(sorted, pv(&[1, 1, 2, 2]));
        // Oracle: every achiever among the 24 permutations, lex-min taken.
        let achievers: Vec<VertexPermutation> =
            VertexPermutation::all(4).filter(|s| permute(&v, s).unwrap() == sorted).collect();
        assert_eq!(achievers.len(), 4);
        assert_eq!(frame, achievers[0]);
        assert_eq!(frame.one_line(), vec![3, 1, 4, 2]);
    }

    #[test]
    fn order_statistics_small() {
        assert_eq!(order_statistics(&pv(&[0, -1])), pv(&[-1, 0]));
    }

    #[test]
    fn elementary_symmetric_small() {
        let v = pv(&[1, 2, 3]);
        assert_eq!(elementary_symmetric(1, &v).unwrap(), crate::scalar::from_i64(6));
        assert_eq!(elementary_symmetric(2, &v).unwrap(), crate::scalar::from_i64(11));
        assert_eq!(elementary_symmetric(3, &v).unwrap(), crate::scalar::from_i64(6));
        assert!(elementary_symmetric(0, &v).is_err());
        assert!(elementary_symmetric(4, &v).is_err());
    }

    #[test]
    fn empty_point_rejected() {
        assert!(PointVector::new(vec![]).is_err());
    }
}
