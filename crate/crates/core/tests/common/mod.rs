#![allow(dead_code)]

use num_bigint::BigInt;
use pairframe::{edge_count, EdgeVector, Scalar, VertexPermutation};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Small-denominator rationals so that ties actually occur.
pub fn random_rational(rng: &mut StdRng) -> Scalar {
    q(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

pub fn random_edge_vector(rng: &mut StdRng, n: usize) -> EdgeVector {
    let w = (0..edge_count(n)).map(|_| random_rational(rng)).collect();
    EdgeVector::new(n, w).unwrap()
}

/// Weighted graph drawn from a tiny weight alphabet, so symmetric graphs are common.
pub fn random_degenerate(rng: &mut StdRng, n: usize) -> EdgeVector {
    let k = rng.gen_range(1..=2);
    let w = (0..edge_count(n)).map(|_| q(rng.gen_range(0..=k), 1)).collect();
    EdgeVector::new(n, w).unwrap()
}

/// All weights pairwise distinct.
pub fn random_distinct(rng: &mut StdRng, n: usize) -> EdgeVector {
    let m = edge_count(n);
    let mut values: Vec<i64> = (0..m as i64).map(|v| v * 7 - 11).collect();
    values.shuffle(rng);
    let w = values.into_iter().map(|v| q(v, 3)).collect();
    EdgeVector::new(n, w).unwrap()
}

pub fn random_simple(rng: &mut StdRng, n: usize) -> EdgeVector {
    let w = (0..edge_count(n)).map(|_| q(rng.gen_range(0..=1), 1)).collect();
    EdgeVector::new(n, w).unwrap()
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> VertexPermutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    VertexPermutation::from_one_line(&images).unwrap()
}

/// Independent orbit oracle: the set of all relabelings, computed directly
/// from the pair definition `{i,j} -> {σ(i),σ(j)}` without the library's
/// induced-action tables.
pub fn orbit_by_definition(x: &EdgeVector) -> Vec<Vec<Scalar>> {
    let n = x.n();
    let mut out = Vec::new();
    for sigma in VertexPermutation::all(n) {
        let mut image = vec![q(0, 1); edge_count(n)];
        for i in 1..=n {
            for j in i + 1..=n {
                let (a, b) = (sigma.image(i), sigma.image(j));
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                image[pair_rank(a, b, n)] = x.weight(i, j).unwrap().clone();
            }
        }
        out.push(image);
    }
    out
}

/// 0-based lex rank of the pair (a, b), a < b, by counting.
pub fn pair_rank(a: usize, b: usize, n: usize) -> usize {
    let mut r = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if (i, j) == (a, b) {
                return r;
            }
            r += 1;
        }
    }
    unreachable!()
}
