//! Polynomial invariants of the pair group: the Reynolds operator, the
//! generating set for four vertices and the four-invariant separator for
//! simple graphs on four vertices.

mod poly;

use std::collections::BTreeMap;

pub use poly::{Monomial, Polynomial};

use crate::error::{Error, Result};
use crate::pairgroup::{edge_count, enumerate_group, simple_graphs, EdgeVector, Limits};
use crate::scalar::Scalar;

/// Orbit average `R(f) = (1/n!) Σ_τ τ·f` over the pair group on `n` vertices.
pub fn reynolds(f: &Polynomial, n: usize) -> Result<Polynomial> {
    reynolds_with(f, n, Limits::default())
}

pub fn reynolds_with(f: &Polynomial, n: usize, limits: Limits) -> Result<Polynomial> {
    let m = edge_count(n);
    if f.nvars() != m {
        return Err(Error::DimensionMismatch { expected: m, found: f.nvars() });
    }
    let group = enumerate_group(n, limits)?;
    let mut sum = Polynomial::zero(m);
    for tau in &group {
        for (mono, c) in f.terms() {
            sum.add_term(mono.act(tau), c.clone());
        }
    }
    let order = Scalar::from_integer(group.len().into());
    Ok(sum.scale(&order.recip()))
}

/// `R(x^a)` for a monomial given as `(variable, exponent)` pairs.
pub fn reynolds_of_monomial(powers: &[(usize, u32)], n: usize) -> Result<Polynomial> {
    let m = edge_count(n);
    reynolds(&Polynomial::term(Monomial::from_powers(m, powers)?, Scalar::from_integer(1.into())), n)
}

/// Labels for [`n4_generating_set`], in the same order.
pub const N4_GENERATOR_LABELS: [&str; 9] =
    ["R(x1)", "R(x1^2)", "R(x1 x6)", "R(x1^3)", "R(x1 x2 x3)", "R(x1^4)", "R(x1^5)", "R(x1^2 x2)", "R(x1^3 x2)"];

const N4_GENERATOR_MONOMIALS: [&[(usize, u32)]; 9] = [
    &[(1, 1)],
    &[(1, 2)],
    &[(1, 1), (6, 1)],
    &[(1, 3)],
    &[(1, 1), (2, 1), (3, 1)],
    &[(1, 4)],
    &[(1, 5)],
    &[(1, 2), (2, 1)],
    &[(1, 3), (2, 1)],
];

/// The nine orbit averages generating the invariant ring for `n = 4`: seven
/// with known closed forms, then the mixed `R(x1^2 x2)` and `R(x1^3 x2)`.
pub fn n4_generating_set() -> Vec<Polynomial> {
    N4_GENERATOR_MONOMIALS
        .iter()
        .map(|powers| reynolds_of_monomial(powers, 4).expect("n = 4 is within limits"))
        .collect()
}

/// `R(x1), R(x1 x6), R(x1 x2), R(x1 x2 x3)` for `n = 4`.
pub fn simple_graph_invariants() -> Vec<Polynomial> {
    let monomials: [&[(usize, u32)]; 4] = [&[(1, 1)], &[(1, 1), (6, 1)], &[(1, 1), (2, 1)], &[(1, 1), (2, 1), (3, 1)]];
    monomials.iter().map(|powers| reynolds_of_monomial(powers, 4).expect("n = 4 is within limits")).collect()
}

pub fn evaluate(f: &Polynomial, x: &EdgeVector) -> Result<Scalar> {
    f.evaluate(x.weights())
}

/// One class of simple graphs on four vertices sharing an invariant tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantClass {
    pub key: Vec<Scalar>,
    /// Members in lexicographic vector order.
    pub members: Vec<EdgeVector>,
}

/// Partitions all 64 simple graphs on four vertices by the values of
/// [`simple_graph_invariants`]. Classes come out sorted by key.
pub fn classify_simple_graphs_n4() -> Vec<InvariantClass> {
    let invariants = simple_graph_invariants();
    let mut classes: BTreeMap<Vec<Scalar>, Vec<EdgeVector>> = BTreeMap::new();
    for x in simple_graphs(4).expect("n = 4 is valid") {
        let key = invariants.iter().map(|f| evaluate(f, &x).expect("six variables")).collect();
        classes.entry(key).or_default().push(x);
    }
    classes.into_iter().map(|(key, members)| InvariantClass { key, members }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::new(n.into(), d.into())
    }

    /// `c * Σ` of the listed monomials, each given as variable lists.
    fn expansion(coeff: Scalar, monomials: &[&[usize]]) -> Polynomial {
        let mut p = Polynomial::zero(6);
        for vars in monomials {
            let powers: Vec<(usize, u32)> = vars.iter().map(|&v| (v, 1)).collect();
            p.add_term(Monomial::from_powers(6, &powers).unwrap(), coeff.clone());
        }
        p
    }

    #[test]
    fn reynolds_of_x1() {
        let r = reynolds_of_monomial(&[(1, 1)], 4).unwrap();
        assert_eq!(r, expansion(q(1, 6), &[&[1], &[2], &[3], &[4], &[5], &[6]]));
        assert_eq!(r.to_text(), "1/6 * x1^1\n1/6 * x2^1\n1/6 * x3^1\n1/6 * x4^1\n1/6 * x5^1\n1/6 * x6^1\n");
    }

    #[test]
    fn reynolds_of_x1x6() {
        let r = reynolds_of_monomial(&[(1, 1), (6, 1)], 4).unwrap();
        assert_eq!(r, expansion(q(1, 3), &[&[1, 6], &[2, 5], &[3, 4]]));
    }

    #[test]
    fn reynolds_of_x1x2x3() {
        let r = reynolds_of_monomial(&[(1, 1), (2, 1), (3, 1)], 4).unwrap();
        assert_eq!(r, expansion(q(1, 4), &[&[1, 2, 3], &[1, 4, 5], &[2, 4, 6], &[3, 5, 6]]));
    }

    #[test]
    fn reynolds_rejects_wrong_variable_count() {
        let f = Polynomial::variable(5, 1).unwrap();
        assert!(reynolds(&f, 4).is_err());
        let f = Polynomial::variable(36, 1).unwrap();
        assert!(matches!(reynolds(&f, 9), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn generating_set_shape() {
        let gens = n4_generating_set();
        assert_eq!(gens.len(), 9);
        let degrees: Vec<u32> = gens.iter().map(|g| g.total_degree().unwrap()).collect();
        assert_eq!(degrees, vec![1, 2, 2, 3, 3, 4, 5, 3, 4]);
        // power sums: (1/6)(x1^k + ... + x6^k)
        for (idx, k) in [(1usize, 2u32), (3, 3), (5, 4), (6, 5)] {
            let mut expect = Polynomial::zero(6);
            for v in 1..=6 {
                expect.add_term(Monomial::from_powers(6, &[(v, k)]).unwrap(), q(1, 6));
            }
            assert_eq!(gens[idx], expect, "{}", N4_GENERATOR_LABELS[idx]);
        }
    }

    #[test]
    fn simple_invariants_values() {
        let inv = simple_graph_invariants();
        assert_eq!(inv.len(), 4);
        assert_eq!(inv[0], reynolds_of_monomial(&[(1, 1)], 4).unwrap());
        let zero = EdgeVector::zeros(4).unwrap();
        assert!(inv.iter().all(|f| evaluate(f, &zero).unwrap() == q(0, 1)));
        let p4 = EdgeVector::from_integers(4, &[1, 0, 0, 1, 0, 1]).unwrap();
        assert_eq!(evaluate(&inv[0], &p4).unwrap(), q(1, 2));
        let k4 = EdgeVector::from_integers(4, &[1; 6]).unwrap();
        assert_eq!(evaluate(&inv[1], &k4).unwrap(), q(1, 1));
    }

    #[test]
    fn eleven_classes() {
        let classes = classify_simple_graphs_n4();
        assert_eq!(classes.len(), 11);
        assert_eq!(classes.iter().map(|c| c.members.len()).sum::<usize>(), 64);
    }
}
