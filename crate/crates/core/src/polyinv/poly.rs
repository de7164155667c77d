//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Text form, one term per line in descending graded-lex order:
//!
//! ```text
//! 1/3 * x1^1 x6^1
//! 1/3 * x2^1 x5^1
//! 1/3 * x3^1 x4^1
//! ```
//!
//! A constant term is written as the bare coefficient, the zero polynomial
//! as `0`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pairgroup::PairAction;
use crate::scalar::{parse_scalar, LiteralSyntax, Scalar};

/// Exponent vector over a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exponents: vec![0; nvars] }
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// Builds a monomial from `(variable, exponent)` pairs, variables 1-based.
    pub fn from_powers(nvars: usize, powers: &[(usize, u32)]) -> Result<Self> {
        let mut exponents = vec![0; nvars];
        for &(var, e) in powers {
            if var == 0 || var > nvars {
                return Err(Error::Polynomial(format!("variable x{var} outside x1..x{nvars}")));
            }
            exponents[var - 1] += e;
        }
        Ok(Monomial { exponents })
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `τ·x^a`; with `(τ·f)(x) = f(τ⁻¹·x)` the variable `x_s` becomes `x_{τ(s)}`.
    pub fn act(&self, tau: &PairAction) -> Monomial {
        let mut out = vec![0; self.exponents.len()];
        for (s, &t) in tau.index_map0().iter().enumerate() {
            out[t] = self.exponents[s];
        }
        Monomial { exponents: out }
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::one();
        for (x, &e) in point.iter().zip(&self.exponents) {
            if e > 0 {
                acc *= num_traits::pow(x.clone(), e as usize);
            }
        }
        acc
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect() }
    }

    /// Parses `x1^2 x3`, `x1^2*x3` or `1`.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let t = text.trim();
        if t == "1" {
            return Ok(Monomial::one(nvars));
        }
        let mut powers = Vec::new();
        for factor in t.split(|c: char| c == '*' || c.is_whitespace()).filter(|f| !f.is_empty()) {
            let bad = || Error::Polynomial(format!("bad factor {factor:?}"));
            let body = factor.strip_prefix('x').ok_or_else(bad)?;
            let (var, exp) = match body.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let var: usize = var.parse().map_err(|_| bad())?;
            powers.push((var, exp));
        }
        if powers.is_empty() {
            return Err(Error::Polynomial(format!("empty monomial {text:?}")));
        }
        Monomial::from_powers(nvars, &powers)
    }
}

/// Graded lex: higher total degree is greater; within a degree, the larger
/// exponent on the earliest differing variable is greater.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            write!(f, "x{}^{}", i + 1, e)?;
            first = false;
        }
        Ok(())
    }
}

/// Polynomial in `x1..x_nvars`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::term(Monomial::one(nvars), Scalar::one())
    }

    pub fn term(monomial: Monomial, coeff: Scalar) -> Self {
        let mut p = Polynomial::zero(monomial.nvars());
        p.add_term(monomial, coeff);
        p
    }

    /// The coordinate function `x_var`, 1-based.
    pub fn variable(nvars: usize, var: usize) -> Result<Self> {
        Ok(Polynomial::term(Monomial::from_powers(nvars, &[(var, 1)])?, Scalar::one()))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> Scalar {
        self.terms.get(monomial).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: Scalar) {
        assert_eq!(monomial.nvars(), self.nvars, "monomial over a different variable count");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// `(τ·f)(x) = f(τ⁻¹·x)`.
    pub fn act(&self, tau: &PairAction) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.act(tau), c.clone());
        }
        out
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: point.len() });
        }
        Ok(self.terms.iter().fold(Scalar::zero(), |acc, (m, c)| acc + c * m.evaluate(point)))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.is_zero() {
            out.push_str("0\n");
            return out;
        }
        for (m, c) in self.terms() {
            if m.is_one() {
                out.push_str(&format!("{c}\n"));
            } else {
                out.push_str(&format!("{c} * {m}\n"));
            }
        }
        out
    }

    /// Inverse of [`Polynomial::to_text`]; repeated monomials are summed.
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let mut p = Polynomial::zero(nvars);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (coeff, mono) = match line.split_once('*') {
                Some((c, m)) => (c, Monomial::parse(m, nvars)?),
                None => (line, Monomial::one(nvars)),
            };
            let coeff = parse_scalar(coeff, LiteralSyntax::default())
                .map_err(|_| Error::Polynomial(format!("bad coefficient in {line:?}")))?;
            p.add_term(mono, coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::new(n.into(), d.into())
    }

    #[test]
    fn grlex_order() {
        let x1x6 = Monomial::from_powers(6, &[(1, 1), (6, 1)]).unwrap();
        let x2x5 = Monomial::from_powers(6, &[(2, 1), (5, 1)]).unwrap();
        let x1 = Monomial::from_powers(6, &[(1, 1)]).unwrap();
        let x6sq = Monomial::from_powers(6, &[(6, 2)]).unwrap();
        assert!(x1x6 > x2x5);
        assert!(x6sq > x1);
        assert!(x1 > Monomial::one(6));
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = Polynomial::variable(3, 1).unwrap();
        assert!((&x - &x).is_zero());
        assert_eq!((&x - &x).to_text(), "0\n");
    }

    #[test]
    fn text_round_trip() {
        let text = "1/3 * x1^1 x6^1\n1/3 * x2^1 x5^1\n1/3 * x3^1 x4^1\n";
        let p = Polynomial::parse(text, 6).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.to_text(), text);
        let with_const = Polynomial::parse("-2\n5/2 * x2^3", 3).unwrap();
        assert_eq!(with_const.to_text(), "5/2 * x2^3\n-2\n");
    }

    #[test]
    fn monomial_parsing() {
        let m = Monomial::parse("x1^2*x2", 6).unwrap();
        assert_eq!(m.exponents(), &[2, 1, 0, 0, 0, 0]);
        assert_eq!(Monomial::parse("x1^2 x2", 6).unwrap(), m);
        assert!(Monomial::parse("1", 6).unwrap().is_one());
        assert!(Monomial::parse("x7", 6).is_err());
        assert!(Monomial::parse("y1", 6).is_err());
        assert!(Monomial::parse("", 6).is_err());
        assert!(Monomial::parse("x1^-1", 6).is_err());
    }

    #[test]
    fn evaluation_and_product() {
        let x1 = Polynomial::variable(2, 1).unwrap();
        let x2 = Polynomial::variable(2, 2).unwrap();
        let p = &(&x1 + &x2) * &(&x1 - &x2);
        let point = [q(3, 1), q(1, 2)];
        assert_eq!(p.evaluate(&point).unwrap(), q(35, 4));
        assert!(p.evaluate(&point[..1]).is_err());
        assert_eq!(Polynomial::one(4).evaluate(&vec![q(7, 1); 4]).unwrap(), q(1, 1));
    }
}
