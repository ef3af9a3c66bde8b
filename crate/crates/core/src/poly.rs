//! Sparse multivariate polynomials over ℚ and weighted gradings.
//!
//! A [`Poly`] stores a map from exponent vectors to nonzero rational
//! coefficients. Variables are addressed by 0-based index internally; the
//! textual grammar (see [`crate::parse`]) uses 1-based `xK` names.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

pub type Exponents = Vec<u32>;

/// Graded reverse lexicographic comparison on unweighted total degree.
/// `Greater` means `a` ranks before `b` in display order.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    da.cmp(&db).then_with(|| revlex_cmp(a, b))
}

/// Reverse lexicographic tie-break: the exponent vector whose last differing
/// entry is smaller ranks higher.
pub fn revlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Verdict of [`Poly::weighted_degree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Degree(i64),
    NonHomogeneous,
}

impl Homogeneity {
    pub fn degree(self) -> Option<i64> {
        match self {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }

    /// True when the polynomial is zero or homogeneous of degree `d`.
    pub fn admits(self, d: i64) -> bool {
        match self {
            Homogeneity::Zero => true,
            Homogeneity::Degree(e) => e == d,
            Homogeneity::NonHomogeneous => false,
        }
    }
}

impl fmt::Display for Homogeneity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Homogeneity::Zero => f.write_str("zero"),
            Homogeneity::Degree(d) => write!(f, "degree {d}"),
            Homogeneity::NonHomogeneous => f.write_str("non-homogeneous"),
        }
    }
}

/// Degrees of the variables. The total weight is always recomputed from the
/// weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedGrading {
    weights: Vec<i64>,
}

impl WeightedGrading {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightedGrading { weights }
    }

    /// All variables of degree one.
    pub fn standard(arity: usize) -> Self {
        WeightedGrading {
            weights: vec![1; arity],
        }
    }

    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.weights[i]
    }

    /// Sum of the weights.
    pub fn total(&self) -> i64 {
        self.weights.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.weights.iter().all(|&w| w > 0)
    }

    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn require_positive(&self) -> Result<()> {
        if self.is_positive() {
            Ok(())
        } else {
            Err(Error::NonPositiveWeights(self.weights.clone()))
        }
    }

    pub fn degree_of(&self, exps: &[u32]) -> i64 {
        exps.iter()
            .zip(&self.weights)
            .map(|(&e, &w)| i64::from(e) * w)
            .sum()
    }

    /// Exponent vectors of weighted degree exactly `d`, in grevlex order.
    pub fn monomial_basis(&self, d: i64) -> Result<Vec<Exponents>> {
        self.require_positive()?;
        if d < 0 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut current = vec![0u32; self.arity()];
        self.fill_basis(0, d, &mut current, &mut out);
        out.sort_by(|a, b| revlex_cmp(b, a));
        Ok(out)
    }

    fn fill_basis(&self, i: usize, rest: i64, current: &mut Exponents, out: &mut Vec<Exponents>) {
        if i == self.arity() {
            if rest == 0 {
                out.push(current.clone());
            }
            return;
        }
        let w = self.weights[i];
        let mut e = 0;
        while e * w <= rest {
            current[i] = e as u32;
            self.fill_basis(i + 1, rest - e * w, current, out);
            e += 1;
        }
        current[i] = 0;
    }

    /// `dim A_d`; zero for negative `d`.
    pub fn dim(&self, d: i64) -> Result<usize> {
        Ok(self.monomial_basis(d)?.len())
    }
}

/// Sparse polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    arity: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl Poly {
    pub fn zero(arity: usize) -> Self {
        Poly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::monomial(arity, vec![0; arity], c)
    }

    pub fn from_int(arity: usize, c: i64) -> Self {
        Self::constant(arity, Rational::from_integer(BigInt::from(c)))
    }

    /// The variable `x_{i+1}`.
    ///
    /// Panics if `i >= arity`.
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(
            i < arity,
            "variable index {i} out of range for arity {arity}"
        );
        let mut exps = vec![0; arity];
        exps[i] = 1;
        Self::monomial(arity, exps, Rational::one())
    }

    pub fn monomial(arity: usize, exps: Exponents, c: Rational) -> Self {
        assert_eq!(exps.len(), arity, "exponent vector length must equal arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly { arity, terms }
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, merging
    /// repeated monomials.
    pub fn from_terms<I>(arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut p = Poly::zero(arity);
        for (e, c) in terms {
            assert_eq!(e.len(), arity, "exponent vector length must equal arity");
            p.add_term(e, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    /// Terms in grevlex order, leading term first.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grevlex_cmp(b.0, a.0));
        v
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.arity])
    }

    /// Adds `c·x^e` in place.
    pub fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Poly) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            })
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let mut out = Poly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea
                    .iter()
                    .zip(eb)
                    .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                    .collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.arity);
        }
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Poly {
        self.scale(&Rational::from_integer(BigInt::from(c)))
    }

    /// Multiplies by the monomial `x^e`.
    pub fn mul_monomial(&self, exps: &[u32]) -> Poly {
        Poly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let shifted = e.iter().zip(exps).map(|(a, b)| a + b).collect();
                    (shifted, c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.arity);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Formal partial derivative with respect to the variable at index `i`.
    pub fn partial(&self, i: usize) -> Result<Poly> {
        if i >= self.arity {
            return Err(Error::IndexOutOfRange {
                index: i,
                arity: self.arity,
            });
        }
        let mut out = Poly::zero(self.arity);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.terms
                .insert(d, c * Rational::from_integer(BigInt::from(e[i])));
        }
        Ok(out)
    }

    /// Panicking variant of [`Poly::partial`] for internal use with
    /// indices already known to be in range.
    pub(crate) fn d(&self, i: usize) -> Poly {
        self.partial(i).expect("index in range")
    }

    pub fn weighted_degree(&self, grading: &WeightedGrading) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|e| grading.degree_of(e));
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degrees.all(|x| x == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::NonHomogeneous
                }
            }
        }
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn parse(text: &str, arity: usize) -> Result<Poly> {
        Ok(crate::parse::parse_poly(text, arity)?)
    }

    fn var_name(&self, i: usize) -> String {
        if self.arity <= 3 {
            ["x", "y", "z"][i].to_string()
        } else {
            format!("x{}", i + 1)
        }
    }
}

/// Formats a rational as `p` or `p/q` with `q > 0`.
pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        self.var_name(i)
                    } else {
                        format!("{}^{}", self.var_name(i), p)
                    }
                })
                .collect();
            if vars.is_empty() {
                f.write_str(&format_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.arity, self)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
