#![allow(dead_code)]

use gpoisson::calculus;
use gpoisson::catalog;
use gpoisson::solver;
use gpoisson::{rat, Derivation, PoissonStructure, Poly, Rational, WeightedGrading};
use proptest::prelude::*;

/// Rational with small numerator and denominator.
pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..7, 1i64..4).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..7, 1i64..4, any::<bool>()).prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

/// Arbitrary polynomial in `arity` variables with up to `terms` terms.
pub fn poly(arity: usize, max_exp: u32, terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, arity), small_rational()),
        0..=terms,
    )
    .prop_map(move |ts| Poly::from_terms(arity, ts))
}

/// Homogeneous polynomial of degree `d` for `g` (possibly zero).
pub fn homogeneous(g: WeightedGrading, d: i64) -> impl Strategy<Value = Poly> {
    let basis = g.monomial_basis(d).unwrap();
    let n = g.arity();
    let len = basis.len();
    prop::collection::vec(small_rational(), len)
        .prop_map(move |cs| Poly::from_terms(n, basis.iter().cloned().zip(cs)))
}

/// Linear combination of the given derivations with the given coefficients.
pub fn combine(basis: &[Derivation], coeffs: &[Rational]) -> Derivation {
    let mut acc = Derivation::zero(basis[0].grading().clone(), basis[0].degree());
    for (b, c) in basis.iter().zip(coeffs) {
        acc = acc.add(&b.scale(c)).unwrap();
    }
    acc
}

/// Names of the quadratic entries on k[x,y,z] with default parameters,
/// plus the second Hesse member.
pub fn quadratic_entries() -> Vec<(String, PoissonStructure)> {
    let mut out: Vec<(String, PoissonStructure)> = catalog::QUADRATIC_NORMAL_FORMS
        .iter()
        .map(|n| (n.to_string(), catalog::get(n, &[]).unwrap().structure))
        .collect();
    out.push((
        "hesse(lambda=1)".into(),
        catalog::get("hesse", &[("lambda".into(), "1".into())])
            .unwrap()
            .structure,
    ));
    out
}

pub fn entry(name: &str) -> PoissonStructure {
    catalog::get(name, &[]).unwrap().structure
}

/// A random Poisson derivation of degree 0 built from the solved basis.
pub fn random_poisson_derivation(s: &PoissonStructure, coeffs: &[Rational]) -> Derivation {
    let basis = solver::poisson_derivation_basis(s, 0).unwrap();
    let d = combine(&basis, coeffs);
    assert!(calculus::is_poisson_derivation(s, &d).unwrap());
    d
}

pub fn random_semi_poisson_derivation(s: &PoissonStructure, coeffs: &[Rational]) -> Derivation {
    let basis = solver::semi_poisson_basis(s, 0).unwrap();
    let d = combine(&basis, coeffs);
    assert!(calculus::is_semi_poisson(s, &d).unwrap());
    d
}
