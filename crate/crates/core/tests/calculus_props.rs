mod common;

use common::{
    homogeneous, nonzero_rational, quadratic_entries, random_poisson_derivation,
    random_semi_poisson_derivation, small_rational,
};
use gpoisson::{calculus, catalog, solver, Derivation, PoissonStructure, WeightedGrading};
use proptest::prelude::*;

fn structures() -> Vec<PoissonStructure> {
    let mut v: Vec<PoissonStructure> = quadratic_entries().into_iter().map(|(_, s)| s).collect();
    v.push(common::entry("sextic_weighted"));
    v.push(common::entry("rank1"));
    v.push(common::entry("ex2_6"));
    v.push(
        catalog::get("log_canonical", &[("p_1_3".into(), "2".into())])
            .unwrap()
            .structure,
    );
    v
}

const COUNT: usize = 15;

fn coeffs() -> impl Strategy<Value = Vec<gpoisson::Rational>> {
    prop::collection::vec(small_rational(), 12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hamiltonian_divergence_is_minus_modular(idx in 0usize..12, d in 0i64..4, seed in coeffs()) {
        let s = &structures()[idx];
        let g = s.grading().clone();
        let basis = g.monomial_basis(d).unwrap();
        let a = gpoisson::Poly::from_terms(g.arity(), basis.into_iter().zip(seed));
        let h = Derivation::hamiltonian(s, &a).unwrap();
        let m = Derivation::modular(s).unwrap();
        prop_assert_eq!(h.divergence(), -m.apply(&a).unwrap());
        prop_assert!(calculus::is_poisson_derivation(s, &h).unwrap());
    }

    #[test]
    fn poisson_derivations_are_semi_poisson(idx in 0..COUNT, c in coeffs()) {
        let s = &structures()[idx];
        let delta = random_poisson_derivation(s, &c);
        prop_assert!(calculus::is_semi_poisson(s, &delta).unwrap());
    }

    #[test]
    fn twist_is_poisson_and_invertible(idx in 0..COUNT, c in coeffs()) {
        let s = &structures()[idx];
        let delta = random_semi_poisson_derivation(s, &c);
        let t = calculus::twist(s, &delta).unwrap();
        prop_assert!(t.verify_graded() && t.verify_poisson());
        let back = calculus::twist(&t, &delta.neg()).unwrap();
        prop_assert_eq!(&back, s);
    }

    #[test]
    fn twists_compose(idx in 0..COUNT, c1 in coeffs(), c2 in coeffs()) {
        let s = &structures()[idx];
        let d1 = random_semi_poisson_derivation(s, &c1);
        let t = calculus::twist(s, &d1).unwrap();
        let d2 = random_semi_poisson_derivation(&t, &c2);
        let tt = calculus::twist(&t, &d2).unwrap();
        let direct = calculus::twist(s, &d1.add(&d2).unwrap()).unwrap();
        prop_assert_eq!(tt, direct);
    }

    #[test]
    fn twisted_modular_matches_prediction(idx in 0..COUNT, c in coeffs()) {
        let s = &structures()[idx];
        let delta = random_semi_poisson_derivation(s, &c);
        let t = calculus::twist(s, &delta).unwrap();
        let predicted = calculus::twist_modular_prediction(s, &delta).unwrap();
        prop_assert_eq!(Derivation::modular(&t).unwrap(), predicted);
    }

    #[test]
    fn unimodularization_decomposes(idx in 0..COUNT, c in coeffs()) {
        let s = &structures()[idx];
        let delta = random_semi_poisson_derivation(s, &c);
        let t = calculus::twist(s, &delta).unwrap();
        let (u, _) = calculus::unimodularize(&t).unwrap();
        prop_assert!(calculus::is_unimodular(&u).unwrap());
        prop_assert!(calculus::decomposition_holds(&t, &u).unwrap());
    }

    #[test]
    fn modular_is_divergence_free_and_poisson(idx in 0..COUNT, xi in nonzero_rational()) {
        let s = &structures()[idx];
        let m = Derivation::modular(s).unwrap();
        prop_assert!(m.divergence().is_zero());
        prop_assert!(calculus::is_poisson_derivation(s, &m).unwrap());
        let scaled = s.scale(&xi).unwrap();
        prop_assert_eq!(Derivation::modular(&scaled).unwrap(), m.scale(&xi));
    }

    #[test]
    fn commutators_of_poisson_derivations_stay_poisson(idx in 0..COUNT, c1 in coeffs(), c2 in coeffs()) {
        let s = &structures()[idx];
        let a = random_poisson_derivation(s, &c1);
        let b = random_poisson_derivation(s, &c2);
        let ab = a.commutator(&b).unwrap();
        prop_assert!(calculus::is_poisson_derivation(s, &ab).unwrap());
        prop_assert!(solver::in_span(&solver::poisson_derivation_basis(s, 0).unwrap(), &ab));
    }

    #[test]
    fn derivations_obey_leibniz(
        images in prop::collection::vec(homogeneous(WeightedGrading::standard(3), 2), 3),
        f in common::poly(3, 3, 4),
        h in common::poly(3, 3, 4),
    ) {
        let delta = Derivation::new(WeightedGrading::standard(3), images, 1).unwrap();
        let lhs = delta.apply(&(&f * &h)).unwrap();
        let rhs = &(&delta.apply(&f).unwrap() * &h) + &(&f * &delta.apply(&h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn euler_is_semi_poisson_but_twists_trivially() {
    for s in structures() {
        let e = Derivation::euler(s.grading());
        assert!(calculus::is_semi_poisson(&s, &e).unwrap());
        assert_eq!(calculus::twist(&s, &e).unwrap(), s);
    }
}
